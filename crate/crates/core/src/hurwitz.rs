//! Hurwitz zeta ζ(s, x), its s-derivatives at 0, and the gamma family.
//!
//! ζ(s, x) is evaluated by Euler–Maclaurin summation:
//!
//! ```text
//! ζ(s,x) = Σ_{k<N} (x+k)^-s + (x+N)^(1-s)/(s-1) + (x+N)^-s / 2
//!        + Σ_{j=1}^{M} B_2j/(2j)! · (s)_(2j-1) · (x+N)^(-s-2j+1)
//! ```
//!
//! with `N ≈ max(0.7·W, 2|s|)` for `W` working digits and `M` grown until a
//! tail term drops below `10^-W`.
//!
//! Taylor coefficients of the entire function `ζ(s,x) - 1/(s-1)` are read off
//! by the trapezoid rule on a circle (a discrete Cauchy integral). One circle
//! serves every derivative order, so node values are cached per context.
//!
//! lnΓ and ψ use Stirling series after raising the argument, and do not touch
//! the zeta engine.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::precision::{bernoulli, PrecisionContext};
use crate::real::{BigComplex, BigReal};
use crate::trig::cos_sin_2pi;

/// Euler–Maclaurin truncation: direct-sum length and tail-term cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HurwitzParams {
    pub em_cutoff: usize,
    pub em_order: usize,
}

impl HurwitzParams {
    /// Default truncation for an argument of modulus `abs_s`.
    pub fn for_modulus(abs_s: f64, ctx: &PrecisionContext) -> Self {
        let w = f64::from(ctx.working_digits());
        let n = (0.7 * w).max(2.0 * abs_s).ceil() as usize;
        HurwitzParams {
            em_cutoff: n.max(1),
            em_order: 4 * ctx.working_digits() as usize + 50,
        }
    }
}

/// Trapezoid circle used to extract Taylor coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct CauchyRingParams {
    pub radius: BigReal,
    pub points: usize,
}

impl CauchyRingParams {
    pub fn new(radius: BigReal, points: usize) -> Result<Self> {
        if radius.is_negative() || radius.is_zero() || radius.to_f64() >= 1.0 {
            return Err(Error::Domain {
                function: "CauchyRingParams",
                reason: "radius must lie in (0, 1)",
            });
        }
        if points < 16 || points % 2 == 1 {
            return Err(Error::Domain {
                function: "CauchyRingParams",
                reason: "points must be even and at least 16",
            });
        }
        Ok(CauchyRingParams { radius, points })
    }

    /// Radius 1/2 and `4·W` nodes.
    pub fn default_for(ctx: &PrecisionContext) -> Self {
        let p = (4 * ctx.working_digits() as usize).max(16);
        CauchyRingParams {
            radius: ctx.ratio(1, 2),
            points: p + p % 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum RingCenter {
    Zero,
    One,
}

/// Node values of `ζ(s,x) - 1/(s-1)` on one circle.
#[derive(Clone)]
pub(crate) struct RingEntry {
    x: BigReal,
    center: RingCenter,
    radius: BigReal,
    values: Vec<BigComplex>,
}

fn check_x(x: &BigReal, function: &'static str) -> Result<()> {
    if !x.is_finite() || x.is_negative() || x.is_zero() {
        return Err(Error::Domain {
            function,
            reason: "x must be positive",
        });
    }
    Ok(())
}

fn em_coefficients(m: usize, ctx: &PrecisionContext) -> Vec<BigReal> {
    // B_2j / (2j)! for j = 1..=m
    let mut out = Vec::with_capacity(m);
    let mut fact = num_bigint::BigInt::from(1u32);
    let mut k = 0u64;
    for j in 1..=m {
        while k < 2 * j as u64 {
            k += 1;
            fact *= k;
        }
        let r = bernoulli(2 * j) / num_rational::BigRational::from_integer(fact.clone());
        out.push(ctx.rational(&r));
    }
    out
}

/// Tail coefficients are shared by every evaluation at this precision.
struct EmCoefficients {
    bits: usize,
    coeffs: Vec<BigReal>,
}

static EM_CACHE: spin::RwLock<Vec<EmCoefficients>> = spin::RwLock::new(Vec::new());

fn em_coefficient(j: usize, ctx: &PrecisionContext) -> BigReal {
    {
        let cache = EM_CACHE.read();
        if let Some(e) = cache.iter().find(|e| e.bits == ctx.bits()) {
            if let Some(c) = e.coeffs.get(j - 1) {
                return c.clone();
            }
        }
    }
    let want = (2 * j).max(64);
    let coeffs = em_coefficients(want, ctx);
    let c = coeffs[j - 1].clone();
    let mut cache = EM_CACHE.write();
    match cache.iter_mut().find(|e| e.bits == ctx.bits()) {
        Some(e) => {
            if e.coeffs.len() < coeffs.len() {
                e.coeffs = coeffs;
            }
        }
        None => cache.push(EmCoefficients { bits: ctx.bits(), coeffs }),
    }
    c
}

/// Logarithms `ln(x + k)` for `k < n`.
fn shifted_logs(x: &BigReal, n: usize) -> Vec<BigReal> {
    (0..n).map(|k| (x + BigReal::from_u64(k as u64, x.bits())).ln()).collect()
}

/// Euler–Maclaurin for complex `s`, given precomputed `ln(x+k)` for `k <= N`.
fn em_complex(s: &BigComplex, x: &BigReal, logs: &[BigReal], ctx: &PrecisionContext) -> Result<BigComplex> {
    let n = logs.len() - 1;
    let mut sum = BigComplex::zero(ctx.bits());
    for l in &logs[..n] {
        sum += &s.neg_pow_of(l);
    }
    let xn = x + ctx.int(n as i64);
    let ln_xn = &logs[n];
    let pow_neg_s = s.neg_pow_of(ln_xn);
    let s_minus_1 = s.add_real(&-ctx.one());
    // (x+N)^(1-s)/(s-1)
    sum += &(&pow_neg_s.scale(&xn) / &s_minus_1);
    sum += &pow_neg_s.scale(&ctx.ratio(1, 2));
    let inv_xn = xn.recip();
    let inv_xn2 = &inv_xn * &inv_xn;
    let eps = ctx.epsilon();
    let mut poch = s.clone();
    let mut pw = pow_neg_s.scale(&inv_xn);
    let cap = 4 * ctx.working_digits() as usize + 50;
    for j in 1..=cap {
        let term = (&poch * &pw).scale(&em_coefficient(j, ctx));
        sum += &term;
        let mag = term.re.abs() + term.im.abs();
        let scale = (sum.re.abs() + sum.im.abs()).max_one();
        if mag < &eps * &scale {
            return Ok(sum);
        }
        let a = s.add_real(&ctx.int(2 * j as i64 - 1));
        let b = s.add_real(&ctx.int(2 * j as i64));
        poch = &(&poch * &a) * &b;
        pw = pw.scale(&inv_xn2);
        if poch.re.is_zero() && poch.im.is_zero() {
            return Ok(sum);
        }
    }
    Err(Error::NotConverged {
        what: "Euler-Maclaurin tail",
    })
}

trait MaxOne {
    fn max_one(self) -> BigReal;
}

impl MaxOne for BigReal {
    fn max_one(self) -> BigReal {
        let one = BigReal::one(self.bits());
        if self > one {
            self
        } else {
            one
        }
    }
}

/// ζ(s, x) for complex `s ≠ 1` and real `x > 0`.
pub fn hurwitz_zeta(s: &BigComplex, x: &BigReal, ctx: &PrecisionContext) -> Result<BigComplex> {
    check_x(x, "hurwitz_zeta")?;
    let d = s.add_real(&-ctx.one()).abs();
    if d <= *ctx.tolerance() {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
        });
    }
    if s.im.is_zero() {
        return hurwitz_zeta_real(&s.re, x, ctx).map(BigComplex::from_real);
    }
    let params = HurwitzParams::for_modulus(s.abs().to_f64(), ctx);
    let logs = shifted_logs(x, params.em_cutoff + 1);
    em_complex(s, x, &logs, ctx)?.finite_complex("hurwitz_zeta")
}

trait FiniteComplex: Sized {
    fn finite_complex(self, what: &'static str) -> Result<Self>;
}

impl FiniteComplex for BigComplex {
    fn finite_complex(self, what: &'static str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite { what })
        }
    }
}

/// ζ(s, x) for real `s ≠ 1` and `x > 0`.
pub fn hurwitz_zeta_real(s: &BigReal, x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    check_x(x, "hurwitz_zeta")?;
    let s1 = s - &ctx.one();
    if s1.abs() <= *ctx.tolerance() {
        return Err(Error::Pole {
            function: "hurwitz_zeta",
        });
    }
    let params = HurwitzParams::for_modulus(s.abs().to_f64(), ctx);
    let n = params.em_cutoff;
    let pow = |base: &BigReal| (-(s * &base.ln())).exp();
    em_real(s, x, n, params.em_order, ctx, pow)
}

/// ζ(k, x) for integer `k >= 2`.
pub(crate) fn zeta_real_int(k: u32, x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    check_x(x, "zeta_int")?;
    let s = ctx.int(i64::from(k));
    let params = HurwitzParams::for_modulus(f64::from(k), ctx);
    let pow = |base: &BigReal| base.powi(-i64::from(k));
    em_real(&s, x, params.em_cutoff, params.em_order, ctx, pow)
}

fn em_real(
    s: &BigReal,
    x: &BigReal,
    n: usize,
    cap: usize,
    ctx: &PrecisionContext,
    pow: impl Fn(&BigReal) -> BigReal,
) -> Result<BigReal> {
    let x = x.clone().with_bits(ctx.bits());
    let mut sum = ctx.zero();
    for k in 0..n {
        sum += pow(&(&x + ctx.int(k as i64)));
    }
    let xn = &x + ctx.int(n as i64);
    let pow_neg_s = pow(&xn);
    let s1 = s - &ctx.one();
    sum += &(&pow_neg_s * &xn) / &s1;
    sum += &pow_neg_s / ctx.int(2);
    let inv_xn = xn.recip();
    let inv_xn2 = &inv_xn * &inv_xn;
    let eps = ctx.epsilon();
    let mut poch = s.clone();
    let mut pw = &pow_neg_s * &inv_xn;
    for j in 1..=cap {
        let term = &(&poch * &pw) * &em_coefficient(j, ctx);
        sum += &term;
        if term.abs() < &eps * &sum.abs().max_one() {
            return sum.finite("hurwitz_zeta");
        }
        poch = &(&poch * &(s + ctx.int(2 * j as i64 - 1))) * &(s + ctx.int(2 * j as i64));
        if poch.is_zero() {
            return sum.finite("hurwitz_zeta");
        }
        pw = &pw * &inv_xn2;
    }
    Err(Error::NotConverged {
        what: "Euler-Maclaurin tail",
    })
}

/// Node values of `ζ(s,x) - 1/(s-1)` on the circle, computed once per
/// `(x, center, radius, points)` and context.
fn ring_values(
    x: &BigReal,
    center: RingCenter,
    ring: &CauchyRingParams,
    ctx: &PrecisionContext,
) -> Result<Vec<BigComplex>> {
    {
        let caches = ctx.caches.lock();
        if let Some(e) = caches.rings.iter().find(|e| {
            e.center == center && e.values.len() == ring.points && e.radius == ring.radius && e.x == *x
        }) {
            return Ok(e.values.clone());
        }
    }
    let c = match center {
        RingCenter::Zero => ctx.zero(),
        RingCenter::One => ctx.one(),
    };
    let params = HurwitzParams::for_modulus(c.to_f64() + ring.radius.to_f64(), ctx);
    let x = x.clone().with_bits(ctx.bits());
    let logs = shifted_logs(&x, params.em_cutoff + 1);
    let p = ring.points as u64;
    let mut values = Vec::with_capacity(ring.points);
    for k in 0..ring.points {
        let (co, si) = cos_sin_2pi(k as i64, p, ctx);
        let s = BigComplex::new(&c + &(&ring.radius * &co), &ring.radius * &si);
        let z = em_complex(&s, &x, &logs, ctx)?;
        // 1/(s-1) = conj(s-1)/|s-1|^2
        let pole = s.add_real(&-ctx.one()).recip();
        values.push((&z - &pole).finite_complex("Cauchy ring")?);
    }
    ctx.caches.lock().rings.push(RingEntry {
        x,
        center,
        radius: ring.radius.clone(),
        values: values.clone(),
    });
    Ok(values)
}

/// Taylor coefficients `a_0..=a_jmax` of `ζ(s,x) - 1/(s-1)` about the centre,
/// each with its imaginary residue checked against the tolerance after
/// multiplication by `j!`.
fn ring_coefficients(
    jmax: usize,
    x: &BigReal,
    center: RingCenter,
    ring: &CauchyRingParams,
    ctx: &PrecisionContext,
) -> Result<Vec<BigReal>> {
    let values = ring_values(x, center, ring, ctx)?;
    let p = values.len() as u64;
    let inv_p = ctx.one().div_int(p as i64);
    let inv_r = ring.radius.recip();
    let mut out = Vec::with_capacity(jmax + 1);
    let mut rpow = ctx.one();
    let mut fact = ctx.one();
    for j in 0..=jmax {
        if j > 0 {
            fact = fact.mul_int(j as i64);
        }
        let mut acc = BigComplex::zero(ctx.bits());
        for (k, v) in values.iter().enumerate() {
            let (co, si) = cos_sin_2pi(-((j as i64 * k as i64) % p as i64), p, ctx);
            acc += &(v * &BigComplex::new(co, si));
        }
        let a = acc.scale(&(&inv_p * &rpow));
        let resid = (&a.im * &fact).abs();
        let scale = (&a.re * &fact).abs().max_one();
        if resid > ctx.tolerance() * &scale {
            return Err(Error::ImaginaryResidue {
                order: j as u32,
                residue: resid.to_sci(6),
            });
        }
        out.push(a.re);
        rpow = &rpow * &inv_r;
    }
    Ok(out)
}

/// `ζ^(j)(0, x)` for `j = 0..=jmax`.
pub fn zeta_derivs_at0(
    jmax: usize,
    x: &BigReal,
    ctx: &PrecisionContext,
    ring: &CauchyRingParams,
) -> Result<Vec<BigReal>> {
    check_x(x, "zeta_deriv_at0")?;
    let a = ring_coefficients(jmax, x, RingCenter::Zero, ring, ctx)?;
    let mut fact = ctx.one();
    let mut out = Vec::with_capacity(jmax + 1);
    for (j, aj) in a.into_iter().enumerate() {
        if j > 0 {
            fact = fact.mul_int(j as i64);
        }
        // 1/(s-1) = -Σ s^j, so the pole contributes j!·(-1) to the j-th derivative.
        out.push(&fact * &(aj - ctx.one()));
    }
    Ok(out)
}

/// `ζ^(j)(0, x)`, the j-th s-derivative at s = 0.
pub fn zeta_deriv_at0(j: usize, x: &BigReal, ctx: &PrecisionContext, ring: &CauchyRingParams) -> Result<BigReal> {
    Ok(zeta_derivs_at0(j, x, ctx, ring)?.pop().expect("non-empty"))
}

/// Taylor coefficients `c_0..=c_nmax` of `ζ(s,x) - 1/(s-1)` about s = 1.
pub(crate) fn laurent_coeffs_at1(
    nmax: usize,
    x: &BigReal,
    ctx: &PrecisionContext,
    ring: &CauchyRingParams,
) -> Result<Vec<BigReal>> {
    check_x(x, "stieltjes_cauchy")?;
    ring_coefficients(nmax, x, RingCenter::One, ring, ctx)
}

/// Shift `x` upward by whole steps until it reaches `floor`; returns the
/// shifted value and the number of steps.
fn raise(x: &BigReal, floor: f64, ctx: &PrecisionContext) -> (BigReal, u64) {
    let xf = x.to_f64();
    let m = if xf < floor { (floor - xf).ceil() as u64 } else { 0 };
    (x + ctx.int(m as i64), m)
}

fn stirling_floor(ctx: &PrecisionContext) -> f64 {
    0.6 * f64::from(ctx.working_digits()) + 10.0
}

/// ln Γ(x) for `x > 0`.
pub fn log_gamma(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    check_x(x, "log_gamma")?;
    let x = x.clone().with_bits(ctx.bits());
    let (z, m) = raise(&x, stirling_floor(ctx), ctx);
    let mut prod = ctx.one();
    for k in 0..m {
        prod = &prod * &(&x + ctx.int(k as i64));
    }
    let half = ctx.ratio(1, 2);
    let mut s = &(&(&z - &half) * &z.ln()) - &z;
    s += &(&half * &ctx.log2pi());
    let inv = z.recip();
    let inv2 = &inv * &inv;
    let mut pw = inv.clone();
    let eps = ctx.epsilon();
    let cap = 4 * ctx.working_digits() as usize + 50;
    let mut converged = false;
    for j in 1..=cap {
        let b = ctx.rational(&bernoulli(2 * j));
        let term = &(&b * &pw) / ctx.int((2 * j * (2 * j - 1)) as i64);
        s += &term;
        if term.abs() < eps {
            converged = true;
            break;
        }
        pw = &pw * &inv2;
    }
    if !converged {
        return Err(Error::NotConverged { what: "Stirling series" });
    }
    (s - prod.ln()).finite("log_gamma")
}

/// Digamma ψ(x) for `x > 0`.
pub fn digamma(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    check_x(x, "digamma")?;
    let x = x.clone().with_bits(ctx.bits());
    let (z, m) = raise(&x, stirling_floor(ctx), ctx);
    let inv = z.recip();
    let mut s = &z.ln() - &(&inv / ctx.int(2));
    let inv2 = &inv * &inv;
    let mut pw = inv2.clone();
    let eps = ctx.epsilon();
    let cap = 4 * ctx.working_digits() as usize + 50;
    let mut converged = false;
    for j in 1..=cap {
        let b = ctx.rational(&bernoulli(2 * j));
        let term = &(&b * &pw) / ctx.int(2 * j as i64);
        s -= &term;
        if term.abs() < eps {
            converged = true;
            break;
        }
        pw = &pw * &inv2;
    }
    if !converged {
        return Err(Error::NotConverged { what: "digamma series" });
    }
    for k in 0..m {
        s -= (&x + ctx.int(k as i64)).recip();
    }
    s.finite("digamma")
}

/// Polygamma ψ^(p)(x) = (-1)^(p+1) p! ζ(p+1, x) for `p >= 1`.
pub fn polygamma(p: u32, x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    if p == 0 {
        return digamma(x, ctx);
    }
    check_x(x, "polygamma")?;
    let z = zeta_real_int(p + 1, x, ctx)?;
    let fact = (1..=i64::from(p)).fold(ctx.one(), |a, k| a.mul_int(k));
    let v = &fact * &z;
    Ok(if p % 2 == 1 { v } else { -v })
}

/// Γ(x) for real `x` that is not a non-positive integer.
pub fn gamma_real(x: &BigReal, ctx: &PrecisionContext) -> Result<BigReal> {
    if !x.is_negative() && !x.is_zero() {
        return Ok(log_gamma(x, ctx)?.exp());
    }
    let (z, m) = raise(x, 1.0, ctx);
    let mut prod = ctx.one();
    for k in 0..m {
        let f = x + ctx.int(k as i64);
        if f.abs() <= *ctx.tolerance() {
            return Err(Error::Pole { function: "gamma" });
        }
        prod = &prod * &f;
    }
    Ok(log_gamma(&z, ctx)?.exp() / prod)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::make_context;

    fn close(a: &BigReal, b: &BigReal, ctx: &PrecisionContext) -> bool {
        (a - b).abs() < *ctx.tolerance()
    }

    #[test]
    fn zeta_at_zero_is_linear() {
        let ctx = make_context(30).unwrap();
        for p in 1..7 {
            let x = ctx.ratio(p, 7);
            let z = hurwitz_zeta_real(&ctx.zero(), &x, &ctx).unwrap();
            assert!(close(&(&z + &x), &ctx.ratio(1, 2), &ctx));
        }
        let z = hurwitz_zeta(&BigComplex::zero(ctx.bits()), &ctx.ratio(1, 4), &ctx).unwrap();
        assert!(close(&z.re, &ctx.ratio(1, 4), &ctx));
    }

    #[test]
    fn zeta_two_and_minus_one() {
        let ctx = make_context(30).unwrap();
        let pi = ctx.pi();
        let z2 = hurwitz_zeta_real(&ctx.int(2), &ctx.one(), &ctx).unwrap();
        assert!(close(&z2, &(&pi * &pi).div_int(6), &ctx));
        assert_eq!(ctx.fmt(&z2), "1.64493406684822643647241516665e+00");
        let zm1 = hurwitz_zeta_real(&ctx.int(-1), &ctx.ratio(1, 3), &ctx).unwrap();
        assert!(close(&zm1, &ctx.ratio(1, 36), &ctx));
        let z3 = make_context(20).unwrap();
        assert_eq!(z3.fmt(&z3.zeta_int(3).unwrap()), "1.2020569031595942854e+00");
    }

    #[test]
    fn even_zeta_closed_form() {
        let ctx = make_context(40).unwrap();
        let pi = ctx.pi();
        // ζ(4) = π^4/90, ζ(6) = π^6/945
        assert!(close(&ctx.zeta_int(4).unwrap(), &pi.powi(4).div_int(90), &ctx));
        assert!(close(&ctx.zeta_int(6).unwrap(), &pi.powi(6).div_int(945), &ctx));
    }

    #[test]
    fn pole_and_domain() {
        let ctx = make_context(20).unwrap();
        assert!(matches!(
            hurwitz_zeta_real(&ctx.one(), &ctx.one(), &ctx),
            Err(Error::Pole { .. })
        ));
        assert!(matches!(
            hurwitz_zeta_real(&ctx.int(2), &ctx.zero(), &ctx),
            Err(Error::Domain { .. })
        ));
        assert!(log_gamma(&ctx.int(-1), &ctx).is_err());
    }

    #[test]
    fn complex_matches_real_path() {
        let ctx = make_context(30).unwrap();
        let x = ctx.ratio(2, 5);
        let s = BigComplex::new(ctx.ratio(5, 2), ctx.ratio(1, 1000000));
        let zc = hurwitz_zeta(&s, &x, &ctx).unwrap();
        let zr = hurwitz_zeta_real(&ctx.ratio(5, 2), &x, &ctx).unwrap();
        assert!((&zc.re - &zr).abs().to_f64() < 1e-10);
    }

    #[test]
    fn recurrence_in_x_complex() {
        let ctx = make_context(25).unwrap();
        let x = ctx.ratio(3, 10);
        let s = BigComplex::new(ctx.ratio(-3, 2), ctx.ratio(7, 3));
        let a = hurwitz_zeta(&s, &x, &ctx).unwrap();
        let b = hurwitz_zeta(&s, &(&x + &ctx.one()), &ctx).unwrap();
        let d = &(&a - &b) - &s.neg_pow_of(&x.ln());
        assert!(d.abs() < *ctx.tolerance());
    }

    #[test]
    fn derivatives_at_zero() {
        let ctx = make_context(30).unwrap();
        let ring = CauchyRingParams::default_for(&ctx);
        let d = zeta_derivs_at0(1, &ctx.one(), &ctx, &ring).unwrap();
        assert!(close(&d[0], &ctx.ratio(-1, 2), &ctx));
        assert!(close(&d[1], &(-ctx.log2pi() / ctx.int(2)), &ctx));
        let h = zeta_deriv_at0(1, &ctx.ratio(1, 2), &ctx, &ring).unwrap();
        assert!(close(&h, &(-(ctx.int(2).ln() / ctx.int(2))), &ctx));
        let x = ctx.ratio(1, 3);
        let lerch = &log_gamma(&x, &ctx).unwrap() - &(ctx.log2pi() / ctx.int(2));
        let z1 = zeta_deriv_at0(1, &x, &ctx, &ring).unwrap();
        assert!(close(&z1, &lerch, &ctx));
        let z0 = zeta_deriv_at0(0, &x, &ctx, &ring).unwrap();
        assert!(close(&z0, &ctx.ratio(1, 6), &ctx));
    }

    #[test]
    fn ring_doubling_is_stable() {
        let ctx = make_context(20).unwrap();
        let x = ctx.ratio(2, 3);
        let r1 = CauchyRingParams::default_for(&ctx);
        let r2 = CauchyRingParams::new(r1.radius.clone(), 2 * r1.points).unwrap();
        let a = zeta_derivs_at0(3, &x, &ctx, &r1).unwrap();
        let b = zeta_derivs_at0(3, &x, &ctx, &r2).unwrap();
        for (u, v) in a.iter().zip(&b) {
            assert!(close(u, v, &ctx));
        }
    }

    #[test]
    fn ring_params_validation() {
        let ctx = make_context(10).unwrap();
        assert!(CauchyRingParams::new(ctx.ratio(1, 2), 15).is_err());
        assert!(CauchyRingParams::new(ctx.ratio(1, 2), 8).is_err());
        assert!(CauchyRingParams::new(ctx.one(), 32).is_err());
        assert!(CauchyRingParams::new(ctx.ratio(1, 3), 32).is_ok());
    }

    #[test]
    fn gamma_family() {
        let ctx = make_context(30).unwrap();
        assert!(log_gamma(&ctx.one(), &ctx).unwrap().abs() < *ctx.tolerance());
        let lg = log_gamma(&ctx.ratio(1, 2), &ctx).unwrap();
        assert!(close(&lg, &(ctx.pi().ln() / ctx.int(2)), &ctx));
        let g = ctx.euler_gamma();
        assert!(close(&digamma(&ctx.one(), &ctx).unwrap(), &(-&g), &ctx));
        let four = ctx.int(4).ln();
        assert!(close(&digamma(&ctx.ratio(1, 2), &ctx).unwrap(), &(-&g - &four), &ctx));
        assert!(close(&digamma(&ctx.int(2), &ctx).unwrap(), &(ctx.one() - &g), &ctx));
        let z2 = ctx.zeta_int(2).unwrap();
        let z3 = ctx.zeta_int(3).unwrap();
        assert!(close(&polygamma(1, &ctx.one(), &ctx).unwrap(), &z2, &ctx));
        assert!(close(&polygamma(2, &ctx.one(), &ctx).unwrap(), &(-z3.mul_int(2)), &ctx));
        let pi = ctx.pi();
        assert!(close(&polygamma(1, &ctx.ratio(1, 2), &ctx).unwrap(), &(&pi * &pi).div_int(2), &ctx));
        // Γ(-1/2) = -2√π
        let gm = gamma_real(&ctx.ratio(-1, 2), &ctx).unwrap();
        assert!(close(&gm, &(-pi.sqrt().mul_int(2)), &ctx));
        assert!(gamma_real(&ctx.int(-2), &ctx).is_err());
    }
}
