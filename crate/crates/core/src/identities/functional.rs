//! Functional equations, multiplication theorems and series identities for
//! ζ(s, x) and its s-derivatives.

use alloc::vec::Vec;

use super::{need, rational_pq, Env, Frac, IdentityParams};
use crate::error::{Error, Result};
use crate::hurwitz::{gamma_real, hurwitz_zeta_real, log_gamma};
use crate::oracle::{default_j_max, hasse_double_sum};
use crate::quad::integrate_adaptive;
use crate::rational::stieltjes_at_one;
use crate::real::BigReal;
use crate::trig::{cos_pi, cos_sin_2pi, cot_pi, sin_pi};

type Sides = Result<(BigReal, BigReal)>;

fn positive(x: Frac, function: &'static str) -> Result<Frac> {
    if x.num <= 0 {
        return Err(Error::Domain {
            function,
            reason: "x must be positive",
        });
    }
    Ok(x)
}

fn is_integer(s: Frac) -> bool {
    s.den == 1
}

/// `(sin πs/2, cos πs/2)`.
fn half_turn(s: Frac, env: &Env<'_>) -> (BigReal, BigReal) {
    (sin_pi(s.num, 2 * s.den, env.ctx), cos_pi(s.num, 2 * s.den, env.ctx))
}

pub(super) fn rademacher(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "rademacher";
    let (p, q) = rational_pq(params, NAME, false)?;
    let s = need(params.s, NAME, "s")?;
    if is_integer(s) && s.num >= 0 {
        return Err(Error::Domain {
            function: NAME,
            reason: "s must not be 0 or a positive integer",
        });
    }
    let ctx = env.ctx;
    let sr = s.to_real(ctx);
    let one_minus_s = &ctx.one() - &sr;
    let lhs = hurwitz_zeta_real(&sr, &ctx.ratio(p as i64, q as i64), ctx)?;
    let (sh, ch) = half_turn(s, env);
    let mut sum = ctx.zero();
    for j in 1..=q {
        let (c, si) = cos_sin_2pi((j * p) as i64, q, ctx);
        let w = &(&sh * &c) + &(&ch * &si);
        if w.is_zero() {
            continue;
        }
        sum += &(&w * &hurwitz_zeta_real(&one_minus_s, &ctx.ratio(j as i64, q as i64), ctx)?);
    }
    let l2pq = &ctx.log2pi() + &env.ln_int(q);
    let pref = gamma_real(&one_minus_s, ctx)?.mul_int(2) * (&(&sr - &ctx.one()) * &l2pq).exp();
    Ok((lhs, &pref * &sum))
}

pub(super) fn rademacher_reflected(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "rademacher-reflected";
    let (p, q) = rational_pq(params, NAME, false)?;
    let s = need(params.s, NAME, "s")?;
    if is_integer(s) && s.num <= 1 {
        return Err(Error::Domain {
            function: NAME,
            reason: "s must not be 1 or a non-positive integer",
        });
    }
    let ctx = env.ctx;
    let sr = s.to_real(ctx);
    let lhs = hurwitz_zeta_real(&(&ctx.one() - &sr), &ctx.ratio(p as i64, q as i64), ctx)?;
    let (sh, ch) = half_turn(s, env);
    let mut sum = ctx.zero();
    for j in 1..=q {
        let (c, si) = cos_sin_2pi((j * p) as i64, q, ctx);
        let w = &(&ch * &c) + &(&sh * &si);
        if w.is_zero() {
            continue;
        }
        sum += &(&w * &hurwitz_zeta_real(&sr, &ctx.ratio(j as i64, q as i64), ctx)?);
    }
    let l2pq = &ctx.log2pi() + &env.ln_int(q);
    let pref = gamma_real(&sr, ctx)?.mul_int(2) * (-(&sr * &l2pq)).exp();
    Ok((lhs, &pref * &sum))
}

/// Richardson-extrapolated central differences of `ζ^(n)(0, ·)` against the
/// Hasse series for its x-derivative.
pub(super) fn hasse_x_derivative(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "hasse-x-derivative";
    const LEVELS: usize = 8;
    let n = need(params.n, NAME, "n")?;
    let x = positive(need(params.x, NAME, "x")?, NAME)?;
    if n == 0 || n > crate::oracle::STIELTJES_INDEX_CAP {
        return Err(Error::Domain {
            function: NAME,
            reason: "n must lie in 1..=8",
        });
    }
    let ctx = env.ctx;
    let xr = x.to_real(ctx);
    let nn = n as usize;
    let f = |t: &BigReal| -> Result<BigReal> { Ok(env.zeta_derivs(nn, t)?.pop().expect("non-empty")) };
    let mut h = xr.div_int(32);
    let mut table: Vec<Vec<BigReal>> = Vec::with_capacity(LEVELS);
    for level in 0..LEVELS {
        let d = (f(&(&xr + &h))? - f(&(&xr - &h))?) / h.mul_int(2);
        let mut row = alloc::vec![d];
        let mut factor = 1i64;
        for j in 1..=level {
            factor *= 4;
            let prev = &table[level - 1][j - 1];
            let next = &row[j - 1] + &(&(&row[j - 1] - prev) / ctx.int(factor - 1));
            row.push(next);
        }
        table.push(row);
        h = h.div_int(2);
    }
    let lhs = table[LEVELS - 1][LEVELS - 1].clone();
    let (s, _) = hasse_double_sum(n, &xr, ctx, default_j_max(ctx))?;
    let rhs = if n % 2 == 1 { s } else { -s };
    Ok((lhs, rhs))
}

pub(super) fn stieltjes_integral(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "stieltjes-integral";
    let n = need(params.n, NAME, "n")?;
    let x = positive(need(params.x, NAME, "x")?, NAME)?;
    if n >= crate::oracle::STIELTJES_INDEX_CAP {
        return Err(Error::Domain {
            function: NAME,
            reason: "n must lie in 0..=7",
        });
    }
    let ctx = env.ctx;
    let xr = x.to_real(ctx);
    let tol = &super::identity_tolerance(ctx) / ctx.int(100);
    let (lhs, _) = integrate_adaptive(&mut |t: &BigReal| env.stieltjes(n, t), &ctx.one(), &xr, &tol, ctx)?;
    let m = n as usize + 1;
    let at_x = env.zeta_derivs(m, &xr)?.pop().expect("non-empty");
    let at_one = env.zeta_derivs(m, &ctx.one())?.pop().expect("non-empty");
    let rhs = (at_x - at_one).div_int(m as i64);
    Ok((lhs, if m % 2 == 0 { rhs } else { -rhs }))
}

fn modulus(params: &IdentityParams, name: &'static str) -> Result<u64> {
    let q = need(params.q, name, "q")?;
    if q == 0 {
        return Err(Error::Domain {
            function: name,
            reason: "q must be positive",
        });
    }
    Ok(q)
}

/// `(r + x)/q` as an exact fraction.
fn shifted(r: u64, x: Frac, q: u64) -> (i64, u64) {
    (r as i64 * x.den as i64 + x.num, x.den * q)
}

pub(super) fn kubert(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "kubert";
    let s = need(params.s, NAME, "s")?;
    let x = positive(need(params.x, NAME, "x")?, NAME)?;
    let q = modulus(params, NAME)?;
    if s == Frac::new(1, 1) {
        return Err(Error::Pole { function: NAME });
    }
    let ctx = env.ctx;
    let sr = s.to_real(ctx);
    let lhs = (&sr * &env.ln_int(q)).exp() * hurwitz_zeta_real(&sr, &x.to_real(ctx), ctx)?;
    let mut rhs = ctx.zero();
    for r in 0..q {
        let (a, b) = shifted(r, x, q);
        rhs += &hurwitz_zeta_real(&sr, &ctx.ratio(a, b as i64), ctx)?;
    }
    Ok((lhs, rhs))
}

pub(super) fn zeta_dd_sum(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "zeta-dd-sum";
    let q = modulus(params, NAME)?;
    let ctx = env.ctx;
    let mut lhs = ctx.zero();
    for r in 1..q {
        lhs += &env.zd(2, r as i64, q)?;
    }
    let lq = env.ln_int(q);
    let rhs = -(&lq * &ctx.log2pi()) - (&lq * &lq).div_int(2);
    Ok((lhs, rhs))
}

pub(super) fn gauss_mult_gamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "gauss-mult-gamma";
    let x = positive(need(params.x, NAME, "x")?, NAME)?;
    let q = modulus(params, NAME)?;
    let ctx = env.ctx;
    let xr = x.to_real(ctx);
    let lhs = log_gamma(&xr, ctx)?;
    let mut rhs = ctx.zero();
    for r in 0..q {
        let (a, b) = shifted(r, x, q);
        rhs += &log_gamma(&ctx.ratio(a, b as i64), ctx)?;
    }
    rhs -= (&ctx.log2pi() * &ctx.int(q as i64 - 1)).div_int(2);
    rhs -= &(&ctx.ratio(1, 2) - &xr) * &env.ln_int(q);
    Ok((lhs, rhs))
}

pub(super) fn mult_zeta_dd(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "mult-zeta-dd";
    let x = positive(need(params.x, NAME, "x")?, NAME)?;
    let q = modulus(params, NAME)?;
    let ctx = env.ctx;
    let z = env.zeta_derivs(2, &x.to_real(ctx))?;
    let lq = env.ln_int(q);
    let lhs = &z[2] + &(&(&lq * &z[1]).mul_int(2) + &(&(&lq * &lq) * &z[0]));
    let mut rhs = ctx.zero();
    for r in 0..q {
        let (a, b) = shifted(r, x, q);
        rhs += &env.zd(2, a, b)?;
    }
    Ok((lhs, rhs))
}

pub(super) fn mult_zeta_dd_doubling(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "mult-zeta-dd-doubling";
    let x = positive(need(params.x, NAME, "x")?, NAME)?;
    let ctx = env.ctx;
    let lhs = env.zd(2, 2 * x.num, x.den)? - env.zd(2, x.num, x.den)? - env.zd(2, 2 * x.num + x.den as i64, 2 * x.den)?;
    let l2 = env.ln_int(2);
    let two_x = ctx.ratio(2 * x.num, x.den as i64);
    let lg = log_gamma(&two_x, ctx)? - ctx.log2pi().div_int(2);
    let rhs = -(&l2 * &lg).mul_int(2) - &(&l2 * &l2) * &(&ctx.ratio(1, 2) - &two_x);
    Ok((lhs, rhs))
}

/// `x` with `0 < x < 1/2`.
fn below_half(params: &IdentityParams, name: &'static str) -> Result<Frac> {
    let x = need(params.x, name, "x")?;
    if x.num <= 0 || 2 * x.num as u64 >= x.den {
        return Err(Error::Domain {
            function: name,
            reason: "x must lie in (0, 1/2)",
        });
    }
    Ok(x)
}

pub(super) fn func_eq_zdd(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "func-eq-zdd";
    let x = below_half(params, NAME)?;
    let (a, b) = (x.num, x.den);
    let bi = b as i64;
    let z = |num: i64, den: u64| env.zd(2, num, den);
    let lhs = z(2 * a + bi, 2 * b)? + z(bi - 2 * a, 2 * b)?;
    let two_sin = sin_pi(2 * a, b, env.ctx).mul_int(2);
    let rhs = z(2 * a, b)? + z(bi - 2 * a, b)? - z(a, b)? - z(bi - a, b)? - &env.ln_int(2).mul_int(2) * &two_sin.ln();
    Ok((lhs, rhs))
}

pub(super) fn func_eq_gamma1(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "func-eq-gamma1";
    let x = below_half(params, NAME)?;
    let ctx = env.ctx;
    let (a, b) = (x.num, x.den);
    let bi = b as i64;
    let g = |num: i64, den: u64| env.stieltjes(1, &ctx.ratio(num, den as i64));
    let lhs = g(2 * a + bi, 2 * b)? - g(bi - 2 * a, 2 * b)?;
    let cot = cot_pi(2 * a, b, ctx)?;
    let rhs = (g(2 * a, b)? - g(bi - 2 * a, b)?).mul_int(2)
        - (g(a, b)? - g(bi - a, b)?)
        - &(&ctx.pi() * &env.ln_int(2)).mul_int(2) * &cot;
    Ok((lhs, rhs))
}

/// Compensated running sum.
#[derive(Default)]
struct Kahan {
    sum: f64,
    carry: f64,
}

impl Kahan {
    fn add(&mut self, v: f64) {
        let y = v - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

/// Partial sums of `Σ log n/n cos 2πnx` in double precision, Cesàro-averaged
/// over the last 1000 partial sums.
pub(super) fn ramanujan_cos_sum(env: &Env<'_>, params: &IdentityParams) -> Sides {
    const NAME: &str = "ramanujan-cos-sum";
    const WINDOW: u64 = 1000;
    let x = need(params.x, NAME, "x")?;
    let terms = need(params.terms, NAME, "terms")?;
    if x.num <= 0 || x.num as u64 >= x.den {
        return Err(Error::Domain {
            function: NAME,
            reason: "x must lie in (0, 1)",
        });
    }
    if terms < WINDOW {
        return Err(Error::Domain {
            function: NAME,
            reason: "terms must be at least 1000",
        });
    }
    let ctx = env.ctx;
    let (a, b) = (x.num, x.den);
    let cos_table: Vec<f64> = (0..b).map(|k| cos_sin_2pi(k as i64 * a, b, ctx).0.to_f64()).collect();
    let mut partial = Kahan::default();
    let mut average = Kahan::default();
    for n in 1..=terms {
        let nf = n as f64;
        partial.add(libm::log(nf) / nf * cos_table[(n % b) as usize]);
        if n > terms - WINDOW {
            average.add(partial.sum);
        }
    }
    let lhs = BigReal::from_f64(average.sum / WINDOW as f64, ctx.bits());
    let bi = b as i64;
    let zdd = env.zd(2, a, b)? + env.zd(2, bi - a, b)?;
    let rhs = zdd.div_int(2) + &(&ctx.euler_gamma() + &ctx.log2pi()) * &sin_pi(a, b, ctx).mul_int(2).ln();
    Ok((lhs, rhs))
}

pub(super) fn apostol_zeta_dd(env: &Env<'_>, _: &IdentityParams) -> Sides {
    let ctx = env.ctx;
    let lhs = env.zd(2, 1, 1)?;
    let g = ctx.euler_gamma();
    let pi = ctx.pi();
    let l2p = ctx.log2pi();
    let rhs = env.stieltjes(1, &ctx.one())? + (&g * &g).div_int(2) - (&pi * &pi).div_int(24) - (&l2p * &l2p).div_int(2);
    Ok((lhs, rhs))
}

pub(super) fn bell_gamma_at_one(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let n = need(params.n, "bell-gamma-at-one", "n")?;
    let lhs = stieltjes_at_one(n, env.ctx)?.value;
    let rhs = env.stieltjes(n, &env.ctx.one())?;
    Ok((lhs, rhs))
}
