//! Two independent reference computations of γ_n(x) for real `x > 0`.
//!
//! * **Hasse**: the double series
//!   `γ_n(x) = -1/(n+1) Σ_j 1/(j+1) Σ_k C(j,k) (-1)^k ln^(n+1)(x+k)`.
//!   Its terms decay only like a power of `j` whose exponent is `x`, so the
//!   series is summed at a shifted argument `y = x + K` and pulled back with
//!   `γ_n(x) = γ_n(y) + Σ_{k<K} ln^n(x+k)/(x+k)`. `K` is the smallest shift
//!   for which the estimated tail past `j_max` falls below `10^-W`. The inner
//!   alternating sums are forward differences `(-1)^j Δ^j F(0)`, taken from a
//!   difference table at `W + 0.4·j_max` digits to absorb their cancellation.
//! * **Cauchy**: the Laurent coefficient at `s = 1`,
//!   `γ_n(x) = (-1)^n n! [(s-1)^n] (ζ(s,x) - 1/(s-1))`, read off a trapezoid
//!   circle around `s = 1`.

use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::hurwitz::{laurent_coeffs_at1, CauchyRingParams};
use crate::identities::{IdentityParams, IdentityReport};
use crate::precision::PrecisionContext;
use crate::real::BigReal;

/// Largest supported Stieltjes index.
pub const STIELTJES_INDEX_CAP: u32 = 8;

/// Hard cap on the working digits of the Hasse difference table.
pub const HASSE_MAX_DIGITS: u64 = 6000;

/// Default truncation of the Hasse outer sum.
pub const DEFAULT_J_MAX: usize = 400;

/// The Laurent index `n` of γ_n, checked against [`STIELTJES_INDEX_CAP`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StieltjesIndex(u32);

impl StieltjesIndex {
    pub fn new(n: u32) -> Result<Self> {
        if n > STIELTJES_INDEX_CAP {
            return Err(Error::IndexCap {
                index: n,
                cap: STIELTJES_INDEX_CAP,
            });
        }
        Ok(StieltjesIndex(n))
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

/// How a [`StieltjesResult`] was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    Hasse,
    Cauchy,
    ClosedFormBell,
    ClosedFormCck,
    AtOne,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Hasse => "hasse",
            Method::Cauchy => "cauchy",
            Method::ClosedFormBell => "bell",
            Method::ClosedFormCck => "cck",
            Method::AtOne => "at-one",
        }
    }
}

impl core::fmt::Display for Method {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A computed constant with a heuristic error estimate.
#[derive(Clone, Debug)]
pub struct StieltjesResult {
    pub value: BigReal,
    pub err_estimate: BigReal,
    pub method: Method,
}

/// Default `j_max`: 400, or `4·target` above 100 target digits.
pub fn default_j_max(ctx: &PrecisionContext) -> usize {
    if ctx.target_digits() > 100 {
        DEFAULT_J_MAX.max(4 * ctx.target_digits() as usize)
    } else {
        DEFAULT_J_MAX
    }
}

fn ln_beta(a: f64, b: f64) -> f64 {
    libm::lgamma(a) + libm::lgamma(b) - libm::lgamma(a + b)
}

/// log10 of the estimated size of the whole tail `Σ_{j>=jmax}` of the double
/// series `Σ_j 1/(j+1) Σ_k C(j,k)(-1)^k ln^m(y+k)`.
fn log10_tail(m: u32, y: f64, jmax: usize) -> f64 {
    let j = jmax as f64;
    let mf = f64::from(m);
    let lnlog = if m > 1 { (mf - 1.0) * libm::log(libm::log(y + j).max(1.0)) } else { 0.0 };
    let term = libm::log(mf) + lnlog + ln_beta(y, j) - libm::log(j + 1.0);
    let tail = if y > 1.5 { term + libm::log((j + 1.0) / (y - 1.0) + 1.0) } else { f64::INFINITY };
    tail / core::f64::consts::LN_10
}

/// Shift `K` for which the tail past `jmax` is below `10^-digits`.
fn choose_shift(m: u32, x: f64, jmax: usize, digits: u32) -> Result<u64> {
    let target = -f64::from(digits);
    let mut k = 0u64;
    while log10_tail(m, x + k as f64, jmax) > target {
        k += 1;
        if k > 100_000 {
            return Err(Error::NotConverged { what: "Hasse shift" });
        }
    }
    Ok(k)
}

/// Value and error estimate of `Σ_{j<=jmax} 1/(j+1) Σ_k C(j,k)(-1)^k ln^m(x+k)`,
/// the x-derivative series of `ζ^(m)(0, x)` up to the sign `(-1)^(m+1)`.
pub fn hasse_double_sum(m: u32, x: &BigReal, ctx: &PrecisionContext, jmax: usize) -> Result<(BigReal, BigReal)> {
    if m == 0 {
        return Err(Error::Domain {
            function: "hasse_double_sum",
            reason: "power must be at least 1",
        });
    }
    if !x.is_finite() || x.is_negative() || x.is_zero() {
        return Err(Error::Domain {
            function: "stieltjes_hasse",
            reason: "x must be positive",
        });
    }
    if jmax < 10 {
        return Err(Error::Domain {
            function: "stieltjes_hasse",
            reason: "j_max must be at least 10",
        });
    }
    let w = ctx.working_digits();
    let xf = x.to_f64();
    let shift = choose_shift(m, xf, jmax, w + 2)?;
    let yf = xf + shift as f64;
    let fmax = f64::from(m) * libm::log10(libm::log(yf + jmax as f64).max(1.0));
    let required = u64::from(w) + (0.4 * jmax as f64).ceil() as u64 + fmax.max(0.0).ceil() as u64 + 5;
    if required > HASSE_MAX_DIGITS {
        return Err(Error::Cancellation {
            required_digits: required,
            cap_digits: HASSE_MAX_DIGITS,
        });
    }
    let hi = ctx.elevated(required as u32);
    let xh = x.clone().with_bits(hi.bits());
    let y = &xh + hi.int(shift as i64);
    let mut diffs: Vec<BigReal> = (0..=jmax)
        .map(|k| (&y + hi.int(k as i64)).ln().powi(i64::from(m)))
        .collect();
    let mut sum = hi.zero();
    for j in 0..=jmax {
        // diffs[0] now holds Δ^j F(0)
        let term = diffs[0].div_int(j as i64 + 1);
        if j % 2 == 0 {
            sum += &term;
        } else {
            sum -= &term;
        }
        let len = diffs.len() - j - 1;
        for i in 0..len {
            diffs[i] = &diffs[i + 1] - &diffs[i];
        }
    }
    // pull back from y to x: S_m(x) = S_m(y) - m Σ_{k<K} ln^(m-1)(x+k)/(x+k)
    let mut back = hi.zero();
    for k in 0..shift {
        let t = &xh + hi.int(k as i64);
        let l = if m > 1 { t.ln().powi(i64::from(m) - 1) } else { hi.one() };
        back += &l / &t;
    }
    let value = (sum - back.mul_int(i64::from(m))).with_bits(ctx.bits());
    let tail = libm::pow(10.0, log10_tail(m, yf, jmax));
    let round = libm::pow(2.0, jmax as f64) * libm::pow(10.0, fmax - f64::from(hi.working_digits()));
    let mut err = BigReal::from_f64(tail + round, ctx.bits());
    err += &ctx.epsilon() * &value.abs().mul_int(100);
    Ok((value.finite("stieltjes_hasse")?, err))
}

/// γ_n(x) from the Hasse double series truncated at `j_max`.
pub fn stieltjes_hasse(n: StieltjesIndex, x: &BigReal, ctx: &PrecisionContext, j_max: usize) -> Result<StieltjesResult> {
    let m = n.get() + 1;
    let (s, err) = hasse_double_sum(m, x, ctx, j_max)?;
    Ok(StieltjesResult {
        value: -(s.div_int(i64::from(m))),
        err_estimate: err.div_int(i64::from(m)),
        method: Method::Hasse,
    })
}

/// γ_n(x) from a trapezoid Cauchy integral around `s = 1`.
pub fn stieltjes_cauchy(
    n: StieltjesIndex,
    x: &BigReal,
    ctx: &PrecisionContext,
    ring: &CauchyRingParams,
) -> Result<StieltjesResult> {
    let nn = n.get() as usize;
    let c = laurent_coeffs_at1(nn, x, ctx, ring)?;
    Ok(cauchy_result(nn, &c[nn], ring, ctx))
}

/// γ_0(x), …, γ_nmax(x) from one Cauchy circle.
pub fn stieltjes_cauchy_all(
    nmax: StieltjesIndex,
    x: &BigReal,
    ctx: &PrecisionContext,
    ring: &CauchyRingParams,
) -> Result<Vec<StieltjesResult>> {
    let nn = nmax.get() as usize;
    let c = laurent_coeffs_at1(nn, x, ctx, ring)?;
    Ok(c.iter().enumerate().map(|(j, cj)| cauchy_result(j, cj, ring, ctx)).collect())
}

fn cauchy_result(n: usize, c: &BigReal, ring: &CauchyRingParams, ctx: &PrecisionContext) -> StieltjesResult {
    let fact = (1..=n as i64).fold(ctx.one(), |a, k| a.mul_int(k));
    let v = &fact * c;
    let value = if n % 2 == 1 { -v } else { v };
    // rounding in the node values is amplified by n!/r^n
    let amp = &fact * &ring.radius.powi(-(n as i64));
    let err = &(&amp * &ctx.epsilon()).mul_int(1000) + &(&ctx.epsilon() * &value.abs());
    StieltjesResult {
        value,
        err_estimate: err,
        method: Method::Cauchy,
    }
}

/// Compares the two oracles; passes when they agree within the sum of their
/// error estimates.
pub fn oracle_cross_check(n: StieltjesIndex, x: &BigReal, ctx: &PrecisionContext) -> Result<IdentityReport> {
    let h = stieltjes_hasse(n, x, ctx, default_j_max(ctx))?;
    let c = stieltjes_cauchy(n, x, ctx, &CauchyRingParams::default_for(ctx))?;
    let tol = &h.err_estimate + &c.err_estimate;
    let params = IdentityParams {
        n: Some(n.get()),
        x_decimal: Some(ctx.fmt(x)),
        ..IdentityParams::default()
    };
    Ok(IdentityReport::new(String::from("oracle-cross-check"), params, h.value, c.value, tol))
}
