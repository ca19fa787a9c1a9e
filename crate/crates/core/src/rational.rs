//! Closed forms for γ_m(p/q) at rational arguments.
//!
//! Two independent representations are provided. Both take the Stieltjes
//! index `m` and work internally with the derivative order `n = m + 1`.
//!
//! * **Bell form**:
//!   `n γ_{n-1}(p/q) = 2 Σ_{r=1}^{q} Σ_{i=0}^{n} C(n,i) [Y_i(g) cos(2πrp/q) + (π/2) i Y_{i-1}(h) sin(2πrp/q)] ζ^(n-i)(0, r/q)`,
//!   with the `G` and `H` argument vectors of [`crate::bell`].
//! * **Binomial-δ form**:
//!   `n γ_{n-1}(p/q) = 2(-1)^n Σ_l C(n,l) δ_{n-l} Σ_r K_l(p/q, r)`, where
//!   `-K_l = Σ_m C(l,m) R_{l-m}(r/q) (π/2)^m T_m(rp/q)`,
//!   `R_k(x) = (-1)^(k+1) ζ^(k)(0,x)`, `T_m` is `(-1)^(m/2) cos 2πx` for even
//!   `m` and `(-1)^((m+1)/2) sin 2πx` for odd `m`, and
//!   `δ_l = Σ_m (-1)^m C(l,m) Γ^(m)(1) log^(l-m)(2πq)`.
//!   `Γ^(m)(1) = Y_m(-γ, ψ'(1), …, ψ^(m-1)(1))`.
//!
//! Both forms read ζ^(j)(0, r/q) from the same table (cached Cauchy circles,
//! or lnΓ when only `j ≤ 1` is needed), so a disagreement between them
//! isolates a formula error from input noise.

use alloc::vec::Vec;

use crate::bell::{bell_args, complete_bell_sequence, BellKind};
use crate::error::{Error, Result};
use crate::hurwitz::{digamma, log_gamma, zeta_derivs_at0, CauchyRingParams};
use crate::oracle::{Method, StieltjesResult};
use crate::precision::{PrecisionContext, RationalArg};
use crate::real::BigReal;
use crate::trig::{cos_sin_2pi, cot_pi, sin_pi};

/// Largest Stieltjes index accepted by the closed forms.
pub const CLOSED_FORM_INDEX_CAP: u32 = 7;

/// Intermediate values of one closed-form evaluation.
#[derive(Clone, Debug)]
pub struct ClosedFormTrace {
    pub q: u64,
    /// Derivative order `n = m + 1`.
    pub order: usize,
    /// `zeta_derivs[r-1][j] = ζ^(j)(0, r/q)` for `r = 1..=q`, `j = 0..=n`.
    pub zeta_derivs: Vec<Vec<BigReal>>,
    /// Bell values consumed by the formula, in evaluation order.
    pub bell_values_used: Vec<BigReal>,
    /// Contribution of each `r = 1..=q` to `n γ_{n-1}(p/q)`.
    pub contributions: Vec<BigReal>,
}

fn check_index(m: u32) -> Result<usize> {
    if m > CLOSED_FORM_INDEX_CAP {
        return Err(Error::IndexCap {
            index: m,
            cap: CLOSED_FORM_INDEX_CAP,
        });
    }
    Ok(m as usize + 1)
}

fn check_proper(arg: RationalArg) -> Result<()> {
    if !arg.is_proper() {
        return Err(Error::Domain {
            function: "closed form",
            reason: "requires p < q",
        });
    }
    Ok(())
}

/// `ζ^(j)(0, r/q)` for `r = 1..=q`, `j = 0..=n`.
pub fn zeta_derivative_table(q: u64, n: usize, ctx: &PrecisionContext) -> Result<Vec<Vec<BigReal>>> {
    if n <= 1 {
        let half_log2pi = ctx.log2pi() / ctx.int(2);
        return (1..=q)
            .map(|r| {
                let x = ctx.ratio(r as i64, q as i64);
                let mut row = alloc::vec![&(ctx.one() / ctx.int(2)) - &x];
                if n == 1 {
                    row.push(&log_gamma(&x, ctx)? - &half_log2pi);
                }
                Ok(row)
            })
            .collect();
    }
    let ring = CauchyRingParams::default_for(ctx);
    (1..=q)
        .map(|r| zeta_derivs_at0(n, &ctx.ratio(r as i64, q as i64), ctx, &ring))
        .collect()
}

fn binomial_row(n: usize, ctx: &PrecisionContext) -> Vec<BigReal> {
    let mut row = Vec::with_capacity(n + 1);
    let mut c = ctx.one();
    row.push(c.clone());
    for k in 0..n {
        c = c.mul_int((n - k) as i64).div_int(k as i64 + 1);
        row.push(c.clone());
    }
    row
}

fn closed_form_err(n: usize, q: u64, ctx: &PrecisionContext) -> BigReal {
    // each ζ^(j)(0,·) carries about j!·2^j·ε of rounding
    let amp = (1..=n as i64).fold(ctx.one(), |a, k| a.mul_int(2 * k));
    (&amp * &ctx.epsilon()).mul_int(1000 * q as i64)
}

fn finish(value: BigReal, n: usize, q: u64, method: Method, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    Ok(StieltjesResult {
        value: value.div_int(n as i64).finite("closed form")?,
        err_estimate: closed_form_err(n, q, ctx),
        method,
    })
}

/// Σ_r contribution of the Bell form over `r` in `rs`, with bells for `q`.
fn bell_terms(
    n: usize,
    p: u64,
    q: u64,
    rs: &[u64],
    table: &[Vec<BigReal>],
    ctx: &PrecisionContext,
) -> Result<(Vec<BigReal>, Vec<BigReal>)> {
    let yg = bell_args(BellKind::G, q, n, ctx)?.bell_sequence(n, ctx)?;
    let yh = bell_args(BellKind::H, q, n.max(1), ctx)?.bell_sequence(n - 1, ctx)?;
    let c = binomial_row(n, ctx);
    let half_pi = ctx.pi() / ctx.int(2);
    let mut contributions = Vec::with_capacity(rs.len());
    for &r in rs {
        let (co, si) = cos_sin_2pi((r * p) as i64, q, ctx);
        let z = &table[(r - 1) as usize];
        let mut acc = ctx.zero();
        for i in 0..=n {
            let mut coeff = &yg[i] * &co;
            if i > 0 && !si.is_zero() {
                coeff += &(&half_pi * &yh[i - 1]).mul_int(i as i64) * &si;
            }
            acc += &(&c[i] * &coeff) * &z[n - i];
        }
        contributions.push(acc.mul_int(2));
    }
    let mut used = yg;
    used.extend(yh);
    Ok((contributions, used))
}

/// γ_m(p/q) by the Bell form, together with its trace.
pub fn stieltjes_rational_bell_traced(
    m: u32,
    arg: RationalArg,
    ctx: &PrecisionContext,
) -> Result<(StieltjesResult, ClosedFormTrace)> {
    let n = check_index(m)?;
    let (p, q) = (arg.p(), arg.q());
    let table = zeta_derivative_table(q, n, ctx)?;
    let rs: Vec<u64> = (1..=q).collect();
    let (contributions, used) = bell_terms(n, p, q, &rs, &table, ctx)?;
    let total = contributions.iter().fold(ctx.zero(), |a, b| a + b);
    let res = finish(total, n, q, Method::ClosedFormBell, ctx)?;
    Ok((
        res,
        ClosedFormTrace {
            q,
            order: n,
            zeta_derivs: table,
            bell_values_used: used,
            contributions,
        },
    ))
}

/// γ_m(p/q) by the Bell form.
pub fn stieltjes_rational_bell(m: u32, arg: RationalArg, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    Ok(stieltjes_rational_bell_traced(m, arg, ctx)?.0)
}

/// γ_m(p/q) by the Bell form with the `r = q` term written out as
/// `2 Σ_i C(n,i) Y_i(g) ζ^(n-i)(0)`, so only `r < q` needs Hurwitz values.
pub fn stieltjes_rational_split(m: u32, arg: RationalArg, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    let n = check_index(m)?;
    let (p, q) = (arg.p(), arg.q());
    let table = zeta_derivative_table(q, n, ctx)?;
    let yg = bell_args(BellKind::G, q, n, ctx)?.bell_sequence(n, ctx)?;
    let c = binomial_row(n, ctx);
    let zeta1 = &table[(q - 1) as usize];
    let mut total = ctx.zero();
    for i in 0..=n {
        total += &(&c[i] * &yg[i]) * &zeta1[n - i];
    }
    total = total.mul_int(2);
    let rs: Vec<u64> = (1..q).collect();
    if !rs.is_empty() {
        let (contr, _) = bell_terms(n, p, q, &rs, &table, ctx)?;
        for v in contr {
            total += v;
        }
    }
    finish(total, n, q, Method::ClosedFormBell, ctx)
}

/// γ_m(1/2) from `n γ_{n-1}(1/2) = 2 Σ_i C(n,i) Y_i(g) [ζ^(n-i)(0) - ζ^(n-i)(0, 1/2)]`
/// with `q = 2` Bell arguments.
pub fn stieltjes_half(m: u32, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    let n = check_index(m)?;
    let table = zeta_derivative_table(2, n, ctx)?;
    let yg = bell_args(BellKind::G, 2, n, ctx)?.bell_sequence(n, ctx)?;
    let c = binomial_row(n, ctx);
    let mut total = ctx.zero();
    for i in 0..=n {
        let d = &table[1][n - i] - &table[0][n - i];
        total += &(&c[i] * &yg[i]) * &d;
    }
    finish(total.mul_int(2), n, 2, Method::ClosedFormBell, ctx)
}

/// `Γ^(k)(1)` for `k = 0..=n`, from `Γ'(1+s) = Γ(1+s) ψ(1+s)`.
pub fn gamma_derivs_at_one(n: usize, ctx: &PrecisionContext) -> Result<Vec<BigReal>> {
    let mut args = Vec::with_capacity(n);
    if n > 0 {
        args.push(-ctx.euler_gamma());
    }
    let mut fact = ctx.one();
    for k in 1..n {
        // ψ^(k)(1) = (-1)^(k+1) k! ζ(k+1)
        fact = fact.mul_int(k as i64);
        let v = &fact * &ctx.zeta_int(k as u32 + 1)?;
        args.push(if k % 2 == 1 { v } else { -v });
    }
    let mut y = complete_bell_sequence(&args, n)?;
    for v in &mut y {
        v.set_bits(ctx.bits());
    }
    Ok(y)
}

/// γ_m(p/q) by the binomial-δ form.
pub fn stieltjes_rational_cck(m: u32, arg: RationalArg, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    let n = check_index(m)?;
    let (p, q) = (arg.p(), arg.q());
    let table = zeta_derivative_table(q, n, ctx)?;
    let gd = gamma_derivs_at_one(n, ctx)?;
    let l2pq = &ctx.log2pi() + &ctx.int(q as i64).ln();
    let half_pi = ctx.pi() / ctx.int(2);
    let binom: Vec<Vec<BigReal>> = (0..=n).map(|k| binomial_row(k, ctx)).collect();

    // δ_l for l = 0..=n
    let mut lpow = Vec::with_capacity(n + 1);
    lpow.push(ctx.one());
    for k in 1..=n {
        let v = &lpow[k - 1] * &l2pq;
        lpow.push(v);
    }
    let delta: Vec<BigReal> = (0..=n)
        .map(|l| {
            (0..=l).fold(ctx.zero(), |acc, mm| {
                let t = &(&binom[l][mm] * &gd[mm]) * &lpow[l - mm];
                if mm % 2 == 0 {
                    acc + t
                } else {
                    acc - t
                }
            })
        })
        .collect();

    // (π/2)^m
    let mut hp = Vec::with_capacity(n + 1);
    hp.push(ctx.one());
    for k in 1..=n {
        let v = &hp[k - 1] * &half_pi;
        hp.push(v);
    }

    // Σ_r K_l for l = 0..=n
    let mut ksum = alloc::vec![ctx.zero(); n + 1];
    for r in 1..=q {
        let (co, si) = cos_sin_2pi((r * p) as i64, q, ctx);
        let z = &table[(r - 1) as usize];
        let t: Vec<BigReal> = (0..=n)
            .map(|mm| {
                let base = if mm % 2 == 0 { &co } else { &si };
                // even: (-1)^(m/2); odd: (-1)^((m+1)/2)
                let e = if mm % 2 == 0 { mm / 2 } else { (mm + 1) / 2 };
                if e % 2 == 0 {
                    base.clone()
                } else {
                    -base
                }
            })
            .collect();
        for (l, ks) in ksum.iter_mut().enumerate() {
            let mut acc = ctx.zero();
            for mm in 0..=l {
                let k = l - mm;
                let rk = if k % 2 == 1 { z[k].clone() } else { -&z[k] };
                acc += &(&(&binom[l][mm] * &rk) * &hp[mm]) * &t[mm];
            }
            *ks -= acc;
        }
    }

    let mut total = ctx.zero();
    for l in 0..=n {
        total += &(&binom[n][l] * &delta[n - l]) * &ksum[l];
    }
    total = total.mul_int(2);
    if n % 2 == 1 {
        total = -total;
    }
    finish(total, n, q, Method::ClosedFormCck, ctx)
}

/// γ_m = γ_m(1) from derivatives of ζ(s) at 0 only:
/// `n γ_{n-1} = 2 Σ_i C(n,i) Y_i(g) ζ^(n-i)(0)` with `q = 1`.
pub fn stieltjes_at_one(m: u32, ctx: &PrecisionContext) -> Result<StieltjesResult> {
    let n = check_index(m)?;
    let ring = CauchyRingParams::default_for(ctx);
    let z = zeta_derivs_at0(n, &ctx.one(), ctx, &ring)?;
    let yg = bell_args(BellKind::G, 1, n, ctx)?.bell_sequence(n, ctx)?;
    let c = binomial_row(n, ctx);
    let mut total = ctx.zero();
    for i in 0..=n {
        total += &(&c[i] * &yg[i]) * &z[n - i];
    }
    finish(total.mul_int(2), n, 1, Method::AtOne, ctx)
}

/// ψ(p/q) = -γ - log(2q) - (π/2)cot(pπ/q) + Σ_{r<q} cos(2πrp/q) log sin(πr/q).
pub fn digamma_rational(arg: RationalArg, ctx: &PrecisionContext) -> Result<BigReal> {
    check_proper(arg)?;
    let (p, q) = (arg.p(), arg.q());
    let half_pi = ctx.pi() / ctx.int(2);
    let mut v = -ctx.euler_gamma() - ctx.int(2 * q as i64).ln() - &half_pi * &cot_pi(p as i64, q, ctx)?;
    for r in 1..q {
        let (co, _) = cos_sin_2pi((r * p) as i64, q, ctx);
        if co.is_zero() {
            continue;
        }
        v += &co * &sin_pi(r as i64, q, ctx).ln();
    }
    v.finite("digamma_rational")
}

/// ψ(p/q) = -γ - log(2πq) - (π/2)cot(pπ/q) - 2 Σ_{r=1}^{q} cos(2πrp/q) lnΓ(r/q).
pub fn digamma_rational_log_gamma(arg: RationalArg, ctx: &PrecisionContext) -> Result<BigReal> {
    check_proper(arg)?;
    let (p, q) = (arg.p(), arg.q());
    let half_pi = ctx.pi() / ctx.int(2);
    let l2pq = &ctx.log2pi() + &ctx.int(q as i64).ln();
    let mut v = -ctx.euler_gamma() - l2pq - &half_pi * &cot_pi(p as i64, q, ctx)?;
    let mut s = ctx.zero();
    for r in 1..q {
        let (co, _) = cos_sin_2pi((r * p) as i64, q, ctx);
        s += &co * &log_gamma(&ctx.ratio(r as i64, q as i64), ctx)?;
    }
    v -= s.mul_int(2);
    v.finite("digamma_rational")
}

/// γ_1(p/q) from γ_1, ζ''(0, r/q), lnΓ(r/q) and cot(pπ/q):
///
/// ```text
/// γ_1(p/q) = γ_1 - [γ+log 2π] log(2πq) - ½ log² q
///          + Σ_{r<q} ζ''(0,r/q) cos(2πrp/q)
///          - 2[γ+log 2πq] Σ_{r<q} lnΓ(r/q) cos(2πrp/q)
///          + π Σ_{r<q} lnΓ(r/q) sin(2πrp/q)
///          - (π/2)[γ+log 2πq] cot(pπ/q)
/// ```
pub fn gamma1_rational(arg: RationalArg, ctx: &PrecisionContext) -> Result<BigReal> {
    check_proper(arg)?;
    let (p, q) = (arg.p(), arg.q());
    let g1 = stieltjes_at_one(1, ctx)?.value;
    let g = ctx.euler_gamma();
    let lq = ctx.int(q as i64).ln();
    let a = &g + &ctx.log2pi();
    let b = &a + &lq;
    let pi = ctx.pi();
    let ring = CauchyRingParams::default_for(ctx);
    let mut v = &g1 - &(&a * &(&ctx.log2pi() + &lq)) - (&lq * &lq).div_int(2);
    let mut zc = ctx.zero();
    let mut lc = ctx.zero();
    let mut ls = ctx.zero();
    for r in 1..q {
        let x = ctx.ratio(r as i64, q as i64);
        let (co, si) = cos_sin_2pi((r * p) as i64, q, ctx);
        let z2 = zeta_derivs_at0(2, &x, ctx, &ring)?.pop().expect("non-empty");
        let lg = log_gamma(&x, ctx)?;
        zc += &z2 * &co;
        lc += &lg * &co;
        ls += &lg * &si;
    }
    v += zc;
    v -= (&b * &lc).mul_int(2);
    v += &pi * &ls;
    v -= &(&(&pi / ctx.int(2)) * &b) * &cot_pi(p as i64, q, ctx)?;
    v.finite("gamma1_rational")
}

/// γ_1(p/q) in the digamma form:
///
/// ```text
/// γ_1(p/q) = γ_1 + [γ+log 2πq][γ+ψ(p/q)] + Σ_{j<q} cos(2πjp/q) ζ''(0,j/q)
///          + π Σ_{j<q} sin(2πjp/q) lnΓ(j/q) + ½ log² q + log q log 2π
/// ```
///
/// ψ(p/q) comes from the Stirling series.
pub fn gamma1_rational_digamma_form(arg: RationalArg, ctx: &PrecisionContext) -> Result<BigReal> {
    check_proper(arg)?;
    let (p, q) = (arg.p(), arg.q());
    let g1 = stieltjes_at_one(1, ctx)?.value;
    let g = ctx.euler_gamma();
    let lq = ctx.int(q as i64).ln();
    let b = &(&g + &ctx.log2pi()) + &lq;
    let psi = digamma(&arg.to_real(ctx), ctx)?;
    let ring = CauchyRingParams::default_for(ctx);
    let mut v = &g1 + &(&b * &(&g + &psi));
    for j in 1..q {
        let x = ctx.ratio(j as i64, q as i64);
        let (co, si) = cos_sin_2pi((j * p) as i64, q, ctx);
        let z2 = zeta_derivs_at0(2, &x, ctx, &ring)?.pop().expect("non-empty");
        v += &co * &z2;
        if !si.is_zero() {
            v += &(&ctx.pi() * &si) * &log_gamma(&x, ctx)?;
        }
    }
    v += (&lq * &lq).div_int(2);
    v += &lq * &ctx.log2pi();
    v.finite("gamma1_rational")
}

/// Worked closed forms of γ_1 at 1/4, 3/4 and 1/5; `None` for other arguments.
///
/// * `γ_1(1/4), γ_1(3/4) = ½[2γ_1 - 7log²2 - 6γ log 2] ∓ ½π[γ + 4log 2 + 3log π - 4lnΓ(1/4)]`
/// * `γ_1(1/5) = ¼[4γ_1 - (5/2)log²5 - 5γ log 5] - ½π[log(10π) + γ]cot(π/5)
///   + ¼√5[ζ''(0,1/5) - ζ''(0,2/5) - ζ''(0,3/5) + ζ''(0,4/5) - [γ + log(10π)] log ½(3+√5)]
///   + π{sin(2π/5)[lnΓ(1/5) - lnΓ(4/5)] + sin(π/5)[lnΓ(2/5) - lnΓ(3/5)]}`
pub fn gamma1_worked_example(arg: RationalArg, ctx: &PrecisionContext, gamma1: &BigReal) -> Result<Option<BigReal>> {
    let g = ctx.euler_gamma();
    let pi = ctx.pi();
    let l2 = ctx.int(2).ln();
    match (arg.p(), arg.q()) {
        (p @ (1 | 3), 4) => {
            let a = (gamma1.mul_int(2) - (&l2 * &l2).mul_int(7) - (&g * &l2).mul_int(6)).div_int(2);
            let lg = log_gamma(&ctx.ratio(1, 4), ctx)?;
            let b = &g + &l2.mul_int(4) + pi.ln().mul_int(3) - lg.mul_int(4);
            let c = (&pi * &b).div_int(2);
            Ok(Some(if p == 1 { a - c } else { a + c }))
        }
        (1, 5) => {
            let l5 = ctx.int(5).ln();
            let s5 = ctx.int(5).sqrt();
            let l10pi = pi.mul_int(10).ln();
            let mut v = (gamma1.mul_int(4) - (&l5 * &l5).mul_int(5).div_int(2) - (&g * &l5).mul_int(5)).div_int(4);
            v -= &(&(&pi / ctx.int(2)) * &(&l10pi + &g)) * &cot_pi(1, 5, ctx)?;
            let ring = CauchyRingParams::default_for(ctx);
            let zdd = |k: i64| -> Result<BigReal> {
                Ok(zeta_derivs_at0(2, &ctx.ratio(k, 5), ctx, &ring)?.pop().expect("non-empty"))
            };
            let golden_sq = (ctx.int(3) + &s5).div_int(2).ln();
            let bracket = zdd(1)? - zdd(2)? - zdd(3)? + zdd(4)? - &(&g + &l10pi) * &golden_sq;
            v += (&s5 * &bracket).div_int(4);
            let lg = |k: i64| log_gamma(&ctx.ratio(k, 5), ctx);
            let braces = &sin_pi(2, 5, ctx) * &(lg(1)? - lg(4)?) + &sin_pi(1, 5, ctx) * &(lg(2)? - lg(3)?);
            v += &pi * &braces;
            Ok(Some(v))
        }
        _ => Ok(None),
    }
}
