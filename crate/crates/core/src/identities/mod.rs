//! A registry of named numerical identities.
//!
//! Each entry evaluates its two sides along separate code paths and returns an
//! [`IdentityReport`]. A failing identity is data, not an error; `Err` is kept
//! for unknown names, missing or out-of-domain parameters, and numerical
//! breakdown.
//!
//! Unless an entry says otherwise the pass threshold is
//! `10^-(target_digits - 10)` (at least `10^-1`); see [`identity_tolerance`].

mod functional;
mod report;
mod sums;

use alloc::string::String;
use alloc::vec::Vec;

pub use report::{Frac, IdentityParams, IdentityReport};

use crate::error::{Error, Result};
use crate::hurwitz::{zeta_derivs_at0, CauchyRingParams};
use crate::oracle::{stieltjes_cauchy, StieltjesIndex};
use crate::precision::{PrecisionContext, RationalArg};
use crate::real::BigReal;

/// Pass threshold of `ramanujan-cos-sum`, whose left side is a truncated
/// conditionally convergent series summed in double precision.
pub const RAMANUJAN_TOLERANCE_EXPONENT: u32 = 4;

/// Default number of terms for `ramanujan-cos-sum`.
pub const RAMANUJAN_DEFAULT_TERMS: u64 = 1_000_000;

type Eval = fn(&Env<'_>, &IdentityParams) -> Result<(BigReal, BigReal)>;
type Grid = fn(&ParamGrid) -> Vec<IdentityParams>;

/// One registry entry.
#[derive(Clone, Copy)]
pub struct IdentityEntry {
    pub name: &'static str,
    /// The identity as a formula, `lhs = rhs`.
    pub statement: &'static str,
    eval: Eval,
    grid: Grid,
    loose: bool,
}

impl core::fmt::Debug for IdentityEntry {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("IdentityEntry").field("name", &self.name).finish()
    }
}

macro_rules! entry {
    ($name:literal, $stmt:literal, $eval:path, $grid:path) => {
        IdentityEntry {
            name: $name,
            statement: $stmt,
            eval: $eval,
            grid: $grid,
            loose: false,
        }
    };
}

static REGISTRY: &[IdentityEntry] = &[
    entry!(
        "rademacher",
        "ζ(s,p/q) = 2Γ(1-s)(2πq)^(s-1) Σ_{j=1}^{q} sin(πs/2 + 2πjp/q) ζ(1-s,j/q)",
        functional::rademacher,
        grids::rademacher
    ),
    entry!(
        "rademacher-reflected",
        "ζ(1-s,p/q) = 2Γ(s)(2πq)^(-s) Σ_{j=1}^{q} cos(2πjp/q - πs/2) ζ(s,j/q)",
        functional::rademacher_reflected,
        grids::rademacher
    ),
    entry!(
        "hasse-x-derivative",
        "∂/∂x ζ^(n)(0,x) = (-1)^(n+1) Σ_j 1/(j+1) Σ_k C(j,k)(-1)^k ln^n(x+k)",
        functional::hasse_x_derivative,
        grids::hasse_x_derivative
    ),
    entry!(
        "stieltjes-integral",
        "∫_1^x γ_n(t) dt = (-1)^(n+1)/(n+1) [ζ^(n+1)(0,x) - ζ^(n+1)(0)]",
        functional::stieltjes_integral,
        grids::stieltjes_integral
    ),
    entry!(
        "kubert",
        "q^s ζ(s,x) = Σ_{r=0}^{q-1} ζ(s,(r+x)/q)",
        functional::kubert,
        grids::kubert
    ),
    entry!(
        "zeta-dd-sum",
        "Σ_{r=1}^{q-1} ζ''(0,r/q) = -log q log 2π - ½log²q",
        functional::zeta_dd_sum,
        grids::moduli
    ),
    entry!(
        "gauss-mult-gamma",
        "lnΓ(x) = Σ_{r=0}^{q-1} lnΓ((r+x)/q) - ½(q-1)log 2π - (½-x)log q",
        functional::gauss_mult_gamma,
        grids::multiplication
    ),
    entry!(
        "mult-zeta-dd",
        "ζ''(0,x) + 2log q ζ'(0,x) + log²q ζ(0,x) = Σ_{r=0}^{q-1} ζ''(0,(r+x)/q)",
        functional::mult_zeta_dd,
        grids::multiplication
    ),
    entry!(
        "mult-zeta-dd-doubling",
        "ζ''(0,2x) - ζ''(0,x) - ζ''(0,x+½) = -2log 2 [lnΓ(2x) - ½log 2π] - log²2 (½-2x)",
        functional::mult_zeta_dd_doubling,
        grids::doubling
    ),
    entry!(
        "func-eq-zdd",
        "ζ''(0,x+½) + ζ''(0,½-x) = ζ''(0,2x) + ζ''(0,1-2x) - ζ''(0,x) - ζ''(0,1-x) - 2log 2 log(2sin 2πx)",
        functional::func_eq_zdd,
        grids::functional_equation
    ),
    entry!(
        "func-eq-gamma1",
        "γ_1(x+½) - γ_1(½-x) = 2[γ_1(2x) - γ_1(1-2x)] - [γ_1(x) - γ_1(1-x)] - 2π log 2 cot 2πx",
        functional::func_eq_gamma1,
        grids::functional_equation
    ),
    IdentityEntry {
        name: "ramanujan-cos-sum",
        statement: "Σ_{n>=1} log n/n cos 2πnx = ½[ζ''(0,x) + ζ''(0,1-x)] + [γ + log 2π] log(2sin πx)",
        eval: functional::ramanujan_cos_sum,
        grid: grids::ramanujan,
        loose: true,
    },
    entry!(
        "apostol-zeta-dd",
        "ζ''(0) = γ_1 + ½γ² - π²/24 - ½log²2π",
        functional::apostol_zeta_dd,
        grids::single
    ),
    entry!(
        "bell-gamma-at-one",
        "nγ_{n-1} = 2 Σ_i C(n,i) Y_i(g) ζ^(n-i)(0), compared with the Cauchy oracle",
        functional::bell_gamma_at_one,
        grids::at_one
    ),
    entry!(
        "lck-real",
        "q^-s Σ_{j=1}^{q} cos(2πjp/q) ζ(s,j/q) = Γ(1-s)(2π)^(s-1) sin(πs/2) [ζ(1-s,x) + ζ(1-s,1-x)]",
        sums::lck_real,
        grids::lck
    ),
    entry!(
        "lck-imag",
        "q^-s Σ_{j=1}^{q} sin(2πjp/q) ζ(s,j/q) = Γ(1-s)(2π)^(s-1) cos(πs/2) [ζ(1-s,x) - ζ(1-s,1-x)]",
        sums::lck_imag,
        grids::lck
    ),
    entry!(
        "prop-6-1",
        "Σ_{j=1}^{q} sin(2πjp/q) ψ(j/q) = πq(p/q - ½)",
        sums::sine_digamma,
        grids::proper
    ),
    entry!(
        "prop-6-2",
        "Σ_{j=1}^{q} cos(2πjp/q) ψ(j/q) = q log(2sin(πp/q))",
        sums::cosine_digamma,
        grids::proper
    ),
    entry!(
        "prop-6-3",
        "Σ_{j=1}^{q} sin(2πjp/q) γ_1(j/q) = ½πq[2lnΓ(x) - log π + log sin πx] + πqL(x - ½), L = γ + log 2πq",
        sums::sine_gamma1,
        grids::proper
    ),
    entry!(
        "prop-6-4",
        "Σ_{j=1}^{q} cos(2πjp/q) γ_1(j/q) = ½q[ζ''(0,x) + ζ''(0,1-x)] + qL log(2sin πx), L = γ + log 2πq",
        sums::cosine_gamma1,
        grids::proper
    ),
    entry!(
        "prop-6-5",
        "Σ_{j=1}^{q-1} sin(2πjp/q) lnΓ(j/q) = [γ_1(x) - γ_1(1-x)]/2π + ½L cot πx; variant 1 sums ζ'(0,j/q) over j <= q",
        sums::sine_log_gamma,
        grids::proper_two_variants
    ),
    entry!(
        "prop-6-6",
        "Σ_{j=1}^{q-1} cos(2πjp/q) lnΓ(j/q) = -¼[ψ(x) + ψ(1-x)] - ½L; variant 1: 2Σ = -½π cot πx - L - ψ(x)",
        sums::cosine_log_gamma,
        grids::proper_two_variants
    ),
    entry!(
        "prop-6-7",
        "2π Σ_{j=1}^{q} sin(2πjp/q) ζ''(0,j/q) = γ_2(x) - γ_2(1-x) + 4πL Σ_{j=1}^{q} sin(2πjp/q) ζ'(0,j/q) - π(L² + π²/12) cot πx",
        sums::sine_zeta_dd,
        grids::proper_two_variants
    ),
    entry!(
        "gamma0-digamma",
        "γ_0(x) = -ψ(x)",
        sums::gamma0_digamma,
        grids::proper
    ),
    entry!(
        "trig-sums",
        "Σ_{r=1}^{q} sin(2πrp/q) = 0, Σ cos(2πrp/q) = 0, Σ r sin(2πrp/q) = -½q cot(πp/q), -Σ_{r<q} cos(2πrp/q) log sin(πr/q) = log π + 2Σ_{r<q} cos(2πrp/q) lnΓ(r/q)",
        sums::trig_sums,
        grids::trig_sums
    ),
    entry!(
        "gauss-digamma",
        "ψ(p/q) = -γ - log 2q - ½π cot(πp/q) + 2 Σ_{r=1}^{⌊(q-1)/2⌋} cos(2πrp/q) log sin(πr/q)",
        sums::gauss_digamma,
        grids::gauss_digamma
    ),
    entry!(
        "deninger-gamma1",
        "-2γ_1(p/q) = -2γ_1 - 2L[γ + ψ(p/q)] - 2Σ_{j<q} cos(2πjp/q) ζ''(0,j/q) - 2π Σ_{j<q} sin(2πjp/q) lnΓ(j/q) - log²q - 2log q log 2π",
        sums::deninger_gamma1,
        grids::proper
    ),
];

/// Every registered identity, in registry order.
pub fn registry() -> &'static [IdentityEntry] {
    REGISTRY
}

/// Names of every registered identity, in registry order.
pub fn identity_names() -> impl Iterator<Item = &'static str> {
    REGISTRY.iter().map(|e| e.name)
}

fn lookup(name: &str) -> Result<&'static IdentityEntry> {
    REGISTRY
        .iter()
        .find(|e| e.name == name)
        .ok_or_else(|| Error::UnknownIdentity(String::from(name)))
}

/// `10^-(target_digits - 10)`, clamped to at most `10^-1`.
pub fn identity_tolerance(ctx: &PrecisionContext) -> BigReal {
    let e = ctx.target_digits().saturating_sub(10).max(1);
    ctx.int(10).powi(-i64::from(e))
}

fn tolerance_for(entry: &IdentityEntry, ctx: &PrecisionContext) -> BigReal {
    if entry.loose {
        ctx.int(10).powi(-i64::from(RAMANUJAN_TOLERANCE_EXPONENT))
    } else {
        identity_tolerance(ctx)
    }
}

/// Evaluates one identity at one parameter point.
pub fn run_identity(name: &str, params: &IdentityParams, ctx: &PrecisionContext) -> Result<IdentityReport> {
    let entry = lookup(name)?;
    let env = Env::new(ctx);
    let (lhs, rhs) = (entry.eval)(&env, params)?;
    Ok(IdentityReport::new(
        String::from(entry.name),
        params.clone(),
        lhs,
        rhs,
        tolerance_for(entry, ctx),
    ))
}

/// Parameter ranges for [`run_suite`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParamGrid {
    /// Largest denominator used by the rational and modulus grids.
    pub q_max: u64,
    /// Number of series terms for `ramanujan-cos-sum`.
    pub ramanujan_terms: u64,
}

impl Default for ParamGrid {
    fn default() -> Self {
        ParamGrid {
            q_max: 5,
            ramanujan_terms: RAMANUJAN_DEFAULT_TERMS,
        }
    }
}

impl ParamGrid {
    /// The grid points `name` is evaluated at.
    pub fn points(&self, name: &str) -> Result<Vec<IdentityParams>> {
        Ok((lookup(name)?.grid)(self))
    }
}

/// `true` when `name` matches `pattern`, a comma-separated list of globs
/// using `*` and `?`. `all` matches everything.
pub fn matches_filter(pattern: &str, name: &str) -> bool {
    pattern
        .split(',')
        .map(str::trim)
        .any(|p| p == "all" || glob(p.as_bytes(), name.as_bytes()))
}

fn glob(p: &[u8], s: &[u8]) -> bool {
    let (mut pi, mut si) = (0, 0);
    let mut star: Option<(usize, usize)> = None;
    while si < s.len() {
        if pi < p.len() && (p[pi] == b'?' || p[pi] == s[si]) {
            pi += 1;
            si += 1;
        } else if pi < p.len() && p[pi] == b'*' {
            star = Some((pi, si));
            pi += 1;
        } else if let Some((sp, ss)) = star {
            pi = sp + 1;
            si = ss + 1;
            star = Some((sp, ss + 1));
        } else {
            return false;
        }
    }
    p[pi..].iter().all(|&c| c == b'*')
}

/// Runs every identity whose name matches `filter` (all when `None`) over
/// its grid points. Reports come back in registry order, then grid order.
pub fn run_suite(filter: Option<&str>, grid: &ParamGrid, ctx: &PrecisionContext) -> Result<Vec<IdentityReport>> {
    if grid.q_max < 2 {
        return Err(Error::Domain {
            function: "run_suite",
            reason: "q_max must be at least 2",
        });
    }
    let selected: Vec<&IdentityEntry> = REGISTRY
        .iter()
        .filter(|e| filter.map_or(true, |f| matches_filter(f, e.name)))
        .collect();
    if selected.is_empty() {
        return Err(Error::UnknownIdentity(String::from(filter.unwrap_or(""))));
    }
    let env = Env::new(ctx);
    let mut out = Vec::new();
    for entry in selected {
        let tol = tolerance_for(entry, ctx);
        for params in (entry.grid)(grid) {
            let (lhs, rhs) = (entry.eval)(&env, &params)?;
            out.push(IdentityReport::new(String::from(entry.name), params, lhs, rhs, tol.clone()));
        }
    }
    Ok(out)
}

/// Pass/fail counts over a list of reports.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SuiteSummary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

pub fn summarize(reports: &[IdentityReport]) -> SuiteSummary {
    let passed = reports.iter().filter(|r| r.pass).count();
    SuiteSummary {
        total: reports.len(),
        passed,
        failed: reports.len() - passed,
    }
}

/// Shared evaluation helpers.
pub(crate) struct Env<'a> {
    ctx: &'a PrecisionContext,
    ring: CauchyRingParams,
}

impl<'a> Env<'a> {
    fn new(ctx: &'a PrecisionContext) -> Self {
        Env {
            ctx,
            ring: CauchyRingParams::default_for(ctx),
        }
    }

    /// `ζ^(j)(0, x)` for `j = 0..=k`.
    fn zeta_derivs(&self, k: usize, x: &BigReal) -> Result<Vec<BigReal>> {
        zeta_derivs_at0(k, x, self.ctx, &self.ring)
    }

    /// `ζ^(k)(0, a/b)`.
    fn zd(&self, k: usize, a: i64, b: u64) -> Result<BigReal> {
        Ok(self.zeta_derivs(k, &self.ctx.ratio(a, b as i64))?.pop().expect("non-empty"))
    }

    /// `γ_n(x)` from the Cauchy oracle.
    fn stieltjes(&self, n: u32, x: &BigReal) -> Result<BigReal> {
        Ok(stieltjes_cauchy(StieltjesIndex::new(n)?, x, self.ctx, &self.ring)?.value)
    }

    fn ln_int(&self, k: u64) -> BigReal {
        self.ctx.int(k as i64).ln()
    }
}

fn need<T: Copy>(v: Option<T>, identity: &'static str, parameter: &'static str) -> Result<T> {
    v.ok_or(Error::MissingParameter { identity, parameter })
}

/// `p` and `q` in lowest terms with `1 <= p <= q`; `proper` also demands `p < q`.
fn rational_pq(params: &IdentityParams, identity: &'static str, proper: bool) -> Result<(u64, u64)> {
    let p = need(params.p, identity, "p")?;
    let q = need(params.q, identity, "q")?;
    let a = RationalArg::new(p, q)?;
    if a.p() != p || (proper && p == q) {
        return Err(Error::InvalidRational { p, q });
    }
    Ok((p, q))
}

fn variant(params: &IdentityParams, count: u32) -> Result<u32> {
    let v = params.variant.unwrap_or(0);
    if v >= count {
        return Err(Error::Domain {
            function: "identity variant",
            reason: "variant index out of range",
        });
    }
    Ok(v)
}

mod grids {
    use super::*;

    fn reduced(q_max: u64) -> impl Iterator<Item = (u64, u64)> {
        (2..=q_max).flat_map(|q| (1..q).filter(move |&p| num_integer::gcd(p, q) == 1).map(move |p| (p, q)))
    }

    fn pq(p: u64, q: u64) -> IdentityParams {
        IdentityParams {
            p: Some(p),
            q: Some(q),
            ..IdentityParams::default()
        }
    }

    pub(super) fn single(_: &ParamGrid) -> Vec<IdentityParams> {
        alloc::vec![IdentityParams::default()]
    }

    pub(super) fn proper(g: &ParamGrid) -> Vec<IdentityParams> {
        reduced(g.q_max).map(|(p, q)| pq(p, q)).collect()
    }

    fn with_variants(g: &ParamGrid, count: u32) -> Vec<IdentityParams> {
        reduced(g.q_max)
            .flat_map(|(p, q)| {
                (0..count).map(move |v| IdentityParams {
                    variant: Some(v),
                    ..pq(p, q)
                })
            })
            .collect()
    }

    pub(super) fn proper_two_variants(g: &ParamGrid) -> Vec<IdentityParams> {
        with_variants(g, 2)
    }

    pub(super) fn trig_sums(g: &ParamGrid) -> Vec<IdentityParams> {
        with_variants(g, 4)
    }

    pub(super) fn gauss_digamma(g: &ParamGrid) -> Vec<IdentityParams> {
        with_variants(g, 3)
    }

    fn with_s(g: &ParamGrid, s_values: &[Frac]) -> Vec<IdentityParams> {
        let mut out = Vec::new();
        for &s in s_values {
            for (p, q) in reduced(g.q_max) {
                out.push(IdentityParams { s: Some(s), ..pq(p, q) });
            }
        }
        out
    }

    pub(super) fn rademacher(g: &ParamGrid) -> Vec<IdentityParams> {
        with_s(g, &[Frac::new(-5, 2), Frac::new(-3, 2), Frac::new(-1, 2), Frac::new(23, 10)])
    }

    pub(super) fn lck(g: &ParamGrid) -> Vec<IdentityParams> {
        with_s(g, &[Frac::new(3, 10), Frac::new(7, 10)])
    }

    const MULT_X: [Frac; 2] = [Frac::new(3, 10), Frac::new(7, 10)];

    pub(super) fn kubert(g: &ParamGrid) -> Vec<IdentityParams> {
        let mut out = Vec::new();
        for s in [Frac::new(-1, 2), Frac::new(23, 10)] {
            for x in MULT_X {
                for q in 2..=g.q_max {
                    out.push(IdentityParams {
                        s: Some(s),
                        x: Some(x),
                        q: Some(q),
                        ..IdentityParams::default()
                    });
                }
            }
        }
        out
    }

    pub(super) fn multiplication(g: &ParamGrid) -> Vec<IdentityParams> {
        let mut out = Vec::new();
        for x in MULT_X {
            for q in 2..=g.q_max {
                out.push(IdentityParams {
                    x: Some(x),
                    q: Some(q),
                    ..IdentityParams::default()
                });
            }
        }
        out
    }

    pub(super) fn moduli(g: &ParamGrid) -> Vec<IdentityParams> {
        (2..=g.q_max)
            .map(|q| IdentityParams {
                q: Some(q),
                ..IdentityParams::default()
            })
            .collect()
    }

    fn xs(values: &[Frac]) -> Vec<IdentityParams> {
        values
            .iter()
            .map(|&x| IdentityParams {
                x: Some(x),
                ..IdentityParams::default()
            })
            .collect()
    }

    pub(super) fn doubling(_: &ParamGrid) -> Vec<IdentityParams> {
        xs(&MULT_X)
    }

    pub(super) fn functional_equation(_: &ParamGrid) -> Vec<IdentityParams> {
        xs(&[Frac::new(1, 8), Frac::new(1, 6), Frac::new(1, 5)])
    }

    pub(super) fn ramanujan(g: &ParamGrid) -> Vec<IdentityParams> {
        xs(&[Frac::new(1, 3), Frac::new(1, 4)])
            .into_iter()
            .map(|p| IdentityParams {
                terms: Some(g.ramanujan_terms),
                ..p
            })
            .collect()
    }

    pub(super) fn hasse_x_derivative(_: &ParamGrid) -> Vec<IdentityParams> {
        (1..=2)
            .map(|n| IdentityParams {
                n: Some(n),
                x: Some(Frac::new(1, 2)),
                ..IdentityParams::default()
            })
            .collect()
    }

    pub(super) fn stieltjes_integral(_: &ParamGrid) -> Vec<IdentityParams> {
        let mut out = Vec::new();
        for n in 0..=1 {
            for x in [Frac::new(1, 2), Frac::new(2, 1)] {
                out.push(IdentityParams {
                    n: Some(n),
                    x: Some(x),
                    ..IdentityParams::default()
                });
            }
        }
        out
    }

    pub(super) fn at_one(_: &ParamGrid) -> Vec<IdentityParams> {
        (1..=4)
            .map(|n| IdentityParams {
                n: Some(n),
                ..IdentityParams::default()
            })
            .collect()
    }
}
