//! Gauss–Legendre quadrature at arbitrary precision.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::real::BigReal;

/// Nodes and weights of the `k`-point rule on `[-1, 1]`.
#[derive(Clone, Debug)]
pub struct GaussLegendre {
    nodes: Vec<BigReal>,
    weights: Vec<BigReal>,
}

/// `(P_k(x), P_k'(x))` by the three-term recurrence.
fn legendre(k: usize, x: &BigReal, ctx: &PrecisionContext) -> (BigReal, BigReal) {
    let mut p0 = ctx.one();
    let mut p1 = x.clone();
    for j in 2..=k as i64 {
        let p2 = (&(x * &p1).mul_int(2 * j - 1) - &p0.mul_int(j - 1)).div_int(j);
        p0 = p1;
        p1 = p2;
    }
    // (1 - x²) P_k' = k (P_{k-1} - x P_k)
    let dp = (&p0 - &(x * &p1)).mul_int(k as i64) / (ctx.one() - x * x);
    (p1, dp)
}

impl GaussLegendre {
    pub fn new(k: usize, ctx: &PrecisionContext) -> Result<Self> {
        if k < 2 {
            return Err(Error::Domain {
                function: "GaussLegendre",
                reason: "need at least 2 nodes",
            });
        }
        let eps = ctx.epsilon();
        let mut nodes = Vec::with_capacity(k);
        let mut weights = Vec::with_capacity(k);
        for i in 0..k {
            let guess = libm::cos(core::f64::consts::PI * (i as f64 + 0.75) / (k as f64 + 0.5));
            let mut x = BigReal::from_f64(guess, ctx.bits());
            let mut converged = false;
            for _ in 0..200 {
                let (p, dp) = legendre(k, &x, ctx);
                let dx = p / &dp;
                x -= &dx;
                if dx.abs() < eps {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::NotConverged {
                    what: "Legendre root",
                });
            }
            let (_, dp) = legendre(k, &x, ctx);
            let w = ctx.int(2) / (&(ctx.one() - &x * &x) * &(&dp * &dp));
            nodes.push(x);
            weights.push(w);
        }
        Ok(GaussLegendre { nodes, weights })
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `∫_a^b f`.
    pub fn integrate<F>(&self, a: &BigReal, b: &BigReal, f: &mut F) -> Result<BigReal>
    where
        F: FnMut(&BigReal) -> Result<BigReal>,
    {
        let half = (b - a).div_int(2);
        let mid = (a + b).div_int(2);
        let mut acc = BigReal::zero(half.bits());
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            let t = &mid + &(&half * x);
            acc += &(w * &f(&t)?);
        }
        Ok(&acc * &half)
    }
}

/// `∫_a^b f` to absolute accuracy `tol`, returning the value and an error estimate.
///
/// Each panel is integrated with 16 and 32 nodes; the panel is accepted when the
/// two agree to its share of `tol`, and bisected otherwise.
pub fn integrate_adaptive<F>(
    f: &mut F,
    a: &BigReal,
    b: &BigReal,
    tol: &BigReal,
    ctx: &PrecisionContext,
) -> Result<(BigReal, BigReal)>
where
    F: FnMut(&BigReal) -> Result<BigReal>,
{
    const MAX_DEPTH: u32 = 12;
    let coarse = GaussLegendre::new(16, ctx)?;
    let fine = GaussLegendre::new(32, ctx)?;
    let mut value = ctx.zero();
    let mut err = ctx.zero();
    let mut stack = alloc::vec![(a.clone(), b.clone(), tol.clone(), 0u32)];
    while let Some((lo, hi, t, depth)) = stack.pop() {
        let g1 = coarse.integrate(&lo, &hi, f)?;
        let g2 = fine.integrate(&lo, &hi, f)?;
        let d = (&g1 - &g2).abs();
        if d < t {
            value += &g2;
            err += &d;
            continue;
        }
        if depth == MAX_DEPTH {
            return Err(Error::NotConverged {
                what: "adaptive quadrature",
            });
        }
        let mid = (&lo + &hi).div_int(2);
        let half_t = t.div_int(2);
        stack.push((mid.clone(), hi, half_t.clone(), depth + 1));
        stack.push((lo, mid, half_t, depth + 1));
    }
    Ok((value.finite("adaptive quadrature")?, err))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::make_context;

    #[test]
    fn weights_sum_to_two_and_integrate_polynomials() {
        let ctx = make_context(30).unwrap();
        let g = GaussLegendre::new(8, &ctx).unwrap();
        let total = g.weights.iter().fold(ctx.zero(), |a, w| &a + w);
        assert!((&total - &ctx.int(2)).abs() < *ctx.tolerance());
        // exact for degree 15
        let v = g.integrate(&ctx.zero(), &ctx.one(), &mut |x| Ok(x.powi(15))).unwrap();
        assert!((&v - &ctx.ratio(1, 16)).abs() < *ctx.tolerance());
    }

    #[test]
    fn adaptive_log() {
        let ctx = make_context(30).unwrap();
        let tol = ctx.tolerance().clone();
        let (v, err) = integrate_adaptive(&mut |x| Ok(x.ln()), &ctx.ratio(1, 100), &ctx.int(2), &tol, &ctx).unwrap();
        // ∫ ln x = x ln x - x
        let f = |x: BigReal| &(&x * &x.ln()) - &x;
        let exact = f(ctx.int(2)) - f(ctx.ratio(1, 100));
        assert!((&v - &exact).abs() < tol);
        assert!(err < tol);
    }
}
