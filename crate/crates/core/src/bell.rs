//! Complete exponential Bell polynomials and the argument vectors fed to them.
//!
//! `Y_n` is evaluated with the binomial recurrence
//! `Y_{n+1} = Σ_{k=0}^{n} C(n,k) Y_{n-k} x_{k+1}`, which costs O(n²) ring
//! operations and works over any commutative ring with unit. Binomial
//! coefficients are built by Pascal additions, so exact inputs give exact
//! outputs.
//!
//! | n | Y_n                                              |
//! |---|--------------------------------------------------|
//! | 1 | x1                                               |
//! | 2 | x1² + x2                                         |
//! | 3 | x1³ + 3x1x2 + x3                                 |
//! | 4 | x1⁴ + 6x1²x2 + 4x1x3 + 3x2² + x4                 |
//! | 5 | x1⁵ + 10x1³x2 + 15x1x2² + 10x1²x3 + 10x2x3 + 5x1x4 + x5 |

use alloc::vec::Vec;
use core::ops::{Add, Mul};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::real::BigReal;

/// `Y_0, Y_1, …, Y_n` evaluated at `args`.
pub fn complete_bell_sequence<T>(args: &[T], n: usize) -> Result<Vec<T>>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    if args.len() < n {
        return Err(Error::BellArguments {
            order: n,
            given: args.len(),
        });
    }
    let mut y: Vec<T> = Vec::with_capacity(n + 1);
    y.push(T::one());
    // Pascal row C(m, 0..=m), advanced once per order.
    let mut row: Vec<T> = alloc::vec![T::one()];
    for m in 0..n {
        let mut next = T::zero();
        for k in 0..=m {
            let t = &(&row[k] * &y[m - k]) * &args[k];
            next = &next + &t;
        }
        y.push(next);
        let mut new_row = Vec::with_capacity(row.len() + 1);
        new_row.push(T::one());
        for k in 1..row.len() {
            new_row.push(&row[k - 1] + &row[k]);
        }
        new_row.push(T::one());
        row = new_row;
    }
    Ok(y)
}

/// The complete Bell polynomial `Y_n(x_1, …, x_n)`; entries of `args` beyond
/// index `n - 1` are ignored.
pub fn complete_bell<T>(args: &[T], n: usize) -> Result<T>
where
    T: Clone + Zero + One,
    for<'a> &'a T: Add<&'a T, Output = T> + Mul<&'a T, Output = T>,
{
    Ok(complete_bell_sequence(args, n)?.pop().expect("non-empty"))
}

/// Which derivative vector a [`BellArgumentSet`] holds.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BellKind {
    /// `g(0) = -(γ + log 2πq)`, `g^(i)(0) = (2^-(i+1)((-1)^(i+1) + 1) - 1) · i! · ζ(i+1)`.
    G,
    /// `h^(i)(0) = (-1)^i g^(i)(0)`.
    H,
    /// `(γ + log 2πq, 1!ζ(2), 2!ζ(3), …)`.
    PsiStar,
}

/// Derivative-at-zero values; entry `i` is the `i`-th derivative.
#[derive(Clone, Debug)]
pub struct BellArgumentSet {
    pub kind: BellKind,
    pub q: u64,
    pub values: Vec<BigReal>,
}

impl BellArgumentSet {
    /// `Y_0, …, Y_n` at these arguments.
    pub fn bell_sequence(&self, n: usize, ctx: &PrecisionContext) -> Result<Vec<BigReal>> {
        let mut y = complete_bell_sequence(&self.values, n)?;
        for v in &mut y {
            v.set_bits(ctx.bits());
        }
        Ok(y)
    }
}

/// Materializes the first `count` values of the requested argument vector.
pub fn bell_args(kind: BellKind, q: u64, count: usize, ctx: &PrecisionContext) -> Result<BellArgumentSet> {
    if count == 0 {
        return Err(Error::Domain {
            function: "bell_args",
            reason: "count must be at least 1",
        });
    }
    if q == 0 {
        return Err(Error::Domain {
            function: "bell_args",
            reason: "q must be positive",
        });
    }
    let base = &ctx.euler_gamma() + &ctx.log2pi() + ctx.int(q as i64).ln();
    let mut values = Vec::with_capacity(count);
    values.push(match kind {
        BellKind::PsiStar => base,
        BellKind::G | BellKind::H => -base,
    });
    let mut fact = ctx.one();
    for i in 1..count {
        fact = fact.mul_int(i as i64);
        let fz = &fact * &ctx.zeta_int(i as u32 + 1)?;
        let v = match kind {
            BellKind::PsiStar => fz,
            BellKind::G | BellKind::H => {
                let coeff = if i % 2 == 1 {
                    ctx.one().div_int(1i64 << i) - ctx.one()
                } else {
                    -ctx.one()
                };
                let g = &coeff * &fz;
                if kind == BellKind::H && i % 2 == 1 {
                    -g
                } else {
                    g
                }
            }
        };
        values.push(v);
    }
    Ok(BellArgumentSet { kind, q, values })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::precision::make_context;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn small_orders() {
        assert_eq!(complete_bell(&[r(5)], 0).unwrap(), r(1));
        assert_eq!(complete_bell::<BigRational>(&[], 0).unwrap(), r(1));
        assert_eq!(complete_bell(&[r(2), r(3)], 2).unwrap(), r(7));
        assert_eq!(complete_bell(&[r(1), r(1), r(1)], 3).unwrap(), r(5));
        assert_eq!(complete_bell(&[r(-1), r(1), r(-1)], 3).unwrap(), r(-5));
        assert!(matches!(
            complete_bell(&[r(1)], 2),
            Err(Error::BellArguments { order: 2, given: 1 })
        ));
    }

    #[test]
    fn all_ones_gives_bell_numbers() {
        let ones = alloc::vec![r(1); 10];
        let y = complete_bell_sequence(&ones, 10).unwrap();
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975];
        for (a, b) in y.iter().zip(bell) {
            assert_eq!(*a, r(b));
        }
    }

    #[test]
    fn g_arguments() {
        let ctx = make_context(30).unwrap();
        let g = bell_args(BellKind::G, 1, 2, &ctx).unwrap();
        let base = &ctx.euler_gamma() + &ctx.log2pi();
        assert!((&g.values[0] + &base).abs() < *ctx.tolerance());
        let half_z2 = ctx.zeta_int(2).unwrap() / ctx.int(2);
        assert!((&g.values[1] + &half_z2).abs() < *ctx.tolerance());
        assert!(bell_args(BellKind::G, 1, 0, &ctx).is_err());
    }

    #[test]
    fn psi_star_and_h_arguments() {
        let ctx = make_context(30).unwrap();
        let p = bell_args(BellKind::PsiStar, 1, 3, &ctx).unwrap();
        let base = &ctx.euler_gamma() + &ctx.log2pi();
        assert!((&p.values[0] - &base).abs() < *ctx.tolerance());
        assert!((&p.values[1] - &ctx.zeta_int(2).unwrap()).abs() < *ctx.tolerance());
        assert!((&p.values[2] - &ctx.zeta_int(3).unwrap().mul_int(2)).abs() < *ctx.tolerance());
        let h = bell_args(BellKind::H, 1, 4, &ctx).unwrap();
        let g = bell_args(BellKind::G, 1, 4, &ctx).unwrap();
        assert!((&h.values[0] + &base).abs() < *ctx.tolerance());
        for i in 0..4 {
            let sign = if i % 2 == 0 { g.values[i].clone() } else { -&g.values[i] };
            assert_eq!(h.values[i], sign);
        }
    }
}
