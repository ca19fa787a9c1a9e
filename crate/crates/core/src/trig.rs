//! Trigonometric values at rational multiples of π.
//!
//! Arguments are reduced exactly on the rational before any floating-point
//! work, and quarter turns return exact `0` and `±1`.

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::real::BigReal;

/// `(cos 2πa/q, sin 2πa/q)`.
pub fn cos_sin_2pi(a: i64, q: u64, ctx: &PrecisionContext) -> (BigReal, BigReal) {
    assert!(q > 0, "cos_sin_2pi: q must be positive");
    let qi = q as i128;
    let mut r = (a as i128).rem_euclid(qi);
    if (4 * r) % qi == 0 {
        return match 4 * r / qi {
            0 => (ctx.one(), ctx.zero()),
            1 => (ctx.zero(), ctx.one()),
            2 => (-ctx.one(), ctx.zero()),
            _ => (ctx.zero(), -ctx.one()),
        };
    }
    if 2 * r > qi {
        r -= qi;
    }
    let theta = ctx.pi().mul_int(2 * r as i64).div_int(q as i64);
    (theta.cos(), theta.sin())
}

/// `cos(pπ/q)`.
pub fn cos_pi(p: i64, q: u64, ctx: &PrecisionContext) -> BigReal {
    cos_sin_2pi(p, 2 * q, ctx).0
}

/// `sin(pπ/q)`.
pub fn sin_pi(p: i64, q: u64, ctx: &PrecisionContext) -> BigReal {
    cos_sin_2pi(p, 2 * q, ctx).1
}

/// `cot(pπ/q)`; fails where the sine vanishes.
pub fn cot_pi(p: i64, q: u64, ctx: &PrecisionContext) -> Result<BigReal> {
    let (c, s) = cos_sin_2pi(p, 2 * q, ctx);
    if s.is_zero() {
        return Err(Error::Pole { function: "cot" });
    }
    Ok(c / s)
}
