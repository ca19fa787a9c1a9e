//! Finite trigonometric sums over `j/q` at a rational point `x = p/q`.
//!
//! `L` below stands for `γ + log 2πq`. Values of γ_1 and γ_2 come from the
//! Cauchy oracle, never from the closed forms.

use super::{need, rational_pq, variant, Env, IdentityParams};
use crate::error::{Error, Result};
use crate::hurwitz::{digamma, gamma_real, hurwitz_zeta_real, log_gamma};
use crate::rational::{digamma_rational, digamma_rational_log_gamma};
use crate::real::BigReal;
use crate::trig::{cos_pi, cos_sin_2pi, cot_pi, sin_pi};
use crate::RationalArg;

type Sides = Result<(BigReal, BigReal)>;

/// A proper reduced `p/q` with its trigonometric table.
struct Point<'e, 'c> {
    env: &'e Env<'c>,
    p: u64,
    q: u64,
    /// `(cos 2πjp/q, sin 2πjp/q)` for `j = 1..=q`, at index `j - 1`.
    trig: alloc::vec::Vec<(BigReal, BigReal)>,
}

impl<'e, 'c> Point<'e, 'c> {
    fn new(env: &'e Env<'c>, params: &IdentityParams, name: &'static str) -> Result<Self> {
        let (p, q) = rational_pq(params, name, true)?;
        let trig = (1..=q).map(|j| cos_sin_2pi((j * p) as i64, q, env.ctx)).collect();
        Ok(Point { env, p, q, trig })
    }

    fn x(&self) -> BigReal {
        self.env.ctx.ratio(self.p as i64, self.q as i64)
    }

    fn one_minus_x(&self) -> BigReal {
        self.env.ctx.ratio((self.q - self.p) as i64, self.q as i64)
    }

    fn j(&self, j: u64) -> BigReal {
        self.env.ctx.ratio(j as i64, self.q as i64)
    }

    /// `Σ_{j=1}^{last} weight_j f(j/q)`, skipping exact zero weights.
    fn sum<F>(&self, last: u64, sine: bool, mut f: F) -> Result<BigReal>
    where
        F: FnMut(u64) -> Result<BigReal>,
    {
        let mut acc = self.env.ctx.zero();
        for j in 1..=last {
            let (c, s) = &self.trig[(j - 1) as usize];
            let w = if sine { s } else { c };
            if w.is_zero() {
                continue;
            }
            acc += &(w * &f(j)?);
        }
        Ok(acc)
    }

    fn big_l(&self) -> BigReal {
        let ctx = self.env.ctx;
        &(&ctx.euler_gamma() + &ctx.log2pi()) + &self.env.ln_int(self.q)
    }

    fn cot(&self) -> Result<BigReal> {
        cot_pi(self.p as i64, self.q, self.env.ctx)
    }

    fn sin_pi_x(&self) -> BigReal {
        sin_pi(self.p as i64, self.q, self.env.ctx)
    }
}

fn open_unit(params: &IdentityParams, name: &'static str) -> Result<crate::identities::Frac> {
    let s = need(params.s, name, "s")?;
    if s.num <= 0 || s.num as u64 >= s.den {
        return Err(Error::Domain {
            function: name,
            reason: "s must lie in (0, 1)",
        });
    }
    Ok(s)
}

fn lck(env: &Env<'_>, params: &IdentityParams, name: &'static str, sine: bool) -> Sides {
    let s = open_unit(params, name)?;
    let pt = Point::new(env, params, name)?;
    let ctx = env.ctx;
    let sr = s.to_real(ctx);
    let one_minus_s = &ctx.one() - &sr;
    let lhs = pt.sum(pt.q, sine, |j| hurwitz_zeta_real(&sr, &pt.j(j), ctx))? * (-(&sr * &env.ln_int(pt.q))).exp();
    let za = hurwitz_zeta_real(&one_minus_s, &pt.x(), ctx)?;
    let zb = hurwitz_zeta_real(&one_minus_s, &pt.one_minus_x(), ctx)?;
    let (bracket, half) = if sine {
        (za - zb, cos_pi(s.num, 2 * s.den, ctx))
    } else {
        (za + zb, sin_pi(s.num, 2 * s.den, ctx))
    };
    let pref = gamma_real(&one_minus_s, ctx)? * (-(&one_minus_s * &ctx.log2pi())).exp();
    Ok((lhs, &(&pref * &half) * &bracket))
}

pub(super) fn lck_real(env: &Env<'_>, params: &IdentityParams) -> Sides {
    lck(env, params, "lck-real", false)
}

pub(super) fn lck_imag(env: &Env<'_>, params: &IdentityParams) -> Sides {
    lck(env, params, "lck-imag", true)
}

pub(super) fn sine_digamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let pt = Point::new(env, params, "prop-6-1")?;
    let ctx = env.ctx;
    let lhs = pt.sum(pt.q, true, |j| digamma(&pt.j(j), ctx))?;
    let rhs = &ctx.pi() * &ctx.ratio(2 * pt.p as i64 - pt.q as i64, 2);
    Ok((lhs, rhs))
}

pub(super) fn cosine_digamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let pt = Point::new(env, params, "prop-6-2")?;
    let ctx = env.ctx;
    let lhs = pt.sum(pt.q, false, |j| digamma(&pt.j(j), ctx))?;
    let rhs = pt.sin_pi_x().mul_int(2).ln().mul_int(pt.q as i64);
    Ok((lhs, rhs))
}

pub(super) fn sine_gamma1(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let pt = Point::new(env, params, "prop-6-3")?;
    let ctx = env.ctx;
    let lhs = pt.sum(pt.q, true, |j| env.stieltjes(1, &pt.j(j)))?;
    let pi = ctx.pi();
    let qi = pt.q as i64;
    let bracket = log_gamma(&pt.x(), ctx)?.mul_int(2) - pi.ln() + pt.sin_pi_x().ln();
    let rhs = (&(&pi * &bracket).mul_int(qi)).div_int(2)
        + &(&pi * &pt.big_l()) * &ctx.ratio(2 * pt.p as i64 - qi, 2);
    Ok((lhs, rhs))
}

pub(super) fn cosine_gamma1(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let pt = Point::new(env, params, "prop-6-4")?;
    let lhs = pt.sum(pt.q, false, |j| env.stieltjes(1, &pt.j(j)))?;
    let qi = pt.q as i64;
    let zdd = env.zd(2, pt.p as i64, pt.q)? + env.zd(2, (pt.q - pt.p) as i64, pt.q)?;
    let rhs = zdd.mul_int(qi).div_int(2) + (&pt.big_l() * &pt.sin_pi_x().mul_int(2).ln()).mul_int(qi);
    Ok((lhs, rhs))
}

pub(super) fn sine_log_gamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let v = variant(params, 2)?;
    let pt = Point::new(env, params, "prop-6-5")?;
    let ctx = env.ctx;
    let lhs = if v == 0 {
        pt.sum(pt.q - 1, true, |j| log_gamma(&pt.j(j), ctx))?
    } else {
        pt.sum(pt.q, true, |j| env.zd(1, j as i64, pt.q))?
    };
    let dg = env.stieltjes(1, &pt.x())? - env.stieltjes(1, &pt.one_minus_x())?;
    let rhs = dg / ctx.pi().mul_int(2) + (&pt.big_l() * &pt.cot()?).div_int(2);
    Ok((lhs, rhs))
}

pub(super) fn cosine_log_gamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let v = variant(params, 2)?;
    let pt = Point::new(env, params, "prop-6-6")?;
    let ctx = env.ctx;
    let sum = pt.sum(pt.q - 1, false, |j| log_gamma(&pt.j(j), ctx))?;
    let psi = digamma(&pt.x(), ctx)?;
    if v == 0 {
        let rhs = -(psi + digamma(&pt.one_minus_x(), ctx)?).div_int(4) - pt.big_l().div_int(2);
        Ok((sum, rhs))
    } else {
        let rhs = -(&ctx.pi() * &pt.cot()?).div_int(2) - pt.big_l() - psi;
        Ok((sum.mul_int(2), rhs))
    }
}

pub(super) fn sine_zeta_dd(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let v = variant(params, 2)?;
    let pt = Point::new(env, params, "prop-6-7")?;
    let ctx = env.ctx;
    let pi = ctx.pi();
    let l = pt.big_l();
    let dg2 = env.stieltjes(2, &pt.x())? - env.stieltjes(2, &pt.one_minus_x())?;
    let cot_coeff = &(&l * &l) + &(&pi * &pi).div_int(12);
    let cot_term = &(&pi * &cot_coeff) * &pt.cot()?;
    let zdd_sum = pt.sum(pt.q, true, |j| env.zd(2, j as i64, pt.q))?;
    if v == 0 {
        let lhs = (&pi * &zdd_sum).mul_int(2);
        let zd_sum = pt.sum(pt.q, true, |j| env.zd(1, j as i64, pt.q))?;
        let rhs = &dg2 + &(&(&pi * &l) * &zd_sum).mul_int(4) - cot_term;
        Ok((lhs, rhs))
    } else {
        let lg_sum = pt.sum(pt.q - 1, true, |j| log_gamma(&pt.j(j), ctx))?;
        let rhs = (&pi * &zdd_sum).mul_int(2) - (&(&pi * &l) * &lg_sum).mul_int(4) + cot_term;
        Ok((dg2, rhs))
    }
}

pub(super) fn gamma0_digamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let (p, q) = rational_pq(params, "gamma0-digamma", false)?;
    let x = env.ctx.ratio(p as i64, q as i64);
    Ok((env.stieltjes(0, &x)?, -digamma(&x, env.ctx)?))
}

pub(super) fn trig_sums(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let v = variant(params, 4)?;
    let pt = Point::new(env, params, "trig-sums")?;
    let ctx = env.ctx;
    let q = pt.q;
    match v {
        0 => Ok((pt.sum(q, true, |_| Ok(ctx.one()))?, ctx.zero())),
        1 => Ok((pt.sum(q, false, |_| Ok(ctx.one()))?, ctx.zero())),
        2 => {
            let lhs = pt.sum(q, true, |j| Ok(ctx.int(j as i64)))?;
            Ok((lhs, -(pt.cot()?.mul_int(q as i64)).div_int(2)))
        }
        _ => {
            let lhs = -pt.sum(q - 1, false, |r| Ok(sin_pi(r as i64, q, ctx).ln()))?;
            let rhs = ctx.pi().ln() + pt.sum(q - 1, false, |r| log_gamma(&pt.j(r), ctx))?.mul_int(2);
            Ok((lhs, rhs))
        }
    }
}

pub(super) fn gauss_digamma(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let v = variant(params, 3)?;
    let pt = Point::new(env, params, "gauss-digamma")?;
    let ctx = env.ctx;
    let psi = digamma(&pt.x(), ctx)?;
    let arg = RationalArg::new(pt.p, pt.q)?;
    let lhs = match v {
        0 => {
            let q = pt.q;
            let mut v = -ctx.euler_gamma() - env.ln_int(2 * q) - (&ctx.pi() * &pt.cot()?).div_int(2);
            v += pt.sum((q - 1) / 2, false, |r| Ok(sin_pi(r as i64, q, ctx).ln()))?.mul_int(2);
            v
        }
        1 => digamma_rational(arg, ctx)?,
        _ => digamma_rational_log_gamma(arg, ctx)?,
    };
    Ok((lhs, psi))
}

pub(super) fn deninger_gamma1(env: &Env<'_>, params: &IdentityParams) -> Sides {
    let pt = Point::new(env, params, "deninger-gamma1")?;
    let ctx = env.ctx;
    let lhs = -env.stieltjes(1, &pt.x())?.mul_int(2);
    let g = ctx.euler_gamma();
    let lq = env.ln_int(pt.q);
    let mut rhs = -env.stieltjes(1, &ctx.one())?.mul_int(2);
    rhs -= (&pt.big_l() * &(&g + &digamma(&pt.x(), ctx)?)).mul_int(2);
    rhs -= pt.sum(pt.q - 1, false, |j| env.zd(2, j as i64, pt.q))?.mul_int(2);
    rhs -= (&ctx.pi() * &pt.sum(pt.q - 1, true, |j| log_gamma(&pt.j(j), ctx))?).mul_int(2);
    rhs -= &lq * &lq;
    rhs -= (&lq * &ctx.log2pi()).mul_int(2);
    Ok((lhs, rhs))
}
