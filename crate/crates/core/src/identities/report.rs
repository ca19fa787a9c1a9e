use alloc::string::String;
use core::fmt;

use crate::error::{Error, Result};
use crate::precision::PrecisionContext;
use crate::real::BigReal;

/// An exact rational `num/den` used for identity parameters such as `s` and `x`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Frac {
    pub num: i64,
    pub den: u64,
}

impl Frac {
    pub const fn new(num: i64, den: u64) -> Self {
        Frac { num, den }
    }

    pub fn to_real(self, ctx: &PrecisionContext) -> BigReal {
        ctx.ratio(self.num, self.den as i64)
    }

    pub fn to_f64(self) -> f64 {
        self.num as f64 / self.den as f64
    }

    /// Parses `a/b`, an integer, or a terminating decimal such as `-2.5`.
    pub fn parse(s: &str) -> Result<Self> {
        let bad = || Error::Parse(String::from(s));
        let t = s.trim();
        if let Some((a, b)) = t.split_once('/') {
            let num: i64 = a.trim().parse().map_err(|_| bad())?;
            let den: u64 = b.trim().parse().map_err(|_| bad())?;
            if den == 0 {
                return Err(bad());
            }
            return Ok(Frac { num, den }.reduced());
        }
        let (neg, body) = match t.strip_prefix('-') {
            Some(b) => (true, b),
            None => (false, t.strip_prefix('+').unwrap_or(t)),
        };
        let (int_part, frac_part) = body.split_once('.').unwrap_or((body, ""));
        if int_part.is_empty() && frac_part.is_empty() {
            return Err(bad());
        }
        if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) || frac_part.len() > 18 {
            return Err(bad());
        }
        let den = 10u64.pow(frac_part.len() as u32);
        let ip: i64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(|_| bad())? };
        let fp: i64 = if frac_part.is_empty() { 0 } else { frac_part.parse().map_err(|_| bad())? };
        let num = ip.checked_mul(den as i64).and_then(|v| v.checked_add(fp)).ok_or_else(bad)?;
        Ok(Frac {
            num: if neg { -num } else { num },
            den,
        }
        .reduced())
    }

    fn reduced(self) -> Self {
        let g = num_integer::gcd(self.num.unsigned_abs(), self.den).max(1);
        Frac {
            num: self.num / g as i64,
            den: self.den / g,
        }
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

/// Parameters of one identity evaluation. Unused fields stay `None`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IdentityParams {
    pub n: Option<u32>,
    pub p: Option<u64>,
    pub q: Option<u64>,
    pub s: Option<Frac>,
    pub x: Option<Frac>,
    /// Sub-case selector for identities that bundle several related checks.
    pub variant: Option<u32>,
    /// Number of series terms, where an identity truncates one.
    pub terms: Option<u64>,
    /// Decimal rendering of an `x` that is not a simple fraction.
    pub x_decimal: Option<String>,
}

impl fmt::Display for IdentityParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut fmt::Formatter<'_>| -> fmt::Result {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            Ok(())
        };
        if let Some(n) = self.n {
            sep(f)?;
            write!(f, "n={n}")?;
        }
        if let Some(p) = self.p {
            sep(f)?;
            write!(f, "p={p}")?;
        }
        if let Some(q) = self.q {
            sep(f)?;
            write!(f, "q={q}")?;
        }
        if let Some(s) = self.s {
            sep(f)?;
            write!(f, "s={s}")?;
        }
        if let Some(x) = self.x {
            sep(f)?;
            write!(f, "x={x}")?;
        }
        if let Some(x) = &self.x_decimal {
            sep(f)?;
            write!(f, "x={x}")?;
        }
        if let Some(v) = self.variant {
            sep(f)?;
            write!(f, "variant={v}")?;
        }
        if let Some(t) = self.terms {
            sep(f)?;
            write!(f, "terms={t}")?;
        }
        Ok(())
    }
}

/// Outcome of evaluating both sides of an identity.
#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub params: IdentityParams,
    pub lhs: BigReal,
    pub rhs: BigReal,
    pub residual: BigReal,
    pub tolerance: BigReal,
    pub pass: bool,
}

impl IdentityReport {
    /// Builds a report with `residual = |lhs - rhs|` and `pass ⇔ residual < tolerance`.
    pub fn new(name: String, params: IdentityParams, lhs: BigReal, rhs: BigReal, tolerance: BigReal) -> Self {
        let residual = (&lhs - &rhs).abs();
        let pass = residual.is_finite() && residual < tolerance;
        IdentityReport {
            name,
            params,
            lhs,
            rhs,
            residual,
            tolerance,
            pass,
        }
    }
}
