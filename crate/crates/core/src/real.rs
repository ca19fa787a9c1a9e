//! Arbitrary-precision real and complex scalars.
//!
//! [`BigReal`] wraps an `astro_float::BigFloat` and carries its own binary
//! precision. Binary operations round to the larger of the two operand
//! precisions, so values produced under one [`PrecisionContext`] stay at that
//! context's working precision.
//!
//! Transcendental functions need a constants cache. A small pool of caches is
//! kept behind a spin lock that is held only while a cache is taken out or
//! returned, never while a function is being evaluated.
//!
//! [`PrecisionContext`]: crate::precision::PrecisionContext

use alloc::string::String;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign, Div};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign};
use num_bigint::{BigInt, Sign as IntSign};
use num_rational::BigRational;

use crate::error::{Error, Result};

const RM: RoundingMode = RoundingMode::ToEven;

/// Smallest precision handed to the backend; smaller requests are rounded up.
pub const MIN_BITS: usize = 64;

static CONSTS_POOL: spin::Mutex<Vec<Consts>> = spin::Mutex::new(Vec::new());

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    let taken = CONSTS_POOL.lock().pop();
    let mut cc = match taken {
        Some(cc) => cc,
        None => Consts::new().expect("allocating constants cache"),
    };
    let r = f(&mut cc);
    CONSTS_POOL.lock().push(cc);
    r
}

/// Number of bits needed to hold `digits` decimal digits, plus a small margin.
pub fn digits_to_bits(digits: u32) -> usize {
    let bits = (f64::from(digits) * core::f64::consts::LOG2_10) as usize + 1;
    (bits + 8).max(MIN_BITS)
}

/// An arbitrary-precision real number.
#[derive(Clone)]
pub struct BigReal {
    v: BigFloat,
}

impl BigReal {
    fn wrap(v: BigFloat) -> Self {
        BigReal { v }
    }

    pub fn zero(bits: usize) -> Self {
        Self::from_u64(0, bits)
    }

    pub fn one(bits: usize) -> Self {
        Self::from_u64(1, bits)
    }

    pub fn from_u64(v: u64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_u64(v, bits.max(MIN_BITS)))
    }

    pub fn from_i64(v: i64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_i64(v, bits.max(MIN_BITS)))
    }

    /// Exact conversion of an `f64`, rounded only if `bits` is below 53.
    pub fn from_f64(v: f64, bits: usize) -> Self {
        Self::wrap(BigFloat::from_f64(v, bits.max(MIN_BITS)))
    }

    /// `num / den` rounded to `bits`.
    pub fn from_ratio(num: i64, den: i64, bits: usize) -> Self {
        Self::from_i64(num, bits) / Self::from_i64(den, bits)
    }

    pub fn from_bigint(n: &BigInt, bits: usize) -> Self {
        let digits = n.magnitude().to_u64_digits();
        let exact = 64 * (digits.len() + 1);
        let p = exact.max(bits).max(MIN_BITS);
        let base = BigFloat::from_u64(1u64 << 32, p).mul(&BigFloat::from_u64(1u64 << 32, p), p, RM);
        let mut acc = BigFloat::from_u64(0, p);
        for d in digits.iter().rev() {
            acc = acc.mul(&base, p, RM).add(&BigFloat::from_u64(*d, p), p, RM);
        }
        if n.sign() == IntSign::Minus {
            acc.inv_sign();
        }
        let mut r = Self::wrap(acc);
        r.set_bits(bits);
        r
    }

    pub fn from_rational(r: &BigRational, bits: usize) -> Self {
        Self::from_bigint(r.numer(), bits) / Self::from_bigint(r.denom(), bits)
    }

    /// Parses a decimal string such as `-1.25e-3`.
    pub fn parse(s: &str, bits: usize) -> Result<Self> {
        let t = s.trim();
        if t.is_empty() {
            return Err(Error::Parse(String::from(s)));
        }
        let v = with_consts(|cc| BigFloat::parse(t, Radix::Dec, bits.max(MIN_BITS), RM, cc));
        if v.is_nan() || v.is_inf() {
            return Err(Error::Parse(String::from(s)));
        }
        Ok(Self::wrap(v))
    }

    /// π at `bits` precision.
    pub fn pi(bits: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.pi(bits.max(MIN_BITS), RM)))
    }

    /// ln 2 at `bits` precision.
    pub fn ln2(bits: usize) -> Self {
        Self::wrap(with_consts(|cc| cc.ln_2(bits.max(MIN_BITS), RM)))
    }

    /// Precision in bits.
    pub fn bits(&self) -> usize {
        self.v.mantissa_max_bit_len().unwrap_or(MIN_BITS)
    }

    pub fn set_bits(&mut self, bits: usize) {
        if self.v.is_nan() || self.v.is_inf() {
            return;
        }
        let _ = self.v.set_precision(bits.max(MIN_BITS), RM);
    }

    pub fn with_bits(mut self, bits: usize) -> Self {
        self.set_bits(bits);
        self
    }

    pub fn is_finite(&self) -> bool {
        !(self.v.is_nan() || self.v.is_inf())
    }

    pub fn is_zero(&self) -> bool {
        self.v.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.v.is_zero() && self.v.is_negative()
    }

    /// Ok(self) for finite values, otherwise an error naming `what`.
    pub fn finite(self, what: &'static str) -> Result<Self> {
        if self.is_finite() {
            Ok(self)
        } else {
            Err(Error::NonFinite { what })
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.v.abs())
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.v.reciprocal(self.bits(), RM))
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.v.sqrt(self.bits(), RM))
    }

    pub fn ln(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.v.ln(p, RM, cc)))
    }

    pub fn exp(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.v.exp(p, RM, cc)))
    }

    pub fn sin(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.v.sin(p, RM, cc)))
    }

    pub fn cos(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.v.cos(p, RM, cc)))
    }

    pub fn atan(&self) -> Self {
        let p = self.bits();
        Self::wrap(with_consts(|cc| self.v.atan(p, RM, cc)))
    }

    /// `self^n` for a signed integer exponent.
    pub fn powi(&self, n: i64) -> Self {
        let p = self.bits();
        let m = self.v.powi(n.unsigned_abs() as usize, p, RM);
        if n < 0 {
            Self::wrap(m.reciprocal(p, RM))
        } else {
            Self::wrap(m)
        }
    }

    /// `self^e` for real `e`, with `self > 0`.
    pub fn pow(&self, e: &BigReal) -> Self {
        (e * &self.ln()).exp()
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self * &Self::from_i64(k, self.bits())
    }

    pub fn div_int(&self, k: i64) -> Self {
        self / &Self::from_i64(k, self.bits())
    }

    pub fn floor(&self) -> Self {
        Self::wrap(self.v.floor())
    }

    /// Nearest `f64`, truncating toward zero.
    pub fn to_f64(&self) -> f64 {
        if self.v.is_nan() {
            return f64::NAN;
        }
        if self.v.is_inf() {
            return if self.v.is_negative() { f64::NEG_INFINITY } else { f64::INFINITY };
        }
        if self.v.is_zero() {
            return 0.0;
        }
        let Some((words, _, sign, e, _)) = self.v.as_raw_parts() else {
            return f64::NAN;
        };
        let mut m = 0.0f64;
        for (k, w) in words.iter().rev().take(2).enumerate() {
            m += (*w as f64) * libm::exp2(-64.0 * (k as f64 + 1.0));
        }
        let r = libm::ldexp(m, e);
        if sign == Sign::Neg {
            -r
        } else {
            r
        }
    }

    /// log2 of |self| as an `f64`, valid far outside the `f64` exponent range.
    /// Zero maps to negative infinity.
    pub fn log2_abs(&self) -> f64 {
        if self.v.is_zero() {
            return f64::NEG_INFINITY;
        }
        match self.v.as_raw_parts() {
            Some((words, _, _, e, _)) => {
                let top = words[words.len() - 1] as f64 * libm::exp2(-64.0);
                libm::log2(top) + f64::from(e)
            }
            None => f64::INFINITY,
        }
    }

    /// log10 of |self| as an `f64`.
    pub fn log10_abs(&self) -> f64 {
        self.log2_abs() * core::f64::consts::LOG10_2
    }

    /// Scientific decimal with exactly `digits` significant digits, for
    /// example `5.772e-01`. Rounds half away from zero on the decimal string.
    pub fn to_sci(&self, digits: usize) -> String {
        let digits = digits.max(1);
        if !self.is_finite() {
            return String::from(if self.v.is_nan() { "NaN" } else if self.v.is_negative() { "-inf" } else { "inf" });
        }
        if self.v.is_zero() {
            return format_mantissa(false, &alloc::vec![0u8; digits], 0);
        }
        let raw = with_consts(|cc| self.v.format(Radix::Dec, RM, cc)).unwrap_or_default();
        let (neg, mut ds, mut exp10) = split_decimal(&raw);
        if ds.len() > digits {
            let up = ds[digits] >= 5;
            ds.truncate(digits);
            if up {
                let mut i = digits;
                loop {
                    if i == 0 {
                        ds.insert(0, 1);
                        ds.truncate(digits);
                        exp10 += 1;
                        break;
                    }
                    i -= 1;
                    if ds[i] == 9 {
                        ds[i] = 0;
                    } else {
                        ds[i] += 1;
                        break;
                    }
                }
            }
        } else {
            ds.resize(digits, 0);
        }
        format_mantissa(neg, &ds, exp10)
    }
}

/// Splits astro-float's decimal rendering into sign, significant digits and
/// the power of ten of the first digit. The leading digit is never zero.
fn split_decimal(s: &str) -> (bool, Vec<u8>, i64) {
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s),
    };
    let (mant, exp) = match body.find(['e', 'E']) {
        Some(i) => (&body[..i], body[i + 1..].parse::<i64>().unwrap_or(0)),
        None => (body, 0),
    };
    let (int_part, frac_part) = match mant.find('.') {
        Some(i) => (&mant[..i], &mant[i + 1..]),
        None => (mant, ""),
    };
    let mut ds: Vec<u8> = Vec::with_capacity(int_part.len() + frac_part.len());
    ds.extend(int_part.bytes().map(|b| b - b'0'));
    ds.extend(frac_part.bytes().map(|b| b - b'0'));
    let mut exp10 = exp + int_part.len() as i64 - 1;
    let lead = ds.iter().take_while(|d| **d == 0).count();
    if lead == ds.len() {
        return (neg, alloc::vec![0], 0);
    }
    ds.drain(..lead);
    exp10 -= lead as i64;
    (neg, ds, exp10)
}

fn format_mantissa(neg: bool, ds: &[u8], exp10: i64) -> String {
    use core::fmt::Write;
    let mut out = String::with_capacity(ds.len() + 8);
    if neg {
        out.push('-');
    }
    out.push(char::from(b'0' + ds[0]));
    if ds.len() > 1 {
        out.push('.');
        for d in &ds[1..] {
            out.push(char::from(b'0' + d));
        }
    }
    let sign = if exp10 < 0 { '-' } else { '+' };
    let _ = write!(out, "e{}{:02}", sign, exp10.unsigned_abs());
    out
}

impl fmt::Debug for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = ((self.bits() as f64) * core::f64::consts::LOG10_2) as usize;
        write!(f, "{}", self.to_sci(d.max(1)))
    }
}

impl fmt::Display for BigReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = f.precision().unwrap_or(((self.bits() as f64) * core::f64::consts::LOG10_2) as usize);
        write!(f, "{}", self.to_sci(d.max(1)))
    }
}

impl PartialEq for BigReal {
    fn eq(&self, other: &Self) -> bool {
        self.v.cmp(&other.v) == Some(0)
    }
}

impl PartialOrd for BigReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.v.cmp(&other.v).map(|c| c.cmp(&0))
    }
}

macro_rules! bin_op {
    ($tr:ident, $m:ident, $inner:ident, $atr:ident, $am:ident) => {
        impl<'a, 'b> $tr<&'b BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &'b BigReal) -> BigReal {
                let p = self.bits().max(rhs.bits());
                BigReal::wrap(self.v.$inner(&rhs.v, p, RM))
            }
        }
        impl $tr<BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                (&self).$m(&rhs)
            }
        }
        impl<'b> $tr<&'b BigReal> for BigReal {
            type Output = BigReal;
            fn $m(self, rhs: &'b BigReal) -> BigReal {
                (&self).$m(rhs)
            }
        }
        impl<'a> $tr<BigReal> for &'a BigReal {
            type Output = BigReal;
            fn $m(self, rhs: BigReal) -> BigReal {
                self.$m(&rhs)
            }
        }
        impl<'b> $atr<&'b BigReal> for BigReal {
            fn $am(&mut self, rhs: &'b BigReal) {
                *self = (&*self).$m(rhs);
            }
        }
        impl $atr<BigReal> for BigReal {
            fn $am(&mut self, rhs: BigReal) {
                *self = (&*self).$m(&rhs);
            }
        }
    };
}

bin_op!(Add, add, add, AddAssign, add_assign);
bin_op!(Sub, sub, sub, SubAssign, sub_assign);
bin_op!(Mul, mul, mul, MulAssign, mul_assign);

impl<'a, 'b> Div<&'b BigReal> for &'a BigReal {
    type Output = BigReal;
    fn div(self, rhs: &'b BigReal) -> BigReal {
        let p = self.bits().max(rhs.bits());
        BigReal::wrap(self.v.div(&rhs.v, p, RM))
    }
}

impl Div<BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        &self / &rhs
    }
}

impl<'b> Div<&'b BigReal> for BigReal {
    type Output = BigReal;
    fn div(self, rhs: &'b BigReal) -> BigReal {
        &self / rhs
    }
}

impl<'a> Div<BigReal> for &'a BigReal {
    type Output = BigReal;
    fn div(self, rhs: BigReal) -> BigReal {
        self / &rhs
    }
}

impl Neg for BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(self.v.neg())
    }
}

impl<'a> Neg for &'a BigReal {
    type Output = BigReal;
    fn neg(self) -> BigReal {
        BigReal::wrap(BigFloat::neg(&self.v))
    }
}

impl num_traits::Zero for BigReal {
    fn zero() -> Self {
        BigReal::zero(MIN_BITS)
    }
    fn is_zero(&self) -> bool {
        self.v.is_zero()
    }
}

impl num_traits::One for BigReal {
    fn one() -> Self {
        BigReal::one(MIN_BITS)
    }
}

/// A complex number with [`BigReal`] parts.
#[derive(Clone, Debug, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal) -> Self {
        BigComplex { re, im }
    }

    pub fn from_real(re: BigReal) -> Self {
        let b = re.bits();
        BigComplex { re, im: BigReal::zero(b) }
    }

    pub fn zero(bits: usize) -> Self {
        Self::from_real(BigReal::zero(bits))
    }

    pub fn bits(&self) -> usize {
        self.re.bits().max(self.im.bits())
    }

    pub fn is_finite(&self) -> bool {
        self.re.is_finite() && self.im.is_finite()
    }

    pub fn conj(&self) -> Self {
        BigComplex::new(self.re.clone(), -&self.im)
    }

    pub fn scale(&self, k: &BigReal) -> Self {
        BigComplex::new(&self.re * k, &self.im * k)
    }

    pub fn abs_sq(&self) -> BigReal {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn abs(&self) -> BigReal {
        self.abs_sq().sqrt()
    }

    pub fn recip(&self) -> Self {
        let d = self.abs_sq();
        BigComplex::new(&self.re / &d, -(&self.im / &d))
    }

    /// `e^(i θ)`.
    pub fn cis(theta: &BigReal) -> Self {
        BigComplex::new(theta.cos(), theta.sin())
    }

    pub fn exp(&self) -> Self {
        Self::cis(&self.im).scale(&self.re.exp())
    }

    /// `b^(-self)` given `ln_b = ln b` for a positive real base `b`.
    pub fn neg_pow_of(&self, ln_b: &BigReal) -> Self {
        let mag = (-(&self.re * ln_b)).exp();
        let ang = &self.im * ln_b;
        BigComplex::new(&mag * &ang.cos(), -(&mag * &ang.sin()))
    }

    pub fn mul_real(&self, k: &BigReal) -> Self {
        self.scale(k)
    }

    pub fn add_real(&self, k: &BigReal) -> Self {
        BigComplex::new(&self.re + k, self.im.clone())
    }
}

impl<'a, 'b> Add<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn add(self, rhs: &'b BigComplex) -> BigComplex {
        BigComplex::new(&self.re + &rhs.re, &self.im + &rhs.im)
    }
}

impl<'a, 'b> Sub<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn sub(self, rhs: &'b BigComplex) -> BigComplex {
        BigComplex::new(&self.re - &rhs.re, &self.im - &rhs.im)
    }
}

impl<'a, 'b> Mul<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn mul(self, rhs: &'b BigComplex) -> BigComplex {
        BigComplex::new(
            &self.re * &rhs.re - &self.im * &rhs.im,
            &self.re * &rhs.im + &self.im * &rhs.re,
        )
    }
}

impl<'a, 'b> Div<&'b BigComplex> for &'a BigComplex {
    type Output = BigComplex;
    fn div(self, rhs: &'b BigComplex) -> BigComplex {
        self * &rhs.recip()
    }
}

impl AddAssign<&BigComplex> for BigComplex {
    fn add_assign(&mut self, rhs: &BigComplex) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::new(-&self.re, -&self.im)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    const B: usize = 256;

    #[test]
    fn sci_rounding() {
        let third = BigReal::from_ratio(1, 3, B);
        assert_eq!(third.to_sci(5), "3.3333e-01");
        let two_thirds = BigReal::from_ratio(2, 3, B);
        assert_eq!(two_thirds.to_sci(3), "6.67e-01");
        let big = BigReal::from_i64(-123456, B);
        assert_eq!(big.to_sci(3), "-1.23e+05");
        assert_eq!(BigReal::from_f64(9.9996, B).to_sci(4), "1.000e+01");
        assert_eq!(BigReal::zero(B).to_sci(3), "0.00e+00");
        assert_eq!(BigReal::one(B).to_sci(1), "1e+00");
    }

    #[test]
    fn parse_round_trip() {
        let s = "1.2345678901234567890123456789012345e-07";
        let x = BigReal::parse(s, B).unwrap();
        assert_eq!(x.to_sci(35), s);
        assert!(BigReal::parse("abc", B).is_err());
        assert!(BigReal::parse("", B).is_err());
    }

    #[test]
    fn f64_conversion() {
        for v in [1.0, -2.5, 1.0 / 3.0, 1e-300, 6.02e23, -7.25e-5] {
            assert_eq!(BigReal::from_f64(v, B).to_f64(), v);
        }
        let l = BigReal::from_f64(1e-3, B).log10_abs();
        assert!((l + 3.0).abs() < 1e-12);
    }

    #[test]
    fn bigint_conversion() {
        let n: BigInt = "-123456789012345678901234567890123456789".parse().unwrap();
        let x = BigReal::from_bigint(&n, B);
        assert_eq!(x.to_sci(39), "-1.23456789012345678901234567890123456789e+38");
    }

    #[test]
    fn constants_and_functions() {
        let pi = BigReal::pi(B);
        assert!(pi.to_sci(25).starts_with("3.1415926535897932384"));
        let e = BigReal::one(B).exp();
        assert_eq!(e.ln().to_sci(60), BigReal::one(B).to_sci(60));
        let s = (&pi / &BigReal::from_i64(6, B)).sin();
        assert_eq!(s.to_sci(60), BigReal::from_ratio(1, 2, B).to_sci(60));
        assert_eq!(BigReal::from_i64(2, B).powi(-3).to_sci(10), "1.250000000e-01");
        assert!(BigReal::from_i64(-1, B).ln().to_string() == "NaN");
    }

    #[test]
    fn complex_power() {
        let l = BigReal::from_i64(3, B).ln();
        let s = BigComplex::new(BigReal::from_i64(2, B), BigReal::zero(B));
        let r = s.neg_pow_of(&l);
        assert_eq!(r.re.to_sci(50), BigReal::from_ratio(1, 9, B).to_sci(50));
        assert!(r.im.is_zero() || r.im.log10_abs() < -60.0);
    }
}
