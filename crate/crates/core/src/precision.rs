//! Precision policy, rational arguments, Bernoulli numbers and the
//! fundamental constants every other module consumes.
//!
//! | quantity        | policy                                        |
//! |-----------------|-----------------------------------------------|
//! | guard digits    | `max(20, ceil(target / 4))`                   |
//! | working digits  | `target + guard`                              |
//! | binary precision| `ceil(working * log2 10) + 8` bits            |
//! | tolerance       | `10^-(target - 5)`, exponent at least 1       |

use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::real::{digits_to_bits, BigReal};

/// Number of digits the tolerance sits above the target precision.
pub const TOLERANCE_SLACK: u32 = 5;

/// Minimum number of guard digits.
pub const MIN_GUARD_DIGITS: u32 = 20;

#[derive(Clone, Default)]
pub(crate) struct Caches {
    pub(crate) euler_gamma: Option<BigReal>,
    pub(crate) pi: Option<BigReal>,
    pub(crate) log2pi: Option<BigReal>,
    pub(crate) zeta: Vec<Option<BigReal>>,
    pub(crate) rings: Vec<crate::hurwitz::RingEntry>,
}

/// Precision settings plus memoized constants for one target accuracy.
///
/// Cloning copies the memo tables; clones never share state afterwards.
pub struct PrecisionContext {
    target_digits: u32,
    guard_digits: u32,
    working_digits: u32,
    bits: usize,
    tolerance: BigReal,
    pub(crate) caches: spin::Mutex<Caches>,
}

impl Clone for PrecisionContext {
    fn clone(&self) -> Self {
        PrecisionContext {
            target_digits: self.target_digits,
            guard_digits: self.guard_digits,
            working_digits: self.working_digits,
            bits: self.bits,
            tolerance: self.tolerance.clone(),
            caches: spin::Mutex::new(self.caches.lock().clone()),
        }
    }
}

impl core::fmt::Debug for PrecisionContext {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("PrecisionContext")
            .field("target_digits", &self.target_digits)
            .field("guard_digits", &self.guard_digits)
            .field("working_digits", &self.working_digits)
            .field("bits", &self.bits)
            .finish()
    }
}

/// Builds the context for `target_digits` decimal digits.
pub fn make_context(target_digits: u32) -> Result<PrecisionContext> {
    if target_digits == 0 {
        return Err(Error::ZeroDigits);
    }
    let guard = MIN_GUARD_DIGITS.max(target_digits.div_ceil(4));
    Ok(PrecisionContext::with_digits(target_digits, guard))
}

impl PrecisionContext {
    fn with_digits(target_digits: u32, guard_digits: u32) -> Self {
        let working_digits = target_digits + guard_digits;
        let bits = digits_to_bits(working_digits);
        let tol_exp = target_digits.saturating_sub(TOLERANCE_SLACK).max(1);
        let tolerance = BigReal::from_u64(10, bits).powi(-i64::from(tol_exp));
        PrecisionContext {
            target_digits,
            guard_digits,
            working_digits,
            bits,
            tolerance,
            caches: spin::Mutex::new(Caches::default()),
        }
    }

    /// A context with the same target but at least `working` working digits.
    pub fn elevated(&self, working: u32) -> PrecisionContext {
        if working <= self.working_digits {
            return self.clone();
        }
        Self::with_digits(self.target_digits, working - self.target_digits)
    }

    pub fn target_digits(&self) -> u32 {
        self.target_digits
    }

    pub fn guard_digits(&self) -> u32 {
        self.guard_digits
    }

    pub fn working_digits(&self) -> u32 {
        self.working_digits
    }

    /// Binary precision of every value created under this context.
    pub fn bits(&self) -> usize {
        self.bits
    }

    pub fn tolerance(&self) -> &BigReal {
        &self.tolerance
    }

    /// Decimal exponent of the tolerance, so `tolerance = 10^-tolerance_exponent()`.
    pub fn tolerance_exponent(&self) -> u32 {
        self.target_digits.saturating_sub(TOLERANCE_SLACK).max(1)
    }

    /// `10^-working_digits`: the size below which truncated series terms are dropped.
    pub fn epsilon(&self) -> BigReal {
        self.int(10).powi(-i64::from(self.working_digits))
    }

    pub fn int(&self, v: i64) -> BigReal {
        BigReal::from_i64(v, self.bits)
    }

    pub fn ratio(&self, num: i64, den: i64) -> BigReal {
        BigReal::from_ratio(num, den, self.bits)
    }

    pub fn zero(&self) -> BigReal {
        BigReal::zero(self.bits)
    }

    pub fn one(&self) -> BigReal {
        BigReal::one(self.bits)
    }

    pub fn rational(&self, r: &BigRational) -> BigReal {
        BigReal::from_rational(r, self.bits)
    }

    pub fn parse(&self, s: &str) -> Result<BigReal> {
        BigReal::parse(s, self.bits)
    }

    pub fn pi(&self) -> BigReal {
        if let Some(v) = &self.caches.lock().pi {
            return v.clone();
        }
        let v = BigReal::pi(self.bits);
        self.caches.lock().pi = Some(v.clone());
        v
    }

    /// `ln(2π)`.
    pub fn log2pi(&self) -> BigReal {
        if let Some(v) = &self.caches.lock().log2pi {
            return v.clone();
        }
        let v = (self.pi().mul_int(2)).ln();
        self.caches.lock().log2pi = Some(v.clone());
        v
    }

    pub fn euler_gamma(&self) -> BigReal {
        if let Some(v) = &self.caches.lock().euler_gamma {
            return v.clone();
        }
        let v = brent_mcmillan_gamma(self);
        self.caches.lock().euler_gamma = Some(v.clone());
        v
    }

    /// ζ(k) for integer `k >= 2`.
    pub fn zeta_int(&self, k: u32) -> Result<BigReal> {
        if k < 2 {
            return Err(Error::Domain {
                function: "zeta_int",
                reason: "k must be at least 2",
            });
        }
        let idx = k as usize;
        {
            let c = self.caches.lock();
            if let Some(Some(v)) = c.zeta.get(idx) {
                return Ok(v.clone());
            }
        }
        let v = crate::hurwitz::zeta_real_int(k, &self.one(), self)?;
        let mut c = self.caches.lock();
        if c.zeta.len() <= idx {
            c.zeta.resize(idx + 1, None);
        }
        c.zeta[idx] = Some(v.clone());
        Ok(v)
    }

    /// Formats `v` with `target_digits` significant digits.
    pub fn fmt(&self, v: &BigReal) -> alloc::string::String {
        v.to_sci(self.target_digits as usize)
    }
}

/// Euler's constant by the Brent–McMillan Bessel-function formula.
fn brent_mcmillan_gamma(ctx: &PrecisionContext) -> BigReal {
    let w = f64::from(ctx.working_digits());
    let n = (w * core::f64::consts::LN_10 / 4.0).ceil() as i64 + 2;
    let nn = ctx.int(n * n);
    let mut b = ctx.one();
    let mut a = -ctx.int(n).ln();
    let mut sum_a = a.clone();
    let mut sum_b = b.clone();
    let eps = ctx.epsilon();
    let mut k = 1i64;
    loop {
        b = (&b * &nn).div_int(k * k);
        a = ((&a * &nn).div_int(k) + &b).div_int(k);
        sum_a += &a;
        sum_b += &b;
        if k > n && b < &eps * &sum_b && a.abs() < &eps * &sum_b {
            break;
        }
        k += 1;
    }
    sum_a / sum_b
}

/// Euler's constant γ to the context's working precision.
pub fn euler_gamma(ctx: &PrecisionContext) -> BigReal {
    ctx.euler_gamma()
}

/// ζ(k) for integer `k >= 2`.
pub fn zeta_int(k: u32, ctx: &PrecisionContext) -> Result<BigReal> {
    ctx.zeta_int(k)
}

static BERNOULLI: spin::RwLock<Vec<BigRational>> = spin::RwLock::new(Vec::new());

/// Bernoulli number B_n with B_1 = -1/2, memoized.
pub fn bernoulli(n: usize) -> BigRational {
    if let Some(b) = BERNOULLI.read().get(n) {
        return b.clone();
    }
    let mut table = BERNOULLI.write();
    if table.is_empty() {
        table.push(BigRational::one());
    }
    while table.len() <= n {
        let m = table.len();
        if m > 1 && m % 2 == 1 {
            table.push(BigRational::zero());
            continue;
        }
        // B_m = -1/(m+1) Σ_{k<m} C(m+1, k) B_k
        let mut sum = BigRational::zero();
        let mut c = BigInt::one();
        for (k, bk) in table.iter().enumerate() {
            if !bk.is_zero() {
                sum += bk * BigRational::from_integer(c.clone());
            }
            c = c * BigInt::from(m + 1 - k) / BigInt::from(k + 1);
        }
        table.push(-sum / BigRational::from_integer(BigInt::from(m + 1)));
    }
    table[n].clone()
}

/// A positive rational `p/q` with `1 <= p <= q`, stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RationalArg {
    p: u64,
    q: u64,
}

impl RationalArg {
    pub fn new(p: u64, q: u64) -> Result<Self> {
        if p == 0 || q == 0 || p > q {
            return Err(Error::InvalidRational { p, q });
        }
        let g = p.gcd(&q);
        Ok(RationalArg { p: p / g, q: q / g })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// True when `p < q`, the condition for `cot(pπ/q)` to be finite.
    pub fn is_proper(&self) -> bool {
        self.p < self.q
    }

    pub fn to_real(&self, ctx: &PrecisionContext) -> BigReal {
        ctx.ratio(self.p as i64, self.q as i64)
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.p), BigInt::from(self.q))
    }
}

impl core::fmt::Display for RationalArg {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}/{}", self.p, self.q)
    }
}

/// Binomial coefficient `C(n, k)` as an exact integer.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut c = BigInt::one();
    for i in 0..k {
        c = c * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    c
}

/// `n!` as an exact integer.
pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}
