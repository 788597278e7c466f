//! Palette sizing, the local-lemma weight system, the resampling colorer and
//! the exact certificate checker.

mod asymptotic;
mod certificate;
mod resample;

pub use asymptotic::{asymptotic_inequality_report, InequalityCheck, InequalityReport};
pub use certificate::{
    lll_certificate_exact, CertificateReport, EventFamily, FamilyReport, CERTIFICATE_MAX_M,
    CERTIFICATE_MAX_VERTICES,
};
pub use resample::{moser_tardos, Resampler, RunResult, Step};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::precise::{rational_power, Interval};

/// Largest denominator accepted for the palette constant.
pub const MAX_CONSTANT_DENOMINATOR: u64 = 1_000_000;

/// Nonnegative rational constant, kept in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct Constant {
    num: u64,
    den: u64,
}

impl Constant {
    pub fn new(num: u64, den: u64) -> Result<Self> {
        if den == 0 {
            return Err(Error::InvalidParameter("zero denominator".into()));
        }
        let g = num.gcd(&den).max(1);
        Ok(Constant {
            num: num / g,
            den: den / g,
        })
    }

    pub fn integer(n: u64) -> Self {
        Constant { num: n, den: 1 }
    }

    pub fn numer(&self) -> u64 {
        self.num
    }

    pub fn denom(&self) -> u64 {
        self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num == 0
    }

    pub fn to_rational(&self) -> BigRational {
        BigRational::new(BigInt::from(self.num), BigInt::from(self.den))
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

impl FromStr for Constant {
    type Err = Error;

    /// Accepts `7`, `3/2` or `0.25`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("cannot parse constant {s:?}"));
        let int = |t: &str| -> Result<u64> {
            if t.is_empty() || !t.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            t.parse().map_err(|_| bad())
        };
        if let Some((a, b)) = s.split_once('/') {
            Constant::new(int(a)?, int(b)?)
        } else if let Some((a, b)) = s.split_once('.') {
            let frac = if b.is_empty() { 0 } else { int(b)? };
            let den = 10u64.checked_pow(b.len() as u32).ok_or_else(bad)?;
            let whole = if a.is_empty() { 0 } else { int(a)? };
            let num = whole.checked_mul(den).and_then(|w| w.checked_add(frac)).ok_or_else(bad)?;
            Constant::new(num, den)
        } else {
            Ok(Constant::integer(int(s)?))
        }
    }
}

impl From<Constant> for String {
    fn from(c: Constant) -> String {
        c.to_string()
    }
}

impl TryFrom<String> for Constant {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Smallest `s` with `s >= C·Δ^((m+1)/m)`, and at least `Δ + 1`.
///
/// With `C = r/q`, this is the least `s` with `(s·q)^m >= r^m·Δ^(m+1)`,
/// found with an exact integer root.
pub fn palette_size(m: usize, delta: usize, c: Constant) -> Result<u64> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if delta == 0 {
        return Err(Error::InvalidParameter("delta must be at least 1".into()));
    }
    if c.is_zero() {
        return Err(Error::InvalidParameter("palette constant must be positive".into()));
    }
    if c.den > MAX_CONSTANT_DENOMINATOR {
        return Err(Error::InvalidParameter(format!(
            "constant denominator {} exceeds {MAX_CONSTANT_DENOMINATOR}",
            c.den
        )));
    }
    let m32 = m as u32;
    let target = BigUint::from(c.num).pow(m32) * BigUint::from(delta).pow(m32 + 1);
    let root = target.nth_root(m32);
    let root = if root.pow(m32) == target {
        root
    } else {
        root + BigUint::one()
    };
    let s = Integer::div_ceil(&root, &BigUint::from(c.den));
    let s = s
        .to_u64()
        .ok_or_else(|| Error::InvalidParameter("palette size overflows 64 bits".into()))?;
    Ok(s.max(delta as u64 + 1))
}

/// `base^exponent` with a rational exponent, kept symbolic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub base: u64,
    pub exponent_num: i64,
    pub exponent_den: u64,
}

impl Weight {
    fn new(base: u64, num: i64, den: u64) -> Self {
        let g = (num.unsigned_abs()).gcd(&den).max(1);
        Weight {
            base,
            exponent_num: num / g as i64,
            exponent_den: den / g,
        }
    }

    /// Exact value when the power is rational (for instance `16^(-3/2)`).
    pub fn exact(&self) -> Option<BigRational> {
        let i = self.interval();
        i.is_exact().then(|| i.lo().clone())
    }

    /// Value at 200-bit precision (exact when possible).
    pub fn interval(&self) -> Interval {
        rational_power(self.base, self.exponent_num, self.exponent_den)
    }

    pub fn approx(&self) -> f64 {
        (self.base as f64).powf(self.exponent_num as f64 / self.exponent_den as f64)
    }
}

/// The weight system for one `(m, Δ, s)`.
#[derive(Clone, Debug, PartialEq)]
pub struct LllParameters {
    pub m: usize,
    pub delta: usize,
    pub palette_size: u64,
    /// `1/s`.
    pub p: BigRational,
    /// `1/Δ`, for monochromatic edges.
    pub x: Weight,
    /// `Δ^(-(t-1)(m+1)/m)` for `t` in `2..=m`, for special tuples.
    pub y: BTreeMap<usize, Weight>,
    /// `Δ^(-(k-2)(m+1)/m)` for `k` in `3..=m+2`, for `k`-vertex sets.
    pub z: BTreeMap<usize, Weight>,
}

pub fn lll_values(m: usize, delta: usize, s: u64) -> Result<LllParameters> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be positive".into()));
    }
    if delta < 2 {
        return Err(Error::InvalidParameter(format!(
            "weights are defined only for max degree >= 2, got {delta}"
        )));
    }
    if s == 0 {
        return Err(Error::InvalidParameter("palette size must be positive".into()));
    }
    let base = delta as u64;
    let (mi, mu) = (m as i64, m as u64);
    Ok(LllParameters {
        m,
        delta,
        palette_size: s,
        p: BigRational::new(BigInt::one(), BigInt::from(s)),
        x: Weight::new(base, -1, 1),
        y: (2..=m)
            .map(|t| (t, Weight::new(base, -((t as i64 - 1) * (mi + 1)), mu)))
            .collect(),
        z: (3..=m + 2)
            .map(|k| (k, Weight::new(base, -((k as i64 - 2) * (mi + 1)), mu)))
            .collect(),
    })
}

impl LllParameters {
    pub fn p_interval(&self) -> Interval {
        Interval::exact(self.p.clone())
    }

    pub fn all_weights_in_unit_interval(&self) -> bool {
        let zero = BigRational::zero();
        let one = BigRational::one();
        std::iter::once(&self.x)
            .chain(self.y.values())
            .chain(self.z.values())
            .map(Weight::interval)
            .all(|i| i.lo() > &zero && i.hi() < &one)
    }
}
