//! Rational interval arithmetic with outward rounding.
//!
//! Endpoints are exact rationals, rounded after each operation to dyadic
//! numbers carrying at least [`PRECISION_BITS`] significant bits, so the true
//! value always lies inside the interval.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub const PRECISION_BITS: u64 = 200;

fn pow2(e: u64) -> BigInt {
    BigInt::one() << e
}

fn magnitude_bits(r: &BigRational) -> i64 {
    r.numer().bits() as i64 - r.denom().bits() as i64
}

fn round_with(r: &BigRational, bits: u64, up: bool) -> BigRational {
    if r.is_zero() {
        return r.clone();
    }
    let e = bits as i64 - magnitude_bits(r) + 1;
    let (num, den) = if e >= 0 {
        (r.numer() << e as u64, r.denom().clone())
    } else {
        (r.numer().clone(), r.denom() << (-e) as u64)
    };
    let (q, rem) = num.div_mod_floor(&den);
    let q = if up && !rem.is_zero() { q + 1 } else { q };
    if e >= 0 {
        BigRational::new(q, pow2(e as u64))
    } else {
        BigRational::from_integer(q * pow2((-e) as u64))
    }
}

/// Largest dyadic with about `bits` significant bits that is `<= r`.
pub fn round_down(r: &BigRational, bits: u64) -> BigRational {
    round_with(r, bits, false)
}

/// Smallest dyadic with about `bits` significant bits that is `>= r`.
pub fn round_up(r: &BigRational, bits: u64) -> BigRational {
    round_with(r, bits, true)
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

pub fn to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        // Very large or very small magnitudes: scale through the exponent.
        let shift = magnitude_bits(r);
        let scaled = if shift >= 0 {
            r / BigRational::from_integer(pow2(shift as u64))
        } else {
            r * BigRational::from_integer(pow2((-shift) as u64))
        };
        scaled.to_f64().unwrap_or(0.0) * 2f64.powi(shift.clamp(i32::MIN as i64, i32::MAX as i64) as i32)
    })
}

/// Closed interval `[lo, hi]` of rationals.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval {
    lo: BigRational,
    hi: BigRational,
    bits: u64,
}

impl Interval {
    pub fn exact(r: BigRational) -> Self {
        Interval {
            lo: r.clone(),
            hi: r,
            bits: PRECISION_BITS,
        }
    }

    pub fn from_integer(n: u64) -> Self {
        Interval::exact(BigRational::from_integer(n.into()))
    }

    fn new(lo: BigRational, hi: BigRational, bits: u64) -> Self {
        debug_assert!(lo <= hi);
        Interval {
            lo: round_down(&lo, bits),
            hi: round_up(&hi, bits),
            bits,
        }
    }

    pub fn with_bits(mut self, bits: u64) -> Self {
        self.bits = bits;
        self
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn is_exact(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, r: &BigRational) -> bool {
        &self.lo <= r && r <= &self.hi
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        self.lo <= other.hi && other.lo <= self.hi
    }

    pub fn midpoint_f64(&self) -> f64 {
        to_f64(&((&self.lo + &self.hi) / BigRational::from_integer(2.into())))
    }

    fn bits_with(&self, other: &Interval) -> u64 {
        self.bits.max(other.bits)
    }

    pub fn add(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo + &other.lo, &self.hi + &other.hi, self.bits_with(other))
    }

    pub fn sub(&self, other: &Interval) -> Interval {
        Interval::new(&self.lo - &other.hi, &self.hi - &other.lo, self.bits_with(other))
    }

    pub fn neg(&self) -> Interval {
        Interval::new(-&self.hi, -&self.lo, self.bits)
    }

    pub fn mul(&self, other: &Interval) -> Interval {
        let products = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = products.iter().min().unwrap().clone();
        let hi = products.iter().max().unwrap().clone();
        Interval::new(lo, hi, self.bits_with(other))
    }

    /// Reciprocal of an interval that excludes zero.
    pub fn recip(&self) -> Interval {
        assert!(
            self.lo.is_positive() || self.hi.is_negative(),
            "reciprocal of an interval containing zero"
        );
        Interval::new(self.hi.recip(), self.lo.recip(), self.bits)
    }

    pub fn div(&self, other: &Interval) -> Interval {
        self.mul(&other.recip())
    }

    pub fn one_minus(&self) -> Interval {
        Interval::from_integer(1).with_bits(self.bits).sub(self)
    }

    /// Integer power of a nonnegative interval by repeated squaring.
    pub fn powu(&self, mut n: u64) -> Interval {
        assert!(!self.lo.is_negative(), "powu expects a nonnegative interval");
        let mut base = self.clone();
        let mut acc = Interval::from_integer(1).with_bits(self.bits);
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `e^x` with directed bounds at each endpoint.
    pub fn exp(&self) -> Interval {
        let (lo, _) = exp_point(&self.lo, self.bits);
        let (_, hi) = exp_point(&self.hi, self.bits);
        Interval::new(lo, hi, self.bits)
    }
}

/// Bounds on `e^r`.
fn exp_point(r: &BigRational, bits: u64) -> (BigRational, BigRational) {
    if r.is_negative() {
        let (lo, hi) = exp_point(&-r, bits);
        return (round_down(&hi.recip(), bits), round_up(&lo.recip(), bits));
    }
    if r.is_zero() {
        return (BigRational::one(), BigRational::one());
    }
    // Reduce to u = r / 2^k <= 1/2, then square k times.
    let k = (magnitude_bits(r) + 2).max(0) as u64;
    let work = bits + 64 + k;
    let scale = BigRational::from_integer(pow2(k));
    let u = r / &scale;
    let (u_lo, u_hi) = (round_down(&u, work), round_up(&u, work));
    let cutoff = BigRational::new(BigInt::one(), pow2(work + 4));
    let (mut sum_lo, mut sum_hi) = (BigRational::one(), BigRational::one());
    let (mut term_lo, mut term_hi) = (BigRational::one(), BigRational::one());
    let mut i = 1u64;
    loop {
        let d = BigRational::from_integer(i.into());
        term_lo = round_down(&(&term_lo * &u_lo / &d), work);
        term_hi = round_up(&(&term_hi * &u_hi / &d), work);
        sum_lo += &term_lo;
        sum_hi += &term_hi;
        if term_hi < cutoff {
            break;
        }
        i += 1;
    }
    // Remaining terms shrink by at least half each step.
    sum_hi += &term_hi * BigRational::from_integer(2.into());
    let (mut lo, mut hi) = (round_down(&sum_lo, work), round_up(&sum_hi, work));
    for _ in 0..k {
        lo = round_down(&(&lo * &lo), work);
        hi = round_up(&(&hi * &hi), work);
    }
    (round_down(&lo, bits), round_up(&hi, bits))
}

/// `base^(num/den)` for `base >= 1`, `den >= 1`, as a rounded interval.
/// Exact when the power is rational.
pub fn rational_power(base: u64, num: i64, den: u64) -> Interval {
    assert!(base >= 1 && den >= 1);
    let positive = power_nonneg(base, num.unsigned_abs(), den);
    if num >= 0 {
        positive
    } else if positive.is_exact() {
        Interval::exact(positive.lo().recip())
    } else {
        positive.recip()
    }
}

fn power_nonneg(base: u64, num: u64, den: u64) -> Interval {
    let bits = PRECISION_BITS;
    let target = BigUint::from(base).pow(num as u32);
    let root = target.nth_root(den as u32);
    if root.pow(den as u32) == target {
        return Interval::exact(BigRational::from_integer(BigInt::from_biguint(Sign::Plus, root)));
    }
    // The value is at least 1, so an absolute error of 2^-w is also relative.
    let w = bits + 8;
    let scaled = &target << (w * den);
    let r = scaled.nth_root(den as u32);
    let denom = pow2(w);
    let lo = BigRational::new(BigInt::from_biguint(Sign::Plus, r.clone()), denom.clone());
    let hi = BigRational::new(BigInt::from_biguint(Sign::Plus, r + 1u32), denom);
    Interval::new(lo, hi, bits)
}
