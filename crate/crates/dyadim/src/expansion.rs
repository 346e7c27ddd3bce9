//! The base-two expansion map, its digits, and the cylinder intervals they
//! address — all in exact rational arithmetic.
//!
//! A point `x ∈ (0,1]` determines digits `d₁, d₂, …` (each ≥ 1) through the
//! piecewise-linear expanding map
//!
//! ```text
//! T x = 2ⁿ x − 1    for x in the branch (2^{-n}, 2^{-(n-1)}],
//! ```
//!
//! where `d_i` is the branch number used at step `i`. Partial sums
//! `Σ_{i≤n} 2^{-(d₁+⋯+d_i)}` approach `x` from below, and the set of points
//! sharing a digit prefix is a half-open interval (a *cylinder*).
//!
//! Digits are defined by branch membership, not by the ceiling formula
//! `⌈−log₂ x⌉`; the two disagree exactly at the dyadic points `x = 2^{-t}`,
//! where the ceiling formula would assign a digit whose tail series cannot
//! converge (`d₁(1/2) = 1` would force the remaining digits to contribute
//! zero). Branch membership keeps `T` a map from `(0,1]` onto `(0,1]` and
//! makes the expansion identity hold for every rational.
//!
//! Everything here is exact: inputs and outputs are arbitrary-precision
//! rationals, and iterating `T` never grows a denominator (for `x = p/q` the
//! image is `(2ⁿp − q)/q`), so deep digit prefixes of rationals stay cheap.
//! Floating-point enters only through explicit conversion helpers.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Errors from expansion-domain violations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ExpansionError {
    /// The point lies outside the domain of the expansion.
    #[error("value {0} is outside the expansion domain (0, 1]")]
    OutOfDomain(String),
    /// A digit prefix operation needs at least one digit.
    ///
    /// There is deliberately no "empty cylinder = (0,1]" convention; callers
    /// that mean the whole interval should say so explicitly.
    #[error("digit prefix must contain at least one digit")]
    EmptyPrefix,
    /// Digits are natural numbers starting at 1.
    #[error("digit at position {position} is 0; digits must be >= 1")]
    ZeroDigit {
        /// 1-based position of the offending digit.
        position: usize,
    },
    /// Inverse branches are indexed by digits ≥ 1.
    #[error("branch index must be >= 1")]
    ZeroBranch,
}

/// An exact rational point of `(0, 1]`, the domain of the expansion.
///
/// The inner representation is always a reduced fraction with positive
/// numerator and denominator. Construction checks the domain; arithmetic
/// that stays inside `(0,1]` by mathematical necessity (like [`apply_t`])
/// skips the re-check.
///
/// [`apply_t`]: UnitRational::apply_t
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct UnitRational(BigRational);

impl UnitRational {
    /// Wraps a rational after checking `0 < r ≤ 1`.
    pub fn new(r: BigRational) -> Result<Self, ExpansionError> {
        if r.is_positive() && r <= BigRational::one() {
            Ok(UnitRational(r))
        } else {
            Err(ExpansionError::OutOfDomain(r.to_string()))
        }
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64(numer: u64, denom: u64) -> Result<Self, ExpansionError> {
        if denom == 0 {
            return Err(ExpansionError::OutOfDomain("n/0".into()));
        }
        Self::new(BigRational::new(numer.into(), denom.into()))
    }

    /// The fixed point `x = 1`, whose digits are all 1.
    pub fn one() -> Self {
        UnitRational(BigRational::one())
    }

    /// Wraps without a domain check; caller must guarantee `0 < r ≤ 1`.
    pub(crate) fn new_unchecked(r: BigRational) -> Self {
        debug_assert!(r.is_positive() && r <= BigRational::one());
        UnitRational(r)
    }

    /// Borrows the underlying reduced fraction.
    pub fn as_ratio(&self) -> &BigRational {
        &self.0
    }

    /// Unwraps into the underlying reduced fraction.
    pub fn into_ratio(self) -> BigRational {
        self.0
    }

    /// Nearest `f64`, correctly rounded.
    pub fn to_f64(&self) -> f64 {
        // num-rational's conversion rounds to nearest-even with full
        // precision regardless of operand size.
        self.0.to_f64().unwrap_or(0.0)
    }

    /// The first digit: the unique `n ≥ 1` with `2^{-n} < x ≤ 2^{-(n-1)}`.
    ///
    /// Equivalently, the smallest `n` with `p·2ⁿ > q` for `x = p/q`.
    pub fn first_digit(&self) -> u32 {
        let p = self.0.numer().magnitude();
        let q = self.0.denom().magnitude();
        // p·2ⁿ first exceeds q at n = (bit gap) or (bit gap + 1).
        let gap = (q.bits() - p.bits()) as u32;
        if p << gap > *q {
            gap.max(1)
        } else {
            gap + 1
        }
    }

    /// One step of the expansion map: `T x = 2ⁿ x − 1` with `n` the first
    /// digit. Maps `(0,1]` onto `(0,1]` and never grows the denominator.
    pub fn apply_t(&self) -> UnitRational {
        let n = self.first_digit();
        let two_n_x = BigRational::new_raw(self.0.numer() << n, self.0.denom().clone());
        // 2ⁿx ∈ (1, 2] on the n-th branch, so the result is back in (0, 1].
        // `new` re-reduces: 2ⁿp − q need not be coprime to q.
        UnitRational::new_unchecked(BigRational::new(
            two_n_x.numer() - two_n_x.denom(),
            self.0.denom().clone(),
        ))
    }

    /// The first `n` digits of the expansion, by iterating [`first_digit`] /
    /// [`apply_t`]. Exact for every rational input.
    ///
    /// [`first_digit`]: UnitRational::first_digit
    /// [`apply_t`]: UnitRational::apply_t
    pub fn digit_prefix(&self, n: usize) -> DigitPrefix {
        let mut digits = Vec::with_capacity(n);
        let mut x = self.clone();
        for _ in 0..n {
            digits.push(x.first_digit());
            x = x.apply_t();
        }
        DigitPrefix { digits }
    }

    /// The inverse branch `T_i(x) = (x + 1) / 2^i`, the contraction that
    /// prepends digit `i`: `first_digit(T_i y) = i` and `T(T_i y) = y`.
    pub fn branch_inverse(&self, i: u32) -> Result<UnitRational, ExpansionError> {
        if i == 0 {
            return Err(ExpansionError::ZeroBranch);
        }
        let num = self.0.numer() + self.0.denom();
        Ok(UnitRational::new_unchecked(BigRational::new(
            num,
            self.0.denom() << i,
        )))
    }
}

impl core::fmt::Display for UnitRational {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite digit sequence `(d₁, …, d_n)`, every entry ≥ 1.
///
/// This is the combinatorial address of a cylinder interval; the empty
/// prefix is representable (it is what [`UnitRational::digit_prefix`] with
/// `n = 0` returns) but carries no cylinder or value.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DigitPrefix {
    digits: Vec<u32>,
}

impl DigitPrefix {
    /// Builds a prefix, rejecting zero digits.
    pub fn new(digits: Vec<u32>) -> Result<Self, ExpansionError> {
        if let Some(pos) = digits.iter().position(|&d| d == 0) {
            return Err(ExpansionError::ZeroDigit { position: pos + 1 });
        }
        Ok(DigitPrefix { digits })
    }

    /// The digits as a slice.
    pub fn digits(&self) -> &[u32] {
        &self.digits
    }

    /// Number of digits.
    pub fn len(&self) -> usize {
        self.digits.len()
    }

    /// Whether the prefix has no digits.
    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    /// `d₁ + ⋯ + d_n`, the scale exponent of the prefix's cylinder.
    pub fn digit_sum(&self) -> u64 {
        self.digits.iter().map(|&d| u64::from(d)).sum()
    }

    /// The exact partial sum `Σ_{i=1}^{n} 2^{-(d₁+⋯+d_i)}`.
    ///
    /// Computed incrementally: with `S_i = d₁+⋯+d_i`, the numerator over
    /// `2^{S_i}` satisfies `N_i = N_{i-1}·2^{d_i} + 1`, which is always odd,
    /// so the result is already in lowest terms.
    pub fn prefix_value(&self) -> Result<UnitRational, ExpansionError> {
        if self.digits.is_empty() {
            return Err(ExpansionError::EmptyPrefix);
        }
        let (num, sum) = self.value_parts();
        Ok(UnitRational::new_unchecked(BigRational::new_raw(
            num.into(),
            BigInt::from(BigUint::one() << sum),
        )))
    }

    /// Numerator and scale exponent of the prefix value: `(N, S)` with
    /// `prefix_value = N / 2^S`, `N` odd.
    pub(crate) fn value_parts(&self) -> (BigUint, u64) {
        let mut num = BigUint::zero();
        let mut sum: u64 = 0;
        for &d in &self.digits {
            num = (num << d) + 1u32;
            sum += u64::from(d);
        }
        (num, sum)
    }

    /// The cylinder interval of all `x` whose expansion starts with this
    /// prefix.
    pub fn cylinder(&self) -> Result<Cylinder, ExpansionError> {
        let left = self.prefix_value()?;
        Ok(Cylinder {
            left: left.into_ratio(),
            log2_len: self.digit_sum(),
        })
    }
}

impl core::fmt::Display for DigitPrefix {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        for (i, d) in self.digits.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

/// The half-open interval `(left, left + 2^{-S}]` of points whose expansion
/// begins with a given prefix of digit sum `S`.
///
/// Cylinders of distinct equal-length prefixes are disjoint, and the
/// interval equals the image of `(0,1]` under the composition
/// `T_{d₁} ∘ ⋯ ∘ T_{d_n}` of inverse branches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cylinder {
    left: BigRational,
    log2_len: u64,
}

impl Cylinder {
    /// Left endpoint (excluded from the interval).
    pub fn left(&self) -> &BigRational {
        &self.left
    }

    /// Interval length, exactly `2^{-S}` for digit sum `S`.
    pub fn length(&self) -> BigRational {
        BigRational::new_raw(BigInt::one(), BigInt::from(BigUint::one() << self.log2_len))
    }

    /// The scale exponent `S`: the length is `2^{-S}`.
    pub fn log2_length(&self) -> u64 {
        self.log2_len
    }

    /// Right endpoint (included in the interval).
    pub fn right(&self) -> BigRational {
        &self.left + self.length()
    }

    /// Exact midpoint `left + 2^{-S-1}`.
    pub fn midpoint(&self) -> BigRational {
        &self.left
            + BigRational::new_raw(
                BigInt::one(),
                BigInt::from(BigUint::one() << (self.log2_len + 1)),
            )
    }

    /// Midpoint as the nearest `f64`.
    ///
    /// For prefixes with digit sum beyond f64 range this underflows toward
    /// the left endpoint's magnitude; estimator code working at such depths
    /// should use log-scale quantities instead of point floats.
    pub fn midpoint_f64(&self) -> f64 {
        self.midpoint().to_f64().unwrap_or(0.0)
    }

    /// Interval membership: `left < x ≤ right`.
    pub fn contains(&self, x: &UnitRational) -> bool {
        *x.as_ratio() > self.left && *x.as_ratio() <= self.right()
    }
}
