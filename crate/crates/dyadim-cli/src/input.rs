//! Parsing points of (0, 1]: exact fractions, and decimals rounded onto a
//! dyadic grid.
//!
//! Fractions `"p/q"` stay exact. Decimals like `"0.3"` have no finite
//! binary expansion, so they are converted to the nearest multiple of
//! `2^{-P}` (the `--precision-bits` grid); the caller is told when that
//! rounding actually moved the value.

use anyhow::{bail, Context};
use dyadim::UnitRational;
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// A parsed point, with a note when decimal rounding was lossy.
#[derive(Debug)]
pub struct ParsedPoint {
    pub value: UnitRational,
    /// `Some(P)` when the input was a decimal that had to be rounded to
    /// the `2^{-P}` grid.
    pub rounded_bits: Option<u32>,
}

/// Parses `"p/q"`, `"0.3"`, or `"1"` into a point of (0, 1].
pub fn parse_point(text: &str, precision_bits: u32) -> anyhow::Result<ParsedPoint> {
    let text = text.trim();
    if text.is_empty() {
        bail!("empty input; expected a fraction like 2/3 or a decimal like 0.3");
    }
    if precision_bits == 0 || precision_bits > 4096 {
        bail!("--precision-bits must lie in 1..=4096 (got {precision_bits})");
    }
    if let Some((p, q)) = text.split_once('/') {
        let p: BigUint = p
            .trim()
            .parse()
            .with_context(|| format!("numerator {:?}", p.trim()))?;
        let q: BigUint = q
            .trim()
            .parse()
            .with_context(|| format!("denominator {:?}", q.trim()))?;
        if q.is_zero() {
            bail!("denominator must be nonzero");
        }
        let value = UnitRational::new(BigRational::new(BigInt::from(p), BigInt::from(q)))?;
        return Ok(ParsedPoint {
            value,
            rounded_bits: None,
        });
    }
    if let Some((int_part, frac_part)) = text.split_once('.') {
        let joined = format!("{int_part}{frac_part}");
        let a: BigUint = joined
            .parse()
            .with_context(|| format!("decimal {text:?}"))?;
        let k = u32::try_from(frac_part.len()).context("decimal has too many digits")?;
        // a/10^k rounded to the nearest n/2^P (ties away from zero):
        // n = ⌊(2·a·2^P + 10^k) / (2·10^k)⌋
        let num = a << precision_bits;
        let den = BigUint::from(10u32).pow(k);
        let n = (BigUint::from(2u32) * &num + &den) / (BigUint::from(2u32) * &den);
        let exact = (&num % &den).is_zero();
        let value = UnitRational::new(BigRational::new(
            BigInt::from(n),
            BigInt::from(BigUint::one() << precision_bits),
        ))?;
        return Ok(ParsedPoint {
            value,
            rounded_bits: (!exact).then_some(precision_bits),
        });
    }
    let p: BigUint = text.parse().with_context(|| format!("point {text:?}"))?;
    let value = UnitRational::new(BigRational::from(BigInt::from(p)))?;
    Ok(ParsedPoint {
        value,
        rounded_bits: None,
    })
}
