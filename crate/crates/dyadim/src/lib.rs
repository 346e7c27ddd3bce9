//! Exact base-two digit expansions and the fractal geometry of
//! digit-constrained sets.
//!
//! Every `x ∈ (0,1]` has a unique expansion
//!
//! ```text
//! x = Σ_{i≥1} 2^{-(d₁ + d₂ + ⋯ + d_i)},        d_i ∈ {1, 2, 3, …}
//! ```
//!
//! generated by iterating the expanding map `T x = 2ⁿ x − 1` on the branch
//! `x ∈ (2^{-n}, 2^{-(n-1)}]`; the digit `d_i` is the branch number taken at
//! step `i`. Constraining the digits carves out self-similar subsets of
//! `(0,1]` whose Hausdorff dimensions are logarithms of roots of small
//! polynomials:
//!
//! * all digits ≥ M — dimension `log₂ α_M`, `α_M` the root of
//!   `x^M − x^{M-1} − 1` in (1,2) (see [`dims::alpha`] for why this
//!   polynomial and not a neighbouring misprint of it);
//! * all digits ≤ M — dimension `log₂ β_M`, `β_M` the multinacci root of
//!   `x^M = x^{M-1} + ⋯ + x + 1`;
//! * digits ≤ M with a forced sub-sequence of indices `I` carrying
//!   prescribed digits `f(i)` — dimension `−log₂ γ` where γ solves
//!   `x^μ (x + x² + ⋯ + x^M) = 1` and `μ` is the asymptotic rate
//!   `limsup λ_n / n` of forced mass per free digit.
//!
//! The crate provides, layer by layer:
//!
//! * [`expansion`] — the map, its inverse branches, digit prefixes and the
//!   cylinder intervals they address, all in exact rational arithmetic;
//! * [`dims`] — certified bracketing solvers for the dimension polynomials;
//! * [`schedule`] — forced-index schedules `(I, f)` and their derived
//!   quantities `k(n)`, `λ_n`, `μ(I, f)`;
//! * [`measure`] + [`sample`] — the natural self-similar measures on the
//!   constrained sets and deterministic seeded samplers for them;
//! * [`boxdim`], [`localdim`], [`report`] — box-counting regression,
//!   local-dimension sequences, cover-sum functionals, and side-by-side
//!   theory/empirics reports.
//!
//! The default `std` feature is only needed for the optional `rayon`
//! parallelism and for `std::error::Error` conveniences; the math itself is
//! `no_std + alloc`.
//!
//! # Example
//!
//! ```
//! use dyadim::expansion::UnitRational;
//! use dyadim::dims;
//!
//! // digits of 2/3 = 2^-1 + 2^-3 + 2^-5 + ... are 1, 2, 2, 2, ...
//! let x = UnitRational::from_u64(2, 3).unwrap();
//! assert_eq!(x.digit_prefix(4).digits(), &[1, 2, 2, 2]);
//!
//! // the golden ratio gives the dimension of {all digits ≤ 2}
//! let d = dims::beta(2, 1e-12).unwrap();
//! assert!((d.root - 1.618033988749895).abs() < 1e-12);
//! ```

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]
#![warn(missing_docs)]

extern crate alloc;

pub mod boxdim;
pub mod dims;
pub mod expansion;
pub mod localdim;
pub mod measure;
pub mod report;
pub mod sample;
pub mod schedule;

pub use dims::DimValue;
pub use expansion::{Cylinder, DigitPrefix, UnitRational};
pub use measure::MeasureSpec;
pub use sample::SampleRecord;
pub use schedule::Schedule;
