//! Hausdorff dimensions of digit-constrained sets, as roots of explicit
//! polynomials.
//!
//! Three families of sets have closed-form dimensions, each obtained from a
//! geometric-series identity and solved here by certified bisection with a
//! Newton polish.
//!
//! **Bounded digits from below** — points whose digits are all ≥ M. The
//! natural covering by cylinders of digit sum `S` has `2^{-S}` lengths, and
//! the pressure equation `Σ_{j≥M} (2^{-j})^D = 1` says the covering exactly
//! balances at dimension `D`. Summing the geometric tail with `α = 2^D`
//! gives `α^{-M} / (1 − α^{-1}) = 1`, i.e.
//!
//! ```text
//! α^M − α^{M−1} − 1 = 0,        D = log₂ α          (family "alpha")
//! ```
//!
//! For M = 2 this is `α² − α − 1`, the golden ratio; the dimension of the
//! digit-≥-2 set is `log₂ φ ≈ 0.6942`.
//!
//! **Bounded digits from above** — digits all ≤ M. The pressure equation
//! `Σ_{j=1}^{M} (2^{-j})^D = 1` becomes, with `β = 2^D`,
//!
//! ```text
//! β^M = β^{M−1} + β^{M−2} + ⋯ + 1,   D = log₂ β     (family "beta")
//! ```
//!
//! whose root is the M-step Fibonacci ("multinacci") constant; `β_M → 2` and
//! `D → 1` as the digit cap is lifted.
//!
//! **Scheduled digits** — sets where a sparse index set forces fixed digits
//! and positions in between run free over `1..=M`, with forcing density `μ`
//! (forced digit sum per free position). The balance equation picks up a
//! factor `x^μ` per free step:
//!
//! ```text
//! x^μ (x + x² + ⋯ + x^M) = 1,    D = −log₂ x        (family "gamma_M")
//! ```
//!
//! and as `M → ∞` the bracketed sum becomes `x/(1−x)`, giving the limit
//! form
//!
//! ```text
//! x^{μ+1} + x − 1 = 0,           D = −log₂ x        (family "gamma_limit")
//! ```
//!
//! The limit family is tied to the first by an exact reciprocal: if
//! `x^{μ+1} + x − 1 = 0` then `α = 1/x` satisfies `α^{μ+1} − α^μ − 1 = 0`
//! (divide by `x^{μ+1}`), so `gamma_limit(μ)` and `alpha(μ+1)` are the same
//! number. The tests pin this identity to machine precision.
//!
//! # Solving
//!
//! Each family is strictly increasing on its bracket — `[1, 2]` for the
//! `α`/`β` polynomials, `[0.49, 1)` for the `γ` forms — so a sign change
//! certifies a unique root. [`bisect`] narrows the bracket to the requested
//! width (default [`DEFAULT_TOL`]), which is the *certificate*: the returned
//! [`DimValue`] keeps the final bracket and the polynomial's signs at its
//! ends. A few Newton steps from the bracket midpoint then polish the root
//! to machine precision without leaving the certified interval; downstream
//! covering-sum identities are sensitive at the `1e−14` level, where a raw
//! width-`1e−12` bisection midpoint is not enough.
//!
//! [`bisect`]: DimValue::bracket

use alloc::string::String;

#[allow(unused_imports)]
use num_traits::Float;

/// Default bracket width for certified bisection.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Errors from dimension-formula evaluation.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum DimError {
    /// The digit bound must leave a nontrivial digit set.
    ///
    /// M = 1 collapses both bounded families: digits ≥ 1 is no constraint
    /// (dimension 1 by inspection, not by this formula's geometry) and
    /// digits ≤ 1 is the single point x = 1.
    #[error("M must be >= 2 (got {0})")]
    DegenerateM(u32),
    /// Forcing densities are nonnegative reals.
    #[error("mu must be finite and >= 0 (got {0})")]
    InvalidMu(f64),
    /// Bracket tolerances are positive reals.
    #[error("tolerance must be finite and > 0 (got {0})")]
    InvalidTol(f64),
    /// The polynomial does not change sign on the bracket, so no root is
    /// certified. Reachable only for extreme parameters (e.g. a forcing
    /// density so large the root is pushed past the bracket end).
    #[error("no sign change on [{lo}, {hi}]: root not bracketed")]
    NoSignChange {
        /// Lower bracket end.
        lo: f64,
        /// Upper bracket end.
        hi: f64,
    },
}

/// Which polynomial family a dimension value came from.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Family {
    /// Digits bounded below by `m`: `x^m − x^{m−1} − 1` on `[1, 2]`.
    Alpha {
        /// Lower digit bound, ≥ 2.
        m: u32,
    },
    /// Digits bounded above by `m`: `x^m − (x^{m−1} + ⋯ + 1)` on `[1, 2]`.
    Beta {
        /// Upper digit bound, ≥ 2.
        m: u32,
    },
    /// Scheduled digits, cap `m`, forcing density `mu`:
    /// `x^mu (x + ⋯ + x^m) − 1` on `(0, 1)`.
    GammaM {
        /// Forcing density, ≥ 0.
        mu: f64,
        /// Upper digit bound on free positions, ≥ 2.
        m: u32,
    },
    /// Scheduled digits, unbounded cap: `x^{mu+1} + x − 1` on `(0, 1)`.
    GammaLimit {
        /// Forcing density, ≥ 0.
        mu: f64,
    },
}

impl Family {
    /// Evaluates the family's defining polynomial at `x`.
    pub fn poly(&self, x: f64) -> f64 {
        match *self {
            Family::Alpha { m } => x.powi(m as i32) - x.powi(m as i32 - 1) - 1.0,
            Family::Beta { m } => {
                // x^m − Σ_{j=0}^{m−1} x^j, the sum by Horner
                let mut s = 0.0;
                for _ in 0..m {
                    s = s * x + 1.0;
                }
                x.powi(m as i32) - s
            }
            Family::GammaM { mu, m } => powr(x, mu) * digit_power_sum(x, m) - 1.0,
            Family::GammaLimit { mu } => powr(x, mu + 1.0) + x - 1.0,
        }
    }

    /// First derivative of [`poly`], used by the Newton polish.
    ///
    /// [`poly`]: Family::poly
    fn poly_deriv(&self, x: f64) -> f64 {
        match *self {
            Family::Alpha { m } => {
                let m = f64::from(m);
                m * x.powi(m as i32 - 1) - (m - 1.0) * x.powi(m as i32 - 2)
            }
            Family::Beta { m } => {
                // d/dx Σ_{j=0}^{m−1} x^j = Σ_{j=1}^{m−1} j x^{j−1}
                let mut s = 0.0;
                for j in (1..m).rev() {
                    s = s * x + f64::from(j);
                }
                f64::from(m) * x.powi(m as i32 - 1) - s
            }
            Family::GammaM { mu, m } => {
                let sum = digit_power_sum(x, m);
                // Σ_{j=1}^{m} j x^{j−1}
                let mut dsum = 0.0;
                for j in (1..=m).rev() {
                    dsum = dsum * x + f64::from(j);
                }
                let mut d = powr(x, mu) * dsum;
                if mu > 0.0 {
                    d += mu * powr(x, mu - 1.0) * sum;
                }
                d
            }
            Family::GammaLimit { mu } => (mu + 1.0) * powr(x, mu) + 1.0,
        }
    }

    /// Sign-change bracket on which the family is strictly increasing.
    fn initial_bracket(&self) -> (f64, f64) {
        match self {
            Family::Alpha { .. } | Family::Beta { .. } => (1.0, 2.0),
            // Below 0.49 the free-digit sum is at most 0.49/0.51 < 1, so the
            // polynomial is negative for every mu ≥ 0; the upper end sits
            // close enough to 1 for any realistic forcing density.
            Family::GammaM { .. } | Family::GammaLimit { .. } => (0.49, 0.999_999),
        }
    }

    /// Human-readable family label, e.g. `alpha(M=3)`.
    pub fn label(&self) -> String {
        use alloc::format;
        match *self {
            Family::Alpha { m } => format!("alpha(M={m})"),
            Family::Beta { m } => format!("beta(M={m})"),
            Family::GammaM { mu, m } => format!("gamma(mu={mu}, M={m})"),
            Family::GammaLimit { mu } => format!("gamma_limit(mu={mu})"),
        }
    }
}

/// `x^mu` for real `mu ≥ 0` with an exact-integer fast path.
fn powr(x: f64, mu: f64) -> f64 {
    if mu == 0.0 {
        1.0
    } else if mu.fract() == 0.0 && mu.abs() <= 1024.0 {
        x.powi(mu as i32)
    } else {
        x.powf(mu)
    }
}

/// `x + x² + ⋯ + x^m` by Horner.
fn digit_power_sum(x: f64, m: u32) -> f64 {
    let mut s = 0.0;
    for _ in 0..m {
        s = (s + 1.0) * x;
    }
    s
}

/// A certified dimension value: the polynomial root, the dimension it
/// encodes, and the bisection bracket that certifies it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DimValue {
    /// The polynomial family and parameters.
    pub family: Family,
    /// Polished root of the defining polynomial.
    pub root: f64,
    /// The dimension: `log₂ root` for the expanding families,
    /// `−log₂ root` for the contracting ones.
    pub value: f64,
    /// Final bisection bracket `(lo, hi)` with a verified sign change and
    /// `hi − lo ≤ tol`; the root lies inside.
    pub bracket: (f64, f64),
    /// Bracket width that was requested.
    pub tol: f64,
}

impl DimValue {
    /// `|p(root)|`, the defect of the polished root.
    pub fn residual(&self) -> f64 {
        self.family.poly(self.root).abs()
    }
}

/// Dimension of the set of points with every digit ≥ M: the root of
/// `x^M − x^{M−1} − 1` on `[1, 2]`, reported as `log₂ x`.
pub fn alpha(m: u32, tol: f64) -> Result<DimValue, DimError> {
    if m < 2 {
        return Err(DimError::DegenerateM(m));
    }
    solve(Family::Alpha { m }, tol)
}

/// Dimension of the set of points with every digit ≤ M: the root of
/// `x^M = x^{M−1} + ⋯ + x + 1` on `[1, 2]`, reported as `log₂ x`.
pub fn beta(m: u32, tol: f64) -> Result<DimValue, DimError> {
    if m < 2 {
        return Err(DimError::DegenerateM(m));
    }
    solve(Family::Beta { m }, tol)
}

/// Dimension under a digit schedule of forcing density `mu` with free
/// digits capped at `M`: the root of `x^mu (x + ⋯ + x^M) = 1` on `(0, 1)`,
/// reported as `−log₂ x`.
///
/// `mu = 0` recovers the unscheduled capped set: the root is then exactly
/// `1/β_M`, so the value agrees with [`beta`].
pub fn gamma_m(mu: f64, m: u32, tol: f64) -> Result<DimValue, DimError> {
    if m < 2 {
        return Err(DimError::DegenerateM(m));
    }
    if !mu.is_finite() || mu < 0.0 {
        return Err(DimError::InvalidMu(mu));
    }
    solve(Family::GammaM { mu, m }, tol)
}

/// The `M → ∞` limit of [`gamma_m`]: the root of `x^{mu+1} + x − 1` on
/// `(0, 1)`, reported as `−log₂ x`.
///
/// By the reciprocal identity noted in the module docs this equals
/// [`alpha`]`(mu + 1)` whenever `mu + 1` is an integer ≥ 2.
pub fn gamma_limit(mu: f64, tol: f64) -> Result<DimValue, DimError> {
    if !mu.is_finite() || mu < 0.0 {
        return Err(DimError::InvalidMu(mu));
    }
    solve(Family::GammaLimit { mu }, tol)
}

/// Certified bisection to width `tol`, then Newton polish inside the final
/// bracket.
fn solve(family: Family, tol: f64) -> Result<DimValue, DimError> {
    if !tol.is_finite() || tol <= 0.0 {
        return Err(DimError::InvalidTol(tol));
    }
    let (mut lo, mut hi) = family.initial_bracket();
    let f_lo = family.poly(lo);
    let f_hi = family.poly(hi);
    if !(f_lo < 0.0 && f_hi > 0.0) {
        return Err(DimError::NoSignChange { lo, hi });
    }

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break; // f64 grid exhausted; bracket is as tight as it gets
        }
        let f_mid = family.poly(mid);
        if f_mid < 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }

    // Newton from the midpoint. The root is interior (strict sign change),
    // so clamping each step to the bracket cannot pin us on a wrong point;
    // convergence is quadratic and four steps from a 1e−12 bracket are
    // already far past f64 resolution.
    let mut x = 0.5 * (lo + hi);
    for _ in 0..8 {
        let f = family.poly(x);
        if f == 0.0 {
            break;
        }
        let d = family.poly_deriv(x);
        if d == 0.0 || !d.is_finite() {
            break;
        }
        let next = (x - f / d).clamp(lo, hi);
        if next == x {
            break;
        }
        x = next;
    }

    let value = match family {
        Family::Alpha { .. } | Family::Beta { .. } => x.log2(),
        Family::GammaM { .. } | Family::GammaLimit { .. } => -x.log2(),
    };
    Ok(DimValue {
        family,
        root: x,
        value,
        bracket: (lo, hi),
        tol,
    })
}
