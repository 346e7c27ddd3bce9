//! `dyadim dims` — solve a dimension polynomial and print the root with
//! its bracket certificate.

use anyhow::Context;
use clap::{Args, ValueEnum};
use dyadim::dims;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    /// Digit floor family: x^M − x^{M−1} − 1 on (1, 2).
    Alpha,
    /// Digit cap (multinacci) family: x^M − x^{M−1} − ⋯ − 1 on (1, 2).
    Beta,
    /// Scheduled cap family: x^μ(x + ⋯ + x^M) = 1 on (0, 1).
    #[value(name = "gamma-m", alias = "gammaM")]
    GammaM,
    /// M → ∞ limit of the scheduled family: x^{μ+1} + x = 1 on (0, 1).
    #[value(name = "gamma-limit", alias = "gammaLimit")]
    GammaLimit,
}

#[derive(Debug, Args)]
pub struct DimsArgs {
    /// Which root family to solve.
    pub family: FamilyArg,

    /// Digit floor/cap parameter M (alpha, beta, gamma-m).
    #[arg(long = "M")]
    pub m: Option<u32>,

    /// Forcing density μ (gamma-m, gamma-limit).
    #[arg(long)]
    pub mu: Option<f64>,

    /// Bracketing tolerance on the root.
    #[arg(long, default_value_t = dyadim::dims::DEFAULT_TOL)]
    pub tol: f64,
}

pub fn run(args: &DimsArgs) -> anyhow::Result<()> {
    let m = || args.m.context("--M is required for this family");
    let mu = || args.mu.context("--mu is required for this family");
    let dim = match args.family {
        FamilyArg::Alpha => dims::alpha(m()?, args.tol)?,
        FamilyArg::Beta => dims::beta(m()?, args.tol)?,
        FamilyArg::GammaM => dims::gamma_m(mu()?, m()?, args.tol)?,
        FamilyArg::GammaLimit => dims::gamma_limit(mu()?, args.tol)?,
    };
    println!("family   = {}", dim.family.label());
    println!("root     = {}", dim.root);
    println!("value    = {}  (dimension, log2 scale)", dim.value);
    println!("bracket  = [{}, {}]", dim.bracket.0, dim.bracket.1);
    println!("residual = {:e}", dim.residual());
    Ok(())
}
