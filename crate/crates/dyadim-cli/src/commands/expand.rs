//! `dyadim expand` — digit sequence, prefix value, cylinder, and residual
//! bound for one point.

use clap::Args;

use crate::input::{parse_point, ParsedPoint};

#[derive(Debug, Args)]
pub struct ExpandArgs {
    /// The point: a fraction like "2/3" or a decimal like "0.3".
    pub x: String,

    /// How many digits to compute.
    #[arg(short = 'n', long = "digits", default_value_t = 20)]
    pub digits: usize,

    /// Dyadic grid resolution (in bits) for decimal inputs.
    #[arg(long, default_value_t = 64)]
    pub precision_bits: u32,
}

pub fn run(args: &ExpandArgs) -> anyhow::Result<()> {
    let ParsedPoint {
        value: x,
        rounded_bits,
    } = parse_point(&args.x, args.precision_bits)?;
    if let Some(bits) = rounded_bits {
        println!(
            "note: decimal rounded to the nearest multiple of 2^-{bits}: x = {}",
            x.as_ratio()
        );
    }
    let prefix = x.digit_prefix(args.digits);
    let line = prefix
        .digits()
        .iter()
        .map(u32::to_string)
        .collect::<Vec<_>>()
        .join(" ");
    println!("digits: {line}");
    let value = prefix.prefix_value()?;
    let cylinder = prefix.cylinder()?;
    println!("prefix_value = {}", value.as_ratio());
    println!(
        "cylinder = ({}, {}]  width 2^-{}",
        cylinder.left(),
        cylinder.right(),
        cylinder.log2_length()
    );
    println!(
        "residual: x - prefix_value lies in (0, 2^-{}]",
        prefix.digit_sum()
    );
    Ok(())
}
