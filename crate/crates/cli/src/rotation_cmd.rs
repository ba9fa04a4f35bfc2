use std::fs;
use std::io::Write;

use anyhow::{Context, Result};
use clap::Args;
use rotation::{canonical_system, grouped_system, verify_minimal_growth, CirclePoint};

use crate::common::{open_sink, parse_alpha, write_header, EXIT_VERIFY_FAILED};

/// Rotation codings: emit orbit words, verify minimal complexity growth, and
/// cross-check grouped systems against sliding-block recoding.
#[derive(Debug, Args)]
pub struct RotationArgs {
    /// Rotation angle: golden, sqrt2, or p,q,r,d.
    #[arg(long, default_value = "golden")]
    pub alpha: String,

    /// Coding system file; the canonical two-arc system when absent.
    #[arg(long)]
    pub system: Option<std::path::PathBuf>,

    /// Length of the emitted or analyzed orbit word.
    #[arg(short = 'N', long = "length", default_value_t = 1000)]
    pub n_letters: usize,

    /// Group factors of this depth into one symbol per factor.
    #[arg(long)]
    pub grouped_k: Option<usize>,

    /// Verify that the complexity profile settles on T(n) = n + K.
    #[arg(long)]
    pub verify: bool,

    /// Largest length checked by --verify.
    #[arg(long, default_value_t = 60)]
    pub n_max: usize,

    /// Compare the grouped orbit against the sliding-block recoding of the
    /// base word, position by position; exit nonzero on any mismatch.
    #[arg(long)]
    pub check_dual: bool,

    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

pub fn run(args: &RotationArgs) -> Result<i32> {
    let mut out = open_sink(&args.output)?;
    let system = match &args.system {
        Some(path) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            rotation::input::parse_system(&text)?
        }
        None => {
            let alpha = parse_alpha(&args.alpha)?;
            match args.grouped_k {
                Some(k) => grouped_system(&alpha, k)?,
                None => canonical_system(alpha, CirclePoint::zero())?,
            }
        }
    };
    let config = format!(
        "alpha={} | symbols={} | N={}",
        args.alpha,
        system.alphabet().len(),
        args.n_letters
    );
    write_header(out.as_mut(), "rotation", &config)?;

    if args.check_dual {
        let k = args.grouped_k.context("--check-dual needs --grouped-k")?;
        let alpha = parse_alpha(&args.alpha)?;
        let base = canonical_system(alpha, CirclePoint::zero())?;
        let base_word = base.orbit_code(args.n_letters + k - 1);
        let coded = system.orbit_code(args.n_letters);
        for i in 0..args.n_letters {
            let block = base_word.factor(i..i + k).to_string();
            let symbol = system.alphabet().symbol(coded.letter(i)).to_string();
            if block != symbol {
                writeln!(
                    out,
                    "dual-check: MISMATCH at position {i}: {symbol} vs {block}"
                )?;
                return Ok(EXIT_VERIFY_FAILED);
            }
        }
        writeln!(out, "dual-check: ok over {} positions", args.n_letters)?;
        return Ok(0);
    }

    if args.verify {
        let report = verify_minimal_growth(&system, args.n_letters, args.n_max)?;
        match (report.success, report.offset, report.stable_from) {
            (true, Some(k), Some(n0)) => {
                writeln!(
                    out,
                    "minimal-growth: ok K={k} from n={n0} up to n={}",
                    report.n_max
                )?;
                Ok(0)
            }
            _ => {
                writeln!(
                    out,
                    "minimal-growth: FAILED (offset {:?}, profile tail {:?})",
                    report.offset,
                    report.profile.iter().rev().take(5).collect::<Vec<_>>()
                )?;
                Ok(EXIT_VERIFY_FAILED)
            }
        }
    } else {
        let word = system.orbit_code(args.n_letters);
        writeln!(out, "{word}")?;
        Ok(0)
    }
}
