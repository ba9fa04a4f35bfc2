use std::fs;
use std::io::Write;

use algebra::{
    boundary_tail_check, classify_growth, growth_profile, sturmian_obstruction_set,
    MonomialPresentation,
};
use anyhow::{bail, Context, Result};
use clap::Args;

use crate::common::{open_sink, parse_alpha, write_header, OutputFormat};

/// Growth of monomial presentations: V/T/T_RL tables and classification.
#[derive(Debug, Args)]
pub struct AlgebraArgs {
    /// Obstruction file (one word per line, optional "alphabet:" header).
    #[arg(long)]
    pub obstructions: Option<std::path::PathBuf>,

    /// Build the obstruction set of the rotation word for this angle
    /// (golden, sqrt2, or p,q,r,d) up to length -m.
    #[arg(long)]
    pub sturmian_obstructions: Option<String>,

    /// Obstruction length cutoff for --sturmian-obstructions.
    #[arg(short = 'm', long, default_value_t = 12)]
    pub cutoff: usize,

    /// Largest length in the growth table.
    #[arg(long, default_value_t = 20)]
    pub n_max: usize,

    /// Classify the growth and report the verdict.
    #[arg(long)]
    pub classify: bool,

    /// Horizon for --classify; defaults to n-max.
    #[arg(long)]
    pub horizon: Option<usize>,

    /// Also report increment diagnostics over the table tail.
    #[arg(long)]
    pub tail_check: bool,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,

    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

pub fn run(args: &AlgebraArgs) -> Result<i32> {
    let (presentation, origin) = load_presentation(args)?;
    let mut out = open_sink(&args.output)?;
    let profile = growth_profile(&presentation, args.n_max);
    let config = format!(
        "{origin} | obstructions={} | max-len={} | n-max={}",
        presentation.obstructions().len(),
        presentation.max_obstruction_len(),
        args.n_max
    );

    if args.format == OutputFormat::Json {
        let rows: Vec<serde_json::Value> = (0..=args.n_max)
            .map(|n| {
                serde_json::json!({
                    "n": n,
                    "V": profile.v(n).to_string(),
                    "T": profile.t(n).to_string(),
                    "TRL": profile.t_rl(n).to_string(),
                })
            })
            .collect();
        let mut doc = serde_json::json!({
            "command": "algebra",
            "config": config,
            "obstructions": presentation
                .obstructions()
                .iter()
                .map(|w| w.to_string())
                .collect::<Vec<_>>(),
            "profile": rows,
        });
        if args.classify {
            let report = classify_growth(&presentation, args.horizon.unwrap_or(args.n_max));
            doc["classification"] = serde_json::to_value(&report)?;
        }
        if args.tail_check {
            doc["tail"] = serde_json::to_value(boundary_tail_check(&profile))?;
        }
        writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        return Ok(0);
    }

    write_header(out.as_mut(), "algebra", &config)?;
    for w in presentation.obstructions() {
        writeln!(out, "# obstruction: {w}")?;
    }
    for w in presentation.discarded() {
        writeln!(out, "# discarded (had a kept divisor): {w}")?;
    }
    writeln!(out, "n,V,T,TRL")?;
    for n in 0..=args.n_max {
        writeln!(
            out,
            "{n},{},{},{}",
            profile.v(n),
            profile.t(n),
            profile.t_rl(n)
        )?;
    }
    if args.tail_check {
        let tail = boundary_tail_check(&profile);
        writeln!(out, "# tail: {}", serde_json::to_string(&tail)?)?;
    }
    if args.classify {
        let report = classify_growth(&presentation, args.horizon.unwrap_or(args.n_max));
        writeln!(out, "# verdict: {}", report.verdict)?;
        for note in &report.notes {
            writeln!(out, "# note: {note}")?;
        }
        writeln!(out, "# report: {}", serde_json::to_string(&report)?)?;
    }
    Ok(0)
}

fn load_presentation(args: &AlgebraArgs) -> Result<(MonomialPresentation, String)> {
    match (&args.obstructions, &args.sturmian_obstructions) {
        (Some(path), None) => {
            let text =
                fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            Ok((
                algebra::input::parse_obstructions(&text)?,
                "obstruction file".into(),
            ))
        }
        (None, Some(alpha_spec)) => {
            let alpha = parse_alpha(alpha_spec)?;
            let p = sturmian_obstruction_set(&alpha, args.cutoff)?;
            Ok((
                p,
                format!(
                    "rotation-word obstructions alpha={alpha_spec} m={}",
                    args.cutoff
                ),
            ))
        }
        (None, None) => bail!("give --obstructions FILE or --sturmian-obstructions ALPHA"),
        (Some(_), Some(_)) => bail!("--obstructions and --sturmian-obstructions are exclusive"),
    }
}
