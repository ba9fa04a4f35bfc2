use std::io::Write;

use anyhow::Result;
use clap::Args;
use words_core::{complexity_profile, factor_set};

use crate::common::{open_sink, write_header, OutputFormat, WordSource};

/// Complexity profile T(n) of a word.
#[derive(Debug, Args)]
pub struct ComplexityArgs {
    #[command(flatten)]
    pub source: WordSource,

    /// Largest factor length; defaults to one below the word length.
    #[arg(long)]
    pub n_max: Option<usize>,

    #[arg(long, value_enum, default_value = "csv")]
    pub format: OutputFormat,

    #[arg(long)]
    pub output: Option<std::path::PathBuf>,
}

pub fn run(args: &ComplexityArgs) -> Result<i32> {
    let word = args.source.load()?;
    let n_max = args
        .n_max
        .unwrap_or_else(|| word.len().saturating_sub(1))
        .min(word.len());
    let fs = factor_set(&word, n_max)?;
    let profile = complexity_profile(&fs);
    let mut out = open_sink(&args.output)?;
    let config = format!(
        "{} | n-max={} | word-length={}",
        args.source.describe(),
        n_max,
        word.len()
    );
    match args.format {
        OutputFormat::Json => {
            let rows: Vec<serde_json::Value> = profile
                .iter()
                .enumerate()
                .map(|(i, t)| serde_json::json!({"n": i + 1, "t": t}))
                .collect();
            let doc = serde_json::json!({
                "command": "complexity",
                "config": config,
                "rows": rows,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc)?)?;
        }
        _ => {
            write_header(out.as_mut(), "complexity", &config)?;
            writeln!(out, "n,T")?;
            for (i, t) in profile.iter().enumerate() {
                writeln!(out, "{},{}", i + 1, t)?;
            }
        }
    }
    Ok(0)
}
