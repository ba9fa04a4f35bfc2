use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Args;
use rotation::{sturmian_word, CirclePoint, QuadraticReal};
use words_core::input::{parse_words, SymbolMode};
use words_core::{Alphabet, FiniteWord};

/// Exit status for a requested verification that did not hold (distinct from
/// usage or input errors, which exit 1).
pub const EXIT_VERIFY_FAILED: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    Text,
    Csv,
    Json,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum GenerateKind {
    /// Canonical two-arc rotation coding.
    Sturmian,
    /// Coding from a system file given with --system.
    Rotation,
}

/// Where the analyzed word comes from: a file (or standard input) or a
/// generated rotation coding.
#[derive(Debug, Args)]
pub struct WordSource {
    /// Read the word from this file; "-" or omission reads standard input.
    #[arg(long)]
    pub word_file: Option<PathBuf>,

    /// Generate the word instead of reading it.
    #[arg(long, value_enum)]
    pub generate: Option<GenerateKind>,

    /// Rotation angle: golden, sqrt2, or p,q,r,d for (p + q*sqrt(d))/r.
    #[arg(long, default_value = "golden")]
    pub alpha: String,

    /// System file for --generate rotation.
    #[arg(long)]
    pub system: Option<PathBuf>,

    /// Length of the generated word.
    #[arg(short = 'N', long = "length", default_value_t = 20_000)]
    pub n_letters: usize,

    /// Treat input lines as whitespace-separated tokens instead of
    /// one-symbol characters.
    #[arg(long)]
    pub tokens: bool,

    /// Declared alphabet, e.g. "a b c"; inferred from the input if absent.
    #[arg(long)]
    pub alphabet: Option<String>,
}

impl WordSource {
    pub fn load(&self) -> Result<FiniteWord> {
        match self.generate {
            Some(GenerateKind::Sturmian) => {
                let alpha = parse_alpha(&self.alpha)?;
                Ok(sturmian_word(&alpha, CirclePoint::zero(), self.n_letters)?)
            }
            Some(GenerateKind::Rotation) => {
                let path = self
                    .system
                    .as_ref()
                    .context("--generate rotation needs --system FILE")?;
                let text = fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let sys = rotation::input::parse_system(&text)?;
                Ok(sys.orbit_code(self.n_letters))
            }
            None => {
                let text = match &self.word_file {
                    Some(p) if p != Path::new("-") => {
                        fs::read_to_string(p).with_context(|| format!("reading {}", p.display()))?
                    }
                    _ => {
                        let mut buf = String::new();
                        io::stdin()
                            .read_to_string(&mut buf)
                            .context("reading standard input")?;
                        buf
                    }
                };
                let mode = if self.tokens {
                    SymbolMode::Tokens
                } else {
                    SymbolMode::Chars
                };
                let declared = self.declared_alphabet()?;
                let input = parse_words(&text, mode, declared)?;
                Ok(input
                    .words
                    .into_iter()
                    .next()
                    .expect("parse_words yields a word"))
            }
        }
    }

    fn declared_alphabet(&self) -> Result<Option<Arc<Alphabet>>> {
        match &self.alphabet {
            None => Ok(None),
            Some(spec) => {
                let symbols: Vec<&str> = spec.split_whitespace().collect();
                if symbols.is_empty() {
                    bail!("--alphabet lists no symbols");
                }
                Ok(Some(Alphabet::new(symbols.iter().map(|s| s.to_string()))?))
            }
        }
    }

    /// Stable description for output headers. Input paths are left out so a
    /// piped word and the same word in a file print identically.
    pub fn describe(&self) -> String {
        match self.generate {
            Some(GenerateKind::Sturmian) => {
                format!(
                    "generated sturmian alpha={} N={}",
                    self.alpha, self.n_letters
                )
            }
            Some(GenerateKind::Rotation) => format!("generated rotation N={}", self.n_letters),
            None => "word input".to_string(),
        }
    }
}

pub fn parse_alpha(spec: &str) -> Result<QuadraticReal> {
    match spec {
        "golden" => Ok(QuadraticReal::golden()),
        "sqrt2" => Ok(QuadraticReal::sqrt2_minus_one()),
        other => {
            let parts: Vec<&str> = other.split(',').map(str::trim).collect();
            if parts.len() != 4 {
                bail!("--alpha takes golden, sqrt2, or p,q,r,d");
            }
            let nums: Vec<i64> = parts
                .iter()
                .map(|p| p.parse().context("alpha components must be integers"))
                .collect::<Result<_>>()?;
            let d = u64::try_from(nums[3]).context("d must be positive")?;
            Ok(QuadraticReal::new(nums[0], nums[1], nums[2], d)?)
        }
    }
}

/// Output sink: a file when requested, standard output otherwise.
pub fn open_sink(path: &Option<PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => {
            Box::new(fs::File::create(p).with_context(|| format!("creating {}", p.display()))?)
        }
        None => Box::new(io::stdout().lock()),
    })
}

/// Version plus echoed configuration, as comment lines.
pub fn write_header(out: &mut dyn Write, command: &str, config: &str) -> Result<()> {
    writeln!(out, "# sturmkit {}", env!("CARGO_PKG_VERSION"))?;
    writeln!(out, "# run: {command} | {config}")?;
    Ok(())
}
