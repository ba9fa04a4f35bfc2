//! Obstruction files: UTF-8 text, one obstruction per line, `#` comments,
//! and an optional leading `alphabet: a b c` line. Lines with whitespace are
//! read as symbol tokens, compact lines as one symbol per character.

use std::sync::Arc;

use words_core::{Alphabet, FiniteWord};

use crate::error::AlgebraError;
use crate::presentation::MonomialPresentation;

pub fn parse_obstructions(text: &str) -> Result<MonomialPresentation, AlgebraError> {
    let mut declared: Option<Arc<Alphabet>> = None;
    let mut entries: Vec<(usize, Vec<String>)> = Vec::new();
    let mut first_content = true;
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if first_content {
            first_content = false;
            if let Some(rest) = line.strip_prefix("alphabet:") {
                let symbols: Vec<&str> = rest.split_whitespace().collect();
                if symbols.is_empty() {
                    return Err(AlgebraError::ObstructionFile {
                        line: idx + 1,
                        message: "alphabet line lists no symbols".into(),
                    });
                }
                declared = Some(Alphabet::new(symbols.iter().map(|s| s.to_string()))?);
                continue;
            }
        }
        let tokens: Vec<String> = if line.contains(char::is_whitespace) {
            line.split_whitespace().map(str::to_string).collect()
        } else {
            line.chars().map(|c| c.to_string()).collect()
        };
        entries.push((idx + 1, tokens));
    }
    if entries.is_empty() && declared.is_none() {
        return Err(AlgebraError::ObstructionFile {
            line: 0,
            message: "no alphabet and no obstructions".into(),
        });
    }
    let alphabet = match declared {
        Some(a) => a,
        None => {
            let mut seen: Vec<String> = entries.iter().flat_map(|(_, t)| t.clone()).collect();
            seen.sort();
            seen.dedup();
            Alphabet::new(seen)?
        }
    };
    let mut obstructions = Vec::with_capacity(entries.len());
    for (line, tokens) in entries {
        let word = FiniteWord::from_tokens(&alphabet, &tokens).map_err(|e| {
            AlgebraError::ObstructionFile {
                line,
                message: e.to_string(),
            }
        })?;
        obstructions.push(word);
    }
    MonomialPresentation::new(alphabet, obstructions)
}
