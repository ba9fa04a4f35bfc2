use std::collections::BTreeSet;
use std::sync::Arc;

use crate::alphabet::Alphabet;
use crate::error::WordError;
use crate::word::FiniteWord;

/// How a line of text maps to symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SymbolMode {
    /// Every character is one symbol.
    Chars,
    /// Whitespace-separated tokens are symbols.
    Tokens,
}

/// Parsed word input: one word per nonempty line. When no alphabet is
/// declared, it is inferred as the sorted set of symbols seen in the text.
#[derive(Debug, Clone)]
pub struct WordInput {
    pub alphabet: Arc<Alphabet>,
    pub words: Vec<FiniteWord>,
}

pub fn parse_words(
    text: &str,
    mode: SymbolMode,
    declared: Option<Arc<Alphabet>>,
) -> Result<WordInput, WordError> {
    let lines: Vec<Vec<String>> = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| tokenize(l, mode))
        .collect();
    if lines.is_empty() {
        return Err(WordError::NoWordInInput);
    }
    let alphabet = match declared {
        Some(a) => a,
        None => {
            let seen: BTreeSet<&String> = lines.iter().flatten().collect();
            Alphabet::new(seen.into_iter().cloned())?
        }
    };
    let words = lines
        .iter()
        .map(|tokens| FiniteWord::from_tokens(&alphabet, tokens))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(WordInput { alphabet, words })
}

fn tokenize(line: &str, mode: SymbolMode) -> Vec<String> {
    match mode {
        SymbolMode::Chars => line
            .chars()
            .filter(|c| !c.is_whitespace())
            .map(|c| c.to_string())
            .collect(),
        SymbolMode::Tokens => line.split_whitespace().map(str::to_string).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn infers_sorted_alphabet_in_char_mode() {
        let input = parse_words("baca\ncab\n", SymbolMode::Chars, None).unwrap();
        let symbols: Vec<&str> = input.alphabet.symbols().map(|(_, s)| s).collect();
        assert_eq!(symbols, vec!["a", "b", "c"]);
        assert_eq!(input.words.len(), 2);
        assert_eq!(input.words[0].to_string(), "baca");
    }

    #[test]
    fn token_mode_splits_on_whitespace() {
        let input = parse_words("ab ba ab", SymbolMode::Tokens, None).unwrap();
        assert_eq!(input.words[0].len(), 3);
        assert_eq!(input.alphabet.len(), 2);
    }

    #[test]
    fn declared_alphabet_rejects_foreign_symbols() {
        let declared = Alphabet::new(["a", "b"]).unwrap();
        let err = parse_words("abc", SymbolMode::Chars, Some(declared)).unwrap_err();
        assert_eq!(err, WordError::UnknownSymbol("c".into()));
    }

    #[test]
    fn empty_input_is_an_error() {
        assert!(matches!(
            parse_words("\n  \n", SymbolMode::Chars, None),
            Err(WordError::NoWordInInput)
        ));
    }
}
