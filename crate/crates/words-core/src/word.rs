use std::cmp::Ordering;
use std::fmt;
use std::ops::Range;
use std::sync::Arc;

use crate::alphabet::{Alphabet, SymbolId};
use crate::error::WordError;

/// A finite word: a sequence of symbol indices over a fixed alphabet.
///
/// The empty word (length 0) is a valid value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteWord {
    alphabet: Arc<Alphabet>,
    letters: Vec<SymbolId>,
}

impl FiniteWord {
    pub fn new(alphabet: Arc<Alphabet>, letters: Vec<SymbolId>) -> Result<Self, WordError> {
        let size = alphabet.len();
        for l in &letters {
            if l.index() >= size {
                return Err(WordError::LetterOutOfRange {
                    index: l.index(),
                    size,
                });
            }
        }
        Ok(FiniteWord { alphabet, letters })
    }

    pub fn empty(alphabet: Arc<Alphabet>) -> Self {
        FiniteWord {
            alphabet,
            letters: Vec::new(),
        }
    }

    /// Builds a word from symbol tokens.
    pub fn from_tokens<I, S>(alphabet: &Arc<Alphabet>, tokens: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = S>,
        S: AsRef<str>,
    {
        let mut letters = Vec::new();
        for t in tokens {
            let t = t.as_ref();
            let id = alphabet
                .id_of(t)
                .ok_or_else(|| WordError::UnknownSymbol(t.to_string()))?;
            letters.push(id);
        }
        Ok(FiniteWord {
            alphabet: Arc::clone(alphabet),
            letters,
        })
    }

    /// Builds a word reading each character of `text` as one symbol.
    pub fn parse_chars(text: &str, alphabet: &Arc<Alphabet>) -> Result<Self, WordError> {
        Self::from_tokens(alphabet, text.chars().map(|c| c.to_string()))
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[SymbolId] {
        &self.letters
    }

    pub fn letter(&self, i: usize) -> SymbolId {
        self.letters[i]
    }

    /// Contiguous subword on `range` (a factor of `self`).
    pub fn factor(&self, range: Range<usize>) -> FiniteWord {
        FiniteWord {
            alphabet: Arc::clone(&self.alphabet),
            letters: self.letters[range].to_vec(),
        }
    }

    pub fn prefix(&self, len: usize) -> FiniteWord {
        self.factor(0..len)
    }

    pub fn concat(&self, other: &FiniteWord) -> Result<FiniteWord, WordError> {
        if self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(FiniteWord {
            alphabet: Arc::clone(&self.alphabet),
            letters,
        })
    }

    pub fn count_letter(&self, id: SymbolId) -> usize {
        self.letters.iter().filter(|&&l| l == id).count()
    }

    /// True when `needle` occurs as a contiguous subword.
    pub fn contains_factor(&self, needle: &FiniteWord) -> bool {
        if needle.is_empty() {
            return true;
        }
        self.letters
            .windows(needle.len())
            .any(|w| w == needle.letters.as_slice())
    }

    /// Word order: by length, then lexicographically by symbol index.
    /// Both words must come from the same alphabet.
    pub fn cmp_word_order(&self, other: &FiniteWord) -> Ordering {
        debug_assert_eq!(self.alphabet, other.alphabet);
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl fmt::Display for FiniteWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "Λ");
        }
        if self.alphabet.single_char() {
            for l in &self.letters {
                write!(f, "{}", self.alphabet.symbol(*l))?;
            }
            Ok(())
        } else {
            let joined: Vec<&str> = self
                .letters
                .iter()
                .map(|l| self.alphabet.symbol(*l))
                .collect();
            write!(f, "{}", joined.join(" "))
        }
    }
}

/// Smallest `p >= 1` with `w[i] = w[i + p]` for every valid `i`, computed from
/// the longest proper border (prefix function).
pub fn minimal_period(w: &FiniteWord) -> Result<usize, WordError> {
    if w.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let s = w.letters();
    let n = s.len();
    let mut pi = vec![0usize; n];
    for i in 1..n {
        let mut k = pi[i - 1];
        while k > 0 && s[i] != s[k] {
            k = pi[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        pi[i] = k;
    }
    Ok(n - pi[n - 1])
}

/// Decomposition forced by the overlap equation `S·W = W·T`: the result
/// `(s, k, s1)` satisfies `W = s^k s1` with `s = S` and `s1` a prefix of `s`.
pub fn overlap_decompose(
    s_word: &FiniteWord,
    w: &FiniteWord,
    t_word: &FiniteWord,
) -> Result<(FiniteWord, usize, FiniteWord), WordError> {
    if s_word.is_empty() {
        return Err(WordError::EmptyWord);
    }
    let left = s_word.concat(w)?;
    let right = w.concat(t_word)?;
    if left != right {
        return Err(WordError::OverlapMismatch {
            left: left.to_string(),
            right: right.to_string(),
        });
    }
    let period = s_word.len();
    let k = w.len() / period;
    let rest = w.len() % period;
    let s1 = s_word.prefix(rest);
    Ok((s_word.clone(), k, s1))
}
