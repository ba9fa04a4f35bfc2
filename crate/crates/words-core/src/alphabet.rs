use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::WordError;

/// Index of a symbol within its [`Alphabet`]. The numeric order of ids is the
/// alphabet order, which induces the word order (length first, then
/// lexicographic).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SymbolId(pub u32);

impl SymbolId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// A finite, ordered set of distinct symbol tokens.
///
/// Tokens are nonempty strings without whitespace; the order given at
/// construction is total and fixed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, S>(symbols: I) -> Result<Arc<Self>, WordError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        if symbols.is_empty() {
            return Err(WordError::EmptyAlphabet);
        }
        let mut seen = HashMap::new();
        for (i, s) in symbols.iter().enumerate() {
            if s.is_empty() || s.chars().any(char::is_whitespace) {
                return Err(WordError::MalformedSymbol(s.clone()));
            }
            if seen.insert(s.clone(), i).is_some() {
                return Err(WordError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Arc::new(Alphabet { symbols }))
    }

    /// The two-letter alphabet `{a, b}` used throughout for binary words.
    pub fn binary() -> Arc<Self> {
        Alphabet::new(["a", "b"]).expect("binary alphabet is well formed")
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (SymbolId, &str)> {
        self.symbols
            .iter()
            .enumerate()
            .map(|(i, s)| (SymbolId(i as u32), s.as_str()))
    }

    pub fn ids(&self) -> impl Iterator<Item = SymbolId> {
        (0..self.symbols.len() as u32).map(SymbolId)
    }

    pub fn symbol(&self, id: SymbolId) -> &str {
        &self.symbols[id.index()]
    }

    pub fn id_of(&self, token: &str) -> Option<SymbolId> {
        self.symbols
            .iter()
            .position(|s| s == token)
            .map(|i| SymbolId(i as u32))
    }

    /// True when every symbol is a single character, so words render without
    /// separators.
    pub fn single_char(&self) -> bool {
        self.symbols.iter().all(|s| s.chars().count() == 1)
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{}}}", self.symbols.join(", "))
    }
}
