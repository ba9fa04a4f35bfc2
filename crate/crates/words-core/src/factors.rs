use std::collections::HashMap;

use crate::alphabet::SymbolId;
use crate::error::WordError;
use crate::word::FiniteWord;

/// One distinct factor of a given length with every position at which it
/// occurs in the source word (positions sorted ascending).
#[derive(Debug, Clone)]
pub struct Factor {
    letters: Vec<SymbolId>,
    occurrences: Vec<usize>,
}

impl Factor {
    pub fn letters(&self) -> &[SymbolId] {
        &self.letters
    }

    pub fn occurrences(&self) -> &[usize] {
        &self.occurrences
    }
}

#[derive(Debug, Clone)]
struct FactorTable {
    factors: Vec<Factor>,
    index: HashMap<Vec<SymbolId>, usize>,
    /// Every factor of this length has at least one occurrence that can be
    /// extended one symbol to the right inside the source.
    saturated: bool,
}

/// The factor language of a word prefix, per length up to a window bound.
///
/// Everything derived from a `FactorSet` is evidence about the analyzed
/// prefix only; predicates about infinite words never claim more than the
/// window shows.
#[derive(Debug, Clone)]
pub struct FactorSet {
    source: FiniteWord,
    max_n: usize,
    tables: Vec<FactorTable>,
}

/// Builds the factor language of `w` for all lengths `0..=max_n`.
pub fn factor_set(w: &FiniteWord, max_n: usize) -> Result<FactorSet, WordError> {
    let len = w.len();
    if max_n > len {
        return Err(WordError::WindowExceedsWord { max_n, len });
    }
    let letters = w.letters();
    let mut tables = Vec::with_capacity(max_n + 1);
    for n in 0..=max_n {
        let mut grouped: HashMap<&[SymbolId], Vec<usize>> = HashMap::new();
        for p in 0..=(len - n) {
            grouped.entry(&letters[p..p + n]).or_default().push(p);
        }
        let mut entries: Vec<(Vec<SymbolId>, Vec<usize>)> =
            grouped.into_iter().map(|(k, v)| (k.to_vec(), v)).collect();
        entries.sort_by(|a, b| a.0.cmp(&b.0));
        let mut index = HashMap::with_capacity(entries.len());
        let mut factors = Vec::with_capacity(entries.len());
        let mut saturated = true;
        for (i, (key, occurrences)) in entries.into_iter().enumerate() {
            index.insert(key.clone(), i);
            // occurrences come out sorted because positions were scanned in order
            if occurrences.iter().all(|&p| p + n >= len) {
                saturated = false;
            }
            factors.push(Factor {
                letters: key,
                occurrences,
            });
        }
        tables.push(FactorTable {
            factors,
            index,
            saturated,
        });
    }
    Ok(FactorSet {
        source: w.clone(),
        max_n,
        tables,
    })
}

impl FactorSet {
    pub fn source(&self) -> &FiniteWord {
        &self.source
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Number of distinct length-`n` factors, `T(n)`.
    pub fn factor_count(&self, n: usize) -> usize {
        self.tables[n].factors.len()
    }

    pub fn factors(&self, n: usize) -> &[Factor] {
        &self.tables[n].factors
    }

    pub fn factor_word(&self, f: &Factor) -> FiniteWord {
        FiniteWord::new(self.source.alphabet().clone(), f.letters().to_vec())
            .expect("factor letters come from the source word")
    }

    /// All distinct factors of length `n` as words, in lexicographic order.
    pub fn factor_words(&self, n: usize) -> Vec<FiniteWord> {
        self.factors(n)
            .iter()
            .map(|f| self.factor_word(f))
            .collect()
    }

    pub fn contains(&self, v: &FiniteWord) -> bool {
        self.lookup(v).is_some()
    }

    pub(crate) fn lookup(&self, v: &FiniteWord) -> Option<&Factor> {
        if v.alphabet() != self.source.alphabet() || v.len() > self.max_n {
            return None;
        }
        let table = &self.tables[v.len()];
        table.index.get(v.letters()).map(|&i| &table.factors[i])
    }

    pub(crate) fn contains_letters(&self, letters: &[SymbolId]) -> bool {
        letters.len() <= self.max_n && self.tables[letters.len()].index.contains_key(letters)
    }

    pub(crate) fn require(&self, v: &FiniteWord) -> Result<&Factor, WordError> {
        if v.alphabet() != self.source.alphabet() {
            return Err(WordError::AlphabetMismatch);
        }
        if v.len() > self.max_n {
            return Err(WordError::InsufficientWindow {
                needed: v.len(),
                max_n: self.max_n,
            });
        }
        self.lookup(v)
            .ok_or_else(|| WordError::NotAFactor(v.to_string()))
    }

    /// Sorted occurrence positions of `v` in the source, if `v` is a factor.
    pub fn occurrences(&self, v: &FiniteWord) -> Result<&[usize], WordError> {
        Ok(self.require(v)?.occurrences())
    }

    /// Whether every length-`n` factor has at least one right-extendable
    /// occurrence. Unsaturated lengths sit too close to the prefix edge for
    /// special-factor or forbidden-word conclusions.
    pub fn is_saturated(&self, n: usize) -> bool {
        n <= self.max_n && self.tables[n].saturated
    }

    /// Largest `L` such that every length `n <= L` is saturated.
    pub fn saturated_up_to(&self) -> usize {
        let mut l = 0;
        for n in 1..=self.max_n {
            if !self.is_saturated(n) {
                break;
            }
            l = n;
        }
        l
    }
}

/// The complexity profile `T(1..=max_n)` of a factor set; `T(n) = Card F_n`.
pub fn complexity_profile(fs: &FactorSet) -> Vec<usize> {
    (1..=fs.max_n()).map(|n| fs.factor_count(n)).collect()
}
