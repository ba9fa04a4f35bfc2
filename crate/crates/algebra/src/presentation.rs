use std::sync::Arc;

use words_core::{Alphabet, FiniteWord};

use crate::error::AlgebraError;

/// A monomial presentation: generators plus a finite antichain of forbidden
/// words (no obstruction divides another). Nested or duplicate obstructions
/// given at construction are dropped and recorded rather than rejected.
#[derive(Debug, Clone)]
pub struct MonomialPresentation {
    alphabet: Arc<Alphabet>,
    obstructions: Vec<FiniteWord>,
    discarded: Vec<FiniteWord>,
}

impl MonomialPresentation {
    pub fn new(
        alphabet: Arc<Alphabet>,
        obstructions: Vec<FiniteWord>,
    ) -> Result<Self, AlgebraError> {
        for o in &obstructions {
            if o.is_empty() {
                return Err(AlgebraError::EmptyObstruction);
            }
            if o.alphabet() != &alphabet {
                return Err(AlgebraError::ForeignObstruction(o.to_string()));
            }
        }
        let mut sorted = obstructions;
        sorted.sort_by(|a, b| a.cmp_word_order(b));
        sorted.dedup();
        let mut kept: Vec<FiniteWord> = Vec::new();
        let mut discarded = Vec::new();
        for w in sorted {
            // shorter words come first, so any divisor of w is already kept
            if kept.iter().any(|o| w.contains_factor(o)) {
                discarded.push(w);
            } else {
                kept.push(w);
            }
        }
        Ok(MonomialPresentation {
            alphabet,
            obstructions: kept,
            discarded,
        })
    }

    /// Presentation over `alphabet` with no relations.
    pub fn free(alphabet: Arc<Alphabet>) -> Self {
        MonomialPresentation {
            alphabet,
            obstructions: Vec::new(),
            discarded: Vec::new(),
        }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    /// The normalized antichain, in word order.
    pub fn obstructions(&self) -> &[FiniteWord] {
        &self.obstructions
    }

    /// Inputs dropped by antichain normalization (each had a kept divisor).
    pub fn discarded(&self) -> &[FiniteWord] {
        &self.discarded
    }

    pub fn max_obstruction_len(&self) -> usize {
        self.obstructions
            .iter()
            .map(FiniteWord::len)
            .max()
            .unwrap_or(0)
    }

    pub fn obstruction_lengths(&self) -> Vec<usize> {
        let mut lens: Vec<usize> = self.obstructions.iter().map(FiniteWord::len).collect();
        lens.sort_unstable();
        lens.dedup();
        lens
    }

    /// True when no obstruction occurs in `word`, i.e. `word` lies in the
    /// normal basis.
    pub fn admits(&self, word: &FiniteWord) -> bool {
        self.obstructions.iter().all(|o| !word.contains_factor(o))
    }
}
