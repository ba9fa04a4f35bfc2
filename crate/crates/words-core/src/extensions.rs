use crate::alphabet::SymbolId;
use crate::error::WordError;
use crate::factors::FactorSet;
use crate::word::FiniteWord;

/// One-letter extension data of a factor, read off its occurrences.
/// Occurrences at the prefix edges contribute no extension on the missing
/// side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionProfile {
    pub factor: FiniteWord,
    pub left_ext: Vec<SymbolId>,
    pub right_ext: Vec<SymbolId>,
}

impl ExtensionProfile {
    pub fn left_valence(&self) -> usize {
        self.left_ext.len()
    }

    pub fn right_valence(&self) -> usize {
        self.right_ext.len()
    }

    pub fn is_left_special(&self) -> bool {
        self.left_valence() >= 2
    }

    pub fn is_right_special(&self) -> bool {
        self.right_valence() >= 2
    }

    pub fn is_bispecial(&self) -> bool {
        self.is_left_special() && self.is_right_special()
    }
}

/// Left/right extension sets of `v` from its occurrences inside the window.
pub fn extension_profile(fs: &FactorSet, v: &FiniteWord) -> Result<ExtensionProfile, WordError> {
    let factor = fs.require(v)?;
    let letters = fs.source().letters();
    let n = v.len();
    let len = letters.len();
    let mut left: Vec<SymbolId> = Vec::new();
    let mut right: Vec<SymbolId> = Vec::new();
    for &p in factor.occurrences() {
        if p > 0 && !left.contains(&letters[p - 1]) {
            left.push(letters[p - 1]);
        }
        if p + n < len && !right.contains(&letters[p + n]) {
            right.push(letters[p + n]);
        }
    }
    left.sort();
    right.sort();
    Ok(ExtensionProfile {
        factor: v.clone(),
        left_ext: left,
        right_ext: right,
    })
}

/// Left-special, right-special and bispecial factors of length `n`.
#[derive(Debug, Clone)]
pub struct SpecialFactors {
    pub n: usize,
    pub left_special: Vec<FiniteWord>,
    pub right_special: Vec<FiniteWord>,
    pub bispecial: Vec<FiniteWord>,
}

pub fn special_factors(fs: &FactorSet, n: usize) -> Result<SpecialFactors, WordError> {
    if n + 1 > fs.max_n() {
        return Err(WordError::InsufficientWindow {
            needed: n + 1,
            max_n: fs.max_n(),
        });
    }
    let mut out = SpecialFactors {
        n,
        left_special: Vec::new(),
        right_special: Vec::new(),
        bispecial: Vec::new(),
    };
    for f in fs.factors(n) {
        let word = fs.factor_word(f);
        let profile = extension_profile(fs, &word)?;
        if profile.is_left_special() {
            out.left_special.push(word.clone());
        }
        if profile.is_right_special() {
            out.right_special.push(word.clone());
        }
        if profile.is_bispecial() {
            out.bispecial.push(word);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::factors::factor_set;

    fn bin(text: &str) -> FiniteWord {
        FiniteWord::parse_chars(text, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn extensions_of_a_in_abab() {
        let fs = factor_set(&bin("abab"), 2).unwrap();
        let p = extension_profile(&fs, &bin("a")).unwrap();
        let b = Alphabet::binary().id_of("b").unwrap();
        assert_eq!(p.left_ext, vec![b]);
        assert_eq!(p.right_ext, vec![b]);
    }

    #[test]
    fn single_letter_word_has_valence_one() {
        let fs = factor_set(&bin("aaaa"), 3).unwrap();
        let p = extension_profile(&fs, &bin("aa")).unwrap();
        assert_eq!(p.left_valence(), 1);
        assert_eq!(p.right_valence(), 1);
        assert!(!p.is_bispecial());
    }

    #[test]
    fn not_a_factor_is_rejected() {
        let fs = factor_set(&bin("abab"), 2).unwrap();
        assert!(matches!(
            extension_profile(&fs, &bin("bb")),
            Err(WordError::NotAFactor(_))
        ));
    }

    #[test]
    fn period_two_word_has_no_special_factors() {
        let fs = factor_set(&bin("abab"), 2).unwrap();
        let sp = special_factors(&fs, 1).unwrap();
        assert!(sp.left_special.is_empty());
        assert!(sp.right_special.is_empty());
        assert!(sp.bispecial.is_empty());
    }

    #[test]
    fn unary_word_has_no_special_factors() {
        let alpha = Alphabet::new(["a"]).unwrap();
        let w = FiniteWord::parse_chars("aaaa", &alpha).unwrap();
        let fs = factor_set(&w, 3).unwrap();
        for n in 0..=2 {
            let sp = special_factors(&fs, n).unwrap();
            assert!(sp.left_special.is_empty() && sp.right_special.is_empty());
        }
    }

    #[test]
    fn window_requirement_for_special_factors() {
        let fs = factor_set(&bin("abab"), 2).unwrap();
        assert!(matches!(
            special_factors(&fs, 2),
            Err(WordError::InsufficientWindow {
                needed: 3,
                max_n: 2
            })
        ));
    }
}
