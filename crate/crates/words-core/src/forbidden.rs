use crate::error::WordError;
use crate::factors::FactorSet;
use crate::word::FiniteWord;

/// All minimal forbidden words of length up to `m`: words absent from the
/// factor set whose every proper factor is present. A word `x·w·y` (letters
/// `x`, `y`) qualifies exactly when `xw` and `wy` are factors but `xwy` is
/// not; length-1 candidates are the unused alphabet letters.
///
/// The result is an antichain under the factor order. Near the window edge
/// absence may be an artifact of the finite prefix; restrict to saturated
/// lengths when the target is an infinite word's antidictionary.
pub fn minimal_forbidden_words(fs: &FactorSet, m: usize) -> Result<Vec<FiniteWord>, WordError> {
    if m > fs.max_n() {
        return Err(WordError::InsufficientWindow {
            needed: m,
            max_n: fs.max_n(),
        });
    }
    let alphabet = fs.source().alphabet();
    let mut out: Vec<FiniteWord> = Vec::new();

    if m >= 1 {
        let present = fs.factors(1);
        for id in alphabet.ids() {
            if !present.iter().any(|f| f.letters() == [id]) {
                out.push(
                    FiniteWord::new(alphabet.clone(), vec![id])
                        .expect("alphabet letters are valid"),
                );
            }
        }
    }

    for n in 2..=m {
        for mid in fs.factors(n - 2) {
            let left_exts: Vec<_> = alphabet
                .ids()
                .filter(|&x| {
                    let mut letters = vec![x];
                    letters.extend_from_slice(mid.letters());
                    fs.contains_letters(&letters)
                })
                .collect();
            let right_exts: Vec<_> = alphabet
                .ids()
                .filter(|&y| {
                    let mut letters = mid.letters().to_vec();
                    letters.push(y);
                    fs.contains_letters(&letters)
                })
                .collect();
            for &x in &left_exts {
                for &y in &right_exts {
                    let mut letters = vec![x];
                    letters.extend_from_slice(mid.letters());
                    letters.push(y);
                    if !fs.contains_letters(&letters) {
                        let word = FiniteWord::new(alphabet.clone(), letters)
                            .expect("letters come from the alphabet");
                        out.push(word);
                    }
                }
            }
        }
    }

    out.sort_by(|a, b| a.cmp_word_order(b));
    out.dedup();
    Ok(out)
}
