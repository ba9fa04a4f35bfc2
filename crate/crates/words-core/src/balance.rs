use crate::alphabet::SymbolId;
use crate::error::WordError;
use crate::factors::FactorSet;
use crate::word::FiniteWord;

/// A pair of equal-length factors whose counts of the tested letter differ by
/// at least two.
#[derive(Debug, Clone)]
pub struct BalanceWitness {
    pub u: FiniteWord,
    pub v: FiniteWord,
    pub count_u: usize,
    pub count_v: usize,
}

#[derive(Debug, Clone)]
pub struct BalanceOutcome {
    pub letter: SymbolId,
    pub n_max: usize,
    pub balanced: bool,
    pub witness: Option<BalanceWitness>,
}

/// Checks `||u|_x - |v|_x| <= 1` for every pair of equal-length factors with
/// length up to `n_max`. Per length it suffices to compare the extremal
/// counts; the witness is an extremal pair when the bound fails.
pub fn is_balanced(
    fs: &FactorSet,
    letter: SymbolId,
    n_max: usize,
) -> Result<BalanceOutcome, WordError> {
    if n_max > fs.max_n() {
        return Err(WordError::InsufficientWindow {
            needed: n_max,
            max_n: fs.max_n(),
        });
    }
    for n in 1..=n_max {
        let mut min: Option<(usize, usize)> = None; // (count, factor idx)
        let mut max: Option<(usize, usize)> = None;
        for (i, f) in fs.factors(n).iter().enumerate() {
            let c = f.letters().iter().filter(|&&l| l == letter).count();
            if min.is_none_or(|(m, _)| c < m) {
                min = Some((c, i));
            }
            if max.is_none_or(|(m, _)| c > m) {
                max = Some((c, i));
            }
        }
        if let (Some((cmin, imin)), Some((cmax, imax))) = (min, max) {
            if cmax - cmin > 1 {
                let u = fs.factor_word(&fs.factors(n)[imax]);
                let v = fs.factor_word(&fs.factors(n)[imin]);
                return Ok(BalanceOutcome {
                    letter,
                    n_max,
                    balanced: false,
                    witness: Some(BalanceWitness {
                        u,
                        v,
                        count_u: cmax,
                        count_v: cmin,
                    }),
                });
            }
        }
    }
    Ok(BalanceOutcome {
        letter,
        n_max,
        balanced: true,
        witness: None,
    })
}
