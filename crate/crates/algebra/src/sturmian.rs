use rotation::{sturmian_word, CirclePoint, QuadraticReal};
use words_core::{factor_set, minimal_forbidden_words, Alphabet};

use crate::error::AlgebraError;
use crate::presentation::MonomialPresentation;

/// The presentation over `{a, b}` whose obstructions are the minimal
/// forbidden words of length at most `m` of the rotation word for `alpha`.
///
/// The prefix is grown until every length up to `m` is saturated, starting
/// from `50·m` symbols, so that right-edge occurrences cannot fake or hide
/// obstructions.
pub fn sturmian_obstruction_set(
    alpha: &QuadraticReal,
    m: usize,
) -> Result<MonomialPresentation, AlgebraError> {
    let mut len = (50 * m).max(400);
    loop {
        let word = sturmian_word(alpha, CirclePoint::zero(), len)?;
        let fs = factor_set(&word, m)?;
        if (1..=m).all(|n| fs.is_saturated(n)) {
            let obstructions = minimal_forbidden_words(&fs, m)?;
            let presentation = MonomialPresentation::new(Alphabet::binary(), obstructions)?;
            debug_assert!(presentation.discarded().is_empty());
            return Ok(presentation);
        }
        len *= 2;
        assert!(len <= 1 << 24, "saturation must be reached at desk scale");
    }
}
