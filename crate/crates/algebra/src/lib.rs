//! Monomial algebra growth analysis: normal bases, the `V`/`T`/`T_RL`
//! profiles computed on a transfer automaton, tail diagnostics, and the
//! boundary-growth classifier.
//!
//! Presentations are immutable; profiles for different presentations can be
//! computed concurrently.

mod automaton;
mod classify;
mod error;
mod growth;
pub mod input;
mod presentation;
mod sturmian;

pub use classify::{classify_growth, ClassificationReport, GrowthVerdict, StructureFacts};
pub use error::AlgebraError;
pub use growth::{
    boundary_tail_check, good_word_profile, growth_profile, normal_basis, BoundaryTailReport,
    GrowthProfile,
};
pub use presentation::MonomialPresentation;
pub use sturmian::sturmian_obstruction_set;
