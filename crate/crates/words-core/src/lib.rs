//! Finite-word and factor-language primitives: complexity profiles, one-letter
//! extensions and special factors, balance, return words, recurrence evidence
//! and minimal forbidden words.
//!
//! All values are immutable after construction and all operations are pure,
//! so concurrent reads are safe. Predicates that mirror properties of
//! infinite words (recurrence, balance, uniform recurrence) report evidence
//! relative to the analyzed prefix and carry their window bounds.

mod alphabet;
mod balance;
mod error;
mod extensions;
mod factors;
mod forbidden;
pub mod input;
mod recurrence;
mod word;

pub use alphabet::{Alphabet, SymbolId};
pub use balance::{is_balanced, BalanceOutcome, BalanceWitness};
pub use error::WordError;
pub use extensions::{extension_profile, special_factors, ExtensionProfile, SpecialFactors};
pub use factors::{complexity_profile, factor_set, Factor, FactorSet};
pub use forbidden::minimal_forbidden_words;
pub use recurrence::{
    recurrence_evidence, return_words, uniform_recurrence_witness, RecurrenceEvidence,
    RecurrenceLevel, ReturnWords,
};
pub use word::{minimal_period, overlap_decompose, FiniteWord};
