use std::collections::HashSet;

use num_bigint::BigUint;
use words_core::FiniteWord;

use crate::automaton::TransferAutomaton;
use crate::presentation::MonomialPresentation;

/// Exact growth data of a presentation: `V(n)` counts avoiding words of
/// length at most `n`, `T(n) = V(n) - V(n-1)` those of length exactly `n`,
/// and `T_RL(n)` the good words — avoiding words extendable to arbitrarily
/// long avoiding words on both sides.
#[derive(Debug, Clone)]
pub struct GrowthProfile {
    n_max: usize,
    v: Vec<BigUint>,
    t: Vec<BigUint>,
    t_rl: Vec<BigUint>,
}

impl GrowthProfile {
    pub fn n_max(&self) -> usize {
        self.n_max
    }

    pub fn v(&self, n: usize) -> &BigUint {
        &self.v[n]
    }

    pub fn t(&self, n: usize) -> &BigUint {
        &self.t[n]
    }

    pub fn t_rl(&self, n: usize) -> &BigUint {
        &self.t_rl[n]
    }

    /// `T(n) - n` when it fits a signed word, for tail inspection.
    pub fn t_minus_n(&self, n: usize) -> Option<i64> {
        let t: u64 = u64::try_from(&self.t[n]).ok()?;
        Some(t as i64 - n as i64)
    }
}

/// Computes `V` and `T` up to `n_max` by walk counting on the transfer
/// automaton, and `T_RL` by the same iteration seeded/read on the trimmed
/// core (start states reachable from a cycle, end states reaching one).
pub fn growth_profile(p: &MonomialPresentation, n_max: usize) -> GrowthProfile {
    let automaton = TransferAutomaton::build(p);
    let analysis = automaton.analyze();
    let state_len = automaton.state_len;
    let nstates = automaton.states.len();

    let mut t: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    for n in 0..=n_max.min(state_len) {
        if n < automaton.short_words.len() {
            t.push(BigUint::from(automaton.short_words[n].len()));
        }
    }
    if n_max > state_len {
        // walks[s] = number of avoiding words of length state_len + steps
        // whose leading state is s
        let mut walks: Vec<BigUint> = vec![BigUint::from(1u32); nstates];
        for _ in state_len + 1..=n_max {
            let mut next: Vec<BigUint> = vec![BigUint::ZERO; nstates];
            for (i, row) in automaton.trans.iter().enumerate() {
                let mut sum = BigUint::ZERO;
                for tgt in row.iter().flatten() {
                    sum += &walks[*tgt];
                }
                next[i] = sum;
            }
            walks = next;
            t.push(walks.iter().sum());
        }
    }

    // good words: seed on states that reach a cycle, read on states reachable
    // from one
    let mut t_rl: Vec<BigUint> = Vec::with_capacity(n_max + 1);
    let core_words: Vec<&Vec<_>> = automaton
        .states
        .iter()
        .enumerate()
        .filter(|(i, _)| analysis.core[*i])
        .map(|(_, w)| w)
        .collect();
    for n in 0..=n_max.min(state_len) {
        if n == 0 {
            t_rl.push(BigUint::from(usize::from(!core_words.is_empty())));
        } else if n == state_len {
            t_rl.push(BigUint::from(core_words.len()));
        } else {
            // good words shorter than a state are the factors of good states
            let mut seen: HashSet<&[_]> = HashSet::new();
            for w in &core_words {
                for window in w.windows(n) {
                    seen.insert(window);
                }
            }
            t_rl.push(BigUint::from(seen.len()));
        }
    }
    if n_max > state_len {
        let mut good: Vec<BigUint> = (0..nstates)
            .map(|i| {
                if analysis.reach_to_cycle[i] {
                    BigUint::from(1u32)
                } else {
                    BigUint::ZERO
                }
            })
            .collect();
        for _ in state_len + 1..=n_max {
            let mut next: Vec<BigUint> = vec![BigUint::ZERO; nstates];
            for (i, row) in automaton.trans.iter().enumerate() {
                let mut sum = BigUint::ZERO;
                for tgt in row.iter().flatten() {
                    sum += &good[*tgt];
                }
                next[i] = sum;
            }
            good = next;
            t_rl.push(
                good.iter()
                    .enumerate()
                    .filter(|(i, _)| analysis.reach_from_cycle[*i])
                    .map(|(_, g)| g)
                    .sum(),
            );
        }
    }

    let mut v = Vec::with_capacity(n_max + 1);
    let mut acc = BigUint::ZERO;
    for tn in &t {
        acc += tn;
        v.push(acc.clone());
    }
    GrowthProfile { n_max, v, t, t_rl }
}

/// The good-word counts `T_RL(0..=n_max)` alone.
pub fn good_word_profile(p: &MonomialPresentation, n_max: usize) -> Vec<BigUint> {
    let profile = growth_profile(p, n_max);
    (0..=n_max).map(|n| profile.t_rl(n).clone()).collect()
}

/// All avoiding words of length at most `n`, in word order (length first,
/// then lexicographic).
pub fn normal_basis(p: &MonomialPresentation, n: usize) -> Vec<FiniteWord> {
    let alphabet = p.alphabet();
    let mut out = vec![FiniteWord::empty(alphabet.clone())];
    let mut frontier = vec![FiniteWord::empty(alphabet.clone())];
    for _ in 1..=n {
        let mut next = Vec::new();
        for base in &frontier {
            for id in alphabet.ids() {
                let mut letters = base.letters().to_vec();
                letters.push(id);
                let cand = FiniteWord::new(alphabet.clone(), letters)
                    .expect("letters come from the alphabet");
                // the fresh suffix is the only place a new occurrence fits
                if p.obstructions().iter().all(|o| {
                    o.len() > cand.len() || cand.factor(cand.len() - o.len()..cand.len()) != *o
                }) {
                    next.push(cand);
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

/// Tail report over a computed profile: where the one-step increments of `T`
/// and `T_RL` become 1, where they become constant, and the final increment
/// sizes (unbounded growth shows up as no stabilization index).
#[derive(Debug, Clone, serde::Serialize)]
pub struct BoundaryTailReport {
    pub n_max: usize,
    pub t_increment_one_from: Option<usize>,
    pub trl_increment_one_from: Option<usize>,
    pub t_increment_stable_from: Option<usize>,
    pub trl_increment_stable_from: Option<usize>,
    pub last_t_increment: String,
    pub last_trl_increment: String,
}

pub fn boundary_tail_check(profile: &GrowthProfile) -> BoundaryTailReport {
    let n_max = profile.n_max();
    let t_incr: Vec<BigUint> = increments(|n| profile.t(n).clone(), n_max);
    let trl_incr: Vec<BigUint> = increments(|n| profile.t_rl(n).clone(), n_max);
    BoundaryTailReport {
        n_max,
        t_increment_one_from: hold_from(&t_incr, |d| *d == BigUint::from(1u32)),
        trl_increment_one_from: hold_from(&trl_incr, |d| *d == BigUint::from(1u32)),
        t_increment_stable_from: stable_from(&t_incr),
        trl_increment_stable_from: stable_from(&trl_incr),
        last_t_increment: t_incr.last().map(BigUint::to_string).unwrap_or_default(),
        last_trl_increment: trl_incr.last().map(BigUint::to_string).unwrap_or_default(),
    }
}

/// Differences `f(n+1) - f(n)` for `n = 1..n_max-1`; a saturating zero when
/// the sequence dips (possible for `T_RL` of dying languages).
fn increments(f: impl Fn(usize) -> BigUint, n_max: usize) -> Vec<BigUint> {
    (1..n_max)
        .map(|n| {
            let lo = f(n);
            let hi = f(n + 1);
            if hi >= lo {
                hi - lo
            } else {
                BigUint::ZERO
            }
        })
        .collect()
}

/// First 1-based index (n value) from which `pred` holds through the end.
fn hold_from(diffs: &[BigUint], pred: impl Fn(&BigUint) -> bool) -> Option<usize> {
    if diffs.is_empty() || !pred(diffs.last().unwrap()) {
        return None;
    }
    let mut from = diffs.len();
    for i in (0..diffs.len()).rev() {
        if pred(&diffs[i]) {
            from = i + 1;
        } else {
            break;
        }
    }
    Some(from)
}

/// Stabilization needs a run of at least two equal trailing increments; a
/// lone final value is not evidence.
fn stable_from(diffs: &[BigUint]) -> Option<usize> {
    let last = diffs.last()?.clone();
    hold_from(diffs, |d| *d == last).filter(|&from| from < diffs.len())
}

#[cfg(test)]
mod tests {
    use super::*;
    use words_core::Alphabet;

    fn bin(text: &str) -> FiniteWord {
        FiniteWord::parse_chars(text, &Alphabet::binary()).unwrap()
    }

    fn present(obs: &[&str]) -> MonomialPresentation {
        MonomialPresentation::new(Alphabet::binary(), obs.iter().map(|o| bin(o)).collect()).unwrap()
    }

    fn small(profile: &GrowthProfile, f: impl Fn(&GrowthProfile, usize) -> BigUint) -> Vec<u64> {
        (0..=profile.n_max())
            .map(|n| u64::try_from(&f(profile, n)).unwrap())
            .collect()
    }

    #[test]
    fn single_obstruction_ab_grows_linearly() {
        let profile = growth_profile(&present(&["ab"]), 8);
        let t = small(&profile, |p, n| p.t(n).clone());
        assert_eq!(t, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]);
        let trl = small(&profile, |p, n| p.t_rl(n).clone());
        assert_eq!(trl, vec![1, 2, 3, 4, 5, 6, 7, 8, 9]);
    }

    #[test]
    fn alternating_language_is_constant() {
        let profile = growth_profile(&present(&["aa", "bb"]), 8);
        let t = small(&profile, |p, n| p.t(n).clone());
        assert_eq!(t, vec![1, 2, 2, 2, 2, 2, 2, 2, 2]);
        let trl = small(&profile, |p, n| p.t_rl(n).clone());
        assert_eq!(trl, vec![1, 2, 2, 2, 2, 2, 2, 2, 2]);
    }

    #[test]
    fn free_algebra_doubles() {
        let profile = growth_profile(&MonomialPresentation::free(Alphabet::binary()), 6);
        let t = small(&profile, |p, n| p.t(n).clone());
        assert_eq!(t, vec![1, 2, 4, 8, 16, 32, 64]);
        let v = small(&profile, |p, n| p.v(n).clone());
        assert_eq!(v, vec![1, 3, 7, 15, 31, 63, 127]);
    }

    #[test]
    fn single_letter_obstruction_leaves_one_good_line() {
        let profile = growth_profile(&present(&["a"]), 6);
        let t = small(&profile, |p, n| p.t(n).clone());
        assert_eq!(t, vec![1, 1, 1, 1, 1, 1, 1]);
        let trl = small(&profile, |p, n| p.t_rl(n).clone());
        assert_eq!(trl, vec![1, 1, 1, 1, 1, 1, 1]);
    }

    #[test]
    fn good_word_profile_matches_growth_column() {
        let p = present(&["ab"]);
        let alone = good_word_profile(&p, 8);
        let profile = growth_profile(&p, 8);
        for (n, value) in alone.iter().enumerate() {
            assert_eq!(value, profile.t_rl(n));
        }
        assert_eq!(u64::try_from(&alone[8]).unwrap(), 9);
    }

    #[test]
    fn dead_language_reaches_zero() {
        let profile = growth_profile(&present(&["a", "b"]), 4);
        let t = small(&profile, |p, n| p.t(n).clone());
        assert_eq!(t, vec![1, 0, 0, 0, 0]);
        let trl = small(&profile, |p, n| p.t_rl(n).clone());
        assert_eq!(trl, vec![0, 0, 0, 0, 0]);
    }

    #[test]
    fn normal_basis_of_ab_lists_b_then_a_words() {
        let basis = normal_basis(&present(&["ab"]), 3);
        let names: Vec<String> = basis.iter().map(|w| w.to_string()).collect();
        assert_eq!(
            names,
            vec!["Λ", "a", "b", "aa", "ba", "bb", "aaa", "baa", "bba", "bbb"]
        );
    }

    #[test]
    fn normal_basis_free_and_dead() {
        assert_eq!(
            normal_basis(&MonomialPresentation::free(Alphabet::binary()), 2).len(),
            7
        );
        assert_eq!(normal_basis(&present(&["a", "b"]), 3).len(), 1);
    }

    #[test]
    fn tail_check_flags_boundary_and_constant_profiles() {
        let boundary = boundary_tail_check(&growth_profile(&present(&["ab"]), 10));
        assert_eq!(boundary.t_increment_one_from, Some(1));
        assert_eq!(boundary.trl_increment_one_from, Some(1));

        let constant = boundary_tail_check(&growth_profile(&present(&["aa", "bb"]), 10));
        assert_eq!(constant.t_increment_one_from, None);
        assert_eq!(constant.t_increment_stable_from, Some(1));
        assert_eq!(constant.last_t_increment, "0");

        let free = boundary_tail_check(&growth_profile(
            &MonomialPresentation::free(Alphabet::binary()),
            10,
        ));
        assert_eq!(free.t_increment_stable_from, None);
        assert_eq!(free.last_t_increment, (1u64 << 9).to_string());
    }
}
