//! Dual-route check of the growth machinery: the automaton-based profiles
//! must agree with plain word enumeration. The oracle below scans substrings
//! directly and decides two-sided extendability by bounded window search; it
//! shares no code with the transfer automaton.

use std::collections::HashSet;

use algebra::{growth_profile, MonomialPresentation};
use num_bigint::BigUint;
use words_core::{Alphabet, FiniteWord};

struct Oracle {
    alphabet: usize,
    obstructions: Vec<Vec<u32>>,
    m: usize,
    /// Length-(m-1) avoiding words extendable rightward by the margin.
    /// Right extendability of any avoiding word only reads its last m-1
    /// letters, so this set decides it for every word.
    right_ok: HashSet<Vec<u32>>,
    left_ok: HashSet<Vec<u32>>,
    good_contexts: Vec<Vec<u32>>,
}

impl Oracle {
    /// `margin` must reach the number of length-(m-1) avoiding words: a
    /// window path that long revisits one of them and is pumpable forever.
    fn build(alphabet: usize, obstructions: Vec<Vec<u32>>, margin: usize) -> Oracle {
        let m = obstructions.iter().map(Vec::len).max().unwrap_or(0);
        let mut oracle = Oracle {
            alphabet,
            obstructions,
            m,
            right_ok: HashSet::new(),
            left_ok: HashSet::new(),
            good_contexts: Vec::new(),
        };
        let contexts = oracle.enumerate_avoiding(m.saturating_sub(1));
        for ctx in &contexts {
            if oracle.extends_right(ctx, margin) {
                oracle.right_ok.insert(ctx.clone());
            }
            if oracle.extends_left(ctx, margin) {
                oracle.left_ok.insert(ctx.clone());
            }
        }
        oracle.good_contexts = contexts
            .into_iter()
            .filter(|c| oracle.right_ok.contains(c) && oracle.left_ok.contains(c))
            .collect();
        oracle
    }

    fn avoiding(&self, w: &[u32]) -> bool {
        !self
            .obstructions
            .iter()
            .any(|o| o.len() <= w.len() && w.windows(o.len()).any(|win| win == o.as_slice()))
    }

    /// The base word is avoiding, so only windows touching the new letter
    /// need a look.
    fn suffix_clean(&self, w: &[u32]) -> bool {
        !self
            .obstructions
            .iter()
            .any(|o| o.len() <= w.len() && w[w.len() - o.len()..] == *o.as_slice())
    }

    fn prefix_clean(&self, w: &[u32]) -> bool {
        !self
            .obstructions
            .iter()
            .any(|o| o.len() <= w.len() && w[..o.len()] == *o.as_slice())
    }

    fn extends_right(&self, w: &[u32], depth: usize) -> bool {
        if depth == 0 {
            return true;
        }
        (0..self.alphabet as u32).any(|letter| {
            let mut cand = w.to_vec();
            cand.push(letter);
            self.suffix_clean(&cand) && self.extends_right(&cand, depth - 1)
        })
    }

    fn extends_left(&self, w: &[u32], depth: usize) -> bool {
        if depth == 0 {
            return true;
        }
        (0..self.alphabet as u32).any(|letter| {
            let mut cand = vec![letter];
            cand.extend_from_slice(w);
            self.prefix_clean(&cand) && self.extends_left(&cand, depth - 1)
        })
    }

    /// Two-sided extendability. Words of length at least `m - 1` delegate to
    /// their boundary contexts (no obstruction window straddles both sides);
    /// shorter words are good exactly when they sit inside a good context.
    fn good(&self, w: &[u32]) -> bool {
        if !self.avoiding(w) {
            return false;
        }
        if w.len() + 1 >= self.m {
            let state = self.m.saturating_sub(1);
            return self.left_ok.contains(&w[..state.min(w.len())])
                && self.right_ok.contains(&w[w.len() - state.min(w.len())..]);
        }
        self.good_contexts
            .iter()
            .any(|x| w.is_empty() || x.windows(w.len()).any(|win| win == w))
    }

    fn enumerate_avoiding(&self, n: usize) -> Vec<Vec<u32>> {
        let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
        for _ in 0..n {
            let mut next = Vec::new();
            for w in &frontier {
                for letter in 0..self.alphabet as u32 {
                    let mut cand = w.clone();
                    cand.push(letter);
                    if self.suffix_clean(&cand) {
                        next.push(cand);
                    }
                }
            }
            frontier = next;
        }
        frontier
    }

    /// Per-length counts of avoiding words and of good words, by exhaustive
    /// extension.
    fn counts(&self, n_max: usize) -> (Vec<u64>, Vec<u64>) {
        let mut totals = vec![0u64; n_max + 1];
        let mut goods = vec![0u64; n_max + 1];
        totals[0] = 1;
        goods[0] = u64::from(self.good(&[]));
        let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
        for n in 1..=n_max {
            let mut next = Vec::new();
            for w in &frontier {
                for letter in 0..self.alphabet as u32 {
                    let mut cand = w.clone();
                    cand.push(letter);
                    if self.suffix_clean(&cand) {
                        if self.good(&cand) {
                            goods[n] += 1;
                        }
                        next.push(cand);
                    }
                }
            }
            totals[n] = next.len() as u64;
            frontier = next;
        }
        (totals, goods)
    }
}

fn presentation_from(
    alphabet: &std::sync::Arc<Alphabet>,
    obs: &[Vec<u32>],
) -> MonomialPresentation {
    let words = obs
        .iter()
        .map(|o| {
            FiniteWord::new(
                alphabet.clone(),
                o.iter().map(|&l| words_core::SymbolId(l)).collect(),
            )
            .unwrap()
        })
        .collect();
    MonomialPresentation::new(alphabet.clone(), words).unwrap()
}

fn check_against_oracle(
    alphabet: &std::sync::Arc<Alphabet>,
    obs: &[Vec<u32>],
    n_max: usize,
    margin: usize,
) {
    let p = presentation_from(alphabet, obs);
    let oracle = Oracle::build(alphabet.len(), obs.to_vec(), margin);
    let profile = growth_profile(&p, n_max);
    let (totals, goods) = oracle.counts(n_max);
    let mut v_acc = 0u64;
    for n in 0..=n_max {
        v_acc += totals[n];
        assert_eq!(
            profile.t(n),
            &BigUint::from(totals[n]),
            "T({n}) for obstructions {obs:?}"
        );
        assert_eq!(
            profile.v(n),
            &BigUint::from(v_acc),
            "V({n}) for obstructions {obs:?}"
        );
        assert_eq!(
            profile.t_rl(n),
            &BigUint::from(goods[n]),
            "T_RL({n}) for obstructions {obs:?}"
        );
    }
}

/// All words of length 1..=max_len over `alphabet` letters, as index vectors.
fn all_words(alphabet: usize, max_len: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut frontier: Vec<Vec<u32>> = vec![Vec::new()];
    for _ in 1..=max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for letter in 0..alphabet as u32 {
                let mut cand = w.clone();
                cand.push(letter);
                next.push(cand);
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[test]
fn binary_presentations_with_short_obstructions_match_oracle() {
    // every subset of the six binary words of length <= 2, n up to 12
    let alphabet = Alphabet::binary();
    let pool = all_words(2, 2);
    for mask in 0u32..(1 << pool.len()) {
        let obs: Vec<Vec<u32>> = pool
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, w)| w.clone())
            .collect();
        check_against_oracle(&alphabet, &obs, 12, 12);
    }
}

#[test]
fn ternary_presentations_match_oracle() {
    // a spread of ternary obstruction sets with lengths up to 4
    let alphabet = Alphabet::new(["a", "b", "c"]).unwrap();
    let pool = all_words(3, 4);
    let mut seed = 0xfeed_beef_u64;
    for trial in 0..60 {
        let mut obs = Vec::new();
        let size = 1 + trial % 4;
        for _ in 0..size {
            seed = seed
                .wrapping_mul(6364136223846793005)
                .wrapping_add(1442695040888963407);
            obs.push(pool[(seed >> 33) as usize % pool.len()].clone());
        }
        // 3^3 = 27 possible contexts, so a 30-step window is pumpable
        check_against_oracle(&alphabet, &obs, 12, 30);
    }
}

#[test]
fn trl_never_exceeds_t() {
    let alphabet = Alphabet::binary();
    let pool = all_words(2, 3);
    let mut seed = 31u64;
    for _ in 0..40 {
        let mut obs = Vec::new();
        seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
        let size = (seed >> 60) as usize % 4;
        for _ in 0..size {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            obs.push(pool[(seed >> 33) as usize % pool.len()].clone());
        }
        let p = presentation_from(&alphabet, &obs);
        let profile = growth_profile(&p, 14);
        for n in 0..=14 {
            assert!(profile.t_rl(n) <= profile.t(n), "n = {n}, obs {obs:?}");
        }
    }
}
