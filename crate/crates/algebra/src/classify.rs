use num_bigint::BigUint;
use serde::Serialize;

use crate::automaton::TransferAutomaton;
use crate::growth::{growth_profile, GrowthProfile};
use crate::presentation::MonomialPresentation;

/// Growth class of a presentation within a finite horizon. `Inconclusive`
/// absorbs every situation where the observed profile and the automaton's
/// cycle structure do not settle the question.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum GrowthVerdict {
    #[serde(rename = "FINITE_DIMENSIONAL")]
    FiniteDimensional,
    #[serde(rename = "SLOW_LINEAR")]
    SlowLinear,
    #[serde(rename = "BOUNDARY_CASE1")]
    BoundaryCase1,
    #[serde(rename = "BOUNDARY_CASE2_EVIDENCE")]
    BoundaryCase2Evidence,
    #[serde(rename = "SUPERLINEAR")]
    Superlinear,
    #[serde(rename = "INCONCLUSIVE")]
    Inconclusive,
}

impl std::fmt::Display for GrowthVerdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            GrowthVerdict::FiniteDimensional => "FINITE_DIMENSIONAL",
            GrowthVerdict::SlowLinear => "SLOW_LINEAR",
            GrowthVerdict::BoundaryCase1 => "BOUNDARY_CASE1",
            GrowthVerdict::BoundaryCase2Evidence => "BOUNDARY_CASE2_EVIDENCE",
            GrowthVerdict::Superlinear => "SUPERLINEAR",
            GrowthVerdict::Inconclusive => "INCONCLUSIVE",
        };
        f.write_str(s)
    }
}

/// Cycle-structure facts of the trimmed transfer automaton.
#[derive(Debug, Clone, Serialize)]
pub struct StructureFacts {
    pub state_count: usize,
    pub core_state_count: usize,
    pub has_cycle: bool,
    pub cycle_components: usize,
    pub all_cycles_simple: bool,
    /// Distinct cycle-to-cycle connecting paths; each contributes one unit of
    /// linear growth. Absent when some cycle component is not a simple cycle.
    pub bridge_routes: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationReport {
    pub verdict: GrowthVerdict,
    pub horizon: usize,
    pub obstruction_count: usize,
    /// Distinct obstruction lengths supplied, sorted. The language is exact
    /// up to the maximum; beyond it a truncated presentation diverges from
    /// the language it approximates.
    pub obstruction_lengths: Vec<usize>,
    pub trusted_max_len: usize,
    pub structure: StructureFacts,
    /// `T(n) - n` over the tail beyond the trusted range, as decimal strings.
    pub t_minus_n_far_tail: Vec<String>,
    /// First length at which `T(n)` is zero, if any.
    pub first_zero_t: Option<usize>,
    /// First `n` from which `T(n) - n` is constant through the horizon.
    pub t_offset_stable_from: Option<usize>,
    /// First `n` from which `T(n)` is constant through the horizon.
    pub t_const_from: Option<usize>,
    /// Stabilization of `T(n) - n` inside the trusted range `1..=m`.
    pub trusted_t_offset_stable_from: Option<usize>,
    /// Stabilization of `T_RL(n) - n` inside the trusted range `1..=m`.
    pub trusted_trl_offset_stable_from: Option<usize>,
    /// `T_RL` stopped growing over the far tail.
    pub slow_growth_flag: bool,
    pub notes: Vec<String>,
}

/// Classifies the growth of `p` from its profile up to `horizon` plus the
/// automaton's cycle structure.
///
/// The horizon must reach `2m + 2` (`m` the longest obstruction). Beyond the
/// trusted range `n <= m` the finite obstruction set is taken at face value;
/// a presentation built by truncating an infinite antidictionary shows its
/// boundary behavior inside the trusted range while the far tail fans out,
/// which is exactly the `BOUNDARY_CASE2_EVIDENCE` signature (aperiodic core,
/// `T` and `T_RL` both pinned to `n + const` in the trusted range).
pub fn classify_growth(p: &MonomialPresentation, horizon: usize) -> ClassificationReport {
    let m = p.max_obstruction_len();
    let profile = growth_profile(p, horizon);
    let automaton = TransferAutomaton::build(p);
    let analysis = automaton.analyze();
    let structure = StructureFacts {
        state_count: automaton.states.len(),
        core_state_count: analysis.core_state_count(),
        has_cycle: analysis.has_cycle,
        cycle_components: analysis.cycle_components,
        all_cycles_simple: analysis.all_cycles_simple,
        bridge_routes: analysis.bridge_routes,
    };
    let mut notes = Vec::new();

    let far_lo = m + 1;
    let far: Vec<usize> = (far_lo..=horizon).collect();
    let t_minus_n_far_tail: Vec<String> = far.iter().map(|&n| offset_string(&profile, n)).collect();
    let first_zero_t = (0..=horizon).find(|&n| profile.t(n) == &BigUint::ZERO);
    let t_offset_stable_from = offset_stable_from(&profile, 1, horizon);
    let t_const_from = const_from(&profile, horizon);
    let (trusted_t, trusted_trl) = if m >= 1 {
        (
            offset_stable_from(&profile, 1, m),
            offset_stable_from_trl(&profile, 1, m),
        )
    } else {
        (None, None)
    };

    let slow_growth_flag = far
        .windows(2)
        .all(|w| profile.t_rl(w[0]) == profile.t_rl(w[1]));

    let verdict = if horizon < 2 * m + 2 {
        notes.push(format!(
            "horizon {horizon} below the required 2·{m} + 2; no verdict attempted"
        ));
        GrowthVerdict::Inconclusive
    } else if let Some(n) = first_zero_t {
        notes.push(format!("no avoiding words of length {n}"));
        GrowthVerdict::FiniteDimensional
    } else if !analysis.has_cycle {
        notes.push("automaton has no cycle: the language is finite beyond the horizon".into());
        GrowthVerdict::FiniteDimensional
    } else if analysis.all_cycles_simple && analysis.bridge_routes == Some(0) {
        if t_const_from.is_some_and(|n| n <= horizon.saturating_sub(1)) {
            notes.push("disjoint simple cycles, no connecting path: eventually periodic".into());
            GrowthVerdict::SlowLinear
        } else {
            notes.push("cycle structure says constant growth but the tail disagrees".into());
            GrowthVerdict::Inconclusive
        }
    } else if analysis.all_cycles_simple && analysis.bridge_routes == Some(1) {
        if t_offset_stable_from.is_some_and(|n| n < horizon) {
            notes.push("simple cycles with one connecting path: one-sided periodic tails".into());
            GrowthVerdict::BoundaryCase1
        } else {
            notes.push("one bridge route but T(n) - n not settled in the tail".into());
            GrowthVerdict::Inconclusive
        }
    } else if !analysis.all_cycles_simple
        && m >= 2
        && trusted_t.is_some_and(|n| n + 2 <= m)
        && trusted_trl.is_some_and(|n| n + 2 <= m)
    {
        notes.push(format!(
            "aperiodic core; T and T_RL follow n + const for the supplied obstruction \
             lengths (exact up to {m}); evidence only, a finite set cannot settle case 2"
        ));
        GrowthVerdict::BoundaryCase2Evidence
    } else if grows_through_tail(&profile, far_lo, horizon) {
        notes.push("T(n) - n grows through the tail".into());
        GrowthVerdict::Superlinear
    } else {
        notes.push("observed profile matches no structural signature".into());
        GrowthVerdict::Inconclusive
    };

    ClassificationReport {
        verdict,
        horizon,
        obstruction_count: p.obstructions().len(),
        obstruction_lengths: p.obstruction_lengths(),
        trusted_max_len: m,
        structure,
        t_minus_n_far_tail,
        first_zero_t,
        t_offset_stable_from,
        t_const_from,
        trusted_t_offset_stable_from: trusted_t,
        trusted_trl_offset_stable_from: trusted_trl,
        slow_growth_flag,
        notes,
    }
}

fn offset_string(profile: &GrowthProfile, n: usize) -> String {
    match profile.t_minus_n(n) {
        Some(v) => v.to_string(),
        None => {
            let t = profile.t(n);
            format!("{t} - {n}")
        }
    }
}

/// First `n` in `lo..=hi` from which `T(n) - n` stays constant through `hi`.
fn offset_stable_from(profile: &GrowthProfile, lo: usize, hi: usize) -> Option<usize> {
    stable_scan(lo, hi, |n| profile.t(n).clone())
}

fn offset_stable_from_trl(profile: &GrowthProfile, lo: usize, hi: usize) -> Option<usize> {
    stable_scan(lo, hi, |n| profile.t_rl(n).clone())
}

/// The offset at `n` is `value(n) - n`; constancy is checked as
/// `value(n) + (hi - n) = value(hi)` to stay in unsigned arithmetic.
fn stable_scan(lo: usize, hi: usize, value: impl Fn(usize) -> BigUint) -> Option<usize> {
    if lo > hi {
        return None;
    }
    let v_hi = value(hi);
    let mut from = None;
    for n in (lo..=hi).rev() {
        if value(n) + BigUint::from(hi - n) == v_hi {
            from = Some(n);
        } else {
            break;
        }
    }
    from
}

fn const_from(profile: &GrowthProfile, horizon: usize) -> Option<usize> {
    let last = profile.t(horizon).clone();
    let mut from = None;
    for n in (1..=horizon).rev() {
        if profile.t(n) == &last {
            from = Some(n);
        } else {
            break;
        }
    }
    from
}

fn grows_through_tail(profile: &GrowthProfile, lo: usize, hi: usize) -> bool {
    if lo >= hi {
        return false;
    }
    let start = profile.t(lo).clone() + BigUint::from(hi - lo);
    profile.t(hi) > &start
}
