use std::collections::VecDeque;

use petgraph::graph::{DiGraph, NodeIndex};
use words_core::SymbolId;

use crate::presentation::MonomialPresentation;

/// Transfer automaton of an avoidance language: states are the avoiding
/// words of length `m - 1` (`m` the longest obstruction), a transition
/// appends one letter and tests the fresh length-`m` suffix.
#[derive(Debug)]
pub(crate) struct TransferAutomaton {
    pub state_len: usize,
    pub states: Vec<Vec<SymbolId>>,
    /// `trans[state][letter]` is the follow state when the extension avoids
    /// every obstruction.
    pub trans: Vec<Vec<Option<usize>>>,
    /// Avoiding words of each length `0..=state_len` (the last level is the
    /// state list itself).
    pub short_words: Vec<Vec<Vec<SymbolId>>>,
}

impl TransferAutomaton {
    pub fn build(p: &MonomialPresentation) -> Self {
        let alphabet_len = p.alphabet().len();
        let m = p.max_obstruction_len();
        let state_len = m.saturating_sub(1);
        let obstructions: Vec<&[SymbolId]> = p.obstructions().iter().map(|o| o.letters()).collect();

        let mut levels: Vec<Vec<Vec<SymbolId>>> = vec![vec![Vec::new()]];
        for _ in 0..state_len {
            let mut next = Vec::new();
            for w in levels.last().unwrap() {
                for letter in 0..alphabet_len {
                    let mut cand = w.clone();
                    cand.push(SymbolId(letter as u32));
                    if !ends_with_obstruction(&cand, &obstructions) {
                        next.push(cand);
                    }
                }
            }
            levels.push(next);
        }
        let states = levels.last().unwrap().clone();
        let mut trans = Vec::with_capacity(states.len());
        for s in &states {
            let mut row = vec![None; alphabet_len];
            for (letter, slot) in row.iter_mut().enumerate() {
                let mut cand = s.clone();
                cand.push(SymbolId(letter as u32));
                if !ends_with_obstruction(&cand, &obstructions) {
                    let follow: Vec<SymbolId> = cand[cand.len() - state_len..].to_vec();
                    let j = states
                        .binary_search(&follow)
                        .expect("suffix of an avoiding word avoids");
                    *slot = Some(j);
                }
            }
            trans.push(row);
        }
        TransferAutomaton {
            state_len,
            states,
            trans,
            short_words: levels,
        }
    }

    pub fn analyze(&self) -> CoreAnalysis {
        let n = self.states.len();
        let mut graph: DiGraph<(), ()> = DiGraph::new();
        let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
        for (i, row) in self.trans.iter().enumerate() {
            for t in row.iter().flatten() {
                graph.add_edge(nodes[i], nodes[*t], ());
            }
        }
        let sccs = petgraph::algo::tarjan_scc(&graph);
        let mut component = vec![0usize; n];
        for (c, members) in sccs.iter().enumerate() {
            for node in members {
                component[node.index()] = c;
            }
        }
        let mut on_cycle = vec![false; n];
        for members in &sccs {
            if members.len() >= 2 {
                for node in members {
                    on_cycle[node.index()] = true;
                }
            } else {
                let i = members[0].index();
                if self.trans[i].iter().flatten().any(|&t| t == i) {
                    on_cycle[i] = true;
                }
            }
        }

        let succ: Vec<Vec<usize>> = self
            .trans
            .iter()
            .map(|row| row.iter().flatten().copied().collect())
            .collect();
        let mut pred: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, row) in succ.iter().enumerate() {
            for &t in row {
                pred[t].push(i);
            }
        }
        let reach_from_cycle = spread(&on_cycle, &succ);
        let reach_to_cycle = spread(&on_cycle, &pred);
        let core: Vec<bool> = (0..n)
            .map(|i| reach_from_cycle[i] && reach_to_cycle[i])
            .collect();

        // cycle components and their simplicity, restricted to the core
        let mut cycle_components = 0usize;
        let mut all_simple = true;
        for members in &sccs {
            let i0 = members[0].index();
            if !on_cycle[i0] || !core[i0] {
                continue;
            }
            cycle_components += 1;
            for node in members {
                let i = node.index();
                let within = succ[i]
                    .iter()
                    .filter(|&&t| component[t] == component[i])
                    .count();
                if within != 1 {
                    all_simple = false;
                }
            }
        }

        let bridge_routes = if all_simple {
            Some(count_bridge_routes(&succ, &on_cycle, &core, &component))
        } else {
            None
        };

        // a cycle reaches itself both ways, so every cycle lies in the core
        CoreAnalysis {
            reach_from_cycle,
            reach_to_cycle,
            core,
            has_cycle: cycle_components > 0,
            cycle_components,
            all_cycles_simple: all_simple,
            bridge_routes,
        }
    }
}

fn ends_with_obstruction(word: &[SymbolId], obstructions: &[&[SymbolId]]) -> bool {
    obstructions
        .iter()
        .any(|o| o.len() <= word.len() && word[word.len() - o.len()..] == **o)
}

fn spread(seed: &[bool], adj: &[Vec<usize>]) -> Vec<bool> {
    let mut seen = seed.to_vec();
    let mut queue: VecDeque<usize> = seed
        .iter()
        .enumerate()
        .filter(|(_, &b)| b)
        .map(|(i, _)| i)
        .collect();
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen
}

/// Counts distinct paths in the core from a cycle state to a cycle state
/// whose interior avoids cycle states. Each such route contributes one unit
/// of linear growth to the avoidance count.
fn count_bridge_routes(
    succ: &[Vec<usize>],
    on_cycle: &[bool],
    core: &[bool],
    component: &[usize],
) -> u64 {
    let n = succ.len();
    // paths from a non-cycle core state down to the first cycle state
    let mut memo: Vec<Option<u64>> = vec![None; n];
    fn paths(
        i: usize,
        succ: &[Vec<usize>],
        on_cycle: &[bool],
        core: &[bool],
        memo: &mut Vec<Option<u64>>,
    ) -> u64 {
        if let Some(v) = memo[i] {
            return v;
        }
        let mut total = 0u64;
        for &t in &succ[i] {
            if !core[t] {
                continue;
            }
            let add = if on_cycle[t] {
                1
            } else {
                paths(t, succ, on_cycle, core, memo)
            };
            total = total.saturating_add(add);
        }
        memo[i] = Some(total);
        total
    }
    let mut routes = 0u64;
    for i in 0..n {
        if !core[i] || !on_cycle[i] {
            continue;
        }
        for &t in &succ[i] {
            if !core[t] {
                continue;
            }
            let add = if on_cycle[t] {
                // the unique same-component edge is the cycle itself
                u64::from(component[t] != component[i])
            } else {
                paths(t, succ, on_cycle, core, &mut memo)
            };
            routes = routes.saturating_add(add);
        }
    }
    routes
}

#[derive(Debug, Clone)]
pub(crate) struct CoreAnalysis {
    pub reach_from_cycle: Vec<bool>,
    pub reach_to_cycle: Vec<bool>,
    pub core: Vec<bool>,
    pub has_cycle: bool,
    pub cycle_components: usize,
    pub all_cycles_simple: bool,
    /// Only meaningful when every cycle is simple.
    pub bridge_routes: Option<u64>,
}

impl CoreAnalysis {
    pub fn core_state_count(&self) -> usize {
        self.core.iter().filter(|&&b| b).count()
    }
}
