use std::collections::VecDeque;

use crate::error::WordError;
use crate::factors::FactorSet;
use crate::word::FiniteWord;

/// Return words of `v`: the gap words between consecutive occurrence starts.
/// Overlapping occurrences of `v` are allowed; consecutiveness guarantees no
/// further occurrence of `v` starts strictly inside a gap.
#[derive(Debug, Clone)]
pub struct ReturnWords {
    pub factor: FiniteWord,
    /// Distinct gap words, in word order.
    pub words: Vec<FiniteWord>,
    /// Fewer than two occurrences in the window: nothing can be concluded.
    pub insufficient_window: bool,
}

pub fn return_words(fs: &FactorSet, v: &FiniteWord) -> Result<ReturnWords, WordError> {
    let occ = fs.require(v)?.occurrences().to_vec();
    if occ.len() < 2 {
        return Ok(ReturnWords {
            factor: v.clone(),
            words: Vec::new(),
            insufficient_window: true,
        });
    }
    let mut words: Vec<FiniteWord> = Vec::new();
    for pair in occ.windows(2) {
        let gap = fs.source().factor(pair[0]..pair[1]);
        if !words.contains(&gap) {
            words.push(gap);
        }
    }
    words.sort_by(|a, b| a.cmp_word_order(b));
    Ok(ReturnWords {
        factor: v.clone(),
        words,
        insufficient_window: false,
    })
}

/// Smallest `N` such that every length-`N` window of the source contains `v`,
/// provided the claim is supported by at least two windows. `None` when no
/// such `N` exists within the prefix: a single vacuous window (`N` equal to
/// the prefix length) is not accepted as evidence.
pub fn uniform_recurrence_witness(
    fs: &FactorSet,
    v: &FiniteWord,
) -> Result<Option<usize>, WordError> {
    let occ = fs.require(v)?.occurrences();
    let len = fs.source().len();
    let m = v.len();
    // A window [q, q+N) contains v iff some occurrence p >= q ends by q+N.
    // The binding constraints are q = 0, q just past each occurrence start,
    // and the tail after the last occurrence.
    let mut needed = occ[0] + m;
    for pair in occ.windows(2) {
        needed = needed.max(pair[1] + m - pair[0] - 1);
    }
    needed = needed.max(len - occ[occ.len() - 1]);
    if needed < len {
        Ok(Some(needed))
    } else {
        Ok(None)
    }
}

/// Per-`k` recurrence evidence: strong connectivity of the factor-adjacency
/// graph and the occurrence count floor. Verdicts are relative to the
/// analyzed prefix, never a statement about an infinite word.
#[derive(Debug, Clone)]
pub struct RecurrenceLevel {
    pub k: usize,
    pub graph_strongly_connected: bool,
    pub min_occurrences: usize,
    pub every_factor_occurs_twice: bool,
}

#[derive(Debug, Clone)]
pub struct RecurrenceEvidence {
    pub prefix_len: usize,
    pub k_max: usize,
    pub levels: Vec<RecurrenceLevel>,
}

impl RecurrenceEvidence {
    pub fn all_strongly_connected(&self) -> bool {
        self.levels.iter().all(|l| l.graph_strongly_connected)
    }

    pub fn all_factors_recur(&self) -> bool {
        self.levels.iter().all(|l| l.every_factor_occurs_twice)
    }
}

pub fn recurrence_evidence(fs: &FactorSet, k_max: usize) -> Result<RecurrenceEvidence, WordError> {
    if k_max >= fs.max_n() {
        return Err(WordError::InsufficientWindow {
            needed: k_max + 1,
            max_n: fs.max_n(),
        });
    }
    let mut levels = Vec::with_capacity(k_max);
    for k in 1..=k_max {
        let min_occurrences = fs
            .factors(k)
            .iter()
            .map(|f| f.occurrences().len())
            .min()
            .unwrap_or(0);
        levels.push(RecurrenceLevel {
            k,
            graph_strongly_connected: factor_graph_strongly_connected(fs, k),
            min_occurrences,
            every_factor_occurs_twice: min_occurrences >= 2,
        });
    }
    Ok(RecurrenceEvidence {
        prefix_len: fs.source().len(),
        k_max,
        levels,
    })
}

/// Strong connectivity of the graph on length-`k` factors whose edges are the
/// length-`k+1` factors (prefix -> suffix incidence).
fn factor_graph_strongly_connected(fs: &FactorSet, k: usize) -> bool {
    let n = fs.factor_count(k);
    if n == 0 {
        return true;
    }
    let mut fwd = vec![Vec::new(); n];
    let mut bwd = vec![Vec::new(); n];
    for edge in fs.factors(k + 1) {
        let letters = edge.letters();
        let from = fs
            .factors(k)
            .binary_search_by(|f| f.letters().cmp(&letters[..k]))
            .expect("prefix of a factor is a factor");
        let to = fs
            .factors(k)
            .binary_search_by(|f| f.letters().cmp(&letters[1..]))
            .expect("suffix of a factor is a factor");
        fwd[from].push(to);
        bwd[to].push(from);
    }
    reaches_all(&fwd, 0, n) && reaches_all(&bwd, 0, n)
}

fn reaches_all(adj: &[Vec<usize>], start: usize, n: usize) -> bool {
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([start]);
    seen[start] = true;
    let mut count = 1;
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                count += 1;
                queue.push_back(v);
            }
        }
    }
    count == n
}
