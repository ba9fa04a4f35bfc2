use std::fmt;

use crate::error::RauzyError;
use crate::graph::RauzyGraph;

/// Shape of a strongly connected graph with one in-fork and one out-fork and
/// one more edge than vertices: a bridge of `l >= 0` edges from the in-fork
/// to the out-fork and an unordered pair of return arcs of `r` and `s` edges.
/// `l = 0` means the forks coincide (a bispecial vertex). Arcs `{1, 1}` would
/// require parallel edges, which label-consistent graphs cannot carry, so the
/// pair is rejected.
///
/// Arcs are unordered: ordered variants would give some shapes two distinct
/// predecessors, while on unordered shapes the evolution steps below invert
/// uniquely (verified exhaustively in the tests).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ForkShape {
    bridge: usize,
    arc_small: usize,
    arc_large: usize,
}

impl ForkShape {
    pub fn new(bridge: usize, r: usize, s: usize) -> Result<Self, RauzyError> {
        let (small, large) = if r <= s { (r, s) } else { (s, r) };
        if small < 1 || (small == 1 && large == 1) {
            return Err(RauzyError::InvalidShape { l: bridge, r, s });
        }
        Ok(ForkShape {
            bridge,
            arc_small: small,
            arc_large: large,
        })
    }

    pub fn bridge(&self) -> usize {
        self.bridge
    }

    /// The two arc lengths, smallest first.
    pub fn arcs(&self) -> (usize, usize) {
        (self.arc_small, self.arc_large)
    }

    /// Total edge count of a realizing graph; such a graph has one vertex
    /// less.
    pub fn edge_total(&self) -> usize {
        self.bridge + self.arc_small + self.arc_large
    }

    /// Shapes the next-level graph can take. A positive bridge shortens by
    /// one while both arcs grow; a degenerate bridge splits on the bispecial
    /// vertex into up to two options, each keeping exactly one length-1 arc.
    pub fn successors(&self) -> Vec<ForkShape> {
        let (a, b) = self.arcs();
        if self.bridge >= 1 {
            vec![ForkShape::new(self.bridge - 1, a + 1, b + 1).expect("arcs grew past 1")]
        } else {
            let mut out = vec![
                ForkShape::new(b - 1, 1, a + 1).expect("one arc is 1, the other >= 2"),
                ForkShape::new(a - 1, 1, b + 1).expect("one arc is 1, the other >= 2"),
            ];
            out.sort();
            out.dedup();
            out
        }
    }

    /// The unique shape having `self` among its successors, or `None` on the
    /// roots of the calculus.
    ///
    /// Inverting the successor steps gives: both arcs `>= 2` come from
    /// `(l+1, {a-1, b-1})`; an arc equal to 1 comes from a degenerate bridge
    /// `(0, {b-1, l+1})`. The inversion fails exactly on `(0, {1, 2})` and on
    /// the equal-arc shapes `(l, {2, 2})`, whose formal preimages would have
    /// arcs `{1, 1}`. Successor steps never turn distinct arcs into equal
    /// ones, so the shapes descending from `(0, {1, 2})` — those realized by
    /// evolutions of binary minimal-growth words — all keep distinct arcs and
    /// terminate there; the leftover trees are rooted at the `(l, {2, 2})`
    /// shapes.
    pub fn predecessor(&self) -> Option<ForkShape> {
        let (a, b) = self.arcs();
        if a >= 2 {
            ForkShape::new(self.bridge + 1, a - 1, b - 1).ok()
        } else {
            ForkShape::new(0, b - 1, self.bridge + 1).ok()
        }
    }

    /// `true` when `predecessor` is undefined.
    pub fn is_root(&self) -> bool {
        self.predecessor().is_none()
    }

    /// The chain `self, predecessor(self), ...` down to a root. Each step
    /// drops the edge total by one, so the chain is finite.
    pub fn ancestry(&self) -> Vec<ForkShape> {
        let mut chain = vec![*self];
        let mut cur = *self;
        while let Some(prev) = cur.predecessor() {
            chain.push(prev);
            cur = prev;
        }
        chain
    }

    /// Parses `"l,r,s"`.
    pub fn parse(spec: &str) -> Result<Self, RauzyError> {
        let parts: Vec<&str> = spec.split(',').map(str::trim).collect();
        if parts.len() != 3 {
            return Err(RauzyError::ShapeParse(spec.to_string()));
        }
        let nums: Vec<usize> = parts
            .iter()
            .map(|p| {
                p.parse()
                    .map_err(|_| RauzyError::ShapeParse(spec.to_string()))
            })
            .collect::<Result<_, _>>()?;
        ForkShape::new(nums[0], nums[1], nums[2])
    }
}

impl fmt::Display for ForkShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {{{}, {}}})",
            self.bridge, self.arc_small, self.arc_large
        )
    }
}

/// Measures the bridge/arc shape of `g`, or `None` when `g` is not a strongly
/// connected one-in-one-out-fork graph with one more edge than vertices.
pub fn shape_of(g: &RauzyGraph) -> Option<ForkShape> {
    let m = g.vertex_count();
    if m == 0 || g.edge_count() != m + 1 || !g.strongly_connected() {
        return None;
    }
    let forks = g.forks();
    if forks.in_forks.len() != 1 || forks.out_forks.len() != 1 {
        return None;
    }
    let fork_in = forks.in_forks[0];
    let fork_out = forks.out_forks[0];
    if g.out_degree(fork_out) != 2 {
        return None;
    }

    let bridge = if fork_in == fork_out {
        0
    } else {
        walk_to(g, fork_in, fork_out)?
    };
    let outs = g.out_edges(fork_out);
    let arc_a = walk_arc(g, outs[0], fork_in)?;
    let arc_b = walk_arc(g, outs[1], fork_in)?;
    if bridge + arc_a + arc_b != g.edge_count() {
        return None;
    }
    ForkShape::new(bridge, arc_a, arc_b).ok()
}

/// Follows unique out-edges from `start` until reaching `stop`; edge count.
fn walk_to(g: &RauzyGraph, start: usize, stop: usize) -> Option<usize> {
    let mut cur = start;
    let mut steps = 0;
    while cur != stop {
        if g.out_degree(cur) != 1 || steps > g.edge_count() {
            return None;
        }
        let e = g.out_edges(cur)[0];
        cur = g.edges()[e].to;
        steps += 1;
    }
    Some(steps)
}

/// Takes `first_edge` and then follows unique out-edges until `stop`.
fn walk_arc(g: &RauzyGraph, first_edge: usize, stop: usize) -> Option<usize> {
    let mut cur = g.edges()[first_edge].to;
    let mut steps = 1;
    while cur != stop {
        if g.out_degree(cur) != 1 || steps > g.edge_count() {
            return None;
        }
        let e = g.out_edges(cur)[0];
        cur = g.edges()[e].to;
        steps += 1;
    }
    Some(steps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_graph;
    use words_core::{factor_set, Alphabet, FiniteWord};

    fn shape(l: usize, r: usize, s: usize) -> ForkShape {
        ForkShape::new(l, r, s).unwrap()
    }

    fn bin(text: &str) -> FiniteWord {
        FiniteWord::parse_chars(text, &Alphabet::binary()).unwrap()
    }

    #[test]
    fn arcs_are_unordered_and_one_one_rejected() {
        assert_eq!(shape(2, 5, 3), shape(2, 3, 5));
        assert!(ForkShape::new(4, 1, 1).is_err());
        assert!(ForkShape::new(0, 0, 2).is_err());
    }

    #[test]
    fn successor_of_positive_bridge() {
        assert_eq!(shape(1, 2, 3).successors(), vec![shape(0, 3, 4)]);
    }

    #[test]
    fn successors_of_degenerate_bridge() {
        let mut expect = vec![shape(2, 1, 3), shape(1, 1, 4)];
        expect.sort();
        assert_eq!(shape(0, 2, 3).successors(), expect);
    }

    #[test]
    fn degenerate_one_k_successor_contains_one_k_plus_one() {
        for k in 2..10 {
            let succ = shape(0, 1, k).successors();
            assert!(succ.contains(&shape(0, 1, k + 1)), "k = {k}");
        }
    }

    #[test]
    fn predecessor_examples() {
        assert_eq!(shape(2, 3, 4).predecessor(), Some(shape(3, 2, 3)));
        assert_eq!(shape(0, 1, 7).predecessor(), Some(shape(0, 1, 6)));
        assert_eq!(shape(0, 1, 2).predecessor(), None);
    }

    #[test]
    fn ancestry_chain_example() {
        let chain = shape(0, 3, 4).ancestry();
        assert_eq!(
            chain,
            vec![
                shape(0, 3, 4),
                shape(1, 2, 3),
                shape(2, 1, 2),
                shape(0, 1, 3),
                shape(0, 1, 2),
            ]
        );
    }

    #[test]
    fn base_ancestry_is_singleton() {
        assert_eq!(shape(0, 1, 2).ancestry(), vec![shape(0, 1, 2)]);
    }

    #[test]
    fn parse_round_trips() {
        assert_eq!(ForkShape::parse("0,3,4").unwrap(), shape(0, 3, 4));
        assert!(ForkShape::parse("1,1").is_err());
        assert!(ForkShape::parse("a,b,c").is_err());
    }

    #[test]
    fn shape_of_simple_fibonacci_style_graph() {
        // 1-graph of a long enough "abaababa..." style word: loop at a plus
        // the 2-cycle a<->b gives (0, {1, 2}).
        let w = bin("abaababaabaab");
        let fs = factor_set(&w, 2).unwrap();
        let g = build_graph(&fs, 1).unwrap();
        assert_eq!(shape_of(&g), Some(shape(0, 1, 2)));
    }

    #[test]
    fn pure_cycle_has_no_shape() {
        let fs = factor_set(&bin("abababab"), 2).unwrap();
        let g = build_graph(&fs, 1).unwrap();
        assert_eq!(shape_of(&g), None);
    }

    #[test]
    fn bridged_cycles_have_no_shape() {
        let g = crate::graph::RauzyGraph::from_edge_labels(vec![bin("aa"), bin("ab"), bin("bb")])
            .unwrap();
        assert_eq!(shape_of(&g), None);
    }
}
