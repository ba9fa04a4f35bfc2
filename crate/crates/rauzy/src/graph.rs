use std::collections::VecDeque;

use words_core::{FactorSet, FiniteWord};

use crate::error::RauzyError;

/// Directed edge of a factor graph. The label is a length-`k+1` word whose
/// first `k` letters spell the source vertex and last `k` letters the target.
#[derive(Debug, Clone)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: FiniteWord,
}

/// The `k`-graph of a word: vertices are the length-`k` factors, edges the
/// length-`k+1` factors with prefix/suffix incidence. The same structure also
/// carries follower graphs and hand-built label-consistent graphs.
#[derive(Debug, Clone)]
pub struct RauzyGraph {
    k: usize,
    vertices: Vec<FiniteWord>,
    edges: Vec<Edge>,
    out_adj: Vec<Vec<usize>>,
    in_adj: Vec<Vec<usize>>,
}

/// Builds the `k`-graph of the analyzed prefix: vertices `F_k`, edges
/// `F_{k+1}`.
pub fn build_graph(fs: &FactorSet, k: usize) -> Result<RauzyGraph, RauzyError> {
    if k + 1 > fs.max_n() {
        return Err(RauzyError::WindowTooSmall {
            k,
            needed: k + 1,
            max_n: fs.max_n(),
        });
    }
    let vertices = fs.factor_words(k);
    let labels = fs.factor_words(k + 1);
    RauzyGraph::assemble(k, vertices, labels)
}

impl RauzyGraph {
    /// Builds a label-consistent graph from edge labels alone; vertices are
    /// the prefixes and suffixes that occur. Labels must share one length.
    pub fn from_edge_labels(labels: Vec<FiniteWord>) -> Result<Self, RauzyError> {
        let first = labels.first().ok_or(RauzyError::NoEdges)?;
        if first.is_empty() {
            return Err(RauzyError::LabelLength {
                label: first.to_string(),
                len: 0,
                expected: 1,
            });
        }
        let k = first.len() - 1;
        let mut vertices: Vec<FiniteWord> = Vec::new();
        for label in &labels {
            if label.len() != k + 1 {
                return Err(RauzyError::LabelLength {
                    label: label.to_string(),
                    len: label.len(),
                    expected: k + 1,
                });
            }
            for v in [label.factor(0..k), label.factor(1..k + 1)] {
                if !vertices.contains(&v) {
                    vertices.push(v);
                }
            }
        }
        vertices.sort_by(|a, b| a.cmp_word_order(b));
        Self::assemble(k, vertices, labels)
    }

    fn assemble(
        k: usize,
        vertices: Vec<FiniteWord>,
        labels: Vec<FiniteWord>,
    ) -> Result<Self, RauzyError> {
        let mut edges = Vec::with_capacity(labels.len());
        for label in labels {
            let from = vertices
                .binary_search_by(|v| v.letters().cmp(&label.letters()[..k]))
                .map_err(|_| RauzyError::DuplicateLabel(label.to_string()))?;
            let to = vertices
                .binary_search_by(|v| v.letters().cmp(&label.letters()[1..]))
                .map_err(|_| RauzyError::DuplicateLabel(label.to_string()))?;
            edges.push(Edge { from, to, label });
        }
        edges.sort_by(|a, b| a.label.cmp_word_order(&b.label));
        for pair in edges.windows(2) {
            if pair[0].label == pair[1].label {
                return Err(RauzyError::DuplicateLabel(pair[0].label.to_string()));
            }
        }
        let mut out_adj = vec![Vec::new(); vertices.len()];
        let mut in_adj = vec![Vec::new(); vertices.len()];
        for (i, e) in edges.iter().enumerate() {
            out_adj[e.from].push(i);
            in_adj[e.to].push(i);
        }
        Ok(RauzyGraph {
            k,
            vertices,
            edges,
            out_adj,
            in_adj,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[FiniteWord] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.out_adj[v].len()
    }

    pub fn in_degree(&self, v: usize) -> usize {
        self.in_adj[v].len()
    }

    pub fn out_edges(&self, v: usize) -> &[usize] {
        &self.out_adj[v]
    }

    /// The follower graph: one vertex per edge of `self`, with an edge from
    /// `A` to `B` whenever `A`'s target is `B`'s source. Labels merge the two
    /// overlapping words into a length-`k+2` word. On a saturated window the
    /// follower of the `k`-graph contains the `(k+1)`-graph.
    pub fn follower(&self) -> RauzyGraph {
        let mut vertices: Vec<FiniteWord> = self.edges.iter().map(|e| e.label.clone()).collect();
        vertices.sort_by(|a, b| a.cmp_word_order(b));
        let mut labels = Vec::new();
        for e1 in &self.edges {
            for &i2 in &self.out_adj[e1.to] {
                let e2 = &self.edges[i2];
                let last = e2.label.factor(e2.label.len() - 1..e2.label.len());
                let merged = e1.label.concat(&last).expect("same alphabet");
                labels.push(merged);
            }
        }
        RauzyGraph::assemble(self.k + 1, vertices, labels)
            .expect("merged labels are distinct and well formed")
    }

    /// Reachability in both directions between every pair of vertices.
    pub fn strongly_connected(&self) -> bool {
        let n = self.vertices.len();
        if n == 0 {
            return true;
        }
        self.reaches_all(0, false) && self.reaches_all(0, true)
    }

    fn reaches_all(&self, start: usize, reversed: bool) -> bool {
        let n = self.vertices.len();
        let mut seen = vec![false; n];
        seen[start] = true;
        let mut count = 1;
        let mut queue = VecDeque::from([start]);
        while let Some(u) = queue.pop_front() {
            let nexts = if reversed {
                &self.in_adj[u]
            } else {
                &self.out_adj[u]
            };
            for &ei in nexts {
                let v = if reversed {
                    self.edges[ei].from
                } else {
                    self.edges[ei].to
                };
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == n
    }

    /// Vertices of indegree >= 2 (in-forks) and outdegree >= 2 (out-forks).
    pub fn forks(&self) -> Forks {
        let in_forks = (0..self.vertices.len())
            .filter(|&v| self.in_degree(v) >= 2)
            .collect();
        let out_forks = (0..self.vertices.len())
            .filter(|&v| self.out_degree(v) >= 2)
            .collect();
        Forks {
            in_forks,
            out_forks,
        }
    }

    /// Deterministic DOT rendering: vertices in factor order, edges in label
    /// order.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph factors {\n");
        for v in &self.vertices {
            out.push_str(&format!("    \"{v}\";\n"));
        }
        for e in &self.edges {
            out.push_str(&format!(
                "    \"{}\" -> \"{}\" [label=\"{}\"];\n",
                self.vertices[e.from], self.vertices[e.to], e.label
            ));
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Forks {
    pub in_forks: Vec<usize>,
    pub out_forks: Vec<usize>,
}
