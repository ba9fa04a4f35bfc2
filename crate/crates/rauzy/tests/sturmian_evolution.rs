//! Structure of factor graphs of generated rotation words: counts, forks,
//! follower agreement and the shape evolution.

use rauzy::{build_graph, shape_of, RauzyGraph};
use rotation::{sturmian_word, CirclePoint, QuadraticReal};
use words_core::{factor_set, FactorSet};

fn golden_factor_set(n: usize, max_n: usize) -> FactorSet {
    let w = sturmian_word(&QuadraticReal::golden(), CirclePoint::zero(), n).unwrap();
    factor_set(&w, max_n).unwrap()
}

#[test]
fn golden_graphs_have_minimal_counts_and_single_forks() {
    let fs = golden_factor_set(6000, 32);
    for k in 1..=30 {
        let g = build_graph(&fs, k).unwrap();
        assert_eq!(g.vertex_count(), k + 1, "vertices at k = {k}");
        assert_eq!(g.edge_count(), k + 2, "edges at k = {k}");
        assert!(g.strongly_connected(), "connectivity at k = {k}");
        let forks = g.forks();
        assert_eq!(forks.in_forks.len(), 1, "in-forks at k = {k}");
        assert_eq!(forks.out_forks.len(), 1, "out-forks at k = {k}");
    }
}

#[test]
fn ten_graph_has_eleven_vertices_and_twelve_edges() {
    let fs = golden_factor_set(4000, 12);
    let g = build_graph(&fs, 10).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (11, 12));
}

#[test]
fn follower_restricted_to_observed_factors_is_next_graph() {
    let fs = golden_factor_set(4000, 22);
    for k in 1..=20 {
        let g = build_graph(&fs, k).unwrap();
        let fol = g.follower();
        let next = build_graph(&fs, k + 1).unwrap();
        // follower vertices are exactly the next graph's vertices
        assert_eq!(fol.vertices(), next.vertices(), "k = {k}");
        // every next-graph edge appears among the follower's edges
        let fol_labels: Vec<String> = fol.edges().iter().map(|e| e.label.to_string()).collect();
        for e in next.edges() {
            assert!(
                fol_labels.contains(&e.label.to_string()),
                "edge {} missing from follower at k = {k}",
                e.label
            );
        }
    }
}

#[test]
fn shapes_follow_successor_transitions() {
    let fs = golden_factor_set(8000, 32);
    let shapes: Vec<_> = (1..=30)
        .map(|k| shape_of(&build_graph(&fs, k).unwrap()).expect("golden graphs have a shape"))
        .collect();
    assert_eq!(shapes[0], rauzy::ForkShape::new(0, 1, 2).unwrap());
    for (k, pair) in shapes.windows(2).enumerate() {
        assert!(
            pair[0].successors().contains(&pair[1]),
            "k = {}: {} does not step to {}",
            k + 1,
            pair[0],
            pair[1]
        );
        assert_eq!(pair[1].predecessor(), Some(pair[0]));
    }
    // edge totals match the complexity counts
    for (i, sh) in shapes.iter().enumerate() {
        assert_eq!(sh.edge_total(), i + 3, "total at k = {}", i + 1);
    }
}

#[test]
fn mixed_word_fork_counts_match_degree_scan() {
    // brute degree count on an arbitrary non-minimal word
    let w = words_core::FiniteWord::parse_chars(
        "ababaabbabaababbaabab",
        &words_core::Alphabet::binary(),
    )
    .unwrap();
    let fs = factor_set(&w, 4).unwrap();
    let g = build_graph(&fs, 2).unwrap();
    let forks = g.forks();
    let brute_in: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.edges().iter().filter(|e| e.to == v).count() >= 2)
        .collect();
    let brute_out: Vec<usize> = (0..g.vertex_count())
        .filter(|&v| g.edges().iter().filter(|e| e.from == v).count() >= 2)
        .collect();
    assert_eq!(forks.in_forks, brute_in);
    assert_eq!(forks.out_forks, brute_out);
}

#[test]
fn dot_export_lists_every_edge_once() {
    let fs = golden_factor_set(500, 4);
    let g = build_graph(&fs, 2).unwrap();
    let dot = g.to_dot();
    let arrow_lines = dot.lines().filter(|l| l.contains("->")).count();
    assert_eq!(arrow_lines, g.edge_count());
    let _parsed: Vec<&str> = dot.lines().collect();
    assert!(dot.starts_with("digraph") && dot.trim_end().ends_with('}'));
    let _ =
        RauzyGraph::from_edge_labels(g.edges().iter().map(|e| e.label.clone()).collect()).unwrap();
}
