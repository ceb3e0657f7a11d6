mod common;

use common::{fixture, RHO_ROWS};
use numsemi::{qo_number, quasi_ordinarize, ordinarize, Explorer, ForestGraph, Semigroup};

fn listing(graph: &ForestGraph) -> Vec<(Semigroup, Option<Semigroup>)> {
    graph.nodes().iter().map(|s| (*s, graph.parent(s))).collect()
}

#[test]
fn forest_genus_four_matches_figure() {
    let f = Explorer::new().forest(4).unwrap();
    assert_eq!(listing(&f), fixture("forest_g4.txt"));
    assert_eq!(f.roots().len(), 4);
    assert_eq!(f.edges().len(), 3);
}

#[test]
fn forest_genus_six_matches_figure() {
    let f = Explorer::new().forest(6).unwrap();
    assert_eq!(listing(&f), fixture("forest_g6.txt"));
}

#[test]
fn forest_genus_seven_matches_figure() {
    let f = Explorer::new().forest(7).unwrap();
    assert_eq!(listing(&f), fixture("forest_g7.txt"));
    assert_eq!(f.roots().len(), 7);
}

#[test]
fn ordinarization_tree_genus_seven_matches_figure() {
    let t = Explorer::new().tree_tg(7).unwrap();
    assert_eq!(listing(&t), fixture("tree_t7.txt"));
}

#[test]
fn semigroup_tree_to_depth_six_matches_figure() {
    let t = Explorer::new().tree_t(6).unwrap();
    assert_eq!(listing(&t), fixture("tree_t_genus6.txt"));
    assert_eq!(t.depth_histogram(), vec![1, 1, 2, 4, 7, 12, 23]);
}

#[test]
fn forest_structure_up_to_genus_twelve() {
    let e = Explorer::new();
    for g in 1..=12 {
        let f = e.forest(g).unwrap();
        let all = e.semigroups_of_genus(g).unwrap();
        assert_eq!(f.nodes(), &all[..], "genus {g}");
        let expected_roots = if g == 1 { 1 } else { g as usize };
        assert_eq!(f.roots().len(), expected_roots, "genus {g}");
        assert_eq!(f.depth_histogram(), RHO_ROWS[g as usize - 1].to_vec(), "genus {g}");
        for s in f.nodes() {
            assert_eq!(f.depth(s), Some(qo_number(s)));
            match f.parent(s) {
                Some(p) => assert_eq!(quasi_ordinarize(s), p),
                None => assert!(s.is_ordinary() || s.is_quasi_ordinary()),
            }
        }
    }
}

#[test]
fn ordinarization_tree_covers_genus() {
    let e = Explorer::new();
    for g in 1..=10 {
        let t = e.tree_tg(g).unwrap();
        assert_eq!(t.nodes(), &e.semigroups_of_genus(g).unwrap()[..]);
        for (child, parent) in t.edges() {
            assert_eq!(ordinarize(&child), parent);
        }
    }
}

#[test]
fn dot_export_shape() {
    let dot = Explorer::new().forest(4).unwrap().to_dot();
    assert_eq!(dot.matches("[label=").count(), 7);
    assert_eq!(dot.matches(" -> ").count(), 3);
    assert!(dot.ends_with("}\n"));
}
