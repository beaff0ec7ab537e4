//! Small closure systems with known hypergraphs and optimum bases, shared by
//! the test suites and the benches.

use std::sync::Arc;

use crate::base::ImplicationalBase;
use crate::classes::poset::Poset;
use crate::ground::GroundSet;

fn letters(n: usize) -> Arc<GroundSet> {
    Arc::new(GroundSet::letters(n).expect("letter universe"))
}

fn rules(n: usize, rules: &[(&str, &str)]) -> ImplicationalBase {
    let spaced: Vec<(String, String)> = rules
        .iter()
        .map(|(p, c)| (spread(p), spread(c)))
        .collect();
    let refs: Vec<(&str, &str)> = spaced.iter().map(|(p, c)| (p.as_str(), c.as_str())).collect();
    ImplicationalBase::from_rules(letters(n), &refs).expect("fixture rules")
}

/// `"abe"` to `"a b e"`.
fn spread(compact: &str) -> String {
    compact
        .chars()
        .map(String::from)
        .collect::<Vec<_>>()
        .join(" ")
}

/// Canonical base of a six-element system with essential sets `ab`, `cdef`
/// and `abcdef`. Not a convex geometry (`ab` has two minimal spanning sets).
pub fn six_element_canonical() -> ImplicationalBase {
    rules(
        6,
        &[
            ("a", "b"),
            ("b", "a"),
            ("f", "cde"),
            ("ce", "df"),
            ("de", "cf"),
            ("abe", "cdf"),
            ("abd", "cef"),
        ],
    )
}

/// An optimum base equivalent to [`six_element_canonical`].
pub fn six_element_optimum() -> ImplicationalBase {
    rules(
        6,
        &[
            ("a", "b"),
            ("b", "a"),
            ("f", "ce"),
            ("ce", "d"),
            ("de", "f"),
            ("ad", "e"),
            ("ae", "c"),
        ],
    )
}

/// Convex geometry whose top hypergraph has overlapping edges `de`, `ce`.
pub fn non_disjoint_geometry() -> ImplicationalBase {
    rules(5, &[("ae", "cd"), ("bcd", "e"), ("ab", "cde")])
}

/// Convex geometry with disjoint-edge hypergraphs that is neither
/// double-shelling, acyclic, affine nor acceptant.
pub fn mixed_geometry() -> ImplicationalBase {
    rules(5, &[("ac", "b"), ("bd", "c"), ("ad", "bc"), ("e", "ab")])
}

/// 2-acceptant geometry on `abcd` with closed sets
/// `∅ a b c d ac bc cd abc acd abcd`; its optimum base is unique.
pub fn acceptant_left() -> ImplicationalBase {
    rules(4, &[("ab", "c"), ("ad", "c"), ("bd", "a")])
}

/// 2-acceptant geometry on `abcd` with closed sets
/// `∅ a b c d ab bc cd abc bcd abcd`; two optimum bases, differing on `ad`.
pub fn acceptant_right() -> ImplicationalBase {
    rules(4, &[("ac", "b"), ("bd", "c"), ("ad", "b")])
}

/// Ten-element poset on `a..h, x, y`: `x` below `a b c d`; `a`, `b` below
/// `f`, `g`; `f`, `g`, `d` below `y`; chain `c < e < h < y`.
pub fn ten_element_poset() -> Poset {
    let names = ["a", "b", "c", "d", "e", "f", "g", "h", "x", "y"];
    let universe = Arc::new(GroundSet::new(names).expect("poset universe"));
    let covers = [
        ("x", "a"),
        ("x", "b"),
        ("x", "c"),
        ("x", "d"),
        ("a", "f"),
        ("a", "g"),
        ("b", "f"),
        ("b", "g"),
        ("f", "y"),
        ("g", "y"),
        ("d", "y"),
        ("c", "e"),
        ("e", "h"),
        ("h", "y"),
    ];
    Poset::from_named_pairs(universe, &covers).expect("poset relation")
}

fn over_poset(rules: &[(&str, &str)]) -> ImplicationalBase {
    let universe = ten_element_poset().shared_universe();
    let spaced: Vec<(String, String)> = rules.iter().map(|(p, c)| (spread(p), spread(c))).collect();
    let refs: Vec<(&str, &str)> = spaced.iter().map(|(p, c)| (p.as_str(), c.as_str())).collect();
    ImplicationalBase::from_rules(universe, &refs).expect("poset rules")
}

/// The canonical base of the double-shelling geometry of [`ten_element_poset`].
pub fn ten_element_poset_canonical() -> ImplicationalBase {
    over_poset(&[
        ("xf", "ab"),
        ("xg", "ab"),
        ("xe", "c"),
        ("xh", "ec"),
        ("xy", "abcdefgh"),
        ("ay", "fg"),
        ("by", "fg"),
        ("cy", "eh"),
        ("ey", "h"),
        ("ch", "e"),
    ])
}

/// A published optimum base of the same geometry.
pub fn ten_element_poset_optimum() -> ImplicationalBase {
    over_poset(&[
        ("xf", "ab"),
        ("xg", "ab"),
        ("xe", "c"),
        ("xh", "c"),
        ("xy", "ade"),
        ("ay", "fg"),
        ("by", "fg"),
        ("cy", "e"),
        ("ey", "h"),
        ("ch", "e"),
    ])
}

/// Every named base fixture, for sweeps.
pub fn all_bases() -> Vec<(&'static str, ImplicationalBase)> {
    vec![
        ("six-element-canonical", six_element_canonical()),
        ("six-element-optimum", six_element_optimum()),
        ("non-disjoint", non_disjoint_geometry()),
        ("mixed", mixed_geometry()),
        ("acceptant-left", acceptant_left()),
        ("acceptant-right", acceptant_right()),
        ("poset-canonical", ten_element_poset_canonical()),
        ("poset-optimum", ten_element_poset_optimum()),
    ]
}
