//! Quasi-closed hypergraphs and their hitting sets.
//!
//! For an essential set `C`, the hypergraph has vertex set `C` and one edge
//! `C ∖ Q` per inclusion-maximal quasi-closed set `Q` spanning `C`. A base of
//! a convex geometry is optimum exactly when each essential set carries one
//! implication `ex(C) -> T` with `T` a minimum hitting set of this hypergraph.

use itertools::Itertools;

use crate::base::ImplicationalBase;
use crate::closure::ClosureFn;
use crate::error::{guard_bits, Error, Result};
use crate::exec::Exec;
use crate::lattice::LatticeView;
use crate::set::ElementSet;

/// Candidate sets enumerated per hypergraph are capped at `2^HQC_GUARD_BITS`.
pub const HQC_GUARD_BITS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuasiClosedHypergraph {
    pub essential_set: ElementSet,
    pub extreme: ElementSet,
    /// Edges in canonical set order.
    pub edges: Vec<ElementSet>,
}

pub fn build_hqc(
    base: &ImplicationalBase,
    view: &LatticeView,
    c: ElementSet,
) -> Result<QuasiClosedHypergraph> {
    build_hqc_with(base, view, c, Exec::default())
}

pub fn build_hqc_with(
    base: &ImplicationalBase,
    view: &LatticeView,
    c: ElementSet,
    exec: Exec,
) -> Result<QuasiClosedHypergraph> {
    let extreme = view.extreme_points(c)?;
    if !view.is_essential(c) {
        return Err(Error::NotEssential(base.universe().format_set(c)));
    }
    let cf = ClosureFn::new(base);

    // In a convex geometry every spanning set of C contains ex(C), so only
    // the free part C ∖ ex(C) varies.
    let (fixed, free) = if view.is_convex_geometry() {
        (extreme, c - extreme)
    } else {
        (ElementSet::EMPTY, c)
    };
    guard_bits(free.len(), HQC_GUARD_BITS)?;
    let free_bits: Vec<usize> = free.iter().collect();

    let mut quasi = exec.filter_map_range(0..1u64 << free_bits.len(), |k| {
        let s = expand(k, &free_bits) | fixed;
        (s != c && cf.close(s) == c && cf.is_quasi_closed(s)).then_some(s)
    });
    quasi.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.lex_cmp(b)));

    let mut maximal: Vec<ElementSet> = Vec::new();
    for q in quasi {
        if !maximal.iter().any(|m| q.is_proper_subset(*m)) {
            maximal.push(q);
        }
    }
    let mut edges: Vec<ElementSet> = maximal.into_iter().map(|q| c - q).collect();
    edges.sort_by(ElementSet::canonical_cmp);

    Ok(QuasiClosedHypergraph {
        essential_set: c,
        extreme,
        edges,
    })
}

/// Hypergraphs of every essential set, in closed-set order.
pub fn all_hypergraphs(
    base: &ImplicationalBase,
    view: &LatticeView,
) -> Result<Vec<QuasiClosedHypergraph>> {
    all_hypergraphs_with(base, view, Exec::default())
}

pub fn all_hypergraphs_with(
    base: &ImplicationalBase,
    view: &LatticeView,
    exec: Exec,
) -> Result<Vec<QuasiClosedHypergraph>> {
    let essentials = view.essential_sets();
    // Parallelism goes across essential sets; each build stays sequential.
    exec.map_slice(&essentials, |&c| build_hqc_with(base, view, c, Exec::Sequential))
        .into_iter()
        .collect()
}

/// Scatters the low bits of `k` onto the positions in `bits`.
pub(crate) fn expand(k: u64, bits: &[usize]) -> ElementSet {
    bits.iter()
        .enumerate()
        .filter(|(j, _)| k >> j & 1 == 1)
        .map(|(_, &b)| b)
        .collect()
}

impl QuasiClosedHypergraph {
    pub fn vertices(&self) -> ElementSet {
        self.edges.iter().fold(ElementSet::EMPTY, |acc, &e| acc | e)
    }

    pub fn is_hitting_set(&self, t: ElementSet) -> bool {
        self.edges.iter().all(|e| e.intersects(t))
    }

    pub fn has_disjoint_edges(&self) -> bool {
        self.edges
            .iter()
            .tuple_combinations()
            .all(|(a, b)| a.is_disjoint(*b))
    }

    /// Inclusion-minimal transversals, by brute force over subsets of the
    /// union of the edges. Canonical order.
    pub fn minimal_hitting_sets(&self) -> Result<Vec<ElementSet>> {
        let vertices = self.vertices();
        guard_bits(vertices.len(), HQC_GUARD_BITS)?;
        let mut found: Vec<ElementSet> = vertices
            .subsets()
            .filter(|&t| {
                self.is_hitting_set(t) && t.iter().all(|x| !self.is_hitting_set(t.without(x)))
            })
            .collect();
        found.sort_by(ElementSet::canonical_cmp);
        Ok(found)
    }

    /// A cardinality-minimum transversal; among those, the one with the
    /// lexicographically smallest ascending index sequence.
    pub fn minimum_hitting_set(&self) -> ElementSet {
        let vertices: Vec<usize> = self.vertices().iter().collect();
        (0..=vertices.len())
            .find_map(|k| {
                vertices
                    .iter()
                    .copied()
                    .combinations(k)
                    .map(ElementSet::from_indices)
                    .find(|&t| self.is_hitting_set(t))
            })
            .unwrap_or(ElementSet::EMPTY)
    }

    /// Every cardinality-minimum transversal, canonical order.
    pub fn minimum_hitting_sets(&self) -> Result<Vec<ElementSet>> {
        let size = self.minimum_hitting_set().len();
        Ok(self
            .minimal_hitting_sets()?
            .into_iter()
            .filter(|t| t.len() == size)
            .collect())
    }
}

pub fn minimal_hitting_sets(h: &QuasiClosedHypergraph) -> Result<Vec<ElementSet>> {
    h.minimal_hitting_sets()
}

pub fn minimum_hitting_set(h: &QuasiClosedHypergraph) -> ElementSet {
    h.minimum_hitting_set()
}

pub fn has_disjoint_edges(h: &QuasiClosedHypergraph) -> bool {
    h.has_disjoint_edges()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::lattice::enumerate_lattice;

    fn sets(base: &ImplicationalBase, names: &[&str]) -> Vec<ElementSet> {
        let mut v: Vec<ElementSet> = names
            .iter()
            .map(|s| base.universe().parse_set(s).unwrap())
            .collect();
        v.sort_by(ElementSet::canonical_cmp);
        v
    }

    fn hqc(base: &ImplicationalBase, c: &str) -> QuasiClosedHypergraph {
        let view = enumerate_lattice(base).unwrap();
        build_hqc(base, &view, base.universe().parse_set(c).unwrap()).unwrap()
    }

    fn graph(base: &ImplicationalBase, edges: &[&str]) -> QuasiClosedHypergraph {
        QuasiClosedHypergraph {
            essential_set: base.universe().full(),
            extreme: ElementSet::EMPTY,
            edges: sets(base, edges),
        }
    }

    #[test]
    fn six_element_hypergraphs() {
        let b = fixtures::six_element_canonical();
        assert_eq!(hqc(&b, "c d e f").edges, sets(&b, &["f", "d", "c", "e"]));
        assert_eq!(hqc(&b, "a b c d e f").edges, sets(&b, &["e f", "c d f"]));
        assert_eq!(hqc(&b, "a b").edges, sets(&b, &["a", "b"]));
    }

    #[test]
    fn overlapping_edges() {
        let b = fixtures::non_disjoint_geometry();
        let h = hqc(&b, "a b c d e");
        assert_eq!(h.edges, sets(&b, &["d e", "c e"]));
        assert!(!h.has_disjoint_edges());
    }

    #[test]
    fn mixed_geometry_hypergraphs() {
        let b = fixtures::mixed_geometry();
        let view = enumerate_lattice(&b).unwrap();
        let all = all_hypergraphs(&b, &view).unwrap();
        assert_eq!(all.len(), 4);
        assert!(all.iter().all(QuasiClosedHypergraph::has_disjoint_edges));
        assert_eq!(hqc(&b, "a b e").edges, sets(&b, &["a", "b"]));
        assert_eq!(hqc(&b, "a b c").edges, sets(&b, &["b"]));
        assert_eq!(hqc(&b, "b c d").edges, sets(&b, &["c"]));
        assert_eq!(hqc(&b, "a b c d").edges, sets(&b, &["b c"]));
    }

    #[test]
    fn rejects_non_essential_and_non_closed() {
        let b = fixtures::mixed_geometry();
        let view = enumerate_lattice(&b).unwrap();
        let u = b.universe();
        assert!(matches!(
            build_hqc(&b, &view, u.parse_set("a b").unwrap()),
            Err(Error::NotEssential(_))
        ));
        assert!(matches!(
            build_hqc(&b, &view, u.parse_set("a c").unwrap()),
            Err(Error::NotClosed(_))
        ));
    }

    #[test]
    fn hitting_set_examples() {
        let b = fixtures::six_element_canonical();
        let singles = graph(&b, &["f", "d", "c", "e"]);
        assert_eq!(singles.minimal_hitting_sets().unwrap(), sets(&b, &["c d e f"]));

        let pair = graph(&b, &["b c"]);
        assert_eq!(pair.minimal_hitting_sets().unwrap(), sets(&b, &["b", "c"]));
        assert_eq!(pair.minimum_hitting_set(), sets(&b, &["b"])[0]);
        assert!(pair.has_disjoint_edges());

        let top = graph(&b, &["e f", "c d f"]);
        assert_eq!(top.minimal_hitting_sets().unwrap(), sets(&b, &["f", "c e", "d e"]));
        assert_eq!(top.minimum_hitting_set(), sets(&b, &["f"])[0]);
    }

    #[test]
    fn poset_components_minimum() {
        let b = fixtures::ten_element_poset_canonical();
        let h = graph(&b, &["a b g f", "d", "c e h"]);
        let t = h.minimum_hitting_set();
        assert_eq!(t.len(), 3);
        assert!(h.is_hitting_set(t));
        assert_eq!(t, b.universe().parse_set("a c d").unwrap());
    }

    #[test]
    fn sequential_and_parallel_builds_agree() {
        let b = fixtures::ten_element_poset_canonical();
        let view = enumerate_lattice(&b).unwrap();
        assert_eq!(
            all_hypergraphs_with(&b, &view, Exec::Sequential).unwrap(),
            all_hypergraphs_with(&b, &view, Exec::Parallel).unwrap()
        );
    }
}
