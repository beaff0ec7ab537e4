//! Acyclic convex geometries: recognition through the minimal-generator
//! relation and a seeded generator.

use std::sync::Arc;

use petgraph::algo::{is_cyclic_directed, tarjan_scc};
use petgraph::graphmap::DiGraphMap;
use rand::seq::SliceRandom;
use rand::Rng;

use super::seeded;
use crate::base::{Implication, ImplicationalBase};
use crate::closure::ClosureFn;
use crate::ground::GroundSet;
use crate::lattice::LatticeView;
use crate::set::ElementSet;

/// Minimal sets `A` with `b ∉ A` and `b ∈ close(A)`, canonical order.
pub fn minimal_generators(base: &ImplicationalBase, b: usize) -> Vec<ElementSet> {
    let cf = ClosureFn::new(base);
    let rest = base.universe().full().without(b);
    let mut found: Vec<ElementSet> = rest
        .subsets()
        .filter(|&a| {
            cf.close(a).contains(b) && a.iter().all(|x| !cf.close(a.without(x)).contains(b))
        })
        .collect();
    found.sort_by(ElementSet::canonical_cmp);
    found
}

/// Arc `b -> a` whenever some minimal generator of `b` contains `a`.
pub fn delta_graph(base: &ImplicationalBase) -> DiGraphMap<usize, ()> {
    let mut g = DiGraphMap::new();
    for b in 0..base.n() {
        g.add_node(b);
        for generator in minimal_generators(base, b) {
            for a in generator.iter() {
                g.add_edge(b, a, ());
            }
        }
    }
    g
}

/// Elements of a cycle of the generator relation, if one exists.
pub fn delta_cycle(base: &ImplicationalBase) -> Option<ElementSet> {
    let g = delta_graph(base);
    tarjan_scc(&g)
        .into_iter()
        .find(|scc| scc.len() > 1 || g.contains_edge(scc[0], scc[0]))
        .map(ElementSet::from_indices)
}

/// A convex geometry whose generator relation has no cycle.
pub fn is_acyclic_geometry(base: &ImplicationalBase, view: &LatticeView) -> bool {
    view.is_convex_geometry() && !is_cyclic_directed(&delta_graph(base))
}

/// Sufficient test on one base: the digraph with arcs from premise to
/// conclusion elements is acyclic.
pub fn implication_graph_is_acyclic(base: &ImplicationalBase) -> bool {
    let mut g: DiGraphMap<usize, ()> = DiGraphMap::new();
    for imp in base.iter() {
        for a in imp.premise().iter() {
            for b in imp.conclusion().iter() {
                g.add_edge(a, b, ());
            }
        }
    }
    !is_cyclic_directed(&g)
}

/// Random base on `size` letters whose implications all point forward in a
/// shuffled order: premises of one to three earlier elements, conclusions a
/// non-empty set of later ones.
pub fn random_acyclic_base(seed: u64, size: usize) -> ImplicationalBase {
    let mut rng = seeded(seed);
    let universe = Arc::new(GroundSet::letters(size).expect("letter universe"));
    let mut order: Vec<usize> = (0..size).collect();
    order.shuffle(&mut rng);
    let count = if size < 2 { 0 } else { rng.gen_range(1..=size + 2) };
    let imps = (0..count)
        .map(|_| {
            let cut = rng.gen_range(1..size);
            let k = rng.gen_range(1..=cut.min(3));
            let premise = ElementSet::from_indices(order[..cut].choose_multiple(&mut rng, k).copied());
            let last = order[..cut]
                .iter()
                .rposition(|&x| premise.contains(x))
                .expect("premise is non-empty");
            let later = &order[last + 1..];
            let m = rng.gen_range(1..=later.len().min(2));
            let conclusion = ElementSet::from_indices(later.choose_multiple(&mut rng, m).copied());
            Implication::new(premise, conclusion)
        })
        .collect();
    ImplicationalBase::new(universe, imps).expect("letter indices fit")
}
