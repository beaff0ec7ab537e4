//! Per-class shape of the quasi-closed hypergraphs.

use super::poset::{comparability_components, Poset};
use crate::hypergraph::QuasiClosedHypergraph;
use crate::lattice::LatticeView;
use crate::set::ElementSet;

/// Which edge shape to expect.
#[derive(Clone, Copy, Debug)]
pub enum EdgeLaw<'a> {
    /// Edges of `HQC([x, y])` are the comparability components of `]x, y[`.
    Components(&'a Poset),
    /// Every edge is a single element.
    Singletons,
    /// Exactly one edge, equal to `C ∖ ex(C)`.
    ExtremeComplement,
    /// Exactly one edge.
    SingleEdge,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LawViolation {
    pub essential_set: ElementSet,
    pub reason: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct LawReport {
    pub checked: usize,
    pub violations: Vec<LawViolation>,
}

impl LawReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

pub fn class_edge_law_check(
    view: &LatticeView,
    hqcs: &[QuasiClosedHypergraph],
    law: EdgeLaw<'_>,
) -> LawReport {
    let mut report = LawReport::default();
    for h in hqcs {
        report.checked += 1;
        if let Some(reason) = violation(view, h, law) {
            report.violations.push(LawViolation {
                essential_set: h.essential_set,
                reason,
            });
        }
    }
    report
}

fn violation(view: &LatticeView, h: &QuasiClosedHypergraph, law: EdgeLaw<'_>) -> Option<String> {
    let universe = view.base().universe();
    let show = |edges: &[ElementSet]| {
        edges
            .iter()
            .map(|&e| universe.format_set(e))
            .collect::<Vec<_>>()
            .join(" ")
    };
    match law {
        EdgeLaw::Components(poset) => {
            let ends: Vec<usize> = h.extreme.iter().collect();
            let &[x, y] = ends.as_slice() else {
                return Some(format!("{} extreme points, expected 2", ends.len()));
            };
            let (x, y) = if poset.less_than(x, y) { (x, y) } else { (y, x) };
            let Ok(mut components) = comparability_components(poset, x, y) else {
                return Some("extreme points are incomparable".to_string());
            };
            if poset.interval(x, y) != h.essential_set {
                return Some("essential set is not an interval".to_string());
            }
            components.sort_by(ElementSet::canonical_cmp);
            (components != h.edges).then(|| {
                format!("edges {} differ from components {}", show(&h.edges), show(&components))
            })
        }
        EdgeLaw::Singletons => h
            .edges
            .iter()
            .any(|e| e.len() != 1)
            .then(|| format!("non-singleton edge among {}", show(&h.edges))),
        EdgeLaw::ExtremeComplement => {
            let expect = [h.essential_set - h.extreme];
            (h.edges != expect).then(|| format!("edges {}, expected {}", show(&h.edges), show(&expect)))
        }
        EdgeLaw::SingleEdge => (h.edges.len() != 1)
            .then(|| format!("{} edges: {}", h.edges.len(), show(&h.edges))),
    }
}
