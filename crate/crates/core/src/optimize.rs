//! Minimization, left/right reduction, canonical bases and optimality
//! certificates for bases of convex geometries.

use std::collections::HashMap;

use itertools::Itertools;

use crate::base::{Implication, ImplicationalBase};
use crate::closure::{equivalent, forward_chain, ClosureFn};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::hypergraph::{all_hypergraphs_with, QuasiClosedHypergraph};
use crate::lattice::{enumerate_lattice_with, LatticeView, LATTICE_LIMIT};
use crate::set::ElementSet;

/// What was verified about one essential set of a candidate base.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassCertificate {
    pub essential_set: ElementSet,
    pub extreme: ElementSet,
    /// Premises of the candidate implications spanning this essential set.
    pub premises: Vec<ElementSet>,
    /// Union of their conclusions.
    pub conclusion: ElementSet,
    pub edge_count: usize,
    pub disjoint_edges: bool,
    pub hitting: bool,
    pub minimum: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OptimizationCertificate {
    pub convex_geometry: bool,
    pub classes: Vec<ClassCertificate>,
    /// Implications whose premise spans a non-essential closed set.
    pub stray_implications: usize,
    pub is_base: bool,
    pub is_left_optimum: bool,
    pub is_optimum: bool,
}

impl OptimizationCertificate {
    fn unverified(is_base: bool) -> Self {
        OptimizationCertificate {
            convex_geometry: false,
            classes: Vec::new(),
            stray_implications: 0,
            is_base,
            is_left_optimum: false,
            is_optimum: false,
        }
    }
}

/// Checks a set of valid implications against every quasi-closed set: each
/// must contain a premise of the same closure whose conclusion escapes it.
pub fn validate_by_quasiclosed(
    base: &ImplicationalBase,
    candidate: &ImplicationalBase,
) -> Result<bool> {
    base.same_universe(candidate)?;
    let n = base.n();
    if n > LATTICE_LIMIT {
        return Err(Error::UniverseTooLarge {
            size: n,
            limit: LATTICE_LIMIT,
        });
    }
    let cf = ClosureFn::new(base);
    if let Some(bad) = candidate.iter().find(|imp| !cf.is_valid(imp)) {
        return Err(Error::InvalidImplication(candidate.format_implication(bad)));
    }
    let spans: Vec<(Implication, ElementSet)> = candidate
        .iter()
        .map(|imp| (*imp, cf.close(imp.premise())))
        .collect();
    Ok(Exec::default().all_range(0..1u64 << n, |bits| {
        let q = ElementSet::from_bits(bits);
        if !cf.is_quasi_closed(q) {
            return true;
        }
        let target = cf.close(q);
        spans.iter().any(|(imp, span)| {
            imp.premise().is_subset(q) && *span == target && imp.conclusion().intersects(target - q)
        })
    }))
}

/// An equivalent base with one implication per pseudo-closed set.
///
/// Conclusions are first widened to full closures; then, in input order,
/// each implication is either dropped (its closure follows from the others)
/// or its premise is saturated under the others. Output conclusions are
/// `close(P) ∖ P`.
pub fn minimize(base: &ImplicationalBase) -> ImplicationalBase {
    let norm = base.normalize();
    let cf = ClosureFn::new(&norm);
    let mut rules: Vec<Implication> = norm
        .iter()
        .map(|imp| Implication::new(imp.premise(), cf.close(imp.premise())))
        .collect();

    let mut i = 0;
    while i < rules.len() {
        let rule = rules[i];
        let target = rule.premise() | rule.conclusion();
        let premise = forward_chain(&rules, rule.premise(), |j| j != i);
        if target.is_subset(premise) {
            rules.remove(i);
        } else {
            rules[i] = Implication::new(premise, target);
            i += 1;
        }
    }
    norm.with_implications(rules)
}

/// Drops premise elements, ascending index order, while the implication
/// stays valid. Equivalence is preserved at every step.
pub fn left_reduce(base: &ImplicationalBase) -> ImplicationalBase {
    let norm = base.normalize();
    let cf = ClosureFn::new(&norm);
    let reduced = norm
        .iter()
        .map(|imp| {
            let mut premise = imp.premise();
            loop {
                let before = premise;
                for a in premise.iter() {
                    let shrunk = premise.without(a);
                    if imp.conclusion().is_subset(cf.close(shrunk)) {
                        premise = shrunk;
                    }
                }
                if premise == before {
                    break;
                }
            }
            Implication::new(premise, imp.conclusion())
        })
        .collect();
    norm.with_implications(reduced).normalize()
}

/// Drops conclusion elements, ascending index order, while the modified
/// set of implications still derives the dropped element from the premise.
pub fn right_reduce(base: &ImplicationalBase) -> ImplicationalBase {
    let norm = base.normalize();
    let mut rules = norm.implications().to_vec();
    for i in 0..rules.len() {
        loop {
            let before = rules[i];
            for b in before.conclusion().iter() {
                let current = rules[i];
                rules[i] = Implication::new(current.premise(), current.conclusion().without(b));
                if !forward_chain(&rules, current.premise(), |_| true).contains(b) {
                    rules[i] = current;
                }
            }
            if rules[i] == before {
                break;
            }
        }
    }
    norm.with_implications(rules).normalize()
}

/// `right_reduce(left_reduce(minimize(base)))` together with what could be
/// certified about the result.
pub fn optimize(base: &ImplicationalBase) -> (ImplicationalBase, OptimizationCertificate) {
    optimize_with(base, Exec::default())
}

pub fn optimize_with(
    base: &ImplicationalBase,
    exec: Exec,
) -> (ImplicationalBase, OptimizationCertificate) {
    let out = right_reduce(&left_reduce(&minimize(base)));
    let certificate = match enumerate_lattice_with(base, exec) {
        Ok(view) => certify(&view, &out, exec)
            .unwrap_or_else(|_| OptimizationCertificate::unverified(true)),
        Err(_) => OptimizationCertificate::unverified(true),
    };
    (out, certificate)
}

/// Certificate for a candidate known to be equivalent to `view`'s base.
fn certify(
    view: &LatticeView,
    candidate: &ImplicationalBase,
    exec: Exec,
) -> Result<OptimizationCertificate> {
    let hqcs = all_hypergraphs_with(view.base(), view, exec)?;
    Ok(decompose(view, &hqcs, candidate, true))
}

fn decompose(
    view: &LatticeView,
    hqcs: &[QuasiClosedHypergraph],
    candidate: &ImplicationalBase,
    is_base: bool,
) -> OptimizationCertificate {
    let cf = ClosureFn::new(view.base());
    let candidate = candidate.normalize();
    let mut by_span: HashMap<ElementSet, Vec<Implication>> = HashMap::new();
    for imp in candidate.iter() {
        by_span.entry(cf.close(imp.premise())).or_default().push(*imp);
    }

    let classes: Vec<ClassCertificate> = hqcs
        .iter()
        .map(|h| {
            let members = by_span.get(&h.essential_set).map(Vec::as_slice).unwrap_or(&[]);
            let conclusion = members
                .iter()
                .fold(ElementSet::EMPTY, |acc, imp| acc | imp.conclusion());
            let hitting = h.is_hitting_set(conclusion);
            ClassCertificate {
                essential_set: h.essential_set,
                extreme: h.extreme,
                premises: members.iter().map(Implication::premise).collect(),
                conclusion,
                edge_count: h.edges.len(),
                disjoint_edges: h.has_disjoint_edges(),
                hitting,
                minimum: hitting && conclusion.len() == h.minimum_hitting_set().len(),
            }
        })
        .collect();
    let stray_implications = by_span
        .iter()
        .filter(|(span, _)| !view.is_essential(**span))
        .map(|(_, imps)| imps.len())
        .sum();

    let convex = view.is_convex_geometry();
    let is_left_optimum = convex
        && is_base
        && stray_implications == 0
        && classes
            .iter()
            .all(|c| c.premises.len() == 1 && c.premises[0] == c.extreme && c.hitting);
    let is_optimum = is_left_optimum && classes.iter().all(|c| c.minimum);
    OptimizationCertificate {
        convex_geometry: convex,
        classes,
        stray_implications,
        is_base,
        is_left_optimum,
        is_optimum,
    }
}

/// Certifies `candidate` against the convex geometry of `base`.
pub fn verify_optimum(
    base: &ImplicationalBase,
    candidate: &ImplicationalBase,
) -> Result<OptimizationCertificate> {
    verify_optimum_with(base, candidate, Exec::default())
}

pub fn verify_optimum_with(
    base: &ImplicationalBase,
    candidate: &ImplicationalBase,
    exec: Exec,
) -> Result<OptimizationCertificate> {
    base.same_universe(candidate)?;
    let view = enumerate_lattice_with(base, exec)?;
    if !view.is_convex_geometry() {
        return Err(Error::NotConvexGeometry);
    }
    if !equivalent(base, candidate)? {
        return Err(Error::NotABase);
    }
    let hqcs = all_hypergraphs_with(base, &view, exec)?;
    Ok(decompose(&view, &hqcs, candidate, true))
}

/// Inclusion-minimal quasi-closed sets within each closure class, found by
/// scanning every subset.
pub fn pseudo_closed_sets(base: &ImplicationalBase, exec: Exec) -> Result<Vec<ElementSet>> {
    let n = base.n();
    if n > LATTICE_LIMIT {
        return Err(Error::UniverseTooLarge {
            size: n,
            limit: LATTICE_LIMIT,
        });
    }
    let cf = ClosureFn::new(base);
    let quasi = exec.filter_map_range(0..1u64 << n, |bits| {
        let q = ElementSet::from_bits(bits);
        cf.is_quasi_closed(q).then(|| (cf.close(q), q))
    });
    let mut groups: HashMap<ElementSet, Vec<ElementSet>> = HashMap::new();
    for (c, q) in quasi {
        groups.entry(c).or_default().push(q);
    }
    let mut pseudo: Vec<ElementSet> = groups
        .values()
        .flat_map(|qs| {
            qs.iter()
                .filter(|q| !qs.iter().any(|p| p.is_proper_subset(**q)))
                .copied()
                .collect::<Vec<_>>()
        })
        .collect();
    pseudo.sort_by(ElementSet::canonical_cmp);
    Ok(pseudo)
}

/// `{P -> close(P) ∖ P : P pseudo-closed}`, sorted. Convex geometries take
/// the fast path `P = saturate(ex(C))` per essential set `C`.
pub fn canonical_base(base: &ImplicationalBase) -> Result<ImplicationalBase> {
    canonical_base_with(base, Exec::default())
}

pub fn canonical_base_with(base: &ImplicationalBase, exec: Exec) -> Result<ImplicationalBase> {
    let view = enumerate_lattice_with(base, exec)?;
    let cf = ClosureFn::new(base);
    let premises: Vec<ElementSet> = if view.is_convex_geometry() {
        view.essential_sets()
            .into_iter()
            .map(|c| cf.saturate(view.extreme_points(c).expect("essential sets are closed")))
            .collect()
    } else {
        pseudo_closed_sets(base, exec)?
    };
    Ok(from_premises(base, &cf, &premises))
}

/// The canonical base through the general brute-force path only.
pub fn canonical_base_general(base: &ImplicationalBase, exec: Exec) -> Result<ImplicationalBase> {
    let cf = ClosureFn::new(base);
    let premises = pseudo_closed_sets(base, exec)?;
    Ok(from_premises(base, &cf, &premises))
}

fn from_premises(
    base: &ImplicationalBase,
    cf: &ClosureFn<'_>,
    premises: &[ElementSet],
) -> ImplicationalBase {
    base.with_implications(
        premises
            .iter()
            .map(|&p| Implication::new(p, cf.close(p)))
            .collect(),
    )
    .sorted()
}

/// `{ex(C) -> T : C essential}` with `T` the tie-broken minimum hitting set.
pub fn build_optimum_from_hypergraphs(
    view: &LatticeView,
    hqcs: &[QuasiClosedHypergraph],
) -> Result<ImplicationalBase> {
    if !view.is_convex_geometry() {
        return Err(Error::NotConvexGeometry);
    }
    Ok(view
        .base()
        .with_implications(
            hqcs.iter()
                .map(|h| Implication::new(h.extreme, h.minimum_hitting_set()))
                .collect(),
        )
        .sorted())
}

/// Every optimum base of a convex geometry: one choice of minimum hitting
/// set per essential set.
pub fn enumerate_optimum_bases(
    view: &LatticeView,
    hqcs: &[QuasiClosedHypergraph],
) -> Result<Vec<ImplicationalBase>> {
    if !view.is_convex_geometry() {
        return Err(Error::NotConvexGeometry);
    }
    let choices = hqcs
        .iter()
        .map(|h| {
            Ok(h.minimum_hitting_sets()?
                .into_iter()
                .map(|t| Implication::new(h.extreme, t))
                .collect::<Vec<_>>())
        })
        .collect::<Result<Vec<_>>>()?;
    if choices.is_empty() {
        return Ok(vec![view.base().with_implications(Vec::new())]);
    }
    Ok(choices
        .into_iter()
        .multi_cartesian_product()
        .map(|imps| view.base().with_implications(imps).sorted())
        .collect())
}
