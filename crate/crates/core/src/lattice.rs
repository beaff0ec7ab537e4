//! Desk-scale enumeration of the closed-set lattice.

use std::collections::HashMap;

use crate::base::{Implication, ImplicationalBase};
use crate::closure::ClosureFn;
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::set::ElementSet;

/// Largest universe [`enumerate_lattice`] accepts.
pub const LATTICE_LIMIT: usize = 20;

/// All closed sets of a base with covers, extreme points and essential flags.
#[derive(Clone, Debug)]
pub struct LatticeView {
    base: ImplicationalBase,
    closed_sets: Vec<ElementSet>,
    index: HashMap<ElementSet, usize>,
    predecessors: Vec<Vec<usize>>,
    extreme: Vec<ElementSet>,
    essential: Vec<bool>,
    convex: bool,
}

pub fn enumerate_lattice(base: &ImplicationalBase) -> Result<LatticeView> {
    enumerate_lattice_with(base, Exec::default())
}

pub fn enumerate_lattice_with(base: &ImplicationalBase, exec: Exec) -> Result<LatticeView> {
    let n = base.n();
    if n > LATTICE_LIMIT {
        return Err(Error::UniverseTooLarge {
            size: n,
            limit: LATTICE_LIMIT,
        });
    }
    let cf = ClosureFn::new(base);
    let all = 1u64 << n;

    let mut closed_sets = exec.filter_map_range(0..all, |bits| {
        let s = ElementSet::from_bits(bits);
        cf.is_closed(s).then_some(s)
    });
    closed_sets.sort_by(ElementSet::canonical_cmp);
    let index: HashMap<ElementSet, usize> = closed_sets
        .iter()
        .enumerate()
        .map(|(i, &c)| (c, i))
        .collect();

    let extreme = exec.map_slice(&closed_sets, |&c| cf.extreme_points(c));

    // Upper covers of C are the minimal sets among close(C ∪ {x}), x ∉ C.
    let full = ElementSet::full(n);
    let successors = exec.map_slice(&closed_sets, |&c| {
        let mut ups: Vec<ElementSet> = (full - c).iter().map(|x| cf.close(c.with(x))).collect();
        ups.sort_by(ElementSet::canonical_cmp);
        ups.dedup();
        let minimal: Vec<ElementSet> = ups
            .iter()
            .filter(|&&u| !ups.iter().any(|&v| v.is_proper_subset(u)))
            .copied()
            .collect();
        minimal
    });
    let mut predecessors = vec![Vec::new(); closed_sets.len()];
    for (i, ups) in successors.iter().enumerate() {
        for up in ups {
            predecessors[index[up]].push(i);
        }
    }
    for p in &mut predecessors {
        p.sort_unstable();
    }

    let spanned = exec.filter_map_range(0..all, |bits| {
        let s = ElementSet::from_bits(bits);
        cf.is_quasi_closed(s).then(|| cf.close(s))
    });
    let mut essential = vec![false; closed_sets.len()];
    for c in spanned {
        essential[index[&c]] = true;
    }

    let convex = closed_sets.first() == Some(&ElementSet::EMPTY)
        && closed_sets.iter().all(|&c| {
            c == full || (full - c).iter().any(|x| index.contains_key(&c.with(x)))
        });

    Ok(LatticeView {
        base: base.clone(),
        closed_sets,
        index,
        predecessors,
        extreme,
        essential,
        convex,
    })
}

impl LatticeView {
    pub fn base(&self) -> &ImplicationalBase {
        &self.base
    }

    pub fn n(&self) -> usize {
        self.base.n()
    }

    /// Closed sets ordered by cardinality, then index sequence.
    pub fn closed_sets(&self) -> &[ElementSet] {
        &self.closed_sets
    }

    pub fn is_closed(&self, s: ElementSet) -> bool {
        self.index.contains_key(&s)
    }

    pub fn index_of(&self, s: ElementSet) -> Option<usize> {
        self.index.get(&s).copied()
    }

    /// Indices of the closed sets covered by closed set `i`.
    pub fn predecessors(&self, i: usize) -> &[usize] {
        &self.predecessors[i]
    }

    pub fn is_essential(&self, s: ElementSet) -> bool {
        self.index_of(s).is_some_and(|i| self.essential[i])
    }

    /// `∅` is closed and every proper closed set grows by one element into
    /// another closed set.
    pub fn is_convex_geometry(&self) -> bool {
        self.convex
    }

    pub fn extreme_points(&self, c: ElementSet) -> Result<ElementSet> {
        self.index_of(c)
            .map(|i| self.extreme[i])
            .ok_or_else(|| Error::NotClosed(self.base.universe().format_set(c)))
    }

    /// Closed sets spanned by some quasi-closed set, in closed-set order.
    pub fn essential_sets(&self) -> Vec<ElementSet> {
        self.closed_sets
            .iter()
            .zip(&self.essential)
            .filter_map(|(&c, &e)| e.then_some(c))
            .collect()
    }

    /// Brute-force check of the spanning-set characterization of convex
    /// geometries: every closed set is spanned by its extreme points and
    /// every spanning set contains them.
    pub fn spanning_characterization(&self) -> bool {
        let cf = ClosureFn::new(&self.base);
        let full = ElementSet::full(self.n());
        self.closed_sets
            .iter()
            .zip(&self.extreme)
            .all(|(&c, &ex)| cf.close(ex) == c)
            && full.subsets().all(|y| {
                let c = cf.close(y);
                self.extreme[self.index[&c]].is_subset(y)
            })
    }
}

/// Implications of a base grouped by the closure of their premise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceClass {
    pub closure: ElementSet,
    pub implications: Vec<Implication>,
}

/// Partition of the base by premise closure, classes in order of first
/// appearance.
pub fn equivalence_classes(base: &ImplicationalBase) -> Vec<EquivalenceClass> {
    let cf = ClosureFn::new(base);
    let mut classes: Vec<EquivalenceClass> = Vec::new();
    let mut position: HashMap<ElementSet, usize> = HashMap::new();
    for imp in base.iter() {
        let closure = cf.close(imp.premise());
        let at = *position.entry(closure).or_insert_with(|| {
            classes.push(EquivalenceClass {
                closure,
                implications: Vec::new(),
            });
            classes.len() - 1
        });
        classes[at].implications.push(*imp);
    }
    classes
}
