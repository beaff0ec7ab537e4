//! Forward chaining, validity, equivalence and the saturation operator.

use std::sync::OnceLock;

use crate::base::{Implication, ImplicationalBase};
use crate::error::Result;
use crate::set::ElementSet;

/// The closure operator a base induces, with the premise closures cached for
/// repeated saturation queries.
pub struct ClosureFn<'a> {
    base: &'a ImplicationalBase,
    premise_closures: OnceLock<Vec<ElementSet>>,
}

impl<'a> ClosureFn<'a> {
    pub fn new(base: &'a ImplicationalBase) -> Self {
        ClosureFn {
            base,
            premise_closures: OnceLock::new(),
        }
    }

    pub fn base(&self) -> &'a ImplicationalBase {
        self.base
    }

    /// Least fixed point of `Y ↦ Y ∪ ⋃{B : A → B, A ⊆ Y}` above `seed`.
    pub fn close(&self, seed: ElementSet) -> ElementSet {
        forward_chain(self.base.implications(), seed, |_| true)
    }

    pub fn is_closed(&self, s: ElementSet) -> bool {
        self.close(s) == s
    }

    fn premise_closures(&self) -> &[ElementSet] {
        self.premise_closures.get_or_init(|| {
            self.base
                .iter()
                .map(|imp| self.close(imp.premise()))
                .collect()
        })
    }

    /// Saturation: forward chaining from `seed` using only the implications
    /// whose premise closure differs from the closure of `seed`.
    pub fn saturate(&self, seed: ElementSet) -> ElementSet {
        let target = self.close(seed);
        let closures = self.premise_closures();
        forward_chain(self.base.implications(), seed, |i| closures[i] != target)
    }

    /// Non-closed and fixed by [`saturate`](Self::saturate). Closed sets are
    /// never quasi-closed here.
    pub fn is_quasi_closed(&self, q: ElementSet) -> bool {
        let target = self.close(q);
        if target == q {
            return false;
        }
        let closures = self.premise_closures();
        forward_chain(self.base.implications(), q, |i| closures[i] != target) == q
    }

    /// Quasi-closed, and no proper subset is a quasi-closed spanning set of
    /// the same closure. Enumerates all subsets of `p`.
    pub fn is_pseudo_closed(&self, p: ElementSet) -> bool {
        if !self.is_quasi_closed(p) {
            return false;
        }
        let target = self.close(p);
        !p.subsets()
            .filter(|&s| s != p)
            .any(|s| self.close(s) == target && self.is_quasi_closed(s))
    }

    pub fn is_valid(&self, imp: &Implication) -> bool {
        imp.conclusion().is_subset(self.close(imp.premise()))
    }

    /// `{x ∈ a : x ∉ close(a ∖ {x})}`.
    pub fn extreme_points(&self, a: ElementSet) -> ElementSet {
        a.iter()
            .filter(|&x| !self.close(a.without(x)).contains(x))
            .collect()
    }
}

/// Forward chaining over the implications whose index passes `active`.
pub(crate) fn forward_chain<F>(imps: &[Implication], seed: ElementSet, active: F) -> ElementSet
where
    F: Fn(usize) -> bool,
{
    let mut y = seed;
    let mut fired = vec![false; imps.len()];
    loop {
        let mut changed = false;
        for (i, imp) in imps.iter().enumerate() {
            if !fired[i] && imp.premise().is_subset(y) && active(i) {
                fired[i] = true;
                if !imp.conclusion().is_subset(y) {
                    y = y | imp.conclusion();
                    changed = true;
                }
            }
        }
        if !changed {
            return y;
        }
    }
}

pub fn close(base: &ImplicationalBase, seed: ElementSet) -> ElementSet {
    ClosureFn::new(base).close(seed)
}

pub fn is_valid(base: &ImplicationalBase, imp: &Implication) -> bool {
    ClosureFn::new(base).is_valid(imp)
}

/// True iff every implication of each base is valid under the other.
pub fn equivalent(b1: &ImplicationalBase, b2: &ImplicationalBase) -> Result<bool> {
    b1.same_universe(b2)?;
    let c1 = ClosureFn::new(b1);
    let c2 = ClosureFn::new(b2);
    Ok(b1.iter().all(|imp| c2.is_valid(imp)) && b2.iter().all(|imp| c1.is_valid(imp)))
}

pub fn saturate(base: &ImplicationalBase, seed: ElementSet) -> ElementSet {
    ClosureFn::new(base).saturate(seed)
}

pub fn is_quasi_closed(base: &ImplicationalBase, q: ElementSet) -> bool {
    ClosureFn::new(base).is_quasi_closed(q)
}

pub fn is_pseudo_closed(base: &ImplicationalBase, p: ElementSet) -> bool {
    ClosureFn::new(base).is_pseudo_closed(p)
}
