//! Implications, implicational bases and their size measures.

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::set::ElementSet;

/// `premise -> conclusion`. The conclusion never overlaps the premise.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Implication {
    premise: ElementSet,
    conclusion: ElementSet,
}

impl Implication {
    /// Builds the implication, dropping premise elements from the conclusion.
    pub fn new(premise: ElementSet, conclusion: ElementSet) -> Self {
        Implication {
            premise,
            conclusion: conclusion - premise,
        }
    }

    pub fn premise(&self) -> ElementSet {
        self.premise
    }

    pub fn conclusion(&self) -> ElementSet {
        self.conclusion
    }

    pub fn size(&self) -> usize {
        self.premise.len() + self.conclusion.len()
    }

    fn fits(&self, n: usize) -> bool {
        self.premise.fits(n) && self.conclusion.fits(n)
    }
}

impl fmt::Debug for Implication {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?} -> {:?}", self.premise, self.conclusion)
    }
}

/// `|Σ|`, left size, right size and total size of a base.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SizeReport {
    pub count: usize,
    pub left: usize,
    pub right: usize,
    pub total: usize,
}

impl fmt::Display for SizeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "count={} left={} right={} total={}",
            self.count, self.left, self.right, self.total
        )
    }
}

/// A ground set together with an ordered list of implications over it.
#[derive(Clone, PartialEq, Eq)]
pub struct ImplicationalBase {
    universe: Arc<GroundSet>,
    implications: Vec<Implication>,
}

impl ImplicationalBase {
    pub fn new(universe: Arc<GroundSet>, implications: Vec<Implication>) -> Result<Self> {
        let n = universe.len();
        if implications.iter().any(|imp| !imp.fits(n)) {
            return Err(Error::OutsideUniverse);
        }
        Ok(ImplicationalBase {
            universe,
            implications,
        })
    }

    pub fn empty(universe: Arc<GroundSet>) -> Self {
        ImplicationalBase {
            universe,
            implications: Vec::new(),
        }
    }

    /// Builds a base from `(premise, conclusion)` name lists, each side
    /// separated by commas or whitespace.
    pub fn from_rules(universe: Arc<GroundSet>, rules: &[(&str, &str)]) -> Result<Self> {
        let implications = rules
            .iter()
            .map(|(p, c)| Ok(Implication::new(universe.parse_set(p)?, universe.parse_set(c)?)))
            .collect::<Result<Vec<_>>>()?;
        ImplicationalBase::new(universe, implications)
    }

    /// Same universe, different implications. Callers guarantee the
    /// implications fit the universe.
    pub(crate) fn with_implications(&self, implications: Vec<Implication>) -> Self {
        debug_assert!(implications.iter().all(|i| i.fits(self.universe.len())));
        ImplicationalBase {
            universe: Arc::clone(&self.universe),
            implications,
        }
    }

    pub fn universe(&self) -> &GroundSet {
        &self.universe
    }

    pub fn shared_universe(&self) -> Arc<GroundSet> {
        Arc::clone(&self.universe)
    }

    pub fn n(&self) -> usize {
        self.universe.len()
    }

    pub fn len(&self) -> usize {
        self.implications.len()
    }

    pub fn is_empty(&self) -> bool {
        self.implications.is_empty()
    }

    pub fn implications(&self) -> &[Implication] {
        &self.implications
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Implication> {
        self.implications.iter()
    }

    pub(crate) fn same_universe(&self, other: &ImplicationalBase) -> Result<()> {
        if Arc::ptr_eq(&self.universe, &other.universe) || *self.universe == *other.universe {
            Ok(())
        } else {
            Err(Error::UniverseMismatch)
        }
    }

    /// Size measures over the implications as stored.
    pub fn sizes(&self) -> SizeReport {
        let left = self.implications.iter().map(|i| i.premise.len()).sum();
        let right = self.implications.iter().map(|i| i.conclusion.len()).sum();
        SizeReport {
            count: self.implications.len(),
            left,
            right,
            total: left + right,
        }
    }

    /// Drops implications with empty conclusions and repeated implications,
    /// keeping first occurrences in order.
    pub fn normalize(&self) -> ImplicationalBase {
        let mut seen = HashSet::new();
        let kept = self
            .implications
            .iter()
            .filter(|imp| !imp.conclusion.is_empty() && seen.insert(**imp))
            .copied()
            .collect();
        self.with_implications(kept)
    }

    /// Implications ordered by premise, then conclusion, in canonical set order.
    pub fn sorted(&self) -> ImplicationalBase {
        let mut imps = self.implications.clone();
        imps.sort_by(|a, b| {
            a.premise
                .canonical_cmp(&b.premise)
                .then_with(|| a.conclusion.canonical_cmp(&b.conclusion))
        });
        self.with_implications(imps)
    }

    /// The implications as an unordered set, for order-insensitive comparison.
    pub fn implication_set(&self) -> HashSet<Implication> {
        self.implications.iter().copied().collect()
    }

    pub fn format_implication(&self, imp: &Implication) -> String {
        format!(
            "{} -> {}",
            self.universe.format_set(imp.premise),
            self.universe.format_set(imp.conclusion)
        )
    }
}

impl fmt::Debug for ImplicationalBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list()
            .entries(self.implications.iter().map(|i| self.format_implication(i)))
            .finish()
    }
}

impl fmt::Display for ImplicationalBase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.iter().map(|i| self.format_implication(i)).collect();
        f.write_str(&parts.join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn abc() -> Arc<GroundSet> {
        Arc::new(GroundSet::letters(3).unwrap())
    }

    #[test]
    fn normalize_examples() {
        let u = abc();
        let b = ImplicationalBase::from_rules(u.clone(), &[("a b", "a b c")]).unwrap();
        assert_eq!(b.normalize(), ImplicationalBase::from_rules(u.clone(), &[("a b", "c")]).unwrap());

        let b = ImplicationalBase::from_rules(u.clone(), &[("a", "b"), ("a", "b")]).unwrap();
        assert_eq!(b.normalize().len(), 1);
        assert_eq!(b.sizes().count, 2);

        let b = ImplicationalBase::from_rules(u.clone(), &[("a", "a")]).unwrap();
        assert!(b.normalize().is_empty());
    }

    #[test]
    fn empty_base_has_zero_sizes() {
        assert_eq!(ImplicationalBase::empty(abc()).sizes(), SizeReport::default());
    }

    #[test]
    fn rejects_foreign_sets() {
        let imp = Implication::new(ElementSet::singleton(5), ElementSet::singleton(0));
        assert_eq!(ImplicationalBase::new(abc(), vec![imp]), Err(Error::OutsideUniverse));
    }
}
