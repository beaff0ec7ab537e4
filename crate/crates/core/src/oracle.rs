//! Exponential reference implementations built from definitions and
//! [`close`] alone. They share no code with the saturation, hypergraph or
//! optimizer paths and exist to cross-check them.

use crate::base::{Implication, ImplicationalBase, SizeReport};
use crate::closure::close;
use crate::error::{Error, Result};
use crate::set::ElementSet;

/// Largest universe or seed the oracles accept.
pub const ORACLE_LIMIT: usize = 14;

fn guard_universe(base: &ImplicationalBase) -> Result<()> {
    if base.n() > ORACLE_LIMIT {
        Err(Error::UniverseTooLarge {
            size: base.n(),
            limit: ORACLE_LIMIT,
        })
    } else {
        Ok(())
    }
}

fn guard_set(s: ElementSet) -> Result<()> {
    if s.len() > ORACLE_LIMIT {
        Err(Error::SearchTooLarge {
            bits: s.len(),
            limit: ORACLE_LIMIT,
        })
    } else {
        Ok(())
    }
}

/// Every closed set, checked to form a family closed under intersection
/// and containing the universe.
pub fn oracle_closed_sets(base: &ImplicationalBase) -> Result<Vec<ElementSet>> {
    guard_universe(base)?;
    let full = base.universe().full();
    let family: Vec<ElementSet> = full.subsets().filter(|&s| close(base, s) == s).collect();
    assert!(family.contains(&full), "universe is not closed");
    for &a in &family {
        for &b in &family {
            assert!(family.contains(&(a & b)), "closed sets not intersection-closed");
        }
    }
    Ok(family)
}

/// Union of the iterates of `Y ↦ Y ∪ ⋃{close(Z) : Z ⊆ Y, close(Z) ⊊ close(Y)}`.
pub fn oracle_sigma(base: &ImplicationalBase, seed: ElementSet) -> Result<ElementSet> {
    let target = close(base, seed);
    let mut y = seed;
    loop {
        guard_set(y)?;
        let next = y
            .subsets()
            .map(|z| close(base, z))
            .filter(|&cz| cz.is_proper_subset(target))
            .fold(y, |acc, cz| acc | cz);
        if next == y {
            return Ok(y);
        }
        y = next;
    }
}

/// Not closed, and every subset with a strictly smaller closure has its
/// closure inside `q`.
pub fn oracle_quasi_closed_direct(base: &ImplicationalBase, q: ElementSet) -> Result<bool> {
    guard_set(q)?;
    let target = close(base, q);
    if target == q {
        return Ok(false);
    }
    Ok(q.subsets().all(|a| {
        let ca = close(base, a);
        !ca.is_proper_subset(target) || ca.is_subset(q)
    }))
}

/// `{ex(C) -> T}` over the essential sets `C` of a convex geometry, with
/// `T` a minimum transversal of the complements of the maximal quasi-closed
/// sets spanning `C`. Everything is found by exhaustive search.
pub fn oracle_optimum_cg(base: &ImplicationalBase) -> Result<(ImplicationalBase, SizeReport)> {
    let closed = oracle_closed_sets(base)?;
    let full = base.universe().full();
    let is_closed = |s: ElementSet| closed.contains(&s);
    let convex = is_closed(ElementSet::EMPTY)
        && closed
            .iter()
            .all(|&c| c == full || (full - c).iter().any(|x| is_closed(c.with(x))));
    if !convex {
        return Err(Error::NotConvexGeometry);
    }

    let mut imps = Vec::new();
    for &c in &closed {
        let quasi: Vec<ElementSet> = c
            .subsets()
            .filter(|&q| close(base, q) == c)
            .filter(|&q| oracle_quasi_closed_direct(base, q).unwrap_or(false))
            .collect();
        if quasi.is_empty() {
            continue;
        }
        let edges: Vec<ElementSet> = quasi
            .iter()
            .filter(|q| !quasi.iter().any(|r| q.is_proper_subset(*r)))
            .map(|&q| c - q)
            .collect();
        let extreme: ElementSet = c
            .iter()
            .filter(|&x| !close(base, c.without(x)).contains(x))
            .collect();
        let transversal = c
            .subsets()
            .filter(|t| edges.iter().all(|e| e.intersects(*t)))
            .min_by_key(|t| t.len())
            .expect("c itself hits every edge");
        imps.push(Implication::new(extreme, transversal));
    }
    let optimum = ImplicationalBase::new(base.shared_universe(), imps)?;
    let sizes = optimum.sizes();
    Ok((optimum, sizes))
}
