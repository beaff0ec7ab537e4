//! q-acceptant convex geometries.

use std::collections::HashSet;
use std::sync::Arc;

use itertools::Itertools;
use rand::seq::SliceRandom;
use rand::Rng;

use super::seeded;
use crate::base::{Implication, ImplicationalBase};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::lattice::{enumerate_lattice, LatticeView};
use crate::optimize::minimize;
use crate::set::ElementSet;

/// The `q` with `|ex(C)| = min(q, |C|)` for every closed `C`, if any.
pub fn acceptance_degree(view: &LatticeView) -> Result<Option<usize>> {
    if !view.is_convex_geometry() {
        return Err(Error::NotConvexGeometry);
    }
    let n = view.n();
    if n == 0 {
        return Ok(Some(0));
    }
    let extremes: Vec<(usize, usize)> = view
        .closed_sets()
        .iter()
        .map(|&c| (c.len(), view.extreme_points(c).expect("listed sets are closed").len()))
        .collect();
    Ok((1..=n).find(|&q| {
        let small_closed = (0..q).all(|k| {
            let have = extremes.iter().filter(|&&(len, _)| len == k).count();
            have == binomial(n, k)
        });
        small_closed && extremes.iter().all(|&(len, ex)| ex == len.min(q))
    }))
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Random 2-acceptant geometry on `n` letters, or `None` if `attempts`
/// tries all fail. Each try grows a family top-down from the universe by
/// deleting two random elements of every member, adds all sets of size at
/// most one, closes under intersection and keeps the result only if it is a
/// 2-acceptant convex geometry. Practical for `n <= 5`; collinear point
/// configurations cover larger sizes.
pub fn random_two_acceptant(seed: u64, n: usize, attempts: usize) -> Option<ImplicationalBase> {
    let mut rng = seeded(seed);
    let universe = Arc::new(GroundSet::letters(n).ok()?);
    let full = ElementSet::full(n);
    (0..attempts).find_map(|_| {
        let family = grow_family(&mut rng, n);
        let close = |s: ElementSet| {
            family
                .iter()
                .filter(|c| s.is_subset(**c))
                .fold(full, |acc, &c| acc & c)
        };
        let imps = full
            .subsets()
            .filter(|s| !family.contains(s))
            .map(|s| Implication::new(s, close(s)))
            .collect();
        let base = ImplicationalBase::new(Arc::clone(&universe), imps).ok()?;
        let view = enumerate_lattice(&base).ok()?;
        let accepted = view.is_convex_geometry() && acceptance_degree(&view).ok()? == Some(2);
        accepted.then(|| minimize(&base).sorted())
    })
}

fn grow_family<R: Rng>(rng: &mut R, n: usize) -> HashSet<ElementSet> {
    let full = ElementSet::full(n);
    let mut family: HashSet<ElementSet> = (0..n).map(ElementSet::singleton).collect();
    family.insert(ElementSet::EMPTY);
    let mut pending = vec![full];
    while let Some(c) = pending.pop() {
        if !family.insert(c) {
            continue;
        }
        let mut members: Vec<usize> = c.iter().collect();
        members.shuffle(rng);
        pending.extend(members.iter().take(2).map(|&x| c.without(x)));
    }
    loop {
        let snapshot: Vec<ElementSet> = family.iter().copied().collect();
        let before = family.len();
        for (&a, &b) in snapshot.iter().tuple_combinations() {
            family.insert(a & b);
        }
        if family.len() == before {
            return family;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn fixture_degrees() {
        for base in [fixtures::acceptant_left(), fixtures::acceptant_right()] {
            let view = enumerate_lattice(&base).unwrap();
            assert_eq!(acceptance_degree(&view).unwrap(), Some(2));
        }
        let view = enumerate_lattice(&fixtures::mixed_geometry()).unwrap();
        assert_eq!(acceptance_degree(&view).unwrap(), None);
    }

    #[test]
    fn boolean_lattice_degree_is_universe_size() {
        let u = Arc::new(GroundSet::letters(4).unwrap());
        let view = enumerate_lattice(&ImplicationalBase::empty(u)).unwrap();
        assert_eq!(acceptance_degree(&view).unwrap(), Some(4));
    }

    #[test]
    fn rejects_non_geometries() {
        let view = enumerate_lattice(&fixtures::six_element_canonical()).unwrap();
        assert_eq!(acceptance_degree(&view), Err(Error::NotConvexGeometry));
    }

    #[test]
    fn sampler_finds_two_acceptant_geometries() {
        let base = random_two_acceptant(1, 5, 200).expect("sampler succeeds");
        let view = enumerate_lattice(&base).unwrap();
        assert_eq!(acceptance_degree(&view).unwrap(), Some(2));
    }
}
