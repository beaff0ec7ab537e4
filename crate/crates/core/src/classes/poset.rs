//! Finite posets and their double-shelling convex geometries.

use std::sync::Arc;

use petgraph::unionfind::UnionFind;
use rand::seq::SliceRandom;
use rand::Rng;

use super::seeded;
use crate::base::{Implication, ImplicationalBase};
use crate::error::{Error, Result};
use crate::ground::GroundSet;
use crate::set::ElementSet;

/// A strict partial order, stored transitively closed as up-sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    universe: Arc<GroundSet>,
    above: Vec<ElementSet>,
}

impl Poset {
    /// Takes the transitive closure of `pairs` (each `(x, y)` meaning
    /// `x < y`) and rejects cycles.
    pub fn from_pairs(universe: Arc<GroundSet>, pairs: &[(usize, usize)]) -> Result<Self> {
        let n = universe.len();
        let mut above = vec![ElementSet::EMPTY; n];
        for &(x, y) in pairs {
            if x >= n || y >= n {
                return Err(Error::OutsideUniverse);
            }
            above[x] = above[x].with(y);
        }
        for k in 0..n {
            for i in 0..n {
                if above[i].contains(k) {
                    above[i] = above[i] | above[k];
                }
            }
        }
        if let Some(x) = (0..n).find(|&x| above[x].contains(x)) {
            return Err(Error::NotAnOrder(universe.name(x).to_string()));
        }
        Ok(Poset { universe, above })
    }

    pub fn from_named_pairs(universe: Arc<GroundSet>, pairs: &[(&str, &str)]) -> Result<Self> {
        let indexed = pairs
            .iter()
            .map(|(x, y)| Ok((universe.index_of(x)?, universe.index_of(y)?)))
            .collect::<Result<Vec<_>>>()?;
        Self::from_pairs(universe, &indexed)
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

    pub fn less_than(&self, x: usize, y: usize) -> bool {
        self.above[x].contains(y)
    }

    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.less_than(x, y) || self.less_than(y, x)
    }

    /// Elements strictly above `x`.
    pub fn up_set(&self, x: usize) -> ElementSet {
        self.above[x]
    }

    /// Elements strictly below `y`.
    pub fn down_set(&self, y: usize) -> ElementSet {
        (0..self.n()).filter(|&x| self.less_than(x, y)).collect()
    }

    /// `{z : x ≤ z ≤ y}`; empty unless `x ≤ y`.
    pub fn interval(&self, x: usize, y: usize) -> ElementSet {
        if x == y {
            return ElementSet::singleton(x);
        }
        if !self.less_than(x, y) {
            return ElementSet::EMPTY;
        }
        (self.above[x] & self.down_set(y)).with(x).with(y)
    }

    /// Every related pair `x < y`, ordered by `x` then `y`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|x| self.above[x].iter().map(move |y| (x, y)))
            .collect()
    }

    /// Cover pairs: `x < y` with nothing strictly between.
    pub fn covers(&self) -> Vec<(usize, usize)> {
        self.pairs()
            .into_iter()
            .filter(|&(x, y)| (self.above[x] & self.down_set(y)).is_empty())
            .collect()
    }
}

/// The canonical base of the order-convex sets: `xy -> ]x, y[` for every
/// `x < y` with a non-empty open interval. Sorted.
pub fn double_shelling_base(p: &Poset) -> ImplicationalBase {
    let imps = p
        .pairs()
        .into_iter()
        .filter_map(|(x, y)| {
            let ends = ElementSet::from_indices([x, y]);
            let interior = p.interval(x, y) - ends;
            (!interior.is_empty()).then(|| Implication::new(ends, interior))
        })
        .collect();
    ImplicationalBase::new(p.shared_universe(), imps)
        .expect("poset indices fit the universe")
        .sorted()
}

/// Connected components of the comparability graph on the open interval
/// `]x, y[`, ordered by smallest element.
pub fn comparability_components(p: &Poset, x: usize, y: usize) -> Result<Vec<ElementSet>> {
    if !p.less_than(x, y) {
        return Err(Error::NotComparable(
            p.universe().name(x).to_string(),
            p.universe().name(y).to_string(),
        ));
    }
    let interior: Vec<usize> = (p.interval(x, y) - ElementSet::from_indices([x, y])).iter().collect();
    let mut uf = UnionFind::<usize>::new(interior.len());
    for (i, &a) in interior.iter().enumerate() {
        for (j, &b) in interior.iter().enumerate().skip(i + 1) {
            if p.comparable(a, b) {
                uf.union(i, j);
            }
        }
    }
    let labels = uf.into_labeling();
    let mut components: Vec<ElementSet> = Vec::new();
    let mut seen: Vec<usize> = Vec::new();
    for (i, &a) in interior.iter().enumerate() {
        match seen.iter().position(|&l| l == labels[i]) {
            Some(k) => components[k] = components[k].with(a),
            None => {
                seen.push(labels[i]);
                components.push(ElementSet::singleton(a));
            }
        }
    }
    Ok(components)
}

/// Random poset on `n` letters with forward-pair density 0.3.
pub fn random_poset(seed: u64, n: usize) -> Poset {
    random_poset_with(&mut seeded(seed), n, 0.3)
}

/// Random poset on `n` letters: a random DAG over a shuffled order, each
/// forward pair related with probability `density`, then transitively closed.
pub fn random_poset_with<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let universe = Arc::new(GroundSet::letters(n).expect("letter universe"));
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut pairs = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(density) {
                pairs.push((order[i], order[j]));
            }
        }
    }
    Poset::from_pairs(universe, &pairs).expect("forward pairs are acyclic")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn chain3() -> Poset {
        let u = Arc::new(GroundSet::letters(3).unwrap());
        Poset::from_named_pairs(u, &[("a", "b"), ("b", "c")]).unwrap()
    }

    #[test]
    fn transitive_closure_and_cycles() {
        let p = chain3();
        assert!(p.less_than(0, 2));
        assert!(!p.less_than(2, 0));
        assert_eq!(p.covers(), vec![(0, 1), (1, 2)]);
        let u = Arc::new(GroundSet::letters(3).unwrap());
        assert!(matches!(
            Poset::from_named_pairs(u, &[("a", "b"), ("b", "c"), ("c", "a")]),
            Err(Error::NotAnOrder(_))
        ));
    }

    #[test]
    fn chain_and_antichain_bases() {
        let base = double_shelling_base(&chain3());
        let u = base.universe();
        assert_eq!(base.len(), 1);
        assert_eq!(base.implications()[0].premise(), u.parse_set("a c").unwrap());
        assert_eq!(base.implications()[0].conclusion(), u.parse_set("b").unwrap());

        let anti = Poset::from_pairs(Arc::new(GroundSet::letters(4).unwrap()), &[]).unwrap();
        assert!(double_shelling_base(&anti).is_empty());
    }

    #[test]
    fn ten_element_poset_base() {
        let p = fixtures::ten_element_poset();
        assert_eq!(double_shelling_base(&p), fixtures::ten_element_poset_canonical().sorted());
    }

    #[test]
    fn components() {
        let p = fixtures::ten_element_poset();
        let u = p.shared_universe();
        let idx = |s: &str| u.index_of(s).unwrap();
        let mut got = comparability_components(&p, idx("x"), idx("y")).unwrap();
        got.sort_by(ElementSet::canonical_cmp);
        let mut expect: Vec<ElementSet> = ["d", "c e h", "a b g f"]
            .iter()
            .map(|s| u.parse_set(s).unwrap())
            .collect();
        expect.sort_by(ElementSet::canonical_cmp);
        assert_eq!(got, expect);

        assert_eq!(p.interval(idx("a"), idx("y")), u.parse_set("a f g y").unwrap());
        let split = comparability_components(&p, idx("a"), idx("y")).unwrap();
        assert_eq!(split.len(), 2);

        assert_eq!(comparability_components(&chain3(), 0, 2).unwrap(), vec![ElementSet::singleton(1)]);
        assert!(matches!(
            comparability_components(&p, idx("f"), idx("g")),
            Err(Error::NotComparable(..))
        ));
    }
}
