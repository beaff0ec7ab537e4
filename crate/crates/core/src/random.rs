//! Seeded random bases and sets for property sweeps.

use std::sync::Arc;

use rand::Rng;

use crate::base::{Implication, ImplicationalBase};
use crate::classes::seeded;
use crate::ground::GroundSet;
use crate::set::ElementSet;

/// Uniform random subset of `0..n`.
pub fn random_set<R: Rng>(rng: &mut R, n: usize) -> ElementSet {
    ElementSet::from_bits(rng.gen::<u64>() & ElementSet::full(n).bits())
}

/// Random subset of `0..n` where each element is kept with probability `p`.
pub fn sparse_set<R: Rng>(rng: &mut R, n: usize, p: f64) -> ElementSet {
    (0..n).filter(|_| rng.gen_bool(p)).collect()
}

/// Arbitrary base on `n` letters with up to `2n` implications, premises of
/// expected size about a third of the universe and small conclusions.
pub fn random_base(seed: u64, n: usize) -> ImplicationalBase {
    let mut rng = seeded(seed);
    random_base_with(&mut rng, n)
}

pub fn random_base_with<R: Rng>(rng: &mut R, n: usize) -> ImplicationalBase {
    let universe = Arc::new(GroundSet::letters(n).expect("letter universe"));
    let count = if n == 0 { 0 } else { rng.gen_range(0..=2 * n) };
    let imps = (0..count)
        .map(|_| {
            let premise = sparse_set(rng, n, 0.3);
            let conclusion = sparse_set(rng, n, 0.25).with(rng.gen_range(0..n));
            Implication::new(premise, conclusion)
        })
        .collect();
    ImplicationalBase::new(universe, imps).expect("letter indices fit")
}
