//! The four convex geometry classes whose quasi-closed hypergraphs have
//! pairwise disjoint edges: generators and recognizers.

pub mod acceptant;
pub mod acyclic;
pub mod affine;
pub mod laws;
pub mod poset;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator for an explicit seed.
pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
