//! Implicational bases of finite closure systems.
//!
//! A base is a list of implications `A -> B` over a named ground set. The
//! crate computes closures, saturation, quasi-closed and pseudo-closed sets,
//! the closed-set lattice at desk scale, the quasi-closed hypergraph of each
//! essential set, and optimum bases of convex geometries through
//! minimization followed by left and right reduction.
//!
//! Exponential scans run data-parallel on rayon when the `parallel` feature
//! is on (the default); every such entry point also has a `_with` variant
//! taking an explicit [`Exec`] mode.
//!
//! ```
//! use std::sync::Arc;
//! use implbase::{optimize, GroundSet, ImplicationalBase};
//!
//! let u = Arc::new(GroundSet::letters(3).unwrap());
//! let base = ImplicationalBase::from_rules(u, &[("a c", "b"), ("a b c", "b")]).unwrap();
//! let (best, certificate) = optimize(&base);
//! assert_eq!(best.len(), 1);
//! assert!(certificate.is_optimum);
//! ```

pub mod base;
pub mod classes;
pub mod closure;
pub mod error;
pub mod exec;
pub mod fixtures;
pub mod format;
pub mod ground;
pub mod hypergraph;
pub mod lattice;
pub mod optimize;
pub mod oracle;
pub mod random;
pub mod set;

pub use base::{Implication, ImplicationalBase, SizeReport};
pub use closure::{close, equivalent, is_pseudo_closed, is_quasi_closed, is_valid, saturate, ClosureFn};
pub use error::{Error, Result};
pub use exec::Exec;
pub use ground::GroundSet;
pub use hypergraph::{all_hypergraphs, build_hqc, QuasiClosedHypergraph};
pub use lattice::{enumerate_lattice, LatticeView};
pub use optimize::{
    canonical_base, left_reduce, minimize, optimize, right_reduce, verify_optimum,
    OptimizationCertificate,
};
pub use set::ElementSet;
