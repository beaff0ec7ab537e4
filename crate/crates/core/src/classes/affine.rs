//! Point configurations with exact rational coordinates and the convex
//! geometries their convex hulls induce.

use std::sync::Arc;

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::Rng;

use super::seeded;
use crate::base::{Implication, ImplicationalBase};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::ground::GroundSet;
use crate::lattice::{enumerate_lattice_with, LATTICE_LIMIT};
use crate::set::ElementSet;

pub type Rational = BigRational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    universe: Arc<GroundSet>,
    dim: usize,
    coords: Vec<Vec<Rational>>,
}

/// Outcome of solving for barycentric coordinates of a target.
#[derive(Clone, Debug, PartialEq, Eq)]
enum Barycentric {
    /// The points are affinely dependent.
    Dependent,
    Outside,
    Inside,
}

impl PointConfiguration {
    pub fn new(universe: Arc<GroundSet>, dim: usize, coords: Vec<Vec<Rational>>) -> Result<Self> {
        if coords.len() != universe.len() {
            return Err(Error::DimensionMismatch {
                name: "points".to_string(),
                expected: universe.len(),
                found: coords.len(),
            });
        }
        for (i, p) in coords.iter().enumerate() {
            if p.len() != dim {
                return Err(Error::DimensionMismatch {
                    name: universe.name(i).to_string(),
                    expected: dim,
                    found: p.len(),
                });
            }
        }
        for (i, j) in (0..coords.len()).tuple_combinations() {
            if coords[i] == coords[j] {
                return Err(Error::DuplicatePoint(
                    universe.name(i).to_string(),
                    universe.name(j).to_string(),
                ));
            }
        }
        Ok(PointConfiguration {
            universe,
            dim,
            coords,
        })
    }

    /// Integer coordinates over letter names.
    pub fn from_integers(dim: usize, points: &[Vec<i64>]) -> Result<Self> {
        let universe = Arc::new(GroundSet::letters(points.len())?);
        let coords = points
            .iter()
            .map(|p| p.iter().map(|&v| Rational::from_integer(BigInt::from(v))).collect())
            .collect();
        Self::new(universe, dim, coords)
    }

    pub fn universe(&self) -> &GroundSet {
        &self.universe
    }

    pub fn shared_universe(&self) -> Arc<GroundSet> {
        Arc::clone(&self.universe)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn coords(&self, i: usize) -> &[Rational] {
        &self.coords[i]
    }

    fn barycentric(&self, s: ElementSet, target: usize) -> Barycentric {
        let cols: Vec<usize> = s.iter().collect();
        let k = cols.len();
        // rows: one per coordinate plus the affine row of ones
        let mut m: Vec<Vec<Rational>> = (0..=self.dim)
            .map(|r| {
                let mut row: Vec<Rational> = cols
                    .iter()
                    .map(|&c| {
                        if r < self.dim {
                            self.coords[c][r].clone()
                        } else {
                            Rational::one()
                        }
                    })
                    .collect();
                row.push(if r < self.dim {
                    self.coords[target][r].clone()
                } else {
                    Rational::one()
                });
                row
            })
            .collect();

        for (pivot_row, col) in (0..k).enumerate() {
            let Some(p) = (pivot_row..m.len()).find(|&r| !m[r][col].is_zero()) else {
                return Barycentric::Dependent;
            };
            m.swap(pivot_row, p);
            let inv = m[pivot_row][col].recip();
            for v in m[pivot_row].iter_mut() {
                *v = &*v * &inv;
            }
            let pivot = m[pivot_row].clone();
            for (r, row) in m.iter_mut().enumerate() {
                if r != pivot_row && !row[col].is_zero() {
                    let factor = row[col].clone();
                    for (v, pv) in row.iter_mut().zip(&pivot) {
                        *v = &*v - &factor * pv;
                    }
                }
            }
        }
        let consistent = m[k..].iter().all(|row| row[k].is_zero());
        if consistent && m[..k].iter().all(|row| !row[k].is_negative()) {
            Barycentric::Inside
        } else {
            Barycentric::Outside
        }
    }

    /// Whether point `u` lies in the convex hull of the points of `y`,
    /// by Carathéodory over affinely independent subsets of size `≤ d + 1`.
    pub fn in_hull(&self, y: ElementSet, u: usize) -> bool {
        if y.contains(u) {
            return true;
        }
        let members: Vec<usize> = y.iter().collect();
        (1..=members.len().min(self.dim + 1)).any(|k| {
            members
                .iter()
                .copied()
                .combinations(k)
                .any(|s| self.barycentric(ElementSet::from_indices(s), u) == Barycentric::Inside)
        })
    }

    /// Points of the configuration inside the hull of `y`.
    pub fn hull(&self, y: ElementSet) -> ElementSet {
        (0..self.universe.len()).filter(|&u| self.in_hull(y, u)).collect()
    }

    /// `{S -> u}` for every affinely independent `S` of size 2 to `d + 1`
    /// whose hull contains another point `u`. Generates the closure system.
    pub fn generator_base(&self) -> ImplicationalBase {
        let n = self.universe.len();
        let mut imps = Vec::new();
        for k in 2..=(self.dim + 1).min(n) {
            for s in (0..n).combinations(k) {
                let s = ElementSet::from_indices(s);
                let mut inside = ElementSet::EMPTY;
                for u in (0..n).filter(|&u| !s.contains(u)) {
                    match self.barycentric(s, u) {
                        Barycentric::Dependent => break,
                        Barycentric::Inside => inside = inside.with(u),
                        Barycentric::Outside => {}
                    }
                }
                if !inside.is_empty() {
                    imps.push(Implication::new(s, inside));
                }
            }
        }
        ImplicationalBase::new(self.shared_universe(), imps).expect("indices fit")
    }
}

/// `{ex(C) -> C ∖ ex(C) : C essential}` of the affine convex geometry.
pub fn affine_base(pts: &PointConfiguration) -> Result<ImplicationalBase> {
    let generators = pts.generator_base();
    if generators.n() > LATTICE_LIMIT {
        return Err(Error::UniverseTooLarge {
            size: generators.n(),
            limit: LATTICE_LIMIT,
        });
    }
    let view = enumerate_lattice_with(&generators, Exec::default())?;
    let imps = view
        .essential_sets()
        .into_iter()
        .map(|c| {
            let ex = view.extreme_points(c).expect("essential sets are closed");
            Implication::new(ex, c)
        })
        .collect();
    Ok(generators.with_implications(imps).sorted())
}

/// `n` distinct points with coordinates in `0..=max` in dimension `dim`.
///
/// # Panics
/// If the grid has fewer than `n` points.
pub fn random_points(seed: u64, n: usize, dim: usize, max: i64) -> PointConfiguration {
    let grid = (max + 1).checked_pow(dim as u32).unwrap_or(i64::MAX);
    assert!(grid >= n as i64, "grid of {grid} points cannot hold {n} distinct points");
    let mut rng = seeded(seed);
    let mut pts: Vec<Vec<i64>> = Vec::with_capacity(n);
    while pts.len() < n {
        let p: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=max)).collect();
        if !pts.contains(&p) {
            pts.push(p);
        }
    }
    PointConfiguration::from_integers(dim, &pts).expect("distinct points of one dimension")
}

/// `n` distinct collinear points along a random integer direction.
pub fn random_collinear_points(seed: u64, n: usize, dim: usize) -> PointConfiguration {
    let mut rng = seeded(seed);
    let direction: Vec<i64> = loop {
        let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
        if v.iter().any(|&x| x != 0) {
            break v;
        }
    };
    let offset: Vec<i64> = (0..dim).map(|_| rng.gen_range(0..=3)).collect();
    let mut steps: Vec<i64> = Vec::with_capacity(n);
    while steps.len() < n {
        let t = rng.gen_range(-10..=10);
        if !steps.contains(&t) {
            steps.push(t);
        }
    }
    let pts: Vec<Vec<i64>> = steps
        .iter()
        .map(|&t| offset.iter().zip(&direction).map(|(o, d)| o + t * d).collect())
        .collect();
    PointConfiguration::from_integers(dim, &pts).expect("distinct collinear points")
}
