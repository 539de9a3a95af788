//! Orthogonality graphs, bases, system signatures and equivalences.

mod cliques;
mod labels;
mod monomial;

pub use cliques::{brute_force_bases, enumerate_bases};
pub use labels::{classify_basis, match_penrose_labels, BasisFamily, PenroseBasisReport};
pub use monomial::{find_monomial_equivalence, maps_bases, monomial_equivalences, MonomialMap, UnitRay};

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use crate::bits::BitVec;
use crate::numerics::{eis_inner, float_orthogonal, ExactRay, FloatRay, NumericsError, ORTHO_TOL};
use crate::witting::RealRay8;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SystemsError {
    #[error("a system must contain rays of one kind only")]
    MixedRayKinds,
    #[error("rays have differing dimensions")]
    MixedDimensions,
    #[error("system is empty")]
    Empty,
    #[error("rays {0} and {1} are projectively equal")]
    DuplicateRay(usize, usize),
    #[error("ray {0} is not in canonical form")]
    NotCanonical(usize),
    #[error("found {size} mutually orthogonal rays in dimension {dim}")]
    CliqueTooLarge { size: usize, dim: usize },
    #[error("ray {0} has a component that is neither zero nor a root of unity")]
    NonMonomialRay(usize),
    #[error("monomial search needs exact rays of dimension 4")]
    NotMonomialSearchable,
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// A ray of any of the supported kinds.
#[derive(Clone, Debug, PartialEq)]
pub enum SystemRay {
    Exact(ExactRay),
    Float(FloatRay),
    Real8(RealRay8),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RayKind {
    Exact,
    Float,
    Real8,
}

impl SystemRay {
    pub fn kind(&self) -> RayKind {
        match self {
            SystemRay::Exact(_) => RayKind::Exact,
            SystemRay::Float(_) => RayKind::Float,
            SystemRay::Real8(_) => RayKind::Real8,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            SystemRay::Exact(r) => r.dim(),
            SystemRay::Float(r) => r.dim(),
            SystemRay::Real8(_) => 8,
        }
    }

    fn orthogonal(&self, other: &SystemRay) -> Result<bool, NumericsError> {
        Ok(match (self, other) {
            (SystemRay::Exact(a), SystemRay::Exact(b)) => eis_inner(a, b)?.is_zero(),
            (SystemRay::Float(a), SystemRay::Float(b)) => float_orthogonal(a, b, ORTHO_TOL)?,
            (SystemRay::Real8(a), SystemRay::Real8(b)) => a.is_orthogonal(b),
            _ => unreachable!("kinds are checked on construction"),
        })
    }

    fn same_ray(&self, other: &SystemRay) -> Result<bool, NumericsError> {
        Ok(match (self, other) {
            (SystemRay::Exact(a), SystemRay::Exact(b)) => a == b,
            (SystemRay::Float(a), SystemRay::Float(b)) => crate::numerics::proj_equal_float(a, b, ORTHO_TOL)?,
            (SystemRay::Real8(a), SystemRay::Real8(b)) => a == b,
            _ => false,
        })
    }
}

/// Labeled rays with their orthogonality relation.
#[derive(Clone, Debug)]
pub struct RaySystem {
    pub labels: Vec<String>,
    pub rays: Vec<SystemRay>,
    pub dim: usize,
    adjacency: Vec<BitVec>,
}

impl RaySystem {
    pub fn len(&self) -> usize {
        self.rays.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rays.is_empty()
    }

    pub fn kind(&self) -> RayKind {
        self.rays[0].kind()
    }

    pub fn adjacent(&self, i: usize, j: usize) -> bool {
        self.adjacency[i].get(j)
    }

    pub fn neighbors(&self, i: usize) -> &BitVec {
        &self.adjacency[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adjacency[i].count_ones()
    }

    /// Sorted distinct vertex degrees.
    pub fn degree_set(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.len()).map(|i| self.degree(i)).collect();
        d.sort_unstable();
        d.dedup();
        d
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn exact_rays(&self) -> Option<Vec<&ExactRay>> {
        self.rays
            .iter()
            .map(|r| match r {
                SystemRay::Exact(e) => Some(e),
                _ => None,
            })
            .collect()
    }
}

pub fn build_orthogonality_graph(
    labels: Vec<String>,
    rays: Vec<SystemRay>,
) -> Result<RaySystem, SystemsError> {
    let first = rays.first().ok_or(SystemsError::Empty)?;
    let (kind, dim) = (first.kind(), first.dim());
    if rays.iter().any(|r| r.kind() != kind) {
        return Err(SystemsError::MixedRayKinds);
    }
    if rays.iter().any(|r| r.dim() != dim) {
        return Err(SystemsError::MixedDimensions);
    }
    for (i, r) in rays.iter().enumerate() {
        if let SystemRay::Exact(e) = r {
            if !e.is_canonical() {
                return Err(SystemsError::NotCanonical(i));
            }
        }
    }
    let n = rays.len();
    let rows: Vec<Result<BitVec, SystemsError>> = (0..n)
        .into_par_iter()
        .map(|i| {
            let mut row = BitVec::zeros(n);
            for j in 0..n {
                if i == j {
                    continue;
                }
                if rays[i].same_ray(&rays[j])? {
                    return Err(SystemsError::DuplicateRay(i.min(j), i.max(j)));
                }
                if rays[i].orthogonal(&rays[j])? {
                    row.set(j);
                }
            }
            Ok(row)
        })
        .collect();
    let adjacency = rows.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(RaySystem {
        labels,
        rays,
        dim,
        adjacency,
    })
}

/// Convenience constructor for labeled exact rays.
pub fn exact_system(rays: Vec<(String, ExactRay)>) -> Result<RaySystem, SystemsError> {
    let (labels, rays): (Vec<_>, Vec<_>) = rays.into_iter().map(|(l, r)| (l, SystemRay::Exact(r))).unzip();
    build_orthogonality_graph(labels, rays)
}

/// Mutually orthogonal `dim`-tuples of ray indices, each sorted, listed lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisTable {
    pub bases: Vec<Vec<usize>>,
}

impl BasisTable {
    pub fn new(mut bases: Vec<Vec<usize>>) -> Self {
        for b in &mut bases {
            b.sort_unstable();
        }
        bases.sort();
        bases.dedup();
        BasisTable { bases }
    }

    pub fn len(&self) -> usize {
        self.bases.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bases.is_empty()
    }

    /// Number of bases each ray occurs in.
    pub fn occurrences(&self, n_rays: usize) -> Vec<usize> {
        let mut occ = vec![0; n_rays];
        for b in &self.bases {
            for &r in b {
                occ[r] += 1;
            }
        }
        occ
    }
}

/// Occurrence profile of a ray-basis system, printed as e.g. `4_13 144_7-265_4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemSignature {
    /// occurrence count → number of rays with that count
    pub ray_occurrence_profile: BTreeMap<usize, usize>,
    pub basis_count: usize,
    pub basis_size: usize,
}

impl SystemSignature {
    /// Σ occurrence × ray-count = basis_count × basis_size
    pub fn incidence_identity_holds(&self) -> bool {
        let lhs: usize = self.ray_occurrence_profile.iter().map(|(o, c)| o * c).sum();
        lhs == self.basis_count * self.basis_size
    }
}

impl fmt::Display for SystemSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .ray_occurrence_profile
            .iter()
            .rev()
            .map(|(occ, count)| format!("{count}_{occ}"))
            .collect();
        write!(f, "{}-{}_{}", parts.join(" "), self.basis_count, self.basis_size)
    }
}

pub fn signature(system: &RaySystem, bases: &BasisTable) -> SystemSignature {
    let mut profile = BTreeMap::new();
    for occ in bases.occurrences(system.len()) {
        *profile.entry(occ).or_insert(0) += 1;
    }
    SystemSignature {
        ray_occurrence_profile: profile,
        basis_count: bases.len(),
        basis_size: system.dim,
    }
}
