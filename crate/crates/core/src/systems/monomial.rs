//! Equivalence under monomial unitaries: a coordinate permutation followed by
//! a diagonal matrix of 12th roots of unity.

use std::collections::{HashMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use super::{BasisTable, RaySystem, SystemsError};
use crate::numerics::{Eisenstein, ExactRay};

/// A ray whose components are zero or 12th roots of unity, stored as
/// exponents of ζ = e^{iπ/6} and normalized so the leading exponent is 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct UnitRay(Vec<Option<u8>>);

impl UnitRay {
    pub fn from_exact(r: &ExactRay) -> Option<UnitRay> {
        let exps = r
            .components()
            .iter()
            .map(|c| {
                if c.is_zero() {
                    Some(None)
                } else {
                    c.unit_exponent12().map(Some)
                }
            })
            .collect::<Option<Vec<_>>>()?;
        Some(UnitRay(exps).normalized())
    }

    /// Back to Z[ω]; fails when some component is an odd power of ζ.
    pub fn to_exact(&self) -> Option<ExactRay> {
        let comps = self
            .0
            .iter()
            .map(|e| match e {
                None => Some(Eisenstein::ZERO),
                Some(k) => Eisenstein::units()
                    .into_iter()
                    .find(|u| u.unit_exponent12() == Some(*k)),
            })
            .collect::<Option<Vec<_>>>()?;
        ExactRay::new(comps).ok()
    }

    pub fn exponents(&self) -> &[Option<u8>] {
        &self.0
    }

    fn normalized(self) -> UnitRay {
        let lead = self.0.iter().flatten().next().copied().unwrap_or(0);
        UnitRay(
            self.0
                .into_iter()
                .map(|e| e.map(|k| (k + 12 - lead) % 12))
                .collect(),
        )
    }
}

/// `output[perm[j]] = ζ^{phases[j]} · input[j]`, with `phases[0] = 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonomialMap {
    pub perm: [usize; 4],
    /// Exponents of ζ = e^{iπ/6}.
    pub phases: [u8; 4],
}

impl MonomialMap {
    pub const IDENTITY: MonomialMap = MonomialMap {
        perm: [0, 1, 2, 3],
        phases: [0; 4],
    };

    pub fn apply(&self, r: &UnitRay) -> UnitRay {
        let mut out = vec![None; 4];
        for (j, e) in r.0.iter().enumerate() {
            out[self.perm[j]] = e.map(|k| (k + self.phases[j]) % 12);
        }
        UnitRay(out).normalized()
    }

    pub fn apply_exact(&self, r: &ExactRay) -> Option<ExactRay> {
        self.apply(&UnitRay::from_exact(r)?).to_exact()
    }
}

impl fmt::Display for MonomialMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "perm {:?} phases zeta^{:?}", self.perm, self.phases)
    }
}

fn unit_rays(sys: &RaySystem) -> Result<Vec<UnitRay>, SystemsError> {
    if sys.dim != 4 {
        return Err(SystemsError::NotMonomialSearchable);
    }
    let exact = sys.exact_rays().ok_or(SystemsError::NotMonomialSearchable)?;
    exact
        .iter()
        .enumerate()
        .map(|(i, r)| UnitRay::from_exact(r).ok_or(SystemsError::NonMonomialRay(i)))
        .collect()
}

fn permutations() -> Vec<[usize; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    if (0..4).all(|x| p.contains(&x)) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// Every monomial map carrying A's ray set onto B's, in search order
/// (permutations lexicographic, then phase triples lexicographic).
pub fn monomial_equivalences(a: &RaySystem, b: &RaySystem) -> Result<Vec<MonomialMap>, SystemsError> {
    let ua = unit_rays(a)?;
    let ub: HashSet<UnitRay> = unit_rays(b)?.into_iter().collect();
    if ua.len() != ub.len() {
        return Ok(Vec::new());
    }
    let mut found = Vec::new();
    for perm in permutations() {
        for p1 in 0..12 {
            for p2 in 0..12 {
                for p3 in 0..12 {
                    let m = MonomialMap {
                        perm,
                        phases: [0, p1, p2, p3],
                    };
                    if ua.iter().all(|r| ub.contains(&m.apply(r))) {
                        found.push(m);
                    }
                }
            }
        }
    }
    Ok(found)
}

pub fn find_monomial_equivalence(a: &RaySystem, b: &RaySystem) -> Result<Option<MonomialMap>, SystemsError> {
    Ok(monomial_equivalences(a, b)?.into_iter().next())
}

/// Whether `map` sends A's rays bijectively onto B's and every basis of A onto a basis of B.
pub fn maps_bases(
    map: &MonomialMap,
    a: &RaySystem,
    a_bases: &BasisTable,
    b: &RaySystem,
    b_bases: &BasisTable,
) -> Result<bool, SystemsError> {
    let ua = unit_rays(a)?;
    let index_b: HashMap<UnitRay, usize> = unit_rays(b)?
        .into_iter()
        .enumerate()
        .map(|(i, r)| (r, i))
        .collect();
    let image: Option<Vec<usize>> = ua.iter().map(|r| index_b.get(&map.apply(r)).copied()).collect();
    let Some(image) = image else { return Ok(false) };
    if image.iter().collect::<HashSet<_>>().len() != index_b.len() || image.len() != index_b.len() {
        return Ok(false);
    }
    let mapped = BasisTable::new(
        a_bases
            .bases
            .iter()
            .map(|basis| basis.iter().map(|&i| image[i]).collect())
            .collect(),
    );
    Ok(&mapped == b_bases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_ray_round_trip() {
        let r = ExactRay::new(vec![
            Eisenstein::ZERO,
            Eisenstein::ONE,
            -Eisenstein::OMEGA,
            Eisenstein::OMEGA2,
        ])
        .unwrap();
        let u = UnitRay::from_exact(&r).unwrap();
        assert_eq!(u.exponents(), &[None, Some(0), Some(10), Some(8)]);
        assert_eq!(u.to_exact().unwrap(), r);
        let m = MonomialMap {
            perm: [1, 0, 2, 3],
            phases: [0, 6, 0, 0],
        };
        let image = m.apply_exact(&r).unwrap();
        // -1 in slot 0 normalizes to 1; the rest pick up the same sign.
        assert_eq!(
            image.components(),
            &[
                Eisenstein::ONE,
                Eisenstein::ZERO,
                Eisenstein::OMEGA,
                -Eisenstein::OMEGA2
            ]
        );
        let odd = MonomialMap {
            perm: [0, 1, 2, 3],
            phases: [0, 0, 3, 0],
        };
        assert!(odd.apply_exact(&r).is_none());
    }

    #[test]
    fn search_space_size() {
        assert_eq!(permutations().len(), 24);
        assert_eq!(permutations()[0], [0, 1, 2, 3]);
    }
}
