//! Named ray systems.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::numerics::ExactRay;
use crate::penrose::{canonical_penrose_system, float_penrose_system, PenroseError};
use crate::systems::{build_orthogonality_graph, exact_system, RaySystem, SystemRay, SystemsError};
use crate::witting::{
    collapse_to_rays, e8_rays, f148_subsystem, f148_system, generate_witting_vertices, WittingError,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemId {
    /// The forty Penrose rays in the spin-3/2 angular momentum basis (floating point).
    PenroseEq3,
    /// The forty Penrose rays after the exact change of basis.
    PenroseCanonical,
    /// The forty rays of the Witting polytope.
    Witting,
    /// The 120 rays of the realified Witting polytope.
    E8,
    /// The 148-ray extension system.
    F148,
    /// One of its eight 40-ray subsystems, numbered 1 to 8.
    F148Sub(u8),
}

impl SystemId {
    pub fn all() -> Vec<SystemId> {
        let mut v = vec![
            SystemId::PenroseEq3,
            SystemId::PenroseCanonical,
            SystemId::Witting,
            SystemId::E8,
            SystemId::F148,
        ];
        v.extend((1..=8).map(SystemId::F148Sub));
        v
    }
}

impl fmt::Display for SystemId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemId::PenroseEq3 => f.write_str("penrose-eq3"),
            SystemId::PenroseCanonical => f.write_str("penrose-canonical"),
            SystemId::Witting => f.write_str("witting"),
            SystemId::E8 => f.write_str("e8"),
            SystemId::F148 => f.write_str("f148"),
            SystemId::F148Sub(n) => write!(f, "f148-sub-{n}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("unknown system {0:?}")]
pub struct UnknownSystem(pub String);

impl FromStr for SystemId {
    type Err = UnknownSystem;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        SystemId::all()
            .into_iter()
            .find(|id| id.to_string() == s)
            .ok_or_else(|| UnknownSystem(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum CatalogError {
    #[error(transparent)]
    Penrose(#[from] PenroseError),
    #[error(transparent)]
    Witting(#[from] WittingError),
    #[error(transparent)]
    Systems(#[from] SystemsError),
    #[error(transparent)]
    Numerics(#[from] crate::numerics::NumericsError),
}

/// The forty Witting rays, sorted, labeled `w1`..`w40`.
pub fn witting_rays() -> Result<Vec<(String, ExactRay)>, CatalogError> {
    Ok(collapse_to_rays(&generate_witting_vertices())?
        .into_iter()
        .enumerate()
        .map(|(i, c)| (format!("w{}", i + 1), c.ray))
        .collect())
}

pub fn build_system(id: SystemId) -> Result<RaySystem, CatalogError> {
    Ok(match id {
        SystemId::PenroseEq3 => {
            let (labels, rays) = float_penrose_system()?
                .into_iter()
                .map(|(l, r)| (l.to_string(), SystemRay::Float(r)))
                .unzip();
            build_orthogonality_graph(labels, rays)?
        }
        SystemId::PenroseCanonical => exact_system(
            canonical_penrose_system()?
                .into_iter()
                .map(|(l, r)| (l.to_string(), r))
                .collect(),
        )?,
        SystemId::Witting => exact_system(witting_rays()?)?,
        SystemId::E8 => {
            let (labels, rays) = e8_rays()
                .into_iter()
                .enumerate()
                .map(|(i, r)| (format!("r{}", i + 1), SystemRay::Real8(r)))
                .unzip();
            build_orthogonality_graph(labels, rays)?
        }
        SystemId::F148 => exact_system(f148_system())?,
        SystemId::F148Sub(n) => exact_system(f148_subsystem(n as usize)?)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ids_round_trip() {
        for id in SystemId::all() {
            assert_eq!(id.to_string().parse::<SystemId>().unwrap(), id);
        }
        assert!("f148-sub-9".parse::<SystemId>().is_err());
        assert!("penrose".parse::<SystemId>().is_err());
    }
}
