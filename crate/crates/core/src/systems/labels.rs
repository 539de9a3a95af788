//! Structural classification of the Penrose bases against the dodecahedron.

use std::collections::BTreeSet;

use serde::Serialize;

use super::{BasisTable, RaySystem};
use crate::penrose::{build_dodecahedron, PenroseError, RayLabel};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BasisFamily {
    /// Implicit ray of a vertex with the explicit rays of its three neighbors.
    VertexNeighborhood,
    /// Explicit and implicit rays of a pair of antipodal vertices.
    Antipodal,
    /// Implicit rays of the vertices of an inscribed regular tetrahedron.
    Tetrahedral,
    Other,
}

#[derive(Clone, Debug, Serialize)]
pub struct PenroseBasisReport {
    pub vertex_neighborhood: usize,
    pub antipodal: usize,
    pub tetrahedral: usize,
    pub other: usize,
    /// Reference bases not found by enumeration.
    pub missing: Vec<String>,
    /// Enumerated bases absent from the reference.
    pub extra: Vec<String>,
}

impl PenroseBasisReport {
    pub fn passed(&self) -> bool {
        self.vertex_neighborhood == 20
            && self.antipodal == 10
            && self.tetrahedral == 10
            && self.other == 0
            && self.missing.is_empty()
            && self.extra.is_empty()
    }
}

const TETRA_TOL: f64 = 1e-9;

pub fn classify_basis(basis: &[RayLabel]) -> BasisFamily {
    let model = build_dodecahedron();
    let implicit: Vec<_> = basis.iter().filter(|l| l.primed).map(|l| l.vertex).collect();
    let explicit: Vec<_> = basis.iter().filter(|l| !l.primed).map(|l| l.vertex).collect();
    match (implicit.len(), explicit.len()) {
        (1, 3) => {
            let mut nb = model.neighbors(implicit[0]).to_vec();
            let mut ex = explicit.clone();
            nb.sort();
            ex.sort();
            if nb == ex {
                return BasisFamily::VertexNeighborhood;
            }
        }
        (2, 2) => {
            let a: BTreeSet<_> = implicit.iter().collect();
            let b: BTreeSet<_> = explicit.iter().collect();
            if a == b && model.antipode(implicit[0]) == implicit[1] {
                return BasisFamily::Antipodal;
            }
        }
        (4, 0) => {
            let target = (-1.0f64 / 3.0).acos();
            let regular = (0..4).all(|i| {
                (i + 1..4).all(|j| {
                    let angle = model
                        .direction(implicit[i])
                        .angle_to(model.direction(implicit[j]));
                    (angle - target).abs() < TETRA_TOL
                })
            });
            if regular {
                return BasisFamily::Tetrahedral;
            }
        }
        _ => {}
    }
    BasisFamily::Other
}

fn label_set(basis: &[RayLabel]) -> BTreeSet<RayLabel> {
    basis.iter().copied().collect()
}

fn show(set: &BTreeSet<RayLabel>) -> String {
    set.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

/// Classifies every enumerated basis and compares the set against `reference`.
pub fn match_penrose_labels(
    system: &RaySystem,
    bases: &BasisTable,
    reference: &[Vec<RayLabel>],
) -> Result<PenroseBasisReport, PenroseError> {
    let labels: Vec<RayLabel> = system
        .labels
        .iter()
        .map(|s| s.parse())
        .collect::<Result<_, _>>()?;
    let found: Vec<Vec<RayLabel>> = bases
        .bases
        .iter()
        .map(|b| b.iter().map(|&i| labels[i]).collect())
        .collect();
    let mut report = PenroseBasisReport {
        vertex_neighborhood: 0,
        antipodal: 0,
        tetrahedral: 0,
        other: 0,
        missing: Vec::new(),
        extra: Vec::new(),
    };
    for b in &found {
        match classify_basis(b) {
            BasisFamily::VertexNeighborhood => report.vertex_neighborhood += 1,
            BasisFamily::Antipodal => report.antipodal += 1,
            BasisFamily::Tetrahedral => report.tetrahedral += 1,
            BasisFamily::Other => report.other += 1,
        }
    }
    let found_sets: BTreeSet<_> = found.iter().map(|b| label_set(b)).collect();
    let ref_sets: BTreeSet<_> = reference.iter().map(|b| label_set(b)).collect();
    report.missing = ref_sets.difference(&found_sets).map(show).collect();
    report.extra = found_sets.difference(&ref_sets).map(show).collect();
    Ok(report)
}
