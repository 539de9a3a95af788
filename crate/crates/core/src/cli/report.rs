//! The full reproduction report.

use serde::Serialize;
use sha2::{Digest, Sha256};

use super::checks::{parity_summary, run_all, Check, ColoringSummary, ParitySummary};
use super::export::{export_system, to_json, ExportError};
use crate::catalog::{build_system, CatalogError, SystemId};
use crate::numerics::ExactRay;
use crate::penrose::RayLabel;
use crate::systems::{enumerate_bases, signature};

#[derive(Clone, Debug, Serialize)]
pub struct SystemSummary {
    pub system: String,
    pub rays: usize,
    pub dim: usize,
    pub degrees: Vec<usize>,
    pub bases: usize,
    pub signature: String,
    pub incidence_identity: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ReportDocument {
    pub tool: String,
    pub version: String,
    pub passed: bool,
    pub systems: Vec<SystemSummary>,
    pub claims: Vec<Check>,
    pub parity: Vec<ParitySummary>,
    pub coloring: Vec<ColoringSummary>,
    /// SHA-256 over every exported system followed by the fields above.
    pub digest: String,
}

fn summarize(id: SystemId) -> Result<SystemSummary, CatalogError> {
    let sys = build_system(id)?;
    let bases = enumerate_bases(&sys)?;
    let sig = signature(&sys, &bases);
    Ok(SystemSummary {
        system: id.to_string(),
        rays: sys.len(),
        dim: sys.dim,
        degrees: sys.degree_set(),
        bases: bases.len(),
        signature: sig.to_string(),
        incidence_identity: sig.incidence_identity_holds(),
    })
}

pub fn build_report(
    table1: &[(RayLabel, ExactRay)],
    table3: &[Vec<RayLabel>],
) -> Result<ReportDocument, ExportError> {
    let systems = SystemId::all()
        .into_iter()
        .map(summarize)
        .collect::<Result<Vec<_>, _>>()?;
    let (claims, mut parity, coloring) = run_all(table1, table3)?;
    parity.push(parity_summary(SystemId::F148, 100, None)?);
    let passed = claims.iter().all(|c| c.passed);

    let mut hasher = Sha256::new();
    for id in SystemId::all() {
        hasher.update(to_json(&export_system(id)?).as_bytes());
    }
    let mut doc = ReportDocument {
        tool: env!("CARGO_PKG_NAME").to_string(),
        version: env!("CARGO_PKG_VERSION").to_string(),
        passed,
        systems,
        claims,
        parity,
        coloring,
        digest: String::new(),
    };
    hasher.update(serde_json::to_vec(&doc).expect("report serializes"));
    doc.digest = format!("{:x}", hasher.finalize());
    Ok(doc)
}
