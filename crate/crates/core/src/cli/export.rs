//! JSON and CSV serialization of ray systems.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::catalog::{build_system, CatalogError, SystemId};
use crate::numerics::{Eisenstein, ExactRay, FloatRay, WittingScalar};
use crate::systems::{
    build_orthogonality_graph, enumerate_bases, exact_system, signature, RaySystem, SystemRay,
};
use crate::witting::{collapse_to_rays, generate_witting_vertices, RealRay8, WittingVertex};

#[derive(Debug, Error)]
pub enum ExportError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("malformed system file: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid ray {label}: {msg}")]
    BadRay { label: String, msg: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ScalarKind {
    Eisenstein,
    Float,
    Witting,
}

/// Components as `[a, b]` for a + bω, `[[xa, xb], [ya, yb]]` for x + i√3·y,
/// or `[re, im]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Components {
    Eisenstein(Vec<[i64; 2]>),
    Witting(Vec<[[i64; 2]; 2]>),
    Float(Vec<[f64; 2]>),
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RayRecord {
    pub label: String,
    pub components: Components,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SystemExport {
    pub system: String,
    pub scalar_kind: ScalarKind,
    pub rays: Vec<RayRecord>,
    pub bases: Vec<Vec<usize>>,
    pub signature: String,
}

/// Rounds to 12 significant digits, flushing rounding noise below 1e-12 to zero.
pub fn round12(x: f64) -> f64 {
    if x.abs() < 1e-12 || !x.is_finite() {
        return 0.0;
    }
    let r: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

fn eis(e: &Eisenstein) -> [i64; 2] {
    [e.a, e.b]
}

fn witting_components(v: &WittingVertex) -> Components {
    Components::Witting(v.components.iter().map(|s| [eis(&s.x), eis(&s.y)]).collect())
}

fn record(label: &str, ray: &SystemRay) -> RayRecord {
    let components = match ray {
        SystemRay::Exact(r) => Components::Eisenstein(r.components().iter().map(eis).collect()),
        SystemRay::Float(r) => Components::Float(
            r.components()
                .iter()
                .map(|z| [round12(z.re), round12(z.im)])
                .collect(),
        ),
        SystemRay::Real8(r) => witting_components(&r.preimage),
    };
    RayRecord {
        label: label.to_string(),
        components,
    }
}

/// The exported form of a named system. The `witting` system lists its 240
/// vertices; its bases and signature refer to the 40 rays they collapse to,
/// so `bases` is left empty there.
pub fn export_system(id: SystemId) -> Result<SystemExport, ExportError> {
    let sys = build_system(id)?;
    let bases = enumerate_bases(&sys).map_err(CatalogError::from)?;
    let sig = signature(&sys, &bases).to_string();
    let (scalar_kind, rays, bases) = match id {
        SystemId::Witting => {
            let rays = generate_witting_vertices()
                .iter()
                .enumerate()
                .map(|(i, v)| RayRecord {
                    label: format!("v{}", i + 1),
                    components: witting_components(v),
                })
                .collect();
            (ScalarKind::Witting, rays, Vec::new())
        }
        _ => {
            let kind = match sys.rays[0] {
                SystemRay::Exact(_) => ScalarKind::Eisenstein,
                SystemRay::Float(_) => ScalarKind::Float,
                SystemRay::Real8(_) => ScalarKind::Witting,
            };
            let rays = sys
                .labels
                .iter()
                .zip(&sys.rays)
                .map(|(l, r)| record(l, r))
                .collect();
            (kind, rays, bases.bases)
        }
    };
    Ok(SystemExport {
        system: id.to_string(),
        scalar_kind,
        rays,
        bases,
        signature: sig,
    })
}

pub fn to_json(e: &SystemExport) -> String {
    serde_json::to_string_pretty(e).expect("exports serialize") + "\n"
}

/// One row per ray; complex and exact components are flattened into column groups.
pub fn to_csv(e: &SystemExport) -> String {
    let mut out = String::new();
    let width = e.rays.first().map_or(0, |r| match &r.components {
        Components::Eisenstein(c) => c.len(),
        Components::Witting(c) => c.len(),
        Components::Float(c) => c.len(),
    });
    let mut header = vec!["label".to_string()];
    for k in 1..=width {
        let cols: &[&str] = match e.scalar_kind {
            ScalarKind::Eisenstein => &["a", "b"],
            ScalarKind::Float => &["re", "im"],
            ScalarKind::Witting => &["xa", "xb", "ya", "yb"],
        };
        header.extend(cols.iter().map(|c| format!("c{k}_{c}")));
    }
    out.push_str(&header.join(","));
    out.push('\n');
    for r in &e.rays {
        let mut row = vec![r.label.clone()];
        match &r.components {
            Components::Eisenstein(c) => row.extend(c.iter().flat_map(|p| p.map(|x| x.to_string()))),
            Components::Witting(c) => row.extend(
                c.iter()
                    .flat_map(|[x, y]| [x[0], x[1], y[0], y[1]].map(|v| v.to_string())),
            ),
            Components::Float(c) => row.extend(c.iter().flat_map(|p| p.map(|x| format!("{x:.11e}")))),
        }
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

fn bad(label: &str, msg: impl ToString) -> ExportError {
    ExportError::BadRay {
        label: label.to_string(),
        msg: msg.to_string(),
    }
}

fn witting_vertex(r: &RayRecord) -> Result<WittingVertex, ExportError> {
    let Components::Witting(c) = &r.components else {
        return Err(bad(&r.label, "expected [[xa, xb], [ya, yb]] components"));
    };
    let comps: [WittingScalar; 4] = c
        .iter()
        .map(|[x, y]| WittingScalar::new(Eisenstein::new(x[0], x[1]), Eisenstein::new(y[0], y[1])))
        .collect::<Vec<_>>()
        .try_into()
        .map_err(|_| bad(&r.label, "expected 4 components"))?;
    Ok(WittingVertex { components: comps })
}

/// Rebuilds a ray system from its JSON export, re-canonicalizing every ray.
pub fn import_system(json: &str) -> Result<RaySystem, ExportError> {
    let e: SystemExport = serde_json::from_str(json)?;
    let sys = match e.scalar_kind {
        ScalarKind::Eisenstein => {
            let rays = e
                .rays
                .iter()
                .map(|r| {
                    let Components::Eisenstein(c) = &r.components else {
                        return Err(bad(&r.label, "expected [a, b] components"));
                    };
                    let ray = ExactRay::new(c.iter().map(|p| Eisenstein::new(p[0], p[1])).collect())
                        .and_then(|x| x.canonicalize())
                        .map_err(|err| bad(&r.label, err))?;
                    Ok((r.label.clone(), ray))
                })
                .collect::<Result<Vec<_>, _>>()?;
            exact_system(rays).map_err(CatalogError::from)?
        }
        ScalarKind::Float => {
            let (labels, rays): (Vec<_>, Vec<_>) = e
                .rays
                .iter()
                .map(|r| {
                    let Components::Float(c) = &r.components else {
                        return Err(bad(&r.label, "expected [re, im] components"));
                    };
                    let ray = FloatRay::new(
                        c.iter()
                            .map(|p| num_complex::Complex64::new(p[0], p[1]))
                            .collect(),
                    )
                    .map_err(|err| bad(&r.label, err))?;
                    Ok((r.label.clone(), SystemRay::Float(ray)))
                })
                .collect::<Result<Vec<_>, _>>()?
                .into_iter()
                .unzip();
            build_orthogonality_graph(labels, rays).map_err(CatalogError::from)?
        }
        ScalarKind::Witting => {
            let vertices = e.rays.iter().map(witting_vertex).collect::<Result<Vec<_>, _>>()?;
            if e.system == SystemId::E8.to_string() {
                let (labels, rays): (Vec<_>, Vec<_>) = e
                    .rays
                    .iter()
                    .zip(vertices)
                    .map(|(r, v)| (r.label.clone(), SystemRay::Real8(RealRay8::from_vertex(v))))
                    .unzip();
                build_orthogonality_graph(labels, rays).map_err(CatalogError::from)?
            } else {
                let rays = collapse_to_rays(&vertices).map_err(CatalogError::from)?;
                exact_system(
                    rays.into_iter()
                        .enumerate()
                        .map(|(i, c)| (format!("w{}", i + 1), c.ray))
                        .collect(),
                )
                .map_err(CatalogError::from)?
            }
        }
    };
    Ok(sys)
}
