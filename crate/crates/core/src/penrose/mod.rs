//! The forty Penrose rays: explicit rays from dodecahedron directions via
//! Majorana stars, implicit rays completing orthogonal tetrads, and the
//! change to the basis {F, B, E, A′} in which all rays become exact.

mod geometry;
mod majorana;
pub mod published;

pub use geometry::{build_dodecahedron, DodecahedronModel, RayLabel, SphericalDirection, VertexLabel};
pub use majorana::{majorana_ray, stereographic, wigner_projection_ray, MajoranaPoint};

use num_complex::Complex64;
use thiserror::Error;

use crate::numerics::{complex_inner_float, Eisenstein, ExactRay, FloatRay, NumericsError, ORTHO_TOL};

/// Maximum distance between a canonical float component and its exact value.
pub const SNAP_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PenroseError {
    #[error("unknown ray label {0:?}")]
    BadLabel(String),
    #[error("neighbor triad of {0} is degenerate")]
    DegenerateTriad(VertexLabel),
    #[error("ray {label} component {index} is {distance:.3e} from every unit of Z[w]")]
    SnapFailure {
        label: RayLabel,
        index: usize,
        distance: f64,
    },
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// Reading order of the exact table: row by row, four rays per row.
pub const TABLE_ORDER: [&str; 40] = [
    "F", "B", "E", "A'", "N", "U", "S", "T'", "Q", "L", "I", "P'", "G", "H", "K", "Q'", "K'", "G'", "D'",
    "R'", "R", "D", "P", "I'", "F'", "U'", "E'", "A", "L'", "C'", "J'", "M'", "N'", "B'", "S'", "T", "J",
    "M", "C", "H'",
];

pub fn table_order() -> Vec<RayLabel> {
    TABLE_ORDER.iter().map(|s| s.parse().unwrap()).collect()
}

/// Explicit ray of `v`: Majorana stars at v (twice) and at its antipode.
pub fn explicit_ray(model: &DodecahedronModel, v: VertexLabel) -> Result<FloatRay, PenroseError> {
    let here = stereographic(model.direction(v));
    let there = stereographic(model.direction(model.antipode(v)));
    Ok(majorana_ray([here, here, there])?)
}

/// The ray orthogonal to the explicit rays of the three neighbors of `v`,
/// by cofactor expansion of the conjugated 3×4 matrix.
pub fn implicit_ray(model: &DodecahedronModel, v: VertexLabel) -> Result<FloatRay, PenroseError> {
    let rows = model
        .neighbors(v)
        .iter()
        .map(|n| explicit_ray(model, *n))
        .collect::<Result<Vec<_>, _>>()?;
    let m: Vec<Vec<Complex64>> = rows
        .iter()
        .map(|r| r.components().iter().map(|c| c.conj()).collect())
        .collect();
    let comps: Vec<Complex64> = (0..4)
        .map(|j| {
            let cols: Vec<usize> = (0..4).filter(|&k| k != j).collect();
            let minor = |r: usize, c: usize| m[r][cols[c]];
            let det = minor(0, 0) * (minor(1, 1) * minor(2, 2) - minor(1, 2) * minor(2, 1))
                - minor(0, 1) * (minor(1, 0) * minor(2, 2) - minor(1, 2) * minor(2, 0))
                + minor(0, 2) * (minor(1, 0) * minor(2, 1) - minor(1, 1) * minor(2, 0));
            if j % 2 == 0 {
                det
            } else {
                -det
            }
        })
        .collect();
    let ray = FloatRay::new(comps).map_err(|_| PenroseError::DegenerateTriad(v))?;
    if ray.norm() < 1e-12 {
        return Err(PenroseError::DegenerateTriad(v));
    }
    Ok(ray.normalized())
}

/// Ray for any label in the angular momentum basis.
pub fn penrose_ray(model: &DodecahedronModel, label: RayLabel) -> Result<FloatRay, PenroseError> {
    if label.primed {
        implicit_ray(model, label.vertex)
    } else {
        explicit_ray(model, label.vertex)
    }
}

/// A 4×4 complex matrix expected to be unitary.
#[derive(Clone, Debug, PartialEq)]
pub struct UnitaryMatrix4 {
    pub rows: [[Complex64; 4]; 4],
}

impl UnitaryMatrix4 {
    /// Largest entrywise deviation of U·U† from the identity.
    pub fn unitarity_defect(&self) -> f64 {
        let mut worst: f64 = 0.0;
        for i in 0..4 {
            for j in 0..4 {
                let s: Complex64 = (0..4).map(|k| self.rows[i][k] * self.rows[j][k].conj()).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((s - target).norm());
            }
        }
        worst
    }

    pub fn apply(&self, r: &FloatRay) -> Result<FloatRay, NumericsError> {
        let rows: Vec<Vec<Complex64>> = self.rows.iter().map(|r| r.to_vec()).collect();
        r.transform(&rows)
    }
}

/// Change of basis taking F, B, E, A′ to the coordinate rays: its rows are
/// the conjugates of those four rays.
pub fn omega_matrix() -> UnitaryMatrix4 {
    let printed = published::explicit_rays_as_printed();
    let get = |v: VertexLabel| {
        printed
            .iter()
            .find(|(l, _)| *l == RayLabel::explicit(v))
            .map(|(_, r)| r.clone())
            .unwrap()
    };
    let conj_row = |r: &FloatRay| {
        let c = r.components();
        [c[0].conj(), c[1].conj(), c[2].conj(), c[3].conj()]
    };
    UnitaryMatrix4 {
        rows: [
            conj_row(&get(VertexLabel::F)),
            conj_row(&get(VertexLabel::B)),
            conj_row(&get(VertexLabel::E)),
            conj_row(&published::implicit_a_prime()),
        ],
    }
}

pub fn omega_transform(r: &FloatRay) -> Result<FloatRay, NumericsError> {
    omega_matrix().apply(r)
}

/// All forty rays in the angular momentum basis, in table order.
pub fn float_penrose_system() -> Result<Vec<(RayLabel, FloatRay)>, PenroseError> {
    let model = build_dodecahedron();
    table_order()
        .into_iter()
        .map(|l| Ok((l, penrose_ray(&model, l)?)))
        .collect()
}

/// Replace each component of a canonical float ray by the nearest of
/// 0, ±1, ±ω, ±ω².
pub fn snap_to_units(label: RayLabel, r: &FloatRay) -> Result<ExactRay, PenroseError> {
    let mut candidates = vec![Eisenstein::ZERO];
    candidates.extend(Eisenstein::units());
    let comps = r
        .components()
        .iter()
        .enumerate()
        .map(|(index, z)| {
            let (best, distance) = candidates
                .iter()
                .map(|e| (*e, (e.to_complex() - z).norm()))
                .min_by(|a, b| a.1.total_cmp(&b.1))
                .unwrap();
            if distance < SNAP_TOL {
                Ok(best)
            } else {
                Err(PenroseError::SnapFailure {
                    label,
                    index,
                    distance,
                })
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(ExactRay::new(comps)?)
}

/// Geometric construction → basis change → canonicalization → snap, giving
/// the forty exact rays in table order.
pub fn canonical_penrose_system() -> Result<Vec<(RayLabel, ExactRay)>, PenroseError> {
    let omega = omega_matrix();
    float_penrose_system()?
        .into_iter()
        .map(|(l, r)| {
            let c = omega.apply(&r)?.canonicalize();
            Ok((l, snap_to_units(l, &c)?))
        })
        .collect()
}

/// Largest |⟨implicit(v), explicit(n)⟩| over all vertices and their neighbors.
pub fn max_implicit_residual(model: &DodecahedronModel) -> Result<f64, PenroseError> {
    let mut worst: f64 = 0.0;
    for v in VertexLabel::ALL {
        let imp = implicit_ray(model, v)?;
        for n in model.neighbors(v) {
            let e = explicit_ray(model, n)?.normalized();
            worst = worst.max(complex_inner_float(&imp, &e)?.norm());
        }
    }
    Ok(worst)
}

/// True iff every pair of float rays in the slice is orthogonal within [`ORTHO_TOL`].
pub fn mutually_orthogonal(rays: &[&FloatRay]) -> Result<bool, NumericsError> {
    for (i, a) in rays.iter().enumerate() {
        for b in &rays[i + 1..] {
            if !crate::numerics::float_orthogonal(a, b, ORTHO_TOL)? {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Largest componentwise gap between two rays after canonicalization;
/// infinite when their leading components sit in different places.
pub fn canonical_gap(u: &FloatRay, v: &FloatRay) -> f64 {
    let (cu, cv) = (u.canonicalize(), v.canonicalize());
    let gaps = cu
        .components()
        .iter()
        .zip(cv.components())
        .map(|(a, b)| (a - b).norm());
    let lead = |r: &FloatRay| r.components().iter().position(|z| z.norm() > 0.0);
    if cu.dim() != cv.dim() || lead(&cu) != lead(&cv) {
        return f64::INFINITY;
    }
    gaps.fold(0.0, f64::max)
}

/// Worst gap between each explicit ray and the rotated spin-3/2 state along its vertex.
pub fn max_rotation_oracle_gap(model: &DodecahedronModel) -> Result<f64, PenroseError> {
    let mut worst: f64 = 0.0;
    for v in VertexLabel::ALL {
        let oracle = wigner_projection_ray(model.direction(v));
        worst = worst.max(canonical_gap(&explicit_ray(model, v)?, &oracle));
    }
    Ok(worst)
}

/// Worst gap between the constructed explicit rays and the published closed
/// forms, using the corrected `I`.
pub fn max_published_gap(model: &DodecahedronModel) -> Result<f64, PenroseError> {
    let mut worst: f64 = 0.0;
    for (label, printed) in published::explicit_rays_as_printed() {
        let reference = if label == RayLabel::explicit(VertexLabel::I) {
            published::explicit_i_corrected()
        } else {
            printed
        };
        worst = worst.max(canonical_gap(&explicit_ray(model, label.vertex)?, &reference));
    }
    Ok(worst)
}
