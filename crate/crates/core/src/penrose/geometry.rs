//! Dodecahedron vertex labels and directions.

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use super::PenroseError;

/// One of the twenty dodecahedron vertices, lettered A–U with O omitted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexLabel {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
    H,
    I,
    J,
    K,
    L,
    M,
    N,
    P,
    Q,
    R,
    S,
    T,
    U,
}

impl VertexLabel {
    pub const ALL: [VertexLabel; 20] = [
        VertexLabel::A,
        VertexLabel::B,
        VertexLabel::C,
        VertexLabel::D,
        VertexLabel::E,
        VertexLabel::F,
        VertexLabel::G,
        VertexLabel::H,
        VertexLabel::I,
        VertexLabel::J,
        VertexLabel::K,
        VertexLabel::L,
        VertexLabel::M,
        VertexLabel::N,
        VertexLabel::P,
        VertexLabel::Q,
        VertexLabel::R,
        VertexLabel::S,
        VertexLabel::T,
        VertexLabel::U,
    ];

    pub fn letter(self) -> char {
        format!("{self:?}").chars().next().unwrap()
    }

    pub fn from_letter(c: char) -> Option<VertexLabel> {
        VertexLabel::ALL.into_iter().find(|v| v.letter() == c)
    }
}

impl fmt::Display for VertexLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A Penrose ray label: unprimed for the explicit ray of a vertex, primed
/// for its implicit ray.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RayLabel {
    pub vertex: VertexLabel,
    pub primed: bool,
}

impl RayLabel {
    pub const fn explicit(vertex: VertexLabel) -> Self {
        RayLabel {
            vertex,
            primed: false,
        }
    }

    pub const fn implicit(vertex: VertexLabel) -> Self {
        RayLabel { vertex, primed: true }
    }

    pub fn all() -> impl Iterator<Item = RayLabel> {
        [false, true].into_iter().flat_map(|p| {
            VertexLabel::ALL
                .into_iter()
                .map(move |v| RayLabel { vertex: v, primed: p })
        })
    }
}

impl fmt::Display for RayLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.vertex, if self.primed { "'" } else { "" })
    }
}

impl FromStr for RayLabel {
    type Err = PenroseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || PenroseError::BadLabel(s.to_string());
        let mut chars = s.chars();
        let vertex = chars.next().and_then(VertexLabel::from_letter).ok_or_else(bad)?;
        match chars.as_str() {
            "" => Ok(RayLabel::explicit(vertex)),
            "'" | "′" => Ok(RayLabel::implicit(vertex)),
            _ => Err(bad()),
        }
    }
}

/// Polar angle θ ∈ [0, π] and azimuth φ ∈ [0, 2π).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SphericalDirection {
    pub theta: f64,
    pub phi: f64,
}

impl SphericalDirection {
    pub fn new(theta: f64, phi: f64) -> Self {
        let mut phi = phi.rem_euclid(2.0 * PI);
        if (2.0 * PI - phi).abs() < 1e-15 {
            phi = 0.0;
        }
        SphericalDirection { theta, phi }
    }

    pub fn unit_vector(self) -> [f64; 3] {
        let (st, ct) = self.theta.sin_cos();
        let (sp, cp) = self.phi.sin_cos();
        [st * cp, st * sp, ct]
    }

    pub fn angle_to(self, other: SphericalDirection) -> f64 {
        let (a, b) = (self.unit_vector(), other.unit_vector());
        let dot: f64 = a.iter().zip(&b).map(|(x, y)| x * y).sum();
        dot.clamp(-1.0, 1.0).acos()
    }
}

/// Vertex directions of a regular dodecahedron with vertex A on the z-axis
/// and F in the xz half-plane (positive x).
#[derive(Clone, Debug)]
pub struct DodecahedronModel {
    pub directions: BTreeMap<VertexLabel, SphericalDirection>,
    pub theta0: f64,
    pub theta1: f64,
    pub phi1: f64,
    pub phi2: f64,
}

pub fn build_dodecahedron() -> DodecahedronModel {
    use VertexLabel::*;
    let theta0 = (2.0f64 / 3.0).asin();
    let theta1 = (2.0 * 2f64.sqrt() / 3.0).asin();
    let phi1 = (3.0f64 / 8.0).sqrt().asin();
    let phi2 = (3f64.sqrt() * (1.0 + 5f64.sqrt()) / 8.0).asin();
    let (t0, t1, p1, p2) = (theta0, theta1, phi1, phi2);
    let third = 2.0 * PI / 3.0;
    let sixth = PI / 3.0;
    // The label of each lower-hemisphere direction is fixed by the adjacency
    // the basis table requires (e.g. E and S antipodal, N real-valued).
    let table = [
        (A, 0.0, 0.0),
        (F, t0, 0.0),
        (B, t0, third),
        (E, t0, 2.0 * third),
        (L, t1, p1),
        (G, t1, p1 + p2),
        (C, t1, p1 + third),
        (D, t1, p1 + p2 + third),
        (J, t1, p1 + 2.0 * third),
        (K, t1, p1 + p2 + 2.0 * third),
        (I, PI - t1, p1 + PI),
        (P, PI - t1, p1 + p2 + PI),
        (Q, PI - t1, p1 + 5.0 * sixth),
        (R, PI - t1, p1 + p2 + 5.0 * sixth),
        (M, PI - t1, p1 + sixth),
        (H, PI - t1, p1 + p2 + sixth),
        (N, PI - t0, PI),
        (U, PI - t0, 5.0 * sixth),
        (S, PI - t0, sixth),
        (T, PI, 0.0),
    ];
    DodecahedronModel {
        directions: table
            .iter()
            .map(|&(v, th, ph)| (v, SphericalDirection::new(th, ph)))
            .collect(),
        theta0,
        theta1,
        phi1,
        phi2,
    }
}

impl DodecahedronModel {
    pub fn direction(&self, v: VertexLabel) -> SphericalDirection {
        self.directions[&v]
    }

    fn by_distance(&self, v: VertexLabel) -> Vec<(f64, VertexLabel)> {
        let d = self.direction(v);
        let mut out: Vec<(f64, VertexLabel)> = self
            .directions
            .iter()
            .filter(|(u, _)| **u != v)
            .map(|(u, du)| (d.angle_to(*du), *u))
            .collect();
        out.sort_by(|a, b| a.0.total_cmp(&b.0).then(a.1.cmp(&b.1)));
        out
    }

    /// The three nearest vertices, sorted by label.
    pub fn neighbors(&self, v: VertexLabel) -> [VertexLabel; 3] {
        let near = self.by_distance(v);
        let mut out = [near[0].1, near[1].1, near[2].1];
        out.sort();
        out
    }

    /// The farthest vertex.
    pub fn antipode(&self, v: VertexLabel) -> VertexLabel {
        self.by_distance(v).last().unwrap().1
    }

    /// Angular distance between adjacent vertices, arccos(√5/3).
    pub fn edge_angle() -> f64 {
        (5f64.sqrt() / 3.0).acos()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use VertexLabel::*;

    #[test]
    fn angle_definitions() {
        let m = build_dodecahedron();
        assert!((m.theta0.sin() - 2.0 / 3.0).abs() < 1e-12);
        assert!((m.theta1.sin() - 2.0 * 2f64.sqrt() / 3.0).abs() < 1e-12);
        assert!((m.phi1.sin() - (3.0f64 / 8.0).sqrt()).abs() < 1e-12);
        assert!((m.phi2.sin() - 3f64.sqrt() * (1.0 + 5f64.sqrt()) / 8.0).abs() < 1e-12);
        // dodecahedral symmetry pins φ₂ = 2π/3 − 2φ₁
        assert!((m.phi2 - (2.0 * PI / 3.0 - 2.0 * m.phi1)).abs() < 1e-12);
    }

    #[test]
    fn listed_directions() {
        let m = build_dodecahedron();
        assert_eq!(m.direction(A), SphericalDirection::new(0.0, 0.0));
        assert_eq!(m.direction(T), SphericalDirection::new(PI, 0.0));
        let f = m.direction(F);
        assert!((f.theta - m.theta0).abs() < 1e-15 && f.phi == 0.0);
        for d in m.directions.values() {
            assert!((0.0..=PI).contains(&d.theta) && (0.0..2.0 * PI).contains(&d.phi));
        }
    }

    #[test]
    fn neighbor_structure() {
        let m = build_dodecahedron();
        assert_eq!(m.neighbors(A), [B, E, F]);
        assert_eq!(m.neighbors(T), [N, S, U]);
        let edge = DodecahedronModel::edge_angle();
        for v in VertexLabel::ALL {
            let near = m.by_distance(v);
            for (d, _) in &near[..3] {
                assert!((d - edge).abs() < 1e-9, "{v}");
            }
            assert!(near[3].0 - edge > 0.1);
            for n in m.neighbors(v) {
                assert!(m.neighbors(n).contains(&v));
            }
        }
    }

    #[test]
    fn antipodes() {
        let m = build_dodecahedron();
        assert_eq!(m.antipode(A), T);
        assert_eq!(m.antipode(E), S);
        assert_eq!(m.antipode(F), N);
        for v in VertexLabel::ALL {
            let a = m.antipode(v);
            assert_eq!(m.antipode(a), v);
            let (dv, da) = (m.direction(v), m.direction(a));
            assert!((da.theta - (PI - dv.theta)).abs() < 1e-9);
            if dv.theta > 1e-9 && dv.theta < PI - 1e-9 {
                let dphi = (da.phi - (dv.phi + PI)).rem_euclid(2.0 * PI);
                assert!(dphi < 1e-9 || 2.0 * PI - dphi < 1e-9, "{v}");
            }
        }
    }

    #[test]
    fn labels_parse_and_print() {
        let l: RayLabel = "A'".parse().unwrap();
        assert_eq!(l, RayLabel::implicit(A));
        assert_eq!(l.to_string(), "A'");
        assert_eq!("Q".parse::<RayLabel>().unwrap(), RayLabel::explicit(Q));
        assert!("O".parse::<RayLabel>().is_err());
        assert!("A''".parse::<RayLabel>().is_err());
        assert_eq!(RayLabel::all().count(), 40);
    }
}
