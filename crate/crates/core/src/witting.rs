//! Witting polytope vertices, their rays in CP³, the real representative
//! (Gosset 4₂₁, the E8 roots) with its 120 rays in RP⁷, and the 148-ray
//! family containing eight copies of the Penrose system.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::numerics::{
    realified_inner, Eisenstein, ExactRay, HalfInteger, NumericsError, QuadraticCoord, WittingScalar,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WittingError {
    #[error("subsystem line must be in 1..=8, got {0}")]
    BadLine(usize),
    #[error(transparent)]
    Numerics(#[from] NumericsError),
}

/// A vertex of the Witting polytope in C⁴.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WittingVertex {
    pub components: [WittingScalar; 4],
}

impl WittingVertex {
    pub fn to_exact_ray(&self) -> ExactRay {
        ExactRay::new(self.components.iter().map(|c| c.to_eisenstein()).collect())
            .expect("vertices are nonzero")
    }

    pub fn negate(&self) -> WittingVertex {
        WittingVertex {
            components: self.components.map(|c| -c),
        }
    }

    pub fn realified_inner(&self, other: &WittingVertex) -> HalfInteger {
        realified_inner(&self.components, &other.components).expect("both have four components")
    }

    pub fn realify(&self) -> GossetVertex {
        let mut coords = [QuadraticCoord::ZERO; 8];
        for (k, c) in self.components.iter().enumerate() {
            let (re, im) = c.realify();
            coords[2 * k] = re;
            coords[2 * k + 1] = im;
        }
        GossetVertex { coords }
    }
}

/// One of the five coordinate patterns: four "unit" blocks with a zero in
/// a fixed slot, and the `±i√3·ω^λ` block.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VertexBlock {
    Units(usize),
    Sqrt3,
}

/// Sign pattern of the unit blocks (upper choice of ±/∓), zero slot first.
const UNIT_BLOCKS: [(usize, [i64; 3]); 4] = [
    (0, [1, -1, 1]),
    (1, [-1, 1, 1]),
    (2, [1, -1, 1]),
    (3, [-1, -1, -1]),
];

/// The 54 vertices of a unit block: 27 choices of (μ, ν, λ) times an overall sign.
pub fn unit_block(block: usize) -> Vec<WittingVertex> {
    let (zero, signs) = UNIT_BLOCKS[block];
    let mut out = Vec::with_capacity(54);
    for overall in [1i64, -1] {
        for mu in 0..3 {
            for nu in 0..3 {
                for lambda in 0..3 {
                    let exps = [mu, nu, lambda];
                    let mut comps = [WittingScalar::ZERO; 4];
                    let slots = (0..4).filter(|&s| s != zero);
                    for (n, slot) in slots.enumerate() {
                        let value = Eisenstein::from_int(overall * signs[n]) * Eisenstein::omega_pow(exps[n]);
                        comps[slot] = WittingScalar::from_eisenstein(value);
                    }
                    out.push(WittingVertex { components: comps });
                }
            }
        }
    }
    out
}

/// The 24 vertices `±i√3·ω^λ·e_k`.
pub fn sqrt3_block() -> Vec<WittingVertex> {
    let mut out = Vec::with_capacity(24);
    for slot in 0..4 {
        for lambda in 0..3 {
            for sign in [1i64, -1] {
                let mut comps = [WittingScalar::ZERO; 4];
                comps[slot] =
                    WittingScalar::i_sqrt3(Eisenstein::from_int(sign) * Eisenstein::omega_pow(lambda));
                out.push(WittingVertex { components: comps });
            }
        }
    }
    out
}

/// All 240 vertices, sorted.
pub fn generate_witting_vertices() -> Vec<WittingVertex> {
    let mut out: Vec<WittingVertex> = (0..4).flat_map(unit_block).chain(sqrt3_block()).collect();
    out.sort();
    out
}

/// A ray of CP³ with the indices of the vertices that map onto it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CollapsedRay {
    pub ray: ExactRay,
    pub fiber: Vec<usize>,
}

/// Identify vertices differing by a scalar; rays sorted lexicographically.
pub fn collapse_to_rays(vertices: &[WittingVertex]) -> Result<Vec<CollapsedRay>, NumericsError> {
    let mut fibers: BTreeMap<ExactRay, Vec<usize>> = BTreeMap::new();
    for (i, v) in vertices.iter().enumerate() {
        fibers
            .entry(v.to_exact_ray().canonicalize()?)
            .or_default()
            .push(i);
    }
    Ok(fibers
        .into_iter()
        .map(|(ray, fiber)| CollapsedRay { ray, fiber })
        .collect())
}

/// A vertex of the real 8-dimensional representative, coordinates
/// (Re z₁, Im z₁, …, Re z₄, Im z₄).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GossetVertex {
    pub coords: [QuadraticCoord; 8],
}

impl GossetVertex {
    /// Exact dot product. Real parts carry no √3 and imaginary parts are pure
    /// multiples of √3, so the result is rational (and in fact a half-integer).
    pub fn dot(&self, o: &GossetVertex) -> HalfInteger {
        let (mut p, mut q) = (0i64, 0i64);
        for (a, b) in self.coords.iter().zip(&o.coords) {
            let (dp, dq) = a.mul_quarters(*b);
            p += dp;
            q += dq;
        }
        assert!(
            q == 0 && p % 2 == 0,
            "realified coordinates have a half-integer dot product"
        );
        HalfInteger::from_doubled(p / 2)
    }

    pub fn squared_length(&self) -> HalfInteger {
        self.dot(self)
    }

    pub fn negate(&self) -> GossetVertex {
        GossetVertex {
            coords: self.coords.map(|c| -c),
        }
    }

    /// Reflection of `self` in the hyperplane orthogonal to `root`:
    /// self − (2·⟨self, root⟩/⟨root, root⟩)·root.
    pub fn reflect(&self, root: &GossetVertex) -> Option<GossetVertex> {
        let num = 2 * self.dot(root).doubled();
        let den = root.squared_length().doubled();
        if num % den != 0 {
            return None;
        }
        let k = num / den;
        let mut coords = self.coords;
        for (c, r) in coords.iter_mut().zip(&root.coords) {
            *c = *c - r.scale(k);
        }
        Some(GossetVertex { coords })
    }

    pub fn to_f64(&self) -> [f64; 8] {
        self.coords.map(|c| c.to_f64())
    }
}

pub fn realify(vertices: &[WittingVertex]) -> Vec<GossetVertex> {
    vertices.iter().map(WittingVertex::realify).collect()
}

/// A ray of RP⁷: the pair {v, −v}, represented by the member whose first
/// nonzero realified coordinate is positive.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RealRay8 {
    pub preimage: WittingVertex,
}

impl RealRay8 {
    pub fn from_vertex(v: WittingVertex) -> RealRay8 {
        let lead = v
            .realify()
            .coords
            .iter()
            .map(|c| c.signum())
            .find(|&s| s != 0)
            .expect("vertices are nonzero");
        RealRay8 {
            preimage: if lead > 0 { v } else { v.negate() },
        }
    }

    pub fn is_orthogonal(&self, other: &RealRay8) -> bool {
        self.preimage.realified_inner(&other.preimage).is_zero()
    }

    pub fn realified(&self) -> GossetVertex {
        self.preimage.realify()
    }
}

/// The 120 rays of the E8 root system, sorted.
pub fn e8_rays() -> Vec<RealRay8> {
    let mut rays: Vec<RealRay8> = generate_witting_vertices()
        .into_iter()
        .map(RealRay8::from_vertex)
        .collect();
    rays.sort();
    rays.dedup();
    rays
}

/// Index into the four 36-ray families of the extension system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F148Index {
    pub family: u8,
    pub i: u8,
    pub j: u8,
    pub k: u8,
    pub l: u8,
}

impl F148Index {
    pub fn new(family: u8, i: u8, j: u8, k: u8, l: u8) -> Self {
        assert!((1..=4).contains(&family) && i < 2 && j < 2 && k < 3 && l < 3);
        F148Index { family, i, j, k, l }
    }

    pub fn all() -> impl Iterator<Item = F148Index> {
        (1..=4).flat_map(|f| {
            (0..2).flat_map(move |i| {
                (0..2).flat_map(move |j| {
                    (0..3).flat_map(move |k| (0..3).map(move |l| F148Index::new(f, i, j, k, l)))
                })
            })
        })
    }

    /// The family ray: the zero moves from slot 0 (family 1) to slot 3
    /// (family 4), the other slots hold 1, (−1)^i·ω^k, (−1)^j·ω^l in order.
    pub fn ray(&self) -> ExactRay {
        let sign = |s: u8| Eisenstein::from_int(if s == 0 { 1 } else { -1 });
        let x = sign(self.i) * Eisenstein::omega_pow(self.k as i64);
        let y = sign(self.j) * Eisenstein::omega_pow(self.l as i64);
        let (o, z) = (Eisenstein::ONE, Eisenstein::ZERO);
        let comps = match self.family {
            1 => vec![z, o, x, y],
            2 => vec![o, z, x, y],
            3 => vec![o, x, z, y],
            _ => vec![o, x, y, z],
        };
        ExactRay::new(comps).unwrap()
    }
}

impl fmt::Display for F148Index {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "F{}({},{},{},{})", self.family, self.i, self.j, self.k, self.l)
    }
}

/// A labeled exact ray.
pub type LabeledRay = (String, ExactRay);

fn coordinate_rays() -> Vec<LabeledRay> {
    (0..4)
        .map(|k| {
            let mut comps = vec![Eisenstein::ZERO; 4];
            comps[k] = Eisenstein::ONE;
            (format!("e{}", k + 1), ExactRay::new(comps).unwrap())
        })
        .collect()
}

fn sorted(mut rays: Vec<LabeledRay>) -> Vec<LabeledRay> {
    rays.sort_by(|a, b| a.1.cmp(&b.1));
    rays
}

/// The 148 rays: 4 coordinate rays and 4×36 family rays, sorted.
pub fn f148_system() -> Vec<LabeledRay> {
    let mut rays = coordinate_rays();
    rays.extend(F148Index::all().map(|ix| (ix.to_string(), ix.ray())));
    sorted(rays)
}

/// (i, j) sign choice for families 1–4 on each of the eight subsystem lines.
pub const SUBSYSTEM_LINES: [[(u8, u8); 4]; 8] = [
    [(0, 0), (0, 1), (1, 0), (0, 1)],
    [(0, 0), (1, 0), (0, 1), (1, 0)],
    [(0, 1), (0, 0), (1, 1), (0, 1)],
    [(0, 1), (1, 1), (0, 0), (1, 0)],
    [(1, 0), (0, 0), (0, 1), (1, 1)],
    [(1, 0), (1, 1), (1, 0), (0, 0)],
    [(1, 1), (0, 1), (0, 0), (1, 1)],
    [(1, 1), (1, 0), (1, 1), (0, 0)],
];

/// Coordinate rays plus the 36 family rays selected by `line` (1-based),
/// with the ω exponents ranging over 0..3.
pub fn f148_subsystem(line: usize) -> Result<Vec<LabeledRay>, WittingError> {
    if !(1..=8).contains(&line) {
        return Err(WittingError::BadLine(line));
    }
    let mut rays = coordinate_rays();
    for (f, &(i, j)) in SUBSYSTEM_LINES[line - 1].iter().enumerate() {
        for k in 0..3 {
            for l in 0..3 {
                let ix = F148Index::new(f as u8 + 1, i, j, k, l);
                rays.push((ix.to_string(), ix.ray()));
            }
        }
    }
    Ok(sorted(rays))
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::{BTreeSet, HashSet};

    fn exact(parts: &[(i64, i64)]) -> ExactRay {
        ExactRay::new(parts.iter().map(|&(a, b)| Eisenstein::new(a, b)).collect()).unwrap()
    }

    fn ws(parts: [(i64, i64); 4]) -> WittingVertex {
        WittingVertex {
            components: parts.map(|(a, b)| WittingScalar::from_eisenstein(Eisenstein::new(a, b))),
        }
    }

    #[test]
    fn vertex_counts() {
        let v = generate_witting_vertices();
        assert_eq!(v.len(), 240);
        assert_eq!(v.iter().collect::<HashSet<_>>().len(), 240);
        for b in 0..4 {
            assert_eq!(unit_block(b).iter().collect::<HashSet<_>>().len(), 54);
        }
        assert!(v.contains(&ws([(0, 0), (1, 0), (-1, 0), (1, 0)])));
        let s = WittingVertex {
            components: [
                WittingScalar::i_sqrt3(Eisenstein::ONE),
                WittingScalar::ZERO,
                WittingScalar::ZERO,
                WittingScalar::ZERO,
            ],
        };
        assert!(v.contains(&s));
        for x in &v {
            assert_eq!(x.realified_inner(x), HalfInteger::from_int(3));
        }
    }

    #[test]
    fn collapse_counts() {
        let v = generate_witting_vertices();
        let rays = collapse_to_rays(&v).unwrap();
        assert_eq!(rays.len(), 40);
        assert!(rays.iter().all(|r| r.fiber.len() == 6));
        assert_eq!(collapse_to_rays(&unit_block(0)).unwrap().len(), 9);
        assert_eq!(collapse_to_rays(&sqrt3_block()).unwrap().len(), 4);
    }

    #[test]
    fn collapse_of_a_single_vertex() {
        // [−ω, 0, ω², 1] / (−ω) = [1, 0, −ω, −ω²]
        let v = ws([(0, -1), (0, 0), (-1, -1), (1, 0)]);
        let r = v.to_exact_ray().canonicalize().unwrap();
        assert_eq!(r, exact(&[(1, 0), (0, 0), (0, -1), (1, 1)]));
    }

    #[test]
    fn gosset_vertices() {
        let g = realify(&generate_witting_vertices());
        let set: HashSet<GossetVertex> = g.iter().copied().collect();
        assert_eq!(set.len(), 240);
        for x in &g {
            assert_eq!(x.squared_length(), HalfInteger::from_int(3));
            assert!(set.contains(&x.negate()));
        }
        let s = WittingVertex {
            components: [
                WittingScalar::i_sqrt3(Eisenstein::ONE),
                WittingScalar::ZERO,
                WittingScalar::ZERO,
                WittingScalar::ZERO,
            ],
        }
        .realify();
        let mut expect = [QuadraticCoord::ZERO; 8];
        expect[1] = QuadraticCoord::new(0, 2);
        assert_eq!(s.coords, expect);
    }

    #[test]
    fn real_dot_matches_realified_inner() {
        let v = generate_witting_vertices();
        for a in v.iter().step_by(7) {
            for b in v.iter().step_by(5) {
                assert_eq!(a.realify().dot(&b.realify()), a.realified_inner(b));
            }
        }
    }

    #[test]
    fn e8_ray_classes() {
        let rays = e8_rays();
        assert_eq!(rays.len(), 120);
        let v = generate_witting_vertices();
        let mut dots = BTreeSet::new();
        for a in &v {
            for b in &v {
                dots.insert(a.realified_inner(b).doubled());
            }
        }
        assert_eq!(dots, [-6, -3, 0, 3, 6].into_iter().collect());
        let sqrt3_rays: HashSet<RealRay8> = sqrt3_block().into_iter().map(RealRay8::from_vertex).collect();
        assert_eq!(sqrt3_rays.len(), 12);
        for r in &rays {
            assert_eq!(RealRay8::from_vertex(r.preimage.negate()), *r);
        }
    }

    #[test]
    fn family_rays() {
        assert_eq!(
            F148Index::new(1, 0, 0, 0, 0).ray(),
            exact(&[(0, 0), (1, 0), (1, 0), (1, 0)])
        );
        // F₄(1,0,2,1) = [1, −ω², ω, 0]
        assert_eq!(
            F148Index::new(4, 1, 0, 2, 1).ray(),
            exact(&[(1, 0), (1, 1), (0, 1), (0, 0)])
        );
        let sys = f148_system();
        assert_eq!(sys.len(), 148);
        let distinct: HashSet<&ExactRay> = sys.iter().map(|(_, r)| r).collect();
        assert_eq!(distinct.len(), 148);
        assert!(sys.iter().all(|(_, r)| r.is_canonical()));
    }

    #[test]
    fn subsystems() {
        assert_eq!(f148_subsystem(0), Err(WittingError::BadLine(0)));
        assert_eq!(f148_subsystem(9), Err(WittingError::BadLine(9)));
        let all: HashSet<ExactRay> = f148_system().into_iter().map(|(_, r)| r).collect();
        let mut union = HashSet::new();
        for line in 1..=8 {
            let s = f148_subsystem(line).unwrap();
            assert_eq!(s.len(), 40);
            union.extend(s.into_iter().map(|(_, r)| r));
        }
        assert_eq!(union, all);
        let line1: HashSet<ExactRay> = f148_subsystem(1).unwrap().into_iter().map(|(_, r)| r).collect();
        for k in 0..3 {
            for l in 0..3 {
                assert!(line1.contains(&F148Index::new(1, 0, 0, k, l).ray()));
            }
        }
    }
}
