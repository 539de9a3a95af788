//! Spin-3/2 states from Majorana stars, and the rotation-matrix oracle.

use num_complex::Complex64;

use super::geometry::SphericalDirection;
use crate::numerics::{FloatRay, NumericsError};

/// A point of the Riemann sphere as a homogeneous pair `(a : b)`, α = a/b.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct MajoranaPoint {
    pub a: Complex64,
    pub b: Complex64,
}

impl MajoranaPoint {
    pub fn new(a: Complex64, b: Complex64) -> Result<Self, NumericsError> {
        if a.norm() == 0.0 && b.norm() == 0.0 {
            return Err(NumericsError::ZeroRay);
        }
        Ok(MajoranaPoint { a, b })
    }

    pub fn finite(alpha: Complex64) -> Self {
        MajoranaPoint {
            a: alpha,
            b: Complex64::new(1.0, 0.0),
        }
    }

    pub fn infinity() -> Self {
        MajoranaPoint {
            a: Complex64::new(1.0, 0.0),
            b: Complex64::new(0.0, 0.0),
        }
    }

    pub fn is_infinite(&self) -> bool {
        self.b.norm() == 0.0
    }

    /// α = a/b, or `None` at infinity.
    pub fn alpha(&self) -> Option<Complex64> {
        (!self.is_infinite()).then(|| self.a / self.b)
    }
}

/// Stereographic projection from the south pole: α = tan(θ/2)·e^{iφ}.
pub fn stereographic(d: SphericalDirection) -> MajoranaPoint {
    if d.theta >= std::f64::consts::PI - 1e-15 {
        return MajoranaPoint::infinity();
    }
    let (s, c) = (d.theta / 2.0).sin_cos();
    MajoranaPoint {
        a: Complex64::from_polar(s, d.phi),
        b: Complex64::new(c, 0.0),
    }
}

/// Spin-3/2 state with Majorana points `p`, as components on |+3/2⟩ … |−3/2⟩:
/// `[e₀, e₁/√3, e₂/√3, e₃]` with eₖ the homogeneous elementary symmetric polynomials.
pub fn majorana_ray(p: [MajoranaPoint; 3]) -> Result<FloatRay, NumericsError> {
    let [(a1, b1), (a2, b2), (a3, b3)] = p.map(|q| (q.a, q.b));
    let e0 = b1 * b2 * b3;
    let e1 = a1 * b2 * b3 + b1 * a2 * b3 + b1 * b2 * a3;
    let e2 = a1 * a2 * b3 + a1 * b2 * a3 + b1 * a2 * a3;
    let e3 = a1 * a2 * a3;
    let r3 = 3f64.sqrt();
    Ok(FloatRay::new(vec![e0, e1 / r3, e2 / r3, e3])?.normalized())
}

fn factorial(n: i32) -> f64 {
    (1..=n).map(f64::from).product()
}

/// Wigner small-d element d^j_{m'm}(β) with all of j, m', m given doubled.
fn wigner_d(j2: i32, mp2: i32, m2: i32, beta: f64) -> f64 {
    let jpm = (j2 + m2) / 2;
    let jmm = (j2 - m2) / 2;
    let jpmp = (j2 + mp2) / 2;
    let jmmp = (j2 - mp2) / 2;
    let dm = (mp2 - m2) / 2;
    let pre = (factorial(jpmp) * factorial(jmmp) * factorial(jpm) * factorial(jmm)).sqrt();
    let (s, c) = (beta / 2.0).sin_cos();
    let mut sum = 0.0;
    for k in 0..=(j2 + 1) {
        let (d1, d2, d3) = (jpm - k, dm + k, jmmp - k);
        if d1 < 0 || d2 < 0 || d3 < 0 {
            continue;
        }
        let sign = if (dm + k) % 2 == 0 { 1.0 } else { -1.0 };
        sum += sign * c.powi(j2 + (m2 - mp2) / 2 - 2 * k) * s.powi(dm + 2 * k)
            / (factorial(d1) * factorial(k) * factorial(d2) * factorial(d3));
    }
    pre * sum
}

/// |3/2, +1/2⟩ rotated by R(φ, θ, 0) = e^{−iφJz}·e^{−iθJy}.
pub fn wigner_projection_ray(d: SphericalDirection) -> FloatRay {
    let comps = [3, 1, -1, -3]
        .into_iter()
        .map(|mp2| {
            let phase = Complex64::from_polar(1.0, -(mp2 as f64) / 2.0 * d.phi);
            phase * wigner_d(3, mp2, 1, d.theta)
        })
        .collect();
    FloatRay::new(comps).expect("rotation of a unit vector is finite and nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{proj_equal_float, tau};
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn stereographic_poles() {
        let n = stereographic(SphericalDirection::new(0.0, 1.3));
        assert_eq!(n.alpha(), Some(c(0.0)));
        assert!(stereographic(SphericalDirection::new(PI, 0.0)).is_infinite());
        let t0 = (2.0f64 / 3.0).asin();
        let a = stereographic(SphericalDirection::new(t0, 0.0)).alpha().unwrap();
        assert!((a - c(1.0 / (tau() * tau()))).norm() < 1e-12);
        assert!((a.re - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-12);
    }

    #[test]
    fn majorana_pole_states() {
        let z = MajoranaPoint::finite(c(0.0));
        let inf = MajoranaPoint::infinity();
        let a = majorana_ray([z, z, inf]).unwrap();
        assert!(proj_equal_float(&a, &FloatRay::from_real(&[0.0, 1.0, 0.0, 0.0]).unwrap(), 1e-15).unwrap());
        let t = majorana_ray([inf, inf, z]).unwrap();
        assert!(proj_equal_float(&t, &FloatRay::from_real(&[0.0, 0.0, 1.0, 0.0]).unwrap(), 1e-15).unwrap());
        assert!(MajoranaPoint::new(c(0.0), c(0.0)).is_err());
    }

    #[test]
    fn majorana_f_ray() {
        let t = tau();
        let p = [
            MajoranaPoint::finite(c(1.0 / (t * t))),
            MajoranaPoint::finite(c(1.0 / (t * t))),
            MajoranaPoint::finite(c(-t * t)),
        ];
        let r3 = 3f64.sqrt();
        let f = FloatRay::from_real(&[t / 3.0, -1.0 / r3, -1.0 / r3, -1.0 / (3.0 * t)]).unwrap();
        assert!(proj_equal_float(&majorana_ray(p).unwrap(), &f, 1e-9).unwrap());
    }

    #[test]
    fn majorana_is_symmetric_in_its_points() {
        let pts = [
            MajoranaPoint::finite(Complex64::new(0.3, -1.1)),
            MajoranaPoint::infinity(),
            MajoranaPoint::finite(Complex64::new(-2.0, 0.4)),
        ];
        let base = majorana_ray(pts).unwrap();
        for perm in [[0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let r = majorana_ray(perm.map(|i| pts[i])).unwrap();
            assert!(proj_equal_float(&base, &r, 1e-12).unwrap());
        }
    }

    #[test]
    fn wigner_oracle_poles() {
        let up = wigner_projection_ray(SphericalDirection::new(0.0, 0.0));
        assert!(proj_equal_float(&up, &FloatRay::from_real(&[0.0, 1.0, 0.0, 0.0]).unwrap(), 1e-15).unwrap());
        let down = wigner_projection_ray(SphericalDirection::new(PI, 0.0));
        assert!(
            proj_equal_float(&down, &FloatRay::from_real(&[0.0, 0.0, 1.0, 0.0]).unwrap(), 1e-12).unwrap()
        );
        // rotation preserves the norm
        let r = wigner_projection_ray(SphericalDirection::new(1.1, 2.3));
        assert!((r.norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn wigner_matches_majorana_for_generic_directions() {
        for (th, ph) in [(0.4, 0.0), (1.3, 2.2), (2.9, 5.0), (PI / 2.0, PI)] {
            let d = SphericalDirection::new(th, ph);
            let anti = SphericalDirection::new(PI - th, ph + PI);
            let m = majorana_ray([stereographic(d), stereographic(d), stereographic(anti)]).unwrap();
            assert!(proj_equal_float(&m, &wigner_projection_ray(d), 1e-9).unwrap());
        }
    }
}
