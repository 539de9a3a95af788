//! Exact scalar rings and projective-vector primitives.

mod complex;
mod eisenstein;
mod half;
mod quadratic;
mod ray;
mod witting_scalar;

pub use complex::{ensure_finite, omega, tau, ComplexFloat};
pub use eisenstein::Eisenstein;
pub use half::HalfInteger;
pub use quadratic::QuadraticCoord;
pub use ray::{
    complex_inner_float, eis_inner, float_orthogonal, proj_equal_exact, proj_equal_float, ExactRay, FloatRay,
    FLOAT_ZERO,
};
pub use witting_scalar::WittingScalar;

use thiserror::Error;

/// Orthogonality threshold for unit-normalized float rays.
pub const ORTHO_TOL: f64 = 1e-9;
/// Threshold for unitarity checks.
pub const UNITARY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericsError {
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("ray has no nonzero component")]
    ZeroRay,
    #[error("leading component does not divide the other components")]
    NonUnitLeading,
    #[error("non-finite component")]
    NonFinite,
}

/// Real part of the Hermitian product of two Witting vectors, which equals the
/// dot product of their realifications in R^{2n}.
pub fn realified_inner(u: &[WittingScalar], v: &[WittingScalar]) -> Result<HalfInteger, NumericsError> {
    if u.len() != v.len() {
        return Err(NumericsError::DimensionMismatch {
            left: u.len(),
            right: v.len(),
        });
    }
    let h = u
        .iter()
        .zip(v)
        .fold(WittingScalar::ZERO, |acc, (a, b)| acc + a.conj() * *b);
    Ok(h.realified_re())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn wv(parts: &[(i64, i64)]) -> Vec<WittingScalar> {
        parts
            .iter()
            .map(|&(a, b)| WittingScalar::from_eisenstein(Eisenstein::new(a, b)))
            .collect()
    }

    #[test]
    fn realified_inner_examples() {
        let s = vec![
            WittingScalar::i_sqrt3(Eisenstein::ONE),
            WittingScalar::ZERO,
            WittingScalar::ZERO,
            WittingScalar::ZERO,
        ];
        assert_eq!(realified_inner(&s, &s).unwrap(), HalfInteger::from_int(3));
        let u = wv(&[(0, 0), (1, 0), (-1, 0), (1, 0)]);
        let v = wv(&[(1, 0), (0, 0), (-1, 0), (-1, 0)]);
        assert_eq!(realified_inner(&u, &v).unwrap(), HalfInteger::ZERO);
        let w = wv(&[(0, 0), (0, 1), (0, -1), (0, 1)]);
        assert_eq!(realified_inner(&u, &w).unwrap(), HalfInteger::from_doubled(-3));
        assert!(realified_inner(&u, &u[..3]).is_err());
    }
}
