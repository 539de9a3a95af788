//! Projective rays: nonzero vectors up to a nonzero scalar.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;

use super::{complex::ensure_finite, Eisenstein, NumericsError};

/// Threshold below which a float component counts as zero (on a unit-normalized ray).
pub const FLOAT_ZERO: f64 = 1e-9;

/// A ray with exact Z[ω] components.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ExactRay(Vec<Eisenstein>);

impl ExactRay {
    pub fn new(components: Vec<Eisenstein>) -> Result<Self, NumericsError> {
        if components.iter().all(|c| c.is_zero()) {
            return Err(NumericsError::ZeroRay);
        }
        Ok(ExactRay(components))
    }

    pub fn components(&self) -> &[Eisenstein] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn leading(&self) -> (usize, Eisenstein) {
        self.0
            .iter()
            .copied()
            .enumerate()
            .find(|(_, c)| !c.is_zero())
            .expect("rays are nonzero")
    }

    pub fn is_canonical(&self) -> bool {
        self.leading().1 == Eisenstein::ONE
    }

    /// Rescale so the leading nonzero component is exactly 1.
    pub fn canonicalize(&self) -> Result<ExactRay, NumericsError> {
        let (_, lead) = self.leading();
        let comps = self
            .0
            .iter()
            .map(|c| c.div_exact(lead).ok_or(NumericsError::NonUnitLeading))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(ExactRay(comps))
    }

    pub fn scale(&self, k: Eisenstein) -> Result<ExactRay, NumericsError> {
        ExactRay::new(self.0.iter().map(|c| *c * k).collect())
    }

    pub fn to_float(&self) -> FloatRay {
        FloatRay(self.0.iter().map(|c| c.to_complex()).collect())
    }
}

impl PartialOrd for ExactRay {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExactRay {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.cmp(&other.0)
    }
}

impl fmt::Display for ExactRay {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

/// Hermitian inner product Σ conj(uᵢ)·vᵢ over Z[ω].
pub fn eis_inner(u: &ExactRay, v: &ExactRay) -> Result<Eisenstein, NumericsError> {
    check_dims(u.dim(), v.dim())?;
    Ok(u.0
        .iter()
        .zip(&v.0)
        .fold(Eisenstein::ZERO, |acc, (a, b)| acc + a.conj() * *b))
}

/// Exact projective equality: uᵢvⱼ = uⱼvᵢ for all i, j.
pub fn proj_equal_exact(u: &ExactRay, v: &ExactRay) -> Result<bool, NumericsError> {
    check_dims(u.dim(), v.dim())?;
    let n = u.dim();
    Ok((0..n).all(|i| (i + 1..n).all(|j| u.0[i] * v.0[j] == u.0[j] * v.0[i])))
}

/// A ray with double-precision complex components.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatRay(Vec<Complex64>);

impl FloatRay {
    pub fn new(components: Vec<Complex64>) -> Result<Self, NumericsError> {
        for c in &components {
            ensure_finite(*c)?;
        }
        if components.iter().all(|c| c.norm() == 0.0) {
            return Err(NumericsError::ZeroRay);
        }
        Ok(FloatRay(components))
    }

    pub fn from_real(components: &[f64]) -> Result<Self, NumericsError> {
        FloatRay::new(components.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    pub fn components(&self) -> &[Complex64] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn norm(&self) -> f64 {
        self.0.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> FloatRay {
        let n = self.norm();
        FloatRay(self.0.iter().map(|c| c / n).collect())
    }

    /// Rescale so the leading component is 1. Components of modulus below
    /// [`FLOAT_ZERO`] (relative to the norm) are set to exactly zero.
    pub fn canonicalize(&self) -> FloatRay {
        let unit = self.normalized();
        let comps: Vec<Complex64> = unit
            .0
            .iter()
            .map(|c| {
                if c.norm() < FLOAT_ZERO {
                    Complex64::new(0.0, 0.0)
                } else {
                    *c
                }
            })
            .collect();
        let lead = *comps
            .iter()
            .find(|c| c.norm() != 0.0)
            .expect("normalized ray has a component of modulus ≥ 1/√dim");
        FloatRay(comps.iter().map(|c| c / lead).collect())
    }

    /// Apply a square complex matrix (row-major) to the column vector.
    pub fn transform(&self, m: &[Vec<Complex64>]) -> Result<FloatRay, NumericsError> {
        check_dims(m.len(), self.dim())?;
        FloatRay::new(
            m.iter()
                .map(|row| row.iter().zip(&self.0).map(|(a, b)| a * b).sum())
                .collect(),
        )
    }

    /// Sort key: real and imaginary parts rounded to 12 decimals.
    pub fn sort_key(&self) -> Vec<(i64, i64)> {
        let r = |x: f64| (x * 1e12).round() as i64;
        self.canonicalize().0.iter().map(|c| (r(c.re), r(c.im))).collect()
    }
}

/// Σ conj(uᵢ)·vᵢ in double precision.
pub fn complex_inner_float(u: &FloatRay, v: &FloatRay) -> Result<Complex64, NumericsError> {
    check_dims(u.dim(), v.dim())?;
    ensure_finite(u.0.iter().zip(&v.0).map(|(a, b)| a.conj() * b).sum())
}

/// |⟨u, v⟩| / (|u|·|v|) < tol
pub fn float_orthogonal(u: &FloatRay, v: &FloatRay, tol: f64) -> Result<bool, NumericsError> {
    Ok(complex_inner_float(u, v)?.norm() / (u.norm() * v.norm()) < tol)
}

/// Projective equality of float rays: canonical forms agree componentwise within `tol`.
pub fn proj_equal_float(u: &FloatRay, v: &FloatRay, tol: f64) -> Result<bool, NumericsError> {
    check_dims(u.dim(), v.dim())?;
    let (cu, cv) = (u.canonicalize(), v.canonicalize());
    Ok(cu.0.iter().zip(&cv.0).all(|(a, b)| (a - b).norm() < tol))
}

fn check_dims(left: usize, right: usize) -> Result<(), NumericsError> {
    if left == right {
        Ok(())
    } else {
        Err(NumericsError::DimensionMismatch { left, right })
    }
}
