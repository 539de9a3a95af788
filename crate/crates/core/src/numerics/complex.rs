use num_complex::Complex64;

use super::NumericsError;

/// Double-precision complex scalar used by the geometric construction.
pub type ComplexFloat = Complex64;

/// The golden ratio (1 + √5)/2.
pub fn tau() -> f64 {
    (1.0 + 5f64.sqrt()) / 2.0
}

/// e^{2πi/3}
pub fn omega() -> Complex64 {
    Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0)
}

pub fn ensure_finite(z: Complex64) -> Result<Complex64, NumericsError> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(NumericsError::NonFinite)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golden_ratio_identity() {
        let t = tau();
        assert!((t * t - t - 1.0).abs() < 1e-12);
    }

    #[test]
    fn omega_cubes_to_one() {
        let w = omega();
        assert!((w * w * w - 1.0).norm() < 1e-12);
        assert!(ensure_finite(Complex64::new(f64::NAN, 0.0)).is_err());
    }
}
