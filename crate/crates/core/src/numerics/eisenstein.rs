//! The ring of Eisenstein integers Z[ω], ω = e^{2πi/3}.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_complex::Complex64;

/// An Eisenstein integer `a + b·ω`.
///
/// The derived ordering (lexicographic on `(a, b)`) carries no algebraic
/// meaning; it only fixes a deterministic order for sorting rays.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Eisenstein {
    pub a: i64,
    pub b: i64,
}

impl Eisenstein {
    pub const ZERO: Eisenstein = Eisenstein { a: 0, b: 0 };
    pub const ONE: Eisenstein = Eisenstein { a: 1, b: 0 };
    pub const OMEGA: Eisenstein = Eisenstein { a: 0, b: 1 };
    /// ω² = −1 − ω.
    pub const OMEGA2: Eisenstein = Eisenstein { a: -1, b: -1 };
    /// i√3 = 1 + 2ω.
    pub const I_SQRT3: Eisenstein = Eisenstein { a: 1, b: 2 };

    pub const fn new(a: i64, b: i64) -> Self {
        Eisenstein { a, b }
    }

    pub const fn from_int(n: i64) -> Self {
        Eisenstein { a: n, b: 0 }
    }

    /// ω^k for any integer k.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => Self::ONE,
            1 => Self::OMEGA,
            _ => Self::OMEGA2,
        }
    }

    /// The six units ±1, ±ω, ±ω², in the order 1, ω, ω², −1, −ω, −ω².
    pub fn units() -> [Eisenstein; 6] {
        [
            Self::ONE,
            Self::OMEGA,
            Self::OMEGA2,
            -Self::ONE,
            -Self::OMEGA,
            -Self::OMEGA2,
        ]
    }

    pub fn is_zero(self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Complex conjugate: conj(a + bω) = (a − b) − bω.
    pub fn conj(self) -> Self {
        Eisenstein {
            a: self.a - self.b,
            b: -self.b,
        }
    }

    /// Field norm |z|² = a² − ab + b².
    pub fn norm(self) -> i64 {
        self.a * self.a - self.a * self.b + self.b * self.b
    }

    pub fn is_unit(self) -> bool {
        self.norm() == 1
    }

    /// For a unit, the exponent e in 0..12 with self = ζ₁₂^e (ζ₁₂ = e^{iπ/6}).
    pub fn unit_exponent12(self) -> Option<u8> {
        Self::units().iter().position(|u| *u == self).map(|i| match i {
            0 => 0,
            1 => 4,
            2 => 8,
            3 => 6,
            4 => 10,
            _ => 2,
        })
    }

    /// Twice the real part: 2·Re(a + bω) = 2a − b.
    pub fn re_doubled(self) -> i64 {
        2 * self.a - self.b
    }

    /// Imaginary part divided by √3/2, i.e. `b`.
    pub fn im_over_half_sqrt3(self) -> i64 {
        self.b
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self` in Z[ω].
    pub fn div_exact(self, d: Eisenstein) -> Option<Eisenstein> {
        let n = d.norm();
        if n == 0 {
            return None;
        }
        let num = self * d.conj();
        if num.a % n == 0 && num.b % n == 0 {
            Some(Eisenstein {
                a: num.a / n,
                b: num.b / n,
            })
        } else {
            None
        }
    }

    pub fn to_complex(self) -> Complex64 {
        let s = 3f64.sqrt() / 2.0;
        Complex64::new(self.a as f64 - 0.5 * self.b as f64, s * self.b as f64)
    }
}

impl Add for Eisenstein {
    type Output = Eisenstein;
    fn add(self, o: Eisenstein) -> Eisenstein {
        Eisenstein {
            a: self.a + o.a,
            b: self.b + o.b,
        }
    }
}

impl AddAssign for Eisenstein {
    fn add_assign(&mut self, o: Eisenstein) {
        *self = *self + o;
    }
}

impl Sub for Eisenstein {
    type Output = Eisenstein;
    fn sub(self, o: Eisenstein) -> Eisenstein {
        Eisenstein {
            a: self.a - o.a,
            b: self.b - o.b,
        }
    }
}

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Mul for Eisenstein {
    type Output = Eisenstein;
    // ω² = −1 − ω
    fn mul(self, o: Eisenstein) -> Eisenstein {
        Eisenstein {
            a: self.a * o.a - self.b * o.b,
            b: self.a * o.b + o.a * self.b - self.b * o.b,
        }
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a, self.b) {
            (a, 0) => write!(f, "{a}"),
            (0, 1) => write!(f, "w"),
            (0, -1) => write!(f, "-w"),
            (-1, -1) => write!(f, "w2"),
            (1, 1) => write!(f, "-w2"),
            (a, b) => write!(f, "({a}{b:+}w)"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn omega_is_a_primitive_cube_root() {
        let w = Eisenstein::OMEGA;
        assert_eq!(w * w, Eisenstein::OMEGA2);
        assert_eq!(w * w * w, Eisenstein::ONE);
        assert_eq!(Eisenstein::ONE + w + w * w, Eisenstein::ZERO);
    }

    #[test]
    fn conjugate_swaps_omega_powers() {
        assert_eq!(Eisenstein::OMEGA.conj(), Eisenstein::OMEGA2);
        let z = Eisenstein::new(5, -7);
        assert_eq!(z.conj().conj(), z);
        assert_eq!(z * z.conj(), Eisenstein::from_int(z.norm()));
    }

    #[test]
    fn units_are_exactly_norm_one() {
        let mut found = Vec::new();
        for a in -3..=3 {
            for b in -3..=3 {
                let z = Eisenstein::new(a, b);
                if z.is_unit() {
                    found.push(z);
                }
            }
        }
        found.sort();
        let mut units = Eisenstein::units().to_vec();
        units.sort();
        assert_eq!(found, units);
    }

    #[test]
    fn i_sqrt3_squares_to_minus_three() {
        let s = Eisenstein::I_SQRT3;
        assert_eq!(s * s, Eisenstein::from_int(-3));
        let c = s.to_complex();
        assert!(c.re.abs() < 1e-15 && (c.im - 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn exact_division() {
        let w = Eisenstein::OMEGA;
        assert_eq!(Eisenstein::OMEGA2.div_exact(-w), Some(-w));
        assert_eq!(
            Eisenstein::from_int(3).div_exact(Eisenstein::I_SQRT3),
            Some(-Eisenstein::I_SQRT3)
        );
        assert_eq!(Eisenstein::ONE.div_exact(Eisenstein::from_int(2)), None);
        assert_eq!(Eisenstein::ONE.div_exact(Eisenstein::ZERO), None);
    }

    #[test]
    fn unit_exponents_match_complex_phase() {
        for u in Eisenstein::units() {
            let e = u.unit_exponent12().unwrap();
            let z = Complex64::from_polar(1.0, e as f64 * std::f64::consts::PI / 6.0);
            assert!((z - u.to_complex()).norm() < 1e-12, "{u}");
        }
        assert_eq!(Eisenstein::new(2, 0).unit_exponent12(), None);
    }
}
