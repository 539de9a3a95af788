use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An exact real number `(p + q·√3) / 2`.
///
/// Realified Witting coordinates all have this form: real parts of Z[ω]
/// elements have `q = 0`, imaginary parts have `p = 0`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadraticCoord {
    pub p: i64,
    pub q: i64,
}

impl QuadraticCoord {
    pub const ZERO: QuadraticCoord = QuadraticCoord { p: 0, q: 0 };

    pub const fn new(p: i64, q: i64) -> Self {
        QuadraticCoord { p, q }
    }

    pub fn is_zero(self) -> bool {
        self.p == 0 && self.q == 0
    }

    /// Sign of the value (−1, 0 or 1), computed exactly.
    pub fn signum(self) -> i64 {
        // sign of p + q√3: compare p² and 3q² when signs differ
        let (p, q) = (self.p as i128, self.q as i128);
        match (p.signum(), q.signum()) {
            (0, s) | (s, 0) => s as i64,
            (sp, sq) if sp == sq => sp as i64,
            (sp, _) => {
                let d = p * p - 3 * q * q;
                (d.signum() * sp) as i64
            }
        }
    }

    /// Product of two coordinates as `(P, Q)` with value `(P + Q·√3) / 4`.
    pub fn mul_quarters(self, o: QuadraticCoord) -> (i64, i64) {
        (self.p * o.p + 3 * self.q * o.q, self.p * o.q + self.q * o.p)
    }

    pub fn scale(self, k: i64) -> QuadraticCoord {
        QuadraticCoord::new(self.p * k, self.q * k)
    }

    pub fn to_f64(self) -> f64 {
        (self.p as f64 + self.q as f64 * 3f64.sqrt()) / 2.0
    }
}

impl Add for QuadraticCoord {
    type Output = QuadraticCoord;
    fn add(self, o: QuadraticCoord) -> QuadraticCoord {
        QuadraticCoord::new(self.p + o.p, self.q + o.q)
    }
}

impl Sub for QuadraticCoord {
    type Output = QuadraticCoord;
    fn sub(self, o: QuadraticCoord) -> QuadraticCoord {
        QuadraticCoord::new(self.p - o.p, self.q - o.q)
    }
}

impl Neg for QuadraticCoord {
    type Output = QuadraticCoord;
    fn neg(self) -> QuadraticCoord {
        QuadraticCoord::new(-self.p, -self.q)
    }
}

impl fmt::Display for QuadraticCoord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}{:+}r3)/2", self.p, self.q)
    }
}
