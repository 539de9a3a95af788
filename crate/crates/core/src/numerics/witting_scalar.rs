use std::ops::{Add, Mul, Neg, Sub};

use super::{Eisenstein, HalfInteger, QuadraticCoord};

/// A scalar `x + i√3·y` with `x, y` in Z[ω]; the coordinate ring of the
/// Witting polytope vertices.
///
/// Since i√3 = 1 + 2ω this is a sub-ring of Z[ω] itself, but the split
/// form keeps the two vertex families (unit components and `±i√3·ω^λ`
/// components) visibly distinct.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WittingScalar {
    pub x: Eisenstein,
    pub y: Eisenstein,
}

impl WittingScalar {
    pub const ZERO: WittingScalar = WittingScalar {
        x: Eisenstein::ZERO,
        y: Eisenstein::ZERO,
    };

    pub const fn new(x: Eisenstein, y: Eisenstein) -> Self {
        WittingScalar { x, y }
    }

    pub const fn from_eisenstein(x: Eisenstein) -> Self {
        WittingScalar {
            x,
            y: Eisenstein::ZERO,
        }
    }

    /// `i√3·y`
    pub const fn i_sqrt3(y: Eisenstein) -> Self {
        WittingScalar {
            x: Eisenstein::ZERO,
            y,
        }
    }

    pub fn is_zero(self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    /// conj(x + i√3·y) = conj(x) − i√3·conj(y)
    pub fn conj(self) -> Self {
        WittingScalar {
            x: self.x.conj(),
            y: -self.y.conj(),
        }
    }

    pub fn to_eisenstein(self) -> Eisenstein {
        self.x + Eisenstein::I_SQRT3 * self.y
    }

    /// Real part Re(x) − √3·Im(y), a half-integer.
    pub fn realified_re(self) -> HalfInteger {
        HalfInteger::from_doubled(self.x.re_doubled() - 3 * self.y.im_over_half_sqrt3())
    }

    /// Real and imaginary parts as exact `(p + q√3)/2` coordinates.
    pub fn realify(self) -> (QuadraticCoord, QuadraticCoord) {
        let re = QuadraticCoord::new(self.realified_re().doubled(), 0);
        // Im(x) + √3·Re(y) = √3·(b_x + 2a_y − b_y)/2
        let im = QuadraticCoord::new(0, self.x.b + self.y.re_doubled());
        (re, im)
    }
}

impl Add for WittingScalar {
    type Output = WittingScalar;
    fn add(self, o: WittingScalar) -> WittingScalar {
        WittingScalar::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for WittingScalar {
    type Output = WittingScalar;
    fn sub(self, o: WittingScalar) -> WittingScalar {
        WittingScalar::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for WittingScalar {
    type Output = WittingScalar;
    fn neg(self) -> WittingScalar {
        WittingScalar::new(-self.x, -self.y)
    }
}

impl Mul for WittingScalar {
    type Output = WittingScalar;
    // (i√3)² = −3
    fn mul(self, o: WittingScalar) -> WittingScalar {
        WittingScalar::new(
            self.x * o.x - Eisenstein::from_int(3) * self.y * o.y,
            self.x * o.y + self.y * o.x,
        )
    }
}
