//! Scalars for the twisted Hall algebra: the quadratic ring `Z[v]/(v² − q)`
//! with rational coefficients, for a fixed prime power q. Every coefficient
//! in the product, comultiplication and bilinear form lands here, and
//! equality is exact pair comparison.

use crate::rational::Rational;
use std::fmt;

/// a + b·v with v² = q.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct HallScalar {
    pub a: Rational,
    pub b: Rational,
    pub q: u64,
}

impl HallScalar {
    pub fn zero(q: u64) -> HallScalar {
        HallScalar {
            a: Rational::ZERO,
            b: Rational::ZERO,
            q,
        }
    }

    pub fn one(q: u64) -> HallScalar {
        HallScalar {
            a: Rational::ONE,
            b: Rational::ZERO,
            q,
        }
    }

    pub fn from_int(n: i128, q: u64) -> HallScalar {
        HallScalar {
            a: Rational::from_int(n),
            b: Rational::ZERO,
            q,
        }
    }

    pub fn from_rational(a: Rational, q: u64) -> HallScalar {
        HallScalar {
            a,
            b: Rational::ZERO,
            q,
        }
    }

    pub fn v(q: u64) -> HallScalar {
        HallScalar {
            a: Rational::ZERO,
            b: Rational::ONE,
            q,
        }
    }

    /// v^k for any integer k; v^{-1} is the exact pair (0, 1/q).
    pub fn v_pow(k: i64, q: u64) -> HallScalar {
        let half = Rational::from_int(q as i128).pow((k.div_euclid(2)) as i32);
        if k.rem_euclid(2) == 0 {
            HallScalar {
                a: half,
                b: Rational::ZERO,
                q,
            }
        } else {
            HallScalar {
                a: Rational::ZERO,
                b: half,
                q,
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn add(&self, other: &HallScalar) -> HallScalar {
        assert_eq!(self.q, other.q);
        HallScalar {
            a: self.a + other.a,
            b: self.b + other.b,
            q: self.q,
        }
    }

    pub fn neg(&self) -> HallScalar {
        HallScalar {
            a: -self.a,
            b: -self.b,
            q: self.q,
        }
    }

    pub fn sub(&self, other: &HallScalar) -> HallScalar {
        self.add(&other.neg())
    }

    /// (a + bv)(c + dv) = (ac + q·bd) + (ad + bc)v.
    pub fn mul(&self, other: &HallScalar) -> HallScalar {
        assert_eq!(self.q, other.q);
        let q = Rational::from_int(self.q as i128);
        HallScalar {
            a: self.a * other.a + q * self.b * other.b,
            b: self.a * other.b + self.b * other.a,
            q: self.q,
        }
    }
}

impl fmt::Display for HallScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        if self.a.is_zero() {
            return write!(f, "{}v", self.b);
        }
        write!(f, "{} + {}v", self.a, self.b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn v_squares_to_q() {
        for q in [2u64, 3, 4, 5] {
            let v = HallScalar::v(q);
            assert_eq!(v.mul(&v), HallScalar::from_int(q as i128, q));
        }
    }

    #[test]
    fn v_inverse_pair() {
        let q = 2;
        let v = HallScalar::v(q);
        let vinv = HallScalar::v_pow(-1, q);
        assert_eq!(
            vinv,
            HallScalar {
                a: Rational::ZERO,
                b: Rational::new(1, 2),
                q
            }
        );
        assert_eq!(v.mul(&vinv), HallScalar::one(q));
    }

    #[test]
    fn v_pow_ladder() {
        let q = 3;
        let v = HallScalar::v(q);
        let mut acc = HallScalar::one(q);
        for k in 0..6 {
            assert_eq!(acc, HallScalar::v_pow(k, q));
            acc = acc.mul(&v);
        }
        let mut acc = HallScalar::one(q);
        let vinv = HallScalar::v_pow(-1, q);
        for k in 0..6 {
            assert_eq!(acc, HallScalar::v_pow(-k, q));
            acc = acc.mul(&vinv);
        }
    }
}
