//! Exact gamma values at integer and half-integer arguments.
//!
//! A value is stored as `coeff * (sqrt(pi))^sqrtpi_pow` with a pole marker
//! for non-positive integer arguments. Integer arguments give plain
//! factorials (sqrtpi_pow = 0); half-integer arguments always carry a single
//! sqrt(pi) factor. Ratios of such values are assembled in [`GammaProduct`],
//! where sqrt(pi) powers accumulate and cancel symbolically, so expressions
//! like Gauss's second summation right-hand side reduce to exact rationals.

use num::{One, Zero};

use crate::rational::{rat, rat_int, rat_pow, Rational};

/// Gamma at an integer or half-integer point.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HalfGamma {
    pub is_pole: bool,
    pub coeff: Rational,
    pub sqrtpi_pow: u8,
}

impl HalfGamma {
    fn pole() -> Self {
        HalfGamma {
            is_pole: true,
            coeff: Rational::zero(),
            sqrtpi_pow: 0,
        }
    }
}

/// Exact Gamma(z) for z = twice_z / 2.
pub fn gamma_half(twice_z: i64) -> HalfGamma {
    if twice_z % 2 == 0 {
        let z = twice_z / 2;
        if z <= 0 {
            return HalfGamma::pole();
        }
        let mut coeff = Rational::one();
        for j in 1..z {
            coeff *= rat_int(j);
        }
        HalfGamma {
            is_pole: false,
            coeff,
            sqrtpi_pow: 0,
        }
    } else {
        // z = m + 1/2; walk Gamma(z+1) = z Gamma(z) from Gamma(1/2) = sqrt(pi)
        let m = (twice_z - 1).div_euclid(2);
        let mut coeff = Rational::one();
        if m >= 0 {
            for j in 0..m {
                coeff *= rat(2 * j + 1, 2);
            }
        } else {
            for j in m..0 {
                coeff /= rat(2 * j + 1, 2);
            }
        }
        HalfGamma {
            is_pole: false,
            coeff,
            sqrtpi_pow: 1,
        }
    }
}

/// Running product of gamma values and rational factors.
///
/// A pole in a numerator factor is a hard error (never needed here); a pole
/// in a denominator factor annihilates the whole product, which is exactly
/// the odd-index vanishing mechanism of the summation theorem.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GammaProduct {
    pub is_zero: bool,
    pub coeff: Rational,
    pub sqrtpi_pow: i64,
}

impl GammaProduct {
    pub fn one() -> Self {
        GammaProduct {
            is_zero: false,
            coeff: Rational::one(),
            sqrtpi_pow: 0,
        }
    }

    pub fn times_gamma(mut self, g: &HalfGamma) -> Self {
        assert!(!g.is_pole, "gamma pole in a numerator factor");
        if !self.is_zero {
            self.coeff *= &g.coeff;
            self.sqrtpi_pow += g.sqrtpi_pow as i64;
        }
        self
    }

    pub fn div_gamma(mut self, g: &HalfGamma) -> Self {
        if g.is_pole {
            self.is_zero = true;
            self.coeff = Rational::zero();
            self.sqrtpi_pow = 0;
            return self;
        }
        if !self.is_zero {
            self.coeff /= &g.coeff;
            self.sqrtpi_pow -= g.sqrtpi_pow as i64;
        }
        self
    }

    pub fn times_rational(mut self, r: &Rational) -> Self {
        if !self.is_zero {
            self.coeff *= r;
        }
        self
    }

    /// Collapse to a plain rational; only valid once all sqrt(pi) factors
    /// have cancelled.
    pub fn as_rational(&self) -> Rational {
        assert!(
            self.is_zero || self.sqrtpi_pow == 0,
            "uncancelled sqrt(pi) power {}",
            self.sqrtpi_pow
        );
        self.coeff.clone()
    }
}

/// Both sides of the duplication identity at z = twice_z / 2, as
/// (coefficient, sqrt(pi) power) pairs: Gamma(2z) * sqrt(pi) on the left,
/// 2^(2z-1) * Gamma(z) * Gamma(z + 1/2) on the right.
pub fn duplication_sides(twice_z: i64) -> (GammaProduct, GammaProduct) {
    let lhs = {
        let g = gamma_half(2 * twice_z);
        let mut p = GammaProduct::one().times_gamma(&g);
        p.sqrtpi_pow += 1;
        p
    };
    let rhs = GammaProduct::one()
        .times_rational(&rat_pow(&rat_int(2), twice_z - 1))
        .times_gamma(&gamma_half(twice_z))
        .times_gamma(&gamma_half(twice_z + 1));
    (lhs, rhs)
}

/// Gamma(m + 1/2) * Gamma(1/2 - m), which collapses to (-1)^m * pi.
pub fn reflection_pair(m: i64) -> GammaProduct {
    GammaProduct::one()
        .times_gamma(&gamma_half(2 * m + 1))
        .times_gamma(&gamma_half(1 - 2 * m))
}
