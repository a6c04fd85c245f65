//! Truncated formal power series in t with exact rational coefficients.
//!
//! Everything is truncated at a fixed order N; arithmetic never looks past
//! t^N, so expansions of rational generating functions are exact at every
//! retained order.

use std::ops::{Add, Mul, Sub};

use num::{One, Zero};

use crate::rational::Rational;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TSeries {
    coeffs: Vec<Rational>,
}

impl TSeries {
    /// The zero series truncated at order `n`.
    pub fn zero(n: usize) -> Self {
        TSeries {
            coeffs: vec![Rational::zero(); n + 1],
        }
    }

    pub fn one(n: usize) -> Self {
        let mut s = TSeries::zero(n);
        s.coeffs[0] = Rational::one();
        s
    }

    /// Build from low-order coefficients; missing entries are zero, extra
    /// entries beyond order `n` are truncated away.
    pub fn from_coeffs(n: usize, coeffs: &[Rational]) -> Self {
        let mut s = TSeries::zero(n);
        for (i, c) in coeffs.iter().enumerate().take(n + 1) {
            s.coeffs[i] = c.clone();
        }
        s
    }

    /// `c * t^k`.
    pub fn monomial(n: usize, k: usize, c: Rational) -> Self {
        let mut s = TSeries::zero(n);
        if k <= n {
            s.coeffs[k] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn scale(&self, c: &Rational) -> TSeries {
        TSeries {
            coeffs: self.coeffs.iter().map(|v| v * c).collect(),
        }
    }

    /// Multiply by `t^k` (shift up, dropping overflow).
    pub fn shift(&self, k: usize) -> TSeries {
        let n = self.order();
        let mut out = TSeries::zero(n);
        for i in 0..=n {
            if i >= k {
                out.coeffs[i] = self.coeffs[i - k].clone();
            }
        }
        out
    }

    /// Multiplicative inverse: v with u*v = 1 + O(t^{N+1}).
    /// Requires a nonzero constant term.
    pub fn inv(&self) -> Result<TSeries> {
        if self.coeffs[0].is_zero() {
            return Err(Error::NotAUnit);
        }
        let n = self.order();
        let c0 = self.coeffs[0].recip();
        let mut out = TSeries::zero(n);
        out.coeffs[0] = c0.clone();
        for k in 1..=n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out.coeffs[k - j];
            }
            out.coeffs[k] = -acc * &c0;
        }
        Ok(out)
    }
}

impl Add for &TSeries {
    type Output = TSeries;
    fn add(self, rhs: &TSeries) -> TSeries {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &TSeries {
    type Output = TSeries;
    fn sub(self, rhs: &TSeries) -> TSeries {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        TSeries {
            coeffs: self
                .coeffs
                .iter()
                .zip(&rhs.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

impl Mul for &TSeries {
    type Output = TSeries;
    fn mul(self, rhs: &TSeries) -> TSeries {
        assert_eq!(self.order(), rhs.order(), "series order mismatch");
        let n = self.order();
        let mut out = TSeries::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=(n - i) {
                let prod = &self.coeffs[i] * &rhs.coeffs[j];
                out.coeffs[i + j] += prod;
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<TSeries> for TSeries {
            type Output = TSeries;
            fn $method(self, rhs: TSeries) -> TSeries {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&TSeries> for TSeries {
            type Output = TSeries;
            fn $method(self, rhs: &TSeries) -> TSeries {
                (&self).$method(rhs)
            }
        }
        impl $trait<TSeries> for &TSeries {
            type Output = TSeries;
            fn $method(self, rhs: TSeries) -> TSeries {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat_int;

    #[test]
    fn geometric_inverse() {
        // 1 - t -> 1 + t + t^2 + t^3
        let u = TSeries::from_coeffs(3, &[rat_int(1), rat_int(-1)]);
        let v = u.inv().unwrap();
        assert_eq!(
            v.coeffs(),
            &[rat_int(1), rat_int(1), rat_int(1), rat_int(1)]
        );
    }

    #[test]
    fn unit_inverse() {
        let u = TSeries::one(5);
        assert_eq!(u.inv().unwrap(), u);
    }

    #[test]
    fn fibonacci_inverse() {
        // 1/(1 - t - t^2) carries the Fibonacci numbers
        let u = TSeries::from_coeffs(6, &[rat_int(1), rat_int(-1), rat_int(-1)]);
        let v = u.inv().unwrap();
        let expect: Vec<_> = [1, 1, 2, 3, 5, 8, 13].iter().map(|&k| rat_int(k)).collect();
        assert_eq!(v.coeffs(), expect.as_slice());
    }

    #[test]
    fn non_unit_rejected() {
        let u = TSeries::monomial(4, 1, rat_int(1));
        assert!(matches!(u.inv(), Err(Error::NotAUnit)));
    }

    #[test]
    fn inverse_is_two_sided_at_every_order() {
        let u = TSeries::from_coeffs(8, &[rat_int(2), rat_int(3), rat_int(-1), rat_int(5)]);
        let v = u.inv().unwrap();
        assert_eq!(&u * &v, TSeries::one(8));
        assert_eq!(&v * &u, TSeries::one(8));
    }
}
