//! Sparse multivariate polynomials in x, s and q, with signed q-exponents.
//!
//! The q slot is Laurent: base inversion q -> 1/q stays inside the type,
//! which is what the coefficient inversion laws need. Terms live in a
//! `BTreeMap` keyed by [`Monomial`], whose derived ordering (lexicographic
//! on `(ex, es, eq)`) doubles as the canonical serialization order.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{self, Rational};
use crate::{Error, Result};

/// Exponent triple `x^ex * s^es * q^eq`; `eq` may be negative.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Monomial {
    pub ex: u32,
    pub es: u32,
    pub eq: i32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { ex: 0, es: 0, eq: 0 };

    pub fn new(ex: u32, es: u32, eq: i32) -> Self {
        Monomial { ex, es, eq }
    }
}

/// One serialized term; rationals travel as decimal strings.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct TermRecord {
    pub ex: u32,
    pub es: u32,
    pub eq: i32,
    pub num: String,
    pub den: String,
}

/// Sparse polynomial over exact rationals. Zero coefficients are never stored,
/// so structural equality is semantic equality.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct MPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl MPoly {
    pub fn zero() -> Self {
        MPoly::default()
    }

    pub fn one() -> Self {
        MPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(Monomial::ONE, c);
        p
    }

    pub fn var_x() -> Self {
        MPoly::from_monomial(Monomial::new(1, 0, 0), Rational::one())
    }

    pub fn var_s() -> Self {
        MPoly::from_monomial(Monomial::new(0, 1, 0), Rational::one())
    }

    /// `q^e`, any sign.
    pub fn q_pow(e: i32) -> Self {
        MPoly::from_monomial(Monomial::new(0, 0, e), Rational::one())
    }

    /// `c * x^ex s^es q^eq`.
    pub fn from_monomial(m: Monomial, c: Rational) -> Self {
        let mut p = MPoly::zero();
        p.add_term(m, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Add `c * m` in place, dropping the entry if it cancels.
    pub fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m).or_insert_with(Rational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn scale(&self, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (*m, v * c))
                .collect(),
        }
    }

    /// Multiply by a single monomial; `eq` shifts may go negative.
    pub fn mul_monomial(&self, dm: Monomial, c: &Rational) -> MPoly {
        if c.is_zero() {
            return MPoly::zero();
        }
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| {
                    (
                        Monomial::new(m.ex + dm.ex, m.es + dm.es, m.eq + dm.eq),
                        v * c,
                    )
                })
                .collect(),
        }
    }

    pub fn pow(&self, e: u32) -> MPoly {
        let mut acc = MPoly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Exact substitution. `q = 0` is rejected when any term carries a
    /// negative q-exponent.
    pub fn eval(&self, x: &Rational, s: &Rational, q: &Rational) -> Result<Rational> {
        if q.is_zero() && self.terms.keys().any(|m| m.eq < 0) {
            return Err(Error::ZeroBase);
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            t *= rational::rat_pow(x, m.ex as i64);
            t *= rational::rat_pow(s, m.es as i64);
            t *= rational::rat_pow(q, m.eq as i64);
            acc += t;
        }
        Ok(acc)
    }

    /// Floating-point substitution, used only on the quadrature side.
    pub fn eval_f64(&self, x: f64, s: f64, q: f64) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                rational::to_f64(c)
                    * x.powi(m.ex as i32)
                    * s.powi(m.es as i32)
                    * q.powi(m.eq)
            })
            .sum()
    }

    /// Substitute a rational value for q, leaving a polynomial in x and s.
    pub fn subst_q(&self, q: &Rational) -> Result<MPoly> {
        if q.is_zero() && self.terms.keys().any(|m| m.eq < 0) {
            return Err(Error::ZeroBase);
        }
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            out.add_term(
                Monomial::new(m.ex, m.es, 0),
                c * rational::rat_pow(q, m.eq as i64),
            );
        }
        Ok(out)
    }

    /// The substitution q -> 1/q: negate every q-exponent.
    pub fn negate_q_exponents(&self) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial::new(m.ex, m.es, -m.eq), c.clone()))
                .collect(),
        }
    }

    /// Ordinary d/dx, exact.
    pub fn deriv_x(&self) -> MPoly {
        let mut out = MPoly::zero();
        for (m, c) in &self.terms {
            if m.ex > 0 {
                out.add_term(
                    Monomial::new(m.ex - 1, m.es, m.eq),
                    c * rational::rat_int(m.ex as i64),
                );
            }
        }
        out
    }

    pub fn x_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.ex).max()
    }

    pub fn s_degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.es).max()
    }

    /// Coefficient of `x^ex s^es` as a Laurent polynomial in q.
    pub fn coeff_xs(&self, ex: u32, es: u32) -> MPoly {
        MPoly {
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.ex == ex && m.es == es)
                .map(|(m, c)| (Monomial::new(0, 0, m.eq), c.clone()))
                .collect(),
        }
    }

    /// Constant-coefficient view of a q-free, s-free polynomial in x.
    pub fn coeff_x(&self, ex: u32) -> Rational {
        self.terms
            .iter()
            .filter(|(m, _)| m.ex == ex && m.es == 0 && m.eq == 0)
            .map(|(_, c)| c.clone())
            .sum()
    }

    /// Canonical serialized form: terms in (ex, es, eq) order.
    pub fn to_records(&self) -> Vec<TermRecord> {
        self.terms
            .iter()
            .map(|(m, c)| TermRecord {
                ex: m.ex,
                es: m.es,
                eq: m.eq,
                num: c.numer().to_string(),
                den: c.denom().to_string(),
            })
            .collect()
    }

    pub fn from_records(records: &[TermRecord]) -> Result<MPoly> {
        let mut p = MPoly::zero();
        for r in records {
            let num = r
                .num
                .parse()
                .map_err(|e| Error::Domain(format!("bad numerator {:?}: {e}", r.num)))?;
            let den = r
                .den
                .parse()
                .map_err(|e| Error::Domain(format!("bad denominator {:?}: {e}", r.den)))?;
            if num::BigInt::is_zero(&den) {
                return Err(Error::Domain("zero denominator".into()));
            }
            p.add_term(Monomial::new(r.ex, r.es, r.eq), Rational::new(num, den));
        }
        Ok(p)
    }

    /// LaTeX rendering of the polynomial, terms in canonical order.
    pub fn to_latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mut piece = String::new();
            let abs = c.abs();
            let coeff_one = abs.is_one() && *m != Monomial::ONE;
            if !coeff_one {
                if rational::is_integer(&abs) {
                    piece.push_str(&abs.numer().to_string());
                } else {
                    piece.push_str(&format!(
                        "\\frac{{{}}}{{{}}}",
                        abs.numer(),
                        abs.denom()
                    ));
                }
            }
            for (sym, e) in [("q", m.eq as i64), ("s", m.es as i64), ("x", m.ex as i64)] {
                if e == 1 {
                    piece.push_str(sym);
                } else if e != 0 {
                    piece.push_str(&format!("{sym}^{{{e}}}"));
                }
            }
            if i == 0 {
                if c.is_negative() {
                    out.push('-');
                }
            } else if c.is_negative() {
                out.push_str(" - ");
            } else {
                out.push_str(" + ");
            }
            out.push_str(&piece);
        }
        out
    }
}

impl fmt::Debug for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in &self.terms {
            let abs = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let mut piece = String::new();
            if !(abs.is_one() && *m != Monomial::ONE) {
                piece.push_str(&rational::display(&abs));
            }
            for (sym, e) in [("q", m.eq as i64), ("s", m.es as i64), ("x", m.ex as i64)] {
                if e == 1 {
                    if !piece.is_empty() {
                        piece.push('*');
                    }
                    piece.push_str(sym);
                } else if e != 0 {
                    if !piece.is_empty() {
                        piece.push('*');
                    }
                    piece.push_str(&format!("{sym}^{e}"));
                }
            }
            write!(f, "{piece}")?;
        }
        Ok(())
    }
}

impl Serialize for MPoly {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_records().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for MPoly {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let records = Vec::<TermRecord>::deserialize(deserializer)?;
        MPoly::from_records(&records).map_err(serde::de::Error::custom)
    }
}

impl Add for &MPoly {
    type Output = MPoly;
    fn add(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MPoly {
    type Output = MPoly;
    fn sub(self, rhs: &MPoly) -> MPoly {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c.clone());
        }
        out
    }
}

impl Neg for &MPoly {
    type Output = MPoly;
    fn neg(self) -> MPoly {
        MPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Mul for &MPoly {
    type Output = MPoly;
    fn mul(self, rhs: &MPoly) -> MPoly {
        let mut out = MPoly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                out.add_term(
                    Monomial::new(ma.ex + mb.ex, ma.es + mb.es, ma.eq + mb.eq),
                    ca * cb,
                );
            }
        }
        out
    }
}

macro_rules! forward_owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait<MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&MPoly> for MPoly {
            type Output = MPoly;
            fn $method(self, rhs: &MPoly) -> MPoly {
                (&self).$method(rhs)
            }
        }
        impl $trait<MPoly> for &MPoly {
            type Output = MPoly;
            fn $method(self, rhs: MPoly) -> MPoly {
                self.$method(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);
