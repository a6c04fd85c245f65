//! q-arithmetic primitives: q-integers, q-shifted factorials, q-binomial
//! coefficients, the Hahn operator and the base inversion q -> 1/q.

use num::One;

use crate::mpoly::{MPoly, Monomial};
use crate::rational::Rational;

/// [n]_q = 1 + q + ... + q^(n-1); [0]_q = 0.
pub fn q_number(n: u32) -> MPoly {
    let mut p = MPoly::zero();
    for j in 0..n {
        p.add_term(Monomial::new(0, 0, j as i32), Rational::one());
    }
    p
}

/// q-shifted factorial (a; q)_n = prod_{k=0}^{n-1} (1 - a q^k).
pub fn q_pochhammer(a: &MPoly, n: u32) -> MPoly {
    let mut acc = MPoly::one();
    for k in 0..n {
        let factor = MPoly::one() - a.mul_monomial(Monomial::new(0, 0, k as i32), &Rational::one());
        acc = acc * factor;
    }
    acc
}

/// Gaussian binomial coefficient as a polynomial in q.
///
/// Outside 0 <= k <= n this returns the zero polynomial, matching the
/// summation convention where out-of-range terms vanish.
pub fn q_binomial(n: i64, k: i64) -> MPoly {
    if k < 0 || k > n || n < 0 {
        return MPoly::zero();
    }
    // Pascal recurrence [n,k] = [n-1,k-1] + q^k [n-1,k], row by row.
    let n = n as usize;
    let k = k as usize;
    let mut row: Vec<MPoly> = vec![MPoly::one()];
    for m in 1..=n {
        let mut next = Vec::with_capacity(m + 1);
        next.push(MPoly::one());
        for j in 1..m {
            let shifted = row[j].mul_monomial(Monomial::new(0, 0, j as i32), &Rational::one());
            next.push(&row[j - 1] + shifted);
        }
        next.push(MPoly::one());
        row = next;
    }
    row[k].clone()
}

/// Precomputed triangle of q-binomial coefficients up to `max_n`.
pub struct QBinomialTable {
    max_n: usize,
    rows: Vec<Vec<MPoly>>,
}

impl QBinomialTable {
    pub fn build(max_n: usize) -> Self {
        let mut rows: Vec<Vec<MPoly>> = vec![vec![MPoly::one()]];
        for m in 1..=max_n {
            let prev = &rows[m - 1];
            let mut next = Vec::with_capacity(m + 1);
            next.push(MPoly::one());
            for j in 1..m {
                let shifted =
                    prev[j].mul_monomial(Monomial::new(0, 0, j as i32), &Rational::one());
                next.push(&prev[j - 1] + shifted);
            }
            next.push(MPoly::one());
            rows.push(next);
        }
        QBinomialTable { max_n, rows }
    }

    pub fn max_n(&self) -> usize {
        self.max_n
    }

    /// Zero outside 0 <= k <= n.
    pub fn entry(&self, n: i64, k: i64) -> MPoly {
        if k < 0 || n < 0 || k > n || n as usize > self.max_n {
            return MPoly::zero();
        }
        self.rows[n as usize][k as usize].clone()
    }
}

/// Hahn operator on polynomials: D_q x^n = [n]_q x^(n-1), coefficients in s
/// and q pass through, constants map to zero. This is the unique polynomial
/// extension of the difference quotient (which is 0/0 at x = 0).
pub fn hahn_dq(p: &MPoly) -> MPoly {
    let mut out = MPoly::zero();
    for (m, c) in p.terms() {
        if m.ex == 0 {
            continue;
        }
        // [ex]_q expands the term into ex shifted copies
        for j in 0..m.ex {
            out.add_term(
                Monomial::new(m.ex - 1, m.es, m.eq + j as i32),
                c.clone(),
            );
        }
    }
    out
}

/// Substitute q -> 1/q, exactly (negates every q-exponent).
pub fn invert_base(p: &MPoly) -> MPoly {
    p.negate_q_exponents()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{binomial, rat_int};

    /// Independent route: expand (q;q)_n / ((q;q)_k (q;q)_{n-k}) as a
    /// truncated q-series and read off the polynomial coefficients.
    fn q_binomial_by_series(n: i64, k: i64) -> MPoly {
        use crate::series::TSeries;
        let deg = (k * (n - k)) as usize;
        let poch = |m: i64| -> TSeries {
            let mut acc = TSeries::one(deg);
            for j in 1..=m {
                let factor = TSeries::from_coeffs(
                    deg,
                    &std::iter::once(rat_int(1))
                        .chain(std::iter::repeat(rat_int(0)).take(j as usize - 1))
                        .chain(std::iter::once(rat_int(-1)))
                        .collect::<Vec<_>>(),
                );
                acc = acc * factor;
            }
            acc
        };
        let series = poch(n) * poch(k).inv().unwrap() * poch(n - k).inv().unwrap();
        let mut out = MPoly::zero();
        for (e, c) in series.coeffs().iter().enumerate() {
            out.add_term(crate::mpoly::Monomial::new(0, 0, e as i32), c.clone());
        }
        out
    }

    #[test]
    fn q_number_examples() {
        assert!(q_number(0).is_zero());
        assert_eq!(q_number(1), MPoly::one());
        assert_eq!(
            q_number(3),
            MPoly::one() + MPoly::q_pow(1) + MPoly::q_pow(2)
        );
    }

    #[test]
    fn q_pochhammer_examples() {
        let q = MPoly::q_pow(1);
        // (q; q)_2 = (1-q)(1-q^2)
        let expect = (MPoly::one() - &q) * (MPoly::one() - MPoly::q_pow(2));
        assert_eq!(q_pochhammer(&q, 2), expect);
        // empty product
        assert_eq!(q_pochhammer(&MPoly::var_x(), 0), MPoly::one());
        // Laurent argument
        assert_eq!(
            q_pochhammer(&MPoly::q_pow(-1), 1),
            MPoly::one() - MPoly::q_pow(-1)
        );
    }

    #[test]
    fn q_binomial_examples() {
        // [4,2]_q = 1 + q + 2q^2 + q^3 + q^4, frozen from the series oracle
        let direct = q_binomial(4, 2);
        assert_eq!(direct, q_binomial_by_series(4, 2));
        let mut expect = MPoly::one() + MPoly::q_pow(1) + MPoly::q_pow(3) + MPoly::q_pow(4);
        expect.add_term(crate::mpoly::Monomial::new(0, 0, 2), rat_int(2));
        assert_eq!(direct, expect);

        assert_eq!(q_binomial(7, 0), MPoly::one());
        assert_eq!(q_binomial(2, 1), MPoly::one() + MPoly::q_pow(1));
        assert!(q_binomial(3, -1).is_zero());
        assert!(q_binomial(3, 4).is_zero());
    }

    #[test]
    fn q_binomial_matches_series_oracle() {
        for n in 0..=8i64 {
            for k in 0..=n {
                assert_eq!(
                    q_binomial(n, k),
                    q_binomial_by_series(n, k),
                    "n={n} k={k}"
                );
            }
        }
    }

    #[test]
    fn q_binomial_structure() {
        let table = QBinomialTable::build(12);
        for n in 0..=12i64 {
            for k in 0..=n {
                let b = table.entry(n, k);
                assert_eq!(b, q_binomial(n, k));
                // symmetry and degree k(n-k)
                assert_eq!(b, table.entry(n, n - k));
                let deg = b.terms().map(|(m, _)| m.eq).max().unwrap();
                assert_eq!(deg as i64, k * (n - k));
                // positive integer coefficients
                for (_, c) in b.terms() {
                    assert!(crate::rational::is_integer(c));
                    assert!(c > &rat_int(0));
                }
                // q = 1 gives the ordinary binomial
                let at1 = b
                    .eval(&rat_int(0), &rat_int(0), &rat_int(1))
                    .unwrap();
                assert_eq!(at1, Rational::from(binomial(n, k)));
            }
        }
    }

    #[test]
    fn hahn_examples() {
        let x = MPoly::var_x();
        let s = MPoly::var_s();
        // x^3 -> (1 + q + q^2) x^2
        assert_eq!(hahn_dq(&x.pow(3)), q_number(3) * x.pow(2));
        // constants die
        assert!(hahn_dq(&MPoly::constant(rat_int(5))).is_zero());
        // x^2 + s x -> (1+q) x + s
        assert_eq!(
            hahn_dq(&(x.pow(2) + &s * &x)),
            q_number(2) * &x + s
        );
    }

    #[test]
    fn invert_base_examples() {
        // [n]_{1/q} = q^(1-n) [n]_q
        for n in 1..=20u32 {
            let lhs = invert_base(&q_number(n));
            let rhs = q_number(n).mul_monomial(
                crate::mpoly::Monomial::new(0, 0, 1 - n as i32),
                &Rational::one(),
            );
            assert_eq!(lhs, rhs, "n={n}");
        }
        // constants are fixed
        let c = MPoly::constant(rat_int(7));
        assert_eq!(invert_base(&c), c);
    }

    #[test]
    fn q_binomial_inversion_law() {
        // [n,k]_{1/q} = q^{k(k-n)} [n,k]_q
        for n in 0..=20i64 {
            for k in 0..=n {
                let lhs = invert_base(&q_binomial(n, k));
                let rhs = q_binomial(n, k).mul_monomial(
                    crate::mpoly::Monomial::new(0, 0, (k * (k - n)) as i32),
                    &Rational::one(),
                );
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn q_binomial_contiguous_identity() {
        // [n-k, k]_q = (1-q^{n-k})/(1-q^k) [n-k-1, k-1]_q, cleared of
        // denominators
        for n in 2..=20i64 {
            for k in 1..=(n / 2) {
                let lhs = (MPoly::one() - MPoly::q_pow(k as i32)) * q_binomial(n - k, k);
                let rhs =
                    (MPoly::one() - MPoly::q_pow((n - k) as i32)) * q_binomial(n - k - 1, k - 1);
                assert_eq!(lhs, rhs, "n={n} k={k}");
            }
        }
    }
}
