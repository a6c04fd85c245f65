//! Exact verification of the hypergeometric machinery: terminating 2F1
//! evaluation, the two Chebyshev transformation formulas, Gauss's second
//! summation theorem, ODE eigen-relations and all generating-function
//! identities including the q-cases and the Heine-limit cross-check.
//!
//! Everything here is exact; a failing identity carries its first
//! counterexample in the report.

use num::{One, Zero};

use crate::families::{self, FamilyKind};
use crate::gamma::{gamma_half, GammaProduct};
use crate::mpoly::MPoly;
use crate::rational::{self, rat, rat_int, rat_pow, Rational};
use crate::report::IdentityReport;
use crate::series::TSeries;
use crate::{Error, Result};

/// Rising factorial (a)_k over exact rationals.
pub fn pochhammer(a: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for j in 0..k {
        acc *= a + rat_int(j as i64);
    }
    acc
}

/// One terminating 2F1 instance; `a` must be a non-positive integer.
#[derive(Clone, Debug)]
pub struct Hyper2F1Case {
    pub a: Rational,
    pub b: Rational,
    pub c: Rational,
    pub z: Rational,
}

/// Exact finite sum sum_{k=0}^{m} (a)_k (b)_k / ((c)_k k!) z^k with a = -m.
pub fn hyper2f1_terminating(case: &Hyper2F1Case) -> Result<Rational> {
    if !rational::is_nonpositive_integer(&case.a) {
        return Err(Error::Domain(format!(
            "upper parameter {} does not terminate the series",
            rational::display(&case.a)
        )));
    }
    let m = -num::ToPrimitive::to_i64(case.a.numer()).unwrap() as u32;
    // (c)_k must stay nonzero across the range
    for k in 0..m {
        if (&case.c + rat_int(k as i64)).is_zero() {
            return Err(Error::PoleInRange);
        }
    }
    let mut acc = Rational::zero();
    let mut term = Rational::one();
    for k in 0..=m {
        acc += &term;
        if k < m {
            let kk = rat_int(k as i64);
            term = term * (&case.a + &kk) * (&case.b + &kk)
                / ((&case.c + &kk) * (kk + rat_int(1)))
                * &case.z;
        }
    }
    Ok(acc)
}

fn poly_report(id: &str, range: &str, params: &str, lhs: &MPoly, rhs: &MPoly) -> IdentityReport {
    if lhs == rhs {
        IdentityReport::pass(id, range)
    } else {
        IdentityReport::fail(id, range, params, lhs.to_string(), rhs.to_string())
    }
}

/// Expand `(n+1) 2F1(-n, n+2; 3/2 | (1-z)/2)` and `(2z)^n 2F1(-n/2, (1-n)/2;
/// -n | 1/z^2)` as exact polynomials in z and compare; both must also equal
/// the degree-n second-kind Chebyshev polynomial.
pub fn verify_transform_210(n: u32) -> IdentityReport {
    let id = "transform-2.10";
    let range = format!("n={n}");
    let z = MPoly::var_x();
    let half_one_minus_z = MPoly::constant(rat(1, 2)) - z.scale(&rat(1, 2));
    let mut lhs = MPoly::zero();
    for k in 0..=n {
        let c = pochhammer(&rat_int(-(n as i64)), k)
            * pochhammer(&rat_int(n as i64 + 2), k)
            / (pochhammer(&rat(3, 2), k) * Rational::from(rational::factorial(k as u64)));
        lhs = lhs + half_one_minus_z.pow(k).scale(&c);
    }
    lhs = lhs.scale(&rat_int(n as i64 + 1));

    let mut rhs = MPoly::zero();
    for m in 0..=(n / 2) {
        let c = pochhammer(&rat(-(n as i64), 2), m)
            * pochhammer(&rat(1 - n as i64, 2), m)
            / (pochhammer(&rat_int(-(n as i64)), m)
                * Rational::from(rational::factorial(m as u64)))
            * rat_pow(&rat_int(2), n as i64);
        rhs.add_term(crate::mpoly::Monomial::new(n - 2 * m, 0, 0), c);
    }

    let cheb = families::classical_explicit(FamilyKind::ChebU, n);
    if lhs != cheb {
        return IdentityReport::fail(id, range, format!("n={n}"), lhs.to_string(), cheb.to_string());
    }
    poly_report(id, &range, &format!("n={n}"), &lhs, &rhs)
}

/// Same strategy for the first-kind identity `2F1(-n, n; 1/2 | (1-z)/2) =
/// 2^(n-1) z^n 2F1(-n/2, (1-n)/2; 1-n | 1/z^2)`, n >= 1.
pub fn verify_transform_221(n: u32) -> IdentityReport {
    assert!(n >= 1, "identity is stated for n >= 1");
    let id = "transform-2.21";
    let range = format!("n={n}");
    let z = MPoly::var_x();
    let half_one_minus_z = MPoly::constant(rat(1, 2)) - z.scale(&rat(1, 2));
    let mut lhs = MPoly::zero();
    for k in 0..=n {
        let c = pochhammer(&rat_int(-(n as i64)), k) * pochhammer(&rat_int(n as i64), k)
            / (pochhammer(&rat(1, 2), k) * Rational::from(rational::factorial(k as u64)));
        lhs = lhs + half_one_minus_z.pow(k).scale(&c);
    }

    let mut rhs = MPoly::zero();
    for m in 0..=(n / 2) {
        let c = pochhammer(&rat(-(n as i64), 2), m)
            * pochhammer(&rat(1 - n as i64, 2), m)
            / (pochhammer(&rat_int(1 - n as i64), m)
                * Rational::from(rational::factorial(m as u64)))
            * rat_pow(&rat_int(2), n as i64 - 1);
        rhs.add_term(crate::mpoly::Monomial::new(n - 2 * m, 0, 0), c);
    }

    let cheb = families::classical_explicit(FamilyKind::ChebT, n);
    if lhs != cheb {
        return IdentityReport::fail(id, range, format!("n={n}"), lhs.to_string(), cheb.to_string());
    }
    poly_report(id, &range, &format!("n={n}"), &lhs, &rhs)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussVariant {
    /// (a, b) = (-l/2, n + 1 - l/2)
    A,
    /// (a, b) = (-l/2, n - l/2)
    B,
}

/// Gauss's second summation theorem at z = 1/2:
/// 2F1(2a, 2b; a+b+1/2 | 1/2) = G(1/2) G(a+b+1/2) / (G(a+1/2) G(b+1/2)),
/// evaluated in exact half-integer gamma arithmetic. Odd l must come out
/// zero on both sides (a pole-annihilated right side and a vanishing sum).
pub fn verify_gauss_second_summation(l: u32, n: u32, variant: GaussVariant) -> IdentityReport {
    assert!(l <= n);
    let id = match variant {
        GaussVariant::A => "gauss-sum-A.3",
        GaussVariant::B => "gauss-sum-B.3",
    };
    let range = format!("l={l} n={n}");
    let (l, n) = (l as i64, n as i64);
    // twice the parameter values, to stay on the half-integer grid
    let (twice_b, twice_c) = match variant {
        GaussVariant::A => (2 * n + 2 - l, 2 * n - 2 * l + 3),
        GaussVariant::B => (2 * n - l, 2 * n - 2 * l + 1),
    };
    let lhs = hyper2f1_terminating(&Hyper2F1Case {
        a: rat_int(-l),
        b: rat_int(twice_b),
        c: rat(twice_c, 2),
        z: rat(1, 2),
    });
    let lhs = match lhs {
        Ok(v) => v,
        Err(e) => {
            return IdentityReport::fail(id, range, format!("l={l} n={n}"), e.to_string(), "-")
        }
    };
    let rhs = GammaProduct::one()
        .times_gamma(&gamma_half(1))
        .times_gamma(&gamma_half(twice_c))
        .div_gamma(&gamma_half(twice_b + 1))
        .div_gamma(&gamma_half(1 - l))
        .as_rational();
    if lhs == rhs {
        IdentityReport::pass(id, range)
    } else {
        IdentityReport::fail(
            id,
            range,
            format!("l={l} n={n}"),
            rational::display(&lhs),
            rational::display(&rhs),
        )
    }
}

/// Apply the exact second-order differential operator for `kind` and assert
/// the eigenvalue relation on the degree-n member.
pub fn verify_ode_eigen(kind: FamilyKind, n: u32) -> IdentityReport {
    let id = match kind {
        FamilyKind::MonicFib => "ode-2.12",
        FamilyKind::MonicLucas => "ode-2.24",
        FamilyKind::ChebU => "ode-2.11",
        FamilyKind::ChebT => "ode-2.23",
        other => panic!("{other} has no ODE eigen-relation"),
    };
    let range = format!("n={n}");
    let p = families::classical_recurrence(kind, n);
    let dp = p.deriv_x();
    let ddp = dp.deriv_x();
    let x = MPoly::var_x();
    let x2 = x.pow(2);
    let ni = n as i64;
    let (lhs, eigen) = match kind {
        // (1 + x^2) p'' + 3x p' = n(n+2) p
        FamilyKind::MonicFib => (
            (MPoly::one() + &x2) * &ddp + x.scale(&rat_int(3)) * &dp,
            rat_int(ni * (ni + 2)),
        ),
        // (4 + x^2) p'' + x p' = n^2 p
        FamilyKind::MonicLucas => (
            (MPoly::constant(rat_int(4)) + &x2) * &ddp + &x * &dp,
            rat_int(ni * ni),
        ),
        // (1 - x^2) U'' - 3x U' = -n(n+2) U
        FamilyKind::ChebU => (
            (MPoly::one() - &x2) * &ddp - x.scale(&rat_int(3)) * &dp,
            rat_int(-(ni * (ni + 2))),
        ),
        // (1 - x^2) T'' - x T' = -n^2 T
        FamilyKind::ChebT => (
            (MPoly::one() - &x2) * &ddp - &x * &dp,
            rat_int(-(ni * ni)),
        ),
        _ => unreachable!(),
    };
    let rhs = p.scale(&eigen);
    poly_report(id, &range, &format!("kind={kind} n={n}"), &lhs, &rhs)
}

/// q = 1 substitution into the exact q-family member reproduces the
/// classical member.
pub fn q_limit_check(kind: FamilyKind, n: u32) -> IdentityReport {
    let (id, classical) = match kind {
        FamilyKind::QFib => ("q-limit-3.7-fib", FamilyKind::Fib),
        FamilyKind::QLucas => ("q-limit-3.7-lucas", FamilyKind::Lucas),
        other => panic!("{other} has no q -> 1 limit check"),
    };
    let range = format!("n={n}");
    let lhs = families::q_family_explicit(kind, n)
        .subst_q(&rat_int(1))
        .expect("q = 1 is never a Laurent pole here");
    let rhs = families::classical_explicit(classical, n);
    poly_report(id, &range, &format!("kind={kind} n={n}"), &lhs, &rhs)
}

// ---------------------------------------------------------------------------
// Generating functions
// ---------------------------------------------------------------------------

fn family_series(kind: FamilyKind, order: usize, x0: &Rational, s0: &Rational, q0: &Rational) -> TSeries {
    let mut lhs = TSeries::zero(order);
    for n in 0..=order {
        let member = match kind {
            FamilyKind::QFib | FamilyKind::QLucas => families::q_family_explicit(kind, n as u32),
            _ => families::classical_explicit(kind, n as u32),
        };
        let v = member.eval(x0, s0, q0).expect("q0 != 0 for family members");
        lhs = lhs + TSeries::monomial(order, n, v);
    }
    lhs
}

/// `1 - x0 t - s0 t^2` and friends.
fn denom_series(order: usize, x0: &Rational, s0: &Rational) -> TSeries {
    TSeries::from_coeffs(order, &[Rational::one(), -x0.clone(), -s0.clone()])
}

/// The basic-hypergeometric sum of the q generating functions, in its
/// 1phi1 shape: sum_m q^{m(m+1)/2} s^m t^{2m} / (q x t; q)_m, truncated.
fn one_phi_one_series(order: usize, x0: &Rational, s0: &Rational, q0: &Rational) -> Result<TSeries> {
    let mut acc = TSeries::zero(order);
    for m in 0..=(order / 2) {
        let mut poch = TSeries::one(order);
        for j in 1..=m {
            let factor = TSeries::from_coeffs(
                order,
                &[Rational::one(), -(rat_pow(q0, j as i64) * x0)],
            );
            poch = poch * factor;
        }
        let coeff = rat_pow(q0, (m as i64) * (m as i64 + 1) / 2) * rat_pow(s0, m as i64);
        acc = acc + poch.inv()?.shift(2 * m).scale(&coeff);
    }
    Ok(acc)
}

/// The same sum in its 2phi1 shape, cleared of the 1/x pole:
/// sum_m t^m prod_{j=1}^m (x + q^j s t).
fn two_phi_one_series(order: usize, x0: &Rational, s0: &Rational, q0: &Rational) -> TSeries {
    let mut acc = TSeries::zero(order);
    for m in 0..=order {
        let mut prod = TSeries::one(order);
        for j in 1..=m {
            let factor = TSeries::from_coeffs(
                order,
                &[x0.clone(), rat_pow(q0, j as i64) * s0],
            );
            prod = prod * factor;
        }
        acc = acc + prod.shift(m);
    }
    acc
}

/// Compare the family expansion against its closed generating function
/// through t-order N at one rational sample; for the q-kinds the 1phi1 and
/// 2phi1 forms are checked against the expansion and against each other.
pub fn verify_generating_function(
    kind: FamilyKind,
    order: usize,
    x0: &Rational,
    s0: &Rational,
    q0: &Rational,
) -> Result<IdentityReport> {
    let (id, rhs_forms): (&str, Vec<TSeries>) = match kind {
        FamilyKind::Fib => {
            // t / (1 - x t - s t^2)
            let rhs = denom_series(order, x0, s0).inv()?.shift(1);
            ("gf-2.3-fib", vec![rhs])
        }
        FamilyKind::Lucas => {
            // (1 + s t^2) / (1 - x t - s t^2)
            let numer = TSeries::from_coeffs(order, &[Rational::one(), Rational::zero(), s0.clone()]);
            let rhs = numer * denom_series(order, x0, s0).inv()?;
            ("gf-2.15-lucas", vec![rhs])
        }
        FamilyKind::ChebU => {
            // 1 / (1 - 2 x t + t^2)
            let den = TSeries::from_coeffs(
                order,
                &[Rational::one(), -(x0 * rat_int(2)), Rational::one()],
            );
            ("gf-2.13-cheb-u", vec![den.inv()?])
        }
        FamilyKind::ChebT => {
            // (1 - x t) / (1 - 2 x t + t^2)
            let den = TSeries::from_coeffs(
                order,
                &[Rational::one(), -(x0 * rat_int(2)), Rational::one()],
            );
            let numer = TSeries::from_coeffs(order, &[Rational::one(), -x0.clone()]);
            ("gf-2.25-cheb-t", vec![numer * den.inv()?])
        }
        FamilyKind::QFib => {
            // t/(1-xt) * 1phi1  ==  t * 2phi1
            let pre = TSeries::from_coeffs(order, &[Rational::one(), -x0.clone()]).inv()?;
            let rhs1 = (pre * one_phi_one_series(order, x0, s0, q0)?).shift(1);
            let rhs2 = two_phi_one_series(order, x0, s0, q0).shift(1);
            ("gf-3.6-qfib", vec![rhs1, rhs2])
        }
        FamilyKind::QLucas => {
            let pre2 = TSeries::from_coeffs(order, &[Rational::one(), Rational::zero(), s0.clone()]);
            let pre1 = TSeries::from_coeffs(order, &[Rational::one(), -x0.clone()]).inv()?;
            let rhs1 = &pre2 * pre1 * one_phi_one_series(order, x0, s0, q0)?;
            let rhs2 = pre2 * two_phi_one_series(order, x0, s0, q0);
            ("gf-3.12-qlucas", vec![rhs1, rhs2])
        }
        other => panic!("{other} has no generating function check"),
    };
    let lhs = family_series(kind, order, x0, s0, q0);
    let params = format!(
        "x0={} s0={} q0={}",
        rational::display(x0),
        rational::display(s0),
        rational::display(q0)
    );
    let range = format!("N={order} {params}");
    for rhs in &rhs_forms {
        if &lhs != rhs {
            return Ok(IdentityReport::fail(
                id,
                range,
                params,
                format!("{:?}", lhs.coeffs().iter().map(rational::display).collect::<Vec<_>>()),
                format!("{:?}", rhs.coeffs().iter().map(rational::display).collect::<Vec<_>>()),
            ));
        }
    }
    // Heine consistency: the two basic-hypergeometric shapes agree
    if rhs_forms.len() == 2 && rhs_forms[0] != rhs_forms[1] {
        return Ok(IdentityReport::fail(
            id,
            range,
            params,
            "1phi1 form".to_string(),
            "2phi1 form".to_string(),
        ));
    }
    Ok(IdentityReport::pass(id, range))
}

/// Real-form consistency of the Chebyshev generating functions with the
/// Fibonacci/Lucas ones: at s = -m^2 the imaginary-argument connection
/// collapses to F_{n+1}(x, -m^2) = m^n U_n(x / 2m) and
/// L_n(x, -m^2) = 2 m^n T_n(x / 2m), all real.
pub fn verify_chebyshev_gf_consistency(
    order: usize,
    x0: &Rational,
    m0: &Rational,
) -> Result<IdentityReport> {
    assert!(!m0.is_zero());
    let id = "gf-cheb-consistency";
    let params = format!("x0={} m0={}", rational::display(x0), rational::display(m0));
    let range = format!("N={order} {params}");
    let s0 = -(m0 * m0);
    let z0 = x0 / (m0 * rat_int(2));
    let zero = Rational::zero();

    let fib = family_series(FamilyKind::Fib, order, x0, &s0, &zero);
    let mut u_side = TSeries::zero(order);
    for n in 0..(order) {
        let u = families::classical_explicit(FamilyKind::ChebU, n as u32)
            .eval(&z0, &zero, &zero)
            .unwrap();
        u_side = u_side + TSeries::monomial(order, n + 1, u * rat_pow(m0, n as i64));
    }
    if fib != u_side {
        return Ok(IdentityReport::fail(id, range, params, "fib series", "scaled U series"));
    }

    let lucas = family_series(FamilyKind::Lucas, order, x0, &s0, &zero);
    let mut t_side = TSeries::zero(order);
    for n in 0..=order {
        let t = families::classical_explicit(FamilyKind::ChebT, n as u32)
            .eval(&z0, &zero, &zero)
            .unwrap();
        t_side = t_side + TSeries::monomial(order, n, t * rat_pow(m0, n as i64) * rat_int(2));
    }
    t_side = t_side - TSeries::one(order);
    if lucas != t_side {
        return Ok(IdentityReport::fail(id, range, params, "lucas series", "scaled T series"));
    }
    Ok(IdentityReport::pass(id, range))
}
