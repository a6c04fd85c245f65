//! Numerical verification of the Gaussian Fourier transform theorems for the
//! q-families: the left-hand integral is evaluated by Gauss–Hermite
//! quadrature (the only floating-point corner of the crate) and compared
//! against both the closed right-hand side and an exact term-by-term
//! symbolic oracle built from the shifted-Gaussian transform.

use serde::Serialize;

use crate::families::{self, FamilyKind};
use crate::mpoly::MPoly;
use crate::rational;
use crate::{Error, Result};

const SQRT_2PI: f64 = 2.506_628_274_631_000_5;

/// One transform instance. `n` is the theorem index: the Fibonacci-side
/// polynomial under the integral is the member of index n + 1, the
/// Lucas-side one the member of index n.
#[derive(Clone, Debug)]
pub struct FourierCase {
    pub kind: FamilyKind,
    pub n: u32,
    pub a: f64,
    pub s: f64,
    pub q: f64,
    pub y: f64,
    pub kappa: f64,
}

impl FourierCase {
    pub fn new(kind: FamilyKind, n: u32, a: f64, s: f64, q: f64, y: f64) -> Result<Self> {
        match kind {
            FamilyKind::QFib | FamilyKind::QLucas => {}
            other => {
                return Err(Error::Domain(format!(
                    "no Fourier transform theorem for family {other}"
                )))
            }
        }
        let kappa = kappa_from_q(q)?;
        Ok(FourierCase {
            kind,
            n,
            a,
            s,
            q,
            y,
            kappa,
        })
    }

    /// The polynomial under the integral, as an exact member.
    fn member(&self) -> MPoly {
        match self.kind {
            FamilyKind::QFib => families::q_family_explicit(FamilyKind::QFib, self.n + 1),
            FamilyKind::QLucas => families::q_family_explicit(FamilyKind::QLucas, self.n),
            _ => unreachable!(),
        }
    }

    /// The inverted-base member of the right-hand side.
    fn inverted_member(&self) -> MPoly {
        match self.kind {
            FamilyKind::QFib => families::q_family_inverted(FamilyKind::QFibInv, self.n + 1),
            FamilyKind::QLucas => families::q_family_inverted(FamilyKind::QLucasInv, self.n),
            _ => unreachable!(),
        }
    }
}

/// kappa with q = exp(-2 kappa^2), real only for q in (0, 1).
pub fn kappa_from_q(q: f64) -> Result<f64> {
    if !(q > 0.0 && q < 1.0) {
        return Err(Error::Domain(format!("q = {q} is outside (0, 1)")));
    }
    Ok(((1.0 / q).ln() / 2.0).sqrt())
}

/// Transform of a single exponential: integral of e^{i m kappa x} e^{i x y - x^2/2}
/// equals sqrt(2 pi) e^{-(y + m kappa)^2 / 2}.
pub fn gaussian_ft_closed(m: i64, kappa: f64, y: f64) -> f64 {
    let shift = y + m as f64 * kappa;
    SQRT_2PI * (-shift * shift / 2.0).exp()
}

/// The same value in the factored shape used by the right-hand sides, with
/// m = n - 2k: sqrt(2 pi) q^{n^2/4} q^{k(k-n)} e^{-(n-2k) kappa y} e^{-y^2/2}.
pub fn gaussian_ft_factored(n: i64, k: i64, kappa: f64, y: f64) -> f64 {
    let q = (-2.0 * kappa * kappa).exp();
    SQRT_2PI
        * q.powf(n as f64 * n as f64 / 4.0)
        * q.powi((k * (k - n)) as i32)
        * (-(n - 2 * k) as f64 * kappa * y).exp()
        * (-y * y / 2.0).exp()
}

/// Gauss–Hermite rule: nodes and weights for the weight e^{-u^2} on the real
/// line, exact for polynomials of degree <= 2 count - 1.
#[derive(Clone, Debug)]
pub struct QuadratureRule {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    pub count: usize,
}

impl QuadratureRule {
    /// Build the count-point rule. Positive roots of the orthonormal
    /// Hermite polynomial are bracketed by a scan over [0, sqrt(2n+1)+1]
    /// (root spacing is never below pi/sqrt(2n), so a grid several times
    /// finer cannot skip one) and refined by bisection; weights come from
    /// the Christoffel sum 1 / sum_k p_k(u_i)^2.
    pub fn gauss_hermite(count: usize) -> Self {
        assert!(count >= 1);
        let n = count;
        // orthonormal (physicists') Hermite value p_n(u)
        let pn = |u: f64| -> f64 {
            let mut pm1 = 0.0f64;
            let mut p = std::f64::consts::PI.powf(-0.25);
            for k in 0..n {
                let kf = k as f64;
                let pnext =
                    u * (2.0 / (kf + 1.0)).sqrt() * p - (kf / (kf + 1.0)).sqrt() * pm1;
                pm1 = p;
                p = pnext;
            }
            p
        };
        let christoffel = |u: f64| -> f64 {
            let mut pm1 = 0.0f64;
            let mut p = std::f64::consts::PI.powf(-0.25);
            let mut sum = 0.0;
            for k in 0..n {
                sum += p * p;
                let kf = k as f64;
                let pnext =
                    u * (2.0 / (kf + 1.0)).sqrt() * p - (kf / (kf + 1.0)).sqrt() * pm1;
                pm1 = p;
                p = pnext;
            }
            1.0 / sum
        };

        let half = n / 2;
        let upper = ((2 * n + 1) as f64).sqrt() + 1.0;
        let steps = 20 * n;
        let h = upper / steps as f64;
        let mut pos = Vec::with_capacity(half);
        // for odd n skip the known root at the origin
        let mut prev_u = if n % 2 == 1 { 0.5 * h } else { 0.0 };
        let mut prev_v = pn(prev_u);
        for i in 1..=steps {
            let u = prev_u + h;
            let v = pn(u);
            if v == 0.0 {
                pos.push(u);
            } else if prev_v != 0.0 && (prev_v < 0.0) != (v < 0.0) {
                let (mut lo, mut hi, mut flo) = (prev_u, u, prev_v);
                for _ in 0..80 {
                    let mid = 0.5 * (lo + hi);
                    if mid <= lo || mid >= hi {
                        break;
                    }
                    let fm = pn(mid);
                    if fm == 0.0 {
                        lo = mid;
                        hi = mid;
                        break;
                    }
                    if (fm < 0.0) == (flo < 0.0) {
                        lo = mid;
                        flo = fm;
                    } else {
                        hi = mid;
                    }
                }
                pos.push(0.5 * (lo + hi));
            }
            prev_u = u;
            prev_v = v;
            let _ = i;
        }
        assert_eq!(
            pos.len(),
            half,
            "found {} of {} positive Hermite roots",
            pos.len(),
            half
        );

        let mut nodes = Vec::with_capacity(n);
        let mut weights = Vec::with_capacity(n);
        for &u in pos.iter().rev() {
            nodes.push(-u);
            weights.push(christoffel(u));
        }
        if n % 2 == 1 {
            nodes.push(0.0);
            weights.push(christoffel(0.0));
        }
        for &u in &pos {
            nodes.push(u);
            weights.push(christoffel(u));
        }
        QuadratureRule {
            nodes,
            weights,
            count: n,
        }
    }

    /// Integral of g(u) e^{-u^2} du over the line.
    pub fn integrate<F: Fn(f64) -> f64>(&self, g: F) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&u, &w)| w * g(u))
            .sum()
    }
}

/// The integrand value P(a e^{i kappa x}) e^{i x y} at a real point x
/// (the Gaussian factor lives in the quadrature weight), as (re, im).
fn integrand_no_gaussian(member: &MPoly, case: &FourierCase, x: f64) -> (f64, f64) {
    // P(a e^{i kappa x}) = sum over terms c q^eq s^es a^ex e^{i ex kappa x}
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (m, c) in member.terms() {
        let mag = rational::to_f64(c)
            * case.q.powi(m.eq)
            * case.s.powi(m.es as i32)
            * case.a.powi(m.ex as i32);
        let phase = m.ex as f64 * case.kappa * x;
        re += mag * phase.cos();
        im += mag * phase.sin();
    }
    let (pc, ps) = ((x * case.y).cos(), (x * case.y).sin());
    (re * pc - im * ps, re * ps + im * pc)
}

/// One quadrature pass of the left-hand integral at a fixed rule, without
/// the convergence check; the building block of [`fourier_lhs_quadrature`].
pub fn fourier_lhs_once(case: &FourierCase, rule: &QuadratureRule) -> (f64, f64) {
    quadrature_once(&case.member(), case, rule)
}

fn quadrature_once(member: &MPoly, case: &FourierCase, rule: &QuadratureRule) -> (f64, f64) {
    // x = sqrt(2) u turns e^{-x^2/2} dx into sqrt(2) e^{-u^2} du
    let sqrt2 = std::f64::consts::SQRT_2;
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for (&u, &w) in rule.nodes.iter().zip(&rule.weights) {
        let (gr, gi) = integrand_no_gaussian(member, case, sqrt2 * u);
        re += w * gr;
        im += w * gi;
    }
    (sqrt2 * re, sqrt2 * im)
}

/// Quadrature of the left-hand integral, with a convergence check: the rule
/// is doubled once and the two results must agree within `tol` relative.
pub fn fourier_lhs_quadrature(
    case: &FourierCase,
    rule: &QuadratureRule,
    tol: f64,
) -> Result<(f64, f64)> {
    let member = case.member();
    let (re, im) = quadrature_once(&member, case, rule);
    let doubled = QuadratureRule::gauss_hermite(2 * rule.count);
    let (re2, im2) = quadrature_once(&member, case, &doubled);
    let drift = ((re - re2).hypot(im - im2)) / re2.hypot(im2).max(1.0);
    if drift > tol {
        return Err(Error::RuleTooSmall(drift));
    }
    Ok((re, im))
}

/// Closed right-hand side: sqrt(2 pi) q^{n^2/4} P_inv(arg, s') e^{-y^2/2},
/// where P_inv is the base-inverted member, arg = a e^{-kappa y}, and s' is
/// q s on the Fibonacci side but plain s on the Lucas side.
pub fn fourier_rhs_closed(case: &FourierCase) -> f64 {
    let inv = case.inverted_member();
    let arg = case.a * (-case.kappa * case.y).exp();
    let s_arg = match case.kind {
        FamilyKind::QFib => case.q * case.s,
        _ => case.s,
    };
    let nf = case.n as f64;
    SQRT_2PI
        * case.q.powf(nf * nf / 4.0)
        * inv.eval_f64(arg, s_arg, case.q)
        * (-case.y * case.y / 2.0).exp()
}

/// Exact term-by-term left-hand side: each monomial of the member transforms
/// into a shifted Gaussian, so the integral is a finite sum of closed terms.
pub fn fourier_symbolic_oracle(case: &FourierCase) -> f64 {
    let member = case.member();
    let mut acc = 0.0;
    for (m, c) in member.terms() {
        acc += rational::to_f64(c)
            * case.q.powi(m.eq)
            * case.s.powi(m.es as i32)
            * case.a.powi(m.ex as i32)
            * gaussian_ft_closed(m.ex as i64, case.kappa, case.y);
    }
    acc
}

/// Full numeric breakdown of one theorem instance.
#[derive(Clone, Debug, Serialize)]
pub struct FourierResult {
    pub kind: String,
    pub n: u32,
    pub a: f64,
    pub s: f64,
    pub q: f64,
    pub y: f64,
    pub nodes: usize,
    pub lhs_re: f64,
    pub lhs_im: f64,
    pub oracle: f64,
    pub rhs: f64,
    pub abs_err: f64,
    pub rel_err: f64,
    #[serde(skip)]
    pub imag_leak: f64,
}

/// Check one instance against the quadrature, the oracle and the closed
/// right-hand side. The quadrature must match within `tol`, the oracle
/// within 1e-11 relative (it is an algebraic identity up to rounding), and
/// the imaginary part must be pure noise.
pub fn verify_fourier_theorem(
    case: &FourierCase,
    rule: &QuadratureRule,
    tol: f64,
) -> Result<FourierResult> {
    let (lhs_re, lhs_im) = fourier_lhs_quadrature(case, rule, tol)?;
    let oracle = fourier_symbolic_oracle(case);
    let rhs = fourier_rhs_closed(case);
    let abs_err = (lhs_re - rhs).abs();
    let rel_err = abs_err / rhs.abs().max(1.0);
    let result = FourierResult {
        kind: case.kind.name().to_string(),
        n: case.n,
        a: case.a,
        s: case.s,
        q: case.q,
        y: case.y,
        nodes: rule.count,
        lhs_re,
        lhs_im,
        oracle,
        rhs,
        abs_err,
        rel_err,
        imag_leak: lhs_im.abs(),
    };
    let scale = rhs.abs().max(1.0);
    let ok = abs_err <= tol * scale
        && (oracle - rhs).abs() <= 1e-11 * scale
        && lhs_im.abs() <= tol;
    if ok {
        Ok(result)
    } else {
        Err(Error::TheoremViolation(Box::new(result)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const PI: f64 = std::f64::consts::PI;

    fn close(a: f64, b: f64, tol: f64) {
        assert!(
            (a - b).abs() <= tol * b.abs().max(1.0),
            "{a} vs {b} (tol {tol:e})"
        );
    }

    #[test]
    fn kappa_round_trip() {
        close(kappa_from_q((-2.0f64).exp()).unwrap(), 1.0, 1e-14);
        close(kappa_from_q((-0.5f64).exp()).unwrap(), 0.5, 1e-14);
        for q in [0.05, 0.3, 0.5, 0.64, 0.9, 0.999] {
            let k = kappa_from_q(q).unwrap();
            close((-2.0 * k * k).exp(), q, 1e-14);
        }
        // monotone: q up, kappa down
        let mut prev = f64::INFINITY;
        for i in 1..100 {
            let k = kappa_from_q(i as f64 / 100.0).unwrap();
            assert!(k < prev);
            prev = k;
        }
        assert!(kappa_from_q(0.0).is_err());
        assert!(kappa_from_q(1.0).is_err());
        assert!(kappa_from_q(-0.3).is_err());
    }

    #[test]
    fn gaussian_ft_values() {
        close(gaussian_ft_closed(0, 0.7, 0.0), SQRT_2PI, 1e-15);
        close(
            gaussian_ft_closed(1, 1.0, 0.0),
            SQRT_2PI * (-0.5f64).exp(),
            1e-15,
        );
        close(
            gaussian_ft_closed(2, 0.5, 0.3),
            SQRT_2PI * (-1.3f64 * 1.3 / 2.0).exp(),
            1e-15,
        );
    }

    #[test]
    fn gaussian_ft_two_forms_agree() {
        for n in 0..=8i64 {
            for k in 0..=(n / 2) {
                for q in [0.3, 0.5, 0.64, 0.9] {
                    for y in [-2.0, -0.5, 0.0, 0.3, 1.5] {
                        let kappa = kappa_from_q(q).unwrap();
                        let plain = gaussian_ft_closed(n - 2 * k, kappa, y);
                        let factored = gaussian_ft_factored(n, k, kappa, y);
                        close(plain, factored, 1e-12);
                    }
                }
            }
        }
    }

    #[test]
    fn hermite_rule_small_cases() {
        // two-point rule: nodes +-1/sqrt(2), weights sqrt(pi)/2
        let r = QuadratureRule::gauss_hermite(2);
        close(r.nodes[0], -std::f64::consts::FRAC_1_SQRT_2, 1e-14);
        close(r.nodes[1], std::f64::consts::FRAC_1_SQRT_2, 1e-14);
        close(r.weights[0], PI.sqrt() / 2.0, 1e-14);
        close(r.weights[1], PI.sqrt() / 2.0, 1e-14);
        // three-point rule has the origin
        let r = QuadratureRule::gauss_hermite(3);
        assert_eq!(r.nodes[1], 0.0);
        close(r.weights[1], 2.0 * PI.sqrt() / 3.0, 1e-13);
    }

    #[test]
    fn hermite_rule_moments() {
        for count in [1, 2, 3, 8, 31, 96, 128] {
            let r = QuadratureRule::gauss_hermite(count);
            assert_eq!(r.nodes.len(), count);
            // weight integrates to sqrt(pi)
            close(r.integrate(|_| 1.0), PI.sqrt(), 1e-13);
            if count >= 2 {
                close(r.integrate(|u| u * u), PI.sqrt() / 2.0, 1e-13);
            }
            if count >= 3 {
                close(r.integrate(|u| u.powi(4)), 0.75 * PI.sqrt(), 1e-12);
            }
            // odd moments vanish by symmetry
            close(1.0 + r.integrate(|u| u.powi(3)), 1.0, 1e-12);
        }
    }

    #[test]
    fn hermite_rule_high_degree_exactness() {
        // degree 2n-1 exactness: moment integral of u^(2m) is
        // (2m-1)!! sqrt(pi) / 2^m
        let n = 20;
        let r = QuadratureRule::gauss_hermite(n);
        let mut exact = PI.sqrt();
        for m in 1..n {
            exact *= (2 * m - 1) as f64 / 2.0;
            let approx = r.integrate(|u| u.powi(2 * m as i32));
            close(approx, exact, 1e-10);
        }
    }

    #[test]
    fn lhs_single_gaussian_cases() {
        // F_2 = x: the integrand is one exponential, closed value
        // sqrt(2 pi) q^(1/4)
        let case = FourierCase::new(FamilyKind::QFib, 1, 1.0, 1.0, 0.5, 0.0).unwrap();
        let rule = QuadratureRule::gauss_hermite(96);
        let (re, im) = fourier_lhs_quadrature(&case, &rule, 1e-10).unwrap();
        close(re, SQRT_2PI * 0.5f64.powf(0.25), 1e-12);
        assert!(im.abs() < 1e-12);
        // L_0 = 1: plain Gaussian
        let case = FourierCase::new(FamilyKind::QLucas, 0, 2.0, -1.0, 0.3, 1.0).unwrap();
        let (re, _) = fourier_lhs_quadrature(&case, &rule, 1e-10).unwrap();
        close(re, SQRT_2PI * (-0.5f64).exp(), 1e-12);
    }

    #[test]
    fn oracle_small_cases() {
        // n = 1 Fibonacci: a sqrt(2 pi) e^{-(y+kappa)^2/2}
        let case = FourierCase::new(FamilyKind::QFib, 1, 1.5, 7.0, 0.5, 0.4).unwrap();
        close(
            fourier_symbolic_oracle(&case),
            1.5 * gaussian_ft_closed(1, case.kappa, 0.4),
            1e-15,
        );
        // n = 2 Lucas at a = 1: e^{-(y+2k)^2/2} + (1+q) s e^{-y^2/2} terms
        let case = FourierCase::new(FamilyKind::QLucas, 2, 1.0, 0.7, 0.64, -0.2).unwrap();
        let expect = gaussian_ft_closed(2, case.kappa, -0.2)
            + (1.0 + 0.64) * 0.7 * gaussian_ft_closed(0, case.kappa, -0.2);
        close(fourier_symbolic_oracle(&case), expect, 1e-14);
    }

    #[test]
    fn rhs_small_cases() {
        let case = FourierCase::new(FamilyKind::QFib, 1, 1.0, 3.0, 0.5, 0.0).unwrap();
        close(fourier_rhs_closed(&case), SQRT_2PI * 0.5f64.powf(0.25), 1e-14);
        let case = FourierCase::new(FamilyKind::QLucas, 0, 1.0, 1.0, 0.5, 1.0).unwrap();
        close(fourier_rhs_closed(&case), SQRT_2PI * (-0.5f64).exp(), 1e-14);
    }

    #[test]
    fn theorem_spot_checks() {
        let rule = QuadratureRule::gauss_hermite(128);
        for (kind, n, a, s, q, y) in [
            (FamilyKind::QFib, 1, 1.0, 1.0, 0.5, 0.0),
            (FamilyKind::QLucas, 0, -2.0, 0.0, 0.9, -1.0),
            (FamilyKind::QFib, 3, 1.0, 1.0, 0.64, 0.3),
            (FamilyKind::QFib, 6, 1.0, 2.0, 0.3, 1.5),
            (FamilyKind::QLucas, 5, -1.5, -0.8, 0.7, 0.6),
        ] {
            let case = FourierCase::new(kind, n, a, s, q, y).unwrap();
            let r = verify_fourier_theorem(&case, &rule, 1e-8).unwrap();
            assert!(r.rel_err <= 1e-8, "{kind} n={n}: rel_err {}", r.rel_err);
            assert!((r.oracle - r.rhs).abs() <= 1e-11 * r.rhs.abs().max(1.0));
        }
    }

    #[test]
    fn rejects_bad_kind_and_base() {
        assert!(FourierCase::new(FamilyKind::Fib, 1, 1.0, 1.0, 0.5, 0.0).is_err());
        assert!(FourierCase::new(FamilyKind::QFib, 1, 1.0, 1.0, 1.5, 0.0).is_err());
    }

    #[test]
    fn rule_too_small_detected() {
        // 4 nodes cannot resolve an n = 8 oscillatory integrand at small q
        let case = FourierCase::new(FamilyKind::QFib, 8, 2.0, 2.0, 0.3, 1.5).unwrap();
        let rule = QuadratureRule::gauss_hermite(4);
        match fourier_lhs_quadrature(&case, &rule, 1e-10) {
            Err(Error::RuleTooSmall(_)) => {}
            other => panic!("expected RuleTooSmall, got {other:?}"),
        }
    }
}
