//! Suite runner: bundles every identity check into named suites with
//! deterministic ordering, producing the report consumed by the CLI.

use num::{One, Signed};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::families::{self, FamilyKind, RecurrenceReport};
use crate::fourier::{self, FourierCase, FourierResult, QuadratureRule};
use crate::gamma;
use crate::hyper::{self, GaussVariant};
use crate::mpoly::{MPoly, Monomial};
use crate::qcalc::{self, invert_base};
use crate::rational::{self, rat, rat_int, Rational};
use crate::report::IdentityReport;
use crate::{Error, Result};

pub const SUITE_NAMES: &[&str] = &[
    "all",
    "classical",
    "qcore",
    "families",
    "hyper",
    "gf",
    "fourier",
    "section5",
];

#[derive(Clone, Debug)]
pub struct SuiteOptions {
    pub n_max: u32,
    pub nodes: usize,
    pub tol: f64,
    pub seed: u64,
    /// Test hook: perturb one explicit Fibonacci-side coefficient so the
    /// dual-construction identity must fail.
    pub mutate_fib_coeff: bool,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            n_max: 12,
            nodes: 96,
            tol: 1e-8,
            seed: 0,
            mutate_fib_coeff: false,
        }
    }
}

/// Everything a suite run produces; the CLI wraps this with its config echo.
#[derive(Clone, Debug, Serialize, Default)]
pub struct SuiteOutput {
    pub identities: Vec<IdentityReport>,
    pub fourier: Vec<FourierResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub recurrence_probe: Option<RecurrenceReport>,
}

impl SuiteOutput {
    pub fn all_passed(&self) -> bool {
        self.identities.iter().all(|r| r.passed())
    }

    fn merge(&mut self, other: SuiteOutput) {
        self.identities.extend(other.identities);
        self.fourier.extend(other.fourier);
        if other.recurrence_probe.is_some() {
            self.recurrence_probe = other.recurrence_probe;
        }
    }
}

pub fn run_suite(name: &str, opts: &SuiteOptions) -> Result<SuiteOutput> {
    match name {
        "all" => {
            let mut out = SuiteOutput::default();
            for sub in ["classical", "qcore", "families", "hyper", "gf", "section5", "fourier"] {
                out.merge(run_suite(sub, opts)?);
            }
            Ok(out)
        }
        "classical" => Ok(classical_suite(opts)),
        "qcore" => Ok(qcore_suite(opts)),
        "families" => Ok(families_suite(opts)),
        "hyper" => Ok(hyper_suite()),
        "gf" => gf_suite(opts),
        "section5" => section5_suite(opts),
        "fourier" => fourier_suite(opts),
        other => Err(Error::Domain(format!(
            "unknown suite {other:?}; expected one of {SUITE_NAMES:?}"
        ))),
    }
}

/// Run `body` to the first counterexample; `None` means the sweep passed.
fn sweep<F>(id: &str, range: String, mut body: F) -> IdentityReport
where
    F: FnMut() -> Option<(String, String, String)>,
{
    match body() {
        None => IdentityReport::pass(id, range),
        Some((params, lhs, rhs)) => IdentityReport::fail(id, range, params, lhs, rhs),
    }
}

fn poly_mismatch(params: String, lhs: &MPoly, rhs: &MPoly) -> Option<(String, String, String)> {
    if lhs == rhs {
        None
    } else {
        Some((params, lhs.to_string(), rhs.to_string()))
    }
}

// ---------------------------------------------------------------------------
// classical
// ---------------------------------------------------------------------------

fn classical_suite(opts: &SuiteOptions) -> SuiteOutput {
    let n_max = opts.n_max;
    let mut ids = Vec::new();
    let one = rat_int(1);

    ids.push(sweep("numbers-2.1-fib", "n=1..7".into(), || {
        for (n, want) in [1i64, 1, 2, 3, 5, 8, 13].iter().enumerate() {
            let n = n as u32 + 1;
            let got = families::classical_explicit(FamilyKind::Fib, n)
                .eval(&one, &one, &one)
                .unwrap();
            if got != rat_int(*want) {
                return Some((format!("n={n}"), rational::display(&got), want.to_string()));
            }
        }
        None
    }));

    ids.push(sweep("numbers-2.14-lucas", "n=1..6".into(), || {
        for (n, want) in [1i64, 3, 4, 7, 11, 18].iter().enumerate() {
            let n = n as u32 + 1;
            let got = families::classical_explicit(FamilyKind::Lucas, n)
                .eval(&one, &one, &one)
                .unwrap();
            if got != rat_int(*want) {
                return Some((format!("n={n}"), rational::display(&got), want.to_string()));
            }
        }
        None
    }));

    for (id, kind) in [
        ("dual-2.2-fib", FamilyKind::Fib),
        ("dual-2.14-lucas", FamilyKind::Lucas),
        ("dual-2.4-monic-fib", FamilyKind::MonicFib),
        ("dual-2.16-monic-lucas", FamilyKind::MonicLucas),
        ("dual-cheb-u", FamilyKind::ChebU),
        ("dual-cheb-t", FamilyKind::ChebT),
    ] {
        ids.push(sweep(id, format!("n=0..{n_max}"), || {
            for n in 0..=n_max {
                let rec = families::classical_recurrence(kind, n);
                let exp = families::classical_explicit(kind, n);
                if let Some(m) = poly_mismatch(format!("n={n}"), &rec, &exp) {
                    return Some(m);
                }
            }
            None
        }));
    }

    for (id, kind) in [
        ("connection-2.6-monic-fib", FamilyKind::Fib),
        ("connection-2.18-monic-lucas", FamilyKind::Lucas),
    ] {
        ids.push(sweep(id, format!("n=0..{n_max}"), || {
            for n in 0..=n_max {
                if !families::check_chebyshev_connection(kind, n) {
                    return Some((format!("n={n}"), "connection".into(), "family".into()));
                }
            }
            None
        }));
    }

    // Favard remark: the empirically extracted recurrence coefficient c_n in
    // p_{n+1} = x p_n + c_n p_{n-1} is positive, so A_n C_{n+1} > 0 fails.
    for (id, kind) in [
        ("favard-2.8-monic-fib", FamilyKind::MonicFib),
        ("favard-2.20-monic-lucas", FamilyKind::MonicLucas),
    ] {
        ids.push(sweep(id, format!("n=1..{n_max}"), || {
            for n in 1..=n_max {
                let prev = families::classical_recurrence(kind, n - 1);
                let cur = families::classical_recurrence(kind, n);
                let next = families::classical_recurrence(kind, n + 1);
                let diff = next - MPoly::var_x() * cur;
                let c = diff.coeff_x(n - 1);
                if diff != prev.scale(&c) || !c.is_positive() {
                    return Some((
                        format!("n={n}"),
                        diff.to_string(),
                        format!("c * p_(n-1) with c = {} > 0", rational::display(&c)),
                    ));
                }
            }
            None
        }));
    }

    SuiteOutput {
        identities: ids,
        ..Default::default()
    }
}

// ---------------------------------------------------------------------------
// qcore
// ---------------------------------------------------------------------------

fn qcore_suite(opts: &SuiteOptions) -> SuiteOutput {
    let n_max = opts.n_max as i64;
    let mut ids = Vec::new();

    ids.push(sweep("hahn-3.2-monomial", format!("n=0..{n_max}"), || {
        for n in 0..=n_max as u32 {
            let lhs = qcalc::hahn_dq(&MPoly::var_x().pow(n));
            let rhs = if n == 0 {
                MPoly::zero()
            } else {
                qcalc::q_number(n) * MPoly::var_x().pow(n - 1)
            };
            if let Some(m) = poly_mismatch(format!("n={n}"), &lhs, &rhs) {
                return Some(m);
            }
        }
        None
    }));

    ids.push(sweep(
        "inversion-4.3-qbinomial",
        format!("n=0..{n_max}, all k"),
        || {
            for n in 0..=n_max {
                for k in 0..=n {
                    let b = qcalc::q_binomial(n, k);
                    let lhs = invert_base(&b);
                    let rhs = b.mul_monomial(
                        Monomial::new(0, 0, (k * (k - n)) as i32),
                        &Rational::one(),
                    );
                    if let Some(m) = poly_mismatch(format!("n={n} k={k}"), &lhs, &rhs) {
                        return Some(m);
                    }
                }
            }
            None
        },
    ));

    ids.push(sweep("inversion-4.10-qnumber", format!("n=1..{n_max}"), || {
        for n in 1..=n_max as u32 {
            let lhs = invert_base(&qcalc::q_number(n));
            let rhs = qcalc::q_number(n)
                .mul_monomial(Monomial::new(0, 0, 1 - n as i32), &Rational::one());
            if let Some(m) = poly_mismatch(format!("n={n}"), &lhs, &rhs) {
                return Some(m);
            }
        }
        None
    }));

    ids.push(sweep(
        "inversion-4.4-fib-coeff",
        format!("n=0..{n_max}, all k"),
        || {
            for n in 0..=n_max {
                for k in 0..=(n / 2) {
                    let c = families::coeff_fib(n, k);
                    let lhs = invert_base(&c);
                    let rhs = c.mul_monomial(
                        Monomial::new(0, 0, (k * (k - n - 1)) as i32),
                        &Rational::one(),
                    );
                    if let Some(m) = poly_mismatch(format!("n={n} k={k}"), &lhs, &rhs) {
                        return Some(m);
                    }
                }
            }
            None
        },
    ));

    ids.push(sweep(
        "inversion-4.11-lucas-coeff",
        format!("n=0..{n_max}, all k"),
        || {
            for n in 0..=n_max {
                for k in 0..=(n / 2) {
                    let c = families::coeff_lucas(n, k);
                    let lhs = invert_base(&c);
                    let rhs = c.mul_monomial(
                        Monomial::new(0, 0, (k * (k - n)) as i32),
                        &Rational::one(),
                    );
                    if let Some(m) = poly_mismatch(format!("n={n} k={k}"), &lhs, &rhs) {
                        return Some(m);
                    }
                }
            }
            None
        },
    ));

    SuiteOutput {
        identities: ids,
        ..Default::default()
    }
}

// ---------------------------------------------------------------------------
// families
// ---------------------------------------------------------------------------

fn families_suite(opts: &SuiteOptions) -> SuiteOutput {
    let n_max = opts.n_max;
    let mutate = opts.mutate_fib_coeff;
    let mut ids = Vec::new();

    ids.push(sweep("dual-3.3-qfib", format!("n=0..{n_max}"), || {
        for n in 0..=n_max {
            let rec = families::q_family_recurrence(FamilyKind::QFib, n);
            let mut exp = families::q_family_explicit(FamilyKind::QFib, n);
            if mutate && n == 5 {
                exp.add_term(Monomial::new(2, 1, 0), Rational::one());
            }
            if let Some(m) = poly_mismatch(format!("n={n}"), &rec, &exp) {
                return Some(m);
            }
        }
        None
    }));

    ids.push(sweep("dual-3.10-qlucas", format!("n=0..{n_max}"), || {
        for n in 0..=n_max {
            let rec = families::q_family_recurrence(FamilyKind::QLucas, n);
            let exp = families::q_family_explicit(FamilyKind::QLucas, n);
            if let Some(m) = poly_mismatch(format!("n={n}"), &rec, &exp) {
                return Some(m);
            }
        }
        None
    }));

    for kind in [FamilyKind::QFib, FamilyKind::QLucas] {
        let mut report = None;
        for n in 0..=n_max {
            let r = hyper::q_limit_check(kind, n);
            if !r.passed() {
                report = Some(r);
                break;
            }
        }
        ids.push(report.unwrap_or_else(|| {
            IdentityReport::pass(
                format!("q-limit-3.7-{}", kind.name()),
                format!("n=0..{n_max}"),
            )
        }));
    }

    ids.push(sweep("interrelation-3.13", format!("n=1..{n_max}"), || {
        for n in 1..=n_max {
            if !families::check_interrelation(n) {
                return Some((
                    format!("n={n}"),
                    "L_n".into(),
                    "F_(n+1) + s F_(n-1)".into(),
                ));
            }
        }
        None
    }));

    for (id, kind, inv_kind) in [
        ("inverted-4.5-qfib", FamilyKind::QFib, FamilyKind::QFibInv),
        ("inverted-4.12-qlucas", FamilyKind::QLucas, FamilyKind::QLucasInv),
    ] {
        ids.push(sweep(id, format!("n=0..{n_max}"), || {
            for n in 0..=n_max {
                let lhs = families::q_family_inverted(inv_kind, n);
                let rhs = invert_base(&families::q_family_explicit(kind, n));
                if let Some(m) = poly_mismatch(format!("n={n}"), &lhs, &rhs) {
                    return Some(m);
                }
            }
            None
        }));
    }

    SuiteOutput {
        identities: ids,
        ..Default::default()
    }
}

// ---------------------------------------------------------------------------
// hyper (pinned ranges from the identity statements)
// ---------------------------------------------------------------------------

fn first_failure_or(reports: Vec<IdentityReport>, id: &str, range: String) -> IdentityReport {
    reports
        .into_iter()
        .find(|r| !r.passed())
        .unwrap_or_else(|| IdentityReport::pass(id, range))
}

fn hyper_suite() -> SuiteOutput {
    let mut ids = Vec::new();

    ids.push(first_failure_or(
        (0..=16).map(hyper::verify_transform_210).collect(),
        "transform-2.10",
        "n=0..16".into(),
    ));
    ids.push(first_failure_or(
        (1..=16).map(hyper::verify_transform_221).collect(),
        "transform-2.21",
        "n=1..16".into(),
    ));

    for (id, variant) in [
        ("gauss-sum-A.3", GaussVariant::A),
        ("gauss-sum-B.3", GaussVariant::B),
    ] {
        let mut reports = Vec::new();
        for n in 0..=12 {
            for l in 0..=n {
                reports.push(hyper::verify_gauss_second_summation(l, n, variant));
            }
        }
        ids.push(first_failure_or(reports, id, "0<=l<=n<=12".into()));
    }

    ids.push(sweep("duplication-A.6", "z=1/2..20".into(), || {
        for twice_z in 1..=40i64 {
            let (lhs, rhs) = gamma::duplication_sides(twice_z);
            if lhs != rhs {
                return Some((
                    format!("z={twice_z}/2"),
                    format!("{lhs:?}"),
                    format!("{rhs:?}"),
                ));
            }
        }
        None
    }));

    for (id, kind) in [
        ("ode-2.12-monic-fib", FamilyKind::MonicFib),
        ("ode-2.24-monic-lucas", FamilyKind::MonicLucas),
        ("ode-2.11-cheb-u", FamilyKind::ChebU),
        ("ode-2.23-cheb-t", FamilyKind::ChebT),
    ] {
        ids.push(first_failure_or(
            (0..=16).map(|n| hyper::verify_ode_eigen(kind, n)).collect(),
            id,
            "n=0..16".into(),
        ));
    }

    SuiteOutput {
        identities: ids,
        ..Default::default()
    }
}

// ---------------------------------------------------------------------------
// gf
// ---------------------------------------------------------------------------

fn rand_rational(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-4..=4), rng.gen_range(1..=5))
}

fn gf_suite(opts: &SuiteOptions) -> Result<SuiteOutput> {
    let order = 12usize;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut samples = vec![
        (rat_int(1), rat_int(1), rat(1, 2)),
        (rat(1, 2), rat(-1, 3), rat(2, 3)),
        (rat(-3, 5), rat(2, 7), rat(1, 3)),
    ];
    for _ in 0..2 {
        samples.push((
            rand_rational(&mut rng),
            rand_rational(&mut rng),
            rand_rational(&mut rng),
        ));
    }
    let n_samples = samples.len();

    let mut ids = Vec::new();
    for kind in [
        FamilyKind::Fib,
        FamilyKind::Lucas,
        FamilyKind::ChebU,
        FamilyKind::ChebT,
        FamilyKind::QFib,
        FamilyKind::QLucas,
    ] {
        let mut reports = Vec::new();
        let mut id = String::new();
        for (x0, s0, q0) in &samples {
            let r = hyper::verify_generating_function(kind, order, x0, s0, q0)?;
            id = r.identity_id.clone();
            reports.push(r);
        }
        ids.push(first_failure_or(
            reports,
            &id,
            format!("N={order}, {n_samples} samples"),
        ));
    }

    let mut cheb_reports = Vec::new();
    for (x0, m0) in [
        (rat_int(1), rat_int(1)),
        (rat(1, 2), rat(1, 3)),
        (rat(-2, 3), rat(3, 2)),
    ] {
        cheb_reports.push(hyper::verify_chebyshev_gf_consistency(order, &x0, &m0)?);
    }
    ids.push(first_failure_or(
        cheb_reports,
        "gf-cheb-consistency",
        format!("N={order}, 3 samples"),
    ));

    Ok(SuiteOutput {
        identities: ids,
        ..Default::default()
    })
}

// ---------------------------------------------------------------------------
// section5
// ---------------------------------------------------------------------------

fn section5_suite(opts: &SuiteOptions) -> Result<SuiteOutput> {
    let n_max = opts.n_max.clamp(2, 12);
    let samples = [rat(1, 2), rat(2, 3), rat(3, 5)];
    let jacobi_samples = [rat(1, 2), rat(2, 3), rat(3, 5), rat(1, 3), rat(5, 4)];
    let mut ids = Vec::new();

    ids.push(sweep("rfamily-5.1-r2", "3 samples".into(), || {
        for q0 in &samples {
            let got = match families::r_s_family(FamilyKind::RFib, 2, q0) {
                Ok(p) => p,
                Err(e) => return Some((rational::display(q0), e.to_string(), "-".into())),
            };
            let c = Rational::one()
                / ((Rational::one() + q0) * (Rational::one() + q0 * q0));
            let mut want = MPoly::var_x().pow(2);
            want.add_term(Monomial::new(0, 0, 0), c);
            if let Some(m) = poly_mismatch(format!("q0={}", rational::display(q0)), &got, &want)
            {
                return Some(m);
            }
        }
        None
    }));

    ids.push(sweep("rfamily-5.2-r3", "3 samples".into(), || {
        for q0 in &samples {
            let got = match families::r_s_family(FamilyKind::RLucas, 3, q0) {
                Ok(p) => p,
                Err(e) => return Some((rational::display(q0), e.to_string(), "-".into())),
            };
            let c = (Rational::one() + q0 + q0 * q0)
                / ((Rational::one() + q0) * (Rational::one() + q0 * q0));
            let mut want = MPoly::var_x().pow(3);
            want.add_term(Monomial::new(1, 0, 0), c);
            if let Some(m) = poly_mismatch(format!("q0={}", rational::display(q0)), &got, &want)
            {
                return Some(m);
            }
        }
        None
    }));

    ids.push(sweep(
        "sign-5.4",
        format!("n=0..{n_max}, 3 samples"),
        || {
            for q0 in &samples {
                for n in 0..=n_max {
                    for (r_kind, s_kind) in [
                        (FamilyKind::RFib, FamilyKind::SU),
                        (FamilyKind::RLucas, FamilyKind::ST),
                    ] {
                        let built = families::r_s_family(r_kind, n, q0)
                            .and_then(|r| families::r_s_family(s_kind, n, q0).map(|s| (r, s)));
                        let (r, s) = match built {
                            Ok(pair) => pair,
                            Err(e) => {
                                return Some((
                                    format!("n={n} q0={}", rational::display(q0)),
                                    e.to_string(),
                                    "-".into(),
                                ))
                            }
                        };
                        // flip the sign of every k-odd coefficient of r
                        let mut flipped = MPoly::zero();
                        for (m, c) in r.terms() {
                            let k = (n - m.ex) / 2;
                            let c = if k % 2 == 1 { -c.clone() } else { c.clone() };
                            flipped.add_term(*m, c);
                        }
                        if let Some(mm) = poly_mismatch(
                            format!("kind={s_kind} n={n} q0={}", rational::display(q0)),
                            &s,
                            &flipped,
                        ) {
                            return Some(mm);
                        }
                    }
                }
            }
            None
        },
    ));

    let probe = families::probe_r_recurrence(n_max, &samples)?;
    let rfib_ok = probe
        .summary
        .iter()
        .any(|s| s.kind == "rfib" && s.printed_law_holds);
    ids.push(if rfib_ok {
        IdentityReport::pass("recurrence-5.3-rfib", format!("n=1..{}", n_max - 1))
    } else {
        IdentityReport::fail(
            "recurrence-5.3-rfib",
            format!("n=1..{}", n_max - 1),
            "printed coefficient law",
            "first failure in probe findings",
            "printed law holds for all n",
        )
    });
    // the Lucas-type family follows the index-shifted coefficient for
    // n >= 2; the single n = 1 seam is the documented finding
    let rlucas_ok = probe
        .findings
        .iter()
        .filter(|f| f.kind == "rlucas")
        .all(|f| f.shifted_failures == vec![1]);
    ids.push(if rlucas_ok {
        IdentityReport::pass("recurrence-5.3-rlucas-shifted", format!("n=2..{}", n_max - 1))
    } else {
        IdentityReport::fail(
            "recurrence-5.3-rlucas-shifted",
            format!("n=2..{}", n_max - 1),
            "shifted coefficient law",
            "probe findings",
            "shifted law holds for all n >= 2",
        )
    });

    ids.push(sweep(
        "little-qjacobi-5.8-5.9",
        "index<=11, 5 samples".into(),
        || {
            for m in 0..=5 {
                match families::check_little_qjacobi_relations(m, &jacobi_samples) {
                    Ok(true) => {}
                    Ok(false) => {
                        return Some((
                            format!("pair=({},{})", 2 * m, 2 * m + 1),
                            "factorization".into(),
                            "family member".into(),
                        ))
                    }
                    Err(e) => return Some((format!("pair index {m}"), e.to_string(), "-".into())),
                }
            }
            None
        },
    ));

    Ok(SuiteOutput {
        identities: ids,
        recurrence_probe: Some(probe),
        ..Default::default()
    })
}

// ---------------------------------------------------------------------------
// fourier
// ---------------------------------------------------------------------------

fn fourier_suite(opts: &SuiteOptions) -> Result<SuiteOutput> {
    let rule = QuadratureRule::gauss_hermite(opts.nodes);
    let n_max = opts.n_max.min(6);
    let mut results = Vec::new();
    let mut ids = Vec::new();

    for (id, kind) in [
        ("fourier-4.7-qfib", FamilyKind::QFib),
        ("fourier-4.13-qlucas", FamilyKind::QLucas),
    ] {
        let mut failure: Option<(String, String, String)> = None;
        'grid: for n in 0..=n_max {
            for q in [0.3, 0.64, 0.9] {
                for y in [-2.0, 0.0, 1.5] {
                    for a in [1.0, -2.0] {
                        for s in [1.0, 2.0] {
                            let case = FourierCase::new(kind, n, a, s, q, y)?;
                            match fourier::verify_fourier_theorem(&case, &rule, opts.tol) {
                                Ok(r) => results.push(r),
                                Err(Error::TheoremViolation(r)) => {
                                    failure = Some((
                                        format!("n={n} a={a} s={s} q={q} y={y}"),
                                        format!("lhs={} (im {})", r.lhs_re, r.lhs_im),
                                        format!("rhs={} oracle={}", r.rhs, r.oracle),
                                    ));
                                    results.push(*r);
                                    break 'grid;
                                }
                                Err(e) => return Err(e),
                            }
                        }
                    }
                }
            }
        }
        let range = format!("n=0..{n_max}, 36 points each, {} nodes", opts.nodes);
        ids.push(match failure {
            None => IdentityReport::pass(id, range),
            Some((p, l, r)) => IdentityReport::fail(id, range, p, l, r),
        });
    }

    Ok(SuiteOutput {
        identities: ids,
        fourier: results,
        ..Default::default()
    })
}
