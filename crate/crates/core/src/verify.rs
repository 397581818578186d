//! Verification suites that cross-check the closed forms, the integrality
//! verdicts and the number-theoretic enumerations against each other and
//! against the Jacobi oracle. Each suite returns a list of named checks.

use std::collections::BTreeSet;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graph::{self, Graph, SquareMatrix, WheelParams};
use crate::integrality::{
    alpha_m_set, classify_all_dq, dq_pair_center, is_dq_integral, is_gw_dl_integral,
    is_join_dl_integral, m_upper_bound, parity_check, ALL_SPORADIC, LISTED_SPORADIC,
};
use crate::oracle::{self, NumericSpectrum, DEFAULT_TOLERANCE, INTEGRAL_TOLERANCE};
use crate::spectra::{self, ExactEigenvalue, MatrixKind, RegularPart, Sign, Spectrum};

/// Absolute closed-form-vs-oracle tolerance, scaled by `max(1, max |entry|)`.
pub const MATCH_TOLERANCE: f64 = 1e-7;
/// Relative tolerance of the eigenvalue-sum vs trace identity.
pub const TRACE_TOLERANCE: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    JoinDq,
    JoinDl,
    GwDq,
    GwDl,
    Classification,
    AlphaEquiv,
    Parity,
    Bounds,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::JoinDq,
        Suite::JoinDl,
        Suite::GwDq,
        Suite::GwDl,
        Suite::Classification,
        Suite::AlphaEquiv,
        Suite::Parity,
        Suite::Bounds,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::JoinDq => "join-dq",
            Suite::JoinDl => "join-dl",
            Suite::GwDq => "gw-dq",
            Suite::GwDl => "gw-dl",
            Suite::Classification => "classification",
            Suite::AlphaEquiv => "alpha-equiv",
            Suite::Parity => "parity",
            Suite::Bounds => "bounds",
        }
    }

    pub fn from_name(s: &str) -> Option<Suite> {
        Suite::ALL.into_iter().find(|x| x.name() == s)
    }

    /// Whether the suite builds graphs bounded by `max_order`.
    pub fn uses_max_order(self) -> bool {
        matches!(
            self,
            Suite::JoinDq | Suite::JoinDl | Suite::GwDq | Suite::GwDl
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteOptions {
    pub max_order: u64,
    pub seed: u64,
    pub parity_samples: usize,
    /// Randomly drawn pairs for the join suites.
    pub join_samples: usize,
}

impl Default for SuiteOptions {
    fn default() -> Self {
        SuiteOptions {
            max_order: 36,
            seed: 0,
            parity_samples: 1_000_000,
            join_samples: 120,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub suite: Suite,
    pub checks: Vec<Check>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(
                f,
                "[{}] {}: {} ({})",
                if c.passed { "PASS" } else { "FAIL" },
                self.suite.name(),
                c.name,
                c.detail
            )?;
        }
        Ok(())
    }
}

/// A regular graph from the families the join suites draw on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RegularShape {
    Complete(u64),
    Cycle(u64),
    CompleteCopies(u64, u64),
    CycleCopies(u64, u64),
}

impl RegularShape {
    pub fn order(self) -> u64 {
        match self {
            RegularShape::Complete(p) | RegularShape::Cycle(p) => p,
            RegularShape::CompleteCopies(k, p) | RegularShape::CycleCopies(k, p) => k * p,
        }
    }

    pub fn graph(self) -> Result<Graph> {
        let u = |v: u64| usize::try_from(v).map_err(|_| Error::Overflow("shape size"));
        match self {
            RegularShape::Complete(p) => graph::complete(u(p)?),
            RegularShape::Cycle(q) => graph::cycle(u(q)?),
            RegularShape::CompleteCopies(k, p) => graph::copies(u(k)?, &graph::complete(u(p)?)?),
            RegularShape::CycleCopies(k, q) => graph::copies(u(k)?, &graph::cycle(u(q)?)?),
        }
    }

    pub fn part(self) -> Result<RegularPart> {
        match self {
            RegularShape::Complete(p) => RegularPart::complete(p),
            RegularShape::Cycle(q) => RegularPart::cycle(q),
            RegularShape::CompleteCopies(k, p) => RegularPart::complete_copies(k, p),
            RegularShape::CycleCopies(k, q) => RegularPart::copies(k, &RegularPart::cycle(q)?),
        }
    }
}

impl fmt::Display for RegularShape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RegularShape::Complete(p) => write!(f, "K{p}"),
            RegularShape::Cycle(q) => write!(f, "C{q}"),
            RegularShape::CompleteCopies(k, p) => write!(f, "{k}K{p}"),
            RegularShape::CycleCopies(k, q) => write!(f, "{k}C{q}"),
        }
    }
}

/// Every shape of order at most `max_order`.
pub fn shapes_up_to(max_order: u64) -> Vec<RegularShape> {
    let mut out = Vec::new();
    for p in 1..=max_order {
        out.push(RegularShape::Complete(p));
        if p >= 3 {
            out.push(RegularShape::Cycle(p));
        }
        for k in 2..=max_order / p {
            out.push(RegularShape::CompleteCopies(k, p));
            if p >= 3 {
                out.push(RegularShape::CycleCopies(k, p));
            }
        }
    }
    out
}

/// Deterministic pairs with total order in `[2, max_order]`: every pair up
/// to order 10, then `samples` random ones.
pub fn join_pairs(max_order: u64, samples: usize, seed: u64) -> Vec<(RegularShape, RegularShape)> {
    let shapes = shapes_up_to(max_order.saturating_sub(1));
    let mut out: Vec<_> = shapes
        .iter()
        .flat_map(|&x| shapes.iter().map(move |&y| (x, y)))
        .filter(|(x, y)| x.order() + y.order() <= max_order.min(10))
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut attempts = 0;
    let target = out.len() + samples;
    while out.len() < target && attempts < samples * 1000 && !shapes.is_empty() {
        attempts += 1;
        let x = shapes[rng.gen_range(0..shapes.len())];
        let y = shapes[rng.gen_range(0..shapes.len())];
        if x.order() + y.order() <= max_order {
            out.push((x, y));
        }
    }
    out
}

/// Every `(a, m, n)` with `a*m + n ≤ max_order`, sorted.
pub fn wheel_grid(max_order: u64) -> Vec<WheelParams> {
    let mut out = Vec::new();
    for a in 1..=max_order {
        for m in 1..=max_order / a {
            for n in 3..=max_order.saturating_sub(a * m) {
                out.push(WheelParams::new(a, m, n).expect("grid parameters are valid"));
            }
        }
    }
    out
}

/// The D^Q spectrum of `GW(a, m, n)` assembled term by term from the
/// explicit eigenvalue families, with the constant of the `a(m-1)`-fold
/// family `(2a-1)m + n + second_family_offset` left adjustable. The
/// correct offset is `-2`.
pub fn gw_dq_explicit(p: WheelParams, second_family_offset: i64) -> Result<Spectrum> {
    let (a, m, n) = (p.a() as i64, p.m() as i64, p.n() as i64);
    let mut items = vec![
        (ExactEigenvalue::Integer(2 * (a - 1) * m + n - 2), p.a() - 1),
        (
            ExactEigenvalue::Integer((2 * a - 1) * m + n + second_family_offset),
            p.a() * (p.m() - 1),
        ),
    ];
    for j in 1..p.n() {
        items.push((
            ExactEigenvalue::cosine(a * m + 2 * n - 6, Sign::Minus, j, p.n())?,
            1,
        ));
    }
    let center = i64::try_from(dq_pair_center(p)).map_err(|_| Error::Overflow("pair center"))?;
    let t = crate::integrality::dq_discriminant(p);
    items.push((ExactEigenvalue::surd(center, t, Sign::Plus)?, 1));
    items.push((ExactEigenvalue::surd(center, t, Sign::Minus)?, 1));
    Ok(Spectrum::from_multiset(items))
}

fn oracle_of(mat: &SquareMatrix) -> Result<NumericSpectrum> {
    oracle::eigenvalues_only(mat, DEFAULT_TOLERANCE)
}

fn scaled_tolerance(mat: &SquareMatrix) -> f64 {
    MATCH_TOLERANCE * (mat.max_abs().max(1) as f64)
}

/// Eigenvalue sum equals the trace: exactly for integral spectra,
/// relatively otherwise.
pub fn trace_matches(spec: &Spectrum, mat: &SquareMatrix) -> bool {
    let trace = mat.trace();
    match spec.integer_sum() {
        Some(s) => s == i128::from(trace),
        None => {
            (spec.numeric_sum() - trace as f64).abs()
                <= TRACE_TOLERANCE * (trace.abs().max(1) as f64)
        }
    }
}

/// Tally of one family of checks run over many inputs.
#[derive(Default)]
struct Tally {
    total: usize,
    failures: usize,
    first_failure: Option<String>,
    worst: f64,
}

impl Tally {
    fn record(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.total += 1;
        if !ok {
            self.failures += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn into_check(self, name: &str, unit: &str) -> Check {
        let mut detail = format!("{} {unit}, {} failures", self.total, self.failures);
        if self.worst > 0.0 {
            detail.push_str(&format!(", max deviation {:.3e}", self.worst));
        }
        if let Some(f) = self.first_failure {
            detail.push_str(&format!(", first: {f}"));
        }
        Check::new(name, self.failures == 0, detail)
    }
}

struct CaseOutcome {
    label: String,
    deviation: f64,
    matches: bool,
    trace_ok: bool,
    /// closed-form integrality, oracle integrality, predicate verdict
    integrality: (bool, bool, Option<bool>),
    laplacian_ok: Option<bool>,
    explicit_agrees: Option<bool>,
    plus_two_refuted: Option<bool>,
    witness_ok: Option<bool>,
}

fn check_case(
    label: String,
    kind: MatrixKind,
    exact: &Spectrum,
    mat: &SquareMatrix,
    numeric: &NumericSpectrum,
    verdict: Option<bool>,
) -> Result<CaseOutcome> {
    let cmp = oracle::compare_spectra(exact, numeric, scaled_tolerance(mat))?;
    let numeric_integral = numeric
        .values
        .iter()
        .all(|x| (x - x.round()).abs() <= INTEGRAL_TOLERANCE);
    let laplacian_ok = (kind == MatrixKind::DistanceLaplacian).then(|| {
        let zero_tol = scaled_tolerance(mat);
        let zeros = numeric
            .values
            .iter()
            .filter(|x| x.abs() <= zero_tol)
            .count();
        let psd = numeric.values.iter().all(|&x| x >= -zero_tol);
        psd && zeros == 1 && exact.multiplicity(&ExactEigenvalue::Integer(0)) == 1
    });
    Ok(CaseOutcome {
        label,
        deviation: cmp.max_deviation,
        matches: cmp.passed,
        trace_ok: trace_matches(exact, mat),
        integrality: (exact.is_integral(), numeric_integral, verdict),
        laplacian_ok,
        explicit_agrees: None,
        plus_two_refuted: None,
        witness_ok: None,
    })
}

fn summarize(
    suite: Suite,
    kind: MatrixKind,
    unit: &str,
    outcomes: Vec<CaseOutcome>,
) -> SuiteReport {
    let mut matches = Tally::default();
    let mut traces = Tally::default();
    let mut integrality = Tally::default();
    let mut laplacian = Tally::default();
    let mut explicit = Tally::default();
    let mut witness = Tally::default();
    let mut plus_two_total = 0;
    let mut plus_two_rejected = 0;
    for o in &outcomes {
        matches.worst = matches.worst.max(o.deviation);
        matches.record(o.matches, || {
            format!("{} deviates by {:.3e}", o.label, o.deviation)
        });
        traces.record(o.trace_ok, || {
            format!("{} eigenvalue sum differs from trace", o.label)
        });
        let (closed, numeric, verdict) = o.integrality;
        let agree = closed == numeric && verdict.is_none_or(|v| v == closed);
        integrality.record(agree, || {
            format!(
                "{}: closed form {closed}, oracle {numeric}, predicate {verdict:?}",
                o.label
            )
        });
        if let Some(ok) = o.laplacian_ok {
            laplacian.record(ok, || format!("{} is not PSD with a single zero", o.label));
        }
        if let Some(ok) = o.explicit_agrees {
            explicit.record(ok, || {
                format!("{}: join route and explicit families differ", o.label)
            });
        }
        if let Some(ok) = o.witness_ok {
            witness.record(ok, || {
                format!("{}: witness does not reproduce the surd pair", o.label)
            });
        }
        if let Some(rejected) = o.plus_two_refuted {
            plus_two_total += 1;
            plus_two_rejected += usize::from(rejected);
        }
    }
    let mut checks = vec![
        matches.into_check(
            &format!("closed-form {} spectrum matches Jacobi", kind.name()),
            unit,
        ),
        traces.into_check("eigenvalue sum equals trace", unit),
        integrality.into_check("exact and numeric integrality agree", unit),
    ];
    if laplacian.total > 0 {
        checks.push(
            laplacian.into_check("positive semidefinite with a single zero eigenvalue", unit),
        );
    }
    if explicit.total > 0 {
        checks.push(explicit.into_check("join route equals explicit eigenvalue families", unit));
    }
    if witness.total > 0 {
        checks.push(witness.into_check("square-root witness reproduces the integer pair", unit));
    }
    if plus_two_total > 0 {
        checks.push(Check::new(
            "second family with constant +2 is refuted by the oracle",
            plus_two_rejected > 0,
            format!(
                "{plus_two_rejected} of {plus_two_total} triples with m >= 2 disagree with Jacobi"
            ),
        ));
    }
    SuiteReport { suite, checks }
}

fn gw_case(p: WheelParams, kind: MatrixKind) -> Result<CaseOutcome> {
    let g = graph::generalized_wheel(p)?;
    let mat = kind.matrix(&g)?;
    let exact = kind.gw_spectrum(p)?;
    let verdict = match kind {
        MatrixKind::DistanceSignlessLaplacian => Some(is_dq_integral(p).verdict),
        MatrixKind::DistanceLaplacian => Some(is_gw_dl_integral(p)),
        _ => None,
    };
    let numeric = oracle_of(&mat)?;
    let mut out = check_case(format!("GW{p}"), kind, &exact, &mat, &numeric, verdict)?;
    if kind == MatrixKind::DistanceSignlessLaplacian {
        out.explicit_agrees = Some(gw_dq_explicit(p, -2)? == exact);
        if p.m() >= 2 {
            let plus_two = gw_dq_explicit(p, 2)?;
            out.plus_two_refuted =
                Some(!oracle::compare_spectra(&plus_two, &numeric, scaled_tolerance(&mat))?.passed);
        }
        let w = is_dq_integral(p);
        out.witness_ok = Some(match w.c {
            Some(c) => {
                let center = dq_pair_center(p);
                let hi = ExactEigenvalue::Integer(((center + c) / 2) as i64);
                let lo = ExactEigenvalue::Integer(((center - c) / 2) as i64);
                c * c == w.t && exact.multiplicity(&hi) >= 1 && exact.multiplicity(&lo) >= 1
            }
            None => true,
        });
    }
    Ok(out)
}

fn join_case(x: RegularShape, y: RegularShape, kind: MatrixKind) -> Result<CaseOutcome> {
    let (px, py) = (x.part()?, y.part()?);
    let g = graph::join(&x.graph()?, &y.graph()?)?;
    let mat = kind.matrix(&g)?;
    let exact = kind.join_spectrum(&px, &py)?;
    let verdict = (kind == MatrixKind::DistanceLaplacian).then(|| is_join_dl_integral(&px, &py));
    let numeric = oracle_of(&mat)?;
    check_case(format!("{x}∇{y}"), kind, &exact, &mat, &numeric, verdict)
}

fn run_cases<T: Sync>(
    inputs: &[T],
    f: impl Fn(&T) -> Result<CaseOutcome> + Sync + Send,
) -> Result<Vec<CaseOutcome>> {
    inputs.par_iter().map(f).collect()
}

pub fn run_suite(suite: Suite, opts: &SuiteOptions) -> Result<SuiteReport> {
    if suite.uses_max_order() && opts.max_order < 4 {
        return Err(Error::InvalidParameter(format!(
            "suite {} needs max-order >= 4, got {}",
            suite.name(),
            opts.max_order
        )));
    }
    match suite {
        Suite::GwDq | Suite::GwDl => {
            let kind = if suite == Suite::GwDq {
                MatrixKind::DistanceSignlessLaplacian
            } else {
                MatrixKind::DistanceLaplacian
            };
            let grid = wheel_grid(opts.max_order);
            let outcomes = run_cases(&grid, |&p| gw_case(p, kind))?;
            Ok(summarize(suite, kind, "triples", outcomes))
        }
        Suite::JoinDq | Suite::JoinDl => {
            let kind = if suite == Suite::JoinDq {
                MatrixKind::DistanceSignlessLaplacian
            } else {
                MatrixKind::DistanceLaplacian
            };
            let pairs = join_pairs(opts.max_order, opts.join_samples, opts.seed);
            let outcomes = run_cases(&pairs, |&(x, y)| join_case(x, y, kind))?;
            Ok(summarize(suite, kind, "pairs", outcomes))
        }
        Suite::Classification => classification_suite(opts),
        Suite::AlphaEquiv => alpha_equivalence_suite(2..=50),
        Suite::Bounds => bounds_suite(2..=100, 200),
        Suite::Parity => Ok(parity_suite(opts.parity_samples, opts.seed)),
    }
}

fn classification_suite(opts: &SuiteOptions) -> Result<SuiteReport> {
    let grid = classify_all_dq(11, 35, &[3, 4, 6])?;
    let found: Vec<(u64, u64, u64)> = grid
        .sporadic
        .iter()
        .map(|r| (r.params.a(), r.params.m(), r.params.n()))
        .collect();
    let listed_found = LISTED_SPORADIC.iter().filter(|t| found.contains(t)).count();
    let unlisted: Vec<String> = found
        .iter()
        .filter(|t| !LISTED_SPORADIC.contains(t))
        .map(|(a, m, n)| format!("({a},{m},{n})"))
        .collect();
    let confirmed = grid
        .sporadic
        .par_iter()
        .map(|r| -> Result<bool> {
            let mat = graph::dq_matrix(&graph::generalized_wheel(r.params)?)?;
            oracle::numeric_is_integral(&mat, INTEGRAL_TOLERANCE)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut checks = vec![
        Check::new(
            "sporadic triples on a<=11, m<=35, n in {3,4,6}",
            found == ALL_SPORADIC,
            format!("{} found, {} expected", found.len(), ALL_SPORADIC.len()),
        ),
        Check::new(
            "every listed triple of S is found",
            listed_found == LISTED_SPORADIC.len(),
            format!(
                "{listed_found} of {}; also found outside S: {}",
                LISTED_SPORADIC.len(),
                unlisted.join(" ")
            ),
        ),
        Check::new(
            "Jacobi confirms every sporadic triple",
            confirmed.iter().all(|&c| c),
            format!(
                "{} of {} integral to 1e-6",
                confirmed.iter().filter(|&&c| c).count(),
                confirmed.len()
            ),
        ),
        Check::new(
            "family (1,m,3) integral for every m <= 35",
            grid.infinite_family && grid.family_members.len() == 35,
            format!("{} members", grid.family_members.len()),
        ),
    ];
    if opts.max_order >= 4 {
        let points = wheel_grid(opts.max_order);
        let disagreements: Vec<String> = points
            .par_iter()
            .map(|&p| -> Result<Option<String>> {
                let mat = graph::dq_matrix(&graph::generalized_wheel(p)?)?;
                let numeric = oracle::numeric_is_integral(&mat, INTEGRAL_TOLERANCE)?;
                let exact = is_dq_integral(p).verdict;
                let closed = spectra::gw_dq_spectrum(p)?.is_integral();
                Ok((numeric != exact || closed != exact).then(|| format!("GW{p}")))
            })
            .collect::<Result<Vec<_>>>()?
            .into_iter()
            .flatten()
            .collect();
        checks.push(Check::new(
            "predicate, closed form and Jacobi agree on D^Q integrality",
            disagreements.is_empty(),
            format!(
                "{} triples with order <= {}, {} disagreements{}",
                points.len(),
                opts.max_order,
                disagreements.len(),
                disagreements
                    .first()
                    .map(|d| format!(", first {d}"))
                    .unwrap_or_default()
            ),
        ));
    }
    Ok(SuiteReport {
        suite: Suite::Classification,
        checks,
    })
}

/// Direct perfect-square scan of `m ∈ [1, m_upper_bound(n)]`.
pub fn scan_m_set(a: u64, n: u64) -> Result<BTreeSet<u64>> {
    let bound = m_upper_bound(n)?;
    let mut out = BTreeSet::new();
    for m in 1..=bound {
        if is_dq_integral(WheelParams::new(a, m, n)?).verdict {
            out.insert(m);
        }
    }
    Ok(out)
}

pub fn alpha_equivalence_suite(a_range: std::ops::RangeInclusive<u64>) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for n in [3, 4, 6] {
        let mut mismatches = Vec::new();
        let mut solutions = 0;
        for a in a_range.clone() {
            let alpha = alpha_m_set(a, n)?;
            let scan = scan_m_set(a, n)?;
            solutions += scan.len();
            if alpha != scan {
                mismatches.push(format!("a={a}: alpha {alpha:?} vs scan {scan:?}"));
            }
        }
        checks.push(Check::new(
            format!("alpha enumeration equals perfect-square scan for n={n}"),
            mismatches.is_empty(),
            format!(
                "a in {}..={}, {solutions} solutions, {} mismatches{}",
                a_range.start(),
                a_range.end(),
                mismatches.len(),
                mismatches
                    .first()
                    .map(|d| format!(", first {d}"))
                    .unwrap_or_default()
            ),
        ));
    }
    Ok(SuiteReport {
        suite: Suite::AlphaEquiv,
        checks,
    })
}

pub fn bounds_suite(a_range: std::ops::RangeInclusive<u64>, extra: u64) -> Result<SuiteReport> {
    let mut checks = Vec::new();
    for n in [3, 4, 6] {
        let bound = m_upper_bound(n)?;
        let mut violations = Vec::new();
        for a in a_range.clone() {
            for m in bound + 1..=bound + extra {
                if is_dq_integral(WheelParams::new(a, m, n)?).verdict {
                    violations.push((a, m));
                }
            }
        }
        checks.push(Check::new(
            format!("no integral m in ({bound}, {}] for n={n}", bound + extra),
            violations.is_empty(),
            format!(
                "a in {}..={}, {} violations{}",
                a_range.start(),
                a_range.end(),
                violations.len(),
                violations
                    .first()
                    .map(|v| format!(", first {v:?}"))
                    .unwrap_or_default()
            ),
        ));
    }
    Ok(SuiteReport {
        suite: Suite::Bounds,
        checks,
    })
}

pub fn parity_suite(samples: usize, seed: u64) -> SuiteReport {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..samples {
        let (a, m, n) = (
            rng.gen_range(1..=1000),
            rng.gen_range(1..=1000),
            rng.gen_range(1..=1000),
        );
        if !parity_check(a, m, n) {
            failures.push((a, m, n));
        }
    }
    SuiteReport {
        suite: Suite::Parity,
        checks: vec![Check::new(
            "pair numerator and discriminant share parity",
            failures.is_empty(),
            format!(
                "{samples} random triples in [1,1000]^3, {} failures",
                failures.len()
            ),
        )],
    }
}
