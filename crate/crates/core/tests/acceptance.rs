//! Acceptance gate. One driver runs every criterion, prints a pass/fail
//! line for each and fails if any criterion fails.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use gwspectra::graph::{self, Graph, SquareMatrix, WheelParams};
use gwspectra::integrality::{
    alpha_m_set, classify_all_dq, is_dq_integral, is_join_dl_integral, m_upper_bound, parity_check,
    LISTED_SPORADIC,
};
use gwspectra::oracle::{self, NumericSpectrum, DEFAULT_TOLERANCE};
use gwspectra::spectra::{self, RegularPart, Spectrum};
use gwspectra::verify::{gw_dq_explicit, trace_matches, RegularShape};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

const SEED: u64 = 0x5eed_2024;
const MATCH_TOL: f64 = 1e-7;
const INTEGRAL_TOL: f64 = 1e-6;

struct Outcome {
    id: &'static str,
    title: &'static str,
    passed: bool,
    detail: String,
    elapsed: Duration,
}

fn run(
    id: &'static str,
    title: &'static str,
    limit: Option<Duration>,
    f: impl FnOnce() -> (bool, String),
) -> Outcome {
    let start = Instant::now();
    let (mut passed, mut detail) = f();
    let elapsed = start.elapsed();
    if let Some(limit) = limit {
        if elapsed > limit {
            passed = false;
            detail.push_str(&format!("; runtime {:.2?} exceeds {:.0?}", elapsed, limit));
        }
    }
    Outcome {
        id,
        title,
        passed,
        detail,
        elapsed,
    }
}

/// Facts gathered while checking one graph, reused by the property criterion.
#[derive(Default)]
struct Observations {
    spectra: usize,
    trace_failures: Vec<String>,
    laplacians: usize,
    laplacian_failures: Vec<String>,
}

impl Observations {
    fn merge(&mut self, other: Observations) {
        self.spectra += other.spectra;
        self.trace_failures.extend(other.trace_failures);
        self.laplacians += other.laplacians;
        self.laplacian_failures.extend(other.laplacian_failures);
    }

    fn trace(&mut self, label: &str, exact: &Spectrum, mat: &SquareMatrix) {
        self.spectra += 1;
        if !trace_matches(exact, mat) {
            self.trace_failures.push(label.to_string());
        }
    }

    fn laplacian(&mut self, label: &str, numeric: &NumericSpectrum) {
        self.laplacians += 1;
        let zeros = numeric
            .values
            .iter()
            .filter(|x| x.abs() <= MATCH_TOL)
            .count();
        let psd = numeric.values.iter().all(|&x| x >= -MATCH_TOL);
        if !psd || zeros != 1 {
            self.laplacian_failures.push(label.to_string());
        }
    }
}

fn wheel(a: u64, m: u64, n: u64) -> WheelParams {
    WheelParams::new(a, m, n).unwrap()
}

fn jacobi(mat: &SquareMatrix) -> NumericSpectrum {
    oracle::eigenvalues_symmetric(mat, DEFAULT_TOLERANCE).unwrap()
}

fn fmt_triples<'a>(ts: impl IntoIterator<Item = &'a (u64, u64, u64)>) -> String {
    let s: Vec<String> = ts
        .into_iter()
        .map(|(a, m, n)| format!("({a},{m},{n})"))
        .collect();
    if s.is_empty() {
        "none".into()
    } else {
        s.join(" ")
    }
}

fn classification_reproduction() -> (bool, String) {
    let grid = classify_all_dq(11, 35, &[3, 4, 6]).unwrap();
    let found: BTreeSet<(u64, u64, u64)> = grid
        .sporadic
        .iter()
        .map(|r| (r.params.a(), r.params.m(), r.params.n()))
        .collect();
    let listed: BTreeSet<(u64, u64, u64)> = LISTED_SPORADIC.iter().copied().collect();
    let family: Vec<u64> = grid.family_members.iter().map(|r| r.params.m()).collect();
    let family_ok = family == (1..=35).collect::<Vec<_>>();
    let passed = family_ok && found == listed;
    (
        passed,
        format!(
            "family (1,m,3) for m=1..35: {}; {} sporadic found vs {} listed; extra: {}; missing: {}",
            if family_ok { "complete" } else { "incomplete" },
            found.len(),
            listed.len(),
            fmt_triples(found.difference(&listed)),
            fmt_triples(listed.difference(&found)),
        ),
    )
}

fn extended_bounds() -> (bool, String) {
    let mut violations = Vec::new();
    let mut tested = 0;
    for n in [3, 4, 6] {
        let bound = m_upper_bound(n).unwrap();
        for a in 2..=100 {
            for m in bound + 1..=bound + 200 {
                tested += 1;
                if is_dq_integral(wheel(a, m, n)).verdict {
                    violations.push((a, m, n));
                }
            }
        }
    }
    (
        violations.is_empty(),
        format!(
            "{tested} triples beyond the m bounds 2/8/31, violations: {}",
            fmt_triples(&violations)
        ),
    )
}

struct GwCheck {
    deviation: f64,
    dq_ok: bool,
    dl_ok: bool,
    plus_two_rejected: Option<bool>,
    obs: Observations,
}

fn check_gw(p: WheelParams) -> GwCheck {
    let g = graph::generalized_wheel(p).unwrap();
    let label = format!("GW{p}");
    let mut obs = Observations::default();

    let dq = graph::dq_matrix(&g).unwrap();
    let dq_num = jacobi(&dq);
    let dq_exact = spectra::gw_dq_spectrum(p).unwrap();
    let dq_cmp = oracle::compare_spectra(&dq_exact, &dq_num, MATCH_TOL).unwrap();
    obs.trace(&label, &dq_exact, &dq);
    let plus_two_rejected = (p.m() >= 2).then(|| {
        let plus_two = gw_dq_explicit(p, 2).unwrap();
        !oracle::compare_spectra(&plus_two, &dq_num, MATCH_TOL)
            .unwrap()
            .passed
    });

    let dl = graph::dl_matrix(&g).unwrap();
    let dl_num = jacobi(&dl);
    let dl_exact = spectra::gw_dl_spectrum(p).unwrap();
    let dl_cmp = oracle::compare_spectra(&dl_exact, &dl_num, MATCH_TOL).unwrap();
    obs.trace(&label, &dl_exact, &dl);
    obs.laplacian(&label, &dl_num);

    GwCheck {
        deviation: dq_cmp.max_deviation.max(dl_cmp.max_deviation),
        dq_ok: dq_cmp.passed,
        dl_ok: dl_cmp.passed,
        plus_two_rejected,
        obs,
    }
}

fn random_large_triples(count: usize) -> Vec<WheelParams> {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut out = Vec::new();
    while out.len() < count {
        let a = rng.gen_range(1..=12);
        let m = rng.gen_range(1..=30);
        let n = rng.gen_range(3..=80);
        let order = a * m + n;
        if order > 36 && order <= 120 {
            out.push(wheel(a, m, n));
        }
    }
    out
}

fn closed_form_vs_oracle(obs: &mut Observations) -> (bool, String) {
    let mut triples = Vec::new();
    for a in 1..=4 {
        for m in 1..=6 {
            for n in 3..=12 {
                triples.push(wheel(a, m, n));
            }
        }
    }
    let grid_len = triples.len();
    triples.extend(random_large_triples(50));
    let results: Vec<GwCheck> = triples.par_iter().map(|&p| check_gw(p)).collect();

    let mut failures = Vec::new();
    let mut worst: f64 = 0.0;
    let (mut plus_two_total, mut plus_two_rejected) = (0, 0);
    for (p, r) in triples.iter().zip(results) {
        worst = worst.max(r.deviation);
        if !r.dq_ok || !r.dl_ok {
            failures.push(format!("GW{p}"));
        }
        if let Some(rej) = r.plus_two_rejected {
            plus_two_total += 1;
            plus_two_rejected += usize::from(rej);
        }
        obs.merge(r.obs);
    }
    // the +2 constant must be refuted on every triple where the family exists
    let plus_two_refuted = plus_two_total > 0 && plus_two_rejected == plus_two_total;
    (
        failures.is_empty() && plus_two_refuted,
        format!(
            "{grid_len} grid + 50 random triples, D^Q and D^L max deviation {worst:.2e} (tol 1e-7), mismatches: {}; \
             +2 constant refuted on {plus_two_rejected}/{plus_two_total} triples with m >= 2",
            if failures.is_empty() { "none".to_string() } else { failures.join(" ") }
        ),
    )
}

fn dl_classification(obs: &mut Observations) -> (bool, String) {
    let mut triples = Vec::new();
    for a in 1..=5 {
        for m in 1..=5 {
            for n in 3..=12 {
                triples.push(wheel(a, m, n));
            }
        }
    }
    let results: Vec<(bool, Observations)> = triples
        .par_iter()
        .map(|&p| {
            let g = graph::generalized_wheel(p).unwrap();
            let dl = graph::dl_matrix(&g).unwrap();
            let num = jacobi(&dl);
            let integral = num
                .values
                .iter()
                .all(|x| (x - x.round()).abs() <= INTEGRAL_TOL);
            let mut o = Observations::default();
            o.trace(&format!("GW{p}"), &spectra::gw_dl_spectrum(p).unwrap(), &dl);
            o.laplacian(&format!("GW{p}"), &num);
            (integral == matches!(p.n(), 3 | 4 | 6), o)
        })
        .collect();
    let mut disagreements = Vec::new();
    for (p, (ok, o)) in triples.iter().zip(results) {
        if !ok {
            disagreements.push(format!("GW{p}"));
        }
        obs.merge(o);
    }
    (
        disagreements.is_empty(),
        format!(
            "{} triples, numeric D^L integrality vs n in {{3,4,6}}: {} disagreements",
            triples.len(),
            disagreements.len()
        ),
    )
}

fn alpha_equivalence() -> (bool, String) {
    let mut mismatches = Vec::new();
    let mut solutions = 0;
    for n in [3, 4, 6] {
        let bound = m_upper_bound(n).unwrap();
        for a in 2..=50 {
            let alpha = alpha_m_set(a, n).unwrap();
            let scan: BTreeSet<u64> = (1..=bound)
                .filter(|&m| is_dq_integral(wheel(a, m, n)).verdict)
                .collect();
            solutions += scan.len();
            if alpha != scan {
                mismatches.push(format!("a={a},n={n}"));
            }
        }
    }
    (
        mismatches.is_empty(),
        format!(
            "a in [2,50], n in {{3,4,6}}: {solutions} integral m values, {} mismatched sets",
            mismatches.len()
        ),
    )
}

fn join_pairs() -> Vec<(RegularShape, RegularShape)> {
    let mut pairs = Vec::new();
    for p in 1..=5 {
        pairs.push((RegularShape::Complete(p), RegularShape::Cycle(5)));
        pairs.push((RegularShape::Complete(p * 3), RegularShape::Cycle(6)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x6a);
    let draw = |rng: &mut ChaCha8Rng| match rng.gen_range(0..3) {
        0 => RegularShape::Complete(rng.gen_range(1..=20)),
        1 => RegularShape::Cycle(rng.gen_range(3..=20)),
        _ => RegularShape::CompleteCopies(rng.gen_range(2..=5), rng.gen_range(1..=6)),
    };
    while pairs.len() < 30 {
        let (x, y) = (draw(&mut rng), draw(&mut rng));
        if x.order() + y.order() <= 40 {
            pairs.push((x, y));
        }
    }
    pairs
}

fn join_generality(obs: &mut Observations) -> (bool, String) {
    let pairs = join_pairs();
    let results: Vec<(bool, bool, Observations)> = pairs
        .par_iter()
        .map(|&(x, y)| {
            let (px, py): (RegularPart, RegularPart) = (x.part().unwrap(), y.part().unwrap());
            let g: Graph = graph::join(&x.graph().unwrap(), &y.graph().unwrap()).unwrap();
            let dl = graph::dl_matrix(&g).unwrap();
            let predicted = is_join_dl_integral(&px, &py);
            let numeric = oracle::numeric_is_integral(&dl, INTEGRAL_TOL).unwrap();
            let mut o = Observations::default();
            let label = format!("{x}∇{y}");
            o.trace(&label, &spectra::dl_join_spectrum(&px, &py).unwrap(), &dl);
            o.laplacian(&label, &jacobi(&dl));
            (predicted, numeric, o)
        })
        .collect();
    let mut disagreements = Vec::new();
    let (mut c5_integral, mut c6_non_integral) = (0, 0);
    let mut integral = 0;
    for (&(x, y), (predicted, numeric, o)) in pairs.iter().zip(results) {
        if predicted != numeric {
            disagreements.push(format!("{x}∇{y}"));
        }
        integral += usize::from(numeric);
        if let (RegularShape::Complete(_), RegularShape::Cycle(5)) = (x, y) {
            c5_integral += usize::from(numeric);
        }
        if let (RegularShape::Complete(_), RegularShape::Cycle(6)) = (x, y) {
            c6_non_integral += usize::from(!numeric);
        }
        obs.merge(o);
    }
    (
        disagreements.is_empty() && c5_integral == 0 && c6_non_integral == 0,
        format!(
            "{} pairs ({integral} D^L-integral), {} disagreements; K_p∇C_5 integral {c5_integral} times, \
             K_p∇C_6 non-integral {c6_non_integral} times",
            pairs.len(),
            disagreements.len()
        ),
    )
}

fn property_suites(obs: &Observations) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let samples = 1_000_000;
    let parity_failures = (0..samples)
        .filter(|_| {
            let (a, m, n) = (
                rng.gen_range(1..=1_000_000),
                rng.gen_range(1..=1_000_000),
                rng.gen_range(3..=1_000_000),
            );
            !parity_check(a, m, n)
        })
        .count();
    let passed =
        parity_failures == 0 && obs.trace_failures.is_empty() && obs.laplacian_failures.is_empty();
    (
        passed,
        format!(
            "parity {parity_failures} failures in {samples}; trace identity {} failures in {} spectra; \
             D^L PSD with single zero {} failures in {} graphs",
            obs.trace_failures.len(),
            obs.spectra,
            obs.laplacian_failures.len(),
            obs.laplacians
        ),
    )
}

#[test]
fn acceptance() {
    let mut obs = Observations::default();
    let secs = Duration::from_secs;
    let outcomes = vec![
        run(
            "AC1",
            "classification reproduction",
            Some(secs(1)),
            classification_reproduction,
        ),
        run("AC2", "extended m bounds", Some(secs(10)), extended_bounds),
        run("AC3", "closed forms vs Jacobi", Some(secs(30)), || {
            closed_form_vs_oracle(&mut obs)
        }),
        run("AC4", "D^L classification", None, || {
            dl_classification(&mut obs)
        }),
        run(
            "AC5",
            "alpha enumeration vs scan",
            Some(secs(5)),
            alpha_equivalence,
        ),
        run("AC6", "join D^L integrality", None, || {
            join_generality(&mut obs)
        }),
    ];
    let mut outcomes = outcomes;
    outcomes.push(run("AC7", "property suites", None, || {
        property_suites(&obs)
    }));

    println!();
    for o in &outcomes {
        println!(
            "[{}] {} {}: {} ({:.2?})",
            if o.passed { "PASS" } else { "FAIL" },
            o.id,
            o.title,
            o.detail,
            o.elapsed
        );
    }
    let failed: Vec<&str> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert!(
        failed.is_empty(),
        "acceptance criteria failed: {}",
        failed.join(", ")
    );
}
