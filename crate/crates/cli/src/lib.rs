//! Command implementations behind the `gwspectra` binary.

pub mod record;
pub mod render;

use std::collections::BTreeSet;

use gwspectra::graph::{self, MAX_PARAM};
use gwspectra::integrality::{
    self, alpha_m_set, classify, classify_all_dq, is_gw_dl_integral, CaseLabel,
};
use gwspectra::oracle::{self, DEFAULT_TOLERANCE};
use gwspectra::spectra::{MatrixKind, Spectrum};
use gwspectra::verify::{self, Suite, SuiteOptions};
use gwspectra::{Error, Result, WheelParams};

use record::{
    eigenvalue_records, ClassifyRecord, EnumRow, EnumerateRecord, SpectrumRecord, VerifyRecord,
};

/// Largest graph the Jacobi oracle is run on from the command line.
pub const NUMERIC_MAX_ORDER: u64 = 500;
/// Largest `a_max * m_max * |n-values|` grid the scans accept.
pub const MAX_GRID: u64 = 10_000_000;
/// Largest `--max-order` accepted by the graph-building suites.
pub const MAX_SUITE_ORDER: u64 = 200;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exact,
    Numeric,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Which {
    Dq,
    Dl,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Scan,
    Alpha,
}

fn usage(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// Spectrum of one matrix of `GW(a, m, n)`; the exact spectrum is returned
/// alongside the record for rendering.
pub fn spectrum(
    p: WheelParams,
    kind: MatrixKind,
    mode: Mode,
) -> Result<(SpectrumRecord, Option<Spectrum>)> {
    let exact = match mode {
        Mode::Exact | Mode::Both => Some(kind.gw_spectrum(p)?),
        Mode::Numeric => None,
    };
    let numeric = match mode {
        Mode::Numeric | Mode::Both => {
            if p.order() > NUMERIC_MAX_ORDER {
                return Err(usage(format!(
                    "numeric mode supports order <= {NUMERIC_MAX_ORDER}, GW{p} has order {}",
                    p.order()
                )));
            }
            let mat = kind.matrix(&graph::generalized_wheel(p)?)?;
            Some(oracle::eigenvalues_only(&mat, DEFAULT_TOLERANCE)?)
        }
        Mode::Exact => None,
    };
    let max_deviation = match (&exact, &numeric) {
        (Some(e), Some(n)) => Some(oracle::compare_spectra(e, n, f64::INFINITY)?.max_deviation),
        _ => None,
    };
    let record = SpectrumRecord {
        order: p.order(),
        graph: p.into(),
        matrix: kind.name().into(),
        eigenvalues: exact.as_ref().map(eigenvalue_records),
        numeric: numeric.map(|n| n.values),
        max_deviation,
    };
    Ok((record, exact))
}

pub fn classify_triple(p: WheelParams, which: Which) -> ClassifyRecord {
    ClassifyRecord::new(&classify(p), which != Which::Dl, which != Which::Dq)
}

fn dq_row(r: &integrality::ClassificationResult) -> Option<EnumRow> {
    let case = r.matched_case?;
    Some(EnumRow {
        a: r.params.a(),
        m: Some(r.params.m()),
        n: r.params.n(),
        t: Some(r.dq.t),
        c: r.dq.c,
        verdict: "integral".into(),
        case: case.to_string(),
    })
}

fn family_marker() -> EnumRow {
    EnumRow {
        a: 1,
        m: None,
        n: 3,
        t: None,
        c: None,
        verdict: "integral".into(),
        case: CaseLabel::InfiniteFamily.to_string(),
    }
}

/// Sorted integral triples in `[1, a_max] × [1, m_max] × n_values`. The
/// `(1, m, 3)` family collapses to one marker row with `m = None`.
pub fn enumerate(
    which: Which,
    a_max: u64,
    m_max: u64,
    n_values: &[u64],
    method: Method,
) -> Result<EnumerateRecord> {
    if which == Which::Both {
        return Err(usage("enumerate takes --which dq or --which dl"));
    }
    if a_max < 1 || m_max < 1 {
        return Err(usage("--a-max and --m-max must be at least 1"));
    }
    if a_max > MAX_PARAM || m_max > MAX_PARAM {
        return Err(usage(format!(
            "--a-max and --m-max must be at most {MAX_PARAM}"
        )));
    }
    let ns: BTreeSet<u64> = n_values.iter().copied().collect();
    if ns.is_empty() {
        return Err(usage("--n-values must list at least one cycle length"));
    }
    if let Some(bad) = ns.iter().find(|&&n| !(3..=MAX_PARAM).contains(&n)) {
        return Err(usage(format!(
            "cycle length {bad} is outside [3, {MAX_PARAM}]"
        )));
    }
    let ns: Vec<u64> = ns.into_iter().collect();
    let grid = a_max
        .checked_mul(m_max)
        .and_then(|x| x.checked_mul(ns.len() as u64))
        .filter(|&g| g <= MAX_GRID);
    let method_name = match method {
        Method::Scan => "scan",
        Method::Alpha => "alpha",
    };

    let mut rows = match (which, method) {
        (Which::Dl, Method::Alpha) => {
            return Err(usage("--method alpha applies to --which dq only"))
        }
        (Which::Dq, Method::Alpha) if a_max < 2 => {
            return Err(usage("--method alpha needs --a-max >= 2"))
        }
        (_, Method::Scan) if grid.is_none() => {
            return Err(usage(format!(
                "grid a-max × m-max × |n-values| exceeds {MAX_GRID}"
            )));
        }
        (Which::Dl, Method::Scan) => {
            let mut rows = Vec::new();
            for a in 1..=a_max {
                for m in 1..=m_max {
                    for &n in &ns {
                        if is_gw_dl_integral(WheelParams::new(a, m, n)?) {
                            rows.push(EnumRow {
                                a,
                                m: Some(m),
                                n,
                                t: None,
                                c: None,
                                verdict: "integral".into(),
                                case: "n in {3,4,6}".into(),
                            });
                        }
                    }
                }
            }
            rows
        }
        (Which::Dq, Method::Scan) => {
            let g = classify_all_dq(a_max, m_max, &ns)?;
            let mut rows: Vec<EnumRow> = g.sporadic.iter().filter_map(dq_row).collect();
            if !g.family_members.is_empty() {
                rows.push(family_marker());
            }
            rows
        }
        (Which::Dq, Method::Alpha) => {
            // a = 1 sits outside the alpha parametrization and is scanned directly
            let g = classify_all_dq(1, m_max, &ns)?;
            let mut rows: Vec<EnumRow> = g.sporadic.iter().filter_map(dq_row).collect();
            if !g.family_members.is_empty() {
                rows.push(family_marker());
            }
            for a in 2..=a_max {
                for &n in ns.iter().filter(|n| matches!(n, 3 | 4 | 6)) {
                    for m in alpha_m_set(a, n)?.into_iter().filter(|&m| m <= m_max) {
                        rows.extend(dq_row(&classify(WheelParams::new(a, m, n)?)));
                    }
                }
            }
            rows
        }
        (Which::Both, _) => unreachable!("rejected above"),
    };
    rows.sort();
    Ok(EnumerateRecord {
        which: match which {
            Which::Dl => "dl",
            _ => "dq",
        }
        .into(),
        method: method_name.into(),
        rows,
    })
}

pub fn run_verify(suite: Suite, max_order: u64, seed: u64) -> Result<VerifyRecord> {
    if suite.uses_max_order() && max_order > MAX_SUITE_ORDER {
        return Err(usage(format!(
            "--max-order must be at most {MAX_SUITE_ORDER}"
        )));
    }
    let opts = SuiteOptions {
        max_order,
        seed,
        ..SuiteOptions::default()
    };
    let report = verify::run_suite(suite, &opts)?;
    Ok(VerifyRecord::from(&report))
}
