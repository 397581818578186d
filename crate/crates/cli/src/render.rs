//! Table and CSV renderings of the command records.

use std::fmt::Write as _;

use gwspectra::spectra::Spectrum;

use crate::record::{ClassifyRecord, EnumRow, EnumerateRecord, SpectrumRecord, VerifyRecord};

fn csv_string(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(&row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn graph_name(r: &SpectrumRecord) -> String {
    format!("GW({},{},{})", r.graph.a, r.graph.m, r.graph.n)
}

pub fn spectrum_table(r: &SpectrumRecord, exact: Option<&Spectrum>) -> String {
    let mut out = format!(
        "{} {} spectrum, order {}\n",
        graph_name(r),
        r.matrix,
        r.order
    );
    if let Some(spec) = exact {
        let rows: Vec<(String, String, u64)> = spec
            .items()
            .iter()
            .map(|(ev, k)| (ev.to_string(), format!("{:.9}", ev.numeric_value()), *k))
            .collect();
        let w = rows
            .iter()
            .map(|r| r.0.chars().count())
            .max()
            .unwrap_or(0)
            .max(10);
        let _ = writeln!(
            out,
            "{:<w$}  {:>18}  {:>12}",
            "eigenvalue", "value", "multiplicity"
        );
        for (expr, value, k) in rows {
            let pad = w - expr.chars().count();
            let _ = writeln!(out, "{expr}{}  {value:>18}  {k:>12}", " ".repeat(pad));
        }
    }
    if let Some(values) = &r.numeric {
        let _ = writeln!(out, "numeric eigenvalues (Jacobi):");
        for v in values {
            let _ = writeln!(out, "  {v:.12}");
        }
    }
    if let Some(d) = r.max_deviation {
        let _ = writeln!(out, "max deviation: {d:.3e}");
    }
    out
}

pub fn spectrum_csv(r: &SpectrumRecord, exact: Option<&Spectrum>) -> String {
    let mut rows = Vec::new();
    if let Some(spec) = exact {
        for (ev, k) in spec.items() {
            let kind = match ev {
                gwspectra::ExactEigenvalue::Integer(_) => "integer",
                gwspectra::ExactEigenvalue::Surd { .. } => "surd",
                gwspectra::ExactEigenvalue::Cosine { .. } => "cosine",
            };
            rows.push(vec![
                kind.to_string(),
                ev.to_string(),
                format!("{}", ev.numeric_value()),
                k.to_string(),
            ]);
        }
    }
    for v in r.numeric.iter().flatten() {
        rows.push(vec![
            "numeric".into(),
            String::new(),
            v.to_string(),
            "1".into(),
        ]);
    }
    if let Some(d) = r.max_deviation {
        rows.push(vec![
            "max_deviation".into(),
            String::new(),
            d.to_string(),
            String::new(),
        ]);
    }
    csv_string(&["kind", "expression", "value", "multiplicity"], rows)
}

pub fn classify_table(r: &ClassifyRecord) -> String {
    let mut out = format!("GW({},{},{})\n", r.graph.a, r.graph.m, r.graph.n);
    if let Some(dq) = &r.dq {
        let mut line = format!(
            "dq: {}, t={}",
            if dq.integral {
                "integral"
            } else {
                "not integral"
            },
            dq.t
        );
        match dq.c {
            Some(c) => {
                let _ = write!(line, ", c={c}");
            }
            None => line.push_str(", t not a perfect square"),
        }
        if !dq.n_in_set {
            line.push_str(", n not in {3,4,6}");
        }
        if let Some(case) = &dq.case {
            let _ = write!(line, ", case \"{case}\"");
        }
        let _ = writeln!(out, "{line}");
    }
    if let Some(dl) = &r.dl {
        let _ = writeln!(
            out,
            "dl: {} (n={})",
            if dl.integral {
                "integral"
            } else {
                "not integral"
            },
            dl.n
        );
    }
    out
}

pub fn classify_csv(r: &ClassifyRecord) -> String {
    let mut rows = Vec::new();
    let g = r.graph;
    let verdict = |b: bool| if b { "integral" } else { "not integral" }.to_string();
    if let Some(dq) = &r.dq {
        rows.push(vec![
            "dq".into(),
            g.a.to_string(),
            g.m.to_string(),
            g.n.to_string(),
            dq.t.to_string(),
            opt(dq.c),
            verdict(dq.integral),
            dq.case.clone().unwrap_or_default(),
        ]);
    }
    if let Some(dl) = &r.dl {
        rows.push(vec![
            "dl".into(),
            g.a.to_string(),
            g.m.to_string(),
            g.n.to_string(),
            String::new(),
            String::new(),
            verdict(dl.integral),
            String::new(),
        ]);
    }
    csv_string(
        &["matrix", "a", "m", "n", "t", "c", "verdict", "case"],
        rows,
    )
}

fn enum_cells(row: &EnumRow) -> Vec<String> {
    vec![
        row.a.to_string(),
        row.m.map_or_else(|| "*".to_string(), |m| m.to_string()),
        row.n.to_string(),
        opt(row.t),
        opt(row.c),
        row.verdict.clone(),
        row.case.clone(),
    ]
}

const ENUM_HEADER: [&str; 7] = ["a", "m", "n", "t", "c", "verdict", "case"];

pub fn enumerate_csv(r: &EnumerateRecord) -> String {
    csv_string(&ENUM_HEADER, r.rows.iter().map(enum_cells))
}

pub fn enumerate_table(r: &EnumerateRecord) -> String {
    let cells: Vec<Vec<String>> = r.rows.iter().map(enum_cells).collect();
    let mut widths: Vec<usize> = ENUM_HEADER.iter().map(|h| h.len()).collect();
    for row in &cells {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |row: &[String]| {
        let mut s = String::new();
        for (i, (c, w)) in row.iter().zip(&widths).enumerate() {
            if i + 1 == row.len() {
                s.push_str(c);
            } else {
                let _ = write!(s, "{c}{}  ", " ".repeat(w - c.chars().count()));
            }
        }
        s.trim_end().to_string()
    };
    let header: Vec<String> = ENUM_HEADER.iter().map(|h| h.to_string()).collect();
    let mut out = format!("{}\n", line(&header));
    for row in &cells {
        let _ = writeln!(out, "{}", line(row));
    }
    let _ = writeln!(out, "{} rows", cells.len());
    out
}

pub fn verify_table(r: &VerifyRecord) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let _ = writeln!(
            out,
            "[{}] {}: {} ({})",
            if c.passed { "PASS" } else { "FAIL" },
            r.suite,
            c.name,
            c.detail
        );
    }
    let _ = writeln!(
        out,
        "{}: {}",
        r.suite,
        if r.passed {
            "all checks passed"
        } else {
            "FAILED"
        }
    );
    out
}

pub fn verify_csv(r: &VerifyRecord) -> String {
    csv_string(
        &["suite", "check", "passed", "detail"],
        r.checks.iter().map(|c| {
            vec![
                r.suite.clone(),
                c.name.clone(),
                c.passed.to_string(),
                c.detail.clone(),
            ]
        }),
    )
}
