//! Serializable command results. Table and CSV renderings are derived
//! from these records, and JSON is their direct serialization.

use gwspectra::integrality::{ClassificationResult, DqWitness};
use gwspectra::spectra::{ExactEigenvalue, Sign, Spectrum};
use gwspectra::verify::SuiteReport;
use gwspectra::{Error, Result, WheelParams};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphParams {
    pub a: u64,
    pub m: u64,
    pub n: u64,
}

impl From<WheelParams> for GraphParams {
    fn from(p: WheelParams) -> Self {
        GraphParams {
            a: p.a(),
            m: p.m(),
            n: p.n(),
        }
    }
}

/// One exact eigenvalue with its multiplicity. Fields that do not apply to
/// `kind` are absent; `sign` is omitted for cosine terms with a minus sign.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigenvalueRecord {
    pub kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub value: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub u: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<i128>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c0: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub j: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sign: Option<i64>,
    pub multiplicity: u64,
}

impl EigenvalueRecord {
    pub fn new(ev: &ExactEigenvalue, multiplicity: u64) -> Self {
        let blank = EigenvalueRecord {
            kind: String::new(),
            value: None,
            u: None,
            t: None,
            c0: None,
            j: None,
            n: None,
            sign: None,
            multiplicity,
        };
        match *ev {
            ExactEigenvalue::Integer(v) => EigenvalueRecord {
                kind: "integer".into(),
                value: Some(v),
                ..blank
            },
            ExactEigenvalue::Surd { u, t, sign } => EigenvalueRecord {
                kind: "surd".into(),
                u: Some(u),
                t: Some(t),
                sign: Some(sign.value()),
                ..blank
            },
            ExactEigenvalue::Cosine { c0, sign, j, n } => EigenvalueRecord {
                kind: "cosine".into(),
                c0: Some(c0),
                j: Some(j),
                n: Some(n),
                sign: (sign == Sign::Plus).then_some(1),
                ..blank
            },
        }
    }

    /// The exact eigenvalue this record describes.
    pub fn to_exact(&self) -> Result<ExactEigenvalue> {
        let missing = |field: &str| {
            Error::InvalidParameter(format!("{} eigenvalue lacks `{field}`", self.kind))
        };
        let sign = |v: Option<i64>, default: Sign| match v {
            None => Ok(default),
            Some(s) => Sign::from_value(s)
                .ok_or_else(|| Error::InvalidParameter(format!("sign {s} is not ±1"))),
        };
        match self.kind.as_str() {
            "integer" => Ok(ExactEigenvalue::Integer(
                self.value.ok_or_else(|| missing("value"))?,
            )),
            "surd" => ExactEigenvalue::surd(
                self.u.ok_or_else(|| missing("u"))?,
                self.t.ok_or_else(|| missing("t"))?,
                sign(Some(self.sign.ok_or_else(|| missing("sign"))?), Sign::Plus)?,
            ),
            "cosine" => ExactEigenvalue::cosine(
                self.c0.ok_or_else(|| missing("c0"))?,
                sign(self.sign, Sign::Minus)?,
                self.j.ok_or_else(|| missing("j"))?,
                self.n.ok_or_else(|| missing("n"))?,
            ),
            other => Err(Error::InvalidParameter(format!(
                "unknown eigenvalue kind `{other}`"
            ))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SpectrumRecord {
    pub order: u64,
    pub graph: GraphParams,
    pub matrix: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub eigenvalues: Option<Vec<EigenvalueRecord>>,
    /// Oracle eigenvalues, descending.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub numeric: Option<Vec<f64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub max_deviation: Option<f64>,
}

pub fn eigenvalue_records(spec: &Spectrum) -> Vec<EigenvalueRecord> {
    spec.items()
        .iter()
        .map(|(ev, k)| EigenvalueRecord::new(ev, *k))
        .collect()
}

impl SpectrumRecord {
    /// Rebuilds the exact spectrum, when the record carries one.
    pub fn exact_spectrum(&self) -> Result<Option<Spectrum>> {
        self.eigenvalues
            .as_ref()
            .map(|evs| {
                evs.iter()
                    .map(|r| Ok((r.to_exact()?, r.multiplicity)))
                    .collect::<Result<Vec<_>>>()
                    .map(Spectrum::from_multiset)
            })
            .transpose()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DqVerdict {
    pub integral: bool,
    pub t: i128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub c: Option<i128>,
    pub n_in_set: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub case: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DlVerdict {
    pub integral: bool,
    pub n: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyRecord {
    pub graph: GraphParams,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dq: Option<DqVerdict>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dl: Option<DlVerdict>,
}

impl ClassifyRecord {
    pub fn new(r: &ClassificationResult, dq: bool, dl: bool) -> Self {
        ClassifyRecord {
            graph: r.params.into(),
            dq: dq.then(|| dq_verdict(&r.dq, r.matched_case.map(|c| c.to_string()))),
            dl: dl.then(|| DlVerdict {
                integral: r.dl_verdict,
                n: r.params.n(),
            }),
        }
    }
}

fn dq_verdict(w: &DqWitness, case: Option<String>) -> DqVerdict {
    DqVerdict {
        integral: w.verdict,
        t: w.t,
        c: w.c,
        n_in_set: w.n_ok,
        case,
    }
}

/// One integral triple. `m` is `None` for the marker row of the `(1, m, 3)`
/// family; `t` and `c` are absent for D^L rows.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EnumRow {
    pub a: u64,
    pub m: Option<u64>,
    pub n: u64,
    pub t: Option<i128>,
    pub c: Option<i128>,
    pub verdict: String,
    pub case: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerateRecord {
    pub which: String,
    pub method: String,
    pub rows: Vec<EnumRow>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyRecord {
    pub suite: String,
    pub passed: bool,
    pub checks: Vec<CheckRecord>,
}

impl From<&SuiteReport> for VerifyRecord {
    fn from(r: &SuiteReport) -> Self {
        VerifyRecord {
            suite: r.suite.name().into(),
            passed: r.passed(),
            checks: r
                .checks
                .iter()
                .map(|c| CheckRecord {
                    name: c.name.clone(),
                    passed: c.passed,
                    detail: c.detail.clone(),
                })
                .collect(),
        }
    }
}
