//! Exact eigenvalues and closed-form spectra of joins of regular graphs.
//!
//! Every eigenvalue produced here is one of three exact forms: an integer,
//! a quadratic surd `(u ± √t)/2`, or a shifted cycle eigenvalue
//! `c0 ± 2cos(2πj/n)`. Values are normalized on construction so that two
//! eigenvalues compare equal structurally exactly when they are the same
//! form with the same canonical parameters; multiplicities are counted on
//! that structural key, never on floating-point values.
//!
//! The join spectra all come from the same reduction: for `G1 ∇ G2` with
//! `G_i` regular, every adjacency eigenvector of `G_i` orthogonal to the
//! all-ones vector lifts to an eigenvector of the joined matrix (one affine
//! image of the adjacency eigenvalue per side), and the last two
//! eigenvalues are those of the 2×2 quotient matrix of row sums.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};
use crate::graph::{self, Graph, SquareMatrix, WheelParams};
use crate::integrality::isqrt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Minus,
    Plus,
}

impl Sign {
    pub fn value(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Sign> {
        match v {
            1 => Some(Sign::Plus),
            -1 => Some(Sign::Minus),
            _ => None,
        }
    }

    fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

/// An eigenvalue held exactly.
///
/// Only construct through [`ExactEigenvalue::integer`],
/// [`ExactEigenvalue::surd`] and [`ExactEigenvalue::cosine`]; those apply
/// the normalization that makes structural equality meaningful.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExactEigenvalue {
    Integer(i64),
    /// `(u + sign·√t)/2` with `t` not a perfect square.
    Surd {
        u: i64,
        t: i128,
        sign: Sign,
    },
    /// `c0 + sign·2cos(2πj/n)` with `j/n` in lowest terms, `1 ≤ j < n/2`
    /// and `n ∉ {1, 2, 3, 4, 6}`.
    Cosine {
        c0: i64,
        sign: Sign,
        j: u64,
        n: u64,
    },
}

impl ExactEigenvalue {
    pub fn integer(v: i64) -> Self {
        ExactEigenvalue::Integer(v)
    }

    /// `(u + sign·√t)/2`, normalized to an integer when `t` is a perfect square.
    pub fn surd(u: i64, t: i128, sign: Sign) -> Result<Self> {
        if t < 0 {
            return Err(Error::InvalidParameter(format!(
                "surd radicand {t} is negative"
            )));
        }
        let root = isqrt(t)?;
        if root * root != t {
            return Ok(ExactEigenvalue::Surd { u, t, sign });
        }
        let twice = i128::from(u) + i128::from(sign.value()) * root;
        if twice % 2 != 0 {
            return Err(Error::InvalidParameter(format!(
                "(u {} √t)/2 with u = {u}, t = {t} is a half-integer",
                if sign == Sign::Plus { '+' } else { '-' }
            )));
        }
        let v = i64::try_from(twice / 2).map_err(|_| Error::Overflow("surd value"))?;
        Ok(ExactEigenvalue::Integer(v))
    }

    /// `c0 + sign·2cos(2πj/n)`, normalized to an integer when the cosine is rational.
    pub fn cosine(c0: i64, sign: Sign, j: u64, n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("cosine term needs n >= 1".into()));
        }
        let j = j % n;
        let d = j.gcd(&n);
        let (mut j, n) = (j / d, n / d);
        if 2 * j > n {
            j = n - j;
        }
        // 2cos(2πj/n) for the five reduced denominators where it is rational
        let rational = match n {
            1 => Some(2),
            2 => Some(-2),
            3 => Some(-1),
            4 => Some(0),
            6 => Some(1),
            _ => None,
        };
        match rational {
            Some(r) => c0
                .checked_add(sign.value() * r)
                .map(ExactEigenvalue::Integer)
                .ok_or(Error::Overflow("cosine term")),
            None => Ok(ExactEigenvalue::Cosine { c0, sign, j, n }),
        }
    }

    pub fn is_integer(&self) -> bool {
        matches!(self, ExactEigenvalue::Integer(_))
    }

    pub fn as_integer(&self) -> Option<i64> {
        match *self {
            ExactEigenvalue::Integer(v) => Some(v),
            _ => None,
        }
    }

    pub fn numeric_value(&self) -> f64 {
        match *self {
            ExactEigenvalue::Integer(v) => v as f64,
            ExactEigenvalue::Surd { u, t, sign } => {
                (u as f64 + sign.value() as f64 * (t as f64).sqrt()) / 2.0
            }
            ExactEigenvalue::Cosine { c0, sign, j, n } => {
                c0 as f64 + sign.value() as f64 * 2.0 * (2.0 * PI * j as f64 / n as f64).cos()
            }
        }
    }

    /// `offset + self`, or `offset - self` when `negate` is set.
    pub fn shifted(&self, offset: i64, negate: bool) -> Result<Self> {
        let overflow = || Error::Overflow("eigenvalue shift");
        match *self {
            ExactEigenvalue::Integer(v) => {
                let v = if negate {
                    offset.checked_sub(v)
                } else {
                    offset.checked_add(v)
                };
                v.map(ExactEigenvalue::Integer).ok_or_else(overflow)
            }
            ExactEigenvalue::Surd { u, t, sign } => {
                let twice = offset.checked_mul(2).ok_or_else(overflow)?;
                let (u, sign) = if negate {
                    (twice.checked_sub(u), sign.flip())
                } else {
                    (twice.checked_add(u), sign)
                };
                Ok(ExactEigenvalue::Surd {
                    u: u.ok_or_else(overflow)?,
                    t,
                    sign,
                })
            }
            ExactEigenvalue::Cosine { c0, sign, j, n } => {
                let (c0, sign) = if negate {
                    (offset.checked_sub(c0), sign.flip())
                } else {
                    (offset.checked_add(c0), sign)
                };
                Ok(ExactEigenvalue::Cosine {
                    c0: c0.ok_or_else(overflow)?,
                    sign,
                    j,
                    n,
                })
            }
        }
    }

    fn form_rank(&self) -> u8 {
        match self {
            ExactEigenvalue::Integer(_) => 0,
            ExactEigenvalue::Surd { .. } => 1,
            ExactEigenvalue::Cosine { .. } => 2,
        }
    }

    /// Descending numeric value; ties broken by form (integer, surd, cosine)
    /// and then structurally.
    fn display_order(&self, other: &Self) -> Ordering {
        other
            .numeric_value()
            .total_cmp(&self.numeric_value())
            .then_with(|| self.form_rank().cmp(&other.form_rank()))
            .then_with(|| self.cmp(other))
    }
}

impl fmt::Display for ExactEigenvalue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let op = |s: Sign| if s == Sign::Plus { '+' } else { '-' };
        match *self {
            ExactEigenvalue::Integer(v) => write!(f, "{v}"),
            ExactEigenvalue::Surd { u, t, sign } => write!(f, "({u}{}√{t})/2", op(sign)),
            ExactEigenvalue::Cosine { c0, sign, j, n } => {
                write!(f, "{c0}{}2cos(2π·{j}/{n})", op(sign))
            }
        }
    }
}

/// A multiset of exact eigenvalues.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    items: Vec<(ExactEigenvalue, u64)>,
    order: u64,
}

impl Spectrum {
    /// Merges structurally equal eigenvalues and sorts for display.
    pub fn from_multiset(values: impl IntoIterator<Item = (ExactEigenvalue, u64)>) -> Self {
        let mut merged: BTreeMap<ExactEigenvalue, u64> = BTreeMap::new();
        for (ev, k) in values {
            if k > 0 {
                *merged.entry(ev).or_default() += k;
            }
        }
        let order = merged.values().sum();
        let mut items: Vec<_> = merged.into_iter().collect();
        items.sort_by(|x, y| x.0.display_order(&y.0));
        Spectrum { items, order }
    }

    pub fn items(&self) -> &[(ExactEigenvalue, u64)] {
        &self.items
    }

    /// Total multiplicity.
    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn multiplicity(&self, ev: &ExactEigenvalue) -> u64 {
        self.items
            .iter()
            .find(|(e, _)| e == ev)
            .map_or(0, |&(_, k)| k)
    }

    pub fn is_integral(&self) -> bool {
        self.items.iter().all(|(e, _)| e.is_integer())
    }

    /// Every eigenvalue with repetition, descending.
    pub fn numeric_values(&self) -> Vec<f64> {
        let mut out: Vec<f64> = self
            .items
            .iter()
            .flat_map(|&(e, k)| std::iter::repeat_n(e.numeric_value(), k as usize))
            .collect();
        out.sort_by(|x, y| y.total_cmp(x));
        out
    }

    pub fn numeric_sum(&self) -> f64 {
        self.items
            .iter()
            .map(|(e, k)| e.numeric_value() * *k as f64)
            .sum()
    }

    /// Exact eigenvalue sum, available when every eigenvalue is an integer.
    pub fn integer_sum(&self) -> Option<i128> {
        self.items
            .iter()
            .map(|(e, k)| e.as_integer().map(|v| i128::from(v) * i128::from(*k)))
            .sum()
    }

    /// The multiset with one copy of `ev` taken out.
    pub fn without_one(&self, ev: &ExactEigenvalue) -> Option<Spectrum> {
        if self.multiplicity(ev) == 0 {
            return None;
        }
        let mut removed = false;
        Some(Spectrum::from_multiset(self.items.iter().map(|&(e, k)| {
            if !removed && e == *ev {
                removed = true;
                (e, k - 1)
            } else {
                (e, k)
            }
        })))
    }

    fn scaled_multiplicities(&self, factor: u64) -> Result<Spectrum> {
        let items = self
            .items
            .iter()
            .map(|&(e, k)| {
                k.checked_mul(factor)
                    .map(|k| (e, k))
                    .ok_or(Error::Overflow("multiplicity"))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum::from_multiset(items))
    }

    fn shifted(&self, offset: i64, negate: bool) -> Result<Spectrum> {
        let items = self
            .items
            .iter()
            .map(|&(e, k)| Ok((e.shifted(offset, negate)?, k)))
            .collect::<Result<Vec<_>>>()?;
        Ok(Spectrum::from_multiset(items))
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (e, k)) in self.items.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{e} ×{k}")?;
        }
        write!(f, "}}")
    }
}

/// A regular graph described by its order, degree and exact adjacency spectrum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RegularPart {
    order: u64,
    degree: u64,
    spectrum: Spectrum,
}

impl RegularPart {
    pub fn new(order: u64, degree: u64, spectrum: Spectrum) -> Result<Self> {
        let bad = |msg: String| Err(Error::InvalidRegularPart(msg));
        if order == 0 {
            return bad("order must be at least 1".into());
        }
        if degree >= order {
            return bad(format!("degree {degree} must be below order {order}"));
        }
        if spectrum.order() != order {
            return bad(format!(
                "spectrum has total multiplicity {}, expected {order}",
                spectrum.order()
            ));
        }
        let r = i64::try_from(degree).map_err(|_| Error::Overflow("degree"))?;
        if spectrum.multiplicity(&ExactEigenvalue::Integer(r)) == 0 {
            return bad(format!("spectrum does not contain the degree {degree}"));
        }
        let slack = 1e-9 * (1.0 + degree as f64);
        if spectrum
            .items()
            .iter()
            .any(|(e, _)| e.numeric_value() > degree as f64 + slack)
        {
            return bad(format!(
                "spectrum has an eigenvalue above the degree {degree}"
            ));
        }
        if spectrum.numeric_sum().abs() > slack * order as f64 {
            return bad("adjacency eigenvalues must sum to zero".into());
        }
        Ok(RegularPart {
            order,
            degree,
            spectrum,
        })
    }

    /// `K_m`.
    pub fn complete(m: u64) -> Result<Self> {
        Ok(RegularPart {
            order: m,
            degree: m.saturating_sub(1),
            spectrum: adjacency_spectrum_complete(m)?,
        })
    }

    /// `C_n`.
    pub fn cycle(n: u64) -> Result<Self> {
        Ok(RegularPart {
            order: n,
            degree: 2,
            spectrum: adjacency_spectrum_cycle(n)?,
        })
    }

    /// `kG` for a regular `G`.
    pub fn copies(k: u64, part: &RegularPart) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidParameter("copies needs k >= 1".into()));
        }
        Ok(RegularPart {
            order: part
                .order
                .checked_mul(k)
                .ok_or(Error::Overflow("part order"))?,
            degree: part.degree,
            spectrum: part.spectrum.scaled_multiplicities(k)?,
        })
    }

    /// `aK_m`.
    pub fn complete_copies(a: u64, m: u64) -> Result<Self> {
        RegularPart::copies(a, &RegularPart::complete(m)?)
    }

    pub fn order(&self) -> u64 {
        self.order
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }

    /// Adjacency spectrum with one copy of the degree removed: the
    /// eigenvalues whose eigenvectors can be chosen orthogonal to the
    /// all-ones vector.
    fn non_principal(&self) -> Result<Spectrum> {
        let r = ExactEigenvalue::Integer(self.degree_i64()?);
        self.spectrum.without_one(&r).ok_or_else(|| {
            Error::InvalidRegularPart(format!("spectrum lacks the degree {}", self.degree))
        })
    }

    fn degree_i64(&self) -> Result<i64> {
        i64::try_from(self.degree).map_err(|_| Error::Overflow("degree"))
    }
}

pub fn adjacency_spectrum_complete(m: u64) -> Result<Spectrum> {
    adjacency_spectrum_copies(1, m)
}

/// Spectrum of `aK_m`: `m-1` with multiplicity `a`, `-1` with multiplicity `a(m-1)`.
pub fn adjacency_spectrum_copies(a: u64, m: u64) -> Result<Spectrum> {
    if a == 0 || m == 0 {
        return Err(Error::InvalidParameter(format!(
            "need a, m >= 1; got a = {a}, m = {m}"
        )));
    }
    let top = i64::try_from(m - 1).map_err(|_| Error::Overflow("clique size"))?;
    let rest = a
        .checked_mul(m - 1)
        .ok_or(Error::Overflow("multiplicity"))?;
    Ok(Spectrum::from_multiset([
        (ExactEigenvalue::Integer(top), a),
        (ExactEigenvalue::Integer(-1), rest),
    ]))
}

/// Spectrum of `C_n`: `2cos(2πj/n)` for `j = 0..n`.
pub fn adjacency_spectrum_cycle(n: u64) -> Result<Spectrum> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!(
            "cycle needs n >= 3, got {n}"
        )));
    }
    let items = (0..n)
        .map(|j| Ok((ExactEigenvalue::cosine(0, Sign::Plus, j, n)?, 1)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Spectrum::from_multiset(items))
}

fn to_i64(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

struct JoinShape {
    n1: i128,
    n2: i128,
    r1: i128,
    r2: i128,
}

impl JoinShape {
    fn of(p1: &RegularPart, p2: &RegularPart) -> Self {
        JoinShape {
            n1: i128::from(p1.order),
            n2: i128::from(p2.order),
            r1: i128::from(p1.degree),
            r2: i128::from(p2.degree),
        }
    }
}

/// Assembles a join spectrum from the two lifted sides and the quotient eigenvalues.
fn assemble_join(
    p1: &RegularPart,
    p2: &RegularPart,
    side1: (i128, bool),
    side2: (i128, bool),
    quotient: [ExactEigenvalue; 2],
) -> Result<Spectrum> {
    let left = p1
        .non_principal()?
        .shifted(to_i64(side1.0, "join offset")?, side1.1)?;
    let right = p2
        .non_principal()?
        .shifted(to_i64(side2.0, "join offset")?, side2.1)?;
    let spectrum = Spectrum::from_multiset(
        left.items
            .into_iter()
            .chain(right.items)
            .chain(quotient.map(|e| (e, 1))),
    );
    debug_assert_eq!(spectrum.order(), p1.order + p2.order);
    Ok(spectrum)
}

/// Both eigenvalues `(u ± √t)/2` of a quotient matrix.
fn surd_pair(u: i128, t: i128) -> Result<[ExactEigenvalue; 2]> {
    let u = to_i64(u, "quotient trace")?;
    Ok([
        ExactEigenvalue::surd(u, t, Sign::Plus)?,
        ExactEigenvalue::surd(u, t, Sign::Minus)?,
    ])
}

/// Eigenvalues of the 2×2 quotient `[[x, n2], [n1, y]]`.
fn quotient_pair(x: i128, y: i128, n1: i128, n2: i128) -> Result<[ExactEigenvalue; 2]> {
    let diff = x - y;
    let t = diff
        .checked_mul(diff)
        .and_then(|d| {
            n1.checked_mul(n2)
                .and_then(|p| p.checked_mul(4))
                .and_then(|p| d.checked_add(p))
        })
        .ok_or(Error::Overflow("quotient discriminant"))?;
    surd_pair(x + y, t)
}

/// Distance signless Laplacian spectrum of `G1 ∇ G2` for regular `G1`, `G2`.
pub fn dq_join_spectrum(p1: &RegularPart, p2: &RegularPart) -> Result<Spectrum> {
    let JoinShape { n1, n2, r1, r2 } = JoinShape::of(p1, p2);
    // row sums of the G1 block: transmission 2(n1-1) - r1 + n2 plus distances 2(n1-1) - r1
    let x = 4 * (n1 - 1) - 2 * r1 + n2;
    let y = 4 * (n2 - 1) - 2 * r2 + n1;
    let quotient = quotient_pair(x, y, n1, n2)?;
    assemble_join(
        p1,
        p2,
        (2 * (n1 - 2) + n2 - r1, true),
        (2 * (n2 - 2) + n1 - r2, true),
        quotient,
    )
}

/// Distance Laplacian spectrum of `G1 ∇ G2` for regular `G1`, `G2`.
pub fn dl_join_spectrum(p1: &RegularPart, p2: &RegularPart) -> Result<Spectrum> {
    let JoinShape { n1, n2, r1, r2 } = JoinShape::of(p1, p2);
    // quotient [[n2, -n2], [-n1, n1]] has eigenvalues n1 + n2 and 0
    let quotient = [
        ExactEigenvalue::Integer(to_i64(n1 + n2, "join order")?),
        ExactEigenvalue::Integer(0),
    ];
    assemble_join(
        p1,
        p2,
        (2 * n1 + n2 - r1, false),
        (2 * n2 + n1 - r2, false),
        quotient,
    )
}

/// Adjacency spectrum of `G1 ∇ G2` for regular `G1`, `G2`.
pub fn adjacency_join_spectrum(p1: &RegularPart, p2: &RegularPart) -> Result<Spectrum> {
    let JoinShape { n1, n2, r1, r2 } = JoinShape::of(p1, p2);
    let quotient = quotient_pair(r1, r2, n1, n2)?;
    assemble_join(p1, p2, (0, false), (0, false), quotient)
}

/// Distance spectrum of `G1 ∇ G2` for regular `G1`, `G2`.
pub fn distance_join_spectrum(p1: &RegularPart, p2: &RegularPart) -> Result<Spectrum> {
    let JoinShape { n1, n2, r1, r2 } = JoinShape::of(p1, p2);
    let quotient = quotient_pair(2 * (n1 - 1) - r1, 2 * (n2 - 1) - r2, n1, n2)?;
    assemble_join(p1, p2, (-2, true), (-2, true), quotient)
}

fn wheel_parts(p: WheelParams) -> Result<(RegularPart, RegularPart)> {
    Ok((
        RegularPart::complete_copies(p.a(), p.m())?,
        RegularPart::cycle(p.n())?,
    ))
}

/// Distance signless Laplacian spectrum of `GW(a, m, n)`.
///
/// Explicitly: `2(a-1)m+n-2` (×`a-1`), `(2a-1)m+n-2` (×`a(m-1)`),
/// `am+2n-6-2cos(2πj/n)` for `j = 1..n`, and
/// `((5a-2)m+5n-10 ± √(((3a-2)m-3n+6)² + 4amn))/2`.
pub fn gw_dq_spectrum(p: WheelParams) -> Result<Spectrum> {
    let (cliques, rim) = wheel_parts(p)?;
    dq_join_spectrum(&cliques, &rim)
}

/// Distance Laplacian spectrum of `GW(a, m, n)`.
///
/// Explicitly: `2am+n` (×`a-1`), `2am-m+n` (×`a(m-1)`),
/// `am+2n-2+2cos(2πj/n)` for `j = 1..n`, then `am+n` and `0`.
pub fn gw_dl_spectrum(p: WheelParams) -> Result<Spectrum> {
    let (cliques, rim) = wheel_parts(p)?;
    dl_join_spectrum(&cliques, &rim)
}

pub fn gw_adjacency_spectrum(p: WheelParams) -> Result<Spectrum> {
    let (cliques, rim) = wheel_parts(p)?;
    adjacency_join_spectrum(&cliques, &rim)
}

pub fn gw_distance_spectrum(p: WheelParams) -> Result<Spectrum> {
    let (cliques, rim) = wheel_parts(p)?;
    distance_join_spectrum(&cliques, &rim)
}

/// The four graph matrices this crate knows closed forms for.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Adjacency,
    Distance,
    DistanceLaplacian,
    DistanceSignlessLaplacian,
}

impl MatrixKind {
    pub const ALL: [MatrixKind; 4] = [
        MatrixKind::Adjacency,
        MatrixKind::Distance,
        MatrixKind::DistanceLaplacian,
        MatrixKind::DistanceSignlessLaplacian,
    ];

    /// Short name: `adj`, `dist`, `dl`, `dq`.
    pub fn name(self) -> &'static str {
        match self {
            MatrixKind::Adjacency => "adj",
            MatrixKind::Distance => "dist",
            MatrixKind::DistanceLaplacian => "dl",
            MatrixKind::DistanceSignlessLaplacian => "dq",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        MatrixKind::ALL.into_iter().find(|k| k.name() == s)
    }

    pub fn matrix(self, g: &Graph) -> Result<SquareMatrix> {
        match self {
            MatrixKind::Adjacency => Ok(graph::adjacency_matrix(g)),
            MatrixKind::Distance => graph::distance_matrix(g),
            MatrixKind::DistanceLaplacian => graph::dl_matrix(g),
            MatrixKind::DistanceSignlessLaplacian => graph::dq_matrix(g),
        }
    }

    pub fn join_spectrum(self, p1: &RegularPart, p2: &RegularPart) -> Result<Spectrum> {
        match self {
            MatrixKind::Adjacency => adjacency_join_spectrum(p1, p2),
            MatrixKind::Distance => distance_join_spectrum(p1, p2),
            MatrixKind::DistanceLaplacian => dl_join_spectrum(p1, p2),
            MatrixKind::DistanceSignlessLaplacian => dq_join_spectrum(p1, p2),
        }
    }

    pub fn gw_spectrum(self, p: WheelParams) -> Result<Spectrum> {
        let (cliques, rim) = wheel_parts(p)?;
        self.join_spectrum(&cliques, &rim)
    }
}
