//! Exact D^Q / D^L integrality of generalized wheels.
//!
//! `GW(a, m, n)` is D^Q-integral exactly when the cycle eigenvalues are
//! integers (`n ∈ {3, 4, 6}`) and the discriminant
//! `t = ((3a-2)m - 3n + 6)² + 4amn` of the quotient pair is a perfect
//! square. The pair `((5a-2)m + 5n - 10 ± √t)/2` can never be a
//! half-integer because numerator and `t` always share parity.
//!
//! For `a ≥ 2` the perfect-square condition `t = c²` is rewritten as
//! `(3a-2)²c² - p² = K` with a constant `K` depending on `a` and `n`, and
//! factored through `α = (3a-2)c + p`. Integrality of `p` forces `α` to
//! divide `K/2`, so [`enumerate_alpha_solutions`] only has to walk the
//! divisors of `K/2` above `√K`.

use std::collections::BTreeSet;
use std::fmt;

use num_integer::{Integer, Roots};

use crate::error::{Error, Result};
use crate::graph::WheelParams;
use crate::spectra::RegularPart;

/// `⌊√v⌋`.
pub fn isqrt(v: i128) -> Result<i128> {
    if v < 0 {
        return Err(Error::InvalidParameter(format!(
            "isqrt of negative value {v}"
        )));
    }
    Ok(v.sqrt())
}

pub fn is_perfect_square(v: i128) -> bool {
    v >= 0 && {
        let r = v.sqrt();
        r * r == v
    }
}

/// Non-negative greatest common divisor; `gcd(0, 0) = 0`.
pub fn gcd(a: i128, b: i128) -> i128 {
    a.gcd(&b)
}

/// `((3a-2)m - 3n + 6)² + 4amn`.
pub fn dq_discriminant(p: WheelParams) -> i128 {
    let (a, m, n) = (i128::from(p.a()), i128::from(p.m()), i128::from(p.n()));
    let lin = (3 * a - 2) * m - 3 * n + 6;
    lin * lin + 4 * a * m * n
}

/// `(5a-2)m + 5n - 10`, the numerator shared by the quotient pair.
pub fn dq_pair_center(p: WheelParams) -> i128 {
    let (a, m, n) = (i128::from(p.a()), i128::from(p.m()), i128::from(p.n()));
    (5 * a - 2) * m + 5 * n - 10
}

fn rational_cycle(n: u64) -> bool {
    matches!(n, 3 | 4 | 6)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DqWitness {
    /// The discriminant `t`.
    pub t: i128,
    /// `√t` when `t` is a perfect square.
    pub c: Option<i128>,
    pub n_ok: bool,
    pub verdict: bool,
}

pub fn is_dq_integral(p: WheelParams) -> DqWitness {
    let t = dq_discriminant(p);
    let c = is_perfect_square(t).then(|| t.sqrt());
    let n_ok = rational_cycle(p.n());
    DqWitness {
        t,
        c,
        n_ok,
        verdict: c.is_some() && n_ok,
    }
}

/// D^L-integral exactly when the cycle is `C_3`, `C_4` or `C_6`.
pub fn is_gw_dl_integral(p: WheelParams) -> bool {
    rational_cycle(p.n())
}

/// D^L integrality of a join of regular graphs: both sides must be
/// adjacency-integral.
pub fn is_join_dl_integral(p1: &RegularPart, p2: &RegularPart) -> bool {
    p1.spectrum().is_integral() && p2.spectrum().is_integral()
}

/// Which family an integral triple belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CaseLabel {
    /// `K_m ∇ C_3` for every `m`.
    InfiniteFamily,
    /// A remaining triple that appears in [`LISTED_SPORADIC`].
    Sporadic(u64, u64, u64),
    /// A remaining triple missing from [`LISTED_SPORADIC`].
    Unlisted(u64, u64, u64),
}

/// The commonly cited list `S` of D^Q-integral triples outside the
/// `(1, m, 3)` family. The exhaustive search also finds `(6, 1, 4)` and
/// `(3, 9, 6)`, which the list omits.
pub const LISTED_SPORADIC: [(u64, u64, u64); 17] = [
    (1, 5, 4),
    (1, 5, 6),
    (1, 9, 6),
    (1, 16, 6),
    (1, 35, 6),
    (2, 1, 3),
    (2, 1, 4),
    (3, 1, 4),
    (4, 2, 4),
    (3, 4, 4),
    (4, 1, 6),
    (5, 1, 6),
    (11, 1, 6),
    (4, 2, 6),
    (2, 3, 6),
    (5, 3, 6),
    (2, 8, 6),
];

/// Every D^Q-integral triple outside the `(1, m, 3)` family, sorted.
pub const ALL_SPORADIC: [(u64, u64, u64); 19] = [
    (1, 5, 4),
    (1, 5, 6),
    (1, 9, 6),
    (1, 16, 6),
    (1, 35, 6),
    (2, 1, 3),
    (2, 1, 4),
    (2, 3, 6),
    (2, 8, 6),
    (3, 1, 4),
    (3, 4, 4),
    (3, 9, 6),
    (4, 1, 6),
    (4, 2, 4),
    (4, 2, 6),
    (5, 1, 6),
    (5, 3, 6),
    (6, 1, 4),
    (11, 1, 6),
];

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseLabel::InfiniteFamily => write!(f, "a=1,n=3,m>=1 family"),
            CaseLabel::Sporadic(a, m, n) => write!(f, "({a},{m},{n}) ∈ S"),
            CaseLabel::Unlisted(a, m, n) => write!(f, "({a},{m},{n}) ∉ S, sporadic"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassificationResult {
    pub params: WheelParams,
    pub dq: DqWitness,
    pub dl_verdict: bool,
    pub matched_case: Option<CaseLabel>,
}

pub fn classify(p: WheelParams) -> ClassificationResult {
    let dq = is_dq_integral(p);
    let matched_case = dq.verdict.then(|| {
        if p.a() == 1 && p.n() == 3 {
            CaseLabel::InfiniteFamily
        } else if LISTED_SPORADIC.contains(&(p.a(), p.m(), p.n())) {
            CaseLabel::Sporadic(p.a(), p.m(), p.n())
        } else {
            CaseLabel::Unlisted(p.a(), p.m(), p.n())
        }
    });
    ClassificationResult {
        params: p,
        dq,
        dl_verdict: is_gw_dl_integral(p),
        matched_case,
    }
}

/// Classification of `K_m ∇ C_n`.
///
/// With `a = 1` the discriminant collapses to `(m-3n+6)² + 4mn`: it is
/// `(m+3)²` for `n = 3`, `(m+2)² + 32` for `n = 4` and `m² + 144` for
/// `n = 6`, leaving `m = 5` for `n = 4` and `m ∈ {5, 9, 16, 35}` for `n = 6`.
pub fn classify_gw1_dq(m: u64, n: u64) -> Result<ClassificationResult> {
    Ok(classify(WheelParams::new(1, m, n)?))
}

/// Largest `m` admitting a D^Q-integral `GW(a, m, n)` with `a ≥ 2`.
pub fn m_upper_bound(n: u64) -> Result<u64> {
    match n {
        3 => Ok(2),
        4 => Ok(8),
        6 => Ok(31),
        _ => Err(Error::InvalidParameter(format!(
            "m bound only defined for n in {{3,4,6}}, got {n}"
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum AlphaFamily {
    /// `m = (α² + Bα - K) / (2α(3a-2)²)`.
    Plus,
    /// `m = (-α² + Bα + K) / (2α(3a-2)²)`.
    Minus,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AlphaSolution {
    pub alpha: i128,
    pub m: u64,
    pub family: AlphaFamily,
    pub c: i128,
    pub p: i128,
}

/// `(K, B)` for the factorization `(3a-2)²c² - p² = K` and the linear
/// coefficient `B` of the `m` formulas.
fn alpha_constants(a: i128, n: u64) -> Result<(i128, i128)> {
    match n {
        3 => Ok((72 * a * (a - 1), 6 * (a - 2))),
        4 => Ok((32 * a * (7 * a - 6), 4 * (5 * a - 6))),
        6 => Ok((144 * a * (5 * a - 4), 48 * (a - 1))),
        _ => Err(Error::InvalidParameter(format!(
            "alpha enumeration needs n in {{3,4,6}}, got {n}"
        ))),
    }
}

fn divisors(v: i128) -> Vec<i128> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= v {
        if v % d == 0 {
            small.push(d);
            if d * d != v {
                large.push(v / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// Every D^Q-integral `m` for fixed `a ≥ 2` and `n ∈ {3, 4, 6}`, found by
/// walking `α | K/2` with `α ≥ √K` through both families.
pub fn enumerate_alpha_solutions(a: u64, n: u64) -> Result<Vec<AlphaSolution>> {
    if a < 2 {
        return Err(Error::InvalidParameter(format!(
            "alpha enumeration needs a >= 2, got {a}; use classify_gw1_dq for a = 1"
        )));
    }
    if a > crate::graph::MAX_PARAM {
        return Err(Error::InvalidParameter(format!("a = {a} is too large")));
    }
    let ai = i128::from(a);
    let (k, b) = alpha_constants(ai, n)?;
    let s = 3 * ai - 2;
    let denom = 2 * s * s;
    let mut out = Vec::new();
    for alpha in divisors(k / 2) {
        if alpha * alpha < k {
            continue;
        }
        let c_num = alpha * alpha + k;
        let p_num = alpha * alpha - k;
        if c_num % (2 * s * alpha) != 0 || p_num % (2 * alpha) != 0 {
            continue;
        }
        let c = c_num / (2 * s * alpha);
        let p = p_num / (2 * alpha);
        debug_assert_eq!(alpha, s * c + p);
        for (family, m_num) in [
            (AlphaFamily::Plus, alpha * alpha + b * alpha - k),
            (AlphaFamily::Minus, -alpha * alpha + b * alpha + k),
        ] {
            let m_den = denom * alpha;
            if m_num > 0 && m_num % m_den == 0 {
                let m = u64::try_from(m_num / m_den).map_err(|_| Error::Overflow("alpha m"))?;
                out.push(AlphaSolution {
                    alpha,
                    m,
                    family,
                    c,
                    p,
                });
            }
        }
    }
    out.sort_by_key(|s| (s.m, s.alpha, s.family));
    Ok(out)
}

/// The distinct `m` values from [`enumerate_alpha_solutions`].
pub fn alpha_m_set(a: u64, n: u64) -> Result<BTreeSet<u64>> {
    Ok(enumerate_alpha_solutions(a, n)?
        .into_iter()
        .map(|s| s.m)
        .collect())
}

/// Result of scanning a grid of triples.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridClassification {
    /// Whether the grid touches the infinite family `(1, m, 3)`.
    pub infinite_family: bool,
    /// Members of the infinite family inside the grid, sorted by `m`.
    pub family_members: Vec<ClassificationResult>,
    /// All other D^Q-integral triples, sorted by `(a, m, n)`.
    pub sporadic: Vec<ClassificationResult>,
}

/// Exhaustive D^Q scan over `a ∈ [1, a_max]`, `m ∈ [1, m_max]`, `n ∈ n_set`.
pub fn classify_all_dq(a_max: u64, m_max: u64, n_set: &[u64]) -> Result<GridClassification> {
    if a_max < 1 || m_max < 1 {
        return Err(Error::InvalidParameter(
            "a_max and m_max must be at least 1".into(),
        ));
    }
    if let Some(bad) = n_set.iter().find(|&&n| n < 3) {
        return Err(Error::InvalidParameter(format!(
            "cycle length {bad} is below 3"
        )));
    }
    let ns: BTreeSet<u64> = n_set.iter().copied().collect();
    let mut family_members = Vec::new();
    let mut sporadic = Vec::new();
    for a in 1..=a_max {
        for m in 1..=m_max {
            for &n in &ns {
                let r = classify(WheelParams::new(a, m, n)?);
                match r.matched_case {
                    Some(CaseLabel::InfiniteFamily) => family_members.push(r),
                    Some(CaseLabel::Sporadic(..) | CaseLabel::Unlisted(..)) => sporadic.push(r),
                    None => {}
                }
            }
        }
    }
    Ok(GridClassification {
        infinite_family: ns.contains(&3),
        family_members,
        sporadic,
    })
}

/// Whether `(5a-2)m + 5n - 10` and `((3a-2)m - 3n + 6)² + 4amn` agree mod 2.
///
/// Arithmetic wraps modulo 2^128, which preserves residues mod 2, so any
/// `u64` input is handled exactly.
pub fn parity_check(a: u64, m: u64, n: u64) -> bool {
    let (a, m, n) = (a as i128, m as i128, n as i128);
    let center = (5i128.wrapping_mul(a).wrapping_sub(2))
        .wrapping_mul(m)
        .wrapping_add(5i128.wrapping_mul(n))
        .wrapping_sub(10);
    let lin = (3i128.wrapping_mul(a).wrapping_sub(2))
        .wrapping_mul(m)
        .wrapping_sub(3i128.wrapping_mul(n))
        .wrapping_add(6);
    let t = lin
        .wrapping_mul(lin)
        .wrapping_add(4i128.wrapping_mul(a).wrapping_mul(m).wrapping_mul(n));
    center.rem_euclid(2) == t.rem_euclid(2)
}
