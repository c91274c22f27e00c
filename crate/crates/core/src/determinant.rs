//! Toeplitz–Hessenberg determinants.
//!
//! A spec `(a0; a1, ..., an)` stands for the lower Hessenberg matrix with `a0`
//! on the superdiagonal and `a(i - j + 1)` at row `i`, column `j <= i`:
//!
//! ```text
//! | a1  a0  0   ... 0  |
//! | a2  a1  a0  ... 0  |
//! | ... ... ... ... a0 |
//! | an  ... a3  a2  a1 |
//! ```
//!
//! Four evaluators are provided and are kept independent of one another so
//! they can serve as mutual oracles: the first-row expansion recurrence, the
//! multinomial sum over partitions, the signed sum over compositions, and
//! fraction-free elimination of the materialized matrix.

use std::fmt;
use std::str::FromStr;

use crate::combinatorics::{compositions, partitions};
use crate::error::{Error, Result};
use crate::scalar::{from_i64, pow, Scalar};
use crate::sequences::{SequenceCache, SequenceKind};

/// Size guard for [`det_trudi_partitions`].
pub const PARTITION_LIMIT: usize = 45;
/// Size guard for [`det_trudi_compositions`].
pub const COMPOSITION_LIMIT: usize = 20;
/// Size guard for [`det_dense`].
pub const DENSE_LIMIT: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HessenbergSpec<T> {
    a0: T,
    entries: Vec<T>,
}

impl<T: Scalar> HessenbergSpec<T> {
    /// `a0` must be nonzero. An empty entry list is the 0 x 0 matrix.
    pub fn new(a0: T, entries: Vec<T>) -> Result<Self> {
        if a0.is_zero() {
            return Err(Error::Parameter("superdiagonal constant a0 must be nonzero".into()));
        }
        Ok(HessenbergSpec { a0, entries })
    }

    pub fn a0(&self) -> &T {
        &self.a0
    }

    /// `a1..an`.
    pub fn entries(&self) -> &[T] {
        &self.entries
    }

    pub fn n(&self) -> usize {
        self.entries.len()
    }

    /// The leading `m x m` spec, `(a0; a1..am)`.
    pub fn truncated(&self, m: usize) -> Self {
        HessenbergSpec { a0: self.a0.clone(), entries: self.entries[..m.min(self.n())].to_vec() }
    }

    /// Every entry and `a0` multiplied by `c`.
    pub fn scaled(&self, c: &T) -> Result<Self> {
        HessenbergSpec::new(self.a0.clone() * c.clone(), self.entries.iter().map(|a| a.clone() * c.clone()).collect())
    }

    /// The full matrix as rows.
    pub fn to_matrix(&self) -> Vec<Vec<T>> {
        let n = self.n();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        if j <= i {
                            self.entries[i - j].clone()
                        } else if j == i + 1 {
                            self.a0.clone()
                        } else {
                            T::zero()
                        }
                    })
                    .collect()
            })
            .collect()
    }
}

/// Entry vector template: `a_i = term(kind, start + (i - 1) * stride)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct EntryRule {
    pub kind: SequenceKind,
    pub start: usize,
    pub stride: usize,
    pub a0: i64,
}

impl EntryRule {
    pub fn new(kind: SequenceKind, start: usize, stride: usize, a0: i64) -> Self {
        EntryRule { kind, start, stride, a0 }
    }
}

impl fmt::Display for EntryRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "det({}; {}[{}, {}, ...])", self.a0, self.kind, self.start, self.start + self.stride)
    }
}

/// Builds the `n x n` spec described by `rule`.
pub fn make_entries<T: Scalar>(rule: &EntryRule, n: usize) -> Result<HessenbergSpec<T>> {
    if n == 0 {
        return Err(Error::Domain("entry vector needs n >= 1".into()));
    }
    if rule.stride == 0 {
        return Err(Error::Parameter("stride must be positive".into()));
    }
    let mut cache = SequenceCache::<T>::new(rule.kind)?;
    let last = rule.start + (n - 1) * rule.stride;
    let terms = cache.prefix(last);
    let entries = (0..n).map(|i| terms[rule.start + i * rule.stride].clone()).collect();
    HessenbergSpec::new(from_i64(rule.a0), entries)
}

/// `D_0..D_n` from `D_m = sum_{k=1}^{m} (-a0)^(k-1) a_k D_(m-k)`, `D_0 = 1`.
pub fn det_recurrence_prefixes<T: Scalar>(spec: &HessenbergSpec<T>) -> Vec<T> {
    let n = spec.n();
    let neg_a0 = -spec.a0.clone();
    let mut powers = Vec::with_capacity(n);
    let mut p = T::one();
    for _ in 0..n {
        powers.push(p.clone());
        p = p * neg_a0.clone();
    }
    let mut dets: Vec<T> = Vec::with_capacity(n + 1);
    dets.push(T::one());
    for m in 1..=n {
        let mut d = T::zero();
        for k in 1..=m {
            let a = &spec.entries[k - 1];
            if !a.is_zero() {
                d = d + powers[k - 1].clone() * a.clone() * dets[m - k].clone();
            }
        }
        dets.push(d);
    }
    dets
}

/// Determinant by first-row expansion; `O(n^2)` ring operations.
pub fn det_recurrence<T: Scalar>(spec: &HessenbergSpec<T>) -> T {
    det_recurrence_prefixes(spec).pop().expect("prefix list holds D_0")
}

/// Trudi's multinomial expansion,
/// `sum_s (-a0)^(n - sigma) * C(sigma; s_1..s_n) * prod a_i^(s_i)`
/// over all partitions `s` of `n`.
pub fn det_trudi_partitions<T: Scalar>(spec: &HessenbergSpec<T>) -> Result<T> {
    let n = spec.n();
    if n > PARTITION_LIMIT {
        return Err(Error::Size(format!("partition expansion limited to n <= {PARTITION_LIMIT}, got {n}")));
    }
    if n == 0 {
        return Ok(T::one());
    }
    let neg_a0 = -spec.a0.clone();
    let mut total = T::zero();
    for s in partitions(n as i64)? {
        let mult = s.multiplicities();
        if mult.iter().zip(&spec.entries).any(|(&m, a)| m > 0 && a.is_zero()) {
            continue;
        }
        let mut term = pow(&neg_a0, n as u64 - s.sigma()) * s.coefficient::<T>();
        for (a, &m) in spec.entries.iter().zip(mult) {
            if m > 0 {
                term = term * pow(a, u64::from(m));
            }
        }
        total = total + term;
    }
    Ok(total)
}

/// Signed sum over compositions `rho` of `n`: each part `x` weighs `a_x` and
/// `rho` carries sign `(-a0)^(n - parts)`. Only `a0 = +-1` is accepted.
pub fn det_trudi_compositions<T: Scalar>(spec: &HessenbergSpec<T>) -> Result<T> {
    let n = spec.n();
    if n > COMPOSITION_LIMIT {
        return Err(Error::Unsupported(format!("composition expansion limited to n <= {COMPOSITION_LIMIT}, got {n}")));
    }
    let positive = spec.a0 == -T::one();
    if !positive && !spec.a0.is_one() {
        return Err(Error::Unsupported(format!("composition expansion needs a0 = +-1, got {}", spec.a0)));
    }
    let mut total = T::zero();
    for rho in compositions(n as u32) {
        let weight = rho.parts.iter().fold(T::one(), |w, &x| w * spec.entries[x as usize - 1].clone());
        if positive || (n - rho.len()).is_multiple_of(2) {
            total = total + weight;
        } else {
            total = total - weight;
        }
    }
    Ok(total)
}

/// Materializes the matrix and runs Bareiss fraction-free elimination with
/// row pivoting. Every division is exact over an integral domain.
pub fn det_dense<T: Scalar>(spec: &HessenbergSpec<T>) -> Result<T> {
    let n = spec.n();
    if n > DENSE_LIMIT {
        return Err(Error::Size(format!("dense evaluation limited to n <= {DENSE_LIMIT}, got {n}")));
    }
    Ok(bareiss(spec.to_matrix()))
}

/// Determinant of a square matrix by Bareiss elimination.
pub fn bareiss<T: Scalar>(mut m: Vec<Vec<T>>) -> T {
    let n = m.len();
    if n == 0 {
        return T::one();
    }
    let mut negate = false;
    let mut prev = T::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return T::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (m[i][j].clone() * m[k][k].clone() - m[i][k].clone() * m[k][j].clone()) / prev.clone();
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Evaluator selector used by the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Recurrence,
    TrudiPartitions,
    TrudiCompositions,
    Dense,
}

impl Method {
    pub const ALL: [Method; 4] =
        [Method::Recurrence, Method::TrudiPartitions, Method::TrudiCompositions, Method::Dense];

    pub fn name(&self) -> &'static str {
        match self {
            Method::Recurrence => "recurrence",
            Method::TrudiPartitions => "trudi-partitions",
            Method::TrudiCompositions => "trudi-compositions",
            Method::Dense => "dense",
        }
    }

    pub fn evaluate<T: Scalar>(&self, spec: &HessenbergSpec<T>) -> Result<T> {
        match self {
            Method::Recurrence => Ok(det_recurrence(spec)),
            Method::TrudiPartitions => det_trudi_partitions(spec),
            Method::TrudiCompositions => det_trudi_compositions(spec),
            Method::Dense => det_dense(spec),
        }
    }
}

impl FromStr for Method {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Method::ALL.into_iter().find(|m| m.name() == s).ok_or_else(|| Error::Usage(format!("unknown method `{s}`")))
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}
