//! Integer sequence families used as Toeplitz–Hessenberg entries.
//!
//! Every family here is a linear recurrence with unit coefficients: a block of
//! initial terms followed by `x(n) = sum of x(n - lag)` over a fixed lag set.
//! Terms are produced by forward iteration, so evaluating index `n` costs
//! `O(n * lags)` additions and no recursion.

use std::fmt;

use crate::combinatorics::binomial_as;
use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// Selects one of the supported sequence families.
///
/// The parameterized families follow the tiling conventions: `r` is the length
/// of the longest piece.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SequenceKind {
    /// `F(0)=0, F(1)=1, F(n)=F(n-1)+F(n-2)`.
    Fibonacci,
    /// `T(0)=T(1)=0, T(2)=1, T(n)=T(n-1)+T(n-2)+T(n-3)`.
    Tribonacci,
    /// `P(0)=1, P(1)=P(2)=0, P(n)=P(n-2)+P(n-3)`.
    Padovan,
    /// `T(n)=T(n-1)+T(n-2)+T(n-r)`, zeros up to `r-2` then a single one.
    GenTribonacci(u32),
    /// `P(n)=P(n-2)+P(n-r)`, `P(0)=1` followed by `r-1` zeros.
    GenPadovan(u32),
    /// Square and r-mino tilings: `a(n)=a(n-1)+a(n-r)`, first `r` terms one.
    SquareRmino(u32),
    /// Odd `r`: `S(n)=S(n-1)+S(n-(r+1)/2)+S(n-r)`, zeros up to `r-2` then one.
    SkipTribonacci(u32),
    /// Sum of the previous `r` terms, zeros up to `r-2` then one.
    KStepFibonacci(u32),
    /// `Q(n)=Q(n-2)+...+Q(n-r)`, `Q(0)=1` followed by `r-1` zeros.
    QSequence(u32),
}

/// Initial block plus lag set of a unit-coefficient linear recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Recurrence {
    pub initial: Vec<i64>,
    pub lags: Vec<usize>,
}

impl SequenceKind {
    pub const NAMES: [&'static str; 9] = [
        "fibonacci",
        "tribonacci",
        "padovan",
        "gen-tribonacci",
        "gen-padovan",
        "square-rmino",
        "skip-tribonacci",
        "kstep-fibonacci",
        "q-sequence",
    ];

    /// Builds a kind from its lowercase name and optional `r`.
    ///
    /// Unparameterized families reject an `r`; parameterized ones require it.
    pub fn from_name(name: &str, r: Option<u32>) -> Result<Self> {
        let need_r = |r: Option<u32>| r.ok_or_else(|| Error::Parameter(format!("sequence `{name}` requires --r")));
        let no_r = |kind: SequenceKind| match r {
            Some(_) => Err(Error::Parameter(format!("sequence `{name}` takes no --r"))),
            None => Ok(kind),
        };
        let kind = match name {
            "fibonacci" => no_r(SequenceKind::Fibonacci)?,
            "tribonacci" => no_r(SequenceKind::Tribonacci)?,
            "padovan" => no_r(SequenceKind::Padovan)?,
            "gen-tribonacci" => SequenceKind::GenTribonacci(need_r(r)?),
            "gen-padovan" => SequenceKind::GenPadovan(need_r(r)?),
            "square-rmino" => SequenceKind::SquareRmino(need_r(r)?),
            "skip-tribonacci" => SequenceKind::SkipTribonacci(need_r(r)?),
            "kstep-fibonacci" => SequenceKind::KStepFibonacci(need_r(r)?),
            "q-sequence" => SequenceKind::QSequence(need_r(r)?),
            other => return Err(Error::Parameter(format!("unknown sequence kind `{other}`"))),
        };
        kind.validate()?;
        Ok(kind)
    }

    pub fn name(&self) -> &'static str {
        match self {
            SequenceKind::Fibonacci => "fibonacci",
            SequenceKind::Tribonacci => "tribonacci",
            SequenceKind::Padovan => "padovan",
            SequenceKind::GenTribonacci(_) => "gen-tribonacci",
            SequenceKind::GenPadovan(_) => "gen-padovan",
            SequenceKind::SquareRmino(_) => "square-rmino",
            SequenceKind::SkipTribonacci(_) => "skip-tribonacci",
            SequenceKind::KStepFibonacci(_) => "kstep-fibonacci",
            SequenceKind::QSequence(_) => "q-sequence",
        }
    }

    pub fn r(&self) -> Option<u32> {
        match *self {
            SequenceKind::Fibonacci | SequenceKind::Tribonacci | SequenceKind::Padovan => None,
            SequenceKind::GenTribonacci(r)
            | SequenceKind::GenPadovan(r)
            | SequenceKind::SquareRmino(r)
            | SequenceKind::SkipTribonacci(r)
            | SequenceKind::KStepFibonacci(r)
            | SequenceKind::QSequence(r) => Some(r),
        }
    }

    /// Checks the family's constraints on `r`.
    ///
    /// `SquareRmino(2)`, `KStepFibonacci(1)` and `QSequence(2)` are admitted as
    /// the direct specializations of their recurrences; the generalized
    /// identities evaluate them at `r/2` or `r-1`.
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| {
            Err(Error::Parameter(format!("{} requires {what}, got r = {}", self.name(), self.r().unwrap_or(0))))
        };
        match *self {
            SequenceKind::Fibonacci | SequenceKind::Tribonacci | SequenceKind::Padovan => Ok(()),
            SequenceKind::GenTribonacci(r) | SequenceKind::GenPadovan(r) if r < 3 => bad("r >= 3"),
            SequenceKind::SquareRmino(r) if r < 2 => bad("r >= 2"),
            SequenceKind::SkipTribonacci(r) if r < 3 || r % 2 == 0 => bad("odd r >= 3"),
            SequenceKind::KStepFibonacci(r) if r < 1 => bad("r >= 1"),
            SequenceKind::QSequence(r) if r < 2 => bad("r >= 2"),
            _ => Ok(()),
        }
    }

    /// The defining recurrence of this family.
    pub fn recurrence(&self) -> Result<Recurrence> {
        self.validate()?;
        let rec = |initial: Vec<i64>, lags: Vec<usize>| Recurrence { initial, lags };
        // zeros up to r-2, then a one at index r-1
        let delta_last = |r: usize| {
            let mut v = vec![0; r];
            v[r - 1] = 1;
            v
        };
        // one at index 0, then r-1 zeros
        let delta_first = |r: usize| {
            let mut v = vec![0; r];
            v[0] = 1;
            v
        };
        Ok(match *self {
            SequenceKind::Fibonacci => rec(vec![0, 1], vec![1, 2]),
            SequenceKind::Tribonacci => rec(vec![0, 0, 1], vec![1, 2, 3]),
            SequenceKind::Padovan => rec(vec![1, 0, 0], vec![2, 3]),
            SequenceKind::GenTribonacci(r) => {
                let r = r as usize;
                rec(delta_last(r), vec![1, 2, r])
            }
            SequenceKind::GenPadovan(r) => {
                let r = r as usize;
                rec(delta_first(r), vec![2, r])
            }
            SequenceKind::SquareRmino(r) => {
                let r = r as usize;
                rec(vec![1; r], vec![1, r])
            }
            SequenceKind::SkipTribonacci(r) => {
                let r = r as usize;
                rec(delta_last(r), vec![1, r.div_ceil(2), r])
            }
            SequenceKind::KStepFibonacci(r) => {
                let r = r as usize;
                rec(delta_last(r), (1..=r).collect())
            }
            SequenceKind::QSequence(r) => {
                let r = r as usize;
                rec(delta_first(r), (2..=r).collect())
            }
        })
    }
}

impl fmt::Display for SequenceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.r() {
            Some(r) => write!(f, "{}({r})", self.name()),
            None => f.write_str(self.name()),
        }
    }
}

/// Memoized prefix of one sequence, extended on demand.
///
/// Owned by a single caller; share results by cloning the terms out.
#[derive(Debug, Clone)]
pub struct SequenceCache<T> {
    kind: SequenceKind,
    lags: Vec<usize>,
    terms: Vec<T>,
}

impl<T: Scalar> SequenceCache<T> {
    pub fn new(kind: SequenceKind) -> Result<Self> {
        let rec = kind.recurrence()?;
        let terms = rec.initial.iter().map(|&v| crate::scalar::from_i64(v)).collect();
        Ok(SequenceCache { kind, lags: rec.lags, terms })
    }

    pub fn kind(&self) -> SequenceKind {
        self.kind
    }

    fn extend_to(&mut self, n: usize) {
        while self.terms.len() <= n {
            let m = self.terms.len();
            let next = self.lags.iter().fold(T::zero(), |acc, &lag| acc + self.terms[m - lag].clone());
            self.terms.push(next);
        }
    }

    pub fn term(&mut self, n: usize) -> &T {
        self.extend_to(n);
        &self.terms[n]
    }

    /// Terms `0..=n`.
    pub fn prefix(&mut self, n: usize) -> &[T] {
        self.extend_to(n);
        &self.terms[..=n]
    }
}

fn check_index(n: i64) -> Result<usize> {
    usize::try_from(n).map_err(|_| Error::Domain(format!("negative sequence index {n}")))
}

/// The `n`-th term of `kind`.
pub fn seq_term<T: Scalar>(kind: SequenceKind, n: i64) -> Result<T> {
    let n = check_index(n)?;
    let mut cache = SequenceCache::<T>::new(kind)?;
    Ok(cache.term(n).clone())
}

/// Terms `from..=to` of `kind`, computed in one forward pass.
pub fn seq_range<T: Scalar>(kind: SequenceKind, from: i64, to: i64) -> Result<Vec<T>> {
    if from > to {
        return Err(Error::Usage(format!("inverted range {from}..{to}")));
    }
    let from = check_index(from)?;
    let to = check_index(to)?;
    let mut cache = SequenceCache::<T>::new(kind)?;
    Ok(cache.prefix(to)[from..].to_vec())
}

/// Tribonacci numbers from the double binomial sum
/// `T(n) = sum_{i=0}^{floor(n/2)-1} sum_{j=0}^{i} C(i,j) C(n-2-i-j, i)`.
pub fn tribonacci_explicit<T: Scalar>(n: i64) -> Result<T> {
    if n < 2 {
        return Err(Error::Domain(format!("explicit tribonacci formula needs n >= 2, got {n}")));
    }
    let mut total = T::zero();
    for i in 0..n / 2 {
        for j in 0..=i {
            total = total + binomial_as::<T>(i, j) * binomial_as::<T>(n - 2 - i - j, i);
        }
    }
    Ok(total)
}

/// Square-and-r-mino tiling count `a(m) = sum_i C(m - (r-1) i, i)`.
pub fn square_rmino_closed<T: Scalar>(r: u32, m: i64) -> Result<T> {
    SequenceKind::SquareRmino(r).validate()?;
    let m = check_index(m)? as i64;
    let step = i64::from(r) - 1;
    Ok((0..=m / i64::from(r)).fold(T::zero(), |acc, i| acc + binomial_as::<T>(m - step * i, i)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn terms(kind: SequenceKind, to: i64) -> Vec<i64> {
        seq_range::<i64>(kind, 0, to).unwrap()
    }

    #[test]
    fn initial_conditions() {
        assert_eq!(seq_term::<i64>(SequenceKind::Tribonacci, 2).unwrap(), 1);
        assert_eq!(seq_term::<i64>(SequenceKind::Padovan, 0).unwrap(), 1);
        assert_eq!(seq_term::<i64>(SequenceKind::GenTribonacci(4), 3).unwrap(), 1);
        assert_eq!(seq_term::<i64>(SequenceKind::Tribonacci, 10).unwrap(), 81);
    }

    #[test]
    fn ranges() {
        assert_eq!(terms(SequenceKind::Tribonacci, 4), vec![0, 0, 1, 1, 2]);
        assert_eq!(terms(SequenceKind::Fibonacci, 0), vec![0]);
        assert_eq!(terms(SequenceKind::GenPadovan(4), 4), vec![1, 0, 0, 0, 1]);
        assert_eq!(seq_range::<i64>(SequenceKind::Fibonacci, 5, 8).unwrap(), vec![5, 8, 13, 21]);
        assert_eq!(terms(SequenceKind::KStepFibonacci(1), 3), vec![1, 1, 1, 1]);
        assert_eq!(terms(SequenceKind::QSequence(2), 5), vec![1, 0, 1, 0, 1, 0]);
        assert_eq!(terms(SequenceKind::SquareRmino(3), 6), vec![1, 1, 1, 2, 3, 4, 6]);
        assert_eq!(terms(SequenceKind::SkipTribonacci(5), 8), vec![0, 0, 0, 0, 1, 1, 1, 2, 3]);
    }

    #[test]
    fn errors() {
        assert!(matches!(seq_term::<i64>(SequenceKind::Tribonacci, -1), Err(Error::Domain(_))));
        assert!(matches!(seq_term::<i64>(SequenceKind::GenTribonacci(2), 0), Err(Error::Parameter(_))));
        assert!(matches!(seq_term::<i64>(SequenceKind::SkipTribonacci(4), 0), Err(Error::Parameter(_))));
        assert!(matches!(seq_term::<i64>(SequenceKind::SquareRmino(1), 0), Err(Error::Parameter(_))));
        assert!(matches!(seq_range::<i64>(SequenceKind::Fibonacci, 3, 2), Err(Error::Usage(_))));
        assert!(matches!(tribonacci_explicit::<i64>(1), Err(Error::Domain(_))));
        assert!(SequenceKind::from_name("tribonacci", Some(3)).is_err());
        assert!(SequenceKind::from_name("gen-tribonacci", None).is_err());
        assert!(SequenceKind::from_name("lucas", None).is_err());
        assert_eq!(SequenceKind::from_name("gen-tribonacci", Some(5)).unwrap(), SequenceKind::GenTribonacci(5));
    }

    #[test]
    fn explicit_tribonacci_examples() {
        assert_eq!(tribonacci_explicit::<i64>(2).unwrap(), 1);
        assert_eq!(tribonacci_explicit::<i64>(6).unwrap(), 7);
        assert_eq!(tribonacci_explicit::<i64>(10).unwrap(), 81);
    }

    #[test]
    fn square_rmino_examples() {
        assert_eq!(square_rmino_closed::<i64>(3, 0).unwrap(), 1);
        assert_eq!(square_rmino_closed::<i64>(3, 5).unwrap(), 4);
        assert_eq!(square_rmino_closed::<i64>(2, 4).unwrap(), 5);
    }

    #[test]
    fn specializations_agree() {
        let pairs = [
            (SequenceKind::GenTribonacci(3), SequenceKind::Tribonacci),
            (SequenceKind::KStepFibonacci(2), SequenceKind::Fibonacci),
            (SequenceKind::KStepFibonacci(3), SequenceKind::Tribonacci),
            (SequenceKind::GenPadovan(3), SequenceKind::Padovan),
            (SequenceKind::QSequence(3), SequenceKind::Padovan),
            (SequenceKind::SkipTribonacci(3), SequenceKind::Tribonacci),
        ];
        for (a, b) in pairs {
            assert_eq!(seq_range::<BigInt>(a, 0, 40).unwrap(), seq_range::<BigInt>(b, 0, 40).unwrap(), "{a} vs {b}");
        }
    }

    #[test]
    fn explicit_formulas_match_recurrences() {
        let tri = seq_range::<BigInt>(SequenceKind::Tribonacci, 0, 40).unwrap();
        for n in 2..=40 {
            assert_eq!(tribonacci_explicit::<BigInt>(n).unwrap(), tri[n as usize]);
        }
        for r in 2..=8 {
            let a = seq_range::<BigInt>(SequenceKind::SquareRmino(r), 0, 30).unwrap();
            for m in 0..=30 {
                assert_eq!(square_rmino_closed::<BigInt>(r, m).unwrap(), a[m as usize]);
            }
        }
    }

    #[test]
    fn large_index_is_iterative() {
        let t = seq_term::<BigInt>(SequenceKind::Tribonacci, 10_000).unwrap();
        assert!(t.to_string().len() > 2000);
    }

    fn any_kind() -> impl Strategy<Value = SequenceKind> {
        prop_oneof![
            Just(SequenceKind::Fibonacci),
            Just(SequenceKind::Tribonacci),
            Just(SequenceKind::Padovan),
            (3u32..9).prop_map(SequenceKind::GenTribonacci),
            (3u32..9).prop_map(SequenceKind::GenPadovan),
            (2u32..9).prop_map(SequenceKind::SquareRmino),
            (1u32..5).prop_map(|k| SequenceKind::SkipTribonacci(2 * k + 1)),
            (1u32..9).prop_map(SequenceKind::KStepFibonacci),
            (2u32..9).prop_map(SequenceKind::QSequence),
        ]
    }

    proptest! {
        #[test]
        fn terms_are_nonnegative_and_ranges_slice(kind in any_kind(), from in 0i64..40, len in 0i64..20) {
            let all = seq_range::<BigInt>(kind, 0, from + len).unwrap();
            prop_assert!(all.iter().all(|t| *t >= BigInt::from(0)));
            let part = seq_range::<BigInt>(kind, from, from + len).unwrap();
            prop_assert_eq!(&part[..], &all[from as usize..]);
            prop_assert_eq!(seq_term::<BigInt>(kind, from).unwrap(), all[from as usize].clone());
        }

        #[test]
        fn gen_tribonacci_nondecreasing(r in 3u32..9) {
            let t = seq_range::<BigInt>(SequenceKind::GenTribonacci(r), 0, 60).unwrap();
            for w in t[(r as usize - 1)..].windows(2) {
                prop_assert!(w[0] <= w[1]);
            }
        }
    }
}
