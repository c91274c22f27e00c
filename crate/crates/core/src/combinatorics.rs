//! Binomial and multinomial coefficients, and lazy enumeration of integer
//! partitions (multiplicity form) and compositions.

use std::iter::FusedIterator;

use crate::error::{Error, Result};
use crate::scalar::{from_i64, Scalar};
use crate::ExactInt;

/// `C(n, k)` in `T`, zero whenever `k < 0`, `k > n` or `n < 0`.
///
/// Uses the running product `C(m, i) = C(m, i-1) * (m-i+1) / i`, where every
/// intermediate quotient is itself a binomial coefficient, so integer division
/// is exact.
pub fn binomial_as<T: Scalar>(n: i64, k: i64) -> T {
    if n < 0 || k < 0 || k > n {
        return T::zero();
    }
    let k = k.min(n - k);
    let mut c = T::one();
    for i in 1..=k {
        c = c * from_i64::<T>(n - k + i) / from_i64::<T>(i);
    }
    c
}

/// `C(n, k)` as an exact integer with the zero convention of [`binomial_as`].
pub fn binomial(n: i64, k: i64) -> ExactInt {
    binomial_as(n, k)
}

/// `(sum parts)! / prod parts_i!` as a product of binomials.
pub fn multinomial_as<T: Scalar>(parts: &[i64]) -> Result<T> {
    if let Some(bad) = parts.iter().find(|&&p| p < 0) {
        return Err(Error::Domain(format!("negative multinomial part {bad}")));
    }
    let mut total = 0i64;
    let mut acc = T::one();
    for &p in parts {
        total += p;
        acc = acc * binomial_as::<T>(total, p);
    }
    Ok(acc)
}

pub fn multinomial(parts: &[i64]) -> Result<ExactInt> {
    multinomial_as(parts)
}

/// A solution `(s_1, ..., s_n)` of `s_1 + 2 s_2 + ... + n s_n = n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PartitionVector {
    s: Vec<u32>,
}

impl PartitionVector {
    /// Validates `sum i * s_i = s.len()`.
    pub fn new(s: Vec<u32>) -> Result<Self> {
        let n = s.len() as u64;
        let weight: u64 = s.iter().enumerate().map(|(i, &m)| (i as u64 + 1) * u64::from(m)).sum();
        if n == 0 || weight != n {
            return Err(Error::Domain(format!("multiplicities {s:?} do not partition {n}")));
        }
        Ok(PartitionVector { s })
    }

    pub fn n(&self) -> usize {
        self.s.len()
    }

    /// Multiplicities `s_1..s_n`; index `i` holds the count of part `i + 1`.
    pub fn multiplicities(&self) -> &[u32] {
        &self.s
    }

    /// Number of parts, `s_1 + ... + s_n`.
    pub fn sigma(&self) -> u64 {
        self.s.iter().map(|&m| u64::from(m)).sum()
    }

    /// Parts in nonincreasing order.
    pub fn parts(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.sigma() as usize);
        for (i, &m) in self.s.iter().enumerate().rev() {
            out.extend(std::iter::repeat_n(i as u32 + 1, m as usize));
        }
        out
    }

    /// The multinomial `p_n(s) = C(s_1 + ... + s_n; s_1, ..., s_n)`, i.e. the
    /// number of compositions with this multiset of parts.
    pub fn coefficient<T: Scalar>(&self) -> T {
        let parts: Vec<i64> = self.s.iter().map(|&m| i64::from(m)).collect();
        multinomial_as(&parts).expect("multiplicities are nonnegative")
    }
}

/// Lexicographic stream of every [`PartitionVector`] of `n`.
#[derive(Debug, Clone)]
pub struct Partitions {
    n: usize,
    next: Option<Vec<u32>>,
}

/// All partitions of `n` in increasing lexicographic order of `(s_1, ..., s_n)`.
pub fn partitions(n: i64) -> Result<Partitions> {
    if n <= 0 {
        return Err(Error::Domain(format!("partitions need n >= 1, got {n}")));
    }
    let n = n as usize;
    let mut first = vec![0; n];
    first[n - 1] = 1;
    Ok(Partitions { n, next: Some(first) })
}

impl Partitions {
    // Successor in lex order: the rightmost position j whose multiplicity can
    // grow while the remainder is still fillable by parts > j; the remainder
    // then goes into a single part (the lex-smallest completion).
    fn successor(&self, s: &[u32]) -> Option<Vec<u32>> {
        let n = self.n;
        let mut prefix = vec![0usize; n + 1];
        for j in 1..=n {
            prefix[j] = prefix[j - 1] + j * s[j - 1] as usize;
        }
        for j in (1..=n).rev() {
            let mut t = s[j - 1] as usize + 1;
            while prefix[j - 1] + j * t <= n {
                let rem = n - prefix[j - 1] - j * t;
                if rem == 0 || rem > j {
                    let mut out = s[..j].to_vec();
                    out[j - 1] = t as u32;
                    out.resize(n, 0);
                    if rem > 0 {
                        out[rem - 1] = 1;
                    }
                    return Some(out);
                }
                t += 1;
            }
        }
        None
    }
}

impl Iterator for Partitions {
    type Item = PartitionVector;

    fn next(&mut self) -> Option<PartitionVector> {
        let current = self.next.take()?;
        self.next = self.successor(&current);
        Some(PartitionVector { s: current })
    }
}

impl FusedIterator for Partitions {}

/// Ordered sequence of positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    pub parts: Vec<u32>,
}

impl Composition {
    pub fn total(&self) -> u64 {
        self.parts.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of parts, `nu(rho)`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }
}

/// Stream of the `2^(n-1)` compositions of `n`, driven by a binary counter over
/// the `n - 1` possible cut points (cut after position 1 is the low bit).
#[derive(Debug, Clone)]
pub struct Compositions {
    n: u32,
    cuts: Vec<bool>,
    done: bool,
}

pub fn compositions(n: u32) -> Compositions {
    Compositions { n, cuts: vec![false; n.saturating_sub(1) as usize], done: false }
}

impl Iterator for Compositions {
    type Item = Composition;

    fn next(&mut self) -> Option<Composition> {
        if self.done {
            return None;
        }
        let mut parts = Vec::new();
        if self.n > 0 {
            let mut run = 1;
            for &cut in &self.cuts {
                if cut {
                    parts.push(run);
                    run = 1;
                } else {
                    run += 1;
                }
            }
            parts.push(run);
        }
        // binary increment; overflow means every mask has been visited
        self.done = true;
        for c in self.cuts.iter_mut() {
            if *c {
                *c = false;
            } else {
                *c = true;
                self.done = false;
                break;
            }
        }
        Some(Composition { parts })
    }
}

impl FusedIterator for Compositions {}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::BTreeMap;

    #[test]
    fn binomial_examples() {
        assert_eq!(binomial(4, 2), ExactInt::from(6));
        assert_eq!(binomial(3, 5), ExactInt::from(0));
        assert_eq!(binomial(-1, 0), ExactInt::from(0));
        assert_eq!(binomial(5, -1), ExactInt::from(0));
        assert_eq!(binomial(6, 3) + binomial(6, 2), ExactInt::from(35));
        assert_eq!(binomial(7, 3), ExactInt::from(35));
        assert_eq!(binomial(0, 0), ExactInt::from(1));
    }

    #[test]
    fn pascal_and_symmetry() {
        for n in 0..=50i64 {
            for k in 0..=n {
                assert_eq!(binomial(n, k), binomial(n, n - k));
                if n > 0 {
                    assert_eq!(binomial(n - 1, k) + binomial(n - 1, k - 1), binomial(n, k));
                }
            }
        }
        assert_eq!(binomial_as::<i128>(60, 30), 118264581564861424);
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial(&[2, 1, 0, 0]).unwrap(), ExactInt::from(3));
        assert_eq!(multinomial(&[0, 0, 0]).unwrap(), ExactInt::from(1));
        assert_eq!(multinomial(&[]).unwrap(), ExactInt::from(1));
        assert_eq!(multinomial(&[1, 0, 1, 0]).unwrap(), ExactInt::from(2));
        assert_eq!(multinomial(&[2, 2, 2]).unwrap(), ExactInt::from(90));
        assert!(matches!(multinomial(&[1, -1]), Err(Error::Domain(_))));
    }

    // Independent partition counter: number of partitions of n into parts <= k.
    fn partition_count(n: usize) -> u64 {
        let mut table = vec![0u64; n + 1];
        table[0] = 1;
        for part in 1..=n {
            for m in part..=n {
                table[m] += table[m - part];
            }
        }
        table[n]
    }

    #[test]
    fn partition_examples() {
        let four: Vec<Vec<u32>> = partitions(4).unwrap().map(|p| p.multiplicities().to_vec()).collect();
        assert_eq!(
            four,
            vec![vec![0, 0, 0, 1], vec![0, 2, 0, 0], vec![1, 0, 1, 0], vec![2, 1, 0, 0], vec![4, 0, 0, 0]]
        );
        let one: Vec<_> = partitions(1).unwrap().collect();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].multiplicities(), &[1]);
        assert_eq!(partitions(25).unwrap().count(), 1958);
        assert!(matches!(partitions(0), Err(Error::Domain(_))));
    }

    #[test]
    fn partition_stream_is_sorted_valid_and_complete() {
        for n in 1..=30usize {
            let all: Vec<PartitionVector> = partitions(n as i64).unwrap().collect();
            assert_eq!(all.len() as u64, partition_count(n), "n = {n}");
            for w in all.windows(2) {
                assert!(w[0].multiplicities() < w[1].multiplicities());
            }
            for p in &all {
                assert!(PartitionVector::new(p.multiplicities().to_vec()).is_ok());
            }
        }
        assert_eq!(partitions(40).unwrap().count() as u64, partition_count(40));
    }

    #[test]
    fn composition_examples() {
        let three: Vec<Vec<u32>> = compositions(3).map(|c| c.parts).collect();
        assert_eq!(three, vec![vec![3], vec![1, 2], vec![2, 1], vec![1, 1, 1]]);
        let zero: Vec<_> = compositions(0).collect();
        assert_eq!(zero.len(), 1);
        assert!(zero[0].is_empty());
        assert_eq!(compositions(10).count(), 512);
        assert!(compositions(12).all(|c| c.total() == 12));
    }

    #[test]
    fn compositions_group_into_partitions() {
        for n in 1..=12u32 {
            let mut classes: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
            for c in compositions(n) {
                let mut parts = c.parts.clone();
                parts.sort_unstable_by(|a, b| b.cmp(a));
                *classes.entry(parts).or_default() += 1;
            }
            let parts: Vec<PartitionVector> = partitions(i64::from(n)).unwrap().collect();
            assert_eq!(classes.len(), parts.len());
            for p in parts {
                let size = classes[&p.parts()];
                assert_eq!(p.coefficient::<i64>(), size as i64, "n = {n}, {:?}", p.parts());
            }
        }
    }
}
