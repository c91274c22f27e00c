//! Restricted linear tilings: a 1 x L strip covered by pieces of prescribed
//! lengths, where a piece length may come in several colors.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalar::{from_i64, Scalar};
use crate::sequences::SequenceKind;

/// Largest strip length [`enumerate_tilings`] will list.
pub const ENUMERATION_LIMIT: usize = 18;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Piece {
    pub length: u32,
    pub colors: u32,
}

/// Allowed pieces, sorted by length, lengths distinct.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PieceSet {
    pieces: Vec<Piece>,
}

impl PieceSet {
    pub fn new(mut pieces: Vec<Piece>) -> Result<Self> {
        pieces.sort();
        for p in &pieces {
            if p.length == 0 || p.colors == 0 {
                return Err(Error::Parameter(format!(
                    "piece lengths and colors must be positive, got {}:{}",
                    p.length, p.colors
                )));
            }
        }
        if pieces.windows(2).any(|w| w[0].length == w[1].length) {
            return Err(Error::Parameter("piece lengths must be distinct".into()));
        }
        Ok(PieceSet { pieces })
    }

    /// One color per length.
    pub fn uniform<I: IntoIterator<Item = u32>>(lengths: I) -> Result<Self> {
        PieceSet::new(lengths.into_iter().map(|length| Piece { length, colors: 1 }).collect())
    }

    pub fn pieces(&self) -> &[Piece] {
        &self.pieces
    }
}

impl FromStr for PieceSet {
    type Err = Error;

    /// Parses `L1[:C1],L2[:C2],...`.
    fn from_str(s: &str) -> Result<Self> {
        let parse = |tok: &str| tok.trim().parse::<u32>().map_err(|_| Error::Usage(format!("bad piece spec `{tok}`")));
        let pieces = s
            .split(',')
            .map(|item| match item.split_once(':') {
                Some((l, c)) => Ok(Piece { length: parse(l)?, colors: parse(c)? }),
                None => Ok(Piece { length: parse(item)?, colors: 1 }),
            })
            .collect::<Result<Vec<_>>>()?;
        PieceSet::new(pieces)
    }
}

impl fmt::Display for PieceSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.pieces.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            if p.colors == 1 {
                write!(f, "{}", p.length)?;
            } else {
                write!(f, "{}:{}", p.length, p.colors)?;
            }
        }
        Ok(())
    }
}

/// A piece placed in a tiling; `color` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Placed {
    pub length: u32,
    pub color: u32,
}

pub type Tiling = Vec<Placed>;

/// Number of tilings of a strip of `length` cells, by the transfer recurrence
/// `count(L) = sum colors(l) * count(L - l)`, `count(0) = 1`.
pub fn count_tilings<T: Scalar>(length: usize, pieces: &PieceSet) -> T {
    let mut counts: Vec<T> = Vec::with_capacity(length + 1);
    counts.push(T::one());
    for l in 1..=length {
        let mut c = T::zero();
        for p in pieces.pieces() {
            let pl = p.length as usize;
            if pl <= l {
                c = c + from_i64::<T>(i64::from(p.colors)) * counts[l - pl].clone();
            }
        }
        counts.push(c);
    }
    counts.pop().expect("counts holds count(0)")
}

/// Lists every tiling of `length` cells; refuses lengths above
/// [`ENUMERATION_LIMIT`].
pub fn enumerate_tilings(length: usize, pieces: &PieceSet) -> Result<Vec<Tiling>> {
    if length > ENUMERATION_LIMIT {
        return Err(Error::Size(format!("tiling enumeration limited to length {ENUMERATION_LIMIT}, got {length}")));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extend(length, pieces, &mut current, &mut out);
    Ok(out)
}

fn extend(remaining: usize, pieces: &PieceSet, current: &mut Tiling, out: &mut Vec<Tiling>) {
    if remaining == 0 {
        out.push(current.clone());
        return;
    }
    for p in pieces.pieces() {
        if p.length as usize > remaining {
            break;
        }
        for color in 1..=p.colors {
            current.push(Placed { length: p.length, color });
            extend(remaining - p.length as usize, pieces, current, out);
            current.pop();
        }
    }
}

/// Piece set whose tilings each sequence family counts.
///
/// The plain families map through their generalized forms (Fibonacci is
/// `KStepFibonacci(2)`, Tribonacci is `GenTribonacci(3)`, Padovan is
/// `GenPadovan(3)`).
pub fn pieces_for(kind: SequenceKind) -> Result<PieceSet> {
    kind.validate()?;
    match kind {
        SequenceKind::Fibonacci => pieces_for(SequenceKind::KStepFibonacci(2)),
        SequenceKind::Tribonacci => pieces_for(SequenceKind::GenTribonacci(3)),
        SequenceKind::Padovan => pieces_for(SequenceKind::GenPadovan(3)),
        SequenceKind::GenTribonacci(r) => PieceSet::uniform([1, 2, r]),
        SequenceKind::SkipTribonacci(r) => PieceSet::uniform([1, r.div_ceil(2), r]),
        SequenceKind::KStepFibonacci(r) => PieceSet::uniform(1..=r),
        SequenceKind::GenPadovan(r) => PieceSet::uniform([2, r]),
        SequenceKind::QSequence(r) => PieceSet::uniform(2..=r),
        SequenceKind::SquareRmino(r) => PieceSet::uniform([1, r]),
    }
}

/// Index shift `d` with `count_tilings(L, pieces_for(kind)) = seq_term(kind, L + d)`.
pub fn index_shift(kind: SequenceKind) -> Result<usize> {
    kind.validate()?;
    Ok(match kind {
        SequenceKind::Fibonacci => 1,
        SequenceKind::Tribonacci => 2,
        SequenceKind::Padovan => 3,
        SequenceKind::GenTribonacci(r) | SequenceKind::SkipTribonacci(r) | SequenceKind::KStepFibonacci(r) => {
            r as usize - 1
        }
        SequenceKind::GenPadovan(r) | SequenceKind::QSequence(r) => r as usize,
        SequenceKind::SquareRmino(_) => 0,
    })
}
