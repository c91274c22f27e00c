//! Rational ordinary generating functions with integer coefficients, and the
//! catalog of closed-form generating functions for the determinant families.

use std::fmt;
use std::str::FromStr;

use crate::determinant::EntryRule;
use crate::error::{Error, Result};
use crate::scalar::{from_i64, Scalar};
use crate::sequences::SequenceKind;

/// Dense polynomial `c_0 + c_1 x + ... + c_d x^d` with no trailing zeros.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntPolynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> IntPolynomial<T> {
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    /// Sums `c * x^e` over the given monomials; repeated exponents combine.
    pub fn from_monomials(terms: &[(i64, usize)]) -> Self {
        let degree = terms.iter().map(|&(_, e)| e).max().unwrap_or(0);
        let mut coeffs = vec![T::zero(); degree + 1];
        for &(c, e) in terms {
            coeffs[e] = coeffs[e].clone() + from_i64::<T>(c);
        }
        IntPolynomial::new(coeffs)
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }
}

impl<T: Scalar> fmt::Display for IntPolynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let negative = c.is_negative();
            let mag = c.abs();
            if first {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => f.write_str("x")?,
                (1, false) => write!(f, "{mag}x")?,
                (_, true) => write!(f, "x^{e}")?,
                (_, false) => write!(f, "{mag}x^{e}")?,
            }
        }
        Ok(())
    }
}

/// `num(x) / den(x)` as a formal power series; `den(0)` must be one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalGF<T> {
    pub num: IntPolynomial<T>,
    pub den: IntPolynomial<T>,
}

impl<T: Scalar> RationalGF<T> {
    pub fn new(num: IntPolynomial<T>, den: IntPolynomial<T>) -> Result<Self> {
        let gf = RationalGF { num, den };
        gf.check_normalized()?;
        Ok(gf)
    }

    fn check_normalized(&self) -> Result<()> {
        if self.den.coeff(0).is_one() {
            Ok(())
        } else {
            Err(Error::Normalization(format!("denominator constant term must be 1, got {}", self.den.coeff(0))))
        }
    }
}

impl<T: Scalar> fmt::Display for RationalGF<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.num, self.den)
    }
}

/// Coefficients of `x^1 .. x^terms`, from `c_n = num_n - sum_{k>=1} den_k c_(n-k)`.
pub fn expand_rational<T: Scalar>(gf: &RationalGF<T>, terms: usize) -> Result<Vec<T>> {
    gf.check_normalized()?;
    let den = gf.den.coeffs();
    let mut c: Vec<T> = Vec::with_capacity(terms + 1);
    for n in 0..=terms {
        let mut v = gf.num.coeff(n);
        for k in 1..den.len().min(n + 1) {
            v = v - den[k].clone() * c[n - k].clone();
        }
        c.push(v);
    }
    c.remove(0);
    Ok(c)
}

/// Determinant families with a catalogued generating function.
///
/// Names describe the entry vector. With `r` the tribonacci parameter and
/// `T = T^(r)`:
///
/// | family | entries | a0 | coefficient n |
/// |---|---|---|---|
/// | `odd-entries` | `T_1, T_3, ..., T_(2n-1)` | 1 | `(-1)^(n-1) det` |
/// | `shifted-odd-entries` (odd r) | `T_r, T_(r+2), ...` | 1 | `(-1)^(n-1) det` |
/// | `even-entries` | `T_0, T_2, ..., T_(2n-2)` | 1 | `det` |
/// | `even-entries-neg` | `T_0, T_2, ..., T_(2n-2)` | -1 | `det` |
/// | `tail-entries` | `T_(r+2), T_(r+3), ...` | 1 | `det` |
///
/// The `trib-*` families are the literal `r = 3` displays; `trib-shifted-odd-entries`
/// already carries the sign, so its coefficients are the determinants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GfFamily {
    OddEntries,
    ShiftedOddEntries,
    EvenEntries,
    EvenEntriesNeg,
    TailEntries,
    TribShiftedOddEntries,
    TribEvenEntries,
    TribEvenEntriesNeg,
    TribTailEntries,
}

impl GfFamily {
    pub const ALL: [GfFamily; 9] = [
        GfFamily::OddEntries,
        GfFamily::ShiftedOddEntries,
        GfFamily::EvenEntries,
        GfFamily::EvenEntriesNeg,
        GfFamily::TailEntries,
        GfFamily::TribShiftedOddEntries,
        GfFamily::TribEvenEntries,
        GfFamily::TribEvenEntriesNeg,
        GfFamily::TribTailEntries,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            GfFamily::OddEntries => "odd-entries",
            GfFamily::ShiftedOddEntries => "shifted-odd-entries",
            GfFamily::EvenEntries => "even-entries",
            GfFamily::EvenEntriesNeg => "even-entries-neg",
            GfFamily::TailEntries => "tail-entries",
            GfFamily::TribShiftedOddEntries => "trib-shifted-odd-entries",
            GfFamily::TribEvenEntries => "trib-even-entries",
            GfFamily::TribEvenEntriesNeg => "trib-even-entries-neg",
            GfFamily::TribTailEntries => "trib-tail-entries",
        }
    }

    /// True for the literal `r = 3` displays, which ignore `r` beyond requiring 3.
    pub fn is_tribonacci_only(&self) -> bool {
        matches!(
            self,
            GfFamily::TribShiftedOddEntries
                | GfFamily::TribEvenEntries
                | GfFamily::TribEvenEntriesNeg
                | GfFamily::TribTailEntries
        )
    }

    /// Whether `r` is in the family's domain.
    pub fn applies_to(&self, r: u32) -> bool {
        match self {
            _ if self.is_tribonacci_only() => r == 3,
            GfFamily::ShiftedOddEntries => r >= 3 && r % 2 == 1,
            _ => r >= 3,
        }
    }

    /// True when coefficient `n` equals `(-1)^(n-1)` times the determinant.
    pub fn alternating(&self) -> bool {
        matches!(self, GfFamily::OddEntries | GfFamily::ShiftedOddEntries)
    }

    /// The determinant family whose size-`n` value coefficient `n` encodes.
    pub fn entry_rule(&self, r: u32) -> Result<EntryRule> {
        self.check(r)?;
        let kind = SequenceKind::GenTribonacci(r);
        let r = r as usize;
        Ok(match self {
            GfFamily::OddEntries => EntryRule::new(kind, 1, 2, 1),
            GfFamily::ShiftedOddEntries | GfFamily::TribShiftedOddEntries => EntryRule::new(kind, r, 2, 1),
            GfFamily::EvenEntries | GfFamily::TribEvenEntries => EntryRule::new(kind, 0, 2, 1),
            GfFamily::EvenEntriesNeg | GfFamily::TribEvenEntriesNeg => EntryRule::new(kind, 0, 2, -1),
            GfFamily::TailEntries | GfFamily::TribTailEntries => EntryRule::new(kind, r + 2, 1, 1),
        })
    }

    fn check(&self, r: u32) -> Result<()> {
        if self.applies_to(r) {
            Ok(())
        } else {
            Err(Error::Parameter(format!("family `{}` is not defined for r = {r}", self.name())))
        }
    }
}

impl FromStr for GfFamily {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GfFamily::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown generating-function family `{s}`")))
    }
}

impl fmt::Display for GfFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

// (coefficient, exponent) pairs
type Monomials = Vec<(i64, usize)>;

// (-x)^e contributes sign (-1)^e
fn alt(e: usize) -> i64 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The catalogued generating function of `family` at parameter `r`, with every
/// `(-x)^k` expanded into a signed monomial.
pub fn gf_catalog<T: Scalar>(family: GfFamily, r: u32) -> Result<RationalGF<T>> {
    family.check(r)?;
    let r = r as usize;
    let (num, den): (Monomials, Monomials) = match family {
        // x^h + x^r over 1 - 3x + x^2 - x^h, h = (r+1)/2
        GfFamily::OddEntries if r % 2 == 1 => {
            let h = r.div_ceil(2);
            (vec![(1, h), (1, r)], vec![(1, 0), (-3, 1), (1, 2), (-1, h)])
        }
        // x^h (1 - x - x^h) over 1 - 3x + x^2 - x^h + x^(h+1), h = r/2
        GfFamily::OddEntries => {
            let h = r / 2;
            (vec![(1, h), (-1, h + 1), (-1, 2 * h)], vec![(1, 0), (-3, 1), (1, 2), (-1, h), (1, h + 1)])
        }
        // x + x^h over 1 - 2x + x^2 - x^h - x^r, h = (r+1)/2
        GfFamily::ShiftedOddEntries => {
            let h = r.div_ceil(2);
            (vec![(1, 1), (1, h)], vec![(1, 0), (-2, 1), (1, 2), (-1, h), (-1, r)])
        }
        // (-x)^h (-1 - x) over 1 + 3x + x^2 - (-x)^h - (-x)^(h+1) + x^r, h = (r+1)/2
        GfFamily::EvenEntries if r % 2 == 1 => {
            let h = r.div_ceil(2);
            (
                vec![(-alt(h), h), (-alt(h), h + 1)],
                vec![(1, 0), (3, 1), (1, 2), (-alt(h), h), (-alt(h + 1), h + 1), (1, r)],
            )
        }
        // -(-x)^(h+1) over 1 + 3x + x^2 - 2(-x)^h + 3(-x)^(h+1) + x^r, h = r/2
        GfFamily::EvenEntries => {
            let h = r / 2;
            (
                vec![(-alt(h + 1), h + 1)],
                vec![(1, 0), (3, 1), (1, 2), (-2 * alt(h), h), (3 * alt(h + 1), h + 1), (1, r)],
            )
        }
        // x^h (1 - x) over 1 - 3x + x^2 - 3x^h + x^(h+1) - x^r, h = (r+1)/2
        GfFamily::EvenEntriesNeg if r % 2 == 1 => {
            let h = r.div_ceil(2);
            (vec![(1, h), (-1, h + 1)], vec![(1, 0), (-3, 1), (1, 2), (-3, h), (1, h + 1), (-1, r)])
        }
        // x^(h+1) over 1 - 3x + x^2 - 2x^h + x^(h+1) + x^r, h = r/2
        GfFamily::EvenEntriesNeg => {
            let h = r / 2;
            (vec![(1, h + 1)], vec![(1, 0), (-3, 1), (1, 2), (-2, h), (1, h + 1), (1, r)])
        }
        // 3x - 2x^2 - (-x)^(r-2) - (-x)^(r-1) - 2(-x)^r
        //   over 1 - 2x + x^2 + (-x)^(r-2) + (-x)^(r-1) + (-x)^r
        GfFamily::TailEntries => (
            vec![(3, 1), (-2, 2), (-alt(r - 2), r - 2), (-alt(r - 1), r - 1), (-2 * alt(r), r)],
            vec![(1, 0), (-2, 1), (1, 2), (alt(r - 2), r - 2), (alt(r - 1), r - 1), (alt(r), r)],
        ),
        GfFamily::TribShiftedOddEntries => (vec![(1, 1), (-1, 2)], vec![(1, 0), (2, 1), (1, 3)]),
        GfFamily::TribEvenEntries => (vec![(-1, 2), (-1, 3)], vec![(1, 0), (3, 1), (2, 3)]),
        GfFamily::TribEvenEntriesNeg => (vec![(1, 2), (-1, 3)], vec![(1, 0), (-3, 1), (-2, 2)]),
        GfFamily::TribTailEntries => (vec![(4, 1), (-3, 2), (2, 3)], vec![(1, 0), (-3, 1), (2, 2), (-1, 3)]),
    };
    RationalGF::new(IntPolynomial::from_monomials(&num), IntPolynomial::from_monomials(&den))
}
