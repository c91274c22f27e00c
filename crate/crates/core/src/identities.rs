//! Executable registry of the determinant identities, with exact checking over
//! parameter ranges.
//!
//! Each [`IdentityCase`] bundles one or more [`Clause`]s. A clause owns its
//! reported id, its `(r, n)` domain and an evaluation: either a determinant
//! family (left side from [`det_recurrence_prefixes`]) paired with a closed
//! form, or a custom pair of exact values. Every field is public and every
//! evaluator is a plain function pointer, so a registry can be copied and
//! altered (for instance to exercise failure paths in a front end).

use std::fmt;

use num_integer::Integer;
use num_traits::{One, Zero};

use crate::combinatorics::binomial;
use crate::determinant::{det_recurrence_prefixes, make_entries, EntryRule};
use crate::error::{Error, Result};
use crate::scalar::{pow, sign_pow};
use crate::sequences::{seq_term, SequenceCache, SequenceKind};
use crate::series::{expand_rational, gf_catalog, GfFamily};
use crate::{ExactInt, ExactRational};

/// Inclusive lower bound and optional inclusive upper bound on `n`.
pub type NRange = (u32, Option<u32>);

/// The `n`-range of a clause at parameter `r`, or `None` when `r` is outside
/// the clause's parameter domain.
pub type Domain = fn(u32) -> Option<NRange>;

/// Closed form for the right side at `(r, n)`. The slice holds the
/// determinants `D_0..D_n` of the clause's entry family, for right sides that
/// are recurrences in the determinant itself.
pub type ClosedForm = fn(u32, u32, &[ExactInt]) -> Result<ExactInt>;

/// Both sides at `(r, n)` for identities whose left side is not a determinant
/// family.
pub type CustomPair = fn(u32, u32) -> Result<(ExactInt, ExactInt)>;

#[derive(Clone, Copy)]
pub enum Evaluation {
    Determinant { rule: fn(u32) -> EntryRule, rhs: ClosedForm },
    Custom(CustomPair),
}

impl fmt::Debug for Evaluation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Evaluation::Determinant { rule, .. } => write!(f, "Determinant({})", rule(3)),
            Evaluation::Custom(_) => f.write_str("Custom"),
        }
    }
}

/// One checkable display.
#[derive(Debug, Clone)]
pub struct Clause {
    pub id: &'static str,
    pub domain: Domain,
    pub eval: Evaluation,
}

impl Clause {
    /// The `n`-range at `r`, or `None` when `r` is out of domain.
    pub fn range(&self, r: u32) -> Option<NRange> {
        (self.domain)(r)
    }

    pub fn contains(&self, r: u32, n: u32) -> bool {
        match self.range(r) {
            Some((lo, hi)) => n >= lo && hi.is_none_or(|h| n <= h),
            None => false,
        }
    }
}

#[derive(Debug, Clone)]
pub struct IdentityCase {
    pub id: &'static str,
    pub description: &'static str,
    /// Short quotation locating the statement in its source.
    pub anchor: &'static str,
    pub clauses: Vec<Clause>,
}

impl IdentityCase {
    /// Entry rule of the first determinant clause defined at `r`.
    pub fn rule(&self, r: u32) -> Option<EntryRule> {
        self.clauses.iter().find_map(|c| match c.eval {
            Evaluation::Determinant { rule, .. } if c.range(r).is_some() => Some(rule(r)),
            _ => None,
        })
    }

    /// Whether any clause is defined at `r`.
    pub fn applies_to(&self, r: u32) -> bool {
        self.clauses.iter().any(|c| c.range(r).is_some())
    }
}

/// Outcome of one `(identity, r, n)` check; `pass` iff `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct IdentityReport {
    pub id: String,
    pub r: u32,
    pub n: u32,
    pub lhs: ExactInt,
    pub rhs: ExactInt,
    pub pass: bool,
}

impl IdentityReport {
    fn new(id: &str, r: u32, n: u32, lhs: ExactInt, rhs: ExactInt) -> Self {
        let pass = lhs == rhs;
        IdentityReport { id: id.to_string(), r, n, lhs, rhs, pass }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Verification {
    pub reports: Vec<IdentityReport>,
    pub summary: Summary,
}

impl Verification {
    pub fn failures(&self) -> impl Iterator<Item = &IdentityReport> {
        self.reports.iter().filter(|r| !r.pass)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}

/// Checks every clause of `case` that is defined at `(r, n)`.
pub fn check_identity(case: &IdentityCase, r: u32, n: u32) -> Result<Vec<IdentityReport>> {
    let mut out = Vec::new();
    for clause in case.clauses.iter().filter(|c| c.contains(r, n)) {
        out.push(check_clause(clause, r, n)?);
    }
    if out.is_empty() {
        return Err(Error::Domain(format!("{} is not stated at r = {r}, n = {n}", case.id)));
    }
    Ok(out)
}

fn check_clause(clause: &Clause, r: u32, n: u32) -> Result<IdentityReport> {
    match clause.eval {
        Evaluation::Determinant { rule, rhs } => {
            let dets = determinants(&rule(r), n)?;
            let right = rhs(r, n, &dets)?;
            Ok(IdentityReport::new(clause.id, r, n, dets[n as usize].clone(), right))
        }
        Evaluation::Custom(pair) => {
            let (lhs, rhs) = pair(r, n)?;
            Ok(IdentityReport::new(clause.id, r, n, lhs, rhs))
        }
    }
}

fn determinants(rule: &EntryRule, n: u32) -> Result<Vec<ExactInt>> {
    if n == 0 {
        return Ok(vec![ExactInt::one()]);
    }
    let spec = make_entries::<ExactInt>(rule, n as usize)?;
    Ok(det_recurrence_prefixes(&spec))
}

/// Runs the standard registry; see [`check_cases`].
pub fn check_all(r_set: &[u32], n_max: u32, subset: Option<&[String]>) -> Result<Verification> {
    check_cases(&registry(), r_set, n_max, subset)
}

/// Checks every in-domain `(clause, r, n)` with `n <= n_max` for `r` in
/// `r_set`, sorted by `(id, r, n)`. `subset` filters by case id (all of its
/// clauses) or clause id (that clause alone); an unknown id is a usage error.
/// Determinants for a clause are computed once per `r` and shared across `n`.
pub fn check_cases(
    cases: &[IdentityCase],
    r_set: &[u32],
    n_max: u32,
    subset: Option<&[String]>,
) -> Result<Verification> {
    if let Some(ids) = subset {
        for id in ids {
            let known = cases.iter().any(|c| c.id == id || c.clauses.iter().any(|cl| cl.id == id));
            if !known {
                return Err(Error::Usage(format!("unknown identity id `{id}`")));
            }
        }
    }
    let selected = |case: &IdentityCase, clause: &Clause| match subset {
        None => true,
        Some(ids) => ids.iter().any(|id| id == case.id || id == clause.id),
    };
    let mut rs = r_set.to_vec();
    rs.sort_unstable();
    rs.dedup();

    let mut reports = Vec::new();
    for case in cases {
        for clause in case.clauses.iter().filter(|cl| selected(case, cl)) {
            for &r in &rs {
                let Some((lo, hi)) = clause.range(r) else { continue };
                let top = hi.map_or(n_max, |h| h.min(n_max));
                if lo > top {
                    continue;
                }
                match clause.eval {
                    Evaluation::Determinant { rule, rhs } => {
                        let dets = determinants(&rule(r), top)?;
                        for n in lo..=top {
                            let right = rhs(r, n, &dets[..=n as usize])?;
                            reports.push(IdentityReport::new(clause.id, r, n, dets[n as usize].clone(), right));
                        }
                    }
                    Evaluation::Custom(pair) => {
                        for n in lo..=top {
                            let (lhs, rhs) = pair(r, n)?;
                            reports.push(IdentityReport::new(clause.id, r, n, lhs, rhs));
                        }
                    }
                }
            }
        }
    }
    reports.sort_by(|a, b| (&a.id, a.r, a.n).cmp(&(&b.id, b.r, b.n)));
    let passed = reports.iter().filter(|r| r.pass).count();
    let summary = Summary { total: reports.len(), passed, failed: reports.len() - passed };
    Ok(Verification { reports, summary })
}

/// Looks up a case by id in the standard registry.
pub fn find(id: &str) -> Option<IdentityCase> {
    registry().into_iter().find(|c| c.id == id)
}

// ---------------------------------------------------------------------------
// evaluation helpers

fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn c(n: i64, k: i64) -> ExactInt {
    binomial(n, k)
}

fn sign(e: i64) -> ExactInt {
    sign_pow(e.unsigned_abs())
}

fn alt(n: u32) -> ExactInt {
    sign(i64::from(n) - 1)
}

fn two_pow(e: u64) -> ExactInt {
    ExactInt::one() << e
}

fn term(kind: SequenceKind, idx: i64) -> Result<ExactInt> {
    seq_term(kind, idx)
}

fn gen_trib(r: u32) -> SequenceKind {
    SequenceKind::GenTribonacci(r)
}

fn gf_coefficient(family: GfFamily, r: u32, n: u32) -> Result<ExactInt> {
    let gf = gf_catalog::<ExactInt>(family, r)?;
    let mut coeffs = expand_rational(&gf, n as usize)?;
    Ok(coeffs.swap_remove(n as usize - 1))
}

fn gf_determinant(family: GfFamily, r: u32, n: u32) -> Result<ExactInt> {
    let coeff = gf_coefficient(family, r, n)?;
    Ok(if family.alternating() { alt(n) * coeff } else { coeff })
}

fn sum<I: IntoIterator<Item = ExactInt>>(terms: I) -> ExactInt {
    terms.into_iter().fold(ExactInt::zero(), |acc, t| acc + t)
}

// Domains

fn tribonacci_from(lo: u32, r: u32) -> Option<NRange> {
    (r == 3).then_some((lo, None))
}

fn trib_n1(r: u32) -> Option<NRange> {
    tribonacci_from(1, r)
}

fn trib_n2(r: u32) -> Option<NRange> {
    tribonacci_from(2, r)
}

fn trib_n3(r: u32) -> Option<NRange> {
    tribonacci_from(3, r)
}

fn trib_n4(r: u32) -> Option<NRange> {
    tribonacci_from(4, r)
}

fn trib_instances(r: u32) -> Option<NRange> {
    (r == 3).then_some((1, Some(3)))
}

fn r3_from(lo: u32, r: u32) -> Option<NRange> {
    (r >= 3).then_some((lo, None))
}

fn r3_n1(r: u32) -> Option<NRange> {
    r3_from(1, r)
}

fn r3_n2(r: u32) -> Option<NRange> {
    r3_from(2, r)
}

fn r3_n3(r: u32) -> Option<NRange> {
    r3_from(3, r)
}

fn r3_from_r_minus_1(r: u32) -> Option<NRange> {
    r3_from(r.saturating_sub(1), r)
}

fn odd_r3_n1(r: u32) -> Option<NRange> {
    (r >= 3 && r % 2 == 1).then_some((1, None))
}

fn even_r4_n1(r: u32) -> Option<NRange> {
    (r >= 4 && r.is_multiple_of(2)).then_some((1, None))
}

fn i19_domain(r: u32) -> Option<NRange> {
    match r {
        _ if r < 3 => None,
        _ if r % 2 == 1 => Some((r, None)),
        _ => Some((1, None)),
    }
}

fn i19b_domain(r: u32) -> Option<NRange> {
    (r >= 3 && r % 2 == 1).then_some((2, Some(r - 1)))
}

fn i25_domain(r: u32) -> Option<NRange> {
    (r >= 7 && r % 2 == 1).then_some(((r + 3) / 2, None))
}

fn i26_domain(r: u32) -> Option<NRange> {
    (r == 5).then_some((4, None))
}

fn i32_domain(r: u32) -> Option<NRange> {
    (r >= 3 && r % 2 == 1).then_some((r.div_ceil(2), None))
}

fn r2_n1(r: u32) -> Option<NRange> {
    (r >= 2).then_some((1, None))
}

fn i34a_domain(r: u32) -> Option<NRange> {
    (r >= 2).then_some(((r - 1).max(2), None))
}

// Entry rules

fn trib_rule(start: usize, stride: usize, a0: i64) -> EntryRule {
    EntryRule::new(SequenceKind::Tribonacci, start, stride, a0)
}

fn rule_i01(_: u32) -> EntryRule {
    trib_rule(0, 1, 1)
}
fn rule_i02(_: u32) -> EntryRule {
    trib_rule(2, 1, 1)
}
fn rule_i03(_: u32) -> EntryRule {
    trib_rule(0, 1, -1)
}
fn rule_i04(_: u32) -> EntryRule {
    trib_rule(0, 2, -1)
}
fn rule_i05(_: u32) -> EntryRule {
    trib_rule(1, 1, 1)
}
fn rule_i06(_: u32) -> EntryRule {
    trib_rule(1, 1, -1)
}
fn rule_i07(_: u32) -> EntryRule {
    trib_rule(1, 2, 1)
}
fn rule_i08(_: u32) -> EntryRule {
    trib_rule(3, 1, 1)
}
fn rule_i09(_: u32) -> EntryRule {
    trib_rule(3, 2, 1)
}
fn rule_i10(_: u32) -> EntryRule {
    trib_rule(4, 1, 1)
}
fn rule_i11(_: u32) -> EntryRule {
    trib_rule(4, 2, 1)
}
fn rule_i12(_: u32) -> EntryRule {
    trib_rule(5, 1, 1)
}
fn rule_i13(_: u32) -> EntryRule {
    trib_rule(5, 2, 1)
}
fn rule_i31(_: u32) -> EntryRule {
    trib_rule(0, 2, 1)
}

fn gen_rule(r: u32, start: usize, stride: usize, a0: i64) -> EntryRule {
    EntryRule::new(gen_trib(r), start, stride, a0)
}

fn rule_i14(r: u32) -> EntryRule {
    gen_rule(r, 0, 1, 1)
}
fn rule_i15(r: u32) -> EntryRule {
    gen_rule(r, r as usize - 2, 1, 1)
}
fn rule_i16(r: u32) -> EntryRule {
    gen_rule(r, r as usize - 1, 1, 1)
}
fn rule_i17(r: u32) -> EntryRule {
    gen_rule(r, r as usize, 1, 1)
}
fn rule_i18(r: u32) -> EntryRule {
    gen_rule(r, r as usize + 1, 1, 1)
}
fn rule_i19(r: u32) -> EntryRule {
    gen_rule(r, r as usize + 1, 2, 1)
}
fn rule_odd_entries(r: u32) -> EntryRule {
    gen_rule(r, 1, 2, 1)
}
fn rule_i23(r: u32) -> EntryRule {
    gen_rule(r, r as usize, 2, 1)
}
fn rule_i25(r: u32) -> EntryRule {
    gen_rule(r, r as usize + 2, 2, 1)
}
fn rule_i28(r: u32) -> EntryRule {
    gen_rule(r, 0, 2, 1)
}
fn rule_i29(r: u32) -> EntryRule {
    gen_rule(r, 0, 2, -1)
}
fn rule_i30(r: u32) -> EntryRule {
    gen_rule(r, r as usize + 2, 1, 1)
}
fn rule_i32(r: u32) -> EntryRule {
    EntryRule::new(SequenceKind::SkipTribonacci(r), (r as usize - 1) / 2, 1, -1)
}
fn rule_i33(r: u32) -> EntryRule {
    EntryRule::new(SequenceKind::KStepFibonacci(r), 0, 1, -1)
}
fn rule_i34a(r: u32) -> EntryRule {
    EntryRule::new(SequenceKind::KStepFibonacci(r), 0, 1, 1)
}
fn rule_i34b(r: u32) -> EntryRule {
    EntryRule::new(SequenceKind::KStepFibonacci(r), r as usize - 1, 1, 1)
}

// Closed forms: tribonacci entries

fn rhs_i01(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::Fibonacci, i64::from(n) - 2)?)
}

fn rhs_i02(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::Padovan, i64::from(n) + 2)?)
}

fn rhs_i03(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok((two_pow(n.into()) + int(6)).div_floor(&int(14)))
}

/// The integer sequence `c_2 = 1, c_3 = 2, c_n = 3 c_(n-1) + 2 c_(n-2)`, which
/// both surd roots `(3 +- sqrt 17) / 2` satisfy.
pub fn surd_recurrence(n: u32) -> Result<ExactInt> {
    if n < 2 {
        return Err(Error::Domain(format!("surd closed form needs n >= 2, got {n}")));
    }
    let (mut prev, mut cur) = (int(1), int(2));
    if n == 2 {
        return Ok(prev);
    }
    for _ in 3..n {
        let next = int(3) * &cur + int(2) * &prev;
        prev = std::mem::replace(&mut cur, next);
    }
    Ok(cur)
}

fn rhs_i04(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    surd_recurrence(n)
}

fn rhs_i05(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let n = i64::from(n);
    let upper = (n - 2).div_euclid(3);
    Ok(sign(n - 1) * sum((0..=upper).map(|i| c(n - 2 - 2 * i, i))))
}

fn rhs_i06(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let m = 2 * i64::from(n) - 4;
    Ok(sum((0..=m.div_euclid(3)).map(|i| c(m - 2 * i, i))))
}

fn rhs_i07(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    // floor(4 * 3^(n-3)) = floor(4 * 3^n / 27)
    let value = (int(4) * pow(&int(3), n.into())).div_floor(&int(27));
    Ok(alt(n) * value)
}

fn zero(_: u32, _: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(ExactInt::zero())
}

fn four(_: u32, _: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(int(4))
}

/// `(-2)^(n-1) sum_{i<n} 2^(-i-floor(i/2)) C(n-1-i, floor(i/2))` in integers.
///
/// Each power of two is folded into `2^(n-1-i-floor(i/2))`; the exponent is
/// nonnegative whenever the binomial is nonzero, and a violation is reported as
/// an error rather than truncated.
pub fn halving_binomial_sum(n: u32) -> Result<ExactInt> {
    let n = i64::from(n);
    let mut total = ExactInt::zero();
    for i in 0..n {
        let b = c(n - 1 - i, i / 2);
        if b.is_zero() {
            continue;
        }
        let e = n - 1 - i - i / 2;
        if e < 0 {
            return Err(Error::Domain(format!("negative power of two at n = {n}, i = {i}")));
        }
        total += two_pow(e as u64) * b;
    }
    Ok(sign(n - 1) * total)
}

fn rhs_i09(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    halving_binomial_sum(n)
}

fn rhs_i10(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(mod3_alternating(i64::from(n)))
}

// (-1)^n, (-1)^(n+1), 0 for n = 0, 1, 2 mod 3
fn mod3_alternating(n: i64) -> ExactInt {
    match n.rem_euclid(3) {
        0 => sign(n),
        1 => sign(n + 1),
        _ => ExactInt::zero(),
    }
}

fn rhs_i11(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(int(4) * alt(n))
}

fn rhs_i12(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let n = i64::from(n);
    Ok(sum((0..=(n + 1) / 2).map(|i| c(n + 2 + i, n + 1 - 2 * i))))
}

// Closed forms: generalized entries

fn rhs_i14(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::Fibonacci, i64::from(n) - i64::from(r) + 1)?)
}

fn rhs_i15(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::SquareRmino(r), i64::from(n) - 2)?)
}

fn rhs_i16(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::GenPadovan(r), i64::from(n + r) - 1)?)
}

fn rhs_i17(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(if n == r { alt(n) } else { ExactInt::zero() })
}

fn rhs_i18(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let (r, n) = (i64::from(r), i64::from(n));
    Ok(sum((0..=n / (r - 1)).map(|i| sign(r * i) * c(n - (r - 2) * i, i))))
}

fn rhs_i19(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    if r % 2 == 1 {
        return Ok(int(4) * alt(n));
    }
    let (r, n) = (i64::from(r), i64::from(n));
    let upper = (2 * (n - 1)).div_euclid(r);
    Ok(sign(n - 1) * sum((0..=upper).map(|i| c(n - 1 - (r / 2 - 1) * i, i))))
}

fn rhs_i19b(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let scale = if n >= r.div_ceil(2) { 3 } else { 1 };
    Ok(int(scale) * alt(n))
}

fn pair_i19b_bq(_: u32, n: u32) -> Result<(ExactInt, ExactInt)> {
    let n = i64::from(n);
    let lhs = sum((0..=n / 2).map(|i| sign(i) * c(n - i, i)));
    Ok((lhs, mod3_alternating(n)))
}

/// The auxiliary sequence `a_1..a_n` (odd `r`) or `b_1..b_n` (even `r`) whose
/// signed terms are `det(1; T_1, T_3, ..., T_(2n-1))` over `T^(r)`; index 0 is
/// unused and set to zero.
pub fn odd_entries_auxiliary(r: u32, n: u32) -> Result<Vec<ExactInt>> {
    if r < 3 {
        return Err(Error::Parameter(format!("auxiliary sequence needs r >= 3, got {r}")));
    }
    let (r, n) = (r as usize, n as usize);
    let mut fib = SequenceCache::<ExactInt>::new(SequenceKind::Fibonacci)?;
    let mut a = vec![ExactInt::zero(); n + 1];
    if r % 2 == 1 {
        let h = r.div_ceil(2);
        for m in 1..=n {
            a[m] = if m < h {
                ExactInt::zero()
            } else if m < r {
                fib.term(2 * m + 1 - r).clone()
            } else if m == r {
                int(1) + fib.term(r + 1)
            } else {
                int(3) * &a[m - 1] - &a[m - 2] + &a[m - h]
            };
        }
    } else {
        let h = r / 2;
        for m in 1..=n {
            a[m] = if m < h {
                ExactInt::zero()
            } else if m <= r {
                fib.term(2 * m + 1 - r).clone()
            } else {
                int(3) * &a[m - 1] - &a[m - 2] + &a[m - h] - &a[m - h - 1]
            };
        }
    }
    Ok(a)
}

fn rhs_i20_21(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let aux = odd_entries_auxiliary(r, n)?;
    Ok(alt(n) * &aux[n as usize])
}

fn rhs_i22(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    gf_determinant(GfFamily::OddEntries, r, n)
}

fn rhs_i23(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    if r % 2 == 1 {
        return gf_determinant(GfFamily::ShiftedOddEntries, r, n);
    }
    let mut half = SequenceCache::<ExactInt>::new(SequenceKind::SquareRmino(r / 2))?;
    let a = half.prefix(n as usize).to_vec();
    let n = n as usize;
    Ok(alt(n as u32) * sum((0..n).map(|i| &a[i] * &a[n - 1 - i])))
}

/// Exact-rational evaluation of the `(-2)^(n-1)` halving sum, term by term as
/// written, with no exponent folding.
pub fn halving_binomial_sum_rational(n: u32) -> ExactRational {
    let n = i64::from(n);
    let mut total = ExactRational::zero();
    for i in 0..n {
        let weight = ExactRational::new(ExactInt::one(), two_pow((i + i / 2) as u64));
        total += weight * ExactRational::from_integer(c(n - 1 - i, i / 2));
    }
    ExactRational::from_integer(pow(&int(-2), (n - 1) as u64)) * total
}

fn rhs_i24(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let value = halving_binomial_sum_rational(n);
    if !value.is_integer() {
        return Err(Error::Domain(format!("halving sum is not an integer at n = {n}")));
    }
    Ok(value.to_integer())
}

/// Which case of the stride-two tail identity for odd `r >= 7` applies at `n`,
/// with `m = (r - 1) / 2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TailBranch {
    /// `n = q m`: value `(-1)^(n-q)`.
    Multiple {
        q: u32,
    },
    /// `n - 1 = q m`: value `2 (-1)^(n-1-q)`.
    OneAbove {
        q: u32,
    },
    /// `n - 2 = q m`: value `(-1)^(n-q)`.
    TwoAbove {
        q: u32,
    },
    Otherwise,
}

impl TailBranch {
    pub fn classify(r: u32, n: u32) -> TailBranch {
        let m = (r - 1) / 2;
        if n.is_multiple_of(m) {
            TailBranch::Multiple { q: n / m }
        } else if (n - 1).is_multiple_of(m) {
            TailBranch::OneAbove { q: (n - 1) / m }
        } else if n >= 2 && (n - 2).is_multiple_of(m) {
            TailBranch::TwoAbove { q: (n - 2) / m }
        } else {
            TailBranch::Otherwise
        }
    }

    pub fn value(&self, n: u32) -> ExactInt {
        let n = i64::from(n);
        match *self {
            TailBranch::Multiple { q } => sign(n - i64::from(q)),
            TailBranch::OneAbove { q } => int(2) * sign(n - 1 - i64::from(q)),
            TailBranch::TwoAbove { q } => sign(n - i64::from(q)),
            TailBranch::Otherwise => ExactInt::zero(),
        }
    }
}

fn rhs_i25(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(TailBranch::classify(r, n).value(n))
}

fn rhs_i26(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(if n.is_multiple_of(2) { ExactInt::zero() } else { int(2) * sign(i64::from((n - 1) / 2)) })
}

fn rhs_i28(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    gf_determinant(GfFamily::EvenEntries, r, n)
}

fn rhs_i29(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    gf_determinant(GfFamily::EvenEntriesNeg, r, n)
}

fn rhs_i30(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    gf_determinant(GfFamily::TailEntries, r, n)
}

/// `a_m = sum_i C(m-2i, i) 2^i 3^(m-3i)`.
pub fn even_entries_auxiliary(m: i64) -> ExactInt {
    if m < 0 {
        return ExactInt::zero();
    }
    sum((0..=m / 3).map(|i| c(m - 2 * i, i) * two_pow(i as u64) * pow(&int(3), (m - 3 * i) as u64)))
}

fn rhs_i31(_: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let n = i64::from(n);
    Ok(sign(n - 1) * (even_entries_auxiliary(n - 2) - even_entries_auxiliary(n - 3)))
}

fn rhs_i32(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let (r, n) = (i64::from(r), i64::from(n));
    let m = 2 * n - r - 1;
    Ok(sum((0..=m.div_euclid(r)).map(|i| c(m - (r - 1) * i, i))))
}

fn rhs_i33(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    let num = two_pow(n.into()) + two_pow(r.into()) - int(2);
    let den = two_pow(u64::from(r) + 1) - int(2);
    Ok(num.div_floor(&den))
}

fn rhs_i34a(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::KStepFibonacci(r - 1), i64::from(n) - 2)?)
}

fn rhs_i34b(r: u32, n: u32, _: &[ExactInt]) -> Result<ExactInt> {
    Ok(alt(n) * term(SequenceKind::QSequence(r), i64::from(n + r) - 1)?)
}

fn rhs_i35(_: u32, n: u32, dets: &[ExactInt]) -> Result<ExactInt> {
    let n = n as usize;
    Ok(match n {
        2 => int(1),
        3 => int(2),
        _ => int(3) * &dets[n - 1] + int(2) * &dets[n - 2],
    })
}

/// The three worked equalities, as `(literal expression, printed value)`.
pub fn worked_example(instance: u32) -> Result<(ExactInt, ExactInt)> {
    let mut cache = SequenceCache::<ExactInt>::new(SequenceKind::Tribonacci)?;
    let t: Vec<ExactInt> = cache.prefix(10).to_vec();
    let p = |e: &ExactInt, k: u64| pow(e, k);
    Ok(match instance {
        1 => (p(&t[2], 3) + int(2) * &t[2] * &t[6] + p(&t[4], 2) + &t[10], int(100)),
        2 => (
            p(&t[3], 4) - int(3) * p(&t[3], 2) * &t[4] + int(2) * &t[3] * &t[5] + p(&t[4], 2) - &t[6],
            ExactInt::zero(),
        ),
        3 => (
            p(&t[2], 5) - int(4) * p(&t[2], 3) * &t[3] + int(3) * p(&t[2], 2) * &t[4] + int(3) * &t[2] * p(&t[3], 2)
                - int(2) * &t[2] * &t[5]
                - int(2) * &t[3] * &t[4]
                + &t[6],
            term(SequenceKind::Padovan, 7)?,
        ),
        _ => return Err(Error::Domain(format!("worked example has instances 1..3, got {instance}"))),
    })
}

fn pair_i36(_: u32, n: u32) -> Result<(ExactInt, ExactInt)> {
    worked_example(n)
}

// ---------------------------------------------------------------------------
// registry

fn det(id: &'static str, domain: Domain, rule: fn(u32) -> EntryRule, rhs: ClosedForm) -> Clause {
    Clause { id, domain, eval: Evaluation::Determinant { rule, rhs } }
}

fn case(id: &'static str, description: &'static str, anchor: &'static str, clauses: Vec<Clause>) -> IdentityCase {
    IdentityCase { id, description, anchor, clauses }
}

fn single(
    id: &'static str,
    description: &'static str,
    anchor: &'static str,
    domain: Domain,
    rule: fn(u32) -> EntryRule,
    rhs: ClosedForm,
) -> IdentityCase {
    case(id, description, anchor, vec![det(id, domain, rule, rhs)])
}

/// Every identity, in id order. Tribonacci-only cases are stated at `r = 3`.
pub fn registry() -> Vec<IdentityCase> {
    const THM2: &str = "The following formulas hold";
    const THM3: &str = "Let $n\\geq1$, except where stated otherwise";
    const GTH1: &str = "where $\\delta_{n,r}$ is the Kronecker delta";
    const GTH2: &str = "subscripts increasing by either one or two";
    const GTH3: &str = "with $a_r=1+F_{r+1}$";
    const GTH5: &str = "Let $r \\geq 3$ be odd and";
    const GTH6: &str = "Direct computations yield the following further expressions";
    vec![
        single("I-01", "det(1; T_0, ..., T_(n-1)) = (-1)^(n-1) F_(n-2), n >= 2", THM2, trib_n2, rule_i01, rhs_i01),
        single("I-02", "det(1; T_2, ..., T_(n+1)) = (-1)^(n-1) P_(n+2), n >= 1", THM2, trib_n1, rule_i02, rhs_i02),
        single("I-03", "det(-1; T_0, ..., T_(n-1)) = floor((2^n + 6) / 14), n >= 1", THM3, trib_n1, rule_i03, rhs_i03),
        single(
            "I-04",
            "det(-1; T_0, T_2, ..., T_(2n-2)) = sum over roots of x^2 = 3x + 2 with c_2 = 1, c_3 = 2, n >= 2",
            THM3,
            trib_n2,
            rule_i04,
            rhs_i04,
        ),
        single(
            "I-05",
            "det(1; T_1, ..., T_n) = (-1)^(n-1) sum_i C(n-2-2i, i), n >= 1",
            THM3,
            trib_n1,
            rule_i05,
            rhs_i05,
        ),
        single("I-06", "det(-1; T_1, ..., T_n) = sum_i C(2n-4-2i, i), n >= 2", THM3, trib_n2, rule_i06, rhs_i06),
        single(
            "I-07",
            "det(1; T_1, T_3, ..., T_(2n-1)) = (-1)^(n-1) floor(4 * 3^(n-3)), n >= 1",
            THM3,
            trib_n1,
            rule_i07,
            rhs_i07,
        ),
        single("I-08", "det(1; T_3, ..., T_(n+2)) = 0, n >= 4", THM3, trib_n4, rule_i08, zero),
        single(
            "I-09",
            "det(1; T_3, T_5, ..., T_(2n+1)) = (-2)^(n-1) sum_i 2^(-i-floor(i/2)) C(n-1-i, floor(i/2)), n >= 1",
            THM3,
            trib_n1,
            rule_i09,
            rhs_i09,
        ),
        single(
            "I-10",
            "det(1; T_4, ..., T_(n+3)) = (-1)^n, (-1)^(n+1), 0 for n = 0, 1, 2 mod 3, n >= 2",
            THM3,
            trib_n2,
            rule_i10,
            rhs_i10,
        ),
        single("I-11", "det(1; T_4, T_6, ..., T_(2n+2)) = 4 (-1)^(n-1), n >= 3", THM3, trib_n3, rule_i11, rhs_i11),
        single(
            "I-12",
            "det(1; T_5, ..., T_(n+4)) = sum_i C(n+2+i, n+1-2i), n >= 1",
            THM3,
            trib_n1,
            rule_i12,
            rhs_i12,
        ),
        single("I-13", "det(1; T_5, T_7, ..., T_(2n+3)) = 4, n >= 3", THM3, trib_n3, rule_i13, four),
        single(
            "I-14",
            "det(1; T^(r)_0, ..., T^(r)_(n-1)) = (-1)^(n-1) F_(n-r+1), n >= r-1",
            GTH1,
            r3_from_r_minus_1,
            rule_i14,
            rhs_i14,
        ),
        single(
            "I-15",
            "det(1; T^(r)_(r-2), ..., T^(r)_(n+r-3)) = (-1)^(n-1) a^(r)_(n-2), n >= 2",
            GTH1,
            r3_n2,
            rule_i15,
            rhs_i15,
        ),
        single(
            "I-16",
            "det(1; T^(r)_(r-1), ..., T^(r)_(n+r-2)) = (-1)^(n-1) P^(r)_(n+r-1), n >= 1",
            GTH1,
            r3_n1,
            rule_i16,
            rhs_i16,
        ),
        single(
            "I-17",
            "det(1; T^(r)_r, ..., T^(r)_(n+r-1)) = (-1)^(n-1) delta(n, r), n >= 3",
            GTH1,
            r3_n3,
            rule_i17,
            rhs_i17,
        ),
        single(
            "I-18",
            "det(1; T^(r)_(r+1), ..., T^(r)_(n+r)) = sum_i (-1)^(ri) C(n-(r-2)i, i), n >= 2",
            GTH2,
            r3_n2,
            rule_i18,
            rhs_i18,
        ),
        single(
            "I-19",
            "det(1; T^(r)_(r+1), T^(r)_(r+3), ..., T^(r)_(2n+r-1)) = 4 (-1)^(n-1) for odd r, n >= r; \
             (-1)^(n-1) sum_i C(n-1-(r/2-1)i, i) for even r, n >= 1",
            GTH2,
            i19_domain,
            rule_i19,
            rhs_i19,
        ),
        case(
            "I-19b",
            "odd r: det(1; T^(r)_(r+1), ..., T^(r)_(2n+r-1)) = 3 (-1)^(n-1) for (r+1)/2 <= n < r and \
             (-1)^(n-1) for 2 <= n < (r+1)/2; sum_i (-1)^i C(n-i, i) = (-1)^n, (-1)^(n+1), 0 by n mod 3",
            "by the well-known formula",
            vec![
                det("I-19b", i19b_domain, rule_i19, rhs_i19b),
                Clause { id: "I-19b.bq", domain: trib_n1, eval: Evaluation::Custom(pair_i19b_bq) },
            ],
        ),
        single(
            "I-20",
            "odd r: det(1; T^(r)_1, T^(r)_3, ..., T^(r)_(2n-1)) = (-1)^(n-1) a_n, a_n = 3a_(n-1) - a_(n-2) + a_(n-(r+1)/2)",
            GTH3,
            odd_r3_n1,
            rule_odd_entries,
            rhs_i20_21,
        ),
        single(
            "I-21",
            "even r: det(1; T^(r)_1, T^(r)_3, ..., T^(r)_(2n-1)) = (-1)^(n-1) b_n, \
             b_n = 3b_(n-1) - b_(n-2) + b_(n-r/2) - b_(n-r/2-1)",
            GTH3,
            even_r4_n1,
            rule_odd_entries,
            rhs_i20_21,
        ),
        single(
            "I-22",
            "det(1; T^(r)_1, T^(r)_3, ..., T^(r)_(2n-1)) = (-1)^(n-1) [x^n] f(x) (odd r) or g(x) (even r)",
            "one can show the generating function",
            r3_n1,
            rule_odd_entries,
            rhs_i22,
        ),
        single(
            "I-23",
            "det(1; T^(r)_r, T^(r)_(r+2), ..., T^(r)_(2n+r-2)) = (-1)^(n-1) k^(r)_n (odd r) or \
             (-1)^(n-1) sum_i a^(r/2)_i a^(r/2)_(n-1-i) (even r)",
            "where $k_n^{(r)}$ is determined by",
            r3_n1,
            rule_i23,
            rhs_i23,
        ),
        single(
            "I-24",
            "det(1; T_3, T_5, ..., T_(2n+1)) = (-2)^(n-1) sum_i 2^(-i-floor(i/2)) C(n-1-i, floor(i/2)), \
             evaluated over the rationals",
            "which yields the explicit formula stated above",
            trib_n1,
            rule_i09,
            rhs_i24,
        ),
        single(
            "I-25",
            "odd r >= 7: det(1; T^(r)_(r+2), T^(r)_(r+4), ..., T^(r)_(2n+r)) by n mod (r-1)/2, n >= (r+3)/2",
            GTH5,
            i25_domain,
            rule_i25,
            rhs_i25,
        ),
        single(
            "I-26",
            "det(1; T^(5)_7, T^(5)_9, ..., T^(5)_(2n+5)) = 0 (n even), 2 (-1)^((n-1)/2) (n odd), n >= 4",
            GTH5,
            i26_domain,
            rule_i25,
            rhs_i26,
        ),
        single("I-27", "det(1; T_5, T_7, ..., T_(2n+3)) = 4, n >= 3", GTH5, trib_n3, rule_i13, four),
        single(
            "I-28",
            "sum_n det(1; T^(r)_0, T^(r)_2, ..., T^(r)_(2n-2)) x^n = even-entries generating function",
            GTH6,
            r3_n1,
            rule_i28,
            rhs_i28,
        ),
        single(
            "I-29",
            "sum_n det(-1; T^(r)_0, T^(r)_2, ..., T^(r)_(2n-2)) x^n = even-entries-neg generating function",
            GTH6,
            r3_n1,
            rule_i29,
            rhs_i29,
        ),
        single(
            "I-30",
            "sum_n det(1; T^(r)_(r+2), ..., T^(r)_(n+r+1)) x^n = tail-entries generating function",
            GTH6,
            r3_n1,
            rule_i30,
            rhs_i30,
        ),
        single(
            "I-31",
            "det(1; T_0, T_2, ..., T_(2n-2)) = (-1)^(n-1) (a_(n-2) - a_(n-3)), \
             a_m = sum_i C(m-2i, i) 2^i 3^(m-3i), n >= 3",
            "leading to the closed form expression",
            trib_n3,
            rule_i31,
            rhs_i31,
        ),
        single(
            "I-32",
            "odd r: det(-1; S^(r)_((r-1)/2), ..., S^(r)_(n+(r-3)/2)) = sum_i C(2n-r-1-(r-1)i, i), n >= (r+1)/2",
            "If $r \\geq 3$ is odd, then",
            i32_domain,
            rule_i32,
            rhs_i32,
        ),
        single(
            "I-33",
            "det(-1; F^(r)_0, ..., F^(r)_(n-1)) = floor((2^n + 2^r - 2) / (2^(r+1) - 2)), n >= 1",
            "If $r \\geq 2$, then",
            r2_n1,
            rule_i33,
            rhs_i33,
        ),
        case(
            "I-34",
            "det(1; F^(r)_0, ..., F^(r)_(n-1)) = (-1)^(n-1) F^(r-1)_(n-2), n >= max(r-1, 2); \
             det(1; F^(r)_(r-1), ..., F^(r)_(n+r-2)) = (-1)^(n-1) Q^(r)_(n+r-1), n >= 1",
            "The arguments used to establish",
            vec![det("I-34a", i34a_domain, rule_i34a, rhs_i34a), det("I-34b", r2_n1, rule_i34b, rhs_i34b)],
        ),
        single(
            "I-35",
            "a_n = det(-1; T_0, T_2, ..., T_(2n-2)) satisfies a_n = 3a_(n-1) + 2a_(n-2), n >= 4, a_2 = 1, a_3 = 2",
            "satisfies the recurrence $a_n=3a_{n-1}+2a_{n-2}$",
            trib_n2,
            rule_i04,
            rhs_i35,
        ),
        case(
            "I-36",
            "worked example: T_2^3 + 2T_2T_6 + T_4^2 + T_10 = 100; T_3^4 - 3T_3^2T_4 + 2T_3T_5 + T_4^2 - T_6 = 0; \
             T_2^5 - 4T_2^3T_3 + 3T_2^2T_4 + 3T_2T_3^2 - 2T_2T_5 - 2T_3T_4 + T_6 = P_7 = 1",
            "It follows for example from formulas",
            vec![Clause { id: "I-36", domain: trib_instances, eval: Evaluation::Custom(pair_i36) }],
        ),
    ]
}
