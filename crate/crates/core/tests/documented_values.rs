//! Known values for every public operation, through the crate's public API.

use tribodet::combinatorics::{binomial, compositions, multinomial, partitions};
use tribodet::determinant::{
    det_dense, det_recurrence, det_trudi_compositions, det_trudi_partitions, make_entries, EntryRule, HessenbergSpec,
    Method,
};
use tribodet::identities::{check_all, check_identity, find, registry};
use tribodet::sequences::{seq_range, seq_term, square_rmino_closed, tribonacci_explicit, SequenceKind};
use tribodet::series::{expand_rational, gf_catalog, GfFamily, IntPolynomial, RationalGF};
use tribodet::tilings::{count_tilings, enumerate_tilings, pieces_for, PieceSet};
use tribodet::{Error, ExactInt};

fn int(v: i64) -> ExactInt {
    ExactInt::from(v)
}

fn ints(v: &[i64]) -> Vec<ExactInt> {
    v.iter().map(|&x| int(x)).collect()
}

fn spec(a0: i64, a: &[i64]) -> HessenbergSpec<ExactInt> {
    HessenbergSpec::new(int(a0), ints(a)).unwrap()
}

#[test]
fn sequence_values() {
    assert_eq!(seq_term::<ExactInt>(SequenceKind::Tribonacci, 2).unwrap(), int(1));
    assert_eq!(seq_term::<ExactInt>(SequenceKind::Padovan, 0).unwrap(), int(1));
    assert_eq!(seq_term::<ExactInt>(SequenceKind::GenTribonacci(4), 3).unwrap(), int(1));
    assert_eq!(seq_term::<ExactInt>(SequenceKind::Tribonacci, 10).unwrap(), int(81));
    assert_eq!(seq_range::<ExactInt>(SequenceKind::Tribonacci, 0, 4).unwrap(), ints(&[0, 0, 1, 1, 2]));
    assert_eq!(seq_range::<ExactInt>(SequenceKind::Fibonacci, 0, 0).unwrap(), ints(&[0]));
    assert_eq!(seq_range::<ExactInt>(SequenceKind::GenPadovan(4), 0, 4).unwrap(), ints(&[1, 0, 0, 0, 1]));
    assert!(matches!(seq_range::<ExactInt>(SequenceKind::Fibonacci, 3, 1), Err(Error::Usage(_))));
    assert!(matches!(seq_term::<ExactInt>(SequenceKind::Fibonacci, -1), Err(Error::Domain(_))));
    assert!(matches!(seq_term::<ExactInt>(SequenceKind::SkipTribonacci(4), 1), Err(Error::Parameter(_))));

    assert_eq!(tribonacci_explicit::<ExactInt>(2).unwrap(), int(1));
    assert_eq!(tribonacci_explicit::<ExactInt>(6).unwrap(), int(7));
    assert_eq!(tribonacci_explicit::<ExactInt>(10).unwrap(), int(81));
    assert!(matches!(tribonacci_explicit::<ExactInt>(1), Err(Error::Domain(_))));
    assert_eq!(square_rmino_closed::<ExactInt>(3, 0).unwrap(), int(1));
    assert_eq!(square_rmino_closed::<ExactInt>(3, 5).unwrap(), int(4));
    assert_eq!(square_rmino_closed::<ExactInt>(2, 4).unwrap(), int(5));
    assert!(matches!(square_rmino_closed::<ExactInt>(1, 4), Err(Error::Parameter(_))));
}

#[test]
fn combinatorics_values() {
    assert_eq!(binomial(4, 2), int(6));
    assert_eq!(binomial(3, 5), int(0));
    assert_eq!(binomial(6, 3) + binomial(6, 2), int(35));
    assert_eq!(multinomial(&[2, 1, 0, 0]).unwrap(), int(3));
    assert_eq!(multinomial(&[1, 0, 1, 0]).unwrap(), int(2));
    assert_eq!(partitions(4).unwrap().count(), 5);
    assert_eq!(partitions(25).unwrap().count(), 1958);
    assert_eq!(compositions(3).count(), 4);
    assert_eq!(compositions(10).count(), 512);
}

#[test]
fn tiling_values() {
    let trib = PieceSet::uniform([1, 2, 3]).unwrap();
    assert_eq!(count_tilings::<ExactInt>(4, &trib), int(7));
    assert_eq!(count_tilings::<ExactInt>(0, &trib), int(1));
    assert_eq!(count_tilings::<ExactInt>(6, &PieceSet::uniform([1, 2]).unwrap()), int(13));
    assert_eq!(enumerate_tilings(2, &PieceSet::uniform([1, 2]).unwrap()).unwrap().len(), 2);
    assert_eq!(enumerate_tilings(3, &PieceSet::uniform([1, 3]).unwrap()).unwrap().len(), 2);
    let delta: PieceSet = "1:2,3".parse().unwrap();
    assert_eq!(enumerate_tilings(4, &delta).unwrap().len(), 20);
    assert!(matches!(enumerate_tilings(19, &trib), Err(Error::Size(_))));
    assert_eq!(pieces_for(SequenceKind::GenTribonacci(5)).unwrap(), PieceSet::uniform([1, 2, 5]).unwrap());
    assert_eq!(pieces_for(SequenceKind::KStepFibonacci(2)).unwrap(), PieceSet::uniform([1, 2]).unwrap());
    assert_eq!(pieces_for(SequenceKind::SkipTribonacci(5)).unwrap(), PieceSet::uniform([1, 3, 5]).unwrap());
}

#[test]
fn determinant_values() {
    let t = |start, stride, a0| EntryRule::new(SequenceKind::Tribonacci, start, stride, a0);
    assert_eq!(make_entries::<ExactInt>(&t(0, 1, 1), 3).unwrap().entries(), &ints(&[0, 0, 1])[..]);
    assert_eq!(make_entries::<ExactInt>(&t(3, 2, 1), 2).unwrap().entries(), &ints(&[1, 4])[..]);
    let f2 = EntryRule::new(SequenceKind::KStepFibonacci(2), 0, 1, -1);
    assert_eq!(make_entries::<ExactInt>(&f2, 1).unwrap().entries(), &ints(&[0])[..]);

    assert_eq!(det_recurrence(&spec(1, &[])), int(1));
    assert_eq!(det_recurrence(&spec(1, &[1, 2, 3, 4])), int(1));
    assert_eq!(det_recurrence(&spec(1, &[1, 2, 4])), int(1));
    assert_eq!(det_trudi_partitions(&spec(1, &[1, 2, 3, 4])).unwrap(), int(1));
    assert_eq!(det_trudi_partitions(&spec(7, &[-3])).unwrap(), int(-3));
    assert_eq!(det_trudi_partitions(&spec(-1, &[0, 0, 1])).unwrap(), int(1));
    assert_eq!(det_trudi_compositions(&spec(-1, &[1, 1, 1])).unwrap(), int(4));
    assert_eq!(det_trudi_compositions(&spec(1, &[1, 1, 1])).unwrap(), int(0));
    assert_eq!(det_dense(&spec(1, &[1, 1])).unwrap(), int(0));
    assert_eq!(det_dense(&spec(1, &[5])).unwrap(), int(5));
    assert_eq!(det_dense(&spec(1, &[0, 0, 1, 1])).unwrap(), int(-1));

    assert!(matches!(det_trudi_compositions(&spec(2, &[1, 1])), Err(Error::Unsupported(_))));
    assert!(matches!(det_trudi_partitions(&spec(1, &[1; 46])), Err(Error::Size(_))));
    assert!(matches!(HessenbergSpec::new(int(0), ints(&[1])), Err(Error::Parameter(_) | Error::Domain(_))));

    let m4 = make_entries::<ExactInt>(&t(3, 2, 1), 4).unwrap();
    for method in Method::ALL {
        assert_eq!(method.evaluate(&m4).unwrap(), int(-13), "{method}");
    }
}

#[test]
fn series_values() {
    let gf = |num: &[(i64, usize)], den: &[(i64, usize)]| {
        RationalGF::new(IntPolynomial::from_monomials(num), IntPolynomial::from_monomials(den)).unwrap()
    };
    let a: RationalGF<ExactInt> = gf(&[(1, 1), (-1, 2)], &[(1, 0), (2, 1), (1, 3)]);
    assert_eq!(expand_rational(&a, 4).unwrap(), ints(&[1, -3, 6, -13]));
    let b: RationalGF<ExactInt> = gf(&[(1, 1)], &[(1, 0), (-1, 1)]);
    assert_eq!(expand_rational(&b, 3).unwrap(), ints(&[1, 1, 1]));
    let c: RationalGF<ExactInt> = gf(&[(1, 2), (-1, 3)], &[(1, 0), (-3, 1), (-2, 2)]);
    assert_eq!(expand_rational(&c, 5).unwrap(), ints(&[0, 1, 2, 8, 28]));
    let bad =
        RationalGF::<ExactInt>::new(IntPolynomial::from_monomials(&[(1, 1)]), IntPolynomial::from_monomials(&[(2, 0)]));
    assert!(matches!(bad, Err(Error::Normalization(_))));

    let shifted = gf_catalog::<ExactInt>(GfFamily::ShiftedOddEntries, 3).unwrap();
    assert_eq!(shifted.num, IntPolynomial::from_monomials(&[(1, 1), (1, 2)]));
    assert_eq!(shifted.den, IntPolynomial::from_monomials(&[(1, 0), (-2, 1), (-1, 3)]));
    let tail = gf_catalog::<ExactInt>(GfFamily::TribTailEntries, 3).unwrap();
    assert_eq!(tail.num, IntPolynomial::from_monomials(&[(4, 1), (-3, 2), (2, 3)]));
    assert_eq!(tail.den, IntPolynomial::from_monomials(&[(1, 0), (-3, 1), (2, 2), (-1, 3)]));
    let neg = gf_catalog::<ExactInt>(GfFamily::TribEvenEntriesNeg, 3).unwrap();
    assert_eq!(neg.num, IntPolynomial::from_monomials(&[(1, 2), (-1, 3)]));
    assert_eq!(neg.den, IntPolynomial::from_monomials(&[(1, 0), (-3, 1), (-2, 2)]));
    assert!(matches!(gf_catalog::<ExactInt>(GfFamily::ShiftedOddEntries, 4), Err(Error::Parameter(_))));
}

#[test]
fn identity_values() {
    assert_eq!(registry().len(), 37);
    let i17 = find("I-17").unwrap();
    assert_eq!(i17.rule(4), Some(EntryRule::new(SequenceKind::GenTribonacci(4), 4, 1, 1)));
    let rep = &check_identity(&find("I-01").unwrap(), 3, 7).unwrap()[0];
    assert_eq!((&rep.lhs, &rep.rhs, rep.pass), (&int(5), &int(5), true));
    let rep = &check_identity(&find("I-03").unwrap(), 3, 1).unwrap()[0];
    assert_eq!((&rep.lhs, &rep.rhs), (&int(0), &int(0)));
    let rep = &check_identity(&find("I-36").unwrap(), 3, 1).unwrap()[0];
    assert_eq!(rep.lhs, int(100));
    assert_eq!(check_identity(&find("I-26").unwrap(), 5, 5).unwrap()[0].rhs, int(2));

    let only = |id: &str| Some(vec![id.to_string()]);
    assert_eq!(check_all(&[3], 10, only("I-08").as_deref()).unwrap().reports.len(), 7);
    assert!(check_all(&[4], 10, only("I-20").as_deref()).unwrap().reports.is_empty());
}

#[test]
fn identities_beyond_the_default_range() {
    // odd r keeps the general statements exact; even r adds the two terminal-tile points
    let v = check_all(&[9, 10, 11], 30, None).unwrap();
    let failures: Vec<(String, u32, u32)> = v.failures().map(|f| (f.id.clone(), f.r, f.n)).collect();
    assert_eq!(failures, vec![("I-19".to_string(), 10, 1), ("I-19".to_string(), 10, 5)]);
}
