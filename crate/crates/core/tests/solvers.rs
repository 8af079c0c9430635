mod common;

use common::elements;
use proptest::prelude::*;
use symalg::sampling::standard_params;
use symalg::solver::search::{find_structured_instance, structured_sweep};
use symalg::solver::{self, Hypothesis, Verdict};
use symalg::{AlgebraParams, CycQ, Error, SymbolElement};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn sylvester_recovers_the_planted_solution((_p, zs) in elements(3)) {
        let (a, b, w) = (&zs[0], &zs[1], &zs[2]);
        let c = &(a * w) - &(w * b);
        let sol = solver::solve_sylvester(a, b, &c).unwrap();
        prop_assert!(sol.contains(w));
        if let Some(z) = &sol.particular {
            prop_assert_eq!(&(a * z) - &(z * b), c);
        }
        for k in &sol.kernel {
            prop_assert!((&(a * k) - &(k * b)).is_zero());
        }
    }

    #[test]
    fn commutator_equation((_p, zs) in elements(2)) {
        let (a, w) = (&zs[0], &zs[1]);
        let c = &(a * w) - &(w * a);
        let sol = solver::solve_commutator(a, &c).unwrap();
        prop_assert!(sol.contains(w));
        prop_assert!(sol.dimension() >= 3);
    }

    #[test]
    fn conjugate_elements_intertwine((_p, zs) in elements(2)) {
        let (a, w) = (&zs[0], &zs[1]);
        prop_assume!(w.is_invertible());
        let b = &(&w.inverse().unwrap() * a) * w;
        let res = solver::solve_intertwine(a, &b).unwrap();
        prop_assert!(res.solutions.contains(w));
        prop_assert!(!res.invertible.is_empty());
        prop_assert!(res.invertible.iter().all(|c| c.traces_equal && c.norms_equal));
    }
}

#[test]
fn centralizer_of_x() {
    for p in standard_params() {
        let x = SymbolElement::x(&p);
        let s = solver::solve_commute(&x);
        assert_eq!(s.dimension(), 3);
        assert_eq!(s.verdict, Verdict::AffineFamily);
        assert!(s.contains(&SymbolElement::one(&p)) && s.contains(&x) && s.contains(&(&x * &x)));
        assert!(!s.contains(&SymbolElement::y(&p)));
    }
}

#[test]
fn scalars_commute_with_everything() {
    let p = AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(3)).unwrap();
    let s = solver::solve_commute(&SymbolElement::scalar(&p, CycQ::from_int(5)));
    assert_eq!(s.verdict, Verdict::AllOfSpace);
}

#[test]
fn commutators_have_zero_trace() {
    let p = AlgebraParams::unit();
    let s = solver::solve_commutator(&SymbolElement::x(&p), &SymbolElement::one(&p)).unwrap();
    assert_eq!(s.verdict, Verdict::NoSolution);
    assert!(s.particular.is_none());
}

#[test]
fn regular_operator_gives_a_unique_solution() {
    let p = AlgebraParams::unit();
    let a = SymbolElement::from_ints(&p, [2, 1, 0, 0, 0, 0, 0, 0, 0]);
    let b = SymbolElement::from_ints(&p, [0, 0, 0, 1, 0, 0, 0, 0, 0]);
    assert!(!solver::intertwining_operator(&a, &b).unwrap().det().is_zero());
    let w = SymbolElement::from_ints(&p, [1, 0, 2, 0, -1, 0, 0, 3, 0]);
    let c = &(&a * &w) - &(&w * &b);
    let s = solver::solve_sylvester(&a, &b, &c).unwrap();
    assert_eq!(s.verdict, Verdict::Unique);
    assert_eq!(s.particular, Some(w));
}

#[test]
fn generators_with_different_norms_have_no_invertible_intertwiner() {
    let p = AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(3)).unwrap();
    let res = solver::solve_intertwine(&SymbolElement::x(&p), &SymbolElement::y(&p)).unwrap();
    assert!(res.invertible.is_empty());
    for k in &res.solutions.kernel {
        assert!(!k.is_invertible());
    }
}

#[test]
fn mismatched_algebras_are_rejected() {
    let p = AlgebraParams::unit();
    let q = AlgebraParams::new(CycQ::from_int(2), CycQ::one()).unwrap();
    let err = solver::solve_intertwine(&SymbolElement::x(&p), &SymbolElement::x(&q)).unwrap_err();
    assert_eq!(err, Error::ParamsMismatch);
}

#[test]
fn hypotheses_are_checked_in_order() {
    let p = AlgebraParams::unit();
    let a = SymbolElement::from_ints(&p, [1, 1, 0, 0, 0, 0, 0, 0, 0]);
    let b = SymbolElement::from_ints(&p, [2, 1, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(
        solver::structured_solutions(&a, &b).unwrap_err(),
        Error::HypothesisViolated(Hypothesis::EqualScalarParts)
    );
    let one = SymbolElement::one(&p);
    assert_eq!(
        solver::structured_solutions(&one, &a).unwrap_err(),
        Error::HypothesisViolated(Hypothesis::NonzeroPureParts)
    );
    let neg = SymbolElement::from_ints(&p, [1, -1, 0, 0, 0, 0, 0, 0, 0]);
    assert_eq!(
        solver::structured_solutions(&a, &neg).unwrap_err(),
        Error::HypothesisViolated(Hypothesis::PurePartsNotOpposite)
    );
    let y = SymbolElement::from_ints(&p, [1, 0, 0, 1, 0, 0, 0, 0, 0]);
    assert_eq!(
        solver::structured_solutions(&a, &y).unwrap_err(),
        Error::HypothesisViolated(Hypothesis::PureNormsVanish)
    );
}

#[test]
fn first_structured_instance_in_the_box() {
    let inst = find_structured_instance(2).unwrap();
    assert_eq!(inst.pure_a, [-2, -2, -2, -2, -1, 2, -1, 2]);
    assert_eq!(inst.pure_b, [-2, -2, -2, -2, -1, 2, 2, -1]);
    assert_eq!(inst.pi, "-30");
    assert_eq!(inst.admissible, 5938);
    let (a, b) = inst.elements(&CycQ::one());
    solver::check_structured_hypotheses(&a, &b).unwrap();
    assert!(matches!(solver::structured_solutions(&a, &b), Err(Error::VerificationFailed(_))));

    let pair = solver::structured_candidates(&a, &b).unwrap();
    assert!(!(&(&a * &pair.x1) - &(&pair.x1 * &b)).is_zero());
    assert!(!(&(&a * &pair.x2) - &(&pair.x2 * &b)).is_zero());
    let (a0, b0) = (a.pure_part(), b.pure_part());
    assert_ne!(&a0 * &a0, &b0 * &b0);
    assert_eq!(solver::solve_intertwine(&a, &b).unwrap().solutions.dimension(), 3);
}

#[test]
fn candidates_solve_exactly_when_squares_agree() {
    let s = structured_sweep(1);
    assert_eq!(s.pairs, 18200);
    assert_eq!((s.x1_solves, s.x2_solves, s.squares_equal), (320, 320, 320));
    assert!(s.solves_iff_squares_equal);
}

#[test]
fn candidates_solve_the_commuting_case() {
    let inst = find_structured_instance(2).unwrap();
    let (a, _) = inst.elements(&CycQ::from_int(4));
    let pair = solver::structured_solutions(&a, &a).unwrap();
    assert_eq!(pair.x1, a.pure_part().scale(&CycQ::from_int(2)));
}
