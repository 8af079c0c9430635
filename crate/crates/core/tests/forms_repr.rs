mod common;

use common::{elements, unit_elements};
use proptest::prelude::*;
use symalg::json::{element_from_json, element_to_json};
use symalg::repr::{gamma_mat, lambda_mat, reconstruct, reconstruct_via, ReconstructionRoute};
use symalg::{AlgebraParams, CycQ, Error, SymbolElement};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn adjoint_identities((p, zs) in elements(2)) {
        let (z, w) = (&zs[0], &zs[1]);
        let eta = SymbolElement::scalar(&p, z.reduced_norm());
        let adj = z.adjoint();
        prop_assert_eq!(z * &adj, eta.clone());
        prop_assert_eq!(&adj * z, eta);
        prop_assert_eq!(adj.adjoint(), z.scale(&z.reduced_norm()));
        prop_assert_eq!((z * w).adjoint(), &w.adjoint() * &adj);
    }

    #[test]
    fn quadratic_form_identities((_p, zs) in elements(2)) {
        let (z, w) = (&zs[0], &zs[1]);
        let tau = z.reduced_trace();
        prop_assert_eq!(z.pi_form(), z.adjoint().reduced_trace());
        prop_assert_eq!(z.pi_form() * CycQ::from_int(2), &tau * &tau - (z * z).reduced_trace());
        prop_assert_eq!((z * w).pi_form(), (w * z).pi_form());
    }

    #[test]
    fn cayley_hamilton((p, zs) in elements(1)) {
        let z = &zs[0];
        let c = z.char_poly();
        let lhs = z.pow(3) - z.pow(2).scale(&c.tau) + z.scale(&c.pi) - SymbolElement::scalar(&p, c.eta);
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn norm_is_multiplicative((_p, zs) in elements(2)) {
        let (z, w) = (&zs[0], &zs[1]);
        prop_assert_eq!((z * w).reduced_norm(), z.reduced_norm() * w.reduced_norm());
    }

    #[test]
    fn representations_are_morphisms((_p, zs) in elements(2)) {
        let (z, w) = (&zs[0], &zs[1]);
        prop_assert_eq!(lambda_mat(&(z * w)), &lambda_mat(z) * &lambda_mat(w));
        prop_assert_eq!(gamma_mat(&(z * w)), &gamma_mat(w) * &gamma_mat(z));
        prop_assert_eq!(&lambda_mat(z) * &gamma_mat(w), &gamma_mat(w) * &lambda_mat(z));
    }

    #[test]
    fn determinants_and_traces((_p, zs) in elements(1)) {
        let z = &zs[0];
        let l = lambda_mat(z);
        prop_assert_eq!(l.det(), z.reduced_norm().pow(3));
        prop_assert_eq!(l.trace(), CycQ::from_int(9) * z.coeff(0));
        prop_assert_eq!(gamma_mat(z).det(), l.det());
    }

    #[test]
    fn reconstruction((_p, zs) in elements(1)) {
        let z = &zs[0];
        prop_assert_eq!(reconstruct(z).unwrap(), z.scale(&CycQ::from_int(3)));
    }

    #[test]
    fn twists_preserve_the_norm_at_unit_parameters(zs in unit_elements(1)) {
        let z = &zs[0];
        let d = lambda_mat(z).det();
        for k in 1..3 {
            prop_assert_eq!(lambda_mat(&z.twist(k)).det(), d.clone());
            prop_assert_eq!(gamma_mat(&z.twist(k)).det(), d.clone());
        }
    }

    #[test]
    fn json_round_trip((_p, zs) in elements(1)) {
        let z = &zs[0];
        prop_assert_eq!(&element_from_json(&element_to_json(z)).unwrap(), z);
    }
}

#[test]
fn trace_and_norm_of_generators() {
    let p = AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(5)).unwrap();
    let x = SymbolElement::x(&p);
    assert_eq!(x.reduced_trace(), CycQ::zero());
    assert_eq!(x.pi_form(), CycQ::zero());
    assert_eq!(x.reduced_norm(), CycQ::from_int(2));
    assert_eq!(SymbolElement::y(&p).reduced_norm(), CycQ::from_int(5));
    assert_eq!(SymbolElement::one(&p).char_poly().tau, CycQ::from_int(3));
}

#[test]
fn zero_divisors_have_no_inverse() {
    // 1 + x + x^2 at a = 1 is annihilated by 1 - x
    let p = AlgebraParams::unit();
    let z = SymbolElement::from_ints(&p, [1, 1, 1, 0, 0, 0, 0, 0, 0]);
    assert_eq!(z.reduced_norm(), CycQ::zero());
    assert_eq!(z.inverse(), Err(Error::NotInvertible));
    assert!((&z * &SymbolElement::from_ints(&p, [1, -1, 0, 0, 0, 0, 0, 0, 0])).is_zero());
}

#[test]
fn inverse_of_an_invertible_element() {
    let p = AlgebraParams::new(CycQ::omega(), CycQ::from_ints(1, 1)).unwrap();
    let z = SymbolElement::from_ints(&p, [2, 0, 1, -1, 0, 3, 0, 0, 1]);
    let inv = z.inverse().unwrap();
    assert_eq!(&z * &inv, SymbolElement::one(&p));
    assert_eq!(&inv * &z, SymbolElement::one(&p));
}

#[test]
fn printed_weights_only_reconstruct_at_unit_parameters() {
    let z = SymbolElement::from_ints(&AlgebraParams::unit(), [1, 2, 3, 4, 5, 6, 7, 8, 9]);
    assert_eq!(reconstruct_via(&z, ReconstructionRoute::LeftPrintedWeights), z.scale(&CycQ::from_int(3)));
    let p = AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(3)).unwrap();
    let z = z.with_params(&p);
    assert_ne!(reconstruct_via(&z, ReconstructionRoute::LeftPrintedWeights), z.scale(&CycQ::from_int(3)));
    assert_eq!(reconstruct_via(&z, ReconstructionRoute::Left), z.scale(&CycQ::from_int(3)));
}
