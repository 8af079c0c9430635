#![allow(dead_code)]

use proptest::prelude::*;
use symalg::{AlgebraParams, CycQ, SymbolElement};

/// `(r + s w) / d` with small `r`, `s` and `d`.
pub fn scalar() -> impl Strategy<Value = CycQ> {
    (-6i64..=6, -6i64..=6, 1i64..=4).prop_map(|(r, s, d)| CycQ::from_ints(r, s) * CycQ::ratio(1, d))
}

pub fn nonzero_scalar() -> impl Strategy<Value = CycQ> {
    scalar().prop_filter("nonzero", |c| !c.is_zero())
}

pub fn params() -> impl Strategy<Value = AlgebraParams> {
    (nonzero_scalar(), nonzero_scalar()).prop_map(|(a, b)| AlgebraParams::new(a, b).expect("nonzero"))
}

pub fn element_in(p: AlgebraParams) -> impl Strategy<Value = SymbolElement> {
    proptest::array::uniform9(scalar()).prop_map(move |c| SymbolElement::new(&p, c))
}

/// Parameters together with `n` elements of that algebra.
pub fn elements(n: usize) -> impl Strategy<Value = (AlgebraParams, Vec<SymbolElement>)> {
    params().prop_flat_map(move |p| (Just(p.clone()), proptest::collection::vec(element_in(p), n)))
}

pub fn unit_elements(n: usize) -> impl Strategy<Value = Vec<SymbolElement>> {
    proptest::collection::vec(element_in(AlgebraParams::unit()), n)
}
