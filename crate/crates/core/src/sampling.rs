//! Seeded random elements for the identity batteries.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{AlgebraParams, SymbolElement};
use crate::field::CycQ;

/// Coefficients `r + s w` with `r, s` in `-BOX..=BOX`.
pub const BOX: i64 = 3;

pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn scalar(&mut self) -> CycQ {
        let r = self.rng.gen_range(-BOX..=BOX);
        let s = self.rng.gen_range(-BOX..=BOX);
        CycQ::from_ints(r, s)
    }

    pub fn element(&mut self, params: &AlgebraParams) -> SymbolElement {
        SymbolElement::new(params, std::array::from_fn(|_| self.scalar()))
    }
}

/// The three parameter choices the batteries run at: `(1, 1)`, `(2, 3)` and `(w, 1 + w)`.
pub fn standard_params() -> [AlgebraParams; 3] {
    [
        AlgebraParams::unit(),
        AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(3)).expect("nonzero"),
        AlgebraParams::new(CycQ::omega(), CycQ::from_ints(1, 1)).expect("nonzero"),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let p = AlgebraParams::unit();
        let (mut s1, mut s2) = (Sampler::new(7), Sampler::new(7));
        for _ in 0..5 {
            assert_eq!(s1.element(&p), s2.element(&p));
        }
        assert_ne!(Sampler::new(7).element(&p), Sampler::new(8).element(&p));
    }
}
