//! Reduced trace, quadratic form, reduced norm and the operations built on them.

use crate::algebra::{Exponent, SymbolElement};
use crate::error::{Error, Result};
use crate::field::CycQ;

/// Coefficients of the characteristic polynomial `X^3 - tau X^2 + pi X - eta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharData {
    pub tau: CycQ,
    pub pi: CycQ,
    pub eta: CycQ,
}

impl SymbolElement {
    /// `tau(z) = 3 c0`, a third of the trace of the left regular representation.
    pub fn reduced_trace(&self) -> CycQ {
        CycQ::from_int(3) * self.coeff(0)
    }

    /// `pi(z) = (tau(z)^2 - tau(z^2)) / 2`.
    pub fn pi_form(&self) -> CycQ {
        let t = self.reduced_trace();
        let t2 = (self * self).reduced_trace();
        (&t * &t - t2) * CycQ::ratio(1, 2)
    }

    /// Cubic reduced norm, evaluated from its explicit polynomial in the coefficients.
    pub fn reduced_norm(&self) -> CycQ {
        let c = |i: u8, j: u8| self.coeff_at(Exponent { x: i, y: j });
        let a = self.params().a();
        let b = self.params().b();
        let b2 = b * b;
        let three = CycQ::from_int(3);

        // x^i-row norm form: c_i0^3 + b c_i1^3 + b^2 c_i2^3 - 3b c_i0 c_i1 c_i2
        let row = |i: u8| {
            c(i, 0).pow(3) + b * &c(i, 1).pow(3) + &b2 * &c(i, 2).pow(3)
                - &three * b * c(i, 0) * c(i, 1) * c(i, 2)
        };
        let diag = c(0, 0) * c(1, 0) * c(2, 0)
            + b * &(c(0, 1) * c(1, 1) * c(2, 1))
            + &b2 * &(c(0, 2) * c(1, 2) * c(2, 2));
        let cross_w = c(0, 0) * c(1, 2) * c(2, 1) + c(0, 1) * c(1, 0) * c(2, 2) + c(0, 2) * c(1, 1) * c(2, 0);
        let cross_w2 = c(0, 0) * c(1, 1) * c(2, 2) + c(0, 2) * c(1, 0) * c(2, 1) + c(0, 1) * c(1, 2) * c(2, 0);
        let ab3 = &three * a * b;

        a * a * row(2) + a * &row(1) - &three * a * &diag - &ab3 * &CycQ::omega() * &cross_w
            - &ab3 * &CycQ::omega_sq() * &cross_w2
            + row(0)
    }

    pub fn char_poly(&self) -> CharData {
        CharData { tau: self.reduced_trace(), pi: self.pi_form(), eta: self.reduced_norm() }
    }

    /// `z* = z^2 - tau(z) z + pi(z)`, so that `z z* = z* z = eta(z)`.
    pub fn adjoint(&self) -> SymbolElement {
        let p = self.params();
        self * self - self.scale(&self.reduced_trace()) + SymbolElement::scalar(p, self.pi_form())
    }

    /// `z^{-1} = z* / eta(z)`.
    pub fn inverse(&self) -> Result<SymbolElement> {
        let eta = self.reduced_norm();
        if eta.is_zero() {
            return Err(Error::NotInvertible);
        }
        Ok(self.adjoint().scale(&eta.inv()?))
    }

    pub fn is_invertible(&self) -> bool {
        !self.reduced_norm().is_zero()
    }

    /// Multiplies the `y`-degree-1 block by `w^k` and the `y`-degree-2 block by `w^{2k}`.
    pub fn twist(&self, k: u32) -> SymbolElement {
        let mut c = self.coeffs().clone();
        for (idx, slot) in c.iter_mut().enumerate() {
            let deg = Exponent::from_index(idx).y as i64;
            if deg > 0 {
                *slot = CycQ::omega_pow(deg * k as i64) * &*slot;
            }
        }
        SymbolElement::new(self.params(), c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraParams;

    fn params() -> AlgebraParams {
        AlgebraParams::new(CycQ::from_int(2), CycQ::from_int(3)).unwrap()
    }

    #[test]
    fn unit_and_generator() {
        let p = params();
        let one = SymbolElement::one(&p);
        let x = SymbolElement::x(&p);
        assert_eq!(one.char_poly(), CharData { tau: 3.into(), pi: 3.into(), eta: 1.into() });
        assert_eq!(x.char_poly(), CharData { tau: 0.into(), pi: 0.into(), eta: 2.into() });
        assert_eq!(one.adjoint(), one);
        assert_eq!(x.adjoint(), &x * &x);
        assert_eq!(x.inverse().unwrap(), (&x * &x).scale(&CycQ::ratio(1, 2)));
        assert_eq!(one.inverse().unwrap(), one);
    }

    #[test]
    fn trace_of_scalar_part() {
        let p = params();
        let z = SymbolElement::scalar(&p, CycQ::from_ints(2, 1));
        assert_eq!(z.reduced_trace(), CycQ::from_ints(6, 3));
    }

    #[test]
    fn singular_sum_of_powers() {
        let p = AlgebraParams::unit();
        let z = SymbolElement::from_ints(&p, [1, 1, 1, 0, 0, 0, 0, 0, 0]);
        assert!(z.reduced_norm().is_zero());
        assert_eq!(z.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn zero_element_policy() {
        let z = SymbolElement::zero(&params());
        assert_eq!(z.char_poly(), CharData { tau: 0.into(), pi: 0.into(), eta: 0.into() });
        assert!(z.adjoint().is_zero());
        assert_eq!(z.inverse(), Err(Error::NotInvertible));
    }

    #[test]
    fn twist_examples() {
        let p = params();
        let y = SymbolElement::y(&p);
        assert_eq!(y.twist(1), y.scale(&CycQ::omega()));
        let a_only = SymbolElement::from_ints(&p, [4, -1, 7, 0, 0, 0, 0, 0, 0]);
        assert_eq!(a_only.twist(1), a_only);
        let z = SymbolElement::from_ints(&p, [1, 2, 3, 4, 5, 6, 7, 8, 9]);
        assert_eq!(z.twist(1).twist(1), z.twist(2));
        assert_eq!(z.twist(1).twist(2), z);
        let y2 = SymbolElement::basis(&p, 4);
        assert_eq!(y2.twist(1), y2.scale(&CycQ::omega_sq()));
    }
}
