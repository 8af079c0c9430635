//! The symbol algebra `S = (a, b / K, w)` of degree 3.
//!
//! `S` has the `K`-basis `x^i y^j` (`0 <= i, j < 3`) subject to `x^3 = a`, `y^3 = b` and
//! `yx = w xy`. Coefficients are stored in the fixed order
//! `[1, x, x^2, y, y^2, xy, x^2y^2, x^2y, xy^2]`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::CycQ;

/// Exponent pair `(i, j)` naming the basis monomial `x^i y^j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent {
    pub x: u8,
    pub y: u8,
}

/// Basis position -> exponent pair.
pub const BASIS: [Exponent; 9] = [
    Exponent { x: 0, y: 0 },
    Exponent { x: 1, y: 0 },
    Exponent { x: 2, y: 0 },
    Exponent { x: 0, y: 1 },
    Exponent { x: 0, y: 2 },
    Exponent { x: 1, y: 1 },
    Exponent { x: 2, y: 2 },
    Exponent { x: 2, y: 1 },
    Exponent { x: 1, y: 2 },
];

pub const BASIS_NAMES: [&str; 9] = ["1", "x", "x^2", "y", "y^2", "xy", "x^2y^2", "x^2y", "xy^2"];

impl Exponent {
    pub fn new(x: u8, y: u8) -> Result<Self> {
        if x > 2 || y > 2 {
            return Err(Error::Dimension(format!("exponent ({x},{y}) outside {{0,1,2}}^2")));
        }
        Ok(Exponent { x, y })
    }

    /// Position of this monomial in the coefficient array.
    pub fn index(self) -> usize {
        const POS: [[usize; 3]; 3] = [[0, 3, 4], [1, 5, 8], [2, 7, 6]];
        POS[self.x as usize][self.y as usize]
    }

    pub fn from_index(k: usize) -> Self {
        BASIS[k]
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(BASIS_NAMES[self.index()])
    }
}

/// `(x^i y^j)(x^k y^l) = w^{jk} a^{(i+k) div 3} b^{(j+l) div 3} x^{(i+k) mod 3} y^{(j+l) mod 3}`.
pub fn basis_product(e1: Exponent, e2: Exponent, a: &CycQ, b: &CycQ) -> (CycQ, Exponent) {
    let (i, j, k, l) = (e1.x as u32, e1.y as u32, e2.x as u32, e2.y as u32);
    let mut scalar = CycQ::omega_pow((j * k) as i64);
    if i + k >= 3 {
        scalar = scalar * a;
    }
    if j + l >= 3 {
        scalar = scalar * b;
    }
    let e = Exponent { x: ((i + k) % 3) as u8, y: ((j + l) % 3) as u8 };
    (scalar, e)
}

#[derive(PartialEq, Eq)]
struct ParamsInner {
    a: CycQ,
    b: CycQ,
    // table[p][q] = (scalar, index) with b_p * b_q = scalar * b_index
    table: Vec<(CycQ, usize)>,
}

/// The pair `(a, b)`, both nonzero, with a cached multiplication table.
#[derive(Clone)]
pub struct AlgebraParams(Arc<ParamsInner>);

impl AlgebraParams {
    pub fn new(a: CycQ, b: CycQ) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::ZeroParameter);
        }
        let mut table = Vec::with_capacity(81);
        for p in BASIS {
            for q in BASIS {
                let (s, e) = basis_product(p, q, &a, &b);
                table.push((s, e.index()));
            }
        }
        Ok(AlgebraParams(Arc::new(ParamsInner { a, b, table })))
    }

    /// `a = b = 1`.
    pub fn unit() -> Self {
        AlgebraParams::new(CycQ::one(), CycQ::one()).expect("nonzero")
    }

    pub fn a(&self) -> &CycQ {
        &self.0.a
    }

    pub fn b(&self) -> &CycQ {
        &self.0.b
    }

    pub fn is_unit(&self) -> bool {
        self.0.a.is_one() && self.0.b.is_one()
    }

    pub(crate) fn product(&self, p: usize, q: usize) -> &(CycQ, usize) {
        &self.0.table[p * 9 + q]
    }
}

impl PartialEq for AlgebraParams {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || (self.0.a == other.0.a && self.0.b == other.0.b)
    }
}

impl Eq for AlgebraParams {}

impl fmt::Debug for AlgebraParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(a={}, b={})", self.0.a, self.0.b)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct SymbolElement {
    params: AlgebraParams,
    c: [CycQ; 9],
}

impl SymbolElement {
    pub fn new(params: &AlgebraParams, coeffs: [CycQ; 9]) -> Self {
        SymbolElement { params: params.clone(), c: coeffs }
    }

    pub fn from_vec(params: &AlgebraParams, coeffs: Vec<CycQ>) -> Result<Self> {
        let n = coeffs.len();
        let c: [CycQ; 9] = coeffs
            .try_into()
            .map_err(|_| Error::Dimension(format!("expected 9 coefficients, got {n}")))?;
        Ok(SymbolElement::new(params, c))
    }

    pub fn from_ints(params: &AlgebraParams, coeffs: [i64; 9]) -> Self {
        SymbolElement::new(params, coeffs.map(CycQ::from_int))
    }

    pub fn zero(params: &AlgebraParams) -> Self {
        SymbolElement::new(params, Default::default())
    }

    pub fn scalar(params: &AlgebraParams, k: CycQ) -> Self {
        let mut z = SymbolElement::zero(params);
        z.c[0] = k;
        z
    }

    pub fn one(params: &AlgebraParams) -> Self {
        SymbolElement::scalar(params, CycQ::one())
    }

    /// The basis monomial at position `k`.
    pub fn basis(params: &AlgebraParams, k: usize) -> Self {
        let mut z = SymbolElement::zero(params);
        z.c[k] = CycQ::one();
        z
    }

    pub fn monomial(params: &AlgebraParams, e: Exponent, k: CycQ) -> Self {
        let mut z = SymbolElement::zero(params);
        z.c[e.index()] = k;
        z
    }

    pub fn x(params: &AlgebraParams) -> Self {
        SymbolElement::basis(params, 1)
    }

    pub fn y(params: &AlgebraParams) -> Self {
        SymbolElement::basis(params, 3)
    }

    pub fn params(&self) -> &AlgebraParams {
        &self.params
    }

    pub fn coeffs(&self) -> &[CycQ; 9] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> &CycQ {
        &self.c[k]
    }

    pub fn coeff_at(&self, e: Exponent) -> &CycQ {
        &self.c[e.index()]
    }

    pub fn into_coeffs(self) -> [CycQ; 9] {
        self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(CycQ::is_zero)
    }

    /// The element minus its scalar part.
    pub fn pure_part(&self) -> Self {
        let mut z = self.clone();
        z.c[0] = CycQ::zero();
        z
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.params == other.params {
            Ok(())
        } else {
            Err(Error::ParamsMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&other.c) {
            *x += y;
        }
        Ok(SymbolElement { params: self.params.clone(), c })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut c = self.c.clone();
        for (x, y) in c.iter_mut().zip(&other.c) {
            *x -= y;
        }
        Ok(SymbolElement { params: self.params.clone(), c })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out: [CycQ; 9] = Default::default();
        for (p, u) in self.c.iter().enumerate() {
            if u.is_zero() {
                continue;
            }
            for (q, v) in other.c.iter().enumerate() {
                if v.is_zero() {
                    continue;
                }
                let (s, k) = self.params.product(p, q);
                let uv = u * v;
                if s.is_one() {
                    out[*k] += uv;
                } else {
                    out[*k] += s * &uv;
                }
            }
        }
        Ok(SymbolElement { params: self.params.clone(), c: out })
    }

    pub fn scale(&self, k: &CycQ) -> Self {
        SymbolElement { params: self.params.clone(), c: self.c.clone().map(|x| k * &x) }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = SymbolElement::one(&self.params);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn with_params(&self, params: &AlgebraParams) -> Self {
        SymbolElement { params: params.clone(), c: self.c.clone() }
    }
}

impl fmt::Debug for SymbolElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.c.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c}){}", BASIS_NAMES[k])?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " in {:?}", self.params)
    }
}

// Operators panic on mismatched params; the try_* forms report it.
macro_rules! element_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl<'a, 'b> $tr<&'b SymbolElement> for &'a SymbolElement {
            type Output = SymbolElement;
            fn $method(self, rhs: &'b SymbolElement) -> SymbolElement {
                self.$checked(rhs).expect("elements of different algebras")
            }
        }
        impl $tr<SymbolElement> for SymbolElement {
            type Output = SymbolElement;
            fn $method(self, rhs: SymbolElement) -> SymbolElement {
                (&self).$method(&rhs)
            }
        }
        impl<'b> $tr<&'b SymbolElement> for SymbolElement {
            type Output = SymbolElement;
            fn $method(self, rhs: &'b SymbolElement) -> SymbolElement {
                (&self).$method(rhs)
            }
        }
        impl<'a> $tr<SymbolElement> for &'a SymbolElement {
            type Output = SymbolElement;
            fn $method(self, rhs: SymbolElement) -> SymbolElement {
                self.$method(&rhs)
            }
        }
    };
}

element_binop!(Add, add, try_add);
element_binop!(Sub, sub, try_sub);
element_binop!(Mul, mul, try_mul);

impl Neg for &SymbolElement {
    type Output = SymbolElement;
    fn neg(self) -> SymbolElement {
        SymbolElement { params: self.params.clone(), c: self.c.clone().map(|x| -x) }
    }
}

impl Neg for SymbolElement {
    type Output = SymbolElement;
    fn neg(self) -> SymbolElement {
        -&self
    }
}
