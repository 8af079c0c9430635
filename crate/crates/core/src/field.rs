//! Exact arithmetic in the cyclotomic field `Q(w)`, `w` a primitive cube root of unity.
//!
//! Elements are stored as `r + s*w` with both coordinates reduced rationals; products
//! are reduced with `w^2 = -1 - w`, so the pair `(r, s)` is a unique normal form.

use std::fmt;
use std::iter::{Product, Sum};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct CycQ {
    r: BigRational,
    s: BigRational,
}

impl CycQ {
    pub fn new(r: BigRational, s: BigRational) -> Self {
        CycQ { r, s }
    }

    pub fn zero() -> Self {
        CycQ::default()
    }

    pub fn one() -> Self {
        CycQ::from_int(1)
    }

    pub fn omega() -> Self {
        CycQ::from_ints(0, 1)
    }

    /// `w^2 = -1 - w`.
    pub fn omega_sq() -> Self {
        CycQ::from_ints(-1, -1)
    }

    /// `w^k` for any integer exponent.
    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => CycQ::one(),
            1 => CycQ::omega(),
            _ => CycQ::omega_sq(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        CycQ::from_ints(n, 0)
    }

    pub fn from_ints(r: i64, s: i64) -> Self {
        CycQ {
            r: BigRational::from_integer(r.into()),
            s: BigRational::from_integer(s.into()),
        }
    }

    pub fn from_bigint(n: BigInt) -> Self {
        CycQ::rational(BigRational::from_integer(n))
    }

    pub fn rational(q: BigRational) -> Self {
        CycQ { r: q, s: BigRational::zero() }
    }

    /// `num/den + 0*w`. Panics if `den == 0`.
    pub fn ratio(num: i64, den: i64) -> Self {
        CycQ::rational(BigRational::new(num.into(), den.into()))
    }

    /// Coefficient of `1`.
    pub fn re(&self) -> &BigRational {
        &self.r
    }

    /// Coefficient of `w`.
    pub fn om(&self) -> &BigRational {
        &self.s
    }

    pub fn is_zero(&self) -> bool {
        self.r.is_zero() && self.s.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.r.is_one() && self.s.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.s.is_zero()
    }

    /// True when both coordinates are integers, i.e. the value lies in `Z[w]`.
    pub fn is_integral(&self) -> bool {
        self.r.is_integer() && self.s.is_integer()
    }

    /// Galois conjugate, `w -> w^2`.
    pub fn conj(&self) -> Self {
        CycQ { r: &self.r - &self.s, s: -&self.s }
    }

    /// Field norm `u * conj(u) = r^2 - r*s + s^2`; positive unless `u == 0`.
    pub fn norm(&self) -> BigRational {
        &self.r * &self.r - &self.r * &self.s + &self.s * &self.s
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conj();
        Ok(CycQ { r: c.r / &n, s: c.s / &n })
    }

    pub fn checked_div(&self, rhs: &CycQ) -> Result<Self> {
        Ok(self * &rhs.inv()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CycQ::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    pub fn scale_rational(&self, q: &BigRational) -> Self {
        CycQ { r: &self.r * q, s: &self.s * q }
    }
}

// Integer operands skip the gcd work inside `BigRational`.
fn qmul(a: &BigRational, b: &BigRational) -> BigRational {
    if a.is_zero() || b.is_zero() {
        BigRational::zero()
    } else if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() * b.numer())
    } else {
        a * b
    }
}

fn qadd(a: &BigRational, b: &BigRational) -> BigRational {
    if b.is_zero() {
        a.clone()
    } else if a.is_zero() {
        b.clone()
    } else if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() + b.numer())
    } else {
        a + b
    }
}

fn qsub(a: &BigRational, b: &BigRational) -> BigRational {
    if b.is_zero() {
        a.clone()
    } else if a.is_integer() && b.is_integer() {
        BigRational::from_integer(a.numer() - b.numer())
    } else {
        a - b
    }
}

fn mul_ref(a: &CycQ, b: &CycQ) -> CycQ {
    if a.is_zero() || b.is_zero() {
        return CycQ::zero();
    }
    if a.s.is_zero() {
        return CycQ { r: qmul(&a.r, &b.r), s: qmul(&a.r, &b.s) };
    }
    if b.s.is_zero() {
        return CycQ { r: qmul(&a.r, &b.r), s: qmul(&a.s, &b.r) };
    }
    let ss = qmul(&a.s, &b.s);
    CycQ {
        r: qsub(&qmul(&a.r, &b.r), &ss),
        s: qsub(&qadd(&qmul(&a.r, &b.s), &qmul(&a.s, &b.r)), &ss),
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b CycQ> for &'a CycQ {
            type Output = CycQ;
            fn $method(self, rhs: &'b CycQ) -> CycQ {
                $body(self, rhs)
            }
        }
        impl<'b> $tr<&'b CycQ> for CycQ {
            type Output = CycQ;
            fn $method(self, rhs: &'b CycQ) -> CycQ {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<CycQ> for &'a CycQ {
            type Output = CycQ;
            fn $method(self, rhs: CycQ) -> CycQ {
                $body(self, &rhs)
            }
        }
        impl $tr<CycQ> for CycQ {
            type Output = CycQ;
            fn $method(self, rhs: CycQ) -> CycQ {
                $body(&self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a: &CycQ, b: &CycQ| CycQ { r: qadd(&a.r, &b.r), s: qadd(&a.s, &b.s) });
forward_binop!(Sub, sub, |a: &CycQ, b: &CycQ| CycQ { r: qsub(&a.r, &b.r), s: qsub(&a.s, &b.s) });
forward_binop!(Mul, mul, mul_ref);
// Panics on a zero divisor; use `checked_div` where zero is a legal input.
forward_binop!(Div, div, |a: &CycQ, b: &CycQ| a
    .checked_div(b)
    .expect("division by zero in Q(w)"));

impl AddAssign<&CycQ> for CycQ {
    fn add_assign(&mut self, rhs: &CycQ) {
        self.r = qadd(&self.r, &rhs.r);
        self.s = qadd(&self.s, &rhs.s);
    }
}

impl AddAssign for CycQ {
    fn add_assign(&mut self, rhs: CycQ) {
        *self += &rhs;
    }
}

impl SubAssign<&CycQ> for CycQ {
    fn sub_assign(&mut self, rhs: &CycQ) {
        self.r = qsub(&self.r, &rhs.r);
        self.s = qsub(&self.s, &rhs.s);
    }
}

impl SubAssign for CycQ {
    fn sub_assign(&mut self, rhs: CycQ) {
        *self -= &rhs;
    }
}

impl MulAssign<&CycQ> for CycQ {
    fn mul_assign(&mut self, rhs: &CycQ) {
        *self = mul_ref(self, rhs);
    }
}

impl Neg for CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        CycQ { r: -self.r, s: -self.s }
    }
}

impl Neg for &CycQ {
    type Output = CycQ;
    fn neg(self) -> CycQ {
        CycQ { r: -&self.r, s: -&self.s }
    }
}

impl Sum for CycQ {
    fn sum<I: Iterator<Item = CycQ>>(iter: I) -> CycQ {
        iter.fold(CycQ::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a CycQ> for CycQ {
    fn sum<I: Iterator<Item = &'a CycQ>>(iter: I) -> CycQ {
        iter.fold(CycQ::zero(), |acc, x| acc + x)
    }
}

impl Product for CycQ {
    fn product<I: Iterator<Item = CycQ>>(iter: I) -> CycQ {
        iter.fold(CycQ::one(), |acc, x| acc * x)
    }
}

impl From<i64> for CycQ {
    fn from(n: i64) -> Self {
        CycQ::from_int(n)
    }
}

impl From<BigInt> for CycQ {
    fn from(n: BigInt) -> Self {
        CycQ::from_bigint(n)
    }
}

impl From<BigRational> for CycQ {
    fn from(q: BigRational) -> Self {
        CycQ::rational(q)
    }
}

/// Canonical text form: `R`, `R+S*w` or `R-S*w` with `S > 0`.
impl fmt::Display for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.s.is_zero() {
            write!(f, "{}", self.r)
        } else if self.s.is_negative() {
            write!(f, "{}-{}*w", self.r, -&self.s)
        } else {
            write!(f, "{}+{}*w", self.r, self.s)
        }
    }
}

impl fmt::Debug for CycQ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

fn parse_rational(src: &str, whole: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("malformed scalar `{whole}`"));
    let body = src.strip_prefix('-').unwrap_or(src);
    let (num, den) = match body.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (body, None),
    };
    let digits = |t: &str| !t.is_empty() && t.bytes().all(|b| b.is_ascii_digit());
    if !digits(num) || !den.map_or(true, digits) {
        return Err(bad());
    }
    let mut n: BigInt = num.parse().map_err(|_| bad())?;
    if src.starts_with('-') {
        n = -n;
    }
    let d: BigInt = match den {
        Some(d) => d.parse().map_err(|_| bad())?,
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{whole}`")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for CycQ {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let t = text.trim();
        let Some(head) = t.strip_suffix("*w") else {
            return Ok(CycQ::rational(parse_rational(t, text)?));
        };
        // the sign separating R from S is the first '+' or '-' after position 0
        let split = head
            .char_indices()
            .skip(1)
            .find(|&(_, c)| c == '+' || c == '-')
            .map(|(i, _)| i)
            .ok_or_else(|| Error::Parse(format!("malformed scalar `{text}`")))?;
        let r = parse_rational(&head[..split], text)?;
        let mut s = parse_rational(&head[split + 1..], text)?;
        if head.as_bytes()[split] == b'-' {
            s = -s;
        }
        Ok(CycQ { r, s })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> CycQ {
        s.parse().unwrap()
    }

    #[test]
    fn omega_relations() {
        let w = CycQ::omega();
        assert_eq!(&w * &w, CycQ::from_ints(-1, -1));
        assert_eq!(&w * &w * &w, CycQ::one());
        assert_eq!(CycQ::from_ints(1, 1) * -w.clone(), CycQ::one());
        assert!((&w * &w + &w + CycQ::one()).is_zero());
    }

    #[test]
    fn addition_examples() {
        assert_eq!(CycQ::one() + CycQ::omega(), CycQ::from_ints(1, 1));
        assert_eq!(q("1/2+1/3*w") + q("1/2+2/3*w"), CycQ::from_ints(1, 1));
        assert_eq!(q("-3+2/5*w") + CycQ::zero(), q("-3+2/5*w"));
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(CycQ::one().inv().unwrap(), CycQ::one());
        assert_eq!(CycQ::from_ints(1, 1).inv().unwrap(), CycQ::from_ints(0, -1));
        assert_eq!(CycQ::from_int(2).inv().unwrap(), CycQ::ratio(1, 2));
        assert!(matches!(CycQ::zero().inv(), Err(Error::DivisionByZero)));
    }

    #[test]
    fn conjugation() {
        assert_eq!(CycQ::omega().conj(), CycQ::from_ints(-1, -1));
        assert_eq!(CycQ::ratio(-7, 3).conj(), CycQ::ratio(-7, 3));
        let u = q("5/2-3*w");
        assert_eq!(u.conj().conj(), u);
        let n = &u * &u.conj();
        assert!(n.is_rational());
        assert_eq!(n.re(), &u.norm());
    }

    #[test]
    fn omega_powers_cycle() {
        assert_eq!(CycQ::omega_pow(-1), CycQ::omega_sq());
        assert_eq!(CycQ::omega_pow(4), CycQ::omega());
        assert_eq!(CycQ::omega().pow(5), CycQ::omega_sq());
    }

    #[test]
    fn text_format() {
        assert_eq!(q("1/2").to_string(), "1/2");
        assert_eq!(q("-3+2/5*w").to_string(), "-3+2/5*w");
        assert_eq!(q("0+1*w").to_string(), "0+1*w");
        assert_eq!(q("4-1*w").to_string(), "4-1*w");
        assert_eq!(q("4+-1*w").to_string(), "4-1*w");
        assert_eq!(q("6/4").to_string(), "3/2");
        assert_eq!(q("2+0*w").to_string(), "2");
        assert_eq!(q("-0").to_string(), "0");
    }

    #[test]
    fn text_rejects_garbage() {
        for bad in ["", "w", "1+w", "1/0", "1+2", "1 + 2*w", "+1", "1/2/3", "1+2*w*w", "a", "1.5", "--1"] {
            assert!(bad.parse::<CycQ>().is_err(), "accepted {bad:?}");
        }
    }
}
