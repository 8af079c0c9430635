//! Bounded exhaustive search for pairs satisfying the explicit-intertwiner hypotheses.
//!
//! Works at `a = b = 1` with integer coefficients, so every quantity lives in `Z[w]` and
//! is computed in machine integers. Pure parts are enumerated lexicographically over
//! `{-bound..bound}^8` (coefficient of `x` most significant); the first pure part `A0`
//! with `eta(A0) = 0`, `pi(A0) != 0` that has a partner `B0` with the same properties,
//! equal `pi` and `B0 != +-A0` wins, with `B0` the lexicographically first partner.

use std::collections::HashMap;

use crate::algebra::{AlgebraParams, SymbolElement, BASIS};
use crate::field::CycQ;

/// `r + s w` over the integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
struct Zw(i64, i64);

impl Zw {
    fn add(self, o: Zw) -> Zw {
        Zw(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: Zw) -> Zw {
        Zw(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: Zw) -> Zw {
        Zw(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0 - self.1 * o.1)
    }
    fn is_zero(self) -> bool {
        self.0 == 0 && self.1 == 0
    }
}

type El = [Zw; 9];

struct UnitTable([[(Zw, usize); 9]; 9]);

impl UnitTable {
    fn new() -> Self {
        const W: [Zw; 3] = [Zw(1, 0), Zw(0, 1), Zw(-1, -1)];
        let mut t = [[(Zw::default(), 0usize); 9]; 9];
        for (p, e1) in BASIS.iter().enumerate() {
            for (q, e2) in BASIS.iter().enumerate() {
                // y^j x^k = w^{jk} x^k y^j; x^3 = y^3 = 1
                let s = W[(e1.y as usize * e2.x as usize) % 3];
                let x = (e1.x + e2.x) % 3;
                let y = (e1.y + e2.y) % 3;
                let idx = BASIS.iter().position(|e| e.x == x && e.y == y).expect("basis");
                t[p][q] = (s, idx);
            }
        }
        UnitTable(t)
    }

    fn mul(&self, u: &El, v: &El) -> El {
        let mut out = [Zw::default(); 9];
        for p in 0..9 {
            if u[p].is_zero() {
                continue;
            }
            for q in 0..9 {
                if v[q].is_zero() {
                    continue;
                }
                let (s, k) = self.0[p][q];
                out[k] = out[k].add(s.mul(u[p].mul(v[q])));
            }
        }
        out
    }
}

// For a pure element (zero scalar part): tau = 0, so pi = -tau(z^2)/2 = -3 (z^2)_0 / 2 and
// Cayley-Hamilton gives eta = (z^3)_0 + pi z_0 = (z^3)_0.
fn pure_forms(t: &UnitTable, z: &El) -> (Zw, Zw, El) {
    let z2 = t.mul(z, z);
    let z3 = t.mul(&z2, z);
    let two_pi = Zw(-3 * z2[0].0, -3 * z2[0].1);
    debug_assert!(two_pi.0 % 2 == 0 && two_pi.1 % 2 == 0);
    (Zw(two_pi.0 / 2, two_pi.1 / 2), z3[0], z2)
}

fn decode(mut idx: u64, bound: i64) -> [i64; 8] {
    let base = (2 * bound + 1) as u64;
    let mut c = [0i64; 8];
    for slot in c.iter_mut().rev() {
        *slot = (idx % base) as i64 - bound;
        idx /= base;
    }
    c
}

fn embed(c: &[i64; 8]) -> El {
    let mut z = [Zw::default(); 9];
    for (k, &v) in c.iter().enumerate() {
        z[k + 1] = Zw(v, 0);
    }
    z
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub struct StructuredInstance {
    /// Coefficients of the pure part of `A` at basis positions 1..=8.
    pub pure_a: [i64; 8],
    pub pure_b: [i64; 8],
    /// Common value of the quadratic form, as scalar text.
    pub pi: String,
    /// Number of admissible pure parts (zero norm, nonzero quadratic form) in the box.
    pub admissible: usize,
}

impl StructuredInstance {
    /// `(A, B)` with the given common scalar part at `a = b = 1`.
    pub fn elements(&self, scalar: &CycQ) -> (SymbolElement, SymbolElement) {
        let p = AlgebraParams::unit();
        let build = |c: &[i64; 8]| {
            let mut v: [CycQ; 9] = Default::default();
            v[0] = scalar.clone();
            for (k, &x) in c.iter().enumerate() {
                v[k + 1] = CycQ::from_int(x);
            }
            SymbolElement::new(&p, v)
        };
        (build(&self.pure_a), build(&self.pure_b))
    }
}

struct Admissible {
    coeffs: Vec<[i64; 8]>,
    pis: Vec<Zw>,
    squares: Vec<El>,
    by_pi: HashMap<Zw, Vec<usize>>,
}

fn admissible(bound: i64) -> Admissible {
    let t = UnitTable::new();
    let total = ((2 * bound + 1) as u64).pow(8);
    let mut out = Admissible { coeffs: Vec::new(), pis: Vec::new(), squares: Vec::new(), by_pi: HashMap::new() };
    for idx in 0..total {
        let c = decode(idx, bound);
        let (pi, eta, sq) = pure_forms(&t, &embed(&c));
        if eta.is_zero() && !pi.is_zero() {
            out.by_pi.entry(pi).or_default().push(out.coeffs.len());
            out.coeffs.push(c);
            out.pis.push(pi);
            out.squares.push(sq);
        }
    }
    out
}

fn zw_text(z: Zw) -> String {
    CycQ::from_ints(z.0, z.1).to_string()
}

pub fn find_structured_instance(bound: i64) -> Option<StructuredInstance> {
    let adm = admissible(bound);
    for (i, a) in adm.coeffs.iter().enumerate() {
        let neg_a = a.map(|v| -v);
        let partner = adm.by_pi[&adm.pis[i]]
            .iter()
            .map(|&j| &adm.coeffs[j])
            .find(|b| *b != a && **b != neg_a);
        if let Some(b) = partner {
            return Some(StructuredInstance {
                pure_a: *a,
                pure_b: *b,
                pi: zw_text(adm.pis[i]),
                admissible: adm.coeffs.len(),
            });
        }
    }
    None
}

/// Tally of the explicit-intertwiner check over every admissible pair in a box.
#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct StructuredSweep {
    pub bound: i64,
    /// Ordered pairs `(A0, B0)` meeting every hypothesis, `B0 != A0`.
    pub pairs: usize,
    pub x1_solves: usize,
    pub x2_solves: usize,
    pub squares_equal: usize,
    /// Both candidates solve exactly on the pairs with `A0^2 = B0^2`.
    pub solves_iff_squares_equal: bool,
}

pub fn structured_sweep(bound: i64) -> StructuredSweep {
    let t = UnitTable::new();
    let adm = admissible(bound);
    let mut sweep = StructuredSweep {
        bound,
        pairs: 0,
        x1_solves: 0,
        x2_solves: 0,
        squares_equal: 0,
        solves_iff_squares_equal: true,
    };
    for group in adm.by_pi.values() {
        for &i in group {
            for &j in group {
                let (a, b) = (embed(&adm.coeffs[i]), embed(&adm.coeffs[j]));
                let neg = adm.coeffs[i].map(|v| -v);
                if i == j || adm.coeffs[j] == neg {
                    continue;
                }
                sweep.pairs += 1;
                let x1: El = std::array::from_fn(|k| a[k].add(b[k]));
                let ab = t.mul(&a, &b);
                let mut x2: El = std::array::from_fn(|k| Zw::default().sub(ab[k]));
                x2[0] = x2[0].add(adm.pis[i]);
                // the common scalar part of A and B cancels in AX - XB
                let ok1 = t.mul(&a, &x1) == t.mul(&x1, &b);
                let ok2 = t.mul(&a, &x2) == t.mul(&x2, &b);
                let sq = adm.squares[i] == adm.squares[j];
                sweep.x1_solves += ok1 as usize;
                sweep.x2_solves += ok2 as usize;
                sweep.squares_equal += sq as usize;
                if (ok1 && ok2) != sq {
                    sweep.solves_iff_squares_equal = false;
                }
            }
        }
    }
    sweep
}
