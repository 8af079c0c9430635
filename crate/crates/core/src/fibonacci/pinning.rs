//! Smallest edits to the constants of a linear closed form that make it agree with an
//! oracle on a set of samples.
//!
//! The form is `sum_k c_k v_k(n)`. Each sample gives one equation in `Q(w)`, i.e. two
//! rational equations in the unknown deltas. A rational constant contributes one unknown,
//! a cyclotomic one two (`delta = d0 + d1 w`). The system is row-reduced once and split into
//! independent blocks of constants; in each block the smallest set of constants whose
//! deltas are uniquely determined is chosen, preferring integral corrections, then the
//! smallest L1 delta, then the lexicographically smallest set.

use itertools::Itertools;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::field::CycQ;
use crate::linalg::{AffineSolution, Matrix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum ConstKind {
    Rational,
    Cyclotomic,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pinning {
    pub constants: Vec<CycQ>,
    /// Indices of the constants that differ from the printed ones, ascending.
    pub changed: Vec<usize>,
    /// Number of equally small edit sets, multiplied across blocks.
    pub ties: u64,
}

struct Unknown {
    constant: usize,
    unit: CycQ,
}

fn rational(q: &BigRational) -> CycQ {
    CycQ::rational(q.clone())
}

/// `basis[i][k]` is `v_k` at sample `i`, `target[i]` the oracle there. Returns `None` when
/// no edit of the constants fits the samples.
pub fn pin(printed: &[CycQ], kinds: &[ConstKind], basis: &[Vec<CycQ>], target: &[CycQ]) -> Option<Pinning> {
    assert_eq!(printed.len(), kinds.len());
    assert_eq!(basis.len(), target.len());
    let unknowns: Vec<Unknown> = kinds
        .iter()
        .enumerate()
        .flat_map(|(k, kind)| {
            let units = match kind {
                ConstKind::Rational => vec![CycQ::one()],
                ConstKind::Cyclotomic => vec![CycQ::one(), CycQ::omega()],
            };
            units.into_iter().map(move |unit| Unknown { constant: k, unit })
        })
        .collect();

    let mut rows = Vec::new();
    for (vals, t) in basis.iter().zip(target) {
        let fitted: CycQ = printed.iter().zip(vals).map(|(c, v)| c * v).sum();
        let resid = t - &fitted;
        let cells: Vec<CycQ> = unknowns.iter().map(|u| &u.unit * &vals[u.constant]).collect();
        rows.push(cells.iter().map(|c| rational(c.re())).chain([rational(resid.re())]).collect::<Vec<_>>());
        rows.push(cells.iter().map(|c| rational(c.om())).chain([rational(resid.om())]).collect::<Vec<_>>());
    }
    let width = unknowns.len();
    let reduced = Matrix::from_rows(rows).ok()?.rref();
    if reduced.pivots.last() == Some(&width) {
        return None;
    }
    let rows: Vec<Vec<CycQ>> = (0..reduced.pivots.len()).map(|i| reduced.matrix.row(i).to_vec()).collect();

    let blocks = blocks(printed.len(), &unknowns, &rows);
    let mut deltas: Vec<CycQ> = vec![CycQ::zero(); printed.len()];
    let mut ties = 1u64;
    for block in blocks {
        let block_rows: Vec<&Vec<CycQ>> =
            rows.iter().filter(|r| unknowns.iter().enumerate().any(|(j, u)| block.contains(&u.constant) && !r[j].is_zero())).collect();
        if block_rows.iter().all(|r| r[width].is_zero()) {
            continue;
        }
        let (choice, count) = best_edit(&block, &unknowns, &block_rows, width)?;
        ties *= count;
        for (k, d) in choice {
            deltas[k] = d;
        }
    }

    let constants: Vec<CycQ> = printed.iter().zip(&deltas).map(|(c, d)| c + d).collect();
    let changed = deltas.iter().enumerate().filter(|(_, d)| !d.is_zero()).map(|(k, _)| k).collect();
    Some(Pinning { constants, changed, ties })
}

/// Groups constants that share a row of the reduced system.
fn blocks(n: usize, unknowns: &[Unknown], rows: &[Vec<CycQ>]) -> Vec<Vec<usize>> {
    let mut owner: Vec<usize> = (0..n).collect();
    fn root(owner: &mut [usize], mut k: usize) -> usize {
        while owner[k] != k {
            owner[k] = owner[owner[k]];
            k = owner[k];
        }
        k
    }
    for r in rows {
        let touched: Vec<usize> =
            unknowns.iter().enumerate().filter(|(j, _)| !r[*j].is_zero()).map(|(_, u)| u.constant).collect();
        for w in touched.windows(2) {
            let (a, b) = (root(&mut owner, w[0]), root(&mut owner, w[1]));
            owner[a] = b;
        }
    }
    let roots: Vec<usize> = (0..n).map(|k| root(&mut owner, k)).collect();
    roots.iter().copied().unique().map(|r| (0..n).filter(|&k| roots[k] == r).collect()).collect()
}

type Edit = Vec<(usize, CycQ)>;

fn best_edit(block: &[usize], unknowns: &[Unknown], rows: &[&Vec<CycQ>], width: usize) -> Option<(Edit, u64)> {
    for size in 1..=block.len() {
        let mut found: Vec<(bool, BigRational, Edit)> = Vec::new();
        for subset in block.iter().copied().combinations(size) {
            let cols: Vec<usize> =
                unknowns.iter().enumerate().filter(|(_, u)| subset.contains(&u.constant)).map(|(j, _)| j).collect();
            if cols.len() > rows.len() {
                continue;
            }
            let m = Matrix::from_fn(rows.len(), cols.len(), |i, j| rows[i][cols[j]].clone());
            let rhs: Vec<CycQ> = rows.iter().map(|r| r[width].clone()).collect();
            let Ok(AffineSolution::Solvable { particular, kernel }) = m.solve_affine(&rhs) else {
                continue;
            };
            if !kernel.is_empty() {
                continue;
            }
            let mut edit: Edit = subset.iter().map(|&k| (k, CycQ::zero())).collect();
            for (j, v) in cols.iter().zip(&particular) {
                let u = &unknowns[*j];
                let slot = edit.iter_mut().find(|(k, _)| *k == u.constant).expect("constant in subset");
                slot.1 = &slot.1 + &(&u.unit * v);
            }
            if edit.iter().any(|(_, d)| d.is_zero()) {
                continue;
            }
            let integral = edit.iter().all(|(_, d)| d.is_integral());
            let l1 = edit.iter().map(|(_, d)| d.re().abs() + d.om().abs()).fold(BigRational::zero(), |a, b| a + b);
            found.push((!integral, l1, edit));
        }
        if !found.is_empty() {
            let count = found.len() as u64;
            let best = found
                .into_iter()
                .min_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)).then_with(|| subset_key(&a.2).cmp(&subset_key(&b.2))))
                .expect("nonempty");
            return Some((best.2, count));
        }
    }
    None
}

fn subset_key(edit: &Edit) -> Vec<usize> {
    edit.iter().map(|(k, _)| *k).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(v: &[i64]) -> Vec<CycQ> {
        v.iter().map(|&x| CycQ::from_int(x)).collect()
    }

    #[test]
    fn exact_form_needs_no_edit() {
        // 2 n + 3
        let basis: Vec<Vec<CycQ>> = (1..5).map(|n| ints(&[n, 1])).collect();
        let target = (1..5).map(|n| CycQ::from_int(2 * n + 3)).collect::<Vec<_>>();
        let p = pin(&ints(&[2, 3]), &[ConstKind::Rational; 2], &basis, &target).unwrap();
        assert!(p.changed.is_empty());
    }

    #[test]
    fn single_wrong_constant_is_found() {
        let basis: Vec<Vec<CycQ>> = (1..6).map(|n| ints(&[n, n * n, 1])).collect();
        let target = (1..6).map(|n| CycQ::from_int(2 * n + 5 * n * n - 1)).collect::<Vec<_>>();
        let p = pin(&ints(&[2, 7, -1]), &[ConstKind::Rational; 3], &basis, &target).unwrap();
        assert_eq!(p.changed, vec![1]);
        assert_eq!(p.constants, ints(&[2, 5, -1]));
        assert_eq!(p.ties, 1);
    }

    #[test]
    fn cyclotomic_constant_gains_an_omega_part() {
        let basis: Vec<Vec<CycQ>> = (1..4).map(|n| ints(&[n])).collect();
        let c = CycQ::from_ints(3, -2);
        let target = (1..4).map(|n| &c * &CycQ::from_int(n)).collect::<Vec<_>>();
        let p = pin(&ints(&[3]), &[ConstKind::Cyclotomic], &basis, &target).unwrap();
        assert_eq!(p.constants, vec![c.clone()]);
        assert!(pin(&ints(&[3]), &[ConstKind::Rational], &basis, &target).is_none());
    }

    #[test]
    fn independent_blocks_are_pinned_separately() {
        // real constants only see the real part of the target, w-constants the w part
        let basis: Vec<Vec<CycQ>> = (1..5)
            .map(|n| vec![CycQ::from_int(n), CycQ::from_ints(0, n)])
            .collect();
        let target = (1..5).map(|n| CycQ::from_ints(4 * n, 9 * n)).collect::<Vec<_>>();
        let p = pin(&ints(&[1, 1]), &[ConstKind::Rational; 2], &basis, &target).unwrap();
        assert_eq!(p.constants, ints(&[4, 9]));
        assert_eq!(p.changed, vec![0, 1]);
    }

    #[test]
    fn dependent_columns_tie_and_prefer_the_first() {
        // two copies of the same basis function: either constant can absorb the delta
        let basis: Vec<Vec<CycQ>> = (1..4).map(|n| ints(&[n, n])).collect();
        let target = (1..4).map(|n| CycQ::from_int(5 * n)).collect::<Vec<_>>();
        let p = pin(&ints(&[1, 1]), &[ConstKind::Rational; 2], &basis, &target).unwrap();
        assert_eq!(p.ties, 2);
        assert_eq!(p.constants, ints(&[4, 1]));
    }
}
