//! Linear equations `AZ = ZA`, `AZ = ZB`, `AZ - ZA = C` and `AZ - ZB = C` in the algebra,
//! solved through `Lambda(A) - Gamma(B)` acting on coordinate vectors.

use std::fmt;

use crate::algebra::{AlgebraParams, SymbolElement};
use crate::error::{Error, Result};
use crate::field::CycQ;
use crate::linalg::Matrix;
use crate::repr::{element_from_vec, gamma_mat, lambda_mat, vec_rep, AffineSolutionK, MatK, VecK};

pub mod search;

#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Verdict {
    AllOfSpace,
    AffineFamily,
    Unique,
    NoSolution,
}

/// `particular + span(kernel)`, or nothing.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionSet {
    pub particular: Option<SymbolElement>,
    pub kernel: Vec<SymbolElement>,
    pub verdict: Verdict,
}

impl SolutionSet {
    fn from_affine(sol: AffineSolutionK, params: &AlgebraParams) -> Self {
        match sol {
            AffineSolutionK::Inconsistent => {
                SolutionSet { particular: None, kernel: Vec::new(), verdict: Verdict::NoSolution }
            }
            AffineSolutionK::Solvable { particular, kernel } => {
                let verdict = match kernel.len() {
                    0 => Verdict::Unique,
                    9 => Verdict::AllOfSpace,
                    _ => Verdict::AffineFamily,
                };
                SolutionSet {
                    particular: Some(element_from_vec(&particular, params)),
                    kernel: kernel.iter().map(|v| element_from_vec(v, params)).collect(),
                    verdict,
                }
            }
        }
    }

    pub fn dimension(&self) -> usize {
        self.kernel.len()
    }

    /// `particular + sum lambda_i kernel_i`; missing lambdas count as zero.
    pub fn member(&self, lambdas: &[CycQ]) -> Option<SymbolElement> {
        let mut z = self.particular.clone()?;
        for (k, l) in self.kernel.iter().zip(lambdas) {
            z = &z + &k.scale(l);
        }
        Some(z)
    }

    /// True when `z` lies in the affine family.
    pub fn contains(&self, z: &SymbolElement) -> bool {
        let Some(p) = &self.particular else {
            return false;
        };
        let diff = vec_rep(&(z - p));
        if diff.is_zero() {
            return true;
        }
        let cols: Vec<Vec<CycQ>> = self.kernel.iter().map(|k| k.coeffs().to_vec()).collect();
        match Matrix::from_columns(&cols) {
            Ok(m) if !cols.is_empty() => {
                matches!(m.solve_affine(diff.as_slice()), Ok(crate::linalg::AffineSolution::Solvable { .. }))
            }
            _ => false,
        }
    }
}

fn same_params(a: &SymbolElement, b: &SymbolElement) -> Result<()> {
    if a.params() == b.params() {
        Ok(())
    } else {
        Err(Error::ParamsMismatch)
    }
}

/// `Lambda(A) - Gamma(B)`, the matrix of `Z -> AZ - ZB`.
pub fn intertwining_operator(a: &SymbolElement, b: &SymbolElement) -> Result<MatK> {
    same_params(a, b)?;
    Ok(&lambda_mat(a) - &gamma_mat(b))
}

fn solve_homogeneous(a: &SymbolElement, b: &SymbolElement) -> Result<SolutionSet> {
    let op = intertwining_operator(a, b)?;
    Ok(SolutionSet::from_affine(op.solve_affine(&VecK::default()), a.params()))
}

/// Centralizer of `A`.
pub fn solve_commute(a: &SymbolElement) -> SolutionSet {
    solve_homogeneous(a, a).expect("same element")
}

/// Outcome of the trace/norm comparison for an invertible intertwiner.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionCheck {
    pub witness: SymbolElement,
    pub traces_equal: bool,
    pub norms_equal: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Intertwining {
    pub solutions: SolutionSet,
    /// One entry per invertible solution found among the kernel basis and its sum.
    pub invertible: Vec<ConditionCheck>,
}

pub fn solve_intertwine(a: &SymbolElement, b: &SymbolElement) -> Result<Intertwining> {
    let solutions = solve_homogeneous(a, b)?;
    let mut candidates = solutions.kernel.clone();
    if solutions.kernel.len() > 1 {
        let sum = solutions.kernel.iter().skip(1).fold(solutions.kernel[0].clone(), |acc, k| &acc + k);
        candidates.push(sum);
    }
    let traces_equal = a.reduced_trace() == b.reduced_trace();
    let norms_equal = a.reduced_norm() == b.reduced_norm();
    let invertible = candidates
        .into_iter()
        .filter(SymbolElement::is_invertible)
        .map(|witness| ConditionCheck { witness, traces_equal, norms_equal })
        .collect();
    Ok(Intertwining { solutions, invertible })
}

pub fn solve_commutator(a: &SymbolElement, c: &SymbolElement) -> Result<SolutionSet> {
    solve_sylvester(a, a, c)
}

pub fn solve_sylvester(a: &SymbolElement, b: &SymbolElement, c: &SymbolElement) -> Result<SolutionSet> {
    same_params(a, c)?;
    let op = intertwining_operator(a, b)?;
    Ok(SolutionSet::from_affine(op.solve_affine(&vec_rep(c)), a.params()))
}

/// Hypotheses under which the two explicit intertwiners are offered.
#[derive(Clone, Copy, Debug, PartialEq, Eq, serde::Serialize)]
pub enum Hypothesis {
    EqualScalarParts,
    NonzeroPureParts,
    PurePartsNotOpposite,
    PureNormsVanish,
    EqualQuadraticForms,
    NonzeroQuadraticForm,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::EqualScalarParts => "equal scalar parts",
            Hypothesis::NonzeroPureParts => "nonzero pure parts",
            Hypothesis::PurePartsNotOpposite => "pure parts not opposite",
            Hypothesis::PureNormsVanish => "pure parts of zero norm",
            Hypothesis::EqualQuadraticForms => "equal quadratic forms of pure parts",
            Hypothesis::NonzeroQuadraticForm => "nonzero quadratic form of pure parts",
        })
    }
}

/// `X1 = A0 + B0` and `X2 = pi(A0) - A0 B0`, where `A0`, `B0` are the pure parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StructuredPair {
    pub x1: SymbolElement,
    pub x2: SymbolElement,
}

/// Checks the hypotheses in order and returns the first one that fails.
pub fn check_structured_hypotheses(a: &SymbolElement, b: &SymbolElement) -> Result<()> {
    same_params(a, b)?;
    let fail = |h| Err(Error::HypothesisViolated(h));
    let (a0, b0) = (a.pure_part(), b.pure_part());
    if a.coeff(0) != b.coeff(0) {
        return fail(Hypothesis::EqualScalarParts);
    }
    if a0.is_zero() || b0.is_zero() {
        return fail(Hypothesis::NonzeroPureParts);
    }
    if (&a0 + &b0).is_zero() {
        return fail(Hypothesis::PurePartsNotOpposite);
    }
    if !a0.reduced_norm().is_zero() || !b0.reduced_norm().is_zero() {
        return fail(Hypothesis::PureNormsVanish);
    }
    let pi = a0.pi_form();
    if pi != b0.pi_form() {
        return fail(Hypothesis::EqualQuadraticForms);
    }
    if pi.is_zero() {
        return fail(Hypothesis::NonzeroQuadraticForm);
    }
    Ok(())
}

/// The candidate pair without any checking.
pub fn structured_candidates(a: &SymbolElement, b: &SymbolElement) -> Result<StructuredPair> {
    same_params(a, b)?;
    let (a0, b0) = (a.pure_part(), b.pure_part());
    let x1 = &a0 + &b0;
    let x2 = SymbolElement::scalar(a.params(), a0.pi_form()) - &a0 * &b0;
    Ok(StructuredPair { x1, x2 })
}

pub fn structured_solutions(a: &SymbolElement, b: &SymbolElement) -> Result<StructuredPair> {
    check_structured_hypotheses(a, b)?;
    let pair = structured_candidates(a, b)?;
    for (name, x) in [("X1", &pair.x1), ("X2", &pair.x2)] {
        let residual = a * x - x * b;
        if !residual.is_zero() {
            return Err(Error::VerificationFailed(format!("{name} leaves residual AX - XB = {residual:?}")));
        }
    }
    let m = Matrix::from_columns(&[pair.x1.coeffs().to_vec(), pair.x2.coeffs().to_vec()])?;
    if m.rank() != 2 {
        return Err(Error::VerificationFailed("X1 and X2 are linearly dependent".into()));
    }
    Ok(pair)
}
