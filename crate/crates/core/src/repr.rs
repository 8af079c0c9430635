//! Left and right regular representations on the 9-dimensional coordinate space.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::algebra::{AlgebraParams, Exponent, SymbolElement, BASIS};
use crate::error::{Error, Result};
use crate::field::CycQ;
use crate::linalg::{AffineSolution, Matrix};

/// Coordinates of an element in the fixed basis.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct VecK(pub [CycQ; 9]);

impl VecK {
    pub fn unit(k: usize) -> Self {
        let mut v = VecK::default();
        v.0[k] = CycQ::one();
        v
    }

    pub fn as_slice(&self) -> &[CycQ] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(CycQ::is_zero)
    }

    fn from_slice(v: &[CycQ]) -> Self {
        VecK(v.to_vec().try_into().expect("length 9"))
    }
}

/// A 9x9 matrix over `Q(w)`.
#[derive(Clone, PartialEq, Eq)]
pub struct MatK(Matrix);

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AffineSolutionK {
    Solvable { particular: VecK, kernel: Vec<VecK> },
    Inconsistent,
}

impl MatK {
    pub fn from_matrix(m: Matrix) -> Result<Self> {
        if m.rows() != 9 || m.cols() != 9 {
            return Err(Error::Dimension(format!("expected 9x9, got {}x{}", m.rows(), m.cols())));
        }
        Ok(MatK(m))
    }

    pub fn identity() -> Self {
        MatK(Matrix::identity(9))
    }

    pub fn zero() -> Self {
        MatK(Matrix::zeros(9, 9))
    }

    pub fn from_fn(f: impl FnMut(usize, usize) -> CycQ) -> Self {
        MatK(Matrix::from_fn(9, 9, f))
    }

    pub fn as_matrix(&self) -> &Matrix {
        &self.0
    }

    pub fn get(&self, i: usize, j: usize) -> &CycQ {
        &self.0[(i, j)]
    }

    pub fn det(&self) -> CycQ {
        self.0.det().expect("square")
    }

    pub fn trace(&self) -> CycQ {
        self.0.trace()
    }

    pub fn transpose(&self) -> MatK {
        MatK(self.0.transpose())
    }

    pub fn mul_vec(&self, v: &VecK) -> VecK {
        VecK::from_slice(&self.0.mul_vec(&v.0).expect("9 columns"))
    }

    pub fn kernel_basis(&self) -> Vec<VecK> {
        self.0.kernel_basis().iter().map(|v| VecK::from_slice(v)).collect()
    }

    pub fn solve_affine(&self, rhs: &VecK) -> AffineSolutionK {
        match self.0.solve_affine(&rhs.0).expect("9 rows") {
            AffineSolution::Inconsistent => AffineSolutionK::Inconsistent,
            AffineSolution::Solvable { particular, kernel } => AffineSolutionK::Solvable {
                particular: VecK::from_slice(&particular),
                kernel: kernel.iter().map(|v| VecK::from_slice(v)).collect(),
            },
        }
    }

    /// Row-major entries in canonical scalar text.
    pub fn to_strings(&self) -> Vec<String> {
        self.0.entries().iter().map(ToString::to_string).collect()
    }
}

impl Mul for &MatK {
    type Output = MatK;
    fn mul(self, rhs: &MatK) -> MatK {
        MatK(&self.0 * &rhs.0)
    }
}

impl Add for &MatK {
    type Output = MatK;
    fn add(self, rhs: &MatK) -> MatK {
        MatK(&self.0 + &rhs.0)
    }
}

impl Sub for &MatK {
    type Output = MatK;
    fn sub(self, rhs: &MatK) -> MatK {
        MatK(&self.0 - &rhs.0)
    }
}

impl fmt::Debug for MatK {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(&self.0, f)
    }
}

pub fn vec_rep(z: &SymbolElement) -> VecK {
    VecK(z.coeffs().clone())
}

pub fn element_from_vec(v: &VecK, params: &AlgebraParams) -> SymbolElement {
    SymbolElement::new(params, v.0.clone())
}

/// Column `k` holds the coordinates of `z * b_k`.
pub fn lambda_mat(z: &SymbolElement) -> MatK {
    let p = z.params();
    let cols: Vec<Vec<CycQ>> =
        (0..9).map(|k| (z * &SymbolElement::basis(p, k)).into_coeffs().to_vec()).collect();
    MatK(Matrix::from_columns(&cols).expect("9 columns"))
}

/// Column `k` holds the coordinates of `b_k * z`.
pub fn gamma_mat(z: &SymbolElement) -> MatK {
    let p = z.params();
    let cols: Vec<Vec<CycQ>> =
        (0..9).map(|k| (&SymbolElement::basis(p, k) * z).into_coeffs().to_vec()).collect();
    MatK(Matrix::from_columns(&cols).expect("9 columns"))
}

/// A weighted monomial `w * x^i y^j` used as an entry of the reconstruction vectors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightedMonomial {
    pub weight: CycQ,
    pub exponent: Exponent,
}

/// Which pair of outer vectors to wrap around the scalar matrix.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ReconstructionRoute {
    /// Plain basis on the left of `Lambda(z)`, inverse-weighted reversed basis on the right.
    Left,
    /// Inverse-weighted basis on the left of `Lambda(z)`, reversed basis on the right.
    /// Reproduces `3z` only when `a = b = 1`; kept as a diagnostic.
    LeftPrintedWeights,
    /// Inverse-weighted reversed basis on the left of `Gamma(z)^t`, plain basis on the right.
    RightTransposed,
}

// position k -> exponent of x^{-i} y^{-j} up to scalars, i.e. (3-i mod 3, 3-j mod 3)
fn reversed(e: Exponent) -> Exponent {
    Exponent { x: (3 - e.x) % 3, y: (3 - e.y) % 3 }
}

fn inverse_weight(e: Exponent, params: &AlgebraParams) -> CycQ {
    let mut w = CycQ::one();
    if e.x != 0 {
        w = w * params.a().inv().expect("a != 0");
    }
    if e.y != 0 {
        w = w * params.b().inv().expect("b != 0");
    }
    w
}

/// The left and right vectors of the chosen route, position by position.
pub fn reconstruction_vectors(
    route: ReconstructionRoute,
    params: &AlgebraParams,
) -> (Vec<WeightedMonomial>, Vec<WeightedMonomial>) {
    let plain = |e: Exponent| WeightedMonomial { weight: CycQ::one(), exponent: e };
    let scaled_rev = |e: Exponent| WeightedMonomial { weight: inverse_weight(e, params), exponent: reversed(e) };
    let scaled = |e: Exponent| WeightedMonomial { weight: inverse_weight(e, params), exponent: e };
    let unscaled_rev = |e: Exponent| WeightedMonomial { weight: CycQ::one(), exponent: reversed(e) };
    match route {
        ReconstructionRoute::Left => (BASIS.map(plain).to_vec(), BASIS.map(scaled_rev).to_vec()),
        ReconstructionRoute::LeftPrintedWeights => (BASIS.map(scaled).to_vec(), BASIS.map(unscaled_rev).to_vec()),
        ReconstructionRoute::RightTransposed => (BASIS.map(scaled_rev).to_vec(), BASIS.map(plain).to_vec()),
    }
}

/// Evaluates the mixed product `sum_ij m_i * A_ij * n_j` in the algebra.
pub fn mixed_product(
    left: &[WeightedMonomial],
    mat: &MatK,
    right: &[WeightedMonomial],
    params: &AlgebraParams,
) -> SymbolElement {
    let mut out: [CycQ; 9] = Default::default();
    for (i, m) in left.iter().enumerate() {
        for (j, n) in right.iter().enumerate() {
            let entry = mat.get(i, j);
            if entry.is_zero() {
                continue;
            }
            let (s, e) = crate::algebra::basis_product(m.exponent, n.exponent, params.a(), params.b());
            out[e.index()] += &(&m.weight * &n.weight) * &(s * entry);
        }
    }
    SymbolElement::new(params, out)
}

pub fn reconstruct_via(z: &SymbolElement, route: ReconstructionRoute) -> SymbolElement {
    let p = z.params();
    let (left, right) = reconstruction_vectors(route, p);
    let mat = match route {
        ReconstructionRoute::Left | ReconstructionRoute::LeftPrintedWeights => lambda_mat(z),
        ReconstructionRoute::RightTransposed => gamma_mat(z).transpose(),
    };
    mixed_product(&left, &mat, &right, p)
}

/// Recovers `3z` through both representations; fails if either route disagrees.
pub fn reconstruct(z: &SymbolElement) -> Result<SymbolElement> {
    let target = z.scale(&CycQ::from_int(3));
    for route in [ReconstructionRoute::Left, ReconstructionRoute::RightTransposed] {
        let got = reconstruct_via(z, route);
        if got != target {
            return Err(Error::IdentityViolation(format!("{route:?} route gave {got:?}")));
        }
    }
    Ok(target)
}
