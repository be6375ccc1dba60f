//! Finite-dimensional dual pairs `(E, E')` with `E = E' = Q^n` and pairing
//! `<x, x'> = x^T M x'`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::geometry::MAX_DIM;
use crate::linalg::{Matrix, Vector};
use crate::rational::Rational;

/// A dual pair. The pairing matrix is nonsingular, which is exactly the
/// requirement that both sides separate points.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DualPair {
    matrix: Matrix,
}

impl DualPair {
    /// The standard dot-product pairing on `Q^n`.
    pub fn standard(n: usize) -> Self {
        DualPair {
            matrix: Matrix::identity(n),
        }
    }

    pub fn new(matrix: Matrix) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols,
            });
        }
        if matrix.ncols > MAX_DIM {
            return Err(Error::UnsupportedDimension(matrix.ncols));
        }
        if matrix.determinant().is_zero() {
            return Err(Error::SingularPairing);
        }
        Ok(DualPair { matrix })
    }

    pub fn dim(&self) -> usize {
        self.matrix.ncols
    }

    pub fn matrix(&self) -> &Matrix {
        &self.matrix
    }

    pub fn is_standard(&self) -> bool {
        self.matrix == Matrix::identity(self.dim())
    }

    pub fn pair(&self, x: &Vector, xp: &Vector) -> Rational {
        self.functional_of(x).dot(xp)
    }

    /// Coefficients of the linear form `x' -> <x, x'>` on `E'`.
    pub fn functional_of(&self, x: &Vector) -> Vector {
        self.matrix.transpose().apply(x)
    }

    /// The same pairing read from the other side: `(E', E)`.
    pub fn transposed(&self) -> DualPair {
        DualPair {
            matrix: self.matrix.transpose(),
        }
    }
}
