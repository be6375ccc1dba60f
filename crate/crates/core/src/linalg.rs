//! Exact dense linear algebra over the rationals: vectors, elimination,
//! rank, null spaces and square solves. Everything here is small (n ≤ 4)
//! so plain Gaussian elimination is used throughout.

// Elimination reads one row while writing another, so index loops stay.
#![allow(clippy::needless_range_loop)]

use std::fmt;
use std::ops::Index;

use num_traits::{One, Signed, Zero};

use crate::rational::{self, Rational};

/// A point of `E` or a functional of `E'`, as exact coordinates.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vector(pub Vec<Rational>);

impl Vector {
    pub fn zeros(n: usize) -> Self {
        Vector(vec![Rational::zero(); n])
    }

    pub fn unit(n: usize, i: usize) -> Self {
        let mut v = Self::zeros(n);
        v.0[i] = Rational::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector(xs.iter().map(|&x| rational::int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn iter(&self) -> std::slice::Iter<'_, Rational> {
        self.0.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Rational {
        self.0
            .iter()
            .zip(&other.0)
            .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
    }

    pub fn add(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        Vector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, t: &Rational) -> Vector {
        Vector(self.0.iter().map(|a| a * t).collect())
    }

    pub fn neg(&self) -> Vector {
        Vector(self.0.iter().map(|a| -a).collect())
    }

    /// Positive rescaling to coprime integer coordinates. Zero stays zero.
    pub fn primitive(&self) -> Vector {
        let m = rational::primitive_multiplier(&self.0);
        self.scale(&m)
    }
}

impl Index<usize> for Vector {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl From<Vec<Rational>> for Vector {
    fn from(v: Vec<Rational>) -> Self {
        Vector(v)
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", rational::format(x))?;
        }
        write!(f, ")")
    }
}

/// Row-major exact matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    pub rows: Vec<Vec<Rational>>,
    pub ncols: usize,
}

impl Matrix {
    pub fn new(rows: Vec<Vec<Rational>>, ncols: usize) -> Self {
        debug_assert!(rows.iter().all(|r| r.len() == ncols));
        Matrix { rows, ncols }
    }

    pub fn identity(n: usize) -> Self {
        Matrix::new((0..n).map(|i| Vector::unit(n, i).0).collect(), n)
    }

    pub fn from_ints(rows: &[&[i64]]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        Matrix::new(
            rows.iter()
                .map(|r| r.iter().map(|&x| rational::int(x)).collect())
                .collect(),
            ncols,
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn is_square(&self) -> bool {
        self.nrows() == self.ncols
    }

    pub fn transpose(&self) -> Matrix {
        let rows = (0..self.ncols)
            .map(|j| self.rows.iter().map(|r| r[j].clone()).collect())
            .collect();
        Matrix::new(rows, self.nrows())
    }

    pub fn apply(&self, v: &Vector) -> Vector {
        Vector(
            self.rows
                .iter()
                .map(|r| r.iter().zip(&v.0).fold(Rational::zero(), |acc, (a, b)| acc + a * b))
                .collect(),
        )
    }

    pub fn determinant(&self) -> Rational {
        assert!(self.is_square());
        let mut m = self.rows.clone();
        let n = self.ncols;
        let mut det = Rational::one();
        for col in 0..n {
            let Some(p) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap(p, col);
                det = -det;
            }
            let pivot = m[col][col].clone();
            det *= &pivot;
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let f = &m[r][col] / &pivot;
                for c in col..n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
        det
    }
}

/// Reduced row echelon form. Returns the nonzero rows and pivot columns.
pub fn rref(rows: &[Vec<Rational>], ncols: usize) -> (Vec<Vec<Rational>>, Vec<usize>) {
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == m.len() {
            break;
        }
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for x in m[r].iter_mut() {
            *x *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..ncols {
                    let delta = &f * &m[r][j];
                    m[i][j] -= delta;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    m.truncate(r);
    (m, pivots)
}

pub fn rank(rows: &[Vec<Rational>], ncols: usize) -> usize {
    if rows.is_empty() {
        return 0;
    }
    rref(rows, ncols).1.len()
}

pub fn rank_of(vectors: &[Vector], ncols: usize) -> usize {
    let rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.0.clone()).collect();
    rank(&rows, ncols)
}

/// Basis of `{x : row · x = 0 for every row}`, one vector per free column,
/// each scaled to primitive integers.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vector> {
    let (r, pivots) = rref(rows, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (row, &pc) in r.iter().zip(&pivots) {
                v[pc] = -row[f].clone();
            }
            Vector(v).primitive()
        })
        .collect()
}

/// Unique solution of the square system `A x = b`, or `None` when singular.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vector> {
    let n = a.len();
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, bi)| {
            let mut r = row.clone();
            r.push(bi.clone());
            r
        })
        .collect();
    for col in 0..n {
        let p = (col..n).find(|&r| !m[r][col].is_zero())?;
        m.swap(p, col);
        let inv = m[col][col].recip();
        for x in m[col].iter_mut() {
            *x *= &inv;
        }
        for r in 0..n {
            if r != col && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=n {
                    let delta = &f * &m[col][c];
                    m[r][c] -= delta;
                }
            }
        }
    }
    Some(Vector(m.into_iter().map(|mut r| r.pop().unwrap()).collect()))
}

/// Pairwise-orthogonal basis of the span of `vectors` (exact Gram–Schmidt,
/// no normalisation).
pub fn orthogonal_basis(vectors: &[Vector]) -> Vec<Vector> {
    let mut basis: Vec<Vector> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for b in &basis {
            let coeff = w.dot(b) / b.dot(b);
            w = w.sub(&b.scale(&coeff));
        }
        if !w.is_zero() {
            basis.push(w.primitive());
        }
    }
    basis
}

/// Removes from `v` its orthogonal projection onto the span of `ortho`,
/// which must already be pairwise orthogonal.
pub fn reject_from(v: &Vector, ortho: &[Vector]) -> Vector {
    let mut w = v.clone();
    for b in ortho {
        let coeff = w.dot(b) / b.dot(b);
        w = w.sub(&b.scale(&coeff));
    }
    w
}

pub fn sign(q: &Rational) -> i8 {
    if q.is_positive() {
        1
    } else if q.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    #[test]
    fn determinant_of_small_matrices() {
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[3, 4]]).determinant(), int(-2));
        assert_eq!(Matrix::from_ints(&[&[1, 2], &[2, 4]]).determinant(), int(0));
        assert_eq!(Matrix::identity(3).determinant(), int(1));
        assert_eq!(
            Matrix::from_ints(&[&[0, 1, 0], &[1, 0, 0], &[0, 0, 2]]).determinant(),
            int(-2)
        );
    }

    #[test]
    fn nullspace_of_plane() {
        let ns = nullspace(&[vec![int(1), int(1), int(0)]], 3);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            assert!(v.dot(&Vector::from_ints(&[1, 1, 0])) == int(0));
        }
        assert_eq!(rank_of(&ns, 3), 2);
    }

    #[test]
    fn solve_unique_and_singular() {
        let a = vec![vec![int(2), int(1)], vec![int(1), int(3)]];
        let x = solve(&a, &[int(3), int(4)]).unwrap();
        assert_eq!(x, Vector(vec![int(1), int(1)]));
        let s = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        assert!(solve(&s, &[int(1), int(2)]).is_none());
    }

    #[test]
    fn gram_schmidt_is_orthogonal() {
        let b = orthogonal_basis(&[Vector::from_ints(&[1, 1, 0]), Vector::from_ints(&[1, 0, 1])]);
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].dot(&b[1]), int(0));
        let r = reject_from(&Vector::from_ints(&[1, 0, 0]), &b);
        assert!(r.dot(&b[0]) == int(0) && r.dot(&b[1]) == int(0));
        assert_eq!(r.primitive(), Vector::from_ints(&[1, -1, -1]));
    }

    #[test]
    fn primitive_keeps_direction() {
        let v = Vector(vec![frac(-1, 2), frac(3, 4)]);
        assert_eq!(v.primitive(), Vector::from_ints(&[-2, 3]));
    }
}
