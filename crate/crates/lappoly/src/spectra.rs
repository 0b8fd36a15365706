//! Exact integer matrices of graphs and their characteristic polynomials.

use num::bigint::BigInt;
use num::traits::Zero;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::poly::IntPoly;
use crate::roots::{real_roots, RootList, DEFAULT_ROOT_TOL};

/// Dense matrix with exact integer entries. Rectangular shapes are allowed
/// (the incidence matrix is vertices x edges).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zero(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = BigInt::from(1);
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn get_mut(&mut self, i: usize, j: usize) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut t = IntMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                *t.get_mut(j, i) = self.get(i, j).clone();
            }
        }
        t
    }

    pub fn mul(&self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = IntMatrix::zero(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if !b.is_zero() {
                        *out.get_mut(i, j) += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        assert!(self.is_square(), "trace of a non-square matrix");
        (0..self.rows).map(|i| self.get(i, i).clone()).sum()
    }

    /// Submatrix keeping the given rows and columns, in order.
    pub fn submatrix(&self, keep_rows: &[usize], keep_cols: &[usize]) -> IntMatrix {
        let mut out = IntMatrix::zero(keep_rows.len(), keep_cols.len());
        for (i, &r) in keep_rows.iter().enumerate() {
            for (j, &c) in keep_cols.iter().enumerate() {
                *out.get_mut(i, j) = self.get(r, c).clone();
            }
        }
        out
    }
}

pub fn adjacency(g: &Graph) -> IntMatrix {
    let mut a = IntMatrix::zero(g.n(), g.n());
    for &(u, v) in g.edges() {
        *a.get_mut(u, v) = BigInt::from(1);
        *a.get_mut(v, u) = BigInt::from(1);
    }
    a
}

/// Laplacian L = D - A.
pub fn laplacian(g: &Graph) -> IntMatrix {
    let mut l = IntMatrix::zero(g.n(), g.n());
    for v in 0..g.n() {
        *l.get_mut(v, v) = BigInt::from(g.degree(v));
    }
    for &(u, v) in g.edges() {
        *l.get_mut(u, v) = BigInt::from(-1);
        *l.get_mut(v, u) = BigInt::from(-1);
    }
    l
}

/// Signless Laplacian Q = D + A.
pub fn signless_laplacian(g: &Graph) -> IntMatrix {
    let mut q = IntMatrix::zero(g.n(), g.n());
    for v in 0..g.n() {
        *q.get_mut(v, v) = BigInt::from(g.degree(v));
    }
    for &(u, v) in g.edges() {
        *q.get_mut(u, v) = BigInt::from(1);
        *q.get_mut(v, u) = BigInt::from(1);
    }
    q
}

/// Vertex-edge incidence matrix B: entry (v, e) is 1 iff v is an endpoint
/// of e. Satisfies B B^T = Q.
pub fn incidence(g: &Graph) -> IntMatrix {
    let mut b = IntMatrix::zero(g.n(), g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        *b.get_mut(u, e) = BigInt::from(1);
        *b.get_mut(v, e) = BigInt::from(1);
    }
    b
}

/// Exact characteristic polynomial det(xI - M) by the Faddeev-LeVerrier
/// recurrence. Every division is exact for integer matrices. Panics on a
/// non-square input.
pub fn char_poly(m: &IntMatrix) -> IntPoly {
    assert!(m.is_square(), "characteristic polynomial of a non-square matrix");
    let n = m.rows();
    let mut coeffs = vec![BigInt::zero(); n + 1];
    coeffs[n] = BigInt::from(1);
    let mut aux = IntMatrix::identity(n);
    for k in 1..=n {
        aux = m.mul(&aux);
        let t = aux.trace();
        let (c, rem) = num::Integer::div_rem(&-t, &BigInt::from(k));
        debug_assert!(rem.is_zero(), "Faddeev-LeVerrier division must be exact");
        for i in 0..n {
            *aux.get_mut(i, i) += &c;
        }
        coeffs[n - k] = c;
    }
    IntPoly::from_coeffs(coeffs)
}

/// Characteristic polynomial of the principal submatrix of Q(G) keeping
/// the rows and columns of `V(G) \ W`; diagonal entries stay the degrees
/// taken in the whole graph.
pub fn principal_char_poly(g: &Graph, w: &[usize]) -> Result<IntPoly> {
    let keep = complement(g, w)?;
    let q = signless_laplacian(g);
    Ok(char_poly(&q.submatrix(&keep, &keep)))
}

fn complement(g: &Graph, w: &[usize]) -> Result<Vec<usize>> {
    let mut drop = vec![false; g.n()];
    for &v in w {
        if v >= g.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: g.n() });
        }
        drop[v] = true;
    }
    Ok((0..g.n()).filter(|&v| !drop[v]).collect())
}

/// Both sides of the subdivision spectra identity
/// `phi(A(S_G - W), x) = x^(m - n + |W|) phi(Q(G)_[G-W], x^2)`,
/// compared exactly. A negative exponent moves the monomial to the left
/// side, keeping both sides polynomial.
#[derive(Debug, Clone)]
pub struct SpectraCheck {
    pub left: IntPoly,
    pub right: IntPoly,
    pub exponent: i64,
    pub pass: bool,
}

pub fn subdivision_spectra_check(g: &Graph, w: &[usize]) -> Result<SpectraCheck> {
    let keep = complement(g, w)?;
    let removed = g.n() - keep.len();
    let s = g.subdivision();
    let dropped: Vec<usize> = (0..g.n()).filter(|v| !keep.contains(v)).collect();
    let (sd, _) = s.graph().induced_delete(&dropped)?;
    let mut left = char_poly(&adjacency(&sd));
    let mut right = principal_char_poly(g, w)?.substitute_square();
    let exponent = g.m() as i64 - g.n() as i64 + removed as i64;
    if exponent >= 0 {
        right = right.mul_by_power(exponent as usize);
    } else {
        left = left.mul_by_power((-exponent) as usize);
    }
    let pass = left == right;
    Ok(SpectraCheck {
        left,
        right,
        exponent,
        pass,
    })
}

/// Largest eigenvalue of the signless Laplacian, from the exact
/// characteristic polynomial.
pub fn spectral_radius(g: &Graph) -> f64 {
    signless_spectrum(g).max().unwrap_or(0.0)
}

/// Certified roots of phi(Q(G), x).
pub fn signless_spectrum(g: &Graph) -> RootList {
    real_roots(&char_poly(&signless_laplacian(g)), DEFAULT_ROOT_TOL)
        .expect("the signless Laplacian of a graph is symmetric, hence real-rooted")
}
