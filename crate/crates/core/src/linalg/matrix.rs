use num::rational::BigRational;
use rand::Rng;
use std::fmt;

use super::dense::{Dense, Fp};
use super::scalar::{FieldSpec, Scalar};

/// Exact dense matrix over the session field.
///
/// Internally specialized per field so that F_p work runs on machine words
/// while rational work uses arbitrary precision.
#[derive(Clone, PartialEq)]
pub struct Matrix {
    inner: Inner,
}

#[derive(Clone, PartialEq)]
enum Inner {
    Fp(Dense<Fp>),
    Rat(Dense<BigRational>),
}

macro_rules! lift1 {
    ($self:expr, $m:ident => $body:expr) => {
        match &$self.inner {
            Inner::Fp($m) => Matrix { inner: Inner::Fp($body) },
            Inner::Rat($m) => Matrix { inner: Inner::Rat($body) },
        }
    };
}

macro_rules! lift2 {
    ($self:expr, $rhs:expr, $a:ident, $b:ident => $body:expr) => {
        match (&$self.inner, &$rhs.inner) {
            (Inner::Fp($a), Inner::Fp($b)) => Matrix { inner: Inner::Fp($body) },
            (Inner::Rat($a), Inner::Rat($b)) => Matrix { inner: Inner::Rat($body) },
            _ => panic!("mixed fields in matrix operation"),
        }
    };
}

macro_rules! peek {
    ($self:expr, $m:ident => $body:expr) => {
        match &$self.inner {
            Inner::Fp($m) => $body,
            Inner::Rat($m) => $body,
        }
    };
}

impl Matrix {
    pub fn zero(field: FieldSpec, rows: usize, cols: usize) -> Self {
        match field {
            FieldSpec::Prime(p) => Matrix { inner: Inner::Fp(Dense::zero(p, rows, cols)) },
            FieldSpec::Rationals => Matrix { inner: Inner::Rat(Dense::zero((), rows, cols)) },
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        match field {
            FieldSpec::Prime(p) => Matrix { inner: Inner::Fp(Dense::identity(p, n)) },
            FieldSpec::Rationals => Matrix { inner: Inner::Rat(Dense::identity((), n)) },
        }
    }

    pub fn from_fn(field: FieldSpec, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut m = Self::zero(field, rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                m.set(r, c, f(r, c));
            }
        }
        m
    }

    /// Builds from row-major integer entries; convenient for presets and tests.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let nr = rows.len();
        let nc = rows.first().map_or(0, |r| r.len());
        Self::from_fn(field, nr, nc, |i, j| Scalar::from_int(field, rows[i][j]))
    }

    pub fn field(&self) -> FieldSpec {
        match &self.inner {
            Inner::Fp(m) => FieldSpec::Prime(m.ctx),
            Inner::Rat(_) => FieldSpec::Rationals,
        }
    }

    pub fn rows(&self) -> usize {
        peek!(self, m => m.rows)
    }

    pub fn cols(&self) -> usize {
        peek!(self, m => m.cols)
    }

    pub fn get(&self, r: usize, c: usize) -> Scalar {
        assert!(r < self.rows() && c < self.cols(), "index out of range");
        match &self.inner {
            Inner::Fp(m) => Scalar::Prime { p: m.ctx, value: m.at(r, c).0 },
            Inner::Rat(m) => Scalar::Rational(m.at(r, c).clone()),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert!(r < self.rows() && c < self.cols(), "index out of range");
        match (&mut self.inner, v) {
            (Inner::Fp(m), Scalar::Prime { p, value }) => {
                assert_eq!(m.ctx, p, "mixed prime fields");
                m.set(r, c, Fp(value));
            }
            (Inner::Rat(m), Scalar::Rational(x)) => m.set(r, c, x),
            _ => panic!("scalar field does not match matrix field"),
        }
    }

    pub fn is_zero(&self) -> bool {
        peek!(self, m => m.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        peek!(self, m => m.is_identity())
    }

    pub fn add(&self, rhs: &Matrix) -> Matrix {
        lift2!(self, rhs, a, b => a.add(b))
    }

    pub fn sub(&self, rhs: &Matrix) -> Matrix {
        lift2!(self, rhs, a, b => a.sub(b))
    }

    pub fn neg(&self) -> Matrix {
        lift1!(self, m => m.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        match (&self.inner, s) {
            (Inner::Fp(m), Scalar::Prime { p, value }) => {
                assert_eq!(m.ctx, *p, "mixed prime fields");
                Matrix { inner: Inner::Fp(m.scale(&Fp(*value))) }
            }
            (Inner::Rat(m), Scalar::Rational(x)) => Matrix { inner: Inner::Rat(m.scale(x)) },
            _ => panic!("scalar field does not match matrix field"),
        }
    }

    pub fn matmul(&self, rhs: &Matrix) -> Matrix {
        lift2!(self, rhs, a, b => a.matmul(b))
    }

    pub fn transpose(&self) -> Matrix {
        lift1!(self, m => m.transpose())
    }

    pub fn hstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty(), "hstack of nothing");
        let fps: Vec<&Dense<Fp>> = parts
            .iter()
            .filter_map(|m| match &m.inner {
                Inner::Fp(d) => Some(d),
                _ => None,
            })
            .collect();
        if fps.len() == parts.len() {
            return Matrix { inner: Inner::Fp(Dense::hstack(&fps)) };
        }
        let rats: Vec<&Dense<BigRational>> = parts
            .iter()
            .filter_map(|m| match &m.inner {
                Inner::Rat(d) => Some(d),
                _ => None,
            })
            .collect();
        assert_eq!(rats.len(), parts.len(), "mixed fields in hstack");
        Matrix { inner: Inner::Rat(Dense::hstack(&rats)) }
    }

    pub fn vstack(parts: &[&Matrix]) -> Matrix {
        assert!(!parts.is_empty(), "vstack of nothing");
        let t: Vec<Matrix> = parts.iter().map(|m| m.transpose()).collect();
        Matrix::hstack(&t.iter().collect::<Vec<_>>()).transpose()
    }

    pub fn block_diag(field: FieldSpec, parts: &[&Matrix]) -> Matrix {
        match field {
            FieldSpec::Prime(p) => {
                let ds: Vec<&Dense<Fp>> = parts
                    .iter()
                    .map(|m| match &m.inner {
                        Inner::Fp(d) => {
                            assert_eq!(d.ctx, p, "mixed prime fields");
                            d
                        }
                        _ => panic!("mixed fields in block_diag"),
                    })
                    .collect();
                Matrix { inner: Inner::Fp(Dense::block_diag(&ds, p)) }
            }
            FieldSpec::Rationals => {
                let ds: Vec<&Dense<BigRational>> = parts
                    .iter()
                    .map(|m| match &m.inner {
                        Inner::Rat(d) => d,
                        _ => panic!("mixed fields in block_diag"),
                    })
                    .collect();
                Matrix { inner: Inner::Rat(Dense::block_diag(&ds, ())) }
            }
        }
    }

    /// Reduced row echelon form with the pivot column list.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        match &self.inner {
            Inner::Fp(m) => {
                let (r, p) = m.rref();
                (Matrix { inner: Inner::Fp(r) }, p)
            }
            Inner::Rat(m) => {
                let (r, p) = m.rref();
                (Matrix { inner: Inner::Rat(r) }, p)
            }
        }
    }

    pub fn rank(&self) -> usize {
        peek!(self, m => m.rank())
    }

    /// Basis of the right kernel as columns; `cols() - rank()` of them.
    pub fn kernel_basis(&self) -> Matrix {
        lift1!(self, m => m.kernel_basis())
    }

    /// One solution `X` of `self * X = rhs`, or None if inconsistent.
    pub fn solve(&self, rhs: &Matrix) -> Option<Matrix> {
        match (&self.inner, &rhs.inner) {
            (Inner::Fp(a), Inner::Fp(b)) => a.solve(b).map(|x| Matrix { inner: Inner::Fp(x) }),
            (Inner::Rat(a), Inner::Rat(b)) => a.solve(b).map(|x| Matrix { inner: Inner::Rat(x) }),
            _ => panic!("mixed fields in solve"),
        }
    }

    pub fn inverse(&self) -> Option<Matrix> {
        match &self.inner {
            Inner::Fp(m) => m.inverse().map(|x| Matrix { inner: Inner::Fp(x) }),
            Inner::Rat(m) => m.inverse().map(|x| Matrix { inner: Inner::Rat(x) }),
        }
    }

    pub fn is_invertible(&self) -> bool {
        self.rows() == self.cols() && self.rank() == self.rows()
    }

    /// Canonical basis of the column space (reduced column echelon form).
    pub fn col_space_basis(&self) -> Matrix {
        lift1!(self, m => m.col_space_basis())
    }

    pub fn column(&self, c: usize) -> Matrix {
        Matrix::from_fn(self.field(), self.rows(), 1, |r, _| self.get(r, c))
    }

    pub fn columns(&self, range: std::ops::Range<usize>) -> Matrix {
        let cs: Vec<Matrix> = range.map(|c| self.column(c)).collect();
        if cs.is_empty() {
            return Matrix::zero(self.field(), self.rows(), 0);
        }
        Matrix::hstack(&cs.iter().collect::<Vec<_>>())
    }

    /// Does the column span of `self` contain every column of `vecs`?
    pub fn spans(&self, vecs: &Matrix) -> bool {
        self.solve(vecs).is_some()
    }

    /// Random matrix with entries drawn uniformly (F_p) or as small integers (Q).
    pub fn random(field: FieldSpec, rows: usize, cols: usize, rng: &mut impl Rng) -> Matrix {
        Matrix::from_fn(field, rows, cols, |_, _| match field {
            FieldSpec::Prime(p) => Scalar::Prime { p, value: rng.gen_range(0..p) },
            FieldSpec::Rationals => Scalar::from_int(field, rng.gen_range(-9..=9)),
        })
    }
}

fn fmt_matrix(m: &Matrix, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "[")?;
    for r in 0..m.rows() {
        if r > 0 {
            write!(f, "; ")?;
        }
        for c in 0..m.cols() {
            if c > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", m.get(r, c))?;
        }
    }
    write!(f, "]({}x{})", m.rows(), m.cols())
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_matrix(self, f)
    }
}
