//! Generic dense matrix kernels, monomorphized once per coefficient type.
//!
//! Everything here is exact: Gaussian elimination with the first nonzero
//! pivot, no magnitude-based pivoting. Row-major storage.

use num::rational::BigRational;
use num::{One, Zero};

use super::scalar::{fp_add, fp_inv, fp_mul, fp_neg, fp_sub};

pub(crate) trait Entry: Clone + PartialEq + Send + Sync + 'static {
    type Ctx: Copy + PartialEq + Send + Sync + std::fmt::Debug;
    fn zero(ctx: Self::Ctx) -> Self;
    fn one(ctx: Self::Ctx) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self, ctx: Self::Ctx) -> Self;
    fn sub(&self, rhs: &Self, ctx: Self::Ctx) -> Self;
    fn mul(&self, rhs: &Self, ctx: Self::Ctx) -> Self;
    fn neg(&self, ctx: Self::Ctx) -> Self;
    fn inv(&self, ctx: Self::Ctx) -> Self;
}

/// F_p element; the context carries p.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub(crate) struct Fp(pub u64);

impl Entry for Fp {
    type Ctx = u64;
    fn zero(_p: u64) -> Self {
        Fp(0)
    }
    fn one(_p: u64) -> Self {
        Fp(1)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
    fn add(&self, rhs: &Self, p: u64) -> Self {
        Fp(fp_add(self.0, rhs.0, p))
    }
    fn sub(&self, rhs: &Self, p: u64) -> Self {
        Fp(fp_sub(self.0, rhs.0, p))
    }
    fn mul(&self, rhs: &Self, p: u64) -> Self {
        Fp(fp_mul(self.0, rhs.0, p))
    }
    fn neg(&self, p: u64) -> Self {
        Fp(fp_neg(self.0, p))
    }
    fn inv(&self, p: u64) -> Self {
        Fp(fp_inv(self.0, p))
    }
}

impl Entry for BigRational {
    type Ctx = ();
    fn zero(_: ()) -> Self {
        <BigRational as Zero>::zero()
    }
    fn one(_: ()) -> Self {
        <BigRational as One>::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self, _: ()) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self, _: ()) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self, _: ()) -> Self {
        self * rhs
    }
    fn neg(&self, _: ()) -> Self {
        -self
    }
    fn inv(&self, _: ()) -> Self {
        assert!(!Zero::is_zero(self), "inverse of zero");
        self.recip()
    }
}

#[derive(Clone, PartialEq)]
pub(crate) struct Dense<E: Entry> {
    pub ctx: E::Ctx,
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<E>,
}

impl<E: Entry> Dense<E> {
    pub fn zero(ctx: E::Ctx, rows: usize, cols: usize) -> Self {
        Dense {
            ctx,
            rows,
            cols,
            data: vec![E::zero(ctx); rows * cols],
        }
    }

    pub fn identity(ctx: E::Ctx, n: usize) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.data[i * n + i] = E::one(ctx);
        }
        m
    }

    #[inline]
    pub fn at(&self, r: usize, c: usize) -> &E {
        &self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: E) {
        self.data[r * self.cols + c] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn is_identity(&self) -> bool {
        if self.rows != self.cols {
            return false;
        }
        for r in 0..self.rows {
            for c in 0..self.cols {
                let e = self.at(r, c);
                if r == c {
                    if *e != E::one(self.ctx) {
                        return false;
                    }
                } else if !e.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    pub fn add(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in add");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.add(b, self.ctx))
            .collect();
        Dense { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "shape mismatch in sub");
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(a, b)| a.sub(b, self.ctx))
            .collect();
        Dense { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn neg(&self) -> Self {
        let data = self.data.iter().map(|a| a.neg(self.ctx)).collect();
        Dense { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &E) -> Self {
        let data = self.data.iter().map(|a| a.mul(s, self.ctx)).collect();
        Dense { ctx: self.ctx, rows: self.rows, cols: self.cols, data }
    }

    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "shape mismatch in matmul");
        let ctx = self.ctx;
        let mut out = Self::zero(ctx, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j).add(&a.mul(b, ctx), ctx);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zero(self.ctx, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }

    pub fn hstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty());
        let rows = parts[0].rows;
        let ctx = parts[0].ctx;
        assert!(parts.iter().all(|m| m.rows == rows));
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zero(ctx, rows, cols);
        let mut off = 0;
        for m in parts {
            for r in 0..rows {
                for c in 0..m.cols {
                    out.set(r, off + c, m.at(r, c).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn vstack(parts: &[&Self]) -> Self {
        assert!(!parts.is_empty());
        let cols = parts[0].cols;
        let ctx = parts[0].ctx;
        assert!(parts.iter().all(|m| m.cols == cols));
        let rows = parts.iter().map(|m| m.rows).sum();
        let mut out = Self::zero(ctx, rows, cols);
        let mut off = 0;
        for m in parts {
            for r in 0..m.rows {
                for c in 0..cols {
                    out.set(off + r, c, m.at(r, c).clone());
                }
            }
            off += m.rows;
        }
        out
    }

    pub fn block_diag(parts: &[&Self], ctx: E::Ctx) -> Self {
        let rows = parts.iter().map(|m| m.rows).sum();
        let cols = parts.iter().map(|m| m.cols).sum();
        let mut out = Self::zero(ctx, rows, cols);
        let (mut ro, mut co) = (0, 0);
        for m in parts {
            for r in 0..m.rows {
                for c in 0..m.cols {
                    out.set(ro + r, co + c, m.at(r, c).clone());
                }
            }
            ro += m.rows;
            co += m.cols;
        }
        out
    }

    /// Reduced row echelon form; returns the pivot columns in order.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    pub fn rref_in_place(&mut self) -> Vec<usize> {
        let ctx = self.ctx;
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if pr != row {
                for c in 0..self.cols {
                    self.data.swap(pr * self.cols + c, row * self.cols + c);
                }
            }
            let inv = self.at(row, col).inv(ctx);
            for c in col..self.cols {
                let v = self.at(row, c).mul(&inv, ctx);
                self.set(row, c, v);
            }
            for r in 0..self.rows {
                if r == row || self.at(r, col).is_zero() {
                    continue;
                }
                let f = self.at(r, col).clone();
                for c in col..self.cols {
                    let v = self.at(r, c).sub(&f.mul(self.at(row, c), ctx), ctx);
                    self.set(r, c, v);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns form a basis of the kernel, ordered by free column index.
    pub fn kernel_basis(&self) -> Self {
        let ctx = self.ctx;
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Self::zero(ctx, self.cols, free.len());
        for (k, &f) in free.iter().enumerate() {
            out.set(f, k, E::one(ctx));
            for (i, &p) in pivots.iter().enumerate() {
                out.set(p, k, r.at(i, f).neg(ctx));
            }
        }
        out
    }

    /// One solution of `self * X = rhs` (free variables set to zero), or None.
    pub fn solve(&self, rhs: &Self) -> Option<Self> {
        assert_eq!(self.rows, rhs.rows, "shape mismatch in solve");
        let aug = Self::hstack(&[self, rhs]);
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= self.cols) {
            return None;
        }
        let mut x = Self::zero(self.ctx, self.cols, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.at(i, self.cols + j).clone());
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.rows != self.cols {
            return None;
        }
        let x = self.solve(&Self::identity(self.ctx, self.rows))?;
        if self.matmul(&x).is_identity() {
            Some(x)
        } else {
            None
        }
    }

    /// Canonical basis of the column space: reduced column echelon form.
    pub fn col_space_basis(&self) -> Self {
        let (r, pivots) = self.transpose().rref();
        let mut rows = Vec::new();
        for i in 0..pivots.len() {
            let mut row = Self::zero(self.ctx, 1, self.rows);
            for c in 0..self.rows {
                row.set(0, c, r.at(i, c).clone());
            }
            rows.push(row);
        }
        if rows.is_empty() {
            return Self::zero(self.ctx, self.rows, 0);
        }
        Self::vstack(&rows.iter().collect::<Vec<_>>()).transpose()
    }
}
