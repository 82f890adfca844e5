//! Direct sums of indecomposable projectives and maps between them in
//! element form.
//!
//! A map ⊕_t A e_{j_t} -> ⊕_s A e_{i_s} is determined by elements
//! y_{st} in e_{j_t} A e_{i_s}, each component acting by x -> x * y_{st}.
//! Dualizing against the algebra transposes this element matrix and flips
//! the side — no elimination required — which keeps resolutions and their
//! duals cheap.

use crate::algebra::Algebra;
use crate::linalg::Matrix;
use crate::modrep::{projective_action, Module, ModuleMap, Side};

/// A tagged finite direct sum of indecomposable projectives, together with
/// its concrete module realization on the canonical bases.
#[derive(Clone)]
pub struct ProjSum {
    acting: Algebra,
    side: Side,
    tags: Vec<usize>,
    offsets: Vec<usize>,
    module: Module,
}

impl ProjSum {
    pub fn new(acting: &Algebra, side: Side, tags: Vec<usize>) -> ProjSum {
        let field = acting.field();
        let mut offsets = Vec::with_capacity(tags.len());
        let mut parts: Vec<Module> = Vec::new();
        let mut offset = 0;
        for &i in &tags {
            offsets.push(offset);
            offset += acting.proj_basis(i).cols();
            let (action, _) = projective_action(acting, i);
            parts.push(Module::unchecked(acting.clone(), side, action, format!("P{}", i + 1)));
        }
        let module = if parts.is_empty() {
            let action = (0..acting.dim()).map(|_| Matrix::zero(field, 0, 0)).collect();
            Module::unchecked(acting.clone(), side, action, "0".into())
        } else {
            Module::direct_sum(&parts)
        };
        ProjSum { acting: acting.clone(), side, tags, offsets, module }
    }

    pub fn acting(&self) -> &Algebra {
        &self.acting
    }

    pub fn side(&self) -> Side {
        self.side
    }

    pub fn tags(&self) -> &[usize] {
        &self.tags
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    pub fn num_summands(&self) -> usize {
        self.tags.len()
    }

    pub fn offset(&self, s: usize) -> usize {
        self.offsets[s]
    }

    /// Canonical basis in A of the summand's projective A e_{tag}.
    pub fn summand_basis(&self, s: usize) -> &Matrix {
        self.acting.proj_basis(self.tags[s])
    }

    /// Multiplicity of each indecomposable projective.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut m = vec![0; self.acting.num_idempotents()];
        for &t in &self.tags {
            m[t] += 1;
        }
        m
    }

    /// The dual sum over the opposite algebra: same tags, other side.
    pub fn dual(&self) -> ProjSum {
        ProjSum::new(&self.acting.opposite(), self.side.flip(), self.tags.clone())
    }

    /// Extracts the component of a concrete vector in summand `s` as an
    /// element of the algebra (a coefficient column).
    pub fn component_element(&self, v: &Matrix, s: usize) -> Matrix {
        let u = self.summand_basis(s);
        let block = Matrix::from_fn(self.acting.field(), u.cols(), 1, |r, _| {
            v.get(self.offsets[s] + r, 0)
        });
        u.matmul(&block)
    }

    /// The concrete coordinate vector of summand t's generator (the
    /// idempotent of its tag).
    pub fn generator_vector(&self, t: usize) -> Matrix {
        let field = self.acting.field();
        let (_, gen) = projective_action(&self.acting, self.tags[t]);
        let mut v = Matrix::zero(field, self.dim(), 1);
        for r in 0..gen.rows() {
            let val = gen.get(r, 0);
            if !val.is_zero() {
                v.set(self.offsets[t] + r, 0, val);
            }
        }
        v
    }

    /// Pairing matrices identifying the dual sum with Hom(P, A): basis
    /// vector (s, l) of the dual corresponds to the map supported on
    /// summand s sending x to x * z_{s,l}.
    pub fn dual_pairing(&self) -> Vec<Matrix> {
        let field = self.acting.field();
        let d = self.acting.dim();
        let op = self.acting.opposite();
        let mut out = Vec::new();
        for (s, &i) in self.tags.iter().enumerate() {
            let v = op.proj_basis(i);
            for l in 0..v.cols() {
                let z = v.column(l);
                let rz = self.acting.right_mult_matrix(&z);
                let u = self.summand_basis(s);
                let block = rz.matmul(u);
                let mut g = Matrix::zero(field, d, self.dim());
                for c in 0..u.cols() {
                    for r in 0..d {
                        let val = block.get(r, c);
                        if !val.is_zero() {
                            g.set(r, self.offsets[s] + c, val);
                        }
                    }
                }
                out.push(g);
            }
        }
        out
    }
}

impl std::fmt::Debug for ProjSum {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProjSum({:?}, dim {})", self.tags, self.dim())
    }
}

/// A map between projective sums in element form; `entries[s][t]` lies in
/// e_{j_t} A e_{i_s} where j tags the source and i the target.
#[derive(Clone)]
pub struct ProjMap {
    pub source: ProjSum,
    pub target: ProjSum,
    entries: Vec<Vec<Matrix>>,
}

impl ProjMap {
    pub fn new(source: ProjSum, target: ProjSum, entries: Vec<Vec<Matrix>>) -> ProjMap {
        debug_assert_eq!(entries.len(), target.num_summands());
        debug_assert!(entries.iter().all(|row| row.len() == source.num_summands()));
        #[cfg(debug_assertions)]
        {
            let acting = source.acting();
            for (s, row) in entries.iter().enumerate() {
                for (t, y) in row.iter().enumerate() {
                    let ej = acting.idempotent(source.tags()[t]);
                    let ei = acting.idempotent(target.tags()[s]);
                    let framed = acting.mult(&acting.mult(ej, y), ei);
                    debug_assert_eq!(&framed, y, "entry ({s}, {t}) not framed by idempotents");
                }
            }
        }
        ProjMap { source, target, entries }
    }

    pub fn zero(source: ProjSum, target: ProjSum) -> ProjMap {
        let field = source.acting().field();
        let d = source.acting().dim();
        let entries = (0..target.num_summands())
            .map(|_| (0..source.num_summands()).map(|_| Matrix::zero(field, d, 1)).collect())
            .collect();
        ProjMap { source, target, entries }
    }

    pub fn entry(&self, s: usize, t: usize) -> &Matrix {
        &self.entries[s][t]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|row| row.iter().all(Matrix::is_zero))
    }

    /// Recovers the element form of a concrete matrix that represents a
    /// module map between the two sums: the entry (s, t) is the summand-s
    /// component of the image of summand t's generator.
    pub fn from_concrete(source: &ProjSum, target: &ProjSum, matrix: &Matrix) -> ProjMap {
        assert_eq!(matrix.rows(), target.dim());
        assert_eq!(matrix.cols(), source.dim());
        let entries = (0..target.num_summands())
            .map(|s| {
                (0..source.num_summands())
                    .map(|t| {
                        let image = matrix.matmul(&source.generator_vector(t));
                        target.component_element(&image, s)
                    })
                    .collect()
            })
            .collect();
        ProjMap::new(source.clone(), target.clone(), entries)
    }

    /// The dual map against the algebra: transposed element matrix over
    /// the opposite algebra, with source and target dualized.
    pub fn dual(&self) -> ProjMap {
        let dual_source = self.target.dual();
        let dual_target = self.source.dual();
        let entries = (0..self.source.num_summands())
            .map(|t| {
                (0..self.target.num_summands())
                    .map(|s| self.entries[s][t].clone())
                    .collect()
            })
            .collect();
        ProjMap { source: dual_source, target: dual_target, entries }
    }

    /// The matrix of the map on the canonical concrete bases.
    pub fn concrete_matrix(&self) -> Matrix {
        let acting = self.source.acting();
        let field = acting.field();
        let mut out = Matrix::zero(field, self.target.dim(), self.source.dim());
        for s in 0..self.target.num_summands() {
            let ui = self.target.summand_basis(s);
            for t in 0..self.source.num_summands() {
                let y = &self.entries[s][t];
                if y.is_zero() {
                    continue;
                }
                let uj = self.source.summand_basis(t);
                let moved = acting.right_mult_matrix(y).matmul(uj);
                let block = ui.solve(&moved).expect("x * y stays in A e_i");
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        let val = block.get(r, c);
                        if !val.is_zero() {
                            out.set(self.target.offset(s) + r, self.source.offset(t) + c, val);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn concrete(&self) -> ModuleMap {
        let map = ModuleMap::unchecked(
            self.source.module().clone(),
            self.target.module().clone(),
            self.concrete_matrix(),
        );
        debug_assert!(map.verify().is_ok());
        map
    }

    /// Composition self then `then` (element products reverse order).
    pub fn compose(&self, then: &ProjMap) -> ProjMap {
        let acting = self.source.acting();
        let field = acting.field();
        let d = acting.dim();
        let entries = (0..then.target.num_summands())
            .map(|u| {
                (0..self.source.num_summands())
                    .map(|t| {
                        let mut acc = Matrix::zero(field, d, 1);
                        for s in 0..self.target.num_summands() {
                            let y = &self.entries[s][t];
                            let z = &then.entries[u][s];
                            if !y.is_zero() && !z.is_zero() {
                                acc = acc.add(&acting.mult(y, z));
                            }
                        }
                        acc
                    })
                    .collect()
            })
            .collect();
        ProjMap { source: self.source.clone(), target: then.target.clone(), entries }
    }
}

impl std::fmt::Debug for ProjMap {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "ProjMap({:?} -> {:?})", self.source.tags(), self.target.tags())
    }
}
