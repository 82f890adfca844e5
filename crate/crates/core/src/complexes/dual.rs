//! Duals against the algebra: M* = Hom(M, A), the induced maps, and the
//! evaluation map M -> M**.
//!
//! A dual is carried around with its pairing: a basis of Hom(M, A) as
//! concrete matrices. All induced constructions (dual maps, evaluation)
//! are expressed by solving inside the span of the pairing, so duals
//! produced structurally (for projective sums) and duals produced by
//! solving hom equations compose interchangeably.

use super::proj::ProjSum;
use crate::linalg::Matrix;
use crate::modrep::{hom_basis, Module, ModuleMap};

/// A module dual M* together with the data tying it to its source.
pub struct DualModule {
    /// M* as a module on the other side.
    pub module: Module,
    /// pairing[l]: the l-th basis vector of M* as a map M -> A.
    pub pairing: Vec<Matrix>,
    /// The module being dualized.
    pub source: Module,
}

impl DualModule {
    pub fn dim(&self) -> usize {
        self.module.dim()
    }

    /// The element of M* with coordinates `coords`, as a map M -> A.
    pub fn realize(&self, coords: &Matrix) -> Matrix {
        let field = self.module.field();
        let d = self.source.acting().dim();
        let mut acc = Matrix::zero(field, d, self.source.dim());
        for (l, g) in self.pairing.iter().enumerate() {
            let c = coords.get(l, 0);
            if !c.is_zero() {
                acc = acc.add(&g.scale(&c));
            }
        }
        acc
    }

    /// Coordinates in M* of a map M -> A lying in the pairing span.
    pub fn coords_of(&self, map: &Matrix) -> Option<Matrix> {
        let flat = |m: &Matrix| {
            Matrix::from_fn(m.field(), m.rows() * m.cols(), 1, |r, _| {
                m.get(r / m.cols(), r % m.cols())
            })
        };
        if self.pairing.is_empty() {
            return if map.is_zero() {
                Some(Matrix::zero(self.module.field(), 0, 1))
            } else {
                None
            };
        }
        let cols: Vec<Matrix> = self.pairing.iter().map(&flat).collect();
        let span = Matrix::hstack(&cols.iter().collect::<Vec<_>>());
        span.solve(&flat(map))
    }
}

/// The dual of an arbitrary module, by solving for Hom(M, A).
pub fn a_dual(m: &Module) -> DualModule {
    let acting = m.acting();
    let regular = Module::regular(&m.base_algebra(), m.side()).rebase(acting);
    let homs = hom_basis(m, &regular);
    let pairing: Vec<Matrix> = homs.iter().map(|f| f.matrix.clone()).collect();
    let dual_acting = acting.opposite();
    let n = pairing.len();
    let field = acting.field();
    // Right action (g * a)(x) = g(x) a, i.e. compose with right
    // multiplication; expressed on the pairing basis this is a left
    // action of the opposite algebra.
    let mut flat_cols: Vec<Matrix> = Vec::with_capacity(n);
    let flat = |mat: &Matrix| {
        Matrix::from_fn(field, mat.rows() * mat.cols(), 1, |r, _| {
            mat.get(r / mat.cols(), r % mat.cols())
        })
    };
    for g in &pairing {
        flat_cols.push(flat(g));
    }
    let span = if n == 0 {
        Matrix::zero(field, acting.dim() * m.dim().max(1), 0)
    } else {
        Matrix::hstack(&flat_cols.iter().collect::<Vec<_>>())
    };
    let action: Vec<Matrix> = (0..acting.dim())
        .map(|b| {
            let rb = acting.right_table(b);
            let mut cols = Vec::with_capacity(n);
            for g in &pairing {
                let moved = rb.matmul(g);
                let coords = span.solve(&flat(&moved)).expect("dual closed under the action");
                cols.push(coords);
            }
            if n == 0 {
                Matrix::zero(field, 0, 0)
            } else {
                Matrix::hstack(&cols.iter().collect::<Vec<_>>())
            }
        })
        .collect();
    let module = Module::unchecked(
        dual_acting,
        m.side().flip(),
        action,
        format!("({})*", m.label()),
    );
    DualModule { module, pairing, source: m.clone() }
}

/// The structural dual of a projective sum as a `DualModule`, with the
/// canonical pairing; no equations are solved.
pub fn proj_dual(p: &ProjSum) -> DualModule {
    DualModule {
        module: p.dual().module().clone(),
        pairing: p.dual_pairing(),
        source: p.module().clone(),
    }
}

/// The dual of f: M -> N as a map N* -> M*, given duals of both ends.
pub fn dual_hom(f: &ModuleMap, dual_target: &DualModule, dual_source: &DualModule) -> ModuleMap {
    debug_assert_eq!(dual_target.source.dim(), f.target.dim());
    debug_assert_eq!(dual_source.source.dim(), f.source.dim());
    let field = f.matrix.field();
    let cols: Vec<Matrix> = (0..dual_target.dim())
        .map(|l| {
            let composed = dual_target.pairing[l].matmul(&f.matrix);
            dual_source
                .coords_of(&composed)
                .expect("composite lies in the dual")
        })
        .collect();
    let matrix = if cols.is_empty() {
        Matrix::zero(field, dual_source.dim(), 0)
    } else {
        Matrix::hstack(&cols.iter().collect::<Vec<_>>())
    };
    let map = ModuleMap::unchecked(dual_target.module.clone(), dual_source.module.clone(), matrix);
    debug_assert!(map.verify().is_ok());
    map
}

/// The evaluation map M -> M**: x goes to (g -> g(x)).
pub fn phi(m: &Module, dual: &DualModule, double: &DualModule) -> ModuleMap {
    debug_assert_eq!(dual.source.dim(), m.dim());
    debug_assert_eq!(double.source.dim(), dual.module.dim());
    let field = m.field();
    let d = m.acting().dim();
    let cols: Vec<Matrix> = (0..m.dim())
        .map(|j| {
            // Evaluation at the j-th basis vector of M, as a map M* -> A.
            let ev = Matrix::from_fn(field, d, dual.dim(), |r, l| dual.pairing[l].get(r, j));
            double.coords_of(&ev).expect("evaluation lies in the double dual")
        })
        .collect();
    let matrix = if cols.is_empty() {
        Matrix::zero(field, double.dim(), 0)
    } else {
        Matrix::hstack(&cols.iter().collect::<Vec<_>>())
    };
    let map = ModuleMap::unchecked(m.clone(), double.module.clone(), matrix);
    debug_assert!(map.verify().is_ok());
    map
}
