//! Finite-dimensional modules over a verified algebra, with the exact
//! constructions the rest of the crate is built on: submodules, quotients,
//! kernels, images, radicals, socles, and homomorphism spaces.
//!
//! Every module is stored as a genuine left module over its *acting*
//! algebra. A right module over A is a left module over A^op, so `side`
//! records which convention the caller is thinking in while all algorithms
//! stay one-sided.

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use std::fmt;
use std::sync::Arc;

mod cover;
mod enumerate;
mod hom;
mod iso;

pub use cover::{is_injective, is_projective, is_self_injective, k_dual, projective_cover, reduce, Cover, TriState};
pub use enumerate::{enumerate_modules, EnumerateSpec};
pub use hom::{end_dim, hom_basis, hom_dim};
pub use iso::{is_isomorphic, IsoOpts, IsoOutcome};

/// Which side the original action lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize, serde::Deserialize)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
        }
    }
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// Cheap-clone handle to an immutable module.
#[derive(Clone)]
pub struct Module {
    data: Arc<ModuleData>,
}

struct ModuleData {
    acting: Algebra,
    side: Side,
    dim: usize,
    /// action[i] is the matrix of the i-th basis element of the acting
    /// algebra; action[i] * action[j] = action of b_i b_j in the acting
    /// algebra, i.e. an honest left representation.
    action: Vec<Matrix>,
    label: String,
}

impl Module {
    /// Validating constructor over the acting algebra: checks shapes, the
    /// unit law, and multiplicativity on every basis pair.
    pub fn new(acting: &Algebra, side: Side, action: Vec<Matrix>, label: String) -> Result<Module> {
        let d = acting.dim();
        if action.len() != d {
            return Err(Error::InvalidModule(format!(
                "expected {} action matrices, got {}",
                d,
                action.len()
            )));
        }
        let n = action.first().map_or(0, |m| m.rows());
        for m in &action {
            if m.rows() != n || m.cols() != n {
                return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
            }
            if m.field() != acting.field() {
                return Err(Error::FieldMismatch("module action over a different field".into()));
            }
        }
        let module = Module::unchecked(acting.clone(), side, action, label);
        if !module.action_of(acting.unit()).is_identity() {
            return Err(Error::InvalidModule("unit does not act as the identity".into()));
        }
        for i in 0..d {
            for j in 0..d {
                let lhs = module.action(i).matmul(module.action(j));
                let rhs = module.action_of(&acting.basis_product(i, j));
                if lhs != rhs {
                    return Err(Error::InvalidModule(format!(
                        "action is not multiplicative at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(module)
    }

    /// Constructor for the natural user-facing convention: `base` is the
    /// algebra itself, and for a right module the matrices satisfy
    /// rho(a) rho(b) = rho(ba). Internally a right module is stored as a
    /// left module over the opposite algebra with the same matrices.
    pub fn new_over(base: &Algebra, side: Side, action: Vec<Matrix>, label: String) -> Result<Module> {
        match side {
            Side::Left => Module::new(base, side, action, label),
            Side::Right => Module::new(&base.opposite(), side, action, label),
        }
    }

    pub(crate) fn unchecked(acting: Algebra, side: Side, action: Vec<Matrix>, label: String) -> Module {
        let dim = action.first().map_or(0, |m| m.rows());
        debug_assert!(action.len() == acting.dim());
        debug_assert!(action.iter().all(|m| m.rows() == dim && m.cols() == dim));
        Module {
            data: Arc::new(ModuleData { acting, side, dim, action, label }),
        }
    }

    /// The regular module on the requested side.
    pub fn regular(base: &Algebra, side: Side) -> Module {
        let d = base.dim();
        match side {
            Side::Left => {
                let action = (0..d).map(|i| base.left_table(i).clone()).collect();
                Module::unchecked(base.clone(), side, action, base.name().to_string())
            }
            Side::Right => {
                let acting = base.opposite();
                let action = (0..d).map(|i| acting.left_table(i).clone()).collect();
                Module::unchecked(acting, side, action, base.name().to_string())
            }
        }
    }

    /// The zero module.
    pub fn zero(base: &Algebra, side: Side) -> Module {
        let acting = match side {
            Side::Left => base.clone(),
            Side::Right => base.opposite(),
        };
        let action = (0..acting.dim()).map(|_| Matrix::zero(acting.field(), 0, 0)).collect();
        Module::unchecked(acting, side, action, "0".into())
    }

    /// The simple module at idempotent index `i` (0-based).
    pub fn simple(base: &Algebra, side: Side, i: usize) -> Module {
        let acting = match side {
            Side::Left => base.clone(),
            Side::Right => base.opposite(),
        };
        let field = acting.field();
        let e = acting.idempotent(i).clone();
        let frame = Matrix::hstack(&[&e, acting.radical_basis()]);
        let action = (0..acting.dim())
            .map(|b| {
                let v = acting.mult(&basis_column(field, acting.dim(), b), &e);
                let coeff = frame.solve(&v).expect("split basic quotient");
                Matrix::from_fn(field, 1, 1, |_, _| coeff.get(0, 0))
            })
            .collect();
        Module::unchecked(acting, side, action, format!("S{}", i + 1))
    }

    /// The indecomposable projective at idempotent index `i` (0-based):
    /// A e_i for left modules, e_i A for right modules.
    pub fn projective(base: &Algebra, side: Side, i: usize) -> Module {
        let acting = match side {
            Side::Left => base.clone(),
            Side::Right => base.opposite(),
        };
        let (action, _) = projective_action(&acting, i);
        Module::unchecked(acting, side, action, format!("P{}", i + 1))
    }

    /// The acting algebra: the base algebra for left modules, its opposite
    /// for right modules.
    pub fn acting(&self) -> &Algebra {
        &self.data.acting
    }

    /// The algebra the caller thinks of the module as being over.
    pub fn base_algebra(&self) -> Algebra {
        match self.data.side {
            Side::Left => self.data.acting.clone(),
            Side::Right => self.data.acting.opposite(),
        }
    }

    pub fn side(&self) -> Side {
        self.data.side
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn field(&self) -> FieldSpec {
        self.data.acting.field()
    }

    pub fn label(&self) -> &str {
        &self.data.label
    }

    pub fn relabel(&self, label: impl Into<String>) -> Module {
        Module {
            data: Arc::new(ModuleData {
                acting: self.data.acting.clone(),
                side: self.data.side,
                dim: self.data.dim,
                action: self.data.action.clone(),
                label: label.into(),
            }),
        }
    }

    pub fn action(&self, i: usize) -> &Matrix {
        &self.data.action[i]
    }

    pub fn actions(&self) -> &[Matrix] {
        &self.data.action
    }

    /// Action matrix of an arbitrary element, given by its coefficients.
    pub fn action_of(&self, v: &Matrix) -> Matrix {
        let mut acc = Matrix::zero(self.field(), self.dim(), self.dim());
        for i in 0..self.data.acting.dim() {
            let vi = v.get(i, 0);
            if !vi.is_zero() {
                acc = acc.add(&self.data.action[i].scale(&vi));
            }
        }
        acc
    }

    /// Swaps the acting-algebra handle for a structurally equal one, so
    /// modules produced through different `opposite()` chains compare and
    /// compose. Panics if the structures differ.
    pub fn rebase(&self, acting: &Algebra) -> Module {
        assert!(
            self.data.acting.same_structure(acting),
            "rebase requires a structurally identical algebra"
        );
        Module {
            data: Arc::new(ModuleData {
                acting: acting.clone(),
                side: self.data.side,
                dim: self.data.dim,
                action: self.data.action.clone(),
                label: self.data.label.clone(),
            }),
        }
    }

    /// Whether two modules live over structurally equal acting algebras on
    /// the same side — the precondition for maps between them.
    pub fn compatible_with(&self, other: &Module) -> bool {
        self.data.side == other.data.side && self.data.acting.same_structure(&other.data.acting)
    }

    /// Direct sum; all parts must be compatible.
    pub fn direct_sum(parts: &[Module]) -> Module {
        assert!(!parts.is_empty(), "direct sum needs at least one part");
        let first = &parts[0];
        for p in parts.iter().skip(1) {
            assert!(first.compatible_with(p), "direct sum of incompatible modules");
        }
        let field = first.field();
        let action = (0..first.acting().dim())
            .map(|i| {
                let blocks: Vec<&Matrix> = parts.iter().map(|p| p.action(i)).collect();
                Matrix::block_diag(field, &blocks)
            })
            .collect();
        let label = parts.iter().map(|p| p.label().to_string()).collect::<Vec<_>>().join(" + ");
        Module::unchecked(first.acting().clone(), first.side(), action, label)
    }

    /// The submodule spanned by `basis` columns (must be linearly
    /// independent and invariant) together with its inclusion.
    pub fn submodule(&self, basis: &Matrix) -> Result<(Module, ModuleMap)> {
        if basis.rows() != self.dim() {
            return Err(Error::InvalidModule("submodule basis has wrong height".into()));
        }
        if basis.rank() != basis.cols() {
            return Err(Error::InvalidModule("submodule basis is not independent".into()));
        }
        let mut action = Vec::with_capacity(self.acting().dim());
        for i in 0..self.acting().dim() {
            let moved = self.action(i).matmul(basis);
            match basis.solve(&moved) {
                Some(restricted) => action.push(restricted),
                None => {
                    return Err(Error::InvalidModule(format!(
                        "subspace is not invariant under basis element {i}"
                    )))
                }
            }
        }
        let sub = Module::unchecked(
            self.acting().clone(),
            self.side(),
            action,
            format!("sub({})", self.label()),
        );
        let incl = ModuleMap::unchecked(sub.clone(), self.clone(), basis.clone());
        Ok((sub, incl))
    }

    /// The quotient by the span of `basis` (an invariant subspace) together
    /// with the projection.
    pub fn quotient_by(&self, basis: &Matrix) -> Result<(Module, ModuleMap)> {
        let u = basis.col_space_basis();
        let k = u.cols();
        let n = self.dim();
        // Complete u to a basis of the whole space by standard vectors at
        // the non-pivot coordinates.
        let (_, pivots) = u.transpose().rref();
        let mut extension = Vec::new();
        for r in 0..n {
            if !pivots.contains(&r) {
                extension.push(basis_column(self.field(), n, r));
            }
        }
        let mut frame_parts: Vec<&Matrix> = vec![&u];
        frame_parts.extend(extension.iter());
        let c = Matrix::hstack(&frame_parts);
        let c_inv = match c.inverse() {
            Some(m) => m,
            None => return Err(Error::InvalidModule("quotient subspace completion failed".into())),
        };
        let mut action = Vec::with_capacity(self.acting().dim());
        for i in 0..self.acting().dim() {
            let conj = c_inv.matmul(&self.action(i).matmul(&c));
            // Invariance puts the lower-left block at zero; the quotient
            // action is the lower-right block.
            for rr in k..n {
                for cc in 0..k {
                    if !conj.get(rr, cc).is_zero() {
                        return Err(Error::InvalidModule(format!(
                            "subspace is not invariant under basis element {i}"
                        )));
                    }
                }
            }
            action.push(Matrix::from_fn(self.field(), n - k, n - k, |rr, cc| {
                conj.get(k + rr, k + cc)
            }));
        }
        let quo = Module::unchecked(
            self.acting().clone(),
            self.side(),
            action,
            format!("quo({})", self.label()),
        );
        let proj = Matrix::from_fn(self.field(), n - k, n, |rr, cc| c_inv.get(k + rr, cc));
        let map = ModuleMap::unchecked(self.clone(), quo.clone(), proj);
        Ok((quo, map))
    }

    /// Canonical basis of the radical J*M.
    pub fn radical_basis(&self) -> Matrix {
        let jb = self.acting().radical_basis();
        if jb.cols() == 0 || self.dim() == 0 {
            return Matrix::zero(self.field(), self.dim(), 0);
        }
        let parts: Vec<Matrix> = (0..jb.cols()).map(|c| self.action_of(&jb.column(c))).collect();
        Matrix::hstack(&parts.iter().collect::<Vec<_>>()).col_space_basis()
    }

    /// The radical submodule with its inclusion.
    pub fn radical(&self) -> (Module, ModuleMap) {
        let basis = self.radical_basis();
        let (m, f) = self.submodule(&basis).expect("radical is invariant");
        (m.relabel(format!("rad({})", self.label())), f)
    }

    /// The top M / JM with its projection.
    pub fn top(&self) -> (Module, ModuleMap) {
        let basis = self.radical_basis();
        let (m, f) = self.quotient_by(&basis).expect("radical is invariant");
        (m.relabel(format!("top({})", self.label())), f)
    }

    /// Canonical basis of the socle, the largest subspace killed by J.
    pub fn socle_basis(&self) -> Matrix {
        let jb = self.acting().radical_basis();
        if jb.cols() == 0 {
            return Matrix::identity(self.field(), self.dim());
        }
        let parts: Vec<Matrix> = (0..jb.cols()).map(|c| self.action_of(&jb.column(c))).collect();
        Matrix::vstack(&parts.iter().collect::<Vec<_>>()).kernel_basis()
    }

    /// The socle submodule with its inclusion.
    pub fn socle(&self) -> (Module, ModuleMap) {
        let basis = self.socle_basis();
        let (m, f) = self.submodule(&basis).expect("socle is invariant");
        (m.relabel(format!("soc({})", self.label())), f)
    }

    /// Dimensions of M, JM, J^2 M, ... down to zero.
    pub fn radical_series_dims(&self) -> Vec<usize> {
        let mut dims = vec![self.dim()];
        let mut current = self.clone();
        while current.dim() > 0 {
            let basis = current.radical_basis();
            if basis.cols() == current.dim() {
                // JM = M would contradict nilpotency of J.
                unreachable!("radical series must shrink");
            }
            let (next, _) = current.submodule(&basis).expect("radical invariant");
            dims.push(next.dim());
            if next.dim() == 0 {
                break;
            }
            current = next;
        }
        if *dims.last().unwrap() != 0 {
            dims.push(0);
        }
        dims
    }

    /// (dim top M, dim JM), defined only when J^2 M = 0.
    pub fn dimension_vector(&self) -> Result<(usize, usize)> {
        let rad = self.radical_basis();
        let (radm, _) = self.submodule(&rad).expect("radical invariant");
        if radm.radical_basis().cols() != 0 {
            return Err(Error::Precondition(
                "dimension vector needs J^2 M = 0".into(),
            ));
        }
        Ok((self.dim() - rad.cols(), rad.cols()))
    }

    /// Canonical basis of e_i * M inside M.
    pub fn idempotent_part(&self, i: usize) -> Matrix {
        self.action_of(self.acting().idempotent(i)).col_space_basis()
    }

    /// Multiplicity vector of the simples in the top.
    pub fn top_multiplicities(&self) -> Vec<usize> {
        let (t, _) = self.top();
        (0..self.acting().num_idempotents())
            .map(|i| t.idempotent_part(i).cols())
            .collect()
    }
}

impl PartialEq for Module {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.data, &other.data)
            || (self.data.side == other.data.side
                && self.data.dim == other.data.dim
                && self.data.acting.same_structure(&other.data.acting)
                && self.data.action == other.data.action)
    }
}

impl fmt::Debug for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Module({}, dim {}, {} over {})",
            self.label(),
            self.dim(),
            self.side(),
            self.acting().name()
        )
    }
}

/// A homomorphism of modules, stored as its matrix on the chosen bases.
#[derive(Clone)]
pub struct ModuleMap {
    pub source: Module,
    pub target: Module,
    pub matrix: Matrix,
}

impl ModuleMap {
    /// Validating constructor: checks shapes and the intertwining law on
    /// every basis element of the acting algebra.
    pub fn new(source: Module, target: Module, matrix: Matrix) -> Result<ModuleMap> {
        if !source.compatible_with(&target) {
            return Err(Error::AlgebraMismatch("map between incompatible modules".into()));
        }
        if matrix.rows() != target.dim() || matrix.cols() != source.dim() {
            return Err(Error::InvalidModule("map matrix has wrong shape".into()));
        }
        let map = ModuleMap::unchecked(source, target, matrix);
        map.verify()?;
        Ok(map)
    }

    pub(crate) fn unchecked(source: Module, target: Module, matrix: Matrix) -> ModuleMap {
        debug_assert_eq!(matrix.rows(), target.dim());
        debug_assert_eq!(matrix.cols(), source.dim());
        ModuleMap { source, target, matrix }
    }

    /// Re-checks the intertwining law; cheap enough to call in tests.
    pub fn verify(&self) -> Result<()> {
        for i in 0..self.source.acting().dim() {
            let lhs = self.matrix.matmul(self.source.action(i));
            let rhs = self.target.action(i).matmul(&self.matrix);
            if lhs != rhs {
                return Err(Error::InvalidModule(format!(
                    "map does not intertwine basis element {i}"
                )));
            }
        }
        Ok(())
    }

    pub fn compose(&self, then: &ModuleMap) -> ModuleMap {
        assert_eq!(self.target.dim(), then.source.dim(), "composition shape mismatch");
        ModuleMap::unchecked(
            self.source.clone(),
            then.target.clone(),
            then.matrix.matmul(&self.matrix),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_injective(&self) -> bool {
        self.matrix.rank() == self.source.dim()
    }

    pub fn is_surjective(&self) -> bool {
        self.matrix.rank() == self.target.dim()
    }

    pub fn is_bijective(&self) -> bool {
        self.source.dim() == self.target.dim() && self.is_injective()
    }

    /// Kernel as a module with its inclusion into the source.
    pub fn kernel(&self) -> (Module, ModuleMap) {
        let basis = self.matrix.kernel_basis();
        let (m, f) = self.source.submodule(&basis).expect("kernel is invariant");
        (m.relabel(format!("ker({})", short(&self.source, &self.target))), f)
    }

    /// Image as a submodule of the target with its inclusion.
    pub fn image(&self) -> (Module, ModuleMap) {
        let basis = self.matrix.col_space_basis();
        let (m, f) = self.target.submodule(&basis).expect("image is invariant");
        (m.relabel(format!("im({})", short(&self.source, &self.target))), f)
    }

    /// Cokernel as a quotient of the target with its projection.
    pub fn cokernel(&self) -> (Module, ModuleMap) {
        let basis = self.matrix.col_space_basis();
        let (m, f) = self.target.quotient_by(&basis).expect("image is invariant");
        (m.relabel(format!("cok({})", short(&self.source, &self.target))), f)
    }
}

impl fmt::Debug for ModuleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "ModuleMap({} -> {}, rank {})",
            self.source.label(),
            self.target.label(),
            self.matrix.rank()
        )
    }
}

fn short(s: &Module, t: &Module) -> String {
    format!("{} -> {}", s.label(), t.label())
}

pub(crate) fn basis_column(field: FieldSpec, dim: usize, k: usize) -> Matrix {
    Matrix::from_fn(field, dim, 1, |r, _| {
        if r == k {
            Scalar::one(field)
        } else {
            Scalar::zero(field)
        }
    })
}

/// Action matrices of A e_i on the canonical basis, plus the coordinates of
/// the generator e_i in that basis.
pub(crate) fn projective_action(acting: &Algebra, i: usize) -> (Vec<Matrix>, Matrix) {
    let u = acting.proj_basis(i);
    let action = (0..acting.dim())
        .map(|b| {
            let moved = acting.left_table(b).matmul(u);
            u.solve(&moved).expect("A e_i is a left submodule")
        })
        .collect();
    let gen = u.solve(acting.idempotent(i)).expect("e_i lies in A e_i");
    (action, gen)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    #[test]
    fn validating_constructor_accepts_the_regular_tables_and_rejects_noise() {
        let a = preset_algebra(f2(), "kxy", None).unwrap();
        let action: Vec<Matrix> = (0..a.dim()).map(|i| a.left_table(i).clone()).collect();
        Module::new(&a, Side::Left, action.clone(), "reg".into()).unwrap();
        let mut bad = action;
        bad[1] = Matrix::identity(f2(), 4);
        assert!(Module::new(&a, Side::Left, bad, "bad".into()).is_err());
    }

    #[test]
    fn right_regular_module_acts_through_the_opposite_algebra() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let reg = Module::regular(&a, Side::Right);
        assert_eq!(reg.side(), Side::Right);
        assert!(reg.acting().same_structure(&a.opposite()));
        // The idempotent decomposition of a right module is M = ⊕ M e_i;
        // here A e_1 is two-dimensional and A e_2 is one-dimensional.
        assert_eq!(reg.idempotent_part(0).cols(), 2);
        assert_eq!(reg.idempotent_part(1).cols(), 1);
    }

    #[test]
    fn projectives_and_simples_have_the_expected_dimensions() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        assert_eq!(Module::projective(&a, Side::Left, 0).dim(), 2);
        assert_eq!(Module::projective(&a, Side::Left, 1).dim(), 1);
        assert_eq!(Module::projective(&a, Side::Right, 0).dim(), 1);
        assert_eq!(Module::projective(&a, Side::Right, 1).dim(), 2);
        assert_eq!(Module::simple(&a, Side::Left, 0).dim(), 1);
        // The simple at vertex 1 sees only e_1 acting as the identity.
        let s1 = Module::simple(&a, Side::Left, 0);
        assert!(s1.action(0).is_identity());
        assert!(s1.action(1).is_zero());
        assert!(s1.action(2).is_zero());
    }

    #[test]
    fn radical_top_socle_of_the_regular_module() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        let (rad, incl) = reg.radical();
        assert_eq!(rad.dim(), 2);
        incl.verify().unwrap();
        let (top, proj) = reg.top();
        assert_eq!(top.dim(), 1);
        proj.verify().unwrap();
        assert_eq!(reg.socle_basis().cols(), 1);
        assert_eq!(reg.radical_series_dims(), vec![3, 2, 1, 0]);
    }

    #[test]
    fn quotient_and_submodule_round_trip_through_a_map() {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        let (rad, incl) = reg.radical();
        let (cok, pi) = incl.cokernel();
        assert_eq!(cok.dim(), 1);
        assert!(pi.is_surjective());
        let (ker, ker_incl) = pi.kernel();
        assert_eq!(ker.dim(), rad.dim());
        ker_incl.verify().unwrap();
        // The kernel of the projection is exactly the radical subspace.
        assert!(ker_incl.matrix.col_space_basis().spans(&reg.radical_basis()));
    }

    #[test]
    fn dimension_vector_requires_radical_square_zero_action() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        assert!(reg.dimension_vector().is_err());
        let (rad, _) = reg.radical();
        assert_eq!(rad.dimension_vector().unwrap(), (1, 1));
        let s = Module::simple(&a, Side::Left, 0);
        assert_eq!(s.dimension_vector().unwrap(), (1, 0));
    }

    #[test]
    fn direct_sum_concatenates_labels_and_dimensions() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let p1 = Module::projective(&a, Side::Left, 0);
        let s2 = Module::simple(&a, Side::Left, 1);
        let sum = Module::direct_sum(&[p1, s2]);
        assert_eq!(sum.dim(), 3);
        assert_eq!(sum.top_multiplicities(), vec![1, 1]);
    }
}
