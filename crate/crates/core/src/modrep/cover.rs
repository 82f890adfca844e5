//! Projective covers, vector-space duals, and removal of projective
//! direct summands.

use super::hom::hom_basis;
use super::iso::{is_isomorphic, IsoOpts, IsoOutcome};
use super::{projective_action, Module, ModuleMap, Side};
use crate::algebra::Algebra;
use crate::linalg::Matrix;

/// Three-valued answer for questions settled by an isomorphism search.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum TriState {
    True,
    False,
    Unknown,
}

/// A projective cover P -> M.
pub struct Cover {
    /// Surjection from the cover; its kernel lies in rad P.
    pub map: ModuleMap,
    /// Multiplicity of each indecomposable projective in the cover.
    pub multiplicities: Vec<usize>,
    /// For each summand in order: its idempotent index, the image in M of
    /// its generator, and its starting column inside the cover.
    pub summands: Vec<CoverSummand>,
}

pub struct CoverSummand {
    pub idempotent: usize,
    pub generator_image: Matrix,
    pub offset: usize,
}

/// Builds the projective cover of M: one copy of P(i) for each simple
/// summand of top M, mapped by lifting top generators.
pub fn projective_cover(m: &Module) -> Cover {
    let acting = m.acting().clone();
    let field = m.field();
    let r = acting.num_idempotents();
    let (top, pi) = m.top();
    let mut multiplicities = vec![0usize; r];
    let mut parts: Vec<Module> = Vec::new();
    let mut summands: Vec<CoverSummand> = Vec::new();
    let mut blocks: Vec<Matrix> = Vec::new();
    let mut offset = 0usize;
    for (i, mult) in multiplicities.iter_mut().enumerate() {
        let w = top.idempotent_part(i);
        *mult = w.cols();
        if w.cols() == 0 {
            continue;
        }
        let (action, _) = projective_action(&acting, i);
        let proto = Module::unchecked(acting.clone(), m.side(), action, format!("P{}", i + 1));
        let u = acting.proj_basis(i);
        for c in 0..w.cols() {
            // Lift the top generator into e_i * M.
            let v0 = pi.matrix.solve(&w.column(c)).expect("top projection is onto");
            let v = m.action_of(acting.idempotent(i)).matmul(&v0);
            let cols: Vec<Matrix> = (0..u.cols())
                .map(|j| m.action_of(&u.column(j)).matmul(&v))
                .collect();
            blocks.push(Matrix::hstack(&cols.iter().collect::<Vec<_>>()));
            summands.push(CoverSummand { idempotent: i, generator_image: v, offset });
            offset += u.cols();
            parts.push(proto.clone());
        }
    }
    let (cover_module, matrix) = if parts.is_empty() {
        (zero_like(m), Matrix::zero(field, m.dim(), 0))
    } else {
        (
            Module::direct_sum(&parts).relabel(format!("P({})", m.label())),
            Matrix::hstack(&blocks.iter().collect::<Vec<_>>()),
        )
    };
    let map = ModuleMap::unchecked(cover_module, m.clone(), matrix);
    debug_assert!(map.verify().is_ok());
    debug_assert!(map.is_surjective());
    debug_assert!(
        map.source.radical_basis().spans(&map.matrix.kernel_basis()),
        "cover kernel must lie in the radical"
    );
    Cover { map, multiplicities, summands }
}

pub(crate) fn zero_like(m: &Module) -> Module {
    let acting = m.acting().clone();
    let field = m.field();
    let action = (0..acting.dim()).map(|_| Matrix::zero(field, 0, 0)).collect();
    Module::unchecked(acting, m.side(), action, "0".into())
}

/// A module is projective iff its cover is an isomorphism.
pub fn is_projective(m: &Module) -> bool {
    projective_cover(m).map.source.dim() == m.dim()
}

/// The vector-space dual with the transposed action: a module on the
/// other side over the same base algebra.
pub fn k_dual(m: &Module) -> Module {
    let acting = m.acting().opposite();
    let action = m.actions().iter().map(|a| a.transpose()).collect();
    Module::unchecked(acting, m.side().flip(), action, format!("D({})", m.label()))
}

/// A module is injective iff its vector-space dual is projective.
pub fn is_injective(m: &Module) -> bool {
    is_projective(&k_dual(m))
}

/// Whether the regular module is injective over itself, i.e. the algebra
/// is self-injective: compares A with the dual of the regular right module.
pub fn is_self_injective(a: &Algebra, opts: &IsoOpts) -> TriState {
    let left = Module::regular(a, Side::Left);
    let dual_right = k_dual(&Module::regular(a, Side::Right)).rebase(a);
    match is_isomorphic(&left, &dual_right, opts) {
        IsoOutcome::Iso(_) => TriState::True,
        IsoOutcome::NotIso(_) => TriState::False,
        IsoOutcome::Inconclusive => TriState::Unknown,
    }
}

/// Splits off projective direct summands until none remain, returning the
/// projective-free part and the number of copies of each P(i) removed.
///
/// Deterministic: P(i) is a summand iff some composite g∘f with f in a
/// basis of Hom(P(i), M) and g in a basis of Hom(M, P(i)) is invertible.
/// End(P(i)) is local, so if every such composite is a non-unit, every
/// combination lies in the radical and no copy splits off.
pub fn reduce(m: &Module) -> (Module, Vec<usize>) {
    let acting = m.acting().clone();
    let r = acting.num_idempotents();
    let mut stripped = vec![0usize; r];
    let mut current = m.clone();
    let protos: Vec<Module> = (0..r)
        .map(|i| {
            let (action, _) = projective_action(&acting, i);
            Module::unchecked(acting.clone(), m.side(), action, format!("P{}", i + 1))
        })
        .collect();
    'strip: loop {
        for (i, p) in protos.iter().enumerate() {
            if current.dim() < p.dim() {
                continue;
            }
            let intos = hom_basis(p, &current);
            if intos.is_empty() {
                continue;
            }
            let outs = hom_basis(&current, p);
            for f in &intos {
                for g in &outs {
                    let u = g.matrix.matmul(&f.matrix);
                    if let Some(u_inv) = u.inverse() {
                        let proj = f.matrix.matmul(&u_inv).matmul(&g.matrix);
                        let complement = proj
                            .sub(&Matrix::identity(current.field(), current.dim()))
                            .col_space_basis();
                        let (next, _) = current
                            .submodule(&complement)
                            .expect("kernel of an idempotent endomorphism is invariant");
                        stripped[i] += 1;
                        current = next;
                        continue 'strip;
                    }
                }
            }
        }
        break;
    }
    (current.relabel(format!("reduced({})", m.label())), stripped)
}
