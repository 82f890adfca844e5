//! The transpose against the algebra, and cosyzygies of torsionless
//! modules.
//!
//! From a minimal presentation P_1 -> P_0 -> M -> 0, the transpose is the
//! cokernel of the dualized presentation map P_0* -> P_1*. The cosyzygy
//! embeds M into the dual of a cover of M* through evaluation; it exists
//! exactly when evaluation is injective.

use super::dual::{a_dual, dual_hom, phi, proj_dual, DualModule};
use super::proj::ProjSum;
use super::resolution::Resolution;
use crate::error::{Error, Result};
use crate::modrep::{projective_cover, Module, ModuleMap};

/// Tr M: the cokernel of the dualized minimal presentation map.
pub fn transpose(m: &Module) -> Module {
    let mut res = Resolution::new(m);
    res.ensure(1);
    let dual_presentation = res.map(1).dual();
    let (cok, _) = dual_presentation.concrete().cokernel();
    cok.relabel(format!("Tr({})", m.label()))
}

/// The canonical evaluation M -> M** with its surrounding duals.
pub struct Evaluation {
    pub dual: DualModule,
    pub double: DualModule,
    pub map: ModuleMap,
}

/// Computes M*, M**, and the evaluation map between them.
pub fn evaluation(m: &Module) -> Evaluation {
    let dual = a_dual(m);
    let double = a_dual(&dual.module);
    let map = phi(m, &dual, &double);
    Evaluation { dual, double, map }
}

/// The embedding of a torsionless module into the dual of a projective
/// cover of its dual, together with that ambient dual sum.
pub struct CosyzygyEmbedding {
    /// The cover Q -> M* that was dualized.
    pub cover_sum: ProjSum,
    /// The embedding M -> Q*.
    pub embedding: ModuleMap,
    /// The cosyzygy, i.e. the cokernel of the embedding.
    pub cosyzygy: Module,
}

impl std::fmt::Debug for CosyzygyEmbedding {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "CosyzygyEmbedding({} -> {} with cokernel {})",
            self.embedding.source.dim(),
            self.embedding.target.dim(),
            self.cosyzygy.dim()
        )
    }
}

/// Embeds M into Q_0* and returns the cokernel; fails with the kernel
/// dimension when evaluation is not injective.
pub fn cosyzygy_embedding(m: &Module) -> Result<CosyzygyEmbedding> {
    let ev = evaluation(m);
    let cover = projective_cover(&ev.dual.module);
    let tags: Vec<usize> = cover.summands.iter().map(|s| s.idempotent).collect();
    let q = ProjSum::new(ev.dual.module.acting(), ev.dual.module.side(), tags);
    let q_map = ModuleMap::unchecked(
        q.module().clone(),
        ev.dual.module.clone(),
        cover.map.matrix.clone(),
    );
    // Dualizing the surjection q: Q -> M* gives an injection M** -> Q*.
    let q_dual_data = proj_dual(&q);
    let q_star = dual_hom(&q_map, &ev.double, &q_dual_data);
    let embedding = ev.map.compose(&q_star);
    let kernel = embedding.matrix.kernel_basis();
    if kernel.cols() > 0 {
        return Err(Error::NotTorsionless { ker_dim: kernel.cols() });
    }
    let (cosyzygy, _) = embedding.cokernel();
    Ok(CosyzygyEmbedding {
        cover_sum: q,
        embedding,
        cosyzygy: cosyzygy.relabel(format!("cosyz({})", m.label())),
    })
}

/// The k-th cosyzygy, iterating the embedding construction.
pub fn cosyzygy(m: &Module, k: usize) -> Result<Module> {
    assert!(k >= 1, "cosyzygies start at k = 1");
    let mut current = m.clone();
    for _ in 0..k {
        current = cosyzygy_embedding(&current)?.cosyzygy;
    }
    Ok(current)
}
