//! Minimal projective resolutions, extended lazily degree by degree.
//!
//! Each step covers the kernel of the previous map; covers are minimal,
//! so images land in radicals and the resolution is minimal by
//! construction. Syzygies are the literal kernels of the resolution maps,
//! with no summands removed.

use super::proj::{ProjMap, ProjSum};
use crate::linalg::Matrix;
use crate::modrep::{projective_cover, Module, ModuleMap};

pub struct Resolution {
    module: Module,
    augmentation: ModuleMap,
    terms: Vec<ProjSum>,
    maps: Vec<ProjMap>,
    /// Kernel basis of the last computed map, inside the last term.
    frontier: Matrix,
}

impl Resolution {
    /// Starts a resolution with the projective cover of M.
    pub fn new(m: &Module) -> Resolution {
        let cover = projective_cover(m);
        let tags: Vec<usize> = cover.summands.iter().map(|s| s.idempotent).collect();
        let p0 = ProjSum::new(m.acting(), m.side(), tags);
        let augmentation = ModuleMap::unchecked(p0.module().clone(), m.clone(), cover.map.matrix.clone());
        let frontier = augmentation.matrix.kernel_basis();
        Resolution { module: m.clone(), augmentation, terms: vec![p0], maps: Vec::new(), frontier }
    }

    pub fn module(&self) -> &Module {
        &self.module
    }

    /// The augmentation P_0 -> M.
    pub fn augmentation(&self) -> &ModuleMap {
        &self.augmentation
    }

    /// Extends until terms 0..=n exist (or the resolution has ended in
    /// zeros, which keeps extending trivially).
    pub fn ensure(&mut self, n: usize) {
        while self.terms.len() <= n {
            self.extend();
        }
    }

    fn extend(&mut self) {
        let last = self.terms.last().unwrap().clone();
        let kernel = self.frontier.clone();
        if kernel.cols() == 0 {
            let next = ProjSum::new(last.acting(), last.side(), Vec::new());
            let map = ProjMap::zero(next.clone(), last);
            self.frontier = Matrix::zero(next.acting().field(), 0, 0);
            self.terms.push(next);
            self.maps.push(map);
            return;
        }
        let (kmod, _) = last
            .module()
            .submodule(&kernel)
            .expect("kernel of a module map is invariant");
        let cover = projective_cover(&kmod);
        let tags: Vec<usize> = cover.summands.iter().map(|s| s.idempotent).collect();
        let next = ProjSum::new(last.acting(), last.side(), tags);
        // Generators of the kernel, written in the ambient term, give the
        // element entries of the new differential.
        let entries: Vec<Vec<Matrix>> = {
            let ambient_gens: Vec<Matrix> = cover
                .summands
                .iter()
                .map(|s| kernel.matmul(&s.generator_image))
                .collect();
            (0..last.num_summands())
                .map(|s| {
                    ambient_gens
                        .iter()
                        .map(|v| last.component_element(v, s))
                        .collect()
                })
                .collect()
        };
        let map = ProjMap::new(next.clone(), last, entries);
        let concrete = map.concrete_matrix();
        debug_assert_eq!(concrete.col_space_basis().cols(), kernel.cols(), "differential must hit the kernel");
        debug_assert!(kernel.spans(&concrete), "differential image inside the kernel");
        self.frontier = concrete.kernel_basis();
        self.terms.push(next);
        self.maps.push(map);
    }

    /// Number of terms computed so far.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn term(&self, k: usize) -> &ProjSum {
        &self.terms[k]
    }

    /// The differential f_k: P_k -> P_{k-1}, for k >= 1.
    pub fn map(&self, k: usize) -> &ProjMap {
        &self.maps[k - 1]
    }

    /// The k-th syzygy as a module: the kernel of the map leaving P_{k-1}
    /// (the augmentation for k = 1), taken as is.
    pub fn syzygy(&mut self, k: usize) -> Module {
        assert!(k >= 1, "syzygies start at k = 1");
        self.ensure(k - 1);
        let basis = if k == 1 {
            self.augmentation.matrix.kernel_basis()
        } else {
            self.map(k - 1).concrete_matrix().kernel_basis()
        };
        let ambient = self.terms[k - 1].module().clone();
        let (m, _) = ambient.submodule(&basis).expect("kernel is invariant");
        m.relabel(format!("syz{}({})", k, self.module.label()))
    }
}

/// The k-th syzygy of a module (k >= 1), from its minimal resolution.
pub fn syzygy(m: &Module, k: usize) -> Module {
    Resolution::new(m).syzygy(k)
}

/// Smallest k with a zero k-th syzygy, if at most `bound`; the zero module
/// counts as projective with dimension 0.
pub fn projective_dimension(m: &Module, bound: usize) -> Option<usize> {
    if m.dim() == 0 {
        return Some(0);
    }
    let mut res = Resolution::new(m);
    for k in 0..=bound {
        res.ensure(k);
        if res.term(k).dim() == 0 {
            return Some(k.saturating_sub(1));
        }
        if k >= 1 && res.map(k).concrete_matrix().kernel_basis().cols() == 0 {
            return Some(k);
        }
        if k == 0 && res.augmentation.matrix.kernel_basis().cols() == 0 {
            return Some(0);
        }
    }
    None
}
