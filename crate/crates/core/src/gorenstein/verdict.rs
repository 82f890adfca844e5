//! Bounded pass/fail verdicts for the homological properties a module can
//! have relative to the regular bimodule: vanishing of Ext against the
//! regular module on either side, torsionless/reflexive behaviour of the
//! evaluation map, and the combination of all three.
//!
//! Every check that involves Ext groups is performed up to a finite degree
//! `bound`, so a `Holds` verdict always means "holds up to the recorded
//! bound" while a `Fails` verdict is unconditional and carries a concrete
//! witness.

use serde::Serialize;

use crate::complexes::{a_dual, evaluation, ext_regular_dims, transpose};
use crate::modrep::Module;

/// Outcome of a bounded check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum VerdictStatus {
    /// No violation found up to the bound.
    Holds,
    /// A concrete violation was found; see the witness.
    Fails,
    /// The method could not decide within its configured effort.
    Inconclusive,
}

/// Concrete certificate explaining a failed verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Witness {
    /// Ext^degree(M, A) is nonzero with the given dimension.
    Ext { degree: usize, dim: usize },
    /// Ext^degree(M*, A) is nonzero with the given dimension.
    DualExt { degree: usize, dim: usize },
    /// The evaluation map M -> M** has the given kernel and cokernel sizes.
    NotReflexive { ker_dim: usize, cok_dim: usize },
    /// The dual module is nonzero where it was required to vanish.
    DualNonzero { dim: usize },
}

/// A verdict together with the Ext-degree bound it was computed at.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundedVerdict {
    pub status: VerdictStatus,
    pub bound: usize,
    pub witness: Option<Witness>,
}

impl BoundedVerdict {
    pub fn holds(&self) -> bool {
        self.status == VerdictStatus::Holds
    }

    pub(crate) fn pass(bound: usize) -> BoundedVerdict {
        BoundedVerdict { status: VerdictStatus::Holds, bound, witness: None }
    }

    pub(crate) fn fail(bound: usize, witness: Witness) -> BoundedVerdict {
        BoundedVerdict { status: VerdictStatus::Fails, bound, witness: Some(witness) }
    }
}

/// Checks that Ext^i(M, A) = 0 for all 1 <= i <= bound, where A is the
/// regular module on the same side as M.
pub fn is_sgp(m: &Module, bound: usize) -> BoundedVerdict {
    assert!(bound >= 1, "vanishing checks need a bound of at least 1");
    let dims = ext_regular_dims(m, bound, true);
    for (k, d) in dims.iter().enumerate() {
        if *d > 0 {
            return BoundedVerdict::fail(bound, Witness::Ext { degree: k + 1, dim: *d });
        }
    }
    BoundedVerdict::pass(bound)
}

/// Checks the same vanishing for the transpose of M, i.e. that M stays
/// torsionless under every syzygy-shift up to the bound.
pub fn is_inf_torsionfree(m: &Module, bound: usize) -> BoundedVerdict {
    is_sgp(&transpose(m), bound)
}

/// True when the evaluation map M -> M** is injective.
pub fn is_torsionless(m: &Module) -> bool {
    evaluation(m).map.is_injective()
}

/// True when the evaluation map M -> M** is bijective.
pub fn is_reflexive(m: &Module) -> bool {
    evaluation(m).map.is_bijective()
}

/// Checks all three Gorenstein-projectivity conditions up to the bound:
/// Ext^i(M, A) = 0, Ext^i(M*, A) = 0, and M reflexive.
pub fn is_gp(m: &Module, bound: usize) -> BoundedVerdict {
    let own = is_sgp(m, bound);
    if !own.holds() {
        return own;
    }
    let ev = evaluation(m);
    let dual_dims = ext_regular_dims(&ev.dual.module, bound, true);
    for (k, d) in dual_dims.iter().enumerate() {
        if *d > 0 {
            return BoundedVerdict::fail(bound, Witness::DualExt { degree: k + 1, dim: *d });
        }
    }
    if !ev.map.is_bijective() {
        let ker_dim = ev.map.matrix.kernel_basis().cols();
        let cok_dim = ev.double.dim() - ev.map.matrix.rank();
        return BoundedVerdict::fail(bound, Witness::NotReflexive { ker_dim, cok_dim });
    }
    BoundedVerdict::pass(bound)
}

/// Checks that M* = 0 and Ext^i(M, A) = 0 for 1 <= i <= bound.  The zero
/// module passes vacuously.
pub fn nunke_check(m: &Module, bound: usize) -> BoundedVerdict {
    let dual_dim = a_dual(m).dim();
    if dual_dim > 0 {
        return BoundedVerdict::fail(bound, Witness::DualNonzero { dim: dual_dim });
    }
    is_sgp(m, bound)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;
    use crate::linalg::FieldSpec;
    use crate::modrep::Side;

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    #[test]
    fn projectives_pass_every_check_at_any_bound() {
        for name in ["kx3", "rad2", "kxy", "a2"] {
            let a = preset_algebra(f2(), name, None).unwrap();
            let reg = Module::regular(&a, Side::Left);
            for bound in [1, 4, 9] {
                assert!(is_sgp(&reg, bound).holds(), "{name} regular sgp");
                assert!(is_gp(&reg, bound).holds(), "{name} regular gp");
            }
            assert!(is_torsionless(&reg) && is_reflexive(&reg), "{name} regular reflexive");
        }
    }

    #[test]
    fn truncated_polynomial_simple_is_gorenstein_projective() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let v = is_gp(&s, 10);
        assert!(v.holds(), "{v:?}");
        assert!(is_inf_torsionfree(&s, 6).holds());
    }

    #[test]
    fn commutative_radical_square_zero_simple_fails_with_witnesses() {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let v = is_sgp(&s, 4);
        assert_eq!(v.status, VerdictStatus::Fails);
        assert_eq!(v.witness, Some(Witness::Ext { degree: 1, dim: 3 }));
        // The evaluation map of S lands in a 9-dimensional double dual and
        // is injective but far from surjective.
        assert!(is_torsionless(&s));
        assert!(!is_reflexive(&s));
        let g = is_gp(&s, 4);
        assert_eq!(g.witness, Some(Witness::Ext { degree: 1, dim: 3 }));
    }

    #[test]
    fn two_point_path_algebra_simple_is_not_torsionless() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let s1 = Module::simple(&a, Side::Left, 0);
        assert!(!is_torsionless(&s1));
        // Its dual vanishes outright, so the dual-vanishing half of the
        // Nunke check is satisfied, but Ext^1(S1, A) is nonzero.
        let n = nunke_check(&s1, 4);
        assert_eq!(n.status, VerdictStatus::Fails);
        assert_eq!(n.witness, Some(Witness::Ext { degree: 1, dim: 1 }));
    }

    #[test]
    fn zero_module_passes_the_nunke_check_vacuously() {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let z = Module::zero(&a, Side::Left);
        assert!(nunke_check(&z, 3).holds());
        assert!(is_gp(&z, 3).holds());
    }

    #[test]
    fn gp_is_stable_under_direct_sums() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let p = Module::regular(&a, Side::Left);
        let sum = Module::direct_sum(&[s, p]);
        assert!(is_gp(&sum, 8).holds());
    }

    #[test]
    fn raising_the_bound_can_only_refine_a_holds_verdict() {
        let a = preset_algebra(f2(), "kxy", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let low = is_sgp(&s, 1);
        let high = is_sgp(&s, 5);
        assert_eq!(low.status, high.status);
        assert!(high.holds());
    }
}
