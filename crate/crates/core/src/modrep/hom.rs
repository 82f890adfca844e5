//! Homomorphism spaces between modules, computed exactly.
//!
//! A linear map f: M -> N is a module map iff it intertwines a generating
//! set of the acting algebra: the idempotents together with lifts of a
//! basis of J/J^2. Products of generators propagate the constraint, so
//! these finitely many linear conditions cut out Hom(M, N) exactly.

use super::{Module, ModuleMap};
use crate::linalg::{Matrix, Scalar};

/// Canonical basis of Hom(M, N) as matrices (target dim x source dim).
pub fn hom_basis(m: &Module, n: &Module) -> Vec<ModuleMap> {
    assert!(m.compatible_with(n), "hom between incompatible modules");
    let field = m.field();
    let (nm, nn) = (m.dim(), n.dim());
    if nm == 0 || nn == 0 {
        return Vec::new();
    }
    let acting = m.acting();
    let mut gens: Vec<(Matrix, Matrix)> = Vec::new();
    for i in 0..acting.num_idempotents() {
        let e = acting.idempotent(i);
        gens.push((m.action_of(e), n.action_of(e)));
    }
    let lifts = acting.radical_generators();
    for c in 0..lifts.cols() {
        let v = lifts.column(c);
        gens.push((m.action_of(&v), n.action_of(&v)));
    }

    // Unknown entries f[r][c], flattened row-major; one constraint row per
    // generator and output entry: sum_k f[r][k] p[k][c] - q[r][k] f[k][c].
    let unknowns = nn * nm;
    let mut rows: Vec<Matrix> = Vec::with_capacity(gens.len());
    for (p, q) in &gens {
        let block = Matrix::from_fn(field, unknowns, unknowns, |row, col| {
            let (r, c) = (row / nm, row % nm);
            let (fr, fc) = (col / nm, col % nm);
            let mut val = Scalar::zero(field);
            if fr == r {
                val = val.add(&p.get(fc, c));
            }
            if fc == c {
                val = val.sub(&q.get(r, fr));
            }
            val
        });
        rows.push(block);
    }
    let constraints = Matrix::vstack(&rows.iter().collect::<Vec<_>>());
    let kernel = constraints.kernel_basis();
    (0..kernel.cols())
        .map(|k| {
            let flat = kernel.column(k);
            let matrix = Matrix::from_fn(field, nn, nm, |r, c| flat.get(r * nm + c, 0));
            ModuleMap::unchecked(m.clone(), n.clone(), matrix)
        })
        .collect()
}

/// dim Hom(M, N).
pub fn hom_dim(m: &Module, n: &Module) -> usize {
    hom_basis(m, n).len()
}

/// dim End(M).
pub fn end_dim(m: &Module) -> usize {
    hom_dim(m, m)
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
    fn hom_from_simple_into_regular_counts_socle_multiplicity() {
        // Over k<x,y>/(rad^2), Hom(S, A) has dimension 2: the socle is xk + yk.
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let reg = Module::regular(&a, Side::Left);
        assert_eq!(hom_dim(&s, &reg), 2);
        // Over k[x]/(x^2) the socle of A is one-dimensional.
        let b = preset_algebra(f2(), "kx2", None).unwrap();
        let sb = Module::simple(&b, Side::Left, 0);
        let regb = Module::regular(&b, Side::Left);
        assert_eq!(hom_dim(&sb, &regb), 1);
    }

    #[test]
    fn hom_members_are_genuine_module_maps() {
        let a = preset_algebra(FieldSpec::Rationals, "kxy", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        let (rad, _) = reg.radical();
        for f in hom_basis(&rad, &reg) {
            f.verify().unwrap();
        }
        for f in hom_basis(&reg, &rad) {
            f.verify().unwrap();
        }
    }

    #[test]
    fn endomorphisms_of_the_regular_module_match_the_opposite_algebra() {
        // End(A A) = A^op, so its dimension equals dim A.
        for name in ["kx3", "rad2", "kxy", "a2"] {
            let a = preset_algebra(f2(), name, None).unwrap();
            let reg = Module::regular(&a, Side::Left);
            assert_eq!(end_dim(&reg), a.dim(), "algebra {name}");
        }
    }

    #[test]
    fn hom_between_different_simples_vanishes() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let s1 = Module::simple(&a, Side::Left, 0);
        let s2 = Module::simple(&a, Side::Left, 1);
        assert_eq!(hom_dim(&s1, &s2), 0);
        assert_eq!(hom_dim(&s2, &s1), 0);
        assert_eq!(end_dim(&s1), 1);
    }
}
