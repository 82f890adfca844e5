//! Ext dimensions against the algebra or an arbitrary coefficient module,
//! computed from minimal resolutions without forming large hom spaces.
//!
//! Hom(A e_i, N) is e_i N, so the complex Hom(P_•, N) is assembled from
//! idempotent slices of N and the element entries of the differentials.
//! Against the algebra itself the dual differentials are used directly.
//! Computation stops at the first nonzero dimension on request: deciding
//! vanishing never needs the later (and much larger) degrees.

use super::proj::{ProjMap, ProjSum};
use super::resolution::Resolution;
use crate::linalg::Matrix;
use crate::modrep::Module;

/// dim Ext^i(M, A) for i = 1..=bound. With `stop_at_first_nonzero`, the
/// returned vector ends at the first nonzero entry.
pub fn ext_regular_dims(m: &Module, bound: usize, stop_at_first_nonzero: bool) -> Vec<usize> {
    let mut res = Resolution::new(m);
    let mut out = Vec::new();
    let mut prev_rank: Option<usize> = None;
    for i in 1..=bound {
        res.ensure(i + 1);
        if res.term(i).dim() == 0 {
            // The resolution has ended; all later groups vanish.
            out.resize(bound, 0);
            break;
        }
        let rank_i = *prev_rank
            .get_or_insert_with(|| res.map(i).dual().concrete_matrix().rank());
        let rank_next = res.map(i + 1).dual().concrete_matrix().rank();
        let dual_dim = res.term(i).dual().dim();
        let h = dual_dim - rank_next - rank_i;
        out.push(h);
        prev_rank = Some(rank_next);
        if h != 0 && stop_at_first_nonzero {
            break;
        }
    }
    out
}

/// dim Hom(P, N) for a projective sum, via idempotent slices of N.
fn hom_slice_dims(p: &ProjSum, slices: &[Matrix]) -> usize {
    p.tags().iter().map(|&i| slices[i].cols()).sum()
}

/// The matrix of Hom(f, N): Hom(Q, N) -> Hom(P, N) on the slice bases.
fn hom_induced(f: &ProjMap, n: &Module, slices: &[Matrix]) -> Matrix {
    let field = n.field();
    let src_tags = f.source.tags();
    let tgt_tags = f.target.tags();
    let rows: usize = src_tags.iter().map(|&i| slices[i].cols()).sum();
    let cols: usize = tgt_tags.iter().map(|&i| slices[i].cols()).sum();
    let mut out = Matrix::zero(field, rows, cols);
    let mut row_off = 0;
    for (t, &jt) in src_tags.iter().enumerate() {
        let vt = &slices[jt];
        let mut col_off = 0;
        for (s, &is) in tgt_tags.iter().enumerate() {
            let vs = &slices[is];
            let y = f.entry(s, t);
            if !y.is_zero() && vt.cols() > 0 && vs.cols() > 0 {
                let moved = n.action_of(y).matmul(vs);
                let block = vt.solve(&moved).expect("y e_i N lies in e_j N");
                for r in 0..block.rows() {
                    for c in 0..block.cols() {
                        let val = block.get(r, c);
                        if !val.is_zero() {
                            out.set(row_off + r, col_off + c, val);
                        }
                    }
                }
            }
            col_off += vs.cols();
        }
        row_off += vt.cols();
    }
    out
}

/// dim Ext^i(M, N) for i = 1..=bound, with the same early-exit contract
/// as [`ext_regular_dims`].
pub fn ext_hom_dims(m: &Module, n: &Module, bound: usize, stop_at_first_nonzero: bool) -> Vec<usize> {
    assert!(m.compatible_with(n), "coefficients must live over the same algebra");
    let slices: Vec<Matrix> = (0..m.acting().num_idempotents())
        .map(|i| n.idempotent_part(i))
        .collect();
    let mut res = Resolution::new(m);
    let mut out = Vec::new();
    let mut prev_rank: Option<usize> = None;
    for i in 1..=bound {
        res.ensure(i + 1);
        if res.term(i).dim() == 0 {
            out.resize(bound, 0);
            break;
        }
        let rank_i = *prev_rank
            .get_or_insert_with(|| hom_induced(res.map(i), n, &slices).rank());
        let rank_next = hom_induced(res.map(i + 1), n, &slices).rank();
        let here = hom_slice_dims(res.term(i), &slices);
        let h = here - rank_next - rank_i;
        out.push(h);
        prev_rank = Some(rank_next);
        if h != 0 && stop_at_first_nonzero {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;
    use crate::linalg::FieldSpec;
    use crate::modrep::{hom_basis, Side};

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    /// Brute-force Ext^1(M, A) for the simple over the radical-square-zero
    /// algebra, by dualizing the start of the resolution with solved hom
    /// spaces only — no element machinery involved.
    fn brute_force_ext1_rad2() -> usize {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        // Resolution by hand: A -> S with kernel rad A (x, y); cover of
        // rad A is A^2 mapping (u, v) -> ux + vy; its kernel is rad + rad.
        let p0 = reg.clone();
        let p1 = Module::direct_sum(&[reg.clone(), reg.clone()]);
        let p2 = Module::direct_sum(&[reg.clone(), reg.clone(), reg.clone(), reg.clone()]);
        let x = Matrix::from_ints(f2(), &[&[0], &[1], &[0]]);
        let y = Matrix::from_ints(f2(), &[&[0], &[0], &[1]]);
        let rx = a.right_mult_matrix(&x);
        let ry = a.right_mult_matrix(&y);
        let d1 = Matrix::hstack(&[&rx, &ry]);
        let zero = Matrix::zero(f2(), 3, 3);
        let d2 = Matrix::vstack(&[
            &Matrix::hstack(&[&rx, &ry, &zero, &zero]),
            &Matrix::hstack(&[&zero, &zero, &rx, &ry]),
        ]);
        assert!(d1.matmul(&d2).is_zero());
        // Apply Hom(-, A) by listing hom bases and inducing composition.
        let h0 = hom_basis(&p0, &reg);
        let h1 = hom_basis(&p1, &reg);
        let h2 = hom_basis(&p2, &reg);
        let flat = |m: &Matrix| {
            Matrix::from_fn(f2(), m.rows() * m.cols(), 1, |r, _| {
                m.get(r / m.cols(), r % m.cols())
            })
        };
        let span1: Vec<Matrix> = h1.iter().map(|f| flat(&f.matrix)).collect();
        let span1 = Matrix::hstack(&span1.iter().collect::<Vec<_>>());
        let span2: Vec<Matrix> = h2.iter().map(|f| flat(&f.matrix)).collect();
        let span2 = Matrix::hstack(&span2.iter().collect::<Vec<_>>());
        let dual1_cols: Vec<Matrix> = h0
            .iter()
            .map(|g| span1.solve(&flat(&g.matrix.matmul(&d1))).unwrap())
            .collect();
        let dual1 = Matrix::hstack(&dual1_cols.iter().collect::<Vec<_>>());
        let dual2_cols: Vec<Matrix> = h1
            .iter()
            .map(|g| span2.solve(&flat(&g.matrix.matmul(&d2))).unwrap())
            .collect();
        let dual2 = Matrix::hstack(&dual2_cols.iter().collect::<Vec<_>>());
        // Ext^1 = ker(dual2) / im(dual1).
        (h1.len() - dual2.rank()) - dual1.rank()
    }

    #[test]
    fn first_ext_against_the_algebra_matches_the_brute_force_value() {
        let expected = brute_force_ext1_rad2();
        assert_eq!(expected, 3);
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let dims = ext_regular_dims(&s, 3, false);
        assert_eq!(dims, vec![3, 6, 12]);
    }

    #[test]
    fn ext_vanishes_identically_for_projectives() {
        let a = preset_algebra(f2(), "kxy", None).unwrap();
        let reg = Module::regular(&a, Side::Left);
        assert_eq!(ext_regular_dims(&reg, 4, false), vec![0, 0, 0, 0]);
    }

    #[test]
    fn ext_against_the_algebra_vanishes_over_self_injective_presets() {
        // Over a self-injective algebra every module has vanishing Ext^i
        // against A (A is injective), e.g. the simple over k[x]/(x^3).
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        assert_eq!(ext_regular_dims(&s, 5, false), vec![0, 0, 0, 0, 0]);
        let b = preset_algebra(f2(), "kxy", None).unwrap();
        let sb = Module::simple(&b, Side::Left, 0);
        assert_eq!(ext_regular_dims(&sb, 4, false), vec![0, 0, 0, 0]);
    }

    #[test]
    fn early_exit_stops_at_the_first_nonzero_degree() {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let dims = ext_regular_dims(&s, 8, true);
        assert_eq!(dims, vec![3]);
    }

    #[test]
    fn ext_between_simples_counts_arrow_and_relation_data() {
        // Ext^1(S, S) over k[x]/(x^3) is one-dimensional in each degree.
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        assert_eq!(ext_hom_dims(&s, &s, 3, false), vec![1, 1, 1]);
        // Over the arrow algebra: Ext^1(S1, S2) = k, Ext^1(S2, S1) = 0.
        let b = preset_algebra(f2(), "a2", None).unwrap();
        let s1 = Module::simple(&b, Side::Left, 0);
        let s2 = Module::simple(&b, Side::Left, 1);
        assert_eq!(ext_hom_dims(&s1, &s2, 2, false), vec![1, 0]);
        assert_eq!(ext_hom_dims(&s2, &s1, 2, false), vec![0, 0]);
        // Against the algebra, S1 has a one-dimensional first group.
        assert_eq!(ext_regular_dims(&s1, 2, false), vec![1, 0]);
    }

    #[test]
    fn hom_route_and_dual_route_agree_against_the_regular_module() {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        let s = Module::simple(&a, Side::Left, 0);
        let reg = Module::regular(&a, Side::Left);
        assert_eq!(ext_hom_dims(&s, &reg, 3, false), ext_regular_dims(&s, 3, false));
    }
}
