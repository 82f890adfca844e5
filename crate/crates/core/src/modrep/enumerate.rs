//! Exhaustive enumeration of modules by minimal presentation.
//!
//! Every module with top multiplicities t is a quotient of P = ⊕ P(i)^{t_i}
//! by a submodule of rad P. Over a finite prime field the invariant
//! subspaces of rad P can be enumerated exactly: run over reduced echelon
//! bases of each dimension and keep those closed under the algebra
//! generators. The result lists each presentation once, in a fixed order.

use super::{Module, Side};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix, Scalar};

/// Bounds for the enumeration sweep.
#[derive(Debug, Clone)]
pub struct EnumerateSpec {
    pub side: Side,
    /// Maximum total multiplicity of the top.
    pub max_top: usize,
    /// Maximum dimension of the produced modules.
    pub max_dim: usize,
    /// Stop after this many modules.
    pub limit: Option<usize>,
}

/// Enumerates quotients P/U over all small tops and invariant U ⊆ rad P.
pub fn enumerate_modules(base: &Algebra, spec: &EnumerateSpec) -> Result<Vec<Module>> {
    let p = match base.field() {
        FieldSpec::Prime(p) => p,
        FieldSpec::Rationals => {
            return Err(Error::Precondition(
                "module enumeration needs a finite field".into(),
            ))
        }
    };
    let mut out = Vec::new();
    let r = base.num_idempotents();
    let mut tops = Vec::new();
    collect_multisets(r, spec.max_top, &mut vec![0; r], 0, &mut tops);
    'outer: for t in tops {
        let parts: Vec<Module> = (0..r)
            .flat_map(|i| {
                std::iter::repeat_with(move || Module::projective(base, spec.side, i)).take(t[i])
            })
            .collect();
        if parts.is_empty() {
            continue;
        }
        let cover = Module::direct_sum(&parts);
        let rad = cover.radical_basis();
        let w = rad.cols();
        if cover.dim() > spec.max_dim + w {
            // Even killing all of rad P leaves the module too big.
            continue;
        }
        let min_u = cover.dim().saturating_sub(spec.max_dim);
        let gens = generator_actions(&cover);
        for u in min_u..=w {
            let mut found_limit = false;
            for_each_subspace(p, w, u, &mut |basis_rows| {
                if found_limit {
                    return;
                }
                let lift = lift_basis(&rad, basis_rows, p);
                if !is_invariant(&gens, &lift) {
                    return;
                }
                let (quo, _) = cover.quotient_by(&lift).expect("invariant subspace");
                out.push(quo.relabel(format!(
                    "P{:?}/U{}",
                    t,
                    out.len()
                )));
                if spec.limit.is_some_and(|l| out.len() >= l) {
                    found_limit = true;
                }
            });
            if found_limit {
                break 'outer;
            }
        }
    }
    Ok(out)
}

fn collect_multisets(r: usize, max_total: usize, cur: &mut Vec<usize>, pos: usize, out: &mut Vec<Vec<usize>>) {
    if pos == r {
        if cur.iter().sum::<usize>() >= 1 {
            out.push(cur.clone());
        }
        return;
    }
    let used: usize = cur[..pos].iter().sum();
    for v in 0..=(max_total - used) {
        cur[pos] = v;
        collect_multisets(r, max_total, cur, pos + 1, out);
    }
    cur[pos] = 0;
}

fn generator_actions(m: &Module) -> Vec<Matrix> {
    let acting = m.acting();
    let mut gens = Vec::new();
    for i in 0..acting.num_idempotents() {
        gens.push(m.action_of(acting.idempotent(i)));
    }
    let lifts = acting.radical_generators();
    for c in 0..lifts.cols() {
        gens.push(m.action_of(&lifts.column(c)));
    }
    gens
}

fn is_invariant(gens: &[Matrix], basis: &Matrix) -> bool {
    gens.iter().all(|g| basis.spans(&g.matmul(basis)))
}

/// Converts row-echelon rows over rad-coordinates into a column basis
/// inside the covering module.
fn lift_basis(rad: &Matrix, rows: &[Vec<u64>], p: u64) -> Matrix {
    let field = FieldSpec::Prime(p);
    let w = rad.cols();
    let cols: Vec<Matrix> = rows
        .iter()
        .map(|row| {
            let coeffs = Matrix::from_fn(field, w, 1, |r, _| Scalar::from_int(field, row[r] as i64));
            rad.matmul(&coeffs)
        })
        .collect();
    if cols.is_empty() {
        Matrix::zero(field, rad.rows(), 0)
    } else {
        Matrix::hstack(&cols.iter().collect::<Vec<_>>())
    }
}

/// Calls `f` with each u-dimensional subspace of F_p^w, presented as the
/// rows of its unique reduced row-echelon basis.
fn for_each_subspace(p: u64, w: usize, u: usize, f: &mut impl FnMut(&[Vec<u64>])) {
    if u == 0 {
        f(&[]);
        return;
    }
    if u > w {
        return;
    }
    let mut pivots: Vec<usize> = (0..u).collect();
    loop {
        emit_for_pivots(p, w, &pivots, f);
        // Next pivot combination in lexicographic order.
        let mut i = u;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if pivots[i] != i + w - u {
                pivots[i] += 1;
                for j in i + 1..u {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn emit_for_pivots(p: u64, w: usize, pivots: &[usize], f: &mut impl FnMut(&[Vec<u64>])) {
    let u = pivots.len();
    // Free slots: (row, col) with col not a pivot and col > pivots[row].
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (row, &pc) in pivots.iter().enumerate() {
        for col in pc + 1..w {
            if !pivots.contains(&col) {
                free.push((row, col));
            }
        }
    }
    let mut values = vec![0u64; free.len()];
    loop {
        let mut rows = vec![vec![0u64; w]; u];
        for (row, &pc) in pivots.iter().enumerate() {
            rows[row][pc] = 1;
        }
        for (slot, &(row, col)) in free.iter().enumerate() {
            rows[row][col] = values[slot];
        }
        f(&rows);
        // Odometer over the free entries.
        let mut k = 0;
        loop {
            if k == values.len() {
                return;
            }
            values[k] += 1;
            if values[k] < p {
                break;
            }
            values[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    #[test]
    fn subspace_enumeration_counts_match_gaussian_binomials() {
        // Subspace counts over F_2: [4 choose 1] = 15, [4 choose 2] = 35.
        let mut count = 0;
        for_each_subspace(2, 4, 1, &mut |_| count += 1);
        assert_eq!(count, 15);
        count = 0;
        for_each_subspace(2, 4, 2, &mut |_| count += 1);
        assert_eq!(count, 35);
        // Over F_3: [3 choose 1] = 13.
        count = 0;
        for_each_subspace(3, 3, 1, &mut |_| count += 1);
        assert_eq!(count, 13);
        // Trivial cases.
        count = 0;
        for_each_subspace(2, 4, 0, &mut |_| count += 1);
        assert_eq!(count, 1);
        count = 0;
        for_each_subspace(2, 4, 4, &mut |_| count += 1);
        assert_eq!(count, 1);
    }

    #[test]
    fn enumeration_over_a_serial_algebra_lists_the_uniserial_quotients() {
        // Over k[x]/(x^3), quotients of P = A by submodules of rad A are
        // exactly A, A/rad^2, A/rad: with max_top 1 there are 3 modules.
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let spec = EnumerateSpec { side: Side::Left, max_top: 1, max_dim: 3, limit: None };
        let mods = enumerate_modules(&a, &spec).unwrap();
        let mut dims: Vec<usize> = mods.iter().map(|m| m.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2, 3]);
    }

    #[test]
    fn enumeration_respects_the_dimension_cap() {
        let a = preset_algebra(f2(), "kxy", None).unwrap();
        let spec = EnumerateSpec { side: Side::Left, max_top: 1, max_dim: 2, limit: None };
        let mods = enumerate_modules(&a, &spec).unwrap();
        assert!(!mods.is_empty());
        assert!(mods.iter().all(|m| m.dim() <= 2));
        // dim 1: top itself; dim 2: quotients by 2-dim invariant subspaces
        // of the 3-dim radical containing rad^2... all are invariant here.
        let count_dim2 = mods.iter().filter(|m| m.dim() == 2).count();
        assert_eq!(count_dim2, 3);
    }

    #[test]
    fn enumeration_over_two_vertices_finds_mixed_tops() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let spec = EnumerateSpec { side: Side::Left, max_top: 2, max_dim: 3, limit: None };
        let mods = enumerate_modules(&a, &spec).unwrap();
        // Includes S1, P1, S2, S1+S2, P1+S2, S1+S1, ...
        assert!(mods.len() >= 6);
        for m in &mods {
            assert!(m.dim() <= 3 && m.dim() >= 1);
        }
    }

    #[test]
    fn enumeration_rejects_the_rational_field() {
        let a = preset_algebra(FieldSpec::Rationals, "kx2", None).unwrap();
        let spec = EnumerateSpec { side: Side::Left, max_top: 1, max_dim: 2, limit: None };
        assert!(enumerate_modules(&a, &spec).is_err());
    }
}
