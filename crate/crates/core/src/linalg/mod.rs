//! Exact dense linear algebra over Q and prime fields F_p.

mod dense;
mod matrix;
mod scalar;

pub use matrix::Matrix;
pub use scalar::{FieldSpec, Scalar, MAX_PRIME};

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    const F2: FieldSpec = FieldSpec::Prime(2);

    /// Independent mod-2 arithmetic used by the enumeration oracles below;
    /// deliberately avoids the Matrix implementation under test.
    fn apply_f2(m: &[Vec<u8>], v: &[u8]) -> Vec<u8> {
        m.iter()
            .map(|row| row.iter().zip(v).map(|(a, b)| a & b).fold(0, |x, y| x ^ y))
            .collect()
    }

    fn matrix_to_u8(m: &Matrix) -> Vec<Vec<u8>> {
        (0..m.rows())
            .map(|r| {
                (0..m.cols())
                    .map(|c| if m.get(r, c).is_zero() { 0 } else { 1 })
                    .collect()
            })
            .collect()
    }

    fn enumerate_vectors(n: usize) -> Vec<Vec<u8>> {
        (0..1usize << n)
            .map(|mask| (0..n).map(|i| ((mask >> i) & 1) as u8).collect())
            .collect()
    }

    /// All vectors in the column span of `basis` (mod-2, oracle arithmetic).
    fn span_f2(basis: &[Vec<u8>], dim: usize) -> std::collections::BTreeSet<Vec<u8>> {
        let cols = basis.first().map_or(0, |r| r.len());
        let mut out = std::collections::BTreeSet::new();
        for mask in 0..1usize << cols {
            let mut v = vec![0u8; dim];
            for (j, item) in v.iter_mut().enumerate() {
                for (c, &b) in basis[j].iter().enumerate() {
                    if (mask >> c) & 1 == 1 {
                        *item ^= b;
                    }
                }
            }
            out.insert(v);
        }
        out
    }

    #[test]
    fn rref_fixes_identity_and_zero() {
        let id = Matrix::identity(F2, 3);
        let (r, p) = id.rref();
        assert_eq!(r, id);
        assert_eq!(p, vec![0, 1, 2]);

        let z = Matrix::zero(FieldSpec::Rationals, 2, 3);
        let (r, p) = z.rref();
        assert_eq!(r, z);
        assert!(p.is_empty());
    }

    #[test]
    fn rref_of_rank_one_matrix_over_f2_matches_row_space_oracle() {
        let m = Matrix::from_ints(F2, &[&[1, 1], &[1, 1]]);
        let (r, pivots) = m.rref();
        assert_eq!(r, Matrix::from_ints(F2, &[&[1, 1], &[0, 0]]));
        assert_eq!(pivots, vec![0]);

        // Oracle: the rref rows must span exactly the original row space.
        let orig = span_f2(&matrix_to_u8(&m.transpose()), 2);
        let reduced = span_f2(&matrix_to_u8(&r.transpose()), 2);
        assert_eq!(orig, reduced);
    }

    #[test]
    fn kernel_of_zero_map_is_everything_and_of_injective_map_is_nothing() {
        let z = Matrix::zero(F2, 2, 3);
        let k = z.kernel_basis();
        assert_eq!((k.rows(), k.cols()), (3, 3));
        assert!(k.is_identity());

        let inv = Matrix::from_ints(FieldSpec::Rationals, &[&[2, 1], &[1, 1]]);
        assert_eq!(inv.kernel_basis().cols(), 0);
    }

    #[test]
    fn kernel_over_f2_matches_enumeration_oracle() {
        let m = Matrix::from_ints(F2, &[&[1, 1]]);
        let k = m.kernel_basis();
        assert_eq!(k.cols(), 1);

        let mu = matrix_to_u8(&m);
        let brute: std::collections::BTreeSet<Vec<u8>> = enumerate_vectors(2)
            .into_iter()
            .filter(|v| apply_f2(&mu, v).iter().all(|&x| x == 0))
            .collect();
        assert_eq!(brute.len(), 2); // {(0,0), (1,1)}
        assert!(brute.contains(&vec![1, 1]));
        let claimed = span_f2(&matrix_to_u8(&k), 2);
        assert_eq!(brute, claimed);
    }

    #[test]
    fn solve_reports_exact_solutions_and_inconsistency() {
        let id = Matrix::identity(FieldSpec::Rationals, 3);
        let b = Matrix::from_ints(FieldSpec::Rationals, &[&[1], &[2], &[3]]);
        assert_eq!(id.solve(&b).unwrap(), b);

        let z = Matrix::zero(F2, 2, 2);
        let b2 = Matrix::from_ints(F2, &[&[1], &[0]]);
        assert!(z.solve(&b2).is_none());

        // Underdetermined: any reported solution must actually solve it,
        // cross-checked against the brute-force F_2 solution set.
        let m = Matrix::from_ints(F2, &[&[1, 1]]);
        let rhs = Matrix::from_ints(F2, &[&[1]]);
        let x = m.solve(&rhs).unwrap();
        let mu = matrix_to_u8(&m);
        let solutions: Vec<Vec<u8>> = enumerate_vectors(2)
            .into_iter()
            .filter(|v| apply_f2(&mu, v) == vec![1])
            .collect();
        assert_eq!(solutions.len(), 2);
        let xu: Vec<u8> = (0..2).map(|r| if x.get(r, 0).is_zero() { 0 } else { 1 }).collect();
        assert!(solutions.contains(&xu));
    }

    #[test]
    fn random_matrices_satisfy_rank_nullity_and_solve_round_trips() {
        for field in [F2, FieldSpec::Prime(5), FieldSpec::Rationals] {
            let mut rng = StdRng::seed_from_u64(0x5eed);
            for _ in 0..200 {
                let rows = rng.gen_range(0..6);
                let cols = rng.gen_range(0..6);
                let m = Matrix::random(field, rows, cols, &mut rng);
                let k = m.kernel_basis();
                assert_eq!(m.rank() + k.cols(), cols);
                if cols > 0 && k.cols() > 0 {
                    assert!(m.matmul(&k).is_zero());
                    assert_eq!(k.rank(), k.cols());
                }
                let x = Matrix::random(field, cols, 2, &mut rng);
                let b = m.matmul(&x);
                let sol = m.solve(&b).expect("consistent system must solve");
                assert_eq!(m.matmul(&sol), b);
            }
        }
    }

    #[test]
    fn rational_results_stay_in_lowest_terms() {
        let mut rng = StdRng::seed_from_u64(7);
        for _ in 0..50 {
            let m = Matrix::random(FieldSpec::Rationals, 4, 4, &mut rng);
            let (r, _) = m.rref();
            for i in 0..4 {
                for j in 0..4 {
                    let s = r.get(i, j);
                    let back = Scalar::parse(FieldSpec::Rationals, &s.render()).unwrap();
                    assert_eq!(back, s);
                }
            }
        }
    }

    #[test]
    fn column_space_basis_is_canonical_across_presentations() {
        let mut rng = StdRng::seed_from_u64(99);
        for field in [F2, FieldSpec::Rationals] {
            for _ in 0..40 {
                let m = Matrix::random(field, 4, 3, &mut rng);
                let b = m.col_space_basis();
                // Same span, full column rank.
                assert!(b.spans(&m) && m.spans(&b));
                assert_eq!(b.rank(), b.cols());
                // Shuffling/duplicating the generators cannot change the basis.
                let doubled = Matrix::hstack(&[&m, &m]);
                assert_eq!(doubled.col_space_basis(), b);
            }
        }
    }

    #[test]
    fn degenerate_shapes_multiply_correctly() {
        let a = Matrix::zero(F2, 3, 0);
        let b = Matrix::zero(F2, 0, 2);
        let c = a.matmul(&b);
        assert_eq!((c.rows(), c.cols()), (3, 2));
        assert!(c.is_zero());
        assert_eq!(Matrix::zero(F2, 0, 0).rank(), 0);
    }
}
