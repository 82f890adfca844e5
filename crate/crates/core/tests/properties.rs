//! Randomized property tests for the exact linear algebra kernel.  These
//! pin down the algebraic contracts (idempotence of row reduction, the
//! rank-nullity relation, exactness of solve and inverse) over both a
//! prime field and the rationals.

use gorenstein_core::{FieldSpec, Matrix, Scalar};
use proptest::prelude::*;

fn matrix_strategy(field: FieldSpec) -> impl Strategy<Value = Matrix> {
    (1usize..=5, 1usize..=5).prop_flat_map(move |(rows, cols)| {
        proptest::collection::vec(-6i64..=6, rows * cols).prop_map(move |entries| {
            let mut m = Matrix::zero(field, rows, cols);
            for (k, &e) in entries.iter().enumerate() {
                m.set(k / cols, k % cols, Scalar::from_int(field, e));
            }
            m
        })
    })
}

fn fields() -> impl Strategy<Value = FieldSpec> {
    prop_oneof![
        Just(FieldSpec::Prime(2)),
        Just(FieldSpec::Prime(3)),
        Just(FieldSpec::Prime(7)),
        Just(FieldSpec::Rationals),
    ]
}

fn any_matrix() -> impl Strategy<Value = Matrix> {
    fields().prop_flat_map(matrix_strategy)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn row_reduction_is_idempotent(m in any_matrix()) {
        let (r1, pivots1) = m.rref();
        let (r2, pivots2) = r1.rref();
        prop_assert!(r1 == r2);
        prop_assert_eq!(pivots1, pivots2);
    }

    #[test]
    fn kernel_vectors_are_killed_and_count_matches_rank(m in any_matrix()) {
        let k = m.kernel_basis();
        let product = m.matmul(&k);
        prop_assert!(product == Matrix::zero(m.field(), m.rows(), k.cols()));
        prop_assert_eq!(m.rank() + k.cols(), m.cols());
        // Kernel basis columns are independent.
        prop_assert_eq!(k.rank(), k.cols());
    }

    #[test]
    fn solve_returns_exact_solutions(m in any_matrix(), col in 0usize..5) {
        // Build a guaranteed-consistent right-hand side from a column of m.
        let col = col % m.cols();
        let rhs = m.column(col);
        let x = m.solve(&rhs).expect("a column of m is always in the image");
        prop_assert!(m.matmul(&x) == rhs);
    }

    #[test]
    fn inverse_is_two_sided(m in any_matrix()) {
        if m.rows() == m.cols() && m.is_invertible() {
            let inv = m.inverse().expect("invertible matrices invert");
            let id = Matrix::identity(m.field(), m.rows());
            prop_assert!(m.matmul(&inv) == id);
            prop_assert!(inv.matmul(&m) == id);
        } else {
            prop_assert!(m.rows() != m.cols() || m.inverse().is_none());
        }
    }

    #[test]
    fn column_space_basis_spans_the_columns(m in any_matrix()) {
        let basis = m.col_space_basis();
        prop_assert_eq!(basis.rank(), basis.cols());
        prop_assert_eq!(basis.rank(), m.rank());
        prop_assert!(basis.spans(&m));
    }
}
