//! Shared fixtures for the benchmark suite.

use gorenstein_core::{preset_algebra, Algebra, FieldSpec, Matrix, Module, Scalar, Side};

/// A dense, full-of-structure test matrix with entries (i*j + i + 1) mod p.
pub fn dense_matrix(p: u64, rows: usize, cols: usize) -> Matrix {
    let field = FieldSpec::Prime(p);
    Matrix::from_fn(field, rows, cols, |i, j| {
        Scalar::from_int(field, ((i * j + i + 1) % p as usize) as i64)
    })
}

/// The commuting-variables preset algebra over F_2.
pub fn kxy() -> Algebra {
    preset_algebra(FieldSpec::Prime(2), "kxy", None).expect("preset builds")
}

/// The radical-square-zero preset over F_2.
pub fn rad2() -> Algebra {
    preset_algebra(FieldSpec::Prime(2), "rad2", None).expect("preset builds")
}

/// The unique simple module over a local preset.
pub fn simple(a: &Algebra) -> Module {
    Module::simple(a, Side::Left, 0)
}
