//! Built-in algebras, available by name from the library and the CLI.

use super::Algebra;
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix};

/// Names accepted by [`preset_algebra`]; `kxn` takes the extra parameter.
pub fn preset_names() -> &'static [&'static str] {
    &["k", "kxn", "kx2", "kx3", "rad2", "kxy", "a2"]
}

/// Builds a named preset algebra over the given field.
///
/// * `k` — the field itself.
/// * `kxn` / `kx<N>` — truncated polynomials k[x]/(x^N).
/// * `rad2` — local with radical square zero on two generators.
/// * `kxy` — k[x,y]/(x^2, y^2).
/// * `a2` — path algebra of a single arrow 1 -> 2, composed right to left.
pub fn preset_algebra(field: FieldSpec, name: &str, n: Option<usize>) -> Result<Algebra> {
    match name {
        "k" => truncated_polynomial(field, 1),
        "kxn" => {
            let n = n.ok_or_else(|| {
                Error::Parse("preset kxn needs a truncation order n".into())
            })?;
            truncated_polynomial(field, n)
        }
        "rad2" => rad_square_zero(field),
        "kxy" => commuting_square_zero_pair(field),
        "a2" => arrow_path_algebra(field),
        _ => {
            if let Some(rest) = name.strip_prefix("kx") {
                if let Ok(n) = rest.parse::<usize>() {
                    return truncated_polynomial(field, n);
                }
            }
            Err(Error::Parse(format!(
                "unknown preset algebra `{name}` (known: {})",
                preset_names().join(", ")
            )))
        }
    }
}

fn basis_col(field: FieldSpec, dim: usize, k: usize) -> Matrix {
    Matrix::from_fn(field, dim, 1, |r, _| {
        if r == k {
            crate::linalg::Scalar::one(field)
        } else {
            crate::linalg::Scalar::zero(field)
        }
    })
}

fn cols(field: FieldSpec, dim: usize, idx: &[usize]) -> Matrix {
    let parts: Vec<Matrix> = idx.iter().map(|&k| basis_col(field, dim, k)).collect();
    if parts.is_empty() {
        Matrix::zero(field, dim, 0)
    } else {
        Matrix::hstack(&parts.iter().collect::<Vec<_>>())
    }
}

/// k[x]/(x^n) with basis 1, x, ..., x^{n-1}.
fn truncated_polynomial(field: FieldSpec, n: usize) -> Result<Algebra> {
    if n == 0 {
        return Err(Error::Parse("truncation order must be at least 1".into()));
    }
    let dim = n;
    let zero = Matrix::zero(field, dim, 1);
    let mul: Vec<Vec<Matrix>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i + j < dim {
                        basis_col(field, dim, i + j)
                    } else {
                        zero.clone()
                    }
                })
                .collect()
        })
        .collect();
    let labels = (0..dim)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    Algebra::new(
        field,
        labels,
        if n == 1 { "k".into() } else { format!("kx{n}") },
        basis_col(field, dim, 0),
        &mul,
        vec![basis_col(field, dim, 0)],
        cols(field, dim, &(1..dim).collect::<Vec<_>>()),
    )
}

/// Local algebra on generators x, y with every product of generators zero.
fn rad_square_zero(field: FieldSpec) -> Result<Algebra> {
    let dim = 3;
    let zero = Matrix::zero(field, dim, 1);
    let b = |k| basis_col(field, dim, k);
    let mul = vec![
        vec![b(0), b(1), b(2)],
        vec![b(1), zero.clone(), zero.clone()],
        vec![b(2), zero.clone(), zero.clone()],
    ];
    Algebra::new(
        field,
        vec!["1".into(), "x".into(), "y".into()],
        "rad2".into(),
        b(0),
        &mul,
        vec![b(0)],
        cols(field, dim, &[1, 2]),
    )
}

/// k[x,y]/(x^2, y^2) with basis 1, x, y, xy.
fn commuting_square_zero_pair(field: FieldSpec) -> Result<Algebra> {
    let dim = 4;
    let zero = Matrix::zero(field, dim, 1);
    let b = |k| basis_col(field, dim, k);
    let mul = vec![
        vec![b(0), b(1), b(2), b(3)],
        vec![b(1), zero.clone(), b(3), zero.clone()],
        vec![b(2), b(3), zero.clone(), zero.clone()],
        vec![b(3), zero.clone(), zero.clone(), zero.clone()],
    ];
    Algebra::new(
        field,
        vec!["1".into(), "x".into(), "y".into(), "xy".into()],
        "kxy".into(),
        b(0),
        &mul,
        vec![b(0)],
        cols(field, dim, &[1, 2, 3]),
    )
}

/// Path algebra of 1 --a--> 2 with basis e1, e2, a and composition read
/// right to left, so e2 * a = a = a * e1.
fn arrow_path_algebra(field: FieldSpec) -> Result<Algebra> {
    let dim = 3;
    let zero = Matrix::zero(field, dim, 1);
    let b = |k| basis_col(field, dim, k);
    let mul = vec![
        vec![b(0), zero.clone(), zero.clone()],
        vec![zero.clone(), b(1), b(2)],
        vec![b(2), zero.clone(), zero.clone()],
    ];
    let unit = Matrix::from_fn(field, dim, 1, |r, _| {
        if r < 2 {
            crate::linalg::Scalar::one(field)
        } else {
            crate::linalg::Scalar::zero(field)
        }
    });
    Algebra::new(
        field,
        vec!["e1".into(), "e2".into(), "a".into()],
        "a2".into(),
        unit,
        &mul,
        vec![b(0), b(1)],
        cols(field, dim, &[2]),
    )
}
