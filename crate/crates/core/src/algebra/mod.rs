//! Finite-dimensional split basic algebras given by structure constants.
//!
//! An algebra is described by a basis b_0..b_{d-1}, the multiplication table
//! b_i * b_j = sum_k c_{ij}^k b_k, the unit, a complete set of orthogonal
//! primitive idempotents, and a basis of the Jacobson radical. Construction
//! verifies every declared invariant and rejects bad data with a named error.

use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix};
use std::fmt;
use std::sync::Arc;

mod presets;

pub use presets::{preset_algebra, preset_names};

/// Cheap-clone handle to an immutable, verified algebra.
#[derive(Clone)]
pub struct Algebra {
    data: Arc<AlgebraData>,
}

struct AlgebraData {
    field: FieldSpec,
    dim: usize,
    labels: Vec<String>,
    name: String,
    unit: Matrix,
    /// left[i] is the matrix of x -> b_i * x; its (k, j) entry is c_{ij}^k.
    left: Vec<Matrix>,
    /// right[j] is the matrix of x -> x * b_j; its (k, i) entry is c_{ij}^k.
    right: Vec<Matrix>,
    idempotents: Vec<Matrix>,
    /// Canonical basis of the radical, and of its powers J^0, J^1, J^2, ...
    /// ending with the first zero power.
    radical_powers: Vec<Matrix>,
    /// Idempotents together with lifts of a basis of J/J^2 generate the
    /// algebra; intertwining constraints only need these generators.
    radical_generators: Matrix,
    /// proj_bases[i] is the canonical basis of A e_i inside A.
    proj_bases: Vec<Matrix>,
}

impl Algebra {
    /// Verifies and builds an algebra from raw structure data.
    ///
    /// `mul[i][j]` is the coefficient vector of b_i * b_j.
    pub fn new(
        field: FieldSpec,
        labels: Vec<String>,
        name: String,
        unit: Matrix,
        mul: &[Vec<Matrix>],
        idempotents: Vec<Matrix>,
        radical: Matrix,
    ) -> Result<Algebra> {
        field.validate()?;
        let dim = labels.len();
        if dim == 0 {
            return Err(Error::InvalidAlgebra("dimension zero".into()));
        }
        let bad_shape = |what: &str| Error::InvalidAlgebra(format!("{what} has wrong shape"));
        if unit.rows() != dim || unit.cols() != 1 {
            return Err(bad_shape("unit"));
        }
        if mul.len() != dim || mul.iter().any(|row| row.len() != dim) {
            return Err(bad_shape("multiplication table"));
        }
        for row in mul {
            for v in row {
                if v.rows() != dim || v.cols() != 1 {
                    return Err(bad_shape("multiplication table entry"));
                }
            }
        }
        if radical.rows() != dim {
            return Err(bad_shape("radical basis"));
        }
        for e in &idempotents {
            if e.rows() != dim || e.cols() != 1 {
                return Err(bad_shape("idempotent"));
            }
        }

        // Left and right multiplication tables.
        let left: Vec<Matrix> = (0..dim)
            .map(|i| Matrix::from_fn(field, dim, dim, |k, j| mul[i][j].get(k, 0)))
            .collect();
        let right: Vec<Matrix> = (0..dim)
            .map(|j| Matrix::from_fn(field, dim, dim, |k, i| mul[i][j].get(k, 0)))
            .collect();

        let mult_left = |v: &Matrix| -> Matrix {
            let mut acc = Matrix::zero(field, dim, dim);
            for (i, li) in left.iter().enumerate() {
                let vi = v.get(i, 0);
                if !vi.is_zero() {
                    acc = acc.add(&li.scale(&vi));
                }
            }
            acc
        };

        // Unit law on both sides.
        if !mult_left(&unit).is_identity() {
            return Err(Error::InvalidAlgebra("unit law fails on the left".into()));
        }
        let mut right_unit = Matrix::zero(field, dim, dim);
        for (j, rj) in right.iter().enumerate() {
            let uj = unit.get(j, 0);
            if !uj.is_zero() {
                right_unit = right_unit.add(&rj.scale(&uj));
            }
        }
        if !right_unit.is_identity() {
            return Err(Error::InvalidAlgebra("unit law fails on the right".into()));
        }

        // Associativity: L(b_i) L(b_j) = L(b_i b_j) for all pairs.
        for i in 0..dim {
            for j in 0..dim {
                let lhs = left[i].matmul(&left[j]);
                let rhs = mult_left(&mul[i][j]);
                if lhs != rhs {
                    return Err(Error::InvalidAlgebra(format!(
                        "associativity fails at basis pair ({i}, {j})"
                    )));
                }
            }
        }

        // Idempotents: orthogonal, idempotent, nonzero, summing to the unit.
        let r = idempotents.len();
        if r == 0 {
            return Err(Error::InvalidAlgebra("no idempotents given".into()));
        }
        let mut total = Matrix::zero(field, dim, 1);
        for (i, e) in idempotents.iter().enumerate() {
            if e.is_zero() {
                return Err(Error::InvalidAlgebra(format!("idempotent {i} is zero")));
            }
            total = total.add(e);
            for (j, f) in idempotents.iter().enumerate() {
                let prod = mult_left(e).matmul(f);
                let expected = if i == j { e.clone() } else { Matrix::zero(field, dim, 1) };
                if prod != expected {
                    return Err(Error::InvalidAlgebra(format!(
                        "idempotent law fails at pair ({i}, {j})"
                    )));
                }
            }
        }
        if total != unit {
            return Err(Error::InvalidAlgebra("idempotents do not sum to the unit".into()));
        }

        // Radical: a nilpotent two-sided ideal of codimension r.
        let rad = radical.col_space_basis();
        let s = rad.cols();
        for i in 0..dim {
            if !rad.spans(&left[i].matmul(&rad)) {
                return Err(Error::InvalidAlgebra(format!(
                    "radical is not a left ideal (basis element {i})"
                )));
            }
            if !rad.spans(&right[i].matmul(&rad)) {
                return Err(Error::InvalidAlgebra(format!(
                    "radical is not a right ideal (basis element {i})"
                )));
            }
        }
        let mut radical_powers = vec![Matrix::identity(field, dim), rad.clone()];
        loop {
            let prev = radical_powers.last().unwrap();
            if prev.cols() == 0 {
                break;
            }
            if radical_powers.len() > dim + 1 {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            let mut products = Vec::new();
            for x in 0..rad.cols() {
                let lx = mult_left(&rad.column(x));
                products.push(lx.matmul(prev));
            }
            let span = Matrix::hstack(&products.iter().collect::<Vec<_>>()).col_space_basis();
            // J^{n+1} must shrink strictly until it vanishes.
            if span.cols() >= prev.cols() && prev.cols() > 0 {
                return Err(Error::InvalidAlgebra("radical is not nilpotent".into()));
            }
            radical_powers.push(span);
        }
        if dim - s != r {
            return Err(Error::InvalidAlgebra(format!(
                "not split basic: dim(A/J) = {} but {} idempotents were given",
                dim - s,
                r
            )));
        }

        // Lifts of a basis of J/J^2, chosen greedily from the radical basis.
        let j2 = &radical_powers[2.min(radical_powers.len() - 1)];
        let mut span = j2.clone();
        let mut lifts: Vec<Matrix> = Vec::new();
        for c in 0..rad.cols() {
            let v = rad.column(c);
            if !span.spans(&v) {
                lifts.push(v.clone());
                span = Matrix::hstack(&[&span, &v]).col_space_basis();
            }
        }
        let radical_generators = if lifts.is_empty() {
            Matrix::zero(field, dim, 0)
        } else {
            Matrix::hstack(&lifts.iter().collect::<Vec<_>>())
        };

        // Canonical bases of the left projectives A e_i.
        let proj_bases: Vec<Matrix> = idempotents
            .iter()
            .map(|e| {
                let mut re = Matrix::zero(field, dim, dim);
                for (j, rj) in right.iter().enumerate() {
                    let ej = e.get(j, 0);
                    if !ej.is_zero() {
                        re = re.add(&rj.scale(&ej));
                    }
                }
                re.col_space_basis()
            })
            .collect();

        Ok(Algebra {
            data: Arc::new(AlgebraData {
                field,
                dim,
                labels,
                name,
                unit,
                left,
                right,
                idempotents,
                radical_powers,
                radical_generators,
                proj_bases,
            }),
        })
    }

    pub fn field(&self) -> FieldSpec {
        self.data.field
    }

    pub fn dim(&self) -> usize {
        self.data.dim
    }

    pub fn name(&self) -> &str {
        &self.data.name
    }

    pub fn labels(&self) -> &[String] {
        &self.data.labels
    }

    pub fn unit(&self) -> &Matrix {
        &self.data.unit
    }

    pub fn num_idempotents(&self) -> usize {
        self.data.idempotents.len()
    }

    pub fn idempotent(&self, i: usize) -> &Matrix {
        &self.data.idempotents[i]
    }

    /// Matrix of left multiplication x -> b_i * x.
    pub fn left_table(&self, i: usize) -> &Matrix {
        &self.data.left[i]
    }

    /// Matrix of right multiplication x -> x * b_i.
    pub fn right_table(&self, i: usize) -> &Matrix {
        &self.data.right[i]
    }

    /// Matrix of x -> v * x for an arbitrary element v.
    pub fn left_mult_matrix(&self, v: &Matrix) -> Matrix {
        let mut acc = Matrix::zero(self.field(), self.dim(), self.dim());
        for i in 0..self.dim() {
            let vi = v.get(i, 0);
            if !vi.is_zero() {
                acc = acc.add(&self.data.left[i].scale(&vi));
            }
        }
        acc
    }

    /// Matrix of x -> x * v for an arbitrary element v.
    pub fn right_mult_matrix(&self, v: &Matrix) -> Matrix {
        let mut acc = Matrix::zero(self.field(), self.dim(), self.dim());
        for j in 0..self.dim() {
            let vj = v.get(j, 0);
            if !vj.is_zero() {
                acc = acc.add(&self.data.right[j].scale(&vj));
            }
        }
        acc
    }

    /// Product of two elements given as coefficient columns.
    pub fn mult(&self, x: &Matrix, y: &Matrix) -> Matrix {
        self.left_mult_matrix(x).matmul(y)
    }

    /// Canonical basis of J^n as columns; J^0 is the full algebra.
    pub fn radical_power(&self, n: usize) -> Matrix {
        let ps = &self.data.radical_powers;
        if n < ps.len() {
            ps[n].clone()
        } else {
            Matrix::zero(self.field(), self.dim(), 0)
        }
    }

    pub fn radical_basis(&self) -> &Matrix {
        &self.data.radical_powers[1]
    }

    pub fn radical_dim(&self) -> usize {
        self.radical_basis().cols()
    }

    /// Dimensions of J^0, J^1, ... down to the first zero power.
    pub fn radical_power_dims(&self) -> Vec<usize> {
        self.data.radical_powers.iter().map(|m| m.cols()).collect()
    }

    /// Smallest n with J^n = 0.
    pub fn loewy_length(&self) -> usize {
        self.data.radical_powers.len() - 1
    }

    /// Lifts of a basis of J/J^2; together with the idempotents these
    /// generate the algebra, so module maps need only intertwine them.
    pub fn radical_generators(&self) -> &Matrix {
        &self.data.radical_generators
    }

    /// Canonical basis of the left projective A e_i inside A.
    pub fn proj_basis(&self, i: usize) -> &Matrix {
        &self.data.proj_bases[i]
    }

    /// The opposite algebra: same space, reversed multiplication.
    pub fn opposite(&self) -> Algebra {
        let d = &*self.data;
        // Reversing multiplication swaps the roles of the two tables; every
        // verified invariant transfers, so rebuild the derived data directly.
        let field = d.field;
        let dim = d.dim;
        let mult_left = |v: &Matrix| -> Matrix {
            let mut acc = Matrix::zero(field, dim, dim);
            for i in 0..dim {
                let vi = v.get(i, 0);
                if !vi.is_zero() {
                    acc = acc.add(&d.right[i].scale(&vi));
                }
            }
            acc
        };
        let proj_bases: Vec<Matrix> = d
            .idempotents
            .iter()
            .map(|e| {
                let mut re = Matrix::zero(field, dim, dim);
                for j in 0..dim {
                    let ej = e.get(j, 0);
                    if !ej.is_zero() {
                        re = re.add(&d.left[j].scale(&ej));
                    }
                }
                re.col_space_basis()
            })
            .collect();
        let mut radical_powers = vec![Matrix::identity(field, dim), d.radical_powers[1].clone()];
        loop {
            let prev = radical_powers.last().unwrap();
            if prev.cols() == 0 {
                break;
            }
            let rad = &radical_powers[1];
            let mut products = Vec::new();
            for x in 0..rad.cols() {
                products.push(mult_left(&rad.column(x)).matmul(prev));
            }
            let span = Matrix::hstack(&products.iter().collect::<Vec<_>>()).col_space_basis();
            radical_powers.push(span);
        }
        let j2 = &radical_powers[2.min(radical_powers.len() - 1)];
        let rad = radical_powers[1].clone();
        let mut span = j2.clone();
        let mut lifts: Vec<Matrix> = Vec::new();
        for c in 0..rad.cols() {
            let v = rad.column(c);
            if !span.spans(&v) {
                lifts.push(v.clone());
                span = Matrix::hstack(&[&span, &v]).col_space_basis();
            }
        }
        let radical_generators = if lifts.is_empty() {
            Matrix::zero(field, dim, 0)
        } else {
            Matrix::hstack(&lifts.iter().collect::<Vec<_>>())
        };
        Algebra {
            data: Arc::new(AlgebraData {
                field,
                dim,
                labels: d.labels.clone(),
                name: format!("{}^op", d.name.trim_end_matches("^op")),
                unit: d.unit.clone(),
                left: d.right.clone(),
                right: d.left.clone(),
                idempotents: d.idempotents.clone(),
                radical_powers,
                radical_generators,
                proj_bases,
            }),
        }
    }

    /// Structural equality ignoring labels and name.
    pub fn same_structure(&self, other: &Algebra) -> bool {
        if Arc::ptr_eq(&self.data, &other.data) {
            return true;
        }
        self.data.field == other.data.field
            && self.data.dim == other.data.dim
            && self.data.unit == other.data.unit
            && self.data.left == other.data.left
            && self.data.idempotents == other.data.idempotents
            && self.data.radical_powers[1] == other.data.radical_powers[1]
    }

    /// The multiplication table entry b_i * b_j as a coefficient column.
    pub fn basis_product(&self, i: usize, j: usize) -> Matrix {
        self.data.left[i].column(j)
    }

    /// e_i A e_j as a canonical column basis.
    pub fn corner_basis(&self, i: usize, j: usize) -> Matrix {
        let l = self.left_mult_matrix(self.idempotent(i));
        let r = self.right_mult_matrix(self.idempotent(j));
        l.matmul(&r).col_space_basis()
    }

    /// Structural classification; self-injectivity lives in the module layer.
    pub fn classify(&self) -> Classification {
        let r = self.num_idempotents();
        let local = r == 1;
        let dims = self.radical_power_dims();
        let j2 = dims.get(2).copied().unwrap_or(0);
        let j3 = dims.get(3).copied().unwrap_or(0);
        let short_local = local && j3 == 0;
        let hilbert = if short_local {
            Some((self.radical_dim() - j2, j2))
        } else {
            None
        };
        // Connectivity of the idempotent graph: i ~ j if e_i A e_j or
        // e_j A e_i is nonzero.
        let mut comp: Vec<usize> = (0..r).collect();
        fn find(comp: &mut Vec<usize>, i: usize) -> usize {
            if comp[i] != i {
                let root = find(comp, comp[i]);
                comp[i] = root;
            }
            comp[i]
        }
        for i in 0..r {
            for j in i + 1..r {
                if self.corner_basis(i, j).cols() > 0 || self.corner_basis(j, i).cols() > 0 {
                    let (a, b) = (find(&mut comp, i), find(&mut comp, j));
                    comp[a] = b;
                }
            }
        }
        let roots: std::collections::BTreeSet<usize> = (0..r).map(|i| find(&mut comp, i)).collect();
        Classification {
            dim: self.dim(),
            field: self.field(),
            num_simples: r,
            radical_dims: dims,
            loewy_length: self.loewy_length(),
            local,
            short_local,
            hilbert_type: hilbert,
            connected: roots.len() == 1,
        }
    }
}

impl PartialEq for Algebra {
    fn eq(&self, other: &Self) -> bool {
        self.same_structure(other)
    }
}

impl fmt::Debug for Algebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Algebra({}, dim {}, {} over {})",
            self.name(),
            self.dim(),
            self.num_idempotents(),
            self.field()
        )
    }
}

/// Structural facts about an algebra, independent of any module computation.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Classification {
    pub dim: usize,
    pub field: FieldSpec,
    pub num_simples: usize,
    pub radical_dims: Vec<usize>,
    pub loewy_length: usize,
    pub local: bool,
    pub short_local: bool,
    /// (dim J/J^2, dim J^2) for short local algebras.
    pub hilbert_type: Option<(usize, usize)>,
    pub connected: bool,
}

/// A linear map between algebras claimed to be an isomorphism.
pub struct AlgebraMap {
    pub source: Algebra,
    pub target: Algebra,
    pub matrix: Matrix,
}

impl AlgebraMap {
    /// Checks bijectivity, unit preservation, and multiplicativity.
    pub fn verify_isomorphism(&self) -> Result<()> {
        let (a, b, h) = (&self.source, &self.target, &self.matrix);
        if a.field() != b.field() {
            return Err(Error::FieldMismatch("algebra map across fields".into()));
        }
        if a.dim() != b.dim() || h.rows() != a.dim() || h.cols() != a.dim() {
            return Err(Error::AlgebraMismatch("algebra map has wrong shape".into()));
        }
        if !h.is_invertible() {
            return Err(Error::AlgebraMismatch("algebra map is not bijective".into()));
        }
        if h.matmul(a.unit()) != *b.unit() {
            return Err(Error::AlgebraMismatch("algebra map does not fix the unit".into()));
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = h.matmul(&a.basis_product(i, j));
                let rhs = b.mult(&h.column(i), &h.column(j));
                if lhs != rhs {
                    return Err(Error::AlgebraMismatch(format!(
                        "algebra map is not multiplicative at basis pair ({i}, {j})"
                    )));
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    #[test]
    fn point_algebra_loads_and_classifies() {
        let a = preset_algebra(f2(), "k", None).unwrap();
        assert_eq!(a.dim(), 1);
        let c = a.classify();
        assert!(c.local && c.connected && c.short_local);
        assert_eq!(c.radical_dims, vec![1, 0]);
    }

    #[test]
    fn truncated_polynomial_algebra_has_expected_radical_series() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        assert_eq!(a.radical_power_dims(), vec![3, 2, 1, 0]);
        let c = a.classify();
        assert!(c.local && c.short_local);
        assert_eq!(c.hilbert_type, Some((1, 1)));
        assert_eq!(c.loewy_length, 3);
    }

    #[test]
    fn rad_square_zero_algebra_classifies_as_short_local() {
        let a = preset_algebra(f2(), "rad2", None).unwrap();
        assert_eq!(a.radical_power_dims(), vec![3, 2, 0]);
        let c = a.classify();
        assert!(c.local && c.short_local);
        assert_eq!(c.hilbert_type, Some((2, 0)));
    }

    #[test]
    fn path_algebra_of_two_vertices_is_connected_and_not_local() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let c = a.classify();
        assert!(!c.local && c.connected);
        assert_eq!(c.num_simples, 2);
        assert_eq!(a.proj_basis(0).cols() , 2);
        assert_eq!(a.proj_basis(1).cols(), 1);
    }

    #[test]
    fn non_associative_table_is_rejected_by_name() {
        // Perturb k[x]/(x^2): declare x*x = 1, which breaks associativity
        // against the nilpotency structure... it actually stays associative
        // (that is k[x]/(x^2-1)), so break the table asymmetrically instead.
        let field = f2();
        let e = Matrix::from_ints(field, &[&[1], &[0]]);
        let x = Matrix::from_ints(field, &[&[0], &[1]]);
        let zero = Matrix::zero(field, 2, 1);
        // x*x = x but x*(x*x) vs (x*x)*x differ once we also set
        // mul[1][1] inconsistently with the derived left table: use
        // a table where b1*b1 = b0 but b1*b0 = b1, b0*b1 = b1, making
        // (b1 b1) b1 = b1 while b1 (b1 b1) = b1; that is associative too.
        // A genuinely non-associative table: b1*b1 = b1, b1*b0 = 0.
        let mul = vec![
            vec![e.clone(), x.clone()],
            vec![zero.clone(), x.clone()],
        ];
        let err = Algebra::new(
            field,
            vec!["e".into(), "x".into()],
            "bad".into(),
            e.clone(),
            &mul,
            vec![e.clone()],
            x.clone(),
        )
        .unwrap_err();
        let msg = err.to_string();
        assert!(
            msg.contains("associativity") || msg.contains("unit law"),
            "unexpected error: {msg}"
        );
    }

    #[test]
    fn non_nilpotent_radical_is_rejected() {
        // k x k with the second factor declared "radical".
        let field = f2();
        let b0 = Matrix::from_ints(field, &[&[1], &[0]]);
        let b1 = Matrix::from_ints(field, &[&[0], &[1]]);
        let zero = Matrix::zero(field, 2, 1);
        let unit = Matrix::from_ints(field, &[&[1], &[1]]);
        let mul = vec![
            vec![b0.clone(), zero.clone()],
            vec![zero.clone(), b1.clone()],
        ];
        let err = Algebra::new(
            field,
            vec!["a".into(), "b".into()],
            "bad".into(),
            unit,
            &mul,
            vec![b0.clone(), b1.clone()],
            b1.clone(),
        )
        .unwrap_err();
        assert!(err.to_string().contains("nilpotent"), "got: {err}");
    }

    #[test]
    fn opposite_of_commutative_algebra_is_identical() {
        let a = preset_algebra(FieldSpec::Rationals, "kx3", None).unwrap();
        let op = a.opposite();
        assert!(a.same_structure(&op));
    }

    #[test]
    fn opposite_is_an_involution_and_reverses_projectives() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let op = a.opposite();
        assert!(!a.same_structure(&op));
        assert!(a.same_structure(&op.opposite()));
        // A e_0 has dimension 2; e_0 A (a projective of the opposite) has 1.
        assert_eq!(op.proj_basis(0).cols(), 1);
        assert_eq!(op.proj_basis(1).cols(), 2);
        assert_eq!(op.radical_power_dims(), a.radical_power_dims());
    }

    #[test]
    fn corner_spaces_detect_disconnectedness() {
        // k x k via the one-point extension layout is exercised elsewhere;
        // build it directly here.
        let field = f2();
        let b0 = Matrix::from_ints(field, &[&[1], &[0]]);
        let b1 = Matrix::from_ints(field, &[&[0], &[1]]);
        let zero = Matrix::zero(field, 2, 1);
        let unit = Matrix::from_ints(field, &[&[1], &[1]]);
        let mul = vec![
            vec![b0.clone(), zero.clone()],
            vec![zero.clone(), b1.clone()],
        ];
        let a = Algebra::new(
            field,
            vec!["a".into(), "b".into()],
            "kxk".into(),
            unit,
            &mul,
            vec![b0, b1],
            Matrix::zero(field, 2, 0),
        )
        .unwrap();
        let c = a.classify();
        assert!(!c.connected && !c.local);
        assert_eq!(c.radical_dims, vec![2, 0]);
    }

    #[test]
    fn radical_annihilates_every_simple_quotient() {
        for name in ["kx2", "kx3", "rad2", "kxy", "a2"] {
            let a = preset_algebra(f2(), name, None).unwrap();
            // J * J^(l-1) = 0 exactly at the Loewy length.
            let l = a.loewy_length();
            assert_eq!(a.radical_power(l).cols(), 0);
            assert!(a.radical_power(l - 1).cols() > 0);
        }
    }

    #[test]
    fn algebra_map_verifier_accepts_identity_and_rejects_garbage() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let id = AlgebraMap {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::identity(f2(), 3),
        };
        id.verify_isomorphism().unwrap();
        let swap = AlgebraMap {
            source: a.clone(),
            target: a.clone(),
            matrix: Matrix::from_ints(f2(), &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]]),
        };
        assert!(swap.verify_isomorphism().is_err());
    }
}
