//! Module isomorphism testing with three-valued outcomes.
//!
//! An isomorphism is an invertible element of Hom(M, N). After cheap
//! invariant checks, the tester searches the hom space for an invertible
//! combination: exhaustively over a small prime field, by seeded random
//! sampling otherwise. Only an exhausted search certifies a negative.

use super::hom::hom_basis;
use super::{Module, ModuleMap};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Knobs for the isomorphism search; defaults are deterministic.
#[derive(Debug, Clone)]
pub struct IsoOpts {
    pub seed: u64,
    pub retries: usize,
    /// Enumerate all coefficient vectors when the field is finite and
    /// p^dim Hom is at most this bound.
    pub exhaustive_limit: u64,
}

impl Default for IsoOpts {
    fn default() -> Self {
        IsoOpts { seed: 7, retries: 64, exhaustive_limit: 1_000_000 }
    }
}

/// Outcome of an isomorphism test.
#[derive(Debug)]
pub enum IsoOutcome {
    /// An explicit isomorphism.
    Iso(ModuleMap),
    /// Certified non-isomorphism, with the distinguishing reason.
    NotIso(String),
    /// The randomized search found nothing; no conclusion.
    Inconclusive,
}

impl IsoOutcome {
    pub fn is_iso(&self) -> bool {
        matches!(self, IsoOutcome::Iso(_))
    }
}

/// Tests whether two modules are isomorphic.
pub fn is_isomorphic(m: &Module, n: &Module, opts: &IsoOpts) -> IsoOutcome {
    if m.side() != n.side() || !m.acting().same_structure(n.acting()) {
        return IsoOutcome::NotIso("modules live over different algebras".into());
    }
    if m.dim() != n.dim() {
        return IsoOutcome::NotIso(format!("dimensions differ: {} vs {}", m.dim(), n.dim()));
    }
    if m.dim() == 0 {
        return IsoOutcome::Iso(ModuleMap::unchecked(
            m.clone(),
            n.clone(),
            Matrix::zero(m.field(), 0, 0),
        ));
    }
    if m.radical_series_dims() != n.radical_series_dims() {
        return IsoOutcome::NotIso("radical series dimensions differ".into());
    }
    for i in 0..m.acting().num_idempotents() {
        if m.idempotent_part(i).cols() != n.idempotent_part(i).cols() {
            return IsoOutcome::NotIso(format!("idempotent part {i} has different dimension"));
        }
    }
    if m.top_multiplicities() != n.top_multiplicities() {
        return IsoOutcome::NotIso("top multiplicities differ".into());
    }
    let forward = hom_basis(m, n);
    let backward_dim = hom_basis(n, m).len();
    if forward.len() != backward_dim {
        return IsoOutcome::NotIso("hom spaces have asymmetric dimensions".into());
    }
    if forward.is_empty() {
        return IsoOutcome::NotIso("no nonzero homomorphisms".into());
    }

    // Single basis elements first: the common case for canonical maps.
    for f in &forward {
        if f.matrix.is_invertible() {
            return IsoOutcome::Iso(f.clone());
        }
    }

    let h = forward.len();
    let field = m.field();
    if let FieldSpec::Prime(p) = field {
        if let Some(total) = count_projective_vectors(p, h as u32, opts.exhaustive_limit) {
            let _ = total;
            // Exhaustive scan over coefficient vectors with first nonzero
            // coordinate 1 (scalar multiples share invertibility).
            let mut coeffs = vec![0u64; h];
            if let Some(f) = scan(&forward, &mut coeffs, 0, p, m, n) {
                return IsoOutcome::Iso(f);
            }
            return IsoOutcome::NotIso("no invertible combination of homomorphisms exists".into());
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.retries {
        let combo = random_combination(&forward, field, &mut rng);
        if combo.is_invertible() {
            return IsoOutcome::Iso(ModuleMap::unchecked(m.clone(), n.clone(), combo));
        }
    }
    IsoOutcome::Inconclusive
}

/// Number of vectors to scan, or None when it exceeds the limit.
fn count_projective_vectors(p: u64, h: u32, limit: u64) -> Option<u64> {
    // (p^h - 1) / (p - 1), accumulated with an early bail-out.
    let mut total: u64 = 0;
    let mut power: u64 = 1;
    for _ in 0..h {
        total = total.checked_add(power)?;
        power = power.checked_mul(p)?;
        if total > limit {
            return None;
        }
    }
    Some(total)
}

/// Depth-first enumeration of coefficient vectors whose first nonzero
/// entry is 1, testing each combination for invertibility.
fn scan(
    basis: &[ModuleMap],
    coeffs: &mut Vec<u64>,
    first_nonzero: usize,
    p: u64,
    m: &Module,
    n: &Module,
) -> Option<ModuleMap> {
    // Position `first_nonzero` runs over the index of the leading 1.
    let h = basis.len();
    for lead in first_nonzero..h {
        for c in coeffs.iter_mut() {
            *c = 0;
        }
        coeffs[lead] = 1;
        if let Some(f) = scan_tail(basis, coeffs, lead + 1, p, m, n) {
            return Some(f);
        }
    }
    None
}

fn scan_tail(
    basis: &[ModuleMap],
    coeffs: &mut Vec<u64>,
    from: usize,
    p: u64,
    m: &Module,
    n: &Module,
) -> Option<ModuleMap> {
    if from == basis.len() {
        let combo = combination(basis, coeffs, m.field());
        if combo.is_invertible() {
            return Some(ModuleMap::unchecked(m.clone(), n.clone(), combo));
        }
        return None;
    }
    for v in 0..p {
        coeffs[from] = v;
        if let Some(f) = scan_tail(basis, coeffs, from + 1, p, m, n) {
            return Some(f);
        }
    }
    coeffs[from] = 0;
    None
}

fn combination(basis: &[ModuleMap], coeffs: &[u64], field: FieldSpec) -> Matrix {
    let mut acc = Matrix::zero(field, basis[0].matrix.rows(), basis[0].matrix.cols());
    for (f, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&f.matrix.scale(&Scalar::from_int(field, c as i64)));
        }
    }
    acc
}

fn random_combination(basis: &[ModuleMap], field: FieldSpec, rng: &mut ChaCha8Rng) -> Matrix {
    let mut acc = Matrix::zero(field, basis[0].matrix.rows(), basis[0].matrix.cols());
    for f in basis {
        let c: i64 = match field {
            FieldSpec::Prime(p) => rng.gen_range(0..p) as i64,
            FieldSpec::Rationals => rng.gen_range(-9..=9),
        };
        if c != 0 {
            acc = acc.add(&f.matrix.scale(&Scalar::from_int(field, c)));
        }
    }
    acc
}
