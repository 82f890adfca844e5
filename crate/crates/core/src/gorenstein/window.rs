//! Verification of four-term windows of right projectives.
//!
//! Given three composable element-form maps of right projective sums
//!
//! ```text
//! Q(-2)  <--d(-1)--  Q(-1)  <--d(0)--  Q(0)  <--d(1)--  Q(1)
//! ```
//!
//! two independent readings are compared:
//!
//! * exactness of the window at its two interior terms, and
//! * existence of an isomorphism zeta from N = Cok d(1) to M*, where M is
//!   the cokernel of the dualized map d(-1)*, such that the dualized
//!   middle map factors as  d(0)* = c* . zeta* . phi_M . e  through the
//!   cokernel projections c: Q(0) -> N and e: Q(-1)* -> M.
//!
//! The two readings are equivalent; the verifier computes both from
//! scratch and reports them side by side.  When the isomorphism is found
//! it additionally certifies that q = zeta . c is a cokernel of d(1) and
//! that both factorization triangles hold as exact matrix identities.

use crate::complexes::{dual_hom, evaluation, proj_dual, ProjMap};
use crate::error::{Error, Result};
use crate::linalg::{FieldSpec, Matrix};
use crate::modrep::{hom_basis, IsoOpts, Module, ModuleMap, Side, TriState};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Outcome of verifying a window: the two independent readings plus the
/// witnesses produced along the way.
pub struct WindowReport {
    /// Reading one: the window is exact at both interior terms.
    pub exact: bool,
    /// Reading two: a suitable isomorphism N -> M* exists.  `False` is
    /// certified (no solution, a dimension mismatch, or an exhausted
    /// search); `Unknown` means the randomized search gave up.
    pub iso: TriState,
    /// M, the cokernel of the dualized left-hand map.
    pub module: Module,
    /// The dimension of M*.
    pub dual_dim: usize,
    /// N, the cokernel of the right-hand map.
    pub n_module: Module,
    /// The isomorphism N -> M* when one was found.
    pub zeta: Option<ModuleMap>,
    /// The composite q = zeta . c when the isomorphism was found; a
    /// cokernel of the right-hand map.
    pub q: Option<ModuleMap>,
}

impl WindowReport {
    /// Whether the two readings agree; `Unknown` when the isomorphism
    /// search was inconclusive.
    pub fn agreement(&self) -> TriState {
        match self.iso {
            TriState::Unknown => TriState::Unknown,
            TriState::True => {
                if self.exact {
                    TriState::True
                } else {
                    TriState::False
                }
            }
            TriState::False => {
                if self.exact {
                    TriState::False
                } else {
                    TriState::True
                }
            }
        }
    }
}

impl std::fmt::Debug for WindowReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "WindowReport(exact {}, iso {:?}, dim M {}, dim M* {}, dim N {})",
            self.exact,
            self.iso,
            self.module.dim(),
            self.dual_dim,
            self.n_module.dim()
        )
    }
}

fn vec_of(m: &Matrix) -> Matrix {
    let mut out = Matrix::zero(m.field(), m.rows() * m.cols(), 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(r * m.cols() + c, 0, m.get(r, c));
        }
    }
    out
}

fn check_chain(upper: &ProjMap, lower: &ProjMap, what: &str) -> Result<()> {
    if upper.target.tags() != lower.source.tags()
        || !upper.target.acting().same_structure(lower.source.acting())
    {
        return Err(Error::Precondition(format!("{what}: maps do not share a term")));
    }
    if !lower.concrete_matrix().matmul(&upper.concrete_matrix()).is_zero() {
        return Err(Error::Precondition(format!("{what}: composite is not zero")));
    }
    Ok(())
}

/// Verifies a four-term window of right projectives; see the module
/// documentation for the two readings being compared.
///
/// The maps are given in diagram order: `dm1` leaves the term in degree
/// -1, `d0` leaves degree 0, `d1` leaves degree 1.
pub fn verify_window(
    dm1: &ProjMap,
    d0: &ProjMap,
    d1: &ProjMap,
    opts: &IsoOpts,
) -> Result<WindowReport> {
    for f in [dm1, d0, d1] {
        if f.source.side() != Side::Right {
            return Err(Error::Precondition("window terms must be right modules".into()));
        }
    }
    check_chain(d0, dm1, "degrees 0 and -1")?;
    check_chain(d1, d0, "degrees 1 and 0")?;

    let dm1_m = dm1.concrete_matrix();
    let d0_m = d0.concrete_matrix();
    let d1_m = d1.concrete_matrix();

    // Reading one: exactness at the two interior terms.  The composites
    // already vanish, so exactness is a rank count.
    let exact_at_m1 = d0_m.rank() == dm1.source.dim() - dm1_m.rank();
    let exact_at_0 = d1_m.rank() == d0.source.dim() - d0_m.rank();
    let exact = exact_at_m1 && exact_at_0;

    // Reading two.  M = Cok(d(-1)*), with projection e.
    let (m_module, e) = dm1.dual().concrete().cokernel();
    let m_module = m_module.relabel("window-M");
    let ev = evaluation(&m_module);
    let dual_dim = ev.dual.dim();
    // N = Cok(d(1)), with projection c.
    let (n_module, c) = d1.concrete().cokernel();
    let n_module = n_module.relabel("window-N");

    let mut report = WindowReport {
        exact,
        iso: TriState::False,
        module: m_module.clone(),
        dual_dim,
        n_module: n_module.clone(),
        zeta: None,
        q: None,
    };

    if n_module.dim() != dual_dim {
        // No isomorphism can exist; reading two is certified false.
        return finish(report);
    }

    // Express the target equation d(0)* = c* . zeta* . phi . e for an
    // unknown zeta as a linear system over a hom basis.
    let nstar = crate::complexes::a_dual(&n_module);
    let q0_dual = proj_dual(&d0.source);
    let c_star = dual_hom(&c, &nstar, &q0_dual);
    let d0_dual = d0.dual().concrete_matrix();
    let phi_e = ev.map.matrix.matmul(&e.matrix);

    let zetas = hom_basis(&n_module, &ev.dual.module);
    let t_mats: Vec<Matrix> = zetas
        .iter()
        .map(|z| {
            let z_star = dual_hom(z, &ev.double, &nstar);
            c_star.matrix.matmul(&z_star.matrix).matmul(&phi_e)
        })
        .collect();

    if zetas.is_empty() {
        // Hom(N, M*) = 0: an isomorphism exists only in the zero case,
        // and the equation must then hold with an empty right-hand side.
        if n_module.dim() == 0 && d0_dual.is_zero() {
            report.iso = TriState::True;
            let zeta = ModuleMap::unchecked(
                n_module.clone(),
                ev.dual.module.clone(),
                Matrix::zero(n_module.field(), 0, 0),
            );
            let q = c.compose(&zeta);
            certify(dm1, d0, d1, &m_module, &ev, &e, &q)?;
            report.q = Some(q);
            report.zeta = Some(zeta);
        }
        return finish(report);
    }

    let cols: Vec<Matrix> = t_mats.iter().map(vec_of).collect();
    let col_refs: Vec<&Matrix> = cols.iter().collect();
    let system = Matrix::hstack(&col_refs);
    let rhs = vec_of(&d0_dual);
    let particular = match system.solve(&rhs) {
        Some(x) => x,
        None => return finish(report), // equation unsolvable: certified false
    };
    let kernel = system.kernel_basis();

    let zeta_of = |x: &Matrix| -> Matrix {
        let mut z = Matrix::zero(n_module.field(), dual_dim, n_module.dim());
        for (b, zb) in zetas.iter().enumerate() {
            let coeff = x.get(b, 0);
            if !coeff.is_zero() {
                z = z.add(&zb.matrix.scale(&coeff));
            }
        }
        z
    };

    let mut found: Option<Matrix> = None;
    let mut certified_false = false;
    let zp = zeta_of(&particular);
    if zp.is_invertible() {
        found = Some(zp);
    } else if kernel.cols() == 0 {
        certified_false = true;
    } else if let FieldSpec::Prime(p) = n_module.field() {
        let h = kernel.cols() as u32;
        let total = (p as u128).checked_pow(h);
        if let Some(total) = total.filter(|t| *t <= opts.exhaustive_limit as u128) {
            // Enumerate the whole affine solution space.
            let mut counter = vec![0u64; kernel.cols()];
            let mut exhausted = false;
            'outer: for _ in 0..total {
                let mut x = particular.clone();
                for (k, &ck) in counter.iter().enumerate() {
                    if ck != 0 {
                        let s = crate::linalg::Scalar::from_int(n_module.field(), ck as i64);
                        x = x.add(&kernel.column(k).scale(&s));
                    }
                }
                let z = zeta_of(&x);
                if z.is_invertible() {
                    found = Some(z);
                    break 'outer;
                }
                // Increment the base-p counter.
                let mut k = 0;
                loop {
                    if k == counter.len() {
                        exhausted = true;
                        break 'outer;
                    }
                    counter[k] += 1;
                    if counter[k] < p {
                        break;
                    }
                    counter[k] = 0;
                    k += 1;
                }
            }
            if found.is_none() && exhausted {
                certified_false = true;
            }
        }
    }
    if found.is_none() && !certified_false {
        // Randomized search over the affine solution space.
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.retries {
            let t = Matrix::random(n_module.field(), kernel.cols(), 1, &mut rng);
            let x = particular.add(&kernel.matmul(&t));
            let z = zeta_of(&x);
            if z.is_invertible() {
                found = Some(z);
                break;
            }
        }
    }

    match found {
        Some(z) => {
            report.iso = TriState::True;
            let zeta = ModuleMap::unchecked(n_module.clone(), ev.dual.module.clone(), z);
            let q = c.compose(&zeta);
            certify(dm1, d0, d1, &m_module, &ev, &e, &q)?;
            report.q = Some(q);
            report.zeta = Some(zeta);
        }
        None if certified_false => report.iso = TriState::False,
        None => report.iso = TriState::Unknown,
    }
    finish(report)
}

/// A decided disagreement between the two readings would refute the
/// equivalence they are asserted to satisfy; flag it loudly.
fn finish(report: WindowReport) -> Result<WindowReport> {
    if report.agreement() == TriState::False {
        return Err(Error::Internal(format!(
            "window readings disagree: exact = {}, iso = {:?}",
            report.exact, report.iso
        )));
    }
    Ok(report)
}

/// With the isomorphism in hand, certify the derived identities: q is a
/// cokernel of the degree-one map and both factorization triangles hold
/// exactly.
fn certify(
    dm1: &ProjMap,
    d0: &ProjMap,
    d1: &ProjMap,
    m_module: &Module,
    ev: &crate::complexes::Evaluation,
    e: &ModuleMap,
    q: &ModuleMap,
) -> Result<()> {
    let internal = |msg: &str| Error::Internal(msg.into());
    let d1_m = d1.concrete_matrix();
    if !q.matrix.matmul(&d1_m).is_zero() {
        return Err(internal("q does not kill the degree-one image"));
    }
    if q.matrix.rank() != ev.dual.dim()
        || d0.source.dim() - q.matrix.rank() != d1_m.rank()
    {
        return Err(internal("q is not a cokernel of the degree-one map"));
    }

    // Triangle one: d(0) = e* . q, reading e*: M* -> Q(-1) through the
    // identification of a projective sum with its double dual.
    let qm1_star_sum = dm1.dual().target.clone();
    let qm1_dd = proj_dual(&qm1_star_sum);
    let e_star = dual_hom(e, &ev.dual, &qm1_dd);
    if d0.concrete_matrix() != e_star.matrix.matmul(&q.matrix) {
        return Err(internal("the factorization d(0) = e* . q fails"));
    }

    // Triangle two: d(0)* = q* . phi . e.
    let q0_dual = proj_dual(&d0.source);
    let q_star = dual_hom(q, &ev.double, &q0_dual);
    let composite = q_star.matrix.matmul(&ev.map.matrix).matmul(&e.matrix);
    if d0.dual().concrete_matrix() != composite {
        return Err(internal("the factorization d(0)* = q* . phi . e fails"));
    }
    let _ = m_module;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;
    use crate::complexes::{ProjSum, Resolution};
    use crate::linalg::FieldSpec;
    use crate::modrep::Module;

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    #[test]
    fn resolution_windows_are_exact_and_admit_the_isomorphism() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let s = Module::simple(&a, Side::Right, 0);
        let mut res = Resolution::new(&s);
        res.ensure(3);
        let report =
            verify_window(res.map(1), res.map(2), res.map(3), &IsoOpts::default()).unwrap();
        assert!(report.exact);
        assert_eq!(report.iso, TriState::True);
        assert_eq!(report.agreement(), TriState::True);
        assert_eq!(report.module.dim(), report.dual_dim);
        assert!(report.q.is_some());
    }

    #[test]
    fn zero_differentials_on_mismatched_terms_fail_both_readings() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let qm2 = ProjSum::new(&a.opposite(), Side::Right, vec![0]);
        let qm1 = ProjSum::new(&a.opposite(), Side::Right, vec![0]);
        let q0 = ProjSum::new(&a.opposite(), Side::Right, vec![0, 0]);
        let q1 = ProjSum::new(&a.opposite(), Side::Right, vec![0]);
        let dm1 = ProjMap::zero(qm1.clone(), qm2);
        let d0 = ProjMap::zero(q0.clone(), qm1);
        let d1 = ProjMap::zero(q1, q0);
        let report = verify_window(&dm1, &d0, &d1, &IsoOpts::default()).unwrap();
        assert!(!report.exact);
        // M is all of Q(-1)*, so M* has the dimension of the algebra while
        // N is the whole 2-copy sum: certified by the dimension count.
        assert_eq!(report.iso, TriState::False);
        assert_eq!(report.agreement(), TriState::True);
    }

    #[test]
    fn zero_differentials_on_matching_terms_fail_via_the_search() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let sums: Vec<ProjSum> =
            (0..4).map(|_| ProjSum::new(&a.opposite(), Side::Right, vec![0])).collect();
        let dm1 = ProjMap::zero(sums[1].clone(), sums[0].clone());
        let d0 = ProjMap::zero(sums[2].clone(), sums[1].clone());
        let d1 = ProjMap::zero(sums[3].clone(), sums[2].clone());
        let report = verify_window(&dm1, &d0, &d1, &IsoOpts::default()).unwrap();
        assert!(!report.exact);
        // dim N == dim M* here, so falseness must come from exhausting
        // the solution space of the factorization equation.
        assert_eq!(report.n_module.dim(), report.dual_dim);
        assert_eq!(report.iso, TriState::False);
        assert_eq!(report.agreement(), TriState::True);
    }

    #[test]
    fn non_composing_maps_are_rejected() {
        let a = preset_algebra(f2(), "kx3", None).unwrap();
        let s = Module::simple(&a, Side::Right, 0);
        let mut res = Resolution::new(&s);
        res.ensure(3);
        // map(1) after map(1) is x-multiplication twice, which is not zero
        // in degree three truncation... but shapes force a term check
        // first: map(1)'s source is map(1)'s own source, not its target.
        match verify_window(res.map(1), res.map(1), res.map(3), &IsoOpts::default()) {
            Err(Error::Precondition(_)) => {}
            other => panic!("expected a precondition failure, got {other:?}"),
        }
    }

    #[test]
    fn finite_resolution_tail_gives_the_vacuous_isomorphism() {
        let a = preset_algebra(f2(), "a2", None).unwrap();
        let s = Module::simple(&a, Side::Right, 1);
        let mut res = Resolution::new(&s);
        res.ensure(3);
        assert_eq!(res.term(1).num_summands(), 1);
        assert_eq!(res.term(2).num_summands(), 0, "projective dimension one");
        let report =
            verify_window(res.map(1), res.map(2), res.map(3), &IsoOpts::default()).unwrap();
        assert!(report.exact);
        assert_eq!(report.iso, TriState::True);
        // M is the cokernel of the dualized presentation; its dual
        // vanishes here, matching the zero N.
        assert_eq!(report.dual_dim, 0);
        assert_eq!(report.n_module.dim(), 0);
    }
}
