//! Auditors for the structural statements that tie syzygies, transposes,
//! duals, and the evaluation map together, plus a ladder of open-question
//! checks that hunts for counterexample candidates.
//!
//! Each auditor re-verifies one statement on a concrete module, using only
//! exact arithmetic.  Statements that are mechanically provable from the
//! recorded preconditions are asserted: a decided violation is reported as
//! [`Error::Internal`], because over exact arithmetic it can only mean a
//! bug in this library.  Open questions are never asserted; a hit is
//! packaged as a re-verifiable [`Candidate`] with an explicit truncation
//! caveat, since Ext vanishing is only ever checked up to a finite bound.

use crate::algebra::Algebra;
use crate::complexes::{
    a_dual, cosyzygy_embedding, dual_hom, evaluation, projective_dimension, syzygy, transpose,
};
use crate::error::{Error, Result};
use crate::gorenstein::main_complex::build_main_complex;
use crate::gorenstein::verdict::{
    is_inf_torsionfree, is_sgp, is_torsionless, nunke_check, BoundedVerdict, VerdictStatus,
};
use crate::linalg::Matrix;
use crate::modrep::{
    is_injective, is_isomorphic, is_projective, is_self_injective, reduce, IsoOpts, IsoOutcome,
    Module, Side, TriState,
};

/// Whether the module has no nonzero projective direct summand.
fn is_reduced(m: &Module) -> bool {
    reduce(m).0.dim() == m.dim()
}

/// Runs an isomorphism test and retries with fresh deterministic seeds when
/// the randomized search is inconclusive.  A certified non-isomorphism is
/// returned as `False` immediately.
fn iso_with_retries(m: &Module, n: &Module, opts: &IsoOpts) -> TriState {
    let mut attempt = opts.clone();
    for round in 0..4u64 {
        attempt.seed = opts.seed.wrapping_add(round.wrapping_mul(0x9e37_79b9));
        attempt.retries = opts.retries * (1 + round as usize);
        match is_isomorphic(m, n, &attempt) {
            IsoOutcome::Iso(_) => return TriState::True,
            IsoOutcome::NotIso(_) => return TriState::False,
            IsoOutcome::Inconclusive => {}
        }
    }
    TriState::Unknown
}

/// Checks that the second syzygy of a module agrees with the dual of its
/// transpose.  This identity holds for every module, so a certified
/// non-isomorphism is an internal error; an inconclusive isomorphism search
/// (after deterministic fresh-seed retries) is reported as `Unknown`.
pub fn check_second_syzygy_identity(m: &Module, opts: &IsoOpts) -> Result<TriState> {
    let lhs = syzygy(m, 2);
    let tr = transpose(m);
    let rhs = a_dual(&tr).module.relabel(format!("(Tr {})^*", m.label()));
    match iso_with_retries(&lhs, &rhs, opts) {
        TriState::True => Ok(TriState::True),
        TriState::Unknown => Ok(TriState::Unknown),
        TriState::False => Err(Error::Internal(format!(
            "second syzygy of {} (dim {}) is certified non-isomorphic to the dual of its \
             transpose (dim {}); this identity should hold for every module",
            m.label(),
            lhs.dim(),
            rhs.dim()
        ))),
    }
}

/// Checks that dualizing the evaluation map retracts the evaluation map of
/// the dual: composing `M* -> M***` with the dual of `M -> M**` is the
/// identity on `M*`, as an exact matrix identity.
pub fn check_dual_evaluation_identity(m: &Module) -> Result<()> {
    let ev = evaluation(m);
    let ev_dual = evaluation(&ev.dual.module);
    let triple = a_dual(&ev.double.module);
    let phi_m_star = dual_hom(&ev.map, &triple, &ev.dual);
    if ev_dual.double.dim() != triple.dim() {
        return Err(Error::Internal(format!(
            "triple-dual realizations disagree for {}: {} vs {}",
            m.label(),
            ev_dual.double.dim(),
            triple.dim()
        )));
    }
    let composite = phi_m_star.matrix.matmul(&ev_dual.map.matrix);
    let id = Matrix::identity(m.field(), ev.dual.dim());
    if composite != id {
        return Err(Error::Internal(format!(
            "dualized evaluation composed with the dual's evaluation is not the identity \
             on the dual of {} (dim {})",
            m.label(),
            ev.dual.dim()
        )));
    }
    Ok(())
}

/// Report of [`check_transpose_bijection`]: how a module with vanishing Ext
/// against the regular module on both sides transports, via the transpose,
/// to a module on the other side whose own transpose has vanishing Ext and
/// whose second syzygy realizes the dual.
#[derive(Debug)]
pub struct TransposeBijectionReport {
    /// The transpose has no projective summands.
    pub transpose_reduced: bool,
    /// The transpose of the transpose has vanishing Ext up to the bound.
    pub transpose_inf_tf: BoundedVerdict,
    /// The second syzygy of the transpose has vanishing Ext up to the bound.
    pub second_syzygy_sgp: BoundedVerdict,
    /// The second syzygy of the transpose is isomorphic to the dual.
    pub second_syzygy_vs_dual: TriState,
    /// Transposing twice recovers the module.
    pub round_trip: TriState,
}

/// Audits the transpose transport for a reduced module whose Ext against
/// the regular module vanishes up to `bound` on both sides.  All recorded
/// facts are consequences of the preconditions, so any decided violation is
/// an internal error; `Unknown` entries survive in the report.
pub fn check_transpose_bijection(
    m: &Module,
    bound: usize,
    opts: &IsoOpts,
) -> Result<TransposeBijectionReport> {
    if !is_reduced(m) {
        return Err(Error::Precondition(format!(
            "transpose transport expects a module with no projective summands, got {}",
            m.label()
        )));
    }
    let own = is_sgp(m, bound);
    if !own.holds() {
        return Err(Error::Precondition(format!(
            "transpose transport expects vanishing Ext against the regular module, got {:?}",
            own.witness
        )));
    }
    let dual = a_dual(m);
    let dual_verdict = is_sgp(&dual.module, bound);
    if !dual_verdict.holds() {
        return Err(Error::Precondition(format!(
            "transpose transport expects the dual to have vanishing Ext as well, got {:?}",
            dual_verdict.witness
        )));
    }

    let z = transpose(m);
    let transpose_reduced = is_reduced(&z);
    let transpose_inf_tf = is_inf_torsionfree(&z, bound);
    let omega2 = syzygy(&z, 2);
    let second_syzygy_sgp = is_sgp(&omega2, bound);
    let second_syzygy_vs_dual = iso_with_retries(&omega2, &dual.module, opts);
    let round_trip = iso_with_retries(&transpose(&z), m, opts);

    if !transpose_reduced {
        return Err(Error::Internal(format!(
            "transpose of the reduced module {} acquired a projective summand",
            m.label()
        )));
    }
    if transpose_inf_tf.status == VerdictStatus::Fails {
        return Err(Error::Internal(format!(
            "double transpose of {} lost Ext vanishing: {:?}",
            m.label(),
            transpose_inf_tf.witness
        )));
    }
    if second_syzygy_sgp.status == VerdictStatus::Fails {
        return Err(Error::Internal(format!(
            "second syzygy of the transpose of {} lost Ext vanishing: {:?}",
            m.label(),
            second_syzygy_sgp.witness
        )));
    }
    if second_syzygy_vs_dual == TriState::False {
        return Err(Error::Internal(format!(
            "second syzygy of the transpose of {} is certified non-isomorphic to the dual",
            m.label()
        )));
    }
    if round_trip == TriState::False {
        return Err(Error::Internal(format!(
            "transposing {} twice is certified to change the module",
            m.label()
        )));
    }

    Ok(TransposeBijectionReport {
        transpose_reduced,
        transpose_inf_tf,
        second_syzygy_sgp,
        second_syzygy_vs_dual,
        round_trip,
    })
}

/// Report of [`check_syzygy_dual_transfer`]: for a module with vanishing
/// Ext against the regular module, the dual of the syzygy inherits Ext
/// vanishing exactly when the dual has it and evaluation is surjective.
#[derive(Debug)]
pub struct SyzygyDualReport {
    /// Evaluation of the module is surjective.
    pub phi_epi: bool,
    /// Verdict for the dual, one degree short of the bound (`None` when the
    /// bound leaves no degrees to check).
    pub dual_sgp_shifted: Option<BoundedVerdict>,
    /// Verdict for the dual of the syzygy at the full bound.
    pub syzygy_dual_sgp: BoundedVerdict,
    /// Left-hand side of the equivalence: dual Ext vanishing (shifted) and
    /// surjective evaluation.
    pub lhs: bool,
    /// Right-hand side of the equivalence: Ext vanishing for the dual of
    /// the syzygy.
    pub rhs: bool,
    /// Whether the syzygy followed by the cosyzygy recovers the module
    /// (only attempted when the module is reduced with surjective
    /// evaluation and a dual that passes the full-bound check).
    pub round_trip: Option<TriState>,
    /// Cokernel size of the dual's evaluation and kernel size of the
    /// module's evaluation, recorded in the same situation as the round
    /// trip; the two numbers are expected to agree.
    pub balance_dims: Option<(usize, usize)>,
}

/// Audits how Ext vanishing transfers between a module's dual and the dual
/// of its syzygy.  The equivalence is degree-matched: the dual is checked
/// one degree short of `bound` because the syzygy shifts Ext degrees by
/// one.  A decided mismatch is an internal error.
pub fn check_syzygy_dual_transfer(
    m: &Module,
    bound: usize,
    opts: &IsoOpts,
) -> Result<SyzygyDualReport> {
    assert!(bound >= 1, "bound must be at least 1");
    let own = is_sgp(m, bound);
    if !own.holds() {
        return Err(Error::Precondition(format!(
            "syzygy-dual transfer expects vanishing Ext against the regular module, got {:?}",
            own.witness
        )));
    }
    let ev = evaluation(m);
    let phi_epi = ev.map.is_surjective();
    let dual_sgp_shifted = if bound >= 2 {
        Some(is_sgp(&ev.dual.module, bound - 1))
    } else {
        None
    };
    let lhs = phi_epi && dual_sgp_shifted.as_ref().is_none_or(|v| v.holds());

    let omega = syzygy(m, 1);
    let omega_dual = a_dual(&omega);
    let syzygy_dual_sgp = is_sgp(&omega_dual.module, bound);
    let rhs = syzygy_dual_sgp.holds();

    if lhs != rhs {
        return Err(Error::Internal(format!(
            "syzygy-dual transfer violated for {}: lhs (phi epi {} / dual verdict {:?}) \
             vs rhs {:?}",
            m.label(),
            phi_epi,
            dual_sgp_shifted,
            syzygy_dual_sgp
        )));
    }

    let mut round_trip = None;
    let mut balance_dims = None;
    let dual_full = is_sgp(&ev.dual.module, bound);
    if is_reduced(m) && phi_epi && dual_full.holds() {
        let back = cosyzygy_embedding(&omega)?;
        let rt = iso_with_retries(&back.cosyzygy, m, opts);
        if rt == TriState::False {
            return Err(Error::Internal(format!(
                "cosyzygy of the syzygy of {} is certified non-isomorphic to the module",
                m.label()
            )));
        }
        round_trip = Some(rt);
        let ev_dual = evaluation(&ev.dual.module);
        let cok_dual = ev_dual.double.dim() - ev_dual.map.matrix.rank();
        let ker_own = ev.map.matrix.kernel_basis().cols();
        balance_dims = Some((cok_dual, ker_own));
    }

    Ok(SyzygyDualReport {
        phi_epi,
        dual_sgp_shifted,
        syzygy_dual_sgp,
        lhs,
        rhs,
        round_trip,
        balance_dims,
    })
}

/// Report of [`check_cosyzygy_dual_transfer`]: pushing a torsionless module
/// with vanishing Ext forward to its cosyzygy preserves Ext vanishing, and
/// the dual's Ext vanishing transfers along the embedding.
#[derive(Debug)]
pub struct CosyzygyDualReport {
    /// Verdict for the cosyzygy at the full bound.
    pub cosyzygy_sgp: BoundedVerdict,
    /// Verdict for the dual of the input module at the full bound.
    pub input_dual_sgp: BoundedVerdict,
    /// Evaluation of the cosyzygy is surjective.
    pub cosyzygy_phi_epi: bool,
    /// Verdict for the dual of the cosyzygy, one degree short of the bound.
    pub cosyzygy_dual_sgp_shifted: Option<BoundedVerdict>,
    /// The two sides of the equivalence.
    pub lhs: bool,
    /// See `lhs`.
    pub rhs: bool,
    /// Whether the syzygy of the cosyzygy recovers the module.
    pub round_trip: TriState,
}

/// Audits the cosyzygy direction of the transfer: the input must be
/// reduced, torsionless, and have vanishing Ext up to `bound`.  The
/// cosyzygy must then keep Ext vanishing, and its dual keeps it (one
/// degree short) together with surjective evaluation exactly when the
/// input's dual has it at the full bound.
pub fn check_cosyzygy_dual_transfer(
    m_prime: &Module,
    bound: usize,
    opts: &IsoOpts,
) -> Result<CosyzygyDualReport> {
    assert!(bound >= 1, "bound must be at least 1");
    if !is_reduced(m_prime) {
        return Err(Error::Precondition(format!(
            "cosyzygy transfer expects a module with no projective summands, got {}",
            m_prime.label()
        )));
    }
    if !is_torsionless(m_prime) {
        return Err(Error::Precondition(format!(
            "cosyzygy transfer expects a torsionless module, got {} with a non-injective \
             evaluation map",
            m_prime.label()
        )));
    }
    let own = is_sgp(m_prime, bound);
    if !own.holds() {
        return Err(Error::Precondition(format!(
            "cosyzygy transfer expects vanishing Ext against the regular module, got {:?}",
            own.witness
        )));
    }

    let ce = cosyzygy_embedding(m_prime)?;
    let m = ce
        .cosyzygy
        .relabel(format!("cosyzygy({})", m_prime.label()));
    let cosyzygy_sgp = is_sgp(&m, bound);
    if !cosyzygy_sgp.holds() {
        return Err(Error::Internal(format!(
            "cosyzygy of {} lost Ext vanishing: {:?}",
            m_prime.label(),
            cosyzygy_sgp.witness
        )));
    }

    let input_dual_sgp = is_sgp(&a_dual(m_prime).module, bound);
    let lhs = input_dual_sgp.holds();

    let ev = evaluation(&m);
    let cosyzygy_phi_epi = ev.map.is_surjective();
    let cosyzygy_dual_sgp_shifted = if bound >= 2 {
        Some(is_sgp(&ev.dual.module, bound - 1))
    } else {
        None
    };
    let rhs = cosyzygy_phi_epi && cosyzygy_dual_sgp_shifted.as_ref().is_none_or(|v| v.holds());

    if lhs != rhs {
        return Err(Error::Internal(format!(
            "cosyzygy-dual transfer violated for {}: input dual verdict {:?} vs cosyzygy \
             (phi epi {} / dual verdict {:?})",
            m_prime.label(),
            input_dual_sgp,
            cosyzygy_phi_epi,
            cosyzygy_dual_sgp_shifted
        )));
    }

    let round_trip = iso_with_retries(&syzygy(&m, 1), m_prime, opts);
    if round_trip == TriState::False {
        return Err(Error::Internal(format!(
            "syzygy of the cosyzygy of {} is certified non-isomorphic to the module",
            m_prime.label()
        )));
    }

    Ok(CosyzygyDualReport {
        cosyzygy_sgp,
        input_dual_sgp,
        cosyzygy_phi_epi,
        cosyzygy_dual_sgp_shifted,
        lhs,
        rhs,
        round_trip,
    })
}

/// Report of [`check_transpose_pd_bound`]: a module with vanishing Ext and
/// projective dual has a transpose of projective dimension at most two,
/// dropping to at most one when the dual vanishes.
#[derive(Debug)]
pub struct TransposePdReport {
    /// The dual vanishes entirely.
    pub dual_zero: bool,
    /// Projective dimension of the transpose.
    pub transpose_pd: usize,
    /// The proved ceiling for the projective dimension.
    pub ceiling: usize,
    /// The transpose of the transpose keeps Ext vanishing up to the bound.
    pub transpose_inf_tf: BoundedVerdict,
}

/// Audits the projective-dimension ceiling of the transpose for a module
/// with vanishing Ext against the regular module and projective dual.
pub fn check_transpose_pd_bound(m: &Module, bound: usize) -> Result<TransposePdReport> {
    let own = is_sgp(m, bound);
    if !own.holds() {
        return Err(Error::Precondition(format!(
            "transpose ceiling expects vanishing Ext against the regular module, got {:?}",
            own.witness
        )));
    }
    let dual = a_dual(m);
    if !is_projective(&dual.module) {
        return Err(Error::Precondition(format!(
            "transpose ceiling expects a projective dual, got {} of dimension {}",
            dual.module.label(),
            dual.dim()
        )));
    }
    let dual_zero = dual.dim() == 0;
    let ceiling = if dual_zero { 1 } else { 2 };
    let z = transpose(m);
    let transpose_pd = match projective_dimension(&z, 3) {
        Some(pd) if pd <= ceiling => pd,
        other => {
            return Err(Error::Internal(format!(
                "transpose of {} has projective dimension {:?}, above the proved ceiling {}",
                m.label(),
                other,
                ceiling
            )))
        }
    };
    let transpose_inf_tf = is_inf_torsionfree(&z, bound);
    if transpose_inf_tf.status == VerdictStatus::Fails {
        return Err(Error::Internal(format!(
            "double transpose of {} lost Ext vanishing: {:?}",
            m.label(),
            transpose_inf_tf.witness
        )));
    }
    Ok(TransposePdReport {
        dual_zero,
        transpose_pd,
        ceiling,
        transpose_inf_tf,
    })
}

/// Report of [`check_vanishing_decomposition`]: having vanishing Ext,
/// surjective evaluation, and projective dual is the same as splitting into
/// a projective module and a module with zero dual and vanishing Ext.
#[derive(Debug)]
pub struct VanishingDecompositionReport {
    /// Combined first side: Ext vanishing, surjective evaluation,
    /// projective dual.
    pub side_combined: bool,
    /// Dimension of the projective part split off by reduction.
    pub projective_part_dim: usize,
    /// Verdict for the reduced part: zero dual plus Ext vanishing.
    pub reduced_part_nunke: BoundedVerdict,
    /// Second side: the reduced part passes the zero-dual check.
    pub side_split: bool,
}

/// Audits the decomposition characterization at a fixed bound.  The two
/// sides are equivalent by exact linear algebra at every bound, so any
/// disagreement is an internal error.
pub fn check_vanishing_decomposition(
    m: &Module,
    bound: usize,
) -> Result<VanishingDecompositionReport> {
    let own = is_sgp(m, bound);
    let ev = evaluation(m);
    let phi_epi = ev.map.is_surjective();
    let dual_projective = is_projective(&ev.dual.module);
    let side_combined = own.holds() && phi_epi && dual_projective;

    let (reduced, _) = reduce(m);
    let projective_part_dim = m.dim() - reduced.dim();
    let reduced_part_nunke = nunke_check(&reduced, bound);
    let side_split = reduced_part_nunke.holds();

    if side_combined != side_split {
        return Err(Error::Internal(format!(
            "decomposition characterization violated for {}: combined side {} (Ext {:?}, \
             phi epi {}, dual projective {}) vs split side {:?}",
            m.label(),
            side_combined,
            own.witness,
            phi_epi,
            dual_projective,
            reduced_part_nunke
        )));
    }

    Ok(VanishingDecompositionReport {
        side_combined,
        projective_part_dim,
        reduced_part_nunke,
        side_split,
    })
}

/// A self-contained counterexample candidate produced by the conjecture
/// ladder.  The module is stored in full so the finding can be re-verified
/// from the certificate alone; the caveat records that Ext vanishing was
/// only checked up to the stated bound.
#[derive(Clone)]
pub struct Candidate {
    /// Which ladder rung flagged the module.
    pub rung: String,
    /// Ext-vanishing degrees were checked up to this bound.
    pub bound: usize,
    /// The flagged module.
    pub module: Module,
    /// Human-readable account of the verified facts.
    pub witness: String,
    /// Why this is a candidate rather than a proof.
    pub caveat: String,
}

impl std::fmt::Debug for Candidate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Candidate[{}] {} (dim {}): {}",
            self.rung,
            self.module.label(),
            self.module.dim(),
            self.witness
        )
    }
}

/// The names of the conjecture-ladder rungs, ordered from strongest to
/// weakest statement.
pub const LADDER_RUNGS: [&str; 5] = [
    "finite-dual-pd",
    "projective-dual",
    "nunke",
    "simple-nunke",
    "simple-injective-nunke",
];

/// Evaluates one ladder rung on one module; returns a witness description
/// when the module violates the rung's conjecture up to the bound.
pub(crate) fn rung_violation(rung: &str, m: &Module, bound: usize) -> Option<String> {
    match rung {
        "finite-dual-pd" => {
            if m.dim() == 0 || is_projective(m) {
                return None;
            }
            let own = is_sgp(m, bound);
            if !own.holds() {
                return None;
            }
            let dual = a_dual(m);
            let pd = projective_dimension(&dual.module, bound)?;
            Some(format!(
                "Ext^1..{} against the regular module vanish, the dual has projective \
                 dimension {}, and the module is not projective",
                bound, pd
            ))
        }
        "projective-dual" => {
            if m.dim() == 0 || is_projective(m) {
                return None;
            }
            let own = is_sgp(m, bound);
            if !own.holds() {
                return None;
            }
            let dual = a_dual(m);
            if !is_projective(&dual.module) {
                return None;
            }
            Some(format!(
                "Ext^1..{} against the regular module vanish, the dual is projective of \
                 dimension {}, and the module is not projective",
                bound,
                dual.dim()
            ))
        }
        "nunke" => {
            if m.dim() == 0 {
                return None;
            }
            let verdict = nunke_check(m, bound);
            if !verdict.holds() {
                return None;
            }
            Some(format!(
                "the module is nonzero of dimension {}, its dual vanishes, and Ext^1..{} \
                 against the regular module vanish",
                m.dim(),
                bound
            ))
        }
        "simple-nunke" => {
            if m.dim() != 1 {
                return None;
            }
            rung_violation("nunke", m, bound).map(|w| format!("the module is simple; {}", w))
        }
        "simple-injective-nunke" => {
            if m.dim() != 1 || !is_injective(m) {
                return None;
            }
            rung_violation("nunke", m, bound)
                .map(|w| format!("the module is simple and injective; {}", w))
        }
        other => panic!("unknown ladder rung {other:?}"),
    }
}

/// Re-runs the predicate stored in a candidate certificate against its
/// embedded module and bound.
pub fn reverify_candidate(c: &Candidate) -> bool {
    rung_violation(&c.rung, &c.module, c.bound).is_some()
}

/// Findings for one ladder rung.
#[derive(Debug)]
pub struct RungReport {
    /// The rung name, one of [`LADDER_RUNGS`].
    pub rung: String,
    /// How many modules the rung was evaluated on.
    pub tested: usize,
    /// Violations found, packaged for re-verification.
    pub candidates: Vec<Candidate>,
}

/// Outcome of a full ladder audit over an algebra and a module sample.
#[derive(Debug)]
pub struct ConjectureAudit {
    /// One report per rung, in ladder order.
    pub rungs: Vec<RungReport>,
}

impl ConjectureAudit {
    /// Total number of counterexample candidates across all rungs.
    pub fn total_candidates(&self) -> usize {
        self.rungs.iter().map(|r| r.candidates.len()).sum()
    }
}

/// Audits the conjecture ladder: the first three rungs run over the given
/// module sample, the two simple-module rungs additionally run over every
/// simple module of the algebra on both sides.  Violations are collected as
/// re-verifiable candidates and never treated as errors, since up to the
/// bound they are only candidates.
pub fn audit_conjectures(a: &Algebra, modules: &[Module], bound: usize) -> Result<ConjectureAudit> {
    assert!(bound >= 1, "bound must be at least 1");
    for m in modules {
        if !m.base_algebra().same_structure(a) {
            return Err(Error::Precondition(format!(
                "module {} is not over the audited algebra",
                m.label()
            )));
        }
    }
    let mut simples = Vec::new();
    for side in [Side::Left, Side::Right] {
        for i in 0..a.num_idempotents() {
            simples.push(Module::simple(a, side, i));
        }
    }
    let caveat = format!(
        "Ext vanishing verified only up to degree {}; a genuine counterexample would need \
         vanishing in every degree",
        bound
    );
    let mut rungs = Vec::new();
    for rung in LADDER_RUNGS {
        let pool: &[Module] = if rung.starts_with("simple") {
            &simples
        } else {
            modules
        };
        let mut candidates = Vec::new();
        for m in pool {
            if let Some(witness) = rung_violation(rung, m, bound) {
                candidates.push(Candidate {
                    rung: rung.to_string(),
                    bound,
                    module: m.clone(),
                    witness,
                    caveat: caveat.clone(),
                });
            }
        }
        rungs.push(RungReport {
            rung: rung.to_string(),
            tested: pool.len(),
            candidates,
        });
    }
    Ok(ConjectureAudit { rungs })
}

/// Report of [`check_local_dual_projective`]: over a local algebra, a
/// module with vanishing Ext and projective dual must itself be projective.
#[derive(Debug)]
pub struct LocalDualReport {
    /// Dimension of the dual.
    pub dual_dim: usize,
    /// The dual is projective.
    pub dual_projective: bool,
    /// Conclusion checked when the dual is projective: the module is
    /// projective.
    pub conclusion_projective: Option<bool>,
    /// Populated when the conclusion fails at the bound.
    pub candidate: Option<Candidate>,
    /// Extra facts recorded while analysing a failing conclusion.
    pub diagnostics: Vec<String>,
}

/// Audits the local-algebra projectivity statement.  The algebra must be
/// local and the module must have vanishing Ext up to `bound`; a failing
/// conclusion is reported as a candidate (the Ext bound is finite), never
/// asserted.
pub fn check_local_dual_projective(m: &Module, bound: usize) -> Result<LocalDualReport> {
    let a = m.base_algebra();
    if !a.classify().local {
        return Err(Error::Precondition(format!(
            "local projectivity audit expects a local algebra, got {} with {} idempotents",
            a.name(),
            a.num_idempotents()
        )));
    }
    let own = is_sgp(m, bound);
    if !own.holds() {
        return Err(Error::Precondition(format!(
            "local projectivity audit expects vanishing Ext against the regular module, \
             got {:?}",
            own.witness
        )));
    }
    let dual = a_dual(m);
    let dual_projective = is_projective(&dual.module);
    let mut conclusion_projective = None;
    let mut candidate = None;
    let mut diagnostics = Vec::new();
    if dual_projective {
        let ok = is_projective(m);
        conclusion_projective = Some(ok);
        if !ok {
            let (reduced, _) = reduce(m);
            diagnostics.push(format!(
                "reduced part has dimension {} and dual dimension {}",
                reduced.dim(),
                a_dual(&reduced).dim()
            ));
            if reduced.dim() > 0 {
                match build_main_complex(&reduced, bound) {
                    Ok(mc) => diagnostics.push(format!(
                        "two-sided complex builds at bound {}: homology dims ({}, {})",
                        bound, mc.h0_dim, mc.hm1_dim
                    )),
                    Err(e) => diagnostics.push(format!("two-sided complex fails: {}", e)),
                }
            }
            candidate = Some(Candidate {
                rung: "projective-dual".to_string(),
                bound,
                module: m.clone(),
                witness: format!(
                    "over the local algebra {}: Ext^1..{} vanish, the dual is projective of \
                     dimension {}, and the module is not projective",
                    a.name(),
                    bound,
                    dual.dim()
                ),
                caveat: format!(
                    "Ext vanishing verified only up to degree {}; a genuine counterexample \
                     would need vanishing in every degree",
                    bound
                ),
            });
        }
    }
    Ok(LocalDualReport {
        dual_dim: dual.dim(),
        dual_projective,
        conclusion_projective,
        candidate,
        diagnostics,
    })
}

/// Report of [`check_short_local_balance`] over a short local algebra (cube
/// of the radical zero): evaluation kernel and cokernel sizes must agree
/// for a module with two-sided Ext vanishing, and the two-sided complex of
/// its reduced part must have constant rank with layer sizes matching the
/// algebra's radical layers.
#[derive(Debug)]
pub struct ShortLocalReport {
    /// (dim J/J^2, dim J^2) of the algebra.
    pub hilbert: (usize, usize),
    /// Whether the algebra is self-injective.
    pub self_injective: TriState,
    /// Both the module and its dual keep Ext vanishing up to the bound.
    pub both_sgp: bool,
    /// Kernel size of the evaluation map.
    pub ker_phi_dim: usize,
    /// Cokernel size of the evaluation map.
    pub cok_phi_dim: usize,
    /// Kernel and cokernel sizes agree.
    pub balanced: bool,
    /// The reduced part vanished, making the window checks vacuous.
    pub vacuous: bool,
    /// Ranks of the window terms, listed from the lowest degree upward.
    pub ranks: Vec<usize>,
    /// All window terms have the same rank.
    pub ranks_equal: Option<bool>,
    /// Dimension vectors (top size, radical size) of the images inside the
    /// dualized window, from the lowest degree upward.
    pub image_dim_vectors: Vec<(usize, usize)>,
    /// Expected dimension vector (t, a*t) for the common rank t.
    pub expected_dim_vector: Option<(usize, usize)>,
    /// All image dimension vectors match the expected one.
    pub dim_vectors_ok: Option<bool>,
    /// Truncation-aware findings: facts that contradict the unbounded
    /// theory and therefore flag the bounded verdicts as untrustworthy.
    pub findings: Vec<String>,
}

/// Audits the balance statement over a short local algebra.  Preconditions:
/// the algebra is short local.  Verdict failures downgrade the report
/// (nothing to check) rather than erroring; contradictions with the
/// unbounded theory are recorded as findings.
pub fn check_short_local_balance(
    m: &Module,
    bound: usize,
    opts: &IsoOpts,
) -> Result<ShortLocalReport> {
    assert!(bound >= 1, "bound must be at least 1");
    let a = m.base_algebra();
    let class = a.classify();
    let hilbert = match (class.short_local, class.hilbert_type) {
        (true, Some(h)) => h,
        _ => {
            return Err(Error::Precondition(format!(
                "balance audit expects a short local algebra, got {} (local {}, radical \
                 layers {:?})",
                a.name(),
                class.local,
                class.radical_dims
            )))
        }
    };
    let self_injective = is_self_injective(&a, opts);

    let ev = evaluation(m);
    let ker_phi_dim = ev.map.matrix.kernel_basis().cols();
    let cok_phi_dim = ev.double.dim() - ev.map.matrix.rank();
    let balanced = ker_phi_dim == cok_phi_dim;

    let own = is_sgp(m, bound);
    let dual_verdict = is_sgp(&ev.dual.module, bound);
    let both_sgp = own.holds() && dual_verdict.holds();

    let mut findings = Vec::new();
    let mut report = ShortLocalReport {
        hilbert,
        self_injective,
        both_sgp,
        ker_phi_dim,
        cok_phi_dim,
        balanced,
        vacuous: false,
        ranks: Vec::new(),
        ranks_equal: None,
        image_dim_vectors: Vec::new(),
        expected_dim_vector: None,
        dim_vectors_ok: None,
        findings: Vec::new(),
    };
    if !both_sgp {
        return Ok(report);
    }
    if !balanced {
        findings.push(format!(
            "two-sided Ext vanishing up to degree {} with evaluation kernel {} != cokernel \
             {}; the bounded verdicts cannot all persist unboundedly",
            bound, ker_phi_dim, cok_phi_dim
        ));
    }

    let (reduced, _) = reduce(m);
    if reduced.dim() == 0 {
        report.vacuous = true;
        report.findings = findings;
        return Ok(report);
    }

    if self_injective != TriState::True {
        let mc = build_main_complex(&reduced, bound)?;
        report.ranks = mc
            .sums
            .iter()
            .map(|s| s.multiplicities().iter().sum())
            .collect();
        let t = report.ranks[0];
        let ranks_equal = report.ranks.iter().all(|&r| r == t);
        report.ranks_equal = Some(ranks_equal);
        if !ranks_equal {
            findings.push(format!(
                "window terms have unequal ranks {:?}; an unbounded two-sided complex would \
                 force a constant rank",
                report.ranks
            ));
        }
        let (e_dim, a_dim) = hilbert;
        report.expected_dim_vector = Some((t, a_dim * t));
        let mut all_ok = true;
        for map in mc.dual_complex.maps() {
            let (image, _) = map.image();
            match image.dimension_vector() {
                Ok(dv) => {
                    if dv != (t, a_dim * t) {
                        all_ok = false;
                        findings.push(format!(
                            "image of a dualized window map has dimension vector {:?}, \
                             expected ({}, {})",
                            dv,
                            t,
                            a_dim * t
                        ));
                    }
                    report.image_dim_vectors.push(dv);
                }
                Err(e) => {
                    all_ok = false;
                    findings.push(format!(
                        "image of a dualized window map has no dimension vector: {}",
                        e
                    ));
                }
            }
        }
        report.dim_vectors_ok = Some(all_ok);
        if e_dim != a_dim + 1 || a_dim < 2 {
            findings.push(format!(
                "radical layers ({}, {}) are incompatible with an unbounded two-sided \
                 complex over a short local algebra that is not self-injective",
                e_dim, a_dim
            ));
        }
    }
    report.findings = findings;
    Ok(report)
}
