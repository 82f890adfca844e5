//! The two-sided projective complex attached to a reduced module M whose
//! Ext against the regular module vanishes (up to a bound) for both M and
//! its dual M*.
//!
//! The window spans degrees -(bound+1)..=bound+1.  Non-negative degrees
//! carry a minimal projective resolution of M; negative degrees carry the
//! dual of a minimal projective resolution of the right module M*, and the
//! connecting map out of degree zero is the composite
//!
//! ```text
//! P_0  --e-->  M  --phi-->  M**  --q*-->  Q_0*
//! ```
//!
//! of the augmentation, the evaluation map, and the dual of the resolution
//! augmentation q of M*.  The construction verifies, exactly, that the
//! result is a minimal complex whose homology is concentrated in degrees 0
//! and -1 where it realizes the kernel and cokernel of the evaluation map,
//! and that the dual complex is exact at every interior degree.

use crate::complexes::{
    dual_hom, evaluation, proj_dual, Complex, DualModule, ProjMap, ProjSum, Resolution,
};
use crate::error::{Error, Result};
use crate::gorenstein::verdict::{is_sgp, BoundedVerdict};
use crate::linalg::Matrix;
use crate::modrep::{
    hom_basis, is_isomorphic, reduce, IsoOpts, IsoOutcome, Module, ModuleMap, TriState,
};

/// A verified two-sided complex of projectives for a module M, together
/// with the maps and duals used to build and certify it.
pub struct MainComplex {
    /// The module the complex was built from.
    pub module: Module,
    /// Ext degrees were checked up to this bound on both sides.
    pub bound: usize,
    /// Projective sums indexed from the lowest degree upward.
    pub sums: Vec<ProjSum>,
    /// Element-form differentials; `maps[k]` goes from `sums[k+1]` to
    /// `sums[k]`.
    pub maps: Vec<ProjMap>,
    /// The concrete realization of the window.
    pub complex: Complex,
    /// The concrete realization of the dual window (degree d holds the
    /// dual of the original degree -d term); exact at interior degrees.
    pub dual_complex: Complex,
    /// e: P_0 -> M, the cokernel of the degree-one differential.
    pub augmentation: ModuleMap,
    /// q: Q_0 -> M*, the cokernel of the degree minus-one differential
    /// read through duality.
    pub dual_augmentation: ModuleMap,
    /// M* with its pairing.
    pub dual: DualModule,
    /// M** with its pairing.
    pub double: DualModule,
    /// The evaluation map M -> M**.
    pub evaluation_map: ModuleMap,
    /// Homology dimension at degree 0 (equals ker_phi_dim).
    pub h0_dim: usize,
    /// Homology dimension at degree -1 (equals cok_phi_dim).
    pub hm1_dim: usize,
    pub ker_phi_dim: usize,
    pub cok_phi_dim: usize,
}

impl std::fmt::Debug for MainComplex {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "MainComplex(module dim {}, bound {}, degrees {}..={}, h0 {}, h-1 {})",
            self.module.dim(),
            self.bound,
            self.lowest_degree(),
            self.highest_degree(),
            self.h0_dim,
            self.hm1_dim
        )
    }
}

impl MainComplex {
    pub fn lowest_degree(&self) -> i64 {
        self.complex.lowest_degree()
    }

    pub fn highest_degree(&self) -> i64 {
        self.complex.highest_degree()
    }

    fn index_of(&self, d: i64) -> Option<usize> {
        let idx = d.checked_sub(self.lowest_degree())?;
        if idx < 0 || idx as usize >= self.sums.len() {
            return None;
        }
        Some(idx as usize)
    }

    /// The projective sum sitting in degree d.
    pub fn sum_at(&self, d: i64) -> Option<&ProjSum> {
        self.sums.get(self.index_of(d)?)
    }

    /// The element-form differential leaving degree d.
    pub fn map_leaving(&self, d: i64) -> Option<&ProjMap> {
        let idx = self.index_of(d)?;
        if idx == 0 {
            return None;
        }
        self.maps.get(idx - 1)
    }
}

fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

/// Builds the concrete dual window of a list of element-form maps: terms
/// are dualized and the order is reversed so the dual of the degree-d term
/// sits in degree -d.
fn dual_window(lowest: i64, sums: &[ProjSum], maps: &[ProjMap]) -> Result<Complex> {
    let highest = lowest + sums.len() as i64 - 1;
    let terms: Vec<Module> = sums.iter().rev().map(|s| s.dual().module().clone()).collect();
    let dmaps: Vec<ModuleMap> = maps.iter().rev().map(|f| f.dual().concrete()).collect();
    Complex::new(-highest, terms, dmaps)
}

/// Builds and certifies the two-sided complex of a reduced module whose
/// Ext against the regular module vanishes up to `bound` on both sides.
///
/// Fails with `NotReduced` when the module has a nonzero projective direct
/// summand, and with `Precondition` when either vanishing hypothesis
/// breaks below the bound.
pub fn build_main_complex(m: &Module, bound: usize) -> Result<MainComplex> {
    assert!(bound >= 1, "the main complex needs a bound of at least 1");
    let (reduced, _) = reduce(m);
    if reduced.dim() != m.dim() {
        return Err(Error::NotReduced { proj_dim: m.dim() - reduced.dim() });
    }
    let own = is_sgp(m, bound);
    if !own.holds() {
        return Err(Error::Precondition(format!(
            "module has nonvanishing Ext against the regular module: {:?}",
            own.witness
        )));
    }
    let ev = evaluation(m);
    let dual_ok = is_sgp(&ev.dual.module, bound);
    if !dual_ok.holds() {
        return Err(Error::Precondition(format!(
            "dual module has nonvanishing Ext against the regular module: {:?}",
            dual_ok.witness
        )));
    }

    let n = bound;
    let mut res = Resolution::new(m);
    res.ensure(n + 1);
    let mut resq = Resolution::new(&ev.dual.module);
    resq.ensure(n);
    let e_map = res.augmentation().clone();
    let q_map = resq.augmentation().clone();

    // The connecting map out of degree zero: q* . phi . e.
    let q0 = resq.term(0).clone();
    let q0_dual = proj_dual(&q0);
    let q_star = dual_hom(&q_map, &ev.double, &q0_dual);
    let f0_concrete = e_map.compose(&ev.map).compose(&q_star);
    let p0 = res.term(0).clone();
    let pm1 = q0.dual();
    let f0 = ProjMap::from_concrete(&p0, &pm1, &f0_concrete.matrix);

    // Terms from the lowest degree -(n+1) upward.
    let mut sums: Vec<ProjSum> = Vec::with_capacity(2 * n + 3);
    for k in (0..=n).rev() {
        sums.push(resq.term(k).dual());
    }
    for k in 0..=(n + 1) {
        sums.push(res.term(k).clone());
    }
    let mut maps: Vec<ProjMap> = Vec::with_capacity(2 * n + 2);
    for k in 0..n {
        maps.push(resq.map(n - k).dual());
    }
    maps.push(f0);
    for j in 1..=(n + 1) {
        maps.push(res.map(j).clone());
    }

    let lowest = -(n as i64) - 1;
    let terms: Vec<Module> = sums.iter().map(|s| s.module().clone()).collect();
    let cmaps: Vec<ModuleMap> = maps.iter().map(|f| f.concrete()).collect();
    let complex = Complex::new(lowest, terms, cmaps)?;

    if !complex.is_complex() {
        return Err(internal("consecutive differentials do not compose to zero"));
    }
    if !complex.is_minimal() {
        return Err(internal("a differential has image outside the radical"));
    }

    let ker_phi = ev.map.matrix.kernel_basis();
    let ker_phi_dim = ker_phi.cols();
    let cok_phi_dim = ev.double.dim() - ev.map.matrix.rank();
    for d in (lowest + 1)..complex.highest_degree() {
        let h = complex.homology_dim(d).unwrap();
        let expected = match d {
            0 => ker_phi_dim,
            -1 => cok_phi_dim,
            _ => 0,
        };
        if h != expected {
            return Err(internal(format!(
                "homology at degree {d} has dimension {h}, expected {expected}"
            )));
        }
    }

    // The augmentation realizes M as the cokernel of the degree-one map.
    let f1_matrix = res.map(1).concrete_matrix();
    if !e_map.matrix.matmul(&f1_matrix).is_zero() {
        return Err(internal("augmentation does not kill the degree-one image"));
    }
    if e_map.matrix.rank() != m.dim()
        || p0.dim() - e_map.matrix.rank() != f1_matrix.rank()
    {
        return Err(internal("augmentation is not the cokernel of the degree-one map"));
    }

    // e carries the kernel of the connecting map onto the kernel of the
    // evaluation map, exhibiting the degree-zero homology exactly.
    let k0 = f0_concrete.matrix.kernel_basis();
    let ek0 = e_map.matrix.matmul(&k0);
    if !ev.map.matrix.matmul(&ek0).is_zero() || ek0.rank() != ker_phi_dim {
        return Err(internal("degree-zero homology does not map onto ker(phi)"));
    }

    // The kernel of the degree minus-one differential is the image of M**
    // under the injection q*, exhibiting the degree minus-one homology.
    let fm1_matrix = maps[n - 1].concrete_matrix();
    debug_assert_eq!(fm1_matrix.cols(), pm1.dim());
    let km1 = fm1_matrix.kernel_basis();
    if q_star.matrix.rank() != ev.double.dim()
        || !q_star.matrix.spans(&km1)
        || !km1.spans(&q_star.matrix)
    {
        return Err(internal("kernel at degree -1 is not the embedded double dual"));
    }

    // Dualizing the degree minus-one differential returns the original
    // presentation of M*, exactly.
    if maps[n - 1].dual().concrete_matrix() != resq.map(1).concrete_matrix() {
        return Err(internal("double dual of the degree -1 differential drifted"));
    }

    let dual_complex = dual_window(lowest, &sums, &maps)?;
    if !dual_complex.is_complex() || !dual_complex.is_minimal() {
        return Err(internal("dual window is not a minimal complex"));
    }
    for d in (dual_complex.lowest_degree() + 1)..dual_complex.highest_degree() {
        let h = dual_complex.homology_dim(d).unwrap();
        if h != 0 {
            return Err(internal(format!(
                "dual window has homology of dimension {h} at degree {d}"
            )));
        }
    }

    let h0_dim = complex.homology_dim(0).unwrap();
    let hm1_dim = complex.homology_dim(-1).unwrap();
    Ok(MainComplex {
        module: m.clone(),
        bound,
        sums,
        maps,
        complex,
        dual_complex,
        augmentation: e_map,
        dual_augmentation: q_map,
        dual: ev.dual,
        double: ev.double,
        evaluation_map: ev.map,
        h0_dim,
        hm1_dim,
        ker_phi_dim,
        cok_phi_dim,
    })
}

/// The module recovered from a projective window, with recomputed
/// verdicts and the homology/evaluation data of the recovery.
pub struct RecoveredModule {
    pub module: Module,
    /// Vanishing of Ext(M, A) recomputed up to a bound derived from the
    /// length of the positive side of the window.
    pub own: BoundedVerdict,
    /// The same for the dual of the recovered module, with the bound
    /// derived from the negative side.
    pub dual: BoundedVerdict,
    /// Homology at degrees 0 and -1 when they are interior.
    pub h0_dim: Option<usize>,
    pub hm1_dim: Option<usize>,
    pub ker_phi_dim: usize,
    pub cok_phi_dim: usize,
}

/// Reads a module off a projective window: the cokernel of the
/// differential arriving in degree zero.
///
/// The window must be a minimal complex, its interior homology must
/// vanish away from degrees 0 and -1, its dual must be exact at every
/// interior degree, and the recovered cokernel must be reduced.
pub fn complex_to_module(lowest: i64, maps: &[ProjMap]) -> Result<RecoveredModule> {
    if maps.is_empty() {
        return Err(Error::Precondition("window needs at least one differential".into()));
    }
    for k in 0..maps.len() - 1 {
        let upper = &maps[k + 1].target;
        let lower = &maps[k].source;
        if upper.tags() != lower.tags()
            || upper.side() != lower.side()
            || !upper.acting().same_structure(lower.acting())
        {
            return Err(Error::Precondition(format!(
                "consecutive differentials {k} and {} do not share a term",
                k + 1
            )));
        }
    }

    let mut sums: Vec<ProjSum> = maps.iter().map(|f| f.target.clone()).collect();
    sums.push(maps.last().unwrap().source.clone());
    let terms: Vec<Module> = sums.iter().map(|s| s.module().clone()).collect();
    let cmaps: Vec<ModuleMap> = maps.iter().map(|f| f.concrete()).collect();
    let complex = Complex::new(lowest, terms, cmaps)?;
    let highest = complex.highest_degree();

    if !complex.is_complex() {
        return Err(Error::Precondition(
            "consecutive differentials do not compose to zero".into(),
        ));
    }
    if !complex.is_minimal() {
        return Err(Error::Precondition(
            "a differential has image outside the radical of its target".into(),
        ));
    }
    for d in (lowest + 1)..highest {
        if d == 0 || d == -1 {
            continue;
        }
        let h = complex.homology_dim(d).unwrap();
        if h != 0 {
            return Err(Error::Precondition(format!(
                "window has homology of dimension {h} at degree {d}"
            )));
        }
    }
    let dual_complex = dual_window(lowest, &sums, maps)?;
    if !dual_complex.is_complex() {
        return Err(Error::Precondition("dual window is not a complex".into()));
    }
    for d in (dual_complex.lowest_degree() + 1)..dual_complex.highest_degree() {
        let h = dual_complex.homology_dim(d).unwrap();
        if h != 0 {
            return Err(Error::Precondition(format!(
                "dual window has homology of dimension {h} at degree {d}"
            )));
        }
    }

    if lowest > 0 || -lowest >= maps.len() as i64 {
        return Err(Error::Precondition(
            "window does not contain a differential into degree zero".into(),
        ));
    }
    let k0 = (-lowest) as usize;
    let (module, _) = maps[k0].concrete().cokernel();
    let (red, _) = reduce(&module);
    if red.dim() != module.dim() {
        return Err(Error::NotReduced { proj_dim: module.dim() - red.dim() });
    }
    let module = module.relabel("recovered");

    let own_bound = (highest - 1).max(1) as usize;
    let dual_bound = (-lowest - 1).max(1) as usize;
    let own = is_sgp(&module, own_bound);
    let ev = evaluation(&module);
    let dual = is_sgp(&ev.dual.module, dual_bound);
    let ker_phi_dim = ev.map.matrix.kernel_basis().cols();
    let cok_phi_dim = ev.double.dim() - ev.map.matrix.rank();
    Ok(RecoveredModule {
        module,
        own,
        dual,
        h0_dim: complex.homology_dim(0),
        hm1_dim: complex.homology_dim(-1),
        ker_phi_dim,
        cok_phi_dim,
    })
}

/// Flattens a matrix row-major into a single column.
fn vec_of(m: &Matrix) -> Matrix {
    let mut out = Matrix::zero(m.field(), m.rows() * m.cols(), 1);
    for r in 0..m.rows() {
        for c in 0..m.cols() {
            out.set(r * m.cols() + c, 0, m.get(r, c));
        }
    }
    out
}

/// Finds h in the span of `homs` with post . h == rhs, or None.
fn lift(
    post: &Matrix,
    rhs: &Matrix,
    homs: &[ModuleMap],
    rows: usize,
    cols: usize,
) -> Option<Matrix> {
    let field = post.field();
    if homs.is_empty() {
        return rhs.is_zero().then(|| Matrix::zero(field, rows, cols));
    }
    let images: Vec<Matrix> = homs.iter().map(|h| vec_of(&post.matmul(&h.matrix))).collect();
    let image_refs: Vec<&Matrix> = images.iter().collect();
    let system = Matrix::hstack(&image_refs);
    let coeffs = system.solve(&vec_of(rhs))?;
    let mut h = Matrix::zero(field, rows, cols);
    for (i, hb) in homs.iter().enumerate() {
        let c = coeffs.get(i, 0);
        if !c.is_zero() {
            h = h.add(&hb.matrix.scale(&c));
        }
    }
    Some(h)
}

/// Decides whether two main complexes are isomorphic as complexes, by
/// building an explicit degreewise isomorphism that commutes with every
/// differential.
///
/// The positive side is lifted through the projective covers of an
/// isomorphism of the underlying modules; the negative side is lifted
/// through the covers of the induced isomorphism of duals and then
/// dualized.  Every square is then verified concretely.  `False` is
/// certified; `Unknown` only arises when the underlying module
/// isomorphism search is inconclusive.
pub fn complexes_isomorphic(
    a: &MainComplex,
    b: &MainComplex,
    opts: &IsoOpts,
) -> Result<TriState> {
    if a.bound != b.bound || a.lowest_degree() != b.lowest_degree() {
        return Ok(TriState::False);
    }
    for (sa, sb) in a.sums.iter().zip(&b.sums) {
        let mut ta: Vec<usize> = sa.tags().to_vec();
        let mut tb: Vec<usize> = sb.tags().to_vec();
        ta.sort_unstable();
        tb.sort_unstable();
        if ta != tb {
            return Ok(TriState::False);
        }
    }

    let sigma = match is_isomorphic(&a.module, &b.module, opts) {
        IsoOutcome::Iso(map) => map,
        IsoOutcome::NotIso(_) => return Ok(TriState::False),
        IsoOutcome::Inconclusive => return Ok(TriState::Unknown),
    };

    let n = a.bound;
    let lowest = a.lowest_degree();
    let idx = |d: i64| (d - lowest) as usize;
    let num_terms = a.sums.len();
    let mut u: Vec<Option<Matrix>> = vec![None; num_terms];

    // Degree zero: lift sigma . e_a through the cover e_b.
    let homs0 = hom_basis(a.sums[idx(0)].module(), b.sums[idx(0)].module());
    let rows0 = b.sums[idx(0)].dim();
    let cols0 = a.sums[idx(0)].dim();
    let rhs0 = sigma.matrix.matmul(&a.augmentation.matrix);
    let u0 = lift(&b.augmentation.matrix, &rhs0, &homs0, rows0, cols0)
        .ok_or_else(|| internal("no lift of the module isomorphism through the covers"))?;
    u[idx(0)] = Some(u0);

    // Positive degrees: lift u_{d-1} . f_d through f'_d.
    for d in 1..=(n as i64 + 1) {
        let fa = a.map_leaving(d).unwrap().concrete_matrix();
        let fb = b.map_leaving(d).unwrap().concrete_matrix();
        let homs = hom_basis(a.sums[idx(d)].module(), b.sums[idx(d)].module());
        let rhs = u[idx(d - 1)].as_ref().unwrap().matmul(&fa);
        let ud = lift(&fb, &rhs, &homs, b.sums[idx(d)].dim(), a.sums[idx(d)].dim())
            .ok_or_else(|| internal(format!("no lift at degree {d}")))?;
        u[idx(d)] = Some(ud);
    }

    // The induced isomorphism of duals: tau = (sigma^{-1})*.
    let sigma_inv = ModuleMap::unchecked(
        b.module.clone(),
        a.module.clone(),
        sigma.matrix.inverse().ok_or_else(|| internal("module isomorphism not invertible"))?,
    );
    let tau = dual_hom(&sigma_inv, &a.dual, &b.dual);

    // Recover the resolutions of the duals by dualizing the negative side
    // back, then lift tau through them.
    let da: Vec<ProjMap> = (1..=n).map(|j| a.maps[n - j].dual()).collect();
    let db: Vec<ProjMap> = (1..=n).map(|j| b.maps[n - j].dual()).collect();
    let mut qa_sums: Vec<ProjSum> = vec![da[0].target.clone()];
    let mut qb_sums: Vec<ProjSum> = vec![db[0].target.clone()];
    for j in 1..=n {
        qa_sums.push(da[j - 1].source.clone());
        qb_sums.push(db[j - 1].source.clone());
    }

    let qa_aug = ModuleMap::unchecked(
        qa_sums[0].module().clone(),
        a.dual.module.clone(),
        a.dual_augmentation.matrix.clone(),
    );
    let qb_aug = ModuleMap::unchecked(
        qb_sums[0].module().clone(),
        b.dual.module.clone(),
        b.dual_augmentation.matrix.clone(),
    );

    let mut v: Vec<Matrix> = Vec::with_capacity(n + 1);
    let homsq = hom_basis(qa_sums[0].module(), qb_sums[0].module());
    let rhsq = tau.matrix.matmul(&qa_aug.matrix);
    let v0 = lift(&qb_aug.matrix, &rhsq, &homsq, qb_sums[0].dim(), qa_sums[0].dim())
        .ok_or_else(|| internal("no lift of the dual isomorphism through the covers"))?;
    v.push(v0);
    for j in 1..=n {
        let fa = da[j - 1].concrete_matrix();
        let fb = db[j - 1].concrete_matrix();
        let homs = hom_basis(qa_sums[j].module(), qb_sums[j].module());
        let rhs = v[j - 1].matmul(&fa);
        let vj = lift(&fb, &rhs, &homs, qb_sums[j].dim(), qa_sums[j].dim())
            .ok_or_else(|| internal(format!("no lift at dual degree {j}")))?;
        v.push(vj);
    }

    // Negative degrees of the original window: dualize the inverses of
    // the dual-side lifts.
    for j in 1..=(n as i64 + 1) {
        let jj = (j - 1) as usize;
        let vinv = v[jj]
            .inverse()
            .ok_or_else(|| internal(format!("dual-side lift {jj} is not invertible")))?;
        let w = ModuleMap::unchecked(
            qb_sums[jj].module().clone(),
            qa_sums[jj].module().clone(),
            vinv,
        );
        let dual_a = proj_dual(&qa_sums[jj]);
        let dual_b = proj_dual(&qb_sums[jj]);
        let wd = dual_hom(&w, &dual_a, &dual_b);
        u[idx(-j)] = Some(wd.matrix);
    }

    // Verify: every degreewise map is invertible and every square with
    // the differentials commutes, concretely.
    for (i, ui) in u.iter().enumerate() {
        let ui = ui.as_ref().ok_or_else(|| internal(format!("missing map at index {i}")))?;
        if !ui.is_invertible() {
            return Err(internal(format!("degreewise map at index {i} is not invertible")));
        }
    }
    for d in (lowest + 1)..=a.highest_degree() {
        let fa = a.map_leaving(d).unwrap().concrete_matrix();
        let fb = b.map_leaving(d).unwrap().concrete_matrix();
        let left = u[idx(d - 1)].as_ref().unwrap().matmul(&fa);
        let right = fb.matmul(u[idx(d)].as_ref().unwrap());
        if left != right {
            return Err(internal(format!("square at degree {d} does not commute")));
        }
    }
    Ok(TriState::True)
}
