//! One-point extensions: enlarging an algebra by one new simple module
//! whose projective cover has a prescribed radical.
//!
//! Given an algebra `B` and a left `B`-module `M`, the extension algebra
//! has underlying space `B + M + k`, with `B` and the new idempotent `s`
//! multiplying as a product, `M` squeezed between them (`b * m` through the
//! module action, `m * s = m`), and all other mixed products zero.  The new
//! simple module sits on top of the new projective `M + k` and is always
//! injective; its syzygy recovers `M`.  The auditors in this file verify
//! those structure facts and the equivalence that characterizes when the
//! new simple keeps Ext vanishing against the regular module.

use crate::algebra::Algebra;
use crate::complexes::{a_dual, ext_hom_dims, syzygy};
use crate::error::{Error, Result};
use crate::gorenstein::verdict::{is_sgp, nunke_check, BoundedVerdict};
use crate::linalg::{Matrix, Scalar};
use crate::modrep::{
    end_dim, hom_dim, is_injective, is_isomorphic, IsoOpts, IsoOutcome, Module, Side, TriState,
};

/// An algebra extended by one new vertex, together with the data the
/// extension was built from.
pub struct OnePointExtension {
    /// The original algebra.
    pub base: Algebra,
    /// The left module over the base that became the radical of the new
    /// projective.
    pub bimodule: Module,
    /// The extended algebra.
    pub algebra: Algebra,
    /// Index of the new idempotent among the extended algebra's
    /// idempotents.
    pub simple_index: usize,
}

impl std::fmt::Debug for OnePointExtension {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "OnePointExtension(base dim {}, bimodule dim {}, extended dim {})",
            self.base.dim(),
            self.bimodule.dim(),
            self.algebra.dim()
        )
    }
}

/// Builds the one-point extension of `b` by the left `b`-module `m`.
pub fn one_point_extension(b: &Algebra, m: &Module) -> Result<OnePointExtension> {
    if m.side() != Side::Left {
        return Err(Error::Precondition(
            "one-point extension expects a left module".into(),
        ));
    }
    if !m.base_algebra().same_structure(b) {
        return Err(Error::Precondition(format!(
            "module {} is not over the extended algebra's base",
            m.label()
        )));
    }
    let field = b.field();
    let n = b.dim();
    let t = m.dim();
    let dim = n + t + 1;
    let one = Scalar::from_int(field, 1);

    // Labels: base labels, then bracketed names for the module part and the
    // new idempotent, uniquified against the base labels.
    let mut labels: Vec<String> = b.labels().to_vec();
    for i in 0..t {
        let mut lab = format!("[m{}]", i);
        while labels.contains(&lab) {
            lab.push('\'');
        }
        labels.push(lab);
    }
    let mut s_lab = "[s]".to_string();
    while labels.contains(&s_lab) {
        s_lab.push('\'');
    }
    labels.push(s_lab);

    let pad = |v: &Matrix, offset: usize| -> Matrix {
        let mut out = Matrix::zero(field, dim, 1);
        for r in 0..v.rows() {
            out.set(r + offset, 0, v.get(r, 0));
        }
        out
    };
    let zero_col = Matrix::zero(field, dim, 1);
    let unit_col = |idx: usize| -> Matrix {
        let mut out = Matrix::zero(field, dim, 1);
        out.set(idx, 0, one.clone());
        out
    };

    let mut mul = vec![vec![zero_col.clone(); dim]; dim];
    for (i, row) in mul.iter_mut().enumerate().take(n) {
        for (j, entry) in row.iter_mut().enumerate().take(n) {
            *entry = pad(&b.basis_product(i, j), 0);
        }
        for j in 0..t {
            row[n + j] = pad(&m.action(i).column(j), n);
        }
        // b * s = 0.
    }
    for i in 0..t {
        // m * b = 0 and m * m' = 0; m * s = m.
        mul[n + i][dim - 1] = unit_col(n + i);
    }
    // s * b = 0 and s * m = 0; s * s = s.
    mul[dim - 1][dim - 1] = unit_col(dim - 1);

    let unit = {
        let mut u = pad(b.unit(), 0);
        u.set(dim - 1, 0, one.clone());
        u
    };
    let mut idempotents: Vec<Matrix> = (0..b.num_idempotents())
        .map(|i| pad(b.idempotent(i), 0))
        .collect();
    idempotents.push(unit_col(dim - 1));
    let simple_index = idempotents.len() - 1;

    let base_rad = b.radical_basis();
    let mut rad_cols: Vec<Matrix> = (0..base_rad.cols())
        .map(|c| pad(&base_rad.column(c), 0))
        .collect();
    for i in 0..t {
        rad_cols.push(unit_col(n + i));
    }
    let radical = if rad_cols.is_empty() {
        Matrix::zero(field, dim, 0)
    } else {
        Matrix::hstack(&rad_cols.iter().collect::<Vec<_>>())
    };

    let algebra = Algebra::new(
        field,
        labels,
        format!("ext({}, {})", b.name(), m.label()),
        unit,
        &mul,
        idempotents,
        radical,
    )?;
    Ok(OnePointExtension {
        base: b.clone(),
        bimodule: m.clone(),
        algebra,
        simple_index,
    })
}

impl OnePointExtension {
    /// The new simple module at the added vertex.
    pub fn new_simple(&self) -> Module {
        Module::simple(&self.algebra, Side::Left, self.simple_index)
            .relabel("new-vertex simple")
    }

    /// The projective cover of the new simple.
    pub fn new_projective(&self) -> Module {
        Module::projective(&self.algebra, Side::Left, self.simple_index)
    }

    /// Extends a module over the base to the extension by letting the new
    /// part act as zero.  Works on either side.
    pub fn inflate(&self, u: &Module) -> Result<Module> {
        if !u.base_algebra().same_structure(&self.base) {
            return Err(Error::Precondition(format!(
                "module {} is not over the extension's base",
                u.label()
            )));
        }
        let dim = self.algebra.dim();
        let n = self.base.dim();
        let zero = Matrix::zero(self.algebra.field(), u.dim(), u.dim());
        let mut action = Vec::with_capacity(dim);
        for i in 0..dim {
            if i < n {
                action.push(u.action(i).clone());
            } else {
                action.push(zero.clone());
            }
        }
        Module::new_over(
            &self.algebra,
            u.side(),
            action,
            format!("inflated {}", u.label()),
        )
    }
}

/// Structure facts of a one-point extension, re-verified on the concrete
/// algebra: the new simple is injective with one-dimensional endomorphism
/// ring, its syzygy is the inflated bimodule, and its dual vanishes exactly
/// when the bimodule is nonzero.
#[derive(Debug)]
pub struct ExtensionStructureReport {
    /// The new simple is injective.
    pub simple_injective: bool,
    /// Endomorphism dimension of the new simple.
    pub simple_end_dim: usize,
    /// Dimension of the dual of the new simple.
    pub simple_dual_dim: usize,
    /// The syzygy of the new simple is isomorphic to the inflated bimodule.
    pub syzygy_is_bimodule: TriState,
    /// The new projective's dimension splits as bimodule plus one.
    pub projective_dim_ok: bool,
}

/// Re-verifies the structure facts of the extension.  All of them are
/// unconditional consequences of the construction, so decided violations
/// are internal errors; only the isomorphism test may stay `Unknown`.
pub fn verify_extension_structure(
    ext: &OnePointExtension,
    opts: &IsoOpts,
) -> Result<ExtensionStructureReport> {
    let s = ext.new_simple();
    let p = ext.new_projective();
    let simple_injective = is_injective(&s);
    if !simple_injective {
        return Err(Error::Internal(
            "the new-vertex simple of a one-point extension must be injective".into(),
        ));
    }
    let simple_end_dim = end_dim(&s);
    if simple_end_dim != 1 {
        return Err(Error::Internal(format!(
            "the new-vertex simple has endomorphism dimension {}",
            simple_end_dim
        )));
    }
    let simple_dual_dim = a_dual(&s).dim();
    let expected_dual_zero = ext.bimodule.dim() > 0;
    if expected_dual_zero && simple_dual_dim != 0 {
        return Err(Error::Internal(format!(
            "the new-vertex simple is injective and not projective but has dual dimension {}",
            simple_dual_dim
        )));
    }
    if !expected_dual_zero && simple_dual_dim == 0 {
        return Err(Error::Internal(
            "the new-vertex simple is projective but has zero dual".into(),
        ));
    }
    let projective_dim_ok = p.dim() == ext.bimodule.dim() + 1;
    if !projective_dim_ok {
        return Err(Error::Internal(format!(
            "the new projective has dimension {}, expected {}",
            p.dim(),
            ext.bimodule.dim() + 1
        )));
    }
    let inflated = ext.inflate(&ext.bimodule)?;
    let omega = syzygy(&s, 1);
    let syzygy_is_bimodule = match is_isomorphic(&omega, &inflated, opts) {
        IsoOutcome::Iso(_) => TriState::True,
        IsoOutcome::Inconclusive => TriState::Unknown,
        IsoOutcome::NotIso(why) => {
            return Err(Error::Internal(format!(
                "the syzygy of the new-vertex simple is not the inflated bimodule: {}",
                why
            )))
        }
    };
    Ok(ExtensionStructureReport {
        simple_injective,
        simple_end_dim,
        simple_dual_dim,
        syzygy_is_bimodule,
        projective_dim_ok,
    })
}

/// Checks that Ext groups between inflated modules agree with Ext groups
/// computed over the base, degree by degree up to `bound`; returns the
/// common dimensions, starting with Hom at index 0.
pub fn check_inflation_ext_agreement(
    ext: &OnePointExtension,
    u: &Module,
    u2: &Module,
    bound: usize,
) -> Result<Vec<usize>> {
    let iu = ext.inflate(u)?;
    let iu2 = ext.inflate(u2)?;
    let mut over_base = vec![hom_dim(u, u2)];
    over_base.extend(ext_hom_dims(u, u2, bound, false));
    let mut over_ext = vec![hom_dim(&iu, &iu2)];
    over_ext.extend(ext_hom_dims(&iu, &iu2, bound, false));
    if over_base != over_ext {
        return Err(Error::Internal(format!(
            "Ext dimensions change under inflation: {:?} over the base vs {:?} over the \
             extension",
            over_base, over_ext
        )));
    }
    Ok(over_base)
}

/// Checks that Ext groups from an inflated module into the new projective
/// agree with Ext groups into the bimodule over the base, degree by degree
/// up to `bound`; returns the common dimensions, starting with Hom.
pub fn check_ext_into_new_projective(
    ext: &OnePointExtension,
    u: &Module,
    bound: usize,
) -> Result<Vec<usize>> {
    let iu = ext.inflate(u)?;
    let p = ext.new_projective();
    let mut into_projective = vec![hom_dim(&iu, &p)];
    into_projective.extend(ext_hom_dims(&iu, &p, bound, false));
    let mut into_bimodule = vec![hom_dim(u, &ext.bimodule)];
    into_bimodule.extend(ext_hom_dims(u, &ext.bimodule, bound, false));
    if into_projective != into_bimodule {
        return Err(Error::Internal(format!(
            "Ext into the new projective disagrees with Ext into the bimodule: {:?} vs {:?}",
            into_projective, into_bimodule
        )));
    }
    Ok(into_projective)
}

/// Report of [`check_simple_extension_biconditional`]: the new simple keeps
/// Ext vanishing against the regular module exactly when the bimodule is a
/// brick with zero dual, vanishing self-extensions, and vanishing Ext
/// against the base's regular module, with the bimodule conditions checked
/// one degree short because the syzygy shifts degrees by one.
#[derive(Debug)]
pub struct ExtensionBiconditionalReport {
    /// Verdict for the new simple over the extension.
    pub new_simple_sgp: BoundedVerdict,
    /// First side of the equivalence.
    pub side_simple: bool,
    /// The bimodule's dual over the base vanishes.
    pub bimodule_dual_zero: bool,
    /// The bimodule has a one-dimensional endomorphism ring.
    pub bimodule_brick: bool,
    /// Zero-dual-plus-Ext verdict for the bimodule, one degree short
    /// (`None` when the bound leaves no degrees, or the bimodule is zero).
    pub bimodule_nunke: Option<BoundedVerdict>,
    /// Self-extension dimensions of the bimodule, degrees 1 up to one
    /// short of the bound.
    pub bimodule_self_ext: Vec<usize>,
    /// Second side of the equivalence.
    pub side_bimodule: bool,
}

/// Audits the equivalence characterizing when the new-vertex simple keeps
/// Ext vanishing.  The two sides are equivalent at matched truncations, so
/// a decided disagreement is an internal error.
pub fn check_simple_extension_biconditional(
    ext: &OnePointExtension,
    bound: usize,
) -> Result<ExtensionBiconditionalReport> {
    assert!(bound >= 1, "bound must be at least 1");
    let s = ext.new_simple();
    let new_simple_sgp = is_sgp(&s, bound);
    let side_simple = new_simple_sgp.holds();

    let m = &ext.bimodule;
    let (bimodule_dual_zero, bimodule_brick, bimodule_nunke, bimodule_self_ext, side_bimodule) =
        if m.dim() == 0 {
            (true, true, None, Vec::new(), true)
        } else {
            let dual_zero = a_dual(m).dim() == 0;
            let brick = end_dim(m) == 1;
            let nunke = if bound >= 2 {
                Some(nunke_check(m, bound - 1))
            } else {
                None
            };
            let self_ext = if bound >= 2 {
                ext_hom_dims(m, m, bound - 1, false)
            } else {
                Vec::new()
            };
            let side = dual_zero
                && brick
                && nunke.as_ref().is_none_or(|v| v.holds())
                && self_ext.iter().all(|&d| d == 0);
            (dual_zero, brick, nunke, self_ext, side)
        };

    if side_simple != side_bimodule {
        return Err(Error::Internal(format!(
            "extension equivalence violated: new simple verdict {:?} vs bimodule side \
             (dual zero {}, brick {}, verdict {:?}, self-ext {:?})",
            new_simple_sgp, bimodule_dual_zero, bimodule_brick, bimodule_nunke, bimodule_self_ext
        )));
    }

    Ok(ExtensionBiconditionalReport {
        new_simple_sgp,
        side_simple,
        bimodule_dual_zero,
        bimodule_brick,
        bimodule_nunke,
        bimodule_self_ext,
        side_bimodule,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;
    use crate::complexes::ext_regular_dims;
    use crate::linalg::FieldSpec;
    use crate::modrep::{is_projective, reduce};

    fn f2() -> FieldSpec {
        FieldSpec::Prime(2)
    }

    #[test]
    fn extension_of_field_by_field_is_the_arrow_algebra() {
        let b = preset_algebra(f2(), "k", None).unwrap();
        let m = Module::regular(&b, Side::Left).relabel("k");
        let ext = one_point_extension(&b, &m).unwrap();
        assert_eq!(ext.algebra.dim(), 3);
        assert_eq!(ext.algebra.num_idempotents(), 2);
        assert_eq!(ext.simple_index, 1);
        let class = ext.algebra.classify();
        assert_eq!(class.num_simples, 2);
        assert_eq!(class.loewy_length, 2);

        let report = verify_extension_structure(&ext, &IsoOpts::default()).unwrap();
        assert!(report.simple_injective);
        assert_eq!(report.simple_end_dim, 1);
        assert_eq!(report.simple_dual_dim, 0);
        assert_eq!(report.syzygy_is_bimodule, TriState::True);

        // Both sides of the equivalence are false here: the bimodule has a
        // nonzero dual, and the new simple has a lasting Ext obstruction.
        let bic = check_simple_extension_biconditional(&ext, 5).unwrap();
        assert!(!bic.side_simple);
        assert!(!bic.side_bimodule);
        assert!(!bic.bimodule_dual_zero);
        assert!(bic.bimodule_brick);
    }

    #[test]
    fn extension_matches_two_vertex_preset_homologically() {
        let b = preset_algebra(f2(), "k", None).unwrap();
        let m = Module::regular(&b, Side::Left).relabel("k");
        let ext = one_point_extension(&b, &m).unwrap();
        let a2 = preset_algebra(f2(), "a2", None).unwrap();
        // Same global shape: two simples, dimension three, and matching
        // Ext behaviour of the non-projective simple on the matching side.
        assert_eq!(ext.algebra.dim(), a2.dim());
        let s_ext = ext.new_simple();
        let dims_ext = ext_regular_dims(&s_ext, 4, false);
        let mut found = false;
        for side in [Side::Left, Side::Right] {
            for i in 0..2 {
                let s = Module::simple(&a2, side, i);
                if !is_projective(&s) && ext_regular_dims(&s, 4, false) == dims_ext {
                    found = true;
                }
            }
        }
        assert!(found, "no matching non-projective simple over the preset");
    }

    #[test]
    fn inflation_preserves_ext_and_reaches_the_new_projective() {
        let b = preset_algebra(f2(), "kxn", Some(2)).unwrap();
        let m = Module::simple(&b, Side::Left, 0).relabel("top");
        let ext = one_point_extension(&b, &m).unwrap();
        verify_extension_structure(&ext, &IsoOpts::default()).unwrap();

        let u = Module::simple(&b, Side::Left, 0);
        let reg = Module::regular(&b, Side::Left);
        let dims = check_inflation_ext_agreement(&ext, &u, &u, 4).unwrap();
        assert_eq!(dims.len(), 5);
        assert!(dims[1..].iter().any(|&d| d > 0));
        check_inflation_ext_agreement(&ext, &u, &reg, 4).unwrap();
        check_ext_into_new_projective(&ext, &u, 4).unwrap();
        check_ext_into_new_projective(&ext, &reg, 4).unwrap();
    }

    #[test]
    fn inflated_projectives_stay_projective() {
        let b = preset_algebra(f2(), "a2", None).unwrap();
        for i in 0..2 {
            let m = Module::simple(&b, Side::Left, i);
            let ext = one_point_extension(&b, &m).unwrap();
            for j in 0..2 {
                let p = Module::projective(&b, Side::Left, j);
                let ip = ext.inflate(&p).unwrap();
                assert!(is_projective(&ip), "inflated projective {j} over extension by {i}");
            }
            // Old projectives keep their top: reduction strips everything.
            let p0 = ext.inflate(&Module::projective(&b, Side::Left, 0)).unwrap();
            assert_eq!(reduce(&p0).0.dim(), 0);
        }
    }

    #[test]
    fn zero_bimodule_gives_a_projective_new_simple() {
        let b = preset_algebra(f2(), "kxn", Some(3)).unwrap();
        let m = Module::zero(&b, Side::Left);
        let ext = one_point_extension(&b, &m).unwrap();
        let report = verify_extension_structure(&ext, &IsoOpts::default()).unwrap();
        assert!(report.simple_injective);
        assert!(report.simple_dual_dim > 0);
        let s = ext.new_simple();
        assert!(is_projective(&s));
        let bic = check_simple_extension_biconditional(&ext, 4).unwrap();
        assert!(bic.side_simple && bic.side_bimodule);
    }

    #[test]
    fn extension_rejects_right_modules_and_foreign_modules() {
        let b = preset_algebra(f2(), "kxn", Some(2)).unwrap();
        let wrong_side = Module::simple(&b, Side::Right, 0);
        assert!(matches!(
            one_point_extension(&b, &wrong_side),
            Err(Error::Precondition(_))
        ));
        let other = preset_algebra(f2(), "a2", None).unwrap();
        let foreign = Module::simple(&other, Side::Left, 0);
        assert!(matches!(
            one_point_extension(&b, &foreign),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn biconditional_on_a_self_injective_base() {
        // Over a self-injective base the simple bimodule has a nonzero
        // dual, so both sides must come out false, with the brick and
        // self-extension data still recorded.
        let b = preset_algebra(f2(), "kxy", None).unwrap();
        let m = Module::simple(&b, Side::Left, 0).relabel("top");
        let ext = one_point_extension(&b, &m).unwrap();
        verify_extension_structure(&ext, &IsoOpts::default()).unwrap();
        let bic = check_simple_extension_biconditional(&ext, 4).unwrap();
        assert!(!bic.side_simple);
        assert!(!bic.side_bimodule);
        assert!(!bic.bimodule_dual_zero);
        assert!(bic.bimodule_brick);
    }
}
