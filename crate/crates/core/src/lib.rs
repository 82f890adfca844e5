//! Exact computational module theory over finite-dimensional split basic
//! algebras: algebra and module representations, projective resolutions,
//! algebra duals and transposes, Gorenstein-style homological tests, and a
//! seed-deterministic counterexample explorer.

pub mod algebra;
pub mod complexes;
pub mod error;
pub mod explorer;
pub mod gorenstein;
pub mod io;
pub mod linalg;
pub mod modrep;
pub mod render;

pub use algebra::{preset_algebra, Algebra, AlgebraMap, Classification};
pub use complexes::{
    a_dual, cosyzygy, cosyzygy_embedding, dual_hom, evaluation, ext_hom_dims, ext_regular_dims,
    phi, proj_dual, projective_dimension, syzygy, transpose, Complex, CosyzygyEmbedding,
    DualModule, Evaluation, ProjMap, ProjSum, Resolution,
};
pub use error::{Error, Result};
pub use explorer::{realize_algebra, sample_short_local, search, search_report_json, AlgebraSource, SearchHit, SearchOutcome, SearchSpec};
pub use gorenstein::{
    audit_conjectures, build_main_complex, check_cosyzygy_dual_transfer, check_ext_into_new_projective,
    check_inflation_ext_agreement, check_simple_extension_biconditional, one_point_extension,
    verify_extension_structure, ExtensionBiconditionalReport, ExtensionStructureReport,
    OnePointExtension,
    check_dual_evaluation_identity, check_local_dual_projective, check_second_syzygy_identity,
    check_short_local_balance, check_syzygy_dual_transfer, check_transpose_bijection,
    check_transpose_pd_bound, check_vanishing_decomposition, complex_to_module,
    complexes_isomorphic, is_gp, is_inf_torsionfree, is_reflexive, is_sgp, is_torsionless,
    nunke_check, reverify_candidate, verify_window, BoundedVerdict, Candidate, ConjectureAudit,
    CosyzygyDualReport, LocalDualReport, MainComplex, RecoveredModule, RungReport,
    ShortLocalReport, SyzygyDualReport, TransposeBijectionReport, TransposePdReport,
    VanishingDecompositionReport, VerdictStatus, WindowReport, Witness, LADDER_RUNGS,
};
pub use io::{
    algebra_from_json, algebra_to_json, candidate_from_json, candidate_to_json, load_algebra,
    load_module, module_from_json, module_from_json_over, module_to_json, parse_algebra_spec,
    parse_field_spec, parse_module_spec, save_algebra, save_module,
};
pub use linalg::{FieldSpec, Matrix, Scalar};
pub use render::{projective_label, render_main_complex, render_resolution, sum_label};
pub use modrep::{
    enumerate_modules, hom_basis, hom_dim, is_injective, is_isomorphic, is_projective,
    is_self_injective, k_dual, projective_cover, reduce, EnumerateSpec, IsoOpts, IsoOutcome,
    Module, ModuleMap, Side, TriState,
};
