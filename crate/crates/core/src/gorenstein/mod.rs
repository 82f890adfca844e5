//! Verdicts, complex builders, and statement auditors for the Gorenstein
//! side of the library: bounded semi-Gorenstein-projectivity checks, the
//! two-sided main complex of a module with vanishing Ext on both sides,
//! finite projective-window verification, and auditors for the structural
//! statements that relate syzygies, duals, and transposes.

pub(crate) mod audits;
mod extension;
mod main_complex;
mod verdict;
mod window;

pub use audits::{
    audit_conjectures, check_cosyzygy_dual_transfer, check_dual_evaluation_identity,
    check_local_dual_projective, check_second_syzygy_identity, check_short_local_balance,
    check_syzygy_dual_transfer, check_transpose_bijection, check_transpose_pd_bound,
    check_vanishing_decomposition, reverify_candidate, Candidate, ConjectureAudit,
    CosyzygyDualReport, LocalDualReport, RungReport, ShortLocalReport, SyzygyDualReport,
    TransposeBijectionReport, TransposePdReport, VanishingDecompositionReport, LADDER_RUNGS,
};
pub use extension::{
    check_ext_into_new_projective, check_inflation_ext_agreement,
    check_simple_extension_biconditional, one_point_extension, verify_extension_structure,
    ExtensionBiconditionalReport, ExtensionStructureReport, OnePointExtension,
};
pub use main_complex::{
    build_main_complex, complex_to_module, complexes_isomorphic, MainComplex, RecoveredModule,
};
pub use window::{verify_window, WindowReport};
pub use verdict::{
    is_gp, is_inf_torsionfree, is_reflexive, is_sgp, is_torsionless, nunke_check,
    BoundedVerdict, VerdictStatus, Witness,
};
