//! `gorenstein-lab`: a command-line laboratory for exact module theory
//! over finite-dimensional split basic algebras.
//!
//! Exit codes: 0 = success (and, for property commands, the property
//! holds); 1 = the property was checked and a decided violation was found;
//! 2 = bad input or an unmet precondition; 3 = an internal consistency
//! check failed (a bug in the library, not in the input).

use std::path::Path;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use gorenstein_core::complexes::Resolution;
use gorenstein_core::{
    a_dual, audit_conjectures, build_main_complex, check_short_local_balance,
    check_simple_extension_biconditional, check_transpose_bijection, complex_to_module,
    enumerate_modules, evaluation, ext_hom_dims, ext_regular_dims, hom_dim, is_gp, is_injective,
    is_isomorphic, is_projective, is_self_injective, is_sgp, one_point_extension,
    parse_algebra_spec, parse_field_spec, parse_module_spec, projective_label,
    projective_dimension, reduce, render_main_complex, render_resolution, reverify_candidate,
    save_algebra, search, search_report_json, syzygy, transpose, verify_extension_structure,
    verify_window, Algebra, AlgebraSource, BoundedVerdict, EnumerateSpec, Error, IsoOpts,
    IsoOutcome, Module, Result, SearchSpec, Side, TriState, VerdictStatus, Witness,
    algebra_to_json, candidate_from_json, candidate_to_json,
};

#[derive(Parser)]
#[command(
    name = "gorenstein-lab",
    about = "Exact homological computations over split basic algebras",
    version
)]
struct Cli {
    /// Field for preset algebras: Q, or a prime.
    #[arg(long, global = true, default_value = "2")]
    field: String,
    /// Print a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Print nothing; communicate through the exit code only.
    #[arg(long, global = true)]
    quiet: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct AlgebraArg {
    /// Algebra: `preset:NAME` (see `check-algebra --help`) or a JSON file.
    #[arg(long)]
    algebra: String,
}

#[derive(Args)]
struct ModuleArg {
    /// Module: `simple:i`, `projective:i` (1-based), `regular`, `zero`,
    /// optionally prefixed `right:`, or a JSON file.
    #[arg(long)]
    module: String,
}

#[derive(Args)]
struct BoundArg {
    /// Vanishing-test truncation bound (default: twice the algebra
    /// dimension).
    #[arg(long)]
    bound: Option<usize>,
}

#[derive(Args)]
struct SeedArg {
    /// Seed for randomized searches (isomorphism guessing, sampling).
    #[arg(long, default_value_t = 7)]
    seed: u64,
}

#[derive(Subcommand)]
enum Command {
    /// Load and verify an algebra; print its classification.
    CheckAlgebra {
        #[command(flatten)]
        algebra: AlgebraArg,
        /// Also run the randomized self-injectivity test.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Basic invariants of one module.
    ModuleInfo {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Minimal projective resolution terms and syzygy dimensions.
    Resolve {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// The dual module Hom(M, A) and the torsionless/reflexive status.
    Dual {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// The transpose and its relation to the second syzygy.
    Transpose {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Ext dimensions against the regular module or a second module.
    Ext {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        /// Optional second module; omitted means the regular module.
        #[arg(long)]
        with: Option<String>,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Bounded vanishing test Ext^i(M, A) = 0 for 1 <= i <= bound.
    Sgp {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Bounded totally-acyclic-complex test (vanishing on both sides plus
    /// an exact window).
    Gp {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
    },
    /// Kernel and cokernel of the evaluation map M -> M**.
    Phi {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
    },
    /// Build and draw the two-sided main complex of a module.
    MainComplex {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
        /// Also recover the module back from the complex and compare.
        #[arg(long)]
        verify: bool,
        #[command(flatten)]
        seed: SeedArg,
        /// Write the diagram to this file as well.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Verify a four-term window of a right-module resolution under its
    /// two readings.
    Window {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        /// Window position: uses resolution maps at, at+1, at+2.
        #[arg(long, default_value_t = 1)]
        at: usize,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Check the transpose bijection package on one module.
    TrBijection {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Enumerate small modules and audit the open-implication ladder.
    Audit {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        bound: BoundArg,
        /// Maximum dimension of enumerated modules.
        #[arg(long, default_value_t = 3)]
        max_dim: usize,
        /// Maximum total top multiplicity of enumerated modules.
        #[arg(long, default_value_t = 2)]
        max_top: usize,
        /// Stop after this many modules.
        #[arg(long)]
        limit: Option<usize>,
        /// Re-verify each candidate from its serialized certificate.
        #[arg(long)]
        verify: bool,
        /// Write candidate certificates to this JSON file.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Extend an algebra by a module at a new one-dimensional vertex.
    OnePointExt {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
        #[command(flatten)]
        seed: SeedArg,
        /// Write the extended algebra to this JSON file.
        #[arg(long)]
        emit: Option<String>,
    },
    /// Balance and rank facts for modules over a short local algebra.
    ShortLocal {
        #[command(flatten)]
        algebra: AlgebraArg,
        #[command(flatten)]
        module: ModuleArg,
        #[command(flatten)]
        bound: BoundArg,
        #[command(flatten)]
        seed: SeedArg,
    },
    /// Randomized, seed-deterministic search for two-sided modules and
    /// implication violations.
    Search {
        /// Fixed algebra (mutually exclusive with --sample-local).
        #[arg(long)]
        algebra: Option<String>,
        /// Sample a radical-cube-zero local algebra: `p,gens,socle`.
        #[arg(long)]
        sample_local: Option<String>,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long, default_value_t = 40)]
        trials: usize,
        #[command(flatten)]
        bound: BoundArg,
        #[arg(long, default_value_t = 2)]
        max_free_rank: usize,
        /// Syzygy shifts, comma-separated (0 = the sample itself).
        #[arg(long, default_value = "0,1")]
        shifts: String,
        #[arg(long, default_value_t = 24)]
        max_dim: usize,
        /// Write the full report to this JSON file.
        #[arg(long)]
        emit: Option<String>,
    },
}

struct Output {
    json: bool,
    quiet: bool,
}

impl Output {
    fn finish(&self, code: u8, text: &str, report: Value) -> u8 {
        if self.json {
            println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
        } else if !self.quiet {
            print!("{text}");
        }
        code
    }
}

fn default_bound(a: &Algebra, bound: Option<usize>) -> usize {
    bound.unwrap_or_else(|| (2 * a.dim()).max(2))
}

fn load(field_text: &str, algebra: &str, module: Option<&str>) -> Result<(Algebra, Option<Module>)> {
    let field = parse_field_spec(field_text)?;
    let a = parse_algebra_spec(field, algebra)?;
    let m = match module {
        Some(spec) => Some(parse_module_spec(&a, spec)?),
        None => None,
    };
    Ok((a, m))
}

fn witness_text(w: &Option<Witness>) -> String {
    match w {
        Some(Witness::Ext { degree, dim }) => {
            format!("Ext^{degree}(M, A) has dimension {dim}")
        }
        Some(Witness::DualExt { degree, dim }) => {
            format!("Ext^{degree}(M*, A) has dimension {dim}")
        }
        Some(Witness::NotReflexive { ker_dim, cok_dim }) => format!(
            "evaluation map has kernel dimension {ker_dim} and cokernel dimension {cok_dim}"
        ),
        Some(Witness::DualNonzero { dim }) => format!("the dual is nonzero (dimension {dim})"),
        None => "no witness".to_string(),
    }
}

fn verdict_json(v: &BoundedVerdict) -> Value {
    json!({
        "status": format!("{:?}", v.status),
        "bound": v.bound,
        "witness": v.witness.as_ref().map(|w| witness_text(&Some(w.clone()))),
    })
}

fn tristate_text(t: TriState) -> &'static str {
    match t {
        TriState::True => "yes",
        TriState::False => "no",
        TriState::Unknown => "unknown",
    }
}

fn field_text(a: &Algebra) -> String {
    match a.field() {
        gorenstein_core::FieldSpec::Rationals => "Q".to_string(),
        gorenstein_core::FieldSpec::Prime(p) => format!("F_{p}"),
    }
}

fn run(cli: Cli) -> Result<u8> {
    let out = Output { json: cli.json, quiet: cli.quiet };
    match cli.command {
        Command::CheckAlgebra { algebra, verify, seed } => {
            let (a, _) = load(&cli.field, &algebra.algebra, None)?;
            let cls = a.classify();
            let mut text = format!(
                "algebra {} over {}: dimension {}, {} simple(s)\n",
                a.name(),
                field_text(&a),
                a.dim(),
                cls.num_simples
            );
            text += &format!(
                "radical layers: {:?}, loewy length {}\n",
                cls.radical_dims, cls.loewy_length
            );
            text += &format!(
                "local: {}, short local: {}, connected: {}\n",
                cls.local, cls.short_local, cls.connected
            );
            if let Some((e, s)) = cls.hilbert_type {
                text += &format!("radical layer type: ({e}, {s})\n");
            }
            let mut selfinj = None;
            if verify {
                let v = is_self_injective(&a, &IsoOpts { seed: seed.seed, ..IsoOpts::default() });
                text += &format!("self-injective: {}\n", tristate_text(v));
                selfinj = Some(tristate_text(v));
            }
            let report = json!({
                "name": a.name(),
                "field": field_text(&a),
                "dim": a.dim(),
                "num_simples": cls.num_simples,
                "radical_dims": cls.radical_dims,
                "loewy_length": cls.loewy_length,
                "local": cls.local,
                "short_local": cls.short_local,
                "connected": cls.connected,
                "hilbert_type": cls.hilbert_type.map(|(e, s)| vec![e, s]),
                "self_injective": selfinj,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::ModuleInfo { algebra, module } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let dual = a_dual(&m);
            let (red, _) = reduce(&m);
            let proj = is_projective(&m);
            let inj = is_injective(&m);
            let side = match m.side() { Side::Left => "left", Side::Right => "right" };
            let mut text = format!(
                "module {} ({} module over {}): dimension {}\n",
                m.label(), side, a.name(), m.dim()
            );
            text += &format!("top multiplicities: {:?}\n", m.top_multiplicities());
            text += &format!("dual dimension: {}\n", dual.dim());
            text += &format!(
                "projective: {}, injective: {}, reduced part dimension: {}\n",
                proj, inj, red.dim()
            );
            let report = json!({
                "label": m.label(),
                "side": side,
                "dim": m.dim(),
                "top": m.top_multiplicities(),
                "dual_dim": dual.dim(),
                "projective": proj,
                "injective": inj,
                "reduced_dim": red.dim(),
            });
            Ok(out.finish(0, &text, report))
        }
        Command::Resolve { algebra, module, bound } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let mut res = Resolution::new(&m);
            res.ensure(n);
            let mut text = render_resolution(&res);
            let syz: Vec<usize> = (1..=n).map(|k| res.syzygy(k).dim()).collect();
            text += &format!("syzygy dimensions 1..{}: {:?}\n", n, syz);
            let pd = projective_dimension(&m, n);
            match pd {
                Some(d) => text += &format!("projective dimension: {d}\n"),
                None => text += &format!("projective dimension: > {n}\n"),
            }
            let terms: Vec<String> = (0..res.num_terms())
                .map(|k| projective_label(m.acting(), &res.term(k).multiplicities()))
                .collect();
            let report = json!({
                "module": m.label(),
                "terms": terms,
                "syzygy_dims": syz,
                "projective_dimension": pd,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::Dual { algebra, module } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let ev = evaluation(&m);
            let ker = ev.map.kernel().0.dim();
            let cok = ev.map.cokernel().0.dim();
            let dual_side = match ev.dual.module.side() { Side::Left => "left", Side::Right => "right" };
            let mut text = format!(
                "dual of {} over {}: dimension {} ({} module)\n",
                m.label(), a.name(), ev.dual.dim(), dual_side
            );
            text += &format!(
                "evaluation M -> M**: kernel dimension {}, cokernel dimension {}\n",
                ker, cok
            );
            text += &format!(
                "torsionless: {}, reflexive: {}\n",
                ker == 0,
                ker == 0 && cok == 0
            );
            let report = json!({
                "module": m.label(),
                "dual_dim": ev.dual.dim(),
                "dual_side": dual_side,
                "ker_phi": ker,
                "cok_phi": cok,
                "torsionless": ker == 0,
                "reflexive": ker == 0 && cok == 0,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::Transpose { algebra, module, bound } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let tr = transpose(&m);
            let om2 = syzygy(&m, 2);
            let tr_dual = a_dual(&tr);
            let mut text = format!(
                "transpose of {}: dimension {} ({} module)\n",
                m.label(),
                tr.dim(),
                match tr.side() { Side::Left => "left", Side::Right => "right" }
            );
            text += &format!(
                "second syzygy dimension {}, transpose-dual dimension {}\n",
                om2.dim(), tr_dual.dim()
            );
            let pd = projective_dimension(&tr, n);
            match pd {
                Some(d) => text += &format!("transpose projective dimension: {d}\n"),
                None => text += &format!("transpose projective dimension: > {n}\n"),
            }
            let report = json!({
                "module": m.label(),
                "transpose_dim": tr.dim(),
                "second_syzygy_dim": om2.dim(),
                "transpose_dual_dim": tr_dual.dim(),
                "transpose_pd": pd,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::Ext { algebra, module, with, bound } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let (target_name, hom, dims) = match with {
                Some(spec) => {
                    let t = parse_module_spec(&a, &spec)?;
                    (t.label().to_string(), hom_dim(&m, &t), ext_hom_dims(&m, &t, n, false))
                }
                None => {
                    let reg = Module::regular(&a, m.side());
                    (
                        "A".to_string(),
                        hom_dim(&m, &reg),
                        ext_regular_dims(&m, n, false),
                    )
                }
            };
            let mut text = format!("Hom({}, {}) has dimension {}\n", m.label(), target_name, hom);
            text += &format!("Ext^i dimensions for i = 1..{}: {:?}\n", n, dims);
            let report = json!({
                "module": m.label(),
                "target": target_name,
                "hom_dim": hom,
                "ext_dims": dims,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::Sgp { algebra, module, bound } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let v = is_sgp(&m, n);
            let (code, text) = match v.status {
                VerdictStatus::Holds => (
                    0,
                    format!("sgp holds up to bound {n}: Ext^i(M, A) = 0 for i = 1..{n}\n"),
                ),
                _ => (1, format!("sgp fails: {}\n", witness_text(&v.witness))),
            };
            Ok(out.finish(code, &text, verdict_json(&v)))
        }
        Command::Gp { algebra, module, bound } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let v = is_gp(&m, n);
            let (code, text) = match v.status {
                VerdictStatus::Holds => (
                    0,
                    format!("gp holds up to bound {n}: both-sided vanishing and an exact window\n"),
                ),
                _ => (1, format!("gp fails: {}\n", witness_text(&v.witness))),
            };
            Ok(out.finish(code, &text, verdict_json(&v)))
        }
        Command::Phi { algebra, module } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let ev = evaluation(&m);
            let ker = ev.map.kernel().0.dim();
            let cok = ev.map.cokernel().0.dim();
            let verdict = match (ker, cok) {
                (0, 0) => "bijective",
                (0, _) => "injective but not surjective",
                (_, 0) => "surjective but not injective",
                _ => "neither injective nor surjective",
            };
            let text = format!(
                "evaluation M -> M** over {}: kernel dimension {}, cokernel dimension {} ({})\n",
                a.name(), ker, cok, verdict
            );
            let report = json!({
                "module": m.label(),
                "ker_phi": ker,
                "cok_phi": cok,
                "verdict": verdict,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::MainComplex { algebra, module, bound, verify, seed, emit } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let mc = build_main_complex(&m, n)?;
            let diagram = render_main_complex(&mc);
            let mut text = format!(
                "main complex of {} over {} (window degrees {}..{}):\n{}",
                m.label(),
                a.name(),
                mc.lowest_degree(),
                mc.highest_degree(),
                diagram
            );
            text += &format!(
                "homology: ker(phi) dimension {} at degree 0, cok(phi) dimension {} at degree -1; zero elsewhere\n",
                mc.ker_phi_dim, mc.cok_phi_dim
            );
            let mut round_trip = None;
            if verify {
                let rec = complex_to_module(mc.lowest_degree(), &mc.maps)?;
                let opts = IsoOpts { seed: seed.seed, ..IsoOpts::default() };
                let iso = match is_isomorphic(&m, &rec.module, &opts) {
                    IsoOutcome::Iso(_) => TriState::True,
                    IsoOutcome::NotIso(_) => TriState::False,
                    IsoOutcome::Inconclusive => TriState::Unknown,
                };
                text += &format!("round trip recovers the module: {}\n", tristate_text(iso));
                round_trip = Some(tristate_text(iso).to_string());
                if iso == TriState::False {
                    return Err(Error::Internal(
                        "module recovered from its own main complex is not isomorphic to the original"
                            .into(),
                    ));
                }
            }
            if let Some(path) = &emit {
                std::fs::write(path, &text)?;
            }
            let report = json!({
                "module": m.label(),
                "bound": n,
                "window": [mc.lowest_degree(), mc.highest_degree()],
                "ker_phi": mc.ker_phi_dim,
                "cok_phi": mc.cok_phi_dim,
                "diagram": diagram,
                "round_trip": round_trip,
            });
            Ok(out.finish(0, &text, report))
        }
        Command::Window { algebra, module, at, seed } => {
            let (_a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            if m.side() != Side::Right {
                return Err(Error::Precondition(
                    "window checks run on right modules; use a `right:` module spec".into(),
                ));
            }
            if at == 0 {
                return Err(Error::Precondition("window position must be at least 1".into()));
            }
            let mut res = Resolution::new(&m);
            res.ensure(at + 2);
            let opts = IsoOpts { seed: seed.seed, ..IsoOpts::default() };
            let report = verify_window(res.map(at), res.map(at + 1), res.map(at + 2), &opts)?;
            let agreement = report.agreement();
            let mut text = format!(
                "window at position {} of the resolution of {}:\n", at, m.label()
            );
            text += &format!("exactness reading: {}\n", if report.exact { "holds" } else { "fails" });
            text += &format!("isomorphism reading: {}\n", tristate_text(report.iso));
            text += &format!("readings agree: {}\n", tristate_text(agreement));
            let code = match (report.exact, report.iso) {
                (true, TriState::True) => 0,
                (_, TriState::Unknown) => 0,
                _ => 1,
            };
            let jreport = json!({
                "module": m.label(),
                "at": at,
                "exact": report.exact,
                "iso": tristate_text(report.iso),
                "agreement": tristate_text(agreement),
                "dual_dim": report.dual_dim,
            });
            Ok(out.finish(code, &text, jreport))
        }
        Command::TrBijection { algebra, module, bound, seed } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let opts = IsoOpts { seed: seed.seed, ..IsoOpts::default() };
            let r = check_transpose_bijection(&m, n, &opts)?;
            let mut text = format!("transpose bijection data for {} (bound {}):\n", m.label(), n);
            text += &format!("transpose reduced: {}\n", r.transpose_reduced);
            text += &format!(
                "transpose infinitely torsionfree: {}\n",
                r.transpose_inf_tf.holds()
            );
            text += &format!(
                "second syzygy passes the vanishing test: {}\n",
                r.second_syzygy_sgp.holds()
            );
            text += &format!(
                "second syzygy matches the transpose dual: {}\n",
                tristate_text(r.second_syzygy_vs_dual)
            );
            text += &format!("double transpose returns the module: {}\n", tristate_text(r.round_trip));
            let all_good = r.transpose_reduced
                && r.transpose_inf_tf.holds()
                && r.second_syzygy_sgp.holds()
                && r.second_syzygy_vs_dual != TriState::False
                && r.round_trip != TriState::False;
            let jreport = json!({
                "module": m.label(),
                "bound": n,
                "transpose_reduced": r.transpose_reduced,
                "transpose_inf_tf": r.transpose_inf_tf.holds(),
                "second_syzygy_sgp": r.second_syzygy_sgp.holds(),
                "second_syzygy_vs_dual": tristate_text(r.second_syzygy_vs_dual),
                "round_trip": tristate_text(r.round_trip),
            });
            Ok(out.finish(if all_good { 0 } else { 1 }, &text, jreport))
        }
        Command::Audit { algebra, bound, max_dim, max_top, limit, verify, emit } => {
            let (a, _) = load(&cli.field, &algebra.algebra, None)?;
            let n = default_bound(&a, bound.bound);
            let spec = EnumerateSpec { side: Side::Left, max_top, max_dim, limit };
            let modules = enumerate_modules(&a, &spec)?;
            let audit = audit_conjectures(&a, &modules, n)?;
            let mut text = format!(
                "audited {} enumerated modules over {} at bound {}\n",
                modules.len(), a.name(), n
            );
            for rung in &audit.rungs {
                text += &format!(
                    "rung {}: {} tested, {} candidate(s)\n",
                    rung.rung, rung.tested, rung.candidates.len()
                );
            }
            let total = audit.total_candidates();
            let mut verified = None;
            if verify && total > 0 {
                let mut all = true;
                for rung in &audit.rungs {
                    for c in &rung.candidates {
                        let round = candidate_from_json(&candidate_to_json(c))?;
                        all &= reverify_candidate(&round);
                    }
                }
                verified = Some(all);
                text += &format!("certificates re-verify after serialization: {all}\n");
            }
            if let Some(path) = &emit {
                let certs: Vec<Value> = audit
                    .rungs
                    .iter()
                    .flat_map(|r| r.candidates.iter().map(candidate_to_json))
                    .collect();
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&Value::Array(certs)).expect("serializes"),
                )?;
            }
            text += &format!("total candidates: {total}\n");
            let jreport = json!({
                "algebra": a.name(),
                "bound": n,
                "modules": modules.len(),
                "rungs": audit.rungs.iter().map(|r| json!({
                    "rung": r.rung,
                    "tested": r.tested,
                    "candidates": r.candidates.len(),
                })).collect::<Vec<_>>(),
                "total_candidates": total,
                "reverified": verified,
            });
            Ok(out.finish(if total == 0 { 0 } else { 1 }, &text, jreport))
        }
        Command::OnePointExt { algebra, module, bound, seed, emit } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let ext = one_point_extension(&a, &m)?;
            let opts = IsoOpts { seed: seed.seed, ..IsoOpts::default() };
            let sr = verify_extension_structure(&ext, &opts)?;
            let br = check_simple_extension_biconditional(&ext, n)?;
            let mut text = format!(
                "extension of {} by {}: dimension {} with {} vertices\n",
                a.name(), m.label(), ext.algebra.dim(), ext.algebra.num_idempotents()
            );
            text += &format!(
                "new simple: injective {}, endomorphism dimension {}, dual dimension {}\n",
                sr.simple_injective, sr.simple_end_dim, sr.simple_dual_dim
            );
            text += &format!(
                "syzygy of the new simple is the inflated bimodule: {}\n",
                tristate_text(sr.syzygy_is_bimodule)
            );
            text += &format!(
                "new simple passes the vanishing test: {}\n",
                br.new_simple_sgp.holds()
            );
            text += &format!("bimodule-side criterion: {}\n", br.side_bimodule);
            text += &format!("sides agree: {}\n", br.side_simple == br.side_bimodule);
            if let Some(path) = &emit {
                save_algebra(&ext.algebra, Path::new(path))?;
                text += &format!("extended algebra written to {path}\n");
            }
            let jreport = json!({
                "base": a.name(),
                "bimodule": m.label(),
                "extended_dim": ext.algebra.dim(),
                "vertices": ext.algebra.num_idempotents(),
                "simple_injective": sr.simple_injective,
                "simple_end_dim": sr.simple_end_dim,
                "simple_dual_dim": sr.simple_dual_dim,
                "syzygy_is_bimodule": tristate_text(sr.syzygy_is_bimodule),
                "new_simple_sgp": br.new_simple_sgp.holds(),
                "side_simple": br.side_simple,
                "side_bimodule": br.side_bimodule,
                "algebra": algebra_to_json(&ext.algebra),
            });
            Ok(out.finish(0, &text, jreport))
        }
        Command::ShortLocal { algebra, module, bound, seed } => {
            let (a, m) = load(&cli.field, &algebra.algebra, Some(&module.module))?;
            let m = m.expect("module spec parsed");
            let n = default_bound(&a, bound.bound);
            let opts = IsoOpts { seed: seed.seed, ..IsoOpts::default() };
            let r = check_short_local_balance(&m, n, &opts)?;
            let mut text = format!(
                "short local analysis of {} over {} (radical layers ({}, {})):\n",
                m.label(), a.name(), r.hilbert.0, r.hilbert.1
            );
            text += &format!("self-injective algebra: {}\n", tristate_text(r.self_injective));
            text += &format!("module and dual both pass the vanishing test: {}\n", r.both_sgp);
            text += &format!(
                "ker(phi) dimension {}, cok(phi) dimension {}, balanced: {}\n",
                r.ker_phi_dim, r.cok_phi_dim, r.balanced
            );
            if let Some(eq) = r.ranks_equal {
                text += &format!("window ranks constant: {eq} ({:?})\n", r.ranks);
            }
            if let Some(ok) = r.dim_vectors_ok {
                text += &format!("image dimension vectors match the expected pattern: {ok}\n");
            }
            for f in &r.findings {
                text += &format!("finding: {f}\n");
            }
            let jreport = json!({
                "module": m.label(),
                "hilbert": [r.hilbert.0, r.hilbert.1],
                "self_injective": tristate_text(r.self_injective),
                "both_sgp": r.both_sgp,
                "ker_phi": r.ker_phi_dim,
                "cok_phi": r.cok_phi_dim,
                "balanced": r.balanced,
                "vacuous": r.vacuous,
                "ranks": r.ranks,
                "ranks_equal": r.ranks_equal,
                "dim_vectors_ok": r.dim_vectors_ok,
                "findings": r.findings,
            });
            Ok(out.finish(if r.findings.is_empty() { 0 } else { 1 }, &text, jreport))
        }
        Command::Search {
            algebra,
            sample_local,
            seed,
            trials,
            bound,
            max_free_rank,
            shifts,
            max_dim,
            emit,
        } => {
            let source = match (&algebra, &sample_local) {
                (Some(_), Some(_)) => {
                    return Err(Error::Precondition(
                        "give either --algebra or --sample-local, not both".into(),
                    ))
                }
                (Some(spec), None) => {
                    let field = parse_field_spec(&cli.field)?;
                    AlgebraSource::Fixed(parse_algebra_spec(field, spec)?)
                }
                (None, Some(text)) => {
                    let parts: Vec<&str> = text.split(',').collect();
                    if parts.len() != 3 {
                        return Err(Error::Parse(
                            "--sample-local expects `p,gens,socle`".into(),
                        ));
                    }
                    let nums: Vec<u64> = parts
                        .iter()
                        .map(|p| {
                            p.trim().parse().map_err(|_| {
                                Error::Parse(format!("bad --sample-local component {p:?}"))
                            })
                        })
                        .collect::<Result<_>>()?;
                    AlgebraSource::SampledShortLocal {
                        p: nums[0],
                        radical_gens: nums[1] as usize,
                        socle_dim: nums[2] as usize,
                    }
                }
                (None, None) => {
                    return Err(Error::Precondition(
                        "search needs --algebra or --sample-local".into(),
                    ))
                }
            };
            let syzygy_shifts: Vec<usize> = shifts
                .split(',')
                .map(|s| {
                    s.trim()
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad shift {s:?}")))
                })
                .collect::<Result<_>>()?;
            let spec = SearchSpec {
                algebra: source,
                seed: seed.seed,
                trials,
                max_free_rank,
                syzygy_shifts,
                bound: bound.bound.unwrap_or(4),
                max_module_dim: max_dim,
            };
            let outcome = search(&spec)?;
            let mut text = format!(
                "searched {} trials over {} (seed {}, bound {}): {} modules tested, {} skipped\n",
                outcome.trials,
                outcome.algebra.name(),
                outcome.seed,
                outcome.bound,
                outcome.modules_tested,
                outcome.skipped
            );
            for (k, v) in &outcome.verdict_counts {
                text += &format!("verdicts {k}: {v}\n");
            }
            text += &format!("two-sided hits: {}\n", outcome.hits.len());
            for h in &outcome.hits {
                text += &format!(
                    "  trial {} shift {}: dimension {}, ker(phi) {}, cok(phi) {}, gp {:?}\n",
                    h.trial, h.shift, h.module.dim(), h.ker_phi, h.cok_phi, h.gp
                );
            }
            text += &format!("candidates: {}\n", outcome.candidates.len());
            for c in &outcome.candidates {
                text += &format!("  rung {}: {}\n", c.rung, c.witness);
            }
            let report = search_report_json(&outcome);
            if let Some(path) = &emit {
                std::fs::write(
                    path,
                    serde_json::to_string_pretty(&report).expect("serializes") + "\n",
                )?;
            }
            Ok(out.finish(
                if outcome.candidates.is_empty() { 0 } else { 1 },
                &text,
                report,
            ))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            let code = match &e {
                Error::Internal(_) => 3,
                _ => 2,
            };
            eprintln!("error: {e}");
            ExitCode::from(code)
        }
    }
}
