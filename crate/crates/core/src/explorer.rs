//! Seed-deterministic randomized search for interesting modules: samples
//! quotients of free modules (and their syzygies), classifies each by the
//! bounded vanishing tests on the module and its dual, and collects
//! re-verifiable certificates for anything that violates one of the open
//! implications.
//!
//! Determinism contract: the same [`SearchSpec`] always produces the same
//! [`SearchOutcome`] and byte-identical JSON, independent of thread count.
//! Each trial derives its randomness from the spec seed and its own trial
//! index, so trials can run in parallel and still compose in order.

use std::collections::BTreeMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::algebra::Algebra;
use crate::complexes::{a_dual, syzygy};
use crate::error::{Error, Result};
use crate::gorenstein::audits::rung_violation;
use crate::gorenstein::{is_gp, is_sgp, Candidate, VerdictStatus, LADDER_RUNGS};
use crate::io::{algebra_to_json, candidate_to_json, module_to_json};
use crate::linalg::{FieldSpec, Matrix, Scalar};
use crate::modrep::{Module, Side};

/// Where the search gets its algebra.
#[derive(Clone)]
pub enum AlgebraSource {
    /// Search over one fixed algebra.
    Fixed(Algebra),
    /// Sample a local algebra with radical cube zero over F_p whose radical
    /// needs `radical_gens` generators and whose socle has dimension
    /// `socle_dim` (resampled until the classification confirms both).
    SampledShortLocal {
        p: u64,
        radical_gens: usize,
        socle_dim: usize,
    },
}

/// Full description of one search run.
#[derive(Clone)]
pub struct SearchSpec {
    pub algebra: AlgebraSource,
    /// Master seed; every random choice derives from it.
    pub seed: u64,
    /// Number of independent sampling trials.
    pub trials: usize,
    /// Free modules are sampled with up to this many regular summands.
    pub max_free_rank: usize,
    /// Syzygy shifts applied to each sampled quotient (0 = the quotient
    /// itself).
    pub syzygy_shifts: Vec<usize>,
    /// Vanishing-test truncation bound.
    pub bound: usize,
    /// Modules larger than this are skipped.
    pub max_module_dim: usize,
}

impl SearchSpec {
    /// A small default search over the given source.
    pub fn quick(algebra: AlgebraSource, seed: u64) -> SearchSpec {
        SearchSpec {
            algebra,
            seed,
            trials: 40,
            max_free_rank: 2,
            syzygy_shifts: vec![0, 1],
            bound: 4,
            max_module_dim: 24,
        }
    }
}

/// One module for which both bounded vanishing tests held.
pub struct SearchHit {
    pub trial: usize,
    pub shift: usize,
    pub module: Module,
    /// Kernel dimension of the evaluation map into the double dual.
    pub ker_phi: usize,
    /// Cokernel dimension of the evaluation map.
    pub cok_phi: usize,
    /// Bounded totally-acyclic-complex test on the same module.
    pub gp: VerdictStatus,
}

/// Aggregated result of a search run.
pub struct SearchOutcome {
    pub algebra: Algebra,
    pub seed: u64,
    pub trials: usize,
    pub bound: usize,
    /// Modules actually put through the vanishing tests.
    pub modules_tested: usize,
    /// Samples discarded for being zero or over the size cap.
    pub skipped: usize,
    /// Count per (module verdict, dual verdict) pair.
    pub verdict_counts: BTreeMap<String, usize>,
    /// Modules passing both vanishing tests, in trial order.
    pub hits: Vec<SearchHit>,
    /// Violations of the open implications, as re-verifiable certificates.
    pub candidates: Vec<Candidate>,
}

struct TrialResult {
    tested: usize,
    skipped: usize,
    counts: BTreeMap<String, usize>,
    hits: Vec<SearchHit>,
    candidates: Vec<Candidate>,
}

fn trial_rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Samples a local algebra with radical cube zero: basis `1`, radical
/// generators `x1..xe`, socle `z1..za`, with each product `xi*xj` a random
/// combination of the socle basis.  Retries until the products actually
/// fill the socle, so the classification reports radical layers `(e, a)`.
pub fn sample_short_local(p: u64, e: usize, a: usize, seed: u64) -> Result<Algebra> {
    let field = FieldSpec::Prime(p);
    field.validate()?;
    if e == 0 || a == 0 {
        return Err(Error::Precondition(
            "short local sampling needs at least one radical generator and a nonzero socle".into(),
        ));
    }
    let dim = 1 + e + a;
    let mut rng = trial_rng(seed, u64::MAX);
    for _attempt in 0..64 {
        // Structure constants: unit acts as identity; products of radical
        // generators land in the socle; everything else in the radical
        // multiplies to zero.  The cube of the radical is zero by
        // construction, which makes associativity automatic away from the
        // unit.
        let mut labels = vec!["1".to_string()];
        for i in 0..e {
            labels.push(format!("x{}", i + 1));
        }
        for i in 0..a {
            labels.push(format!("z{}", i + 1));
        }
        let unit_col = |k: usize| {
            let mut c = Matrix::zero(field, dim, 1);
            c.set(k, 0, Scalar::one(field));
            c
        };
        let mut mul = vec![vec![Matrix::zero(field, dim, 1); dim]; dim];
        for (j, col) in mul[0].iter_mut().enumerate() {
            *col = unit_col(j);
        }
        for (i, row) in mul.iter_mut().enumerate().skip(1) {
            row[0] = unit_col(i);
        }
        for i in 0..e {
            for j in 0..e {
                let mut c = Matrix::zero(field, dim, 1);
                for k in 0..a {
                    c.set(1 + e + k, 0, Scalar::from_int(field, rng.gen_range(0..p) as i64));
                }
                mul[1 + i][1 + j] = c;
            }
        }
        let radical_cols: Vec<Matrix> = (1..dim).map(unit_col).collect();
        let radical = Matrix::hstack(&radical_cols.iter().collect::<Vec<_>>());
        let candidate = Algebra::new(
            field,
            labels,
            format!("sampled-local-{e}-{a}"),
            unit_col(0),
            &mul,
            vec![unit_col(0)],
            radical,
        )?;
        let cls = candidate.classify();
        if cls.short_local && cls.hilbert_type == Some((e, a)) {
            return Ok(candidate);
        }
    }
    Err(Error::Precondition(format!(
        "could not sample a radical-cube-zero local algebra with layers ({e}, {a}) over F_{p} in 64 attempts"
    )))
}

/// Resolves the algebra source (sampling if necessary).
pub fn realize_algebra(spec: &SearchSpec) -> Result<Algebra> {
    match &spec.algebra {
        AlgebraSource::Fixed(a) => Ok(a.clone()),
        AlgebraSource::SampledShortLocal {
            p,
            radical_gens,
            socle_dim,
        } => sample_short_local(*p, *radical_gens, *socle_dim, spec.seed),
    }
}

/// Samples one quotient of a free module: random generating vectors span a
/// submodule of `A^r`, and the sample is the quotient by that submodule.
fn sample_quotient(a: &Algebra, rng: &mut ChaCha8Rng, max_free_rank: usize) -> Result<Module> {
    let rank = rng.gen_range(1..=max_free_rank.max(1));
    let parts: Vec<Module> = (0..rank).map(|_| Module::regular(a, Side::Left)).collect();
    let free = Module::direct_sum(&parts);
    let gens = rng.gen_range(1..=rank + 1);
    let field = a.field();
    let picked = match field {
        FieldSpec::Prime(p) => {
            let mut m = Matrix::zero(field, free.dim(), gens);
            for c in 0..gens {
                for r in 0..free.dim() {
                    m.set(r, c, Scalar::from_int(field, rng.gen_range(0..p) as i64));
                }
            }
            m
        }
        FieldSpec::Rationals => {
            let mut m = Matrix::zero(field, free.dim(), gens);
            for c in 0..gens {
                for r in 0..free.dim() {
                    m.set(r, c, Scalar::from_int(field, rng.gen_range(-3i64..=3)));
                }
            }
            m
        }
    };
    // Closure under the action: the span of all basis translates of the
    // picked vectors is the submodule they generate.
    let mut translates = Vec::new();
    for i in 0..a.dim() {
        translates.push(free.action(i).matmul(&picked));
    }
    let span = Matrix::hstack(&translates.iter().collect::<Vec<_>>());
    let basis = span.col_space_basis();
    let (quot, _) = free.quotient_by(&basis)?;
    Ok(quot)
}

fn run_trial(a: &Algebra, spec: &SearchSpec, trial: usize) -> Result<TrialResult> {
    let mut rng = trial_rng(spec.seed, trial as u64);
    let mut out = TrialResult {
        tested: 0,
        skipped: 0,
        counts: BTreeMap::new(),
        hits: Vec::new(),
        candidates: Vec::new(),
    };
    let quot = sample_quotient(a, &mut rng, spec.max_free_rank)?;
    for &shift in &spec.syzygy_shifts {
        let m = if shift == 0 {
            quot.clone()
        } else {
            syzygy(&quot, shift)
        };
        if m.dim() == 0 || m.dim() > spec.max_module_dim {
            out.skipped += 1;
            continue;
        }
        let m = m.relabel(format!("sample-t{trial}-s{shift}"));
        out.tested += 1;
        let own = is_sgp(&m, spec.bound);
        let dual = a_dual(&m);
        let dual_verdict = is_sgp(&dual.module, spec.bound);
        let key = format!("{:?}/{:?}", own.status, dual_verdict.status);
        *out.counts.entry(key).or_insert(0) += 1;
        if own.holds() && dual_verdict.holds() {
            let ev = crate::complexes::evaluation(&m);
            let ker = ev.map.kernel().0.dim();
            let cok = ev.map.cokernel().0.dim();
            out.hits.push(SearchHit {
                trial,
                shift,
                module: m.clone(),
                ker_phi: ker,
                cok_phi: cok,
                gp: is_gp(&m, spec.bound).status,
            });
        }
        for rung in LADDER_RUNGS {
            if let Some(witness) = rung_violation(rung, &m, spec.bound) {
                out.candidates.push(Candidate {
                    rung: rung.to_string(),
                    bound: spec.bound,
                    module: m.clone(),
                    witness,
                    caveat: format!(
                        "vanishing checked only up to degree {}; a deeper bound could overturn this",
                        spec.bound
                    ),
                });
            }
        }
    }
    Ok(out)
}

/// Runs the search described by `spec`.  Trials execute in parallel but the
/// outcome is assembled in trial order, so results are reproducible.
pub fn search(spec: &SearchSpec) -> Result<SearchOutcome> {
    if spec.trials == 0 {
        return Err(Error::Precondition("search needs at least one trial".into()));
    }
    if spec.syzygy_shifts.is_empty() {
        return Err(Error::Precondition(
            "search needs at least one syzygy shift (0 tests the samples themselves)".into(),
        ));
    }
    let a = realize_algebra(spec)?;
    let per_trial: Vec<Result<TrialResult>> = (0..spec.trials)
        .into_par_iter()
        .map(|t| run_trial(&a, spec, t))
        .collect();
    let mut outcome = SearchOutcome {
        algebra: a,
        seed: spec.seed,
        trials: spec.trials,
        bound: spec.bound,
        modules_tested: 0,
        skipped: 0,
        verdict_counts: BTreeMap::new(),
        hits: Vec::new(),
        candidates: Vec::new(),
    };
    for r in per_trial {
        let r = r?;
        outcome.modules_tested += r.tested;
        outcome.skipped += r.skipped;
        for (k, v) in r.counts {
            *outcome.verdict_counts.entry(k).or_insert(0) += v;
        }
        outcome.hits.extend(r.hits);
        outcome.candidates.extend(r.candidates);
    }
    Ok(outcome)
}

/// Serializes a search outcome.  Keys are sorted and no volatile data
/// (timestamps, paths, thread counts) is included, so equal outcomes give
/// byte-identical JSON.
pub fn search_report_json(o: &SearchOutcome) -> Value {
    json!({
        "algebra": algebra_to_json(&o.algebra),
        "seed": o.seed,
        "trials": o.trials,
        "bound": o.bound,
        "modules_tested": o.modules_tested,
        "skipped": o.skipped,
        "verdict_counts": o.verdict_counts,
        "hits": o.hits.iter().map(|h| json!({
            "trial": h.trial,
            "shift": h.shift,
            "dim": h.module.dim(),
            "ker_phi": h.ker_phi,
            "cok_phi": h.cok_phi,
            "gp": format!("{:?}", h.gp),
            "module": module_to_json(&h.module),
        })).collect::<Vec<_>>(),
        "candidates": o.candidates.iter().map(candidate_to_json).collect::<Vec<_>>(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::preset_algebra;
    use crate::gorenstein::reverify_candidate;

    fn kxy() -> Algebra {
        preset_algebra(FieldSpec::Prime(2), "kxy", None).unwrap()
    }

    #[test]
    fn same_seed_gives_byte_identical_reports() {
        let spec = SearchSpec {
            algebra: AlgebraSource::Fixed(kxy()),
            seed: 7,
            trials: 12,
            max_free_rank: 2,
            syzygy_shifts: vec![0, 1],
            bound: 3,
            max_module_dim: 16,
        };
        let a = serde_json::to_string(&search_report_json(&search(&spec).unwrap())).unwrap();
        let b = serde_json::to_string(&search_report_json(&search(&spec).unwrap())).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn different_seeds_change_the_sample() {
        let mk = |seed| SearchSpec {
            algebra: AlgebraSource::Fixed(kxy()),
            seed,
            trials: 10,
            max_free_rank: 2,
            syzygy_shifts: vec![0],
            bound: 3,
            max_module_dim: 16,
        };
        let a = serde_json::to_string(&search_report_json(&search(&mk(1)).unwrap())).unwrap();
        let b = serde_json::to_string(&search_report_json(&search(&mk(2)).unwrap())).unwrap();
        assert_ne!(a, b);
    }

    #[test]
    fn self_injective_search_finds_two_sided_hits_and_no_candidates() {
        let spec = SearchSpec {
            algebra: AlgebraSource::Fixed(kxy()),
            seed: 11,
            trials: 20,
            max_free_rank: 2,
            syzygy_shifts: vec![0, 1],
            bound: 4,
            max_module_dim: 20,
        };
        let out = search(&spec).unwrap();
        assert!(out.modules_tested > 0);
        // Over a self-injective algebra every module passes both vanishing
        // tests, and passing modules have bijective evaluation.
        assert!(!out.hits.is_empty());
        for h in &out.hits {
            assert_eq!(h.ker_phi, 0, "hit t{}s{}", h.trial, h.shift);
            assert_eq!(h.cok_phi, 0, "hit t{}s{}", h.trial, h.shift);
            assert_eq!(h.gp, VerdictStatus::Holds);
        }
        assert!(out.candidates.is_empty());
        for c in &out.candidates {
            assert!(reverify_candidate(c));
        }
    }

    #[test]
    fn truncated_polynomial_search_stays_clean() {
        let a = preset_algebra(FieldSpec::Prime(3), "kxn", Some(3)).unwrap();
        let spec = SearchSpec {
            algebra: AlgebraSource::Fixed(a),
            seed: 5,
            trials: 16,
            max_free_rank: 2,
            syzygy_shifts: vec![0, 1],
            bound: 4,
            max_module_dim: 18,
        };
        let out = search(&spec).unwrap();
        assert!(out.modules_tested > 0);
        assert!(out.candidates.is_empty());
    }

    #[test]
    fn sampled_short_local_algebra_matches_request() {
        let a = sample_short_local(3, 2, 1, 42).unwrap();
        let cls = a.classify();
        assert!(cls.short_local);
        assert_eq!(cls.hilbert_type, Some((2, 1)));
        assert_eq!(a.dim(), 4);
        // Determinism: same seed, same algebra.
        let b = sample_short_local(3, 2, 1, 42).unwrap();
        assert!(a.same_structure(&b));
        let spec = SearchSpec {
            algebra: AlgebraSource::SampledShortLocal {
                p: 3,
                radical_gens: 2,
                socle_dim: 1,
            },
            seed: 42,
            trials: 6,
            max_free_rank: 1,
            syzygy_shifts: vec![0],
            bound: 3,
            max_module_dim: 12,
        };
        let out = search(&spec).unwrap();
        assert!(out.algebra.same_structure(&a));
    }

    #[test]
    fn sampler_rejects_impossible_requests() {
        assert!(sample_short_local(2, 0, 1, 1).is_err());
        // Over F_2 with one generator the only product x^2 lands in a
        // two-dimensional socle, which can never be filled.
        assert!(sample_short_local(2, 1, 2, 1).is_err());
    }
}
