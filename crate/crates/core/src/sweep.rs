//! The verification sweep: enumerate complete multipartite specs over a
//! parameter grid, run every definitional oracle next to its closed form,
//! and persist one JSONL record per (spec, field).
//!
//! Record lines are deterministic for a fixed config; wall-clock fields
//! (`ms`) and the header line are the only parts that vary between runs.

use std::collections::BTreeMap;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::alg_props;
use crate::betti::{self, WPM_VERTEX_CAP};
use crate::chordal;
use crate::classify::Classifier;
use crate::comb_props;
use crate::complex;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::hypergraph::{self, complete_multipartite, PartiteSpec};
use crate::ideal::edge_ideal;

/// Total vertex count above which the Hochster sums become unreasonable.
pub const SWEEP_HARD_N_CAP: usize = 14;
/// The sweep only exercises the tightness search at this size or below.
pub const SWEEP_TIGHT_N_CAP: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct SweepConfig {
    pub t_min: usize,
    pub t_max: usize,
    pub max_side: usize,
    pub max_n: usize,
    pub fields: Vec<FieldSpec>,
    pub l_max: usize,
    pub r_max: usize,
    pub jobs: Option<usize>,
    /// Fault injection for harness self-tests: flips the one-balanced rule
    /// inside the closed forms.
    pub perturb: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            t_min: 2,
            t_max: 5,
            max_side: 3,
            max_n: 9,
            fields: vec![FieldSpec::Rationals, FieldSpec::PrimeField(2)],
            l_max: 4,
            r_max: 3,
            jobs: None,
            perturb: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n > SWEEP_HARD_N_CAP {
            return Err(Error::InvalidSweepConfig(format!(
                "max_n {} exceeds the hard cap {SWEEP_HARD_N_CAP}",
                self.max_n
            )));
        }
        if self.t_min < 2 || self.t_min > self.t_max {
            return Err(Error::InvalidSweepConfig("need 2 <= t_min <= t_max".into()));
        }
        if self.max_side == 0 {
            return Err(Error::InvalidSweepConfig("max_side must be positive".into()));
        }
        if self.l_max < 1 {
            return Err(Error::InvalidSweepConfig("l_max must be at least 1".into()));
        }
        if self.r_max < 2 {
            return Err(Error::InvalidSweepConfig("r_max must be at least 2".into()));
        }
        if self.fields.is_empty() {
            return Err(Error::InvalidSweepConfig("no fields selected".into()));
        }
        Ok(())
    }
}

/// All specs in the grid, ordered by (t, sides, s).
pub fn enumerate_specs(cfg: &SweepConfig) -> Vec<PartiteSpec> {
    let mut out = Vec::new();
    for t in cfg.t_min..=cfg.t_max {
        let mut sides = Vec::with_capacity(t);
        grow_sides(cfg, t, 1, cfg.max_n, &mut sides, &mut out);
    }
    out
}

/// Extend a nondecreasing side sequence within the vertex budget.
fn grow_sides(
    cfg: &SweepConfig,
    remaining: usize,
    min_size: usize,
    budget: usize,
    sides: &mut Vec<usize>,
    out: &mut Vec<PartiteSpec>,
) {
    if remaining == 0 {
        let t = sides.len();
        for s in 2..=t {
            out.push(PartiteSpec::new(s, sides.clone()).expect("grid specs are valid"));
        }
        return;
    }
    for size in min_size..=cfg.max_side {
        if size * remaining > budget {
            break;
        }
        sides.push(size);
        grow_sides(cfg, remaining - 1, size, budget - size, sides, out);
        sides.pop();
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PropertyComparison {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<bool>,
    pub closed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agree: Option<bool>,
    pub ms: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<serde_json::Value>,
}

#[derive(Clone, Debug, Serialize)]
pub struct NumberComparison {
    pub oracle: usize,
    pub closed: usize,
    pub agree: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantAgreement {
    pub tau: NumberComparison,
    pub ind: NumberComparison,
    pub ht: NumberComparison,
    pub dim: NumberComparison,
    pub tr_facets_match: bool,
}

impl InvariantAgreement {
    pub fn all_agree(&self) -> bool {
        self.tau.agree && self.ind.agree && self.ht.agree && self.dim.agree && self.tr_facets_match
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepRecord {
    pub spec: PartiteSpec,
    pub field: String,
    pub n: usize,
    pub properties: BTreeMap<String, PropertyComparison>,
    pub invariants: InvariantAgreement,
    pub disagreements: usize,
}

fn timed<T>(f: impl FnOnce() -> T) -> (T, u64) {
    let start = Instant::now();
    let out = f();
    (out, start.elapsed().as_millis() as u64)
}

fn compare(
    properties: &mut BTreeMap<String, PropertyComparison>,
    name: &str,
    oracle: Option<(bool, Option<serde_json::Value>)>,
    closed: bool,
    ms: u64,
) {
    let (oracle_value, witness) = match oracle {
        Some((v, w)) => (Some(v), w),
        None => (None, None),
    };
    let agree = oracle_value.map(|o| o == closed);
    // witnesses are recorded only where the comparison failed
    let witness = if agree == Some(false) { witness } else { None };
    properties.insert(
        name.to_string(),
        PropertyComparison { oracle: oracle_value, closed, agree, ms, witness },
    );
}

fn witness_json(verdict: &alg_props::PropertyVerdict) -> Option<serde_json::Value> {
    verdict
        .witness
        .as_ref()
        .map(|w| serde_json::to_value(w).expect("witness serializes"))
}

/// Evaluate every oracle/closed-form pair for one spec over one field.
pub fn evaluate_record(spec: &PartiteSpec, field: FieldSpec, cfg: &SweepConfig) -> SweepRecord {
    let h = complete_multipartite(spec);
    let ind = hypergraph::independence_complex(&h);
    let ideal = edge_ideal(&h);
    let n = spec.n_vertices();
    let cls = if cfg.perturb {
        Classifier::perturbed(spec)
    } else {
        Classifier::new(spec)
    };

    let mut properties = BTreeMap::new();

    // pure combinatorics, field-independent
    let (v, ms) = timed(|| alg_props::is_unmixed(&ind));
    compare(&mut properties, "unmixed", Some((v.value, witness_json(&v))), cls.unmixed(), ms);

    let (v, ms) = timed(|| ind.is_matroid());
    compare(&mut properties, "matroid", Some((v, None)), cls.cm(), ms);

    if n <= SWEEP_TIGHT_N_CAP {
        let (v, ms) = timed(|| complex::is_tight(&ind).expect("under the cap"));
        compare(&mut properties, "tight", Some((v.value, None)), cls.cm(), ms);
    } else {
        compare(&mut properties, "tight", None, cls.cm(), 0);
    }

    let (v, ms) = timed(|| comb_props::is_shellable(&ind).expect("grid facet counts are small"));
    compare(&mut properties, "shellable", Some((v.0, None)), cls.sequential(), ms);

    let (v, ms) = timed(|| comb_props::is_vertex_decomposable(&ind));
    compare(&mut properties, "vertex_decomposable", Some((v.0, None)), cls.sequential(), ms);

    let (v, ms) = timed(|| chordal::is_chordal(&h));
    compare(&mut properties, "chordal", Some((v.0, None)), cls.chordal(), ms);

    let (v, ms) = timed(|| alg_props::is_complete_intersection(&ideal).expect("nonzero ideal"));
    compare(&mut properties, "ci", Some((v.value, witness_json(&v))), cls.ci(), ms);

    let (v, ms) = timed(|| alg_props::is_almost_ci(&ideal).expect("nonzero ideal"));
    compare(&mut properties, "almost_ci", Some((v.value, witness_json(&v))), cls.almost_ci(), ms);

    let (v, ms) = timed(|| {
        alg_props::is_complete_intersection(&ideal.dual().expect("nonzero ideal"))
            .expect("nonzero dual")
    });
    compare(&mut properties, "dual_ci", Some((v.value, witness_json(&v))), cls.dual_ci(), ms);

    if n <= WPM_VERTEX_CAP {
        let (v, ms) = timed(|| betti::is_weakly_polymatroidal(&ideal).expect("under the cap"));
        compare(&mut properties, "weakly_polymatroidal", Some((v.0, None)), cls.weakly_polymatroidal(), ms);
    } else {
        compare(&mut properties, "weakly_polymatroidal", None, cls.weakly_polymatroidal(), 0);
    }

    // homological oracles over the requested field
    let (v, ms) = timed(|| alg_props::is_cm_reisner(&ind, field));
    compare(&mut properties, "cm", Some((v.value, witness_json(&v))), cls.cm(), ms);

    for r in 2..=cfg.r_max {
        let (v, ms) = timed(|| alg_props::satisfies_sr(&ind, r, field).expect("r >= 2"));
        compare(&mut properties, &format!("s_r:{r}"), Some((v.value, witness_json(&v))), cls.cm(), ms);
    }

    let (v, ms) = timed(|| betti::is_level(&ind, field).expect("grid stays under the Betti cap"));
    compare(&mut properties, "level", Some((v, None)), cls.cm(), ms);

    let (v, ms) = timed(|| alg_props::is_buchsbaum(&ind, field));
    compare(&mut properties, "buchsbaum", Some((v.value, witness_json(&v))), cls.buchsbaum(), ms);

    for l in 1..=cfg.l_max {
        let (v, ms) = timed(|| alg_props::is_l_cm(&ind, l, field).expect("l >= 1"));
        compare(&mut properties, &format!("l_cm:{l}"), Some((v.value, witness_json(&v))), cls.l_cm(l), ms);

        let (v, ms) = timed(|| alg_props::is_l_buchsbaum(&ind, l, field).expect("l >= 1"));
        compare(
            &mut properties,
            &format!("l_buchsbaum:{l}"),
            Some((v.value, witness_json(&v))),
            cls.l_buchsbaum(l),
            ms,
        );
    }

    let (v, ms) = timed(|| alg_props::is_gorenstein(&ind, field));
    compare(&mut properties, "gorenstein", Some((v.value, witness_json(&v))), cls.gorenstein(), ms);

    let (v, ms) = timed(|| alg_props::is_seq_cm(&ind, field));
    compare(&mut properties, "seq_cm", Some((v.value, witness_json(&v))), cls.sequential(), ms);

    let (v, ms) = timed(|| alg_props::is_seq_s2(&ind, field));
    compare(&mut properties, "seq_s_r:2", Some((v.value, witness_json(&v))), cls.sequential(), ms);

    for r in 3..=cfg.r_max {
        // no oracle beyond r = 2; the closed form answers for every r
        compare(&mut properties, &format!("seq_s_r:{r}"), None, cls.sequential(), 0);
    }

    let (v, ms) = timed(|| {
        let dual = ind.alexander_dual().expect("independence complexes have duals");
        alg_props::is_cm_reisner(&dual, field)
    });
    compare(&mut properties, "dual_cm", Some((v.value, witness_json(&v))), cls.dual_cm(), ms);

    let (v, ms) = timed(|| {
        betti::has_linear_resolution(&ideal, field).expect("edge ideals are equigenerated")
    });
    compare(&mut properties, "linear_resolution", Some((v, None)), cls.linear_resolution(), ms);

    // Prop-2.1-style numerical invariants
    let closed_inv = hypergraph::spec_invariants(spec);
    let (tau_oracle, ind_oracle) = hypergraph::numbers(&h).expect("grid hypergraphs have edges");
    let ht_oracle = ideal.height().expect("nonzero ideal");
    let dim_oracle = (ind.dim().expect("independence complexes are nonvoid") + 1) as usize;

    let tr = hypergraph::transversal_hypergraph(&h).expect("grid hypergraphs have edges");
    let mut expected_tr: Vec<crate::bits::VertexSet> = Vec::new();
    let side_sets = spec.side_sets();
    let take = spec.t() - spec.uniformity() + 1;
    collect_unions(&side_sets, 0, take, crate::bits::VertexSet::EMPTY, &mut expected_tr);
    expected_tr.sort_by(|a, b| a.lex_cmp(*b));
    let tr_facets_match = tr.members() == expected_tr.as_slice();

    let number = |oracle: usize, closed: usize| NumberComparison { oracle, closed, agree: oracle == closed };
    let invariants = InvariantAgreement {
        tau: number(tau_oracle, closed_inv.tau),
        ind: number(ind_oracle, closed_inv.ind),
        ht: number(ht_oracle, closed_inv.ht),
        dim: number(dim_oracle, closed_inv.dim),
        tr_facets_match,
    };

    let disagreements = properties.values().filter(|p| p.agree == Some(false)).count()
        + usize::from(!invariants.all_agree());

    SweepRecord {
        spec: spec.clone(),
        field: field.label(),
        n,
        properties,
        invariants,
        disagreements,
    }
}

fn collect_unions(
    side_sets: &[crate::bits::VertexSet],
    from: usize,
    remaining: usize,
    acc: crate::bits::VertexSet,
    out: &mut Vec<crate::bits::VertexSet>,
) {
    if remaining == 0 {
        out.push(acc);
        return;
    }
    for i in from..side_sets.len() {
        if side_sets.len() - i < remaining {
            break;
        }
        collect_unions(side_sets, i + 1, remaining - 1, acc.union(side_sets[i]), out);
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SweepSummary {
    pub records: usize,
    pub disagreements: usize,
    pub per_property: BTreeMap<String, usize>,
}

/// Run the sweep and stream JSONL: a header line (timestamps live only
/// here), one line per record in spec-major field-minor order, and a final
/// summary line.
pub fn run_sweep(cfg: &SweepConfig, out: &mut dyn Write) -> Result<SweepSummary> {
    cfg.validate()?;
    let specs = enumerate_specs(cfg);

    let header = serde_json::json!({
        "header": {
            "timestamp_ms": std::time::SystemTime::now()
                .duration_since(std::time::UNIX_EPOCH)
                .map(|d| d.as_millis() as u64)
                .unwrap_or(0),
            "config": cfg,
            "spec_count": specs.len(),
        }
    });
    writeln!(out, "{header}").map_err(|e| Error::InvalidSweepConfig(format!("write failed: {e}")))?;

    let tasks: Vec<(PartiteSpec, FieldSpec)> = specs
        .iter()
        .flat_map(|spec| cfg.fields.iter().map(move |&f| (spec.clone(), f)))
        .collect();

    let records: Vec<SweepRecord> = match cfg.jobs {
        Some(jobs) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .map_err(|e| Error::InvalidSweepConfig(format!("thread pool: {e}")))?;
            pool.install(|| {
                tasks
                    .par_iter()
                    .map(|(spec, field)| evaluate_record(spec, *field, cfg))
                    .collect()
            })
        }
        None => tasks
            .par_iter()
            .map(|(spec, field)| evaluate_record(spec, *field, cfg))
            .collect(),
    };

    let mut per_property: BTreeMap<String, usize> = BTreeMap::new();
    let mut disagreements = 0usize;
    for record in &records {
        for (name, cmp) in &record.properties {
            if cmp.agree == Some(false) {
                *per_property.entry(name.clone()).or_insert(0) += 1;
            }
        }
        if !record.invariants.all_agree() {
            *per_property.entry("invariants".into()).or_insert(0) += 1;
        }
        disagreements += record.disagreements;
        let line = serde_json::to_string(record).expect("records serialize");
        writeln!(out, "{line}")
            .map_err(|e| Error::InvalidSweepConfig(format!("write failed: {e}")))?;
    }

    let summary = SweepSummary { records: records.len(), disagreements, per_property };
    let line = serde_json::json!({ "summary": &summary });
    writeln!(out, "{line}").map_err(|e| Error::InvalidSweepConfig(format!("write failed: {e}")))?;
    Ok(summary)
}
