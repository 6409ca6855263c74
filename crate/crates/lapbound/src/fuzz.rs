//! Seeded fuzzing of the bound catalog.
//!
//! Instance `i` is generated from its own stream `sub_seed(seed, i)`, so the
//! corpus does not depend on how instances are scheduled. Instances are
//! evaluated in parallel and folded in index order.

use std::fs;
use std::path::PathBuf;

use lapbound_core::bounds::catalog_params;
use lapbound_core::family::{gnp_connected, random_clique_union, random_tree};
use lapbound_core::majorization::{check_grone, check_grone_merris};
use lapbound_core::rng::{sub_seed, SplitMix64};
use lapbound_core::{
    evaluate_catalog, BoundId, BoundResult, EvalConfig, Graph, Param, Profile, Verdict,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::edgelist::write_edge_list;
use crate::error::HarnessError;
use crate::report::ParamValue;

pub const N_LIMITS: (usize, usize) = (2, 64);

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Model {
    Gnp,
    Tree,
    CliqueUnion,
}

impl Model {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Gnp => "gnp",
            Self::Tree => "tree",
            Self::CliqueUnion => "clique-union",
        }
    }
}

#[derive(Debug, Clone)]
pub struct FuzzConfig {
    pub seed: u64,
    pub count: usize,
    pub model: Model,
    /// Edge probability, used by the `gnp` model only.
    pub p: f64,
    pub n_min: usize,
    pub n_max: usize,
    pub eval: EvalConfig,
    /// Where counterexample edge lists go; nothing is written when `None`.
    pub out_dir: Option<PathBuf>,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            count: 100,
            model: Model::Gnp,
            p: 0.5,
            n_min: 4,
            n_max: 12,
            eval: EvalConfig::default(),
            out_dir: None,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), HarnessError> {
        let usage = |m: String| Err(HarnessError::Usage(m));
        if self.count < 1 {
            return usage("--count must be at least 1".into());
        }
        let (lo, hi) = N_LIMITS;
        if self.n_min < lo || self.n_max > hi || self.n_min > self.n_max {
            return usage(format!(
                "n-range {}..{} must satisfy {lo} <= n-min <= n-max <= {hi}",
                self.n_min, self.n_max
            ));
        }
        if !(self.p > 0.0 && self.p <= 1.0) {
            return usage(format!("--p {} must lie in (0, 1]", self.p));
        }
        Ok(())
    }
}

/// Order of instance `i` and the seed its graph is drawn from.
pub fn instance_seed(cfg: &FuzzConfig, i: usize) -> (usize, u64) {
    let mut rng = SplitMix64::new(sub_seed(cfg.seed, i as u64));
    let n = rng.next_in(cfg.n_min, cfg.n_max);
    (n, rng.next_u64())
}

pub fn instance(cfg: &FuzzConfig, i: usize) -> lapbound_core::Result<Graph> {
    let (n, seed) = instance_seed(cfg, i);
    let mut rng = SplitMix64::new(seed);
    match cfg.model {
        Model::Gnp => gnp_connected(n, cfg.p, &mut rng),
        Model::Tree => Ok(random_tree(n, &mut rng)),
        Model::CliqueUnion => Ok(random_clique_union(n, &mut rng)),
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub holds: usize,
    pub equality: usize,
    pub violated: usize,
    pub not_applicable: usize,
    /// Instances that could not be generated or profiled.
    pub errored: usize,
}

impl Counts {
    fn add(&mut self, v: Option<Verdict>) {
        match v {
            Some(Verdict::Holds) => self.holds += 1,
            Some(Verdict::Equality) => self.equality += 1,
            Some(Verdict::Violated) => self.violated += 1,
            Some(Verdict::NotApplicable) => self.not_applicable += 1,
            None => self.errored += 1,
        }
    }

    pub fn total(&self) -> usize {
        self.holds + self.equality + self.violated + self.not_applicable + self.errored
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ParamTally {
    pub param: Option<ParamValue>,
    #[serde(flatten)]
    pub counts: Counts,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BoundTally {
    pub bound_id: &'static str,
    #[serde(flatten)]
    pub counts: Counts,
    pub by_param: Vec<ParamTally>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Violation {
    pub index: usize,
    /// Edge-list file name (relative to the output directory).
    pub file: String,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub bound_id: &'static str,
    pub param: Option<ParamValue>,
    pub lhs: f64,
    pub rhs: f64,
    pub margin: f64,
    /// Whether the merged Grone sequence was non-increasing; absent for n < 3.
    pub merged_monotone: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AgreementFailure {
    pub index: usize,
    pub n: usize,
    pub m: usize,
    pub edges: Vec<(usize, usize)>,
    pub bound_id: &'static str,
    pub param: Option<ParamValue>,
    pub verdict: &'static str,
    pub predicted_equality: bool,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct MajorizationTally {
    pub checked: usize,
    pub holds: usize,
    pub failing_indices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InstanceError {
    pub index: usize,
    pub n: usize,
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Metadata {
    pub seed: u64,
    pub model: &'static str,
    pub p: Option<f64>,
    pub count: usize,
    pub n_min: usize,
    pub n_max: usize,
    pub alphas: Vec<f64>,
    pub ks: Vec<u32>,
    pub strict_applicability: bool,
    /// Order of every instance, by index.
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FuzzReport {
    pub metadata: Metadata,
    pub tallies: Vec<BoundTally>,
    pub violations: Vec<Violation>,
    pub agreement_failures: Vec<AgreementFailure>,
    /// Grone majorization on connected instances.
    pub grone: MajorizationTally,
    /// Grone–Merris majorization on every instance.
    pub grone_merris: MajorizationTally,
    /// Grone–Merris restricted to trees.
    pub grone_merris_trees: MajorizationTally,
    pub errors: Vec<InstanceError>,
}

impl FuzzReport {
    pub fn tally(&self, id: BoundId) -> Option<&BoundTally> {
        self.tallies.iter().find(|t| t.bound_id == id.as_str())
    }
}

struct Outcome {
    n: usize,
    evaluated: Result<Evaluated, String>,
}

struct Evaluated {
    graph: Graph,
    results: Vec<BoundResult>,
    merged_monotone: Option<bool>,
    is_tree: bool,
    grone: Option<bool>,
    grone_merris: Option<bool>,
}

fn evaluate(cfg: &FuzzConfig, i: usize) -> Outcome {
    let n = instance_seed(cfg, i).0;
    let evaluated = instance(cfg, i)
        .and_then(|g| Profile::new(g.clone()).map(|p| (g, p)))
        .map(|(graph, p)| {
            let results = evaluate_catalog(&p, &cfg.eval);
            let grone = if p.spectrum().is_connected() && graph.n() >= 2 {
                check_grone(p.degrees(), p.spectrum()).ok().map(|v| v.holds)
            } else {
                None
            };
            Evaluated {
                results,
                merged_monotone: p.merged_grone().map(|s| s.monotone),
                is_tree: p.class().is_tree,
                grone,
                grone_merris: check_grone_merris(p.degrees(), p.spectrum())
                    .ok()
                    .map(|v| v.holds),
                graph,
            }
        })
        .map_err(|e| e.to_string());
    Outcome { n, evaluated }
}

fn tally_majorization(t: &mut MajorizationTally, index: usize, holds: Option<bool>) {
    if let Some(h) = holds {
        t.checked += 1;
        if h {
            t.holds += 1;
        } else {
            t.failing_indices.push(index);
        }
    }
}

pub fn violation_file_name(id: &str, index: usize) -> String {
    format!("{id}_{index}.el")
}

pub fn run_fuzz(cfg: &FuzzConfig) -> Result<FuzzReport, HarnessError> {
    cfg.validate()?;
    let outcomes: Vec<Outcome> = (0..cfg.count)
        .into_par_iter()
        .map(|i| evaluate(cfg, i))
        .collect();

    let ids: Vec<BoundId> = BoundId::ALL
        .into_iter()
        .filter(|id| cfg.eval.bounds.as_ref().is_none_or(|b| b.contains(id)))
        .collect();
    let mut tallies: Vec<BoundTally> = ids
        .iter()
        .map(|&id| BoundTally {
            bound_id: id.as_str(),
            counts: Counts::default(),
            by_param: catalog_params(id, &cfg.eval)
                .into_iter()
                .map(|p| ParamTally {
                    param: ParamValue::of(p),
                    counts: Counts::default(),
                })
                .collect(),
        })
        .collect();
    let slot = |id: BoundId, param: Param| -> (usize, usize) {
        let b = ids.iter().position(|&x| x == id).expect("bound in filter");
        let p = catalog_params(id, &cfg.eval)
            .iter()
            .position(|&q| q == param)
            .expect("param in grid");
        (b, p)
    };

    let mut violations = Vec::new();
    let mut agreement_failures = Vec::new();
    let mut grone = MajorizationTally::default();
    let mut grone_merris = MajorizationTally::default();
    let mut grone_merris_trees = MajorizationTally::default();
    let mut errors = Vec::new();
    let mut to_write: Vec<(String, &Graph)> = Vec::new();

    for (index, o) in outcomes.iter().enumerate() {
        let ev = match &o.evaluated {
            Ok(ev) => ev,
            Err(error) => {
                errors.push(InstanceError {
                    index,
                    n: o.n,
                    error: error.clone(),
                });
                for t in &mut tallies {
                    for pt in &mut t.by_param {
                        pt.counts.add(None);
                    }
                    for _ in 0..t.by_param.len() {
                        t.counts.add(None);
                    }
                }
                continue;
            }
        };
        let edges = ev.graph.edges().to_vec();
        let mut files_for_instance: Vec<&'static str> = Vec::new();
        for r in &ev.results {
            let (b, p) = slot(r.bound, r.param);
            tallies[b].counts.add(Some(r.verdict));
            tallies[b].by_param[p].counts.add(Some(r.verdict));
            let id = r.bound.as_str();
            if r.verdict == Verdict::Violated {
                let (lhs, rhs, margin) = (
                    r.lhs.expect("violated rows carry values"),
                    r.rhs.expect("violated rows carry values"),
                    r.margin.expect("violated rows carry values"),
                );
                violations.push(Violation {
                    index,
                    file: violation_file_name(id, index),
                    n: ev.graph.n(),
                    m: ev.graph.m(),
                    edges: edges.clone(),
                    bound_id: id,
                    param: ParamValue::of(r.param),
                    lhs,
                    rhs,
                    margin,
                    merged_monotone: ev.merged_monotone,
                });
                if !files_for_instance.contains(&id) {
                    files_for_instance.push(id);
                    to_write.push((violation_file_name(id, index), &ev.graph));
                }
            }
            if !r.agreement {
                agreement_failures.push(AgreementFailure {
                    index,
                    n: ev.graph.n(),
                    m: ev.graph.m(),
                    edges: edges.clone(),
                    bound_id: id,
                    param: ParamValue::of(r.param),
                    verdict: r.verdict.as_str(),
                    predicted_equality: r.predicted_equality,
                    lhs: r.lhs,
                    rhs: r.rhs,
                });
            }
        }
        tally_majorization(&mut grone, index, ev.grone);
        tally_majorization(&mut grone_merris, index, ev.grone_merris);
        if ev.is_tree {
            tally_majorization(&mut grone_merris_trees, index, ev.grone_merris);
        }
    }

    if let Some(dir) = &cfg.out_dir {
        if !to_write.is_empty() {
            fs::create_dir_all(dir).map_err(|source| HarnessError::Io {
                path: dir.clone(),
                source,
            })?;
        }
        for (name, g) in &to_write {
            write_edge_list(&dir.join(name), g)?;
        }
    }

    Ok(FuzzReport {
        metadata: Metadata {
            seed: cfg.seed,
            model: cfg.model.as_str(),
            p: (cfg.model == Model::Gnp).then_some(cfg.p),
            count: cfg.count,
            n_min: cfg.n_min,
            n_max: cfg.n_max,
            alphas: cfg.eval.alphas.clone(),
            ks: cfg.eval.ks.clone(),
            strict_applicability: cfg.eval.strict_applicability,
            sizes: outcomes.iter().map(|o| o.n).collect(),
        },
        tallies,
        violations,
        agreement_failures,
        grone,
        grone_merris,
        grone_merris_trees,
        errors,
    })
}

/// Flat per-(bound, parameter) tally row for CSV output.
#[derive(Debug, Clone, Serialize)]
pub struct TallyRow {
    pub bound_id: &'static str,
    pub param: Option<ParamValue>,
    pub holds: usize,
    pub equality: usize,
    pub violated: usize,
    pub not_applicable: usize,
    pub errored: usize,
}

pub fn tally_rows(report: &FuzzReport) -> Vec<TallyRow> {
    report
        .tallies
        .iter()
        .flat_map(|t| {
            t.by_param.iter().map(move |pt| TallyRow {
                bound_id: t.bound_id,
                param: pt.param,
                holds: pt.counts.holds,
                equality: pt.counts.equality,
                violated: pt.counts.violated,
                not_applicable: pt.counts.not_applicable,
                errored: pt.counts.errored,
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(model: Model, count: usize, seed: u64) -> FuzzConfig {
        FuzzConfig {
            model,
            count,
            seed,
            ..FuzzConfig::default()
        }
    }

    #[test]
    fn tallies_cover_every_combination() {
        let c = cfg(Model::Gnp, 20, 5);
        let r = run_fuzz(&c).unwrap();
        for t in &r.tallies {
            let id: BoundId = t.bound_id.parse().unwrap();
            let combos = catalog_params(id, &c.eval).len();
            assert_eq!(t.counts.total(), c.count * combos, "{}", t.bound_id);
            let by: usize = t.by_param.iter().map(|p| p.counts.total()).sum();
            assert_eq!(by, t.counts.total());
        }
        assert_eq!(r.metadata.sizes.len(), 20);
        assert!(r.metadata.sizes.iter().all(|&n| (4..=12).contains(&n)));
    }

    #[test]
    fn generation_failures_are_tallied() {
        // p tiny and n large: connectivity is essentially never reached.
        let c = FuzzConfig {
            p: 1e-6,
            n_min: 30,
            n_max: 30,
            ..cfg(Model::Gnp, 2, 0)
        };
        let r = run_fuzz(&c).unwrap();
        assert_eq!(r.errors.len(), 2);
        let t = r.tally(BoundId::P1Lower).unwrap();
        assert_eq!(t.counts.errored, t.counts.total());
    }

    #[test]
    fn instances_ignore_count() {
        let a = cfg(Model::Tree, 5, 9);
        let b = cfg(Model::Tree, 50, 9);
        for i in 0..5 {
            assert_eq!(instance(&a, i).unwrap(), instance(&b, i).unwrap());
        }
    }

    #[test]
    fn config_validation() {
        let bad = [
            FuzzConfig {
                count: 0,
                ..FuzzConfig::default()
            },
            FuzzConfig {
                n_min: 1,
                ..FuzzConfig::default()
            },
            FuzzConfig {
                n_max: 65,
                ..FuzzConfig::default()
            },
            FuzzConfig {
                n_min: 9,
                n_max: 8,
                ..FuzzConfig::default()
            },
            FuzzConfig {
                p: 0.0,
                ..FuzzConfig::default()
            },
        ];
        for c in bad {
            assert!(matches!(c.validate(), Err(HarnessError::Usage(_))));
        }
    }
}
