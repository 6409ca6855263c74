//! The bound catalog: every degree-sequence inequality on `s_alpha`, the
//! Kirchhoff index and the Laplacian Estrada index, each evaluated on a
//! graph to a verdict.
//!
//! Bounds are evaluated exactly as stated, so a false statement shows up as
//! a `Violated` verdict instead of an error. Each bound also predicts from
//! the graph's structure whether equality should hold; `agreement` records
//! whether the observed verdict matches that prediction.

use alloc::string::ToString;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigInt;

use crate::graph::{ConjugateSequence, DegreeSequence, Graph, GraphClass};
use crate::majorization::{merged_grone_sequence, ShiftedSequence};
use crate::spectra::{big_to_f64, kirchhoff, lee, moment, s_alpha, spanning_trees_exact, Spectrum};
use crate::{Error, Result};

/// Relative tolerance separating equality from strict inequality or violation.
pub const EQ_TOL: f64 = 1e-7;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoundId {
    P1Lower,
    P1Upper,
    P2Lower,
    KfNew,
    KfZt,
    KfCompare,
    R1TreeHigh,
    R1TreeLow,
    RpMoment,
    LeeDegree,
    LeeTree,
    LeeClique,
    LeeR2aM,
    LeeR2aT,
    LeeR2b,
    LeeR2cM1,
    LeeR2cT,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Lower,
    Upper,
    StrictLower,
    /// Not a bound: compares two right-hand sides.
    Comparison,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParamKind {
    None,
    Alpha,
    K,
}

impl BoundId {
    /// Catalog order.
    pub const ALL: [BoundId; 17] = [
        Self::P1Lower,
        Self::P1Upper,
        Self::P2Lower,
        Self::KfNew,
        Self::KfZt,
        Self::KfCompare,
        Self::R1TreeHigh,
        Self::R1TreeLow,
        Self::RpMoment,
        Self::LeeDegree,
        Self::LeeTree,
        Self::LeeClique,
        Self::LeeR2aM,
        Self::LeeR2aT,
        Self::LeeR2b,
        Self::LeeR2cM1,
        Self::LeeR2cT,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::P1Lower => "P1_LOWER",
            Self::P1Upper => "P1_UPPER",
            Self::P2Lower => "P2_LOWER",
            Self::KfNew => "KF_NEW",
            Self::KfZt => "KF_ZT",
            Self::KfCompare => "KF_COMPARE",
            Self::R1TreeHigh => "R1_TREE_HIGH",
            Self::R1TreeLow => "R1_TREE_LOW",
            Self::RpMoment => "RP_MOMENT",
            Self::LeeDegree => "LEE_DEGREE",
            Self::LeeTree => "LEE_TREE",
            Self::LeeClique => "LEE_CLIQUE",
            Self::LeeR2aM => "LEE_R2A_M",
            Self::LeeR2aT => "LEE_R2A_T",
            Self::LeeR2b => "LEE_R2B",
            Self::LeeR2cM1 => "LEE_R2C_M1",
            Self::LeeR2cT => "LEE_R2C_T",
        }
    }

    pub fn direction(self) -> Direction {
        match self {
            Self::P1Upper | Self::R1TreeHigh | Self::LeeTree => Direction::Upper,
            Self::LeeR2b => Direction::StrictLower,
            Self::KfCompare => Direction::Comparison,
            _ => Direction::Lower,
        }
    }

    pub fn param_kind(self) -> ParamKind {
        match self {
            Self::P1Lower | Self::P1Upper | Self::P2Lower | Self::R1TreeHigh | Self::R1TreeLow => {
                ParamKind::Alpha
            }
            Self::RpMoment => ParamKind::K,
            _ => ParamKind::None,
        }
    }

    /// Whether `param` lies in this bound's legal range.
    pub fn accepts(self, param: Param) -> bool {
        match (self.param_kind(), param) {
            (ParamKind::None, Param::None) => true,
            (ParamKind::K, Param::K(k)) => k >= 1,
            (ParamKind::Alpha, Param::Alpha(a)) if a.is_finite() => match self {
                Self::P1Lower => a > 1.0,
                Self::P1Upper | Self::R1TreeLow => a > 0.0 && a < 1.0,
                Self::P2Lower => a < 0.0,
                Self::R1TreeHigh => !(0.0..=1.0).contains(&a),
                _ => false,
            },
            _ => false,
        }
    }

    fn range_hint(self) -> &'static str {
        match self {
            Self::P1Lower => "requires alpha > 1",
            Self::P1Upper | Self::R1TreeLow => "requires 0 < alpha < 1",
            Self::P2Lower => "requires alpha < 0",
            Self::R1TreeHigh => "requires alpha > 1 or alpha < 0",
            Self::RpMoment => "requires integer k >= 1",
            _ => "takes no parameter",
        }
    }
}

impl fmt::Display for BoundId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for BoundId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|id| id.as_str().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| Error::UnknownBound(s.to_string()))
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Param {
    None,
    Alpha(f64),
    K(u32),
}

impl Param {
    pub fn value(self) -> Option<f64> {
        match self {
            Self::None => None,
            Self::Alpha(a) => Some(a),
            Self::K(k) => Some(k as f64),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Holds,
    Equality,
    Violated,
    NotApplicable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Self::Holds => "HOLDS",
            Self::Equality => "EQUALITY",
            Self::Violated => "VIOLATED",
            Self::NotApplicable => "NOT_APPLICABLE",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One bound evaluated on one graph.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundResult {
    pub bound: BoundId,
    pub param: Param,
    pub applicable: bool,
    pub lhs: Option<f64>,
    pub rhs: Option<f64>,
    /// `lhs - rhs` for lower bounds and comparisons, `rhs - lhs` for upper
    /// bounds; positive means the bound holds strictly.
    pub margin: Option<f64>,
    pub verdict: Verdict,
    pub predicted_equality: bool,
    /// `verdict == Equality` iff `predicted_equality`. Always true for bounds
    /// without a stated equality case and for comparisons.
    pub agreement: bool,
}

impl BoundResult {
    /// `max(1, |lhs|, |rhs|)`, the scale the tolerances are relative to.
    pub fn scale(&self) -> Option<f64> {
        Some(scale(self.lhs?, self.rhs?))
    }
}

fn scale(lhs: f64, rhs: f64) -> f64 {
    libm::fabs(lhs).max(libm::fabs(rhs)).max(1.0)
}

/// Everything the catalog needs about one graph, computed once.
#[derive(Debug, Clone)]
pub struct Profile {
    graph: Graph,
    class: GraphClass,
    degrees: DegreeSequence,
    conjugate: ConjugateSequence,
    spectrum: Spectrum,
    complement_spectrum: Spectrum,
    merged: Option<ShiftedSequence>,
    spanning_trees: BigInt,
}

impl Profile {
    pub fn new(graph: Graph) -> Result<Self> {
        let class = graph.classify();
        let degrees = graph.degree_sequence();
        let conjugate = degrees.conjugate();
        let spectrum = Spectrum::of(&graph)?;
        let complement_spectrum = Spectrum::of(&graph.complement())?;
        let merged = merged_grone_sequence(&degrees).ok();
        let spanning_trees = spanning_trees_exact(&graph);
        Ok(Self {
            graph,
            class,
            degrees,
            conjugate,
            spectrum,
            complement_spectrum,
            merged,
            spanning_trees,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }
    pub fn class(&self) -> &GraphClass {
        &self.class
    }
    pub fn degrees(&self) -> &DegreeSequence {
        &self.degrees
    }
    pub fn conjugate(&self) -> &ConjugateSequence {
        &self.conjugate
    }
    pub fn spectrum(&self) -> &Spectrum {
        &self.spectrum
    }
    pub fn complement_spectrum(&self) -> &Spectrum {
        &self.complement_spectrum
    }
    /// Merged Grone sequence, present when `n >= 3`.
    pub fn merged_grone(&self) -> Option<&ShiftedSequence> {
        self.merged.as_ref()
    }
    pub fn spanning_trees(&self) -> &BigInt {
        &self.spanning_trees
    }

    fn n(&self) -> usize {
        self.graph.n()
    }

    fn d(&self, i: usize) -> f64 {
        self.degrees[i] as f64
    }

    fn merged_monotone(&self) -> bool {
        self.merged.as_ref().is_some_and(|s| s.monotone)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EvalConfig {
    pub alphas: Vec<f64>,
    pub ks: Vec<u32>,
    /// Treat P2_LOWER and KF_NEW as inapplicable unless the merged Grone
    /// sequence is non-increasing as written.
    pub strict_applicability: bool,
    /// Restrict the catalog to these ids; `None` means all.
    pub bounds: Option<Vec<BoundId>>,
}

impl Default for EvalConfig {
    fn default() -> Self {
        Self {
            alphas: alloc::vec![-2.0, -1.0, -0.5, 0.5, 2.0, 3.0],
            ks: alloc::vec![1, 2, 3, 4],
            strict_applicability: false,
            bounds: None,
        }
    }
}

enum Prediction {
    Equal(bool),
    Unstated,
}

fn pow(x: f64, a: f64) -> f64 {
    libm::pow(x, a)
}

fn exp(x: f64) -> f64 {
    libm::exp(x)
}

/// `(d_1+1)^a + sum_{i=2}^{n-1} d_i^a + (d_n-1)^a`; `0^a = 0` for `a > 0`.
fn grone_power_sum(p: &Profile, a: f64) -> f64 {
    let n = p.n();
    pow(p.d(0) + 1.0, a)
        + (1..n - 1).map(|i| pow(p.d(i), a)).sum::<f64>()
        + pow(p.d(n - 1) - 1.0, a)
}

/// `(d_1+1)^a + sum_{i=2}^{n-2} d_i^a + (d_{n-1}+d_n-1)^a`.
fn merged_power_sum(p: &Profile, a: f64) -> f64 {
    let n = p.n();
    pow(p.d(0) + 1.0, a)
        + (1..n - 2).map(|i| pow(p.d(i), a)).sum::<f64>()
        + pow(p.d(n - 2) + p.d(n - 1) - 1.0, a)
}

fn kf_new_rhs(p: &Profile) -> f64 {
    p.n() as f64 * merged_power_sum(p, -1.0)
}

fn kf_zt_rhs(p: &Profile) -> f64 {
    let n = p.n() as f64;
    -1.0 + (n - 1.0)
        * p.degrees
            .as_slice()
            .iter()
            .map(|&d| 1.0 / d as f64)
            .sum::<f64>()
}

/// `sum_{i=1}^{d_1} f(d_i^*)`, the positive part of the conjugate sequence.
fn conjugate_sum(p: &Profile, f: impl Fn(f64) -> f64) -> f64 {
    (0..p.degrees.max()).map(|i| f(p.conjugate[i] as f64)).sum()
}

fn two_m(p: &Profile) -> f64 {
    2.0 * p.graph.m() as f64
}

/// `2 sqrt(M1 / n)`.
fn zagreb_root(p: &Profile) -> f64 {
    2.0 * libm::sqrt(p.graph.first_zagreb() as f64 / p.n() as f64)
}

fn lee_tail(n: f64, first: f64, rest_exponent: f64) -> f64 {
    1.0 + exp(first) + (n - 2.0) * exp(rest_exponent)
}

/// `(lhs, rhs)` when applicable.
fn sides(id: BoundId, p: &Profile, param: Param, strict: bool) -> Result<Option<(f64, f64)>> {
    let c = &p.class;
    let n = p.n();
    let nf = n as f64;
    let alpha = param.value().unwrap_or(0.0);
    let connected_at_least = |k: usize| c.is_connected && n >= k;
    let p2_applicable = connected_at_least(3) && (!strict || p.merged_monotone());

    let applicable = match id {
        BoundId::P1Lower | BoundId::P1Upper | BoundId::KfZt | BoundId::LeeDegree => {
            connected_at_least(2)
        }
        BoundId::P2Lower | BoundId::KfNew => p2_applicable,
        BoundId::KfCompare | BoundId::LeeR2aM | BoundId::LeeR2aT => connected_at_least(3),
        BoundId::R1TreeHigh | BoundId::R1TreeLow | BoundId::LeeTree => c.is_tree && n >= 2,
        BoundId::RpMoment | BoundId::LeeClique => true,
        BoundId::LeeR2b => n >= 2,
        BoundId::LeeR2cM1 | BoundId::LeeR2cT => connected_at_least(3) && c.is_bipartite,
    };
    if !applicable {
        return Ok(None);
    }

    let spec = &p.spectrum;
    let d1 = p.d(0);
    let t = big_to_f64(&p.spanning_trees);
    let pair = match id {
        BoundId::P1Lower | BoundId::P1Upper => (s_alpha(spec, alpha)?, grone_power_sum(p, alpha)),
        BoundId::P2Lower => (s_alpha(spec, alpha)?, merged_power_sum(p, alpha)),
        BoundId::KfNew => (kirchhoff(spec)?, kf_new_rhs(p)),
        BoundId::KfZt => (kirchhoff(spec)?, kf_zt_rhs(p)),
        BoundId::KfCompare => (kf_new_rhs(p), kf_zt_rhs(p)),
        BoundId::R1TreeHigh | BoundId::R1TreeLow => {
            (s_alpha(spec, alpha)?, conjugate_sum(p, |x| pow(x, alpha)))
        }
        BoundId::RpMoment => {
            let k = match param {
                Param::K(k) => k,
                _ => unreachable!("checked by accepts"),
            };
            let rhs = p
                .degrees
                .as_slice()
                .iter()
                .map(|&d| d as f64 * pow(1.0 + d as f64, (k - 1) as f64))
                .sum();
            (moment(spec, k), rhs)
        }
        BoundId::LeeDegree => {
            let rhs = exp(d1 + 1.0)
                + (1..n - 1).map(|i| exp(p.d(i))).sum::<f64>()
                + exp(p.d(n - 1) - 1.0);
            (lee(spec), rhs)
        }
        BoundId::LeeTree => (lee(spec), nf - d1 + conjugate_sum(p, exp)),
        BoundId::LeeClique => {
            let rhs = nf
                + p.degrees
                    .as_slice()
                    .iter()
                    .map(|&d| {
                        let d = d as f64;
                        d / (1.0 + d) * libm::expm1(1.0 + d)
                    })
                    .sum::<f64>();
            (lee(spec), rhs)
        }
        BoundId::LeeR2aM => (
            lee(spec),
            lee_tail(nf, 1.0 + d1, (two_m(p) - 1.0 - d1) / (nf - 2.0)),
        ),
        BoundId::LeeR2aT => {
            let e = pow(t * nf / (1.0 + d1), 1.0 / (nf - 2.0));
            (lee(spec), lee_tail(nf, 1.0 + d1, e))
        }
        BoundId::LeeR2b => (
            lee(spec) + lee(&p.complement_spectrum),
            2.0 + 2.0 * (nf - 1.0) * exp(nf / 2.0),
        ),
        BoundId::LeeR2cM1 => {
            let r = zagreb_root(p);
            (lee(spec), lee_tail(nf, r, (two_m(p) - r) / (nf - 2.0)))
        }
        BoundId::LeeR2cT => {
            let r = zagreb_root(p);
            // t n sqrt(n) / (2 sqrt(M1)) = t n / r
            let e = pow(t * nf / r, 1.0 / (nf - 2.0));
            (lee(spec), lee_tail(nf, r, e))
        }
    };
    Ok(Some(pair))
}

fn predict(id: BoundId, p: &Profile, param: Param) -> Prediction {
    let c = &p.class;
    let n = p.n();
    match id {
        BoundId::P1Lower | BoundId::P1Upper | BoundId::R1TreeHigh | BoundId::R1TreeLow => {
            Prediction::Equal(c.is_star)
        }
        BoundId::LeeDegree | BoundId::LeeTree => Prediction::Equal(c.is_star),
        BoundId::P2Lower | BoundId::KfNew => {
            Prediction::Equal(c.is_star || (c.is_complete && n == 3))
        }
        BoundId::RpMoment => match param {
            Param::K(k) if k <= 2 => Prediction::Equal(true),
            _ => Prediction::Equal(c.is_clique_union),
        },
        BoundId::LeeClique => Prediction::Equal(c.is_clique_union),
        BoundId::LeeR2aM | BoundId::LeeR2aT => Prediction::Equal(c.is_complete || c.is_star),
        BoundId::LeeR2cM1 | BoundId::LeeR2cT => Prediction::Equal(c.is_balanced_complete_bipartite),
        BoundId::LeeR2b => Prediction::Equal(false),
        BoundId::KfZt | BoundId::KfCompare => Prediction::Unstated,
    }
}

/// Evaluates one bound on a profiled graph.
pub fn evaluate_bound(id: BoundId, p: &Profile, param: Param, strict: bool) -> Result<BoundResult> {
    if !id.accepts(param) {
        return Err(Error::BadParameter {
            bound: id.as_str(),
            reason: id.range_hint(),
        });
    }
    let Some((lhs, rhs)) = sides(id, p, param, strict)? else {
        return Ok(BoundResult {
            bound: id,
            param,
            applicable: false,
            lhs: None,
            rhs: None,
            margin: None,
            verdict: Verdict::NotApplicable,
            predicted_equality: false,
            agreement: true,
        });
    };
    let margin = match id.direction() {
        Direction::Upper => rhs - lhs,
        _ => lhs - rhs,
    };
    let tol = EQ_TOL * scale(lhs, rhs);
    let verdict = if libm::fabs(lhs - rhs) <= tol {
        Verdict::Equality
    } else if margin < -tol && id.direction() != Direction::Comparison {
        Verdict::Violated
    } else {
        Verdict::Holds
    };
    let (predicted_equality, agreement) = match predict(id, p, param) {
        Prediction::Equal(e) => (e, e == (verdict == Verdict::Equality)),
        Prediction::Unstated => (false, true),
    };
    Ok(BoundResult {
        bound: id,
        param,
        applicable: true,
        lhs: Some(lhs),
        rhs: Some(rhs),
        margin: Some(margin),
        verdict,
        predicted_equality,
        agreement,
    })
}

/// Parameters of `id` drawn from the grids: legal for the bound, trivial
/// exponents 0 and 1 dropped, ascending and deduplicated.
pub fn catalog_params(id: BoundId, config: &EvalConfig) -> Vec<Param> {
    let mut params: Vec<Param> = match id.param_kind() {
        ParamKind::None => alloc::vec![Param::None],
        ParamKind::Alpha => {
            let mut a: Vec<f64> = config
                .alphas
                .iter()
                .copied()
                .filter(|&a| a != 0.0 && a != 1.0)
                .collect();
            a.sort_by(f64::total_cmp);
            a.dedup();
            a.into_iter().map(Param::Alpha).collect()
        }
        ParamKind::K => {
            let mut k = config.ks.clone();
            k.sort_unstable();
            k.dedup();
            k.into_iter().map(Param::K).collect()
        }
    };
    params.retain(|&p| id.accepts(p));
    params
}

/// One result per (bound, parameter), in catalog order then ascending parameter.
pub fn evaluate_catalog(p: &Profile, config: &EvalConfig) -> Vec<BoundResult> {
    BoundId::ALL
        .into_iter()
        .filter(|id| config.bounds.as_ref().is_none_or(|b| b.contains(id)))
        .flat_map(|id| {
            catalog_params(id, config).into_iter().map(move |param| {
                evaluate_bound(id, p, param, config.strict_applicability)
                    .expect("catalog parameters are legal and applicability is checked")
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Larger {
    New,
    Zt,
    Equal,
}

/// The two Kirchhoff lower bounds side by side, with the true value.
#[derive(Debug, Clone, PartialEq)]
pub struct KfComparison {
    pub kf_actual: f64,
    pub kf_new_rhs: f64,
    pub kf_zt_rhs: f64,
    /// Magnitude order of the two right-hand sides.
    pub larger: Larger,
    pub new_valid: bool,
    pub zt_valid: bool,
}

pub fn kf_compare(p: &Profile) -> Result<KfComparison> {
    if p.n() < 3 {
        return Err(Error::TooSmall {
            need: 3,
            got: p.n(),
        });
    }
    let kf_actual = kirchhoff(&p.spectrum)?;
    let kf_new_rhs = kf_new_rhs(p);
    let kf_zt_rhs = kf_zt_rhs(p);
    let valid = |rhs: f64| kf_actual - rhs >= -EQ_TOL * scale(kf_actual, rhs);
    let larger = if libm::fabs(kf_new_rhs - kf_zt_rhs) <= EQ_TOL * scale(kf_new_rhs, kf_zt_rhs) {
        Larger::Equal
    } else if kf_new_rhs > kf_zt_rhs {
        Larger::New
    } else {
        Larger::Zt
    };
    Ok(KfComparison {
        kf_actual,
        kf_new_rhs,
        kf_zt_rhs,
        larger,
        new_valid: valid(kf_new_rhs),
        zt_valid: valid(kf_zt_rhs),
    })
}
