//! Majorization of real sequences and the degree-derived sequences that the
//! Laplacian spectrum is compared against.

use alloc::vec::Vec;

use crate::graph::DegreeSequence;
use crate::spectra::Spectrum;
use crate::{Error, Result};

/// Absolute slack on each prefix-sum comparison.
pub const PREFIX_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq)]
pub struct MajorizationVerdict {
    pub holds: bool,
    /// 1-based length of the first prefix where `x` exceeds `y`; the full
    /// length when only the totals disagree.
    pub first_failing_prefix: Option<usize>,
    pub prefix_sums_x: Vec<f64>,
    pub prefix_sums_y: Vec<f64>,
    pub sums_equal: bool,
}

fn check_sorted(x: &[f64]) -> Result<()> {
    match x.windows(2).position(|w| w[0] < w[1]) {
        Some(i) => Err(Error::NotSorted(i + 1)),
        None => Ok(()),
    }
}

fn prefix_sums(x: &[f64]) -> Vec<f64> {
    x.iter()
        .scan(0.0, |acc, &v| {
            *acc += v;
            Some(*acc)
        })
        .collect()
}

/// Whether `x` is majorized by `y`. Both must be non-increasing.
pub fn majorizes(x: &[f64], y: &[f64]) -> Result<MajorizationVerdict> {
    if x.len() != y.len() {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    check_sorted(x)?;
    check_sorted(y)?;
    let px = prefix_sums(x);
    let py = prefix_sums(y);
    let n = x.len();

    let (tx, ty) = (
        px.last().copied().unwrap_or(0.0),
        py.last().copied().unwrap_or(0.0),
    );
    let scale = libm::fabs(tx).max(libm::fabs(ty)).max(1.0);
    let sums_equal = libm::fabs(tx - ty) <= PREFIX_TOL * scale;
    let mut first_failing_prefix = (0..n.saturating_sub(1))
        .find(|&j| px[j] > py[j] + PREFIX_TOL)
        .map(|j| j + 1);
    if first_failing_prefix.is_none() && !sums_equal {
        first_failing_prefix = Some(n);
    }
    Ok(MajorizationVerdict {
        holds: first_failing_prefix.is_none(),
        first_failing_prefix,
        prefix_sums_x: px,
        prefix_sums_y: py,
        sums_equal,
    })
}

/// [`majorizes`] after sorting copies of both inputs non-increasing.
pub fn majorizes_unsorted(x: &[f64], y: &[f64]) -> Result<MajorizationVerdict> {
    majorizes(&sorted_desc(x), &sorted_desc(y))
}

pub fn sorted_desc(x: &[f64]) -> Vec<f64> {
    let mut v = x.to_vec();
    v.sort_by(|a, b| b.total_cmp(a));
    v
}

/// A sequence derived from degrees, as written (not re-sorted).
#[derive(Debug, Clone, PartialEq)]
pub struct ShiftedSequence {
    pub values: Vec<f64>,
    /// Whether `values` is already non-increasing.
    pub monotone: bool,
}

impl ShiftedSequence {
    fn new(values: Vec<f64>) -> Self {
        let monotone = values.windows(2).all(|w| w[0] >= w[1]);
        Self { values, monotone }
    }

    pub fn sorted(&self) -> Vec<f64> {
        sorted_desc(&self.values)
    }
}

/// `(d_1 + 1, d_2, ..., d_{n-1}, d_n - 1)`.
pub fn grone_sequence(d: &DegreeSequence) -> Result<ShiftedSequence> {
    let n = d.len();
    if n < 2 {
        return Err(Error::TooSmall { need: 2, got: n });
    }
    let mut v: Vec<f64> = d.as_slice().iter().map(|&x| x as f64).collect();
    v[0] += 1.0;
    v[n - 1] -= 1.0;
    Ok(ShiftedSequence::new(v))
}

/// `(d_1 + 1, d_2, ..., d_{n-2}, d_{n-1} + d_n - 1)`, length `n - 1`.
pub fn merged_grone_sequence(d: &DegreeSequence) -> Result<ShiftedSequence> {
    let n = d.len();
    if n < 3 {
        return Err(Error::TooSmall { need: 3, got: n });
    }
    let mut v: Vec<f64> = d.as_slice()[..n - 1].iter().map(|&x| x as f64).collect();
    v[0] += 1.0;
    v[n - 2] = (d[n - 2] + d[n - 1]) as f64 - 1.0;
    Ok(ShiftedSequence::new(v))
}

/// Sorted Grone sequence against the spectrum; connected graphs only.
pub fn check_grone(d: &DegreeSequence, spec: &Spectrum) -> Result<MajorizationVerdict> {
    if d.len() < 2 {
        return Err(Error::TooSmall {
            need: 2,
            got: d.len(),
        });
    }
    if !spec.is_connected() {
        return Err(Error::Disconnected);
    }
    majorizes(&grone_sequence(d)?.sorted(), spec.mu())
}

/// Spectrum against the conjugate degree sequence.
pub fn check_grone_merris(d: &DegreeSequence, spec: &Spectrum) -> Result<MajorizationVerdict> {
    let conj: Vec<f64> = d.conjugate().as_slice().iter().map(|&x| x as f64).collect();
    majorizes(spec.mu(), &conj)
}

/// `sum x_i^alpha`. Entries must be non-negative, and positive when `alpha < 0`.
pub fn power_sum(x: &[f64], alpha: f64) -> Result<f64> {
    for (index, &value) in x.iter().enumerate() {
        if value < 0.0 || (value == 0.0 && alpha < 0.0) || value.is_nan() {
            return Err(Error::DomainViolation {
                index,
                value,
                alpha,
            });
        }
    }
    Ok(x.iter().map(|&v| libm::pow(v, alpha)).sum())
}

/// Moves `eps` from entry `i` to a smaller entry `j` and re-sorts. The result
/// is majorized by `x` and differs from it.
pub fn pinch(x: &[f64], i: usize, j: usize, eps: f64) -> Result<Vec<f64>> {
    check_sorted(x)?;
    if i >= j || j >= x.len() {
        return Err(Error::BadPinch("need i < j < len"));
    }
    if !(eps > 0.0 && eps < (x[i] - x[j]) / 2.0) {
        return Err(Error::BadPinch("eps must lie in (0, (x_i - x_j) / 2)"));
    }
    let mut y = x.to_vec();
    y[i] -= eps;
    y[j] += eps;
    Ok(sorted_desc(&y))
}
