//! The single-document invariant dump.

use lapbound_core::spectra::{kirchhoff, lee, moment, s_alpha};
use lapbound_core::Profile;
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct AlphaValue {
    pub alpha: f64,
    /// `None` when undefined (negative exponent on a graph without edges).
    pub value: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MomentValue {
    pub k: u32,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct Invariants {
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub degrees: Vec<usize>,
    pub conjugate: Vec<usize>,
    /// Non-increasing, rounded to 12 significant digits.
    pub spectrum: Vec<f64>,
    pub h: usize,
    pub components: usize,
    pub s_alpha: Vec<AlphaValue>,
    pub moments: Vec<MomentValue>,
    /// Present for connected graphs only.
    pub kf: Option<f64>,
    pub lee: f64,
    pub m1: u64,
    /// Exact spanning-tree count as a decimal string.
    pub t: String,
}

/// Rounds to `digits` significant decimal digits.
pub fn round_sig(x: f64, digits: usize) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{:.*e}", digits - 1, x)
        .parse()
        .expect("formatted float parses")
}

pub fn invariants(graph_id: &str, p: &Profile, alphas: &[f64], ks: &[u32]) -> Invariants {
    let g = p.graph();
    let spec = p.spectrum();
    Invariants {
        graph_id: graph_id.to_string(),
        n: g.n(),
        m: g.m(),
        degrees: p.degrees().as_slice().to_vec(),
        conjugate: p.conjugate().as_slice().to_vec(),
        spectrum: spec.mu().iter().map(|&x| round_sig(x, 12)).collect(),
        h: spec.h(),
        components: spec.component_count(),
        s_alpha: alphas
            .iter()
            .map(|&alpha| AlphaValue {
                alpha,
                value: s_alpha(spec, alpha).ok(),
            })
            .collect(),
        moments: ks
            .iter()
            .map(|&k| MomentValue {
                k,
                value: moment(spec, k),
            })
            .collect(),
        kf: kirchhoff(spec).ok(),
        lee: lee(spec),
        m1: g.first_zagreb(),
        t: p.spanning_trees().to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lapbound_core::{generate, FamilySpec};

    fn inv(spec: FamilySpec) -> Invariants {
        let p = Profile::new(generate(&spec).unwrap()).unwrap();
        invariants("x", &p, &[0.0, 1.0, -1.0], &[0, 1, 2])
    }

    #[test]
    fn star_four() {
        let d = inv(FamilySpec::Star { n: 4 });
        assert_eq!((d.n, d.m, d.m1, d.t.as_str()), (4, 3, 12, "1"));
        assert_eq!(d.spectrum, [4.0, 1.0, 1.0, 0.0]);
        assert!((d.kf.unwrap() - 9.0).abs() < 1e-9);
        let exact = 1.0 + 2.0 * std::f64::consts::E + 4f64.exp();
        assert!((d.lee - exact).abs() < 1e-9 * exact);
        assert_eq!(d.s_alpha[0].value, Some(3.0));
        assert_eq!(d.s_alpha[1].value, Some(6.0));
        assert_eq!(d.moments[0].value, 4.0);
        assert_eq!(d.degrees, [3, 1, 1, 1]);
        assert_eq!(d.conjugate, [4, 1, 1, 0]);
    }

    #[test]
    fn complete_and_bipartite() {
        let k4 = inv(FamilySpec::Complete { n: 4 });
        assert_eq!(k4.spectrum, [4.0, 4.0, 4.0, 0.0]);
        assert_eq!(k4.t, "16");
        assert!((k4.kf.unwrap() - 3.0).abs() < 1e-9);
        let kab = inv(FamilySpec::CompleteBipartite { a: 2, b: 2 });
        assert_eq!(kab.spectrum, [4.0, 2.0, 2.0, 0.0]);
        assert_eq!((kab.t.as_str(), kab.m1), ("4", 16));
    }

    #[test]
    fn large_counts_stay_exact() {
        assert_eq!(inv(FamilySpec::Complete { n: 12 }).t, "61917364224");
    }

    #[test]
    fn disconnected_has_no_kf() {
        let d = inv(FamilySpec::CliqueUnion { sizes: vec![2, 1] });
        assert_eq!((d.h, d.components), (1, 2));
        assert!(d.kf.is_none());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_sig(3.999999999999998, 12), 4.0);
        assert_eq!(round_sig(1.23456789012345e-5, 12), 1.23456789012e-5);
        assert_eq!(round_sig(0.0, 12), 0.0);
    }
}
