//! Laplacian spectra and the invariants computed from them.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::eigen::symmetric_eigenvalues;
use crate::graph::Graph;
use crate::{Error, Result};

/// Forced-zero candidates must be below this times `max(1, mu_1)`.
const ZERO_TOL: f64 = 1e-8;

/// `L = D - A` as a dense row-major integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaplacianMatrix {
    n: usize,
    data: Vec<i64>,
}

impl LaplacianMatrix {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let mut data = vec![0i64; n * n];
        for v in 0..n {
            data[v * n + v] = g.degree(v) as i64;
        }
        for &(u, v) in g.edges() {
            data[u * n + v] = -1;
            data[v * n + u] = -1;
        }
        Self { n, data }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> i64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    fn to_f64(&self) -> Vec<f64> {
        self.data.iter().map(|&x| x as f64).collect()
    }
}

pub fn laplacian(g: &Graph) -> LaplacianMatrix {
    LaplacianMatrix::of(g)
}

/// Laplacian eigenvalues `mu_1 >= ... >= mu_n`.
///
/// The last `component_count` entries are exactly `0.0`; every other entry
/// is strictly positive. `trace` is `2m`, kept exactly.
#[derive(Debug, Clone, PartialEq)]
pub struct Spectrum {
    mu: Vec<f64>,
    component_count: usize,
    trace: u64,
}

impl Spectrum {
    /// Eigensolves the Laplacian of `g` and pins the structural zeros.
    pub fn of(g: &Graph) -> Result<Self> {
        let n = g.n();
        let lap = LaplacianMatrix::of(g);
        let mut mu = symmetric_eigenvalues(lap.to_f64(), n)?;
        let components = g.component_count();

        mu.sort_by(|a, b| b.total_cmp(a));
        let threshold = ZERO_TOL * mu[0].max(1.0);
        // smallest |mu| go to the back
        mu.sort_by(|a, b| libm::fabs(*b).total_cmp(&libm::fabs(*a)));
        for (i, x) in mu.iter_mut().enumerate() {
            if i >= n - components {
                if libm::fabs(*x) >= threshold {
                    return Err(Error::SpectralInconsistency {
                        components,
                        value: *x,
                    });
                }
                *x = 0.0;
            } else if *x < threshold {
                return Err(Error::SpectralInconsistency {
                    components,
                    value: *x,
                });
            }
        }
        mu.sort_by(|a, b| b.total_cmp(a));
        Ok(Self {
            mu,
            component_count: components,
            trace: lap.trace() as u64,
        })
    }

    /// Builds a spectrum from known eigenvalues, e.g. closed forms. Zeros
    /// must be exact; the component count is their multiplicity.
    pub fn from_eigenvalues(mut mu: Vec<f64>) -> Result<Self> {
        if mu.is_empty() {
            return Err(Error::NoVertices);
        }
        mu.sort_by(|a, b| b.total_cmp(a));
        if mu.iter().any(|&x| x.is_nan() || x < 0.0) {
            return Err(Error::SpectralInconsistency {
                components: 0,
                value: mu[mu.len() - 1],
            });
        }
        let component_count = mu.iter().filter(|&&x| x == 0.0).count();
        if component_count == 0 {
            return Err(Error::SpectralInconsistency {
                components: 0,
                value: mu[mu.len() - 1],
            });
        }
        let trace = libm::round(mu.iter().sum::<f64>()) as u64;
        Ok(Self {
            mu,
            component_count,
            trace,
        })
    }

    pub fn mu(&self) -> &[f64] {
        &self.mu
    }

    pub fn n(&self) -> usize {
        self.mu.len()
    }

    /// Number of non-zero eigenvalues.
    pub fn h(&self) -> usize {
        self.mu.len() - self.component_count
    }

    pub fn component_count(&self) -> usize {
        self.component_count
    }

    pub fn is_connected(&self) -> bool {
        self.component_count == 1
    }

    pub fn nonzero(&self) -> &[f64] {
        &self.mu[..self.h()]
    }

    /// `trace(L) = 2m`.
    pub fn trace(&self) -> u64 {
        self.trace
    }
}

pub fn spectrum(g: &Graph) -> Result<Spectrum> {
    Spectrum::of(g)
}

/// Sum of `mu^alpha` over the non-zero eigenvalues.
///
/// `alpha = 0` gives `h` and `alpha = 1` gives `2m` exactly.
pub fn s_alpha(spec: &Spectrum, alpha: f64) -> Result<f64> {
    if !alpha.is_finite() {
        return Err(Error::BadParameter {
            bound: "s_alpha",
            reason: "alpha must be finite",
        });
    }
    if spec.h() == 0 && alpha <= 0.0 {
        return Err(Error::NoNonzeroEigenvalues);
    }
    Ok(if alpha == 0.0 {
        spec.h() as f64
    } else if alpha == 1.0 {
        spec.trace() as f64
    } else {
        spec.nonzero().iter().map(|&x| libm::pow(x, alpha)).sum()
    })
}

/// `t_k`, the sum of `mu^k` over all `n` eigenvalues.
pub fn moment(spec: &Spectrum, k: u32) -> f64 {
    if k == 0 {
        spec.n() as f64
    } else {
        s_alpha(spec, k as f64).expect("positive exponent is always defined")
    }
}

/// Kirchhoff index `n * s_{-1}`; zero for a single vertex.
pub fn kirchhoff(spec: &Spectrum) -> Result<f64> {
    if !spec.is_connected() {
        return Err(Error::Disconnected);
    }
    if spec.n() == 1 {
        return Ok(0.0);
    }
    Ok(spec.n() as f64 * s_alpha(spec, -1.0)?)
}

/// Laplacian Estrada index, `sum exp(mu_i)` over every eigenvalue.
pub fn lee(spec: &Spectrum) -> f64 {
    spec.mu().iter().map(|&x| libm::exp(x)).sum()
}

/// Spanning-tree count as the determinant of the Laplacian with row and
/// column 0 removed, by fraction-free (Bareiss) elimination. Zero when `g`
/// is disconnected.
pub fn spanning_trees_exact(g: &Graph) -> BigInt {
    let lap = LaplacianMatrix::of(g);
    let size = g.n() - 1;
    let mut m: Vec<Vec<BigInt>> = (1..g.n())
        .map(|i| (1..g.n()).map(|j| BigInt::from(lap.get(i, j))).collect())
        .collect();
    bareiss_determinant(&mut m, size)
}

fn bareiss_determinant(m: &mut [Vec<BigInt>], size: usize) -> BigInt {
    if size == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..size {
        if m[k][k].is_zero() {
            match (k + 1..size).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..size {
            for j in k + 1..size {
                let v = (&m[i][j] * &m[k][k] - &m[i][k] * &m[k][j]) / &prev;
                m[i][j] = v;
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[size - 1][size - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Matrix-tree count from the spectrum: product of non-zero eigenvalues / n.
pub fn spanning_trees_spectral(spec: &Spectrum) -> Result<f64> {
    if !spec.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(spec.nonzero().iter().product::<f64>() / spec.n() as f64)
}

/// Lossy conversion used where the count enters a real-valued formula.
pub fn big_to_f64(x: &BigInt) -> f64 {
    num_traits::ToPrimitive::to_f64(x).unwrap_or(if x.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{generate, FamilySpec};
    use crate::rng::SplitMix64;
    use alloc::vec;

    fn g(spec: FamilySpec) -> Graph {
        generate(&spec).unwrap()
    }

    fn close(a: f64, b: f64, rel: f64) -> bool {
        (a - b).abs() <= rel * a.abs().max(b.abs()).max(1.0)
    }

    /// Characteristic polynomial coefficients of an integer matrix via
    /// Faddeev-LeVerrier, exact in i128: `x^n + c[1] x^(n-1) + ... + c[n]`.
    fn charpoly(lap: &LaplacianMatrix) -> Vec<i128> {
        let n = lap.n();
        let a: Vec<i128> = (0..n * n).map(|k| lap.get(k / n, k % n) as i128).collect();
        let mul = |x: &[i128], y: &[i128]| {
            let mut r = vec![0i128; n * n];
            for i in 0..n {
                for k in 0..n {
                    for j in 0..n {
                        r[i * n + j] += x[i * n + k] * y[k * n + j];
                    }
                }
            }
            r
        };
        let mut c = vec![1i128];
        let mut mk = vec![0i128; n * n];
        for k in 1..=n {
            // M_k = A M_{k-1} + c_{k-1} I
            let mut next = mul(&a, &mk);
            for i in 0..n {
                next[i * n + i] += c[k - 1];
            }
            mk = next;
            let amk = mul(&a, &mk);
            let tr: i128 = (0..n).map(|i| amk[i * n + i]).sum();
            assert_eq!(tr % k as i128, 0);
            c.push(-tr / k as i128);
        }
        c
    }

    /// Coefficients of prod (x - r) for integer roots.
    fn poly_from_roots(roots: &[i128]) -> Vec<i128> {
        let mut c = vec![1i128];
        for &r in roots {
            let mut next = vec![0i128; c.len() + 1];
            for (i, &ci) in c.iter().enumerate() {
                next[i] += ci;
                next[i + 1] -= r * ci;
            }
            c = next;
        }
        c
    }

    fn check_integer_spectrum(graph: &Graph, expected: &[i128]) {
        assert_eq!(charpoly(&laplacian(graph)), poly_from_roots(expected));
        let spec = spectrum(graph).unwrap();
        for (x, &e) in spec.mu().iter().zip(expected) {
            assert!((x - e as f64).abs() < 1e-10, "{x} vs {e}");
        }
    }

    #[test]
    fn laplacian_examples() {
        let k2 = laplacian(&g(FamilySpec::Complete { n: 2 }));
        assert_eq!((k2.row(0), k2.row(1)), (&[1, -1][..], &[-1, 1][..]));
        let p3 = laplacian(&g(FamilySpec::Path { n: 3 }));
        assert_eq!(p3.row(0), &[1, -1, 0]);
        assert_eq!(p3.row(1), &[-1, 2, -1]);
        assert_eq!(p3.row(2), &[0, -1, 1]);
        let e = laplacian(&Graph::empty(2).unwrap());
        assert!((0..2).all(|i| e.row(i).iter().all(|&x| x == 0)));
    }

    #[test]
    fn spectrum_examples_against_charpoly() {
        check_integer_spectrum(&g(FamilySpec::Star { n: 4 }), &[4, 1, 1, 0]);
        check_integer_spectrum(&g(FamilySpec::Complete { n: 4 }), &[4, 4, 4, 0]);
        let union = g(FamilySpec::CliqueUnion { sizes: vec![3, 2] });
        check_integer_spectrum(&union, &[3, 3, 2, 0, 0]);
        let spec = spectrum(&union).unwrap();
        assert_eq!((spec.h(), spec.component_count()), (3, 2));
        assert_eq!(&spec.mu()[3..], &[0.0, 0.0]);
    }

    #[test]
    fn s_alpha_examples() {
        let s4 = spectrum(&g(FamilySpec::Star { n: 4 })).unwrap();
        let k4 = spectrum(&g(FamilySpec::Complete { n: 4 })).unwrap();
        let k3 = spectrum(&g(FamilySpec::Complete { n: 3 })).unwrap();
        assert_eq!(s_alpha(&s4, 1.0).unwrap(), 6.0);
        assert!(close(s_alpha(&s4, 2.0).unwrap(), 18.0, 1e-12));
        assert!(close(s_alpha(&k4, -1.0).unwrap(), 0.75, 1e-12));
        assert!(close(s_alpha(&k3, 0.5).unwrap(), 2.0 * 3f64.sqrt(), 1e-12));
        assert_eq!(s_alpha(&k3, 0.0).unwrap(), 2.0);
        assert!(s_alpha(&k3, f64::NAN).is_err());
    }

    #[test]
    fn s_alpha_on_edgeless_graph() {
        let e = spectrum(&Graph::empty(3).unwrap()).unwrap();
        assert_eq!(e.h(), 0);
        assert_eq!(s_alpha(&e, -1.0), Err(Error::NoNonzeroEigenvalues));
        assert_eq!(s_alpha(&e, 0.0), Err(Error::NoNonzeroEigenvalues));
        assert_eq!(s_alpha(&e, 2.0).unwrap(), 0.0);
    }

    #[test]
    fn moment_examples() {
        let k3 = spectrum(&g(FamilySpec::Complete { n: 3 })).unwrap();
        assert_eq!(moment(&k3, 0), 3.0);
        assert!(close(moment(&k3, 2), 18.0, 1e-12));
        assert!(close(moment(&k3, 3), 54.0, 1e-12));
    }

    /// Effective resistances from `(L + J/n)^{-1}` by Gaussian elimination.
    fn resistance_sum(graph: &Graph) -> f64 {
        let n = graph.n();
        let lap = laplacian(graph);
        let mut a: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut row: Vec<f64> = (0..n)
                    .map(|j| lap.get(i, j) as f64 + 1.0 / n as f64)
                    .collect();
                row.extend((0..n).map(|j| if i == j { 1.0 } else { 0.0 }));
                row
            })
            .collect();
        for col in 0..n {
            let piv = (col..n)
                .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
                .unwrap();
            a.swap(col, piv);
            let d = a[col][col];
            for v in a[col].iter_mut() {
                *v /= d;
            }
            for r in 0..n {
                if r != col {
                    let f = a[r][col];
                    let pivot_row = a[col].clone();
                    for (x, p) in a[r].iter_mut().zip(&pivot_row) {
                        *x -= f * p;
                    }
                }
            }
        }
        let inv = |i: usize, j: usize| a[i][n + j];
        let mut total = 0.0;
        for i in 0..n {
            for j in i + 1..n {
                total += inv(i, i) + inv(j, j) - 2.0 * inv(i, j);
            }
        }
        total
    }

    #[test]
    fn kirchhoff_examples() {
        for (spec, expect) in [
            (FamilySpec::Complete { n: 3 }, 2.0),
            (FamilySpec::Star { n: 4 }, 9.0),
            (FamilySpec::Complete { n: 4 }, 3.0),
        ] {
            let graph = g(spec);
            let kf = kirchhoff(&spectrum(&graph).unwrap()).unwrap();
            assert!(close(kf, expect, 1e-9), "{kf} vs {expect}");
            assert!(close(resistance_sum(&graph), expect, 1e-9));
        }
        let union = spectrum(&g(FamilySpec::CliqueUnion { sizes: vec![2, 2] })).unwrap();
        assert_eq!(kirchhoff(&union), Err(Error::Disconnected));
        assert_eq!(
            kirchhoff(&spectrum(&Graph::empty(1).unwrap()).unwrap()).unwrap(),
            0.0
        );
    }

    #[test]
    fn kirchhoff_matches_resistance_oracle_on_random_graphs() {
        let mut rng = SplitMix64::new(11);
        for i in 0..30 {
            let n = rng.next_in(2, 10);
            let graph = g(FamilySpec::GnpConnected { n, p: 0.4, seed: i });
            let kf = kirchhoff(&spectrum(&graph).unwrap()).unwrap();
            assert!(close(kf, resistance_sum(&graph), 1e-9));
        }
    }

    #[test]
    fn lee_examples() {
        let e = core::f64::consts::E;
        assert_eq!(lee(&spectrum(&Graph::empty(4).unwrap()).unwrap()), 4.0);
        let s4 = lee(&spectrum(&g(FamilySpec::Star { n: 4 })).unwrap());
        assert!(close(s4, 1.0 + 2.0 * e + e.powi(4), 1e-12));
        assert!((s4 - 61.0347137).abs() < 1e-6);
        let k3 = lee(&spectrum(&g(FamilySpec::Complete { n: 3 })).unwrap());
        assert!(close(k3, 1.0 + 2.0 * e.powi(3), 1e-12));
        assert!((k3 - 41.171074).abs() < 1e-6);
    }

    /// Counts spanning trees by trying every (n-1)-subset of edges.
    fn brute_force_spanning_trees(graph: &Graph) -> u64 {
        let n = graph.n();
        let edges = graph.edges();
        let m = edges.len();
        if n == 1 {
            return 1;
        }
        let mut count = 0;
        for mask in 0u32..(1 << m) {
            if mask.count_ones() as usize != n - 1 {
                continue;
            }
            let mut parent: Vec<usize> = (0..n).collect();
            fn find(p: &mut [usize], x: usize) -> usize {
                let mut r = x;
                while p[r] != r {
                    r = p[r];
                }
                p[x] = r;
                r
            }
            let mut acyclic = true;
            for (i, &(u, v)) in edges.iter().enumerate() {
                if mask & (1 << i) != 0 {
                    let (a, b) = (find(&mut parent, u), find(&mut parent, v));
                    if a == b {
                        acyclic = false;
                        break;
                    }
                    parent[a] = b;
                }
            }
            if acyclic {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn spanning_tree_examples() {
        let k4 = g(FamilySpec::Complete { n: 4 });
        assert_eq!(brute_force_spanning_trees(&k4), 16);
        assert_eq!(spanning_trees_exact(&k4), BigInt::from(16));
        let c4 = g(FamilySpec::Cycle { n: 4 });
        assert_eq!(brute_force_spanning_trees(&c4), 4);
        assert_eq!(spanning_trees_exact(&c4), BigInt::from(4));
        assert_eq!(
            spanning_trees_exact(&g(FamilySpec::RandomTree { n: 9, seed: 3 })),
            BigInt::one()
        );
        assert_eq!(
            spanning_trees_exact(&Graph::empty(1).unwrap()),
            BigInt::one()
        );
        assert_eq!(
            spanning_trees_exact(&Graph::empty(3).unwrap()),
            BigInt::zero()
        );
        // K_12: 12^10
        assert_eq!(
            spanning_trees_exact(&g(FamilySpec::Complete { n: 12 })),
            BigInt::from(61_917_364_224u64)
        );
    }

    #[test]
    fn bareiss_matches_brute_force() {
        let mut rng = SplitMix64::new(5);
        for i in 0..25 {
            let n = rng.next_in(2, 7);
            let graph = g(FamilySpec::GnpConnected { n, p: 0.5, seed: i });
            if graph.m() > 16 {
                continue;
            }
            let exact = spanning_trees_exact(&graph);
            assert_eq!(exact, BigInt::from(brute_force_spanning_trees(&graph)));
            let spectral = spanning_trees_spectral(&spectrum(&graph).unwrap()).unwrap();
            assert!(close(spectral, big_to_f64(&exact), 1e-6));
        }
    }

    #[test]
    fn spanning_trees_spectral_examples() {
        let t = |mu: Vec<f64>| {
            spanning_trees_spectral(&Spectrum::from_eigenvalues(mu).unwrap()).unwrap()
        };
        assert!(close(t(vec![4.0, 4.0, 4.0, 0.0]), 16.0, 1e-12));
        assert!(close(t(vec![4.0, 1.0, 1.0, 0.0]), 1.0, 1e-12));
        assert!(close(t(vec![4.0, 2.0, 2.0, 0.0]), 4.0, 1e-12));
        let disc = Spectrum::from_eigenvalues(vec![2.0, 0.0, 0.0]).unwrap();
        assert_eq!(spanning_trees_spectral(&disc), Err(Error::Disconnected));
    }

    #[test]
    fn trace_identities_and_series() {
        let mut rng = SplitMix64::new(2);
        for i in 0..40 {
            let n = rng.next_in(1, 12);
            let graph = crate::family::gnp(n, 0.4, &mut SplitMix64::new(i));
            let spec = spectrum(&graph).unwrap();
            let two_m = 2.0 * graph.m() as f64;
            assert!(close(spec.mu().iter().sum(), two_m, 1e-9));
            let m1 = graph.first_zagreb() as f64;
            assert!(close(moment(&spec, 2), m1 + two_m, 1e-9));
            assert!(spec
                .mu()
                .iter()
                .all(|&x| (0.0..=n as f64 + 1e-9).contains(&x)));
            let mut series = n as f64;
            let mut fact = 1.0;
            for k in 1..=80u32 {
                fact *= k as f64;
                series += moment(&spec, k) / fact;
            }
            assert!(close(lee(&spec), series, 1e-9));
        }
    }

    #[test]
    fn disjoint_union_spectrum_is_multiset_union() {
        for seed in 0..10 {
            let a = g(FamilySpec::GnpConnected { n: 5, p: 0.5, seed });
            let b = g(FamilySpec::RandomTree { n: 4, seed });
            let mut expect: Vec<f64> = spectrum(&a).unwrap().mu().to_vec();
            expect.extend_from_slice(spectrum(&b).unwrap().mu());
            expect.sort_by(|x, y| y.total_cmp(x));
            let got = spectrum(&a.disjoint_union(&b)).unwrap();
            for (x, y) in got.mu().iter().zip(&expect) {
                assert!((x - y).abs() < 1e-10);
            }
        }
    }
}
