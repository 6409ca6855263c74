//! Named graph families and seeded random generators.

use alloc::collections::BinaryHeap;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::graph::Graph;
use crate::rng::SplitMix64;
use crate::{Error, Result};

/// Rejection rounds allowed when conditioning G(n, p) on connectivity.
pub const GNP_MAX_ATTEMPTS: usize = 1000;

#[derive(Debug, Clone, PartialEq)]
pub enum FamilySpec {
    Complete {
        n: usize,
    },
    Star {
        n: usize,
    },
    /// `K_n` with the edge between the last two vertices removed.
    CompleteMinusEdge {
        n: usize,
    },
    CompleteBipartite {
        a: usize,
        b: usize,
    },
    Path {
        n: usize,
    },
    Cycle {
        n: usize,
    },
    /// Uniform labelled tree decoded from a random Prüfer sequence.
    RandomTree {
        n: usize,
        seed: u64,
    },
    /// G(n, p) conditioned on being connected, by rejection.
    GnpConnected {
        n: usize,
        p: f64,
        seed: u64,
    },
    /// Disjoint union of complete graphs of the given orders.
    CliqueUnion {
        sizes: Vec<usize>,
    },
}

impl FamilySpec {
    pub fn validate(&self) -> Result<()> {
        let bad = |cond: bool, msg| {
            if cond {
                Err(Error::InvalidFamily(msg))
            } else {
                Ok(())
            }
        };
        match self {
            Self::Complete { n } | Self::Star { n } | Self::Path { n } => {
                bad(*n < 1, "n must be at least 1")
            }
            Self::RandomTree { n, .. } => bad(*n < 1, "n must be at least 1"),
            Self::CompleteMinusEdge { n } => bad(*n < 2, "K_n - e needs n >= 2"),
            Self::CompleteBipartite { a, b } => {
                bad(*a < 1 || *b < 1, "both parts need at least one vertex")
            }
            Self::Cycle { n } => bad(*n < 3, "a cycle needs n >= 3"),
            Self::GnpConnected { n, p, .. } => {
                bad(*n < 1, "n must be at least 1")?;
                bad(!(*p > 0.0 && *p <= 1.0), "p must lie in (0, 1]")
            }
            Self::CliqueUnion { sizes } => {
                bad(sizes.is_empty(), "need at least one clique")?;
                bad(sizes.contains(&0), "clique orders must be positive")
            }
        }
    }

    /// Vertex count of the generated graph.
    pub fn order(&self) -> usize {
        match self {
            Self::Complete { n }
            | Self::Star { n }
            | Self::CompleteMinusEdge { n }
            | Self::Path { n }
            | Self::Cycle { n }
            | Self::RandomTree { n, .. }
            | Self::GnpConnected { n, .. } => *n,
            Self::CompleteBipartite { a, b } => a + b,
            Self::CliqueUnion { sizes } => sizes.iter().sum(),
        }
    }
}

/// Builds the graph described by `spec`. Random kinds are a pure function of
/// their seed.
pub fn generate(spec: &FamilySpec) -> Result<Graph> {
    spec.validate()?;
    let g = match *spec {
        FamilySpec::Complete { n } => complete(n),
        FamilySpec::Star { n } => Graph::from_canonical(n, (1..n).map(|v| (0, v)).collect()),
        FamilySpec::CompleteMinusEdge { n } => {
            let mut e = complete_edges(0, n);
            e.retain(|&pair| pair != (n - 2, n - 1));
            Graph::from_canonical(n, e)
        }
        FamilySpec::CompleteBipartite { a, b } => {
            let e = (0..a)
                .flat_map(|u| (a..a + b).map(move |v| (u, v)))
                .collect();
            Graph::from_canonical(a + b, e)
        }
        FamilySpec::Path { n } => Graph::from_canonical(n, (1..n).map(|v| (v - 1, v)).collect()),
        FamilySpec::Cycle { n } => {
            let mut e: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
            e.push((0, n - 1));
            e.sort_unstable();
            Graph::from_canonical(n, e)
        }
        FamilySpec::RandomTree { n, seed } => random_tree(n, &mut SplitMix64::new(seed)),
        FamilySpec::GnpConnected { n, p, seed } => gnp_connected(n, p, &mut SplitMix64::new(seed))?,
        FamilySpec::CliqueUnion { ref sizes } => {
            let mut e = Vec::new();
            let mut off = 0;
            for &s in sizes {
                e.extend(complete_edges(off, s));
                off += s;
            }
            Graph::from_canonical(off, e)
        }
    };
    Ok(g)
}

fn complete_edges(offset: usize, n: usize) -> Vec<(usize, usize)> {
    (offset..offset + n)
        .flat_map(|u| (u + 1..offset + n).map(move |v| (u, v)))
        .collect()
}

fn complete(n: usize) -> Graph {
    Graph::from_canonical(n, complete_edges(0, n))
}

/// Decodes a Prüfer sequence over `0..n` (length `n - 2`) into a tree.
pub fn prufer_to_tree(n: usize, code: &[usize]) -> Result<Graph> {
    if n < 2 {
        return Graph::new(n.max(1), &[]);
    }
    if code.len() != n - 2 || code.iter().any(|&c| c >= n) {
        return Err(Error::InvalidFamily(
            "Prüfer code must have n - 2 entries in 0..n",
        ));
    }
    let mut remaining = vec![1usize; n];
    for &c in code {
        remaining[c] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| remaining[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &c in code {
        let Reverse(leaf) = leaves.pop().expect("a tree always has a leaf");
        edges.push((leaf, c));
        remaining[c] -= 1;
        if remaining[c] == 1 {
            leaves.push(Reverse(c));
        }
    }
    let Reverse(u) = leaves.pop().expect("two vertices remain");
    let Reverse(v) = leaves.pop().expect("two vertices remain");
    edges.push((u, v));
    Graph::new(n, &edges)
}

pub fn random_tree(n: usize, rng: &mut SplitMix64) -> Graph {
    let code: Vec<usize> = (0..n.saturating_sub(2))
        .map(|_| rng.next_below(n as u64) as usize)
        .collect();
    prufer_to_tree(n, &code).expect("generated code is well formed")
}

/// One unconditioned G(n, p) draw; pairs visited in lexicographic order.
pub fn gnp(n: usize, p: f64, rng: &mut SplitMix64) -> Graph {
    let mut e = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.next_f64() < p {
                e.push((u, v));
            }
        }
    }
    Graph::from_canonical(n, e)
}

pub fn gnp_connected(n: usize, p: f64, rng: &mut SplitMix64) -> Result<Graph> {
    for _ in 0..GNP_MAX_ATTEMPTS {
        let g = gnp(n, p, rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    Err(Error::ConnectivityRetryExhausted(GNP_MAX_ATTEMPTS))
}

/// Random composition of `n` into clique orders, then their disjoint union.
pub fn random_clique_union(n: usize, rng: &mut SplitMix64) -> Graph {
    let mut sizes = Vec::new();
    let mut left = n;
    while left > 0 {
        let s = rng.next_in(1, left);
        sizes.push(s);
        left -= s;
    }
    generate(&FamilySpec::CliqueUnion { sizes }).expect("sizes are positive")
}
