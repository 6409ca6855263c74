//! Simple undirected graphs and the degree machinery built on them.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
///
/// Edges are stored canonically as `(u, v)` with `u < v`, sorted and
/// deduplicated, so two graphs with the same edge set compare equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one; self-loops are rejected.
    pub fn new(n: usize, edge_list: &[(usize, usize)]) -> Result<Self> {
        if n == 0 {
            return Err(Error::NoVertices);
        }
        let mut edges = Vec::with_capacity(edge_list.len());
        for &(u, v) in edge_list {
            if u >= n || v >= n {
                return Err(Error::IndexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            edges.push(if u < v { (u, v) } else { (v, u) });
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self::from_canonical(n, edges))
    }

    /// `edges` must already be canonical: sorted, deduplicated, `u < v < n`.
    pub(crate) fn from_canonical(n: usize, edges: Vec<(usize, usize)>) -> Self {
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Self { n, edges, adj }
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        Self::new(n, &[])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        DegreeSequence(d)
    }

    /// Edge present iff absent here.
    pub fn complement(&self) -> Graph {
        let n = self.n;
        let mut edges = Vec::with_capacity(n * (n - 1) / 2 - self.m());
        for u in 0..n {
            for v in u + 1..n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_canonical(n, edges)
    }

    /// Vertex-disjoint union; the vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let off = self.n;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|&(u, v)| (u + off, v + off)));
        Graph::from_canonical(self.n + other.n, edges)
    }

    /// Component index per vertex plus the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut comp = vec![usize::MAX; self.n];
        let mut count = 0;
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            comp[start] = count;
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adj[u] {
                    if comp[w] == usize::MAX {
                        comp[w] = count;
                        queue.push_back(w);
                    }
                }
            }
            count += 1;
        }
        (comp, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() == 1
    }

    /// Side assignment (`false`/`true`) of a proper 2-colouring, if any.
    /// Each component's lowest vertex goes on the `false` side.
    pub fn two_coloring(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        let mut queue = VecDeque::new();
        for start in 0..self.n {
            if color[start].is_some() {
                continue;
            }
            color[start] = Some(false);
            queue.push_back(start);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap_or(false);
                for &w in &self.adj[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap_or(false)).collect())
    }

    /// First Zagreb index, the sum of squared degrees.
    pub fn first_zagreb(&self) -> u64 {
        self.adj.iter().map(|a| (a.len() * a.len()) as u64).sum()
    }

    pub fn classify(&self) -> GraphClass {
        GraphClass::of(self)
    }
}

/// Degrees sorted non-increasing.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeSequence(Vec<usize>);

impl DegreeSequence {
    /// Validates a sequence: non-increasing, entries at most `len - 1`, even sum.
    /// Graphicality is not checked.
    pub fn new(degrees: Vec<usize>) -> Result<Self> {
        let n = degrees.len();
        if n == 0 {
            return Err(Error::InvalidDegreeSequence("empty"));
        }
        if degrees.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDegreeSequence("not non-increasing"));
        }
        if degrees[0] > n - 1 {
            return Err(Error::InvalidDegreeSequence("degree exceeds n - 1"));
        }
        if degrees.iter().sum::<usize>() % 2 != 0 {
            return Err(Error::InvalidDegreeSequence("odd degree sum"));
        }
        Ok(Self(degrees))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> usize {
        self.0[0]
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn conjugate(&self) -> ConjugateSequence {
        ConjugateSequence(conjugate_partition(&self.0, self.0.len()))
    }
}

impl core::ops::Index<usize> for DegreeSequence {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// `conj[i] = |{ j : d_j >= i + 1 }|`, same length as the degree sequence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConjugateSequence(Vec<usize>);

impl ConjugateSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl core::ops::Index<usize> for ConjugateSequence {
    type Output = usize;
    fn index(&self, i: usize) -> &usize {
        &self.0[i]
    }
}

/// Conjugate of a partition, truncated or zero-padded to `len` parts.
pub fn conjugate_partition(parts: &[usize], len: usize) -> Vec<usize> {
    (1..=len)
        .map(|i| parts.iter().filter(|&&d| d >= i).count())
        .collect()
}

/// Structural facts used to predict the equality cases of the bounds.
///
/// Recognition goes through degrees and components only, never isomorphism.
/// `K_1` is a star, a complete graph and a clique union at once; `K_2` is
/// both a star and a complete graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphClass {
    pub component_count: usize,
    pub is_connected: bool,
    pub is_tree: bool,
    pub is_star: bool,
    pub is_complete: bool,
    pub is_complete_minus_edge: bool,
    pub is_clique_union: bool,
    pub is_bipartite: bool,
    /// Side of each vertex when bipartite.
    pub bipartition: Option<Vec<bool>>,
    pub is_balanced_complete_bipartite: bool,
}

impl GraphClass {
    pub fn of(g: &Graph) -> Self {
        let n = g.n();
        let m = g.m();
        let (comp, component_count) = g.components();
        let is_connected = component_count == 1;
        let is_tree = is_connected && m == n - 1;

        let deg: Vec<usize> = (0..n).map(|v| g.degree(v)).collect();
        let full = deg.iter().filter(|&&d| d == n - 1).count();
        let is_complete = full == n;
        // n = 2 needs its own case: both endpoints have degree n - 1 = 1
        let is_star = match n {
            1 => true,
            2 => m == 1,
            _ => full == 1 && deg.iter().filter(|&&d| d == 1).count() == n - 1,
        };
        let is_complete_minus_edge =
            n >= 3 && full == n - 2 && deg.iter().filter(|&&d| d == n - 2).count() == 2;

        let mut comp_size = vec![0usize; component_count];
        for &c in &comp {
            comp_size[c] += 1;
        }
        let is_clique_union = (0..n).all(|v| deg[v] + 1 == comp_size[comp[v]]);

        let bipartition = g.two_coloring();
        let is_bipartite = bipartition.is_some();
        let is_balanced_complete_bipartite = match &bipartition {
            Some(side) if n.is_multiple_of(2) => {
                let left = side.iter().filter(|&&s| !s).count();
                left == n / 2 && m == n * n / 4
            }
            _ => false,
        };

        Self {
            component_count,
            is_connected,
            is_tree,
            is_star,
            is_complete,
            is_complete_minus_edge,
            is_clique_union,
            is_bipartite,
            bipartition,
            is_balanced_complete_bipartite,
        }
    }
}
