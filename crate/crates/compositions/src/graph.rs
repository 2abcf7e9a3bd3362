//! Simple undirected graphs: family constructors, compositions of graphs
//! (disjoint union, wedge, bridge), deletion from a complete graph, and
//! the subset connectivity / badness predicates.
//!
//! Vertices are labeled 0..n-1. Canonical labelings per family: the path
//! is 0-1-...-(n-1), the cycle additionally closes (n-1)-0, the star has
//! center 0, the matching pairs (2i, 2i+1), the complete graph has all
//! pairs. Composition counts are label-invariant, so fixing labelings
//! only pins down test fixtures.

use std::collections::BTreeSet;

use crate::error::{Error, Result};

/// Simple undirected graph. Edges are stored normalized (u < v),
/// deduplicated, self-loop free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
}

/// Declarative description of a graph family instance.
#[derive(Debug, Clone)]
pub enum FamilySpec {
    /// Path on n >= 1 vertices.
    Path(usize),
    /// Cycle on n >= 3 vertices.
    Cycle(usize),
    /// Star on n >= 2 vertices: one center, n-1 leaves.
    Star(usize),
    /// Complete graph on n >= 1 vertices.
    Complete(usize),
    /// n disjoint edges on 2n vertices.
    Matching(usize),
    /// Arbitrary tree given by its edge list on n vertices.
    Tree { n: usize, edges: Vec<(usize, usize)> },
    /// Arbitrary edge list on n vertices.
    EdgeList { n: usize, edges: Vec<(usize, usize)> },
}

/// How two graphs are combined into one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeKind {
    /// Relabeled disjoint union.
    Disjoint,
    /// Identify one vertex of each graph (shared-vertex union).
    Wedge,
    /// Disjoint union plus a single connecting edge.
    Bridge,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for (u, v) in edges {
            if u == v {
                return Err(Error::InvalidEdgeList(format!("self-loop at {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::InvalidEdgeList(format!(
                    "edge {u}-{v} out of range for {n} vertices"
                )));
            }
            let e = (u.min(v), u.max(v));
            if !set.insert(e) {
                return Err(Error::InvalidEdgeList(format!("duplicate edge {}-{}", e.0, e.1)));
            }
        }
        Ok(Graph { n, edges: set })
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edges.contains(&(u.min(v), u.max(v)))
    }

    pub fn is_complete(&self) -> bool {
        self.edges.len() == self.n * (self.n - 1) / 2
    }

    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() == self.n - 1 && self.is_connected()
    }

    pub fn is_connected(&self) -> bool {
        let all: Vec<usize> = (0..self.n).collect();
        self.n > 0 && self.is_connected_subset(&all).unwrap_or(false)
    }

    /// True iff the subgraph induced by `subset` is connected.
    /// Singletons are connected. Errors on an empty subset.
    pub fn is_connected_subset(&self, subset: &[usize]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &v in subset {
            if v >= self.n {
                return Err(Error::InvalidEdgeList(format!("vertex {v} out of range")));
            }
        }
        let mut uf = UnionFind::new(subset.len());
        for i in 0..subset.len() {
            for j in i + 1..subset.len() {
                if self.has_edge(subset[i], subset[j]) {
                    uf.union(i, j);
                }
            }
        }
        Ok(uf.component_count() == 1)
    }

    /// True iff the complement of this graph restricted to `subset` is
    /// disconnected. `self` plays the role of the deleted graph G; a
    /// subset is bad exactly when it cannot be a connected block of
    /// K_N^{-G}. Singletons are never bad.
    pub fn is_bad_subset(&self, subset: &[usize]) -> Result<bool> {
        if subset.is_empty() {
            return Err(Error::EmptySubset);
        }
        let mut uf = UnionFind::new(subset.len());
        for i in 0..subset.len() {
            for j in i + 1..subset.len() {
                if !self.has_edge(subset[i], subset[j]) {
                    uf.union(i, j);
                }
            }
        }
        Ok(uf.component_count() > 1)
    }

    /// Bitmask variant of `is_bad_subset` for the oracle's subset walk.
    /// Requires n <= 64.
    pub(crate) fn is_bad_mask(&self, mask: u64) -> bool {
        let subset: Vec<usize> = (0..self.n).filter(|&v| mask >> v & 1 == 1).collect();
        if subset.len() < 2 {
            return false;
        }
        self.is_bad_subset(&subset).unwrap()
    }
}

/// Build the canonical labeled graph for a family instance.
pub fn build_family(spec: &FamilySpec) -> Result<Graph> {
    match spec {
        FamilySpec::Path(n) => {
            if *n < 1 {
                return Err(Error::InvalidFamily("path requires n >= 1".into()));
            }
            Graph::new(*n, (0..n - 1).map(|i| (i, i + 1)))
        }
        FamilySpec::Cycle(n) => {
            if *n < 3 {
                return Err(Error::InvalidFamily(format!("cycle requires n >= 3, got {n}")));
            }
            Graph::new(*n, (0..*n).map(|i| (i, (i + 1) % n)))
        }
        FamilySpec::Star(n) => {
            if *n < 2 {
                return Err(Error::InvalidFamily(format!("star requires n >= 2, got {n}")));
            }
            Graph::new(*n, (1..*n).map(|i| (0, i)))
        }
        FamilySpec::Complete(n) => {
            if *n < 1 {
                return Err(Error::InvalidFamily("complete requires n >= 1".into()));
            }
            Graph::new(*n, (0..*n).flat_map(|u| (u + 1..*n).map(move |v| (u, v))))
        }
        FamilySpec::Matching(n) => {
            if *n < 1 {
                return Err(Error::InvalidFamily("matching requires n >= 1".into()));
            }
            Graph::new(2 * n, (0..*n).map(|i| (2 * i, 2 * i + 1)))
        }
        FamilySpec::Tree { n, edges } => {
            let g = Graph::new(*n, edges.iter().copied())?;
            if !g.is_tree() {
                return Err(Error::InvalidTree(format!(
                    "{} vertices, {} edges, connected: {}",
                    g.vertex_count(),
                    g.edge_count(),
                    g.is_connected()
                )));
            }
            Ok(g)
        }
        FamilySpec::EdgeList { n, edges } => Graph::new(*n, edges.iter().copied()),
    }
}

/// Combine two graphs. Anchors are required for `Wedge` and `Bridge`
/// and ignored for `Disjoint`. The second graph's vertices are shifted
/// past the first's.
pub fn compose_graphs(
    kind: ComposeKind,
    g1: &Graph,
    g2: &Graph,
    a1: usize,
    a2: usize,
) -> Result<Graph> {
    let n1 = g1.vertex_count();
    let n2 = g2.vertex_count();
    if matches!(kind, ComposeKind::Wedge | ComposeKind::Bridge) {
        if a1 >= n1 {
            return Err(Error::InvalidAnchor { anchor: a1, n: n1 });
        }
        if a2 >= n2 {
            return Err(Error::InvalidAnchor { anchor: a2, n: n2 });
        }
    }
    match kind {
        ComposeKind::Disjoint => {
            let edges = g1
                .edges()
                .chain(g2.edges().map(|(u, v)| (u + n1, v + n1)));
            Graph::new(n1 + n2, edges)
        }
        ComposeKind::Bridge => {
            let edges = g1
                .edges()
                .chain(g2.edges().map(|(u, v)| (u + n1, v + n1)))
                .chain(std::iter::once((a1, a2 + n1)));
            Graph::new(n1 + n2, edges)
        }
        ComposeKind::Wedge => {
            // g2's anchor collapses onto g1's; remaining g2 vertices are
            // packed after g1's.
            let relabel = |v: usize| -> usize {
                if v == a2 {
                    a1
                } else if v < a2 {
                    n1 + v
                } else {
                    n1 + v - 1
                }
            };
            let edges = g1
                .edges()
                .chain(g2.edges().map(|(u, v)| (relabel(u), relabel(v))));
            Graph::new(n1 + n2 - 1, edges)
        }
    }
}

/// K_N^{-G}: the complete graph on `ambient` vertices minus the edges of
/// `g`, with `g` embedded on labels 0..|V(g)|-1.
pub fn delete_from_complete(ambient: usize, g: &Graph) -> Result<Graph> {
    if ambient < g.vertex_count() {
        return Err(Error::AmbientTooSmall {
            ambient,
            n: g.vertex_count(),
        });
    }
    let edges = (0..ambient)
        .flat_map(|u| (u + 1..ambient).map(move |v| (u, v)))
        .filter(|&(u, v)| !g.has_edge(u, v));
    Graph::new(ambient, edges)
}

/// Parse the edge-list file format: first non-comment line `n m`, then
/// m lines `u v` with 0-based labels. Blank lines and `#` comments are
/// ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .map(|l| l.trim())
        .filter(|l| !l.is_empty() && !l.starts_with('#'));
    let header = lines
        .next()
        .ok_or_else(|| Error::InvalidEdgeList("empty input".into()))?;
    let mut parts = header.split_whitespace();
    let n: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidEdgeList(format!("bad header line: {header:?}")))?;
    let m: usize = parts
        .next()
        .and_then(|s| s.parse().ok())
        .ok_or_else(|| Error::InvalidEdgeList(format!("bad header line: {header:?}")))?;
    let mut edges = Vec::with_capacity(m);
    for line in lines {
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidEdgeList(format!("bad edge line: {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or_else(|| Error::InvalidEdgeList(format!("bad edge line: {line:?}")))?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(Error::InvalidEdgeList(format!(
            "header declares {m} edges, found {}",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

/// Plain union-find with union by size and path halving.
#[derive(Debug, Clone)]
pub(crate) struct UnionFind {
    parent: Vec<usize>,
    size: Vec<usize>,
    components: usize,
}

impl UnionFind {
    pub fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
            size: vec![1; n],
            components: n,
        }
    }

    pub fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    pub fn union(&mut self, a: usize, b: usize) -> bool {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.components -= 1;
        true
    }

    pub fn component_count(&self) -> usize {
        self.components
    }
}
