//! Finite simple graphs on `0..n`, the combinatorial-tree and no-complete-vertex
//! predicates, induced embeddings, and tree generators.
//!
//! Adjacency is kept as one `u64` bitmask per vertex, so graphs are limited to
//! [`MAX_VERTICES`] vertices. That is far beyond what the exhaustive searches in
//! this crate can handle anyway.

mod search;
mod trees;

use std::fmt;

use thiserror::Error;

pub use search::{count_graph_embeddings, find_graph_embedding, graph_automorphisms, is_isomorphic};
pub use trees::{
    decode_pruefer, enumerate_ct_trees, enumerate_labeled_trees, random_ct_tree, random_ct_tree_with, MAX_TREE_RETRIES,
};

pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most {MAX_VERTICES} are supported")]
    TooManyVertices(usize),
    #[error("edge ({0}, {1}) refers to a vertex outside 0..{2}")]
    VertexOutOfRange(usize, usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("map entry {index} is {value}, target has only {target_n} vertices")]
    OutOfRange { index: usize, value: usize, target_n: usize },
    #[error("map has length {got}, source has {expected} vertices")]
    LengthMismatch { expected: usize, got: usize },
    #[error("every tree on {0} vertices has a complete vertex; need n >= 4")]
    InvalidSize(usize),
    #[error("gave up after {0} rejected samples")]
    RetryLimit(usize),
}

/// Finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        Ok(Graph { n, adj: vec![0; n] })
    }

    /// Builds a graph from unordered pairs; `(u, v)` and `(v, u)` name the same edge.
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if g.adjacent(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.adj[u] |= bit(v);
            g.adj[v] |= bit(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Self {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::new(n, &edges).expect("path on at most 64 vertices")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((0, n - 1));
        Graph::new(n, &edges).expect("cycle on at most 64 vertices")
    }

    /// Star `K_{1,leaves}` with center 0.
    pub fn star(leaves: usize) -> Self {
        let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
        Graph::new(leaves + 1, &edges).expect("star on at most 64 vertices")
    }

    /// The 7-vertex tree with edges 01, 12, 23, 34, 45, 26: vertex 2 has three
    /// branches of lengths 2, 3 and 1, so the tree has no nontrivial automorphism.
    pub fn rigid_seven() -> Self {
        Graph::new(7, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (2, 6)]).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    /// Neighbour bitmask of `v`.
    #[inline]
    pub fn neighbours(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            let mut higher = self.adj[u] & !((bit(u) << 1).wrapping_sub(1));
            while higher != 0 {
                let v = higher.trailing_zeros() as usize;
                out.push((u, v));
                higher &= higher - 1;
            }
        }
        out
    }

    pub fn all_vertices_mask(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            bit(self.n) - 1
        }
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return false;
        }
        let mut seen = bit(0);
        let mut frontier = bit(0);
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == self.all_vertices_mask()
    }

    /// Relabels vertices: vertex `v` of `self` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let edges: Vec<_> = self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::new(self.n, &edges).expect("relabelling by a permutation preserves validity")
    }

    /// Induced subgraph on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Graph::new(vertices.len(), &edges).expect("induced subgraph is a valid graph")
    }

    /// Short deterministic identifier such as `5:01.12.23.34`.
    pub fn digest(&self) -> String {
        let body: Vec<String> = self
            .edges()
            .into_iter()
            .map(|(u, v)| if self.n <= 10 { format!("{u}{v}") } else { format!("{u}-{v}") })
            .collect();
        format!("{}:{}", self.n, body.join("."))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", self.digest())
    }
}

/// A vertex map `source -> target`, stored as its image array.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GraphMap {
    pub image: Vec<usize>,
}

impl GraphMap {
    pub fn new(image: Vec<usize>) -> Self {
        GraphMap { image }
    }

    pub fn identity(n: usize) -> Self {
        GraphMap { image: (0..n).collect() }
    }

    #[inline]
    pub fn apply(&self, v: usize) -> usize {
        self.image[v]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = std::collections::HashSet::with_capacity(self.image.len());
        self.image.iter().all(|x| seen.insert(*x))
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn compose(&self, first: &GraphMap) -> GraphMap {
        GraphMap { image: first.image.iter().map(|&v| self.image[v]).collect() }
    }

    /// Inverse of a bijection on `0..len`.
    pub fn inverse(&self) -> Option<GraphMap> {
        let n = self.image.len();
        let mut inv = vec![usize::MAX; n];
        for (v, &w) in self.image.iter().enumerate() {
            if w >= n || inv[w] != usize::MAX {
                return None;
            }
            inv[w] = v;
        }
        Some(GraphMap { image: inv })
    }
}

impl fmt::Display for GraphMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Connected and acyclic. The empty graph is not a tree.
pub fn is_combinatorial_tree(g: &Graph) -> bool {
    g.n() >= 1 && g.edge_count() == g.n() - 1 && g.is_connected()
}

/// Every vertex has a non-neighbour other than itself, i.e. no vertex has degree `n - 1`.
pub fn has_no_complete_vertex(g: &Graph) -> bool {
    g.n() >= 2 && (0..g.n()).all(|v| g.degree(v) < g.n() - 1)
}

/// Induced-embedding check: injective, and `{u,v}` is an edge of `source`
/// exactly when `{m(u), m(v)}` is an edge of `target`.
pub fn check_graph_embedding(source: &Graph, target: &Graph, map: &GraphMap) -> Result<bool, GraphError> {
    if map.image.len() != source.n() {
        return Err(GraphError::LengthMismatch { expected: source.n(), got: map.image.len() });
    }
    if let Some((index, &value)) = map.image.iter().enumerate().find(|(_, &w)| w >= target.n()) {
        return Err(GraphError::OutOfRange { index, value, target_n: target.n() });
    }
    if !map.is_injective() {
        return Ok(false);
    }
    for u in 0..source.n() {
        for v in (u + 1)..source.n() {
            if source.adjacent(u, v) != target.adjacent(map.apply(u), map.apply(v)) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
