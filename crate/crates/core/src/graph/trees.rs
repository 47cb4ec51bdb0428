//! Labelled trees from Prüfer sequences.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{has_no_complete_vertex, Graph, GraphError, MAX_VERTICES};

/// Rejection-sampling budget for [`random_ct_tree`].
pub const MAX_TREE_RETRIES: usize = 1000;

/// Decodes a Prüfer sequence of length `n - 2` into the labelled tree on `n` vertices.
///
/// `n` is `seq.len() + 2`; the one- and zero-vertex cases are not reachable
/// through this function.
pub fn decode_pruefer(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, x));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).expect("Prüfer decoding yields a simple graph")
}

/// Uniform labelled tree on `n >= 4` vertices with no complete vertex, drawing from `rng`.
pub fn random_ct_tree_with<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if n < 4 {
        return Err(GraphError::InvalidSize(n));
    }
    if n > MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n));
    }
    for _ in 0..MAX_TREE_RETRIES {
        let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
        let tree = decode_pruefer(&seq);
        if has_no_complete_vertex(&tree) {
            return Ok(tree);
        }
    }
    Err(GraphError::RetryLimit(MAX_TREE_RETRIES))
}

/// Deterministic in `seed`; see [`random_ct_tree_with`].
pub fn random_ct_tree(n: usize, seed: u64) -> Result<Graph, GraphError> {
    random_ct_tree_with(n, &mut ChaCha8Rng::seed_from_u64(seed))
}

/// All `n^(n-2)` labelled trees on `n >= 1` vertices, in lexicographic order
/// of their Prüfer sequences.
pub fn enumerate_labeled_trees(n: usize) -> impl Iterator<Item = Graph> {
    let mut seq = vec![0usize; n.saturating_sub(2)];
    let mut single = n == 1;
    let mut done = n < 2;
    std::iter::from_fn(move || {
        if std::mem::take(&mut single) {
            return Some(Graph::empty(1).expect("one vertex"));
        }
        if done {
            return None;
        }
        let tree = decode_pruefer(&seq);
        // odometer increment, last position fastest
        done = true;
        for slot in seq.iter_mut().rev() {
            *slot += 1;
            if *slot < n {
                done = false;
                break;
            }
            *slot = 0;
        }
        Some(tree)
    })
}

/// The trees of [`enumerate_labeled_trees`] without a complete vertex; empty for `n < 4`.
pub fn enumerate_ct_trees(n: usize) -> impl Iterator<Item = Graph> {
    enumerate_labeled_trees(n).filter(move |t| n >= 4 && has_no_complete_vertex(t))
}
