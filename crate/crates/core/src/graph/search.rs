use std::ops::ControlFlow;

use super::{bit, Graph, GraphMap};

/// Backtracking induced-embedding search.
///
/// Source vertices are assigned in `order`; target candidates are tried in
/// increasing index. A candidate `c` for source vertex `u` must be unused, must
/// have at least as many neighbours and non-neighbours as `u`, and its
/// neighbourhood restricted to the already-used targets must equal the image of
/// `u`'s already-assigned neighbours (one mask comparison).
struct EmbeddingSearch<'a> {
    source: &'a Graph,
    target: &'a Graph,
    order: Vec<usize>,
    image: Vec<usize>,
    used: u64,
}

impl<'a> EmbeddingSearch<'a> {
    fn new(source: &'a Graph, target: &'a Graph, order: Vec<usize>) -> Self {
        EmbeddingSearch { source, target, order, image: vec![usize::MAX; source.n()], used: 0 }
    }

    fn run<F>(&mut self, depth: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        if depth == self.order.len() {
            return visit(&self.image);
        }
        let u = self.order[depth];
        let deg = self.source.degree(u);
        let non_deg = self.source.n() - 1 - deg;

        let mut required = 0u64;
        for &w in &self.order[..depth] {
            if self.source.adjacent(u, w) {
                required |= bit(self.image[w]);
            }
        }

        let mut free = self.target.all_vertices_mask() & !self.used;
        while free != 0 {
            let c = free.trailing_zeros() as usize;
            free &= free - 1;
            let t_deg = self.target.degree(c);
            if t_deg < deg || self.target.n() - 1 - t_deg < non_deg {
                continue;
            }
            if self.target.neighbours(c) & self.used != required {
                continue;
            }
            self.image[u] = c;
            self.used |= bit(c);
            let flow = self.run(depth + 1, visit);
            self.used &= !bit(c);
            self.image[u] = usize::MAX;
            flow?;
        }
        ControlFlow::Continue(())
    }
}

/// Assignment order for counting: grow along edges, highest degree first.
fn connected_degree_order(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = 0u64;
    while order.len() < n {
        let next = (0..n)
            .filter(|&v| placed & bit(v) == 0)
            .max_by_key(|&v| {
                let links = (g.neighbours(v) & placed).count_ones();
                (links, g.degree(v), std::cmp::Reverse(v))
            })
            .expect("an unplaced vertex remains");
        placed |= bit(next);
        order.push(next);
    }
    order
}

/// Lexicographically least induced embedding of `source` into `target`, if any.
pub fn find_graph_embedding(source: &Graph, target: &Graph) -> Option<GraphMap> {
    if source.n() > target.n() {
        return None;
    }
    let mut found = None;
    let mut search = EmbeddingSearch::new(source, target, (0..source.n()).collect());
    let _ = search.run(0, &mut |image: &[usize]| {
        found = Some(GraphMap::new(image.to_vec()));
        ControlFlow::Break(())
    });
    found
}

/// Exact number of induced embeddings.
pub fn count_graph_embeddings(source: &Graph, target: &Graph) -> u64 {
    if source.n() > target.n() {
        return 0;
    }
    let mut count = 0u64;
    let mut search = EmbeddingSearch::new(source, target, connected_degree_order(source));
    let _ = search.run(0, &mut |_: &[usize]| {
        count += 1;
        ControlFlow::Continue(())
    });
    count
}

/// All automorphisms in lexicographic order of their image arrays.
pub fn graph_automorphisms(g: &Graph) -> Vec<GraphMap> {
    let mut out = Vec::new();
    let mut search = EmbeddingSearch::new(g, g, (0..g.n()).collect());
    let _ = search.run(0, &mut |image: &[usize]| {
        out.push(GraphMap::new(image.to_vec()));
        ControlFlow::Continue(())
    });
    out
}

/// Isomorphism test: equal order and size plus a bijective induced embedding.
pub fn is_isomorphic(a: &Graph, b: &Graph) -> Option<GraphMap> {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return None;
    }
    find_graph_embedding(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::check_graph_embedding;

    /// Plain enumeration of all injections, independent of the pruned search.
    fn brute_force_embeddings(s: &Graph, t: &Graph) -> Vec<GraphMap> {
        fn rec(s: &Graph, t: &Graph, cur: &mut Vec<usize>, out: &mut Vec<GraphMap>) {
            if cur.len() == s.n() {
                let m = GraphMap::new(cur.clone());
                if check_graph_embedding(s, t, &m).unwrap() {
                    out.push(m);
                }
                return;
            }
            for c in 0..t.n() {
                if !cur.contains(&c) {
                    cur.push(c);
                    rec(s, t, cur, out);
                    cur.pop();
                }
            }
        }
        let mut out = Vec::new();
        rec(s, t, &mut Vec::new(), &mut out);
        out
    }

    #[test]
    fn p4_into_p5() {
        let (p4, p5) = (Graph::path(4), Graph::path(5));
        let oracle = brute_force_embeddings(&p4, &p5);
        assert_eq!(oracle.len(), 4);
        assert_eq!(oracle[0].image, vec![0, 1, 2, 3]);
        assert_eq!(find_graph_embedding(&p4, &p5).unwrap().image, vec![0, 1, 2, 3]);
        assert_eq!(count_graph_embeddings(&p4, &p5), 4);
        assert_eq!(find_graph_embedding(&p5, &p4), None);
        assert_eq!(count_graph_embeddings(&Graph::path(1), &p4), 4);
    }

    #[test]
    fn no_induced_p4_in_c4() {
        let (p4, c4) = (Graph::path(4), Graph::cycle(4));
        assert!(brute_force_embeddings(&p4, &c4).is_empty());
        assert_eq!(find_graph_embedding(&p4, &c4), None);
        assert_eq!(count_graph_embeddings(&p4, &c4), 0);
    }

    #[test]
    fn automorphism_examples() {
        let p4 = graph_automorphisms(&Graph::path(4));
        assert_eq!(p4, vec![GraphMap::identity(4), GraphMap::new(vec![3, 2, 1, 0])]);
        assert_eq!(p4, brute_force_embeddings(&Graph::path(4), &Graph::path(4)));
        let t7 = graph_automorphisms(&Graph::rigid_seven());
        assert_eq!(t7, vec![GraphMap::identity(7)]);
        assert_eq!(t7, brute_force_embeddings(&Graph::rigid_seven(), &Graph::rigid_seven()));
        assert_eq!(graph_automorphisms(&Graph::empty(1).unwrap()).len(), 1);
        assert_eq!(graph_automorphisms(&Graph::cycle(5)).len(), 10);
    }

    #[test]
    fn search_agrees_with_brute_force_on_small_graphs() {
        // every graph on 4 vertices into a few fixed targets
        let targets = [Graph::path(5), Graph::cycle(5), Graph::rigid_seven().induced(&[0, 1, 2, 3, 6])];
        for code in 0u32..64 {
            let pairs = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];
            let edges: Vec<_> =
                pairs.iter().enumerate().filter(|(i, _)| code & (1 << i) != 0).map(|(_, e)| *e).collect();
            let s = Graph::new(4, &edges).unwrap();
            for t in &targets {
                let oracle = brute_force_embeddings(&s, t);
                assert_eq!(count_graph_embeddings(&s, t), oracle.len() as u64, "{s:?} -> {t:?}");
                assert_eq!(find_graph_embedding(&s, t), oracle.first().cloned(), "{s:?} -> {t:?}");
            }
        }
    }
}
