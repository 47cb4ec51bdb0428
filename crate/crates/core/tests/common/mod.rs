//! Brute-force oracles shared by the integration tests. They enumerate
//! candidates directly and share no search code with the library.

#![allow(dead_code)]

use qfw::graph::Graph;
use qfw::table::BinTable;

/// Every injective map `0..k -> 0..n`, in lexicographic order.
pub fn injections(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for v in 0..n {
            if !cur.contains(&v) {
                cur.push(v);
                go(k, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(k, n, &mut Vec::new(), &mut out);
    }
    out
}

pub fn is_induced_embedding(s: &Graph, t: &Graph, f: &[usize]) -> bool {
    (0..s.n()).all(|u| (0..s.n()).all(|v| u == v || s.adjacent(u, v) == t.adjacent(f[u], f[v])))
}

pub fn brute_embeddings(s: &Graph, t: &Graph) -> Vec<Vec<usize>> {
    injections(s.n(), t.n()).into_iter().filter(|f| is_induced_embedding(s, t, f)).collect()
}

pub fn is_table_embedding(s: &BinTable, t: &BinTable, f: &[usize]) -> bool {
    let n = s.size();
    (0..n).all(|x| (0..n).all(|y| f[s.op(x, y)] == t.op(f[x], f[y])))
}

/// Decodes a Prüfer sequence into the edge list of a labelled tree.
pub fn prufer_decode(seq: &[usize]) -> Graph {
    let n = seq.len() + 2;
    let mut degree = vec![1usize; n];
    for &x in seq {
        degree[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (0..n).find(|&v| degree[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        degree[leaf] -= 1;
        degree[x] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, &edges).unwrap()
}

pub fn has_complete_vertex(g: &Graph) -> bool {
    (0..g.n()).any(|v| (0..g.n()).all(|u| u == v || g.adjacent(u, v)))
}

/// All labelled trees on `n >= 2` vertices without a complete vertex.
pub fn brute_ct_trees(n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut seq = vec![0usize; n - 2];
    loop {
        let t = prufer_decode(&seq);
        if !has_complete_vertex(&t) {
            out.push(t);
        }
        let Some(i) = (0..seq.len()).rev().find(|&i| seq[i] + 1 < n) else { break };
        seq[i] += 1;
        for x in &mut seq[i + 1..] {
            *x = 0;
        }
    }
    out
}
