//! Quandle maps: lifting graph embeddings, recovering them, the involutions
//! `I_A`, and the decomposition of automorphisms of `Q_T`.

use std::fmt;

use super::{bit, build_quandle, code, is_quandle_embedding, vert, Quandle, QuandleError};
use crate::graph::{check_graph_embedding, has_no_complete_vertex, Graph, GraphMap};
use crate::morphism;

/// An element map between quandles, stored as its image array in the `2v + i` coding.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuandleMap {
    pub image: Vec<usize>,
}

impl QuandleMap {
    pub fn new(image: Vec<usize>) -> Self {
        QuandleMap { image }
    }

    pub fn identity(size: usize) -> Self {
        QuandleMap { image: (0..size).collect() }
    }

    #[inline]
    pub fn apply(&self, e: usize) -> usize {
        self.image[e]
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &QuandleMap) -> QuandleMap {
        QuandleMap { image: first.image.iter().map(|&e| self.image[e]).collect() }
    }

    /// Vertex component of the image of `(v, i)`.
    pub fn vertex_part(&self, v: usize, i: usize) -> usize {
        vert(self.image[code(v, i)])
    }

    /// Bit component of the image of `(v, i)`.
    pub fn bit_part(&self, v: usize, i: usize) -> usize {
        bit(self.image[code(v, i)])
    }
}

impl fmt::Display for QuandleMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.image.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// `(v, i) -> (f(v), i)`.
pub fn lift_embedding(source: &Graph, target: &Graph, f: &GraphMap) -> Result<QuandleMap, QuandleError> {
    if !check_graph_embedding(source, target, f)? {
        return Err(QuandleError::InvalidEmbedding);
    }
    let image = (0..2 * source.n()).map(|e| code(f.apply(vert(e)), bit(e))).collect();
    Ok(QuandleMap { image })
}

/// Recovers the graph embedding `v -> vert(ρ(2v))` from a quandle embedding
/// `ρ: Q_S -> Q_T`, first checking that `(v,0)` and `(v,1)` land over the same
/// vertex for every `v`.
pub fn recover_graph_embedding(rho: &QuandleMap, source: &Graph, target: &Graph) -> Result<GraphMap, QuandleError> {
    let (qs, qt) = (build_quandle(source), build_quandle(target));
    if !is_quandle_embedding(&qs, &qt, &rho.image) {
        return Err(QuandleError::InvalidQuandleMap);
    }
    if let Some(vertex) = (0..source.n()).find(|&v| rho.vertex_part(v, 0) != rho.vertex_part(v, 1)) {
        return Err(QuandleError::FibreSplit { vertex });
    }
    let h = GraphMap::new((0..source.n()).map(|v| rho.vertex_part(v, 0)).collect());
    if !check_graph_embedding(source, target, &h)? {
        return Err(QuandleError::NotEmbedding);
    }
    Ok(h)
}

/// Lexicographically least quandle embedding, if any.
pub fn find_quandle_embedding(source: &Quandle, target: &Quandle) -> Option<QuandleMap> {
    morphism::first_embedding(&[source.table()], &[target.table()]).map(QuandleMap::new)
}

/// A quandle isomorphism, found as a bijective embedding between equal-size quandles.
pub fn quandle_isomorphism(a: &Quandle, b: &Quandle) -> Option<QuandleMap> {
    if a.size() != b.size() {
        return None;
    }
    find_quandle_embedding(a, b)
}

/// All automorphisms in lexicographic order.
pub fn quandle_automorphisms(q: &Quandle) -> Vec<QuandleMap> {
    morphism::automorphisms(&[q.table()]).into_iter().map(QuandleMap::new).collect()
}

/// `I_A`: keeps the bit over vertices in `a`, flips it elsewhere.
pub fn involution(t: &Graph, a: &[usize]) -> Result<QuandleMap, QuandleError> {
    let mut keep = vec![false; t.n()];
    for &v in a {
        *keep.get_mut(v).ok_or(QuandleError::VertexOutOfRange(v))? = true;
    }
    let image = (0..2 * t.n()).map(|e| if keep[vert(e)] { e } else { code(vert(e), 1 - bit(e)) }).collect();
    Ok(QuandleMap { image })
}

/// Splits an automorphism `ρ` of `Q_T` as `ρ(v, j) = I_A(h(v), j)`.
///
/// `h(v) = vert(ρ(2v))` and `A` is the set of image vertices `h(v)` over which
/// the bit is preserved; the result satisfies `ρ = I_A ∘ lift(h)` exactly.
pub fn decompose_automorphism(rho: &QuandleMap, t: &Graph) -> Result<(GraphMap, Vec<usize>), QuandleError> {
    if !has_no_complete_vertex(t) {
        return Err(QuandleError::DecompositionFailure);
    }
    let h = recover_graph_embedding(rho, t, t)?;
    let mut a: Vec<usize> = (0..t.n()).filter(|&v| rho.bit_part(v, 0) == 0).map(|v| h.apply(v)).collect();
    a.sort_unstable();
    let rebuilt = involution(t, &a)?.compose(&lift_embedding(t, t, &h)?);
    if &rebuilt != rho {
        return Err(QuandleError::DecompositionFailure);
    }
    Ok((h, a))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{find_graph_embedding, graph_automorphisms};

    fn p4() -> Graph {
        Graph::path(4)
    }

    #[test]
    fn lift_identity_and_reversal() {
        let theta = lift_embedding(&p4(), &Graph::path(5), &GraphMap::identity(4)).unwrap();
        assert_eq!(theta, QuandleMap::identity(8));
        let rev = lift_embedding(&p4(), &p4(), &GraphMap::new(vec![3, 2, 1, 0])).unwrap();
        assert_eq!(rev.image, vec![6, 7, 4, 5, 2, 3, 0, 1]);
        assert!(is_quandle_embedding(&build_quandle(&p4()), &build_quandle(&p4()), &rev.image));
        assert_eq!(
            lift_embedding(&p4(), &Graph::cycle(4), &GraphMap::identity(4)),
            Err(QuandleError::InvalidEmbedding)
        );
    }

    #[test]
    fn recover_round_trip() {
        let (s, t) = (p4(), Graph::path(5));
        let f = find_graph_embedding(&s, &t).unwrap();
        let theta = lift_embedding(&s, &t, &f).unwrap();
        assert_eq!(recover_graph_embedding(&theta, &s, &t).unwrap(), f);
    }

    #[test]
    fn recover_from_involution_is_identity() {
        let i0 = involution(&p4(), &[]).unwrap();
        assert_eq!(i0.image, vec![1, 0, 3, 2, 5, 4, 7, 6]);
        assert_eq!(recover_graph_embedding(&i0, &p4(), &p4()).unwrap(), GraphMap::identity(4));
    }

    #[test]
    fn recover_from_searched_embedding() {
        let (s, t) = (p4(), Graph::path(5));
        let rho = find_quandle_embedding(&build_quandle(&s), &build_quandle(&t)).unwrap();
        let h = recover_graph_embedding(&rho, &s, &t).unwrap();
        assert!(check_graph_embedding(&s, &t, &h).unwrap());
    }

    #[test]
    fn fibre_split_detected_outside_no_complete_vertex() {
        // Q of a single edge is the trivial quandle on 4 elements, so any
        // permutation is an automorphism, including ones that split fibres.
        let s = Graph::path(2);
        let q = build_quandle(&s);
        let split =
            quandle_automorphisms(&q).into_iter().find(|r| (0..2).any(|v| r.vertex_part(v, 0) != r.vertex_part(v, 1)));
        let rho = split.expect("trivial quandle has fibre-splitting automorphisms");
        assert!(matches!(recover_graph_embedding(&rho, &s, &s), Err(QuandleError::FibreSplit { .. })));
    }

    #[test]
    fn quandle_search_examples() {
        let (q4, q5) = (build_quandle(&p4()), build_quandle(&Graph::path(5)));
        assert!(find_quandle_embedding(&q4, &q5).is_some());
        assert!(find_quandle_embedding(&q5, &q4).is_none());
        assert_eq!(find_quandle_embedding(&q4, &q4), Some(QuandleMap::identity(8)));
    }

    #[test]
    fn involution_examples() {
        let all: Vec<usize> = (0..4).collect();
        assert_eq!(involution(&p4(), &all).unwrap(), QuandleMap::identity(8));
        let i = involution(&p4(), &[1, 3]).unwrap();
        assert_eq!(i.compose(&i), QuandleMap::identity(8));
        assert_eq!(involution(&p4(), &[4]), Err(QuandleError::VertexOutOfRange(4)));
    }

    #[test]
    fn automorphism_counts() {
        assert_eq!(quandle_automorphisms(&build_quandle(&p4())).len(), 32);
        assert_eq!(quandle_automorphisms(&build_quandle(&Graph::rigid_seven())).len(), 128);
        assert_eq!(quandle_automorphisms(&Quandle::trivial(4)).len(), 24);
    }

    #[test]
    fn decomposition_examples() {
        let t = p4();
        let i01 = involution(&t, &[0, 1]).unwrap();
        assert_eq!(decompose_automorphism(&i01, &t).unwrap(), (GraphMap::identity(4), vec![0, 1]));
        let rev = lift_embedding(&t, &t, &GraphMap::new(vec![3, 2, 1, 0])).unwrap();
        assert_eq!(decompose_automorphism(&rev, &t).unwrap(), (GraphMap::new(vec![3, 2, 1, 0]), vec![0, 1, 2, 3]));
        // A set is indexed by image vertices: flip the bit over h(0) = 3 only.
        let mixed = involution(&t, &[0, 1, 2]).unwrap().compose(&rev);
        assert_eq!(decompose_automorphism(&mixed, &t).unwrap(), (GraphMap::new(vec![3, 2, 1, 0]), vec![0, 1, 2]));
        let graph_auts = graph_automorphisms(&t);
        for rho in quandle_automorphisms(&build_quandle(&t)) {
            let (h, _) = decompose_automorphism(&rho, &t).unwrap();
            assert!(graph_auts.contains(&h));
        }
    }
}
