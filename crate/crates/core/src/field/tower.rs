//! Tower presentations `K_0 ⊂ K_1 ⊂ ... ⊂ K_n` over a tree, the homomorphism
//! induced by a graph embedding, and recovery of the embedding from vertex
//! images.
//!
//! Level `k` adjoins a transcendental `t_k` with its `p_{k+1}`-power root tower
//! `s_{k,l}^{p_{k+1}} = s_{k,l-1}` (`s_{k,0} = t_k`, `l <= root_depth`), then one
//! root `r_a` of `x^2 - (t_k - a)` for each `a ∈ H_k`. `H_0` holds the edge sums
//! `v_u + v_v` and `H_{k+1} = {r_a : a ∈ H_k}`, so index `i` at every level
//! descends from edge `i` in sorted edge order.

use std::fmt;

use super::phigh::is_p0_high_form;
use super::{prime_schedule, FieldError, K0Ctx, K0Elem};
use crate::graph::{check_graph_embedding, is_combinatorial_tree, Graph, GraphMap};

/// Generator `index` of `H_level`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenHandle {
    pub level: usize,
    pub index: usize,
}

impl fmt::Display for GenHandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.level == 0 {
            write!(f, "h_0_{}", self.index)
        } else {
            write!(f, "r_{}_{}", self.level, self.index)
        }
    }
}

/// `root^2 = t_k - radicand`, with `root ∈ H_{k+1}` and `radicand ∈ H_k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RootRelation {
    pub root: GenHandle,
    pub radicand: GenHandle,
}

/// Data added at level `k`: the prime `p_{k+1}`, the symbol `t_k`, and one
/// square-root relation per element of `H_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerLevel {
    pub k: usize,
    pub prime: u64,
    pub relations: Vec<RootRelation>,
}

impl TowerLevel {
    pub fn t_symbol(&self) -> String {
        format!("t_{}", self.k)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerPresentation {
    base: Graph,
    depth: usize,
    root_depth: u32,
    ctx: K0Ctx,
    primes: Vec<u64>,
    edges: Vec<(usize, usize)>,
    h0: Vec<K0Elem>,
    levels: Vec<TowerLevel>,
}

/// Builds levels `0..depth` over the tree `t` in the given characteristic.
pub fn build_tower(
    t: &Graph,
    depth: usize,
    root_depth: u32,
    characteristic: u64,
) -> Result<TowerPresentation, FieldError> {
    let ctx = K0Ctx::new(characteristic)?;
    if !is_combinatorial_tree(t) {
        return Err(FieldError::NotATree);
    }
    let primes: Vec<u64> = prime_schedule(characteristic).take(depth + 1).collect();
    let edges = t.edges();
    let h0 = edges.iter().map(|&(u, v)| K0Elem::var(ctx, u as u32) + K0Elem::var(ctx, v as u32)).collect();
    let levels = (0..depth)
        .map(|k| TowerLevel {
            k,
            prime: primes[k + 1],
            relations: (0..edges.len())
                .map(|i| RootRelation {
                    root: GenHandle { level: k + 1, index: i },
                    radicand: GenHandle { level: k, index: i },
                })
                .collect(),
        })
        .collect();
    Ok(TowerPresentation { base: t.clone(), depth, root_depth, ctx, primes, edges, h0, levels })
}

impl TowerPresentation {
    pub fn base_graph(&self) -> &Graph {
        &self.base
    }

    pub fn depth(&self) -> usize {
        self.depth
    }

    pub fn root_depth(&self) -> u32 {
        self.root_depth
    }

    pub fn ctx(&self) -> K0Ctx {
        self.ctx
    }

    /// `p_0, ..., p_depth`.
    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn h0(&self) -> &[K0Elem] {
        &self.h0
    }

    pub fn levels(&self) -> &[TowerLevel] {
        &self.levels
    }

    pub fn level(&self, k: usize) -> &TowerLevel {
        &self.levels[k]
    }

    /// `|H_k|` for `k <= depth`.
    pub fn h_len(&self, k: usize) -> usize {
        assert!(k <= self.depth, "level {k} beyond depth {}", self.depth);
        if k == 0 {
            self.h0.len()
        } else {
            self.levels[k - 1].relations.len()
        }
    }

    pub fn generators(&self, k: usize) -> Vec<GenHandle> {
        (0..self.h_len(k)).map(|index| GenHandle { level: k, index }).collect()
    }

    /// The radicand `a` of a root generator `r_a`.
    pub fn radicand_of(&self, h: GenHandle) -> Option<GenHandle> {
        let level = self.levels.get(h.level.checked_sub(1)?)?;
        level.relations.iter().find(|r| r.root == h).map(|r| r.radicand)
    }

    /// The root `r_a` adjoined for `a ∈ H_k`, `k < depth`.
    pub fn root_of(&self, a: GenHandle) -> Option<GenHandle> {
        let level = self.levels.get(a.level)?;
        level.relations.iter().find(|r| r.radicand == a).map(|r| r.root)
    }

    /// `(l, p_{k+1})` for the materialized roots `s_{k,l}`, `1 <= l <= root_depth`.
    pub fn root_tower(&self, k: usize) -> Vec<(u32, u64)> {
        (1..=self.root_depth).map(|l| (l, self.levels[k].prime)).collect()
    }

    fn compatible(&self, other: &TowerPresentation) -> bool {
        self.depth == other.depth
            && self.root_depth == other.root_depth
            && self.ctx == other.ctx
            && self.primes == other.primes
    }

    fn radicand_expr(&self, a: GenHandle) -> String {
        if a.level == 0 {
            self.h0[a.index].to_string()
        } else {
            a.to_string()
        }
    }
}

impl fmt::Display for TowerPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "tower {} {} {}", self.depth, self.root_depth, self.ctx.characteristic())?;
        for level in &self.levels {
            let k = level.k;
            writeln!(f, "level {k} {} {} {}", level.prime, level.t_symbol(), self.h_len(k))?;
            for (l, p) in self.root_tower(k) {
                if l == 1 {
                    writeln!(f, "s_{k}_{l}^{p} = t_{k}")?;
                } else {
                    writeln!(f, "s_{k}_{l}^{p} = s_{k}_{}", l - 1)?;
                }
            }
            for rel in &level.relations {
                writeln!(f, "{}^2 = t_{k} - ({})", rel.root, self.radicand_expr(rel.radicand))?;
            }
        }
        Ok(())
    }
}

/// The homomorphism `φ` induced by a graph embedding: `v ↦ v_{f(v)}` on `K0`,
/// `t_k ↦ t_k`, and `r_a ↦ r_{φ(a)}`.
#[derive(Clone, Debug)]
pub struct TowerHom {
    pub source: TowerPresentation,
    pub target: TowerPresentation,
    pub vertex_map: GraphMap,
    /// `level_maps[k][i]` is the index in `H_k(target)` of `φ(H_k(source)[i])`.
    pub level_maps: Vec<Vec<usize>>,
}

impl TowerHom {
    /// `φ(v_u) = v_{f(u)}` for every source vertex `u`.
    pub fn vertex_images(&self) -> Vec<K0Elem> {
        let ctx = self.target.ctx();
        self.vertex_map.image.iter().map(|&w| K0Elem::var(ctx, w as u32)).collect()
    }

    /// `φ` on `K0(source)`.
    pub fn apply_k0(&self, e: &K0Elem) -> K0Elem {
        e.rename_vars(|v| self.vertex_map.apply(v as usize) as u32)
    }

    pub fn map_generator(&self, h: GenHandle) -> GenHandle {
        GenHandle { level: h.level, index: self.level_maps[h.level][h.index] }
    }

    /// `φ(t_k) = t_k`.
    pub fn map_t(&self, k: usize) -> usize {
        k
    }
}

/// Builds and validates `φ` level by level.
pub fn induced_hom(f: &GraphMap, src: &TowerPresentation, dst: &TowerPresentation) -> Result<TowerHom, FieldError> {
    if !src.compatible(dst) {
        return Err(FieldError::TowerMismatch);
    }
    if !check_graph_embedding(&src.base, &dst.base, f).unwrap_or(false) {
        return Err(FieldError::NotAnEmbedding);
    }
    let rename = |v: u32| f.apply(v as usize) as u32;
    let mut level0 = Vec::with_capacity(src.h0.len());
    for (i, a) in src.h0.iter().enumerate() {
        let image = a.rename_vars(rename);
        let j =
            dst.h0.iter().position(|b| *b == image).ok_or(FieldError::GeneratorNotPreserved { level: 0, index: i })?;
        level0.push(j);
    }
    let mut level_maps = vec![level0];
    for k in 1..=src.depth {
        let mut map = Vec::with_capacity(src.h_len(k));
        for (i, h) in src.generators(k).into_iter().enumerate() {
            let missing = FieldError::GeneratorNotPreserved { level: k, index: i };
            let a = src.radicand_of(h).ok_or(missing.clone())?;
            let phi_a = GenHandle { level: k - 1, index: level_maps[k - 1][a.index] };
            map.push(dst.root_of(phi_a).ok_or(missing)?.index);
        }
        level_maps.push(map);
    }
    Ok(TowerHom { source: src.clone(), target: dst.clone(), vertex_map: f.clone(), level_maps })
}

/// `(u, v)` with `u < v` if `w = v_u + v_v` for an edge `{u, v}` of `t`.
pub fn recover_edge(w: &K0Elem, t: &Graph) -> Option<(usize, usize)> {
    let ctx = w.ctx();
    t.edges().into_iter().find(|&(u, v)| *w == K0Elem::var(ctx, u as u32) + K0Elem::var(ctx, v as u32))
}

/// Reads off `g(u) = u'` from `images[u] = v_{u'}` and validates it.
///
/// A zero image, or a scaled monomial whose coefficient is not `±1`, fails the
/// p-high gate; any other image that is not a variable of `t` is rejected as
/// not a variable. Edge sums are then matched against the edges of `t`, and
/// the resulting map is checked as an induced embedding.
pub fn recover_graph_from_hom(images: &[K0Elem], s: &Graph, t: &Graph) -> Result<GraphMap, FieldError> {
    if !is_combinatorial_tree(s) {
        return Err(FieldError::NotATree);
    }
    if images.len() != s.n() {
        return Err(FieldError::LengthMismatch { expected: s.n(), got: images.len() });
    }
    let mut g = Vec::with_capacity(s.n());
    for (vertex, e) in images.iter().enumerate() {
        if e.is_zero() {
            return Err(FieldError::NotPHigh { vertex });
        }
        match e.as_variable() {
            Some(x) if (x as usize) < t.n() => g.push(x as usize),
            _ if e.as_scaled_monomial().is_some() && !is_p0_high_form(e)? => {
                return Err(FieldError::NotPHigh { vertex })
            }
            _ => return Err(FieldError::NotAVariable { vertex }),
        }
    }
    for (u, v) in s.edges() {
        if recover_edge(&(&images[u] + &images[v]), t).is_none() {
            return Err(FieldError::EdgeNotPreserved { u, v });
        }
    }
    let g = GraphMap::new(g);
    if !check_graph_embedding(s, t, &g)? {
        return Err(FieldError::NotEmbedding);
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;

    fn p(n: usize) -> Graph {
        Graph::path(n)
    }

    #[test]
    fn p4_depth_one() {
        let tower = build_tower(&p(4), 1, 2, 0).unwrap();
        let ctx = tower.ctx();
        let v = |i| K0Elem::var(ctx, i);
        assert_eq!(tower.h0(), &[v(0) + v(1), v(1) + v(2), v(2) + v(3)]);
        assert_eq!(tower.h_len(1), 3);
        assert_eq!(tower.primes(), &[3, 5]);
        assert_eq!(
            tower.to_string(),
            "tower 1 2 0\n\
             level 0 5 t_0 3\n\
             s_0_1^5 = t_0\n\
             s_0_2^5 = s_0_1\n\
             r_1_0^2 = t_0 - (v0 + v1)\n\
             r_1_1^2 = t_0 - (v1 + v2)\n\
             r_1_2^2 = t_0 - (v2 + v3)\n"
        );
    }

    #[test]
    fn build_errors() {
        assert_eq!(build_tower(&Graph::empty(4).unwrap(), 1, 2, 0), Err(FieldError::NotATree));
        assert_eq!(build_tower(&p(4), 1, 2, 2), Err(FieldError::BadCharacteristic(2)));
        let t = build_tower(&p(5), 3, 1, 5).unwrap();
        assert_eq!(t.primes(), &[3, 7, 11, 13]);
    }

    #[test]
    fn induced_hom_identity_into_longer_path() {
        let (src, dst) = (build_tower(&p(4), 2, 2, 0).unwrap(), build_tower(&p(5), 2, 2, 0).unwrap());
        let hom = induced_hom(&GraphMap::identity(4), &src, &dst).unwrap();
        let ctx = src.ctx();
        let e = K0Elem::var(ctx, 2) + K0Elem::var(ctx, 3);
        assert_eq!(hom.apply_k0(&e), e);
        assert!(dst.h0().contains(&hom.apply_k0(&e)));
        assert_eq!(hom.level_maps, vec![vec![0, 1, 2]; 3]);
        assert_eq!(hom.map_generator(GenHandle { level: 2, index: 1 }), GenHandle { level: 2, index: 1 });
    }

    #[test]
    fn induced_hom_reversal_permutes_generators() {
        let t = build_tower(&p(4), 1, 2, 0).unwrap();
        let hom = induced_hom(&GraphMap::new(vec![3, 2, 1, 0]), &t, &t).unwrap();
        assert_eq!(hom.level_maps, vec![vec![2, 1, 0], vec![2, 1, 0]]);
    }

    #[test]
    fn induced_hom_errors() {
        let (src, dst) = (build_tower(&p(4), 1, 2, 0).unwrap(), build_tower(&p(5), 1, 2, 0).unwrap());
        assert_eq!(induced_hom(&GraphMap::new(vec![0, 1, 3, 4]), &src, &dst).unwrap_err(), FieldError::NotAnEmbedding);
        let deeper = build_tower(&p(5), 2, 2, 0).unwrap();
        assert_eq!(induced_hom(&GraphMap::identity(4), &src, &deeper).unwrap_err(), FieldError::TowerMismatch);
    }

    #[test]
    fn recover_edge_examples() {
        let ctx = K0Ctx::default();
        let v = |i| K0Elem::var(ctx, i);
        assert_eq!(recover_edge(&(v(1) + v(2)), &p(4)), Some((1, 2)));
        assert_eq!(recover_edge(&(v(1) + v(1)), &p(4)), None);
        assert_eq!(recover_edge(&(v(0).pow(2).unwrap() + v(1)), &p(4)), None);
        assert_eq!(recover_edge(&(v(0) + v(2)), &p(4)), None);
    }

    #[test]
    fn recover_graph_round_trip_and_errors() {
        let (s, t) = (p(4), p(5));
        let f = GraphMap::new(vec![1, 2, 3, 4]);
        let (src, dst) = (build_tower(&s, 1, 2, 0).unwrap(), build_tower(&t, 1, 2, 0).unwrap());
        let hom = induced_hom(&f, &src, &dst).unwrap();
        let images = hom.vertex_images();
        assert_eq!(recover_graph_from_hom(&images, &s, &t), Ok(f));

        let ctx = src.ctx();
        let v = |i| K0Elem::var(ctx, i);
        let mut bad = images.clone();
        bad[2] = v(0) + v(1);
        assert_eq!(recover_graph_from_hom(&bad, &s, &t), Err(FieldError::NotAVariable { vertex: 2 }));
        bad[2] = K0Elem::integer(ctx, 2) * v(3);
        assert_eq!(recover_graph_from_hom(&bad, &s, &t), Err(FieldError::NotPHigh { vertex: 2 }));
        bad[2] = K0Elem::zero(ctx);
        assert_eq!(recover_graph_from_hom(&bad, &s, &t), Err(FieldError::NotPHigh { vertex: 2 }));
        bad[2] = -v(3);
        assert_eq!(recover_graph_from_hom(&bad, &s, &t), Err(FieldError::NotAVariable { vertex: 2 }));
        // a non-edge image: 0 -> 0, 1 -> 2 breaks the edge {0, 1}
        let gap = vec![v(0), v(2), v(3), v(4)];
        assert_eq!(recover_graph_from_hom(&gap, &s, &t), Err(FieldError::EdgeNotPreserved { u: 0, v: 1 }));
        assert_eq!(recover_graph_from_hom(&images, &Graph::cycle(4), &t), Err(FieldError::NotATree));
    }

    #[test]
    fn recover_rejects_folding_map() {
        // every edge sum is an edge of the target, but the map is not injective
        let (s, t) = (p(3), p(4));
        let ctx = K0Ctx::default();
        let v = |i| K0Elem::var(ctx, i);
        let images = vec![v(0), v(1), v(0)];
        assert_eq!(recover_graph_from_hom(&images, &s, &t), Err(FieldError::NotEmbedding));
    }
}
