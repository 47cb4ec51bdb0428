//! Seeded generators for campaign instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::field::{FracExponent, K0Ctx, K0Elem, Monomial, Poly};
use crate::graph::{has_no_complete_vertex, Graph, GraphError, GraphMap, MAX_TREE_RETRIES};

/// Stream `index` of the ChaCha generator seeded with `seed`.
pub fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index as u64);
    rng
}

/// A random connected induced subtree of `t` with at least 4 vertices and no
/// complete vertex, relabelled at random, together with its inclusion map.
/// Falls back to `t` itself with the identity after 100 failed draws.
pub fn random_sub_ct_tree<R: Rng>(t: &Graph, rng: &mut R) -> (Graph, GraphMap) {
    let n = t.n();
    if n >= 4 {
        for _ in 0..100 {
            let k = rng.gen_range(4..=n);
            let start = rng.gen_range(0..n);
            let mut chosen = vec![start];
            let mut mask = 1u64 << start;
            while chosen.len() < k {
                let frontier: Vec<usize> =
                    (0..n).filter(|&v| mask & (1 << v) == 0 && chosen.iter().any(|&u| t.adjacent(u, v))).collect();
                let v = *frontier.choose(rng).expect("a tree is connected");
                chosen.push(v);
                mask |= 1 << v;
            }
            chosen.shuffle(rng);
            let s = t.induced(&chosen);
            if has_no_complete_vertex(&s) {
                return (s, GraphMap::new(chosen));
            }
        }
    }
    (t.clone(), GraphMap::identity(n))
}

/// A graph on `n` vertices with independent fair-coin edges, redrawn until no
/// vertex is complete.
pub fn random_no_complete_vertex_graph<R: Rng>(n: usize, rng: &mut R) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(GraphError::InvalidSize(n));
    }
    for _ in 0..MAX_TREE_RETRIES {
        let edges: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|_| rng.gen_bool(0.5)).collect();
        let g = Graph::new(n, &edges)?;
        if has_no_complete_vertex(&g) {
            return Ok(g);
        }
    }
    Err(GraphError::RetryLimit(MAX_TREE_RETRIES))
}

fn random_poly<R: Rng>(ctx: K0Ctx, vars: u32, terms: usize, rng: &mut R) -> Poly {
    let s = ctx.scalars();
    let mut p = Poly::zero();
    for _ in 0..terms {
        let c = [-3, -2, -1, 1, 2, 3][rng.gen_range(0..6)];
        let mut pairs = Vec::new();
        for v in 0..vars {
            if rng.gen_bool(0.5) {
                pairs.push((v, FracExponent::new(rng.gen_range(-2..=2), rng.gen_range(0..=1), ctx.p0())));
            }
        }
        let m = Monomial::from_pairs(pairs);
        p = p.add(&Poly::term(m, s.from_i64(c)), s);
    }
    p
}

/// A random fraction over `v_0 .. v_{vars-1}`: one to three numerator terms,
/// one or two denominator terms, small integer coefficients and exponents
/// `m / p0^l` with `|m| <= 2`, `l <= 1`.
pub fn random_k0_elem<R: Rng>(ctx: K0Ctx, vars: u32, rng: &mut R) -> K0Elem {
    loop {
        let num = random_poly(ctx, vars, rng.gen_range(1..=3), rng);
        let den = random_poly(ctx, vars, rng.gen_range(1..=2), rng);
        if let Ok(e) = K0Elem::from_parts(ctx, num, den) {
            return e;
        }
    }
}
