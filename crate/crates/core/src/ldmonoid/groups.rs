//! Cayley tables of a few small groups. Element 0 is always the identity.

use std::collections::BTreeSet;

use crate::table::BinTable;

pub fn cyclic(n: usize) -> BinTable {
    BinTable::from_fn(n, |a, b| (a + b) % n).expect("cyclic table in range")
}

fn compose(a: &[usize], b: &[usize]) -> Vec<usize> {
    b.iter().map(|&i| a[i]).collect()
}

/// Cayley table of a permutation group given by its elements, composing
/// `(a∘b)(i) = a(b(i))`. Elements are sorted, so the identity comes first.
pub fn permutation_group(mut elements: Vec<Vec<usize>>) -> (BinTable, Vec<Vec<usize>>) {
    elements.sort();
    elements.dedup();
    let table = BinTable::from_fn(elements.len(), |a, b| {
        let c = compose(&elements[a], &elements[b]);
        elements.binary_search(&c).expect("element set is closed under composition")
    })
    .expect("indices in range");
    (table, elements)
}

/// Closure of `generators` under composition.
pub fn generated(degree: usize, generators: &[Vec<usize>]) -> (BinTable, Vec<Vec<usize>>) {
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut frontier = vec![(0..degree).collect::<Vec<_>>()];
    while let Some(p) = frontier.pop() {
        if !seen.insert(p.clone()) {
            continue;
        }
        for g in generators {
            frontier.push(compose(g, &p));
        }
    }
    permutation_group(seen.into_iter().collect())
}

/// `S_n` on points `0..n`, with its elements as permutation arrays.
pub fn symmetric(n: usize) -> (BinTable, Vec<Vec<usize>>) {
    let mut gens = Vec::new();
    if n >= 2 {
        let mut swap: Vec<usize> = (0..n).collect();
        swap.swap(0, 1);
        let rotate: Vec<usize> = (0..n).map(|i| (i + 1) % n).collect();
        gens.push(swap);
        gens.push(rotate);
    }
    generated(n, &gens)
}

/// Symmetries of a square acting on its corners.
pub fn dihedral4() -> BinTable {
    generated(4, &[vec![1, 2, 3, 0], vec![0, 3, 2, 1]]).0
}

/// `Q_8`: index `2u + s` is `(-1)^s` times unit `u` of `1, i, j, k`.
pub fn quaternion() -> BinTable {
    // unit products: (sign, unit) for units 1, i, j, k
    const MUL: [[(usize, usize); 4]; 4] = [
        [(0, 0), (0, 1), (0, 2), (0, 3)],
        [(0, 1), (1, 0), (0, 3), (1, 2)],
        [(0, 2), (1, 3), (1, 0), (0, 1)],
        [(0, 3), (0, 2), (1, 1), (1, 0)],
    ];
    BinTable::from_fn(8, |a, b| {
        let (sign, unit) = MUL[a / 2][b / 2];
        2 * unit + (a % 2 + b % 2 + sign) % 2
    })
    .expect("quaternion table in range")
}

/// S_3, Z/2..Z/8, D_4 and Q_8.
pub fn library() -> Vec<(String, BinTable)> {
    let mut out = vec![("S3".to_string(), symmetric(3).0)];
    for n in 2..=8 {
        out.push((format!("Z{n}"), cyclic(n)));
    }
    out.push(("D4".to_string(), dihedral4()));
    out.push(("Q8".to_string(), quaternion()));
    out
}
