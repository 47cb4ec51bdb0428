//! Injective homomorphism search between finite algebras given by one or more
//! binary operation tables (same signature on both sides).
//!
//! Every assignment `x -> y` is closed under the operations before branching:
//! whenever `a` and `b` are both mapped, `a * b` is forced to map to
//! `img(a) * img(b)` in every table. A forced value that clashes with an
//! existing assignment, or that would break injectivity, kills the branch.
//! Forced values are consequences of the partial map, so scanning source
//! elements in increasing order and candidates in increasing order visits the
//! embeddings in lexicographic order of their image arrays.

use std::ops::ControlFlow;

use crate::table::BinTable;

const UNSET: usize = usize::MAX;

struct Search<'a> {
    src: &'a [&'a BinTable],
    dst: &'a [&'a BinTable],
    image: Vec<usize>,
    preimage: Vec<usize>,
    trail: Vec<usize>,
    queue: Vec<usize>,
}

impl<'a> Search<'a> {
    fn new(src: &'a [&'a BinTable], dst: &'a [&'a BinTable]) -> Self {
        let n = src.first().map_or(0, |t| t.size());
        let m = dst.first().map_or(0, |t| t.size());
        Search {
            src,
            dst,
            image: vec![UNSET; n],
            preimage: vec![UNSET; m],
            trail: Vec::with_capacity(n),
            queue: Vec::new(),
        }
    }

    fn force(&mut self, x: usize, y: usize) -> bool {
        match self.image[x] {
            UNSET if self.preimage[y] == UNSET => {
                self.image[x] = y;
                self.preimage[y] = x;
                self.trail.push(x);
                self.queue.push(x);
                true
            }
            UNSET => false,
            current => current == y,
        }
    }

    fn assign(&mut self, x: usize, y: usize) -> bool {
        self.queue.clear();
        if !self.force(x, y) {
            return false;
        }
        let (src, dst) = (self.src, self.dst);
        while let Some(a) = self.queue.pop() {
            let ya = self.image[a];
            let mut i = 0;
            while i < self.trail.len() {
                let b = self.trail[i];
                let yb = self.image[b];
                for (s, d) in src.iter().zip(dst.iter()) {
                    if !self.force(s.op(a, b), d.op(ya, yb)) || !self.force(s.op(b, a), d.op(yb, ya)) {
                        return false;
                    }
                }
                i += 1;
            }
        }
        true
    }

    fn undo(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let x = self.trail.pop().unwrap();
            self.preimage[self.image[x]] = UNSET;
            self.image[x] = UNSET;
        }
    }

    fn run<F>(&mut self, from: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        let Some(x) = (from..self.image.len()).find(|&x| self.image[x] == UNSET) else {
            return visit(&self.image);
        };
        for y in 0..self.preimage.len() {
            if self.preimage[y] != UNSET {
                continue;
            }
            let mark = self.trail.len();
            if self.assign(x, y) {
                let flow = self.run(x + 1, visit);
                self.undo(mark);
                flow?;
            } else {
                self.undo(mark);
            }
        }
        ControlFlow::Continue(())
    }
}

fn check_signature(src: &[&BinTable], dst: &[&BinTable]) {
    assert_eq!(src.len(), dst.len(), "source and target signatures differ");
    assert!(src.windows(2).all(|w| w[0].size() == w[1].size()), "source tables differ in size");
    assert!(dst.windows(2).all(|w| w[0].size() == w[1].size()), "target tables differ in size");
}

/// Calls `visit` on every injective homomorphism, in lexicographic order.
pub fn for_each_embedding<F>(src: &[&BinTable], dst: &[&BinTable], mut visit: F)
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    check_signature(src, dst);
    let n = src.first().map_or(0, |t| t.size());
    let m = dst.first().map_or(0, |t| t.size());
    if n > m {
        return;
    }
    let mut search = Search::new(src, dst);
    let _ = search.run(0, &mut visit);
}

/// Lexicographically least injective homomorphism.
pub fn first_embedding(src: &[&BinTable], dst: &[&BinTable]) -> Option<Vec<usize>> {
    let mut found = None;
    for_each_embedding(src, dst, |image| {
        found = Some(image.to_vec());
        ControlFlow::Break(())
    });
    found
}

pub fn all_embeddings(src: &[&BinTable], dst: &[&BinTable]) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_embedding(src, dst, |image| {
        out.push(image.to_vec());
        ControlFlow::Continue(())
    });
    out
}

/// Bijections of `0..size` preserving every table.
pub fn automorphisms(tables: &[&BinTable]) -> Vec<Vec<usize>> {
    all_embeddings(tables, tables)
}

/// Injective and operation-preserving in every table.
pub fn is_embedding(src: &[&BinTable], dst: &[&BinTable], image: &[usize]) -> bool {
    check_signature(src, dst);
    let n = src.first().map_or(0, |t| t.size());
    let m = dst.first().map_or(0, |t| t.size());
    if image.len() != n || image.iter().any(|&y| y >= m) {
        return false;
    }
    let mut seen = vec![false; m];
    for &y in image {
        if std::mem::replace(&mut seen[y], true) {
            return false;
        }
    }
    src.iter().zip(dst.iter()).all(|(s, d)| s.preserved_by(d, image))
}
