//! Finite quandles and keis, and the graph-to-quandle construction.
//!
//! For a graph `T` on `0..n` the quandle `Q_T` has elements `2v + i` for
//! `v < n`, `i ∈ {0, 1}`, with
//!
//! ```text
//! (u,i) * (v,j) = (v, j)     if u = v or u ~ v
//!                 (v, 1 - j) otherwise
//! ```
//!
//! [`vert`] and [`bit`] recover the two coordinates of a coded element.

mod maps;

use std::fmt;

use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::morphism;
use crate::table::{BinTable, TableError};

pub use maps::{
    decompose_automorphism, find_quandle_embedding, involution, lift_embedding, quandle_automorphisms,
    quandle_isomorphism, recover_graph_embedding, QuandleMap,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum QuandleError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("not a quandle: {0}")]
    Axiom(QuandleViolation),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph map is not an induced embedding")]
    InvalidEmbedding,
    #[error("map is not a quandle embedding between the given quandles")]
    InvalidQuandleMap,
    #[error("images of ({vertex},0) and ({vertex},1) lie over different vertices")]
    FibreSplit { vertex: usize },
    #[error("recovered vertex map is not an induced embedding")]
    NotEmbedding,
    #[error("vertex {0} is outside the graph")]
    VertexOutOfRange(usize),
    #[error("automorphism does not factor as an involution after a lifted graph automorphism")]
    DecompositionFailure,
}

/// First failure found by [`check_quandle_axioms`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuandleViolation {
    /// `x*(y*z) != (x*y)*(x*z)`
    SelfDistributivity { x: usize, y: usize, z: usize },
    /// `x*y1 = x*y2` with `y1 < y2`, so left translation by `x` is not a bijection.
    LeftTranslationNotBijective { x: usize, y1: usize, y2: usize },
    /// `x*x != x`
    NotIdempotent { x: usize },
}

impl fmt::Display for QuandleViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            QuandleViolation::SelfDistributivity { x, y, z } => {
                write!(f, "axiom (a) fails at x={x} y={y} z={z}")
            }
            QuandleViolation::LeftTranslationNotBijective { x, y1, y2 } => {
                write!(f, "axiom (b) fails: {x}*{y1} = {x}*{y2}")
            }
            QuandleViolation::NotIdempotent { x } => write!(f, "axiom (c) fails at x={x}"),
        }
    }
}

/// Checks self-distributivity, bijective left translations and idempotence,
/// in that order, each scanned lexicographically.
pub fn check_quandle_axioms(t: &BinTable) -> Result<(), QuandleViolation> {
    let n = t.size();
    for x in 0..n {
        for y in 0..n {
            let xy = t.op(x, y);
            for z in 0..n {
                if t.op(x, t.op(y, z)) != t.op(xy, t.op(x, z)) {
                    return Err(QuandleViolation::SelfDistributivity { x, y, z });
                }
            }
        }
    }
    for x in 0..n {
        let mut first = vec![usize::MAX; n];
        for y in 0..n {
            let z = t.op(x, y);
            if first[z] != usize::MAX {
                return Err(QuandleViolation::LeftTranslationNotBijective { x, y1: first[z], y2: y });
            }
            first[z] = y;
        }
    }
    if let Some(x) = (0..n).find(|&x| t.op(x, x) != x) {
        return Err(QuandleViolation::NotIdempotent { x });
    }
    Ok(())
}

/// A validated finite quandle.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quandle {
    table: BinTable,
}

impl Quandle {
    pub fn new(table: BinTable) -> Result<Self, QuandleError> {
        check_quandle_axioms(&table).map_err(QuandleError::Axiom)?;
        Ok(Quandle { table })
    }

    pub fn from_entries(size: usize, entries: Vec<usize>) -> Result<Self, QuandleError> {
        Quandle::new(BinTable::new(size, entries)?)
    }

    /// `x * y = y`.
    pub fn trivial(size: usize) -> Self {
        Quandle { table: BinTable::from_fn(size, |_, y| y).unwrap() }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.table.size()
    }

    #[inline]
    pub fn op(&self, x: usize, y: usize) -> usize {
        self.table.op(x, y)
    }

    pub fn table(&self) -> &BinTable {
        &self.table
    }
}

impl fmt::Debug for Quandle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Quandle(size={})", self.size())
    }
}

/// `x * (x * y) = y` for all pairs.
pub fn check_kei(q: &Quandle) -> bool {
    (0..q.size()).all(|x| (0..q.size()).all(|y| q.op(x, q.op(x, y)) == y))
}

/// Vertex coordinate of a coded element.
#[inline]
pub fn vert(e: usize) -> usize {
    e / 2
}

/// Bit coordinate of a coded element.
#[inline]
pub fn bit(e: usize) -> usize {
    e % 2
}

#[inline]
pub fn code(v: usize, i: usize) -> usize {
    2 * v + i
}

/// The quandle `Q_T` on `2 * T.n()` elements.
pub fn build_quandle(t: &Graph) -> Quandle {
    let table = BinTable::from_fn(2 * t.n(), |x, y| {
        let (u, v) = (vert(x), vert(y));
        if u == v || t.adjacent(u, v) {
            y
        } else {
            code(v, 1 - bit(y))
        }
    })
    .expect("entries stay below 2n");
    Quandle { table }
}

/// Whether `image` is an injective quandle homomorphism `source -> target`.
pub fn is_quandle_embedding(source: &Quandle, target: &Quandle, image: &[usize]) -> bool {
    morphism::is_embedding(&[source.table()], &[target.table()], image)
}
