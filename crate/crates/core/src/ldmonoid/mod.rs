//! LD-monoids (algebras satisfying Σ) and the conjugation LD-monoid of a
//! finite group.
//!
//! An LD-monoid has operations `∘` and `∗` with
//!
//! ```text
//! 1. a∘(b∘c) = (a∘b)∘c
//! 2. (a∘b)∗c = a∗(b∗c)
//! 3. a∗(b∘c) = (a∗b)∘(a∗c)
//! 4. (a∗b)∘a = a∘b
//! ```
//!
//! Tables use `table[a][b] = a∘b`.

pub mod groups;

use std::fmt;

use thiserror::Error;

use crate::morphism;
use crate::table::{BinTable, TableError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LdError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("not a group: {0}")]
    NotAGroup(GroupViolation),
    #[error("not an LD-monoid: {0}")]
    NotLdMonoid(LdViolation),
    #[error("composition and star tables differ in size ({0} vs {1})")]
    SizeMismatch(usize, usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GroupViolation {
    Empty,
    NotAssociative { a: usize, b: usize, c: usize },
    NoIdentity,
    NoInverse { a: usize },
}

impl fmt::Display for GroupViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            GroupViolation::Empty => f.write_str("empty table"),
            GroupViolation::NotAssociative { a, b, c } => write!(f, "not associative at ({a}, {b}, {c})"),
            GroupViolation::NoIdentity => f.write_str("no two-sided identity"),
            GroupViolation::NoInverse { a } => write!(f, "element {a} has no inverse"),
        }
    }
}

/// Identity element and inverse table of a validated group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupInfo {
    pub identity: usize,
    pub inverse: Vec<usize>,
}

pub fn check_group(t: &BinTable) -> Result<GroupInfo, GroupViolation> {
    let n = t.size();
    if n == 0 {
        return Err(GroupViolation::Empty);
    }
    for a in 0..n {
        for b in 0..n {
            let ab = t.op(a, b);
            for c in 0..n {
                if t.op(ab, c) != t.op(a, t.op(b, c)) {
                    return Err(GroupViolation::NotAssociative { a, b, c });
                }
            }
        }
    }
    let identity =
        (0..n).find(|&e| (0..n).all(|x| t.op(e, x) == x && t.op(x, e) == x)).ok_or(GroupViolation::NoIdentity)?;
    let mut inverse = Vec::with_capacity(n);
    for a in 0..n {
        let inv = (0..n)
            .find(|&b| t.op(a, b) == identity && t.op(b, a) == identity)
            .ok_or(GroupViolation::NoInverse { a })?;
        inverse.push(inv);
    }
    Ok(GroupInfo { identity, inverse })
}

/// Which of the four Σ identities failed, with the first witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LdViolation {
    pub identity: u8,
    pub a: usize,
    pub b: usize,
    pub c: Option<usize>,
}

impl fmt::Display for LdViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.c {
            Some(c) => write!(f, "identity {} fails at ({}, {}, {})", self.identity, self.a, self.b, c),
            None => write!(f, "identity {} fails at ({}, {})", self.identity, self.a, self.b),
        }
    }
}

type TripleLaw<'a> = &'a dyn Fn(usize, usize, usize) -> bool;

/// Checks the four identities in order; triples for the first three, pairs for the last.
pub fn check_ld_monoid(comp: &BinTable, star: &BinTable) -> Result<(), LdViolation> {
    let n = comp.size();
    assert_eq!(n, star.size(), "composition and star tables differ in size");
    let o = |a, b| comp.op(a, b);
    let s = |a, b| star.op(a, b);
    let triple_laws: [(u8, TripleLaw<'_>); 3] = [
        (1, &|a, b, c| o(a, o(b, c)) == o(o(a, b), c)),
        (2, &|a, b, c| s(o(a, b), c) == s(a, s(b, c))),
        (3, &|a, b, c| s(a, o(b, c)) == o(s(a, b), s(a, c))),
    ];
    for (identity, law) in triple_laws {
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !law(a, b, c) {
                        return Err(LdViolation { identity, a, b, c: Some(c) });
                    }
                }
            }
        }
    }
    for a in 0..n {
        for b in 0..n {
            if o(s(a, b), a) != o(a, b) {
                return Err(LdViolation { identity: 4, a, b, c: None });
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LdMonoid {
    comp: BinTable,
    star: BinTable,
}

impl LdMonoid {
    pub fn new(comp: BinTable, star: BinTable) -> Result<Self, LdError> {
        if comp.size() != star.size() {
            return Err(LdError::SizeMismatch(comp.size(), star.size()));
        }
        check_ld_monoid(&comp, &star).map_err(LdError::NotLdMonoid)?;
        Ok(LdMonoid { comp, star })
    }

    pub fn size(&self) -> usize {
        self.comp.size()
    }

    pub fn comp(&self) -> &BinTable {
        &self.comp
    }

    pub fn star(&self) -> &BinTable {
        &self.star
    }
}

/// `∘` is the group operation and `a ∗ b = a∘b∘a⁻¹`.
pub fn conjugation_ld_monoid(g: &BinTable) -> Result<LdMonoid, LdError> {
    let info = check_group(g).map_err(LdError::NotAGroup)?;
    let star = BinTable::from_fn(g.size(), |a, b| g.op(g.op(a, b), info.inverse[a]))?;
    LdMonoid::new(g.clone(), star)
}

/// Bijections preserving both operations, in lexicographic order.
pub fn ld_automorphisms(m: &LdMonoid) -> Vec<Vec<usize>> {
    morphism::automorphisms(&[m.comp(), m.star()])
}

/// Bijections preserving the group operation, in lexicographic order.
pub fn group_automorphisms(g: &BinTable) -> Vec<Vec<usize>> {
    morphism::automorphisms(&[g])
}
