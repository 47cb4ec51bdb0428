//! The base field `K0 = F(V)(V, p0)` and tower presentations over it.
//!
//! `F` is `Q` in characteristic 0 and `F_p` otherwise. Elements of `K0` are
//! fractions of Laurent polynomials in the vertex variables `v_i`, whose
//! exponents are rationals with `p0`-power denominators. Levels above `K0`
//! are kept as formal generator handles with the rewrite `r_a^2 = t_k - a`.

mod exponent;
mod k0;
mod phigh;
mod poly;
mod tower;

use thiserror::Error;

use crate::graph::GraphError;

pub use exponent::{FracExponent, Monomial, Var};
pub use k0::K0Elem;
pub use phigh::{
    classifier_oracle_pair, is_p0_high_form, is_t_high_form, iterated_root_oracle, p_root_oracle, stress_set, TTerm,
};
pub use poly::{Poly, Scalars};
pub use tower::{
    build_tower, induced_hom, recover_edge, recover_graph_from_hom, GenHandle, RootRelation, TowerHom, TowerLevel,
    TowerPresentation,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("characteristic {0} is not supported; use 0 or an odd prime")]
    BadCharacteristic(u64),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation needs a nonzero element")]
    ZeroElement,
    #[error("{0}-th roots are not taken in characteristic {0}")]
    RootOfCharacteristic(u64),
    #[error("base graph is not a combinatorial tree")]
    NotATree,
    #[error("vertex map is not an induced embedding of the base graphs")]
    NotAnEmbedding,
    #[error("towers differ in depth, root depth, characteristic or primes")]
    TowerMismatch,
    #[error("image of generator {index} at level {level} is not a generator of the target")]
    GeneratorNotPreserved { level: usize, index: usize },
    #[error("image of vertex {vertex} is not p0-high")]
    NotPHigh { vertex: usize },
    #[error("image of vertex {vertex} is not a vertex variable of the target")]
    NotAVariable { vertex: usize },
    #[error("image of edge ({u}, {v}) is not an edge sum of the target")]
    EdgeNotPreserved { u: usize, v: usize },
    #[error("recovered vertex map is not an induced embedding")]
    NotEmbedding,
    #[error("expected {expected} vertex images, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && (2..).take_while(|d| d * d <= n).all(|d| !n.is_multiple_of(d))
}

/// Odd primes `3, 5, 7, 11, ...` skipping `characteristic`.
pub fn prime_schedule(characteristic: u64) -> impl Iterator<Item = u64> {
    (3..).step_by(2).filter(move |&q| q != characteristic && is_prime(q))
}

/// Characteristic of `F` and the exponent prime `p0` of `K0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct K0Ctx {
    scalars: Scalars,
    p0: u64,
}

impl K0Ctx {
    pub fn new(characteristic: u64) -> Result<Self, FieldError> {
        if characteristic != 0 && (characteristic == 2 || !is_prime(characteristic)) {
            return Err(FieldError::BadCharacteristic(characteristic));
        }
        let p0 = prime_schedule(characteristic).next().expect("infinitely many primes");
        Ok(K0Ctx { scalars: Scalars::new(characteristic), p0 })
    }

    pub fn characteristic(&self) -> u64 {
        self.scalars.characteristic()
    }

    pub fn p0(&self) -> u64 {
        self.p0
    }

    pub fn scalars(&self) -> Scalars {
        self.scalars
    }
}

impl Default for K0Ctx {
    fn default() -> Self {
        K0Ctx::new(0).expect("characteristic 0 is supported")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_schedule_skips_characteristic() {
        let first: Vec<u64> = prime_schedule(0).take(5).collect();
        assert_eq!(first, vec![3, 5, 7, 11, 13]);
        let skip: Vec<u64> = prime_schedule(5).take(3).collect();
        assert_eq!(skip, vec![3, 7, 11]);
        assert_eq!(K0Ctx::new(3).unwrap().p0(), 5);
    }

    #[test]
    fn characteristic_validation() {
        assert_eq!(K0Ctx::new(2), Err(FieldError::BadCharacteristic(2)));
        assert_eq!(K0Ctx::new(9), Err(FieldError::BadCharacteristic(9)));
        assert_eq!(K0Ctx::default().p0(), 3);
        assert!(K0Ctx::new(7).is_ok());
    }
}
