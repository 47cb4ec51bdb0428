//! Seeded verification campaigns and their reports.
//!
//! Every campaign is a deterministic function of its parameters and seed.
//! Case `i` draws from its own ChaCha stream `i` under the campaign seed, so
//! cases run in parallel and are merged back in index order.

mod campaigns;
mod random;
mod report;

use thiserror::Error;

use crate::field::FieldError;
use crate::graph::GraphError;
use crate::quandle::QuandleError;

pub use campaigns::{
    explore_embedding_general, field_laws, involution_laws, ld_layer, quandle_functor, tower_sizes,
    verify_aut_structure, verify_embedding_theorem, verify_field_layer, verify_iso_theorem,
};
pub use random::{case_rng, random_k0_elem, random_no_complete_vertex_graph, random_sub_ct_tree};
pub use report::{CampaignReport, CaseRecord, ReportFormat};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CampaignError {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("input is not a combinatorial tree without complete vertices")]
    NotCTSquare,
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Quandle(#[from] QuandleError),
    #[error(transparent)]
    Field(#[from] FieldError),
}
