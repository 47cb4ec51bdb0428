//! Graphs, the quandles `Q_T` built from them, LD-monoids, and the
//! `K0`-tower construction attached to combinatorial trees.

pub mod field;
pub mod graph;
pub mod io;
pub mod ldmonoid;
pub mod morphism;
pub mod quandle;
pub mod table;
pub mod workbench;
