//! Exact computation of v-numbers and Castelnuovo-Mumford regularity for
//! monomial and binomial edge ideals of finite simple graphs.
//!
//! The crate is organised around a brute-force graded-linear-algebra oracle
//! for local v-numbers, closed-form evaluators for the graph families that
//! admit them, explicit witness constructions with verifiable colon
//! certificates, and a Hochster-formula regularity engine.

pub mod config;
pub mod error;
pub mod field;
pub mod formulas;
pub mod graph;
pub mod graph6;
pub mod families;
pub mod ideals;
pub mod linalg;
pub mod poly;
pub mod regularity;
pub mod report;
pub mod vnum;

pub use config::Caps;
pub use error::{Error, Result};
pub use field::{Fp, Rat};
pub use graph::{CliquePathStructure, CutSet, Graph};
pub use families::{FamilyGraph, FamilySpec};
pub use ideals::{BinomialEdgeIdeal, MonomialEdgeIdeal, PrimeComponent};
pub use poly::{MarkedBasis, Monomial, Polynomial, VarSpace};
pub use regularity::{reg_binomial, reg_chordal_edge, reg_monomial, SimplicialComplexModel};
pub use report::{Certificate, VerifyOutcome};
pub use vnum::{VReport, VnumEngine};
