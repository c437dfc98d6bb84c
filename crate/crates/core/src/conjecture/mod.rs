//! Telescope-conjecture variants, their evaluation in the category models,
//! mechanized derivations between them, and the implication graph.

mod derive;
mod engine;
mod graph;
mod id;
mod table;

use thiserror::Error;

use crate::class::TriValue;

pub use derive::{derive_tc1_from_tc2, derive_tc2_from_tc1s, Derivation, Equation, Step, StepKind};
pub use engine::{
    ConjectureEngine, Mode, Trace, Verdict, LTC1_LTC3_CITATION, LTC3_LTC1_CITATION,
    TC1_TC3_CITATION, TC2_TC1_CITATION, TRANSPORT_CITATION,
};
pub use graph::{
    implication_graph, implication_graph_for, ClosureReport, Condition, ImplicationEdge,
    ImplicationGraph, Justification, GSC_SDGSC_CITATION, GSC_TC2_CITATION, LOCAL_GSC_CITATION,
    SPECULATIVE_NOTE,
};
pub use id::{ConjectureId, Family, Statement};
pub use table::{golden_cell, row_conjectures, Cell, Row, VerdictTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConjectureError {
    #[error("malformed conjecture: {0}")]
    Malformed(String),
    #[error("index {i} exceeds {n}")]
    IndexOutOfRange { i: u32, n: u32 },
    #[error("TC2_{n} needs TC1_i for every i ≤ {n}; missing {missing:?}")]
    IncompleteHypotheses { n: u32, missing: Vec<u32> },
    #[error("derivation failed: {0}")]
    Derivation(String),
    #[error("replay failed at step {0}: {1}")]
    Replay(usize, String),
    #[error("{0} is not an ambient lattice equality")]
    NotTransportable(String),
    #[error("refusing to transport {conjecture}: it is {value}")]
    Refused { conjecture: String, value: TriValue },
}
