//! The degree-truncated colouring procedure: partition into low and high degree
//! vertices, proper connectivity, the degeneracy order, free components,
//! protectors and saviors.

mod oracle;
mod partition;
mod run;

pub use oracle::{
    confined_colors, exact_free, fast_free, is_bad, is_free, savior_cost_set, FreeReason, Freeness,
    OracleCtx, Savior,
};
pub use partition::{
    build_order, check_properly_connected, partition_by_degree, partition_by_set,
    properly_connected_shortcut, simple_cycles, ComponentVerdict, TruncPartition,
};
pub use run::{
    check_valid, color, procedure_demand, run_procedure, very_nice_for, BudgetRecord,
    ProcedureConfig, ProcedureRun, Rule, TraceEvent,
};

use thiserror::Error;

use crate::graph::GraphError;
use crate::theta::ThetaError;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProcedureError {
    #[error("no vertex has degree at least {0}")]
    EmptyHighSet(usize),
    #[error("face {face} of the high-degree subgraph contains components {a} and {b}")]
    SharedFace { face: usize, a: usize, b: usize },
    #[error("vertex {0} is not on the infinite face of the high-degree subgraph")]
    VStarNotOuter(usize),
    #[error("list of vertex {vertex} has {size} colours, {needed} needed")]
    ShortList {
        vertex: usize,
        size: usize,
        needed: usize,
    },
    #[error("oracle cap of {0} extension tuples exceeded")]
    OracleCap(u64),
    #[error("oracle cap of {cap} extension tuples exceeded at step {step}")]
    Capped {
        cap: u64,
        step: usize,
        trace: Vec<TraceEvent>,
    },
    #[error("component {0} is not properly connected")]
    NotProperlyConnected(usize),
    #[error("cycle enumeration cap of {0} exceeded")]
    CycleCap(usize),
    #[error("procedure failed at step {step}: {reason}")]
    Failed {
        step: usize,
        reason: String,
        trace: Vec<TraceEvent>,
    },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Theta(#[from] ThetaError),
}
