//! Searches for the rainbow-extremal function
//! `R(n) = max { min_i |E(G_i)| : (G1, G2, G3) on n vertices, rainbow-free }`.
//!
//! [`exhaustive_r`] walks every triple for `n ≤ 4`, [`branch_and_bound_r`]
//! explores per-pair colour masks with pruning, and [`local_search_r`]
//! produces lower bounds for larger `n`.

mod bnb;
mod exhaustive;
mod local;

use std::time::Duration;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{GraphError, GraphTriple, SimpleGraph};
use crate::rainbow::{count_rainbow_triangles, min_edge_count};

pub use bnb::{branch_and_bound_r, branch_and_bound_r_with, BnbConfig, DEFAULT_BUDGET};
pub use exhaustive::{exhaustive_r, EXHAUSTIVE_MAX_ORDER};
pub use local::{local_search_r, local_search_r_with, LocalInit, LocalSearchConfig};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("n = {n} is too large for raw enumeration (max {max}); use branch_and_bound_r")]
    TooLarge { n: usize, max: usize },
    #[error("search produced an invalid witness: {0}")]
    InvalidWitness(String),
    #[error("could not build thread pool: {0}")]
    ThreadPool(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Construction(#[from] crate::constructions::ConstructionError),
}

#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub n: usize,
    pub value: usize,
    pub exact: bool,
    pub witness: GraphTriple,
    pub nodes_visited: u64,
    pub wall_time: Duration,
}

impl SearchOutcome {
    /// Re-checks the witness with the rainbow counter before reporting.
    pub(crate) fn verified(
        n: usize,
        value: usize,
        exact: bool,
        witness: GraphTriple,
        nodes_visited: u64,
        wall_time: Duration,
    ) -> Result<Self, SearchError> {
        let rainbow = count_rainbow_triangles(&witness);
        if rainbow != 0 {
            return Err(SearchError::InvalidWitness(format!("{rainbow} rainbow triangles")));
        }
        let min = min_edge_count(&witness);
        if min != value || witness.order() != n {
            return Err(SearchError::InvalidWitness(format!("value {value} but witness min {min}")));
        }
        Ok(Self { n, value, exact, witness, nodes_visited, wall_time })
    }

    pub fn summary(&self) -> OutcomeSummary {
        let edges = |i: usize| self.witness.graphs()[i].edges().map(|(u, v)| [u, v]).collect();
        OutcomeSummary {
            n: self.n,
            value: self.value,
            exact: self.exact,
            nodes: self.nodes_visited,
            seconds: self.wall_time.as_secs_f64(),
            witness: WitnessEdges { g1: edges(0), g2: edges(1), g3: edges(2) },
        }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct WitnessEdges {
    pub g1: Vec<[usize; 2]>,
    pub g2: Vec<[usize; 2]>,
    pub g3: Vec<[usize; 2]>,
}

#[derive(Clone, Debug, Serialize)]
pub struct OutcomeSummary {
    pub n: usize,
    pub value: usize,
    pub exact: bool,
    pub nodes: u64,
    pub seconds: f64,
    pub witness: WitnessEdges,
}

/// `⌊n²/4⌋`, achieved by three identical balanced complete bipartite graphs.
pub fn bipartite_lower_bound(n: usize) -> usize {
    n * n / 4
}

pub fn identical_bipartite(n: usize) -> Result<GraphTriple, GraphError> {
    Ok(GraphTriple::identical(SimpleGraph::complete_bipartite(n / 2, n - n / 2)?))
}

/// Exact values of `R(n)` computed by the exhaustive (`n ≤ 4`) and
/// branch-and-bound searches, indexed by `n`. All equal `⌊n²/4⌋`.
pub const KNOWN_EXACT_VALUES: [usize; 8] = [0, 0, 1, 2, 4, 6, 9, 12];
