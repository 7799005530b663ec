//! Rainbow triangles in graph triples.
//!
//! Three graphs `G1, G2, G3` on a common vertex set contain a rainbow
//! triangle when there are distinct `v1, v2, v3` with `v1v2 ∈ E(G1)`,
//! `v2v3 ∈ E(G2)` and `v3v1 ∈ E(G3)`. Once every colour has more than
//! `(1 + τ²)/4 · n²` edges, with `τ = (4 − √7)/9`, such a triangle must
//! exist, and the three-block construction shows the constant is sharp.
//!
//! The crate provides:
//!
//! - [`graph`]: bit-row graphs, triples, subset edge counts and blow-ups;
//! - [`format`]: the plain-text triple format;
//! - [`rainbow`]: rainbow-triangle detection, counting and digons;
//! - [`constructions`]: the extremal three-block construction;
//! - [`search`]: exact and heuristic searches for small extremal triples;
//! - [`lemmas`]: brute-force checks of the supporting lemmas;
//! - [`certify`]: a box certificate that the final inequality system has
//!   no solution on the simplex;
//! - [`cli`]: the `rainbow-mantel` command-line front end.

pub mod certify;
pub mod cli;
pub mod constructions;
pub mod format;
pub mod graph;
pub mod lemmas;
pub mod rainbow;
pub mod search;

pub use constructions::{build_construction, Constants, ConstructionParams};
pub use graph::{Color, ColorSet, GraphBuilder, GraphError, GraphTriple, SimpleGraph, TripleBuilder, VertexSet};
pub use rainbow::{count_rainbow_triangles, find_rainbow_triangle, list_digons, min_edge_count, RainbowWitness};
