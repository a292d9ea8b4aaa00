//! Exact solvers and verifiers for total dominator colorings of Kneser
//! graphs `KG(n, 2)`, with the supporting cast: graph generation, proper
//! and dominator coloring checks, star/triangle class structure, explicit
//! coloring constructions, Steiner triple systems, and JSON certificates.
//!
//! A proper coloring of `KG(n, 2)` is the same thing as a partition of
//! the edges of `K_n` into stars and triangles; most of the interesting
//! machinery here works that correspondence from both ends. Solvers are
//! exact and certificate-producing: every value comes with an object the
//! verifier side can re-check independently, and search budgets turn
//! overruns into explicit errors rather than wrong or silently truncated
//! answers.
//!
//! Quick tour:
//! - [`graph`]: [`Graph`](graph::Graph), [`kneser_graph`](graph::kneser_graph),
//!   star/triangle classification of independent sets.
//! - [`coloring`]: properness, total domination of colorings, the
//!   symbol-frequency obstruction, canonical-form detection.
//! - [`constructions`]: explicit dominator colorings for every feasible n.
//! - [`solvers`]: exact chromatic number, total domination number, total
//!   dominator chromatic number, decision searches, enumeration.
//! - [`steiner`]: Steiner triple systems, constructions and brute force.
//! - [`certificate`] / [`dimacs`]: durable on-disk formats.
//! - [`random`]: seeded instances for property suites.

pub mod certificate;
pub mod coloring;
pub mod constructions;
pub mod dimacs;
pub mod error;
pub mod graph;
pub mod random;
pub mod solvers;
pub mod steiner;

pub use error::{Error, Result};
