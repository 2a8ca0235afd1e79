//! Minimum semipaired domination on block graphs, with the machinery to
//! check it: a linear-time solver, bounded exact-search oracles for small
//! graphs, gadget constructions that transport solutions between problems,
//! and a randomized property harness tying them together.
//!
//! A semipaired dominating set is a dominating set whose vertices split into
//! disjoint pairs, each pair at distance at most two. The solver computes a
//! minimum one on any connected block graph — a graph whose biconnected
//! components are cliques — in one pass over an elimination ordering.

mod bits;
pub mod block;
pub mod generate;
mod mem;
pub mod graph;
pub mod harness;
pub mod oracle;
pub mod reductions;
pub mod solver;
