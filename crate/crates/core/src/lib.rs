//! Odd covers of graphs by complete bipartite graphs.
//!
//! An odd cover of a graph `G` is a collection of bicliques such that every
//! edge of `G` lies in an odd number of them and every nonedge in an even
//! number. This crate builds explicit odd covers, certifies them, bounds the
//! minimum size `b₂(G)` from below with F₂ rank and even cores, computes it
//! exactly by backtracking on small graphs, and checks structural properties
//! of perfect odd covers (those meeting the rank bound).
//!
//! Module map:
//!
//! - [`f2`]: bit-packed F₂ matrices (rank, left kernel, row independence)
//! - [`graph`]: graphs, disjoint unions, symmetric differences, even cores
//! - [`cover`]: bicliques, odd covers, verification and lower bounds
//! - [`gf`]: small finite fields and vectors over them
//! - [`constructions`]: explicit cover families
//! - [`search`]: exact `b₂` and pairs-matrix search
//! - [`properties`]: checkers for structural facts about perfect covers
//! - [`cli`]: the `oddcover` command-line front end

pub mod bits;
pub mod cli;
pub mod constructions;
pub mod cover;
pub mod error;
pub mod f2;
pub mod gf;
pub mod graph;
pub mod properties;
pub mod search;

pub use bits::BitVec;
pub use cover::{lower_bound, Biclique, LowerBound, OddCover, VerifyReport, Violation};
pub use error::{Error, Result};
pub use f2::F2Matrix;
pub use gf::{Elem, GfContext, GfVec};
pub use graph::{EvenCores, Graph, GraphKind};
pub use search::{
    b2_exact, has_cover_of_size, pairs_search, CoverSearch, Label, PairsSearch, SearchOptions,
};
