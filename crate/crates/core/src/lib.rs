//! Crossing numbers of complete multipartite graphs.
//!
//! The crate provides, in rough dependency order:
//!
//! * [`graph`] — complete multipartite graphs with named parts and the
//!   edge-set algebra (`E(v)`, `E_{AB}`, induced subgraphs) that crossing
//!   bookkeeping is written in.
//! * [`formulas`] — closed-form crossing-number values for the catalogued
//!   graph families, Zarankiewicz numbers, and lower-bound machinery.
//! * [`geometry`] — drawings as exact-rational polylines, validation of the
//!   good-drawing conditions, and crossing counting.
//! * [`families`] — the strategy registry: one entry per graph family, each
//!   knowing its formula and its spine layout for optimal drawings.
//! * [`constructions`] — generators that realize the layouts as validated
//!   drawings (including classic Zarankiewicz drawings of `K_{m,n}`).
//! * [`planarity`] — planarity testing with rotation-system witnesses and
//!   face tracing.
//! * [`solver`] — exact crossing numbers of small graphs by iterative
//!   deepening over crossing configurations and planarization.
//! * [`census`] — enumeration of all good drawings of tiny graphs up to
//!   isomorphism, region analysis, and the counting-inequality checker.
//! * [`io`] — the `crossing-drawing/1` JSON format and edge-set selectors.

pub mod census;
pub mod constructions;
pub mod error;
pub mod families;
pub mod formulas;
pub mod geometry;
pub mod graph;
pub mod io;
pub mod planarity;
pub mod solver;

pub use error::{Error, Result};
