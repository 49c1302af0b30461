//! Certificate-producing algorithms around the strong Erdős–Hajnal property
//! of C5-free tournaments.
//!
//! The library is organized around one pipeline and one standalone lemma:
//!
//! * [`structures`] verifies (and heuristically finds) smooth structures of
//!   disjoint vertex sets with per-vertex density guarantees;
//! * [`ehpair`] turns a tournament plus a verified smooth structure into a
//!   checkable certificate: either two disjoint vertex sets with every edge
//!   oriented from the first to the second, or an explicit C5 subtournament;
//! * [`outsimplicial`] splits any outsimplicial digraph into two sets of size
//!   at least ⌊n/6⌋ that are either edge-disjoint or fully linked by paths;
//! * [`graph`], [`patterns`] and [`chordal`] supply the underlying machinery
//!   (condensations, C5 detection, clique trees, weighted centroid bags);
//! * [`gen`] provides seeded instance generators and [`oracle`] independent
//!   brute-force references used to validate everything else.
//!
//! With the default `parallel` feature the hot enumeration loops use rayon;
//! building with `--no-default-features` selects sequential fallbacks with
//! identical outputs.

pub mod chordal;
pub mod ehpair;
pub mod error;
pub mod gen;
pub mod graph;
pub mod oracle;
pub mod outsimplicial;
pub mod patterns;
pub mod structures;

pub use error::{Error, Result};
