//! Exact-arithmetic toolkit for matching polynomials, Laplacian matching
//! polynomials, and characteristic polynomials of graph matrices, together
//! with mechanical verifiers for the identities, interlacing, majorization,
//! and root bounds that relate them.
//!
//! All core computations are exact: arbitrary-precision integers and
//! rationals for polynomial arithmetic, Sturm sequences for certified real
//! roots. Floats appear only at the output boundary (root values and the
//! tolerance-based comparisons between them).
//!
//! Everything is a pure function of its inputs and safe to call
//! concurrently; the one internal cache (matching counts) is confined to a
//! single invocation.

pub mod analysis;
pub mod error;
pub mod format;
pub mod generate;
pub mod graph;
pub mod identities;
pub mod matching;
pub mod poly;
pub mod report;
pub mod roots;
pub mod spectra;
pub mod suite;
pub mod tu;
pub mod weighted;

pub use error::{Error, Result};
pub use graph::{ComponentKind, ComponentReport, Graph, SubdivisionGraph, TwoRegularSubgraph};
pub use poly::{IntPoly, RatPoly};
pub use roots::{real_roots, Root, RootList, DEFAULT_ROOT_TOL};
pub use suite::DEFAULT_CHECK_TOL;
