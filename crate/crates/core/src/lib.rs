//! Exact combinatorics of edge ideals and independence complexes.
//!
//! The crate builds complete uniform multipartite hypergraphs, their edge
//! ideals and independence complexes, and decides algebraic properties of
//! the associated Stanley-Reisner rings (Cohen-Macaulay, Gorenstein,
//! Buchsbaum, Serre conditions, level, complete intersection, sequential
//! variants) by first-principles oracles: reduced simplicial homology over
//! a field, graded Betti numbers via induced-subcomplex homology, and
//! combinatorial searches for shellings, shedding vertices, matroid
//! exchange, tight labellings and chordality. A closed-form classifier
//! answers the same questions directly from the side sizes, and the sweep
//! harness checks the two against each other over parameter grids.
//!
//! Everything is exact: ranks over the rationals use fraction-free
//! elimination on arbitrary-precision integers, prime fields use modular
//! elimination. All structures are immutable after construction and every
//! operation is pure, so instances can be evaluated in parallel.

pub mod alg_props;
pub mod betti;
pub mod bits;
pub mod chordal;
pub mod classify;
pub mod comb_props;
pub mod complex;
pub mod error;
pub mod field;
pub mod homology;
pub mod hypergraph;
pub mod ideal;
pub mod matrix;
pub mod sweep;

/// Arbitrary-precision integer used by the exact linear algebra.
pub type Integer = num_bigint::BigInt;
/// Arbitrary-precision rational scalar.
pub type Rational = num_rational::BigRational;

pub use bits::VertexSet;
pub use complex::SimplicialComplex;
pub use error::{Error, Result};
pub use field::FieldSpec;
pub use hypergraph::{Hypergraph, PartiteSpec};
pub use ideal::MonomialIdeal;
