//! websk-core: a combinatorial engine for the skein calculus of trivalent webs.
//!
//! The crate has five subsystems:
//!
//! * [`web`] — the web data model (trivalent multigraphs with free loop
//!   components), a line-oriented text format, connectivity and bridge
//!   analysis, and skein-site surgery (excising an edge and gluing in one of
//!   the five local pictures K0/K1/K2/L0/L1).
//! * [`tait`] — exact Tait-coloring counting: a brute-force oracle, a
//!   frontier dynamic program, and the Tutte-relation verifier
//!   `tau(K0) - tau(K1) + tau(L0) - tau(L1) = 0`.
//! * [`foam`] — invariant aggregates for the standard closed foams in the
//!   4-sphere (the `Psi_n` family and the mirror `Psi_2^-`), the
//!   moduli-space dimension formula, and the smallest-action table.
//! * [`cobmap`] — a symbolic algebra of foam-cobordism maps over F_2
//!   semantics: composites of named generators with connected-sum
//!   decorations, a terminating normalizer, a bounded equality prover, and
//!   the octahedral-diagram verification suite.
//! * [`exactness`] — rank/dimension constraint propagation for exact
//!   triangles and the 4-periodic complex, Euler-characteristic identities,
//!   and the dodecahedron bound workflow.
//!
//! All arithmetic is exact: counts are arbitrary-precision integers and
//! foam data are exact rationals. Nothing here uses floating point.

pub mod cobmap;
pub mod corpus;
pub mod exactness;
pub mod foam;
pub mod tait;
pub mod web;
