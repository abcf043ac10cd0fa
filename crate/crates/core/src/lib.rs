//! Finite posets, modular lattices and order-complex h-vectors.
//!
//! The crate builds divisor lattices, duplicates join- and meet-irreducible
//! elements, computes f- and h-vectors of order complexes exactly, and
//! checks Stanley's inequalities. Together these produce a certificate for a
//! modular lattice whose h-vector no Cohen–Macaulay homogeneous domain can
//! have, so no homogeneous ASL on it is an integral domain.
//!
//! ```
//! use modlat::constructions::{find_minimal_n, SearchOptions};
//!
//! let cert = find_minimal_n(3, 4, &SearchOptions::default()).unwrap().unwrap();
//! assert_eq!(cert.n, 10);
//! assert_eq!(cert.element_count, 30);
//! ```

mod bits;
pub mod constructions;
pub mod duplication;
pub mod error;
pub mod io;
pub mod lattice;
pub mod order_complex;
pub mod poly;
pub mod poset;
pub mod random;
pub mod stanley;

pub use constructions::{
    divisor_lattice, find_minimal_n, grid_lattice, CounterexampleCertificate, SearchOptions,
};
pub use duplication::{duplicate, duplicate_lattice, iterate_duplication, DuplicationCertificate};
pub use error::{BoundFailure, Error, Result};
pub use io::{from_json, to_dot, ToJson};
pub use lattice::{as_lattice, LatticeView, Verdict};
pub use order_complex::{f_vector, h_vector, hilbert_function, FVector, HVector};
pub use poset::{Chain, Poset};
pub use random::{GenConfig, Generator};
pub use stanley::{gorenstein_symmetry_check, stanley_check, StanleyReport, Violation};
