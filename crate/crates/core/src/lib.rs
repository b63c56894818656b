//! Exact-arithmetic toolkit for positive definite rational lattices.
//!
//! Everything in this crate computes over arbitrary-precision integers and
//! rationals; no floating point enters any decision (the one `f64` surface,
//! [`shortvec::hermite`], is a reporting convenience backed by an exact
//! rational bound).
//!
//! The crate is built around a handful of layers:
//!
//! - [`exactmat`] — integer/rational matrices, Hermite and Smith normal
//!   forms, determinants, kernels.
//! - [`lattice`] — the [`lattice::Lattice`] type and its algebra: duals,
//!   rescalings, sums, intersections, annihilators, glueing.
//! - [`shortvec`] — LLL reduction and complete short-vector enumeration with
//!   exact acceptance tests.
//! - [`involution`] — reflections `t_X`, eigenlattices, SSD/RSSD tests and
//!   dihedral pair reports.
//! - [`atlas`] — constructions of the named lattices (root lattices, their
//!   doubled copies, half-spin, tensor products, Coxeter–Todd, ...).
//! - [`leech`] — the binary Golay code in the 4×6 array convention, the
//!   standard Leech lattice, octad sublattices and the hard-coded
//!   dihedral-pair case data.
//! - [`verify`] — the classification harness tying everything together.
//!
//! The crate is `no_std` (it requires `alloc`); IO, serialization and the
//! command line live in the companion `latcli` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod atlas;
pub mod exactmat;
pub mod involution;
pub mod lattice;
pub mod leech;
pub mod shortvec;
pub mod verify;

pub use exactmat::{IntMatrix, RatMatrix, SmithDecomposition};
pub use involution::{DihedralReport, Isometry};
pub use lattice::{Form, FormKind, GlueVector, Lattice, LatticeError};

/// Deterministic splittable PRNG used by the self-check suites.
///
/// Verification output must be byte-identical across runs and platforms, so
/// randomized property checks draw from this fixed-seed generator rather
/// than an OS source.
#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform draw from `[0, n)`.
    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    /// Small signed integer in `[-bound, bound]`.
    pub fn small_int(&mut self, bound: u64) -> i64 {
        self.below(2 * bound + 1) as i64 - bound as i64
    }
}
