//! Symmetric chain decompositions of the lattice L(5, n).
//!
//! L(m, n) is the poset of weakly increasing m-tuples with entries in
//! `0..=n` — equivalently, partitions fitting in an m x n box — ordered
//! coordinatewise and graded by coordinate sum. A symmetric chain
//! decomposition (SCD) partitions the poset into saturated chains whose
//! endpoint ranks sum to `m * n`.
//!
//! This crate builds an explicit SCD of L(5, n) for any n:
//!
//! 1. [`families`] materializes nine parameterized families of parallel
//!    chains from symbolic tables, expanding dotted single-coordinate runs
//!    and two-coordinate zigzag segments into saturated chains.
//! 2. [`ladder`] stacks each family's rows into rectangles and peels their
//!    perimeters recursively into symmetric chains.
//! 3. [`verify`] checks everything against independent oracles: exhaustive
//!    lattice enumeration, Gaussian-binomial rank sizes, and coverage of
//!    the product generating function `1/((1-x0)...(1-x5))` truncated
//!    degree by degree.
//!
//! The construction is deterministic: identical inputs produce identical
//! chains in identical order, regardless of thread count.

pub mod affine;
pub mod error;
pub mod families;
pub mod ladder;
pub mod lattice;
pub mod output;
pub mod verify;

pub use error::Error;
pub use families::{
    enumerate_family_params, l2k_scd, materialize_chain, Chain, FamilyId, FamilyInstance,
    FamilyParams, RowIndex,
};
pub use ladder::{
    assemble_ladders, peel, scd, scd_with, ChainRole, Ladder, LadderKey, Orientation,
    OrientationPolicy, PeelTag, Scd, SymmetricChain,
};
pub use lattice::{
    binomial, covers, enumerate_box5, enumerate_lattice, rank_sizes, AmbientParams, LatticePoint,
    RankProfile, MAX_N,
};
pub use verify::{
    gf_truncated_check, is_saturated, is_symmetric, verify_chain_profile, verify_partition,
    verify_peel_conservation, weight, GfCheck, VerificationReport, WeightExponents,
};
