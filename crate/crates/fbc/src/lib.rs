//! Exact-arithmetic invariants of free-by-cyclic groups F2⋊Z.
//!
//! A monodromy φ in GL(2,Z) determines the mapping torus Γ_φ = F2⋊_φZ, the
//! fundamental group of a punctured-torus bundle. This crate computes the
//! finite, exactly-decidable invariants attached to that picture:
//!
//! * [`zlinalg`] — Smith normal form over Z with unimodular transform
//!   witnesses; cokernel invariants.
//! * [`gl2z`] — classification of monodromies, exact powers, GL(2,Z)
//!   conjugacy with witnesses, conjugacy mod m and local conjugacy, class
//!   censuses per (trace, determinant), Nielsen decomposition.
//! * [`mapping_torus`] — first homology of Γ_φ, Betti-number profiles over
//!   powers, invariant fingerprints, identification of the three
//!   homology-Z monodromies, mapping-torus presentations.
//! * [`fpgroups`] — finitely presented groups: parsing, abelianization,
//!   epimorphism counts onto a catalog of finite groups, and quotient
//!   fingerprints.
//! * [`cli`] — the `fbc` command-line tool exposing all of the above with
//!   a machine-readable `--json` mode.
//!
//! The runnable examples tour the major capabilities:
//!
//! ```bash
//! cargo run --example classify_and_census
//! cargo run --example mapping_torus_homology
//! cargo run --example integer_conjugacy
//! cargo run --example local_vs_global_conjugacy
//! cargo run --example completion_invariants
//! cargo run --example finite_quotients
//! cargo run --example presentations
//! ```

pub mod cli;
pub mod fpgroups;
pub mod gl2z;
pub mod mapping_torus;
pub mod zlinalg;
