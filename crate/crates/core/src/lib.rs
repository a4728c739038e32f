//! Exact calculator for the `(d+2)`-angulated categories `F̄` attached to the
//! truncated linear quiver algebras `kA_m / rad^l` with `m − 1 = d·l/2`.
//!
//! Indecomposables are encoded by a global position on the quiver
//! `⋯ → Σ^{-d} f_1 → ⋯ → Σ^{-d} f_period → f_1 → ⋯ → f_period → Σ^d f_1 → ⋯`
//! (`period = m + l − 1`), Hom spaces are at most one-dimensional, and all
//! scalars are exact rationals.

pub mod angle;
pub mod artheory;
pub mod chain;
pub mod error;
pub mod exactness;
pub mod linalg;
pub mod morphism;
pub mod object;
pub mod params;
pub mod wide;

pub use angle::{direct_sum, extend, min_angle, trivial_angle, zero_angle, Angle};
pub use chain::{d_cokernel, d_exact_seq, d_kernel, ChainKind, FLevelChain};
pub use error::{Error, Result};
pub use exactness::{check_hom_exactness, ExactnessReport, Variance};
pub use morphism::{compose, hom_dim, Morphism, Shift};
pub use object::{IndecObject, SumObject};
pub use params::{validate_params, FamilyParams};
pub use wide::SubcatSpec;
