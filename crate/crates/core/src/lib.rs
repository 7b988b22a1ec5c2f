//! Exact-arithmetic Terracini locus computations.
//!
//! The crate decides whether a finite set of points `S` of `Pⁿ` lies in the
//! Terracini locus of the degree-`d` Veronese embedding, i.e. whether the
//! scheme of double points `2S` fails to impose independent conditions on
//! forms of degree `d`. Everything is computed with exact rationals: there is
//! no floating point anywhere in the decision path.
//!
//! Layout:
//!
//! * [`linalg`]: exact rank, kernels and a multi-prime modular fast path.
//! * [`polyspace`]: monomial bases, evaluation and derivative rows, binary
//!   forms and resultants.
//! * [`conditions`]: projective points, schemes of reduced and double points
//!   and their cohomology reports.
//! * [`terracini`]: the membership test and the sufficient criteria.
//! * [`configurations`]: seeded generators for the special configurations
//!   and the stratum dimension calculator.
//! * [`segre`]: tangent-span tests on products of projective spaces.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]

extern crate alloc;

pub mod conditions;
pub mod configurations;
pub mod linalg;
pub mod polyspace;
pub mod segre;
pub mod terracini;

pub mod rng;

pub use linalg::{kernel_basis, rank, rank_mod_p, LinalgError, Mat, Scalar};


pub use conditions::{
    cohomology, conditions_matrix, imposes_independent, ConditionsError, LinearSystemReport,
    PointKind, ProjPoint, SchemeSpec,
};
pub use polyspace::{dim_forms, BinaryForm, MonomialBasis, MultiIndex};
pub use segre::{segre_terracini, segre_tangent_rows, SegreError, SegrePoint, SegreVerdict};
pub use terracini::{classify, is_member, ClassifyOptions, Evidence, TerraciniError, TerraciniVerdict};
