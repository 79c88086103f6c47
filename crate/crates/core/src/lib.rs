//! Robinson–Schensted shapes of permutations with a prescribed cycle type.
//!
//! The crate covers partitions, permutations and conjugacy classes, standard
//! tableaux, row insertion, colorings of admissible tableaux that certify
//! `shape ∈ S_alpha`, and brute-force computation of the shape sets
//! `S_alpha = { sh(σ) : σ has cycle type alpha }`.
//!
//! ```
//! use rs_cycles::{brute_force_s_alpha, construct_two_cycle, BruteForceConfig, Partition};
//!
//! # fn main() -> rs_cycles::Result<()> {
//! let alpha: Partition = "4,2".parse()?;
//! let report = brute_force_s_alpha(&alpha, &BruteForceConfig::default())?;
//! assert_eq!(report.missing, vec!["2,2,2".parse::<Partition>()?]);
//!
//! let witness = construct_two_cycle(&"8,7".parse()?, &"5,3,3,3,1".parse()?)?;
//! assert!(witness.verify_witness());
//! # Ok(())
//! # }
//! ```

pub mod coloring;
pub mod error;
pub mod partition;
pub mod render;
pub mod permutation;
pub mod rs;
pub mod shapeset;
pub mod tableau;

pub use coloring::{
    associated_permutation, canonical_cycle, construct_two_cycle, involution_canonical_coloring,
    search_alpha_coloring, spiral_coloring, validate_alpha_coloring, Coloring, ColoringOutcome, OutcomeKind,
    SearchMode, SearchOutcome, SpiralResult,
};
pub use error::{Error, Result};
pub use partition::{enumerate_b_alpha, enumerate_partitions, BoundingBox, Partition};
pub use permutation::{class_size, enumerate_conjugacy_class, ClassEnumerator, Permutation};
pub use rs::{greene_invariant, rs_forward, rs_inverse, rs_shape, Direction, RsPair};
pub use tableau::{count_syt, enumerate_syt, Tableau};
pub use render::{render_coloring, render_partition, render_report, render_tableau, Format};
pub use shapeset::{brute_force_s_alpha, predicted_s_alpha_two_cycle, BruteForceConfig, ShapeSetReport};
