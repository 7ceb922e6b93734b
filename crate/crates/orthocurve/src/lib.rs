//! Curvature tests for orthoscheme complexes of bounded graded posets.
//!
//! A bounded graded poset of rank at most 4 has a CAT(0) orthoscheme
//! complex exactly when it is a lattice containing no *short spindle*: a
//! cyclic alternating sequence of elements whose loop in the diagonal link
//! is shorter than `2*pi`. This crate builds the standard poset families
//! (boolean, partition, noncrossing-partition, subspace and Coxeter
//! noncrossing-partition lattices), measures diagonal links with exact
//! rational `cos^2` values, searches for spindles up to a provable girth
//! cutoff, and reports a verdict with a checkable witness.
//!
//! # Example
//!
//! ```
//! use orthocurve::families::noncrossing_partition_lattice;
//! use orthocurve::spindle::{cat0_verdict_rank_le4, VerdictStatus};
//!
//! let nc4 = noncrossing_partition_lattice(4).unwrap();
//! let verdict = cat0_verdict_rank_le4(&nc4);
//! assert_eq!(verdict.status, VerdictStatus::Cat0);
//! ```
//!
//! Verdicts on non-lattices come with a bowtie witness, which is also a
//! girth-4 spindle:
//!
//! ```
//! use orthocurve::poset::non_lattice_example;
//! use orthocurve::spindle::{cat0_verdict_rank_le4, VerdictStatus};
//!
//! let p = non_lattice_example();
//! let verdict = cat0_verdict_rank_le4(&p);
//! assert_eq!(verdict.status, VerdictStatus::NotCat0);
//! assert!(verdict.witness.is_some());
//! ```

pub mod bitset;
pub mod coxeter;
pub mod families;
pub mod metric;
pub mod poset;
pub mod report;
pub mod spindle;
