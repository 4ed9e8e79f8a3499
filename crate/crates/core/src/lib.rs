//! Exact-arithmetic toolkit for nut graphs: simple graphs whose adjacency
//! matrix has nullity one and whose kernel eigenvector avoids zero on every
//! vertex.
//!
//! The crate is organised bottom-up:
//!
//! * [`graph`]: packed adjacency-bitset graphs and structural queries,
//! * [`graph6`]: the graph6 line format used for interchange,
//! * [`modp`]: dense linear algebra over prime fields,
//! * [`schedule`]: determinant bounds and the prime schedules built from them,
//! * [`exact`]: fraction-free integer linear algebra (determinant,
//!   characteristic polynomial, adjugate, kernel, inertia),
//! * [`nut`]: the certified nullity-one decision procedure,
//! * [`canon`]: canonical labelling, automorphism orbits and the canonical
//!   extension test,
//! * [`generate`]: isomorph-free exhaustive generation of nut graphs,
//! * [`report`]: per-graph invariant reports and aggregate statistics.
//!
//! Every verdict produced here is exact: floating point is never consulted.
//! Modular arithmetic is used only where a rank bound or a residue certifies
//! an integer fact outright.

pub mod canon;
pub mod exact;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod modp;
pub mod nut;
pub mod report;
pub mod schedule;

#[cfg(test)]
pub(crate) mod testutil;

pub use canon::{canonical_code, canonical_form, canonicalize, is_canonical_extension, Canon};
pub use generate::{all_graphs, generate, generate_fold, GenMode, GenOptions};
pub use graph::{EdgeRef, Graph};
pub use nut::{is_nut, NutCertificate, Verdict};
pub use report::{analyze, AnalyzeError, NutReport, StatsTable};
