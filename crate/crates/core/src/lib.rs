//! Degree-power Turán problems for forests.
//!
//! `e_p(G)` is the sum of the `p`-th powers of the degrees of `G`. This crate
//! builds the extremal graphs, evaluates the closed-form extremal values,
//! decides containment of forest patterns, applies the pendent-structure
//! rewrites used to move degree onto a maximum-degree vertex, and computes
//! small cases exhaustively to check all of the above.

pub mod canon;
pub mod constructions;
pub mod count;
pub mod degree;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod formulas;
pub mod oracle;
pub mod patterns;
pub mod transforms;

pub use canon::{canonical_code, CanonicalCode, CANON_CAP};
pub use count::BigCount;
pub use degree::{DegreeSequence, Dominance};
pub use error::{Error, Result};
pub use graph::{Graph, VERTEX_CAP};
pub use graph6::{g6_decode, g6_encode};
pub use formulas::FormulaResult;
pub use oracle::{OracleConfig, OracleReport};
pub use patterns::{Budget, Detection, ForestPattern};
pub use transforms::{PendentSite, SiteKind};
