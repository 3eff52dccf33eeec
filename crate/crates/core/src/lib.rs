//! Exact symmetry invariants of finite simple graphs: automorphism groups,
//! fixing sets, the fixed graph, and the fractional fixing number computed
//! by exact rational linear programming.

pub mod bitset;
pub mod closed_forms;
pub mod error;
pub mod families;
pub mod fixing;
pub mod graph;
pub mod group;
pub mod lp;
pub mod perm;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use fixing::{FixedGraph, FixingAnalysis};
pub use graph::{DistanceMatrix, Graph};
pub use group::{automorphisms, PermGroup};
pub use lp::{
    fractional_fixing_number, fractional_metric_dimension, integral_cover_optimum, solve_cover_lp,
    CoverLp, LpSolution, Rational, WeightFunction,
};
pub use perm::Permutation;
