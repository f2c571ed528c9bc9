//! Rewriting and evaluation engines for planar tensor diagrams.
//!
//! * [`skein`] rewrites diagrams (crossings included) to linear combinations
//!   of basis webs over exact Laurent coefficients.
//! * [`tables`] holds the local state-weight tables shared by the quantum
//!   evaluators.
//! * [`classical`] evaluates diagrams numerically on explicit vector and
//!   covector configurations — the commutative ground truth for every rule.
//! * [`quantum`] expands web invariants in the tensor-product basis.

pub mod classical;
pub mod disc;
pub mod quantum;
pub mod skein;
pub mod tables;

pub use classical::{eval_combo_numeric, eval_numeric, Configuration, EvalError};
pub use quantum::{make_expander, expander_names, Expansion, Expander, QuantumError};
pub use skein::{
    make_strategy, reduce_to_basis, strategy_names, Reducer, ReductionStrategy, SkeinError,
};
