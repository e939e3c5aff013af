//! Exact decompositions of finite normal-form games.
//!
//! A game with `n` players and `k_i` strategies per player is identified
//! with its payoff vector in `Q^{n·k}`, `k = Π k_i`. The crate builds the
//! classical game-class subspaces (zero-sum, common-interest, normalized,
//! non-strategic, harmonic, symmetric, potential) as exact rational bases,
//! splits games along the usual direct-sum schemes under any symmetric
//! positive-definite weight, and decides when a weighted inner product
//! induces the same orthogonal decomposition as the standard one.
//!
//! All arithmetic is exact; there are no tolerances anywhere.

pub mod classes;
pub mod compat;
pub mod error;
pub mod game;
pub mod inner;
pub mod json;
pub mod matrix;
pub mod random;
pub mod rational;
pub mod scheme;
pub mod subspace;

pub use classes::{classify, Classification, GameClass};
pub use compat::{is_compatible, theorem_check, CompatReport, TheoremReport};
pub use error::{Error, Result};
pub use game::{index_to_profile, profile_to_index, Game, GameSpace, StrategyProfile};
pub use inner::{candogan_ip, inner, project, standard_ip, InnerProduct};
pub use matrix::{stp, RationalMatrix};
pub use rational::Rational;
pub use scheme::{build_scheme, decompose, verify_orthogonality, Decomposition, Scheme, SchemeKind};
pub use subspace::{intersect, orth_complement, subspace_sum, Subspace};
