//! Coxeter systems and the word problem.
//!
//! Elements are canonical ShortLex-least reduced words; all operations reduce
//! through Tits' braid-move rewriting, so exactness does not depend on the
//! group being finite. Spherical subsets are recognized against the
//! classification of finite Coxeter groups.

mod classify;
mod matrix;
mod system;
mod word;

use thiserror::Error;

pub use classify::GroupOrder;
pub use matrix::{Bond, CoxeterMatrix};
pub use system::{CoxeterSystem, Side};
pub use word::{Elem, Reflection, TypeSubset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CoxeterError {
    #[error("rank {0} is not supported (must be a square table of rank 1..=64)")]
    InvalidRank(usize),
    #[error("coxeter matrix is not symmetric at ({i}, {j})")]
    MatrixAsymmetric { i: usize, j: usize },
    #[error("diagonal entry {0} must be 1")]
    BadDiagonal(usize),
    #[error("bond order at ({i}, {j}) must be at least 2 (0 encodes infinity)")]
    BadBondOrder { i: usize, j: usize },
    #[error("letter {letter} out of range for rank {rank}")]
    LetterOutOfRange { letter: usize, rank: usize },
    #[error("operation would not terminate: {0}")]
    WouldNotTerminate(String),
}
