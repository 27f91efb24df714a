//! Combinatorial models of reflection arrangements on manifolds.
//!
//! Starting from a Coxeter matrix and a family of acceptable generator
//! subsets (the combinatorial description of a fundamental chamber), this
//! crate builds the face poset of the arrangement, the Salvetti-type complex
//! modelling the complexified complement, its quotient by the group action,
//! exact integer homology of all of these, and the fundamental group
//! presentation of the orbit space.
//!
//! Everything is exact: words are canonical reduced words, homology goes
//! through integer Smith normal form with arbitrary-precision arithmetic.

pub mod arrangement;
pub mod chamber;
pub mod complex;
pub mod coxeter;
pub mod homology;
pub mod salvetti;

pub use arrangement::{Arrangement, ArrangementError, Chamber, Face, FacePoset};
pub use chamber::{ChamberComplex, ChamberError, ChamberWarning, Preset};
pub use complex::SimplicialComplex;
pub use coxeter::{
    Bond, CoxeterError, CoxeterMatrix, CoxeterSystem, Elem, GroupOrder, Reflection, Side,
    TypeSubset,
};
pub use homology::{
    euler, homology, rank_over_rationals, smith_normal_form, CellComplex, ChainComplex,
    HomologyError, HomologyResult, HomologySummand, IntMatrix, Snf,
};
pub use salvetti::{
    build_sal, geometric_leq, h1_from_presentation, phi, pi1_presentation, quotient_complex,
    sal_leq, sal_order_complex, sal_pairs, translate_cell, two_cell_boundary, BoundaryEdge,
    Presentation, QuotientComplex, Relation, SalCell, SalPoset, SalvettiError,
};
