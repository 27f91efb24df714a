//! Fundamental chamber descriptions: which generator subsets cut out faces.
//!
//! A chamber is described combinatorially by its family of acceptable type
//! subsets. The family must contain the empty set and every singleton, be
//! downward closed, and consist of spherical subsets. Two witnesses of
//! geometric plausibility — purity and the Euler-characteristic test — are
//! hard errors in strict mode and warnings otherwise (non-compact chambers
//! such as a half-line legitimately fail them).

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::coxeter::{CoxeterSystem, GroupOrder, TypeSubset};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Preset {
    /// All proper subsets of the generator set; the chamber of a simplex.
    Simplex,
    /// Rank-2 segment chamber: empty set and the two singletons.
    Interval,
}

impl fmt::Display for Preset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Preset::Simplex => write!(f, "simplex"),
            Preset::Interval => write!(f, "interval"),
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChamberError {
    #[error("subset {subset} mentions generators outside rank {rank}")]
    MemberOutOfRange { subset: TypeSubset, rank: usize },
    #[error("singleton {{{0}}} is missing from the acceptable family")]
    MissingSingleton(u8),
    #[error("family is not downward closed: contains {member} but not {missing}")]
    NotDownwardClosed {
        member: TypeSubset,
        missing: TypeSubset,
    },
    #[error("subset {0} generates an infinite parabolic subgroup")]
    NonSphericalMember(TypeSubset),
    #[error("family is not pure: maximal member {member} has size {size}, dimension is {dim}")]
    NotPure {
        member: TypeSubset,
        size: usize,
        dim: usize,
    },
    #[error("euler test failed: alternating sum {sum}, expected {expected} for dimension {dim}")]
    EulerTestFailed { sum: i64, expected: i64, dim: usize },
    #[error("preset {preset} not applicable: {reason}")]
    PresetInapplicable { preset: Preset, reason: String },
}

/// Warnings collected in lenient mode instead of erroring out.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ChamberWarning {
    NotPure {
        member: TypeSubset,
        size: usize,
        dim: usize,
    },
    EulerTestFailed { sum: i64, expected: i64, dim: usize },
}

impl fmt::Display for ChamberWarning {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ChamberWarning::NotPure { member, size, dim } => write!(
                f,
                "not pure: maximal member {member} has size {size}, dimension is {dim}"
            ),
            ChamberWarning::EulerTestFailed { sum, expected, dim } => write!(
                f,
                "euler test failed: alternating sum {sum}, expected {expected} for dimension {dim}"
            ),
        }
    }
}

/// A validated chamber description over a Coxeter system.
pub struct ChamberComplex {
    system: CoxeterSystem,
    acceptable: Vec<TypeSubset>,
    dim: usize,
    warnings: Vec<ChamberWarning>,
}

impl fmt::Debug for ChamberComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChamberComplex")
            .field("rank", &self.system.rank())
            .field("acceptable", &self.acceptable)
            .field("dim", &self.dim)
            .field("warnings", &self.warnings.len())
            .finish()
    }
}

impl ChamberComplex {
    /// Validate an acceptable family. The empty set is added implicitly.
    pub fn validate(
        system: CoxeterSystem,
        family: &[TypeSubset],
        strict: bool,
    ) -> Result<ChamberComplex, ChamberError> {
        let rank = system.rank();
        let full = system.full_set();
        let mut set: BTreeSet<TypeSubset> = family.iter().copied().collect();
        set.insert(TypeSubset::EMPTY);

        for &t in &set {
            if !t.is_subset_of(full) {
                return Err(ChamberError::MemberOutOfRange { subset: t, rank });
            }
        }
        for s in 0..rank as u8 {
            if !set.contains(&TypeSubset::singleton(s)) {
                return Err(ChamberError::MissingSingleton(s));
            }
        }
        for &t in &set {
            for u in t.subsets() {
                if !set.contains(&u) {
                    return Err(ChamberError::NotDownwardClosed {
                        member: t,
                        missing: u,
                    });
                }
            }
        }
        for &t in &set {
            if !system.is_spherical(t) {
                return Err(ChamberError::NonSphericalMember(t));
            }
        }

        let dim = set.iter().map(|t| t.len()).max().unwrap_or(0);
        let mut warnings = Vec::new();

        // Purity: every maximal member must have cardinality `dim`.
        for &t in &set {
            let maximal = !set.iter().any(|&u| t != u && t.is_subset_of(u));
            if maximal && t.len() != dim {
                let issue = ChamberError::NotPure {
                    member: t,
                    size: t.len(),
                    dim,
                };
                if strict {
                    return Err(issue);
                }
                warnings.push(ChamberWarning::NotPure {
                    member: t,
                    size: t.len(),
                    dim,
                });
            }
        }

        // Euler witness for a compact polytope chamber.
        let sum: i64 = set.iter().map(|t| if t.len() % 2 == 0 { 1 } else { -1 }).sum();
        let expected: i64 = if dim % 2 == 0 { 1 } else { -1 };
        if sum != expected {
            if strict {
                return Err(ChamberError::EulerTestFailed { sum, expected, dim });
            }
            warnings.push(ChamberWarning::EulerTestFailed { sum, expected, dim });
        }

        Ok(ChamberComplex {
            system,
            acceptable: set.into_iter().collect(),
            dim,
            warnings,
        })
    }

    /// Build one of the stock chamber shapes.
    pub fn preset(preset: Preset, system: CoxeterSystem) -> Result<ChamberComplex, ChamberError> {
        let rank = system.rank();
        let family: Vec<TypeSubset> = match preset {
            Preset::Simplex => {
                if rank < 2 {
                    return Err(ChamberError::PresetInapplicable {
                        preset,
                        reason: format!("rank must be at least 2, got {rank}"),
                    });
                }
                if rank > 20 {
                    return Err(ChamberError::PresetInapplicable {
                        preset,
                        reason: format!("rank {rank} is too large to materialize all proper subsets"),
                    });
                }
                let full = system.full_set();
                for s in 0..rank as u8 {
                    let wall = full.without(s);
                    if !system.is_spherical(wall) {
                        return Err(ChamberError::PresetInapplicable {
                            preset,
                            reason: format!("proper subset {wall} is not spherical"),
                        });
                    }
                }
                full.subsets().filter(|&t| t != full).collect()
            }
            Preset::Interval => {
                if rank != 2 {
                    return Err(ChamberError::PresetInapplicable {
                        preset,
                        reason: format!("rank must be exactly 2, got {rank}"),
                    });
                }
                vec![TypeSubset::singleton(0), TypeSubset::singleton(1)]
            }
        };
        ChamberComplex::validate(system, &family, true)
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    /// The acceptable family, sorted by cardinality then bit pattern;
    /// always starts with the empty set.
    pub fn acceptable(&self) -> &[TypeSubset] {
        &self.acceptable
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn warnings(&self) -> &[ChamberWarning] {
        &self.warnings
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn group_order(&self) -> GroupOrder {
        self.system.parabolic_order(self.system.full_set())
    }

    pub fn is_finite_group(&self) -> bool {
        self.group_order().is_finite()
    }
}
