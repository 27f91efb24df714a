//! Shared system builders for the benchmark suite.

use salv_core::chamber::{ChamberComplex, Preset};
use salv_core::coxeter::{CoxeterMatrix, CoxeterSystem};

pub fn dihedral_circle(m: u64) -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m).expect("valid bond"));
    ChamberComplex::preset(Preset::Interval, sys).expect("valid chamber")
}

pub fn simplex_sphere(bonds: &[u64]) -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::linear(bonds).expect("valid bonds"));
    ChamberComplex::preset(Preset::Simplex, sys).expect("valid chamber")
}

pub fn affine_a2() -> ChamberComplex {
    let table = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
    let sys = CoxeterSystem::new(CoxeterMatrix::from_table(&table).expect("valid table"));
    ChamberComplex::preset(Preset::Simplex, sys).expect("valid chamber")
}
