//! The Salvetti-type complex of the arrangement, in both presentations:
//! geometric pairs (face, chamber) and group pairs (type, element), related
//! by the order-reversing bijection [`phi`]. The order complex models the
//! tangent-bundle complement; [`quotient::QuotientComplex`] models its orbit
//! space, and [`presentation`] computes the fundamental group of the latter.

mod presentation;
mod quotient;

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::arrangement::{Arrangement, Chamber, Face, FacePoset};
use crate::chamber::ChamberComplex;
use crate::complex::SimplicialComplex;
use crate::coxeter::{CoxeterError, CoxeterSystem, Elem, TypeSubset};

pub use presentation::{
    alternating, h1_from_presentation, pi1_presentation, quotient_image, two_cell_boundary,
    BoundaryEdge, Presentation, Relation,
};
pub use quotient::{quotient_complex, QuotientComplex};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SalvettiError {
    #[error("malformed pair: {0}")]
    MalformedPair(String),
    #[error("type {0} is not an acceptable 2-subset")]
    NotATwoCell(TypeSubset),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// A cell of the Salvetti complex in the group presentation: a pair of an
/// acceptable type and a chamber coordinate. The cell dimension is the size
/// of the type.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SalCell {
    ty: TypeSubset,
    elem: Elem,
}

impl SalCell {
    pub fn new(ty: TypeSubset, elem: Elem) -> SalCell {
        SalCell { ty, elem }
    }

    pub fn ty(&self) -> TypeSubset {
        self.ty
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn dim(&self) -> usize {
        self.ty.len()
    }
}

impl fmt::Debug for SalCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for SalCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{}, {}⟩", self.ty, self.elem)
    }
}

/// All cells of the Salvetti complex of a finite system, sorted by
/// (dimension, type, element).
pub struct SalPoset {
    cells: Vec<SalCell>,
    index: HashMap<SalCell, usize>,
}

impl SalPoset {
    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> &[SalCell] {
        &self.cells
    }

    pub fn cell(&self, i: usize) -> &SalCell {
        &self.cells[i]
    }

    pub fn index_of(&self, cell: &SalCell) -> Option<usize> {
        self.index.get(cell).copied()
    }
}

/// The group-side partial order: `(T,v) ⪯ (U,w)` iff `T ⊆ U`, `w⁻¹v ∈ W_U`,
/// and `w⁻¹v` is of minimal length in `w⁻¹v·W_T`. Lower-dimensional cells
/// sit at the bottom.
pub fn sal_leq(sys: &CoxeterSystem, a: &SalCell, b: &SalCell) -> bool {
    if !a.ty.is_subset_of(b.ty) {
        return false;
    }
    let u = sys.multiply(&sys.inverse(&b.elem), &a.elem);
    u.word().iter().all(|&s| b.ty.contains(s)) && sys.is_coset_minimal(&u, a.ty)
}

/// The geometric partial order on pairs (face, chamber above it): smaller
/// means larger face dimension and containment of local chambers. Requires
/// both pairs to be well-formed.
pub fn geometric_leq(
    arr: &Arrangement,
    p: &(Face, Chamber),
    q: &(Face, Chamber),
) -> Result<bool, SalvettiError> {
    check_pair(arr, p)?;
    check_pair(arr, q)?;
    if !arr.face_leq(&p.0, &q.0) {
        return Ok(false);
    }
    Ok(arr
        .local_chamber_leq(&p.0, &p.1, &q.0, &q.1)
        .expect("face order checked above"))
}

/// The bijection onto group pairs: `(F, C) ↦ (type of F, element of C)`.
/// Order-reversing: `geometric_leq(p, q) ⟺ sal_leq(phi(q), phi(p))`.
pub fn phi(arr: &Arrangement, p: &(Face, Chamber)) -> Result<SalCell, SalvettiError> {
    check_pair(arr, p)?;
    Ok(SalCell {
        ty: p.0.ty(),
        elem: p.1.elem().clone(),
    })
}

/// Every well-formed (face, chamber) pair of a face poset — the geometric
/// cell set of the Salvetti complex.
pub fn sal_pairs(arr: &Arrangement, poset: &FacePoset) -> Vec<(Face, Chamber)> {
    let mut out = Vec::new();
    let chambers = poset.chambers();
    for face in poset.faces() {
        for chamber in &chambers {
            if arr.face_beneath_chamber(face, chamber) {
                out.push((face.clone(), chamber.clone()));
            }
        }
    }
    out
}

fn check_pair(arr: &Arrangement, p: &(Face, Chamber)) -> Result<(), SalvettiError> {
    if arr.face_beneath_chamber(&p.0, &p.1) {
        Ok(())
    } else {
        Err(SalvettiError::MalformedPair(format!(
            "face {} is not beneath chamber {}",
            p.0, p.1
        )))
    }
}

/// All cells of the Salvetti complex: acceptable types × group elements.
/// Refuses infinite groups — a truncated cell set has no topological meaning
/// here; the quotient complex remains available.
pub fn build_sal(cc: &ChamberComplex) -> Result<SalPoset, SalvettiError> {
    let sys = cc.system();
    let elements = sys.enumerate(sys.full_set(), None)?;
    let mut cells = Vec::with_capacity(cc.acceptable().len() * elements.len());
    for &ty in cc.acceptable() {
        for w in &elements {
            cells.push(SalCell {
                ty,
                elem: w.clone(),
            });
        }
    }
    cells.sort();
    let index = cells
        .iter()
        .enumerate()
        .map(|(i, c)| (c.clone(), i))
        .collect();
    Ok(SalPoset { cells, index })
}

/// The order complex of the Salvetti poset: the simplicial model of the
/// complexified/tangent-bundle complement.
pub fn sal_order_complex(cc: &ChamberComplex, poset: &SalPoset) -> SimplicialComplex {
    let sys = cc.system();
    SimplicialComplex::order_complex(poset.len(), |i, j| {
        i != j && sal_leq(sys, poset.cell(i), poset.cell(j))
    })
}

/// The left action of the group on cells: `u·(T, w) = (T, u·w)`. The action
/// is free on cells and on chains.
pub fn translate_cell(sys: &CoxeterSystem, u: &Elem, cell: &SalCell) -> SalCell {
    SalCell {
        ty: cell.ty,
        elem: sys.multiply(u, &cell.elem),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::Preset;
    use crate::coxeter::CoxeterMatrix;
    use crate::homology::{euler, homology, ChainComplex};

    fn dihedral_circle(m: u64) -> ChamberComplex {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m).unwrap());
        ChamberComplex::preset(Preset::Interval, sys).unwrap()
    }

    fn a3_sphere() -> ChamberComplex {
        let sys = CoxeterSystem::new(CoxeterMatrix::linear(&[3, 3]).unwrap());
        ChamberComplex::preset(Preset::Simplex, sys).unwrap()
    }

    fn rank1_halfline() -> ChamberComplex {
        let sys = CoxeterSystem::new(CoxeterMatrix::from_table(&[vec![1]]).unwrap());
        ChamberComplex::validate(sys, &[TypeSubset::singleton(0)], false).unwrap()
    }

    #[test]
    fn cell_counts() {
        assert_eq!(build_sal(&dihedral_circle(3)).unwrap().len(), 18);
        assert_eq!(build_sal(&rank1_halfline()).unwrap().len(), 4);
        assert_eq!(build_sal(&a3_sphere()).unwrap().len(), 168);
    }

    #[test]
    fn infinite_group_is_refused() {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(0).unwrap());
        let cc = ChamberComplex::preset(Preset::Interval, sys).unwrap();
        assert!(matches!(
            build_sal(&cc),
            Err(SalvettiError::Coxeter(CoxeterError::WouldNotTerminate(_)))
        ));
    }

    #[test]
    fn sal_leq_golden_cases() {
        let cc = dihedral_circle(3);
        let sys = cc.system();
        let id = sys.identity();
        let s = sys.generator(0).unwrap();
        let t = sys.generator(1).unwrap();
        let e = TypeSubset::EMPTY;
        let ty_s = TypeSubset::singleton(0);

        // (∅,w) ⪯ ({s},w) and (∅,ws) ⪯ ({s},w).
        assert!(sal_leq(sys, &SalCell::new(e, id.clone()), &SalCell::new(ty_s, id.clone())));
        assert!(sal_leq(sys, &SalCell::new(e, s.clone()), &SalCell::new(ty_s, id.clone())));
        // (∅,wt) is not beneath ({s},w).
        assert!(!sal_leq(sys, &SalCell::new(e, t.clone()), &SalCell::new(ty_s, id.clone())));
        // ({s},[s]) ⪯̸ ({s},[]): s is not minimal in sW_∅ … rather, the
        // minimality of w⁻¹v = s with respect to T = {s} fails.
        assert!(!sal_leq(sys, &SalCell::new(ty_s, s.clone()), &SalCell::new(ty_s, id.clone())));
        // Reflexive.
        assert!(sal_leq(sys, &SalCell::new(ty_s, s.clone()), &SalCell::new(ty_s, s.clone())));
    }

    #[test]
    fn sal_leq_is_a_partial_order() {
        let cc = dihedral_circle(4);
        let sys = cc.system();
        let poset = build_sal(&cc).unwrap();
        let n = poset.len();
        for i in 0..n {
            assert!(sal_leq(sys, poset.cell(i), poset.cell(i)));
            for j in 0..n {
                let ij = sal_leq(sys, poset.cell(i), poset.cell(j));
                if ij && sal_leq(sys, poset.cell(j), poset.cell(i)) {
                    assert_eq!(i, j, "antisymmetry");
                }
                for k in 0..n {
                    if ij && sal_leq(sys, poset.cell(j), poset.cell(k)) {
                        assert!(sal_leq(sys, poset.cell(i), poset.cell(k)), "transitivity");
                    }
                }
            }
        }
    }

    #[test]
    fn order_complex_of_the_circle_family() {
        let cc = dihedral_circle(3);
        let poset = build_sal(&cc).unwrap();
        let sc = sal_order_complex(&cc, &poset);
        assert_eq!(sc.counts(), vec![18, 24]);
        assert_eq!(sc.euler(), -6);
        let h = homology(&ChainComplex::from_complex(&sc).unwrap());
        assert_eq!(h.betti_vector(), vec![1, 7]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn rank1_salvetti_is_a_circle() {
        let cc = rank1_halfline();
        let poset = build_sal(&cc).unwrap();
        let sc = sal_order_complex(&cc, &poset);
        assert_eq!(sc.counts(), vec![4, 4]);
        let h = homology(&ChainComplex::from_complex(&sc).unwrap());
        assert_eq!(h.betti_vector(), vec![1, 1]);
    }

    #[test]
    fn a3_euler_characteristic() {
        let cc = a3_sphere();
        let poset = build_sal(&cc).unwrap();
        let sc = sal_order_complex(&cc, &poset);
        let chain = ChainComplex::from_complex(&sc).unwrap();
        assert_eq!(euler(&chain), 24); // (−1)^l·|W| with l = 2
    }

    #[test]
    fn phi_is_an_order_reversing_bijection_on_i2_3() {
        let cc = dihedral_circle(3);
        let arr = Arrangement::new(&cc);
        let fposet = arr.build_faces(None).unwrap();
        let pairs = sal_pairs(&arr, &fposet);
        let sposet = build_sal(&cc).unwrap();
        assert_eq!(pairs.len(), sposet.len());

        // Bijectivity: the images are pairwise distinct cells of the poset.
        let mut seen = std::collections::HashSet::new();
        for p in &pairs {
            let img = phi(&arr, p).unwrap();
            assert!(sposet.index_of(&img).is_some());
            assert!(seen.insert(img));
        }

        // Order reversal, exhaustively.
        let sys = cc.system();
        for p in &pairs {
            for q in &pairs {
                let geo = geometric_leq(&arr, p, q).unwrap();
                let alg = sal_leq(
                    sys,
                    &phi(&arr, q).unwrap(),
                    &phi(&arr, p).unwrap(),
                );
                assert_eq!(geo, alg, "p = {p:?}, q = {q:?}");
            }
        }
    }

    #[test]
    fn malformed_pairs_are_rejected() {
        let cc = dihedral_circle(3);
        let arr = Arrangement::new(&cc);
        let sys = cc.system();
        let t = sys.generator(1).unwrap();
        let vertex = arr.face(&sys.identity(), TypeSubset::singleton(0)).unwrap();
        let p = (vertex, arr.chamber(t)); // chamber [t] is not above ([], {s})
        assert!(matches!(
            phi(&arr, &p),
            Err(SalvettiError::MalformedPair(_))
        ));
    }

    #[test]
    fn action_on_cells_is_free() {
        let cc = dihedral_circle(3);
        let sys = cc.system();
        let poset = build_sal(&cc).unwrap();
        for u in sys.enumerate(sys.full_set(), None).unwrap() {
            if u.is_identity() {
                continue;
            }
            for cell in poset.cells() {
                assert_ne!(&translate_cell(sys, &u, cell), cell);
            }
        }
    }
}
