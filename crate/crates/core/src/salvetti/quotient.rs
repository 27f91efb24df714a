//! The orbit Δ-complex: chains of the Salvetti poset up to the group action.
//!
//! A normalized chain anchors its top cell at the identity, so every group
//! coordinate lies in the finite parabolic of the top type — which is what
//! makes the construction terminate even for infinite groups.

use std::collections::HashMap;

use crate::chamber::ChamberComplex;
use crate::homology::CellComplex;

use super::{sal_leq, SalCell};

/// A Δ-complex whose `d`-simplices are normalized `(d+1)`-chains of Salvetti
/// cells, with ordered face maps. The group acts freely on un-normalized
/// chains; each simplex here is one orbit.
pub struct QuotientComplex {
    simplices: Vec<Vec<Vec<SalCell>>>,
    faces: Vec<Vec<Vec<usize>>>,
}

impl QuotientComplex {
    /// Simplices of dimension `d`, each a chain ending in a cell with
    /// identity element.
    pub fn simplices(&self, d: usize) -> &[Vec<SalCell>] {
        self.simplices.get(d).map_or(&[], |v| v.as_slice())
    }

    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|v| v.len()).collect()
    }

    pub fn euler(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

impl CellComplex for QuotientComplex {
    fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, |v| v.len())
    }

    fn faces(&self, d: usize, i: usize) -> &[usize] {
        &self.faces[d][i]
    }
}

/// Build the quotient complex. Chains are enumerated per top type `U`: all
/// cells strictly below `(U, identity)` have their group coordinate in
/// `W_U`, so each stratum is finite regardless of the whole group.
pub fn quotient_complex(cc: &ChamberComplex) -> QuotientComplex {
    let sys = cc.system();
    let mut simplices: Vec<Vec<Vec<SalCell>>> = vec![Vec::new()];

    for &top_ty in cc.acceptable() {
        let top = SalCell::new(top_ty, sys.identity());

        // Everything strictly below the top: proper acceptable subtypes with
        // coset-minimal coordinates in the (finite) parabolic of the top.
        let mut below: Vec<SalCell> = Vec::new();
        for &t in cc.acceptable() {
            if t == top_ty || !t.is_subset_of(top_ty) {
                continue;
            }
            for v in sys
                .enumerate(top_ty, None)
                .expect("acceptable types are spherical")
            {
                if sys.is_coset_minimal(&v, t) {
                    below.push(SalCell::new(t, v));
                }
            }
        }
        below.sort();

        let n = below.len();
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        for i in 0..n {
            for j in 0..n {
                if i != j && sal_leq(sys, &below[i], &below[j]) {
                    above[i].push(j);
                }
            }
        }

        // Chains inside `below`, extended level by level; a chain of length
        // d plus the top is a d-simplex.
        simplices[0].push(vec![top.clone()]);
        let mut level: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        let mut d = 1usize;
        while !level.is_empty() {
            if simplices.len() <= d {
                simplices.push(Vec::new());
            }
            let mut next: Vec<Vec<usize>> = Vec::new();
            for chain in &level {
                let mut simplex: Vec<SalCell> =
                    chain.iter().map(|&v| below[v].clone()).collect();
                simplex.push(top.clone());
                simplices[d].push(simplex);

                let last = *chain.last().unwrap();
                for &v in &above[last] {
                    let mut ext = chain.clone();
                    ext.push(v);
                    next.push(ext);
                }
            }
            level = next;
            d += 1;
        }
    }

    for dim_list in &mut simplices {
        dim_list.sort();
    }

    // Face maps: deleting a non-top entry keeps the chain normalized;
    // deleting the top re-anchors at the new top's element.
    let index: Vec<HashMap<&Vec<SalCell>, usize>> = simplices
        .iter()
        .map(|v| v.iter().enumerate().map(|(i, s)| (s, i)).collect())
        .collect();
    let mut faces: Vec<Vec<Vec<usize>>> = Vec::with_capacity(simplices.len());
    faces.push(simplices[0].iter().map(|_| Vec::new()).collect());
    for d in 1..simplices.len() {
        let mut dim_faces = Vec::with_capacity(simplices[d].len());
        for simplex in &simplices[d] {
            let mut list = Vec::with_capacity(d + 1);
            for k in 0..=d {
                let tau = if k < d {
                    let mut tau: Vec<SalCell> = simplex.clone();
                    tau.remove(k);
                    tau
                } else {
                    let anchor = sys.inverse(simplex[d - 1].elem());
                    simplex[..d]
                        .iter()
                        .map(|c| SalCell::new(c.ty(), sys.multiply(&anchor, c.elem())))
                        .collect()
                };
                let at = *index[d - 1]
                    .get(&tau)
                    .expect("faces of normalized chains are normalized chains");
                list.push(at);
            }
            dim_faces.push(list);
        }
        faces.push(dim_faces);
    }

    QuotientComplex { simplices, faces }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::Preset;
    use crate::coxeter::{CoxeterMatrix, CoxeterSystem, TypeSubset};
    use crate::homology::{homology, ChainComplex};
    use crate::salvetti::{build_sal, sal_order_complex};

    fn dihedral_circle(m: u64) -> ChamberComplex {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m).unwrap());
        ChamberComplex::preset(Preset::Interval, sys).unwrap()
    }

    fn affine_a2() -> ChamberComplex {
        let table = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
        let sys = CoxeterSystem::new(CoxeterMatrix::from_table(&table).unwrap());
        ChamberComplex::preset(Preset::Simplex, sys).unwrap()
    }

    #[test]
    fn dihedral_quotient_is_a_wedge_of_two_circles() {
        let cc = dihedral_circle(3);
        let q = quotient_complex(&cc);
        assert_eq!(q.counts(), vec![3, 4]);
        assert_eq!(q.euler(), -1);
        let h = homology(&ChainComplex::from_complex(&q).unwrap());
        assert_eq!(h.betti_vector(), vec![1, 2]);
        assert!(h.is_torsion_free());

        // The same holds for every m: the quotient never sees the bond.
        for m in [2u64, 4, 7] {
            let cc = dihedral_circle(m);
            let q = quotient_complex(&cc);
            assert_eq!(q.counts(), vec![3, 4], "m = {m}");
        }
    }

    #[test]
    fn rank1_quotient_is_a_circle() {
        let sys = CoxeterSystem::new(CoxeterMatrix::from_table(&[vec![1]]).unwrap());
        let cc = ChamberComplex::validate(sys, &[TypeSubset::singleton(0)], false).unwrap();
        let q = quotient_complex(&cc);
        assert_eq!(q.counts(), vec![2, 2]);
        let h = homology(&ChainComplex::from_complex(&q).unwrap());
        assert_eq!(h.betti_vector(), vec![1, 1]);
    }

    #[test]
    fn quotient_counts_are_orbit_counts() {
        for m in [2u64, 3, 4] {
            let cc = dihedral_circle(m);
            let q = quotient_complex(&cc);
            let sal = sal_order_complex(&cc, &build_sal(&cc).unwrap());
            let w = 2 * m as usize;
            let scaled: Vec<usize> = q.counts().iter().map(|c| c * w).collect();
            assert_eq!(scaled, sal.counts(), "m = {m}");
        }
    }

    #[test]
    fn affine_quotient_terminates_and_has_the_right_homology() {
        let cc = affine_a2();
        let q = quotient_complex(&cc);
        assert_eq!(q.counts(), vec![7, 42, 36]);
        assert_eq!(q.euler(), 1);
        let h = homology(&ChainComplex::from_complex(&q).unwrap());
        assert_eq!(h.betti_vector(), vec![1, 1, 1]);
        assert!(h.is_torsion_free());
    }

    #[test]
    fn face_maps_satisfy_the_simplicial_identities() {
        let cc = affine_a2();
        let q = quotient_complex(&cc);
        // d_i ∘ d_j = d_{j-1} ∘ d_i for i < j, checked on every 2-simplex.
        for i2 in 0..q.count(2) {
            let f = |k: usize| q.faces(2, i2)[k];
            for j in 1..=2 {
                for i in 0..j {
                    let a = q.faces(1, f(j))[i];
                    let b = q.faces(1, f(i))[j - 1];
                    assert_eq!(a, b, "simplex {i2}, i = {i}, j = {j}");
                }
            }
        }
    }

    #[test]
    fn normalization_anchors_tops_at_identity() {
        let cc = affine_a2();
        let q = quotient_complex(&cc);
        for d in 0..=q.dim() {
            for simplex in q.simplices(d) {
                assert!(simplex.last().unwrap().elem().is_identity());
                for pair in simplex.windows(2) {
                    assert!(pair[0].ty().len() < pair[1].ty().len());
                }
            }
        }
    }
}
