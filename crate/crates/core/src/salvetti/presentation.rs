//! The fundamental group of the orbit space: generators, braid-type
//! relations read off the 2-cells, and the abelianization cross-check.

use std::fmt::Write as _;

use num_traits::One;

use crate::chamber::ChamberComplex;
use crate::coxeter::{Bond, Elem, TypeSubset};
use crate::homology::{smith_normal_form, HomologySummand, IntMatrix};

use super::SalvettiError;

/// One defining relation: two positive words (generator indices) set equal.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub left: Vec<u8>,
    pub right: Vec<u8>,
}

/// A finite presentation with one generator per Coxeter generator and
/// positive relations only.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    pub generators: usize,
    pub relations: Vec<Relation>,
}

impl Presentation {
    /// Plain-text rendering: a generator line, then one `left = right` line
    /// per relation, with generators named `e1 … en`.
    pub fn to_text(&self) -> String {
        let name = |s: &u8| format!("e{}", s + 1);
        let spell = |w: &[u8]| w.iter().map(name).collect::<Vec<_>>().join(" ");
        let mut out = String::from("generators:");
        for s in 0..self.generators {
            write!(out, " e{}", s + 1).unwrap();
        }
        out.push('\n');
        for rel in &self.relations {
            writeln!(out, "{} = {}", spell(&rel.left), spell(&rel.right)).unwrap();
        }
        out
    }
}

/// The alternating product `Π(s,t:m) = s t s t …` with `m` letters.
pub fn alternating(s: u8, t: u8, m: usize) -> Vec<u8> {
    (0..m).map(|k| if k % 2 == 0 { s } else { t }).collect()
}

/// The presentation of the fundamental group of the orbit space: one
/// generator per Coxeter generator, and for every acceptable 2-subset
/// `{s,t}` the relation `Π(ē_s,ē_t:m_st) = Π(ē_t,ē_s:m_st)`. Pairs outside
/// the acceptable family contribute nothing — their braid relation is absent.
pub fn pi1_presentation(cc: &ChamberComplex) -> Presentation {
    let matrix = cc.system().matrix();
    let mut relations = Vec::new();
    let mut pairs: Vec<(u8, u8)> = cc
        .acceptable()
        .iter()
        .filter(|t| t.len() == 2)
        .map(|t| {
            let mut it = t.iter();
            (it.next().unwrap(), it.next().unwrap())
        })
        .collect();
    pairs.sort_unstable();
    for (s, t) in pairs {
        let m = match matrix.bond(s as usize, t as usize) {
            Bond::Finite(m) => m as usize,
            Bond::Infinite => unreachable!("acceptable subsets are spherical"),
        };
        relations.push(Relation {
            left: alternating(s, t, m),
            right: alternating(t, s, m),
        });
    }
    Presentation {
        generators: cc.rank(),
        relations,
    }
}

/// One oriented edge of the Salvetti 1-skeleton: the 1-cell `e(gen, base)`
/// runs from the vertex of `base` to the vertex of `base·gen`; `inverted`
/// traverses it backwards.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BoundaryEdge {
    pub gen: u8,
    pub base: Elem,
    pub inverted: bool,
}

/// The boundary walk of the 2-cell `(T, w)`, `T = {s,t}` with bond `m`:
/// the `m` edges `e(·, w·Π(s,t:k))` forward, then the `m` edges
/// `e(·, w·Π(t,s:k))` backward. In the quotient this collapses to
/// `Π(ē_s,ē_t:m)·Π(ē_t,ē_s:m)⁻¹`.
pub fn two_cell_boundary(
    cc: &ChamberComplex,
    ty: TypeSubset,
    w: &Elem,
) -> Result<Vec<BoundaryEdge>, SalvettiError> {
    if ty.len() != 2 || !cc.acceptable().contains(&ty) {
        return Err(SalvettiError::NotATwoCell(ty));
    }
    let sys = cc.system();
    let mut it = ty.iter();
    let (s, t) = (it.next().unwrap(), it.next().unwrap());
    let m = match sys.matrix().bond(s as usize, t as usize) {
        Bond::Finite(m) => m as usize,
        Bond::Infinite => return Err(SalvettiError::NotATwoCell(ty)),
    };

    let mut edges = Vec::with_capacity(2 * m);
    for k in 0..m {
        let gen = if k % 2 == 0 { s } else { t };
        let base = sys.multiply(w, &sys.reduce(&alternating(s, t, k)).unwrap());
        edges.push(BoundaryEdge {
            gen,
            base,
            inverted: false,
        });
    }
    for k in (0..m).rev() {
        let gen = if k % 2 == 0 { t } else { s };
        let base = sys.multiply(w, &sys.reduce(&alternating(t, s, k)).unwrap());
        edges.push(BoundaryEdge {
            gen,
            base,
            inverted: true,
        });
    }
    Ok(edges)
}

/// The image of a boundary walk in the orbit space: base points collapse,
/// leaving a word in oriented generator symbols.
pub fn quotient_image(edges: &[BoundaryEdge]) -> Vec<(u8, bool)> {
    edges.iter().map(|e| (e.gen, e.inverted)).collect()
}

/// First homology of the presented group: Smith normal form of the
/// abelianized relation matrix (one column per relation, entries = exponent
/// sums of `left·right⁻¹`).
pub fn h1_from_presentation(p: &Presentation) -> HomologySummand {
    let mut m = IntMatrix::zero(p.generators, p.relations.len());
    for (j, rel) in p.relations.iter().enumerate() {
        for &g in &rel.left {
            m.add(g as usize, j, 1);
        }
        for &g in &rel.right {
            m.add(g as usize, j, -1);
        }
    }
    let snf = smith_normal_form(&m);
    HomologySummand {
        betti: p.generators - snf.rank,
        torsion: snf.factors.into_iter().filter(|f| !f.is_one()).collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chamber::Preset;
    use crate::coxeter::{CoxeterMatrix, CoxeterSystem};
    use num_bigint::BigUint;

    fn dihedral_circle(m: u64) -> ChamberComplex {
        let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m).unwrap());
        ChamberComplex::preset(Preset::Interval, sys).unwrap()
    }

    fn a3_sphere() -> ChamberComplex {
        let sys = CoxeterSystem::new(CoxeterMatrix::linear(&[3, 3]).unwrap());
        ChamberComplex::preset(Preset::Simplex, sys).unwrap()
    }

    #[test]
    fn dihedral_interval_gives_a_free_group() {
        for m in [2u64, 3, 5, 9] {
            let p = pi1_presentation(&dihedral_circle(m));
            assert_eq!(p.generators, 2);
            assert!(p.relations.is_empty(), "m = {m}");
            let h = h1_from_presentation(&p);
            assert_eq!(h.betti, 2);
            assert!(h.torsion.is_empty());
        }
    }

    #[test]
    fn a3_presentation_is_the_braid_presentation() {
        let p = pi1_presentation(&a3_sphere());
        assert_eq!(p.generators, 3);
        assert_eq!(
            p.relations,
            vec![
                Relation {
                    left: vec![0, 1, 0],
                    right: vec![1, 0, 1]
                },
                Relation {
                    left: vec![0, 2],
                    right: vec![2, 0]
                },
                Relation {
                    left: vec![1, 2, 1],
                    right: vec![2, 1, 2]
                },
            ]
        );
        assert_eq!(
            p.to_text(),
            "generators: e1 e2 e3\n\
             e1 e2 e1 = e2 e1 e2\n\
             e1 e3 = e3 e1\n\
             e2 e3 e2 = e3 e2 e3\n"
        );
        let h = h1_from_presentation(&p);
        assert_eq!(h.betti, 1);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn even_bond_abelianization_keeps_generators_apart() {
        // Rank-3 chain with bonds 4, 2 — every bond even. An even relation
        // Π(s,t:2k) = Π(t,s:2k) abelianizes to a zero column (both sides
        // have exponent vector (k,k)), so no generators get identified.
        let sys = CoxeterSystem::new(CoxeterMatrix::linear(&[4, 2]).unwrap());
        let cc = ChamberComplex::preset(Preset::Simplex, sys).unwrap();
        let h = h1_from_presentation(&pi1_presentation(&cc));
        assert_eq!(h.betti, 3);
        assert!(h.torsion.is_empty());
    }

    #[test]
    fn torsion_flows_through_the_abelianization() {
        let p = Presentation {
            generators: 1,
            relations: vec![Relation {
                left: vec![0, 0],
                right: vec![],
            }],
        };
        let h = h1_from_presentation(&p);
        assert_eq!(h.betti, 0);
        assert_eq!(h.torsion, vec![BigUint::from(2u32)]);
    }

    #[test]
    fn two_cell_boundary_golden_m2() {
        let cc = a3_sphere();
        let sys = cc.system();
        let w = sys.identity();
        let ty = TypeSubset::from_members([0, 2]); // bond 2
        let edges = two_cell_boundary(&cc, ty, &w).unwrap();
        let spell: Vec<(u8, Vec<u8>, bool)> = edges
            .iter()
            .map(|e| (e.gen, e.base.word().to_vec(), e.inverted))
            .collect();
        assert_eq!(
            spell,
            vec![
                (0, vec![], false),
                (2, vec![0], false),
                (0, vec![2], true),
                (2, vec![], true),
            ]
        );
    }

    #[test]
    fn two_cell_boundary_golden_m3() {
        let cc = a3_sphere();
        let sys = cc.system();
        let w = sys.generator(2).unwrap();
        let ty = TypeSubset::from_members([0, 1]); // bond 3
        let edges = two_cell_boundary(&cc, ty, &w).unwrap();
        assert_eq!(edges.len(), 6);
        // e(s,w) e(t,ws) e(s,wst) e(t,wts)⁻¹ e(s,wt)⁻¹ e(t,w)⁻¹, base
        // points in canonical form (letters 0 and 2 commute, so w·s = [0,2]).
        let expect = [
            (0u8, vec![2u8], false),
            (1, vec![0, 2], false),
            (0, vec![0, 2, 1], false),
            (1, vec![2, 1, 0], true),
            (0, vec![2, 1], true),
            (1, vec![2], true),
        ];
        for (edge, (gen, base, inv)) in edges.iter().zip(expect.iter()) {
            assert_eq!(edge.gen, *gen);
            assert_eq!(edge.base.word(), base.as_slice());
            assert_eq!(edge.inverted, *inv);
        }
    }

    #[test]
    fn boundary_walks_close_up() {
        let cc = a3_sphere();
        let sys = cc.system();
        for ty in cc.acceptable().iter().filter(|t| t.len() == 2) {
            for w in sys.enumerate(sys.full_set(), None).unwrap() {
                let edges = two_cell_boundary(&cc, *ty, &w).unwrap();
                let mut pos = w.clone();
                for e in &edges {
                    if e.inverted {
                        assert_eq!(pos, sys.mul_gen(&e.base, e.gen));
                        pos = e.base.clone();
                    } else {
                        assert_eq!(pos, e.base);
                        pos = sys.mul_gen(&e.base, e.gen);
                    }
                }
                assert_eq!(pos, w, "walk returns to its base");
            }
        }
    }

    #[test]
    fn quotient_image_is_the_braid_relator() {
        let cc = a3_sphere();
        let sys = cc.system();
        let ty = TypeSubset::from_members([0, 1]);
        let edges = two_cell_boundary(&cc, ty, &sys.reduce(&[1, 2]).unwrap()).unwrap();
        let img = quotient_image(&edges);
        let positive: Vec<u8> = img.iter().filter(|(_, inv)| !inv).map(|(g, _)| *g).collect();
        let inverted: Vec<u8> = img.iter().filter(|(_, inv)| *inv).map(|(g, _)| *g).collect();
        assert_eq!(positive, alternating(0, 1, 3));
        // Read backwards, the inverted tail spells Π(t,s:m).
        let mut rev = inverted.clone();
        rev.reverse();
        assert_eq!(rev, alternating(1, 0, 3));
        // Independence of the base chamber.
        let other = two_cell_boundary(&cc, ty, &sys.identity()).unwrap();
        assert_eq!(img, quotient_image(&other));
    }

    #[test]
    fn non_two_cells_are_rejected() {
        let cc = dihedral_circle(3);
        let sys = cc.system();
        // {s,t} is not acceptable on the circle.
        assert!(matches!(
            two_cell_boundary(&cc, TypeSubset::from_members([0, 1]), &sys.identity()),
            Err(SalvettiError::NotATwoCell(_))
        ));
        assert!(matches!(
            two_cell_boundary(&cc, TypeSubset::singleton(0), &sys.identity()),
            Err(SalvettiError::NotATwoCell(_))
        ));
    }
}
