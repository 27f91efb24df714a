//! The combinatorial arrangement: faces as parabolic cosets, chambers as
//! group elements, separation sets, gallery distance, projections, and the
//! order complex modeling the ambient manifold.

use std::collections::{BTreeSet, HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, RwLock};

use thiserror::Error;

use crate::chamber::ChamberComplex;
use crate::complex::SimplicialComplex;
use crate::coxeter::{CoxeterError, CoxeterSystem, Elem, Reflection, TypeSubset};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrangementError {
    #[error("type {0} is not in the acceptable family")]
    FaceTypeNotAcceptable(TypeSubset),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error("the face poset is truncated; homology over it would be meaningless")]
    TruncatedPoset,
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
}

/// A chamber of the arrangement. Chambers are in bijection with group
/// elements; the fundamental chamber is the identity.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Chamber {
    elem: Elem,
}

impl Chamber {
    pub fn elem(&self) -> &Elem {
        &self.elem
    }
}

impl fmt::Debug for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Chamber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "C({})", self.elem)
    }
}

/// A face of the arrangement: the parabolic coset `rep · W_type`, keyed by
/// its unique minimal-length representative. Low-dimensional faces carry
/// large type subsets; chambers are the faces of type ∅.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Face {
    rep: Elem,
    ty: TypeSubset,
}

impl Face {
    pub fn rep(&self) -> &Elem {
        &self.rep
    }

    pub fn ty(&self) -> TypeSubset {
        self.ty
    }
}

impl Ord for Face {
    fn cmp(&self, other: &Face) -> std::cmp::Ordering {
        (self.ty, &self.rep).cmp(&(other.ty, &other.rep))
    }
}

impl PartialOrd for Face {
    fn partial_cmp(&self, other: &Face) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Face {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.rep, self.ty)
    }
}

/// The face poset of the arrangement. For infinite groups the poset is a
/// length-truncated fragment and says so.
pub struct FacePoset {
    faces: Vec<Face>,
    index: HashMap<Face, usize>,
    truncated: bool,
}

impl FacePoset {
    pub fn len(&self) -> usize {
        self.faces.len()
    }

    pub fn is_empty(&self) -> bool {
        self.faces.is_empty()
    }

    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn face(&self, i: usize) -> &Face {
        &self.faces[i]
    }

    pub fn index_of(&self, face: &Face) -> Option<usize> {
        self.index.get(face).copied()
    }

    pub fn truncated(&self) -> bool {
        self.truncated
    }

    /// The chambers of the poset (faces of empty type), in enumeration order.
    pub fn chambers(&self) -> Vec<Chamber> {
        self.faces
            .iter()
            .filter(|f| f.ty.is_empty())
            .map(|f| Chamber { elem: f.rep.clone() })
            .collect()
    }
}

/// Query surface over a chamber complex: all relational structure of the
/// arrangement is derived on demand from the group. Reflection sets of the
/// standard parabolics are cached per type.
pub struct Arrangement<'a> {
    cc: &'a ChamberComplex,
    parabolic_reflections: RwLock<HashMap<TypeSubset, Arc<Vec<Elem>>>>,
}

impl<'a> Arrangement<'a> {
    pub fn new(cc: &'a ChamberComplex) -> Arrangement<'a> {
        Arrangement {
            cc,
            parabolic_reflections: RwLock::new(HashMap::new()),
        }
    }

    pub fn chamber_complex(&self) -> &ChamberComplex {
        self.cc
    }

    pub fn system(&self) -> &CoxeterSystem {
        self.cc.system()
    }

    pub fn chamber(&self, elem: Elem) -> Chamber {
        Chamber { elem }
    }

    pub fn fundamental_chamber(&self) -> Chamber {
        Chamber {
            elem: self.system().identity(),
        }
    }

    /// The face of type `ty` whose closure contains the chamber of `elem`;
    /// the representative is canonicalized to the coset minimum.
    pub fn face(&self, elem: &Elem, ty: TypeSubset) -> Result<Face, ArrangementError> {
        if !self.cc.acceptable().contains(&ty) {
            return Err(ArrangementError::FaceTypeNotAcceptable(ty));
        }
        Ok(Face {
            rep: self.system().coset_min(elem, ty),
            ty,
        })
    }

    /// A chamber viewed as its own codimension-0 face.
    pub fn chamber_as_face(&self, c: &Chamber) -> Face {
        Face {
            rep: c.elem.clone(),
            ty: TypeSubset::EMPTY,
        }
    }

    /// Face order: `a ≤ b` iff `a` lies in the closure of `b`, i.e.
    /// `b.ty ⊆ a.ty` and the coset of `b` is contained in the coset of `a`.
    pub fn face_leq(&self, a: &Face, b: &Face) -> bool {
        b.ty.is_subset_of(a.ty) && self.in_parabolic(&self.quotient_elem(&a.rep, &b.rep), a.ty)
    }

    /// True when the chamber lies above the face (the face is in its closure).
    pub fn face_beneath_chamber(&self, f: &Face, c: &Chamber) -> bool {
        self.face_leq(f, &self.chamber_as_face(c))
    }

    /// All faces `(coset_min(w, T), T)`, for `w` ranging over the group (or
    /// over words up to `max_length`, in which case the poset is flagged as
    /// truncated whenever the enumeration actually hit the bound).
    pub fn build_faces(&self, max_length: Option<usize>) -> Result<FacePoset, ArrangementError> {
        let sys = self.system();
        let full = sys.full_set();
        let (elements, truncated) = match max_length {
            None => (sys.enumerate(full, None)?, false),
            Some(bound) => {
                // Probe one level deeper: the poset is complete iff nothing
                // lives beyond the bound.
                let probe = sys.enumerate(full, Some(bound + 1))?;
                let truncated = probe.iter().any(|w| w.len() > bound);
                let elements = probe.into_iter().filter(|w| w.len() <= bound).collect();
                (elements, truncated)
            }
        };

        let mut seen: HashSet<Face> = HashSet::new();
        let mut faces: Vec<Face> = Vec::new();
        for w in &elements {
            for &ty in self.cc.acceptable() {
                let face = Face {
                    rep: sys.coset_min(w, ty),
                    ty,
                };
                if seen.insert(face.clone()) {
                    faces.push(face);
                }
            }
        }
        faces.sort();
        let index = faces
            .iter()
            .enumerate()
            .map(|(i, f)| (f.clone(), i))
            .collect();
        Ok(FacePoset {
            faces,
            index,
            truncated,
        })
    }

    /// The set `R(C, D)` of walls separating two chambers: the inversion set
    /// of `C⁻¹D` conjugated back by `C`. Symmetric in its arguments.
    pub fn separating(&self, c: &Chamber, d: &Chamber) -> BTreeSet<Reflection> {
        let sys = self.system();
        let u = self.quotient_elem(&c.elem, &d.elem);
        sys.inversion_set(&u)
            .into_iter()
            .map(|r| Reflection::from_elem(self.conjugate(&c.elem, r.elem())))
            .collect()
    }

    /// Gallery distance: the number of separating walls, `ℓ(C⁻¹D)`.
    pub fn distance(&self, c: &Chamber, d: &Chamber) -> usize {
        self.quotient_elem(&c.elem, &d.elem).len()
    }

    /// The projection `F∘C`: the chamber above `F` nearest to `C`, which is
    /// `C · coset_min(C⁻¹ · F.rep, F.type)`.
    pub fn project(&self, f: &Face, c: &Chamber) -> Chamber {
        let sys = self.system();
        let into_coset = self.quotient_elem(&c.elem, &f.rep);
        Chamber {
            elem: sys.multiply(&c.elem, &sys.coset_min(&into_coset, f.ty)),
        }
    }

    /// The walls through a face: the reflections of `W_type` conjugated by
    /// the representative.
    pub fn walls_through(&self, f: &Face) -> Vec<Reflection> {
        let base = self.reflections_of_parabolic(f.ty);
        base.iter()
            .map(|r| Reflection::from_elem(self.conjugate(&f.rep, r)))
            .collect()
    }

    /// Local chamber comparison `C_F ⊆ D_G` for `F ≤ G`: true iff no wall
    /// through `G` separates `C` from `D`.
    pub fn local_chamber_leq(
        &self,
        f: &Face,
        c: &Chamber,
        g: &Face,
        d: &Chamber,
    ) -> Result<bool, ArrangementError> {
        if !self.face_leq(f, g) {
            return Err(ArrangementError::PreconditionViolated(format!(
                "local comparison requires {f} ≤ {g} in the face order"
            )));
        }
        let sep = self.separating(c, d);
        Ok(self
            .walls_through(g)
            .iter()
            .all(|wall| !sep.contains(wall)))
    }

    /// The order complex of the full face poset: the barycentric subdivision
    /// of the ambient manifold.
    pub fn manifold_complex(&self, poset: &FacePoset) -> Result<SimplicialComplex, ArrangementError> {
        if poset.truncated() {
            return Err(ArrangementError::TruncatedPoset);
        }
        Ok(SimplicialComplex::order_complex(poset.len(), |i, j| {
            i != j && self.face_leq(poset.face(i), poset.face(j))
        }))
    }

    /// The order complex of the subposet of faces with nonempty type: the
    /// union of all walls.
    pub fn walls_subcomplex(&self, poset: &FacePoset) -> Result<SimplicialComplex, ArrangementError> {
        if poset.truncated() {
            return Err(ArrangementError::TruncatedPoset);
        }
        let sub: Vec<usize> = (0..poset.len())
            .filter(|&i| !poset.face(i).ty.is_empty())
            .collect();
        Ok(SimplicialComplex::order_complex(sub.len(), |i, j| {
            i != j && self.face_leq(poset.face(sub[i]), poset.face(sub[j]))
        }))
    }

    /// Left translation of a face by a group element.
    pub fn translate_face(&self, u: &Elem, f: &Face) -> Face {
        let sys = self.system();
        Face {
            rep: sys.coset_min(&sys.multiply(u, &f.rep), f.ty),
            ty: f.ty,
        }
    }

    /// Left translation of a chamber by a group element.
    pub fn translate_chamber(&self, u: &Elem, c: &Chamber) -> Chamber {
        Chamber {
            elem: self.system().multiply(u, &c.elem),
        }
    }

    fn quotient_elem(&self, a: &Elem, b: &Elem) -> Elem {
        let sys = self.system();
        sys.multiply(&sys.inverse(a), b)
    }

    fn conjugate(&self, u: &Elem, r: &Elem) -> Elem {
        let sys = self.system();
        sys.multiply(&sys.multiply(u, r), &sys.inverse(u))
    }

    fn in_parabolic(&self, w: &Elem, t: TypeSubset) -> bool {
        w.word().iter().all(|&s| t.contains(s))
    }

    fn reflections_of_parabolic(&self, t: TypeSubset) -> Arc<Vec<Elem>> {
        if let Some(hit) = self.parabolic_reflections.read().unwrap().get(&t) {
            return Arc::clone(hit);
        }
        let sys = self.system();
        let refls: Vec<Elem> = sys
            .enumerate(t, None)
            .expect("acceptable types are spherical")
            .into_iter()
            .filter(|e| sys.is_reflection(e))
            .collect();
        let arc = Arc::new(refls);
        self.parabolic_reflections
            .write()
            .unwrap()
            .insert(t, Arc::clone(&arc));
        arc
    }
}
