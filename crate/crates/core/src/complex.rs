//! Order complexes: simplicial complexes of chains in a finite poset.

use std::collections::HashMap;

use crate::homology::CellComplex;

/// A finite simplicial complex arising as the order complex of a poset.
///
/// A `d`-simplex is a chain of `d + 1` vertices, stored in increasing poset
/// order; the face omitting position `k` is precomputed, so the complex can
/// feed a chain complex directly.
pub struct SimplicialComplex {
    simplices: Vec<Vec<Vec<usize>>>,
    faces: Vec<Vec<Vec<usize>>>,
}

impl SimplicialComplex {
    /// Order complex of the strict relation `less` on vertices `0..n`.
    /// `less` must be irreflexive and transitive; chains are enumerated by
    /// depth-first extension, which relies on transitivity.
    pub fn order_complex(n: usize, less: impl Fn(usize, usize) -> bool) -> SimplicialComplex {
        let mut above: Vec<Vec<usize>> = vec![Vec::new(); n];
        for (i, ups) in above.iter_mut().enumerate() {
            for j in 0..n {
                if i != j && less(i, j) {
                    ups.push(j);
                }
            }
        }

        let mut simplices: Vec<Vec<Vec<usize>>> = Vec::new();
        let mut level: Vec<Vec<usize>> = (0..n).map(|v| vec![v]).collect();
        while !level.is_empty() {
            let mut next: Vec<Vec<usize>> = Vec::new();
            for chain in &level {
                let last = *chain.last().unwrap();
                for &v in &above[last] {
                    let mut ext = chain.clone();
                    ext.push(v);
                    next.push(ext);
                }
            }
            simplices.push(std::mem::take(&mut level));
            level = next;
        }
        if simplices.is_empty() {
            simplices.push(Vec::new());
        }

        let faces = face_tables(&simplices);
        SimplicialComplex { simplices, faces }
    }

    /// Number of simplices in each dimension.
    pub fn counts(&self) -> Vec<usize> {
        self.simplices.iter().map(|level| level.len()).collect()
    }

    pub fn dim(&self) -> usize {
        self.simplices.len() - 1
    }

    pub fn simplices(&self, d: usize) -> &[Vec<usize>] {
        &self.simplices[d]
    }

    pub fn euler(&self) -> i64 {
        self.counts()
            .iter()
            .enumerate()
            .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
            .sum()
    }
}

/// Index, per dimension `d >= 1` and simplex, of the face omitting each
/// position. Panics if a face is missing, which would mean the chain family
/// is not closed under deletion.
fn face_tables(simplices: &[Vec<Vec<usize>>]) -> Vec<Vec<Vec<usize>>> {
    let mut out: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    for d in 1..simplices.len() {
        let index: HashMap<&[usize], usize> = simplices[d - 1]
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let level = simplices[d]
            .iter()
            .map(|simplex| {
                (0..simplex.len())
                    .map(|k| {
                        let mut face = simplex.clone();
                        face.remove(k);
                        *index
                            .get(face.as_slice())
                            .expect("face of a chain must be a chain")
                    })
                    .collect()
            })
            .collect();
        out.push(level);
    }
    out
}

impl CellComplex for SimplicialComplex {
    fn dim(&self) -> usize {
        self.dim()
    }

    fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, |level| level.len())
    }

    fn faces(&self, d: usize, i: usize) -> &[usize] {
        &self.faces[d][i]
    }
}
