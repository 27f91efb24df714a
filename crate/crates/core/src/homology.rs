//! Exact integer homology: chain complexes, Smith normal form, Euler
//! characteristics.
//!
//! All arithmetic is exact. Smith normal form works over arbitrary-precision
//! integers and always pivots on a nonzero entry of minimal absolute value;
//! boundary matrices enter with entries in {-1, 0, 1}, so growth stays tame,
//! but correctness never depends on that.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum HomologyError {
    #[error("boundary composition is nonzero at degree {d}, entry ({row}, {col})")]
    BoundaryCompositionNonzero { d: usize, row: usize, col: usize },
    #[error("chain complex shape mismatch at degree {d}: matrix is {rows}x{cols}, expected {expected_rows}x{expected_cols}")]
    ShapeMismatch {
        d: usize,
        rows: usize,
        cols: usize,
        expected_rows: usize,
        expected_cols: usize,
    },
}

/// Anything with cells per dimension and, for each cell, the ordered list of
/// its codimension-one faces (position `k` = face omitting vertex `k`).
/// Boundary maps are the alternating sums of these.
pub trait CellComplex {
    fn dim(&self) -> usize;
    fn count(&self, d: usize) -> usize;
    fn faces(&self, d: usize, i: usize) -> &[usize];
}

/// Dense integer matrix with `i64` entries (boundary matrices are tiny-valued;
/// Smith normal form promotes to big integers internally).
#[derive(Clone, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zero(rows: usize, cols: usize) -> IntMatrix {
        IntMatrix {
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<i64>>) -> IntMatrix {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix");
        IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn add(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] += v;
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "IntMatrix {}x{}", self.rows, self.cols)?;
        for i in 0..self.rows {
            for j in 0..self.cols {
                write!(f, "{:>4}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Result of Smith normal form: the nonzero invariant factors `d_1 | d_2 |
/// ... | d_r` (ones included) and the rank `r`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Snf {
    pub factors: Vec<BigUint>,
    pub rank: usize,
}

/// Smith normal form by exact integer elimination. Pivots always take a
/// nonzero entry of minimal absolute value in the remaining submatrix (first
/// such in row-major order), and each pivot is made to divide everything it
/// leaves behind, so the diagonal comes out as a divisibility chain.
// Row operations read one row while writing another, so iterator forms
// would need split_at_mut; the index form is the algorithm.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(matrix: &IntMatrix) -> Snf {
    let rows = matrix.rows();
    let cols = matrix.cols();
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(matrix.get(i, j))).collect())
        .collect();

    let mut factors = Vec::new();
    let mut k = 0usize;
    while k < rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(&m, k) else {
            break;
        };
        m.swap(k, pi);
        swap_cols(&mut m, k, pj);

        loop {
            // Clear column k below the pivot, re-pivoting on remainders.
            let mut dirty = false;
            for i in (k + 1)..rows {
                if m[i][k].is_zero() {
                    continue;
                }
                let q = &m[i][k] / &m[k][k];
                if !q.is_zero() {
                    for j in k..cols {
                        let sub = &q * &m[k][j];
                        m[i][j] -= sub;
                    }
                }
                if !m[i][k].is_zero() {
                    m.swap(k, i);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Clear row k to the right of the pivot.
            for j in (k + 1)..cols {
                if m[k][j].is_zero() {
                    continue;
                }
                let q = &m[k][j] / &m[k][k];
                if !q.is_zero() {
                    for i in k..rows {
                        let sub = &q * &m[i][k];
                        m[i][j] -= sub;
                    }
                }
                if !m[k][j].is_zero() {
                    swap_cols(&mut m, k, j);
                    dirty = true;
                }
            }
            if dirty {
                continue;
            }
            // Pivot must divide the remaining submatrix; if not, fold the
            // offending row into row k and keep reducing.
            let offender = ((k + 1)..rows).find(|&i| {
                ((k + 1)..cols).any(|j| !(&m[i][j] % &m[k][k]).is_zero())
            });
            match offender {
                Some(i) => {
                    for j in k..cols {
                        let add = m[i][j].clone();
                        m[k][j] += add;
                    }
                }
                None => break,
            }
        }

        if m[k][k].is_negative() {
            for j in k..cols {
                m[k][j] = -m[k][j].clone();
            }
        }
        factors.push(m[k][k].magnitude().clone());
        k += 1;
    }

    Snf { factors, rank: k }
}

fn min_abs_entry(m: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in m.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if m[bi][bj].magnitude() <= v.magnitude() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(m: &mut [Vec<BigInt>], a: usize, b: usize) {
    if a != b {
        for row in m.iter_mut() {
            row.swap(a, b);
        }
    }
}

/// Rank over the rationals by fraction-free (Bareiss) elimination — an
/// independent route used to cross-check Smith normal form.
pub fn rank_over_rationals(matrix: &IntMatrix) -> usize {
    let rows = matrix.rows();
    let cols = matrix.cols();
    let mut m: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| BigInt::from(matrix.get(i, j))).collect())
        .collect();
    let mut prev = BigInt::from(1);
    let mut rank = 0usize;
    let mut row = 0usize;
    for col in 0..cols {
        if row >= rows {
            break;
        }
        let Some(p) = (row..rows).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        for i in (row + 1)..rows {
            for j in (col + 1)..cols {
                let num = &m[row][col] * &m[i][j] - &m[i][col] * &m[row][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[row][col].clone();
        row += 1;
        rank += 1;
    }
    rank
}

/// A chain complex of free abelian groups with verified boundary maps.
pub struct ChainComplex {
    counts: Vec<usize>,
    boundaries: Vec<IntMatrix>, // boundaries[d - 1] : C_d -> C_{d-1}
}

impl fmt::Debug for ChainComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ChainComplex")
            .field("counts", &self.counts)
            .finish()
    }
}

impl ChainComplex {
    /// Build from explicit data; checks shapes and that consecutive
    /// boundaries compose to zero.
    pub fn new(counts: Vec<usize>, boundaries: Vec<IntMatrix>) -> Result<ChainComplex, HomologyError> {
        assert!(!counts.is_empty(), "a chain complex needs at least degree 0");
        assert_eq!(boundaries.len() + 1, counts.len(), "one boundary per degree >= 1");
        for (d, b) in boundaries.iter().enumerate() {
            let (er, ec) = (counts[d], counts[d + 1]);
            if b.rows() != er || b.cols() != ec {
                return Err(HomologyError::ShapeMismatch {
                    d: d + 1,
                    rows: b.rows(),
                    cols: b.cols(),
                    expected_rows: er,
                    expected_cols: ec,
                });
            }
        }
        for d in 1..boundaries.len() {
            let (lo, hi) = (&boundaries[d - 1], &boundaries[d]);
            for i in 0..lo.rows() {
                for j in 0..hi.cols() {
                    let mut acc: i64 = 0;
                    for k in 0..lo.cols() {
                        acc += lo.get(i, k) * hi.get(k, j);
                    }
                    if acc != 0 {
                        return Err(HomologyError::BoundaryCompositionNonzero {
                            d: d + 1,
                            row: i,
                            col: j,
                        });
                    }
                }
            }
        }
        Ok(ChainComplex { counts, boundaries })
    }

    /// Simplicial-style boundary of a cell complex: alternating signs over
    /// the ordered face list. Faces may repeat; coefficients accumulate.
    pub fn from_complex<C: CellComplex>(complex: &C) -> Result<ChainComplex, HomologyError> {
        let dim = complex.dim();
        let counts: Vec<usize> = (0..=dim).map(|d| complex.count(d)).collect();
        let mut boundaries = Vec::new();
        for d in 1..=dim {
            let mut b = IntMatrix::zero(counts[d - 1], counts[d]);
            for i in 0..counts[d] {
                let faces = complex.faces(d, i);
                assert_eq!(faces.len(), d + 1, "a d-cell has d + 1 faces");
                for (k, &f) in faces.iter().enumerate() {
                    b.add(f, i, if k % 2 == 0 { 1 } else { -1 });
                }
            }
            boundaries.push(b);
        }
        ChainComplex::new(counts, boundaries)
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn dim(&self) -> usize {
        self.counts.len() - 1
    }

    /// The boundary map out of degree `d`, when `1 <= d <= dim`.
    pub fn boundary(&self, d: usize) -> Option<&IntMatrix> {
        if d == 0 {
            None
        } else {
            self.boundaries.get(d - 1)
        }
    }
}

/// One homology group: free rank plus invariant torsion factors (each > 1,
/// in divisibility order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologySummand {
    pub betti: usize,
    pub torsion: Vec<BigUint>,
}

impl fmt::Display for HomologySummand {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        match self.betti {
            0 => {}
            1 => parts.push("Z".into()),
            n => parts.push(format!("Z^{n}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Unreduced integral homology in every degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HomologyResult {
    pub degrees: Vec<HomologySummand>,
}

impl HomologyResult {
    pub fn betti_vector(&self) -> Vec<usize> {
        self.degrees.iter().map(|h| h.betti).collect()
    }

    pub fn euler_from_betti(&self) -> i64 {
        self.degrees
            .iter()
            .enumerate()
            .map(|(d, h)| {
                if d % 2 == 0 {
                    h.betti as i64
                } else {
                    -(h.betti as i64)
                }
            })
            .sum()
    }

    pub fn is_torsion_free(&self) -> bool {
        self.degrees.iter().all(|h| h.torsion.is_empty())
    }
}

/// Homology of a verified chain complex via Smith normal form:
/// `betti_d = #cells_d - rank d_d - rank d_{d+1}`, torsion in degree `d`
/// from the invariant factors of `d_{d+1}`.
pub fn homology(cc: &ChainComplex) -> HomologyResult {
    let dim = cc.dim();
    let snfs: Vec<Snf> = (1..=dim)
        .map(|d| smith_normal_form(cc.boundary(d).unwrap()))
        .collect();
    let rank = |d: usize| -> usize {
        if d == 0 || d > dim {
            0
        } else {
            snfs[d - 1].rank
        }
    };
    let one = BigUint::from(1u32);
    let degrees = (0..=dim)
        .map(|d| {
            let torsion = if d < dim {
                snfs[d]
                    .factors
                    .iter()
                    .filter(|&f| f > &one)
                    .cloned()
                    .collect()
            } else {
                Vec::new()
            };
            HomologySummand {
                betti: cc.counts()[d] - rank(d) - rank(d + 1),
                torsion,
            }
        })
        .collect();
    HomologyResult { degrees }
}

/// Euler characteristic straight from the cell counts.
pub fn euler(cc: &ChainComplex) -> i64 {
    cc.counts()
        .iter()
        .enumerate()
        .map(|(d, &c)| if d % 2 == 0 { c as i64 } else { -(c as i64) })
        .sum()
}
