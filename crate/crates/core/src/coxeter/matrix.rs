use std::fmt;

use super::CoxeterError;

/// Bond order between two distinct generators: a finite order `m >= 2` or infinity.
///
/// In file encodings and the integer constructors below, `0` stands for an
/// infinite bond.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl Bond {
    pub fn finite(self) -> Option<u32> {
        match self {
            Bond::Finite(m) => Some(m),
            Bond::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Bond::Infinite)
    }

    /// Decode the integer file encoding (`0` = infinite); `None` when the
    /// value does not fit a bond order.
    pub fn decode(value: u64) -> Option<Bond> {
        match value {
            0 => Some(Bond::Infinite),
            m if m <= u32::MAX as u64 => Some(Bond::Finite(m as u32)),
            _ => None,
        }
    }
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

/// A symmetric Coxeter matrix: `m[i][i] = 1`, `m[i][j] = m[j][i] >= 2` off the
/// diagonal (possibly infinite).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    rank: usize,
    bonds: Vec<Bond>,
}

impl CoxeterMatrix {
    /// Generator subsets are stored as 64-bit sets, which caps the rank.
    pub const MAX_RANK: usize = 64;

    pub fn new(entries: Vec<Vec<Bond>>) -> Result<Self, CoxeterError> {
        let rank = entries.len();
        if rank == 0 || rank > Self::MAX_RANK {
            return Err(CoxeterError::InvalidRank(rank));
        }
        for (i, row) in entries.iter().enumerate() {
            if row.len() != rank {
                return Err(CoxeterError::InvalidRank(row.len()));
            }
            if row[i] != Bond::Finite(1) {
                return Err(CoxeterError::BadDiagonal(i));
            }
        }
        for (i, row) in entries.iter().enumerate() {
            for (j, &bond) in row.iter().enumerate().skip(i + 1) {
                if bond != entries[j][i] {
                    return Err(CoxeterError::MatrixAsymmetric { i, j });
                }
                if let Bond::Finite(m) = bond {
                    if m < 2 {
                        return Err(CoxeterError::BadBondOrder { i, j });
                    }
                }
            }
        }
        let bonds = entries.into_iter().flatten().collect();
        Ok(CoxeterMatrix { rank, bonds })
    }

    /// Build from an integer table using the file encoding (`0` = infinite).
    pub fn from_table(table: &[Vec<u64>]) -> Result<Self, CoxeterError> {
        let rank = table.len();
        let mut entries = Vec::with_capacity(rank);
        for (i, row) in table.iter().enumerate() {
            let mut out = Vec::with_capacity(row.len());
            for (j, &v) in row.iter().enumerate() {
                let bond = Bond::decode(v).ok_or(CoxeterError::BadBondOrder { i, j })?;
                out.push(bond);
            }
            entries.push(out);
        }
        CoxeterMatrix::new(entries)
    }

    /// Rank-2 matrix with bond order `m` (`0` = infinite).
    pub fn dihedral(m: u64) -> Result<Self, CoxeterError> {
        CoxeterMatrix::from_table(&[vec![1, m], vec![m, 1]])
    }

    /// Path-shaped matrix: `labels[i]` bonds generator `i` to `i + 1`, all
    /// other pairs commute. `linear(&[3, 3])` is the rank-3 symmetric group.
    pub fn linear(labels: &[u64]) -> Result<Self, CoxeterError> {
        let rank = labels.len() + 1;
        let mut table = vec![vec![2u64; rank]; rank];
        for (i, row) in table.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, &m) in labels.iter().enumerate() {
            table[i][i + 1] = m;
            table[i + 1][i] = m;
        }
        CoxeterMatrix::from_table(&table)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn bond(&self, i: usize, j: usize) -> Bond {
        self.bonds[i * self.rank + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_asymmetry() {
        let err = CoxeterMatrix::from_table(&[vec![1, 3], vec![4, 1]]).unwrap_err();
        assert_eq!(err, CoxeterError::MatrixAsymmetric { i: 0, j: 1 });
    }

    #[test]
    fn rejects_bad_diagonal() {
        let err = CoxeterMatrix::from_table(&[vec![2, 3], vec![3, 1]]).unwrap_err();
        assert_eq!(err, CoxeterError::BadDiagonal(0));
    }

    #[test]
    fn rejects_bond_order_one() {
        let err = CoxeterMatrix::from_table(&[vec![1, 1], vec![1, 1]]).unwrap_err();
        assert_eq!(err, CoxeterError::BadBondOrder { i: 0, j: 1 });
    }

    #[test]
    fn rejects_empty_and_ragged() {
        assert_eq!(
            CoxeterMatrix::from_table(&[]).unwrap_err(),
            CoxeterError::InvalidRank(0)
        );
        assert!(CoxeterMatrix::from_table(&[vec![1, 3], vec![3]]).is_err());
    }

    #[test]
    fn zero_decodes_to_infinite_bond() {
        let m = CoxeterMatrix::dihedral(0).unwrap();
        assert_eq!(m.bond(0, 1), Bond::Infinite);
        assert_eq!(m.bond(1, 0), Bond::Infinite);
        assert_eq!(m.bond(0, 0), Bond::Finite(1));
    }

    #[test]
    fn linear_builds_paths() {
        let m = CoxeterMatrix::linear(&[4, 3]).unwrap();
        assert_eq!(m.rank(), 3);
        assert_eq!(m.bond(0, 1), Bond::Finite(4));
        assert_eq!(m.bond(1, 2), Bond::Finite(3));
        assert_eq!(m.bond(0, 2), Bond::Finite(2));
    }
}
