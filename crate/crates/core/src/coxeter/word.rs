use std::cmp::Ordering;
use std::fmt;

/// A group element, stored as its canonical (ShortLex-least) reduced word in
/// generator indices. Equality of elements is equality of canonical words.
///
/// Elements are only produced by [`super::CoxeterSystem`] operations, which
/// guarantees the canonical-form invariant. The ordering is ShortLex: shorter
/// words first, ties broken lexicographically.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Elem {
    word: Vec<u8>,
}

impl Elem {
    pub(crate) fn from_canonical(word: Vec<u8>) -> Elem {
        Elem { word }
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Word length of the element (the Coxeter length function).
    #[allow(clippy::len_without_is_empty)] // `is_identity` is the emptiness test
    pub fn len(&self) -> usize {
        self.word.len()
    }

    pub fn is_identity(&self) -> bool {
        self.word.is_empty()
    }
}

impl Ord for Elem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.word
            .len()
            .cmp(&other.word.len())
            .then_with(|| self.word.cmp(&other.word))
    }
}

impl PartialOrd for Elem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Elem({self})")
    }
}

impl fmt::Display for Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.word.is_empty() {
            return write!(f, "1");
        }
        for (k, s) in self.word.iter().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A subset of the generator set, as a fixed-width bit set (bit `i` =
/// generator `i`). Ordered by cardinality first, then by bit pattern, which
/// is a linear extension of inclusion.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct TypeSubset(u64);

impl TypeSubset {
    pub const EMPTY: TypeSubset = TypeSubset(0);

    pub fn singleton(s: u8) -> TypeSubset {
        TypeSubset(1u64 << s)
    }

    pub fn from_members(members: impl IntoIterator<Item = u8>) -> TypeSubset {
        let mut bits = 0u64;
        for s in members {
            bits |= 1u64 << s;
        }
        TypeSubset(bits)
    }

    /// The full generator set of a rank-`n` system.
    pub fn full(rank: usize) -> TypeSubset {
        if rank == 64 {
            TypeSubset(u64::MAX)
        } else {
            TypeSubset((1u64 << rank) - 1)
        }
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, s: u8) -> bool {
        self.0 & (1u64 << s) != 0
    }

    pub fn with(self, s: u8) -> TypeSubset {
        TypeSubset(self.0 | (1u64 << s))
    }

    pub fn without(self, s: u8) -> TypeSubset {
        TypeSubset(self.0 & !(1u64 << s))
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_subset_of(self, other: TypeSubset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: TypeSubset) -> TypeSubset {
        TypeSubset(self.0 | other.0)
    }

    pub fn intersection(self, other: TypeSubset) -> TypeSubset {
        TypeSubset(self.0 & other.0)
    }

    /// Member generators in increasing order.
    pub fn iter(self) -> impl Iterator<Item = u8> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let s = bits.trailing_zeros() as u8;
                bits &= bits - 1;
                Some(s)
            }
        })
    }

    /// All subsets of this set, the set itself included.
    pub fn subsets(self) -> impl Iterator<Item = TypeSubset> {
        let mask = self.0;
        let mut cur = 0u64;
        let mut done = false;
        std::iter::from_fn(move || {
            if done {
                return None;
            }
            let out = TypeSubset(cur);
            if cur == mask {
                done = true;
            } else {
                cur = (cur.wrapping_sub(mask)) & mask;
            }
            Some(out)
        })
    }
}

impl Ord for TypeSubset {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0
            .count_ones()
            .cmp(&other.0.count_ones())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for TypeSubset {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for TypeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TypeSubset({self})")
    }
}

impl fmt::Display for TypeSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, s) in self.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "}}")
    }
}

/// A reflection: a conjugate of a generator. Wraps the underlying element.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Reflection {
    elem: Elem,
}

impl Reflection {
    pub(crate) fn from_elem(elem: Elem) -> Reflection {
        Reflection { elem }
    }

    pub fn elem(&self) -> &Elem {
        &self.elem
    }

    pub fn into_elem(self) -> Elem {
        self.elem
    }
}

impl fmt::Display for Reflection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.elem.fmt(f)
    }
}
