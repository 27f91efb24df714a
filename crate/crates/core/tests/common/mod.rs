//! Shared test support: standard chamber complexes and an independent word
//! oracle.
//!
//! The oracle enumerates a finite Coxeter group by Todd–Coxeter coset
//! enumeration over the trivial subgroup — driven purely by the presentation,
//! sharing no machinery with the library's word engine — and extracts the
//! ShortLex-least word for every element by breadth-first search over the
//! finished Cayley table.

#![allow(dead_code)]

use std::collections::VecDeque;

use salv_core::chamber::{ChamberComplex, Preset};
use salv_core::coxeter::{CoxeterMatrix, CoxeterSystem};

pub fn dihedral_circle(m: u64) -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::dihedral(m).unwrap());
    ChamberComplex::preset(Preset::Interval, sys).unwrap()
}

pub fn simplex_sphere(bonds: &[u64]) -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::linear(bonds).unwrap());
    ChamberComplex::preset(Preset::Simplex, sys).unwrap()
}

pub fn a3_sphere() -> ChamberComplex {
    simplex_sphere(&[3, 3])
}

pub fn b3_sphere() -> ChamberComplex {
    simplex_sphere(&[4, 3])
}

pub fn h3_sphere() -> ChamberComplex {
    simplex_sphere(&[5, 3])
}

pub fn affine_a2() -> ChamberComplex {
    let table = vec![vec![1, 3, 3], vec![3, 1, 3], vec![3, 3, 1]];
    let sys = CoxeterSystem::new(CoxeterMatrix::from_table(&table).unwrap());
    ChamberComplex::preset(Preset::Simplex, sys).unwrap()
}

/// Rank 1 with the sole singleton acceptable: a half-line chamber. The
/// Euler test has no closed-manifold solution here, so lenient mode.
pub fn rank1_halfline() -> ChamberComplex {
    let sys = CoxeterSystem::new(CoxeterMatrix::from_table(&[vec![1]]).unwrap());
    let family = [salv_core::coxeter::TypeSubset::singleton(0)];
    ChamberComplex::validate(sys, &family, false).unwrap()
}

const UNDEF: usize = usize::MAX;

/// The completed Cayley table of a finite Coxeter group, with the ShortLex
/// normal form of every element.
pub struct CosetTable {
    rank: usize,
    table: Vec<Vec<usize>>,
    words: Vec<Vec<u8>>,
}

impl CosetTable {
    /// Enumerate the group of the given Coxeter table (entries are bond
    /// orders, diagonal 1). Only terminates for finite groups — this is a
    /// test oracle, callers pick the systems.
    pub fn from_table(bonds: &[Vec<u64>]) -> CosetTable {
        let rank = bonds.len();
        let mut relators: Vec<Vec<u8>> = Vec::new();
        for (i, row) in bonds.iter().enumerate() {
            for (j, &m) in row.iter().enumerate().skip(i + 1) {
                assert!(m != 0, "oracle needs finite bonds to close");
                let mut w = Vec::with_capacity(2 * m as usize);
                for _ in 0..m {
                    w.push(i as u8);
                    w.push(j as u8);
                }
                relators.push(w);
            }
        }
        let mut e = Enumerator {
            rank,
            relators,
            table: vec![vec![UNDEF; rank]],
            parent: vec![0],
        };
        e.run();
        e.finish()
    }

    pub fn order(&self) -> usize {
        self.table.len()
    }

    pub fn word_of(&self, x: usize) -> &[u8] {
        &self.words[x]
    }

    /// Walk the table from the identity along a word.
    pub fn element_of(&self, word: &[u8]) -> usize {
        word.iter()
            .fold(0, |x, &s| self.table[x][s as usize])
    }

    /// The ShortLex normal form of an arbitrary word.
    pub fn canonical(&self, word: &[u8]) -> &[u8] {
        self.word_of(self.element_of(word))
    }

    /// All normal forms, in ShortLex order.
    pub fn sorted_words(&self) -> Vec<Vec<u8>> {
        let mut out = self.words.clone();
        out.sort_by(|a, b| (a.len(), a.as_slice()).cmp(&(b.len(), b.as_slice())));
        out
    }

    /// Generators that shorten `x` on the right.
    pub fn right_descents(&self, x: usize) -> Vec<u8> {
        (0..self.rank as u8)
            .filter(|&s| self.words[self.table[x][s as usize]].len() < self.words[x].len())
            .collect()
    }
}

/// Felsch-style enumeration: define one coset at a time, then close under
/// all relator deductions and coincidences before defining the next.
/// Generator involutivity is baked into the symmetric table updates, so the
/// relator list carries only the braid words (st)^m.
struct Enumerator {
    rank: usize,
    relators: Vec<Vec<u8>>,
    table: Vec<Vec<usize>>,
    parent: Vec<usize>,
}

impl Enumerator {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn look(&mut self, x: usize, s: usize) -> usize {
        let v = self.table[x][s];
        if v == UNDEF {
            UNDEF
        } else {
            self.find(v)
        }
    }

    /// Record `a·s = b` (and `b·s = a`), queuing a coincidence on conflict.
    fn set(&mut self, a: usize, s: usize, b: usize, merges: &mut VecDeque<(usize, usize)>) {
        let a = self.find(a);
        let b = self.find(b);
        for (x, y) in [(a, b), (b, a)] {
            let cur = self.table[x][s];
            if cur == UNDEF {
                self.table[x][s] = y;
            } else if self.find(cur) != y {
                merges.push_back((cur, y));
            }
        }
    }

    fn process_merges(&mut self, merges: &mut VecDeque<(usize, usize)>) {
        while let Some((a, b)) = merges.pop_front() {
            let a = self.find(a);
            let b = self.find(b);
            if a == b {
                continue;
            }
            let keep = a.min(b);
            let kill = a.max(b);
            self.parent[kill] = keep;
            for s in 0..self.rank {
                let v = self.table[kill][s];
                if v == UNDEF {
                    continue;
                }
                let v = self.find(v);
                let cur = self.table[keep][s];
                if cur == UNDEF {
                    self.table[keep][s] = v;
                } else if self.find(cur) != v {
                    merges.push_back((cur, v));
                }
            }
        }
    }

    /// Trace one relator at one coset; returns true when this produced a
    /// deduction or a coincidence.
    fn scan(&mut self, alpha: usize, relator: usize) -> bool {
        let w = self.relators[relator].clone();
        let mut merges = VecDeque::new();
        let alpha = self.find(alpha);
        let mut f = alpha;
        let mut i = 0;
        while i < w.len() {
            let next = self.look(f, w[i] as usize);
            if next == UNDEF {
                break;
            }
            f = next;
            i += 1;
        }
        if i == w.len() {
            if f != alpha {
                merges.push_back((f, alpha));
                self.process_merges(&mut merges);
                return true;
            }
            return false;
        }
        let mut b = alpha;
        let mut j = w.len();
        while j > i + 1 {
            let next = self.look(b, w[j - 1] as usize);
            if next == UNDEF {
                break;
            }
            b = next;
            j -= 1;
        }
        if j == i + 1 {
            self.set(f, w[i] as usize, b, &mut merges);
            self.process_merges(&mut merges);
            return true;
        }
        false
    }

    fn run(&mut self) {
        loop {
            // Close under deductions.
            loop {
                let mut changed = false;
                for alpha in 0..self.table.len() {
                    if self.find(alpha) != alpha {
                        continue;
                    }
                    for r in 0..self.relators.len() {
                        changed |= self.scan(alpha, r);
                    }
                }
                if !changed {
                    break;
                }
            }
            // Define the first missing entry, if any.
            let mut defined = false;
            'search: for alpha in 0..self.table.len() {
                if self.find(alpha) != alpha {
                    continue;
                }
                for s in 0..self.rank {
                    if self.look(alpha, s) == UNDEF {
                        let fresh = self.table.len();
                        self.table.push(vec![UNDEF; self.rank]);
                        self.parent.push(fresh);
                        self.table[alpha][s] = fresh;
                        self.table[fresh][s] = alpha;
                        defined = true;
                        break 'search;
                    }
                }
            }
            if !defined {
                break;
            }
        }
    }

    fn finish(mut self) -> CosetTable {
        let n = self.table.len();
        let live: Vec<usize> = (0..n).filter(|&x| self.find(x) == x).collect();
        let mut remap = vec![UNDEF; n];
        for (new, &old) in live.iter().enumerate() {
            remap[old] = new;
        }
        assert_eq!(remap[0], 0, "the identity coset is never merged away");

        let mut table = vec![vec![UNDEF; self.rank]; live.len()];
        for (new, &old) in live.iter().enumerate() {
            for (s, slot) in table[new].iter_mut().enumerate() {
                let v = self.look(old, s);
                assert_ne!(v, UNDEF, "enumeration left an undefined entry");
                *slot = remap[v];
            }
        }

        // ShortLex normal forms by breadth-first search: FIFO order with
        // ascending generators visits words in ShortLex order, so the first
        // word to reach an element is its normal form.
        let mut words: Vec<Option<Vec<u8>>> = vec![None; live.len()];
        words[0] = Some(Vec::new());
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for (s, &y) in table[x].iter().enumerate() {
                if words[y].is_none() {
                    let mut w = words[x].clone().unwrap();
                    w.push(s as u8);
                    words[y] = Some(w);
                    queue.push_back(y);
                }
            }
        }
        CosetTable {
            rank: self.rank,
            table,
            words: words.into_iter().map(|w| w.unwrap()).collect(),
        }
    }
}
