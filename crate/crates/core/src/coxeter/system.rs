use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::sync::RwLock;

use super::classify::{parabolic_order, GroupOrder};
use super::{Bond, CoxeterError, CoxeterMatrix, Elem, Reflection, TypeSubset};

/// Which side a descent is taken on.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

/// Memoized products: canonical word and generator in, canonical word out.
type MulMemo = HashMap<(Vec<u8>, u8), Vec<u8>>;

/// A Coxeter system: the matrix together with the word-problem engine.
///
/// The word problem is solved by Tits' rewriting method: exhaustive search of
/// the braid-move orbit of a word, deleting adjacent equal pairs whenever one
/// appears. Canonical forms are the ShortLex-least reduced words, so this
/// works unchanged for infinite (affine and hyperbolic) systems.
///
/// Products of canonical words by single generators are memoized. The memo
/// table sits behind a lock, so a shared `&CoxeterSystem` can serve several
/// threads; results are identical with the memo disabled.
pub struct CoxeterSystem {
    matrix: CoxeterMatrix,
    memo: RwLock<MulMemo>,
    memo_enabled: bool,
}

impl CoxeterSystem {
    pub fn new(matrix: CoxeterMatrix) -> CoxeterSystem {
        CoxeterSystem {
            matrix,
            memo: RwLock::new(HashMap::new()),
            memo_enabled: true,
        }
    }

    /// Engine with memoization turned off; slower, used to pin down that
    /// caching never changes results.
    pub fn without_memo(matrix: CoxeterMatrix) -> CoxeterSystem {
        CoxeterSystem {
            memo_enabled: false,
            ..CoxeterSystem::new(matrix)
        }
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    pub fn rank(&self) -> usize {
        self.matrix.rank()
    }

    pub fn full_set(&self) -> TypeSubset {
        TypeSubset::full(self.rank())
    }

    pub fn identity(&self) -> Elem {
        Elem::from_canonical(Vec::new())
    }

    pub fn generator(&self, s: u8) -> Result<Elem, CoxeterError> {
        self.check_letter(s)?;
        Ok(Elem::from_canonical(vec![s]))
    }

    fn check_letter(&self, s: u8) -> Result<(), CoxeterError> {
        if (s as usize) < self.rank() {
            Ok(())
        } else {
            Err(CoxeterError::LetterOutOfRange {
                letter: s as usize,
                rank: self.rank(),
            })
        }
    }

    /// Canonical form of an arbitrary word in the generators.
    pub fn reduce(&self, word: &[u8]) -> Result<Elem, CoxeterError> {
        for &s in word {
            self.check_letter(s)?;
        }
        let mut acc = Vec::new();
        for &s in word {
            acc = self.mul_gen_word(&acc, s);
        }
        Ok(Elem::from_canonical(acc))
    }

    /// Right product by a generator.
    pub fn mul_gen(&self, a: &Elem, s: u8) -> Elem {
        debug_assert!((s as usize) < self.rank());
        Elem::from_canonical(self.mul_gen_word(a.word(), s))
    }

    pub fn multiply(&self, a: &Elem, b: &Elem) -> Elem {
        let mut acc = a.word().to_vec();
        for &s in b.word() {
            acc = self.mul_gen_word(&acc, s);
        }
        Elem::from_canonical(acc)
    }

    /// Inverse: the reverse of a reduced word is reduced for the inverse.
    pub fn inverse(&self, a: &Elem) -> Elem {
        let mut acc = Vec::new();
        for &s in a.word().iter().rev() {
            acc = self.mul_gen_word(&acc, s);
        }
        Elem::from_canonical(acc)
    }

    pub fn length(&self, a: &Elem) -> usize {
        a.len()
    }

    /// Descent set on the chosen side: generators shortening the element.
    pub fn descents(&self, a: &Elem, side: Side) -> TypeSubset {
        let target = match side {
            Side::Right => a.clone(),
            Side::Left => self.inverse(a),
        };
        let mut out = TypeSubset::EMPTY;
        for s in 0..self.rank() as u8 {
            if self.mul_gen(&target, s).len() < target.len() {
                out = out.with(s);
            }
        }
        out
    }

    pub fn is_spherical(&self, t: TypeSubset) -> bool {
        self.parabolic_order(t).is_finite()
    }

    pub fn parabolic_order(&self, t: TypeSubset) -> GroupOrder {
        parabolic_order(&self.matrix, t)
    }

    /// All elements of the standard parabolic `W_t`, in ShortLex order,
    /// optionally truncated at `max_length`. Unbounded enumeration of a
    /// non-spherical subset is refused.
    pub fn enumerate(
        &self,
        t: TypeSubset,
        max_length: Option<usize>,
    ) -> Result<Vec<Elem>, CoxeterError> {
        if max_length.is_none() && !self.is_spherical(t) {
            return Err(CoxeterError::WouldNotTerminate(format!(
                "subset {t} generates an infinite group; a length bound is required"
            )));
        }
        let gens: Vec<u8> = t.iter().collect();
        let mut seen: HashSet<Vec<u8>> = HashSet::new();
        seen.insert(Vec::new());
        let mut out = vec![self.identity()];
        let mut level: Vec<Vec<u8>> = vec![Vec::new()];
        let mut len = 0usize;
        while !level.is_empty() {
            if let Some(bound) = max_length {
                if len >= bound {
                    break;
                }
            }
            let mut next: Vec<Vec<u8>> = Vec::new();
            for w in &level {
                for &s in &gens {
                    let u = self.mul_gen_word(w, s);
                    if u.len() > w.len() && !seen.contains(&u) {
                        seen.insert(u.clone());
                        next.push(u);
                    }
                }
            }
            next.sort_unstable();
            out.extend(next.iter().cloned().map(Elem::from_canonical));
            level = next;
            len += 1;
        }
        Ok(out)
    }

    /// True when `w` is the minimal-length element of the coset `w W_t`.
    pub fn is_coset_minimal(&self, w: &Elem, t: TypeSubset) -> bool {
        t.iter().all(|s| self.mul_gen(w, s).len() > w.len())
    }

    /// Minimal-length representative of the coset `w W_t` (exists and is
    /// unique; reached by greedy right descents inside `t`).
    pub fn coset_min(&self, w: &Elem, t: TypeSubset) -> Elem {
        let mut cur = w.clone();
        'outer: loop {
            for s in t.iter() {
                let u = self.mul_gen(&cur, s);
                if u.len() < cur.len() {
                    cur = u;
                    continue 'outer;
                }
            }
            return cur;
        }
    }

    /// All reflections (conjugates of generators), sorted. For infinite
    /// systems a canonical-length bound must be supplied; every reflection of
    /// length `2k+1` arises as `u s u^{-1}` with `len(u) = k`, so conjugators
    /// are enumerated up to `(bound - 1) / 2`.
    pub fn reflections(&self, max_length: Option<usize>) -> Result<Vec<Reflection>, CoxeterError> {
        let full = self.full_set();
        if max_length.is_none() && !self.is_spherical(full) {
            return Err(CoxeterError::WouldNotTerminate(
                "infinite group; a length bound is required to list reflections".into(),
            ));
        }
        let conj_bound = max_length.map(|l| l.saturating_sub(1) / 2);
        let conjugators = self.enumerate(full, conj_bound)?;
        let mut set: BTreeSet<Elem> = BTreeSet::new();
        for u in &conjugators {
            for s in 0..self.rank() as u8 {
                let mut word = u.word().to_vec();
                word.push(s);
                word.extend(u.word().iter().rev());
                let r = self.reduce(&word).expect("letters already validated");
                if max_length.is_none_or(|l| r.len() <= l) {
                    set.insert(r);
                }
            }
        }
        Ok(set.into_iter().map(Reflection::from_elem).collect())
    }

    /// Left inversion set `N(w) = { r reflection : len(r w) < len(w) }`,
    /// computed as the prefix conjugates of the canonical word; these are
    /// pairwise distinct, so `|N(w)| = len(w)`.
    pub fn inversion_set(&self, w: &Elem) -> Vec<Reflection> {
        let word = w.word();
        let mut set: BTreeSet<Elem> = BTreeSet::new();
        for i in 0..word.len() {
            let mut conj = Vec::with_capacity(2 * i + 1);
            conj.extend_from_slice(&word[..i]);
            conj.push(word[i]);
            conj.extend(word[..i].iter().rev());
            let r = self.reduce(&conj).expect("letters from a canonical word");
            set.insert(r);
        }
        assert_eq!(set.len(), word.len(), "prefix conjugates must be distinct");
        set.into_iter().map(Reflection::from_elem).collect()
    }

    /// True when `e` is a reflection: the wall of a reflection separates the
    /// element from the identity, so `e` must occur in its own inversion set.
    pub fn is_reflection(&self, e: &Elem) -> bool {
        !e.is_identity() && self.inversion_set(e).iter().any(|r| r.elem() == e)
    }

    fn mul_gen_word(&self, w: &[u8], s: u8) -> Vec<u8> {
        if self.memo_enabled {
            let key = (w.to_vec(), s);
            if let Some(hit) = self.memo.read().unwrap().get(&key) {
                return hit.clone();
            }
            let mut word = key.0.clone();
            word.push(s);
            let out = self.tits_canonicalize(word);
            self.memo.write().unwrap().insert(key, out.clone());
            out
        } else {
            let mut word = w.to_vec();
            word.push(s);
            self.tits_canonicalize(word)
        }
    }

    /// Tits' procedure: search the braid-move orbit of the word; whenever an
    /// orbit member carries an adjacent equal pair, delete the pair and start
    /// over. Once no deletion is reachable the word is reduced and the
    /// ShortLex-least orbit member is the canonical form.
    fn tits_canonicalize(&self, word: Vec<u8>) -> Vec<u8> {
        let mut current = word;
        'restart: loop {
            if let Some(i) = adjacent_pair(&current) {
                current.drain(i..i + 2);
                continue 'restart;
            }
            let mut best = current.clone();
            let mut seen: HashSet<Vec<u8>> = HashSet::new();
            seen.insert(current.clone());
            let mut queue: VecDeque<Vec<u8>> = VecDeque::new();
            queue.push_back(current.clone());
            while let Some(w) = queue.pop_front() {
                for i in 0..w.len().saturating_sub(1) {
                    let (s, t) = (w[i], w[i + 1]);
                    if s == t {
                        continue;
                    }
                    let Bond::Finite(m) = self.matrix.bond(s as usize, t as usize) else {
                        continue;
                    };
                    let m = m as usize;
                    if i + m > w.len() || !alternates(&w[i..i + m], s, t) {
                        continue;
                    }
                    let mut w2 = w.clone();
                    for (k, slot) in w2[i..i + m].iter_mut().enumerate() {
                        *slot = if k % 2 == 0 { t } else { s };
                    }
                    if seen.contains(&w2) {
                        continue;
                    }
                    if let Some(j) = adjacent_pair(&w2) {
                        w2.drain(j..j + 2);
                        current = w2;
                        continue 'restart;
                    }
                    if w2 < best {
                        best = w2.clone();
                    }
                    seen.insert(w2.clone());
                    queue.push_back(w2);
                }
            }
            return best;
        }
    }
}

fn adjacent_pair(w: &[u8]) -> Option<usize> {
    (0..w.len().saturating_sub(1)).find(|&i| w[i] == w[i + 1])
}

fn alternates(window: &[u8], s: u8, t: u8) -> bool {
    window
        .iter()
        .enumerate()
        .all(|(k, &x)| x == if k % 2 == 0 { s } else { t })
}
