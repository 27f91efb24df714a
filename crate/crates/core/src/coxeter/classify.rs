//! Recognition of spherical subsets against the classification of finite
//! Coxeter groups, with exact group orders.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use super::{Bond, CoxeterMatrix, TypeSubset};

/// Order of a standard parabolic subgroup: exact when finite.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum GroupOrder {
    Finite(BigUint),
    Infinite,
}

impl GroupOrder {
    pub fn is_finite(&self) -> bool {
        matches!(self, GroupOrder::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            GroupOrder::Finite(n) => Some(n),
            GroupOrder::Infinite => None,
        }
    }

    /// Convenience for test-sized groups.
    pub fn to_u64(&self) -> Option<u64> {
        self.finite().and_then(|n| u64::try_from(n).ok())
    }
}

impl fmt::Display for GroupOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupOrder::Finite(n) => write!(f, "{n}"),
            GroupOrder::Infinite => write!(f, "inf"),
        }
    }
}

fn factorial(n: u64) -> BigUint {
    let mut out = BigUint::one();
    for k in 2..=n {
        out *= k;
    }
    out
}

fn pow2(n: u64) -> BigUint {
    BigUint::one() << n
}

/// Order of the parabolic subgroup generated by `t`, decided by decomposing
/// the induced Coxeter graph into components and matching each against the
/// finite-type list (A, B, D, E6-E8, F4, H3, H4, I2(m)).
pub fn parabolic_order(matrix: &CoxeterMatrix, t: TypeSubset) -> GroupOrder {
    let mut order = BigUint::one();
    for comp in components(matrix, t) {
        match component_order(matrix, &comp) {
            Some(n) => order *= n,
            None => return GroupOrder::Infinite,
        }
    }
    GroupOrder::Finite(order)
}

/// Connected components of the Coxeter graph induced on `t` (edges where the
/// bond order differs from 2, infinite bonds included).
fn components(matrix: &CoxeterMatrix, t: TypeSubset) -> Vec<Vec<u8>> {
    let members: Vec<u8> = t.iter().collect();
    let mut seen = TypeSubset::EMPTY;
    let mut out = Vec::new();
    for &start in &members {
        if seen.contains(start) {
            continue;
        }
        let mut comp = vec![start];
        seen = seen.with(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &u in &members {
                if !seen.contains(u) && matrix.bond(v as usize, u as usize) != Bond::Finite(2) {
                    seen = seen.with(u);
                    comp.push(u);
                    stack.push(u);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Order of one connected component, or `None` when it is of infinite type.
fn component_order(matrix: &CoxeterMatrix, comp: &[u8]) -> Option<BigUint> {
    let k = comp.len() as u64;
    if comp.len() == 1 {
        return Some(BigUint::from(2u32));
    }

    // Any infinite bond, any cycle, or any vertex of degree >= 4 rules the
    // component out immediately (finite types are trees of max degree 3).
    let mut edges: Vec<(usize, usize, u32)> = Vec::new();
    for (a, &i) in comp.iter().enumerate() {
        for (b, &j) in comp.iter().enumerate().skip(a + 1) {
            match matrix.bond(i as usize, j as usize) {
                Bond::Finite(2) => {}
                Bond::Finite(m) => edges.push((a, b, m)),
                Bond::Infinite => return None,
            }
        }
    }
    if edges.len() != comp.len() - 1 {
        return None; // connected with a cycle
    }
    let mut degree = vec![0usize; comp.len()];
    let mut adj = vec![Vec::new(); comp.len()];
    for &(a, b, m) in &edges {
        degree[a] += 1;
        degree[b] += 1;
        adj[a].push((b, m));
        adj[b].push((a, m));
    }
    if degree.iter().any(|&d| d >= 4) {
        return None;
    }

    let branches: Vec<usize> = (0..comp.len()).filter(|&v| degree[v] == 3).collect();
    match branches.len() {
        0 => path_order(k, &degree, &adj),
        1 => branched_order(k, branches[0], &degree, &adj, &edges),
        _ => None,
    }
}

/// Component is a path: A_n, B_n, F4, H3, H4 or I2(m).
fn path_order(k: u64, degree: &[usize], adj: &[Vec<(usize, u32)>]) -> Option<BigUint> {
    if k == 2 {
        let m = adj[0][0].1;
        return Some(BigUint::from(2 * m)); // I2(m); covers A2, B2, G2
    }
    // Walk from the lower-numbered endpoint and record the label sequence.
    let start = degree.iter().position(|&d| d == 1).unwrap();
    let mut labels = Vec::new();
    let mut prev = usize::MAX;
    let mut cur = start;
    loop {
        let next = adj[cur].iter().find(|&&(v, _)| v != prev);
        match next {
            Some(&(v, m)) => {
                labels.push(m);
                prev = cur;
                cur = v;
            }
            None => break,
        }
    }
    let non3: Vec<(usize, u32)> = labels
        .iter()
        .enumerate()
        .filter(|&(_, &m)| m != 3)
        .map(|(i, &m)| (i, m))
        .collect();
    let last = labels.len() - 1;
    match non3.as_slice() {
        [] => Some(factorial(k + 1)), // A_n
        [(pos, 4)] if *pos == 0 || *pos == last => Some(pow2(k) * factorial(k)), // B_n
        [(1, 4)] if k == 4 => Some(BigUint::from(1152u32)), // F4 = (3,4,3)
        [(pos, 5)] if (*pos == 0 || *pos == last) && k == 3 => Some(BigUint::from(120u32)), // H3
        [(pos, 5)] if (*pos == 0 || *pos == last) && k == 4 => Some(BigUint::from(14400u32)), // H4
        _ => None,
    }
}

/// Component is a tree with one degree-3 vertex: D_n or E6/E7/E8.
fn branched_order(
    k: u64,
    branch: usize,
    degree: &[usize],
    adj: &[Vec<(usize, u32)>],
    edges: &[(usize, usize, u32)],
) -> Option<BigUint> {
    if edges.iter().any(|&(_, _, m)| m != 3) {
        return None;
    }
    let mut arms: Vec<u64> = adj[branch]
        .iter()
        .map(|&(first, _)| {
            let mut len = 1u64;
            let mut prev = branch;
            let mut cur = first;
            while degree[cur] == 2 {
                let &(next, _) = adj[cur].iter().find(|&&(v, _)| v != prev).unwrap();
                prev = cur;
                cur = next;
                len += 1;
            }
            len
        })
        .collect();
    arms.sort_unstable();
    match arms.as_slice() {
        [1, 1, _] => Some(pow2(k - 1) * factorial(k)), // D_n
        [1, 2, 2] => Some(BigUint::from(51840u32)),    // E6
        [1, 2, 3] => Some(BigUint::from(2903040u32)),  // E7
        [1, 2, 4] => Some(BigUint::from(696729600u32)), // E8
        _ => None,
    }
}
