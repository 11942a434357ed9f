//! The minimal ideal `K(S)` and its Rees matrix coordinates.

use std::cell::Cell;

use crate::completion::identity_and_inverses;
use crate::error::{Error, Result};
use crate::table::SemigroupTable;

pub const DEFAULT_BRUTEFORCE_CAP: usize = 64;

/// Table access that counts every multiplication, so that the near-linear
/// algorithms can be checked against their operation bounds.
pub struct CountingTable<'a> {
    table: &'a SemigroupTable,
    lookups: Cell<u64>,
}

impl<'a> CountingTable<'a> {
    pub fn new(table: &'a SemigroupTable) -> Self {
        CountingTable {
            table,
            lookups: Cell::new(0),
        }
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.lookups.set(self.lookups.get() + 1);
        self.table.mul(a, b)
    }

    pub fn lookups(&self) -> u64 {
        self.lookups.get()
    }

    pub fn table(&self) -> &'a SemigroupTable {
        self.table
    }
}

/// Which candidate for the maximal subgroup passed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgroupVariant {
    /// `{k x k : x in S}`
    Products,
    /// `{k x k : x in S} ∪ {k k}`
    WithSquare,
}

/// `K(S) ≅ M(H; I, J; P)` with `P[j][i] = j * i`, normalized at `e_H`.
#[derive(Debug, Clone)]
pub struct ReesStructure {
    k: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    group: Vec<usize>,
    group_identity: usize,
    sandwich: Vec<Vec<usize>>,
    factors: Vec<Option<(usize, usize, usize)>>,
    variant: SubgroupVariant,
}

impl ReesStructure {
    /// The product of all elements, a member of `K(S)`.
    pub fn k(&self) -> usize {
        self.k
    }

    /// Idempotents of `S k`, indexing minimal right ideals.
    pub fn i_set(&self) -> &[usize] {
        &self.left
    }

    /// Idempotents of `k S`, indexing minimal left ideals.
    pub fn j_set(&self) -> &[usize] {
        &self.right
    }

    /// The maximal subgroup `k S k`, ascending.
    pub fn h_set(&self) -> &[usize] {
        &self.group
    }

    /// Position of `e_H` within [`Self::h_set`].
    pub fn h_identity(&self) -> usize {
        self.group_identity
    }

    pub fn e_h(&self) -> usize {
        self.group[self.group_identity]
    }

    /// `sandwich()[j][i]` is the position in `H` of `J[j] * I[i]`.
    pub fn sandwich(&self) -> &[Vec<usize>] {
        &self.sandwich
    }

    /// `(i, h, j)` positions of an element of `K(S)`, or `None` outside it.
    pub fn factor(&self, x: usize) -> Option<(usize, usize, usize)> {
        self.factors[x]
    }

    pub fn variant(&self) -> SubgroupVariant {
        self.variant
    }

    pub fn ideal_size(&self) -> usize {
        self.left.len() * self.group.len() * self.right.len()
    }

    /// Elements of `K(S)`, ascending.
    pub fn elements(&self) -> Vec<usize> {
        (0..self.factors.len())
            .filter(|&x| self.factors[x].is_some())
            .collect()
    }

    pub fn is_k_thin(&self) -> bool {
        is_k_thin(self)
    }
}

pub fn is_k_thin(r: &ReesStructure) -> bool {
    r.left.len() == 1 || r.right.len() == 1
}

pub fn min_ideal(s: &SemigroupTable) -> Result<ReesStructure> {
    min_ideal_counted(&CountingTable::new(s))
}

/// The three candidate sets straight from the all-product element `k`.
pub(crate) fn min_ideal_sets(ops: &CountingTable) -> (usize, Vec<usize>, Vec<usize>, Vec<usize>) {
    let n = ops.table().order();
    let k = (1..n).fold(0, |acc, x| ops.mul(acc, x));
    let mut in_left = vec![false; n];
    let mut in_right = vec![false; n];
    let mut in_group = vec![false; n];
    for x in 0..n {
        let xk = ops.mul(x, k);
        if ops.mul(xk, xk) == xk {
            in_left[xk] = true;
        }
        let kx = ops.mul(k, x);
        if ops.mul(kx, kx) == kx {
            in_right[kx] = true;
        }
        in_group[ops.mul(kx, k)] = true;
    }
    let collect = |flags: &[bool]| (0..n).filter(|&x| flags[x]).collect::<Vec<_>>();
    (k, collect(&in_left), collect(&in_right), collect(&in_group))
}

/// `(k, I, J, H)` with `H = kS¹k`, skipping the quadratic re-verification
/// that [`min_ideal`] performs.
pub(crate) fn min_ideal_unverified(ops: &CountingTable) -> (usize, Vec<usize>, Vec<usize>, Vec<usize>) {
    let (k, left, right, mut group) = min_ideal_sets(ops);
    let kk = ops.mul(k, k);
    if let Err(pos) = group.binary_search(&kk) {
        group.insert(pos, kk);
    }
    (k, left, right, group)
}

pub(crate) fn min_ideal_counted(ops: &CountingTable) -> Result<ReesStructure> {
    let s = ops.table();
    let (k, left, right, group) = min_ideal_sets(ops);
    match verify(s, k, left.clone(), right.clone(), group.clone(), SubgroupVariant::Products) {
        Ok(r) => Ok(r),
        Err(first) => {
            let kk = s.mul(k, k);
            if group.binary_search(&kk).is_ok() {
                return Err(first);
            }
            let mut widened = group;
            widened.push(kk);
            widened.sort_unstable();
            verify(s, k, left, right, widened, SubgroupVariant::WithSquare)
        }
    }
}

fn verify(
    s: &SemigroupTable,
    k: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    group: Vec<usize>,
    variant: SubgroupVariant,
) -> Result<ReesStructure> {
    let fail = |msg: String| Err(Error::StructureVerificationFailed(msg));
    let n = s.order();
    for &x in left.iter().chain(&right) {
        if s.mul(x, x) != x {
            return fail(format!("{x} is not idempotent"));
        }
    }
    let gt = identity_and_inverses(s, &group)
        .map_err(|e| Error::StructureVerificationFailed(format!("H is not a group: {e}")))?;
    let e_h = gt.identity();
    let group_identity = group.binary_search(&e_h).unwrap();
    let mut h_pos = vec![usize::MAX; n];
    for (p, &h) in group.iter().enumerate() {
        h_pos[h] = p;
    }
    let (Ok(i0), Ok(j0)) = (left.binary_search(&e_h), right.binary_search(&e_h)) else {
        return fail("e_H is missing from I or J".into());
    };

    let mut sandwich = vec![vec![0; left.len()]; right.len()];
    for (jp, &j) in right.iter().enumerate() {
        for (ip, &i) in left.iter().enumerate() {
            let p = h_pos[s.mul(j, i)];
            if p == usize::MAX {
                return fail(format!("sandwich entry {j}*{i} is outside H"));
            }
            sandwich[jp][ip] = p;
        }
    }
    if sandwich[j0].iter().any(|&p| p != group_identity)
        || sandwich.iter().any(|row| row[i0] != group_identity)
    {
        return fail("sandwich matrix is not normalized".into());
    }

    let mut factors = vec![None; n];
    for (ip, &i) in left.iter().enumerate() {
        for (hp, &h) in group.iter().enumerate() {
            let ih = s.mul(i, h);
            for (jp, &j) in right.iter().enumerate() {
                let x = s.mul(ih, j);
                if factors[x].is_some() {
                    return fail(format!("element {x} factors twice"));
                }
                factors[x] = Some((ip, hp, jp));
            }
        }
    }
    let members: Vec<usize> = (0..n).filter(|&x| factors[x].is_some()).collect();
    // the span must be an ideal; it sits inside SkS, so it is then all of K(S)
    for &z in &members {
        for x in 0..n {
            if factors[s.mul(x, z)].is_none() || factors[s.mul(z, x)].is_none() {
                return fail(format!("span of IHJ is not an ideal at {z}, {x}"));
            }
        }
    }
    for &a in &members {
        let (i, h, j) = factors[a].unwrap();
        for &b in &members {
            let (i2, h2, j2) = factors[b].unwrap();
            let mid = s.mul(s.mul(group[h], group[sandwich[j][i2]]), group[h2]);
            let expected = s.mul(s.mul(left[i], mid), right[j2]);
            if s.mul(a, b) != expected {
                return fail(format!("product law fails for {a}*{b}"));
            }
        }
    }
    Ok(ReesStructure {
        k,
        left,
        right,
        group,
        group_identity,
        sandwich,
        factors,
        variant,
    })
}

/// `⋂_a S¹ a S¹`, directly from the definition.
pub fn min_ideal_bruteforce(s: &SemigroupTable) -> Result<Vec<usize>> {
    min_ideal_bruteforce_capped(s, DEFAULT_BRUTEFORCE_CAP)
}

pub fn min_ideal_bruteforce_capped(s: &SemigroupTable, cap: usize) -> Result<Vec<usize>> {
    let n = s.order();
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    let mut common = vec![true; n];
    for a in 0..n {
        let mut left = vec![false; n];
        left[a] = true;
        for x in 0..n {
            left[s.mul(x, a)] = true;
        }
        let mut ideal = left.clone();
        for l in (0..n).filter(|&l| left[l]) {
            for y in 0..n {
                ideal[s.mul(l, y)] = true;
            }
        }
        for x in 0..n {
            common[x] &= ideal[x];
        }
    }
    Ok((0..n).filter(|&x| common[x]).collect())
}
