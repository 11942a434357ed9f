//! Group completion `GS = H / N` in near-linear time.
//!
//! `H` is the maximal subgroup of the minimal ideal at `e_H` and `N` is the
//! normal closure of the sandwich entries. The whole computation touches
//! `O(|S| log|S|)` products: the minimal ideal costs `O(|S|)`, inverses cost
//! `O(|H|)` by walking power cycles, and each effective pass of the subgroup
//! generator at least doubles the coset size.

use crate::dsf::DisjointSetForest;
use crate::error::{Error, Result};
use crate::ideal::{min_ideal_unverified, CountingTable};
use crate::linalg::{homology_from_matrices, FinAbGroup, IntMatrix};
use crate::table::SemigroupTable;

const ABSENT: usize = usize::MAX;

/// A subset of a table that forms a group, with its identity and inverses.
#[derive(Debug, Clone)]
pub struct GroupTable {
    elements: Vec<usize>,
    position: Vec<usize>,
    identity: usize,
    inverse: Vec<usize>,
}

impl GroupTable {
    /// The whole table as a group.
    pub fn from_table(s: &SemigroupTable) -> Result<Self> {
        let all: Vec<usize> = s.elements().collect();
        identity_and_inverses(s, &all)
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn contains(&self, x: usize) -> bool {
        self.position.get(x).is_some_and(|&p| p != ABSENT)
    }

    pub fn position(&self, x: usize) -> Option<usize> {
        self.position.get(x).copied().filter(|&p| p != ABSENT)
    }

    /// `σ(h)` for an element `h` of the group.
    pub fn inverse(&self, h: usize) -> Option<usize> {
        self.position(h).map(|p| self.elements[self.inverse[p]])
    }
}

pub fn identity_and_inverses(s: &SemigroupTable, subset: &[usize]) -> Result<GroupTable> {
    identity_and_inverses_counted(&CountingTable::new(s), subset)
}

pub(crate) fn identity_and_inverses_counted(
    ops: &CountingTable,
    subset: &[usize],
) -> Result<GroupTable> {
    let n = ops.table().order();
    let mut position = vec![ABSENT; n];
    for (p, &h) in subset.iter().enumerate() {
        if h >= n || position[h] != ABSENT {
            return Err(Error::NotAGroup(format!("bad or repeated element {h}")));
        }
        position[h] = p;
    }
    let idempotents: Vec<usize> = subset
        .iter()
        .copied()
        .filter(|&h| ops.mul(h, h) == h)
        .collect();
    let [e] = idempotents[..] else {
        return Err(Error::NotAGroup(format!(
            "{} idempotents instead of one",
            idempotents.len()
        )));
    };

    let mut sigma = vec![ABSENT; subset.len()];
    sigma[position[e]] = e;
    let mut cycle = Vec::new();
    for &h in subset {
        cycle.clear();
        cycle.push(e);
        cycle.push(h);
        while sigma[position[*cycle.last().unwrap()]] == ABSENT {
            let next = ops.mul(*cycle.last().unwrap(), h);
            if position[next] == ABSENT {
                return Err(Error::NotAGroup(format!("{next} escapes the subset")));
            }
            if cycle.len() > subset.len() + 1 {
                return Err(Error::NotAGroup(format!("powers of {h} never reach e")));
            }
            cycle.push(next);
        }
        let len = cycle.len();
        let last_inverse = sigma[position[cycle[len - 1]]];
        for l in 1..len.saturating_sub(1) {
            sigma[position[cycle[l]]] = ops.mul(last_inverse, cycle[len - 1 - l]);
        }
    }

    for (p, &h) in subset.iter().enumerate() {
        let inv = sigma[p];
        if ops.mul(e, h) != h
            || ops.mul(h, e) != h
            || ops.mul(h, inv) != e
            || ops.mul(inv, h) != e
        {
            return Err(Error::NotAGroup(format!("inverse check fails at {h}")));
        }
    }
    let inverse = sigma.iter().map(|&x| position[x]).collect();
    Ok(GroupTable {
        elements: subset.to_vec(),
        position,
        identity: e,
        inverse,
    })
}

/// `⟨X⟩` as the component of the identity after merging `h ~ h x` for each
/// generator not already in it. Returned ascending.
pub fn generated_subgroup(
    s: &SemigroupTable,
    group: &GroupTable,
    gens: &[usize],
) -> Result<Vec<usize>> {
    generated_subgroup_counted(&CountingTable::new(s), group, gens)
}

pub(crate) fn generated_subgroup_counted(
    ops: &CountingTable,
    group: &GroupTable,
    gens: &[usize],
) -> Result<Vec<usize>> {
    let size = group.len();
    let e = group.position(group.identity()).unwrap();
    let mut forest = DisjointSetForest::new(size);
    for &x in gens {
        let px = group.position(x).ok_or(Error::ElementOutsideGroup(x))?;
        if !forest.same_component(e, px) {
            for (p, &h) in group.elements().iter().enumerate() {
                let q = group.position[ops.mul(h, x)];
                forest.merge(p, q);
            }
        }
    }
    let mut out: Vec<usize> = (0..size)
        .filter(|&p| forest.same_component(p, e))
        .map(|p| group.elements()[p])
        .collect();
    out.sort_unstable();
    Ok(out)
}

/// `GS` as representatives `R ⊆ S` and a retraction `ρ: S -> R`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientGroup {
    representatives: Vec<usize>,
    rho: Vec<usize>,
    identity: usize,
}

impl QuotientGroup {
    pub fn representatives(&self) -> &[usize] {
        &self.representatives
    }

    pub fn len(&self) -> usize {
        self.representatives.len()
    }

    pub fn is_empty(&self) -> bool {
        self.representatives.is_empty()
    }

    /// Position in [`Self::representatives`] of the class of `x`.
    pub fn rho(&self, x: usize) -> usize {
        self.rho[x]
    }

    pub fn rho_map(&self) -> &[usize] {
        &self.rho
    }

    /// Position of the identity class.
    pub fn identity(&self) -> usize {
        self.identity
    }

    /// Product of two classes, given by position.
    pub fn mul(&self, s: &SemigroupTable, a: usize, b: usize) -> usize {
        self.rho[s.mul(self.representatives[a], self.representatives[b])]
    }

    /// The group on positions `0..|R|`.
    pub fn cayley_table(&self, s: &SemigroupTable) -> SemigroupTable {
        SemigroupTable::from_fn(self.len(), |a, b| self.mul(s, a, b))
    }
}

pub fn group_completion(s: &SemigroupTable) -> Result<QuotientGroup> {
    group_completion_with_stats(s).map(|(q, _)| q)
}

/// Also returns the number of table lookups performed. Uses `H = kS¹k`
/// directly rather than the verified structure from `min_ideal`, so every
/// product formed is counted.
pub fn group_completion_with_stats(s: &SemigroupTable) -> Result<(QuotientGroup, u64)> {
    let ops = CountingTable::new(s);
    let n = s.order();
    let (_, left, right, h_set) = min_ideal_unverified(&ops);
    let group = identity_and_inverses_counted(&ops, &h_set)?;
    let e = group.identity();

    let mut is_gen = vec![false; n];
    for &h in group.elements() {
        let h_inv = group.inverse(h).unwrap();
        for &j in &right {
            let hj = ops.mul(h, j);
            for &i in &left {
                is_gen[ops.mul(ops.mul(hj, i), h_inv)] = true;
            }
        }
    }
    let gens: Vec<usize> = (0..n).filter(|&x| is_gen[x]).collect();
    let normal = generated_subgroup_counted(&ops, &group, &gens)?;

    let mut remaining = vec![true; group.len()];
    let mut class_of = vec![ABSENT; n];
    let mut representatives = Vec::with_capacity(group.len() / normal.len());
    for (p, &h) in group.elements().iter().enumerate() {
        if !remaining[p] {
            continue;
        }
        let r = representatives.len();
        representatives.push(h);
        for &m in &normal {
            let x = ops.mul(h, m);
            remaining[group.position(x).unwrap()] = false;
            class_of[x] = r;
        }
    }
    let rho: Vec<usize> = (0..n)
        .map(|x| class_of[ops.mul(ops.mul(e, x), e)])
        .collect();
    let identity = rho[e];
    let lookups = ops.lookups();
    Ok((
        QuotientGroup {
            representatives,
            rho,
            identity,
        },
        lookups,
    ))
}

/// `G / [G, G]` from the abelian presentation `[a] + [b] = [ab]`, with `a`
/// ranging over a generating set.
pub fn abelianization(s: &SemigroupTable, g: &QuotientGroup) -> FinAbGroup {
    let table = g.cayley_table(s);
    let group = GroupTable::from_table(&table).expect("quotient is a group");
    let k = table.order();

    let mut gens: Vec<usize> = Vec::new();
    let mut span = vec![group.identity()];
    for x in table.elements() {
        if span.binary_search(&x).is_err() {
            gens.push(x);
            span = generated_subgroup(&table, &group, &gens).unwrap();
        }
    }

    // the identity's relations force [e] = 0
    gens.push(group.identity());
    let mut relations = IntMatrix::zeros(k, gens.len() * k);
    let mut col = 0;
    for &a in &gens {
        for b in 0..k {
            relations.add_at(a, col, 1);
            relations.add_at(b, col, 1);
            relations.add_at(table.mul(a, b), col, -1);
            col += 1;
        }
    }
    homology_from_matrices(&IntMatrix::zeros(0, k), &relations)
        .expect("a zero outgoing map composes to zero")
}
