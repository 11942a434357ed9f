//! Generators of semigroups for property tests.

use std::sync::OnceLock;

use bsemi_core::census::semigroup_classes;
use bsemi_core::fixtures;
use bsemi_core::table::{
    adjoin_zero, cyclic_group, left_zero_band, rectangular_band, rees_matrix, right_zero_band,
    trivial,
};
use bsemi_core::SemigroupTable;
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Every class of order ≤ 3 plus a few larger named tables.
pub fn base_semigroups() -> &'static [SemigroupTable] {
    static BASE: OnceLock<Vec<SemigroupTable>> = OnceLock::new();
    BASE.get_or_init(|| {
        let mut v: Vec<SemigroupTable> = (1..=3).flat_map(|n| semigroup_classes(n).unwrap()).collect();
        v.extend([
            rectangular_band(2, 2),
            rectangular_band(2, 3),
            left_zero_band(3),
            right_zero_band(3),
            cyclic_group(4),
            cyclic_group(5),
            fixtures::contractible_without_zero(),
            fixtures::sphere_tower(),
        ]);
        v
    })
}

/// The symmetric group on three points, composing left to right.
pub fn symmetric_group_3() -> SemigroupTable {
    let perms: [[usize; 3]; 6] = [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]];
    let index = |p: [usize; 3]| perms.iter().position(|&q| q == p).unwrap();
    let raw: Vec<Vec<i64>> = (0..6)
        .map(|a| {
            (0..6)
                .map(|b| {
                    let (p, q) = (perms[a], perms[b]);
                    index([q[p[0]], q[p[1]], q[p[2]]]) as i64
                })
                .collect()
        })
        .collect();
    SemigroupTable::validate(&raw, None).unwrap()
}

/// Small groups used as maximal subgroups of generated minimal ideals.
pub fn small_groups() -> Vec<SemigroupTable> {
    let mut v: Vec<SemigroupTable> = (1..=7).map(cyclic_group).collect();
    v.push(cyclic_group(2).direct_product(&cyclic_group(2)));
    v.push(symmetric_group_3());
    v
}

#[derive(Debug, Clone)]
pub enum Op {
    AdjoinUnit,
    AdjoinZero,
    Opposite,
    ProductWith(usize),
    Relabel(u64),
}

fn op_strategy() -> impl Strategy<Value = Op> {
    prop_oneof![
        Just(Op::AdjoinUnit),
        Just(Op::AdjoinZero),
        Just(Op::Opposite),
        (0..base_semigroups().len()).prop_map(Op::ProductWith),
        any::<u64>().prop_map(Op::Relabel),
    ]
}

pub fn relabeled(s: &SemigroupTable, seed: u64) -> SemigroupTable {
    let mut perm: Vec<usize> = (0..s.order()).collect();
    perm.shuffle(&mut rand::rngs::StdRng::seed_from_u64(seed));
    s.relabel(&perm)
}

/// Applies `ops` in turn, skipping any that would exceed `max_order`.
pub fn apply_ops(mut s: SemigroupTable, ops: &[Op], max_order: usize) -> SemigroupTable {
    for op in ops {
        let next = match op {
            Op::AdjoinUnit | Op::AdjoinZero if s.order() + 1 > max_order => continue,
            Op::AdjoinUnit => s.adjoin_unit(),
            Op::AdjoinZero => adjoin_zero(&s),
            Op::Opposite => s.opposite(),
            Op::ProductWith(i) => {
                let t = &base_semigroups()[*i];
                if s.order() * t.order() > max_order {
                    continue;
                }
                s.direct_product(t)
            }
            Op::Relabel(seed) => relabeled(&s, *seed),
        };
        s = next;
    }
    s
}

/// Semigroups of order at most `max_order` built from the base list.
pub fn semigroup(max_order: usize) -> impl Strategy<Value = SemigroupTable> {
    let base = base_semigroups();
    (0..base.len(), prop::collection::vec(op_strategy(), 0..4))
        .prop_map(move |(i, ops)| apply_ops(base[i].clone(), &ops, max_order))
}

/// Semigroups whose minimal ideal has a single row or a single column:
/// a Rees matrix ideal over a small group, then unit, zero, opposite, and
/// products with monoids that have a zero.
pub fn k_thin_semigroup() -> impl Strategy<Value = SemigroupTable> {
    let groups = small_groups();
    let with_zero = [
        adjoin_zero(&trivial()),
        adjoin_zero(&cyclic_group(2)),
        adjoin_zero(&left_zero_band(2)).adjoin_unit(),
    ];
    let extra = prop_oneof![
        Just(Op::AdjoinUnit),
        Just(Op::AdjoinZero),
        Just(Op::Opposite),
        (0..with_zero.len()).prop_map(Op::ProductWith),
        any::<u64>().prop_map(Op::Relabel),
    ];
    (
        0..groups.len(),
        1usize..=3,
        any::<bool>(),
        prop::collection::vec(any::<u32>(), 3),
        prop::collection::vec(extra, 0..3),
    )
        .prop_map(move |(g, len, tall, picks, ops)| {
            let group = &groups[g];
            let (a, b) = if tall { (len, 1) } else { (1, len) };
            let sandwich: Vec<Vec<usize>> = (0..b)
                .map(|j| (0..a).map(|i| picks[i + j] as usize % group.order()).collect())
                .collect();
            let mut s = rees_matrix(group, a, b, &sandwich).unwrap();
            for op in &ops {
                s = match op {
                    Op::ProductWith(i) => s.direct_product(&with_zero[*i]),
                    other => apply_ops(s, std::slice::from_ref(other), usize::MAX),
                };
            }
            s
        })
}

/// Integer matrices up to 5 × 5 with small entries.
pub fn small_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| {
        prop::collection::vec(prop::collection::vec(prop_oneof![3 => -3i64..=3, 1 => -40i64..=40], c), r)
    })
}
