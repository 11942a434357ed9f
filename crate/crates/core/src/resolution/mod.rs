//! Homology of classifying spaces through projective resolutions of ℤ over
//! the monoid ring.
//!
//! [`get_homology`] first reduces the problem: semigroups whose minimal ideal
//! is left- or right-simple have the homology of their maximal subgroup, and
//! an idempotent `e` with `eSe = eS` or `eSe = Se` lets the computation pass
//! to the smaller monoid `eSe`. What remains is resolved over `ℤS` starting
//! from `ℤSe` for an idempotent with smallest `|Se|`.

mod cover;
mod module;
mod node;

pub use cover::cover_by_mapping;
pub use module::{
    augmentation_matrix, boundary_as_int_matrix, left_action, BoundaryMatrix, MonoidContext,
    MonoidRingElement, SummandModule, trailing_kernel,
};
pub use node::{Child, Resolution, ResolutionCaps, ResolutionNode};

use dashu_int::UBig;

use crate::error::{Error, Result};
use crate::ideal::min_ideal;
use crate::linalg::{FinAbGroup, IntMatrix};
use crate::table::SemigroupTable;

/// `[H₁, …, H_m]` of `BS` with default resource caps.
pub fn get_homology(s: &SemigroupTable, m: usize) -> Result<Vec<FinAbGroup>> {
    get_homology_with_caps(s, m, ResolutionCaps::default())
}

pub fn get_homology_with_caps(
    s: &SemigroupTable,
    m: usize,
    caps: ResolutionCaps,
) -> Result<Vec<FinAbGroup>> {
    let rees = min_ideal(s)?;
    if rees.is_k_thin() {
        let h = rees.h_set();
        if let Some(pattern) = small_group_pattern(s, h, m) {
            return Ok(pattern);
        }
        let group = s.restrict(h).expect("the maximal subgroup is closed");
        return resolve_monoid(&group, m, caps);
    }
    if let Some(corner) = one_sided_corner(s) {
        if corner.len() < s.order() {
            let sub = s.restrict(&corner).expect("eSe is closed");
            return get_homology_with_caps(&sub, m, caps);
        }
        // eSe = S forces e to be the identity
        if s.identity().is_none() {
            return Err(Error::NotAMonoid);
        }
        return resolve_monoid(s, m, caps);
    }
    resolve_monoid(&s.adjoin_unit(), m, caps)
}

/// Homology of `BC_p` or of a group of order 4, read off by dimension.
fn small_group_pattern(s: &SemigroupTable, h: &[usize], m: usize) -> Option<Vec<FinAbGroup>> {
    let order = h.len();
    let by_dim: Box<dyn Fn(usize) -> FinAbGroup> = match order {
        1 => Box::new(|_| FinAbGroup::trivial()),
        2 | 3 | 5 | 7 => Box::new(move |i| {
            if i % 2 == 1 {
                FinAbGroup::cyclic(order as u64)
            } else {
                FinAbGroup::trivial()
            }
        }),
        4 => {
            let mut squares: Vec<usize> = h.iter().map(|&x| s.mul(x, x)).collect();
            squares.sort_unstable();
            squares.dedup();
            if squares.len() == 1 {
                Box::new(|i| {
                    let copies = if i % 2 == 1 { (i + 3) / 2 } else { i / 2 };
                    FinAbGroup::from_invariants(UBig::ZERO, &vec![UBig::from(2u8); copies])
                })
            } else {
                Box::new(|i| {
                    if i % 2 == 1 {
                        FinAbGroup::cyclic(4u8)
                    } else {
                        FinAbGroup::trivial()
                    }
                })
            }
        }
        _ => return None,
    };
    Some((1..=m).map(by_dim).collect())
}

/// The smallest `eSe` (ties by `e`) over idempotents with `eSe = eS` or
/// `eSe = Se`, as an ascending element list.
fn one_sided_corner(s: &SemigroupTable) -> Option<Vec<usize>> {
    let n = s.order();
    let collect = |f: &dyn Fn(usize) -> usize| {
        let mut seen = vec![false; n];
        for x in 0..n {
            seen[f(x)] = true;
        }
        seen
    };
    let mut best: Option<Vec<usize>> = None;
    for e in s.idempotents() {
        let ese = collect(&|x| s.mul(s.mul(e, x), e));
        let es = collect(&|x| s.mul(e, x));
        let se = collect(&|x| s.mul(x, e));
        if ese == es || ese == se {
            let set: Vec<usize> = (0..n).filter(|&x| ese[x]).collect();
            if best.as_ref().is_none_or(|b| set.len() < b.len()) {
                best = Some(set);
            }
        }
    }
    best
}

/// Resolves ℤ over `ℤS` for a monoid `S` and reads off `H₁..H_m`.
pub fn resolve_monoid(s: &SemigroupTable, m: usize, caps: ResolutionCaps) -> Result<Vec<FinAbGroup>> {
    let (mut res, root) = build_root(s, caps)?;
    res.homology_range(root, m)
}

/// The resolution graph seeded with `∂₁`, covering the augmentation kernel
/// of `ℤSe` for an idempotent `e` with smallest `|Se|`.
pub fn build_root(s: &SemigroupTable, caps: ResolutionCaps) -> Result<(Resolution, usize)> {
    let ctx = MonoidContext::new(s.clone())?;
    let e = ctx.idempotents_by_size()[0];
    let c0 = ctx.module(vec![e]);
    let ones = IntMatrix::from_rows(&[vec![1i64; c0.rank()]]);
    let z0 = trailing_kernel(&ones);
    let d1 = cover_by_mapping(&ctx, &c0, &z0);
    let mut res = Resolution::new(ctx, caps);
    let root = res.intern(d1)?;
    Ok((res, root))
}
