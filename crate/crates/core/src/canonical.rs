//! Canonical representatives up to isomorphism and anti-isomorphism.

use crate::error::{Error, Result};
use crate::table::SemigroupTable;

pub const DEFAULT_CANONICAL_CAP: usize = 5;

/// Lexicographically least flattened table among all relabelings of `S` and
/// of its opposite.
pub fn canonical_form(s: &SemigroupTable) -> Result<SemigroupTable> {
    canonical_form_capped(s, DEFAULT_CANONICAL_CAP)
}

pub fn canonical_form_capped(s: &SemigroupTable, cap: usize) -> Result<SemigroupTable> {
    let n = s.order();
    if n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    let op = s.opposite();
    let mut best: Option<Vec<usize>> = None;
    let mut perm: Vec<usize> = (0..n).collect();
    let mut candidate = vec![0usize; n * n];
    for_each_permutation(&mut perm, &mut |perm| {
        for t in [s, &op] {
            for a in 0..n {
                for b in 0..n {
                    candidate[perm[a] * n + perm[b]] = perm[t.mul(a, b)];
                }
            }
            if best.as_ref().is_none_or(|b| candidate < *b) {
                best = Some(candidate.clone());
            }
        }
    });
    Ok(SemigroupTable::from_entries(n, best.unwrap(), None).expect("relabeling preserves validity"))
}

/// Heap's algorithm.
fn for_each_permutation(perm: &mut [usize], f: &mut impl FnMut(&[usize])) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    f(perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            f(perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}
