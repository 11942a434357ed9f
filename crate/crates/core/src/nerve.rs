//! Homology of `BS` straight from the nerve: the chain complex whose
//! `i`-cells are all `i`-tuples of elements, with faces that drop an end or
//! multiply a neighboring pair. Exponential in the dimension, so only for
//! small orders; used to cross-check the resolution engine.

use crate::error::{Error, Result};
use crate::linalg::{homology_from_matrices, FinAbGroup, IntMatrix};
use crate::table::SemigroupTable;

/// Default bound on the number of cells in any one dimension.
pub const DEFAULT_CELL_CAP: usize = 20_000;

fn cells(n: usize, i: usize, cap: usize) -> Result<usize> {
    let count = (n as u128).checked_pow(i as u32).unwrap_or(u128::MAX);
    if count > cap as u128 {
        return Err(Error::DimensionCapExceeded { rank: count, cap });
    }
    Ok(count as usize)
}

fn index_of(tuple: &[usize], n: usize) -> usize {
    tuple.iter().fold(0, |acc, &x| acc * n + x)
}

fn tuple_of(mut index: usize, n: usize, len: usize) -> Vec<usize> {
    let mut t = vec![0; len];
    for slot in t.iter_mut().rev() {
        *slot = index % n;
        index /= n;
    }
    t
}

/// `∂ᵢ` from `i`-tuples to `(i-1)`-tuples, both in lexicographic order.
pub fn bar_boundary(s: &SemigroupTable, i: usize) -> Result<IntMatrix> {
    bar_boundary_capped(s, i, DEFAULT_CELL_CAP)
}

pub fn bar_boundary_capped(s: &SemigroupTable, i: usize, cap: usize) -> Result<IntMatrix> {
    let n = s.order();
    let cols = cells(n, i, cap)?;
    let rows = if i == 0 { 0 } else { cells(n, i - 1, cap)? };
    let mut m = IntMatrix::zeros(rows, cols);
    if i == 0 {
        return Ok(m);
    }
    for c in 0..cols {
        let t = tuple_of(c, n, i);
        m.add_at(index_of(&t[1..], n), c, 1);
        let mut face = Vec::with_capacity(i - 1);
        for j in 1..i {
            face.clear();
            face.extend_from_slice(&t[..j - 1]);
            face.push(s.mul(t[j - 1], t[j]));
            face.extend_from_slice(&t[j + 1..]);
            let sign = if j % 2 == 0 { 1 } else { -1 };
            m.add_at(index_of(&face, n), c, sign);
        }
        let sign = if i % 2 == 0 { 1 } else { -1 };
        m.add_at(index_of(&t[..i - 1], n), c, sign);
    }
    Ok(m)
}

/// `[H₁, …, H_m]` from the nerve complex.
pub fn nerve_homology(s: &SemigroupTable, m: usize) -> Result<Vec<FinAbGroup>> {
    nerve_homology_capped(s, m, DEFAULT_CELL_CAP)
}

pub fn nerve_homology_capped(s: &SemigroupTable, m: usize, cap: usize) -> Result<Vec<FinAbGroup>> {
    cells(s.order(), m + 1, cap)?;
    let mut boundaries = Vec::with_capacity(m + 1);
    for i in 1..=m + 1 {
        boundaries.push(bar_boundary_capped(s, i, cap)?);
    }
    (0..m)
        .map(|k| homology_from_matrices(&boundaries[k], &boundaries[k + 1]))
        .collect()
}

/// Whether the nerve complex up to dimension `m + 1` fits under `cap` cells.
pub fn nerve_fits(order: usize, m: usize, cap: usize) -> bool {
    cells(order, m + 1, cap).is_ok()
}
