//! Named example semigroups with known homology.
//!
//! Rectangular-band based examples number `x_ij` (i, j ∈ {1, 2}) as
//! `2(i-1) + (j-1)`, followed by any extra elements.

use crate::table::SemigroupTable;

fn table(rows: &[&[usize]]) -> SemigroupTable {
    let raw: Vec<Vec<i64>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| x as i64).collect())
        .collect();
    SemigroupTable::validate(&raw, None).expect("fixture tables are associative")
}

fn x(i: usize, j: usize) -> usize {
    2 * i + j
}

/// Product of two elements of `Rect₂²` extended by letters `y`, `z`, … that
/// all behave like `x₁₁` on the outside: `a_ij b_kl = x_il`.
fn band_like(extra: usize) -> SemigroupTable {
    let n = 4 + extra;
    let coords = |a: usize| if a < 4 { (a / 2, a % 2) } else { (0, 0) };
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| (0..n).map(|b| x(coords(a).0, coords(b).1)).collect())
        .collect();
    let refs: Vec<&[usize]> = rows.iter().map(Vec::as_slice).collect();
    table(&refs)
}

/// `Rect₂²` plus one idempotent `q` with `x_ij q = x_i1` and `q x = x`.
/// Has no zero, yet its classifying space is contractible.
pub fn contractible_without_zero() -> SemigroupTable {
    right_units(1)
}

/// `Rect₂²` plus idempotents `q`, `r` with `x q = x r = x_i1`,
/// `q x = r x = x`, `q q = q r = q`, `r r = r q = r`. `BS ≃ S³`.
pub fn three_sphere() -> SemigroupTable {
    right_units(2)
}

fn right_units(count: usize) -> SemigroupTable {
    let n = 4 + count;
    let rows: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| match (a < 4, b < 4) {
                    (true, true) => x(a / 2, b % 2),
                    (true, false) => x(a / 2, 0),
                    (false, true) => b,
                    (false, false) => a,
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[usize]> = rows.iter().map(Vec::as_slice).collect();
    table(&refs)
}

/// `Rect₂²` plus `y₁₁`, with `Hᵢ = ℤ` for every `i ≥ 2`.
pub fn sphere_tower() -> SemigroupTable {
    band_like(1)
}

/// `Rect₂²` plus `y₁₁`, `z₁₁`, with `Hᵢ` free of rank `2^(i-2)` for `i ≥ 2`.
pub fn doubling_ranks() -> SemigroupTable {
    band_like(2)
}

/// Order 9, `BS` a Moore space `M(C₂, 3)`.
pub fn moore_c2_3() -> SemigroupTable {
    table(&[
        &[0, 1, 0, 1, 0, 0, 0, 0, 0],
        &[0, 1, 0, 1, 0, 0, 0, 1, 1],
        &[2, 3, 2, 3, 2, 2, 2, 2, 2],
        &[2, 3, 2, 3, 2, 2, 2, 3, 3],
        &[0, 1, 0, 1, 0, 4, 4, 0, 0],
        &[0, 1, 2, 3, 0, 5, 5, 0, 0],
        &[0, 1, 2, 3, 0, 6, 6, 0, 0],
        &[0, 1, 0, 1, 4, 4, 0, 7, 8],
        &[0, 1, 0, 1, 4, 0, 4, 7, 8],
    ])
}

/// Order 12, `BS` a Moore space `M(C₂, 2)`.
pub fn moore_c2_2() -> SemigroupTable {
    table(&[
        &[0, 0, 0, 0, 4, 4, 4, 4, 0, 0, 4, 4],
        &[1, 1, 1, 1, 5, 5, 5, 5, 1, 1, 5, 5],
        &[2, 2, 2, 2, 6, 6, 6, 6, 2, 2, 6, 6],
        &[3, 3, 3, 3, 7, 7, 7, 7, 3, 3, 7, 7],
        &[0, 0, 0, 0, 4, 4, 4, 4, 4, 4, 0, 0],
        &[1, 1, 1, 1, 5, 5, 5, 5, 5, 5, 1, 1],
        &[2, 2, 2, 2, 6, 6, 6, 6, 6, 6, 2, 2],
        &[3, 3, 3, 3, 7, 7, 7, 7, 7, 7, 3, 3],
        &[0, 3, 2, 3, 4, 7, 6, 7, 8, 9, 10, 11],
        &[0, 2, 2, 3, 4, 6, 6, 7, 8, 9, 10, 11],
        &[0, 2, 3, 2, 4, 6, 7, 6, 10, 11, 8, 9],
        &[0, 3, 3, 2, 4, 7, 7, 6, 10, 11, 8, 9],
    ])
}

/// Order 10, with `H₆ = ℤ⁹ × C_1494640`.
pub fn large_torsion() -> SemigroupTable {
    table(&[
        &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        &[2, 3, 2, 3, 2, 2, 2, 2, 2, 2],
        &[2, 3, 2, 3, 2, 2, 2, 2, 2, 2],
        &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
        &[0, 1, 0, 1, 0, 0, 0, 4, 4, 5],
        &[0, 1, 0, 1, 0, 0, 0, 6, 5, 6],
        &[0, 1, 0, 1, 0, 0, 0, 0, 6, 4],
    ])
}

/// Every named fixture with a short identifier.
pub fn all() -> Vec<(&'static str, SemigroupTable)> {
    vec![
        ("contractible-without-zero", contractible_without_zero()),
        ("three-sphere", three_sphere()),
        ("sphere-tower", sphere_tower()),
        ("doubling-ranks", doubling_ranks()),
        ("moore-c2-3", moore_c2_3()),
        ("moore-c2-2", moore_c2_2()),
        ("large-torsion", large_torsion()),
    ]
}
