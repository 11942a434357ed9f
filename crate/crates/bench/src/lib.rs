//! Inputs shared by the benchmarks.

use bsemi_core::table::{cyclic_group, left_zero_band};
use bsemi_core::{IntMatrix, SemigroupTable};

/// A left zero band times a cyclic group, of order `rows * k`.
pub fn band_times_group(rows: usize, k: usize) -> SemigroupTable {
    left_zero_band(rows).direct_product(&cyclic_group(k))
}

/// A dense `n x n` matrix with entries in `-9..=9` from a fixed LCG.
pub fn pseudo_random_matrix(n: usize, seed: u64) -> IntMatrix {
    let mut state = seed;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
                    ((state >> 33) % 19) as i64 - 9
                })
                .collect()
        })
        .collect();
    IntMatrix::from_rows(&rows)
}
