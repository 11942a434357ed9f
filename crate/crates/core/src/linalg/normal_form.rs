//! Hermite and Smith normal forms, integer kernels, and lattice solves.
//!
//! All eliminations pick the nonzero entry of least absolute value as pivot,
//! which keeps coefficient growth modest on the matrices that arise from
//! resolutions.

use dashu_int::ops::{Abs, DivEuclid};
use dashu_int::IBig;

use super::matrix::IntMatrix;
use crate::error::{Error, Result};

type Rows = Vec<Vec<IBig>>;

/// `rows[target] -= q * rows[src]`, skipping the first `from` columns.
fn sub_row(rows: &mut Rows, target: usize, src: usize, q: &IBig, from: usize) {
    let (t, s) = if target < src {
        let (lo, hi) = rows.split_at_mut(src);
        (&mut lo[target], &hi[0])
    } else {
        let (lo, hi) = rows.split_at_mut(target);
        (&mut hi[0], &lo[src])
    };
    for (x, y) in t[from..].iter_mut().zip(&s[from..]) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

fn negate_row(row: &mut [IBig]) {
    for x in row {
        *x = -std::mem::take(x);
    }
}

fn min_abs_in_column(rows: &Rows, start: usize, col: usize) -> Option<usize> {
    let mut best: Option<(usize, IBig)> = None;
    for (i, row) in rows.iter().enumerate().skip(start) {
        let v = &row[col];
        if v.is_zero() {
            continue;
        }
        let a = v.abs();
        if best.as_ref().is_none_or(|(_, b)| a < *b) {
            let one = a == IBig::ONE;
            best = Some((i, a));
            if one {
                break;
            }
        }
    }
    best.map(|(i, _)| i)
}

/// Brings `rows` to row echelon form using unimodular row operations, looking
/// only at the first `ncols` columns for pivots; later columns ride along.
/// Pivots end up positive. Returns the pivot column of each leading row.
pub(crate) fn echelon(rows: &mut Rows, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        while let Some(p) = min_abs_in_column(rows, r, c) {
            rows.swap(r, p);
            let mut clean = true;
            for i in r + 1..rows.len() {
                if rows[i][c].is_zero() {
                    continue;
                }
                let q = &rows[i][c] / &rows[r][c];
                sub_row(rows, i, r, &q, c);
                if !rows[i][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                if rows[r][c] < IBig::ZERO {
                    negate_row(&mut rows[r]);
                }
                pivots.push(c);
                r += 1;
                break;
            }
        }
    }
    pivots
}

/// Reduces entries above each pivot into `[0, pivot)`.
fn reduce_above(rows: &mut Rows, pivots: &[usize]) {
    for (k, &c) in pivots.iter().enumerate() {
        for i in 0..k {
            let q = (&rows[i][c]).div_euclid(&rows[k][c]);
            if !q.is_zero() {
                sub_row(rows, i, k, &q, c);
            }
        }
    }
}

/// Row-style Hermite normal form: echelon, positive pivots, reduced above
/// pivots, zero rows dropped. Unique for the row lattice.
pub fn hermite_normal_form(m: &IntMatrix) -> IntMatrix {
    let mut rows = m.to_rows();
    let pivots = echelon(&mut rows, m.cols());
    rows.truncate(pivots.len());
    reduce_above(&mut rows, &pivots);
    IntMatrix::from_rows_with_cols(&rows, m.cols())
}

pub fn rank(m: &IntMatrix) -> usize {
    let mut rows = m.to_rows();
    echelon(&mut rows, m.cols()).len()
}

/// `U·M·V = D` with `U`, `V` unimodular and `D` diagonal with `d₁ | d₂ | …`.
#[derive(Debug, Clone)]
pub struct SmithDecomposition {
    pub d: IntMatrix,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

pub fn smith_normal_form(m: &IntMatrix) -> IntMatrix {
    let diag = smith_diagonal(m);
    let mut d = IntMatrix::zeros(m.rows(), m.cols());
    for (i, x) in diag.into_iter().enumerate() {
        d.set(i, i, x);
    }
    d
}

pub fn smith_with_transforms(m: &IntMatrix) -> SmithDecomposition {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = m.to_rows();
    let mut u = IntMatrix::identity(rows).to_rows();
    // columns of V are stored as rows of vt
    let mut vt = IntMatrix::identity(cols).to_rows();
    let n = rows.min(cols);
    for t in 0..n {
        loop {
            let mut best: Option<(usize, usize, IBig)> = None;
            for (i, row) in a.iter().enumerate().skip(t) {
                for (j, x) in row.iter().enumerate().skip(t) {
                    if !x.is_zero() && best.as_ref().is_none_or(|b| x.abs() < b.2) {
                        best = Some((i, j, x.abs()));
                    }
                }
            }
            let Some((pi, pj, _)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            if pj != t {
                for row in a.iter_mut() {
                    row.swap(t, pj);
                }
                vt.swap(t, pj);
            }
            let mut clean = true;
            for i in t + 1..rows {
                if a[i][t].is_zero() {
                    continue;
                }
                let q = &a[i][t] / &a[t][t];
                sub_row(&mut a, i, t, &q, t);
                sub_row(&mut u, i, t, &q, 0);
                clean &= a[i][t].is_zero();
            }
            for j in t + 1..cols {
                if a[t][j].is_zero() {
                    continue;
                }
                let q = &a[t][j] / &a[t][t];
                for row in a.iter_mut() {
                    let y = row[t].clone();
                    row[j] -= &q * y;
                }
                sub_row(&mut vt, j, t, &q, 0);
                clean &= a[t][j].is_zero();
            }
            if !clean {
                continue;
            }
            let piv = a[t][t].clone();
            let bad = (t + 1..rows)
                .find(|&i| a[i][t + 1..].iter().any(|x| !(x % &piv).is_zero()));
            match bad {
                Some(i) => {
                    let minus_one = IBig::from(-1);
                    sub_row(&mut a, t, i, &minus_one, 0);
                    sub_row(&mut u, t, i, &minus_one, 0);
                }
                None => break,
            }
        }
        if a[t][t] < IBig::ZERO {
            negate_row(&mut a[t]);
            negate_row(&mut u[t]);
        }
    }
    SmithDecomposition {
        d: IntMatrix::from_rows_with_cols(&a, cols),
        u: IntMatrix::from_rows_with_cols(&u, rows),
        v: IntMatrix::from_rows_with_cols(&vt, cols).transpose(),
    }
}

/// Nonzero invariant factors in divisibility order.
pub fn smith_diagonal(m: &IntMatrix) -> Vec<IBig> {
    // Two echelon passes shrink the problem to a square upper-triangular
    // matrix of size rank before the full Smith loop.
    let mut rows = m.to_rows();
    let r1 = echelon(&mut rows, m.cols()).len();
    rows.truncate(r1);
    let t = IntMatrix::from_rows_with_cols(&rows, m.cols()).transpose();
    let mut rows = t.to_rows();
    let r2 = echelon(&mut rows, t.cols()).len();
    rows.truncate(r2);
    let square = IntMatrix::from_rows_with_cols(&rows, r1);
    let d = smith_with_transforms_diag_only(&square);
    d.into_iter().filter(|x| !x.is_zero()).collect()
}

fn smith_with_transforms_diag_only(m: &IntMatrix) -> Vec<IBig> {
    if m.rows() == 0 || m.cols() == 0 {
        return Vec::new();
    }
    let dec = smith_with_transforms(m);
    (0..m.rows().min(m.cols()))
        .map(|i| dec.d.get(i, i).clone())
        .collect()
}

/// Columns form a ℤ-basis of `{v : M v = 0}`, in reduced Hermite form, so the
/// result depends only on the kernel lattice.
pub fn kernel_basis(m: &IntMatrix) -> IntMatrix {
    let (r, c) = (m.rows(), m.cols());
    let mut aug: Rows = (0..c)
        .map(|j| {
            let mut row = m.column(j);
            row.resize(r + c, IBig::ZERO);
            row[r + j] = IBig::ONE;
            row
        })
        .collect();
    let rank = echelon(&mut aug, r).len();
    let mut kernel: Rows = aug.drain(rank..).map(|row| row[r..].to_vec()).collect();
    let pivots = echelon(&mut kernel, c);
    debug_assert_eq!(pivots.len(), kernel.len());
    reduce_above(&mut kernel, &pivots);
    IntMatrix::from_columns(c, &kernel)
}

/// Finds an integer `C` with `K·C = A`.
pub fn solve_in_lattice(k: &IntMatrix, a: &IntMatrix) -> Result<IntMatrix> {
    let (n, kc) = (k.rows(), k.cols());
    if a.rows() != n {
        return Err(Error::DimensionMismatch(format!(
            "lattice has {n} rows, targets have {}",
            a.rows()
        )));
    }
    // Column-reduce K: rows of [Kᵀ | I] become (column of L, column of V)
    // with K·V = [L | 0] and L in column echelon form.
    let mut aug: Rows = (0..kc)
        .map(|j| {
            let mut row = k.column(j);
            row.resize(n + kc, IBig::ZERO);
            row[n + j] = IBig::ONE;
            row
        })
        .collect();
    let pivots = echelon(&mut aug, n);

    let mut c = IntMatrix::zeros(kc, a.cols());
    for col in 0..a.cols() {
        let mut residual = a.column(col);
        for (t, &p) in pivots.iter().enumerate() {
            if residual[p].is_zero() {
                continue;
            }
            let l = &aug[t];
            if !(&residual[p] % &l[p]).is_zero() {
                return Err(Error::NotInLattice);
            }
            let coeff = &residual[p] / &l[p];
            for (x, y) in residual.iter_mut().zip(&l[..n]) {
                if !y.is_zero() {
                    *x -= &coeff * y;
                }
            }
            for (row, y) in l[n..].iter().enumerate() {
                if !y.is_zero() {
                    let cur = c.get(row, col) + &coeff * y;
                    c.set(row, col, cur);
                }
            }
        }
        if residual.iter().any(|x| !x.is_zero()) {
            return Err(Error::NotInLattice);
        }
    }
    Ok(c)
}
