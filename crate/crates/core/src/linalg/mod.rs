//! Exact integer linear algebra.

mod abelian;
mod lattice;
mod matrix;
mod normal_form;

pub use abelian::{direct_sum, FinAbGroup};
pub use lattice::LatticeEchelon;
pub use matrix::IntMatrix;
pub use normal_form::{
    hermite_normal_form, kernel_basis, rank, smith_diagonal, smith_normal_form,
    smith_with_transforms, solve_in_lattice, SmithDecomposition,
};

use dashu_int::ops::UnsignedAbs;
use dashu_int::UBig;

use crate::error::{Error, Result};

/// `ker(M_out) / im(M_in)` for a segment `· <-M_out- · <-M_in- ·`.
pub fn homology_from_matrices(m_out: &IntMatrix, m_in: &IntMatrix) -> Result<FinAbGroup> {
    if m_out.cols() != m_in.rows() {
        return Err(Error::DimensionMismatch(format!(
            "outgoing map has {} columns, incoming map has {} rows",
            m_out.cols(),
            m_in.rows()
        )));
    }
    if !(m_out * m_in).is_zero() {
        return Err(Error::NotAComplex);
    }
    let kernel = kernel_basis(m_out);
    let coords = solve_in_lattice(&kernel, m_in).map_err(|_| Error::NotAComplex)?;
    let diag = smith_diagonal(&coords);
    let free = kernel.cols() - diag.len();
    let orders: Vec<UBig> = diag.into_iter().map(|d| d.unsigned_abs()).collect();
    Ok(FinAbGroup::from_invariants(UBig::from(free), &orders))
}
