//! Projective modules `ℤSe₁ ⊕ … ⊕ ℤSeₙ` over a finite monoid and the
//! ℤS-linear maps between them.

use std::collections::BTreeMap;

use dashu_int::IBig;

use crate::error::{Error, Result};
use crate::linalg::{kernel_basis, IntMatrix};
use crate::table::SemigroupTable;

const ABSENT: usize = usize::MAX;

/// A finite monoid with the ℤ-basis `Se` precomputed for each idempotent `e`.
#[derive(Debug, Clone)]
pub struct MonoidContext {
    table: SemigroupTable,
    bases: Vec<Vec<usize>>,
    positions: Vec<Vec<usize>>,
    // idempotents ordered by (|Se|, index)
    by_size: Vec<usize>,
}

impl MonoidContext {
    pub fn new(table: SemigroupTable) -> Result<Self> {
        if !table.is_monoid() {
            return Err(Error::NotAMonoid);
        }
        let n = table.order();
        let mut bases = vec![Vec::new(); n];
        let mut positions = vec![Vec::new(); n];
        let idempotents = table.idempotents();
        for &e in &idempotents {
            let mut member = vec![false; n];
            for s in 0..n {
                member[table.mul(s, e)] = true;
            }
            let basis: Vec<usize> = (0..n).filter(|&x| member[x]).collect();
            let mut pos = vec![ABSENT; n];
            for (p, &x) in basis.iter().enumerate() {
                pos[x] = p;
            }
            bases[e] = basis;
            positions[e] = pos;
        }
        let mut by_size = idempotents;
        by_size.sort_by_key(|&e| (bases[e].len(), e));
        Ok(MonoidContext {
            table,
            bases,
            positions,
            by_size,
        })
    }

    pub fn table(&self) -> &SemigroupTable {
        &self.table
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table.mul(a, b)
    }

    /// `Se`, ascending. Empty for non-idempotents.
    pub fn basis(&self, e: usize) -> &[usize] {
        &self.bases[e]
    }

    fn position(&self, e: usize, t: usize) -> usize {
        self.positions[e][t]
    }

    /// Idempotents sorted by `|Se|`, then by index.
    pub fn idempotents_by_size(&self) -> &[usize] {
        &self.by_size
    }

    pub fn module(&self, idempotents: Vec<usize>) -> SummandModule {
        let mut offsets = Vec::with_capacity(idempotents.len() + 1);
        offsets.push(0);
        for &e in &idempotents {
            assert!(!self.bases[e].is_empty(), "{e} is not idempotent");
            offsets.push(offsets.last().unwrap() + self.bases[e].len());
        }
        SummandModule {
            idempotents,
            offsets,
        }
    }
}

/// `ℤSe₁ ⊕ … ⊕ ℤSeₙ`, with ℤ-basis the concatenation of the sets `Seⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SummandModule {
    idempotents: Vec<usize>,
    offsets: Vec<usize>,
}

impl SummandModule {
    pub fn idempotents(&self) -> &[usize] {
        &self.idempotents
    }

    pub fn summands(&self) -> usize {
        self.idempotents.len()
    }

    /// Total ℤ-rank.
    pub fn rank(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    /// ℤ-basis coordinates belonging to summand `j`.
    pub fn block(&self, j: usize) -> std::ops::Range<usize> {
        self.offsets[j]..self.offsets[j + 1]
    }

    /// Summand owning a ℤ-basis coordinate.
    pub fn summand_of(&self, coord: usize) -> usize {
        self.offsets.partition_point(|&o| o <= coord) - 1
    }
}

/// `s·v` for `v` written over the ℤ-basis of `module`.
pub fn left_action(ctx: &MonoidContext, module: &SummandModule, s: usize, v: &[IBig]) -> Vec<IBig> {
    let mut out = vec![IBig::ZERO; module.rank()];
    for (j, &e) in module.idempotents().iter().enumerate() {
        let start = module.offsets[j];
        for (p, &t) in ctx.basis(e).iter().enumerate() {
            let c = &v[start + p];
            if !c.is_zero() {
                out[start + ctx.position(e, ctx.mul(s, t))] += c;
            }
        }
    }
    out
}

/// An element of ℤS as a sparse map from monoid elements to coefficients.
pub type MonoidRingElement = BTreeMap<usize, IBig>;

/// A ℤS-linear map sending the generator `eⱼ` of domain summand `j` to
/// `columns[j]`, a vector over the codomain's ℤ-basis fixed by `eⱼ`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BoundaryMatrix {
    domain: SummandModule,
    codomain: SummandModule,
    columns: Vec<Vec<IBig>>,
}

impl BoundaryMatrix {
    pub fn new(
        ctx: &MonoidContext,
        domain: SummandModule,
        codomain: SummandModule,
        columns: Vec<Vec<IBig>>,
    ) -> Result<Self> {
        if columns.len() != domain.summands() {
            return Err(Error::DimensionMismatch(format!(
                "{} columns for {} summands",
                columns.len(),
                domain.summands()
            )));
        }
        for (j, col) in columns.iter().enumerate() {
            if col.len() != codomain.rank() {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} has length {}, codomain rank is {}",
                    col.len(),
                    codomain.rank()
                )));
            }
            let e = domain.idempotents()[j];
            if left_action(ctx, &codomain, e, col) != *col {
                return Err(Error::DimensionMismatch(format!(
                    "column {j} is not fixed by its idempotent {e}"
                )));
            }
        }
        Ok(BoundaryMatrix {
            domain,
            codomain,
            columns,
        })
    }

    pub fn domain(&self) -> &SummandModule {
        &self.domain
    }

    pub fn codomain(&self) -> &SummandModule {
        &self.codomain
    }

    pub fn columns(&self) -> &[Vec<IBig>] {
        &self.columns
    }

    /// The right multiplier from domain summand `j` to codomain summand `i`.
    pub fn entry(&self, i: usize, j: usize, ctx: &MonoidContext) -> MonoidRingElement {
        let f = self.codomain.idempotents()[i];
        let range = self.codomain.block(i);
        ctx.basis(f)
            .iter()
            .zip(&self.columns[j][range])
            .filter(|(_, c)| !c.is_zero())
            .map(|(&t, c)| (t, c.clone()))
            .collect()
    }
}

/// Entry `(i, j)` is the coefficient sum of column `j` over codomain summand `i`.
pub fn augmentation_matrix(b: &BoundaryMatrix) -> IntMatrix {
    let rows = b.codomain.summands();
    let mut m = IntMatrix::zeros(rows, b.domain.summands());
    for (j, col) in b.columns.iter().enumerate() {
        for i in 0..rows {
            let total: IBig = col[b.codomain.block(i)].iter().sum();
            m.set(i, j, total);
        }
    }
    m
}

/// The ℤ-linear matrix of the map over both ℤ-bases. The column for basis
/// element `t ∈ Seⱼ` is `t·columns[j]`, since `t = t·eⱼ`.
pub fn boundary_as_int_matrix(ctx: &MonoidContext, b: &BoundaryMatrix) -> IntMatrix {
    let mut cols = Vec::with_capacity(b.domain.rank());
    for (j, &e) in b.domain.idempotents().iter().enumerate() {
        for &t in ctx.basis(e) {
            cols.push(left_action(ctx, &b.codomain, t, &b.columns[j]));
        }
    }
    IntMatrix::from_columns(b.codomain.rank(), &cols)
}

/// A ℤ-basis of `ker m` in echelon form with each vector's pivot at its
/// last nonzero coordinate, so vectors compensate on earlier summands.
pub fn trailing_kernel(m: &IntMatrix) -> Vec<Vec<IBig>> {
    let mut cols = m.columns();
    cols.reverse();
    let reversed = IntMatrix::from_columns(m.rows(), &cols);
    kernel_basis(&reversed)
        .columns()
        .into_iter()
        .map(|mut v| {
            v.reverse();
            v
        })
        .collect()
}
