use dashu_int::IBig;

use super::module::{left_action, BoundaryMatrix, MonoidContext, SummandModule};
use crate::linalg::{hermite_normal_form, IntMatrix, LatticeEchelon};

const PRIME: u64 = 2_147_483_647;

/// Echelon rows over `𝔽_p`, used to measure how much rank an orbit adds.
struct ModPrimeEchelon {
    pivot_row: Vec<Option<usize>>,
    rows: Vec<Vec<u64>>,
}

fn mod_prime(x: &IBig) -> u64 {
    let r = x % IBig::from(PRIME);
    let r = if r < IBig::ZERO { r + IBig::from(PRIME) } else { r };
    u64::try_from(r).expect("residue fits")
}

fn inverse(a: u64) -> u64 {
    let (mut result, mut base, mut exp) = (1u64, a, PRIME - 2);
    while exp > 0 {
        if exp & 1 == 1 {
            result = result * base % PRIME;
        }
        base = base * base % PRIME;
        exp >>= 1;
    }
    result
}

impl ModPrimeEchelon {
    fn new(dim: usize) -> Self {
        ModPrimeEchelon {
            pivot_row: vec![None; dim],
            rows: Vec::new(),
        }
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce(&self, v: &mut [u64]) -> Option<usize> {
        for c in 0..v.len() {
            if v[c] == 0 {
                continue;
            }
            let Some(r) = self.pivot_row[c] else {
                return Some(c);
            };
            let f = v[c];
            for (x, y) in v[c..].iter_mut().zip(&self.rows[r][c..]) {
                if *y != 0 {
                    *x = (*x + PRIME - f * y % PRIME) % PRIME;
                }
            }
        }
        None
    }

    fn insert(&mut self, mut v: Vec<u64>) -> bool {
        let Some(c) = self.reduce(&mut v) else {
            return false;
        };
        let inv = inverse(v[c]);
        for x in &mut v[c..] {
            *x = *x * inv % PRIME;
        }
        self.pivot_row[c] = Some(self.rows.len());
        self.rows.push(v);
        true
    }

    /// Rank added by `vectors`, leaving `self` unchanged.
    fn gain(&self, vectors: &[Vec<u64>]) -> usize {
        let mut residues = ModPrimeEchelon::new(self.pivot_row.len());
        for v in vectors {
            let mut v = v.clone();
            if self.reduce(&mut v).is_some() {
                residues.insert(v);
            }
        }
        residues.rank()
    }
}

/// Builds `∂: C′ → C` whose image is the ℤS-span of `vectors`.
///
/// Generators are chosen greedily by the rank their orbit adds per unit of
/// `|Se|`, with `e` the smallest-`|Se|` idempotent fixing the generator.
/// Candidates are ordered by support size, then support, then coefficients,
/// and ties go to the earlier candidate. A final exact pass adds any vector
/// still outside the integer span.
pub fn cover_by_mapping(
    ctx: &MonoidContext,
    codomain: &SummandModule,
    vectors: &[Vec<IBig>],
) -> BoundaryMatrix {
    let mut order: Vec<&Vec<IBig>> = vectors.iter().collect();
    let support = |v: &Vec<IBig>| -> Vec<usize> {
        v.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    };
    order.sort_by_cached_key(|v| {
        let s = support(v);
        (s.len(), s, (*v).clone())
    });
    let fixer = |v: &[IBig]| {
        ctx.idempotents_by_size()
            .iter()
            .copied()
            .find(|&e| left_action(ctx, codomain, e, v) == v)
            .expect("the identity fixes every vector")
    };
    let orbit = |v: &[IBig]| -> Vec<Vec<IBig>> {
        ctx.table()
            .elements()
            .map(|s| left_action(ctx, codomain, s, v))
            .collect()
    };

    struct Candidate {
        index: usize,
        idempotent: usize,
        size: usize,
        gain: usize,
        orbit: Vec<Vec<u64>>,
    }
    // a beats b when a.gain / a.size > b.gain / b.size
    let beats = |a: &Candidate, b: &Candidate| a.gain * b.size > b.gain * a.size;

    let mut span = ModPrimeEchelon::new(codomain.rank());
    let mut candidates: Vec<Candidate> = order
        .iter()
        .enumerate()
        .map(|(index, v)| {
            let idempotent = fixer(v);
            let orbit: Vec<Vec<u64>> = orbit(v)
                .iter()
                .map(|w| w.iter().map(mod_prime).collect())
                .collect();
            Candidate {
                index,
                idempotent,
                size: ctx.basis(idempotent).len(),
                gain: span.gain(&orbit),
                orbit,
            }
        })
        .filter(|c| c.gain > 0)
        .collect();

    let mut chosen = Vec::new();
    while !candidates.is_empty() {
        let mut best = 0;
        for i in 1..candidates.len() {
            if beats(&candidates[i], &candidates[best]) {
                best = i;
            }
        }
        let fresh = span.gain(&candidates[best].orbit);
        if fresh == 0 {
            candidates.remove(best);
            continue;
        }
        if fresh < candidates[best].gain {
            // stale score; gains only shrink, so re-rank and retry
            candidates[best].gain = fresh;
            continue;
        }
        let c = candidates.remove(best);
        for w in c.orbit {
            span.insert(w);
        }
        chosen.push((c.index, c.idempotent));
    }

    let mut idempotents = Vec::new();
    let mut columns = Vec::new();
    let mut generated = Vec::new();
    for (index, e) in chosen {
        let v = order[index];
        idempotents.push(e);
        columns.push(v.clone());
        generated.extend(orbit(v));
    }
    let dim = codomain.rank();
    let span = hermite_normal_form(&IntMatrix::from_rows_with_cols(&generated, dim));
    let target: Vec<Vec<IBig>> = order.iter().map(|v| (*v).clone()).collect();
    if span != hermite_normal_form(&IntMatrix::from_rows_with_cols(&target, dim)) {
        let mut image = LatticeEchelon::new(dim);
        for row in span.to_rows() {
            image.insert(&row);
        }
        for v in order {
            if image.contains(v) {
                continue;
            }
            idempotents.push(fixer(v));
            columns.push(v.clone());
            for w in orbit(v) {
                image.insert(&w);
            }
        }
    }
    let domain = ctx.module(idempotents);
    BoundaryMatrix::new(ctx, domain, codomain.clone(), columns)
        .expect("columns are fixed by their idempotents")
}
