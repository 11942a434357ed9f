//! Exhaustive enumeration of small semigroups and their homology.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::canonical::canonical_form;
use crate::error::{Error, Result};
use crate::ideal::min_ideal;
use crate::linalg::FinAbGroup;
use crate::resolution::get_homology;
use crate::table::SemigroupTable;

/// Largest order enumerated by default.
pub const STANDARD_MAX_ORDER: usize = 3;
/// Largest order enumerated at all.
pub const EXTENDED_MAX_ORDER: usize = 4;
/// Dimensions recorded per class.
pub const SIGNATURE_DIMS: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignatureCount {
    pub signature: Vec<FinAbGroup>,
    pub count: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport {
    pub order: usize,
    /// Labeled associative tables found.
    pub tables: usize,
    /// Classes up to isomorphism and anti-isomorphism.
    pub classes: usize,
    pub non_k_thin: usize,
    /// By descending count, then by display text.
    pub signatures: Vec<SignatureCount>,
}

impl CensusReport {
    pub fn count_of(&self, signature: &[&str]) -> usize {
        self.signatures
            .iter()
            .find(|s| {
                s.signature.len() == signature.len()
                    && s.signature.iter().zip(signature).all(|(g, t)| g.to_string() == *t)
            })
            .map_or(0, |s| s.count)
    }
}

const UNSET: usize = usize::MAX;

struct Filler {
    n: usize,
    cells: Vec<usize>,
    found: Vec<Vec<usize>>,
}

impl Filler {
    fn get(&self, a: usize, b: usize) -> Option<usize> {
        let v = self.cells[a * self.n + b];
        (v != UNSET).then_some(v)
    }

    /// Checks every triple that the entry at `(a, b)` completes.
    fn consistent(&self, a: usize, b: usize) -> bool {
        let n = self.n;
        let assoc = |x: usize, y: usize, z: usize| -> bool {
            let lhs = self.get(x, y).and_then(|xy| self.get(xy, z));
            let rhs = self.get(y, z).and_then(|yz| self.get(x, yz));
            match (lhs, rhs) {
                (Some(l), Some(r)) => l == r,
                _ => true,
            }
        };
        for z in 0..n {
            if !assoc(a, b, z) || !assoc(z, a, b) {
                return false;
            }
        }
        for x in 0..n {
            for y in 0..n {
                if self.get(x, y) == Some(a) && !assoc(x, y, b) {
                    return false;
                }
                if self.get(x, y) == Some(b) && !assoc(a, x, y) {
                    return false;
                }
            }
        }
        true
    }

    fn fill(&mut self, cell: usize) {
        let n = self.n;
        if cell == n * n {
            self.found.push(self.cells.clone());
            return;
        }
        let (a, b) = (cell / n, cell % n);
        for v in 0..n {
            self.cells[cell] = v;
            if self.consistent(a, b) {
                self.fill(cell + 1);
            }
        }
        self.cells[cell] = UNSET;
    }
}

/// All associative tables of order `n`, filled row by row with pruning.
/// Work is split by the first entry across threads.
pub fn associative_tables(n: usize) -> Vec<SemigroupTable> {
    if n == 0 {
        return Vec::new();
    }
    let shards: Vec<Vec<Vec<usize>>> = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut f = Filler {
                n,
                cells: vec![UNSET; n * n],
                found: Vec::new(),
            };
            f.cells[0] = first;
            if f.consistent(0, 0) {
                f.fill(1);
            }
            f.found
        })
        .collect();
    shards
        .into_iter()
        .flatten()
        .map(|cells| SemigroupTable::from_entries(n, cells, None).expect("filled tables are valid"))
        .collect()
}

/// One representative per class up to isomorphism and anti-isomorphism, in
/// ascending flattened order.
pub fn semigroup_classes(n: usize) -> Result<Vec<SemigroupTable>> {
    let tables = associative_tables(n);
    let forms: Vec<SemigroupTable> = tables
        .par_iter()
        .map(canonical_form)
        .collect::<Result<_>>()?;
    let unique: HashSet<SemigroupTable> = forms.into_iter().collect();
    let mut classes: Vec<SemigroupTable> = unique.into_iter().collect();
    classes.sort_by(|x, y| x.entries().cmp(y.entries()));
    Ok(classes)
}

/// Homology signatures `H₁..H₆` of every class of order `n`.
pub fn run_census(n: usize, extended: bool) -> Result<CensusReport> {
    run_census_with_progress(n, extended, |_, _| {})
}

/// As [`run_census`], calling `progress(done, total)` as classes finish.
pub fn run_census_with_progress(
    n: usize,
    extended: bool,
    progress: impl Fn(usize, usize) + Sync,
) -> Result<CensusReport> {
    let cap = if extended { EXTENDED_MAX_ORDER } else { STANDARD_MAX_ORDER };
    if n == 0 || n > cap {
        return Err(Error::OrderTooLarge { order: n, cap });
    }
    let tables = associative_tables(n).len();
    let classes = semigroup_classes(n)?;
    let total = classes.len();
    let done = std::sync::atomic::AtomicUsize::new(0);
    let results: Vec<(Vec<FinAbGroup>, bool)> = classes
        .par_iter()
        .map(|s| {
            let h = get_homology(s, SIGNATURE_DIMS)?;
            let thin = min_ideal(s)?.is_k_thin();
            let k = done.fetch_add(1, std::sync::atomic::Ordering::Relaxed) + 1;
            progress(k, total);
            Ok((h, thin))
        })
        .collect::<Result<_>>()?;

    let mut buckets: BTreeMap<Vec<String>, SignatureCount> = BTreeMap::new();
    let mut non_k_thin = 0;
    for (signature, thin) in results {
        if !thin {
            non_k_thin += 1;
        }
        let key = signature.iter().map(ToString::to_string).collect();
        buckets
            .entry(key)
            .or_insert_with(|| SignatureCount { signature, count: 0 })
            .count += 1;
    }
    let mut signatures: Vec<(Vec<String>, SignatureCount)> = buckets.into_iter().collect();
    signatures.sort_by(|(ka, a), (kb, b)| b.count.cmp(&a.count).then_with(|| ka.cmp(kb)));
    Ok(CensusReport {
        order: n,
        tables,
        classes: total,
        non_k_thin,
        signatures: signatures.into_iter().map(|(_, s)| s).collect(),
    })
}
