//! Multiplication tables of finite semigroups and the constructors used to
//! build test subjects from smaller pieces.

use std::fmt::Write as _;

use crate::completion::identity_and_inverses;
use crate::error::{Error, Result};

/// A validated, associative multiplication table on `{0, .., n-1}`.
///
/// Tables are immutable once built. The identity is detected on validation
/// and is never taken on trust from the caller.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SemigroupTable {
    order: usize,
    entries: Vec<usize>,
    identity: Option<usize>,
}

impl std::fmt::Debug for SemigroupTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("SemigroupTable")
            .field("order", &self.order)
            .field("identity", &self.identity)
            .field("rows", &self.rows().collect::<Vec<_>>())
            .finish()
    }
}

impl SemigroupTable {
    /// Validates a raw square array. `identity_hint`, when given, must be a
    /// two-sided identity; otherwise one is searched for.
    pub fn validate(raw: &[Vec<i64>], identity_hint: Option<usize>) -> Result<Self> {
        let n = raw.len();
        if n == 0 {
            return Err(Error::EmptyTable);
        }
        let mut entries = Vec::with_capacity(n * n);
        for (row, values) in raw.iter().enumerate() {
            if values.len() != n {
                return Err(Error::NotSquare {
                    row,
                    len: values.len(),
                    expected: n,
                });
            }
            for (col, &value) in values.iter().enumerate() {
                if value < 0 || value as u64 >= n as u64 {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order: n,
                    });
                }
                entries.push(value as usize);
            }
        }
        Self::from_entries(n, entries, identity_hint)
    }

    /// Validates a flattened row-major table.
    pub fn from_entries(
        order: usize,
        entries: Vec<usize>,
        identity_hint: Option<usize>,
    ) -> Result<Self> {
        if order == 0 {
            return Err(Error::EmptyTable);
        }
        if entries.len() != order * order {
            return Err(Error::DimensionMismatch(format!(
                "{} entries for order {}",
                entries.len(),
                order
            )));
        }
        if let Some(pos) = entries.iter().position(|&v| v >= order) {
            return Err(Error::EntryOutOfRange {
                row: pos / order,
                col: pos % order,
                value: entries[pos] as i64,
                order,
            });
        }
        let mut table = SemigroupTable {
            order,
            entries,
            identity: None,
        };
        if let Some((a, b, c)) = table.associativity_witness() {
            return Err(Error::NotAssociative { a, b, c });
        }
        table.identity = match identity_hint {
            Some(e) if e < order && table.is_identity(e) => Some(e),
            Some(e) => return Err(Error::BadIdentityHint(e)),
            None => (0..order).find(|&e| table.is_identity(e)),
        };
        Ok(table)
    }

    /// Builds a table from a closure without the cubic associativity check;
    /// only for constructors whose output is associative by construction.
    pub(crate) fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Self {
        let mut entries = Vec::with_capacity(order * order);
        for a in 0..order {
            for b in 0..order {
                let v = f(a, b);
                assert!(v < order, "constructor produced entry {v} for order {order}");
                entries.push(v);
            }
        }
        let mut table = SemigroupTable {
            order,
            entries,
            identity: None,
        };
        table.identity = (0..order).find(|&e| table.is_identity(e));
        table
    }

    fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                let ab = self.mul(a, b);
                for c in 0..n {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    fn is_identity(&self, e: usize) -> bool {
        (0..self.order).all(|x| self.mul(e, x) == x && self.mul(x, e) == x)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.entries[a * self.order + b]
    }

    pub fn identity(&self) -> Option<usize> {
        self.identity
    }

    pub fn is_monoid(&self) -> bool {
        self.identity.is_some()
    }

    /// Flattened row-major entries.
    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[usize]> + '_ {
        self.entries.chunks(self.order)
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.order
    }

    /// Left-to-right product of a nonempty word.
    pub fn product(&self, word: impl IntoIterator<Item = usize>) -> Option<usize> {
        word.into_iter().reduce(|acc, x| self.mul(acc, x))
    }

    pub fn idempotents(&self) -> Vec<usize> {
        self.elements().filter(|&x| self.mul(x, x) == x).collect()
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.order;
        (0..n).all(|a| (a + 1..n).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    /// `S^1`: a fresh identity is adjoined at index `n`, even when `S` already
    /// has one.
    pub fn adjoin_unit(&self) -> Self {
        let n = self.order;
        let unit = n;
        let mut table = Self::from_fn(n + 1, |a, b| {
            if a == unit {
                b
            } else if b == unit {
                a
            } else {
                self.mul(a, b)
            }
        });
        table.identity = Some(unit);
        table
    }

    pub fn opposite(&self) -> Self {
        SemigroupTable {
            order: self.order,
            entries: (0..self.order * self.order)
                .map(|i| self.mul(i % self.order, i / self.order))
                .collect(),
            identity: self.identity,
        }
    }

    /// Componentwise product; `(s, t)` lives at index `s * |T| + t`.
    pub fn direct_product(&self, other: &SemigroupTable) -> Self {
        let m = other.order;
        Self::from_fn(self.order * m, |a, b| {
            self.mul(a / m, b / m) * m + other.mul(a % m, b % m)
        })
    }

    /// The sub-semigroup on `elements`, reindexed in the given order.
    /// Returns `None` when the subset is not closed.
    pub fn restrict(&self, elements: &[usize]) -> Option<Self> {
        let mut position = vec![usize::MAX; self.order];
        for (i, &x) in elements.iter().enumerate() {
            position[x] = i;
        }
        let k = elements.len();
        let mut entries = Vec::with_capacity(k * k);
        for &a in elements {
            for &b in elements {
                let p = position[self.mul(a, b)];
                if p == usize::MAX {
                    return None;
                }
                entries.push(p);
            }
        }
        Self::from_entries(k, entries, None).ok()
    }

    /// Applies a relabeling `x -> perm[x]`.
    pub fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.order;
        let mut entries = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                entries[perm[a] * n + perm[b]] = perm[self.mul(a, b)];
            }
        }
        SemigroupTable {
            order: n,
            entries,
            identity: self.identity.map(|e| perm[e]),
        }
    }

    /// Writes the text format: the order on one line, then one row per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "{}", self.order).unwrap();
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(out, "{}", line.join(" ")).unwrap();
        }
        out
    }

    /// Parses the text format. Lines starting with `#` and blank lines are
    /// skipped.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let (line_no, header) = lines.next().ok_or(Error::Parse {
            line: 0,
            msg: "missing order line".into(),
        })?;
        let n: usize = header.parse().map_err(|_| Error::Parse {
            line: line_no,
            msg: format!("expected an order, found {header:?}"),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                line: line_no,
                msg: "order must be positive".into(),
            });
        }
        let mut raw = Vec::with_capacity(n);
        for _ in 0..n {
            let (line_no, line) = lines.next().ok_or(Error::Parse {
                line: line_no,
                msg: format!("expected {n} rows"),
            })?;
            let row = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<i64>().map_err(|_| Error::Parse {
                        line: line_no,
                        msg: format!("bad entry {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            if row.len() != n {
                return Err(Error::Parse {
                    line: line_no,
                    msg: format!("expected {n} entries, found {}", row.len()),
                });
            }
            raw.push(row);
        }
        if let Some((line_no, _)) = lines.next() {
            return Err(Error::Parse {
                line: line_no,
                msg: "trailing content after table".into(),
            });
        }
        Self::validate(&raw, None)
    }
}

pub fn trivial() -> SemigroupTable {
    SemigroupTable::from_fn(1, |_, _| 0)
}

/// `Rect_a^b`: `x_ij * x_kl = x_il`, with `x_ij` at index `i * b + j`.
pub fn rectangular_band(a: usize, b: usize) -> SemigroupTable {
    assert!(a >= 1 && b >= 1, "rectangular band needs a, b >= 1");
    SemigroupTable::from_fn(a * b, |x, y| (x / b) * b + y % b)
}

/// `xy = x` on `n` elements.
pub fn left_zero_band(n: usize) -> SemigroupTable {
    rectangular_band(n, 1)
}

/// `xy = y` on `n` elements.
pub fn right_zero_band(n: usize) -> SemigroupTable {
    rectangular_band(1, n)
}

/// Addition modulo `k`.
pub fn cyclic_group(k: usize) -> SemigroupTable {
    assert!(k >= 1, "cyclic group needs k >= 1");
    SemigroupTable::from_fn(k, |a, b| (a + b) % k)
}

/// `S` with a zero adjoined at index `n`.
pub fn adjoin_zero(s: &SemigroupTable) -> SemigroupTable {
    let z = s.order();
    SemigroupTable::from_fn(z + 1, |a, b| if a == z || b == z { z } else { s.mul(a, b) })
}

/// Rees matrix semigroup `M(H; a, b; P)` with `(i, h, j)` at
/// `(i * |H| + h) * b + j` and product `(i, h P[j][i'] h', j')`.
pub fn rees_matrix(
    group: &SemigroupTable,
    a: usize,
    b: usize,
    sandwich: &[Vec<usize>],
) -> Result<SemigroupTable> {
    let all: Vec<usize> = group.elements().collect();
    identity_and_inverses(group, &all)?;
    if a == 0 || b == 0 {
        return Err(Error::DimensionMismatch("a and b must be positive".into()));
    }
    if sandwich.len() != b || sandwich.iter().any(|row| row.len() != a) {
        return Err(Error::DimensionMismatch(format!(
            "sandwich matrix must be {b} x {a}"
        )));
    }
    let g = group.order();
    if let Some(&bad) = sandwich.iter().flatten().find(|&&p| p >= g) {
        return Err(Error::ElementOutsideGroup(bad));
    }
    let split = |x: usize| (x / (g * b), (x / b) % g, x % b);
    Ok(SemigroupTable::from_fn(a * g * b, |x, y| {
        let (i, h, j) = split(x);
        let (i2, h2, j2) = split(y);
        let mid = group.mul(group.mul(h, sandwich[j][i2]), h2);
        (i * g + mid) * b + j2
    }))
}

/// `J^Y(S)` for a monoid `S` and `|Y| = y_count`: `S` occupies indices
/// `0..n`, and `y_k x` sits at `n + k * n + x`.
pub fn join(s: &SemigroupTable, y_count: usize) -> Result<SemigroupTable> {
    let unit = s.identity().ok_or(Error::NotAMonoid)?;
    let n = s.order();
    let table = SemigroupTable::from_fn((1 + y_count) * n, |p, q| {
        match (p < n, q < n) {
            (true, true) => s.mul(p, q),
            // S acts trivially on the left of the band part
            (true, false) => q,
            (false, true) => {
                let (k, x) = ((p - n) / n, (p - n) % n);
                n + k * n + s.mul(x, q)
            }
            (false, false) => {
                let k = (p - n) / n;
                let x2 = (q - n) % n;
                n + k * n + x2
            }
        }
    });
    debug_assert_eq!(table.identity(), Some(unit));
    Ok(table)
}
