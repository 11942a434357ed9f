use dashu_int::ops::ExtendedGcd;
use dashu_int::IBig;

/// A sublattice of ℤⁿ held as echelon rows with distinct pivot columns,
/// supporting membership tests and insertion.
#[derive(Debug, Clone)]
pub struct LatticeEchelon {
    dim: usize,
    // sorted by pivot column
    rows: Vec<(usize, Vec<IBig>)>,
}

fn leading(v: &[IBig]) -> Option<usize> {
    v.iter().position(|x| !x.is_zero())
}

fn axpy(target: &mut [IBig], q: &IBig, src: &[IBig], from: usize) {
    for (x, y) in target[from..].iter_mut().zip(&src[from..]) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

impl LatticeEchelon {
    pub fn new(dim: usize) -> Self {
        LatticeEchelon {
            dim,
            rows: Vec::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn find(&self, pivot: usize) -> Result<usize, usize> {
        self.rows.binary_search_by_key(&pivot, |(p, _)| *p)
    }

    pub fn contains(&self, v: &[IBig]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        while let Some(f) = leading(&v) {
            let Ok(k) = self.find(f) else {
                return false;
            };
            let row = &self.rows[k].1;
            if !(&v[f] % &row[f]).is_zero() {
                return false;
            }
            let q = &v[f] / &row[f];
            axpy(&mut v, &q, row, f);
        }
        true
    }

    /// Adds `v` to the lattice. Returns false when it was already a member.
    pub fn insert(&mut self, v: &[IBig]) -> bool {
        assert_eq!(v.len(), self.dim);
        let mut v = v.to_vec();
        let mut changed = false;
        while let Some(f) = leading(&v) {
            match self.find(f) {
                Err(at) => {
                    if v[f] < IBig::ZERO {
                        for x in v.iter_mut() {
                            *x = -std::mem::take(x);
                        }
                    }
                    self.rows.insert(at, (f, v));
                    return true;
                }
                Ok(k) => {
                    let row = &mut self.rows[k].1;
                    if (&v[f] % &row[f]).is_zero() {
                        let q = &v[f] / &row[f];
                        axpy(&mut v, &q, row, f);
                        continue;
                    }
                    // Replace the row by the gcd combination and keep the
                    // leftover with a zero in this column.
                    let (g, s, t) = (&row[f]).gcd_ext(&v[f]);
                    let g = IBig::from(g);
                    let a = &row[f] / &g;
                    let b = &v[f] / &g;
                    let mut merged = vec![IBig::ZERO; self.dim];
                    let mut rest = vec![IBig::ZERO; self.dim];
                    for i in f..self.dim {
                        merged[i] = &s * &row[i] + &t * &v[i];
                        rest[i] = &a * &v[i] - &b * &row[i];
                    }
                    *row = merged;
                    v = rest;
                    changed = true;
                }
            }
        }
        changed
    }

    pub fn rows(&self) -> impl Iterator<Item = &[IBig]> {
        self.rows.iter().map(|(_, r)| r.as_slice())
    }
}
