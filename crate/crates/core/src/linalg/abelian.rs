use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use dashu_int::ops::Gcd;
use dashu_int::UBig;

use crate::error::{Error, Result};

/// A finitely generated abelian group `ℤ^r × C_{d₁} × … × C_{d_t}` with
/// `d₁ | d₂ | … | d_t` and every `dᵢ ≥ 2`.
///
/// Torsion is stored as runs `(d, m)` meaning `C_d^m`, ascending in `d`.
/// Multiplicities are arbitrary precision so sums over huge numbers of
/// identical summands stay cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FinAbGroup {
    rank: UBig,
    torsion: Vec<(UBig, UBig)>,
}

impl FinAbGroup {
    pub fn trivial() -> Self {
        FinAbGroup {
            rank: UBig::ZERO,
            torsion: Vec::new(),
        }
    }

    pub fn free(rank: impl Into<UBig>) -> Self {
        FinAbGroup {
            rank: rank.into(),
            torsion: Vec::new(),
        }
    }

    pub fn cyclic(order: impl Into<UBig>) -> Self {
        let order = order.into();
        if order.is_zero() {
            return Self::free(1u8);
        }
        Self::from_invariants(UBig::ZERO, &[order])
    }

    /// Canonicalizes an arbitrary list of cyclic orders; 1s are dropped and
    /// 0s count as free summands.
    pub fn from_invariants(rank: UBig, orders: &[UBig]) -> Self {
        let mut free = rank;
        let mut parts = Vec::new();
        for d in orders {
            if d.is_zero() {
                free += UBig::ONE;
            } else if !d.is_one() {
                parts.push((d.clone(), UBig::ONE));
            }
        }
        FinAbGroup {
            rank: free,
            torsion: canonical_torsion(&parts),
        }
    }

    pub fn rank(&self) -> &UBig {
        &self.rank
    }

    /// Runs `(d, m)` of equal invariant factors, ascending.
    pub fn torsion(&self) -> &[(UBig, UBig)] {
        &self.torsion
    }

    /// Invariant factors with repetition. Panics if a multiplicity does not fit.
    pub fn invariant_factors(&self) -> Vec<UBig> {
        let mut out = Vec::new();
        for (d, m) in &self.torsion {
            let m = usize::try_from(m).expect("multiplicity too large to list");
            out.extend(std::iter::repeat_n(d.clone(), m));
        }
        out
    }

    pub fn is_trivial(&self) -> bool {
        self.rank.is_zero() && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }
}

/// `⊕ (G_k)^{m_k}`.
pub fn direct_sum<'a>(groups: impl IntoIterator<Item = (&'a FinAbGroup, UBig)>) -> FinAbGroup {
    let mut rank = UBig::ZERO;
    let mut parts = Vec::new();
    for (g, mult) in groups {
        if mult.is_zero() {
            continue;
        }
        rank += &g.rank * &mult;
        for (d, m) in &g.torsion {
            parts.push((d.clone(), m * &mult));
        }
    }
    FinAbGroup {
        rank,
        torsion: canonical_torsion(&parts),
    }
}

/// Splits every order over a pairwise coprime base, collects exponent
/// multiplicities per base element, and rebuilds the divisibility chain.
fn canonical_torsion(parts: &[(UBig, UBig)]) -> Vec<(UBig, UBig)> {
    if parts.is_empty() {
        return Vec::new();
    }
    let base = coprime_base(parts.iter().map(|(d, _)| d));
    // per base element: exponent -> multiplicity
    let mut exps: Vec<BTreeMap<usize, UBig>> = vec![BTreeMap::new(); base.len()];
    for (d, m) in parts.iter().filter(|(_, m)| !m.is_zero()) {
        let mut rest = d.clone();
        for (k, b) in base.iter().enumerate() {
            let mut e = 0;
            while (&rest % b).is_zero() {
                rest /= b;
                e += 1;
            }
            if e > 0 {
                *exps[k].entry(e).or_insert(UBig::ZERO) += m;
            }
        }
        debug_assert!(rest.is_one());
    }
    // queues of (exponent, remaining multiplicity), largest exponent first
    let mut queues: Vec<Vec<(usize, UBig)>> = exps
        .into_iter()
        .map(|m| m.into_iter().collect::<Vec<_>>())
        .collect();
    let mut chain = Vec::new();
    loop {
        let active: Vec<usize> = (0..queues.len()).filter(|&k| !queues[k].is_empty()).collect();
        if active.is_empty() {
            break;
        }
        let take = active
            .iter()
            .map(|&k| queues[k].last().unwrap().1.clone())
            .min()
            .unwrap();
        let mut factor = UBig::ONE;
        for &k in &active {
            let (e, count) = queues[k].last_mut().unwrap();
            factor *= base[k].pow(*e);
            *count -= &take;
            if count.is_zero() {
                queues[k].pop();
            }
        }
        chain.push((factor, take));
    }
    chain.reverse();
    chain
}

fn coprime_base<'a>(values: impl Iterator<Item = &'a UBig>) -> Vec<UBig> {
    let mut base: Vec<UBig> = Vec::new();
    // splitting b and x by g = gcd(b, x) strictly shrinks the total product
    let mut work: Vec<UBig> = values.cloned().collect();
    while let Some(x) = work.pop() {
        if x.is_one() {
            continue;
        }
        let hit = base.iter().enumerate().find_map(|(k, b)| {
            let g = (&x).gcd(b);
            (!g.is_one()).then_some((k, g))
        });
        match hit {
            None => base.push(x),
            Some((k, g)) => {
                let b = base.swap_remove(k);
                work.push(&b / &g);
                work.push(&x / &g);
                work.push(g);
            }
        }
    }
    base.sort();
    base
}

impl fmt::Display for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_trivial() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        if !self.rank.is_zero() {
            if self.rank.is_one() {
                parts.push("Z".to_string());
            } else {
                parts.push(format!("Z^{}", self.rank));
            }
        }
        for (d, m) in &self.torsion {
            if m.is_one() {
                parts.push(format!("C_{d}"));
            } else {
                parts.push(format!("C_{d}^{m}"));
            }
        }
        write!(f, "{}", parts.join(" x "))
    }
}

impl fmt::Debug for FinAbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinAbGroup({self})")
    }
}

impl FromStr for FinAbGroup {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse {
            line: 1,
            msg: format!("bad group descriptor {s:?}"),
        };
        let s = s.trim();
        if s == "0" {
            return Ok(Self::trivial());
        }
        let num = |t: &str| t.parse::<UBig>().map_err(|_| bad());
        let mut rank = UBig::ZERO;
        let mut parts = Vec::new();
        for factor in s.split(" x ") {
            let (base, exp) = match factor.split_once('^') {
                Some((b, e)) => (b, num(e)?),
                None => (factor, UBig::ONE),
            };
            if base == "Z" {
                rank += exp;
            } else if let Some(d) = base.strip_prefix("C_") {
                let d = num(d)?;
                if d < UBig::from(2u8) {
                    return Err(bad());
                }
                parts.push((d, exp));
            } else {
                return Err(bad());
            }
        }
        Ok(FinAbGroup {
            rank,
            torsion: canonical_torsion(&parts),
        })
    }
}
