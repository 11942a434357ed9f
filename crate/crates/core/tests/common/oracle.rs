//! Independent reference computations, written without the library's own
//! algorithms so they can be used to check them.

use bsemi_core::{FinAbGroup, SemigroupTable};
use dashu_int::UBig;

struct Classes {
    parent: Vec<usize>,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

/// The largest group image of `s`, as `(class of each element, group table)`.
///
/// A finite monoid whose only idempotent is its identity is a group, so the
/// image is the quotient by the congruence generated by `e ~ f` and
/// `x e ~ x ~ e x` over all idempotents `e, f`.
pub fn max_group_image(s: &SemigroupTable) -> (Vec<usize>, Vec<Vec<usize>>) {
    let n = s.order();
    let idem: Vec<usize> = (0..n).filter(|&x| s.mul(x, x) == x).collect();
    let mut pending = Vec::new();
    for &e in &idem {
        pending.push((e, idem[0]));
        for x in 0..n {
            pending.push((s.mul(x, e), x));
            pending.push((s.mul(e, x), x));
        }
    }
    let mut cls = Classes::new(n);
    while let Some((a, b)) = pending.pop() {
        if cls.union(a, b) {
            for c in 0..n {
                pending.push((s.mul(a, c), s.mul(b, c)));
                pending.push((s.mul(c, a), s.mul(c, b)));
            }
        }
    }
    let mut id_of = vec![usize::MAX; n];
    let mut class = vec![0; n];
    let mut reps = Vec::new();
    for x in 0..n {
        let r = cls.find(x);
        if id_of[r] == usize::MAX {
            id_of[r] = reps.len();
            reps.push(x);
        }
        class[x] = id_of[r];
    }
    let table = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| class[s.mul(a, b)]).collect())
        .collect();
    (class, table)
}

fn identity_of(table: &[Vec<usize>]) -> usize {
    (0..table.len()).find(|&e| table[e][e] == e).unwrap()
}

fn inverse_in(table: &[Vec<usize>], a: usize) -> usize {
    let e = identity_of(table);
    (0..table.len()).find(|&b| table[a][b] == e).unwrap()
}

/// Invariant factors of a finite abelian group, read off from how many
/// elements each prime power kills.
fn abelian_invariants(table: &[Vec<usize>]) -> Vec<UBig> {
    let m = table.len();
    let e = identity_of(table);
    let power = |x: usize, k: usize| (0..k).fold(e, |acc, _| table[acc][x]);
    let mut primes = Vec::new();
    let mut rest = m;
    let mut p = 2;
    while rest > 1 {
        if rest % p == 0 {
            primes.push(p);
            while rest % p == 0 {
                rest /= p;
            }
        }
        p += 1;
    }
    // per prime, the orders of the cyclic p-parts in descending order
    let mut parts: Vec<Vec<usize>> = Vec::new();
    for &p in &primes {
        let mut logs = vec![0usize];
        let mut q = 1;
        loop {
            q *= p;
            let killed = (0..m).filter(|&x| power(x, q) == e).count();
            logs.push(killed.ilog(p) as usize);
            if logs[logs.len() - 1] == logs[logs.len() - 2] {
                break;
            }
        }
        let mut cyclic = Vec::new();
        for t in 1..logs.len() {
            let at_least = logs[t] - logs[t - 1];
            let next = logs.get(t + 1).map_or(0, |l| l - logs[t]);
            for _ in 0..at_least - next {
                cyclic.push(p.pow(t as u32));
            }
        }
        cyclic.sort_unstable_by(|a, b| b.cmp(a));
        parts.push(cyclic);
    }
    let count = parts.iter().map(Vec::len).max().unwrap_or(0);
    let mut factors: Vec<UBig> = (0..count)
        .map(|i| UBig::from(parts.iter().map(|c| c.get(i).copied().unwrap_or(1)).product::<usize>()))
        .collect();
    factors.reverse();
    factors
}

/// `G / [G, G]` for the largest group image of `s`.
pub fn abelianized_group_image(s: &SemigroupTable) -> FinAbGroup {
    let (_, g) = max_group_image(s);
    let k = g.len();
    let e = identity_of(&g);
    let mut inside = vec![false; k];
    inside[e] = true;
    let mut members = vec![e];
    for a in 0..k {
        for b in 0..k {
            let c = g[g[g[a][b]][inverse_in(&g, a)]][inverse_in(&g, b)];
            if !inside[c] {
                inside[c] = true;
                members.push(c);
            }
        }
    }
    let mut i = 0;
    while i < members.len() {
        for j in 0..=i {
            for c in [g[members[i]][members[j]], g[members[j]][members[i]]] {
                if !inside[c] {
                    inside[c] = true;
                    members.push(c);
                }
            }
        }
        i += 1;
    }
    let mut coset = vec![usize::MAX; k];
    let mut reps = Vec::new();
    for a in 0..k {
        if coset[a] == usize::MAX {
            for &n in &members {
                coset[g[a][n]] = reps.len();
            }
            reps.push(a);
        }
    }
    let quotient: Vec<Vec<usize>> = reps
        .iter()
        .map(|&a| reps.iter().map(|&b| coset[g[a][b]]).collect())
        .collect();
    FinAbGroup::from_invariants(UBig::ZERO, &abelian_invariants(&quotient))
}

fn determinant(mut m: Vec<Vec<i128>>) -> i128 {
    // fraction-free elimination; every division is exact
    let n = m.len();
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n {
        if m[k][k] == 0 {
            match (k + 1..n).find(|&r| m[r][k] != 0) {
                Some(r) => {
                    m.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
            }
        }
        prev = m[k][k];
    }
    sign * m[n - 1][n - 1]
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if n < k {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

fn gcd(a: i128, b: i128) -> i128 {
    if b == 0 {
        a.abs()
    } else {
        gcd(b, a % b)
    }
}

/// gcd of all `k × k` minors.
pub fn minor_gcd(m: &[Vec<i64>], k: usize) -> i128 {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut g = 0;
    for rs in subsets(rows, k) {
        for cs in &subsets(cols, k) {
            let sub = rs
                .iter()
                .map(|&r| cs.iter().map(|&c| m[r][c] as i128).collect())
                .collect();
            g = gcd(g, determinant(sub));
        }
    }
    g
}
