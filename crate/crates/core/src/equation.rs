//! Word identities such as `xy = yx`, checked by exhaustive substitution.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::table::SemigroupTable;

pub const DEFAULT_VARIABLE_CAP: usize = 4;

/// `x_{l_1} ... x_{l_p} = x_{r_1} ... x_{r_q}` over variables numbered from 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WordEquation {
    lhs: Vec<usize>,
    rhs: Vec<usize>,
    variables: usize,
}

impl WordEquation {
    pub fn new(lhs: Vec<usize>, rhs: Vec<usize>) -> Result<Self> {
        if lhs.is_empty() || rhs.is_empty() {
            return Err(Error::BadEquation("both sides must be nonempty".into()));
        }
        let variables = lhs.iter().chain(&rhs).max().unwrap() + 1;
        let mut used = vec![false; variables];
        for &v in lhs.iter().chain(&rhs) {
            used[v] = true;
        }
        if let Some(gap) = used.iter().position(|u| !u) {
            return Err(Error::BadEquation(format!("variable {gap} is unused")));
        }
        Ok(WordEquation {
            lhs,
            rhs,
            variables,
        })
    }

    pub fn commutative() -> Self {
        Self::new(vec![0, 1], vec![1, 0]).unwrap()
    }

    /// `xya = yxa`
    pub fn left_commutative() -> Self {
        Self::new(vec![0, 1, 2], vec![1, 0, 2]).unwrap()
    }

    pub fn lhs(&self) -> &[usize] {
        &self.lhs
    }

    pub fn rhs(&self) -> &[usize] {
        &self.rhs
    }

    pub fn variables(&self) -> usize {
        self.variables
    }

    /// True when the leading (or trailing) variables of the two sides differ,
    /// which forces the minimal ideal to be one-sided simple.
    pub fn forces_k_thin(&self) -> bool {
        self.lhs[0] != self.rhs[0] || self.lhs.last() != self.rhs.last()
    }
}

/// Letters `a..z` name variables in order of first appearance, e.g. `xya=yxa`.
impl FromStr for WordEquation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (l, r) = s
            .split_once('=')
            .ok_or_else(|| Error::BadEquation(format!("no '=' in {s:?}")))?;
        let mut names: Vec<char> = Vec::new();
        let mut side = |text: &str| -> Result<Vec<usize>> {
            text.trim()
                .chars()
                .map(|c| {
                    if !c.is_ascii_alphabetic() {
                        return Err(Error::BadEquation(format!("bad variable {c:?}")));
                    }
                    Ok(match names.iter().position(|&n| n == c) {
                        Some(i) => i,
                        None => {
                            names.push(c);
                            names.len() - 1
                        }
                    })
                })
                .collect()
        };
        let lhs = side(l)?;
        let rhs = side(r)?;
        Self::new(lhs, rhs)
    }
}

impl fmt::Display for WordEquation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: &usize| format!("x{v}");
        let l: Vec<String> = self.lhs.iter().map(name).collect();
        let r: Vec<String> = self.rhs.iter().map(name).collect();
        write!(f, "{} = {}", l.join(""), r.join(""))
    }
}

pub fn satisfies_identity(s: &SemigroupTable, eq: &WordEquation) -> Result<bool> {
    satisfies_identity_capped(s, eq, DEFAULT_VARIABLE_CAP)
}

pub fn satisfies_identity_capped(
    s: &SemigroupTable,
    eq: &WordEquation,
    cap: usize,
) -> Result<bool> {
    let v = eq.variables();
    if v > cap {
        return Err(Error::TooManyVariables { vars: v, cap });
    }
    let n = s.order();
    let mut assignment = vec![0usize; v];
    let eval = |word: &[usize], asg: &[usize]| s.product(word.iter().map(|&x| asg[x])).unwrap();
    loop {
        if eval(&eq.lhs, &assignment) != eval(&eq.rhs, &assignment) {
            return Ok(false);
        }
        // odometer increment
        let mut i = 0;
        loop {
            if i == v {
                return Ok(true);
            }
            assignment[i] += 1;
            if assignment[i] < n {
                break;
            }
            assignment[i] = 0;
            i += 1;
        }
    }
}
