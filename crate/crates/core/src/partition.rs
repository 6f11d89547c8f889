//! Integer partitions and Young-diagram combinatorics.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers. The empty sequence is the
/// unique partition of zero.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Validates the parts.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be positive and weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self(parts))
    }

    /// Sorts the (positive) parts into decreasing order and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self(vec![n])
        }
    }

    /// The one-column partition `(1ⁿ)`.
    pub fn column(n: usize) -> Self {
        Self(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Part `i` (0-based), zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let first = self.part(0);
        Self((0..first).map(|j| self.0.iter().filter(|&&p| p > j).count()).collect())
    }

    /// Cells `(i, j)` of the Young diagram, 0-based row and column.
    pub fn cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.0.iter().enumerate().flat_map(|(i, &p)| (0..p).map(move |j| (i, j)))
    }

    pub fn hook(&self, i: usize, j: usize) -> usize {
        let arm = self.0[i] - j - 1;
        let leg = self.0.iter().skip(i + 1).filter(|&&p| p > j).count();
        arm + leg + 1
    }

    /// Content `j − i` of a cell.
    pub fn content(i: usize, j: usize) -> i64 {
        j as i64 - i as i64
    }

    /// `z_μ = ∏ k^{m_k} m_k!`, the centraliser order of a permutation of cycle type μ.
    pub fn z(&self) -> BigInt {
        let mut z = BigInt::one();
        let mut i = 0;
        while i < self.0.len() {
            let k = self.0[i];
            let m = self.0[i..].iter().take_while(|&&p| p == k).count();
            for r in 1..=m {
                z *= BigInt::from(k) * BigInt::from(r);
            }
            i += m;
        }
        z
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Self) -> Self {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Self::from_unsorted(parts)
    }

    /// Number of standard Young tableaux, by the hook length formula.
    pub fn num_standard_tableaux(&self) -> BigInt {
        let n = self.size();
        let mut num: BigInt = (1..=n).map(BigInt::from).product();
        let den: BigInt = self.cells().map(|(i, j)| BigInt::from(self.hook(i, j))).product();
        num /= den;
        num
    }
}

/// By size first, then reverse-lexicographically within a size, so sorting
/// lists `(3), (2,1), (1,1,1)`.
impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<usize>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    /// Comma-separated parts, `[]` for the empty partition.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "[]");
        }
        let s: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "{}", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .or_else(|| s.strip_prefix('(').and_then(|r| r.strip_suffix(')')))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() {
            return Ok(Self::empty());
        }
        let parts = inner
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition literal {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// All partitions of `n` in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition(cur.clone()));
        return;
    }
    for p in (1..=max.min(rest)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of every size up to `n`, grouped by size.
pub fn partitions_up_to(n: usize) -> Vec<Partition> {
    (0..=n).flat_map(partitions_of).collect()
}

/// `d_π(m)`: dimension of the Schur functor `S_π` applied to an `m`-dimensional
/// space, by the hook-content formula `∏ (m + c)/h` over the cells.
pub fn dim_poly_eval(pi: &Partition, m: i64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for (i, j) in pi.cells() {
        num *= BigInt::from(m + Partition::content(i, j));
        den *= BigInt::from(pi.hook(i, j));
    }
    if num.is_zero() {
        return num;
    }
    let (q, r) = num.div_rem(&den);
    debug_assert!(r.is_zero(), "hook-content quotient is always integral");
    q
}
