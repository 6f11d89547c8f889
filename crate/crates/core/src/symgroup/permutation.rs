use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A bijection of `{1..n}`, stored 0-based as the list of images.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self((0..n).collect())
    }

    /// From 0-based images; rejects anything that is not a bijection.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::Parse(format!("not a permutation: {images:?}")));
            }
            seen[i] = true;
        }
        Ok(Self(images))
    }

    /// From 1-based disjoint cycles acting on `{1..n}`.
    pub fn from_cycles(cycles: &[Vec<usize>], n: usize) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = vec![false; n];
        for cycle in cycles {
            for (k, &a) in cycle.iter().enumerate() {
                if a == 0 || a > n || touched[a - 1] {
                    return Err(Error::Parse(format!("bad cycle {cycle:?} in degree {n}")));
                }
                touched[a - 1] = true;
                images[a - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
        }
        Ok(Self(images))
    }

    /// Parses cycle notation such as `"(1 2 3)(4 5)"` or `"()"`. With `n = None`
    /// the degree is the largest point mentioned.
    pub fn parse_cycles(s: &str, n: Option<usize>) -> Result<Self> {
        let bad = || Error::Parse(format!("bad cycle notation {s:?}"));
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let inner_end = rest.find(')').ok_or_else(bad)?;
            let inner = rest.strip_prefix('(').ok_or_else(bad)?;
            let body = &inner[..inner_end - 1];
            let cycle = body
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>>>()?;
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = rest[inner_end + 1..].trim_start();
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        let n = n.unwrap_or(max);
        if max > n {
            return Err(bad());
        }
        Self::from_cycles(&cycles, n)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.0
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.0[i]
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Self(other.0.iter().map(|&i| self.0[i]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.0.len()];
        for (i, &j) in self.0.iter().enumerate() {
            inv[j] = i;
        }
        Self(inv)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::identity(self.degree());
        for _ in 0..e {
            acc = self.compose(&acc);
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// Disjoint cycles (0-based), including fixed points, each starting at its
    /// smallest element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.0.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.0[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.0[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> Partition {
        Partition::from_unsorted(self.cycles().iter().map(Vec::len).collect())
    }

    pub fn sign(&self) -> i64 {
        let even_cycles = self.cycles().iter().filter(|c| c.len() % 2 == 0).count();
        if even_cycles % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// All `n!` permutations in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Self> {
        let mut out = Vec::new();
        let mut cur: Vec<usize> = (0..n).collect();
        loop {
            out.push(Self(cur.clone()));
            // next lexicographic permutation
            let Some(i) = (1..n).rev().find(|&i| cur[i - 1] < cur[i]) else {
                break;
            };
            let j = (i..n).rev().find(|&j| cur[j] > cur[i - 1]).unwrap();
            cur.swap(i - 1, j);
            cur[i..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation, 1-based, fixed points omitted; the identity is `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles: Vec<_> = self.cycles().into_iter().filter(|c| c.len() > 1).collect();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let s: Vec<String> = c.iter().map(|i| (i + 1).to_string()).collect();
            write!(f, "({})", s.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    #[test]
    fn cycle_types() {
        assert_eq!(Permutation::identity(4).cycle_type(), "1,1,1,1".parse().unwrap());
        let s = Permutation::parse_cycles("(1 2 3)(4 5)", Some(5)).unwrap();
        assert_eq!(s.cycle_type(), "3,2".parse().unwrap());
        assert_eq!(s.to_string(), "(1 2 3)(4 5)");
        assert_eq!(s.sign(), -1);
        assert_eq!(Permutation::parse_cycles("()", Some(3)).unwrap(), Permutation::identity(3));
        assert!(Permutation::parse_cycles("(1 1)", Some(3)).is_err());
        assert!(Permutation::parse_cycles("(1 4)", Some(3)).is_err());
        // |C_(2,1)| in Σ₃ = 3! / z = 3
        let count = Permutation::all(3)
            .iter()
            .filter(|p| p.cycle_type() == "2,1".parse().unwrap())
            .count();
        assert_eq!(count, 3);
    }

    #[test]
    fn group_laws() {
        let all = Permutation::all(4);
        assert_eq!(all.len(), 24);
        assert_eq!(all.iter().collect::<HashSet<_>>().len(), 24);
        let a = Permutation::parse_cycles("(1 2)", Some(3)).unwrap();
        let b = Permutation::parse_cycles("(2 3)", Some(3)).unwrap();
        // apply b first: 2 -> 3 -> 3, 3 -> 2 -> 1
        assert_eq!(a.compose(&b).to_string(), "(1 2 3)");
        for p in &all {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(p.sign() * p.inverse().sign(), 1);
        }
        for p in all.iter().take(6) {
            for q in all.iter().skip(10).take(6) {
                assert_eq!(p.compose(q).sign(), p.sign() * q.sign());
            }
        }
    }
}
