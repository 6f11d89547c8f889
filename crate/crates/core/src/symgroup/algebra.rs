use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{character_table, Permutation};
use crate::error::Result;
use crate::exact::{MatrixQ, Rational};
use crate::partition::Partition;

/// Element of the rational group algebra `ℚΣ_n`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GroupAlgebraElement {
    n: usize,
    terms: BTreeMap<Permutation, Rational>,
}

impl GroupAlgebraElement {
    pub fn zero(n: usize) -> Self {
        Self { n, terms: BTreeMap::new() }
    }

    pub fn one(n: usize) -> Self {
        Self::basis(Permutation::identity(n))
    }

    pub fn basis(p: Permutation) -> Self {
        let mut e = Self::zero(p.degree());
        e.add_term(p, Rational::one());
        e
    }

    pub fn degree(&self) -> usize {
        self.n
    }

    pub fn add_term(&mut self, p: Permutation, c: Rational) {
        assert_eq!(p.degree(), self.n, "permutation of the wrong degree");
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(p.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&p);
        }
    }

    pub fn coeff(&self, p: &Permutation) -> Rational {
        self.terms.get(p).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.n);
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    /// `(1/n!) Σ_σ f(type(σ⁻¹)) σ` for a class function `f`.
    pub fn class_average(n: usize, f: impl Fn(&Partition) -> Rational) -> Self {
        let fact: BigInt = (1..=n).map(BigInt::from).product();
        let inv = Rational::new(BigInt::one(), fact);
        let mut values = HashMap::new();
        let mut out = Self::zero(n);
        for s in Permutation::all(n) {
            let ty = s.inverse().cycle_type();
            let v = values.entry(ty.clone()).or_insert_with(|| f(&ty)).clone();
            out.add_term(s, v * &inv);
        }
        out
    }

    /// The matrix of left multiplication on the regular representation, with
    /// basis ordered as [`Permutation::all`].
    pub fn left_regular_matrix(&self) -> MatrixQ {
        let perms = Permutation::all(self.n);
        let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let mut m = MatrixQ::zeros(perms.len(), perms.len());
        for (j, s) in perms.iter().enumerate() {
            for (p, c) in &self.terms {
                m.add_at(index[&p.compose(s)], j, c);
            }
        }
        m
    }
}

impl<'a> Mul<&'a GroupAlgebraElement> for &'a GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn mul(self, rhs: &'a GroupAlgebraElement) -> GroupAlgebraElement {
        assert_eq!(self.n, rhs.n);
        let mut out = GroupAlgebraElement::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                out.add_term(a.compose(b), x * y);
            }
        }
        out
    }
}

impl<'a> Add<&'a GroupAlgebraElement> for &'a GroupAlgebraElement {
    type Output = GroupAlgebraElement;

    fn add(self, rhs: &'a GroupAlgebraElement) -> GroupAlgebraElement {
        let mut out = self.clone();
        for (p, c) in &rhs.terms {
            out.add_term(p.clone(), c.clone());
        }
        out
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(p, c)| format!("{c}*{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Central idempotent `(χ_π(1)/n!) Σ_σ χ_π(σ⁻¹) σ` cutting out the
/// `V_π`-isotypic component.
pub fn isotypic_projector(pi: &Partition) -> Result<GroupAlgebraElement> {
    let n = pi.size();
    let table = character_table(n)?;
    let dim = Rational::from_integer(table.degree(pi).into());
    Ok(GroupAlgebraElement::class_average(n, |mu| {
        Rational::from_integer(table.value(pi, mu).into()) * &dim
    }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::partitions_of;

    #[test]
    fn symmetrizer_and_antisymmetrizer() {
        let sym = isotypic_projector(&Partition::row(3)).unwrap();
        let alt = isotypic_projector(&Partition::column(3)).unwrap();
        for s in Permutation::all(3) {
            assert_eq!(sym.coeff(&s), rat(1, 6));
            assert_eq!(alt.coeff(&s), rat(s.sign(), 6));
        }
    }

    #[test]
    fn projector_21_is_idempotent() {
        let q = isotypic_projector(&"2,1".parse().unwrap()).unwrap();
        assert_eq!(q.coeff(&Permutation::identity(3)), rat(4, 6));
        assert_eq!(q.coeff(&Permutation::parse_cycles("(1 2 3)", Some(3)).unwrap()), rat(-2, 6));
        assert_eq!(q.coeff(&Permutation::parse_cycles("(1 2)", Some(3)).unwrap()), rat(0, 1));
        assert_eq!(&q * &q, q);
    }

    #[test]
    fn idempotent_orthogonal_complete() {
        for n in 1..=4 {
            let projs: Vec<_> = partitions_of(n).iter().map(|p| isotypic_projector(p).unwrap()).collect();
            let mut sum = GroupAlgebraElement::zero(n);
            for (i, a) in projs.iter().enumerate() {
                assert_eq!(&(a * a), a);
                for b in projs.iter().skip(i + 1) {
                    assert!((a * b).is_zero());
                }
                sum = &sum + a;
            }
            assert_eq!(sum, GroupAlgebraElement::one(n));
        }
    }

    #[test]
    fn isotypic_rank_on_regular_rep() {
        // the V_π-isotypic part of ℚΣ_n has dimension χ_π(1)²
        for n in 1..=4 {
            let t = character_table(n).unwrap();
            for pi in partitions_of(n) {
                let m = isotypic_projector(&pi).unwrap().left_regular_matrix();
                assert!(m.is_idempotent());
                let d = t.degree(&pi) as usize;
                assert_eq!(m.rank(), d * d);
                assert_eq!(m.trace(), rat((d * d) as i64, 1));
            }
        }
    }
}
