use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exact::{LaurentZ, Ring, Series};
use crate::partition::Partition;
use crate::symfunc::{mul as sym_mul, SymFunc};

/// A class in `K₀`, written in `q`: a line of degree `d` has class `(−1)^d q^d`.
pub type K0Class = LaurentZ;

/// An element of `R ⊗ K₀`: a finite sum `Σ_π [π] ⊗ u_π`, where `[π]` is the
/// class of the irreducible `Σ_n`-module `V_π` and `u_π` a `K₀` class.
///
/// The product is the induction product, `[μ]·[η] = Σ_π c^π_{μη} [π]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct RDElement {
    terms: BTreeMap<Partition, K0Class>,
}

/// Power series with coefficients in `R ⊗ K₀`.
pub type SchurSeries = Series<RDElement>;

impl RDElement {
    pub fn basis(pi: Partition, class: K0Class) -> Self {
        let mut out = Self::default();
        out.add_term(pi, class);
        out
    }

    pub fn add_term(&mut self, pi: Partition, class: K0Class) {
        let e = self.terms.entry(pi.clone()).or_insert_with(K0Class::zero);
        *e = e.clone() + class;
        if e.is_zero() {
            self.terms.remove(&pi);
        }
    }

    pub fn coeff(&self, pi: &Partition) -> K0Class {
        self.terms.get(pi).cloned().unwrap_or_else(K0Class::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &K0Class)> {
        self.terms.iter()
    }

    /// The grades `|π|` present in the support.
    pub fn grades(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.terms.keys().map(Partition::size).collect();
        g.dedup();
        g
    }

    /// The part supported on partitions of `n`.
    pub fn grade_part(&self, n: usize) -> Self {
        Self { terms: self.terms.iter().filter(|(p, _)| p.size() == n).map(|(p, c)| (p.clone(), c.clone())).collect() }
    }

    /// The class of the underlying object: `Σ_π dim(V_π) u_π`.
    pub fn underlying_class(&self) -> K0Class {
        self.terms
            .iter()
            .fold(K0Class::zero(), |acc, (p, c)| acc + c.clone() * K0Class::constant(p.num_standard_tableaux()))
    }

    /// Applies `f` to every class.
    pub fn map_classes(&self, f: impl Fn(&K0Class) -> K0Class) -> Self {
        let mut out = Self::default();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    /// `Σ_π u_π(1) s_π`: the image in Λ after evaluating each class at `q = 1`.
    pub fn to_symfunc_at_one(&self) -> SymFunc {
        let mut out = SymFunc::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.eval_at_one().into());
        }
        out
    }
}

impl Add for RDElement {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
        self
    }
}

impl Neg for RDElement {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(p, c)| (p, -c)).collect() }
    }
}

impl Sub for RDElement {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<'a> Mul<&'a RDElement> for &'a RDElement {
    type Output = RDElement;

    /// Induction product.
    fn mul(self, rhs: &RDElement) -> RDElement {
        let mut out = RDElement::default();
        for (mu, u) in &self.terms {
            for (eta, v) in &rhs.terms {
                let uv = u * v;
                let prod = sym_mul(&SymFunc::schur(mu.clone()), &SymFunc::schur(eta.clone()));
                for (pi, c) in prod.terms() {
                    let c: BigInt = c.to_integer();
                    out.add_term(pi.clone(), uv.clone() * K0Class::constant(c));
                }
            }
        }
        out
    }
}

impl Mul for RDElement {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl Zero for RDElement {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for RDElement {
    fn one() -> Self {
        Self::basis(Partition::empty(), K0Class::one())
    }
}

impl Ring for RDElement {
    fn from_int(n: i64) -> Self {
        if n == 0 {
            Self::zero()
        } else {
            Self::basis(Partition::empty(), K0Class::constant(n))
        }
    }

    /// Units are the grade-0 elements whose class is a unit of `ℤ[q, q⁻¹]`.
    fn try_inv(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let c = self.terms.get(&Partition::empty())?;
        c.try_inv().map(|i| Self::basis(Partition::empty(), i))
    }

    fn try_div_int(&self, n: i64) -> Option<Self> {
        let mut out = Self::default();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), c.try_div_int(n)?);
        }
        Some(out)
    }
}

impl fmt::Display for RDElement {
    /// `"[2]⊗(1) + [1,1]⊗(-q)"`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (p, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if p.is_empty() {
                write!(f, "[]⊗({c})")?;
            } else {
                write!(f, "[{p}]⊗({c})")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for RDElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// One line per power of `t`: `"t^2: [2]⊗(1) + [1,1]⊗(1)"`.
pub fn format_schur_series(s: &SchurSeries) -> String {
    let mut out = String::new();
    for (n, c) in s.coeffs().iter().enumerate() {
        out.push_str(&format!("t^{n}: {c}\n"));
    }
    out
}
