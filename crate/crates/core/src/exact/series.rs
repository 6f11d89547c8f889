use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use super::laurent::split_signed_terms;
use super::{parse_rational, Rational, Ring};
use crate::error::{Error, Result};

/// Power series `c₀ + c₁t + … + c_N t^N` known up to (and including) order `N`.
///
/// Binary operations between series of different orders truncate to the
/// smaller order.
#[derive(Clone, PartialEq, Debug)]
pub struct Series<A> {
    coeffs: Vec<A>,
}

impl<A: Ring> Series<A> {
    /// Pads with zeros or truncates so that exactly `order + 1` coefficients are kept.
    pub fn new(mut coeffs: Vec<A>, order: usize) -> Self {
        coeffs.resize(order + 1, A::zero());
        Self { coeffs }
    }

    pub fn constant(c: A, order: usize) -> Self {
        Self::new(vec![c], order)
    }

    pub fn one(order: usize) -> Self {
        Self::constant(A::one(), order)
    }

    pub fn zero(order: usize) -> Self {
        Self::new(Vec::new(), order)
    }

    /// `1 + a t`.
    pub fn linear(a: A, order: usize) -> Self {
        Self::new(vec![A::one(), a], order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> A {
        self.coeffs.get(k).cloned().unwrap_or_else(A::zero)
    }

    pub fn coeffs(&self) -> &[A] {
        &self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec(), order)
    }

    pub fn map<B: Ring>(&self, f: impl Fn(&A) -> B) -> Series<B> {
        Series { coeffs: self.coeffs.iter().map(f).collect() }
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul_series(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![A::zero(); n + 1];
        for (i, a) in self.coeffs.iter().take(n + 1).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Self { coeffs: out }
    }

    pub fn add_series(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Self {
            coeffs: (0..=n)
                .map(|k| self.coeffs[k].clone() + other.coeffs[k].clone())
                .collect(),
        }
    }

    pub fn scale(&self, c: &A) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiplicative inverse; the constant term must be a unit.
    pub fn inverse(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inv().ok_or(Error::NonUnitConstantTerm)?;
        let n = self.order();
        let mut out = vec![A::zero(); n + 1];
        out[0] = inv0.clone();
        for k in 1..=n {
            let mut acc = A::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc = acc + self.coeffs[j].clone() * out[k - j].clone();
                }
            }
            out[k] = -(acc * inv0.clone());
        }
        Ok(Self { coeffs: out })
    }

    /// Integer power; negative exponents go through [`Series::inverse`].
    pub fn pow(&self, e: i64) -> Result<Self> {
        let base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut acc = Self::one(self.order());
        for _ in 0..e.unsigned_abs() {
            acc = acc.mul_series(&base);
        }
        Ok(acc)
    }

    /// Formal derivative; the order drops by one (but never below zero).
    pub fn derivative(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return Self::zero(0);
        }
        Self {
            coeffs: (1..=n)
                .map(|k| self.coeffs[k].clone() * A::from_int(k as i64))
                .collect(),
        }
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }
}

/// `−t f′/f`. The coefficient of `t^m`, multiplied by `(−1)^m`, is the m-th
/// ghost component of `f`.
pub fn neg_log_derivative<A: Ring>(f: &Series<A>) -> Result<Series<A>> {
    let n = f.order();
    let inv = f.inverse()?;
    let d = f.derivative();
    let mut coeffs = vec![A::zero(); n + 1];
    for m in 1..=n {
        // coefficient of t^{m-1} in f'/f
        let mut acc = A::zero();
        for j in 0..m {
            let a = d.coeff(j);
            if !a.is_zero() {
                acc = acc + a * inv.coeff(m - 1 - j);
            }
        }
        coeffs[m] = -acc;
    }
    Ok(Series::new(coeffs, n))
}

impl<A: Ring> Add for Series<A> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        self.add_series(&rhs)
    }
}

impl<A: Ring> Sub for Series<A> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self.add_series(&-rhs)
    }
}

impl<A: Ring> Neg for Series<A> {
    type Output = Self;

    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.into_iter().map(|a| -a).collect() }
    }
}

impl<A: Ring> Mul for Series<A> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        self.mul_series(&rhs)
    }
}

/// Writes `coeff * var` inside a signed sum, parenthesising compound coefficients.
pub(crate) fn fmt_term(
    f: &mut fmt::Formatter<'_>,
    first: bool,
    coeff: &str,
    var: &str,
) -> fmt::Result {
    let compound = coeff.contains(" + ") || coeff.contains(" - ");
    let (neg, body) = match coeff.strip_prefix('-') {
        Some(rest) if !compound => (true, rest.to_string()),
        _ => (false, coeff.to_string()),
    };
    match (first, neg) {
        (true, true) => write!(f, "-")?,
        (true, false) => {}
        (false, true) => write!(f, " - ")?,
        (false, false) => write!(f, " + ")?,
    }
    if var.is_empty() {
        return if compound { write!(f, "({body})") } else { write!(f, "{body}") };
    }
    if compound {
        write!(f, "({body})*{var}")
    } else if body == "1" {
        write!(f, "{var}")
    } else {
        write!(f, "{body}*{var}")
    }
}

impl<A: Ring> fmt::Display for Series<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let var = match k {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{k}"),
            };
            fmt_term(f, first, &c.to_string(), &var)?;
            first = false;
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

impl FromStr for Series<Rational> {
    type Err = Error;

    /// Parses `"1 - 1/2*t + 3*t^2"`; the order is the highest exponent written.
    /// A bare comma list `"1, -1/2, 3"` is also accepted as `c0, c1, c2`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a power series: {s:?}"));
        if s.contains(',') {
            let coeffs = s
                .split(',')
                .map(parse_rational)
                .collect::<Result<Vec<_>>>()?;
            let n = coeffs.len().saturating_sub(1);
            return Ok(Series::new(coeffs, n));
        }
        let mut terms: Vec<(usize, Rational)> = Vec::new();
        for (neg, term) in split_signed_terms(s) {
            let term = term.replace(' ', "");
            let (coeff, var) = match term.split_once('*') {
                Some((c, v)) => (parse_rational(c)?, Some(v.to_string())),
                None if term.starts_with('t') => (Rational::from_int(1), Some(term.clone())),
                None => (parse_rational(&term)?, None),
            };
            let exp = match var.as_deref() {
                None => 0,
                Some("t") => 1,
                Some(v) => v
                    .strip_prefix("t^")
                    .ok_or_else(bad)?
                    .parse::<usize>()
                    .map_err(|_| bad())?,
            };
            terms.push((exp, if neg { -coeff } else { coeff }));
        }
        if terms.is_empty() {
            return Err(bad());
        }
        let n = terms.iter().map(|(e, _)| *e).max().unwrap_or(0);
        let mut coeffs = vec![Rational::from_int(0); n + 1];
        for (e, c) in terms {
            coeffs[e] += c;
        }
        Ok(Series::new(coeffs, n))
    }
}
