use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::Ring;
use crate::error::{Error, Result};

/// Laurent polynomial in `q` with integer coefficients. Zero coefficients are
/// never stored, so structural equality is ring equality.
#[derive(Clone, PartialEq, Eq, Hash, Default, Debug)]
pub struct LaurentZ {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentZ {
    pub fn monomial(coeff: impl Into<BigInt>, exp: i64) -> Self {
        let mut l = Self::default();
        l.add_term(exp, coeff.into());
        l
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::monomial(c, 0)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_terms<I: IntoIterator<Item = (i64, i64)>>(terms: I) -> Self {
        let mut l = Self::default();
        for (e, c) in terms {
            l.add_term(e, BigInt::from(c));
        }
        l
    }

    pub fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    /// `(exponent, coefficient)` pairs in ascending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Value at `q = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Substitutes `q ↦ q^k`.
    pub fn substitute_power(&self, k: i64) -> Self {
        let mut l = Self::default();
        for (e, c) in &self.terms {
            l.add_term(e * k, c.clone());
        }
        l
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Zero for LaurentZ {
    fn zero() -> Self {
        Self::default()
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl One for LaurentZ {
    fn one() -> Self {
        Self::constant(1)
    }
}

impl Add for LaurentZ {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (e, c) in rhs.terms {
            self.add_term(e, c);
        }
        self
    }
}

impl Sub for LaurentZ {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for LaurentZ {
    type Output = Self;

    fn neg(mut self) -> Self {
        for c in self.terms.values_mut() {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl Mul for LaurentZ {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        &self * &rhs
    }
}

impl<'a> Mul<&'a LaurentZ> for &'a LaurentZ {
    type Output = LaurentZ;

    fn mul(self, rhs: &'a LaurentZ) -> LaurentZ {
        let mut out = LaurentZ::default();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Ring for LaurentZ {
    fn from_int(n: i64) -> Self {
        Self::constant(n)
    }

    /// Units are `±q^k`.
    fn try_inv(&self) -> Option<Self> {
        match self.terms.iter().next() {
            Some((e, c)) if self.terms.len() == 1 && c.abs().is_one() => {
                Some(Self::monomial(c.clone(), -e))
            }
            _ => None,
        }
    }

    fn try_div_int(&self, n: i64) -> Option<Self> {
        if n == 0 {
            return None;
        }
        let d = BigInt::from(n);
        let mut out = Self::default();
        for (e, c) in &self.terms {
            let (quot, rem) = c.div_rem(&d);
            if !rem.is_zero() {
                return None;
            }
            out.add_term(*e, quot);
        }
        Some(out)
    }
}

fn fmt_monomial(f: &mut fmt::Formatter<'_>, abs: &BigInt, exp: i64) -> fmt::Result {
    match (exp, abs.is_one()) {
        (0, _) => write!(f, "{abs}"),
        (1, true) => write!(f, "q"),
        (1, false) => write!(f, "{abs}*q"),
        (e, true) => write!(f, "q^{e}"),
        (e, false) => write!(f, "{abs}*q^{e}"),
    }
}

impl fmt::Display for LaurentZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            fmt_monomial(f, &c.abs(), *e)?;
        }
        Ok(())
    }
}

/// Splits a signed sum like `"q^-1 + 2 - 3*q^2"` into `(negated, term)` pieces.
/// A `-` directly after `^` belongs to an exponent, not to the sum.
pub(crate) fn split_signed_terms(s: &str) -> Vec<(bool, String)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    let mut depth = 0i32;
    let mut prev = ' ';
    for ch in s.chars() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && prev != '^' && prev != '/' {
            if !cur.trim().is_empty() {
                out.push((neg, cur.trim().to_string()));
                neg = false;
            }
            cur.clear();
            if ch == '-' {
                neg = !neg;
            }
        } else {
            cur.push(ch);
        }
        if !ch.is_whitespace() {
            prev = ch;
        }
    }
    if !cur.trim().is_empty() {
        out.push((neg, cur.trim().to_string()));
    }
    out
}

impl FromStr for LaurentZ {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Laurent polynomial: {s:?}"));
        let mut out = LaurentZ::default();
        let pieces = split_signed_terms(s);
        if pieces.is_empty() {
            return Err(bad());
        }
        for (neg, term) in pieces {
            let term = term.replace(' ', "");
            let (coeff, var) = match term.split_once('*') {
                Some((c, v)) => (c.parse::<BigInt>().map_err(|_| bad())?, Some(v.to_string())),
                None if term.starts_with('q') => (BigInt::one(), Some(term.clone())),
                None => (term.parse::<BigInt>().map_err(|_| bad())?, None),
            };
            let exp = match var.as_deref() {
                None => 0,
                Some("q") => 1,
                Some(v) => v
                    .strip_prefix("q^")
                    .ok_or_else(bad)?
                    .trim_matches(|c| c == '(' || c == ')')
                    .parse::<i64>()
                    .map_err(|_| bad())?,
            };
            out.add_term(exp, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}
