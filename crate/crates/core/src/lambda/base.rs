use std::fmt;

use num_bigint::BigInt;

use super::universal::{universal_composition_poly, universal_product_poly};
use super::witt::{ghost, WittSeries};
use crate::error::Result;
use crate::exact::{LaurentZ, Rational, Ring, Series};

/// Which concrete λ-ring a base type is.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum LambdaContext {
    /// `λ_t(m) = (1+t)^m`.
    Integers,
    /// `λ_t(r) = (1+t)^r` as a binomial series.
    Rationals,
    /// `λ_t(Σ εᵢ q^{dᵢ}) = ∏ (1 + q^{dᵢ} t)^{εᵢ}`.
    LaurentQ,
}

impl fmt::Display for LambdaContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Self::Integers => "Z",
            Self::Rationals => "Q",
            Self::LaurentQ => "Z[q,q^-1]",
        })
    }
}

/// A commutative ring with a λ-structure `x ↦ λ_t(x) = Σ λⁱ(x) tⁱ`.
pub trait LambdaRing: Ring {
    const CONTEXT: LambdaContext;

    /// `λ_t(x)` up to order `order`.
    fn lambda_series(&self, order: usize) -> Series<Self>;

    fn lambda_witt(&self, order: usize) -> WittSeries<Self> {
        WittSeries::new(self.lambda_series(order.max(1))).expect("λ-series start with 1")
    }

    /// `λⁿ(x)`.
    fn lambda_op(&self, n: usize) -> Self {
        self.lambda_series(n.max(1)).coeff(n)
    }
}

/// Binomial series `(1+t)^r` for any `r` in a ℚ-algebra containing the integers.
fn binomial_series<A: Ring>(r: &A, order: usize) -> Series<A> {
    let mut c = vec![A::one()];
    for k in 1..=order {
        let prev = c[k - 1].clone();
        let num = prev * (r.clone() - A::from_int(k as i64 - 1));
        c.push(num.try_div_int(k as i64).expect("binomial coefficients are integral"));
    }
    Series::new(c, order)
}

impl LambdaRing for BigInt {
    const CONTEXT: LambdaContext = LambdaContext::Integers;

    fn lambda_series(&self, order: usize) -> Series<Self> {
        binomial_series(self, order)
    }
}

impl LambdaRing for Rational {
    const CONTEXT: LambdaContext = LambdaContext::Rationals;

    fn lambda_series(&self, order: usize) -> Series<Self> {
        binomial_series(self, order)
    }
}

impl LambdaRing for LaurentZ {
    const CONTEXT: LambdaContext = LambdaContext::LaurentQ;

    fn lambda_series(&self, order: usize) -> Series<Self> {
        let mut acc = Series::one(order);
        for (d, c) in self.terms() {
            let line = Series::linear(LaurentZ::monomial(1, d), order);
            let e = i64::try_from(c).expect("class multiplicity fits in i64");
            acc = acc.mul_series(&line.pow(e).expect("1 + q^d t is invertible"));
        }
        acc
    }
}

/// `ψ_n(x)`, read off the negative log-derivative of `λ_t(x)`.
pub fn adams_on_base<A: LambdaRing>(x: &A, n: usize) -> A {
    assert!(n >= 1, "Adams operations are indexed from 1");
    ghost(&x.lambda_witt(n))[n - 1].clone()
}

/// Checks `λⁿ(xy) = P_n(λ(x); λ(y))` and `λⁿ(λᵐ(x)) = P_{n,m}(λ(x))` exactly.
pub fn special_check<A: LambdaRing>(x: &A, y: &A, n: usize, m: usize) -> Result<bool> {
    let pn = universal_product_poly(n)?;
    let pnm = universal_composition_poly(n, m)?;
    let lx = x.lambda_series(n * m.max(1));
    let ly = y.lambda_series(n);
    let ex: Vec<A> = (1..=n).map(|k| lx.coeff(k)).collect();
    let ey: Vec<A> = (1..=n).map(|k| ly.coeff(k)).collect();
    let product_ok = (x.clone() * y.clone()).lambda_op(n) == pn.eval(&ex, &ey);
    let ex_full: Vec<A> = (1..=n * m).map(|k| lx.coeff(k)).collect();
    let composition_ok = x.lambda_op(m).lambda_op(n) == pnm.eval(&ex_full, &[]);
    Ok(product_ok && composition_ok)
}

/// `λ⁰ = 1` and `λ¹ = id` on the given element.
pub fn lambda_axioms_hold<A: LambdaRing>(x: &A) -> bool {
    let s = x.lambda_series(1);
    s.coeff(0).is_one() && s.coeff(1) == *x && A::zero().lambda_series(3).is_one()
}
