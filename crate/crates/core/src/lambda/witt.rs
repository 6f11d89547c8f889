use std::fmt;

use super::universal::universal_product_poly;
use crate::error::{Error, Result};
use crate::exact::{neg_log_derivative, Ring, Series};

/// An element of `Λ(A) = 1 + tA[[t]]`, truncated at a finite order ≥ 1.
///
/// Addition in `Λ(A)` is the series product, negation the series inverse, and
/// multiplication is Grothendieck's product `∗` given by the universal
/// polynomials.
#[derive(Clone, PartialEq, Debug)]
pub struct WittSeries<A> {
    series: Series<A>,
}

impl<A: Ring> WittSeries<A> {
    pub fn new(series: Series<A>) -> Result<Self> {
        if !series.coeff(0).is_one() {
            return Err(Error::NonUnitConstantTerm);
        }
        if series.order() == 0 {
            return Err(Error::SizeMismatch("Witt series need order at least 1".into()));
        }
        Ok(Self { series })
    }

    /// `1 + c₁t + c₂t² + …` from the coefficients after the leading 1.
    pub fn from_tail(tail: Vec<A>, order: usize) -> Result<Self> {
        let mut c = vec![A::one()];
        c.extend(tail);
        Self::new(Series::new(c, order))
    }

    /// The zero of `Λ(A)`.
    pub fn one(order: usize) -> Self {
        Self { series: Series::one(order.max(1)) }
    }

    /// `1 + a t`.
    pub fn linear(a: A, order: usize) -> Self {
        Self { series: Series::linear(a, order.max(1)) }
    }

    pub fn series(&self) -> &Series<A> {
        &self.series
    }

    pub fn into_series(self) -> Series<A> {
        self.series
    }

    pub fn order(&self) -> usize {
        self.series.order()
    }

    pub fn coeff(&self, k: usize) -> A {
        self.series.coeff(k)
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self { series: self.series.truncate(order.max(1)) }
    }
}

impl<A: Ring> fmt::Display for WittSeries<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.series.fmt(f)
    }
}

/// Addition in `Λ(A)`: the series product.
pub fn witt_add<A: Ring>(f: &WittSeries<A>, g: &WittSeries<A>) -> WittSeries<A> {
    WittSeries { series: f.series.mul_series(&g.series) }
}

/// Additive inverse in `Λ(A)`: the series inverse.
pub fn witt_neg<A: Ring>(f: &WittSeries<A>) -> WittSeries<A> {
    WittSeries {
        series: f.series.inverse().expect("constant term 1 is a unit"),
    }
}

/// Grothendieck product: the coefficient of `tⁿ` is `P_n(f₁..f_n; g₁..g_n)`.
pub fn witt_mul<A: Ring>(f: &WittSeries<A>, g: &WittSeries<A>) -> Result<WittSeries<A>> {
    let order = f.order().min(g.order());
    let mut coeffs = vec![A::one()];
    for n in 1..=order {
        let p = universal_product_poly(n)?;
        let fx: Vec<A> = (1..=n).map(|k| f.coeff(k)).collect();
        let gy: Vec<A> = (1..=n).map(|k| g.coeff(k)).collect();
        coeffs.push(p.eval(&fx, &gy));
    }
    Ok(WittSeries { series: Series::new(coeffs, order) })
}

/// Ghost components `g₁..g_N` with `Σ g_m (−t)^m = −t f′/f`.
pub fn ghost<A: Ring>(f: &WittSeries<A>) -> Vec<A> {
    let l = neg_log_derivative(&f.series).expect("constant term 1 is a unit");
    (1..=f.order())
        .map(|m| if m % 2 == 0 { l.coeff(m) } else { -l.coeff(m) })
        .collect()
}

/// Rebuilds the series from its ghost components by Newton's recursion
/// `k c_k = Σ_{m=1}^k (−1)^{m−1} g_m c_{k−m}`, dividing by `k` in `A`.
pub fn from_ghosts<A: Ring>(ghosts: &[A]) -> Result<WittSeries<A>> {
    let n = ghosts.len();
    let mut c = vec![A::one()];
    for k in 1..=n {
        let mut acc = A::zero();
        for m in 1..=k {
            let term = ghosts[m - 1].clone() * c[k - m].clone();
            acc = if m % 2 == 1 { acc + term } else { acc - term };
        }
        let ck = acc.try_div_int(k as i64).ok_or(Error::NonQAlgebra(k as i64))?;
        c.push(ck);
    }
    WittSeries::new(Series::new(c, n.max(1)))
}

/// Adams operation (Frobenius) on `Λ(A)`: `ghost(ψ_n f)_m = ghost(f)_{nm}`.
/// The result has order `⌊order(f)/n⌋`.
pub fn adams_on_witt<A: Ring>(f: &WittSeries<A>, n: usize) -> Result<WittSeries<A>> {
    if n == 0 {
        return Err(Error::SizeMismatch("Adams index must be at least 1".into()));
    }
    let out_order = f.order() / n;
    if out_order == 0 {
        return Err(Error::BoundExceeded {
            what: "Adams index against series order",
            value: n,
            limit: f.order(),
        });
    }
    let g = ghost(f);
    let reindexed: Vec<A> = (1..=out_order).map(|m| g[n * m - 1].clone()).collect();
    from_ghosts(&reindexed)
}
