//! Grothendieck's universal polynomials, computed on demand by expanding the
//! elementary symmetric functions of a derived alphabet and reducing the result
//! to elementary symmetric functions by leading-monomial recursion.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{check_bound, Result};
use crate::exact::Ring;

pub const PRODUCT_POLY_BOUND: usize = 4;
pub const COMPOSITION_POLY_BOUND: usize = 6;

/// Integer polynomial in monomials, exponent vectors of fixed length.
type Poly = BTreeMap<Vec<u32>, BigInt>;

fn poly_add_term(p: &mut Poly, m: Vec<u32>, c: BigInt) {
    if c.is_zero() {
        return;
    }
    let e = p.entry(m.clone()).or_insert_with(BigInt::zero);
    *e += c;
    if e.is_zero() {
        p.remove(&m);
    }
}

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let m = ma.iter().zip(mb).map(|(x, y)| x + y).collect();
            poly_add_term(&mut out, m, ca * cb);
        }
    }
    out
}

fn poly_one(nvars: usize) -> Poly {
    let mut p = Poly::new();
    p.insert(vec![0; nvars], BigInt::one());
    p
}

/// `e_k` of the variables `offset..offset+count` inside an `nvars`-variable ring.
fn elementary(k: usize, offset: usize, count: usize, nvars: usize) -> Poly {
    let mut out = Poly::new();
    for subset in subsets(count, k) {
        let mut m = vec![0u32; nvars];
        for i in subset {
            m[offset + i] = 1;
        }
        poly_add_term(&mut out, m, BigInt::one());
    }
    out
}

/// All `k`-element subsets of `0..n`, as increasing index lists.
fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// `e_k` of an alphabet given as a list of monomials.
fn elementary_of_alphabet(alphabet: &[Vec<u32>], k: usize, nvars: usize) -> Poly {
    let mut out = Poly::new();
    for subset in subsets(alphabet.len(), k) {
        let mut m = vec![0u32; nvars];
        for i in subset {
            for (acc, e) in m.iter_mut().zip(&alphabet[i]) {
                *acc += e;
            }
        }
        poly_add_term(&mut out, m, BigInt::one());
    }
    out
}

/// Exponent vector of `e_1..e_r` whose leading monomial is `x^α` (α weakly decreasing).
fn e_exponents(alpha: &[u32]) -> Vec<u32> {
    (0..alpha.len())
        .map(|k| alpha[k] - alpha.get(k + 1).copied().unwrap_or(0))
        .collect()
}

/// A polynomial with integer coefficients in `e_1(x)..e_r(x)` and, for the
/// product polynomials, `e_1(y)..e_r(y)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UniversalPoly {
    /// `(exponents of e_k(x), exponents of e_k(y))`; the y part is empty for
    /// composition polynomials.
    terms: BTreeMap<(Vec<u32>, Vec<u32>), BigInt>,
    x_vars: usize,
    y_vars: usize,
}

impl UniversalPoly {
    pub fn terms(&self) -> impl Iterator<Item = (&(Vec<u32>, Vec<u32>), &BigInt)> {
        self.terms.iter()
    }

    /// Number of `e_k(x)` and `e_k(y)` generators.
    pub fn num_generators(&self) -> (usize, usize) {
        (self.x_vars, self.y_vars)
    }

    pub fn coeff(&self, ex: &[u32], ey: &[u32]) -> BigInt {
        self.terms
            .get(&(ex.to_vec(), ey.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    /// Evaluates with `e_k(x) ↦ ex[k-1]`, `e_k(y) ↦ ey[k-1]`.
    pub fn eval<A: Ring>(&self, ex: &[A], ey: &[A]) -> A {
        let mut total = A::zero();
        for ((px, py), c) in &self.terms {
            let mut term = A::from_int(i64::try_from(c).expect("small coefficient"));
            for (vals, exps) in [(ex, px), (ey, py)] {
                for (k, &e) in exps.iter().enumerate() {
                    for _ in 0..e {
                        term = term * vals[k].clone();
                    }
                }
            }
            total = total + term;
        }
        total
    }
}

fn fmt_factor(f: &mut fmt::Formatter<'_>, first: &mut bool, k: usize, e: u32, var: char) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        write!(f, "*")?;
    }
    *first = false;
    write!(f, "e{}({var})", k + 1)?;
    if e > 1 {
        write!(f, "^{e}")?;
    }
    Ok(())
}

impl fmt::Display for UniversalPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        // largest e-degree pattern first reads most naturally
        for (i, ((px, py), c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            let constant = px.iter().chain(py).all(|&e| e == 0);
            if !a.is_one() || constant {
                write!(f, "{a}")?;
                if !constant {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (k, &e) in px.iter().enumerate() {
                fmt_factor(f, &mut first, k, e, 'x')?;
            }
            for (k, &e) in py.iter().enumerate() {
                fmt_factor(f, &mut first, k, e, 'y')?;
            }
        }
        Ok(())
    }
}

/// Rewrites a polynomial symmetric in the blocks `0..rx` and `rx..rx+ry` in
/// terms of the elementary symmetric functions of each block.
fn reduce_bisymmetric(mut p: Poly, rx: usize, ry: usize) -> UniversalPoly {
    let nvars = rx + ry;
    let ex: Vec<Poly> = (1..=rx).map(|k| elementary(k, 0, rx, nvars)).collect();
    let ey: Vec<Poly> = (1..=ry).map(|k| elementary(k, rx, ry, nvars)).collect();
    let mut terms = BTreeMap::new();
    while let Some((lead, c)) = p.iter().next_back().map(|(m, c)| (m.clone(), c.clone())) {
        let (alpha, beta) = lead.split_at(rx);
        debug_assert!(alpha.windows(2).all(|w| w[0] >= w[1]), "not symmetric in x");
        debug_assert!(beta.windows(2).all(|w| w[0] >= w[1]), "not symmetric in y");
        let px = e_exponents(alpha);
        let py = e_exponents(beta);
        let mut prod = poly_one(nvars);
        for (gens, exps) in [(&ex, &px), (&ey, &py)] {
            for (k, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    prod = poly_mul(&prod, &gens[k]);
                }
            }
        }
        for (m, v) in prod {
            poly_add_term(&mut p, m, -(&v * &c));
        }
        terms.insert((px, py), c);
    }
    UniversalPoly { terms, x_vars: rx, y_vars: ry }
}

type PolyCache = Mutex<HashMap<(usize, usize), Arc<UniversalPoly>>>;

fn cached(key: (usize, usize), build: impl FnOnce() -> UniversalPoly, cache: &'static OnceLock<PolyCache>) -> Arc<UniversalPoly> {
    let cache = cache.get_or_init(Default::default);
    if let Some(p) = cache.lock().unwrap().get(&key) {
        return Arc::clone(p);
    }
    let p = Arc::new(build());
    cache.lock().unwrap().insert(key, Arc::clone(&p));
    p
}

/// `P_n` with `e_n({x_i y_j}) = P_n(e(x); e(y))`, using `n` variables per alphabet.
pub fn universal_product_poly(n: usize) -> Result<Arc<UniversalPoly>> {
    check_bound("product polynomial degree", n, PRODUCT_POLY_BOUND)?;
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    Ok(cached(
        (n, 0),
        || {
            let nvars = 2 * n;
            let alphabet: Vec<Vec<u32>> = (0..n)
                .flat_map(|i| {
                    (0..n).map(move |j| {
                        let mut m = vec![0u32; nvars];
                        m[i] = 1;
                        m[n + j] = 1;
                        m
                    })
                })
                .collect();
            reduce_bisymmetric(elementary_of_alphabet(&alphabet, n, nvars), n, n)
        },
        &CACHE,
    ))
}

/// `P_{n,m}` with `e_n({x_{i₁}⋯x_{i_m}}) = P_{n,m}(e(x))`, using `n·m` variables.
pub fn universal_composition_poly(n: usize, m: usize) -> Result<Arc<UniversalPoly>> {
    check_bound("composition polynomial degree n*m", n * m, COMPOSITION_POLY_BOUND)?;
    static CACHE: OnceLock<PolyCache> = OnceLock::new();
    Ok(cached(
        (n, m),
        || {
            let nvars = n * m;
            let alphabet: Vec<Vec<u32>> = subsets(nvars, m)
                .into_iter()
                .map(|s| {
                    let mut mono = vec![0u32; nvars];
                    for i in s {
                        mono[i] = 1;
                    }
                    mono
                })
                .collect();
            reduce_bisymmetric(elementary_of_alphabet(&alphabet, n, nvars), nvars, 0)
        },
        &CACHE,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_poly_small_cases() {
        let p1 = universal_product_poly(1).unwrap();
        assert_eq!(p1.to_string(), "e1(x)*e1(y)");
        let p2 = universal_product_poly(2).unwrap();
        assert_eq!(p2.coeff(&[2, 0], &[0, 1]), BigInt::from(1));
        assert_eq!(p2.coeff(&[0, 1], &[2, 0]), BigInt::from(1));
        assert_eq!(p2.coeff(&[0, 1], &[0, 1]), BigInt::from(-2));
        assert_eq!(p2.terms().count(), 3);
        // rank-one alphabets {a}, {b}
        let (a, b) = (7i64, -3i64);
        assert_eq!(p2.eval(&[a, 0], &[b, 0]), 0);
        assert!(universal_product_poly(5).is_err());
    }

    #[test]
    fn product_poly_matches_direct_evaluation() {
        // alphabets x = {1, 2, 3}, y = {-1, 4, 5}: compare e_n of all products
        let xs = [1i64, 2, 3];
        let ys = [-1i64, 4, 5];
        let e = |alpha: &[i64], k: usize| -> i64 {
            subsets(alpha.len(), k).iter().map(|s| s.iter().map(|&i| alpha[i]).product::<i64>()).sum()
        };
        let prods: Vec<i64> = xs.iter().flat_map(|a| ys.iter().map(move |b| a * b)).collect();
        for n in 1..=4 {
            let p = universal_product_poly(n).unwrap();
            let ex: Vec<i64> = (1..=n).map(|k| e(&xs, k)).collect();
            let ey: Vec<i64> = (1..=n).map(|k| e(&ys, k)).collect();
            assert_eq!(p.eval(&ex, &ey), e(&prods, n), "n = {n}");
        }
    }

    #[test]
    fn composition_poly_small_cases() {
        for m in 1..=6 {
            let p = universal_composition_poly(1, m).unwrap();
            let mut expected = vec![0u32; m];
            expected[m - 1] = 1;
            assert_eq!(p.terms().count(), 1);
            assert_eq!(p.coeff(&expected, &[]), BigInt::from(1));
        }
        let p21 = universal_composition_poly(2, 1).unwrap();
        assert_eq!(p21.to_string(), "e2(x)");
        // n = 2, m = 2 at x = (1,1,1,1): λ²(λ²(4)) = C(6, 2) = 15
        let p22 = universal_composition_poly(2, 2).unwrap();
        let ex: Vec<i64> = [4, 6, 4, 1].to_vec();
        assert_eq!(p22.eval(&ex, &[]), 15);
        assert!(universal_composition_poly(7, 1).is_err());
    }

    #[test]
    fn composition_poly_matches_direct_evaluation() {
        let xs = [2i64, -1, 3, 1, -2, 5];
        let e = |alpha: &[i64], k: usize| -> i64 {
            subsets(alpha.len(), k).iter().map(|s| s.iter().map(|&i| alpha[i]).product::<i64>()).sum()
        };
        for (n, m) in [(2, 2), (2, 3), (3, 2), (3, 1), (2, 1)] {
            let nv = n * m;
            let alpha = &xs[..nv];
            let derived: Vec<i64> = subsets(nv, m).iter().map(|s| s.iter().map(|&i| alpha[i]).product()).collect();
            let p = universal_composition_poly(n, m).unwrap();
            let ex: Vec<i64> = (1..=nv).map(|k| e(alpha, k)).collect();
            assert_eq!(p.eval(&ex, &[]), e(&derived, n), "n={n} m={m}");
        }
    }
}
