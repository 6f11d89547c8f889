//! The ring Λ of symmetric functions, stored in the Schur basis.
//!
//! Products go through the power-sum basis: `s_π = Σ_μ z_μ⁻¹ χ_π(μ) p_μ`,
//! `p_α p_β = p_{α∪β}`, and back with `p_μ = Σ_π χ_π(μ) s_π`. The same
//! transition gives the characteristic map from class functions of `Σ_n`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exact::{parse_rational, Rational};
use crate::partition::{partitions_of, Partition};
use crate::symgroup::character;

/// Finite rational combination of Schur functions.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct SymFunc {
    terms: BTreeMap<Partition, Rational>,
}

/// Finite rational combination of power sums `p_μ`.
pub type PowerSumExpansion = BTreeMap<Partition, Rational>;

fn chi(pi: &Partition, mu: &Partition) -> Rational {
    Rational::from_integer(character(pi, mu).expect("sizes agree").into())
}

impl SymFunc {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::schur(Partition::empty())
    }

    pub fn schur(pi: Partition) -> Self {
        let mut f = Self::zero();
        f.add_term(pi, Rational::one());
        f
    }

    /// `e_k = s_{(1^k)}`.
    pub fn elementary(k: usize) -> Self {
        Self::schur(Partition::column(k))
    }

    /// `h_k = s_{(k)}`.
    pub fn complete(k: usize) -> Self {
        Self::schur(Partition::row(k))
    }

    /// The power sum `p_μ` in the Schur basis.
    pub fn power_sum(mu: &Partition) -> Self {
        let mut pe = PowerSumExpansion::new();
        pe.insert(mu.clone(), Rational::one());
        from_powersum(&pe)
    }

    pub fn add_term(&mut self, pi: Partition, c: Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(pi.clone()).or_insert_with(Rational::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&pi);
        }
    }

    pub fn coeff(&self, pi: &Partition) -> Rational {
        self.terms.get(pi).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// All Schur coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(|c| c.is_integer())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero();
        for (p, v) in &self.terms {
            out.add_term(p.clone(), v * c);
        }
        out
    }

    pub fn to_powersum(&self) -> PowerSumExpansion {
        let mut out = PowerSumExpansion::new();
        for (pi, c) in &self.terms {
            for (mu, v) in schur_to_powersum(pi) {
                add_to(&mut out, mu, v * c);
            }
        }
        out
    }

    /// The involution `ω`, acting by `p_k ↦ (−1)^{k−1} p_k`.
    pub fn omega(&self) -> Self {
        let pe = self
            .to_powersum()
            .into_iter()
            .map(|(mu, c)| {
                let odd = (mu.size() - mu.len()) % 2 == 1;
                let c = if odd { -c } else { c };
                (mu, c)
            })
            .collect();
        from_powersum(&pe)
    }

    /// Renders in the power-sum basis, e.g. `p[2]/2 + p[1,1]/2`.
    pub fn powersum_string(&self) -> String {
        let pe = self.to_powersum();
        if pe.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (mu, c)) in pe.iter().enumerate() {
            let num = c.numer();
            let sep = match (i, num.is_negative()) {
                (0, true) => "-",
                (0, false) => "",
                (_, true) => " - ",
                (_, false) => " + ",
            };
            out.push_str(sep);
            let a = num.abs();
            if !a.is_one() {
                out.push_str(&format!("{a}*"));
            }
            out.push_str(&format!("p[{}]", bracket_body(mu)));
            if !c.denom().is_one() {
                out.push_str(&format!("/{}", c.denom()));
            }
        }
        out
    }
}

fn bracket_body(p: &Partition) -> String {
    if p.is_empty() {
        String::new()
    } else {
        p.to_string()
    }
}

fn add_to(m: &mut BTreeMap<Partition, Rational>, k: Partition, v: Rational) {
    if v.is_zero() {
        return;
    }
    let e = m.entry(k.clone()).or_insert_with(Rational::zero);
    *e += v;
    if e.is_zero() {
        m.remove(&k);
    }
}

/// Coefficients of `s_π` in the power-sum basis: `z_μ⁻¹ χ_π(μ)`.
pub fn schur_to_powersum(pi: &Partition) -> PowerSumExpansion {
    partitions_of(pi.size())
        .into_iter()
        .filter_map(|mu| {
            let c = chi(pi, &mu) / Rational::from_integer(mu.z());
            (!c.is_zero()).then_some((mu, c))
        })
        .collect()
}

/// Re-expresses a power-sum combination in the Schur basis.
pub fn from_powersum(pe: &PowerSumExpansion) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in pe {
        for pi in partitions_of(mu.size()) {
            out.add_term(pi.clone(), chi(&pi, mu) * c);
        }
    }
    out
}

fn mul_powersum(a: &PowerSumExpansion, b: &PowerSumExpansion) -> PowerSumExpansion {
    let mut out = PowerSumExpansion::new();
    for (x, c) in a {
        for (y, d) in b {
            add_to(&mut out, x.union(y), c * d);
        }
    }
    out
}

fn schur_product(mu: &Partition, eta: &Partition) -> SymFunc {
    type Cache = Mutex<HashMap<(Partition, Partition), SymFunc>>;
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    let key = if mu <= eta { (mu.clone(), eta.clone()) } else { (eta.clone(), mu.clone()) };
    if let Some(f) = cache.lock().unwrap().get(&key) {
        return f.clone();
    }
    let prod = from_powersum(&mul_powersum(&schur_to_powersum(mu), &schur_to_powersum(eta)));
    assert!(
        prod.terms.values().all(|c| c.is_integer() && !c.is_negative()),
        "Schur product s_{mu:?} s_{eta:?} is not a nonnegative integral combination"
    );
    cache.lock().unwrap().insert(key, prod.clone());
    prod
}

/// Product in Λ.
pub fn mul(f: &SymFunc, g: &SymFunc) -> SymFunc {
    let mut out = SymFunc::zero();
    for (mu, c) in &f.terms {
        for (eta, d) in &g.terms {
            let cd = c * d;
            for (pi, v) in &schur_product(mu, eta).terms {
                out.add_term(pi.clone(), v * &cd);
            }
        }
    }
    out
}

/// Littlewood–Richardson coefficient `c^π_{μη}`: the multiplicity of `s_π` in `s_μ s_η`.
pub fn lr(mu: &Partition, eta: &Partition, pi: &Partition) -> u64 {
    if pi.size() != mu.size() + eta.size() {
        return 0;
    }
    let c = schur_product(mu, eta).coeff(pi);
    c.to_integer().to_u64().expect("nonnegative integral LR coefficient")
}

/// Checks `Σ_{k=1}^n (−1)^k p_k e_{n−k} = −n e_n` exactly in Λ.
pub fn newton_check(n: usize) -> bool {
    let mut lhs = SymFunc::zero();
    for k in 1..=n {
        let term = mul(&SymFunc::power_sum(&Partition::row(k)), &SymFunc::elementary(n - k));
        lhs = if k % 2 == 0 { lhs + term } else { lhs - term };
    }
    lhs == SymFunc::elementary(n).scale(&Rational::from_integer(-BigInt::from(n)))
}

/// `Σ_{μ,η} (−1)^{|η|} c^π_{μη} s_μ s_{η^t}`, the expansion of `s_π` at the
/// difference of an alphabet with itself. It is always zero for `|π| > 0`.
pub fn vanishing_schur_sum(pi: &Partition) -> SymFunc {
    let n = pi.size();
    let mut out = SymFunc::zero();
    for k in 0..=n {
        for mu in partitions_of(k) {
            for eta in partitions_of(n - k) {
                let c = lr(&mu, &eta, pi);
                if c == 0 {
                    continue;
                }
                let sign = if eta.size() % 2 == 0 { 1 } else { -1 };
                let term = mul(&SymFunc::schur(mu.clone()), &SymFunc::schur(eta.conjugate()));
                out = out + term.scale(&Rational::from_integer(BigInt::from(sign * c as i64)));
            }
        }
    }
    out
}

/// Characteristic map `R_n → Λ_n`: `Σ_μ z_μ⁻¹ f(μ) p_μ` in the Schur basis.
pub fn ch(n: usize, values: &BTreeMap<Partition, Rational>) -> Result<SymFunc> {
    let mut pe = PowerSumExpansion::new();
    for mu in partitions_of(n) {
        let v = values
            .get(&mu)
            .ok_or_else(|| Error::IncompleteClassFunction(mu.to_string()))?;
        add_to(&mut pe, mu.clone(), v / Rational::from_integer(mu.z()));
    }
    Ok(from_powersum(&pe))
}

impl Add for SymFunc {
    type Output = Self;

    fn add(mut self, rhs: Self) -> Self {
        for (p, c) in rhs.terms {
            self.add_term(p, c);
        }
        self
    }
}

impl Neg for SymFunc {
    type Output = Self;

    fn neg(self) -> Self {
        self.scale(&-Rational::one())
    }
}

impl Sub for SymFunc {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Mul for SymFunc {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        mul(&self, &rhs)
    }
}

impl fmt::Display for SymFunc {
    /// `s[2,1] + 3*s[1,1,1]`; the unit is `s[]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (pi, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let a = c.abs();
            if !a.is_one() {
                write!(f, "{a}*")?;
            }
            write!(f, "s[{}]", bracket_body(pi))?;
        }
        Ok(())
    }
}

impl fmt::Debug for SymFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for SymFunc {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a Schur-basis expression: {s:?}"));
        let mut out = SymFunc::zero();
        let mut rest = s.trim();
        if rest == "0" {
            return Ok(out);
        }
        let mut sign = Rational::one();
        while !rest.is_empty() {
            if let Some(r) = rest.strip_prefix('+') {
                rest = r.trim_start();
                continue;
            }
            if let Some(r) = rest.strip_prefix('-') {
                sign = -sign;
                rest = r.trim_start();
                continue;
            }
            let open = rest.find("s[").ok_or_else(bad)?;
            let coeff_str = rest[..open].trim().trim_end_matches('*').trim();
            let coeff = if coeff_str.is_empty() { Rational::one() } else { parse_rational(coeff_str)? };
            let close = rest[open..].find(']').ok_or_else(bad)? + open;
            let pi: Partition = rest[open + 2..close].parse()?;
            out.add_term(pi, coeff * &sign);
            sign = Rational::one();
            rest = rest[close + 1..].trim_start();
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::partition::partitions_up_to;
    use crate::symgroup::character_table;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn s(x: &str) -> SymFunc {
        x.parse().unwrap()
    }

    #[test]
    fn powersum_transition() {
        let one = schur_to_powersum(&p("1"));
        assert_eq!(one.len(), 1);
        assert_eq!(one[&p("1")], rat(1, 1));
        let e2 = schur_to_powersum(&p("1,1"));
        assert_eq!(e2[&p("1,1")], rat(1, 2));
        assert_eq!(e2[&p("2")], rat(-1, 2));
        let h2 = schur_to_powersum(&p("2"));
        assert_eq!(h2[&p("1,1")], rat(1, 2));
        assert_eq!(h2[&p("2")], rat(1, 2));
        assert_eq!(s("s[2]").powersum_string(), "p[2]/2 + p[1,1]/2");
        assert_eq!(s("s[1,1]").powersum_string(), "-p[2]/2 + p[1,1]/2");
    }

    #[test]
    fn products() {
        assert_eq!(s("s[1]") * s("s[1]"), s("s[2] + s[1,1]"));
        let f = s("s[3,1] - 2*s[2]");
        assert_eq!(SymFunc::one() * f.clone(), f);
        assert_eq!(s("s[2]") * s("s[1]"), s("s[3] + s[2,1]"));
        assert_eq!(lr(&p("1"), &p("1"), &p("2")), 1);
        assert_eq!(lr(&p("2"), &p("2"), &p("3,1")), 1);
        assert_eq!(lr(&p("2"), &p("2"), &p("2,2")), 1);
        assert_eq!(lr(&p("2"), &p("2"), &p("2,1,1")), 0);
        assert_eq!(lr(&p("2,1"), &p("2,1"), &p("3,2,1")), 2);
        assert_eq!(lr(&p("2"), &p("1"), &p("2")), 0);
    }

    #[test]
    fn lr_commutative_and_mul_associative() {
        let ps = partitions_up_to(4);
        for mu in &ps {
            for eta in &ps {
                if mu.size() + eta.size() > 6 {
                    continue;
                }
                for pi in partitions_of(mu.size() + eta.size()) {
                    assert_eq!(lr(mu, eta, &pi), lr(eta, mu, &pi));
                }
            }
        }
        let small = partitions_up_to(2);
        for a in &small {
            for b in &small {
                for c in partitions_up_to(2) {
                    let (fa, fb, fc) = (SymFunc::schur(a.clone()), SymFunc::schur(b.clone()), SymFunc::schur(c));
                    assert_eq!((fa.clone() * fb.clone()) * fc.clone(), fa * (fb * fc));
                }
            }
        }
    }

    #[test]
    fn newton_identities() {
        for n in 1..=8 {
            assert!(newton_check(n), "n = {n}");
        }
        // p₂ = p₁² − 2e₂
        let p2 = SymFunc::power_sum(&p("2"));
        let p11 = SymFunc::power_sum(&p("1,1"));
        assert_eq!(p2, p11 - SymFunc::elementary(2).scale(&rat(2, 1)));
    }

    #[test]
    fn vanishing_sums() {
        assert!(vanishing_schur_sum(&p("1")).is_zero());
        assert!(vanishing_schur_sum(&p("2")).is_zero());
        for n in 1..=4 {
            for pi in partitions_of(n) {
                assert!(vanishing_schur_sum(&pi).is_zero(), "{pi}");
            }
        }
    }

    #[test]
    fn characteristic_map() {
        let triv2: BTreeMap<_, _> = partitions_of(2).into_iter().map(|mu| (mu, rat(1, 1))).collect();
        assert_eq!(ch(2, &triv2).unwrap(), s("s[2]"));
        let t3 = character_table(3).unwrap();
        for pi in partitions_of(3) {
            let vals = partitions_of(3)
                .into_iter()
                .map(|mu| (mu.clone(), rat(t3.value(&pi, &mu), 1)))
                .collect();
            assert_eq!(ch(3, &vals).unwrap(), SymFunc::schur(pi));
        }
        // Ind from Σ₁×Σ₁ of the trivial module: values (2, 0) on (1,1), (2)
        let ind: BTreeMap<_, _> = [(p("1,1"), rat(2, 1)), (p("2"), rat(0, 1))].into_iter().collect();
        assert_eq!(ch(2, &ind).unwrap(), s("s[1]") * s("s[1]"));
        let partial: BTreeMap<_, _> = [(p("2"), rat(1, 1))].into_iter().collect();
        assert!(matches!(ch(2, &partial), Err(Error::IncompleteClassFunction(_))));
    }

    #[test]
    fn omega_transposes() {
        for n in 0..=5 {
            for pi in partitions_of(n) {
                let w = SymFunc::schur(pi.clone()).omega();
                assert_eq!(w, SymFunc::schur(pi.conjugate()));
            }
        }
    }

    #[test]
    fn text_form() {
        let f = s("s[2,1] + 3*s[1,1,1]");
        assert_eq!(f.to_string(), "s[2,1] + 3*s[1,1,1]");
        assert_eq!(s("s[] - 1/2*s[2]").to_string(), "s[] - 1/2*s[2]");
        assert!("s[1,2]".parse::<SymFunc>().is_err());
    }
}
