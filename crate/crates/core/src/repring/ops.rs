use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::rd::{K0Class, RDElement, SchurSeries};
use crate::error::{Error, Result};
use crate::exact::{Ring, Series};
use crate::lambda::{LambdaRing, WittSeries};
use crate::partition::{partitions_of, Partition};
use crate::symfunc::SymFunc;
use crate::symgroup::SpechtModule;
use crate::tensor::{
    multiplicity_spaces, schur_dims_labelled, schur_objects, signed_dimension, sym_action, ComplexObject, FiniteGroup,
    GComplex, GObject, GradedMap, GradedObject, Label,
};

/// `cl(X) = Σ_d (−1)^d dim(X_d) q^d`.
pub fn k0_class(x: &GradedObject) -> K0Class {
    signed_dimension(x)
}

/// `Σ_n (−1)ⁿ cl(Xⁿ)`.
pub fn complex_class(z: &ComplexObject) -> K0Class {
    z.terms().fold(K0Class::zero(), |acc, (n, x)| {
        if n.rem_euclid(2) == 0 {
            acc + k0_class(x)
        } else {
            acc - k0_class(x)
        }
    })
}

/// `λ_t(x) = ∏ (1 + q^{dᵢ} t)^{εᵢ}`.
pub fn lambda_of_class(x: &K0Class, order: usize) -> WittSeries<K0Class> {
    x.lambda_witt(order)
}

/// `Σ_k h_k(x) tᵏ = λ_{−t}(x)⁻¹`.
pub fn complete_series(x: &K0Class, order: usize) -> Series<K0Class> {
    let l = x.lambda_series(order);
    let alt: Vec<K0Class> = l
        .coeffs()
        .iter()
        .enumerate()
        .map(|(k, c)| if k % 2 == 0 { c.clone() } else { -c.clone() })
        .collect();
    Series::new(alt, order).inverse().expect("constant term is 1")
}

/// Determinant by cofactor expansion along rows, memoised on the set of used columns.
fn det<A: Ring>(m: &[Vec<A>]) -> A {
    fn go<A: Ring>(m: &[Vec<A>], row: usize, used: u32, memo: &mut HashMap<u32, A>) -> A {
        let n = m.len();
        if row == n {
            return A::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = A::zero();
        let mut sign_neg = false;
        for c in 0..n {
            if used & (1 << c) != 0 {
                continue;
            }
            if !m[row][c].is_zero() {
                let minor = go(m, row + 1, used | (1 << c), memo);
                let term = m[row][c].clone() * minor;
                acc = if sign_neg { acc - term } else { acc + term };
            }
            sign_neg = !sign_neg;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(m.len() < 32, "determinant too large for cofactor expansion");
    go(m, 0, 0, &mut HashMap::new())
}

/// `S_π(x) = det(h_{π_i − i + j}(x))`.
pub fn schur_class(x: &K0Class, pi: &Partition) -> K0Class {
    let l = pi.len();
    if l == 0 {
        return K0Class::one();
    }
    let h = complete_series(x, pi.size() + l);
    let m: Vec<Vec<K0Class>> = (0..l)
        .map(|i| {
            (0..l)
                .map(|j| {
                    let k = pi.part(i) as i64 - i as i64 + j as i64;
                    if k < 0 {
                        K0Class::zero()
                    } else {
                        h.coeff(k as usize)
                    }
                })
                .collect()
        })
        .collect();
    det(&m)
}

/// `ev_x(f)`, the linear extension of `s_π ↦ S_π(x)`.
pub fn ev(x: &K0Class, f: &SymFunc) -> Result<K0Class> {
    let mut out = K0Class::zero();
    for (pi, c) in f.terms() {
        if !c.is_integer() {
            return Err(Error::NotIntegral(f.to_string()));
        }
        out = out + schur_class(x, pi) * K0Class::constant(c.to_integer());
    }
    Ok(out)
}

fn label_class(l: &Label, mult: usize) -> K0Class {
    let m = BigInt::from(mult);
    K0Class::monomial(if l.is_odd() { -m } else { m }, l.deg)
}

/// `Σ_{μ ⊢ n} cl(S_μ) ⊗ [μ]` for the object with the given basis labels.
fn schur_coefficient(labels: &[Label], n: usize, bound: usize) -> Result<RDElement> {
    if n == 0 {
        return Ok(RDElement::one());
    }
    let parts = partitions_of(n);
    let dims = schur_dims_labelled(labels, &parts, bound)?;
    let mut out = RDElement::zero();
    for (mu, d) in parts.into_iter().zip(dims) {
        let class = d.iter().fold(K0Class::zero(), |acc, (l, &m)| acc + label_class(l, m));
        out.add_term(mu, class);
    }
    Ok(out)
}

fn labels_of(x: &GradedObject) -> Vec<Label> {
    x.basis_degrees().into_iter().map(Label::internal).collect()
}

/// `λ_Σ(X) = Σ_μ cl(S_μ(X)) ⊗ [μ] t^{|μ|}` up to `order`.
pub fn lambda_sigma(x: &GradedObject, order: usize, bound: usize) -> Result<SchurSeries> {
    let labels = labels_of(x);
    let coeffs = (0..=order).map(|n| schur_coefficient(&labels, n, bound)).collect::<Result<_>>()?;
    Ok(Series::new(coeffs, order))
}

/// `λ_Σ` of a complex, computed on its dummy-filtration graded object `gr_S(Z)`.
pub fn lambda_sigma_complex(z: &ComplexObject, order: usize, bound: usize) -> Result<SchurSeries> {
    lambda_sigma_complex_direct(&z.gr_s(), order, bound)
}

/// `λ_Σ` of a complex from the terms of `S_μ(Z)` computed on `Z` itself.
pub fn lambda_sigma_complex_direct(z: &ComplexObject, order: usize, bound: usize) -> Result<SchurSeries> {
    let labels = z.labels();
    let coeffs = (0..=order).map(|n| schur_coefficient(&labels, n, bound)).collect::<Result<_>>()?;
    Ok(Series::new(coeffs, order))
}

/// `Σ cl(Altⁿ X) tⁿ`.
pub fn alt_series(x: &GradedObject, order: usize, bound: usize) -> Result<Series<K0Class>> {
    let s = lambda_sigma(x, order, bound)?;
    Ok(Series::new((0..=order).map(|n| s.coeff(n).coeff(&Partition::column(n))).collect(), order))
}

/// `Σ cl(Symⁿ X) tⁿ`.
pub fn sym_series(x: &GradedObject, order: usize, bound: usize) -> Result<Series<K0Class>> {
    let s = lambda_sigma(x, order, bound)?;
    Ok(Series::new((0..=order).map(|n| s.coeff(n).coeff(&Partition::row(n))).collect(), order))
}

/// The induction product on `R ⊗ K₀`.
pub fn induction_product(a: &RDElement, b: &RDElement) -> RDElement {
    a * b
}

/// A virtual `Σ_n`-object `positive − negative`.
#[derive(Clone, Debug)]
pub struct VirtualGObject {
    pub positive: GObject,
    pub negative: GObject,
}

impl VirtualGObject {
    pub fn g_map(&self) -> Result<RDElement> {
        Ok(g_map(&self.positive)? - g_map(&self.negative)?)
    }
}

/// Splits a class into graded objects `P`, `N` with `cl(P) − cl(N) = u`.
pub fn realize_class(u: &K0Class) -> (GradedObject, GradedObject) {
    let mut pos = Vec::new();
    let mut neg = Vec::new();
    for (d, c) in u.terms() {
        // a line of degree d has class (−1)^d q^d
        let lines = if d.rem_euclid(2) == 0 { c.clone() } else { -c.clone() };
        let m = usize::try_from(lines.abs()).expect("multiplicity fits in usize");
        if lines.is_positive() {
            pos.push((d, m));
        } else {
            neg.push((d, m));
        }
    }
    (GradedObject::new(pos), GradedObject::new(neg))
}

fn specht_object(pi: &Partition, group: &Arc<FiniteGroup>) -> Result<GObject> {
    let v = SpechtModule::new(pi);
    let obj = GradedObject::even(v.dim());
    let action = group
        .elements()
        .iter()
        .map(|s| GradedMap::endomorphism(&obj, BTreeMap::from([(0, v.matrix(s).clone())])))
        .collect::<Result<Vec<_>>>()?;
    GObject::new(obj, group.clone(), action)
}

/// `h([π] ⊗ u) = V_π ⊗ X_u`, realised as `dim V_π` copies of `X_u` with `Σ_n`
/// acting through the matrices of `V_π`. Needs an element of a single grade.
pub fn h_map(a: &RDElement) -> Result<VirtualGObject> {
    let grades = a.grades();
    if grades.len() > 1 {
        return Err(Error::SizeMismatch("h needs an element of a single grade".into()));
    }
    let n = grades.first().copied().unwrap_or(0);
    let group = Arc::new(FiniteGroup::symmetric(n));
    let mut positive = GObject::trivial(GradedObject::zero(), group.clone());
    let mut negative = positive.clone();
    for (pi, u) in a.terms() {
        let v = specht_object(pi, &group)?;
        let (p, m) = realize_class(u);
        positive = positive.direct_sum(&v.tensor(&GObject::trivial(p, group.clone()))?)?;
        negative = negative.direct_sum(&v.tensor(&GObject::trivial(m, group.clone()))?)?;
    }
    Ok(VirtualGObject { positive, negative })
}

/// `g(X) = Σ_π cl(S_{V_π}(X)) ⊗ [π]` for an object with a `Σ_n`-action.
pub fn g_map(x: &GObject) -> Result<RDElement> {
    let mut out = RDElement::zero();
    for (pi, s) in multiplicity_spaces(x)? {
        out.add_term(pi, k0_class(&s));
    }
    Ok(out)
}

/// `μ(cl X) = Σ_n cl(X^{⊗n}) tⁿ`, each coefficient with its full
/// `Σ_n`-equivariant decomposition.
pub fn mu_series(x: &GradedObject, order: usize, bound: usize) -> Result<SchurSeries> {
    let mut coeffs = vec![RDElement::one()];
    for n in 1..=order {
        coeffs.push(g_map(&sym_action(x, n, bound)?)?);
    }
    Ok(Series::new(coeffs, order))
}

/// `ξ(Z) = Σ_n (−1)ⁿ g(Hⁿ(Z))`.
pub fn euler_xi(z: &GComplex) -> Result<RDElement> {
    let mut out = RDElement::zero();
    for (n, h) in z.cohomology() {
        let g = g_map(&h)?;
        out = if n.rem_euclid(2) == 0 { out + g } else { out - g };
    }
    Ok(out)
}

/// Checks `Σ_π dim(V_π) dim_d S_π(X) = dim_d X^{⊗n}` in every degree.
pub fn aw_check(x: &GradedObject, n: usize, bound: usize) -> Result<bool> {
    let mut acc: BTreeMap<i64, usize> = BTreeMap::new();
    for (pi, s) in schur_objects(x, n, bound)? {
        let f = usize::try_from(pi.num_standard_tableaux()).expect("fits");
        for (d, m) in s.dims() {
            *acc.entry(d).or_insert(0) += f * m;
        }
    }
    Ok(GradedObject::new(acc) == x.tensor_power(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{LaurentZ, MatrixQ};
    use crate::symfunc::mul;
    use crate::tensor::{schur_object, DEFAULT_TENSOR_BOUND as B};

    fn l(s: &str) -> K0Class {
        s.parse().unwrap()
    }

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn g(s: &str) -> GradedObject {
        s.parse().unwrap()
    }

    fn samples() -> Vec<K0Class> {
        ["1", "2", "q", "1 - q", "1 + q^2"].iter().map(|s| l(s)).collect()
    }

    #[test]
    fn classes() {
        assert_eq!(k0_class(&GradedObject::unit()), l("1"));
        assert_eq!(k0_class(&GradedObject::line(1)), l("-q"));
        let q = GradedObject::even(1);
        let z = ComplexObject::two_term(GradedMap::identity(&q)).unwrap();
        assert!(complex_class(&z).is_zero());
        let x = g("{0:2, 1:1, 3:2}");
        let y = g("{-1:1, 2:3}");
        assert_eq!(k0_class(&x.direct_sum(&y)), k0_class(&x) + k0_class(&y));
        assert_eq!(k0_class(&x.tensor(&y)), k0_class(&x) * k0_class(&y));
        assert_eq!(k0_class(&x.shift(1)), -LaurentZ::q() * k0_class(&x));
    }

    #[test]
    fn lambda_of_class_examples() {
        assert_eq!(lambda_of_class(&l("2"), 3).to_string(), "1 + 2*t + t^2");
        let odd = lambda_of_class(&l("-q"), 4);
        let brute = alt_series(&GradedObject::line(1), 4, B).unwrap();
        assert_eq!(odd.series(), &brute);
        let mixed = lambda_of_class(&l("1 - q"), 4);
        assert_eq!(mixed.series(), &alt_series(&g("{0:1, 1:1}"), 4, B).unwrap());
    }

    #[test]
    fn ev_examples() {
        for x in samples() {
            assert_eq!(ev(&x, &SymFunc::schur(p("1"))).unwrap(), x);
        }
        assert_eq!(ev(&l("1 + q^2"), &SymFunc::schur(p("1,1"))).unwrap(), l("q^2"));
        assert_eq!(ev(&l("1 - q"), &SymFunc::schur(p("1,1"))).unwrap(), l("q^2 - q"));
        assert_eq!(ev(&l("3"), &SymFunc::one()).unwrap(), l("1"));
        assert!(ev(&l("1"), &SymFunc::schur(p("1")).scale(&crate::exact::rat(1, 2))).is_err());
    }

    #[test]
    fn ev_is_a_ring_homomorphism_with_sum_and_negation_rules() {
        let parts: Vec<Partition> = crate::partition::partitions_up_to(4).into_iter().collect();
        for x in samples() {
            for a in &parts {
                for b in &parts {
                    if a.size() + b.size() > 4 {
                        continue;
                    }
                    let (fa, fb) = (SymFunc::schur(a.clone()), SymFunc::schur(b.clone()));
                    assert_eq!(ev(&x, &mul(&fa, &fb)).unwrap(), ev(&x, &fa).unwrap() * ev(&x, &fb).unwrap());
                }
                let sign = if a.size() % 2 == 0 { l("1") } else { l("-1") };
                assert_eq!(schur_class(&-x.clone(), a), sign * schur_class(&x, &a.conjugate()));
            }
        }
        for x in samples() {
            for y in samples() {
                for pi in crate::partition::partitions_up_to(3) {
                    let mut rhs = K0Class::zero();
                    for mu in crate::partition::partitions_up_to(pi.size()) {
                        for eta in partitions_of(pi.size() - mu.size()) {
                            let c = crate::symfunc::lr(&mu, &eta, &pi);
                            if c > 0 {
                                rhs = rhs
                                    + K0Class::constant(c) * schur_class(&x, &mu) * schur_class(&y, &eta);
                            }
                        }
                    }
                    assert_eq!(schur_class(&(x.clone() + y.clone()), &pi), rhs);
                }
            }
        }
    }

    #[test]
    fn ev_matches_brute_force_schur_objects() {
        for x in ["{0:1}", "{1:1}", "{2:1}", "{0:2}", "{0:1, 1:1}", "{1:1, 2:1}", "{0:1, 2:1}", "{1:2}"] {
            let x = g(x);
            for pi in crate::partition::partitions_up_to(3) {
                assert_eq!(
                    ev(&k0_class(&x), &SymFunc::schur(pi.clone())).unwrap(),
                    k0_class(&schur_object(&x, &pi, B).unwrap()),
                    "{x} {pi}"
                );
            }
        }
    }

    #[test]
    fn lambda_sigma_examples() {
        let line = lambda_sigma(&GradedObject::unit(), 4, B).unwrap();
        for n in 0..=4 {
            assert_eq!(line.coeff(n), RDElement::basis(Partition::row(n), l("1")));
        }
        assert!(lambda_sigma(&GradedObject::zero(), 3, B).unwrap().is_one());
        let (x, y) = (GradedObject::unit(), GradedObject::line(1));
        let lhs = lambda_sigma(&x.direct_sum(&y), 3, B).unwrap();
        let rhs = lambda_sigma(&x, 3, B).unwrap().mul_series(&lambda_sigma(&y, 3, B).unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn complex_lambda_sigma() {
        let p2 = GradedObject::even(2);
        let d = GradedMap::from_matrix(&p2, &p2, &MatrixQ::from_i64_rows(&[&[0, 1], &[0, 0]])).unwrap();
        let z = ComplexObject::two_term(d).unwrap();
        let via_gr = lambda_sigma_complex(&z, 3, B).unwrap();
        assert_eq!(via_gr, lambda_sigma_complex_direct(&z, 3, B).unwrap());
        let terms = lambda_sigma(&z.term(0), 3, B).unwrap().mul_series(&lambda_sigma(&z.term(1), 3, B).unwrap().inverse().unwrap());
        assert_eq!(via_gr, terms);
        let h = z.cohomology();
        let coh = lambda_sigma(&h[&0], 3, B).unwrap().mul_series(&lambda_sigma(&h[&1], 3, B).unwrap().inverse().unwrap());
        assert_eq!(via_gr, coh);
    }

    #[test]
    fn h_and_g() {
        let a = RDElement::basis(p("2"), l("1"));
        assert_eq!(h_map(&a).unwrap().g_map().unwrap(), a);
        let swap = GObject::preset("perm:sym2").unwrap();
        assert_eq!(g_map(&swap).unwrap(), RDElement::basis(p("2"), l("1")) + RDElement::basis(p("1,1"), l("1")));
        let sq = sym_action(&GradedObject::even(2), 2, B).unwrap();
        assert_eq!(g_map(&sq).unwrap(), RDElement::basis(p("2"), l("3")) + RDElement::basis(p("1,1"), l("1")));
        for n in 0..=3 {
            for pi in partitions_of(n) {
                for u in ["1", "-q", "2 - q^2", "q^-1 + 3*q"] {
                    let a = RDElement::basis(pi.clone(), l(u));
                    assert_eq!(h_map(&a).unwrap().g_map().unwrap(), a);
                }
            }
        }
        let mixed = RDElement::basis(p("1"), l("1")) + RDElement::basis(p("2"), l("1"));
        assert!(h_map(&mixed).is_err());
    }

    #[test]
    fn mu_series_examples() {
        let line = mu_series(&GradedObject::unit(), 4, B).unwrap();
        for n in 0..=4 {
            assert_eq!(line.coeff(n).underlying_class(), l("1"));
        }
        let x = g("{0:1, 1:1}");
        let m = mu_series(&x, 3, B).unwrap();
        for n in 0..=3 {
            assert_eq!(m.coeff(n).underlying_class(), k0_class(&x).pow(n as u32));
        }
        // the equivariant decomposition of X^{⊗n} is the coefficient of λ_Σ
        assert_eq!(m, lambda_sigma(&x, 3, B).unwrap());
        let plane = GradedObject::even(2);
        let mu = mu_series(&plane, 2, B).unwrap();
        let cl = RDElement::basis(p("1"), k0_class(&plane));
        let prod = mu.mul_series(&Series::new(vec![RDElement::one(), -cl], 2));
        assert_eq!(prod.coeff(1), RDElement::zero());
        assert_ne!(prod.coeff(2), RDElement::zero());
    }

    #[test]
    fn euler_xi_examples() {
        let x = GObject::preset("perm:sym2").unwrap();
        let line = GObject::trivial(GradedObject::even(1), x.group().clone());
        let sum = GradedMap::from_matrix(x.object(), line.object(), &MatrixQ::from_i64_rows(&[&[1, 1]])).unwrap();
        // H⁰ = sign line, nothing in degree 1
        let z = GComplex::new(BTreeMap::from([(0, x.clone()), (1, line.clone())]), BTreeMap::from([(0, sum)])).unwrap();
        assert_eq!(euler_xi(&z).unwrap(), RDElement::basis(p("1,1"), l("1")));
        // H⁰ = trivial, H¹ = sign
        let zero = GradedMap::zero(line.object(), GObject::preset("sign:sym2").unwrap().object());
        let w = GComplex::new(
            BTreeMap::from([(0, line.clone()), (1, GObject::preset("sign:sym2").unwrap())]),
            BTreeMap::from([(0, zero)]),
        )
        .unwrap();
        assert_eq!(euler_xi(&w).unwrap(), RDElement::basis(p("2"), l("1")) - RDElement::basis(p("1,1"), l("1")));
        assert_eq!(euler_xi(&w).unwrap().underlying_class(), complex_class(&w.complex().gr_tau()));
        let id = GradedMap::identity(x.object());
        let acyclic = GComplex::new(BTreeMap::from([(0, x.clone()), (1, x.clone())]), BTreeMap::from([(0, id)])).unwrap();
        assert!(euler_xi(&acyclic).unwrap().is_zero());
        let single = GComplex::new(BTreeMap::from([(0, x.clone())]), BTreeMap::new()).unwrap();
        assert_eq!(euler_xi(&single).unwrap(), g_map(&x).unwrap());
    }

    #[test]
    fn aw_examples() {
        for n in 1..=3 {
            assert!(aw_check(&GradedObject::even(2), n, B).unwrap());
        }
        assert!(aw_check(&g("{0:1, 1:2, 4:1}"), 1, B).unwrap());
        assert!(aw_check(&g("{0:1, 1:2}"), 3, B).unwrap());
    }

    #[test]
    fn determinant() {
        let m: Vec<Vec<BigInt>> = vec![
            vec![2.into(), 0.into(), 1.into()],
            vec![1.into(), 3.into(), 2.into()],
            vec![1.into(), 1.into(), 2.into()],
        ];
        assert_eq!(det(&m), BigInt::from(6));
        assert_eq!(det::<BigInt>(&[]), BigInt::one());
    }
}
