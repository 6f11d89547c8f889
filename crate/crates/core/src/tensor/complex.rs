use std::collections::BTreeMap;
use std::sync::Arc;

use num_traits::One;

use super::graded::{GradedMap, GradedObject};
use super::group::{FiniteGroup, GObject};
use super::power::{schur_dims_labelled, Label};
use crate::error::{Error, Result};
use crate::exact::{MatrixQ, Rational};
use crate::partition::Partition;

/// A bounded cochain complex `… → Xⁿ → Xⁿ⁺¹ → …` of graded objects.
#[derive(Clone, PartialEq, Debug, Default)]
pub struct ComplexObject {
    terms: BTreeMap<i64, GradedObject>,
    diffs: BTreeMap<i64, GradedMap>,
}

impl ComplexObject {
    /// `diffs[n]` is `dⁿ: Xⁿ → Xⁿ⁺¹`; missing differentials are zero.
    pub fn new(terms: BTreeMap<i64, GradedObject>, diffs: BTreeMap<i64, GradedMap>) -> Result<Self> {
        let terms: BTreeMap<i64, GradedObject> = terms.into_iter().filter(|(_, x)| !x.is_zero()).collect();
        let term = |n: i64| terms.get(&n).cloned().unwrap_or_default();
        let mut kept = BTreeMap::new();
        for (n, d) in diffs {
            if d.source() != &term(n) || d.target() != &term(n + 1) {
                return Err(Error::SizeMismatch(format!("differential {n} does not go from X^{n} to X^{}", n + 1)));
            }
            if !d.is_zero() {
                kept.insert(n, d);
            }
        }
        for (&n, d) in &kept {
            if let Some(next) = kept.get(&(n + 1)) {
                if !next.compose(d)?.is_zero() {
                    return Err(Error::NotAComplex(n));
                }
            }
        }
        Ok(Self { terms, diffs: kept })
    }

    /// `X` placed in homological degree `n`.
    pub fn concentrated(x: GradedObject, n: i64) -> Self {
        Self::new(BTreeMap::from([(n, x)]), BTreeMap::new()).expect("no differentials")
    }

    /// `X⁰ → X¹`.
    pub fn two_term(d: GradedMap) -> Result<Self> {
        let terms = BTreeMap::from([(0, d.source().clone()), (1, d.target().clone())]);
        Self::new(terms, BTreeMap::from([(0, d)]))
    }

    pub fn term(&self, n: i64) -> GradedObject {
        self.terms.get(&n).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GradedObject)> {
        self.terms.iter().map(|(&n, x)| (n, x))
    }

    pub fn differential(&self, n: i64) -> GradedMap {
        self.diffs
            .get(&n)
            .cloned()
            .unwrap_or_else(|| GradedMap::zero(&self.term(n), &self.term(n + 1)))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// `Hⁿ = ker dⁿ / im dⁿ⁻¹`, degree by degree.
    pub fn cohomology(&self) -> BTreeMap<i64, GradedObject> {
        let mut out = BTreeMap::new();
        for (&n, x) in &self.terms {
            let out_ranks = self.differential(n).ranks();
            let in_ranks = self.differential(n - 1).ranks();
            let h = GradedObject::new(x.dims().map(|(d, m)| {
                let r_out = out_ranks.get(&d).copied().unwrap_or(0);
                let r_in = in_ranks.get(&d).copied().unwrap_or(0);
                (d, m - r_out - r_in)
            }));
            if !h.is_zero() {
                out.insert(n, h);
            }
        }
        out
    }

    /// `⊕ Xⁿ[n]` with zero differentials: `Xⁿ` sits in homological degree `−n`.
    pub fn gr_s(&self) -> Self {
        let terms = self.terms.iter().map(|(&n, x)| (-n, x.clone())).collect();
        Self::new(terms, BTreeMap::new()).expect("no differentials")
    }

    /// `⊕ Hⁿ[−n]` with zero differentials: `Hⁿ` sits in homological degree `n`.
    pub fn gr_tau(&self) -> Self {
        Self::new(self.cohomology(), BTreeMap::new()).expect("no differentials")
    }

    /// `Z[k]`: `Z[k]ⁿ = Zⁿ⁺ᵏ` with differential `(−1)^k d`.
    pub fn shift(&self, k: i64) -> Self {
        let sign = if k.rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
        let terms = self.terms.iter().map(|(&n, x)| (n - k, x.clone())).collect();
        let diffs = self.diffs.iter().map(|(&n, d)| (n - k, d.scale(&sign))).collect();
        Self::new(terms, diffs).expect("shift of a complex")
    }

    /// Basis labels (homological degree, internal degree), term by term.
    pub(crate) fn labels(&self) -> Vec<Label> {
        self.terms
            .iter()
            .flat_map(|(&n, x)| x.basis_degrees().into_iter().map(move |d| Label { hom: n, deg: d }))
            .collect()
    }

    /// The terms of `S_π(Z)`, obtained from the projector on `Z^{⊗n}` with
    /// Koszul signs taken in total degree.
    pub fn schur_terms(&self, pi: &Partition, bound: usize) -> Result<Self> {
        if pi.is_empty() {
            return Ok(Self::concentrated(GradedObject::unit(), 0));
        }
        let dims = schur_dims_labelled(&self.labels(), std::slice::from_ref(pi), bound)?;
        let mut terms: BTreeMap<i64, Vec<(i64, usize)>> = BTreeMap::new();
        for (l, &m) in &dims[0] {
            terms.entry(l.hom).or_default().push((l.deg, m));
        }
        Self::new(terms.into_iter().map(|(n, v)| (n, GradedObject::new(v))).collect(), BTreeMap::new())
    }

    /// Tensor product with `d(x⊗y) = dx⊗y + (−1)^{|x|} x⊗dy`, `|x|` the total degree.
    pub fn tensor(&self, other: &Self) -> Self {
        let hom_range = |c: &Self| -> Vec<i64> { c.terms.keys().copied().collect() };
        let (za, wb) = (hom_range(self), hom_range(other));
        let mut summands: BTreeMap<i64, Vec<(i64, i64)>> = BTreeMap::new();
        for &a in &za {
            for &b in &wb {
                summands.entry(a + b).or_default().push((a, b));
            }
        }
        let piece = |a: i64, b: i64| self.term(a).tensor(&other.term(b));
        let terms: BTreeMap<i64, GradedObject> = summands
            .iter()
            .map(|(&n, v)| (n, v.iter().fold(GradedObject::zero(), |acc, &(a, b)| acc.direct_sum(&piece(a, b)))))
            .collect();
        let total = |n: i64| terms.get(&n).cloned().unwrap_or_default();
        let mut diffs = BTreeMap::new();
        for (&n, v) in &summands {
            let (src, tgt) = (total(n), total(n + 1));
            if tgt.is_zero() {
                continue;
            }
            let offsets = |m: i64, e: i64, a: i64| -> usize {
                summands
                    .get(&m)
                    .map(|v| v.iter().take_while(|&&(x, _)| x < a).map(|&(x, y)| piece(x, y).dim(e)).sum())
                    .unwrap_or(0)
            };
            let mut blocks: BTreeMap<i64, MatrixQ> = BTreeMap::new();
            for e in src.degrees() {
                if tgt.dim(e) > 0 {
                    blocks.insert(e, MatrixQ::zeros(tgt.dim(e), src.dim(e)));
                }
            }
            for &(a, b) in v {
                let dz = self.differential(a).tensor(&GradedMap::identity(&other.term(b)));
                let sign = parity_sign(&self.term(a), a);
                let dw = sign.tensor(&other.differential(b));
                for (map, ta) in [(&dz, a + 1), (&dw, a)] {
                    for (e, blk) in map.blocks() {
                        let Some(target_block) = blocks.get_mut(&e) else { continue };
                        let (r0, c0) = (offsets(n + 1, e, ta), offsets(n, e, a));
                        for i in 0..blk.rows() {
                            for j in 0..blk.cols() {
                                target_block.add_at(r0 + i, c0 + j, blk.get(i, j));
                            }
                        }
                    }
                }
            }
            diffs.insert(n, GradedMap::new(src, tgt, blocks).expect("block shapes"));
        }
        Self::new(terms, diffs).expect("tensor of complexes is a complex")
    }
}

/// The endomorphism `(−1)^{a+d}` on the degree-`d` part of `X`.
fn parity_sign(x: &GradedObject, a: i64) -> GradedMap {
    let blocks = x
        .dims()
        .map(|(d, m)| {
            let s = if (a + d).rem_euclid(2) == 0 { Rational::one() } else { -Rational::one() };
            (d, MatrixQ::identity(m).scale(&s))
        })
        .collect();
    GradedMap::endomorphism(x, blocks).expect("square")
}

/// A complex of objects with a group action and equivariant differentials.
#[derive(Clone, Debug)]
pub struct GComplex {
    complex: ComplexObject,
    group: Arc<FiniteGroup>,
    terms: BTreeMap<i64, GObject>,
}

impl GComplex {
    pub fn new(terms: BTreeMap<i64, GObject>, diffs: BTreeMap<i64, GradedMap>) -> Result<Self> {
        let terms: BTreeMap<i64, GObject> = terms.into_iter().filter(|(_, x)| !x.object().is_zero()).collect();
        let group = match terms.values().next() {
            Some(x) => x.group().clone(),
            None => return Err(Error::SizeMismatch("an equivariant complex needs a nonzero term".into())),
        };
        if terms.values().any(|x| *x.group() != group) {
            return Err(Error::GroupMismatch);
        }
        let complex = ComplexObject::new(terms.iter().map(|(&n, x)| (n, x.object().clone())).collect(), diffs)?;
        for (&n, d) in &complex.diffs {
            terms[&n].check_equivariant(&terms[&(n + 1)], d)?;
        }
        Ok(Self { complex, group, terms })
    }

    pub fn complex(&self) -> &ComplexObject {
        &self.complex
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn term(&self, n: i64) -> Option<&GObject> {
        self.terms.get(&n)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &GObject)> {
        self.terms.iter().map(|(&n, x)| (n, x))
    }

    /// Cohomology objects with the induced actions.
    pub fn cohomology(&self) -> BTreeMap<i64, GObject> {
        let mut out = BTreeMap::new();
        for (&n, x) in &self.terms {
            let (_, ker) = self.complex.differential(n).kernel();
            let incoming = self.complex.differential(n - 1);
            let mut im = BTreeMap::new();
            for (d, blk) in incoming.blocks() {
                let b = blk.column_space_basis();
                if !b.is_empty() {
                    im.insert(d, b);
                }
            }
            let h = x.subquotient(&ker, &im);
            if !h.object().is_zero() {
                out.insert(n, h);
            }
        }
        out
    }
}

impl ComplexObject {
    /// Forgets an equivariant structure on every term.
    pub fn from_gcomplex(z: &GComplex) -> Self {
        z.complex.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;
    use crate::tensor::graded::categorical_trace;
    use crate::symgroup::Permutation;

    fn map(x: &GradedObject, y: &GradedObject, rows: &[&[i64]]) -> GradedMap {
        GradedMap::from_matrix(x, y, &MatrixQ::from_i64_rows(rows)).unwrap()
    }

    #[test]
    fn cohomology_examples() {
        let q = GradedObject::even(1);
        let acyclic = ComplexObject::two_term(GradedMap::identity(&q)).unwrap();
        assert!(acyclic.cohomology().is_empty());
        let p = GradedObject::even(2);
        let z = ComplexObject::two_term(map(&p, &p, &[&[1, 0], &[0, 0]])).unwrap();
        let h = z.cohomology();
        assert_eq!(h[&0], q);
        assert_eq!(h[&1], q);
        assert_eq!(z.gr_tau().term(1), q);
        assert_eq!(z.gr_s().term(-1), p);
        assert_eq!(z.shift(1).term(-1), p);
    }

    #[test]
    fn rejects_non_complexes() {
        let q = GradedObject::even(1);
        let terms = BTreeMap::from([(0, q.clone()), (1, q.clone()), (2, q.clone())]);
        let id = GradedMap::identity(&q);
        let diffs = BTreeMap::from([(0, id.clone()), (1, id)]);
        assert_eq!(ComplexObject::new(terms, diffs), Err(Error::NotAComplex(0)));
        let bad = BTreeMap::from([(0, GradedMap::identity(&GradedObject::even(2)))]);
        assert!(ComplexObject::new(BTreeMap::from([(0, q.clone()), (1, q)]), bad).is_err());
    }

    #[test]
    fn tensor_of_complexes() {
        let p = GradedObject::new([(0, 1), (1, 1)]);
        let z = ComplexObject::two_term(map(&p, &p, &[&[1, 0], &[0, 0]])).unwrap();
        let x = GradedObject::new([(0, 2), (1, 1)]);
        let y = GradedObject::new([(0, 1), (1, 2)]);
        let w = ComplexObject::two_term(map(&x, &y, &[&[1, 1, 0], &[0, 0, 1], &[0, 0, 0]])).unwrap();
        for (a, b) in [(&z, &w), (&w, &z), (&z, &z), (&w, &w)] {
            let t = a.tensor(b);
            // Künneth over a field
            let ha = a.gr_tau();
            let hb = b.gr_tau();
            let expected = ha.tensor(&hb);
            assert_eq!(t.cohomology(), expected.terms.clone());
        }
    }

    #[test]
    fn equivariant_cohomology() {
        // ℚ² with the swap, mapped onto the trivial line by the sum: H⁰ is the sign line
        let x = GObject::preset("perm:sym2").unwrap();
        let line = GObject::trivial(GradedObject::even(1), x.group().clone());
        let sum = map(x.object(), line.object(), &[&[1, 1]]);
        let z = GComplex::new(BTreeMap::from([(0, x.clone()), (1, line.clone())]), BTreeMap::from([(0, sum)])).unwrap();
        let h = z.cohomology();
        assert_eq!(h.len(), 1);
        let swap = Permutation::parse_cycles("(1 2)", Some(2)).unwrap();
        assert_eq!(categorical_trace(h[&0].action(&swap).unwrap()).unwrap(), rat(-1, 1));
        // a non-equivariant differential is refused
        let first = map(x.object(), line.object(), &[&[1, 0]]);
        assert!(matches!(
            GComplex::new(BTreeMap::from([(0, x), (1, line)]), BTreeMap::from([(0, first)])),
            Err(Error::NotEquivariant(_))
        ));
    }
}
