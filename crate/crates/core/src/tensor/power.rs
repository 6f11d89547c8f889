//! Brute-force linear algebra on tensor powers `X^{⊗n}` with the Koszul
//! action of `Σ_n`.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::graded::{tensor_positions, GradedMap, GradedObject, GradedTrace};
use super::group::{FiniteGroup, GObject};
use crate::error::{check_bound, Error, Result};
use crate::exact::{MatrixQ, Rational};
use crate::lambda::WittSeries;
use crate::exact::Series;
use crate::partition::{partitions_of, Partition};
use crate::symgroup::{character, Permutation};

/// Default cap on `dim X^{⊗n}` for brute-force computations.
pub const DEFAULT_TENSOR_BOUND: usize = 1024;

/// Bidegree of a basis vector: homological degree and internal degree. The
/// parity entering Koszul signs is that of their sum.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub(crate) struct Label {
    pub hom: i64,
    pub deg: i64,
}

impl Label {
    pub fn internal(deg: i64) -> Self {
        Self { hom: 0, deg }
    }

    pub fn is_odd(&self) -> bool {
        (self.hom + self.deg).rem_euclid(2) == 1
    }

    fn add(self, o: Self) -> Self {
        Self { hom: self.hom + o.hom, deg: self.deg + o.deg }
    }
}

pub(crate) fn power_dim(d: usize, n: usize) -> usize {
    (0..n).fold(1usize, |acc, _| acc.saturating_mul(d))
}

fn check_power(d: usize, n: usize, bound: usize) -> Result<()> {
    check_bound("tensor power dimension", power_dim(d, n), bound)
}

/// `σ·J`, the word with `J_i` moved to position `σ(i)`, and whether the Koszul
/// sign `∏_{i<j, σ(i)>σ(j)} (−1)^{|J_i||J_j|}` is negative.
pub(crate) fn permute_word(s: &Permutation, word: &[usize], odd: &[bool]) -> (Vec<usize>, bool) {
    let n = word.len();
    let mut out = vec![0; n];
    let mut neg = false;
    for i in 0..n {
        let si = s.apply(i);
        out[si] = word[i];
        if odd[word[i]] {
            for j in i + 1..n {
                if odd[word[j]] && si > s.apply(j) {
                    neg = !neg;
                }
            }
        }
    }
    (out, neg)
}

fn next_permutation(w: &mut [usize]) -> bool {
    let n = w.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Nondecreasing words of length `n` over `0..d`: one per `Σ_n`-orbit of basis words.
fn multisets(d: usize, n: usize) -> Vec<Vec<usize>> {
    fn go(d: usize, n: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == n {
            out.push(cur.clone());
            return;
        }
        for k in start..d {
            cur.push(k);
            go(d, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(d, n, 0, &mut Vec::with_capacity(n), &mut out);
    out
}

/// All `d^n` words in lexicographic order.
fn words(d: usize, n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::with_capacity(power_dim(d, n));
    let mut w = vec![0; n];
    if d == 0 && n > 0 {
        return out;
    }
    loop {
        out.push(w.clone());
        let mut k = n;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            w[k] += 1;
            if w[k] < d {
                break;
            }
            w[k] = 0;
        }
    }
}

/// Position of each lexicographic word in the basis of `X^{⊗n}` built as
/// `(…(X ⊗ X) ⊗ …) ⊗ X`.
pub(crate) fn tensor_power_positions(degs: &[i64], n: usize) -> Vec<usize> {
    let mut pos = vec![0usize];
    let mut cur = vec![0i64];
    for _ in 0..n {
        let tp = tensor_positions(&cur, degs);
        let d = degs.len();
        let mut next_pos = vec![0; pos.len() * d];
        for (lex, &p) in pos.iter().enumerate() {
            for k in 0..d {
                next_pos[lex * d + k] = tp[p * d + k];
            }
        }
        let mut next_degs = vec![0i64; next_pos.len()];
        for (p, dp) in cur.iter().enumerate() {
            for (k, dk) in degs.iter().enumerate() {
                next_degs[tp[p * d + k]] = dp + dk;
            }
        }
        pos = next_pos;
        cur = next_degs;
    }
    pos
}

/// `χ_π(σ)` for every `σ ∈ Σ_n`, keyed by the permutation list order.
fn character_values(pi: &Partition, perms: &[Permutation]) -> Result<Vec<Rational>> {
    let mut memo: HashMap<Partition, Rational> = HashMap::new();
    perms
        .iter()
        .map(|s| {
            let mu = s.cycle_type();
            if let Some(v) = memo.get(&mu) {
                return Ok(v.clone());
            }
            let v = Rational::from_integer(character(pi, &mu)?.into());
            memo.insert(mu, v.clone());
            Ok(v)
        })
        .collect()
}

/// For each `π`, the dimension of `S_π` of the object with the given basis
/// labels, per total label. The rank of `Σ_σ χ_π(σ⁻¹) σ` is computed on each
/// `Σ_n`-orbit of basis words separately (the projector preserves them).
pub(crate) fn schur_dims_labelled(
    labels: &[Label],
    partitions: &[Partition],
    bound: usize,
) -> Result<Vec<BTreeMap<Label, usize>>> {
    let n = match partitions.first() {
        Some(p) => p.size(),
        None => return Ok(Vec::new()),
    };
    if let Some(p) = partitions.iter().find(|p| p.size() != n) {
        return Err(Error::SizeMismatch(format!("partition {p} is not of {n}")));
    }
    let d = labels.len();
    check_power(d, n, bound)?;
    let odd: Vec<bool> = labels.iter().map(Label::is_odd).collect();
    let perms = Permutation::all(n);
    let chis: Vec<Vec<Rational>> = partitions
        .iter()
        .map(|p| character_values(p, &perms))
        .collect::<Result<_>>()?;
    let mut out = vec![BTreeMap::new(); partitions.len()];
    for orbit in multisets(d, n) {
        let label = orbit.iter().fold(Label::default(), |acc, &k| acc.add(labels[k]));
        let mut arrangements = Vec::new();
        let mut w = orbit.clone();
        loop {
            arrangements.push(w.clone());
            if !next_permutation(&mut w) {
                break;
            }
        }
        let index: HashMap<&[usize], usize> =
            arrangements.iter().enumerate().map(|(i, a)| (a.as_slice(), i)).collect();
        // images of every arrangement under every σ, shared by all π
        let moves: Vec<Vec<(usize, bool)>> = perms
            .iter()
            .map(|s| {
                arrangements
                    .iter()
                    .map(|a| {
                        let (k, neg) = permute_word(s, a, &odd);
                        (index[k.as_slice()], neg)
                    })
                    .collect()
            })
            .collect();
        let m = arrangements.len();
        for (pi_idx, chi) in chis.iter().enumerate() {
            let mut p = MatrixQ::zeros(m, m);
            for (s_idx, c) in chi.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let neg_c = -c.clone();
                for (col, &(row, neg)) in moves[s_idx].iter().enumerate() {
                    p.add_at(row, col, if neg { &neg_c } else { c });
                }
            }
            let rank = p.rank();
            let deg = chi[0].to_integer();
            let deg = usize::try_from(deg).expect("χ(1) is positive");
            assert_eq!(rank % deg, 0, "isotypic rank is a multiple of χ(1)");
            if rank > 0 {
                *out[pi_idx].entry(label).or_insert(0) += rank / deg;
            }
        }
    }
    Ok(out)
}

fn internal_labels(x: &GradedObject) -> Vec<Label> {
    x.basis_degrees().into_iter().map(Label::internal).collect()
}

fn to_graded(dims: &BTreeMap<Label, usize>) -> GradedObject {
    GradedObject::new(dims.iter().map(|(l, &n)| (l.deg, n)))
}

/// `S_π(X)` as a graded object: per degree, the rank of the isotypic projector
/// on `X^{⊗n}` divided by `χ_π(1)`.
pub fn schur_object(x: &GradedObject, pi: &Partition, bound: usize) -> Result<GradedObject> {
    if pi.is_empty() {
        return Ok(GradedObject::unit());
    }
    let dims = schur_dims_labelled(&internal_labels(x), std::slice::from_ref(pi), bound)?;
    Ok(to_graded(&dims[0]))
}

/// `S_π(X)` for every `π ⊢ n` at once.
pub fn schur_objects(x: &GradedObject, n: usize, bound: usize) -> Result<BTreeMap<Partition, GradedObject>> {
    if n == 0 {
        return Ok(BTreeMap::from([(Partition::empty(), GradedObject::unit())]));
    }
    let parts = partitions_of(n);
    let dims = schur_dims_labelled(&internal_labels(x), &parts, bound)?;
    Ok(parts.into_iter().zip(dims.iter().map(to_graded)).collect())
}

/// `X^{⊗n}` with `Σ_n` permuting the factors, Koszul signs included.
pub fn sym_action(x: &GradedObject, n: usize, bound: usize) -> Result<GObject> {
    let degs = x.basis_degrees();
    check_power(degs.len(), n, bound)?;
    let odd: Vec<bool> = degs.iter().map(|d| d.rem_euclid(2) == 1).collect();
    let object = x.tensor_power(n);
    let pos = tensor_power_positions(&degs, n);
    let full_degs = object.basis_degrees();
    let all = words(degs.len(), n);
    let lex_of = |w: &[usize]| w.iter().fold(0usize, |acc, &k| acc * degs.len() + k);
    let group = Arc::new(FiniteGroup::symmetric(n));
    let action = group
        .elements()
        .iter()
        .map(|s| {
            let mut blocks: BTreeMap<i64, MatrixQ> =
                object.dims().map(|(d, m)| (d, MatrixQ::zeros(m, m))).collect();
            for (lex, w) in all.iter().enumerate() {
                let (k, neg) = permute_word(s, w, &odd);
                let (col, row) = (pos[lex], pos[lex_of(&k)]);
                let d = full_degs[col];
                let off = object.offset(d);
                let v = if neg { -Rational::one() } else { Rational::one() };
                blocks.get_mut(&d).expect("degree present").set(row - off, col - off, v);
            }
            GradedMap::endomorphism(&object, blocks)
        })
        .collect::<Result<Vec<_>>>()?;
    GObject::new_unchecked(object, group, action)
}

/// `tr(σ ∘ f^{⊗n}; X^{⊗n})` as a graded supertrace.
///
/// The diagonal entry at the word `I` comes from `J = σ⁻¹·I`, i.e.
/// `J_i = I_{σ(i)}`, and equals `ε(σ, J) ∏_k f_{J_k I_k}`.
pub fn tensor_power_trace(f: &GradedMap, s: &Permutation, bound: usize) -> Result<GradedTrace> {
    if !f.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let n = s.degree();
    let degs = f.source().basis_degrees();
    check_power(degs.len(), n, bound)?;
    let odd: Vec<bool> = degs.iter().map(|d| d.rem_euclid(2) == 1).collect();
    let m = f.to_matrix();
    let mut out = GradedTrace::new();
    for w in words(degs.len(), n) {
        let j: Vec<usize> = (0..n).map(|i| w[s.apply(i)]).collect();
        let mut prod = Rational::one();
        for k in 0..n {
            let e = m.get(j[k], w[k]);
            if e.is_zero() {
                prod = Rational::zero();
                break;
            }
            prod *= e;
        }
        if prod.is_zero() {
            continue;
        }
        let (_, neg) = permute_word(s, &j, &odd);
        let deg: i64 = w.iter().map(|&k| degs[k]).sum();
        let super_neg = neg ^ (w.iter().filter(|&&k| odd[k]).count() % 2 == 1);
        let e = out.entry(deg).or_insert_with(Rational::zero);
        if super_neg {
            *e -= prod;
        } else {
            *e += prod;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// A permutation of the given cycle type, cycles on consecutive points.
pub(crate) fn representative(mu: &Partition) -> Permutation {
    let mut cycles = Vec::new();
    let mut next = 1;
    for &len in mu.parts() {
        cycles.push((next..next + len).collect::<Vec<_>>());
        next += len;
    }
    Permutation::from_cycles(&cycles, mu.size()).expect("disjoint cycles")
}

/// `(1/n!) Σ_σ φ(σ) tr(σ f^{⊗n}; X^{⊗n})` for a class function `φ` on `Σ_n`
/// (given on cycle types). Since `f^{⊗n}` commutes with the `Σ_n`-action, the
/// trace is constant on conjugacy classes and one representative per class is used.
pub fn class_function_trace(
    f: &GradedMap,
    n: usize,
    phi: impl Fn(&Partition) -> Rational,
    bound: usize,
) -> Result<GradedTrace> {
    let mut out = GradedTrace::new();
    for mu in partitions_of(n) {
        let c = phi(&mu);
        if c.is_zero() {
            continue;
        }
        let weight = c / Rational::from_integer(mu.z());
        for (d, v) in tensor_power_trace(f, &representative(&mu), bound)? {
            *out.entry(d).or_insert_with(Rational::zero) += &weight * v;
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

fn total(t: &GradedTrace) -> Rational {
    t.values().fold(Rational::zero(), |a, b| a + b)
}

/// `tr(g; S_V(X)) = (1/n!) Σ_σ χ_V(σ⁻¹) tr(σ g^{⊗n}; X^{⊗n})`, graded.
pub fn trace_schur_graded(x: &GObject, g: &Permutation, v: &Partition, bound: usize) -> Result<GradedTrace> {
    let f = x.action(g)?;
    let n = v.size();
    if n == 0 {
        return Ok(GradedTrace::from([(0, Rational::one())]));
    }
    class_function_trace(f, n, |mu| Rational::from_integer(character(v, mu).expect("same size").into()), bound)
}

/// `tr(g; S_V(X))`.
pub fn trace_schur(x: &GObject, g: &Permutation, v: &Partition, bound: usize) -> Result<Rational> {
    Ok(total(&trace_schur_graded(x, g, v, bound)?))
}

/// The characteristic series `χ̄_X(g) = Σ_n tr(g; Altⁿ X) tⁿ` up to `order`.
///
/// For purely even `X` the exterior powers above `dim X` vanish, so those
/// coefficients are zero without any tensor-power computation.
pub fn char_series(x: &GObject, g: &Permutation, order: usize, bound: usize) -> Result<WittSeries<Rational>> {
    let dim = x.object().total_dim();
    let even = x.object().is_even();
    let mut coeffs = vec![Rational::one()];
    for n in 1..=order {
        if even && n > dim {
            coeffs.push(Rational::zero());
        } else {
            coeffs.push(trace_schur(x, g, &Partition::column(n), bound)?);
        }
    }
    WittSeries::new(Series::new(coeffs, order.max(1)))
}

/// For an object with a `Σ_n`-action, the multiplicity space of each
/// irreducible `V_π`: rank of `Σ_g χ_π(g⁻¹) a_g` per degree, divided by `χ_π(1)`.
pub fn multiplicity_spaces(x: &GObject) -> Result<BTreeMap<Partition, GradedObject>> {
    let g = x.group();
    if !g.is_full_symmetric() {
        return Err(Error::InvalidAction(format!("{} is not a full symmetric group", g.name())));
    }
    let n = g.degree();
    let mut out = BTreeMap::new();
    for pi in partitions_of(n) {
        let chi = character_values(&pi, g.elements())?;
        let p = x.weighted_sum(|i| chi[g.inverse(i)].clone());
        let deg = usize::try_from(chi[g.identity()].to_integer()).expect("positive degree");
        let mut dims = Vec::new();
        for (d, r) in p.ranks() {
            assert_eq!(r % deg, 0, "isotypic rank is a multiple of χ(1)");
            dims.push((d, r / deg));
        }
        let obj = GradedObject::new(dims);
        if !obj.is_zero() {
            out.insert(pi, obj);
        }
    }
    Ok(out)
}
