use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use serde_json::Value;

use super::graded::{GradedMap, GradedObject};
use crate::error::{Error, Result};
use crate::exact::{parse_rational, MatrixQ, Rational};
use crate::symgroup::Permutation;

/// A finite group, realised as a set of permutations of `{0, …, degree−1}`
/// together with its multiplication table.
pub struct FiniteGroup {
    name: String,
    degree: usize,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Vec<Vec<usize>>,
    identity: usize,
}

impl FiniteGroup {
    /// The subgroup of `Σ_degree` generated by `gens`.
    pub fn generated(name: &str, degree: usize, gens: &[Permutation]) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| g.degree() != degree) {
            return Err(Error::SizeMismatch(format!("generator {g} does not act on {degree} points")));
        }
        let mut seen = vec![Permutation::identity(degree)];
        let mut queue = VecDeque::from([Permutation::identity(degree)]);
        let mut set: std::collections::HashSet<Permutation> = seen.iter().cloned().collect();
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = g.compose(&x);
                if set.insert(y.clone()) {
                    seen.push(y.clone());
                    queue.push_back(y);
                }
            }
        }
        seen.sort();
        Ok(Self::from_elements(name, degree, seen))
    }

    fn from_elements(name: &str, degree: usize, elements: Vec<Permutation>) -> Self {
        let index: HashMap<Permutation, usize> =
            elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        let table = elements
            .iter()
            .map(|a| elements.iter().map(|b| index[&a.compose(b)]).collect())
            .collect();
        let identity = index[&Permutation::identity(degree)];
        Self { name: name.to_string(), degree, elements, index, table, identity }
    }

    pub fn symmetric(n: usize) -> Self {
        Self::from_elements(&format!("sym{n}"), n, Permutation::all(n))
    }

    /// `ℤ/n`, generated by the n-cycle `(1 2 … n)`.
    pub fn cyclic(n: usize) -> Self {
        let gen = Permutation::from_cycles(&[(1..=n).collect()], n).expect("valid cycle");
        Self::generated(&format!("cyc{n}"), n, &[gen]).expect("degrees agree")
    }

    /// `"symN"` or `"cycN"`.
    pub fn by_name(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown group {name:?}"));
        let (kind, n) = name.split_at(name.len().min(3));
        let n: usize = n.parse().map_err(|_| bad())?;
        match kind {
            "sym" if n <= 7 => Ok(Self::symmetric(n)),
            "cyc" if n >= 1 => Ok(Self::cyclic(n)),
            _ => Err(bad()),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, g: &Permutation) -> Option<usize> {
        self.index.get(g).copied()
    }

    pub fn identity(&self) -> usize {
        self.identity
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a][b]
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.index[&self.elements[a].inverse()]
    }

    pub fn pow(&self, a: usize, e: usize) -> usize {
        (0..e).fold(self.identity, |acc, _| self.mul(acc, a))
    }

    /// Whether this is all of `Σ_degree`.
    pub fn is_full_symmetric(&self) -> bool {
        self.order() == (1..=self.degree).product::<usize>()
    }
}

impl PartialEq for FiniteGroup {
    fn eq(&self, other: &Self) -> bool {
        self.degree == other.degree && self.elements == other.elements
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (order {})", self.name, self.order())
    }
}

/// A graded object with a linear action of a finite group.
#[derive(Clone, Debug)]
pub struct GObject {
    object: GradedObject,
    group: Arc<FiniteGroup>,
    action: Vec<GradedMap>,
}

impl GObject {
    /// Checks that `action[e]` is the identity and `action[gh] = action[g] ∘ action[h]`.
    pub fn new(object: GradedObject, group: Arc<FiniteGroup>, action: Vec<GradedMap>) -> Result<Self> {
        let out = Self::new_unchecked(object, group, action)?;
        out.check_homomorphism()?;
        Ok(out)
    }

    pub(crate) fn new_unchecked(object: GradedObject, group: Arc<FiniteGroup>, action: Vec<GradedMap>) -> Result<Self> {
        if action.len() != group.order() {
            return Err(Error::InvalidAction(format!(
                "{} matrices for a group of order {}",
                action.len(),
                group.order()
            )));
        }
        if action.iter().any(|a| a.source() != &object || a.target() != &object) {
            return Err(Error::InvalidAction("action maps are not endomorphisms of the object".into()));
        }
        Ok(Self { object, group, action })
    }

    fn check_homomorphism(&self) -> Result<()> {
        let g = &self.group;
        if self.action[g.identity()] != GradedMap::identity(&self.object) {
            return Err(Error::InvalidAction("identity does not act trivially".into()));
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                if self.action[g.mul(a, b)] != self.action[a].compose(&self.action[b])? {
                    return Err(Error::InvalidAction(format!(
                        "action is not multiplicative at {} * {}",
                        g.element(a),
                        g.element(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Extends an assignment on generators to the whole group, then checks it.
    pub fn from_generators(
        object: GradedObject,
        group: Arc<FiniteGroup>,
        gens: &[(Permutation, GradedMap)],
    ) -> Result<Self> {
        let mut action: Vec<Option<GradedMap>> = vec![None; group.order()];
        action[group.identity()] = Some(GradedMap::identity(&object));
        let mut queue = VecDeque::from([group.identity()]);
        let gens: Vec<(usize, &GradedMap)> = gens
            .iter()
            .map(|(p, m)| {
                group
                    .index_of(p)
                    .map(|i| (i, m))
                    .ok_or_else(|| Error::InvalidAction(format!("{p} is not in {}", group.name())))
            })
            .collect::<Result<_>>()?;
        while let Some(x) = queue.pop_front() {
            for &(g, m) in &gens {
                let y = group.mul(g, x);
                if action[y].is_none() {
                    action[y] = Some(m.compose(action[x].as_ref().expect("visited"))?);
                    queue.push_back(y);
                }
            }
        }
        let action: Option<Vec<GradedMap>> = action.into_iter().collect();
        let action = action.ok_or_else(|| Error::InvalidAction("generators do not generate the group".into()))?;
        Self::new(object, group, action)
    }

    /// The trivial action.
    pub fn trivial(object: GradedObject, group: Arc<FiniteGroup>) -> Self {
        let action = vec![GradedMap::identity(&object); group.order()];
        Self { object, group, action }
    }

    /// Permutation representation of a permutation group on `ℚ^degree`, placed in `degree`.
    pub fn permutation(group: Arc<FiniteGroup>, degree: i64) -> Self {
        let object = GradedObject::new([(degree, group.degree())]);
        let action = group
            .elements()
            .iter()
            .map(|s| GradedMap::endomorphism(&object, BTreeMap::from([(degree, permutation_matrix(s))])).expect("square"))
            .collect();
        Self { object, group, action }
    }

    /// The sign character of a permutation group, on a line in `degree`.
    pub fn sign(group: Arc<FiniteGroup>, degree: i64) -> Self {
        let object = GradedObject::line(degree);
        let action = group
            .elements()
            .iter()
            .map(|s| {
                let m = MatrixQ::identity(1).scale(&Rational::from_integer(s.sign().into()));
                GradedMap::endomorphism(&object, BTreeMap::from([(degree, m)])).expect("square")
            })
            .collect();
        Self { object, group, action }
    }

    /// The left regular representation, `g·e_h = e_{gh}`.
    pub fn regular(group: Arc<FiniteGroup>, degree: i64) -> Self {
        let n = group.order();
        let object = GradedObject::new([(degree, n)]);
        let action = (0..n)
            .map(|g| {
                let mut m = MatrixQ::zeros(n, n);
                for h in 0..n {
                    m.set(group.mul(g, h), h, Rational::one());
                }
                GradedMap::endomorphism(&object, BTreeMap::from([(degree, m)])).expect("square")
            })
            .collect();
        Self { object, group, action }
    }

    /// Named presets `"kind:group"` or `"kind:group@degree"`, with kind one of
    /// `trivial`, `sign`, `perm`, `signperm` (permutation ⊗ sign), `reg`, and
    /// group `symN` or `cycN`.
    pub fn preset(name: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("unknown representation preset {name:?}"));
        let (kind, rest) = name.split_once(':').ok_or_else(bad)?;
        let (group, degree) = match rest.split_once('@') {
            Some((g, d)) => (g, d.parse::<i64>().map_err(|_| bad())?),
            None => (rest, 0),
        };
        let group = Arc::new(FiniteGroup::by_name(group)?);
        match kind {
            "trivial" => Ok(Self::trivial(GradedObject::line(degree), group)),
            "sign" => Ok(Self::sign(group, degree)),
            "perm" => Ok(Self::permutation(group, degree)),
            "signperm" => Self::permutation(group.clone(), degree).tensor(&Self::sign(group, 0)),
            "reg" => Ok(Self::regular(group, degree)),
            _ => Err(bad()),
        }
    }

    /// Reads a representation from JSON:
    ///
    /// ```json
    /// {"group": "sym3", "object": "{0:2}",
    ///  "generators": [{"element": "(1 2)", "matrix": [[0, 1], [1, 0]]}]}
    /// ```
    ///
    /// `group` may also be `{"name": …, "degree": n, "generators": ["(1 2 3)", …]}`;
    /// matrix entries are integers or rational strings such as `"-1/2"`.
    pub fn from_json(text: &str) -> Result<Self> {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let bad = |what: &str| Error::Parse(format!("representation JSON: {what}"));
        let group = match &v["group"] {
            Value::String(s) => FiniteGroup::by_name(s)?,
            Value::Object(o) => {
                let degree = o.get("degree").and_then(Value::as_u64).ok_or_else(|| bad("group degree"))? as usize;
                let gens = o
                    .get("generators")
                    .and_then(Value::as_array)
                    .ok_or_else(|| bad("group generators"))?
                    .iter()
                    .map(|g| {
                        let s = g.as_str().ok_or_else(|| bad("generator"))?;
                        Permutation::parse_cycles(s, Some(degree))
                    })
                    .collect::<Result<Vec<_>>>()?;
                let name = o.get("name").and_then(Value::as_str).unwrap_or("custom");
                FiniteGroup::generated(name, degree, &gens)?
            }
            _ => return Err(bad("missing group")),
        };
        let group = Arc::new(group);
        let object: GradedObject = v["object"].as_str().ok_or_else(|| bad("missing object"))?.parse()?;
        let mut gens = Vec::new();
        for g in v["generators"].as_array().ok_or_else(|| bad("missing generators"))? {
            let s = g["element"].as_str().ok_or_else(|| bad("generator element"))?;
            let p = Permutation::parse_cycles(s, Some(group.degree()))?;
            let rows = g["matrix"]
                .as_array()
                .ok_or_else(|| bad("generator matrix"))?
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| bad("matrix row"))?
                        .iter()
                        .map(json_rational)
                        .collect::<Result<Vec<_>>>()
                })
                .collect::<Result<Vec<_>>>()?;
            if rows.len() != object.total_dim() || rows.iter().any(|r| r.len() != object.total_dim()) {
                return Err(bad("matrix shape"));
            }
            let m = GradedMap::from_matrix(&object, &object, &MatrixQ::from_rows(rows))?;
            gens.push((p, m));
        }
        Self::from_generators(object, group, &gens)
    }

    pub fn object(&self) -> &GradedObject {
        &self.object
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn action_at(&self, i: usize) -> &GradedMap {
        &self.action[i]
    }

    pub fn action(&self, g: &Permutation) -> Result<&GradedMap> {
        self.group
            .index_of(g)
            .map(|i| &self.action[i])
            .ok_or_else(|| Error::InvalidAction(format!("{g} is not in {}", self.group.name())))
    }

    fn same_group(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) || *self.group == *other.group {
            Ok(())
        } else {
            Err(Error::GroupMismatch)
        }
    }

    /// Diagonal action on `X ⊗ Y`.
    pub fn tensor(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.tensor(b)).collect();
        Ok(Self { object: self.object.tensor(&other.object), group: self.group.clone(), action })
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        self.same_group(other)?;
        let object = self.object.direct_sum(&other.object);
        let action = self
            .action
            .iter()
            .zip(&other.action)
            .map(|(a, b)| {
                let blocks = object
                    .degrees()
                    .map(|d| (d, block_diag(&a.block(d), &b.block(d))))
                    .collect();
                GradedMap::endomorphism(&object, blocks).expect("shapes add up")
            })
            .collect();
        Ok(Self { object, group: self.group.clone(), action })
    }

    /// `f ∘ a_X = a_Y ∘ f` for every group element.
    pub fn check_equivariant(&self, target: &Self, f: &GradedMap) -> Result<()> {
        self.same_group(target)?;
        if f.source() != &self.object || f.target() != &target.object {
            return Err(Error::SizeMismatch("map does not go between these objects".into()));
        }
        for i in 0..self.group.order() {
            if f.compose(&self.action[i])? != target.action[i].compose(f)? {
                return Err(Error::NotEquivariant(self.group.element(i).to_string()));
            }
        }
        Ok(())
    }

    /// Restriction of the action to a stable subspace given by a basis of each
    /// degree block.
    pub(crate) fn restrict(&self, bases: &BTreeMap<i64, Vec<Vec<Rational>>>) -> Self {
        let object = GradedObject::new(bases.iter().map(|(&d, b)| (d, b.len())));
        let action = self
            .action
            .iter()
            .map(|a| {
                let blocks = bases
                    .iter()
                    .map(|(&d, b)| {
                        let basis = MatrixQ::from_columns(self.object.dim(d), b);
                        let m = a.block(d);
                        let cols: Vec<Vec<Rational>> = b
                            .iter()
                            .map(|v| basis.solve(&m.mat_vec(v)).expect("subspace is stable"))
                            .collect();
                        (d, MatrixQ::from_columns(b.len(), &cols))
                    })
                    .collect();
                GradedMap::endomorphism(&object, blocks).expect("square blocks")
            })
            .collect();
        Self { object, group: self.group.clone(), action }
    }

    /// Action on the quotient of the stable subspace `outer` by the stable
    /// subspace `inner ⊆ outer`, both given by bases of each degree block.
    pub(crate) fn subquotient(
        &self,
        outer: &BTreeMap<i64, Vec<Vec<Rational>>>,
        inner: &BTreeMap<i64, Vec<Vec<Rational>>>,
    ) -> Self {
        let mut dims = BTreeMap::new();
        let mut frames = BTreeMap::new();
        for (&d, o) in outer {
            let dim = self.object.dim(d);
            let mut frame: Vec<Vec<Rational>> = inner.get(&d).cloned().unwrap_or_default();
            let k = frame.len();
            for v in o {
                let mut trial = frame.clone();
                trial.push(v.clone());
                if MatrixQ::from_columns(dim, &trial).rank() == trial.len() {
                    frame = trial;
                }
            }
            if frame.len() > k {
                dims.insert(d, frame.len() - k);
                frames.insert(d, (k, frame));
            }
        }
        let object = GradedObject::new(dims);
        let action = self
            .action
            .iter()
            .map(|a| {
                let blocks = frames
                    .iter()
                    .map(|(&d, (k, frame))| {
                        let basis = MatrixQ::from_columns(self.object.dim(d), frame);
                        let m = a.block(d);
                        let cols: Vec<Vec<Rational>> = frame[*k..]
                            .iter()
                            .map(|v| basis.solve(&m.mat_vec(v)).expect("subspaces are stable")[*k..].to_vec())
                            .collect();
                        (d, MatrixQ::from_columns(frame.len() - k, &cols))
                    })
                    .collect();
                GradedMap::endomorphism(&object, blocks).expect("square blocks")
            })
            .collect();
        Self { object, group: self.group.clone(), action }
    }
}

/// Kernel of an equivariant map, with the induced action.
pub fn equivariant_kernel(source: &GObject, target: &GObject, f: &GradedMap) -> Result<GObject> {
    source.check_equivariant(target, f)?;
    let (_, bases) = f.kernel();
    Ok(source.restrict(&bases))
}

/// `σ e_i = e_{σ(i)}`.
pub fn permutation_matrix(s: &Permutation) -> MatrixQ {
    let n = s.degree();
    let mut m = MatrixQ::zeros(n, n);
    for i in 0..n {
        m.set(s.apply(i), i, Rational::one());
    }
    m
}

fn block_diag(a: &MatrixQ, b: &MatrixQ) -> MatrixQ {
    let mut m = MatrixQ::zeros(a.rows() + b.rows(), a.cols() + b.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            m.set(i, j, a.get(i, j).clone());
        }
    }
    for i in 0..b.rows() {
        for j in 0..b.cols() {
            m.set(a.rows() + i, a.cols() + j, b.get(i, j).clone());
        }
    }
    m
}

fn json_rational(v: &Value) -> Result<Rational> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(|k| Rational::from_integer(k.into()))
            .ok_or_else(|| Error::Parse(format!("matrix entry {n} is not an integer"))),
        Value::String(s) => parse_rational(s),
        _ => Err(Error::Parse(format!("bad matrix entry {v}"))),
    }
}

impl GObject {
    /// `true` when no group element acts nontrivially.
    pub fn is_trivial(&self) -> bool {
        let id = GradedMap::identity(&self.object);
        self.action.iter().all(|a| *a == id)
    }

    /// Sum of the action matrices weighted by `w`, as one map.
    pub(crate) fn weighted_sum(&self, w: impl Fn(usize) -> Rational) -> GradedMap {
        let mut acc = GradedMap::zero(&self.object, &self.object);
        for (i, a) in self.action.iter().enumerate() {
            let c = w(i);
            if !c.is_zero() {
                acc = acc.add(&a.scale(&c)).expect("same object");
            }
        }
        acc
    }
}
