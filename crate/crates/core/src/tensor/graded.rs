use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::{LaurentZ, MatrixQ, Rational};

/// A finite-dimensional ℤ-graded rational vector space; a line in degree `d`
/// has parity `d mod 2`.
///
/// The basis is ordered by degree, so a degree block occupies a contiguous
/// range of indices.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct GradedObject {
    dims: BTreeMap<i64, usize>,
}

/// A Laurent polynomial with rational coefficients, as produced by graded traces.
pub type GradedTrace = BTreeMap<i64, Rational>;

impl GradedObject {
    pub fn new<I: IntoIterator<Item = (i64, usize)>>(dims: I) -> Self {
        let mut out = Self::zero();
        for (d, n) in dims {
            *out.dims.entry(d).or_insert(0) += n;
        }
        out.dims.retain(|_, n| *n > 0);
        out
    }

    pub fn zero() -> Self {
        Self::default()
    }

    /// The tensor unit: one even line in degree 0.
    pub fn unit() -> Self {
        Self::line(0)
    }

    pub fn line(degree: i64) -> Self {
        Self::new([(degree, 1)])
    }

    /// `ℚ^dim` in degree 0.
    pub fn even(dim: usize) -> Self {
        Self::new([(0, dim)])
    }

    pub fn dim(&self, degree: i64) -> usize {
        self.dims.get(&degree).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.dims.iter().map(|(&d, &n)| (d, n))
    }

    pub fn degrees(&self) -> impl Iterator<Item = i64> + '_ {
        self.dims.keys().copied()
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.dims.is_empty()
    }

    /// Every nonzero degree is even.
    pub fn is_even(&self) -> bool {
        self.dims.keys().all(|d| d % 2 == 0)
    }

    /// Degree of each basis vector, in basis order.
    pub fn basis_degrees(&self) -> Vec<i64> {
        self.dims.iter().flat_map(|(&d, &n)| std::iter::repeat_n(d, n)).collect()
    }

    /// Index of the first basis vector of degree `degree`.
    pub fn offset(&self, degree: i64) -> usize {
        self.dims.range(..degree).map(|(_, &n)| n).sum()
    }

    /// `Σ (−1)^d dim X_d`.
    pub fn super_dim(&self) -> i64 {
        self.dims.iter().map(|(&d, &n)| if d % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        Self::new(self.dims().chain(other.dims()))
    }

    pub fn tensor(&self, other: &Self) -> Self {
        Self::new(
            self.dims()
                .flat_map(|(a, m)| other.dims().map(move |(b, n)| (a + b, m * n))),
        )
    }

    /// `X[k]`: every degree moves up by `k`.
    pub fn shift(&self, k: i64) -> Self {
        Self::new(self.dims().map(|(d, n)| (d + k, n)))
    }

    pub fn tensor_power(&self, n: usize) -> Self {
        (0..n).fold(Self::unit(), |acc, _| acc.tensor(self))
    }
}

/// For each pair `(i, j)` in lexicographic order, its position in the basis of
/// `X ⊗ Y` (pairs ordered by total degree, lexicographically within a degree).
pub(crate) fn tensor_positions(x: &[i64], y: &[i64]) -> Vec<usize> {
    let mut lex: Vec<usize> = (0..x.len() * y.len()).collect();
    let ny = y.len().max(1);
    lex.sort_by_key(|&k| x[k / ny] + y[k % ny]);
    let mut pos = vec![0; lex.len()];
    for (p, &k) in lex.iter().enumerate() {
        pos[k] = p;
    }
    pos
}

impl fmt::Display for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, (d, n)) in self.dims().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{d}:{n}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for GradedObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for GradedObject {
    type Err = Error;

    /// Parses `"{0:2, 1:1}"` (degree:dimension pairs).
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("not a graded object: {s:?}"));
        let inner = s
            .trim()
            .strip_prefix('{')
            .and_then(|r| r.strip_suffix('}'))
            .ok_or_else(bad)?;
        let mut dims = Vec::new();
        for item in inner.split(',').map(str::trim).filter(|x| !x.is_empty()) {
            let (d, n) = item.split_once(':').ok_or_else(bad)?;
            let d: i64 = d.trim().parse().map_err(|_| bad())?;
            let n: usize = n.trim().parse().map_err(|_| bad())?;
            dims.push((d, n));
        }
        Ok(Self::new(dims))
    }
}

/// A degree-preserving linear map, stored as one matrix per degree.
#[derive(Clone, PartialEq, Debug)]
pub struct GradedMap {
    source: GradedObject,
    target: GradedObject,
    blocks: BTreeMap<i64, MatrixQ>,
}

impl GradedMap {
    /// Missing blocks are zero.
    pub fn new(source: GradedObject, target: GradedObject, blocks: BTreeMap<i64, MatrixQ>) -> Result<Self> {
        let mut kept = BTreeMap::new();
        for (d, m) in blocks {
            if m.rows() != target.dim(d) || m.cols() != source.dim(d) {
                return Err(Error::SizeMismatch(format!(
                    "block in degree {d} is {}x{}, expected {}x{}",
                    m.rows(),
                    m.cols(),
                    target.dim(d),
                    source.dim(d)
                )));
            }
            if !m.is_zero() {
                kept.insert(d, m);
            }
        }
        Ok(Self { source, target, blocks: kept })
    }

    pub fn zero(source: &GradedObject, target: &GradedObject) -> Self {
        Self { source: source.clone(), target: target.clone(), blocks: BTreeMap::new() }
    }

    pub fn identity(x: &GradedObject) -> Self {
        let blocks = x.dims().map(|(d, n)| (d, MatrixQ::identity(n))).collect();
        Self { source: x.clone(), target: x.clone(), blocks }
    }

    /// An endomorphism given by one block per degree.
    pub fn endomorphism(x: &GradedObject, blocks: BTreeMap<i64, MatrixQ>) -> Result<Self> {
        Self::new(x.clone(), x.clone(), blocks)
    }

    /// Cuts a full matrix (in the graded basis order) into degree blocks,
    /// rejecting entries that would change degree.
    pub fn from_matrix(source: &GradedObject, target: &GradedObject, m: &MatrixQ) -> Result<Self> {
        if m.rows() != target.total_dim() || m.cols() != source.total_dim() {
            return Err(Error::SizeMismatch(format!(
                "matrix is {}x{}, expected {}x{}",
                m.rows(),
                m.cols(),
                target.total_dim(),
                source.total_dim()
            )));
        }
        let (sd, td) = (source.basis_degrees(), target.basis_degrees());
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                if td[i] != sd[j] && !m.get(i, j).is_zero() {
                    return Err(Error::SizeMismatch("map does not preserve degree".into()));
                }
            }
        }
        let mut blocks = BTreeMap::new();
        for (d, n) in source.dims() {
            let rows = target.dim(d);
            if rows == 0 {
                continue;
            }
            let (r0, c0) = (target.offset(d), source.offset(d));
            let mut b = MatrixQ::zeros(rows, n);
            for i in 0..rows {
                for j in 0..n {
                    b.set(i, j, m.get(r0 + i, c0 + j).clone());
                }
            }
            blocks.insert(d, b);
        }
        Self::new(source.clone(), target.clone(), blocks)
    }

    pub fn source(&self) -> &GradedObject {
        &self.source
    }

    pub fn target(&self) -> &GradedObject {
        &self.target
    }

    pub fn block(&self, degree: i64) -> MatrixQ {
        self.blocks
            .get(&degree)
            .cloned()
            .unwrap_or_else(|| MatrixQ::zeros(self.target.dim(degree), self.source.dim(degree)))
    }

    pub fn blocks(&self) -> impl Iterator<Item = (i64, &MatrixQ)> {
        self.blocks.iter().map(|(&d, m)| (d, m))
    }

    /// The full block-diagonal matrix in the graded basis order.
    pub fn to_matrix(&self) -> MatrixQ {
        let mut m = MatrixQ::zeros(self.target.total_dim(), self.source.total_dim());
        for (&d, b) in &self.blocks {
            let (r0, c0) = (self.target.offset(d), self.source.offset(d));
            for i in 0..b.rows() {
                for j in 0..b.cols() {
                    m.set(r0 + i, c0 + j, b.get(i, j).clone());
                }
            }
        }
        m
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Result<Self> {
        if other.target != self.source {
            return Err(Error::SizeMismatch("composing maps with mismatched objects".into()));
        }
        let mut blocks = BTreeMap::new();
        for (&d, a) in &self.blocks {
            if let Some(b) = other.blocks.get(&d) {
                blocks.insert(d, a * b);
            }
        }
        Self::new(other.source.clone(), self.target.clone(), blocks)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::SizeMismatch("adding maps between different objects".into()));
        }
        let blocks = self
            .source
            .degrees()
            .filter(|&d| self.target.dim(d) > 0)
            .map(|d| (d, &self.block(d) + &other.block(d)))
            .collect();
        Self::new(self.source.clone(), self.target.clone(), blocks)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let blocks = self.blocks.iter().map(|(&d, m)| (d, m.scale(c))).collect();
        Self::new(self.source.clone(), self.target.clone(), blocks).expect("shapes unchanged")
    }

    pub fn pow(&self, e: u32) -> Result<Self> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism);
        }
        let blocks = self.source.dims().map(|(d, _)| (d, self.block(d).pow(e))).collect();
        Self::endomorphism(&self.source, blocks)
    }

    /// `f ⊗ g`; both maps have degree 0, so no Koszul sign appears.
    pub fn tensor(&self, other: &Self) -> Self {
        let full = self.to_matrix().kron(&other.to_matrix());
        let src = self.source.tensor(&other.source);
        let tgt = self.target.tensor(&other.target);
        let rpos = tensor_positions(&self.target.basis_degrees(), &other.target.basis_degrees());
        let cpos = tensor_positions(&self.source.basis_degrees(), &other.source.basis_degrees());
        let mut m = MatrixQ::zeros(full.rows(), full.cols());
        for i in 0..full.rows() {
            for j in 0..full.cols() {
                let v = full.get(i, j);
                if !v.is_zero() {
                    m.set(rpos[i], cpos[j], v.clone());
                }
            }
        }
        Self::from_matrix(&src, &tgt, &m).expect("tensor of degree-0 maps has degree 0")
    }

    /// Kernel as a graded object, with a basis of each degree block.
    pub fn kernel(&self) -> (GradedObject, BTreeMap<i64, Vec<Vec<Rational>>>) {
        let mut bases = BTreeMap::new();
        for (d, _) in self.source.dims() {
            let k = self.block(d).kernel_basis();
            if !k.is_empty() {
                bases.insert(d, k);
            }
        }
        let obj = GradedObject::new(bases.iter().map(|(&d, b)| (d, b.len())));
        (obj, bases)
    }

    /// Rank of each degree block.
    pub fn ranks(&self) -> BTreeMap<i64, usize> {
        self.blocks.iter().map(|(&d, m)| (d, m.rank())).filter(|(_, r)| *r > 0).collect()
    }
}

/// The categorical trace `Σ_d (−1)^d tr(f_d)`.
pub fn categorical_trace(f: &GradedMap) -> Result<Rational> {
    Ok(graded_categorical_trace(f)?.values().fold(Rational::zero(), |a, b| a + b))
}

/// The graded trace `Σ_d (−1)^d tr(f_d) q^d`.
pub fn graded_categorical_trace(f: &GradedMap) -> Result<GradedTrace> {
    if !f.is_endomorphism() {
        return Err(Error::NotEndomorphism);
    }
    let mut out = GradedTrace::new();
    for (&d, m) in &f.blocks {
        let t = m.trace();
        if !t.is_zero() {
            out.insert(d, if d % 2 == 0 { t } else { -t });
        }
    }
    Ok(out)
}

/// A graded trace with integral coefficients as a Laurent polynomial.
pub fn trace_to_laurent(t: &GradedTrace) -> Option<LaurentZ> {
    let mut out = LaurentZ::zero();
    for (&d, c) in t {
        if !c.denom().is_one() {
            return None;
        }
        out.add_term(d, c.numer().clone());
    }
    Some(out)
}

/// `Σ (−1)^d dim X_d q^d`.
pub fn signed_dimension(x: &GradedObject) -> LaurentZ {
    let mut out = LaurentZ::zero();
    for (d, n) in x.dims() {
        let n = BigInt::from(n);
        out.add_term(d, if d % 2 == 0 { n } else { -n });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    fn g(s: &str) -> GradedObject {
        s.parse().unwrap()
    }

    #[test]
    fn literals_round_trip() {
        let x = g("{0:2, 1:1}");
        assert_eq!(x.to_string(), "{0:2, 1:1}");
        assert_eq!(g("{ 1:1 ,0:2, 3:0 }"), x);
        assert_eq!(g("{}"), GradedObject::zero());
        assert_eq!(g("{-2:1}").to_string(), "{-2:1}");
        assert!("0:2".parse::<GradedObject>().is_err());
        assert!("{0:x}".parse::<GradedObject>().is_err());
        assert!("{0:-1}".parse::<GradedObject>().is_err());
    }

    #[test]
    fn tensor_dimensions() {
        assert_eq!(GradedObject::line(1).tensor(&GradedObject::line(1)), GradedObject::line(2));
        let x = g("{0:2, 1:1, 3:2}");
        assert_eq!(x.tensor(&GradedObject::unit()), x);
        let y = g("{-1:1, 2:3}");
        assert_eq!(x.tensor(&y).total_dim(), x.total_dim() * y.total_dim());
        assert_eq!(x.tensor(&y), y.tensor(&x));
        assert_eq!(x.shift(1), g("{1:2, 2:1, 4:2}"));
        assert_eq!(x.tensor_power(2).total_dim(), 25);
        assert_eq!(x.super_dim(), -1);
    }

    #[test]
    fn traces() {
        let x = g("{0:2, 1:1}");
        let id = GradedMap::identity(&x);
        assert_eq!(categorical_trace(&id).unwrap(), rat(1, 1));
        assert_eq!(trace_to_laurent(&graded_categorical_trace(&id).unwrap()).unwrap().to_string(), "2 - q");
        assert_eq!(categorical_trace(&GradedMap::zero(&x, &x)).unwrap(), rat(0, 1));
        let y = g("{0:1}");
        assert_eq!(categorical_trace(&GradedMap::zero(&x, &y)), Err(Error::NotEndomorphism));
        assert_eq!(signed_dimension(&x).to_string(), "2 - q");
    }

    #[test]
    fn matrices_and_composition() {
        let x = g("{0:2, 1:1}");
        let m = MatrixQ::from_i64_rows(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]]);
        let f = GradedMap::from_matrix(&x, &x, &m).unwrap();
        assert_eq!(f.to_matrix(), m);
        assert_eq!(f.compose(&f).unwrap().to_matrix(), &m * &m);
        assert_eq!(f.pow(3).unwrap().to_matrix(), m.pow(3));
        let bad = MatrixQ::from_i64_rows(&[&[1, 0, 1], &[0, 1, 0], &[0, 0, 1]]);
        assert!(GradedMap::from_matrix(&x, &x, &bad).is_err());
        assert_eq!(categorical_trace(&f).unwrap(), rat(0, 1));
    }

    #[test]
    fn tensor_of_maps_is_multiplicative_on_traces() {
        let x = g("{0:2, 1:1}");
        let y = g("{0:1, 1:2}");
        let f = GradedMap::from_matrix(&x, &x, &MatrixQ::from_i64_rows(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 5]])).unwrap();
        let h = GradedMap::from_matrix(&y, &y, &MatrixQ::from_i64_rows(&[&[7, 0, 0], &[0, 1, -1], &[0, 2, 3]])).unwrap();
        let fh = f.tensor(&h);
        assert_eq!(fh.source(), &x.tensor(&y));
        assert_eq!(
            categorical_trace(&fh).unwrap(),
            categorical_trace(&f).unwrap() * categorical_trace(&h).unwrap()
        );
        let f2 = f.compose(&f).unwrap();
        assert_eq!(fh.compose(&fh).unwrap(), f2.tensor(&h.compose(&h).unwrap()));
    }

    #[test]
    fn kernels() {
        let x = GradedObject::even(2);
        let f = GradedMap::from_matrix(&x, &x, &MatrixQ::from_i64_rows(&[&[1, 1], &[1, 1]])).unwrap();
        let (k, b) = f.kernel();
        assert_eq!(k, GradedObject::even(1));
        assert_eq!(b[&0], vec![vec![rat(-1, 1), rat(1, 1)]]);
        assert_eq!(f.ranks()[&0], 1);
    }
}
