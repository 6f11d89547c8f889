use std::collections::HashMap;

use num_traits::{One, Zero};

use super::{GroupAlgebraElement, Permutation};
use crate::exact::{MatrixQ, Rational};
use crate::partition::Partition;

/// An explicit matrix model of the irreducible `Σ_n`-module `V_π`, realised as
/// the left ideal `ℚΣ_n · e_T` of a Young symmetrizer.
#[derive(Clone, Debug)]
pub struct SpechtModule {
    partition: Partition,
    matrices: HashMap<Permutation, MatrixQ>,
}

impl SpechtModule {
    pub fn new(pi: &Partition) -> Self {
        let n = pi.size();
        let e = young_symmetrizer(pi);
        let perms = Permutation::all(n);
        let index: HashMap<&Permutation, usize> = perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
        let vec_of = |x: &GroupAlgebraElement| {
            let mut v = vec![Rational::zero(); perms.len()];
            for (p, c) in x.terms() {
                v[index[p]] = c.clone();
            }
            v
        };
        // greedily collect σ·e until they span the ideal
        let mut basis: Vec<Vec<Rational>> = Vec::new();
        for s in &perms {
            let cand = vec_of(&(&GroupAlgebraElement::basis(s.clone()) * &e));
            let mut trial = basis.clone();
            trial.push(cand.clone());
            if MatrixQ::from_columns(perms.len(), &trial).rank() == trial.len() {
                basis = trial;
            }
        }
        let b = MatrixQ::from_columns(perms.len(), &basis);
        let mut matrices = HashMap::new();
        for s in &perms {
            let act = GroupAlgebraElement::basis(s.clone()).left_regular_matrix();
            let cols: Vec<Vec<Rational>> = basis
                .iter()
                .map(|v| b.solve(&act.mat_vec(v)).expect("left ideal is stable"))
                .collect();
            matrices.insert(s.clone(), MatrixQ::from_columns(basis.len(), &cols));
        }
        Self { partition: pi.clone(), matrices }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn dim(&self) -> usize {
        self.matrices.values().next().map_or(0, MatrixQ::rows)
    }

    pub fn matrix(&self, s: &Permutation) -> &MatrixQ {
        &self.matrices[s]
    }

    /// Character value read off the matrices.
    pub fn trace(&self, s: &Permutation) -> Rational {
        self.matrix(s).trace()
    }
}

/// `(Σ_{r ∈ Row(T)} r)(Σ_{c ∈ Col(T)} sgn(c) c)` for the row-reading tableau of shape π.
pub fn young_symmetrizer(pi: &Partition) -> GroupAlgebraElement {
    let n = pi.size();
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut next = 0;
    for &len in pi.parts() {
        rows.push((next..next + len).collect());
        next += len;
    }
    let cols: Vec<Vec<usize>> = (0..pi.part(0))
        .map(|j| rows.iter().filter(|r| r.len() > j).map(|r| r[j]).collect())
        .collect();
    let preserves = |s: &Permutation, blocks: &[Vec<usize>]| {
        blocks.iter().all(|b| b.iter().all(|&i| b.contains(&s.apply(i))))
    };
    let mut row_sum = GroupAlgebraElement::zero(n);
    let mut col_sum = GroupAlgebraElement::zero(n);
    for s in Permutation::all(n) {
        if preserves(&s, &rows) {
            row_sum.add_term(s.clone(), Rational::one());
        }
        if preserves(&s, &cols) {
            col_sum.add_term(s.clone(), Rational::from_integer(s.sign().into()));
        }
    }
    &row_sum * &col_sum
}
