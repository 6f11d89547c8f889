use std::collections::{BTreeSet, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::error::{check_bound, Error, Result};
use crate::partition::{partitions_of, Partition};

/// Largest `n` for which [`character_table`] builds a full table.
pub const DEFAULT_TABLE_BOUND: usize = 8;

/// Irreducible character value `χ_π(μ)` by the Murnaghan–Nakayama rule.
pub fn character(pi: &Partition, mu: &Partition) -> Result<i64> {
    if pi.size() != mu.size() {
        return Err(Error::SizeMismatch(format!(
            "|{pi}| = {} but |{mu}| = {}",
            pi.size(),
            mu.size()
        )));
    }
    Ok(mn(pi, mu.parts()))
}

type Memo = Mutex<HashMap<(Partition, Vec<usize>), i64>>;

fn memo() -> &'static Memo {
    static MEMO: OnceLock<Memo> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

fn mn(pi: &Partition, mu: &[usize]) -> i64 {
    let Some((&k, rest)) = mu.split_first() else {
        return 1;
    };
    let key = (pi.clone(), mu.to_vec());
    if let Some(&v) = memo().lock().unwrap().get(&key) {
        return v;
    }
    // beta-set of π: distinct first-column hook lengths
    let l = pi.len();
    let beta: BTreeSet<usize> = (0..l).map(|i| pi.part(i) + (l - 1 - i)).collect();
    let mut total = 0;
    for &b in &beta {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        // removing a rim hook of length k = sliding bead b down to b - k
        let height = beta.range(b - k + 1..b).count();
        let mut nb = beta.clone();
        nb.remove(&b);
        nb.insert(b - k);
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn(&from_beta(&nb), rest);
    }
    memo().lock().unwrap().insert(key, total);
    total
}

fn from_beta(beta: &BTreeSet<usize>) -> Partition {
    let parts = beta.iter().rev().enumerate().map(|(i, &b)| b + i + 1 - beta.len()).collect();
    Partition::from_unsorted(parts)
}

/// Full character table of `Σ_n`, rows (irreducibles) and columns (cycle types)
/// both in reverse-lexicographic order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterTable {
    n: usize,
    partitions: Vec<Partition>,
    values: Vec<Vec<i64>>,
    class_sizes: Vec<BigInt>,
}

impl CharacterTable {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn partitions(&self) -> &[Partition] {
        &self.partitions
    }

    pub fn index(&self, p: &Partition) -> Option<usize> {
        self.partitions.iter().position(|q| q == p)
    }

    /// `χ_π(μ)`; panics when either label is not a partition of `n`.
    pub fn value(&self, pi: &Partition, mu: &Partition) -> i64 {
        let i = self.index(pi).expect("irreducible label of the wrong size");
        let j = self.index(mu).expect("cycle type of the wrong size");
        self.values[i][j]
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.values[i]
    }

    /// `|C_μ| = n!/z_μ`, aligned with [`Self::partitions`].
    pub fn class_sizes(&self) -> &[BigInt] {
        &self.class_sizes
    }

    /// `χ_π(1)`.
    pub fn degree(&self, pi: &Partition) -> i64 {
        self.value(pi, &Partition::column(self.n))
    }
}

/// Memoised character table of `Σ_n`, bounded by [`DEFAULT_TABLE_BOUND`].
pub fn character_table(n: usize) -> Result<Arc<CharacterTable>> {
    character_table_bounded(n, DEFAULT_TABLE_BOUND)
}

pub fn character_table_bounded(n: usize, bound: usize) -> Result<Arc<CharacterTable>> {
    check_bound("symmetric group degree", n, bound)?;
    static TABLES: OnceLock<Mutex<HashMap<usize, Arc<CharacterTable>>>> = OnceLock::new();
    let tables = TABLES.get_or_init(Default::default);
    if let Some(t) = tables.lock().unwrap().get(&n) {
        return Ok(Arc::clone(t));
    }
    let partitions = partitions_of(n);
    let values = partitions
        .iter()
        .map(|pi| partitions.iter().map(|mu| mn(pi, mu.parts())).collect())
        .collect();
    let fact: BigInt = (1..=n).map(BigInt::from).product();
    let class_sizes = partitions.iter().map(|mu| &fact / mu.z()).collect();
    let table = Arc::new(CharacterTable { n, partitions, values, class_sizes });
    tables.lock().unwrap().insert(n, Arc::clone(&table));
    Ok(table)
}
