//! Exact sparse Gaussian elimination: rank, kernel and linear solve.

use std::collections::BTreeMap;

use indexmap::IndexSet;
use num_traits::{One, Zero};

use super::lincomb::{BasisKey, LinComb};
use super::rational::Rational;

pub type SparseVec = BTreeMap<usize, Rational>;

/// Coordinates at or above this index record which input columns a row combines.
const TAG_BASE: usize = usize::MAX / 2;

/// Row-echelon form built incrementally. Every stored row has leading coordinate 1 at its
/// smallest index, and no two rows share a leading index.
#[derive(Default, Clone, Debug)]
pub struct Echelon {
    rows: BTreeMap<usize, SparseVec>,
}

fn axpy(v: &mut SparseVec, c: &Rational, row: &SparseVec) {
    for (k, x) in row {
        let e = v.entry(*k).or_insert_with(Rational::zero);
        *e -= c * x;
        if e.is_zero() {
            v.remove(k);
        }
    }
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Eliminates every leading coordinate of the stored rows from `v`.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        let mut cursor = 0usize;
        loop {
            let next = v
                .range(cursor..)
                .find(|(k, _)| self.rows.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((k, c)) = next else { break };
            axpy(&mut v, &c, &self.rows[&k]);
            cursor = k + 1;
        }
        v
    }

    /// Adds `v` to the row space. Returns the reduced remainder, which is empty exactly when `v`
    /// was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> SparseVec {
        let v = self.reduce(v);
        if let Some((&lead, c)) = v.iter().next() {
            let inv = Rational::one() / c;
            let row: SparseVec = v.iter().map(|(k, x)| (*k, x * &inv)).collect();
            self.rows.insert(lead, row);
        }
        v
    }
}

pub fn rank(vectors: impl IntoIterator<Item = SparseVec>) -> usize {
    let mut e = Echelon::new();
    for v in vectors {
        e.insert(v);
    }
    e.rank()
}

fn tagged(j: usize, v: &SparseVec) -> SparseVec {
    assert!(
        v.keys().all(|k| *k < TAG_BASE),
        "coordinate index too large"
    );
    let mut w = v.clone();
    w.insert(TAG_BASE + j, Rational::one());
    w
}

fn untag(v: &SparseVec) -> SparseVec {
    v.range(TAG_BASE..)
        .map(|(k, c)| (k - TAG_BASE, c.clone()))
        .collect()
}

/// A basis of `{x : Σ_j x_j columns[j] = 0}`, each vector indexed by column position.
pub fn kernel(columns: &[SparseVec]) -> Vec<SparseVec> {
    let mut e = Echelon::new();
    let mut out = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        let rem = e.reduce(tagged(j, col));
        if rem.keys().next().is_some_and(|k| *k >= TAG_BASE) {
            out.push(untag(&rem));
        } else {
            e.insert(rem);
        }
    }
    out
}

/// Some `x` with `Σ_j x_j columns[j] = target`, or `None` if the system is infeasible.
pub fn solve(columns: &[SparseVec], target: &SparseVec) -> Option<SparseVec> {
    let mut e = Echelon::new();
    for (j, col) in columns.iter().enumerate() {
        let rem = e.reduce(tagged(j, col));
        if rem.keys().next().is_some_and(|k| *k < TAG_BASE) {
            e.insert(rem);
        }
    }
    let rem = e.reduce(target.clone());
    if rem.keys().next().is_some_and(|k| *k < TAG_BASE) {
        return None;
    }
    Some(untag(&rem).into_iter().map(|(k, c)| (k, -c)).collect())
}

/// Assigns consecutive coordinates to basis keys as they are first seen.
#[derive(Clone, Debug)]
pub struct Indexer<B: BasisKey> {
    keys: IndexSet<B>,
}

impl<B: BasisKey> Default for Indexer<B> {
    fn default() -> Self {
        Indexer {
            keys: IndexSet::new(),
        }
    }
}

impl<B: BasisKey> Indexer<B> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_keys(keys: impl IntoIterator<Item = B>) -> Self {
        Indexer {
            keys: keys.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.keys.len()
    }

    pub fn is_empty(&self) -> bool {
        self.keys.is_empty()
    }

    pub fn index(&mut self, b: &B) -> usize {
        match self.keys.get_index_of(b) {
            Some(i) => i,
            None => self.keys.insert_full(b.clone()).0,
        }
    }

    pub fn get(&self, i: usize) -> &B {
        &self.keys[i]
    }

    pub fn vector(&mut self, x: &LinComb<B>) -> SparseVec {
        x.iter().map(|(b, c)| (self.index(b), c.clone())).collect()
    }

    pub fn lincomb(&self, v: &SparseVec) -> LinComb<B> {
        v.iter()
            .map(|(k, c)| (self.keys[*k].clone(), c.clone()))
            .collect()
    }
}

/// Rank of a family of linear combinations.
pub fn rank_of<B: BasisKey>(xs: &[LinComb<B>]) -> usize {
    let mut ix = Indexer::new();
    rank(xs.iter().map(|x| ix.vector(x)))
}

/// Kernel of `x ↦ Σ_j x_j images[j]`, as coefficient vectors over the domain positions.
pub fn kernel_of<B: BasisKey>(images: &[LinComb<B>]) -> Vec<Vec<(usize, Rational)>> {
    let mut ix = Indexer::new();
    let cols: Vec<SparseVec> = images.iter().map(|x| ix.vector(x)).collect();
    kernel(&cols)
        .into_iter()
        .map(|v| v.into_iter().collect())
        .collect()
}

/// Coefficients expressing `target` through `images`, if possible.
pub fn solve_in<B: BasisKey>(images: &[LinComb<B>], target: &LinComb<B>) -> Option<SparseVec> {
    let mut ix = Indexer::new();
    let cols: Vec<SparseVec> = images.iter().map(|x| ix.vector(x)).collect();
    let t = ix.vector(target);
    solve(&cols, &t)
}
