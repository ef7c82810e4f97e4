//! Sparse Gaussian elimination keyed by an ordered index type.
//!
//! Vectors are `BTreeMap<K, F>` with no stored zeros. An [`Echelon`] keeps a
//! set of rows whose pivots (largest keys) are pairwise distinct; reducing a
//! vector against it eliminates every pivot key, which yields a canonical
//! representative of the vector modulo the span of the rows.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::Bound;

use crate::field::Field;

pub type Vector<K, F> = BTreeMap<K, F>;

/// `v += c * w`, dropping entries that cancel.
pub fn axpy<K: Ord + Clone, F: Field>(v: &mut Vector<K, F>, c: &F, w: &Vector<K, F>) {
    if c.is_zero() {
        return;
    }
    for (k, a) in w {
        let t = c.mul(a);
        match v.get_mut(k) {
            Some(x) => {
                x.add_assign(&t);
                if x.is_zero() {
                    v.remove(k);
                }
            }
            None => {
                v.insert(k.clone(), t);
            }
        }
    }
}

pub fn scale<K: Ord + Clone, F: Field>(v: &Vector<K, F>, c: &F) -> Vector<K, F> {
    if c.is_zero() {
        return Vector::new();
    }
    v.iter().map(|(k, a)| (k.clone(), a.mul(c))).collect()
}

#[derive(Clone, Debug)]
pub struct Echelon<K: Ord + Clone, F: Field> {
    rows: BTreeMap<K, Vector<K, F>>,
}

impl<K: Ord + Clone, F: Field> Default for Echelon<K, F> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Clone, F: Field> Echelon<K, F> {
    pub fn new() -> Self {
        Echelon { rows: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_pivot(&self, k: &K) -> bool {
        self.rows.contains_key(k)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &K> {
        self.rows.keys()
    }

    /// The stored row with the given pivot, normalized to pivot coefficient 1.
    pub fn row(&self, pivot: &K) -> Option<&Vector<K, F>> {
        self.rows.get(pivot)
    }

    pub fn rows(&self) -> impl Iterator<Item = (&K, &Vector<K, F>)> {
        self.rows.iter()
    }

    /// Eliminate every pivot key from `v`.
    pub fn reduce(&self, mut v: Vector<K, F>) -> Vector<K, F> {
        let mut upper: Option<K> = None;
        loop {
            let next = {
                let range = match &upper {
                    None => v.range::<K, _>(..),
                    Some(b) => v.range::<K, _>((Bound::Unbounded, Bound::Excluded(b))),
                };
                range
                    .rev()
                    .map(|(k, _)| k)
                    .find(|k| self.rows.contains_key(*k))
                    .cloned()
            };
            let Some(k) = next else { break };
            let c = v.remove(&k).expect("key present");
            let row = &self.rows[&k];
            for (kk, a) in row.iter().rev().skip(1) {
                let t = c.mul(a);
                match v.get_mut(kk) {
                    Some(x) => {
                        x.sub_assign(&t);
                        if x.is_zero() {
                            v.remove(kk);
                        }
                    }
                    None => {
                        v.insert(kk.clone(), t.neg());
                    }
                }
            }
            upper = Some(k);
        }
        v
    }

    /// Add `v` to the span; returns `true` when the rank grows.
    pub fn insert(&mut self, v: Vector<K, F>) -> bool {
        let v = self.reduce(v);
        let Some((pivot, lead)) = v.iter().next_back() else {
            return false;
        };
        let pivot = pivot.clone();
        let inv = lead.inv().expect("nonzero leading coefficient");
        let row = if inv.is_one() { v } else { scale(&v, &inv) };
        self.rows.insert(pivot, row);
        true
    }

    /// Clear every pivot key from every other row, so each row contains
    /// exactly one pivot.
    pub fn back_substitute(&mut self) {
        let keys: Vec<K> = self.rows.keys().cloned().collect();
        for k in keys {
            let row = self.rows.remove(&k).expect("row present");
            let lead = row.get(&k).cloned().expect("pivot present");
            let mut rest = row;
            rest.remove(&k);
            let mut reduced = self.reduce(rest);
            reduced.insert(k.clone(), lead);
            self.rows.insert(k, reduced);
        }
    }
}

/// Rank of a list of row vectors.
pub fn rank<K: Ord + Clone, F: Field>(rows: impl IntoIterator<Item = Vector<K, F>>) -> usize {
    let mut e = Echelon::new();
    for r in rows {
        e.insert(r);
    }
    e.rank()
}

/// Column key of an augmented system: the constant column sorts below every
/// unknown, so it is never chosen as a pivot of a consistent row.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
enum Column<K> {
    Constant,
    Unknown(K),
}

/// A particular solution of a linear system and whether it is the only one.
#[derive(Clone, Debug, PartialEq)]
pub struct Solution<K: Ord + Clone, F: Field> {
    /// Values of the listed unknowns; free unknowns are set to zero.
    pub values: BTreeMap<K, F>,
    pub unique: bool,
}

/// Solve `Σ_k a_k x_k = b` for each `(a, b)` in `equations`, over the given
/// unknowns. Returns `None` when the system is inconsistent.
pub fn solve<K: Ord + Clone, F: Field>(
    unknowns: &[K],
    equations: impl IntoIterator<Item = (Vector<K, F>, F)>,
) -> Option<Solution<K, F>> {
    let mut e: Echelon<Column<K>, F> = Echelon::new();
    for (a, b) in equations {
        let mut row: Vector<Column<K>, F> = a.into_iter().map(|(k, c)| (Column::Unknown(k), c)).collect();
        if !b.is_zero() {
            row.insert(Column::Constant, b.neg());
        }
        e.insert(row);
    }
    if e.is_pivot(&Column::Constant) {
        return None;
    }
    e.back_substitute();
    let mut values = BTreeMap::new();
    let mut unique = true;
    for k in unknowns {
        match e.row(&Column::Unknown(k.clone())) {
            Some(row) => {
                if row.keys().any(|c| matches!(c, Column::Unknown(o) if o != k)) {
                    unique = false;
                }
                let v = row.get(&Column::Constant).map_or_else(F::zero, F::neg);
                if !v.is_zero() {
                    values.insert(k.clone(), v);
                }
            }
            None => unique = false,
        }
    }
    Some(Solution { values, unique })
}
