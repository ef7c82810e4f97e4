//! Linear operators on `V^{⊗k}` stored as sparse rows.
//!
//! Basis vectors of `V^{⊗k}` are multi-indices `(i_1, …, i_k)` with
//! `0 <= i_s < N`, ordered lexicographically with the first slot most
//! significant; `index` and `digits` convert between the two forms.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write as _;

use crate::error::Error;
use crate::field::Field;
use crate::linalg::{Echelon, Vector};

#[derive(Clone, Debug, PartialEq)]
pub struct TensorOperator<F> {
    n: usize,
    k: usize,
    /// Row `r` holds `(column, value)` pairs sorted by column, no zeros.
    rows: Vec<Vec<(usize, F)>>,
}

/// `N^k`.
pub fn power(n: usize, k: usize) -> usize {
    n.pow(k as u32)
}

/// Digits of a flat index, most significant slot first.
pub fn digits(n: usize, k: usize, mut idx: usize) -> Vec<usize> {
    let mut d = vec![0; k];
    for s in (0..k).rev() {
        d[s] = idx % n;
        idx /= n;
    }
    d
}

pub fn index(n: usize, digits: &[usize]) -> usize {
    digits.iter().fold(0, |acc, &d| acc * n + d)
}

fn push_entry<F: Field>(row: &mut Vec<(usize, F)>, c: usize, v: F) {
    if !v.is_zero() {
        row.push((c, v));
    }
}

fn normalize_row<F: Field>(acc: Vector<usize, F>) -> Vec<(usize, F)> {
    acc.into_iter().filter(|(_, v)| !v.is_zero()).collect()
}

impl<F: Field> TensorOperator<F> {
    pub fn zero(n: usize, k: usize) -> Self {
        TensorOperator {
            n,
            k,
            rows: vec![Vec::new(); power(n, k)],
        }
    }

    pub fn identity(n: usize, k: usize) -> Self {
        Self::scalar(n, k, F::one())
    }

    pub fn scalar(n: usize, k: usize, c: F) -> Self {
        let dim = power(n, k);
        let rows = (0..dim)
            .map(|r| if c.is_zero() { Vec::new() } else { vec![(r, c.clone())] })
            .collect();
        TensorOperator { n, k, rows }
    }

    /// Build from `(row, column, value)` triples; repeated positions add up.
    pub fn from_entries(n: usize, k: usize, entries: impl IntoIterator<Item = (usize, usize, F)>) -> Self {
        let dim = power(n, k);
        let mut acc: Vec<Vector<usize, F>> = vec![Vector::new(); dim];
        for (r, c, v) in entries {
            assert!(r < dim && c < dim, "entry out of range");
            let e = acc[r].entry(c).or_insert_with(F::zero);
            e.add_assign(&v);
        }
        TensorOperator {
            n,
            k,
            rows: acc.into_iter().map(normalize_row).collect(),
        }
    }

    /// Diagonal operator with the given diagonal.
    pub fn diagonal(n: usize, k: usize, diag: &[F]) -> Self {
        assert_eq!(diag.len(), power(n, k));
        Self::from_entries(n, k, diag.iter().enumerate().map(|(i, v)| (i, i, v.clone())))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arity(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn row(&self, r: usize) -> &[(usize, F)] {
        &self.rows[r]
    }

    pub fn entry(&self, r: usize, c: usize) -> F {
        match self.rows[r].binary_search_by_key(&c, |(cc, _)| *cc) {
            Ok(p) => self.rows[r][p].1.clone(),
            Err(_) => F::zero(),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &F)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(c, v)| (r, *c, v)))
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(Vec::is_empty)
    }

    fn check_shape(&self, o: &Self) {
        assert!(self.n == o.n && self.k == o.k, "operator shape mismatch");
    }

    fn combine(&self, o: &Self, sign: bool) -> Self {
        self.check_shape(o);
        let rows = self
            .rows
            .iter()
            .zip(&o.rows)
            .map(|(a, b)| {
                let mut out = Vec::with_capacity(a.len() + b.len());
                let (mut i, mut j) = (0, 0);
                while i < a.len() || j < b.len() {
                    let ca = a.get(i).map(|e| e.0);
                    let cb = b.get(j).map(|e| e.0);
                    match (ca, cb) {
                        (Some(x), Some(y)) if x == y => {
                            let v = if sign { a[i].1.sub(&b[j].1) } else { a[i].1.add(&b[j].1) };
                            push_entry(&mut out, x, v);
                            i += 1;
                            j += 1;
                        }
                        (Some(x), Some(y)) if x < y => {
                            out.push(a[i].clone());
                            i += 1;
                        }
                        (Some(x), None) => {
                            out.push((x, a[i].1.clone()));
                            i += 1;
                        }
                        (_, Some(y)) => {
                            let v = if sign { b[j].1.neg() } else { b[j].1.clone() };
                            out.push((y, v));
                            j += 1;
                        }
                        (None, None) => unreachable!(),
                    }
                }
                out
            })
            .collect();
        TensorOperator {
            n: self.n,
            k: self.k,
            rows,
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        self.combine(o, false)
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.combine(o, true)
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n, self.k);
        }
        TensorOperator {
            n: self.n,
            k: self.k,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(j, v)| (*j, v.mul(c))).collect())
                .collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.scale(&F::one().neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_shape(o);
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc: Vector<usize, F> = Vector::new();
                for (j, a) in row {
                    for (c, b) in &o.rows[*j] {
                        acc.entry(*c).or_insert_with(F::zero).add_mul(a, b);
                    }
                }
                normalize_row(acc)
            })
            .collect();
        TensorOperator {
            n: self.n,
            k: self.k,
            rows,
        }
    }

    /// `self ⊗ o`, with the slots of `self` first.
    pub fn kron(&self, o: &Self) -> Self {
        assert_eq!(self.n, o.n);
        let od = o.dim();
        let mut rows = Vec::with_capacity(self.dim() * od);
        for ra in &self.rows {
            for rb in &o.rows {
                let mut out = Vec::with_capacity(ra.len() * rb.len());
                for (ca, a) in ra {
                    for (cb, b) in rb {
                        push_entry(&mut out, ca * od + cb, a.mul(b));
                    }
                }
                rows.push(out);
            }
        }
        TensorOperator {
            n: self.n,
            k: self.k + o.k,
            rows,
        }
    }

    /// Place `self` in slots `offset+1 ..= offset+arity` of `V^{⊗total}`.
    pub fn embed(&self, offset: usize, total: usize) -> Self {
        assert!(offset + self.k <= total);
        let left = Self::identity(self.n, offset);
        let right = Self::identity(self.n, total - offset - self.k);
        left.kron(self).kron(&right)
    }

    pub fn transpose(&self) -> Self {
        Self::from_entries(self.n, self.k, self.entries().map(|(r, c, v)| (c, r, v.clone())))
    }

    pub fn trace(&self) -> F {
        let mut acc = F::zero();
        for r in 0..self.dim() {
            acc.add_assign(&self.entry(r, r));
        }
        acc
    }

    /// Partial trace over slot `space` (1-based) weighted by the diagonal `c`.
    pub fn rtrace(&self, space: usize, c: &[F]) -> Result<Self, Error> {
        if space == 0 || space > self.k {
            return Err(Error::PositionOutOfRange {
                position: space,
                arity: self.k,
            });
        }
        assert_eq!(c.len(), self.n);
        let n = self.n;
        let k = self.k;
        let s = space - 1;
        let drop = |d: &[usize]| {
            let mut e = d.to_vec();
            e.remove(s);
            index(n, &e)
        };
        let mut entries = Vec::new();
        for (r, row) in self.rows.iter().enumerate() {
            let dr = digits(n, k, r);
            let a = dr[s];
            for (col, v) in row {
                let dc = digits(n, k, *col);
                if dc[s] == a {
                    entries.push((drop(&dr), drop(&dc), c[a].mul(v)));
                }
            }
        }
        Ok(Self::from_entries(n, k - 1, entries))
    }

    /// Weighted trace over all slots.
    pub fn full_rtrace(&self, c: &[F]) -> F {
        let mut acc = F::zero();
        for r in 0..self.dim() {
            let v = self.entry(r, r);
            if v.is_zero() {
                continue;
            }
            let w = digits(self.n, self.k, r).iter().fold(F::one(), |p, &d| p.mul(&c[d]));
            acc.add_mul(&w, &v);
        }
        acc
    }

    pub fn rank(&self) -> usize {
        let mut e: Echelon<usize, F> = Echelon::new();
        for row in &self.rows {
            e.insert(row.iter().cloned().collect());
        }
        e.rank()
    }

    /// Inverse by Gauss–Jordan elimination, `None` if singular.
    pub fn inverse(&self) -> Option<Self> {
        let d = self.dim();
        // augmented rows: columns 0..d hold the operator, d..2d the identity;
        // keys are reversed so that pivots are taken on the operator block.
        let mut e: Echelon<usize, F> = Echelon::new();
        for (r, row) in self.rows.iter().enumerate() {
            let mut v: Vector<usize, F> = row.iter().map(|(c, x)| (2 * d - 1 - c, x.clone())).collect();
            v.insert(d - 1 - r, F::one());
            e.insert(v);
        }
        if e.rank() < d || e.pivots().any(|p| *p < d) {
            return None;
        }
        e.back_substitute();
        let mut entries = Vec::new();
        for (p, row) in e.rows() {
            let r = 2 * d - 1 - p;
            for (key, v) in row {
                if *key < d {
                    entries.push((r, d - 1 - key, v.clone()));
                }
            }
        }
        Some(Self::from_entries(self.n, self.k, entries))
    }

    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> TensorOperator<G> {
        TensorOperator::from_entries(self.n, self.k, self.entries().map(|(r, c, v)| (r, c, f(v))))
    }

    pub fn try_map<G: Field, E>(&self, f: impl Fn(&F) -> Result<G, E>) -> Result<TensorOperator<G>, E> {
        let mut entries = Vec::with_capacity(self.nnz());
        for (r, c, v) in self.entries() {
            entries.push((r, c, f(v)?));
        }
        Ok(TensorOperator::from_entries(self.n, self.k, entries))
    }

    /// Sparse triplet text: a header line `N k nnz` followed by one
    /// `row col value` line per nonzero entry (0-based flat indices).
    pub fn to_triplets(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {} {}", self.n, self.k, self.nnz());
        for (r, c, v) in self.entries() {
            let _ = writeln!(s, "{r} {c} {v}");
        }
        s
    }
}
