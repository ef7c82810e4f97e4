//! The R-matrix representation of the Hecke algebra on `V^{⊗k}`:
//! Jucys–Murphy operators, skew-symmetrizers and primitive idempotents
//! labelled by standard tableaux.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::braiding::Braiding;
use crate::error::Error;
use crate::field::Field;
use crate::operator::TensorOperator;
use crate::scalar::qint_in;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// Drops trailing zeros; panics if the parts are not weakly decreasing.
    pub fn new(mut parts: Vec<usize>) -> Self {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        assert!(
            parts.windows(2).all(|w| w[0] >= w[1]),
            "parts must be weakly decreasing"
        );
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The parts padded with zeros to length `n`.
    pub fn padded(&self, n: usize) -> Vec<usize> {
        let mut p = self.0.clone();
        p.resize(n.max(p.len()), 0);
        p
    }

    /// Contents `column - row` of all boxes, row by row.
    pub fn contents(&self) -> Vec<i32> {
        let mut c = Vec::new();
        for (r, &len) in self.0.iter().enumerate() {
            for col in 0..len {
                c.push(col as i32 - r as i32);
            }
        }
        c
    }

    /// All partitions of `k` in reverse lexicographic order, e.g.
    /// `(3), (2,1), (1,1,1)`.
    pub fn all(k: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(k, k, &mut Vec::new(), &mut out);
        out
    }

    /// Dimension of the irreducible `GL(N)` module with this highest weight,
    /// by the Weyl dimension formula.
    pub fn weyl_dimension(&self, n: usize) -> u64 {
        if self.len() > n {
            return 0;
        }
        let l = self.padded(n);
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for i in 0..n {
            for j in i + 1..n {
                num *= (l[i] + j - l[j] - i) as u128;
                den *= (j - i) as u128;
            }
        }
        (num / den) as u64
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

/// A standard Young tableau; `rows[r][c]` is the entry (1-based) in row `r`,
/// column `c`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardTableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn weight(&self) -> usize {
        self.shape.weight()
    }

    /// `(row, column)` of entry `i`, 0-based.
    pub fn position(&self, i: usize) -> (usize, usize) {
        for (r, row) in self.rows.iter().enumerate() {
            if let Some(c) = row.iter().position(|&e| e == i) {
                return (r, c);
            }
        }
        panic!("entry {i} not in tableau");
    }

    /// Content `column - row` of the box holding `i`.
    pub fn content(&self, i: usize) -> i32 {
        let (r, c) = self.position(i);
        c as i32 - r as i32
    }

    /// Shape of the subtableau holding the entries `1..=i`.
    pub fn sub_shape(&self, i: usize) -> Vec<usize> {
        self.rows
            .iter()
            .map(|row| row.iter().filter(|&&e| e <= i).count())
            .filter(|&l| l > 0)
            .collect()
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                f.write_str("/")?;
            }
            for e in row {
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// Contents of the boxes that may be added to a diagram with the given
/// row lengths.
pub fn addable_contents(shape: &[usize]) -> Vec<i32> {
    let mut out = Vec::new();
    for r in 0..=shape.len() {
        let len = shape.get(r).copied().unwrap_or(0);
        let above = if r == 0 { usize::MAX } else { shape[r - 1] };
        if len < above {
            out.push(len as i32 - r as i32);
        }
    }
    out
}

/// All standard tableaux of shape `λ` in last-letter order: tableaux are
/// sorted by the row of the largest entry, then by the row of the next
/// largest, and so on (rows compared top to bottom).
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn go(shape: &[usize]) -> Vec<Vec<Vec<usize>>> {
        let k: usize = shape.iter().sum();
        if k == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for r in 0..shape.len() {
            let removable = shape[r] > 0 && (r + 1 == shape.len() || shape[r + 1] < shape[r]);
            if !removable {
                continue;
            }
            let mut smaller = shape.to_vec();
            smaller[r] -= 1;
            while smaller.last() == Some(&0) {
                smaller.pop();
            }
            for mut t in go(&smaller) {
                t.resize(shape.len(), Vec::new());
                t[r].push(k);
                out.push(t);
            }
        }
        out
    }
    go(shape.parts())
        .into_iter()
        .map(|rows| StandardTableau {
            shape: shape.clone(),
            rows,
        })
        .collect()
}

/// `J_1 = I`, `J_i = R_{i-1} J_{i-1} R_{i-1}` on `V^{⊗k}`.
pub fn jucys_murphy<F: Field>(r: &Braiding<F>, k: usize) -> Vec<TensorOperator<F>> {
    let n = r.n();
    let mut out = vec![TensorOperator::identity(n, k)];
    for i in 2..=k {
        let ri = r.lift(k, i - 1).expect("valid position");
        let next = ri.mul(&out[i - 2]).mul(&ri);
        out.push(next);
    }
    out
}

/// Inverses `J_i^{-1} = R_{i-1}^{-1} J_{i-1}^{-1} R_{i-1}^{-1}`.
pub fn jucys_murphy_inverse<F: Field>(r: &Braiding<F>, k: usize) -> Vec<TensorOperator<F>> {
    let n = r.n();
    let mut out = vec![TensorOperator::identity(n, k)];
    for i in 2..=k {
        let ri = r.lift_inverse(k, i - 1).expect("valid position");
        let next = ri.mul(&out[i - 2]).mul(&ri);
        out.push(next);
    }
    out
}

/// `A^(k)` from `A^(1) = I`,
/// `A^(k) = A^(k-1) (q^{k-1} I - (k-1)_q R_{k-1}) A^(k-1) / k_q`.
pub fn skew_symmetrizer<F: Field>(r: &Braiding<F>, k: usize) -> TensorOperator<F> {
    assert!(k >= 1);
    let n = r.n();
    let q = r.q();
    let mut a = TensorOperator::identity(n, 1);
    for j in 2..=k {
        let prev = a.embed(0, j);
        let rj = r.lift(j, j - 1).expect("valid position");
        let qpow = q.pow(j as i32 - 1).expect("q is invertible");
        let mid = TensorOperator::scalar(n, j, qpow).sub(&rj.scale(&qint_in(j as u32 - 1, q)));
        let kq = qint_in(j as u32, q).inv().expect("k_q is nonzero");
        a = prev.mul(&mid).mul(&prev).scale(&kq);
    }
    a
}

/// The primitive idempotent `P_T(R)` of a standard tableau, as the joint
/// spectral projector of the Jucys–Murphy operators onto the eigenvalues
/// `J_i = q^{2 c_T(i)}`. Shapes with more than `N` rows give zero.
pub fn young_idempotent<F: Field>(r: &Braiding<F>, t: &StandardTableau) -> Result<TensorOperator<F>, Error> {
    let jm = jucys_murphy(r, t.weight());
    young_idempotent_with(r, t, &jm)
}

/// As [`young_idempotent`], reusing precomputed Jucys–Murphy operators.
pub fn young_idempotent_with<F: Field>(
    r: &Braiding<F>,
    t: &StandardTableau,
    jm: &[TensorOperator<F>],
) -> Result<TensorOperator<F>, Error> {
    let k = t.weight();
    let n = r.n();
    assert_eq!(jm.len(), k);
    if t.shape().len() > n {
        return Ok(TensorOperator::zero(n, k));
    }
    let q2 = r.q().mul(r.q());
    let eig = |c: i32| q2.pow(c).expect("q is invertible");
    let mut p = TensorOperator::identity(n, k);
    for i in 2..=k {
        let c = t.content(i);
        for c2 in addable_contents(&t.sub_shape(i - 1)) {
            if c2 == c {
                continue;
            }
            let denom = eig(c).sub(&eig(c2));
            let inv = denom
                .inv()
                .ok_or_else(|| Error::IdempotencyFailure(format!("{t}: coinciding eigenvalues")))?;
            let factor = jm[i - 1].sub(&TensorOperator::scalar(n, k, eig(c2))).scale(&inv);
            p = p.mul(&factor);
        }
    }
    if p.mul(&p) != p {
        return Err(Error::IdempotencyFailure(format!("{t}")));
    }
    Ok(p)
}

/// `Σ_boxes q^{-2 c}`, which depends only on the shape.
pub fn content_sum_power<F: Field>(shape: &Partition, q: &F) -> F {
    let q2 = q.mul(q);
    let mut acc = F::zero();
    for c in shape.contents() {
        acc.add_assign(&q2.pow(-c).expect("q is invertible"));
    }
    acc
}

/// Every `(tableau, P_T(R))` pair for all partitions of `k` with at most `N`
/// rows.
pub fn idempotent_family<F: Field>(
    r: &Braiding<F>,
    k: usize,
) -> Result<Vec<(StandardTableau, TensorOperator<F>)>, Error> {
    let jm = jucys_murphy(r, k);
    let mut out = Vec::new();
    for lambda in Partition::all(k) {
        if lambda.len() > r.n() {
            continue;
        }
        for t in standard_tableaux(&lambda) {
            let p = young_idempotent_with(r, &t, &jm)?;
            out.push((t, p));
        }
    }
    Ok(out)
}

/// A short label such as `"(2,1) 12/3"`.
pub fn tableau_label(t: &StandardTableau) -> String {
    format!("{} {}", t.shape(), t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rat;
    use crate::scalar::{qint, Param, Scalar};

    fn q() -> Scalar {
        Scalar::q()
    }

    fn std(n: usize) -> Braiding<Scalar> {
        Braiding::standard_hecke(n, q()).unwrap()
    }

    fn hook_count(lambda: &Partition) -> usize {
        let p = lambda.parts();
        let k = lambda.weight();
        let mut hooks = 1usize;
        for (r, &len) in p.iter().enumerate() {
            for c in 0..len {
                let arm = len - c - 1;
                let leg = p[r + 1..].iter().filter(|&&l| l > c).count();
                hooks *= arm + leg + 1;
            }
        }
        (1..=k).product::<usize>() / hooks
    }

    #[test]
    fn tableau_counts_match_hook_formula() {
        for k in 1..=5 {
            for lambda in Partition::all(k) {
                assert_eq!(standard_tableaux(&lambda).len(), hook_count(&lambda), "{lambda}");
            }
        }
        let col = standard_tableaux(&Partition::new(vec![1, 1, 1]));
        assert_eq!(col.len(), 1);
        assert_eq!((1..=3).map(|i| col[0].content(i)).collect::<Vec<_>>(), vec![0, -1, -2]);
    }

    #[test]
    fn second_jucys_murphy_operator() {
        let r = std(2);
        let jm = jucys_murphy(&r, 2);
        assert_eq!(jm[0], TensorOperator::identity(2, 2));
        let expected = TensorOperator::identity(2, 2).add(&r.matrix().scale(&r.nu()));
        assert_eq!(jm[1], expected);
        let jm3 = jucys_murphy(&r, 3);
        assert_eq!(jm3[1].mul(&jm3[2]), jm3[2].mul(&jm3[1]));
        let inv = jucys_murphy_inverse(&r, 3);
        for (a, b) in jm3.iter().zip(&inv) {
            assert_eq!(a.mul(b), TensorOperator::identity(2, 3));
        }
    }

    #[test]
    fn skew_symmetrizer_low_orders() {
        let r = std(2);
        assert_eq!(skew_symmetrizer(&r, 1), TensorOperator::identity(2, 1));
        let a2 = skew_symmetrizer(&r, 2);
        let expected = TensorOperator::scalar(2, 2, q())
            .sub(r.matrix())
            .scale(&qint(2, Param::Q).inv().unwrap());
        assert_eq!(a2, expected);
        assert!(skew_symmetrizer(&r, 3).is_zero());
    }

    #[test]
    fn two_box_idempotents() {
        let r = std(2);
        let q2 = qint(2, Param::Q).inv().unwrap();
        let col = &standard_tableaux(&Partition::new(vec![1, 1]))[0];
        let row = &standard_tableaux(&Partition::new(vec![2]))[0];
        assert_eq!(young_idempotent(&r, col).unwrap(), skew_symmetrizer(&r, 2));
        let sym = TensorOperator::scalar(2, 2, q().inv().unwrap())
            .add(r.matrix())
            .scale(&q2);
        assert_eq!(young_idempotent(&r, row).unwrap(), sym);
    }

    #[test]
    fn column_idempotent_is_skew_symmetrizer() {
        for n in 2..=3 {
            let r = std(n);
            for k in 1..=3 {
                let t = &standard_tableaux(&Partition::new(vec![1; k]))[0];
                assert_eq!(young_idempotent(&r, t).unwrap(), skew_symmetrizer(&r, k), "N={n} k={k}");
            }
        }
    }

    #[test]
    fn content_sums() {
        let qi2 = q().pow(-2).unwrap();
        assert_eq!(content_sum_power(&Partition::new(vec![1]), &q()), Scalar::one());
        assert_eq!(
            content_sum_power(&Partition::new(vec![2]), &q()),
            Scalar::one().add(&qi2)
        );
        assert_eq!(
            content_sum_power(&Partition::new(vec![1, 1]), &q()),
            Scalar::one().add(&q().pow(2).unwrap())
        );
    }

    #[test]
    fn weyl_dimensions() {
        assert_eq!(Partition::new(vec![1]).weyl_dimension(3), 3);
        assert_eq!(Partition::new(vec![2, 1]).weyl_dimension(3), 8);
        assert_eq!(Partition::new(vec![1, 1, 1]).weyl_dimension(2), 0);
        assert_eq!(Partition::new(vec![3]).weyl_dimension(2), 4);
    }

    #[test]
    fn projector_ranks_at_classical_point() {
        let one = Rat::from_i64(1);
        for n in 2..=3 {
            let r = std(n);
            for (t, p) in idempotent_family(&r, 3).unwrap() {
                let p1 = p.try_map(|s| s.evaluate(&one)).unwrap();
                assert_eq!(p1.rank() as u64, t.shape().weyl_dimension(n), "{}", tableau_label(&t));
            }
        }
    }
}
