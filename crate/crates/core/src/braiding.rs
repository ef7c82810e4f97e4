//! Hecke symmetries on `V ⊗ V` and the R-trace.
//!
//! The standard symmetry is the `GL(N)` deformation of the flip:
//!
//! ```text
//! R(x_i ⊗ x_i) = q x_i ⊗ x_i
//! R(x_i ⊗ x_j) = x_j ⊗ x_i                        (i < j)
//! R(x_i ⊗ x_j) = x_j ⊗ x_i + (q - q^-1) x_i ⊗ x_j  (i > j)
//! ```
//!
//! As a matrix acting on column vectors, the entry in row `(a, b)` and column
//! `(i, j)` is the coefficient of `x_a ⊗ x_b` in `R(x_i ⊗ x_j)`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::Error;
use crate::field::Field;
use crate::operator::{index, TensorOperator};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BraidingKind {
    Standard,
    Flip,
}

#[derive(Clone, Debug)]
pub struct Braiding<F> {
    kind: BraidingKind,
    n: usize,
    q: F,
    matrix: TensorOperator<F>,
    inverse: TensorOperator<F>,
}

fn flip_matrix<F: Field>(n: usize) -> TensorOperator<F> {
    let mut e = Vec::new();
    for i in 0..n {
        for j in 0..n {
            e.push((index(n, &[j, i]), index(n, &[i, j]), F::one()));
        }
    }
    TensorOperator::from_entries(n, 2, e)
}

impl<F: Field> Braiding<F> {
    /// The standard Hecke symmetry at the given value of `q`. Both the braid
    /// relation and the Hecke condition are checked before returning.
    pub fn standard_hecke(n: usize, q: F) -> Result<Self, Error> {
        assert!(n >= 1, "dimension must be positive");
        let qi = q
            .inv()
            .ok_or_else(|| Error::InvariantViolation(String::from("q = 0")))?;
        let nu = q.sub(&qi);
        let mut e = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let col = index(n, &[i, j]);
                if i == j {
                    e.push((col, col, q.clone()));
                } else {
                    e.push((index(n, &[j, i]), col, F::one()));
                    if i > j {
                        e.push((col, col, nu.clone()));
                    }
                }
            }
        }
        let matrix = TensorOperator::from_entries(n, 2, e);
        let inverse = matrix.sub(&TensorOperator::scalar(n, 2, nu));
        let b = Braiding {
            kind: BraidingKind::Standard,
            n,
            q,
            matrix,
            inverse,
        };
        b.check_braid()?;
        b.check_hecke()?;
        Ok(b)
    }

    /// The flip `P(x ⊗ y) = y ⊗ x`, a Hecke symmetry with `q = 1`.
    pub fn flip(n: usize) -> Self {
        assert!(n >= 1, "dimension must be positive");
        let matrix = flip_matrix(n);
        Braiding {
            kind: BraidingKind::Flip,
            n,
            q: F::one(),
            inverse: matrix.clone(),
            matrix,
        }
    }

    pub fn kind(&self) -> BraidingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn q(&self) -> &F {
        &self.q
    }

    /// `ν = q - q^-1`.
    pub fn nu(&self) -> F {
        self.q.sub(&self.q.inv().expect("q is invertible"))
    }

    pub fn matrix(&self) -> &TensorOperator<F> {
        &self.matrix
    }

    pub fn inverse(&self) -> &TensorOperator<F> {
        &self.inverse
    }

    pub fn is_involutive(&self) -> bool {
        self.matrix.mul(&self.matrix) == TensorOperator::identity(self.n, 2)
    }

    /// `(R ⊗ I)(I ⊗ R)(R ⊗ I) = (I ⊗ R)(R ⊗ I)(I ⊗ R)` on `V^{⊗3}`.
    pub fn check_braid(&self) -> Result<(), Error> {
        let r1 = self.matrix.embed(0, 3);
        let r2 = self.matrix.embed(1, 3);
        if r1.mul(&r2).mul(&r1) != r2.mul(&r1).mul(&r2) {
            return Err(Error::InvariantViolation(format!(
                "braid relation fails for N = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// `R^2 = I + (q - q^-1) R`, and `R R^-1 = I`.
    pub fn check_hecke(&self) -> Result<(), Error> {
        let id = TensorOperator::identity(self.n, 2);
        let lhs = self.matrix.mul(&self.matrix);
        let rhs = id.add(&self.matrix.scale(&self.nu()));
        if lhs != rhs {
            return Err(Error::InvariantViolation(format!(
                "Hecke condition fails for N = {}",
                self.n
            )));
        }
        if self.matrix.mul(&self.inverse) != id {
            return Err(Error::InvariantViolation(format!(
                "R^-1 is not the inverse for N = {}",
                self.n
            )));
        }
        Ok(())
    }

    /// `R_i` on `V^{⊗k}`: `R` in slots `i, i+1`, identity elsewhere.
    pub fn lift(&self, k: usize, i: usize) -> Result<TensorOperator<F>, Error> {
        if i == 0 || i + 1 > k {
            return Err(Error::PositionOutOfRange { position: i, arity: k });
        }
        Ok(self.matrix.embed(i - 1, k))
    }

    /// `R_i^{-1}` on `V^{⊗k}`.
    pub fn lift_inverse(&self, k: usize, i: usize) -> Result<TensorOperator<F>, Error> {
        if i == 0 || i + 1 > k {
            return Err(Error::PositionOutOfRange { position: i, arity: k });
        }
        Ok(self.inverse.embed(i - 1, k))
    }

    /// The braiding with `R` and `R^-1` exchanged (a Hecke symmetry for
    /// `q^-1`).
    pub fn inverted(&self) -> Braiding<F> {
        Braiding {
            kind: self.kind,
            n: self.n,
            q: self.q.inv().expect("q is invertible"),
            matrix: self.inverse.clone(),
            inverse: self.matrix.clone(),
        }
    }

    /// The weight matrix `C = diag(q^-1, q^-3, …, q^{1-2N})`; the trace
    /// property is checked on every matrix unit before returning.
    pub fn rtrace_form(&self) -> Result<RTraceForm<F>, Error> {
        let c = (0..self.n)
            .map(|i| self.q.pow(-(2 * i as i32 + 1)).expect("q is invertible"))
            .collect();
        let form = RTraceForm { c };
        form.check_trace_property(self)?;
        Ok(form)
    }
}

/// Diagonal weights of the R-trace `Tr_R X = Σ_i C_i X_ii`.
#[derive(Clone, Debug, PartialEq)]
pub struct RTraceForm<F> {
    c: Vec<F>,
}

impl<F: Field> RTraceForm<F> {
    pub fn weights(&self) -> &[F] {
        &self.c
    }

    pub fn operator(&self) -> TensorOperator<F> {
        TensorOperator::diagonal(self.c.len(), 1, &self.c)
    }

    /// `Tr_R X` for an `N × N` operator.
    pub fn trace(&self, x: &TensorOperator<F>) -> F {
        x.full_rtrace(&self.c)
    }

    pub fn rtrace(&self, x: &TensorOperator<F>, space: usize) -> Result<TensorOperator<F>, Error> {
        x.rtrace(space, &self.c)
    }

    /// For every matrix unit `X`: tracing slot 2 of `R X_1 R^-1` and of
    /// `R^-1 X_1 R` gives `(Tr_R X) I`.
    pub fn check_trace_property(&self, r: &Braiding<F>) -> Result<(), Error> {
        let n = r.n();
        for a in 0..n {
            for b in 0..n {
                let x = TensorOperator::from_entries(n, 1, [(a, b, F::one())]);
                let expected = TensorOperator::scalar(n, 1, self.trace(&x));
                let x1 = x.embed(0, 2);
                let over = r.matrix().mul(&x1).mul(r.inverse());
                let under = r.inverse().mul(&x1).mul(r.matrix());
                for (name, copy) in [("over", over), ("under", under)] {
                    if self.rtrace(&copy, 2)? != expected {
                        return Err(Error::TracePropertyViolation(format!(
                            "{name} copy of E_{}{} for N = {n}",
                            a + 1,
                            b + 1
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}
