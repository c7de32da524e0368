//! Dense square matrices over [`RatFunc`].

use alloc::vec::Vec;
use core::fmt;

use crate::arith::{ArithError, Monomial, RatFunc, Sym};
use crate::free::HomTarget;

/// A `dim x dim` matrix, row-major.
///
/// Tensor products use the Kronecker layout: for `A ⊗ B` the row index is
/// `i_A * dim(B) + i_B`, so the leftmost factor is the slowest-varying leg.
#[derive(Clone, PartialEq, Eq)]
pub struct OperatorMatrix {
    dim: usize,
    entries: Vec<RatFunc>,
}

/// A located disagreement between two matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EntryMismatch {
    pub row: usize,
    pub col: usize,
    pub left: RatFunc,
    pub right: RatFunc,
}

impl OperatorMatrix {
    pub fn zero(dim: usize) -> Self {
        OperatorMatrix { dim, entries: alloc::vec![RatFunc::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::scalar(dim, RatFunc::one())
    }

    pub fn scalar(dim: usize, c: RatFunc) -> Self {
        let mut m = Self::zero(dim);
        if !c.is_zero() {
            for i in 0..dim {
                m.entries[i * dim + i] = c.clone();
            }
        }
        m
    }

    pub fn diagonal(d: Vec<RatFunc>) -> Self {
        let mut m = Self::zero(d.len());
        for (i, c) in d.into_iter().enumerate() {
            m.set(i, i, c);
        }
        m
    }

    pub fn from_fn(dim: usize, f: impl Fn(usize, usize) -> RatFunc) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        OperatorMatrix { dim, entries }
    }

    /// Panics unless the rows form a square array.
    pub fn from_rows(rows: Vec<Vec<RatFunc>>) -> Self {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for r in rows {
            assert_eq!(r.len(), dim, "matrix must be square");
            entries.extend(r);
        }
        OperatorMatrix { dim, entries }
    }

    /// The matrix unit `E_{ij}`.
    pub fn unit(dim: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(dim);
        m.set(i, j, RatFunc::one());
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &RatFunc {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, c: RatFunc) {
        self.entries[i * self.dim + j] = c;
    }

    pub fn entries(&self) -> &[RatFunc] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RatFunc::is_zero)
    }

    /// `Some(c)` if the matrix is `c` times the identity.
    pub fn as_scalar(&self) -> Option<RatFunc> {
        let c = if self.dim == 0 { RatFunc::zero() } else { self.get(0, 0).clone() };
        for i in 0..self.dim {
            for j in 0..self.dim {
                let e = self.get(i, j);
                let ok = if i == j { e.eq_cross(&c) } else { e.is_zero() };
                if !ok {
                    return None;
                }
            }
        }
        Some(c)
    }

    pub fn trace(&self) -> RatFunc {
        let diag: Vec<&RatFunc> = (0..self.dim).map(|i| self.get(i, i)).collect();
        RatFunc::sum(diag)
    }

    pub fn map(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        OperatorMatrix { dim: self.dim, entries: self.entries.iter().map(f).collect() }
    }

    pub fn try_map(
        &self,
        f: impl Fn(&RatFunc) -> Result<RatFunc, ArithError>,
    ) -> Result<Self, ArithError> {
        let entries = self.entries.iter().map(f).collect::<Result<Vec<_>, _>>()?;
        Ok(OperatorMatrix { dim: self.dim, entries })
    }

    pub fn map_monomials(&self, images: &[(Sym, Monomial)]) -> Result<Self, ArithError> {
        self.try_map(|c| c.map_monomials(images))
    }

    pub fn substitute(&self, bindings: &[(Sym, RatFunc)]) -> Result<Self, ArithError> {
        self.try_map(|c| c.substitute(bindings))
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        OperatorMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        OperatorMatrix {
            dim: self.dim,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn neg(&self) -> Self {
        self.map(|c| -c)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero(self.dim);
        }
        self.map(|x| x * c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let n = self.dim;
        let mut out = Vec::with_capacity(n * n);
        let mut acc: Vec<RatFunc> = Vec::with_capacity(n);
        for i in 0..n {
            for j in 0..n {
                acc.clear();
                for k in 0..n {
                    let a = &self.entries[i * n + k];
                    if a.is_zero() {
                        continue;
                    }
                    let b = &other.entries[k * n + j];
                    if b.is_zero() {
                        continue;
                    }
                    acc.push(a * b);
                }
                out.push(RatFunc::sum(acc.iter()));
            }
        }
        OperatorMatrix { dim: n, entries: out }
    }

    /// Kronecker product `self ⊗ other`.
    pub fn kron(&self, other: &Self) -> Self {
        let (n, m) = (self.dim, other.dim);
        let d = n * m;
        let mut out = Self::zero(d);
        for i1 in 0..n {
            for j1 in 0..n {
                let a = self.get(i1, j1);
                if a.is_zero() {
                    continue;
                }
                for i2 in 0..m {
                    for j2 in 0..m {
                        let b = other.get(i2, j2);
                        if !b.is_zero() {
                            out.set(i1 * m + i2, j1 * m + j2, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::identity(self.dim);
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    /// `[a, b]_s = s ab - s^{-1} ba`.
    pub fn q_commutator(a: &Self, b: &Self, s: &RatFunc) -> Self {
        let si = s.inv().expect("nonzero q-commutator parameter");
        a.mul(b).scale(s).sub(&b.mul(a).scale(&si))
    }

    /// The permutation matrix with `P e_j = e_{perm[j]}`.
    pub fn permutation(perm: &[usize]) -> Self {
        let mut m = Self::zero(perm.len());
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, RatFunc::one());
        }
        m
    }

    /// The flip `x ⊗ y -> y ⊗ x` on `C^a ⊗ C^b`.
    pub fn swap(a: usize, b: usize) -> Self {
        let perm: Vec<usize> = (0..a * b).map(|j| (j % b) * a + j / b).collect();
        Self::permutation(&perm)
    }

    /// First entry (row-major) where the two matrices differ.
    pub fn first_difference(&self, other: &Self) -> Option<EntryMismatch> {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        for i in 0..self.dim {
            for j in 0..self.dim {
                let (a, b) = (self.get(i, j), other.get(i, j));
                if !a.eq_cross(b) {
                    return Some(EntryMismatch { row: i, col: j, left: a.clone(), right: b.clone() });
                }
            }
        }
        None
    }

    /// Largest number of numerator terms over all entries.
    pub fn max_terms(&self) -> usize {
        self.entries.iter().map(|e| e.num().len()).max().unwrap_or(0)
    }
}

impl HomTarget for OperatorMatrix {
    fn hom_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn hom_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn hom_scale(&self, c: &RatFunc) -> Self {
        self.scale(c)
    }
}

impl fmt::Debug for OperatorMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "[{}x{}]", self.dim, self.dim)?;
        for i in 0..self.dim {
            f.write_str("  ")?;
            for j in 0..self.dim {
                if j > 0 {
                    f.write_str(" | ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sigma3() -> OperatorMatrix {
        OperatorMatrix::diagonal(alloc::vec![RatFunc::one(), RatFunc::int(-1)])
    }

    #[test]
    fn kron_examples() {
        let i2 = OperatorMatrix::identity(2);
        assert_eq!(i2.kron(&i2), OperatorMatrix::identity(4));
        let s = sigma3().kron(&i2);
        let want = OperatorMatrix::diagonal(
            [1, 1, -1, -1].iter().map(|&x| RatFunc::int(x)).collect(),
        );
        assert_eq!(s, want);
    }

    #[test]
    fn swap_conjugation() {
        let p = OperatorMatrix::swap(2, 3);
        let a = OperatorMatrix::from_fn(2, |i, j| RatFunc::int((i * 2 + j + 1) as i64));
        let b = OperatorMatrix::from_fn(3, |i, j| RatFunc::var_pow(Sym::U, (i * 3 + j) as i32));
        // P (a ⊗ b) P^T = b ⊗ a
        let lhs = p.mul(&a.kron(&b)).mul(&p.transpose());
        assert_eq!(lhs, b.kron(&a));
    }

    #[test]
    fn scalar_detection_and_difference() {
        let m = OperatorMatrix::scalar(3, RatFunc::var(Sym::U));
        assert_eq!(m.as_scalar(), Some(RatFunc::var(Sym::U)));
        let mut n = m.clone();
        n.set(1, 2, RatFunc::one());
        assert_eq!(n.as_scalar(), None);
        let d = m.first_difference(&n).unwrap();
        assert_eq!((d.row, d.col), (1, 2));
    }

    #[test]
    fn kron_is_associative() {
        let a = OperatorMatrix::from_fn(2, |i, j| RatFunc::var_pow(Sym::U, (i + 2 * j) as i32));
        let b = OperatorMatrix::from_fn(2, |i, j| RatFunc::int((i as i64) - (j as i64) + 3));
        let c = sigma3();
        assert_eq!(a.kron(&b).kron(&c), a.kron(&b.kron(&c)));
    }
}
