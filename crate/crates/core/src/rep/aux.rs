//! 2x2 auxiliary-space matrices whose entries are operators on a quantum space.

use crate::arith::{ArithError, Monomial, RatFunc, Sym};

use super::matrix::OperatorMatrix;

/// `[[e00, e01], [e10, e11]]` with every entry acting on the same quantum space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AuxMatrix {
    e: [OperatorMatrix; 4],
}

impl AuxMatrix {
    pub fn new(e00: OperatorMatrix, e01: OperatorMatrix, e10: OperatorMatrix, e11: OperatorMatrix) -> Self {
        let d = e00.dim();
        assert!(
            e01.dim() == d && e10.dim() == d && e11.dim() == d,
            "auxiliary entries must share a dimension"
        );
        AuxMatrix { e: [e00, e01, e10, e11] }
    }

    /// Scalar entries on a one-dimensional quantum space.
    pub fn scalars(a: RatFunc, b: RatFunc, c: RatFunc, d: RatFunc) -> Self {
        Self::new(
            OperatorMatrix::scalar(1, a),
            OperatorMatrix::scalar(1, b),
            OperatorMatrix::scalar(1, c),
            OperatorMatrix::scalar(1, d),
        )
    }

    pub fn identity(dim: usize) -> Self {
        Self::new(
            OperatorMatrix::identity(dim),
            OperatorMatrix::zero(dim),
            OperatorMatrix::zero(dim),
            OperatorMatrix::identity(dim),
        )
    }

    /// Dimension of the quantum space.
    pub fn dim(&self) -> usize {
        self.e[0].dim()
    }

    pub fn get(&self, a: usize, b: usize) -> &OperatorMatrix {
        &self.e[2 * a + b]
    }

    pub fn entries(&self) -> &[OperatorMatrix; 4] {
        &self.e
    }

    pub fn map(&self, f: impl Fn(&OperatorMatrix) -> OperatorMatrix) -> Self {
        AuxMatrix { e: [f(&self.e[0]), f(&self.e[1]), f(&self.e[2]), f(&self.e[3])] }
    }

    pub fn try_map(
        &self,
        f: impl Fn(&OperatorMatrix) -> Result<OperatorMatrix, ArithError>,
    ) -> Result<Self, ArithError> {
        Ok(AuxMatrix { e: [f(&self.e[0])?, f(&self.e[1])?, f(&self.e[2])?, f(&self.e[3])?] })
    }

    pub fn map_monomials(&self, images: &[(Sym, Monomial)]) -> Result<Self, ArithError> {
        self.try_map(|m| m.map_monomials(images))
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        self.map(|m| m.scale(c))
    }

    /// Product in the auxiliary space with operator-valued entries.
    pub fn mul(&self, other: &Self) -> Self {
        let f = |a: usize, c: usize| {
            self.get(a, 0).mul(other.get(0, c)).add(&self.get(a, 1).mul(other.get(1, c)))
        };
        AuxMatrix { e: [f(0, 0), f(0, 1), f(1, 0), f(1, 1)] }
    }

    /// The operator on `aux ⊗ quantum`.
    pub fn to_full(&self) -> OperatorMatrix {
        let d = self.dim();
        OperatorMatrix::from_fn(2 * d, |r, c| self.get(r / d, c / d).get(r % d, c % d).clone())
    }

    /// As an operator on `aux1 ⊗ aux2 ⊗ quantum`, acting in `aux1`.
    pub fn leg1(&self) -> OperatorMatrix {
        let d = self.dim();
        OperatorMatrix::from_fn(4 * d, |r, c| {
            let (a, b, i) = (r / (2 * d), (r / d) % 2, r % d);
            let (x, y, j) = (c / (2 * d), (c / d) % 2, c % d);
            if b == y {
                self.get(a, x).get(i, j).clone()
            } else {
                RatFunc::zero()
            }
        })
    }

    /// As an operator on `aux1 ⊗ aux2 ⊗ quantum`, acting in `aux2`.
    pub fn leg2(&self) -> OperatorMatrix {
        let d = self.dim();
        OperatorMatrix::from_fn(4 * d, |r, c| {
            let (a, b, i) = (r / (2 * d), (r / d) % 2, r % d);
            let (x, y, j) = (c / (2 * d), (c / d) % 2, c % d);
            if a == x {
                self.get(b, y).get(i, j).clone()
            } else {
                RatFunc::zero()
            }
        })
    }

    /// First disagreeing auxiliary entry, with the position inside it.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize, super::EntryMismatch)> {
        for a in 0..2 {
            for b in 0..2 {
                if let Some(m) = self.get(a, b).first_difference(other.get(a, b)) {
                    return Some((a, b, m));
                }
            }
        }
        None
    }
}
