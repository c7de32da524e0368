//! Finite-dimensional U_q(sl2) modules and the Lax operator built on them.

use alloc::format;

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Sym};
use crate::report::{CheckRecord, Report};
use crate::scalars::{q_int, q_minus, qh_pow};

use super::aux::AuxMatrix;
use super::matrix::OperatorMatrix;

/// Spin-`j` module in the basis `|j>, |j-1>, ..., |-j>` (index 0 is `m = j`).
///
/// Matrix elements are the non-symmetric ones
/// `S+|m> = [j-m]|m+1>`, `S-|m> = [j+m]|m-1>`, which need no square roots.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpinRep {
    pub two_j: u32,
    pub splus: OperatorMatrix,
    pub sminus: OperatorMatrix,
    /// `q^{s3}`.
    pub q_s3: OperatorMatrix,
    /// `q^{-s3}`.
    pub q_s3_inv: OperatorMatrix,
}

impl SpinRep {
    pub fn new(two_j: u32) -> Self {
        let n = two_j as usize + 1;
        let tj = two_j as i32;
        // 2m at index i
        let two_m = |i: usize| tj - 2 * i as i32;
        let mut splus = OperatorMatrix::zero(n);
        let mut sminus = OperatorMatrix::zero(n);
        for i in 0..n {
            let tm = two_m(i);
            if i > 0 {
                // [j - m], with j - m an integer
                splus.set(i - 1, i, q_int((tj - tm) / 2).into());
            }
            if i + 1 < n {
                sminus.set(i + 1, i, q_int((tj + tm) / 2).into());
            }
        }
        let q_s3 = OperatorMatrix::diagonal((0..n).map(|i| RatFunc::from(qh_pow(two_m(i)))).collect());
        let q_s3_inv = OperatorMatrix::diagonal((0..n).map(|i| RatFunc::from(qh_pow(-two_m(i)))).collect());
        SpinRep { two_j, splus, sminus, q_s3, q_s3_inv }
    }

    pub fn dim(&self) -> usize {
        self.two_j as usize + 1
    }

    /// The two defining relations plus `q^{s3} q^{-s3} = 1`.
    pub fn check_relations(&self) -> Report {
        let suite = "spin";
        let tag = |r: &str| format!("{}[2j={}]", r, self.two_j);
        let q = RatFunc::from(qh_pow(2));
        let qi = RatFunc::from(qh_pow(-2));
        let mut out = Report::default();
        out.push(CheckRecord::compare(
            suite,
            &tag("inverse"),
            &self.q_s3.mul(&self.q_s3_inv),
            &OperatorMatrix::identity(self.dim()),
        ));
        let conj = |x: &OperatorMatrix| self.q_s3.mul(x).mul(&self.q_s3_inv);
        out.push(CheckRecord::compare(suite, &tag("s3-splus"), &conj(&self.splus), &self.splus.scale(&q)));
        out.push(CheckRecord::compare(suite, &tag("s3-sminus"), &conj(&self.sminus), &self.sminus.scale(&qi)));
        let lhs = OperatorMatrix::commutator(&self.splus, &self.sminus);
        let k2 = self.q_s3.mul(&self.q_s3);
        let k2i = self.q_s3_inv.mul(&self.q_s3_inv);
        let rhs = k2.sub(&k2i).scale(&q_minus().inv().expect("nonzero"));
        out.push(CheckRecord::compare(suite, &tag("splus-sminus"), &lhs, &rhs));
        out
    }
}

/// The Lax operator `L(x)` over `rep`, with a monomial spectral argument.
pub fn build_lax(x: &Monomial, rep: &SpinRep) -> AuxMatrix {
    let xq = LaurentPoly::monomial(
        x.mul(&Monomial::var(Sym::QH)).expect("small exponents"),
        Rational::one(),
    );
    let xqi = LaurentPoly::monomial(
        x.mul(&Monomial::var(Sym::QH)).and_then(|m| m.inv()).expect("small exponents"),
        Rational::one(),
    );
    let (a, b) = (RatFunc::from(xq), RatFunc::from(xqi));
    let l11 = rep.q_s3.scale(&a).sub(&rep.q_s3_inv.scale(&b));
    let l22 = rep.q_s3_inv.scale(&a).sub(&rep.q_s3.scale(&b));
    let c = q_minus();
    AuxMatrix::new(l11, rep.sminus.scale(&c), rep.splus.scale(&c), l22)
}

/// `L(u)` with the plain spectral symbol.
pub fn build_lax_at(s: Sym, rep: &SpinRep) -> AuxMatrix {
    build_lax(&Monomial::var(s), rep)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn spin_half_is_pauli() {
        let r = SpinRep::new(1);
        assert_eq!(r.splus, OperatorMatrix::unit(2, 0, 1));
        assert_eq!(r.sminus, OperatorMatrix::unit(2, 1, 0));
        assert_eq!(*r.q_s3.get(0, 0), RatFunc::var(Sym::QH));
        assert_eq!(*r.q_s3.get(1, 1), RatFunc::var_pow(Sym::QH, -1));
    }

    #[test]
    fn spin_zero_is_trivial() {
        let r = SpinRep::new(0);
        assert!(r.splus.is_zero() && r.sminus.is_zero());
        assert_eq!(r.q_s3, OperatorMatrix::identity(1));
        let l = build_lax_at(Sym::U, &r);
        let want: RatFunc = "qh^1 u^1 - qh^-1 u^-1".parse().unwrap();
        assert_eq!(l.get(0, 0).as_scalar(), Some(want.clone()));
        assert_eq!(l.get(1, 1).as_scalar(), Some(want));
        assert!(l.get(0, 1).is_zero());
    }

    #[test]
    fn relations_hold_up_to_spin_two() {
        for tj in 0..=4 {
            let rep = SpinRep::new(tj);
            let rep_out = rep.check_relations();
            assert!(rep_out.all_passed(), "2j={}: {:?}", tj, rep_out.failures().collect::<Vec<_>>());
        }
    }

    #[test]
    fn spin_one_commutator_on_middle_vector() {
        let rep = SpinRep::new(2);
        let c = OperatorMatrix::commutator(&rep.splus, &rep.sminus);
        assert!(c.get(1, 1).is_zero());
    }
}
