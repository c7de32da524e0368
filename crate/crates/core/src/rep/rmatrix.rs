//! The trigonometric R-matrix with Yang-Baxter and RLL checks.

use alloc::format;
use alloc::string::String;

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Sym};
use crate::report::CheckRecord;
use crate::scalars::{a_of, b_of, q_minus};

use super::aux::AuxMatrix;
use super::matrix::OperatorMatrix;

/// `R(x)` on `C^2 ⊗ C^2`:
/// corners `xq - x^{-1}q^{-1}`, middle block `[[x - x^{-1}, q - q^{-1}], [q - q^{-1}, x - x^{-1}]]`.
pub fn build_r(x: &Monomial) -> OperatorMatrix {
    let a = RatFunc::from(a_of(x));
    let b = RatFunc::from(b_of(x));
    let c = q_minus();
    let z = RatFunc::zero;
    OperatorMatrix::from_rows(alloc::vec![
        alloc::vec![a.clone(), z(), z(), z()],
        alloc::vec![z(), b.clone(), c.clone(), z()],
        alloc::vec![z(), c, b, z()],
        alloc::vec![z(), z(), z(), a],
    ])
}

pub fn build_r_at(s: Sym) -> OperatorMatrix {
    build_r(&Monomial::var(s))
}

/// `x / y` as a monomial.
pub fn ratio(x: Sym, y: Sym) -> Monomial {
    Monomial::var(x).div(&Monomial::var(y)).expect("small exponents")
}

pub fn product(x: Sym, y: Sym) -> Monomial {
    Monomial::var(x).mul(&Monomial::var(y)).expect("small exponents")
}

/// `r ⊗ I` for a 4x4 `r`, the identity acting in a third space of size `d`.
pub fn embed_r12(r: &OperatorMatrix, d: usize) -> OperatorMatrix {
    r.kron(&OperatorMatrix::identity(d))
}

/// `R_13` on `C^2 ⊗ C^2 ⊗ C^2`, by conjugating `R ⊗ I` with the (2,3) flip.
pub fn embed_r13(r: &OperatorMatrix) -> OperatorMatrix {
    let p23 = OperatorMatrix::identity(2).kron(&OperatorMatrix::swap(2, 2));
    p23.mul(&embed_r12(r, 2)).mul(&p23)
}

pub fn embed_r23(r: &OperatorMatrix) -> OperatorMatrix {
    OperatorMatrix::identity(2).kron(r)
}

/// `R12(u/v) R13(u) R23(v) = R23(v) R13(u) R12(u/v)` for an arbitrary builder.
pub fn check_ybe(build: &dyn Fn(&Monomial) -> OperatorMatrix) -> CheckRecord {
    check_ybe_at(build, Sym::U, Sym::V)
}

pub fn check_ybe_at(build: &dyn Fn(&Monomial) -> OperatorMatrix, u: Sym, v: Sym) -> CheckRecord {
    let r12 = embed_r12(&build(&ratio(u, v)), 2);
    let r13 = embed_r13(&build(&Monomial::var(u)));
    let r23 = embed_r23(&build(&Monomial::var(v)));
    let lhs = r12.mul(&r13).mul(&r23);
    let rhs = r23.mul(&r13).mul(&r12);
    CheckRecord::compare("ybe", "YB", &lhs, &rhs)
}

/// `R(u/v) L1(u) L2(v) = L2(v) L1(u) R(u/v)` on `aux ⊗ aux ⊗ quantum`.
pub fn check_rll(
    lax: &dyn Fn(&Monomial) -> AuxMatrix,
    build: &dyn Fn(&Monomial) -> OperatorMatrix,
    label: &str,
) -> CheckRecord {
    let lu = lax(&Monomial::var(Sym::U));
    let lv = lax(&Monomial::var(Sym::V));
    let d = lu.dim();
    let r = embed_r12(&build(&ratio(Sym::U, Sym::V)), d);
    let (l1, l2) = (lu.leg1(), lv.leg2());
    let lhs = r.mul(&l1).mul(&l2);
    let rhs = l2.mul(&l1).mul(&r);
    let id: String = format!("RLL[{}]", label);
    CheckRecord::compare("rll", &id, &lhs, &rhs)
}

/// `R` with entry `(i, j)` replaced by `x + x^{-1}`, for negative controls.
pub fn perturbed_r(x: &Monomial, i: usize, j: usize) -> OperatorMatrix {
    let mut r = build_r(x);
    let xi = x.inv().expect("small exponents");
    let e = &LaurentPoly::monomial(*x, Rational::one()) + &LaurentPoly::monomial(xi, Rational::one());
    r.set(i, j, e.into());
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rep::spin::{build_lax, SpinRep};

    #[test]
    fn entry_corner() {
        let r = build_r_at(Sym::U);
        let want: RatFunc = "qh^2 u^1 - qh^-2 u^-1".parse().unwrap();
        assert_eq!(*r.get(0, 0), want);
    }

    #[test]
    fn specializations() {
        let r = build_r_at(Sym::U);
        let at1 = r.try_map(|e| e.eval_at(Sym::U, &Rational::one())).unwrap();
        assert_eq!(at1, OperatorMatrix::swap(2, 2).scale(&q_minus()));
        let q1 = r.try_map(|e| e.eval_at(Sym::QH, &Rational::one())).unwrap();
        let b: RatFunc = "u^1 - u^-1".parse().unwrap();
        assert_eq!(q1, OperatorMatrix::scalar(4, b));
    }

    #[test]
    fn r13_by_conjugation_moves_second_leg() {
        // R13 acts trivially on the middle leg: it commutes with anything there
        let r13 = embed_r13(&build_r_at(Sym::U));
        let mid = OperatorMatrix::identity(2)
            .kron(&OperatorMatrix::unit(2, 0, 1))
            .kron(&OperatorMatrix::identity(2));
        assert_eq!(r13.mul(&mid), mid.mul(&r13));
        // and its (1,3)-block equals R
        let r = build_r_at(Sym::U);
        for (i, j) in [(0usize, 0usize), (1, 1), (1, 2), (2, 1)] {
            let (a1, a3) = (i / 2, i % 2);
            let (b1, b3) = (j / 2, j % 2);
            assert_eq!(r13.get(a1 * 4 + a3, b1 * 4 + b3), r.get(i, j));
        }
    }

    #[test]
    fn ybe_holds() {
        assert!(check_ybe(&build_r).passed());
    }

    #[test]
    fn ybe_fails_when_perturbed() {
        let rec = check_ybe(&|x| perturbed_r(x, 1, 1));
        assert!(!rec.passed());
        assert!(rec.counterexample.is_some());
    }

    #[test]
    fn ybe_degenerate_u_eq_v() {
        let rec = check_ybe_at(&build_r, Sym::U, Sym::U);
        assert!(rec.passed());
    }

    #[test]
    fn rll_spin_half_and_one() {
        for tj in [0u32, 1, 2] {
            let rep = SpinRep::new(tj);
            let rec = check_rll(&|x| build_lax(x, &rep), &build_r, "s");
            assert!(rec.passed(), "2j={tj}: {:?}", rec.counterexample);
        }
    }

    #[test]
    fn rll_fails_without_splus() {
        let mut rep = SpinRep::new(1);
        rep.splus = OperatorMatrix::zero(2);
        let rec = check_rll(&|x| build_lax(x, &rep), &build_r, "broken");
        assert!(!rec.passed());
    }
}
