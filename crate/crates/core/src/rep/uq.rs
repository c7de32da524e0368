//! Chevalley generators of the quantum affine algebra in matrix representations.

use alloc::format;
use alloc::string::String;

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Sym};
use crate::report::{CheckRecord, Report};
use crate::scalars::{q, q_inv, q_minus, qh_pow};

use super::matrix::OperatorMatrix;
use super::rmatrix::{build_r, ratio};

/// A Chevalley generator, `i` in `{0, 1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chevalley {
    E(u8),
    F(u8),
    /// `q^{H_i}`.
    K(u8),
    /// `q^{-H_i}`.
    KInv(u8),
}

impl Chevalley {
    /// The six generators entering the intertwining condition.
    pub const INTERTWINED: [Chevalley; 6] = [
        Chevalley::E(0),
        Chevalley::E(1),
        Chevalley::F(0),
        Chevalley::F(1),
        Chevalley::K(0),
        Chevalley::K(1),
    ];

    pub fn name(self) -> String {
        match self {
            Chevalley::E(i) => format!("E{i}"),
            Chevalley::F(i) => format!("F{i}"),
            Chevalley::K(i) => format!("qH{i}"),
            Chevalley::KInv(i) => format!("qH{i}^-1"),
        }
    }
}

/// Images of the generators, stored through `q^{±H_i/2}` so that coproducts stay polynomial.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChevalleyRep {
    pub e: [OperatorMatrix; 2],
    pub f: [OperatorMatrix; 2],
    /// `q^{H_i/2}`.
    pub kh: [OperatorMatrix; 2],
    /// `q^{-H_i/2}`.
    pub kh_inv: [OperatorMatrix; 2],
}

fn monomial_poly(m: Monomial) -> RatFunc {
    LaurentPoly::monomial(m, Rational::one()).into()
}

impl ChevalleyRep {
    /// The evaluation representation `π_x` on `C^2`.
    pub fn eval(x: &Monomial) -> Self {
        let up = monomial_poly(x.mul(&Monomial::var(Sym::QH)).expect("small exponents"));
        let dn = monomial_poly(x.mul(&Monomial::var(Sym::QH)).and_then(|m| m.inv()).expect("small exponents"));
        let sp = OperatorMatrix::unit(2, 0, 1);
        let sm = OperatorMatrix::unit(2, 1, 0);
        let d = |a: i32| OperatorMatrix::diagonal(alloc::vec![qh_pow(a).into(), qh_pow(-a).into()]);
        ChevalleyRep {
            e: [sm.scale(&up), sp.scale(&up)],
            f: [sp.scale(&dn), sm.scale(&dn)],
            kh: [d(-1), d(1)],
            kh_inv: [d(1), d(-1)],
        }
    }

    pub fn eval_at(s: Sym) -> Self {
        Self::eval(&Monomial::var(s))
    }

    /// The one-dimensional representation given by the counit.
    pub fn trivial() -> Self {
        let z = || OperatorMatrix::zero(1);
        let o = || OperatorMatrix::identity(1);
        ChevalleyRep { e: [z(), z()], f: [z(), z()], kh: [o(), o()], kh_inv: [o(), o()] }
    }

    pub fn dim(&self) -> usize {
        self.kh[0].dim()
    }

    pub fn image(&self, x: Chevalley) -> OperatorMatrix {
        match x {
            Chevalley::E(i) => self.e[i as usize].clone(),
            Chevalley::F(i) => self.f[i as usize].clone(),
            Chevalley::K(i) => self.kh[i as usize].mul(&self.kh[i as usize]),
            Chevalley::KInv(i) => self.kh_inv[i as usize].mul(&self.kh_inv[i as usize]),
        }
    }

    /// `a ⊗ b` through the coproduct, or through the opposite one when `opposite` is set.
    pub fn tensor(a: &Self, b: &Self, opposite: bool) -> Self {
        let ch = |i: usize, x: &[OperatorMatrix; 2], y: &[OperatorMatrix; 2]| {
            Self::coproduct_parts(&x[i], &y[i], &a.kh, &a.kh_inv, &b.kh, &b.kh_inv, i, opposite)
        };
        ChevalleyRep {
            e: [ch(0, &a.e, &b.e), ch(1, &a.e, &b.e)],
            f: [ch(0, &a.f, &b.f), ch(1, &a.f, &b.f)],
            kh: [a.kh[0].kron(&b.kh[0]), a.kh[1].kron(&b.kh[1])],
            kh_inv: [a.kh_inv[0].kron(&b.kh_inv[0]), a.kh_inv[1].kron(&b.kh_inv[1])],
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn coproduct_parts(
        xa: &OperatorMatrix,
        xb: &OperatorMatrix,
        ka: &[OperatorMatrix; 2],
        kia: &[OperatorMatrix; 2],
        kb: &[OperatorMatrix; 2],
        kib: &[OperatorMatrix; 2],
        i: usize,
        opposite: bool,
    ) -> OperatorMatrix {
        if opposite {
            // q^{-H_i/2} ⊗ X + X ⊗ q^{H_i/2}
            kia[i].kron(xb).add(&xa.kron(&kb[i]))
        } else {
            // X ⊗ q^{-H_i/2} + q^{H_i/2} ⊗ X
            xa.kron(&kib[i]).add(&ka[i].kron(xb))
        }
    }

    /// Defining relations, both q-Serre relations and level zero.
    pub fn check_relations(&self, label: &str) -> Report {
        let suite = "uq";
        let id = |r: &str| format!("{r}[{label}]");
        let n = self.dim();
        let one = OperatorMatrix::identity(n);
        let cartan = |i: usize, j: usize| if i == j { 2 } else { -2 };
        let k = |i: usize| self.image(Chevalley::K(i as u8));
        let ki = |i: usize| self.image(Chevalley::KInv(i as u8));
        let mut out = Report::default();
        for i in 0..2 {
            out.push(CheckRecord::compare(suite, &id(&format!("Kinv{i}")), &k(i).mul(&ki(i)), &one));
            out.push(CheckRecord::compare(
                suite,
                &id(&format!("Khalf{i}")),
                &self.kh[i].mul(&self.kh_inv[i]),
                &one,
            ));
        }
        out.push(CheckRecord::compare(suite, &id("HH"), &k(0).mul(&k(1)), &k(1).mul(&k(0))));
        for i in 0..2 {
            for j in 0..2 {
                let s = RatFunc::from(qh_pow(2 * cartan(i, j)));
                let si = RatFunc::from(qh_pow(-2 * cartan(i, j)));
                let ce = k(i).mul(&self.e[j]).mul(&ki(i));
                out.push(CheckRecord::compare(suite, &id(&format!("HE{i}{j}")), &ce, &self.e[j].scale(&s)));
                let cf = k(i).mul(&self.f[j]).mul(&ki(i));
                out.push(CheckRecord::compare(suite, &id(&format!("HF{i}{j}")), &cf, &self.f[j].scale(&si)));
                let ef = OperatorMatrix::commutator(&self.e[i], &self.f[j]);
                let rhs = if i == j {
                    k(i).sub(&ki(i)).scale(&q_minus().inv().expect("nonzero"))
                } else {
                    OperatorMatrix::zero(n)
                };
                out.push(CheckRecord::compare(suite, &id(&format!("EF{i}{j}")), &ef, &rhs));
            }
        }
        for (i, j) in [(0usize, 1usize), (1, 0)] {
            out.push(CheckRecord::vanishes(suite, &id(&format!("serreE{i}{j}")), &serre(&self.e[i], &self.e[j])));
            out.push(CheckRecord::vanishes(suite, &id(&format!("serreF{i}{j}")), &serre(&self.f[i], &self.f[j])));
        }
        out.push(CheckRecord::compare(suite, &id("central"), &k(0).mul(&k(1)), &one));
        out
    }
}

/// `[x, [x, [x, y]_q]_{q^{-1}}]`.
pub fn serre(x: &OperatorMatrix, y: &OperatorMatrix) -> OperatorMatrix {
    let inner = OperatorMatrix::q_commutator(x, y, &q());
    let mid = OperatorMatrix::q_commutator(x, &inner, &q_inv());
    OperatorMatrix::commutator(x, &mid)
}

/// `(repA × repB)[Δ(x)]`, or `Δ'` when `opposite` is set.
pub fn coproduct_apply(x: Chevalley, a: &ChevalleyRep, b: &ChevalleyRep, opposite: bool) -> OperatorMatrix {
    ChevalleyRep::tensor(a, b, opposite).image(x)
}

/// `R(u/v) (π_u×π_v)[Δ(x)] = (π_u×π_v)[Δ'(x)] R(u/v)` for the six generators.
///
/// With `swapped` the two coproducts trade places, which must fail.
pub fn check_r_intertwiner(swapped: bool) -> Report {
    let pu = ChevalleyRep::eval_at(Sym::U);
    let pv = ChevalleyRep::eval_at(Sym::V);
    let r = build_r(&ratio(Sym::U, Sym::V));
    Chevalley::INTERTWINED
        .iter()
        .map(|&x| {
            let d = coproduct_apply(x, &pu, &pv, swapped);
            let dp = coproduct_apply(x, &pu, &pv, !swapped);
            CheckRecord::compare("uq", &format!("condR[{}]", x.name()), &r.mul(&d), &dp.mul(&r))
        })
        .collect()
}
