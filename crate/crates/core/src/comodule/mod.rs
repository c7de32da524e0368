//! The coaction of the quantum affine algebra on the q-Onsager algebra, its
//! current-level form `δ_w`, and the intertwiner system satisfied by `K(u)`.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Sym};
use crate::currents::{check_q_onsager, phi_decompose, CurrentError, CurrentQuadruple};
use crate::reflection::{dress, KOperator};
use crate::rep::{Chevalley, ChevalleyRep, OperatorMatrix, SpinRep};
use crate::report::{CheckRecord, Report};
use crate::scalars::{big_u, q, q_minus, q_plus, qh_pow};

type M = OperatorMatrix;

/// A standard generator of the q-Onsager algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    A,
    AStar,
}

impl Generator {
    pub fn name(self) -> &'static str {
        match self {
            Generator::A => "A",
            Generator::AStar => "A*",
        }
    }
}

/// `δ(x)` split as a sum of tensor products `first ⊗ second`.
#[derive(Clone, Debug)]
pub struct CoactionImage {
    pub terms: Vec<(M, M)>,
}

impl CoactionImage {
    /// The operator on `first-space ⊗ base`.
    pub fn realize(&self) -> M {
        let mut it = self.terms.iter();
        let (a, b) = it.next().expect("at least one term");
        it.fold(a.kron(b), |acc, (a, b)| acc.add(&a.kron(b)))
    }
}

/// `δ(A) = (k_+E_1 + k_-F_1) q^{H_1/2} ⊗ 1 + q^{H_1} ⊗ W_0` and
/// `δ(A*) = (k_-E_0 + k_+F_0) q^{H_0/2} ⊗ 1 + q^{H_0} ⊗ W_1`.
pub fn coaction(x: Generator, base: (&M, &M), eval: &ChevalleyRep, kplus: &RatFunc, kminus: &RatFunc) -> CoactionImage {
    let (i, ke, kf, b) = match x {
        Generator::A => (1usize, kplus, kminus, base.0),
        Generator::AStar => (0usize, kminus, kplus, base.1),
    };
    let first = eval.e[i].scale(ke).add(&eval.f[i].scale(kf)).mul(&eval.kh[i]);
    let id = M::identity(b.dim());
    CoactionImage { terms: alloc::vec![(first, id), (eval.image(Chevalley::K(i as u8)), b.clone())] }
}

#[allow(non_snake_case)]
pub fn delta_T(x: Generator, base: (&M, &M), eval: &ChevalleyRep, kplus: &RatFunc, kminus: &RatFunc) -> M {
    coaction(x, base, eval, kplus, kminus).realize()
}

/// Coassociativity on `π_u ⊗ π_v ⊗ base` and the counit axiom, for `A` and `A*`.
///
/// With `opposite` the first factor is split by `Δ'` instead of `Δ`.
pub fn check_comodule_axioms(
    base: (&M, &M),
    eval_u: &ChevalleyRep,
    eval_v: &ChevalleyRep,
    kplus: &RatFunc,
    kminus: &RatFunc,
    opposite: bool,
) -> Report {
    let mut out = Report::default();
    let uv = ChevalleyRep::tensor(eval_u, eval_v, opposite);
    for x in [Generator::A, Generator::AStar] {
        let lhs = delta_T(x, base, &uv, kplus, kminus);
        // (id ⊗ δ)δ: the base of the outer coaction is δ on π_v ⊗ base
        let inner_a = delta_T(Generator::A, base, eval_v, kplus, kminus);
        let inner_s = delta_T(Generator::AStar, base, eval_v, kplus, kminus);
        let rhs = delta_T(x, (&inner_a, &inner_s), eval_u, kplus, kminus);
        out.push(CheckRecord::compare("comodule", &format!("coassoc[{}]", x.name()), &lhs, &rhs));
        let counit = delta_T(x, base, &ChevalleyRep::trivial(), kplus, kminus);
        let want = match x {
            Generator::A => base.0,
            Generator::AStar => base.1,
        };
        out.push(CheckRecord::compare("comodule", &format!("counit[{}]", x.name()), &counit, want));
    }
    out
}

/// Both q-Dolan-Grady relations for `δ(A)`, `δ(A*)` on `eval ⊗ base`, with
/// `ρ = k_+k_-(q+q^{-1})^2`.
pub fn check_coaction_qdg(base: (&M, &M), eval: &ChevalleyRep, kplus: &RatFunc, kminus: &RatFunc, label: &str) -> Report {
    let a = delta_T(Generator::A, base, eval, kplus, kminus);
    let s = delta_T(Generator::AStar, base, eval, kplus, kminus);
    let rho = &(kplus * kminus) * &(&q_plus() * &q_plus());
    let mut r = check_q_onsager(&a, &s, &rho, label);
    for rec in &mut r.records {
        rec.suite = "coaction".into();
    }
    r
}

fn mono(s: Sym, e: i32) -> RatFunc {
    LaurentPoly::monomial(Monomial::var_pow(s, e), Rational::one()).into()
}

/// The current coaction `δ_w` on `rep ⊗ old space`, written out term by term.
pub fn delta_w_currents(c: &CurrentQuadruple, rep: &SpinRep, w: Sym) -> CurrentQuadruple {
    let n = rep.dim();
    let id_s = M::identity(n);
    let id_b = M::identity(c.dim());
    let (kp, km) = (&c.kplus, &c.kminus);
    let (qp, qm) = (q_plus(), q_minus());
    let qv = q();
    let uu = big_u(Sym::U);
    let ws = &mono(w, 2) + &mono(w, -2);
    let q2s3 = rep.q_s3.mul(&rep.q_s3);
    let q2s3i = rep.q_s3_inv.mul(&rep.q_s3_inv);
    let (sp, sm) = (&rep.splus, &rep.sminus);
    // (upper, lower) pairs indexed by the sign: true is the upper sign
    let pick = |s: bool, a: &M, b: &M| if s { a.clone() } else { b.clone() };
    let sgn = |s: bool| if s { 1 } else { -1 };
    let qs3 = |s: bool| pick(s, &rep.q_s3, &rep.q_s3_inv);
    let q2 = |s: bool| pick(s, &q2s3, &q2s3i);
    let w_of = |s: bool| pick(s, &c.wp, &c.wm);
    let g_of = |s: bool| pick(s, &c.gp, &c.gm);
    let k_of = |s: bool| if s { kp } else { km };
    let t = |a: &M, b: &M| a.kron(b);

    let delta_w = |s: bool| {
        let e = sgn(s);
        let ss = if s { sp.mul(sm) } else { sm.mul(sp) };
        let first = ss.scale(&(&qm * &qm)).sub(&q2(s).sub(&q2(!s)).scale(&qv));
        let splus_part = sp.mul(&qs3(s)).scale(&(kp * &(&mono(w, e) * &qh_pow(e).into())));
        let sminus_part = sm.mul(&qs3(s)).scale(&(km * &(&mono(w, -e) * &qh_pow(-e).into())));
        let coef3 = &qm / &(&(kp * km) * &qp);
        t(&first, &w_of(!s))
            .sub(&t(&id_s, &w_of(s)).scale(&ws))
            .add(&t(&splus_part, &c.gp).add(&t(&sminus_part, &c.gm)).scale(&coef3))
            .add(&t(&splus_part.add(&sminus_part), &id_b).add(&t(&q2(s), &w_of(s).scale(&uu))).scale(&qp))
    };

    let delta_g = |s: bool| {
        let e = sgn(s);
        let s_mp = pick(s, sm, sp);
        let ratio = k_of(!s) / k_of(s);
        let s_sq = s_mp.mul(&s_mp).scale(&(&ratio * &(&qm * &qm)));
        let wq = q2(s).scale(&mono(w, 2)).add(&q2(!s).scale(&mono(w, -2)));
        let a = s_mp.mul(&rep.q_s3).scale(&(k_of(!s) * &(&mono(w, e) * &qh_pow(-e).into())));
        let b = s_mp.mul(&rep.q_s3_inv).scale(&(k_of(!s) * &(&mono(w, -e) * &qh_pow(e).into())));
        let uwp = c.wp.scale(&uu).sub(&c.wm);
        let uwm = c.wm.scale(&uu).sub(&c.wp);
        let cross = &(&qp * &qp) * &qm;
        let konst = &(&(kp * km) * &(&qp * &qp)) / &qm;
        let last = M::scalar(n, &qp * &uu).add(&s_sq).sub(&wq).sub(&id_s);
        t(&s_sq, &g_of(!s))
            .sub(&t(&wq, &g_of(s)))
            .add(&t(&id_s, &g_of(s).scale(&(&qp * &uu))))
            .add(&t(&a, &uwp).add(&t(&b, &uwm)).scale(&cross))
            .add(&t(&last, &id_b).scale(&konst))
    };

    CurrentQuadruple {
        wp: delta_w(true),
        wm: delta_w(false),
        gp: delta_g(true),
        gm: delta_g(false),
        kplus: kp.clone(),
        kminus: km.clone(),
    }
}

/// Compares the currents of `L(uw) K(u) L(u/w)` with `δ_w` of the currents of `K`.
pub fn check_dressing_consistency(k: &KOperator, rep: &SpinRep, w: Sym, kplus: &RatFunc, kminus: &RatFunc) -> Report {
    let suite = "coaction";
    let label = format!("{}+{}", k.label(), rep.two_j);
    let run = || -> Result<(CurrentQuadruple, CurrentQuadruple), CurrentError> {
        let before = phi_decompose(k, kplus, kminus)?;
        let after = phi_decompose(&dress(k, rep, w), kplus, kminus)?;
        Ok((delta_w_currents(&before, rep, w), after))
    };
    match run() {
        Ok((img, dressed)) => [("W+", &img.wp, &dressed.wp), ("W-", &img.wm, &dressed.wm), ("G+", &img.gp, &dressed.gp), ("G-", &img.gm, &dressed.gm)]
            .into_iter()
            .map(|(n, a, b)| CheckRecord::compare(suite, &format!("dress[{n}][{label}]"), a, b))
            .collect(),
        Err(e) => core::iter::once(CheckRecord::fail(suite, &format!("dress[{label}]"), format!("{e}"))).collect(),
    }
}

/// At spin 0, `δ_w(W_±) = ((q+q^{-1})U - w^2 - w^{-2}) W_±`.
pub fn check_spin_zero(c: &CurrentQuadruple, w: Sym) -> Report {
    let img = delta_w_currents(c, &SpinRep::new(0), w);
    let f = &(&q_plus() * &big_u(Sym::U)) - &(&mono(w, 2) + &mono(w, -2));
    [("W+", &img.wp, &c.wp), ("W-", &img.wm, &c.wm)]
        .into_iter()
        .map(|(n, a, b)| CheckRecord::compare("coaction", &format!("spin0[{n}]"), a, &b.scale(&f)))
        .collect()
}

/// How the relations for `A*` are obtained from those for `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AStarReading {
    /// `q -> q^{-1}`, `u -> u^{-1}` in the coefficients; `K(u)` is left alone.
    Coefficients,
    /// The same, and the entries of `K` are read at `u^{-1}` as well.
    CoefficientsAndEntries,
}

impl AStarReading {
    pub fn name(self) -> &'static str {
        match self {
            AStarReading::Coefficients => "coefficients",
            AStarReading::CoefficientsAndEntries => "coefficients+entries",
        }
    }
}

/// The four intertwiner relations for `x` against the entries `a, b, c, d`, with
/// `q` and `u` standing for whatever the relation coefficients use.
#[allow(clippy::too_many_arguments)]
fn intertwiner_residuals(x: &M, e: [&M; 4], qv: &RatFunc, uv: &RatFunc, kp: &RatFunc, km: &RatFunc) -> [M; 4] {
    let [a, b, c, d] = e;
    let (qi, ui) = (qv.inv().expect("nonzero"), uv.inv().expect("nonzero"));
    let bc = b.scale(km).sub(&c.scale(kp));
    let ad = a.scale(uv).sub(&d.scale(&ui));
    [
        M::commutator(x, a).sub(&bc.scale(&(&qi * &ui))),
        M::commutator(x, d).add(&bc.scale(&(qv * uv))),
        M::q_commutator(x, b, qv).sub(&ad.scale(kp)),
        M::q_commutator(x, c, &qi).add(&ad.scale(km)),
    ]
}

/// `(al)` with `A = W_0`, and its counterpart with `A* = W_1`.
pub fn check_t_intertwiner(
    k: &KOperator,
    w0: &M,
    w1: &M,
    kplus: &RatFunc,
    kminus: &RatFunc,
    reading: AStarReading,
    label: &str,
) -> Report {
    let suite = "t-intertwiner";
    let names = ["[A,A(u)]", "[A,D(u)]", "[A,B(u)]_q", "[A,C(u)]_q^-1"];
    let (uv, qv) = (RatFunc::var(Sym::U), q());
    let mut out = Report::default();
    let direct = intertwiner_residuals(w0, [k.a(), k.b(), k.c(), k.d()], &qv, &uv, kplus, kminus);
    for (n, r) in names.iter().zip(direct) {
        out.push(CheckRecord::vanishes(suite, &format!("{n}[{label}]"), &r));
    }
    let star = match reading {
        AStarReading::Coefficients => Ok(k.k.clone()),
        AStarReading::CoefficientsAndEntries => k.at(&Monomial::var_pow(Sym::U, -1)),
    };
    match star {
        Ok(e) => {
            let res = intertwiner_residuals(
                w1,
                [e.get(0, 0), e.get(0, 1), e.get(1, 0), e.get(1, 1)],
                &qv.inv().expect("nonzero"),
                &uv.inv().expect("nonzero"),
                kplus,
                kminus,
            );
            let star = ["[A*,A(u)]", "[A*,D(u)]", "[A*,B(u)]_q^-1", "[A*,C(u)]_q"];
            for (n, r) in star.iter().zip(res) {
                let id = format!("{n}[{label}]");
                out.push(CheckRecord::vanishes(suite, &id, &r).with_note(format!("reading: {}", reading.name())));
            }
        }
        Err(e) => out.push(CheckRecord::fail(suite, &format!("A*[{label}]"), format!("{e}"))),
    }
    out
}

/// `K(u) (π_u × id)[δ(x)] = (π_{u^{-1}} × id)[δ(x)] K(u)` for `x = A, A*`.
pub fn check_cond_k(k: &KOperator, w0: &M, w1: &M, kplus: &RatFunc, kminus: &RatFunc, label: &str) -> Report {
    let full = k.k.to_full();
    let pu = ChevalleyRep::eval_at(Sym::U);
    let pui = ChevalleyRep::eval(&Monomial::var_pow(Sym::U, -1));
    [Generator::A, Generator::AStar]
        .into_iter()
        .map(|x| {
            let l = full.mul(&delta_T(x, (w0, w1), &pu, kplus, kminus));
            let r = delta_T(x, (w0, w1), &pui, kplus, kminus).mul(&full);
            CheckRecord::compare("t-intertwiner", &format!("condK[{}][{label}]", x.name()), &l, &r)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::currents::{check_current_relations, extract_modes, infer_kpm};
    use crate::reflection::{dress_chain, normalized, seeds};

    fn assert_all(r: &Report) {
        if let Some(f) = r.failures().next() {
            panic!("{} failed: {:?} {:?}", f.relation_id, f.note, f.counterexample);
        }
    }

    fn sym_k() -> (RatFunc, RatFunc) {
        (RatFunc::var(Sym::KP), RatFunc::var(Sym::KM))
    }

    /// Normalized dressed modal K with its `k_±` and first two modes.
    fn modal_base() -> (KOperator, RatFunc, RatFunc, M, M) {
        let k = normalized(&dress_chain(&seeds::mode_compatible(), &[1]).unwrap());
        let (kp, km) = infer_kpm(&k).unwrap();
        let t = extract_modes(&phi_decompose(&k, &kp, &km).unwrap(), 1).unwrap();
        (k, kp, km, t.w0().clone(), t.w1().clone())
    }

    #[test]
    fn trivial_base_is_pure() {
        let (kp, km) = sym_k();
        let z = M::zero(1);
        let e = ChevalleyRep::eval_at(Sym::U);
        let d = delta_T(Generator::A, (&z, &z), &e, &kp, &km);
        let want = e.e[1].scale(&kp).add(&e.f[1].scale(&km)).mul(&e.kh[1]);
        assert_eq!(d, want);
    }

    #[test]
    fn evaluation_images() {
        // δ_u(A) = [[qA, k+ u], [k- u^-1, q^-1 A]]
        let (kp, km) = sym_k();
        let x = M::scalar(1, RatFunc::var(Sym::ALPHA));
        let d = delta_T(Generator::A, (&x, &x), &ChevalleyRep::eval_at(Sym::U), &kp, &km);
        let u = RatFunc::var(Sym::U);
        let a = RatFunc::var(Sym::ALPHA);
        let want = M::from_rows(alloc::vec![
            alloc::vec![&q() * &a, &kp * &u],
            alloc::vec![&km * &u.inv().unwrap(), &a / &q()],
        ]);
        assert_eq!(d, want);
    }

    #[test]
    fn comodule_axioms() {
        let (_, kp, km, w0, w1) = modal_base();
        let (eu, ev) = (ChevalleyRep::eval_at(Sym::U), ChevalleyRep::eval_at(Sym::V));
        assert_all(&check_comodule_axioms((&w0, &w1), &eu, &ev, &kp, &km, false));
        let bad = check_comodule_axioms((&w0, &w1), &eu, &ev, &kp, &km, true);
        assert!(!bad.get("coassoc[A]").unwrap().passed());
        assert!(bad.get("coassoc[A]").unwrap().counterexample.is_some());
    }

    #[test]
    fn coaction_is_a_homomorphism() {
        let (_, kp, km, w0, w1) = modal_base();
        assert_all(&check_coaction_qdg((&w0, &w1), &ChevalleyRep::eval_at(Sym::U), &kp, &km, "n1"));
        let z = M::zero(1);
        let (kp, km) = sym_k();
        assert_all(&check_coaction_qdg((&z, &z), &ChevalleyRep::eval_at(Sym::U), &kp, &km, "trivial"));
    }

    #[test]
    fn spin_zero_is_the_site_factor() {
        let (kp, km) = sym_k();
        let c = phi_decompose(&seeds::nondiagonal(), &kp, &km).unwrap();
        assert_all(&check_spin_zero(&c, Sym::W));
    }

    #[test]
    fn delta_w_matches_dressing() {
        let (kp, km) = sym_k();
        for k in [seeds::nondiagonal(), KOperator::identity()] {
            assert_all(&check_dressing_consistency(&k, &SpinRep::new(1), Sym::W2, &kp, &km));
            assert_all(&check_dressing_consistency(&k, &SpinRep::new(0), Sym::W2, &kp, &km));
            assert_all(&check_dressing_consistency(&k, &SpinRep::new(2), Sym::W, &kp, &km));
        }
    }

    #[test]
    fn delta_w_images_pass_current_relations() {
        let (kp, km) = sym_k();
        let c = phi_decompose(&seeds::nondiagonal(), &kp, &km).unwrap();
        assert_all(&check_current_relations(&delta_w_currents(&c, &SpinRep::new(1), Sym::W), "dw"));
    }

    #[test]
    fn intertwiner_relations() {
        let (k, kp, km, w0, w1) = modal_base();
        assert_all(&check_cond_k(&k, &w0, &w1, &kp, &km, "n1"));
        let r = check_t_intertwiner(&k, &w0, &w1, &kp, &km, AStarReading::Coefficients, "n1");
        assert_eq!(r.records.len(), 8);
        assert_all(&r);
        let other = check_t_intertwiner(&k, &w0, &w1, &kp, &km, AStarReading::CoefficientsAndEntries, "n1");
        assert!(other.records[..4].iter().all(|r| r.passed()));
        assert!(!other.all_passed());
        let w0_bad = w0.add(&M::from_fn(w0.dim(), |i, j| RatFunc::int((i + 1 == j) as i64)));
        assert!(!check_t_intertwiner(&k, &w0_bad, &w1, &kp, &km, AStarReading::Coefficients, "bad").all_passed());
    }
}
