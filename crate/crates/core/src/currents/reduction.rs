//! Rewriting the reflection-equation relations in terms of the currents,
//! over the free algebra.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{Monomial, RatFunc, Sym};
use crate::free::{Generator, NCPoly};
use crate::reflection::{transcribed_sixteen, SIXTEEN_LABELS};
use crate::report::{CheckRecord, Report};
use crate::rep::rmatrix::{product, ratio};
use crate::scalars::{a_of, b_of, big_u, q, q_minus, q_plus, rho_symbolic};

fn g(name: &str, s: Sym) -> NCPoly {
    NCPoly::gen(Generator::at(name, s))
}

fn com(a: &NCPoly, b: &NCPoly) -> NCPoly {
    NCPoly::commutator(a, b)
}

fn qcom(a: &NCPoly, b: &NCPoly) -> NCPoly {
    NCPoly::q_commutator(a, b, &q()).expect("q is nonzero")
}

fn r(m: &Monomial) -> RatFunc {
    crate::arith::LaurentPoly::monomial(*m, crate::arith::Rational::one()).into()
}

/// `u^i v^j q^k` as a scalar.
fn uvq(i: i32, j: i32, k: i32) -> RatFunc {
    r(&Monomial::from_pairs(&[(Sym::U, i), (Sym::V, j), (Sym::QH, 2 * k)]).expect("small exponents"))
}

/// Image of `A, B, C, D` at `x` under the current decomposition, with
/// symbolic `k_±`. With `keep_c`, `C` stays a generator.
fn phi_image(gen: &Generator, keep_c: bool) -> Option<NCPoly> {
    let x = gen.param()?;
    let xq = r(&Monomial::from_pairs(&[(x, 1), (Sym::QH, 2)]).ok()?);
    let xqi = xq.inv().ok()?;
    let (kp, km) = (RatFunc::var(Sym::KP), RatFunc::var(Sym::KM));
    let shift = |k: &RatFunc| NCPoly::scalar(&(k * &q_plus()) / &q_minus());
    Some(match gen.base() {
        "A" => g("W+", x).scale(&xq).sub(&g("W-", x).scale(&xqi)),
        "D" => g("W-", x).scale(&xq).sub(&g("W+", x).scale(&xqi)),
        "B" => g("G+", x).scale(&(&km * &q_plus()).inv().ok()?).add(&shift(&kp)),
        "C" if keep_c => g("C", x),
        "C" => g("G-", x).scale(&(&kp * &q_plus()).inv().ok()?).add(&shift(&km)),
        _ => return None,
    })
}

fn relation(label: &str) -> NCPoly {
    let i = SIXTEEN_LABELS.iter().position(|l| *l == label).expect("known label");
    transcribed_sixteen().swap_remove(i)
}

fn substituted(label: &str, keep_c: bool) -> NCPoly {
    relation(label)
        .substitute_hom(&|gen| phi_image(gen, keep_c), &NCPoly::one())
        .expect("every generator has an image")
}

/// `X_1 .. X_5`.
pub fn x_combinations() -> [NCPoly; 5] {
    let (u, v) = (Sym::U, Sym::V);
    let (wp, wm, gp, gm) = (g("W+", u), g("W-", u), g("G+", u), g("G-", u));
    let (wp1, wm1, gp1, gm1) = (g("W+", v), g("W-", v), g("G+", v), g("G-", v));
    let x1 = com(&wp, &wp1);
    let x2 = com(&wm, &wm1);
    let x3 = com(&wp, &wm1).add(&com(&wm, &wp1));
    let x4 = com(&gp, &gm1).add(&com(&gm, &gp1));
    let uv = &big_u(u) - &big_u(v);
    let x5 = com(&wp, &wm1)
        .scale(&(&q_plus() * &uv))
        .sub(&gp.mul(&gm1).sub(&gp1.mul(&gm)).scale(&(&q_minus() / &rho_symbolic())))
        .sub(&gp.sub(&gm).add(&gm1).sub(&gp1));
    [x1, x2, x3, x4, x5]
}

/// `Y_1 .. Y_4`, written with `C` itself.
pub fn y_combinations() -> [NCPoly; 4] {
    let (u, v) = (Sym::U, Sym::V);
    let (wp, wm, c) = (g("W+", u), g("W-", u), g("C", u));
    let (wp1, wm1, c1) = (g("W+", v), g("W-", v), g("C", v));
    let (bu, bv) = (big_u(u), big_u(v));
    let y1 = qcom(&c1, &wp)
        .scale(&bu)
        .sub(&qcom(&c, &wp1).scale(&bv))
        .add(&wm1.mul(&c).sub(&wm.mul(&c1)).scale(&q_minus()))
        .scale(&q_plus());
    let y2 = qcom(&wm, &c1)
        .scale(&bu)
        .sub(&qcom(&wm1, &c).scale(&bv))
        .add(&wp1.mul(&c).sub(&wp.mul(&c1)).scale(&q_minus()))
        .scale(&q_plus());
    let y3 = com(&c, &wp1).add(&com(&wp, &c1));
    let y4 = com(&c, &wm1).add(&com(&wm, &c1));
    [y1, y2, y3, y4]
}

fn lin(terms: &[(RatFunc, &NCPoly)]) -> NCPoly {
    terms.iter().fold(NCPoly::zero(), |acc, (c, p)| acc.add(&p.scale(c)))
}

/// The right-hand sides of the four X-form equivalences, keyed by relation label.
fn x_forms() -> Vec<(&'static str, NCPoly)> {
    x_forms_with(RatFunc::one())
}

/// `x5_sign` multiplies the `X_5` term of the `(ii')` form, which enters with `+a(uv)`.
fn x_forms_with(x5_sign: RatFunc) -> Vec<(&'static str, NCPoly)> {
    let [x1, x2, x3, x4, x5] = x_combinations();
    let ap = RatFunc::from(a_of(&product(Sym::U, Sym::V)));
    let bb = &RatFunc::from(b_of(&ratio(Sym::U, Sym::V))) * &RatFunc::from(b_of(&product(Sym::U, Sym::V)));
    let c2 = &q_minus() * &q_minus();
    let k4 = &q_minus() / &rho_symbolic();
    let one = RatFunc::one();
    let m1 = -&one;
    let i = lin(&[
        (&ap * &uvq(1, 1, 2), &x1),
        (&ap * &uvq(-1, -1, -2), &x2),
        (-&(&ap * &uvq(-1, 1, 0)), &x3),
        (m1.clone(), &x5),
    ]);
    let ip = lin(&[
        (&ap * &uvq(1, 1, 2), &x2),
        (&ap * &uvq(-1, -1, -2), &x1),
        (-&(&ap * &uvq(1, -1, 0)), &x3),
        (k4.clone(), &x4),
        (one.clone(), &x5),
    ]);
    let ii = lin(&[
        (&(&bb * &uvq(1, -1, 0)) - &(&c2 * &uvq(-1, -1, -2)), &x1),
        (&(&bb * &uvq(-1, 1, 0)) - &(&c2 * &uvq(1, 1, 2)), &x2),
        (-&(&(&bb * &uvq(-1, -1, -2)) - &(&c2 * &uvq(1, -1, 0))), &x3),
        (-&(&ap * &k4), &x4),
        (-&ap, &x5),
    ]);
    let iip = lin(&[
        (&(&bb * &uvq(-1, 1, 0)) - &(&c2 * &uvq(1, 1, 2)), &x1),
        (&(&bb * &uvq(1, -1, 0)) - &(&c2 * &uvq(-1, -1, -2)), &x2),
        (-&(&(&bb * &uvq(1, 1, 2)) - &(&c2 * &uvq(-1, 1, 0))), &x3),
        (&ap * &x5_sign, &x5),
    ]);
    alloc::vec![("i", i), ("i'", ip), ("ii", ii), ("ii'", iip)]
}

fn y_forms() -> Vec<(&'static str, NCPoly)> {
    let [y1, y2, y3, y4] = y_combinations();
    let (qq, qi) = (q(), q().inv().expect("nonzero"));
    let vv = RatFunc::from(&crate::arith::LaurentPoly::var_pow(Sym::V, 2) + &crate::arith::LaurentPoly::var_pow(Sym::V, -2));
    let c = q_minus();
    let qp = q_plus();
    let bu = big_u(Sym::U);
    let q2m = &c * &qp;
    let (u1, ui) = (uvq(1, 0, 0), uvq(-1, 0, 0));
    let (v1, vi) = (uvq(0, 1, 0), uvq(0, -1, 0));
    let iv = lin(&[
        (&u1 * &qq, &y1),
        (&u1 * &(&qq * &vv), &y3),
        (&u1 * &c, &y4),
        (&ui * &qi, &y2),
        (-&(&ui * &(&qi * &vv)), &y4),
        (&ui * &c, &y3),
    ]);
    let vi_ = lin(&[
        (&u1 * &qq, &y2),
        (-&(&u1 * &(&qq * &vv)), &y4),
        (&u1 * &(&(&qq * &qq) * &c), &y3),
        (&ui * &qi, &y1),
        (&ui * &(&qi * &vv), &y3),
        (&ui * &(&(&qi * &qi) * &c), &y4),
    ]);
    let x = lin(&[
        (v1.clone(), &y2),
        (-&(&v1 * &(&(&qq * &qp) * &bu)), &y4),
        (&v1 * &q2m, &y3),
        (vi.clone(), &y1),
        (&vi * &(&(&qi * &qp) * &bu), &y3),
        (&vi * &q2m, &y4),
    ]);
    let xi = lin(&[
        (v1.clone(), &y1),
        (&v1 * &(&(&qq * &qp) * &bu), &y3),
        (vi.clone(), &y2),
        (-&(&vi * &(&(&qi * &qp) * &bu)), &y4),
    ]);
    alloc::vec![("iv", iv), ("vi", vi_), ("x", x), ("xi", xi)]
}

fn proportional(suite: &str, id: &str, a: &NCPoly, b: &NCPoly) -> CheckRecord {
    match a.proportional_check(b) {
        Some(s) => CheckRecord::pass(suite, id).with_scalar(s),
        None => {
            let rec = CheckRecord::fail(suite, id, format!("not proportional ({} vs {} terms)", a.len(), b.len()));
            match a.disproportion(b) {
                Some((w, l, r)) => rec.with_word_mismatch(format!("{w}"), l, r),
                None => rec,
            }
        }
    }
}

/// Each equivalence in the proof of the current relations, as proportionality
/// of free-algebra elements, plus the two simplifications and antisymmetry of
/// `X_1, X_2, X_3` under `u <-> v`.
pub fn check_reductions() -> Report {
    check_reductions_with(&x_forms(), &y_forms())
}

/// The same checks with `(ii')` taken with `-a(uv) X_5` as displayed in print,
/// which does not reduce.
pub fn check_reductions_printed_sign() -> Report {
    check_reductions_with(&x_forms_with(-RatFunc::one()), &y_forms())
}

fn check_reductions_with(xf: &[(&'static str, NCPoly)], yf: &[(&'static str, NCPoly)]) -> Report {
    let suite = "reductions";
    let mut out = Report::default();
    for (label, form) in xf {
        out.push(proportional(suite, &format!("({label})X"), &substituted(label, false), form));
    }
    for (label, form) in yf {
        out.push(proportional(suite, &format!("({label})Y"), &substituted(label, true), form));
    }
    let ap = RatFunc::from(a_of(&product(Sym::U, Sym::V)));
    let [x1, x2, x3, ..] = x_combinations();
    let target1 = lin(&[(uvq(0, 2, 2), &x1), (uvq(0, -2, -2), &x2), (-RatFunc::one(), &x3)]);
    let target2 = lin(&[(uvq(0, 2, 2), &x2), (uvq(0, -2, -2), &x1), (-RatFunc::one(), &x3)]);
    // (i), (i') in their X-form normalization, i.e. divided by a(u/v); (ii), (ii') as listed
    let am = RatFunc::from(a_of(&ratio(Sym::U, Sym::V)));
    let f = &ap / &am;
    let combo1 = substituted("i", false).scale(&f).sub(&substituted("ii'", false));
    let combo2 = substituted("i'", false).scale(&f).sub(&substituted("ii", false));
    out.push(proportional(suite, "a(uv)(i)-(ii')", &combo1, &target1));
    out.push(proportional(suite, "a(uv)(i')-(ii)", &combo2, &target2));
    for (i, x) in [x1, x2, x3].iter().enumerate() {
        let id: String = format!("X{}-antisym", i + 1);
        let rec = match x.swap_params(Sym::U, Sym::V) {
            Ok(s) if s.add(x).is_zero() => CheckRecord::pass(suite, &id),
            Ok(s) => {
                let rec = CheckRecord::fail(suite, &id, "X + X|u<->v is nonzero");
                match s.add(x).terms().next() {
                    Some((w, c)) => rec.with_word_mismatch(format!("{w}"), c.clone(), RatFunc::zero()),
                    None => rec,
                }
            }
            Err(e) => CheckRecord::fail(suite, &id, format!("{e}")),
        };
        out.push(rec);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_reduction_holds() {
        let r = check_reductions();
        if let Some(rec) = r.failures().next() {
            panic!("{} failed: {:?}", rec.relation_id, rec.note);
        }
        assert_eq!(r.records.len(), 13);
        // (i) is (i) divided by a(u/v)
        let am = RatFunc::from(a_of(&ratio(Sym::U, Sym::V)));
        assert_eq!(r.get("(i)X").unwrap().scalar_found.as_ref(), Some(&am));
    }

    #[test]
    fn x5_sign_in_ii_prime_matters() {
        let r = check_reductions_printed_sign();
        assert!(!r.get("(ii')X").unwrap().passed());
        assert!(r.get("(ii')X").unwrap().is_located());
        assert!(r.get("(i)X").unwrap().passed());
    }

    #[test]
    fn y_form_with_extra_term_fails() {
        let mut yf = y_forms();
        let [_, _, y3, _] = y_combinations();
        yf[3].1 = yf[3].1.add(&y3);
        let r = check_reductions_with(&x_forms(), &yf);
        assert!(!r.get("(xi)Y").unwrap().passed());
    }
}
