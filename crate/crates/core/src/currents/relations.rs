//! The exchange relations between `W_±(u)`, `G_±(u)` and their copies at `v`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{Monomial, RatFunc, Sym};
use crate::rep::OperatorMatrix;
use crate::report::{CheckRecord, Report};
use crate::scalars::{big_u, q, q_minus, q_plus};

use super::CurrentQuadruple;

type M = OperatorMatrix;

fn com(a: &M, b: &M) -> M {
    M::commutator(a, b)
}

/// Currents at `u` and `v` plus the scalars every relation needs.
struct Ctx<'a> {
    u: &'a CurrentQuadruple,
    v: CurrentQuadruple,
    bu: RatFunc,
    bv: RatFunc,
    rho: RatFunc,
    q: RatFunc,
}

impl Ctx<'_> {
    fn w(c: &CurrentQuadruple, plus: bool) -> &M {
        if plus { &c.wp } else { &c.wm }
    }
    fn g(c: &CurrentQuadruple, plus: bool) -> &M {
        if plus { &c.gp } else { &c.gm }
    }

    fn ec1(&self, s: bool) -> M {
        com(Self::w(self.u, s), Self::w(&self.v, s))
    }

    fn ec3(&self) -> M {
        com(&self.u.wp, &self.v.wm).add(&com(&self.u.wm, &self.v.wp))
    }

    fn ec4(&self, s: bool) -> M {
        let (u, v) = (self.u, &self.v);
        let k = &q_minus() / &(&self.rho * &q_plus());
        let lhs = com(Self::w(u, s), Self::w(v, !s)).scale(&(&self.bu - &self.bv));
        let gg = Self::g(u, s).mul(Self::g(v, !s)).sub(&Self::g(v, s).mul(Self::g(u, !s)));
        let lin = Self::g(u, s).sub(Self::g(u, !s)).add(Self::g(v, !s)).sub(Self::g(v, s));
        lhs.sub(&gg.scale(&k)).sub(&lin.scale(&q_plus().inv().expect("nonzero")))
    }

    /// Multiplied through by `U - V`.
    fn ec5(&self, s: bool) -> M {
        let (u, v) = (self.u, &self.v);
        let q2 = &(&self.q * &self.q) - &(&self.q * &self.q).inv().expect("nonzero");
        let k = (&self.rho * &q2).inv().expect("nonzero rho");
        let first = Self::w(u, s)
            .mul(Self::w(v, s))
            .sub(&Self::w(u, !s).mul(Self::w(v, !s)))
            .add(&com(Self::g(u, s), Self::g(v, !s)).scale(&k));
        let second = Self::w(u, s).mul(Self::w(v, !s)).sub(&Self::w(v, s).mul(Self::w(u, !s)));
        let one_uv = &RatFunc::one() - &(&self.bu * &self.bv);
        first.scale(&(&self.bu - &self.bv)).add(&second.scale(&one_uv))
    }

    fn ec6(&self, s: bool) -> M {
        let (u, v) = (self.u, &self.v);
        let qc = |a: &M, b: &M| M::q_commutator(a, b, &self.q);
        let t1 = qc(Self::g(v, !s), Self::w(u, s)).scale(&self.bu);
        let t2 = qc(Self::g(u, !s), Self::w(v, s)).scale(&self.bv);
        let t3 = Self::w(u, !s).mul(Self::g(v, !s)).sub(&Self::w(v, !s).mul(Self::g(u, !s))).scale(&q_minus());
        let t4 = Self::w(u, s)
            .scale(&self.bu)
            .sub(&Self::w(v, s).scale(&self.bv))
            .sub(Self::w(u, !s))
            .add(Self::w(v, !s))
            .scale(&self.rho);
        t1.sub(&t2).sub(&t3).add(&t4)
    }

    fn ec7(&self, s: bool) -> M {
        let (u, v) = (self.u, &self.v);
        let qc = |a: &M, b: &M| M::q_commutator(a, b, &self.q);
        let t1 = qc(Self::w(u, !s), Self::g(v, !s)).scale(&self.bu);
        let t2 = qc(Self::w(v, !s), Self::g(u, !s)).scale(&self.bv);
        let t3 = Self::w(u, s).mul(Self::g(v, !s)).sub(&Self::w(v, s).mul(Self::g(u, !s))).scale(&q_minus());
        let t4 = Self::w(u, !s)
            .scale(&self.bu)
            .sub(&Self::w(v, !s).scale(&self.bv))
            .sub(Self::w(u, s))
            .add(Self::w(v, s))
            .scale(&self.rho);
        t1.sub(&t2).sub(&t3).add(&t4)
    }

    fn ec8(&self, eps: bool, s: bool) -> M {
        let (u, v) = (self.u, &self.v);
        com(Self::g(u, eps), Self::w(v, s)).add(&com(Self::w(u, s), Self::g(v, eps)))
    }

    fn ec9(&self, s: bool) -> M {
        com(Self::g(self.u, s), Self::g(&self.v, s))
    }

    fn ec16(&self) -> M {
        com(&self.u.gp, &self.v.gm).add(&com(&self.u.gm, &self.v.gp))
    }

    fn residual(&self, id: &str) -> Option<M> {
        let sign = |c: u8| c == b'+';
        let b = id.as_bytes();
        let last = *b.last()?;
        Some(match id {
            "ec3" => self.ec3(),
            "ec16" => self.ec16(),
            _ if id.starts_with("ec8") => self.ec8(sign(b[5]), sign(last)),
            _ => {
                let s = sign(last);
                match &id[..id.len() - 1] {
                    "ec1" => self.ec1(s),
                    "ec4" => self.ec4(s),
                    "ec5" => self.ec5(s),
                    "ec6" => self.ec6(s),
                    "ec7" => self.ec7(s),
                    "ec9" => self.ec9(s),
                    _ => return None,
                }
            }
        })
    }
}

/// Every sign branch, in report order. `ec8[e±]±` carries `epsilon` first.
pub fn current_relation_ids() -> Vec<String> {
    let mut out = Vec::new();
    for s in ["+", "-"] {
        out.push(format!("ec1{s}"));
    }
    out.push("ec3".into());
    for f in ["ec4", "ec5", "ec6", "ec7"] {
        for s in ["+", "-"] {
            out.push(format!("{f}{s}"));
        }
    }
    for e in ["+", "-"] {
        for s in ["+", "-"] {
            out.push(format!("ec8[e{e}]{s}"));
        }
    }
    for s in ["+", "-"] {
        out.push(format!("ec9{s}"));
    }
    out.push("ec16".into());
    out
}

/// All current relations as exact identities in `u`, `v`; `ec5` is checked
/// multiplied by `U - V`.
pub fn check_current_relations(c: &CurrentQuadruple, label: &str) -> Report {
    let v = match c.at(&Monomial::var(Sym::V)) {
        Ok(v) => v,
        Err(e) => return core::iter::once(CheckRecord::fail("currents", "setup", format!("{e}"))).collect(),
    };
    let ctx = Ctx { u: c, v, bu: big_u(Sym::U), bv: big_u(Sym::V), rho: c.rho(), q: q() };
    current_relation_ids()
        .iter()
        .map(|id| {
            let rid = format!("{id}[{label}]");
            match ctx.residual(id) {
                Some(m) => CheckRecord::vanishes("currents", &rid, &m),
                None => CheckRecord::fail("currents", &rid, "unknown relation"),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::currents::{infer_kpm, phi_decompose};
    use crate::reflection::{dress, normalized, seeds, KOperator};
    use crate::rep::SpinRep;

    fn sym_k() -> (RatFunc, RatFunc) {
        (RatFunc::var(Sym::KP), RatFunc::var(Sym::KM))
    }

    fn assert_all(r: &Report) {
        if let Some(f) = r.failures().next() {
            panic!("{} failed: {:?}", f.relation_id, f.counterexample);
        }
    }

    #[test]
    fn eighteen_branches() {
        assert_eq!(current_relation_ids().len(), 18);
    }

    #[test]
    fn zero_currents_pass() {
        let (kp, km) = sym_k();
        assert_all(&check_current_relations(&CurrentQuadruple::zero(2, kp, km), "zero"));
    }

    #[test]
    fn scalar_seeds_pass_with_symbolic_k() {
        let (kp, km) = sym_k();
        for k in [KOperator::identity(), seeds::nondiagonal(), seeds::diagonal(), seeds::nondiagonal_odd()] {
            let c = phi_decompose(&k, &kp, &km).unwrap();
            assert_all(&check_current_relations(&c, &k.label()));
        }
    }

    #[test]
    fn dressed_identity_passes() {
        let (kp, km) = sym_k();
        let k = dress(&KOperator::identity(), &SpinRep::new(1), Sym::W);
        assert_all(&check_current_relations(&phi_decompose(&k, &kp, &km).unwrap(), "id+1"));
    }

    #[test]
    fn dressed_modal_passes_with_inferred_k() {
        let k = normalized(&dress(&seeds::mode_compatible(), &SpinRep::new(1), Sym::W));
        let (kp, km) = infer_kpm(&k).unwrap();
        let c = phi_decompose(&k, &kp, &km).unwrap();
        assert_all(&check_current_relations(&c, "modal+1"));
        assert_all(&check_current_relations(&c.omega(), "omega"));
    }

    #[test]
    fn perturbed_w_fails() {
        let (kp, km) = sym_k();
        let k = dress(&KOperator::identity(), &SpinRep::new(1), Sym::W);
        let mut c = phi_decompose(&k, &kp, &km).unwrap();
        c.wp = c.wp.add(&OperatorMatrix::scalar(2, RatFunc::var(Sym::U)));
        let r = check_current_relations(&c, "bad");
        let f = r.failures().next().expect("some relation fails");
        assert!(f.counterexample.is_some());
    }
}
