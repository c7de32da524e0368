//! Currents `W_±(u)`, `G_±(u)` of a K-operator, their relations, and the
//! mode expansion in `1/U`.

mod modes;
mod reduction;
mod relations;

use alloc::format;

use crate::arith::{series_expand, ArithError, Monomial, RatFunc, Rational, Sym};
use crate::reflection::{KOperator, Provenance};
use crate::rep::{AuxMatrix, OperatorMatrix};
use crate::report::CheckRecord;
use crate::scalars::{a_of, a_plus_of, q, q_minus, q_plus};

pub use modes::{
    build_g1, check_aq_relations, check_degree_membership, check_higher_relations, check_q_onsager,
    check_recomposition, extract_modes, recover_alpha, ModeTable, Perturbation,
};
pub use reduction::{check_reductions, check_reductions_printed_sign, x_combinations, y_combinations};
pub use relations::{check_current_relations, current_relation_ids};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CurrentError {
    #[error("k_+ and k_- must be nonzero")]
    ZeroK,
    #[error("leading term of {0} is not a scalar multiple of the identity")]
    NonScalarLeading(&'static str),
    #[error("{0} has no leading term at u = ∞")]
    NoLeadingTerm(&'static str),
    #[error("order must be at least 1")]
    Order,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// `W_±(u)`, `G_±(u)` as matrices over the quantum space, with the constants `k_±`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurrentQuadruple {
    pub wp: OperatorMatrix,
    pub wm: OperatorMatrix,
    pub gp: OperatorMatrix,
    pub gm: OperatorMatrix,
    pub kplus: RatFunc,
    pub kminus: RatFunc,
}

impl CurrentQuadruple {
    /// Zero currents on a space of dimension `dim`.
    pub fn zero(dim: usize, kplus: RatFunc, kminus: RatFunc) -> Self {
        let z = OperatorMatrix::zero(dim);
        CurrentQuadruple { wp: z.clone(), wm: z.clone(), gp: z.clone(), gm: z, kplus, kminus }
    }

    pub fn dim(&self) -> usize {
        self.wp.dim()
    }

    /// `rho = k_+ k_- (q + q^{-1})^2`.
    pub fn rho(&self) -> RatFunc {
        let qp = q_plus();
        &(&self.kplus * &self.kminus) * &(&qp * &qp)
    }

    /// All four currents with `u` replaced by `x`.
    pub fn at(&self, x: &Monomial) -> Result<Self, ArithError> {
        let img = [(Sym::U, *x)];
        Ok(CurrentQuadruple {
            wp: self.wp.map_monomials(&img)?,
            wm: self.wm.map_monomials(&img)?,
            gp: self.gp.map_monomials(&img)?,
            gm: self.gm.map_monomials(&img)?,
            kplus: self.kplus.clone(),
            kminus: self.kminus.clone(),
        })
    }

    /// The automorphism exchanging `W_+ <-> W_-`, `G_+ <-> G_-`.
    ///
    /// `k_±` are exchanged as well so that `phi_compose` stays consistent.
    pub fn omega(&self) -> Self {
        CurrentQuadruple {
            wp: self.wm.clone(),
            wm: self.wp.clone(),
            gp: self.gm.clone(),
            gm: self.gp.clone(),
            kplus: self.kminus.clone(),
            kminus: self.kplus.clone(),
        }
    }
}

/// `k_±(q + q^{-1})/(q - q^{-1})`, the constant part of `B` resp. `C`.
fn shift(k: &RatFunc) -> RatFunc {
    &(k * &q_plus()) / &q_minus()
}

/// `A, B, C, D` from the currents.
pub fn phi_compose(c: &CurrentQuadruple) -> Result<KOperator, CurrentError> {
    if c.kplus.is_zero() || c.kminus.is_zero() {
        return Err(CurrentError::ZeroK);
    }
    let uq = &RatFunc::var(Sym::U) * &q();
    let uqi = uq.inv()?;
    let d = c.dim();
    let qp = q_plus();
    let a = c.wp.scale(&uq).sub(&c.wm.scale(&uqi));
    let dd = c.wm.scale(&uq).sub(&c.wp.scale(&uqi));
    let b = c
        .gp
        .scale(&(&c.kminus * &qp).inv()?)
        .add(&OperatorMatrix::scalar(d, shift(&c.kplus)));
    let cc = c
        .gm
        .scale(&(&c.kplus * &qp).inv()?)
        .add(&OperatorMatrix::scalar(d, shift(&c.kminus)));
    Ok(KOperator::new(AuxMatrix::new(a, b, cc, dd), Provenance::Seed("composed".into())))
}

/// Inverts the decomposition for given `k_±`.
pub fn phi_decompose(k: &KOperator, kplus: &RatFunc, kminus: &RatFunc) -> Result<CurrentQuadruple, CurrentError> {
    if kplus.is_zero() || kminus.is_zero() {
        return Err(CurrentError::ZeroK);
    }
    let u = Monomial::var(Sym::U);
    let am = RatFunc::from(a_of(&u)).inv()?;
    let ap = RatFunc::from(a_plus_of(&u)).inv()?;
    let half = RatFunc::constant(Rational::new(1, 2));
    let (a, b, c, d) = (k.a(), k.b(), k.c(), k.d());
    let dim = k.dim();
    let sum = a.add(d).scale(&am);
    let diff = a.sub(d).scale(&ap);
    let wp = sum.add(&diff).scale(&half);
    let wm = sum.sub(&diff).scale(&half);
    let qp = q_plus();
    let gp = b.sub(&OperatorMatrix::scalar(dim, shift(kplus))).scale(&(kminus * &qp));
    let gm = c.sub(&OperatorMatrix::scalar(dim, shift(kminus))).scale(&(kplus * &qp));
    Ok(CurrentQuadruple { wp, wm, gp, gm, kplus: kplus.clone(), kminus: kminus.clone() })
}

/// Leading coefficient of `m` at `u = ∞`, as a multiple of `U^{e/2}`.
fn leading_scalar(m: &OperatorMatrix, name: &'static str) -> Result<RatFunc, CurrentError> {
    let mut top: Option<i32> = None;
    let mut series = alloc::vec::Vec::with_capacity(m.entries().len());
    for e in m.entries() {
        let s = if e.is_zero() { None } else { Some(series_expand(e, Sym::U, 1)?) };
        if let Some(t) = s.as_ref().and_then(|s| s.top()) {
            top = Some(top.map_or(t, |x: i32| x.max(t)));
        }
        series.push(s);
    }
    let t = top.ok_or(CurrentError::NoLeadingTerm(name))?;
    let lead = OperatorMatrix::from_fn(m.dim(), |i, j| {
        series[i * m.dim() + j].as_ref().and_then(|s| s.coeff(t)).unwrap_or_default()
    });
    let c = lead.as_scalar().ok_or(CurrentError::NonScalarLeading(name))?;
    if t % 2 != 0 {
        return Err(CurrentError::NonScalarLeading(name));
    }
    // u^{2m} = ((q + q^{-1})/q)^m U^m + lower
    let ratio = &q_plus() / &q();
    Ok(&c * &ratio.pow(t / 2)?)
}

/// `k_± = (q - q^{-1})/(q + q^{-1})` times the leading scalar of `B` resp. `C`.
pub fn infer_kpm(k: &KOperator) -> Result<(RatFunc, RatFunc), CurrentError> {
    let f = &q_minus() / &q_plus();
    let kp = &leading_scalar(k.b(), "B")? * &f;
    let km = &leading_scalar(k.c(), "C")? * &f;
    Ok((kp, km))
}

/// Decomposes and recomposes `K`, checking that the round trip is the identity.
pub fn check_lemma_decomposition(k: &KOperator, kplus: &RatFunc, kminus: &RatFunc) -> CheckRecord {
    let id = format!("lemma[{}]", k.label());
    let back = phi_decompose(k, kplus, kminus).and_then(|c| phi_compose(&c));
    match back {
        Ok(k2) => match k.k.first_difference(&k2.k) {
            None => CheckRecord::pass("lemma", &id),
            Some((a, b, m)) => {
                let mut r = CheckRecord::fail("lemma", &id, format!("aux entry ({a}, {b})"));
                r.counterexample = Some(m);
                r
            }
        },
        Err(e) => CheckRecord::fail("lemma", &id, format!("{e}")),
    }
}
