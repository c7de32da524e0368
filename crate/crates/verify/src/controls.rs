//! Negative controls: each suite run on a deliberately broken input.

use qonsager_core::arith::{RatFunc, Sym};
use qonsager_core::comodule::{check_coaction_qdg, check_comodule_axioms, check_t_intertwiner, AStarReading};
use qonsager_core::currents::{
    check_aq_relations, check_current_relations, check_higher_relations, check_q_onsager, check_recomposition,
    check_reductions_printed_sign, phi_decompose, Perturbation,
};
use qonsager_core::reflection::{check_re, dress, expand_sixteen, KOperator, Provenance};
use qonsager_core::rep::rmatrix::perturbed_r;
use qonsager_core::rep::uq::check_r_intertwiner;
use qonsager_core::rep::{build_lax, check_rll, check_ybe, AuxMatrix, ChevalleyRep, OperatorMatrix, SpinRep};
use qonsager_core::report::Report;

use crate::config::Suite;
use crate::matrix::ModalBase;

/// The outcome of one control.
#[derive(Clone, Debug)]
pub struct Control {
    pub suite: Suite,
    pub perturbation: &'static str,
    pub report: Report,
}

impl Control {
    /// The control did its job: something failed, and every failure points at an entry or word.
    pub fn caught(&self) -> bool {
        let mut failures = self.report.failures().peekable();
        failures.peek().is_some() && failures.all(|f| f.is_located())
    }
}

/// `K = [[u^2, 1], [1, 1]]`, which does not solve the reflection equation.
pub fn broken_k() -> KOperator {
    let u2 = RatFunc::var_pow(Sym::U, 2);
    KOperator::new(
        AuxMatrix::scalars(u2, RatFunc::one(), RatFunc::one(), RatFunc::one()),
        Provenance::Seed("broken".into()),
    )
}

/// Adds `E_{01}`, which commutes with neither mode.
fn nudge(m: &OperatorMatrix) -> OperatorMatrix {
    m.add(&OperatorMatrix::unit(m.dim(), 0, 1))
}

fn control(suite: Suite, perturbation: &'static str, report: Report) -> Control {
    Control { suite, perturbation, report }
}

/// One control per concrete suite, on a one-site modal base.
pub fn run_controls() -> Vec<Control> {
    let base = ModalBase::build(&[1], 1).expect("one-site modal base");
    let s = &base.subject;
    let (w0, w1) = (base.w0(), base.w1());
    let kp = RatFunc::var(Sym::KP);
    let km = RatFunc::var(Sym::KM);
    let eu = ChevalleyRep::eval_at(Sym::U);
    let ev = ChevalleyRep::eval_at(Sym::V);
    let half = SpinRep::new(1);
    let mut out = Vec::new();

    out.push(control(Suite::Ybe, "R entry (1,2) replaced", std::iter::once(check_ybe(&|x| perturbed_r(x, 1, 2))).collect()));
    out.push(control(
        Suite::Rll,
        "R entry (1,2) replaced",
        std::iter::once(check_rll(&|x| build_lax(x, &half), &|x| perturbed_r(x, 1, 2), "2j=1")).collect(),
    ));
    out.push(control(Suite::RIntertwiner, "coproduct and opposite exchanged", check_r_intertwiner(true)));
    out.push(control(Suite::Re, "non-solution K", std::iter::once(check_re(&broken_k())).collect()));
    out.push(control(Suite::Sixteen, "non-solution K substituted", expand_sixteen().evaluate_in(&broken_k())));
    out.push(control(Suite::Theorem1, "printed X5 sign in (ii')", check_reductions_printed_sign()));

    let dressed = dress(&KOperator::identity(), &half, Sym::W);
    let mut c = phi_decompose(&dressed, &kp, &km).expect("dressed identity decomposes");
    c.wp = c.wp.add(&OperatorMatrix::scalar(c.dim(), RatFunc::var(Sym::U)));
    out.push(control(Suite::Currents, "W+ shifted by u", check_current_relations(&c, "shifted")));

    let mut t = base.table.clone();
    t.wneg[1] = nudge(&t.wneg[1]);
    out.push(control(Suite::Modes, "W_-1 nudged", check_recomposition(&base.currents, &t, "nudged")));
    out.push(control(Suite::Aq, "G and G~ swapped in qo2", check_aq_relations(&base.table, 1, 1, Perturbation::SwapGInQo2)));
    let mut t = base.table.clone();
    t.wpos[1] = nudge(&t.wpos[1]);
    out.push(control(Suite::Higher, "W_2 nudged", check_higher_relations(&t, 1, 1)));
    out.push(control(Suite::Qdg, "W_0 nudged", check_q_onsager(&nudge(w0), w1, &base.table.rho, "nudged")));
    out.push(control(
        Suite::Coaction,
        "W_0 nudged in the base",
        check_coaction_qdg((&nudge(w0), w1), &eu, &s.kplus, &s.kminus, "nudged"),
    ));
    out.push(control(
        Suite::Comodule,
        "opposite coproduct",
        check_comodule_axioms((w0, w1), &eu, &ev, &s.kplus, &s.kminus, true),
    ));
    out.push(control(
        Suite::TIntertwiner,
        "W_0 nudged",
        check_t_intertwiner(&s.k, &nudge(w0), w1, &s.kplus, &s.kminus, AStarReading::Coefficients, "nudged"),
    ));
    let mut scalar = Report::default();
    scalar.push(check_re(&broken_k()));
    out.push(control(Suite::ScalarK, "non-solution scalar K", scalar));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn broken_k_is_broken() {
        assert!(!check_re(&broken_k()).passed());
    }

    #[test]
    fn every_suite_catches_its_control() {
        let controls = run_controls();
        assert_eq!(controls.iter().map(|c| c.suite).collect::<Vec<_>>(), Suite::EACH.to_vec());
        for c in &controls {
            assert!(c.caught(), "{} survived {}", c.suite, c.perturbation);
        }
    }
}
