//! One function per suite; `run` dispatches them over a small worker pool.

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Mutex, OnceLock};

use qonsager_core::arith::{RatFunc, Rational, Sym};
use qonsager_core::comodule::{
    check_coaction_qdg, check_comodule_axioms, check_cond_k, check_dressing_consistency, check_spin_zero,
    check_t_intertwiner, delta_w_currents, AStarReading,
};
use qonsager_core::currents::{
    check_aq_relations, check_current_relations, check_degree_membership, check_higher_relations,
    check_lemma_decomposition, check_q_onsager, check_recomposition, check_reductions, phi_decompose, Perturbation,
};
use qonsager_core::reflection::{check_re, expand_sixteen, seeds, solve_scalar_k, specializes_to, KOperator};
use qonsager_core::rep::uq::check_r_intertwiner;
use qonsager_core::rep::{build_lax, build_r, check_rll, check_ybe, Chevalley, ChevalleyRep, SpinRep};
use qonsager_core::report::{CheckRecord, Report, Status};

use crate::config::{Suite, SuiteConfig};
use crate::matrix::{quantum_dim, re_subjects, seed_operator, MatrixError, ModalBase, Subject};

/// Shared, lazily built inputs of one run.
pub struct Context<'a> {
    pub cfg: &'a SuiteConfig,
    modal: OnceLock<Result<ModalBase, String>>,
    subjects: OnceLock<Result<Vec<Subject>, String>>,
}

impl<'a> Context<'a> {
    pub fn new(cfg: &'a SuiteConfig) -> Self {
        Context { cfg, modal: OnceLock::new(), subjects: OnceLock::new() }
    }

    fn modal(&self) -> Result<&ModalBase, String> {
        self.modal
            .get_or_init(|| ModalBase::build(&self.cfg.site_spins(), self.cfg.order).map_err(|e| e.to_string()))
            .as_ref()
            .map_err(Clone::clone)
    }

    fn subjects(&self) -> Result<&[Subject], String> {
        self.subjects
            .get_or_init(|| re_subjects(self.cfg).map_err(|e: MatrixError| e.to_string()))
            .as_deref()
            .map_err(Clone::clone)
    }
}

fn setup_failure(suite: Suite, e: impl std::fmt::Display) -> Report {
    std::iter::once(CheckRecord::fail(suite.name(), "setup", e.to_string())).collect()
}

fn cap_exceeded(suite: Suite, dim: usize, max: usize) -> Report {
    let mut r = CheckRecord::new(suite.name(), "cap", Status::CapExceeded);
    r.note = Some(format!("operator dimension {dim} exceeds the cap {max}"));
    std::iter::once(r).collect()
}

fn relabel(mut r: Report, suite: Suite) -> Report {
    for rec in &mut r.records {
        rec.suite = suite.name().into();
    }
    r
}

fn trivial_base_note(suite: Suite, m: &ModalBase) -> Option<CheckRecord> {
    m.is_trivial()
        .then(|| CheckRecord::pass(suite.name(), "trivial-base").with_note("W0 and W1 commute; relations hold vacuously"))
}

fn ybe() -> Report {
    std::iter::once(check_ybe(&build_r)).collect()
}

fn rll(cfg: &SuiteConfig) -> Report {
    let spins: BTreeSet<u32> = cfg.spins.iter().copied().collect();
    spins
        .into_iter()
        .map(|s| {
            let rep = SpinRep::new(s);
            check_rll(&|x| build_lax(x, &rep), &build_r, &format!("2j={s}"))
        })
        .collect()
}

fn re(ctx: &Context) -> Report {
    match ctx.subjects() {
        Ok(s) => s.iter().map(|s| check_re(&s.k)).collect(),
        Err(e) => setup_failure(Suite::Re, e),
    }
}

fn sixteen(ctx: &Context) -> Report {
    let six = expand_sixteen();
    let mut out = six.report();
    match seed_operator(ctx.cfg.seed) {
        Ok(k) => out.extend(six.evaluate_in(&k)),
        Err(e) => out.push(CheckRecord::fail("sixteen", "seed", e.to_string())),
    }
    out.extend(six.evaluate_in(&seeds::nondiagonal()));
    relabel(out, Suite::Sixteen)
}

fn currents(ctx: &Context) -> Report {
    let subjects = match ctx.subjects() {
        Ok(s) => s,
        Err(e) => return setup_failure(Suite::Currents, e),
    };
    let mut out = Report::default();
    for s in subjects {
        out.push(check_lemma_decomposition(&s.k, &s.kplus, &s.kminus));
        match phi_decompose(&s.k, &s.kplus, &s.kminus) {
            Ok(c) => out.extend(check_current_relations(&c, &s.label)),
            Err(e) => out.push(CheckRecord::fail("currents", &format!("decompose[{}]", s.label), e.to_string())),
        }
    }
    relabel(out, Suite::Currents)
}

fn with_modal(ctx: &Context, suite: Suite, f: impl FnOnce(&ModalBase) -> Report) -> Report {
    match ctx.modal() {
        Ok(m) => {
            let mut out = Report::default();
            out.extend(trivial_base_note(suite, m).into_iter().collect());
            out.extend(relabel(f(m), suite));
            out
        }
        Err(e) => setup_failure(suite, e),
    }
}

/// Arbitrary distinct values for every symbol but `q`.
fn point(qh: Rational) -> impl Fn(Sym) -> Option<Rational> {
    move |s: Sym| {
        Some(match s {
            Sym::QH => qh.clone(),
            _ => Rational::new(s.index() as i64 + 2, 3),
        })
    }
}

fn qdg(ctx: &Context) -> Report {
    let cfg = ctx.cfg;
    let mut out = with_modal(ctx, Suite::Qdg, |m| {
        let mut r = check_q_onsager(m.w0(), m.w1(), &m.table.rho, &m.subject.label);
        if let Some(qv) = &cfg.numeric_q {
            match qv.sqrt_exact() {
                Some(qh) => r.extend(check_degree_membership(&m.table, cfg.order.min(2), &point(qh))),
                None => r.push(CheckRecord::fail("degree", "numeric-q", "q must be the square of a rational")),
            }
        }
        r
    });
    // rho = 0: the q-Serre relations for coproduct images
    let uv = ChevalleyRep::tensor(&ChevalleyRep::eval_at(Sym::U), &ChevalleyRep::eval_at(Sym::V), false);
    let zero = RatFunc::zero();
    let (e0, e1) = (uv.image(Chevalley::E(0)), uv.image(Chevalley::E(1)));
    let (f0, f1) = (uv.image(Chevalley::F(0)), uv.image(Chevalley::F(1)));
    out.extend(relabel(check_q_onsager(&e1, &e0, &zero, "serre-E"), Suite::Qdg));
    out.extend(relabel(check_q_onsager(&f1, &f0, &zero, "serre-F"), Suite::Qdg));
    out
}

fn coaction(ctx: &Context) -> Report {
    let cfg = ctx.cfg;
    let mut out = Report::default();
    let kp = RatFunc::var(Sym::KP);
    let km = RatFunc::var(Sym::KM);
    let seed = match seed_operator(cfg.seed) {
        Ok(k) => k,
        Err(e) => return setup_failure(Suite::Coaction, e),
    };
    let mut bases = vec![seed, seeds::nondiagonal()];
    bases.dedup_by_key(|k| k.label());
    for k in &bases {
        match phi_decompose(k, &kp, &km) {
            Ok(c) => {
                out.extend(check_spin_zero(&c, Sym::W));
                let img = delta_w_currents(&c, &SpinRep::new(1), Sym::W);
                out.extend(check_current_relations(&img, &format!("delta_w({})", k.label())));
            }
            Err(e) => out.push(CheckRecord::fail("coaction", "decompose", e.to_string())),
        }
        let mut spins: BTreeSet<u32> = cfg.spins.iter().copied().collect();
        spins.insert(0);
        spins.insert(1);
        for s in spins {
            out.extend(check_dressing_consistency(k, &SpinRep::new(s), Sym::W, &kp, &km));
        }
    }
    out = relabel(out, Suite::Coaction);
    out.extend(with_modal(ctx, Suite::Coaction, |m| {
        check_coaction_qdg(
            (m.w0(), m.w1()),
            &ChevalleyRep::eval_at(Sym::U),
            &m.subject.kplus,
            &m.subject.kminus,
            &format!("delta({})", m.subject.label),
        )
    }));
    out
}

fn comodule(ctx: &Context) -> Report {
    with_modal(ctx, Suite::Comodule, |m| {
        check_comodule_axioms(
            (m.w0(), m.w1()),
            &ChevalleyRep::eval_at(Sym::U),
            &ChevalleyRep::eval_at(Sym::V),
            &m.subject.kplus,
            &m.subject.kminus,
            false,
        )
    })
}

fn t_intertwiner(ctx: &Context) -> Report {
    with_modal(ctx, Suite::TIntertwiner, |m| {
        let s = &m.subject;
        let mut r = check_t_intertwiner(&s.k, m.w0(), m.w1(), &s.kplus, &s.kminus, AStarReading::Coefficients, &s.label);
        r.extend(check_cond_k(&s.k, m.w0(), m.w1(), &s.kplus, &s.kminus, &s.label));
        r
    })
}

fn scalar_k() -> Report {
    let mut out = Report::default();
    for degree in 0..=1 {
        match solve_scalar_k(degree) {
            Ok(sol) => {
                if sol.cap_hit {
                    let mut r = CheckRecord::new("scalar-k", &format!("solve[d={degree}]"), Status::CapExceeded);
                    r.note = Some(format!("{} nodes", sol.nodes));
                    out.push(r);
                    continue;
                }
                for k in &sol.families {
                    out.push(check_re(k));
                }
                let id = KOperator::identity();
                let has_id = sol.families.iter().any(|f| specializes_to(f, &id));
                out.push(if has_id {
                    CheckRecord::pass("scalar-k", &format!("contains-identity[d={degree}]"))
                } else {
                    CheckRecord::fail("scalar-k", &format!("contains-identity[d={degree}]"), "no family specializes to 1")
                });
                if degree == 1 {
                    let hand = seeds::nondiagonal_with_numbers();
                    let ok = sol.families.iter().any(|f| specializes_to(f, &hand));
                    out.push(if ok {
                        CheckRecord::pass("scalar-k", "contains-nondiagonal[d=1]")
                    } else {
                        CheckRecord::fail("scalar-k", "contains-nondiagonal[d=1]", "hand seed not covered")
                    });
                }
            }
            Err(e) => out.push(CheckRecord::fail("scalar-k", &format!("solve[d={degree}]"), e.to_string())),
        }
    }
    relabel(out, Suite::ScalarK)
}

/// Runs one concrete suite.
pub fn run_suite(ctx: &Context, suite: Suite) -> Report {
    let cfg = ctx.cfg;
    let dim = 4 * quantum_dim(&cfg.site_spins());
    let needs_dim = !matches!(suite, Suite::Ybe | Suite::Rll | Suite::RIntertwiner | Suite::Theorem1 | Suite::ScalarK);
    if needs_dim && dim > cfg.max_dim {
        return cap_exceeded(suite, dim, cfg.max_dim);
    }
    let (kmax, lmax) = (cfg.order, cfg.order);
    match suite {
        Suite::Ybe => ybe(),
        Suite::Rll => rll(cfg),
        Suite::RIntertwiner => relabel(check_r_intertwiner(false), suite),
        Suite::Re => re(ctx),
        Suite::Sixteen => sixteen(ctx),
        Suite::Theorem1 => relabel(check_reductions(), suite),
        Suite::Currents => currents(ctx),
        Suite::Modes => with_modal(ctx, suite, |m| check_recomposition(&m.currents, &m.table, &m.subject.label)),
        Suite::Aq => with_modal(ctx, suite, |m| check_aq_relations(&m.table, kmax, lmax, Perturbation::None)),
        Suite::Higher => with_modal(ctx, suite, |m| check_higher_relations(&m.table, kmax, lmax)),
        Suite::Qdg => qdg(ctx),
        Suite::Coaction => coaction(ctx),
        Suite::Comodule => comodule(ctx),
        Suite::TIntertwiner => t_intertwiner(ctx),
        Suite::ScalarK => scalar_k(),
        Suite::All => {
            let mut out = Report::default();
            for s in Suite::EACH {
                out.extend(run_suite(ctx, s));
            }
            out
        }
    }
}

/// Runs every selected suite on a bounded pool; records come back in suite order.
pub fn run(cfg: &SuiteConfig) -> Report {
    let suites = cfg.suite.expand();
    let ctx = Context::new(cfg);
    let workers = std::thread::available_parallelism().map_or(1, |n| n.get()).min(suites.len()).max(1);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<Report>>> = Mutex::new(vec![None; suites.len()]);
    std::thread::scope(|s| {
        for _ in 0..workers {
            s.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                let Some(&suite) = suites.get(i) else { break };
                let r = run_suite(&ctx, suite);
                results.lock().expect("no worker panics while holding the lock")[i] = Some(r);
            });
        }
    });
    let mut out = Report::default();
    for r in results.into_inner().expect("workers joined").into_iter().flatten() {
        out.extend(r);
    }
    out
}

/// Whether any record stopped on a resource cap.
pub fn cap_hit(r: &Report) -> bool {
    r.records.iter().any(|x| x.status == Status::CapExceeded)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(suite: Suite, sites: usize) -> SuiteConfig {
        SuiteConfig { suite, sites, order: 1, ..SuiteConfig::default() }
    }

    #[test]
    fn cheap_suites_pass() {
        for s in [Suite::Ybe, Suite::Rll, Suite::RIntertwiner, Suite::Theorem1] {
            let r = run(&cfg(s, 0));
            assert!(r.all_passed(), "{s}");
            assert!(r.records.iter().all(|x| x.suite == s.name()));
        }
    }

    #[test]
    fn aq_without_sites_is_flagged_trivial() {
        let r = run(&cfg(Suite::Aq, 0));
        assert!(r.all_passed());
        assert!(r.get("trivial-base").is_some());
    }

    #[test]
    fn dimension_cap() {
        let c = SuiteConfig { max_dim: 4, ..cfg(Suite::Currents, 1) };
        let r = run(&c);
        assert!(cap_hit(&r));
        assert!(!r.all_passed());
    }

    #[test]
    fn one_site_pipeline() {
        for s in [Suite::Re, Suite::Currents, Suite::Modes, Suite::Aq, Suite::Comodule, Suite::TIntertwiner] {
            let r = run(&cfg(s, 1));
            assert!(r.all_passed(), "{s}: {:?}", r.failures().next());
            assert!(r.get("trivial-base").is_none());
        }
    }
}
