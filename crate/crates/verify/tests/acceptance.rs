//! The twelve acceptance criteria, each timed against its budget.
//!
//! Runs without the libtest harness so every criterion prints exactly one
//! `PASS`/`FAIL` line; the process exits nonzero if any criterion fails.

use std::time::{Duration, Instant};

use qonsager_core::arith::{RatFunc, Sym};
use qonsager_core::comodule::{
    check_coaction_qdg, check_comodule_axioms, check_cond_k, check_dressing_consistency, check_spin_zero,
    check_t_intertwiner, delta_w_currents, AStarReading,
};
use qonsager_core::currents::{
    check_aq_relations, check_current_relations, check_higher_relations, check_lemma_decomposition, check_q_onsager,
    check_recomposition, check_reductions, phi_decompose, Perturbation,
};
use qonsager_core::reflection::{check_re, dress, dress_chain, expand_sixteen, seeds, KOperator};
use qonsager_core::rep::uq::check_r_intertwiner;
use qonsager_core::rep::{build_lax, build_r, check_rll, check_ybe, Chevalley, ChevalleyRep, SpinRep};
use qonsager_core::report::Report;
use qonsager_core::scalars::q_plus;
use qonsager_verify::matrix::{solved_families, ModalBase, Subject};
use qonsager_verify::run_controls;

type Outcome = Result<String, String>;

fn secs(n: u64) -> Duration {
    Duration::from_secs(n)
}

/// Passes when every record passed; the message counts records or names the first failure.
fn verdict(r: &Report) -> Outcome {
    match r.failures().next() {
        None => Ok(format!("{} checks", r.records.len())),
        Some(f) => Err(format!(
            "{} / {} failed{}",
            f.suite,
            f.relation_id,
            f.note.as_deref().map(|n| format!(": {n}")).unwrap_or_default()
        )),
    }
}

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn symbolic_kpm() -> (RatFunc, RatFunc) {
    (RatFunc::var(Sym::KP), RatFunc::var(Sym::KM))
}

fn hand_seeds() -> Vec<KOperator> {
    vec![
        KOperator::identity(),
        seeds::nondiagonal(),
        seeds::nondiagonal_odd(),
        seeds::diagonal(),
        seeds::mode_compatible(),
        seeds::nondiagonal_with_numbers(),
    ]
}

fn half() -> SpinRep {
    SpinRep::new(1)
}

fn modal(spins: &[u32], order: usize) -> Result<ModalBase, String> {
    ModalBase::build(spins, order).map_err(|e| e.to_string())
}

/// A nontrivial scalar solution: something other than a multiple of the identity.
fn is_nontrivial(k: &KOperator) -> bool {
    !(k.b().is_zero() && k.c().is_zero() && k.a().sub(k.d()).is_zero())
}

fn c1_ybe() -> Outcome {
    verdict(&std::iter::once(check_ybe(&build_r)).collect())
}

fn c2_rll() -> Outcome {
    let r: Report = [1, 2]
        .into_iter()
        .map(|s| {
            let rep = SpinRep::new(s);
            check_rll(&|x| build_lax(x, &rep), &build_r, &format!("2j={s}"))
        })
        .collect();
    verdict(&r)
}

fn c3_r_intertwiner() -> Outcome {
    let r = check_r_intertwiner(false);
    ensure(r.records.len() == 6, format!("{} generator images checked, expected 6", r.records.len()))?;
    verdict(&r)
}

fn c4_sixteen() -> Outcome {
    let six = expand_sixteen();
    let r = six.report();
    ensure(six.count() == 16, format!("{} nonzero relations", six.count()))?;
    for rec in r.records.iter().filter(|x| x.relation_id.starts_with('(')) {
        match &rec.scalar_found {
            Some(s) if !s.is_zero() => {}
            _ => return Err(format!("{} has no nonzero scalar", rec.relation_id)),
        }
    }
    verdict(&r)
}

fn c5_reductions() -> Outcome {
    let r = check_reductions();
    let count = |p: &str| r.records.iter().filter(|x| x.relation_id.starts_with(p)).count();
    ensure(r.records.len() == 13, format!("{} reductions, expected 13", r.records.len()))?;
    ensure(count("X") == 3 && count("a(uv)") == 2, "missing antisymmetry or a(uv) records")?;
    verdict(&r)
}

fn re_operators() -> Result<Vec<KOperator>, String> {
    let solved = solved_families().map_err(|e| e.to_string())?;
    if !solved.iter().any(is_nontrivial) {
        return Err("no nontrivial solved family".into());
    }
    let mut ks = vec![KOperator::identity()];
    ks.extend(solved);
    for seed in [KOperator::identity(), seeds::nondiagonal()] {
        ks.push(dress(&seed, &half(), Sym::W));
        ks.push(dress_chain(&seed, &[1, 1]).ok_or("two-site chain")?);
    }
    Ok(ks)
}

fn c6_re() -> Outcome {
    let ks = re_operators()?;
    let r: Report = ks.iter().map(check_re).collect();
    verdict(&r)
}

fn c7_currents() -> Outcome {
    let mut subjects: Vec<Subject> = re_operators()?.into_iter().map(Subject::symbolic).collect();
    subjects.extend(hand_seeds().into_iter().map(Subject::symbolic));
    for spins in [&[1][..], &[1, 1]] {
        subjects.push(modal(spins, 1)?.subject);
    }
    let mut r = Report::default();
    for s in &subjects {
        r.push(check_re(&s.k));
        r.push(check_lemma_decomposition(&s.k, &s.kplus, &s.kminus));
        let c = phi_decompose(&s.k, &s.kplus, &s.kminus).map_err(|e| format!("{}: {e}", s.label))?;
        let ec = check_current_relations(&c, &s.label);
        ensure(ec.records.len() == 18, format!("{}: {} branches", s.label, ec.records.len()))?;
        r.extend(ec);
    }
    verdict(&r)
}

fn c8_modes() -> Outcome {
    let mut r = Report::default();
    for (spins, range) in [(&[1][..], 2), (&[1, 1][..], 1)] {
        let m = modal(spins, range)?;
        ensure(!m.is_trivial(), format!("{}: W0 and W1 commute", m.subject.label))?;
        ensure(!m.table.has_principal_part(), format!("{}: principal part", m.subject.label))?;
        r.extend(check_recomposition(&m.currents, &m.table, &m.subject.label));
        let aq = check_aq_relations(&m.table, range, range, Perturbation::None);
        let higher = check_higher_relations(&m.table, range, range);
        for n in 1..=11 {
            ensure(aq.records.iter().any(|x| x.relation_id.starts_with(&format!("qo{n}["))), format!("qo{n} not checked"))?;
        }
        for n in 1..=7 {
            ensure(higher.records.iter().any(|x| x.relation_id.starts_with(&format!("h{n}["))), format!("h{n} not checked"))?;
        }
        r.extend(aq);
        r.extend(higher);
    }
    verdict(&r)
}

fn c9_qdg() -> Outcome {
    let mut r = Report::default();
    for spins in [&[1][..], &[2], &[1, 1]] {
        let m = modal(spins, 1)?;
        let s = &m.subject;
        let qp = q_plus();
        let rho = &(&s.kplus * &s.kminus) * &(&qp * &qp);
        ensure(m.table.rho.eq_cross(&rho), format!("{}: rho is not k+k-(q+1/q)^2", s.label))?;
        ensure(!m.is_trivial(), format!("{}: W0 and W1 commute", s.label))?;
        r.extend(check_q_onsager(m.w0(), m.w1(), &rho, &s.label));
    }
    let uv = ChevalleyRep::tensor(&ChevalleyRep::eval_at(Sym::U), &ChevalleyRep::eval_at(Sym::V), false);
    let zero = RatFunc::zero();
    let (e0, e1) = (uv.image(Chevalley::E(0)), uv.image(Chevalley::E(1)));
    r.extend(check_q_onsager(&e1, &e0, &zero, "serre-E"));
    verdict(&r)
}

fn c10_coaction() -> Outcome {
    let (kp, km) = symbolic_kpm();
    let mut r = Report::default();
    let mut based = hand_seeds();
    based.push(dress(&KOperator::identity(), &half(), Sym::W));
    based.push(dress(&seeds::nondiagonal(), &half(), Sym::W));
    for k in &based {
        let c = phi_decompose(k, &kp, &km).map_err(|e| format!("{}: {e}", k.label()))?;
        // dressed operators already use `w`
        let w = if k.dim() > 1 { Sym::W2 } else { Sym::W };
        r.extend(check_spin_zero(&c, w));
        r.extend(check_current_relations(&delta_w_currents(&c, &half(), w), &format!("delta_w({})", k.label())));
    }
    for k in &hand_seeds()[..2] {
        for s in [0, 1, 2] {
            r.extend(check_dressing_consistency(k, &SpinRep::new(s), Sym::W, &kp, &km));
        }
    }
    let m = modal(&[1], 1)?;
    let s = &m.subject;
    let (eu, ev) = (ChevalleyRep::eval_at(Sym::U), ChevalleyRep::eval_at(Sym::V));
    r.extend(check_coaction_qdg((m.w0(), m.w1()), &eu, &s.kplus, &s.kminus, "delta_T"));
    let axioms = check_comodule_axioms((m.w0(), m.w1()), &eu, &ev, &s.kplus, &s.kminus, false);
    ensure(axioms.records.iter().any(|x| x.relation_id.starts_with("coassoc")), "no coassociativity record")?;
    ensure(axioms.records.iter().any(|x| x.relation_id.starts_with("counit")), "no counit record")?;
    r.extend(axioms);
    verdict(&r)
}

fn c11_intertwiner() -> Outcome {
    let m = modal(&[1], 1)?;
    let s = &m.subject;
    let mut r = check_t_intertwiner(&s.k, m.w0(), m.w1(), &s.kplus, &s.kminus, AStarReading::Coefficients, &s.label);
    ensure(r.records.len() == 8, format!("{} intertwiner relations, expected 8", r.records.len()))?;
    r.extend(check_cond_k(&s.k, m.w0(), m.w1(), &s.kplus, &s.kminus, &s.label));
    verdict(&r)
}

fn c12_controls() -> Outcome {
    let controls = run_controls();
    ensure(controls.len() == 15, format!("{} controls, expected one per suite", controls.len()))?;
    for c in &controls {
        ensure(c.caught(), format!("{} survived `{}`", c.suite, c.perturbation))?;
    }
    Ok(format!("{} suites caught their perturbation", controls.len()))
}

fn main() {
    let criteria: [(&str, u64, fn() -> Outcome); 12] = [
        ("Yang-Baxter equation", 5, c1_ybe),
        ("RLL for spins 1/2 and 1", 30, c2_rll),
        ("R intertwines the six generator images", 30, c3_r_intertwiner),
        ("sixteen relations up to scalars", 10, c4_sixteen),
        ("X/Y reductions and antisymmetry", 60, c5_reductions),
        ("reflection equation pipeline to N=2", 300, c6_re),
        ("current relations of every passing K", 300, c7_currents),
        ("modes, AQ and higher relations", 600, c8_modes),
        ("q-Dolan-Grady and q-Serre", 60, c9_qdg),
        ("coaction and comodule axioms", 300, c10_coaction),
        ("intertwiner relations at N=1", 60, c11_intertwiner),
        ("negative controls", 600, c12_controls),
    ];
    let mut failed = 0;
    for (i, (name, budget, f)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if took > secs(budget) => Err(format!("{msg}, but over the {budget} s budget")),
            o => o,
        };
        let (tag, msg) = match &outcome {
            Ok(m) => ("PASS", m),
            Err(m) => ("FAIL", m),
        };
        println!("{tag}  {:>2}  {name:<42} {:>8.2} s  {msg}", i + 1, took.as_secs_f64());
        failed += outcome.is_err() as usize;
    }
    println!("{} of 12 criteria passed", 12 - failed);
    if failed > 0 {
        std::process::exit(1);
    }
}
