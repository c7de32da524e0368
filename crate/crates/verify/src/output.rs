//! Text and JSON renderings of a report.

use qonsager_core::report::{CheckRecord, Report};
use serde::Serialize;

use crate::config::SuiteConfig;

#[derive(Serialize)]
struct Meta<'a> {
    config: &'a SuiteConfig,
    seed: String,
    version: &'static str,
}

#[derive(Serialize)]
#[serde(untagged)]
enum Counterexample {
    Entry { row: usize, col: usize, left: String, right: String },
    Word { word: String, left: String, right: String },
}

#[derive(Serialize)]
struct Result<'a> {
    suite: &'a str,
    relation_id: &'a str,
    status: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    scalar_found: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    counterexample: Option<Counterexample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    note: Option<&'a str>,
}

#[derive(Serialize)]
struct Document<'a> {
    meta: Meta<'a>,
    results: Vec<Result<'a>>,
}

fn counterexample(r: &CheckRecord) -> Option<Counterexample> {
    if let Some(m) = &r.counterexample {
        return Some(Counterexample::Entry {
            row: m.row,
            col: m.col,
            left: m.left.to_string(),
            right: m.right.to_string(),
        });
    }
    r.word_mismatch.as_ref().map(|w| Counterexample::Word {
        word: w.word.clone(),
        left: w.left.to_string(),
        right: w.right.to_string(),
    })
}

pub fn to_json(cfg: &SuiteConfig, report: &Report) -> String {
    let doc = Document {
        meta: Meta { config: cfg, seed: cfg.seed.to_string(), version: env!("CARGO_PKG_VERSION") },
        results: report
            .records
            .iter()
            .map(|r| Result {
                suite: &r.suite,
                relation_id: &r.relation_id,
                status: r.status.as_str(),
                scalar_found: r.scalar_found.as_ref().map(ToString::to_string),
                counterexample: counterexample(r),
                note: r.note.as_deref(),
            })
            .collect(),
    };
    let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
    s.push('\n');
    s
}

/// What a relation id refers to, keyed on its leading name.
pub fn describe(relation_id: &str) -> &'static str {
    // the trailing `[...]` is the instance label; a leading bracket belongs to the name
    let cut = relation_id.char_indices().skip(1).find(|(_, c)| *c == '[').map_or(relation_id.len(), |(i, _)| i);
    let head = &relation_id[..cut];
    let table: &[(&str, &str)] = &[
        ("YB", "Yang-Baxter equation for R(u)"),
        ("RLL", "RLL relation for the Lax operator"),
        ("condR", "R(u/v) intertwines the coproduct and its opposite"),
        ("RE", "reflection equation"),
        ("lemma", "K is rebuilt exactly from its own currents"),
        ("ec", "exchange relation between W, G at u and v"),
        ("recomp", "currents equal the sum of their modes"),
        ("qo", "defining relation of the mode algebra"),
        ("h", "higher relation of the mode algebra"),
        ("qDG", "q-Dolan-Grady relation"),
        ("deg", "mode lies in the span of words in W0, W1"),
        ("spin0", "delta_w at spin 0 is the scalar site factor"),
        ("dress", "delta_w agrees with L(uw)K(u)L(u/w)"),
        ("coassoc", "coassociativity of the coaction"),
        ("counit", "counit axiom of the coaction"),
        ("condK", "K(u) intertwines the coaction at u and 1/u"),
        ("[A", "intertwiner relation for A = W0"),
        ("[A*", "intertwiner relation for A* = W1"),
        ("contains", "scalar solutions contain a known seed"),
        ("X", "antisymmetry of X under u <-> v"),
        ("a(uv)", "simplification of two reflection relations"),
        ("trivial-base", "W0 and W1 commute"),
        ("cap", "resource cap"),
        ("setup", "inputs could not be built"),
        ("count", "number of independent expanded relations"),
    ];
    if head.starts_with('(') {
        return if head.ends_with(")X") || head.ends_with(")Y") {
            "reflection relation in its X/Y form"
        } else {
            "one of the sixteen reflection relations"
        };
    }
    table
        .iter()
        .filter(|(k, _)| head.starts_with(k))
        .max_by_key(|(k, _)| k.len())
        .map_or("", |(_, d)| d)
}

pub fn to_text(report: &Report) -> String {
    let mut s = String::new();
    for r in &report.records {
        s.push_str(&format!("{:<5} {:<14} {}", r.status.as_str().to_uppercase(), r.suite, r.relation_id));
        let d = describe(&r.relation_id);
        if !d.is_empty() {
            s.push_str(&format!("  ({d})"));
        }
        if let Some(c) = counterexample(r) {
            match c {
                Counterexample::Entry { row, col, left, right } => {
                    s.push_str(&format!("\n      entry ({row}, {col}): {left}  !=  {right}"))
                }
                Counterexample::Word { word, left, right } => {
                    s.push_str(&format!("\n      word {word}: {left}  vs  {right}"))
                }
            }
        }
        if let Some(n) = &r.note {
            s.push_str(&format!("\n      {n}"));
        }
        s.push('\n');
    }
    let failed = report.failures().count();
    s.push_str(&format!("{} checks, {} failed\n", report.records.len(), failed));
    s
}
