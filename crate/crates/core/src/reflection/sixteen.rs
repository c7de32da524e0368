//! The reflection equation expanded over the free algebra on `{A, B, C, D} x {u, v}`.

use alloc::format;
use alloc::vec::Vec;

use crate::arith::{Monomial, RatFunc, Sym};
use crate::free::{Generator, NCPoly};
use crate::rep::rmatrix::{build_r, product, ratio};
use crate::rep::OperatorMatrix;
use crate::report::{CheckRecord, Report};
use crate::scalars::{a_of, b_of, q_minus};

use super::KOperator;

pub const SIXTEEN_LABELS: [&str; 16] = [
    "i", "i'", "ii", "ii'", "iii", "iii'", "iv", "v", "vi", "vii", "viii", "ix", "x", "xi", "xii", "xiii",
];

type Block = [[NCPoly; 4]; 4];

fn zero_block() -> Block {
    core::array::from_fn(|_| core::array::from_fn(|_| NCPoly::zero()))
}

fn scalar_block(m: &OperatorMatrix) -> Block {
    core::array::from_fn(|i| core::array::from_fn(|j| NCPoly::scalar(m.get(i, j).clone())))
}

fn mul(a: &Block, b: &Block) -> Block {
    let mut out = zero_block();
    for i in 0..4 {
        for j in 0..4 {
            let mut acc = NCPoly::zero();
            for k in 0..4 {
                if a[i][k].is_zero() || b[k][j].is_zero() {
                    continue;
                }
                acc = acc.add(&a[i][k].mul(&b[k][j]));
            }
            out[i][j] = acc;
        }
    }
    out
}

const NAMES: [&str; 4] = ["A", "B", "C", "D"];

fn k_gen(a: usize, b: usize, s: Sym) -> NCPoly {
    NCPoly::gen(Generator::at(NAMES[2 * a + b], s))
}

/// Free generator `X@u` or `X@v` for `X` in `A..D`.
pub fn kgen(name: &str, s: Sym) -> NCPoly {
    NCPoly::gen(Generator::at(name, s))
}

/// The sixteen entries of `LHS - RHS` of the reflection equation, row-major on `aux ⊗ aux`.
pub fn re_entries() -> Vec<NCPoly> {
    // K(u) ⊗ I and I ⊗ K(v)
    let k1: Block = core::array::from_fn(|r| {
        core::array::from_fn(|c| {
            let (a, b, x, y) = (r / 2, r % 2, c / 2, c % 2);
            if b == y { k_gen(a, x, Sym::U) } else { NCPoly::zero() }
        })
    });
    let k2: Block = core::array::from_fn(|r| {
        core::array::from_fn(|c| {
            let (a, b, x, y) = (r / 2, r % 2, c / 2, c % 2);
            if a == x { k_gen(b, y, Sym::V) } else { NCPoly::zero() }
        })
    });
    let rm = scalar_block(&build_r(&ratio(Sym::U, Sym::V)));
    let rp = scalar_block(&build_r(&product(Sym::U, Sym::V)));
    let lhs = mul(&mul(&mul(&rm, &k1), &rp), &k2);
    let rhs = mul(&mul(&mul(&k2, &rp), &k1), &rm);
    let mut out = Vec::with_capacity(16);
    for i in 0..4 {
        for j in 0..4 {
            out.push(lhs[i][j].sub(&rhs[i][j]));
        }
    }
    out
}

/// The displayed relations `(i)` to `(xiii)`, in [`SIXTEEN_LABELS`] order.
pub fn transcribed_sixteen() -> Vec<NCPoly> {
    let am = RatFunc::from(a_of(&ratio(Sym::U, Sym::V)));
    let ap = RatFunc::from(a_of(&product(Sym::U, Sym::V)));
    let bm = RatFunc::from(b_of(&ratio(Sym::U, Sym::V)));
    let bp = RatFunc::from(b_of(&product(Sym::U, Sym::V)));
    let c = q_minus();
    let (a, b, cc, d) = (kgen("A", Sym::U), kgen("B", Sym::U), kgen("C", Sym::U), kgen("D", Sym::U));
    let (a1, b1, c1, d1) = (kgen("A", Sym::V), kgen("B", Sym::V), kgen("C", Sym::V), kgen("D", Sym::V));
    let m = |x: &NCPoly, y: &NCPoly| x.mul(y);
    let com = |x: &NCPoly, y: &NCPoly| NCPoly::commutator(x, y);
    let sc = |s: &RatFunc, t: &RatFunc, p: NCPoly| p.scale(&(s * t));
    let sum = |ps: Vec<NCPoly>| ps.iter().fold(NCPoly::zero(), |acc, p| acc.add(p));
    alloc::vec![
        // (i)
        sum(alloc::vec![sc(&am, &c, m(&b, &c1).sub(&m(&b1, &cc))), sc(&am, &ap, com(&a, &a1))]),
        // (i')
        sum(alloc::vec![sc(&am, &c, m(&cc, &b1).sub(&m(&c1, &b))), sc(&am, &ap, com(&d, &d1))]),
        // (ii)
        sum(alloc::vec![
            sc(&bm, &bp, com(&a, &d1)),
            sc(&c, &c, com(&d, &d1)),
            sc(&c, &ap, m(&cc, &b1).sub(&m(&c1, &b))),
        ]),
        // (ii')
        sum(alloc::vec![
            sc(&bm, &bp, com(&d, &a1)),
            sc(&c, &c, com(&a, &a1)),
            sc(&c, &ap, m(&b, &c1).sub(&m(&b1, &cc))),
        ]),
        // (iii)
        sum(alloc::vec![
            sc(&c, &bp, m(&d, &a1).sub(&m(&d1, &a))),
            sc(&bm, &c, m(&a, &a1).sub(&m(&d1, &d))),
            sc(&bm, &ap, com(&b, &c1)),
        ]),
        // (iii')
        sum(alloc::vec![
            sc(&c, &bp, m(&a, &d1).sub(&m(&a1, &d))),
            sc(&bm, &c, m(&d, &d1).sub(&m(&a1, &a))),
            sc(&bm, &ap, com(&cc, &b1)),
        ]),
        // (iv)
        sum(alloc::vec![
            sc(&bm, &bp, m(&a, &c1)),
            sc(&c, &c, m(&d, &c1)),
            sc(&c, &ap, m(&cc, &a1)),
            sc(&am, &ap, m(&c1, &a)).neg(),
            sc(&am, &c, m(&d1, &cc)).neg(),
        ]),
        // (v)
        sum(alloc::vec![
            sc(&bm, &bp, m(&b1, &a)),
            sc(&c, &c, m(&b1, &d)),
            sc(&c, &ap, m(&a1, &b)),
            sc(&am, &ap, m(&a, &b1)).neg(),
            sc(&am, &c, m(&b, &d1)).neg(),
        ]),
        // (vi)
        sum(alloc::vec![
            sc(&bm, &bp, m(&c1, &d)),
            sc(&c, &c, m(&c1, &a)),
            sc(&c, &ap, m(&d1, &cc)),
            sc(&am, &ap, m(&d, &c1)).neg(),
            sc(&am, &c, m(&cc, &a1)).neg(),
        ]),
        // (vii)
        sum(alloc::vec![
            sc(&bm, &bp, m(&d, &b1)),
            sc(&c, &c, m(&a, &b1)),
            sc(&c, &ap, m(&b, &d1)),
            sc(&am, &ap, m(&b1, &d)).neg(),
            sc(&am, &c, m(&a1, &b)).neg(),
        ]),
        // (viii)
        sum(alloc::vec![
            sc(&bm, &ap, m(&b, &d1)),
            sc(&c, &bp, m(&d, &b1)),
            sc(&bm, &c, m(&a, &b1)),
            sc(&am, &bp, m(&d1, &b)).neg(),
        ]),
        // (ix)
        sum(alloc::vec![
            sc(&bm, &ap, m(&a1, &b)),
            sc(&c, &bp, m(&b1, &a)),
            sc(&bm, &c, m(&b1, &d)),
            sc(&am, &bp, m(&b, &a1)).neg(),
        ]),
        // (x)
        sum(alloc::vec![
            sc(&bm, &ap, m(&d1, &cc)),
            sc(&c, &bp, m(&c1, &d)),
            sc(&bm, &c, m(&c1, &a)),
            sc(&am, &bp, m(&cc, &d1)).neg(),
        ]),
        // (xi)
        sum(alloc::vec![
            sc(&bm, &ap, m(&cc, &a1)),
            sc(&c, &bp, m(&a, &c1)),
            sc(&bm, &c, m(&d, &c1)),
            sc(&am, &bp, m(&a1, &cc)).neg(),
        ]),
        // (xii)
        sc(&am, &bp, com(&b, &b1)),
        // (xiii)
        sc(&am, &bp, com(&cc, &c1)),
    ]
}

/// One displayed relation with the matching expanded entry.
#[derive(Clone, Debug)]
pub struct Matched {
    pub label: &'static str,
    pub transcribed: NCPoly,
    /// Row-major entry index of `LHS - RHS` and `entry = scalar * transcribed`.
    pub entry: Option<(usize, RatFunc)>,
}

#[derive(Clone, Debug)]
pub struct SixteenRelations {
    pub entries: Vec<NCPoly>,
    pub matched: Vec<Matched>,
}

impl SixteenRelations {
    pub fn count(&self) -> usize {
        self.entries.iter().filter(|e| !e.is_zero()).count()
    }

    /// The expanded relation carrying `label`.
    pub fn relation(&self, label: &str) -> Option<&NCPoly> {
        let m = self.matched.iter().find(|m| m.label == label)?;
        m.entry.as_ref().map(|(i, _)| &self.entries[*i])
    }

    /// One record per label; fails on a missing match or a reused entry.
    pub fn report(&self) -> Report {
        let mut used = [false; 16];
        let mut out = Report::default();
        for m in &self.matched {
            let id = format!("({})", m.label);
            let rec = match &m.entry {
                Some((i, s)) if !used[*i] => {
                    used[*i] = true;
                    CheckRecord::pass("sixteen", &id)
                        .with_scalar(s.clone())
                        .with_note(format!("entry ({}, {})", i / 4, i % 4))
                }
                Some((i, _)) => CheckRecord::fail("sixteen", &id, format!("entry {i} already matched")),
                None => CheckRecord::fail("sixteen", &id, "no expanded entry is proportional"),
            };
            out.push(rec);
        }
        let n = self.count();
        out.push(if n == 16 {
            CheckRecord::pass("sixteen", "count")
        } else {
            CheckRecord::fail("sixteen", "count", format!("{n} nonzero entries"))
        });
        out
    }

    /// Substitutes `K(u)`, `K(v)` into every relation; all must vanish when `K` solves the equation.
    pub fn evaluate_in(&self, k: &KOperator) -> Report {
        let kv = match k.at(&Monomial::var(Sym::V)) {
            Ok(kv) => kv,
            Err(e) => return core::iter::once(CheckRecord::fail("sixteen-eval", "K(v)", format!("{e}"))).collect(),
        };
        let img = |g: &Generator| {
            let i = NAMES.iter().position(|n| *n == g.base())?;
            let m = match g.param()? {
                Sym::U => k.k.get(i / 2, i % 2),
                Sym::V => kv.get(i / 2, i % 2),
                _ => return None,
            };
            Some(m.clone())
        };
        let unit = OperatorMatrix::identity(k.dim());
        self.matched
            .iter()
            .map(|m| {
                let id = format!("({})[{}]", m.label, k.label());
                match m.transcribed.substitute_hom(&img, &unit) {
                    Ok(v) => CheckRecord::vanishes("sixteen-eval", &id, &v),
                    Err(e) => CheckRecord::fail("sixteen-eval", &id, format!("{e}")),
                }
            })
            .collect()
    }
}

/// Expands the reflection equation and matches each displayed relation to an entry.
pub fn expand_sixteen() -> SixteenRelations {
    let entries = re_entries();
    let matched = SIXTEEN_LABELS
        .iter()
        .zip(transcribed_sixteen())
        .map(|(label, t)| {
            let entry = entries
                .iter()
                .enumerate()
                .find_map(|(i, e)| e.proportional_check(&t).map(|s| (i, s)));
            Matched { label, transcribed: t, entry }
        })
        .collect();
    SixteenRelations { entries, matched }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflection::{dress, seeds};
    use crate::rep::SpinRep;

    #[test]
    fn all_sixteen_match() {
        let s = expand_sixteen();
        let r = s.report();
        for rec in &r.records {
            assert!(rec.passed(), "{}: {:?}", rec.relation_id, rec.note);
        }
        assert_eq!(s.count(), 16);
    }

    #[test]
    fn xii_is_a_commutator_of_b() {
        let s = expand_sixteen();
        let am = RatFunc::from(a_of(&ratio(Sym::U, Sym::V)));
        let bp = RatFunc::from(b_of(&product(Sym::U, Sym::V)));
        let want = NCPoly::commutator(&kgen("B", Sym::U), &kgen("B", Sym::V)).scale(&(&am * &bp));
        assert!(s.relation("xii").unwrap().proportional_check(&want).is_some());
    }

    #[test]
    fn a_wrong_sign_is_noticed() {
        let mut t = transcribed_sixteen();
        // flip the sign of the [A, A'] term in (i)
        let am = RatFunc::from(a_of(&ratio(Sym::U, Sym::V)));
        let ap = RatFunc::from(a_of(&product(Sym::U, Sym::V)));
        let aa = NCPoly::commutator(&kgen("A", Sym::U), &kgen("A", Sym::V)).scale(&(&am * &ap));
        t[0] = t[0].sub(&aa).sub(&aa);
        let entries = re_entries();
        assert!(entries.iter().all(|e| e.proportional_check(&t[0]).is_none()));
    }

    #[test]
    fn relations_vanish_on_solutions() {
        let s = expand_sixteen();
        for k in [seeds::nondiagonal(), dress(&seeds::diagonal(), &SpinRep::new(1), Sym::W)] {
            let r = s.evaluate_in(&k);
            assert!(r.all_passed(), "{}", k.label());
        }
    }
}
