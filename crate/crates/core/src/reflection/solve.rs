//! Scalar solutions of the reflection equation from a Laurent ansatz.
//!
//! The ansatz coefficients are unknown symbols `t_i`. Coefficients of `u^a v^b`
//! in `LHS - RHS` give polynomial equations over `Q(q)`, solved by eliminating
//! one linearly occurring unknown at a time and splitting on vanishing pivots.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use crate::arith::{ArithError, LaurentPoly, Monomial, RatFunc, Rational, Sym};
use crate::rep::AuxMatrix;

use super::{check_re, re_sides, KOperator, Provenance};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SolveError {
    #[error("ansatz degree {0} needs more than 16 unknowns")]
    DegreeTooLarge(u32),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// An assignment of some unknowns, valid where every `nonzero` polynomial is nonzero.
#[derive(Clone, Debug)]
pub struct Branch {
    pub assign: Vec<(Sym, RatFunc)>,
    pub nonzero: Vec<LaurentPoly>,
}

#[derive(Clone, Debug, Default)]
pub struct SystemOutcome {
    pub branches: Vec<Branch>,
    pub nodes: usize,
    /// Branches left with only nonlinear equations.
    pub unresolved: usize,
    pub cap_hit: bool,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    /// Distinct nonzero solution families, free parameters renamed to `p0, p1, ...`.
    pub families: Vec<KOperator>,
    /// Nonvanishing conditions of each family, in the renamed parameters.
    pub conditions: Vec<Vec<RatFunc>>,
    pub nodes: usize,
    pub unresolved: usize,
    pub cap_hit: bool,
}

const NODE_CAP: usize = 20_000;

struct Node {
    eqs: Vec<LaurentPoly>,
    assign: Vec<(Sym, RatFunc)>,
    nonzero: Vec<LaurentPoly>,
}

fn is_unknown(unknowns: &[Sym], s: Sym) -> bool {
    unknowns.contains(&s)
}

fn has_unknowns(p: &LaurentPoly, unknowns: &[Sym]) -> bool {
    unknowns.iter().any(|&s| p.contains(s))
}

/// Divides out the monomial content except positive powers of unknowns not
/// known to be nonzero; those are returned for case splitting.
fn strip_content(p: &LaurentPoly, unknowns: &[Sym], nz: &[Sym]) -> Option<(LaurentPoly, Vec<Sym>)> {
    let mut content = p.monomial_content();
    let mut factors = Vec::new();
    let sup: Vec<(Sym, i32)> = content.support().collect();
    for (s, e) in sup {
        if e > 0 && is_unknown(unknowns, s) && !nz.contains(&s) {
            factors.push(s);
            content.set(s, 0);
        }
    }
    let shifted = p.checked_mul_monomial(&content.inv().ok()?, &Rational::one()).ok()?;
    Some((shifted, factors))
}

fn normalize(p: &LaurentPoly) -> LaurentPoly {
    match p.unit_normalize() {
        Some((_, _, n)) => n,
        None => p.clone(),
    }
}

enum Reduced {
    Trivial,
    Contradiction,
    Eq(LaurentPoly, Vec<Sym>),
}

/// Strips known-nonzero factors and puts `p` in canonical form.
fn reduce_eq(p: &LaurentPoly, nonzero: &[LaurentPoly], unknowns: &[Sym]) -> Reduced {
    if p.is_zero() {
        return Reduced::Trivial;
    }
    let nz_monos: Vec<Sym> = nonzero
        .iter()
        .filter_map(|z| {
            let (m, _) = z.as_monomial()?;
            let sup: Vec<(Sym, i32)> = m.support().collect();
            (sup.len() == 1 && sup[0].1 == 1).then(|| sup[0].0)
        })
        .collect();
    let Some((mut p, factors)) = strip_content(p, unknowns, &nz_monos) else {
        return Reduced::Eq(p.clone(), Vec::new());
    };
    if !factors.is_empty() {
        return Reduced::Eq(p, factors);
    }
    for z in nonzero {
        if z.len() < 2 {
            continue;
        }
        let mut guard = 0;
        while guard < 8 {
            guard += 1;
            match p.div_exact(z) {
                Some(q) => p = q,
                None => break,
            }
        }
    }
    if !has_unknowns(&p, unknowns) {
        return Reduced::Contradiction;
    }
    Reduced::Eq(normalize(&p), Vec::new())
}

fn substitute_poly(p: &LaurentPoly, s: Sym, val: &RatFunc) -> Result<LaurentPoly, ArithError> {
    Ok(RatFunc::from(p.clone()).substitute(&[(s, val.clone())])?.num().clone())
}

fn assign(node: &Node, s: Sym, val: RatFunc) -> Option<Node> {
    let mut assign = Vec::with_capacity(node.assign.len() + 1);
    for (t, v) in &node.assign {
        assign.push((*t, v.substitute(&[(s, val.clone())]).ok()?));
    }
    assign.push((s, val.clone()));
    let mut nonzero = Vec::with_capacity(node.nonzero.len());
    for z in &node.nonzero {
        let z2 = substitute_poly(z, s, &val).ok()?;
        if z2.is_zero() {
            return None;
        }
        nonzero.push(z2);
    }
    let mut eqs = Vec::with_capacity(node.eqs.len());
    for e in &node.eqs {
        eqs.push(substitute_poly(e, s, &val).ok()?);
    }
    Some(Node { eqs, assign, nonzero })
}

/// Solves `eqs = 0` for `unknowns` over the field of the remaining symbols.
pub fn solve_system(eqs: Vec<LaurentPoly>, unknowns: &[Sym]) -> SystemOutcome {
    solve_system_capped(eqs, unknowns, NODE_CAP)
}

pub fn solve_system_capped(eqs: Vec<LaurentPoly>, unknowns: &[Sym], cap: usize) -> SystemOutcome {
    let mut out = SystemOutcome::default();
    let mut stack = alloc::vec![Node { eqs, assign: Vec::new(), nonzero: Vec::new() }];
    'nodes: while let Some(mut node) = stack.pop() {
        out.nodes += 1;
        if out.nodes > cap {
            out.cap_hit = true;
            break;
        }
        // simplify
        let mut eqs: Vec<LaurentPoly> = Vec::new();
        let mut split: Option<Sym> = None;
        for e in &node.eqs {
            match reduce_eq(e, &node.nonzero, unknowns) {
                Reduced::Trivial => {}
                Reduced::Contradiction => continue 'nodes,
                Reduced::Eq(p, f) => {
                    if split.is_none() {
                        split = f.first().copied();
                    }
                    eqs.push(p);
                }
            }
        }
        eqs.sort();
        eqs.dedup();
        node.eqs = eqs;
        if node.eqs.is_empty() {
            out.branches.push(Branch { assign: node.assign, nonzero: node.nonzero });
            continue;
        }
        if let Some(t) = split {
            // t = 0, or t != 0
            let mut nz = Node { eqs: node.eqs.clone(), assign: node.assign.clone(), nonzero: node.nonzero.clone() };
            nz.nonzero.push(LaurentPoly::var(t));
            stack.push(nz);
            if let Some(z) = assign(&node, t, RatFunc::zero()) {
                stack.push(z);
            }
            continue;
        }
        // best linear pivot
        let mut best: Option<(usize, usize, Sym, LaurentPoly, LaurentPoly)> = None;
        for (i, e) in node.eqs.iter().enumerate() {
            for &t in unknowns {
                let Some((lo, hi)) = e.degree_range(t) else { continue };
                if lo != 0 || hi != 1 {
                    continue;
                }
                let cs = e.coeffs_in(t);
                let c = cs.get(&1).cloned().unwrap_or_else(LaurentPoly::zero);
                let r = cs.get(&0).cloned().unwrap_or_else(LaurentPoly::zero);
                let score = if has_unknowns(&c, unknowns) { 1000 + c.len() * 10 + e.len() } else { e.len() };
                if best.as_ref().is_none_or(|b| score < b.0) {
                    best = Some((score, i, t, c, r));
                }
            }
        }
        let Some((score, idx, t, c, r)) = best else {
            match quadratic_step(&node, unknowns) {
                Some(children) => stack.extend(children),
                None => out.unresolved += 1,
            }
            continue;
        };
        let val = match RatFunc::from(-r.clone()).checked_div(&RatFunc::from(c.clone())) {
            Ok(v) => v,
            Err(_) => continue,
        };
        if score >= 1000 {
            // c = 0 turns the pivot equation into r = 0
            let mut zero = Node { eqs: node.eqs.clone(), assign: node.assign.clone(), nonzero: node.nonzero.clone() };
            zero.eqs[idx] = r;
            zero.eqs.push(c.clone());
            stack.push(zero);
            let mut gen = node;
            gen.nonzero.push(c);
            if let Some(n) = assign(&gen, t, val) {
                stack.push(n);
            }
        } else if let Some(n) = assign(&node, t, val) {
            stack.push(n);
        }
    }
    out
}

/// Splits on a root of an equation quadratic in one unknown, when the
/// discriminant is a perfect square.
fn quadratic_step(node: &Node, unknowns: &[Sym]) -> Option<Vec<Node>> {
    let mut best: Option<(usize, usize, Sym, LaurentPoly, LaurentPoly, LaurentPoly)> = None;
    for (i, e) in node.eqs.iter().enumerate() {
        for &t in unknowns {
            let Some((0, 2)) = e.degree_range(t) else { continue };
            let cs = e.coeffs_in(t);
            let get = |k: i32| cs.get(&k).cloned().unwrap_or_else(LaurentPoly::zero);
            let (a, b, c) = (get(2), get(1), get(0));
            let score = if has_unknowns(&a, unknowns) { 1000 + a.len() } else { 0 } + e.len();
            if best.as_ref().is_none_or(|x| score < x.0) {
                best = Some((score, i, t, a, b, c));
            }
        }
    }
    let (score, idx, t, a, b, c) = best?;
    let disc = &(&b * &b) - &(&(&a * &c) * &LaurentPoly::int(4));
    let root = disc.sqrt_exact()?;
    let mut children = Vec::new();
    let mut base = Node { eqs: node.eqs.clone(), assign: node.assign.clone(), nonzero: node.nonzero.clone() };
    if score >= 1000 {
        let mut zero = Node { eqs: node.eqs.clone(), assign: node.assign.clone(), nonzero: node.nonzero.clone() };
        zero.eqs[idx] = &(&b * &LaurentPoly::var(t)) + &c;
        zero.eqs.push(a.clone());
        children.push(zero);
        base.nonzero.push(a.clone());
    }
    let two_a = RatFunc::from(a.scale(&Rational::from_int(2)));
    let signs: &[i64] = if root.is_zero() { &[1] } else { &[1, -1] };
    for &sg in signs {
        let num = &(-b.clone()) + &root.scale(&Rational::from_int(sg));
        let val = RatFunc::from(num).checked_div(&two_a).ok()?;
        if let Some(n) = assign(&base, t, val) {
            children.push(n);
        }
    }
    Some(children)
}

/// Unknown symbols of the ansatz, entry-major, exponents ascending.
fn ansatz(degree: u32) -> Result<(AuxMatrix, Vec<Sym>), SolveError> {
    let per = 2 * degree as usize + 1;
    if 4 * per > 16 {
        return Err(SolveError::DegreeTooLarge(degree));
    }
    let d = degree as i32;
    let mut unknowns = Vec::new();
    let mut entries = Vec::new();
    for e in 0..4 {
        let mut terms = Vec::new();
        for (k, exp) in (-d..=d).enumerate() {
            let t = Sym::unknown(e * per + k);
            unknowns.push(t);
            terms.push((Monomial::from_pairs(&[(t, 1), (Sym::U, exp)])?, Rational::one()));
        }
        entries.push(RatFunc::from(LaurentPoly::from_terms(terms)));
    }
    let mut it = entries.into_iter();
    let (a, b, c, dd) = (it.next().unwrap(), it.next().unwrap(), it.next().unwrap(), it.next().unwrap());
    Ok((AuxMatrix::scalars(a, b, c, dd), unknowns))
}

/// Coefficients of every `u^a v^b` in `LHS - RHS`.
fn re_equations(k: &KOperator) -> Result<Vec<LaurentPoly>, ArithError> {
    let (lhs, rhs) = re_sides(k)?;
    let diff = lhs.sub(&rhs);
    let mut eqs = Vec::new();
    for e in diff.entries() {
        for (_, cu) in e.num().coeffs_in(Sym::U) {
            for (_, cv) in cu.coeffs_in(Sym::V) {
                eqs.push(cv);
            }
        }
    }
    Ok(eqs)
}

fn render(k: &AuxMatrix) -> String {
    let mut s = String::new();
    for m in k.entries() {
        s.push_str(&alloc::format!("{};", m.get(0, 0)));
    }
    s
}

/// All scalar solutions whose entries are Laurent polynomials in `u` of exponents in `[-degree, degree]`.
pub fn solve_scalar_k(degree: u32) -> Result<SolveOutcome, SolveError> {
    let (k0, unknowns) = ansatz(degree)?;
    let seed = KOperator::new(k0.clone(), Provenance::Seed("ansatz".into()));
    let eqs = re_equations(&seed)?;
    let sys = solve_system(eqs, &unknowns);
    let mut families: Vec<KOperator> = Vec::new();
    let mut conditions = Vec::new();
    let mut seen: BTreeMap<String, ()> = BTreeMap::new();
    for br in &sys.branches {
        let subst = k0.try_map(|m| m.substitute(&br.assign))?;
        if subst.entries().iter().all(|m| m.is_zero()) {
            continue;
        }
        // rename the surviving unknowns in order of first appearance
        let mut free: Vec<Sym> = Vec::new();
        for m in subst.entries() {
            for s in m.get(0, 0).symbols() {
                if is_unknown(&unknowns, s) && !free.contains(&s) {
                    free.push(s);
                }
            }
        }
        free.sort();
        let renames: Vec<(Sym, Monomial)> = if free.len() <= 6 {
            free.iter().enumerate().map(|(i, &s)| (s, Monomial::var(Sym::param(i)))).collect()
        } else {
            Vec::new()
        };
        let named = subst.map_monomials(&renames)?;
        let key = render(&named);
        if seen.insert(key, ()).is_some() {
            continue;
        }
        let mut cond = Vec::new();
        for z in &br.nonzero {
            cond.push(RatFunc::from(z.clone()).map_monomials(&renames)?);
        }
        let label = alloc::format!("solved-d{}-{}", degree, families.len());
        let k = KOperator::new(named, Provenance::Seed(label));
        if check_re(&k).passed() {
            families.push(k);
            conditions.push(cond);
        }
    }
    Ok(SolveOutcome { families, conditions, nodes: sys.nodes, unresolved: sys.unresolved, cap_hit: sys.cap_hit })
}

/// Whether some choice of the free parameters of `family` gives `target` exactly.
pub fn specializes_to(family: &KOperator, target: &KOperator) -> bool {
    let params: Vec<Sym> = (0..6).map(Sym::param).collect();
    let mut eqs = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            let d = family.k.get(i, j).sub(target.k.get(i, j));
            for e in d.entries() {
                for (_, c) in e.num().coeffs_in(Sym::U) {
                    eqs.push(c);
                }
            }
        }
    }
    let out = solve_system(eqs, &params);
    !out.branches.is_empty()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reflection::seeds;

    #[test]
    fn degree_zero() {
        let out = solve_scalar_k(0).unwrap();
        assert!(!out.cap_hit);
        assert!(!out.families.is_empty());
        for k in &out.families {
            assert!(check_re(k).passed());
        }
        assert!(out.families.iter().any(|f| specializes_to(f, &KOperator::identity())));
    }

    #[test]
    fn degree_one_contains_identity_and_a_nondiagonal_family() {
        let out = solve_scalar_k(1).unwrap();
        assert!(!out.cap_hit, "{} nodes", out.nodes);
        assert!(out.families.iter().any(|f| specializes_to(f, &KOperator::identity())));
        let nondiag = out.families.iter().find(|f| !f.b().is_zero() && !f.c().is_zero());
        let nd = nondiag.expect("nondiagonal family");
        assert!(!nd.b().get(0, 0).symbols().iter().all(|s| *s == Sym::U || *s == Sym::QH));
        // the hand seed lies in some family
        let hand = seeds::nondiagonal_with_numbers();
        assert!(out.families.iter().any(|f| specializes_to(f, &hand)));
    }

    #[test]
    fn degree_two_is_refused() {
        assert_eq!(solve_scalar_k(2).unwrap_err(), SolveError::DegreeTooLarge(2));
    }

    #[test]
    fn tiny_system() {
        // t0 t1 = 0, t0 + t1 - 1 = 0 -> two points
        let t0 = LaurentPoly::var(Sym::unknown(0));
        let t1 = LaurentPoly::var(Sym::unknown(1));
        let eqs = alloc::vec![&t0 * &t1, &(&t0 + &t1) - &LaurentPoly::one()];
        let out = solve_system(eqs, &[Sym::unknown(0), Sym::unknown(1)]);
        assert_eq!(out.branches.len(), 2);
    }
}
