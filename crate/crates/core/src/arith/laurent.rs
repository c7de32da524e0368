//! Sparse multivariate Laurent polynomials over the rationals.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::ops::{Add, Mul, Neg, Sub};

use hashbrown::HashMap;
use rustc_hash::FxBuildHasher;

use super::monomial::Monomial;
use super::rational::Rational;
use super::symbol::Sym;
use super::ArithError;

/// A Laurent polynomial in the commuting symbols of [`Sym`].
///
/// Terms are kept sorted by ascending [`Monomial`] order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, Rational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(Monomial::one(), c)
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_int(n))
    }

    pub fn monomial(m: Monomial, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly { terms: alloc::vec![(m, c)] }
    }

    pub fn var(s: Sym) -> Self {
        Self::monomial(Monomial::var(s), Rational::one())
    }

    pub fn var_pow(s: Sym, e: i32) -> Self {
        Self::monomial(Monomial::var_pow(s, e), Rational::one())
    }

    /// Builds a polynomial from arbitrary (possibly repeated or zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, Rational)>>(iter: I) -> Self {
        let mut acc: HashMap<Monomial, Rational, FxBuildHasher> = HashMap::default();
        for (m, c) in iter {
            accumulate(&mut acc, m, c);
        }
        Self::from_map(acc)
    }

    fn from_map(acc: HashMap<Monomial, Rational, FxBuildHasher>) -> Self {
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by_key(|a| a.0);
        LaurentPoly { terms }
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn as_monomial(&self) -> Option<(&Monomial, &Rational)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((m, c)),
            _ => None,
        }
    }

    /// Coefficient of the given monomial.
    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|t| t.0.cmp(m))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_default()
    }

    /// Highest term in monomial order.
    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.last()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplication by a monomial preserves the (translation-invariant) term order.
    pub fn checked_mul_monomial(&self, m: &Monomial, c: &Rational) -> Result<Self, ArithError> {
        if c.is_zero() {
            return Ok(Self::zero());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (a, x) in &self.terms {
            terms.push((a.mul(m)?, x * c));
        }
        Ok(LaurentPoly { terms })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        if let Some((m, c)) = other.as_monomial() {
            return self.checked_mul_monomial(m, c);
        }
        if let Some((m, c)) = self.as_monomial() {
            return other.checked_mul_monomial(m, c);
        }
        let mut acc: HashMap<Monomial, Rational, FxBuildHasher> =
            HashMap::with_capacity_and_hasher(self.len() * other.len() / 2 + 1, FxBuildHasher);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                accumulate(&mut acc, ma.mul(mb)?, ca * cb);
            }
        }
        Ok(Self::from_map(acc))
    }

    pub fn checked_pow(&self, k: u32) -> Result<Self, ArithError> {
        if let Some((m, c)) = self.as_monomial() {
            let e = i32::try_from(k).map_err(|_| ArithError::ExponentOverflow)?;
            return Ok(Self::monomial(m.pow(e)?, c.pow(e).expect("nonzero")));
        }
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.checked_mul(&base)?;
            }
            k >>= 1;
            if k > 0 {
                base = base.checked_mul(&base)?;
            }
        }
        Ok(acc)
    }

    /// Inverse of a single-term polynomial (a unit of the Laurent ring).
    pub fn unit_inverse(&self) -> Option<Self> {
        let (m, c) = self.as_monomial()?;
        Some(Self::monomial(m.inv().ok()?, c.inv()?))
    }

    fn merge(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Greater => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0, c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        for t in &b[j..] {
            let c = if negate { -&t.1 } else { t.1.clone() };
            out.push((t.0, c));
        }
        LaurentPoly { terms: out }
    }

    /// Exponent range `(min, max)` of `s`; `None` for the zero polynomial.
    pub fn degree_range(&self, s: Sym) -> Option<(i32, i32)> {
        let mut it = self.terms.iter().map(|(m, _)| m.exp(s));
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.terms.iter().any(|(m, _)| m.exp(s) != 0)
    }

    /// Symbols that occur with a nonzero exponent somewhere.
    pub fn symbols(&self) -> Vec<Sym> {
        let mut seen = [false; super::symbol::NUM_SYMBOLS];
        for (m, _) in &self.terms {
            for (s, _) in m.support() {
                seen[s.index()] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, b)| **b)
            .map(|(i, _)| Sym::from_index(i).expect("in range"))
            .collect()
    }

    /// Splits into coefficients of powers of `s`: `self = Σ c_e s^e`.
    pub fn coeffs_in(&self, s: Sym) -> BTreeMap<i32, LaurentPoly> {
        let mut groups: BTreeMap<i32, Vec<(Monomial, Rational)>> = BTreeMap::new();
        for (m, c) in &self.terms {
            groups.entry(m.exp(s)).or_default().push((m.without(s), c.clone()));
        }
        groups
            .into_iter()
            .map(|(e, ts)| (e, LaurentPoly::from_terms(ts)))
            .collect()
    }

    /// Inverse of [`coeffs_in`](Self::coeffs_in).
    pub fn from_coeffs_in(s: Sym, coeffs: &BTreeMap<i32, LaurentPoly>) -> Result<Self, ArithError> {
        let mut terms = Vec::new();
        for (e, c) in coeffs {
            let sm = Monomial::var_pow(s, *e);
            for (m, x) in c.terms() {
                terms.push((m.mul(&sm)?, x.clone()));
            }
        }
        Ok(Self::from_terms(terms))
    }

    /// Replaces `s^e` by `image^e` for a monomial image (e.g. `u -> u^-1`, `u -> u w`).
    pub fn subst_monomial(&self, s: Sym, image: &Monomial) -> Result<Self, ArithError> {
        if !self.contains(s) {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(s);
            terms.push((m.without(s).mul(&image.pow(e)?)?, c.clone()));
        }
        Ok(Self::from_terms(terms))
    }

    /// Simultaneous monomial substitution, e.g. `u -> v, v -> u`.
    pub fn map_monomials(&self, images: &[(Sym, Monomial)]) -> Result<Self, ArithError> {
        if !images.iter().any(|(s, _)| self.contains(*s)) {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut rest = *m;
            for (s, _) in images {
                rest.set(*s, 0);
            }
            for (s, img) in images {
                let e = m.exp(*s);
                if e != 0 {
                    rest = rest.mul(&img.pow(e)?)?;
                }
            }
            terms.push((rest, c.clone()));
        }
        Ok(Self::from_terms(terms))
    }

    /// Substitutes a rational value for `s`.
    pub fn eval_at(&self, s: Sym, value: &Rational) -> Result<Self, ArithError> {
        if !self.contains(s) {
            return Ok(self.clone());
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let e = m.exp(s);
            let f = value.pow(e).ok_or(ArithError::DivisionByZero)?;
            terms.push((m.without(s), c * &f));
        }
        Ok(Self::from_terms(terms))
    }

    /// Evaluates with every occurring symbol bound to a rational.
    pub fn eval_all(&self, values: &dyn Fn(Sym) -> Option<Rational>) -> Result<Rational, ArithError> {
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (s, e) in m.support() {
                let x = values(s).ok_or(ArithError::UnboundSymbol(s))?;
                t = &t * &x.pow(e).ok_or(ArithError::DivisionByZero)?;
            }
            acc = &acc + &t;
        }
        Ok(acc)
    }

    /// Componentwise minimum exponent over all terms.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        let Some((first, _)) = it.next() else {
            return Monomial::one();
        };
        it.fold(*first, |acc, (m, _)| Monomial::min(&acc, m))
    }

    /// Decomposes a nonzero polynomial as `c * m * p` where `p` has trivial
    /// monomial content and leading coefficient one.
    pub fn unit_normalize(&self) -> Option<(Rational, Monomial, LaurentPoly)> {
        let (_, lc) = self.leading()?;
        let content = self.monomial_content();
        let inv_c = lc.inv()?;
        let inv_m = content.inv().ok()?;
        let p = self.checked_mul_monomial(&inv_m, &inv_c).ok()?;
        Some((lc.clone(), content, p))
    }

    /// Exact quotient `self / d` if `d` divides `self` in the Laurent ring.
    ///
    /// Uses lex-leading-term division; quotient terms must stay inside the
    /// per-symbol exponent box implied by the degree valuations, which also
    /// bounds the work. Returns `None` when `d` does not divide.
    pub fn div_exact(&self, d: &LaurentPoly) -> Option<LaurentPoly> {
        if d.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some(inv) = d.unit_inverse() {
            return self.checked_mul(&inv).ok();
        }
        let syms = {
            let mut s = self.symbols();
            for t in d.symbols() {
                if !s.contains(&t) {
                    s.push(t);
                }
            }
            s
        };
        let mut bounds = Vec::with_capacity(syms.len());
        for &s in &syms {
            let (plo, phi) = self.degree_range(s).unwrap_or((0, 0));
            let (dlo, dhi) = d.degree_range(s).unwrap_or((0, 0));
            let lo = plo - dlo;
            let hi = phi - dhi;
            if lo > hi {
                return None;
            }
            bounds.push((s, lo, hi));
        }
        let in_box = |m: &Monomial| bounds.iter().all(|&(s, lo, hi)| (lo..=hi).contains(&m.exp(s)));
        if self.len() < d.len() {
            return None;
        }
        let (dm, dc) = d.leading().cloned()?;
        let dc_inv = dc.inv()?;
        let dm_inv = dm.inv().ok()?;
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot = Vec::new();
        let cap = 4 * self.len() + 64;
        while let Some((rm, rc)) = rem.pop_last() {
            if quot.len() > cap {
                return None;
            }
            let qm = rm.mul(&dm_inv).ok()?;
            if !in_box(&qm) {
                return None;
            }
            let qc = &rc * &dc_inv;
            // the leading term cancels by construction
            for (m, c) in &d.terms[..d.terms.len() - 1] {
                let key = m.mul(&qm).ok()?;
                let sub = c * &qc;
                match rem.entry(key) {
                    alloc::collections::btree_map::Entry::Vacant(e) => {
                        e.insert(-&sub);
                    }
                    alloc::collections::btree_map::Entry::Occupied(mut e) => {
                        let v = e.get() - &sub;
                        if v.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = v;
                        }
                    }
                }
            }
            quot.push((qm, qc));
        }
        Some(Self::from_terms(quot))
    }
}

impl LaurentPoly {
    /// `s` with `s * s == self`, if one exists (the sign of its leading coefficient is positive).
    pub fn sqrt_exact(&self) -> Option<LaurentPoly> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        let syms = self.symbols();
        let mut bounds = Vec::with_capacity(syms.len());
        for &s in &syms {
            let (lo, hi) = self.degree_range(s)?;
            if lo % 2 != 0 || hi % 2 != 0 {
                return None;
            }
            bounds.push((s, lo / 2, hi / 2));
        }
        let in_box = |m: &Monomial| bounds.iter().all(|&(s, lo, hi)| (lo..=hi).contains(&m.exp(s)));
        let (lm, lc) = self.leading().cloned()?;
        let c0 = lc.sqrt_exact()?;
        let mut m0 = Monomial::one();
        for (s, e) in lm.support() {
            if e % 2 != 0 {
                return None;
            }
            m0.set(s, e / 2);
        }
        let twice_inv = (&c0 * &Rational::from_int(2)).inv()?;
        let m0_inv = m0.inv().ok()?;
        let mut root = LaurentPoly::monomial(m0, c0);
        let mut rem = self.sub_ref(&root.checked_mul(&root).ok()?);
        let cap = self.len() + 16;
        let mut steps = 0;
        while let Some((rm, rc)) = rem.leading().cloned() {
            steps += 1;
            if steps > cap {
                return None;
            }
            let tm = rm.mul(&m0_inv).ok()?;
            if !in_box(&tm) {
                return None;
            }
            let t = LaurentPoly::monomial(tm, &rc * &twice_inv);
            // rem -= (2 root + t) t
            let two_root = root.scale(&Rational::from_int(2));
            rem = rem.sub_ref(&two_root.merge(&t, false).checked_mul(&t).ok()?);
            root = root.merge(&t, false);
        }
        Some(root)
    }

    fn sub_ref(&self, other: &LaurentPoly) -> LaurentPoly {
        self.merge(other, true)
    }
}

fn accumulate(acc: &mut HashMap<Monomial, Rational, FxBuildHasher>, m: Monomial, c: Rational) {
    use hashbrown::hash_map::Entry;
    match acc.entry(m) {
        Entry::Occupied(mut e) => {
            let s = e.get() + &c;
            *e.get_mut() = s;
        }
        Entry::Vacant(v) => {
            v.insert(c);
        }
    }
}

impl PartialOrd for LaurentPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for LaurentPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.terms.len().cmp(&other.terms.len()).then_with(|| {
            for (a, b) in self.terms.iter().zip(other.terms.iter()) {
                let o = a.0.cmp(&b.0).then_with(|| a.1.cmp(&b.1));
                if o != Ordering::Equal {
                    return o;
                }
            }
            Ordering::Equal
        })
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, false)
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.merge(rhs, true)
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    /// Panics on exponent overflow; use [`LaurentPoly::checked_mul`] to handle it.
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl From<Rational> for LaurentPoly {
    fn from(c: Rational) -> Self {
        LaurentPoly::constant(c)
    }
}

impl From<Sym> for LaurentPoly {
    fn from(s: Sym) -> Self {
        LaurentPoly::var(s)
    }
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::symbol::Sym;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    /// Schoolbook product over an ordered map, independent of the hash path.
    fn naive_mul(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in a.terms() {
            for (mb, cb) in b.terms() {
                let m = ma.mul(mb).unwrap();
                let e = acc.entry(m).or_default();
                *e = &*e + &(ca * cb);
            }
        }
        LaurentPoly::from_terms(acc)
    }

    #[test]
    fn product_of_a_and_b_factors() {
        // (uq - u^-1 q^-1)(u - u^-1) = u^2 q - q - q^-1 + u^-2 q^-1
        let a = p("qh^2 u^1 - qh^-2 u^-1");
        let b = p("u^1 - u^-1");
        let expected = p("qh^2 u^2 - qh^2 - qh^-2 + qh^-2 u^-2");
        assert_eq!(&a * &b, expected);
        assert_eq!(naive_mul(&a, &b), expected);
    }

    #[test]
    fn additive_identity() {
        let a = p("3 * qh^2 u^1 - 1/2 * v^-3");
        assert_eq!(&a + &LaurentPoly::zero(), a);
        assert_eq!(&a - &a, LaurentPoly::zero());
    }

    #[test]
    fn exact_division() {
        let a = p("qh^2 u^1 - qh^-2 u^-1");
        let b = p("u^1 - u^-1 + 3 * w^2");
        let prod = &a * &b;
        assert_eq!(prod.div_exact(&a), Some(b.clone()));
        assert_eq!(prod.div_exact(&b), Some(a.clone()));
        let off = &prod + &LaurentPoly::one();
        assert_eq!(off.div_exact(&a), None);
        // monomials are units
        let m = p("2 * u^3 qh^-1");
        assert_eq!((&prod * &m).div_exact(&m), Some(prod));
    }

    #[test]
    fn coefficient_split_round_trip() {
        let a = p("qh^2 u^3 - 5 * u^-1 w^2 + 7 + u^3 v^1");
        let c = a.coeffs_in(Sym::U);
        assert_eq!(c[&3], p("qh^2 + v^1"));
        assert_eq!(LaurentPoly::from_coeffs_in(Sym::U, &c).unwrap(), a);
    }

    #[test]
    fn monomial_substitution() {
        let a = p("qh^2 u^1 - qh^-2 u^-1");
        let inv_all = a
            .subst_monomial(Sym::QH, &Monomial::var_pow(Sym::QH, -1))
            .unwrap()
            .subst_monomial(Sym::U, &Monomial::var_pow(Sym::U, -1))
            .unwrap();
        assert_eq!(inv_all, -&a);
        assert_eq!(a.eval_at(Sym::U, &Rational::one()).unwrap(), p("qh^2 - qh^-2"));
    }

    #[test]
    fn square_roots() {
        let p: LaurentPoly = "2 * qh^1 u^1 - 3 * v^-1 + 1/2".parse().unwrap();
        let sq = &p * &p;
        let r = sq.sqrt_exact().unwrap();
        assert!(r == p || r == -p.clone());
        let not_square: LaurentPoly = "qh^2 + 1".parse().unwrap();
        assert_eq!(not_square.sqrt_exact(), None);
        let odd: LaurentPoly = "qh^1".parse().unwrap();
        assert_eq!(odd.sqrt_exact(), None);
        let two: LaurentPoly = "2".parse().unwrap();
        assert_eq!(two.sqrt_exact(), None);
    }

    #[test]
    fn unit_normalization() {
        let a = p("6 * u^3 qh^1 - 4 * u^1 qh^1");
        let (c, m, n) = a.unit_normalize().unwrap();
        assert_eq!(
            LaurentPoly::monomial(m, c).checked_mul(&n).unwrap(),
            a
        );
        assert!(n.monomial_content().is_one());
        assert!(n.leading().unwrap().1.is_one());
    }

    mod props {
        use super::super::tests_support::arb_poly;
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn mul_matches_naive(a in arb_poly(), b in arb_poly()) {
                prop_assert_eq!(&a * &b, naive_mul(&a, &b));
            }

            #[test]
            fn ring_laws(a in arb_poly(), b in arb_poly(), c in arb_poly()) {
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
                prop_assert_eq!(&a + &b, &b + &a);
            }

            #[test]
            fn canonical_form_idempotent(a in arb_poly()) {
                let again = LaurentPoly::from_terms(a.terms().iter().cloned());
                prop_assert_eq!(again, a);
            }

            #[test]
            fn div_exact_recovers_factor(a in arb_poly(), b in arb_poly()) {
                prop_assume!(!b.is_zero());
                let prod = &a * &b;
                prop_assert_eq!(prod.div_exact(&b), Some(a));
            }

            #[test]
            fn text_round_trip(a in arb_poly()) {
                let s = alloc::string::ToString::to_string(&a);
                prop_assert_eq!(s.parse::<LaurentPoly>().unwrap(), a);
            }

            #[test]
            fn double_inversion_is_identity(a in arb_poly()) {
                let inv = Monomial::var_pow(Sym::U, -1);
                let twice = a.subst_monomial(Sym::U, &inv).unwrap().subst_monomial(Sym::U, &inv).unwrap();
                prop_assert_eq!(twice, a);
            }
        }
    }
}
