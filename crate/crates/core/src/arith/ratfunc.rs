//! The fraction field of [`LaurentPoly`].
//!
//! Denominators are kept as a product of normalized factors: each factor
//! has trivial monomial content and leading coefficient one, so monomial
//! and constant parts of any denominator live in the numerator (they are
//! units of the Laurent ring). Factors are cancelled against the numerator
//! by exact division whenever possible; equality never needs a GCD.

use alloc::vec::Vec;
use core::ops::{Add, Div, Mul, Neg, Sub};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::rational::Rational;
use super::symbol::Sym;
use super::ArithError;

#[derive(Clone, Default)]
pub struct RatFunc {
    num: LaurentPoly,
    /// Sorted by factor, exponents positive.
    den: Vec<(LaurentPoly, u32)>,
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc::default()
    }

    pub fn one() -> Self {
        LaurentPoly::one().into()
    }

    pub fn int(n: i64) -> Self {
        LaurentPoly::int(n).into()
    }

    pub fn constant(c: Rational) -> Self {
        LaurentPoly::constant(c).into()
    }

    pub fn var(s: Sym) -> Self {
        LaurentPoly::var(s).into()
    }

    pub fn var_pow(s: Sym, e: i32) -> Self {
        LaurentPoly::var_pow(s, e).into()
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, ArithError> {
        RatFunc::from(num).checked_div(&RatFunc::from(den))
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn den_factors(&self) -> &[(LaurentPoly, u32)] {
        &self.den
    }

    /// The expanded denominator.
    pub fn den(&self) -> LaurentPoly {
        let mut d = LaurentPoly::one();
        for (f, e) in &self.den {
            for _ in 0..*e {
                d = &d * f;
            }
        }
        d
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.den.is_empty() && self.num.is_one()
    }

    /// The polynomial value, if there is no denominator left.
    pub fn as_poly(&self) -> Option<&LaurentPoly> {
        self.den.is_empty().then_some(&self.num)
    }

    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_zero() {
            return Some(Rational::zero());
        }
        self.as_poly()?.as_constant()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        RatFunc { num: self.num.scale(c), den: self.den.clone() }
    }

    pub fn contains(&self, s: Sym) -> bool {
        self.num.contains(s) || self.den.iter().any(|(f, _)| f.contains(s))
    }

    pub fn symbols(&self) -> Vec<Sym> {
        let mut out = self.num.symbols();
        for (f, _) in &self.den {
            for s in f.symbols() {
                if !out.contains(&s) {
                    out.push(s);
                }
            }
        }
        out.sort();
        out
    }

    /// Writes `1/p` as `unit / factor` and returns both.
    fn invert_poly(p: &LaurentPoly) -> Result<(LaurentPoly, Option<LaurentPoly>), ArithError> {
        if let Some(inv) = p.unit_inverse() {
            return Ok((inv, None));
        }
        let (c, m, f) = p.unit_normalize().ok_or(ArithError::DivisionByZero)?;
        let unit = LaurentPoly::monomial(m.inv()?, c.inv().ok_or(ArithError::DivisionByZero)?);
        Ok((unit, Some(f)))
    }

    pub fn inv(&self) -> Result<Self, ArithError> {
        if self.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        let (unit, factor) = Self::invert_poly(&self.num)?;
        let mut num = unit;
        for (f, e) in &self.den {
            for _ in 0..*e {
                num = num.checked_mul(f)?;
            }
        }
        let den = factor.map(|f| alloc::vec![(f, 1)]).unwrap_or_default();
        Ok(RatFunc { num, den })
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self, ArithError> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, e: i32) -> Result<Self, ArithError> {
        if e < 0 {
            return self.inv()?.pow(e.checked_neg().ok_or(ArithError::ExponentOverflow)?);
        }
        let e = e as u32;
        let num = self.num.checked_pow(e)?;
        let den = self
            .den
            .iter()
            .map(|(f, k)| Ok((f.clone(), k.checked_mul(e).ok_or(ArithError::ExponentOverflow)?)))
            .collect::<Result<Vec<_>, ArithError>>()?;
        let mut out = RatFunc { num, den };
        out.den.retain(|(_, k)| *k > 0);
        Ok(out)
    }

    /// Least common multiple of two factored denominators, with the
    /// cofactors `lcm / a` and `lcm / b`.
    fn lcm(
        a: &[(LaurentPoly, u32)],
        b: &[(LaurentPoly, u32)],
    ) -> (Vec<(LaurentPoly, u32)>, LaurentPoly, LaurentPoly) {
        let mut l = Vec::with_capacity(a.len() + b.len());
        let mut ca = LaurentPoly::one();
        let mut cb = LaurentPoly::one();
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let ord = match (a.get(i), b.get(j)) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => core::cmp::Ordering::Less,
                _ => core::cmp::Ordering::Greater,
            };
            match ord {
                core::cmp::Ordering::Less => {
                    for _ in 0..a[i].1 {
                        cb = &cb * &a[i].0;
                    }
                    l.push(a[i].clone());
                    i += 1;
                }
                core::cmp::Ordering::Greater => {
                    for _ in 0..b[j].1 {
                        ca = &ca * &b[j].0;
                    }
                    l.push(b[j].clone());
                    j += 1;
                }
                core::cmp::Ordering::Equal => {
                    let (ea, eb) = (a[i].1, b[j].1);
                    for _ in eb..ea {
                        cb = &cb * &a[i].0;
                    }
                    for _ in ea..eb {
                        ca = &ca * &b[j].0;
                    }
                    l.push((a[i].0.clone(), ea.max(eb)));
                    i += 1;
                    j += 1;
                }
            }
        }
        (l, ca, cb)
    }

    /// Divides out denominator factors that divide the numerator.
    fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
            return self;
        }
        for (f, e) in self.den.iter_mut() {
            while *e > 0 {
                match self.num.div_exact(f) {
                    Some(q) => {
                        self.num = q;
                        *e -= 1;
                    }
                    None => break,
                }
            }
        }
        self.den.retain(|(_, e)| *e > 0);
        self
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        if self.den == other.den {
            let num = if negate { &self.num - &other.num } else { &self.num + &other.num };
            return RatFunc { num, den: self.den.clone() }.reduce();
        }
        let (den, ca, cb) = Self::lcm(&self.den, &other.den);
        let a = &self.num * &ca;
        let b = &other.num * &cb;
        let num = if negate { &a - &b } else { &a + &b };
        RatFunc { num, den }.reduce()
    }

    /// Sum of many terms with a single cancellation pass at the end.
    pub fn sum<'a, I: IntoIterator<Item = &'a RatFunc>>(iter: I) -> Self {
        let mut acc = RatFunc::zero();
        for t in iter {
            if t.is_zero() {
                continue;
            }
            if acc.den == t.den {
                acc.num = &acc.num + &t.num;
            } else {
                let (den, ca, cb) = Self::lcm(&acc.den, &t.den);
                acc.num = &(&acc.num * &ca) + &(&t.num * &cb);
                acc.den = den;
            }
        }
        acc.reduce()
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, ArithError> {
        if self.is_zero() || other.is_zero() {
            return Ok(Self::zero());
        }
        let num = self.num.checked_mul(&other.num)?;
        let den = if other.den.is_empty() {
            self.den.clone()
        } else if self.den.is_empty() {
            other.den.clone()
        } else {
            let mut d = Vec::with_capacity(self.den.len() + other.den.len());
            let (mut i, mut j) = (0, 0);
            let (a, b) = (&self.den, &other.den);
            while i < a.len() || j < b.len() {
                let ord = match (a.get(i), b.get(j)) {
                    (Some(x), Some(y)) => x.0.cmp(&y.0),
                    (Some(_), None) => core::cmp::Ordering::Less,
                    _ => core::cmp::Ordering::Greater,
                };
                match ord {
                    core::cmp::Ordering::Less => {
                        d.push(a[i].clone());
                        i += 1;
                    }
                    core::cmp::Ordering::Greater => {
                        d.push(b[j].clone());
                        j += 1;
                    }
                    core::cmp::Ordering::Equal => {
                        d.push((a[i].0.clone(), a[i].1 + b[j].1));
                        i += 1;
                        j += 1;
                    }
                }
            }
            d
        };
        let reducible = !self.den.is_empty() && !other.num.as_monomial().is_some()
            || !other.den.is_empty() && !self.num.as_monomial().is_some();
        let out = RatFunc { num, den };
        Ok(if reducible { out.reduce() } else { out })
    }

    /// Exact equality by cross-multiplication over the common denominator.
    pub fn eq_cross(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        let (_, ca, cb) = Self::lcm(&self.den, &other.den);
        &self.num * &ca == &other.num * &cb
    }

    /// Applies a simultaneous monomial substitution such as `u -> u^-1`.
    pub fn map_monomials(&self, images: &[(Sym, Monomial)]) -> Result<Self, ArithError> {
        let mut out = RatFunc::from(self.num.map_monomials(images)?);
        for (f, e) in &self.den {
            let g = f.map_monomials(images)?;
            let (unit, factor) = Self::invert_poly(&g)?;
            out.num = out.num.checked_mul(&unit.checked_pow(*e)?)?;
            if let Some(factor) = factor {
                out = out.checked_mul(&RatFunc { num: LaurentPoly::one(), den: alloc::vec![(factor, *e)] })?;
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution of rational functions for symbols.
    pub fn substitute(&self, bindings: &[(Sym, RatFunc)]) -> Result<Self, ArithError> {
        if bindings.is_empty() {
            return Ok(self.clone());
        }
        let mut num = subst_poly(&self.num, bindings)?;
        for (f, e) in &self.den {
            let g = subst_poly(f, bindings)?;
            if g.is_zero() {
                return Err(ArithError::DivisionByZero);
            }
            num = num.checked_div(&g.pow(*e as i32)?)?;
        }
        Ok(num)
    }

    pub fn eval_at(&self, s: Sym, value: &Rational) -> Result<Self, ArithError> {
        self.substitute(&[(s, RatFunc::constant(value.clone()))])
    }

    /// Evaluates to a rational with every symbol bound.
    pub fn eval_all(&self, values: &dyn Fn(Sym) -> Option<Rational>) -> Result<Rational, ArithError> {
        let n = self.num.eval_all(values)?;
        let mut d = Rational::one();
        for (f, e) in &self.den {
            let v = f.eval_all(values)?;
            d = &d * &v.pow(*e as i32).ok_or(ArithError::DivisionByZero)?;
        }
        if d.is_zero() {
            return Err(ArithError::DivisionByZero);
        }
        Ok(&n / &d)
    }
}

fn subst_poly(p: &LaurentPoly, bindings: &[(Sym, RatFunc)]) -> Result<RatFunc, ArithError> {
    use alloc::collections::BTreeMap;
    let mut powers: Vec<BTreeMap<i32, RatFunc>> = alloc::vec![BTreeMap::new(); bindings.len()];
    let mut terms = Vec::with_capacity(p.len());
    for (m, c) in p.terms() {
        let mut rest = *m;
        let mut t = RatFunc::one();
        for (k, (s, g)) in bindings.iter().enumerate() {
            let e = m.exp(*s);
            if e == 0 {
                continue;
            }
            rest.set(*s, 0);
            let gp = match powers[k].get(&e) {
                Some(v) => v.clone(),
                None => {
                    if e < 0 && g.is_zero() {
                        return Err(ArithError::DivisionByZero);
                    }
                    let v = g.pow(e)?;
                    powers[k].insert(e, v.clone());
                    v
                }
            };
            t = t.checked_mul(&gp)?;
        }
        terms.push(t.checked_mul(&LaurentPoly::monomial(rest, c.clone()).into())?);
    }
    Ok(RatFunc::sum(terms.iter()))
}

impl From<LaurentPoly> for RatFunc {
    fn from(num: LaurentPoly) -> Self {
        RatFunc { num, den: Vec::new() }
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        RatFunc::constant(c)
    }
}

impl From<i64> for RatFunc {
    fn from(n: i64) -> Self {
        RatFunc::int(n)
    }
}

impl From<Sym> for RatFunc {
    fn from(s: Sym) -> Self {
        RatFunc::var(s)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other)
    }
}

impl Eq for RatFunc {}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        if rhs.is_zero() {
            return self.clone();
        }
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on exponent overflow; see [`RatFunc::checked_mul`].
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        self.checked_mul(rhs).expect("exponent overflow")
    }
}

impl<'a> Div<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(mut self) -> RatFunc {
        self.num = -self.num;
        self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    #[test]
    fn cross_multiplication_equality() {
        let a = r("(u^2 - 1) / (u^1)");
        assert_eq!(a, r("u^1 - u^-1"));
        assert_ne!(r("u^-1"), r("v^-1"));
        let b = &r("u^1 + 1") / &r("u^1 - 1");
        let c = &r("u^2 + 2 * u^1 + 1") / &r("u^2 - 1");
        assert_eq!(b, c);
    }

    #[test]
    fn inverse_round_trip() {
        let p = r("qh^2 u^1 - qh^-2 u^-1");
        let q = r("u^1 - u^-1 + w^1");
        let x = &p / &q;
        let y = &q / &p;
        assert!((&x * &y).is_one());
        assert!(RatFunc::zero().inv().is_err());
    }

    #[test]
    fn cancellation_removes_factors() {
        let a = r("qh^2 u^1 - qh^-2 u^-1");
        let b = r("u^1 - u^-1");
        let x = &(&a * &b) / &a;
        assert!(x.den_factors().is_empty());
        assert_eq!(x.to_string(), "u^1 - u^-1");
    }

    #[test]
    fn substitution_examples() {
        let a = r("qh^2 u^1 - qh^-2 u^-1");
        assert_eq!(
            a.substitute(&[(Sym::U, RatFunc::one())]).unwrap(),
            r("qh^2 - qh^-2")
        );
        let inv = a
            .map_monomials(&[(Sym::QH, Monomial::var_pow(Sym::QH, -1)), (Sym::U, Monomial::var_pow(Sym::U, -1))])
            .unwrap();
        assert_eq!(inv, -&a);
        assert_eq!(a.substitute(&[]).unwrap(), a);
        let f = &RatFunc::one() / &r("u^1 - 1");
        assert_eq!(f.substitute(&[(Sym::U, RatFunc::one())]), Err(ArithError::DivisionByZero));
    }

    #[test]
    fn simultaneous_swap() {
        let f = &r("u^2 + v^1") / &r("u^1 - v^3");
        let g = f
            .substitute(&[(Sym::U, RatFunc::var(Sym::V)), (Sym::V, RatFunc::var(Sym::U))])
            .unwrap();
        assert_eq!(g, &r("v^2 + u^1") / &r("v^1 - u^3"));
        let h = f
            .map_monomials(&[(Sym::U, Monomial::var(Sym::V)), (Sym::V, Monomial::var(Sym::U))])
            .unwrap();
        assert_eq!(g, h);
    }

    mod props {
        use super::*;
        use crate::arith::laurent::tests_support::arb_poly;
        use proptest::prelude::*;

        fn arb_rat() -> impl Strategy<Value = RatFunc> {
            (arb_poly(), arb_poly()).prop_filter_map("nonzero den", |(n, d)| RatFunc::new(n, d).ok())
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn field_laws(a in arb_rat(), b in arb_rat(), c in arb_rat()) {
                prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
                prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
                prop_assert!((&a - &a).is_zero());
                if !a.is_zero() {
                    prop_assert!((&a * &a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn equality_is_transitive(a in arb_rat(), k in arb_poly(), l in arb_poly()) {
                prop_assume!(!k.is_zero() && !l.is_zero());
                let k = RatFunc::from(k);
                let l = RatFunc::from(l);
                let b = &(&a * &k) / &k;
                let c = &(&b * &l) / &l;
                prop_assert_eq!(&a, &b);
                prop_assert_eq!(&b, &c);
                prop_assert_eq!(&a, &c);
            }

            #[test]
            fn cross_eq_agrees_with_difference(a in arb_rat(), b in arb_rat()) {
                prop_assert_eq!(a == b, (&a - &b).is_zero());
            }
        }
    }
}
