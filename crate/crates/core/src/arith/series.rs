//! Truncated Laurent series in one symbol, expanded at infinity
//! (descending powers).

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use super::symbol::Sym;
use super::ArithError;

/// `Σ c_e x^e`, known exactly for every exponent `e >= floor`.
///
/// Coefficients below `floor` are unknown (truncated), not zero.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries {
    var: Sym,
    coeffs: BTreeMap<i32, RatFunc>,
    floor: i32,
}

impl LaurentSeries {
    pub fn zero(var: Sym, floor: i32) -> Self {
        LaurentSeries { var, coeffs: BTreeMap::new(), floor }
    }

    /// A finite sum, truncated at `floor`.
    pub fn from_coeffs(var: Sym, coeffs: BTreeMap<i32, RatFunc>, floor: i32) -> Self {
        let coeffs = coeffs
            .into_iter()
            .filter(|(e, c)| *e >= floor && !c.is_zero())
            .collect();
        LaurentSeries { var, coeffs, floor }
    }

    pub fn var(&self) -> Sym {
        self.var
    }

    pub fn floor(&self) -> i32 {
        self.floor
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn top(&self) -> Option<i32> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn coeff(&self, e: i32) -> Option<RatFunc> {
        if e < self.floor {
            return None;
        }
        Some(self.coeffs.get(&e).cloned().unwrap_or_default())
    }

    /// Nonzero coefficients in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, &RatFunc)> {
        self.coeffs.iter().rev().map(|(e, c)| (*e, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn truncate(&self, floor: i32) -> Self {
        let floor = floor.max(self.floor);
        LaurentSeries {
            var: self.var,
            coeffs: self.coeffs.range(floor..).map(|(e, c)| (*e, c.clone())).collect(),
            floor,
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.var, other.var, "series in different symbols");
        let floor = self.floor.max(other.floor);
        let mut coeffs: BTreeMap<i32, RatFunc> =
            self.coeffs.range(floor..).map(|(e, c)| (*e, c.clone())).collect();
        for (e, c) in other.coeffs.range(floor..) {
            let entry = coeffs.entry(*e).or_default();
            *entry = if negate { &*entry - c } else { &*entry + c };
        }
        coeffs.retain(|_, c| !c.is_zero());
        LaurentSeries { var: self.var, coeffs, floor }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .map(|(e, x)| (*e, x * c))
            .filter(|(_, x)| !x.is_zero())
            .collect();
        LaurentSeries { var: self.var, coeffs, floor: self.floor }
    }

    /// Cauchy product; the result is exact only where neither truncation can leak in.
    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.var, other.var, "series in different symbols");
        let ta = self.top().unwrap_or(self.floor - 1);
        let tb = other.top().unwrap_or(other.floor - 1);
        let floor = (self.floor + tb).max(other.floor + ta);
        let mut buckets: BTreeMap<i32, Vec<RatFunc>> = BTreeMap::new();
        for (ea, ca) in &self.coeffs {
            for (eb, cb) in &other.coeffs {
                let e = ea + eb;
                if e >= floor {
                    buckets.entry(e).or_default().push(ca * cb);
                }
            }
        }
        let coeffs = buckets
            .into_iter()
            .map(|(e, v)| (e, RatFunc::sum(v.iter())))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        LaurentSeries { var: self.var, coeffs, floor }
    }

    /// The retained coefficients as a single rational function.
    pub fn to_ratfunc(&self) -> RatFunc {
        let terms: Vec<RatFunc> = self
            .coeffs
            .iter()
            .map(|(e, c)| c * &RatFunc::var_pow(self.var, *e))
            .collect();
        RatFunc::sum(terms.iter())
    }
}

/// Expands `f` at `var = ∞` in descending powers of `var`.
///
/// The window covers `order + 1` exponents, from the leading exponent of
/// `num/den` down to `leading - order`.
pub fn series_expand(f: &RatFunc, var: Sym, order: i32) -> Result<LaurentSeries, ArithError> {
    if order < 1 {
        return Err(ArithError::NotExpandable(var, format!("order {order} < 1")));
    }
    if f.is_zero() {
        return Ok(LaurentSeries::zero(var, -order));
    }
    let mut d = LaurentPoly::one();
    let mut rest = RatFunc::one();
    for (p, e) in f.den_factors() {
        if p.contains(var) {
            for _ in 0..*e {
                d = d.checked_mul(p)?;
            }
        } else {
            rest = rest.checked_mul(&RatFunc::new(LaurentPoly::one(), p.checked_pow(*e)?)?)?;
        }
    }
    let n = f.num().coeffs_in(var);
    let dc = d.coeffs_in(var);
    let (&ntop, _) = n.iter().next_back().expect("nonzero numerator");
    let (&dtop, dlead) = dc.iter().next_back().expect("nonzero denominator");
    if dlead.is_zero() {
        return Err(ArithError::NotExpandable(var, format!("no dominant term in {d}")));
    }
    let lead_inv = RatFunc::from(dlead.clone()).inv()?;
    let lead = ntop - dtop;
    let floor = lead - order;
    let mut c: Vec<RatFunc> = Vec::with_capacity(order as usize + 1);
    for k in 0..=order {
        let mut acc: Vec<RatFunc> = Vec::new();
        if let Some(nk) = n.get(&(ntop - k)) {
            acc.push(nk.clone().into());
        }
        for j in 1..=k {
            if let Some(dj) = dc.get(&(dtop - j)) {
                let prev = &c[(k - j) as usize];
                if !prev.is_zero() {
                    acc.push(-&prev.checked_mul(&dj.clone().into())?);
                }
            }
        }
        let s = RatFunc::sum(acc.iter());
        c.push(s.checked_mul(&lead_inv)?);
    }
    let coeffs = c
        .into_iter()
        .enumerate()
        .map(|(k, x)| Ok((lead - k as i32, x.checked_mul(&rest)?)))
        .collect::<Result<BTreeMap<_, _>, ArithError>>()?;
    Ok(LaurentSeries::from_coeffs(var, coeffs, floor))
}

/// Like [`series_expand`], with the window running down to `var^floor` inclusive.
pub fn series_expand_to(f: &RatFunc, var: Sym, floor: i32) -> Result<LaurentSeries, ArithError> {
    if f.is_zero() {
        return Ok(LaurentSeries::zero(var, floor));
    }
    let top = |p: &LaurentPoly| p.degree_range(var).map_or(0, |(_, hi)| hi);
    let mut lead = top(f.num());
    for (p, e) in f.den_factors() {
        lead -= top(p) * *e as i32;
    }
    if lead <= floor {
        return Ok(series_expand(f, var, 1)?.truncate(floor));
    }
    series_expand(f, var, lead - floor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(s: &str) -> RatFunc {
        s.parse().unwrap()
    }

    fn big_u() -> RatFunc {
        &r("qh^2 u^2 + qh^-2 u^-2") / &r("qh^2 + qh^-2")
    }

    #[test]
    fn geometric_series() {
        let f = &RatFunc::one() / &r("1 - u^-2");
        let s = series_expand(&f, Sym::U, 8).unwrap();
        for e in (-8..=0).rev() {
            let want = if e % 2 == 0 { RatFunc::one() } else { RatFunc::zero() };
            assert_eq!(s.coeff(e).unwrap(), want, "u^{e}");
        }
        assert_eq!(s.coeff(-9), None);
    }

    #[test]
    fn inverse_of_big_u() {
        let uinv = big_u().inv().unwrap();
        let s = series_expand(&uinv, Sym::U, 12).unwrap();
        // (q+q^-1) q^-1 u^-2 - (q+q^-1) q^-3 u^-6 + ...
        let qq = r("qh^2 + qh^-2");
        assert_eq!(s.coeff(-2).unwrap(), &qq * &r("qh^-2"));
        assert_eq!(s.coeff(-4).unwrap(), RatFunc::zero());
        assert_eq!(s.coeff(-6).unwrap(), -&(&qq * &r("qh^-6")));
        // multiply back by U: 1 through the window
        let us = series_expand(&big_u(), Sym::U, 12).unwrap();
        let prod = us.mul(&s);
        assert_eq!(prod.coeff(0).unwrap(), RatFunc::one());
        for e in prod.floor()..0 {
            assert!(prod.coeff(e).unwrap().is_zero(), "u^{e}");
        }
    }

    #[test]
    fn monomial_series() {
        let s = series_expand(&r("u^1"), Sym::U, 3).unwrap();
        assert_eq!(s.terms().count(), 1);
        assert_eq!(s.coeff(1).unwrap(), RatFunc::one());
        assert!(series_expand(&r("u^1"), Sym::U, 0).is_err());
    }

    #[test]
    fn residual_vanishes_in_window() {
        let f = &r("u^3 + w^1 u^1 + 2") / &(&r("u^1 - w^1") * &r("qh^2 u^2 + 1 + v^1"));
        let order = 10;
        let s = series_expand(&f, Sym::U, order).unwrap();
        let den = series_expand(&f.den().into(), Sym::U, 40).unwrap();
        let num = series_expand(&f.num().clone().into(), Sym::U, 40).unwrap();
        let resid = s.mul(&den).sub(&num);
        assert!(resid.is_zero(), "{resid:?}");
        assert!(resid.floor() <= 3 - order);
    }
}
