//! Free noncommutative polynomials over [`RatFunc`].
//!
//! Words are compared by length first, then lexicographically by generator
//! name; that graded order is also the print order.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use smallvec::SmallVec;

use crate::arith::{ArithError, Monomial, RatFunc, Sym};

/// A named generator. A suffix `@x` attaches the spectral symbol `x`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Generator(Arc<str>);

impl Generator {
    pub fn new(name: &str) -> Self {
        Generator(Arc::from(name))
    }

    /// `base@param`.
    pub fn at(base: &str, param: Sym) -> Self {
        let mut s = String::from(base);
        s.push('@');
        s.push_str(param.name());
        Generator(Arc::from(s.as_str()))
    }

    pub fn name(&self) -> &str {
        &self.0
    }

    pub fn base(&self) -> &str {
        self.0.split_once('@').map_or(&self.0, |(b, _)| b)
    }

    pub fn param(&self) -> Option<Sym> {
        self.0.split_once('@').and_then(|(_, p)| Sym::from_name(p))
    }

    fn with_param(&self, p: Sym) -> Self {
        Generator::at(self.base(), p)
    }
}

impl fmt::Debug for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A word in the generators; the empty word is the unit.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word(SmallVec<[Generator; 4]>);

impl Word {
    pub fn one() -> Self {
        Word::default()
    }

    pub fn letters(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    fn concat(&self, other: &Word) -> Word {
        let mut w = self.0.clone();
        w.extend(other.0.iter().cloned());
        Word(w)
    }
}

impl FromIterator<Generator> for Word {
    fn from_iter<I: IntoIterator<Item = Generator>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (i, g) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{g}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FreeError {
    #[error("no image for generator {0}")]
    MissingImage(Generator),
    #[error("images live in different targets")]
    MixedTargets,
    #[error("q-commutator parameter is zero")]
    ZeroParameter,
    #[error(transparent)]
    Arith(#[from] ArithError),
}

/// Element of the free algebra: a finite sum of words with rational-function coefficients.
#[derive(Clone, Default, PartialEq, Eq)]
pub struct NCPoly {
    terms: BTreeMap<Word, RatFunc>,
}

impl NCPoly {
    pub fn zero() -> Self {
        NCPoly::default()
    }

    pub fn one() -> Self {
        Self::scalar(RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::term(Word::one(), c)
    }

    pub fn term(w: Word, c: RatFunc) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        NCPoly { terms }
    }

    pub fn gen(g: Generator) -> Self {
        Self::term(core::iter::once(g).collect(), RatFunc::one())
    }

    /// Shorthand for the generator `name`, optionally attached to a symbol.
    pub fn g(name: &str) -> Self {
        Self::gen(Generator::new(name))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatFunc)> {
        self.terms.iter()
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

    pub fn coeff(&self, w: &Word) -> RatFunc {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    /// All generators occurring, sorted.
    pub fn generators(&self) -> Vec<Generator> {
        let mut out: Vec<Generator> =
            self.terms.keys().flat_map(|w| w.0.iter().cloned()).collect();
        out.sort();
        out.dedup();
        out
    }

    fn add_term(&mut self, w: Word, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&w) {
            Some(x) => {
                *x = &*x + &c;
                if x.is_zero() {
                    self.terms.remove(&w);
                }
            }
            None => {
                self.terms.insert(w, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), -c);
        }
        out
    }

    pub fn neg(&self) -> Self {
        NCPoly { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        NCPoly {
            terms: self
                .terms
                .iter()
                .map(|(w, x)| (w.clone(), x * c))
                .filter(|(_, x)| !x.is_zero())
                .collect(),
        }
    }

    /// Word-concatenation product.
    pub fn mul(&self, other: &Self) -> Self {
        let mut buckets: BTreeMap<Word, Vec<RatFunc>> = BTreeMap::new();
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                buckets.entry(wa.concat(wb)).or_default().push(ca * cb);
            }
        }
        NCPoly {
            terms: buckets
                .into_iter()
                .map(|(w, cs)| (w, RatFunc::sum(cs.iter())))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
        }
    }

    /// `[a, b] = ab - ba`.
    pub fn commutator(a: &Self, b: &Self) -> Self {
        a.mul(b).sub(&b.mul(a))
    }

    /// `[a, b]_s = s ab - s^{-1} ba`.
    pub fn q_commutator(a: &Self, b: &Self, s: &RatFunc) -> Result<Self, FreeError> {
        let si = s.inv().map_err(|_| FreeError::ZeroParameter)?;
        Ok(a.mul(b).scale(s).sub(&b.mul(a).scale(&si)))
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(
        &self,
        f: impl Fn(&RatFunc) -> Result<RatFunc, ArithError>,
    ) -> Result<Self, ArithError> {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    /// Renames generators (words keep their order).
    pub fn rename(&self, f: impl Fn(&Generator) -> Generator) -> Self {
        let mut out = NCPoly::zero();
        for (w, c) in &self.terms {
            out.add_term(w.0.iter().map(&f).collect(), c.clone());
        }
        out
    }

    /// Exchanges spectral symbols `x <-> y` in generator names and coefficients at once.
    pub fn swap_params(&self, x: Sym, y: Sym) -> Result<Self, ArithError> {
        let swapped = self.rename(|g| match g.param() {
            Some(p) if p == x => g.with_param(y),
            Some(p) if p == y => g.with_param(x),
            _ => g.clone(),
        });
        let images = [(x, Monomial::var(y)), (y, Monomial::var(x))];
        swapped.map_coeffs(|c| c.map_monomials(&images))
    }

    /// The unique homomorphic extension of `images` into the target algebra `T`.
    pub fn substitute_hom<T: HomTarget>(
        &self,
        images: &dyn Fn(&Generator) -> Option<T>,
        unit: &T,
    ) -> Result<T, FreeError> {
        let mut cache: BTreeMap<Generator, T> = BTreeMap::new();
        let mut acc: Option<T> = None;
        for (w, c) in &self.terms {
            let mut t = unit.clone();
            for g in w.letters() {
                if !cache.contains_key(g) {
                    let img = images(g).ok_or_else(|| FreeError::MissingImage(g.clone()))?;
                    cache.insert(g.clone(), img);
                }
                t = t.hom_mul(&cache[g]);
            }
            let t = t.hom_scale(c);
            acc = Some(match acc {
                Some(a) => a.hom_add(&t),
                None => t,
            });
        }
        Ok(acc.unwrap_or_else(|| unit.hom_scale(&RatFunc::zero())))
    }

    /// `Some(c)` with `self = c * other` and `c != 0`.
    /// The first word, in word order, at which `self` and `other` stop being
    /// proportional, with both coefficients.
    pub fn disproportion(&self, other: &Self) -> Option<(Word, RatFunc, RatFunc)> {
        let mut words: Vec<&Word> = self.terms.keys().chain(other.terms.keys()).collect();
        words.sort();
        words.dedup();
        let mut ratio: Option<(RatFunc, RatFunc)> = None;
        for w in words {
            let (ca, cb) = (self.coeff(w), other.coeff(w));
            let bad = match &ratio {
                _ if ca.is_zero() != cb.is_zero() => true,
                None => {
                    ratio = Some((ca.clone(), cb.clone()));
                    false
                }
                Some((n, d)) => !(&ca * d).eq_cross(&(&cb * n)),
            };
            if bad {
                return Some((w.clone(), ca, cb));
            }
        }
        None
    }

    pub fn proportional_check(&self, other: &Self) -> Option<RatFunc> {
        if self.terms.len() != other.terms.len() || self.is_zero() {
            return None;
        }
        let mut ratio: Option<(RatFunc, RatFunc)> = None;
        for ((wa, ca), (wb, cb)) in self.terms.iter().zip(other.terms.iter()) {
            if wa != wb {
                return None;
            }
            match &ratio {
                None => ratio = Some((ca.clone(), cb.clone())),
                Some((n, d)) => {
                    // ca / cb == n / d
                    if !(ca * d).eq_cross(&(cb * n)) {
                        return None;
                    }
                }
            }
        }
        let (n, d) = ratio?;
        n.checked_div(&d).ok()
    }
}

impl From<RatFunc> for NCPoly {
    fn from(c: RatFunc) -> Self {
        NCPoly::scalar(c)
    }
}

impl From<Generator> for NCPoly {
    fn from(g: Generator) -> Self {
        NCPoly::gen(g)
    }
}

impl fmt::Display for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}] {w}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for NCPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// An associative algebra over [`RatFunc`] that free-algebra elements can be mapped into.
pub trait HomTarget: Clone {
    fn hom_mul(&self, other: &Self) -> Self;
    fn hom_add(&self, other: &Self) -> Self;
    fn hom_scale(&self, c: &RatFunc) -> Self;
}

impl HomTarget for NCPoly {
    fn hom_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }
    fn hom_add(&self, other: &Self) -> Self {
        self.add(other)
    }
    fn hom_scale(&self, c: &RatFunc) -> Self {
        self.scale(c)
    }
}

impl HomTarget for RatFunc {
    fn hom_mul(&self, other: &Self) -> Self {
        self * other
    }
    fn hom_add(&self, other: &Self) -> Self {
        self + other
    }
    fn hom_scale(&self, c: &RatFunc) -> Self {
        self * c
    }
}

/// Image of a generator for [`substitute_mixed`]: either target is allowed, not both.
#[derive(Clone, Debug)]
pub enum Image<M> {
    Poly(NCPoly),
    Matrix(M),
}

/// Homomorphic substitution where each image is tagged with its target.
pub fn substitute_mixed<M: HomTarget>(
    p: &NCPoly,
    images: &BTreeMap<Generator, Image<M>>,
    matrix_unit: Option<&M>,
) -> Result<Image<M>, FreeError> {
    for g in p.generators() {
        if !images.contains_key(&g) {
            return Err(FreeError::MissingImage(g));
        }
    }
    let polys = images.values().filter(|i| matches!(i, Image::Poly(_))).count();
    let mats = images.len() - polys;
    if polys > 0 && mats > 0 {
        return Err(FreeError::MixedTargets);
    }
    if mats > 0 {
        let unit = matrix_unit.ok_or(FreeError::MixedTargets)?;
        let f = |g: &Generator| match images.get(g) {
            Some(Image::Matrix(m)) => Some(m.clone()),
            _ => None,
        };
        Ok(Image::Matrix(p.substitute_hom(&f, unit)?))
    } else {
        let f = |g: &Generator| match images.get(g) {
            Some(Image::Poly(x)) => Some(x.clone()),
            _ => None,
        };
        Ok(Image::Poly(p.substitute_hom(&f, &NCPoly::one())?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{q, q_minus};
    use alloc::string::ToString;

    fn x() -> NCPoly {
        NCPoly::g("x")
    }
    fn y() -> NCPoly {
        NCPoly::g("y")
    }

    #[test]
    fn freeness() {
        assert_ne!(x().mul(&y()), y().mul(&x()));
        assert_eq!(NCPoly::one().mul(&x()), x());
        let s = x().add(&y());
        let sq = s.mul(&s);
        assert_eq!(sq.len(), 4);
        assert_eq!(sq.to_string(), "[1] x x + [1] x y + [1] y x + [1] y y");
    }

    #[test]
    fn q_commutator_examples() {
        let c = NCPoly::q_commutator(&x(), &y(), &q()).unwrap();
        let want = x().mul(&y()).scale(&q()).sub(&y().mul(&x()).scale(&q().inv().unwrap()));
        assert_eq!(c, want);
        let xx = NCPoly::q_commutator(&x(), &x(), &q()).unwrap();
        assert_eq!(xx, x().mul(&x()).scale(&q_minus()));
        assert_eq!(
            NCPoly::q_commutator(&x(), &y(), &RatFunc::one()).unwrap(),
            NCPoly::commutator(&x(), &y())
        );
        assert!(NCPoly::q_commutator(&x(), &y(), &RatFunc::zero()).is_err());
    }

    #[test]
    fn proportionality() {
        let a = x().mul(&y()).scale(&RatFunc::int(2));
        assert_eq!(a.proportional_check(&x().mul(&y())), Some(RatFunc::int(2)));
        assert_eq!(x().mul(&y()).proportional_check(&y().mul(&x())), None);
        let b = x().add(&y().scale(&q()));
        let c = x().add(&y());
        assert_eq!(b.proportional_check(&c), None);
    }

    #[test]
    fn homomorphism_into_scalars() {
        let p = x().mul(&y()).sub(&y().scale(&RatFunc::int(3)));
        let img = |g: &Generator| match g.name() {
            "x" => Some(RatFunc::int(5)),
            "y" => Some(RatFunc::var(Sym::U)),
            _ => None,
        };
        let v = p.substitute_hom(&img, &RatFunc::one()).unwrap();
        assert_eq!(v, RatFunc::var(Sym::U) * RatFunc::int(2));
        let missing = NCPoly::g("z").substitute_hom(&img, &RatFunc::one());
        assert_eq!(missing.err(), Some(FreeError::MissingImage(Generator::new("z"))));
    }

    #[test]
    fn identity_images_and_mixed_targets() {
        let p = x().mul(&y()).add(&NCPoly::one());
        let mut images = BTreeMap::new();
        images.insert(Generator::new("x"), Image::<RatFunc>::Poly(x()));
        images.insert(Generator::new("y"), Image::Poly(y()));
        match substitute_mixed(&p, &images, None).unwrap() {
            Image::Poly(r) => assert_eq!(r, p),
            Image::Matrix(_) => panic!("wrong target"),
        }
        images.insert(Generator::new("y"), Image::Matrix(RatFunc::one()));
        assert_eq!(
            substitute_mixed(&p, &images, Some(&RatFunc::one())).err(),
            Some(FreeError::MixedTargets)
        );
    }

    #[test]
    fn swap_params_renames_and_substitutes() {
        let a = NCPoly::gen(Generator::at("A", Sym::U)).scale(&RatFunc::var(Sym::V));
        let b = a.swap_params(Sym::U, Sym::V).unwrap();
        assert_eq!(b, NCPoly::gen(Generator::at("A", Sym::V)).scale(&RatFunc::var(Sym::U)));
        assert_eq!(b.swap_params(Sym::U, Sym::V).unwrap(), a);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn arb_nc() -> impl Strategy<Value = NCPoly> {
            let letters = ["x", "y", "z"];
            proptest::collection::vec(
                (proptest::collection::vec(0usize..3, 0..3), -3i64..=3, -2i32..=2),
                0..4,
            )
            .prop_map(move |ts| {
                let mut p = NCPoly::zero();
                for (w, c, e) in ts {
                    let word: Word = w.into_iter().map(|i| Generator::new(letters[i])).collect();
                    let coeff = &RatFunc::int(c) * &RatFunc::var_pow(Sym::QH, e);
                    p = p.add(&NCPoly::term(word, coeff));
                }
                p
            })
        }

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]

            #[test]
            fn associativity(a in arb_nc(), b in arb_nc(), c in arb_nc()) {
                prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
            }

            #[test]
            fn q_commutator_antisymmetry(a in arb_nc(), b in arb_nc()) {
                let lhs = NCPoly::q_commutator(&a, &b, &q()).unwrap();
                let rhs = NCPoly::q_commutator(&b, &a, &q().inv().unwrap()).unwrap().neg();
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn substitution_is_multiplicative(a in arb_nc(), b in arb_nc()) {
                let img = |g: &Generator| Some(match g.name() {
                    "x" => NCPoly::g("x").add(&NCPoly::g("y")),
                    "y" => NCPoly::g("z").scale(&q()),
                    _ => NCPoly::one(),
                });
                let lhs = a.mul(&b).substitute_hom(&img, &NCPoly::one()).unwrap();
                let rhs = a.substitute_hom(&img, &NCPoly::one()).unwrap()
                    .mul(&b.substitute_hom(&img, &NCPoly::one()).unwrap());
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
