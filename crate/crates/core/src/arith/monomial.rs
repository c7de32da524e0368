//! Exponent vectors over the fixed symbol table.

use core::fmt;

use super::symbol::{Sym, NUM_SYMBOLS};
use super::ArithError;

/// A Laurent monomial: one signed exponent per symbol slot.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial([i32; NUM_SYMBOLS]);

impl Default for Monomial {
    fn default() -> Self {
        Monomial::one()
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; NUM_SYMBOLS])
    }

    pub fn var(s: Sym) -> Self {
        Self::var_pow(s, 1)
    }

    pub fn var_pow(s: Sym, e: i32) -> Self {
        let mut m = Monomial::one();
        m.set(s, e);
        m
    }

    pub fn from_pairs(pairs: &[(Sym, i32)]) -> Result<Self, ArithError> {
        let mut m = Monomial::one();
        for &(s, e) in pairs {
            let cur = m.exp(s);
            m.set(s, cur.checked_add(e).ok_or(ArithError::ExponentOverflow)?);
        }
        Ok(m)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|e| *e == 0)
    }

    pub fn exp(&self, s: Sym) -> i32 {
        self.0[s.index()]
    }

    pub fn set(&mut self, s: Sym, e: i32) {
        self.0[s.index()] = e;
    }

    /// Symbols with nonzero exponent, in slot order.
    pub fn support(&self) -> impl Iterator<Item = (Sym, i32)> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, e)| **e != 0)
            .map(|(i, e)| (Sym::from_index(i).expect("slot in range"), *e))
    }

    fn zip_with(&self, other: &Monomial, f: impl Fn(i32, i32) -> Option<i32>) -> Result<Monomial, ArithError> {
        let mut out = [0; NUM_SYMBOLS];
        for (i, o) in out.iter_mut().enumerate() {
            *o = f(self.0[i], other.0[i]).ok_or(ArithError::ExponentOverflow)?;
        }
        Ok(Monomial(out))
    }

    pub fn mul(&self, other: &Monomial) -> Result<Monomial, ArithError> {
        self.zip_with(other, i32::checked_add)
    }

    pub fn inv(&self) -> Result<Monomial, ArithError> {
        self.zip_with(self, |a, _| a.checked_neg())
    }

    pub fn div(&self, other: &Monomial) -> Result<Monomial, ArithError> {
        self.zip_with(other, i32::checked_sub)
    }

    pub fn pow(&self, k: i32) -> Result<Monomial, ArithError> {
        self.zip_with(self, |a, _| a.checked_mul(k))
    }

    /// Componentwise minimum (the monomial "gcd" in the Laurent group).
    pub fn min(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| Some(a.min(b))).expect("no overflow")
    }

    pub fn max(&self, other: &Monomial) -> Monomial {
        self.zip_with(other, |a, b| Some(a.max(b))).expect("no overflow")
    }

    pub fn total_degree(&self) -> i64 {
        self.0.iter().map(|e| *e as i64).sum()
    }

    /// Same monomial with the exponent of `s` removed.
    pub fn without(&self, s: Sym) -> Monomial {
        let mut m = *self;
        m.set(s, 0);
        m
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, e) in self.support() {
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            write!(f, "{s}^{e}")?;
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimmed_equality() {
        let a = Monomial::from_pairs(&[(Sym::U, 2), (Sym::KP, 1)]).unwrap();
        let b = Monomial::from_pairs(&[(Sym::KP, 1), (Sym::U, 2)]).unwrap();
        assert_eq!(a, b);
        let c = a.mul(&Monomial::var_pow(Sym::KP, -1)).unwrap();
        assert_eq!(c, Monomial::var_pow(Sym::U, 2));
    }

    #[test]
    fn overflow_is_an_error() {
        let a = Monomial::var_pow(Sym::U, i32::MAX);
        assert_eq!(a.mul(&Monomial::var(Sym::U)), Err(ArithError::ExponentOverflow));
        assert!(Monomial::var_pow(Sym::U, i32::MIN).inv().is_err());
    }

    #[test]
    fn lex_order() {
        let q = Monomial::var(Sym::QH);
        let u = Monomial::var_pow(Sym::U, 5);
        assert!(q > u);
        assert!(Monomial::one() > Monomial::var_pow(Sym::QH, -1));
    }
}
