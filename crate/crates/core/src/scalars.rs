//! Frequently used scalars of the coefficient field.

use crate::arith::{LaurentPoly, Monomial, RatFunc, Rational, Sym};

/// `qh^k`, i.e. `q^{k/2}`.
pub fn qh_pow(k: i32) -> LaurentPoly {
    LaurentPoly::var_pow(Sym::QH, k)
}

/// `q^k`.
pub fn q_pow(k: i32) -> LaurentPoly {
    qh_pow(2 * k)
}

pub fn q() -> RatFunc {
    q_pow(1).into()
}

pub fn q_inv() -> RatFunc {
    q_pow(-1).into()
}

/// `q + q^{-1}`.
pub fn q_plus() -> RatFunc {
    (&q_pow(1) + &q_pow(-1)).into()
}

/// `q - q^{-1}`.
pub fn q_minus() -> RatFunc {
    (&q_pow(1) - &q_pow(-1)).into()
}

/// The q-integer `[n]_q = (q^n - q^{-n})/(q - q^{-1})` as a Laurent polynomial in `q`.
pub fn q_int(n: i32) -> LaurentPoly {
    if n == 0 {
        return LaurentPoly::zero();
    }
    let (sign, n) = if n < 0 { (-1, -n) } else { (1, n) };
    let terms = (0..n).map(|k| (Monomial::var_pow(Sym::QH, 2 * (n - 1 - 2 * k)), Rational::from_int(sign)));
    LaurentPoly::from_terms(terms)
}

/// `x q - x^{-1} q^{-1}` for a monomial argument `x`.
pub fn a_of(x: &Monomial) -> LaurentPoly {
    let xq = x.mul(&Monomial::var_pow(Sym::QH, 2)).expect("small exponents");
    let xi = xq.inv().expect("small exponents");
    &LaurentPoly::monomial(xq, Rational::one()) - &LaurentPoly::monomial(xi, Rational::one())
}

/// `x - x^{-1}`.
pub fn b_of(x: &Monomial) -> LaurentPoly {
    let xi = x.inv().expect("small exponents");
    &LaurentPoly::monomial(*x, Rational::one()) - &LaurentPoly::monomial(xi, Rational::one())
}

/// `x q + x^{-1} q^{-1}`.
pub fn a_plus_of(x: &Monomial) -> LaurentPoly {
    let xq = x.mul(&Monomial::var_pow(Sym::QH, 2)).expect("small exponents");
    let xi = xq.inv().expect("small exponents");
    &LaurentPoly::monomial(xq, Rational::one()) + &LaurentPoly::monomial(xi, Rational::one())
}

/// `q x^2 + q^{-1} x^{-2}`, which is `(q + q^{-1})` times the symmetric variable.
pub fn u_prime(x: Sym) -> LaurentPoly {
    let m = Monomial::from_pairs(&[(Sym::QH, 2), (x, 2)]).expect("small exponents");
    let mi = m.inv().expect("small exponents");
    &LaurentPoly::monomial(m, Rational::one()) + &LaurentPoly::monomial(mi, Rational::one())
}

/// The symmetric variable `(q x^2 + q^{-1} x^{-2}) / (q + q^{-1})`.
pub fn big_u(x: Sym) -> RatFunc {
    &RatFunc::from(u_prime(x)) / &q_plus()
}

/// `rho = k_+ k_- (q + q^{-1})^2` with symbolic `k_±`.
pub fn rho_symbolic() -> RatFunc {
    let qp = q_plus();
    &(&RatFunc::var(Sym::KP) * &RatFunc::var(Sym::KM)) * &(&qp * &qp)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_integers() {
        assert_eq!(q_int(1), LaurentPoly::one());
        assert_eq!(q_int(2), &q_pow(1) + &q_pow(-1));
        let q3 = &(&q_pow(2) + &LaurentPoly::one()) + &q_pow(-2);
        assert_eq!(q_int(3), q3);
        // [n]_q (q - q^-1) = q^n - q^-n
        let d = &q_pow(1) - &q_pow(-1);
        assert_eq!(&q_int(4) * &d, &q_pow(4) - &q_pow(-4));
        assert_eq!(q_int(-2), -q_int(2));
    }

    #[test]
    fn symmetric_variable() {
        let want: LaurentPoly = "qh^2 u^2 + qh^-2 u^-2".parse().unwrap();
        assert_eq!(u_prime(Sym::U), want);
        // U - 1 = a(u) b(u) / (q + q^-1)
        let u = Monomial::var(Sym::U);
        let lhs = &big_u(Sym::U) - &RatFunc::one();
        let rhs = &RatFunc::from(&a_of(&u) * &b_of(&u)) / &q_plus();
        assert_eq!(lhs, rhs);
    }
}
