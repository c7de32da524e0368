//! K-operators, the reflection equation and the dressing construction.

mod sixteen;
mod solve;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::arith::{ArithError, LaurentPoly, Monomial, RatFunc, Rational, Sym};
use crate::rep::rmatrix::{build_r, embed_r12, product, ratio};
use crate::rep::{build_lax, AuxMatrix, OperatorMatrix, SpinRep};
use crate::report::CheckRecord;
use crate::scalars::{b_of, u_prime};

pub use sixteen::{expand_sixteen, re_entries, transcribed_sixteen, SixteenRelations, SIXTEEN_LABELS};
pub use solve::{solve_scalar_k, solve_system, specializes_to, SolveError, SolveOutcome};

/// One dressing step: site spin and inhomogeneity symbol.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Site {
    pub two_j: u32,
    pub w: Sym,
}

/// Where a K-operator came from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    Seed(String),
    /// Sites in the order they were added; the last one is the leftmost tensor factor.
    Dressed { seed: String, sites: Vec<Site> },
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Seed(s) => write!(f, "seed({s})"),
            Provenance::Dressed { seed, sites } => {
                write!(f, "dressed(N={}, seed={seed}, spins=[", sites.len())?;
                for (i, s) in sites.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{}/2", s.two_j)?;
                }
                f.write_str("], w=[")?;
                for (i, s) in sites.iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    f.write_str(s.w.name())?;
                }
                f.write_str("])")
            }
        }
    }
}

/// `K(u) = [[A, B], [C, D]]`, entries acting on a common quantum space, spectral symbol `u`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KOperator {
    pub k: AuxMatrix,
    pub provenance: Provenance,
}

impl KOperator {
    pub fn new(k: AuxMatrix, provenance: Provenance) -> Self {
        KOperator { k, provenance }
    }

    /// `A = D = 1`, `B = C = 0` on a one-dimensional space.
    pub fn identity() -> Self {
        KOperator::new(AuxMatrix::identity(1), Provenance::Seed("identity".into()))
    }

    pub fn dim(&self) -> usize {
        self.k.dim()
    }

    pub fn a(&self) -> &OperatorMatrix {
        self.k.get(0, 0)
    }
    pub fn b(&self) -> &OperatorMatrix {
        self.k.get(0, 1)
    }
    pub fn c(&self) -> &OperatorMatrix {
        self.k.get(1, 0)
    }
    pub fn d(&self) -> &OperatorMatrix {
        self.k.get(1, 1)
    }

    /// Entries with `u` replaced by `x`.
    pub fn at(&self, x: &Monomial) -> Result<AuxMatrix, ArithError> {
        self.k.map_monomials(&[(Sym::U, *x)])
    }

    pub fn scaled(&self, f: &RatFunc) -> Self {
        KOperator::new(self.k.scale(f), self.provenance.clone())
    }

    /// Short label used in relation ids.
    pub fn label(&self) -> String {
        match &self.provenance {
            Provenance::Seed(s) => s.clone(),
            Provenance::Dressed { seed, sites } => {
                let spins: Vec<String> = sites.iter().map(|s| format!("{}", s.two_j)).collect();
                format!("{seed}+N{}[2j={}]", sites.len(), spins.join(","))
            }
        }
    }
}

/// Both sides of the reflection equation on `aux ⊗ aux ⊗ quantum`.
pub fn re_sides(k: &KOperator) -> Result<(OperatorMatrix, OperatorMatrix), ArithError> {
    let d = k.dim();
    let ku = k.k.leg1();
    let kv = k.at(&Monomial::var(Sym::V))?.leg2();
    let r_minus = embed_r12(&build_r(&ratio(Sym::U, Sym::V)), d);
    let r_plus = embed_r12(&build_r(&product(Sym::U, Sym::V)), d);
    let lhs = r_minus.mul(&ku).mul(&r_plus).mul(&kv);
    let rhs = kv.mul(&r_plus).mul(&ku).mul(&r_minus);
    Ok((lhs, rhs))
}

/// `R(u/v) K1(u) R(uv) K2(v) = K2(v) R(uv) K1(u) R(u/v)`, entrywise.
pub fn check_re(k: &KOperator) -> CheckRecord {
    let id = format!("RE[{}]", k.label());
    match re_sides(k) {
        Ok((lhs, rhs)) => CheckRecord::compare("re", &id, &lhs, &rhs),
        Err(e) => CheckRecord::fail("re", &id, format!("{e}")),
    }
}

/// `L(uw) K(u) L(u/w)` with the new site as the leftmost tensor factor.
pub fn dress(k: &KOperator, rep: &SpinRep, w: Sym) -> KOperator {
    let wm = Monomial::var(w);
    let lp = build_lax(&Monomial::var(Sym::U).mul(&wm).expect("small exponents"), rep);
    let lm = build_lax(&Monomial::var(Sym::U).div(&wm).expect("small exponents"), rep);
    let d = rep.dim() * k.dim();
    let entry = |a: usize, c: usize| {
        let mut acc = OperatorMatrix::zero(d);
        for b in 0..2 {
            for e in 0..2 {
                let kb = k.k.get(b, e);
                if kb.is_zero() {
                    continue;
                }
                let l = lp.get(a, b).mul(lm.get(e, c));
                if l.is_zero() {
                    continue;
                }
                acc = acc.add(&l.kron(kb));
            }
        }
        acc
    };
    let site = Site { two_j: rep.two_j, w };
    let provenance = match &k.provenance {
        Provenance::Seed(s) => Provenance::Dressed { seed: s.clone(), sites: alloc::vec![site] },
        Provenance::Dressed { seed, sites } => {
            let mut sites = sites.clone();
            sites.push(site);
            Provenance::Dressed { seed: seed.clone(), sites }
        }
    };
    KOperator::new(AuxMatrix::new(entry(0, 0), entry(0, 1), entry(1, 0), entry(1, 1)), provenance)
}

/// `q u^2 + q^{-1} u^{-2} - w^2 - w^{-2}`, the factor a spin-0 site multiplies `K` by.
pub fn site_factor(w: Sym) -> RatFunc {
    let w2 = Monomial::var_pow(w, 2);
    let ws = &LaurentPoly::monomial(w2, Rational::one())
        + &LaurentPoly::monomial(w2.inv().expect("small exponents"), Rational::one());
    (&u_prime(Sym::U) - &ws).into()
}

/// The dressing with every site factor divided out; seeds are returned unchanged.
pub fn normalized(k: &KOperator) -> KOperator {
    match &k.provenance {
        Provenance::Seed(_) => k.clone(),
        Provenance::Dressed { sites, .. } => {
            let mut f = RatFunc::one();
            for s in sites {
                f = &f * &site_factor(s.w);
            }
            k.scaled(&f.inv().expect("nonzero site factor"))
        }
    }
}

/// Dresses `seed` once per entry of `spins`, using `w`, `w2`, `w3` in turn.
pub fn dress_chain(seed: &KOperator, spins: &[u32]) -> Option<KOperator> {
    let mut k = seed.clone();
    for (i, &tj) in spins.iter().enumerate() {
        k = dress(&k, &SpinRep::new(tj), Sym::site(i)?);
    }
    Some(k)
}

/// Hand-written scalar seeds. Each is also produced (up to parameter names) by
/// [`solve_scalar_k`] at degree one.
pub mod seeds {
    use super::*;

    fn s(text: &str) -> RatFunc {
        text.parse().expect("seed literal")
    }

    /// `[[e, b (u - 1/u)], [c (u - 1/u), e]]` with `e = p0`, `b = p1`, `c = p2`.
    pub fn nondiagonal() -> KOperator {
        KOperator::new(
            AuxMatrix::scalars(s("p0"), s("p1 u - p1 u^-1"), s("p2 u - p2 u^-1"), s("p0")),
            Provenance::Seed("nondiag".into()),
        )
    }

    /// `[[e, b (u + 1/u)], [c (u + 1/u), -e]]`.
    pub fn nondiagonal_odd() -> KOperator {
        KOperator::new(
            AuxMatrix::scalars(s("p0"), s("p1 u + p1 u^-1"), s("p2 u + p2 u^-1"), s("-p0")),
            Provenance::Seed("nondiag-odd".into()),
        )
    }

    /// `diag(x u + y/u, y u + x/u)`.
    pub fn diagonal() -> KOperator {
        KOperator::new(
            AuxMatrix::scalars(s("p0 u + p1 u^-1"), s("0"), s("0"), s("p1 u + p0 u^-1")),
            Provenance::Seed("diag".into()),
        )
    }

    /// The nondiagonal family divided by `u - 1/u`: `B -> b`, `C -> c` at
    /// `u = ∞` and the currents are series in `1/U` with no principal part.
    pub fn mode_compatible() -> KOperator {
        let f = RatFunc::from(b_of(&Monomial::var(Sym::U))).inv().expect("nonzero");
        let mut k = nondiagonal().scaled(&f);
        k.provenance = Provenance::Seed("modal".into());
        k
    }

    /// [`nondiagonal`] at `e = 1`, `b = 2`, `c = 3`.
    pub fn nondiagonal_with_numbers() -> KOperator {
        let binds = [(Sym::param(0), RatFunc::int(1)), (Sym::param(1), RatFunc::int(2)), (Sym::param(2), RatFunc::int(3))];
        let k = nondiagonal();
        KOperator::new(k.k.try_map(|m| m.substitute(&binds)).expect("seed substitution"), k.provenance)
    }

    /// [`mode_compatible`] with the free parameters bound to `e`, `b`, `c`.
    pub fn mode_compatible_with(e: &RatFunc, b: &RatFunc, c: &RatFunc) -> KOperator {
        let binds = [(Sym::param(0), e.clone()), (Sym::param(1), b.clone()), (Sym::param(2), c.clone())];
        let k = mode_compatible();
        let entries = k.k.try_map(|m| m.substitute(&binds)).expect("seed substitution");
        KOperator::new(entries, k.provenance)
    }
}
