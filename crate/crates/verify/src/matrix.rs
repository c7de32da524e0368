//! The operators every pipeline runs over.

use qonsager_core::arith::{RatFunc, Sym};
use qonsager_core::currents::{extract_modes, infer_kpm, phi_decompose, CurrentQuadruple, ModeTable};
use qonsager_core::reflection::{dress_chain, normalized, seeds, solve_scalar_k, KOperator};
use qonsager_core::rep::OperatorMatrix;

use crate::config::{SeedChoice, SuiteConfig};

/// A K-operator with the `k_±` its currents are read with.
#[derive(Clone, Debug)]
pub struct Subject {
    pub label: String,
    pub k: KOperator,
    pub kplus: RatFunc,
    pub kminus: RatFunc,
}

impl Subject {
    pub fn symbolic(k: KOperator) -> Self {
        Subject { label: k.label(), k, kplus: RatFunc::var(Sym::KP), kminus: RatFunc::var(Sym::KM) }
    }
}

#[derive(Debug, thiserror::Error)]
pub enum MatrixError {
    #[error("seed {0} does not exist ({1} solved families)")]
    NoSuchSeed(SeedChoice, usize),
    #[error("scalar solver hit its node cap")]
    SolverCap,
    #[error("{0}")]
    Core(String),
}

/// Degree-one scalar families in solver order.
pub fn solved_families() -> Result<Vec<KOperator>, MatrixError> {
    let out = solve_scalar_k(1).map_err(|e| MatrixError::Core(e.to_string()))?;
    if out.cap_hit {
        return Err(MatrixError::SolverCap);
    }
    Ok(out.families)
}

pub fn seed_operator(choice: SeedChoice) -> Result<KOperator, MatrixError> {
    match choice {
        SeedChoice::Identity => Ok(KOperator::identity()),
        SeedChoice::Solved(i) => {
            let fams = solved_families()?;
            let n = fams.len();
            fams.into_iter().nth(i).ok_or(MatrixError::NoSuchSeed(choice, n))
        }
    }
}

/// Dimension of the quantum space after dressing with `spins`.
pub fn quantum_dim(spins: &[u32]) -> usize {
    spins.iter().map(|&s| s as usize + 1).product()
}

/// The seed, the seed dressed with the configured sites, and the dressed modal chain.
pub fn re_subjects(cfg: &SuiteConfig) -> Result<Vec<Subject>, MatrixError> {
    let seed = seed_operator(cfg.seed)?;
    let spins = cfg.site_spins();
    let mut out = vec![Subject::symbolic(seed.clone())];
    if !spins.is_empty() {
        let dressed = dress_chain(&seed, &spins).ok_or(MatrixError::Core("too many sites".into()))?;
        out.push(Subject::symbolic(dressed));
    }
    let m = modal_subject(&spins)?;
    out.push(m);
    Ok(out)
}

/// The normalized modal chain with `k_±` read off from `B`, `C`.
pub fn modal_subject(spins: &[u32]) -> Result<Subject, MatrixError> {
    let k = dress_chain(&seeds::mode_compatible(), spins).ok_or(MatrixError::Core("too many sites".into()))?;
    let k = normalized(&k);
    let (kplus, kminus) = infer_kpm(&k).map_err(|e| MatrixError::Core(e.to_string()))?;
    Ok(Subject { label: k.label(), k, kplus, kminus })
}

/// Currents and modes of the modal chain.
#[derive(Clone, Debug)]
pub struct ModalBase {
    pub subject: Subject,
    pub currents: CurrentQuadruple,
    pub table: ModeTable,
}

impl ModalBase {
    pub fn build(spins: &[u32], order: usize) -> Result<Self, MatrixError> {
        let subject = modal_subject(spins)?;
        let currents =
            phi_decompose(&subject.k, &subject.kplus, &subject.kminus).map_err(|e| MatrixError::Core(e.to_string()))?;
        let table = extract_modes(&currents, order).map_err(|e| MatrixError::Core(e.to_string()))?;
        Ok(ModalBase { subject, currents, table })
    }

    pub fn w0(&self) -> &OperatorMatrix {
        self.table.w0()
    }

    pub fn w1(&self) -> &OperatorMatrix {
        self.table.w1()
    }

    /// `W_0` and `W_1` commute, as for an undressed seed.
    pub fn is_trivial(&self) -> bool {
        OperatorMatrix::commutator(self.w0(), self.w1()).is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seeds_resolve() {
        assert_eq!(seed_operator(SeedChoice::Identity).unwrap().label(), KOperator::identity().label());
        let n = solved_families().unwrap().len();
        assert!(n >= 2);
        assert!(seed_operator(SeedChoice::Solved(n)).is_err());
    }

    #[test]
    fn subjects_for_one_site() {
        let cfg = SuiteConfig::default();
        let s = re_subjects(&cfg).unwrap();
        assert_eq!(s.len(), 3);
        assert_eq!(s[1].k.dim(), 2);
        assert_eq!(quantum_dim(&[1, 2]), 6);
    }

    #[test]
    fn undressed_modal_base_is_trivial() {
        assert!(ModalBase::build(&[], 1).unwrap().is_trivial());
        assert!(!ModalBase::build(&[1], 1).unwrap().is_trivial());
    }
}
