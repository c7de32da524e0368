use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use qonsager_core::arith::Rational;
use serde::Serialize;

/// Upper bound on dressing sites unless raised explicitly.
pub const DEFAULT_MAX_SITES: usize = 2;
/// Hard limit: one inhomogeneity symbol per site exists for three sites.
pub const SITE_SYMBOLS: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Ybe,
    Rll,
    RIntertwiner,
    Re,
    Sixteen,
    Theorem1,
    Currents,
    Modes,
    Aq,
    Higher,
    Qdg,
    Coaction,
    Comodule,
    TIntertwiner,
    ScalarK,
    All,
}

impl Suite {
    pub const EACH: [Suite; 15] = [
        Suite::Ybe,
        Suite::Rll,
        Suite::RIntertwiner,
        Suite::Re,
        Suite::Sixteen,
        Suite::Theorem1,
        Suite::Currents,
        Suite::Modes,
        Suite::Aq,
        Suite::Higher,
        Suite::Qdg,
        Suite::Coaction,
        Suite::Comodule,
        Suite::TIntertwiner,
        Suite::ScalarK,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Ybe => "ybe",
            Suite::Rll => "rll",
            Suite::RIntertwiner => "r-intertwiner",
            Suite::Re => "re",
            Suite::Sixteen => "sixteen",
            Suite::Theorem1 => "theorem1",
            Suite::Currents => "currents",
            Suite::Modes => "modes",
            Suite::Aq => "aq",
            Suite::Higher => "higher",
            Suite::Qdg => "qdg",
            Suite::Coaction => "coaction",
            Suite::Comodule => "comodule",
            Suite::TIntertwiner => "t-intertwiner",
            Suite::ScalarK => "scalar-k",
            Suite::All => "all",
        }
    }

    /// The concrete suites selected by `self`.
    pub fn expand(self) -> Vec<Suite> {
        match self {
            Suite::All => Suite::EACH.to_vec(),
            s => vec![s],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| format!("unknown suite `{s}`"))
    }
}

/// The scalar solution a pipeline starts from.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeedChoice {
    Identity,
    /// Index into the degree-one solution families, in solver order.
    Solved(usize),
}

impl fmt::Display for SeedChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeedChoice::Identity => f.write_str("identity"),
            SeedChoice::Solved(i) => write!(f, "solved({i})"),
        }
    }
}

impl Serialize for SeedChoice {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl FromStr for SeedChoice {
    type Err = String;

    /// `identity`, `solved(i)` or `solved:i`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if s == "identity" {
            return Ok(SeedChoice::Identity);
        }
        let idx = s
            .strip_prefix("solved(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix("solved:"))
            .ok_or_else(|| format!("unknown seed `{s}`; expected identity or solved(i)"))?;
        idx.trim().parse().map(SeedChoice::Solved).map_err(|e| format!("bad seed index `{idx}`: {e}"))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Text,
    Json,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            _ => Err(format!("unknown format `{s}`")),
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteConfig {
    pub suite: Suite,
    pub sites: usize,
    /// `2j` per dressing site, cycled when shorter than `sites`.
    pub spins: Vec<u32>,
    pub order: usize,
    pub seed: SeedChoice,
    #[serde(serialize_with = "ser_opt_rational")]
    pub numeric_q: Option<Rational>,
    pub output: Option<PathBuf>,
    pub format: Format,
    pub max_sites: usize,
    /// Largest operator dimension a check may build.
    pub max_dim: usize,
}

fn ser_opt_rational<S: serde::Serializer>(v: &Option<Rational>, s: S) -> Result<S::Ok, S::Error> {
    match v {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suite: Suite::All,
            sites: 1,
            spins: vec![1],
            order: 2,
            seed: SeedChoice::Identity,
            numeric_q: None,
            output: None,
            format: Format::Text,
            max_sites: DEFAULT_MAX_SITES,
            max_dim: 64,
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ConfigError {
    #[error("order must be at least 1")]
    Order,
    #[error("{sites} sites exceeds the maximum of {max}")]
    TooManySites { sites: usize, max: usize },
    #[error("at most {SITE_SYMBOLS} sites are supported")]
    SiteSymbols,
    #[error("spin list is empty")]
    NoSpins,
    #[error("numeric q must be positive and different from 1")]
    NumericQ,
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.order < 1 {
            return Err(ConfigError::Order);
        }
        if self.sites > self.max_sites {
            return Err(ConfigError::TooManySites { sites: self.sites, max: self.max_sites });
        }
        if self.sites > SITE_SYMBOLS {
            return Err(ConfigError::SiteSymbols);
        }
        if self.spins.is_empty() {
            return Err(ConfigError::NoSpins);
        }
        if let Some(q) = &self.numeric_q {
            if q.is_negative() || q.is_zero() || q.is_one() {
                return Err(ConfigError::NumericQ);
            }
        }
        Ok(())
    }

    /// `2j` of each site.
    pub fn site_spins(&self) -> Vec<u32> {
        (0..self.sites).map(|i| self.spins[i % self.spins.len()]).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::EACH.into_iter().chain([Suite::All]) {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn seeds_parse() {
        assert_eq!("identity".parse::<SeedChoice>().unwrap(), SeedChoice::Identity);
        assert_eq!("solved(3)".parse::<SeedChoice>().unwrap(), SeedChoice::Solved(3));
        assert_eq!("solved:1".parse::<SeedChoice>().unwrap(), SeedChoice::Solved(1));
        assert!("solved(x)".parse::<SeedChoice>().is_err());
        assert_eq!(SeedChoice::Solved(2).to_string(), "solved(2)");
    }

    #[test]
    fn validation() {
        let mut c = SuiteConfig::default();
        assert!(c.validate().is_ok());
        c.order = 0;
        assert_eq!(c.validate(), Err(ConfigError::Order));
        c.order = 1;
        c.sites = 3;
        assert!(matches!(c.validate(), Err(ConfigError::TooManySites { .. })));
        c.max_sites = 4;
        c.sites = 4;
        assert_eq!(c.validate(), Err(ConfigError::SiteSymbols));
        c.sites = 2;
        c.spins = vec![1, 2];
        assert_eq!(c.site_spins(), vec![1, 2]);
        c.spins = vec![2];
        assert_eq!(c.site_spins(), vec![2, 2]);
    }
}
