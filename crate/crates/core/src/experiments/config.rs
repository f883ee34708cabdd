use std::collections::BTreeSet;
use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::geometry::check_alpha;
use crate::params::CliqueBudget;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Model {
    Hrg,
    HrgPoisson,
    Girg,
}

impl Model {
    pub fn tag(self) -> &'static str {
        match self {
            Model::Hrg => "hrg",
            Model::HrgPoisson => "hrg-poisson",
            Model::Girg => "girg",
        }
    }

    pub(crate) fn seed_tag(self) -> u64 {
        self as u64
    }

    pub fn is_hrg(self) -> bool {
        matches!(self, Model::Hrg | Model::HrgPoisson)
    }
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim() {
            "hrg" => Ok(Model::Hrg),
            "hrg-poisson" => Ok(Model::HrgPoisson),
            "girg" => Ok(Model::Girg),
            other => Err(Error::invalid(format!("unknown model {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Analysis {
    Degeneracy,
    Colouring,
    CliquesExact,
    CliqueExtend,
    Separator,
    InnerDegrees,
}

impl Analysis {
    pub const ALL: [Analysis; 6] = [
        Analysis::Degeneracy,
        Analysis::Colouring,
        Analysis::CliquesExact,
        Analysis::CliqueExtend,
        Analysis::Separator,
        Analysis::InnerDegrees,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Analysis::Degeneracy => "degeneracy",
            Analysis::Colouring => "colouring",
            Analysis::CliquesExact => "cliques-exact",
            Analysis::CliqueExtend => "clique-extend",
            Analysis::Separator => "separator",
            Analysis::InnerDegrees => "inner-degrees",
        }
    }

    /// Parses a comma-separated list of analysis tags.
    pub fn parse_set(s: &str) -> Result<BTreeSet<Analysis>> {
        s.split(',')
            .map(str::trim)
            .filter(|t| !t.is_empty())
            .map(|t| {
                Analysis::ALL
                    .into_iter()
                    .find(|a| a.tag() == t)
                    .ok_or_else(|| Error::invalid(format!("unknown analysis {t:?}")))
            })
            .collect()
    }

    /// Everything that is cheap on large instances.
    pub fn default_set() -> BTreeSet<Analysis> {
        [
            Analysis::Degeneracy,
            Analysis::Colouring,
            Analysis::CliqueExtend,
            Analysis::InnerDegrees,
        ]
        .into_iter()
        .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Seeds {
    /// Seeds used verbatim.
    List(Vec<u64>),
    /// `count` replicates with seeds derived from `base` and the cell.
    Replicates { base: u64, count: u64 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepConfig {
    pub model: Model,
    pub n_values: Vec<usize>,
    pub alpha_values: Vec<f64>,
    /// `C` for the HRG models, `λ` for GIRG.
    pub model_constant: f64,
    pub seeds: Seeds,
    pub analyses: BTreeSet<Analysis>,
    pub thread_count: usize,
    pub clique_budget: CliqueBudget,
    /// Measure per-stage wall time. Off by default so that output is
    /// byte-reproducible.
    pub record_timings: bool,
    pub output: Option<PathBuf>,
}

impl SweepConfig {
    pub fn new(model: Model, n_values: Vec<usize>, alpha_values: Vec<f64>, seeds: Seeds) -> Self {
        SweepConfig {
            model,
            n_values,
            alpha_values,
            model_constant: if model == Model::Girg { 1.0 } else { 0.0 },
            seeds,
            analyses: Analysis::default_set(),
            thread_count: 1,
            clique_budget: CliqueBudget::default(),
            record_timings: false,
            output: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_values.is_empty() || self.alpha_values.is_empty() {
            return Err(Error::invalid("sweep needs at least one n and one alpha"));
        }
        if let Some(n) = self.n_values.iter().find(|&&n| n == 0) {
            return Err(Error::invalid(format!("n must be at least 1, got {n}")));
        }
        for &a in &self.alpha_values {
            check_alpha(a)?;
        }
        match &self.seeds {
            Seeds::List(s) if s.is_empty() => return Err(Error::invalid("empty seed list")),
            Seeds::Replicates { count: 0, .. } => {
                return Err(Error::invalid("replicate count must be positive"))
            }
            _ => {}
        }
        if !self.model_constant.is_finite()
            || (self.model == Model::Girg && self.model_constant <= 0.0)
        {
            return Err(Error::invalid(format!(
                "invalid model constant {} for {}",
                self.model_constant, self.model
            )));
        }
        if self.thread_count == 0 {
            return Err(Error::invalid("thread count must be positive"));
        }
        if self.analyses.contains(&Analysis::CliquesExact) {
            let max_n = *self.n_values.iter().max().expect("non-empty");
            if max_n > self.clique_budget.max_vertices {
                return Err(Error::invalid(format!(
                    "cliques-exact needs n ≤ {}, sweep reaches {max_n}",
                    self.clique_budget.max_vertices
                )));
            }
        }
        if self.analyses.contains(&Analysis::Separator) && !self.model.is_hrg() {
            return Err(Error::invalid("the separator analysis needs an HRG model"));
        }
        Ok(())
    }

    /// Parses the flat `key = value` format. Blank lines and lines starting
    /// with `#` are ignored.
    ///
    /// Keys: `model`, `n`, `alpha` (comma lists for the two grids), `C` or
    /// `lambda`, either `seeds` (comma list) or `base_seed` plus `reps`,
    /// `analyses`, `threads`, `timings`, `clique_max_vertices`,
    /// `clique_max_steps`, `out`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut model = None;
        let mut n_values = None;
        let mut alpha_values = None;
        let mut constant = None;
        let mut seeds = None;
        let mut base_seed = None;
        let mut reps = None;
        let mut analyses = None;
        let mut threads = None;
        let mut timings = None;
        let mut budget = CliqueBudget::default();
        let mut output = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::invalid(format!("line {}: expected key = value", i + 1)))?;
            let (key, value) = (key.trim(), value.trim());
            let bad =
                |what: &str| Error::invalid(format!("line {}: invalid {what} {value:?}", i + 1));
            match key {
                "model" => model = Some(value.parse::<Model>()?),
                "n" => n_values = Some(parse_list::<usize>(value).ok_or_else(|| bad("n"))?),
                "alpha" => {
                    alpha_values = Some(parse_list::<f64>(value).ok_or_else(|| bad("alpha"))?)
                }
                "C" | "c" | "lambda" => {
                    constant = Some(value.parse::<f64>().map_err(|_| bad(key))?)
                }
                "seeds" => seeds = Some(parse_list::<u64>(value).ok_or_else(|| bad("seeds"))?),
                "base_seed" => base_seed = Some(value.parse::<u64>().map_err(|_| bad(key))?),
                "reps" => reps = Some(value.parse::<u64>().map_err(|_| bad(key))?),
                "analyses" => analyses = Some(Analysis::parse_set(value)?),
                "threads" => threads = Some(value.parse::<usize>().map_err(|_| bad(key))?),
                "timings" => timings = Some(value.parse::<bool>().map_err(|_| bad(key))?),
                "clique_max_vertices" => {
                    budget.max_vertices = value.parse().map_err(|_| bad(key))?
                }
                "clique_max_steps" => budget.max_steps = value.parse().map_err(|_| bad(key))?,
                "out" => output = Some(PathBuf::from(value)),
                other => {
                    return Err(Error::invalid(format!(
                        "line {}: unknown key {other:?}",
                        i + 1
                    )))
                }
            }
        }
        let model = model.ok_or_else(|| Error::invalid("missing key `model`"))?;
        let seeds = match (seeds, base_seed, reps) {
            (Some(list), None, None) => Seeds::List(list),
            (None, base, Some(count)) => Seeds::Replicates {
                base: base.unwrap_or(0),
                count,
            },
            _ => {
                return Err(Error::invalid(
                    "give either `seeds` or `reps` (with optional `base_seed`)",
                ))
            }
        };
        let mut config = SweepConfig::new(
            model,
            n_values.ok_or_else(|| Error::invalid("missing key `n`"))?,
            alpha_values.ok_or_else(|| Error::invalid("missing key `alpha`"))?,
            seeds,
        );
        if let Some(c) = constant {
            config.model_constant = c;
        }
        if let Some(a) = analyses {
            config.analyses = a;
        }
        if let Some(t) = threads {
            config.thread_count = t;
        }
        if let Some(t) = timings {
            config.record_timings = t;
        }
        config.clique_budget = budget;
        config.output = output;
        config.validate()?;
        Ok(config)
    }

    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| Error::io(path, e))?;
        Self::parse(&text)
    }
}

fn parse_list<T: FromStr>(value: &str) -> Option<Vec<T>> {
    value
        .split(',')
        .map(|s| s.trim().parse().ok())
        .collect::<Option<Vec<T>>>()
        .filter(|v| !v.is_empty())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_flat_config() {
        let text = "\
# demo
model = hrg
n = 1024, 2048
alpha = 0.6,0.75
C = -0.5
base_seed = 7
reps = 3
analyses = degeneracy,colouring,separator
threads = 2
";
        let c = SweepConfig::parse(text).unwrap();
        assert_eq!(c.model, Model::Hrg);
        assert_eq!(c.n_values, vec![1024, 2048]);
        assert_eq!(c.alpha_values, vec![0.6, 0.75]);
        assert_eq!(c.model_constant, -0.5);
        assert_eq!(c.seeds, Seeds::Replicates { base: 7, count: 3 });
        assert_eq!(c.analyses.len(), 3);
        assert_eq!(c.thread_count, 2);
    }

    #[test]
    fn rejects_invalid_configs() {
        assert!(SweepConfig::parse("model = hrg\nn = 10\nalpha = 0.5\nreps = 1").is_err());
        assert!(SweepConfig::parse("model = hrg\nn = 0\nalpha = 0.7\nreps = 1").is_err());
        assert!(SweepConfig::parse("model = hrg\nn = 10\nalpha = 0.7\nseeds = ").is_err());
        assert!(SweepConfig::parse("model = foo\nn = 10\nalpha = 0.7\nreps = 1").is_err());
        assert!(
            SweepConfig::parse("model = hrg\nn = 10\nalpha = 0.7\nreps = 1\nbogus = 1").is_err()
        );
        assert!(SweepConfig::parse(
            "model = hrg\nn = 1000\nalpha = 0.7\nreps = 1\nanalyses = cliques-exact"
        )
        .is_err());
        assert!(SweepConfig::parse(
            "model = girg\nn = 100\nalpha = 0.7\nreps = 1\nanalyses = separator"
        )
        .is_err());
        assert!(
            SweepConfig::parse("model = girg\nn = 100\nalpha = 0.7\nreps = 1\nlambda = 0").is_err()
        );
    }
}
