//! Isomorph-free generation of constrained graphs and the campaigns that
//! consume it.

mod campaigns;
mod checkpoint;
mod generate;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use campaigns::{
    clique_minor_survey, find_minimal_k6_free, run_campaign, verify_deg9_lemma, verify_h8_lemma, Campaign,
    CampaignOptions, CampaignReport, Expectation, Survivor, Verdict, Witness,
};
pub use checkpoint::Checkpoint;
pub use generate::{enumerate_all, enumerate_graphs, Enumerator, GraphStream};

/// Largest order the generator accepts.
pub const MAX_ORDER: usize = 10;

/// Hereditary structure filters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Filter {
    K4Free,
    AlphaLe(usize),
    /// Complement has no triangle, i.e. α ≤ 2.
    TriangleFreeComplement,
}

impl fmt::Display for Filter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Filter::K4Free => f.write_str("k4_free"),
            Filter::AlphaLe(k) => write!(f, "alpha_le({k})"),
            Filter::TriangleFreeComplement => f.write_str("triangle_free_complement"),
        }
    }
}

impl FromStr for Filter {
    type Err = Error;

    /// Accepts `k4_free`, `alpha_le(K)`, `triangle_free_complement`, with
    /// `-` for `_` and `alpha-le=K` / `alpha-le:K` as alternatives.
    fn from_str(s: &str) -> Result<Self> {
        let norm = s.trim().to_ascii_lowercase().replace('-', "_");
        match norm.as_str() {
            "k4_free" => return Ok(Filter::K4Free),
            "triangle_free_complement" => return Ok(Filter::TriangleFreeComplement),
            _ => {}
        }
        let arg = norm
            .strip_prefix("alpha_le")
            .map(|rest| rest.trim_start_matches(['(', '=', ':']).trim_end_matches(')'));
        match arg.and_then(|a| a.parse::<usize>().ok()) {
            Some(k) if k >= 1 => Ok(Filter::AlphaLe(k)),
            _ => Err(Error::InvalidArgument(format!("unknown filter {s:?}"))),
        }
    }
}

impl TryFrom<String> for Filter {
    type Error = Error;
    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Filter> for String {
    fn from(f: Filter) -> String {
        f.to_string()
    }
}

/// Work split: this run handles the units whose index is `index` mod `count`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Shard {
    pub index: usize,
    pub count: usize,
}

impl Shard {
    pub const WHOLE: Shard = Shard { index: 0, count: 1 };

    pub fn new(index: usize, count: usize) -> Result<Self> {
        let s = Shard { index, count };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<()> {
        if self.count == 0 || self.index >= self.count {
            return Err(Error::InvalidArgument(format!(
                "bad shard {}/{}",
                self.index, self.count
            )));
        }
        Ok(())
    }
}

impl Default for Shard {
    fn default() -> Self {
        Shard::WHOLE
    }
}

impl fmt::Display for Shard {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.index, self.count)
    }
}

impl FromStr for Shard {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("shard must look like i/m, got {s:?}"));
        let (i, m) = s.split_once('/').ok_or_else(bad)?;
        Shard::new(
            i.trim().parse().map_err(|_| bad())?,
            m.trim().parse().map_err(|_| bad())?,
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationTask {
    pub n: usize,
    pub min_degree: Option<usize>,
    pub max_degree: Option<usize>,
    pub filters: Vec<Filter>,
    #[serde(default)]
    pub shard: Shard,
}

impl EnumerationTask {
    pub fn order(n: usize) -> Self {
        EnumerationTask {
            n,
            ..Default::default()
        }
    }

    pub fn min_degree(mut self, d: usize) -> Self {
        self.min_degree = Some(d);
        self
    }

    pub fn max_degree(mut self, d: usize) -> Self {
        self.max_degree = Some(d);
        self
    }

    pub fn filter(mut self, f: Filter) -> Self {
        self.filters.push(f);
        self
    }

    pub fn shard(mut self, shard: Shard) -> Self {
        self.shard = shard;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n > MAX_ORDER {
            return Err(Error::InvalidArgument(format!(
                "order {} exceeds the generator limit {MAX_ORDER}",
                self.n
            )));
        }
        self.shard.validate()?;
        if self.n > 0 {
            for (name, d) in [("min", self.min_degree), ("max", self.max_degree)] {
                if let Some(d) = d {
                    if d > self.n - 1 {
                        return Err(Error::InvalidArgument(format!(
                            "{name} degree {d} exceeds n-1 = {}",
                            self.n - 1
                        )));
                    }
                }
            }
        }
        if let (Some(lo), Some(hi)) = (self.min_degree, self.max_degree) {
            if lo > hi {
                return Err(Error::InvalidArgument(format!(
                    "min degree {lo} > max degree {hi}"
                )));
            }
        }
        if self.filters.contains(&Filter::AlphaLe(0)) {
            return Err(Error::InvalidArgument("alpha_le needs k >= 1".into()));
        }
        Ok(())
    }
}

/// One-line fingerprint, used to tie checkpoints to their task.
impl fmt::Display for EnumerationTask {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |d: Option<usize>| d.map_or_else(|| "-".to_string(), |d| d.to_string());
        let filters = if self.filters.is_empty() {
            "-".to_string()
        } else {
            self.filters
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        write!(
            f,
            "n={} min={} max={} filters={} shard={}",
            self.n,
            opt(self.min_degree),
            opt(self.max_degree),
            filters,
            self.shard
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn filter_spellings() {
        assert_eq!("k4-free".parse::<Filter>().unwrap(), Filter::K4Free);
        assert_eq!("k4_free".parse::<Filter>().unwrap(), Filter::K4Free);
        assert_eq!("alpha_le(2)".parse::<Filter>().unwrap(), Filter::AlphaLe(2));
        assert_eq!("alpha-le=3".parse::<Filter>().unwrap(), Filter::AlphaLe(3));
        assert_eq!(
            "triangle-free-complement".parse::<Filter>().unwrap(),
            Filter::TriangleFreeComplement
        );
        assert!("alpha_le(0)".parse::<Filter>().is_err());
        assert!("planar".parse::<Filter>().is_err());
        for f in [Filter::K4Free, Filter::AlphaLe(4), Filter::TriangleFreeComplement] {
            assert_eq!(f.to_string().parse::<Filter>().unwrap(), f);
        }
    }

    #[test]
    fn shard_parsing() {
        assert_eq!("2/4".parse::<Shard>().unwrap(), Shard { index: 2, count: 4 });
        assert!("4/4".parse::<Shard>().is_err());
        assert!("0/0".parse::<Shard>().is_err());
        assert!("1".parse::<Shard>().is_err());
    }

    #[test]
    fn task_validation() {
        assert!(EnumerationTask::order(9).min_degree(5).validate().is_ok());
        assert!(EnumerationTask::order(11).validate().is_err());
        assert!(EnumerationTask::order(5).min_degree(5).validate().is_err());
        assert!(EnumerationTask::order(6)
            .min_degree(3)
            .max_degree(2)
            .validate()
            .is_err());
        assert!(EnumerationTask::order(0).validate().is_ok());
        assert_eq!(
            EnumerationTask::order(9)
                .min_degree(5)
                .filter(Filter::K4Free)
                .to_string(),
            "n=9 min=5 max=- filters=k4_free shard=0/1"
        );
    }

    #[test]
    fn task_json_round_trip() {
        let t = EnumerationTask::order(8)
            .filter(Filter::AlphaLe(2))
            .shard(Shard { index: 1, count: 3 });
        let json = serde_json::to_string(&t).unwrap();
        assert!(json.contains("\"alpha_le(2)\""));
        assert_eq!(serde_json::from_str::<EnumerationTask>(&json).unwrap(), t);
    }
}
