use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

const MAGIC: &str = "k7lab-checkpoint 1";

/// Resumable cursor over a shard's work units.
///
/// Text form, one field per line:
///
/// ```text
/// k7lab-checkpoint 1
/// task n=9 min=5 max=- filters=k4_free shard=0/1
/// units 57
/// next 12
/// emitted 340
/// prefix HCpdbY]
/// ```
///
/// `prefix` is the graph6 root of the next unit (`-` once finished). On
/// resume the unit plan is rebuilt and must reproduce the same prefix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Checkpoint {
    pub task: String,
    pub units: usize,
    pub next: usize,
    pub emitted: u64,
    pub prefix: Option<String>,
}

impl Checkpoint {
    pub fn is_finished(&self) -> bool {
        self.next >= self.units
    }
}

impl fmt::Display for Checkpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{MAGIC}")?;
        writeln!(f, "task {}", self.task)?;
        writeln!(f, "units {}", self.units)?;
        writeln!(f, "next {}", self.next)?;
        writeln!(f, "emitted {}", self.emitted)?;
        writeln!(f, "prefix {}", self.prefix.as_deref().unwrap_or("-"))
    }
}

impl FromStr for Checkpoint {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text.lines();
        if lines.next().map(str::trim_end) != Some(MAGIC) {
            return Err(Error::Checkpoint(format!("missing {MAGIC:?} header")));
        }
        let mut field = |name: &str| -> Result<String> {
            let line = lines
                .next()
                .ok_or_else(|| Error::Checkpoint(format!("missing {name}")))?;
            line.strip_prefix(name)
                .and_then(|rest| rest.strip_prefix(' '))
                .map(|v| v.trim_end().to_string())
                .ok_or_else(|| Error::Checkpoint(format!("expected {name}, got {line:?}")))
        };
        let number = |s: String, name: &str| {
            s.parse::<u64>()
                .map_err(|_| Error::Checkpoint(format!("bad {name} value {s:?}")))
        };
        let task = field("task")?;
        let units = number(field("units")?, "units")? as usize;
        let next = number(field("next")?, "next")? as usize;
        let emitted = number(field("emitted")?, "emitted")?;
        let prefix = match field("prefix")?.as_str() {
            "-" => None,
            p => Some(p.to_string()),
        };
        if next > units {
            return Err(Error::Checkpoint(format!("next {next} beyond {units} units")));
        }
        Ok(Checkpoint {
            task,
            units,
            next,
            emitted,
            prefix,
        })
    }
}
