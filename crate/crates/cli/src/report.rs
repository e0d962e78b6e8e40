use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

/// How much a verdict actually establishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strength {
    /// Isomorphisms, `π0` bijections and exhaustive searches.
    Exact,
    /// Agreement of integer homology through the reported degree.
    HomologyEvidence,
    /// Exact within the length bound, which was not shown to be enough.
    BoundLimited,
}

impl Strength {
    fn as_str(self) -> &'static str {
        match self {
            Strength::Exact => "exact",
            Strength::HomologyEvidence => "homology-evidence",
            Strength::BoundLimited => "bound-limited",
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Verdict {
    pub name: String,
    pub pass: bool,
    pub strength: Strength,
}

#[derive(Clone, Debug, Serialize)]
pub struct Config {
    pub k: usize,
    pub max_length: usize,
    pub degree: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub strict: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: Vec<String>,
    pub config: Config,
    pub verdicts: Vec<Verdict>,
    pub warnings: Vec<String>,
    /// Some length bound cut off part of an answer.
    pub bound_exhausted: bool,
    pub artifacts: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}

impl Report {
    pub fn new(command: &str, inputs: Vec<String>, config: Config) -> Report {
        Report {
            command: command.into(),
            inputs,
            config,
            verdicts: Vec::new(),
            warnings: Vec::new(),
            bound_exhausted: false,
            artifacts: BTreeMap::new(),
            timing_ms: None,
        }
    }

    pub fn verdict(&mut self, name: &str, pass: bool, strength: Strength) {
        self.verdicts.push(Verdict {
            name: name.into(),
            pass,
            strength,
        });
    }

    pub fn warn(&mut self, message: impl Into<String>) {
        self.warnings.push(message.into());
    }

    /// Records an incomplete answer as a warning.
    pub fn exhausted(&mut self, message: impl Into<String>) {
        self.bound_exhausted = true;
        self.warn(message);
    }

    /// Exact verdicts computed under an exhausted bound only hold within it.
    pub fn qualify_by_bounds(&mut self) {
        if self.bound_exhausted {
            for v in self.verdicts.iter_mut().filter(|v| v.strength == Strength::Exact) {
                v.strength = Strength::BoundLimited;
            }
        }
    }

    pub fn artifact(&mut self, key: &str, value: impl Serialize) {
        let value = serde_json::to_value(value).expect("report artifacts serialize");
        self.artifacts.insert(key.into(), value);
    }

    pub fn passed(&self) -> bool {
        self.verdicts.iter().all(|v| v.pass)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} {}", self.command, self.inputs.join(" "));
        let c = &self.config;
        let _ = writeln!(s, "  k={} max-length={} degree={}", c.k, c.max_length, c.degree);
        for (key, value) in &self.artifacts {
            let _ = writeln!(s, "{key}: {}", compact(value));
        }
        for w in &self.warnings {
            let _ = writeln!(s, "warning: {w}");
        }
        for v in &self.verdicts {
            let mark = if v.pass { "PASS" } else { "FAIL" };
            let _ = writeln!(s, "{mark} {} [{}]", v.name, v.strength.as_str());
        }
        if let Some(t) = self.timing_ms {
            let _ = writeln!(s, "time: {t} ms");
        }
        s
    }
}

fn compact(v: &Value) -> String {
    let s = v.to_string();
    if s.len() > 400 {
        format!(
            "{}… ({} bytes, use --format json)",
            &s[..s.char_indices().nth(400).map_or(s.len(), |(i, _)| i)],
            s.len()
        )
    } else {
        s
    }
}
