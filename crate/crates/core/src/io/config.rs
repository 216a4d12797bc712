//! Search configuration files (TOML).
//!
//! ```toml
//! template = "gwpo"
//! timeout = 30        # seconds
//! max_const = 3
//! coeffs = [0, 1, 2]
//! offsets = [-1, 0, 1]
//! statuses = "total"  # or "all"
//! scc = true
//! jobs = 1
//! ```
//!
//! Every key is optional; command-line flags take precedence.

use std::path::Path;
use std::time::Duration;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::io::proof::ProveOptions;
use crate::search::{StatusSpace, Template};

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Config {
    pub template: Option<String>,
    pub timeout: Option<f64>,
    pub max_const: Option<u64>,
    pub coeffs: Option<Vec<u64>>,
    pub offsets: Option<Vec<i64>>,
    pub statuses: Option<String>,
    pub scc: Option<bool>,
    pub jobs: Option<usize>,
}

pub fn parse_statuses(s: &str) -> Result<StatusSpace> {
    match s {
        "total" => Ok(StatusSpace::Total),
        "all" => Ok(StatusSpace::All),
        other => Err(Error::Certificate(format!("statuses must be total or all, got {other}"))),
    }
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        toml::from_str(text).map_err(|e| Error::Certificate(format!("config: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        Config::parse(&std::fs::read_to_string(path)?)
    }

    /// Options for `template` (or the configured one) with every configured
    /// value applied.
    pub fn options(&self, template: Option<Template>) -> Result<ProveOptions> {
        let template = match (template, &self.template) {
            (Some(t), _) => t,
            (None, Some(name)) => name.parse()?,
            (None, None) => Template::Spo,
        };
        let mut o = ProveOptions::new(template);
        if let Some(t) = self.timeout {
            if !(t.is_finite() && t >= 0.0) {
                return Err(Error::Certificate(format!("config: bad timeout {t}")));
            }
            o.budget = Some(Duration::from_secs_f64(t));
        }
        if let Some(m) = self.max_const {
            o.space.max_const = m;
        }
        if let Some(c) = &self.coeffs {
            o.space.coeffs = c.clone();
        }
        if let Some(c) = &self.offsets {
            o.space.offsets = c.clone();
        }
        if let Some(s) = &self.statuses {
            o.space.statuses = parse_statuses(s)?;
        }
        if let Some(s) = self.scc {
            o.scc = s;
        }
        if let Some(j) = self.jobs {
            o.jobs = j;
        }
        Ok(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn applies_values() {
        let c = Config::parse("template = \"wpo\"\nmax_const = 3\nstatuses = \"total\"\nscc = true\n")
            .unwrap();
        let o = c.options(None).unwrap();
        assert_eq!(o.space.template, Template::Wpo);
        assert_eq!(o.space.max_const, 3);
        assert_eq!(o.space.statuses, StatusSpace::Total);
        assert!(o.scc);
        assert_eq!(c.options(Some(Template::Gwpo)).unwrap().space.template, Template::Gwpo);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(Config::parse("colour = 1").is_err());
        assert!(Config::parse("statuses = \"some\"").unwrap().options(None).is_err());
    }
}
