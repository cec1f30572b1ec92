//! One-parameter sweeps over a state family.

use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use crate::error::{Error, Result};
use crate::measures::{full_report, MeasureReport};
use crate::oracles::SearchConfig;
use crate::statespec::{parse_yaml, Family, StateSpec};

/// Sweep description.
///
/// `vary` names one scalar parameter of the family. Components of vector
/// parameters are addressed with a dotted index (`c.1`, `a1.2`, `p.0.1`);
/// the vector itself must then be present in `fixed`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepSpec {
    pub family: Family,
    pub vary: String,
    pub start: f64,
    pub stop: f64,
    pub steps: usize,
    #[serde(default)]
    pub fixed: Map<String, Value>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepRow {
    pub param: f64,
    pub outcome: std::result::Result<MeasureReport, String>,
}

impl SweepSpec {
    pub fn parse(text: &str) -> Result<Self> {
        let spec: SweepSpec = parse_yaml(text)?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.steps < 2 {
            return Err(Error::Parse(format!("steps = {} must be at least 2", self.steps)));
        }
        if !(self.start < self.stop) {
            return Err(Error::Parse(format!(
                "start {} must be below stop {}",
                self.start, self.stop
            )));
        }
        let root = self.vary.split('.').next().unwrap_or_default();
        if !self.family.param_names().contains(&root) {
            return Err(Error::Parse(format!(
                "`{}` is not a parameter of family {} (expected one of {:?})",
                self.vary,
                self.family.name(),
                self.family.param_names()
            )));
        }
        for key in self.fixed.keys() {
            if !self.family.param_names().contains(&key.as_str()) {
                return Err(Error::Parse(format!(
                    "fixed parameter `{key}` is not a parameter of family {}",
                    self.family.name()
                )));
            }
        }
        Ok(())
    }

    /// Parameter values in ascending order, both ends included.
    pub fn values(&self) -> Vec<f64> {
        let n = self.steps - 1;
        (0..=n)
            .map(|k| {
                if k == n {
                    self.stop
                } else {
                    self.start + (self.stop - self.start) * k as f64 / n as f64
                }
            })
            .collect()
    }

    /// The state record at one parameter value.
    pub fn state_at(&self, value: f64) -> Result<StateSpec> {
        let mut params = Value::Object(self.fixed.clone());
        set_path(&mut params, &self.vary, value)?;
        let mut rec = Map::new();
        rec.insert("family".into(), serde_json::to_value(self.family).expect("enum"));
        rec.insert("params".into(), params);
        StateSpec::from_json_value(Value::Object(rec))
    }
}

fn set_path(root: &mut Value, path: &str, value: f64) -> Result<()> {
    let mut parts = path.split('.');
    let key = parts.next().unwrap_or_default();
    let mut slot = root
        .as_object_mut()
        .expect("params is an object")
        .entry(key.to_string())
        .or_insert(Value::Null);
    for idx in parts {
        let i: usize = idx
            .parse()
            .map_err(|_| Error::Parse(format!("bad index `{idx}` in `{path}`")))?;
        slot = slot
            .as_array_mut()
            .and_then(|a| a.get_mut(i))
            .ok_or_else(|| Error::Parse(format!("`{path}` does not address an entry of `fixed`")))?;
    }
    *slot = serde_json::json!(value);
    Ok(())
}

/// Evaluates every step. States that fail to build or evaluate become rows
/// carrying the error message.
pub fn run_sweep(spec: &SweepSpec, cfg: &SearchConfig) -> Result<Vec<SweepRow>> {
    spec.validate()?;
    // a malformed record is a spec error, not a per-row one
    spec.state_at(spec.start)?;
    Ok(spec
        .values()
        .into_iter()
        .map(|param| {
            let outcome = spec
                .state_at(param)
                .and_then(|s| s.build())
                .and_then(|rho| full_report(&rho, cfg))
                .map_err(|e| e.to_string());
            SweepRow { param, outcome }
        })
        .collect())
}
