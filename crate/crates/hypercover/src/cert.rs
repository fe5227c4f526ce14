//! Self-contained certificates: a problem instance, the claimed value, an
//! embedded witness with its cover spec, and a verification transcript.
//!
//! A certificate embeds full objects, never references, so it can be
//! re-checked without the state that generated it. Re-verification re-runs
//! the embedded witness against the embedded spec and recomputes the status
//! from the recorded checks; oracle values are recorded data, not re-run.

use serde::{Deserialize, Serialize};

use crate::covers::{verify_cover, CoverSpec, Witness};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Status {
    #[serde(rename = "confirmed")]
    Confirmed,
    #[serde(rename = "discrepancy")]
    Discrepancy,
    #[serde(rename = "oracle-skipped")]
    OracleSkipped,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    /// Suite identifier naming the claim being reproduced.
    pub claim: String,
    /// Full problem descriptor.
    pub instance: serde_json::Value,
    #[serde(rename = "formula-value")]
    pub formula_value: i64,
    #[serde(rename = "oracle-value")]
    pub oracle_value: Option<i64>,
    /// Embedded cover witness, when the claim carries one.
    pub witness: Option<serde_json::Value>,
    /// The spec the witness verifies against.
    pub spec: Option<serde_json::Value>,
    pub checks: Vec<Check>,
    pub status: Status,
}

impl Certificate {
    pub fn new(claim: impl Into<String>, instance: serde_json::Value, formula_value: i64) -> Self {
        Certificate {
            claim: claim.into(),
            instance,
            formula_value,
            oracle_value: None,
            witness: None,
            spec: None,
            checks: Vec::new(),
            status: Status::Confirmed,
        }
    }

    pub fn check(&mut self, name: impl Into<String>, pass: bool, detail: impl Into<String>) {
        self.checks.push(Check { name: name.into(), pass, detail: detail.into() });
    }

    pub fn attach_witness(&mut self, witness: &Witness, spec: &CoverSpec) {
        self.witness = Some(witness.to_json());
        self.spec = Some(spec.to_json());
    }

    pub fn set_oracle(&mut self, value: u32) {
        self.oracle_value = Some(value as i64);
    }

    /// Resolves the status from the recorded data: confirmed requires every
    /// check to pass and the oracle value (when present) to match the
    /// formula. `oracle_expected` marks instances whose oracle run was
    /// skipped for bounds; they are never confirmed.
    pub fn finalize(&mut self, oracle_expected: bool) {
        let checks_ok = self.checks.iter().all(|c| c.pass);
        let oracle_ok = match self.oracle_value {
            Some(v) => v == self.formula_value,
            None => true,
        };
        self.status = if !checks_ok || !oracle_ok {
            Status::Discrepancy
        } else if oracle_expected && self.oracle_value.is_none() {
            Status::OracleSkipped
        } else {
            Status::Confirmed
        };
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("certificate serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::parse(format!("certificate: {e}")))
    }

    /// Standalone re-verification: the embedded witness must still pass the
    /// embedded spec, and the recorded status must be consistent with the
    /// recorded checks and values.
    pub fn reverify(&self) -> Result<bool> {
        if let (Some(w), Some(s)) = (&self.witness, &self.spec) {
            let witness = Witness::from_json(w)?;
            let spec = CoverSpec::from_json(s)?;
            if !verify_cover(&witness, &spec).ok {
                // A quarantined certificate may legitimately embed a failing
                // witness, but then it must not claim to be confirmed.
                if self.status == Status::Confirmed {
                    return Ok(false);
                }
            }
        }
        let checks_ok = self.checks.iter().all(|c| c.pass);
        let oracle_ok = match self.oracle_value {
            Some(v) => v == self.formula_value,
            None => true,
        };
        match self.status {
            Status::Confirmed => Ok(checks_ok && oracle_ok),
            Status::Discrepancy => Ok(!(checks_ok && oracle_ok)),
            Status::OracleSkipped => Ok(checks_ok && self.oracle_value.is_none()),
        }
    }
}

/// Renders certificates as canonical JSON (sorted instances) or a plain
/// table, deterministically.
pub fn emit_report(certs: &[Certificate], format: ReportFormat) -> String {
    let mut sorted: Vec<&Certificate> = certs.iter().collect();
    sorted.sort_by_key(|c| (c.claim.clone(), c.instance.to_string()));
    match format {
        ReportFormat::Json => {
            let arr: Vec<serde_json::Value> = sorted.iter().map(|c| c.to_json()).collect();
            serde_json::to_string_pretty(&serde_json::Value::Array(arr))
                .expect("report serializes")
        }
        ReportFormat::Table => {
            let mut out = String::new();
            out.push_str(&format!(
                "{:<34} {:<44} {:>8} {:>8}  {}\n",
                "claim", "instance", "formula", "oracle", "status"
            ));
            let mut discrepancies = 0usize;
            for c in &sorted {
                let oracle = c.oracle_value.map_or("-".to_string(), |v| v.to_string());
                let mark = match c.status {
                    Status::Confirmed => "ok",
                    Status::Discrepancy => {
                        discrepancies += 1;
                        "DISCREPANCY"
                    }
                    Status::OracleSkipped => "oracle-skipped",
                };
                let mut inst = c.instance.to_string();
                if inst.len() > 44 {
                    inst.truncate(41);
                    inst.push_str("...");
                }
                out.push_str(&format!(
                    "{:<34} {:<44} {:>8} {:>8}  {}\n",
                    c.claim, inst, c.formula_value, oracle, mark
                ));
            }
            out.push_str(&format!(
                "{} certificates, {} discrepancies\n",
                sorted.len(),
                discrepancies
            ));
            out
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Json,
    Table,
}
