use std::path::Path;

use anyhow::{anyhow, Context};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};
use spectra::matroid::MatroidJson;
use spectra::Matroid;

/// Collects every byte the command consumed so the envelope can carry a
/// digest of its inputs.
pub struct Inputs {
    hasher: Sha256,
}

impl Inputs {
    pub fn new(parameters: &str) -> Self {
        let mut hasher = Sha256::new();
        hasher.update(parameters.as_bytes());
        Inputs { hasher }
    }

    pub fn read_json(&mut self, path: &Path) -> anyhow::Result<Value> {
        let bytes = std::fs::read(path).with_context(|| format!("reading {}", path.display()))?;
        self.hasher.update([0u8]);
        self.hasher.update(&bytes);
        serde_json::from_slice(&bytes).with_context(|| format!("parsing {}", path.display()))
    }

    /// `vamos`, `uniform:R:N`, or a matroid JSON file.
    pub fn matroid(&mut self, spec: &str) -> anyhow::Result<Matroid> {
        if spec == "vamos" {
            return Ok(Matroid::vamos());
        }
        if let Some(rest) = spec.strip_prefix("uniform:") {
            let (r, n) = rest.split_once(':').ok_or_else(|| anyhow!("expected uniform:R:N, got {spec}"))?;
            return Ok(Matroid::uniform(r.parse()?, n.parse()?)?);
        }
        let v = self.read_json(Path::new(spec))?;
        let j: MatroidJson = serde_json::from_value(v).context("matroid JSON needs \"n\" and \"bases\"")?;
        Ok(Matroid::from_json(&j)?)
    }

    pub fn digest(self) -> String {
        hex::encode(self.hasher.finalize())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Ok,
    Violation,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violation => 1,
            Status::Error => 2,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Status::Ok => "ok",
            Status::Violation => "violation",
            Status::Error => "error",
        }
    }

    pub fn flag(violation: bool) -> Self {
        if violation {
            Status::Violation
        } else {
            Status::Ok
        }
    }
}

pub fn envelope(command: &str, digest: &str, result: Value, status: Status) -> Value {
    json!({
        "command": command,
        "input_digest": digest,
        "result": result,
        "status": status.label(),
    })
}

pub fn render(v: &Value, pretty: bool) -> String {
    if pretty {
        serde_json::to_string_pretty(v).expect("json values serialize")
    } else {
        v.to_string()
    }
}
