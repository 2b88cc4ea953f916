use serde::{Deserialize, Serialize};
use serde_json::{Map, Value};

use super::TheoremId;
use crate::graph::{graph6_encode, FamilySpec, Graph};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    /// The hypotheses of the statement do not hold for this instance.
    NotApplicable,
}

/// What a report is about.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Instance {
    Graph6(String),
    Family(FamilySpec),
    Parameters(Map<String, Value>),
}

impl Instance {
    pub fn graph(g: &Graph) -> Self {
        Instance::Graph6(graph6_encode(g))
    }

    pub fn params(pairs: &[(&str, usize)]) -> Self {
        Instance::Parameters(pairs.iter().map(|(k, v)| (k.to_string(), Value::from(*v))).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TheoremReport {
    pub theorem_id: TheoremId,
    pub instance: Instance,
    pub status: Status,
    pub passed: bool,
    /// Numbers needed to recheck the verdict by hand.
    pub witness: Map<String, Value>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub elapsed_us: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl TheoremReport {
    pub fn new(theorem_id: TheoremId, instance: Instance, status: Status, witness: Map<String, Value>) -> Self {
        TheoremReport {
            theorem_id,
            instance,
            status,
            passed: status == Status::Pass,
            witness,
            elapsed_us: None,
            note: None,
        }
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn is_failure(&self) -> bool {
        self.status == Status::Fail
    }

    /// One JSON line.
    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("reports serialize")
    }
}

/// Ordered witness builder.
#[derive(Debug, Default, Clone)]
pub(crate) struct Witness(Map<String, Value>);

impl Witness {
    pub fn new() -> Self {
        Witness(Map::new())
    }

    pub fn put(mut self, key: &str, value: impl Serialize) -> Self {
        self.0
            .insert(key.to_string(), serde_json::to_value(value).expect("witness values serialize"));
        self
    }

    pub fn into_map(self) -> Map<String, Value> {
        self.0
    }
}

/// Status plus witness, before the instance is attached.
#[derive(Debug, Clone)]
pub(crate) struct Verdict {
    pub status: Status,
    pub witness: Witness,
    pub note: Option<String>,
}

impl Verdict {
    pub fn judge(ok: bool, witness: Witness) -> Self {
        Verdict {
            status: if ok { Status::Pass } else { Status::Fail },
            witness,
            note: None,
        }
    }

    pub fn not_applicable(reason: &str) -> Self {
        Verdict {
            status: Status::NotApplicable,
            witness: Witness::new(),
            note: Some(reason.to_string()),
        }
    }

    pub fn note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn into_report(self, id: TheoremId, instance: Instance) -> TheoremReport {
        let mut r = TheoremReport::new(id, instance, self.status, self.witness.into_map());
        r.note = self.note;
        r
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete;

    #[test]
    fn report_json_shape() {
        let r = Verdict::judge(true, Witness::new().put("m", 0).put("nu", 1))
            .into_report(TheoremId::MatchingUpper, Instance::graph(&complete(3)));
        let v: Value = serde_json::from_str(&r.to_json_line()).unwrap();
        assert_eq!(v["theorem_id"], "matching_upper");
        assert_eq!(v["instance"]["graph6"], "Bw");
        assert_eq!(v["status"], "pass");
        assert_eq!(v["passed"], true);
        assert_eq!(v["witness"]["nu"], 1);
        assert!(v.get("elapsed_us").is_none());
        let back: TheoremReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn not_applicable_is_not_passed() {
        let r = Verdict::not_applicable("isolated vertex")
            .into_report(TheoremId::Delta2, Instance::params(&[("n", 3)]));
        assert!(!r.passed);
        assert_eq!(r.status, Status::NotApplicable);
        assert_eq!(r.note.as_deref(), Some("isolated vertex"));
    }
}
