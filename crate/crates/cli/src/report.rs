use std::time::Duration;

use commclass_core::{BigCount, CommutationClass};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Match,
    Mismatch,
    UnknownRank,
    /// The run stopped at its time limit; the result is only a lower bound.
    Incomplete,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Match => "match",
            Status::Mismatch => "mismatch",
            Status::UnknownRank => "unknown-rank",
            Status::Incomplete => "incomplete",
        }
    }
}

/// Summary of one counting run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    pub command: String,
    pub rank: usize,
    /// Decimal count; never a float.
    pub result: String,
    pub elapsed_secs: f64,
    pub threads: usize,
    pub status: Status,
    pub authoritative: bool,
}

impl RunReport {
    pub fn new(
        command: String,
        rank: usize,
        result: &BigCount,
        elapsed: Duration,
        threads: usize,
        status: Status,
    ) -> Self {
        Self {
            command,
            rank,
            result: result.to_string(),
            elapsed_secs: elapsed.as_secs_f64(),
            threads,
            authoritative: status != Status::Incomplete,
            status,
        }
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} [{}{}] in {:.3}s on {} thread{}",
            self.command,
            self.result,
            self.status.as_str(),
            if self.authoritative { "" } else { ", partial" },
            self.elapsed_secs,
            self.threads,
            if self.threads == 1 { "" } else { "s" }
        )
    }
}

/// JSON/CSV shape of one commutation class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRecord {
    pub canonical: String,
    pub size: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub members: Option<Vec<String>>,
}

impl From<&CommutationClass> for ClassRecord {
    fn from(c: &CommutationClass) -> Self {
        Self {
            canonical: c.canonical.to_string(),
            size: c.size.to_string(),
            members: c.members.as_ref().map(|m| m.iter().map(ToString::to_string).collect()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_result_parses_back() {
        let big: BigCount = "18410581880".parse().unwrap();
        let r = RunReport::new("count classes --n 10".into(), 10, &big, Duration::from_millis(5), 4, Status::Match);
        assert_eq!(r.result.parse::<BigCount>().unwrap(), big);
        let json = serde_json::to_string(&r).unwrap();
        assert!(json.contains(r#""result":"18410581880""#));
        assert!(json.contains(r#""status":"match""#));
        let back: RunReport = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r);
    }

    #[test]
    fn unknown_rank_spelling() {
        assert_eq!(serde_json::to_string(&Status::UnknownRank).unwrap(), r#""unknown-rank""#);
    }

    #[test]
    fn record_field_order() {
        let r = ClassRecord { canonical: "121".into(), size: "1".into(), members: None };
        assert_eq!(serde_json::to_string(&r).unwrap(), r#"{"canonical":"121","size":"1"}"#);
    }
}
