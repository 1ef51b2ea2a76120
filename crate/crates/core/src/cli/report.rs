use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
}

/// One check: what was computed, what the oracle expected, and whether they agree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Record {
    pub name: String,
    pub parameters: String,
    pub expected: String,
    pub actual: String,
    pub pass: bool,
}

impl Record {
    pub fn new(
        name: impl Into<String>,
        parameters: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        let pass = expected == actual;
        Record {
            name: name.into(),
            parameters: parameters.into(),
            expected,
            actual,
            pass,
        }
    }

    /// A record whose pass flag is decided by the caller.
    pub fn judged(
        name: impl Into<String>,
        parameters: impl Into<String>,
        expected: impl ToString,
        actual: impl ToString,
        pass: bool,
    ) -> Self {
        Record {
            name: name.into(),
            parameters: parameters.into(),
            expected: expected.to_string(),
            actual: actual.to_string(),
            pass,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub seed: u64,
    pub records: Vec<Record>,
    pub pass: bool,
    /// Only filled in on request, so that reports stay byte-identical.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl Report {
    pub fn new(command: impl Into<String>, seed: u64, records: Vec<Record>) -> Self {
        let pass = records.iter().all(|r| r.pass);
        Report {
            command: command.into(),
            seed,
            records,
            pass,
            wall_time_ms: None,
        }
    }
}

pub fn emit_report(r: &Report, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).map_err(|e| Error::Parse(e.to_string()))?;
            s.push('\n');
            Ok(s)
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["command", "seed", "name", "parameters", "expected", "actual", "pass"])
                .map_err(|e| Error::Parse(e.to_string()))?;
            let seed = r.seed.to_string();
            for rec in &r.records {
                w.write_record([
                    r.command.as_str(),
                    &seed,
                    &rec.name,
                    &rec.parameters,
                    &rec.expected,
                    &rec.actual,
                    if rec.pass { "true" } else { "false" },
                ])
                .map_err(|e| Error::Parse(e.to_string()))?;
            }
            let bytes = w.into_inner().map_err(|e| Error::Parse(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::Parse(e.to_string()))
        }
    }
}

/// Inverse of [`emit_report`] for the JSON format.
pub fn parse_report(s: &str) -> Result<Report> {
    serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcore::Scalar;

    fn sample() -> Report {
        Report::new(
            "radial -n 1",
            7,
            vec![
                Record::new("weight-zero-scalar", "root=√2·r1", Scalar::frac(-3, 16), Scalar::frac(-3, 16)),
                Record::new("radial-match", "c=(0,0)", false, true),
            ],
        )
    }

    #[test]
    fn json_round_trip() {
        let r = sample();
        assert!(!r.pass);
        let s = emit_report(&r, Format::Json).unwrap();
        assert!(s.contains("\"-3/16\""));
        assert_eq!(parse_report(&s).unwrap(), r);
    }

    #[test]
    fn csv_layout() {
        let empty = Report::new("census -n 1", 1, vec![]);
        assert_eq!(
            emit_report(&empty, Format::Csv).unwrap(),
            "command,seed,name,parameters,expected,actual,pass\n"
        );
        let s = emit_report(&sample(), Format::Csv).unwrap();
        assert_eq!(s.lines().count(), 3);
        assert!(s.lines().nth(1).unwrap().ends_with("-3/16,-3/16,true"));
    }
}
