//! JSON-lines trial reports and the human summary table.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use hermsos_core::verify::TrialReport;

/// One line of a suite report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportLine {
    pub trial: u64,
    pub check: String,
    pub n: usize,
    pub d: u32,
    pub seed: Option<u64>,
    pub multiplier_degree: Option<u32>,
    pub observed: u64,
    pub bound: u64,
    pub skipped: bool,
    pub pass: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ReportLine {
    pub fn from_trial(trial: u64, r: &TrialReport) -> Self {
        Self {
            trial,
            check: r.check.name().to_string(),
            n: r.instance.n,
            d: r.instance.d,
            seed: r.instance.seed,
            multiplier_degree: r.instance.multiplier_degree,
            observed: r.observed,
            bound: r.bound,
            skipped: r.skipped,
            pass: r.pass,
            detail: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("plain data serializes")
    }
}

pub fn violations(lines: &[ReportLine]) -> usize {
    lines.iter().filter(|l| !l.pass).count()
}

pub fn json_lines(lines: &[ReportLine]) -> String {
    lines.iter().map(|l| l.to_json() + "\n").collect()
}

#[derive(Default)]
struct Row {
    trials: usize,
    skipped: usize,
    violations: usize,
    min_margin: Option<i128>,
}

/// One row per check with trial, skip and violation counts and the
/// smallest `observed − bound` among measured trials.
pub fn summary_table(lines: &[ReportLine]) -> String {
    let mut rows: BTreeMap<&str, Row> = BTreeMap::new();
    for l in lines {
        let row = rows.entry(&l.check).or_default();
        row.trials += 1;
        if l.skipped {
            row.skipped += 1;
            continue;
        }
        if !l.pass {
            row.violations += 1;
        }
        let margin = i128::from(l.observed) - i128::from(l.bound);
        row.min_margin = Some(row.min_margin.map_or(margin, |m| m.min(margin)));
    }
    let mut out = String::new();
    let _ = writeln!(out, "{:<24} {:>8} {:>8} {:>10} {:>11}", "check", "trials", "skipped", "violations", "min margin");
    for (check, r) in &rows {
        let margin = r.min_margin.map_or_else(|| "-".to_string(), |m| m.to_string());
        let _ = writeln!(out, "{check:<24} {:>8} {:>8} {:>10} {margin:>11}", r.trials, r.skipped, r.violations);
    }
    let total = violations(lines);
    let _ = writeln!(out, "{} trials, {total} violations: {}", lines.len(), if total == 0 { "PASS" } else { "FAIL" });
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use hermsos_core::poly::pfister_base;
    use hermsos_core::verify::pfister_multiple_trial;

    #[test]
    fn line_and_table() {
        let r = pfister_multiple_trial(&pfister_base(1, 1), 2);
        let line = ReportLine::from_trial(0, &r);
        assert_eq!(
            line.to_json(),
            r#"{"trial":0,"check":"pfister_multiple","n":1,"d":2,"seed":null,"multiplier_degree":2,"observed":4,"bound":3,"skipped":false,"pass":true}"#
        );
        let back: ReportLine = serde_json::from_str(&line.to_json()).unwrap();
        assert_eq!(back, line);
        let table = summary_table(&[line]);
        assert!(table.contains("pfister_multiple"));
        assert!(table.ends_with("1 trials, 0 violations: PASS\n"));
    }
}
