//! CSV and JSON rendering for sweep rows and suite reports.
//!
//! The sweep CSV schema is fixed: header
//! `n,parity,digit_argument,predicted,exact,match,elapsed_ns`, one row per
//! `n` in order, booleans as `true`/`false`. JSON documents mirror the CSV
//! columns and add metadata (version, ranges, seed).

use serde::Serialize;

use crate::verify::{SuiteReport, SweepRow};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// The exact header line of sweep CSV output.
pub const SWEEP_CSV_HEADER: &str = "n,parity,digit_argument,predicted,exact,match,elapsed_ns";

pub fn sweep_to_csv(rows: &[SweepRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for row in rows {
        writer.serialize(row).expect("serializing a sweep row");
    }
    let bytes = writer.into_inner().expect("flushing CSV");
    if bytes.is_empty() {
        return format!("{SWEEP_CSV_HEADER}\n");
    }
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

pub fn sweep_from_csv(data: &str) -> Result<Vec<SweepRow>, csv::Error> {
    csv::Reader::from_reader(data.as_bytes())
        .deserialize()
        .collect()
}

#[derive(Serialize)]
struct SweepDocument<'a> {
    version: &'a str,
    from: u64,
    to: u64,
    rows: &'a [SweepRow],
}

pub fn sweep_to_json(rows: &[SweepRow], from: u64, to: u64) -> String {
    let doc = SweepDocument {
        version: VERSION,
        from,
        to,
        rows,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializing sweep document");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct ReportDocument<'a> {
    version: &'a str,
    reports: &'a [SuiteReport],
}

pub fn reports_to_json(reports: &[SuiteReport]) -> String {
    let doc = ReportDocument {
        version: VERSION,
        reports,
    };
    let mut text = serde_json::to_string_pretty(&doc).expect("serializing suite reports");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct SuiteCsvRow<'a> {
    suite: &'a str,
    cases: u64,
    failures: u64,
    passed: bool,
    elapsed_ns: u64,
}

/// Summary CSV for suite reports, one line per suite. Failure details are
/// only carried by the JSON and table renderings.
pub fn reports_to_csv(reports: &[SuiteReport]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    for report in reports {
        writer
            .serialize(SuiteCsvRow {
                suite: &report.suite,
                cases: report.cases,
                failures: report.failures.len() as u64,
                passed: report.passed(),
                elapsed_ns: report.elapsed_ns,
            })
            .expect("serializing a suite row");
    }
    let bytes = writer.into_inner().expect("flushing CSV");
    if bytes.is_empty() {
        return "suite,cases,failures,passed,elapsed_ns\n".to_string();
    }
    String::from_utf8(bytes).expect("CSV output is UTF-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::verify_theorem;

    #[test]
    fn sweep_csv_header_is_fixed() {
        let rows = verify_theorem(1, 3).unwrap();
        let csv = sweep_to_csv(&rows);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some(SWEEP_CSV_HEADER));
        assert_eq!(lines.count(), 3);
        assert_eq!(sweep_to_csv(&[]).trim_end(), SWEEP_CSV_HEADER);
    }

    #[test]
    fn sweep_csv_round_trips() {
        let rows = verify_theorem(1, 10).unwrap();
        let parsed = sweep_from_csv(&sweep_to_csv(&rows)).unwrap();
        assert_eq!(rows, parsed);
    }

    #[test]
    fn sweep_row_for_n1_matches_documented_shape() {
        let rows = verify_theorem(1, 1).unwrap();
        let csv = sweep_to_csv(&rows);
        let row = csv.lines().nth(1).unwrap();
        assert!(row.starts_with("1,odd,0,1,1,true,"), "row was {row:?}");
    }

    #[test]
    fn json_document_carries_version_and_rows() {
        let rows = verify_theorem(2, 2).unwrap();
        let doc: serde_json::Value =
            serde_json::from_str(&sweep_to_json(&rows, 2, 2)).unwrap();
        assert_eq!(doc["version"], VERSION);
        assert_eq!(doc["rows"][0]["n"], 2);
        assert_eq!(doc["rows"][0]["parity"], "even");
        assert_eq!(doc["rows"][0]["match"], true);
    }
}
