//! Rendering of command results as aligned tables, CSV, and JSON.
//!
//! Integers larger than [`FULL_PRINT_DIGIT_LIMIT`] decimal digits are elided
//! as `<D-digit integer>` unless `--full-integers` is given; the elision rule
//! applies uniformly across formats. JSON keys and CSV column orders are
//! fixed and documented in the README.

use num_bigint::BigUint;
use serde_json::json;

use cubic_sums::report::VERSION;
use cubic_sums::{PredictionRecord, SuiteReport, SweepRow, TermRecord};

/// Decimal-digit threshold above which big integers are elided by default.
pub const FULL_PRINT_DIGIT_LIMIT: usize = 10_000;

/// Render a natural number, eliding it above the digit threshold.
pub fn display_natural(value: &BigUint, full: bool) -> String {
    let text = value.to_string();
    if full || text.len() <= FULL_PRINT_DIGIT_LIMIT {
        text
    } else {
        format!("<{}-digit integer>", text.len())
    }
}

fn kv_table(pairs: &[(&str, String)]) -> String {
    let width = pairs.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    let mut text = String::new();
    for (key, value) in pairs {
        text.push_str(&format!("{key:<width$}  {value}\n"));
    }
    text
}

pub fn compute_table(
    prediction: &PredictionRecord,
    exact: Option<&(BigUint, u64)>,
    full: bool,
) -> String {
    let mut pairs = vec![
        ("n", prediction.n.to_string()),
        ("parity", prediction.parity.to_string()),
        ("digit_argument", prediction.digit_argument.to_string()),
        ("predicted", prediction.predicted.to_string()),
    ];
    if let Some((sum, exact)) = exact {
        pairs.push(("S_n", display_natural(sum, full)));
        pairs.push(("exact", exact.to_string()));
        pairs.push(("match", (*exact == prediction.predicted).to_string()));
    }
    pairs.push((
        "in_theorem_range",
        prediction.in_theorem_range.to_string(),
    ));
    kv_table(&pairs)
}

pub fn compute_csv(
    prediction: &PredictionRecord,
    exact: Option<&(BigUint, u64)>,
    full: bool,
) -> String {
    match exact {
        Some((sum, exact)) => format!(
            "n,parity,digit_argument,predicted,s_n,exact,match,in_theorem_range\n{},{},{},{},{},{},{},{}\n",
            prediction.n,
            prediction.parity,
            prediction.digit_argument,
            prediction.predicted,
            display_natural(sum, full),
            exact,
            *exact == prediction.predicted,
            prediction.in_theorem_range,
        ),
        None => format!(
            "n,parity,digit_argument,predicted,in_theorem_range\n{},{},{},{},{}\n",
            prediction.n,
            prediction.parity,
            prediction.digit_argument,
            prediction.predicted,
            prediction.in_theorem_range,
        ),
    }
}

pub fn compute_json(
    prediction: &PredictionRecord,
    exact: Option<&(BigUint, u64)>,
    full: bool,
) -> String {
    let mut doc = json!({
        "version": VERSION,
        "command": "compute",
        "n": prediction.n.to_string(),
        "parity": prediction.parity.to_string(),
        "digit_argument": prediction.digit_argument.to_string(),
        "predicted": prediction.predicted,
        "in_theorem_range": prediction.in_theorem_range,
    });
    if let Some((sum, exact)) = exact {
        doc["s_n"] = json!(display_natural(sum, full));
        doc["exact"] = json!(exact);
        doc["match"] = json!(*exact == prediction.predicted);
    }
    pretty(&doc)
}

fn term_cells(record: &TermRecord, full: bool) -> [String; 5] {
    [
        record.r.to_string(),
        record.exact_valuation.to_string(),
        record
            .lower_bound
            .map_or_else(String::new, |b| b.to_string()),
        if record.is_dominant { "*" } else { "" }.to_string(),
        display_natural(&record.value, full),
    ]
}

pub fn terms_table(records: &[TermRecord], full: bool) -> String {
    let header = ["r", "valuation", "lower_bound", "dominant", "A_r"];
    let rows: Vec<[String; 5]> = records.iter().map(|r| term_cells(r, full)).collect();
    let mut widths = header.map(str::len);
    for row in &rows {
        for (width, cell) in widths.iter_mut().zip(row.iter()) {
            *width = (*width).max(cell.len());
        }
    }
    let mut text = String::new();
    let emit = |text: &mut String, cells: &[String]| {
        let line = cells
            .iter()
            .zip(widths.iter())
            .map(|(cell, width)| format!("{cell:<width$}"))
            .collect::<Vec<_>>()
            .join("  ");
        text.push_str(line.trim_end());
        text.push('\n');
    };
    emit(&mut text, &header.map(String::from));
    for row in &rows {
        emit(&mut text, row);
    }
    text
}

pub fn terms_csv(records: &[TermRecord], full: bool) -> String {
    let mut text = String::from("r,value,valuation,lower_bound,dominant\n");
    for record in records {
        text.push_str(&format!(
            "{},{},{},{},{}\n",
            record.r,
            display_natural(&record.value, full),
            record.exact_valuation,
            record
                .lower_bound
                .map_or_else(String::new, |b| b.to_string()),
            record.is_dominant,
        ));
    }
    text
}

pub fn terms_json(n: u64, records: &[TermRecord], full: bool) -> String {
    let terms: Vec<_> = records
        .iter()
        .map(|record| {
            json!({
                "r": record.r,
                "value": display_natural(&record.value, full),
                "valuation": record.exact_valuation.finite(),
                "lower_bound": record.lower_bound,
                "dominant": record.is_dominant,
            })
        })
        .collect();
    pretty(&json!({
        "version": VERSION,
        "command": "terms",
        "n": n,
        "terms": terms,
    }))
}

pub fn reports_table(reports: &[SuiteReport]) -> String {
    let mut text = String::new();
    for report in reports {
        text.push_str(&format!(
            "{:<14} {:>9} cases {:>6} failures {:>9.3}s  {}\n",
            report.suite,
            report.cases,
            report.failures.len(),
            report.elapsed_ns as f64 / 1e9,
            if report.passed() { "PASS" } else { "FAIL" },
        ));
        for failure in report.failures.iter().take(20) {
            text.push_str(&format!(
                "    {} expected {} got {}\n",
                failure.input, failure.expected, failure.got
            ));
        }
        if report.failures.len() > 20 {
            text.push_str(&format!(
                "    ... and {} more failures\n",
                report.failures.len() - 20
            ));
        }
    }
    let total_failures: usize = reports.iter().map(|r| r.failures.len()).sum();
    text.push_str(&format!(
        "overall: {} ({} suites, {} failures)\n",
        if total_failures == 0 { "PASS" } else { "FAIL" },
        reports.len(),
        total_failures,
    ));
    text
}

pub fn sweep_table(rows: &[SweepRow]) -> String {
    let mut text = format!(
        "{:>10} {:>6} {:>14} {:>9} {:>6} {:>5} {:>12}\n",
        "n", "parity", "digit_argument", "predicted", "exact", "match", "elapsed_ns"
    );
    for row in rows {
        text.push_str(&format!(
            "{:>10} {:>6} {:>14} {:>9} {:>6} {:>5} {:>12}\n",
            row.n,
            row.parity.to_string(),
            row.digit_argument,
            row.predicted,
            row.exact,
            row.matched,
            row.elapsed_ns,
        ));
    }
    text
}

fn pretty(value: &serde_json::Value) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("serializing JSON document");
    text.push('\n');
    text
}
