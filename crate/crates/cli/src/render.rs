use mwc_power::{BigInt, PowerReport, Rational};
use serde_json::{json, Value};

pub fn fractions(values: &[Rational]) -> Vec<String> {
    values.iter().map(Rational::to_fraction_string).collect()
}

pub fn integers(values: &[BigInt]) -> Vec<String> {
    values.iter().map(BigInt::to_string).collect()
}

/// Per-index arrays in voter order. Exact values only.
pub fn report_json(report: &PowerReport) -> Value {
    json!({
        "bs": integers(&report.bs),
        "pbp": fractions(&report.pbp),
        "pbi": fractions(&report.pbi),
        "ssi": fractions(&report.ssi),
        "dp": fractions(&report.dp),
        "hp": fractions(&report.hp),
    })
}

fn cell(value: &Rational, precision: usize) -> String {
    format!("{} ({})", value, value.to_decimal_string(precision))
}

/// Left-aligned text table.
pub fn table(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.len()).collect();
    for row in rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| {
        cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = line(header.to_vec());
    out.push('\n');
    for row in rows {
        out.push_str(&line(row.iter().map(String::as_str).collect()));
        out.push('\n');
    }
    out
}

pub fn report_table(report: &PowerReport, precision: usize) -> String {
    let rows: Vec<Vec<String>> = report
        .voters
        .names()
        .iter()
        .enumerate()
        .map(|(w, name)| {
            vec![
                name.clone(),
                report.bs[w].to_string(),
                cell(&report.pbp[w], precision),
                cell(&report.pbi[w], precision),
                cell(&report.ssi[w], precision),
                cell(&report.dp[w], precision),
                cell(&report.hp[w], precision),
            ]
        })
        .collect();
    table(&["voter", "BS", "PBP", "PBI", "SSI", "DP", "HP"], &rows)
}
