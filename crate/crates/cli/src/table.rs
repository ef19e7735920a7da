//! Rendering of the upper/lower bound table.

use oddgirth::bounds::{describe, gamma_table, TableRow};

use crate::{HarnessError, HarnessResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, clap::ValueEnum)]
pub enum TableFormat {
    #[default]
    Text,
    Csv,
}

pub fn table_rows(k_max: usize) -> HarnessResult<Vec<TableRow>> {
    if k_max < 3 || k_max.is_multiple_of(2) {
        return Err(HarnessError::Usage(format!(
            "k_max = {k_max} must be odd and >= 3"
        )));
    }
    Ok(gamma_table(k_max)?)
}

/// `k | upper | lower (lower witness) | upper source`, one row per k.
pub fn render_text(rows: &[TableRow]) -> String {
    let mut out = String::from("k | upper | lower (witness) | upper source\n");
    for row in rows {
        out.push_str(&format!(
            "{} | {} | {} ({}) | {}\n",
            row.k,
            row.upper_display(),
            row.lower_display(),
            describe(&row.lower),
            describe(&row.upper),
        ));
    }
    out
}

pub fn render_csv(rows: &[TableRow]) -> String {
    let mut w = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(Vec::new());
    w.write_record([
        "k",
        "upper",
        "upper_source",
        "upper_exact",
        "lower",
        "lower_witness",
        "lower_exact",
    ])
    .expect("in-memory write");
    for row in rows {
        w.write_record([
            row.k.to_string(),
            row.upper_display(),
            describe(&row.upper),
            row.upper.value.to_string(),
            row.lower_display(),
            describe(&row.lower),
            row.lower.value.to_string(),
        ])
        .expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 fields")
}

pub fn render(rows: &[TableRow], format: TableFormat) -> String {
    match format {
        TableFormat::Text => render_text(rows),
        TableFormat::Csv => render_csv(rows),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn text_rows() {
        let text = render_text(&table_rows(11).unwrap());
        assert!(text.contains("7 | 0.0396 | 0.0312 (folded 7-cube)"));
        assert!(text.contains("11 | 0.0365 | 0.0073 (11-cycle)"));
        assert!(text.contains("5 | 0.1716 | 0.14 (Higman-Sims graph)"));
        assert!(text.contains("3 | 1 | 1 ("));
    }

    #[test]
    fn csv_rows() {
        let csv = render_csv(&table_rows(15).unwrap());
        assert_eq!(csv.lines().count(), 8);
        assert!(csv.lines().nth(7).unwrap().starts_with("15,0.0240,"));
    }

    #[test]
    fn bad_k() {
        assert!(matches!(table_rows(8), Err(HarnessError::Usage(_))));
        assert!(matches!(table_rows(1), Err(HarnessError::Usage(_))));
    }
}
