//! Report rendering as JSON or markdown, and parsing back from JSON.

use std::collections::BTreeMap;

use super::{CheckRecord, Format, Report, Status, SuiteError};

/// Renders a report. JSON is a pretty-printed array of records with fixed field
/// order; markdown has one table per suite.
pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(r).expect("reports serialize"),
        Format::Markdown => markdown(r),
    }
}

/// Inverse of [`emit_report`] with [`Format::Json`].
pub fn parse_report(s: &str) -> Result<Report, SuiteError> {
    serde_json::from_str(s).map_err(|e| SuiteError::Parse(e.to_string()))
}

fn status_str(s: Status) -> &'static str {
    match s {
        Status::Pass => "pass",
        Status::Fail => "FAIL",
        Status::Error => "ERROR",
    }
}

/// Escapes table separators so witnesses stay inside their cell.
fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

fn markdown(r: &Report) -> String {
    let mut groups: BTreeMap<&str, Vec<&CheckRecord>> = BTreeMap::new();
    for rec in &r.records {
        groups.entry(rec.suite()).or_default().push(rec);
    }
    let passed = r
        .records
        .iter()
        .filter(|x| x.status == Status::Pass)
        .count();
    let mut out = format!(
        "# Verification report\n\n{passed}/{} checks passed.\n",
        r.records.len()
    );
    for (suite, recs) in groups {
        out.push_str(&format!("\n## {suite}\n\n"));
        out.push_str("| check | anchor | status | ms | params | witness |\n");
        out.push_str("|---|---|---|---|---|---|\n");
        for rec in recs {
            let params = serde_json::to_string(&rec.params).expect("params serialize");
            out.push_str(&format!(
                "| `{}` | {} | {} | {} | `{}` | {} |\n",
                rec.check_id,
                cell(&rec.paper_anchor),
                status_str(rec.status),
                rec.elapsed_ms,
                cell(&params),
                cell(rec.witness.as_deref().unwrap_or(""))
            ));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::{json, Map};

    fn record(id: &str, status: Status) -> CheckRecord {
        let mut params = Map::new();
        params.insert("box".into(), json!(3));
        CheckRecord {
            check_id: id.into(),
            paper_anchor: "anchor".into(),
            params,
            status,
            witness: (status != Status::Pass).then(|| "w | x".to_string()),
            elapsed_ms: 5,
        }
    }

    #[test]
    fn empty_report_is_empty_array() {
        assert_eq!(emit_report(&Report::default(), Format::Json), "[]");
    }

    #[test]
    fn json_field_order_and_round_trip() {
        let r = Report::new(vec![
            record("b/x", Status::Fail),
            record("a/y", Status::Pass),
        ]);
        let s = emit_report(&r, Format::Json);
        let order: Vec<usize> = [
            "check_id",
            "paper_anchor",
            "params",
            "status",
            "witness",
            "elapsed_ms",
        ]
        .iter()
        .map(|k| s.find(&format!("\"{k}\"")).unwrap())
        .collect();
        assert!(order.windows(2).all(|w| w[0] < w[1]));
        assert!(s.contains("\"witness\": null"));
        assert!(s.contains("\"status\": \"fail\""));
        assert_eq!(parse_report(&s).unwrap(), r);
        assert!(parse_report("{").is_err());
    }

    #[test]
    fn markdown_groups_by_suite() {
        let r = Report::new(vec![
            record("b/x", Status::Fail),
            record("a/y", Status::Pass),
        ]);
        let md = emit_report(&r, Format::Markdown);
        let a = md.find("## a").unwrap();
        let b = md.find("## b").unwrap();
        assert!(a < b);
        assert!(md.contains("1/2 checks passed"));
        assert!(md.contains("w \\| x"));
    }
}
