//! Deterministic renderers: JSON (canonical, sorted keys), CSV, and
//! markdown, plus the dedicated zero-locus table layouts.

use crate::report::Report;
use crate::OutputFormat;

pub fn render(report: &Report, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => {
            let mut s = serde_json::to_string_pretty(report).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Csv => {
            let mut out = String::from("name,status,paper_anchor,data\n");
            for c in &report.checks {
                let data = serde_json::to_string(&c.data).unwrap();
                out.push_str(&format!(
                    "{},{},{},{}\n",
                    csv_escape(&c.name),
                    c.status,
                    csv_escape(&c.paper_anchor),
                    csv_escape(&data)
                ));
            }
            out
        }
        OutputFormat::Markdown => {
            let mut out = String::new();
            out.push_str(&format!(
                "# {} report\n\nversion {}, seed {}, input {}\n\n",
                report.command, report.version, report.seed, report.input_digest
            ));
            out.push_str("| check | status | data | anchor |\n|---|---|---|---|\n");
            for c in &report.checks {
                let data = match &c.data {
                    serde_json::Value::String(s) => s.clone(),
                    other => serde_json::to_string(other).unwrap(),
                };
                out.push_str(&format!(
                    "| {} | {} | {} | {} |\n",
                    c.name,
                    c.status,
                    data.replace('|', "\\|"),
                    c.paper_anchor
                ));
            }
            out
        }
    }
}

fn csv_escape(s: &str) -> String {
    if s.contains(',') || s.contains('"') || s.contains('\n') {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}

#[derive(Debug, Clone)]
pub struct TableRow {
    pub k_min: usize,
    pub k_max: Option<usize>,
    pub locus: String,
}

#[derive(Debug, Clone)]
pub struct TableSection {
    pub name: String,
    pub rank: usize,
    pub lowest_level: usize,
    pub discriminant: String,
    pub rows: Vec<TableRow>,
}

pub fn render_tables(
    sections: &[TableSection],
    format: OutputFormat,
    digest: &str,
    seed: u64,
) -> String {
    match format {
        OutputFormat::Markdown => {
            let mut out = String::from("# Discriminant-ideal zero loci\n");
            for s in sections {
                out.push_str(&format!(
                    "\n## {} (rank {}, lowest level {})\n\n",
                    s.name, s.rank, s.lowest_level
                ));
                out.push_str("| k | zero locus |\n|---|---|\n");
                for r in &s.rows {
                    let range = match r.k_max {
                        Some(hi) if hi == r.k_min => format!("k = {}", r.k_min),
                        Some(hi) => format!("{} <= k <= {}", r.k_min, hi),
                        None => format!("k >= {}", r.k_min),
                    };
                    out.push_str(&format!("| {} | {} |\n", range, r.locus));
                }
                out.push_str(&format!("\ndiscriminant: {}\n", s.discriminant));
            }
            out
        }
        OutputFormat::Csv => {
            let mut out =
                String::from("name,rank,lowest_level,k_min,k_max,locus,discriminant\n");
            for s in sections {
                for r in &s.rows {
                    out.push_str(&format!(
                        "{},{},{},{},{},{},{}\n",
                        s.name,
                        s.rank,
                        s.lowest_level,
                        r.k_min,
                        r.k_max.map(|h| h.to_string()).unwrap_or_default(),
                        csv_escape(&r.locus),
                        csv_escape(&s.discriminant),
                    ));
                }
            }
            out
        }
        OutputFormat::Json => {
            let value = serde_json::json!({
                "command": "tables",
                "version": crate::TOOL_VERSION,
                "seed": seed,
                "input_digest": digest,
                "tables": sections.iter().map(|s| serde_json::json!({
                    "name": s.name,
                    "rank": s.rank,
                    "lowest_level": s.lowest_level,
                    "discriminant": s.discriminant,
                    "ranges": s.rows.iter().map(|r| serde_json::json!({
                        "k_min": r.k_min,
                        "k_max": r.k_max,
                        "locus": r.locus,
                    })).collect::<Vec<_>>(),
                })).collect::<Vec<_>>(),
            });
            let mut s = serde_json::to_string_pretty(&value).unwrap();
            s.push('\n');
            s
        }
    }
}
