//! Records emitted by the command-line tool and their text, JSON and CSV
//! renderings.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::congruence::CongruenceReport;
use crate::error::Error;
use crate::exact::{format_rational, QPoly, Rational};
use crate::numeric::ComplexVal;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
    Csv,
}

impl std::str::FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "text" => Ok(Format::Text),
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            other => Err(format!("unknown format `{other}` (expected text, json or csv)")),
        }
    }
}

/// Polynomial as a map from exponent to exact coefficient string.
pub fn poly_map(p: &QPoly) -> BTreeMap<usize, String> {
    p.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !num_traits::Zero::is_zero(*c))
        .map(|(k, c)| (k, format_rational(c)))
        .collect()
}

#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum OutputRecord {
    PsiMoment { chi: String, m: usize, value: String },
    LNegative { chi: String, poly: BTreeMap<usize, String>, offset: u64, m: u32, value: String },
    FamilyPoly { chi: String, m: u32, coeffs: BTreeMap<usize, String>, display: String },
    EvalPoint { chi: String, s: ComplexVal, value: ComplexVal, taylor_order: usize, offset: u64 },
    CongruenceReport(CongruenceReport),
    Error { class: String, code: String, message: String },
}

impl OutputRecord {
    pub fn psi_moment(chi: &str, m: usize, value: &Rational) -> Self {
        OutputRecord::PsiMoment { chi: chi.into(), m, value: format_rational(value) }
    }

    pub fn l_negative(chi: &str, poly: &QPoly, offset: u64, m: u32, value: &Rational) -> Self {
        OutputRecord::LNegative { chi: chi.into(), poly: poly_map(poly), offset, m, value: format_rational(value) }
    }

    pub fn family_poly(chi: &str, m: u32, value: &QPoly) -> Self {
        OutputRecord::FamilyPoly { chi: chi.into(), m, coeffs: poly_map(value), display: value.display_in("u") }
    }

    pub fn error(e: &Error) -> Self {
        OutputRecord::Error {
            class: format!("{:?}", e.class()).to_lowercase(),
            code: e.code().into(),
            message: e.to_string(),
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            OutputRecord::PsiMoment { .. } => "psi_moment",
            OutputRecord::LNegative { .. } => "l_negative",
            OutputRecord::FamilyPoly { .. } => "family_poly",
            OutputRecord::EvalPoint { .. } => "eval_point",
            OutputRecord::CongruenceReport(_) => "congruence_report",
            OutputRecord::Error { .. } => "error",
        }
    }

    fn text_cells(&self) -> Vec<String> {
        match self {
            OutputRecord::PsiMoment { m, value, .. } => vec![format!("m={m}"), value.clone()],
            OutputRecord::LNegative { offset, m, value, .. } => {
                vec![format!("m={m}"), format!("A={offset}"), value.clone()]
            }
            OutputRecord::FamilyPoly { m, display, .. } => vec![format!("p_{m}"), display.clone()],
            OutputRecord::EvalPoint { s, value, .. } => vec![format!("s={s}"), value.to_string()],
            OutputRecord::CongruenceReport(r) => vec![
                format!("p={}", r.prime),
                format!("period={}", r.period_detected.map_or("none".to_string(), |t| t.to_string())),
                format!("p-1 period: {}", if r.p_minus_one_is_period { "yes" } else { "no" }),
                r.display_terms().join(", "),
            ],
            OutputRecord::Error { code, message, .. } => vec![format!("error[{code}]"), message.clone()],
        }
    }

    fn csv_cells(&self) -> [String; CSV_HEADER.len()] {
        let mut row: [String; CSV_HEADER.len()] = Default::default();
        row[0] = self.kind().into();
        match self {
            OutputRecord::PsiMoment { chi, m, value } => {
                row[1] = chi.clone();
                row[2] = m.to_string();
                row[5] = value.clone();
            }
            OutputRecord::LNegative { chi, poly, offset, m, value } => {
                row[1] = chi.clone();
                row[2] = m.to_string();
                row[3] = offset.to_string();
                row[4] = render_map(poly);
                row[5] = value.clone();
            }
            OutputRecord::FamilyPoly { chi, m, coeffs, .. } => {
                row[1] = chi.clone();
                row[2] = m.to_string();
                row[5] = render_map(coeffs);
            }
            OutputRecord::EvalPoint { chi, s, value, offset, .. } => {
                row[1] = chi.clone();
                row[3] = offset.to_string();
                row[6] = s.re.to_string();
                row[7] = s.im.to_string();
                row[8] = value.re.to_string();
                row[9] = value.im.to_string();
            }
            OutputRecord::CongruenceReport(r) => {
                row[1] = r.chi_name.clone();
                row[5] = r.display_terms().join("; ");
                row[10] = r.prime.to_string();
                row[11] = r.period_detected.map(|t| t.to_string()).unwrap_or_default();
                row[12] = r.p_minus_one_is_period.to_string();
            }
            OutputRecord::Error { code, message, .. } => {
                row[5] = message.clone();
                row[13] = code.clone();
            }
        }
        row
    }
}

const CSV_HEADER: [&str; 14] = [
    "kind",
    "chi",
    "m",
    "offset",
    "poly",
    "value",
    "s_re",
    "s_im",
    "value_re",
    "value_im",
    "prime",
    "period_detected",
    "p_minus_one_is_period",
    "error",
];

fn render_map(map: &BTreeMap<usize, String>) -> String {
    map.iter().map(|(k, v)| format!("{k}:{v}")).collect::<Vec<_>>().join(" ")
}

fn render_text(records: &[OutputRecord]) -> String {
    let rows: Vec<Vec<String>> = records.iter().map(OutputRecord::text_cells).collect();
    let columns = rows.iter().map(Vec::len).max().unwrap_or(0);
    let widths: Vec<usize> = (0..columns)
        .map(|c| rows.iter().filter_map(|r| r.get(c)).map(|s| s.chars().count()).max().unwrap_or(0))
        .collect();
    let mut out = String::new();
    for row in rows {
        let last = row.len().saturating_sub(1);
        let line: Vec<String> = row
            .iter()
            .enumerate()
            .map(|(i, cell)| if i == last { cell.clone() } else { format!("{cell:<w$}", w = widths[i]) })
            .collect();
        out.push_str(&line.join("  "));
        out.push('\n');
    }
    out
}

fn render_csv(records: &[OutputRecord]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(CSV_HEADER).expect("in-memory write");
    for r in records {
        writer.write_record(r.csv_cells()).expect("in-memory write");
    }
    String::from_utf8(writer.into_inner().expect("in-memory flush")).expect("utf-8 cells")
}

/// Render a whole batch; JSON is a single array.
pub fn render(records: &[OutputRecord], format: Format) -> String {
    match format {
        Format::Text => render_text(records),
        Format::Json => {
            let mut s = serde_json::to_string_pretty(records).expect("records serialize");
            s.push('\n');
            s
        }
        Format::Csv => render_csv(records),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{parse_rational, rat};

    fn sample() -> Vec<OutputRecord> {
        vec![
            OutputRecord::psi_moment("chi3", 1, &rat(-1, 3)),
            OutputRecord::psi_moment("chi3", 3, &rat(2, 3)),
            OutputRecord::l_negative("chi3", &QPoly::from_ints(&[0, 1, 1]), 1, 2, &rat(-2, 3)),
        ]
    }

    #[test]
    fn json_is_an_array_and_round_trips() {
        let text = render(&sample(), Format::Json);
        let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
        let arr = parsed.as_array().unwrap();
        assert_eq!(arr.len(), 3);
        assert_eq!(arr[0]["kind"], "psi_moment");
        assert_eq!(arr[2]["poly"]["2"], "1");
        let v = parse_rational(arr[2]["value"].as_str().unwrap()).unwrap();
        assert_eq!(v, rat(-2, 3));
    }

    #[test]
    fn csv_has_one_row_per_record() {
        let text = render(&sample(), Format::Csv);
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
        assert_eq!(rows.len(), 3);
        assert_eq!(&rows[1][5], "2/3");
        assert_eq!(&rows[2][4], "1:1 2:1");
    }

    #[test]
    fn text_is_aligned() {
        let text = render(&sample()[..2], Format::Text);
        assert_eq!(text, "m=1  -1/3\nm=3  2/3\n");
    }

    #[test]
    fn format_names() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
