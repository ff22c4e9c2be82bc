//! Comparison tables of the comb and conjectured orientations.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use digrid_core::formulas::{self, ValueSource, compare_comb_transpose, comb_value, conj_closed_form, cubic_ratio};
use digrid_core::{FormulaError, WienerValue};
use num_rational::Ratio;
use serde_json::{Value, json};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    /// The theorem's hypotheses do not hold for this row.
    NotApplicable,
}

impl Verdict {
    fn from_bool(b: bool) -> Self {
        if b { Verdict::Pass } else { Verdict::Fail }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "n/a",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TableRow {
    pub m: usize,
    pub n: usize,
    /// Absent for odd `n`, where the comb does not exist.
    pub comb: Option<(WienerValue, ValueSource)>,
    pub conj: Option<WienerValue>,
    /// `W_comb - W_conj` when both exist.
    pub gap: Option<i128>,
    /// Larger of the two values over `(mn)^3`.
    pub ratio: Option<Ratio<u128>>,
    /// comb beats conjectured (`m >= 3`, even `n >= 4`).
    pub comb_beats_conj: Verdict,
    /// `W(C_{m,n}) > W(C_{n,m})` (even `4 <= m < n`).
    pub comb_beats_transpose: Verdict,
}

pub fn table_row(m: usize, n: usize) -> Result<TableRow, FormulaError> {
    let comb = if n.is_multiple_of(2) && m >= 2 && n >= 2 { Some(comb_value(m, n)?) } else { None };
    let conj = if m >= 2 && n >= 2 { Some(conj_closed_form(m, n)?) } else { None };
    let gap = comb.zip(conj).map(|((c, _), d)| c.get() as i128 - d.get() as i128);
    let best = comb.map(|c| c.0).into_iter().chain(conj).max();
    let comb_beats_conj = match (comb, conj) {
        (Some((c, _)), Some(d)) if m >= 3 && n >= 4 => Verdict::from_bool(c > d),
        _ => Verdict::NotApplicable,
    };
    let comb_beats_transpose = match compare_comb_transpose(m, n) {
        Ok(cmp) => Verdict::from_bool(cmp.holds),
        Err(FormulaError::Hypothesis { .. }) => Verdict::NotApplicable,
        Err(e) => return Err(e),
    };
    Ok(TableRow {
        m,
        n,
        comb,
        conj,
        gap,
        ratio: best.map(|w| cubic_ratio(w, m, n)),
        comb_beats_conj,
        comb_beats_transpose,
    })
}

pub fn table_rows(ms: RangeInclusive<usize>, ns: RangeInclusive<usize>) -> Result<Vec<TableRow>, FormulaError> {
    let mut rows = Vec::new();
    for m in ms {
        for n in ns.clone() {
            rows.push(table_row(m, n)?);
        }
    }
    Ok(rows)
}

/// Six-decimal rendering, rounded half up.
pub fn decimal6(r: &Ratio<u128>) -> String {
    let scaled = (r.numer() * 2_000_000 + r.denom()) / (2 * r.denom());
    format!("{}.{:06}", scaled / 1_000_000, scaled % 1_000_000)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    Csv,
    Markdown,
    Json,
}

fn opt<T: ToString>(v: Option<T>) -> String {
    v.map(|x| x.to_string()).unwrap_or_default()
}

fn source_str(s: ValueSource) -> &'static str {
    match s {
        ValueSource::ClosedForm => "formula",
        ValueSource::Oracle => "bfs",
    }
}

fn cells(row: &TableRow, verdicts: bool) -> Vec<String> {
    let mut c = vec![
        row.m.to_string(),
        row.n.to_string(),
        opt(row.comb.map(|c| c.0)),
        opt(row.conj),
        opt(row.gap),
        opt(row.ratio),
        row.ratio.as_ref().map(decimal6).unwrap_or_default(),
    ];
    if verdicts {
        c.push(row.comb.map(|c| source_str(c.1)).unwrap_or_default().to_string());
        c.push(row.comb_beats_conj.as_str().to_string());
        c.push(row.comb_beats_transpose.as_str().to_string());
    }
    c
}

fn header(verdicts: bool) -> Vec<&'static str> {
    let mut h = vec!["m", "n", "w_comb", "w_conj", "gap", "ratio", "ratio_decimal"];
    if verdicts {
        h.extend(["comb_source", "comb_gt_conj", "comb_gt_transpose"]);
    }
    h
}

fn row_json(row: &TableRow, verdicts: bool) -> Value {
    let s = |v: Option<String>| v.map_or(Value::Null, Value::String);
    let mut obj = json!({
        "m": row.m.to_string(),
        "n": row.n.to_string(),
        "w_comb": s(row.comb.map(|c| c.0.to_string())),
        "w_conj": s(row.conj.map(|c| c.to_string())),
        "gap": s(row.gap.map(|g| g.to_string())),
        "ratio": s(row.ratio.map(|r| r.to_string())),
        "ratio_decimal": s(row.ratio.as_ref().map(decimal6)),
    });
    if verdicts {
        obj["comb_source"] = s(row.comb.map(|c| source_str(c.1).to_string()));
        obj["comb_gt_conj"] = Value::String(row.comb_beats_conj.as_str().into());
        obj["comb_gt_transpose"] = Value::String(row.comb_beats_transpose.as_str().into());
    }
    obj
}

/// Renders rows; `verdicts` adds the source and comparison columns.
pub fn render(rows: &[TableRow], format: TableFormat, verdicts: bool) -> String {
    let mut out = String::new();
    match format {
        TableFormat::Csv => {
            let _ = writeln!(out, "{}", header(verdicts).join(","));
            for row in rows {
                let _ = writeln!(out, "{}", cells(row, verdicts).join(","));
            }
        }
        TableFormat::Markdown => {
            let h = header(verdicts);
            let _ = writeln!(out, "| {} |", h.join(" | "));
            let _ = writeln!(out, "|{}", "---|".repeat(h.len()));
            for row in rows {
                let _ = writeln!(out, "| {} |", cells(row, verdicts).join(" | "));
            }
        }
        TableFormat::Json => {
            let rows: Vec<Value> = rows.iter().map(|r| row_json(r, verdicts)).collect();
            out = serde_json::to_string_pretty(&json!({ "rows": rows })).expect("json values serialize");
            out.push('\n');
        }
    }
    out
}

/// Used by `wiener`: the closed form that should match BFS for a named
/// orientation, if one applies.
pub fn formula_for(kind: &str, m: usize, n: usize) -> Option<WienerValue> {
    match kind {
        "comb" => formulas::comb_closed_form(m, n).ok(),
        "conj" | "ladder" => conj_closed_form(m, n).ok(),
        "snake" if m == 1 || n == 1 => Some(formulas::path_wiener(m * n)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn paper_rows() {
        let r = table_row(3, 4).unwrap();
        assert_eq!(r.comb, Some((WienerValue(538), ValueSource::Oracle)));
        assert_eq!(r.conj, Some(WienerValue(516)));
        assert_eq!(r.gap, Some(22));
        assert_eq!(r.comb_beats_conj, Verdict::Pass);
        let r = table_row(3, 6).unwrap();
        assert_eq!((r.gap, r.comb_beats_conj), (Some(114), Verdict::Pass));
        assert_eq!(table_row(4, 6).unwrap().comb_beats_transpose, Verdict::Pass);
        assert_eq!(table_row(6, 4).unwrap().comb_beats_transpose, Verdict::NotApplicable);
        let odd = table_row(3, 5).unwrap();
        assert_eq!((odd.comb, odd.gap), (None, None));
        assert_eq!(odd.ratio, Some(Ratio::new(968, 3375)));
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal6(&Ratio::new(1, 3)), "0.333333");
        assert_eq!(decimal6(&Ratio::new(2, 3)), "0.666667");
        assert_eq!(decimal6(&Ratio::new(538, 1728)), "0.311343");
        assert_eq!(decimal6(&Ratio::from_integer(2)), "2.000000");
    }

    #[test]
    fn csv_shape() {
        let rows = table_rows(3..=3, 4..=4).unwrap();
        let csv = render(&rows, TableFormat::Csv, true);
        let mut lines = csv.lines();
        assert_eq!(lines.next().unwrap().split(',').count(), 10);
        assert_eq!(lines.next().unwrap(), "3,4,538,516,22,269/864,0.311343,bfs,PASS,n/a");
    }
}
