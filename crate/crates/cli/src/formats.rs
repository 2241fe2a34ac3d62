//! Text formats other than graphs, and rendering of command output.

use num_complex::Complex64;
use serde::Serialize;
use serde_json::{Map, Value};
use tropos::tropical::{ComplexCurveSpec, PointCloud, TropicalPolynomial};

use crate::error::{detail, CliError, CliResult};

/// Non-blank, non-comment lines with their 1-based numbers.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let t = l.trim();
        (!t.is_empty() && !t.starts_with('#')).then(|| (i + 1, t.split_whitespace().collect()))
    })
}

fn number<T: std::str::FromStr>(field: &str, line: usize, what: &str) -> CliResult<T> {
    field
        .parse()
        .map_err(|_| CliError::Parse(format!("line {line}: bad {what} `{field}`")))
}

/// Two-column `point value` file; values stay as literals until the
/// semiring is known.
pub fn parse_grid(text: &str) -> CliResult<(Vec<String>, Vec<String>)> {
    let mut points = Vec::new();
    let mut values = Vec::new();
    for (line, fields) in data_lines(text) {
        let [p, v] = fields[..] else {
            return Err(CliError::Parse(format!("line {line}: expected `point value`")));
        };
        points.push(p.to_string());
        values.push(v.to_string());
    }
    if points.is_empty() {
        return Err(CliError::Parse("no grid points".into()));
    }
    Ok((points, values))
}

/// `coeff exp_1 … exp_n` per line.
pub fn parse_tropical_poly(text: &str) -> CliResult<TropicalPolynomial> {
    let mut terms = Vec::new();
    for (line, fields) in data_lines(text) {
        if fields.len() < 2 {
            return Err(CliError::Parse(format!("line {line}: expected `coeff exp…`")));
        }
        let coeff: f64 = number(fields[0], line, "coefficient")?;
        let exps = fields[1..]
            .iter()
            .map(|f| number::<i64>(f, line, "exponent"))
            .collect::<CliResult<Vec<_>>>()?;
        terms.push((exps, coeff));
    }
    TropicalPolynomial::new(terms).map_err(|e| CliError::Parse(detail(&e)))
}

/// `re im exp_x exp_y` per line.
pub fn parse_complex_poly(text: &str) -> CliResult<ComplexCurveSpec> {
    let mut monomials = Vec::new();
    for (line, fields) in data_lines(text) {
        let [re, im, a, b] = fields[..] else {
            return Err(CliError::Parse(format!("line {line}: expected `re im exp_x exp_y`")));
        };
        let c = Complex64::new(number(re, line, "real part")?, number(im, line, "imaginary part")?);
        monomials.push(([number(a, line, "exponent")?, number(b, line, "exponent")?], c));
    }
    ComplexCurveSpec::new(monomials).map_err(|e| CliError::Parse(detail(&e)))
}

/// `lo:hi:step`.
pub fn parse_range(s: &str) -> CliResult<(f64, f64, f64)> {
    let parts: Vec<&str> = s.split(':').collect();
    let bad = || CliError::Parse(format!("expected `lo:hi:step`, got `{s}`"));
    let [lo, hi, step] = parts[..] else {
        return Err(bad());
    };
    Ok((
        lo.trim().parse().map_err(|_| bad())?,
        hi.trim().parse().map_err(|_| bad())?,
        step.trim().parse().map_err(|_| bad())?,
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Tsv,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Label(String),
    /// A formatted semiring element or number.
    Value(String),
}

impl Cell {
    fn text(&self) -> &str {
        match self {
            Cell::Label(s) | Cell::Value(s) => s,
        }
    }

    fn json(&self) -> Value {
        match self {
            Cell::Label(s) => Value::String(s.clone()),
            Cell::Value(s) => s
                .parse::<f64>()
                .ok()
                .and_then(serde_json::Number::from_f64)
                .map_or_else(|| Value::String(s.clone()), Value::Number),
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Output {
    Table {
        command: &'static str,
        meta: Vec<(String, String)>,
        columns: Vec<String>,
        rows: Vec<Vec<Cell>>,
    },
    Cloud {
        meta: Vec<(String, String)>,
        cloud: PointCloud,
    },
}

#[derive(Serialize)]
struct CloudJson<'a> {
    tag: &'a str,
    points: &'a [Vec<f64>],
}

fn tsv_meta(out: &mut String, meta: &[(String, String)]) {
    for (k, v) in meta {
        out.push_str(&format!("# {k}: {v}\n"));
    }
}

impl Output {
    pub fn render(&self, format: Format) -> String {
        match (self, format) {
            (Output::Table { meta, columns, rows, .. }, Format::Tsv) => {
                let mut out = String::new();
                tsv_meta(&mut out, meta);
                out.push_str(&columns.join("\t"));
                out.push('\n');
                for row in rows {
                    let cells: Vec<&str> = row.iter().map(Cell::text).collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
                out
            }
            (Output::Table { command, meta, columns, rows }, Format::Json) => {
                let mut obj = Map::new();
                obj.insert("command".into(), Value::String(command.to_string()));
                let meta: Map<String, Value> = meta.iter().map(|(k, v)| (k.clone(), Value::String(v.clone()))).collect();
                obj.insert("meta".into(), Value::Object(meta));
                obj.insert("columns".into(), columns.iter().cloned().map(Value::String).collect());
                obj.insert(
                    "rows".into(),
                    rows.iter().map(|r| r.iter().map(Cell::json).collect::<Value>()).collect(),
                );
                let mut s = serde_json::to_string_pretty(&Value::Object(obj)).expect("json values serialize");
                s.push('\n');
                s
            }
            (Output::Cloud { meta, cloud }, Format::Tsv) => {
                let mut out = String::new();
                tsv_meta(&mut out, meta);
                let dim = cloud.dim().unwrap_or(2);
                let names: Vec<String> = (1..=dim).map(|d| format!("x{d}")).collect();
                out.push_str(&names.join("\t"));
                out.push('\n');
                for p in &cloud.points {
                    let cells: Vec<String> = p.iter().map(f64::to_string).collect();
                    out.push_str(&cells.join("\t"));
                    out.push('\n');
                }
                out
            }
            (Output::Cloud { cloud, .. }, Format::Json) => {
                let mut s = serde_json::to_string_pretty(&CloudJson {
                    tag: &cloud.tag,
                    points: &cloud.points,
                })
                .expect("finite points serialize");
                s.push('\n');
                s
            }
        }
    }
}
