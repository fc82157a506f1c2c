//! JSON documents for varieties and charts.
//!
//! Coefficients are `"num/den"` strings so that values survive a text round
//! trip exactly. A variety file is
//! `{"vars": N+1, "gens": [[[coeff, exps], …], …], "label": …, "point": […]}`
//! where a single generator may also be given as a flat term list. A chart
//! file is `{"n": …, "c": …, "order": K, "jets": [[[coeff, exps], …], …]}`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use projdiff_core::jets::{chart_from_graph, Chart, VarietySpec};
use projdiff_core::poly::Poly;
use projdiff_core::scalar;
use projdiff_core::Scalar;

use crate::error::CliError;

pub type Term = (String, Vec<u32>);

#[derive(Deserialize)]
#[serde(untagged)]
enum Gens {
    Nested(Vec<Vec<Term>>),
    Flat(Vec<Term>),
}

#[derive(Deserialize)]
struct VarietyDoc {
    vars: usize,
    gens: Gens,
    #[serde(default)]
    label: Option<String>,
    #[serde(default)]
    point: Option<Vec<String>>,
}

#[derive(Deserialize)]
struct ChartDoc {
    n: usize,
    c: usize,
    #[serde(default = "default_order")]
    order: u32,
    jets: Vec<Vec<Term>>,
}

fn default_order() -> u32 {
    5
}

/// Parsed contents of an input file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum InputFile {
    Variety { spec: VarietySpec, point: Option<Vec<Scalar>> },
    Chart(Chart),
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> CliError {
    CliError::Parse {
        location: location.into(),
        message: message.into(),
    }
}

fn json_error(e: serde_json::Error) -> CliError {
    parse_error(format!("line {}, column {}", e.line(), e.column()), e.to_string())
}

pub fn parse_rational(text: &str, location: &str) -> Result<Scalar, CliError> {
    scalar::parse(text).ok_or_else(|| parse_error(location, format!("not a rational number: {:?}", text)))
}

/// Comma separated rationals.
pub fn parse_vector(text: &str) -> Result<Vec<Scalar>, CliError> {
    text.split(',')
        .enumerate()
        .map(|(i, part)| parse_rational(part, &format!("entry {}", i + 1)))
        .collect()
}

/// Two comma separated points joined by `;`.
pub fn parse_line(text: &str) -> Result<(Vec<Scalar>, Vec<Scalar>), CliError> {
    let (p, q) = text
        .split_once(';')
        .ok_or_else(|| parse_error("--line", "expected two points separated by ';'"))?;
    Ok((parse_vector(p)?, parse_vector(q)?))
}

/// Rows separated by `;`, entries by `,`.
pub fn parse_matrix(text: &str) -> Result<Vec<Vec<Scalar>>, CliError> {
    text.split(';').map(parse_vector).collect()
}

fn poly_from_terms(nvars: usize, terms: &[Term], location: &str) -> Result<Poly, CliError> {
    let mut parsed = Vec::with_capacity(terms.len());
    for (i, (c, e)) in terms.iter().enumerate() {
        let here = format!("{} term {}", location, i);
        if e.len() != nvars {
            return Err(parse_error(
                here,
                format!("exponent row has length {}, expected {}", e.len(), nvars),
            ));
        }
        parsed.push((parse_rational(c, &here)?, e.clone()));
    }
    Ok(Poly::from_terms(nvars, parsed)?)
}

fn poly_to_terms(p: &Poly) -> Vec<Term> {
    p.terms()
        .map(|(m, c)| (scalar::to_fraction_string(c), m.exponents().to_vec()))
        .collect()
}

pub fn parse_input(text: &str) -> Result<InputFile, CliError> {
    let value: serde_json::Value = serde_json::from_str(text).map_err(json_error)?;
    if value.get("jets").is_some() {
        let doc: ChartDoc = serde_json::from_str(text).map_err(json_error)?;
        if doc.jets.len() != doc.c {
            return Err(parse_error("jets", format!("{} jets given for c = {}", doc.jets.len(), doc.c)));
        }
        let jets = doc
            .jets
            .iter()
            .enumerate()
            .map(|(u, t)| poly_from_terms(doc.n, t, &format!("jets[{}]", u)))
            .collect::<Result<Vec<_>, _>>()?;
        return Ok(InputFile::Chart(chart_from_graph(doc.n, jets, doc.order)?));
    }
    let doc: VarietyDoc = serde_json::from_str(text).map_err(json_error)?;
    let gens = match doc.gens {
        Gens::Nested(g) => g,
        Gens::Flat(t) => vec![t],
    };
    let polys = gens
        .iter()
        .enumerate()
        .map(|(i, t)| poly_from_terms(doc.vars, t, &format!("gens[{}]", i)))
        .collect::<Result<Vec<_>, _>>()?;
    for (i, p) in polys.iter().enumerate() {
        if !p.is_homogeneous() {
            return Err(parse_error(format!("gens[{}]", i), "generator is not homogeneous"));
        }
    }
    let point = doc
        .point
        .map(|p| {
            p.iter()
                .enumerate()
                .map(|(i, s)| parse_rational(s, &format!("point[{}]", i)))
                .collect::<Result<Vec<_>, _>>()
        })
        .transpose()?;
    Ok(InputFile::Variety {
        spec: VarietySpec::new(doc.vars, polys, doc.label)?,
        point,
    })
}

pub fn read_input(path: &Path) -> Result<InputFile, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_input(&text).map_err(|e| e.in_file(path))
}

/// Compact JSON for each value, one top-level key and one polynomial per
/// line.
fn render(fields: &[(&str, String)]) -> String {
    let body: Vec<String> = fields.iter().map(|(k, v)| format!("  \"{}\": {}", k, v)).collect();
    format!("{{\n{}\n}}\n", body.join(",\n"))
}

fn render_polys(polys: &[Poly]) -> String {
    let rows: Vec<String> = polys
        .iter()
        .map(|p| format!("    {}", serde_json::to_string(&poly_to_terms(p)).expect("serializable")))
        .collect();
    if rows.is_empty() {
        "[]".into()
    } else {
        format!("[\n{}\n  ]", rows.join(",\n"))
    }
}

fn compact<T: Serialize>(value: &T) -> String {
    serde_json::to_string(value).expect("serializable")
}

pub fn variety_to_string(spec: &VarietySpec, point: Option<&[Scalar]>) -> String {
    let mut fields = vec![("vars", spec.nvars().to_string()), ("gens", render_polys(spec.generators()))];
    if let Some(label) = &spec.label {
        fields.push(("label", compact(label)));
    }
    if let Some(p) = point {
        let p: Vec<String> = p.iter().map(scalar::to_fraction_string).collect();
        fields.push(("point", compact(&p)));
    }
    render(&fields)
}

pub fn chart_to_string(chart: &Chart) -> String {
    render(&[
        ("n", chart.n().to_string()),
        ("c", chart.c().to_string()),
        ("order", chart.order().to_string()),
        ("jets", render_polys(chart.jets())),
    ])
}

pub fn input_to_string(input: &InputFile) -> String {
    match input {
        InputFile::Variety { spec, point } => variety_to_string(spec, point.as_deref()),
        InputFile::Chart(chart) => chart_to_string(chart),
    }
}
