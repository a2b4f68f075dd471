//! Scenario model and command implementations behind the `vstab` binary.
//!
//! Every invocation, whether from the command line or a batch file, becomes a
//! [`Scenario`]; [`run`] turns it into a JSON report and an exit code. JSON
//! objects are `serde_json` maps, whose keys are kept sorted, so output is
//! byte-identical across runs.

use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use vstab_core::{
    classify, component_feasible, dynkin_polynomial, grading_profile, table1, table1_closed_form,
    virtual_multiplicity, weyl_dimension, wobbly_witness, CartanType, Coweight, Error,
    FactoredProduct, IntPoly, MultiplicityDivisor, Polynomiality, RootSystem,
};

/// Exit code for a successful run that found a wobbly point.
pub const EXIT_WOBBLY: i32 = 3;
/// Exit code for malformed input or a failed computation.
pub const EXIT_ERROR: i32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Command {
    Classify,
    Mult,
    Dynkin,
    Witness,
    Minuscule,
    Table1,
    Feasible,
}

/// Basis in which input coweights are written. Output is always in the
/// fundamental-coweight basis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Basis {
    #[default]
    Coweight,
    Coroot,
}

impl std::str::FromStr for Basis {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "coweight" => Ok(Basis::Coweight),
            "coroot" => Ok(Basis::Coroot),
            _ => Err(Error::Parse(format!("unknown basis `{s}`"))),
        }
    }
}

fn default_genus() -> Vec<i64> {
    vec![2]
}

fn is_default_genus(g: &[i64]) -> bool {
    g == [2]
}

fn is_default_basis(b: &Basis) -> bool {
    *b == Basis::Coweight
}

/// One unit of work. A batch file holds one of these per line as a JSON
/// object, e.g. `{"type":"G2","command":"classify","divisor":"c1:1,0"}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Scenario {
    #[serde(rename = "type")]
    pub type_name: String,
    pub command: Command,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub divisor: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub coweight: Option<String>,
    #[serde(default = "default_genus", skip_serializing_if = "is_default_genus")]
    pub genus: Vec<i64>,
    #[serde(default, skip_serializing_if = "is_default_basis")]
    pub basis: Basis,
}

impl Scenario {
    pub fn new(type_name: impl Into<String>, command: Command) -> Self {
        Scenario {
            type_name: type_name.into(),
            command,
            divisor: None,
            coweight: None,
            genus: default_genus(),
            basis: Basis::Coweight,
        }
    }

    pub fn parse_line(line: &str) -> Result<Self, Error> {
        serde_json::from_str(line).map_err(|e| Error::Parse(e.to_string()))
    }

    pub fn to_line(&self) -> String {
        serde_json::to_string(self).expect("scenario serializes")
    }

    /// Canonical spelling: the type and payloads are reparsed and rendered
    /// back, coroot-basis input is converted, and the genus list is sorted
    /// and deduplicated. Fails on malformed input.
    pub fn normalized(&self) -> Result<Self, Error> {
        let rs = self.root_system()?;
        let mut out = self.clone();
        out.type_name = rs.cartan_type().to_string();
        out.coweight = match &self.coweight {
            Some(_) => Some(self.coweight_arg(&rs)?.to_string()),
            None => None,
        };
        out.divisor = match &self.divisor {
            Some(_) => Some(self.divisor_arg(&rs)?.to_string()),
            None => None,
        };
        out.basis = Basis::Coweight;
        out.genus.sort_unstable();
        out.genus.dedup();
        Ok(out)
    }

    fn root_system(&self) -> Result<RootSystem, Error> {
        let ty: CartanType = self.type_name.parse()?;
        RootSystem::build(&ty)
    }

    fn to_coweight_basis(&self, rs: &RootSystem, mu: Coweight) -> Result<Coweight, Error> {
        match self.basis {
            Basis::Coweight => Ok(mu),
            Basis::Coroot => rs.from_coroot_basis(mu.coords()),
        }
    }

    fn coweight_arg(&self, rs: &RootSystem) -> Result<Coweight, Error> {
        let raw = self
            .coweight
            .as_deref()
            .ok_or_else(|| Error::Parse(format!("{:?} needs a coweight", self.command)))?;
        let mu: Coweight = raw.parse()?;
        if mu.rank() != rs.rank() {
            return Err(Error::RankMismatch {
                expected: rs.rank(),
                got: mu.rank(),
            });
        }
        let mu = self.to_coweight_basis(rs, mu)?;
        if !mu.is_dominant() {
            return Err(Error::NotDominant(mu.to_string()));
        }
        Ok(mu)
    }

    fn divisor_arg(&self, rs: &RootSystem) -> Result<MultiplicityDivisor, Error> {
        let raw: MultiplicityDivisor = self.divisor.as_deref().unwrap_or("").parse()?;
        let mut div = MultiplicityDivisor::new();
        for (point, mu) in raw.entries() {
            if mu.rank() != rs.rank() {
                return Err(Error::RankMismatch {
                    expected: rs.rank(),
                    got: mu.rank(),
                });
            }
            div.insert(point.clone(), self.to_coweight_basis(rs, mu.clone())?)?;
        }
        Ok(div)
    }
}

/// Result of a scenario: the JSON payload and the process exit code it maps to.
#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub value: Value,
    pub exit_code: i32,
}

impl Report {
    fn ok(value: Value) -> Self {
        Report {
            value,
            exit_code: 0,
        }
    }
}

pub fn run(s: &Scenario) -> Result<Report, Error> {
    let rs = s.root_system()?;
    match s.command {
        Command::Classify => cmd_classify(&rs, &s.divisor_arg(&rs)?),
        Command::Mult => cmd_mult(&rs, &s.coweight_arg(&rs)?, &s.genus),
        Command::Dynkin => cmd_dynkin(&rs, &s.coweight_arg(&rs)?),
        Command::Witness => cmd_witness(&rs, &s.coweight_arg(&rs)?),
        Command::Minuscule => match s.coweight {
            Some(_) => cmd_minuscule(&rs, Some(&s.coweight_arg(&rs)?)),
            None => cmd_minuscule(&rs, None),
        },
        Command::Table1 => cmd_table1(&rs),
        Command::Feasible => cmd_feasible(&rs, &s.coweight_arg(&rs)?),
    }
}

/// 1-based simple-root index, as written in the numbering tables.
fn label(i: usize) -> usize {
    i + 1
}

fn coeffs_json(p: &IntPoly) -> Value {
    Value::Array(
        p.coeffs()
            .iter()
            .map(|c| match i64::try_from(c) {
                Ok(v) => json!(v),
                Err(_) => json!(c.to_string()),
            })
            .collect(),
    )
}

fn polynomial_json(p: &Polynomiality) -> Value {
    match p {
        Polynomiality::Polynomial(q) => coeffs_json(q),
        Polynomiality::NotPolynomial { .. } => json!("not_polynomial"),
    }
}

pub fn cmd_classify(rs: &RootSystem, div: &MultiplicityDivisor) -> Result<Report, Error> {
    let v = classify(rs, div)?;
    let witnesses: Vec<Value> = v
        .witnesses
        .iter()
        .map(|w| {
            json!({
                "point": w.point,
                "alpha_coroot_coords": w.coroot.coords(),
                "root_coords": w.root.simple_coords(),
            })
        })
        .collect();
    Ok(Report {
        value: json!({
            "type": rs.cartan_type().to_string(),
            "very_stable": v.very_stable,
            "witnesses": witnesses,
        }),
        exit_code: if v.very_stable { 0 } else { EXIT_WOBBLY },
    })
}

/// Multiplicity at every requested genus. The factored form and expansion are
/// reported for the first genus; `genus_independent` records whether the
/// others agree.
pub fn cmd_mult(rs: &RootSystem, mu: &Coweight, genus_list: &[i64]) -> Result<Report, Error> {
    if genus_list.is_empty() {
        return Err(Error::Parse("empty genus list".into()));
    }
    let gp = grading_profile(rs);
    let ms = genus_list
        .iter()
        .map(|&g| virtual_multiplicity(rs, &gp, mu, g))
        .collect::<Result<Vec<FactoredProduct>, Error>>()?;
    let m = &ms[0];
    let polynomial = m.to_polynomial();
    let dynkin = dynkin_polynomial(rs, mu)?;

    // only fundamental coweights of simple types have a table entry
    let fundamental = (0..rs.rank()).find(|&i| *mu == rs.fundamental_coweight(i));
    let expected = fundamental.and_then(|i| table1_closed_form(rs, i));
    let matches_table1 = expected
        .as_ref()
        .map(|e| ms.iter().all(|m| m.to_polynomial().polynomial() == Some(e)));

    Ok(Report::ok(json!({
        "type": rs.cartan_type().to_string(),
        "coweight": mu.to_string(),
        "genus_list": genus_list,
        "factored": m.to_string(),
        "polynomial_coeffs": polynomial_json(&polynomial),
        "genus_independent": ms.iter().all(|x| x == m),
        "matches_table1": matches_table1,
        "matches_dynkin": m.rational_eq(&dynkin),
    })))
}

pub fn cmd_dynkin(rs: &RootSystem, mu: &Coweight) -> Result<Report, Error> {
    let d = dynkin_polynomial(rs, mu)?;
    Ok(Report::ok(json!({
        "type": rs.cartan_type().to_string(),
        "coweight": mu.to_string(),
        "factored": d.to_string(),
        "polynomial_coeffs": polynomial_json(&d.to_polynomial()),
        "weyl_dimension": weyl_dimension(rs, mu)?.to_string(),
    })))
}

pub fn cmd_witness(rs: &RootSystem, mu: &Coweight) -> Result<Report, Error> {
    let mut value = json!({
        "type": rs.cartan_type().to_string(),
        "coweight": mu.to_string(),
        "minuscule": rs.is_minuscule(mu)?,
        "witness": null,
    });
    match wobbly_witness(rs, mu) {
        Ok((root, coroot)) => {
            value["witness"] = json!({
                "alpha_coroot_coords": coroot.coords(),
                "root_coords": root.simple_coords(),
                "shifted": (mu - &coroot).to_string(),
            });
        }
        Err(Error::Minuscule(_)) => {}
        Err(e) => return Err(e),
    }
    Ok(Report::ok(value))
}

pub fn cmd_minuscule(rs: &RootSystem, mu: Option<&Coweight>) -> Result<Report, Error> {
    let indices: Vec<usize> = rs.minuscule_fundamentals().into_iter().map(label).collect();
    let mut value = json!({
        "type": rs.cartan_type().to_string(),
        "minuscule_fundamentals": indices,
    });
    if let Some(mu) = mu {
        value["coweight"] = json!(mu.to_string());
        value["minuscule"] = json!(rs.is_minuscule(mu)?);
    }
    Ok(Report::ok(value))
}

pub fn cmd_table1(rs: &RootSystem) -> Result<Report, Error> {
    let rows = table1(rs, &grading_profile(rs))?;
    let rows: Vec<Value> = rows
        .iter()
        .map(|r| {
            json!({
                "index": label(r.index),
                "coweight": r.coweight.to_string(),
                "genus_list": r.genus_list,
                "factored": r.factored.to_string(),
                "polynomial_coeffs": polynomial_json(&r.polynomial),
                "expected_coeffs": coeffs_json(&r.expected),
                "matches_table1": r.matches_table1,
                "matches_dynkin": r.matches_dynkin,
            })
        })
        .collect();
    Ok(Report::ok(json!({
        "type": rs.cartan_type().to_string(),
        "rows": rows,
    })))
}

pub fn cmd_feasible(rs: &RootSystem, nu: &Coweight) -> Result<Report, Error> {
    let parts = component_feasible(rs, nu)?;
    let decomposition = parts.as_ref().map(|p| {
        p.iter()
            .map(|&(i, n)| json!({ "index": label(i), "multiplicity": n }))
            .collect::<Vec<_>>()
    });
    Ok(Report::ok(json!({
        "type": rs.cartan_type().to_string(),
        "coweight": nu.to_string(),
        "feasible": parts.is_some(),
        "decomposition": decomposition,
    })))
}

/// Outcome of one batch line.
#[derive(Debug, Clone, PartialEq)]
pub enum BatchItem {
    Ran(Report),
    Failed(String),
}

impl BatchItem {
    pub fn to_json(&self, line: usize) -> Value {
        match self {
            BatchItem::Ran(r) => {
                json!({ "line": line, "exit_code": r.exit_code, "result": r.value })
            }
            BatchItem::Failed(e) => json!({ "line": line, "exit_code": EXIT_ERROR, "error": e }),
        }
    }
}

/// Runs every non-blank line of a scenario file. Lines run concurrently; the
/// results come back in input order, paired with 1-based line numbers.
pub fn run_batch(text: &str) -> Vec<(usize, BatchItem)> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| (i + 1, l))
        .collect();
    lines
        .par_iter()
        .map(|&(n, l)| {
            let item = match Scenario::parse_line(l).and_then(|s| run(&s)) {
                Ok(r) => BatchItem::Ran(r),
                Err(e) => BatchItem::Failed(e.to_string()),
            };
            (n, item)
        })
        .collect()
}

/// Plain-text rendering of a report for terminals.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = a.iter().map(scalar).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}

fn render_into(out: &mut String, v: &Value, indent: usize) {
    let pad = " ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match x {
                    Value::Object(_) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_into(out, x, indent + 2);
                    }
                    Value::Array(a) if a.iter().any(Value::is_object) => {
                        let _ = writeln!(out, "{pad}{k}:");
                        for item in a {
                            let _ = writeln!(out, "{pad}  -");
                            render_into(out, item, indent + 4);
                        }
                    }
                    _ => {
                        let _ = writeln!(out, "{pad}{k}: {}", scalar(x));
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar(other));
        }
    }
}
