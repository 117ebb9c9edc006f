//! Batch front end: parse a building-set or graph document, dispatch one
//! computation, and emit deterministic JSON (or a readable text view).
//!
//! Exit codes: 0 ok, 1 input error, 2 guard or resource limit,
//! 3 internal cross-check failure.

mod input;

use std::io::Read;
use std::process::ExitCode;

use bshopf_core::building::BuildingSet;
use bshopf_core::cdindex::{andre_phi, cd_index, CdPolynomial, CdWord};
use bshopf_core::chromatic::{chromatic_polynomial, psi_monomial, psi_powersum_subsets};
use bshopf_core::error::Error;
use bshopf_core::eulerian::{
    bayer_billera_check, dehn_sommerville_check, is_eulerian, is_eulerian_geometric,
    multinomial_identity_check, zeta_inverse,
};
use bshopf_core::graphs::{beta_n, tutte};
use bshopf_core::subset::elements;
use clap::{Parser, ValueEnum};
use serde_json::{json, Map, Value};

use input::Input;

#[derive(Debug)]
pub struct CliError {
    code: u8,
    message: String,
}

impl CliError {
    fn input(message: &str) -> Self {
        CliError { code: 1, message: message.to_string() }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::InvalidInput(_) => 1,
            Error::GuardExceeded { .. } | Error::Overflow(_) => 2,
            Error::InternalCheck(_) => 3,
        };
        CliError { code, message: e.to_string() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum CommandName {
    Closure,
    Chi,
    Csf,
    Zetainv,
    Eulerian,
    Cdindex,
    Tutte,
    Beta,
    Selftest,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Basis {
    Monomial,
    Powersum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

/// Building-set invariants: closures, chromatic symmetric functions and
/// polynomials, inverse-character values, eulerian detection, cd-indices,
/// Tutte evaluations and edge inflations.
#[derive(Parser, Debug)]
#[command(name = "bshopf", version)]
struct Cli {
    /// What to compute
    #[arg(value_enum)]
    command: CommandName,

    /// Basis for csf output
    #[arg(long, value_enum, default_value = "monomial")]
    basis: Basis,

    /// Inflation amount for beta (2 reproduces the graphical building set)
    #[arg(long, default_value_t = 2)]
    n: usize,

    /// Evaluate chi on this inclusive integer range, e.g. -1..5
    #[arg(long, value_name = "A..B", allow_hyphen_values = true)]
    m_range: Option<String>,

    /// Output format
    #[arg(long, value_enum, default_value = "json")]
    format: Format,

    /// Input file; - reads standard input (selftest takes no input)
    input: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            let mut out = match cli.format {
                Format::Json => serde_json::to_string_pretty(&value).unwrap(),
                Format::Text => {
                    let mut buf = String::new();
                    render_text(&value, 0, &mut buf);
                    buf
                }
            };
            if !out.ends_with('\n') {
                out.push('\n');
            }
            match std::io::Write::write_all(&mut std::io::stdout(), out.as_bytes()) {
                Ok(()) => ExitCode::SUCCESS,
                // a closed pipe (e.g. piping into head) is not an error
                Err(e) if e.kind() == std::io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("bshopf: cannot write output: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Err(e) => {
            eprintln!("bshopf: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}

fn read_input(cli: &Cli) -> Result<Input, CliError> {
    let path = cli
        .input
        .as_deref()
        .ok_or_else(|| CliError::input("this command needs an input file (or - for stdin)"))?;
    let text = if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CliError::input(&format!("cannot read standard input: {e}")))?;
        buf
    } else {
        std::fs::read_to_string(path)
            .map_err(|e| CliError::input(&format!("cannot read {path}: {e}")))?
    };
    input::parse_document(&text)
}

fn run(cli: &Cli) -> Result<Value, CliError> {
    match cli.command {
        CommandName::Selftest => return selftest(),
        CommandName::Closure => {
            let b = read_input(cli)?.into_building_set()?;
            return Ok(building_set_document("closure", &b));
        }
        _ => {}
    }
    match cli.command {
        CommandName::Chi => {
            let b = read_input(cli)?.into_building_set()?;
            let chi = chromatic_polynomial(&b)?;
            let mut doc = Map::new();
            doc.insert("command".into(), json!("chi"));
            doc.insert("rank".into(), json!(b.rank()));
            doc.insert("coefficients".into(), json!(chi.coeffs()));
            doc.insert("display".into(), json!(chi.to_string()));
            if let Some(range) = &cli.m_range {
                let (lo, hi) = parse_range(range)?;
                let evals: Vec<Value> = (lo..=hi)
                    .map(|m| Ok(json!({"m": m, "value": chi.eval(m)?})))
                    .collect::<Result<_, Error>>()?;
                doc.insert("evaluations".into(), Value::Array(evals));
            }
            Ok(Value::Object(doc))
        }
        CommandName::Csf => {
            let b = read_input(cli)?.into_building_set()?;
            let terms: Vec<Value> = match cli.basis {
                Basis::Monomial => psi_monomial(&b)?
                    .terms()
                    .map(|(alpha, c)| json!({"composition": alpha.parts(), "coefficient": c}))
                    .collect(),
                Basis::Powersum => psi_powersum_subsets(&b)?
                    .terms()
                    .map(|(lambda, c)| json!({"partition": lambda.parts(), "coefficient": c}))
                    .collect(),
            };
            let basis = match cli.basis {
                Basis::Monomial => "monomial",
                Basis::Powersum => "powersum",
            };
            Ok(json!({
                "command": "csf",
                "rank": b.rank(),
                "basis": basis,
                "terms": terms,
            }))
        }
        CommandName::Zetainv => {
            let b = read_input(cli)?.into_building_set()?;
            let report = zeta_inverse(&b)?;
            Ok(json!({
                "command": "zetainv",
                "rank": report.rank,
                "zeta_inverse": report.zeta_inv,
                "routes": {
                    "polynomial": report.route_polynomial,
                    "subsets": report.route_subsets,
                    "antipode": report.route_antipode,
                },
                "conjugate": report.conjugate,
            }))
        }
        CommandName::Eulerian => {
            let b = read_input(cli)?.into_building_set()?;
            eulerian_report(&b)
        }
        CommandName::Cdindex => {
            let b = read_input(cli)?.into_building_set()?;
            let cd = cd_index(&b)?;
            let mut words = Map::new();
            for (w, c) in cd.terms() {
                words.insert(w.to_string(), json!(c));
            }
            Ok(json!({
                "command": "cdindex",
                "rank": b.rank(),
                "cd_index": Value::Object(words),
                "display": cd.to_string(),
            }))
        }
        CommandName::Tutte => {
            let (g, _) = read_input(cli)?.into_graph()?;
            let t = tutte(&g)?;
            let terms: Vec<Value> = t
                .terms()
                .map(|((i, j), c)| json!({"x": i, "y": j, "coefficient": c}))
                .collect();
            Ok(json!({
                "command": "tutte",
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "terms": terms,
            }))
        }
        CommandName::Beta => {
            let (g, labels) = read_input(cli)?.into_graph()?;
            if cli.n < 2 {
                return Err(CliError::input("--n must be at least 2"));
            }
            let b = beta_n(&g, cli.n)?;
            let b = b.with_labels(beta_labels(&g, cli.n, &labels))?;
            let mut doc = building_set_document("beta", &b);
            doc.as_object_mut()
                .unwrap()
                .insert("n".into(), json!(cli.n));
            Ok(doc)
        }
        CommandName::Closure | CommandName::Selftest => unreachable!("handled above"),
    }
}

/// Distinct labels for the inflation's fresh elements: vertex names first,
/// then per-edge names "u-v:i", uniquified if they collide.
fn beta_labels(g: &bshopf_core::graphs::SimpleGraph, n: usize, vertex_labels: &[String]) -> Vec<String> {
    let mut labels: Vec<String> = vertex_labels.to_vec();
    let mut taken: std::collections::BTreeSet<String> = labels.iter().cloned().collect();
    for &(a, b) in g.edges() {
        for i in 0..n - 2 {
            let mut candidate = format!("{}-{}:{}", vertex_labels[a], vertex_labels[b], i);
            while !taken.insert(candidate.clone()) {
                candidate.push('\'');
            }
            labels.push(candidate);
        }
    }
    labels
}

fn names_of(b: &BuildingSet) -> Vec<String> {
    match b.labels() {
        Some(labels) => labels.to_vec(),
        None => (0..b.rank()).map(|i| i.to_string()).collect(),
    }
}

fn mask_names(mask: u64, names: &[String]) -> Vec<String> {
    elements(mask).map(|i| names[i].clone()).collect()
}

/// Emits a building set as a re-parsable document: the ground set with the
/// generating collection, plus the full member list.
fn building_set_document(command: &str, b: &BuildingSet) -> Value {
    let names = names_of(b);
    let (c, c_min) = b.minimal_generators();
    let generators: Vec<Value> = c.sets().iter().map(|&s| json!(mask_names(s, &names))).collect();
    let minimal: Vec<Value> = c_min.sets().iter().map(|&s| json!(mask_names(s, &names))).collect();
    let members: Vec<Value> = b.members().iter().map(|&m| json!(mask_names(m, &names))).collect();
    json!({
        "command": command,
        "ground_set": names,
        "rank": b.rank(),
        "generators": generators,
        "minimal_generators": minimal,
        "members": members,
        "member_count": b.members().len(),
        "connected": b.is_connected(),
        "discrete": b.is_discrete(),
    })
}

fn eulerian_report(b: &BuildingSet) -> Result<Value, CliError> {
    let algebraic = if b.rank() <= 14 { Some(is_eulerian(b)?) } else { None };
    let parity = if b.rank() <= 14 {
        Some(dehn_sommerville_check(b)?)
    } else {
        None
    };
    let geometric = {
        let (_, c_min) = b.minimal_generators();
        if c_min.len() <= 20 {
            Some(is_eulerian_geometric(b)?)
        } else {
            None
        }
    };
    let verdict = algebraic
        .or(geometric)
        .ok_or(Error::GuardExceeded { what: "eulerian detection", limit: 14, got: b.rank() })?;
    let violated = if b.rank() <= 10 {
        Some(
            bayer_billera_check(b)?
                .iter()
                .map(|v| json!({"alpha": v.alpha.parts(), "position": v.position, "value": v.value}))
                .collect::<Vec<Value>>(),
        )
    } else {
        None
    };
    Ok(json!({
        "command": "eulerian",
        "rank": b.rank(),
        "eulerian": verdict,
        "detectors": {
            "algebraic": algebraic,
            "dehn_sommerville": parity,
            "geometric": geometric,
        },
        "violated_bayer_billera": violated,
    }))
}

/// Identity and fixture checks; any failure exits with the
/// internal-check code.
fn selftest() -> Result<Value, CliError> {
    for n in 1..=10 {
        if !multinomial_identity_check(n)? {
            return Err(Error::InternalCheck(format!(
                "multinomial identity fails at rank {n}"
            ))
            .into());
        }
    }
    let fixtures: [&[(&str, i64)]; 4] = [
        &[("c", 1)],
        &[("cc", 1), ("d", 1)],
        &[("ccc", 1), ("cd", 2), ("dc", 2)],
        &[("cccc", 1), ("ccd", 3), ("dcc", 3), ("cdc", 5), ("dd", 4)],
    ];
    for (i, terms) in fixtures.iter().enumerate() {
        let n = i + 2;
        let expected = CdPolynomial::parse(terms).map_err(CliError::from)?;
        if andre_phi(n)? != expected {
            return Err(Error::InternalCheck(format!("cd fixture fails at rank {n}")).into());
        }
        if cd_index(&BuildingSet::discrete(n))? != expected {
            return Err(Error::InternalCheck(format!(
                "discrete cd-index fails at rank {n}"
            ))
            .into());
        }
    }
    for n in 1..=10 {
        let phi = andre_phi(n)?;
        let c_power = CdWord::parse(&"c".repeat(n - 1)).map_err(CliError::from)?;
        if phi.coefficient(&c_power) != 1 {
            return Err(Error::InternalCheck(format!(
                "leading c-power coefficient fails at rank {n}"
            ))
            .into());
        }
    }
    Ok(json!({
        "command": "selftest",
        "multinomial_identity": "ok for ranks 1..=10",
        "cd_fixtures": "ok for ranks 2..=5",
        "leading_c_power": "ok for ranks 1..=10",
        "status": "pass",
    }))
}

/// Plain indented rendering of the JSON document.
fn render_text(value: &Value, indent: usize, out: &mut String) {
    use std::fmt::Write;
    let pad = "  ".repeat(indent);
    match value {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::Object(_) | Value::Array(_) => {
                        writeln!(out, "{pad}{k}:").unwrap();
                        render_text(v, indent + 1, out);
                    }
                    _ => writeln!(out, "{pad}{k}: {}", scalar(v)).unwrap(),
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match item {
                    Value::Object(map) => {
                        let row: Vec<String> =
                            map.iter().map(|(k, v)| format!("{k}={}", scalar(v))).collect();
                        writeln!(out, "{pad}- {}", row.join(" ")).unwrap();
                    }
                    Value::Array(_) => {
                        writeln!(out, "{pad}- {}", serde_json::to_string(item).unwrap()).unwrap()
                    }
                    _ => writeln!(out, "{pad}- {}", scalar(item)).unwrap(),
                }
            }
        }
        _ => writeln!(out, "{pad}{}", scalar(value)).unwrap(),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "null".into(),
        other => other.to_string(),
    }
}

fn parse_range(range: &str) -> Result<(i64, i64), CliError> {
    let parts: Vec<&str> = range.split("..").collect();
    if parts.len() != 2 {
        return Err(CliError::input("--m-range must look like A..B"));
    }
    let lo: i64 = parts[0]
        .parse()
        .map_err(|_| CliError::input("--m-range bounds must be integers"))?;
    let hi: i64 = parts[1]
        .parse()
        .map_err(|_| CliError::input("--m-range bounds must be integers"))?;
    if lo > hi {
        return Err(CliError::input("--m-range lower bound exceeds upper bound"));
    }
    if hi - lo > 1000 {
        return Err(CliError {
            code: 2,
            message: "guard exceeded for m-range length: limit 1000".into(),
        });
    }
    Ok((lo, hi))
}
