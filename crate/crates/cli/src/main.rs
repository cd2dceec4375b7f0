use std::fmt::Write as _;
use std::io::Write as _;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use equicohom::classes::units::{self, BASIS_NAMES};
use equicohom::classes::waner::{waner_total, LineBundle};
use equicohom::classes::euler::euler_omn;
use equicohom::grading::GradingBT2;
use equicohom::hcoeff::HCoeff;
use equicohom::laurent::Named;
use equicohom::maps::fixed::{eta, phi, ETA_NAMES, PHI_NAMES};
use equicohom::maps::pullback::{pullback, MapName, RingElem};
use equicohom::maps::push::{pushforward, DecomposedOverBu2};
use equicohom::maps::rho::{self, rho};
use equicohom::parse::{parse, parse_grading};
use equicohom::rewrite::{ConfluenceReport, Coefficient, GeneratorSet};
use equicohom::rings::basis::{basis_enumerate, Window};
use equicohom::rings::bt1::{self, Bt1Elem};
use equicohom::rings::bt2::{self, display_monomial, Bt2Elem};
use equicohom::rings::bu2::Bu2Elem;
use equicohom::verify;
use equicohom::Error;
use serde_json::{json, Value};

/// Exact computations in the C2-equivariant cohomology of BT^2.
#[derive(Parser, Debug)]
#[command(name = "equicohom", version)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Text)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Ring {
    Bt2,
    Bt1,
    Bu2,
    H,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Map {
    Rho,
    Phi,
    Eta,
    Sstar,
    Delta,
    Chi1,
    Gamma,
    T,
    Pi1,
    Pi2,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the normal form of an element.
    Normalize {
        #[arg(long, value_enum, default_value_t = Ring::Bt2)]
        ring: Ring,
        #[arg(long)]
        expr: String,
    },
    /// Multiply elements together.
    Multiply {
        #[arg(long, value_enum, default_value_t = Ring::Bt2)]
        ring: Ring,
        /// A factor; repeat for each factor.
        #[arg(long = "expr", required = true)]
        exprs: Vec<String>,
    },
    /// List basis monomials of a coset over a window of RO(C2) offsets.
    Basis {
        /// Coset representative, such as `W01+W10`.
        #[arg(long, default_value = "0")]
        coset: String,
        /// `a_min:a_max:b_min:b_max`.
        #[arg(long)]
        window: String,
    },
    /// Apply a map to an element.
    Map {
        #[arg(long, value_enum)]
        name: Map,
        #[arg(long)]
        expr: String,
    },
    /// Euler class of O(m,n), or of chi O(m,n) with --twisted.
    Euler {
        #[arg(long, allow_hyphen_values = true)]
        m: i64,
        #[arg(long, allow_hyphen_values = true)]
        n: i64,
        #[arg(long)]
        twisted: bool,
    },
    /// Total Waner class of a sum of line bundles.
    Waner {
        /// Comma-separated bundles: generator names such as `cw1`, or `O(m,n)`, `chiO(m,n)`.
        #[arg(long)]
        bundles: String,
    },
    /// The unit group of H^0(BT^2).
    Units,
    /// Pushforward along BT^2 -> BU(2) of `a0 + a1*z01*hw1 + a2*z10*hxw1 + a3*hw1*hxw1`.
    Push {
        /// Four comma-separated BU(2) coefficients `a0,a1,a2,a3`.
        #[arg(long)]
        coeffs: String,
    },
    /// Run the verification suite.
    Verify {
        /// Run a single criterion.
        #[arg(long)]
        criterion: Option<usize>,
        /// Print every overlap of the rewriting systems instead.
        #[arg(long)]
        confluence: bool,
    },
}

/// Command output: human-readable text and a JSON document.
struct Output {
    text: String,
    json: Value,
    csv: Option<String>,
}

enum Failure {
    Usage(String),
    Verification(Output),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Outcome = Result<Output, Failure>;

fn output(text: String, mut json: Value) -> Output {
    json["schema"] = json!(1);
    Output { text, json, csv: None }
}

fn grading_string<G: ToString>(g: Result<Option<G>, Error>) -> Value {
    match g {
        Ok(Some(g)) => json!(g.to_string()),
        _ => Value::Null,
    }
}

fn ring_elem(ring: Ring, s: &str) -> Result<RingElem, Error> {
    Ok(match ring {
        Ring::Bt2 => RingElem::Bt2(parse(s)?),
        Ring::Bt1 => RingElem::Bt1(parse(s)?),
        Ring::Bu2 => RingElem::Bu2(parse(s)?),
        Ring::H => return Err(Error::Domain("ring h has no ring elements".into())),
    })
}

fn describe(x: &RingElem) -> Value {
    match x {
        RingElem::Bt2(y) => json!({"ring": "bt2", "value": y.to_string(), "grading": grading_string(y.grading())}),
        RingElem::Bt1(y) => json!({"ring": "bt1", "value": y.to_string(), "grading": grading_string(y.grading())}),
        RingElem::Bu2(y) => json!({
            "ring": "bu2",
            "value": y.to_string(),
            "sstar": y.sstar().to_string(),
            "grading": grading_string(y.grading().map(|g| g.map(|g| g.embed()))),
        }),
    }
}

fn normalize(ring: Ring, expr: &str) -> Outcome {
    if ring == Ring::H {
        let c: HCoeff = parse(expr)?;
        return Ok(output(
            c.to_string(),
            json!({"ring": "h", "value": c.to_string(), "grading": grading_string(c.grading())}),
        ));
    }
    let x = ring_elem(ring, expr)?;
    let mut text = x.to_string();
    if let RingElem::Bu2(y) = &x {
        let _ = write!(text, "\ns* = {}", y.sstar());
    }
    Ok(output(text, describe(&x)))
}

fn multiply(ring: Ring, exprs: &[String]) -> Outcome {
    let product = match ring {
        Ring::H => {
            let mut acc = HCoeff::int(1);
            for e in exprs {
                acc = acc.mul(&parse(e)?)?;
            }
            return Ok(output(acc.to_string(), json!({"ring": "h", "value": acc.to_string()})));
        }
        Ring::Bt2 => {
            let mut acc = Bt2Elem::one();
            for e in exprs {
                acc = acc.mul(&parse(e)?)?;
            }
            RingElem::Bt2(acc)
        }
        Ring::Bt1 => {
            let mut acc = Bt1Elem::one();
            for e in exprs {
                acc = acc.mul(&parse(e)?)?;
            }
            RingElem::Bt1(acc)
        }
        Ring::Bu2 => {
            let mut acc = Bu2Elem::one();
            for e in exprs {
                acc = acc.mul(&parse(e)?)?;
            }
            RingElem::Bu2(acc)
        }
    };
    Ok(output(product.to_string(), describe(&product)))
}

fn parse_window(s: &str) -> Result<Window, Failure> {
    let parts: Vec<&str> = s.split(':').collect();
    let nums: Vec<i64> = parts.iter().filter_map(|p| p.trim().parse().ok()).collect();
    match nums[..] {
        [a0, a1, b0, b1] if parts.len() == 4 => Ok(Window::new(a0, a1, b0, b1)),
        _ => Err(Failure::Usage(format!(
            "invalid window `{s}` (expected a_min:a_max:b_min:b_max)"
        ))),
    }
}

fn basis(coset: &str, window: &str) -> Outcome {
    let coset: GradingBT2 = parse_grading(coset)?;
    let window = parse_window(window)?;
    let page = basis_enumerate(coset, window)?;
    let mut text = format!("coset {coset}\n");
    let mut csv = String::from("a,b,count\n");
    let mut cells = Vec::new();
    for c in &page.cells {
        let monos: Vec<String> = c.monomials.iter().map(display_monomial).collect();
        let _ = writeln!(text, "{}: {} [{}]", c.offset, monos.len(), monos.join(", "));
        let _ = writeln!(csv, "{},{},{}", c.offset.a, c.offset.b, monos.len());
        cells.push(json!({"a": c.offset.a, "b": c.offset.b, "count": monos.len(), "monomials": monos}));
    }
    let mut out = output(text.trim_end().to_string(), json!({"coset": coset.to_string(), "cells": cells}));
    out.csv = Some(csv);
    Ok(out)
}

fn map(name: Map, expr: &str) -> Outcome {
    let tuple_json = |t: Vec<String>| json!(t);
    match name {
        Map::Rho => {
            let r = rho(&parse(expr)?)?;
            let s = Named(&r, &rho::NAMES).to_string();
            Ok(output(s.clone(), json!({"map": "rho", "value": s})))
        }
        Map::Phi => {
            let t = phi(&parse(expr)?)?;
            let parts: Vec<String> = t.iter().map(|c| Named(c, &PHI_NAMES).to_string()).collect();
            Ok(output(format!("({})", parts.join(", ")), json!({"map": "phi", "value": tuple_json(parts)})))
        }
        Map::Eta => {
            let t = eta(&parse(expr)?)?;
            let parts: Vec<String> = t.iter().map(|c| Named(c, &ETA_NAMES).to_string()).collect();
            Ok(output(format!("({})", parts.join(", ")), json!({"map": "eta", "value": tuple_json(parts)})))
        }
        _ => {
            let (m, ring) = match name {
                Map::Sstar => (MapName::Sstar, Ring::Bu2),
                Map::Delta => (MapName::Delta, Ring::Bt2),
                Map::Chi1 => (MapName::Chi1, Ring::Bt2),
                Map::Gamma => (MapName::Gamma, Ring::Bt2),
                Map::T => (MapName::T, Ring::Bt2),
                Map::Pi1 => (MapName::Pi1, Ring::Bt1),
                _ => (MapName::Pi2, Ring::Bt1),
            };
            let y = pullback(m, &ring_elem(ring, expr)?)?;
            let mut j = describe(&y);
            j["map"] = json!(m.as_str());
            Ok(output(y.to_string(), j))
        }
    }
}

fn euler(m: i64, n: i64, twisted: bool) -> Outcome {
    let e = euler_omn(m, n, twisted)?;
    let bundle = format!("{}O({m},{n})", if twisted { "chi" } else { "" });
    Ok(output(
        format!("e({bundle}) = {e}"),
        json!({"bundle": bundle, "euler": e.to_string(), "grading": grading_string(e.grading())}),
    ))
}

fn parse_bundle(s: &str) -> Result<LineBundle, Failure> {
    let s = s.trim();
    let bad = || Failure::Usage(format!("invalid bundle `{s}` (expected a class generator, O(m,n) or chiO(m,n))"));
    let (twisted, rest) = match s.strip_prefix("chi") {
        Some(r) if r.starts_with("O(") => (true, r),
        _ => (false, s),
    };
    if let Some(inner) = rest.strip_prefix("O(").and_then(|r| r.strip_suffix(')')) {
        let (m, n) = inner.split_once(',').ok_or_else(bad)?;
        let (m, n) = (m.trim().parse().map_err(|_| bad())?, n.trim().parse().map_err(|_| bad())?);
        return Ok(LineBundle::omn(m, n, twisted)?);
    }
    let i = bt2::NAMES.iter().position(|n| *n == s).ok_or_else(bad)?;
    LineBundle::of_generator(i).map_err(|_| bad())
}

/// Splits on commas outside parentheses.
fn split_top(s: &str) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut depth = 0;
    for c in s.chars() {
        match c {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(String::new());
                continue;
            }
            _ => {}
        }
        let last = out.last_mut().expect("nonempty");
        last.push(c);
    }
    out
}

fn waner(bundles: &str) -> Outcome {
    let bs = split_top(bundles)
        .iter()
        .map(|b| parse_bundle(b))
        .collect::<Result<Vec<_>, _>>()?;
    let w = waner_total(&bs)?;
    let coeffs: Vec<String> = w.coeffs.iter().map(ToString::to_string).collect();
    let mut text = format!("W = {w}\n");
    for k in 0..=w.rank() {
        let _ = writeln!(text, "c_(w-{}) = {}", 2 * k, w.class(k).expect("in range"));
    }
    Ok(output(text.trim_end().to_string(), json!({"rank": w.rank(), "coefficients": coeffs})))
}

fn units_report() -> Outcome {
    let r = units::unit_check()?;
    let combo = |c: &units::Coords| {
        let mut s = String::new();
        for (&k, name) in c.iter().zip(BASIS_NAMES) {
            if k == 0 {
                continue;
            }
            let sign = match (s.is_empty(), k < 0) {
                (true, true) => "-",
                (true, false) => "",
                (false, true) => " - ",
                (false, false) => " + ",
            };
            let mag = k.unsigned_abs();
            let _ = match (mag, name) {
                (1, _) => write!(s, "{sign}{name}"),
                (_, "1") => write!(s, "{sign}{mag}"),
                _ => write!(s, "{sign}{mag}*{name}"),
            };
        }
        if s.is_empty() {
            "0".to_string()
        } else {
            s
        }
    };
    let list: Vec<String> = r.units.iter().map(combo).collect();
    let mut text = format!("basis: {}\n{} units:\n", BASIS_NAMES.join(", "), list.len());
    for u in &list {
        let _ = writeln!(text, "  {u}");
    }
    let squares: Vec<Value> = r.squares.iter().map(|(n, ok)| json!({"unit": n, "squares_to_one": ok})).collect();
    for (n, ok) in &r.squares {
        let _ = writeln!(text, "{n}^2 = 1: {ok}");
    }
    let json = json!({
        "basis": BASIS_NAMES,
        "units": r.units,
        "table_matches": r.table_matches,
        "squares": squares,
    });
    let out = output(text.trim_end().to_string(), json);
    if r.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn push(coeffs: &str) -> Outcome {
    let parts: Vec<&str> = coeffs.split(',').collect();
    if parts.len() != 4 {
        return Err(Failure::Usage(format!("--coeffs needs 4 comma-separated BU(2) elements, got {}", parts.len())));
    }
    let cs = parts.iter().map(|p| parse::<Bu2Elem>(p)).collect::<Result<Vec<_>, _>>()?;
    let x = DecomposedOverBu2 {
        coeffs: cs.try_into().expect("four coefficients"),
    };
    let expanded = x.expand()?;
    let p = pushforward(&x)?;
    Ok(output(
        format!("x = {expanded}\ns_!(x) = {p}\ns*(s_!(x)) = {}", p.sstar()),
        json!({"input": expanded.to_string(), "pushforward": p.to_string(), "sstar": p.sstar().to_string()}),
    ))
}

fn overlaps<C: Coefficient + std::fmt::Display>(
    label: &str,
    r: &ConfluenceReport<C>,
    gens: &GeneratorSet,
    text: &mut String,
) -> Value {
    let _ = writeln!(text, "{label}: {} overlaps, {} fail", r.overlaps.len(), r.failures().count());
    let mut rows = Vec::new();
    for o in &r.overlaps {
        let status = if o.joins() { "joins" } else { "FAILS" };
        let value = match &o.left_nf {
            Ok(p) => p.terms().count().to_string(),
            Err(e) => e.to_string(),
        };
        let m = gens.display_monomial(&o.lcm);
        let _ = writeln!(text, "  (R{},R{}) at {m}: {status}", o.left + 1, o.right + 1);
        rows.push(json!({"left": o.left + 1, "right": o.right + 1, "lcm": m, "joins": o.joins(), "terms": value}));
    }
    json!({"system": label, "overlaps": rows, "passed": r.passed()})
}

fn confluence() -> Outcome {
    let mut text = String::new();
    let r1 = bt1::build_system(false)?.check_confluence();
    let r2 = bt2::p_system().check_confluence();
    let j1 = overlaps("bt1", &r1, &bt1::generators(), &mut text);
    let j2 = overlaps("bt2", &r2, &bt2::p_generators(), &mut text);
    let out = output(text.trim_end().to_string(), json!({"systems": [j1, j2]}));
    if r1.passed() && r2.passed() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn verify_suite(criterion: Option<usize>) -> Outcome {
    let reports = match criterion {
        Some(id) => vec![verify::run(id)?],
        None => verify::run_all()?,
    };
    let mut text = String::new();
    let mut csv = String::from("id,title,result\n");
    let mut rows = Vec::new();
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        let _ = writeln!(text, "{:>2}  {status}  {}: {}", r.id, r.title, r.detail());
        let _ = writeln!(csv, "{},{},{status}", r.id, r.title);
        let parts: Vec<Value> = r
            .parts
            .iter()
            .map(|p| json!({"label": p.label, "passed": p.passed, "detail": p.detail}))
            .collect();
        rows.push(json!({"id": r.id, "title": r.title, "passed": r.passed(), "parts": parts}));
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    let _ = write!(text, "{passed} of {} criteria pass", reports.len());
    let mut out = output(text, json!({"criteria": rows, "passed": passed, "total": reports.len()}));
    out.csv = Some(csv);
    if passed == reports.len() {
        Ok(out)
    } else {
        Err(Failure::Verification(out))
    }
}

fn execute(cmd: &Command) -> Outcome {
    match cmd {
        Command::Normalize { ring, expr } => normalize(*ring, expr),
        Command::Multiply { ring, exprs } => multiply(*ring, exprs),
        Command::Basis { coset, window } => basis(coset, window),
        Command::Map { name, expr } => map(*name, expr),
        Command::Euler { m, n, twisted } => euler(*m, *n, *twisted),
        Command::Waner { bundles } => waner(bundles),
        Command::Units => units_report(),
        Command::Push { coeffs } => push(coeffs),
        Command::Verify { confluence: true, .. } => confluence(),
        Command::Verify { criterion, .. } => verify_suite(*criterion),
    }
}

fn render(out: &Output, format: Format) -> Result<String, String> {
    match format {
        Format::Text => Ok(format!("{}\n", out.text)),
        Format::Json => Ok(format!("{}\n", serde_json::to_string_pretty(&out.json).expect("serializable"))),
        Format::Csv => out
            .csv
            .clone()
            .ok_or_else(|| "csv output is only available for basis and verify".into()),
    }
}

fn configure_threads() -> Result<(), String> {
    let Ok(v) = std::env::var("EQUICOHOM_THREADS") else {
        return Ok(());
    };
    let n: usize = v
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| format!("EQUICOHOM_THREADS must be a positive integer, got `{v}`"))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| e.to_string())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Err(e) = configure_threads() {
        eprintln!("error: {e}");
        return ExitCode::from(2);
    }
    if cli.format == Format::Csv && !matches!(cli.command, Command::Basis { .. } | Command::Verify { confluence: false, .. }) {
        eprintln!("error: csv output is only available for basis and verify");
        return ExitCode::from(2);
    }
    let (out, code) = match execute(&cli.command) {
        Ok(out) => (out, 0),
        Err(Failure::Verification(out)) => (out, 1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(2);
        }
    };
    match render(&out, cli.format) {
        Ok(s) => {
            // A closed pipe, as in `| head`, is not an error.
            let _ = std::io::stdout().lock().write_all(s.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
