mod record;

use std::collections::HashMap;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ellgenus_core::genus::{a_hat_genus_series, genus_polynomial, l_genus_series, universal_genus, GenusPolynomial};
use ellgenus_core::modular::{delta1, delta2, delta_bar, discriminant, e4, eps1, eps2, format_q};
use ellgenus_core::series::{to_wire, SeriesWire};
use ellgenus_core::string24::{classify, ClassificationReport, ClassifyInput, ConsistencyCheck, ReportStatus};
use ellgenus_core::twist::{ell1, ell2};
use ellgenus_core::verify::{self, Level};
use ellgenus_core::{DeltaEpsPoly, ExactRational, PontryaginVector, QSeries};

use record::{parse_records, ManifoldRecord};

const EXIT_USAGE: u8 = 1;
const EXIT_INCONSISTENT: u8 = 2;

#[derive(Parser)]
#[command(name = "ellgenus", version, about = "Exact elliptic genera, q-expansions and 24-dimensional string cobordism")]
struct Cli {
    /// Truncation order: keep powers of q below q^N.
    #[arg(long, global = true, value_name = "N")]
    order: Option<usize>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Manifold record file (a JSON object or array of objects).
    #[arg(long, global = true, value_name = "FILE")]
    input: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the q-expansion of a modular object.
    Qexpand {
        #[arg(value_enum)]
        name: QObject,
        /// Same as --order.
        #[arg(value_name = "ORDER")]
        positional_order: Option<usize>,
    },
    /// Evaluate a genus on the Pontryagin numbers of each record.
    Genus {
        #[arg(long, value_enum, default_value = "elliptic")]
        flavor: Flavor,
    },
    /// Classify 24-dimensional records; prints a JSON report.
    Classify,
    /// Run the identity-checking suite.
    Verify {
        #[arg(value_enum, default_value = "fast")]
        level: VerifyLevel,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum QObject {
    #[value(name = "delta1")]
    Delta1,
    #[value(name = "eps1")]
    Eps1,
    #[value(name = "delta2")]
    Delta2,
    #[value(name = "eps2")]
    Eps2,
    #[value(name = "E4")]
    E4,
    #[value(name = "Delta")]
    Delta,
    #[value(name = "DeltaBar")]
    DeltaBar,
}

#[derive(Clone, Copy, ValueEnum)]
enum Flavor {
    Elliptic,
    Signature,
    Ahat,
    Ell1,
    Ell2,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyLevel {
    Fast,
    Full,
}

/// Series with half-integral q-powers stop below q^{N−1/2}; all others
/// below q^N. The value is the order in q^{1/2}.
fn nu_order(q_order: usize, half_integral: bool) -> usize {
    if half_integral {
        (2 * q_order).saturating_sub(1).max(1)
    } else {
        2 * q_order
    }
}

fn series_json(s: &QSeries) -> Value {
    json!({
        "exponent_unit": "q^(1/2)",
        "order": s.order(),
        "terms": SeriesWire(s),
        "text": format_q(s),
    })
}

fn cmd_qexpand(name: QObject, order: usize, as_json: bool) -> Result<u8> {
    let (label, half, f): (&str, bool, fn(usize) -> QSeries) = match name {
        QObject::Delta1 => ("delta1", false, delta1),
        QObject::Eps1 => ("eps1", false, eps1),
        QObject::Delta2 => ("delta2", true, delta2),
        QObject::Eps2 => ("eps2", true, eps2),
        QObject::E4 => ("E4", false, e4),
        QObject::Delta => ("Delta", false, discriminant),
        QObject::DeltaBar => ("DeltaBar", false, delta_bar),
    };
    let s = f(nu_order(order, half));
    if as_json {
        let mut v = series_json(&s);
        v["name"] = json!(label);
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else {
        println!("{}", format_q(&s));
    }
    Ok(0)
}

fn read_records(input: Option<&PathBuf>) -> Result<(Vec<ManifoldRecord>, bool)> {
    let path = input.ok_or_else(|| anyhow!("--input FILE is required"))?;
    let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let batch = text.trim_start().starts_with('[');
    Ok((parse_records(&text)?, batch))
}

enum GenusValue {
    Poly(DeltaEpsPoly),
    Scalar(ExactRational),
    Series(QSeries),
}

impl GenusValue {
    fn text(&self) -> String {
        match self {
            GenusValue::Poly(p) => p.to_string(),
            GenusValue::Scalar(r) => r.to_string(),
            GenusValue::Series(s) => format_q(s),
        }
    }

    fn json(&self) -> Value {
        match self {
            GenusValue::Poly(p) => json!({"terms": p, "text": p.to_string()}),
            GenusValue::Scalar(r) => json!(to_wire(r)),
            GenusValue::Series(s) => series_json(s),
        }
    }
}

#[derive(Default)]
struct GenusCache {
    elliptic: HashMap<u32, GenusPolynomial<DeltaEpsPoly>>,
    signature: HashMap<u32, GenusPolynomial<ExactRational>>,
    ahat: HashMap<u32, GenusPolynomial<ExactRational>>,
}

impl GenusCache {
    fn evaluate(&mut self, flavor: Flavor, v: &PontryaginVector, q_order: usize) -> Result<GenusValue> {
        let k = v.k();
        let order = 2 * k as usize + 1;
        Ok(match flavor {
            Flavor::Elliptic => GenusValue::Poly(self.elliptic.entry(k).or_insert_with(|| universal_genus(k)).evaluate(v)?),
            Flavor::Signature => {
                let g = self.signature.entry(k).or_insert_with(|| genus_polynomial(&l_genus_series(order), k).expect("order"));
                GenusValue::Scalar(g.evaluate(v)?)
            }
            Flavor::Ahat => {
                let g = self.ahat.entry(k).or_insert_with(|| genus_polynomial(&a_hat_genus_series(order), k).expect("order"));
                GenusValue::Scalar(g.evaluate(v)?)
            }
            Flavor::Ell1 => GenusValue::Series(ell1(v, nu_order(q_order, false))),
            Flavor::Ell2 => GenusValue::Series(ell2(v, nu_order(q_order, true))),
        })
    }
}

fn flavor_name(f: Flavor) -> &'static str {
    match f {
        Flavor::Elliptic => "elliptic",
        Flavor::Signature => "signature",
        Flavor::Ahat => "ahat",
        Flavor::Ell1 => "ell1",
        Flavor::Ell2 => "ell2",
    }
}

fn cmd_genus(input: Option<&PathBuf>, flavor: Flavor, q_order: usize, as_json: bool) -> Result<u8> {
    let (records, batch) = read_records(input)?;
    let mut cache = GenusCache::default();
    let mut out = Vec::new();
    for r in &records {
        let v = r.pontryagin.as_ref().ok_or_else(|| anyhow!("{}: missing Pontryagin data", r.name))?;
        out.push((r.name.clone(), cache.evaluate(flavor, v, q_order)?));
    }
    if as_json {
        let items: Vec<Value> = out
            .iter()
            .map(|(name, val)| json!({"name": name, "flavor": flavor_name(flavor), "value": val.json()}))
            .collect();
        let v = if batch { Value::Array(items) } else { items.into_iter().next().expect("one record") };
        println!("{}", serde_json::to_string_pretty(&v)?);
    } else if batch {
        for (name, val) in &out {
            println!("{name}: {}", val.text());
        }
    } else {
        println!("{}", out[0].1.text());
    }
    Ok(0)
}

fn classify_record(r: &ManifoldRecord, witten_order: usize) -> Result<ClassificationReport> {
    if r.dim != 24 {
        bail!("{}: classification needs dim 24, got {}", r.name, r.dim);
    }
    match (&r.pontryagin, &r.kappa) {
        (Some(v), kappa) => {
            let mut report = classify(&ClassifyInput::Pontryagin(v.clone()), witten_order)?;
            if let Some(k) = kappa {
                let derived = report.kappa.clone();
                report.consistency.push(ConsistencyCheck {
                    name: "record-kappa".into(),
                    passed: derived.as_ref() == Some(k),
                    detail: format!("record gives {:?}", k.to_array().map(|x| x.to_string())),
                });
                if report.consistency.iter().any(|c| !c.passed) {
                    report.status = ReportStatus::Inconsistent;
                    report.kappa = None;
                    report.bounds_string = None;
                }
            }
            Ok(report)
        }
        (None, Some(k)) => Ok(classify(&ClassifyInput::Kappa(k.clone()), witten_order)?),
        (None, None) => unreachable!("records carry pontryagin or kappa"),
    }
}

fn cmd_classify(input: Option<&PathBuf>, q_order: usize) -> Result<u8> {
    let (records, batch) = read_records(input)?;
    let witten_order = nu_order(q_order, false);
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(records.len().max(1));
    let chunk = records.len().div_ceil(threads).max(1);
    let reports: Vec<Result<ClassificationReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = records
            .chunks(chunk)
            .map(|part| s.spawn(move || part.iter().map(|r| classify_record(r, witten_order)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("classifier thread panicked")).collect()
    });
    let mut items = Vec::new();
    let mut code = 0;
    for (r, report) in records.iter().zip(reports) {
        let report = report?;
        if !report.is_consistent() {
            code = EXIT_INCONSISTENT;
        }
        let mut v = report.to_json();
        v.as_object_mut().expect("object").insert("name".into(), json!(r.name));
        items.push(v);
    }
    let v = if batch { Value::Array(items) } else { items.into_iter().next().expect("one record") };
    println!("{}", serde_json::to_string_pretty(&v)?);
    Ok(code)
}

fn cmd_verify(level: VerifyLevel, as_json: bool) -> Result<u8> {
    let level = match level {
        VerifyLevel::Fast => Level::Fast,
        VerifyLevel::Full => Level::Full,
    };
    let result = verify::run(level);
    if as_json {
        println!("{}", serde_json::to_string_pretty(&result.to_json())?);
    } else {
        println!("{result}");
    }
    Ok(if result.all_passed() { 0 } else { EXIT_INCONSISTENT })
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Qexpand { name, positional_order } => {
            let order = match (positional_order, cli.order) {
                (Some(a), Some(b)) if a != b => bail!("conflicting orders {a} and {b}"),
                (a, b) => a.or(b).unwrap_or(5),
            };
            if order == 0 {
                bail!("order must be positive");
            }
            cmd_qexpand(name, order, cli.json)
        }
        Command::Genus { flavor } => cmd_genus(cli.input.as_ref(), flavor, cli.order.unwrap_or(3).max(1), cli.json),
        Command::Classify => cmd_classify(cli.input.as_ref(), cli.order.unwrap_or(3).max(1)),
        Command::Verify { level } => cmd_verify(level, cli.json),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
