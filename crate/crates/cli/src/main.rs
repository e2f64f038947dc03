//! `okounkov`: batch front end for Okounkov bodies, concave transforms and
//! positivity reports.

mod instance;

use std::fs;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use okounkov::concave::ArithOkounkovBody;
use okounkov::p1::{SampleSpec, ThmKeyReport};
use okounkov::positivity::{self, AdmissibleCertificate, PositivityReport};
use okounkov::sections::ConvergenceReport;
use okounkov::suite::{self, SuiteReport};
use okounkov::{ConcaveRoof, P1Metric, Polytope, Rational, RationalPoint, RoofMode, Value};
use serde::{Deserialize, Serialize};

use instance::{stage_degree, Failure, Instance, Payload};

const SCHEMA: &str = include_str!("schema.json");

#[derive(Parser)]
#[command(name = "okounkov", version, about = "Okounkov bodies, concave transforms and arithmetic positivity")]
struct Cli {
    /// Print the JSON schemas of all input and output files and exit.
    #[arg(long)]
    schema: bool,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Okounkov body and arithmetic Okounkov body.
    Body(Common),
    /// Concave transform, or its values on a grid with --format csv.
    Transform(Common),
    /// Minima, volume, heights and positivity verdicts.
    Report(Common),
    /// Admissible and infinitesimal simplex certificates.
    Certify(Common),
    /// Heights of rational points on the projective line.
    P1Heights(Common),
    /// Invariant suite on seeded random roofs and, if given, on the input.
    Check(CheckArgs),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct Common {
    /// Instance file (JSON).
    #[arg(long)]
    input: PathBuf,
    #[command(flatten)]
    out: OutputArgs,
    /// Grid intervals per axis for sampling and plot grids.
    #[arg(long, default_value_t = 64)]
    grid: u32,
    /// Highest degree used from a section table.
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
    /// Comma-separated stage degrees for section tables.
    #[arg(long, value_delimiter = ',')]
    stages: Vec<u32>,
}

#[derive(Args)]
struct OutputArgs {
    /// Write here instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Args)]
struct CheckArgs {
    /// Optional instance to check in addition to the random suite.
    #[arg(long)]
    input: Option<PathBuf>,
    #[command(flatten)]
    out: OutputArgs,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random roofs.
    #[arg(long, default_value_t = 200)]
    count: usize,
    #[arg(long, default_value_t = 64)]
    grid: u32,
    #[arg(long, default_value_t = 16)]
    max_degree: u32,
}

fn load(path: &PathBuf) -> Result<Instance, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::Schema(format!("cannot read {}: {e}", path.display())))?;
    Instance::from_json(&text)
}

fn json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable output");
    s.push('\n');
    s
}

fn csv_text(header: Vec<String>, rows: Vec<Vec<String>>) -> String {
    let mut w = csv::WriterBuilder::new().flexible(false).from_writer(Vec::new());
    w.write_record(&header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf8")
}

fn emit(out: &OutputArgs, text: &str) -> Result<(), Failure> {
    match &out.output {
        Some(p) => fs::write(p, text).map_err(|e| Failure::Schema(format!("cannot write {}: {e}", p.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(|e| Failure::Schema(format!("cannot write output: {e}")))
        }
    }
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct StageBody {
    /// Stage degree for section tables; absent for closed-form inputs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub okounkov_body: Polytope,
    pub arithmetic_body: ArithOkounkovBody,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct BodyOutput {
    pub kind: String,
    pub stages: Vec<StageBody>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub convergence: Option<ConvergenceReport>,
}

fn stage_list(c: &Common, top: u32) -> Vec<u32> {
    let mut s: Vec<u32> = if c.stages.is_empty() { vec![top] } else { c.stages.iter().map(|&n| n.min(top)).collect() };
    s.retain(|&n| n > 0);
    s.sort_unstable();
    s.dedup();
    s
}

fn body(c: &Common) -> Result<String, Failure> {
    let inst = load(&c.input)?;
    let mut out = BodyOutput { kind: inst.kind_name().into(), stages: Vec::new(), convergence: None };
    if let Payload::Sections(table) = &inst.payload {
        let top = stage_degree(table, c.max_degree)?;
        let stages = stage_list(c, top);
        for &n in &stages {
            let g = table.concave_transform_stage(n)?;
            out.stages.push(StageBody { n: Some(n), okounkov_body: table.okounkov_stage(n)?, arithmetic_body: g.hypograph()? });
        }
        out.convergence = Some(table.convergence_report(&stages)?);
    } else {
        let g = inst.roof(c.grid, c.max_degree)?;
        out.stages.push(StageBody { n: None, okounkov_body: g.domain().clone(), arithmetic_body: g.hypograph()? });
    }
    Ok(match c.out.format {
        Format::Json => json(&out),
        Format::Csv => {
            let width = out.stages.iter().map(|s| s.arithmetic_body.body.dim()).max().unwrap_or(1);
            let mut header = vec!["stage".to_string(), "body".into(), "vertex".into()];
            header.extend((1..=width).map(|i| format!("x{i}")));
            let mut rows = Vec::new();
            for s in &out.stages {
                let stage = s.n.map(|n| n.to_string()).unwrap_or_default();
                for (name, p) in [("okounkov", &s.okounkov_body), ("arithmetic", &s.arithmetic_body.body)] {
                    for (i, v) in p.vertices().iter().enumerate() {
                        let mut row = vec![stage.clone(), name.to_string(), i.to_string()];
                        row.extend(v.0.iter().map(Rational::to_string));
                        row.resize(width + 3, String::new());
                        rows.push(row);
                    }
                }
            }
            csv_text(header, rows)
        }
    })
}

fn transform(c: &Common) -> Result<String, Failure> {
    let inst = load(&c.input)?;
    let g = inst.roof(c.grid, c.max_degree)?;
    Ok(match c.out.format {
        Format::Json => json(&g),
        Format::Csv => {
            let d = g.dim();
            let mut header: Vec<String> = (1..=d).map(|i| format!("alpha{i}")).collect();
            header.extend(["g".to_string(), "g_exact".to_string()]);
            let mut rows = Vec::new();
            for p in g.grid(c.grid)? {
                let v = g.evaluate(&p)?;
                let mut row: Vec<String> = p.0.iter().map(Rational::to_string).collect();
                row.push(format!("{:?}", v.to_f64()));
                row.push(v.as_exact().map(Rational::to_string).unwrap_or_default());
                rows.push(row);
            }
            csv_text(header, rows)
        }
    })
}

fn value_cell(v: &Value) -> String {
    v.to_string()
}

fn report(c: &Common) -> Result<String, Failure> {
    let inst = load(&c.input)?;
    let g = inst.roof(c.grid, c.max_degree)?;
    let mut rep: PositivityReport = positivity::report(&g, &inst.assertions)?;
    if matches!(inst.payload, Payload::Toric(_)) {
        rep.notes.push("toric roof taken as the concave transform".into());
    }
    if g.mode() == RoofMode::Sampled && g.dim() > 1 {
        rep.notes.push("sampled roof in dimension > 1: no integration error bound".into());
    }
    Ok(match c.out.format {
        Format::Json => json(&rep),
        Format::Csv => {
            let v = &rep.verdicts;
            let cells: Vec<(&str, String)> = vec![
                ("regime", format!("{:?}", rep.regime).to_lowercase()),
                ("zeta_abs", value_cell(&rep.zeta_abs)),
                ("zeta_ess", value_cell(&rep.zeta_ess)),
                ("degree", rep.degree.to_string()),
                ("arithmetic_volume", value_cell(&rep.arithmetic_volume)),
                ("height_x", value_cell(&rep.height_x)),
                ("normalized_height", rep.normalized_height.as_ref().map(value_cell).unwrap_or_default()),
                ("pseudo_effective", verdict(v.pseudo_effective)),
                ("nef", verdict(v.nef)),
                ("ample", verdict(v.ample)),
                ("hs_equality", v.hs_equality.to_string()),
                ("generic_small_points", v.generic_small_points.to_string()),
            ];
            csv_text(cells.iter().map(|(k, _)| k.to_string()).collect(), vec![cells.into_iter().map(|(_, v)| v).collect()])
        }
    })
}

fn verdict(v: positivity::Verdict) -> String {
    serde_json::to_value(v).ok().and_then(|x| x.as_str().map(str::to_string)).unwrap_or_default()
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CertifyOutput {
    pub admissible: Option<AdmissibleCertificate>,
    pub admissible_status: String,
    pub infinitesimal: Option<Rational>,
    pub infinitesimal_status: String,
    pub notes: Vec<String>,
}

fn status(found: bool) -> String {
    if found { "found" } else { "not found within search budget" }.to_string()
}

fn certify(c: &Common) -> Result<String, Failure> {
    let inst = load(&c.input)?;
    let g = inst.roof(c.grid, c.max_degree)?;
    let body = g.hypograph()?;
    let admissible = positivity::admissible_certificate(&body)?;
    let infinitesimal = positivity::infinitesimal_certificate(&body)?;
    let mut notes = vec![
        "admissible: (anchor + standard simplex of size lambda) x {xi} lies in the arithmetic Okounkov body".to_string(),
        "infinitesimal: inverted simplex of size lambda at height lambda; meaningful only for bodies of infinitesimal flags"
            .to_string(),
    ];
    if g.regime() == okounkov::Regime::Float {
        notes.push("floating roof: containment verified on its exact dyadic samples".into());
    }
    let out = CertifyOutput {
        admissible_status: status(admissible.is_some()),
        admissible,
        infinitesimal_status: status(infinitesimal.is_some()),
        infinitesimal,
        notes,
    };
    Ok(match c.out.format {
        Format::Json => json(&out),
        Format::Csv => {
            let header = ["certificate", "status", "lambda", "xi", "anchor"].map(String::from).to_vec();
            let a = out.admissible.as_ref();
            let rows = vec![
                vec![
                    "admissible".into(),
                    out.admissible_status.clone(),
                    a.map(|c| c.lambda.to_string()).unwrap_or_default(),
                    a.map(|c| c.xi.to_string()).unwrap_or_default(),
                    a.map(|c| c.anchor.to_string()).unwrap_or_default(),
                ],
                vec![
                    "infinitesimal".into(),
                    out.infinitesimal_status.clone(),
                    out.infinitesimal.as_ref().map(Rational::to_string).unwrap_or_default(),
                    out.infinitesimal.as_ref().map(Rational::to_string).unwrap_or_default(),
                    String::new(),
                ],
            ];
            csv_text(header, rows)
        }
    })
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct PointHeight {
    pub x: RationalPoint,
    #[serde(with = "okounkov::value::as_string")]
    pub height: Value,
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct HeightsOutput {
    pub metric: P1Metric,
    pub sample: SampleSpec,
    pub points: Vec<PointHeight>,
    pub thmkey: ThmKeyReport,
}

fn p1_heights(c: &Common) -> Result<(String, bool), Failure> {
    let inst = load(&c.input)?;
    let Payload::P1(p) = &inst.payload else {
        return Err(Failure::Schema(format!("p1-heights needs a p1 instance, got {}", inst.kind_name())));
    };
    let sample = p.sample.clone().unwrap_or(SampleSpec::Farey { bound: 20 });
    let xs = sample.points()?;
    let thmkey = p.metric.check_thmkey(&xs)?;
    let points = xs.iter().map(|x| PointHeight { x: *x, height: p.metric.point_height(x) }).collect();
    let out = HeightsOutput { metric: p.metric.clone(), sample, points, thmkey };
    let pass = out.thmkey.pass;
    let text = match c.out.format {
        Format::Json => json(&out),
        Format::Csv => csv_text(
            vec!["x".into(), "height".into(), "height_exact".into()],
            out.points
                .iter()
                .map(|h| {
                    vec![h.x.to_string(), format!("{:?}", h.height.to_f64()), h.height.as_exact().map(Rational::to_string).unwrap_or_default()]
                })
                .collect(),
        ),
    };
    Ok((text, pass))
}

#[derive(Serialize, Deserialize, PartialEq, Debug)]
pub struct CheckOutput {
    pub suite: SuiteReport,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub instance: Option<SuiteReport>,
    pub pass: bool,
}

/// Invariants that hold for any concave model, exact or floating.
fn check_roof(g: &ConcaveRoof, inst: &Instance) -> Result<SuiteReport, Failure> {
    if g.regime() == okounkov::Regime::Exact && g.mode() == RoofMode::Affine {
        let mut r = SuiteReport { seed: 0, instances: 1, ..Default::default() };
        let one = suite::Instance { index: 0, roof: g.clone(), flag_centered: false, constant: false };
        suite::check_instance(&one, &Rational::one(), &mut r)?;
        return Ok(r);
    }
    let mut r = SuiteReport { seed: 0, instances: 1, ..Default::default() };
    let mut record = |check: &str, ok: bool, detail: String| {
        *r.checked.entry(check.to_string()).or_default() += 1;
        if !ok {
            r.violations.push(suite::Violation { index: 0, check: check.into(), detail });
        }
    };
    if g.domain().volume().is_positive() {
        let z = positivity::zhang_inequalities(g)?;
        record("zhang", z.pass, format!("{z:?}"));
        let n = positivity::generic_nets_check(g)?;
        record("generic_nets", n.equivalent, format!("{n:?}"));
        let hs = positivity::hs_check(g, inst.assertions.semi_positive, true)?;
        record("hilbert_samuel", hs.consistent, format!("{hs:?}"));
    }
    if let Payload::P1(p) = &inst.payload {
        let xs = p.sample.clone().unwrap_or(SampleSpec::Farey { bound: 20 }).points()?;
        let t = p.metric.check_thmkey(&xs)?;
        record("thmkey", t.pass, format!("violations at {:?}", t.violations));
    }
    Ok(r)
}

fn check(c: &CheckArgs) -> Result<(String, bool), Failure> {
    let suite = suite::run(c.seed, c.count)?;
    let instance = match &c.input {
        Some(path) => {
            let inst = load(path)?;
            Some(check_roof(&inst.roof(c.grid, c.max_degree)?, &inst)?)
        }
        None => None,
    };
    let pass = suite.pass() && instance.as_ref().is_none_or(SuiteReport::pass);
    let out = CheckOutput { suite, instance, pass };
    let text = match c.out.format {
        Format::Json => json(&out),
        Format::Csv => {
            let mut rows = Vec::new();
            for (scope, r) in std::iter::once(("suite", &out.suite)).chain(out.instance.as_ref().map(|r| ("instance", r))) {
                for (name, count) in &r.checked {
                    let bad = r.violations.iter().filter(|v| &v.check == name).count();
                    rows.push(vec![scope.to_string(), name.clone(), count.to_string(), bad.to_string()]);
                }
            }
            csv_text(["scope", "check", "instances", "violations"].map(String::from).to_vec(), rows)
        }
    };
    Ok((text, pass))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if cli.schema {
        print!("{SCHEMA}");
        return Ok(());
    }
    let Some(command) = &cli.command else {
        return Err(Failure::Schema("no subcommand given; see --help".into()));
    };
    let (out, text, pass) = match command {
        Command::Body(c) => (&c.out, body(c)?, true),
        Command::Transform(c) => (&c.out, transform(c)?, true),
        Command::Report(c) => (&c.out, report(c)?, true),
        Command::Certify(c) => (&c.out, certify(c)?, true),
        Command::P1Heights(c) => {
            let (t, p) = p1_heights(c)?;
            (&c.out, t, p)
        }
        Command::Check(c) => {
            let (t, p) = check(c)?;
            (&c.out, t, p)
        }
    };
    emit(out, &text)?;
    if pass {
        Ok(())
    } else {
        Err(Failure::Violation("see the emitted report".into()))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}
