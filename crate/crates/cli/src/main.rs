use std::collections::BTreeSet;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use escalier::barcode::{encode, RenderFormat};
use escalier::bijections::{list_ideals, list_ideals_for_bar_list, IdealListing, ListedPartition};
use escalier::counting::{census, BarListCensus, CountOptions};
use escalier::oracle::{conjecture_probe, count_by_definition, OracleCaps};
use escalier::partitions::{enumerate_plane_partitions, PlaneSpec};
use escalier::qpolys::{gf_shifted, gf_shifted_truncated, gf_strict, gf_strict_truncated, ShiftedGf, StrictGf};
use escalier::starset::{multiplicative_vars, pommaret_basis, star_set_direct};
use escalier::{BarCode, Class, IntPoly, MonomialIdeal, OrderIdeal, PlanePartition, Term};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "escalier",
    version,
    about = "Bar Codes, star sets and counts of stable and strongly stable monomial ideals"
)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the output document to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Worker threads for counting; 1 runs sequentially, 0 uses every core.
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Compute generating functions in full instead of modulo x^(p+1).
    #[arg(long, global = true)]
    no_truncate: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Count ideals with a given constant Hilbert polynomial.
    Count {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        hilbert: u64,
        #[arg(long, value_parser = parse_class)]
        class: Class,
        /// Show per-bar-list subtotals.
        #[arg(long)]
        breakdown: bool,
    },
    /// List every ideal with its partition and Bar Code.
    List {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        hilbert: u64,
        #[arg(long, value_parser = parse_class)]
        class: Class,
        /// Restrict to one bar list, e.g. 10,4,2 (its first entry overrides --hilbert).
        #[arg(long, value_delimiter = ',')]
        bar_list: Option<Vec<u64>>,
    },
    /// Norm generating functions of plane partitions.
    Gf {
        #[command(subcommand)]
        kind: GfKind,
    },
    /// Brute-force plane partition tools.
    Partitions {
        #[command(subcommand)]
        action: PartitionsCmd,
    },
    /// Bar Code tools.
    Barcode {
        #[command(subcommand)]
        action: BarcodeCmd,
    },
    /// Star set of an order ideal.
    Starset(TermsArgs),
    /// Pommaret basis of the ideal with the given escalier, with multiplicative variables.
    Pommaret(TermsArgs),
    /// Stability of the ideal generated by the given terms.
    CheckStable(TermsArgs),
    /// Strong stability of the ideal generated by the given terms.
    CheckStronglyStable(TermsArgs),
    /// Compare the counting pipeline with brute force for p = 1..max-p.
    Verify {
        #[arg(long)]
        vars: usize,
        #[arg(long)]
        max_p: u64,
        #[arg(long, value_parser = parse_class)]
        class: Class,
    },
    /// Four-variable comparison of ideals with solid partitions, per bar list.
    Conjecture {
        #[arg(long)]
        hilbert: u64,
        #[arg(long, value_parser = parse_class)]
        class: Class,
    },
    /// Draw the Bar Code of an order ideal.
    Render {
        #[command(flatten)]
        terms: TermsArgs,
        #[command(flatten)]
        style: RenderArgs,
    },
}

#[derive(Args)]
struct TermsArgs {
    /// Terms such as `1 x1 x1^2*x3`; commas also separate.
    #[arg(required = true, allow_hyphen_values = false)]
    terms: Vec<String>,
    /// Number of variables; defaults to the largest index mentioned.
    #[arg(long)]
    vars: Option<usize>,
}

#[derive(Args)]
struct RenderArgs {
    /// SVG instead of ASCII.
    #[arg(long)]
    svg: bool,
    /// Label each column with its term.
    #[arg(long)]
    labels: bool,
}

#[derive(Args)]
struct ShapeArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    shape: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    a: Vec<i64>,
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
    b: Vec<i64>,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
    c: i64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
    /// Only coefficients up to this degree.
    #[arg(long)]
    truncate: Option<usize>,
}

#[derive(Subcommand)]
enum GfKind {
    /// Shape lambda/mu with first parts at most a_i and last parts at least b_i.
    Strict {
        #[command(flatten)]
        shape: ShapeArgs,
        #[arg(long, value_delimiter = ',')]
        inner: Option<Vec<i64>>,
    },
    /// Shifted shape with first parts exactly a_i and last parts at least b_i.
    Shifted {
        #[command(flatten)]
        shape: ShapeArgs,
    },
}

#[derive(Args)]
struct SpecArgs {
    #[arg(long, value_delimiter = ',', required = true)]
    shape: Vec<usize>,
    #[arg(long, value_delimiter = ',')]
    inner: Option<Vec<usize>>,
    #[arg(long)]
    shifted: bool,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
    c: i64,
    #[arg(long, allow_negative_numbers = true, default_value_t = 1)]
    d: i64,
    #[arg(long)]
    norm: i64,
    /// Bound on the first part of each row (exact for shifted shapes).
    #[arg(long, value_delimiter = ',')]
    first: Option<Vec<i64>>,
    /// Lower bound on the last part of each row; defaults to 1.
    #[arg(long, value_delimiter = ',')]
    last_min: Option<Vec<i64>>,
}

#[derive(Subcommand)]
enum PartitionsCmd {
    Enumerate(SpecArgs),
    Count(SpecArgs),
    /// Validate a partition given as JSON (file or `-` for standard input).
    Validate { input: String },
}

#[derive(Subcommand)]
enum BarcodeCmd {
    /// Bar Code of a finite set of terms.
    Encode(TermsArgs),
    /// Terms labelling the columns of a Bar Code given as JSON.
    Decode { input: String },
    /// Admissibility of a Bar Code given as JSON.
    Check { input: String },
    /// Draw a Bar Code given as JSON.
    Render {
        input: String,
        #[command(flatten)]
        style: RenderArgs,
    },
}

fn parse_class(s: &str) -> Result<Class, String> {
    s.parse::<Class>().map_err(|e| e.to_string())
}

enum Failure {
    Usage(String),
    Input(String),
    Domain(String),
    Io(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Input(_) => 3,
            Failure::Domain(_) => 4,
            Failure::Io(_) => 5,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Input(m) | Failure::Domain(m) | Failure::Io(m) => m,
        }
    }
}

impl From<escalier::Error> for Failure {
    fn from(e: escalier::Error) -> Self {
        use escalier::Error::*;
        let msg = e.to_string();
        match e {
            ArityMismatch { .. }
            | VariableOutOfRange { .. }
            | UnitTerm
            | Empty(_)
            | DuplicateTerm(_)
            | NotOrderIdeal { .. }
            | MalformedBarCode(_)
            | Parse(_)
            | InvalidPartition(_)
            | Ragged(_)
            | NonSquare { .. } => Failure::Input(msg),
            _ => Failure::Domain(msg),
        }
    }
}

/// A finished command: the document in both renderings and the exit status.
struct Report {
    text: String,
    json: Value,
    code: u8,
}

impl Report {
    fn ok(text: String, json: Value) -> Self {
        Report { text, json, code: 0 }
    }

    fn negative(mut self, yes: bool) -> Self {
        if yes {
            self.code = 1;
        }
        self
    }
}

struct Config {
    caps: OracleCaps,
    opts: CountOptions,
}

impl Config {
    fn from_cli(cli: &Cli) -> Result<Self, Failure> {
        let mut caps = OracleCaps::default();
        for (var, n) in [("ESCALIER_CAP_N2", 2), ("ESCALIER_CAP_N3", 3), ("ESCALIER_CAP_N4", 4), ("ESCALIER_CAP_NMORE", 5)] {
            if let Ok(v) = std::env::var(var) {
                let cap = v.trim().parse().map_err(|_| Failure::Usage(format!("{var} must be a non-negative integer")))?;
                caps = caps.with_cap(n, cap);
            }
        }
        if cli.jobs != 1 {
            rayon::ThreadPoolBuilder::new()
                .num_threads(cli.jobs)
                .build_global()
                .map_err(|e| Failure::Domain(e.to_string()))?;
        }
        let opts = CountOptions { truncate: !cli.no_truncate, parallel: cli.jobs != 1 };
        Ok(Config { caps, opts })
    }
}

fn to_json<T: Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serialisable")
}

fn read_input(src: &str) -> Result<String, Failure> {
    if src == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| Failure::Io(format!("standard input: {e}")))?;
        Ok(s)
    } else {
        std::fs::read_to_string(src).map_err(|e| Failure::Io(format!("{src}: {e}")))
    }
}

fn read_json<T: serde::de::DeserializeOwned>(src: &str) -> Result<T, Failure> {
    serde_json::from_str(&read_input(src)?).map_err(|e| Failure::Input(format!("{src}: {e}")))
}

fn parse_terms(args: &TermsArgs) -> Result<Vec<Term>, Failure> {
    let texts: Vec<&str> =
        args.terms.iter().flat_map(|t| t.split(',')).map(str::trim).filter(|t| !t.is_empty()).collect();
    if texts.is_empty() {
        return Err(Failure::Input("no terms given".into()));
    }
    let mentioned = texts.iter().map(|t| Term::max_var_in_text(t)).collect::<Result<Vec<_>, _>>()?;
    let n = args.vars.unwrap_or_else(|| mentioned.iter().copied().max().unwrap_or(0).max(1));
    Ok(texts.iter().map(|t| Term::parse(t, n)).collect::<Result<Vec<_>, _>>()?)
}

fn order_ideal(args: &TermsArgs) -> Result<OrderIdeal, Failure> {
    let terms = parse_terms(args)?;
    let n = terms[0].arity();
    Ok(OrderIdeal::new(n, terms)?)
}

fn join_terms<'a>(ts: impl IntoIterator<Item = &'a Term>) -> String {
    ts.into_iter().map(Term::to_string).collect::<Vec<_>>().join(", ")
}

fn tuple(v: &[impl ToString]) -> String {
    format!("({})", v.iter().map(ToString::to_string).collect::<Vec<_>>().join(","))
}

fn census_text(c: &BarListCensus, breakdown: bool) -> String {
    if !breakdown {
        return format!("{}\n", c.total);
    }
    let width = c.rows.iter().map(|r| tuple(&r.bar_list).len()).max().unwrap_or(8).max(8);
    let mut s = format!("{:<width$} | ideals\n", "bar list");
    for r in &c.rows {
        s += &format!("{:<width$} | {}\n", tuple(&r.bar_list), r.subtotal);
    }
    s += &format!("{:<width$} | {}\n", "total", c.total);
    s
}

fn listing_text(l: &IdealListing) -> String {
    let mut s = String::new();
    for it in &l.items {
        let part = match &it.partition {
            ListedPartition::Integer(a) => tuple(a.parts()),
            ListedPartition::Plane(pp) => {
                pp.rows().iter().map(|r| tuple(r)).collect::<Vec<_>>().join(" / ")
            }
        };
        s += &format!("{part} | {}\n", it.generators);
    }
    s
}

fn barcode_text(b: &BarCode) -> String {
    let mut s = format!("n={} width={}\n", b.n(), b.width());
    for i in 1..=b.n() {
        s += &format!("row {i}: {}\n", b.row(i).iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    }
    s += &format!("bar list: {}\n", tuple(&b.bar_list()));
    s
}

fn render(b: &BarCode, style: &RenderArgs) -> Report {
    let fmt = if style.svg { RenderFormat::Svg } else { RenderFormat::Ascii };
    let drawing = b.render(fmt, style.labels);
    Report::ok(drawing.clone(), json!({ "format": if style.svg { "svg" } else { "ascii" }, "drawing": drawing }))
}

fn poly_report(g: IntPoly) -> Report {
    Report::ok(format!("{g}\n"), to_json(&g))
}

fn plane_spec(a: &SpecArgs) -> PlaneSpec {
    let r = a.shape.len();
    PlaneSpec {
        outer: a.shape.clone(),
        inner: a.inner.clone().unwrap_or_else(|| vec![0; r]),
        shifted: a.shifted,
        c: a.c,
        d: a.d,
        first: a.first.clone(),
        last_min: a.last_min.clone().unwrap_or_else(|| vec![1; r]),
        norm: a.norm,
    }
}

fn plane_text(p: &PlanePartition) -> String {
    p.rows().iter().map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")).collect::<Vec<_>>().join(" / ")
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let cfg = Config::from_cli(cli)?;
    match &cli.cmd {
        Cmd::Count { vars, hilbert, class, breakdown } => {
            let c = census(*vars, *hilbert, *class, cfg.opts)?;
            let doc = if *breakdown {
                to_json(&c)
            } else {
                json!({ "n": c.n, "p": c.p, "class": c.class, "total": c.total.to_string() })
            };
            Ok(Report::ok(census_text(&c, *breakdown), doc))
        }
        Cmd::List { vars, hilbert, class, bar_list } => {
            let l = match bar_list {
                Some(bl) => {
                    if bl.len() != *vars {
                        return Err(Failure::Usage(format!("--bar-list needs {vars} entries")));
                    }
                    list_ideals_for_bar_list(bl, *class)?
                }
                None => list_ideals(*hilbert, *vars, *class)?,
            };
            Ok(Report::ok(listing_text(&l), to_json(&l)))
        }
        Cmd::Gf { kind } => {
            let trunc = |t: Option<usize>| t.filter(|_| !cli.no_truncate);
            match kind {
                GfKind::Strict { shape, inner } => {
                    let spec = StrictGf {
                        lambda: shape.shape.clone(),
                        mu: inner.clone().unwrap_or_else(|| vec![0; shape.shape.len()]),
                        a: shape.a.clone(),
                        b: shape.b.clone(),
                        c: shape.c,
                        d: shape.d,
                    };
                    let g = match trunc(shape.truncate) {
                        Some(t) => gf_strict_truncated(&spec, t)?,
                        None => gf_strict(&spec)?,
                    };
                    Ok(poly_report(g))
                }
                GfKind::Shifted { shape } => {
                    let spec = ShiftedGf {
                        lambda: shape.shape.clone(),
                        a: shape.a.clone(),
                        b: shape.b.clone(),
                        c: shape.c,
                        d: shape.d,
                    };
                    let g = match trunc(shape.truncate) {
                        Some(t) => gf_shifted_truncated(&spec, t)?,
                        None => gf_shifted(&spec)?,
                    };
                    Ok(poly_report(g))
                }
            }
        }
        Cmd::Partitions { action } => match action {
            PartitionsCmd::Enumerate(a) => {
                let ps = enumerate_plane_partitions(&plane_spec(a))?;
                let text: String = ps.iter().map(|p| plane_text(p) + "\n").collect();
                Ok(Report::ok(text, to_json(&ps)))
            }
            PartitionsCmd::Count(a) => {
                let n = enumerate_plane_partitions(&plane_spec(a))?.len();
                Ok(Report::ok(format!("{n}\n"), json!({ "count": n.to_string() })))
            }
            PartitionsCmd::Validate { input } => {
                let p: PlanePartition = read_json(input)?;
                let valid = p.validate();
                let text = if valid { "valid\n" } else { "invalid\n" };
                Ok(Report::ok(text.into(), json!({ "valid": valid })).negative(!valid))
            }
        },
        Cmd::Barcode { action } => match action {
            BarcodeCmd::Encode(t) => {
                let b = encode(&parse_terms(t)?)?;
                Ok(Report::ok(barcode_text(&b), to_json(&b)))
            }
            BarcodeCmd::Decode { input } => {
                let b: BarCode = read_json(input)?;
                let terms = b.decode();
                Ok(Report::ok(join_terms(&terms) + "\n", to_json(&terms)))
            }
            BarcodeCmd::Check { input } => {
                let b: BarCode = read_json(input)?;
                let ok = b.is_admissible();
                let text = if ok { "admissible\n" } else { "not admissible\n" };
                Ok(Report::ok(text.into(), json!({ "admissible": ok, "bar_list": b.bar_list() })).negative(!ok))
            }
            BarcodeCmd::Render { input, style } => {
                let b: BarCode = read_json(input)?;
                Ok(render(&b, style))
            }
        },
        Cmd::Starset(t) => {
            let s = star_set_direct(&order_ideal(t)?);
            Ok(Report::ok(join_terms(&s.terms) + "\n", to_json(&s.terms)))
        }
        Cmd::Pommaret(t) => {
            let n = order_ideal(t)?;
            let basis = pommaret_basis(&n);
            let mut text = String::new();
            let mut doc = Vec::new();
            for term in &basis.terms {
                let mult: BTreeSet<usize> = multiplicative_vars(&basis.terms, term)?;
                let names: Vec<String> = mult.iter().map(|i| format!("x{i}")).collect();
                text += &format!("{term}  [{}]\n", names.join(", "));
                doc.push(json!({ "term": term, "multiplicative": mult }));
            }
            Ok(Report::ok(text, Value::Array(doc)))
        }
        Cmd::CheckStable(t) | Cmd::CheckStronglyStable(t) => {
            let strong = matches!(cli.cmd, Cmd::CheckStronglyStable(_));
            let terms = parse_terms(t)?;
            let ideal = MonomialIdeal::new(terms[0].arity(), terms)?;
            let (yes, name) =
                if strong { (ideal.is_strongly_stable(), "strongly stable") } else { (ideal.is_stable(), "stable") };
            let text = if yes { format!("{name}\n") } else { format!("not {name}\n") };
            Ok(Report::ok(text, json!({ "ideal": ideal.to_string(), "class": name, "holds": yes })).negative(!yes))
        }
        Cmd::Verify { vars, max_p, class } => {
            let mut text = format!("{:>4} | {:>10} | {:>10} | ok\n", "p", "pipeline", "oracle");
            let mut rows = Vec::new();
            let mut all = true;
            for p in 1..=*max_p {
                let pipeline = census(*vars, p, *class, cfg.opts)?.total;
                let brute = count_by_definition(*vars, p, *class, &cfg.caps)?;
                let ok = pipeline == brute.into();
                all &= ok;
                text += &format!("{p:>4} | {pipeline:>10} | {brute:>10} | {}\n", if ok { "PASS" } else { "FAIL" });
                rows.push(json!({ "p": p, "pipeline": pipeline.to_string(), "oracle": brute.to_string(), "ok": ok }));
            }
            Ok(Report::ok(text, json!({ "n": vars, "class": class, "rows": rows, "all_ok": all })).negative(!all))
        }
        Cmd::Conjecture { hilbert, class } => {
            let r = conjecture_probe(*hilbert, *class, &cfg.caps)?;
            let width = r.rows.iter().map(|row| tuple(&row.bar_list).len()).max().unwrap_or(8).max(8);
            let mut text = format!("{:<width$} | ideals | partitions | agree\n", "bar list");
            for row in &r.rows {
                text += &format!(
                    "{:<width$} | {:>6} | {:>10} | {}\n",
                    tuple(&row.bar_list),
                    row.ideals,
                    row.partitions,
                    if row.agree { "yes" } else { "no" }
                );
            }
            Ok(Report::ok(text, to_json(&r)).negative(!r.all_agree))
        }
        Cmd::Render { terms, style } => {
            let terms = parse_terms(terms)?;
            Ok(render(&encode(&terms)?, style))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match run(&cli) {
        Ok(r) => r,
        Err(f) => {
            eprintln!("escalier: {}", f.message());
            return ExitCode::from(f.code());
        }
    };
    let body = match cli.format {
        Format::Text => report.text,
        Format::Json => serde_json::to_string_pretty(&report.json).expect("serialisable") + "\n",
    };
    let written = match &cli.out {
        Some(path) => std::fs::write(path, &body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(e) = written {
        eprintln!("escalier: {e}");
        return ExitCode::from(5);
    }
    ExitCode::from(report.code)
}
