use std::ffi::OsString;
use std::fmt;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use terracini_core::configurations::{
    strata_table, with_constrained_subset, ConfigError, FamilyDescriptor, StratumRow,
};
use terracini_core::linalg::rank_modular;
use terracini_core::rng::derive_seed;
use terracini_core::segre::{
    conjecture_evidence, equiv_factor_config, random_segre_points, segre_terracini, Equivalence, SegrePoint,
};
use terracini_core::terracini::dagger;
use terracini_core::{
    classify, cohomology, conditions_matrix, ClassifyOptions, LinearSystemReport, SchemeSpec, TerraciniError,
};

use crate::descriptor::parse_descriptor;
use crate::formats::{parse_point_set, parse_segre, rat_strings, write_point_set, write_segre, PointSet};
use crate::report::{Arithmetic, InputEcho, RunReport, SegreReport, SystemReport, TrailRow, VerdictReport};

pub mod exit {
    pub const NON_MEMBER: i32 = 0;
    pub const MEMBER: i32 = 10;
    pub const USAGE: i32 = 64;
    pub const DATA: i32 = 65;
    pub const NO_INPUT: i32 = 66;
    pub const SOFTWARE: i32 = 70;
    pub const IO: i32 = 74;
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Data(String),
    NoInput(String),
    Io(String),
    Compute(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => exit::USAGE,
            CliError::Data(_) => exit::DATA,
            CliError::NoInput(_) => exit::NO_INPUT,
            CliError::Io(_) => exit::IO,
            CliError::Compute(_) => exit::SOFTWARE,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "usage error: {m}"),
            CliError::Data(m) => write!(f, "data error: {m}"),
            CliError::NoInput(m) => write!(f, "cannot open input: {m}"),
            CliError::Io(m) => write!(f, "i/o error: {m}"),
            CliError::Compute(m) => write!(f, "computation failed: {m}"),
        }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<TerraciniError> for CliError {
    fn from(e: TerraciniError) -> Self {
        match e {
            TerraciniError::Inconsistent { .. } => CliError::Compute(e.to_string()),
            other => CliError::Data(other.to_string()),
        }
    }
}

impl From<ConfigError> for CliError {
    fn from(e: ConfigError) -> Self {
        match e {
            ConfigError::UnsupportedFamily(_)
            | ConfigError::UnsupportedCell { .. }
            | ConfigError::InvalidParameter(_)
            | ConfigError::Conditions(_) => CliError::Data(e.to_string()),
            other => CliError::Compute(other.to_string()),
        }
    }
}

/// Membership in Terracini loci of Veronese and Segre embeddings.
///
/// Exit status: 0 non-member (or success), 10 member, 64 usage, 65 bad
/// data, 66 missing input, 70 computation failure, 74 i/o failure.
#[derive(Debug, Parser)]
#[command(name = "terracini", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a point set lies in the Terracini locus of (Pⁿ, O(d)).
    Check(CheckArgs),
    /// Per-point table of condition † for a point set.
    Dagger(DaggerArgs),
    /// Classify many seeded samples of a family; CSV output.
    Scan(ScanArgs),
    /// Named special families for a cell with dimension counts.
    Strata(StrataArgs),
    /// Write a seeded sample of a family as a point-set file.
    Generate(GenerateArgs),
    /// Tangent-span test on a Segre product.
    Segre(SegreArgs),
    /// Random-walk statistics for equivalent projections on (P³)³.
    Evidence(EvidenceArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Exact,
    Modular,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Debug, Args)]
pub struct InputArgs {
    /// Point-set file (JSON).
    pub file: Option<PathBuf>,
    /// Generate the input instead: a family descriptor such as `6-on-conic`.
    #[arg(long)]
    pub family: Option<String>,
    #[arg(short = 'n', long, default_value_t = 2)]
    pub n: usize,
    #[arg(short = 'r', long)]
    pub r: Option<usize>,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Coordinate height for generated general points.
    #[arg(long, default_value_t = 1000)]
    pub bound: i64,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(short = 'd', long)]
    pub degree: u32,
    #[arg(long, value_enum, default_value_t = Mode::Exact)]
    pub mode: Mode,
    /// Number of primes in modular mode.
    #[arg(long, default_value_t = 2)]
    pub primes: usize,
    /// Also write the JSON report here.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct DaggerArgs {
    #[command(flatten)]
    pub input: InputArgs,
    #[arg(short = 'd', long)]
    pub degree: u32,
}

#[derive(Debug, Args)]
pub struct ScanArgs {
    #[arg(short = 'n', long, default_value_t = 2)]
    pub n: usize,
    #[arg(short = 'd', long)]
    pub degree: u32,
    #[arg(short = 'r', long)]
    pub r: usize,
    #[arg(long, default_value = "general")]
    pub family: String,
    #[arg(long, default_value_t = 100)]
    pub count: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub bound: i64,
    #[arg(long, default_value_t = 1)]
    pub jobs: usize,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct StrataArgs {
    #[arg(short = 'n', long, default_value_t = 2)]
    pub n: usize,
    #[arg(short = 'd', long)]
    pub degree: u32,
    /// Seed for the membership spot checks.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub bound: i64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, default_value = "general")]
    pub family: String,
    #[arg(short = 'n', long, default_value_t = 2)]
    pub n: usize,
    #[arg(short = 'r', long)]
    pub r: usize,
    #[arg(long)]
    pub seed: u64,
    #[arg(long, default_value_t = 1000)]
    pub bound: i64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SegreFamily {
    Random,
    /// All three projections equivalent.
    All,
    /// Only the first two projections equivalent.
    FirstTwo,
    /// Identical projections.
    Diagonal,
}

#[derive(Debug, Args)]
pub struct SegreArgs {
    /// Segre tuple file (JSON).
    pub file: Option<PathBuf>,
    /// Generate the input instead.
    #[arg(long, value_enum)]
    pub family: Option<SegreFamily>,
    /// Factor dimensions for random inputs, e.g. `3,3,3`.
    #[arg(long, value_delimiter = ',', default_value = "3,3,3")]
    pub shape: Vec<usize>,
    #[arg(short = 'r', long, default_value_t = 6)]
    pub r: usize,
    #[arg(long)]
    pub seed: Option<u64>,
    /// Write the generated tuples here instead of testing them.
    #[arg(long)]
    pub emit: Option<PathBuf>,
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct EvidenceArgs {
    #[arg(long, default_value_t = 10)]
    pub walks: usize,
    #[arg(long, default_value_t = 6)]
    pub steps: usize,
    #[arg(long)]
    pub seed: u64,
}

/// Parses `args` (including the program name) and runs the command. Returns
/// the process exit status.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(stderr, "{}", e.render());
            return if e.use_stderr() { exit::USAGE } else { 0 };
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "terracini: {e}");
            e.code()
        }
    }
}

fn dispatch(cmd: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    match cmd {
        Command::Check(a) => cmd_check(&a, out),
        Command::Dagger(a) => cmd_dagger(&a, out),
        Command::Scan(a) => cmd_scan(&a, out),
        Command::Strata(a) => cmd_strata(&a, out),
        Command::Generate(a) => cmd_generate(&a, out),
        Command::Segre(a) => cmd_segre(&a, out),
        Command::Evidence(a) => cmd_evidence(&a, out),
    }
}

fn read_file(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| match e.kind() {
        io::ErrorKind::NotFound | io::ErrorKind::PermissionDenied => {
            CliError::NoInput(format!("{}: {e}", path.display()))
        }
        _ => CliError::Io(format!("{}: {e}", path.display())),
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

pub fn family_descriptor(family: &str, n: usize, r: usize) -> Result<FamilyDescriptor, CliError> {
    let constraints = parse_descriptor(family).map_err(|e| CliError::Usage(format!("--family: {e}")))?;
    Ok(FamilyDescriptor::with(n, r, &constraints))
}

/// The input point set and a description of where it came from.
fn load_points(a: &InputArgs) -> Result<(PointSet, String), CliError> {
    match (&a.file, &a.family) {
        (Some(_), Some(_)) => Err(CliError::Usage("give a file or --family, not both".into())),
        (None, None) => Err(CliError::Usage("no input: give a point-set file or --family".into())),
        (Some(path), None) => {
            let text = read_file(path)?;
            let set = parse_point_set(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            if set.points.is_empty() {
                return Err(CliError::Data(format!("{}: no points", path.display())));
            }
            Ok((set, path.display().to_string()))
        }
        (None, Some(family)) => {
            let r = a.r.ok_or_else(|| CliError::Usage("--family needs -r".into()))?;
            let seed = a.seed.ok_or_else(|| CliError::Usage("--family needs --seed".into()))?;
            let desc = family_descriptor(family, a.n, r)?;
            let sample = with_constrained_subset(&desc, seed, a.bound)?;
            Ok((PointSet::reduced(a.n, sample.points), format!("family {desc} (seed {seed})")))
        }
    }
}

fn echo(set: &PointSet, d: Option<u32>, source: String) -> InputEcho {
    InputEcho {
        n: vec![set.n],
        d,
        r: set.points.len(),
        source,
        points: set.points.iter().map(|p| rat_strings(p.coords())).collect(),
    }
}

/// Builds the report for `check`; shared with tests.
pub fn check_report(set: &PointSet, source: String, d: u32, mode: Mode, primes: usize, seed: Option<u64>) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let n = set.n;
    let spec = SchemeSpec::doubled(n, &set.points).map_err(|e| CliError::Data(e.to_string()))?;
    let mut report;
    match mode {
        Mode::Exact => {
            report = RunReport::new("check", echo(set, Some(d), source), seed, Arithmetic::Exact);
            let sys = cohomology(&spec, d).map_err(|e| CliError::Data(e.to_string()))?;
            let verdict = classify(&set.points, n, d, &ClassifyOptions::default())?;
            if verdict.member != (sys.defect > 0) {
                return Err(TerraciniError::Inconsistent {
                    criterion: verdict.evidence.criterion(),
                }
                .into());
            }
            let mut v = VerdictReport::from(&verdict);
            v.defect = Some(sys.defect);
            report.system = Some(SystemReport::from(&sys));
            report.verdict = Some(v);
            report.trail = verdict.trail.iter().map(TrailRow::from).collect();
        }
        Mode::Modular => {
            if primes == 0 {
                return Err(CliError::Usage("--primes must be at least 1".into()));
            }
            let m = conditions_matrix(&spec, d).map_err(|e| CliError::Data(e.to_string()))?;
            let mr = rank_modular(&m, primes, seed.unwrap_or(0));
            let sys = LinearSystemReport::from_rank(n, d, spec.length(), mr.rank);
            let status = if mr.confirmed { "confirmed" } else { "unverified" };
            report = RunReport::new(
                "check",
                echo(set, Some(d), source),
                seed,
                Arithmetic::Modular {
                    primes: mr.per_prime.clone(),
                    status: status.into(),
                },
            );
            report.system = Some(SystemReport::from(&sys));
            report.verdict = Some(VerdictReport {
                member: sys.defect > 0,
                defect: Some(sys.defect),
                evidence: "modular-rank".into(),
                criterion: "modular".into(),
                witness: None,
                inequality: None,
            });
        }
    }
    report.timing_us = start.elapsed().as_micros() as u64;
    Ok(report)
}

fn verdict_code(member: bool) -> i32 {
    if member {
        exit::MEMBER
    } else {
        exit::NON_MEMBER
    }
}

fn cmd_check(a: &CheckArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (set, source) = load_points(&a.input)?;
    let report = check_report(&set, source, a.degree, a.mode, a.primes, a.input.seed)?;
    if let Some(path) = &a.out {
        write_file(path, &report.to_json())?;
    }
    match a.format {
        Format::Json => out.write_all(report.to_json().as_bytes())?,
        Format::Text => write_check_text(&report, out)?,
        Format::Csv => return Err(CliError::Usage("check supports --format text or json".into())),
    }
    Ok(verdict_code(report.verdict.as_ref().is_some_and(|v| v.member)))
}

fn write_check_text(report: &RunReport, out: &mut dyn Write) -> io::Result<()> {
    let i = &report.input;
    let d = i.d.unwrap_or(0);
    writeln!(out, "input: {} points in P^{} from {}, degree {}", i.r, i.n[0], i.source, d)?;
    if let Some(s) = &report.system {
        writeln!(
            out,
            "2S: length {}, rank {}, h0(I_2S({d})) = {} (expected {}), h1 = {}",
            s.length, s.rank, s.h0, s.expected_h0, s.h1
        )?;
    }
    if let Some(v) = &report.verdict {
        let what = if v.member { "member" } else { "non-member" };
        write!(out, "verdict: {what}, evidence {}", v.evidence)?;
        if let Some(d) = v.defect {
            write!(out, ", defect {d}")?;
        }
        if let Some((l, r)) = v.inequality {
            write!(out, ", {l} > {r}")?;
        }
        writeln!(out)?;
    }
    if let Arithmetic::Modular { status, .. } = &report.arithmetic {
        writeln!(out, "arithmetic: modular, {status}")?;
    }
    for t in &report.trail {
        writeln!(out, "  {} [{}]: {}", t.criterion, t.params, t.outcome)?;
    }
    Ok(())
}

fn cmd_dagger(a: &DaggerArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (set, _) = load_points(&a.input)?;
    let rep = dagger(&set.points, set.n, a.degree)?;
    writeln!(out, "index\tpoint\th1\tpass")?;
    for (i, e) in rep.entries.iter().enumerate() {
        writeln!(out, "{i}\t{}\t{}\t{}", e.point, e.h1, if e.passes { "yes" } else { "no" })?;
    }
    writeln!(out, "dagger: {}", if rep.overall { "holds" } else { "fails" })?;
    Ok(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanRow {
    pub sample: usize,
    pub seed: u64,
    pub member: bool,
    pub defect: usize,
    pub h0: usize,
    pub evidence: String,
}

/// Classifies `count` samples; row `i` uses seed `derive_seed(seed, i)`.
pub fn scan_rows(desc: &FamilyDescriptor, d: u32, count: usize, seed: u64, bound: i64, jobs: usize) -> Result<Vec<ScanRow>, CliError> {
    if count == 0 || jobs == 0 {
        return Err(CliError::Usage("--count and --jobs must be positive".into()));
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| CliError::Compute(e.to_string()))?;
    let opts = ClassifyOptions {
        confirm: true,
        ..ClassifyOptions::default()
    };
    pool.install(|| {
        (0..count)
            .into_par_iter()
            .map(|i| {
                let s = derive_seed(seed, i as u64);
                let sample = with_constrained_subset(desc, s, bound)?;
                let v = classify(&sample.points, desc.n, d, &opts)?;
                let sys = cohomology(&SchemeSpec::doubled(desc.n, &sample.points).expect("checked"), d)
                    .map_err(|e| CliError::Data(e.to_string()))?;
                Ok(ScanRow {
                    sample: i,
                    seed: s,
                    member: v.member,
                    defect: sys.defect,
                    h0: sys.h0,
                    evidence: v.evidence.label(),
                })
            })
            .collect()
    })
}

pub fn scan_csv(desc: &FamilyDescriptor, d: u32, seed: u64, rows: &[ScanRow]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    let mut s = String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8");
    let members = rows.iter().filter(|r| r.member).count();
    s.push_str(&format!(
        "# family={desc} n={} d={d} r={} seed={seed} count={}\n",
        desc.n,
        desc.r,
        rows.len()
    ));
    s.push_str(&format!("# members={members}/{}\n", rows.len()));
    let mut hist = std::collections::BTreeMap::new();
    for r in rows {
        *hist.entry(r.defect).or_insert(0usize) += 1;
    }
    for (defect, k) in hist {
        s.push_str(&format!("# defect {defect}: {k}\n"));
    }
    s
}

fn cmd_scan(a: &ScanArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let desc = family_descriptor(&a.family, a.n, a.r)?;
    let rows = scan_rows(&desc, a.degree, a.count, a.seed, a.bound, a.jobs)?;
    let csv = scan_csv(&desc, a.degree, a.seed, &rows);
    match &a.out {
        Some(path) => write_file(path, &csv)?,
        None => out.write_all(csv.as_bytes())?,
    }
    Ok(0)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
struct StratumJson {
    r: usize,
    family: String,
    dimension: usize,
    codimension: Option<usize>,
    spot_member: Option<bool>,
    cc3_applies: Option<bool>,
    verified: bool,
}

impl From<&StratumRow> for StratumJson {
    fn from(s: &StratumRow) -> Self {
        StratumJson {
            r: s.r,
            family: s.family.clone(),
            dimension: s.dimension,
            codimension: (!s.locus_empty).then_some(s.codimension),
            spot_member: s.spot_member,
            cc3_applies: s.cc3_applies,
            verified: s.verified,
        }
    }
}

fn cmd_strata(a: &StrataArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let rows = strata_table(a.n, a.degree, a.seed, a.bound)?;
    let rows: Vec<StratumJson> = rows.iter().map(StratumJson::from).collect();
    match a.format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(&rows).expect("serializable");
            s.push('\n');
            out.write_all(s.as_bytes())?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            for r in &rows {
                w.serialize(r).expect("in-memory csv");
            }
            out.write_all(&w.into_inner().expect("in-memory csv"))?;
        }
        Format::Text => {
            writeln!(out, "r\tfamily\tdim\tcodim\tspot\tnote")?;
            for r in &rows {
                let codim = match r.codimension {
                    Some(c) => c.to_string(),
                    None => "empty".into(),
                };
                let spot = match r.spot_member {
                    Some(true) => "member",
                    Some(false) => "non-member",
                    None => "-",
                };
                let note = if r.verified { "" } else { "dimension count not verified" };
                writeln!(out, "{}\t{}\t{}\t{codim}\t{spot}\t{note}", r.r, r.family, r.dimension)?;
            }
        }
    }
    Ok(0)
}

fn cmd_generate(a: &GenerateArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let desc = family_descriptor(&a.family, a.n, a.r)?;
    let sample = with_constrained_subset(&desc, a.seed, a.bound)?;
    let text = write_point_set(&PointSet::reduced(a.n, sample.points));
    match &a.out {
        Some(path) => write_file(path, &text)?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(0)
}

fn segre_input(a: &SegreArgs) -> Result<(Vec<SegrePoint>, String), CliError> {
    match (&a.file, a.family) {
        (Some(_), Some(_)) => Err(CliError::Usage("give a file or --family, not both".into())),
        (None, None) => Err(CliError::Usage("no input: give a Segre tuple file or --family".into())),
        (Some(path), None) => {
            let text = read_file(path)?;
            let pts = parse_segre(&text).map_err(|e| CliError::Data(format!("{}: {e}", path.display())))?;
            Ok((pts, path.display().to_string()))
        }
        (None, Some(fam)) => {
            let seed = a.seed.ok_or_else(|| CliError::Usage("--family needs --seed".into()))?;
            let pts = match fam {
                SegreFamily::Random => {
                    if a.shape.is_empty() || a.r == 0 {
                        return Err(CliError::Usage("--shape and -r must be nonempty".into()));
                    }
                    random_segre_points(&a.shape, a.r, seed)
                }
                SegreFamily::All => equiv_factor_config(seed, Equivalence::AllThree),
                SegreFamily::FirstTwo => equiv_factor_config(seed, Equivalence::FirstTwo),
                SegreFamily::Diagonal => equiv_factor_config(seed, Equivalence::Diagonal),
            };
            Ok((pts, format!("{fam:?} (seed {seed})").to_lowercase()))
        }
    }
}

fn cmd_segre(a: &SegreArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let (pts, source) = segre_input(a)?;
    if let Some(path) = &a.emit {
        write_file(path, &write_segre(&pts))?;
        return Ok(0);
    }
    let start = Instant::now();
    let v = segre_terracini(&pts).map_err(|e| CliError::Data(e.to_string()))?;
    let mut report = RunReport::new(
        "segre",
        InputEcho {
            n: pts[0].shape(),
            d: None,
            r: pts.len(),
            source,
            points: pts
                .iter()
                .map(|p| p.factors().iter().flat_map(|f| rat_strings(f.coords())).collect())
                .collect(),
        },
        a.seed,
        Arithmetic::Exact,
    );
    report.segre = Some(SegreReport::from(&v));
    report.timing_us = start.elapsed().as_micros() as u64;
    if let Some(path) = &a.out {
        write_file(path, &report.to_json())?;
    }
    match a.format {
        Format::Json => out.write_all(report.to_json().as_bytes())?,
        Format::Text => {
            writeln!(out, "input: {} points on product {:?} from {}", v.r, pts[0].shape(), report.input.source)?;
            writeln!(out, "tangent rank {} of expected {} in ambient {}, drop {}", v.rank, v.expected, v.ambient, v.drop)?;
            writeln!(out, "verdict: {}", if v.member { "member" } else { "non-member" })?;
        }
        Format::Csv => return Err(CliError::Usage("segre supports --format text or json".into())),
    }
    Ok(verdict_code(v.member))
}

fn cmd_evidence(a: &EvidenceArgs, out: &mut dyn Write) -> Result<i32, CliError> {
    let s = conjecture_evidence(a.walks, a.steps, a.seed);
    writeln!(out, "sampled {} configurations, {} members", s.sampled, s.members)?;
    writeln!(out, "members with two equivalent projections: {}", s.members_pairwise)?;
    writeln!(out, "members with all three equivalent: {}", s.members_all_three)?;
    writeln!(out, "members with an indeterminate test: {}", s.members_indeterminate)?;
    Ok(0)
}
