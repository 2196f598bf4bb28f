//! The `soergel` command line: queries, verification suites and lab checks.
//!
//! Exit status is 0 when everything requested succeeded, 1 when a
//! verification failed and 2 on malformed input.

pub mod cache;
pub mod expr;
pub mod suites;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;
use std::sync::Arc;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::bimlab::{Lab, LabError};
use crate::chars::{self, BSObject, CharError};
use crate::coxeter::{CoxeterError, CoxeterMatrix, CoxeterSystem, Element, RepKind, ReflectionRep};
use crate::hecke::{format_q_poly, Hecke, HeckeError};

use cache::KlCache;
use suites::SuiteReport;

#[derive(Parser, Debug)]
#[command(name = "soergel", version, about = "Kazhdan-Lusztig bases, Bott-Samelson characters and graph-module checks")]
pub struct Cli {
    /// Coxeter matrix JSON file: {"generators": [...], "m": [[...]]}, 0 meaning infinity.
    #[arg(long, global = true)]
    pub matrix: Option<PathBuf>,
    /// Dihedral group I2(m) with generators s, t; `inf` for the infinite one.
    #[arg(long, global = true)]
    pub m: Option<String>,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Neither read nor write the Kazhdan-Lusztig cache.
    #[arg(long, global = true)]
    pub no_cache: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Kazhdan-Lusztig polynomial P_{y,x} in q = v^-2.
    Kl {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// C'_x in the normalized standard basis.
    Cprime {
        #[arg(long)]
        x: String,
    },
    /// Coefficient of v in the C'_x-coordinate at y.
    Mu {
        #[arg(long)]
        x: String,
        #[arg(long)]
        y: String,
    },
    /// Standard and costandard characters of a Bott-Samelson bimodule.
    BsChar {
        #[arg(long)]
        word: String,
        /// Grading shift; defaults to the word length.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i32>,
    },
    /// Decomposition of a Bott-Samelson bimodule into indecomposables.
    BsDecompose {
        #[arg(long)]
        word: String,
        /// Grading shift; defaults to the word length.
        #[arg(long, allow_hyphen_values = true)]
        shift: Option<i32>,
    },
    /// Graded hom rank from the standard character `left` to the costandard character `right`.
    HomRank {
        /// Element expression, e.g. "C[s t]; (v^-1) T[s]".
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Integer combination of shifted b-words equal to an element.
    ExpressBwords {
        #[arg(long)]
        elt: String,
    },
    /// Runs a verification suite.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
        /// Random cases per system (hom, leftinv).
        #[arg(long)]
        count: Option<usize>,
        /// Length bound for words or elements.
        #[arg(long)]
        max_len: Option<usize>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Degreewise checks on graph bimodules.
    Lab {
        #[arg(value_enum)]
        check: LabCheck,
        #[arg(long)]
        s: Option<String>,
        /// Top element; when absent, all elements up to --max-len are swept.
        #[arg(long)]
        x: Option<String>,
        #[arg(long)]
        y: Option<String>,
        #[arg(long, default_value_t = 12)]
        maxdeg: usize,
        /// geometric, minimal, or permutation (type A only).
        #[arg(long, default_value = "geometric")]
        rep: String,
        #[arg(long, default_value_t = 3)]
        max_len: usize,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Dihedral,
    Hom,
    Leftinv,
    Positivity,
    S4,
    Omnibus,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum LabCheck {
    Er,
    Midi,
    Ip,
    Homtrunc,
}

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Failed { message: String, witness: Value },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Input(_) => 2,
            CliError::Failed { .. } => 1,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            CliError::Input(m) => json!({"error": "input", "message": m}),
            CliError::Failed { message, witness } => json!({"error": "failed", "message": message, "witness": witness}),
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Input(m) | CliError::Failed { message: m, .. } => m,
        }
    }
}

impl From<CoxeterError> for CliError {
    fn from(e: CoxeterError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<HeckeError> for CliError {
    fn from(e: HeckeError) -> Self {
        CliError::Input(e.to_string())
    }
}

impl From<CharError> for CliError {
    fn from(e: CharError) -> Self {
        match e {
            CharError::Coxeter(e) => e.into(),
            CharError::Hecke(e) => e.into(),
            CharError::NotDihedral => CliError::Input(e.to_string()),
            other => CliError::Failed { message: other.to_string(), witness: json!({"error": other.to_string()}) },
        }
    }
}

impl From<LabError> for CliError {
    fn from(e: LabError) -> Self {
        match e {
            LabError::EmptySet
            | LabError::OddCutoff(_)
            | LabError::BeyondCutoff { .. }
            | LabError::Precondition(_) => CliError::Input(e.to_string()),
            LabError::Coxeter(e) => e.into(),
            LabError::Char(e) => e.into(),
            other => CliError::Failed { message: other.to_string(), witness: json!({"error": other.to_string()}) },
        }
    }
}

/// Successful output: text, JSON, and whether all checks passed.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub pass: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Self { text, json, pass: true }
    }
}

fn load_system(cli: &Cli) -> Result<Arc<CoxeterSystem>, CliError> {
    let matrix = match (&cli.matrix, &cli.m) {
        (Some(_), Some(_)) => return Err(CliError::Input("give either --matrix or --m".into())),
        (Some(path), None) => {
            let text = std::fs::read_to_string(path)
                .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
            CoxeterMatrix::from_json(&text)?
        }
        (None, Some(m)) => CoxeterMatrix::dihedral(parse_m(m)?)?,
        (None, None) => return Err(CliError::Input("a Coxeter system is required: --matrix FILE or --m M".into())),
    };
    Ok(CoxeterSystem::new(matrix)?)
}

fn parse_m(m: &str) -> Result<Option<u32>, CliError> {
    match m {
        "inf" | "infinity" | "0" => Ok(None),
        _ => m
            .parse::<u32>()
            .ok()
            .filter(|&m| m >= 2)
            .map(Some)
            .ok_or_else(|| CliError::Input(format!("invalid dihedral order `{m}`"))),
    }
}

struct Session {
    sys: Arc<CoxeterSystem>,
    hecke: Hecke,
    cache: Option<KlCache>,
}

impl Session {
    fn new(cli: &Cli) -> Result<Self, CliError> {
        let sys = load_system(cli)?;
        let hecke = Hecke::new(sys.clone());
        let cache = if cli.no_cache { None } else { cache::default_path().map(KlCache::open) };
        Ok(Self { sys, hecke, cache })
    }

    fn element(&self, word: &str) -> Result<Element, CliError> {
        Ok(self.sys.parse_element(word)?)
    }

    /// Makes `C'_x` available, from the cache when possible.
    fn prepare(&mut self, x: Element) {
        if let Some(cache) = &mut self.cache {
            if !cache.load_into(&self.hecke, x) {
                if let Err(e) = cache.store(&self.hecke, x) {
                    eprintln!("warning: cannot write cache {}: {e}", cache.path().display());
                }
            }
        }
    }

    fn pairs_json(&self, h: &crate::hecke::HeckeElt) -> Value {
        json!(self.hecke.to_word_pairs(h))
    }
}

fn bs_object(sys: &CoxeterSystem, word: &str, shift: Option<i32>) -> Result<BSObject, CliError> {
    let w = sys.parse_word(word)?;
    let n = shift.unwrap_or(w.len() as i32);
    Ok(BSObject::new(w, n))
}

fn failed_suite(report: &SuiteReport) -> CliError {
    CliError::Failed {
        message: format!("suite {} failed with {} failure(s)", report.suite, report.failures.len()),
        witness: serde_json::to_value(report).expect("report serializes"),
    }
}

fn suite_text(report: &SuiteReport) -> String {
    let mut lines = Vec::new();
    for case in &report.cases {
        lines.push(format!("{}: {}", report.suite, case));
    }
    lines.push(format!("{}: {}", report.suite, if report.pass { "pass" } else { "FAIL" }));
    for f in &report.failures {
        lines.push(format!("  failure: {f}"));
    }
    lines.join("\n")
}

fn run_verify(cli: &Cli, suite: Suite, count: Option<usize>, max_len: Option<usize>, seed: u64) -> Result<Outcome, CliError> {
    let explicit = cli.matrix.is_some() || cli.m.is_some();
    let chosen = || load_system(cli).map(|s| vec![s]);
    let report = match suite {
        Suite::Dihedral => {
            let ms = match &cli.m {
                Some(m) => vec![parse_m(m)?],
                None if cli.matrix.is_some() => {
                    return Err(CliError::Input("the dihedral suite takes --m".into()));
                }
                None => vec![Some(2), Some(3), Some(4), Some(5), Some(6), None],
            };
            suites::dihedral(&ms, max_len)?
        }
        Suite::Hom => {
            let sys = if explicit { load_system(cli)? } else { suites::dihedral_system(None) };
            suites::hom(&sys, count.unwrap_or(200), max_len.unwrap_or(6), seed)
        }
        Suite::Leftinv => {
            let systems = if explicit {
                chosen()?
            } else {
                vec![suites::dihedral_system(Some(3)), suites::dihedral_system(None)]
            };
            suites::leftinv(&systems, count.unwrap_or(100), seed)?
        }
        Suite::Positivity => {
            let systems = if explicit {
                chosen()?
            } else {
                let mut v: Vec<_> = (2..=8).map(|m| suites::dihedral_system(Some(m))).collect();
                v.push(suites::dihedral_system(None));
                v.push(suites::s4_system());
                v
            };
            suites::positivity(&systems, max_len.unwrap_or(6))
        }
        Suite::S4 => suites::s4(),
        Suite::Omnibus => {
            let sys = if explicit { load_system(cli)? } else { suites::dihedral_system(Some(6)) };
            suites::omnibus(&sys, max_len.unwrap_or(5))?
        }
    };
    if !report.pass {
        return Err(failed_suite(&report));
    }
    Ok(Outcome::ok(suite_text(&report), serde_json::to_value(&report).expect("report serializes")))
}

fn build_rep(sys: &CoxeterSystem, rep: &str) -> Result<ReflectionRep, CliError> {
    if rep == "permutation" {
        let n = sys.rank() + 1;
        if *sys.matrix() != CoxeterMatrix::type_a(sys.rank())? {
            return Err(CliError::Input("the permutation representation needs the type A matrix with generators s1..sn".into()));
        }
        return Ok(ReflectionRep::permutation(n, &sys.matrix().scalar_field())?);
    }
    let kind: RepKind = rep.parse().map_err(|_| CliError::Input(format!("unknown representation `{rep}`")))?;
    Ok(match kind {
        RepKind::Geometric => sys.geometric_rep().clone(),
        RepKind::Minimal => sys.minimal_rep().clone(),
    })
}

#[allow(clippy::too_many_arguments)]
fn run_lab(
    cli: &Cli,
    check: LabCheck,
    s: Option<&str>,
    x: Option<&str>,
    y: Option<&str>,
    maxdeg: usize,
    rep: &str,
    max_len: usize,
) -> Result<Outcome, CliError> {
    let sys = load_system(cli)?;
    let lab = Lab::new(sys.clone(), Arc::new(build_rep(&sys, rep)?))?;
    let gens: Vec<usize> = match s {
        Some(name) => vec![sys.matrix().generator_index(name).ok_or_else(|| CliError::Input(format!("unknown generator `{name}`")))?],
        None => (0..sys.rank()).collect(),
    };
    let xs: Vec<Element> = match x {
        Some(w) => vec![sys.parse_element(w)?],
        None => sys.elements_up_to_length(max_len),
    };
    let ys = |xv: Element| -> Result<Vec<Element>, CliError> {
        Ok(match y {
            Some(w) => vec![sys.parse_element(w)?],
            None => match check {
                LabCheck::Homtrunc => sys.elements_up_to_length(max_len),
                _ => sys.lower_interval(xv),
            },
        })
    };
    let mut reports = Vec::new();
    match check {
        LabCheck::Er => {
            for &g in &gens {
                reports.push(lab.check_er(g, maxdeg)?);
            }
        }
        LabCheck::Midi => {
            for &xv in &xs {
                for &g in &gens {
                    reports.push(lab.check_mi_di(xv, g, maxdeg)?);
                }
            }
        }
        LabCheck::Ip => {
            for &xv in &xs {
                for yv in ys(xv)? {
                    reports.push(lab.check_ip(xv, yv, maxdeg)?);
                }
            }
        }
        LabCheck::Homtrunc => {
            for &xv in &xs {
                for yv in ys(xv)? {
                    reports.push(lab.check_homtrunc(xv, yv, maxdeg)?);
                }
            }
        }
    }
    let pass = reports.iter().all(|r| r["pass"] == json!(true));
    let text = reports
        .iter()
        .map(|r| {
            let mut head = r["check"].as_str().unwrap_or("").to_string();
            for key in ["m", "rep", "s", "x", "y"] {
                if let Some(v) = r.get(key) {
                    head.push_str(&format!(" {key}={v}"));
                }
            }
            format!("{head}: {}", if r["pass"] == json!(true) { "pass" } else { "FAIL" })
        })
        .collect::<Vec<_>>()
        .join("\n");
    let value = if reports.len() == 1 {
        reports.pop().expect("one report")
    } else {
        json!({"check": format!("{check:?}").to_lowercase(), "pass": pass, "reports": reports})
    };
    if !pass {
        return Err(CliError::Failed { message: text, witness: value });
    }
    Ok(Outcome::ok(text, value))
}

fn run_command(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Verify { suite, count, max_len, seed } => run_verify(cli, *suite, *count, *max_len, *seed),
        Command::Lab { check, s, x, y, maxdeg, rep, max_len } => {
            run_lab(cli, *check, s.as_deref(), x.as_deref(), y.as_deref(), *maxdeg, rep, *max_len)
        }
        _ => run_query(cli),
    }
}

fn run_query(cli: &Cli) -> Result<Outcome, CliError> {
    let mut ses = Session::new(cli)?;
    match &cli.command {
        Command::Kl { x, y } => {
            let (xe, ye) = (ses.element(x)?, ses.element(y)?);
            ses.prepare(xe);
            let p = ses.hecke.kl_polynomial(ye, xe);
            let text = format_q_poly(&p);
            let coeffs: Vec<String> = p.iter().map(ToString::to_string).collect();
            Ok(Outcome::ok(
                format!("P_{{[{y}],[{x}]}} = {text}"),
                json!({"x": ses.sys.word_string(xe), "y": ses.sys.word_string(ye), "P": text, "coeffs": coeffs}),
            ))
        }
        Command::Cprime { x } => {
            let xe = ses.element(x)?;
            ses.prepare(xe);
            let c = ses.hecke.kl_basis(xe);
            Ok(Outcome::ok(
                format!("C'_[{}] = {}", ses.sys.word_string(xe), ses.hecke.format(&c)),
                json!({"x": ses.sys.word_string(xe), "cprime": ses.pairs_json(&c)}),
            ))
        }
        Command::Mu { x, y } => {
            let (xe, ye) = (ses.element(x)?, ses.element(y)?);
            ses.prepare(xe);
            let mu = ses.hecke.mu(ye, xe);
            Ok(Outcome::ok(
                format!("mu([{y}],[{x}]) = {mu}"),
                json!({"x": ses.sys.word_string(xe), "y": ses.sys.word_string(ye), "mu": mu.to_string()}),
            ))
        }
        Command::BsChar { word, shift } => {
            let b = bs_object(&ses.sys, word, *shift)?;
            let delta = chars::bs_character(&ses.hecke, &b);
            let nabla = chars::bs_character_nabla(&ses.hecke, &b);
            Ok(Outcome::ok(
                format!("delta: {}\nnabla: {}", ses.hecke.format(&delta), ses.hecke.format(&nabla)),
                json!({"word": ses.sys.format_word(&b.word), "shift": b.shift,
                       "delta": ses.pairs_json(&delta), "nabla": ses.pairs_json(&nabla)}),
            ))
        }
        Command::BsDecompose { word, shift } => {
            let b = bs_object(&ses.sys, word, *shift)?;
            let class = chars::decompose_bs(&ses.hecke, &b)?;
            let text = class
                .sorted(&ses.hecke)
                .into_iter()
                .map(|(x, p)| {
                    let name = format!("B_{{{}}}", ses.sys.word_string(x));
                    if p.is_one() { name } else { format!("({p}) {name}") }
                })
                .collect::<Vec<_>>()
                .join(" ⊕ ");
            let text = if text.is_empty() { "0".into() } else { text };
            Ok(Outcome::ok(text, chars::decomposition_json(&ses.hecke, &b, &class)))
        }
        Command::HomRank { left, right } => {
            let hm = expr::parse_hecke_element(&ses.hecke, left).map_err(CliError::Input)?;
            let hn = expr::parse_hecke_element(&ses.hecke, right).map_err(CliError::Input)?;
            let r = chars::hom_rank(&ses.hecke, &hm, &hn)?;
            Ok(Outcome::ok(r.to_string(), json!({"left": left, "right": right, "hom_rank": r.to_string()})))
        }
        Command::ExpressBwords { elt } => {
            let h = expr::parse_hecke_element(&ses.hecke, elt).map_err(CliError::Input)?;
            let terms = chars::express_in_bwords(&ses.hecke, &h)?;
            let text = terms
                .iter()
                .map(|t| format!("{} * v^{} b[{}]", t.coeff, t.shift, ses.sys.format_word(&t.word)))
                .collect::<Vec<_>>()
                .join("\n");
            let json_terms: Vec<Value> = terms
                .iter()
                .map(|t| json!({"coeff": t.coeff.to_string(), "shift": t.shift, "word": ses.sys.format_word(&t.word)}))
                .collect();
            Ok(Outcome::ok(if text.is_empty() { "0".into() } else { text }, json!({"elt": elt, "terms": json_terms})))
        }
        Command::Verify { .. } | Command::Lab { .. } => unreachable!("handled by run_command"),
    }
}

/// Parses `args` (including the program name), runs, writes to `out`/`err`
/// and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = e.exit_code();
            let rendered = e.render().to_string();
            if code == 0 {
                let _ = write!(out, "{rendered}");
            } else {
                let _ = write!(err, "{rendered}");
            }
            return code;
        }
    };
    match run_command(&cli) {
        Ok(outcome) => {
            let body = if cli.json { serde_json::to_string_pretty(&outcome.json).expect("json") } else { outcome.text };
            let _ = writeln!(out, "{body}");
            if outcome.pass { 0 } else { 1 }
        }
        Err(e) => {
            if cli.json {
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&e.to_json()).expect("json"));
            } else {
                let _ = writeln!(err, "error: {}", e.message());
            }
            e.exit_code()
        }
    }
}
