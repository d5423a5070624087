//! Command-line front end for `coxeter-core`.
//!
//! [`run`] parses arguments, executes one subcommand and returns the exit
//! status together with everything that should be written to stdout and
//! stderr, so the binary is a thin wrapper and tests can call it directly.

pub mod system_file;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use coxeter_core::certificate::parse_steps;
use coxeter_core::kappa::{CompletenessBasis, ConjugacyOptions, ConjugacyStatus, ConjugacyWitness};
use coxeter_core::oracle::{self, GeometricRep};
use coxeter_core::straight::StraightnessWitness;
use coxeter_core::{CoxeterSystem, Element, GeneratorSet, MoveCertificate, Word};
use serde::Serialize;
use serde_json::{json, Value};
use thiserror::Error;

pub use system_file::{parse_system_file, SystemFileError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_CAP: i32 = 2;
pub const EXIT_UNKNOWN: i32 = 3;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    SystemFile {
        path: String,
        source: SystemFileError,
    },

    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },

    #[error("`{input}`: {source}")]
    Input {
        input: String,
        source: coxeter_core::Error,
    },

    #[error("{0}")]
    Engine(#[from] coxeter_core::Error),

    #[error("{0}")]
    Usage(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Engine(coxeter_core::Error::CapExceeded { .. })
            | CliError::Input {
                source: coxeter_core::Error::CapExceeded { .. },
                ..
            } => EXIT_CAP,
            _ => EXIT_USAGE,
        }
    }
}

#[derive(Parser, Debug)]
#[command(
    name = "coxeter",
    version,
    about = "Word problem, conjugacy and straightness in Coxeter groups"
)]
struct Cli {
    /// System definition file.
    #[arg(long, global = true, value_name = "FILE")]
    matrix: Option<PathBuf>,

    /// Print one JSON object per line.
    #[arg(long, global = true)]
    json: bool,

    /// Node cap for closure searches.
    #[arg(long, global = true, value_name = "N")]
    cap: Option<usize>,

    /// Sign tolerance of the geometric oracle.
    #[arg(long, global = true, value_name = "X")]
    tolerance: Option<f64>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct WordArg {
    /// A word, as one string or as separate generator tokens.
    #[arg(required = true, num_args = 1.., value_name = "WORD")]
    tokens: Vec<String>,
}

impl WordArg {
    fn text(&self) -> String {
        self.tokens.join(" ")
    }
}

#[derive(Args, Debug)]
struct SetArg {
    /// A generator subset such as `{s,t}`, `st` or `{}`.
    #[arg(value_name = "SET")]
    set: String,
}

#[derive(Args, Debug)]
struct PairArg {
    #[arg(value_name = "WORD1")]
    left: String,
    #[arg(value_name = "WORD2")]
    right: String,
}

#[derive(Args, Debug)]
struct WordCountArg {
    #[arg(value_name = "WORD")]
    word: String,
    #[arg(value_name = "N")]
    count: u64,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Shortlex normal form of the element a word represents.
    Reduce(WordArg),
    /// Length of the element a word represents.
    Length(WordArg),
    /// Whether a word is reduced.
    IsReduced(WordArg),
    /// Shortlex-least word in the braid class of a reduced word.
    Canonical(WordArg),
    /// Product of two elements.
    Mult(PairArg),
    Inverse(WordArg),
    /// Integer power of an element.
    Power {
        #[arg(value_name = "WORD")]
        word: String,
        #[arg(value_name = "N", allow_negative_numbers = true)]
        exponent: i64,
    },
    /// Generators occurring in any reduced word.
    Support(WordArg),
    /// Left and right descent sets.
    Descents(WordArg),
    IsSpherical(SetArg),
    /// Diagram components of a subset with their finite types.
    Components(SetArg),
    /// Standard parabolic closure of an element.
    Closure(WordArg),
    IsCyclicallyReduced(WordArg),
    /// Minimal-length κ-related conjugate, with a move certificate.
    CyclicReduce(WordArg),
    /// All elements κ-related to an element.
    KappaClass(WordArg),
    /// Minimal-length elements of the κ-class.
    MinStratum(WordArg),
    IsConjugate {
        #[command(flatten)]
        pair: PairArg,
        /// Fall back to an exhaustive conjugator search.
        #[arg(long)]
        brute_force: bool,
        /// Longest conjugator tried by the fallback.
        #[arg(long, value_name = "N")]
        conjugator_cap: Option<usize>,
    },
    IsFiniteOrder(WordArg),
    /// Property (Cent') for a cyclically reduced element.
    CentPrime(WordArg),
    IsTorsionFree(WordArg),
    /// Split an element normalising W_I into W_I and N_I parts.
    NormaliserDecompose {
        #[arg(value_name = "WORD")]
        word: String,
        #[arg(value_name = "SET")]
        set: String,
    },
    IsStraight(WordArg),
    /// Lengths of the first N powers.
    PowerProfile(WordCountArg),
    IsFc(WordArg),
    IsCfc(WordArg),
    /// Straightness of a CFC element via its parabolic closure.
    CfcStraight(WordArg),
    /// Whether Coxeter elements of the system are straight.
    CoxeterStraight,
    /// Reducedness by root positivity in the geometric representation.
    OracleIsReduced(WordArg),
    /// All elements up to a given length.
    Enumerate {
        #[arg(value_name = "MAX_LEN")]
        max_len: usize,
    },
    /// Conjugates by all elements up to a given length.
    BruteClass(WordCountArg),
    /// Smallest n up to a cap with w^n = 1.
    BruteOrder(WordCountArg),
    /// Replay a certificate file from a start word and print where it ends.
    Replay {
        #[arg(value_name = "START")]
        start: String,
        #[arg(value_name = "CERTIFICATE")]
        certificate: PathBuf,
        /// Fail unless the replay ends at this word.
        #[arg(long, value_name = "WORD")]
        end: Option<String>,
    },
}

/// Exit status and captured output of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize, Debug, Clone)]
struct CertificateOut {
    start: String,
    end: String,
    steps: Vec<String>,
}

#[derive(Debug, Default)]
struct Report {
    result: Value,
    lines: Vec<String>,
    witness: Option<String>,
    basis: Option<String>,
    certificates: Vec<CertificateOut>,
    unknown: bool,
}

impl Report {
    fn value(result: Value, line: impl Into<String>) -> Self {
        Report {
            result,
            lines: vec![line.into()],
            ..Report::default()
        }
    }

    fn flag(b: bool) -> Self {
        Report::value(json!(b), b.to_string())
    }

    fn text(s: String) -> Self {
        Report::value(json!(s), s)
    }

    fn list(items: Vec<String>) -> Self {
        Report {
            result: json!(items),
            lines: items,
            ..Report::default()
        }
    }
}

#[derive(Serialize)]
struct JsonLine<'a> {
    command: &'a str,
    inputs: &'a [String],
    result: &'a Value,
    witness: Option<&'a str>,
    basis: Option<&'a str>,
    certificate: Option<&'a [CertificateOut]>,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    match execute(&cli) {
        Ok((name, inputs, report)) => {
            let stdout = if cli.json {
                let line = JsonLine {
                    command: name,
                    inputs: &inputs,
                    result: &report.result,
                    witness: report.witness.as_deref(),
                    basis: report.basis.as_deref(),
                    certificate: (!report.certificates.is_empty())
                        .then_some(&report.certificates[..]),
                };
                format!(
                    "{}\n",
                    serde_json::to_string(&line).expect("report serialises")
                )
            } else {
                render_text(&report)
            };
            let code = if report.unknown {
                EXIT_UNKNOWN
            } else {
                EXIT_OK
            };
            Outcome {
                code,
                stdout,
                stderr: String::new(),
            }
        }
        Err(e) => Outcome {
            code: e.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

fn render_text(report: &Report) -> String {
    let mut out = String::new();
    for line in &report.lines {
        out.push_str(line);
        out.push('\n');
    }
    if let Some(w) = &report.witness {
        out.push_str(&format!("witness: {w}\n"));
    }
    if let Some(b) = &report.basis {
        out.push_str(&format!("basis: {b}\n"));
    }
    for cert in &report.certificates {
        out.push_str(&format!("# certificate {} -> {}\n", cert.start, cert.end));
        for step in &cert.steps {
            out.push_str(step);
            out.push('\n');
        }
    }
    out
}

pub fn load_system(path: &Path) -> Result<CoxeterSystem, CliError> {
    let shown = path.display().to_string();
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: shown.clone(),
        source,
    })?;
    let matrix = parse_system_file(&text).map_err(|source| CliError::SystemFile {
        path: shown,
        source,
    })?;
    Ok(CoxeterSystem::new(matrix))
}

struct Context {
    system: CoxeterSystem,
    tolerance: Option<f64>,
    inputs: Vec<String>,
}

impl Context {
    fn input<T>(
        &mut self,
        text: &str,
        parse: impl FnOnce(&CoxeterSystem, &str) -> coxeter_core::Result<T>,
    ) -> Result<T, CliError> {
        self.inputs.push(text.to_string());
        parse(&self.system, text).map_err(|source| CliError::Input {
            input: text.to_string(),
            source,
        })
    }

    fn element(&mut self, text: &str) -> Result<Element, CliError> {
        self.input(text, |s, t| s.element(t))
    }

    fn word(&mut self, text: &str) -> Result<Word, CliError> {
        self.input(text, |s, t| s.parse_word(t))
    }

    fn set(&mut self, text: &str) -> Result<GeneratorSet, CliError> {
        self.input(text, |s, t| s.matrix().parse_set(t))
    }

    fn fmt(&self, e: &Element) -> String {
        self.system.format(e)
    }

    /// Formats `e` as the least rotation of the reduced word `typed` that
    /// represents it, and canonically when there is none.
    fn fmt_near(&self, typed: &Word, e: &Element) -> Result<String, CliError> {
        let mut best: Option<Word> = None;
        if typed.len() == e.length() {
            for rotation in self.system.rotations(typed) {
                if self.system.reduce(&rotation)? == *e
                    && best.as_ref().is_none_or(|b| rotation < *b)
                {
                    best = Some(rotation);
                }
            }
        }
        Ok(best.map_or_else(|| self.fmt(e), |w| self.system.matrix().format_word(&w)))
    }

    fn fmt_set(&self, set: GeneratorSet) -> String {
        self.system.matrix().format_set(set)
    }

    fn certificate(&self, cert: &MoveCertificate) -> CertificateOut {
        let m = self.system.matrix();
        CertificateOut {
            start: m.format_word(&cert.start),
            end: m.format_word(&cert.end),
            steps: cert.steps.iter().map(|s| s.to_text(m)).collect(),
        }
    }

    fn elements(&self, items: &[Element]) -> Report {
        Report::list(items.iter().map(|e| self.fmt(e)).collect())
    }
}

fn command_name(command: &Command) -> &'static str {
    match command {
        Command::Reduce(_) => "reduce",
        Command::Length(_) => "length",
        Command::IsReduced(_) => "is-reduced",
        Command::Canonical(_) => "canonical",
        Command::Mult(_) => "mult",
        Command::Inverse(_) => "inverse",
        Command::Power { .. } => "power",
        Command::Support(_) => "support",
        Command::Descents(_) => "descents",
        Command::IsSpherical(_) => "is-spherical",
        Command::Components(_) => "components",
        Command::Closure(_) => "closure",
        Command::IsCyclicallyReduced(_) => "is-cyclically-reduced",
        Command::CyclicReduce(_) => "cyclic-reduce",
        Command::KappaClass(_) => "kappa-class",
        Command::MinStratum(_) => "min-stratum",
        Command::IsConjugate { .. } => "is-conjugate",
        Command::IsFiniteOrder(_) => "is-finite-order",
        Command::CentPrime(_) => "cent-prime",
        Command::IsTorsionFree(_) => "is-torsion-free",
        Command::NormaliserDecompose { .. } => "normaliser-decompose",
        Command::IsStraight(_) => "is-straight",
        Command::PowerProfile(_) => "power-profile",
        Command::IsFc(_) => "is-fc",
        Command::IsCfc(_) => "is-cfc",
        Command::CfcStraight(_) => "cfc-straight",
        Command::CoxeterStraight => "coxeter-straight",
        Command::OracleIsReduced(_) => "oracle-is-reduced",
        Command::Enumerate { .. } => "enumerate",
        Command::BruteClass(_) => "brute-class",
        Command::BruteOrder(_) => "brute-order",
        Command::Replay { .. } => "replay",
    }
}

fn execute(cli: &Cli) -> Result<(&'static str, Vec<String>, Report), CliError> {
    let name = command_name(&cli.command);
    let path = cli
        .matrix
        .as_deref()
        .ok_or_else(|| CliError::Usage(format!("`{name}` needs --matrix FILE")))?;
    let mut system = load_system(path)?;
    if let Some(cap) = cli.cap {
        system = system.with_node_cap(cap);
    }
    if let Some(t) = cli.tolerance {
        if !(t.is_finite() && t > 0.0) {
            return Err(CliError::Usage(format!(
                "tolerance must be a positive number, got {t}"
            )));
        }
    }
    let mut cx = Context {
        system,
        tolerance: cli.tolerance,
        inputs: Vec::new(),
    };
    let report = dispatch(&mut cx, &cli.command)?;
    Ok((name, cx.inputs, report))
}

fn dispatch(cx: &mut Context, command: &Command) -> Result<Report, CliError> {
    Ok(match command {
        Command::Reduce(w) => {
            let e = cx.element(&w.text())?;
            Report::text(cx.fmt(&e))
        }
        Command::Length(w) => {
            let e = cx.element(&w.text())?;
            Report::value(json!(e.length()), e.length().to_string())
        }
        Command::IsReduced(w) => {
            let word = cx.word(&w.text())?;
            Report::flag(cx.system.is_reduced(&word)?)
        }
        Command::Canonical(w) => {
            let word = cx.word(&w.text())?;
            let canonical = cx.system.canonical(&word)?;
            Report::text(cx.system.matrix().format_word(&canonical))
        }
        Command::Mult(p) => {
            let x = cx.element(&p.left)?;
            let y = cx.element(&p.right)?;
            let product = cx.system.multiply(&x, &y)?;
            Report::text(cx.fmt(&product))
        }
        Command::Inverse(w) => {
            let e = cx.element(&w.text())?;
            let inv = cx.system.inverse(&e)?;
            Report::text(cx.fmt(&inv))
        }
        Command::Power { word, exponent } => {
            let e = cx.element(word)?;
            cx.inputs.push(exponent.to_string());
            let p = cx.system.power(&e, *exponent)?;
            Report::text(cx.fmt(&p))
        }
        Command::Support(w) => {
            let e = cx.element(&w.text())?;
            Report::text(cx.fmt_set(cx.system.support(&e)))
        }
        Command::Descents(w) => {
            let e = cx.element(&w.text())?;
            let (left, right) = cx.system.descents(&e)?;
            let (left, right) = (cx.fmt_set(left), cx.fmt_set(right));
            Report::value(
                json!({ "left": left, "right": right }),
                format!("left={left} right={right}"),
            )
        }
        Command::IsSpherical(s) => {
            let set = cx.set(&s.set)?;
            Report::flag(cx.system.is_spherical(set))
        }
        Command::Components(s) => {
            let set = cx.set(&s.set)?;
            components_report(cx, set)
        }
        Command::Closure(w) => {
            let e = cx.element(&w.text())?;
            let closure = cx.system.standard_parabolic_closure(&e);
            let mut report = components_report(cx, closure.members);
            let members = cx.fmt_set(closure.members);
            report.lines.insert(0, members.clone());
            report.result = json!({
                "members": members,
                "spherical": closure.spherical,
                "components": report.result,
            });
            report
        }
        Command::IsCyclicallyReduced(w) => {
            let e = cx.element(&w.text())?;
            Report::flag(cx.system.is_cyclically_reduced(&e)?)
        }
        Command::CyclicReduce(w) => {
            let e = cx.element(&w.text())?;
            let (v, cert) = cx.system.cyclic_reduce(&e)?;
            let mut report = Report::text(cx.fmt(&v));
            report.certificates.push(cx.certificate(&cert));
            report
        }
        Command::KappaClass(w) => {
            let e = cx.element(&w.text())?;
            let closure = cx.system.kappa_closure(&e)?;
            cx.elements(&closure.sorted_nodes())
        }
        Command::MinStratum(w) => {
            let e = cx.element(&w.text())?;
            let closure = cx.system.kappa_closure(&e)?;
            cx.elements(&closure.min_stratum)
        }
        Command::IsConjugate {
            pair,
            brute_force,
            conjugator_cap,
        } => {
            let u1 = cx.element(&pair.left)?;
            let u2 = cx.element(&pair.right)?;
            let options = ConjugacyOptions {
                brute_force: *brute_force,
                conjugator_cap: *conjugator_cap,
            };
            let verdict = cx.system.are_conjugate(&u1, &u2, options)?;
            let status = match verdict.status {
                ConjugacyStatus::Conjugate => "conjugate",
                ConjugacyStatus::NotConjugate => "not-conjugate",
                ConjugacyStatus::Unknown => "unknown",
            };
            let mut report = Report::text(status.to_string());
            report.unknown = verdict.status == ConjugacyStatus::Unknown;
            report.basis = verdict.basis.map(|b| {
                match b {
                    CompletenessBasis::CentPrimeInfiniteOrder => "cent-prime-infinite-order",
                    CompletenessBasis::BruteForce => "brute-force",
                }
                .to_string()
            });
            match verdict.witness {
                Some(ConjugacyWitness::Moves { left, right }) => {
                    report.witness = Some(format!(
                        "common element {}",
                        cx.system.matrix().format_word(&left.end)
                    ));
                    report.certificates.push(cx.certificate(&left));
                    report.certificates.push(cx.certificate(&right));
                }
                Some(ConjugacyWitness::Conjugator(v)) => {
                    report.witness = Some(format!("conjugator {}", cx.fmt(&v)));
                }
                None => {}
            }
            report
        }
        Command::IsFiniteOrder(w) => {
            let e = cx.element(&w.text())?;
            let order = cx.system.order(&e)?;
            let mut report = Report::flag(order.is_some());
            report.witness = order.map(|n| format!("order {n}"));
            report
        }
        Command::CentPrime(w) => {
            let e = cx.element(&w.text())?;
            Report::flag(cx.system.has_cent_prime(&e)?)
        }
        Command::IsTorsionFree(w) => {
            let e = cx.element(&w.text())?;
            let witness = cx.system.torsion_witness(&e)?;
            let mut report = Report::flag(witness.is_none());
            report.witness = witness.map(|set| format!("I={}", cx.fmt_set(set)));
            report
        }
        Command::NormaliserDecompose { word, set } => {
            let e = cx.element(word)?;
            let set = cx.set(set)?;
            let d = cx.system.normaliser_decomposition(&e, set)?;
            let (torsion, straight) = (cx.fmt(&d.torsion_part), cx.fmt(&d.straight_part));
            Report::value(
                json!({ "subset": cx.fmt_set(set), "torsion_part": torsion, "straight_part": straight }),
                format!("({torsion}, {straight})"),
            )
        }
        Command::IsStraight(w) => {
            let e = cx.element(&w.text())?;
            let typed = cx.system.parse_word(&w.text())?;
            let verdict = cx.system.is_straight(&e)?;
            let mut report = Report::flag(verdict.straight);
            report.witness = match &verdict.witness {
                StraightnessWitness::NoWitness => None,
                StraightnessWitness::ShorterConjugate {
                    element,
                    certificate,
                } => {
                    report.certificates.push(cx.certificate(certificate));
                    Some(format!("shorter conjugate {}", cx.fmt(element)))
                }
                StraightnessWitness::NonTorsionFreeMember { element, subset } => {
                    let shown = cx.fmt_near(&typed, element)?;
                    Some(format!(
                        "non-torsion-free member {shown}, I={}",
                        cx.fmt_set(*subset)
                    ))
                }
                StraightnessWitness::PowerDefect { power, length } => {
                    Some(format!("power defect: length of power {power} is {length}"))
                }
            };
            report
        }
        Command::PowerProfile(a) => {
            let e = cx.element(&a.word)?;
            cx.inputs.push(a.count.to_string());
            let profile = cx.system.power_length_profile(&e, a.count as usize)?;
            let line = profile
                .iter()
                .map(usize::to_string)
                .collect::<Vec<_>>()
                .join(" ");
            Report::value(json!(profile), line)
        }
        Command::IsFc(w) => {
            let e = cx.element(&w.text())?;
            Report::flag(cx.system.is_fc(&e)?)
        }
        Command::IsCfc(w) => {
            let e = cx.element(&w.text())?;
            Report::flag(cx.system.is_cfc(&e)?)
        }
        Command::CfcStraight(w) => {
            let e = cx.element(&w.text())?;
            Report::flag(cx.system.cfc_straight(&e)?)
        }
        Command::CoxeterStraight => Report::flag(cx.system.coxeter_straight()),
        Command::OracleIsReduced(w) => {
            let word = cx.word(&w.text())?;
            let mut rep = GeometricRep::new(cx.system.matrix());
            if let Some(t) = cx.tolerance {
                rep = rep.with_tolerance(t);
            }
            Report::flag(rep.is_reduced(&word)?)
        }
        Command::Enumerate { max_len } => {
            cx.inputs.push(max_len.to_string());
            let (elements, complete) = oracle::enumerate_with_completeness(&cx.system, *max_len)?;
            let mut report = cx.elements(&elements);
            if complete {
                report.witness = Some(format!("whole group, {} elements", elements.len()));
            }
            report
        }
        Command::BruteClass(a) => {
            let e = cx.element(&a.word)?;
            cx.inputs.push(a.count.to_string());
            let class = oracle::conjugacy_class_bruteforce(&cx.system, &e, a.count as usize)?;
            cx.elements(&class)
        }
        Command::BruteOrder(a) => {
            let e = cx.element(&a.word)?;
            cx.inputs.push(a.count.to_string());
            match oracle::order_bruteforce(&cx.system, &e, a.count)? {
                Some(n) => Report::value(json!(n), n.to_string()),
                None => Report::value(Value::Null, "none"),
            }
        }
        Command::Replay {
            start,
            certificate,
            end,
        } => {
            let start_word = cx.word(start)?;
            let shown = certificate.display().to_string();
            cx.inputs.push(shown.clone());
            let text = std::fs::read_to_string(certificate).map_err(|source| CliError::Io {
                path: shown.clone(),
                source,
            })?;
            let steps =
                parse_steps(cx.system.matrix(), &text).map_err(|source| CliError::Input {
                    input: shown,
                    source,
                })?;
            let reached =
                coxeter_core::certificate::replay(cx.system.matrix(), &start_word, &steps)?;
            let reached_text = cx.system.matrix().format_word(&reached);
            if let Some(end) = end {
                let expected = cx.word(end)?;
                if expected != reached {
                    return Err(CliError::Usage(format!(
                        "replay ends at `{reached_text}`, expected `{end}`"
                    )));
                }
            }
            Report::text(reached_text)
        }
    })
}

fn components_report(cx: &Context, set: GeneratorSet) -> Report {
    let subset = cx.system.subset(set);
    let mut lines = Vec::new();
    let mut values = Vec::new();
    for (component, kind) in subset.components.iter().zip(&subset.types) {
        let members = cx.fmt_set(*component);
        let kind = kind.map(|t| t.to_string());
        lines.push(format!(
            "{members} {}",
            kind.as_deref().unwrap_or("infinite")
        ));
        values.push(json!({ "members": members, "type": kind }));
    }
    Report {
        result: json!(values),
        lines,
        ..Report::default()
    }
}
