//! The `malcev` command line.
//!
//! Inputs are JSON files in the [`crate::io`] format, or `fixture-NAME` for a
//! built-in fixture. Exit status: 0 every verdict passes, 1 an identity is
//! violated, 2 the input is unusable, 3 two independent routes to the same
//! verdict disagree (tensor and operator forms of the MYBE, for instance).

use std::path::PathBuf;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::algebra::{
    check_alternative, check_left_alternative, check_malcev, check_pre_alternative, check_pre_malcev,
    check_right_alternative, commutator_superalgebra, pre_malcev_from_pre_alternative, sum_pre_alternative, Superalgebra,
    MUL, PREC, SUCC,
};
use crate::error::{Error, Result};
use crate::io::{self, Document};
use crate::modules::{
    check_alternative_bimodule, check_malcev_representation, dual_representation, rep_from_bimodule, semidirect_alternative,
    semidirect_malcev,
};
use crate::operators::{
    check_o_operator_alternative, check_o_operator_malcev, check_rota_baxter, check_symplectic,
    compatible_pre_malcev_from_rota_baxter, pre_alternative_from_o_operator, pre_malcev_from_o_operator,
    pre_malcev_from_rota_baxter, pre_malcev_from_symplectic, RbVariant,
};
use crate::report::{set_witness_limit, ViolationReport, DEFAULT_WITNESS_LIMIT};
use crate::yangbaxter::{canonical_r, check_operator_form, mybe_report, r_from_o_operator, symplectic_from_r, MybeCandidate};

pub const EXIT_PASS: i32 = 0;
pub const EXIT_VIOLATION: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_DISAGREEMENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "malcev", version, about = "Exact checks and constructions for Malcev-type superalgebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Emit the report as JSON.
    #[arg(long, global = true)]
    pub json: bool,
    /// Include wall-clock time in the report.
    #[arg(long, global = true)]
    pub timing: bool,
    /// Write the constructed document here.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Cap on witnesses listed per report.
    #[arg(long, global = true, default_value_t = DEFAULT_WITNESS_LIMIT)]
    pub max_witnesses: usize,
    /// Worker threads for the checkers (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run one or more identity checkers.
    Check {
        input: String,
        #[arg(long, value_enum, required = true)]
        identity: Vec<Identity>,
    },
    /// Commutator superalgebra of the product (of the sum product for two-product inputs).
    Commutator { input: String },
    /// Semidirect product with the stored representation or bimodule.
    Semidirect { input: String },
    /// Replace the stored representation by its dual.
    DualRep { input: String },
    /// O-operator check for the stored map against the stored representation or bimodule.
    OopCheck { input: String },
    /// Weight-zero Rota–Baxter check for the stored map, unsigned and signed.
    RbCheck {
        input: String,
        /// Let the signed variant decide the exit status.
        #[arg(long)]
        signed: bool,
    },
    /// Build a pre-Malcev or pre-alternative structure.
    Construct {
        input: String,
        #[arg(long, value_enum)]
        via: Via,
    },
    /// MYBE for the stored tensor, in tensor and operator form.
    MybeCheck { input: String },
    /// `r = T - σ(T)` in the double of the stored representation.
    BuildR { input: String },
    /// The canonical solution attached to a pre-Malcev product.
    CanonicalR { input: String },
    /// Symplectic form `ω(x, y) = <r⁻¹(x), y>` of the stored tensor.
    Symplectic { input: String },
    /// Every check that applies to the document.
    Report { input: String },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Identity {
    LeftAlt,
    RightAlt,
    Alternative,
    Malcev,
    PreMalcev,
    PreAlternative,
    Representation,
    Bimodule,
    Symplectic,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum Via {
    Oop,
    Rb,
    RbInv,
    Symplectic,
    PrealtOop,
}

/// Machine-readable result of one command.
#[derive(Clone, Debug, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CheckReport {
    pub command: String,
    pub verdicts: Vec<ViolationReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub agreement: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u128>,
}

impl CheckReport {
    fn new(command: &str) -> Self {
        CheckReport {
            command: command.into(),
            verdicts: Vec::new(),
            agreement: None,
            wall_time_ms: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.agreement == Some(false) {
            EXIT_DISAGREEMENT
        } else if self.verdicts.iter().all(ViolationReport::holds) {
            EXIT_PASS
        } else {
            EXIT_VIOLATION
        }
    }

    pub fn to_text(&self) -> String {
        let mut lines: Vec<String> = self.verdicts.iter().map(|v| v.to_string()).collect();
        match self.agreement {
            Some(true) => lines.push("agreement: independent routes agree".into()),
            Some(false) => lines.push("agreement: independent routes DISAGREE".into()),
            None => {}
        }
        if let Some(ms) = self.wall_time_ms {
            lines.push(format!("time: {ms} ms"));
        }
        lines.join("\n")
    }
}

/// What a command produced.
pub struct Outcome {
    pub report: CheckReport,
    pub document: Option<Document>,
    /// Exit status that overrides the verdicts, for survey commands.
    pub exit_override: Option<i32>,
}

/// Text for standard output and standard error, and the exit status.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn error(msg: impl std::fmt::Display, code: i32) -> Self {
        Output {
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
            code,
        }
    }
}

pub fn run(cli: &Cli) -> Output {
    set_witness_limit(cli.max_witnesses);
    let started = Instant::now();
    let result = match cli.threads {
        Some(n) => match rayon::ThreadPoolBuilder::new().num_threads(n).build() {
            Ok(pool) => pool.install(|| execute(&cli.command)),
            Err(e) => Err(Error::NotApplicable(format!("thread pool: {e}"))),
        },
        None => execute(&cli.command),
    };
    let mut outcome = match result {
        Ok(o) => o,
        Err(e) => return Output::error(e, EXIT_INPUT),
    };
    if cli.timing {
        outcome.report.wall_time_ms = Some(started.elapsed().as_millis());
    }
    let code = outcome.exit_override.unwrap_or_else(|| outcome.report.exit_code());
    let mut text = String::new();
    match (&outcome.document, &cli.out) {
        (Some(doc), Some(path)) => {
            if let Err(e) = std::fs::write(path, io::serialize(doc)) {
                return Output::error(e, EXIT_INPUT);
            }
        }
        (Some(doc), None) if outcome.report.verdicts.is_empty() => text.push_str(&io::serialize(doc)),
        _ => {}
    }
    if cli.json {
        text.push_str(&serde_json::to_string_pretty(&outcome.report).expect("report serializes"));
        text.push('\n');
    } else if !outcome.report.verdicts.is_empty() || outcome.report.wall_time_ms.is_some() {
        text.push_str(&outcome.report.to_text());
        text.push('\n');
    }
    Output {
        stdout: text,
        stderr: String::new(),
        code,
    }
}

/// Parses `argv` and runs it.
pub fn main_with_args<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    match Cli::try_parse_from(args) {
        Ok(cli) => run(&cli),
        Err(e) if e.use_stderr() => Output {
            stdout: String::new(),
            stderr: e.render().to_string(),
            code: EXIT_INPUT,
        },
        Err(e) => Output {
            stdout: e.render().to_string(),
            stderr: String::new(),
            code: EXIT_PASS,
        },
    }
}

fn load(input: &str) -> Result<Document> {
    if let Some(name) = input.strip_prefix("fixture-") {
        return io::builtin_fixtures()
            .remove(name)
            .ok_or_else(|| Error::NotApplicable(format!("unknown fixture {name:?}")));
    }
    io::parse_file(std::path::Path::new(input))
}

fn need<'a, T>(x: &'a Option<T>, what: &str) -> Result<&'a T> {
    x.as_ref()
        .ok_or_else(|| Error::NotApplicable(format!("input has no {what} block")))
}

fn done(report: CheckReport, document: Option<Document>) -> Result<Outcome> {
    Ok(Outcome {
        report,
        document,
        exit_override: None,
    })
}

/// The bracket carried by a document: `"mul"`, or the commutator of the sum
/// product of a pre-alternative pair.
fn main_algebra(doc: &Document) -> Result<Superalgebra> {
    if doc.algebra.has_product(MUL) {
        Ok(doc.algebra.clone())
    } else if doc.algebra.has_product(PREC) && doc.algebra.has_product(SUCC) {
        sum_pre_alternative(&doc.algebra)
    } else {
        Err(Error::UnknownProduct(MUL.into()))
    }
}

fn execute(cmd: &Command) -> Result<Outcome> {
    match cmd {
        Command::Check { input, identity } => {
            let doc = load(input)?;
            let mut rep = CheckReport::new("check");
            for id in identity {
                rep.verdicts.push(run_identity(&doc, *id)?);
            }
            done(rep, None)
        }
        Command::Commutator { input } => {
            let doc = load(input)?;
            let c = commutator_superalgebra(&main_algebra(&doc)?, MUL)?;
            done(CheckReport::new("commutator"), Some(Document::new(c)))
        }
        Command::Semidirect { input } => {
            let doc = load(input)?;
            let alg = if let Some(r) = &doc.representation {
                semidirect_malcev(r)?
            } else {
                semidirect_alternative(need(&doc.bimodule, "representation or bimodule")?)?
            };
            done(CheckReport::new("semidirect"), Some(Document::new(alg)))
        }
        Command::DualRep { input } => {
            let doc = load(input)?;
            let dual = dual_representation(need(&doc.representation, "representation")?);
            done(CheckReport::new("dual-rep"), Some(Document::new(doc.algebra.clone()).with_representation(dual)))
        }
        Command::OopCheck { input } => {
            let doc = load(input)?;
            let t = need(&doc.linear_map, "linearMap")?;
            let mut rep = CheckReport::new("oop-check");
            if let Some(r) = &doc.representation {
                rep.verdicts.push(check_o_operator_malcev(t, r)?);
            } else {
                rep.verdicts.push(check_o_operator_alternative(t, need(&doc.bimodule, "representation or bimodule")?)?);
            }
            done(rep, None)
        }
        Command::RbCheck { input, signed } => {
            let doc = load(input)?;
            let t = need(&doc.linear_map, "linearMap")?;
            let unsigned = check_rota_baxter(t, &doc.algebra, RbVariant::Unsigned)?;
            let sgn = check_rota_baxter(t, &doc.algebra, RbVariant::Signed)?;
            let decisive = if *signed { &sgn } else { &unsigned };
            let code = if decisive.holds() { EXIT_PASS } else { EXIT_VIOLATION };
            let mut rep = CheckReport::new("rb-check");
            rep.verdicts = vec![unsigned, sgn];
            Ok(Outcome {
                report: rep,
                document: None,
                exit_override: Some(code),
            })
        }
        Command::Construct { input, via } => construct(&load(input)?, *via),
        Command::MybeCheck { input } => {
            let doc = load(input)?;
            let c = MybeCandidate::new(doc.algebra.clone(), need(&doc.tensor, "tensor")?.clone())?;
            done(mybe_both(&c, "mybe-check")?, None)
        }
        Command::BuildR { input } => {
            let doc = load(input)?;
            let t = need(&doc.linear_map, "linearMap")?;
            let r = need(&doc.representation, "representation")?;
            let c = r_from_o_operator(t, r)?;
            let mut rep = CheckReport::new("build-r");
            let oop = check_o_operator_malcev(t, r)?;
            let mybe = mybe_report(&c);
            rep.agreement = Some(oop.holds() == mybe.holds());
            rep.verdicts = vec![oop, mybe];
            done(rep, Some(candidate_document(&c)))
        }
        Command::CanonicalR { input } => {
            let doc = load(input)?;
            let c = canonical_r(&doc.algebra)?;
            done(mybe_both(&c, "canonical-r")?, Some(candidate_document(&c)))
        }
        Command::Symplectic { input } => {
            let doc = load(input)?;
            let c = MybeCandidate::new(doc.algebra.clone(), need(&doc.tensor, "tensor")?.clone())?;
            let w = symplectic_from_r(&c)?;
            let mut rep = CheckReport::new("symplectic");
            let s = check_symplectic(&w, &doc.algebra)?;
            let m = mybe_report(&c);
            rep.agreement = Some(s.holds() == m.holds());
            rep.verdicts = vec![s, m];
            done(rep, Some(Document::new(doc.algebra.clone()).with_bilinear_form(w)))
        }
        Command::Report { input } => {
            let doc = load(input)?;
            let mut rep = CheckReport::new("report");
            rep.verdicts = survey(&doc)?;
            Ok(Outcome {
                report: rep,
                document: None,
                exit_override: Some(EXIT_PASS),
            })
        }
    }
}

fn candidate_document(c: &MybeCandidate) -> Document {
    Document::new(c.algebra().clone()).with_tensor(c.r().clone())
}

fn mybe_both(c: &MybeCandidate, command: &str) -> Result<CheckReport> {
    let tensor = mybe_report(c);
    let op = check_operator_form(c)?;
    let mut rep = CheckReport::new(command);
    // a non-skew tensor makes the operator form fail by definition
    if c.is_skew_supersymmetric() {
        rep.agreement = Some(tensor.holds() == op.holds());
    }
    rep.verdicts = vec![tensor, op];
    Ok(rep)
}

fn run_identity(doc: &Document, id: Identity) -> Result<ViolationReport> {
    match id {
        Identity::LeftAlt => check_left_alternative(&main_algebra(doc)?),
        Identity::RightAlt => check_right_alternative(&main_algebra(doc)?),
        Identity::Alternative => check_alternative(&main_algebra(doc)?),
        Identity::Malcev => check_malcev(&main_algebra(doc)?),
        Identity::PreMalcev => check_pre_malcev(&doc.algebra),
        Identity::PreAlternative => check_pre_alternative(&doc.algebra),
        Identity::Representation => check_malcev_representation(need(&doc.representation, "representation")?),
        Identity::Bimodule => check_alternative_bimodule(need(&doc.bimodule, "bimodule")?),
        Identity::Symplectic => check_symplectic(need(&doc.bilinear_form, "bilinearForm")?, &doc.algebra),
    }
}

fn survey(doc: &Document) -> Result<Vec<ViolationReport>> {
    let mut out = Vec::new();
    if doc.algebra.has_product(PREC) && doc.algebra.has_product(SUCC) {
        out.push(check_pre_alternative(&doc.algebra)?);
    }
    if let Ok(a) = main_algebra(doc) {
        out.push(check_alternative(&a)?);
        out.push(check_malcev(&a)?);
        if doc.algebra.has_product(MUL) {
            out.push(check_pre_malcev(&a)?);
        }
        out.push(check_malcev(&commutator_superalgebra(&a, MUL)?)?.renamed("commutator malcev"));
    }
    if let Some(r) = &doc.representation {
        out.push(check_malcev_representation(r)?);
    }
    if let Some(b) = &doc.bimodule {
        out.push(check_alternative_bimodule(b)?);
    }
    if let Some(t) = &doc.linear_map {
        if let Some(r) = doc.representation.as_ref().filter(|r| r.space() == t.domain()) {
            out.push(check_o_operator_malcev(t, r)?);
        } else if let Some(b) = doc.bimodule.as_ref().filter(|b| b.space() == t.domain()) {
            out.push(check_o_operator_alternative(t, b)?);
        }
        if t.domain() == doc.algebra.space() && doc.algebra.has_product(MUL) {
            out.push(check_rota_baxter(t, &doc.algebra, RbVariant::Unsigned)?);
            out.push(check_rota_baxter(t, &doc.algebra, RbVariant::Signed)?);
        }
    }
    if let Some(r) = &doc.tensor {
        let c = MybeCandidate::new(doc.algebra.clone(), r.clone())?;
        out.push(mybe_report(&c));
        out.push(check_operator_form(&c)?);
    }
    if let Some(w) = &doc.bilinear_form {
        out.push(check_symplectic(w, &doc.algebra)?);
    }
    Ok(out)
}

fn construct(doc: &Document, via: Via) -> Result<Outcome> {
    let mut rep = CheckReport::new("construct");
    let built = match via {
        Via::Oop => pre_malcev_from_o_operator(need(&doc.linear_map, "linearMap")?, need(&doc.representation, "representation")?)?,
        Via::Rb => pre_malcev_from_rota_baxter(need(&doc.linear_map, "linearMap")?, &doc.algebra)?,
        Via::RbInv => compatible_pre_malcev_from_rota_baxter(need(&doc.linear_map, "linearMap")?, &doc.algebra)?,
        Via::Symplectic => pre_malcev_from_symplectic(need(&doc.bilinear_form, "bilinearForm")?, &doc.algebra)?,
        Via::PrealtOop => {
            let t = need(&doc.linear_map, "linearMap")?;
            let b = need(&doc.bimodule, "bimodule")?;
            let p = pre_alternative_from_o_operator(t, b)?;
            rep.verdicts.push(check_pre_alternative(&p)?);
            let via_rep = pre_malcev_from_o_operator(t, &rep_from_bimodule(b)?)?;
            let derived = pre_malcev_from_pre_alternative(&p)?;
            let same = via_rep.product()? == derived.product()?;
            rep.agreement = Some(same);
            return done(rep, Some(Document::new(p)));
        }
    };
    rep.verdicts.push(check_pre_malcev(&built)?);
    done(rep, Some(Document::new(built)))
}
