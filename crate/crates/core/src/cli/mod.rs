//! The `plp` command line.
//!
//! Exit codes: `0` success, `1` user error (bad input, bad query, unsupported
//! request), `2` resource guard hit, `3` the program is inconsistent.

mod report;

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

pub use report::{Answer, Number, QueryReport};

use crate::compile::{self, bn_query, compile_bn, export_bn, CompileError, CompileOptions};
use crate::ground::{
    self, classify, dependency_graph, ClassKind, GroundError, GroundOptions, GroundProgram, ProgramClass,
};
use crate::infer::{self, program_for_choice, total_choices, Conditional, InferError, Limits, TotalChoice};
use crate::models::{
    self, exhaustive_stable_models, stable_models, unresolved_atoms, well_founded_model, Event, ModelError,
};
use crate::prob::{self, Prob};
use crate::syntax::{parse_program, parse_query, Assignments, Program};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USER: i32 = 1;
pub const EXIT_RESOURCE: i32 = 2;
pub const EXIT_INCONSISTENT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "plp", version, about = "Exact inference for probabilistic normal logic programs")]
pub struct CliConfig {
    #[command(subcommand)]
    pub command: Command,
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub machine: bool,
    /// Leave timing out of query reports, making output byte-stable.
    #[arg(long, global = true)]
    pub no_timing: bool,
    /// Largest number of ground probabilistic facts to enumerate.
    #[arg(long, global = true, env = "PLP_MAX_CHOICES", default_value_t = infer::DEFAULT_MAX_CHOICES)]
    pub max_choices: usize,
    /// Largest number of ground rule instances the grounder may produce.
    #[arg(long, global = true, env = "PLP_MAX_GROUND_RULES", default_value_t = ground::DEFAULT_MAX_GROUND_RULES)]
    pub max_ground_rules: usize,
    /// Largest number of undetermined atoms for the brute-force model oracle used by --cross-check.
    #[arg(long, global = true, env = "PLP_ORACLE_LIMIT", default_value_t = models::DEFAULT_ORACLE_LIMIT)]
    pub oracle_limit: usize,
    /// Recompute answers with independent oracles and fail on disagreement.
    #[arg(long, global = true)]
    pub cross_check: bool,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a program and report diagnostics.
    Check { file: PathBuf },
    /// Print the ground program.
    Ground {
        file: PathBuf,
        /// Write to this file instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Report whether the ground program is acyclic, stratified or general.
    Classify { file: PathBuf },
    /// Print the stable models (or the well-founded model) for one total choice.
    Models {
        file: PathBuf,
        /// One bit per ground probabilistic fact, `1` for kept, in declaration order.
        #[arg(long)]
        choice: Option<String>,
        /// Print the well-founded model instead.
        #[arg(long)]
        wf: bool,
    },
    /// Compute P(q | e).
    Query {
        file: PathBuf,
        /// Query assignments, e.g. `wins(b)` or `cold=undefined, a=true`.
        #[arg(long = "q")]
        q: String,
        /// Evidence assignments; empty means none.
        #[arg(long = "e")]
        e: Option<String>,
        #[arg(long, value_enum, default_value_t = Semantics::Auto)]
        semantics: Semantics,
        /// Answer YES when the probability (the lower one under credal semantics)
        /// exceeds this threshold, NO otherwise or when the evidence is impossible.
        #[arg(long)]
        gamma: Option<String>,
    },
    /// Check that every total choice has a stable model.
    Consistency { file: PathBuf },
    /// Compile an acyclic program to a Bayesian network and print it.
    ExportBn {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Semantics {
    Credal,
    Wf,
    /// A single probability for acyclic or stratified programs; refuses general ones.
    Auto,
}

#[derive(Debug)]
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn user(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USER, message: message.into() }
    }
}

impl From<GroundError> for Failure {
    fn from(e: GroundError) -> Self {
        Failure { code: EXIT_RESOURCE, message: e.to_string() }
    }
}

impl From<ModelError> for Failure {
    fn from(e: ModelError) -> Self {
        let code = match e {
            ModelError::OracleLimit { .. } => EXIT_RESOURCE,
            ModelError::NotDefinite(_) => EXIT_USER,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<CompileError> for Failure {
    fn from(e: CompileError) -> Self {
        let code = match e {
            CompileError::NotAcyclic { .. } => EXIT_USER,
            CompileError::TooManyParents { .. } | CompileError::TooManyRoots { .. } => EXIT_RESOURCE,
        };
        Failure { code, message: e.to_string() }
    }
}

struct Ctx<'a> {
    cfg: &'a CliConfig,
    out: &'a mut dyn Write,
    err: &'a mut dyn Write,
}

impl Ctx<'_> {
    fn limits(&self) -> Limits {
        Limits { max_choices: self.cfg.max_choices }
    }

    fn warn(&mut self, message: &str) {
        let _ = writeln!(self.err, "warning: {message}");
    }

    fn infer_failure(&self, g: &GroundProgram, e: InferError) -> Failure {
        match e {
            InferError::TooManyChoices { .. } => Failure { code: EXIT_RESOURCE, message: e.to_string() },
            InferError::Inconsistent(ref t) => {
                Failure { code: EXIT_INCONSISTENT, message: format!("{e}\nwitness: {}", t.render(g)) }
            }
            InferError::BadChoice(_) => Failure::user(e.to_string()),
        }
    }

    fn emit(&mut self, text: &str) -> Result<(), Failure> {
        self.out.write_all(text.as_bytes()).map_err(|e| Failure::user(format!("cannot write output: {e}")))
    }

    fn emit_json(&mut self, value: &impl Serialize) -> Result<(), Failure> {
        let text = serde_json::to_string_pretty(value).expect("reports serialize");
        self.emit(&format!("{text}\n"))
    }

    fn emit_to(&mut self, path: Option<&Path>, text: &str) -> Result<(), Failure> {
        match path {
            Some(p) => std::fs::write(p, text).map_err(|e| Failure::user(format!("cannot write {}: {e}", p.display()))),
            None => self.emit(text),
        }
    }

    fn load(&mut self, file: &Path) -> Result<Program, Failure> {
        let name = file.display().to_string();
        let text = std::fs::read_to_string(file).map_err(|e| Failure::user(format!("cannot read {name}: {e}")))?;
        match parse_program(&text) {
            Ok(parsed) => {
                for w in &parsed.warnings {
                    let _ = writeln!(self.err, "{}", w.render(&name));
                }
                Ok(parsed.program)
            }
            Err(diags) => {
                let lines: Vec<String> = diags.0.iter().map(|d| d.render(&name)).collect();
                Err(Failure::user(lines.join("\n")))
            }
        }
    }

    fn ground(&mut self, file: &Path) -> Result<GroundProgram, Failure> {
        let program = self.load(file)?;
        Ok(ground::ground_with(&program, GroundOptions { max_ground_rules: self.cfg.max_ground_rules })?)
    }
}

/// Parses `args` (program name first) and runs the subcommand, writing results
/// to `out` and diagnostics to `err`. Returns the process exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = match CliConfig::try_parse_from(args) {
        Ok(cfg) => cfg,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USER } else { EXIT_OK };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let mut ctx = Ctx { cfg: &cfg, out, err };
    match dispatch(&mut ctx) {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(ctx.err, "error: {}", f.message);
            f.code
        }
    }
}

fn dispatch(ctx: &mut Ctx<'_>) -> Result<(), Failure> {
    match &ctx.cfg.command {
        Command::Check { file } => check(ctx, file),
        Command::Ground { file, out } => ground_cmd(ctx, file, out.as_deref()),
        Command::Classify { file } => classify_cmd(ctx, file),
        Command::Models { file, choice, wf } => models_cmd(ctx, file, choice.as_deref(), *wf),
        Command::Query { file, q, e, semantics, gamma } => {
            query_cmd(ctx, file, q, e.as_deref(), *semantics, gamma.as_deref())
        }
        Command::Consistency { file } => consistency_cmd(ctx, file),
        Command::ExportBn { file, out } => export_cmd(ctx, file, out.as_deref()),
    }
}

fn check(ctx: &mut Ctx<'_>, file: &Path) -> Result<(), Failure> {
    let program = ctx.load(file)?;
    if ctx.cfg.machine {
        ctx.emit_json(&json!({ "ok": true, "rules": program.rules.len(), "prob_facts": program.prob_facts.len() }))
    } else {
        ctx.emit(&format!("ok: {} rules, {} probabilistic facts\n", program.rules.len(), program.prob_facts.len()))
    }
}

fn ground_cmd(ctx: &mut Ctx<'_>, file: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let g = ctx.ground(file)?;
    let text = if ctx.cfg.machine {
        format!("{}\n", serde_json::to_string_pretty(&ground::GroundDump::from(&g)).expect("dump serializes"))
    } else {
        let mut text = format!(
            "% {} atoms, {} rules, {} choice points\n",
            g.atom_count(),
            g.rules().len(),
            g.choice_points().len()
        );
        for cp in g.choice_points() {
            text.push_str(&format!("{}::{}.\n", prob::format_literal(&cp.prob), g.atom(cp.atom)));
        }
        for a in g.fact_atoms() {
            text.push_str(&format!("{}.\n", g.atom(a)));
        }
        for r in g.rules() {
            text.push_str(&g.rule_text(r));
            text.push('\n');
        }
        text
    };
    ctx.emit_to(out, &text)
}

fn class_of(g: &GroundProgram) -> ProgramClass {
    classify(&dependency_graph(g))
}

fn classify_cmd(ctx: &mut Ctx<'_>, file: &Path) -> Result<(), Failure> {
    let g = ctx.ground(file)?;
    let class = class_of(&g);
    let witness: Option<Vec<String>> =
        class.witness.as_ref().map(|c| c.iter().map(|a| g.atom(*a).to_string()).collect());
    if ctx.cfg.machine {
        return ctx.emit_json(&json!({ "class": class.kind, "witness": witness }));
    }
    let mut text = format!("{}\n", class.kind);
    if let Some(w) = witness {
        let label = if class.kind == ClassKind::General { "negative cycle" } else { "cycle" };
        text.push_str(&format!("{label}: {} -> {}\n", w.join(" -> "), w[0]));
    }
    ctx.emit(&text)
}

fn choice_from_arg(g: &GroundProgram, bits: Option<&str>) -> Result<TotalChoice, Failure> {
    let n = g.choice_points().len();
    match bits {
        Some(b) => TotalChoice::from_bits(g, b).map_err(|e| Failure::user(e.to_string())),
        None if n == 0 => Ok(TotalChoice::from_bits(g, "").expect("empty choice")),
        None => {
            Err(Failure::user(format!("the program has {n} ground probabilistic facts; pass --choice with {n} bits")))
        }
    }
}

fn models_cmd(ctx: &mut Ctx<'_>, file: &Path, bits: Option<&str>, wf: bool) -> Result<(), Failure> {
    let g = ctx.ground(file)?;
    let choice = choice_from_arg(&g, bits)?;
    let gt = program_for_choice(&g, &choice);
    let rendered: Vec<String> = if wf {
        vec![well_founded_model(&gt).render(&g)]
    } else {
        let found: Vec<_> = stable_models(&gt).collect();
        if ctx.cfg.cross_check {
            let mut a = found.clone();
            let mut b = exhaustive_stable_models(&gt, ctx.cfg.oracle_limit)?;
            a.sort();
            b.sort();
            if a != b {
                return Err(Failure::user(
                    "cross-check mismatch: search and brute force disagree on the stable models",
                ));
            }
        }
        if found.is_empty() {
            ctx.warn("no stable models for this total choice");
        }
        found.iter().map(|m| m.render(&g)).collect()
    };
    if ctx.cfg.machine {
        let models: Vec<BTreeMap<&str, &str>> =
            rendered.iter().map(|m| m.lines().filter_map(|l| l.rsplit_once('=')).collect()).collect();
        return ctx.emit_json(&json!({
            "semantics": if wf { "wf" } else { "stable" },
            "choice": choice.bits(),
            "weight": Number::from(&choice.weight),
            "models": models,
        }));
    }
    let mut text = String::new();
    for (i, m) in rendered.iter().enumerate() {
        if i > 0 {
            text.push_str("%%\n");
        }
        if !m.is_empty() {
            text.push_str(m);
            text.push('\n');
        }
    }
    ctx.emit(&text)
}

fn parse_assignments(text: &str) -> Result<Assignments, Failure> {
    if text.trim().is_empty() {
        return Ok(Assignments::new());
    }
    parse_query(text).map_err(|e| Failure::user(format!("bad query `{text}`: {e}")))
}

fn query_cmd(
    ctx: &mut Ctx<'_>,
    file: &Path,
    q_text: &str,
    e_text: Option<&str>,
    semantics: Semantics,
    gamma: Option<&str>,
) -> Result<(), Failure> {
    let started = Instant::now();
    let g = ctx.ground(file)?;
    let q = parse_assignments(q_text)?;
    if q.is_empty() {
        return Err(Failure::user("the query is empty"));
    }
    let e = parse_assignments(e_text.unwrap_or(""))?;
    let gamma = gamma
        .map(|s| prob::parse_literal(s).ok_or_else(|| Failure::user(format!("bad threshold `{s}`"))))
        .transpose()?;
    for a in unresolved_atoms(&g, &q).into_iter().chain(unresolved_atoms(&g, &e)) {
        ctx.warn(&format!("`{a}` does not occur in the ground program and is false in every model"));
    }
    let class = class_of(&g);
    if semantics == Semantics::Auto && class.kind == ClassKind::General {
        return Err(Failure::user(
            "the program is not stratified, so the credal and well-founded answers can differ; pass --semantics credal or --semantics wf",
        ));
    }
    let evidence = (!e.is_empty()).then(|| e.to_string());
    let limits = ctx.limits();

    let mut report = if semantics == Semantics::Wf {
        let sums = infer::wf_accumulate(&g, &q, &e, &limits).map_err(|err| ctx.infer_failure(&g, err))?;
        let answer = sums.conditional();
        let mut r = QueryReport::from_stats(
            "wf",
            class.kind.to_string(),
            q.to_string(),
            evidence,
            Answer::point(&answer),
            sums.stats,
        );
        r.decision = gamma.map(|t| decide(answer.defined().as_ref(), &t));
        if ctx.cfg.cross_check {
            cross_check_point(ctx, &g, &class, &q, &e, &sums.conditional())?;
            r.cross_check = Some("ok");
        }
        r
    } else {
        let to_event = |a: &Assignments| Event::from_assignments(&g, a).map_err(|err| Failure::user(err.to_string()));
        let (qe, ee) = (to_event(&q)?, to_event(&e)?);
        let acc = infer::accumulate(&g, &qe, &ee, &limits).map_err(|err| ctx.infer_failure(&g, err))?;
        let answer = acc.conditional();
        let result = match (&answer, semantics) {
            (Conditional::Defined(iv), Semantics::Auto) if iv.is_point() => {
                Answer::point(&Conditional::Defined(iv.lower.clone()))
            }
            _ => Answer::interval(&answer),
        };
        let mut r =
            QueryReport::from_stats("credal", class.kind.to_string(), q.to_string(), evidence, result, acc.stats);
        r.decision = gamma.map(|t| decide(answer.clone().defined().map(|iv| iv.lower).as_ref(), &t));
        if ctx.cfg.cross_check {
            cross_check_models(ctx, &g)?;
            if let Conditional::Defined(iv) = &answer {
                if iv.is_point() {
                    cross_check_point(ctx, &g, &class, &q, &e, &Conditional::Defined(iv.lower.clone()))?;
                }
            } else {
                cross_check_point(ctx, &g, &class, &q, &e, &Conditional::Undefined)?;
            }
            r.cross_check = Some("ok");
        }
        r
    };
    if !ctx.cfg.no_timing {
        report.elapsed_ms = Some(started.elapsed().as_secs_f64() * 1e3);
    }
    if ctx.cfg.machine {
        ctx.emit_json(&report)
    } else {
        let text = report.text();
        ctx.emit(&text)
    }
}

/// YES iff the value is defined and strictly above the threshold.
fn decide(value: Option<&Prob>, gamma: &Prob) -> &'static str {
    match value {
        Some(p) if p > gamma => "YES",
        _ => "NO",
    }
}

/// Search-based stable models must equal the brute-force ones on every total choice.
fn cross_check_models(ctx: &Ctx<'_>, g: &GroundProgram) -> Result<(), Failure> {
    let limits = ctx.limits();
    for t in total_choices(g, &limits).map_err(|e| ctx.infer_failure(g, e))? {
        let gt = program_for_choice(g, &t);
        let mut a: Vec<_> = stable_models(&gt).collect();
        let mut b = exhaustive_stable_models(&gt, ctx.cfg.oracle_limit)?;
        a.sort();
        b.sort();
        if a != b {
            return Err(Failure::user(format!("cross-check mismatch on total choice {}", t.bits())));
        }
    }
    Ok(())
}

/// On acyclic programs the compiled network must give the same point value.
fn cross_check_point(
    ctx: &Ctx<'_>,
    g: &GroundProgram,
    class: &ProgramClass,
    q: &Assignments,
    e: &Assignments,
    value: &Conditional<Prob>,
) -> Result<(), Failure> {
    if class.kind != ClassKind::Acyclic {
        return Ok(());
    }
    let opts = CompileOptions { max_roots: ctx.cfg.max_choices, ..CompileOptions::default() };
    let bn = compile_bn(g, &opts)?;
    let other = bn_query(&bn, q, e);
    if &other != value {
        return Err(Failure::user("cross-check mismatch: the compiled network gives a different answer"));
    }
    Ok(())
}

fn consistency_cmd(ctx: &mut Ctx<'_>, file: &Path) -> Result<(), Failure> {
    let g = ctx.ground(file)?;
    let report = infer::check_consistency(&g, &ctx.limits()).map_err(|e| ctx.infer_failure(&g, e))?;
    let witness = report.witness.as_ref();
    if ctx.cfg.machine {
        ctx.emit_json(&json!({
            "consistent": report.consistent,
            "choices": report.stats.choices,
            "witness": witness.map(|t| json!({ "bits": t.bits(), "choice": t.render(&g), "weight": Number::from(&t.weight) })),
        }))?;
    } else if let Some(t) = witness {
        ctx.emit(&format!("inconsistent\nwitness: {}\nbits: {}\n", t.render(&g), t.bits()))?;
    } else {
        ctx.emit(&format!("consistent ({} total choices)\n", report.stats.choices))?;
    }
    if report.consistent {
        Ok(())
    } else {
        Err(Failure { code: EXIT_INCONSISTENT, message: "the witness total choice has no stable model".into() })
    }
}

fn export_cmd(ctx: &mut Ctx<'_>, file: &Path, out: Option<&Path>) -> Result<(), Failure> {
    let g = ctx.ground(file)?;
    let opts = CompileOptions { max_roots: ctx.cfg.max_choices, ..CompileOptions::default() };
    let bn = compile_bn(&g, &opts)?;
    if ctx.cfg.machine {
        let completion = compile::clark_completion(&g)?.render(&g);
        let nodes: Vec<_> = bn
            .nodes
            .iter()
            .map(|n| {
                json!({
                    "name": n.name,
                    "parents": n.parents.iter().map(|p| bn.nodes[*p].name.clone()).collect::<Vec<_>>(),
                    "rows": n.table.iter().enumerate().map(|(r, p)| (n.row_key(r), prob::format_fraction(p))).collect::<BTreeMap<_, _>>(),
                })
            })
            .collect();
        let text = serde_json::to_string_pretty(
            &json!({ "nodes": nodes, "fixed": bn.fixed, "completion": completion.lines().collect::<Vec<_>>() }),
        )
        .expect("network serializes");
        return ctx.emit_to(out, &format!("{text}\n"));
    }
    ctx.emit_to(out, &export_bn(&bn))
}
