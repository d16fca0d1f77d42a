use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use l1modal::enumerate::EnumerateError;
use l1modal::harness::{
    faithfulness_search, replay_theorem31_with, reproduce_I_counterexample, soundness_suite, Countermodel,
    SearchOptions, SearchStrategy,
};
use l1modal::l1::{check_proof, decide_l1, HilbertProof, L1Verdict};
use l1modal::tableau::DEFAULT_NODE_BUDGET;
use l1modal::{
    bounded_validity, eval, parse_l1, parse_modal, prove_with, translate, BoundedVerdict, KripkeModel, L1Formula,
    LogicId, ModalFormula, ProveError, ProverConfig, TableauVerdict, TranslationKind,
};

/// Version of the `--json` output layout.
const SCHEMA_VERSION: u32 = 1;

#[derive(Parser)]
#[command(name = "l1modal", version, about = "Translations of the propositional ontology L1 into modal logics")]
struct Cli {
    /// Emit one JSON object on stdout instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Tableau node budget per proof.
    #[arg(long, global = true, env = "L1MODAL_NODE_BUDGET", default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Lang {
    Auto,
    L1,
    Modal,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    I,
    B,
    Im,
}

impl From<Kind> for TranslationKind {
    fn from(k: Kind) -> Self {
        match k {
            Kind::I => TranslationKind::I,
            Kind::B => TranslationKind::B,
            Kind::Im => TranslationKind::IM,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Logic {
    K,
    Kt,
    Kb,
    Ktb,
}

impl From<Logic> for LogicId {
    fn from(l: Logic) -> Self {
        match l {
            Logic::K => LogicId::K,
            Logic::Kt => LogicId::KT,
            Logic::Kb => LogicId::KB,
            Logic::Ktb => LogicId::KTB,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Strategy {
    Patterns,
    Direct,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a formula and print its canonical form and syntax tree.
    Parse {
        formula: String,
        #[arg(long, value_enum, default_value_t = Lang::Auto)]
        lang: Lang,
    },
    /// Translate an L1 formula into a modal formula.
    Translate {
        formula: String,
        #[arg(long, value_enum)]
        kind: Kind,
    },
    /// Decide validity of a modal formula (exit 1 with a countermodel if invalid).
    Prove {
        formula: String,
        #[arg(long, value_enum)]
        logic: Logic,
        /// Include the tableau trace of a valid verdict.
        #[arg(long)]
        trace: bool,
    },
    /// Look for a countermodel (exit 1 if one is found).
    Countermodel {
        formula: String,
        #[arg(long, value_enum)]
        logic: Logic,
        /// Search all models up to this many worlds instead of using the tableau.
        #[arg(long)]
        max_worlds: Option<usize>,
    },
    /// Evaluate a modal formula at a world of a model given as JSON.
    EvalModel {
        formula: String,
        #[arg(long)]
        model: PathBuf,
        #[arg(long, default_value_t = 0)]
        world: usize,
    },
    /// Check a Hilbert-style proof file (JSON lines).
    CheckProof { file: PathBuf },
    /// Decide L1 theoremhood.
    L1Decide { formula: String },
    /// Replay the soundness argument step by step.
    #[command(name = "replay-theorem31")]
    ReplayTheorem31,
    /// Check that L1 theorems within bounds have KTB-valid IM images.
    SoundnessSuite {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 9)]
        size: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Reproduce the counterexample to the faithfulness of I.
    ReproduceCounterexample,
    /// Search for formulas whose image is valid but which are not L1 theorems.
    SearchFaithfulness {
        #[arg(long, value_enum, default_value_t = Kind::Im)]
        kind: Kind,
        #[arg(long, value_enum, default_value_t = Logic::Ktb)]
        logic: Logic,
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 9)]
        size: usize,
        #[arg(long, value_enum, default_value_t = Strategy::Patterns)]
        strategy: Strategy,
        /// Candidates listed in text output.
        #[arg(long, default_value_t = 20)]
        show: usize,
        #[arg(long)]
        jobs: Option<usize>,
    },
}

enum Failure {
    Usage(anyhow::Error),
    Budget(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Usage(e)
    }
}

impl From<ProveError> for Failure {
    fn from(e: ProveError) -> Self {
        Failure::Budget(e.to_string())
    }
}

impl From<EnumerateError> for Failure {
    fn from(e: EnumerateError) -> Self {
        match e {
            EnumerateError::Prover(p) => p.into(),
            other => Failure::Usage(other.into()),
        }
    }
}

struct Output {
    ok: bool,
    json: Value,
    text: String,
}

fn out(ok: bool, json: Value, text: String) -> Result<Output, Failure> {
    Ok(Output { ok, json, text })
}

fn l1(s: &str) -> Result<L1Formula, Failure> {
    parse_l1(s).with_context(|| format!("cannot parse L1 formula {s:?}")).map_err(Failure::Usage)
}

fn modal(s: &str) -> Result<ModalFormula, Failure> {
    parse_modal(s).with_context(|| format!("cannot parse modal formula {s:?}")).map_err(Failure::Usage)
}

fn model_json(model: &KripkeModel, world: usize) -> Value {
    json!({ "model": model, "world": world })
}

fn countermodel_text(cm: &Countermodel) -> String {
    format!(
        "countermodel ({}) at world {}: {}",
        cm.logic,
        cm.world,
        serde_json::to_string(&cm.model).expect("model serializes")
    )
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T, Failure> {
    match jobs {
        None => Ok(f()),
        Some(n) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .context("cannot start worker threads")?;
            Ok(pool.install(f))
        }
    }
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let config = ProverConfig {
        node_budget: cli.budget,
        trace: false,
    };
    match &cli.command {
        Command::Parse { formula, lang } => {
            let parsed_l1 = match lang {
                Lang::Modal => None,
                Lang::L1 => Some(l1(formula)?),
                Lang::Auto => parse_l1(formula).ok(),
            };
            if let Some(f) = parsed_l1 {
                return out(
                    true,
                    json!({ "language": "l1", "formula": f.to_string(), "ast": f.to_json(), "size": l1modal::print::sugared_size(&f) }),
                    format!("L1: {f}\ncore: {}", l1modal::print::print_core(&f)),
                );
            }
            let f = modal(formula)?;
            out(
                true,
                json!({ "language": "modal", "formula": f.to_string(), "ast": f.to_json(), "size": l1modal::print::sugared_size(&f) }),
                format!("modal: {f}\ncore: {}", l1modal::print::print_core(&f)),
            )
        }
        Command::Translate { formula, kind } => {
            let f = l1(formula)?;
            let kind = TranslationKind::from(*kind);
            let image = translate(kind, &f, &l1modal::default_varmap(&f)).map_err(|e| Failure::Usage(e.into()))?;
            out(
                true,
                json!({ "kind": kind, "source": f.to_string(), "formula": image.to_string(), "ast": image.to_json() }),
                image.to_string(),
            )
        }
        Command::Prove { formula, logic, trace } => {
            let f = modal(formula)?;
            let logic = LogicId::from(*logic);
            let verdict = prove_with(&f, logic, ProverConfig { trace: *trace, ..config })?;
            match verdict {
                TableauVerdict::Valid { trace: steps } => {
                    let mut text = format!("valid in {logic}");
                    for s in &steps {
                        write!(text, "\n  {:?} depth {} world {}: {}", s.rule, s.depth, s.world, s.formula).unwrap();
                    }
                    out(true, json!({ "logic": logic, "valid": true, "trace": steps }), text)
                }
                TableauVerdict::Invalid { model, world } => out(
                    false,
                    json!({ "logic": logic, "valid": false, "countermodel": model_json(&model, world) }),
                    format!(
                        "invalid in {logic}\ncountermodel at world {world}: {}",
                        serde_json::to_string(&model).expect("model serializes")
                    ),
                ),
            }
        }
        Command::Countermodel { formula, logic, max_worlds } => {
            let f = modal(formula)?;
            let logic = LogicId::from(*logic);
            let found = match max_worlds {
                Some(n) => match bounded_validity(&f, logic.into(), *n).map_err(|e| Failure::Usage(e.into()))? {
                    BoundedVerdict::Valid => None,
                    BoundedVerdict::Falsified { model, world } => Some((model, world)),
                },
                None => match prove_with(&f, logic, config)? {
                    TableauVerdict::Valid { .. } => None,
                    TableauVerdict::Invalid { model, world } => Some((model, world)),
                },
            };
            match found {
                None => out(
                    true,
                    json!({ "logic": logic, "found": false, "countermodel": Value::Null }),
                    match max_worlds {
                        Some(n) => format!("no countermodel in {logic} with at most {n} worlds"),
                        None => format!("valid in {logic}: no countermodel"),
                    },
                ),
                Some((model, world)) => out(
                    false,
                    json!({ "logic": logic, "found": true, "countermodel": model_json(&model, world) }),
                    format!(
                        "countermodel at world {world}: {}",
                        serde_json::to_string(&model).expect("model serializes")
                    ),
                ),
            }
        }
        Command::EvalModel { formula, model, world } => {
            let f = modal(formula)?;
            let text = std::fs::read_to_string(model).with_context(|| format!("cannot read {}", model.display()))?;
            let m: KripkeModel =
                serde_json::from_str(&text).with_context(|| format!("{} is not a model", model.display()))?;
            let value = eval(&m, *world, &f).map_err(|e| Failure::Usage(e.into()))?;
            out(value, json!({ "world": world, "value": value }), value.to_string())
        }
        Command::CheckProof { file } => {
            let text = std::fs::read_to_string(file).with_context(|| format!("cannot read {}", file.display()))?;
            let result = HilbertProof::parse(&text).and_then(|p| check_proof(&p));
            match result {
                Ok(theorem) => out(
                    true,
                    json!({ "ok": true, "theorem": theorem.to_string() }),
                    format!("ok: {theorem}"),
                ),
                Err(e) => out(
                    false,
                    json!({ "ok": false, "line": e.line, "error": e.kind.to_string() }),
                    e.to_string(),
                ),
            }
        }
        Command::L1Decide { formula } => {
            let f = l1(formula)?;
            match decide_l1(&f, config)? {
                L1Verdict::Theorem => out(
                    true,
                    json!({ "formula": f.to_string(), "theorem": true }),
                    format!("theorem: {f}"),
                ),
                L1Verdict::NonTheorem { model, world } => out(
                    false,
                    json!({ "formula": f.to_string(), "theorem": false, "countermodel": model_json(&model, world) }),
                    format!(
                        "not a theorem: {f}\nK-countermodel to its B image at world {world}: {}",
                        serde_json::to_string(&model).expect("model serializes")
                    ),
                ),
            }
        }
        Command::ReplayTheorem31 => {
            let report = replay_theorem31_with(config)?;
            let mut text = String::new();
            for s in &report.steps {
                let status = match s.mode {
                    l1modal::harness::CheckMode::Assumption => "assume",
                    _ if s.passed => "pass",
                    _ => "FAIL",
                };
                write!(text, "({}) {status} [{}] {}", s.id, s.logic, s.formula).unwrap();
                if !s.deps.is_empty() {
                    write!(text, "  from {}", s.deps.join(", ")).unwrap();
                }
                text.push('\n');
                if let Some(note) = &s.note {
                    writeln!(text, "    {note}").unwrap();
                }
                if let Some(cm) = &s.countermodel {
                    writeln!(text, "    {}", countermodel_text(cm)).unwrap();
                }
            }
            for a in &report.assembled {
                writeln!(
                    text,
                    "IM({}) in KTB: {}",
                    a.axiom,
                    if a.valid { "valid" } else { "INVALID" }
                )
                .unwrap();
                if let Some(cm) = &a.countermodel {
                    writeln!(text, "    {}", countermodel_text(cm)).unwrap();
                }
            }
            let failed = report.failed_steps();
            write!(
                text,
                "{} of {} steps pass",
                report.numbered().count() - failed.len(),
                report.numbered().count()
            )
            .unwrap();
            out(report.all_passed(), serde_json::to_value(&report).expect("report serializes"), text)
        }
        Command::SoundnessSuite { vars, size, jobs } => {
            let report = with_pool(*jobs, || soundness_suite(*vars, *size, config))??;
            let mut text = String::new();
            for row in &report.per_size {
                writeln!(
                    text,
                    "size {}: {} formulas, {} theorems, {} violations",
                    row.size, row.formulas, row.theorems, row.violations
                )
                .unwrap();
            }
            for row in &report.axiom_instances {
                writeln!(text, "{}: {} instances, {} with invalid IM image", row.schema, row.instances, row.invalid.len())
                    .unwrap();
            }
            writeln!(
                text,
                "modus ponens round: {} formulas, {} violations",
                report.mp_closure.formulas, report.mp_closure.violations
            )
            .unwrap();
            for v in &report.examples {
                writeln!(text, "violation: {}", v.formula).unwrap();
            }
            write!(
                text,
                "{} theorems, {} violations; {} cross-checked, {} disagreements",
                report.theorems,
                report.violations,
                report.cross_checked,
                report.disagreements.len()
            )
            .unwrap();
            out(report.sound(), serde_json::to_value(&report).expect("report serializes"), text)
        }
        Command::ReproduceCounterexample => {
            let r = reproduce_I_counterexample(config)?;
            let mut text = format!(
                "formula: {}\n(i) I image valid in K: {}\n(ii) L1 theorem: {}\n",
                r.formula, r.i_valid_in_k, r.l1_theorem
            );
            if let Some(cm) = &r.countermodel {
                writeln!(text, "    {} (checked: {})", countermodel_text(cm), r.countermodel_checked).unwrap();
            }
            write!(text, "control {}: B image valid in K: {}", r.control_formula, r.control_valid).unwrap();
            out(r.reproduced(), serde_json::to_value(&r).expect("report serializes"), text)
        }
        Command::SearchFaithfulness {
            kind,
            logic,
            vars,
            size,
            strategy,
            show,
            jobs,
        } => {
            let opts = SearchOptions {
                kind: (*kind).into(),
                logic: (*logic).into(),
                names: *vars,
                max_size: *size,
                strategy: match strategy {
                    Strategy::Patterns => SearchStrategy::Patterns,
                    Strategy::Direct => SearchStrategy::Direct,
                },
                config,
            };
            let report = with_pool(*jobs, || faithfulness_search(opts))??;
            let mut text = format!(
                "{} / {}: {} formulas scanned, {} candidates (re-verified: {})\n",
                report.kind,
                report.logic,
                report.scanned,
                report.candidates.len(),
                report.reverified
            );
            for c in report.candidates.iter().take(*show) {
                writeln!(text, "  {}", c.formula).unwrap();
            }
            if report.candidates.len() > *show {
                writeln!(text, "  ... {} more", report.candidates.len() - show).unwrap();
            }
            write!(text, "elapsed {} ms", report.elapsed_ms).unwrap();
            let ok = report.candidates.is_empty();
            if !report.reverified {
                return Err(Failure::Usage(anyhow::anyhow!(
                    "re-verification disagrees on {} formulas",
                    report.disagreements.len()
                )));
            }
            out(ok, serde_json::to_value(&report).expect("report serializes"), text)
        }
    }
}

fn command_name(c: &Command) -> &'static str {
    match c {
        Command::Parse { .. } => "parse",
        Command::Translate { .. } => "translate",
        Command::Prove { .. } => "prove",
        Command::Countermodel { .. } => "countermodel",
        Command::EvalModel { .. } => "eval-model",
        Command::CheckProof { .. } => "check-proof",
        Command::L1Decide { .. } => "l1-decide",
        Command::ReplayTheorem31 => "replay-theorem31",
        Command::SoundnessSuite { .. } => "soundness-suite",
        Command::ReproduceCounterexample => "reproduce-counterexample",
        Command::SearchFaithfulness { .. } => "search-faithfulness",
    }
}

/// Writes a line to stdout; a closed pipe is not an error.
fn emit(text: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(output) => {
            if cli.json {
                let body = json!({
                    "schema_version": SCHEMA_VERSION,
                    "command": command_name(&cli.command),
                    "ok": output.ok,
                    "result": output.json,
                });
                emit(&body.to_string());
            } else {
                emit(&output.text);
            }
            ExitCode::from(if output.ok { 0 } else { 1 })
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
