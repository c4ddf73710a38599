//! The `illation` command line. [`run`] does all the work so tests can call
//! it in-process; `main` only wires it to the real streams.

use std::io::{Read, Write};
use std::ops::ControlFlow;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use illation_core::atlas::{self, EnumerationSpec, ShapePolicy};
use illation_core::bivalent::{self, RowOrder, TableOptions};
use illation_core::indirect::{self, Outcome};
use illation_core::syllogism::{self, CategoricalForm, Figure};
use illation_core::notation::check_reserved;
use illation_core::triadic;
use illation_core::{
    parse, render, translate, Assignment3, Connective, Encoding, Error, Formula, NotationId, SyntaxConfig, Triadic,
    TruthValue, VariableName,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NOT_TAUTOLOGY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;
pub const EXIT_LIMIT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "illation", version, about = "Propositional logic in Peirce, Schröder, Peano-Russell and modern notation")]
pub struct Cli {
    /// peirce, schroeder, peano-russell or modern.
    #[arg(long, global = true, default_value = "modern")]
    pub notation: NotationId,
    /// unicode or ascii. Defaults to unicode only when LC_ALL, LC_CTYPE or
    /// LANG declares UTF-8.
    #[arg(long, global = true)]
    pub encoding: Option<Encoding>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[arg(long, global = true, value_enum, default_value_t = RowOrderArg::TFirst)]
    pub row_order: RowOrderArg,
    /// Read the formula from a file instead of the command line.
    #[arg(long, global = true)]
    pub file: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RowOrderArg {
    TFirst,
    FFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Layout {
    Rows,
    Conditions,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Shapes {
    RightCombs,
    AllTrees,
}

#[derive(Args, Debug)]
pub struct FormulaArg {
    /// The formula; `-` reads standard input.
    #[arg(allow_hyphen_values = true)]
    pub formula: Option<String>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Parse a formula and print it back with its structure.
    Parse(FormulaArg),
    /// Rewrite a formula from one notation into another.
    Translate {
        #[arg(long)]
        from: NotationId,
        #[arg(long)]
        to: NotationId,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Direct truth table.
    Table {
        #[arg(long, value_enum, default_value_t = Layout::Rows)]
        layout: Layout,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// A connective as a 2×2 matrix (rows: left operand, columns: right).
    Matrix {
        /// Name, alias, column 1-16, or vector such as `tftt`.
        connective: Connective,
    },
    /// Classify as tautology, contradiction or contingent.
    Check {
        /// Exit with status 1 unless the formula is a tautology.
        #[arg(long)]
        status: bool,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Do the premises entail the conclusion? The last formula is the
    /// conclusion. Put `--` first if a formula starts with `-`.
    Entails {
        #[arg(required = true)]
        formulas: Vec<String>,
    },
    /// Indirect (abbreviated) truth table with its trace.
    Indirect(FormulaArg),
    /// Three-valued matrices over V, L, F.
    Triadic {
        #[command(subcommand)]
        command: TriadicCommand,
    },
    /// The sixteen binary connectives.
    Connectives {
        #[command(subcommand)]
        command: ConnectivesCommand,
    },
    /// A/E/I/O forms and Barbara.
    Syllogism {
        #[command(subcommand)]
        command: SyllogismCommand,
    },
}

#[derive(Subcommand, Debug)]
pub enum TriadicCommand {
    /// Print the negation, ⊕ and Z̲ matrices.
    Tables,
    /// Evaluate under an assignment such as `x=L,y=V`.
    Eval {
        #[arg(long)]
        assign: String,
        #[command(flatten)]
        input: FormulaArg,
    },
    /// Three-valued table, V before L before F.
    Table(FormulaArg),
    /// Compare the matrices restricted to V, F with two-valued ¬, ∨, ∧.
    CheckRestriction,
}

#[derive(Subcommand, Debug)]
pub enum ConnectivesCommand {
    /// All sixteen, in 1902 column order.
    Catalog,
    /// The 1902 grid as printed, with its anomalies noted.
    PaperTable,
    /// Name the connective with the given four values on tt, tf, ft, ff.
    Identify {
        #[arg(required = true)]
        values: Vec<String>,
    },
    /// X-frame icon of a connective.
    Xframe { connective: Connective },
    /// Tautologies obtained by filling connective slots.
    Enumerate {
        #[arg(long, default_value_t = 3)]
        vars: usize,
        #[arg(long, default_value_t = 3)]
        slots: usize,
        #[arg(long, default_value_t = 1000)]
        limit: usize,
        #[arg(long)]
        count_only: bool,
        #[arg(long, value_enum, default_value_t = Shapes::RightCombs)]
        shapes: Shapes,
    },
}

#[derive(Subcommand, Debug)]
pub enum SyllogismCommand {
    /// Render a categorical form, e.g. `render O a b`.
    Render { figure: Figure, subject: String, predicate: String },
    /// Barbara, nested and conjunctive, with verdicts.
    Barbara {
        #[arg(default_value = "x")]
        x: String,
        #[arg(default_value = "y")]
        y: String,
        #[arg(default_value = "z")]
        z: String,
    },
    /// The four-line A/E/I/O scheme with readings.
    AeioTable,
}

/// Unicode only when the locale says so.
pub fn encoding_from_env() -> Encoding {
    for key in ["LC_ALL", "LC_CTYPE", "LANG"] {
        if let Ok(v) = std::env::var(key) {
            if v.is_empty() {
                continue;
            }
            let v = v.to_ascii_lowercase();
            return if v.contains("utf-8") || v.contains("utf8") { Encoding::Unicode } else { Encoding::Ascii };
        }
    }
    Encoding::Ascii
}

/// A failure with its exit status and message.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Failure {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = if e.is_limit() {
            EXIT_LIMIT
        } else if e.is_unsupported() {
            EXIT_UNSUPPORTED
        } else {
            EXIT_USAGE
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<illation_core::ParseDiagnostic> for Failure {
    fn from(d: illation_core::ParseDiagnostic) -> Failure {
        Failure::from(Error::Parse(d))
    }
}

struct Ctx<'a> {
    cli: &'a Cli,
    config: SyntaxConfig,
    stdin: &'a mut dyn Read,
    out: String,
    code: i32,
}

impl Ctx<'_> {
    fn json(&self) -> bool {
        self.cli.format == Format::Json
    }

    fn emit_json<T: Serialize>(&mut self, value: &T) {
        self.out.push_str(&serde_json::to_string_pretty(value).expect("serializable"));
        self.out.push('\n');
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.out.push_str(s.as_ref());
        self.out.push('\n');
    }

    fn source(&mut self, arg: &FormulaArg) -> Result<String, Failure> {
        match (&arg.formula, &self.cli.file) {
            (Some(_), Some(_)) => Err(Failure::usage("give the formula either as an argument or with --file, not both")),
            (Some(text), None) if text == "-" => {
                let mut s = String::new();
                self.stdin.read_to_string(&mut s).map_err(|e| Failure::usage(format!("reading standard input: {e}")))?;
                Ok(s.trim().to_string())
            }
            (Some(text), None) => Ok(text.clone()),
            (None, Some(path)) => std::fs::read_to_string(path)
                .map(|s| s.trim().to_string())
                .map_err(|e| Failure::usage(format!("reading {}: {e}", path.display()))),
            (None, None) => Err(Failure::usage("no formula given")),
        }
    }

    fn formula(&mut self, arg: &FormulaArg) -> Result<Formula, Failure> {
        let text = self.source(arg)?;
        Ok(parse(&text, self.config)?)
    }

    fn show(&self, f: &Formula) -> String {
        render(f, self.config)
    }

    fn letter(&self, v: TruthValue) -> char {
        bivalent::value_letter(v, self.config.notation)
    }

    fn assignment_text(&self, a: &illation_core::Assignment2) -> String {
        let parts: Vec<String> = a.iter().map(|(n, v)| format!("{n}={}", self.letter(v))).collect();
        format!("{{{}}}", parts.join(", "))
    }
}

/// Runs one invocation; returns the exit status. Output goes to `out`,
/// diagnostics to `err`.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if code == EXIT_OK { out.write_all(text.as_bytes()) } else { err.write_all(text.as_bytes()) };
            return code;
        }
    };
    let encoding = cli.encoding.unwrap_or_else(encoding_from_env);
    let config = SyntaxConfig::new(cli.notation, encoding);
    let mut ctx = Ctx { cli: &cli, config, stdin, out: String::new(), code: EXIT_OK };
    match dispatch(&mut ctx) {
        Ok(()) => {
            let _ = out.write_all(ctx.out.as_bytes());
            ctx.code
        }
        Err(f) => {
            if ctx.json() {
                let body = json!({ "error": f.message, "exit_code": f.code });
                let _ = writeln!(out, "{}", serde_json::to_string_pretty(&body).expect("json"));
            }
            let _ = writeln!(err, "illation: {}", f.message);
            f.code
        }
    }
}

fn dispatch(ctx: &mut Ctx) -> Result<(), Failure> {
    let cli = ctx.cli;
    match &cli.command {
        Command::Parse(arg) => cmd_parse(ctx, arg),
        Command::Translate { from, to, input } => cmd_translate(ctx, *from, *to, input),
        Command::Table { layout, input } => cmd_table(ctx, *layout, input),
        Command::Matrix { connective } => cmd_matrix(ctx, *connective),
        Command::Check { status, input } => cmd_check(ctx, *status, input),
        Command::Entails { formulas } => cmd_entails(ctx, formulas),
        Command::Indirect(arg) => cmd_indirect(ctx, arg),
        Command::Triadic { command } => cmd_triadic(ctx, command),
        Command::Connectives { command } => cmd_connectives(ctx, command),
        Command::Syllogism { command } => cmd_syllogism(ctx, command),
    }
}

fn cmd_parse(ctx: &mut Ctx, arg: &FormulaArg) -> Result<(), Failure> {
    let f = ctx.formula(arg)?;
    let rendered = ctx.show(&f);
    let variables: Vec<String> = f.variables().iter().map(|v| v.to_string()).collect();
    if ctx.json() {
        let body = json!({
            "rendered": rendered,
            "variables": variables,
            "connectives": f.connective_count(),
            "depth": f.depth(),
            "formula": f,
        });
        ctx.emit_json(&body);
    } else {
        ctx.line(rendered);
        ctx.line(format!("variables: {}", if variables.is_empty() { "none".into() } else { variables.join(", ") }));
        ctx.line(format!("connectives: {}", f.connective_count()));
        ctx.line(format!("depth: {}", f.depth()));
    }
    Ok(())
}

fn cmd_translate(ctx: &mut Ctx, from: NotationId, to: NotationId, arg: &FormulaArg) -> Result<(), Failure> {
    let text = ctx.source(arg)?;
    let enc = ctx.config.encoding;
    let output = translate(&text, SyntaxConfig::new(from, enc), SyntaxConfig::new(to, enc))?;
    if ctx.json() {
        ctx.emit_json(&json!({ "from": from, "to": to, "encoding": enc, "input": text, "output": output }));
    } else {
        ctx.line(output);
    }
    Ok(())
}

fn row_order(ctx: &Ctx) -> RowOrder {
    match ctx.cli.row_order {
        RowOrderArg::TFirst => RowOrder::TFirst,
        RowOrderArg::FFirst => RowOrder::FFirst,
    }
}

fn cmd_table(ctx: &mut Ctx, layout: Layout, arg: &FormulaArg) -> Result<(), Failure> {
    let f = ctx.formula(arg)?;
    let opts = TableOptions { row_order: row_order(ctx), ..TableOptions::default() };
    let table = bivalent::truth_table_with(&f, opts)?;
    if ctx.json() {
        ctx.emit_json(&json!({ "formula": ctx.show(&f), "table": table }));
    } else {
        let text = match layout {
            Layout::Rows => bivalent::render_table(&table, &f, ctx.config),
            Layout::Conditions => bivalent::render_conditions(&table, &f, ctx.config),
        };
        ctx.out.push_str(&text);
    }
    Ok(())
}

fn cmd_matrix(ctx: &mut Ctx, c: Connective) -> Result<(), Failure> {
    let m = bivalent::matrix_table(c);
    if ctx.json() {
        ctx.emit_json(&m);
    } else {
        ctx.out.push_str(&bivalent::render_matrix(&m, ctx.config.notation));
    }
    Ok(())
}

fn cmd_check(ctx: &mut Ctx, status: bool, arg: &FormulaArg) -> Result<(), Failure> {
    let f = ctx.formula(arg)?;
    let v = bivalent::classify(&f)?;
    if ctx.json() {
        ctx.emit_json(&json!({ "formula": ctx.show(&f), "verdict": v }));
    } else {
        ctx.line(v.class.as_str());
        if let Some(a) = &v.falsifying {
            let text = ctx.assignment_text(a);
            ctx.line(format!("falsified by {text}"));
        }
        if let (Some(a), false) = (&v.satisfying, v.is_tautology()) {
            let text = ctx.assignment_text(a);
            ctx.line(format!("satisfied by {text}"));
        }
    }
    if status && !v.is_tautology() {
        ctx.code = EXIT_NOT_TAUTOLOGY;
    }
    Ok(())
}

fn cmd_entails(ctx: &mut Ctx, texts: &[String]) -> Result<(), Failure> {
    let formulas: Vec<Formula> = texts.iter().map(|t| parse(t, ctx.config)).collect::<Result<_, _>>()?;
    let (conclusion, premises) = formulas.split_last().expect("clap requires one formula");
    let e = bivalent::entails(premises, conclusion)?;
    if ctx.json() {
        let premises: Vec<String> = premises.iter().map(|p| ctx.show(p)).collect();
        ctx.emit_json(&json!({ "premises": premises, "conclusion": ctx.show(conclusion), "entailment": e }));
    } else {
        ctx.line(if e.valid { "valid" } else { "invalid" });
        if let Some(a) = &e.counterexample {
            let text = ctx.assignment_text(a);
            ctx.line(format!("counterexample: {text}"));
        }
    }
    Ok(())
}

fn cmd_indirect(ctx: &mut Ctx, arg: &FormulaArg) -> Result<(), Failure> {
    let f = ctx.formula(arg)?;
    let r = indirect::indirect_check(&f);
    let unconstrained: Vec<String> = r.unconstrained.iter().map(|v| v.to_string()).collect();
    if ctx.json() {
        let columns: Vec<String> = r.trace.columns.iter().map(|c| ctx.show(c)).collect();
        ctx.emit_json(&json!({
            "formula": ctx.show(&f),
            "outcome": r.outcome,
            "countermodel": r.countermodel,
            "unconstrained": unconstrained,
            "columns": columns,
            "steps": r.trace.steps,
        }));
    } else {
        ctx.out.push_str(&indirect::render_trace(&r.trace, ctx.config));
        ctx.line(r.outcome.as_str());
        if let (Outcome::Falsifiable, Some(m)) = (r.outcome, &r.countermodel) {
            let text = ctx.assignment_text(m);
            ctx.line(format!("countermodel: {text}"));
            ctx.line(format!(
                "unconstrained: {}",
                if unconstrained.is_empty() { "none".into() } else { unconstrained.join(", ") }
            ));
        }
    }
    Ok(())
}

fn parse_assign3(text: &str) -> Result<Assignment3, Failure> {
    let mut a = Assignment3::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let (name, value) = part.split_once('=').ok_or_else(|| Failure::usage(format!("expected name=value, got `{part}`")))?;
        let name = VariableName::new(name.trim())?;
        let value = Triadic::parse(value).ok_or_else(|| Failure::usage(format!("`{value}` is not V, L or F")))?;
        a.insert(name, value);
    }
    Ok(a)
}

fn cmd_triadic(ctx: &mut Ctx, command: &TriadicCommand) -> Result<(), Failure> {
    match command {
        TriadicCommand::Tables => {
            if ctx.json() {
                ctx.emit_json(&triadic::TABLES);
            } else {
                ctx.out.push_str(&triadic::render_tables(ctx.config.encoding));
            }
        }
        TriadicCommand::Eval { assign, input } => {
            let f = ctx.formula(input)?;
            let a = parse_assign3(assign)?;
            let v = triadic::eval3(&f, &a)?;
            if ctx.json() {
                ctx.emit_json(&json!({ "formula": ctx.show(&f), "assignment": a, "value": v }));
            } else {
                ctx.line(v.letter().to_string());
            }
        }
        TriadicCommand::Table(arg) => {
            let f = ctx.formula(arg)?;
            let t = triadic::table3(&f)?;
            if ctx.json() {
                ctx.emit_json(&json!({ "formula": ctx.show(&f), "table": t }));
            } else {
                let names: Vec<String> = t.variables.iter().map(|v| v.to_string()).collect();
                let widths: Vec<usize> = names.iter().map(|n| n.chars().count().max(1)).collect();
                let sep = if names.is_empty() { "| " } else { " | " };
                let header: Vec<String> = names.iter().zip(&widths).map(|(n, w)| format!("{n:<w$}")).collect();
                let shown = ctx.show(&f);
                ctx.line(format!("{}{sep}{shown}", header.join(" ")));
                for row in &t.rows {
                    let cells: Vec<String> =
                        row.values.iter().zip(&widths).map(|(v, w)| format!("{:<w$}", v.letter())).collect();
                    ctx.line(format!("{}{sep}{}", cells.join(" "), row.value.letter()));
                }
            }
        }
        TriadicCommand::CheckRestriction => {
            let report = triadic::restriction_check();
            if ctx.json() {
                ctx.emit_json(&report);
            } else {
                ctx.line(format!(
                    "{} cells checked, {} mismatches",
                    report.cells_checked,
                    report.mismatches.len()
                ));
                for m in &report.mismatches {
                    let cell: Vec<String> = m.cell.iter().map(|v| v.letter().to_string()).collect();
                    ctx.line(format!(
                        "  {} at ({}): triadic {} vs bivalent {}",
                        m.table,
                        cell.join(","),
                        m.triadic.letter(),
                        m.bivalent.letter()
                    ));
                }
                ctx.line(if report.passed() { "restriction: pass" } else { "restriction: fail" });
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct CatalogRow {
    column: u8,
    name: &'static str,
    vector: String,
    aliases: &'static [&'static str],
    provenance: &'static str,
}

fn parse_values(parts: &[String]) -> Result<[TruthValue; 4], Failure> {
    let letters: Vec<char> =
        parts.join("").chars().filter(|c| !c.is_whitespace() && !matches!(c, ',' | '(' | ')')).collect();
    if letters.len() != 4 {
        return Err(Failure::usage(format!("expected four truth values, got {}", letters.len())));
    }
    let mut v = [TruthValue::T; 4];
    for (slot, ch) in v.iter_mut().zip(letters) {
        *slot = TruthValue::parse(&ch.to_string()).ok_or_else(|| Failure::usage(format!("`{ch}` is not a truth value")))?;
    }
    Ok(v)
}

fn cmd_connectives(ctx: &mut Ctx, command: &ConnectivesCommand) -> Result<(), Failure> {
    match command {
        ConnectivesCommand::Catalog => {
            let rows: Vec<CatalogRow> = Connective::all()
                .map(|c| CatalogRow {
                    column: c.peirce_column(),
                    name: c.name(),
                    vector: c.vector_string(),
                    aliases: c.aliases(),
                    provenance: c.provenance(),
                })
                .collect();
            if ctx.json() {
                ctx.emit_json(&rows);
            } else {
                let width = rows.iter().map(|r| r.name.len()).max().unwrap_or(0);
                for r in rows {
                    let aliases = if r.aliases.is_empty() { String::new() } else { format!("  ({})", r.aliases.join(", ")) };
                    ctx.line(format!("{:>2}  {}  {:<width$}{aliases}", r.column, r.vector, r.name).trim_end());
                }
            }
        }
        ConnectivesCommand::PaperTable => {
            let t = atlas::paper_table();
            if ctx.json() {
                ctx.emit_json(&t);
            } else {
                ctx.out.push_str(&atlas::render_paper_table(&t));
            }
        }
        ConnectivesCommand::Identify { values } => {
            let v = parse_values(values)?;
            let c = atlas::identify(v);
            if ctx.json() {
                ctx.emit_json(&json!({ "values": v, "connective": c, "column": c.peirce_column() }));
            } else {
                ctx.line(format!("{} (column {})", c.name(), c.peirce_column()));
            }
        }
        ConnectivesCommand::Xframe { connective } => {
            let x = atlas::xframe_of(*connective);
            if ctx.json() {
                let closed: Vec<String> =
                    (0..4).filter(|&i| x.closed[i]).map(illation_core::connective::pair_label).collect();
                ctx.emit_json(&json!({
                    "connective": connective,
                    "closed": x.closed,
                    "positions": atlas::XFRAME_POSITIONS,
                    "closed_pairs": closed,
                }));
            } else {
                ctx.out.push_str(&atlas::render_xframe(x));
            }
        }
        ConnectivesCommand::Enumerate { vars, slots, limit, count_only, shapes } => {
            let spec = EnumerationSpec {
                max_variables: *vars,
                max_connective_slots: *slots,
                shape_policy: match shapes {
                    Shapes::RightCombs => ShapePolicy::RightCombs,
                    Shapes::AllTrees => ShapePolicy::AllTrees,
                },
                emit_limit: if *count_only { 0 } else { *limit },
            };
            cmd_enumerate(ctx, &spec, *count_only)?;
        }
    }
    Ok(())
}

fn cmd_enumerate(ctx: &mut Ctx, spec: &EnumerationSpec, count_only: bool) -> Result<(), Failure> {
    let summary = atlas::summarize(spec)?;
    let mut emitted = Vec::new();
    let mut truncated = false;
    if !count_only {
        let config = ctx.config;
        let _ = atlas::for_each_tautology(spec, |e| {
            if emitted.len() == spec.emit_limit {
                truncated = true;
                return ControlFlow::Break(());
            }
            emitted.push((e.slots, render(&e.formula, config), e.connectives));
            ControlFlow::Continue(())
        })?;
    }
    if ctx.json() {
        let items: Vec<_> = emitted
            .iter()
            .map(|(k, text, cs)| json!({ "slots": k, "formula": text, "connectives": cs }))
            .collect();
        ctx.emit_json(&json!({ "spec": spec, "emitted": items, "truncated": truncated, "summary": summary }));
        return Ok(());
    }
    for (_, text, _) in &emitted {
        ctx.line(text);
    }
    if truncated {
        ctx.line(format!("... stopped after {} (raise --limit for more)", spec.emit_limit));
    }
    ctx.line("slots  shapes  formulas  tautologies  distinct");
    for s in &summary {
        ctx.line(format!("{:>5}  {:>6}  {:>8}  {:>11}  {:>8}", s.slots, s.shapes, s.formulas, s.tautologies, s.distinct));
    }
    let raw: u64 = summary.iter().map(|s| s.tautologies).sum();
    let distinct: u64 = summary.iter().map(|s| s.distinct).sum();
    ctx.line(format!("total: {raw} tautologies, {distinct} up to renaming"));
    Ok(())
}

fn cmd_syllogism(ctx: &mut Ctx, command: &SyllogismCommand) -> Result<(), Failure> {
    match command {
        SyllogismCommand::Render { figure, subject, predicate } => {
            let c = CategoricalForm::new(*figure, subject, predicate)?;
            for name in [&c.subject, &c.predicate] {
                check_reserved(&Formula::variable(name.clone()), ctx.config.notation)?;
            }
            let text = syllogism::render_categorical(&c, ctx.config);
            if ctx.json() {
                let formula = syllogism::as_formula(&c).ok();
                ctx.emit_json(&json!({ "form": c, "rendered": text, "formula": formula }));
            } else {
                ctx.line(text);
            }
        }
        SyllogismCommand::Barbara { x, y, z } => {
            let n = |s: &str| VariableName::new(s).map_err(Failure::from);
            let names = [n(x)?, n(y)?, n(z)?];
            for name in &names {
                check_reserved(&Formula::variable(name.clone()), ctx.config.notation)?;
            }
            let b = syllogism::barbara(&names[0], &names[1], &names[2]);
            if ctx.json() {
                let body = json!({
                    "nested": { "formula": ctx.show(&b.nested), "verdict": b.nested_verdict },
                    "conjunctive": { "formula": ctx.show(&b.conjunctive), "verdict": b.conjunctive_verdict },
                });
                ctx.emit_json(&body);
            } else {
                let nested = ctx.show(&b.nested);
                let conjunctive = ctx.show(&b.conjunctive);
                ctx.line(format!("nested:      {nested}    {}", b.nested_verdict.class.as_str()));
                ctx.line(format!("conjunctive: {conjunctive}    {}", b.conjunctive_verdict.class.as_str()));
            }
        }
        SyllogismCommand::AeioTable => {
            let cfg = ctx.config;
            if ctx.json() {
                let rows: Vec<_> = Figure::ALL
                    .iter()
                    .map(|&fig| {
                        let c = CategoricalForm::new(fig, "a", "b").expect("valid");
                        let (reading, name) = fig.gloss();
                        json!({
                            "figure": fig,
                            "rendered": syllogism::render_categorical(&c, cfg),
                            "reading": reading,
                            "name": name,
                        })
                    })
                    .collect();
                ctx.emit_json(&rows);
            } else {
                ctx.out.push_str(&syllogism::aeio_table(cfg));
            }
        }
    }
    Ok(())
}
