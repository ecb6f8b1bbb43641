use std::fmt::Write as _;
use std::path::Path;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use braid_monodromy::braid::{solver, BraidWord};
use braid_monodromy::halftwist::parse_expr;
use braid_monodromy::link::{cable, engine, jones_with, summarize_with, CableSpec, LinkSummary};
use braid_monodromy::monodromy::{builtin, Configuration, DegenerationDiagram, Factorization};
use braid_monodromy::suite::{self, Status};
use braid_monodromy::Error;

mod report;

use report::{Outcome, Report};

#[derive(Parser)]
#[command(name = "braidmon", version, about = "Braid words, half-twist notation, monodromy factorizations and closure invariants")]
struct Cli {
    /// Print a JSON report instead of text
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compile an expression and show its reduced word and normal form
    Eval {
        #[arg(short = 'n')]
        strands: usize,
        expr: String,
    },
    /// Garside normal form of a word
    Nf {
        #[arg(short = 'n')]
        strands: usize,
        word: String,
    },
    /// Decide whether two words are the same braid (exit 1 if not)
    Eq {
        #[arg(short = 'n')]
        strands: usize,
        left: String,
        right: String,
        /// garside or artin
        #[arg(long, default_value = "garside")]
        method: String,
    },
    /// Invariants of the closure
    Closure {
        #[arg(short = 'n')]
        strands: usize,
        word: String,
        /// temperley-lieb or state-sum
        #[arg(long, default_value = "temperley-lieb")]
        engine: String,
    },
    /// Jones polynomial of the closure
    Jones {
        #[arg(short = 'n')]
        strands: usize,
        word: String,
        #[arg(long, default_value = "temperley-lieb")]
        engine: String,
    },
    /// Cable one closure component
    Cable {
        #[arg(short = 'n')]
        strands: usize,
        word: String,
        /// 1-based closure component
        #[arg(long, default_value_t = 1)]
        component: usize,
        /// Number of parallel copies
        #[arg(long, default_value_t = 2)]
        copies: usize,
        /// Extra twists among the copies, on top of the blackboard framing
        #[arg(long, default_value_t = 0, allow_hyphen_values = true)]
        twists: i64,
    },
    /// Factorization of a built-in configuration, a configuration file, or
    /// the local cases of a degeneration diagram file
    Regen {
        source: String,
    },
    /// Run the regression suite over the worked examples
    Suite {
        /// Only rows whose anchor contains this text
        #[arg(long)]
        filter: Option<String>,
        /// Worker threads
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Unsupported(_) | Error::TooManyStrands { .. } | Error::TooManyCrossings { .. } => 3,
        _ => 2,
    }
}

fn compile(text: &str, n: usize) -> braid_monodromy::Result<BraidWord> {
    parse_expr(text)?.compile(n)
}

fn word_json(w: &BraidWord) -> Value {
    json!({ "strands": w.strands(), "letters": w.signed(), "text": w.to_string() })
}

fn summary_text(s: &LinkSummary) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "components: {}", s.component_count);
    for (k, c) in s.components.iter().enumerate() {
        let _ = writeln!(
            out,
            "  #{}: strands {:?}, self-writhe {}, jones {}",
            k + 1,
            c,
            s.self_writhes[k],
            s.per_component_jones[k].render("t", 2)
        );
    }
    let _ = writeln!(out, "linking matrix:");
    for row in &s.linking_matrix {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
        let _ = writeln!(out, " {}", cells.join(""));
    }
    let _ = writeln!(out, "jones: {}", s.jones_text());
    let _ = write!(out, "atlas: {}", s.atlas_match);
    out
}

fn eval(n: usize, expr: &str) -> braid_monodromy::Result<Outcome> {
    let w = compile(expr, n)?;
    let reduced = w.free_reduce();
    let nf = w.normal_form();
    let perm = w.permutation_image();
    let text = format!(
        "word: {w}\nreduced: {}\nnormal form: {nf}\npermutation: {perm}\nexponent sum: {}",
        reduced.compact(),
        w.exponent_sum()
    );
    let value = json!({
        "word": word_json(&w),
        "reduced": word_json(&reduced),
        "normal_form": nf.to_string(),
        "permutation": perm.to_string(),
        "exponent_sum": w.exponent_sum(),
    });
    Ok(Outcome::ok(text, value))
}

fn normal_form(n: usize, word: &str) -> braid_monodromy::Result<Outcome> {
    let w = compile(word, n)?;
    let nf = w.normal_form();
    let text = format!("{nf}\ndelta power: {}\ncanonical length: {}", nf.delta_power(), nf.canonical_length());
    let value = json!({
        "normal_form": nf.to_string(),
        "delta_power": nf.delta_power(),
        "canonical_length": nf.canonical_length(),
        "positive": nf.is_positive(),
        "word": word_json(&nf.to_word()),
    });
    Ok(Outcome::ok(text, value))
}

fn equal(n: usize, a: &str, b: &str, method: &str) -> braid_monodromy::Result<Outcome> {
    let s = solver(method)?;
    let same = s.equal(&compile(a, n)?, &compile(b, n)?)?;
    let text = format!("{} ({})", if same { "equal" } else { "not equal" }, s.name());
    Ok(Outcome { text, value: json!({ "equal": same, "method": s.name() }), failed: !same, code: None })
}

fn closure(n: usize, word: &str, engine_name: &str) -> braid_monodromy::Result<Outcome> {
    let e = engine(engine_name)?;
    let s = summarize_with(e, &compile(word, n)?)?;
    let value = serde_json::to_value(&s).expect("summaries serialize");
    Ok(Outcome::ok(summary_text(&s), value))
}

fn jones(n: usize, word: &str, engine_name: &str) -> braid_monodromy::Result<Outcome> {
    let e = engine(engine_name)?;
    let j = jones_with(e, &compile(word, n)?)?;
    let terms: serde_json::Map<String, Value> =
        j.terms().iter().map(|(&k, &c)| (braid_monodromy::link::half_key(k), json!(c))).collect();
    Ok(Outcome::ok(j.render("t", 2), json!({ "jones": terms, "engine": e.name() })))
}

fn cable_cmd(n: usize, word: &str, component: usize, p: usize, t: i64) -> braid_monodromy::Result<Outcome> {
    if component == 0 {
        return Err(Error::UnknownComponent("#0 (components are numbered from 1)".into()));
    }
    let w = compile(word, n)?;
    let c = cable(&w, CableSpec { component: component - 1, p, t })?;
    let s = summarize_with(&braid_monodromy::link::bracket::TemperleyLieb, &c.word);
    let mut text = format!("cabled word ({} strands): {}\nblackboard framing: {}", c.word.strands(), c.word, c.blackboard_framing);
    let summary = match &s {
        Ok(s) => {
            let _ = write!(text, "\n{}", summary_text(s));
            serde_json::to_value(s).expect("summaries serialize")
        }
        Err(e) => {
            let _ = write!(text, "\ninvariants skipped: {e}");
            Value::Null
        }
    };
    let value = json!({ "word": word_json(&c.word), "blackboard_framing": c.blackboard_framing, "summary": summary });
    Ok(Outcome::ok(text, value))
}

fn factorization_outcome(name: &str, f: &Factorization, stated: Option<BraidWord>) -> braid_monodromy::Result<Outcome> {
    let product = f.table_product();
    let nf = product.normal_form();
    let mut text = format!("configuration: {name} ({} strands)\n", f.strands);
    let mut factors = Vec::new();
    for x in &f.factors {
        let _ = writeln!(text, "  {}: {}\n      = {}", x.label, x.expr, x.word.free_reduce().compact());
        factors.push(json!({
            "label": x.label,
            "type": x.kind.name(),
            "count": x.count,
            "expr": x.expr,
            "word": word_json(&x.word.free_reduce()),
        }));
    }
    let _ = writeln!(text, "product: {}", product.compact());
    let _ = writeln!(text, "exponent sum: {} (expected {})", product.exponent_sum(), f.expected_degree());
    let _ = write!(text, "normal form: {nf}");
    let mut failed = product.exponent_sum() != f.expected_degree();
    let stated_equal = match stated {
        Some(s) => {
            let eq = product.equals(&s)?;
            let _ = write!(text, "\nstated product: {} ({})", s.compact(), if eq { "equal" } else { "not equal" });
            Some(eq)
        }
        None => None,
    };
    let summary = match summarize_with(&braid_monodromy::link::bracket::TemperleyLieb, &product) {
        Ok(s) => {
            let _ = write!(text, "\n{}", summary_text(&s));
            serde_json::to_value(&s).expect("summaries serialize")
        }
        Err(e @ Error::TooManyStrands { .. }) => {
            let _ = write!(text, "\ninvariants skipped: {e}");
            Value::Null
        }
        Err(e) => return Err(e),
    };
    failed |= stated_equal == Some(false) && name != "3pt-type2";
    let value = json!({
        "name": name,
        "strands": f.strands,
        "factors": factors,
        "product": word_json(&product),
        "exponent_sum": product.exponent_sum(),
        "expected_exponent_sum": f.expected_degree(),
        "normal_form": nf.to_string(),
        "stated_product_equal": stated_equal,
        "summary": summary,
    });
    Ok(Outcome { text, value, failed, code: None })
}

fn diagram_outcome(d: &DegenerationDiagram) -> Outcome {
    let mut text = String::from("vertex  position   lines  case\n");
    let mut rows = Vec::new();
    let mut unsupported = false;
    for v in d.lex_order_vertices() {
        let (x, y) = d.vertices[v];
        match d.classify_vertex(v) {
            Ok(c) => {
                let config = c.case.configuration_name();
                let _ = writeln!(text, "{:<7} ({x},{y}){:<4} {:<6} {}{}", v, "", c.k, c.case, config.map(|n| format!(" -> {n}")).unwrap_or_default());
                rows.push(json!({ "vertex": v, "position": [x, y], "lines": c.k, "case": c.case.to_string(), "configuration": config }));
            }
            Err(e) => {
                unsupported |= matches!(e, Error::Unsupported(_));
                let k = d.incident(v).len();
                let _ = writeln!(text, "{:<7} ({x},{y}){:<4} {:<6} {e}", v, "", k);
                rows.push(json!({ "vertex": v, "position": [x, y], "lines": k, "error": e.to_string() }));
            }
        }
    }
    let line_order = d.lex_order_lines();
    let _ = write!(text, "line order: {line_order:?}");
    let value = json!({ "vertices": rows, "line_order": line_order });
    Outcome { text, value, failed: false, code: unsupported.then_some(3) }
}

fn regen(source: &str) -> braid_monodromy::Result<Outcome> {
    if let Ok(b) = builtin(source) {
        return factorization_outcome(b.name(), &b.factorization()?, b.stated_product()?);
    }
    let path = Path::new(source);
    let text = std::fs::read_to_string(path).map_err(|e| Error::Config {
        path: source.to_string(),
        msg: format!("not a built-in configuration and not readable: {e}"),
    })?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Config { path: source.to_string(), msg: e.to_string() })?;
    if value.get("vertices").is_some() {
        return Ok(diagram_outcome(&DegenerationDiagram::from_json(&text)?));
    }
    let cfg = Configuration::from_json(&text)?;
    let name = if cfg.name.is_empty() { source.to_string() } else { cfg.name.clone() };
    factorization_outcome(&name, &cfg.factorization()?, None)
}

fn run_suite(filter: Option<&str>, jobs: usize) -> Outcome {
    use rayon::prelude::*;
    let checks = suite::select(filter);
    let rows: Vec<suite::SuiteRow> = if jobs > 1 {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(jobs).build().expect("thread pool");
        pool.install(|| checks.par_iter().map(|c| c.run()).collect())
    } else {
        checks.iter().map(|c| c.run()).collect()
    };
    let mut text = String::new();
    for r in &rows {
        let _ = writeln!(text, "{:<12} {:<40} {}", r.status.label(), r.anchor, r.title);
        if r.status != Status::Pass {
            let _ = writeln!(text, "             {}", r.detail);
        }
    }
    let count = |s: Status| rows.iter().filter(|r| r.status == s).count();
    let (pass, fail, disc) = (count(Status::Pass), count(Status::Fail), count(Status::Discrepancy));
    let _ = write!(text, "{} rows: {pass} pass, {fail} fail, {disc} discrepancy", rows.len());
    let keyed: Vec<Value> = rows.iter().map(|r| json!({ "anchor": r.anchor, "title": r.title, "status": r.status, "detail": r.detail })).collect();
    let value = json!({ "rows": keyed, "pass": pass, "fail": fail, "discrepancy": disc });
    Outcome { text, value, failed: fail > 0, code: None }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let (operation, input, result) = match &cli.command {
        Command::Eval { strands, expr } => ("eval", json!({ "n": strands, "expr": expr }), eval(*strands, expr)),
        Command::Nf { strands, word } => ("nf", json!({ "n": strands, "word": word }), normal_form(*strands, word)),
        Command::Eq { strands, left, right, method } => (
            "eq",
            json!({ "n": strands, "left": left, "right": right, "method": method }),
            equal(*strands, left, right, method),
        ),
        Command::Closure { strands, word, engine } => {
            ("closure", json!({ "n": strands, "word": word, "engine": engine }), closure(*strands, word, engine))
        }
        Command::Jones { strands, word, engine } => {
            ("jones", json!({ "n": strands, "word": word, "engine": engine }), jones(*strands, word, engine))
        }
        Command::Cable { strands, word, component, copies, twists } => (
            "cable",
            json!({ "n": strands, "word": word, "component": component, "copies": copies, "twists": twists }),
            cable_cmd(*strands, word, *component, *copies, *twists),
        ),
        Command::Regen { source } => ("regen", json!({ "source": source }), regen(source)),
        Command::Suite { filter, jobs } => (
            "suite",
            json!({ "filter": filter, "jobs": jobs }),
            Ok(run_suite(filter.as_deref(), (*jobs).max(1))),
        ),
    };
    let report = Report::new(operation, input, result, start.elapsed());
    report.print(cli.json);
    ExitCode::from(report.exit_code())
}
