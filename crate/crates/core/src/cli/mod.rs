//! Command-line front end. [`run_command`] takes the argument list (without
//! the program name) and returns the exit code and the text to print.
//!
//! Exit codes: 0 success, 1 mismatch or nothing found, 2 usage or input
//! error, 3 resource cap hit. Caps can also be set through
//! `EHRPAT_VOLUME_CAP` and `EHRPAT_WORK_CAP`.

mod parse;

pub use parse::{parse_expr, parse_unchecked};

use std::fmt::Write as _;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::analysis::delta_intervals;
use crate::ehrhart::{Engine, EngineConfig, DEFAULT_VOLUME_CAP};
use crate::exactnum::{hstar_from_ehrhart, rational_to_json, Polynomial};
use crate::oracle::{first_difference, Oracle, DEFAULT_WORK_CAP};
use crate::patterns::{
    fibonacci_bound, middle_pattern, remaining_patterns, remaining_patterns_strict, KnownFacts, Mode, RuleSet,
    SignPattern,
};
use crate::search::{Bounds, Outcome, Searcher, Template};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Human,
    Json,
    Latex,
}

#[derive(Debug, Parser)]
#[command(name = "ehrpat", about = "Ehrhart polynomials and sign patterns of lattice-polytope constructions")]
struct Cli {
    #[arg(long, global = true, value_enum, default_value = "human")]
    format: Format,
    /// Largest simplex normalized volume handled by coset enumeration.
    #[arg(long, global = true, env = "EHRPAT_VOLUME_CAP")]
    volume_cap: Option<u64>,
    /// Largest number of candidate points the oracle may visit.
    #[arg(long, global = true, env = "EHRPAT_WORK_CAP")]
    work_cap: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Ehrhart polynomial of EXPR.
    Ehrhart { expr: String },
    /// h*-vector of EXPR.
    Hstar { expr: String },
    /// Signs of the middle coefficients, highest degree first.
    Signs { expr: String },
    /// Lattice points in t·EXPR, counted by the oracle.
    Count {
        expr: String,
        #[arg(long)]
        t: u64,
    },
    /// Compare the engine with the interpolated oracle counts.
    Check { expr: String },
    /// Recompute every entry of a JSON-lines golden file.
    Verify {
        #[arg(long)]
        golden: PathBuf,
    },
    /// Sign patterns of dimension D not reached by the embedding rules.
    Remaining {
        #[arg(long)]
        dim: usize,
        #[arg(long, default_value = "inductive")]
        mode: String,
        #[arg(long, default_value = "I,II,III,IV")]
        rules: String,
    },
    /// The Fibonacci bound for dimension D next to the remaining count.
    Fib {
        #[arg(long)]
        dim: usize,
    },
    /// Scan a template for parameters realizing a sign pattern.
    Witness {
        #[arg(long)]
        template: String,
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 4096)]
        max_m: u64,
        #[arg(long, default_value_t = 4096)]
        max_r: u64,
    },
    /// Sign split of the expansion of (t+r+1)…(t+1)·t·(t-1).
    Delta {
        #[arg(long)]
        max_r: u64,
    },
}

struct Ctx {
    format: Format,
    engine: Engine,
    oracle: Oracle,
}

struct Reply {
    code: i32,
    human: String,
    json: Value,
    latex: Option<String>,
}

impl Reply {
    fn ok(human: String, json: Value) -> Self {
        Reply { code: 0, human, json, latex: None }
    }

    fn latex(mut self, s: String) -> Self {
        self.latex = Some(s);
        self
    }

    fn code(mut self, code: i32) -> Self {
        self.code = code;
        self
    }
}

pub fn run_command<I, S>(args: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<String>,
{
    let argv = std::iter::once("ehrpat".to_string()).chain(args.into_iter().map(Into::into));
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return (code, e.render().to_string());
        }
    };
    let ctx = Ctx {
        format: cli.format,
        engine: Engine::new(EngineConfig { volume_cap: cli.volume_cap.unwrap_or(DEFAULT_VOLUME_CAP) }),
        oracle: Oracle::with_work_cap(cli.work_cap.unwrap_or(DEFAULT_WORK_CAP)),
    };
    match dispatch(&ctx, cli.command) {
        Ok(reply) => {
            let text = match ctx.format {
                Format::Human => reply.human,
                Format::Json => serde_json::to_string_pretty(&reply.json).unwrap(),
                Format::Latex => reply.latex.unwrap_or(reply.human),
            };
            (reply.code, with_newline(text))
        }
        Err(e) => {
            let code = if matches!(e, Error::ResourceLimit(_)) { 3 } else { 2 };
            let text = match ctx.format {
                Format::Json => json!({ "error": e.to_string() }).to_string(),
                _ => format!("error: {e}"),
            };
            (code, with_newline(text))
        }
    }
}

fn with_newline(mut s: String) -> String {
    if !s.ends_with('\n') {
        s.push('\n');
    }
    s
}

fn tuple(p: &SignPattern) -> String {
    let signs: Vec<String> = p.to_full_desc().chars().map(String::from).collect();
    format!("({})", signs.join(","))
}

fn poly_json(expr: &str, p: &Polynomial) -> Value {
    json!({ "expr": expr, "polynomial": p.to_json() })
}

fn dispatch(ctx: &Ctx, cmd: Command) -> Result<Reply> {
    match cmd {
        Command::Ehrhart { expr } => {
            let p = ctx.engine.ehrhart(&parse_expr(&expr)?)?;
            Ok(Reply::ok(p.to_human(), poly_json(&expr, &p)).latex(p.to_latex()))
        }
        Command::Hstar { expr } => {
            let h = hstar_from_ehrhart(&ctx.engine.ehrhart(&parse_expr(&expr)?)?)?;
            let terms: Vec<String> = h
                .coeffs()
                .iter()
                .enumerate()
                .filter(|(_, c)| **c != 0.into())
                .map(|(i, c)| match i {
                    0 => c.to_string(),
                    1 => format!("{c}z"),
                    _ => format!("{c}z^{{{i}}}"),
                })
                .collect();
            let latex = format!("h^*(z) = {}", terms.join(" + "));
            Ok(Reply::ok(h.to_string(), json!({ "expr": expr, "hstar": h.to_json() })).latex(latex))
        }
        Command::Signs { expr } => {
            let p = ctx.engine.ehrhart(&parse_expr(&expr)?)?;
            let s = middle_pattern(&p)?;
            let human = format!("{} (dimension {}, full {})", s.to_desc(), s.dim(), s.to_full_desc());
            Ok(Reply::ok(human, json!({ "expr": expr, "pattern": s.to_json() })).latex(tuple(&s)))
        }
        Command::Count { expr, t } => {
            let c = parse_expr(&expr)?;
            let n = ctx.oracle.count_points(&c, t)?;
            let d = c.dimension()?;
            let json = json!({ "expr": expr, "t": t.to_string(), "count": n.to_string() });
            Ok(Reply::ok(n.to_string(), json).latex(format!("\\#({t}P \\cap \\mathbb{{Z}}^{{{d}}}) = {n}")))
        }
        Command::Check { expr } => {
            let r = ctx.oracle.cross_check(&ctx.engine, &parse_expr(&expr)?)?;
            let human = if r.equal {
                format!("equal: {}", r.symbolic.to_human())
            } else {
                format!(
                    "differ at t^{}\n  engine: {}\n  oracle: {}",
                    r.first_difference.unwrap_or(0),
                    r.symbolic.to_human(),
                    r.interpolated.to_human()
                )
            };
            Ok(Reply::ok(human, r.to_json()).code(if r.equal { 0 } else { 1 }))
        }
        Command::Verify { golden } => verify(ctx, &golden),
        Command::Remaining { dim, mode, rules } => {
            let mode: Mode = mode.parse()?;
            let rules: RuleSet = rules.parse()?;
            let found = match mode {
                Mode::Inductive => remaining_patterns(dim, &rules)?,
                Mode::Strict => remaining_patterns_strict(dim, &rules, &KnownFacts::with_catalog_witnesses()?)?,
            };
            let mode_name = if mode == Mode::Inductive { "inductive" } else { "strict" };
            let mut human = format!("dimension {dim}: {} remaining ({mode_name}, rules {rules})", found.len());
            for p in &found {
                write!(human, "\n{}", p.to_desc()).unwrap();
            }
            let json = json!({
                "dim": dim,
                "mode": mode_name,
                "rules": rules.to_string(),
                "count": found.len().to_string(),
                "patterns": found.iter().map(SignPattern::to_desc).collect::<Vec<_>>(),
            });
            let latex = format!("\\{{{}\\}}", found.iter().map(tuple).collect::<Vec<_>>().join(",\\ "));
            Ok(Reply::ok(human, json).latex(latex))
        }
        Command::Fib { dim } => {
            let f = fibonacci_bound(dim)?;
            let n = remaining_patterns(dim, &RuleSet::default())?.len();
            let equal = f == n.into();
            let human = format!("F_{dim} = {f}; remaining under rules I-IV: {n}");
            let json = json!({ "dim": dim, "fibonacci": f.to_string(), "remaining": n.to_string(), "equal": equal });
            Ok(Reply::ok(human, json).latex(format!("F_{{{dim}}} = {f}")).code(if equal { 0 } else { 1 }))
        }
        Command::Witness { template, pattern, max_m, max_r } => {
            let t = Template::by_name(&template)?;
            let target = SignPattern::from_desc(&pattern)?;
            let bounds = Bounds::new().max("m", max_m).max("r", max_r);
            let searcher = Searcher { engine: ctx.engine, ..Searcher::default() };
            match searcher.find_witness(&t, &target, &bounds)? {
                Outcome::Found(w) => {
                    let params: Vec<String> = w.params.iter().map(|(k, v)| format!("{k} = {v}")).collect();
                    let human = format!(
                        "{}\n  params: {}\n  pattern: {}\n  polynomial: {}\n  oracle verified: {}",
                        w.construction,
                        params.join(", "),
                        w.pattern.to_desc(),
                        w.polynomial.to_human(),
                        w.verified
                    );
                    Ok(Reply::ok(human, w.to_json()).latex(w.polynomial.to_latex()))
                }
                Outcome::NotFound { bounds, scanned } => {
                    let b: Vec<String> = bounds.iter().map(|(k, v)| format!("{k} <= {v}")).collect();
                    let human = format!("not found: {} parameter records scanned with {}", scanned, b.join(", "));
                    let json = json!({
                        "found": false,
                        "template": template,
                        "bounds": bounds.iter().map(|(k, v)| (k.clone(), Value::from(v.to_string()))).collect::<serde_json::Map<_, _>>(),
                        "scanned": scanned.to_string(),
                    });
                    Ok(Reply::ok(human, json).code(1))
                }
            }
        }
        Command::Delta { max_r } => {
            let rows = delta_intervals(max_r)?;
            let human = rows
                .iter()
                .map(|(a, b, d)| format!("r in [{a}, {b}]: delta = {d}"))
                .collect::<Vec<_>>()
                .join("\n");
            let json = Value::Array(
                rows.iter()
                    .map(|(a, b, d)| json!({ "from": a.to_string(), "to": b.to_string(), "delta": d.to_string() }))
                    .collect(),
            );
            let latex = rows
                .iter()
                .map(|(a, b, d)| format!("{a} \\le r \\le {b} & {d} \\\\"))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(Reply::ok(human, json).latex(latex))
        }
    }
}

fn verify(ctx: &Ctx, path: &PathBuf) -> Result<Reply> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::InvalidInput(format!("cannot read {}: {e}", path.display())))?;
    let mut lines = Vec::new();
    let mut rows = Vec::new();
    let mut failures = 0;
    for (n, line) in text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty()) {
        let entry: Value = serde_json::from_str(line)
            .map_err(|e| Error::InvalidInput(format!("line {}: {e}", n + 1)))?;
        let field = |k: &str| {
            entry.get(k).ok_or_else(|| Error::InvalidInput(format!("line {}: missing {k:?}", n + 1)))
        };
        let expr = field("expr")?.as_str().unwrap_or_default().to_string();
        let source = field("source")?.as_str().unwrap_or_default().to_string();
        let expected = Polynomial::from_json(&json!({ "coeffs": field("coeffs")? }))?;
        let actual = ctx.engine.ehrhart(&parse_expr(&expr)?)?;
        let diff = first_difference(&expected, &actual);
        match diff {
            None => lines.push(format!("ok        {source}")),
            Some(k) => {
                failures += 1;
                lines.push(format!(
                    "MISMATCH  {source}: coefficient of t^{k} is {} (golden {})",
                    actual.coeff(k),
                    expected.coeff(k)
                ));
            }
        }
        rows.push(json!({
            "source": source,
            "expr": expr,
            "equal": diff.is_none(),
            "first_difference": diff,
            "computed": actual.coeffs().iter().map(rational_to_json).collect::<Vec<_>>(),
        }));
    }
    lines.push(format!("{} entries, {failures} mismatched", rows.len()));
    let json = json!({ "entries": rows, "mismatches": failures.to_string() });
    Ok(Reply::ok(lines.join("\n"), json).code(if failures == 0 { 0 } else { 1 }))
}
