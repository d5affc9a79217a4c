use clap::{Parser, Subcommand};
use serde::Serialize;
use std::process::ExitCode;
use towerforge::algnum::AlgebraicNumber;
use towerforge::classify::{classify, table1_matrix, Membership, Table1Cell, TABLE1};
use towerforge::expr::{eval, parse, Expr, ParseError, Value};
use towerforge::geom::{trisect, verify, Program, Registry, Verdict};
use towerforge::poly::{Dyadic, DyadicInterval};
use towerforge::tower::DEFAULT_CAP;

const EXIT_OK: u8 = 0;
const EXIT_MISMATCH: u8 = 1;
const EXIT_INPUT: u8 = 2;
const EXIT_UNKNOWN: u8 = 3;

#[derive(Parser)]
#[command(name = "towerforge", version, about = "Classify numbers by geometric constructibility and compile constructions")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Per-method membership and minimal tier of a number
    Classify {
        expr: String,
        /// Largest splitting-field degree to compute
        #[arg(long, env = "TOWERFORGE_CAP", default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long)]
        json: bool,
    },
    /// Minimal polynomial and a 30-digit approximation
    Minpoly {
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Compile an expression to a construction program
    Compile {
        expr: String,
        /// Compiler to use; a comma list tries each in turn
        #[arg(long, default_value = "rc")]
        tools: String,
        /// Write the program here instead of stdout
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Check a construction program against an exact value
    Verify {
        program: std::path::PathBuf,
        expr: String,
        #[arg(long)]
        json: bool,
    },
    /// Reproduce the reference table of constructible numbers
    Table1 {
        #[arg(long, env = "TOWERFORGE_CAP", default_value_t = DEFAULT_CAP)]
        cap: u64,
        #[arg(long)]
        json: bool,
    },
}

/// Failure carrying its exit code.
struct Exit(u8, String);

type CmdResult = Result<u8, Exit>;

fn input_error(msg: impl std::fmt::Display) -> Exit {
    Exit(EXIT_INPUT, format!("error: {msg}"))
}

fn parse_expr(src: &str) -> Result<Expr, Exit> {
    parse(src).map_err(|e: ParseError| {
        let caret = " ".repeat(src[..e.offset.min(src.len())].chars().count());
        Exit(EXIT_INPUT, format!("error: {e}\n  {src}\n  {caret}^"))
    })
}

fn algebraic(src: &str) -> Result<AlgebraicNumber, Exit> {
    match eval(&parse_expr(src)?).map_err(input_error)? {
        Value::Algebraic(a) => Ok(a),
        Value::NotAlgebraic(c) => Err(input_error(format!("{c} is not algebraic"))),
    }
}

fn print_json<T: Serialize>(v: &T) {
    println!("{}", serde_json::to_string_pretty(v).expect("serializable"));
}

fn decimal(d: &Dyadic, digits: usize) -> String {
    AlgebraicNumber::from_rational(&d.to_rational()).to_decimal(digits)
}

fn cmd_classify(src: &str, cap: u64, json: bool) -> CmdResult {
    let e = parse_expr(src)?;
    let mut v = classify(&e, cap).map_err(input_error)?;
    v.input = src.to_string();
    if json {
        print_json(&v);
    } else {
        println!("{}", v.summary());
        for (tier, m) in v.flags() {
            println!("  {:<22} {m}", tier.label());
        }
        if let Some(s) = v.witness.shortcut {
            println!("  decided by: {s}");
        }
    }
    Ok(if v.has_unknown() { EXIT_UNKNOWN } else { EXIT_OK })
}

#[derive(Serialize)]
struct MinpolyReport {
    input: String,
    minpoly: String,
    degree: usize,
    decimal: String,
    isolating_interval: DyadicInterval,
}

fn cmd_minpoly(src: &str, json: bool) -> CmdResult {
    let a = algebraic(src)?;
    let report = MinpolyReport {
        input: src.to_string(),
        minpoly: a.minpoly().to_string(),
        degree: a.degree(),
        decimal: a.to_decimal(30),
        isolating_interval: a.isolating_interval().clone(),
    };
    if json {
        print_json(&report);
    } else {
        println!("{}", report.minpoly);
        println!("value: {}", report.decimal);
        println!("isolating interval: {}", report.isolating_interval);
    }
    Ok(EXIT_OK)
}

fn cmd_compile(src: &str, tools: &str, out: Option<&std::path::Path>) -> CmdResult {
    let e = parse_expr(src)?;
    let registry = Registry::default();
    let mut last = None;
    for tool in tools.split(',').map(str::trim) {
        match registry.compile(tool, &e) {
            Ok(p) => {
                let text = p.to_string();
                match out {
                    Some(path) => {
                        std::fs::write(path, &text)
                            .map_err(|err| input_error(format!("{}: {err}", path.display())))?;
                        eprintln!("{tool}: {} steps written to {}", p.len(), path.display());
                    }
                    None => print!("{text}"),
                }
                return Ok(EXIT_OK);
            }
            Err(err) => last = Some(err),
        }
    }
    Err(input_error(last.map_or_else(|| "no tools given".to_string(), |e| e.to_string())))
}

#[derive(Serialize)]
struct VerifyReport {
    program: String,
    input: String,
    verdict: Verdict,
    output: String,
    target: String,
}

fn cmd_verify(path: &std::path::Path, src: &str, json: bool) -> CmdResult {
    let text = std::fs::read_to_string(path).map_err(|e| input_error(format!("{}: {e}", path.display())))?;
    let program: Program = text.parse().map_err(input_error)?;
    let target = algebraic(src)?;
    let cert = verify(&program, &target).map_err(input_error)?;
    let report = VerifyReport {
        program: path.display().to_string(),
        input: src.to_string(),
        verdict: cert.verdict,
        output: decimal(&cert.output.midpoint(), 30),
        target: target.to_decimal(30),
    };
    if json {
        print_json(&report);
    } else {
        println!("{:?}", report.verdict);
        println!("  output {}", report.output);
        println!("  target {}", report.target);
    }
    Ok(match cert.verdict {
        Verdict::Verified => EXIT_OK,
        Verdict::Refuted => EXIT_MISMATCH,
    })
}

#[derive(Serialize)]
struct TrisectionCheck {
    angle: &'static str,
    expected: &'static str,
    verdict: Option<Verdict>,
    error: Option<String>,
    agree: bool,
}

fn trisection_check() -> TrisectionCheck {
    let sixth = num_rational::BigRational::new(1.into(), 6.into());
    let result = trisect(&sixth).map_err(|e| e.to_string()).and_then(|(p, target)| {
        verify(&p, &target).map(|c| c.verdict).map_err(|e| e.to_string())
    });
    let (verdict, error) = match result {
        Ok(v) => (Some(v), None),
        Err(e) => (None, Some(e)),
    };
    TrisectionCheck {
        angle: "cos2pi(1/6)",
        expected: "cos2pi(1/18)",
        agree: verdict == Some(Verdict::Verified),
        verdict,
        error,
    }
}

#[derive(Serialize)]
struct Table1Report {
    entries: usize,
    cells: Vec<Table1Cell>,
    trisection: TrisectionCheck,
    all_agree: bool,
}

fn cmd_table1(cap: u64, json: bool) -> CmdResult {
    let cells = table1_matrix(cap);
    let trisection = trisection_check();
    let all_agree = cells.iter().all(|c| c.agree) && trisection.agree;
    let unknown = cells.iter().any(|c| c.computed == Membership::Unknown);
    let decided_mismatch = cells.iter().any(|c| !c.agree && c.computed != Membership::Unknown) || !trisection.agree;
    let report = Table1Report { entries: TABLE1.len(), cells, trisection, all_agree };
    if json {
        print_json(&report);
    } else {
        for c in &report.cells {
            let status = if c.agree { "agree" } else { "DISAGREE" };
            println!(
                "{status:<9} {:<18} {:<22} expected {:<4} computed {}",
                c.entry,
                c.method.label(),
                c.expected.to_string(),
                c.computed
            );
        }
        let t = &report.trisection;
        let status = if t.agree { "agree" } else { "DISAGREE" };
        let outcome = match (&t.verdict, &t.error) {
            (Some(v), _) => format!("{v:?}"),
            (None, Some(e)) => e.clone(),
            (None, None) => unreachable!("check has an outcome"),
        };
        println!("{status:<9} {:<18} {:<22} trisect {} -> {}: {outcome}", "θ/3", "origami/neusis", t.angle, t.expected);
        let agreeing = report.cells.iter().filter(|c| c.agree).count();
        println!(
            "{} entries, {}/{} cells agree, trisection {}",
            report.entries,
            agreeing,
            report.cells.len(),
            if t.agree { "verified" } else { "failed" }
        );
    }
    Ok(if decided_mismatch {
        EXIT_MISMATCH
    } else if unknown {
        EXIT_UNKNOWN
    } else {
        EXIT_OK
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { expr, cap, json } => cmd_classify(expr, *cap, *json),
        Command::Minpoly { expr, json } => cmd_minpoly(expr, *json),
        Command::Compile { expr, tools, out } => cmd_compile(expr, tools, out.as_deref()),
        Command::Verify { program, expr, json } => cmd_verify(program, expr, *json),
        Command::Table1 { cap, json } => cmd_table1(*cap, *json),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(Exit(code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
