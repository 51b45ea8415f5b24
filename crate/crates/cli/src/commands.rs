use std::fmt::Write as _;

use osquad::chordality::{chordality_report, is_l_chordal, ChordalCheck, CircuitChord};
use osquad::closure::{circuits_covered, closure, ClosureOperator, SetSystemSummary};
use osquad::ideal::{is_l_adic_in, AdicityReport};
use osquad::linalg::Field;
use osquad::matroid::{BinaryCheck, CircuitFamily};
use osquad::verify::{verify_all, verify_instance, CheckOutcome, InstanceFacts};
use osquad::Subset;
use serde::Serialize;

use crate::instance::{load, InstanceEcho};
use crate::{Cli, Command, Failure, Format, Operator};

pub const SCHEMA: u32 = 1;

#[derive(Serialize)]
struct Report<R: Serialize> {
    schema: u32,
    tool: &'static str,
    version: &'static str,
    command: CommandEcho,
    #[serde(skip_serializing_if = "Option::is_none")]
    instance: Option<InstanceEcho>,
    result: R,
}

#[derive(Serialize, Default)]
struct CommandEcho {
    name: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    l: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    operator: Option<ClosureOperator>,
    #[serde(skip_serializing_if = "Option::is_none")]
    field: Option<Field>,
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    slow_verify: Option<bool>,
}

#[derive(Serialize)]
struct SizeCount {
    size: usize,
    count: usize,
}

#[derive(Serialize)]
struct CircuitsResult {
    count: usize,
    rank: usize,
    binary: BinaryCheck,
    by_size: Vec<SizeCount>,
    circuits: Vec<Subset>,
}

#[derive(Serialize)]
struct ChordalityResult {
    chordal: bool,
    chordality_index: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    check: Option<ChordalCheck>,
    chordless: Vec<Subset>,
    circuits: Vec<CircuitChord>,
}

#[derive(Serialize)]
struct ClosureResult {
    generators: Vec<Subset>,
    system: SetSystemSummary,
    covered: bool,
    missing: Vec<Subset>,
}

#[derive(Serialize)]
struct VerifyResult {
    passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    facts: Option<InstanceFacts>,
    checks: Vec<CheckOutcome>,
}

fn emit<R: Serialize>(format: Format, report: &Report<R>, text: String) {
    match format {
        Format::Json => {
            let json = serde_json::to_string_pretty(report).expect("reports serialize");
            println!("{json}");
        }
        Format::Text => print!("{text}"),
    }
}

fn header(name: &str, echo: &InstanceEcho) -> String {
    format!("{name}: {} ({}), n = {}\n", echo.name, echo.source, echo.ground)
}

fn list(sets: &[Subset]) -> String {
    if sets.is_empty() {
        return "none".into();
    }
    sets.iter().map(|s| s.to_string()).collect::<Vec<_>>().join(" ")
}

pub fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Circuits(args) => {
            let source = args.required()?;
            let f = load(&source, cli.max_n)?;
            let echo = InstanceEcho::of(&source, &f);
            let result = circuits_result(&f);
            let mut text = header("circuits", &echo);
            let _ = writeln!(text, "{} circuits, rank {}", result.count, result.rank);
            for sc in &result.by_size {
                let _ = writeln!(text, "  size {}: {}", sc.size, sc.count);
            }
            let _ = writeln!(text, "binary: {}", result.binary.binary);
            for c in &result.circuits {
                let _ = writeln!(text, "{c}");
            }
            let command = CommandEcho { name: "circuits", ..Default::default() };
            emit(cli.format, &wrap(command, Some(echo), result), text);
        }
        Command::Chordality { instance, l } => {
            let source = instance.required()?;
            let f = load(&source, cli.max_n)?;
            let echo = InstanceEcho::of(&source, &f);
            let check = l.map(|l| is_l_chordal(&f, l)).transpose()?;
            let r = chordality_report(&f);
            let result = ChordalityResult {
                chordal: r.is_chordal(),
                chordality_index: r.chordality_index,
                check,
                chordless: r.chordless().filter(|c| c.len() >= 4).collect(),
                circuits: r.circuits.clone(),
            };
            let mut text = header("chordality", &echo);
            let _ = writeln!(text, "chordal: {}", result.chordal);
            let _ = writeln!(text, "chordality index: {}", result.chordality_index);
            if let Some(c) = &result.check {
                let _ = writeln!(text, "{}-chordal: {}", c.level, c.chordal);
                if let Some(x) = c.failing {
                    let _ = writeln!(text, "  first chordless circuit: {x}");
                }
            }
            let _ = writeln!(text, "chordless circuits (size >= 4): {}", list(&result.chordless));
            for c in result.circuits.iter().filter(|c| c.circuit.len() >= 4) {
                match c.witness {
                    Some(w) => {
                        let _ = writeln!(text, "  {}: chord {} via {} and {}", c.circuit, w.chord, w.c1, w.c2);
                    }
                    None => {
                        let _ = writeln!(text, "  {}: no chord", c.circuit);
                    }
                }
            }
            let command = CommandEcho { name: "chordality", l: *l, ..Default::default() };
            emit(cli.format, &wrap(command, Some(echo), result), text);
        }
        Command::Closure { instance, operator, l } => {
            let source = instance.required()?;
            let f = load(&source, cli.max_n)?;
            let echo = InstanceEcho::of(&source, &f);
            let op = match operator {
                Operator::Delta => ClosureOperator::Delta,
                Operator::DeltaPrime => ClosureOperator::DeltaPrime,
            };
            let generators = f.circuits_up_to(*l);
            let system = closure(op, &generators, f.ground())?;
            let cov = circuits_covered(&f, &system)?;
            let result = ClosureResult {
                generators,
                system: system.summary(),
                covered: cov.covered,
                missing: cov.missing,
            };
            let mut text = header("closure", &echo);
            let name = if op == ClosureOperator::Delta { "delta" } else { "delta-prime" };
            let _ = writeln!(text, "operator {name}, generators of size <= {l}: {}", list(&result.generators));
            let _ = writeln!(text, "closure has {} members", result.system.member_count);
            let _ = writeln!(text, "minimal members: {}", list(&result.system.minimal_members));
            let _ = writeln!(text, "all circuits covered: {}", result.covered);
            let _ = writeln!(text, "missing circuits: {}", list(&result.missing));
            let command = CommandEcho { name: "closure", l: Some(*l), operator: Some(op), ..Default::default() };
            emit(cli.format, &wrap(command, Some(echo), result), text);
        }
        Command::Adicity { instance, l, prime } => {
            let source = instance.required()?;
            let field = match prime {
                Some(p) => Field::prime(*p)?,
                None => Field::Rational,
            };
            let f = load(&source, cli.max_n)?;
            let echo = InstanceEcho::of(&source, &f);
            let result: AdicityReport = is_l_adic_in(&f, *l, field)?;
            let mut text = header("adicity", &echo);
            let _ = writeln!(text, "{}-adic: {}", result.level, result.is_l_adic);
            for v in result.circuits.iter().filter(|v| v.size > l + 1) {
                let verdict = if v.member { "in ideal" } else { "NOT in ideal" };
                let _ = writeln!(text, "  {}: boundary {verdict}", v.circuit);
            }
            let command = CommandEcho { name: "adicity", l: Some(*l), field: Some(field), ..Default::default() };
            emit(cli.format, &wrap(command, Some(echo), result), text);
        }
        Command::Verify { instance, slow_verify } => {
            let source = instance.source()?;
            let (echo, facts, checks) = match &source {
                Some(source) => {
                    let f = load(source, cli.max_n)?;
                    let (facts, checks) = verify_instance(&f, *slow_verify);
                    (Some(InstanceEcho::of(source, &f)), Some(facts), checks)
                }
                None => (None, None, verify_all(cli.seed)),
            };
            let passed = checks.iter().all(|c| c.passed);
            let mut text = match &echo {
                Some(e) => header("verify", e),
                None => format!("verify: full battery, seed {}\n", cli.seed),
            };
            if let Some(facts) = &facts {
                let _ = writeln!(
                    text,
                    "binary: {}, chordality index {}, {}-adic, delta covers: {}, delta-prime covers: {}",
                    facts.binary, facts.chordality_index, facts.adicity, facts.delta_covers, facts.delta_prime_covers
                );
            }
            for c in &checks {
                let _ = writeln!(text, "{} {}: {}", if c.passed { "PASS" } else { "FAIL" }, c.name, c.detail);
            }
            let first_failure = checks.iter().find(|c| !c.passed).map(|c| c.name.clone());
            let command = CommandEcho {
                name: "verify",
                seed: source.is_none().then_some(cli.seed),
                slow_verify: Some(*slow_verify),
                ..Default::default()
            };
            emit(cli.format, &wrap(command, echo, VerifyResult { passed, facts, checks }), text);
            if let Some(name) = first_failure {
                return Err(Failure::Check(name));
            }
        }
    }
    Ok(())
}

fn wrap<R: Serialize>(command: CommandEcho, instance: Option<InstanceEcho>, result: R) -> Report<R> {
    Report {
        schema: SCHEMA,
        tool: "osquad",
        version: env!("CARGO_PKG_VERSION"),
        command,
        instance,
        result,
    }
}

fn circuits_result(f: &CircuitFamily) -> CircuitsResult {
    CircuitsResult {
        count: f.len(),
        rank: f.matroid_rank(),
        binary: f.is_binary(),
        by_size: f
            .counts_by_len()
            .into_iter()
            .map(|(size, count)| SizeCount { size, count })
            .collect(),
        circuits: f.circuits().to_vec(),
    }
}
