//! Subcommand implementations. Each returns the full standard output, any
//! diagnostics for standard error and the exit code, so that `main` does
//! all of the printing.

use std::cmp::Ordering;
use std::fmt::Write;
use std::path::Path;

use rbgs::gsb::{
    check_compositions, check_gsb, complete, enumerate_compositions, ideal_oracle, irr_enumerate, reduce, Bounds,
    CompletionStatus, CompositionKind, CompositionRecord, CompositionStatus, KindSet,
};
use rbgs::order::compare;
use rbgs::presets::{
    commutative_relations, default_instantiation_deg, dendriform_axiom_check, dialgebra_enveloping_relations,
    parse_dendriform, trialgebra_enveloping_relations, DendriformData, DendriformKind, DialgebraFamilies,
};
use rbgs::textio::{
    parse_expr, parse_rational, parse_rules, parse_word, print_poly, print_star_word, print_word, write_rules,
};
use rbgs::{Context, Poly, Rational, Relations};
use serde::Serialize;

use crate::error::CliError;
use crate::{BoundArgs, CheckArgs, Command, DataArgs, Family, Preset};

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output {
            stdout,
            stderr: String::new(),
            code: 0,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

pub fn run(command: Command) -> CliResult<Output> {
    match command {
        Command::Normalize { lambda, gens, expr } => normalize(&lambda, gens, expr),
        Command::Compare { gens, words } => compare_words(gens, words),
        Command::Reduce { rules, expr, trace } => reduce_expr(&rules, &expr, trace),
        Command::Compositions { check } => compositions(check),
        Command::CheckGsb { check } => check_basis(check),
        Command::Complete { bounds, max_rounds } => complete_rules(bounds, max_rounds),
        Command::Irr { rules, max_deg } => irr(&rules, max_deg),
        Command::OracleDim { rules, max_deg, json } => oracle_dim(&rules, max_deg, json),
        Command::Preset { preset } => emit_preset(preset),
    }
}

fn read(path: &Path) -> CliResult<String> {
    std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })
}

fn load_rules(path: &Path) -> CliResult<Relations> {
    let file = parse_rules::<Rational>(&read(path)?).map_err(CliError::input(path.display().to_string()))?;
    Ok(Relations::new(file.ctx, file.relations)?)
}

fn lambda_arg(text: &str) -> CliResult<Rational> {
    parse_rational(text).map_err(CliError::input("--lambda"))
}

fn context(lambda: Rational, names: &[String]) -> CliResult<Context> {
    Context::new(lambda, names.iter().map(String::as_str)).map_err(CliError::input("--gens"))
}

/// `--gens` takes any number of values, so trailing positionals given after
/// it land in the same list. Moves the last `count` of them back out.
fn split_trailing(
    mut gens: Vec<String>,
    mut given: Vec<String>,
    count: usize,
) -> CliResult<(Vec<String>, Vec<String>)> {
    if given.is_empty() {
        if gens.len() <= count {
            return Err(CliError::Usage(format!(
                "expected {count} argument(s) after the generator names"
            )));
        }
        given = gens.split_off(gens.len() - count);
    }
    if given.len() != count {
        return Err(CliError::Usage(format!(
            "expected {count} argument(s), got {}",
            given.len()
        )));
    }
    Ok((gens, given))
}

fn normalize(lambda: &str, gens: Vec<String>, expr: Option<String>) -> CliResult<Output> {
    let (gens, mut expr) = split_trailing(gens, expr.into_iter().collect(), 1)?;
    let ctx = context(lambda_arg(lambda)?, &gens)?;
    let p = parse_expr(&expr.remove(0), &ctx).map_err(CliError::input("expression"))?;
    Ok(Output::ok(format!("{}\n", print_poly(&p, &ctx))))
}

fn compare_words(gens: Vec<String>, words: Vec<String>) -> CliResult<Output> {
    let (gens, words) = split_trailing(gens, words, 2)?;
    let ctx = context(Rational::default(), &gens)?;
    let u = parse_word(&words[0], &ctx).map_err(CliError::input("first word"))?;
    let v = parse_word(&words[1], &ctx).map_err(CliError::input("second word"))?;
    let answer = match compare(&u, &v, &ctx)? {
        Ordering::Less => "LT",
        Ordering::Equal => "EQ",
        Ordering::Greater => "GT",
    };
    Ok(Output::ok(format!("{answer}\n")))
}

fn reduce_expr(rules: &Path, expr: &str, trace: bool) -> CliResult<Output> {
    let set = load_rules(rules)?;
    let ctx = set.ctx();
    let p = parse_expr(expr, ctx).map_err(CliError::input("expression"))?;
    let red = reduce(&p, &set)?;
    let mut out = String::new();
    if trace {
        for (n, step) in red.steps.iter().enumerate() {
            let term = Poly::term(step.word.clone(), step.coeff.clone());
            writeln!(
                out,
                "step {}: {} by rule {} at {}",
                n + 1,
                print_poly(&term, ctx),
                step.rule + 1,
                print_star_word(&step.frame, ctx)
            )
            .expect("writing to a String cannot fail");
        }
    }
    writeln!(out, "{}", print_poly(&red.normal_form, ctx)).expect("writing to a String cannot fail");
    Ok(Output::ok(out))
}

fn resolve_bounds(args: &BoundArgs) -> CliResult<(Bounds, KindSet)> {
    let kinds = match &args.kinds {
        Some(text) => text
            .parse::<KindSet>()
            .map_err(|e| CliError::Usage(format!("--kinds: {e}")))?,
        None if args.mult_deg.is_some() => KindSet::ALL,
        None => KindSet::AMBIGUITIES,
    };
    if kinds.has_multiplication() && args.mult_deg.is_none() {
        return Err(CliError::Usage(
            "--mult-deg is required when multiplication compositions are requested".into(),
        ));
    }
    if args.max_deg == 0 {
        return Err(CliError::Usage("--max-deg must be at least 1".into()));
    }
    if args.mult_deg == Some(0) && kinds.has_multiplication() {
        return Err(CliError::Usage("--mult-deg must be at least 1".into()));
    }
    Ok((Bounds::new(args.max_deg, args.mult_deg.unwrap_or(0)), kinds))
}

fn describe(r: &CompositionRecord) -> String {
    let mut line = match r.kind {
        CompositionKind::Intersection | CompositionKind::Inclusion => {
            format!("{} ({}, {}) at {}", r.kind, r.f, r.g.unwrap_or(r.f), r.leading)
        }
        CompositionKind::RightMult => format!(
            "{} {} * P({}) at {}",
            r.kind,
            r.f,
            r.multiplier.as_deref().unwrap_or("?"),
            r.leading
        ),
        CompositionKind::LeftMult => format!(
            "{} P({}) * {} at {}",
            r.kind,
            r.multiplier.as_deref().unwrap_or("?"),
            r.f,
            r.leading
        ),
    };
    if let Some(frame) = &r.frame {
        write!(line, " in {frame}").expect("writing to a String cannot fail");
    }
    match r.status {
        CompositionStatus::Trivial => line.push_str(": trivial"),
        CompositionStatus::Nontrivial => {
            write!(line, ": nontrivial, remainder {}", r.remainder).expect("writing to a String cannot fail")
        }
    }
    line
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("report types serialize");
    text.push('\n');
    text
}

#[derive(Serialize)]
struct CompositionList {
    bounds: Bounds,
    kinds: Vec<CompositionKind>,
    total: usize,
    nontrivial: usize,
    compositions: Vec<CompositionRecord>,
}

fn compositions(args: CheckArgs) -> CliResult<Output> {
    let (bounds, kinds) = resolve_bounds(&args.bounds)?;
    let set = load_rules(&args.bounds.rules)?;
    let comps = enumerate_compositions(&set, bounds, kinds)?;
    let records: Vec<CompositionRecord> = check_compositions(&set, comps, args.jobs)?
        .iter()
        .map(|c| c.record(set.ctx()))
        .collect();
    let nontrivial = records
        .iter()
        .filter(|r| r.status == CompositionStatus::Nontrivial)
        .count();
    if args.json {
        return Ok(Output::ok(to_json(&CompositionList {
            bounds,
            kinds: kinds.kinds(),
            total: records.len(),
            nontrivial,
            compositions: records,
        })));
    }
    let mut out = String::new();
    for (n, r) in records.iter().enumerate() {
        writeln!(out, "{}. {}", n + 1, describe(r)).expect("writing to a String cannot fail");
    }
    writeln!(out, "{} composition(s), {nontrivial} nontrivial", records.len())
        .expect("writing to a String cannot fail");
    Ok(Output::ok(out))
}

fn check_basis(args: CheckArgs) -> CliResult<Output> {
    let (bounds, kinds) = resolve_bounds(&args.bounds)?;
    let set = load_rules(&args.bounds.rules)?;
    let report = check_gsb(&set, bounds, kinds, args.jobs)?;
    let summary = report.summary(set.ctx());
    let code = if summary.pass { 0 } else { 1 };
    let stdout = if args.json {
        to_json(&summary)
    } else {
        let mut out = format!("{}\n", summary.verdict);
        for c in &summary.counts {
            writeln!(out, "  {}: {} checked, {} nontrivial", c.kind, c.total, c.nontrivial)
                .expect("writing to a String cannot fail");
        }
        for r in &summary.failures {
            writeln!(out, "  {}", describe(r)).expect("writing to a String cannot fail");
        }
        out
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code,
    })
}

fn complete_rules(args: BoundArgs, max_rounds: usize) -> CliResult<Output> {
    let (bounds, kinds) = resolve_bounds(&args)?;
    if max_rounds == 0 {
        return Err(CliError::Usage("--max-rounds must be at least 1".into()));
    }
    let set = load_rules(&args.rules)?;
    let done = complete(&set, bounds, kinds, max_rounds)?;
    let (state, code) = match done.status {
        CompletionStatus::Quiescent => ("no new rules in the last round", 0),
        CompletionStatus::RoundLimit => ("round limit reached, result may be incomplete", 1),
    };
    Ok(Output {
        stdout: write_rules(done.relations.ctx(), done.relations.relations()),
        stderr: format!(
            "completion: {} round(s), {} rule(s) added, {state}\n",
            done.rounds,
            done.added.len()
        ),
        code,
    })
}

fn irr(rules: &Path, max_deg: usize) -> CliResult<Output> {
    if max_deg == 0 {
        return Err(CliError::Usage("--max-deg must be at least 1".into()));
    }
    let set = load_rules(rules)?;
    let mut out = String::new();
    for w in irr_enumerate(&set, max_deg)? {
        writeln!(out, "{}", print_word(&w, set.ctx())).expect("writing to a String cannot fail");
    }
    Ok(Output::ok(out))
}

#[derive(Serialize)]
struct OracleReport {
    max_deg: usize,
    span_dim: usize,
    balanced: bool,
    rows: Vec<rbgs::gsb::OracleRow>,
}

fn oracle_dim(rules: &Path, max_deg: usize, json: bool) -> CliResult<Output> {
    if max_deg == 0 {
        return Err(CliError::Usage("--max-deg must be at least 1".into()));
    }
    let set = load_rules(rules)?;
    let summary = ideal_oracle(&set, max_deg)?;
    let report = OracleReport {
        max_deg,
        span_dim: summary.rows.last().map_or(0, |r| r.span_dim),
        balanced: summary.balanced(),
        rows: summary.rows,
    };
    if json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut out = String::from("deg  words  irr  span  balanced\n");
    for r in &report.rows {
        writeln!(
            out,
            "{:<4} {:<6} {:<4} {:<5} {}",
            r.max_deg,
            r.words,
            r.irreducible,
            r.span_dim,
            if r.balanced() { "yes" } else { "no" }
        )
        .expect("writing to a String cannot fail");
    }
    writeln!(out, "ideal span dimension up to degree {max_deg}: {}", report.span_dim)
        .expect("writing to a String cannot fail");
    Ok(Output::ok(out))
}

fn load_data(args: &DataArgs) -> CliResult<(DendriformData<Rational>, Rational)> {
    let data = parse_dendriform(&read(&args.data)?).map_err(CliError::input(args.data.display().to_string()))?;
    Ok((data, lambda_arg(&args.lambda)?))
}

fn axiom_warning(data: &DendriformData<Rational>, kind: DendriformKind) -> CliResult<String> {
    let report = dendriform_axiom_check(data, kind)?;
    if report.pass() {
        return Ok(String::new());
    }
    let failed: Vec<String> = report.failed_axioms().iter().map(usize::to_string).collect();
    Ok(format!(
        "warning: structure constants violate axiom(s) {}; the presentation is emitted anyway\n",
        failed.join(", ")
    ))
}

fn emit_preset(preset: Preset) -> CliResult<Output> {
    match preset {
        Preset::Commutative {
            gens,
            max_deg,
            inst_deg,
            lambda,
        } => {
            if max_deg == 0 || inst_deg == Some(0) {
                return Err(CliError::Usage("degrees must be at least 1".into()));
            }
            let ctx = context(lambda_arg(&lambda)?, &gens)?;
            let inst = inst_deg.unwrap_or_else(|| default_instantiation_deg(max_deg));
            let set = commutative_relations(&ctx, inst)?;
            let mut out = format!("# commutative, P(u) instantiated for deg(u) <= {inst}\n");
            out.push_str(&write_rules(set.ctx(), set.relations()));
            Ok(Output::ok(out))
        }
        Preset::Dialgebra { data, families } => {
            let (table, lambda) = load_data(&data)?;
            let stderr = axiom_warning(&table, DendriformKind::Di)?;
            let chosen = DialgebraFamilies {
                f1: families.contains(&Family::F1),
                f2: families.contains(&Family::F2),
                f3: families.contains(&Family::F3),
            };
            let set = dialgebra_enveloping_relations(&table, lambda, chosen)?;
            let names: Vec<String> = families.iter().map(Family::to_string).collect();
            let mut out = format!("# dendriform dialgebra, families {}\n", names.join(", "));
            out.push_str(&write_rules(set.ctx(), set.relations()));
            Ok(Output {
                stdout: out,
                stderr,
                code: 0,
            })
        }
        Preset::Trialgebra { data } => {
            let (table, lambda) = load_data(&data)?;
            let stderr = axiom_warning(&table, DendriformKind::Tri)?;
            let set = trialgebra_enveloping_relations(&table, lambda)?;
            let mut out = String::from("# dendriform trialgebra\n");
            out.push_str(&write_rules(set.ctx(), set.relations()));
            Ok(Output {
                stdout: out,
                stderr,
                code: 0,
            })
        }
    }
}
