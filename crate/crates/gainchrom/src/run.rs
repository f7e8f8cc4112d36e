//! Executes a parsed command, writing results to `out`.

use std::io::Write;
use std::str::FromStr;

use clap::ValueEnum;
use gainchrom_core::chromatic::{chi_integral, chi_modular, total_chromatic_poly_with_bound};
use gainchrom_core::combinatorics::{is_increasing_lds, is_vertex_order_lds, realize_lds};
use gainchrom_core::families::{
    catalan_regions, hollow_catalan, linial, linial_athanasiadis, sc_graph, sc_partition, sc_partition_closed_forms,
    sc_path_closed_forms, ClosedForms, FamilyKind,
};
use gainchrom_core::identities::{
    check_catalan_relations, check_complete_expansions, check_graph_expansions, check_linial_expansion,
    check_neutral_subset_expansion, check_stable_partition_expansion, check_total_expansion, check_total_uniform,
    fixture_corpus, run_invariance_suite, CheckReport, Evaluator, Selector, Value,
};
use gainchrom_core::{IntegralGainGraph, Poly2};
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value as Json};

use crate::cli::{
    Cli, Command, EvalArgs, Family, Function, LdsCommand, PolyArgs, RegionsArgs, Source, Suite, VerifyArgs,
};
use crate::graph_file::{read_gain_graph, read_simple_graph, GainGraphFile};
use crate::text::{format_partition, parse_partition, parse_poly, parse_sequence};
use crate::CliError;

pub fn run(cli: Cli, out: &mut dyn Write) -> Result<(), CliError> {
    match cli.command {
        Command::Eval(args) => eval(&args, out),
        Command::Poly(args) => poly(&args, out),
        Command::Regions(args) => regions(&args, out),
        Command::Verify(args) => verify(&args, out),
        Command::Lds(cmd) => lds(&cmd, out),
    }
}

/// A gain graph together with closed forms when it belongs to a family.
struct Instance {
    graph: IntegralGainGraph,
    closed: Option<ClosedForms>,
    source: String,
}

fn family_kind(f: Family) -> FamilyKind {
    match f {
        Family::Catalan => FamilyKind::Catalan,
        Family::HollowCatalan => FamilyKind::HollowCatalan,
        Family::Shi => FamilyKind::Shi,
        Family::Linial => FamilyKind::Linial,
    }
}

fn resolve(src: &Source) -> Result<Instance, CliError> {
    let given = [src.graph.is_some(), src.family.is_some(), src.partition.is_some(), src.minus_edges.is_some()];
    if given.iter().filter(|&&b| b).count() != 1 {
        return Err(CliError::Usage("give exactly one of --graph, --family, --partition, --minus-edges".into()));
    }
    if src.n.is_some() && src.family.is_none() {
        return Err(CliError::Usage("--n goes with --family".into()));
    }
    if let Some(path) = &src.graph {
        let graph = read_gain_graph(path)?;
        return Ok(Instance { graph, closed: None, source: path.display().to_string() });
    }
    if let (Some(family), Some(n)) = (src.family, src.n) {
        let kind = family_kind(family);
        let closed = if n >= 1 { Some(kind.closed_forms(n)?) } else { None };
        return Ok(Instance { graph: kind.graph(n), closed, source: format!("{} n={}", kind.name(), n) });
    }
    if let Some(text) = &src.partition {
        let p = parse_partition(text)?;
        let closed = Some(sc_partition_closed_forms(&p)?);
        return Ok(Instance { graph: sc_partition(&p), closed, source: format!("partition {}", format_partition(&p)) });
    }
    let path = src.minus_edges.as_ref().expect("one source is given");
    let g = read_simple_graph(path)?;
    let closed = Some(sc_path_closed_forms(&g)?);
    Ok(Instance { graph: sc_graph(&g), closed, source: format!("minus-edges {}", path.display()) })
}

fn function_name(f: Function) -> String {
    f.to_possible_value().expect("no skipped variants").get_name().to_string()
}

/// The polynomial behind a function, with the threshold from which a
/// counting closed form is exact.
fn polynomial(inst: &Instance, f: Function, bound: usize) -> Result<Option<(Poly2, Option<u64>)>, CliError> {
    let total = || total_chromatic_poly_with_bound(&inst.graph, bound);
    Ok(match (f, &inst.closed) {
        (Function::Integral, Some(c)) => Some((c.integral.clone(), Some(c.integral_from))),
        (Function::Modular, Some(c)) => Some((c.modular.clone(), Some(c.modular_from))),
        (Function::Integral | Function::Modular | Function::Regions, _) => None,
        (Function::ZeroFree, Some(c)) => Some((c.zero_free.clone(), None)),
        (Function::ZeroFree, None) => Some((total()?.at_z(0), None)),
        (Function::Chromatic, _) => Some((total()?.at_z(1), None)),
        (Function::Total, _) => Some((total()?, None)),
    })
}

fn region_count(inst: &Instance, bound: usize) -> Result<BigInt, CliError> {
    let (zero_free, _) = polynomial(inst, Function::ZeroFree, bound)?.expect("zero-free is a polynomial");
    let value = zero_free.eval_i64(-1, 0);
    Ok(if inst.graph.n().is_multiple_of(2) { value } else { -value })
}

struct Sample {
    q: Option<u64>,
    z: Option<i64>,
    value: BigInt,
    /// Set when a closed form was used below the point where it is exact.
    exact_from: Option<u64>,
}

fn big(v: &BigInt) -> Json {
    Json::Number(Number::from_str(&v.to_string()).expect("integers are valid JSON numbers"))
}

fn poly_json(p: &Poly2) -> Json {
    Json::Array(p.terms().into_iter().map(|(dq, dz, c)| json!({"dq": dq, "dz": dz, "c": big(c)})).collect())
}

fn report_json(function: Function, inst: &Instance, results: &[Sample], poly: Option<&(Poly2, Option<u64>)>) -> Json {
    let results: Vec<Json> = results
        .iter()
        .map(|s| {
            let mut m = Map::new();
            m.insert("q".into(), json!(s.q));
            m.insert("z".into(), json!(s.z));
            m.insert("value".into(), big(&s.value));
            if let Some(from) = s.exact_from {
                m.insert("below_valid_range".into(), json!(true));
                m.insert("valid_from".into(), json!(from));
            }
            Json::Object(m)
        })
        .collect();
    let mut m = Map::new();
    m.insert("function".into(), json!(function_name(function)));
    m.insert("source".into(), json!(inst.source));
    m.insert("graph".into(), json!(GainGraphFile::from_graph(&inst.graph)));
    m.insert("results".into(), Json::Array(results));
    m.insert("polynomial".into(), poly.map_or(Json::Null, |(p, _)| poly_json(p)));
    if let Some((_, Some(from))) = poly {
        m.insert("valid_from".into(), json!(from));
    }
    Json::Object(m)
}

fn eval(args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let inst = resolve(&args.source)?;
    let f = args.function;
    if f == Function::Regions {
        if !args.q.is_empty() {
            return Err(CliError::Usage("regions takes no --q".into()));
        }
        let value = region_count(&inst, args.bound)?;
        if args.json {
            let sample = Sample { q: None, z: None, value, exact_from: None };
            writeln!(out, "{}", report_json(f, &inst, &[sample], None))?;
        } else {
            writeln!(out, "{}", value)?;
        }
        return Ok(());
    }
    if args.q.is_empty() {
        return Err(CliError::Usage("give at least one --q".into()));
    }
    let counting = matches!(f, Function::Integral | Function::Modular);
    if f == Function::Modular && args.q.contains(&0) {
        return Err(CliError::Usage("the modular count needs q >= 1".into()));
    }
    let poly = if counting && args.exact { None } else { polynomial(&inst, f, args.bound)? };
    let z = (f == Function::Total).then_some(args.z);
    let mut results = Vec::new();
    for &q in &args.q {
        let sample = match &poly {
            Some((p, from)) => {
                let value = p.eval(&BigInt::from(q), &BigInt::from(z.unwrap_or(0)));
                Sample { q: Some(q), z, value, exact_from: from.filter(|&t| q < t) }
            }
            None if f == Function::Integral => {
                Sample { q: Some(q), z, value: chi_integral(&inst.graph, q), exact_from: None }
            }
            None => Sample { q: Some(q), z, value: chi_modular(&inst.graph, q), exact_from: None },
        };
        results.push(sample);
    }
    if args.json {
        writeln!(out, "{}", report_json(f, &inst, &results, poly.as_ref()))?;
        return Ok(());
    }
    if let Some(z) = z {
        writeln!(out, "# z={}", z)?;
    }
    for s in &results {
        if let Some(from) = s.exact_from {
            writeln!(out, "# below valid range: closed form is exact for q >= {}", from)?;
        }
        writeln!(out, "{}\t{}", s.q.expect("sampled"), s.value)?;
    }
    Ok(())
}

fn poly(args: &PolyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let inst = resolve(&args.source)?;
    let f = args.function;
    let Some(found) = polynomial(&inst, f, args.bound)? else {
        let why = match f {
            Function::Regions => "regions is a number; use the regions command",
            _ => "this counting function has a polynomial form only for families",
        };
        return Err(CliError::Usage(why.into()));
    };
    if args.json {
        writeln!(out, "{}", report_json(f, &inst, &[], Some(&found)))?;
    } else {
        writeln!(out, "{}", found.0)?;
        if let Some(from) = found.1 {
            writeln!(out, "# exact for q >= {}", from)?;
        }
    }
    if let Some(text) = &args.compare {
        let expected = parse_poly(text)?;
        if expected != found.0 {
            return Err(CliError::CheckFailed(format!("polynomial differs from {}", expected)));
        }
    }
    Ok(())
}

fn regions(args: &RegionsArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let inst = resolve(&args.source)?;
    let value = region_count(&inst, args.bound)?;
    if args.json {
        let sample = Sample { q: None, z: None, value, exact_from: None };
        writeln!(out, "{}", report_json(Function::Regions, &inst, &[sample], None))?;
    } else {
        writeln!(out, "{}", value)?;
    }
    Ok(())
}

const SUITES: [Suite; 7] =
    [Suite::First, Suite::Second, Suite::Complete, Suite::Catalan, Suite::Linial, Suite::Total, Suite::Invariance];

const FAMILY_SELECTORS: [Selector; 3] = [Selector::Integral, Selector::Modular, Selector::ZeroFreePoly];

fn suite_name(s: Suite) -> String {
    s.to_possible_value().expect("no skipped variants").get_name().to_string()
}

fn evaluators(n: usize, selectors: &[Selector], bound: usize) -> Vec<Evaluator> {
    selectors.iter().map(|&s| Evaluator::for_order(s, n).with_edge_bound(bound)).collect()
}

fn poly_report(identity: &str, instance: String, lhs: Poly2, rhs: Poly2) -> CheckReport {
    CheckReport::compare(identity, instance, Value::Poly(lhs), Value::Poly(rhs))
}

fn run_suite(suite: Suite, corpus: &[IntegralGainGraph], args: &VerifyArgs) -> Result<Vec<CheckReport>, CliError> {
    let bound = args.bound;
    let orders = 1..=args.n;
    let mut reports = Vec::new();
    match suite {
        Suite::All => unreachable!("expanded by the caller"),
        Suite::First => {
            for g in corpus {
                let underlying = g.underlying();
                if underlying.edges().len() < 32 {
                    reports.extend(check_graph_expansions(&underlying));
                }
                for f in evaluators(g.n(), &Selector::ALL, bound) {
                    reports.extend(check_neutral_subset_expansion(g, &f)?);
                }
            }
        }
        Suite::Second => {
            for g in corpus {
                for f in evaluators(g.n(), &Selector::ALL, bound) {
                    reports.extend(check_stable_partition_expansion(g, &f)?);
                }
            }
        }
        Suite::Complete => {
            let families = orders.flat_map(|k| [hollow_catalan(k), linial(k)]);
            let graphs: Vec<IntegralGainGraph> =
                if args.graph.is_some() { corpus.to_vec() } else { corpus.iter().cloned().chain(families).collect() };
            for g in graphs.iter().filter(|g| g.neutral_edges().is_empty()) {
                for f in evaluators(g.n(), &Selector::ALL, bound) {
                    reports.extend(check_complete_expansions(g, &f)?);
                }
            }
        }
        Suite::Catalan => {
            for k in orders {
                for f in evaluators(k, &FAMILY_SELECTORS, bound) {
                    reports.extend(check_catalan_relations(k, &f)?);
                }
                let r = catalan_regions(k)?;
                let name = format!("n={}", k);
                let as_value = |v: BigInt| Value::Samples(vec![(k as u64, v)]);
                reports.push(CheckReport::compare(
                    "catalan-regions",
                    name,
                    as_value(r.direct),
                    as_value(r.by_recurrence),
                ));
            }
        }
        Suite::Linial => {
            for k in orders {
                for f in evaluators(k, &FAMILY_SELECTORS, bound) {
                    reports.extend(check_linial_expansion(k, &f)?);
                }
                let closed = FamilyKind::Linial.closed_forms(k)?.zero_free;
                reports.push(poly_report(
                    "linial-closed-form",
                    format!("n={}", k),
                    linial_athanasiadis(k)?,
                    closed.clone(),
                ));
                let direct = total_chromatic_poly_with_bound(&linial(k), bound)?.at_z(0);
                reports.push(poly_report("linial-zero-free", format!("n={}", k), direct, closed));
            }
        }
        Suite::Total => {
            for g in corpus {
                reports.extend(check_total_expansion(g, bound)?);
            }
            for kind in FamilyKind::ALL {
                for k in orders.clone() {
                    reports.extend(check_total_uniform(kind, k, bound)?);
                }
            }
        }
        Suite::Invariance => reports.extend(run_invariance_suite(corpus, args.seed)?),
    }
    Ok(reports)
}

fn check_json(suite: &str, r: &CheckReport) -> Json {
    json!({
        "suite": suite,
        "identity": r.identity,
        "instance": r.instance,
        "pass": r.pass,
        "lhs": r.lhs.to_string(),
        "rhs": r.rhs.to_string(),
        "witness": r.witness,
    })
}

fn verify(args: &VerifyArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let corpus = match &args.graph {
        Some(path) => vec![read_gain_graph(path)?],
        None => fixture_corpus(),
    };
    let suites: Vec<Suite> = if args.suite == Suite::All { SUITES.to_vec() } else { vec![args.suite] };
    let (mut checks, mut failed) = (0, 0);
    for suite in suites {
        let name = suite_name(suite);
        let reports = run_suite(suite, &corpus, args)?;
        let suite_failed = reports.iter().filter(|r| !r.pass).count();
        for r in &reports {
            if args.json {
                writeln!(out, "{}", check_json(&name, r))?;
            } else if args.verbose || !r.pass {
                let status = if r.pass { "PASS" } else { "FAIL" };
                let witness = r.witness.as_deref().map_or(String::new(), |w| format!("\tat {}", w));
                writeln!(out, "{}\t{}\t{}\t{}{}", status, name, r.identity, r.instance, witness)?;
            }
        }
        if !args.json {
            writeln!(out, "{}\t{} checks\t{} failed", name, reports.len(), suite_failed)?;
        }
        checks += reports.len();
        failed += suite_failed;
    }
    if failed > 0 {
        return Err(CliError::CheckFailed(format!("{} of {} checks failed", failed, checks)));
    }
    Ok(())
}

fn lds(cmd: &LdsCommand, out: &mut dyn Write) -> Result<(), CliError> {
    match cmd {
        LdsCommand::Realize { sequence, json } => {
            let d = parse_sequence(sequence)?;
            let p = realize_lds(&d)?;
            if *json {
                writeln!(out, "{}", json!({"sequence": d.0, "n": p.n(), "partition": format_partition(&p)}))?;
            } else {
                writeln!(out, "{}", format_partition(&p))?;
            }
        }
        LdsCommand::Check { sequence, n, json } => {
            let d = parse_sequence(sequence)?;
            let vertex_order = is_vertex_order_lds(&d, *n);
            let increasing = is_increasing_lds(&d, *n);
            if *json {
                writeln!(
                    out,
                    "{}",
                    json!({"sequence": d.0, "n": n, "vertex_order": vertex_order, "increasing": increasing})
                )?;
            } else {
                writeln!(out, "vertex-order\t{}", vertex_order)?;
                writeln!(out, "increasing\t{}", increasing)?;
            }
        }
    }
    Ok(())
}
