//! Command-line front end: every check and search as a subcommand that
//! prints one JSON report on stdout.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use tverberg::chessboard::{
    build_chessboard, check_pseudomanifold, facet_sign, fixed_subcomplex, orient, ChessboardSpec, RowPermutation,
    Subgroup,
};
use tverberg::constraints::{
    check_face_avoidance_unavoidable, constrain_complex, is_unavoidable_guarded, Multiset, UNAVOIDABLE_NODE_GUARD,
};
use tverberg::geometry::{
    build_example_a_guarded, check_solution, lift_to_vertex_disjoint, search_balanced, search_tverberg, DimCaps,
    DimPolicy, Rational, Scatter, SearchOptions, SearchReport, TverbergInstance, EXAMPLE_A_ORDER_GUARD,
};
use tverberg::homology::{betti_and_torsion, homological_connectivity};
use tverberg::maps::{
    collapse_spec, degree_by_counting, degree_formula, legendre_valuation, obstruction_report_guarded,
    CollapseTheta, OBSTRUCTION_ORDER_GUARD,
};
use tverberg::simplicial::{Complex, Simplex};
use tverberg::Error;

const DEFAULT_SEED: u64 = 20_240_611;
const GUARD_ENV: &str = "TVERBERG_GUARDS";

#[derive(Parser, Debug)]
#[command(name = "tverberg", version, about = "Chessboard complexes, collapse degrees and rainbow Tverberg search")]
struct Cli {
    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// Upper bound on search threads; results do not depend on it.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,
    /// Also write the certificate to this file.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Add wall-clock time to the report.
    #[arg(long, global = true)]
    timing: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Build or audit a multiple chessboard complex.
    #[command(subcommand)]
    Chessboard(ChessboardCmd),
    /// Orientation signs of every facet.
    Orient(BoardArgs),
    /// Degree of a collapse map.
    #[command(subcommand)]
    Collapse(CollapseCmd),
    /// ord_p(m!).
    Valuation {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        m: u64,
    },
    /// Degree residue and fixed-point inequalities for (Z_p)^k.
    Obstruction {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: u32,
    },
    /// Reduced integral homology.
    Homology(ComplexArgs),
    /// Homological c-connectivity.
    Connectivity {
        #[command(flatten)]
        complex: ComplexArgs,
        #[arg(long, allow_negative_numbers = true)]
        level: isize,
    },
    /// Fixed subcomplex of a row-permutation group.
    FixedPoints {
        #[command(flatten)]
        board: BoardArgs,
        /// Generator in cycle notation, e.g. "(1 2)(3 4)"; repeatable.
        #[arg(long = "gen")]
        gens: Vec<String>,
    },
    /// Rainbow Tverberg search.
    #[command(subcommand)]
    Tverberg(SearchCmd),
    /// Search under the dimension caps of the balanced theorem.
    #[command(subcommand)]
    Balanced(BalancedCmd),
    /// Search, then lift the solution to pairwise disjoint faces.
    Lift {
        #[command(flatten)]
        input: InputArgs,
        /// Collapse [r-1] -> [k(p-1)], 1-based, e.g. 1,2,2.
        #[arg(long, value_delimiter = ',')]
        theta: Vec<usize>,
    },
    /// Build the simplex-plus-barycenter example and search it.
    ExampleA {
        #[arg(long)]
        p: u64,
        #[arg(long)]
        k: u32,
        #[arg(long)]
        d: usize,
        /// Scatter radius, e.g. 1/100; clusters coincide when absent.
        #[arg(long)]
        eps: Option<String>,
    },
    /// Unavoidability of a complex for a multiset.
    #[command(subcommand)]
    Unavoidable(UnavoidableCmd),
    /// Restrict a complex to the vertices outside disjoint avoid sets.
    Constrain(InputArgs),
}

#[derive(Subcommand, Debug)]
enum ChessboardCmd {
    Build(BoardArgs),
    Check(BoardArgs),
}

#[derive(Subcommand, Debug)]
enum CollapseCmd {
    Degree {
        #[command(flatten)]
        board: BoardArgs,
        /// Collapse of columns, 1-based, e.g. 1,1,2.
        #[arg(long, value_delimiter = ',')]
        theta: Vec<usize>,
    },
}

#[derive(Subcommand, Debug)]
enum SearchCmd {
    Search(InputArgs),
}

#[derive(Subcommand, Debug)]
enum BalancedCmd {
    Search {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        policy: Option<String>,
    },
}

#[derive(Subcommand, Debug)]
enum UnavoidableCmd {
    Check(InputArgs),
}

#[derive(Args, Debug, Clone)]
struct BoardArgs {
    /// Column caps, e.g. 1,2.
    #[arg(long, value_delimiter = ',', required = true)]
    cols: Vec<usize>,
    /// Number of rows; defaults to the sum of column caps plus one.
    #[arg(long)]
    rows: Option<usize>,
    /// Row caps; all ones when absent.
    #[arg(long, value_delimiter = ',')]
    row_caps: Option<Vec<usize>>,
}

#[derive(Args, Debug, Clone)]
struct InputArgs {
    /// JSON input file.
    #[arg(long = "json", value_name = "PATH")]
    json: Option<PathBuf>,
    #[arg(value_name = "FILE", conflicts_with = "json")]
    file: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
struct ComplexArgs {
    /// Complex as {"universe": [...], "facets": [[...]]}.
    #[arg(long = "json", value_name = "PATH", conflicts_with = "cols")]
    json: Option<PathBuf>,
    #[arg(long, value_delimiter = ',')]
    cols: Option<Vec<usize>>,
    #[arg(long)]
    rows: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum Verdict {
    Verified,
    Refuted,
    Found,
    Exhausted,
    Error,
}

#[derive(Debug, Serialize)]
struct RunReport {
    subcommand: String,
    input_digest: String,
    verdict: Verdict,
    seed: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    certificate_path: Option<String>,
    details: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u128>,
}

/// What a subcommand produced before packaging.
struct Outcome {
    verdict: Verdict,
    /// Exit code override for `Exhausted` (1 for theorem-backed modes, 2 otherwise).
    code: u8,
    payload: Value,
    details: Value,
}

impl Outcome {
    fn verdict(ok: bool, payload: Value) -> Self {
        if ok {
            Outcome { verdict: Verdict::Verified, code: 0, payload, details: Value::Null }
        } else {
            Outcome { verdict: Verdict::Refuted, code: 1, payload: Value::Null, details: payload }
        }
    }
}

struct Guards {
    order: u64,
    example_order: u64,
    nodes: u64,
}

impl Guards {
    fn from_env() -> Result<Self, Error> {
        let mut g = Guards { order: OBSTRUCTION_ORDER_GUARD, example_order: EXAMPLE_A_ORDER_GUARD, nodes: UNAVOIDABLE_NODE_GUARD };
        let Ok(spec) = std::env::var(GUARD_ENV) else { return Ok(g) };
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (key, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Input(format!("{GUARD_ENV}: expected key=value, got {item:?}")))?;
            let value: u64 = value
                .trim()
                .parse()
                .map_err(|_| Error::Input(format!("{GUARD_ENV}: {key} needs an integer")))?;
            match key.trim() {
                "order" => g.order = value,
                "example-order" => g.example_order = value,
                "nodes" => g.nodes = value,
                other => return Err(Error::Input(format!("{GUARD_ENV}: unknown guard {other:?}"))),
            }
        }
        Ok(g)
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let (code, stdout) = run(&argv);
    let mut out = std::io::stdout().lock();
    let _ = out.write_all(stdout.as_bytes());
    let _ = out.flush();
    ExitCode::from(code)
}

fn run(argv: &[String]) -> (u8, String) {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return (0, e.to_string());
            }
            eprint!("{e}");
            let report = error_report(String::new(), String::new(), DEFAULT_SEED, e.to_string());
            return (3, to_line(&report));
        }
    };
    let name = subcommand_name(&cli.command);
    eprintln!("seed = {}", cli.seed);
    let started = Instant::now();
    let result = Guards::from_env().and_then(|g| {
        let (input, digest) = gather_input(&cli.command)?;
        dispatch(&cli, &g, &input).map(|o| (o, digest))
    });
    let (code, mut report) = match result {
        Ok((o, digest)) => {
            let code = match o.verdict {
                Verdict::Verified | Verdict::Found => 0,
                Verdict::Refuted => 1,
                Verdict::Exhausted => o.code,
                Verdict::Error => 1,
            };
            let certified = matches!(o.verdict, Verdict::Verified | Verdict::Found);
            let report = RunReport {
                subcommand: name,
                input_digest: digest,
                verdict: o.verdict,
                seed: cli.seed,
                certificate: certified.then_some(o.payload),
                certificate_path: None,
                details: o.details,
                error: None,
                timing_ms: None,
            };
            (code, report)
        }
        Err(e) => {
            eprintln!("error: {e}");
            let code = match &e {
                Error::Input(_) => 3,
                Error::Resource(_) => 4,
                Error::Internal(_) => 1,
            };
            let message = match e {
                Error::Input(m) => m,
                other => other.to_string(),
            };
            (code, error_report(name, String::new(), cli.seed, message))
        }
    };
    if let (Some(path), Some(cert)) = (&cli.out, &report.certificate) {
        let text = serde_json::to_string_pretty(cert).expect("certificate serialises");
        if let Err(e) = std::fs::write(path, text + "\n") {
            eprintln!("error: cannot write {}: {e}", path.display());
            return (3, to_line(&error_report(report.subcommand, report.input_digest, cli.seed, e.to_string())));
        }
        report.certificate_path = Some(path.display().to_string());
    }
    if cli.timing {
        report.timing_ms = Some(started.elapsed().as_millis());
    }
    eprintln!("{}: {:?}", report.subcommand, report.verdict);
    (code, to_line(&report))
}

fn error_report(subcommand: String, digest: String, seed: u64, message: String) -> RunReport {
    RunReport {
        subcommand,
        input_digest: digest,
        verdict: Verdict::Error,
        seed,
        certificate: None,
        certificate_path: None,
        details: Value::Null,
        error: Some(message),
        timing_ms: None,
    }
}

fn to_line(report: &RunReport) -> String {
    serde_json::to_string(report).expect("report serialises") + "\n"
}

fn subcommand_name(c: &Command) -> String {
    match c {
        Command::Chessboard(ChessboardCmd::Build(_)) => "chessboard build",
        Command::Chessboard(ChessboardCmd::Check(_)) => "chessboard check",
        Command::Orient(_) => "orient",
        Command::Collapse(_) => "collapse degree",
        Command::Valuation { .. } => "valuation",
        Command::Obstruction { .. } => "obstruction",
        Command::Homology(_) => "homology",
        Command::Connectivity { .. } => "connectivity",
        Command::FixedPoints { .. } => "fixed-points",
        Command::Tverberg(_) => "tverberg search",
        Command::Balanced(_) => "balanced search",
        Command::Lift { .. } => "lift",
        Command::ExampleA { .. } => "example-a",
        Command::Unavoidable(_) => "unavoidable check",
        Command::Constrain(_) => "constrain",
    }
    .to_string()
}

fn read_json(args: &InputArgs) -> Result<Value, Error> {
    let path = args
        .json
        .as_ref()
        .or(args.file.as_ref())
        .ok_or_else(|| Error::Input("an input file is required".into()))?;
    let text = std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Error::Input(format!("malformed JSON in {}: {e}", path.display())))
}

/// The canonical input of a run: flags and file contents, excluding options
/// that cannot change the result.
fn gather_input(c: &Command) -> Result<(Value, String), Error> {
    let board = |b: &BoardArgs| json!({"cols": b.cols, "rows": b.rows, "row_caps": b.row_caps});
    let complex = |c: &ComplexArgs| -> Result<Value, Error> {
        Ok(match &c.json {
            Some(p) => read_json(&InputArgs { json: Some(p.clone()), file: None })?,
            None => json!({"cols": c.cols, "rows": c.rows}),
        })
    };
    let input = match c {
        Command::Chessboard(ChessboardCmd::Build(b) | ChessboardCmd::Check(b)) | Command::Orient(b) => board(b),
        Command::Collapse(CollapseCmd::Degree { board: b, theta }) => json!({"board": board(b), "theta": theta}),
        Command::Valuation { p, m } => json!({"p": p, "m": m}),
        Command::Obstruction { p, k, d } => json!({"p": p, "k": k, "d": d}),
        Command::Homology(c) => complex(c)?,
        Command::Connectivity { complex: c, level } => json!({"complex": complex(c)?, "level": level}),
        Command::FixedPoints { board: b, gens } => json!({"board": board(b), "gens": gens}),
        Command::Tverberg(SearchCmd::Search(i)) | Command::Constrain(i) | Command::Unavoidable(UnavoidableCmd::Check(i)) => {
            read_json(i)?
        }
        Command::Balanced(BalancedCmd::Search { input, policy }) => json!({"instance": read_json(input)?, "policy": policy}),
        Command::Lift { input, theta } => json!({"instance": read_json(input)?, "theta": theta}),
        Command::ExampleA { p, k, d, eps } => json!({"p": p, "k": k, "d": d, "eps": eps}),
    };
    let mut h = Sha256::new();
    h.update(serde_json::to_string(&input).expect("input serialises").as_bytes());
    Ok((input, hex::encode(h.finalize())))
}

fn parse<T: for<'de> Deserialize<'de>>(v: Value) -> Result<T, Error> {
    serde_json::from_value(v).map_err(|e| Error::Input(e.to_string()))
}

fn to_value<T: Serialize>(t: &T) -> Value {
    serde_json::to_value(t).expect("result serialises")
}

fn board_spec(b: &BoardArgs) -> Result<ChessboardSpec, Error> {
    let n = b.rows.unwrap_or(b.cols.iter().sum::<usize>() + 1);
    match &b.row_caps {
        Some(rc) => ChessboardSpec::new(b.cols.len(), n, rc.clone(), b.cols.clone()),
        None => ChessboardSpec::with_unit_rows(b.cols.clone(), n),
    }
}

fn complex_input(c: &ComplexArgs, input: &Value) -> Result<Complex, Error> {
    match (&c.json, &c.cols) {
        (Some(_), _) => parse(input.clone()),
        (None, Some(cols)) => {
            let b = BoardArgs { cols: cols.clone(), rows: c.rows, row_caps: None };
            Ok(build_chessboard(&board_spec(&b)?))
        }
        (None, None) => Err(Error::Input("give --json or --cols".into())),
    }
}

fn search_outcome(inst: &TverbergInstance, report: SearchReport) -> Result<Outcome, Error> {
    match report.solution() {
        Some(sol) => {
            check_solution(inst, sol).map_err(|e| Error::Internal(format!("search returned an invalid solution: {e}")))?;
            eprintln!("found after {} intersection tests", report.candidates);
            Ok(Outcome {
                verdict: Verdict::Found,
                code: 0,
                payload: to_value(sol),
                details: json!({"candidates": report.candidates, "mode": inst.mode}),
            })
        }
        None => {
            let backed = inst.mode.is_theorem_backed();
            if backed {
                eprintln!("EXHAUSTED on an instance satisfying {:?}: potential counterexample", inst.mode);
            }
            Ok(Outcome {
                verdict: Verdict::Exhausted,
                code: if backed { 1 } else { 2 },
                payload: Value::Null,
                details: json!({"candidates": report.candidates, "mode": inst.mode, "theorem_backed": backed}),
            })
        }
    }
}

fn dispatch(cli: &Cli, g: &Guards, input: &Value) -> Result<Outcome, Error> {
    let opts = SearchOptions { workers: cli.workers.max(1) };
    match &cli.command {
        Command::Chessboard(ChessboardCmd::Build(b)) => {
            let spec = board_spec(b)?;
            let k = build_chessboard(&spec);
            Ok(Outcome::verdict(
                true,
                json!({"spec": spec, "dim": k.dim(), "f_vector": k.f_vector(), "facets": k.facets()}),
            ))
        }
        Command::Chessboard(ChessboardCmd::Check(b)) => {
            let spec = board_spec(b)?;
            let rep = check_pseudomanifold(&build_chessboard(&spec));
            eprintln!(
                "pure {} / ridge degrees {} / strongly connected {}",
                rep.pure, rep.ridge_degrees_ok, rep.strongly_connected
            );
            Ok(Outcome::verdict(rep.is_pseudomanifold(), json!({"spec": spec, "report": rep})))
        }
        Command::Orient(b) => {
            let spec = board_spec(b)?;
            let chain = orient(&spec)?;
            let facets: Vec<Value> = chain
                .iter()
                .map(|(f, s)| json!({"facet": f, "cells": spec.cells(f), "sign": s}))
                .collect();
            let is_cycle = chain.boundary().is_empty();
            for (f, _) in chain.iter() {
                facet_sign(&spec, f)?;
            }
            Ok(Outcome::verdict(is_cycle, json!({"spec": spec, "cycle": is_cycle, "facets": facets})))
        }
        Command::Collapse(CollapseCmd::Degree { board: b, theta }) => {
            let spec = board_spec(b)?;
            let theta = CollapseTheta::from_one_based(theta)?;
            let target = collapse_spec(&theta, &spec)?;
            let formula = degree_formula(spec.col_caps(), &theta)?;
            let counted = degree_by_counting(&theta, &spec)?;
            let agree = counted.to_string() == formula.to_string();
            eprintln!("degree: formula {formula}, counted {counted}");
            Ok(Outcome::verdict(
                agree,
                json!({"source": spec, "target": target, "theta": theta, "formula": formula.to_string(), "counted": counted.to_string()}),
            ))
        }
        Command::Valuation { p, m } => {
            let v = legendre_valuation(*p, *m)?;
            eprintln!("ord_{p}({m}!) = {v}");
            Ok(Outcome::verdict(true, json!({"p": p, "m": m, "valuation": v})))
        }
        Command::Obstruction { p, k, d } => {
            let rep = obstruction_report_guarded(*p, *k, *d, g.order)?;
            eprintln!("degree {} ≡ {} mod {p}; {} subgroups", rep.degree, rep.degree_mod_p, rep.subgroup_count);
            for s in &rep.subgroup_results {
                eprintln!(
                    "  |H| = {:>3}  dim fixed source {:>3}  dim fixed sphere {:>3}  {}",
                    s.order,
                    s.dim_fixed_source,
                    s.dim_fixed_target,
                    if s.inequality_holds { "ok" } else { "FAILS" }
                );
            }
            Ok(Outcome::verdict(rep.verdict, to_value(&rep)))
        }
        Command::Homology(c) => {
            let k = complex_input(c, input)?;
            let h = betti_and_torsion(&k);
            Ok(Outcome::verdict(true, to_value(&h)))
        }
        Command::Connectivity { complex: c, level } => {
            let src = match &c.json {
                Some(_) => input["complex"].clone(),
                None => Value::Null,
            };
            let k = complex_input(c, &src)?;
            let ok = homological_connectivity(&k, *level);
            Ok(Outcome::verdict(ok, json!({"level": level, "connected": ok, "homology": betti_and_torsion(&k)})))
        }
        Command::FixedPoints { board: b, gens } => {
            let spec = board_spec(b)?;
            let gens = gens
                .iter()
                .map(|s| RowPermutation::parse_cycles(spec.n(), s))
                .collect::<Result<Vec<_>, _>>()?;
            let h = Subgroup::from_generators(spec.n(), gens)?;
            let fixed = fixed_subcomplex(&spec, &h)?;
            Ok(Outcome::verdict(
                true,
                json!({"order": h.order(), "orbits": h.orbits(), "dim": fixed.dim(), "facets": fixed.facets()}),
            ))
        }
        Command::Tverberg(SearchCmd::Search(_)) => {
            let inst: TverbergInstance = parse(input.clone())?;
            let rep = search_tverberg(&inst, &opts)?;
            search_outcome(&inst, rep)
        }
        Command::Balanced(BalancedCmd::Search { policy, .. }) => {
            let mut inst: TverbergInstance = parse(input["instance"].clone())?;
            if let Some(name) = policy {
                let policy: DimPolicy = parse(Value::String(name.clone()))?;
                let (k, s) = tverberg::geometry::balanced_parameters(inst.r, inst.config.d())?;
                let caps = inst.dim_caps.unwrap_or(DimCaps { k, s, policy });
                inst.dim_caps = Some(DimCaps { policy, ..caps });
            }
            let rep = search_balanced(&inst, &opts)?;
            if let Some(caps) = inst.dim_caps {
                eprintln!("policy {:?}", caps.policy);
            }
            let mut out = search_outcome(&inst, rep)?;
            let policy = inst.dim_caps.map_or(DimPolicy::ShiftedKPlus1, |c| c.policy);
            out.details["policy"] = to_value(&policy);
            Ok(out)
        }
        Command::Lift { theta, .. } => {
            let inst: TverbergInstance = parse(input["instance"].clone())?;
            let theta = CollapseTheta::from_one_based(theta)?;
            let rep = search_tverberg(&inst, &opts)?;
            let Some(sol) = rep.solution() else {
                return search_outcome(&inst, rep);
            };
            let lift = lift_to_vertex_disjoint(&inst.config, sol, &theta)?;
            let faces = &lift.solution.faces;
            let disjoint = faces.iter().enumerate().all(|(i, a)| faces[i + 1..].iter().all(|b| a.is_disjoint(b)));
            let projects = faces
                .iter()
                .zip(&sol.faces)
                .all(|(f, orig)| Simplex::new(f.vertices().iter().map(|&v| lift.alpha[v]).collect()) == *orig);
            let certified = tverberg::geometry::verify_certificate(
                &lift.config,
                faces,
                &lift.solution.witness,
                &lift.solution.certificates,
            );
            Ok(Outcome::verdict(
                disjoint && projects && certified,
                json!({"abridged": sol, "lift": lift, "disjoint": disjoint, "projects": projects}),
            ))
        }
        Command::ExampleA { p, k, d, eps } => {
            let scatter = eps
                .as_ref()
                .map(|e| e.parse::<Rational>().map(|eps| Scatter { eps, seed: cli.seed }))
                .transpose()?;
            let inst = build_example_a_guarded(*p, *k, *d, scatter.as_ref(), g.example_order)?;
            let rep = search_tverberg(&inst, &opts)?;
            let mut out = search_outcome(&inst, rep)?;
            out.details["instance"] = to_value(&inst);
            Ok(out)
        }
        Command::Unavoidable(UnavoidableCmd::Check(_)) => {
            #[derive(Deserialize)]
            struct Req {
                multiset: Multiset,
                r: usize,
                complex: Option<Complex>,
                avoid: Option<Simplex>,
            }
            let req: Req = parse(input.clone())?;
            match (req.complex, req.avoid) {
                (Some(k), None) => {
                    let v = is_unavoidable_guarded(&k, req.r, &req.multiset, g.nodes)?;
                    Ok(Outcome::verdict(v.unavoidable, to_value(&v)))
                }
                (None, Some(s)) => {
                    let rep = check_face_avoidance_unavoidable(&req.multiset, &s, req.r)?;
                    let ok = rep.verdict.as_ref().is_some_and(|v| v.unavoidable);
                    if !rep.hypothesis_holds {
                        eprintln!("m(S) = {} > r − 1: the weight hypothesis fails, no claim is made", rep.weight);
                    }
                    Ok(Outcome::verdict(ok, to_value(&rep)))
                }
                _ => Err(Error::Input("give exactly one of \"complex\" and \"avoid\"".into())),
            }
        }
        Command::Constrain(_) => {
            #[derive(Deserialize)]
            struct Req {
                complex: Complex,
                avoid_sets: Vec<Simplex>,
            }
            let req: Req = parse(input.clone())?;
            let k = constrain_complex(&req.complex, &req.avoid_sets)?;
            Ok(Outcome::verdict(true, to_value(&k)))
        }
    }
}
