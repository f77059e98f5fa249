mod selftest;

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Args, Parser, Subcommand};
use serde_json::{json, Value};

use solvdeg::chardeg::dataset::raw_tables;
use solvdeg::chardeg::tables;
use solvdeg::coloring::{color_2group, color_preservers, d_values, solvable_coloring_with, DEFAULT_HALL_BUDGET};
use solvdeg::constructors::{parse_group_spec, ConstructError};
use solvdeg::ssearch::{s_max_with, Dedup, DEFAULT_SEARCH_BUDGET};
use solvdeg::verifier::{
    family_names, verify_all, verify_named, AggregateReport, Exponent, PrecisionConfig, Status, VerifyConfig,
};
use solvdeg::{GroupError, PermGroup};

#[derive(Parser)]
#[command(name = "solvdeg", version, about = "Colorings, solvable-subgroup search and certified bounds for finite simple groups")]
struct Cli {
    /// Worker threads (defaults to the available parallelism).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Color a solvable group so that |J_f|^2 <= |G|.
    Color(ColorArgs),
    /// The three colorings of a transitive 2-group.
    Color2(ColorArgs),
    /// Largest solvable subgroup order S(G).
    Ssearch(SearchArgs),
    /// Certified verification of the simple-group bounds.
    Verify(VerifyArgs),
    /// Print the embedded datasets.
    Tables {
        /// Print the raw JSON dataset.
        #[arg(long)]
        json: bool,
    },
    /// Run the oracle suites.
    Selftest,
}

#[derive(Args)]
struct ColorArgs {
    /// Group spec, e.g. `sym:4`, `prod(cyclic:2,dihedral:4)`, `file:gens.txt`.
    #[arg(long)]
    group: String,
    #[arg(long, default_value_t = DEFAULT_HALL_BUDGET)]
    hall_budget: usize,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    group: String,
    /// Cap on the number of stored subgroups.
    #[arg(long, default_value_t = DEFAULT_SEARCH_BUDGET)]
    budget: usize,
    /// Keep every subgroup instead of one per conjugacy class.
    #[arg(long)]
    exact: bool,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
#[command(group(ArgGroup::new("scope").required(true).args(["all", "family"])))]
struct VerifyArgs {
    /// Every family.
    #[arg(long)]
    all: bool,
    /// One family by name (see `tables`).
    #[arg(long)]
    family: Option<String>,
    /// Sweep bound for q (families are clipped at 4096).
    #[arg(long)]
    qmax: Option<u64>,
    /// Rank bound for the classical families (PSL_n is clipped at 10).
    #[arg(long)]
    nmax: Option<u64>,
    /// Largest working precision in bits.
    #[arg(long)]
    precision_cap: Option<u32>,
    /// Replace the exponent by a rational `p/q`.
    #[arg(long, value_parser = parse_ratio)]
    exponent: Option<(i64, i64)>,
    /// Write the JSON report here.
    #[arg(long)]
    json: Option<PathBuf>,
    /// Write a Markdown summary here.
    #[arg(long)]
    markdown: Option<PathBuf>,
}

fn parse_ratio(s: &str) -> Result<(i64, i64), String> {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    let n: i64 = n.trim().parse().map_err(|_| format!("bad numerator in {s:?}"))?;
    let d: i64 = d.trim().parse().map_err(|_| format!("bad denominator in {s:?}"))?;
    if n <= 0 || d <= 0 {
        return Err("exponent must be positive".into());
    }
    Ok((n, d))
}

/// Error with its exit code.
struct Failure {
    code: u8,
    message: String,
}

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_UNDECIDABLE: u8 = 3;

fn fail(code: u8, message: impl Into<String>) -> Failure {
    Failure {
        code,
        message: message.into(),
    }
}

fn runtime(e: impl std::fmt::Display) -> Failure {
    fail(EXIT_FAIL, e.to_string())
}

fn load_group(spec: &str) -> Result<PermGroup, Failure> {
    parse_group_spec(spec).map_err(|e| match e {
        ConstructError::Group(GroupError::BudgetExceeded { .. }) => runtime(e),
        other => fail(EXIT_USAGE, other.to_string()),
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(jobs).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_USAGE);
        }
    }
    let result = match cli.command {
        Command::Color(a) => color(&a),
        Command::Color2(a) => color2(&a),
        Command::Ssearch(a) => ssearch(&a),
        Command::Verify(a) => verify(&a),
        Command::Tables { json } => show_tables(json),
        Command::Selftest => selftest::run(),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if !f.message.is_empty() {
                eprintln!("error: {}", f.message);
            }
            ExitCode::from(f.code)
        }
    }
}

fn print_json(v: &Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value serializes"));
}

fn color(a: &ColorArgs) -> Result<(), Failure> {
    let g = load_group(&a.group)?;
    let order = g.order().map_err(runtime)?;
    let c = solvable_coloring_with(&g, a.hall_budget).map_err(runtime)?;
    let j = c.preservers.order().map_err(runtime)?;
    let holds = j * j <= order;
    if a.json {
        print_json(&json!({
            "colors": [c.coloring],
            "preserver_order": j,
            "exponent_pairs": [c.coloring.exponent_pair()],
            "group_order": order,
            "branch": c.branch,
            "bound_holds": holds,
        }));
    } else {
        println!("group: {} (degree {}, order {order})", a.group, g.degree());
        println!("coloring: {}", c.coloring);
        let [s1, s2, s3] = c.coloring.class_sizes();
        println!("class sizes: {s1} {s2} {s3}");
        println!("branch: {:?}{}", c.branch, if c.hall_complete { "" } else { " (partial Hall subgroup)" });
        println!("preserver order: {j}");
        println!("|J|^2 <= |G|: {} <= {order}: {}", j * j, if holds { "yes" } else { "no" });
    }
    if holds {
        Ok(())
    } else {
        Err(fail(EXIT_FAIL, ""))
    }
}

fn color2(a: &ColorArgs) -> Result<(), Failure> {
    let g = load_group(&a.group)?;
    let colorings = color_2group(&g).map_err(runtime)?;
    let depth = g.degree().trailing_zeros();
    let targets = d_values(depth);
    let mut orders = Vec::new();
    for f in &colorings {
        orders.push(color_preservers(&g, f).map_err(runtime)?.order().map_err(runtime)?);
    }
    let pairs: Vec<_> = colorings.iter().map(|f| f.exponent_pair()).collect();
    let ok = orders.iter().all(|&o| o == 1) && pairs.iter().zip(&targets).all(|(p, d)| p == d);
    if a.json {
        print_json(&json!({
            "colors": colorings,
            "preserver_order": orders,
            "exponent_pairs": pairs,
            "targets": targets,
            "matches_targets": ok,
        }));
    } else {
        println!("group: {} (degree {}, order {})", a.group, g.degree(), g.order().map_err(runtime)?);
        for (i, f) in colorings.iter().enumerate() {
            println!(
                "f{}: {}  product {} (target {})  preserver order {}",
                i + 1,
                f,
                pairs[i],
                targets[i],
                orders[i]
            );
        }
        println!("matches targets: {}", if ok { "yes" } else { "no" });
    }
    if ok {
        Ok(())
    } else {
        Err(fail(EXIT_FAIL, ""))
    }
}

fn ssearch(a: &SearchArgs) -> Result<(), Failure> {
    let g = load_group(&a.group)?;
    let dedup = if a.exact { Dedup::Exact } else { Dedup::Conjugacy };
    let r = s_max_with(&g, dedup, a.budget).map_err(runtime)?;
    let witness: Vec<&[u32]> = r.witness.iter().map(|p| p.images()).collect();
    if a.json {
        print_json(&json!({
            "group": a.group,
            "group_order": g.order().map_err(runtime)?,
            "s_value": r.s_value,
            "witness": witness,
            "subgroups_visited": r.subgroups_visited,
            "budget_hit": r.budget_hit,
        }));
    } else {
        let bound = if r.budget_hit { " (lower bound: budget exhausted)" } else { "" };
        println!("S(G) = {}{bound}", r.s_value);
        println!("subgroups visited: {}", r.subgroups_visited);
        println!("witness generators:");
        println!("{}", g.degree());
        for images in &witness {
            let line: Vec<String> = images.iter().map(u32::to_string).collect();
            println!("{}", line.join(" "));
        }
    }
    if r.budget_hit {
        Err(fail(EXIT_UNDECIDABLE, "search budget exhausted"))
    } else {
        Ok(())
    }
}

fn verify(a: &VerifyArgs) -> Result<(), Failure> {
    let mut cfg = VerifyConfig::default();
    if let Some(q) = a.qmax {
        cfg = cfg.with_q_max(q);
    }
    if let Some(n) = a.nmax {
        cfg = cfg.with_n_max(n);
    }
    if let Some(cap) = a.precision_cap {
        cfg.precision = PrecisionConfig::with_cap(cap);
    }
    if let Some((n, d)) = a.exponent {
        cfg.exponent = Exponent::rational(n, d);
    }
    cfg.validate().map_err(|e| fail(EXIT_USAGE, e.to_string()))?;
    let report = match &a.family {
        None => verify_all(&cfg).map_err(runtime)?,
        Some(name) => {
            let known = family_names().map_err(runtime)?;
            if !known.iter().any(|k| k.eq_ignore_ascii_case(name)) {
                return Err(fail(EXIT_USAGE, format!("unknown family {name:?}; known: {}", known.join(", "))));
            }
            let r = verify_named(name, &cfg).map_err(runtime)?;
            AggregateReport::new(cfg.summary(), vec![r])
        }
    };
    if let Some(path) = &a.json {
        std::fs::write(path, report.to_json() + "\n").map_err(|e| runtime(format!("{}: {e}", path.display())))?;
    }
    if let Some(path) = &a.markdown {
        std::fs::write(path, report.to_markdown()).map_err(|e| runtime(format!("{}: {e}", path.display())))?;
    }
    print!("{}", summary_text(&report));
    match report.status {
        Status::Pass => Ok(()),
        Status::Fail => Err(fail(EXIT_FAIL, "")),
        Status::Undecidable => Err(fail(EXIT_UNDECIDABLE, "")),
    }
}

fn summary_text(report: &AggregateReport) -> String {
    let mut out = String::new();
    for r in &report.reports {
        let _ = writeln!(
            out,
            "{:<20} {:>6} cases  {:<4}  tail {}",
            r.family,
            r.verdicts.len(),
            if r.passed() { "ok" } else { "FAIL" },
            if r.tail.certified { "certified" } else { "not certified" }
        );
        const SHOWN: usize = 5;
        for f in r.failures.iter().take(SHOWN) {
            let _ = writeln!(out, "    {} ({:?}): {}", f.case, f.kind, f.detail);
        }
        if r.failures.len() > SHOWN {
            let _ = writeln!(out, "    ... and {} more", r.failures.len() - SHOWN);
        }
    }
    let c = &report.counts;
    let _ = writeln!(
        out,
        "status: {:?} ({} less, {} equal, {} greater, {} undecidable)",
        report.status, c.less, c.equal, c.greater, c.undecidable
    );
    out
}

fn show_tables(as_json: bool) -> Result<(), Failure> {
    if as_json {
        print!("{}", raw_tables());
        return Ok(());
    }
    let t = tables().map_err(runtime)?;
    println!("constants");
    println!("  mu = {}*log_{}({}) ~ {}  [{}]", t.constants.mu.coef, t.constants.mu.base, t.constants.mu.num, t.constants.mu.approx, t.constants.mu.paper_location);
    println!("  lambda = {}^(1/{}) ~ {}  [{}]", t.constants.lambda.base, t.constants.lambda.root, t.constants.lambda.approx, t.constants.lambda.paper_location);
    println!("sporadic groups (S(Aut), b)");
    for r in &t.sporadic {
        println!("  {:<6} {:>24} {:>14}  [{}]", r.name, r.s_aut, r.b, r.paper_location);
    }
    println!("Lie-type families (proper subgroup exponent, |Out| coefficient, Steinberg exponent)");
    for r in t.exceptional.iter().chain(&t.classical) {
        println!(
            "  {:<8} {:<12} m {:?}/{}  out {}f  st {:?}/{}  [{}]",
            r.name, r.label, r.m_exp.coeffs, r.m_exp.den, r.out_coef, r.st_exp.coeffs, r.st_exp.den, r.paper_location
        );
    }
    println!("exceptional point rows (M, |Out|, St(1))");
    for r in &t.exceptional_points {
        println!("  {:<8} {} {} {}  [{}]", r.name, r.m, r.out, r.st, r.paper_location);
    }
    println!("small PSL2 cases (q, S(Aut), degrees)");
    for r in &t.psl2_exceptional {
        println!("  q={:<3} {:>4} {:?}  [{}]", r.q, r.s_aut, r.degrees, r.paper_location);
    }
    let tight = &t.psl2_tight;
    println!("tight case: q={} lhs {} product {} S(Aut) {}  [{}]", tight.q, tight.lhs, tight.product, tight.s_aut, tight.paper_location);
    println!("PSL3(4): S(Aut) {} b {}  [{}]", t.psl3_4.s_aut, t.psl3_4.b, t.psl3_4.paper_location);
    println!("alternating groups (n, b)");
    for r in &t.alternating {
        println!("  n={:<3} {}  [{}]", r.n, r.b, r.paper_location);
    }
    println!("families accepted by `verify --family`: {}", family_names().map_err(runtime)?.join(", "));
    Ok(())
}
