//! Acceptance criteria 1 to 10. Prints one PASS/FAIL line per criterion and
//! fails if any criterion fails.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigUint;
use rayon::prelude::*;

use solvdeg::chardeg::{b_alt, psl2_class_count, psl2_degrees, psl2_order};
use solvdeg::coloring::{color_2group, color_preservers, d_values, solvable_coloring};
use solvdeg::constructors::{alt, cyclic, dihedral, psl2, sym};
use solvdeg::corpus::{random_transitive_two_subgroups, solvable_corpus, transitive_two_subgroups};
use solvdeg::oracle::{brute_class_count, brute_preserver_order, brute_s_max};
use solvdeg::ssearch::{s_aut_psl2, s_max, s_product_check};
use solvdeg::verifier::compare::int;
use solvdeg::verifier::{
    cmp_power_with, verify_all, AggregateReport, Exponent, PrecisionConfig, Status, Verdict, VerifyConfig,
};
use solvdeg::PermGroup;

type Outcome = Result<String, String>;
type Criterion = (u32, &'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn base_config() -> VerifyConfig {
    VerifyConfig::default()
}

fn report() -> &'static AggregateReport {
    static REPORT: OnceLock<AggregateReport> = OnceLock::new();
    REPORT.get_or_init(|| verify_all(&base_config()).expect("default configuration is valid"))
}

fn criterion_1() -> Outcome {
    let expected = [(5, 24), (7, 42), (9, 144), (11, 110), (8, 168), (16, 960)];
    let mut got = Vec::new();
    for (q, s) in expected {
        let start = Instant::now();
        let r = s_aut_psl2(q).map_err(|e| e.to_string())?;
        ensure!(!r.budget_hit, "q={q}: search budget exhausted");
        ensure!(r.s_value == s, "q={q}: S = {}, expected {s}", r.s_value);
        got.push(format!("q={q}: {} ({:.2}s)", r.s_value, start.elapsed().as_secs_f64()));
    }
    Ok(got.join(", "))
}

fn criterion_2() -> Outcome {
    let c = cmp_power_with(&int(168), &int(504), 1, 3, &Exponent::mu(), base_config().precision);
    ensure!(c.verdict == Verdict::Equal && c.certified_equal, "168 vs 504^(mu/3): {:?}", c.verdict);
    let psl2 = report().report("psl2").ok_or("no psl2 report")?;
    ensure!(psl2.swept[1] == 1 << 16, "sweep ends at {}", psl2.swept[1]);
    let equal: Vec<_> = psl2.verdicts.iter().filter(|e| e.verdict == Verdict::Equal).collect();
    ensure!(equal.len() == 1 && equal[0].q == Some(8), "Equal verdicts: {equal:?}");
    ensure!(psl2.passed(), "failures: {:?}", psl2.failures);
    ensure!(psl2.tail.certified, "tail: {}", psl2.tail.method);
    Ok(format!("{} comparisons, single Equal at q=8", psl2.verdicts.len()))
}

fn criterion_3() -> Outcome {
    let r = report().report("sporadic").ok_or("no sporadic report")?;
    ensure!(r.verdicts.len() == 26, "{} rows", r.verdicts.len());
    for e in &r.verdicts {
        ensure!(e.verdict == Verdict::Less && e.margin_lo > 0.0, "{}: {:?} [{}, {}]", e.case, e.verdict, e.margin_lo, e.margin_hi);
    }
    let min = r.verdicts.iter().map(|e| e.margin_lo).fold(f64::INFINITY, f64::min);
    Ok(format!("26 rows, smallest margin {min:.4}"))
}

fn criterion_4() -> Outcome {
    let t = solvdeg::chardeg::tables().map_err(|e| e.to_string())?;
    let mut checked = 0;
    let names = t
        .exceptional
        .iter()
        .chain(&t.classical)
        .map(|r| r.name.as_str())
        .chain(["exceptional-points", "psln"]);
    for name in names {
        let r = report().report(name).ok_or(format!("no report for {name}"))?;
        ensure!(r.passed(), "{name}: {:?}", r.failures.first());
        ensure!(r.tail.certified, "{name}: tail not certified");
        ensure!(r.count(Verdict::Less) == r.verdicts.len(), "{name}: non-strict verdicts");
        if r.swept_param == "q" {
            ensure!(r.swept[1] == 4096, "{name}: swept to {}", r.swept[1]);
        }
        checked += r.verdicts.len();
    }
    let points = report().report("exceptional-points").ok_or("no point report")?;
    ensure!(points.verdicts.len() == 2, "{} point rows", points.verdicts.len());
    ensure!(base_config().classical_n_max == 12, "classical ranks");
    Ok(format!("{} rows + points + PSL_n, {checked} comparisons", t.exceptional.len() + t.classical.len()))
}

fn criterion_5() -> Outcome {
    for (n, b) in [(7, 35u32), (8, 70), (9, 216), (10, 567)] {
        let got = b_alt(n).map_err(|e| e.to_string())?;
        ensure!(got == BigUint::from(b), "b(A_{n}) = {got}, expected {b}");
    }
    let r = report().report("alternating").ok_or("no alternating report")?;
    ensure!(r.swept == [7, 40], "swept {:?}", r.swept);
    ensure!(r.passed(), "{:?}", r.failures.first());
    ensure!(r.tail.certified, "tail: {:?}", r.tail.notes);
    let searches = r.verdicts.iter().filter(|e| e.case.starts_with("S(Sym(")).count();
    ensure!(searches == 7, "{searches} symmetric searches");
    let s8 = r
        .verdicts
        .iter()
        .find(|e| e.case.starts_with("S(Sym(8))"))
        .ok_or("no Sym(8) search")?;
    Ok(format!("b(A_7..10) = 35, 70, 216, 567; n <= 40 certified; {}", s8.case))
}

fn check_two_group(g: &PermGroup) -> Result<(), String> {
    let n = g.degree();
    let depth = n.trailing_zeros();
    let colorings = color_2group(g).map_err(|e| e.to_string())?;
    for (f, d) in colorings.iter().zip(d_values(depth)) {
        let preservers = color_preservers(g, f).map_err(|e| e.to_string())?;
        ensure!(preservers.order().unwrap() == 1, "degree {n}: nontrivial preserver");
        ensure!(f.exponent_pair() == d, "degree {n}: pair {} != {d}", f.exponent_pair());
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    let s4 = transitive_two_subgroups(4).map_err(|e| e.to_string())?;
    let s8 = transitive_two_subgroups(8).map_err(|e| e.to_string())?;
    let s16 = random_transitive_two_subgroups(4, 100, 0x2c0105).map_err(|e| e.to_string())?;
    let groups: Vec<&PermGroup> = s4.iter().chain(&s8).chain(&s16).collect();
    groups.par_iter().try_for_each(|g| check_two_group(g))?;
    Ok(format!("{} in Sym(4), {} in Sym(8), {} random in Sym(16)", s4.len(), s8.len(), s16.len()))
}

fn criterion_7() -> Outcome {
    let corpus = solvable_corpus();
    ensure!(corpus.len() >= 50, "corpus has {} groups", corpus.len());
    corpus.par_iter().try_for_each(|g| -> Result<(), String> {
        let c = solvable_coloring(&g.group).map_err(|e| format!("{}: {e}", g.name))?;
        let j = c.preservers.order().unwrap();
        let order = g.group.order().unwrap();
        ensure!(j * j <= order, "{}: |J|={j}, |G|={order}", g.name);
        let sizes = c.coloring.class_sizes();
        ensure!(sizes.windows(2).all(|w| w[0] >= w[1]), "{}: class sizes {sizes:?}", g.name);
        if order <= 2000 {
            let brute = brute_preserver_order(&g.group, &c.coloring).unwrap();
            ensure!(brute == j, "{}: preserver {j} vs brute {brute}", g.name);
        }
        Ok(())
    })?;
    let max = corpus.iter().map(|g| g.group.order().unwrap()).max().unwrap_or(0);
    Ok(format!("{} groups, largest order {max}", corpus.len()))
}

fn criterion_8() -> Outcome {
    let corpus = solvable_corpus();
    let mut small: Vec<(String, PermGroup)> = corpus
        .into_iter()
        .filter(|g| g.group.order().unwrap() <= 400)
        .map(|g| (g.name, g.group))
        .collect();
    small.push(("Alt(5)".into(), alt(5)));
    small.push(("PSL2(7)".into(), psl2(7).unwrap()));
    small.push(("PSL2(8)".into(), psl2(8).unwrap()));
    small.push(("Sym(5)".into(), sym(5)));
    small.par_iter().try_for_each(|(name, g)| -> Result<(), String> {
        let fast = s_max(g).map_err(|e| e.to_string())?.s_value;
        let brute = brute_s_max(g).map_err(|e| e.to_string())?;
        ensure!(fast == brute, "{name}: search {fast}, oracle {brute}");
        Ok(())
    })?;
    let prime_powers: Vec<u64> = (4..=64).filter(|&q| solvdeg::gfield::prime_power(q).is_some()).collect();
    for &q in &prime_powers {
        let d = psl2_degrees(q).map_err(|e| e.to_string())?;
        ensure!(d.sum_of_squares() == psl2_order(q), "q={q}: sum of squares");
    }
    for q in [4u64, 5, 7, 8, 9, 11, 13] {
        let brute = brute_class_count(&psl2(q).unwrap()).unwrap();
        ensure!(brute == psl2_class_count(q), "q={q}: classes {} vs {brute}", psl2_class_count(q));
        ensure!(brute == psl2_degrees(q).unwrap().count(), "q={q}: degree count");
    }
    Ok(format!("{} groups of order <= 400 or simple, {} fields", small.len(), prime_powers.len()))
}

fn criterion_9() -> Outcome {
    let pairs: Vec<(PermGroup, PermGroup)> = vec![
        (sym(3), sym(3)),
        (sym(3), cyclic(2)),
        (sym(4), cyclic(3)),
        (sym(4), sym(3)),
        (alt(4), cyclic(2)),
        (dihedral(4), sym(3)),
        (alt(5), cyclic(2)),
        (alt(5), sym(3)),
        (cyclic(5), dihedral(5)),
        (sym(5), cyclic(2)),
    ];
    pairs.par_iter().try_for_each(|(a, b)| -> Result<(), String> {
        let c = s_product_check(a, b).map_err(|e| e.to_string())?;
        ensure!(c.holds && c.s_product == c.s_a * c.s_b, "{} * {} != {}", c.s_a, c.s_b, c.s_product);
        Ok(())
    })?;
    Ok("10 pairs".into())
}

fn criterion_10() -> Outcome {
    let base = base_config();
    let doubled = VerifyConfig {
        precision: PrecisionConfig {
            start: base.precision.start,
            cap: base.precision.cap * 2,
        },
        ..base.clone()
    };
    let again = verify_all(&doubled).map_err(|e| e.to_string())?;
    let first = report();
    ensure!(first.status == Status::Pass && again.status == Status::Pass, "status changed");
    let mut compared = 0;
    for (a, b) in first.reports.iter().zip(&again.reports) {
        ensure!(a.family == b.family && a.verdicts.len() == b.verdicts.len(), "{}: shape changed", a.family);
        for (x, y) in a.verdicts.iter().zip(&b.verdicts) {
            ensure!(x.case == y.case && x.verdict == y.verdict, "{}: {:?} vs {:?}", x.case, x.verdict, y.verdict);
            compared += 1;
        }
    }
    let c = cmp_power_with(&int(168), &int(504), 1, 3, &Exponent::mu(), doubled.precision);
    ensure!(c.verdict == Verdict::Equal, "tight case changed");
    Ok(format!("{compared} verdicts unchanged at cap {}", doubled.precision.cap))
}

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        (1, "exceptional PSL2 values by search", criterion_1),
        (2, "tight case and PSL2 sweep", criterion_2),
        (3, "sporadic table", criterion_3),
        (4, "family tables", criterion_4),
        (5, "alternating groups", criterion_5),
        (6, "2-group coloring suite", criterion_6),
        (7, "solvable coloring suite", criterion_7),
        (8, "oracle equivalence", criterion_8),
        (9, "direct product search", criterion_9),
        (10, "precision soundness", criterion_10),
    ];
    let mut failed = Vec::new();
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            Err(p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panicked".into()))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("PASS criterion {id} ({name}): {detail} [{secs:.1}s]"),
            Err(why) => {
                println!("FAIL criterion {id} ({name}): {why} [{secs:.1}s]");
                failed.push(id);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
