//! Oracle suites behind `solvdeg selftest`.

use std::time::Instant;

use rayon::prelude::*;

use solvdeg::chardeg::dataset::{load_tables_checked, raw_tables};
use solvdeg::chardeg::{hook_degree, psl2_class_count, psl2_degrees, psl2_order, Partition};
use solvdeg::coloring::{color_2group, color_preservers, d_values, solvable_coloring};
use solvdeg::constructors::{alt, psl2};
use solvdeg::corpus::{solvable_corpus, transitive_two_subgroups};
use solvdeg::gfield::prime_power;
use solvdeg::oracle::{brute_class_count, brute_preserver_order, brute_s_max, syt_count};
use solvdeg::ssearch::s_max;

use crate::{Failure, EXIT_FAIL};

type Suite = fn() -> Result<String, String>;

fn search_vs_brute_force() -> Result<String, String> {
    let mut groups: Vec<_> = solvable_corpus()
        .into_iter()
        .filter(|g| g.group.order().is_ok_and(|o| o <= 200))
        .map(|g| (g.name, g.group))
        .collect();
    groups.push(("Alt(5)".into(), alt(5)));
    groups.push(("PSL2(7)".into(), psl2(7).map_err(|e| e.to_string())?));
    groups.par_iter().try_for_each(|(name, g)| {
        let fast = s_max(g).map_err(|e| e.to_string())?.s_value;
        let slow = brute_s_max(g).map_err(|e| e.to_string())?;
        if fast == slow {
            Ok(())
        } else {
            Err(format!("{name}: search {fast}, oracle {slow}"))
        }
    })?;
    Ok(format!("{} groups", groups.len()))
}

fn psl2_characters() -> Result<String, String> {
    let qs: Vec<u64> = (4..=64).filter(|&q| prime_power(q).is_some()).collect();
    for &q in &qs {
        let d = psl2_degrees(q).map_err(|e| e.to_string())?;
        if d.sum_of_squares() != psl2_order(q) {
            return Err(format!("q={q}: sum of squares"));
        }
        if q <= 13 {
            let brute = brute_class_count(&psl2(q).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
            if brute != psl2_class_count(q) || brute != d.count() {
                return Err(format!("q={q}: {brute} classes by brute force"));
            }
        }
    }
    Ok(format!("{} fields", qs.len()))
}

fn hook_lengths() -> Result<String, String> {
    let mut shapes = 0;
    for n in 1..=10 {
        for p in Partition::all(n) {
            if hook_degree(&p) != syt_count(&p).into() {
                return Err(format!("shape {p}"));
            }
            shapes += 1;
        }
    }
    Ok(format!("{shapes} shapes"))
}

fn two_group_colorings() -> Result<String, String> {
    let mut count = 0;
    for n in [2, 4, 8] {
        let groups = transitive_two_subgroups(n).map_err(|e| e.to_string())?;
        let targets = d_values(n.trailing_zeros());
        for g in &groups {
            let fs = color_2group(g).map_err(|e| e.to_string())?;
            for (f, d) in fs.iter().zip(&targets) {
                let trivial = color_preservers(g, f).map_err(|e| e.to_string())?.order() == Ok(1);
                if !trivial || f.exponent_pair() != *d {
                    return Err(format!("degree {n}: coloring {f}"));
                }
            }
        }
        count += groups.len();
    }
    Ok(format!("{count} groups"))
}

fn solvable_colorings() -> Result<String, String> {
    let corpus = solvable_corpus();
    corpus.par_iter().try_for_each(|g| {
        let c = solvable_coloring(&g.group).map_err(|e| format!("{}: {e}", g.name))?;
        let j = c.preservers.order().map_err(|e| e.to_string())?;
        let order = g.group.order().map_err(|e| e.to_string())?;
        let brute_ok = order > 2000 || brute_preserver_order(&g.group, &c.coloring) == Ok(j);
        if j * j <= order && brute_ok {
            Ok(())
        } else {
            Err(format!("{}: |J| = {j}, |G| = {order}", g.name))
        }
    })?;
    Ok(format!("{} groups", corpus.len()))
}

fn dataset_checksum() -> Result<String, String> {
    let text = raw_tables();
    let expected = include_str!("../../../data/prop21_tables.json.sha256");
    load_tables_checked(text, expected.split_whitespace().next().unwrap_or("")).map_err(|e| e.to_string())?;
    Ok("checksum matches".into())
}

pub fn run() -> Result<(), Failure> {
    let suites: [(&str, Suite); 6] = [
        ("solvable search vs brute force", search_vs_brute_force),
        ("PSL2 character degrees", psl2_characters),
        ("hook lengths vs tableaux", hook_lengths),
        ("2-group colorings", two_group_colorings),
        ("solvable colorings", solvable_colorings),
        ("dataset checksum", dataset_checksum),
    ];
    let mut failed = 0;
    for (name, suite) in suites {
        let start = Instant::now();
        match suite() {
            Ok(detail) => println!("PASS {name}: {detail} [{:.1}s]", start.elapsed().as_secs_f64()),
            Err(why) => {
                println!("FAIL {name}: {why}");
                failed += 1;
            }
        }
    }
    if failed == 0 {
        Ok(())
    } else {
        Err(Failure {
            code: EXIT_FAIL,
            message: format!("{failed} suite(s) failed"),
        })
    }
}
