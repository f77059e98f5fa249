use solvdeg::constructors::{alt, psl2, sym};
use solvdeg::corpus::solvable_corpus;
use solvdeg::ssearch::s_max;
use solvdeg::PermGroup;

fn sample() -> Vec<(String, PermGroup)> {
    let mut groups: Vec<_> = solvable_corpus()
        .into_iter()
        .filter(|g| g.group.order().is_ok_and(|o| o <= 5000))
        .map(|g| (g.name, g.group))
        .collect();
    groups.push(("Alt(5)".into(), alt(5)));
    groups.push(("Sym(5)".into(), sym(5)));
    groups.push(("Alt(6)".into(), alt(6)));
    groups.push(("PSL2(7)".into(), psl2(7).unwrap()));
    groups.push(("PSL2(11)".into(), psl2(11).unwrap()));
    groups
}

#[test]
fn witness_is_solvable_with_reported_order() {
    for (name, g) in sample() {
        let r = s_max(&g).unwrap();
        assert!(!r.budget_hit, "{name}");
        let w = g.subgroup(r.witness.clone()).unwrap();
        assert!(w.is_solvable().unwrap(), "{name}");
        assert_eq!(w.order().unwrap(), r.s_value, "{name}");
        if g.is_solvable().unwrap() {
            assert_eq!(r.s_value, g.order().unwrap(), "{name}");
        }
    }
}

#[test]
fn value_bounds_sylow_and_element_orders() {
    for (name, g) in sample() {
        let s = s_max(&g).unwrap().s_value;
        assert!(s >= g.sylow2().unwrap().order().unwrap(), "{name}");
        let longest = g.elements().unwrap().iter().map(|x| x.order()).max().unwrap();
        assert!(s >= longest, "{name}");
        assert_eq!(g.order().unwrap() % s, 0, "{name}");
    }
}

#[test]
fn value_is_monotone_under_subgroups() {
    for (name, g) in sample() {
        let s = s_max(&g).unwrap().s_value;
        let subgroups = [g.derived_subgroup().unwrap(), g.sylow2().unwrap(), g.setwise_stabilizer(&[0]).unwrap()];
        for h in subgroups {
            assert!(s_max(&h).unwrap().s_value <= s, "{name}");
        }
    }
}
