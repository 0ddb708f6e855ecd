mod common;

use common::*;
use kodaira::catalog::{parse_label, subgroup_from_words};
use kodaira::expected::{parse_expected, ExpectedMetrics, EXPECTED_TOML};
use kodaira_core::grouptheory::{center, is_isomorphic, monolith, quotient};
use kodaira_core::{build_group, parse_presentation};

#[test]
fn builtin_entries() {
    let c = catalog();
    let main: Vec<_> = c.entries().iter().filter(|e| !e.auxiliary).collect();
    assert_eq!(main.len(), 27);
    assert_eq!(c.entries().len(), 32);
    for e in c.entries() {
        let g = e.build(kodaira_core::DEFAULT_ORDER_CAP).unwrap();
        assert_eq!(g.order(), e.order());
        if let Some((order, _)) = e.id {
            assert_eq!(order, g.order(), "{}", e.label);
        }
    }
    let orders: Vec<usize> = main.iter().map(|e| e.order()).collect();
    assert!(orders.windows(2).all(|w| w[0] <= w[1]));
}

#[test]
fn label_forms() {
    let c = catalog();
    for s in ["G(32,49)", "(32, 49)", "32,49", "g32_49", " G( 32 , 49 ) "] {
        assert_eq!(c.find(s).map(|e| e.label.as_str()), Some("G(32,49)"), "{s}");
    }
    assert_eq!(c.find("q8").map(|e| e.label.as_str()), Some("Q8"));
    assert!(c.find("G(32,51)").is_none());
    assert!(c.find("nonsense").is_none());
    assert_eq!(parse_label("g64_266"), Some((64, 266)));
    assert_eq!(parse_label("64"), None);
}

#[test]
fn presentations_round_trip() {
    for e in catalog().entries() {
        let text = e.presentation.to_string();
        let back = parse_presentation(&text).unwrap();
        assert_eq!(back, e.presentation, "{}", e.label);
        let a = e.build(512).unwrap();
        let b = build_group(&back).unwrap();
        assert_eq!(a.table_rows(), b.table_rows());
    }
}

#[test]
fn expected_data_round_trips() {
    let entries = parse_expected(EXPECTED_TOML).unwrap();
    for e in &entries {
        let text = toml::to_string(e).unwrap();
        let back: ExpectedMetrics = toml::from_str(&text).unwrap();
        assert_eq!(&back, e);
    }
    assert!(parse_expected("version = 2\ngroup = []\n").is_err());
    assert!(parse_expected(&EXPECTED_TOML.replacen("aut_order", "aut_ordr", 1)).is_err());
}

#[test]
fn quotients_are_the_named_groups() {
    let c = catalog();
    for e in c.entries() {
        let g = e.build(512).unwrap();
        for q in &e.expected.quotients {
            let n = subgroup_from_words(&g, std::slice::from_ref(&q.kernel)).unwrap();
            let target = c.find(&q.target).unwrap().build(512).unwrap();
            let m = quotient(&g, &n).unwrap();
            assert_eq!(m.target.order() * n.len(), g.order());
            assert!(
                is_isomorphic(&m.target, &target).is_some(),
                "{} / <{}>",
                e.label,
                q.kernel
            );
        }
    }
}

/// Groups without a unique minimal normal subgroup only carry tuples
/// lifted from a proper quotient, so each such entry names one.
#[test]
fn nonmonolithic_entries_name_a_quotient() {
    for e in catalog().entries() {
        let x = &e.expected;
        if !x.monolithic && x.prestructure_orbits > 0 {
            assert!(!x.quotients.is_empty(), "{}", e.label);
        }
    }
}

#[test]
fn monoliths_have_prime_exponent() {
    for e in catalog().entries() {
        let g = e.build(512).unwrap();
        let m = monolith(&g);
        if !e.expected.monolithic {
            assert_eq!(m.len(), 1, "{}", e.label);
            continue;
        }
        let orders: std::collections::BTreeSet<usize> = m
            .iter()
            .filter(|&x| x != 0)
            .map(|x| g.order_of(x))
            .collect();
        assert_eq!(orders.len(), 1, "{}", e.label);
        let p = *orders.iter().next().unwrap();
        assert!((2..p).all(|d| p % d != 0), "{}: {p}", e.label);
        assert!(m.len().is_power_of_two() || p != 2);
        // In a p-group the monolith is central of order p.
        if g.order().is_power_of_two() {
            assert_eq!(m.len(), 2, "{}", e.label);
            assert!(m.is_subset(&center(&g)));
        }
    }
}

#[test]
fn expected_generators_match_orders() {
    for e in catalog().entries() {
        let g = e.build(512).unwrap();
        let z = subgroup_from_words(&g, &e.expected.center.gens).unwrap();
        assert_eq!(z, center(&g), "{}", e.label);
        let gens: Vec<usize> = z.iter().collect();
        assert_eq!(generated_order(&g, &gens), z.len());
    }
}
