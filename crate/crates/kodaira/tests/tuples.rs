mod common;

use common::*;
use kodaira::tuple::{format_tuple, parse_tuple};
use kodaira_core::search::{enumerate, SearchContext, SearchKind, SearchOptions, Serial};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

#[test]
fn random_tuples_round_trip() {
    let mut rng = StdRng::seed_from_u64(7);
    for e in catalog().entries() {
        let g = e.build(512).unwrap();
        for len in [1, 9, 13] {
            let t: Vec<usize> = (0..len).map(|_| rng.random_range(0..g.order())).collect();
            let s = format_tuple(&g, &t);
            assert_eq!(s.split(';').count(), len);
            assert_eq!(parse_tuple(&g, None, &s).unwrap(), t, "{}", e.label);
            let plain: Vec<String> = t.iter().map(usize::to_string).collect();
            assert_eq!(parse_tuple(&g, None, &plain.join(";")).unwrap(), t);
        }
    }
}

#[test]
fn bad_tuples() {
    let g = group("G(32,49)");
    assert!(parse_tuple(&g, None, "").is_err());
    assert!(parse_tuple(&g, None, "1;;2").is_err());
    assert!(parse_tuple(&g, None, "32").is_err());
    assert!(parse_tuple(&g, None, "1,0").is_err());
    assert!(parse_tuple(&g, None, "2,0,0,0,0").is_err());
    assert!(parse_tuple(&g, None, "a,b,c,d,e").is_err());
}

/// Exactly eleven catalog groups admit structures, all of type (2, 2).
#[test]
fn structure_admitting_entries() {
    let c = catalog();
    let admitting: Vec<&str> = c
        .entries()
        .iter()
        .filter(|e| e.expected.structure_orbits > 0)
        .map(|e| e.label.as_str())
        .collect();
    assert_eq!(
        admitting,
        [
            "G(32,49)",
            "G(32,50)",
            "G(64,199)",
            "G(64,200)",
            "G(64,201)",
            "G(64,249)",
            "G(64,264)",
            "G(64,265)",
            "G(64,266)",
            "G(96,224)",
            "G(96,225)"
        ]
    );
    for e in c.entries() {
        let g = e.build(512).unwrap();
        let ctx = SearchContext::new(&g).unwrap();
        let r = enumerate(&ctx, &SearchOptions::new(SearchKind::Structures), &Serial);
        assert_eq!(
            r.orbit_count > 0,
            admitting.contains(&e.label.as_str()),
            "{}",
            e.label
        );
        if r.orbit_count > 0 {
            assert_eq!(r.n_values_seen.iter().copied().collect::<Vec<_>>(), [2]);
        }
    }
}
