mod common;

use common::*;
use kodaira::ingest::{parse_table, IngestError};
use kodaira_core::grouptheory::{
    automorphism_group, center, derived_subgroup, is_isomorphic, monolith,
};

/// All permutations of 0..4, identity first.
fn s4_elements() -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    p.iter().for_each(|&x| seen[x] = true);
                    if seen.iter().all(|&s| s) {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn table_text(rows: &[Vec<usize>], names: Option<&[String]>) -> String {
    let mut s = format!("# generated\norder {}\n", rows.len());
    for r in rows {
        s += &r.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        s += "\n";
    }
    if let Some(ns) = names {
        s += "names\n";
        s += &ns.join(" ");
        s += "\n";
    }
    s
}

fn s4_rows() -> Vec<Vec<usize>> {
    let els = s4_elements();
    let idx = |p: [usize; 4]| els.iter().position(|&q| q == p).unwrap();
    els.iter()
        .map(|a| {
            els.iter()
                .map(|b| idx([a[b[0]], a[b[1]], a[b[2]], a[b[3]]]))
                .collect()
        })
        .collect()
}

#[test]
fn symmetric_group_from_permutations() {
    let rows = s4_rows();
    let t = parse_table(&table_text(&rows, None), "perm-S4", 512).unwrap();
    let g = t.group;
    assert_eq!(g.order(), 24);
    assert_eq!(g.label(), "perm-S4");
    assert_eq!(center(&g).len(), 1);
    assert_eq!(derived_subgroup(&g).len(), 12);
    assert_eq!(monolith(&g).len(), 4);
    assert_eq!(automorphism_group(&g).unwrap().order(), 24);
    assert!(is_isomorphic(&g, &group("S4")).is_some());
}

#[test]
fn cyclic_group_with_names() {
    let rows: Vec<Vec<usize>> = (0..6)
        .map(|a| (0..6).map(|b| (a + b) % 6).collect())
        .collect();
    let names: Vec<String> = (0..6).map(|i| format!("a{i}")).collect();
    let t = parse_table(&table_text(&rows, Some(&names)), "c6", 512).unwrap();
    assert_eq!(t.names.as_deref(), Some(names.as_slice()));
    assert!(is_isomorphic(&t.group, &group("Z6")).is_some());
    assert!(is_isomorphic(&t.group, &group("S3")).is_none());
    let tuple = kodaira::tuple::parse_tuple(&t.group, t.names.as_deref(), "a1;a5;3").unwrap();
    assert_eq!(tuple, [1, 5, 3]);
    assert!(kodaira::tuple::parse_tuple(&t.group, t.names.as_deref(), "0,1").is_err());
}

fn syntax_line(e: IngestError) -> usize {
    match e {
        IngestError::Syntax { line, .. } => line,
        other => panic!("expected a syntax error, got {other}"),
    }
}

#[test]
fn malformed_tables() {
    let z3 = "order 3\n0 1 2\n1 2 0\n2 0 1\n";
    assert!(parse_table(z3, "z3", 512).is_ok());
    assert_eq!(syntax_line(parse_table("", "x", 512).unwrap_err()), 1);
    assert_eq!(
        syntax_line(parse_table("size 3\n", "x", 512).unwrap_err()),
        1
    );
    assert_eq!(
        syntax_line(parse_table("order 3\n0 1 2\n1 2 0\n", "x", 512).unwrap_err()),
        3
    );
    assert_eq!(
        syntax_line(parse_table("order 3\n0 1 2\n1 2 q\n2 0 1\n", "x", 512).unwrap_err()),
        3
    );
    assert_eq!(
        syntax_line(parse_table("order 3\n0 1 2\n1 2\n2 0 1\n", "x", 512).unwrap_err()),
        3
    );
    assert_eq!(
        syntax_line(
            parse_table("order 3\n0 1 2\n1 2 0\n2 0 1\nnames\na b\n", "x", 512).unwrap_err()
        ),
        5
    );
    assert!(matches!(
        parse_table(z3, "x", 2),
        Err(IngestError::OrderCap { order: 3, cap: 2 })
    ));
}

#[test]
fn non_groups_rejected() {
    // Identity not at index 0.
    let shifted = "order 2\n1 0\n0 1\n";
    assert!(parse_table(shifted, "x", 512).is_err());
    // A Latin square that is not associative.
    let rows = [
        [0, 1, 2, 3, 4],
        [1, 0, 3, 4, 2],
        [2, 4, 0, 1, 3],
        [3, 2, 4, 0, 1],
        [4, 3, 1, 2, 0],
    ];
    let text = table_text(&rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>(), None);
    assert!(parse_table(&text, "x", 512).is_err());
    // Repeated entry in a row.
    assert!(parse_table("order 2\n0 1\n1 1\n", "x", 512).is_err());
    // Out of range.
    assert!(parse_table("order 2\n0 1\n1 2\n", "x", 512).is_err());
}
