mod common;

use common::*;
use kodaira_core::{
    build_group, parse_presentation, pcgroup::build_group_with_cap, Error, FiniteGroup, Word,
};

fn gen(g: &FiniteGroup, i: usize) -> usize {
    g.pc_generator(i - 1).unwrap()
}

// Full axiom scan, written out here rather than trusting the builder's own.
fn assert_group_axioms(g: &FiniteGroup) {
    let n = g.order();
    for a in 0..n {
        assert_eq!(g.mul(0, a), a);
        assert_eq!(g.mul(a, 0), a);
        assert_eq!(g.mul(a, g.inv(a)), 0);
        assert_eq!(g.mul(g.inv(a), a), 0);
        for b in 0..n {
            for c in 0..n {
                assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
            }
        }
    }
}

#[test]
fn cyclic_of_order_two() {
    let g = group("gens 1\norder 1 2\n");
    assert_eq!(g.order(), 2);
    assert_eq!(g.table_rows(), vec![vec![0, 1], vec![1, 0]]);
}

#[test]
fn extraspecial_32_relations() {
    let pres = parse_presentation(G32_49).unwrap();
    assert_eq!(pres.k(), 5);
    assert_eq!(pres.comm_words.len(), 3);
    assert!(pres.power_words.values().all(Word::is_identity));
    let g = build_group(&pres).unwrap();
    assert_eq!(g.order(), 32);
    assert_eq!(g.label(), "G(32,49)");
    assert_eq!(g.commutator(gen(&g, 1), gen(&g, 2)), gen(&g, 5));
    assert_eq!(g.commutator(gen(&g, 2), gen(&g, 3)), gen(&g, 5));
    assert_eq!(g.commutator(gen(&g, 1), gen(&g, 3)), 0);
    assert_group_axioms(&g);
}

#[test]
fn order_four_power_chain() {
    let g = group(
        "gens 6\norder 1 2\norder 2 2\norder 3 2\norder 4 2\norder 5 2\norder 6 2\n\
         pow 1 = x5\npow 5 = x6\ncomm 1 4 = x6\ncomm 2 3 = x6\n",
    );
    assert_eq!(g.order(), 64);
    assert_eq!(g.order_of(gen(&g, 5)), 4);
    assert_eq!(g.order_of(gen(&g, 1)), 8);
}

#[test]
fn mixed_orders_build() {
    for (text, n) in [(S4, 24), (Q8, 8), (D8, 8), (Z6, 6)] {
        let g = group(text);
        assert_eq!(g.order(), n);
        assert_group_axioms(&g);
    }
    let z6 = group(Z6);
    assert!(z6.is_abelian());
    assert_eq!(z6.order_of(gen(&z6, 1)), 6);
}

#[test]
fn self_referencing_commutator() {
    // [x1, x2] = x2 makes x1 invert x2 in Z3: this is S3.
    let g = group("gens 2\norder 1 2\norder 2 3\ncomm 1 2 = x2\n");
    assert_eq!(g.order(), 6);
    assert!(!g.is_abelian());
    let (a, b) = (gen(&g, 1), gen(&g, 2));
    assert_eq!(g.conjugate(a, b), g.inv(b));
}

#[test]
fn element_ops_agree_with_definitions() {
    let g = group(G32_50);
    for a in g.elements() {
        assert_eq!(g.commutator(a, a), 0);
        assert_eq!(g.pow(a, -1), g.inv(a));
        assert_eq!(g.pow(a, 0), 0);
        assert_eq!(g.pow(a, g.order_of(a) as i64), 0);
        for b in g.elements() {
            assert_eq!(
                g.commutator(a, b),
                g.mul(g.mul(a, b), g.mul(g.inv(a), g.inv(b)))
            );
            assert_eq!(g.conjugate(a, b), g.mul(g.mul(a, b), g.inv(a)));
        }
    }
    assert!(matches!(
        g.check_index(32),
        Err(Error::IndexOutOfRange {
            index: 32,
            order: 32
        })
    ));
}

#[test]
fn eval_word_folds_letters() {
    let g = group(G32_49);
    let gens = g.pc_generators();
    let w = parse_presentation(
        "gens 5\norder 1 2\norder 2 2\norder 3 2\norder 4 2\norder 5 2\npow 1 = x2 x3^-1 x2\n",
    )
    .unwrap()
    .power_word(0);
    let expect = g.mul(g.mul(gens[1], g.inv(gens[2])), gens[1]);
    assert_eq!(g.eval_word(&w, &gens).unwrap(), expect);
    assert!(g.eval_word(&w, &gens[..2]).is_err());
}

#[test]
fn normal_forms_index_lexicographically() {
    let g = group(S4);
    assert_eq!(g.normal_form(0).unwrap(), vec![0, 0, 0, 0]);
    let mut prev: Option<Vec<u32>> = None;
    for a in g.elements() {
        let nf = g.normal_form(a).unwrap();
        assert_eq!(g.element_from_exponents(&nf).unwrap(), a);
        if let Some(p) = prev {
            assert!(p < nf);
        }
        prev = Some(nf);
    }
}

#[test]
fn emitted_presentation_rebuilds_identically() {
    for text in [G32_49, G32_50, Q8, D8, S4, Z6] {
        let g = group(text);
        let emitted = g.source().unwrap().to_string();
        let again = group(&emitted);
        assert_eq!(g.table_rows(), again.table_rows(), "{emitted}");
        assert_eq!(g.label(), again.label());
    }
}

#[test]
fn parse_errors_carry_lines() {
    let bad_key = "gens 3\norder 1 2\norder 2 2\norder 3 2\ncomm 3 1 = x2\n";
    match parse_presentation(bad_key) {
        Err(Error::Syntax { line: 5, message }) => {
            assert!(message.contains("commutator key must satisfy i < j"))
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(
        parse_presentation("gens 2\norder 1 2\norder 2 2\ncomm 1 2 = x7\n"),
        Err(Error::GeneratorOutOfRange {
            line: 4,
            index: 7,
            gens: 2
        })
    ));
    assert!(matches!(
        parse_presentation("gens 2\norder 1 2\norder 2 2\npow 1 = x2\npow 1 = 1\n"),
        Err(Error::DuplicateKey { line: 5, .. })
    ));
    assert!(matches!(
        parse_presentation("gens 2\norder 1 2\n"),
        Err(Error::MissingRelativeOrder { generator: 2 })
    ));
    assert!(matches!(
        parse_presentation("gens 1\norder 1 2\nfrobnicate\n"),
        Err(Error::Syntax { line: 3, .. })
    ));
}

#[test]
fn inconsistent_presentations_rejected() {
    // x1 would square x2 inside Z4, which is not injective.
    let collapse = "gens 2\norder 1 2\norder 2 4\ncomm 1 2 = x2\n";
    let r = parse_presentation(collapse).unwrap();
    assert!(build_group(&r).is_err());
    // Conjugation by x1 is bijective on <x2, x3> but has order 3 while x1 has order 2.
    let bad_order = "gens 3\norder 1 2\norder 2 2\norder 3 2\ncomm 1 2 = x3\ncomm 1 3 = x2\n";
    let r = build_group(&parse_presentation(bad_order).unwrap());
    assert!(matches!(r, Err(Error::Inconsistent { .. })), "{r:?}");
    // Power word referring back to an earlier generator.
    let backwards = "gens 2\norder 1 2\norder 2 2\npow 2 = x1\n";
    assert!(matches!(
        build_group(&parse_presentation(backwards).unwrap()),
        Err(Error::Inconsistent { .. })
    ));
}

#[test]
fn order_cap_enforced() {
    let pres = parse_presentation(G32_49).unwrap();
    assert!(matches!(
        build_group_with_cap(&pres, 16),
        Err(Error::OrderCap { order: 32, cap: 16 })
    ));
    let big = "gens 10\n".to_string()
        + &(1..=10)
            .map(|i| format!("order {i} 2\n"))
            .collect::<String>();
    assert!(matches!(
        build_group(&parse_presentation(&big).unwrap()),
        Err(Error::OrderCap { order: 1024, .. })
    ));
}

#[test]
fn tables_reject_broken_axioms() {
    let z3 = vec![vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]];
    assert_eq!(FiniteGroup::from_table("Z3", &z3).unwrap().order(), 3);
    // Row 1 of a loop that is not associative.
    let bad = vec![
        vec![0, 1, 2, 3, 4],
        vec![1, 0, 3, 4, 2],
        vec![2, 4, 0, 1, 3],
        vec![3, 2, 4, 0, 1],
        vec![4, 3, 1, 2, 0],
    ];
    match FiniteGroup::from_table("loop", &bad) {
        Err(Error::Axiom { message }) => assert!(message.contains('(')),
        other => panic!("{other:?}"),
    }
    assert!(FiniteGroup::from_table("ragged", &[vec![0, 1], vec![1]]).is_err());
}

#[test]
fn lagrange_on_examples() {
    for text in [G32_49, G32_50, S4, Q8] {
        let g = group(text);
        let profile = order_profile(&g);
        for (k, &c) in profile.iter().enumerate() {
            if c > 0 {
                assert_eq!(g.order() % k, 0);
            }
        }
        for a in g.elements() {
            assert!(profile[g.order_of(a)] > 0);
        }
    }
}
