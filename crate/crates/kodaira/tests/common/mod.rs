#![allow(dead_code)]

use kodaira::catalog::Catalog;
use kodaira_core::FiniteGroup;

pub fn catalog() -> Catalog {
    Catalog::builtin().expect("built-in catalog loads")
}

pub fn group(label: &str) -> FiniteGroup {
    catalog()
        .find(label)
        .unwrap_or_else(|| panic!("{label} in catalog"))
        .build(kodaira_core::DEFAULT_ORDER_CAP)
        .unwrap()
}

/// Order of the subgroup generated by `gens`, by breadth-first closure.
pub fn generated_order(g: &FiniteGroup, gens: &[usize]) -> usize {
    let mut seen = vec![false; g.order()];
    let mut stack = vec![0];
    seen[0] = true;
    while let Some(a) = stack.pop() {
        for &x in gens {
            let b = g.mul(a, x);
            if !seen[b] {
                seen[b] = true;
                stack.push(b);
            }
        }
    }
    seen.iter().filter(|&&s| s).count()
}
