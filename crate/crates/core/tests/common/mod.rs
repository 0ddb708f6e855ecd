#![allow(dead_code)]

use kodaira_core::{build_group, parse_presentation, FiniteGroup};

pub const G32_49: &str = "group \"G(32,49)\"
gens 5
order 1 2
order 2 2
order 3 2
order 4 2
order 5 2
comm 1 2 = x5
comm 1 4 = x5
comm 2 3 = x5
end
";

pub const G32_50: &str = "group \"G(32,50)\"
gens 5
order 1 2
order 2 2
order 3 2
order 4 2
order 5 2
pow 2 = x5
pow 3 = x5
comm 1 2 = x5
comm 1 4 = x5
comm 2 3 = x5
end
";

pub const Q8: &str = "group \"Q8\"
gens 3
order 1 2
order 2 2
order 3 2
pow 1 = x3
pow 2 = x3
comm 1 2 = x3
";

pub const D8: &str = "group \"D8\"
gens 3
order 1 2
order 2 2
order 3 2
pow 2 = x3
comm 1 2 = x3
";

// (12), (123), (12)(34), (13)(24)
pub const S4: &str = "group \"S4\"
gens 4
order 1 2
order 2 3
order 3 2
order 4 2
comm 1 2 = x2
comm 1 4 = x3
comm 2 3 = x4
comm 2 4 = x3 x4
";

pub const Z6: &str = "group \"Z6\"
gens 2
order 1 2
order 2 3
pow 1 = x2
";

pub fn group(text: &str) -> FiniteGroup {
    build_group(&parse_presentation(text).unwrap()).unwrap()
}

/// Element orders counted by brute force.
pub fn order_profile(g: &FiniteGroup) -> Vec<usize> {
    let n = g.order();
    let mut counts = vec![0; n + 1];
    for a in 0..n {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = g.mul(x, a);
            k += 1;
        }
        counts[k] += 1;
    }
    counts
}
