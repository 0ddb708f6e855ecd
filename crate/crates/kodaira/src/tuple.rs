//! Tuples on the command line: entries separated by `;`. An entry with
//! commas is an exponent vector over the pc generators (`0,1,0,0,1`);
//! otherwise it is an element name from a table's `names` block or a
//! plain element index.

use anyhow::{bail, Context, Result};
use kodaira_core::FiniteGroup;

pub fn parse_tuple(g: &FiniteGroup, names: Option<&[String]>, text: &str) -> Result<Vec<usize>> {
    let mut out = Vec::new();
    for (i, item) in text.split(';').map(str::trim).enumerate() {
        if item.is_empty() {
            bail!("entry {} is empty", i + 1);
        }
        let x = if item.contains(',') {
            if !g.has_basis() {
                bail!(
                    "entry {}: exponent vectors need a group built from a presentation",
                    i + 1
                );
            }
            let exps: Vec<u32> = item
                .split(',')
                .map(|e| e.trim().parse::<u32>())
                .collect::<Result<_, _>>()
                .with_context(|| format!("entry {}: bad exponent vector {item:?}", i + 1))?;
            g.element_from_exponents(&exps)
                .with_context(|| format!("entry {}", i + 1))?
        } else if let Some(pos) = names.and_then(|ns| ns.iter().position(|n| n == item)) {
            pos
        } else {
            let x: usize = item
                .parse()
                .with_context(|| format!("entry {}: {item:?} is not an element", i + 1))?;
            g.check_index(x)
                .with_context(|| format!("entry {}", i + 1))?
        };
        out.push(x);
    }
    Ok(out)
}

/// Exponent vectors when the group has a pc basis, indices otherwise.
pub fn format_tuple(g: &FiniteGroup, entries: &[usize]) -> String {
    entries
        .iter()
        .map(|&x| match g.normal_form(x) {
            Some(v) => v.iter().map(u32::to_string).collect::<Vec<_>>().join(","),
            None => x.to_string(),
        })
        .collect::<Vec<_>>()
        .join(";")
}
