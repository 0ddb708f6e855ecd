//! External multiplication tables:
//!
//! ```text
//! order 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! names
//! e a a2
//! ```
//!
//! Row `a` lists the products `a*b`. Element 0 must be the identity. The
//! `names` block is optional and may wrap across lines. `#` starts a
//! comment.

use kodaira_core::FiniteGroup;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IngestError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("order {order} exceeds the configured cap {cap}")]
    OrderCap { order: usize, cap: usize },
    #[error(transparent)]
    Group(#[from] kodaira_core::Error),
}

#[derive(Clone, Debug)]
pub struct Table {
    pub group: FiniteGroup,
    pub names: Option<Vec<String>>,
}

fn syntax(line: usize, message: impl Into<String>) -> IngestError {
    IngestError::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_table(text: &str, label: &str, cap: usize) -> Result<Table, IngestError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (ln, head) = lines.next().ok_or_else(|| syntax(1, "empty table file"))?;
    let n: usize = head
        .strip_prefix("order")
        .and_then(|r| r.trim().parse().ok())
        .filter(|&n| n > 0)
        .ok_or_else(|| syntax(ln, "expected `order N`"))?;
    if n > cap {
        return Err(IngestError::OrderCap { order: n, cap });
    }
    let mut rows = Vec::with_capacity(n);
    let mut last = ln;
    for r in 0..n {
        let (ln, l) = lines
            .next()
            .ok_or_else(|| syntax(last, format!("expected {n} rows, found {r}")))?;
        last = ln;
        let row: Vec<usize> = l
            .split_whitespace()
            .map(|t| {
                t.parse()
                    .map_err(|_| syntax(ln, format!("bad entry `{t}`")))
            })
            .collect::<Result<_, _>>()?;
        if row.len() != n {
            return Err(syntax(
                ln,
                format!("row has {} entries, expected {n}", row.len()),
            ));
        }
        if let Some(&bad) = row.iter().find(|&&x| x >= n) {
            return Err(syntax(ln, format!("entry {bad} out of range 0..{n}")));
        }
        rows.push(row);
    }
    let mut names = None;
    if let Some((ln, l)) = lines.next() {
        if l != "names" {
            return Err(syntax(ln, "expected `names` or end of file"));
        }
        let list: Vec<String> = lines
            .flat_map(|(_, l)| l.split_whitespace().map(String::from).collect::<Vec<_>>())
            .collect();
        if list.len() != n {
            return Err(syntax(
                ln,
                format!("names block has {} names, expected {n}", list.len()),
            ));
        }
        let mut sorted = list.clone();
        sorted.sort();
        sorted.dedup();
        if sorted.len() != n {
            return Err(syntax(ln, "duplicate element name"));
        }
        names = Some(list);
    }
    let group = FiniteGroup::from_table(label, &rows)?;
    Ok(Table { group, names })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_three_with_names() {
        let t = parse_table("order 3\n0 1 2\n1 2 0\n2 0 1\nnames\ne a\na2\n", "Z3", 512).unwrap();
        assert_eq!(t.group.order(), 3);
        assert_eq!(t.names.unwrap(), vec!["e", "a", "a2"]);
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            parse_table("order 2\n0 1\n", "x", 512),
            Err(IngestError::Syntax { line: 2, .. })
        ));
        assert!(matches!(
            parse_table("order 2\n0 1\n1 2\n", "x", 512),
            Err(IngestError::Syntax { line: 3, .. })
        ));
        assert!(matches!(
            parse_table("order 2\n0 1\n1 0\n", "x", 1),
            Err(IngestError::OrderCap { .. })
        ));
        assert!(matches!(
            parse_table("order 2\n0 1\n1 0\nnames\na\n", "x", 512),
            Err(IngestError::Syntax { .. })
        ));
        assert!(matches!(
            parse_table("order 2\n1 0\n0 1\n", "x", 512),
            Err(IngestError::Group(_))
        ));
    }
}
