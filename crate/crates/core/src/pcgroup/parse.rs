use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::{PcPresentation, Word};
use crate::{Error, Result};

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

/// Parse the line-oriented presentation format:
///
/// ```text
/// group "G(32,49)"
/// gens 5
/// order 1 2
/// ...
/// comm 1 2 = x5
/// end
/// ```
///
/// `group` and `end` are optional. `#` starts a comment.
pub fn parse_presentation(text: &str) -> Result<PcPresentation> {
    let mut name = String::new();
    let mut k: Option<usize> = None;
    let mut orders: BTreeMap<usize, u32> = BTreeMap::new();
    let mut power_words = BTreeMap::new();
    let mut comm_words = BTreeMap::new();
    let mut ended = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if ended {
            return Err(syntax(line_no, "content after `end`"));
        }
        let (keyword, rest) = match line.split_once(char::is_whitespace) {
            Some((a, b)) => (a, b.trim()),
            None => (line, ""),
        };
        match keyword {
            "group" => {
                let label = rest
                    .strip_prefix('"')
                    .and_then(|s| s.strip_suffix('"'))
                    .ok_or_else(|| syntax(line_no, "expected group \"<label>\""))?;
                name = label.to_string();
            }
            "gens" => {
                if k.is_some() {
                    return Err(Error::DuplicateKey {
                        line: line_no,
                        key: "gens".into(),
                    });
                }
                let n = parse_uint(rest, line_no)?;
                if n == 0 {
                    return Err(syntax(line_no, "generator count must be positive"));
                }
                k = Some(n);
            }
            "order" => {
                let k = k.ok_or_else(|| syntax(line_no, "`order` before `gens`"))?;
                let mut parts = rest.split_whitespace();
                let (Some(i), Some(p), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(syntax(line_no, "expected `order <i> <p>`"));
                };
                let i = generator_index(i, k, line_no)?;
                let p = parse_uint(p, line_no)?;
                if p < 2 {
                    return Err(syntax(line_no, "relative order must be at least 2"));
                }
                let p =
                    u32::try_from(p).map_err(|_| syntax(line_no, "relative order too large"))?;
                if orders.insert(i, p).is_some() {
                    return Err(Error::DuplicateKey {
                        line: line_no,
                        key: format!("order {}", i + 1),
                    });
                }
            }
            "pow" => {
                let k = k.ok_or_else(|| syntax(line_no, "`pow` before `gens`"))?;
                let (lhs, rhs) = split_eq(rest, line_no)?;
                let mut parts = lhs.split_whitespace();
                let (Some(i), None) = (parts.next(), parts.next()) else {
                    return Err(syntax(line_no, "expected `pow <i> = <word>`"));
                };
                let i = generator_index(i, k, line_no)?;
                let w = parse_word(rhs, k, line_no)?;
                if power_words.insert(i, w).is_some() {
                    return Err(Error::DuplicateKey {
                        line: line_no,
                        key: format!("pow {}", i + 1),
                    });
                }
            }
            "comm" => {
                let k = k.ok_or_else(|| syntax(line_no, "`comm` before `gens`"))?;
                let (lhs, rhs) = split_eq(rest, line_no)?;
                let mut parts = lhs.split_whitespace();
                let (Some(i), Some(j), None) = (parts.next(), parts.next(), parts.next()) else {
                    return Err(syntax(line_no, "expected `comm <i> <j> = <word>`"));
                };
                let i = generator_index(i, k, line_no)?;
                let j = generator_index(j, k, line_no)?;
                if i >= j {
                    return Err(syntax(line_no, "commutator key must satisfy i < j"));
                }
                let w = parse_word(rhs, k, line_no)?;
                if comm_words.insert((i, j), w).is_some() {
                    return Err(Error::DuplicateKey {
                        line: line_no,
                        key: format!("comm {} {}", i + 1, j + 1),
                    });
                }
            }
            "end" => {
                if !rest.is_empty() {
                    return Err(syntax(line_no, "unexpected text after `end`"));
                }
                ended = true;
            }
            other => return Err(syntax(line_no, format!("unknown keyword `{other}`"))),
        }
    }

    let k = k.ok_or_else(|| syntax(0, "missing `gens` line"))?;
    let mut rel_orders = Vec::with_capacity(k);
    for i in 0..k {
        rel_orders.push(
            *orders
                .get(&i)
                .ok_or(Error::MissingRelativeOrder { generator: i + 1 })?,
        );
    }
    Ok(PcPresentation {
        name,
        rel_orders,
        power_words,
        comm_words,
    })
}

fn parse_uint(s: &str, line: usize) -> Result<usize> {
    s.trim()
        .parse()
        .map_err(|_| syntax(line, format!("expected a non-negative integer, got `{s}`")))
}

fn generator_index(s: &str, k: usize, line: usize) -> Result<usize> {
    let i = parse_uint(s, line)?;
    if i == 0 || i > k {
        return Err(Error::GeneratorOutOfRange {
            line,
            index: i,
            gens: k,
        });
    }
    Ok(i - 1)
}

fn split_eq(s: &str, line: usize) -> Result<(&str, &str)> {
    s.split_once('=')
        .map(|(a, b)| (a.trim(), b.trim()))
        .ok_or_else(|| syntax(line, "missing `=`"))
}

/// Parse a single word such as `x4^-1 x5` over `k` generators.
pub fn parse_word_over(text: &str, k: usize) -> Result<Word> {
    parse_word(text.trim(), k, 1)
}

fn parse_word(s: &str, k: usize, line: usize) -> Result<Word> {
    if s.is_empty() {
        return Err(syntax(line, "empty word (use `1` for the identity)"));
    }
    if s == "1" {
        return Ok(Word::identity());
    }
    let mut letters = Vec::new();
    for tok in s.split_whitespace() {
        let body = tok
            .strip_prefix('x')
            .ok_or_else(|| syntax(line, format!("bad token `{tok}`")))?;
        let (g, e) = match body.split_once('^') {
            Some((g, e)) => {
                let e: i32 = e
                    .parse()
                    .map_err(|_| syntax(line, format!("bad exponent in `{tok}`")))?;
                (g, e)
            }
            None => (body, 1),
        };
        if e == 0 {
            return Err(syntax(line, format!("zero exponent in `{tok}`")));
        }
        let g = generator_index(g, k, line)?;
        letters.push((g, e));
    }
    Ok(Word(letters))
}
