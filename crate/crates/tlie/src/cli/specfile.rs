//! The algebra description file format.
//!
//! One document describes one algebra:
//!
//! ```text
//! # comment
//! [meta]
//! name = my_algebra
//! variables = q, p
//! epsilon eps12 = -1        # optional sign constants for table expressions
//!
//! [basis]                   # ordered: the listing order is the total order
//! e12 1
//! e13 2 e_{13}              # optional display label after the grade
//!
//! [sym]                     # entries for ordered pairs x <= y; missing = 1
//! e12 e13 -> q
//!
//! [bracket]
//! e12 e23 -> e13
//!
//! [pseudo]
//! e13 e24 -> (q - q^-1) * e14.e23
//! ```
//!
//! `catalog dump` emits this format and `parse` reads it back; the two are
//! exact inverses on every built-in.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::algebra::{
    RawBasisElement, RawBracketEntry, RawPseudoEntry, RawSymEntry, RawTLieSpec,
};
use crate::cli::expr::{self, ExprContext, ExprError};
use crate::scalar::LaurentScalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecFileError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Expr {
        line: usize,
        #[source]
        source: ExprError,
    },
    #[error("line {line}: table entry ({x}, {y}) must name the ordered pair (swap the ids)")]
    DisorderedEntry { line: usize, x: String, y: String },
}

#[derive(PartialEq, Clone, Copy)]
enum Section {
    None,
    Meta,
    Basis,
    Sym,
    Bracket,
    Pseudo,
}

/// Parse a document into a raw (unvalidated) description.
pub fn parse(text: &str) -> Result<RawTLieSpec, SpecFileError> {
    let mut raw = RawTLieSpec::default();
    let mut constants: BTreeMap<String, LaurentScalar> = BTreeMap::new();
    let mut section = Section::None;
    let err = |line: usize, msg: &str| SpecFileError::Malformed {
        line,
        msg: msg.to_string(),
    };
    for (idx, full_line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = match full_line.split_once('#') {
            Some((head, _)) => head.trim(),
            None => full_line.trim(),
        };
        if line.is_empty() {
            continue;
        }
        if let Some(name) = line.strip_prefix('[').and_then(|s| s.strip_suffix(']')) {
            section = match name.trim() {
                "meta" => Section::Meta,
                "basis" => Section::Basis,
                "sym" => Section::Sym,
                "bracket" => Section::Bracket,
                "pseudo" => Section::Pseudo,
                other => return Err(err(line_no, &format!("unknown section `[{other}]`"))),
            };
            continue;
        }
        match section {
            Section::None => return Err(err(line_no, "content before the first section header")),
            Section::Meta => {
                if let Some(rest) = line.strip_prefix("epsilon ") {
                    let (name, value) = rest
                        .split_once('=')
                        .ok_or_else(|| err(line_no, "expected `epsilon <name> = 1|-1`"))?;
                    let value = match value.trim() {
                        "1" => LaurentScalar::one(),
                        "-1" => LaurentScalar::one().neg(),
                        other => {
                            return Err(err(line_no, &format!("epsilon must be 1 or -1, got `{other}`")))
                        }
                    };
                    constants.insert(name.trim().to_string(), value);
                } else if let Some((key, value)) = line.split_once('=') {
                    match key.trim() {
                        "name" => raw.name = value.trim().to_string(),
                        "variables" => {
                            raw.variables = value
                                .split([',', ' '])
                                .map(str::trim)
                                .filter(|s| !s.is_empty())
                                .map(String::from)
                                .collect();
                        }
                        other => return Err(err(line_no, &format!("unknown meta key `{other}`"))),
                    }
                } else {
                    return Err(err(line_no, "expected `key = value`"));
                }
            }
            Section::Basis => {
                let mut parts = line.splitn(3, char::is_whitespace);
                let id = parts.next().filter(|s| !s.is_empty());
                let grade = parts.next().and_then(|g| g.trim().parse::<u32>().ok());
                match (id, grade) {
                    (Some(id), Some(grade)) => raw.basis.push(RawBasisElement {
                        id: id.to_string(),
                        grade,
                        display: parts.next().map(|s| s.trim().to_string()).filter(|s| !s.is_empty()),
                    }),
                    _ => return Err(err(line_no, "expected `id grade [display]`")),
                }
            }
            Section::Sym | Section::Bracket | Section::Pseudo => {
                let (head, body) = line
                    .split_once("->")
                    .ok_or_else(|| err(line_no, "expected `x y -> expression`"))?;
                let ids: Vec<&str> = head.split_whitespace().collect();
                let [x, y] = ids.as_slice() else {
                    return Err(err(line_no, "expected exactly two ids before `->`"));
                };
                let order = |id: &str| raw.basis.iter().position(|b| b.id == id);
                if let (Some(a), Some(b)) = (order(x), order(y)) {
                    if a > b {
                        return Err(SpecFileError::DisorderedEntry {
                            line: line_no,
                            x: x.to_string(),
                            y: y.to_string(),
                        });
                    }
                }
                match section {
                    Section::Sym => {
                        let value = expr::parse_scalar(body.trim(), &raw.variables, &constants)
                            .map_err(|source| SpecFileError::Expr { line: line_no, source })?;
                        raw.sym.push(RawSymEntry {
                            x: x.to_string(),
                            y: y.to_string(),
                            value,
                        });
                    }
                    Section::Bracket => {
                        let value = parse_table_value(body.trim(), &raw, &constants, line_no)?;
                        let mut terms = Vec::new();
                        for (word, c) in value {
                            let [z] = word.as_slice() else {
                                return Err(err(line_no, "bracket values are sums of single ids"));
                            };
                            terms.push((z.clone(), c));
                        }
                        raw.bracket.push(RawBracketEntry {
                            x: x.to_string(),
                            y: y.to_string(),
                            value: terms,
                        });
                    }
                    Section::Pseudo => {
                        let value = parse_table_value(body.trim(), &raw, &constants, line_no)?;
                        let mut terms = Vec::new();
                        for (word, c) in value {
                            let [a, b] = word.as_slice() else {
                                return Err(err(line_no, "pseudobracket values are sums of id pairs `a.b`"));
                            };
                            terms.push(((a.clone(), b.clone()), c));
                        }
                        raw.pseudo.push(RawPseudoEntry {
                            x: x.to_string(),
                            y: y.to_string(),
                            value: terms,
                        });
                    }
                    _ => unreachable!(),
                }
            }
        }
    }
    Ok(raw)
}

/// Parse a table value against the declared basis ids, returning
/// (word-as-ids, coefficient) pairs.
fn parse_table_value(
    src: &str,
    raw: &RawTLieSpec,
    constants: &BTreeMap<String, LaurentScalar>,
    line: usize,
) -> Result<Vec<(Vec<String>, LaurentScalar)>, SpecFileError> {
    let resolve = |id: &str| {
        raw.basis
            .iter()
            .position(|b| b.id == id)
            .map(|i| crate::algebra::BasisId(i as u32))
    };
    let t = expr::parse_expression(
        src,
        &ExprContext {
            variables: &raw.variables,
            constants,
            resolve_basis: &resolve,
        },
    )
    .map_err(|source| SpecFileError::Expr { line, source })?;
    Ok(t.terms()
        .map(|(w, c)| {
            (
                w.letters()
                    .iter()
                    .map(|&x| raw.basis[x.index()].id.clone())
                    .collect(),
                c.clone(),
            )
        })
        .collect())
}

/// Canonical text for a raw description; `parse` inverts it exactly.
pub fn print(raw: &RawTLieSpec) -> String {
    let mut out = String::new();
    out.push_str("[meta]\n");
    out.push_str(&format!("name = {}\n", raw.name));
    if !raw.variables.is_empty() {
        out.push_str(&format!("variables = {}\n", raw.variables.join(", ")));
    }
    out.push_str("\n[basis]\n");
    for b in &raw.basis {
        match &b.display {
            Some(d) => out.push_str(&format!("{} {} {}\n", b.id, b.grade, d)),
            None => out.push_str(&format!("{} {}\n", b.id, b.grade)),
        }
    }
    let render = |s: &LaurentScalar| s.render(&raw.variables);
    if !raw.sym.is_empty() {
        out.push_str("\n[sym]\n");
        for e in &raw.sym {
            out.push_str(&format!("{} {} -> {}\n", e.x, e.y, render(&e.value)));
        }
    }
    if !raw.bracket.is_empty() {
        out.push_str("\n[bracket]\n");
        for e in &raw.bracket {
            let body = render_terms(
                e.value.iter().map(|(z, c)| (vec![z.clone()], c.clone())),
                &raw.variables,
            );
            out.push_str(&format!("{} {} -> {}\n", e.x, e.y, body));
        }
    }
    if !raw.pseudo.is_empty() {
        out.push_str("\n[pseudo]\n");
        for e in &raw.pseudo {
            let body = render_terms(
                e.value
                    .iter()
                    .map(|((a, b), c)| (vec![a.clone(), b.clone()], c.clone())),
                &raw.variables,
            );
            out.push_str(&format!("{} {} -> {}\n", e.x, e.y, body));
        }
    }
    out
}

fn render_terms(
    terms: impl Iterator<Item = (Vec<String>, LaurentScalar)>,
    vars: &[String],
) -> String {
    let mut out = String::new();
    for (i, (word, c)) in terms.enumerate() {
        let (neg, body) = if c.term_count() == 1 {
            let r = c.render(vars);
            match r.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, r),
            }
        } else {
            (false, format!("({})", c.render(vars)))
        };
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let w = word.join(".");
        if body == "1" {
            out.push_str(&w);
        } else {
            out.push_str(&format!("{body} * {w}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::TLieSpec;
    use crate::catalog;

    #[test]
    fn parses_a_hand_written_file() {
        let text = "\
# a 3-element deformation
[meta]
name = demo
variables = q

[basis]
e12 1
e13 2 e_{13}
e23 2

[sym]
e12 e13 -> q
e12 e23 -> q^-1
e13 e23 -> q

[bracket]
e12 e23 -> e13
";
        let raw = parse(text).unwrap();
        assert_eq!(raw.name, "demo");
        assert_eq!(raw.basis.len(), 3);
        assert_eq!(raw.basis[1].display.as_deref(), Some("e_{13}"));
        let spec = TLieSpec::build(&raw).unwrap();
        assert_eq!(spec.dim(), 3);
    }

    #[test]
    fn epsilon_constants_substitute() {
        let text = "\
[meta]
name = signs
variables = p, q
epsilon eps12 = -1

[basis]
a 1
b 2

[sym]
a b -> eps12 * p
";
        let raw = parse(text).unwrap();
        // `p` is the first declared variable in this file
        let p = LaurentScalar::var(0);
        assert_eq!(raw.sym[0].value, p.neg());
    }

    #[test]
    fn rejects_disordered_and_malformed() {
        let text = "[meta]\nname = x\n[basis]\na 1\nb 1\n[sym]\nb a -> 1\n";
        assert!(matches!(
            parse(text),
            Err(SpecFileError::DisorderedEntry { .. })
        ));
        assert!(parse("[bogus]\n").is_err());
        assert!(parse("stray\n").is_err());
    }

    #[test]
    fn dump_parse_round_trip_on_builtins() {
        for key in catalog::builtin_keys() {
            let spec = catalog::CatalogKey::parse(&key).unwrap().build().unwrap();
            let text = print(&spec.to_raw());
            let reparsed = parse(&text).unwrap_or_else(|e| panic!("{key}: {e}\n{text}"));
            let rebuilt = TLieSpec::build(&reparsed).unwrap();
            assert_eq!(
                spec.to_raw(),
                rebuilt.to_raw(),
                "tables must round-trip for {key}"
            );
        }
    }
}
