//! The line-oriented algebra file format.
//!
//! ```text
//! # gl.dim 2 with an oriented cycle
//! field: Q
//! vertices: 1 2
//! arrows:
//!   alpha: 1 -> 2
//!   beta: 2 -> 1
//! relations:
//!   beta alpha
//! ```
//!
//! `field:` takes `Q` or `F p`. Instead of a `relations:` block, a line
//! `truncate: n` sets the ideal to all paths of length `n`. Indented lines
//! belong to the most recent block header; `#` starts a comment.

use super::algebra::{MonomialAlgebra, Relations};
use super::graph::Quiver;
use crate::error::{Error, Result};
use crate::linalg::Field;

#[derive(PartialEq)]
enum Block {
    None,
    Arrows,
    Relations,
}

fn syntax(line: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        message: message.into(),
    }
}

pub fn parse_algebra(text: &str) -> Result<MonomialAlgebra> {
    let mut field: Option<Field> = None;
    let mut vertices: Option<Vec<String>> = None;
    let mut arrows: Vec<(String, String, String)> = Vec::new();
    let mut relations: Vec<(usize, Vec<String>)> = Vec::new();
    let mut truncate: Option<usize> = None;
    let mut saw_relations = false;
    let mut block = Block::None;

    for (k, raw) in text.lines().enumerate() {
        let line_no = k + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indented = line.starts_with(' ') || line.starts_with('\t');
        let line = line.trim();
        if indented && block != Block::None {
            match block {
                Block::Arrows => arrows.push(parse_arrow(line, line_no)?),
                Block::Relations => relations.push((
                    line_no,
                    line.split_whitespace().map(str::to_string).collect(),
                )),
                Block::None => unreachable!(),
            }
            continue;
        }
        let (key, value) = line
            .split_once(':')
            .ok_or_else(|| syntax(line_no, format!("expected `key: value`, found `{line}`")))?;
        let value = value.trim();
        block = Block::None;
        match key.trim() {
            "field" => field = Some(parse_field(value, line_no)?),
            "vertices" => {
                let vs: Vec<String> = value.split_whitespace().map(str::to_string).collect();
                if vs.is_empty() {
                    return Err(syntax(line_no, "no vertices declared"));
                }
                vertices = Some(vs);
            }
            "arrows" => {
                if !value.is_empty() {
                    return Err(syntax(line_no, "arrow declarations go on indented lines"));
                }
                block = Block::Arrows;
            }
            "relations" => {
                if !value.is_empty() {
                    return Err(syntax(line_no, "relations go on indented lines"));
                }
                saw_relations = true;
                block = Block::Relations;
            }
            "truncate" => {
                let n: usize = value
                    .parse()
                    .map_err(|_| syntax(line_no, format!("bad truncation index `{value}`")))?;
                truncate = Some(n);
            }
            other => return Err(syntax(line_no, format!("unknown key `{other}`"))),
        }
    }

    let field = field.unwrap_or(Field::Rational);
    let vertices = vertices.ok_or_else(|| syntax(0, "missing `vertices:` line"))?;
    let quiver = Quiver::new(&vertices, &arrows)?;
    match truncate {
        Some(_) if saw_relations => Err(syntax(
            0,
            "use either `relations:` or `truncate:`, not both",
        )),
        Some(n) => MonomialAlgebra::truncated(quiver, n, field),
        None => {
            let mut paths = Vec::new();
            for (line_no, names) in relations {
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                let path = quiver.path_from_names(&refs).map_err(|e| match e {
                    Error::NotComposable(m) => {
                        syntax(line_no, format!("relation does not compose: {m}"))
                    }
                    other => other,
                })?;
                paths.push(path);
            }
            MonomialAlgebra::new(quiver, paths, field)
        }
    }
}

fn parse_field(value: &str, line: usize) -> Result<Field> {
    let parts: Vec<&str> = value.split_whitespace().collect();
    match parts.as_slice() {
        ["Q"] => Ok(Field::Rational),
        ["F", p] => {
            let p: u64 = p
                .parse()
                .map_err(|_| syntax(line, format!("bad characteristic `{p}`")))?;
            Field::from_characteristic(p).map_err(|e| syntax(line, e.to_string()))
        }
        _ => Err(syntax(
            line,
            format!("field must be `Q` or `F p`, found `{value}`"),
        )),
    }
}

fn parse_arrow(line: &str, line_no: usize) -> Result<(String, String, String)> {
    let err = || {
        syntax(
            line_no,
            format!("expected `name: source -> target`, found `{line}`"),
        )
    };
    let (name, ends) = line.split_once(':').ok_or_else(err)?;
    let (s, t) = ends.split_once("->").ok_or_else(err)?;
    let (name, s, t) = (name.trim(), s.trim(), t.trim());
    if name.is_empty() || s.is_empty() || t.is_empty() || name.contains(char::is_whitespace) {
        return Err(err());
    }
    Ok((name.to_string(), s.to_string(), t.to_string()))
}

/// Writes an algebra back in the file format.
pub fn write_algebra(a: &MonomialAlgebra) -> String {
    let q = a.quiver();
    let mut out = String::new();
    out.push_str(&match a.field() {
        Field::Rational => "field: Q\n".to_string(),
        Field::Prime(p) => format!("field: F {p}\n"),
    });
    out.push_str(&format!("vertices: {}\n", q.vertex_names().join(" ")));
    out.push_str("arrows:\n");
    for arrow in q.arrows() {
        out.push_str(&format!(
            "  {}: {} -> {}\n",
            arrow.name,
            q.vertex_name(arrow.source),
            q.vertex_name(arrow.target)
        ));
    }
    match a.relations() {
        Relations::Truncated(n) => out.push_str(&format!("truncate: {n}\n")),
        Relations::Paths(rels) => {
            out.push_str("relations:\n");
            for r in rels {
                out.push_str(&format!("  {}\n", q.format_path(r)));
            }
        }
    }
    out
}

/// Name-independent description: vertex and arrow indices only, relations
/// sorted. Two files differing only by renaming give the same string.
pub fn canonical_form(a: &MonomialAlgebra) -> String {
    let q = a.quiver();
    let arrows: Vec<String> = q
        .arrows()
        .iter()
        .map(|x| format!("{}>{}", x.source, x.target))
        .collect();
    let rels = match a.relations() {
        Relations::Truncated(n) => format!("T{n}"),
        Relations::Paths(rs) => rs
            .iter()
            .map(|r| {
                r.arrows()
                    .iter()
                    .map(usize::to_string)
                    .collect::<Vec<_>>()
                    .join(".")
            })
            .collect::<Vec<_>>()
            .join(","),
    };
    format!(
        "v1;char={};V={};A={};R={}",
        a.field().characteristic(),
        q.vertex_count(),
        arrows.join(","),
        rels
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const REMARK2: &str = "\
# gl.dim 2 but the quiver has a cycle
field: Q
vertices: 1 2
arrows:
  alpha: 1 -> 2
  beta: 2 -> 1   # back arrow
relations:
  beta alpha
";

    #[test]
    fn parses_cycle2_gldim2() {
        let a = parse_algebra(REMARK2).unwrap();
        assert_eq!(a.dim(), 5);
        assert_eq!(a.quiver().arrow_count(), 2);
    }

    #[test]
    fn parses_truncation() {
        let a = parse_algebra("vertices: v\narrows:\n  x: v -> v\ntruncate: 2\n").unwrap();
        assert_eq!(a.dim(), 2);
        assert_eq!(a.max_length(), 1);
        assert_eq!(a.field(), Field::Rational);
    }

    #[test]
    fn prime_field() {
        let a =
            parse_algebra("field: F 2\nvertices: v\narrows:\n  x: v -> v\ntruncate: 3\n").unwrap();
        assert_eq!(a.field(), Field::Prime(2));
        assert!(parse_algebra("field: F 6\nvertices: v\ntruncate: 2\n").is_err());
    }

    #[test]
    fn error_paths() {
        let short = "vertices: 1 2\narrows:\n  alpha: 1 -> 2\nrelations:\n  alpha\n";
        assert!(matches!(parse_algebra(short), Err(Error::ShortRelation(_))));
        let dangling = "vertices: 1\narrows:\n  a: 1 -> 3\ntruncate: 2\n";
        assert!(matches!(
            parse_algebra(dangling),
            Err(Error::UnknownVertex(_))
        ));
        let unknown_arrow = "vertices: 1\narrows:\n  a: 1 -> 1\nrelations:\n  a b\n";
        assert!(matches!(
            parse_algebra(unknown_arrow),
            Err(Error::UnknownArrow(_))
        ));
        let infinite = "vertices: 1\narrows:\n  a: 1 -> 1\n";
        assert!(matches!(
            parse_algebra(infinite),
            Err(Error::InfiniteDimensional { .. })
        ));
        assert!(matches!(
            parse_algebra("nonsense\n"),
            Err(Error::Syntax { line: 1, .. })
        ));
        let not_composable = "vertices: 1 2\narrows:\n  a: 1 -> 2\nrelations:\n  a a\n";
        assert!(matches!(
            parse_algebra(not_composable),
            Err(Error::Syntax { line: 5, .. })
        ));
    }

    #[test]
    fn write_then_parse() {
        let a = parse_algebra(REMARK2).unwrap();
        let b = parse_algebra(&write_algebra(&a)).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }

    #[test]
    fn canonical_form_ignores_names() {
        let renamed = REMARK2
            .replace("alpha", "p")
            .replace("beta", "q")
            .replace(" 1", " a")
            .replace(" 2", " b");
        let a = parse_algebra(REMARK2).unwrap();
        let b = parse_algebra(&renamed).unwrap();
        assert_eq!(canonical_form(&a), canonical_form(&b));
    }
}
