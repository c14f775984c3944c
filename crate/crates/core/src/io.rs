//! Line-oriented `.graph` text format.
//!
//! ```text
//! graph <n> <m>
//! v <id> <kind>[ <connector>][ <clause> <eps> <pos>]
//! e <u> <v>
//! ```
//!
//! The writer emits vertices by id and edges with `u < v` in ascending
//! order, so equal graphs serialize to identical bytes. The reader accepts
//! edges in any order and orientation, blank lines and `#` comments.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Connector, GraphBuilder, LabeledGraph, Provenance, VertexKind, VertexTag};

pub fn write_graph(g: &LabeledGraph) -> String {
    let mut out = String::with_capacity(16 * (g.n() + g.m()) + 16);
    writeln!(out, "graph {} {}", g.n(), g.m()).unwrap();
    for v in 0..g.n() {
        let t = g.tag(v);
        write!(out, "v {v} {}", t.kind).unwrap();
        if let Some(c) = t.connector {
            write!(out, " {c}").unwrap();
        }
        if let Some(p) = t.provenance {
            write!(out, " {} {} {}", p.clause, p.variant, p.position).unwrap();
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        writeln!(out, "e {u} {v}").unwrap();
    }
    out
}

fn parse_num<T: std::str::FromStr>(tok: &str, line: usize, what: &str) -> Result<T> {
    tok.parse()
        .map_err(|_| Error::parse(line, format!("expected {what}, found {tok:?}")))
}

fn parse_tag(toks: &[&str], line: usize) -> Result<VertexTag> {
    let (kind_tok, mut rest) = toks
        .split_first()
        .ok_or_else(|| Error::parse(line, "missing vertex kind"))?;
    let kind: VertexKind = kind_tok
        .parse()
        .map_err(|e: Error| Error::parse(line, e.to_string()))?;
    let mut tag = VertexTag::new(kind);
    if let Some(first) = rest.first() {
        if first.starts_with('t') {
            let c: Connector = first
                .parse()
                .map_err(|e: Error| Error::parse(line, e.to_string()))?;
            tag.connector = Some(c);
            rest = &rest[1..];
        }
    }
    match rest {
        [] => {}
        [clause, variant, position] => {
            let variant: u8 = parse_num(variant, line, "gadget variant")?;
            if variant > 1 {
                return Err(Error::parse(
                    line,
                    format!("gadget variant {variant} not in {{0,1}}"),
                ));
            }
            let position: u8 = parse_num(position, line, "gadget position")?;
            if position > 7 {
                return Err(Error::parse(
                    line,
                    format!("gadget position {position} not in 0..8"),
                ));
            }
            tag.provenance = Some(Provenance {
                clause: parse_num(clause, line, "clause index")?,
                variant,
                position,
            });
        }
        _ => {
            return Err(Error::parse(
                line,
                "malformed tag: expected <clause> <eps> <pos>",
            ))
        }
    }
    Ok(tag)
}

pub fn read_graph(text: &str) -> Result<LabeledGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let (hline, header) = lines.next().ok_or_else(|| Error::parse(1, "empty input"))?;
    let htoks: Vec<&str> = header.split_whitespace().collect();
    let (n, m) = match htoks.as_slice() {
        ["graph", n, m] => (
            parse_num::<usize>(n, hline, "vertex count")?,
            parse_num::<usize>(m, hline, "edge count")?,
        ),
        _ => return Err(Error::parse(hline, "expected header \"graph <n> <m>\"")),
    };

    let mut b = GraphBuilder::new();
    let mut edges_read = 0;
    let mut last_line = hline;
    for (line, body) in lines {
        last_line = line;
        let toks: Vec<&str> = body.split_whitespace().collect();
        match toks.as_slice() {
            ["v", id, tag @ ..] => {
                let id: usize = parse_num(id, line, "vertex id")?;
                if edges_read > 0 {
                    return Err(Error::parse(line, "vertex line after edge lines"));
                }
                if id != b.n() {
                    return Err(Error::parse(
                        line,
                        format!("expected vertex id {}, found {id}", b.n()),
                    ));
                }
                if id >= n {
                    return Err(Error::parse(
                        line,
                        format!("vertex {id} exceeds declared count {n}"),
                    ));
                }
                b.add_vertex(parse_tag(tag, line)?);
            }
            ["e", u, v] => {
                if b.n() != n {
                    return Err(Error::parse(
                        line,
                        format!("edge before all {n} vertices were declared"),
                    ));
                }
                let u: usize = parse_num(u, line, "vertex id")?;
                let v: usize = parse_num(v, line, "vertex id")?;
                match b.add_edge(u, v) {
                    Ok(true) => edges_read += 1,
                    Ok(false) => return Err(Error::parse(line, format!("duplicate edge {u} {v}"))),
                    Err(e) => return Err(Error::parse(line, e.to_string())),
                }
            }
            ["e", ..] => {
                return Err(Error::parse(
                    line,
                    "malformed edge line, expected \"e <u> <v>\"",
                ))
            }
            ["v", ..] => return Err(Error::parse(line, "malformed vertex line")),
            _ => return Err(Error::parse(line, format!("unrecognized line {body:?}"))),
        }
    }
    if b.n() != n {
        return Err(Error::parse(
            last_line,
            format!("declared {n} vertices, found {}", b.n()),
        ));
    }
    if edges_read != m {
        return Err(Error::parse(
            last_line,
            format!("declared {m} edges, found {edges_read}"),
        ));
    }
    b.finish()
        .map_err(|e| Error::parse(last_line, e.to_string()))
}
