//! Text formats: the `n m` edge list, graph6, and DOT output.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Parses the edge-list format: a header line `n m` followed by exactly `m`
/// lines `u v` (0-based). Blank lines and lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let [n, m] = parse_pair(header_line, header)?;

    let mut edges: Vec<Edge> = Vec::with_capacity(m);
    let mut seen = HashSet::with_capacity(m);
    for (line, body) in lines {
        if edges.len() == m {
            return Err(Error::Parse {
                line,
                message: format!("more than the {m} declared edges"),
            });
        }
        let [u, v] = parse_pair(line, body)?;
        for x in [u, v] {
            if x >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex {x} out of range for n={n}"),
                });
            }
        }
        let e = Edge::try_new(u, v).map_err(|_| Error::Parse {
            line,
            message: format!("self-loop on vertex {u}"),
        })?;
        if !seen.insert(e) {
            return Err(Error::Parse {
                line,
                message: format!("duplicate edge {e}"),
            });
        }
        edges.push(e);
    }
    if edges.len() < m {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {m} edges, found {}", edges.len()),
        });
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn parse_pair(line: usize, body: &str) -> Result<[usize; 2]> {
    let tokens: Vec<&str> = body.split_whitespace().collect();
    if tokens.len() != 2 {
        return Err(Error::Parse {
            line,
            message: format!("expected two integers, found {} tokens", tokens.len()),
        });
    }
    let mut out = [0; 2];
    for (slot, tok) in out.iter_mut().zip(&tokens) {
        *slot = tok.parse().map_err(|_| Error::Parse {
            line,
            message: format!("malformed integer `{tok}`"),
        })?;
    }
    Ok(out)
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.n(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.u(), e.v());
    }
    out
}

const GRAPH6_HEADER: &str = ">>graph6<<";

/// Largest order representable in graph6 (`2^36 - 1`).
const GRAPH6_MAX_N: u64 = (1 << 36) - 1;

/// Decodes one graph6 string. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let trimmed = text.trim();
    let offset = text.len() - text.trim_start().len();
    let (body, offset) = match trimmed.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest, offset + GRAPH6_HEADER.len()),
        None => (trimmed, offset),
    };
    let bytes = body.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            byte: offset,
            message: "empty input".into(),
        });
    }
    let mut values = Vec::with_capacity(bytes.len());
    for (i, &b) in bytes.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6 {
                byte: offset + i,
                message: format!("character {:?} outside 63..=126", b as char),
            });
        }
        values.push(u64::from(b - 63));
    }

    let truncated = |at: usize| Error::Graph6 {
        byte: offset + at,
        message: "truncated size field".into(),
    };
    let (n, header_len) = if values[0] < 63 {
        (values[0], 1)
    } else if values.get(1) != Some(&63) {
        let chunk = values.get(1..4).ok_or_else(|| truncated(values.len()))?;
        (fold_six(chunk), 4)
    } else {
        let chunk = values.get(2..8).ok_or_else(|| truncated(values.len()))?;
        (fold_six(chunk), 8)
    };
    let n = n as usize;

    let bits = n * n.saturating_sub(1) / 2;
    let needed = bits.div_ceil(6);
    let payload = &values[header_len..];
    if payload.len() < needed {
        return Err(Error::Graph6 {
            byte: offset + bytes.len(),
            message: format!("truncated payload: need {needed} bytes, found {}", payload.len()),
        });
    }
    if payload.len() > needed {
        return Err(Error::Graph6 {
            byte: offset + header_len + needed,
            message: "trailing bytes after payload".into(),
        });
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if payload[k / 6] >> (5 - k % 6) & 1 == 1 {
                edges.push(Edge::new(u, v));
            }
            k += 1;
        }
    }
    edges.sort_unstable();
    Ok(Graph::from_sorted_edges(n, edges))
}

fn fold_six(chunk: &[u64]) -> u64 {
    chunk.iter().fold(0, |acc, &c| acc << 6 | c)
}

/// Encodes `g` as graph6 (no header, no trailing newline).
pub fn emit_graph6(g: &Graph) -> String {
    let n = g.n() as u64;
    assert!(n <= GRAPH6_MAX_N, "graph too large for graph6");
    let mut out: Vec<u8> = Vec::new();
    if n < 63 {
        out.push(n as u8);
    } else if n < 1 << 18 {
        out.push(63);
        out.extend((0..3).rev().map(|i| (n >> (6 * i) & 63) as u8));
    } else {
        out.extend([63, 63]);
        out.extend((0..6).rev().map(|i| (n >> (6 * i) & 63) as u8));
    }
    let mut chunk = 0u8;
    let mut filled = 0;
    for v in 1..g.n() {
        for u in 0..v {
            chunk = chunk << 1 | u8::from(g.adjacent(u, v));
            filled += 1;
            if filled == 6 {
                out.push(chunk);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(chunk << (6 - filled));
    }
    out.into_iter().map(|b| char::from(b + 63)).collect()
}

/// Guesses the format: a first meaningful line of two integers is an edge
/// list, anything else is graph6.
pub fn looks_like_edge_list(text: &str) -> bool {
    text.lines()
        .map(str::trim)
        .find(|l| !l.is_empty() && !l.starts_with('#'))
        .is_some_and(|l| {
            let toks: Vec<&str> = l.split_whitespace().collect();
            toks.len() == 2 && toks.iter().all(|t| t.parse::<usize>().is_ok())
        })
}

const PALETTE: [&str; 10] = [
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f",
    "#bcbd22", "#17becf",
];

/// Emits an undirected DOT graph. When `class_of` is given it maps each edge
/// index to a class id; edges are then coloured and labelled by class.
pub fn emit_dot(g: &Graph, class_of: Option<&dyn Fn(usize) -> usize>) -> String {
    let mut out = String::from("graph {\n");
    for v in g.vertices() {
        let _ = writeln!(out, "  {v};");
    }
    let mut palette_slot = std::collections::BTreeMap::new();
    for (idx, e) in g.edges().iter().enumerate() {
        match class_of {
            Some(class_of) => {
                let class = class_of(idx);
                let next = palette_slot.len();
                let slot = *palette_slot.entry(class).or_insert(next);
                let _ = writeln!(
                    out,
                    "  {} -- {} [color=\"{}\", label=\"{}\"];",
                    e.u(),
                    e.v(),
                    PALETTE[slot % PALETTE.len()],
                    class
                );
            }
            None => {
                let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
            }
        }
    }
    out.push_str("}\n");
    out
}
