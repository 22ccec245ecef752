use std::io::Read;

use anyhow::{bail, Context, Result};
use p3conn::io::{looks_like_edge_list, parse_edge_list, parse_graph6};
use p3conn::{Edge, Graph};

use crate::Format;

pub fn read_text(path: &str) -> Result<String> {
    if path == "-" {
        let mut text = String::new();
        std::io::stdin()
            .read_to_string(&mut text)
            .context("reading stdin")?;
        Ok(text)
    } else {
        std::fs::read_to_string(path).with_context(|| format!("reading {path}"))
    }
}

fn resolve(format: Format, text: &str) -> Format {
    match format {
        Format::Auto if looks_like_edge_list(text) => Format::Edgelist,
        Format::Auto => Format::Graph6,
        other => other,
    }
}

/// All graphs in the input: one for an edge list, one per non-empty line for graph6.
pub fn read_graphs(path: &str, format: Format) -> Result<Vec<(Option<String>, Graph)>> {
    let text = read_text(path)?;
    match resolve(format, &text) {
        Format::Edgelist => Ok(vec![(None, parse_edge_list(&text)?)]),
        _ => {
            let mut out = Vec::new();
            for (i, line) in text.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() {
                    continue;
                }
                let g = parse_graph6(line).with_context(|| format!("line {}", i + 1))?;
                out.push((Some(line.to_string()), g));
            }
            if out.is_empty() {
                bail!("no graph in input");
            }
            Ok(out)
        }
    }
}

pub fn read_graph(path: &str, format: Format) -> Result<Graph> {
    let mut graphs = read_graphs(path, format)?;
    if graphs.len() != 1 {
        bail!("expected one graph, found {}", graphs.len());
    }
    Ok(graphs.pop().unwrap().1)
}

/// Parses a `u-v` edge token and checks it belongs to `g`.
pub fn parse_edge(token: &str, g: &Graph) -> Result<Edge> {
    let (a, b) = token
        .split_once('-')
        .with_context(|| format!("edge `{token}` is not of the form u-v"))?;
    let a: usize = a.trim().parse().with_context(|| format!("bad vertex in `{token}`"))?;
    let b: usize = b.trim().parse().with_context(|| format!("bad vertex in `{token}`"))?;
    let e = Edge::try_new(a, b)?;
    g.require_edge(e)?;
    Ok(e)
}
