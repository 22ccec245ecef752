use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use p3conn::harness::{
    check_theorem, random_gnp, random_triangle_free, verify_range, TheoremVerdict, VerifyOptions,
};
use p3conn::io::{emit_dot, emit_edge_list, emit_graph6};
use p3conn::{find_nonstable_homogeneous_set, p3_chain, p3_partition, Edge, Graph};
use serde_json::json;

use crate::input::{parse_edge, read_graph, read_graphs};
use crate::{Command, Format, GenArgs, GenKind, InputArgs, VerifyArgs, WORKERS_ENV};

const HOLDS: u8 = 0;
const FAILS: u8 = 1;

pub fn run(command: Command) -> Result<ExitCode> {
    let code = match command {
        Command::Check(args) => check(&args)?,
        Command::Classes(args) => classes(&args)?,
        Command::Chain { input, from, to } => chain(&input, &from, &to)?,
        Command::Module(args) => module(&args)?,
        Command::Verify(args) => verify(&args)?,
        Command::Gen(args) => generate(&args)?,
        Command::Export { input, plain } => export(&input, plain)?,
    };
    Ok(ExitCode::from(code))
}

fn verdict_json(label: Option<&str>, v: &TheoremVerdict) -> serde_json::Value {
    json!({
        "graph6": label,
        "p3_connected": v.direct && v.fast,
        "direct": v.direct,
        "fast": v.fast,
        "agree": v.agree,
        "connected": v.connected,
        "class_count": v.class_count,
        "witness": v.witness,
    })
}

fn verdict_text(v: &TheoremVerdict) -> String {
    let mut out = format!("P3-connected: {} (m={})", v.direct && v.fast, v.class_count);
    out.push_str(&format!("\n  direct: {}, fast: {}, connected: {}", v.direct, v.fast, v.connected));
    if let Some(w) = &v.witness {
        out.push_str(&format!("\n  witness: {} via edge {}", w.members, w.witness_edge));
    }
    if !v.agree {
        out.push_str("\n  DISAGREEMENT between the two checkers");
    }
    out
}

fn check(args: &InputArgs) -> Result<u8> {
    let graphs = read_graphs(&args.input, args.format)?;
    let batch = graphs.len() > 1;
    let mut all_hold = true;
    let mut reports = Vec::new();
    for (label, g) in &graphs {
        let v = check_theorem(g);
        if !v.agree {
            eprintln!(
                "internal disagreement on {}: direct={} fast={}",
                emit_graph6(g),
                v.direct,
                v.fast
            );
        }
        all_hold &= v.direct && v.fast;
        if args.json {
            reports.push(verdict_json(label.as_deref(), &v));
        } else if batch {
            println!("{} {}", label.as_deref().unwrap_or_default(), verdict_text(&v).replace("\n  ", "; "));
        } else {
            println!("{}", verdict_text(&v));
        }
    }
    if args.json {
        let value = if batch {
            serde_json::Value::Array(reports)
        } else {
            reports.pop().unwrap()
        };
        println!("{}", serde_json::to_string(&value)?);
    }
    Ok(if all_hold { HOLDS } else { FAILS })
}

fn classes(args: &InputArgs) -> Result<u8> {
    let g = read_graph(&args.input, args.format)?;
    let part = p3_partition(&g);
    if args.json {
        let classes: Vec<_> = part
            .classes()
            .map(|(id, edges)| json!({ "id": id, "edges": edges }))
            .collect();
        let value = json!({ "class_count": part.class_count(), "classes": classes });
        println!("{}", serde_json::to_string(&value)?);
    } else {
        println!("m={}", part.class_count());
        for (id, edges) in part.classes() {
            let list: Vec<String> = edges.iter().map(Edge::to_string).collect();
            println!("class {id} ({} edges): {}", edges.len(), list.join(" "));
        }
    }
    Ok(HOLDS)
}

fn chain(args: &InputArgs, from: &str, to: &str) -> Result<u8> {
    let g = read_graph(&args.input, args.format)?;
    let e = parse_edge(from, &g)?;
    let f = parse_edge(to, &g)?;
    let chain = p3_chain(&g, e, f)?;
    if args.json {
        println!("{}", serde_json::to_string(&json!({ "chain": chain }))?);
    } else {
        match &chain {
            Some(c) => {
                let steps: Vec<String> = c.edges().iter().map(Edge::to_string).collect();
                println!("{}", steps.join(" "));
            }
            None => println!("no chain: {e} and {f} lie in different classes"),
        }
    }
    Ok(if chain.is_some() { HOLDS } else { FAILS })
}

fn module(args: &InputArgs) -> Result<u8> {
    let g = read_graph(&args.input, args.format)?;
    let witness = find_nonstable_homogeneous_set(&g);
    if args.json {
        let value = json!({
            "module": witness.as_ref().map(|w| &w.members),
            "witness_edge": witness.as_ref().map(|w| w.witness_edge),
        });
        println!("{}", serde_json::to_string(&value)?);
    } else {
        match &witness {
            Some(w) => println!("module {} containing edge {}", w.members, w.witness_edge),
            None => println!("no non-stable homogeneous set"),
        }
    }
    Ok(HOLDS)
}

fn workers() -> Result<usize> {
    match std::env::var(WORKERS_ENV) {
        Ok(v) => {
            let n: usize = v
                .parse()
                .with_context(|| format!("{WORKERS_ENV}={v} is not a worker count"))?;
            if n == 0 {
                bail!("{WORKERS_ENV} must be at least 1");
            }
            Ok(n)
        }
        Err(_) => Ok(1),
    }
}

fn verify(args: &VerifyArgs) -> Result<u8> {
    let lo = args.n_min.unwrap_or(args.n);
    let options = VerifyOptions::orders(lo..=args.n)
        .connected_only(args.connected_only)
        .dedup(args.dedup);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers()?)
        .build()
        .context("building worker pool")?;
    let report = pool.install(|| verify_range(&options))?;
    if args.json {
        println!("{}", serde_json::to_string(&report)?);
    } else {
        println!("{report}");
    }
    Ok(if report.passed() { HOLDS } else { FAILS })
}

fn generate(args: &GenArgs) -> Result<u8> {
    let g = match args.kind {
        GenKind::Gnp => random_gnp(args.n, args.p, args.seed)?,
        GenKind::TriangleFree => random_triangle_free(args.n, args.p, args.seed)?,
    };
    print!("{}", render(&g, args.format, args.json)?);
    Ok(HOLDS)
}

fn render(g: &Graph, format: Format, json: bool) -> Result<String> {
    if json {
        let value = json!({ "n": g.n(), "edges": g.edges() });
        return Ok(serde_json::to_string(&value)? + "\n");
    }
    Ok(match format {
        Format::Graph6 => emit_graph6(g) + "\n",
        Format::Auto | Format::Edgelist => emit_edge_list(g),
    })
}

fn export(args: &InputArgs, plain: bool) -> Result<u8> {
    let g = read_graph(&args.input, args.format)?;
    let dot = if plain {
        emit_dot(&g, None)
    } else {
        let part = p3_partition(&g);
        emit_dot(&g, Some(&|idx| part.class_of_index(idx)))
    };
    print!("{dot}");
    Ok(HOLDS)
}
