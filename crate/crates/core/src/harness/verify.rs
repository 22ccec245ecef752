//! Exhaustive verification over all graphs of given orders.

use std::fmt;
use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::harness::enumerate::{graph_from_mask, graphs_up_to_iso, labelled_count, MAX_ORDER};
use crate::harness::verdict::check_theorem;
use crate::io::emit_graph6;
use crate::p3::p3_partition;
use crate::par::{map_reduce, map_reduce_slice, Execution};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyOptions {
    pub orders: RangeInclusive<usize>,
    pub connected_only: bool,
    /// Scan one representative per isomorphism class instead of every labelling.
    pub dedup: bool,
    pub execution: Execution,
}

impl VerifyOptions {
    /// Every order from 1 through `n_max`.
    pub fn up_to(n_max: usize) -> Self {
        Self::orders(1..=n_max)
    }

    /// Exactly order `n`.
    pub fn order(n: usize) -> Self {
        Self::orders(n..=n)
    }

    pub fn orders(orders: RangeInclusive<usize>) -> Self {
        VerifyOptions {
            orders,
            connected_only: false,
            dedup: false,
            execution: Execution::default(),
        }
    }

    pub fn connected_only(mut self, yes: bool) -> Self {
        self.connected_only = yes;
        self
    }

    pub fn dedup(mut self, yes: bool) -> Self {
        self.dedup = yes;
        self
    }

    pub fn execution(mut self, execution: Execution) -> Self {
        self.execution = execution;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// The two decisions differ.
    Disagreement,
    /// P3-connected by definition but disconnected or carrying a witness.
    ForwardDirection,
    /// Connected and triangle-free but not P3-connected.
    TriangleFree,
    /// No connected homogeneous set, yet some class misses a vertex.
    SpanningClass,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Failure {
    pub graph6: String,
    pub kind: FailureKind,
}

/// Counts for one order.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderStats {
    pub n: usize,
    pub scanned: u64,
    pub connected: u64,
    pub p3_connected: u64,
    pub disagreements: u64,
    pub triangle_free_connected: u64,
    /// Connected graphs without a connected homogeneous set.
    pub spanning_premise: u64,
}

impl OrderStats {
    fn merge(mut self, other: Self) -> Self {
        self.scanned += other.scanned;
        self.connected += other.connected;
        self.p3_connected += other.p3_connected;
        self.disagreements += other.disagreements;
        self.triangle_free_connected += other.triangle_free_connected;
        self.spanning_premise += other.spanning_premise;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub connected_only: bool,
    pub dedup: bool,
    pub per_order: Vec<OrderStats>,
    /// Sorted by graph6 string, then kind.
    pub failures: Vec<Failure>,
}

impl VerifyReport {
    pub fn scanned(&self) -> u64 {
        self.per_order.iter().map(|s| s.scanned).sum()
    }

    pub fn p3_connected(&self) -> u64 {
        self.per_order.iter().map(|s| s.p3_connected).sum()
    }

    pub fn disagreements(&self) -> u64 {
        self.per_order.iter().map(|s| s.disagreements).sum()
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let what = match (self.connected_only, self.dedup) {
            (true, false) => "connected labeled graphs",
            (false, false) => "labeled graphs",
            (true, true) => "connected graphs up to isomorphism",
            (false, true) => "graphs up to isomorphism",
        };
        writeln!(
            f,
            "scanned {} {what}, {} disagreements",
            self.scanned(),
            self.disagreements()
        )?;
        for s in &self.per_order {
            writeln!(
                f,
                "  n={}: scanned {}, connected {}, P3-connected {}, triangle-free connected {}, spanning premise {}",
                s.n, s.scanned, s.connected, s.p3_connected, s.triangle_free_connected, s.spanning_premise
            )?;
        }
        for failure in &self.failures {
            writeln!(f, "  FAIL {:?}: {}", failure.kind, failure.graph6)?;
        }
        write!(f, "{}", if self.passed() { "OK" } else { "FAILED" })
    }
}

#[derive(Default)]
struct Tally {
    stats: OrderStats,
    failures: Vec<Failure>,
}

impl Tally {
    fn merge(mut self, other: Tally) -> Tally {
        self.stats = self.stats.merge(other.stats);
        self.failures.extend(other.failures);
        self
    }

    fn record(&mut self, g: &Graph, connected_only: bool) {
        let connected = g.is_connected();
        if connected_only && !connected {
            return;
        }
        self.stats.scanned += 1;
        let verdict = check_theorem(g);
        let mut fail = |kind| {
            self.failures.push(Failure {
                graph6: emit_graph6(g),
                kind,
            })
        };
        if !verdict.agree {
            self.stats.disagreements += 1;
            fail(FailureKind::Disagreement);
        }
        if verdict.direct && !(connected && verdict.witness.is_none()) {
            fail(FailureKind::ForwardDirection);
        }
        if !connected {
            return;
        }
        self.stats.connected += 1;
        if verdict.direct {
            self.stats.p3_connected += 1;
        }
        if g.is_triangle_free() {
            self.stats.triangle_free_connected += 1;
            if !verdict.direct {
                fail(FailureKind::TriangleFree);
            }
        }
        if !has_connected_homogeneous_set(g) {
            self.stats.spanning_premise += 1;
            let partition = p3_partition(g);
            let all = g.all_vertices();
            if partition.class_ids().any(|id| partition.covered_vertices(id) != all) {
                fail(FailureKind::SpanningClass);
            }
        }
    }
}

/// Brute force over all vertex subsets; only for `n <= 8`.
pub fn has_connected_homogeneous_set(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= MAX_ORDER, "subset scan is limited to small graphs");
    let adj: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbours_of(v).fold(0u32, |m, w| m | 1 << w))
        .collect();
    let full = (1u32 << n) - 1;
    (1..full).any(|set| {
        let size = set.count_ones() as usize;
        if size < 2 {
            return false;
        }
        let homogeneous = (0..n).filter(|&y| set >> y & 1 == 0).all(|y| {
            let seen = adj[y] & set;
            seen == 0 || seen == set
        });
        homogeneous && induces_connected(&adj, set)
    })
}

fn induces_connected(adj: &[u32], set: u32) -> bool {
    let start = set & set.wrapping_neg();
    let mut reached = start;
    let mut frontier = start;
    while frontier != 0 {
        let v = frontier.trailing_zeros() as usize;
        frontier &= frontier - 1;
        let fresh = adj[v] & set & !reached;
        reached |= fresh;
        frontier |= fresh;
    }
    reached == set
}

/// Checks every graph of the requested orders: agreement of both decisions,
/// the forward direction, triangle-free graphs, and spanning classes.
pub fn verify_range(options: &VerifyOptions) -> Result<VerifyReport> {
    let (lo, hi) = (*options.orders.start(), *options.orders.end());
    if lo < 1 || hi > MAX_ORDER || lo > hi {
        return Err(Error::OrderOutOfRange {
            n: if lo < 1 { lo } else { hi },
            min: 1,
            max: MAX_ORDER,
        });
    }
    let connected_only = options.connected_only;
    let mut per_order = Vec::new();
    let mut failures = Vec::new();
    for n in options.orders.clone() {
        let tally = if options.dedup {
            let reps = graphs_up_to_iso(n, connected_only)?;
            map_reduce_slice(
                options.execution,
                &reps,
                Tally::default,
                |t, g| t.record(g, connected_only),
                Tally::merge,
            )
        } else {
            map_reduce(
                options.execution,
                labelled_count(n),
                Tally::default,
                |t, mask| t.record(&graph_from_mask(n, mask), connected_only),
                Tally::merge,
            )
        };
        per_order.push(OrderStats { n, ..tally.stats });
        failures.extend(tally.failures);
    }
    failures.sort();
    Ok(VerifyReport {
        connected_only,
        dedup: options.dedup,
        per_order,
        failures,
    })
}
