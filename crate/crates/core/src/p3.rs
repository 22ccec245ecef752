//! Edge classes under the induced-P3 relation.
//!
//! Two edges are related when they are the two edges of an induced path on
//! three vertices. The reflexive-transitive closure of that relation splits
//! `E(G)` into classes; a graph is P3-connected when it is connected and has
//! at most one class.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::union_find::UnionFind;

/// True iff `e != f`, the edges share exactly one endpoint and their other
/// endpoints are non-adjacent.
pub fn induced_p3_related(g: &Graph, e: Edge, f: Edge) -> Result<bool> {
    g.require_edge(e)?;
    g.require_edge(f)?;
    Ok(related_unchecked(g, e, f))
}

#[inline]
fn related_unchecked(g: &Graph, e: Edge, f: Edge) -> bool {
    match e.shared_endpoint(f) {
        Some(mid) => {
            let a = e.other(mid).unwrap();
            let b = f.other(mid).unwrap();
            !g.adjacent(a, b)
        }
        None => false,
    }
}

/// Partition of the edge set into maximal P3-connected classes.
///
/// A class is identified by the index (in [`Graph::edges`]) of its
/// lexicographically smallest edge, so partitions of the same graph compare
/// equal regardless of how they were computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct P3Partition {
    edges: Vec<Edge>,
    class_of: Vec<usize>,
    classes: Vec<Vec<usize>>,
}

impl P3Partition {
    /// Builds a partition from a per-edge representative labelling. Any
    /// labelling that is constant exactly on classes is accepted.
    pub fn from_labels(g: &Graph, labels: &[usize]) -> Self {
        assert_eq!(labels.len(), g.edge_count());
        let mut anchor = std::collections::HashMap::new();
        let mut class_of = Vec::with_capacity(labels.len());
        for (idx, &label) in labels.iter().enumerate() {
            // Edges are scanned in order, so the first edge seen anchors its class.
            class_of.push(*anchor.entry(label).or_insert(idx));
        }
        let mut classes: Vec<Vec<usize>> = Vec::new();
        let mut slot = vec![usize::MAX; labels.len()];
        for (idx, &id) in class_of.iter().enumerate() {
            if slot[id] == usize::MAX {
                slot[id] = classes.len();
                classes.push(Vec::new());
            }
            classes[slot[id]].push(idx);
        }
        P3Partition {
            edges: g.edges().to_vec(),
            class_of,
            classes,
        }
    }

    /// Number of classes (`m`).
    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// Class id of the edge at `edge_index`.
    pub fn class_of_index(&self, edge_index: usize) -> usize {
        self.class_of[edge_index]
    }

    pub fn class_of(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok().map(|i| self.class_of[i])
    }

    /// Per-edge class ids, aligned with [`Graph::edges`].
    pub fn labels(&self) -> &[usize] {
        &self.class_of
    }

    /// Class ids in increasing order.
    pub fn class_ids(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().map(|c| c[0])
    }

    /// Edges of each class, classes ordered by id, edges in lexicographic order.
    pub fn classes(&self) -> impl Iterator<Item = (usize, Vec<Edge>)> + '_ {
        self.classes
            .iter()
            .map(|c| (c[0], c.iter().map(|&i| self.edges[i]).collect()))
    }

    pub fn class_edges(&self, id: usize) -> Vec<Edge> {
        self.classes
            .iter()
            .find(|c| c[0] == id)
            .map(|c| c.iter().map(|&i| self.edges[i]).collect())
            .unwrap_or_default()
    }

    /// Vertices touched by the edges of class `id`.
    pub fn covered_vertices(&self, id: usize) -> VertexSet {
        self.class_edges(id)
            .into_iter()
            .flat_map(|e| [e.u(), e.v()])
            .collect()
    }
}

/// Computes the P3 classes by merging, at every vertex, each pair of incident
/// edges whose far endpoints are non-adjacent. Work is `O(Σ deg(v)²)`.
pub fn p3_partition(g: &Graph) -> P3Partition {
    let mut uf = UnionFind::new(g.edge_count());
    for mid in g.vertices() {
        let inc = g.incident(mid);
        for (i, &(a, ea)) in inc.iter().enumerate() {
            for &(b, eb) in &inc[i + 1..] {
                if !g.adjacent(a, b) {
                    uf.union(ea, eb);
                }
            }
        }
    }
    let labels: Vec<usize> = (0..g.edge_count()).map(|i| uf.find(i)).collect();
    P3Partition::from_labels(g, &labels)
}

/// A sequence of edges where each consecutive pair forms an induced P3.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct P3Chain {
    edges: Vec<Edge>,
}

impl P3Chain {
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    /// Number of steps `k` (one less than the number of edges).
    pub fn steps(&self) -> usize {
        self.edges.len().saturating_sub(1)
    }

    /// Re-checks every step against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if self.edges.is_empty() {
            return Err(Error::ClaimViolated("empty chain".into()));
        }
        for &e in &self.edges {
            g.require_edge(e)?;
        }
        for w in self.edges.windows(2) {
            if !related_unchecked(g, w[0], w[1]) {
                return Err(Error::ClaimViolated(format!(
                    "{} and {} do not form an induced P3",
                    w[0], w[1]
                )));
            }
        }
        Ok(())
    }
}

/// Shortest chain from `e` to `f`, or `None` when they lie in different classes.
///
/// The search is breadth-first with neighbours visited in lexicographic
/// order, so equal-length ties always resolve the same way.
pub fn p3_chain(g: &Graph, e: Edge, f: Edge) -> Result<Option<P3Chain>> {
    let start = g.require_edge(e)?;
    let goal = g.require_edge(f)?;
    if start == goal {
        return Ok(Some(P3Chain { edges: vec![e] }));
    }
    let edges = g.edges();
    let mut parent = vec![usize::MAX; edges.len()];
    parent[start] = start;
    let mut queue = VecDeque::from([start]);
    let mut next = Vec::new();
    while let Some(cur) = queue.pop_front() {
        next.clear();
        let (a, b) = edges[cur].endpoints();
        for (mid, far) in [(a, b), (b, a)] {
            for &(w, idx) in g.incident(mid) {
                if w != far && !g.adjacent(w, far) {
                    next.push(idx);
                }
            }
        }
        next.sort_unstable();
        for &idx in &next {
            if parent[idx] != usize::MAX {
                continue;
            }
            parent[idx] = cur;
            if idx == goal {
                let mut path = vec![edges[goal]];
                let mut at = goal;
                while at != start {
                    at = parent[at];
                    path.push(edges[at]);
                }
                path.reverse();
                return Ok(Some(P3Chain { edges: path }));
            }
            queue.push_back(idx);
        }
    }
    Ok(None)
}

/// Definition-based decision: connected and at most one P3 class.
///
/// Under this convention `K1` and `K2` are P3-connected while an edgeless
/// graph on two or more vertices is not.
pub fn is_p3_connected(g: &Graph) -> bool {
    g.is_connected() && p3_partition(g).class_count() <= 1
}

/// True iff every edge of `h` lies in a single P3 class of `g`.
pub fn edge_set_p3_connected_in(g: &Graph, h: &[Edge]) -> Result<bool> {
    for &e in h {
        g.require_edge(e)?;
    }
    if h.len() <= 1 {
        return Ok(true);
    }
    let part = p3_partition(g);
    let first = part.class_of(h[0]);
    Ok(h.iter().all(|&e| part.class_of(e) == first))
}

/// Vertices of `g` incident to at least one edge at `x` in class `id`.
pub(crate) fn class_neighbourhood(
    g: &Graph,
    part: &P3Partition,
    x: Vertex,
    id: usize,
) -> VertexSet {
    g.incident(x)
        .iter()
        .filter(|&&(_, idx)| part.class_of_index(idx) == id)
        .map(|&(w, _)| w)
        .collect()
}
