//! Simple undirected graphs on dense vertex ids and the set-level predicates
//! used throughout the toolkit (complete / anti-complete, anti-components,
//! neighbourhoods).

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Vertex = usize;

/// An undirected edge stored canonically with `u < v`.
///
/// Ordering is lexicographic on `(u, v)`, which fixes the iteration order of
/// every edge list in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "[Vertex; 2]", try_from = "[Vertex; 2]")]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Builds the canonical edge on `{a, b}`.
    ///
    /// Panics if `a == b`; use [`Edge::try_new`] for unchecked input.
    pub fn new(a: Vertex, b: Vertex) -> Self {
        Self::try_new(a, b).expect("an edge needs two distinct endpoints")
    }

    pub fn try_new(a: Vertex, b: Vertex) -> Result<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Ok(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Ok(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => Err(Error::SelfLoop(a)),
        }
    }

    #[inline]
    pub fn u(self) -> Vertex {
        self.u
    }

    #[inline]
    pub fn v(self) -> Vertex {
        self.v
    }

    #[inline]
    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    #[inline]
    pub fn has_endpoint(self, x: Vertex) -> bool {
        self.u == x || self.v == x
    }

    /// The endpoint that is not `x`, if `x` is an endpoint.
    pub fn other(self, x: Vertex) -> Option<Vertex> {
        if x == self.u {
            Some(self.v)
        } else if x == self.v {
            Some(self.u)
        } else {
            None
        }
    }

    /// The unique shared endpoint, if the two edges share exactly one.
    pub fn shared_endpoint(self, other: Edge) -> Option<Vertex> {
        if self == other {
            return None;
        }
        [self.u, self.v].into_iter().find(|&x| other.has_endpoint(x))
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

impl From<Edge> for [Vertex; 2] {
    fn from(e: Edge) -> Self {
        [e.u, e.v]
    }
}

impl TryFrom<[Vertex; 2]> for Edge {
    type Error = Error;

    fn try_from([a, b]: [Vertex; 2]) -> Result<Self> {
        Edge::try_new(a, b)
    }
}

/// A set of vertex ids, kept sorted and duplicate-free.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet {
    members: Vec<Vertex>,
}

impl VertexSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.members.iter().copied()
    }

    pub fn as_slice(&self) -> &[Vertex] {
        &self.members
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.members.iter().all(|&v| other.contains(v))
    }

    /// Membership vector of length `n`.
    pub fn mask(&self, n: usize) -> Vec<bool> {
        let mut mask = vec![false; n];
        for &v in &self.members {
            mask[v] = true;
        }
        mask
    }

    /// Builds a set from an already sorted, duplicate-free vector.
    pub(crate) fn from_sorted(members: Vec<Vertex>) -> Self {
        debug_assert!(members.windows(2).all(|w| w[0] < w[1]));
        VertexSet { members }
    }

    pub(crate) fn from_mask(mask: &[bool]) -> Self {
        VertexSet::from_sorted((0..mask.len()).filter(|&v| mask[v]).collect())
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut members: Vec<Vertex> = iter.into_iter().collect();
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }
}

impl<const N: usize> From<[Vertex; N]> for VertexSet {
    fn from(vs: [Vertex; N]) -> Self {
        vs.into_iter().collect()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.members.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// A simple undirected graph on vertices `0..n`.
///
/// Immutable after construction. Edges are held in lexicographic order and
/// adjacency is available both as sorted neighbour lists and as a bit matrix.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<Edge>,
    /// `(neighbour, edge index)` pairs sorted by neighbour.
    incidence: Vec<Vec<(Vertex, usize)>>,
    words: usize,
    matrix: Vec<u64>,
}

impl Graph {
    /// Builds a graph, rejecting loops, duplicates and out-of-range endpoints.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list = Vec::new();
        for (a, b) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, n });
                }
            }
            list.push(Edge::try_new(a, b)?);
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateEdge(w[0]));
        }
        Ok(Self::from_sorted_edges(n, list))
    }

    /// Builds a graph from canonical edges, dropping duplicates.
    pub fn from_edge_set<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Result<Self> {
        let mut list: Vec<Edge> = edges.into_iter().collect();
        if let Some(e) = list.iter().find(|e| e.v() >= n) {
            return Err(Error::VertexOutOfRange { vertex: e.v(), n });
        }
        list.sort_unstable();
        list.dedup();
        Ok(Self::from_sorted_edges(n, list))
    }

    pub fn empty(n: usize) -> Self {
        Self::from_sorted_edges(n, Vec::new())
    }

    pub fn complete(n: usize) -> Self {
        let edges = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| Edge::new(u, v)))
            .collect();
        Self::from_sorted_edges(n, edges)
    }

    pub fn path(n: usize) -> Self {
        let edges = (1..n).map(|v| Edge::new(v - 1, v)).collect();
        Self::from_sorted_edges(n, edges)
    }

    /// The cycle `0-1-...-(n-1)-0`; requires `n >= 3`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least 3 vertices");
        let mut edges: Vec<Edge> = (1..n).map(|v| Edge::new(v - 1, v)).collect();
        edges.push(Edge::new(0, n - 1));
        edges.sort_unstable();
        Self::from_sorted_edges(n, edges)
    }

    /// `K_{a,b}` with parts `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let edges = (0..a)
            .flat_map(|u| (a..a + b).map(move |v| Edge::new(u, v)))
            .collect();
        Self::from_sorted_edges(a + b, edges)
    }

    pub(crate) fn from_sorted_edges(n: usize, edges: Vec<Edge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| w[0] < w[1]));
        let words = n.div_ceil(64).max(1);
        let mut matrix = vec![0u64; n * words];
        let mut incidence = vec![Vec::new(); n];
        for (idx, e) in edges.iter().enumerate() {
            let (u, v) = e.endpoints();
            matrix[u * words + v / 64] |= 1 << (v % 64);
            matrix[v * words + u / 64] |= 1 << (u % 64);
            incidence[u].push((v, idx));
            incidence[v].push((u, idx));
        }
        // Edges arrive sorted by (u, v), so lists of the larger endpoint need a sort.
        for list in &mut incidence {
            list.sort_unstable();
        }
        Graph {
            n,
            edges,
            incidence,
            words,
            matrix,
        }
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// All edges in lexicographic order.
    #[inline]
    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n
    }

    #[inline]
    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        a < self.n && b < self.n && self.matrix[a * self.words + b / 64] >> (b % 64) & 1 == 1
    }

    /// Neighbours of `v` in increasing order.
    pub fn neighbours_of(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        self.incidence[v].iter().map(|&(w, _)| w)
    }

    /// `(neighbour, edge index)` pairs at `v`, ordered by neighbour.
    pub fn incident(&self, v: Vertex) -> &[(Vertex, usize)] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.incidence[v].len()
    }

    pub(crate) fn row(&self, v: Vertex) -> &[u64] {
        &self.matrix[v * self.words..(v + 1) * self.words]
    }

    /// Position of `e` in [`Graph::edges`].
    pub fn edge_index(&self, e: Edge) -> Option<usize> {
        self.edges.binary_search(&e).ok()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.adjacent(e.u(), e.v())
    }

    /// Errors unless `e` is an edge of this graph.
    pub fn require_edge(&self, e: Edge) -> Result<usize> {
        self.edge_index(e).ok_or(Error::NotAnEdge(e))
    }

    pub fn require_vertex(&self, v: Vertex) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub(crate) fn require_set(&self, x: &VertexSet) -> Result<()> {
        match x.as_slice().last() {
            Some(&v) => self.require_vertex(v),
            None => Ok(()),
        }
    }

    pub fn all_vertices(&self) -> VertexSet {
        VertexSet::from_sorted(self.vertices().collect())
    }

    /// Graph with edge `{u,v}` exactly when `u != v` and `{u,v}` is not an edge here.
    pub fn complement(&self) -> Graph {
        let edges = (0..self.n)
            .flat_map(|u| (u + 1..self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| !self.adjacent(u, v))
            .map(|(u, v)| Edge::new(u, v))
            .collect();
        Graph::from_sorted_edges(self.n, edges)
    }

    /// Induced subgraph on `x`, relabelled to `0..|x|` in increasing order.
    pub fn induced(&self, x: &VertexSet) -> Graph {
        let members = x.as_slice();
        let mut edges = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            for (j, &b) in members.iter().enumerate().skip(i + 1) {
                if self.adjacent(a, b) {
                    edges.push(Edge::new(i, j));
                }
            }
        }
        Graph::from_sorted_edges(members.len(), edges)
    }

    /// Connected components, each sorted, listed by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        let mut stack = Vec::new();
        for root in 0..self.n {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            stack.push(root);
            let mut block = Vec::new();
            while let Some(v) = stack.pop() {
                block.push(v);
                for w in self.neighbours_of(v) {
                    if !seen[w] {
                        seen[w] = true;
                        stack.push(w);
                    }
                }
            }
            block.sort_unstable();
            out.push(VertexSet::from_sorted(block));
        }
        out
    }

    /// Graphs on 0 or 1 vertices count as connected.
    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// True iff every vertex of `a` is adjacent to every vertex of `b`.
    ///
    /// Vacuously true when either side is empty. The sets must be disjoint.
    pub fn is_complete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        self.check_disjoint(a, b)?;
        Ok(a.iter().all(|x| b.iter().all(|y| self.adjacent(x, y))))
    }

    /// True iff no edge joins `a` and `b`. The sets must be disjoint.
    pub fn is_anticomplete_between(&self, a: &VertexSet, b: &VertexSet) -> Result<bool> {
        self.check_disjoint(a, b)?;
        Ok(a.iter().all(|x| b.iter().all(|y| !self.adjacent(x, y))))
    }

    fn check_disjoint(&self, a: &VertexSet, b: &VertexSet) -> Result<()> {
        self.require_set(a)?;
        self.require_set(b)?;
        match a.iter().find(|&v| b.contains(v)) {
            Some(v) => Err(Error::OverlappingSets(v)),
            None => Ok(()),
        }
    }

    /// Vertex sets of the components of the complement of `G[x]`, listed by
    /// smallest member.
    pub fn anti_components(&self, x: &VertexSet) -> Result<Vec<VertexSet>> {
        self.require_set(x)?;
        let members = x.as_slice();
        let mut seen = vec![false; members.len()];
        let mut out = Vec::new();
        for root in 0..members.len() {
            if seen[root] {
                continue;
            }
            seen[root] = true;
            let mut stack = vec![root];
            let mut block = Vec::new();
            while let Some(i) = stack.pop() {
                block.push(members[i]);
                for j in 0..members.len() {
                    if !seen[j] && !self.adjacent(members[i], members[j]) {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
            out.push(block.into_iter().collect());
        }
        Ok(out)
    }

    /// `N(X)`: vertices outside `x` with at least one neighbour in `x`.
    pub fn neighbours(&self, x: &VertexSet) -> Result<VertexSet> {
        self.require_set(x)?;
        let inside = x.mask(self.n);
        let mut hit = vec![false; self.n];
        for v in x.iter() {
            for w in self.neighbours_of(v) {
                if !inside[w] {
                    hit[w] = true;
                }
            }
        }
        Ok(VertexSet::from_mask(&hit))
    }

    /// `N[X] = N(X) ∪ X`.
    pub fn closed_neighbourhood(&self, x: &VertexSet) -> Result<VertexSet> {
        Ok(self.neighbours(x)?.union(x))
    }

    /// Number of edges with both ends in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> usize {
        let members = x.as_slice();
        members
            .iter()
            .enumerate()
            .map(|(i, &a)| members[i + 1..].iter().filter(|&&b| self.adjacent(a, b)).count())
            .sum()
    }

    /// First triangle `a < b < c` in lexicographic order, if any.
    pub fn find_triangle(&self) -> Option<(Vertex, Vertex, Vertex)> {
        for e in &self.edges {
            let (a, b) = e.endpoints();
            let ra = self.row(a);
            let rb = self.row(b);
            for (w, (x, y)) in ra.iter().zip(rb).enumerate() {
                // Only common neighbours above b keep the triple ordered.
                let mut common = x & y;
                if w * 64 + 63 <= b {
                    continue;
                }
                if w * 64 <= b {
                    let shift = b - w * 64 + 1;
                    common = if shift >= 64 { 0 } else { common & (!0u64 << shift) };
                }
                if common != 0 {
                    return Some((a, b, w * 64 + common.trailing_zeros() as usize));
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges)
            .finish()
    }
}
