//! Structural diagnostic around a vertex `x` with a non-neighbour.
//!
//! The neighbourhood `N(x)` is split by the P3 class of the edge joining each
//! neighbour to `x`; each part is further split into anti-components, and
//! every anti-component `X_is` gets the set `Y_is` of non-neighbours of `x`
//! that see it. Two facts hold on every graph and are asserted:
//!
//! * parts belonging to different classes are complete to each other;
//! * every edge from `Y = V - N[x]` into part `i` lies in class `i`.
//!
//! For blocks of different classes the diagnostic also tests which of two
//! orientation alternatives holds. On graphs without non-stable homogeneous
//! sets exactly one always does; elsewhere that can fail, and such pairs are
//! reported rather than asserted.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::p3::{class_neighbourhood, p3_partition, P3Partition};

/// Address of an anti-component: `part` indexes [`ProofDecomposition::parts`],
/// `block` indexes the anti-components of that part.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct BlockId {
    pub part: usize,
    pub block: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Part {
    /// Id of the P3 class shared by the edges from `x` into this part.
    pub class_id: usize,
    pub members: VertexSet,
    /// Anti-components of the part.
    pub blocks: Vec<VertexSet>,
    /// For each block, the vertices of `Y` with a neighbour in it.
    pub block_reach: Vec<VertexSet>,
}

/// A cross-class block pair where neither or both orientation alternatives hold.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DichotomyFailure {
    pub first: BlockId,
    pub second: BlockId,
    pub first_alternative: bool,
    pub second_alternative: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProofDecomposition {
    pub x: Vertex,
    /// `V - N[x]`.
    pub y: VertexSet,
    /// Parts of `N(x)` ordered by class id.
    pub parts: Vec<Part>,
    /// Arcs of the orientation digraph on blocks.
    pub arcs: Vec<(BlockId, BlockId)>,
    pub dichotomy_failures: Vec<DichotomyFailure>,
}

impl ProofDecomposition {
    pub fn blocks(&self) -> impl Iterator<Item = BlockId> + '_ {
        self.parts.iter().enumerate().flat_map(|(part, p)| {
            (0..p.blocks.len()).map(move |block| BlockId { part, block })
        })
    }

    pub fn block(&self, id: BlockId) -> &VertexSet {
        &self.parts[id.part].blocks[id.block]
    }

    /// Blocks with no outgoing arc.
    pub fn sinks(&self) -> Vec<BlockId> {
        self.blocks()
            .filter(|b| self.arcs.iter().all(|(from, _)| from != b))
            .collect()
    }

    /// True iff the orientation digraph has no directed cycle.
    pub fn is_acyclic(&self) -> bool {
        let ids: Vec<BlockId> = self.blocks().collect();
        let index = |b: &BlockId| ids.binary_search(b).unwrap();
        let mut indegree = vec![0usize; ids.len()];
        let mut out = vec![Vec::new(); ids.len()];
        for (from, to) in &self.arcs {
            out[index(from)].push(index(to));
            indegree[index(to)] += 1;
        }
        let mut ready: Vec<usize> = (0..ids.len()).filter(|&i| indegree[i] == 0).collect();
        let mut removed = 0;
        while let Some(i) = ready.pop() {
            removed += 1;
            for &j in &out[i] {
                indegree[j] -= 1;
                if indegree[j] == 0 {
                    ready.push(j);
                }
            }
        }
        removed == ids.len()
    }
}

/// Builds the decomposition around `x`.
///
/// Requires `g` connected and `x` non-adjacent to at least one other vertex.
/// Fails with [`Error::ClaimViolated`] if either unconditional fact is broken.
pub fn proof_decomposition(g: &Graph, x: Vertex) -> Result<ProofDecomposition> {
    g.require_vertex(x)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    let closed = g.closed_neighbourhood(&VertexSet::from([x]))?;
    if closed.len() == g.n() {
        return Err(Error::DominatingVertex(x));
    }
    let y: VertexSet = g.vertices().filter(|&v| !closed.contains(v)).collect();
    let partition = p3_partition(g);

    let mut class_ids: Vec<usize> = g
        .incident(x)
        .iter()
        .map(|&(_, idx)| partition.class_of_index(idx))
        .collect();
    class_ids.sort_unstable();
    class_ids.dedup();

    let mut parts = Vec::with_capacity(class_ids.len());
    for &class_id in &class_ids {
        let members = class_neighbourhood(g, &partition, x, class_id);
        let blocks = g.anti_components(&members)?;
        let block_reach = blocks
            .iter()
            .map(|b| y.iter().filter(|&w| b.iter().any(|v| g.adjacent(w, v))).collect())
            .collect();
        parts.push(Part {
            class_id,
            members,
            blocks,
            block_reach,
        });
    }

    check_parts_complete(g, &parts)?;
    check_y_edges(g, &partition, &y, &parts)?;

    let mut decomposition = ProofDecomposition {
        x,
        y,
        parts,
        arcs: Vec::new(),
        dichotomy_failures: Vec::new(),
    };
    orient(g, &partition, &mut decomposition);
    Ok(decomposition)
}

fn check_parts_complete(g: &Graph, parts: &[Part]) -> Result<()> {
    for (i, a) in parts.iter().enumerate() {
        for b in &parts[i + 1..] {
            if !g.is_complete_between(&a.members, &b.members)? {
                return Err(Error::ClaimViolated(format!(
                    "neighbour parts {} and {} (classes {} and {}) are not complete to each other",
                    a.members, b.members, a.class_id, b.class_id
                )));
            }
        }
        for (s, bs) in a.blocks.iter().enumerate() {
            for bt in &a.blocks[s + 1..] {
                if !g.is_complete_between(bs, bt)? {
                    return Err(Error::ClaimViolated(format!(
                        "anti-components {bs} and {bt} are not complete to each other"
                    )));
                }
            }
        }
    }
    Ok(())
}

fn check_y_edges(g: &Graph, partition: &P3Partition, y: &VertexSet, parts: &[Part]) -> Result<()> {
    for part in parts {
        for w in y.iter() {
            for v in part.members.iter().filter(|&v| g.adjacent(w, v)) {
                let e = Edge::new(w, v);
                if partition.class_of(e) != Some(part.class_id) {
                    return Err(Error::ClaimViolated(format!(
                        "edge {e} into the part of class {} lies in class {:?}",
                        part.class_id,
                        partition.class_of(e)
                    )));
                }
            }
        }
    }
    Ok(())
}

fn orient(g: &Graph, partition: &P3Partition, d: &mut ProofDecomposition) {
    let all_in = |a: &VertexSet, b: &VertexSet, class: usize| {
        a.iter().all(|u| {
            b.iter()
                .all(|v| g.adjacent(u, v) && partition.class_of(Edge::new(u, v)) == Some(class))
        })
    };
    let complete = |a: &VertexSet, b: &VertexSet| a.iter().all(|u| b.iter().all(|v| g.adjacent(u, v)));

    for i in 0..d.parts.len() {
        for j in i + 1..d.parts.len() {
            let (pi, pj) = (&d.parts[i], &d.parts[j]);
            for s in 0..pi.blocks.len() {
                for t in 0..pj.blocks.len() {
                    let (xis, xjt) = (&pi.blocks[s], &pj.blocks[t]);
                    // (1) edges in class j and X_jt complete to Y_is.
                    let first = all_in(xis, xjt, pj.class_id) && complete(xjt, &pi.block_reach[s]);
                    // (2) edges in class i and X_is complete to Y_jt.
                    let second = all_in(xis, xjt, pi.class_id) && complete(xis, &pj.block_reach[t]);
                    let a = BlockId { part: i, block: s };
                    let b = BlockId { part: j, block: t };
                    match (first, second) {
                        (true, false) => d.arcs.push((a, b)),
                        (false, true) => d.arcs.push((b, a)),
                        _ => d.dichotomy_failures.push(DichotomyFailure {
                            first: a,
                            second: b,
                            first_alternative: first,
                            second_alternative: second,
                        }),
                    }
                }
            }
        }
    }
}
