//! Exhaustive enumeration of small labelled graphs and isomorphism
//! reduction by brute-force canonical keys.

use std::collections::HashSet;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

/// Largest order supported by enumeration and canonical keys.
pub const MAX_ORDER: usize = 8;

pub(crate) fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

fn check_order(n: usize, min: usize) -> Result<()> {
    if (min..=MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OrderOutOfRange {
            n,
            min,
            max: MAX_ORDER,
        })
    }
}

/// Vertex pairs `(i, j)`, `i < j`, in lexicographic order.
fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
}

/// The labelled graph whose edge set is selected by `mask`: bit `k` picks the
/// `k`-th vertex pair in lexicographic order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let edges = pairs(n)
        .enumerate()
        .filter(|&(k, _)| mask >> k & 1 == 1)
        .map(|(_, (i, j))| Edge::new(i, j))
        .collect();
    Graph::from_sorted_edges(n, edges)
}

/// Number of labelled graphs on `n` vertices (`2^C(n,2)`).
pub fn labelled_count(n: usize) -> u64 {
    1u64 << pair_count(n)
}

/// All labelled graphs on `n` vertices, in edge-subset counter order,
/// optionally restricted to connected ones.
pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<impl Iterator<Item = Graph>> {
    check_order(n, 1)?;
    Ok((0..labelled_count(n))
        .map(move |mask| graph_from_mask(n, mask))
        .filter(move |g| !connected_only || g.is_connected()))
}

struct IsoTables {
    perms: Vec<[u8; MAX_ORDER]>,
    /// Key bit for pair `(a, b)`, most significant bit for pair `(0, 1)`.
    bit: [[u8; MAX_ORDER]; MAX_ORDER],
}

fn tables(n: usize) -> &'static IsoTables {
    static TABLES: [OnceLock<IsoTables>; MAX_ORDER + 1] = [const { OnceLock::new() }; MAX_ORDER + 1];
    TABLES[n].get_or_init(|| {
        let total = pair_count(n);
        let mut bit = [[0u8; MAX_ORDER]; MAX_ORDER];
        for (k, (i, j)) in pairs(n).enumerate() {
            let pos = (total - 1 - k) as u8;
            bit[i][j] = pos;
            bit[j][i] = pos;
        }
        let mut perms = Vec::new();
        let mut current: Vec<u8> = (0..n as u8).collect();
        loop {
            let mut p = [0u8; MAX_ORDER];
            p[..n].copy_from_slice(&current);
            perms.push(p);
            if !next_permutation(&mut current) {
                break;
            }
        }
        IsoTables { perms, bit }
    })
}

fn next_permutation(xs: &mut [u8]) -> bool {
    let Some(i) = (1..xs.len()).rev().find(|&i| xs[i - 1] < xs[i]) else {
        return false;
    };
    let j = (i..xs.len()).rev().find(|&j| xs[j] > xs[i - 1]).unwrap();
    xs.swap(i - 1, j);
    xs[i..].reverse();
    true
}

/// Lexicographically smallest upper-triangle adjacency bit string over all
/// vertex relabellings, packed with pair `(0, 1)` as the most significant bit.
pub fn canonical_key(g: &Graph) -> Result<u64> {
    let n = g.n();
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange {
            n,
            min: 0,
            max: MAX_ORDER,
        });
    }
    let t = tables(n);
    let edges: Vec<(usize, usize)> = g.edges().iter().map(|e| e.endpoints()).collect();
    let mut best = u64::MAX;
    for p in &t.perms {
        let mut key = 0u64;
        for &(a, b) in &edges {
            key |= 1 << t.bit[p[a] as usize][p[b] as usize];
        }
        best = best.min(key);
    }
    Ok(best)
}

/// Keeps the first graph of each isomorphism class, in input order.
pub fn dedup_by_isomorphism<I>(graphs: I) -> Result<Vec<Graph>>
where
    I: IntoIterator<Item = Graph>,
{
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for g in graphs {
        if seen.insert((g.n(), canonical_key(&g)?)) {
            out.push(g);
        }
    }
    Ok(out)
}

/// One representative per isomorphism class of graphs on `n` vertices.
///
/// Candidates are built by attaching a new vertex, with every possible
/// neighbourhood, to each class representative on `n - 1` vertices; every
/// graph on `n` vertices arises this way, so deduplicating the candidates
/// yields all classes without touching all `2^C(n,2)` labelled graphs.
pub fn graphs_up_to_iso(n: usize, connected_only: bool) -> Result<Vec<Graph>> {
    check_order(n, 1)?;
    let mut reps = vec![Graph::empty(1)];
    for order in 2..=n {
        let parent = order - 1;
        let candidates = reps.iter().flat_map(|g| {
            (0u32..1 << parent).map(move |nbrs| {
                let mut edges: Vec<Edge> = g.edges().to_vec();
                edges.extend((0..parent).filter(|&v| nbrs >> v & 1 == 1).map(|v| Edge::new(v, parent)));
                edges.sort_unstable();
                Graph::from_sorted_edges(order, edges)
            })
        });
        reps = dedup_by_isomorphism(candidates)?;
    }
    if connected_only {
        reps.retain(Graph::is_connected);
    }
    Ok(reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(enumerate_graphs(3, false).unwrap().count(), 8);
        assert_eq!(enumerate_graphs(3, true).unwrap().count(), 4);
        assert_eq!(enumerate_graphs(4, false).unwrap().count(), 64);
        assert!(enumerate_graphs(0, false).is_err());
        assert!(enumerate_graphs(9, false).is_err());
    }

    #[test]
    fn connected_three_vertex_graphs() {
        let graphs: Vec<Graph> = enumerate_graphs(3, true).unwrap().collect();
        let paths = graphs.iter().filter(|g| g.edge_count() == 2).count();
        assert_eq!(paths, 3);
        assert!(graphs.contains(&Graph::complete(3)));
    }

    #[test]
    fn mask_order() {
        assert_eq!(graph_from_mask(3, 0b001).edges(), &[Edge::new(0, 1)]);
        assert_eq!(graph_from_mask(3, 0b100).edges(), &[Edge::new(1, 2)]);
    }

    #[test]
    fn permutations_are_complete() {
        assert_eq!(tables(4).perms.len(), 24);
        assert_eq!(tables(1).perms.len(), 1);
        let set: HashSet<_> = tables(5).perms.iter().collect();
        assert_eq!(set.len(), 120);
    }

    #[test]
    fn relabelled_paths_collapse() {
        let p3s = [(0, 1, 2), (1, 0, 2), (0, 2, 1)]
            .map(|(a, b, c)| Graph::from_edges(3, [(a, b), (b, c)]).unwrap());
        assert_eq!(dedup_by_isomorphism(p3s).unwrap().len(), 1);
        let k3 = dedup_by_isomorphism([Graph::complete(3)]).unwrap();
        assert_eq!(k3, vec![Graph::complete(3)]);
    }

    #[test]
    fn key_prefers_empty_leading_pairs() {
        // K2 + K1: the minimal key puts the edge on the last pair (1,2).
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(canonical_key(&g).unwrap(), 0b001);
        assert!(canonical_key(&Graph::empty(9)).is_err());
    }

    #[test]
    fn connected_four_vertex_classes() {
        let reps = dedup_by_isomorphism(enumerate_graphs(4, true).unwrap()).unwrap();
        assert_eq!(reps.len(), 6);
        assert_eq!(graphs_up_to_iso(4, true).unwrap().len(), 6);
    }
}
