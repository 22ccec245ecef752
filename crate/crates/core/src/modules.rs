//! Homogeneous sets (graph modules) and the characterization-based
//! P3-connectivity test: a graph is P3-connected exactly when it is connected
//! and every homogeneous set is stable.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, Vertex, VertexSet};
use crate::par;

/// A non-stable homogeneous set together with an edge inside it.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleWitness {
    pub members: VertexSet,
    pub witness_edge: Edge,
}

impl ModuleWitness {
    /// Re-checks homogeneity, the size bounds and the witness edge against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        if !is_homogeneous_set(g, &self.members)? {
            return Err(Error::ClaimViolated(format!(
                "{} is not a homogeneous set",
                self.members
            )));
        }
        let (u, v) = self.witness_edge.endpoints();
        if !(g.has_edge(self.witness_edge) && self.members.contains(u) && self.members.contains(v))
        {
            return Err(Error::ClaimViolated(format!(
                "{} is not an edge inside {}",
                self.witness_edge, self.members
            )));
        }
        Ok(())
    }
}

pub fn is_stable(g: &Graph, x: &VertexSet) -> Result<bool> {
    g.require_set(x)?;
    Ok(g.edges_within(x) == 0)
}

/// True iff `2 <= |x| < n` and every vertex outside `x` is adjacent to all of
/// `x` or to none of it.
pub fn is_homogeneous_set(g: &Graph, x: &VertexSet) -> Result<bool> {
    g.require_set(x)?;
    if x.len() < 2 || x.len() >= g.n() {
        return Ok(false);
    }
    let inside = x.mask(g.n());
    Ok(g.vertices().filter(|&y| !inside[y]).all(|y| {
        let hits = x.iter().filter(|&v| g.adjacent(y, v)).count();
        hits == 0 || hits == x.len()
    }))
}

/// Smallest vertex set containing `u` and `v` that no outside vertex
/// distinguishes. Returns the whole vertex set when no proper module
/// contains the pair.
pub fn min_module_containing(g: &Graph, u: Vertex, v: Vertex) -> Result<VertexSet> {
    g.require_vertex(u)?;
    g.require_vertex(v)?;
    if u == v {
        return Err(Error::SameVertex(u));
    }
    Ok(closure(g, u, v))
}

fn closure(g: &Graph, u: Vertex, v: Vertex) -> VertexSet {
    let n = g.n();
    let mut inside = vec![false; n];
    // Neighbours each vertex has inside the current set.
    let mut hits = vec![0usize; n];
    let mut size = 0;
    let absorb = |w: Vertex, inside: &mut Vec<bool>, hits: &mut Vec<usize>| {
        inside[w] = true;
        for z in g.neighbours_of(w) {
            hits[z] += 1;
        }
    };
    absorb(u, &mut inside, &mut hits);
    absorb(v, &mut inside, &mut hits);
    size += 2;

    loop {
        let before = size;
        for y in 0..n {
            // A vertex distinguishes the set if it sees some but not all of it.
            if !inside[y] && hits[y] > 0 && hits[y] < size {
                absorb(y, &mut inside, &mut hits);
                size += 1;
            }
        }
        if size == before || size == n {
            break;
        }
    }
    VertexSet::from_mask(&inside)
}

/// Number of edges above which the closure search fans out across workers.
const PARALLEL_EDGE_THRESHOLD: usize = 512;

/// First edge (lexicographic order) whose minimal module is proper, returned
/// as a witness. `None` iff the graph has no non-stable homogeneous set.
pub fn find_nonstable_homogeneous_set(g: &Graph) -> Option<ModuleWitness> {
    let n = g.n();
    let probe = |e: &Edge| {
        let members = closure(g, e.u(), e.v());
        (members.len() < n).then_some(ModuleWitness {
            members,
            witness_edge: *e,
        })
    };
    if g.edge_count() >= PARALLEL_EDGE_THRESHOLD {
        par::find_map_first(g.edges(), probe)
    } else {
        g.edges().iter().find_map(probe)
    }
}

/// Characterization-based decision: connected with no non-stable homogeneous set.
pub fn is_p3_connected_fast(g: &Graph) -> bool {
    g.is_connected() && find_nonstable_homogeneous_set(g).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn paw() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
    }

    fn diamond() -> Graph {
        Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap()
    }

    fn set<const N: usize>(vs: [Vertex; N]) -> VertexSet {
        VertexSet::from(vs)
    }

    #[test]
    fn stability() {
        assert!(is_stable(&Graph::cycle(4), &set([0, 2])).unwrap());
        assert!(is_stable(&Graph::complete(3), &set([1])).unwrap());
        assert!(is_stable(&Graph::complete(3), &VertexSet::new()).unwrap());
        assert!(!is_stable(&Graph::complete(3), &set([0, 2])).unwrap());
    }

    #[test]
    fn homogeneity() {
        assert!(is_homogeneous_set(&paw(), &set([1, 2])).unwrap());
        assert!(!is_homogeneous_set(&paw(), &set([0, 1])).unwrap());
        let c5 = Graph::cycle(5);
        for a in 0..5 {
            for b in a + 1..5 {
                assert!(!is_homogeneous_set(&c5, &set([a, b])).unwrap());
            }
        }
        assert!(!is_homogeneous_set(&c5, &c5.all_vertices()).unwrap());
        assert!(!is_homogeneous_set(&c5, &set([2])).unwrap());
    }

    #[test]
    fn closures() {
        assert_eq!(min_module_containing(&paw(), 1, 2).unwrap(), set([1, 2]));
        let c5 = Graph::cycle(5);
        for e in c5.edges() {
            assert_eq!(min_module_containing(&c5, e.u(), e.v()).unwrap(), c5.all_vertices());
        }
        assert_eq!(min_module_containing(&diamond(), 0, 2).unwrap(), set([0, 2]));
        assert_eq!(min_module_containing(&paw(), 1, 1), Err(Error::SameVertex(1)));
        // P4 0-1-2-3: {0,1} is distinguished by 2, then {0,1,2} by 3.
        assert_eq!(
            min_module_containing(&Graph::path(4), 0, 1).unwrap(),
            set([0, 1, 2, 3])
        );
    }

    #[test]
    fn witness_search() {
        let w = find_nonstable_homogeneous_set(&paw()).unwrap();
        assert_eq!(w.members, set([1, 2]));
        assert_eq!(w.witness_edge, Edge::new(1, 2));
        w.validate(&paw()).unwrap();

        assert_eq!(find_nonstable_homogeneous_set(&Graph::cycle(4)), None);

        let w = find_nonstable_homogeneous_set(&Graph::complete(4)).unwrap();
        assert_eq!(w.members, set([0, 1]));
        assert_eq!(w.witness_edge, Edge::new(0, 1));
    }

    #[test]
    fn fast_decision() {
        assert!(!is_p3_connected_fast(&Graph::complete(3)));
        assert!(is_p3_connected_fast(&Graph::cycle(5)));
        assert!(!is_p3_connected_fast(&Graph::from_edges(3, [(0, 1)]).unwrap()));
        assert!(is_p3_connected_fast(&Graph::complete(2)));
        assert!(!is_p3_connected_fast(&Graph::empty(2)));
    }

    #[test]
    fn large_search_matches_sequential() {
        // Blow up every vertex of a long cycle into a K2: the first edge's closure is its own pair.
        let mut edges = Vec::new();
        let k = 120;
        for i in 0..k {
            edges.push((2 * i, 2 * i + 1));
            let j = (i + 1) % k;
            for a in [2 * i, 2 * i + 1] {
                for b in [2 * j, 2 * j + 1] {
                    edges.push((a, b));
                }
            }
        }
        let g = Graph::from_edges(2 * k, edges).unwrap();
        assert!(g.edge_count() >= PARALLEL_EDGE_THRESHOLD);
        let w = find_nonstable_homogeneous_set(&g).unwrap();
        assert_eq!(w.witness_edge, Edge::new(0, 1));
        assert_eq!(w.members, set([0, 1]));
    }
}
