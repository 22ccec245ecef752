use serde::{Deserialize, Serialize};

use crate::graph::Graph;
use crate::modules::{find_nonstable_homogeneous_set, ModuleWitness};
use crate::p3::p3_partition;

/// Both P3-connectivity decisions for one graph, with certificates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TheoremVerdict {
    pub connected: bool,
    /// From the edge partition: connected with at most one class.
    pub direct: bool,
    /// From the characterization: connected with no non-stable homogeneous set.
    pub fast: bool,
    pub agree: bool,
    pub witness: Option<ModuleWitness>,
    /// Number of P3 classes (`m`).
    pub class_count: usize,
}

/// Runs both checkers. A disagreement is reported through `agree`, never panics.
pub fn check_theorem(g: &Graph) -> TheoremVerdict {
    let connected = g.is_connected();
    let class_count = p3_partition(g).class_count();
    let witness = find_nonstable_homogeneous_set(g);
    let direct = connected && class_count <= 1;
    let fast = connected && witness.is_none();
    TheoremVerdict {
        connected,
        direct,
        fast,
        agree: direct == fast,
        witness,
        class_count,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{Edge, VertexSet};

    #[test]
    fn fixed_graphs() {
        let v = check_theorem(&Graph::complete(3));
        assert!(!v.direct && !v.fast && v.agree);
        assert_eq!(v.class_count, 3);

        let v = check_theorem(&Graph::cycle(5));
        assert!(v.direct && v.fast && v.agree);
        assert_eq!(v.class_count, 1);
        assert_eq!(v.witness, None);

        let paw = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let v = check_theorem(&paw);
        assert!(!v.direct && !v.fast && v.agree);
        assert_eq!(v.class_count, 2);
        let w = v.witness.unwrap();
        assert_eq!(w.members, VertexSet::from([1, 2]));
        assert_eq!(w.witness_edge, Edge::new(1, 2));
    }

    #[test]
    fn disconnected_without_witness() {
        let v = check_theorem(&Graph::empty(3));
        assert!(!v.connected && !v.direct && !v.fast && v.agree);
        assert_eq!(v.witness, None);
    }
}
