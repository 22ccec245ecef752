//! Brute-force oracles written straight from the definitions. They only use
//! the graph's adjacency relation and never call the algorithms under test.
#![allow(dead_code, clippy::needless_range_loop)]

use p3conn::{Edge, Graph, Vertex, VertexSet};

/// Three distinct vertices inducing exactly two edges, with `e` and `f` those edges.
pub fn forms_induced_p3(g: &Graph, e: Edge, f: Edge) -> bool {
    if e == f {
        return false;
    }
    let mut vs = vec![e.u(), e.v(), f.u(), f.v()];
    vs.sort_unstable();
    vs.dedup();
    if vs.len() != 3 {
        return false;
    }
    let induced = [(vs[0], vs[1]), (vs[0], vs[2]), (vs[1], vs[2])]
        .iter()
        .filter(|&&(a, b)| g.adjacent(a, b))
        .count();
    induced == 2
}

/// Per-edge class id (index of the smallest edge in the class), computed by
/// closing the relation over all edge pairs with Warshall's algorithm.
pub fn brute_class_ids(g: &Graph) -> Vec<usize> {
    let edges = g.edges();
    let m = edges.len();
    let mut reach = vec![vec![false; m]; m];
    for i in 0..m {
        reach[i][i] = true;
        for j in 0..m {
            if forms_induced_p3(g, edges[i], edges[j]) {
                reach[i][j] = true;
            }
        }
    }
    for k in 0..m {
        for i in 0..m {
            if reach[i][k] {
                for j in 0..m {
                    if reach[k][j] {
                        reach[i][j] = true;
                    }
                }
            }
        }
    }
    (0..m).map(|i| (0..m).find(|&j| reach[i][j]).unwrap()).collect()
}

pub fn subset(mask: u32, n: usize) -> VertexSet {
    (0..n).filter(|&v| mask >> v & 1 == 1).collect()
}

/// `2 <= |X| < n` and every outside `y` has `X ⊆ N(y)` or `X ∩ N(y) = ∅`.
pub fn brute_is_homogeneous(g: &Graph, x: &VertexSet) -> bool {
    if x.len() < 2 || x.len() >= g.n() {
        return false;
    }
    g.vertices().filter(|&y| !x.contains(y)).all(|y| {
        let all = x.iter().all(|v| g.adjacent(y, v));
        let none = x.iter().all(|v| !g.adjacent(y, v));
        all || none
    })
}

pub fn brute_has_edge_inside(g: &Graph, x: &VertexSet) -> bool {
    x.iter().any(|a| x.iter().any(|b| a < b && g.adjacent(a, b)))
}

/// All homogeneous sets, by enumerating every vertex subset.
pub fn brute_homogeneous_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.n();
    (0u32..1 << n)
        .map(|mask| subset(mask, n))
        .filter(|x| brute_is_homogeneous(g, x))
        .collect()
}

pub fn brute_has_nonstable_module(g: &Graph) -> bool {
    brute_homogeneous_sets(g).iter().any(|x| brute_has_edge_inside(g, x))
}

/// Sets containing `u` and `v` (the whole vertex set included) that no
/// outside vertex sees partially.
pub fn brute_undistinguished_supersets(g: &Graph, u: Vertex, v: Vertex) -> Vec<VertexSet> {
    let n = g.n();
    (0u32..1 << n)
        .filter(|mask| mask >> u & 1 == 1 && mask >> v & 1 == 1)
        .map(|mask| subset(mask, n))
        .filter(|x| {
            g.vertices().filter(|&y| !x.contains(y)).all(|y| {
                let hits = x.iter().filter(|&w| g.adjacent(y, w)).count();
                hits == 0 || hits == x.len()
            })
        })
        .collect()
}

/// Connectivity by transitive closure of adjacency.
pub fn brute_connected_set(g: &Graph, x: &VertexSet) -> bool {
    let vs: Vec<Vertex> = x.iter().collect();
    if vs.len() <= 1 {
        return true;
    }
    let mut reached = vec![false; vs.len()];
    reached[0] = true;
    let mut changed = true;
    while changed {
        changed = false;
        for i in 0..vs.len() {
            for j in 0..vs.len() {
                if reached[i] && !reached[j] && g.adjacent(vs[i], vs[j]) {
                    reached[j] = true;
                    changed = true;
                }
            }
        }
    }
    reached.iter().all(|&r| r)
}

pub fn brute_connected(g: &Graph) -> bool {
    brute_connected_set(g, &g.all_vertices())
}

pub fn brute_has_connected_module(g: &Graph) -> bool {
    brute_homogeneous_sets(g)
        .iter()
        .any(|x| brute_connected_set(g, x))
}

pub fn brute_triangle_free(g: &Graph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if g.adjacent(a, b) && g.adjacent(a, c) && g.adjacent(b, c) {
                    return false;
                }
            }
        }
    }
    true
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..n {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

/// Isomorphism by trying every bijection.
pub fn brute_isomorphic(g: &Graph, h: &Graph) -> bool {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    permutations(g.n()).iter().any(|p| {
        g.edges()
            .iter()
            .all(|e| h.adjacent(p[e.u()], p[e.v()]))
    })
}

/// The number of labelled connected graphs on `n` vertices from the standard
/// recurrence `c(n) = 2^C(n,2) - Σ_{k<n} C(n-1,k-1) c(k) 2^C(n-k,2)`.
pub fn connected_labelled_count(n: usize) -> u64 {
    let pairs = |k: usize| (k * k.saturating_sub(1) / 2) as u32;
    let binom = |a: u64, b: u64| (0..b).fold(1u64, |acc, i| acc * (a - i) / (i + 1));
    let mut c = vec![0u64; n + 1];
    for k in 1..=n {
        let mut disconnected = 0;
        for j in 1..k {
            disconnected += binom(k as u64 - 1, j as u64 - 1) * c[j] * (1u64 << pairs(k - j));
        }
        c[k] = (1u64 << pairs(k)) - disconnected;
    }
    c[n]
}

/// Known counts of connected graphs up to isomorphism, n = 0..=7.
pub const CONNECTED_UNLABELLED: [u64; 8] = [1, 1, 1, 2, 6, 21, 112, 853];

/// Known counts of all graphs up to isomorphism, n = 0..=7.
pub const ALL_UNLABELLED: [u64; 8] = [1, 1, 2, 4, 11, 34, 156, 1044];

/// The paw: triangle a=0, b=1, c=2 with pendant d=3 on a.
pub fn paw() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap()
}

/// K4 minus the edge b-d, with a=0, b=1, c=2, d=3.
pub fn diamond() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3)]).unwrap()
}

/// Graph on `n` vertices whose edges are selected by `mask` over
/// lexicographic pairs; independent of the library's own enumerator.
pub fn graph_from_pairs_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(n, edges).unwrap()
}

/// Random graph on `k` vertices whose complement contains a random spanning
/// tree, so it is anti-connected. Returned as an edge list on `0..k`.
pub fn random_anti_connected<R: rand::Rng>(rng: &mut R, k: usize, p: f64) -> Vec<(usize, usize)> {
    let mut tree = vec![vec![false; k]; k];
    for i in 1..k {
        let j = rng.gen_range(0..i);
        tree[i][j] = true;
        tree[j][i] = true;
    }
    let mut edges = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            if !tree[i][j] && rng.gen::<f64>() < p {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// X on `0..a` and Y on `a..a+b`, both anti-connected and complete to each
/// other, plus `extra` further vertices anti-complete to X ∪ Y with random
/// edges among themselves.
pub struct Join {
    pub graph: Graph,
    pub x: VertexSet,
    pub y: VertexSet,
}

pub fn random_join<R: rand::Rng>(rng: &mut R, a: usize, b: usize, extra: usize) -> Join {
    let mut edges = Vec::new();
    let p_x = rng.gen::<f64>();
    let p_y = rng.gen::<f64>();
    edges.extend(random_anti_connected(rng, a, p_x));
    edges.extend(
        random_anti_connected(rng, b, p_y)
            .into_iter()
            .map(|(i, j)| (a + i, a + j)),
    );
    for i in 0..a {
        for j in a..a + b {
            edges.push((i, j));
        }
    }
    let base = a + b;
    for i in 0..extra {
        for j in i + 1..extra {
            if rng.gen_bool(0.5) {
                edges.push((base + i, base + j));
            }
        }
    }
    Join {
        graph: Graph::from_edges(base + extra, edges).unwrap(),
        x: (0..a).collect(),
        y: (a..a + b).collect(),
    }
}
