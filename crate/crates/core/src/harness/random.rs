//! Seeded random graph generators.
//!
//! All generators draw from ChaCha8 seeded with [`SeedableRng::seed_from_u64`],
//! which is specified bit-for-bit and platform independent. Pairs are visited
//! in lexicographic order and each consumes one `f64` sample in `[0, 1)`, so a
//! given `(n, p, seed)` always yields the same graph.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph};

pub type GraphRng = ChaCha8Rng;

pub fn rng_from_seed(seed: u64) -> GraphRng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn check_probability(p: f64) -> Result<()> {
    if (0.0..=1.0).contains(&p) {
        Ok(())
    } else {
        Err(Error::InvalidProbability(p))
    }
}

/// Erdős–Rényi `G(n, p)`.
pub fn random_gnp(n: usize, p: f64, seed: u64) -> Result<Graph> {
    check_probability(p)?;
    Ok(gnp_with(&mut rng_from_seed(seed), n, p))
}

/// `G(n, p)` drawing from an existing generator.
pub fn gnp_with<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen::<f64>() < p {
                edges.push(Edge::new(u, v));
            }
        }
    }
    Graph::from_sorted_edges(n, edges)
}

/// Samples `G(n, p)` and then breaks every triangle.
pub fn random_triangle_free(n: usize, p: f64, seed: u64) -> Result<Graph> {
    Ok(remove_triangles(&random_gnp(n, p, seed)?))
}

/// Repeatedly takes the lexicographically first triangle `a < b < c` and
/// deletes its largest edge `bc`, until none remain.
///
/// Deleting edges never creates triangles, so triples already passed stay
/// triangle-free and a single ordered sweep applies the rule exactly.
#[allow(clippy::needless_range_loop)]
pub fn remove_triangles(g: &Graph) -> Graph {
    let n = g.n();
    let mut adj: Vec<Vec<bool>> = (0..n).map(|u| (0..n).map(|v| g.adjacent(u, v)).collect()).collect();
    for a in 0..n {
        for b in a + 1..n {
            if !adj[a][b] {
                continue;
            }
            for c in b + 1..n {
                if adj[a][c] && adj[b][c] {
                    adj[b][c] = false;
                    adj[c][b] = false;
                }
            }
        }
    }
    let edges = g
        .edges()
        .iter()
        .copied()
        .filter(|e| adj[e.u()][e.v()])
        .collect();
    Graph::from_sorted_edges(n, edges)
}
