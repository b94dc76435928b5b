use std::collections::VecDeque;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

const MAX_ATTEMPTS: usize = 200_000;

/// A random δ-regular graph on `n` vertices with girth at least 5.
///
/// Edges are added one at a time between vertices with free degree that
/// are at distance at least 4, so no cycle shorter than 5 ever forms; a
/// dead end restarts the attempt. The same seed always gives the same graph.
pub fn random_regular_girth5(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    if !(n * delta).is_multiple_of(2) {
        return Err(Error::GenerationFailed(format!("n·δ = {} is odd", n * delta)));
    }
    if delta >= 2 && n < delta * delta + 1 {
        return Err(Error::GenerationFailed(format!(
            "a {delta}-regular graph of girth 5 needs at least {} vertices, got {n}",
            delta * delta + 1
        )));
    }
    if delta >= n && n > 0 {
        return Err(Error::GenerationFailed(format!("degree {delta} needs more than {n} vertices")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..MAX_ATTEMPTS {
        if let Some(adj) = attempt(n, delta, &mut rng) {
            let edges = adj.iter().enumerate().flat_map(|(u, nb)| nb.iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
            let g = Graph::from_edges(n, edges)?;
            debug_assert_eq!(g.regularity().unwrap_or(delta), delta);
            debug_assert!(g.girth().is_none_or(|girth| girth >= 5));
            return Ok(g);
        }
    }
    Err(Error::GenerationFailed(format!("no {delta}-regular girth-5 graph on {n} vertices after {MAX_ATTEMPTS} attempts")))
}

fn attempt(n: usize, delta: usize, rng: &mut ChaCha8Rng) -> Option<Vec<Vec<usize>>> {
    let mut adj: Vec<Vec<usize>> = vec![Vec::with_capacity(delta); n];
    let mut dist = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    loop {
        let open: Vec<usize> = (0..n).filter(|&v| adj[v].len() < delta).collect();
        if open.is_empty() {
            return Some(adj);
        }
        let &u = open.choose(rng)?;
        // distances from u up to 3
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[u] = 0;
        queue.clear();
        queue.push_back(u);
        while let Some(x) = queue.pop_front() {
            if dist[x] == 3 {
                continue;
            }
            for &y in &adj[x] {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        let far: Vec<usize> = open.iter().copied().filter(|&v| dist[v] == usize::MAX).collect();
        let &v = far.choose(rng)?;
        adj[u].push(v);
        adj[v].push(u);
    }
}
