//! Simple undirected graphs on points `0..n`.

mod automorphism;
mod generators;
pub mod io;

pub use automorphism::automorphisms;

pub use generators::{
    complete, cycle, disjoint_union, generalized_petersen, hoffman_singleton, make_graph, petersen, sylvester,
    Generator, SYLVESTER_EDGES,
};

use std::collections::VecDeque;

use crate::error::{Error, Result};
use crate::par::{self, Exec};

/// A simple graph: no loops, no multiple edges, vertices `0..n`.
///
/// Adjacency lists are kept sorted, so two graphs with the same edge set
/// compare equal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![Vec::new(); n] }
    }

    /// Builds a graph from an edge list. Repeated edges collapse; loops and
    /// out-of-range endpoints are errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::InvalidParameter(format!("loop at vertex {u}")));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].binary_search(&v).is_ok()
    }

    /// `N[v] = {v} ∪ N(v)`, sorted.
    pub fn closed_neighborhood(&self, v: usize) -> Vec<usize> {
        let mut block = Vec::with_capacity(self.adj[v].len() + 1);
        block.push(v);
        block.extend_from_slice(&self.adj[v]);
        block.sort_unstable();
        block
    }

    /// The common degree if every vertex has the same degree. The graph on
    /// zero vertices has no degree and returns `None`.
    pub fn regularity(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    /// Length of a shortest cycle, or `None` for a forest.
    pub fn girth(&self) -> Option<usize> {
        self.girth_with(Exec::default())
    }

    /// [`Graph::girth`] with an explicit execution policy.
    ///
    /// Runs a BFS from every vertex; a non-tree edge `(u, w)` met from root
    /// `r` closes a closed walk of length `d(u) + d(w) + 1` through `r`, and
    /// the minimum over all roots is the girth.
    pub fn girth_with(&self, exec: Exec) -> Option<usize> {
        let n = self.order();
        par::map_range(exec, 0..n, |root| self.shortest_cycle_through(root)).into_iter().flatten().min()
    }

    fn shortest_cycle_through(&self, root: usize) -> Option<usize> {
        let n = self.order();
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut best = usize::MAX;
        let mut queue = VecDeque::new();
        dist[root] = 0;
        queue.push_back(root);
        while let Some(u) = queue.pop_front() {
            if 2 * dist[u] + 1 >= best {
                break;
            }
            for &w in &self.adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
        (best != usize::MAX).then_some(best)
    }

    /// True iff the graph has at most one connected component.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &w in &self.adj[u] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        count == n
    }

    /// Maps vertex `v` to `labels[v]` in a graph on `n` vertices.
    pub fn relabel(&self, labels: &[usize], n: usize) -> Result<Graph> {
        if labels.len() != self.order() {
            return Err(Error::InvalidParameter(format!(
                "relabelling needs {} labels, got {}",
                self.order(),
                labels.len()
            )));
        }
        Graph::from_edges(n, self.edges().map(|(u, v)| (labels[u], labels[v])))
    }

    /// Checks the preconditions of the neighbourhood construction and returns
    /// the degree δ.
    pub fn require_regular_girth5(&self) -> Result<usize> {
        let delta = self.regularity().ok_or(Error::NotRegular)?;
        match self.girth() {
            Some(g) if g < 5 => Err(Error::GirthTooSmall(g)),
            _ => Ok(delta),
        }
    }
}
