use std::collections::VecDeque;

use super::Graph;

/// Backtracking steps allowed before giving up on further automorphisms.
const STEP_LIMIT: u64 = 2_000_000;

/// Up to `limit` automorphisms of `g`, each as the image list of `0..n`.
///
/// Vertices are mapped in breadth-first order so every vertex after the
/// first of its component is placed next to the image of its parent. The
/// result may stop short of the full group when `limit` or an internal step
/// bound is reached; it then holds a subset of the group.
pub fn automorphisms(g: &Graph, limit: usize) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    parent[w] = v;
                    queue.push_back(w);
                }
            }
        }
    }
    let mut search = Search { g, order, parent, image: vec![usize::MAX; n], used: vec![false; n], out: Vec::new(), limit, steps: 0 };
    search.extend(0);
    search.out
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    parent: Vec<usize>,
    image: Vec<usize>,
    used: Vec<bool>,
    out: Vec<Vec<usize>>,
    limit: usize,
    steps: u64,
}

impl Search<'_> {
    fn done(&self) -> bool {
        self.out.len() >= self.limit || self.steps >= STEP_LIMIT
    }

    fn extend(&mut self, depth: usize) {
        if depth == self.order.len() {
            self.out.push(self.image.clone());
            return;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.parent[v] {
            usize::MAX => (0..self.g.order()).collect(),
            p => self.g.neighbors(self.image[p]).to_vec(),
        };
        for x in candidates {
            if self.done() {
                return;
            }
            self.steps += 1;
            if self.used[x] || self.g.degree(x) != self.g.degree(v) {
                continue;
            }
            let consistent = self.order[..depth].iter().all(|&u| self.g.has_edge(u, v) == self.g.has_edge(self.image[u], x));
            if !consistent {
                continue;
            }
            self.image[v] = x;
            self.used[x] = true;
            self.extend(depth + 1);
            self.used[x] = false;
            self.image[v] = usize::MAX;
        }
    }
}
