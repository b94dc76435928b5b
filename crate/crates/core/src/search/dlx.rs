//! Exact cover by dancing links.
//!
//! Items are `0..n_items`; each option lists the items it covers. The search
//! always branches on the item with the fewest remaining options, taking the
//! lowest item index on ties, and tries that item's options in ascending
//! option order, so runs are deterministic.
//!
//! An optional [`Symmetry`] (permutations of items and options preserving the
//! instance) prunes branches equivalent to ones already refuted. It preserves
//! whether a solution exists but not the number of solutions.

/// How a run ended.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum End {
    /// The whole search tree was explored.
    Exhausted,
    /// The visitor asked to stop.
    Halted,
    /// The node budget ran out first.
    Budget,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Run {
    pub end: End,
    /// Search-tree nodes visited, including the root.
    pub nodes: u64,
}

pub struct Dlx {
    n_items: usize,
    left: Vec<usize>,
    right: Vec<usize>,
    up: Vec<usize>,
    down: Vec<usize>,
    top: Vec<usize>,
    len: Vec<usize>,
    /// Option owning each node (unused for headers).
    owner: Vec<usize>,
    /// First node of each option; its nodes are contiguous.
    start: Vec<usize>,
    sym: Symmetry,
    /// Options already tried at some open node.
    tried: Vec<bool>,
}

/// Permutations of the instance: `items[s][i]` and `options[s][k]` are the
/// images of item `i` and option `k` under the `s`-th permutation. Each must
/// map every option's item set onto the item set of its image.
#[derive(Clone, Debug, Default)]
pub struct Symmetry {
    pub items: Vec<Vec<u32>>,
    pub options: Vec<Vec<u32>>,
}

impl Dlx {
    /// Builds the link structure. Items repeated within an option are
    /// ignored after their first occurrence; options covering nothing never
    /// appear in a solution.
    ///
    /// # Panics
    /// If an option names an item `>= n_items`.
    pub fn new(n_items: usize, options: &[Vec<usize>]) -> Self {
        let h = n_items + 1;
        let mut dlx = Dlx {
            n_items,
            left: (0..h).map(|i| if i == 0 { n_items } else { i - 1 }).collect(),
            right: (0..h).map(|i| if i == n_items { 0 } else { i + 1 }).collect(),
            up: (0..h).collect(),
            down: (0..h).collect(),
            top: (0..h).collect(),
            len: vec![0; h],
            owner: vec![usize::MAX; h],
            start: Vec::with_capacity(options.len() + 1),
            sym: Symmetry::default(),
            tried: vec![false; options.len()],
        };
        for (k, opt) in options.iter().enumerate() {
            dlx.start.push(dlx.top.len());
            let mut seen = Vec::with_capacity(opt.len());
            for &item in opt {
                assert!(item < n_items, "item {item} out of range");
                if seen.contains(&item) {
                    continue;
                }
                seen.push(item);
                let col = item + 1;
                let node = dlx.top.len();
                let last = dlx.up[col];
                dlx.top.push(col);
                dlx.owner.push(k);
                dlx.up.push(last);
                dlx.down.push(col);
                dlx.down[last] = node;
                dlx.up[col] = node;
                dlx.len[col] += 1;
            }
        }
        dlx.start.push(dlx.top.len());
        dlx
    }

    pub fn n_items(&self) -> usize {
        self.n_items
    }

    /// Installs symmetry pruning. Identity permutations are dropped.
    ///
    /// # Panics
    /// If the permutation tables have the wrong shape.
    pub fn with_symmetry(mut self, sym: Symmetry) -> Self {
        assert_eq!(sym.items.len(), sym.options.len());
        let n_options = self.tried.len();
        let (mut items, mut options) = (Vec::new(), Vec::new());
        for (ip, op) in sym.items.into_iter().zip(sym.options) {
            assert!(ip.len() == self.n_items && op.len() == n_options, "permutation of the wrong length");
            let identity = ip.iter().enumerate().all(|(i, &x)| i == x as usize)
                && op.iter().enumerate().all(|(k, &x)| k == x as usize);
            if !identity {
                items.push(ip);
                options.push(op);
            }
        }
        self.sym = Symmetry { items, options };
        self
    }

    fn row(&self, node: usize) -> std::ops::Range<usize> {
        let k = self.owner[node];
        self.start[k]..self.start[k + 1]
    }

    fn cover(&mut self, col: usize) {
        let (l, r) = (self.left[col], self.right[col]);
        self.right[l] = r;
        self.left[r] = l;
        let mut i = self.down[col];
        while i != col {
            for j in self.row(i) {
                if j != i {
                    let (u, d) = (self.up[j], self.down[j]);
                    self.down[u] = d;
                    self.up[d] = u;
                    self.len[self.top[j]] -= 1;
                }
            }
            i = self.down[i];
        }
    }

    fn uncover(&mut self, col: usize) {
        let mut i = self.up[col];
        while i != col {
            for j in self.row(i).rev() {
                if j != i {
                    let (u, d) = (self.up[j], self.down[j]);
                    self.down[u] = j;
                    self.up[d] = j;
                    self.len[self.top[j]] += 1;
                }
            }
            i = self.up[i];
        }
        let (l, r) = (self.left[col], self.right[col]);
        self.right[l] = col;
        self.left[r] = col;
    }

    /// Runs the search, calling `visit` with the option indices of every
    /// solution (in choice order). `visit` returns `false` to stop. At most
    /// `budget` nodes are expanded.
    pub fn search<F: FnMut(&[usize]) -> bool>(&mut self, budget: u64, mut visit: F) -> Run {
        let mut state = State { nodes: 0, budget, partial: Vec::new() };
        let active: Vec<u32> = (0..self.sym.items.len() as u32).collect();
        let end = self.recurse(&mut state, &active, &mut visit);
        Run { end, nodes: state.nodes }
    }

    /// `active` lists the permutations fixing every chosen option.
    fn recurse<F: FnMut(&[usize]) -> bool>(&mut self, st: &mut State, active: &[u32], visit: &mut F) -> End {
        if st.nodes >= st.budget {
            return End::Budget;
        }
        st.nodes += 1;
        if self.right[0] == 0 {
            return if visit(&st.partial) { End::Exhausted } else { End::Halted };
        }
        let mut best = self.right[0];
        let mut c = self.right[best];
        while c != 0 && self.len[best] > 0 {
            if self.len[c] < self.len[best] {
                best = c;
            }
            c = self.right[c];
        }
        if self.len[best] == 0 {
            return End::Exhausted;
        }
        let mut tried = Vec::new();
        self.cover(best);
        let mut i = self.down[best];
        let mut end = End::Exhausted;
        while i != best {
            let k = self.owner[i];
            let child: Vec<u32> = if active.is_empty() {
                Vec::new()
            } else {
                // an image of a refuted option under a permutation fixing the
                // chosen options is refuted too
                let skip = active.iter().any(|&s| self.tried[self.sym.options[s as usize][k] as usize]);
                self.tried[k] = true;
                tried.push(k);
                if skip {
                    i = self.down[i];
                    continue;
                }
                active.iter().copied().filter(|&s| self.sym.options[s as usize][k] as usize == k).collect()
            };
            st.partial.push(k);
            for j in self.row(i) {
                if j != i {
                    self.cover(self.top[j]);
                }
            }
            end = self.recurse(st, &child, visit);
            for j in self.row(i).rev() {
                if j != i {
                    self.uncover(self.top[j]);
                }
            }
            st.partial.pop();
            if end != End::Exhausted {
                break;
            }
            i = self.down[i];
        }
        self.uncover(best);
        for k in tried {
            self.tried[k] = false;
        }
        end
    }
}

struct State {
    nodes: u64,
    budget: u64,
    partial: Vec<usize>,
}
