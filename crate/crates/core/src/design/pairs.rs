/// Pair multiplicities over points `0..n`, stored as a packed upper
/// triangle. Pair `{i, j}` with `i < j` lives at `j(j−1)/2 + i`.
#[derive(Clone, Debug)]
pub(crate) struct PairCounts {
    n: usize,
    counts: Vec<u32>,
}

impl PairCounts {
    pub fn new(n: usize) -> Self {
        PairCounts { n, counts: vec![0; n * n.saturating_sub(1) / 2] }
    }

    #[inline]
    pub fn index(i: usize, j: usize) -> usize {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        j * (j - 1) / 2 + i
    }

    pub fn add_block(&mut self, block: &[usize]) {
        for (a, &i) in block.iter().enumerate() {
            for &j in &block[a + 1..] {
                self.counts[Self::index(i, j)] += 1;
            }
        }
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.counts[Self::index(i, j)]
    }

    /// All pairs `(i, j)`, `i < j`, in lexicographic order.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> {
        let n = self.n;
        (0..n).flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
    }
}
