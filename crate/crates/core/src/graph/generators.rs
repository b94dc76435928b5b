use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{Error, Result};

/// Edge list of the Sylvester graph (36 vertices, 5-regular, girth 5).
pub const SYLVESTER_EDGES: [(usize, usize); 90] = [
    (0, 1), (0, 3), (0, 11), (0, 19), (0, 27), (1, 4), (1, 12), (1, 20),
    (1, 28), (2, 4), (2, 5), (2, 14), (2, 22), (2, 30), (3, 5), (3, 6),
    (3, 23), (3, 31), (4, 7), (4, 15), (4, 32), (5, 8), (5, 16), (5, 24),
    (6, 7), (6, 12), (6, 21), (6, 34), (7, 8), (7, 13), (7, 26), (8, 9),
    (8, 18), (8, 27), (9, 10), (9, 19), (9, 28), (9, 35), (10, 12), (10, 13),
    (10, 16), (10, 31), (11, 13), (11, 17), (11, 24), (11, 32), (12, 14), (12, 25),
    (13, 22), (13, 33), (14, 17), (14, 27), (14, 35), (15, 16), (15, 19), (15, 29),
    (15, 34), (16, 17), (16, 20), (17, 21), (17, 26), (18, 20), (18, 21), (18, 25),
    (18, 32), (19, 21), (19, 22), (20, 23), (20, 33), (21, 30), (22, 23), (22, 25),
    (23, 26), (23, 35), (24, 25), (24, 28), (24, 34), (25, 29), (26, 28), (26, 29),
    (27, 29), (27, 33), (28, 30), (29, 31), (30, 31), (30, 33), (31, 32), (32, 35),
    (33, 34), (34, 35),
];

/// The cycle `C_n`, `n >= 3`, with edges `{i, i+1 mod n}`.
pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// The complete graph `K_n`, `n >= 1`.
pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidParameter("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// Vertex-disjoint union; `b`'s vertices are shifted by `a.order()`.
pub fn disjoint_union(a: &Graph, b: &Graph) -> Graph {
    let offset = a.order();
    let n = offset + b.order();
    Graph::from_edges(n, a.edges().chain(b.edges().map(|(u, v)| (u + offset, v + offset))))
        .expect("shifted edges stay in range")
}

/// `GP(n, k)`: outer cycle `0..n`, spokes `i -- n+i`, inner edges
/// `n+i -- n+(i+k mod n)`.
pub fn generalized_petersen(n: usize, k: usize) -> Result<Graph> {
    if n < 3 || k == 0 || 2 * k >= n {
        return Err(Error::InvalidParameter(format!("GP(n, k) needs n >= 3 and 1 <= k < n/2, got ({n}, {k})")));
    }
    let outer = (0..n).map(|i| (i, (i + 1) % n));
    let spokes = (0..n).map(|i| (i, n + i));
    let inner = (0..n).map(|i| (n + i, n + (i + k) % n));
    Graph::from_edges(2 * n, outer.chain(spokes).chain(inner))
}

pub fn petersen() -> Graph {
    generalized_petersen(5, 2).expect("valid parameters")
}

pub fn sylvester() -> Graph {
    Graph::from_edges(36, SYLVESTER_EDGES).expect("embedded edge list is valid")
}

/// The Hoffman–Singleton graph from five pentagons and five pentagrams.
///
/// Pentagon `h` has vertices `5h + j`, pentagram `i` has `25 + 5i + j`.
/// Vertex `j` of pentagon `h` is joined to vertex `h·i + j (mod 5)` of
/// pentagram `i`.
pub fn hoffman_singleton() -> Graph {
    let pentagon = |h: usize, j: usize| 5 * h + j;
    let pentagram = |i: usize, j: usize| 25 + 5 * i + j;
    let mut edges = Vec::with_capacity(175);
    for h in 0..5 {
        for j in 0..5 {
            edges.push((pentagon(h, j), pentagon(h, (j + 1) % 5)));
            edges.push((pentagram(h, j), pentagram(h, (j + 2) % 5)));
        }
    }
    for h in 0..5 {
        for j in 0..5 {
            for i in 0..5 {
                edges.push((pentagon(h, j), pentagram(i, (h * i + j) % 5)));
            }
        }
    }
    Graph::from_edges(50, edges).expect("construction stays in range")
}

/// Named generator with flat integer parameters.
///
/// Kinds: `cycle [n]`, `complete [n]`, `generalized_petersen [n, k]`,
/// `petersen`, `sylvester`, `hoffman_singleton`. Disjoint unions are
/// recursive and go through [`Generator::Union`].
pub fn make_graph(kind: &str, params: &[usize]) -> Result<Graph> {
    let arity = |k: usize| -> Result<()> {
        if params.len() == k {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("`{kind}` takes {k} parameter(s), got {}", params.len())))
        }
    };
    match kind {
        "cycle" => arity(1).and_then(|_| cycle(params[0])),
        "complete" => arity(1).and_then(|_| complete(params[0])),
        "generalized_petersen" | "gp" => arity(2).and_then(|_| generalized_petersen(params[0], params[1])),
        "petersen" => arity(0).map(|_| petersen()),
        "sylvester" => arity(0).map(|_| sylvester()),
        "hoffman_singleton" | "hs" => arity(0).map(|_| hoffman_singleton()),
        other => Err(Error::UnknownGenerator(other.to_string())),
    }
}

/// A graph description in the compact text form used on the command line:
/// `cycle:9`, `complete:4`, `gp:20,4`, `petersen`, `sylvester`, `hs`,
/// `random:22,3,7` and `union:cycle:5+cycle:6`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Generator {
    Cycle(usize),
    Complete(usize),
    GeneralizedPetersen(usize, usize),
    Petersen,
    Sylvester,
    HoffmanSingleton,
    Random { n: usize, delta: usize, seed: u64 },
    Union(Vec<Generator>),
}

impl Generator {
    pub fn build(&self) -> Result<Graph> {
        match self {
            Generator::Cycle(n) => cycle(*n),
            Generator::Complete(n) => complete(*n),
            Generator::GeneralizedPetersen(n, k) => generalized_petersen(*n, *k),
            Generator::Petersen => Ok(petersen()),
            Generator::Sylvester => Ok(sylvester()),
            Generator::HoffmanSingleton => Ok(hoffman_singleton()),
            Generator::Random { n, delta, seed } => crate::search::random_regular_girth5(*n, *delta, *seed),
            Generator::Union(parts) => {
                let mut acc = Graph::empty(0);
                for part in parts {
                    acc = disjoint_union(&acc, &part.build()?);
                }
                Ok(acc)
            }
        }
    }
}

fn int_list(s: &str) -> Result<Vec<u64>> {
    s.split(',')
        .map(|t| t.trim().parse::<u64>().map_err(|_| Error::InvalidParameter(format!("bad integer `{t}`"))))
        .collect()
}

impl FromStr for Generator {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (kind, args) = match s.split_once(':') {
            Some((k, a)) => (k, Some(a)),
            None => (s, None),
        };
        let nums = |want: usize| -> Result<Vec<u64>> {
            let a = args.ok_or_else(|| Error::InvalidParameter(format!("`{kind}` needs parameters")))?;
            let v = int_list(a)?;
            if v.len() != want {
                return Err(Error::InvalidParameter(format!("`{kind}` takes {want} parameter(s)")));
            }
            Ok(v)
        };
        let none = || -> Result<()> {
            match args {
                None => Ok(()),
                Some(_) => Err(Error::InvalidParameter(format!("`{kind}` takes no parameters"))),
            }
        };
        Ok(match kind {
            "cycle" | "C" => Generator::Cycle(nums(1)?[0] as usize),
            "complete" | "K" => Generator::Complete(nums(1)?[0] as usize),
            "gp" | "generalized_petersen" => {
                let v = nums(2)?;
                Generator::GeneralizedPetersen(v[0] as usize, v[1] as usize)
            }
            "petersen" => none().map(|_| Generator::Petersen)?,
            "sylvester" => none().map(|_| Generator::Sylvester)?,
            "hs" | "hoffman_singleton" | "hoffman-singleton" => none().map(|_| Generator::HoffmanSingleton)?,
            "random" => {
                let v = nums(3)?;
                Generator::Random { n: v[0] as usize, delta: v[1] as usize, seed: v[2] }
            }
            "union" => {
                let a = args.ok_or_else(|| Error::InvalidParameter("`union` needs operands".into()))?;
                Generator::Union(a.split('+').map(str::parse).collect::<Result<_>>()?)
            }
            other => return Err(Error::UnknownGenerator(other.to_string())),
        })
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Cycle(n) => write!(f, "cycle:{n}"),
            Generator::Complete(n) => write!(f, "complete:{n}"),
            Generator::GeneralizedPetersen(n, k) => write!(f, "gp:{n},{k}"),
            Generator::Petersen => write!(f, "petersen"),
            Generator::Sylvester => write!(f, "sylvester"),
            Generator::HoffmanSingleton => write!(f, "hs"),
            Generator::Random { n, delta, seed } => write!(f, "random:{n},{delta},{seed}"),
            Generator::Union(parts) => {
                write!(f, "union:")?;
                for (i, p) in parts.iter().enumerate() {
                    if i > 0 {
                        write!(f, "+")?;
                    }
                    write!(f, "{p}")?;
                }
                Ok(())
            }
        }
    }
}
