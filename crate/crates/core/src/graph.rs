//! Simple undirected graphs stored as rows of an F₂ adjacency matrix.

use std::fmt::Write as _;

use crate::bits::{BitVec, MAX_BITS};
use crate::error::{Error, Result};
use crate::f2::F2Matrix;

/// Kernel dimension up to which [`Graph::even_cores`] enumerates every core.
pub const DEFAULT_EVEN_CORE_CAP: usize = 20;

/// A simple graph on vertices `0..n`. Row `i` of `adj` is the open
/// neighborhood of vertex `i`; the matrix is symmetric with zero diagonal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<BitVec>,
}

/// Named graph families accepted by [`Graph::build`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphKind {
    Complete(usize),
    Cycle(usize),
    Empty(usize),
    EdgeList {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

/// Result of [`Graph::even_cores`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EvenCores {
    /// Dimension of the kernel of the adjacency matrix.
    pub dimension: usize,
    /// All even cores, or only a kernel basis when `truncated`.
    pub sets: Vec<BitVec>,
    pub truncated: bool,
}

impl Graph {
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_BITS {
            return Err(Error::TooLarge(n));
        }
        Ok(Self {
            adj: vec![BitVec::zeros(n); n],
        })
    }

    pub fn complete(n: usize) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for (i, row) in g.adj.iter_mut().enumerate() {
            *row = BitVec::ones(n);
            row.clear(i);
        }
        Ok(g)
    }

    /// Cycle with edges `{i, i+1 mod n}`.
    pub fn cycle(n: usize) -> Result<Self> {
        if n < 3 {
            return Err(Error::CycleTooShort(n));
        }
        let mut g = Self::empty(n)?;
        for i in 0..n {
            g.toggle_edge(i, (i + 1) % n);
        }
        Ok(g)
    }

    /// Graph from an edge list; rejects loops, duplicates and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Loop(u));
            }
            if g.has_edge(u, v) {
                return Err(Error::DuplicateEdge(u.min(v), u.max(v)));
            }
            g.toggle_edge(u, v);
        }
        Ok(g)
    }

    /// Builds a named graph.
    pub fn build(kind: &GraphKind) -> Result<Self> {
        match kind {
            GraphKind::Complete(n) => Self::complete(*n),
            GraphKind::Cycle(n) => Self::cycle(*n),
            GraphKind::Empty(n) => Self::empty(*n),
            GraphKind::EdgeList { n, edges } => Self::from_edges(*n, edges),
        }
    }

    /// Graph given by its adjacency rows. Rows must be symmetric with zero diagonal.
    pub fn from_adjacency(rows: Vec<BitVec>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_BITS {
            return Err(Error::TooLarge(n));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: row.len(),
                });
            }
            if row.get(i) {
                return Err(Error::Loop(i));
            }
            for j in row.ones_iter() {
                if !rows[j].get(i) {
                    return Err(Error::Precondition(format!(
                        "adjacency is not symmetric at ({i}, {j})"
                    )));
                }
            }
        }
        Ok(Self { adj: rows })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].get(v)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &BitVec {
        &self.adj[v]
    }

    /// Closed neighborhood N[v].
    pub fn closed_neighbors(&self, v: usize) -> BitVec {
        let mut row = self.adj[v].clone();
        row.set(v);
        row
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(BitVec::count_ones).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.ones_iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Number of edges with both endpoints in `set`.
    pub fn induced_edge_count(&self, set: &BitVec) -> usize {
        set.ones_iter()
            .map(|v| self.adj[v].and_count(set))
            .sum::<usize>()
            / 2
    }

    pub fn adjacency(&self) -> F2Matrix {
        F2Matrix::from_rows(self.n(), self.adj.clone()).expect("vertex count within cap")
    }

    /// Rank of the adjacency matrix over F₂.
    pub fn rank(&self) -> usize {
        crate::f2::rank_of_rows(self.adj.clone())
    }

    pub(crate) fn toggle_edge(&mut self, u: usize, v: usize) {
        debug_assert_ne!(u, v);
        self.adj[u].flip(v);
        self.adj[v].flip(u);
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n() {
            Err(Error::IndexOutOfRange {
                index: v,
                size: self.n(),
            })
        } else {
            Ok(())
        }
    }

    /// Subgraph induced on `vertices`, relabeled `0..vertices.len()` in the given order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<Graph> {
        for &v in vertices {
            self.check_vertex(v)?;
        }
        let k = vertices.len();
        let adj = vertices
            .iter()
            .map(|&u| {
                BitVec::from_indices(
                    k,
                    vertices
                        .iter()
                        .enumerate()
                        .filter(|(_, &v)| self.has_edge(u, v))
                        .map(|(j, _)| j),
                )
            })
            .collect();
        Ok(Graph { adj })
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = self
            .adj
            .iter()
            .enumerate()
            .map(|(i, row)| {
                let mut r = row.not();
                r.clear(i);
                r
            })
            .collect();
        debug_assert_eq!(n, self.n());
        Graph { adj }
    }

    /// Disjoint union with vertex blocks concatenated in input order.
    pub fn disjoint_union(graphs: &[Graph]) -> Result<Graph> {
        let n: usize = graphs.iter().map(Graph::n).sum();
        if n > MAX_BITS {
            return Err(Error::TooLarge(n));
        }
        let mut adj = Vec::with_capacity(n);
        let mut offset = 0;
        for g in graphs {
            adj.extend(g.adj.iter().map(|row| row.shifted(offset, n)));
            offset += g.n();
        }
        Ok(Graph { adj })
    }

    /// Edge-wise symmetric difference; the smaller graph is padded with
    /// isolated vertices so both share the universe `0..max(n)`.
    pub fn sym_diff(g: &Graph, h: &Graph) -> Graph {
        let n = g.n().max(h.n());
        let adj = (0..n)
            .map(|i| {
                let a = g
                    .adj
                    .get(i)
                    .map_or_else(|| BitVec::zeros(n), |r| r.resized(n));
                let b = h
                    .adj
                    .get(i)
                    .map_or_else(|| BitVec::zeros(n), |r| r.resized(n));
                a.xor(&b)
            })
            .collect();
        Graph { adj }
    }

    /// Copy of `self` with extra isolated vertices appended up to `n`.
    pub fn padded(&self, n: usize) -> Graph {
        Graph::sym_diff(self, &Graph::empty(n.max(self.n())).expect("within cap"))
    }

    /// Even cores: nonempty vertex sets in which every vertex has an even
    /// number of neighbors. These are the nonzero vectors of the kernel of the
    /// adjacency matrix. When the kernel dimension exceeds `cap` only a basis
    /// is returned and `truncated` is set.
    pub fn even_cores(&self, cap: usize) -> EvenCores {
        let basis = self.adjacency().kernel_basis();
        let dimension = basis.len();
        if dimension > cap {
            return EvenCores {
                dimension,
                sets: basis,
                truncated: true,
            };
        }
        // Gray-code walk over all nonzero combinations.
        let mut sets = Vec::with_capacity((1usize << dimension) - 1);
        let mut current = BitVec::zeros(self.n());
        for i in 1..(1usize << dimension) {
            current.xor_assign(&basis[i.trailing_zeros() as usize]);
            sets.push(current.clone());
        }
        sets.sort();
        EvenCores {
            dimension,
            sets,
            truncated: false,
        }
    }

    /// Whether every vertex has an even number of neighbors in `set`,
    /// counted directly from neighborhoods.
    pub fn is_even_core(&self, set: &BitVec) -> bool {
        !set.is_zero() && self.adj.iter().all(|row| row.and_count(set) % 2 == 0)
    }

    /// Rank computed by peeling off a greedy matching of adjacent twins
    /// (`N[u] = N[v]`), each contributing 2, then eliminating what remains.
    pub fn rank_via_twins(&self) -> usize {
        let mut alive: Vec<usize> = (0..self.n()).collect();
        let mut matched_pairs = 0;
        loop {
            let sub = self.induced_subgraph(&alive).expect("vertices in range");
            let pairs = sub.adjacent_twin_matching();
            if pairs.is_empty() {
                return 2 * matched_pairs + sub.rank();
            }
            matched_pairs += pairs.len();
            let mut removed = vec![false; alive.len()];
            for (a, b) in pairs {
                removed[a] = true;
                removed[b] = true;
            }
            alive = alive
                .into_iter()
                .zip(removed)
                .filter(|(_, r)| !r)
                .map(|(v, _)| v)
                .collect();
        }
    }

    /// Maximal matching of adjacent twins, chosen greedily by lowest index.
    pub fn adjacent_twin_matching(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        let closed: Vec<BitVec> = (0..n).map(|v| self.closed_neighbors(v)).collect();
        let mut used = vec![false; n];
        let mut pairs = Vec::new();
        for u in 0..n {
            if used[u] {
                continue;
            }
            if let Some(v) = self.adj[u]
                .ones_iter()
                .find(|&v| v > u && !used[v] && closed[u] == closed[v])
            {
                used[u] = true;
                used[v] = true;
                pairs.push((u, v));
            }
        }
        pairs
    }

    /// Parses the edge-list text format: a header line `n <count>` followed
    /// by one `u v` pair per line. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut n = None;
        let mut g = Graph::empty(0)?;
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let parse_err = |message: String| Error::Parse {
                line: line_no,
                message,
            };
            let fields: Vec<&str> = line.split_whitespace().collect();
            match n {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(parse_err(format!(
                            "expected header `n <count>`, got {line:?}"
                        )));
                    }
                    let count: usize = fields[1]
                        .parse()
                        .map_err(|_| parse_err(format!("bad vertex count {:?}", fields[1])))?;
                    g = Graph::empty(count).map_err(|e| parse_err(e.to_string()))?;
                    n = Some(count);
                }
                Some(count) => {
                    if fields.len() != 2 {
                        return Err(parse_err(format!("expected `u v`, got {line:?}")));
                    }
                    let parse_v = |s: &str| {
                        s.parse::<usize>()
                            .map_err(|_| parse_err(format!("bad vertex {s:?}")))
                    };
                    let (u, v) = (parse_v(fields[0])?, parse_v(fields[1])?);
                    if u >= count || v >= count {
                        return Err(parse_err(format!(
                            "vertex {} out of range for n = {count}",
                            u.max(v)
                        )));
                    }
                    if u == v {
                        return Err(parse_err(format!("loop at vertex {u}")));
                    }
                    if g.has_edge(u, v) {
                        return Err(parse_err(format!("duplicate edge {u} {v}")));
                    }
                    g.toggle_edge(u, v);
                }
            }
        }
        if n.is_none() {
            return Err(Error::Parse {
                line: 0,
                message: "missing header `n <count>`".into(),
            });
        }
        Ok(g)
    }

    /// Serializes to the edge-list format, edges in lexicographic order.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.n());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n(),
            self.edges().collect::<Vec<_>>()
        )
    }
}
