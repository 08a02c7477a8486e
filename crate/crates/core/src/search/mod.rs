//! Exact odd cover numbers by backtracking over vertex labels.
//!
//! A cover by `k` bicliques is the same thing as a labeling of the vertices
//! by strings in `{0, 1, ε}^k`: coordinate `j` says whether the vertex sits
//! in `X_j` (0), in `Y_j` (1) or outside biclique `j` (ε). Two vertices are
//! covered an odd number of times exactly when their labels *clash* (one has
//! 0 and the other 1) in an odd number of coordinates. Equal labels never
//! clash, so nonadjacent twins may share a label.
//!
//! The search assigns labels vertex by vertex with forward checking: every
//! unassigned vertex keeps a bitset of labels still consistent with all
//! assigned neighbors and non-neighbors. Coordinates are interchangeable and
//! each may have its sides swapped, so a new label is only tried in a
//! canonical form: within every run of coordinates whose columns are equal
//! so far its symbols are sorted (`0 < 1 < ε`), and in the run of unused
//! coordinates it contains no `1`.

pub mod pairs;

use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use crate::bits::BitVec;
use crate::cover::{lower_bound, Biclique, OddCover};
use crate::error::{Error, Result};
use crate::graph::Graph;

pub use pairs::{pairs_search, PairsSearch};

/// Largest `k` the label search accepts (`3^k` labels per vertex).
pub const MAX_SEARCH_K: usize = 8;

const TIME_CHECK_INTERVAL: u64 = 1 << 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Symbol {
    Zero,
    One,
    Eps,
}

impl Symbol {
    fn from_digit(d: usize) -> Symbol {
        match d {
            0 => Symbol::Zero,
            1 => Symbol::One,
            _ => Symbol::Eps,
        }
    }

    fn as_char(self) -> char {
        match self {
            Symbol::Zero => '0',
            Symbol::One => '1',
            Symbol::Eps => 'e',
        }
    }
}

/// A string over `{0, 1, ε}`, one symbol per biclique.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    symbols: Vec<Symbol>,
}

impl Label {
    pub fn new(symbols: Vec<Symbol>) -> Self {
        Self { symbols }
    }

    /// The all-ε label of length `k`.
    pub fn blank(k: usize) -> Self {
        Self {
            symbols: vec![Symbol::Eps; k],
        }
    }

    pub fn k(&self) -> usize {
        self.symbols.len()
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    /// Number of coordinates where one label has 0 and the other 1.
    pub fn clash(&self, other: &Label) -> usize {
        self.symbols
            .iter()
            .zip(&other.symbols)
            .filter(|(a, b)| {
                matches!(
                    (a, b),
                    (Symbol::Zero, Symbol::One) | (Symbol::One, Symbol::Zero)
                )
            })
            .count()
    }

    /// Labeled vertices are adjacent iff their clash count is odd.
    pub fn adjacent(&self, other: &Label) -> bool {
        self.clash(other) % 2 == 1
    }

    fn from_index(index: usize, k: usize) -> Label {
        let mut symbols = vec![Symbol::Eps; k];
        let mut rest = index;
        for s in symbols.iter_mut().rev() {
            *s = Symbol::from_digit(rest % 3);
            rest /= 3;
        }
        Label { symbols }
    }
}

impl FromStr for Label {
    type Err = Error;

    /// Accepts `0`, `1`, and any of `e`, `E`, `ε`, `*` for the blank symbol.
    fn from_str(s: &str) -> Result<Label> {
        let symbols = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(Symbol::Zero),
                '1' => Ok(Symbol::One),
                'e' | 'E' | 'ε' | '*' => Ok(Symbol::Eps),
                other => Err(Error::BadLabel(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Label { symbols })
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.symbols {
            write!(f, "{}", s.as_char())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Parses a whitespace- or comma-separated list of labels.
pub fn parse_labels(text: &str) -> Result<Vec<Label>> {
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|s| !s.is_empty())
        .map(str::parse)
        .collect()
}

fn common_k(labels: &[Label]) -> Result<usize> {
    let k = labels.first().map_or(0, Label::k);
    if let Some(bad) = labels.iter().find(|l| l.k() != k) {
        return Err(Error::MixedLabelLength(k, bad.k()));
    }
    Ok(k)
}

/// The graph on `labels` where two labels are adjacent iff they clash an
/// odd number of times (an induced subgraph of `B_k`).
pub fn label_graph(labels: &[Label]) -> Result<Graph> {
    common_k(labels)?;
    let n = labels.len();
    let rows = labels
        .iter()
        .map(|a| {
            BitVec::from_indices(
                n,
                labels
                    .iter()
                    .enumerate()
                    .filter(|(_, b)| a.adjacent(b))
                    .map(|(j, _)| j),
            )
        })
        .collect();
    Graph::from_adjacency(rows)
}

/// `k` bicliques read off the labels: coordinate `j` equal to 0 puts the
/// vertex in `X_j`, 1 in `Y_j`.
pub fn labeling_to_cover(labels: &[Label]) -> Result<OddCover> {
    let k = common_k(labels)?;
    let n = labels.len();
    let bicliques = (0..k)
        .map(|j| {
            let side = |sym: Symbol| {
                BitVec::from_indices(
                    n,
                    labels
                        .iter()
                        .enumerate()
                        .filter(|(_, l)| l.symbols[j] == sym)
                        .map(|(v, _)| v),
                )
            };
            Biclique::from_sets(side(Symbol::Zero), side(Symbol::One))
        })
        .collect::<Result<Vec<_>>>()?;
    OddCover::new(n, bicliques)
}

/// Inverse of [`labeling_to_cover`].
pub fn cover_to_labels(cover: &OddCover) -> Vec<Label> {
    (0..cover.n())
        .map(|v| Label {
            symbols: cover
                .bicliques()
                .iter()
                .map(|b| {
                    if b.x().get(v) {
                        Symbol::Zero
                    } else if b.y().get(v) {
                        Symbol::One
                    } else {
                        Symbol::Eps
                    }
                })
                .collect(),
        })
        .collect()
}

/// Knobs shared by the searches.
#[derive(Clone, Debug)]
pub struct SearchOptions {
    /// Wall-clock budget; `None` searches to exhaustion.
    pub budget: Option<Duration>,
    /// Worker threads for the label search (at least 1).
    pub threads: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        Self {
            budget: None,
            threads: 1,
        }
    }
}

impl SearchOptions {
    pub fn with_budget(budget: Duration) -> Self {
        Self {
            budget: Some(budget),
            ..Self::default()
        }
    }

    pub fn threads(mut self, threads: usize) -> Self {
        self.threads = threads.max(1);
        self
    }
}

/// Outcome of [`has_cover_of_size`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CoverSearch {
    /// A labeling whose odd-clash graph is exactly the target.
    Yes(Vec<Label>),
    /// Exhaustively refuted.
    No,
    /// Budget ran out before the search finished.
    Timeout,
}

/// Decides whether `g` has an odd cover with `k` bicliques.
///
/// Vertices are labeled in degree-descending order (ties by index) and
/// labels are tried in lexicographic order, so the witness does not depend
/// on the thread count. Nonadjacent twins are collapsed before searching and
/// share their representative's label.
pub fn has_cover_of_size(g: &Graph, k: usize, opts: &SearchOptions) -> Result<CoverSearch> {
    let deadline = opts.budget.map(|b| Instant::now() + b);
    has_cover_until(g, k, deadline, opts.threads.max(1))
}

fn has_cover_until(
    g: &Graph,
    k: usize,
    deadline: Option<Instant>,
    threads: usize,
) -> Result<CoverSearch> {
    if k > MAX_SEARCH_K {
        return Err(Error::InvalidParameter(format!(
            "k = {k} exceeds the label search limit {MAX_SEARCH_K}"
        )));
    }
    let (reduced, rep_of) = collapse_nonadjacent_twins(g);
    let space = LabelSpace::new(k);
    let problem = Problem::new(&reduced, &space);
    let outcome = problem.solve(deadline, threads);
    Ok(match outcome {
        Outcome::Found(indices) => {
            let labels = rep_of
                .iter()
                .map(|&r| Label::from_index(indices[r], k))
                .collect();
            CoverSearch::Yes(labels)
        }
        Outcome::Exhausted => CoverSearch::No,
        Outcome::TimedOut => CoverSearch::Timeout,
    })
}

/// Exact odd cover number with a witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Exact {
    pub value: usize,
    pub witness: OddCover,
    pub labels: Vec<Label>,
}

/// Minimum odd cover size: tries `k = lower_bound(g), lower_bound(g) + 1, …`
/// until a cover is found. A timeout surfaces as [`Error::Timeout`] with the
/// bounds established so far.
pub fn b2_exact(g: &Graph, opts: &SearchOptions) -> Result<Exact> {
    match b2_bounded(g, usize::MAX, opts)? {
        Some(exact) => Ok(exact),
        None => unreachable!("star cover bounds the search"),
    }
}

/// Like [`b2_exact`] but gives up after refuting `max_k`; `Ok(None)` means
/// `b₂(g) > max_k`.
pub fn b2_bounded(g: &Graph, max_k: usize, opts: &SearchOptions) -> Result<Option<Exact>> {
    let start = Instant::now();
    let deadline = opts.budget.map(|b| start + b);
    let stars = star_cover(g);
    let lb = lower_bound(g).value;
    let mut k = lb;
    loop {
        if k > max_k {
            return Ok(None);
        }
        if k >= stars.len() {
            // Every smaller size has been refuted (or lb already meets it).
            let labels = cover_to_labels(&stars);
            return Ok(Some(Exact {
                value: stars.len(),
                witness: stars,
                labels,
            }));
        }
        match has_cover_until(g, k, deadline, opts.threads.max(1)) {
            Ok(CoverSearch::Yes(labels)) => {
                let witness = labeling_to_cover(&labels)?;
                return Ok(Some(Exact {
                    value: k,
                    witness,
                    labels,
                }));
            }
            Ok(CoverSearch::No) => k += 1,
            Ok(CoverSearch::Timeout) => {
                return Err(Error::Timeout {
                    elapsed: start.elapsed(),
                    lower: k,
                    upper: stars.len(),
                })
            }
            Err(Error::InvalidParameter(_)) => {
                return Err(Error::Timeout {
                    elapsed: start.elapsed(),
                    lower: k,
                    upper: stars.len(),
                })
            }
            Err(e) => return Err(e),
        }
    }
}

/// One star per vertex with a later neighbor: `({v}, {w > v : w ~ v})`.
pub fn star_cover(g: &Graph) -> OddCover {
    let n = g.n();
    let bicliques = (0..n)
        .filter_map(|v| {
            let later = BitVec::from_indices(n, g.neighbors(v).ones_iter().filter(|&w| w > v));
            (!later.is_zero()).then(|| {
                Biclique::from_sets(BitVec::from_indices(n, [v]), later).expect("disjoint sides")
            })
        })
        .collect();
    OddCover::new(n, bicliques).expect("host size matches")
}

/// Keeps the first vertex of each class of equal open neighborhoods.
/// Returns the reduced graph and, for every original vertex, the index of
/// its representative in the reduced graph.
fn collapse_nonadjacent_twins(g: &Graph) -> (Graph, Vec<usize>) {
    let n = g.n();
    let mut reps: Vec<usize> = Vec::new();
    let mut rep_of = vec![0; n];
    for v in 0..n {
        match reps.iter().position(|&r| g.neighbors(r) == g.neighbors(v)) {
            Some(i) => rep_of[v] = i,
            None => {
                rep_of[v] = reps.len();
                reps.push(v);
            }
        }
    }
    let reduced = g.induced_subgraph(&reps).expect("representatives in range");
    (reduced, rep_of)
}

/// All `3^k` labels with their clash tables, indexed lexicographically.
struct LabelSpace {
    k: usize,
    count: usize,
    words: usize,
    symbols: Vec<Vec<Symbol>>,
    /// `odd[t]`: labels clashing oddly with `t`; `even[t]` the rest.
    odd: Vec<Vec<u64>>,
    even: Vec<Vec<u64>>,
}

impl LabelSpace {
    fn new(k: usize) -> Self {
        let count = 3usize.pow(k as u32);
        let words = count.div_ceil(64);
        let symbols: Vec<Vec<Symbol>> = (0..count)
            .map(|t| Label::from_index(t, k).symbols)
            .collect();
        let masks: Vec<(u32, u32)> = symbols
            .iter()
            .map(|s| {
                let mut x = 0u32;
                let mut y = 0u32;
                for (p, sym) in s.iter().enumerate() {
                    match sym {
                        Symbol::Zero => x |= 1 << p,
                        Symbol::One => y |= 1 << p,
                        Symbol::Eps => {}
                    }
                }
                (x, y)
            })
            .collect();
        let mut odd = vec![vec![0u64; words]; count];
        let mut even = vec![vec![0u64; words]; count];
        for (a, &(xa, ya)) in masks.iter().enumerate() {
            for (b, &(xb, yb)) in masks.iter().enumerate() {
                let clash = ((xa & yb) | (ya & xb)).count_ones();
                let table = if clash % 2 == 1 { &mut odd } else { &mut even };
                table[a][b / 64] |= 1 << (b % 64);
            }
        }
        Self {
            k,
            count,
            words,
            symbols,
            odd,
            even,
        }
    }
}

/// Coordinate partition: `breaks` bit `p` marks the first coordinate of a
/// run of equal columns; `free` marks coordinates whose column is all ε.
#[derive(Clone, Copy)]
struct Classes {
    breaks: u32,
    free: u32,
}

impl Classes {
    fn initial(k: usize) -> Self {
        Self {
            breaks: 1,
            free: if k == 0 { 0 } else { (1u32 << k) - 1 },
        }
    }

    fn admits(&self, symbols: &[Symbol]) -> bool {
        let mut prev = Symbol::Zero;
        for (p, &s) in symbols.iter().enumerate() {
            if self.breaks >> p & 1 == 1 {
                prev = Symbol::Zero;
            }
            if s < prev || (self.free >> p & 1 == 1 && s == Symbol::One) {
                return false;
            }
            prev = s;
        }
        true
    }

    fn refine(&self, symbols: &[Symbol]) -> Self {
        let mut breaks = self.breaks;
        let mut free = self.free;
        for (p, &s) in symbols.iter().enumerate() {
            if p > 0 && s != symbols[p - 1] {
                breaks |= 1 << p;
            }
            if s != Symbol::Eps {
                free &= !(1 << p);
            }
        }
        Self { breaks, free }
    }
}

enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    TimedOut,
}

struct Problem<'a> {
    space: &'a LabelSpace,
    n: usize,
    /// Vertices in assignment order.
    order: Vec<usize>,
    /// `adjacent[i][j]` for positions in `order`.
    adjacent: Vec<Vec<bool>>,
}

/// A partial assignment of the first `depth` vertices in `order`.
#[derive(Clone)]
struct Node {
    depth: usize,
    labels: Vec<usize>,
    /// Domains of all positions, `words` each.
    domains: Vec<u64>,
    classes: Classes,
}

impl<'a> Problem<'a> {
    fn new(g: &Graph, space: &'a LabelSpace) -> Self {
        let n = g.n();
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
        let adjacent = order
            .iter()
            .map(|&u| order.iter().map(|&v| g.has_edge(u, v)).collect())
            .collect();
        Self {
            space,
            n,
            order,
            adjacent,
        }
    }

    fn root(&self) -> Node {
        let w = self.space.words;
        let mut full = vec![0u64; w];
        for t in 0..self.space.count {
            full[t / 64] |= 1 << (t % 64);
        }
        Node {
            depth: 0,
            labels: Vec::with_capacity(self.n),
            domains: full.repeat(self.n),
            classes: Classes::initial(self.space.k),
        }
    }

    /// Candidate labels at `node`, in lexicographic order, that are canonical.
    fn candidates<'n>(&'n self, node: &'n Node) -> impl Iterator<Item = usize> + 'n {
        let w = self.space.words;
        let dom = &node.domains[node.depth * w..(node.depth + 1) * w];
        dom.iter()
            .enumerate()
            .flat_map(|(i, &word)| {
                let mut bits = word;
                std::iter::from_fn(move || {
                    if bits == 0 {
                        return None;
                    }
                    let tz = bits.trailing_zeros() as usize;
                    bits &= bits - 1;
                    Some(i * 64 + tz)
                })
            })
            .filter(move |&t| node.classes.admits(&self.space.symbols[t]))
    }

    /// Assigns label `t` to the next vertex; `None` if some later domain empties.
    fn child(&self, node: &Node, t: usize) -> Option<Node> {
        let w = self.space.words;
        let d = node.depth;
        let mut domains = node.domains.clone();
        for j in d + 1..self.n {
            let table = if self.adjacent[d][j] {
                &self.space.odd[t]
            } else {
                &self.space.even[t]
            };
            let dom = &mut domains[j * w..(j + 1) * w];
            let mut any = 0u64;
            for (a, b) in dom.iter_mut().zip(table) {
                *a &= b;
                any |= *a;
            }
            if any == 0 {
                return None;
            }
        }
        let mut labels = node.labels.clone();
        labels.push(t);
        Some(Node {
            depth: d + 1,
            labels,
            domains,
            classes: node.classes.refine(&self.space.symbols[t]),
        })
    }

    /// Nodes at depth `min(2, n)` in search order.
    fn frontier(&self) -> Vec<Node> {
        let target = self.n.min(2);
        let mut out = Vec::new();
        let mut stack = vec![self.root()];
        // Depth-first with children pushed in reverse to keep lexicographic order.
        while let Some(node) = stack.pop() {
            if node.depth == target {
                out.push(node);
                continue;
            }
            let children: Vec<Node> = self
                .candidates(&node)
                .filter_map(|t| self.child(&node, t))
                .collect();
            stack.extend(children.into_iter().rev());
        }
        out
    }

    fn solve(&self, deadline: Option<Instant>, threads: usize) -> Outcome {
        let tasks = self.frontier();
        let best = AtomicUsize::new(usize::MAX);
        let next = AtomicUsize::new(0);
        let timed_out = AtomicBool::new(false);
        let found: Mutex<Vec<(usize, Vec<usize>)>> = Mutex::new(Vec::new());

        let worker = || {
            let mut nodes = 0u64;
            loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= tasks.len() || i > best.load(Ordering::Relaxed) {
                    return;
                }
                let mut ctx = DfsContext {
                    problem: self,
                    task: i,
                    best: &best,
                    timed_out: &timed_out,
                    deadline,
                    nodes: &mut nodes,
                };
                if let Some(sol) = ctx.dfs(tasks[i].clone()) {
                    best.fetch_min(i, Ordering::Relaxed);
                    found.lock().expect("no poisoned workers").push((i, sol));
                }
                if timed_out.load(Ordering::Relaxed) {
                    return;
                }
            }
        };

        if threads <= 1 || tasks.len() <= 1 {
            worker();
        } else {
            std::thread::scope(|s| {
                for _ in 0..threads.min(tasks.len()) {
                    s.spawn(worker);
                }
            });
        }

        let mut found = found.into_inner().expect("no poisoned workers");
        found.sort_by_key(|(i, _)| *i);
        match found.into_iter().next() {
            Some((_, positional)) => {
                let mut by_vertex = vec![0; self.n];
                for (pos, &t) in positional.iter().enumerate() {
                    by_vertex[self.order[pos]] = t;
                }
                Outcome::Found(by_vertex)
            }
            None if timed_out.load(Ordering::Relaxed) => Outcome::TimedOut,
            None => Outcome::Exhausted,
        }
    }
}

struct DfsContext<'p, 'a> {
    problem: &'p Problem<'a>,
    task: usize,
    best: &'p AtomicUsize,
    timed_out: &'p AtomicBool,
    deadline: Option<Instant>,
    nodes: &'p mut u64,
}

impl DfsContext<'_, '_> {
    fn should_stop(&mut self) -> bool {
        *self.nodes += 1;
        if *self.nodes % TIME_CHECK_INTERVAL == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out.store(true, Ordering::Relaxed);
                }
            }
        }
        self.timed_out.load(Ordering::Relaxed) || self.best.load(Ordering::Relaxed) < self.task
    }

    fn dfs(&mut self, node: Node) -> Option<Vec<usize>> {
        if node.depth == self.problem.n {
            return Some(node.labels);
        }
        if self.should_stop() {
            return None;
        }
        let candidates: Vec<usize> = self.problem.candidates(&node).collect();
        for t in candidates {
            if let Some(child) = self.problem.child(&node, t) {
                if let Some(sol) = self.dfs(child) {
                    return Some(sol);
                }
                if self.timed_out.load(Ordering::Relaxed) {
                    return None;
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labels(s: &str) -> Vec<Label> {
        parse_labels(s).unwrap()
    }

    #[test]
    fn label_parsing_and_clash() {
        let a: Label = "0ε1e".parse().unwrap();
        assert_eq!(a.to_string(), "0e1e");
        let b: Label = "1*0e".parse().unwrap();
        assert_eq!(a.clash(&b), 2);
        assert!(!a.adjacent(&b));
        assert_eq!("0x".parse::<Label>(), Err(Error::BadLabel('x')));
    }

    #[test]
    fn labeling_to_cover_examples() {
        let c = labeling_to_cover(&labels("0 1")).unwrap();
        assert_eq!(c, OddCover::from_sides(2, &[(vec![0], vec![1])]).unwrap());
        let c = labeling_to_cover(&labels("e")).unwrap();
        assert_eq!(c.len(), 1);
        assert!(c.verify(&Graph::empty(1).unwrap()).unwrap().valid);
        assert_eq!(
            labeling_to_cover(&labels("01 0")),
            Err(Error::MixedLabelLength(2, 1))
        );
    }

    #[test]
    fn cover_labels_round_trip() {
        let c = crate::constructions::odd_clique_cover(3).unwrap();
        assert_eq!(labeling_to_cover(&cover_to_labels(&c)).unwrap(), c);
        let g = label_graph(&cover_to_labels(&c)).unwrap();
        assert_eq!(g, Graph::complete(7).unwrap());
    }

    #[test]
    fn small_decisions() {
        let opts = SearchOptions::default();
        let k5 = Graph::complete(5).unwrap();
        match has_cover_of_size(&k5, 3, &opts).unwrap() {
            CoverSearch::Yes(l) => {
                assert!(labeling_to_cover(&l).unwrap().verify(&k5).unwrap().valid)
            }
            other => panic!("expected a witness, got {other:?}"),
        }
        assert_eq!(has_cover_of_size(&k5, 2, &opts).unwrap(), CoverSearch::No);
        let k4 = Graph::complete(4).unwrap();
        assert_eq!(has_cover_of_size(&k4, 2, &opts).unwrap(), CoverSearch::No);
        assert_eq!(
            has_cover_of_size(&Graph::empty(3).unwrap(), 0, &opts).unwrap(),
            CoverSearch::Yes(vec![Label::blank(0); 3])
        );
        assert!(has_cover_of_size(&k4, MAX_SEARCH_K + 1, &opts).is_err());
    }

    #[test]
    fn exact_examples() {
        let opts = SearchOptions::default();
        for (g, want) in [
            (Graph::complete(3).unwrap(), 2),
            (Graph::cycle(5).unwrap(), 3),
            (Graph::complete(7).unwrap(), 4),
        ] {
            let ex = b2_exact(&g, &opts).unwrap();
            assert_eq!(ex.value, want);
            assert!(ex.witness.verify(&g).unwrap().valid);
        }
        let ex = b2_exact(&Graph::empty(4).unwrap(), &opts).unwrap();
        assert_eq!(ex.value, 0);
    }

    #[test]
    fn nonadjacent_twins_share_labels() {
        // K_{2,3}: both sides are twin classes.
        let g = Graph::from_edges(5, &[(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]).unwrap();
        let ex = b2_exact(&g, &SearchOptions::default()).unwrap();
        assert_eq!(ex.value, 1);
        assert!(ex.witness.verify(&g).unwrap().valid);
    }

    #[test]
    fn threads_do_not_change_witness() {
        let g = Graph::complete(7).unwrap();
        let one = has_cover_of_size(&g, 4, &SearchOptions::default()).unwrap();
        let many = has_cover_of_size(&g, 4, &SearchOptions::default().threads(4)).unwrap();
        assert_eq!(one, many);
    }

    #[test]
    fn star_cover_is_valid() {
        let g = Graph::cycle(6).unwrap();
        let s = star_cover(&g);
        assert_eq!(s.len(), 5);
        assert!(s.verify(&g).unwrap().valid);
    }

    #[test]
    fn zero_budget_times_out_or_finishes() {
        let g = Graph::complete(6).unwrap();
        let r = has_cover_of_size(&g, 3, &SearchOptions::with_budget(Duration::ZERO)).unwrap();
        assert!(matches!(r, CoverSearch::No | CoverSearch::Timeout));
    }
}
