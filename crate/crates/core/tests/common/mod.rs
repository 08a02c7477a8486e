//! Helpers shared by the integration tests: seeded random graphs and an
//! independent b₂ oracle.
#![allow(dead_code)]

use std::collections::{HashSet, VecDeque};

use oddcover::Graph;
use rand::Rng;

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Position of pair `(u, v)`, `u < v`, in the edge bitmask.
pub fn pair_index(n: usize, u: usize, v: usize) -> usize {
    debug_assert!(u < v && v < n);
    u * (2 * n - u - 1) / 2 + (v - u - 1)
}

pub fn graph_mask(g: &Graph) -> u64 {
    g.edges().into_iter().fold(0, |m, (u, v)| {
        m | 1 << pair_index(g.n(), u.min(v), u.max(v))
    })
}

/// Edge masks of every biclique on `n` vertices, from all `3^n` side
/// assignments, deduplicated and without the empty one.
pub fn biclique_masks(n: usize) -> Vec<u64> {
    let mut out = HashSet::new();
    for code in 0..3usize.pow(n as u32) {
        let mut side = vec![0u8; n];
        let mut c = code;
        for s in side.iter_mut() {
            *s = (c % 3) as u8;
            c /= 3;
        }
        let mut mask = 0u64;
        for u in 0..n {
            for v in u + 1..n {
                if matches!((side[u], side[v]), (1, 2) | (2, 1)) {
                    mask |= 1 << pair_index(n, u, v);
                }
            }
        }
        if mask != 0 {
            out.insert(mask);
        }
    }
    let mut v: Vec<u64> = out.into_iter().collect();
    v.sort_unstable();
    v
}

/// Breadth-first search over edge sets: an odd cover of `G` is a set of
/// bicliques whose edge sets XOR to `E(G)`, so the BFS distance from the
/// empty graph is `b₂`. Feasible for `n ≤ 6` (2^15 states).
pub struct BfsOracle {
    pub n: usize,
    dist: Vec<u8>,
}

impl BfsOracle {
    pub fn new(n: usize) -> Self {
        assert!(n <= 6);
        let pairs = n * n.saturating_sub(1) / 2;
        let gens = biclique_masks(n);
        let mut dist = vec![u8::MAX; 1 << pairs];
        dist[0] = 0;
        let mut queue = VecDeque::from([0u64]);
        while let Some(m) = queue.pop_front() {
            let d = dist[m as usize];
            for &g in &gens {
                let next = (m ^ g) as usize;
                if dist[next] == u8::MAX {
                    dist[next] = d + 1;
                    queue.push_back(next as u64);
                }
            }
        }
        Self { n, dist }
    }

    pub fn b2(&self, g: &Graph) -> usize {
        assert_eq!(g.n(), self.n);
        self.dist[graph_mask(g) as usize] as usize
    }
}

/// Whether `g` has an odd cover with at most three bicliques, by meeting
/// one biclique against the set of XORs of at most two.
pub struct ThreeOracle {
    pub n: usize,
    gens: Vec<u64>,
    two: HashSet<u64>,
}

impl ThreeOracle {
    pub fn new(n: usize) -> Self {
        let gens = biclique_masks(n);
        let mut two: HashSet<u64> = HashSet::new();
        two.insert(0);
        for (i, &a) in gens.iter().enumerate() {
            two.insert(a);
            for &b in &gens[i + 1..] {
                two.insert(a ^ b);
            }
        }
        Self { n, gens, two }
    }

    /// Minimum cover size if it is at most 3.
    pub fn b2_at_most_three(&self, g: &Graph) -> Option<usize> {
        let m = graph_mask(g);
        if m == 0 {
            return Some(0);
        }
        if self.gens.binary_search(&m).is_ok() {
            return Some(1);
        }
        if self.two.contains(&m) {
            return Some(2);
        }
        self.gens
            .iter()
            .any(|&b| self.two.contains(&(m ^ b)))
            .then_some(3)
    }
}
