//! Bicliques, odd covers, and their certification.
//!
//! A biclique `(X, Y)` covers every pair split across `X` and `Y`. An odd
//! cover of `G` covers each edge an odd number of times and each nonedge an
//! even number of times.

use serde::{Deserialize, Serialize};

use crate::bits::{BitVec, MAX_BITS};
use crate::error::{Error, Result};
use crate::f2::F2Matrix;
use crate::graph::{Graph, DEFAULT_EVEN_CORE_CAP};

/// A complete bipartite graph given by two disjoint vertex sets. Either side
/// may be empty, in which case the biclique covers nothing.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Biclique {
    x: BitVec,
    y: BitVec,
}

impl Biclique {
    /// Biclique on a host of `n` vertices.
    pub fn new(n: usize, x: &[usize], y: &[usize]) -> Result<Self> {
        let side = |vs: &[usize]| -> Result<BitVec> {
            if let Some(&bad) = vs.iter().find(|&&v| v >= n) {
                return Err(Error::IndexOutOfRange {
                    index: bad,
                    size: n,
                });
            }
            Ok(BitVec::from_indices(n, vs.iter().copied()))
        };
        Self::from_sets(side(x)?, side(y)?)
    }

    pub fn from_sets(x: BitVec, y: BitVec) -> Result<Self> {
        if x.len() != y.len() {
            return Err(Error::SizeMismatch {
                expected: x.len(),
                actual: y.len(),
            });
        }
        if let Some(v) = x.and(&y).first_one() {
            return Err(Error::Overlap(v));
        }
        Ok(Self { x, y })
    }

    pub fn x(&self) -> &BitVec {
        &self.x
    }

    pub fn y(&self) -> &BitVec {
        &self.y
    }

    /// Support `U = X ∪ Y`.
    pub fn support(&self) -> BitVec {
        self.x.or(&self.y)
    }

    /// Vertices outside both sides.
    pub fn outside(&self) -> BitVec {
        self.support().not()
    }

    pub fn covers(&self, u: usize, v: usize) -> bool {
        (self.x.get(u) && self.y.get(v)) || (self.y.get(u) && self.x.get(v))
    }

    /// Same biclique viewed on a host of `n` vertices, with vertex `v` moved to `map[v]`.
    pub fn relabeled(&self, n: usize, map: &[usize]) -> Biclique {
        Biclique {
            x: BitVec::from_indices(n, self.x.ones_iter().map(|v| map[v])),
            y: BitVec::from_indices(n, self.y.ones_iter().map(|v| map[v])),
        }
    }
}

/// An ordered list of bicliques over a host of `n` vertices.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OddCover {
    n: usize,
    bicliques: Vec<Biclique>,
}

/// Outcome of [`OddCover::verify`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerifyReport {
    pub valid: bool,
    pub violations: Vec<Violation>,
}

/// A pair whose coverage parity disagrees with the target graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Violation {
    pub u: usize,
    pub v: usize,
    pub is_edge: bool,
    pub coverage: usize,
}

impl Violation {
    pub fn parity(&self) -> Parity {
        if self.coverage % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

/// Certified lower bound on the odd cover number.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowerBound {
    pub value: usize,
    pub rank: usize,
    /// An even core inducing an odd number of edges was found.
    pub odd_core: bool,
    /// No odd core, but the edge-parity form has Arf invariant 1.
    pub arf_obstruction: bool,
    /// Some diagonal `D` satisfies `A·D·A = A` (checked up to
    /// [`DIAGONAL_RULE_MAX_N`] vertices).
    pub diagonal_obstruction: bool,
    /// Even-core enumeration stopped at the kernel basis.
    pub truncated: bool,
}

impl OddCover {
    pub fn new(n: usize, bicliques: Vec<Biclique>) -> Result<Self> {
        if n > MAX_BITS {
            return Err(Error::TooLarge(n));
        }
        for b in &bicliques {
            if b.x.len() != n {
                return Err(Error::SizeMismatch {
                    expected: n,
                    actual: b.x.len(),
                });
            }
        }
        Ok(Self { n, bicliques })
    }

    pub fn empty(n: usize) -> Self {
        Self {
            n,
            bicliques: Vec::new(),
        }
    }

    /// Convenience constructor from `(x, y)` index lists.
    pub fn from_sides(n: usize, sides: &[(Vec<usize>, Vec<usize>)]) -> Result<Self> {
        let bicliques = sides
            .iter()
            .map(|(x, y)| Biclique::new(n, x, y))
            .collect::<Result<Vec<_>>>()?;
        Self::new(n, bicliques)
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn bicliques(&self) -> &[Biclique] {
        &self.bicliques
    }

    pub fn len(&self) -> usize {
        self.bicliques.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bicliques.is_empty()
    }

    pub fn push(&mut self, b: Biclique) -> Result<()> {
        if b.x.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                actual: b.x.len(),
            });
        }
        self.bicliques.push(b);
        Ok(())
    }

    pub(crate) fn bicliques_mut(&mut self) -> &mut Vec<Biclique> {
        &mut self.bicliques
    }

    /// Moves every vertex `v` to `map[v]` on a host of `n` vertices.
    pub fn relabeled(&self, n: usize, map: &[usize]) -> Result<OddCover> {
        if map.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                actual: map.len(),
            });
        }
        if let Some(&bad) = map.iter().find(|&&v| v >= n) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                size: n,
            });
        }
        OddCover::new(
            n,
            self.bicliques.iter().map(|b| b.relabeled(n, map)).collect(),
        )
    }

    /// Number of bicliques that split `{u, v}` across their two sides.
    pub fn coverage_count(&self, u: usize, v: usize) -> Result<usize> {
        if u == v {
            return Err(Error::SameVertex(u));
        }
        for w in [u, v] {
            if w >= self.n {
                return Err(Error::IndexOutOfRange {
                    index: w,
                    size: self.n,
                });
            }
        }
        Ok(self.bicliques.iter().filter(|b| b.covers(u, v)).count())
    }

    /// Pairwise coverage counts, indexed `[u * n + v]`.
    fn coverage_table(&self) -> Vec<u32> {
        let n = self.n;
        let mut counts = vec![0u32; n * n];
        for b in &self.bicliques {
            for u in b.x.ones_iter() {
                for v in b.y.ones_iter() {
                    counts[u * n + v] += 1;
                    counts[v * n + u] += 1;
                }
            }
        }
        counts
    }

    /// Checks coverage parity of every pair against `g` by direct counting.
    pub fn verify(&self, g: &Graph) -> Result<VerifyReport> {
        self.check_host(g)?;
        let n = self.n;
        let counts = self.coverage_table();
        let mut violations = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                let coverage = counts[u * n + v] as usize;
                let is_edge = g.has_edge(u, v);
                if (coverage % 2 == 1) != is_edge {
                    violations.push(Violation {
                        u,
                        v,
                        is_edge,
                        coverage,
                    });
                }
            }
        }
        Ok(VerifyReport {
            valid: violations.is_empty(),
            violations,
        })
    }

    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.verify(g).map(|r| r.valid).unwrap_or(false)
    }

    /// The graph this cover covers oddly: pairs with odd coverage.
    pub fn covered_graph(&self) -> Graph {
        let n = self.n;
        let mut rows = vec![BitVec::zeros(n); n];
        for b in &self.bicliques {
            for u in b.x.ones_iter() {
                rows[u].xor_assign(&b.y);
            }
            for u in b.y.ones_iter() {
                rows[u].xor_assign(&b.x);
            }
        }
        Graph::from_adjacency(rows).expect("biclique sums are symmetric and loopless")
    }

    /// The `n × 2k` incidence matrix with columns `X₁, Y₁, …, X_k, Y_k`.
    pub fn incidence_matrix(&self) -> F2Matrix {
        let k = self.bicliques.len();
        let mut m = F2Matrix::zeros(self.n, 2 * k).expect("2k columns within cap");
        for (i, b) in self.bicliques.iter().enumerate() {
            for v in b.x.ones_iter() {
                m.set(v, 2 * i, true);
            }
            for v in b.y.ones_iter() {
                m.set(v, 2 * i + 1, true);
            }
        }
        m
    }

    /// Tests `A_G = M·A_k·Mᵀ` over F₂, where `M` is the incidence matrix and
    /// `A_k` the block sum of `k` swap matrices.
    pub fn eq2_holds(&self, g: &Graph) -> Result<bool> {
        self.check_host(g)?;
        let m = self.incidence_matrix();
        let a_k = F2Matrix::swap_blocks(self.bicliques.len())?;
        let product = m.mul(&a_k)?.mul(&m.transpose())?;
        Ok(product == g.adjacency())
    }

    /// Valid and of size exactly `rank(A_G) / 2`.
    pub fn is_perfect(&self, g: &Graph) -> bool {
        self.is_valid_for(g) && 2 * self.bicliques.len() == g.rank()
    }

    /// Whether `set` meets both sides of every biclique in an even number of vertices.
    pub fn even_intersection_check(&self, set: &BitVec) -> Result<bool> {
        if set.len() != self.n {
            return Err(Error::SizeMismatch {
                expected: self.n,
                actual: set.len(),
            });
        }
        if set.is_zero() {
            return Err(Error::EmptySet);
        }
        Ok(self
            .bicliques
            .iter()
            .all(|b| b.x.and_count(set) % 2 == 0 && b.y.and_count(set) % 2 == 0))
    }

    fn check_host(&self, g: &Graph) -> Result<()> {
        if g.n() != self.n {
            Err(Error::SizeMismatch {
                expected: g.n(),
                actual: self.n,
            })
        } else {
            Ok(())
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&CoverJson::from(self)).expect("cover serializes")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&CoverJson::from(self)).expect("cover serializes")
    }

    /// Reads the cover JSON schema, rejecting overlaps and out-of-range indices.
    pub fn from_json(text: &str) -> Result<OddCover> {
        let raw: CoverJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        raw.try_into()
    }
}

/// Rank lower bound, raised by one when no perfect odd cover can exist.
///
/// Two obstructions are checked. First, some even core induces an odd
/// number of edges. Edge-count parity `q(x)` is linear on the kernel of
/// `A_G` (the cross term `xᵀ A y` vanishes there), so it suffices to test a
/// kernel basis, which keeps the bound exact even when enumeration is
/// truncated.
///
/// Otherwise `q` is a well-defined quadratic form on `F₂ⁿ / ker A_G` whose
/// polar form `xᵀ A y` is nondegenerate. In a perfect cover every partite
/// set `X_i = A u` has `q(u) = Σ_j |u∩X_j|·|u∩Y_j| = 0`, so the pairs
/// `(X_i, Y_i)` form a symplectic basis on which `q` vanishes and the Arf
/// invariant of `q` is 0. Arf invariant 1 therefore also rules out a
/// perfect cover.
///
/// Third, the same pairs satisfy `⟨X_i, Y_i⟩ = 1` for the form
/// `⟨Au, Av⟩ = uᵀ A v` on the column space. If `A·D·A = A` for a diagonal
/// `D`, then `⟨x, y⟩ = xᵀ D y`, which vanishes on disjoint sets, so no
/// nonempty perfect cover exists. Odd cliques and their disjoint unions are the
/// typical case (`D = I`).
pub fn lower_bound(g: &Graph) -> LowerBound {
    lower_bound_with_cap(g, DEFAULT_EVEN_CORE_CAP)
}

pub fn lower_bound_with_cap(g: &Graph, cap: usize) -> LowerBound {
    let rank = g.rank();
    let cores = g.even_cores(cap);
    let odd_core = cores.sets.iter().any(|s| g.induced_edge_count(s) % 2 == 1);
    let arf_obstruction = !odd_core && arf_invariant(g);
    let diagonal_obstruction = rank > 0
        && !odd_core
        && !arf_obstruction
        && g.n() <= DIAGONAL_RULE_MAX_N
        && diagonal_solution(g);
    LowerBound {
        value: rank / 2 + usize::from(odd_core || arf_obstruction || diagonal_obstruction),
        rank,
        odd_core,
        arf_obstruction,
        diagonal_obstruction,
        truncated: cores.truncated,
    }
}

/// Largest graph on which [`lower_bound`] tries the diagonal rule.
pub const DIAGONAL_RULE_MAX_N: usize = 512;

/// Whether `Σ_l d_l a_l a_lᵀ = A` has a solution `d`, where `a_l` is column
/// `l` of `A`. Entry `(i, j)` gives the equation `(row_i ∧ row_j)·d = A_ij`.
pub(crate) fn diagonal_solution(g: &Graph) -> bool {
    let n = g.n();
    // Echelon rows over n unknowns plus a right-hand side bit at index n.
    let mut pivots: Vec<Option<BitVec>> = vec![None; n + 1];
    for i in 0..n {
        for j in i + 1..n {
            let mut eq = g.neighbors(i).and(g.neighbors(j)).resized(n + 1);
            eq.assign(n, g.has_edge(i, j));
            while let Some(p) = eq.first_one() {
                if p == n {
                    return false;
                }
                match &pivots[p] {
                    Some(row) => eq.xor_assign(row),
                    None => {
                        pivots[p] = Some(eq);
                        break;
                    }
                }
            }
        }
    }
    // Diagonal entries: row_i·d = 0 for every i (no loops).
    for i in 0..n {
        let mut eq = g.neighbors(i).resized(n + 1);
        while let Some(p) = eq.first_one() {
            if p == n {
                return false;
            }
            match &pivots[p] {
                Some(row) => eq.xor_assign(row),
                None => {
                    pivots[p] = Some(eq);
                    break;
                }
            }
        }
    }
    true
}

/// Arf invariant of `x ↦ |E(G[x])| mod 2` on `F₂ⁿ / ker A_G`. Only
/// meaningful when the form vanishes on the kernel.
///
/// Builds a symplectic basis by repeatedly taking a pair `(e, f)` with
/// `eᵀ A f = 1` and projecting the remaining vectors off it; vectors left
/// orthogonal to everything span the kernel and are dropped.
pub(crate) fn arf_invariant(g: &Graph) -> bool {
    let n = g.n();
    // Each candidate carries its image under A_G.
    let mut pool: Vec<(BitVec, BitVec)> = (0..n)
        .map(|i| (BitVec::from_indices(n, [i]), g.neighbors(i).clone()))
        .collect();
    let mut arf = false;
    while let Some((e, ae)) = pool.pop() {
        let Some(j) = pool.iter().position(|(f, _)| ae.dot(f)) else {
            continue;
        };
        let (f, af) = pool.swap_remove(j);
        for (z, az) in pool.iter_mut() {
            // Project z so that zᵀAe = zᵀAf = 0.
            let (with_e, with_f) = (az.dot(&e), az.dot(&f));
            if with_f {
                z.xor_assign(&e);
                az.xor_assign(&ae);
            }
            if with_e {
                z.xor_assign(&f);
                az.xor_assign(&af);
            }
        }
        arf ^= g.induced_edge_count(&e) % 2 == 1 && g.induced_edge_count(&f) % 2 == 1;
    }
    arf
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct CoverJson {
    n: usize,
    bicliques: Vec<BicliqueJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct BicliqueJson {
    x: Vec<usize>,
    y: Vec<usize>,
}

impl From<&OddCover> for CoverJson {
    fn from(c: &OddCover) -> Self {
        CoverJson {
            n: c.n,
            bicliques: c
                .bicliques
                .iter()
                .map(|b| BicliqueJson {
                    x: b.x.to_indices(),
                    y: b.y.to_indices(),
                })
                .collect(),
        }
    }
}

impl TryFrom<CoverJson> for OddCover {
    type Error = Error;

    fn try_from(raw: CoverJson) -> Result<Self> {
        if raw.n > MAX_BITS {
            return Err(Error::TooLarge(raw.n));
        }
        let bicliques = raw
            .bicliques
            .iter()
            .map(|b| Biclique::new(raw.n, &b.x, &b.y))
            .collect::<Result<Vec<_>>>()?;
        OddCover::new(raw.n, bicliques)
    }
}
