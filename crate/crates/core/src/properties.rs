//! Checkers for structural facts about odd covers.
//!
//! Each checker validates its preconditions first and returns a structured
//! report; a failing report on valid input points at a bug in whatever
//! produced the cover, since the facts checked here are theorems.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::bits::BitVec;
use crate::cover::OddCover;
use crate::error::{Error, Result};
use crate::f2::{rank_of_rows, F2Matrix};
use crate::graph::Graph;

/// Largest clique for which item (iv) of [`even_clique_props`] is exhaustive.
pub const EXHAUSTIVE_SUBSET_LIMIT: usize = 12;

/// Default number of random subsets per residue class for item (iv).
pub const DEFAULT_SAMPLES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Thm21Report {
    pub passed: bool,
    pub subsets_checked: u64,
    /// A subset where independence in `m` and in the adjacency matrix differ.
    pub counterexample: Option<Vec<usize>>,
}

/// Checks that a set of rows of `m` is independent exactly when the same
/// rows of the adjacency matrix are, for every subset of size at most 4 and
/// `trials` random larger subsets.
///
/// `m` must be an `n × rank(A_G)` matrix with `m·A_k·mᵀ = A_G`, such as the
/// incidence matrix of a perfect odd cover.
pub fn thm21_check(g: &Graph, m: &F2Matrix, trials: usize, seed: u64) -> Result<Thm21Report> {
    let n = g.n();
    let adjacency = g.adjacency();
    let rank = adjacency.rank();
    if m.n_rows() != n || m.n_cols() != rank || rank % 2 == 1 {
        return Err(Error::Precondition(format!(
            "matrix is {}x{}, expected {n}x{rank}",
            m.n_rows(),
            m.n_cols()
        )));
    }
    let a_k = F2Matrix::swap_blocks(rank / 2)?;
    if m.mul(&a_k)?.mul(&m.transpose())? != adjacency {
        return Err(Error::Precondition(
            "m·A_k·mᵀ differs from the adjacency matrix".into(),
        ));
    }

    let mut checked = 0u64;
    let mut agree = |subset: &[usize]| {
        checked += 1;
        independent(m, subset) == independent(&adjacency, subset)
    };
    let mut subset = Vec::with_capacity(4);
    if let Some(bad) = small_subsets(n, 4, &mut subset, &mut agree) {
        return Ok(Thm21Report {
            passed: false,
            subsets_checked: checked,
            counterexample: Some(bad),
        });
    }
    if n > 4 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for _ in 0..trials {
            let size = rng.gen_range(5..=n);
            let mut s = sample(&mut rng, n, size).into_vec();
            s.sort_unstable();
            if !agree(&s) {
                return Ok(Thm21Report {
                    passed: false,
                    subsets_checked: checked,
                    counterexample: Some(s),
                });
            }
        }
    }
    Ok(Thm21Report {
        passed: true,
        subsets_checked: checked,
        counterexample: None,
    })
}

fn independent(m: &F2Matrix, subset: &[usize]) -> bool {
    rank_of_rows(subset.iter().map(|&i| m.row(i).clone()).collect()) == subset.len()
}

/// Calls `check` on every nonempty increasing subset of `0..n` of size at
/// most `max`, stopping at the first one it rejects.
fn small_subsets(
    n: usize,
    max: usize,
    current: &mut Vec<usize>,
    check: &mut impl FnMut(&[usize]) -> bool,
) -> Option<Vec<usize>> {
    let start = current.last().map_or(0, |&l| l + 1);
    for v in start..n {
        current.push(v);
        if !check(current) {
            return Some(current.clone());
        }
        if current.len() < max {
            if let Some(bad) = small_subsets(n, max, current, check) {
                return Some(bad);
            }
        }
        current.pop();
    }
    None
}

fn require_perfect(g: &Graph, c: &OddCover) -> Result<()> {
    let report = c.verify(g)?;
    if !report.valid {
        return Err(Error::Precondition(format!(
            "cover is invalid ({} violations)",
            report.violations.len()
        )));
    }
    if 2 * c.len() != g.rank() {
        return Err(Error::Precondition(format!(
            "cover has {} bicliques, rank bound is {}",
            c.len(),
            g.rank() / 2
        )));
    }
    Ok(())
}

/// Whether the partite sets `X₁, Y₁, …, X_k, Y_k` of a perfect odd cover
/// have a system of distinct representatives drawn from `basis`, a set of
/// vertices whose adjacency rows form a basis of the row space.
pub fn sdr_check(g: &Graph, c: &OddCover, basis: &[usize]) -> Result<bool> {
    require_perfect(g, c)?;
    let adjacency = g.adjacency();
    if basis.len() != g.rank() || !adjacency.rows_independent(basis)? {
        return Err(Error::Precondition(
            "basis rows are not a basis of the row space".into(),
        ));
    }
    let parts: Vec<&BitVec> = c.bicliques().iter().flat_map(|b| [b.x(), b.y()]).collect();
    // Kuhn's augmenting paths: basis vertices on the left, parts on the right.
    let mut owner: Vec<Option<usize>> = vec![None; parts.len()];
    fn augment(
        v: usize,
        basis: &[usize],
        parts: &[&BitVec],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for p in 0..parts.len() {
            if seen[p] || !parts[p].get(basis[v]) {
                continue;
            }
            seen[p] = true;
            if owner[p].map_or(true, |w| augment(w, basis, parts, owner, seen)) {
                owner[p] = Some(v);
                return true;
            }
        }
        false
    }
    let matched = (0..basis.len())
        .filter(|&v| augment(v, basis, &parts, &mut owner, &mut vec![false; parts.len()]))
        .count();
    Ok(matched == parts.len())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ItemReport {
    pub item: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub exhaustive: bool,
    pub counterexample: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenCliqueReport {
    pub two_k: usize,
    pub items: Vec<ItemReport>,
}

impl EvenCliqueReport {
    pub fn passed(&self) -> bool {
        self.items.iter().all(|i| i.passed)
    }
}

/// Checks four facts about a perfect odd cover `(X₁,Y₁), …, (X_k,Y_k)` of
/// `K_{2k}`:
///
/// - (i) every `|X_i|`, `|Y_i|` is `1 mod 4` if `k` is odd, `3 mod 4` if even;
/// - (ii) `|X_i∩X_j|`, `|X_i∩Y_j|`, `|Y_i∩Y_j|` are odd for `i ≠ j`;
/// - (iii) every vertex lies in an odd number of `U_i = X_i ∪ Y_i`;
/// - (iv) every `A` with `|A| ≡ 2, 3 (mod 4)` has an `i` with `|A∩X_i|` and
///   `|A∩Y_i|` both odd. Exhaustive up to [`EXHAUSTIVE_SUBSET_LIMIT`]
///   vertices, otherwise `samples` seeded random sets per residue class.
pub fn even_clique_props(
    c: &OddCover,
    two_k: usize,
    samples: usize,
    seed: u64,
) -> Result<EvenCliqueReport> {
    if two_k == 0 || two_k % 2 == 1 || c.n() != two_k {
        return Err(Error::Precondition(format!(
            "cover on {} vertices is not for an even clique of size {two_k}",
            c.n()
        )));
    }
    require_perfect(&Graph::complete(two_k)?, c)?;
    let k = two_k / 2;
    let bs = c.bicliques();
    let target = if k % 2 == 1 { 1 } else { 3 };

    let mut item1 = ItemReport::new("i", true);
    for (i, b) in bs.iter().enumerate() {
        for (side, set) in [("X", b.x()), ("Y", b.y())] {
            item1.checked += 1;
            let size = set.count_ones();
            if size % 4 != target {
                item1.fail(format!("|{side}{i}| = {size}"));
            }
        }
    }

    let mut item2 = ItemReport::new("ii", true);
    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let pairs = [
                ("X", bs[i].x(), "X", bs[j].x()),
                ("X", bs[i].x(), "Y", bs[j].y()),
                ("Y", bs[i].y(), "Y", bs[j].y()),
            ];
            for (a, sa, b, sb) in pairs {
                item2.checked += 1;
                let size = sa.and_count(sb);
                if size % 2 == 0 {
                    item2.fail(format!("|{a}{i} ∩ {b}{j}| = {size}"));
                }
            }
        }
    }

    let mut item3 = ItemReport::new("iii", true);
    for v in 0..two_k {
        item3.checked += 1;
        let count = bs.iter().filter(|b| b.x().get(v) || b.y().get(v)).count();
        if count % 2 == 0 {
            item3.fail(format!("vertex {v} lies in {count} supports"));
        }
    }

    let exhaustive = two_k <= EXHAUSTIVE_SUBSET_LIMIT;
    let mut item4 = ItemReport::new("iv", exhaustive);
    let split = |a: &BitVec| {
        bs.iter()
            .any(|b| a.and_count(b.x()) % 2 == 1 && a.and_count(b.y()) % 2 == 1)
    };
    let check4 = |a: BitVec, report: &mut ItemReport| {
        report.checked += 1;
        if !split(&a) {
            report.fail(format!("A = {:?}", a.to_indices()));
        }
    };
    if exhaustive {
        for mask in 0u64..1 << two_k {
            if matches!(mask.count_ones() % 4, 2 | 3) {
                check4(
                    BitVec::from_indices(two_k, (0..two_k).filter(|&v| mask >> v & 1 == 1)),
                    &mut item4,
                );
            }
        }
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        for residue in [2, 3] {
            let sizes: Vec<usize> = (1..=two_k).filter(|s| s % 4 == residue).collect();
            for _ in 0..samples {
                let size = sizes[rng.gen_range(0..sizes.len())];
                let a = BitVec::from_indices(two_k, sample(&mut rng, two_k, size).into_iter());
                check4(a, &mut item4);
            }
        }
    }

    Ok(EvenCliqueReport {
        two_k,
        items: vec![item1, item2, item3, item4],
    })
}

impl ItemReport {
    fn new(item: &'static str, exhaustive: bool) -> Self {
        Self {
            item,
            passed: true,
            checked: 0,
            exhaustive,
            counterexample: None,
        }
    }

    fn fail(&mut self, what: String) {
        if self.passed {
            self.passed = false;
            self.counterexample = Some(what);
        }
    }
}

/// Whether the two vertices of every pair lie in exactly the same biclique
/// supports `X_i ∪ Y_i`. The pairs must partition the vertex set.
pub fn same_type_check(c: &OddCover, pairing: &[(usize, usize)]) -> Result<bool> {
    let n = c.n();
    let mut seen = vec![false; n];
    for &(u, v) in pairing {
        for w in [u, v] {
            if w >= n {
                return Err(Error::IndexOutOfRange { index: w, size: n });
            }
            if std::mem::replace(&mut seen[w], true) {
                return Err(Error::Precondition(format!(
                    "vertex {w} appears twice in the pairing"
                )));
            }
        }
    }
    if let Some(missing) = seen.iter().position(|s| !s) {
        return Err(Error::Precondition(format!(
            "vertex {missing} is not paired"
        )));
    }
    Ok(pairing.iter().all(|&(u, v)| {
        c.bicliques()
            .iter()
            .all(|b| (b.x().get(u) || b.y().get(u)) == (b.x().get(v) || b.y().get(v)))
    }))
}
