//! Explicit odd-cover constructions.
//!
//! Every function returns an [`OddCover`]; none of them certify their own
//! output. Callers (and the tests) check results with [`OddCover::verify`]
//! against the graph named alongside each construction.

use std::sync::Arc;

use crate::bits::BitVec;
use crate::cover::{Biclique, OddCover};
use crate::error::{Error, Result};
use crate::gf::{self, GfContext};
use crate::graph::Graph;

/// Disjoint-copies cover of `H + H` with one biclique per vertex of `H`.
///
/// Copies live on `v_i = i` and `w_i = k + i`. Biclique `i` has
/// `X_i = {v_i, w_i}`. Vertices are added one at a time: when `v_k` joins,
/// it is appended to `Y_j` for each earlier neighbor `v_j`, and the new
/// biclique gets `Y_k = {w_j : j < k, v_j ~ v_k}`.
pub fn double_cover(h: &Graph) -> Result<OddCover> {
    let k = h.n();
    let n = 2 * k;
    let mut xs = Vec::with_capacity(k);
    let mut ys: Vec<BitVec> = Vec::with_capacity(k);
    for step in 0..k {
        let mut y_new = BitVec::zeros(n);
        for (j, y_j) in ys.iter_mut().enumerate() {
            if h.has_edge(j, step) {
                y_j.set(step);
                y_new.set(k + j);
            }
        }
        xs.push(BitVec::from_indices(n, [step, k + step]));
        ys.push(y_new);
    }
    let bicliques = xs
        .into_iter()
        .zip(ys)
        .map(|(x, y)| Biclique::from_sets(x, y))
        .collect::<Result<Vec<_>>>()?;
    OddCover::new(n, bicliques)
}

/// `k + 1` bicliques covering `K_{2k+1}`.
///
/// Vertex 0 is the apex `u`, `1..=k` are the `v`s and `k+1..=2k` the `w`s.
/// The disjoint-copies cover of `K_k + K_k` on the `v`s and `w`s gets `u`
/// added to every `Y_i`, followed by the biclique `(V, W)`.
pub fn odd_clique_cover(k: usize) -> Result<OddCover> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "odd_clique_cover needs k >= 1".into(),
        ));
    }
    odd_clique_union_cover(&[k])
}

/// `Σmᵢ + 1` bicliques covering `K_{2m₁+1} + … + K_{2m_j+1}`.
///
/// Clique `i` occupies a contiguous block: `u_i`, then `v_{i,1..m_i}`, then
/// `w_{i,1..m_i}`. Each disjoint-copies biclique of clique `i` gets `u_i` and
/// every other clique's `v`s added to its `Y` side; the last biclique is
/// `(⋃Vᵢ, ⋃Wᵢ)`.
pub fn odd_clique_union_cover(ms: &[usize]) -> Result<OddCover> {
    if ms.is_empty() {
        return Err(Error::InvalidParameter(
            "odd_clique_union_cover needs at least one clique".into(),
        ));
    }
    if ms.contains(&0) {
        return Err(Error::InvalidParameter(
            "every clique parameter must be >= 1".into(),
        ));
    }
    let n: usize = ms.iter().map(|m| 2 * m + 1).sum();
    let offsets: Vec<usize> = ms
        .iter()
        .scan(0, |acc, m| {
            let o = *acc;
            *acc += 2 * m + 1;
            Some(o)
        })
        .collect();
    let offsets = &offsets;
    let v_set = |i: usize| (1..=ms[i]).map(move |t| offsets[i] + t);
    let w_set = |i: usize| (1..=ms[i]).map(move |t| offsets[i] + ms[i] + t);
    let all_v = BitVec::from_indices(n, (0..ms.len()).flat_map(v_set));
    let all_w = BitVec::from_indices(n, (0..ms.len()).flat_map(w_set));

    let mut bicliques = Vec::with_capacity(ms.iter().sum::<usize>() + 1);
    for (i, &m) in ms.iter().enumerate() {
        let base = double_cover(&Graph::complete(m)?)?;
        // double_cover's v_t = t - 1, w_t = m + t - 1 map to this block's v/w.
        let map: Vec<usize> = (0..2 * m).map(|t| offsets[i] + 1 + t).collect();
        let others_v = {
            let mut s = all_v.clone();
            for v in v_set(i) {
                s.clear(v);
            }
            s
        };
        for b in base.bicliques() {
            let b = b.relabeled(n, &map);
            let mut y = b.y().clone();
            y.set(offsets[i]);
            y.or_assign(&others_v);
            bicliques.push(Biclique::from_sets(b.x().clone(), y)?);
        }
    }
    bicliques.push(Biclique::from_sets(all_v, all_w)?);
    OddCover::new(n, bicliques)
}

/// `m − 1` bicliques covering `C_{2m}` (vertices in cycle order): the fan
/// `({2i−2, 2i}, {2i−1, 2m−1})` for `i = 1..m−1`. Consecutive members share
/// the hub edge `{2i, 2m−1}`, which cancels in pairs.
pub fn even_cycle_cover(m: usize) -> Result<OddCover> {
    if m < 2 {
        return Err(Error::InvalidParameter(format!(
            "even_cycle_cover needs m >= 2, got {m}"
        )));
    }
    let n = 2 * m;
    let sides: Vec<(Vec<usize>, Vec<usize>)> = (1..m)
        .map(|i| (vec![2 * i - 2, 2 * i], vec![2 * i - 1, n - 1]))
        .collect();
    OddCover::from_sides(n, &sides)
}

/// Appends the bicliques that grow an odd cycle embedded at
/// `offset..offset+from_len` (cycle order, closing edge `{last, first}`) to
/// length `to_len`. Each step replaces the closing edge `{a, first}` by the
/// path `a, a+1, a+2, first` via the 4-cycle `({a, a+2}, {a+1, first})`.
fn push_cycle_extension(
    bicliques: &mut Vec<Biclique>,
    n: usize,
    offset: usize,
    from_len: usize,
    to_len: usize,
) -> Result<()> {
    let mut len = from_len;
    while len < to_len {
        let last = offset + len - 1;
        bicliques.push(Biclique::new(n, &[last, last + 2], &[last + 1, offset])?);
        len += 2;
    }
    Ok(())
}

/// Extends a cover of `C_{2n+1}` (vertices `0..2n+1` in cycle order) to a
/// cover of `C_target`, appending `(target − 2n − 1) / 2` four-cycle
/// bicliques. New vertices are spliced in between the last vertex and 0.
pub fn cycle_extension(cover: &OddCover, target: usize) -> Result<OddCover> {
    let from = cover.n();
    if from % 2 == 0 || from < 3 {
        return Err(Error::InvalidParameter(format!(
            "base cover must be of an odd cycle, got {from} vertices"
        )));
    }
    if target % 2 == 0 || target < from {
        return Err(Error::InvalidParameter(format!(
            "target {target} must be odd and at least {from}"
        )));
    }
    let map: Vec<usize> = (0..from).collect();
    let mut out = cover.relabeled(target, &map)?;
    push_cycle_extension(out.bicliques_mut(), target, 0, from, target)?;
    Ok(out)
}

/// Cover of `C_{2n₁+1} + … + C_{2n_t+1} + C_{2m₁} + … + C_{2m_ℓ}` with
/// `Σnᵢ + Σmᵢ − ℓ + 1` bicliques.
///
/// Odd cycles come first, then even cycles, each on a contiguous block in
/// cycle order. The triangles are covered as `tK₃` by the odd-clique-union
/// recipe, each grown to its target length, and each even cycle gets its
/// own fan.
pub fn cycle_union_cover(odd_ns: &[usize], even_ms: &[usize]) -> Result<OddCover> {
    if odd_ns.is_empty() {
        return Err(Error::InvalidParameter(
            "cycle_union_cover needs at least one odd cycle; use even_cycle_cover".into(),
        ));
    }
    if odd_ns.contains(&0) {
        return Err(Error::InvalidParameter(
            "odd cycle parameters must be >= 1".into(),
        ));
    }
    if even_ms.iter().any(|&m| m < 2) {
        return Err(Error::InvalidParameter(
            "even cycle parameters must be >= 2".into(),
        ));
    }
    let lens: Vec<usize> = odd_ns
        .iter()
        .map(|n| 2 * n + 1)
        .chain(even_ms.iter().map(|m| 2 * m))
        .collect();
    let n: usize = lens.iter().sum();
    let offsets: Vec<usize> = lens
        .iter()
        .scan(0, |acc, l| {
            let o = *acc;
            *acc += l;
            Some(o)
        })
        .collect();

    let t = odd_ns.len();
    let triangles = odd_clique_union_cover(&vec![1; t])?;
    let tri_map: Vec<usize> = (0..3 * t).map(|v| offsets[v / 3] + v % 3).collect();
    let mut bicliques = triangles.relabeled(n, &tri_map)?.bicliques().to_vec();
    for (i, &odd) in odd_ns.iter().enumerate() {
        push_cycle_extension(&mut bicliques, n, offsets[i], 3, 2 * odd + 1)?;
    }
    for (j, &m) in even_ms.iter().enumerate() {
        let off = offsets[t + j];
        let map: Vec<usize> = (0..2 * m).map(|v| off + v).collect();
        bicliques.extend(
            even_cycle_cover(m)?
                .relabeled(n, &map)?
                .bicliques()
                .iter()
                .cloned(),
        );
    }
    OddCover::new(n, bicliques)
}

/// The disjoint union of cycles covered by [`cycle_union_cover`], in the same layout.
pub fn cycle_union_graph(odd_ns: &[usize], even_ms: &[usize]) -> Result<Graph> {
    let parts = odd_ns
        .iter()
        .map(|n| Graph::cycle(2 * n + 1))
        .chain(even_ms.iter().map(|m| Graph::cycle(2 * m)))
        .collect::<Result<Vec<_>>>()?;
    Graph::disjoint_union(&parts)
}

/// Square matrix over `{−1, 0, +1}` describing a pairs construction: row
/// `i` is the vertex pair `(2i, 2i+1)`, column `j` is biclique `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SignedPairsMatrix {
    size: usize,
    entries: Vec<i8>,
}

impl SignedPairsMatrix {
    pub fn new(size: usize, entries: Vec<i8>) -> Result<Self> {
        if entries.len() != size * size {
            return Err(Error::SizeMismatch {
                expected: size * size,
                actual: entries.len(),
            });
        }
        if entries.iter().any(|e| !(-1..=1).contains(e)) {
            return Err(Error::InvalidParameter("entries must be -1, 0 or 1".into()));
        }
        Ok(Self { size, entries })
    }

    pub fn from_rows(rows: &[Vec<i8>]) -> Result<Self> {
        let size = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != size) {
            return Err(Error::SizeMismatch {
                expected: size,
                actual: r.len(),
            });
        }
        Self::new(size, rows.concat())
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> i8 {
        self.entries[i * self.size + j]
    }

    pub fn row(&self, i: usize) -> &[i8] {
        &self.entries[i * self.size..(i + 1) * self.size]
    }

    /// Square sub-block starting at `(r0, c0)`.
    pub fn block(&self, r0: usize, c0: usize, len: usize) -> Vec<Vec<i8>> {
        (r0..r0 + len)
            .map(|i| (c0..c0 + len).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Checks the three row conditions for the pairs construction to be a
    /// perfect odd cover of `K_{2·size}`:
    /// every row has odd support, and each pair of distinct rows has an odd
    /// number of columns with opposite signs and an odd number with equal
    /// nonzero signs.
    pub fn satisfies_pair_conditions(&self) -> bool {
        self.first_condition_failure().is_none()
    }

    /// First failing `(condition, i, j)`, with `j == i` for the support condition.
    pub fn first_condition_failure(&self) -> Option<(u8, usize, usize)> {
        for i in 0..self.size {
            if self.row(i).iter().filter(|&&e| e != 0).count() % 2 == 0 {
                return Some((1, i, i));
            }
        }
        for i in 0..self.size {
            for j in i + 1..self.size {
                let (mut opposite, mut same) = (0, 0);
                for (a, b) in self.row(i).iter().zip(self.row(j)) {
                    match a * b {
                        -1 => opposite += 1,
                        1 => same += 1,
                        _ => {}
                    }
                }
                if opposite % 2 == 0 {
                    return Some((2, i, j));
                }
                if same % 2 == 0 {
                    return Some((3, i, j));
                }
            }
        }
        None
    }

    /// Canonical pairing `(2i, 2i+1)` of the vertices of [`pairs_to_cover`].
    pub fn pairing(&self) -> Vec<(usize, usize)> {
        (0..self.size).map(|i| (2 * i, 2 * i + 1)).collect()
    }
}

/// Cover on `2·size` vertices: entry `+1` at `(i, j)` puts `2i` in `X_j` and
/// `2i+1` in `Y_j`, `−1` swaps them, `0` leaves the pair out.
pub fn pairs_to_cover(m: &SignedPairsMatrix) -> Result<OddCover> {
    let s = m.size();
    let n = 2 * s;
    let bicliques = (0..s)
        .map(|j| {
            let mut x = BitVec::zeros(n);
            let mut y = BitVec::zeros(n);
            for i in 0..s {
                match m.get(i, j) {
                    1 => {
                        x.set(2 * i);
                        y.set(2 * i + 1);
                    }
                    -1 => {
                        y.set(2 * i);
                        x.set(2 * i + 1);
                    }
                    _ => {}
                }
            }
            Biclique::from_sets(x, y)
        })
        .collect::<Result<Vec<_>>>()?;
    OddCover::new(n, bicliques)
}

/// The alternating block `C` of side `s`, 1-indexed as `c_ij`: zero on the
/// diagonal; `+1` when `j > i` with `j − i` odd or `j < i` with `j − i`
/// even; `−1` otherwise.
pub fn alternating_block(s: usize) -> Vec<Vec<i8>> {
    (1..=s as i64)
        .map(|i| {
            (1..=s as i64)
                .map(|j| {
                    let odd = (j - i).rem_euclid(2) == 1;
                    match j.cmp(&i) {
                        std::cmp::Ordering::Equal => 0,
                        std::cmp::Ordering::Greater if odd => 1,
                        std::cmp::Ordering::Less if !odd => 1,
                        _ => -1,
                    }
                })
                .collect()
        })
        .collect()
}

/// Block matrix `[[A, C, B], [C, B, A], [B, A, C]]` with `A` all ones, `B`
/// zero and `C` the alternating block, each of side `n / 6`.
fn three_block_matrix(n: usize) -> SignedPairsMatrix {
    let s = n / 6;
    let c = alternating_block(s);
    // Block layout by (block row, block col): 0 = A, 1 = C, 2 = B.
    const LAYOUT: [[u8; 3]; 3] = [[0, 1, 2], [1, 2, 0], [2, 0, 1]];
    let size = 3 * s;
    let mut entries = vec![0i8; size * size];
    for (bi, layout_row) in LAYOUT.iter().enumerate() {
        for (bj, &kind) in layout_row.iter().enumerate() {
            for i in 0..s {
                for j in 0..s {
                    let e = match kind {
                        0 => 1,
                        1 => c[i][j],
                        _ => 0,
                    };
                    entries[(bi * s + i) * size + bj * s + j] = e;
                }
            }
        }
    }
    SignedPairsMatrix { size, entries }
}

/// Pairs matrix giving a perfect odd cover of `K_n` for `n ≡ 18 (mod 24)`.
pub fn pairs_18mod24(n: usize) -> Result<SignedPairsMatrix> {
    if n % 24 != 18 {
        return Err(Error::InvalidParameter(format!("n = {n} is not 18 mod 24")));
    }
    Ok(three_block_matrix(n))
}

/// Same recipe for `n ≡ 6 (mod 24)`, `n ≥ 30`: a perfect odd cover of
/// `3K_{n/3}` on the vertex blocks `0..n/3`, `n/3..2n/3`, `2n/3..n`.
pub fn pairs_6mod24(n: usize) -> Result<SignedPairsMatrix> {
    if n % 24 != 6 || n < 30 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} is not 6 mod 24 with n >= 30"
        )));
    }
    Ok(three_block_matrix(n))
}

/// `3K_{n/3}` in the layout produced by [`pairs_6mod24`].
pub fn three_cliques(n: usize) -> Result<Graph> {
    let k = Graph::complete(n / 3)?;
    Graph::disjoint_union(&[k.clone(), k.clone(), k])
}

/// Perfect odd cover of `K_{3^k−1}` from hyperplanes of `F_3^k`.
///
/// Vertices are the nonzero vectors of `F_3^k` in lexicographic order; for
/// each projective normal `a` the biclique is
/// `({v : ⟨v,a⟩ = 1}, {v : ⟨v,a⟩ = 2})`.
pub fn tomon_cover(k: usize) -> Result<OddCover> {
    if k == 0 {
        return Err(Error::InvalidParameter("tomon_cover needs k >= 1".into()));
    }
    let f3 = GfContext::shared(3, 1)?;
    let vertices = gf::nonzero_vectors(&f3, k)?;
    let n = vertices.len();
    let bicliques = gf::projective_normals(&f3, k)?
        .iter()
        .map(|a| {
            let mut x = BitVec::zeros(n);
            let mut y = BitVec::zeros(n);
            for (idx, v) in vertices.iter().enumerate() {
                match v.inner(a)?.0 {
                    1 => x.set(idx),
                    2 => y.set(idx),
                    _ => {}
                }
            }
            Biclique::from_sets(x, y)
        })
        .collect::<Result<Vec<_>>>()?;
    OddCover::new(n, bicliques)
}

/// Lifts a perfect odd cover of `K_{q−1}` to one of `K_{q^k−1}`.
///
/// Vertices are the nonzero vectors of `F_q^k` in lexicographic order. For
/// each projective normal `a` and each base biclique `(X, Y)`, vertex `v`
/// joins `X'` when the label of `⟨v,a⟩` lies in `X` and `Y'` when it lies in
/// `Y`; nonzero elements are labeled `0..q−1` in ascending index order.
pub fn field_lift_cover(ctx: &Arc<GfContext>, k: usize, base: &OddCover) -> Result<OddCover> {
    if k == 0 {
        return Err(Error::InvalidParameter(
            "field_lift_cover needs k >= 1".into(),
        ));
    }
    let m = ctx.order() as usize - 1;
    if base.n() != m {
        return Err(Error::Precondition(format!(
            "base cover has {} vertices, expected q - 1 = {m}",
            base.n()
        )));
    }
    if !base.is_perfect(&Graph::complete(m)?) {
        return Err(Error::Precondition(format!(
            "base is not a perfect odd cover of K_{m}"
        )));
    }
    let vertices = gf::nonzero_vectors(ctx, k)?;
    let n = vertices.len();
    if n > crate::bits::MAX_BITS {
        return Err(Error::TooLarge(n));
    }
    let mut bicliques = Vec::with_capacity(n / 2);
    for a in gf::projective_normals(ctx, k)? {
        let labels: Vec<Option<usize>> = vertices
            .iter()
            .map(|v| v.inner(&a).map(|e| ctx.nonzero_label(e)))
            .collect::<Result<_>>()?;
        for b in base.bicliques() {
            let mut x = BitVec::zeros(n);
            let mut y = BitVec::zeros(n);
            for (idx, label) in labels.iter().enumerate() {
                if let Some(l) = *label {
                    if b.x().get(l) {
                        x.set(idx);
                    } else if b.y().get(l) {
                        y.set(idx);
                    }
                }
            }
            bicliques.push(Biclique::from_sets(x, y)?);
        }
    }
    OddCover::new(n, bicliques)
}
