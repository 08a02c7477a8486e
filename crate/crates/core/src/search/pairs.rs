//! Backtracking search for pairs-construction matrices.
//!
//! Rows are sign patterns with odd support. Negating a row, permuting rows,
//! permuting columns and negating a column all preserve the three row
//! conditions, so the search normalizes every row to start with `+1`, takes
//! the remaining rows in increasing pattern order, and fixes the first row to
//! `+1^a 0^(s−a)` where `a` is the smallest row support in the matrix.
//!
//! A perfect odd cover of an even clique on `2s` vertices has every part size
//! `≡ 1 (mod 4)` when `s` is odd and `≡ 3 (mod 4)` when `s` is even; in a
//! pairs matrix the part size of biclique `j` is the support of column `j`,
//! which gives the column pruning rule.

use std::time::{Duration, Instant};

use crate::constructions::SignedPairsMatrix;
use crate::error::{Error, Result};

/// Largest half-size `n / 2` accepted by [`pairs_search`].
pub const MAX_PAIRS_HALF: usize = 12;

/// Outcome of [`pairs_search`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PairsSearch {
    Found(SignedPairsMatrix),
    /// Exhaustively refuted: no pairs construction on `n` vertices.
    Refuted,
    Timeout,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Pattern {
    pos: u32,
    neg: u32,
}

impl Pattern {
    fn support(self) -> u32 {
        (self.pos | self.neg).count_ones()
    }

    fn compatible(self, other: Pattern) -> bool {
        let same = ((self.pos & other.pos) | (self.neg & other.neg)).count_ones();
        let opposite = ((self.pos & other.neg) | (self.neg & other.pos)).count_ones();
        same % 2 == 1 && opposite % 2 == 1
    }
}

/// Searches for an `(n/2) × (n/2)` matrix satisfying the pairs conditions.
pub fn pairs_search(n: usize, budget: Option<Duration>) -> Result<PairsSearch> {
    if n % 2 == 1 || n == 0 {
        return Err(Error::InvalidParameter(format!(
            "n = {n} must be positive and even"
        )));
    }
    let s = n / 2;
    if s > MAX_PAIRS_HALF {
        return Err(Error::InvalidParameter(format!(
            "n / 2 = {s} exceeds the pairs search limit {MAX_PAIRS_HALF}"
        )));
    }
    let patterns = normalized_patterns(s);
    let target = if s % 2 == 1 { 1 } else { 3 };
    let mut search = Search {
        s,
        target,
        deadline: budget.map(|b| Instant::now() + b),
        nodes: 0,
        timed_out: false,
        rows: Vec::with_capacity(s),
        col_support: vec![0; s],
    };
    for a in (1..=s).step_by(2) {
        let first = Pattern {
            pos: (1u32 << a) - 1,
            neg: 0,
        };
        let pool: Vec<Pattern> = patterns
            .iter()
            .copied()
            .filter(|&p| p != first && p.support() >= a as u32 && p.compatible(first))
            .collect();
        search.push(first);
        let found = search.extend(&pool);
        if found {
            return Ok(PairsSearch::Found(search.matrix()));
        }
        search.pop();
        if search.timed_out {
            return Ok(PairsSearch::Timeout);
        }
    }
    Ok(PairsSearch::Refuted)
}

/// All odd-support patterns of length `s` whose first nonzero entry is
/// `+1`, in lexicographic order with `0 < +1 < −1` and column 0 leading.
fn normalized_patterns(s: usize) -> Vec<Pattern> {
    let total = 3usize.pow(s as u32);
    (0..total)
        .filter_map(|mut t| {
            let mut p = Pattern { pos: 0, neg: 0 };
            for col in (0..s).rev() {
                match t % 3 {
                    1 => p.pos |= 1 << col,
                    2 => p.neg |= 1 << col,
                    _ => {}
                }
                t /= 3;
            }
            let lowest = (p.pos | p.neg) & (p.pos | p.neg).wrapping_neg();
            (p.support() % 2 == 1 && p.pos & lowest != 0).then_some(p)
        })
        .collect()
}

struct Search {
    s: usize,
    target: u32,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
    rows: Vec<Pattern>,
    col_support: Vec<u32>,
}

impl Search {
    fn push(&mut self, p: Pattern) {
        for (j, c) in self.col_support.iter_mut().enumerate() {
            *c += (p.pos | p.neg) >> j & 1;
        }
        self.rows.push(p);
    }

    fn pop(&mut self) {
        let p = self.rows.pop().expect("nonempty stack");
        for (j, c) in self.col_support.iter_mut().enumerate() {
            *c -= (p.pos | p.neg) >> j & 1;
        }
    }

    /// Every column must still be able to reach a support `≡ target (mod 4)`.
    fn columns_feasible(&self) -> bool {
        let left = (self.s - self.rows.len()) as u32;
        self.col_support
            .iter()
            .all(|&c| (0..=left.min(3)).any(|extra| (c + extra) % 4 == self.target))
    }

    fn tick(&mut self) -> bool {
        self.nodes += 1;
        if self.nodes % 1024 == 0 {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    /// Extends the current rows from `pool` (patterns compatible with all
    /// of them, in increasing order).
    fn extend(&mut self, pool: &[Pattern]) -> bool {
        if !self.columns_feasible() {
            return false;
        }
        let need = self.s - self.rows.len();
        if need == 0 {
            return true;
        }
        if pool.len() < need || self.tick() {
            return false;
        }
        for (i, &p) in pool.iter().enumerate() {
            if pool.len() - i < need {
                break;
            }
            let rest: Vec<Pattern> = pool[i + 1..]
                .iter()
                .copied()
                .filter(|&q| q.compatible(p))
                .collect();
            self.push(p);
            if self.extend(&rest) {
                return true;
            }
            self.pop();
            if self.timed_out {
                return false;
            }
        }
        false
    }

    fn matrix(&self) -> SignedPairsMatrix {
        let rows: Vec<Vec<i8>> = self
            .rows
            .iter()
            .map(|p| {
                (0..self.s)
                    .map(|j| {
                        if p.pos >> j & 1 == 1 {
                            1
                        } else if p.neg >> j & 1 == 1 {
                            -1
                        } else {
                            0
                        }
                    })
                    .collect()
            })
            .collect();
        SignedPairsMatrix::from_rows(&rows).expect("square by construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::pairs_to_cover;
    use crate::graph::Graph;

    #[test]
    fn two_vertices() {
        let r = pairs_search(2, None).unwrap();
        assert_eq!(
            r,
            PairsSearch::Found(SignedPairsMatrix::from_rows(&[vec![1]]).unwrap())
        );
    }

    #[test]
    fn small_refutations() {
        assert_eq!(pairs_search(4, None).unwrap(), PairsSearch::Refuted);
        assert_eq!(pairs_search(6, None).unwrap(), PairsSearch::Refuted);
    }

    #[test]
    fn rejects_odd_n() {
        assert!(pairs_search(5, None).is_err());
    }

    #[test]
    fn found_matrices_are_covers() {
        for n in [2, 8, 10] {
            if let PairsSearch::Found(m) = pairs_search(n, None).unwrap() {
                assert!(m.satisfies_pair_conditions());
                let c = pairs_to_cover(&m).unwrap();
                let g = Graph::complete(n).unwrap();
                assert!(c.verify(&g).unwrap().valid);
                assert!(c.is_perfect(&g));
            }
        }
    }

    #[test]
    fn pattern_count() {
        // Odd-support patterns of length 3, halved by normalization.
        assert_eq!(normalized_patterns(3).len(), (27 + 1) / 2 / 2);
    }
}
