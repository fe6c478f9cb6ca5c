//! Bi-infinite 0/1 words attached to partitions.
//!
//! Walking the border of a Ferrers diagram from south-west to north-east and
//! writing `0` for a vertical step and `1` for a horizontal step gives a word
//! `(c_k)` indexed by the integers. With the median between indices `-1` and
//! `0`, the zeros sit exactly at `{lambda_i - i : i >= 1}` (parts padded with
//! zeros). Words are stored as a finite zero set above a floor below which
//! every letter is `0`; nothing is ever materialised as a bi-infinite array.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::partitions::{Cell, Partition};

/// A 0/1 word with finitely many exceptions: every index below `floor` is a
/// `0`, every index above the largest stored zero is a `1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    floor: i64,
    zeros: BTreeSet<i64>,
}

impl Word {
    pub fn new(floor: i64, zeros: impl IntoIterator<Item = i64>) -> Self {
        let mut w = Word {
            floor,
            zeros: zeros.into_iter().filter(|&z| z >= floor).collect(),
        };
        w.tighten();
        w
    }

    // Raise the floor past any run of explicit zeros directly above it.
    fn tighten(&mut self) {
        while self.zeros.remove(&self.floor) {
            self.floor += 1;
        }
    }

    pub fn floor(&self) -> i64 {
        self.floor
    }

    /// Explicit zeros at or above the floor, ascending.
    pub fn explicit_zeros(&self) -> impl DoubleEndedIterator<Item = i64> + '_ {
        self.zeros.iter().copied()
    }

    pub fn bit(&self, k: i64) -> u8 {
        if k < self.floor || self.zeros.contains(&k) {
            0
        } else {
            1
        }
    }

    /// First index from which every letter is `1`.
    pub fn top(&self) -> i64 {
        self.zeros.last().map_or(self.floor, |z| z + 1)
    }

    pub fn ones_below(&self, k: i64) -> usize {
        if k <= self.floor {
            return 0;
        }
        let zeros = self.zeros.range(self.floor..k).count();
        (k - self.floor) as usize - zeros
    }

    pub fn zeros_from(&self, k: i64) -> usize {
        if k < self.floor {
            // Only reachable for unbalanced queries; counts the implicit run.
            return (self.floor - k) as usize + self.zeros.len();
        }
        self.zeros.range(k..).count()
    }

    /// `#{k >= 0 : c_k = 0} - #{k < 0 : c_k = 1}`; zero exactly for words in
    /// median position.
    pub fn charge(&self) -> i64 {
        self.zeros_from(0) as i64 - self.ones_below(0) as i64
    }

    /// The word `k -> c_{k + by}`.
    pub fn shifted(&self, by: i64) -> Word {
        Word {
            floor: self.floor - by,
            zeros: self.zeros.iter().map(|z| z - by).collect(),
        }
    }

    /// Moves the median so that the word is balanced.
    pub fn normalized(&self) -> BoundaryWord {
        BoundaryWord(self.shifted(self.charge()))
    }

    /// `i -> c_{step * i + residue}`.
    pub fn subword(&self, step: i64, residue: i64) -> Word {
        debug_assert!(step > 0 && (0..step).contains(&residue));
        let floor = (self.floor - residue).div_euclid(step)
            + i64::from((self.floor - residue).rem_euclid(step) != 0);
        let zeros = self
            .zeros
            .iter()
            .filter(|z| (*z - residue).rem_euclid(step) == 0)
            .map(|z| (z - residue) / step);
        // Indices in [floor*step+residue, self.floor) are implicit zeros.
        let implicit = (floor..).take_while(|i| i * step + residue < self.floor);
        Word::new(floor, implicit.chain(zeros).collect::<Vec<_>>())
    }

    /// Interleaves `parts[k]` as the residue-`k` subword.
    pub fn interleave(parts: &[Word]) -> Word {
        let step = parts.len() as i64;
        let floor = parts
            .iter()
            .enumerate()
            .map(|(k, w)| w.floor * step + k as i64)
            .min()
            .unwrap_or(0);
        let mut zeros = Vec::new();
        for (k, w) in parts.iter().enumerate() {
            let k = k as i64;
            let start = (floor - k).div_euclid(step);
            for i in start..w.floor {
                zeros.push(i * step + k);
            }
            zeros.extend(w.zeros.iter().map(|z| z * step + k));
        }
        Word::new(floor, zeros)
    }

    /// `...c_{lo}...c_{-1}|c_0...c_{hi-1}...`.
    pub fn render(&self, lo: i64, hi: i64) -> String {
        let mut s = String::from("...");
        for k in lo..hi {
            if k == 0 {
                s.push('|');
            }
            s.push(if self.bit(k) == 0 { '0' } else { '1' });
        }
        if hi <= 0 {
            s.push('|');
        }
        s.push_str("...");
        s
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lo = self.floor.min(0) - 2;
        let hi = self.top().max(0) + 2;
        f.write_str(&self.render(lo, hi))
    }
}

/// A balanced word, i.e. the image of a partition.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BoundaryWord(Word);

/// The index pair `(i, j)` of a cell: `c_i = 1`, `c_j = 0`, `j - i` is the hook.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexPair {
    pub i: i64,
    pub j: i64,
}

impl BoundaryWord {
    pub fn encode(p: &Partition) -> Self {
        let len = p.len() as i64;
        let zeros = p
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &part)| part as i64 - i as i64 - 1);
        BoundaryWord(Word::new(-len, zeros.collect::<Vec<_>>()))
    }

    pub fn from_word(w: Word) -> Result<Self> {
        let ones_left = w.ones_below(0);
        let zeros_right = w.zeros_from(0);
        if ones_left != zeros_right {
            return Err(Error::UnbalancedWord {
                ones_left,
                zeros_right,
            });
        }
        Ok(BoundaryWord(w))
    }

    pub fn word(&self) -> &Word {
        &self.0
    }

    pub fn bit(&self, k: i64) -> u8 {
        self.0.bit(k)
    }

    /// Reads `lambda_i = z_i + i` off the zeros listed in decreasing order.
    pub fn decode(&self) -> Partition {
        let w = &self.0;
        let mut parts = Vec::new();
        let mut i = 1i64;
        for z in w.zeros.iter().rev() {
            parts.push((z + i) as u32);
            i += 1;
        }
        // Implicit zeros below the floor continue the sequence; balance makes
        // the first of them land on `-i`, which is a zero-length row.
        debug_assert_eq!(w.floor - 1 + i, 0, "balanced word decodes past the floor");
        Partition::from_padded(parts)
    }

    /// Number of ones of negative index; equals the Durfee size.
    pub fn ones_left(&self) -> usize {
        self.0.ones_below(0)
    }

    /// Default display window: `max(len, lambda_1) + 2` letters on each side.
    pub fn render(&self) -> String {
        let p = self.decode();
        let w = p.len().max(p.part(1) as usize) as i64 + 2;
        self.0.render(-w, w)
    }
}

impl fmt::Debug for BoundaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Pairs every cell with its index pair. Row `r` owns the zero at
/// `lambda_r - r`; column `c` owns the one at `c - 1 - lambda'_c`.
pub fn box_index_pairs(p: &Partition) -> Vec<(Cell, IndexPair)> {
    let conj = p.conjugate();
    p.cells()
        .into_iter()
        .map(|cell| {
            let j = p.part(cell.row as usize) as i64 - cell.row as i64;
            let i = cell.col as i64 - 1 - conj.part(cell.col as usize) as i64;
            (cell, IndexPair { i, j })
        })
        .collect()
}

/// All `(i, j)` with `i < j`, `c_i = 1`, `c_j = 0`, found by scanning the word.
pub fn index_pairs_by_scan(w: &BoundaryWord) -> Vec<IndexPair> {
    let word = w.word();
    let lo = word.floor();
    let hi = word.top();
    let mut out = Vec::new();
    for i in lo..hi {
        if word.bit(i) != 1 {
            continue;
        }
        for j in (i + 1)..hi {
            if word.bit(j) == 0 {
                out.push(IndexPair { i, j });
            }
        }
    }
    out
}

/// Whether the cell with index pair `pair` lies on or above the main
/// diagonal (`eps = +1`).
///
/// The cell sits in column `1 + #{k < i : c_k = 1}` and row
/// `1 + #{k > j : c_k = 0}`, so the test compares these two ranks. The
/// absolute values `|i|`, `|j|` alone cannot decide it: `(-2, 0)` is the
/// diagonal cell of `(1,1)` and a below-diagonal cell of `(2,2)`.
pub fn is_above_diagonal(w: &BoundaryWord, pair: IndexPair) -> bool {
    let word = w.word();
    let col = word.ones_below(pair.i);
    let row = word.zeros_from(pair.j + 1);
    col >= row
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn zeros_in(w: &BoundaryWord, lo: i64, hi: i64) -> Vec<i64> {
        (lo..hi).filter(|&k| w.bit(k) == 0).collect()
    }

    #[test]
    fn encode_examples() {
        let w = BoundaryWord::encode(&p("4,4,3,2"));
        assert_eq!(zeros_in(&w, -8, 8), vec![-8, -7, -6, -5, -2, 0, 2, 3]);
        assert_eq!(w.render(), "...001101|010011...");
        let e = BoundaryWord::encode(&Partition::empty());
        assert_eq!(zeros_in(&e, -5, 5), vec![-5, -4, -3, -2, -1]);
        let w = BoundaryWord::encode(&p("4,2"));
        assert_eq!(zeros_in(&w, -6, 8), vec![-6, -5, -4, -3, 0, 3]);
        assert_eq!(w.render(), "...000011|011011...");
    }

    #[test]
    fn decode_examples() {
        let w = Word::new(-10, [-9, -8, -7, -6, -5, -3, -2, 1, 4, 10]);
        let b = BoundaryWord::from_word(w).unwrap();
        assert_eq!(b.decode(), p("11,6,4,2,2,1,1,1,1,1"));
        let e = BoundaryWord::from_word(Word::new(0, [])).unwrap();
        assert_eq!(e.decode(), Partition::empty());
        let shifted = Word::new(1, []);
        assert!(matches!(
            BoundaryWord::from_word(shifted),
            Err(Error::UnbalancedWord { .. })
        ));
    }

    #[test]
    fn index_pair_examples() {
        let pairs = box_index_pairs(&p("1"));
        assert_eq!(pairs[0].1, IndexPair { i: -1, j: 0 });
        let mut gaps: Vec<i64> = box_index_pairs(&p("2,1")).iter().map(|(_, q)| q.j - q.i).collect();
        gaps.sort();
        assert_eq!(gaps, vec![1, 1, 3]);
    }

    #[test]
    fn diagonal_test_examples() {
        let lam = p("1");
        let w = BoundaryWord::encode(&lam);
        assert!(is_above_diagonal(&w, IndexPair { i: -1, j: 0 }));
        let lam = p("2");
        let w = BoundaryWord::encode(&lam);
        assert!(is_above_diagonal(&w, IndexPair { i: 0, j: 1 }));
        let lam = p("2,1");
        let w = BoundaryWord::encode(&lam);
        let (cell, pair) = box_index_pairs(&lam).into_iter().find(|(c, _)| c.row == 2).unwrap();
        assert_eq!(cell.eps, -1);
        assert!(!is_above_diagonal(&w, pair));
    }

    #[test]
    fn index_pairs_do_not_determine_the_sign() {
        let a = box_index_pairs(&p("1,1"));
        let b = box_index_pairs(&p("2,2"));
        let target = IndexPair { i: -2, j: 0 };
        let ea = a.iter().find(|(_, q)| *q == target).unwrap().0.eps;
        let eb = b.iter().find(|(_, q)| *q == target).unwrap().0.eps;
        assert_eq!((ea, eb), (1, -1));
    }

    #[test]
    fn subword_and_interleave_invert() {
        let w = BoundaryWord::encode(&p("11,6,4,2,2,1,1,1,1,1"));
        for t in 1..7 {
            let subs: Vec<Word> = (0..t).map(|k| w.word().subword(t, k)).collect();
            assert_eq!(&Word::interleave(&subs), w.word());
        }
    }
}
