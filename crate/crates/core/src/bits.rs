//! Square bit matrices backing the strict-order relations.
//!
//! Rows are packed into `u64` words so subset tests and transitive
//! closure run one word at a time instead of one cell at a time.

use alloc::vec;
use alloc::vec::Vec;

const WORD_BITS: usize = 64;

/// An N×N boolean matrix with bit-packed rows.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BitMatrix {
    n: usize,
    words_per_row: usize,
    words: Vec<u64>,
}

impl BitMatrix {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(WORD_BITS);
        BitMatrix {
            n,
            words_per_row,
            words: vec![0; n * words_per_row],
        }
    }

    #[inline]
    pub fn size(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.n && j < self.n);
        let w = i * self.words_per_row + j / WORD_BITS;
        self.words[w] >> (j % WORD_BITS) & 1 != 0
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize) {
        assert!(i < self.n && j < self.n, "bit index out of range");
        let w = i * self.words_per_row + j / WORD_BITS;
        self.words[w] |= 1 << (j % WORD_BITS);
    }

    #[inline]
    fn row(&self, i: usize) -> &[u64] {
        &self.words[i * self.words_per_row..(i + 1) * self.words_per_row]
    }

    /// Is row `a` a subset of row `b`?
    pub fn row_subset(&self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.row(a), self.row(b));
        ra.iter().zip(rb).all(|(x, y)| x & !y == 0)
    }

    pub fn row_count(&self, i: usize) -> usize {
        self.row(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_indices(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        let n = self.n;
        (0..n).filter(move |&j| self.get(i, j))
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::new(self.n);
        for i in 0..self.n {
            for j in self.row_indices(i) {
                t.set(j, i);
            }
        }
        t
    }

    /// Warshall closure over packed rows: whenever i reaches k, i also
    /// reaches everything k reaches.
    pub fn close_transitive(&mut self) {
        let wpr = self.words_per_row;
        for k in 0..self.n {
            for i in 0..self.n {
                if i != k && self.get(i, k) {
                    let (ri, rk) = (i * wpr, k * wpr);
                    for w in 0..wpr {
                        self.words[ri + w] |= self.words[rk + w];
                    }
                }
            }
        }
    }

    pub fn iter_pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let n = self.n;
        (0..n).flat_map(move |i| self.row_indices(i).map(move |j| (i, j)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn set_get_across_word_boundary() {
        let mut m = BitMatrix::new(70);
        m.set(3, 63);
        m.set(3, 64);
        m.set(69, 69);
        assert!(m.get(3, 63) && m.get(3, 64) && m.get(69, 69));
        assert!(!m.get(3, 65));
        assert_eq!(m.row_count(3), 2);
    }

    #[test]
    fn closure_matches_naive() {
        let mut m = BitMatrix::new(4);
        m.set(0, 1);
        m.set(1, 2);
        m.set(2, 3);
        m.close_transitive();
        for (i, j) in [(0, 2), (0, 3), (1, 3)] {
            assert!(m.get(i, j));
        }
        assert!(!m.get(1, 0));
    }

    #[test]
    fn subset_rows() {
        let mut m = BitMatrix::new(3);
        m.set(0, 1);
        m.set(1, 1);
        m.set(1, 2);
        assert!(m.row_subset(0, 1));
        assert!(!m.row_subset(1, 0));
        assert!(m.row_subset(2, 0));
    }
}
