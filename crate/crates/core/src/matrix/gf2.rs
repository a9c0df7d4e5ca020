//! Packed F_2 matrices: one bit per entry, rows as runs of `u64` words.

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> BitMatrix {
        let words = cols.div_ceil(64).max(1);
        BitMatrix { rows, cols, words, data: vec![0; rows * words] }
    }

    pub fn from_digits(rows: usize, cols: usize, digits: &[u8]) -> BitMatrix {
        let mut m = BitMatrix::zeros(rows, cols);
        if cols == 0 {
            return m;
        }
        for (row, src) in m.data.chunks_exact_mut(m.words).zip(digits.chunks_exact(cols)) {
            for (word, bits) in row.iter_mut().zip(src.chunks(64)) {
                *word = bits.iter().rev().fold(0, |acc, &d| (acc << 1) | (d & 1) as u64);
            }
        }
        m
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        (self.data[i * self.words + j / 64] >> (j % 64)) & 1 == 1
    }

    #[inline]
    pub fn flip(&mut self, i: usize, j: usize) {
        self.data[i * self.words + j / 64] ^= 1 << (j % 64);
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words;
        let (lo, hi) = if a < b { (a, b) } else { (b, a) };
        let (head, tail) = self.data.split_at_mut(hi * w);
        head[lo * w..(lo + 1) * w].swap_with_slice(&mut tail[..w]);
    }

    /// Gauss-Jordan over F_2; pivots restricted to columns `< pivot_cols`.
    pub fn rref_in_place(&mut self, pivot_cols: usize) -> Vec<usize> {
        let w = self.words;
        let mut pivots = Vec::new();
        let mut pivot_row = vec![0u64; w];
        let mut r = 0;
        for c in 0..pivot_cols {
            if r == self.rows {
                break;
            }
            let (word, bit) = (c / 64, 1u64 << (c % 64));
            let Some(p) = (r..self.rows).find(|&i| self.data[i * w + word] & bit != 0) else {
                continue;
            };
            self.swap_rows(p, r);
            pivot_row[word..].copy_from_slice(&self.data[r * w + word..(r + 1) * w]);
            for (i, row) in self.data.chunks_exact_mut(w).enumerate() {
                if i != r && row[word] & bit != 0 {
                    for (x, y) in row[word..].iter_mut().zip(&pivot_row[word..]) {
                        *x ^= y;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn kernel_from_rref(&self, pivots: &[usize]) -> Vec<Vec<u8>> {
        let mut is_pivot = vec![false; self.cols];
        for &p in pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![0u8; self.cols];
                v[free] = 1;
                for (row, &p) in pivots.iter().enumerate() {
                    if self.get(row, free) {
                        v[p] = 1;
                    }
                }
                v
            })
            .collect()
    }

    pub fn to_digits(&self) -> Vec<u8> {
        let mut out = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.push(self.get(i, j) as u8);
            }
        }
        out
    }
}
