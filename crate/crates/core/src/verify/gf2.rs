//! Dense matrices over the two-element field, rows packed into `u64` words.

use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words = cols.div_ceil(64).max(1);
        BitMatrix {
            rows,
            cols,
            words,
            data: vec![0; rows * words],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds from columns given as bit vectors of length `rows`.
    pub fn from_columns(rows: usize, columns: &[Vec<bool>]) -> Self {
        let mut m = Self::zeros(rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            debug_assert_eq!(col.len(), rows);
            for (r, &b) in col.iter().enumerate() {
                m.set(r, c, b);
            }
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        self.data[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: bool) {
        let w = &mut self.data[r * self.words + c / 64];
        if v {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    fn xor_row_into(&mut self, src: usize, dst: usize) {
        for k in 0..self.words {
            let v = self.data[src * self.words + k];
            self.data[dst * self.words + k] ^= v;
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for k in 0..self.words {
                self.data.swap(a * self.words + k, b * self.words + k);
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    pub fn column(&self, c: usize) -> Vec<bool> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn mul(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch");
        let mut out = BitMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                if self.get(r, k) {
                    for w in 0..out.words {
                        out.data[r * out.words + w] ^= rhs.data[k * rhs.words + w];
                    }
                }
            }
        }
        out
    }

    pub fn apply(&self, v: &[bool]) -> Vec<bool> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| (0..self.cols).fold(false, |acc, c| acc ^ (self.get(r, c) & v[c])))
            .collect()
    }

    pub fn add(&self, rhs: &BitMatrix) -> BitMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= b;
        }
        out
    }

    /// Reduced row echelon form in place; returns the pivot columns.
    pub fn reduce(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| self.get(i, c)) else {
                continue;
            };
            self.swap_rows(r, p);
            for i in 0..self.rows {
                if i != r && self.get(i, c) {
                    self.xor_row_into(r, i);
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().reduce().len()
    }

    /// Basis of `{x : self·x = 0}`, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<bool>> {
        let mut m = self.clone();
        let pivots = m.reduce();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut x = vec![false; self.cols];
            x[free] = true;
            for (r, &p) in pivots.iter().enumerate() {
                if m.get(r, free) {
                    x[p] = true;
                }
            }
            basis.push(x);
        }
        basis
    }

    /// Rows as bit vectors.
    pub fn to_rows(&self) -> Vec<Vec<bool>> {
        (0..self.rows)
            .map(|r| (0..self.cols).map(|c| self.get(r, c)).collect())
            .collect()
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows {
            let line: String = (0..self.cols).map(|c| if self.get(r, c) { '1' } else { '0' }).collect();
            writeln!(f, "  {line}")?;
        }
        Ok(())
    }
}

/// Rank of a set of vectors of equal length.
pub fn rank_of(vectors: &[Vec<bool>]) -> usize {
    let Some(len) = vectors.first().map(Vec::len) else {
        return 0;
    };
    let mut m = BitMatrix::zeros(vectors.len(), len);
    for (r, v) in vectors.iter().enumerate() {
        for (c, &b) in v.iter().enumerate() {
            m.set(r, c, b);
        }
    }
    m.rank()
}
