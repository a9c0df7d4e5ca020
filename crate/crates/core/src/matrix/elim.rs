//! Gauss-Jordan elimination shared by the F_q and F_{q^m} matrix types.

use crate::galois::{FieldCtx, Fqm};

pub(crate) trait Scalars {
    type E: Copy + PartialEq;
    fn zero(&self) -> Self::E;
    fn one(&self) -> Self::E;
    fn add(&self, a: Self::E, b: Self::E) -> Self::E;
    fn sub(&self, a: Self::E, b: Self::E) -> Self::E;
    fn mul(&self, a: Self::E, b: Self::E) -> Self::E;
    fn inv(&self, a: Self::E) -> Self::E;

    fn is_zero(&self, a: Self::E) -> bool {
        a == self.zero()
    }

    fn neg(&self, a: Self::E) -> Self::E {
        self.sub(self.zero(), a)
    }
}

impl Scalars for FieldCtx {
    type E = Fqm;

    fn zero(&self) -> Fqm {
        Fqm::ZERO
    }
    fn one(&self) -> Fqm {
        FieldCtx::one(self)
    }
    fn add(&self, a: Fqm, b: Fqm) -> Fqm {
        FieldCtx::add(self, a, b)
    }
    fn sub(&self, a: Fqm, b: Fqm) -> Fqm {
        FieldCtx::sub(self, a, b)
    }
    fn mul(&self, a: Fqm, b: Fqm) -> Fqm {
        FieldCtx::mul(self, a, b)
    }
    fn inv(&self, a: Fqm) -> Fqm {
        self.inv_nonzero(a)
    }
}

/// F_q with q prime, digits as `u8`.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PrimeField {
    pub q: u32,
}

impl Scalars for PrimeField {
    type E = u8;

    fn zero(&self) -> u8 {
        0
    }
    fn one(&self) -> u8 {
        1
    }
    fn add(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + b as u32) % self.q) as u8
    }
    fn sub(&self, a: u8, b: u8) -> u8 {
        ((a as u32 + self.q - b as u32) % self.q) as u8
    }
    fn mul(&self, a: u8, b: u8) -> u8 {
        ((a as u32 * b as u32) % self.q) as u8
    }
    fn inv(&self, a: u8) -> u8 {
        crate::galois::pow_mod_prime(a as u32, self.q - 2, self.q) as u8
    }
}

/// Reduces `data` (row-major, `rows x cols`) to reduced row echelon form,
/// pivoting only in columns `< pivot_cols`. The pivot of each step is the
/// lowest-index row with a nonzero entry. Returns the pivot columns.
pub(crate) fn rref_in_place<S: Scalars>(
    s: &S,
    data: &mut [S::E],
    rows: usize,
    cols: usize,
    pivot_cols: usize,
) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..pivot_cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !s.is_zero(data[i * cols + c])) else {
            continue;
        };
        if p != r {
            for j in 0..cols {
                data.swap(p * cols + j, r * cols + j);
            }
        }
        let inv = s.inv(data[r * cols + c]);
        for j in c..cols {
            data[r * cols + j] = s.mul(data[r * cols + j], inv);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let factor = data[i * cols + c];
            if s.is_zero(factor) {
                continue;
            }
            for j in c..cols {
                let v = s.mul(factor, data[r * cols + j]);
                data[i * cols + j] = s.sub(data[i * cols + j], v);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Right-kernel basis read off an RREF matrix: one vector per free column,
/// free columns in increasing order.
pub(crate) fn kernel_from_rref<S: Scalars>(s: &S, data: &[S::E], cols: usize, pivots: &[usize]) -> Vec<Vec<S::E>> {
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![s.zero(); cols];
        v[free] = s.one();
        for (row, &p) in pivots.iter().enumerate() {
            v[p] = s.neg(data[row * cols + free]);
        }
        basis.push(v);
    }
    basis
}

/// One solution of `A x^T = b^T` plus a basis of the right kernel of A.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution<E> {
    pub particular: Vec<E>,
    pub kernel: Vec<Vec<E>>,
}

pub(crate) fn solve<S: Scalars>(
    s: &S,
    data: &[S::E],
    rows: usize,
    cols: usize,
    rhs: &[S::E],
) -> Option<Solution<S::E>> {
    assert_eq!(rhs.len(), rows);
    let aug_cols = cols + 1;
    let mut aug = Vec::with_capacity(rows * aug_cols);
    for i in 0..rows {
        aug.extend_from_slice(&data[i * cols..(i + 1) * cols]);
        aug.push(rhs[i]);
    }
    let pivots = rref_in_place(s, &mut aug, rows, aug_cols, cols);
    let rank = pivots.len();
    if (rank..rows).any(|i| !s.is_zero(aug[i * aug_cols + cols])) {
        return None;
    }
    let mut particular = vec![s.zero(); cols];
    for (row, &p) in pivots.iter().enumerate() {
        particular[p] = aug[row * aug_cols + cols];
    }
    // kernel of the coefficient part: drop the rhs column
    let mut coeff = Vec::with_capacity(rows * cols);
    for i in 0..rows {
        coeff.extend_from_slice(&aug[i * aug_cols..i * aug_cols + cols]);
    }
    let kernel = kernel_from_rref(s, &coeff, cols, &pivots);
    Some(Solution { particular, kernel })
}
