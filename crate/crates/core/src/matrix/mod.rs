//! Dense linear algebra over F_q and F_{q^m}, plus the rank-metric notions
//! built on it: supports, rank weights, Moore matrices and the unfolding of
//! F_{q^m}-linear constraints on F_q-valued unknowns.
//!
//! Kernels are right kernels `{x : M x^T = 0}` and are always returned in
//! the canonical form read off the reduced row echelon form (one vector per
//! free column, free columns ascending).

mod elim;
mod gf2;

use rand::Rng;
use thiserror::Error;

use crate::galois::{FieldCtx, Fqm};
use elim::{PrimeField, Scalars};
use gf2::BitMatrix;

pub use elim::Solution;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("linear system is inconsistent")]
    InconsistentSystem,
    #[error("matrix is singular")]
    Singular,
    #[error("vector of rank weight {got} is not a basis of F_q^{m}")]
    NotABasis { got: usize, m: usize },
    #[error("elements are not linearly independent over F_q")]
    DependentBasis,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

/// Matrix over the prime field F_q.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatFq {
    q: u32,
    rows: usize,
    cols: usize,
    data: Vec<u8>,
}

impl MatFq {
    pub fn zeros(q: u32, rows: usize, cols: usize) -> MatFq {
        MatFq { q, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(q: u32, n: usize) -> MatFq {
        let mut m = MatFq::zeros(q, n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(q: u32, rows: &[Vec<u8>]) -> MatFq {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend(r.iter().map(|&d| (d as u32 % q) as u8));
        }
        MatFq { q, rows: rows.len(), cols, data }
    }

    pub fn q(&self) -> u32 {
        self.q
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u8 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u8) {
        self.data[i * self.cols + j] = (v as u32 % self.q) as u8;
    }

    pub fn row(&self, i: usize) -> &[u8] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[u8] {
        &self.data
    }

    pub fn transpose(&self) -> MatFq {
        let mut t = MatFq::zeros(self.q, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.get(i, j);
            }
        }
        t
    }

    pub fn mul(&self, other: &MatFq) -> MatFq {
        assert_eq!(self.cols, other.rows);
        let f = PrimeField { q: self.q };
        let mut out = MatFq::zeros(self.q, self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = f.add(out.data[idx], f.mul(a, other.get(l, j)));
                }
            }
        }
        out
    }

    /// Reduced row echelon form and its pivot columns.
    pub fn rref(&self) -> (MatFq, Vec<usize>) {
        if self.q == 2 {
            let mut bits = BitMatrix::from_digits(self.rows, self.cols, &self.data);
            let pivots = bits.rref_in_place(self.cols);
            let reduced = MatFq { q: 2, rows: self.rows, cols: self.cols, data: bits.to_digits() };
            return (reduced, pivots);
        }
        let mut data = self.data.clone();
        let pivots = elim::rref_in_place(&PrimeField { q: self.q }, &mut data, self.rows, self.cols, self.cols);
        (MatFq { data, ..self.clone() }, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn kernel(&self) -> Vec<Vec<u8>> {
        if self.q == 2 {
            let mut bits = BitMatrix::from_digits(self.rows, self.cols, &self.data);
            let pivots = bits.rref_in_place(self.cols);
            return bits.kernel_from_rref(&pivots);
        }
        let (reduced, pivots) = self.rref();
        elim::kernel_from_rref(&PrimeField { q: self.q }, &reduced.data, self.cols, &pivots)
    }

    pub fn solve(&self, rhs: &[u8]) -> Result<Solution<u8>, MatrixError> {
        if rhs.len() != self.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "rhs has {} entries for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        if self.q == 2 {
            let cols = self.cols + 1;
            let mut bits = BitMatrix::zeros(self.rows, cols);
            for i in 0..self.rows {
                for j in 0..self.cols {
                    if self.get(i, j) == 1 {
                        bits.flip(i, j);
                    }
                }
                if rhs[i] & 1 == 1 {
                    bits.flip(i, self.cols);
                }
            }
            let pivots = bits.rref_in_place(self.cols);
            if (pivots.len()..self.rows).any(|i| bits.get(i, self.cols)) {
                return Err(MatrixError::InconsistentSystem);
            }
            let mut particular = vec![0u8; self.cols];
            for (row, &p) in pivots.iter().enumerate() {
                particular[p] = bits.get(row, self.cols) as u8;
            }
            let mut kernel = bits.kernel_from_rref(&pivots);
            // the rhs column is never a pivot, so its vector comes last
            kernel.pop();
            for v in kernel.iter_mut() {
                v.pop();
            }
            return Ok(Solution { particular, kernel });
        }
        elim::solve(&PrimeField { q: self.q }, &self.data, self.rows, self.cols, rhs)
            .ok_or(MatrixError::InconsistentSystem)
    }

    pub fn inverse(&self) -> Result<MatFq, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Singular);
        }
        let n = self.rows;
        let mut aug = vec![0u8; n * 2 * n];
        for i in 0..n {
            aug[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug[i * 2 * n + n + i] = 1;
        }
        let pivots = elim::rref_in_place(&PrimeField { q: self.q }, &mut aug, n, 2 * n, n);
        if pivots.len() < n {
            return Err(MatrixError::Singular);
        }
        let mut inv = MatFq::zeros(self.q, n, n);
        for i in 0..n {
            inv.data[i * n..(i + 1) * n].copy_from_slice(&aug[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Ok(inv)
    }
}

/// Matrix over F_{q^m}. Arithmetic takes the field context explicitly.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MatFqm {
    rows: usize,
    cols: usize,
    data: Vec<Fqm>,
}

impl MatFqm {
    pub fn zeros(rows: usize, cols: usize) -> MatFqm {
        MatFqm { rows, cols, data: vec![Fqm::ZERO; rows * cols] }
    }

    pub fn identity(ctx: &FieldCtx, n: usize) -> MatFqm {
        let mut m = MatFqm::zeros(n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn diag(entries: &[Fqm]) -> MatFqm {
        let n = entries.len();
        let mut m = MatFqm::zeros(n, n);
        for (i, &e) in entries.iter().enumerate() {
            m.set(i, i, e);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<Fqm>]) -> MatFqm {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        MatFqm { rows: rows.len(), cols, data }
    }

    pub fn from_vec(rows: usize, cols: usize, data: Vec<Fqm>) -> MatFqm {
        assert_eq!(data.len(), rows * cols);
        MatFqm { rows, cols, data }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Fqm) -> MatFqm {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        MatFqm { rows, cols, data }
    }

    /// Lifts an F_q matrix.
    pub fn from_base(ctx: &FieldCtx, m: &MatFq) -> MatFqm {
        MatFqm::from_fn(m.rows(), m.cols(), |i, j| ctx.from_base(m.get(i, j) as u32))
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Fqm {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Fqm) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Fqm] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Fqm> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn entries(&self) -> &[Fqm] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    pub fn transpose(&self) -> MatFqm {
        MatFqm::from_fn(self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, ctx: &FieldCtx, other: &MatFqm) -> MatFqm {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = MatFqm::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * other.cols + j;
                    out.data[idx] = ctx.add(out.data[idx], ctx.mul(a, other.get(l, j)));
                }
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn left_apply(&self, ctx: &FieldCtx, v: &[Fqm]) -> Vec<Fqm> {
        assert_eq!(v.len(), self.rows);
        let mut out = vec![Fqm::ZERO; self.cols];
        for (i, &a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                *o = ctx.add(*o, ctx.mul(a, self.get(i, j)));
            }
        }
        out
    }

    /// Matrix times column vector.
    pub fn apply(&self, ctx: &FieldCtx, v: &[Fqm]) -> Vec<Fqm> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).fold(Fqm::ZERO, |acc, (&a, &b)| ctx.add(acc, ctx.mul(a, b))))
            .collect()
    }

    pub fn scale(&self, ctx: &FieldCtx, c: Fqm) -> MatFqm {
        MatFqm { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| ctx.mul(a, c)).collect() }
    }

    /// Entrywise Frobenius power.
    pub fn frobenius(&self, ctx: &FieldCtx, i: i64) -> MatFqm {
        MatFqm { rows: self.rows, cols: self.cols, data: self.data.iter().map(|&a| ctx.frobenius(a, i)).collect() }
    }

    /// Vertical concatenation.
    pub fn stack(&self, below: &MatFqm) -> MatFqm {
        assert_eq!(self.cols, below.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        MatFqm { rows: self.rows + below.rows, cols: self.cols, data }
    }

    pub fn rref(&self, ctx: &FieldCtx) -> (MatFqm, Vec<usize>) {
        let mut data = self.data.clone();
        let pivots = elim::rref_in_place(ctx, &mut data, self.rows, self.cols, self.cols);
        (MatFqm { data, ..self.clone() }, pivots)
    }

    pub fn rank(&self, ctx: &FieldCtx) -> usize {
        self.rref(ctx).1.len()
    }

    pub fn kernel(&self, ctx: &FieldCtx) -> Vec<Vec<Fqm>> {
        let (reduced, pivots) = self.rref(ctx);
        elim::kernel_from_rref(ctx, &reduced.data, self.cols, &pivots)
    }

    pub fn solve(&self, ctx: &FieldCtx, rhs: &[Fqm]) -> Result<Solution<Fqm>, MatrixError> {
        if rhs.len() != self.rows {
            return Err(MatrixError::DimensionMismatch(format!(
                "rhs has {} entries for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        elim::solve(ctx, &self.data, self.rows, self.cols, rhs).ok_or(MatrixError::InconsistentSystem)
    }

    pub fn inverse(&self, ctx: &FieldCtx) -> Result<MatFqm, MatrixError> {
        if self.rows != self.cols {
            return Err(MatrixError::Singular);
        }
        let n = self.rows;
        let mut aug = vec![Fqm::ZERO; n * 2 * n];
        for i in 0..n {
            aug[i * 2 * n..i * 2 * n + n].copy_from_slice(self.row(i));
            aug[i * 2 * n + n + i] = ctx.one();
        }
        let pivots = elim::rref_in_place(ctx, &mut aug, n, 2 * n, n);
        if pivots.len() < n {
            return Err(MatrixError::Singular);
        }
        let mut inv = MatFqm::zeros(n, n);
        for i in 0..n {
            inv.data[i * n..(i + 1) * n].copy_from_slice(&aug[i * 2 * n + n..(i + 1) * 2 * n]);
        }
        Ok(inv)
    }
}

/// The digit-expansion matrix: one row per element, one column per
/// polynomial-basis coordinate.
pub fn expansion_matrix(ctx: &FieldCtx, elems: &[Fqm]) -> MatFq {
    let rows: Vec<Vec<u8>> = elems.iter().map(|&e| ctx.digits(e)).collect();
    if rows.is_empty() {
        return MatFq::zeros(ctx.q(), 0, ctx.m());
    }
    MatFq::from_rows(ctx.q(), &rows)
}

/// An F_q-subspace of F_{q^m} given by a linearly independent basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    basis: Vec<Fqm>,
}

impl Subspace {
    /// Checks independence and keeps the basis as given.
    pub fn from_basis(ctx: &FieldCtx, basis: Vec<Fqm>) -> Result<Subspace, MatrixError> {
        if expansion_matrix(ctx, &basis).rank() != basis.len() {
            return Err(MatrixError::DependentBasis);
        }
        Ok(Subspace { basis })
    }

    /// Span of arbitrary elements, with the echelon basis from their expansion.
    pub fn span(ctx: &FieldCtx, elems: &[Fqm]) -> Subspace {
        let (reduced, pivots) = expansion_matrix(ctx, elems).rref();
        let basis = (0..pivots.len()).map(|i| ctx.from_digits(reduced.row(i))).collect();
        Subspace { basis }
    }

    /// Greedy independent prefix: keeps each element that is not in the span of the kept ones.
    pub fn independent_prefix(ctx: &FieldCtx, elems: &[Fqm]) -> Subspace {
        let mut kept: Vec<Fqm> = Vec::new();
        for &e in elems {
            kept.push(e);
            if expansion_matrix(ctx, &kept).rank() < kept.len() {
                kept.pop();
            }
        }
        Subspace { basis: kept }
    }

    pub fn basis(&self) -> &[Fqm] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, ctx: &FieldCtx, x: Fqm) -> bool {
        let mut elems = self.basis.clone();
        elems.push(x);
        expansion_matrix(ctx, &elems).rank() == self.dim()
    }

    pub fn is_subspace_of(&self, ctx: &FieldCtx, other: &Subspace) -> bool {
        self.basis.iter().all(|&b| other.contains(ctx, b))
    }

    /// alpha * self.
    pub fn scaled(&self, ctx: &FieldCtx, alpha: Fqm) -> Subspace {
        Subspace { basis: self.basis.iter().map(|&b| ctx.mul(alpha, b)).collect() }
    }
}

/// Moore matrix with k rows: row i is (g_1^{[i]}, ..., g_n^{[i]}).
pub fn moore_matrix(ctx: &FieldCtx, g: &[Fqm], k: usize) -> MatFqm {
    moore_matrix_from(ctx, g, 0, k)
}

/// Moore rows with Frobenius exponents `start .. start + k`.
pub fn moore_matrix_from(ctx: &FieldCtx, g: &[Fqm], start: i64, k: usize) -> MatFqm {
    MatFqm::from_fn(k, g.len(), |i, j| ctx.frobenius(g[j], start + i as i64))
}

/// F_q-span of all entries.
pub fn support(ctx: &FieldCtx, entries: &[Fqm]) -> Subspace {
    Subspace::span(ctx, entries)
}

/// Dimension of the support.
pub fn rank_weight(ctx: &FieldCtx, entries: &[Fqm]) -> usize {
    expansion_matrix(ctx, entries).rank()
}

/// Expands each F_{q^m}-equation `sum_u c_u x_u = 0` (one row of `system`,
/// unknowns x_u in F_q) into m F_q-equations, one per basis coordinate.
/// Row `e * m + d` of the result is coordinate d of equation e.
pub fn unfold_over_base(ctx: &FieldCtx, system: &MatFqm) -> MatFq {
    let m = ctx.m();
    let mut out = MatFq::zeros(ctx.q(), system.rows() * m, system.cols());
    for e in 0..system.rows() {
        for (u, &c) in system.row(e).iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for d in 0..m {
                out.set(e * m + d, u, ctx.digit(c, d));
            }
        }
    }
    out
}

/// Matching right-hand side for [`unfold_over_base`].
pub fn unfold_rhs(ctx: &FieldCtx, rhs: &[Fqm]) -> Vec<u8> {
    rhs.iter().flat_map(|&r| ctx.digits(r)).collect()
}

/// T over F_q with `basis * T = v`: column j holds the coordinates of v_j
/// in the F_q-basis of F_{q^m} formed by the entries of `basis`.
pub fn support_change_matrix(ctx: &FieldCtx, basis: &[Fqm], v: &[Fqm]) -> Result<MatFq, MatrixError> {
    let m = ctx.m();
    let got = rank_weight(ctx, basis);
    if basis.len() != m || got != m {
        return Err(MatrixError::NotABasis { got, m });
    }
    // column i of B is the expansion of basis_i, so B c = digits(v_j)
    let b_inv = expansion_matrix(ctx, basis).transpose().inverse()?;
    let mut t = MatFq::zeros(ctx.q(), m, v.len());
    for (j, &vj) in v.iter().enumerate() {
        let d = MatFq::from_rows(ctx.q(), &[ctx.digits(vj)]).transpose();
        let c = b_inv.mul(&d);
        for i in 0..m {
            t.set(i, j, c.get(i, 0));
        }
    }
    Ok(t)
}

/// Row vector over F_{q^m} times an F_q matrix.
pub fn apply_base_matrix(ctx: &FieldCtx, v: &[Fqm], t: &MatFq) -> Vec<Fqm> {
    assert_eq!(v.len(), t.rows());
    (0..t.cols())
        .map(|j| v.iter().enumerate().fold(Fqm::ZERO, |acc, (i, &a)| ctx.add(acc, ctx.scale(a, t.get(i, j) as u32))))
        .collect()
}

/// Uniform F_q matrix of full rank min(rows, cols), by rejection.
pub fn random_full_rank_fq<R: Rng + ?Sized>(q: u32, rows: usize, cols: usize, rng: &mut R) -> MatFq {
    loop {
        let data: Vec<Vec<u8>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..q) as u8).collect()).collect();
        let m = MatFq::from_rows(q, &data);
        if m.rank() == rows.min(cols) {
            return m;
        }
    }
}

/// Uniform vector of length n and rank weight exactly w: a uniform
/// w-dimensional support times a uniform full-rank w x n coordinate matrix.
pub fn random_rank_vector<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R, n: usize, w: usize) -> Vec<Fqm> {
    assert!(w <= n.min(ctx.m()), "rank weight {w} impossible for length {n} over degree {}", ctx.m());
    if w == 0 {
        return vec![Fqm::ZERO; n];
    }
    let support = random_full_rank_fq(ctx.q(), w, ctx.m(), rng);
    let basis: Vec<Fqm> = (0..w).map(|l| ctx.from_digits(support.row(l))).collect();
    apply_base_matrix(ctx, &basis, &random_full_rank_fq(ctx.q(), w, n, rng))
}

/// Uniform invertible n x n matrix over F_{q^m}.
pub fn random_invertible<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R, n: usize) -> MatFqm {
    loop {
        let m = MatFqm::from_fn(n, n, |_, _| ctx.random(rng));
        if m.rank(ctx) == n {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha20Rng;

    fn random_fq(rng: &mut impl Rng, q: u32, rows: usize, cols: usize) -> MatFq {
        let data: Vec<Vec<u8>> = (0..rows).map(|_| (0..cols).map(|_| rng.gen_range(0..q) as u8).collect()).collect();
        MatFq::from_rows(q, &data)
    }

    /// All F_2 assignments x with M x^T = 0, by brute force.
    fn brute_kernel_f2(m: &MatFq) -> Vec<Vec<u8>> {
        let n = m.cols();
        (0u32..1 << n)
            .map(|bits| (0..n).map(|j| ((bits >> j) & 1) as u8).collect::<Vec<u8>>())
            .filter(|x| (0..m.rows()).all(|i| m.row(i).iter().zip(x).map(|(&a, &b)| a & b).sum::<u8>() % 2 == 0))
            .collect()
    }

    fn span_f2(basis: &[Vec<u8>], n: usize) -> Vec<Vec<u8>> {
        let mut out: Vec<Vec<u8>> = (0u32..1 << basis.len())
            .map(|c| {
                let mut v = vec![0u8; n];
                for (i, b) in basis.iter().enumerate() {
                    if (c >> i) & 1 == 1 {
                        for j in 0..n {
                            v[j] ^= b[j];
                        }
                    }
                }
                v
            })
            .collect();
        out.sort();
        out
    }

    #[test]
    fn identity_and_zero_edge_cases() {
        assert!(MatFq::identity(2, 5).kernel().is_empty());
        assert_eq!(MatFq::zeros(2, 4, 6).rank(), 0);
        assert_eq!(MatFq::zeros(3, 4, 6).kernel().len(), 6);
        let ctx = FieldCtx::new(2, 4, None).unwrap();
        assert!(MatFqm::identity(&ctx, 3).kernel(&ctx).is_empty());
        assert_eq!(MatFqm::zeros(2, 3).rank(&ctx), 0);
    }

    #[test]
    fn rank_matches_row_span_enumeration() {
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        for _ in 0..50 {
            let m = random_fq(&mut rng, 2, 6, 4);
            let rows: Vec<Vec<u8>> = (0..6).map(|i| m.row(i).to_vec()).collect();
            let mut span = span_f2(&rows, 4);
            span.dedup();
            // |row span| = 2^rank
            assert_eq!(span.len(), 1 << m.rank());
        }
    }

    #[test]
    fn kernel_and_solve_match_brute_force() {
        let mut rng = ChaCha20Rng::seed_from_u64(9);
        for trial in 0..60 {
            let rows = 1 + trial % 8;
            let cols = 1 + (trial * 7) % 10;
            let m = random_fq(&mut rng, 2, rows, cols);
            let mut brute = brute_kernel_f2(&m);
            brute.sort();
            assert_eq!(span_f2(&m.kernel(), cols), brute);

            let x: Vec<u8> = (0..cols).map(|_| rng.gen_range(0..2)).collect();
            let rhs: Vec<u8> =
                (0..rows).map(|i| m.row(i).iter().zip(&x).map(|(&a, &b)| a & b).sum::<u8>() % 2).collect();
            let sol = m.solve(&rhs).unwrap();
            let check: Vec<u8> =
                (0..rows).map(|i| m.row(i).iter().zip(&sol.particular).map(|(&a, &b)| a & b).sum::<u8>() % 2).collect();
            assert_eq!(check, rhs);
            assert_eq!(sol.kernel.len(), cols - m.rank());
        }
    }

    #[test]
    fn generic_prime_path_agrees_with_inverse() {
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let mut found = 0;
        while found < 10 {
            let m = random_fq(&mut rng, 5, 4, 4);
            if let Ok(inv) = m.inverse() {
                assert_eq!(m.mul(&inv), MatFq::identity(5, 4));
                found += 1;
            } else {
                assert!(m.rank() < 4);
                assert!(!m.kernel().is_empty());
            }
        }
    }

    #[test]
    fn inconsistent_system_is_reported() {
        let m = MatFq::from_rows(2, &[vec![1, 1], vec![1, 1]]);
        assert_eq!(m.solve(&[0, 1]), Err(MatrixError::InconsistentSystem));
        let ctx = FieldCtx::new(2, 3, None).unwrap();
        let a = MatFqm::from_rows(&[vec![ctx.one()], vec![ctx.one()]]);
        assert_eq!(a.solve(&ctx, &[ctx.one(), ctx.zero()]), Err(MatrixError::InconsistentSystem));
    }

    #[test]
    fn moore_matrix_shape_and_rank() {
        let ctx = FieldCtx::new(2, 8, None).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let g = loop {
            let g: Vec<Fqm> = (0..6).map(|_| ctx.random(&mut rng)).collect();
            if rank_weight(&ctx, &g) == 6 {
                break g;
            }
        };
        assert_eq!(moore_matrix(&ctx, &g, 1).row(0), &g[..]);
        let mm = moore_matrix(&ctx, &g, 3);
        for j in 0..6 {
            assert_eq!(mm.get(1, j), ctx.frobenius(g[j], 1));
        }
        assert_eq!(mm.rank(&ctx), 3);
    }

    #[test]
    fn rank_weight_examples() {
        let ctx = FieldCtx::new(2, 6, None).unwrap();
        assert_eq!(rank_weight(&ctx, &[ctx.zero(); 4]), 0);
        let beta = ctx.generator();
        let v = [ctx.one(), beta, ctx.add(ctx.one(), beta)];
        assert_eq!(rank_weight(&ctx, &v), 2);
        let gamma = ctx.monomial(3);
        let gi = ctx.inv(gamma).unwrap();
        let d = MatFqm::diag(&[gamma, gi, gi, gamma]);
        assert!(rank_weight(&ctx, d.entries()) <= 2);
    }

    #[test]
    fn unfolded_kernel_matches_brute_force() {
        let ctx = FieldCtx::new(2, 4, None).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(12);
        for _ in 0..20 {
            let sys = MatFqm::from_fn(3, 5, |_, _| if rng.gen_bool(0.3) { ctx.zero() } else { ctx.random(&mut rng) });
            let unfolded = unfold_over_base(&ctx, &sys);
            assert_eq!((unfolded.rows(), unfolded.cols()), (12, 5));
            let mut brute: Vec<Vec<u8>> = (0u32..32)
                .map(|b| (0..5).map(|j| ((b >> j) & 1) as u8).collect::<Vec<u8>>())
                .filter(|x| {
                    let xs: Vec<Fqm> = x.iter().map(|&d| ctx.from_base(d as u32)).collect();
                    sys.apply(&ctx, &xs).iter().all(|e| e.is_zero())
                })
                .collect();
            brute.sort();
            assert_eq!(span_f2(&unfolded.kernel(), 5), brute);
        }
        let c = MatFqm::from_rows(&[vec![ctx.generator()]]);
        assert!(unfold_over_base(&ctx, &c).kernel().is_empty());
        assert_eq!(unfold_over_base(&ctx, &MatFqm::zeros(1, 1)), MatFq::zeros(2, 4, 1));
    }

    #[test]
    fn support_change_matrix_properties() {
        let ctx = FieldCtx::new(2, 6, None).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(8);
        let basis = loop {
            let b: Vec<Fqm> = (0..6).map(|_| ctx.random(&mut rng)).collect();
            if rank_weight(&ctx, &b) == 6 {
                break b;
            }
        };
        assert_eq!(support_change_matrix(&ctx, &basis, &basis).unwrap(), MatFq::identity(2, 6));
        let alpha = ctx.random_nonzero(&mut rng);
        let scaled: Vec<Fqm> = basis.iter().map(|&b| ctx.mul(alpha, b)).collect();
        let t = support_change_matrix(&ctx, &basis, &scaled).unwrap();
        assert_eq!(apply_base_matrix(&ctx, &basis, &t), scaled);
        assert_eq!(t.rank(), 6);

        let v: Vec<Fqm> = (0..4).map(|_| ctx.random(&mut rng)).collect();
        let t = support_change_matrix(&ctx, &basis, &v).unwrap();
        assert_eq!(apply_base_matrix(&ctx, &basis, &t), v);
        assert_eq!(t.rank() == 4, rank_weight(&ctx, &v) == 4);

        assert!(matches!(support_change_matrix(&ctx, &basis[..5], &v), Err(MatrixError::NotABasis { .. })));
    }

    #[test]
    fn subspace_helpers() {
        let ctx = FieldCtx::new(2, 5, None).unwrap();
        let x = ctx.generator();
        let s = Subspace::span(&ctx, &[ctx.one(), x, ctx.add(ctx.one(), x)]);
        assert_eq!(s.dim(), 2);
        assert!(s.contains(&ctx, ctx.add(ctx.one(), x)));
        assert!(!s.contains(&ctx, ctx.monomial(2)));
        assert!(Subspace::from_basis(&ctx, vec![x, x]).is_err());
        let p = Subspace::independent_prefix(&ctx, &[ctx.one(), x, ctx.one(), ctx.monomial(2)]);
        assert_eq!(p.basis(), &[ctx.one(), x, ctx.monomial(2)]);
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn ctx() -> FieldCtx {
            FieldCtx::new(2, 7, None).unwrap()
        }

        proptest! {
            #[test]
            fn moore_commutes_with_base_matrices(seed in any::<u64>(), k in 1usize..5) {
                let ctx = ctx();
                let mut rng = ChaCha20Rng::seed_from_u64(seed);
                let g: Vec<Fqm> = (0..5).map(|_| ctx.random(&mut rng)).collect();
                let t = random_fq(&mut rng, 2, 5, 4);
                let lhs = moore_matrix(&ctx, &apply_base_matrix(&ctx, &g, &t), k);
                let rhs = moore_matrix(&ctx, &g, k).mul(&ctx, &MatFqm::from_base(&ctx, &t));
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn rank_weight_is_submultiplicative(seed in any::<u64>()) {
                let ctx = ctx();
                let mut rng = ChaCha20Rng::seed_from_u64(seed);
                let x: Vec<Fqm> = (0..4).map(|_| ctx.random(&mut rng)).collect();
                let a: Vec<Fqm> = (0..2).map(|_| ctx.random(&mut rng)).collect();
                let y: Vec<Fqm> = a.iter().flat_map(|&ai| x.iter().map(move |&xi| (ai, xi))).map(|(ai, xi)| ctx.mul(ai, xi)).collect();
                prop_assert!(rank_weight(&ctx, &y) <= rank_weight(&ctx, &x) * rank_weight(&ctx, &a));
                let sum: Vec<Fqm> = x.iter().zip(&y).map(|(&u, &v)| ctx.add(u, v)).collect();
                prop_assert!(rank_weight(&ctx, &sum) <= rank_weight(&ctx, &x) + rank_weight(&ctx, &y));
            }

            #[test]
            fn solve_returns_a_solution(seed in any::<u64>(), rows in 1usize..6, cols in 1usize..6) {
                let ctx = ctx();
                let mut rng = ChaCha20Rng::seed_from_u64(seed);
                let a = MatFqm::from_fn(rows, cols, |_, _| ctx.random(&mut rng));
                let x: Vec<Fqm> = (0..cols).map(|_| ctx.random(&mut rng)).collect();
                let b = a.apply(&ctx, &x);
                let sol = a.solve(&ctx, &b).unwrap();
                prop_assert_eq!(a.apply(&ctx, &sol.particular), b);
                prop_assert_eq!(sol.kernel.len(), cols - a.rank(&ctx));
                for v in &sol.kernel {
                    prop_assert!(a.apply(&ctx, v).iter().all(|e| e.is_zero()));
                }
            }
        }
    }
}
