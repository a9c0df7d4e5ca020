//! Gabidulin and λ-Gabidulin codes.
//!
//! A Gabidulin code of support `g` (rank weight n) and dimension k is the row
//! space of the Moore matrix `moore_matrix(g, k)`; a message `f` encodes to
//! the evaluation of the linearized polynomial `f(x) = Σ f_u x^[u]` at g.
//!
//! Two independent unique decoders are provided. [`GabCode::decode`] works on
//! received words through linearized interpolation. [`syndrome_decode`]
//! works on syndromes through the rank key equation and is the entry point
//! the structural attack uses with a length-m dual support.

use rand::Rng;
use thiserror::Error;

use crate::galois::{FieldCtx, Fqm};
use crate::matrix::{self, MatFq, MatFqm};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("support has rank weight {got}, expected {n}")]
    SupportNotFullRank { got: usize, n: usize },
    #[error("need 1 <= k <= n <= m, got k={k}, n={n}, m={m}")]
    BadDimensions { k: usize, n: usize, m: usize },
    #[error("multiplier has a zero entry at position {0}")]
    ZeroMultiplier(usize),
    #[error("multiplier length {got} differs from code length {n}")]
    LengthMismatch { got: usize, n: usize },
    #[error("dual support extraction failed: {0}")]
    DualSupport(&'static str),
}

/// Routine negative outcome of a decoder.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("decoding failed: {reason}")]
pub struct DecodeFailure {
    pub reason: &'static str,
}

fn fail<T>(reason: &'static str) -> Result<T, DecodeFailure> {
    Err(DecodeFailure { reason })
}

/// Evaluates `Σ p_u x^[u]`.
pub fn lin_eval(ctx: &FieldCtx, p: &[Fqm], x: Fqm) -> Fqm {
    let mut acc = Fqm::ZERO;
    let mut xu = x;
    for (u, &c) in p.iter().enumerate() {
        if u > 0 {
            xu = ctx.frobenius(xu, 1);
        }
        acc = ctx.add(acc, ctx.mul(c, xu));
    }
    acc
}

/// Coefficients of `a ∘ b`, i.e. `x ↦ a(b(x))`.
pub fn lin_compose(ctx: &FieldCtx, a: &[Fqm], b: &[Fqm]) -> Vec<Fqm> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Fqm::ZERO; a.len() + b.len() - 1];
    for (i, &ai) in a.iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        for (u, &bu) in b.iter().enumerate() {
            out[i + u] = ctx.add(out[i + u], ctx.mul(ai, ctx.frobenius(bu, i as i64)));
        }
    }
    out
}

/// F_q-basis of the roots of `Σ p_u x^[u]` in F_{q^m}.
pub fn root_space(ctx: &FieldCtx, p: &[Fqm]) -> Vec<Fqm> {
    let m = ctx.m();
    let mut map = MatFq::zeros(ctx.q(), m, m);
    for j in 0..m {
        let image = lin_eval(ctx, p, ctx.monomial(j));
        for (d, digit) in ctx.digits(image).into_iter().enumerate() {
            map.set(d, j, digit);
        }
    }
    map.kernel().iter().map(|v| ctx.from_digits(v)).collect()
}

/// Uniform support vector of length n and rank weight n.
pub fn random_support<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R, n: usize) -> Vec<Fqm> {
    assert!(n <= ctx.m(), "no support of length {n} over degree {}", ctx.m());
    loop {
        let g: Vec<Fqm> = (0..n).map(|_| ctx.random(rng)).collect();
        if matrix::rank_weight(ctx, &g) == n {
            return g;
        }
    }
}

/// Result of a codeword-path decode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decoded {
    pub message: Vec<Fqm>,
    pub codeword: Vec<Fqm>,
    pub error: Vec<Fqm>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GabCode {
    g: Vec<Fqm>,
    k: usize,
}

impl GabCode {
    pub fn new(ctx: &FieldCtx, g: Vec<Fqm>, k: usize) -> Result<GabCode, CodeError> {
        let n = g.len();
        if k == 0 || k > n || n > ctx.m() {
            return Err(CodeError::BadDimensions { k, n, m: ctx.m() });
        }
        let got = matrix::rank_weight(ctx, &g);
        if got != n {
            return Err(CodeError::SupportNotFullRank { got, n });
        }
        Ok(GabCode { g, k })
    }

    pub fn support(&self) -> &[Fqm] {
        &self.g
    }

    pub fn n(&self) -> usize {
        self.g.len()
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Unique decoding radius ⌊(n−k)/2⌋.
    pub fn t(&self) -> usize {
        (self.n() - self.k) / 2
    }

    pub fn generator(&self, ctx: &FieldCtx) -> MatFqm {
        matrix::moore_matrix(ctx, &self.g, self.k)
    }

    pub fn encode(&self, ctx: &FieldCtx, message: &[Fqm]) -> Vec<Fqm> {
        assert_eq!(message.len(), self.k);
        self.g.iter().map(|&gi| lin_eval(ctx, message, gi)).collect()
    }

    /// A vector h of rank weight n with `moore(g, k) · moore(h, n−k)ᵀ = 0`.
    ///
    /// The orthogonality conditions `Σ g_i^[a] h_i^[b] = 0` are Frobenius
    /// twists of `Σ g_i^[j] h_i = 0` for j in [−(n−k−1), k−1], which is an
    /// (n−1)-row Moore system with a one-dimensional kernel.
    pub fn dual_support(&self, ctx: &FieldCtx) -> Result<Vec<Fqm>, CodeError> {
        let n = self.n();
        if self.k == n {
            return Err(CodeError::DualSupport("code has no dual"));
        }
        let rows = matrix::moore_matrix_from(ctx, &self.g, -((n - self.k - 1) as i64), n - 1);
        let kernel = rows.kernel(ctx);
        if kernel.len() != 1 {
            return Err(CodeError::DualSupport("kernel is not one-dimensional"));
        }
        let h = kernel.into_iter().next().unwrap();
        if matrix::rank_weight(ctx, &h) != n {
            return Err(CodeError::DualSupport("dual support is not of full rank weight"));
        }
        let product = self.generator(ctx).mul(ctx, &matrix::moore_matrix(ctx, &h, n - self.k).transpose());
        if !product.is_zero() {
            return Err(CodeError::DualSupport("generator and parity check are not orthogonal"));
        }
        Ok(h)
    }

    /// `moore(h, n−k)` for the dual support h.
    pub fn parity_check(&self, ctx: &FieldCtx) -> Result<MatFqm, CodeError> {
        let h = self.dual_support(ctx)?;
        Ok(matrix::moore_matrix(ctx, &h, self.n() - self.k))
    }

    /// Returns (codeword, error) for `y = c + e` with rank(e) ≤ t.
    pub fn decode(&self, ctx: &FieldCtx, y: &[Fqm]) -> Result<(Vec<Fqm>, Vec<Fqm>), DecodeFailure> {
        let d = self.decode_full(ctx, y)?;
        Ok((d.codeword, d.error))
    }

    /// Linearized interpolation: find V of q-degree ≤ t and N of q-degree
    /// ≤ k+t−1 with V(y_i) = N(g_i), then the message is the right quotient
    /// of N by V.
    pub fn decode_full(&self, ctx: &FieldCtx, y: &[Fqm]) -> Result<Decoded, DecodeFailure> {
        let (n, k, t) = (self.n(), self.k, self.t());
        if y.len() != n {
            return fail("received word has the wrong length");
        }
        let nv = t + 1;
        let nn = k + t;
        let system = MatFqm::from_fn(n, nv + nn, |i, c| {
            if c < nv {
                ctx.frobenius(y[i], c as i64)
            } else {
                ctx.neg(ctx.frobenius(self.g[i], (c - nv) as i64))
            }
        });
        let kernel = system.kernel(ctx);
        let Some(sol) = kernel.first() else {
            return fail("interpolation system has a trivial kernel");
        };
        let v = &sol[..nv];
        let nq = &sol[nv..];
        let Some(top) = (0..nv).rev().find(|&a| !v[a].is_zero()) else {
            return fail("interpolation gave a zero error locator");
        };
        let top_inv = ctx.inv_nonzero(v[top]);
        let mut f = vec![Fqm::ZERO; k];
        for u in (0..k).rev() {
            let s = u + top;
            if s >= nn {
                return fail("quotient degree exceeds the interpolation bound");
            }
            let mut acc = nq[s];
            for a in 0..top {
                let idx = s - a;
                if idx < k {
                    acc = ctx.sub(acc, ctx.mul(v[a], ctx.frobenius(f[idx], a as i64)));
                }
            }
            f[u] = ctx.frobenius(ctx.mul(acc, top_inv), -(top as i64));
        }
        let mut composed = lin_compose(ctx, v, &f);
        composed.resize(nn.max(composed.len()), Fqm::ZERO);
        let mut padded = nq.to_vec();
        padded.resize(composed.len(), Fqm::ZERO);
        if composed != padded {
            return fail("error locator does not divide the interpolant");
        }
        let codeword = self.encode(ctx, &f);
        let error: Vec<Fqm> = y.iter().zip(&codeword).map(|(&a, &b)| ctx.sub(a, b)).collect();
        if matrix::rank_weight(ctx, &error) > t {
            return fail("no codeword within the decoding radius");
        }
        Ok(Decoded { message: f, codeword, error })
    }
}

/// Finds e of rank weight ≤ t_cap with `moore(h, d) · eᵀ = s`, where
/// d = s.len() and h has rank weight L = h.len().
///
/// For increasing τ the error span locator Λ (q-degree τ) is sought from
/// `Σ_u λ_u s_{j−u}^[u] = 0`, j = τ..d−1. Its root space is the support
/// ε of e; the coordinates of e over ε then follow from an F_q-linear system.
pub fn syndrome_decode(ctx: &FieldCtx, h: &[Fqm], s: &[Fqm], t_cap: usize) -> Result<Vec<Fqm>, DecodeFailure> {
    let (l, d) = (h.len(), s.len());
    if 2 * t_cap > d {
        return fail("radius exceeds half the syndrome length");
    }
    if matrix::rank_weight(ctx, h) != l {
        return fail("dual support is not of full rank weight");
    }
    if s.iter().all(|x| x.is_zero()) {
        return Ok(vec![Fqm::ZERO; l]);
    }
    for tau in 1..=t_cap {
        let system = MatFqm::from_fn(d - tau, tau + 1, |row, u| ctx.frobenius(s[row + tau - u], u as i64));
        for lambda in system.kernel(ctx) {
            let eps = root_space(ctx, &lambda);
            if eps.len() != tau {
                continue;
            }
            if let Some(e) = solve_with_support(ctx, h, s, &eps) {
                return Ok(e);
            }
        }
    }
    fail("no error of rank weight within the radius")
}

fn solve_with_support(ctx: &FieldCtx, h: &[Fqm], s: &[Fqm], eps: &[Fqm]) -> Option<Vec<Fqm>> {
    let (l, d, tau) = (h.len(), s.len(), eps.len());
    // unknown A_{j,i} sits at column j * l + i
    let system = MatFqm::from_fn(d, tau * l, |row, c| ctx.mul(eps[c / l], ctx.frobenius(h[c % l], row as i64)));
    let sol = matrix::unfold_over_base(ctx, &system).solve(&matrix::unfold_rhs(ctx, s)).ok()?;
    let e: Vec<Fqm> = (0..l)
        .map(|i| (0..tau).fold(Fqm::ZERO, |acc, j| ctx.add(acc, ctx.scale(eps[j], sol.particular[j * l + i] as u32))))
        .collect();
    let check = matrix::moore_matrix(ctx, h, d).apply(ctx, &e);
    (check == s).then_some(e)
}

/// λ-Gabidulin code with generator `G · diag(λ)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LambdaGabCode {
    base: GabCode,
    lambda: Vec<Fqm>,
}

impl LambdaGabCode {
    pub fn new(base: GabCode, lambda: Vec<Fqm>) -> Result<LambdaGabCode, CodeError> {
        if lambda.len() != base.n() {
            return Err(CodeError::LengthMismatch { got: lambda.len(), n: base.n() });
        }
        if let Some(i) = lambda.iter().position(|x| x.is_zero()) {
            return Err(CodeError::ZeroMultiplier(i));
        }
        Ok(LambdaGabCode { base, lambda })
    }

    pub fn base(&self) -> &GabCode {
        &self.base
    }

    pub fn lambda(&self) -> &[Fqm] {
        &self.lambda
    }

    pub fn generator(&self, ctx: &FieldCtx) -> MatFqm {
        self.base.generator(ctx).mul(ctx, &MatFqm::diag(&self.lambda))
    }

    /// Decodes `y · Δ^{-1}` in the base code and returns (message, error).
    pub fn decode(&self, ctx: &FieldCtx, y: &[Fqm]) -> Result<(Vec<Fqm>, Vec<Fqm>), DecodeFailure> {
        if y.len() != self.base.n() {
            return fail("received word has the wrong length");
        }
        let twisted: Vec<Fqm> = y.iter().zip(&self.lambda).map(|(&a, &l)| ctx.mul(a, ctx.inv_nonzero(l))).collect();
        let d = self.base.decode_full(ctx, &twisted)?;
        let c = self.generator(ctx).left_apply(ctx, &d.message);
        let error = y.iter().zip(&c).map(|(&a, &b)| ctx.sub(a, b)).collect();
        Ok((d.message, error))
    }

    /// The dual code: support h from the base dual and multiplier λ^{-1}.
    pub fn dual(&self, ctx: &FieldCtx) -> Result<LambdaGabCode, CodeError> {
        let h = self.base.dual_support(ctx)?;
        let base = GabCode::new(ctx, h, self.base.n() - self.base.k())?;
        let lambda = self.lambda.iter().map(|&l| ctx.inv_nonzero(l)).collect();
        LambdaGabCode::new(base, lambda)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn setup(m: usize, n: usize, k: usize, seed: u64) -> (FieldCtx, GabCode, ChaCha20Rng) {
        let ctx = FieldCtx::new(2, m, None).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let g = random_support(&ctx, &mut rng, n);
        let code = GabCode::new(&ctx, g, k).unwrap();
        (ctx, code, rng)
    }

    fn rand_vec(ctx: &FieldCtx, rng: &mut ChaCha20Rng, len: usize) -> Vec<Fqm> {
        (0..len).map(|_| ctx.random(rng)).collect()
    }

    fn add(ctx: &FieldCtx, a: &[Fqm], b: &[Fqm]) -> Vec<Fqm> {
        a.iter().zip(b).map(|(&x, &y)| ctx.add(x, y)).collect()
    }

    #[test]
    fn rejects_bad_codes() {
        let ctx = FieldCtx::new(2, 6, None).unwrap();
        let one = ctx.one();
        assert!(matches!(
            GabCode::new(&ctx, vec![one, one, ctx.generator()], 2),
            Err(CodeError::SupportNotFullRank { .. })
        ));
        assert!(matches!(GabCode::new(&ctx, vec![one], 0), Err(CodeError::BadDimensions { .. })));
        let code = GabCode::new(&ctx, vec![one, ctx.generator()], 1).unwrap();
        assert!(matches!(LambdaGabCode::new(code, vec![one, ctx.zero()]), Err(CodeError::ZeroMultiplier(1))));
    }

    #[test]
    fn linearized_composition_matches_evaluation() {
        let (ctx, _, mut rng) = setup(9, 4, 2, 1);
        for _ in 0..20 {
            let a = rand_vec(&ctx, &mut rng, 3);
            let b = rand_vec(&ctx, &mut rng, 4);
            let ab = lin_compose(&ctx, &a, &b);
            let x = ctx.random(&mut rng);
            assert_eq!(lin_eval(&ctx, &ab, x), lin_eval(&ctx, &a, lin_eval(&ctx, &b, x)));
        }
        // x^[1] - x vanishes exactly on F_2
        let p = [ctx.neg(ctx.one()), ctx.one()];
        assert_eq!(root_space(&ctx, &p), vec![ctx.one()]);
    }

    #[test]
    fn parity_check_at_10_8_3() {
        let (ctx, code, _) = setup(10, 8, 3, 2);
        let h = code.dual_support(&ctx).unwrap();
        assert_eq!(matrix::rank_weight(&ctx, &h), 8);
        let hm = code.parity_check(&ctx).unwrap();
        assert_eq!((hm.rows(), hm.cols()), (5, 8));
        assert_eq!(hm.rank(&ctx), 5);
        assert!(code.generator(&ctx).mul(&ctx, &hm.transpose()).is_zero());
    }

    #[test]
    fn decode_zero_error() {
        let (ctx, code, mut rng) = setup(12, 10, 4, 3);
        let c = code.encode(&ctx, &rand_vec(&ctx, &mut rng, 4));
        let (cw, e) = code.decode(&ctx, &c).unwrap();
        assert_eq!(cw, c);
        assert!(e.iter().all(|x| x.is_zero()));
    }

    #[test]
    fn decode_recovers_rank_t_errors() {
        let (ctx, code, mut rng) = setup(12, 10, 4, 4);
        assert_eq!(code.t(), 3);
        for trial in 0..500 {
            let msg = rand_vec(&ctx, &mut rng, 4);
            let c = code.encode(&ctx, &msg);
            let e = matrix::random_rank_vector(&ctx, &mut rng, 10, 1 + trial % 3);
            let d = code.decode_full(&ctx, &add(&ctx, &c, &e)).unwrap();
            assert_eq!((d.message, d.codeword, d.error), (msg, c, e));
        }
    }

    #[test]
    fn decode_beyond_radius_does_not_panic() {
        let (ctx, code, mut rng) = setup(12, 10, 4, 5);
        for _ in 0..50 {
            let c = code.encode(&ctx, &rand_vec(&ctx, &mut rng, 4));
            let e = matrix::random_rank_vector(&ctx, &mut rng, 10, 4);
            if let Ok((cw, err)) = code.decode(&ctx, &add(&ctx, &c, &e)) {
                assert!(matrix::rank_weight(&ctx, &err) <= 3);
                assert_ne!(cw, c);
            }
        }
    }

    #[test]
    fn syndrome_decode_plants_and_recovers() {
        let ctx = FieldCtx::new(2, 12, None).unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(6);
        let h = random_support(&ctx, &mut rng, 12);
        let hm = matrix::moore_matrix(&ctx, &h, 6);
        assert_eq!(syndrome_decode(&ctx, &h, &[ctx.zero(); 6], 3).unwrap(), vec![ctx.zero(); 12]);
        for w in [1, 2, 2, 3] {
            let e = matrix::random_rank_vector(&ctx, &mut rng, 12, w);
            let s = hm.apply(&ctx, &e);
            assert_eq!(syndrome_decode(&ctx, &h, &s, 3).unwrap(), e);
        }
        assert!(syndrome_decode(&ctx, &h, &[ctx.one(); 6], 4).is_err());
    }

    #[test]
    fn syndrome_and_codeword_paths_agree() {
        let (ctx, code, mut rng) = setup(12, 10, 4, 7);
        let h = code.dual_support(&ctx).unwrap();
        let hm = code.parity_check(&ctx).unwrap();
        for w in 0..=3 {
            let c = code.encode(&ctx, &rand_vec(&ctx, &mut rng, 4));
            let y = add(&ctx, &c, &matrix::random_rank_vector(&ctx, &mut rng, 10, w));
            let (_, e1) = code.decode(&ctx, &y).unwrap();
            let e2 = syndrome_decode(&ctx, &h, &hm.apply(&ctx, &y), code.t()).unwrap();
            assert_eq!(e1, e2);
        }
    }

    #[test]
    fn lambda_decode_with_unit_multiplier_is_plain_decode() {
        let (ctx, code, mut rng) = setup(12, 10, 4, 8);
        let lc = LambdaGabCode::new(code.clone(), vec![ctx.one(); 10]).unwrap();
        let msg = rand_vec(&ctx, &mut rng, 4);
        let y = add(&ctx, &code.encode(&ctx, &msg), &matrix::random_rank_vector(&ctx, &mut rng, 10, 3));
        let (m1, e1) = lc.decode(&ctx, &y).unwrap();
        let d = code.decode_full(&ctx, &y).unwrap();
        assert_eq!((m1, e1), (d.message, d.error));
    }

    #[test]
    fn lambda_decode_round_trips_at_16_14_6() {
        let (ctx, code, mut rng) = setup(16, 14, 6, 9);
        let a = code.t() / 3;
        assert_eq!(a, 1);
        let gamma = ctx.random_element(&mut rng, crate::galois::ElementConstraint::NotInPrimeField).unwrap();
        let gi = ctx.inv_nonzero(gamma);
        let lambda: Vec<Fqm> = (0..14).map(|_| if rng.gen_bool(0.5) { gamma } else { gi }).collect();
        let lc = LambdaGabCode::new(code, lambda).unwrap();
        let g_lambda = lc.generator(&ctx);
        for _ in 0..200 {
            let msg = rand_vec(&ctx, &mut rng, 6);
            let e = matrix::random_rank_vector(&ctx, &mut rng, 14, a);
            let y = add(&ctx, &g_lambda.left_apply(&ctx, &msg), &e);
            assert_eq!(lc.decode(&ctx, &y).unwrap(), (msg, e));
        }
    }

    #[test]
    fn dual_lambda_code() {
        let (ctx, code, mut rng) = setup(10, 8, 3, 10);
        let lambda: Vec<Fqm> = (0..8).map(|_| ctx.random_nonzero(&mut rng)).collect();
        let lc = LambdaGabCode::new(code, lambda.clone()).unwrap();
        let dual = lc.dual(&ctx).unwrap();
        let dg = dual.generator(&ctx);
        assert!(dg.mul(&ctx, &lc.generator(&ctx).transpose()).is_zero());
        for (a, b) in dual.lambda().iter().zip(&lambda) {
            assert_eq!(ctx.mul(*a, *b), ctx.one());
        }
        let c_prime = dg.mul(&ctx, &MatFqm::diag(&lambda));
        assert_eq!(c_prime.stack(&c_prime.frobenius(&ctx, 1)).rank(&ctx), 5 + 1);
    }

    #[test]
    fn scaled_and_changed_supports_give_the_same_code() {
        let (ctx, code, mut rng) = setup(10, 8, 3, 11);
        let g = code.support().to_vec();
        let reference = code.generator(&ctx).rref(&ctx).0;
        let basis = random_support(&ctx, &mut rng, 10);
        for _ in 0..50 {
            let alpha = ctx.random_nonzero(&mut rng);
            let ag: Vec<Fqm> = g.iter().map(|&x| ctx.mul(alpha, x)).collect();
            assert_eq!(matrix::moore_matrix(&ctx, &ag, 3).rref(&ctx).0, reference);
            let t = matrix::support_change_matrix(&ctx, &basis, &ag).unwrap();
            let changed = matrix::apply_base_matrix(&ctx, &basis, &t);
            assert_eq!(matrix::moore_matrix(&ctx, &changed, 3).rref(&ctx).0, reference);
        }
    }

    #[test]
    fn nonzero_codewords_meet_the_singleton_bound() {
        let (ctx, code, mut rng) = setup(10, 8, 3, 12);
        for _ in 0..200 {
            let msg = loop {
                let msg = rand_vec(&ctx, &mut rng, 3);
                if msg.iter().any(|x| !x.is_zero()) {
                    break msg;
                }
            };
            assert!(matrix::rank_weight(&ctx, &code.encode(&ctx, &msg)) >= 6);
        }
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #![proptest_config(ProptestConfig::with_cases(64))]
            #[test]
            fn decode_inverts_encode_with_small_errors(seed in any::<u64>(), w in 0usize..=2) {
                let (ctx, code, mut rng) = setup(11, 9, 4, seed);
                let msg = rand_vec(&ctx, &mut rng, 4);
                let e = matrix::random_rank_vector(&ctx, &mut rng, 9, w);
                let y = add(&ctx, &code.encode(&ctx, &msg), &e);
                let d = code.decode_full(&ctx, &y).unwrap();
                prop_assert_eq!(d.message, msg);
                prop_assert_eq!(d.error, e);
            }
        }
    }
}
