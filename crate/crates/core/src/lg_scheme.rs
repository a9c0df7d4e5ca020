//! The LG public-key encryption scheme over λ-Gabidulin codes.
//!
//! The private key hides `G_λ = moore(g, k) · diag(λ)` with λ_i ∈ {γ, γ^{-1}}
//! behind `G_pub = S · G_λ · P^{-1}`, where every entry of P is bγ or cγ^{-1}.
//! Then `Q = P · Δ^{-1}` has all its entries in V = ⟨1, γ², γ^{-2}⟩, so a
//! rank-a error becomes a rank ≤ 3a error once the ciphertext is multiplied
//! by Q, which the base Gabidulin code corrects as long as 3a ≤ t.

use std::fmt;

use rand::Rng;
use thiserror::Error;

use crate::gabidulin::{self, CodeError, DecodeFailure, GabCode, LambdaGabCode};
use crate::galois::{ElementConstraint, FieldCtx, FieldError, Fqm};
use crate::matrix::{self, MatFqm, Subspace};

/// A parameter constraint that failed validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Violation {
    /// q must be prime.
    QNotPrime,
    /// m ≥ n > k ≥ 1.
    Ordering,
    /// k must not divide n − 1.
    KDividesNMinusOne,
    /// a = ⌊⌊(n−k)/2⌋/3⌋ must be at least 1.
    ZeroErrorWeight,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Violation::QNotPrime => "q is not prime",
            Violation::Ordering => "m >= n > k >= 1 does not hold",
            Violation::KDividesNMinusOne => "k | n-1 (k must not divide n-1)",
            Violation::ZeroErrorWeight => "error weight a = floor(t/3) is zero",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid LG parameters: {}", .violations.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; "))]
pub struct ParamError {
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LgError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error("decryption failed: {0}")]
    Decryption(DecodeFailure),
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("field of degree {got} does not match parameters with m = {expected}")]
    FieldMismatch { expected: usize, got: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct LgParams {
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub k: usize,
}

impl LgParams {
    /// Checks every constraint and reports all violations at once.
    pub fn validate(q: u32, m: usize, n: usize, k: usize) -> Result<LgParams, ParamError> {
        let mut violations = Vec::new();
        if !crate::galois::is_prime(q) {
            violations.push(Violation::QNotPrime);
        }
        if !(m >= n && n > k && k >= 1) {
            violations.push(Violation::Ordering);
        }
        if k >= 1 && (n.saturating_sub(1)).is_multiple_of(k) {
            violations.push(Violation::KDividesNMinusOne);
        }
        if n.saturating_sub(k) / 2 / 3 == 0 {
            violations.push(Violation::ZeroErrorWeight);
        }
        if violations.is_empty() {
            Ok(LgParams { q, m, n, k })
        } else {
            Err(ParamError { violations })
        }
    }

    /// Decoding radius ⌊(n−k)/2⌋.
    pub fn t(&self) -> usize {
        (self.n - self.k) / 2
    }

    /// Error weight ⌊t/3⌋.
    pub fn a(&self) -> usize {
        self.t() / 3
    }

    /// Largest subspace dimension the attack's linear system can afford: k − ⌈k²/n⌉.
    pub fn r_budget(&self) -> usize {
        self.k - (self.k * self.k).div_ceil(self.n)
    }

    pub fn field(&self) -> Result<FieldCtx, FieldError> {
        FieldCtx::new(self.q, self.m, None)
    }

    fn check_field(&self, ctx: &FieldCtx) -> Result<(), LgError> {
        if ctx.q() != self.q || ctx.m() != self.m {
            return Err(LgError::FieldMismatch { expected: self.m, got: ctx.m() });
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PublicKey {
    pub params: LgParams,
    pub g_pub: MatFqm,
    pub a: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrivateKey {
    pub params: LgParams,
    pub s: MatFqm,
    pub g: Vec<Fqm>,
    pub lambda: Vec<Fqm>,
    pub p: MatFqm,
    pub gamma: Fqm,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KeyPair {
    pub public: PublicKey,
    pub private: PrivateKey,
}

/// Where keygen draws γ from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GammaSource {
    /// Uniform over F_{q^m} \ F_q.
    Uniform,
    /// Uniform over F_{q^ℓ} \ F_q; produces weak keys.
    Subfield(usize),
    Fixed(Fqm),
}

fn draw_gamma<R: Rng + ?Sized>(ctx: &FieldCtx, rng: &mut R, source: GammaSource) -> Result<Fqm, LgError> {
    let constraint = match source {
        GammaSource::Fixed(g) => {
            if ctx.is_in_prime_field(g) || ctx.square(g) == ctx.one() {
                return Err(LgError::Dimension("fixed gamma must lie outside F_q with gamma^2 != 1".into()));
            }
            return Ok(g);
        }
        GammaSource::Uniform => ElementConstraint::NotInPrimeField,
        GammaSource::Subfield(l) => {
            if l < 2 {
                return Err(FieldError::NotADivisor { l, m: ctx.m() }.into());
            }
            ElementConstraint::InSubfield(l)
        }
    };
    loop {
        let g = ctx.random_element(rng, constraint)?;
        if !ctx.is_in_prime_field(g) && ctx.square(g) != ctx.one() {
            return Ok(g);
        }
    }
}

pub fn keygen<R: Rng + ?Sized>(ctx: &FieldCtx, params: &LgParams, rng: &mut R) -> Result<KeyPair, LgError> {
    keygen_with(ctx, params, rng, GammaSource::Uniform)
}

pub fn keygen_with<R: Rng + ?Sized>(
    ctx: &FieldCtx,
    params: &LgParams,
    rng: &mut R,
    source: GammaSource,
) -> Result<KeyPair, LgError> {
    params.check_field(ctx)?;
    let (n, k, q) = (params.n, params.k, params.q);
    let gamma = draw_gamma(ctx, rng, source)?;
    let gamma_inv = ctx.inv_nonzero(gamma);
    let lambda: Vec<Fqm> = (0..n).map(|_| if rng.gen_bool(0.5) { gamma } else { gamma_inv }).collect();
    let g = gabidulin::random_support(ctx, rng, n);
    let s = matrix::random_invertible(ctx, rng, k);
    let (p, p_inv) = loop {
        let p = MatFqm::from_fn(n, n, |_, _| {
            let base = if rng.gen_bool(0.5) { gamma } else { gamma_inv };
            ctx.scale(base, rng.gen_range(0..q))
        });
        if let Ok(inv) = p.inverse(ctx) {
            break (p, inv);
        }
    };
    let code = LambdaGabCode::new(GabCode::new(ctx, g.clone(), k)?, lambda.clone())?;
    let g_pub = s.mul(ctx, &code.generator(ctx)).mul(ctx, &p_inv);
    Ok(KeyPair {
        public: PublicKey { params: *params, g_pub, a: params.a() },
        private: PrivateKey { params: *params, s, g, lambda, p, gamma },
    })
}

impl PrivateKey {
    pub fn code(&self, ctx: &FieldCtx) -> Result<LambdaGabCode, LgError> {
        let base = GabCode::new(ctx, self.g.clone(), self.params.k)?;
        Ok(LambdaGabCode::new(base, self.lambda.clone())?)
    }

    /// Q = P · Δ^{-1}.
    pub fn q_matrix(&self, ctx: &FieldCtx) -> MatFqm {
        let delta_inv: Vec<Fqm> = self.lambda.iter().map(|&l| ctx.inv_nonzero(l)).collect();
        self.p.mul(ctx, &MatFqm::diag(&delta_inv))
    }

    /// V = ⟨1, γ², γ^{-2}⟩.
    pub fn v_space(&self, ctx: &FieldCtx) -> Subspace {
        let g2 = ctx.square(self.gamma);
        Subspace::span(ctx, &[ctx.one(), g2, ctx.inv_nonzero(g2)])
    }

    /// The public key this private key induces.
    pub fn public_key(&self, ctx: &FieldCtx) -> Result<PublicKey, LgError> {
        let p_inv = self.p.inverse(ctx).map_err(|e| LgError::Dimension(e.to_string()))?;
        let g_pub = self.s.mul(ctx, &self.code(ctx)?.generator(ctx)).mul(ctx, &p_inv);
        Ok(PublicKey { params: self.params, g_pub, a: self.params.a() })
    }
}

/// y = m · G_pub + e with rank(e) = a exactly.
pub fn encrypt<R: Rng + ?Sized>(ctx: &FieldCtx, pk: &PublicKey, msg: &[Fqm], rng: &mut R) -> Result<Vec<Fqm>, LgError> {
    let e = matrix::random_rank_vector(ctx, rng, pk.params.n, pk.a);
    encrypt_with_error(ctx, pk, msg, &e)
}

pub fn encrypt_with_error(ctx: &FieldCtx, pk: &PublicKey, msg: &[Fqm], e: &[Fqm]) -> Result<Vec<Fqm>, LgError> {
    if msg.len() != pk.params.k || e.len() != pk.params.n {
        return Err(LgError::Dimension(format!(
            "message length {} / error length {} for k = {}, n = {}",
            msg.len(),
            e.len(),
            pk.params.k,
            pk.params.n
        )));
    }
    let c = pk.g_pub.left_apply(ctx, msg);
    Ok(c.iter().zip(e).map(|(&a, &b)| ctx.add(a, b)).collect())
}

/// Decodes y · P · Δ^{-1} = mSG + eQ in the base code and strips S.
pub fn decrypt(ctx: &FieldCtx, sk: &PrivateKey, y: &[Fqm]) -> Result<Vec<Fqm>, LgError> {
    if y.len() != sk.params.n {
        return Err(LgError::Dimension(format!("ciphertext length {} for n = {}", y.len(), sk.params.n)));
    }
    let twisted = sk.q_matrix(ctx).left_apply(ctx, y);
    let base = GabCode::new(ctx, sk.g.clone(), sk.params.k)?;
    let decoded = base.decode_full(ctx, &twisted).map_err(LgError::Decryption)?;
    let s_inv = sk.s.inverse(ctx).map_err(|e| LgError::Dimension(e.to_string()))?;
    Ok(s_inv.left_apply(ctx, &decoded.message))
}

pub fn random_message<R: Rng + ?Sized>(ctx: &FieldCtx, k: usize, rng: &mut R) -> Vec<Fqm> {
    (0..k).map(|_| ctx.random(rng)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha20Rng;

    fn desk() -> (FieldCtx, LgParams) {
        let p = LgParams::validate(2, 13, 12, 6).unwrap();
        (p.field().unwrap(), p)
    }

    #[test]
    fn validation_examples() {
        let p = LgParams::validate(2, 83, 79, 31).unwrap();
        assert_eq!((p.t(), p.a()), (24, 8));
        let err = LgParams::validate(2, 10, 10, 9).unwrap_err();
        assert!(err.violations.contains(&Violation::KDividesNMinusOne));
        let p = LgParams::validate(2, 13, 12, 6).unwrap();
        assert_eq!((p.t(), p.a()), (3, 1));
        let err = LgParams::validate(4, 5, 6, 5).unwrap_err();
        assert_eq!(
            err.violations,
            vec![Violation::QNotPrime, Violation::Ordering, Violation::KDividesNMinusOne, Violation::ZeroErrorWeight]
        );
    }

    #[test]
    fn keys_satisfy_the_structural_identities() {
        let (ctx, params) = desk();
        let mut rng = ChaCha20Rng::seed_from_u64(1);
        for _ in 0..20 {
            let kp = keygen(&ctx, &params, &mut rng).unwrap();
            let sk = &kp.private;
            assert!(!ctx.is_in_prime_field(sk.gamma));
            assert_ne!(ctx.square(sk.gamma), ctx.one());
            let v = sk.v_space(&ctx);
            let q = sk.q_matrix(&ctx);
            assert!(matrix::support(&ctx, q.entries()).is_subspace_of(&ctx, &v));
            let delta_inv: Vec<Fqm> = sk.lambda.iter().map(|&l| ctx.inv_nonzero(l)).collect();
            assert!(matrix::rank_weight(&ctx, &delta_inv) <= 2);
            let g = matrix::moore_matrix(&ctx, &sk.g, params.k);
            let rhs = sk.s.mul(&ctx, &g).mul(&ctx, &q.inverse(&ctx).unwrap());
            assert_eq!(kp.public.g_pub, rhs);
            assert_eq!(kp.public.g_pub.rank(&ctx), params.k);

            let alpha = ctx.random_nonzero(&mut rng);
            let aq = q.scale(&ctx, alpha);
            assert!(matrix::support(&ctx, aq.entries()).is_subspace_of(&ctx, &v.scaled(&ctx, alpha)));
        }
    }

    #[test]
    fn encryption_error_has_exact_weight() {
        let (ctx, params) = desk();
        let mut rng = ChaCha20Rng::seed_from_u64(2);
        let kp = keygen(&ctx, &params, &mut rng).unwrap();
        let msg = random_message(&ctx, params.k, &mut rng);
        let c = kp.public.g_pub.left_apply(&ctx, &msg);
        let mut previous = None;
        for _ in 0..100 {
            let y = encrypt(&ctx, &kp.public, &msg, &mut rng).unwrap();
            let e: Vec<Fqm> = y.iter().zip(&c).map(|(&a, &b)| ctx.sub(a, b)).collect();
            assert_eq!(matrix::rank_weight(&ctx, &e), params.a());
            assert_ne!(previous.as_ref(), Some(&y));
            previous = Some(y);
        }
    }

    #[test]
    fn decrypt_round_trips_at_13_12_6() {
        let (ctx, params) = desk();
        let mut rng = ChaCha20Rng::seed_from_u64(3);
        let kp = keygen(&ctx, &params, &mut rng).unwrap();
        for _ in 0..200 {
            let msg = random_message(&ctx, params.k, &mut rng);
            let y = encrypt(&ctx, &kp.public, &msg, &mut rng).unwrap();
            let out = decrypt(&ctx, &kp.private, &y).unwrap();
            assert_eq!(out, msg);
            assert_eq!(decrypt(&ctx, &kp.private, &y).unwrap(), out);
        }
    }

    #[test]
    fn heavy_errors_may_fail_but_do_not_panic() {
        let (ctx, params) = desk();
        let mut rng = ChaCha20Rng::seed_from_u64(4);
        let kp = keygen(&ctx, &params, &mut rng).unwrap();
        let msg = random_message(&ctx, params.k, &mut rng);
        let e = matrix::random_rank_vector(&ctx, &mut rng, 12, 6);
        let y = encrypt_with_error(&ctx, &kp.public, &msg, &e).unwrap();
        if let Ok(out) = decrypt(&ctx, &kp.private, &y) {
            assert_ne!(out, msg);
        }
    }

    #[test]
    fn subfield_gamma_and_public_key_rebuild() {
        let params = LgParams::validate(2, 20, 18, 8).unwrap();
        let ctx = params.field().unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(5);
        let kp = keygen_with(&ctx, &params, &mut rng, GammaSource::Subfield(5)).unwrap();
        assert!(ctx.is_in_subfield(kp.private.gamma, 5));
        assert_eq!(kp.private.public_key(&ctx).unwrap(), kp.public);
        assert!(keygen_with(&ctx, &params, &mut rng, GammaSource::Subfield(3)).is_err());
        assert!(keygen_with(&ctx, &params, &mut rng, GammaSource::Fixed(ctx.one())).is_err());
    }
}
