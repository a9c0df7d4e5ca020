//! Structural key recovery against LG public keys.
//!
//! Fix `h₀` of rank weight m and `H₀ = moore(h₀, n−k)`. Any m×n matrix M
//! with entries in a small F_q-subspace F and `G_pub · Mᵀ · H₀ᵀ = 0` that has
//! full F_{q^m}-rank n works as an alternative private key: with
//! `s = H₀ M yᵀ` the syndrome decoder of the length-m Gabidulin code with
//! dual support h₀ yields `M eᵀ`, hence e and the message.
//!
//! Writing `(Mᵀ)_{i,j} = Σ_ℓ x_{i,j,ℓ} f_ℓ` over a basis of F turns the key
//! equation into an F_q-linear system. The unknown x_{i,j,ℓ} has column
//! `(i·m + j)·r + ℓ`; coordinate d of equation (a, b) has row
//! `(a·(n−k) + b)·m + d`.

use std::collections::HashSet;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha20Rng;
use thiserror::Error;

use crate::gabidulin;
use crate::galois::{ElementConstraint, FieldCtx, FieldError, Fqm};
use crate::lg_scheme::{self, PrivateKey, PublicKey};
use crate::matrix::{self, MatFq, MatFqm, Subspace};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AttackError {
    #[error("guess of dimension {r} exceeds the budget: {unknowns} unknowns for {equations} equations")]
    DimensionBudget { r: usize, unknowns: usize, equations: usize },
    #[error("r = {r} is outside [3, {budget}]")]
    BadR { r: usize, budget: usize },
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("invalid configuration: {0}")]
    Config(String),
    #[error("message recovery failed: {0}")]
    Recovery(&'static str),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AttackMode {
    /// β uniform in F_{q^m} \ F_q.
    Full,
    /// A single evaluation of the supplied subspace.
    Planted(Subspace),
    /// β uniform in F_{q^ℓ} \ F_q.
    Subfield(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AttackConfig {
    pub r: usize,
    pub max_iters: u64,
    pub mode: AttackMode,
    pub seed: u64,
    pub jobs: usize,
}

impl AttackConfig {
    pub fn full(r: usize, max_iters: u64, seed: u64) -> AttackConfig {
        AttackConfig { r, max_iters, mode: AttackMode::Full, seed, jobs: 1 }
    }

    pub fn planted(f: Subspace, seed: u64) -> AttackConfig {
        AttackConfig { r: f.dim(), max_iters: 1, mode: AttackMode::Planted(f), seed, jobs: 1 }
    }
}

/// An alternative private key (h₀, M′).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlternativeKey {
    pub h0: Vec<Fqm>,
    pub m_prime: MatFqm,
    pub t: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Success,
    BudgetExhausted,
    PreconditionFailed,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, serde::Serialize)]
pub struct StageTimes {
    pub guess: f64,
    pub build: f64,
    pub solve: f64,
    pub verify: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct AttackReport {
    pub outcome: Outcome,
    pub iterations: u64,
    pub beta: Option<Fqm>,
    pub kernel_dim: Option<usize>,
    /// Position of the accepted vector in the canonical kernel basis.
    pub kernel_vector: Option<usize>,
    pub wall_ms: f64,
    pub stage_ms: StageTimes,
    /// Number of kernel computations performed.
    pub solves: u64,
    pub key: Option<AlternativeKey>,
    pub note: Option<String>,
}

impl AttackReport {
    pub fn precondition_failed(note: String) -> AttackReport {
        AttackReport {
            outcome: Outcome::PreconditionFailed,
            iterations: 0,
            beta: None,
            kernel_dim: None,
            kernel_vector: None,
            wall_ms: 0.0,
            stage_ms: StageTimes::default(),
            solves: 0,
            key: None,
            note: Some(note),
        }
    }
}

/// h₀ = (1, θ, …, θ^{m−1}) for θ the root of the field modulus.
pub fn default_h0(ctx: &FieldCtx) -> Vec<Fqm> {
    (0..ctx.m()).map(|j| ctx.monomial(j)).collect()
}

/// The unfolded mk(n−k) × mnr system of the key equation over F.
pub fn build_key_equation(ctx: &FieldCtx, g_pub: &MatFqm, h0: &[Fqm], f: &[Fqm]) -> Result<MatFq, AttackError> {
    let (k, n, m, r) = (g_pub.rows(), g_pub.cols(), ctx.m(), f.len());
    if h0.len() != m {
        return Err(AttackError::Config(format!("h0 has length {}, expected {m}", h0.len())));
    }
    let d = n - k;
    let unknowns = m * n * r;
    let equations = m * k * d;
    if unknowns > equations {
        return Err(AttackError::DimensionBudget { r, unknowns, equations });
    }
    let h_frob: Vec<Vec<Fqm>> = (0..d).map(|b| h0.iter().map(|&h| ctx.frobenius(h, b as i64)).collect()).collect();
    let mut out = MatFq::zeros(ctx.q(), equations, unknowns);
    for a in 0..k {
        for i in 0..n {
            let gai = g_pub.get(a, i);
            if gai.is_zero() {
                continue;
            }
            for (l, &fl) in f.iter().enumerate() {
                let gf = ctx.mul(gai, fl);
                for (b, hb) in h_frob.iter().enumerate() {
                    let row0 = (a * d + b) * m;
                    for (j, &hj) in hb.iter().enumerate() {
                        let c = ctx.mul(gf, hj);
                        if c.is_zero() {
                            continue;
                        }
                        let col = (i * m + j) * r + l;
                        for (dd, digit) in ctx.digits(c).into_iter().enumerate() {
                            if digit != 0 {
                                out.set(row0 + dd, col, digit);
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// β drawn by the configured constraint, and the span of 1, β, …, β^{r−1}.
pub fn guess_subspace<R: Rng + ?Sized>(
    ctx: &FieldCtx,
    r: usize,
    constraint: ElementConstraint,
    rng: &mut R,
) -> Result<(Fqm, Subspace), FieldError> {
    let beta = loop {
        let b = ctx.random_element(rng, constraint)?;
        if !ctx.is_in_prime_field(b) {
            break b;
        }
    };
    Ok((beta, power_subspace(ctx, beta, r)))
}

/// ⟨1, β, …, β^{r−1}⟩, keeping only independent powers.
pub fn power_subspace(ctx: &FieldCtx, beta: Fqm, r: usize) -> Subspace {
    let mut powers = Vec::with_capacity(r);
    let mut p = ctx.one();
    for _ in 0..r {
        powers.push(p);
        p = ctx.mul(p, beta);
    }
    Subspace::independent_prefix(ctx, &powers)
}

/// M′ from a kernel vector: `(M′ᵀ)_{i,j} = Σ_ℓ x_{i,j,ℓ} f_ℓ`.
pub fn extract_key(ctx: &FieldCtx, x: &[u8], f: &[Fqm], h0: &[Fqm], n: usize, t: usize) -> AlternativeKey {
    let (m, r) = (ctx.m(), f.len());
    let m_prime = MatFqm::from_fn(m, n, |j, i| {
        (0..r).fold(Fqm::ZERO, |acc, l| ctx.add(acc, ctx.scale(f[l], x[(i * m + j) * r + l] as u32)))
    });
    AlternativeKey { h0: h0.to_vec(), m_prime, t }
}

/// Kernel of the system and the key built from its first canonical vector.
pub fn solve_and_extract(
    ctx: &FieldCtx,
    system: &MatFq,
    f: &[Fqm],
    h0: &[Fqm],
    n: usize,
    t: usize,
) -> Option<(AlternativeKey, usize)> {
    let kernel = system.kernel();
    let first = kernel.first()?;
    Some((extract_key(ctx, first, f, h0, n, t), kernel.len()))
}

/// `G_pub · M′ᵀ · H₀ᵀ`, which vanishes for every solution of the key equation.
pub fn key_equation_residual(ctx: &FieldCtx, g_pub: &MatFqm, key: &AlternativeKey) -> MatFqm {
    let d = g_pub.cols() - g_pub.rows();
    let h0m = matrix::moore_matrix(ctx, &key.h0, d);
    g_pub.mul(ctx, &key.m_prime.transpose()).mul(ctx, &h0m.transpose())
}

/// Decrypts y with an alternative key; returns (message, error).
pub fn recover_message(
    ctx: &FieldCtx,
    key: &AlternativeKey,
    pk: &PublicKey,
    y: &[Fqm],
) -> Result<(Vec<Fqm>, Vec<Fqm>), AttackError> {
    let (k, n) = (pk.params.k, pk.params.n);
    if y.len() != n {
        return Err(AttackError::Recovery("ciphertext has the wrong length"));
    }
    let my = key.m_prime.apply(ctx, y);
    let s = matrix::moore_matrix(ctx, &key.h0, n - k).apply(ctx, &my);
    let z = gabidulin::syndrome_decode(ctx, &key.h0, &s, key.t).map_err(|f| AttackError::Recovery(f.reason))?;
    let e_sol = key.m_prime.solve(ctx, &z).map_err(|_| AttackError::Recovery("M' e = z is inconsistent"))?;
    if !e_sol.kernel.is_empty() {
        return Err(AttackError::Recovery("M' does not have full rank"));
    }
    let e = e_sol.particular;
    let c: Vec<Fqm> = y.iter().zip(&e).map(|(&a, &b)| ctx.sub(a, b)).collect();
    let m_sol = pk.g_pub.transpose().solve(ctx, &c).map_err(|_| AttackError::Recovery("y - e is not a codeword"))?;
    if m_sol.particular.len() != k || !m_sol.kernel.is_empty() {
        return Err(AttackError::Recovery("public generator does not have full rank"));
    }
    Ok((m_sol.particular, e))
}

/// Accepts a candidate iff rank(M′) = n and a fresh probe ciphertext decrypts.
pub fn verify_key<R: Rng + ?Sized>(ctx: &FieldCtx, key: &AlternativeKey, pk: &PublicKey, rng: &mut R) -> bool {
    if key.m_prime.rank(ctx) != pk.params.n {
        return false;
    }
    let msg = lg_scheme::random_message(ctx, pk.params.k, rng);
    let Ok(y) = lg_scheme::encrypt(ctx, pk, &msg, rng) else {
        return false;
    };
    matches!(recover_message(ctx, key, pk, &y), Ok((out, _)) if out == msg)
}

/// `M = T · Qᵀ` with `h₀ · T` the dual support of the secret Gabidulin code.
pub fn white_box_key(ctx: &FieldCtx, sk: &PrivateKey, h0: &[Fqm]) -> Result<AlternativeKey, AttackError> {
    let code = sk.code(ctx).map_err(|e| AttackError::Config(e.to_string()))?;
    let h = code.base().dual_support(ctx).map_err(|e| AttackError::Config(e.to_string()))?;
    let t = matrix::support_change_matrix(ctx, h0, &h).map_err(|e| AttackError::Config(e.to_string()))?;
    let m_prime = MatFqm::from_base(ctx, &t).mul(ctx, &sk.q_matrix(ctx).transpose());
    Ok(AlternativeKey { h0: h0.to_vec(), m_prime, t: sk.params.t() })
}

#[derive(Default)]
struct Clock {
    guess: AtomicU64,
    build: AtomicU64,
    solve: AtomicU64,
    verify: AtomicU64,
}

impl Clock {
    fn add(slot: &AtomicU64, since: Instant) {
        slot.fetch_add(since.elapsed().as_nanos() as u64, Ordering::Relaxed);
    }

    fn times(&self) -> StageTimes {
        let ms = |a: &AtomicU64| Duration::from_nanos(a.load(Ordering::Relaxed)).as_secs_f64() * 1e3;
        StageTimes { guess: ms(&self.guess), build: ms(&self.build), solve: ms(&self.solve), verify: ms(&self.verify) }
    }
}

struct Found {
    beta: Option<Fqm>,
    kernel_dim: usize,
    kernel_vector: usize,
    key: AlternativeKey,
}

struct Shared<'a> {
    ctx: &'a FieldCtx,
    pk: &'a PublicKey,
    h0: Vec<Fqm>,
    cfg: &'a AttackConfig,
    constraint: ElementConstraint,
    /// None when the β space is too large to ever repeat in practice.
    tried: Option<Mutex<HashSet<Fqm>>>,
    candidates: u128,
    issued: AtomicU64,
    solves: AtomicU64,
    stop: AtomicBool,
    clock: Clock,
    found: Mutex<Option<Found>>,
}

const TRACK_LIMIT_BITS: u32 = 24;

/// Evaluates one subspace: one elimination, then the kernel basis vectors
/// in canonical order until one yields a verified key.
fn evaluate(sh: &Shared, f: &[Fqm], rng: &mut ChaCha20Rng) -> Result<Option<Found>, AttackError> {
    let t0 = Instant::now();
    let system = build_key_equation(sh.ctx, &sh.pk.g_pub, &sh.h0, f)?;
    Clock::add(&sh.clock.build, t0);
    let t1 = Instant::now();
    sh.solves.fetch_add(1, Ordering::Relaxed);
    let kernel = system.kernel();
    Clock::add(&sh.clock.solve, t1);
    let t2 = Instant::now();
    let (n, t) = (sh.pk.params.n, sh.pk.params.t());
    let found = kernel.iter().enumerate().find_map(|(index, x)| {
        let key = extract_key(sh.ctx, x, f, &sh.h0, n, t);
        verify_key(sh.ctx, &key, sh.pk, rng).then_some(Found {
            beta: None,
            kernel_dim: kernel.len(),
            kernel_vector: index,
            key,
        })
    });
    Clock::add(&sh.clock.verify, t2);
    Ok(found)
}

fn worker(sh: &Shared, index: usize) -> Result<(), AttackError> {
    let mut rng = ChaCha20Rng::seed_from_u64(sh.cfg.seed);
    rng.set_stream(index as u64);
    while !sh.stop.load(Ordering::Relaxed) {
        let t0 = Instant::now();
        let (beta, f) = guess_subspace(sh.ctx, sh.cfg.r, sh.constraint, &mut rng)?;
        if let Some(tried) = &sh.tried {
            let mut set = tried.lock().unwrap();
            if set.len() as u128 >= sh.candidates {
                sh.stop.store(true, Ordering::Relaxed);
                break;
            }
            if !set.insert(beta) {
                continue;
            }
        }
        Clock::add(&sh.clock.guess, t0);
        if sh.issued.fetch_add(1, Ordering::SeqCst) >= sh.cfg.max_iters {
            sh.issued.fetch_sub(1, Ordering::SeqCst);
            break;
        }
        if let Some(hit) = evaluate(sh, f.basis(), &mut rng)? {
            let mut found = sh.found.lock().unwrap();
            if found.is_none() {
                *found = Some(Found { beta: Some(beta), ..hit });
            }
            sh.stop.store(true, Ordering::SeqCst);
        }
    }
    Ok(())
}

/// Runs the guess → build → solve → verify loop until a verified key is
/// found or the budget is spent. Single-worker runs are reproducible.
pub fn run_attack(ctx: &FieldCtx, pk: &PublicKey, cfg: &AttackConfig) -> Result<AttackReport, AttackError> {
    let start = Instant::now();
    let budget = pk.params.r_budget();
    let constraint = match &cfg.mode {
        AttackMode::Full => ElementConstraint::NotInPrimeField,
        AttackMode::Subfield(l) => {
            if *l < 2 || !ctx.m().is_multiple_of(*l) {
                return Err(FieldError::NotADivisor { l: *l, m: ctx.m() }.into());
            }
            ElementConstraint::InSubfield(*l)
        }
        AttackMode::Planted(_) => ElementConstraint::Any,
    };
    if !matches!(cfg.mode, AttackMode::Planted(_)) && !(3..=budget).contains(&cfg.r) {
        return Err(AttackError::BadR { r: cfg.r, budget });
    }
    let h0 = default_h0(ctx);
    let candidates = match constraint {
        ElementConstraint::InSubfield(l) => (ctx.q() as u128).pow(l as u32) - ctx.q() as u128,
        _ if (ctx.m() as f64) * (ctx.q() as f64).log2() <= TRACK_LIMIT_BITS as f64 => {
            (ctx.q() as u128).pow(ctx.m() as u32) - ctx.q() as u128
        }
        _ => u128::MAX,
    };
    let sh = Shared {
        ctx,
        pk,
        h0,
        cfg,
        constraint,
        tried: (candidates != u128::MAX).then(|| Mutex::new(HashSet::new())),
        candidates,
        issued: AtomicU64::new(0),
        solves: AtomicU64::new(0),
        stop: AtomicBool::new(false),
        clock: Clock::default(),
        found: Mutex::new(None),
    };

    if let AttackMode::Planted(f) = &cfg.mode {
        let mut rng = ChaCha20Rng::seed_from_u64(cfg.seed);
        sh.issued.store(1, Ordering::Relaxed);
        *sh.found.lock().unwrap() = evaluate(&sh, f.basis(), &mut rng)?;
    } else {
        let jobs = cfg.jobs.max(1);
        let results: Vec<Result<(), AttackError>> = std::thread::scope(|s| {
            let handles: Vec<_> = (0..jobs)
                .map(|w| {
                    let sh = &sh;
                    s.spawn(move || worker(sh, w))
                })
                .collect();
            handles.into_iter().map(|h| h.join().expect("attack worker panicked")).collect()
        });
        for r in results {
            r?;
        }
    }

    let found = sh.found.into_inner().unwrap();
    let mut report = AttackReport {
        outcome: if found.is_some() { Outcome::Success } else { Outcome::BudgetExhausted },
        iterations: sh.issued.load(Ordering::SeqCst),
        beta: None,
        kernel_dim: None,
        kernel_vector: None,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
        stage_ms: sh.clock.times(),
        solves: sh.solves.load(Ordering::Relaxed),
        key: None,
        note: (cfg.jobs > 1).then(|| "iteration count is not reproducible with several workers".to_string()),
    };
    if let Some(f) = found {
        report.beta = f.beta;
        report.kernel_dim = Some(f.kernel_dim);
        report.kernel_vector = Some(f.kernel_vector);
        report.key = Some(f.key);
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lg_scheme::{keygen, LgParams};

    fn desk(seed: u64) -> (FieldCtx, lg_scheme::KeyPair, ChaCha20Rng) {
        let params = LgParams::validate(2, 13, 12, 6).unwrap();
        let ctx = params.field().unwrap();
        let mut rng = ChaCha20Rng::seed_from_u64(seed);
        let kp = keygen(&ctx, &params, &mut rng).unwrap();
        (ctx, kp, rng)
    }

    fn planted_f(ctx: &FieldCtx, sk: &PrivateKey) -> Subspace {
        power_subspace(ctx, ctx.square(sk.gamma), 3)
    }

    #[test]
    fn system_dimensions_and_degenerate_case() {
        let (ctx, kp, _) = desk(1);
        let f = planted_f(&ctx, &kp.private);
        let sys = build_key_equation(&ctx, &kp.public.g_pub, &default_h0(&ctx), f.basis()).unwrap();
        assert_eq!((sys.rows(), sys.cols()), (468, 468));
        let zero = MatFqm::zeros(6, 12);
        let sys = build_key_equation(&ctx, &zero, &default_h0(&ctx), f.basis()).unwrap();
        assert_eq!(sys.kernel().len(), 468);
        let four = power_subspace(&ctx, ctx.generator(), 4);
        assert!(matches!(
            build_key_equation(&ctx, &kp.public.g_pub, &default_h0(&ctx), four.basis()),
            Err(AttackError::DimensionBudget { .. })
        ));
    }

    #[test]
    fn planted_guess_gives_a_verified_key() {
        let (ctx, kp, mut rng) = desk(2);
        let f = planted_f(&ctx, &kp.private);
        let h0 = default_h0(&ctx);
        let sys = build_key_equation(&ctx, &kp.public.g_pub, &h0, f.basis()).unwrap();
        let (key, dim) = solve_and_extract(&ctx, &sys, f.basis(), &h0, 12, 3).unwrap();
        assert_eq!(dim, 13);
        assert!(key_equation_residual(&ctx, &kp.public.g_pub, &key).is_zero());
        assert!(key.m_prime.entries().iter().all(|&x| f.contains(&ctx, x)));
        assert!(verify_key(&ctx, &key, &kp.public, &mut rng));
        let alpha = ctx.random_nonzero(&mut rng);
        let scaled = AlternativeKey { m_prime: key.m_prime.scale(&ctx, alpha), ..key.clone() };
        assert!(verify_key(&ctx, &scaled, &kp.public, &mut rng));
        for _ in 0..20 {
            let msg = lg_scheme::random_message(&ctx, 6, &mut rng);
            let y = lg_scheme::encrypt(&ctx, &kp.public, &msg, &mut rng).unwrap();
            assert_eq!(recover_message(&ctx, &key, &kp.public, &y).unwrap().0, msg);
        }
        let msg = lg_scheme::random_message(&ctx, 6, &mut rng);
        let c = kp.public.g_pub.left_apply(&ctx, &msg);
        assert_eq!(recover_message(&ctx, &key, &kp.public, &c).unwrap(), (msg, vec![ctx.zero(); 12]));
    }

    #[test]
    fn white_box_key_verifies() {
        for seed in 0..5 {
            let (ctx, kp, mut rng) = desk(10 + seed);
            let key = white_box_key(&ctx, &kp.private, &default_h0(&ctx)).unwrap();
            assert!(key_equation_residual(&ctx, &kp.public.g_pub, &key).is_zero());
            assert!(verify_key(&ctx, &key, &kp.public, &mut rng));
        }
    }

    #[test]
    fn bogus_keys_are_rejected() {
        let (ctx, kp, mut rng) = desk(3);
        let h0 = default_h0(&ctx);
        let random =
            AlternativeKey { h0: h0.clone(), m_prime: MatFqm::from_fn(13, 12, |_, _| ctx.random(&mut rng)), t: 3 };
        assert!(!verify_key(&ctx, &random, &kp.public, &mut rng));
        let low_rank = AlternativeKey { h0, m_prime: MatFqm::zeros(13, 12), t: 3 };
        assert!(!verify_key(&ctx, &low_rank, &kp.public, &mut rng));
    }

    #[test]
    fn planted_run_succeeds_in_one_iteration() {
        let (ctx, kp, _) = desk(4);
        let report = run_attack(&ctx, &kp.public, &AttackConfig::planted(planted_f(&ctx, &kp.private), 1)).unwrap();
        assert_eq!(report.outcome, Outcome::Success);
        assert_eq!((report.iterations, report.solves, report.kernel_dim), (1, 1, Some(13)));
    }

    #[test]
    fn budget_of_one_is_exhausted() {
        let (ctx, kp, _) = desk(5);
        let f = planted_f(&ctx, &kp.private);
        let mut seed = 0;
        let report = loop {
            let mut rng = ChaCha20Rng::seed_from_u64(seed);
            rng.set_stream(0);
            let (_, guess) = guess_subspace(&ctx, 3, ElementConstraint::NotInPrimeField, &mut rng).unwrap();
            if !f.is_subspace_of(&ctx, &guess) {
                break run_attack(&ctx, &kp.public, &AttackConfig::full(3, 1, seed)).unwrap();
            }
            seed += 1;
        };
        assert_eq!(report.outcome, Outcome::BudgetExhausted);
        assert_eq!(report.iterations, 1);
        assert!(report.key.is_none());
    }

    #[test]
    fn r_outside_the_budget_is_rejected() {
        let (ctx, kp, _) = desk(6);
        assert!(matches!(run_attack(&ctx, &kp.public, &AttackConfig::full(2, 10, 0)), Err(AttackError::BadR { .. })));
        assert!(matches!(run_attack(&ctx, &kp.public, &AttackConfig::full(4, 10, 0)), Err(AttackError::BadR { .. })));
    }

    #[test]
    fn guesses_avoid_the_prime_field() {
        let (ctx, _, mut rng) = desk(7);
        for _ in 0..200 {
            let (beta, f) = guess_subspace(&ctx, 3, ElementConstraint::NotInPrimeField, &mut rng).unwrap();
            assert!(!ctx.is_in_prime_field(beta));
            assert_eq!(f.dim(), 3);
        }
    }
}
