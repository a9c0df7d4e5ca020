//! Closed-form cost and probability estimates for the structural and
//! weak-key attacks, plus the published LG parameter sets.
//!
//! Everything is computed in the log₂ domain. Differences such as q^m − q are
//! evaluated as `m·log₂ q + log1p(−q^{1−m}) / ln 2`, which stays exact to
//! double precision for every size of m.

use num_bigint::BigUint;
use thiserror::Error;

use crate::lg_scheme::LgParams;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EstimatorError {
    #[error("precondition failed: {0}")]
    Precondition(String),
}

/// Exact q-binomial coefficient [n choose k]_q.
pub fn gaussian_binomial(n: u32, k: u32, q: u32) -> BigUint {
    if k > n {
        return BigUint::from(0u32);
    }
    let q = BigUint::from(q);
    let one = BigUint::from(1u32);
    let mut num = one.clone();
    let mut den = one.clone();
    for i in 0..k {
        num *= q.pow(n - i) - &one;
        den *= q.pow(i + 1) - &one;
    }
    num / den
}

/// log₂ of a positive big integer.
pub fn log2_big(x: &BigUint) -> f64 {
    let bits = x.bits();
    if bits <= 64 {
        return (x.iter_u64_digits().next().unwrap_or(0) as f64).log2();
    }
    let shift = bits - 64;
    let top = (x >> shift).iter_u64_digits().next().unwrap_or(0);
    (top as f64).log2() + shift as f64
}

/// log₂(q^m − q^j) for j < m.
fn log2_pow_minus(q: u32, m: u32, j: u32) -> f64 {
    let lq = (q as f64).log2();
    m as f64 * lq + (-(q as f64).powi(j as i32 - m as i32)).ln_1p() / std::f64::consts::LN_2
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct Step1 {
    /// log₂ of S·P_α with S = (q^m−1)/(q−1) and P_α = [r,3]_q / [m,3]_q.
    pub random_subspace_exact_log2: f64,
    /// log₂ q^{−2m+3r}.
    pub random_subspace_approx_log2: f64,
    /// log₂ 4/(q^m − q).
    pub beta_power_log2: f64,
    pub max_log2: f64,
    /// Whether 4/(q^m − q) exceeds q^{−2m+3r}.
    pub beta_dominates: bool,
}

/// Both Step 1 success probabilities.
pub fn step1_success_log2(q: u32, m: u32, r: u32) -> Step1 {
    assert!(3 <= r && r < m, "need 3 <= r < m");
    let s = log2_big(&((BigUint::from(q).pow(m) - 1u32) / (q - 1)));
    let exact = s + log2_big(&gaussian_binomial(r, 3, q)) - log2_big(&gaussian_binomial(m, 3, q));
    let approx = (3.0 * r as f64 - 2.0 * m as f64) * (q as f64).log2();
    let beta = 2.0 - log2_pow_minus(q, m, 1);
    // exact: 4 / (q^m − q) > q^{3r−2m}  ⟺  4·q^{2m} > q^{3r}·(q^m − q)
    let qb = BigUint::from(q);
    let beta_dominates = BigUint::from(4u32) * qb.pow(2 * m) > qb.pow(3 * r) * (qb.pow(m) - q);
    Step1 {
        random_subspace_exact_log2: exact,
        random_subspace_approx_log2: approx,
        beta_power_log2: beta,
        max_log2: approx.max(beta),
        beta_dominates,
    }
}

/// 3·log₂(mk(n−k)), the cost of one unfolded solve.
pub fn solve_bits(m: usize, n: usize, k: usize) -> f64 {
    3.0 * ((m * k * (n - k)) as f64).log2()
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct AttackBits {
    pub real: f64,
    pub rounded: i64,
}

/// 3·log₂(mk(n−k)) + log₂((q^m − q)/4).
pub fn attack_bits(q: u32, m: usize, n: usize, k: usize) -> AttackBits {
    let real = solve_bits(m, n, k) + log2_pow_minus(q, m as u32, 1) - 2.0;
    AttackBits { real, rounded: real.round() as i64 }
}

fn proper_divisors(m: usize) -> Vec<usize> {
    (2..m).filter(|l| m.is_multiple_of(*l)).collect()
}

/// ℓ satisfying k + ℓ < n and ℓ ≤ k − 1.
fn exploitable(n: usize, k: usize, l: usize) -> bool {
    k + l < n && l < k
}

/// (ℓ*, log₂ P_w) with ℓ* the largest exploitable proper divisor, P_w ≈ q^{ℓ*−m}.
pub fn weak_key_prob_log2(q: u32, m: usize, n: usize, k: usize) -> Option<(usize, f64)> {
    let l = proper_divisors(m).into_iter().rev().find(|&l| exploitable(n, k, l))?;
    Some((l, (l as f64 - m as f64) * (q as f64).log2()))
}

#[derive(Debug, Clone, Copy, PartialEq, serde::Serialize)]
pub struct WeakCost {
    pub l: usize,
    /// True when F_{q^ℓ} fits the unknown budget and one solve suffices.
    pub single_solve: bool,
    pub bits: f64,
    /// The guessing exponent min(ℓ, 2ℓ − 3r)·log₂ q before clamping at zero.
    pub search_log2_raw: f64,
}

/// log₂ of T for a weak key with γ ∈ F_{q^ℓ}.
pub fn weak_t_bits(q: u32, m: usize, n: usize, k: usize, l: usize) -> Result<WeakCost, EstimatorError> {
    if l < 2 || l >= m || !m.is_multiple_of(l) {
        return Err(EstimatorError::Precondition(format!("{l} is not a proper divisor of {m}")));
    }
    if !exploitable(n, k, l) {
        return Err(EstimatorError::Precondition(format!("l = {l} violates k + l < n or l <= k - 1")));
    }
    let r = k - (k * k).div_ceil(n);
    let base = solve_bits(m, n, k);
    if l <= r {
        return Ok(WeakCost { l, single_solve: true, bits: base, search_log2_raw: 0.0 });
    }
    let raw = (l as f64).min(2.0 * l as f64 - 3.0 * r as f64) * (q as f64).log2();
    // fewer than one guess is not meaningful
    Ok(WeakCost { l, single_solve: false, bits: base + raw.max(0.0), search_log2_raw: raw })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct PublishedSet {
    pub label: &'static str,
    pub q: u32,
    pub m: usize,
    pub n: usize,
    pub k: usize,
    pub claimed_security: u32,
    pub claimed_attack_bits: i64,
}

pub const PUBLISHED: [PublishedSet; 8] = [
    PublishedSet { label: "LG-I", q: 2, m: 83, n: 79, k: 31, claimed_security: 128, claimed_attack_bits: 132 },
    PublishedSet { label: "LG-II", q: 2, m: 85, n: 83, k: 29, claimed_security: 128, claimed_attack_bits: 134 },
    PublishedSet { label: "LG-III", q: 2, m: 97, n: 89, k: 23, claimed_security: 128, claimed_attack_bits: 146 },
    PublishedSet { label: "LG-IV", q: 2, m: 117, n: 115, k: 49, claimed_security: 256, claimed_attack_bits: 170 },
    PublishedSet { label: "LG-V", q: 2, m: 129, n: 127, k: 36, claimed_security: 256, claimed_attack_bits: 183 },
    PublishedSet { label: "LG-VI", q: 2, m: 133, n: 131, k: 34, claimed_security: 256, claimed_attack_bits: 187 },
    PublishedSet { label: "LG-VII", q: 2, m: 85, n: 83, k: 35, claimed_security: 140, claimed_attack_bits: 134 },
    PublishedSet { label: "LG-VIII", q: 2, m: 91, n: 89, k: 28, claimed_security: 140, claimed_attack_bits: 140 },
];

/// Published weak-key figures: label, r, divisors, log₂ P_w.
pub const PUBLISHED_WEAK: [(&str, usize, &[usize], i64); 6] = [
    ("LG-II", 18, &[5, 17], -68),
    ("LG-IV", 28, &[3, 9, 13, 39], -78),
    ("LG-V", 25, &[3, 43], -126),
    ("LG-VI", 25, &[7, 19], -114),
    ("LG-VII", 20, &[5, 17], -68),
    ("LG-VIII", 19, &[7, 13], -78),
];

pub fn published(label: &str) -> Option<&'static PublishedSet> {
    PUBLISHED.iter().find(|p| p.label == label)
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct WeakSummary {
    pub divisors: Vec<usize>,
    pub l_star: Option<usize>,
    pub pw_log2: Option<f64>,
    pub t_bits: Vec<WeakCost>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct SecurityEstimate {
    pub scheme_label: Option<&'static str>,
    pub params: LgParams,
    pub t: usize,
    pub a: usize,
    pub r: usize,
    pub attack_bits_real: f64,
    pub attack_bits_rounded: i64,
    pub table1_claimed: Option<i64>,
    /// Rounded value minus the published one.
    pub table1_delta: Option<i64>,
    pub step1: Option<Step1>,
    pub weak: WeakSummary,
}

pub fn estimate(params: &LgParams) -> SecurityEstimate {
    let LgParams { q, m, n, k } = *params;
    let bits = attack_bits(q, m, n, k);
    let r = params.r_budget();
    let label = PUBLISHED.iter().find(|p| (p.q, p.m, p.n, p.k) == (q, m, n, k));
    let divisors = proper_divisors(m);
    let weak = weak_key_prob_log2(q, m, n, k);
    let t_bits = divisors.iter().filter_map(|&l| weak_t_bits(q, m, n, k, l).ok()).collect();
    SecurityEstimate {
        scheme_label: label.map(|p| p.label),
        params: *params,
        t: params.t(),
        a: params.a(),
        r,
        attack_bits_real: bits.real,
        attack_bits_rounded: bits.rounded,
        table1_claimed: label.map(|p| p.claimed_attack_bits),
        table1_delta: label.map(|p| bits.rounded - p.claimed_attack_bits),
        step1: (3..m).contains(&r).then(|| step1_success_log2(q, m as u32, r as u32)),
        weak: WeakSummary { divisors, l_star: weak.map(|w| w.0), pw_log2: weak.map(|w| w.1), t_bits },
    }
}
