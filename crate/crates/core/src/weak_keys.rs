//! Weak keys: γ in a proper subfield F_{q^ℓ}.
//!
//! When γ ∈ F_{q^ℓ} the public code C satisfies dim(C + C^[ℓ]) = k + ℓ,
//! whereas a generic key gives min(2k, n) except with probability below
//! 4q^{−m/ℓ}. A flagged key is broken by the structural attack with F taken
//! inside F_{q^ℓ}: one linear solve when ℓ fits the unknown budget, a search
//! over β ∈ F_{q^ℓ} otherwise.

use rayon::prelude::*;

use crate::attack::{self, AttackConfig, AttackError, AttackMode, AttackReport};
use crate::galois::{FieldCtx, FieldError};
use crate::lg_scheme::PublicKey;
use crate::matrix::{MatFqm, Subspace};

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Weak,
    Generic,
    Inconclusive,
    /// ℓ ≥ min(k, n−k): the dimension gap is not guaranteed.
    InconclusivePrecondition,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct DivisorScan {
    pub l: usize,
    pub dim: usize,
    pub expected_weak: usize,
    pub expected_generic: usize,
    pub verdict: Verdict,
    /// 4q^{−m/ℓ}, attached to generic verdicts.
    pub generic_failure_bound: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, serde::Serialize)]
pub struct ScanResult {
    pub m: usize,
    pub divisors: Vec<DivisorScan>,
}

impl ScanResult {
    pub fn weak_divisors(&self) -> Vec<usize> {
        self.divisors.iter().filter(|d| d.verdict == Verdict::Weak).map(|d| d.l).collect()
    }
}

/// G^[ℓ], entrywise.
pub fn frobenius_code(ctx: &FieldCtx, g: &MatFqm, l: i64) -> MatFqm {
    g.frobenius(ctx, l)
}

pub fn proper_divisors(m: usize) -> Vec<usize> {
    (2..m).filter(|l| m.is_multiple_of(*l)).collect()
}

/// dim(C_pub + C_pub^[ℓ]) and its verdict.
pub fn distinguish(ctx: &FieldCtx, pk: &PublicKey, l: usize) -> Result<DivisorScan, FieldError> {
    let (m, n, k) = (ctx.m(), pk.params.n, pk.params.k);
    if l == 0 || m % l != 0 {
        return Err(FieldError::NotADivisor { l, m });
    }
    let g = &pk.g_pub;
    let dim = g.stack(&frobenius_code(ctx, g, l as i64)).rank(ctx);
    let expected_weak = k + l;
    let expected_generic = (2 * k).min(n);
    let verdict = if l >= k.min(n - k) {
        Verdict::InconclusivePrecondition
    } else if dim == expected_weak && expected_weak < n {
        Verdict::Weak
    } else if dim == expected_generic {
        Verdict::Generic
    } else {
        Verdict::Inconclusive
    };
    let generic_failure_bound =
        (verdict == Verdict::Generic).then(|| 4.0 * (ctx.q() as f64).powf(-(m as f64) / l as f64));
    Ok(DivisorScan { l, dim, expected_weak, expected_generic, verdict, generic_failure_bound })
}

/// Runs the distinguisher on every proper divisor of m.
pub fn scan(ctx: &FieldCtx, pk: &PublicKey) -> ScanResult {
    let divisors =
        proper_divisors(ctx.m()).into_par_iter().map(|l| distinguish(ctx, pk, l).expect("l divides m")).collect();
    ScanResult { m: ctx.m(), divisors }
}

/// Key recovery for a key flagged weak at ℓ.
///
/// With ℓ ≤ k − ⌈k²/n⌉ the subspace F = F_{q^ℓ} itself fits the system and
/// a single solve suffices. Up to ℓ ≤ k − 1 the search runs with
/// r = k − ⌈k²/n⌉ and β restricted to F_{q^ℓ}.
pub fn weak_attack(
    ctx: &FieldCtx,
    pk: &PublicKey,
    l: usize,
    max_iters: u64,
    seed: u64,
    jobs: usize,
) -> Result<AttackReport, AttackError> {
    let entry = distinguish(ctx, pk, l)?;
    if entry.verdict != Verdict::Weak {
        return Ok(AttackReport::precondition_failed(format!(
            "distinguisher verdict at l = {l} is {:?} (dim {}, weak would be {})",
            entry.verdict, entry.dim, entry.expected_weak
        )));
    }
    let (n, k) = (pk.params.n, pk.params.k);
    let budget = pk.params.r_budget();
    if k + l >= n || l > k - 1 {
        return Ok(AttackReport::precondition_failed(format!("l = {l} outside k + l < n and l <= k - 1")));
    }
    if l <= budget {
        let basis = ctx.subfield_basis(l)?;
        let f = Subspace::from_basis(ctx, basis).expect("subfield basis is independent");
        return attack::run_attack(ctx, pk, &AttackConfig::planted(f, seed));
    }
    let cfg = AttackConfig { r: budget, max_iters, mode: AttackMode::Subfield(l), seed, jobs };
    attack::run_attack(ctx, pk, &cfg)
}

/// Scans and attacks the smallest flagged divisor.
pub fn weak_attack_auto(
    ctx: &FieldCtx,
    pk: &PublicKey,
    max_iters: u64,
    seed: u64,
    jobs: usize,
) -> Result<(ScanResult, AttackReport), AttackError> {
    let result = scan(ctx, pk);
    let report = match result.weak_divisors().first() {
        Some(&l) => weak_attack(ctx, pk, l, max_iters, seed, jobs)?,
        None => AttackReport::precondition_failed("no divisor flagged weak".into()),
    };
    Ok((result, report))
}
