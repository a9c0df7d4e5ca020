//! Cryptanalysis workbench for the LG rank-metric encryption scheme.
//!
//! The crate covers finite-field and matrix arithmetic over F_q and
//! F_{q^m}, Gabidulin codes and their decoders, the LG scheme itself, the
//! structural key-recovery attack, the weak-key distinguisher and attack,
//! and closed-form security estimates for published parameter sets.

#![allow(clippy::needless_range_loop)]

/// Crate version, recorded in run manifests.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub mod attack;
pub mod estimator;
pub mod gabidulin;
pub mod galois;
pub mod lg_scheme;
pub mod matrix;
pub mod serial;
pub mod weak_keys;

pub use attack::{AlternativeKey, AttackConfig, AttackError, AttackMode, AttackReport, Outcome};
pub use gabidulin::{DecodeFailure, GabCode, LambdaGabCode};
pub use galois::{ElementConstraint, FieldCtx, FieldError, Fqm};
pub use lg_scheme::{GammaSource, KeyPair, LgError, LgParams, PrivateKey, PublicKey};
pub use matrix::{MatFq, MatFqm, MatrixError, Subspace};
pub use weak_keys::{ScanResult, Verdict};
