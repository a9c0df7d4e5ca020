//! JSON file formats.
//!
//! Field elements are digit strings (constant term first), F_{q^m} matrices
//! are `{rows, cols, entries}` with row-major digit strings, F_q matrices use
//! integers. Every file carries its field so artifacts are portable, and may
//! carry an opaque `manifest` describing the run that produced it.

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::attack::{AlternativeKey, AttackReport, Outcome, StageTimes};
use crate::galois::{FieldCtx, FieldError, Fqm};
use crate::lg_scheme::{LgParams, PrivateKey, PublicKey};
use crate::matrix::{MatFq, MatFqm};

#[derive(Debug, Error)]
pub enum SerialError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("malformed content: {0}")]
    Shape(String),
    #[error("field mismatch: {0}")]
    FieldMismatch(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldJson {
    pub q: u32,
    pub m: usize,
    pub modulus: String,
}

impl FieldJson {
    pub fn from_ctx(ctx: &FieldCtx) -> FieldJson {
        FieldJson { q: ctx.q(), m: ctx.m(), modulus: ctx.encode_modulus() }
    }

    pub fn to_ctx(&self) -> Result<FieldCtx, SerialError> {
        let digits: Option<Vec<u8>> =
            self.modulus.chars().map(|c| c.to_digit(36).filter(|&d| d < self.q).map(|d| d as u8)).collect();
        let digits = digits.ok_or_else(|| FieldError::BadEncoding(self.modulus.clone()))?;
        Ok(FieldCtx::new(self.q, self.m, Some(&digits))?)
    }

    /// Errors unless this describes the same field as `ctx`.
    pub fn expect(&self, ctx: &FieldCtx) -> Result<(), SerialError> {
        let mine = self.to_ctx()?;
        if &mine != ctx {
            return Err(SerialError::FieldMismatch(format!(
                "file uses (q={}, m={}, modulus {}), expected (q={}, m={}, modulus {})",
                self.q,
                self.m,
                self.modulus,
                ctx.q(),
                ctx.m(),
                ctx.encode_modulus()
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatFqmJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<String>,
}

impl MatFqmJson {
    pub fn from_mat(ctx: &FieldCtx, m: &MatFqm) -> MatFqmJson {
        MatFqmJson { rows: m.rows(), cols: m.cols(), entries: encode_vec(ctx, m.entries()) }
    }

    pub fn to_mat(&self, ctx: &FieldCtx) -> Result<MatFqm, SerialError> {
        if self.entries.len() != self.rows * self.cols {
            return Err(SerialError::Shape(format!(
                "{} entries for a {}x{} matrix",
                self.entries.len(),
                self.rows,
                self.cols
            )));
        }
        Ok(MatFqm::from_vec(self.rows, self.cols, decode_vec(ctx, &self.entries)?))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatFqJson {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<u32>,
}

impl MatFqJson {
    pub fn from_mat(m: &MatFq) -> MatFqJson {
        MatFqJson { rows: m.rows(), cols: m.cols(), entries: m.entries().iter().map(|&d| d as u32).collect() }
    }

    pub fn to_mat(&self, q: u32) -> Result<MatFq, SerialError> {
        if self.entries.len() != self.rows * self.cols || self.entries.iter().any(|&d| d >= q) {
            return Err(SerialError::Shape("F_q matrix entries out of shape or range".into()));
        }
        let rows: Vec<Vec<u8>> =
            self.entries.chunks(self.cols.max(1)).map(|r| r.iter().map(|&d| d as u8).collect()).collect();
        if self.rows == 0 {
            return Ok(MatFq::zeros(q, 0, self.cols));
        }
        Ok(MatFq::from_rows(q, &rows))
    }
}

pub fn encode_vec(ctx: &FieldCtx, v: &[Fqm]) -> Vec<String> {
    v.iter().map(|&x| ctx.encode(x)).collect()
}

pub fn decode_vec(ctx: &FieldCtx, v: &[String]) -> Result<Vec<Fqm>, SerialError> {
    v.iter().map(|s| ctx.decode(s).map_err(SerialError::from)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PublicPart {
    #[serde(rename = "G_pub")]
    pub g_pub: MatFqmJson,
    pub a: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PublicKeyFile {
    pub params: LgParams,
    pub field: FieldJson,
    pub public: PublicPart,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrivatePart {
    #[serde(rename = "S")]
    pub s: MatFqmJson,
    pub g: Vec<String>,
    pub lambda: Vec<String>,
    #[serde(rename = "P")]
    pub p: MatFqmJson,
    pub gamma: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PrivateKeyFile {
    pub params: LgParams,
    pub field: FieldJson,
    pub private: PrivatePart,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<Value>,
}

fn check_params(p: &LgParams, ctx: &FieldCtx) -> Result<(), SerialError> {
    LgParams::validate(p.q, p.m, p.n, p.k).map_err(|e| SerialError::Shape(e.to_string()))?;
    if p.q != ctx.q() || p.m != ctx.m() {
        return Err(SerialError::FieldMismatch("parameters disagree with the embedded field".into()));
    }
    Ok(())
}

impl PublicKeyFile {
    pub fn new(ctx: &FieldCtx, pk: &PublicKey) -> PublicKeyFile {
        PublicKeyFile {
            params: pk.params,
            field: FieldJson::from_ctx(ctx),
            public: PublicPart { g_pub: MatFqmJson::from_mat(ctx, &pk.g_pub), a: pk.a },
            manifest: None,
        }
    }

    pub fn load(&self) -> Result<(FieldCtx, PublicKey), SerialError> {
        let ctx = self.field.to_ctx()?;
        check_params(&self.params, &ctx)?;
        let g_pub = self.public.g_pub.to_mat(&ctx)?;
        if (g_pub.rows(), g_pub.cols()) != (self.params.k, self.params.n) {
            return Err(SerialError::Shape("G_pub is not k x n".into()));
        }
        Ok((ctx, PublicKey { params: self.params, g_pub, a: self.public.a }))
    }
}

impl PrivateKeyFile {
    pub fn new(ctx: &FieldCtx, sk: &PrivateKey) -> PrivateKeyFile {
        PrivateKeyFile {
            params: sk.params,
            field: FieldJson::from_ctx(ctx),
            private: PrivatePart {
                s: MatFqmJson::from_mat(ctx, &sk.s),
                g: encode_vec(ctx, &sk.g),
                lambda: encode_vec(ctx, &sk.lambda),
                p: MatFqmJson::from_mat(ctx, &sk.p),
                gamma: ctx.encode(sk.gamma),
            },
            manifest: None,
        }
    }

    pub fn load(&self) -> Result<(FieldCtx, PrivateKey), SerialError> {
        let ctx = self.field.to_ctx()?;
        check_params(&self.params, &ctx)?;
        let p = &self.private;
        let sk = PrivateKey {
            params: self.params,
            s: p.s.to_mat(&ctx)?,
            g: decode_vec(&ctx, &p.g)?,
            lambda: decode_vec(&ctx, &p.lambda)?,
            p: p.p.to_mat(&ctx)?,
            gamma: ctx.decode(&p.gamma)?,
        };
        let (n, k) = (self.params.n, self.params.k);
        if (sk.s.rows(), sk.s.cols()) != (k, k)
            || (sk.p.rows(), sk.p.cols()) != (n, n)
            || sk.g.len() != n
            || sk.lambda.len() != n
        {
            return Err(SerialError::Shape("private key components have the wrong sizes".into()));
        }
        Ok((ctx, sk))
    }
}

/// `{field, y}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CiphertextFile {
    pub field: FieldJson,
    pub y: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<Value>,
}

/// `{field, message}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MessageFile {
    pub field: FieldJson,
    pub message: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<Value>,
}

/// `{field, basis}`: a guessed subspace.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BasisFile {
    pub field: FieldJson,
    pub basis: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeKeyJson {
    pub h0: Vec<String>,
    #[serde(rename = "M_prime")]
    pub m_prime: MatFqmJson,
    pub t: usize,
}

impl AlternativeKeyJson {
    pub fn from_key(ctx: &FieldCtx, key: &AlternativeKey) -> AlternativeKeyJson {
        AlternativeKeyJson { h0: encode_vec(ctx, &key.h0), m_prime: MatFqmJson::from_mat(ctx, &key.m_prime), t: key.t }
    }

    pub fn to_key(&self, ctx: &FieldCtx) -> Result<AlternativeKey, SerialError> {
        Ok(AlternativeKey { h0: decode_vec(ctx, &self.h0)?, m_prime: self.m_prime.to_mat(ctx)?, t: self.t })
    }
}

/// `{params, field, key}`: a recovered key usable for decryption.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AlternativeKeyFile {
    pub params: LgParams,
    pub field: FieldJson,
    pub key: AlternativeKeyJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub manifest: Option<Value>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AttackReportJson {
    pub outcome: Outcome,
    pub iterations: u64,
    pub beta: Option<String>,
    pub kernel_dim: Option<usize>,
    pub kernel_vector: Option<usize>,
    pub wall_ms: f64,
    pub stage_ms: StageTimes,
    pub solves: u64,
    pub note: Option<String>,
    pub key: Option<AlternativeKeyJson>,
}

impl AttackReportJson {
    pub fn from_report(ctx: &FieldCtx, r: &AttackReport) -> AttackReportJson {
        AttackReportJson {
            outcome: r.outcome,
            iterations: r.iterations,
            beta: r.beta.map(|b| ctx.encode(b)),
            kernel_dim: r.kernel_dim,
            kernel_vector: r.kernel_vector,
            wall_ms: r.wall_ms,
            stage_ms: r.stage_ms,
            solves: r.solves,
            note: r.note.clone(),
            key: r.key.as_ref().map(|k| AlternativeKeyJson::from_key(ctx, k)),
        }
    }
}
