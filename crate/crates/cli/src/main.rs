//! `lgrank`: key lifecycle, attack campaigns, weak-key scans and estimates
//! for the LG rank-metric scheme. All artifacts are JSON.

mod manifest;

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha20Rng;
use serde::de::DeserializeOwned;
use serde::Serialize;
use serde_json::{json, Value};

use lgrank::attack::{self, recover_message};
use lgrank::estimator::{self, PUBLISHED, PUBLISHED_WEAK};
use lgrank::lg_scheme::{self, LgError};
use lgrank::serial::{
    decode_vec, encode_vec, AlternativeKeyFile, AlternativeKeyJson, AttackReportJson, BasisFile, CiphertextFile,
    FieldJson, MessageFile, PrivateKeyFile, PublicKeyFile,
};
use lgrank::weak_keys::{self, Verdict};
use lgrank::{AttackConfig, AttackMode, AttackReport, FieldCtx, GammaSource, LgParams, Outcome, PublicKey, Subspace};

use manifest::RunManifest;

const EXIT_INPUT: u8 = 2;
const EXIT_DECRYPT: u8 = 3;
const EXIT_BUDGET: u8 = 4;

#[derive(Parser)]
#[command(name = "lgrank", version, about = "Cryptanalysis workbench for the LG rank-metric cryptosystem")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone, Copy)]
struct ParamArgs {
    #[arg(short = 'q', default_value_t = 2)]
    q: u32,
    #[arg(short = 'm')]
    m: usize,
    #[arg(short = 'n')]
    n: usize,
    #[arg(short = 'k')]
    k: usize,
}

#[derive(Args, Clone, Copy)]
struct SeedArg {
    /// RNG seed; defaults to $LGRANK_SEED, then 0.
    #[arg(long, env = "LGRANK_SEED", default_value_t = 0)]
    seed: u64,
}

#[derive(Clone, Copy, ValueEnum)]
enum Mode {
    Full,
    Planted,
    Subfield,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a key pair.
    Keygen {
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        seed: SeedArg,
        /// Draw γ from the subfield F_{q^l}, producing a weak key.
        #[arg(long, value_name = "L")]
        weak_subfield: Option<usize>,
        #[arg(long)]
        out_pub: PathBuf,
        #[arg(long)]
        out_priv: PathBuf,
    },
    /// Encrypt a message file, or a fresh random message.
    Encrypt {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long, conflicts_with = "message_out")]
        message: Option<PathBuf>,
        /// Where to write the random message when `--message` is absent.
        #[arg(long)]
        message_out: Option<PathBuf>,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long)]
        out: PathBuf,
    },
    /// Decrypt with the private key or with a recovered alternative key.
    Decrypt {
        #[arg(long = "priv", required_unless_present = "alt_key", conflicts_with = "alt_key")]
        private: Option<PathBuf>,
        #[arg(long, requires = "public")]
        alt_key: Option<PathBuf>,
        #[arg(long = "pub")]
        public: Option<PathBuf>,
        #[arg(long)]
        ciphertext: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Structural key recovery from a public key.
    Attack {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long, value_enum, default_value = "full")]
        mode: Mode,
        /// Guess dimension; defaults to k − ⌈k²/n⌉.
        #[arg(long)]
        r: Option<usize>,
        #[arg(long, required_if_eq("mode", "planted"))]
        planted_basis: Option<PathBuf>,
        #[arg(long, required_if_eq("mode", "subfield"))]
        l: Option<usize>,
        /// Maximum number of guesses.
        #[arg(long, default_value_t = 50_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        seed: SeedArg,
        /// Ciphertext to decrypt with the recovered key.
        #[arg(long)]
        probe: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        out_key: Option<PathBuf>,
    },
    /// Run the weak-key distinguisher on every proper divisor of m.
    Weakscan {
        #[arg(long = "pub")]
        public: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Scan, then attack a key flagged weak.
    Weakattack {
        #[arg(long = "pub")]
        public: PathBuf,
        /// Divisor to attack; defaults to the smallest flagged one.
        #[arg(long)]
        l: Option<usize>,
        #[arg(long, default_value_t = 50_000)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[command(flatten)]
        seed: SeedArg,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        out_key: Option<PathBuf>,
    },
    /// Security estimates for a parameter set or the published tables.
    Estimate {
        #[arg(short = 'q', default_value_t = 2)]
        q: u32,
        #[arg(short = 'm', required_unless_present_any = ["table1", "table2"])]
        m: Option<usize>,
        #[arg(short = 'n', required_unless_present_any = ["table1", "table2"])]
        n: Option<usize>,
        #[arg(short = 'k', required_unless_present_any = ["table1", "table2"])]
        k: Option<usize>,
        #[arg(long, conflicts_with = "table2")]
        table1: bool,
        #[arg(long)]
        table2: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn run(cmd: Command) -> Result<u8> {
    match cmd {
        Command::Keygen { params, seed, weak_subfield, out_pub, out_priv } => {
            keygen(params, seed.seed, weak_subfield, &out_pub, &out_priv)
        }
        Command::Encrypt { public, message, message_out, seed, out } => {
            encrypt(&public, message.as_deref(), message_out.as_deref(), seed.seed, &out)
        }
        Command::Decrypt { private, alt_key, public, ciphertext, out } => {
            decrypt(private.as_deref(), alt_key.as_deref(), public.as_deref(), &ciphertext, &out)
        }
        Command::Attack { public, mode, r, planted_basis, l, budget, jobs, seed, probe, out, out_key } => {
            let opts = AttackOpts { mode, r, planted_basis, l, budget, jobs, seed: seed.seed, probe, out, out_key };
            attack_cmd(&public, opts)
        }
        Command::Weakscan { public, out } => weakscan(&public, out.as_deref()),
        Command::Weakattack { public, l, budget, jobs, seed, out, out_key } => {
            weakattack(&public, l, budget, jobs, seed.seed, &out, out_key.as_deref())
        }
        Command::Estimate { q, m, n, k, table1, table2, out } => estimate(q, m, n, k, table1, table2, out.as_deref()),
    }
}

fn read_json<T: DeserializeOwned>(path: &Path) -> Result<T> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    fs::write(path, text).with_context(|| format!("writing {}", path.display()))
}

fn emit<T: Serialize>(out: Option<&Path>, value: &T) -> Result<()> {
    match out {
        Some(p) => write_json(p, value),
        None => {
            let mut stdout = std::io::stdout().lock();
            match writeln!(stdout, "{}", serde_json::to_string_pretty(value)?) {
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e.into()),
                _ => Ok(()),
            }
        }
    }
}

fn load_public(path: &Path) -> Result<(FieldCtx, PublicKey)> {
    let file: PublicKeyFile = read_json(path)?;
    file.load().with_context(|| format!("loading public key {}", path.display()))
}

fn params_value(p: &LgParams) -> Value {
    serde_json::to_value(p).expect("params serialize")
}

fn keygen(a: ParamArgs, seed: u64, weak: Option<usize>, out_pub: &Path, out_priv: &Path) -> Result<u8> {
    let params = LgParams::validate(a.q, a.m, a.n, a.k)?;
    let ctx = params.field()?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let source = weak.map_or(GammaSource::Uniform, GammaSource::Subfield);
    let kp = lg_scheme::keygen_with(&ctx, &params, &mut rng, source)?;

    let mut pv = params_value(&params);
    if let Some(l) = weak {
        pv["weak_subfield"] = json!(l);
    }
    let outputs = [out_pub.to_path_buf(), out_priv.to_path_buf()];
    let manifest = RunManifest::new("keygen", pv, Some(seed)).outputs(&outputs).value();
    let mut pub_file = PublicKeyFile::new(&ctx, &kp.public);
    pub_file.manifest = Some(manifest.clone());
    let mut priv_file = PrivateKeyFile::new(&ctx, &kp.private);
    priv_file.manifest = Some(manifest);
    write_json(out_pub, &pub_file)?;
    write_json(out_priv, &priv_file)?;
    Ok(0)
}

fn encrypt(public: &Path, message: Option<&Path>, message_out: Option<&Path>, seed: u64, out: &Path) -> Result<u8> {
    let (ctx, pk) = load_public(public)?;
    let mut rng = ChaCha20Rng::seed_from_u64(seed);
    let mut inputs = vec![public.to_path_buf()];
    let msg = match message {
        Some(p) => {
            let file: MessageFile = read_json(p)?;
            file.field.expect(&ctx)?;
            inputs.push(p.to_path_buf());
            decode_vec(&ctx, &file.message)?
        }
        None => lg_scheme::random_message(&ctx, pk.params.k, &mut rng),
    };
    let y = lg_scheme::encrypt(&ctx, &pk, &msg, &mut rng)?;

    let mut outputs = vec![out.to_path_buf()];
    outputs.extend(message_out.map(Path::to_path_buf));
    let manifest = RunManifest::new("encrypt", params_value(&pk.params), Some(seed)).inputs(&inputs).outputs(&outputs);
    if let Some(p) = message_out {
        let file = MessageFile {
            field: FieldJson::from_ctx(&ctx),
            message: encode_vec(&ctx, &msg),
            manifest: Some(manifest.value()),
        };
        write_json(p, &file)?;
    }
    let file =
        CiphertextFile { field: FieldJson::from_ctx(&ctx), y: encode_vec(&ctx, &y), manifest: Some(manifest.value()) };
    write_json(out, &file)?;
    Ok(0)
}

fn read_ciphertext(path: &Path, ctx: &FieldCtx, n: usize) -> Result<Vec<lgrank::Fqm>> {
    let file: CiphertextFile = read_json(path)?;
    file.field.expect(ctx).with_context(|| format!("ciphertext {}", path.display()))?;
    let y = decode_vec(ctx, &file.y)?;
    if y.len() != n {
        bail!("ciphertext has length {}, expected {n}", y.len());
    }
    Ok(y)
}

fn decrypt(private: Option<&Path>, alt_key: Option<&Path>, public: Option<&Path>, ct: &Path, out: &Path) -> Result<u8> {
    let (ctx, params, inputs, result) = if let Some(p) = private {
        let file: PrivateKeyFile = read_json(p)?;
        let (ctx, sk) = file.load()?;
        let y = read_ciphertext(ct, &ctx, sk.params.n)?;
        let res = match lg_scheme::decrypt(&ctx, &sk, &y) {
            Ok(m) => Ok(m),
            Err(LgError::Decryption(f)) => Err(f.to_string()),
            Err(e) => return Err(e.into()),
        };
        (ctx, sk.params, vec![p.to_path_buf(), ct.to_path_buf()], res)
    } else {
        let (kp, pp) = (alt_key.expect("clap enforces"), public.expect("clap enforces"));
        let (ctx, pk) = load_public(pp)?;
        let file: AlternativeKeyFile = read_json(kp)?;
        file.field.expect(&ctx)?;
        let key = file.key.to_key(&ctx)?;
        let y = read_ciphertext(ct, &ctx, pk.params.n)?;
        let res = recover_message(&ctx, &key, &pk, &y).map(|(m, _)| m).map_err(|e| e.to_string());
        (ctx, pk.params, vec![kp.to_path_buf(), pp.to_path_buf(), ct.to_path_buf()], res)
    };
    let msg = match result {
        Ok(m) => m,
        Err(reason) => {
            eprintln!("decryption failure: {reason}");
            return Ok(EXIT_DECRYPT);
        }
    };
    let manifest =
        RunManifest::new("decrypt", params_value(&params), None).inputs(&inputs).outputs([&out.to_path_buf()]);
    let file = MessageFile {
        field: FieldJson::from_ctx(&ctx),
        message: encode_vec(&ctx, &msg),
        manifest: Some(manifest.value()),
    };
    write_json(out, &file)?;
    Ok(0)
}

struct AttackOpts {
    mode: Mode,
    r: Option<usize>,
    planted_basis: Option<PathBuf>,
    l: Option<usize>,
    budget: u64,
    jobs: usize,
    seed: u64,
    probe: Option<PathBuf>,
    out: PathBuf,
    out_key: Option<PathBuf>,
}

#[derive(Serialize)]
struct AttackOutput {
    params: LgParams,
    field: FieldJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    precheck: Option<Value>,
    report: AttackReportJson,
    #[serde(skip_serializing_if = "Option::is_none")]
    probe: Option<Value>,
    manifest: Value,
}

/// Writes the report (and key), decrypts the probe, and maps the outcome to an exit code.
#[allow(clippy::too_many_arguments)]
fn finish_attack(
    command: &'static str,
    ctx: &FieldCtx,
    pk: &PublicKey,
    report: &AttackReport,
    precheck: Option<Value>,
    mut manifest: RunManifest,
    probe: Option<&Path>,
    out: &Path,
    out_key: Option<&Path>,
) -> Result<u8> {
    manifest.wall_ms = Some(report.wall_ms);
    let mut outputs = vec![out.to_path_buf()];
    if report.key.is_some() {
        outputs.extend(out_key.map(Path::to_path_buf));
    }
    let manifest = manifest.outputs(&outputs);

    let probe_value = match (probe, &report.key) {
        (Some(p), Some(key)) => {
            let y = read_ciphertext(p, ctx, pk.params.n)?;
            Some(match recover_message(ctx, key, pk, &y) {
                Ok((m, _)) => json!({ "ciphertext": p.display().to_string(), "message": encode_vec(ctx, &m) }),
                Err(e) => json!({ "ciphertext": p.display().to_string(), "error": e.to_string() }),
            })
        }
        _ => None,
    };
    if let (Some(path), Some(key)) = (out_key, &report.key) {
        let file = AlternativeKeyFile {
            params: pk.params,
            field: FieldJson::from_ctx(ctx),
            key: AlternativeKeyJson::from_key(ctx, key),
            manifest: Some(manifest.value()),
        };
        write_json(path, &file)?;
    }
    let output = AttackOutput {
        params: pk.params,
        field: FieldJson::from_ctx(ctx),
        precheck,
        report: AttackReportJson::from_report(ctx, report),
        probe: probe_value,
        manifest: manifest.value(),
    };
    write_json(out, &output)?;
    eprintln!(
        "{command}: {:?} after {} iteration(s), {} solve(s), {:.1} ms",
        report.outcome, report.iterations, report.solves, report.wall_ms
    );
    Ok(match report.outcome {
        Outcome::Success => 0,
        Outcome::BudgetExhausted | Outcome::PreconditionFailed => EXIT_BUDGET,
    })
}

fn attack_cmd(public: &Path, o: AttackOpts) -> Result<u8> {
    let (ctx, pk) = load_public(public)?;
    let r = o.r.unwrap_or_else(|| pk.params.r_budget());
    let mut inputs = vec![public.to_path_buf()];
    let mut precheck = None;
    let (mode, mode_name) = match o.mode {
        Mode::Full => (AttackMode::Full, "full"),
        Mode::Planted => {
            let path = o.planted_basis.as_deref().expect("clap enforces");
            let file: BasisFile = read_json(path)?;
            file.field.expect(&ctx)?;
            let basis = decode_vec(&ctx, &file.basis)?;
            let f = Subspace::from_basis(&ctx, basis).context("planted basis is not F_q-independent")?;
            inputs.push(path.to_path_buf());
            (AttackMode::Planted(f), "planted")
        }
        Mode::Subfield => {
            let l = o.l.expect("clap enforces");
            let entry = weak_keys::distinguish(&ctx, &pk, l)?;
            if entry.verdict != Verdict::Weak {
                eprintln!(
                    "warning: distinguisher at l = {l} reports {:?} (dim {}, weak would be {}); key does not look weak",
                    entry.verdict, entry.dim, entry.expected_weak
                );
            }
            precheck = Some(serde_json::to_value(&entry)?);
            (AttackMode::Subfield(l), "subfield")
        }
    };
    inputs.extend(o.probe.clone());

    let mut pv = params_value(&pk.params);
    pv["mode"] = json!(mode_name);
    pv["r"] = json!(if let AttackMode::Planted(f) = &mode { f.dim() } else { r });
    pv["budget"] = json!(o.budget);
    pv["jobs"] = json!(o.jobs);
    if let Some(l) = o.l {
        pv["l"] = json!(l);
    }
    let manifest = RunManifest::new("attack", pv, Some(o.seed)).inputs(&inputs);

    let report = match (&mode, &precheck) {
        (AttackMode::Subfield(_), Some(p)) if p["verdict"] != json!("weak") => {
            AttackReport::precondition_failed("distinguisher precheck failed".into())
        }
        _ => {
            let cfg = match mode {
                AttackMode::Planted(f) => AttackConfig { jobs: o.jobs, ..AttackConfig::planted(f, o.seed) },
                m => AttackConfig { r, max_iters: o.budget, mode: m, seed: o.seed, jobs: o.jobs },
            };
            attack::run_attack(&ctx, &pk, &cfg)?
        }
    };
    finish_attack("attack", &ctx, &pk, &report, precheck, manifest, o.probe.as_deref(), &o.out, o.out_key.as_deref())
}

#[derive(Serialize)]
struct ScanOutput {
    params: LgParams,
    scan: weak_keys::ScanResult,
    weak_divisors: Vec<usize>,
    manifest: Value,
}

fn weakscan(public: &Path, out: Option<&Path>) -> Result<u8> {
    let (ctx, pk) = load_public(public)?;
    let scan = weak_keys::scan(&ctx, &pk);
    let manifest = RunManifest::new("weakscan", params_value(&pk.params), None)
        .input(public)
        .outputs(out.map(Path::to_path_buf).as_ref());
    let weak_divisors = scan.weak_divisors();
    match weak_divisors.as_slice() {
        [] => eprintln!("weakscan: no divisor flagged weak"),
        ls => eprintln!("weakscan: weak at l = {ls:?}"),
    }
    emit(out, &ScanOutput { params: pk.params, scan, weak_divisors, manifest: manifest.value() })?;
    Ok(0)
}

fn weakattack(
    public: &Path,
    l: Option<usize>,
    budget: u64,
    jobs: usize,
    seed: u64,
    out: &Path,
    out_key: Option<&Path>,
) -> Result<u8> {
    let (ctx, pk) = load_public(public)?;
    let scan = weak_keys::scan(&ctx, &pk);
    let chosen = l.or_else(|| scan.weak_divisors().first().copied());
    let report = match chosen {
        Some(l) => weak_keys::weak_attack(&ctx, &pk, l, budget, seed, jobs)?,
        None => AttackReport::precondition_failed("no divisor flagged weak".into()),
    };
    let mut pv = params_value(&pk.params);
    pv["l"] = json!(chosen);
    pv["budget"] = json!(budget);
    pv["jobs"] = json!(jobs);
    let manifest = RunManifest::new("weakattack", pv, Some(seed)).input(public);
    let precheck = Some(serde_json::to_value(&scan)?);
    finish_attack("weakattack", &ctx, &pk, &report, precheck, manifest, None, out, out_key)
}

#[derive(Serialize)]
struct Table1Row {
    label: &'static str,
    q: u32,
    m: usize,
    n: usize,
    k: usize,
    claimed_security: u32,
    attack_bits_real: f64,
    attack_bits_rounded: i64,
    published_attack_bits: i64,
    delta: i64,
}

#[derive(Serialize)]
struct Table2Row {
    label: &'static str,
    r: usize,
    published_r: usize,
    divisors: Vec<usize>,
    published_divisors: &'static [usize],
    l_star: Option<usize>,
    pw_log2: Option<f64>,
    published_pw_log2: i64,
}

fn estimate(
    q: u32,
    m: Option<usize>,
    n: Option<usize>,
    k: Option<usize>,
    table1: bool,
    table2: bool,
    out: Option<&Path>,
) -> Result<u8> {
    let start = Instant::now();
    let value = if table1 {
        let rows: Vec<Table1Row> = PUBLISHED
            .iter()
            .map(|p| {
                let bits = estimator::attack_bits(p.q, p.m, p.n, p.k);
                Table1Row {
                    label: p.label,
                    q: p.q,
                    m: p.m,
                    n: p.n,
                    k: p.k,
                    claimed_security: p.claimed_security,
                    attack_bits_real: bits.real,
                    attack_bits_rounded: bits.rounded,
                    published_attack_bits: p.claimed_attack_bits,
                    delta: bits.rounded - p.claimed_attack_bits,
                }
            })
            .collect();
        json!({ "table": "table1", "rows": rows })
    } else if table2 {
        let rows: Vec<Table2Row> = PUBLISHED_WEAK
            .iter()
            .map(|&(label, r, divisors, pw)| {
                let p = estimator::published(label).expect("published label");
                let params = LgParams::validate(p.q, p.m, p.n, p.k).expect("published sets are valid");
                let weak = estimator::weak_key_prob_log2(p.q, p.m, p.n, p.k);
                Table2Row {
                    label,
                    r: params.r_budget(),
                    published_r: r,
                    divisors: (2..p.m).filter(|l| p.m.is_multiple_of(*l)).collect(),
                    published_divisors: divisors,
                    l_star: weak.map(|w| w.0),
                    pw_log2: weak.map(|w| w.1),
                    published_pw_log2: pw,
                }
            })
            .collect();
        json!({ "table": "table2", "rows": rows })
    } else {
        let (m, n, k) = (m.expect("clap enforces"), n.expect("clap enforces"), k.expect("clap enforces"));
        let params = LgParams::validate(q, m, n, k)?;
        serde_json::to_value(estimator::estimate(&params))?
    };
    let mut value = value;
    let pv = if table1 || table2 { json!(null) } else { value["params"].clone() };
    let manifest = RunManifest::new("estimate", pv, None).outputs(out.map(Path::to_path_buf).as_ref());
    value["manifest"] = manifest.value();
    emit(out, &value)?;
    eprintln!("estimate: done in {:.1} ms", start.elapsed().as_secs_f64() * 1e3);
    Ok(0)
}
