//! Command-line front end. Every subcommand returns its stdout text so the
//! binary stays a thin wrapper and tests can drive commands directly.

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::bounds::{self, GonalityInput, Measured, OracleFacts};
use crate::curve::{Axis, CurveKind};
use crate::descriptor::{self, CodeDescriptor, DescriptorError, OracleCache};
use crate::gf::Elem;
use crate::lrc::{Construction, LrcCode, LrcError};
use crate::oracle::{self, OracleConfig, OracleError};
use crate::rng::SeededRng;
use crate::sim::{self, Cluster, FailureSchedule, SimError};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad input or a violated precondition (exit code 1).
    #[error("{0}")]
    Precondition(String),
    /// A feasibility cap refused the computation (exit code 2).
    #[error("{0}")]
    Cap(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Precondition(_) => 1,
            CliError::Cap(_) => 2,
        }
    }
}

impl From<OracleError> for CliError {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::CapExceeded { .. } => CliError::Cap(format!("{e}; try --sample N for an upper bound")),
            other => CliError::Precondition(other.to_string()),
        }
    }
}

macro_rules! precondition_from {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Precondition(e.to_string())
            }
        }
    )*};
}
precondition_from!(DescriptorError, LrcError, SimError, std::io::Error, crate::bounds::BoundsError);

#[derive(Parser, Debug)]
#[command(name = "aglrc", version, about = "Locally recoverable codes from Hermitian and Norm-Trace curves")]
pub struct Cli {
    /// Worker threads for the oracle searches.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum CurveArg {
    Hermitian,
    Normtrace,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum ConstructionArg {
    X,
    Y,
    Lrc2,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Build a code and write its descriptor and generator matrix.
    Build {
        #[arg(long, value_enum)]
        curve: CurveArg,
        #[arg(long)]
        q: u64,
        /// Extension degree of the Norm-Trace curve.
        #[arg(long)]
        u: Option<u32>,
        #[arg(long, value_enum)]
        construction: ConstructionArg,
        #[arg(long)]
        t: Option<u64>,
        #[arg(long, default_value = "code.json")]
        out: PathBuf,
    },
    /// Parameters, dimension formulas and fiber table.
    Info { code: PathBuf },
    /// Encode a message of element indices.
    Encode {
        code: PathBuf,
        #[arg(long)]
        message: String,
    },
    /// Recover one erased symbol from its fiber.
    Recover {
        code: PathBuf,
        /// Comma-separated element indices; the erased slot may be `?`.
        #[arg(long)]
        word: String,
        #[arg(long)]
        erase: usize,
        #[arg(long)]
        partition: Option<Axis>,
    },
    /// Bound audit as CSV.
    Bounds {
        code: PathBuf,
        /// Extra gonalities, e.g. "2:6,3:7".
        #[arg(long)]
        gonality: Option<String>,
        #[arg(long)]
        with_oracle: bool,
        #[arg(long)]
        json: bool,
    },
    /// Exact distance, weight hierarchy or locality.
    Oracle {
        code: PathBuf,
        /// d | ghw | ghw:V | locality
        #[arg(long)]
        what: String,
        /// Estimate d from N random codewords (upper bound only).
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        no_cache: bool,
    },
    /// Encode random data, fail symbols, repair, and log the reads.
    Simulate {
        code: PathBuf,
        /// Stripes of random payload (at most this many are filled).
        #[arg(long, default_value_t = 10)]
        stripes: usize,
        /// Failure events.
        #[arg(long, default_value_t = 10)]
        failures: usize,
        /// Simultaneous losses per event.
        #[arg(long, default_value_t = 1)]
        per_event: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Use this file as the payload instead of random bytes.
        #[arg(long)]
        payload: Option<PathBuf>,
        /// Persist the cluster to this directory.
        #[arg(long)]
        state: Option<PathBuf>,
    },
}

fn construction(curve: CurveArg, c: ConstructionArg, t: Option<u64>) -> Result<Construction, CliError> {
    let need_t = || t.ok_or_else(|| CliError::Precondition("--t is required for this construction".into()));
    Ok(match (curve, c) {
        (CurveArg::Hermitian, ConstructionArg::X) => Construction::HermitianX { t: need_t()? },
        (CurveArg::Hermitian, ConstructionArg::Lrc2) => Construction::Lrc2,
        (CurveArg::Normtrace, ConstructionArg::X) => Construction::NormTraceX { t: need_t()? },
        (CurveArg::Normtrace, ConstructionArg::Y) => Construction::NormTraceY { t: need_t()? },
        (CurveArg::Hermitian, ConstructionArg::Y) => {
            return Err(CliError::Precondition(
                "the y construction needs --curve normtrace (use --u 2 for the Hermitian curve)".into(),
            ))
        }
        (CurveArg::Normtrace, ConstructionArg::Lrc2) => {
            return Err(CliError::Precondition("lrc2 is defined on the Hermitian curve only".into()))
        }
    })
}

fn parse_elems(text: &str, q: u32, allow_hole: bool) -> Result<Vec<Option<Elem>>, CliError> {
    text.split(',')
        .map(|s| s.trim())
        .map(|s| match s {
            "?" | "_" if allow_hole => Ok(None),
            _ => match s.parse::<u32>() {
                Ok(v) if v < q => Ok(Some(Elem(v))),
                _ => Err(CliError::Precondition(format!("bad symbol {s:?} for GF({q})"))),
            },
        })
        .collect()
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

pub fn run(cli: Cli) -> Result<String, CliError> {
    let cfg = OracleConfig {
        jobs: cli.jobs,
        ..Default::default()
    };
    match cli.command {
        Command::Build {
            curve,
            q,
            u,
            construction: c,
            t,
            out,
        } => {
            let kind = match curve {
                CurveArg::Hermitian => CurveKind::Hermitian { q },
                CurveArg::Normtrace => CurveKind::NormTrace {
                    q,
                    u: u.ok_or_else(|| CliError::Precondition("--u is required for normtrace".into()))?,
                },
            };
            let lrc = LrcCode::build(kind, construction(curve, c, t)?)?;
            let desc = descriptor::save(&lrc, &out)?;
            Ok(format!(
                "wrote {} (n={}, k={})\n",
                out.display(),
                desc.n,
                desc.k
            ))
        }
        Command::Info { code } => {
            let (lrc, desc) = descriptor::load(&code)?;
            Ok(info(&lrc, &desc))
        }
        Command::Encode { code, message } => {
            let (lrc, _) = descriptor::load(&code)?;
            let msg: Vec<Elem> = parse_elems(&message, lrc.field().order(), false)?
                .into_iter()
                .map(|e| e.expect("no holes"))
                .collect();
            let cw = lrc
                .code()
                .encode(&msg)
                .map_err(|e| CliError::Precondition(e.to_string()))?;
            Ok(join(cw.iter().map(|e| e.0), ",") + "\n")
        }
        Command::Recover {
            code,
            word,
            erase,
            partition,
        } => {
            let (lrc, _) = descriptor::load(&code)?;
            let mut w = parse_elems(&word, lrc.field().order(), true)?;
            if w.len() != lrc.n() {
                return Err(CliError::Precondition(format!(
                    "word has {} symbols, code length is {}",
                    w.len(),
                    lrc.n()
                )));
            }
            if erase >= lrc.n() {
                return Err(CliError::Precondition(format!("--erase {erase} out of range")));
            }
            w[erase] = None;
            let (axis, v) = match partition {
                Some(a) => (a, lrc.recover_erasure(&w, erase, a)?),
                None => lrc.recover_any(&w, erase)?,
            };
            let part = lrc.partition(axis)?;
            Ok(format!(
                "coordinate={erase} value={} partition={axis} read={}\n",
                v.0,
                join(part.recovering_set(erase), " ")
            ))
        }
        Command::Bounds {
            code,
            gonality,
            with_oracle,
            json,
        } => {
            let (lrc, desc) = descriptor::load(&code)?;
            let mut gon = GonalityInput::for_curve(lrc.curve());
            if let Some(text) = gonality {
                gon = gon.with(GonalityInput::parse_extra(&text)?)?;
            }
            let facts = if with_oracle {
                oracle_facts(&lrc, &code, &desc, &gon, &cfg)?
            } else {
                OracleFacts::default()
            };
            let report = bounds::audit(&lrc, &facts, &gon);
            if json {
                Ok(serde_json::to_string_pretty(&report).expect("report serializes") + "\n")
            } else {
                Ok(report.csv())
            }
        }
        Command::Oracle {
            code,
            what,
            sample,
            seed,
            no_cache,
        } => {
            let (lrc, desc) = descriptor::load(&code)?;
            let mut cache = if no_cache {
                OracleCache {
                    key: desc.key(),
                    ..Default::default()
                }
            } else {
                OracleCache::load(&code, &desc)
            };
            let out = oracle_command(&lrc, &what, sample, seed, &mut cache, &cfg)?;
            if !no_cache {
                cache.save(&code)?;
            }
            Ok(out)
        }
        Command::Simulate {
            code,
            stripes,
            failures,
            per_event,
            seed,
            payload,
            state,
        } => {
            let (lrc, _) = descriptor::load(&code)?;
            simulate(lrc, stripes, failures, per_event, seed, payload.as_deref(), state.as_deref())
        }
    }
}

fn info(lrc: &LrcCode, desc: &CodeDescriptor) -> String {
    let mut s = String::new();
    let f = lrc.field();
    let p = lrc.params();
    let _ = writeln!(s, "code: {}", bounds::describe(lrc));
    let _ = writeln!(s, "field: GF({}) modulus {:?}", f.order(), f.modulus());
    let _ = writeln!(s, "n: {}", lrc.n());
    let _ = writeln!(s, "k: {} (rank of {} spanning functions)", lrc.k(), lrc.spanning_count());
    let _ = writeln!(s, "params: t={} l={} r={} h={} s={} m={}", p.t, p.ell, p.r, p.h, p.s, p.m);
    let q = lrc.curve().q();
    match lrc.construction() {
        Construction::HermitianX { t } => {
            let _ = writeln!(s, "dimension formulas: (t+1)(q-1)={} (t-1)(q-1)={}", (t + 1) * (q - 1), (t as i64 - 1) * (q as i64 - 1));
        }
        Construction::NormTraceX { t } => {
            let _ = writeln!(s, "dimension formula: (t+1)(q^(u-1)-1)={}", (t + 1) * (q.pow(lrc.curve().u() - 1) - 1));
        }
        Construction::NormTraceY { t } => {
            let _ = writeln!(s, "dimension formula: (t+1)(q+...+q^(u-1))={}", (t + 1) * p.r);
        }
        Construction::Lrc2 => {
            let _ = writeln!(s, "dimension formula: (q-1)q={}", (q - 1) * q);
        }
    }
    for (part, pi) in lrc.partitions().iter().zip(&desc.partitions) {
        let _ = writeln!(
            s,
            "partition {}: {} fibers of size {}, r={}, deg_fiber={}, {}",
            pi.axis,
            pi.fibers,
            pi.fiber_size,
            part.r,
            pi.deg_fiber,
            if pi.interpolation_available {
                "interpolation available"
            } else {
                "interpolation unavailable"
            }
        );
    }
    let _ = writeln!(s, "axis,fiber,base,coordinates");
    for part in lrc.partitions() {
        for (i, b) in part.blocks.iter().enumerate() {
            let pt = lrc.curve().points()[lrc.coordinates()[b[0]]];
            let _ = writeln!(s, "{},{},{},{}", part.axis, i, part.axis.base(&pt).0, join(b.iter(), " "));
        }
    }
    s
}

fn distance_cached(
    lrc: &LrcCode,
    cache: &mut OracleCache,
    cfg: &OracleConfig,
) -> Result<oracle::Distance, OracleError> {
    if let Some(d) = &cache.distance {
        return Ok(d.clone());
    }
    let d = oracle::min_distance(lrc.code(), cfg)?;
    cache.distance = Some(d.clone());
    Ok(d)
}

fn ghw_cached(lrc: &LrcCode, v: usize, cache: &mut OracleCache, cfg: &OracleConfig) -> Result<oracle::Ghw, OracleError> {
    if let Some(g) = cache.ghw.get(&v) {
        return Ok(g.clone());
    }
    let g = oracle::ghw(lrc.code(), v, cfg)?;
    cache.ghw.insert(v, g.clone());
    Ok(g)
}

fn locality_cached(
    lrc: &LrcCode,
    cache: &mut OracleCache,
    cfg: &OracleConfig,
) -> Result<Vec<oracle::Locality>, OracleError> {
    if let Some(l) = &cache.locality {
        return Ok(l.clone());
    }
    let l = oracle::locality_all(lrc.code(), cfg)?;
    cache.locality = Some(l.clone());
    Ok(l)
}

fn oracle_facts(
    lrc: &LrcCode,
    path: &Path,
    desc: &CodeDescriptor,
    gon: &GonalityInput,
    cfg: &OracleConfig,
) -> Result<OracleFacts, CliError> {
    let mut cache = OracleCache::load(path, desc);
    let d = match distance_cached(lrc, &mut cache, cfg) {
        Ok(d) => Some(Measured::exact(d.value as i64)),
        Err(OracleError::CapExceeded { .. }) => {
            let d = oracle::min_distance_sampled(lrc.code(), 10_000, 1)?;
            Some(Measured::upper(d.value as i64))
        }
        Err(e) => return Err(e.into()),
    };
    let mut facts = OracleFacts {
        d,
        ..Default::default()
    };
    // d_2 always, further d_v only where a gonality makes them useful
    let wanted = (2..=lrc.k()).filter(|&v| v == 2 || gon.get(v - 1).is_some());
    for v in wanted {
        match ghw_cached(lrc, v, &mut cache, cfg) {
            Ok(g) => {
                facts.ghw.insert(v, g.value as i64);
            }
            Err(OracleError::CapExceeded { .. }) => {}
            Err(e) => return Err(e.into()),
        }
    }
    if let Ok(loc) = locality_cached(lrc, &mut cache, cfg) {
        facts.locality = Some(loc.iter().map(|l| l.r).collect());
    }
    cache.save(path)?;
    Ok(facts)
}

fn oracle_command(
    lrc: &LrcCode,
    what: &str,
    sample: Option<u64>,
    seed: u64,
    cache: &mut OracleCache,
    cfg: &OracleConfig,
) -> Result<String, CliError> {
    let mut s = String::new();
    match what {
        "d" => {
            let d = match sample {
                Some(n) => oracle::min_distance_sampled(lrc.code(), n, seed)?,
                None => distance_cached(lrc, cache, cfg)?,
            };
            let label = if d.exact { "d=" } else { "d<=" };
            let _ = writeln!(
                s,
                "{label}{} method={:?} witness={}",
                d.value,
                d.method,
                join(&d.witness, " ")
            );
            if !d.exact {
                let _ = writeln!(s, "UPPER BOUND from {} sampled codewords", sample.unwrap_or(0));
            }
        }
        "ghw" => {
            for v in 1..=lrc.k() {
                let g = ghw_cached(lrc, v, cache, cfg)?;
                let _ = writeln!(s, "d_{v}={} method={:?}", g.value, g.method);
            }
        }
        "locality" => {
            let _ = writeln!(s, "coordinate,r,method,witness");
            for l in locality_cached(lrc, cache, cfg)? {
                let r = l.r.map(|r| r.to_string()).unwrap_or_else(|| "none".into());
                let _ = writeln!(s, "{},{},{:?},{}", l.coordinate, r, l.method, join(&l.witness, " "));
            }
            for part in lrc.partitions().iter().filter(|p| !p.interpolation_available) {
                let _ = writeln!(
                    s,
                    "# {}-partition: fibers carry no redundancy; nominal r={} is not a recovering-set size",
                    part.axis, part.r
                );
            }
        }
        other => {
            let v = other
                .strip_prefix("ghw:")
                .and_then(|v| v.parse::<usize>().ok())
                .ok_or_else(|| CliError::Precondition(format!("--what {other:?}: expected d, ghw, ghw:V or locality")))?;
            let g = ghw_cached(lrc, v, cache, cfg)?;
            let _ = writeln!(s, "d_{v}={} method={:?}", g.value, g.method);
        }
    }
    Ok(s)
}

/// Random payload filling at most `stripes` stripes.
pub fn random_payload(lrc: &LrcCode, stripes: usize, seed: u64) -> Vec<u8> {
    let width = sim::SymbolCodec::new(lrc.field().order()).width();
    let len = stripes * lrc.k() / width;
    let mut rng = SeededRng::new(seed);
    (0..len).map(|_| (rng.next_u64() >> 56) as u8).collect()
}

fn simulate(
    lrc: LrcCode,
    stripes: usize,
    failures: usize,
    per_event: usize,
    seed: u64,
    payload: Option<&Path>,
    state: Option<&Path>,
) -> Result<String, CliError> {
    let data = match payload {
        Some(p) => std::fs::read(p)?,
        None => random_payload(&lrc, stripes, seed),
    };
    let mut cluster = Cluster::new(lrc);
    let count = cluster.ingest(&data);
    if count == 0 {
        return Err(CliError::Precondition("payload fills no stripe".into()));
    }
    let log = cluster.fail_and_repair(&FailureSchedule::Random {
        events: failures,
        per_event,
        seed,
    })?;
    if let Some(dir) = state {
        cluster.save(dir)?;
    }
    let ok = cluster.read_back() == data;
    let mut s = log.csv();
    let _ = writeln!(s, "# stripes={count} {} readback={}", sim::report(&log), if ok { "ok" } else { "MISMATCH" });
    Ok(s)
}
