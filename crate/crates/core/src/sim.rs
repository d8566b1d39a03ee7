//! A toy storage cluster: bytes are encoded into stripes of an [`LrcCode`],
//! symbols are lost, and each loss is repaired either from its fiber or from
//! an information set, counting the symbols read.

use std::collections::BTreeSet;
use std::fmt;
use std::fs;
use std::io::Write;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::curve::Axis;
use crate::gf::Elem;
use crate::lrc::LrcCode;
use crate::rng::SeededRng;

#[derive(Debug, Error)]
pub enum SimError {
    #[error("stripe {stripe}, coordinate {coordinate} out of range")]
    BadFailure { stripe: usize, coordinate: usize },
    #[error("node map has {got} entries for {expected} coordinates")]
    NodeMap { got: usize, expected: usize },
    #[error("cannot fail {per_event} distinct coordinates of an {n}-symbol stripe")]
    TooManyPerEvent { per_event: usize, n: usize },
    #[error("no stripes stored")]
    Empty,
    #[error("repaired symbol differs from the original at stripe {stripe}, coordinate {coordinate}")]
    Mismatch { stripe: usize, coordinate: usize },
    #[error("corrupt cluster state: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// Fixed-width base-`q` digits per byte, least significant first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolCodec {
    q: u32,
    width: usize,
}

impl SymbolCodec {
    pub fn new(q: u32) -> Self {
        assert!(q >= 2);
        let mut width = 1;
        while (q as u64).pow(width as u32) < 256 {
            width += 1;
        }
        Self { q, width }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn encode(&self, bytes: &[u8]) -> Vec<Elem> {
        let mut out = Vec::with_capacity(bytes.len() * self.width);
        for &b in bytes {
            let mut v = b as u32;
            for _ in 0..self.width {
                out.push(Elem(v % self.q));
                v /= self.q;
            }
        }
        out
    }

    /// Inverse of [`encode`](Self::encode); trailing padding past `len`
    /// bytes is ignored.
    pub fn decode(&self, symbols: &[Elem], len: usize) -> Vec<u8> {
        symbols
            .chunks(self.width)
            .take(len)
            .map(|digits| digits.iter().rev().fold(0u32, |acc, d| acc * self.q + d.0) as u8)
            .collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum RepairMethod {
    Local,
    Global,
    Unrecoverable,
}

impl fmt::Display for RepairMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RepairMethod::Local => "local",
            RepairMethod::Global => "global",
            RepairMethod::Unrecoverable => "unrecoverable",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairRecord {
    pub stripe: usize,
    pub coordinate: usize,
    pub node: usize,
    pub method: RepairMethod,
    pub axis: Option<Axis>,
    pub symbols_read: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepairLog {
    pub records: Vec<RepairRecord>,
    /// Stripes left with unrecoverable erasures.
    pub flagged: BTreeSet<usize>,
}

impl RepairLog {
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "stripe,coordinate,node,method,axis,symbols_read")?;
        for r in &self.records {
            let axis = r.axis.map(|a| a.to_string()).unwrap_or_default();
            writeln!(
                out,
                "{},{},{},{},{},{}",
                r.stripe, r.coordinate, r.node, r.method, axis, r.symbols_read
            )?;
        }
        Ok(())
    }

    pub fn csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("write to Vec");
        String::from_utf8(buf).expect("ascii")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RepairSummary {
    /// Lost symbols, one per log record.
    pub losses: usize,
    pub local: usize,
    pub global: usize,
    pub unrecoverable: usize,
    pub local_fraction: f64,
    /// Mean over repaired symbols.
    pub mean_symbols_read: f64,
    pub total_symbols_read: usize,
}

pub fn report(log: &RepairLog) -> RepairSummary {
    let count = |m| log.records.iter().filter(|r| r.method == m).count();
    let (local, global) = (count(RepairMethod::Local), count(RepairMethod::Global));
    let total: usize = log.records.iter().map(|r| r.symbols_read).sum();
    let losses = log.records.len();
    let repaired = local + global;
    RepairSummary {
        losses,
        local,
        global,
        unrecoverable: count(RepairMethod::Unrecoverable),
        local_fraction: if losses == 0 { 0.0 } else { local as f64 / losses as f64 },
        mean_symbols_read: if repaired == 0 { 0.0 } else { total as f64 / repaired as f64 },
        total_symbols_read: total,
    }
}

impl fmt::Display for RepairSummary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "losses={} local={} global={} unrecoverable={} local_fraction={:.4} mean_symbols_read={:.4} total_symbols_read={}",
            self.losses,
            self.local,
            self.global,
            self.unrecoverable,
            self.local_fraction,
            self.mean_symbols_read,
            self.total_symbols_read
        )
    }
}

/// Which symbols are lost. Each event is a set of simultaneous losses in one
/// stripe, repaired before the next event.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FailureSchedule {
    /// `(stripe, coordinate)` pairs; pairs sharing a stripe fail together.
    Explicit(Vec<(usize, usize)>),
    /// `events` events, each losing `per_event` distinct coordinates of a
    /// uniformly chosen stripe.
    Random {
        events: usize,
        per_event: usize,
        seed: u64,
    },
}

impl FailureSchedule {
    fn events(&self, stripes: usize, n: usize) -> Result<Vec<(usize, Vec<usize>)>, SimError> {
        match self {
            FailureSchedule::Explicit(pairs) => {
                let mut groups: Vec<(usize, Vec<usize>)> = Vec::new();
                for &(s, c) in pairs {
                    if s >= stripes || c >= n {
                        return Err(SimError::BadFailure {
                            stripe: s,
                            coordinate: c,
                        });
                    }
                    match groups.iter_mut().find(|(gs, _)| *gs == s) {
                        Some((_, cs)) if !cs.contains(&c) => cs.push(c),
                        Some(_) => {}
                        None => groups.push((s, vec![c])),
                    }
                }
                Ok(groups)
            }
            &FailureSchedule::Random {
                events,
                per_event,
                seed,
            } => {
                if per_event > n {
                    return Err(SimError::TooManyPerEvent { per_event, n });
                }
                let mut rng = SeededRng::new(seed);
                Ok((0..events)
                    .map(|_| {
                        let s = rng.below(stripes as u64) as usize;
                        let mut cs = Vec::with_capacity(per_event);
                        while cs.len() < per_event {
                            let c = rng.below(n as u64) as usize;
                            if !cs.contains(&c) {
                                cs.push(c);
                            }
                        }
                        (s, cs)
                    })
                    .collect())
            }
        }
    }
}

#[derive(Clone, Debug)]
pub struct Cluster {
    lrc: LrcCode,
    node_map: Vec<usize>,
    stripes: Vec<Vec<Elem>>,
    payload_len: usize,
}

#[derive(Serialize, Deserialize)]
struct Meta {
    payload_len: usize,
    stripes: usize,
    node_map: Vec<usize>,
}

impl Cluster {
    /// One coordinate per node.
    pub fn new(lrc: LrcCode) -> Self {
        let node_map = (0..lrc.n()).collect();
        Self {
            lrc,
            node_map,
            stripes: Vec::new(),
            payload_len: 0,
        }
    }

    pub fn with_node_map(mut self, node_map: Vec<usize>) -> Result<Self, SimError> {
        if node_map.len() != self.lrc.n() {
            return Err(SimError::NodeMap {
                got: node_map.len(),
                expected: self.lrc.n(),
            });
        }
        self.node_map = node_map;
        Ok(self)
    }

    pub fn lrc(&self) -> &LrcCode {
        &self.lrc
    }

    pub fn stripes(&self) -> &[Vec<Elem>] {
        &self.stripes
    }

    pub fn codec(&self) -> SymbolCodec {
        SymbolCodec::new(self.lrc.field().order())
    }

    /// Replaces the stored data with `payload`; returns the stripe count.
    pub fn ingest(&mut self, payload: &[u8]) -> usize {
        let k = self.lrc.k();
        let mut symbols = self.codec().encode(payload);
        symbols.resize(symbols.len().div_ceil(k) * k, Elem::ZERO);
        self.stripes = symbols
            .chunks(k)
            .map(|m| self.lrc.code().encode(m).expect("k symbols"))
            .collect();
        self.payload_len = payload.len();
        self.stripes.len()
    }

    pub fn read_back(&self) -> Vec<u8> {
        let symbols: Vec<Elem> = self
            .stripes
            .iter()
            .flat_map(|s| self.lrc.code().message_of(s))
            .collect();
        self.codec().decode(&symbols, self.payload_len)
    }

    /// Applies `schedule`, repairing every event before the next. A loss is
    /// repaired locally when some partition's fiber holds no other loss of
    /// the event, otherwise from an information set. Events losing more than
    /// `n - k` symbols are logged unrecoverable as a whole. Repaired symbols
    /// are checked against the stored originals.
    pub fn fail_and_repair(&mut self, schedule: &FailureSchedule) -> Result<RepairLog, SimError> {
        if self.stripes.is_empty() {
            return Err(SimError::Empty);
        }
        let n = self.lrc.n();
        let mut log = RepairLog::default();
        for (stripe, lost) in schedule.events(self.stripes.len(), n)? {
            let original = &self.stripes[stripe];
            let mut word: Vec<Option<Elem>> = original.iter().copied().map(Some).collect();
            for &c in &lost {
                word[c] = None;
            }
            let known: Vec<(usize, Elem)> = word
                .iter()
                .enumerate()
                .filter_map(|(i, v)| v.map(|v| (i, v)))
                .collect();
            let hopeless = lost.len() > n - self.lrc.k();
            let global = self.lrc.code().decode_from(&known);
            for &c in &lost {
                let local = if hopeless {
                    Err(crate::lrc::LrcError::NoLocalRepair(c))
                } else {
                    self.lrc.recover_any(&word, c)
                };
                let (method, axis, value, read) = match local {
                    Ok((axis, v)) => {
                        let r = self.lrc.partition(axis).expect("partition exists").r;
                        (RepairMethod::Local, Some(axis), Some(v), r)
                    }
                    Err(_) => match &global {
                        Some((msg, cols)) if !hopeless => {
                            let cw = self.lrc.code().encode(msg).expect("k symbols");
                            (RepairMethod::Global, None, Some(cw[c]), cols.len())
                        }
                        _ => (RepairMethod::Unrecoverable, None, None, 0),
                    },
                };
                if let Some(v) = value {
                    if v != original[c] {
                        return Err(SimError::Mismatch {
                            stripe,
                            coordinate: c,
                        });
                    }
                } else {
                    log.flagged.insert(stripe);
                }
                log.records.push(RepairRecord {
                    stripe,
                    coordinate: c,
                    node: self.node_map[c],
                    method,
                    axis,
                    symbols_read: read,
                });
            }
        }
        Ok(log)
    }

    /// Writes `meta.json` and one `stripe-NNNNN.txt` per stripe of space
    /// separated element indices. The code descriptor is saved separately.
    pub fn save(&self, dir: &Path) -> Result<(), SimError> {
        fs::create_dir_all(dir)?;
        let meta = Meta {
            payload_len: self.payload_len,
            stripes: self.stripes.len(),
            node_map: self.node_map.clone(),
        };
        fs::write(dir.join("meta.json"), serde_json::to_string_pretty(&meta)? + "\n")?;
        for (i, s) in self.stripes.iter().enumerate() {
            let line: Vec<String> = s.iter().map(|e| e.0.to_string()).collect();
            fs::write(dir.join(format!("stripe-{i:05}.txt")), line.join(" ") + "\n")?;
        }
        Ok(())
    }

    pub fn load(lrc: LrcCode, dir: &Path) -> Result<Self, SimError> {
        let meta: Meta = serde_json::from_str(&fs::read_to_string(dir.join("meta.json"))?)?;
        let mut cluster = Cluster::new(lrc).with_node_map(meta.node_map)?;
        let q = cluster.lrc.field().order();
        for i in 0..meta.stripes {
            let text = fs::read_to_string(dir.join(format!("stripe-{i:05}.txt")))?;
            let s: Vec<Elem> = text
                .split_whitespace()
                .map(|t| match t.parse::<u32>() {
                    Ok(v) if v < q => Ok(Elem(v)),
                    _ => Err(SimError::Corrupt(format!("stripe {i}: bad symbol {t:?}"))),
                })
                .collect::<Result<_, _>>()?;
            if !cluster.lrc.code().is_codeword(&s) {
                return Err(SimError::Corrupt(format!("stripe {i} is not a codeword")));
            }
            cluster.stripes.push(s);
        }
        cluster.payload_len = meta.payload_len;
        Ok(cluster)
    }
}
