//! Exhaustive ground truth for small codes: minimum distance, generalized
//! Hamming weights and per-coordinate locality.
//!
//! Each quantity has two independent routes so they can check each other:
//! codeword enumeration against column-dependency search, subspace
//! enumeration against matroid flats, dual-codeword enumeration against
//! span search. Every search is capped; exceeding a cap is an error, never a
//! silent approximation. Results do not depend on the number of workers.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::code::LinearCode;
use crate::curve::Axis;
use crate::gf::{Elem, FiniteField};
use crate::lrc::LrcCode;
use crate::matrix::{EchelonBasis, Matrix};
use crate::rng::SeededRng;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("{what}: {count} exceeds the cap of {cap}")]
    CapExceeded {
        what: &'static str,
        count: u128,
        cap: u128,
    },
    #[error("code has dimension 0")]
    EmptyCode,
    #[error("v = {v} outside 1..={k}")]
    BadV { v: usize, k: usize },
    #[error("coordinate {0} out of range")]
    BadCoordinate(usize),
    #[error("length {0} too large for support bitmasks (max 128)")]
    TooLong(usize),
    #[error("code has no {0}-partition")]
    NoPartition(Axis),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleConfig {
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Largest `q^k` for codeword enumeration.
    pub max_codewords: u64,
    /// Largest number of `v`-dimensional subspaces to enumerate.
    pub max_subspaces: u128,
    /// Largest `q^(n-k)` for dual-codeword enumeration.
    pub max_dual_words: u64,
    /// Largest number of column subsets a search may visit.
    pub max_subsets: u128,
}

impl Default for OracleConfig {
    fn default() -> Self {
        Self {
            jobs: None,
            max_codewords: 1 << 26,
            max_subspaces: 100_000_000,
            max_dual_words: 1 << 26,
            max_subsets: 100_000_000,
        }
    }
}

impl OracleConfig {
    pub fn with_jobs(mut self, jobs: usize) -> Self {
        self.jobs = Some(jobs);
        self
    }

    /// Runs `op` on a pool of `jobs` threads, or the global pool.
    pub fn install<R: Send>(&self, op: impl FnOnce() -> R + Send) -> R {
        match self.jobs {
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .expect("thread pool")
                .install(op),
            None => op(),
        }
    }

    fn check(&self, what: &'static str, count: Option<u128>, cap: u128) -> Result<u128, OracleError> {
        match count {
            Some(c) if c <= cap => Ok(c),
            c => Err(OracleError::CapExceeded {
                what,
                count: c.unwrap_or(u128::MAX),
                cap,
            }),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Method {
    Exhaustive,
    DualCircuits,
    Subspaces,
    Flats,
    DualEnumeration,
    SpanSearch,
    /// Random codewords; the value is only an upper bound.
    SampledUpperBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Distance {
    pub value: usize,
    pub exact: bool,
    pub method: Method,
    /// Support of a codeword attaining the value.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Ghw {
    pub v: usize,
    pub value: usize,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Locality {
    pub coordinate: usize,
    /// Smallest recovering-set size; `None` if the symbol is not a function
    /// of the others.
    pub r: Option<usize>,
    pub witness: Vec<usize>,
    pub method: Method,
}

fn checked_pow(q: u64, e: usize) -> Option<u128> {
    (q as u128).checked_pow(e as u32)
}

fn binomial(n: usize, k: usize) -> Option<u128> {
    if k > n {
        return Some(0);
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.checked_mul((n - i) as u128)? / (i as u128 + 1);
    }
    Some(acc)
}

/// Number of `v`-dimensional subspaces of `F_q^k`.
pub fn gaussian_binomial(k: usize, v: usize, q: u64) -> Option<u128> {
    if v > k {
        return Some(0);
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..v {
        num = num.checked_mul(q.checked_pow((k - i) as u32)? - 1)?;
        den = den.checked_mul(q.checked_pow((i + 1) as u32)? - 1)?;
    }
    Some(num / den)
}

fn support_of(word: &[Elem]) -> Vec<usize> {
    word.iter()
        .enumerate()
        .filter(|(_, x)| !x.is_zero())
        .map(|(i, _)| i)
        .collect()
}

// ---------------------------------------------------------------------------
// codeword enumeration

/// Walks codewords of `basis` in message-index order. Message index `m` has
/// base-`q` digit `d` equal to the element index of the coefficient of row
/// `d`. Consecutive indices differ in a few digits, so each step adds a
/// precomputed row difference per changed digit.
struct Enumerator<'a> {
    f: &'a FiniteField,
    q: u64,
    rows: &'a Matrix,
    /// `delta[d][a] = (elem(a+1 mod q) - elem(a)) * row_d`
    delta: Vec<Vec<Vec<Elem>>>,
}

impl<'a> Enumerator<'a> {
    fn new(f: &'a FiniteField, rows: &'a Matrix) -> Self {
        let q = f.order() as u64;
        let delta = (0..rows.rows())
            .map(|d| {
                (0..q as u32)
                    .map(|a| {
                        let c = f.sub(Elem((a + 1) % q as u32), Elem(a));
                        rows.row(d).iter().map(|&x| f.mul(c, x)).collect()
                    })
                    .collect()
            })
            .collect();
        Self { f, q, rows, delta }
    }

    fn total(&self) -> Option<u128> {
        checked_pow(self.q, self.rows.rows())
    }

    /// Visits `start..end`; stops early when `visit` returns false.
    fn run(&self, start: u64, end: u64, mut visit: impl FnMut(u64, &[Elem]) -> bool) {
        let k = self.rows.rows();
        let mut digits = vec![0u32; k];
        let mut rest = start;
        for d in digits.iter_mut() {
            *d = (rest % self.q) as u32;
            rest /= self.q;
        }
        let mut cw = vec![Elem::ZERO; self.rows.cols()];
        for (d, &a) in digits.iter().enumerate() {
            crate::matrix::axpy(self.f, &mut cw, Elem(a), self.rows.row(d));
        }
        for idx in start..end {
            if !visit(idx, &cw) {
                return;
            }
            #[allow(clippy::needless_range_loop)]
            for d in 0..k {
                let a = digits[d];
                for (x, &y) in cw.iter_mut().zip(&self.delta[d][a as usize]) {
                    *x = self.f.add(*x, y);
                }
                digits[d] = (a + 1) % self.q as u32;
                if digits[d] != 0 {
                    break;
                }
            }
        }
    }
}

fn chunks(start: u64, end: u64) -> Vec<(u64, u64)> {
    let len = end.saturating_sub(start);
    let parts = (rayon::current_num_threads() as u64 * 8).max(1);
    let size = (len / parts).max(4096);
    (0..)
        .map(|i| start + i * size)
        .take_while(|&s| s < end)
        .map(|s| (s, (s + size).min(end)))
        .collect()
}

/// Minimum weight over all nonzero codewords.
pub fn min_distance_exhaustive(code: &LinearCode, cfg: &OracleConfig) -> Result<Distance, OracleError> {
    if code.k() == 0 {
        return Err(OracleError::EmptyCode);
    }
    let en = Enumerator::new(code.field(), code.basis());
    let total = cfg.check("codewords", en.total(), cfg.max_codewords as u128)? as u64;
    let best = cfg.install(|| {
        chunks(1, total)
            .into_par_iter()
            .map(|(s, e)| {
                let mut best = (usize::MAX, 0u64, Vec::new());
                en.run(s, e, |idx, cw| {
                    let w = crate::code::weight(cw);
                    if w < best.0 {
                        best = (w, idx, support_of(cw));
                    }
                    w > 1
                });
                best
            })
            .min_by_key(|b| (b.0, b.1))
            .expect("at least one chunk")
    });
    Ok(Distance {
        value: best.0,
        exact: true,
        method: Method::Exhaustive,
        witness: best.2,
    })
}

// ---------------------------------------------------------------------------
// column subset searches

fn columns(m: &Matrix) -> Vec<Vec<Elem>> {
    (0..m.cols()).map(|c| m.column(c)).collect()
}

/// Lexicographically first `w`-subset of `pool` whose columns are linearly
/// dependent, assuming none smaller exists.
fn first_dependent(f: &FiniteField, cols: &[Vec<Elem>], pool: &[usize], w: usize) -> Option<Vec<usize>> {
    fn dfs(
        f: &FiniteField,
        cols: &[Vec<Elem>],
        pool: &[usize],
        w: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        basis: &EchelonBasis,
    ) -> bool {
        for pos in from..pool.len() {
            if pool.len() - pos < w - chosen.len() {
                return false;
            }
            let c = pool[pos];
            if chosen.len() + 1 == w {
                if basis.contains(f, &cols[c]) {
                    chosen.push(c);
                    return true;
                }
                continue;
            }
            let mut next = basis.clone();
            if next.insert(f, &cols[c]) {
                chosen.push(c);
                if dfs(f, cols, pool, w, pos + 1, chosen, &next) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let len = cols.first().map_or(0, Vec::len);
    (0..pool.len()).into_par_iter().find_map_first(|first| {
        let mut basis = EchelonBasis::new(len);
        let c = pool[first];
        let mut chosen = vec![c];
        if w == 1 {
            return basis.contains(f, &cols[c]).then_some(chosen);
        }
        basis.insert(f, &cols[c]);
        dfs(f, cols, pool, w, first + 1, &mut chosen, &basis).then_some(chosen)
    })
}

/// Minimum distance as the smallest dependent set of columns of a parity
/// check matrix. Independent of codeword enumeration.
pub fn min_distance_by_circuits(code: &LinearCode, cfg: &OracleConfig) -> Result<Distance, OracleError> {
    if code.k() == 0 {
        return Err(OracleError::EmptyCode);
    }
    let n = code.n();
    let h = code.dual();
    if h.k() == 0 {
        // full space: every unit vector is a codeword
        return Ok(Distance {
            value: 1,
            exact: true,
            method: Method::DualCircuits,
            witness: vec![0],
        });
    }
    let cols = columns(h.basis());
    let pool: Vec<usize> = (0..n).collect();
    cfg.install(|| {
        let mut visited: u128 = 0;
        for w in 1..=h.k() + 1 {
            visited = binomial(n, w).and_then(|c| c.checked_add(visited)).unwrap_or(u128::MAX);
            cfg.check("column subsets", Some(visited), cfg.max_subsets)?;
            if let Some(set) = first_dependent(code.field(), &cols, &pool, w) {
                return Ok(Distance {
                    value: w,
                    exact: true,
                    method: Method::DualCircuits,
                    witness: set,
                });
            }
        }
        unreachable!("any n-k+1 columns of the parity check are dependent")
    })
}

/// Exhaustive enumeration when the message space fits, column-dependency
/// search otherwise. Both are exact.
pub fn min_distance(code: &LinearCode, cfg: &OracleConfig) -> Result<Distance, OracleError> {
    match min_distance_exhaustive(code, cfg) {
        Err(OracleError::CapExceeded { .. }) => min_distance_by_circuits(code, cfg),
        other => other,
    }
}

/// Minimum weight over `samples` random nonzero codewords: an upper bound.
pub fn min_distance_sampled(code: &LinearCode, samples: u64, seed: u64) -> Result<Distance, OracleError> {
    if code.k() == 0 {
        return Err(OracleError::EmptyCode);
    }
    let q = code.field().order() as u64;
    let mut rng = SeededRng::new(seed);
    let mut best = (usize::MAX, Vec::new());
    let mut taken = 0;
    while taken < samples {
        let msg: Vec<Elem> = (0..code.k()).map(|_| Elem(rng.below(q) as u32)).collect();
        if msg.iter().all(|x| x.is_zero()) {
            continue;
        }
        taken += 1;
        let cw = code.encode(&msg).expect("k symbols");
        let w = crate::code::weight(&cw);
        if w < best.0 {
            best = (w, support_of(&cw));
        }
    }
    Ok(Distance {
        value: best.0,
        exact: false,
        method: Method::SampledUpperBound,
        witness: best.1,
    })
}

// ---------------------------------------------------------------------------
// generalized Hamming weights

/// Support bitmask of every codeword, indexed by message index.
pub struct SupportTable {
    masks: Vec<u128>,
    q: u64,
    k: usize,
}

impl SupportTable {
    pub fn new(code: &LinearCode, cfg: &OracleConfig) -> Result<Self, OracleError> {
        if code.n() > 128 {
            return Err(OracleError::TooLong(code.n()));
        }
        let en = Enumerator::new(code.field(), code.basis());
        let total = cfg.check("codewords", en.total(), cfg.max_codewords as u128)? as u64;
        let mut masks = vec![0u128; total as usize];
        let size = (total as usize / (rayon::current_num_threads() * 8)).max(4096);
        cfg.install(|| {
            masks.par_chunks_mut(size).enumerate().for_each(|(i, out)| {
                let start = (i * size) as u64;
                en.run(start, start + out.len() as u64, |idx, cw| {
                    let mut m = 0u128;
                    for (j, x) in cw.iter().enumerate() {
                        if !x.is_zero() {
                            m |= 1 << j;
                        }
                    }
                    out[(idx - start) as usize] = m;
                    true
                });
            })
        });
        Ok(Self {
            masks,
            q: code.field().order() as u64,
            k: code.k(),
        })
    }

    pub fn support(&self, message_index: u64) -> u128 {
        self.masks[message_index as usize]
    }
}

/// Message indices of all rows a reduced echelon row with pivot `p` can
/// take, given the full pivot set.
fn row_choices(q: u64, k: usize, p: usize, pivots: &[usize]) -> Vec<u64> {
    let free: Vec<usize> = (p + 1..k).filter(|j| !pivots.contains(j)).collect();
    let weights: Vec<u64> = free.iter().map(|&j| q.pow(j as u32)).collect();
    let base = q.pow(p as u32);
    let count = q.pow(free.len() as u32);
    (0..count)
        .map(|mut c| {
            let mut idx = base;
            for &w in &weights {
                idx += (c % q) * w;
                c /= q;
            }
            idx
        })
        .collect()
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, k: usize, from: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in from..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(n, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// `d_v` by enumerating every `v`-dimensional subcode through its reduced
/// echelon basis. The support of a subcode is the union of the supports of
/// its basis rows.
pub fn ghw_by_subspaces(code: &LinearCode, v: usize, cfg: &OracleConfig) -> Result<Ghw, OracleError> {
    let table = SupportTable::new(code, cfg)?;
    ghw_with_table(&table, v, cfg)
}

pub fn ghw_with_table(table: &SupportTable, v: usize, cfg: &OracleConfig) -> Result<Ghw, OracleError> {
    let (q, k) = (table.q, table.k);
    if v == 0 || v > k {
        return Err(OracleError::BadV { v, k });
    }
    cfg.check("subspaces", gaussian_binomial(k, v, q), cfg.max_subspaces)?;

    fn descend(table: &SupportTable, lists: &[Vec<u64>], acc: u128, best: &mut u32) {
        let Some((head, rest)) = lists.split_first() else {
            *best = (*best).min(acc.count_ones());
            return;
        };
        for &idx in head {
            let m = acc | table.support(idx);
            if m.count_ones() < *best {
                descend(table, rest, m, best);
            }
        }
    }

    let tasks: Vec<(Vec<Vec<u64>>, u64)> = combinations(k, v)
        .into_iter()
        .flat_map(|piv| {
            let lists: Vec<Vec<u64>> = piv.iter().map(|&p| row_choices(q, k, p, &piv)).collect();
            let heads = lists[0].clone();
            heads.into_iter().map(move |h| (lists[1..].to_vec(), h))
        })
        .collect();
    let value = cfg.install(|| {
        tasks
            .par_iter()
            .map(|(rest, head)| {
                let mut best = u32::MAX;
                descend(table, rest, table.support(*head), &mut best);
                best
            })
            .min()
            .expect("at least one subspace")
    });
    Ok(Ghw {
        v,
        value: value as usize,
        method: Method::Subspaces,
    })
}

/// `d_v = n - max |X|` over column sets `X` of rank `k - v`; the maximum is
/// attained by a flat, the closure of `k - v` independent columns.
pub fn ghw_by_flats(code: &LinearCode, v: usize, cfg: &OracleConfig) -> Result<Ghw, OracleError> {
    let (n, k) = (code.n(), code.k());
    if v == 0 || v > k {
        return Err(OracleError::BadV { v, k });
    }
    let s = k - v;
    cfg.check("column subsets", binomial(n, s), cfg.max_subsets)?;
    let f = code.field();
    let cols = columns(code.basis());

    fn closure(f: &FiniteField, cols: &[Vec<Elem>], b: &EchelonBasis) -> usize {
        cols.iter().filter(|c| b.contains(f, c)).count()
    }
    fn dfs(f: &FiniteField, cols: &[Vec<Elem>], s: usize, depth: usize, from: usize, b: &EchelonBasis) -> usize {
        if depth == s {
            return closure(f, cols, b);
        }
        let mut best = 0;
        for c in from..cols.len() {
            if cols.len() - c < s - depth {
                break;
            }
            let mut next = b.clone();
            if next.insert(f, &cols[c]) {
                best = best.max(dfs(f, cols, s, depth + 1, c + 1, &next));
            }
        }
        best
    }

    let empty = EchelonBasis::new(k);
    let largest = if s == 0 {
        closure(f, &cols, &empty)
    } else {
        cfg.install(|| {
            (0..n)
                .into_par_iter()
                .map(|c| {
                    let mut b = empty.clone();
                    if b.insert(f, &cols[c]) {
                        dfs(f, &cols, s, 1, c + 1, &b)
                    } else {
                        0
                    }
                })
                .max()
                .unwrap_or(0)
        })
    };
    Ok(Ghw {
        v,
        value: n - largest,
        method: Method::Flats,
    })
}

/// Subspace enumeration when within the caps, flats otherwise.
pub fn ghw(code: &LinearCode, v: usize, cfg: &OracleConfig) -> Result<Ghw, OracleError> {
    match ghw_by_subspaces(code, v, cfg) {
        Err(OracleError::CapExceeded { .. }) | Err(OracleError::TooLong(_)) => ghw_by_flats(code, v, cfg),
        other => other,
    }
}

/// `d_1, ..., d_k`, building the support table once.
pub fn weight_hierarchy(code: &LinearCode, cfg: &OracleConfig) -> Result<Vec<Ghw>, OracleError> {
    let table = SupportTable::new(code, cfg).ok();
    (1..=code.k())
        .map(|v| {
            let by_table = table.as_ref().map(|t| ghw_with_table(t, v, cfg));
            match by_table {
                Some(Ok(g)) => Ok(g),
                Some(Err(e @ OracleError::BadV { .. })) => Err(e),
                _ => ghw_by_flats(code, v, cfg),
            }
        })
        .collect()
}

// ---------------------------------------------------------------------------
// locality

/// Locality of every coordinate from the minimum-weight dual codewords
/// through it.
pub fn locality_by_dual_enumeration(code: &LinearCode, cfg: &OracleConfig) -> Result<Vec<Locality>, OracleError> {
    let n = code.n();
    let dual = code.dual();
    let mk = |best: Vec<(usize, u64, Vec<usize>)>| {
        best.into_iter()
            .enumerate()
            .map(|(i, (w, _, set))| Locality {
                coordinate: i,
                r: (w != usize::MAX).then(|| w - 1),
                witness: set,
                method: Method::DualEnumeration,
            })
            .collect()
    };
    let none = || vec![(usize::MAX, u64::MAX, Vec::new()); n];
    if dual.k() == 0 {
        return Ok(mk(none()));
    }
    let en = Enumerator::new(dual.field(), dual.basis());
    let total = cfg.check("dual codewords", en.total(), cfg.max_dual_words as u128)? as u64;
    let merged = cfg.install(|| {
        chunks(1, total)
            .into_par_iter()
            .map(|(s, e)| {
                let mut best = none();
                en.run(s, e, |idx, word| {
                    let supp = support_of(word);
                    let w = supp.len();
                    for &i in &supp {
                        if w < best[i].0 {
                            let set = supp.iter().copied().filter(|&j| j != i).collect();
                            best[i] = (w, idx, set);
                        }
                    }
                    true
                });
                best
            })
            .reduce(none, |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    if (y.0, y.1) < (x.0, x.1) {
                        *x = y;
                    }
                }
                a
            })
    });
    Ok(mk(merged))
}

/// Smallest `I` drawn from `pool` with column `i` in the span of the
/// columns in `I`; lexicographically first among the smallest.
pub fn recovering_set_within(
    code: &LinearCode,
    i: usize,
    pool: &[usize],
    cfg: &OracleConfig,
) -> Result<Option<Vec<usize>>, OracleError> {
    if i >= code.n() {
        return Err(OracleError::BadCoordinate(i));
    }
    let f = code.field();
    let cols = columns(code.basis());
    let target = &cols[i];
    let pool: Vec<usize> = pool.iter().copied().filter(|&c| c != i).collect();
    if target.iter().all(|x| x.is_zero()) {
        return Ok(Some(Vec::new()));
    }
    let mut all = EchelonBasis::new(code.k());
    for &c in &pool {
        all.insert(f, &cols[c]);
    }
    if !all.contains(f, target) {
        return Ok(None);
    }

    #[allow(clippy::too_many_arguments)]
    fn dfs(
        f: &FiniteField,
        cols: &[Vec<Elem>],
        pool: &[usize],
        target: &[Elem],
        w: usize,
        from: usize,
        chosen: &mut Vec<usize>,
        b: &EchelonBasis,
    ) -> bool {
        if chosen.len() == w {
            return b.contains(f, target);
        }
        for pos in from..pool.len() {
            if pool.len() - pos < w - chosen.len() {
                return false;
            }
            let mut next = b.clone();
            if next.insert(f, &cols[pool[pos]]) {
                chosen.push(pool[pos]);
                if dfs(f, cols, pool, target, w, pos + 1, chosen, &next) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }

    for w in 1..=all.dim() {
        cfg.check("column subsets", binomial(pool.len(), w), cfg.max_subsets)?;
        let mut chosen = Vec::with_capacity(w);
        if dfs(f, &cols, &pool, target, w, 0, &mut chosen, &EchelonBasis::new(code.k())) {
            return Ok(Some(chosen));
        }
    }
    unreachable!("target lies in the span of the whole pool")
}

pub fn locality_by_span_search(code: &LinearCode, i: usize, cfg: &OracleConfig) -> Result<Locality, OracleError> {
    let pool: Vec<usize> = (0..code.n()).collect();
    let set = recovering_set_within(code, i, &pool, cfg)?;
    Ok(Locality {
        coordinate: i,
        r: set.as_ref().map(Vec::len),
        witness: set.unwrap_or_default(),
        method: Method::SpanSearch,
    })
}

/// Locality of every coordinate: dual enumeration when the dual is small,
/// span search per coordinate otherwise.
pub fn locality_all(code: &LinearCode, cfg: &OracleConfig) -> Result<Vec<Locality>, OracleError> {
    match locality_by_dual_enumeration(code, cfg) {
        Err(OracleError::CapExceeded { .. }) => cfg.install(|| {
            (0..code.n())
                .into_par_iter()
                .map(|i| locality_by_span_search(code, i, cfg))
                .collect()
        }),
        other => other,
    }
}

pub fn locality_of(code: &LinearCode, i: usize, cfg: &OracleConfig) -> Result<Locality, OracleError> {
    if i >= code.n() {
        return Err(OracleError::BadCoordinate(i));
    }
    let small = checked_pow(code.field().order() as u64, code.n() - code.k())
        .is_some_and(|c| c <= cfg.max_dual_words as u128);
    if small {
        Ok(locality_by_dual_enumeration(code, cfg)?.swap_remove(i))
    } else {
        locality_by_span_search(code, i, cfg)
    }
}

// ---------------------------------------------------------------------------
// recovering sets

/// True iff for every `(i, I)` no two codewords agree on `I` but differ at
/// `i`. Checked by hashing restrictions over the whole code.
pub fn verify_recovering_sets(
    code: &LinearCode,
    sets: &[(usize, Vec<usize>)],
    cfg: &OracleConfig,
) -> Result<bool, OracleError> {
    let en = Enumerator::new(code.field(), code.basis());
    let total = cfg.check("codewords", en.total(), cfg.max_codewords as u128)? as u64;
    if let Some(&(i, _)) = sets.iter().find(|(i, set)| *i >= code.n() || set.iter().any(|&c| c >= code.n())) {
        return Err(OracleError::BadCoordinate(i));
    }
    Ok(cfg.install(|| {
        sets.par_iter().all(|(i, set)| {
            let mut seen: HashMap<Vec<Elem>, Elem> = HashMap::new();
            let mut ok = true;
            en.run(0, total, |_, cw| {
                let key: Vec<Elem> = set.iter().map(|&c| cw[c]).collect();
                let v = *seen.entry(key).or_insert(cw[*i]);
                ok = v == cw[*i];
                ok
            });
            ok
        })
    }))
}

/// Checks the fibers of one partition of `lrc` as recovering sets.
pub fn verify_recovering_partition(lrc: &LrcCode, axis: Axis, cfg: &OracleConfig) -> Result<bool, OracleError> {
    let part = lrc.partition(axis).map_err(|_| OracleError::NoPartition(axis))?;
    let sets: Vec<(usize, Vec<usize>)> = (0..lrc.n()).map(|c| (c, part.recovering_set(c))).collect();
    verify_recovering_sets(lrc.code(), &sets, cfg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::make_field;

    fn repetition(n: usize) -> LinearCode {
        let f = make_field(2, 2).unwrap();
        LinearCode::new(f, Matrix::from_rows(vec![vec![Elem::ONE; n]], n)).unwrap()
    }

    #[test]
    fn counting_helpers() {
        assert_eq!(binomial(32, 5), Some(201376));
        assert_eq!(gaussian_binomial(6, 2, 8), Some(19_477_641));
        assert_eq!(gaussian_binomial(3, 1, 2), Some(7));
        assert_eq!(gaussian_binomial(4, 2, 2), Some(35));
        assert_eq!(combinations(4, 2).len(), 6);
    }

    #[test]
    fn enumerator_matches_combine() {
        let lrc = LrcCode::hermitian_x(2, 2).unwrap();
        let code = lrc.code();
        let en = Enumerator::new(code.field(), code.basis());
        en.run(5, 40, |idx, cw| {
            let mut m = idx;
            let msg: Vec<Elem> = (0..code.k())
                .map(|_| {
                    let d = Elem((m % 4) as u32);
                    m /= 4;
                    d
                })
                .collect();
            assert_eq!(cw, code.encode(&msg).unwrap().as_slice());
            true
        });
    }

    #[test]
    fn repetition_code() {
        let cfg = OracleConfig::default();
        let c = repetition(6);
        assert_eq!(min_distance_exhaustive(&c, &cfg).unwrap().value, 6);
        assert_eq!(min_distance_by_circuits(&c, &cfg).unwrap().value, 6);
        let loc = locality_all(&c, &cfg).unwrap();
        assert!(loc.iter().all(|l| l.r == Some(1)));
        assert_eq!(locality_by_span_search(&c, 3, &cfg).unwrap().witness, vec![0]);
        assert_eq!(ghw_by_flats(&c, 1, &cfg).unwrap().value, 6);
    }

    #[test]
    fn caps_are_enforced() {
        let cfg = OracleConfig {
            max_codewords: 10,
            ..OracleConfig::default()
        };
        let c = repetition(4);
        // 4^1 codewords fit; 4^2 would not
        assert!(min_distance_exhaustive(&c, &cfg).is_ok());
        let lrc = LrcCode::hermitian_x(2, 1).unwrap();
        assert!(matches!(
            min_distance_exhaustive(lrc.code(), &cfg),
            Err(OracleError::CapExceeded { .. })
        ));
        // the fallback still answers exactly
        let d = min_distance(lrc.code(), &cfg).unwrap();
        assert_eq!((d.value, d.method), (6, Method::DualCircuits));
    }

    #[test]
    fn sampled_is_labelled_upper_bound() {
        let lrc = LrcCode::hermitian_x(2, 1).unwrap();
        let d = min_distance_sampled(lrc.code(), 50, 7).unwrap();
        assert!(!d.exact);
        assert!(d.value >= 6);
    }

    #[test]
    fn hermitian_x_truth() {
        let cfg = OracleConfig::default();
        let lrc = LrcCode::hermitian_x(2, 1).unwrap();
        let d = min_distance_exhaustive(lrc.code(), &cfg).unwrap();
        assert_eq!(d.value, 6);
        assert_eq!(ghw_by_subspaces(lrc.code(), 2, &cfg).unwrap().value, 8);
        assert_eq!(ghw_by_flats(lrc.code(), 2, &cfg).unwrap().value, 8);
        for l in locality_by_dual_enumeration(lrc.code(), &cfg).unwrap() {
            assert_eq!(l.r, Some(1));
            let part = lrc.partition(Axis::X).unwrap();
            assert_eq!(l.witness, part.recovering_set(l.coordinate));
        }
        assert!(verify_recovering_partition(&lrc, Axis::X, &cfg).unwrap());
    }

    #[test]
    fn wrong_sets_are_rejected() {
        let cfg = OracleConfig::default();
        let lrc = LrcCode::hermitian_x(2, 1).unwrap();
        let part = lrc.partition(Axis::X).unwrap();
        // pair each coordinate with a coordinate of the next fiber
        let sets: Vec<(usize, Vec<usize>)> = (0..lrc.n())
            .map(|c| {
                let b = (part.block_of(c) + 1) % part.blocks.len();
                (c, vec![part.blocks[b][0]])
            })
            .collect();
        assert!(!verify_recovering_sets(lrc.code(), &sets, &cfg).unwrap());
    }

    #[test]
    fn results_do_not_depend_on_jobs() {
        let lrc = LrcCode::hermitian_x(2, 2).unwrap();
        let one = OracleConfig::default().with_jobs(1);
        let four = OracleConfig::default().with_jobs(4);
        assert_eq!(
            min_distance_exhaustive(lrc.code(), &one).unwrap(),
            min_distance_exhaustive(lrc.code(), &four).unwrap()
        );
        assert_eq!(
            locality_all(lrc.code(), &one).unwrap(),
            locality_all(lrc.code(), &four).unwrap()
        );
    }
}
