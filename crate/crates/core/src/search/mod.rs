//! Exhaustive computation of `A(n)` and of vertex-maximal witnesses.
//!
//! A polygon fits in `n * simplex` exactly when the norms of its
//! configuration sum to at most `3n`, so `A(n)` is the largest balanced
//! configuration within that budget. Vectors are positive multiples of
//! primitive table directions; restricting to primitive vectors is not
//! assumed to be lossless.
//!
//! Three pruning rules are applied, each of which can be switched off for
//! testing through [`PruneFlags`]:
//!
//! * closing: the running sum must be returnable to zero within the
//!   remaining budget, i.e. `norm(-sum) <= remaining`;
//! * counting: the current count plus the most directions still affordable
//!   (cheapest first) must beat the incumbent;
//! * seeding: the incumbent starts at the saturated-family lower bound.
//!
//! Top-level branches (the first direction and multiplicity chosen) are
//! explored in parallel. The value is schedule independent; the reported
//! witness is the lexicographically first optimal configuration in branch
//! order, found by a second pass with a fixed target.

mod branch;
mod directions;
mod geometric;

use std::collections::BTreeSet;
use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use self::branch::{Budget, Exact, MaxCount, MinCost, Walker};
pub use self::directions::DirectionTable;
pub use self::geometric::{max_vertices_geometric, maximal_polygons_geometric, GEOMETRIC_MAX_N};
use crate::config::reconstruct;
use crate::error::{Error, Result};
use crate::saturated::{a_bounds, build_qk, ABound};
use crate::{Config, Dual};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    pub max_nodes: Option<u64>,
    pub max_time: Option<Duration>,
    /// Worker threads; `0` lets the pool pick.
    pub threads: usize,
}

impl Default for SearchLimits {
    fn default() -> Self {
        Self {
            max_nodes: None,
            max_time: None,
            threads: 1,
        }
    }
}

impl SearchLimits {
    pub fn with_threads(mut self, threads: usize) -> Self {
        self.threads = threads;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PruneFlags {
    pub closing: bool,
    pub counting: bool,
    pub seeding: bool,
}

impl Default for PruneFlags {
    fn default() -> Self {
        Self {
            closing: true,
            counting: true,
            seeding: true,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStatus {
    Exact,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SearchResult {
    pub n: u64,
    /// `A(n)` when exact; the best incumbent otherwise.
    pub a_of_n: u64,
    pub witness: Config,
    pub node_count: u64,
    pub elapsed: Duration,
    pub status: SearchStatus,
    pub bound: ABound,
    /// Whether some optimal configuration uses only primitive vectors;
    /// `None` if that side search did not finish.
    pub primitive_witness: Option<bool>,
}

impl SearchResult {
    pub fn is_exact(&self) -> bool {
        self.status == SearchStatus::Exact
    }

    /// Checks the witness: balanced, within budget `3n`, and reconstructing
    /// to a polygon with `a_of_n` vertices and simplicial diameter `<= n`.
    pub fn validate_witness(&self) -> Result<()> {
        validate_witness(self.n, self.a_of_n, &self.witness)
    }
}

pub fn validate_witness(n: u64, a_of_n: u64, witness: &Config) -> Result<()> {
    let p = reconstruct(witness)?;
    if witness.norm_sum() > 3 * n as i64 {
        return Err(Error::DiameterExceeds {
            diameter: witness.norm_sum() / 3,
            n: n as i64,
        });
    }
    if p.f0() as u64 != a_of_n || witness.len() as u64 != a_of_n {
        return Err(Error::Precondition(format!(
            "witness has {} vertices, expected {a_of_n}",
            p.f0()
        )));
    }
    if p.simplicial_diameter() > n as i64 {
        return Err(Error::DiameterExceeds {
            diameter: p.simplicial_diameter(),
            n: n as i64,
        });
    }
    Ok(())
}

struct Shared {
    nodes: AtomicU64,
    stop: AtomicBool,
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
}

impl Shared {
    fn new(limits: &SearchLimits, started: Instant) -> Self {
        Self {
            nodes: AtomicU64::new(0),
            stop: AtomicBool::new(false),
            max_nodes: limits.max_nodes,
            deadline: limits.max_time.map(|d| started + d),
        }
    }

    fn budget(&self) -> Budget<'_> {
        Budget {
            nodes: &self.nodes,
            stop: &self.stop,
            max_nodes: self.max_nodes,
            deadline: self.deadline,
        }
    }

    fn stopped(&self) -> bool {
        self.stop.load(Ordering::Relaxed)
    }

    fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

fn pool(threads: usize) -> rayon::ThreadPool {
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
}

/// First choices at the root: `(direction index, multiplicity)`, in the
/// order a sequential walk would take them.
fn top_branches(table: &DirectionTable, budget: i64, primitive_only: bool) -> Vec<(usize, i64)> {
    let mut out = Vec::new();
    for j in 0..table.len() {
        let c = table.norm(j);
        if c > budget {
            break;
        }
        let max_m = if primitive_only { 1 } else { budget / c };
        out.extend((1..=max_m).map(|m| (j, m)));
    }
    out
}

/// Largest balanced configuration within `budget`, starting from `seed`.
fn maximize(
    table: &DirectionTable,
    budget: i64,
    seed: usize,
    flags: PruneFlags,
    shared: &Shared,
    threads: usize,
) -> (usize, Option<Vec<Dual>>) {
    let best = AtomicUsize::new(seed);
    let incumbent = Mutex::new(None);
    let branches = top_branches(table, budget, false);
    let limits = shared.budget();
    pool(threads).install(|| {
        branches.par_iter().for_each(|&(j, m)| {
            if shared.stopped() {
                return;
            }
            let walker = Walker::new(table, &limits, flags, false);
            let mut s = MaxCount {
                walker,
                best: &best,
                incumbent: &incumbent,
            };
            if flags.counting && table.affordable(j, budget) <= best.load(Ordering::Relaxed) {
                return;
            }
            let v = table.direction(j) * m;
            s.walker.chosen.push(v);
            s.visit(j + 1, budget - m * table.norm(j), v, 1);
            s.walker.finish();
        });
    });
    (best.into_inner(), incumbent.into_inner().expect("incumbent lock"))
}

/// Lexicographically first balanced configuration of exactly `target`
/// vectors within `budget`, or `None` if there is none.
fn first_exact(
    table: &DirectionTable,
    budget: i64,
    target: usize,
    primitive_only: bool,
    flags: PruneFlags,
    shared: &Shared,
    threads: usize,
) -> Option<Vec<Dual>> {
    if target == 0 {
        return Some(Vec::new());
    }
    let branches = top_branches(table, budget, primitive_only);
    let earliest = AtomicUsize::new(usize::MAX);
    let limits = shared.budget();
    let hits: Vec<Option<Vec<Dual>>> = pool(threads).install(|| {
        branches
            .par_iter()
            .enumerate()
            .map(|(b, &(j, m))| {
                if earliest.load(Ordering::Relaxed) < b || shared.stopped() {
                    return None;
                }
                let mut s = Exact {
                    walker: Walker::new(table, &limits, flags, primitive_only),
                    target,
                    first_only: true,
                    found: Vec::new(),
                    branch: b,
                    earliest_hit: Some(&earliest),
                };
                let v = table.direction(j) * m;
                s.walker.chosen.push(v);
                s.visit(j + 1, budget - m * table.norm(j), v, 1);
                s.walker.finish();
                let hit = s.found.pop();
                if hit.is_some() {
                    earliest.fetch_min(b, Ordering::Relaxed);
                }
                hit
            })
            .collect()
    });
    hits.into_iter().flatten().next()
}

fn config_of(vectors: Vec<Dual>) -> Config {
    Config::new(vectors).expect("search keeps directions distinct")
}

fn check_n(n: u64) -> Result<()> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            range: ">= 1",
        });
    }
    Ok(())
}

/// Computes `A(n)` exactly by branch and bound.
pub fn max_vertices_branch_and_bound(n: u64, limits: SearchLimits) -> Result<SearchResult> {
    max_vertices_with_flags(n, limits, PruneFlags::default())
}

pub fn max_vertices_with_flags(n: u64, limits: SearchLimits, flags: PruneFlags) -> Result<SearchResult> {
    check_n(n)?;
    let started = Instant::now();
    let bound = a_bounds(n)?;
    let table = DirectionTable::for_diameter(n);
    let budget = 3 * n as i64;
    let shared = Shared::new(&limits, started);

    let seed_set = build_qk(bound.lower / 3)?;
    let seed = if flags.seeding { bound.lower as usize } else { 0 };
    let (best, improved) = maximize(&table, budget, seed, flags, &shared, limits.threads);

    let fallback = match improved {
        Some(v) => v,
        None => seed_set.full().to_vec(),
    };
    if shared.stopped() {
        let a = fallback.len() as u64;
        return Ok(SearchResult {
            n,
            a_of_n: a,
            witness: config_of(fallback),
            node_count: shared.nodes(),
            elapsed: started.elapsed(),
            status: SearchStatus::Inconclusive,
            bound,
            primitive_witness: None,
        });
    }

    let canonical = first_exact(&table, budget, best, false, flags, &shared, limits.threads);
    let primitive = if shared.stopped() {
        None
    } else {
        match &canonical {
            Some(w) if w.iter().all(|v| v.is_primitive()) => Some(true),
            _ => {
                let p = first_exact(&table, budget, best, true, flags, &shared, limits.threads);
                (!shared.stopped()).then_some(p.is_some())
            }
        }
    };
    let status = if shared.stopped() {
        SearchStatus::Inconclusive
    } else {
        SearchStatus::Exact
    };
    let witness = canonical.unwrap_or(fallback);
    Ok(SearchResult {
        n,
        a_of_n: witness.len() as u64,
        witness: config_of(witness),
        node_count: shared.nodes(),
        elapsed: started.elapsed(),
        status,
        bound,
        primitive_witness: primitive,
    })
}

/// Every balanced configuration attaining `A(n)` within budget `3n`, in
/// canonical (angularly sorted) form without duplicates.
pub fn enumerate_maximal(n: u64, limits: SearchLimits) -> Result<Vec<Config>> {
    check_n(n)?;
    let started = Instant::now();
    let result = max_vertices_branch_and_bound(n, limits)?;
    if !result.is_exact() {
        return Err(Error::Inconclusive {
            nodes: result.node_count,
        });
    }
    let remaining = SearchLimits {
        max_time: limits.max_time.map(|d| d.saturating_sub(started.elapsed())),
        max_nodes: limits.max_nodes.map(|m| m.saturating_sub(result.node_count)),
        ..limits
    };
    let table = DirectionTable::for_diameter(n);
    let shared = Shared::new(&remaining, Instant::now());
    let limits_ref = shared.budget();
    let mut s = Exact {
        walker: Walker::new(&table, &limits_ref, PruneFlags::default(), false),
        target: result.a_of_n as usize,
        first_only: false,
        found: Vec::new(),
        branch: 0,
        earliest_hit: None,
    };
    s.visit(0, 3 * n as i64, Dual::zero(), 0);
    s.walker.finish();
    if s.walker.aborted() {
        return Err(Error::Inconclusive {
            nodes: result.node_count + shared.nodes(),
        });
    }
    let unique: BTreeSet<Vec<Dual>> = s
        .found
        .into_iter()
        .map(|v| config_of(v).vectors().to_vec())
        .collect();
    Ok(unique.into_iter().map(config_of).collect())
}

/// Smallest sum of norms over all configurations of `k` vectors with
/// distinct directions (not necessarily balanced).
pub fn minimum_norm_sum(k: u64, limits: SearchLimits) -> Result<i64> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            range: ">= 1",
        });
    }
    // Any k directions of norm <= k exist, so the optimum costs at most
    // the greedy total over that table, and no single vector exceeds it.
    let small = DirectionTable::new(k as i64);
    let ceiling = small.cheapest(0, k as usize).expect("3 * phi-sum >= k");
    let table = DirectionTable::new(ceiling);
    let shared = Shared::new(&limits, Instant::now());
    let budget = shared.budget();
    let mut s = MinCost {
        walker: Walker::new(&table, &budget, PruneFlags::default(), false),
        target: k as usize,
        best: None,
    };
    s.visit(0, 0, 0);
    s.walker.finish();
    match s.best {
        Some(b) if !s.walker.aborted() => Ok(b),
        _ => Err(Error::Inconclusive { nodes: shared.nodes() }),
    }
}
