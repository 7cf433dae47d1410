//! Depth-first branch and bound over multiples of table directions.
//!
//! A node is a partial configuration: the directions chosen so far (each at
//! some multiplicity), the index from which further directions may be
//! taken, the remaining norm budget and the running vector sum. Children
//! pick the next direction `j >= start` and a multiplicity `m >= 1`, so each
//! configuration is reached along exactly one path, in lexicographic order
//! of its `(direction index, multiplicity)` sequence.

use std::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use std::sync::Mutex;
use std::time::Instant;

use super::directions::DirectionTable;
use super::PruneFlags;
use crate::Dual;

const TICK_MASK: u64 = 0x3ff;

/// Shared node accounting and resource limits.
pub(crate) struct Budget<'a> {
    pub nodes: &'a AtomicU64,
    pub stop: &'a AtomicBool,
    pub max_nodes: Option<u64>,
    pub deadline: Option<Instant>,
}

impl Budget<'_> {
    fn flush(&self, local: &mut u64) -> bool {
        let total = self.nodes.fetch_add(*local, Ordering::Relaxed) + *local;
        *local = 0;
        if self.stop.load(Ordering::Relaxed) {
            return false;
        }
        let over_nodes = self.max_nodes.is_some_and(|m| total > m);
        let over_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.stop.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }
}

/// Per-branch walker state.
pub(crate) struct Walker<'a> {
    pub table: &'a DirectionTable,
    pub budget: &'a Budget<'a>,
    pub flags: PruneFlags,
    pub primitive_only: bool,
    pub chosen: Vec<Dual>,
    local: u64,
    aborted: bool,
}

impl<'a> Walker<'a> {
    pub fn new(table: &'a DirectionTable, budget: &'a Budget<'a>, flags: PruneFlags, primitive_only: bool) -> Self {
        Self {
            table,
            budget,
            flags,
            primitive_only,
            chosen: Vec::new(),
            local: 0,
            aborted: false,
        }
    }

    fn tick(&mut self) -> bool {
        if self.aborted {
            return false;
        }
        self.local += 1;
        if self.local & TICK_MASK == 0 && !self.budget.flush(&mut self.local) {
            self.aborted = true;
        }
        !self.aborted
    }

    pub fn finish(&mut self) {
        if !self.budget.flush(&mut self.local) {
            self.aborted = true;
        }
    }

    pub fn aborted(&self) -> bool {
        self.aborted
    }

    fn max_multiplicity(&self, norm: i64, remaining: i64) -> i64 {
        if self.primitive_only {
            (norm <= remaining) as i64
        } else {
            remaining / norm
        }
    }

    /// Rule (a): the remaining vectors must sum to `-sum`, which costs at
    /// least the norm of `-sum`.
    fn closing_fails(&self, sum: Dual, remaining: i64) -> bool {
        self.flags.closing && (-sum).norm() > remaining
    }
}

/// Largest balanced configuration, improving on a shared incumbent count.
pub(crate) struct MaxCount<'a> {
    pub walker: Walker<'a>,
    pub best: &'a AtomicUsize,
    pub incumbent: &'a Mutex<Option<Vec<Dual>>>,
}

impl MaxCount<'_> {
    fn bound_fails(&self, count: usize, start: usize, remaining: i64) -> bool {
        self.walker.flags.counting
            && count + self.walker.table.affordable(start, remaining) <= self.best.load(Ordering::Relaxed)
    }

    pub fn visit(&mut self, start: usize, remaining: i64, sum: Dual, count: usize) {
        if !self.walker.tick() {
            return;
        }
        if sum.is_zero() && count > self.best.load(Ordering::Relaxed) {
            let mut slot = self.incumbent.lock().expect("incumbent lock");
            if self.best.fetch_max(count, Ordering::Relaxed) < count {
                *slot = Some(self.walker.chosen.clone());
            }
        }
        if self.walker.closing_fails(sum, remaining) || self.bound_fails(count, start, remaining) {
            return;
        }
        let table = self.walker.table;
        for j in start..table.len() {
            let c = table.norm(j);
            if c > remaining || self.bound_fails(count, j, remaining) {
                break;
            }
            let dir = table.direction(j);
            for m in 1..=self.walker.max_multiplicity(c, remaining) {
                let v = dir * m;
                self.walker.chosen.push(v);
                self.visit(j + 1, remaining - m * c, sum + v, count + 1);
                self.walker.chosen.pop();
                if self.walker.aborted() {
                    return;
                }
            }
        }
    }
}

/// Balanced configurations of exactly `target` vectors.
pub(crate) struct Exact<'a> {
    pub walker: Walker<'a>,
    pub target: usize,
    /// Stop at the first hit instead of collecting every hit.
    pub first_only: bool,
    pub found: Vec<Vec<Dual>>,
    /// Index of this top-level branch and the smallest branch index that has
    /// already produced a hit; later branches abandon their work.
    pub branch: usize,
    pub earliest_hit: Option<&'a AtomicUsize>,
}

impl Exact<'_> {
    fn superseded(&self) -> bool {
        self.earliest_hit
            .is_some_and(|e| e.load(Ordering::Relaxed) < self.branch)
    }

    /// Returns `true` when the walk should stop.
    pub fn visit(&mut self, start: usize, remaining: i64, sum: Dual, count: usize) -> bool {
        if !self.walker.tick() || self.superseded() {
            return true;
        }
        if count == self.target {
            if sum.is_zero() {
                self.found.push(self.walker.chosen.clone());
                return self.first_only;
            }
            return false;
        }
        if self.walker.closing_fails(sum, remaining) {
            return false;
        }
        let table = self.walker.table;
        let need = self.target - count;
        for j in start..table.len() {
            let c = table.norm(j);
            if c > remaining {
                break;
            }
            if self.walker.flags.counting && table.affordable(j, remaining) < need {
                break;
            }
            let dir = table.direction(j);
            for m in 1..=self.walker.max_multiplicity(c, remaining) {
                let v = dir * m;
                self.walker.chosen.push(v);
                let stop = self.visit(j + 1, remaining - m * c, sum + v, count + 1);
                self.walker.chosen.pop();
                if stop {
                    return true;
                }
            }
        }
        false
    }
}

/// Smallest total norm of exactly `target` vectors with distinct directions,
/// with no balancing requirement.
pub(crate) struct MinCost<'a> {
    pub walker: Walker<'a>,
    pub target: usize,
    pub best: Option<i64>,
}

impl MinCost<'_> {
    fn hopeless(&self, cost: i64, start: usize, need: usize) -> bool {
        match self.walker.table.cheapest(start, need) {
            None => true,
            Some(extra) => self.best.is_some_and(|b| cost + extra >= b),
        }
    }

    pub fn visit(&mut self, start: usize, cost: i64, count: usize) {
        if !self.walker.tick() {
            return;
        }
        if count == self.target {
            if self.best.is_none_or(|b| cost < b) {
                self.best = Some(cost);
            }
            return;
        }
        let need = self.target - count;
        if self.hopeless(cost, start, need) {
            return;
        }
        let table = self.walker.table;
        for j in start..table.len() {
            if self.hopeless(cost, j, need) {
                break;
            }
            let c = table.norm(j);
            let mut m = 1;
            loop {
                if self.hopeless(cost + m * c, j + 1, need - 1) {
                    break;
                }
                self.visit(j + 1, cost + m * c, count + 1);
                if self.walker.aborted() {
                    return;
                }
                if self.walker.primitive_only || self.best.is_none() {
                    break;
                }
                m += 1;
            }
        }
    }

}
