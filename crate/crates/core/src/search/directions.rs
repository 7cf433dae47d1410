use crate::lattice::primitive_vectors_of_norm;
use crate::Dual;

/// Primitive dual vectors up to a norm bound, sorted by norm and then by the
/// canonical level-set order, with prefix sums of their norms.
#[derive(Debug, Clone)]
pub struct DirectionTable {
    dirs: Vec<Dual>,
    norms: Vec<i64>,
    prefix: Vec<i64>,
    max_norm: i64,
}

impl DirectionTable {
    pub fn new(max_norm: i64) -> Self {
        let mut dirs = Vec::new();
        let mut norms = Vec::new();
        for l in 1..=max_norm {
            for v in primitive_vectors_of_norm(l) {
                dirs.push(v);
                norms.push(l);
            }
        }
        let mut prefix = Vec::with_capacity(norms.len() + 1);
        prefix.push(0);
        for &c in &norms {
            prefix.push(prefix.last().unwrap() + c);
        }
        Self {
            dirs,
            norms,
            prefix,
            max_norm,
        }
    }

    /// The table a search for `A(n)` runs over: norms up to `3n`.
    pub fn for_diameter(n: u64) -> Self {
        Self::new(3 * n as i64)
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn max_norm(&self) -> i64 {
        self.max_norm
    }

    pub fn direction(&self, i: usize) -> Dual {
        self.dirs[i]
    }

    pub fn norm(&self, i: usize) -> i64 {
        self.norms[i]
    }

    pub fn entries(&self) -> impl Iterator<Item = (Dual, i64)> + '_ {
        self.dirs.iter().copied().zip(self.norms.iter().copied())
    }

    /// Most vectors affordable with `budget` using distinct directions from
    /// index `start` on, taking the cheapest first.
    pub fn affordable(&self, start: usize, budget: i64) -> usize {
        if budget < 0 || start >= self.dirs.len() {
            return 0;
        }
        let base = self.prefix[start];
        self.prefix[start..].partition_point(|&s| s - base <= budget) - 1
    }

    /// Cheapest total norm of `count` vectors with distinct directions from
    /// index `start` on, or `None` if fewer than `count` remain.
    pub fn cheapest(&self, start: usize, count: usize) -> Option<i64> {
        let end = start.checked_add(count)?;
        (end < self.prefix.len()).then(|| self.prefix[end] - self.prefix[start])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::totient;

    #[test]
    fn counts_per_norm() {
        let t = DirectionTable::for_diameter(4);
        assert_eq!(t.max_norm(), 12);
        for l in 1..=12 {
            let count = t.entries().filter(|&(_, c)| c == l).count() as u64;
            assert_eq!(count, 3 * totient(l as u64).unwrap());
        }
        assert!(t.entries().all(|(v, c)| v.is_primitive() && v.norm() == c));
        assert!(t.entries().zip(t.entries().skip(1)).all(|(a, b)| a.1 <= b.1));
    }

    #[test]
    fn greedy_bounds() {
        let t = DirectionTable::new(3);
        // norms: 1,1,1,2,2,2,3,3,3,3,3,3
        assert_eq!(t.affordable(0, 0), 0);
        assert_eq!(t.affordable(0, 3), 3);
        assert_eq!(t.affordable(0, 8), 5);
        assert_eq!(t.affordable(0, 1000), 12);
        assert_eq!(t.affordable(3, 4), 2);
        assert_eq!(t.affordable(12, 10), 0);
        assert_eq!(t.cheapest(0, 4), Some(5));
        assert_eq!(t.cheapest(10, 2), Some(6));
        assert_eq!(t.cheapest(10, 3), None);
    }
}
