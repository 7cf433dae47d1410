//! Cross-check by direct enumeration of convex lattice polygons in `n * simplex`.

use std::time::Instant;

use super::{SearchResult, SearchStatus};
use crate::config::d_map;
use crate::error::{Error, Result};
use crate::polytope::orientation;
use crate::saturated::a_bounds;
use crate::{Point, Polygon};

/// Largest `n` accepted by the geometric oracle.
pub const GEOMETRIC_MAX_N: u64 = 5;

struct Chains<'a> {
    pts: &'a [Point],
    chain: Vec<Point>,
    nodes: u64,
    best: usize,
    all_best: Vec<Vec<Point>>,
}

impl Chains<'_> {
    fn closes(&self) -> bool {
        let k = self.chain.len();
        k >= 3
            && orientation(self.chain[k - 2], self.chain[k - 1], self.chain[0]) > 0
            && orientation(self.chain[k - 1], self.chain[0], self.chain[1]) > 0
    }

    fn record(&mut self) {
        let k = self.chain.len();
        if k < self.best {
            return;
        }
        let hull = Polygon::convex_hull(&self.chain).expect("nonempty");
        if hull.f0() != k {
            return;
        }
        if k > self.best {
            self.best = k;
            self.all_best.clear();
        }
        self.all_best.push(hull.vertices().to_vec());
    }

    /// Extends a counterclockwise chain whose first point is its
    /// lexicographically smallest vertex.
    fn walk(&mut self) {
        self.nodes += 1;
        if self.closes() {
            self.record();
        }
        let k = self.chain.len();
        for i in 0..self.pts.len() {
            let c = self.pts[i];
            if k >= 2 && orientation(self.chain[k - 2], self.chain[k - 1], c) <= 0 {
                continue;
            }
            // strictly increasing angle around the start
            if k >= 2 && orientation(self.chain[0], self.chain[k - 1], c) <= 0 {
                continue;
            }
            self.chain.push(c);
            self.walk();
            self.chain.pop();
        }
    }
}

fn enumerate(n: u64) -> Result<(usize, Vec<Vec<Point>>, u64)> {
    if n == 0 || n > GEOMETRIC_MAX_N {
        return Err(Error::OutOfRange {
            what: "n",
            value: n as i64,
            range: "1..=5",
        });
    }
    let mut pts = Polygon::dilated_simplex(n as i64).lattice_points();
    pts.sort();
    let mut best = 1;
    let mut all_best = vec![vec![pts[0]]];
    let mut nodes = 0;
    for s in 0..pts.len() {
        let rest: Vec<Point> = pts[s + 1..].to_vec();
        let mut c = Chains {
            pts: &rest,
            chain: vec![pts[s]],
            nodes: 0,
            best,
            all_best: Vec::new(),
        };
        c.walk();
        nodes += c.nodes;
        if c.best > best {
            best = c.best;
            all_best = c.all_best;
        } else if c.best == best {
            all_best.extend(c.all_best);
        }
    }
    Ok((best, all_best, nodes))
}

/// `A(n)` by enumerating convex lattice polygons in `n * simplex`.
pub fn max_vertices_geometric(n: u64) -> Result<SearchResult> {
    let started = Instant::now();
    let (best, polygons, nodes) = enumerate(n)?;
    let witness = Polygon::convex_hull(&polygons[0]).expect("nonempty");
    Ok(SearchResult {
        n,
        a_of_n: best as u64,
        witness: d_map(&witness),
        node_count: nodes,
        elapsed: started.elapsed(),
        status: SearchStatus::Exact,
        bound: a_bounds(n)?,
        primitive_witness: None,
    })
}

/// Every vertex-maximal polygon in `n * simplex`, as placed there.
pub fn maximal_polygons_geometric(n: u64) -> Result<Vec<Polygon>> {
    let (_, polygons, _) = enumerate(n)?;
    Ok(polygons
        .iter()
        .map(|v| Polygon::convex_hull(v).expect("nonempty"))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_values() {
        let got: Vec<u64> = (1..=5)
            .map(|n| max_vertices_geometric(n).unwrap().a_of_n)
            .collect();
        assert_eq!(got, vec![3, 4, 6, 6, 8]);
        assert!(max_vertices_geometric(6).is_err());
        assert!(max_vertices_geometric(0).is_err());
    }

    #[test]
    fn reference_hexagon_is_maximal_at_4() {
        let hexagon = Polygon::convex_hull(
            &[(0, 3), (2, 2), (3, 1), (2, 0), (1, 0), (0, 2)].map(|(x, y)| Point::new(x, y)),
        )
        .unwrap();
        let all = maximal_polygons_geometric(4).unwrap();
        assert!(all.contains(&hexagon));
    }
}
