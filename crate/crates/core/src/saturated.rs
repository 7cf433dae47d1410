//! Saturated sets of primitive dual vectors, the vertex-maximal family they
//! produce, and the resulting exact values and bounds for `A(n)`.

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::config::{reconstruct, VectorConfiguration};
use crate::error::{Error, Result};
use crate::lattice::{primitive_vectors_in_first_cone, primitive_vectors_of_norm, totient, DualVector};
use crate::polytope::Polytope;

type Dual = DualVector<i64>;

/// `S = S_{<=q} ∪ R`: every primitive vector of norm at most `q`, plus a
/// proper subset `R` of the primitive vectors of norm `q + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SaturatedSet {
    q: u64,
    extras: Vec<Dual>,
    full: Vec<Dual>,
}

fn phi(l: u64) -> u64 {
    totient(l).expect("l >= 1")
}

/// `sum_{l<=q} phi(l)`.
pub fn totient_sum(q: u64) -> u64 {
    (1..=q).map(phi).sum()
}

/// `sum_{l<=q} l * phi(l)`.
pub fn weighted_totient_sum(q: u64) -> u64 {
    (1..=q).map(|l| l * phi(l)).sum()
}

impl SaturatedSet {
    /// Validates `extras` as the partial top layer over `S_{<=q}`.
    pub fn new(q: u64, extras: Vec<Dual>) -> Result<Self> {
        let top = (q + 1) as i64;
        for (i, v) in extras.iter().enumerate() {
            if !v.is_primitive() || v.norm() != top {
                return Err(Error::InvalidSaturatedSet(format!(
                    "extra vector {v} is not a primitive vector of norm {top}"
                )));
            }
            if extras[..i].contains(v) {
                return Err(Error::InvalidSaturatedSet(format!("extra vector {v} repeated")));
            }
        }
        if extras.len() as u64 >= 3 * phi(q + 1) {
            return Err(Error::InvalidSaturatedSet(format!(
                "{} extras would complete the norm-{top} layer",
                extras.len()
            )));
        }
        let mut full = Vec::new();
        for l in 1..=q as i64 {
            full.extend(primitive_vectors_of_norm(l));
        }
        full.extend(extras.iter().copied());
        Ok(Self { q, extras, full })
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn extras(&self) -> &[Dual] {
        &self.extras
    }

    pub fn full(&self) -> &[Dual] {
        &self.full
    }

    pub fn len(&self) -> usize {
        self.full.len()
    }

    pub fn is_empty(&self) -> bool {
        self.full.is_empty()
    }

    pub fn is_balanced(&self) -> bool {
        self.full.iter().fold(Dual::zero(), |a, &v| a + v).is_zero()
    }

    pub fn configuration(&self) -> VectorConfiguration<i64> {
        VectorConfiguration::new(self.full.clone()).expect("primitive vectors have distinct directions")
    }
}

/// All primitive dual vectors of norm at most `q`.
pub fn s_leq(q: u64) -> SaturatedSet {
    SaturatedSet::new(q, Vec::new()).expect("empty top layer is valid")
}

/// Unique `(q, r)` with `k = sum_{l<=q} phi(l) + r` and `r < phi(q + 1)`.
pub fn decompose_count(k: u64) -> (u64, u64) {
    let mut q = 0;
    let mut acc = 0;
    while acc + phi(q + 1) <= k {
        acc += phi(q + 1);
        q += 1;
    }
    (q, k - acc)
}

/// The balanced saturated set with `3k` elements: `S_{<=q}` plus the first
/// `r` norm-`(q+1)` vectors of the half-open cone `C~_1` and their two
/// rotations.
pub fn build_qk(k: u64) -> Result<SaturatedSet> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            range: ">= 1",
        });
    }
    let (q, r) = decompose_count(k);
    let chosen: Vec<Dual> = primitive_vectors_in_first_cone((q + 1) as i64)
        .into_iter()
        .take(r as usize)
        .collect();
    let mut extras = chosen.clone();
    extras.extend(chosen.iter().map(|v| v.rotate()));
    extras.extend(chosen.iter().map(|v| v.rotate().rotate()));
    SaturatedSet::new(q, extras)
}

pub fn polytope_of(set: &SaturatedSet) -> Result<Polytope<i64>> {
    reconstruct(&set.configuration())
}

/// Number of vertices: `3 * sum phi(l) + |R|`.
pub fn f0_formula(set: &SaturatedSet) -> u64 {
    f0_from_parts(set.q, set.extras.len() as u64)
}

/// Simplicial diameter: `sum l * phi(l) + (q + 1) / 3 * |R|`.
pub fn n_formula(set: &SaturatedSet) -> Ratio<i64> {
    n_from_parts(set.q, set.extras.len() as u64)
}

pub fn f0_from_parts(q: u64, extras: u64) -> u64 {
    3 * totient_sum(q) + extras
}

pub fn n_from_parts(q: u64, extras: u64) -> Ratio<i64> {
    Ratio::from_integer(weighted_totient_sum(q) as i64) + Ratio::new(((q + 1) * extras) as i64, 3)
}

/// Bounds on `A(n)`, with `lower == upper` when exact.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ABound {
    pub n: u64,
    pub lower: u64,
    pub upper: u64,
    pub exact: bool,
    /// The decomposition `(q, r)` the bound was derived from.
    pub q: u64,
    pub r: u64,
}

impl ABound {
    pub fn contains(&self, value: u64) -> bool {
        self.lower <= value && value <= self.upper
    }
}

/// Exact value or bounds for `A(n)` from the saturated family.
///
/// The strict upper bound `3 sum phi + 3(r + 1)` is reported inclusively,
/// as that value minus one.
pub fn a_bounds(n: u64) -> Result<ABound> {
    if n == 0 {
        return Err(Error::OutOfRange {
            what: "n",
            value: 0,
            range: ">= 1",
        });
    }
    let mut q = 0;
    let mut base_n = 0;
    let mut base_f = 0;
    while base_n + (q + 1) * phi(q + 1) <= n {
        q += 1;
        base_n += q * phi(q);
        base_f += phi(q);
    }
    let step = q + 1;
    let r = ((n - base_n) / step).min(phi(q + 1) - 1);
    let lower = 3 * base_f + 3 * r;
    let exact = base_n + r * step == n;
    let upper = if exact { lower } else { 3 * base_f + 3 * (r + 1) - 1 };
    Ok(ABound {
        n,
        lower,
        upper,
        exact,
        q,
        r,
    })
}

/// `f0(P_q)^3 / n(P_q)^2` against its limit `9^3 / (2 pi)^2`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AsymptoticRatio {
    pub q: u64,
    pub f0: u64,
    pub n: u64,
    #[serde(skip)]
    pub ratio: Ratio<i128>,
    pub ratio_f64: f64,
    pub target: f64,
    pub relative_deviation: f64,
}

pub fn asymptotic_target() -> f64 {
    729.0 / (4.0 * std::f64::consts::PI * std::f64::consts::PI)
}

pub fn asymptotic_ratio(q: u64) -> Result<AsymptoticRatio> {
    if q == 0 {
        return Err(Error::OutOfRange {
            what: "q",
            value: 0,
            range: ">= 1",
        });
    }
    let f0 = f0_from_parts(q, 0);
    let n = n_from_parts(q, 0).to_integer() as u64;
    let ratio = Ratio::new((f0 as i128).pow(3), (n as i128).pow(2));
    let ratio_f64 = *ratio.numer() as f64 / *ratio.denom() as f64;
    let target = asymptotic_target();
    Ok(AsymptoticRatio {
        q,
        f0,
        n,
        ratio,
        ratio_f64,
        target,
        relative_deviation: (ratio_f64 - target).abs() / target,
    })
}
