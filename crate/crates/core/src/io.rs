//! JSON forms of polygons, configurations, curves and search results.
//! Loaders canonicalize their input.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::saturated::ABound;
use crate::search::{SearchResult, SearchStatus};
use crate::tropical::{Ray, TropicalCurve};
use crate::{Config, Dual, Point, Polygon};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolytopeJson {
    pub vertices: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub vectors: Vec<[i64; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveJson {
    pub rays: Vec<Ray>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchRecord {
    pub n: u64,
    #[serde(rename = "A")]
    pub a: u64,
    pub witness: ConfigurationJson,
    pub nodes: u64,
    pub ms: u64,
    pub status: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub primitive_witness: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub bound: Option<ABound>,
}

fn format_err(e: serde_json::Error) -> Error {
    Error::Format(e.to_string())
}

impl From<&Polygon> for PolytopeJson {
    fn from(p: &Polygon) -> Self {
        Self {
            vertices: p.vertices().iter().map(|v| [v.x, v.y]).collect(),
        }
    }
}

impl PolytopeJson {
    pub fn to_polytope(&self) -> Result<Polygon> {
        let pts: Vec<Point> = self.vertices.iter().map(|&[x, y]| Point::new(x, y)).collect();
        Polygon::convex_hull(&pts)
    }
}

impl From<&Config> for ConfigurationJson {
    fn from(c: &Config) -> Self {
        Self {
            vectors: c.vectors().iter().map(|v| [v.p, v.q]).collect(),
        }
    }
}

impl ConfigurationJson {
    pub fn to_config(&self) -> Result<Config> {
        Config::new(self.vectors.iter().map(|&[p, q]| Dual::new(p, q)).collect())
    }
}

impl From<&TropicalCurve> for CurveJson {
    fn from(c: &TropicalCurve) -> Self {
        Self { rays: c.rays().to_vec() }
    }
}

impl From<&SearchResult> for SearchRecord {
    fn from(r: &SearchResult) -> Self {
        Self {
            n: r.n,
            a: r.a_of_n,
            witness: (&r.witness).into(),
            nodes: r.node_count,
            ms: r.elapsed.as_millis() as u64,
            status: match r.status {
                SearchStatus::Exact => "exact",
                SearchStatus::Inconclusive => "inconclusive",
            }
            .to_string(),
            primitive_witness: r.primitive_witness,
            bound: Some(r.bound),
        }
    }
}

pub fn polytope_to_json(p: &Polygon) -> String {
    serde_json::to_string(&PolytopeJson::from(p)).expect("serializable")
}

pub fn polytope_from_json(s: &str) -> Result<Polygon> {
    serde_json::from_str::<PolytopeJson>(s).map_err(format_err)?.to_polytope()
}

pub fn configuration_to_json(c: &Config) -> String {
    serde_json::to_string(&ConfigurationJson::from(c)).expect("serializable")
}

pub fn configuration_from_json(s: &str) -> Result<Config> {
    serde_json::from_str::<ConfigurationJson>(s).map_err(format_err)?.to_config()
}

pub fn curve_to_json(c: &TropicalCurve) -> String {
    serde_json::to_string(&CurveJson::from(c)).expect("serializable")
}

pub fn curve_from_json(s: &str) -> Result<TropicalCurve> {
    let raw: CurveJson = serde_json::from_str(s).map_err(format_err)?;
    Ok(TropicalCurve::canonicalized(raw.rays)?)
}

pub fn search_result_to_json(r: &SearchResult) -> String {
    serde_json::to_string(&SearchRecord::from(r)).expect("serializable")
}

/// Parses a search record and checks its witness.
pub fn search_record_from_json(s: &str) -> Result<SearchRecord> {
    let rec: SearchRecord = serde_json::from_str(s).map_err(format_err)?;
    if rec.status != "exact" && rec.status != "inconclusive" {
        return Err(Error::Format(format!("unknown status {:?}", rec.status)));
    }
    let witness = rec.witness.to_config()?;
    if !witness.is_balanced() {
        return Err(Error::Unbalanced(witness.sum().to_string()));
    }
    Ok(SearchRecord {
        witness: (&witness).into(),
        ..rec
    })
}
