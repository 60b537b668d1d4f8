//! Balance deciders and determinant machinery.
//!
//! Three independent routes decide balance of a connected signed graph:
//!
//! * [`is_balanced_switching`]: switch a spanning tree to all-positive and
//!   inspect the remaining edges;
//! * [`is_balanced_det`]: exact determinants of the signed distance Laplacians,
//!   which vanish exactly for balanced graphs;
//! * [`is_balanced_forest`]: the contrabalanced 1-forest expansion of the
//!   weighted Laplacian determinant.

mod closed_form;
mod det;
mod forest;
mod switching;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde_json::{json, Value};

use crate::distance::{distance_table, DistanceKind};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, SwitchingFunction, WeightedSignedGraph};
use crate::laplacian::distance_laplacian_from_table;

pub use closed_form::{closed_form_det, ClosedForm, Shape};
pub use det::{bareiss, det_exact, det_float, FloatDet};
pub use forest::{
    enumerate_spanning_1forests, forest_det, ForestComponent, OneForest, MAX_FOREST_VERTICES,
};
pub use switching::is_balanced_switching;

/// A determinant that is exact for integer input and real otherwise.
#[derive(Debug, Clone, PartialEq)]
pub enum DetValue {
    Exact(BigInt),
    Real(f64),
}

impl DetValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            DetValue::Exact(b) => b.to_f64().unwrap_or(f64::NAN),
            DetValue::Real(x) => *x,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            DetValue::Exact(b) => b.is_zero(),
            DetValue::Real(x) => *x == 0.0,
        }
    }

    pub fn as_exact(&self) -> Option<&BigInt> {
        match self {
            DetValue::Exact(b) => Some(b),
            DetValue::Real(_) => None,
        }
    }
}

impl fmt::Display for DetValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DetValue::Exact(b) => write!(f, "{b}"),
            DetValue::Real(x) => write!(f, "{x}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Switching,
    DetMax,
    DetMin,
    DetPm,
    DetAll,
    ForestSum,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Switching => "switching",
            Method::DetMax => "det-max",
            Method::DetMin => "det-min",
            Method::DetPm => "det-pm",
            Method::DetAll => "det-all",
            Method::ForestSum => "forest-sum",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Evidence attached to a balance verdict.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Certificate {
    /// Switching that makes every edge positive.
    Switching(SwitchingFunction),
    /// Vertex sequence of a negative cycle; the closing edge is implicit.
    NegativeCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct BalanceReport {
    pub balanced: bool,
    pub method: Method,
    pub determinant: Option<DetValue>,
    pub certificate: Option<Certificate>,
}

impl BalanceReport {
    /// Checks the certificate against `g`. Reports without a certificate verify trivially.
    pub fn verify_certificate(&self, g: &SignedGraph) -> Result<bool> {
        match &self.certificate {
            None => Ok(true),
            Some(Certificate::Switching(zeta)) => {
                Ok(self.balanced && g.switch(zeta)?.is_all_positive())
            }
            Some(Certificate::NegativeCycle(cycle)) => {
                if self.balanced || cycle.len() < 3 {
                    return Ok(false);
                }
                let mut distinct = cycle.clone();
                distinct.sort_unstable();
                distinct.dedup();
                if distinct.len() != cycle.len() {
                    return Ok(false);
                }
                let mut walk = cycle.clone();
                walk.push(cycle[0]);
                Ok(g.path_sign(&walk)? == Sign::Negative)
            }
        }
    }

    pub fn to_json(&self) -> Value {
        let certificate = match &self.certificate {
            None => Value::Null,
            Some(Certificate::Switching(z)) => {
                json!({"switching": z.values().iter().map(|s| s.to_i32()).collect::<Vec<_>>()})
            }
            Some(Certificate::NegativeCycle(c)) => {
                json!({"negative_cycle": c.iter().map(|v| v + 1).collect::<Vec<_>>()})
            }
        };
        json!({
            "balanced": self.balanced,
            "method": self.method.as_str(),
            "determinant": self.determinant.as_ref().map(|d| d.to_string()),
            "certificate": certificate,
        })
    }
}

/// Which distance Laplacian determinant(s) [`is_balanced_det`] inspects.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DetKind {
    Max,
    Min,
    Pm,
    /// All three, asserting that their verdicts coincide.
    All,
}

impl FromStr for DetKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(DetKind::Max),
            "min" => Ok(DetKind::Min),
            "pm" => Ok(DetKind::Pm),
            "all" => Ok(DetKind::All),
            _ => Err(Error::InvalidArgument(format!(
                "unknown determinant kind '{s}'"
            ))),
        }
    }
}

/// Determinants of `L^max`, `L^min` and (when compatible) `L^±`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceDeterminants {
    pub det_max: BigInt,
    pub det_min: BigInt,
    /// `None` when the graph is not distance-compatible.
    pub det_pm: Option<BigInt>,
    pub laplacians_equal: bool,
}

pub fn distance_determinants(g: &SignedGraph) -> Result<DistanceDeterminants> {
    let table = distance_table(g)?;
    let lmax = distance_laplacian_from_table(&table, DistanceKind::Max)?;
    let lmin = distance_laplacian_from_table(&table, DistanceKind::Min)?;
    let det_pm = match table.is_compatible() {
        true => Some(det_exact(&distance_laplacian_from_table(
            &table,
            DistanceKind::Pm,
        )?)?),
        false => None,
    };
    Ok(DistanceDeterminants {
        det_max: det_exact(&lmax)?,
        det_min: det_exact(&lmin)?,
        det_pm,
        laplacians_equal: lmax == lmin,
    })
}

/// Balance via `det L = 0` for the chosen signed distance Laplacian.
pub fn is_balanced_det(g: &SignedGraph, kind: DetKind) -> Result<BalanceReport> {
    let dets = distance_determinants(g)?;
    let report = |balanced, method, det: Option<&BigInt>| BalanceReport {
        balanced,
        method,
        determinant: det.cloned().map(DetValue::Exact),
        certificate: None,
    };
    Ok(match kind {
        DetKind::Max => report(dets.det_max.is_zero(), Method::DetMax, Some(&dets.det_max)),
        DetKind::Min => report(dets.det_min.is_zero(), Method::DetMin, Some(&dets.det_min)),
        DetKind::Pm => report(
            dets.det_pm.as_ref().is_some_and(Zero::is_zero),
            Method::DetPm,
            dets.det_pm.as_ref(),
        ),
        DetKind::All => {
            let by_max = dets.det_max.is_zero();
            let by_min = dets.det_min.is_zero();
            let by_pm = dets.det_pm.as_ref().is_some_and(Zero::is_zero);
            if by_max != by_min || by_max != by_pm {
                return Err(Error::Inconsistent(format!(
                    "det L^max = {}, det L^min = {}, det L^pm = {}",
                    dets.det_max,
                    dets.det_min,
                    dets.det_pm
                        .as_ref()
                        .map_or("undefined".to_string(), |d| d.to_string())
                )));
            }
            if by_max && !dets.laplacians_equal {
                return Err(Error::Inconsistent(
                    "balanced but L^max differs from L^min".into(),
                ));
            }
            report(by_max, Method::DetAll, Some(&dets.det_max))
        }
    })
}

/// Balance via the contrabalanced 1-forest sum of the weighted Laplacian of `g`.
pub fn is_balanced_forest(g: &WeightedSignedGraph) -> Result<BalanceReport> {
    g.graph().require_connected()?;
    let det = forest_det(g)?;
    Ok(BalanceReport {
        balanced: det.is_zero(),
        method: Method::ForestSum,
        determinant: Some(det),
        certificate: None,
    })
}
