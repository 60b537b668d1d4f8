//! Symmetric eigensolving and spectral checks on signed distance Laplacians.

mod jacobi;

use std::f64::consts::PI;
use std::fmt::Write as _;

use serde::Serialize;

use crate::distance::{distance_table, DistanceKind};
use crate::error::{Error, Result};
use crate::generate::{generate, GraphKind, SignSpec};
use crate::graph::SignedGraph;
use crate::laplacian::distance_laplacian_from_table;
use crate::matrix::SquareMatrix;

/// Tolerance for grouping eigenvalues into multiplicities.
pub const GROUP_TOL: f64 = 1e-7;
/// Convergence threshold relative to the Frobenius norm.
pub const CONVERGENCE_TOL: f64 = 1e-12;
/// Input symmetry tolerance, scaled by `max(1, max|entry|)`.
pub const SYMMETRY_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
}

/// Sorted eigenvalues with multiplicities grouped at [`GROUP_TOL`].
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub groups: Vec<EigenGroup>,
}

impl Spectrum {
    pub fn from_values(mut values: Vec<f64>) -> Spectrum {
        values.sort_by(f64::total_cmp);
        let mut groups: Vec<(f64, f64, usize)> = Vec::new(); // (first, sum, count)
        for &x in &values {
            match groups.last_mut() {
                Some((first, sum, count)) if x - *first <= GROUP_TOL => {
                    *sum += x;
                    *count += 1;
                }
                _ => groups.push((x, x, 1)),
            }
        }
        Spectrum {
            groups: groups
                .into_iter()
                .map(|(_, sum, count)| EigenGroup {
                    value: sum / count as f64,
                    multiplicity: count,
                })
                .collect(),
            eigenvalues: values,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn min(&self) -> Option<f64> {
        self.eigenvalues.first().copied()
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn product(&self) -> f64 {
        self.eigenvalues.iter().product()
    }

    /// Largest entrywise gap between the sorted lists.
    pub fn max_deviation(&self, other: &Spectrum) -> Result<f64> {
        if self.len() != other.len() {
            return Err(Error::OrderMismatch(self.len(), other.len()));
        }
        Ok(self
            .eigenvalues
            .iter()
            .zip(&other.eigenvalues)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("plain data")
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("index,eigenvalue\n");
        for (i, x) in self.eigenvalues.iter().enumerate() {
            writeln!(out, "{},{}", i + 1, x).unwrap();
        }
        out
    }
}

/// Full spectrum of a symmetric matrix.
pub fn sym_eig(m: &SquareMatrix) -> Result<Spectrum> {
    let tol = SYMMETRY_TOL * m.max_abs().max(1.0);
    if let Some((i, j)) = m.first_asymmetry(tol) {
        return Err(Error::NotSymmetric(i, j));
    }
    let values = jacobi::jacobi_eigenvalues(m.data().to_vec(), m.order(), CONVERGENCE_TOL)
        .ok_or(Error::NoConvergence(jacobi::MAX_SWEEPS))?;
    Ok(Spectrum::from_values(values))
}

/// Largest gap between the sorted spectra of two symmetric matrices.
pub fn spectral_deviation(a: &SquareMatrix, b: &SquareMatrix) -> Result<f64> {
    if a.order() != b.order() {
        return Err(Error::OrderMismatch(a.order(), b.order()));
    }
    sym_eig(a)?.max_deviation(&sym_eig(b)?)
}

pub fn cospectral(a: &SquareMatrix, b: &SquareMatrix, tol: f64) -> Result<bool> {
    Ok(spectral_deviation(a, b)? <= tol)
}

/// Distance Laplacian `Tr(G) - D(G)` of the underlying unsigned graph.
pub fn unsigned_distance_laplacian(g: &SignedGraph) -> Result<SquareMatrix> {
    let table = distance_table(&g.with_uniform_sign(crate::Sign::Positive))?;
    distance_laplacian_from_table(&table, DistanceKind::Max)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ShiftReport {
    pub is_transmission_regular: bool,
    /// Common transmission when regular.
    pub t: Option<u64>,
    /// `max |eig(L)_i - (t - eig(D))_i|` over sorted lists; 0 when not regular.
    pub max_deviation: f64,
}

/// On a `t`-transmission-regular graph, compares `eig(L)` with `{t - λ : λ ∈ eig(D)}`.
pub fn transmission_regular_shift_check(
    g: &SignedGraph,
    kind: DistanceKind,
) -> Result<ShiftReport> {
    let table = distance_table(g)?;
    let tr = table.transmission();
    let t = tr.first().copied().unwrap_or(0);
    if tr.iter().any(|&x| x != t) {
        return Ok(ShiftReport {
            is_transmission_regular: false,
            t: None,
            max_deviation: 0.0,
        });
    }
    let lap = sym_eig(&distance_laplacian_from_table(&table, kind)?)?;
    let dist = sym_eig(&table.distance_matrix(kind)?)?;
    let shifted = Spectrum::from_values(dist.eigenvalues.iter().map(|l| t as f64 - l).collect());
    Ok(ShiftReport {
        is_transmission_regular: true,
        t: Some(t),
        max_deviation: lap.max_deviation(&shifted)?,
    })
}

/// Evaluates the printed closed form for the `L^±` spectrum of the all-negative
/// odd cycle `C_{2k+1}`, term by term as written:
/// one value `k(k+1) - k(-1)^k - (1 - (-1)^k)/2` and, for `j = 0..k-1`, the value
/// `k(k+1) - k(-1)^j / sin((2j+1)π/2n) - sin²((2j+1)kπ/2n) / sin²((2j+1)π/2n)`
/// twice.
pub fn odd_cycle_formula_spectrum(k: u32) -> Result<Spectrum> {
    if k < 1 {
        return Err(Error::InvalidArgument("k must be at least 1".into()));
    }
    let kf = k as f64;
    let n = 2.0 * kf + 1.0;
    let parity = |e: u32| if e.is_multiple_of(2) { 1.0 } else { -1.0 };
    let mut values = vec![kf * (kf + 1.0) - kf * parity(k) - (1.0 - parity(k)) / 2.0];
    for j in 0..k {
        let odd = (2 * j + 1) as f64;
        let base = (odd * PI / (2.0 * n)).sin();
        let v = kf * (kf + 1.0)
            - kf * parity(j) / base
            - (odd * kf * PI / (2.0 * n)).sin().powi(2) / base.powi(2);
        values.push(v);
        values.push(v);
    }
    Ok(Spectrum::from_values(values))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaRow {
    pub k: u32,
    pub n: usize,
    pub numeric: Vec<f64>,
    pub formula: Vec<f64>,
    /// Largest gap between the sorted multisets.
    pub max_deviation: f64,
    /// Whether the formula's simple value appears in the numeric spectrum (within 1e-7).
    pub simple_value_found: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FormulaReport {
    pub rows: Vec<FormulaRow>,
}

fn join(values: &[f64]) -> String {
    values
        .iter()
        .map(|x| format!("{x:.6}"))
        .collect::<Vec<_>>()
        .join(" ")
}

impl FormulaReport {
    pub fn to_markdown(&self) -> String {
        let mut out = String::from(
            "| k | n | max deviation | simple value found | eigensolver | closed form |\n\
             |---|---|---|---|---|---|\n",
        );
        for r in &self.rows {
            writeln!(
                out,
                "| {} | {} | {:.6e} | {} | {} | {} |",
                r.k,
                r.n,
                r.max_deviation,
                r.simple_value_found,
                join(&r.numeric),
                join(&r.formula)
            )
            .unwrap();
        }
        out
    }

    pub fn to_csv(&self) -> String {
        let mut out =
            String::from("k,n,max_deviation,simple_value_found,eigensolver,closed_form\n");
        for r in &self.rows {
            writeln!(
                out,
                "{},{},{:e},{},{},{}",
                r.k,
                r.n,
                r.max_deviation,
                r.simple_value_found,
                join(&r.numeric),
                join(&r.formula)
            )
            .unwrap();
        }
        out
    }
}

/// For each `k`, compares `eig(L^±(C_{2k+1}^-))` with the printed closed form.
/// Deviations are reported, never asserted.
pub fn formula_vs_eigensolver_report(ks: &[u32]) -> Result<FormulaReport> {
    let mut rows = Vec::with_capacity(ks.len());
    for &k in ks {
        let formula = odd_cycle_formula_spectrum(k)?;
        let n = 2 * k as usize + 1;
        let cycle = generate(GraphKind::Cycle, n, &SignSpec::AllNegative, 0)?;
        let table = distance_table(&cycle)?;
        let numeric = sym_eig(&distance_laplacian_from_table(&table, DistanceKind::Pm)?)?;
        let kf = k as f64;
        let simple =
            kf * (kf + 1.0) - kf * (-1f64).powi(k as i32) - (1.0 - (-1f64).powi(k as i32)) / 2.0;
        rows.push(FormulaRow {
            k,
            n,
            max_deviation: numeric.max_deviation(&formula)?,
            simple_value_found: numeric
                .eigenvalues
                .iter()
                .any(|x| (x - simple).abs() <= GROUP_TOL),
            numeric: numeric.eigenvalues,
            formula: formula.eigenvalues,
        });
    }
    Ok(FormulaReport { rows })
}
