//! Dense matrices with CSV and JSON export.

use std::fmt::Write as _;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Orientation;

/// Formats a value as an integer when it is integral, else with `f64` Display.
pub fn format_entry(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x}")
    }
}

fn entry_json(x: f64) -> Value {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        json!(x as i64)
    } else {
        json!(x)
    }
}

fn rows_csv(rows: usize, cols: usize, at: impl Fn(usize, usize) -> f64) -> String {
    let mut out = String::new();
    for i in 0..rows {
        let line: Vec<String> = (0..cols).map(|j| format_entry(at(i, j))).collect();
        writeln!(out, "{}", line.join(",")).unwrap();
    }
    out
}

/// Dense `n × n` real matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct SquareMatrix {
    n: usize,
    data: Vec<f64>,
    exact: bool,
}

impl SquareMatrix {
    pub fn zeros(n: usize) -> SquareMatrix {
        SquareMatrix {
            n,
            data: vec![0.0; n * n],
            exact: true,
        }
    }

    pub fn identity(n: usize) -> SquareMatrix {
        let mut m = SquareMatrix::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1.0;
        }
        m
    }

    pub fn from_data(n: usize, data: Vec<f64>) -> Result<SquareMatrix> {
        if data.len() != n * n {
            return Err(Error::LengthMismatch {
                expected: n * n,
                got: data.len(),
            });
        }
        let exact = data.iter().all(|x| x.fract() == 0.0);
        Ok(SquareMatrix { n, data, exact })
    }

    pub fn from_rows<R: AsRef<[f64]>>(rows: &[R]) -> Result<SquareMatrix> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * n);
        for r in rows {
            let r = r.as_ref();
            if r.len() != n {
                return Err(Error::LengthMismatch {
                    expected: n,
                    got: r.len(),
                });
            }
            data.extend_from_slice(r);
        }
        SquareMatrix::from_data(n, data)
    }

    pub fn from_int_rows<R: AsRef<[i64]>>(rows: &[R]) -> Result<SquareMatrix> {
        let rows: Vec<Vec<f64>> = rows
            .iter()
            .map(|r| r.as_ref().iter().map(|&x| x as f64).collect())
            .collect();
        SquareMatrix::from_rows(&rows)
    }

    pub fn diagonal(values: &[f64]) -> SquareMatrix {
        let n = values.len();
        let mut m = SquareMatrix::zeros(n);
        for (i, &v) in values.iter().enumerate() {
            m.data[i * n + i] = v;
        }
        m.exact = values.iter().all(|x| x.fract() == 0.0);
        m
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.n + j]
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn data(&self) -> &[f64] {
        &self.data
    }

    /// True when every entry is an integer.
    pub fn is_exact(&self) -> bool {
        self.exact
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i)).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|x| x * x).sum::<f64>().sqrt()
    }

    /// First `(i, j)` with `|a_ij - a_ji| > tol`.
    pub fn first_asymmetry(&self, tol: f64) -> Option<(usize, usize)> {
        (0..self.n)
            .flat_map(|i| (i + 1..self.n).map(move |j| (i, j)))
            .find(|&(i, j)| (self.get(i, j) - self.get(j, i)).abs() > tol)
    }

    pub fn is_symmetric(&self, tol: f64) -> bool {
        self.first_asymmetry(tol).is_none()
    }

    pub fn max_abs_diff(&self, other: &SquareMatrix) -> Result<f64> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        Ok(self
            .data
            .iter()
            .zip(&other.data)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs())))
    }

    pub fn sub(&self, other: &SquareMatrix) -> Result<SquareMatrix> {
        if self.n != other.n {
            return Err(Error::OrderMismatch(self.n, other.n));
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        SquareMatrix::from_data(self.n, data)
    }

    /// `S · M · S` for a diagonal `±1` matrix `S` given by its diagonal.
    pub fn conjugate_by_signs(&self, signs: &[f64]) -> Result<SquareMatrix> {
        if signs.len() != self.n {
            return Err(Error::OrderMismatch(self.n, signs.len()));
        }
        let n = self.n;
        let data = (0..n * n)
            .map(|k| signs[k / n] * self.data[k] * signs[k % n])
            .collect();
        SquareMatrix::from_data(n, data)
    }

    pub fn to_csv(&self) -> String {
        rows_csv(self.n, self.n, |i, j| self.get(i, j))
    }

    pub fn to_json(&self, kind: &str) -> Value {
        let rows: Vec<Value> = (0..self.n)
            .map(|i| Value::Array(self.row(i).iter().map(|&x| entry_json(x)).collect()))
            .collect();
        json!({ "n": self.n, "kind": kind, "rows": rows })
    }
}

/// Oriented weighted incidence matrix, `n × m`, with its orientation.
#[derive(Debug, Clone, PartialEq)]
pub struct IncidenceMatrix {
    rows: usize,
    cols: usize,
    data: Vec<f64>,
    orientation: Orientation,
    integral_product: bool,
}

impl IncidenceMatrix {
    pub(crate) fn new(
        rows: usize,
        cols: usize,
        data: Vec<f64>,
        orientation: Orientation,
        integral_product: bool,
    ) -> IncidenceMatrix {
        debug_assert_eq!(data.len(), rows * cols);
        IncidenceMatrix {
            rows,
            cols,
            data,
            orientation,
            integral_product,
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.cols + j]
    }

    pub fn column(&self, j: usize) -> Vec<f64> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn orientation(&self) -> &Orientation {
        &self.orientation
    }

    /// `H · Hᵀ`. With integer weights every entry of the product is an integer;
    /// entries are then rounded, failing if any rounding moves a value by 1e-9 or more.
    pub fn gram(&self) -> Result<SquareMatrix> {
        let n = self.rows;
        let mut out = vec![0.0; n * n];
        for i in 0..n {
            for j in i..n {
                let s: f64 = (0..self.cols)
                    .map(|k| self.get(i, k) * self.get(j, k))
                    .sum();
                out[i * n + j] = s;
                out[j * n + i] = s;
            }
        }
        if self.integral_product {
            for x in &mut out {
                let r = x.round();
                if (r - *x).abs() >= 1e-9 {
                    return Err(Error::Numerical(format!(
                        "H·Hᵀ entry {x} is not within 1e-9 of an integer"
                    )));
                }
                *x = r;
            }
        }
        SquareMatrix::from_data(n, out)
    }

    /// Determinant of a square incidence matrix (`m = n`), via LU.
    pub fn determinant(&self) -> Result<f64> {
        if self.rows != self.cols {
            return Err(Error::OrderMismatch(self.rows, self.cols));
        }
        let m = SquareMatrix {
            n: self.rows,
            data: self.data.clone(),
            exact: false,
        };
        Ok(crate::balance::det_float(&m).value)
    }

    pub fn to_csv(&self) -> String {
        rows_csv(self.rows, self.cols, |i, j| self.get(i, j))
    }

    pub fn to_json(&self) -> Value {
        let rows: Vec<Value> = (0..self.rows)
            .map(|i| Value::Array((0..self.cols).map(|j| entry_json(self.get(i, j))).collect()))
            .collect();
        let arcs: Vec<Value> = self
            .orientation
            .arcs()
            .iter()
            .map(|&(t, h)| json!([t + 1, h + 1]))
            .collect();
        json!({
            "n": self.rows,
            "m": self.cols,
            "kind": "incidence",
            "rows": rows,
            "orientation": arcs,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_flag_and_symmetry() {
        let m = SquareMatrix::from_rows(&[[2.0, 1.0], [1.0, 2.0]]).unwrap();
        assert!(m.is_exact());
        assert!(m.is_symmetric(0.0));
        let a = SquareMatrix::from_rows(&[[0.5, 1.0], [2.0, 2.0]]).unwrap();
        assert!(!a.is_exact());
        assert_eq!(a.first_asymmetry(1e-12), Some((0, 1)));
        assert!(SquareMatrix::from_rows(&[vec![1.0, 2.0], vec![1.0]]).is_err());
    }

    #[test]
    fn csv_and_json_agree() {
        let m = SquareMatrix::from_int_rows(&[[4, -1], [-1, 2]]).unwrap();
        assert_eq!(m.to_csv(), "4,-1\n-1,2\n");
        assert_eq!(
            m.to_json("lmax"),
            json!({"n": 2, "kind": "lmax", "rows": [[4, -1], [-1, 2]]})
        );
        let r = SquareMatrix::from_rows(&[[2.5]]).unwrap();
        assert_eq!(r.to_csv(), "2.5\n");
    }

    #[test]
    fn conjugation_by_signs() {
        let m = SquareMatrix::from_int_rows(&[[1, 2], [2, 3]]).unwrap();
        let c = m.conjugate_by_signs(&[1.0, -1.0]).unwrap();
        assert_eq!(c, SquareMatrix::from_int_rows(&[[1, -2], [-2, 3]]).unwrap());
    }
}
