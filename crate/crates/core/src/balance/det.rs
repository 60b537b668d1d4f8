use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::SquareMatrix;

/// Exact determinant of an integer matrix by fraction-free (Bareiss) elimination.
pub fn det_exact(m: &SquareMatrix) -> Result<BigInt> {
    let n = m.order();
    let mut a: Vec<Vec<BigInt>> = Vec::with_capacity(n);
    for i in 0..n {
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let x = m.get(i, j);
            if x.fract() != 0.0 || !x.is_finite() || x.abs() > 9.007_199_254_740_992e15 {
                return Err(Error::NonInteger {
                    row: i,
                    col: j,
                    value: x,
                });
            }
            row.push(BigInt::from(x as i64));
        }
        a.push(row);
    }
    Ok(bareiss(a))
}

/// Bareiss elimination on an owned integer matrix.
pub fn bareiss(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Floating determinant with a singularity flag.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FloatDet {
    pub value: f64,
    /// A pivot fell below `n · ε · max|entry|`; `value` is then 0.
    pub singular: bool,
}

/// LU with partial pivoting.
pub fn det_float(m: &SquareMatrix) -> FloatDet {
    let n = m.order();
    let mut a = m.data().to_vec();
    let tol = n as f64 * f64::EPSILON * m.max_abs();
    let mut det = 1.0;
    for k in 0..n {
        let p = (k..n)
            .max_by(|&i, &j| a[i * n + k].abs().total_cmp(&a[j * n + k].abs()))
            .unwrap();
        if a[p * n + k].abs() <= tol {
            return FloatDet {
                value: 0.0,
                singular: true,
            };
        }
        if p != k {
            for j in 0..n {
                a.swap(k * n + j, p * n + j);
            }
            det = -det;
        }
        let pivot = a[k * n + k];
        det *= pivot;
        for i in k + 1..n {
            let f = a[i * n + k] / pivot;
            if f != 0.0 {
                for j in k + 1..n {
                    a[i * n + j] -= f * a[k * n + j];
                }
            }
        }
    }
    FloatDet {
        value: det,
        singular: false,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ints(rows: &[&[i64]]) -> SquareMatrix {
        SquareMatrix::from_int_rows(rows).unwrap()
    }

    /// Permutation expansion; independent of elimination.
    fn leibniz(m: &SquareMatrix) -> i128 {
        fn rec(m: &SquareMatrix, row: usize, used: &mut Vec<bool>, sign: i128) -> i128 {
            let n = m.order();
            if row == n {
                return sign;
            }
            let mut total = 0i128;
            for c in 0..n {
                if used[c] {
                    continue;
                }
                let x = m.get(row, c) as i128;
                // earlier rows holding a larger column form inversions with this one
                let inv = (c + 1..n).filter(|&k| used[k]).count();
                if x != 0 {
                    used[c] = true;
                    let s = if inv % 2 == 0 { sign } else { -sign };
                    total += x * rec(m, row + 1, used, s);
                    used[c] = false;
                }
            }
            total
        }
        rec(m, 0, &mut vec![false; m.order()], 1)
    }

    #[test]
    fn golden_determinants() {
        let c3 = ints(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]);
        assert_eq!(det_exact(&c3).unwrap(), BigInt::from(4));
        let p3 = ints(&[&[3, -1, 2], &[-1, 2, 1], &[2, 1, 3]]);
        assert_eq!(det_exact(&p3).unwrap(), BigInt::zero());
        let c4 = ints(&[
            &[4, -1, -2, 1],
            &[-1, 4, -1, -2],
            &[-2, -1, 4, -1],
            &[1, -2, -1, 4],
        ]);
        assert_eq!(det_exact(&c4).unwrap(), BigInt::from(84));
        assert_eq!(leibniz(&c4), 84);
    }

    #[test]
    fn pivoting_and_edge_cases() {
        let swap = ints(&[&[0, 1], &[1, 0]]);
        assert_eq!(det_exact(&swap).unwrap(), BigInt::from(-1));
        assert_eq!(det_exact(&SquareMatrix::zeros(0)).unwrap(), BigInt::one());
        let m = ints(&[&[0, 2, 3], &[0, 4, 5], &[1, 6, 7]]);
        assert_eq!(det_exact(&m).unwrap(), BigInt::from(leibniz(&m) as i64));
        let r = SquareMatrix::from_rows(&[[0.5]]).unwrap();
        assert!(matches!(det_exact(&r), Err(Error::NonInteger { .. })));
    }

    #[test]
    fn float_examples() {
        let d = det_float(&SquareMatrix::identity(5));
        assert_eq!(d.value, 1.0);
        let c3 = ints(&[&[2, 1, 1], &[1, 2, 1], &[1, 1, 2]]);
        assert!((det_float(&c3).value - 4.0).abs() < 1e-9);
        let w = ints(&[&[7, 2, 5], &[2, 5, 3], &[5, 3, 8]]);
        assert!((det_float(&w).value - 120.0).abs() < 1e-6);
        let sing = ints(&[&[1, 2], &[2, 4]]);
        assert!(det_float(&sing).singular);
    }

    #[test]
    fn bareiss_matches_leibniz_on_small_matrices() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let rows: Vec<Vec<i64>> = (0..n)
                .map(|_| (0..n).map(|_| rng.gen_range(-4..=4)).collect())
                .collect();
            let m = SquareMatrix::from_int_rows(&rows).unwrap();
            let exact = det_exact(&m).unwrap();
            assert_eq!(exact, BigInt::from(leibniz(&m)));
            let f = det_float(&m);
            let e = leibniz(&m) as f64;
            assert!((f.value - e).abs() <= 1e-9 * e.abs().max(1.0));
        }
    }
}
