use alloc::vec;
use alloc::vec::Vec;

use super::FieldError;

/// Eigen-decomposition `M = Q Λ Qᵀ` with eigenvalues ascending.
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    /// `vectors[k]` is the unit eigenvector for `eigenvalues[k]`.
    pub vectors: Vec<Vec<f64>>,
    pub sweeps: usize,
}

const OFF_THRESHOLD: f64 = 1e-14;
const MAX_SWEEPS: usize = 100;

impl Spectrum {
    /// `max |M − QΛQᵀ|`.
    pub fn reconstruction_error(&self, m: &[Vec<f64>]) -> f64 {
        let n = m.len();
        let mut worst: f64 = 0.0;
        for i in 0..n {
            for j in 0..n {
                let r: f64 = (0..n).map(|k| self.vectors[k][i] * self.eigenvalues[k] * self.vectors[k][j]).sum();
                worst = worst.max((m[i][j] - r).abs());
            }
        }
        worst
    }

    /// Eigenvalues with `|λ| ≤ tol`.
    pub fn zero_modes(&self, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|x| x.abs() <= tol).count()
    }
}

fn frobenius_off(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    libm::sqrt(s)
}

/// Cyclic Jacobi rotations in fixed row-major pivot order.
pub fn spectrum(m: &[Vec<f64>]) -> Result<Spectrum, FieldError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(FieldError::NotSquare);
    }
    for i in 0..n {
        for j in i + 1..n {
            if m[i][j] != m[j][i] {
                return Err(FieldError::NotSymmetric { row: i, col: j });
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let mut q: Vec<Vec<f64>> = (0..n).map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect()).collect();
    let scale = libm::sqrt(a.iter().flatten().map(|x| x * x).sum::<f64>());
    let mut sweeps = 0;
    while frobenius_off(&a) > OFF_THRESHOLD * scale {
        if sweeps == MAX_SWEEPS {
            return Err(FieldError::NoConvergence);
        }
        sweeps += 1;
        for p in 0..n {
            for r in p + 1..n {
                let apr = a[p][r];
                if apr == 0.0 {
                    continue;
                }
                let theta = (a[r][r] - a[p][p]) / (2.0 * apr);
                let t = theta.signum() / (theta.abs() + libm::sqrt(theta * theta + 1.0));
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / libm::sqrt(t * t + 1.0);
                let s = t * c;
                for k in 0..n {
                    let (akp, akr) = (a[k][p], a[k][r]);
                    a[k][p] = c * akp - s * akr;
                    a[k][r] = s * akp + c * akr;
                }
                for k in 0..n {
                    let (apk, ark) = (a[p][k], a[r][k]);
                    a[p][k] = c * apk - s * ark;
                    a[r][k] = s * apk + c * ark;
                }
                for row in q.iter_mut() {
                    let (qp, qr) = (row[p], row[r]);
                    row[p] = c * qp - s * qr;
                    row[r] = s * qp + c * qr;
                }
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x][x].total_cmp(&a[y][y]).then(x.cmp(&y)));
    let eigenvalues = order.iter().map(|&k| a[k][k]).collect();
    let vectors = order.iter().map(|&k| (0..n).map(|i| q[i][k]).collect()).collect();
    Ok(Spectrum { eigenvalues, vectors, sweeps })
}

/// `n × n` diagonal matrix.
pub fn diag(d: &[f64]) -> Vec<Vec<f64>> {
    let mut m = vec![vec![0.0; d.len()]; d.len()];
    for (i, x) in d.iter().enumerate() {
        m[i][i] = *x;
    }
    m
}
