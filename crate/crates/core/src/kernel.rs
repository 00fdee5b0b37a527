//! Kernel evaluation, kernel matrices, and gradients of kernel values with
//! respect to an attack point.
//!
//! Three families are supported:
//!
//! - linear: `K(x, z) = x · z`
//! - polynomial: `K(x, z) = (x · z + R)^d`
//! - RBF: `K(x, z) = exp(-(γ/2) · ‖x - z‖²)`
//!
//! Note the `γ/2` factor in the RBF exponent; many libraries use
//! `exp(-γ‖x - z‖²)` instead, so an equivalent width there corresponds to
//! `γ/2` here.

use alloc::vec::Vec;
use nalgebra::DMatrix;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KernelFamily {
    Linear,
    Polynomial,
    Rbf,
}

/// Kernel family plus hyperparameters.
///
/// Hyperparameters not used by the chosen family are ignored by every
/// operation. Use the constructors to get validation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelSpec {
    pub family: KernelFamily,
    /// RBF width; the kernel value is `exp(-(gamma/2)·‖x-z‖²)`.
    pub gamma: f64,
    /// Polynomial degree.
    pub degree: u32,
    /// Polynomial additive offset.
    pub offset: f64,
}

impl KernelSpec {
    pub fn linear() -> Self {
        Self {
            family: KernelFamily::Linear,
            gamma: 1.0,
            degree: 1,
            offset: 0.0,
        }
    }

    pub fn polynomial(degree: u32, offset: f64) -> Result<Self> {
        if degree < 1 {
            return Err(Error::InvalidArgument(
                "polynomial degree must be >= 1".into(),
            ));
        }
        Ok(Self {
            family: KernelFamily::Polynomial,
            gamma: 1.0,
            degree,
            offset,
        })
    }

    pub fn rbf(gamma: f64) -> Result<Self> {
        if !(gamma > 0.0) {
            return Err(Error::InvalidArgument("rbf gamma must be > 0".into()));
        }
        Ok(Self {
            family: KernelFamily::Rbf,
            gamma,
            degree: 1,
            offset: 0.0,
        })
    }

    /// Kernel value `K(x, z)`.
    pub fn eval(&self, x: &[f64], z: &[f64]) -> Result<f64> {
        if x.len() != z.len() {
            return Err(Error::DimensionMismatch {
                expected: x.len(),
                got: z.len(),
            });
        }
        Ok(match self.family {
            KernelFamily::Linear => dot(x, z),
            KernelFamily::Polynomial => powi(dot(x, z) + self.offset, self.degree),
            KernelFamily::Rbf => {
                let d2: f64 = x.iter().zip(z).map(|(a, b)| (a - b) * (a - b)).sum();
                libm::exp(-0.5 * self.gamma * d2)
            }
        })
    }

    /// Matrix of kernel values: entry `(i, j) = K(a_i, b_j)`.
    pub fn matrix(&self, a: &[Vec<f64>], b: &[Vec<f64>]) -> Result<DMatrix<f64>> {
        let mut k = DMatrix::zeros(a.len(), b.len());
        for (i, x) in a.iter().enumerate() {
            for (j, z) in b.iter().enumerate() {
                k[(i, j)] = self.eval(x, z)?;
            }
        }
        Ok(k)
    }

    /// Gradient of `K(x_i, x_c)` with respect to the attack point `x_c`.
    ///
    /// The attack's unit step factor is excluded; the attack driver composes
    /// this with its step when moving the point. For the nonlinear families
    /// the returned value is the gradient evaluated at the current `x_c`
    /// (the previous iterate, under a sufficiently small step):
    ///
    /// - linear: `x_i`
    /// - polynomial: `d·(x_i·x_c + R)^(d-1) · x_i`
    /// - RBF: `K(x_i, x_c)·γ·(x_i - x_c)`
    pub fn gradient_wrt_attack(&self, x_i: &[f64], x_c: &[f64]) -> Result<Vec<f64>> {
        if x_i.len() != x_c.len() {
            return Err(Error::DimensionMismatch {
                expected: x_i.len(),
                got: x_c.len(),
            });
        }
        Ok(match self.family {
            KernelFamily::Linear => x_i.to_vec(),
            KernelFamily::Polynomial => {
                // Exponent-zero convention: (x·z + R)^0 = 1 even at base 0,
                // so degree 1 reduces to the linear case without NaNs.
                let base = dot(x_i, x_c) + self.offset;
                let scale = self.degree as f64 * powi(base, self.degree - 1);
                x_i.iter().map(|v| scale * v).collect()
            }
            KernelFamily::Rbf => {
                let k = self.eval(x_i, x_c)?;
                x_i.iter()
                    .zip(x_c)
                    .map(|(a, b)| k * self.gamma * (a - b))
                    .collect()
            }
        })
    }
}

/// Label-annotated kernel matrix: `Q_ij = yA_i · yB_j · K_ij`.
pub fn label_annotated_matrix(
    k: &DMatrix<f64>,
    y_a: &[f64],
    y_b: &[f64],
) -> Result<DMatrix<f64>> {
    if k.nrows() != y_a.len() {
        return Err(Error::DimensionMismatch {
            expected: k.nrows(),
            got: y_a.len(),
        });
    }
    if k.ncols() != y_b.len() {
        return Err(Error::DimensionMismatch {
            expected: k.ncols(),
            got: y_b.len(),
        });
    }
    let mut q = k.clone();
    for i in 0..q.nrows() {
        for j in 0..q.ncols() {
            q[(i, j)] *= y_a[i] * y_b[j];
        }
    }
    Ok(q)
}

fn dot(x: &[f64], z: &[f64]) -> f64 {
    x.iter().zip(z).map(|(a, b)| a * b).sum()
}

/// Integer power by repeated multiplication; `powi(x, 0) = 1` for any `x`.
fn powi(x: f64, n: u32) -> f64 {
    let mut out = 1.0;
    let mut base = x;
    let mut n = n;
    while n > 0 {
        if n & 1 == 1 {
            out *= base;
        }
        base *= base;
        n >>= 1;
    }
    out
}
