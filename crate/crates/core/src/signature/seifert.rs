//! Floating-point Tristram–Levine signatures from a Seifert matrix.
//!
//! This path is a cross-check for the exact counting formula, not a source of
//! truth: the Hermitian form `(1-ζ)V + (1-ζ̄)Vᵀ` is diagonalized numerically and
//! any eigenvalue too close to zero is reported instead of guessed.

use nalgebra::DMatrix;
use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::rational::Rational;

pub const DEFAULT_TOLERANCE: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeifertMatrix {
    size: usize,
    entries: Vec<i64>,
}

impl SeifertMatrix {
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let size = rows.len();
        if size == 0 || rows.iter().any(|r| r.len() != size) {
            return Err(Error::NonSquareMatrix);
        }
        Ok(SeifertMatrix {
            size,
            entries: rows.into_iter().flatten().collect(),
        })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.size + col]
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.size)
            .map(<[i64]>::to_vec)
            .collect()
    }

    /// The Hermitian matrix `(1-ζ)V + (1-ζ̄)Vᵀ` for `ζ = e^{2πix}`.
    pub fn hermitian_form(&self, x: f64) -> DMatrix<Complex64> {
        let zeta = Complex64::from_polar(1.0, std::f64::consts::TAU * x);
        let a = Complex64::new(1.0, 0.0) - zeta;
        let b = a.conj();
        DMatrix::from_fn(self.size, self.size, |i, j| {
            a * self.get(i, j) as f64 + b * self.get(j, i) as f64
        })
    }
}

/// Seifert matrix of the `(2,q)` torus knot: `q-1` square, `-1` on the
/// diagonal and `+1` on the superdiagonal.
pub fn bidiagonal_seifert(q: u32) -> Result<SeifertMatrix> {
    if q < 3 || q.is_multiple_of(2) {
        return Err(Error::InvalidTwoStrandOrder(q));
    }
    let n = (q - 1) as usize;
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match j {
                    _ if j == i => -1,
                    _ if j == i + 1 => 1,
                    _ => 0,
                })
                .collect()
        })
        .collect();
    SeifertMatrix::from_rows(rows)
}

/// Signature (positive minus negative eigenvalue count) of the form at
/// `ζ = e^{2πix}`.
///
/// Fails with [`Error::NearSingularForm`] when some eigenvalue has magnitude at
/// most `tolerance` times the Frobenius norm of the form. A form that is
/// identically zero is always singular.
pub fn seifert_signature_at(v: &SeifertMatrix, x: Rational, tolerance: f64) -> Result<i64> {
    if x <= Rational::ZERO || x >= Rational::ONE {
        return Err(Error::OutOfRange(x));
    }
    let form = v.hermitian_form(x.to_f64());
    let norm = form.norm();
    let eigenvalues = form.symmetric_eigenvalues();
    let threshold = tolerance * norm;
    let mut signature = 0;
    for &lambda in eigenvalues.iter() {
        if lambda.abs() <= threshold {
            return Err(Error::NearSingularForm { x });
        }
        signature += if lambda > 0.0 { 1 } else { -1 };
    }
    Ok(signature)
}
