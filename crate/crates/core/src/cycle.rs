//! The distinguished symmetric `2t`-cycle of `H(t, 2)` and its exact matrices.
//!
//! The cycle is `R^0 = T(+)`, `R^s = -_[s] R^0` for `1 <= s <= t - 1`, and
//! `R^{k+t} = -R^k`. Cycle positions are 0-based (`R^0 .. R^{2t-1}`); matrix
//! rows and columns are 1-based, so row `i` of `M` is `R^{i-1}`.
//!
//! Matrices are returned with the smallest denominator that makes them
//! integral: `M` and `M·Mᵀ` over 1, `M⁻¹` over 2, `M⁻¹·(M⁻¹)ᵀ` over 4.

use crate::error::Result;
use crate::hypercube::{check_dimension, check_index, Tope};
use crate::matrix::ScaledIntMatrix;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymmetricCycle {
    t: usize,
    vertices: Vec<Tope>,
}

impl SymmetricCycle {
    pub fn build(t: usize) -> Result<Self> {
        check_dimension(t)?;
        let mut vertices = Vec::with_capacity(2 * t);
        for s in 0..t {
            let signs = (1..=t).map(|e| if e <= s { -1 } else { 1 }).collect();
            vertices.push(Tope::from_signs_unchecked(signs));
        }
        for k in 0..t {
            let antipode = -&vertices[k];
            vertices.push(antipode);
        }
        Ok(Self { t, vertices })
    }

    pub fn dim(&self) -> usize {
        self.t
    }

    /// All `2t` vertices in cycle order.
    pub fn vertices(&self) -> &[Tope] {
        &self.vertices
    }

    /// `R^k` for `k` in `0..2t`; indices wrap around the cycle.
    pub fn vertex(&self, k: usize) -> &Tope {
        &self.vertices[k % (2 * self.t)]
    }

    /// The basis `R^0, ..., R^{t-1}` (the rows of `M`).
    pub fn basis(&self) -> &[Tope] {
        &self.vertices[..self.t]
    }

    /// Cycle position of `sign · R^index` for `index` in `0..t`.
    pub fn signed_position(&self, sign: i8, index: usize) -> usize {
        assert!(index < self.t, "basis index {index} out of range");
        if sign > 0 {
            index
        } else {
            index + self.t
        }
    }

    /// Position of `tope` on the cycle, if it is a cycle vertex.
    pub fn position_of(&self, tope: &Tope) -> Option<usize> {
        self.vertices.iter().position(|v| v == tope)
    }

    /// The matrix `M` whose rows are `R^0, ..., R^{t-1}`.
    pub fn matrix(&self) -> ScaledIntMatrix {
        ScaledIntMatrix::from_fn(self.t, self.t, 1, |i, j| self.vertices[i - 1].get(j).into())
    }
}

/// The matrix `M` for dimension `t`.
pub fn cycle_matrix(t: usize) -> Result<ScaledIntMatrix> {
    Ok(SymmetricCycle::build(t)?.matrix())
}

/// Row `i` of `2·M⁻¹` as two `(column, value)` pairs:
/// `σ(i) - σ(i+1)` for `i < t` and `σ(1) + σ(t)` for `i = t`.
pub fn inverse_row(t: usize, i: usize) -> Result<[(usize, i64); 2]> {
    check_dimension(t)?;
    check_index(i, t)?;
    Ok(if i < t {
        [(i, 1), (i + 1, -1)]
    } else {
        [(1, 1), (t, 1)]
    })
}

/// `M⁻¹` as integers over denominator 2.
pub fn inverse_rows(t: usize) -> Result<ScaledIntMatrix> {
    check_dimension(t)?;
    let mut entries = vec![0i64; t * t];
    for i in 1..=t {
        for (j, v) in inverse_row(t, i)? {
            entries[(i - 1) * t + (j - 1)] = v;
        }
    }
    ScaledIntMatrix::new(t, t, 2, entries)
}

/// Entry `(i, j)` of the Toeplitz matrix `M·Mᵀ`, namely `t - 2|j - i|`.
pub fn gram_entry(t: usize, i: usize, j: usize) -> Result<i64> {
    check_dimension(t)?;
    check_index(i, t)?;
    check_index(j, t)?;
    Ok(t as i64 - 2 * (j as i64 - i as i64).abs())
}

/// `M·Mᵀ` from the closed form.
pub fn gram_matrix(t: usize) -> Result<ScaledIntMatrix> {
    check_dimension(t)?;
    Ok(ScaledIntMatrix::from_fn(t, t, 1, |i, j| {
        t as i64 - 2 * (j as i64 - i as i64).abs()
    }))
}

/// `4·ω(i, j)`, where `ω(i, j) = <(M⁻¹)_i, (M⁻¹)_j>`, from the row formula
/// for `M⁻¹`.
pub fn omega_entry(t: usize, i: usize, j: usize) -> Result<i64> {
    let row_i = inverse_row(t, i)?;
    let row_j = inverse_row(t, j)?;
    Ok(row_i
        .iter()
        .map(|&(ci, vi)| {
            row_j
                .iter()
                .filter(|&&(cj, _)| cj == ci)
                .map(|&(_, vj)| vi * vj)
                .sum::<i64>()
        })
        .sum())
}

/// `M⁻¹·(M⁻¹)ᵀ` over denominator 4, built entrywise from [`omega_entry`].
pub fn omega_matrix(t: usize) -> Result<ScaledIntMatrix> {
    check_dimension(t)?;
    let mut entries = Vec::with_capacity(t * t);
    for i in 1..=t {
        for j in 1..=t {
            entries.push(omega_entry(t, i, j)?);
        }
    }
    ScaledIntMatrix::new(t, t, 4, entries)
}
