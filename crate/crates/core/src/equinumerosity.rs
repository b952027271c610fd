//! Criteria for `|Q(T, R)| = |Q(-_A T, R)|` without computing either
//! decomposition.

use std::fmt;

use crate::cycle::omega_entry;
use crate::decomposition::spectrum_fast;
use crate::error::{Error, Result};
use crate::hypercube::{check_same_dimension, GroundSubset, Tope};

/// Outcome of the boundary-sum criterion for a tope `T` and flip set `A`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct CriterionReport {
    /// Whether the criterion predicts equal decomposition sizes.
    pub equal: bool,
    /// `Σ T(i)·T(i+1)` over `i ∈ [t-1]` with `|{i, i+1} ∩ A| = 1`.
    pub lhs_sum: i64,
    /// `T(1)·T(t)` when `|{1, t} ∩ A| = 1`, otherwise 0.
    pub rhs: i64,
    /// `|{1, t} ∩ A| = 1`.
    pub one_boundary_hit: bool,
    /// Direct size comparison, when requested.
    pub direct_equal: Option<bool>,
}

impl CriterionReport {
    /// True unless the direct comparison was run and disagrees.
    pub fn is_consistent(&self) -> bool {
        self.direct_equal.is_none_or(|d| d == self.equal)
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "case: {}",
            if self.one_boundary_hit { "i" } else { "ii" }
        )?;
        writeln!(f, "lhs_sum: {}", self.lhs_sum)?;
        writeln!(f, "rhs: {}", self.rhs)?;
        writeln!(f, "equal: {}", self.equal)?;
        if let Some(direct) = self.direct_equal {
            writeln!(f, "direct_equal: {direct}")?;
        }
        Ok(())
    }
}

/// Decides `|Q(T, R)| = |Q(-_A T, R)|` for a proper subset `A` from the
/// signs of `T` across the boundaries of `A`.
pub fn equal_size_criterion(tope: &Tope, a: &GroundSubset) -> Result<CriterionReport> {
    check_same_dimension(tope.dim(), a.dim())?;
    let t = tope.dim();
    if a.is_full() {
        return Err(Error::NotProperSubset(t));
    }
    let lhs_sum = (1..t)
        .filter(|&i| a.contains(i) != a.contains(i + 1))
        .map(|i| i64::from(tope.get(i) * tope.get(i + 1)))
        .sum();
    let one_boundary_hit = a.contains(1) != a.contains(t);
    let rhs = if one_boundary_hit {
        i64::from(tope.get(1) * tope.get(t))
    } else {
        0
    };
    Ok(CriterionReport {
        equal: lhs_sum == rhs,
        lhs_sum,
        rhs,
        one_boundary_hit,
        direct_equal: None,
    })
}

/// [`equal_size_criterion`] plus the direct comparison of both sizes.
pub fn equal_size_criterion_with_oracle(tope: &Tope, a: &GroundSubset) -> Result<CriterionReport> {
    let mut report = equal_size_criterion(tope, a)?;
    let other = tope.reorient(a)?;
    report.direct_equal = Some(direct_equal_size(tope, &other)?);
    Ok(report)
}

/// Compares `|Q(T', R)|` and `|Q(T'', R)|` by computing both spectra.
pub fn direct_equal_size(first: &Tope, second: &Tope) -> Result<bool> {
    check_same_dimension(first.dim(), second.dim())?;
    Ok(spectrum_fast(first).support_size() == spectrum_fast(second).support_size())
}

/// `4 Σ_{i<j, |{i,j} ∩ S|=1} T'(i)·T'(j)·ω(i,j)` with `S = S(T', T'')`.
///
/// Zero exactly when `|Q(T', R)| = |Q(T'', R)|`; in fact the value equals
/// `|Q(T', R)| - |Q(T'', R)|`.
pub fn omega_indicator(first: &Tope, second: &Tope) -> Result<i64> {
    let separation = first.separation_set(second)?;
    let t = first.dim();
    let mut total = 0i64;
    for i in 1..t {
        for j in i + 1..=t {
            if separation.contains(i) == separation.contains(j) {
                continue;
            }
            let w = omega_entry(t, i, j)?;
            if w != 0 {
                total += i64::from(first.get(i) * first.get(j)) * w;
            }
        }
    }
    Ok(total)
}

/// Structural test of `|Q(-_A T(+), R)| = |Q(-_B T(+), R)|` from interval
/// counts and boundary contact of the nonempty sets `A` and `B`.
pub fn interval_count_equal_size(a: &GroundSubset, b: &GroundSubset) -> Result<bool> {
    check_same_dimension(a.dim(), b.dim())?;
    let rho_a = a.interval_partition()?.rho();
    let rho_b = b.interval_partition()?.rho();
    let touches_a = a.boundary_class().touches_boundary();
    let touches_b = b.boundary_class().touches_boundary();
    Ok(match (touches_a, touches_b) {
        (true, true) | (false, false) => rho_a == rho_b,
        (true, false) => rho_b + 1 == rho_a,
        (false, true) => rho_a + 1 == rho_b,
    })
}

/// Oracle for [`interval_count_equal_size`]: compares the spectra of
/// `-_A T(+)` and `-_B T(+)` directly.
pub fn direct_equal_size_of_flips(a: &GroundSubset, b: &GroundSubset) -> Result<bool> {
    direct_equal_size(&Tope::with_negative_part(a), &Tope::with_negative_part(b))
}
