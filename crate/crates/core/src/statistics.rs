//! Counting formulas for decomposition sizes, with exhaustive tallies to
//! check them against.
//!
//! Notation: `ℓ` is a decomposition size (always odd), `j = |T^-|`, and
//! `c(m; n)` is the number of compositions of `n` into `m` positive parts.
//! Throughout, `a = (ℓ + 1) / 2` and `b = (ℓ - 1) / 2`.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::decomposition::spectrum_fast;
use crate::error::{Error, Result};
use crate::hypercube::{check_dimension, BoundaryClass, GroundSubset, Tope};

/// Largest `t` accepted by the exhaustive enumerators by default.
pub const DEFAULT_ENUMERATION_CAP: usize = 20;

/// `C(n, k)`, zero whenever `n < 0`, `k < 0` or `k > n`.
pub fn binomial(n: i64, k: i64) -> BigUint {
    if n < 0 || k < 0 || k > n {
        return BigUint::zero();
    }
    num_integer::binomial(BigUint::from(n as u64), BigUint::from(k as u64))
}

/// `c(m; n) = C(n - 1, m - 1)`, with `c(0; 0) = 1`.
pub fn comp_count(m: u64, n: u64) -> BigUint {
    match (m, n) {
        (0, 0) => BigUint::one(),
        (0, _) => BigUint::zero(),
        _ => binomial(n as i64 - 1, m as i64 - 1),
    }
}

fn check_odd_size(t: usize, l: usize, min: usize) -> Result<()> {
    check_dimension(t)?;
    if l.is_multiple_of(2) {
        return Err(Error::EvenSize(l));
    }
    if l < min || l > t {
        return Err(Error::OutOfRange {
            what: "l",
            value: l as i64,
            min: min as i64,
            max: t as i64,
        });
    }
    Ok(())
}

fn check_negatives(t: usize, j: usize) -> Result<()> {
    if j > t {
        return Err(Error::OutOfRange {
            what: "j",
            value: j as i64,
            min: 0,
            max: t as i64,
        });
    }
    Ok(())
}

/// Number of topes with `|Q(T, R)| = ℓ`: `2·C(t, ℓ)`.
pub fn count_topes_by_size(t: usize, l: usize) -> Result<BigUint> {
    check_odd_size(t, l, 1)?;
    Ok(binomial(t as i64, l as i64) * 2u32)
}

/// The closed forms for `|{T : |T^-| = j, |Q(T, R)| = ℓ}|`, in order:
///
/// 0. `2c(a;j)c(a;t-j) + c(a;j)c(b;t-j) + c(b;j)c(a;t-j)`
/// 1. `C(j-1,b)C(t-j,b) + C(t-j-1,b)C(j,b)`
/// 2. `c(a;j)c(a;t-j+1) + c(a;t-j)c(a;j+1)`
/// 3. form 0 evaluated at `t - j` (the `j <-> t - j` symmetry)
pub fn closed_form_counts(t: usize, j: usize, l: usize) -> Result<[BigUint; 4]> {
    check_odd_size(t, l, 3)?;
    check_negatives(t, j)?;
    let a = (l as u64).div_ceil(2);
    let b = (l as u64 - 1) / 2;
    let (j, t) = (j as u64, t as u64);

    let composition_form = |j: u64| {
        let k = t - j;
        comp_count(a, j) * comp_count(a, k) * 2u32
            + comp_count(a, j) * comp_count(b, k)
            + comp_count(b, j) * comp_count(a, k)
    };
    let (ji, ti, bi) = (j as i64, t as i64, b as i64);
    let binomial_form =
        binomial(ji - 1, bi) * binomial(ti - ji, bi) + binomial(ti - ji - 1, bi) * binomial(ji, bi);
    let shifted_form =
        comp_count(a, j) * comp_count(a, t - j + 1) + comp_count(a, t - j) * comp_count(a, j + 1);

    Ok([
        composition_form(j),
        binomial_form,
        shifted_form,
        composition_form(t - j),
    ])
}

/// `|{T : |T^-| = j, |Q(T, R)| = ℓ}|` for odd `ℓ >= 3`.
///
/// Zero outside `b <= j <= t - b`; inside, every closed form of
/// [`closed_form_counts`] is evaluated and required to agree.
pub fn count_by_negpart_and_size(t: usize, j: usize, l: usize) -> Result<BigUint> {
    check_odd_size(t, l, 3)?;
    check_negatives(t, j)?;
    let b = (l - 1) / 2;
    if j < b || j > t - b {
        return Ok(BigUint::zero());
    }
    let [first, rest @ ..] = closed_form_counts(t, j, l)?;
    for (k, other) in rest.iter().enumerate() {
        assert_eq!(
            &first,
            other,
            "closed form {} disagrees at t={t} j={j} l={l}",
            k + 1
        );
    }
    Ok(first)
}

/// Count of cycle vertices `±R^s` with `|T^-| = j`: 1 at `j ∈ {0, t}`, else 2.
pub fn cycle_vertex_count(t: usize, j: usize) -> Result<BigUint> {
    check_dimension(t)?;
    check_negatives(t, j)?;
    Ok(BigUint::from(if j == 0 || j == t { 1u32 } else { 2u32 }))
}

/// Formula count for any odd `ℓ`, including `ℓ = 1`.
pub fn formula_count(t: usize, j: usize, l: usize) -> Result<BigUint> {
    if l == 1 {
        cycle_vertex_count(t, j)
    } else {
        count_by_negpart_and_size(t, j, l)
    }
}

/// Refined counts of topes with `|Q(T, R)| = ℓ` by the boundary class of
/// `T^-` and, optionally, by `j = |T^-|`.
///
/// Totals: `C(t-1, ℓ)` for the one-sided classes, `C(t-1, ℓ-1)` otherwise.
/// Per `j`, outside the class's window the count is zero.
pub fn structured_count(
    t: usize,
    l: usize,
    class: BoundaryClass,
    j: Option<usize>,
) -> Result<BigUint> {
    check_odd_size(t, l, 3)?;
    let (ti, li) = (t as i64, l as i64);
    let Some(j) = j else {
        return Ok(match class {
            BoundaryClass::LeftOnly | BoundaryClass::RightOnly => binomial(ti - 1, li),
            BoundaryClass::BothEnds | BoundaryClass::Neither => binomial(ti - 1, li - 1),
        });
    };
    check_negatives(t, j)?;
    let a = l.div_ceil(2);
    let b = (l - 1) / 2;
    let (lo, hi) = match class {
        BoundaryClass::LeftOnly | BoundaryClass::RightOnly => (a, t - a),
        BoundaryClass::BothEnds => (a, t - b),
        BoundaryClass::Neither => (b, t - a),
    };
    if j < lo || j > hi {
        return Ok(BigUint::zero());
    }
    let (ji, bi) = (j as i64, b as i64);
    Ok(match class {
        BoundaryClass::LeftOnly | BoundaryClass::RightOnly => {
            binomial(ji - 1, bi) * binomial(ti - ji - 1, bi)
        }
        BoundaryClass::BothEnds => binomial(ji - 1, bi) * binomial(ti - ji - 1, bi - 1),
        BoundaryClass::Neither => binomial(ji - 1, bi - 1) * binomial(ti - ji - 1, bi),
    })
}

/// Number of `A ⊆ E_t` with `ϱ(A) = rho` intervals and `|{1,t} ∩ A| = hits`:
/// `2·C(t-1, 2ϱ-1)`, `C(t-1, 2ϱ-2)` or `C(t-1, 2ϱ)` for one, two or no hits.
pub fn subset_count_by_runs(t: usize, rho: usize, hits: usize) -> Result<BigUint> {
    check_dimension(t)?;
    if rho == 0 {
        return Err(Error::OutOfRange {
            what: "rho",
            value: 0,
            min: 1,
            max: t as i64,
        });
    }
    let (ti, r) = (t as i64, rho as i64);
    match hits {
        0 => Ok(binomial(ti - 1, 2 * r)),
        1 => Ok(binomial(ti - 1, 2 * r - 1) * 2u32),
        2 => Ok(binomial(ti - 1, 2 * (r - 1))),
        other => Err(Error::OutOfRange {
            what: "hits",
            value: other as i64,
            min: 0,
            max: 2,
        }),
    }
}

/// One `(j, ℓ)` cell of a [`CountTable`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountRow {
    pub j: usize,
    pub l: usize,
    pub count: BigUint,
}

/// Counts of topes by `(|T^-|, |Q(T, R)|)`, ordered by ascending `(ℓ, j)`.
/// Covers every odd `ℓ` in `1..=t` and every `j` in `0..=t`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    t: usize,
    rows: Vec<CountRow>,
}

impl CountTable {
    fn build(t: usize, mut count: impl FnMut(usize, usize) -> Result<BigUint>) -> Result<Self> {
        let mut rows = Vec::new();
        for l in (1..=t).step_by(2) {
            for j in 0..=t {
                rows.push(CountRow {
                    j,
                    l,
                    count: count(j, l)?,
                });
            }
        }
        Ok(Self { t, rows })
    }

    pub fn dim(&self) -> usize {
        self.t
    }

    pub fn rows(&self) -> &[CountRow] {
        &self.rows
    }

    pub fn get(&self, j: usize, l: usize) -> Option<&BigUint> {
        self.rows
            .iter()
            .find(|r| r.j == j && r.l == l)
            .map(|r| &r.count)
    }

    /// `Σ_j count(j, ℓ)`.
    pub fn column_total(&self, l: usize) -> BigUint {
        self.rows
            .iter()
            .filter(|r| r.l == l)
            .map(|r| &r.count)
            .sum()
    }

    pub fn total(&self) -> BigUint {
        self.rows.iter().map(|r| &r.count).sum()
    }

    /// Column totals equal `2·C(t, ℓ)` and the grand total equals `2^t`.
    pub fn satisfies_invariants(&self) -> bool {
        let columns_ok = (1..=self.t)
            .step_by(2)
            .all(|l| self.column_total(l) == binomial(self.t as i64, l as i64) * 2u32);
        columns_ok && self.total() == BigUint::one() << self.t
    }
}

/// The table of [`formula_count`] values.
pub fn formula_table(t: usize) -> Result<CountTable> {
    check_dimension(t)?;
    CountTable::build(t, |j, l| formula_count(t, j, l))
}

fn check_cap(t: usize, cap: usize) -> Result<()> {
    check_dimension(t)?;
    if t > cap || t > 62 {
        return Err(Error::CapExceeded { t, cap });
    }
    Ok(())
}

/// Exhaustive tally over all `2^t` topes with the default cap.
pub fn enumerate_statistics(t: usize) -> Result<CountTable> {
    enumerate_statistics_capped(t, DEFAULT_ENUMERATION_CAP)
}

/// Exhaustive tally over all `2^t` topes, computing `|Q|` with
/// [`spectrum_fast`]. Fails with `CapExceeded` above `cap`.
pub fn enumerate_statistics_capped(t: usize, cap: usize) -> Result<CountTable> {
    check_cap(t, cap)?;
    let width = t + 1;
    let tallies = (0..1u64 << t)
        .into_par_iter()
        .fold(
            || vec![0u64; width * width],
            |mut acc, mask| {
                let tope = Tope::from_negative_mask(t, mask).expect("mask below 2^t");
                let l = spectrum_fast(&tope).support_size();
                let j = mask.count_ones() as usize;
                let slot = &mut acc[l * width + j];
                *slot = slot.checked_add(1).expect("tally overflow");
                acc
            },
        )
        .reduce(
            || vec![0u64; width * width],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x = x.checked_add(y).expect("tally overflow");
                }
                a
            },
        );
    CountTable::build(t, |j, l| Ok(BigUint::from(tallies[l * width + j])))
}

/// Classification of a tope with nonempty negative part for the refined
/// (per boundary class) counts.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct BoundaryClassKey {
    pub class: BoundaryClass,
    /// `ϱ(T^-)`.
    pub rho: usize,
    /// `|T^-|`.
    pub j: usize,
    /// `|Q(T, R)|`.
    pub l: usize,
}

/// Exhaustive tally of all topes with nonempty negative part by
/// [`BoundaryClassKey`].
pub fn enumerate_boundary_classes(t: usize, cap: usize) -> Result<BTreeMap<BoundaryClassKey, u64>> {
    check_cap(t, cap)?;
    let tally = (1..1u64 << t)
        .into_par_iter()
        .fold(
            BTreeMap::new,
            |mut acc: BTreeMap<BoundaryClassKey, u64>, mask| {
                let a = GroundSubset::from_mask(t, mask).expect("mask below 2^t");
                let tope = Tope::with_negative_part(&a);
                let key = BoundaryClassKey {
                    class: a.boundary_class(),
                    rho: a.interval_partition().expect("nonempty").rho(),
                    j: a.len(),
                    l: spectrum_fast(&tope).support_size(),
                };
                *acc.entry(key).or_default() += 1;
                acc
            },
        )
        .reduce(BTreeMap::new, |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        });
    Ok(tally)
}
