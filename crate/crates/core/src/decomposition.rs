//! Spectra `x(T) = T·M⁻¹` and decompositions `Q(T, R)`.
//!
//! The spectrum of a tope is its coordinate row vector in the basis
//! `R^0, ..., R^{t-1}`; its entries lie in `{-1, 0, 1}`. The decomposition
//! `Q(T, R) = {x_i · R^{i-1} : x_i != 0}` is the unique inclusion-minimal set
//! of cycle vertices summing to `T`, and `|Q(T, R)| = ‖x‖²`.
//!
//! Three independent routes compute the spectrum:
//!
//! * [`spectrum_dense`]: exact dense product with `2·M⁻¹`, halved.
//! * [`spectrum_fast`]: `x_1 = (T(1) + T(t)) / 2`, `x_j = (T(j) - T(j-1)) / 2`.
//! * [`spectrum_intervals`]: the four boundary cases on the interval
//!   partition of the negative part.

use std::fmt;
use std::ops::Neg;

use crate::cycle::{gram_entry, inverse_row, inverse_rows};
use crate::error::{Error, Result};
use crate::hypercube::{
    check_dimension, check_index, check_same_dimension, BoundaryClass, GroundSubset, Tope,
};
use crate::matrix::ScaledIntMatrix;

/// Coordinates `x_1, ..., x_t` of a tope in the cycle basis.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Spectrum {
    coords: Vec<i8>,
}

impl Spectrum {
    /// Validates that `coords` is the spectrum of some tope.
    pub fn new(coords: Vec<i8>) -> Result<Self> {
        check_dimension(coords.len())?;
        if let Some(bad) = coords.iter().find(|c| !(-1..=1).contains(*c)) {
            return Err(Error::InvalidSpectrum(format!(
                "coordinate {bad} not in {{-1,0,1}}"
            )));
        }
        let spectrum = Self { coords };
        spectrum.to_tope()?;
        Ok(spectrum)
    }

    fn from_accumulator(acc: &[i64]) -> Result<Self> {
        let coords = acc
            .iter()
            .map(|&v| match v {
                -1..=1 => Ok(v as i8),
                other => Err(Error::InvalidSpectrum(format!(
                    "coordinate {other} not in {{-1,0,1}}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { coords })
    }

    /// The unit vector `σ(s)`, the spectrum of `R^{s-1}`.
    pub fn unit(t: usize, s: usize) -> Result<Self> {
        check_dimension(t)?;
        check_index(s, t)?;
        let mut coords = vec![0; t];
        coords[s - 1] = 1;
        Ok(Self { coords })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[i8] {
        &self.coords
    }

    /// `x_i` for `i` in `1..=t`.
    pub fn get(&self, i: usize) -> i8 {
        self.coords[i - 1]
    }

    /// `<x, T(+)>`; equals `T(t)` for the spectrum of `T`.
    pub fn sum(&self) -> i64 {
        self.coords.iter().map(|&c| i64::from(c)).sum()
    }

    /// Number of nonzero coordinates, i.e. `|Q(T, R)|`.
    pub fn support_size(&self) -> usize {
        self.coords.iter().filter(|&&c| c != 0).count()
    }

    /// `‖x‖²`.
    pub fn norm_sq(&self) -> i64 {
        self.coords.iter().map(|&c| i64::from(c * c)).sum()
    }

    /// `Σ x_i · i`.
    pub fn weighted_index_sum(&self) -> i64 {
        self.coords
            .iter()
            .enumerate()
            .map(|(k, &c)| i64::from(c) * (k as i64 + 1))
            .sum()
    }

    /// `x · M` in O(t): `T(e) = Σ_{i<=e} x_i - Σ_{i>e} x_i`.
    pub fn reconstruct(&self) -> Vec<i64> {
        let total = self.sum();
        let mut prefix = 0i64;
        self.coords
            .iter()
            .map(|&c| {
                prefix += i64::from(c);
                2 * prefix - total
            })
            .collect()
    }

    /// The tope `x · M`, or an error if it is not a sign vector.
    pub fn to_tope(&self) -> Result<Tope> {
        Tope::from_i64(&self.reconstruct())
            .map_err(|_| Error::InvalidSpectrum("x·M is not a sign vector".to_string()))
    }

    pub fn decomposition(&self) -> Decomposition {
        Decomposition {
            t: self.dim(),
            terms: self
                .coords
                .iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(index, &sign)| Term { sign, index })
                .collect(),
        }
    }

    /// In-place form of [`spectrum_update`]; touches only `O(|s|)` coordinates.
    pub fn apply_reorientation(&mut self, before: &Tope, s: &GroundSubset) -> Result<()> {
        check_same_dimension(self.dim(), before.dim())?;
        check_same_dimension(self.dim(), s.dim())?;
        let t = self.dim();
        // x'' = x' - Σ_{s ∈ S} T'(s) · (row s of 2·M⁻¹)
        for e in s.iter() {
            let sign = before.get(e);
            for (col, v) in inverse_row(t, e)? {
                self.coords[col - 1] -= sign * v as i8;
            }
        }
        for e in s.iter() {
            for (col, _) in inverse_row(t, e)? {
                let c = self.coords[col - 1];
                if !(-1..=1).contains(&c) {
                    return Err(Error::InvalidSpectrum(format!(
                        "update produced coordinate {c} at {col}; \
                         the input spectrum does not belong to the input tope"
                    )));
                }
            }
        }
        Ok(())
    }
}

impl Neg for &Spectrum {
    type Output = Spectrum;

    fn neg(self) -> Spectrum {
        Spectrum {
            coords: self.coords.iter().map(|&c| -c).collect(),
        }
    }
}

impl Neg for Spectrum {
    type Output = Spectrum;

    fn neg(self) -> Spectrum {
        -&self
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (k, c) in self.coords.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

/// One signed cycle vertex `sign · R^index`, with `index` in `0..t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Term {
    pub sign: i8,
    pub index: usize,
}

/// The decomposition set `Q(T, R)`, ordered by ascending cycle index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Decomposition {
    t: usize,
    terms: Vec<Term>,
}

impl Decomposition {
    pub fn dim(&self) -> usize {
        self.t
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn size(&self) -> usize {
        self.terms.len()
    }

    /// Positions on the `2t`-cycle: `R^index` or `R^{index+t} = -R^index`.
    pub fn cycle_positions(&self) -> Vec<usize> {
        let mut positions: Vec<usize> = self
            .terms
            .iter()
            .map(|term| {
                if term.sign > 0 {
                    term.index
                } else {
                    term.index + self.t
                }
            })
            .collect();
        positions.sort_unstable();
        positions
    }

    /// Entrywise sum of the signed cycle vertices.
    pub fn vertex_sum(&self) -> Vec<i64> {
        (1..=self.t)
            .map(|e| {
                self.terms
                    .iter()
                    .map(|term| {
                        // R^k(e) = -1 for e <= k, +1 otherwise
                        let r = if e <= term.index { -1 } else { 1 };
                        i64::from(term.sign) * r
                    })
                    .sum()
            })
            .collect()
    }
}

fn exact_half(n: i8) -> i8 {
    assert!(
        n % 2 == 0,
        "non-exact halving of {n}: corrupted sign vector"
    );
    n / 2
}

/// `x = T·M⁻¹` by a dense exact product with the given `2·M⁻¹`.
pub fn spectrum_dense_with(tope: &Tope, inverse: &ScaledIntMatrix) -> Result<Spectrum> {
    check_same_dimension(tope.dim(), inverse.rows())?;
    let denom = inverse.denom();
    let numerators = inverse.vec_mul(&tope.to_i64())?;
    let coords = numerators
        .into_iter()
        .map(|n| {
            if n % denom != 0 {
                return Err(Error::InvalidSpectrum(format!(
                    "non-exact division {n}/{denom}"
                )));
            }
            Ok(n / denom)
        })
        .collect::<Result<Vec<_>>>()?;
    Spectrum::from_accumulator(&coords)
}

/// `x = T·M⁻¹` via a freshly built `2·M⁻¹`. O(t²).
pub fn spectrum_dense(tope: &Tope) -> Spectrum {
    let inverse = inverse_rows(tope.dim()).expect("tope dimension is valid");
    spectrum_dense_with(tope, &inverse).expect("T·M⁻¹ is exact for every tope")
}

/// `x = T·M⁻¹` in O(t) from the column structure of `M⁻¹`.
pub fn spectrum_fast(tope: &Tope) -> Spectrum {
    let s = tope.signs();
    let t = s.len();
    let mut coords = Vec::with_capacity(t);
    coords.push(exact_half(s[0] + s[t - 1]));
    coords.extend(s.windows(2).map(|w| exact_half(w[1] - w[0])));
    Spectrum { coords }
}

/// `x = T·M⁻¹` from the interval partition of `T^-`, by boundary class.
pub fn spectrum_intervals(tope: &Tope) -> Spectrum {
    let t = tope.dim();
    let a = tope.negative_part();
    let mut coords = vec![0i8; t];
    let mut put = |e: usize, v: i8| {
        debug_assert_eq!(coords[e - 1], 0, "interval endpoints overlap");
        coords[e - 1] = v;
    };
    let Ok(partition) = a.interval_partition() else {
        put(1, 1);
        return Spectrum { coords };
    };
    let rho = partition.rho();
    let ends: Vec<usize> = partition.ends().collect();
    let starts: Vec<usize> = partition.starts().collect();
    match BoundaryClass::of(&a) {
        BoundaryClass::LeftOnly => {
            ends.iter().for_each(|&j| put(j + 1, 1));
            starts[1..].iter().for_each(|&i| put(i, -1));
        }
        BoundaryClass::BothEnds | BoundaryClass::RightOnly => {
            ends[..rho - 1].iter().for_each(|&j| put(j + 1, 1));
            starts.iter().for_each(|&i| put(i, -1));
        }
        BoundaryClass::Neither => {
            put(1, 1);
            ends.iter().for_each(|&j| put(j + 1, 1));
            starts.iter().for_each(|&i| put(i, -1));
        }
    }
    Spectrum { coords }
}

/// `|Q(-_A T(+), R)|` from the interval count alone:
/// `2ϱ - 1` if `A` meets `{1, t}`, `2ϱ + 1` otherwise, and 1 for `A = ∅`.
pub fn size_from_intervals(a: &GroundSubset) -> usize {
    match a.interval_partition() {
        Err(_) => 1,
        Ok(p) if a.boundary_class().touches_boundary() => 2 * p.rho() - 1,
        Ok(p) => 2 * p.rho() + 1,
    }
}

/// `Q(T, R)`, from the fast spectrum.
pub fn decomposition_set(tope: &Tope) -> Decomposition {
    spectrum_fast(tope).decomposition()
}

/// `x(T'')` for `T'' = -_S T'` from `x(T')`:
/// `x'' = x' - 2 (Σ_{s ∈ S} T'(s) σ(s)) · M⁻¹`.
pub fn spectrum_update(x: &Spectrum, before: &Tope, s: &GroundSubset) -> Result<Spectrum> {
    let mut next = x.clone();
    next.apply_reorientation(before, s)?;
    Ok(next)
}

/// `y(s) = x(-_s T(+)) = σ(1) - 2 σ(s) · M⁻¹`.
pub fn y_vector(s: usize, t: usize) -> Result<Spectrum> {
    check_dimension(t)?;
    check_index(s, t)?;
    let mut coords = vec![0i8; t];
    if s == 1 {
        coords[1] = 1;
    } else if s < t {
        coords[0] = 1;
        coords[s - 1] = -1;
        coords[s] = 1;
    } else {
        coords[t - 1] = -1;
    }
    Ok(Spectrum { coords })
}

/// `(1 - |A|)·σ(1) + Σ_{s ∈ A} y(s)`, which is `x(-_A T(+))`.
pub fn spectrum_from_y_sum(a: &GroundSubset) -> Spectrum {
    let t = a.dim();
    let mut acc = vec![0i64; t];
    acc[0] = 1 - a.len() as i64;
    for s in a.iter() {
        let y = y_vector(s, t).expect("member of the ground set");
        for (slot, &c) in acc.iter_mut().zip(y.coords()) {
            *slot += i64::from(c);
        }
    }
    Spectrum::from_accumulator(&acc).expect("y-sum of a subset is a spectrum")
}

/// `x(-_A T(+))` from the four boundary-case sums over `2·(M⁻¹)_i`.
pub fn spectrum_boundary_cases(a: &GroundSubset) -> Spectrum {
    let t = a.dim();
    let mut acc = vec![0i64; t + 1];
    let class = a.boundary_class();
    match class {
        BoundaryClass::LeftOnly => acc[2] += 1,
        BoundaryClass::BothEnds => {
            acc[1] -= 1;
            acc[2] += 1;
            acc[t] -= 1;
        }
        BoundaryClass::Neither => acc[1] += 1,
        BoundaryClass::RightOnly => acc[t] -= 1,
    }
    for i in a.iter() {
        let skip = match class {
            BoundaryClass::LeftOnly => i == 1,
            BoundaryClass::BothEnds => i == 1 || i == t,
            BoundaryClass::Neither => false,
            BoundaryClass::RightOnly => i == t,
        };
        if !skip {
            // - (σ(i) - σ(i+1)), with i < t in every branch
            acc[i] -= 1;
            acc[i + 1] += 1;
        }
    }
    Spectrum::from_accumulator(&acc[1..]).expect("boundary-case sum is a spectrum")
}

/// `r · (2·M⁻¹)` in O(t): `y_1 = r_1 + r_t`, `y_j = r_j - r_{j-1}`.
fn times_double_inverse(r: &[i64]) -> Vec<i64> {
    let t = r.len();
    let mut out = Vec::with_capacity(t);
    out.push(r[0] + r[t - 1]);
    out.extend(r.windows(2).map(|w| w[1] - w[0]));
    out
}

/// `|Q(T', R)| - |Q(T'', R)|` as
/// `4 <(T' - D)·M⁻¹, D·M⁻¹>` with `D = Σ_{s ∈ S(T',T'')} T'(s) σ(s)`.
pub fn size_difference(first: &Tope, second: &Tope) -> Result<i64> {
    let separation = first.separation_set(second)?;
    let mut flipped = vec![0i64; first.dim()];
    let mut kept = first.to_i64();
    for s in separation.iter() {
        flipped[s - 1] = kept[s - 1];
        kept[s - 1] = 0;
    }
    let u = times_double_inverse(&kept);
    let v = times_double_inverse(&flipped);
    Ok(u.iter().zip(&v).map(|(a, b)| a * b).sum())
}

/// Negative-part statistics recovered from spectra alone.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct NegPartStats {
    /// `|T^-|` for the first spectrum.
    pub negatives: usize,
    /// `(|T'^- ∩ T''^-|, |T'^- ∪ T''^-|)` when a second spectrum is given.
    pub meet_join: Option<(usize, usize)>,
}

fn sign_sum(x: &Spectrum) -> Result<i64> {
    match x.sum() {
        s @ (-1 | 1) => Ok(s),
        other => Err(Error::InvalidSpectrum(format!(
            "coordinate sum {other} not in {{-1,1}}"
        ))),
    }
}

fn exact_quarter(n: i64) -> usize {
    assert!(
        n % 4 == 0 && n >= 0,
        "{n} is not a nonnegative multiple of 4"
    );
    (n / 4) as usize
}

/// `|T^-|` and, optionally, `|T'^- ∩ T''^-|`, `|T'^- ∪ T''^-|`, from the
/// spectra via the cycle Gram matrix `M·Mᵀ`.
pub fn negpart_stats_from_spectrum(x: &Spectrum, other: Option<&Spectrum>) -> Result<NegPartStats> {
    let t = x.dim() as i64;
    let sum = sign_sum(x)?;
    let weighted = x.weighted_index_sum();
    let negatives = if sum == -1 {
        t + 1 + weighted
    } else {
        weighted - 1
    };

    let meet_join = match other {
        None => None,
        Some(y) => {
            check_same_dimension(x.dim(), y.dim())?;
            let other_sum = sign_sum(y)?;
            // <x'·M, x''·M> over the supports, via t - 2|j - i|
            let mut cross = 0i64;
            for (i, &a) in x.coords().iter().enumerate().filter(|(_, &a)| a != 0) {
                for (j, &b) in y.coords().iter().enumerate().filter(|(_, &b)| b != 0) {
                    cross += i64::from(a * b) * gram_entry(x.dim(), i + 1, j + 1)?;
                }
            }
            let w = 2 * (weighted + y.weighted_index_sum());
            let (meet4, join4) = match (sum, other_sum) {
                (-1, -1) => (3 * t + 4 + cross + w, 5 * t + 4 - cross + w),
                (1, 1) => (-t - 4 + cross + w, t - 4 - cross + w),
                _ => (t + cross + w, 3 * t - cross + w),
            };
            Some((exact_quarter(meet4), exact_quarter(join4)))
        }
    };

    Ok(NegPartStats {
        negatives: usize::try_from(negatives).map_err(|_| {
            Error::InvalidSpectrum(format!("negative-part size {negatives} is negative"))
        })?,
        meet_join,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn tope(s: &str) -> Tope {
        s.parse().unwrap()
    }

    fn spec(c: &[i8]) -> Spectrum {
        Spectrum::new(c.to_vec()).unwrap()
    }

    fn subset(t: usize, members: &[usize]) -> GroundSubset {
        GroundSubset::new(t, members.iter().copied()).unwrap()
    }

    fn all_routes(t: &Tope) -> [Spectrum; 3] {
        [spectrum_dense(t), spectrum_fast(t), spectrum_intervals(t)]
    }

    #[test]
    fn cycle_vertices_have_unit_spectra() {
        let cycle = crate::cycle::SymmetricCycle::build(6).unwrap();
        for s in 1..=6 {
            for x in all_routes(cycle.vertex(s - 1)) {
                assert_eq!(x, Spectrum::unit(6, s).unwrap());
            }
        }
    }

    #[test]
    fn negative_tope_is_minus_first_unit() {
        for x in all_routes(&Tope::negative(5).unwrap()) {
            assert_eq!(x, -Spectrum::unit(5, 1).unwrap());
        }
        assert_eq!(spectrum_fast(&tope("---")).coords(), &[-1, 0, 0]);
    }

    #[test]
    fn interval_flip_example() {
        for x in all_routes(&tope("+--++")) {
            assert_eq!(x.coords(), &[1, -1, 0, 1, 0]);
        }
        for x in all_routes(&tope("+--+")) {
            assert_eq!(x.coords(), &[1, -1, 0, 1]);
        }
        assert_eq!(
            spectrum_fast(&Tope::positive(4).unwrap()).coords(),
            &[1, 0, 0, 0]
        );
    }

    #[test]
    fn boundary_case_examples() {
        // case (i), A = [1,2]
        let x = spectrum_intervals(&tope("--++++"));
        assert_eq!(x, Spectrum::unit(6, 3).unwrap());
        assert_eq!(x.support_size(), 1);

        // case (ii), A = {1,3,4,6}
        let t = tope("-+--+-");
        let x = spectrum_intervals(&t);
        assert_eq!(x.coords(), &[-1, 1, -1, 0, 1, -1]);
        assert_eq!(x, spectrum_dense(&t));
        assert_eq!(x.support_size(), 5);

        // case (iv), A = [4,5]
        let x = spectrum_intervals(&tope("+++--"));
        assert_eq!(x, -Spectrum::unit(5, 4).unwrap());
    }

    #[test]
    fn decomposition_examples() {
        let d = decomposition_set(&Tope::positive(4).unwrap());
        assert_eq!(d.terms(), &[Term { sign: 1, index: 0 }]);
        let d = decomposition_set(&Tope::negative(4).unwrap());
        assert_eq!(d.terms(), &[Term { sign: -1, index: 0 }]);

        let d = decomposition_set(&tope("+--++"));
        assert_eq!(
            d.terms(),
            &[
                Term { sign: 1, index: 0 },
                Term { sign: -1, index: 1 },
                Term { sign: 1, index: 3 },
            ]
        );
        assert_eq!(d.size(), 3);
        assert_eq!(d.vertex_sum(), vec![1, -1, -1, 1, 1]);
        assert_eq!(d.cycle_positions(), vec![0, 3, 6]);
    }

    #[test]
    fn update_examples() {
        let plus = Tope::positive(4).unwrap();
        let x = spectrum_fast(&plus);
        assert_eq!(
            spectrum_update(&x, &plus, &GroundSubset::empty(4).unwrap()).unwrap(),
            x
        );
        let x2 = spectrum_update(&x, &plus, &subset(4, &[2])).unwrap();
        assert_eq!(x2.coords(), &[1, -1, 1, 0]);

        // reorientation form: from T(+) with S = T^-
        let target = tope("-+--+");
        let from_plus = spectrum_update(
            &spectrum_fast(&Tope::positive(5).unwrap()),
            &Tope::positive(5).unwrap(),
            &target.negative_part(),
        )
        .unwrap();
        assert_eq!(from_plus, spectrum_dense(&target));
    }

    #[test]
    fn update_detects_mismatched_inputs() {
        let plus = Tope::positive(4).unwrap();
        let wrong = spectrum_fast(&tope("-+++"));
        assert!(matches!(
            spectrum_update(&wrong, &plus, &subset(4, &[1, 4])),
            Err(Error::InvalidSpectrum(_))
        ));
        assert!(matches!(
            spectrum_update(&spectrum_fast(&plus), &plus, &subset(5, &[1])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn y_vector_examples() {
        assert_eq!(y_vector(1, 4).unwrap().coords(), &[0, 1, 0, 0]);
        assert_eq!(y_vector(3, 5).unwrap().coords(), &[1, 0, -1, 1, 0]);
        assert_eq!(y_vector(4, 4).unwrap().coords(), &[0, 0, 0, -1]);
        assert_eq!(
            y_vector(5, 4),
            Err(Error::IndexOutOfRange { index: 5, t: 4 })
        );
    }

    #[test]
    fn y_sum_examples() {
        assert_eq!(
            spectrum_from_y_sum(&GroundSubset::empty(4).unwrap()),
            Spectrum::unit(4, 1).unwrap()
        );
        assert_eq!(
            spectrum_from_y_sum(&subset(5, &[3])),
            y_vector(3, 5).unwrap()
        );
        let x = spectrum_from_y_sum(&subset(4, &[1, 4]));
        assert_eq!(x.coords(), &[-1, 1, 0, -1]);
        assert_eq!(x, spectrum_dense(&tope("-++-")));
    }

    #[test]
    fn size_difference_examples() {
        let plus = Tope::positive(3).unwrap();
        assert_eq!(size_difference(&plus, &plus).unwrap(), 0);
        assert_eq!(spectrum_fast(&tope("+-+")).coords(), &[1, -1, 1]);
        assert_eq!(size_difference(&plus, &tope("+-+")).unwrap(), -2);
        assert_eq!(
            size_difference(&plus, &Tope::negative(3).unwrap()).unwrap(),
            0
        );
    }

    #[test]
    fn negpart_stats_examples() {
        let stats = negpart_stats_from_spectrum(&Spectrum::unit(5, 1).unwrap(), None).unwrap();
        assert_eq!(stats.negatives, 0);
        let minus = -Spectrum::unit(5, 1).unwrap();
        assert_eq!(
            negpart_stats_from_spectrum(&minus, None).unwrap().negatives,
            5
        );

        let minus4 = -Spectrum::unit(4, 1).unwrap();
        let stats = negpart_stats_from_spectrum(&minus4, Some(&minus4)).unwrap();
        assert_eq!(stats.negatives, 4);
        assert_eq!(stats.meet_join, Some((4, 4)));
    }

    #[test]
    fn spectrum_validation() {
        assert!(matches!(
            Spectrum::new(vec![1, 1, 0]),
            Err(Error::InvalidSpectrum(_))
        ));
        assert!(matches!(
            Spectrum::new(vec![2, 0, 0]),
            Err(Error::InvalidSpectrum(_))
        ));
        assert_eq!(spec(&[1, -1, 1]).to_tope().unwrap(), tope("+-+"));
    }

    #[test]
    fn size_law_from_intervals() {
        assert_eq!(size_from_intervals(&GroundSubset::empty(6).unwrap()), 1);
        assert_eq!(size_from_intervals(&subset(6, &[1, 2])), 1);
        assert_eq!(size_from_intervals(&subset(6, &[3, 4])), 3);
        assert_eq!(size_from_intervals(&subset(6, &[1, 3, 4, 6])), 5);
    }
}
