//! Vertices of the hypercube graph `H(t, 2)` and subsets of the ground set.
//!
//! A [`Tope`] is a row vector over `{+1, -1}` of length `t >= 3`. Coordinates
//! are addressed by `e` in the ground set `E_t = {1, ..., t}`; every public
//! accessor in this crate is 1-based. A [`GroundSubset`] is a subset of
//! `E_t` and doubles as a flip set, a negative part or a separation set.
//!
//! Bitmask convention: whenever a tope is packed into an integer mask
//! (see [`Tope::from_negative_mask`]), bit `e - 1` is set exactly when
//! `T(e) = -1`. A sign `+1` is bit 0, a sign `-1` is bit 1.

use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Smallest supported dimension.
pub const MIN_DIMENSION: usize = 3;

/// Largest dimension for which topes can be packed into a `u64` mask.
pub const MAX_MASK_DIMENSION: usize = 63;

pub(crate) fn check_dimension(t: usize) -> Result<()> {
    if t < MIN_DIMENSION {
        Err(Error::DimensionTooSmall(t))
    } else {
        Ok(())
    }
}

pub(crate) fn check_same_dimension(left: usize, right: usize) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { left, right })
    }
}

pub(crate) fn check_index(index: usize, t: usize) -> Result<()> {
    if (1..=t).contains(&index) {
        Ok(())
    } else {
        Err(Error::IndexOutOfRange { index, t })
    }
}

/// A vertex of the hypercube graph: a sign vector in `{+1, -1}^t`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Tope {
    signs: Vec<i8>,
}

impl Tope {
    /// Builds a tope from its sign sequence `T(1), ..., T(t)`.
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        check_dimension(signs.len())?;
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::InvalidSignValue(bad.into()));
        }
        Ok(Self { signs })
    }

    /// Builds a tope from a sign slice given as wider integers.
    pub fn from_i64(signs: &[i64]) -> Result<Self> {
        let converted = signs
            .iter()
            .map(|&s| match s {
                1 => Ok(1i8),
                -1 => Ok(-1i8),
                other => Err(Error::InvalidSignValue(other)),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(converted)
    }

    pub(crate) fn from_signs_unchecked(signs: Vec<i8>) -> Self {
        debug_assert!(signs.len() >= MIN_DIMENSION);
        debug_assert!(signs.iter().all(|&s| s == 1 || s == -1));
        Self { signs }
    }

    /// The positive tope `T(+) = (1, ..., 1)`.
    pub fn positive(t: usize) -> Result<Self> {
        check_dimension(t)?;
        Ok(Self { signs: vec![1; t] })
    }

    /// The negative tope `T(-) = -T(+)`.
    pub fn negative(t: usize) -> Result<Self> {
        check_dimension(t)?;
        Ok(Self { signs: vec![-1; t] })
    }

    /// Unpacks a tope from a negative-part mask: bit `e - 1` set means `T(e) = -1`.
    pub fn from_negative_mask(t: usize, mask: u64) -> Result<Self> {
        check_dimension(t)?;
        if t > MAX_MASK_DIMENSION {
            return Err(Error::OutOfRange {
                what: "t",
                value: t as i64,
                min: MIN_DIMENSION as i64,
                max: MAX_MASK_DIMENSION as i64,
            });
        }
        if mask >> t != 0 {
            return Err(Error::OutOfRange {
                what: "mask",
                value: mask as i64,
                min: 0,
                max: ((1u64 << t) - 1) as i64,
            });
        }
        let signs = (0..t)
            .map(|bit| if mask >> bit & 1 == 1 { -1 } else { 1 })
            .collect();
        Ok(Self { signs })
    }

    /// Packs the negative part into a mask, if `t` fits into 63 bits.
    pub fn negative_mask(&self) -> Option<u64> {
        if self.dim() > MAX_MASK_DIMENSION {
            return None;
        }
        Some(
            self.signs
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == -1)
                .fold(0u64, |m, (bit, _)| m | 1 << bit),
        )
    }

    /// The tope `-_A T(+)` whose negative part is exactly `a`.
    pub fn with_negative_part(a: &GroundSubset) -> Self {
        let mut signs = vec![1i8; a.dim()];
        for e in a.iter() {
            signs[e - 1] = -1;
        }
        Self { signs }
    }

    /// Iterates over all `2^t` topes in negative-mask order.
    pub fn enumerate(t: usize) -> Result<impl Iterator<Item = Tope>> {
        check_dimension(t)?;
        if t > MAX_MASK_DIMENSION {
            return Err(Error::CapExceeded {
                t,
                cap: MAX_MASK_DIMENSION,
            });
        }
        Ok((0..1u64 << t)
            .map(move |mask| Tope::from_negative_mask(t, mask).expect("mask is within range")))
    }

    pub fn dim(&self) -> usize {
        self.signs.len()
    }

    /// The sign `T(e)` for `e` in `1..=t`.
    ///
    /// Panics if `e` is out of range, like slice indexing.
    pub fn get(&self, e: usize) -> i8 {
        assert!(
            (1..=self.dim()).contains(&e),
            "coordinate {e} out of range 1..={}",
            self.dim()
        );
        self.signs[e - 1]
    }

    pub fn signs(&self) -> &[i8] {
        &self.signs
    }

    /// The sign vector widened to `i64`.
    pub fn to_i64(&self) -> Vec<i64> {
        self.signs.iter().map(|&s| s.into()).collect()
    }

    /// `<T, T(+)>`, the coordinate sum.
    pub fn sum(&self) -> i64 {
        self.signs.iter().map(|&s| i64::from(s)).sum()
    }

    /// Standard scalar product of two topes.
    pub fn inner(&self, other: &Tope) -> Result<i64> {
        check_same_dimension(self.dim(), other.dim())?;
        Ok(self
            .signs
            .iter()
            .zip(&other.signs)
            .map(|(&a, &b)| i64::from(a * b))
            .sum())
    }

    /// The reorientation `-_A T`: flips the signs on `a`.
    pub fn reorient(&self, a: &GroundSubset) -> Result<Tope> {
        check_same_dimension(self.dim(), a.dim())?;
        let mut signs = self.signs.clone();
        for e in a.iter() {
            signs[e - 1] = -signs[e - 1];
        }
        Ok(Self { signs })
    }

    /// The negative part `T^- = {e : T(e) = -1}`.
    pub fn negative_part(&self) -> GroundSubset {
        GroundSubset {
            t: self.dim(),
            members: self
                .signs
                .iter()
                .enumerate()
                .filter(|(_, &s)| s == -1)
                .map(|(i, _)| i + 1)
                .collect(),
        }
    }

    /// The separation set `S(T', T'') = {e : T'(e) != T''(e)}`.
    pub fn separation_set(&self, other: &Tope) -> Result<GroundSubset> {
        check_same_dimension(self.dim(), other.dim())?;
        Ok(GroundSubset {
            t: self.dim(),
            members: self
                .signs
                .iter()
                .zip(&other.signs)
                .enumerate()
                .filter(|(_, (a, b))| a != b)
                .map(|(i, _)| i + 1)
                .collect(),
        })
    }
}

impl Neg for &Tope {
    type Output = Tope;

    fn neg(self) -> Tope {
        Tope {
            signs: self.signs.iter().map(|&s| -s).collect(),
        }
    }
}

impl Neg for Tope {
    type Output = Tope;

    fn neg(self) -> Tope {
        -&self
    }
}

impl fmt::Display for Tope {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.signs {
            f.write_str(if s == 1 { "+" } else { "-" })?;
        }
        Ok(())
    }
}

/// Parses the `+`/`-` text format, e.g. `"++-+-"`.
impl FromStr for Tope {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let signs = s
            .trim()
            .chars()
            .map(|c| match c {
                '+' => Ok(1),
                '-' => Ok(-1),
                other => Err(Error::InvalidSign(other)),
            })
            .collect::<Result<Vec<i8>>>()?;
        Tope::new(signs)
    }
}

/// Free-function form of [`Tope::reorient`].
pub fn reorient(tope: &Tope, a: &GroundSubset) -> Result<Tope> {
    tope.reorient(a)
}

/// Free-function form of [`Tope::negative_part`].
pub fn negative_part(tope: &Tope) -> GroundSubset {
    tope.negative_part()
}

/// Free-function form of [`Tope::separation_set`].
pub fn separation_set(first: &Tope, second: &Tope) -> Result<GroundSubset> {
    first.separation_set(second)
}

/// `(|T'^- ∩ T''^-|, |T'^- ∪ T''^-|)` from scalar products alone:
///
/// ```text
/// |∩| = (t + <T',T''> - <T'+T'', T(+)>) / 4
/// |∪| = (3t - <T',T''> - <T'+T'', T(+)>) / 4
/// ```
pub fn negpart_meet_join_cards(first: &Tope, second: &Tope) -> Result<(usize, usize)> {
    let t = first.dim() as i64;
    let cross = first.inner(second)?;
    let plus = first.sum() + second.sum();
    let meet = exact_quarter(t + cross - plus);
    let join = exact_quarter(3 * t - cross - plus);
    Ok((meet as usize, join as usize))
}

fn exact_quarter(n: i64) -> i64 {
    assert!(
        n % 4 == 0 && n >= 0,
        "{n} is not a nonnegative multiple of 4"
    );
    n / 4
}

/// A subset of the ground set `E_t = {1, ..., t}`, kept sorted.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct GroundSubset {
    t: usize,
    members: Vec<usize>,
}

impl GroundSubset {
    pub fn new(t: usize, members: impl IntoIterator<Item = usize>) -> Result<Self> {
        check_dimension(t)?;
        let mut members: Vec<usize> = members.into_iter().collect();
        for &e in &members {
            check_index(e, t)?;
        }
        members.sort_unstable();
        if let Some(w) = members.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateElement(w[0]));
        }
        Ok(Self { t, members })
    }

    pub fn empty(t: usize) -> Result<Self> {
        check_dimension(t)?;
        Ok(Self {
            t,
            members: Vec::new(),
        })
    }

    /// The whole ground set `E_t`.
    pub fn full(t: usize) -> Result<Self> {
        check_dimension(t)?;
        Ok(Self {
            t,
            members: (1..=t).collect(),
        })
    }

    /// The contiguous interval `[i, j]`.
    pub fn interval(t: usize, i: usize, j: usize) -> Result<Self> {
        check_dimension(t)?;
        check_index(i, t)?;
        check_index(j, t)?;
        Ok(Self {
            t,
            members: (i..=j).collect(),
        })
    }

    /// Subset from a mask with bit `e - 1` set for each member `e`.
    pub fn from_mask(t: usize, mask: u64) -> Result<Self> {
        check_dimension(t)?;
        if t > MAX_MASK_DIMENSION || mask >> t != 0 {
            return Err(Error::OutOfRange {
                what: "mask",
                value: mask as i64,
                min: 0,
                max: if t > MAX_MASK_DIMENSION {
                    i64::MAX
                } else {
                    ((1u64 << t) - 1) as i64
                },
            });
        }
        Ok(Self {
            t,
            members: (0..t)
                .filter(|b| mask >> b & 1 == 1)
                .map(|b| b + 1)
                .collect(),
        })
    }

    /// Parses `"2,3,5"` or the keyword `"none"`.
    pub fn parse(t: usize, text: &str) -> Result<Self> {
        let text = text.trim();
        if text.eq_ignore_ascii_case("none") {
            return Self::empty(t);
        }
        let members = text
            .split(',')
            .map(|part| {
                part.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::InvalidSubset(text.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(t, members)
    }

    pub fn dim(&self) -> usize {
        self.t
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.members.len() == self.t
    }

    pub fn contains(&self, e: usize) -> bool {
        self.members.binary_search(&e).is_ok()
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.iter().copied()
    }

    pub fn to_mask(&self) -> Option<u64> {
        (self.t <= MAX_MASK_DIMENSION).then(|| self.iter().fold(0u64, |m, e| m | 1 << (e - 1)))
    }

    /// `E_t - A`.
    pub fn complement(&self) -> GroundSubset {
        GroundSubset {
            t: self.t,
            members: (1..=self.t).filter(|&e| !self.contains(e)).collect(),
        }
    }

    pub fn intersection_len(&self, other: &GroundSubset) -> usize {
        self.iter().filter(|&e| other.contains(e)).count()
    }

    /// Classifies the subset by `{1, t} ∩ A`.
    pub fn boundary_class(&self) -> BoundaryClass {
        BoundaryClass::of(self)
    }

    /// The maximal-interval decomposition, see [`IntervalPartition::of`].
    pub fn interval_partition(&self) -> Result<IntervalPartition> {
        IntervalPartition::of(self)
    }
}

impl fmt::Display for GroundSubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.members.is_empty() {
            return f.write_str("none");
        }
        for (k, e) in self.members.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{e}")?;
        }
        Ok(())
    }
}

/// How a subset `A ⊆ E_t` meets the boundary pair `{1, t}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum BoundaryClass {
    /// `{1, t} ∩ A = {1}`
    LeftOnly,
    /// `{1, t} ∩ A = {t}`
    RightOnly,
    /// `{1, t} ∩ A = {1, t}`
    BothEnds,
    /// `{1, t} ∩ A = ∅`
    Neither,
}

impl BoundaryClass {
    pub const ALL: [BoundaryClass; 4] = [
        BoundaryClass::LeftOnly,
        BoundaryClass::RightOnly,
        BoundaryClass::BothEnds,
        BoundaryClass::Neither,
    ];

    pub fn of(a: &GroundSubset) -> Self {
        match (a.contains(1), a.contains(a.dim())) {
            (true, false) => BoundaryClass::LeftOnly,
            (false, true) => BoundaryClass::RightOnly,
            (true, true) => BoundaryClass::BothEnds,
            (false, false) => BoundaryClass::Neither,
        }
    }

    /// `|{1, t} ∩ A|`.
    pub fn boundary_hits(self) -> usize {
        match self {
            BoundaryClass::LeftOnly | BoundaryClass::RightOnly => 1,
            BoundaryClass::BothEnds => 2,
            BoundaryClass::Neither => 0,
        }
    }

    pub fn touches_boundary(self) -> bool {
        self != BoundaryClass::Neither
    }

    pub fn name(self) -> &'static str {
        match self {
            BoundaryClass::LeftOnly => "left-only",
            BoundaryClass::RightOnly => "right-only",
            BoundaryClass::BothEnds => "both-ends",
            BoundaryClass::Neither => "neither",
        }
    }
}

impl fmt::Display for BoundaryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BoundaryClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        BoundaryClass::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::InvalidSubset(format!("unknown boundary class {s:?}")))
    }
}

/// The unique partition of a nonempty `A ⊆ E_t` into maximal intervals
/// `[i_1, j_1], ..., [i_ϱ, j_ϱ]` with `j_k + 2 <= i_{k+1}`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct IntervalPartition {
    intervals: Vec<(usize, usize)>,
}

impl IntervalPartition {
    pub fn of(a: &GroundSubset) -> Result<Self> {
        let (&first, rest) = a.members.split_first().ok_or(Error::EmptySet)?;
        let mut intervals = vec![(first, first)];
        for &e in rest {
            let last = intervals.last_mut().expect("nonempty");
            if e == last.1 + 1 {
                last.1 = e;
            } else {
                intervals.push((e, e));
            }
        }
        Ok(Self { intervals })
    }

    pub fn intervals(&self) -> &[(usize, usize)] {
        &self.intervals
    }

    /// The number of intervals `ϱ(A)`.
    pub fn rho(&self) -> usize {
        self.intervals.len()
    }

    pub fn starts(&self) -> impl Iterator<Item = usize> + '_ {
        self.intervals.iter().map(|&(i, _)| i)
    }

    pub fn ends(&self) -> impl Iterator<Item = usize> + '_ {
        self.intervals.iter().map(|&(_, j)| j)
    }
}

/// Free-function form of [`IntervalPartition::of`].
pub fn interval_partition(a: &GroundSubset) -> Result<IntervalPartition> {
    IntervalPartition::of(a)
}
