//! Brute-force search for the inclusion-minimal decompositions of a tope.
//!
//! Every subset of the `2t` cycle vertices is visited in Gray-code order, so
//! consecutive subsets differ by one vertex and the running vertex sum is
//! updated in O(t). All subsets whose sum equals the target are recorded.

use crate::cycle::SymmetricCycle;
use crate::decomposition::Decomposition;
use crate::error::{Error, Result};
use crate::hypercube::check_same_dimension;
use crate::hypercube::Tope;

/// Largest `t` the oracle accepts (a search space of `2^20` subsets).
pub const ORACLE_MAX_DIMENSION: usize = 10;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleResult {
    /// Cycle positions (`0..2t`) of one minimum-cardinality solution.
    pub minimal_set: Vec<usize>,
    /// Number of distinct solutions of minimum cardinality.
    pub minimal_count: usize,
    /// Exactly one solution of minimum cardinality exists.
    pub unique: bool,
    /// Every solution found contains `minimal_set`, so it is the unique
    /// inclusion-minimal solution.
    pub contained_in_every_solution: bool,
    /// Total number of vertex subsets summing to the tope.
    pub solutions_found: usize,
    pub candidates_checked: u64,
}

impl OracleResult {
    /// Whether the oracle's minimal set equals the given decomposition.
    pub fn matches(&self, decomposition: &Decomposition) -> bool {
        self.minimal_set == decomposition.cycle_positions()
    }
}

fn positions(mask: u64) -> Vec<usize> {
    (0..64).filter(|b| mask >> b & 1 == 1).collect()
}

pub fn bruteforce_minimal_decomposition(
    tope: &Tope,
    cycle: &SymmetricCycle,
) -> Result<OracleResult> {
    check_same_dimension(tope.dim(), cycle.dim())?;
    let t = tope.dim();
    if t > ORACLE_MAX_DIMENSION {
        return Err(Error::BudgetExceeded {
            t,
            cap: ORACLE_MAX_DIMENSION,
        });
    }
    let n = 2 * t;
    let vertices: Vec<Vec<i32>> = cycle
        .vertices()
        .iter()
        .map(|v| v.signs().iter().map(|&s| s.into()).collect())
        .collect();
    let target: Vec<i32> = tope.signs().iter().map(|&s| s.into()).collect();

    let mut sum = vec![0i32; t];
    let mut gray = 0u64;
    let mut solutions = Vec::new();
    for k in 1u64..1 << n {
        let bit = k.trailing_zeros() as usize;
        gray ^= 1 << bit;
        let added = gray >> bit & 1 == 1;
        for (s, &v) in sum.iter_mut().zip(&vertices[bit]) {
            if added {
                *s += v;
            } else {
                *s -= v;
            }
        }
        if sum == target {
            solutions.push(gray);
        }
    }

    let min_card = solutions
        .iter()
        .map(|m| m.count_ones())
        .min()
        .expect("every tope is a sum of cycle vertices");
    let minimal: Vec<u64> = solutions
        .iter()
        .copied()
        .filter(|m| m.count_ones() == min_card)
        .collect();
    let first = minimal[0];
    Ok(OracleResult {
        minimal_set: positions(first),
        minimal_count: minimal.len(),
        unique: minimal.len() == 1,
        contained_in_every_solution: solutions.iter().all(|&s| s & first == first),
        solutions_found: solutions.len(),
        candidates_checked: 1 << n,
    })
}
