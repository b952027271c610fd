//! Decompositions of hypercube-graph vertices with respect to the
//! distinguished symmetric cycle of `H(t, 2)`.
//!
//! Every vertex (tope) `T ∈ {+1, -1}^t` is the sum of a unique
//! inclusion-minimal set `Q(T, R)` of vertices of the symmetric `2t`-cycle
//! `R`. This crate computes that set exactly by three independent routes,
//! counts topes by decomposition size, decides when two topes have
//! decompositions of equal size, and checks all of it against brute force.
//!
//! ```
//! use cyclotope::{decomposition_set, spectrum_fast, Tope};
//!
//! let tope: Tope = "+--++".parse().unwrap();
//! assert_eq!(spectrum_fast(&tope).coords(), &[1, -1, 0, 1, 0]);
//! assert_eq!(decomposition_set(&tope).size(), 3);
//! ```

pub mod cycle;
pub mod decomposition;
pub mod equinumerosity;
pub mod error;
pub mod hypercube;
pub mod matrix;
pub mod oracle;
pub mod statistics;
pub mod timing;
pub mod verify;

pub use cycle::{
    cycle_matrix, gram_entry, gram_matrix, inverse_row, inverse_rows, omega_entry, omega_matrix,
    SymmetricCycle,
};
pub use decomposition::{
    decomposition_set, negpart_stats_from_spectrum, size_difference, size_from_intervals,
    spectrum_boundary_cases, spectrum_dense, spectrum_dense_with, spectrum_fast,
    spectrum_from_y_sum, spectrum_intervals, spectrum_update, y_vector, Decomposition,
    NegPartStats, Spectrum, Term,
};
pub use equinumerosity::{
    direct_equal_size, equal_size_criterion, equal_size_criterion_with_oracle,
    interval_count_equal_size, omega_indicator, CriterionReport,
};
pub use error::{Error, Result};
pub use hypercube::{
    interval_partition, negative_part, negpart_meet_join_cards, reorient, separation_set,
    BoundaryClass, GroundSubset, IntervalPartition, Tope, MIN_DIMENSION,
};
pub use matrix::ScaledIntMatrix;
pub use oracle::{bruteforce_minimal_decomposition, OracleResult};
pub use statistics::{
    comp_count, count_by_negpart_and_size, count_topes_by_size, enumerate_statistics,
    formula_table, structured_count, CountRow, CountTable,
};
