//! The invariant suite behind `cyclotope verify`.
//!
//! Small dimensions are checked exhaustively; larger ones on a seeded
//! random sample, so a report is reproducible for a fixed configuration.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::cycle::{cycle_matrix, gram_matrix, inverse_rows, omega_matrix, SymmetricCycle};
use crate::decomposition::{
    decomposition_set, negpart_stats_from_spectrum, size_difference, size_from_intervals,
    spectrum_boundary_cases, spectrum_dense_with, spectrum_fast, spectrum_from_y_sum,
    spectrum_intervals, spectrum_update,
};
use crate::equinumerosity::{
    direct_equal_size, direct_equal_size_of_flips, equal_size_criterion, interval_count_equal_size,
    omega_indicator,
};
use crate::error::Result;
use crate::hypercube::{
    check_dimension, negpart_meet_join_cards, BoundaryClass, GroundSubset, Tope,
};
use crate::matrix::ScaledIntMatrix;
use crate::oracle::bruteforce_minimal_decomposition;
use crate::statistics::{
    enumerate_boundary_classes, enumerate_statistics_capped, formula_table, structured_count,
};

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    /// Run the brute-force oracle for `t` up to this value.
    pub oracle_max: usize,
    /// Enumerate all `2^t` topes up to this `t`, sample above it.
    pub exhaustive_max: usize,
    /// Enumerate all pairs (tope × tope, tope × subset) up to this `t`.
    pub pair_max: usize,
    /// Exhaustive counting tables up to this `t`.
    pub enumeration_cap: usize,
    /// Largest `t` for which dense matrices are materialized.
    pub dense_max: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        Self {
            oracle_max: 7,
            exhaustive_max: 16,
            pair_max: 8,
            enumeration_cap: 20,
            dense_max: 128,
            samples: 2048,
            seed: 0x5eed,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub t: usize,
    pub checks: Vec<CheckResult>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            writeln!(f, "{status} t={} {}: {}", self.t, c.name, c.detail)?;
        }
        let failed = self.checks.iter().filter(|c| !c.passed).count();
        writeln!(f, "{} checks, {} failed", self.checks.len(), failed)
    }
}

type Outcome = std::result::Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> std::result::Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

/// A uniformly random tope of dimension `t`.
pub fn random_tope<R: Rng + ?Sized>(rng: &mut R, t: usize) -> Tope {
    let signs = (0..t)
        .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
        .collect();
    Tope::new(signs).expect("random tope has valid dimension")
}

/// A uniformly random subset of `E_t`.
pub fn random_subset<R: Rng + ?Sized>(rng: &mut R, t: usize) -> GroundSubset {
    GroundSubset::new(t, (1..=t).filter(|_| rng.gen::<bool>())).expect("members are in range")
}

pub fn run(t: usize, options: &VerifyOptions) -> Result<VerifyReport> {
    check_dimension(t)?;
    let mut rng = ChaCha8Rng::seed_from_u64(options.seed ^ t as u64);
    let topes: Vec<Tope> = if t <= options.exhaustive_max {
        Tope::enumerate(t)?.collect()
    } else {
        let n = if t > options.dense_max {
            options.samples.min(256)
        } else {
            options.samples
        };
        (0..n).map(|_| random_tope(&mut rng, t)).collect()
    };
    let scope = if t <= options.exhaustive_max {
        "exhaustive"
    } else {
        "sampled"
    };

    let mut checks = Vec::new();
    let mut record = |name: &'static str, outcome: Outcome| {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        checks.push(CheckResult {
            name,
            passed,
            detail,
        });
    };

    record("cycle", check_cycle(t));
    if t <= options.dense_max {
        record("matrices", check_matrices(t));
    }
    record("spectra", check_spectra(t, &topes, options, scope));
    record("update-paths", check_update_paths(t, &mut rng));
    record("pairs", check_pairs(t, &topes, options, &mut rng));
    record(
        "equinumerosity",
        check_equinumerosity(t, &topes, options, &mut rng),
    );
    record("statistics", check_statistics(t, options));
    if t <= options.oracle_max {
        record("oracle", check_oracle(t));
    }
    Ok(VerifyReport { t, checks })
}

fn check_cycle(t: usize) -> Outcome {
    let cycle = SymmetricCycle::build(t).map_err(|e| e.to_string())?;
    let v = cycle.vertices();
    ensure(v.len() == 2 * t, || format!("{} vertices", v.len()))?;
    ensure(v[0] == Tope::positive(t).unwrap(), || "R^0 != T(+)".into())?;
    for s in 1..t {
        let want = Tope::positive(t)
            .unwrap()
            .reorient(&GroundSubset::interval(t, 1, s).unwrap())
            .unwrap();
        ensure(v[s] == want, || format!("R^{s} is not -[{s}] R^0"))?;
    }
    for k in 0..t {
        ensure(v[k + t] == -&v[k], || format!("R^{} != -R^{k}", k + t))?;
    }
    for k in 0..2 * t {
        let sep = v[k].separation_set(cycle.vertex(k + 1)).unwrap();
        ensure(sep.len() == 1, || {
            format!("R^{k}, R^{} not adjacent", k + 1)
        })?;
    }
    let mut sorted: Vec<&[i8]> = v.iter().map(|x| x.signs()).collect();
    sorted.sort();
    sorted.dedup();
    ensure(sorted.len() == 2 * t, || "repeated vertices".into())?;
    Ok(format!("{} vertices, adjacent and distinct", 2 * t))
}

fn check_matrices(t: usize) -> Outcome {
    let m = cycle_matrix(t).map_err(|e| e.to_string())?;
    let inv = inverse_rows(t).map_err(|e| e.to_string())?;
    ensure(inv.mul(&m).unwrap().represents_identity(), || {
        "M⁻¹·M != I".into()
    })?;
    ensure(m.mul(&inv).unwrap().represents_identity(), || {
        "M·M⁻¹ != I".into()
    })?;
    let gram = m.mul(&m.transpose()).unwrap();
    ensure(gram == gram_matrix(t).unwrap(), || {
        "M·Mᵀ != t - 2|j-i|".into()
    })?;
    let omega = inv.mul(&inv.transpose()).unwrap();
    ensure(omega == omega_matrix(t).unwrap(), || {
        "M⁻¹·M⁻ᵀ mismatch".into()
    })?;
    ensure(omega.is_symmetric(), || "ω not symmetric".into())?;
    Ok("inverse, Gram and ω exact".into())
}

fn check_one_spectrum(
    t: usize,
    tope: &Tope,
    inverse: Option<&ScaledIntMatrix>,
) -> std::result::Result<(), String> {
    let fast = spectrum_fast(tope);
    let intervals = spectrum_intervals(tope);
    ensure(fast == intervals, || {
        format!("{tope}: fast {fast} != intervals {intervals}")
    })?;
    if let Some(inv) = inverse {
        let dense = spectrum_dense_with(tope, inv).map_err(|e| e.to_string())?;
        ensure(fast == dense, || {
            format!("{tope}: fast {fast} != dense {dense}")
        })?;
    }
    let size = fast.support_size();
    ensure(size % 2 == 1, || format!("{tope}: even support {size}"))?;
    ensure(fast.norm_sq() == size as i64, || {
        format!("{tope}: ‖x‖² != |Q|")
    })?;
    ensure(fast.sum() == i64::from(tope.get(t)), || {
        format!("{tope}: Σx != T(t)")
    })?;
    for e in 1..=t {
        let x = fast.get(e);
        ensure(x == 0 || x == tope.get(e), || {
            format!("{tope}: x_{e} = {x}")
        })?;
    }
    ensure(fast.reconstruct() == tope.to_i64(), || {
        format!("{tope}: x·M != T")
    })?;
    let d = decomposition_set(tope);
    ensure(d.vertex_sum() == tope.to_i64(), || {
        format!("{tope}: ΣQ != T")
    })?;
    ensure(spectrum_fast(&-tope) == -&fast, || {
        format!("{tope}: x(-T) != -x(T)")
    })?;

    let a = tope.negative_part();
    ensure(size == size_from_intervals(&a), || {
        format!("{tope}: interval size law")
    })?;
    ensure(2 * a.len() as i64 == t as i64 - tope.sum(), || {
        format!("{tope}: |T⁻| identity")
    })?;
    let stats = negpart_stats_from_spectrum(&fast, None).map_err(|e| e.to_string())?;
    ensure(stats.negatives == a.len(), || {
        format!("{tope}: |T⁻| from x")
    })?;
    ensure(spectrum_from_y_sum(&a) == fast, || format!("{tope}: y-sum"))?;
    ensure(spectrum_boundary_cases(&a) == fast, || {
        format!("{tope}: boundary cases")
    })?;
    ensure(spectrum_from_y_sum(&a.complement()) == -&fast, || {
        format!("{tope}: antipodal y-sum")
    })?;
    let plus = Tope::positive(t).unwrap();
    let via_update =
        spectrum_update(&spectrum_fast(&plus), &plus, &a).map_err(|e| e.to_string())?;
    ensure(via_update == fast, || format!("{tope}: update from T(+)"))?;
    Ok(())
}

fn check_spectra(t: usize, topes: &[Tope], options: &VerifyOptions, scope: &str) -> Outcome {
    let inverse =
        (t <= options.dense_max.max(options.exhaustive_max)).then(|| inverse_rows(t).unwrap());
    topes
        .par_iter()
        .try_for_each(|tope| check_one_spectrum(t, tope, inverse.as_ref()))?;
    Ok(format!(
        "{} topes ({scope}), dense/fast/intervals agree",
        topes.len()
    ))
}

fn check_update_paths(t: usize, rng: &mut ChaCha8Rng) -> Outcome {
    let paths = 16;
    let steps = 2 * t;
    for _ in 0..paths {
        let mut tope = random_tope(rng, t);
        let mut x = spectrum_fast(&tope);
        for _ in 0..steps {
            let e = rng.gen_range(1..=t);
            let s = GroundSubset::new(t, [e]).unwrap();
            x = spectrum_update(&x, &tope, &s).map_err(|err| err.to_string())?;
            tope = tope.reorient(&s).unwrap();
            ensure(x == spectrum_fast(&tope), || {
                format!("{tope}: update drift")
            })?;
        }
    }
    Ok(format!("{paths} single-flip paths of length {steps}"))
}

fn check_pair(p: &Tope, q: &Tope) -> std::result::Result<(), String> {
    let sep = p.separation_set(q).unwrap();
    let mut rebuilt = p.to_i64();
    for s in sep.iter() {
        rebuilt[s - 1] -= 2 * i64::from(p.get(s));
    }
    ensure(rebuilt == q.to_i64(), || {
        format!("{p},{q}: separation identity")
    })?;
    ensure(p.reorient(&sep).unwrap() == *q, || {
        format!("{p},{q}: reorient by S")
    })?;

    let (pn, qn) = (p.negative_part(), q.negative_part());
    let meet = pn.intersection_len(&qn);
    let join = pn.len() + qn.len() - meet;
    ensure(
        negpart_meet_join_cards(p, q).unwrap() == (meet, join),
        || format!("{p},{q}: ∩/∪ from scalar products"),
    )?;
    let (xp, xq) = (spectrum_fast(p), spectrum_fast(q));
    let stats = negpart_stats_from_spectrum(&xp, Some(&xq)).map_err(|e| e.to_string())?;
    ensure(stats.meet_join == Some((meet, join)), || {
        format!("{p},{q}: ∩/∪ from spectra")
    })?;

    let direct = xp.support_size() as i64 - xq.support_size() as i64;
    ensure(size_difference(p, q).unwrap() == direct, || {
        format!("{p},{q}: size difference")
    })?;
    let indicator = omega_indicator(p, q).unwrap();
    ensure((indicator == 0) == (direct == 0), || {
        format!("{p},{q}: ω indicator")
    })?;
    Ok(())
}

fn check_pairs(t: usize, topes: &[Tope], options: &VerifyOptions, rng: &mut ChaCha8Rng) -> Outcome {
    if t <= options.pair_max {
        let all: Vec<Tope> = Tope::enumerate(t).unwrap().collect();
        all.par_iter()
            .try_for_each(|p| all.iter().try_for_each(|q| check_pair(p, q)))?;
        Ok(format!("{} pairs (exhaustive)", all.len() * all.len()))
    } else {
        let n = options.samples.min(topes.len().max(1) * 4);
        for _ in 0..n {
            let p = random_tope(rng, t);
            let q = random_tope(rng, t);
            check_pair(&p, &q)?;
        }
        Ok(format!("{n} pairs (sampled)"))
    }
}

fn check_flip(tope: &Tope, a: &GroundSubset) -> std::result::Result<(), String> {
    let report = equal_size_criterion(tope, a).map_err(|e| e.to_string())?;
    let direct = direct_equal_size(tope, &tope.reorient(a).unwrap()).unwrap();
    ensure(report.equal == direct, || {
        format!("{tope} A={a}: criterion")
    })
}

fn check_equinumerosity(
    t: usize,
    topes: &[Tope],
    options: &VerifyOptions,
    rng: &mut ChaCha8Rng,
) -> Outcome {
    if t <= options.pair_max {
        let proper: Vec<GroundSubset> = (0..(1u64 << t) - 1)
            .map(|m| GroundSubset::from_mask(t, m).unwrap())
            .collect();
        topes
            .par_iter()
            .try_for_each(|tope| proper.iter().try_for_each(|a| check_flip(tope, a)))?;
        let nonempty = &proper[1..];
        let mut all_nonempty = nonempty.to_vec();
        all_nonempty.push(GroundSubset::full(t).unwrap());
        all_nonempty.par_iter().try_for_each(|a| {
            all_nonempty.iter().try_for_each(|b| {
                let predicted = interval_count_equal_size(a, b).unwrap();
                let direct = direct_equal_size_of_flips(a, b).unwrap();
                ensure(predicted == direct, || {
                    format!("A={a} B={b}: interval counts")
                })
            })
        })?;
        Ok(format!(
            "{} flips, {} subset pairs (exhaustive)",
            topes.len() * proper.len(),
            all_nonempty.len() * all_nonempty.len()
        ))
    } else {
        let n = options.samples;
        for _ in 0..n {
            let tope = random_tope(rng, t);
            let a = random_subset(rng, t);
            if !a.is_full() {
                check_flip(&tope, &a)?;
            }
            let b = random_subset(rng, t);
            if !a.is_empty() && !b.is_empty() {
                let predicted = interval_count_equal_size(&a, &b).unwrap();
                let direct = direct_equal_size_of_flips(&a, &b).unwrap();
                ensure(predicted == direct, || {
                    format!("A={a} B={b}: interval counts")
                })?;
            }
        }
        Ok(format!("{n} flips and subset pairs (sampled)"))
    }
}

fn check_statistics(t: usize, options: &VerifyOptions) -> Outcome {
    let formula = formula_table(t).map_err(|e| e.to_string())?;
    ensure(formula.satisfies_invariants(), || {
        "formula table invariants".into()
    })?;
    for row in formula.rows() {
        if row.l >= 3 {
            let mirrored = formula.get(t - row.j, row.l).unwrap();
            ensure(mirrored == &row.count, || {
                format!("j={} l={}: symmetry", row.j, row.l)
            })?;
        }
    }
    if t > options.enumeration_cap {
        return Ok("formula table only".into());
    }
    let enumerated =
        enumerate_statistics_capped(t, options.enumeration_cap).map_err(|e| e.to_string())?;
    for (f, e) in formula.rows().iter().zip(enumerated.rows()) {
        ensure(f == e, || {
            format!(
                "j={} l={}: formula {} != enumerated {}",
                f.j, f.l, f.count, e.count
            )
        })?;
    }
    let classes =
        enumerate_boundary_classes(t, options.enumeration_cap).map_err(|e| e.to_string())?;
    for (key, &count) in &classes {
        let expected_rho = match key.class {
            BoundaryClass::Neither => (key.l - 1) / 2,
            _ => key.l.div_ceil(2),
        };
        ensure(key.rho == expected_rho, || {
            format!("{key:?}: interval count")
        })?;
        if key.l >= 3 {
            let want = structured_count(t, key.l, key.class, Some(key.j)).unwrap();
            ensure(want == count.into(), || {
                format!("{key:?}: refined count {want} != {count}")
            })?;
        }
    }
    Ok(format!(
        "{} table cells match enumeration",
        formula.rows().len()
    ))
}

fn check_oracle(t: usize) -> Outcome {
    let cycle = SymmetricCycle::build(t).unwrap();
    let topes: Vec<Tope> = Tope::enumerate(t).unwrap().collect();
    topes.par_iter().try_for_each(|tope| {
        let r = bruteforce_minimal_decomposition(tope, &cycle).map_err(|e| e.to_string())?;
        ensure(r.unique && r.contained_in_every_solution, || {
            format!("{tope}: not unique")
        })?;
        ensure(r.matches(&decomposition_set(tope)), || {
            format!("{tope}: oracle mismatch")
        })?;
        ensure(
            r.minimal_set.len() as i64 == spectrum_fast(tope).norm_sq(),
            || format!("{tope}: |Q| != ‖x‖²"),
        )
    })?;
    Ok(format!(
        "{} topes, unique minimal decompositions",
        topes.len()
    ))
}
