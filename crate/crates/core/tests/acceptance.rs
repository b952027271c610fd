//! End-to-end acceptance gate. Prints one PASS/FAIL line per criterion and
//! exits nonzero if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{self, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use cyclotope::equinumerosity::direct_equal_size_of_flips;
use cyclotope::statistics::{closed_form_counts, enumerate_boundary_classes};
use cyclotope::timing::median_duration;
use cyclotope::{
    bruteforce_minimal_decomposition, decomposition_set, enumerate_statistics,
    equal_size_criterion, interval_count_equal_size, inverse_rows, negpart_meet_join_cards,
    negpart_stats_from_spectrum, omega_indicator, size_difference, spectrum_boundary_cases,
    spectrum_dense_with, spectrum_fast, spectrum_from_y_sum, spectrum_intervals, structured_count,
    BoundaryClass, GroundSubset, ScaledIntMatrix, Spectrum, SymmetricCycle, Tope,
};
use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn pascal(n: usize) -> Vec<Vec<u64>> {
    let mut rows = vec![vec![1u64]];
    for i in 1..=n {
        let prev = &rows[i - 1];
        let mut row = vec![1u64; i + 1];
        for k in 1..i {
            row[k] = prev[k - 1] + prev[k];
        }
        rows.push(row);
    }
    rows
}

fn choose(table: &[Vec<u64>], n: i64, k: i64) -> u64 {
    if n < 0 || k < 0 || k > n {
        0
    } else {
        table[n as usize][k as usize]
    }
}

fn all_topes(t: usize) -> Vec<Tope> {
    (0..1u64 << t)
        .map(|m| Tope::from_negative_mask(t, m).unwrap())
        .collect()
}

fn dense(t: usize) -> ScaledIntMatrix {
    inverse_rows(t).unwrap()
}

fn size_dense(tope: &Tope, inverse: &ScaledIntMatrix) -> usize {
    spectrum_dense_with(tope, inverse).unwrap().support_size()
}

fn negatives(tope: &Tope) -> Vec<usize> {
    (1..=tope.dim()).filter(|&e| tope.get(e) < 0).collect()
}

fn cross_method_equality() -> Outcome {
    let mut checked = 0usize;
    let start = Instant::now();
    for t in 3..=12 {
        let inverse = dense(t);
        for tope in all_topes(t) {
            let d = spectrum_dense_with(&tope, &inverse).unwrap();
            let f = spectrum_fast(&tope);
            let i = spectrum_intervals(&tope);
            ensure(d == f && f == i, || {
                format!("t={t} tope {tope}: dense {d}, fast {f}, intervals {i}")
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(10), || {
        format!("took {elapsed:?}, limit 10s")
    })?;
    Ok(format!("{checked} topes, t in 3..=12, {elapsed:.2?}"))
}

fn reconstruction() -> Outcome {
    let mut checked = 0usize;
    for t in 3..=12 {
        let cycle = SymmetricCycle::build(t).unwrap();
        for tope in all_topes(t) {
            let mut sum = vec![0i64; t];
            for pos in decomposition_set(&tope).cycle_positions() {
                for (s, &v) in sum.iter_mut().zip(cycle.vertex(pos).signs()) {
                    *s += i64::from(v);
                }
            }
            ensure(sum == tope.to_i64(), || {
                format!("t={t} tope {tope}: vertex sum {sum:?}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} topes, t in 3..=12"))
}

fn oracle_minimality() -> Outcome {
    let start = Instant::now();
    let mut checked = 0usize;
    for t in 3..=7 {
        let cycle = SymmetricCycle::build(t).unwrap();
        for tope in all_topes(t) {
            let r = bruteforce_minimal_decomposition(&tope, &cycle).unwrap();
            let q = decomposition_set(&tope);
            ensure(r.unique && r.contained_in_every_solution, || {
                format!("t={t} tope {tope}: minimal solution not unique ({r:?})")
            })?;
            ensure(r.matches(&q), || {
                format!(
                    "t={t} tope {tope}: oracle {:?}, computed {:?}",
                    r.minimal_set,
                    q.cycle_positions()
                )
            })?;
            checked += 1;
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, limit 60s")
    })?;
    Ok(format!("{checked} topes, t in 3..=7, {elapsed:.2?}"))
}

fn count_totals() -> Outcome {
    let binom = pascal(12);
    for t in 3..=12 {
        let inverse = dense(t);
        let mut by_size = vec![0u64; t + 1];
        for tope in all_topes(t) {
            by_size[size_dense(&tope, &inverse)] += 1;
        }
        for (l, &n) in by_size.iter().enumerate() {
            let want = if l % 2 == 1 {
                2 * choose(&binom, t as i64, l as i64)
            } else {
                0
            };
            ensure(n == want, || {
                format!("t={t} l={l}: {n} topes, expected {want}")
            })?;
        }
        let table = enumerate_statistics(t).unwrap();
        for l in (1..=t).step_by(2) {
            let total = table.column_total(l);
            ensure(total == BigUint::from(by_size[l]), || {
                format!("t={t} l={l}: table column {total}, expected {}", by_size[l])
            })?;
        }
    }
    Ok("t in 3..=12, every odd l".into())
}

fn counts_by_negatives_and_size() -> Outcome {
    let mut cells = 0usize;
    for t in 3..=12 {
        let inverse = dense(t);
        let mut tally = vec![vec![0u64; t + 1]; t + 1];
        for tope in all_topes(t) {
            tally[size_dense(&tope, &inverse)][negatives(&tope).len()] += 1;
        }
        for l in (3..=t).step_by(2) {
            let b = (l - 1) / 2;
            for j in 0..=t {
                let n = tally[l][j];
                let forms = closed_form_counts(t, j, l).unwrap();
                for (k, form) in forms.iter().enumerate() {
                    ensure(*form == BigUint::from(n), || {
                        format!("t={t} j={j} l={l}: enumerated {n}, expression {k} gives {form}")
                    })?;
                }
                if j < b || j > t - b {
                    ensure(n == 0, || {
                        format!("t={t} j={j} l={l}: {n} topes in the zero region")
                    })?;
                }
                if l == 3 && (1..t).contains(&j) {
                    let want = 2 * j * (t - j) - t;
                    ensure(n == want as u64, || {
                        format!("t={t} j={j}: l=3 count {n}, expected {want}")
                    })?;
                }
                cells += 1;
            }
        }
    }
    Ok(format!("{cells} (j, l) cells, t in 3..=12"))
}

fn counts_by_boundary_class() -> Outcome {
    let mut cells = 0usize;
    for t in 3..=10 {
        let tally = enumerate_boundary_classes(t, t).unwrap();
        let mut by_class: BTreeMap<(BoundaryClass, usize, usize), u64> = BTreeMap::new();
        for (key, n) in &tally {
            *by_class.entry((key.class, key.j, key.l)).or_default() += n;
        }
        for l in (3..=t).step_by(2) {
            for class in BoundaryClass::ALL {
                let mut total = 0u64;
                for j in 0..=t {
                    let n = by_class.get(&(class, j, l)).copied().unwrap_or(0);
                    let want = structured_count(t, l, class, Some(j)).unwrap();
                    ensure(want == BigUint::from(n), || {
                        format!("t={t} l={l} {class} j={j}: enumerated {n}, product {want}")
                    })?;
                    total += n;
                    cells += 1;
                }
                let want = structured_count(t, l, class, None).unwrap();
                ensure(want == BigUint::from(total), || {
                    format!("t={t} l={l} {class}: enumerated total {total}, formula {want}")
                })?;
            }
        }
    }
    Ok(format!(
        "{cells} (class, j, l) cells plus totals, t in 3..=10"
    ))
}

fn equinumerosity() -> Outcome {
    let start = Instant::now();
    let mut pairs = 0usize;
    for t in 3..=8 {
        let inverse = dense(t);
        let topes = all_topes(t);
        let sizes: Vec<usize> = topes.iter().map(|x| size_dense(x, &inverse)).collect();
        let full = (1u64 << t) - 1;
        for (mask, tope) in topes.iter().enumerate() {
            for a_mask in 0..full {
                let a = GroundSubset::from_mask(t, a_mask).unwrap();
                let flipped_mask = mask as u64 ^ a_mask;
                let equal = sizes[mask] == sizes[flipped_mask as usize];
                let report = equal_size_criterion(tope, &a).unwrap();
                ensure(report.equal == equal, || {
                    format!(
                        "t={t} tope {tope} A={{{a}}}: criterion {}, direct {equal}",
                        report.equal
                    )
                })?;
                let indicator = omega_indicator(tope, &topes[flipped_mask as usize]).unwrap();
                ensure((indicator == 0) == equal, || {
                    format!("t={t} tope {tope} A={{{a}}}: indicator {indicator}, direct {equal}")
                })?;
                pairs += 1;
            }
        }
        for a_mask in 1..=full {
            let a = GroundSubset::from_mask(t, a_mask).unwrap();
            for b_mask in 1..=full {
                let b = GroundSubset::from_mask(t, b_mask).unwrap();
                let equal = sizes[a_mask as usize] == sizes[b_mask as usize];
                let predicted = interval_count_equal_size(&a, &b).unwrap();
                ensure(predicted == equal, || {
                    format!(
                        "t={t} A={{{a}}} B={{{b}}}: interval counts {predicted}, direct {equal}"
                    )
                })?;
                ensure(direct_equal_size_of_flips(&a, &b).unwrap() == equal, || {
                    format!("t={t} A={{{a}}} B={{{b}}}: flip comparison disagrees")
                })?;
                pairs += 1;
            }
        }
    }
    let elapsed = start.elapsed();
    ensure(elapsed < Duration::from_secs(60), || {
        format!("took {elapsed:?}, limit 60s")
    })?;
    Ok(format!("{pairs} pairs, t in 3..=8, {elapsed:.2?}"))
}

fn negative_part_and_closed_form_identities() -> Outcome {
    let mut checked = 0usize;
    for t in 3..=8 {
        let inverse = dense(t);
        let topes = all_topes(t);
        let spectra: Vec<Spectrum> = topes
            .iter()
            .map(|x| spectrum_dense_with(x, &inverse).unwrap())
            .collect();
        let neg: Vec<Vec<usize>> = topes.iter().map(negatives).collect();
        for (k, x) in spectra.iter().enumerate() {
            let stats = negpart_stats_from_spectrum(x, None).unwrap();
            ensure(stats.negatives == neg[k].len(), || {
                format!(
                    "t={t} tope {}: |T-| {} from spectrum, {} direct",
                    topes[k],
                    stats.negatives,
                    neg[k].len()
                )
            })?;
        }
        for p in 0..topes.len() {
            for q in 0..topes.len() {
                let meet = neg[p].iter().filter(|e| neg[q].contains(e)).count();
                let join = neg[p].len() + neg[q].len() - meet;
                let stats = negpart_stats_from_spectrum(&spectra[p], Some(&spectra[q])).unwrap();
                ensure(stats.meet_join == Some((meet, join)), || {
                    format!(
                        "t={t} {} {}: spectra give {:?}, direct ({meet}, {join})",
                        topes[p], topes[q], stats.meet_join
                    )
                })?;
                let display = negpart_meet_join_cards(&topes[p], &topes[q]).unwrap();
                ensure(display == (meet, join), || {
                    format!(
                        "t={t} {} {}: inner products give {display:?}, direct ({meet}, {join})",
                        topes[p], topes[q]
                    )
                })?;
                checked += 1;
            }
        }
    }
    for t in 3..=10 {
        let inverse = dense(t);
        for mask in 0..1u64 << t {
            let a = GroundSubset::from_mask(t, mask).unwrap();
            let want = spectrum_dense_with(&Tope::with_negative_part(&a), &inverse).unwrap();
            let y = spectrum_from_y_sum(&a);
            let cases = spectrum_boundary_cases(&a);
            ensure(y == want && cases == want, || {
                format!("t={t} A={{{a}}}: dense {want}, y-sum {y}, cases {cases}")
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} tope pairs and subsets"))
}

fn size_difference_identity() -> Outcome {
    let mut pairs = 0usize;
    for t in 3..=8 {
        let inverse = dense(t);
        let topes = all_topes(t);
        let sizes: Vec<i64> = topes
            .iter()
            .map(|x| size_dense(x, &inverse) as i64)
            .collect();
        for p in 0..topes.len() {
            for q in 0..topes.len() {
                let d = size_difference(&topes[p], &topes[q]).unwrap();
                ensure(d == sizes[p] - sizes[q], || {
                    format!(
                        "t={t} {} {}: formula {d}, direct {}",
                        topes[p],
                        topes[q],
                        sizes[p] - sizes[q]
                    )
                })?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} ordered pairs, t in 3..=8"))
}

fn random_tope(rng: &mut ChaCha8Rng, t: usize) -> Tope {
    Tope::new(
        (0..t)
            .map(|_| if rng.gen::<bool>() { 1 } else { -1 })
            .collect(),
    )
    .unwrap()
}

fn performance() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x10_0000);
    let big = random_tope(&mut rng, 1_000_000);
    let large = median_duration(9, || spectrum_fast(&big));
    ensure(large < Duration::from_millis(50), || {
        format!("t=10^6 median {large:?}, limit 50ms")
    })?;

    let t = 2048;
    let tope = random_tope(&mut rng, t);
    let inverse = dense(t);
    let fast = median_duration(9, || spectrum_fast(&tope));
    let slow = median_duration(9, || spectrum_dense_with(&tope, &inverse).unwrap());
    let speedup = slow.as_secs_f64() / fast.as_secs_f64().max(1e-9);
    ensure(speedup >= 10.0, || {
        format!("t=2048 fast {fast:?}, dense {slow:?}, speedup {speedup:.1}x < 10x")
    })?;
    Ok(format!(
        "t=10^6 fast {large:.2?}; t=2048 fast {fast:.2?}, dense {slow:.2?}, speedup {speedup:.0}x"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("cross-method spectrum equality", cross_method_equality),
        ("reconstruction from cycle vertices", reconstruction),
        ("brute-force minimality", oracle_minimality),
        ("count totals by size", count_totals),
        (
            "counts by negative part and size",
            counts_by_negatives_and_size,
        ),
        ("counts by boundary class", counts_by_boundary_class),
        ("equal-size criteria", equinumerosity),
        (
            "negative-part and closed-form spectrum identities",
            negative_part_and_closed_form_identities,
        ),
        ("size difference identity", size_difference_identity),
        ("performance", performance),
    ];
    let mut failed = 0;
    for (n, (name, check)) in criteria.iter().enumerate() {
        let outcome = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name} ({detail})", n + 1),
            Err(detail) => {
                failed += 1;
                println!("FAIL criterion {}: {name} ({detail})", n + 1);
            }
        }
    }
    println!("{} criteria, {failed} failed", criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
