//! End-to-end acceptance checks, one test per headline claim.
//!
//! Each test prints exactly one `criterion N: PASS/FAIL` line and enforces
//! a wall-clock ceiling on top of the value checks. Run the whole suite
//! in order with:
//!
//! ```text
//! cargo test --test acceptance -- --test-threads=1 --nocapture
//! ```

use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use tdc_core::coloring::{
    is_proper, is_total_dominator, star_triangle_normal_form, symbol_count_obstructed, Coloring,
};
use tdc_core::constructions::{construct_tdc, general_tdc, table1_coloring};
use tdc_core::graph::{classify_class, kneser_graph, ClassShape, Graph};
use tdc_core::random::{random_isolate_free_graph, random_proper_coloring};
use tdc_core::solvers::{
    chromatic_number, enumerate_proper_colorings, exists_tdc_with_k_classes,
    for_each_decomposition, is_total_dominating_set, kneser2_decision, tdc_number,
    total_domination_number, Budget, DecompositionOptions,
};
use tdc_core::steiner::{construct_sts, sts_exists, sts_nonexistence_bruteforce, verify_sts};

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

fn ok<T>(r: tdc_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn kneser2(n: u32) -> Result<Graph, String> {
    ok(kneser_graph(n, 2))
}

/// Runs one criterion body under a wall-clock ceiling and prints the
/// single summary line. Panics (failing the test) on any violation.
fn check(name: &str, limit: Duration, body: impl FnOnce() -> Result<(), String>) {
    let started = Instant::now();
    let outcome = body();
    let elapsed = started.elapsed();
    let in_time = elapsed <= limit;
    match (&outcome, in_time) {
        (Ok(()), true) => println!("{name}: PASS ({elapsed:.2?})"),
        (Ok(()), false) => {
            println!("{name}: FAIL (took {elapsed:.2?}, ceiling {limit:?})")
        }
        (Err(e), _) => println!("{name}: FAIL ({e})"),
    }
    if let Err(e) = outcome {
        panic!("{name}: {e}");
    }
    assert!(in_time, "{name}: took {elapsed:.2?}, ceiling {limit:?}");
}

#[test]
fn criterion_1_total_domination_numbers() {
    check(
        "criterion 1: total domination numbers of KG(n,2), n=4..=10",
        Duration::from_secs(60),
        || {
            for (n, expected) in [(4, 6), (5, 4), (6, 3), (7, 3), (8, 3), (9, 3), (10, 3)] {
                let g = kneser2(n)?;
                let res = ok(total_domination_number(&g, &Budget::unlimited()))?;
                ensure!(
                    res.value == expected,
                    "gamma_t(KG({n},2)) = {}, expected {expected}",
                    res.value
                );
                ensure!(res.certificate.len() == expected, "certificate size off for n={n}");
                ensure!(
                    ok(is_total_dominating_set(&g, &res.certificate))?,
                    "certificate for n={n} does not totally dominate"
                );
                ensure!(res.proof_of_optimality, "search for n={n} reported no optimality proof");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_2_chromatic_numbers() {
    check(
        "criterion 2: chromatic numbers of KG(n,2), n=5..=8",
        Duration::from_secs(120),
        || {
            for n in 5..=8u32 {
                let g = kneser2(n)?;
                let res = ok(chromatic_number(&g, &Budget::unlimited()))?;
                let expected = n as usize - 2;
                ensure!(
                    res.value == expected,
                    "chi(KG({n},2)) = {}, expected {expected}",
                    res.value
                );
                ensure!(res.certificate.k() == expected, "certificate class count off for n={n}");
                ensure!(
                    ok(is_proper(&g, &res.certificate))?,
                    "chromatic certificate for n={n} is not proper"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_3_constructions_verify() {
    check(
        "criterion 3: tabulated colorings n=5..=9 and the general family n=7..=12",
        Duration::from_secs(10),
        || {
            for (n, classes) in [(5, 6), (6, 6), (7, 7), (8, 8), (9, 9)] {
                let g = kneser2(n)?;
                let c = ok(table1_coloring(n))?;
                ensure!(c.k() == classes, "tabulated n={n} has {} classes, expected {classes}", c.k());
                ensure!(ok(is_proper(&g, &c))?, "tabulated n={n} is not proper");
                ensure!(ok(is_total_dominator(&g, &c))?, "tabulated n={n} is not total dominator");
            }
            for n in 7..=12u32 {
                let g = kneser2(n)?;
                let c = ok(general_tdc(n))?;
                ensure!(c.k() == n as usize, "general family n={n} has {} classes", c.k());
                ensure!(ok(is_proper(&g, &c))?, "general family n={n} is not proper");
                ensure!(
                    ok(is_total_dominator(&g, &c))?,
                    "general family n={n} is not total dominator"
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_4_petersen_tdc_number() {
    check(
        "criterion 4: KG(5,2) admits no k-class total dominator coloring for k<6, one for k=6",
        Duration::from_secs(300),
        || {
            let g = kneser2(5)?;
            for k in [3, 4, 5] {
                let d = ok(exists_tdc_with_k_classes(&g, k, &Budget::unlimited()))?;
                ensure!(
                    d.certificate.is_none(),
                    "unexpected {k}-class total dominator coloring on KG(5,2)"
                );
                ensure!(d.nodes_explored > 0, "k={k} search explored no nodes");
            }
            let d = ok(exists_tdc_with_k_classes(&g, 6, &Budget::unlimited()))?;
            let c = d.certificate.ok_or("no 6-class total dominator coloring found")?;
            ensure!(c.k() == 6, "witness has {} classes", c.k());
            ensure!(ok(is_proper(&g, &c))?, "witness not proper");
            ensure!(ok(is_total_dominator(&g, &c))?, "witness not total dominator");
            let res = ok(tdc_number(&g, &Budget::unlimited()))?;
            ensure!(res.value == 6, "tdc number of KG(5,2) = {}, expected 6", res.value);
            ensure!(res.proof_of_optimality, "tdc number search reported no optimality proof");
            Ok(())
        },
    );
}

#[test]
fn criterion_5_exact_values_n6_through_n9() {
    check(
        "criterion 5: total dominator chromatic number of KG(n,2) is n for n=6..=9",
        Duration::from_secs(1800),
        || {
            // The two decisions named by the criterion, run standalone:
            // exhaustive refutations one class below the constructions.
            let d = ok(kneser2_decision(6, 5, &Budget::unlimited()))?;
            ensure!(
                d.certificate.is_none(),
                "unexpected 5-class total dominator coloring on KG(6,2)"
            );
            let d = ok(kneser2_decision(7, 6, &Budget::unlimited()))?;
            ensure!(
                d.certificate.is_none(),
                "unexpected 6-class total dominator coloring on KG(7,2)"
            );
            // Explicit matching colorings for every n in range.
            for n in [6u32, 7, 8, 9] {
                let g = kneser2(n)?;
                let c = ok(construct_tdc(n))?;
                ensure!(c.k() == n as usize, "construction for n={n} has {} classes", c.k());
                ensure!(ok(is_proper(&g, &c))?, "construction for n={n} not proper");
                ensure!(
                    ok(is_total_dominator(&g, &c))?,
                    "construction for n={n} not total dominator"
                );
            }
            // Full solves. Bounds for n=8,9 would satisfy the criterion, but
            // the (n-1)-class refutations finish in seconds (about 1e6 and
            // 2e8 nodes), so all four values are pinned exactly.
            for n in [6u32, 7, 8, 9] {
                let g = kneser2(n)?;
                let res = ok(tdc_number(&g, &Budget::unlimited()))?;
                ensure!(
                    res.value == n as usize,
                    "tdc number of KG({n},2) = {}, expected {n}",
                    res.value
                );
                ensure!(
                    ok(is_total_dominator(&g, &res.certificate))?,
                    "tdc certificate for n={n} invalid"
                );
                ensure!(res.proof_of_optimality, "n={n} solve reported no optimality proof");
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_6_steiner_triple_systems() {
    check(
        "criterion 6: triple systems exist exactly for n = 1,3 mod 6; constructions verify",
        Duration::from_secs(60),
        || {
            for n in 1..=9u32 {
                let nonexistence_proved = ok(sts_nonexistence_bruteforce(n))?;
                ensure!(
                    nonexistence_proved == !sts_exists(n),
                    "brute-force search for n={n} disagrees with the congruence"
                );
            }
            for n in [7u32, 9, 13, 15, 19, 21] {
                let sys = ok(construct_sts(n))?;
                ensure!(verify_sts(&sys), "constructed triple system for n={n} fails verification");
                let blocks = (n * (n - 1) / 6) as usize;
                ensure!(
                    sys.blocks.len() == blocks,
                    "triple system for n={n} has {} blocks, expected {blocks}",
                    sys.blocks.len()
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_7_sandwich_bounds_on_random_graphs() {
    check(
        "criterion 7: max(chi, gamma_t) <= tdc <= chi + gamma_t on 200 random graphs",
        Duration::from_secs(1800),
        || {
            let mut rng = ChaCha8Rng::seed_from_u64(0x7dc_2026);
            let probs = [0.15, 0.3, 0.5, 0.7, 0.85];
            for i in 0..200usize {
                let order = 2 + i % 11; // 2..=12
                let p = probs[i % probs.len()];
                let g = ok(random_isolate_free_graph(&mut rng, order, p))?;
                let chi = ok(chromatic_number(&g, &Budget::unlimited()))?.value;
                let gt = ok(total_domination_number(&g, &Budget::unlimited()))?.value;
                let td = ok(tdc_number(&g, &Budget::unlimited()))?;
                ensure!(
                    ok(is_proper(&g, &td.certificate))?
                        && ok(is_total_dominator(&g, &td.certificate))?,
                    "graph {i}: tdc certificate invalid"
                );
                ensure!(
                    td.value >= chi.max(gt) && td.value <= chi + gt,
                    "graph {i} (order {order}, p {p}): chi={chi}, gamma_t={gt}, tdc={} \
                     violates the sandwich bounds",
                    td.value
                );
            }
            Ok(())
        },
    );
}

#[test]
fn criterion_8_optimal_petersen_colorings_are_star_triangle() {
    check(
        "criterion 8: every proper 3-coloring of KG(5,2) has star-triangle normal form",
        Duration::from_secs(600),
        || {
            let g = kneser2(5)?;
            let reps = ok(enumerate_proper_colorings(&g, 3, &Budget::unlimited()))?;
            ensure!(reps.len() == 20, "expected 20 proper 3-class partitions, got {}", reps.len());
            for (i, c) in reps.iter().enumerate() {
                let classes = ok(c.labeled_classes(&g))?;
                let mut triangles = 0usize;
                for class in &classes {
                    match ok(classify_class(5, class))? {
                        ClassShape::Triangular => triangles += 1,
                        ClassShape::Starlike(_) => {}
                        other => ensure!(false, "partition {i}: unexpected class shape {other:?}"),
                    }
                }
                ensure!(triangles == 1, "partition {i}: {triangles} triangular classes");
                let sigma = ok(star_triangle_normal_form(&g, c))?;
                ensure!(sigma.is_some(), "partition {i}: no normal form witness");
            }
            Ok(())
        },
    );
}

/// One coloring's worth of criterion-9 checking: the symbol-count
/// obstruction must preclude total domination, and on KG(n,2) an
/// all-starlike (n-1)-class partition must not be total dominator.
/// Returns (obstructed, all-star borderline) flags so callers can prove
/// the checks were not vacuous.
fn check_obstructions(g: &Graph, n: u32, c: &Coloring) -> Result<(bool, bool), String> {
    let obstructed = symbol_count_obstructed(g, c).map_err(|e| e.to_string())?;
    let tdc = is_total_dominator(g, c).map_err(|e| e.to_string())?;
    if obstructed && tdc {
        return Err(format!(
            "symbol-count obstruction contradicted by a {}-class total dominator coloring",
            c.k()
        ));
    }
    let mut borderline_all_star = false;
    if c.k() == n as usize - 1 {
        let classes = c.labeled_classes(g).map_err(|e| e.to_string())?;
        let all_star = classes.iter().try_fold(true, |acc, class| {
            classify_class(n, class)
                .map(|s| acc && matches!(s, ClassShape::Starlike(_)))
                .map_err(|e| e.to_string())
        })?;
        if all_star {
            borderline_all_star = true;
            if tdc {
                return Err(format!(
                    "all-starlike {}-class partition of KG({n},2) is total dominator",
                    c.k()
                ));
            }
        }
    }
    Ok((obstructed, borderline_all_star))
}

#[test]
fn criterion_9_obstructions_have_no_counterexamples() {
    check(
        "criterion 9: structural obstructions hold on every enumerated and sampled coloring",
        Duration::from_secs(1800),
        || {
            let mut checked = 0u64;
            let mut obstructed = 0u64;
            let mut all_star_borderline = 0u64;

            // Full partition enumerations where the order permits.
            let g5 = kneser2(5)?;
            for k in [3, 4, 5, 6] {
                for c in ok(enumerate_proper_colorings(&g5, k, &Budget::unlimited()))? {
                    let (o, b) = check_obstructions(&g5, 5, &c)?;
                    checked += 1;
                    obstructed += o as u64;
                    all_star_borderline += b as u64;
                }
            }
            let g6 = kneser2(6)?;
            for c in ok(enumerate_proper_colorings(&g6, 4, &Budget::unlimited()))? {
                let (o, b) = check_obstructions(&g6, 6, &c)?;
                checked += 1;
                obstructed += o as u64;
                all_star_borderline += b as u64;
            }

            // Larger class counts, streamed as star/triangle decompositions.
            // The checks are invariant under symbol renaming, so orbit
            // representatives cover every partition.
            let mut failure: Option<String> = None;
            for k in [5usize, 6] {
                let opts = DecompositionOptions { stars_only: false, require_tdc: false };
                ok(for_each_decomposition(6, k, &Budget::unlimited(), opts, &mut |c| {
                    if failure.is_none() {
                        match check_obstructions(&g6, 6, c) {
                            Ok((o, b)) => {
                                checked += 1;
                                obstructed += o as u64;
                                all_star_borderline += b as u64;
                            }
                            Err(e) => failure = Some(e),
                        }
                    }
                    Ok(())
                }))?;
                if let Some(e) = failure {
                    return Err(e);
                }
            }

            // Seeded random proper colorings of KG(6,2) with at most 6
            // classes; chi = 4 keeps every sample in the 4..=6 range.
            let mut rng = ChaCha8Rng::seed_from_u64(0x0b57);
            for _ in 0..1000 {
                let c = ok(random_proper_coloring(&mut rng, &g6, 6))?;
                ensure!((4..=6).contains(&c.k()), "sampled coloring has {} classes", c.k());
                let (o, b) = check_obstructions(&g6, 6, &c)?;
                checked += 1;
                obstructed += o as u64;
                all_star_borderline += b as u64;
            }

            ensure!(checked > 1000, "only {checked} colorings checked");
            ensure!(obstructed > 0, "symbol-count obstruction never fired; check is vacuous");
            ensure!(
                all_star_borderline > 0,
                "no all-starlike borderline partition seen; check is vacuous"
            );
            Ok(())
        },
    );
}
