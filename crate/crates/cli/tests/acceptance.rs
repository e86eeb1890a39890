//! Acceptance criteria, one PASS/FAIL line each.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::Command;
use std::time::{Duration, Instant};

use qrac_core::bits::bit;
use qrac_core::geometry::{count_realized, scheme_halfspaces, DEFAULT_MARGIN_EPS};
use qrac_core::optimizer::{ascent_trace_check, SeeSawConfig};
use qrac_core::random::{random_density, random_halfspace, random_povm, random_pure_state};
use qrac_core::schemes::{buzek_hillery_clone, example3_scheme};
use qrac_core::state::{partial_trace, Subsystem};
use qrac_core::{
    density_to_bloch, evaluate_scheme, max_regions, measure_prob, povm_to_halfspace,
    realized_patterns, see_saw, standard_scheme, CMatrix, EvaluationReport, QracScheme,
    RegionStatus,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    ensure(
        took < limit,
        format!("{what} took {took:?}, limit {limit:?}"),
    )?;
    Ok(took)
}

fn cells(report: &EvaluationReport) -> impl Iterator<Item = f64> + '_ {
    report.per_cell.iter().flatten().copied()
}

fn spread(report: &EvaluationReport) -> f64 {
    let (lo, hi) = cells(report).fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), p| {
        (a.min(p), b.max(p))
    });
    hi - lo
}

/// Direct recomputation of every cell through `measure_prob`.
fn brute_force_min(scheme: &QracScheme) -> (usize, f64) {
    let n = scheme.n();
    let mut count = 0;
    let mut min = f64::INFINITY;
    for (x, rho) in scheme.states().iter().enumerate() {
        for (i, povm) in scheme.povms().iter().enumerate() {
            min = min.min(measure_prob(povm.effect(bit(x, i, n)), rho).unwrap());
            count += 1;
        }
    }
    (count, min)
}

fn c1_two_bit_coding() -> Outcome {
    let start = Instant::now();
    let report = evaluate_scheme(&standard_scheme("ambainis2").unwrap());
    let took = within(start, Duration::from_secs(1), "evaluation")?;
    let target = (std::f64::consts::PI / 8.0).cos().powi(2);
    ensure(
        (report.worst_case_p - target).abs() <= 1e-9,
        format!("worst case {}", report.worst_case_p),
    )?;
    ensure(cells(&report).count() == 8, "expected 8 cells")?;
    ensure(
        spread(&report) <= 1e-10,
        format!("cells differ by {}", spread(&report)),
    )?;
    Ok(format!(
        "worst_case_p = {:.9} in {took:?}",
        report.worst_case_p
    ))
}

fn c2_three_bit_coding() -> Outcome {
    let start = Instant::now();
    let scheme = standard_scheme("chuang3").unwrap();
    let report = evaluate_scheme(&scheme);
    let took = within(start, Duration::from_secs(1), "evaluation")?;
    let target = 0.5 + 3f64.sqrt() / 6.0;
    ensure(
        (report.worst_case_p - target).abs() <= 1e-9,
        format!("worst case {}", report.worst_case_p),
    )?;
    ensure(cells(&report).count() == 24, "expected 24 cells")?;
    ensure(
        spread(&report) <= 1e-10,
        format!("cells differ by {}", spread(&report)),
    )?;
    let k = 1.0 / 3f64.sqrt();
    let mut octants = std::collections::BTreeSet::new();
    for rho in scheme.states() {
        let r = density_to_bloch(rho);
        for v in r.coords() {
            ensure((v.abs() - k).abs() <= 1e-9, format!("Bloch coordinate {v}"))?;
        }
        octants.insert(r.coords().iter().map(|v| *v > 0.0).collect::<Vec<_>>());
    }
    ensure(octants.len() == 8, "Bloch vectors do not cover all octants")?;
    Ok(format!(
        "worst_case_p = {:.9} in {took:?}",
        report.worst_case_p
    ))
}

fn c3_seven_bit_coding() -> Outcome {
    let start = Instant::now();
    let scheme = standard_scheme("hinry7").unwrap();
    let report = evaluate_scheme(&scheme);
    let took = within(start, Duration::from_secs(5), "evaluation")?;
    let closed = (9.0 + 2.0 * 3f64.sqrt()) / 23.0;
    let (count, brute) = brute_force_min(&scheme);
    ensure(count == 128 * 7, format!("{count} cells"))?;
    ensure(
        (brute - closed).abs() <= 1e-6,
        format!("exhaustive min {brute} vs closed form {closed}"),
    )?;
    ensure(
        report.worst_case_p >= 0.54,
        format!("worst case {}", report.worst_case_p),
    )?;
    ensure(
        (report.worst_case_p - closed).abs() <= 1e-6,
        format!("worst case {}", report.worst_case_p),
    )?;
    Ok(format!(
        "worst_case_p = {:.9}, closed form {closed:.9}, in {took:?}",
        report.worst_case_p
    ))
}

fn c4_search_ceiling() -> Outcome {
    let start = Instant::now();
    let mut max_four = f64::NEG_INFINITY;
    for seed in 0..5 {
        let config = SeeSawConfig {
            seed,
            ..SeeSawConfig::default()
        };
        ensure(config.restarts >= 32, "too few restarts")?;
        let result = see_saw(4, 1, &config).unwrap();
        for r in &result.restarts {
            max_four = max_four.max(r.worst_case_p);
        }
        max_four = max_four.max(evaluate_scheme(&result.scheme).worst_case_p);
    }
    ensure(max_four <= 0.5 + 1e-6, format!("(4,1) reached {max_four}"))?;
    let best = |n: usize| -> f64 {
        let result = see_saw(n, 1, &SeeSawConfig::default()).unwrap();
        result
            .restarts
            .iter()
            .map(|r| r.worst_case_p)
            .fold(f64::NEG_INFINITY, f64::max)
    };
    let two = best(2);
    let three = best(3);
    let t2 = (std::f64::consts::PI / 8.0).cos().powi(2);
    let t3 = 0.5 + 3f64.sqrt() / 6.0;
    ensure((two - t2).abs() <= 1e-4, format!("(2,1) best {two}"))?;
    ensure((three - t3).abs() <= 1e-4, format!("(3,1) best {three}"))?;
    let took = within(start, Duration::from_secs(120), "searches")?;
    Ok(format!(
        "(4,1) max {max_four:.9}; (2,1) {two:.9}; (3,1) {three:.9}; {took:?}"
    ))
}

fn c5_region_counting() -> Outcome {
    let start = Instant::now();
    ensure(max_regions(4, 3).unwrap() == 15, "max_regions(4,3)")?;
    ensure(max_regions(16, 15).unwrap() == 65535, "max_regions(16,15)")?;
    let mut hs = scheme_halfspaces(&standard_scheme("chuang3").unwrap());
    let base = count_realized(&realized_patterns(&hs, 3, DEFAULT_MARGIN_EPS).unwrap());
    ensure(base == 8, format!("{base} patterns for three planes"))?;
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let mut most = 0;
    for _ in 0..100 {
        hs.truncate(3);
        hs.push(random_halfspace(3, 3, &mut rng));
        let w = realized_patterns(&hs, 3, DEFAULT_MARGIN_EPS).unwrap();
        ensure(
            !w.iter().any(|x| x.status == RegionStatus::Undecided),
            "undecided pattern",
        )?;
        most = most.max(count_realized(&w));
    }
    ensure(
        most <= 15,
        format!("{most} realized patterns with four planes"),
    )?;
    let took = within(start, Duration::from_secs(30), "region checks")?;
    Ok(format!(
        "15, 65535, 8 realized; at most {most} of 16 with a fourth plane; {took:?}"
    ))
}

fn c6_predicate_equivalence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let mut disagreements = 0;
    let mut boundary = 0;
    for _ in 0..1000 {
        let povm = random_povm(2, &mut rng);
        let rho = if rng.random::<bool>() {
            random_pure_state(2, &mut rng).outer_product()
        } else {
            random_density(2, &mut rng)
        };
        let excess = measure_prob(povm.e0(), &rho).unwrap() - 0.5;
        if excess.abs() <= 1e-10 {
            boundary += 1;
            continue;
        }
        let side = povm_to_halfspace(&povm, 0).evaluate(density_to_bloch(&rho).coords());
        if (excess > 0.0) != (side > 0.0) {
            disagreements += 1;
        }
    }
    ensure(disagreements == 0, format!("{disagreements} disagreements"))?;
    Ok(format!(
        "0 disagreements in 1000 pairs ({boundary} in boundary band)"
    ))
}

fn demo_value(text: &str, prefix: &str) -> Result<f64, String> {
    text.lines()
        .find_map(|l| l.strip_prefix(prefix))
        .ok_or(format!("missing line {prefix:?}"))?
        .trim()
        .parse()
        .map_err(|e| format!("{prefix}: {e}"))
}

fn c7_cloning_refutation() -> Outcome {
    let report = evaluate_scheme(&example3_scheme());
    ensure(
        report.worst_case_p <= 0.5 + 1e-9,
        format!("worst case {}", report.worst_case_p),
    )?;

    let out = Command::new(env!("CARGO_BIN_EXE_qrac"))
        .args(["demo", "example3"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure(out.status.success(), "demo example3 failed")?;
    let text = String::from_utf8_lossy(&out.stdout);
    let naive = demo_value(&text, "naive claim (p0 + 1/2)/2:")?;
    let truth = demo_value(&text, "simulated worst case:")?;
    ensure(naive > 0.5, format!("naive claim {naive}"))?;
    ensure(truth <= 0.5 + 1e-9, format!("printed truth {truth}"))?;

    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..100 {
        let psi = random_pure_state(2, &mut rng);
        let input = psi.outer_product();
        let joint = buzek_hillery_clone(&input).unwrap();
        let r_in = density_to_bloch(&input);
        for keep in [Subsystem::First, Subsystem::Second] {
            let clone = partial_trace(&joint, 2, 2, keep).unwrap();
            for (a, b) in r_in.coords().iter().zip(density_to_bloch(&clone).coords()) {
                ensure((2.0 / 3.0 * a - b).abs() <= 1e-9, "marginal shrink")?;
            }
            let fidelity = clone.matrix().expectation(psi.amplitudes()).re;
            ensure(
                (fidelity - 5.0 / 6.0).abs() <= 1e-9,
                format!("fidelity {fidelity}"),
            )?;
        }
    }
    Ok(format!(
        "naive {naive} > 0.5, simulated {truth} <= 0.5; shrink 2/3 and fidelity 5/6 hold"
    ))
}

fn c8_property_suites() -> Outcome {
    let cases = 1000;
    let mut rng = ChaCha8Rng::seed_from_u64(8);

    for k in 0..cases {
        let dim = if k % 2 == 0 { 2 } else { 4 };
        let rho = random_density(dim, &mut rng);
        let back = qrac_core::bloch_to_density(&density_to_bloch(&rho)).unwrap();
        let err = back.matrix().max_abs_diff(rho.matrix());
        ensure(err <= 1e-10, format!("Bloch round trip error {err}"))?;
    }

    for k in 0..cases {
        let dim = if k % 2 == 0 { 2 } else { 4 };
        let povm = random_povm(dim, &mut rng);
        let rho = random_density(dim, &mut rng);
        let sum = &(povm.e0() + povm.e1()) - &CMatrix::identity(dim);
        ensure(
            sum.frobenius_norm() <= 1e-10,
            "effects do not sum to identity",
        )?;
        let total = measure_prob(povm.e0(), &rho).unwrap() + measure_prob(povm.e1(), &rho).unwrap();
        ensure(
            (total - 1.0).abs() <= 1e-10,
            format!("probabilities sum to {total}"),
        )?;
    }

    let config = SeeSawConfig {
        restarts: cases,
        seed: 8,
        ..SeeSawConfig::default()
    };
    let check = ascent_trace_check(&see_saw(3, 1, &config).unwrap());
    ensure(
        check.is_clean(),
        format!("ascent violations {:?}", check.violations),
    )?;

    for _ in 0..cases {
        let k = rng.random_range(1..=3);
        let hs: Vec<_> = (0..k).map(|i| random_halfspace(3, i, &mut rng)).collect();
        let scaled: Vec<_> = hs
            .iter()
            .map(|h| h.scaled(rng.random_range(0.01..100.0)))
            .collect();
        let a = realized_patterns(&hs, 3, DEFAULT_MARGIN_EPS).unwrap();
        let b = realized_patterns(&scaled, 3, DEFAULT_MARGIN_EPS).unwrap();
        let same = a.iter().zip(&b).all(|(x, y)| x.status == y.status);
        ensure(same, "rescaling changed a pattern status")?;
    }
    Ok(format!(
        "{cases} cases each: Bloch round trip, completeness, scaling invariance; {} trace entries monotone",
        check.entries_checked
    ))
}

#[test]
fn acceptance() {
    let criteria: [Criterion; 8] = [
        ("two-bit coding reaches cos^2(pi/8)", c1_two_bit_coding),
        (
            "three-bit coding reaches 1/2 + sqrt(3)/6",
            c2_three_bit_coding,
        ),
        (
            "seven-bit two-qubit coding matches its closed form",
            c3_seven_bit_coding,
        ),
        (
            "see-saw ceiling for four bits on one qubit",
            c4_search_ceiling,
        ),
        ("region counting and realized patterns", c5_region_counting),
        (
            "majority outcome equals halfspace side",
            c6_predicate_equivalence,
        ),
        ("cloning construction refuted", c7_cloning_refutation),
        ("randomized property suites", c8_property_suites),
    ];
    let mut failed = Vec::new();
    for (k, (name, f)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS criterion {}: {name}: {detail}", k + 1),
            Err(why) => {
                println!("FAIL criterion {}: {name}: {why}", k + 1);
                failed.push(k + 1);
            }
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
