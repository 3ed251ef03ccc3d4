//! Acceptance suite: one test per criterion, covering oracle equivalence,
//! tightness, exhaustive direct/inverse sweeps, exception families, the
//! specialization lattice, randomized duality/nesting, and deterministic
//! CLI output. Each test prints a PASS line with its headline numbers.

use std::collections::BTreeSet;
use std::process::Command;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use sumsetlab::{
    bounds, brute_force_sums, enumerate_extremal, reflect, subseq_sums_at_least,
    subseq_sums_at_most, subset_sums_at_least, subset_sums_at_most, sums, verify_direct,
    verify_inverse, CandidateSpace, IntSet, MultiSeq, Regime, SumInput, SweepConfig, Variant,
    Verdict, VerificationReport,
};

/// All subsets of `[1, 10]` with `1 <= k <= 5`, ascending within each set.
fn small_subsets() -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for mask in 1u32..(1 << 10) {
        if mask.count_ones() <= 5 {
            out.push(
                (0..10)
                    .filter(|i| mask >> i & 1 == 1)
                    .map(|i| i + 1)
                    .collect(),
            );
        }
    }
    out
}

fn random_seq(rng: &mut ChaCha8Rng) -> MultiSeq {
    let k = rng.gen_range(1..=4);
    let mut terms = BTreeSet::new();
    while terms.len() < k {
        terms.insert(rng.gen_range(-8i64..=8));
    }
    let reps: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=3)).collect();
    MultiSeq::new(terms.into_iter().collect(), reps).unwrap()
}

fn extremal_elements(report: &VerificationReport) -> Vec<Vec<i64>> {
    report.extremal.iter().map(|f| f.elements.clone()).collect()
}

/// Triples `a < b < a+b` from `[1, max]` with `a + b <= max`, sorted.
fn sum_closed_triples(max: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    for a in 1..=max {
        for b in a + 1..=max {
            if a + b <= max && b < a + b {
                out.push(vec![a, b, a + b]);
            }
        }
    }
    out.sort();
    out
}

#[test]
fn criterion_1_oracle_equivalence() {
    let start = Instant::now();
    let mut set_checks = 0u64;
    for elements in small_subsets() {
        let set = IntSet::new(elements).unwrap();
        let input: SumInput = set.clone().into();
        for alpha in 0..=set.k() {
            let dp = subset_sums_at_least(&set, alpha).unwrap();
            let oracle = brute_force_sums(&input, alpha, Variant::AtLeast).unwrap();
            assert_eq!(
                dp.values(),
                oracle.values(),
                "at-least {:?} alpha {alpha}",
                set
            );
            let dp = subset_sums_at_most(&set, alpha).unwrap();
            let oracle = brute_force_sums(&input, alpha, Variant::AtMost).unwrap();
            assert_eq!(
                dp.values(),
                oracle.values(),
                "at-most {:?} alpha {alpha}",
                set
            );
            set_checks += 2;
        }
    }

    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut seq_checks = 0u64;
    for _ in 0..500 {
        let seq = random_seq(&mut rng);
        let input: SumInput = seq.clone().into();
        for alpha in 0..=seq.n() {
            let dp = subseq_sums_at_least(&seq, alpha).unwrap();
            let oracle = brute_force_sums(&input, alpha, Variant::AtLeast).unwrap();
            assert_eq!(
                dp.values(),
                oracle.values(),
                "at-least {:?} alpha {alpha}",
                seq
            );
            let dp = subseq_sums_at_most(&seq, alpha).unwrap();
            let oracle = brute_force_sums(&input, alpha, Variant::AtMost).unwrap();
            assert_eq!(
                dp.values(),
                oracle.values(),
                "at-most {:?} alpha {alpha}",
                seq
            );
            seq_checks += 2;
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(30), "took {elapsed:?}");
    println!(
        "criterion 1 (oracle equivalence): PASS - {set_checks} set comparisons, \
         {seq_checks} sequence comparisons in {elapsed:?}"
    );
}

#[test]
fn criterion_2_tightness_of_set_bounds() {
    let mut checks = 0u64;
    for k in 1..=10usize {
        for d in 1..=5i64 {
            let interval = IntSet::interval(1, k as i64).unwrap().dilate(d).unwrap();
            for alpha in 0..=k {
                let achieved = subset_sums_at_least(&interval, alpha).unwrap().len() as u64;
                let bound = bounds::lower_bound_set_positive(k, alpha).unwrap();
                assert_eq!(achieved, bound, "d*[1,{k}] d={d} alpha={alpha}");
                checks += 1;
            }
        }
    }
    for k in 2..=10usize {
        for d in 1..=5i64 {
            let interval = IntSet::interval(0, k as i64 - 1)
                .unwrap()
                .dilate(d)
                .unwrap();
            for alpha in 0..=k {
                let achieved = subset_sums_at_least(&interval, alpha).unwrap().len() as u64;
                let bound = bounds::lower_bound_set_with_zero(k, alpha).unwrap();
                assert_eq!(achieved, bound, "d*[0,{}] d={d} alpha={alpha}", k - 1);
                checks += 1;
            }
        }
    }
    println!("criterion 2 (tightness witnesses): PASS - {checks} exact equalities");
}

#[test]
fn criterion_3_direct_sweeps_have_zero_violations() {
    let start = Instant::now();
    let mut evaluations = 0u64;

    for k in 1..=5usize {
        let alphas: Vec<usize> = (0..=k).collect();
        let config = SweepConfig::new(10, Regime::Positive);
        let report = verify_direct(&CandidateSpace::sets(k), &alphas, &config).unwrap();
        assert!(report.counterexamples.is_empty(), "sets k={k}");
        evaluations += report.evaluations;
    }

    for reps in [vec![2usize, 1, 3], vec![2, 2], vec![1, 2, 2], vec![3, 1]] {
        let space = CandidateSpace::seqs(reps.clone());
        let n = space.n();
        let alphas: Vec<usize> = (0..=n).collect();
        let report =
            verify_direct(&space, &alphas, &SweepConfig::new(8, Regime::Positive)).unwrap();
        assert!(report.counterexamples.is_empty(), "positive reps {reps:?}");
        evaluations += report.evaluations;

        if reps.len() >= 2 {
            let report =
                verify_direct(&space, &alphas, &SweepConfig::new(8, Regime::WithZero)).unwrap();
            assert!(report.counterexamples.is_empty(), "with-zero reps {reps:?}");
            evaluations += report.evaluations;
        }
    }

    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 3 (direct sweeps): PASS - {evaluations} evaluations, 0 violations in {elapsed:?}"
    );
}

#[test]
fn criterion_4_inverse_sweeps_match_predictions() {
    let config = SweepConfig::new(12, Regime::Positive);
    for alpha in 0..=2usize {
        let report = verify_inverse(&CandidateSpace::sets(4), alpha, &config).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::TheoremConfirmed,
            "k=4 alpha={alpha}"
        );
        assert_eq!(
            extremal_elements(&report),
            vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8], vec![3, 6, 9, 12]],
            "k=4 alpha={alpha}"
        );
    }
    for alpha in 0..=3usize {
        let report = verify_inverse(&CandidateSpace::sets(5), alpha, &config).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::TheoremConfirmed,
            "k=5 alpha={alpha}"
        );
        assert_eq!(
            extremal_elements(&report),
            vec![vec![1, 2, 3, 4, 5], vec![2, 4, 6, 8, 10]],
            "k=5 alpha={alpha}"
        );
    }
    let with_zero = SweepConfig::new(12, Regime::WithZero);
    for alpha in 0..=3usize {
        let report = verify_inverse(&CandidateSpace::sets(5), alpha, &with_zero).unwrap();
        assert_eq!(
            report.verdict,
            Verdict::TheoremConfirmed,
            "zero alpha={alpha}"
        );
        assert_eq!(
            extremal_elements(&report),
            vec![
                vec![0, 1, 2, 3, 4],
                vec![0, 2, 4, 6, 8],
                vec![0, 3, 6, 9, 12]
            ],
            "zero alpha={alpha}"
        );
    }
    println!("criterion 4 (inverse sweeps, sets): PASS - extremal sets are exactly the dilated intervals");
}

#[test]
fn criterion_5_exception_families() {
    // Positive 3-sets: extremal iff sum-closed.
    let expected = sum_closed_triples(10);
    assert_eq!(expected.len(), 20);
    let config = SweepConfig::new(10, Regime::Positive);
    for alpha in 0..=1usize {
        let report = enumerate_extremal(&CandidateSpace::sets(3), alpha, &config).unwrap();
        assert_eq!(extremal_elements(&report), expected, "k=3 alpha={alpha}");
        assert!(report.anomalies.is_empty());
    }

    // Positive pairs: everything is extremal at every alpha.
    let config = SweepConfig::new(5, Regime::Positive);
    for alpha in 0..=2usize {
        let report = enumerate_extremal(&CandidateSpace::sets(2), alpha, &config).unwrap();
        assert_eq!(report.extremal.len(), 10, "k=2 alpha={alpha}");
        assert!(report.anomalies.is_empty());
    }

    // Sequences (a1, a2, a3) with reps (1, 1, r3): extremal iff a3 = a1 + a2.
    let expected = sum_closed_triples(8);
    assert_eq!(expected.len(), 12);
    for r3 in [1usize, 2] {
        let space = CandidateSpace::seqs(vec![1, 1, r3]);
        let n = space.n();
        let config = SweepConfig::new(8, Regime::Positive);
        for alpha in 0..=n - 2 {
            let report = enumerate_extremal(&space, alpha, &config).unwrap();
            assert_eq!(
                extremal_elements(&report),
                expected,
                "reps (1,1,{r3}) alpha={alpha}"
            );
            assert!(report.anomalies.is_empty());
        }
    }
    println!(
        "criterion 5 (exception families): PASS - 20 sum-closed 3-sets, all 10 pairs, \
         12 sum-closed term triples per alpha"
    );
}

#[test]
fn criterion_6_inverse_sweep_sequences() {
    let start = Instant::now();
    let space = CandidateSpace::seqs(vec![2, 1, 1, 2]);
    let n = space.n();
    let config = SweepConfig::new(8, Regime::Positive);
    for alpha in 0..=n - 2 {
        let report = verify_inverse(&space, alpha, &config).unwrap();
        assert_eq!(report.verdict, Verdict::TheoremConfirmed, "alpha={alpha}");
        assert_eq!(
            extremal_elements(&report),
            vec![vec![1, 2, 3, 4], vec![2, 4, 6, 8]],
            "alpha={alpha}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 6 (inverse sweep, sequences): PASS - reps (2,1,1,2) extremal terms are \
         exactly a1*(1,2,3,4) in {elapsed:?}"
    );
}

#[test]
fn criterion_7_duality_and_nesting_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xd0a1);
    let instances = 10_000usize;
    for i in 0..instances {
        let input: SumInput = if i % 2 == 0 {
            let k = rng.gen_range(1..=6);
            let mut elements = BTreeSet::new();
            while elements.len() < k {
                elements.insert(rng.gen_range(-10i64..=10));
            }
            IntSet::new(elements.into_iter().collect()).unwrap().into()
        } else {
            random_seq(&mut rng).into()
        };
        let n = input.n();
        let alpha = rng.gen_range(0..=n);

        // Duality: reflecting the at-most set through the total yields the
        // at-least set, so both have the same size.
        let at_least = sums(&input, alpha, Variant::AtLeast).unwrap();
        let at_most = sums(&input, alpha, Variant::AtMost).unwrap();
        assert_eq!(
            reflect(&at_most, input.total()).unwrap(),
            at_least,
            "instance {i}"
        );

        // Nesting: raising alpha never adds sums.
        let higher = rng.gen_range(alpha..=n);
        let shrunk = sums(&input, higher, Variant::AtLeast).unwrap();
        assert!(
            shrunk.values().iter().all(|&v| at_least.contains(v)),
            "instance {i}: alpha {higher} not nested in {alpha}"
        );
    }
    println!("criterion 7 (duality + nesting): PASS - {instances} randomized instances");
}

#[test]
fn criterion_8_specialization_lattice() {
    let mut checks = 0u64;
    // All-ones repetitions reproduce the set formulas.
    for k in 1..=10usize {
        for alpha in 0..k {
            assert_eq!(
                bounds::lower_bound_seq_positive(&vec![1; k], alpha).unwrap(),
                bounds::lower_bound_set_positive(k, alpha).unwrap()
            );
            checks += 1;
            if k >= 2 {
                assert_eq!(
                    bounds::lower_bound_seq_with_zero(&vec![1; k], alpha).unwrap(),
                    bounds::lower_bound_set_with_zero(k, alpha).unwrap()
                );
                checks += 1;
            }
        }
    }
    // alpha = 0 reproduces the unrestricted bounds.
    for k in 2..=10usize {
        assert_eq!(
            bounds::lower_bound_set_positive(k, 0).unwrap(),
            bounds::lower_bound_all_subsets_positive(k).unwrap()
        );
        assert_eq!(
            bounds::lower_bound_set_with_zero(k, 0).unwrap(),
            bounds::lower_bound_all_subsets_with_zero(k).unwrap()
        );
        checks += 2;
    }
    // Uniform repetitions reproduce the closed uniform forms, which at
    // alpha = 0 reproduce the unrestricted sequence bounds.
    for k in 2..=10usize {
        for rep in 1..=4usize {
            for alpha in 0..rep * k {
                assert_eq!(
                    bounds::lower_bound_seq_positive(&vec![rep; k], alpha).unwrap(),
                    bounds::lower_bound_seq_uniform_positive(k, rep, alpha).unwrap()
                );
                assert_eq!(
                    bounds::lower_bound_seq_with_zero(&vec![rep; k], alpha).unwrap(),
                    bounds::lower_bound_seq_uniform_with_zero(k, rep, alpha).unwrap()
                );
                checks += 2;
            }
            assert_eq!(
                bounds::lower_bound_seq_uniform_positive(k, rep, 0).unwrap(),
                bounds::lower_bound_all_subseqs_positive(k, rep).unwrap()
            );
            assert_eq!(
                bounds::lower_bound_seq_uniform_with_zero(k, rep, 0).unwrap(),
                bounds::lower_bound_all_subseqs_with_zero(k, rep).unwrap()
            );
            checks += 2;
        }
    }
    println!("criterion 8 (specialization lattice): PASS - {checks} exact identities");
}

fn run_cli(args: &[&str]) -> (String, i32) {
    let output = Command::new(env!("CARGO_BIN_EXE_sumsetlab"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(output.stdout).expect("utf-8 output"),
        output.status.code().expect("exit code"),
    )
}

#[test]
fn criterion_9_deterministic_across_worker_counts() {
    for (label, base) in [
        (
            "inverse",
            vec![
                "verify", "inverse", "--k", "4", "--alpha", "2", "--max", "12",
            ],
        ),
        (
            "direct",
            vec![
                "verify",
                "direct",
                "--k",
                "4",
                "--alpha-range",
                "0..4",
                "--max",
                "10",
            ],
        ),
        (
            "explore",
            vec![
                "verify",
                "inverse",
                "--k",
                "3",
                "--alpha",
                "0",
                "--max",
                "10",
                "--explore",
            ],
        ),
    ] {
        let mut serial = base.clone();
        serial.extend(["--workers", "1"]);
        let mut parallel = base.clone();
        parallel.extend(["--workers", "8"]);
        let (serial_out, serial_code) = run_cli(&serial);
        let (parallel_out, parallel_code) = run_cli(&parallel);
        assert_eq!(serial_out, parallel_out, "{label}: plain output differs");
        assert_eq!(serial_code, parallel_code, "{label}: exit code differs");

        let mut csv_serial = serial.clone();
        csv_serial.extend(["--format", "csv"]);
        let mut csv_parallel = parallel.clone();
        csv_parallel.extend(["--format", "csv"]);
        assert_eq!(
            run_cli(&csv_serial).0,
            run_cli(&csv_parallel).0,
            "{label}: csv output differs"
        );

        // JSON reports agree everywhere except the timing field.
        let mut json_serial = serial.clone();
        json_serial.extend(["--format", "json"]);
        let mut json_parallel = parallel.clone();
        json_parallel.extend(["--format", "json"]);
        let (a, _) = run_cli(&json_serial);
        let (b, _) = run_cli(&json_parallel);
        let mut a: serde_json::Value = serde_json::from_str(&a).unwrap();
        let mut b: serde_json::Value = serde_json::from_str(&b).unwrap();
        a["elapsed_ms"] = 0.into();
        b["elapsed_ms"] = 0.into();
        assert_eq!(a, b, "{label}: json reports differ beyond timing");
    }
    println!("criterion 9 (determinism): PASS - workers 1 and 8 emit byte-identical reports");
}
