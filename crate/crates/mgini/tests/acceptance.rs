//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line (run with `--nocapture` to see them). Every tolerance is
//! pinned here, not tuned at runtime.

use std::process::Command;

use mgini::{
    expected_estimator_exponential, expected_estimator_gamma, gini_gamma_closed,
    ig_exponential_closed, ig_gamma_quadrature, ig_generic, ig_hat_fast, ig_hat_naive,
    integrate_semi_infinite, ln_gamma, regularized_gamma, Distribution, GiniOrder,
    QuadratureConfig, Sample, SimulationConfig, SimulationRecord,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn order(m: u32) -> GiniOrder {
    GiniOrder::new(m).unwrap()
}

fn config() -> QuadratureConfig {
    QuadratureConfig::default()
}

fn report(number: u8, label: &str, failures: Vec<String>) {
    if failures.is_empty() {
        println!("acceptance {number} ({label}): PASS");
    } else {
        println!("acceptance {number} ({label}): FAIL");
        panic!(
            "criterion {number} failed with {} violation(s):\n{}",
            failures.len(),
            failures.join("\n")
        );
    }
}

#[test]
fn criterion_1_exponential_closed_form() {
    let mut failures = Vec::new();
    if ig_exponential_closed(order(2)).unwrap() != 0.5 {
        failures.push("IG_2 of an exponential population must be exactly 0.5".into());
    }
    for m in 2..=10u32 {
        let h: f64 = (1..=m).map(|k| 1.0 / f64::from(k)).sum();
        let oracle = (h - 1.0 / f64::from(m)) / f64::from(m);
        let got = ig_exponential_closed(order(m)).unwrap();
        if (got - oracle).abs() >= 1e-13 {
            failures.push(format!(
                "m = {m}: closed form {got} vs harmonic oracle {oracle}"
            ));
        }
    }
    report(
        1,
        "exponential closed form vs harmonic-number oracle",
        failures,
    );
}

#[test]
fn criterion_2_gamma_gini_closed_form() {
    let mut failures = Vec::new();
    let v1 = gini_gamma_closed(1.0).unwrap();
    if (v1 - 0.5).abs() >= 1e-12 {
        failures.push(format!(
            "alpha = 1 must reduce to the exponential value 0.5, got {v1}"
        ));
    }
    let v2 = gini_gamma_closed(2.0).unwrap();
    if (v2 - 0.375).abs() >= 1e-12 {
        failures.push(format!(
            "alpha = 2 must equal 3/8 via gamma(2.5) = (3/4)sqrt(pi), got {v2}"
        ));
    }
    report(2, "classical gamma Gini closed form", failures);
}

#[test]
fn criterion_3_quadrature_vs_closed_forms() {
    let mut failures = Vec::new();
    let exp = Distribution::exponential(1.0).unwrap();
    for m in 2..=6u32 {
        let closed = ig_exponential_closed(order(m)).unwrap();
        let quad = ig_generic(exp, order(m), &config()).unwrap();
        if (quad - closed).abs() >= 1e-9 {
            failures.push(format!(
                "exponential m = {m}: quadrature {quad} vs closed {closed}"
            ));
        }
    }
    for &alpha in &[0.5, 1.0, 2.0, 5.0] {
        let closed = gini_gamma_closed(alpha).unwrap();
        let quad = ig_gamma_quadrature(alpha, order(2), &config()).unwrap();
        if (quad - closed).abs() >= 1e-8 {
            failures.push(format!(
                "gamma alpha = {alpha}: quadrature {quad} vs closed {closed}"
            ));
        }
    }
    report(3, "quadrature agrees with closed forms", failures);
}

#[test]
fn criterion_4_incomplete_gamma_integral_identities() {
    // Assembled from the public primitives only: the integrands are built
    // directly on regularized_gamma, independent of the population module.
    let mut failures = Vec::new();
    for &alpha in &[0.5, 1.0, 2.0, 3.5] {
        let q1 =
            integrate_semi_infinite(|s| regularized_gamma(alpha, s).unwrap().q, &config()).unwrap();
        if !q1.converged || (q1.value - alpha).abs() >= 1e-8 {
            failures.push(format!("alpha = {alpha}: integral of Q gave {}", q1.value));
        }
        let q2 = integrate_semi_infinite(
            |s| {
                let q = regularized_gamma(alpha, s).unwrap().q;
                q * q
            },
            &config(),
        )
        .unwrap();
        let correction = (ln_gamma(2.0 * alpha + 1.0).unwrap()
            - 2.0 * alpha * std::f64::consts::LN_2
            - alpha.ln()
            - 2.0 * ln_gamma(alpha).unwrap())
        .exp();
        let expected = alpha - correction;
        if !q2.converged || (q2.value - expected).abs() >= 1e-8 {
            failures.push(format!(
                "alpha = {alpha}: integral of Q^2 gave {} vs {expected}",
                q2.value
            ));
        }
    }
    report(4, "incomplete-gamma integral identities", failures);
}

/// Random samples mixing continuous draws with heavy ties.
fn mixed_sample<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
    (0..n)
        .map(|_| {
            if rng.random::<f64>() < 0.35 {
                f64::from(rng.random_range(0..4u32))
            } else {
                rng.random::<f64>() * 50.0
            }
        })
        .collect()
}

#[test]
fn criterion_5_estimator_oracle_equivalence() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(5150);
    let mut tested = 0usize;
    while tested < 500 {
        let n = rng.random_range(3..=12usize);
        let values = mixed_sample(&mut rng, n);
        if values.iter().sum::<f64>() == 0.0 {
            continue;
        }
        tested += 1;
        let sample = Sample::new(values).unwrap();
        for m in 2..=n as u32 {
            let naive = ig_hat_naive(&sample, order(m)).unwrap();
            let fast = ig_hat_fast(&sample, order(m)).unwrap();
            if (fast - naive).abs() > 1e-12 * naive.abs().max(1.0) {
                failures.push(format!(
                    "sample #{tested} (n = {n}, m = {m}): fast {fast} vs naive {naive}"
                ));
            }
        }
    }
    report(
        5,
        "fast estimator matches enumeration oracle on 500 samples",
        failures,
    );
}

#[test]
fn criterion_6_estimator_property_suite() {
    let mut failures = Vec::new();
    let mut rng = ChaCha8Rng::seed_from_u64(6006);
    let mut cases = 0usize;
    while cases < 1000 {
        let n = rng.random_range(3..=40usize);
        let values = mixed_sample(&mut rng, n);
        if values.iter().sum::<f64>() == 0.0 {
            continue;
        }
        cases += 1;
        let m = order(rng.random_range(2..=n as u32));
        let sample = Sample::new(values.clone()).unwrap();
        let reference = ig_hat_fast(&sample, m).unwrap();

        if !(0.0..=1.0).contains(&reference) {
            failures.push(format!("case {cases}: estimate {reference} escaped [0, 1]"));
        }
        for c in [1e-6, 1.0, 1e6] {
            let scaled: Vec<f64> = values.iter().map(|v| v * c).collect();
            let got = ig_hat_fast(&Sample::new(scaled).unwrap(), m).unwrap();
            if (got - reference).abs() > 1e-13 {
                failures.push(format!(
                    "case {cases}: scale c = {c} moved {reference} to {got}"
                ));
            }
        }
        let mut shuffled = values;
        for i in (1..shuffled.len()).rev() {
            let j = rng.random_range(0..=i);
            shuffled.swap(i, j);
        }
        let got = ig_hat_fast(&Sample::new(shuffled).unwrap(), m).unwrap();
        if got.to_bits() != reference.to_bits() {
            failures.push(format!(
                "case {cases}: permutation changed {reference} to {got}"
            ));
        }
        if failures.len() > 20 {
            break;
        }
    }
    for &c in &[1e-6, 1.0, 42.0, 1e9] {
        let sample = Sample::new(vec![c; 8]).unwrap();
        let got = ig_hat_fast(&sample, order(3)).unwrap();
        if got != 0.0 {
            failures.push(format!(
                "constant sample at {c} gave {got}, expected exactly 0"
            ));
        }
    }
    report(6, "estimator properties over 1000 random cases", failures);
}

#[test]
fn criterion_7_unbiasedness_via_laplace_transform() {
    let mut failures = Vec::new();
    for &(n, m) in &[(5u32, 3u32), (10, 2), (8, 4), (50, 3)] {
        let truth = ig_exponential_closed(order(m)).unwrap();
        let got = expected_estimator_exponential(n, order(m), &config()).unwrap();
        if (got - truth).abs() >= 1e-8 {
            failures.push(format!(
                "exponential n = {n}, m = {m}: E = {got} vs IG = {truth}"
            ));
        }
    }
    for &alpha in &[1.0, 2.0] {
        for &(n, m) in &[(5u32, 3u32), (10, 2)] {
            let truth = ig_gamma_quadrature(alpha, order(m), &config()).unwrap();
            let got = expected_estimator_gamma(alpha, n, order(m), &config()).unwrap();
            if (got - truth).abs() >= 1e-7 {
                failures.push(format!(
                    "gamma alpha = {alpha}, n = {n}, m = {m}: E = {got} vs IG = {truth}"
                ));
            }
        }
    }
    report(
        7,
        "estimator expectation equals the population index",
        failures,
    );
}

/// Reference MSE values for the default study design (m = 3,
/// sizes 5/10/30/50/100). Agreement is statistical: the bias must sit within
/// four standard errors of zero and the MSE within ±35% of the reference.
const REFERENCE_MSE_EXPONENTIAL: [f64; 5] = [0.02131, 0.00929, 0.00306, 0.00174, 0.00087];
const REFERENCE_MSE_GAMMA: [f64; 5] = [0.01604, 0.00664, 0.00191, 0.00111, 0.00053];

fn check_study_cells(
    records: &[SimulationRecord],
    reference: &[f64; 5],
    failures: &mut Vec<String>,
) {
    assert_eq!(records.len(), 5);
    for (rec, &ref_mse) in records.iter().zip(reference) {
        if rec.bias.abs() > 4.0 * rec.se_bias {
            failures.push(format!(
                "{} n = {} (n_sim = {}): |bias| = {:.2e} exceeds 4 se = {:.2e}",
                rec.dist_label,
                rec.n,
                rec.n_sim,
                rec.bias.abs(),
                4.0 * rec.se_bias
            ));
        }
        if rec.mse < 0.65 * ref_mse || rec.mse > 1.35 * ref_mse {
            failures.push(format!(
                "{} n = {} (n_sim = {}): mse = {:.5} outside ±35% of {ref_mse}",
                rec.dist_label, rec.n, rec.n_sim, rec.mse
            ));
        }
    }
}

#[test]
fn criterion_8_bias_mse_study_reproduction() {
    let mut failures = Vec::new();
    let exp = Distribution::exponential(1.0).unwrap();
    let gamma = Distribution::gamma(2.0, 1.0).unwrap();
    for n_sim in [1000u32, 100_000] {
        for (dist, reference) in [
            (exp, &REFERENCE_MSE_EXPONENTIAL),
            (gamma, &REFERENCE_MSE_GAMMA),
        ] {
            let config = SimulationConfig {
                n_sim,
                ..SimulationConfig::new(dist, mgini::cli::DEFAULT_SEED)
            };
            let run = mgini::run_simulation(&config).unwrap();
            if run.rejected_replicates != 0 {
                failures.push(format!("{} rejected replicates", run.rejected_replicates));
            }
            check_study_cells(&run.records, reference, &mut failures);
        }
    }
    report(
        8,
        "bias/MSE study matches reference table statistically",
        failures,
    );
}

#[test]
fn criterion_9_simulation_determinism() {
    let mut failures = Vec::new();

    // Library level: identical configs give identical records.
    let config = SimulationConfig {
        sizes: vec![5, 30],
        n_sim: 300,
        ..SimulationConfig::new(Distribution::gamma(2.0, 1.0).unwrap(), 777)
    };
    let a = mgini::run_simulation(&config).unwrap();
    let b = mgini::run_simulation(&config).unwrap();
    if a != b {
        failures.push("library runs with identical config diverged".into());
    }

    // Binary level: byte-identical CSV across invocations.
    let args = [
        "simulate", "--dist", "exp:1", "-m", "3", "--sizes", "5,30", "--nsim", "300", "--seed",
        "777",
    ];
    let run_binary = || {
        let out = Command::new(env!("CARGO_BIN_EXE_mgini"))
            .args(args)
            .output()
            .expect("binary should run");
        assert!(out.status.success());
        out.stdout
    };
    if run_binary() != run_binary() {
        failures.push("binary invocations with identical flags diverged".into());
    }

    report(
        9,
        "simulation output is byte-identical across runs",
        failures,
    );
}
