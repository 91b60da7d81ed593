//! End-to-end acceptance gate: one pass/fail line per criterion, all
//! tolerances pinned. Runs the full verification suite once and reuses the
//! reports across criteria; determinism is checked against the real binary.

use std::f64::consts::PI;
use std::process::Command;

use num_complex::Complex64;

use iseki_kernel::verify::{run_suite, Family, SampleSpec, VerificationReport};
use iseki_kernel::{theta1_product, theta1_series, SeriesConfig, UpperHalfPoint};

struct Gate {
    failures: Vec<String>,
}

impl Gate {
    fn record(&mut self, id: &str, label: &str, ok: bool, detail: String) {
        println!(
            "criterion {id} ({label}): {}{}",
            if ok { "PASS" } else { "FAIL" },
            if ok {
                String::new()
            } else {
                format!(" — {detail}")
            }
        );
        if !ok {
            self.failures.push(format!("{id}: {detail}"));
        }
    }
}

fn by_id<'a>(reports: &'a [VerificationReport], id: &str) -> Vec<&'a VerificationReport> {
    reports.iter().filter(|r| r.check_id == id).collect()
}

fn residual_ok(reports: &[&VerificationReport], tol: f64) -> (bool, String) {
    let mut worst = 0.0f64;
    let mut failed = 0usize;
    let mut active = 0usize;
    for r in reports {
        if r.skipped {
            continue;
        }
        active += 1;
        worst = worst.max(r.residual);
        if !r.passed || r.residual > tol {
            failed += 1;
        }
    }
    (
        failed == 0 && active > 0,
        format!("{active} active cases, {failed} over tolerance, worst residual {worst:.3e}"),
    )
}

#[test]
fn acceptance() {
    let spec = SampleSpec::default(); // seed 42, count 200, c_max 10
    let cfg = SeriesConfig::default();
    let (reports, summary) = run_suite(&spec, &cfg, &Family::all());
    let mut gate = Gate {
        failures: Vec::new(),
    };

    // 1. Λ functional equation: 200 seeded draws at 1e-9 and the pinned
    //    (1/2, 1/4, 1, 0) instance at 1e-10.
    {
        let iseki = by_id(&reports, "iseki");
        let instance = iseki.first().expect("instance report present");
        let instance_ok = instance.passed && instance.residual < 1e-10;
        let draws = &iseki[1..];
        let (draws_ok, detail) = residual_ok(draws, 1e-9);
        let complex = by_id(&reports, "iseki_complex_theta");
        let complex_ok = complex.iter().all(|r| r.skipped || r.passed);
        gate.record(
            "1",
            "Lambda functional equation",
            instance_ok && draws_ok && draws.len() == 200 && complex_ok,
            format!(
                "instance residual {:.3e}; {} draws: {detail}; complex-theta family ok: {complex_ok}",
                instance.residual,
                draws.len()
            ),
        );
    }

    // 2. θ₁ transformation law over the matrix sweep at 1e-9.
    {
        let (ok, detail) = residual_ok(&by_id(&reports, "theta1_transform"), 1e-9);
        gate.record("2", "theta1 transformation law", ok, detail);
    }

    // 3. η transformation law over the same sweep at 1e-10.
    {
        let (ok, detail) = residual_ok(&by_id(&reports, "eta_transform"), 1e-10);
        gate.record("3", "eta transformation law", ok, detail);
    }

    // 4. Exact character consistency, c ≤ 50 exhaustive, zero tolerance.
    {
        let rs = by_id(&reports, "character_consistency");
        let ok = rs.len() == 50 && rs.iter().all(|r| r.passed && r.residual == 0.0);
        gate.record(
            "4",
            "exact character consistency",
            ok,
            format!("{} aggregate reports", rs.len()),
        );
    }

    // 5. Dedekind reciprocity, exact, k ≤ 300 exhaustive.
    {
        let rs = by_id(&reports, "reciprocity");
        let ok = rs.len() == 299 && rs.iter().all(|r| r.passed && r.residual == 0.0);
        gate.record(
            "5",
            "Dedekind reciprocity",
            ok,
            format!("{} aggregate reports", rs.len()),
        );
    }

    // 6. θ₁ product vs. classical sine series on a 100-point grid, plus the
    //    pinned value at (1/2, i).
    {
        let mut worst = 0.0f64;
        for i in 0..100u64 {
            let (z, tau) = spec.draw_z_tau(0xfeed, i);
            let p = theta1_product(z, tau, &cfg).expect("product converges");
            let s = theta1_series(z, tau, &cfg).expect("series converges");
            worst = worst.max((p - s).norm() / (1.0 + p.norm()));
        }
        let half_i = theta1_series(
            Complex64::new(0.5, 0.0),
            UpperHalfPoint::new(Complex64::new(0.0, 1.0)).unwrap(),
            &cfg,
        )
        .expect("series converges");
        let pinned = (half_i - Complex64::new(0.913_579_138_156_116_821_41, 0.0)).norm();
        let ok = worst < 1e-12 && pinned < 1e-10;
        gate.record(
            "6",
            "theta1 cross-oracle",
            ok,
            format!("grid worst {worst:.3e}, pinned value off by {pinned:.3e}"),
        );
    }

    // 7. Quasi-periodicity |m| ≤ 8 and Eq-29 style shift c ≤ 8 at 1e-9, plus
    //    consistency of the c-shift factor with the m = 2c quasi-period factor.
    {
        let (qp_ok, qp_detail) = residual_ok(&by_id(&reports, "quasiperiod"), 1e-9);
        let (eq_ok, eq_detail) = residual_ok(&by_id(&reports, "eq29"), 1e-9);
        let mut factor_worst = 0.0f64;
        for c in 1i64..=3 {
            let tau = spec.draw_tau(0xbeef, c as u64).value();
            let m = 2 * c;
            let u = 1.0 / c as f64;
            let qp = Complex64::new(-1.0, 0.0).powi(m as i32)
                * (Complex64::new(0.0, -PI)
                    * (2.0 * m as f64 * u + (m * m) as f64 * tau))
                    .exp();
            let shift = (Complex64::new(0.0, 4.0 * PI) * (c * c) as f64 * tau).exp();
            factor_worst = factor_worst.max((qp * shift - 1.0).norm());
        }
        let ok = qp_ok && eq_ok && factor_worst < 1e-10;
        gate.record(
            "7",
            "quasi-periodicity and c-shift",
            ok,
            format!("quasiperiod: {qp_detail}; shift: {eq_detail}; factor consistency {factor_worst:.3e}"),
        );
    }

    // 8. Fourier building blocks: partial fractions at M = 1e5, the F₁/F₂
    //    Bernoulli identities, and the doubling-M slope.
    {
        let checks = ["partial_fraction", "fourier_f1", "fourier_f2"]
            .iter()
            .all(|id| by_id(&reports, id).iter().all(|r| r.passed));
        let slope = by_id(&reports, "partial_fraction_slope");
        let slope_ok = !slope.is_empty() && slope.iter().all(|r| r.skipped || r.passed);
        gate.record(
            "8",
            "Fourier building blocks",
            checks && slope_ok,
            format!("identities ok: {checks}, slope ok: {slope_ok}"),
        );
    }

    // 9. Determinism of the real binary: two runs of `verify all --seed 42
    //    --count 200` are byte-identical with exit code 0.
    {
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_ik"))
                .args(["verify", "all", "--seed", "42", "--count", "200"])
                .output()
                .expect("binary runs")
        };
        let first = run();
        let second = run();
        let ok = first.status.code() == Some(0)
            && second.status.code() == Some(0)
            && first.stdout == second.stdout
            && !first.stdout.is_empty();
        gate.record(
            "9",
            "byte-identical deterministic runs",
            ok,
            format!(
                "exit codes {:?}/{:?}, identical: {}",
                first.status.code(),
                second.status.code(),
                first.stdout == second.stdout
            ),
        );
    }

    assert!(
        summary.failed == 0,
        "suite summary reports failures: {summary:?}"
    );
    assert!(
        gate.failures.is_empty(),
        "acceptance failures:\n{}",
        gate.failures.join("\n")
    );
}
