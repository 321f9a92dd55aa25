//! One test per acceptance criterion; each prints a single PASS/FAIL line.

use std::process::Command;
use std::time::{Duration, Instant};

use floercas::check::{self, CriterionResult, Limits};

const LIMITS: Limits = Limits { max_genus: 5 };

fn report(n: u8, budget: Option<Duration>, f: impl FnOnce() -> CriterionResult) {
    let start = Instant::now();
    let r = f();
    let took = start.elapsed();
    let in_time = budget.is_none_or(|b| took < b);
    let pass = r.passed && in_time;
    let budget_note = budget
        .map(|b| format!(" (budget {}s)", b.as_secs()))
        .unwrap_or_default();
    println!(
        "criterion {n}: {} {} [{:.2}s{budget_note}] {}",
        if pass { "PASS" } else { "FAIL" },
        r.name,
        took.as_secs_f64(),
        r.detail
    );
    assert!(r.passed, "criterion {n} failed: {}", r.detail);
    assert!(in_time, "criterion {n} over budget: {took:?}");
}

#[test]
fn criterion_01_dimensions() {
    report(1, Some(Duration::from_secs(30)), || {
        check::dimensions(LIMITS)
    });
}

#[test]
fn criterion_02_gradings() {
    report(2, None, || check::gradings(LIMITS));
}

#[test]
fn criterion_03_filtration() {
    report(3, Some(Duration::from_secs(30)), || {
        check::filtration(LIMITS)
    });
}

#[test]
fn criterion_04_socle() {
    report(4, None, || check::socle(LIMITS));
}

#[test]
fn criterion_05_k_modules() {
    report(5, None, || check::k_modules(LIMITS));
}

#[test]
fn criterion_06_nilpotency() {
    report(6, None, || check::nilpotency(LIMITS));
}

#[test]
fn criterion_07_reduced_module() {
    report(7, None, || check::reduced_module(LIMITS));
}

#[test]
fn criterion_08_primitive_parts() {
    report(8, Some(Duration::from_secs(60)), || {
        check::primitive_parts(LIMITS)
    });
}

#[test]
fn criterion_09_finite_type() {
    report(9, None, || check::finite_type(LIMITS));
}

#[test]
fn criterion_10_fiber_sums() {
    report(10, Some(Duration::from_secs(10)), || {
        check::fiber_sums(LIMITS)
    });
}

// Taken literally over every g, h ≤ 4. Products with a torus factor fall
// outside the hypotheses of the congruence and are expected to fail here.
#[test]
fn criterion_11_congruence() {
    report(11, None, || check::congruence_all(LIMITS));
}

#[test]
fn criterion_12_determinism() {
    report(12, Some(Duration::from_secs(180)), || {
        let run = || {
            let out = Command::new(env!("CARGO_BIN_EXE_floercas"))
                .args(["check", "--max-genus", "3"])
                .output()
                .expect("binary runs");
            (out.status.code(), out.stdout)
        };
        let (c1, a) = run();
        let (c2, b) = run();
        CriterionResult {
            id: 12,
            name: "determinism",
            claim: "check --max-genus 3 is byte-identical across runs",
            passed: a == b && c1 == c2 && c1 == Some(0),
            detail: format!(
                "{} bytes, exit codes {c1:?}/{c2:?}, identical: {}",
                a.len(),
                a == b
            ),
        }
    });
}
