//! The nine acceptance criteria, one summary line each.
//!
//! Run with `cargo test -p sullivan --test acceptance -- --nocapture`.

use std::time::{Duration, Instant};

use sullivan::model::MinimalModel;
use sullivan::report::Check;
use sullivan::suite::{self, SuiteConfig};

struct Outcome {
    id: u32,
    name: &'static str,
    passed: bool,
    elapsed: Duration,
    budget: Option<Duration>,
    detail: String,
}

fn run(id: u32, name: &'static str, budget: Option<u64>, f: impl FnOnce() -> Check) -> Outcome {
    let start = Instant::now();
    let check = f();
    let elapsed = start.elapsed();
    let budget = budget.map(Duration::from_secs);
    let in_time = budget.is_none_or(|b| elapsed <= b);
    let detail = if check.passed() {
        String::new()
    } else {
        check.to_text()
    };
    Outcome {
        id,
        name,
        passed: check.passed() && in_time,
        elapsed,
        budget,
        detail,
    }
}

fn corpus_with_bundled(cfg: &SuiteConfig) -> Vec<MinimalModel> {
    let mut all = suite::bundled_models();
    all.extend(suite::random_corpus(cfg));
    all
}

#[test]
fn acceptance() {
    let cfg = SuiteConfig::new(42);
    let bundled = suite::bundled_models();
    let all = corpus_with_bundled(&cfg);
    let sample: Vec<MinimalModel> = all.iter().take(bundled.len() + 20).cloned().collect();

    let mut outcomes = vec![
        run(
            1,
            "model validation and injected failures",
            Some(1),
            suite::criterion_validation,
        ),
        run(2, "naive = cautious filtration", Some(30), || {
            suite::criterion_filtrations(&all)
        }),
        run(3, "δ-injectivity and block bounds", Some(30), || {
            suite::criterion_step_bounds(&all)
        }),
        run(4, "weight bounds", Some(30), || {
            suite::criterion_weights(&all)
        }),
        run(5, "exponent table", None, suite::criterion_exponents),
        run(6, "fundamental theorems", Some(10), || {
            suite::criterion_fundamental(&cfg, &bundled)
        }),
        run(7, "obstruction calculus", None, || {
            suite::criterion_obstruction(&cfg, &sample)
        }),
        run(8, "Whitehead brackets", Some(60), || {
            suite::criterion_whitehead(&cfg)
        }),
    ];
    let start = Instant::now();
    let first = suite::selftest(&cfg).to_json();
    let second = suite::selftest(&cfg).to_json();
    outcomes.push(Outcome {
        id: 9,
        name: "deterministic selftest report",
        passed: first == second,
        elapsed: start.elapsed(),
        budget: None,
        detail: String::new(),
    });

    println!();
    for o in &outcomes {
        let budget = o
            .budget
            .map(|b| format!(" (budget {}s)", b.as_secs()))
            .unwrap_or_default();
        println!(
            "criterion {}: {} - {} [{:.2}s{}]",
            o.id,
            if o.passed { "PASS" } else { "FAIL" },
            o.name,
            o.elapsed.as_secs_f64(),
            budget
        );
    }
    for o in outcomes.iter().filter(|o| !o.passed) {
        println!("\ncriterion {} detail:\n{}", o.id, o.detail);
    }
    let failed: Vec<u32> = outcomes
        .iter()
        .filter(|o| !o.passed)
        .map(|o| o.id)
        .collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
