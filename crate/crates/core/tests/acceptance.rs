//! One line per acceptance criterion, with wall-clock budgets. Every
//! comparison is exact.

use std::time::{Duration, Instant};

use perfalg::cli::suite::{self, AUSLANDER_FIXTURES};
use perfalg::cli::{corpus, Report, Settings};

fn settings() -> Settings {
    Settings { cutoff: 20, seed: 0 }
}

struct Line {
    id: usize,
    name: &'static str,
    ok: bool,
    detail: String,
}

fn timed(f: impl FnOnce(&mut Report)) -> (Report, Duration) {
    let mut r = Report::new("acceptance", settings());
    let t = Instant::now();
    f(&mut r);
    (r, t.elapsed())
}

fn suite_line(id: usize, name: &'static str, budget: Duration, run: suite::Suite) -> Line {
    let (r, dt) = timed(|r| run(r, &settings()).expect("suite runs"));
    let fails: Vec<String> = r.failures().map(|c| format!("{} [{}]: {:?}", c.name, c.anchor, c.verdict)).collect();
    let ok = fails.is_empty() && dt < budget;
    let detail = format!("{} checks, {:.2?} (budget {:?}){}", r.checks.len(), dt, budget, if fails.is_empty() { String::new() } else { format!("; {}", fails.join("; ")) });
    Line { id, name, ok, detail }
}

fn auslander_line() -> Line {
    let mut ok = true;
    let mut parts = Vec::new();
    for name in AUSLANDER_FIXTURES {
        let (r, dt) = timed(|r| suite::auslander_case(r, name, &settings()).expect("auslander runs"));
        let pass = r.passed && dt < Duration::from_secs(5);
        // six collection checks, gl.dim, dimension and recovery are all present
        let tags = ["auslander/dimension", "auslander/gldim-bound", "auslander/end-recovery", "auslander/generation"];
        let complete = tags.iter().all(|t| r.checks.iter().any(|c| c.anchor == *t)) && r.checks.len() >= 10;
        ok &= pass && complete;
        parts.push(format!("{name} {:.2?}{}", dt, if pass && complete { "" } else { " FAIL" }));
        for c in r.failures() {
            parts.push(format!("{}: {:?}", c.name, c.verdict));
        }
    }
    Line { id: 1, name: "auslander", ok, detail: parts.join(", ") }
}

fn determinism_line() -> Line {
    let s = Settings { cutoff: 20, seed: 7 };
    let a = corpus(&s).expect("corpus runs").to_json();
    let b = corpus(&s).expect("corpus runs").to_json();
    let c = corpus(&Settings { cutoff: 20, seed: 8 }).expect("corpus runs").to_json();
    let ok = a == b && a.len() > 10_000;
    Line { id: 8, name: "determinism", ok, detail: format!("{} bytes, identical {}, other seed differs {}", a.len(), a == b, a != c) }
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let lines = vec![
        auslander_line(),
        suite_line(2, "gluing-sod", secs(10), suite::gluing_sod_suite),
        suite_line(3, "smooth-gluing", secs(30), suite::smooth_suite),
        suite_line(4, "round-trip", secs(30), suite::round_trip_suite),
        suite_line(5, "plane", secs(20), suite::plane_suite),
        suite_line(6, "ext-oracle", secs(60), suite::ext_suite),
        suite_line(7, "exceptional", secs(1), suite::exceptional_suite),
        determinism_line(),
    ];
    for l in &lines {
        println!("criterion {} {:<14} {}  {}", l.id, l.name, if l.ok { "PASS" } else { "FAIL" }, l.detail);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.ok).map(|l| l.id).collect();
    assert!(failed.is_empty(), "failing criteria: {failed:?}");
}
