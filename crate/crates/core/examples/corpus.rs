//! The whole acceptance suite as one text report.
use perfalg::cli::{corpus, Settings};

fn main() -> perfalg::Result<()> {
    let seed = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(0);
    let r = corpus(&Settings { cutoff: 20, seed })?;
    for c in &r.checks {
        println!("{:<5} {:<32} {}", if c.verdict.passed() { "ok" } else { "FAIL" }, c.anchor, c.name);
    }
    println!("{} checks, {}", r.checks.len(), if r.passed { "all pass" } else { "some fail" });
    std::process::exit(r.exit_code());
}
