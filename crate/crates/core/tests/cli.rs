use std::process::{Command, Output};

fn perfalg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_perfalg"))
        .args(args)
        .current_dir(env!("CARGO_MANIFEST_DIR"))
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

#[test]
fn exit_codes() {
    assert_eq!(code(&perfalg(&["analyze", "fixtures/kx3.json"])), 0);
    assert_eq!(code(&perfalg(&["auslander", "fixtures/kx2.json", "--cutoff", "20"])), 0);
    assert_eq!(code(&perfalg(&["glue", "fixtures/k.json", "fixtures/k.json", "fixtures/k2.bimodule.json", "--verify", "smooth,sod,k0"])), 0);
    assert_eq!(code(&perfalg(&["split", "fixtures/kronecker.json", "--vertex", "1"])), 0);
    assert_eq!(code(&perfalg(&["ncplane", "--commutative", "--field", "5"])), 0);
    assert_eq!(code(&perfalg(&["ncplane", "--sklyanin", "1,2,3", "--samples", "20"])), 0);
    // checks that fail still print a report
    let o = perfalg(&["split", "fixtures/kronecker.json", "--vertex", "0"]);
    assert_eq!(code(&o), 1);
    assert!(String::from_utf8_lossy(&o.stdout).contains("\"passed\": false"));
    assert_eq!(code(&perfalg(&["sod", "fixtures/kx2.json"])), 1);
    // usage and parse errors
    assert_eq!(code(&perfalg(&["frobnicate"])), 2);
    assert_eq!(code(&perfalg(&["analyze"])), 2);
    assert_eq!(code(&perfalg(&["analyze", "fixtures/missing.json"])), 2);
    assert_eq!(code(&perfalg(&["analyze", "Cargo.toml"])), 2);
    assert_eq!(code(&perfalg(&["glue", "fixtures/k.json", "fixtures/k.json", "fixtures/k2.bimodule.json", "--verify", "magic"])), 2);
    assert_eq!(code(&perfalg(&["ncplane", "--sklyanin", "0,0,0"])), 2);
    assert_eq!(code(&perfalg(&["ncplane", "--commutative", "--field", "6"])), 2);
}

#[test]
fn corpus_is_byte_identical() {
    let a = perfalg(&["corpus", "--seed", "3"]);
    let b = perfalg(&["corpus", "--seed", "3"]);
    assert_eq!(code(&a), 0, "{}", String::from_utf8_lossy(&a.stdout));
    assert_eq!(a.stdout, b.stdout);
    let text = perfalg(&["corpus", "--format", "text"]);
    assert!(String::from_utf8_lossy(&text.stdout).starts_with("corpus (pass)"));
}
