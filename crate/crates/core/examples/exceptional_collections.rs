//! Projectives of directed algebras as full exceptional collections.
use perfalg::cli::commands::sod;
use perfalg::cli::suite::fixture;
use perfalg::cli::Settings;

fn main() -> perfalg::Result<()> {
    let s = Settings { cutoff: 20, seed: 0 };
    for name in ["kronecker.json", "a3rel.json", "plane.json", "kxk.json", "kx2.json"] {
        let r = sod((name, fixture(name)), None, &s)?;
        println!("{name}: order {} -> {}", r.tables["order"], if r.passed { "full exceptional" } else { "fails" });
        for c in r.failures() {
            println!("    {} {}: {:?}", c.anchor, c.name, c.verdict);
        }
    }
    // the wrong order is not semi-orthogonal
    let r = sod(("kronecker.json", fixture("kronecker.json")), Some(&[0, 1]), &s)?;
    println!("kronecker.json in order [0, 1]: {}", r.failures().next().map_or("pass".into(), |c| format!("{:?}", c.verdict)));
    Ok(())
}
