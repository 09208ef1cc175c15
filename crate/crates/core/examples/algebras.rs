//! Algebras from documents: radical, Cartan matrix, projectives.
use perfalg::cli::suite::fixture;
use perfalg::cli::parse_algebra;

fn main() -> perfalg::Result<()> {
    for name in ["kx3.json", "kronecker.json", "a3rel.json", "quaternions.json", "plane.json"] {
        let a = parse_algebra(fixture(name))?;
        let rad = a.radical()?;
        println!(
            "{name:<18} dim {:>2}  rad {:>2}  Loewy length {}  simples {}  Cartan {:?}",
            a.dim(),
            rad.dim(),
            a.nilpotency_index()?,
            a.projective_data()?.class_count(),
            a.cartan_matrix()?
        );
    }
    let bad = fixture("kx2.json").replace("\"path\": [\n            \"x\"", "\"path\": [\n            \"z\"");
    println!("unknown arrow: {}", parse_algebra(&bad).unwrap_err());
    Ok(())
}
