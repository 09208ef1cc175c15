//! Minimal resolutions, Ext between simples, global dimension with
//! periodicity detection.
use perfalg::cli::suite::fixture_algebra;
use perfalg::homalg::{ext_dims, global_dimension, is_smooth, minimal_resolution, simple_modules};

fn main() -> perfalg::Result<()> {
    for name in ["kronecker.json", "a3rel.json", "kx2.json", "plane.json"] {
        let a = fixture_algebra(name)?;
        let simples = simple_modules(&a)?;
        println!("{name}: gl.dim {:?}, smooth {:?}", global_dimension(&a, 20)?, is_smooth(&a, 20)?);
        for (i, s) in simples.iter().enumerate() {
            let res = minimal_resolution(s, 4)?;
            let ranks: Vec<usize> = res.terms.iter().map(|p| p.len()).collect();
            println!("  S_{i}: resolution ranks {ranks:?} ({:?})", res.status);
            for (j, t) in simples.iter().enumerate() {
                println!("    Ext(S_{i}, S_{j}) = {:?}", ext_dims(s, t, 3)?);
            }
        }
    }
    Ok(())
}
