//! The shipped acceptance suite, shared by the `corpus` verb and the
//! integration tests. Everything here is deterministic given the settings.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::commands::{auslander_checks, gluing_checks, plane_checks, GlueCheck};
use super::document::parse_algebra;
use super::report::{Report, Settings};
use crate::algebra::Algebra;
use crate::derived::{derived_hom, is_exceptional, is_semi_exceptional, is_w_exceptional, PerfComplex, Verdict};
use crate::error::Result;
use crate::exactla::Field;
use crate::gluing::{self, Bimodule};
use crate::homalg::{ext_dims, minimal_resolution, random_module, DimensionBound, ProjectiveModule, ResolutionStatus};
use crate::ncplane::{self, Nondegeneracy, Side};

macro_rules! fixtures {
    ($($name:literal),* $(,)?) => {
        /// Every shipped fixture, by file name.
        pub const FIXTURES: &[(&str, &str)] = &[$(($name, include_str!(concat!("../../fixtures/", $name)))),*];
    };
}

fixtures!(
    "k.json",
    "kxk.json",
    "kx2.json",
    "kx3.json",
    "kx4.json",
    "kx2_f5.json",
    "kx3_f5.json",
    "kx4_f5.json",
    "kronecker.json",
    "a3rel.json",
    "quaternions.json",
    "plane.json",
    "k2.bimodule.json",
    "kx2_simple.bimodule.json",
    "kx2_regular.bimodule.json",
    "kron_p0.bimodule.json",
);

pub fn fixture(name: &str) -> &'static str {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, t)| *t).unwrap_or_else(|| panic!("no fixture {name}"))
}

pub fn fixture_algebra(name: &str) -> Result<Arc<Algebra>> {
    Ok(Arc::new(parse_algebra(fixture(name))?))
}

pub const AUSLANDER_FIXTURES: [&str; 6] = ["kx2.json", "kx3.json", "kx4.json", "kx2_f5.json", "kx3_f5.json", "kx4_f5.json"];

/// Auslander algebras of `k[x]/(x^n)`, `n = 2, 3, 4`, over Q and F_5.
pub fn auslander_suite(r: &mut Report, s: &Settings) -> Result<()> {
    for name in AUSLANDER_FIXTURES {
        auslander_case(r, name, s)?;
    }
    Ok(())
}

pub fn auslander_case(r: &mut Report, name: &str, s: &Settings) -> Result<()> {
    auslander_checks(r, name, fixture_algebra(name)?, s.cutoff)
}

/// Semi-orthogonality, full faithfulness and K0 for the gluing corpus.
pub fn gluing_sod_suite(r: &mut Report, s: &Settings) -> Result<()> {
    for (name, g) in gluing::gluing_corpus(Field::Rationals)? {
        gluing_checks(r, &name, &g, &[GlueCheck::Sod, GlueCheck::K0], s.cutoff)?;
    }
    Ok(())
}

/// Smoothness of a gluing against smoothness of its pieces.
pub fn smooth_suite(r: &mut Report, s: &Settings) -> Result<()> {
    for (name, g) in gluing::gluing_corpus(Field::Rationals)? {
        let rep = gluing::verify_smooth_gluing(&g, s.cutoff)?;
        r.check(format!("{name}: smooth(C) iff smooth(A), smooth(B), S perfect"), "gluing/smooth", rep.verdict.clone());
        if name == "k|k|k2" {
            r.check_bool(format!("{name}: C smooth of dimension 1"), "gluing/smooth", rep.c == DimensionBound::Finite { value: 1 }, || {
                format!("{:?}", rep.c)
            });
        }
        if name.contains("kx2") {
            r.check_bool(
                format!("{name}: C periodic hence not smooth"),
                "gluing/smooth",
                matches!(rep.c, DimensionBound::PeriodicHenceInfinite { .. }),
                || format!("{:?}", rep.c),
            );
        }
        r.table(format!("{name}.smooth"), &rep);
    }
    Ok(())
}

pub const RANDOM_BIMODULES: usize = 50;

/// Round trips on the corpus and on seeded random bimodules over F_5.
pub fn round_trip_suite(r: &mut Report, s: &Settings) -> Result<()> {
    for (name, g) in gluing::gluing_corpus(Field::Rationals)? {
        let ok = gluing::check_round_trip(&g)?;
        r.check_bool(format!("{name}: round trip"), "gluing/round-trip", ok, || "no multiplicative bijection".into());
    }
    let f = Field::Prime(5);
    let k = Arc::new(Algebra::ground(f));
    let kx2 = Arc::new(Algebra::truncated_polynomial(f, 2));
    let kron = gluing::kronecker(f);
    let pairs = [(&kx2, &k), (&k, &kx2), (&kx2, &kx2), (&kron, &k), (&k, &kron), (&kx2, &kron)];
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut dims = Vec::with_capacity(RANDOM_BIMODULES);
    let mut verdict = Verdict::Pass;
    for i in 0..RANDOM_BIMODULES {
        let (a, b) = pairs[i % pairs.len()];
        let bim = Bimodule::random(b.clone(), a.clone(), 4, &mut rng)?;
        dims.push(bim.dim);
        let g = gluing::glue(a.clone(), b.clone(), bim)?;
        if verdict.passed() && !gluing::check_round_trip(&g)? {
            verdict = Verdict::fail(format!("random bimodule {i} (dim {})", g.s.dim));
        }
        if verdict.passed() && g.s.dim > 4 {
            verdict = Verdict::fail(format!("random bimodule {i} has dimension {}", g.s.dim));
        }
    }
    r.check(format!("{RANDOM_BIMODULES} random F_5 bimodules of dim <= 4: round trip"), "gluing/round-trip", verdict);
    r.table("random_bimodule_dims", dims);
    Ok(())
}

/// Cubics, the plane algebra and exhaustive nondegeneracy over small fields.
pub fn plane_suite(r: &mut Report, s: &Settings) -> Result<()> {
    let q = Field::Rationals;
    let comm = ncplane::commutative_tensor(q);
    let zero = ncplane::gamma_cubic(&comm, Side::V).is_zero() && ncplane::gamma_cubic(&comm, Side::U).is_zero();
    r.check_bool("commutative tensor: Gamma is the whole plane", "ncplane/commutative-cubic", zero, || "cubic is nonzero".into());
    let sk = ncplane::sklyanin_tensor(q, &q.from_i64(1), &q.from_i64(2), &q.from_i64(3))?;
    let cubic = ncplane::gamma_cubic(&sk, Side::V).normalized();
    let support = cubic.support();
    r.check_bool(
        "sklyanin(1, 2, 3): nonzero cubic on x^3, y^3, z^3, xyz",
        "ncplane/cubic-support",
        !cubic.is_zero() && support == ["x^3", "y^3", "z^3", "xyz"],
        || format!("{cubic}"),
    );
    r.table("sklyanin_123.cubic", cubic.to_string());
    plane_checks(r, "commutative/Q", &comm, 64, s)?;
    plane_checks(r, "sklyanin(1,2,3)/Q", &sk, 64, s)?;
    let fixture = fixture_algebra("plane.json")?;
    let same = fixture.dim() == 15 && fixture.cartan_matrix()? == vec![vec![1, 3, 6], vec![0, 1, 3], vec![0, 0, 1]];
    r.check_bool("plane.json is the same algebra", "ncplane/plane-algebra", same, || format!("dim {}", fixture.dim()));
    for p in [5, 7] {
        let f = Field::Prime(p);
        let v = ncplane::check_nondegenerate(&ncplane::commutative_tensor(f), 0, s.seed)?;
        let ok = matches!(v, Nondegeneracy::PassesSampled { exhaustive: true, min_rank: 2, max_rank: 2, .. });
        r.check_bool(format!("commutative/F_{p}: exhaustive, every slice of rank exactly 2"), "ncplane/nondegeneracy", ok, || format!("{v:?}"));
        r.table(format!("commutative/F_{p}.nondegeneracy"), &v);
    }
    Ok(())
}

pub const EXT_ALGEBRAS: [&str; 6] = ["k.json", "kxk.json", "kronecker.json", "a3rel.json", "plane.json", "quaternions.json"];
pub const RANDOM_PAIRS: usize = 100;

/// `derived_hom` of resolutions against `ext_dims`, on seeded random modules
/// over the corpus algebras of finite global dimension.
pub fn ext_suite(r: &mut Report, s: &Settings) -> Result<()> {
    let algebras = EXT_ALGEBRAS.iter().map(|n| fixture_algebra(n)).collect::<Result<Vec<_>>>()?;
    let mut rng = ChaCha8Rng::seed_from_u64(s.seed);
    let mut verdicts = vec![Verdict::Pass; algebras.len()];
    let mut counts = vec![0usize; algebras.len()];
    let mut nonzero_degrees = vec![0usize; algebras.len()];
    for i in 0..RANDOM_PAIRS {
        let k = i % algebras.len();
        let a = &algebras[k];
        let m = random_module(a, 5, &mut rng)?;
        let n = random_module(a, 5, &mut rng)?;
        let rm = minimal_resolution(&m, s.cutoff)?;
        let rn = minimal_resolution(&n, s.cutoff)?;
        counts[k] += 1;
        if !matches!(rm.status, ResolutionStatus::Complete(_)) || !matches!(rn.status, ResolutionStatus::Complete(_)) {
            verdicts[k] = Verdict::Inconclusive { reason: format!("pair {i}: resolution reached the cutoff") };
            continue;
        }
        let top = rm.terms.len() + 1;
        let prof = derived_hom(&PerfComplex::from_resolution(&rm), &PerfComplex::from_resolution(&rn))?;
        let ext = ext_dims(&m, &n, top)?;
        let mut bad = prof.dims.keys().find(|&&l| l < 0 || l > top as i64).map(|&l| (l, prof.get(l), 0));
        for (l, &e) in ext.iter().enumerate() {
            if prof.get(l as i64) != e && bad.is_none() {
                bad = Some((l as i64, prof.get(l as i64), e));
            }
        }
        nonzero_degrees[k] += ext.iter().skip(1).filter(|&&e| e > 0).count();
        if let Some((l, d, e)) = bad {
            if verdicts[k].passed() {
                verdicts[k] = Verdict::fail(format!("pair {i}, degree {l}: derived Hom {d} vs Ext {e}"));
            }
        }
    }
    for (k, v) in verdicts.into_iter().enumerate() {
        r.check(format!("{}: derived Hom = Ext on {} random pairs", EXT_ALGEBRAS[k], counts[k]), "derived/ext-agreement", v);
    }
    r.table("ext_pairs", EXT_ALGEBRAS.iter().zip(&counts).map(|(n, c)| (n.to_string(), *c)).collect::<Vec<_>>());
    r.table("ext_nonzero_higher_degrees", EXT_ALGEBRAS.iter().zip(&nonzero_degrees).map(|(n, c)| (n.to_string(), *c)).collect::<Vec<_>>());
    Ok(())
}

fn regular(a: &Arc<Algebra>) -> PerfComplex {
    PerfComplex::stalk(a.clone(), ProjectiveModule::new(vec![a.unit().clone()]), 0)
}

fn negated(v: Verdict, why: &str) -> Verdict {
    match v {
        Verdict::Pass => Verdict::fail(why),
        Verdict::Fail { .. } => Verdict::Pass,
        other => other,
    }
}

/// Exceptional, semi-exceptional and w-exceptional objects.
pub fn exceptional_suite(r: &mut Report, _s: &Settings) -> Result<()> {
    let k = regular(&fixture_algebra("k.json")?);
    r.check("k over k is exceptional", "derived/exceptional", is_exceptional(&k)?);
    let kk = regular(&fixture_algebra("kxk.json")?);
    r.check("k x k over itself is semi-exceptional", "derived/semi-exceptional", is_semi_exceptional(&kk)?);
    r.check("k x k over itself is not exceptional", "derived/exceptional", negated(is_exceptional(&kk)?, "End is k"));
    r.check("k x k over itself is not w-exceptional", "derived/w-exceptional", negated(is_w_exceptional(&kk)?, "End is a division algebra"));
    let h = regular(&fixture_algebra("quaternions.json")?);
    r.check("(-1,-1)/Q over itself is w-exceptional", "derived/w-exceptional", is_w_exceptional(&h)?);
    r.check("(-1,-1)/Q over itself is not exceptional", "derived/exceptional", negated(is_exceptional(&h)?, "End is k"));
    Ok(())
}

pub type Suite = fn(&mut Report, &Settings) -> Result<()>;

/// The seven suites in acceptance order.
pub const SUITES: [(&str, Suite); 7] = [
    ("auslander", auslander_suite),
    ("gluing-sod", gluing_sod_suite),
    ("smooth-gluing", smooth_suite),
    ("round-trip", round_trip_suite),
    ("plane", plane_suite),
    ("ext-oracle", ext_suite),
    ("exceptional", exceptional_suite),
];

/// The `corpus` verb: every suite in one report.
pub fn corpus(s: &Settings) -> Result<Report> {
    let mut r = Report::new("corpus", s.clone());
    for (name, text) in FIXTURES {
        r.input(name, text);
    }
    for (name, suite) in SUITES {
        let before = r.checks.len();
        suite(&mut r, s)?;
        for c in &mut r.checks[before..] {
            c.name = format!("[{name}] {}", c.name);
        }
    }
    Ok(r)
}
