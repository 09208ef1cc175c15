//! The verbs. Each takes document text (plus a display name) and returns a
//! report; library errors bubble up and mean exit code 2.

use std::sync::Arc;

use serde::Serialize;

use super::document::{parse_algebra, parse_bimodule};
use super::report::{Report, Settings};
use crate::algebra::Algebra;
use crate::auslander;
use crate::derived::{derived_hom, is_exceptional, projective_stalk, verify_sod, GenerationCertificate, PerfComplex, Verdict};
use crate::error::{Error, Result};
use crate::exactla::{Field, Scalar};
use crate::gluing::{self, GluedAlgebra};
use crate::homalg::{global_dimension, is_proper, is_regular, is_smooth, DimensionBound};
use crate::ncplane::{self, MuTensor};

/// A named document: display name and contents.
pub type Doc<'a> = (&'a str, &'a str);

fn load(r: &mut Report, doc: Doc) -> Result<Arc<Algebra>> {
    r.input(doc.0, doc.1);
    Ok(Arc::new(parse_algebra(doc.1)?))
}

#[derive(Serialize)]
struct AlgebraSummary {
    field: String,
    dim: usize,
    radical_dim: usize,
    nilpotency_index: usize,
    simples: usize,
    cartan: Vec<Vec<usize>>,
}

fn summary(a: &Algebra) -> Result<AlgebraSummary> {
    Ok(AlgebraSummary {
        field: a.field().name(),
        dim: a.dim(),
        radical_dim: a.radical()?.dim(),
        nilpotency_index: a.nilpotency_index()?,
        simples: a.projective_data()?.class_count(),
        cartan: a.cartan_matrix()?,
    })
}

pub fn analyze(doc: Doc, s: &Settings) -> Result<Report> {
    let mut r = Report::new("analyze", s.clone());
    let a = load(&mut r, doc)?;
    r.check("structure constants are associative and unital", "algebra/structure", Verdict::Pass);
    let sum = summary(&a)?;
    let ss = a.semisimple_quotient()?.algebra.dim();
    r.check_bool("dim A = dim rad A + dim A/rad A", "algebra/radical-split", sum.dim == sum.radical_dim + ss, || {
        format!("{} != {} + {ss}", sum.dim, sum.radical_dim)
    });
    let gldim = global_dimension(&a, s.cutoff)?;
    let regular = is_regular(&a, s.cutoff)?;
    let smooth = is_smooth(&a, s.cutoff)?;
    r.check_bool("smooth implies regular", "homalg/smooth-implies-regular", !smooth.is_finite() || regular.is_finite(), || {
        format!("smooth {smooth:?} but regular {regular:?}")
    });
    let proper = is_proper(&a, s.cutoff)?;
    r.check_bool("Ext between simples is finite-dimensional", "homalg/proper", proper, || "an Ext space is infinite".into());
    r.table("algebra", &sum);
    r.table("semisimple_quotient_dim", ss);
    r.table("global_dimension", gldim);
    r.table("regular", regular);
    r.table("smooth", smooth);
    r.table("proper", proper);
    Ok(r)
}

/// `sum_{i,j <= n} min(i, j)`: `Hom(Lambda/r^i, Lambda/r^j)` for a uniserial local `Lambda`.
pub fn auslander_dim_oracle(n: usize) -> usize {
    n * (n + 1) * (2 * n + 1) / 6
}

/// Every claim about the Auslander algebra of `lambda`, appended to `r`.
pub fn auslander_checks(r: &mut Report, label: &str, lambda: Arc<Algebra>, cutoff: usize) -> Result<()> {
    let d = auslander::build(lambda.clone())?;
    let g = d.gamma_algebra().clone();
    let tag = |t: &str| if label.is_empty() { t.to_string() } else { format!("{label}: {t}") };
    if lambda.is_commutative() && lambda.projective_data()?.class_count() == 1 && lambda.radical()?.dim() + 1 == lambda.dim() {
        let want = auslander_dim_oracle(d.n);
        r.check_bool(tag("dim Gamma"), "auslander/dimension", g.dim() == want, || format!("{} != {want}", g.dim()));
    }
    let gl = auslander::verify_gldim(&d, cutoff)?;
    r.check(tag("gl.dim Gamma <= n + 1"), "auslander/gldim-bound", gl.verdict.clone());
    let coll = auslander::verify_collection(&d)?;
    for c in &coll.checks {
        r.check(tag(&c.tag), c.tag.clone(), c.verdict.clone());
    }
    let rec = auslander::verify_endomorphism_recovery(&d)?;
    r.check(tag("End(P_n) = Lambda"), "auslander/end-recovery", rec.verdict.clone());
    let emb = auslander::embed_perf(&d)?;
    r.check(tag("- (x) P_n preserves derived Homs"), "auslander/embedding", emb.verdict.clone());
    let prefix = if label.is_empty() { String::new() } else { format!("{label}.") };
    r.table(format!("{prefix}gamma"), summary(&g)?);
    r.table(format!("{prefix}gldim"), &gl);
    r.table(format!("{prefix}end_dims"), &coll.end_dims);
    r.table(format!("{prefix}kernel_dims"), &coll.kernel_dims);
    r.table(format!("{prefix}hom_profiles"), &coll.profiles);
    r.table(format!("{prefix}recovery"), &rec);
    Ok(())
}

pub fn auslander(doc: Doc, s: &Settings) -> Result<Report> {
    let mut r = Report::new("auslander", s.clone());
    let lambda = load(&mut r, doc)?;
    r.table("lambda", summary(&lambda)?);
    auslander_checks(&mut r, "", lambda, s.cutoff)?;
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum GlueCheck {
    Sod,
    K0,
    Smooth,
    Regular,
    RoundTrip,
}

impl GlueCheck {
    pub const ALL: [GlueCheck; 5] = [GlueCheck::Sod, GlueCheck::K0, GlueCheck::Smooth, GlueCheck::Regular, GlueCheck::RoundTrip];

    pub fn parse(word: &str) -> Option<GlueCheck> {
        Some(match word.trim() {
            "sod" => GlueCheck::Sod,
            "k0" => GlueCheck::K0,
            "smooth" => GlueCheck::Smooth,
            "regular" => GlueCheck::Regular,
            "round-trip" | "roundtrip" => GlueCheck::RoundTrip,
            _ => return None,
        })
    }
}

/// The checks of a gluing report, named after `label`.
pub fn gluing_checks(r: &mut Report, label: &str, g: &GluedAlgebra, which: &[GlueCheck], cutoff: usize) -> Result<()> {
    let tag = |t: &str| if label.is_empty() { t.to_string() } else { format!("{label}: {t}") };
    let prefix = if label.is_empty() { String::new() } else { format!("{label}.") };
    r.table(format!("{prefix}dims"), [g.a.dim(), g.b.dim(), g.s.dim, g.algebra.dim()]);
    if which.contains(&GlueCheck::Sod) || which.contains(&GlueCheck::K0) {
        let rep = gluing::verify_gluing_sod(g)?;
        if which.contains(&GlueCheck::Sod) {
            r.check(tag("e_a C e_b = 0"), "gluing/corner", rep.corner.clone());
            r.check(tag("Hom(B part, A part[*]) = 0"), "gluing/semiorthogonal", rep.vanishing.clone());
            r.check(tag("induction preserves derived Homs"), "gluing/fully-faithful", rep.fully_faithful.clone());
            let (c, a, b) = rep.cartan_determinants;
            r.check_bool(tag("det Cartan(C) = det Cartan(A) det Cartan(B)"), "gluing/cartan-determinant", rep.determinant_multiplicative, || {
                format!("{c} != {a} * {b}")
            });
            let sod = rep.sod.as_ref().map_or(Verdict::fail("corner check failed first"), |s| {
                Verdict::from_bool(s.holds(), || format!("{s:?}"))
            });
            r.check(tag("<Perf A, Perf B> with generation certificate"), "gluing/sod", sod);
        }
        if which.contains(&GlueCheck::K0) {
            r.check(tag("K0 ranks add"), "gluing/k0", rep.k0.clone());
        }
        r.table(format!("{prefix}cartan"), &rep.cartan);
        r.table(format!("{prefix}cartan_determinants"), rep.cartan_determinants);
    }
    if which.contains(&GlueCheck::Smooth) {
        let rep = gluing::verify_smooth_gluing(g, cutoff)?;
        r.check(tag("smooth(C) iff smooth(A), smooth(B), S perfect"), "gluing/smooth", rep.verdict.clone());
        r.table(format!("{prefix}smooth"), &rep);
    }
    if which.contains(&GlueCheck::Regular) {
        let rep = gluing::verify_regular_gluing(g, cutoff)?;
        r.check(tag("regularity passes through the gluing"), "gluing/regular", rep.verdict.clone());
        r.table(format!("{prefix}regular"), &rep);
    }
    if which.contains(&GlueCheck::RoundTrip) {
        let ok = gluing::check_round_trip(g)?;
        r.check_bool(tag("split(glue(A, B, S)) = (A, B, S) and back"), "gluing/round-trip", ok, || "no multiplicative bijection".into());
    }
    Ok(())
}

pub fn glue(a: Doc, b: Doc, s_doc: Doc, which: &[GlueCheck], s: &Settings) -> Result<Report> {
    let mut r = Report::new("glue", s.clone());
    let a_alg = load(&mut r, a)?;
    let b_alg = load(&mut r, b)?;
    r.input(s_doc.0, s_doc.1);
    let bim = parse_bimodule(s_doc.1, b_alg.clone(), a_alg.clone())?;
    let g = gluing::glue(a_alg, b_alg, bim)?;
    gluing_checks(&mut r, "", &g, which, s.cutoff)?;
    Ok(r)
}

#[derive(Clone, Debug)]
pub enum IdempotentSpec {
    Vertices(Vec<String>),
    Coefficients(Vec<String>),
}

fn idempotent(a: &Algebra, spec: &IdempotentSpec) -> Result<Vec<Scalar>> {
    let field = a.field();
    match spec {
        IdempotentSpec::Vertices(names) => {
            let p = a.presentation().ok_or_else(|| Error::Validation("--vertex needs a quiver presentation".into()))?;
            let mut e = a.zero();
            for n in names {
                let v = p.vertices.iter().position(|x| x == n).ok_or_else(|| Error::Validation(format!("unknown vertex {n}")))?;
                // vertices are the first basis elements of a path algebra
                e[v] = e[v].clone() + field.one();
            }
            Ok(e)
        }
        IdempotentSpec::Coefficients(cs) => {
            if cs.len() != a.dim() {
                return Err(Error::Validation(format!("idempotent needs {} coordinates", a.dim())));
            }
            cs.iter().map(|c| field.parse(c)).collect()
        }
    }
}

pub fn split(doc: Doc, spec: &IdempotentSpec, s: &Settings) -> Result<Report> {
    let mut r = Report::new("split", s.clone());
    let c = load(&mut r, doc)?;
    let e = idempotent(&c, spec)?;
    if !c.is_idempotent(&e) {
        return Err(Error::Validation("the given element is not idempotent".into()));
    }
    match gluing::split_gluing(c.clone(), &e) {
        Ok(g) => {
            r.check("e_a C e_b = 0", "gluing/corner", Verdict::Pass);
            let ok = gluing::check_reassembly(&g)?;
            r.check_bool("glue(e_a C e_a, e_b C e_b, e_b C e_a) = C", "gluing/reassembly", ok, || "no multiplicative bijection".into());
            gluing_checks(&mut r, "", &g, &[GlueCheck::Sod, GlueCheck::K0, GlueCheck::RoundTrip], s.cutoff)?;
        }
        Err(Error::CornerNotSemiorthogonal(dim)) => {
            r.check("e_a C e_b = 0", "gluing/corner", Verdict::fail(format!("e_a C e_b has dimension {dim}")));
        }
        Err(e) => return Err(e),
    }
    Ok(r)
}

/// Orders objects so that `Hom(E_i, E_j[*]) = 0` for `i > j` when possible:
/// repeatedly moves to the back an object with no maps to the others.
pub fn semiorthogonal_order(objects: &[PerfComplex]) -> Result<Vec<usize>> {
    let n = objects.len();
    let mut zero = vec![vec![true; n]; n];
    for i in 0..n {
        for j in 0..n {
            if i != j {
                zero[i][j] = derived_hom(&objects[i], &objects[j])?.is_zero();
            }
        }
    }
    let mut left: Vec<usize> = (0..n).collect();
    let mut back = Vec::with_capacity(n);
    while !left.is_empty() {
        let pick = left.iter().rposition(|&x| left.iter().all(|&y| x == y || zero[x][y])).unwrap_or(left.len() - 1);
        back.push(left.remove(pick));
    }
    back.reverse();
    Ok(back)
}

pub fn sod(doc: Doc, order: Option<&[usize]>, s: &Settings) -> Result<Report> {
    let mut r = Report::new("sod", s.clone());
    let a = load(&mut r, doc)?;
    let data = a.projective_data()?;
    let all: Vec<PerfComplex> = (0..data.class_count()).map(|c| projective_stalk(&a, data.representative(c))).collect();
    let order = match order {
        Some(o) => {
            let mut sorted = o.to_vec();
            sorted.sort_unstable();
            if sorted != (0..all.len()).collect::<Vec<_>>() {
                return Err(Error::Validation(format!("--order must list the classes 0..{} once each", all.len())));
            }
            o.to_vec()
        }
        None => semiorthogonal_order(&all)?,
    };
    let objects: Vec<PerfComplex> = order.iter().map(|&i| all[i].clone()).collect();
    let rep = verify_sod(&objects, &GenerationCertificate::trivial(objects.clone()))?;
    let semi = match &rep.semiorthogonality.first_failure {
        None => Verdict::Pass,
        Some(f) => Verdict::fail(format!("Hom(E_{}, E_{}[{}]) has dimension {}", f.from, f.to, f.degree, f.dim)),
    };
    r.check("Hom(E_i, E_j[*]) = 0 for i > j", "derived/semiorthogonal", semi);
    let gen = if rep.covered.iter().all(|&c| c) { rep.certificate.clone() } else { Verdict::fail("a projective class is not reached") };
    r.check("the collection generates Perf A", "derived/generation", gen);
    let k0 = rep.k0.as_ref().map_or(Verdict::Inconclusive { reason: "no K0 data".into() }, |k| {
        Verdict::from_bool(k.holds, || format!("block ranks {:?} vs {} simples", k.blocks, k.simples))
    });
    r.check("K0 ranks of the blocks add up", "derived/k0-ranks", k0);
    for (pos, x) in objects.iter().enumerate() {
        r.check(format!("E_{pos} exceptional"), "derived/exceptional", is_exceptional(x)?);
    }
    let mut profiles = Vec::new();
    for (i, x) in objects.iter().enumerate() {
        for (j, y) in objects.iter().enumerate() {
            profiles.push((i, j, derived_hom(x, y)?));
        }
    }
    r.table("order", &order);
    r.table("cartan", a.cartan_matrix()?);
    r.table("hom_profiles", profiles);
    Ok(r)
}

#[derive(Clone, Debug)]
pub enum TensorSpec {
    Commutative,
    Sklyanin([String; 3]),
}

pub fn tensor(spec: &TensorSpec, field: Field) -> Result<MuTensor> {
    match spec {
        TensorSpec::Commutative => Ok(ncplane::commutative_tensor(field)),
        TensorSpec::Sklyanin([a, b, c]) => ncplane::sklyanin_tensor(field, &field.parse(a)?, &field.parse(b)?, &field.parse(c)?),
    }
}

pub fn plane_checks(r: &mut Report, label: &str, t: &MuTensor, samples: usize, s: &Settings) -> Result<()> {
    let tag = |x: &str| if label.is_empty() { x.to_string() } else { format!("{label}: {x}") };
    let prefix = if label.is_empty() { String::new() } else { format!("{label}.") };
    let rep = ncplane::verify_plane(t, s.cutoff, samples, s.seed)?;
    let shape = rep.dim == 15 && rep.simples == 3 && rep.cartan == vec![vec![1, 3, 6], vec![0, 1, 3], vec![0, 0, 1]];
    r.check_bool(tag("dim 15, 3 simples, Cartan [[1,3,6],[0,1,3],[0,0,1]]"), "ncplane/plane-algebra", shape, || {
        format!("dim {}, {} simples, Cartan {:?}", rep.dim, rep.simples, rep.cartan)
    });
    r.check_bool(tag("gl.dim = 2"), "ncplane/gldim", rep.gldim == DimensionBound::Finite { value: 2 }, || format!("{:?}", rep.gldim));
    let coll = rep.exceptional.iter().all(|v| v.passed()) && rep.strong && rep.sod.holds() && rep.round_trip;
    r.check_bool(tag("vertex projectives form a strong full exceptional collection"), "ncplane/collection", coll, || {
        format!("exceptional {:?}, strong {}, sod {}, round trip {}", rep.exceptional, rep.strong, rep.sod.holds(), rep.round_trip)
    });
    r.check_bool(tag("Gamma_U and Gamma_V are both curves or both the plane"), "ncplane/point-scheme", rep.cubic_u.is_zero() == rep.cubic_v.is_zero(), || {
        format!("{} vs {}", rep.cubic_u, rep.cubic_v)
    });
    r.check(tag("every slice has rank at least 2"), "ncplane/nondegeneracy", Verdict::from_bool(rep.nondegeneracy.passed(), || format!("{:?}", rep.nondegeneracy)));
    r.table(format!("{prefix}cubic_v"), rep.cubic_v.normalized());
    r.table(format!("{prefix}cubic_u"), rep.cubic_u.normalized());
    r.table(format!("{prefix}cubic_v_text"), rep.cubic_v.normalized().to_string());
    r.table(format!("{prefix}nondegeneracy"), &rep.nondegeneracy);
    r.table(format!("{prefix}gldim"), rep.gldim);
    Ok(())
}

pub fn ncplane(spec: &TensorSpec, field: Field, samples: usize, s: &Settings) -> Result<Report> {
    let mut r = Report::new("ncplane", s.clone());
    let t = tensor(spec, field)?;
    r.table("field", field.name());
    r.table(
        "tensor",
        match spec {
            TensorSpec::Commutative => "commutative".to_string(),
            TensorSpec::Sklyanin([a, b, c]) => format!("sklyanin({a}, {b}, {c})"),
        },
    );
    plane_checks(&mut r, "", &t, samples, s)?;
    Ok(r)
}
