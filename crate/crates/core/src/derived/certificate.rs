//! Explicit witnesses that a set of objects generates the perfect category.

use serde::Serialize;

use super::complex::{ChainMap, PerfComplex};
use super::hom::{check_semiorthogonal, end_algebra, homotopic, Semiorthogonality, Verdict};
use crate::error::{Error, Result};
use crate::homalg::ProjectiveModule;

/// One construction step; each step appends a node.
#[derive(Clone, Debug)]
pub enum CertStep {
    /// The `i`-th generator.
    Generator(usize),
    Shift { node: usize, by: i64 },
    Sum { left: usize, right: usize },
    /// Cone of a closed degree-0 map between two nodes.
    Cone { source: usize, target: usize, map: ChainMap },
    /// `object` is a retract of `node`: `retraction` after `inclusion` is
    /// homotopic to the identity.
    Summand { node: usize, object: PerfComplex, inclusion: ChainMap, retraction: ChainMap },
}

#[derive(Clone, Debug)]
pub struct GenerationCertificate {
    pub generators: Vec<PerfComplex>,
    pub steps: Vec<CertStep>,
    /// Nodes claimed to be the indecomposable projectives (as stalks).
    pub targets: Vec<usize>,
}

impl GenerationCertificate {
    /// The generators are already the projectives.
    pub fn trivial(generators: Vec<PerfComplex>) -> GenerationCertificate {
        let n = generators.len();
        GenerationCertificate { generators, steps: (0..n).map(CertStep::Generator).collect(), targets: (0..n).collect() }
    }

    /// Replays every step and returns the nodes.
    pub fn replay(&self) -> Result<Vec<PerfComplex>> {
        let mut nodes: Vec<PerfComplex> = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate() {
            let bad = |reason: String| Error::InvalidCertificateStep { step: i, reason };
            let get = |n: usize| nodes.get(n).cloned().ok_or_else(|| bad(format!("node {n} does not exist yet")));
            let node = match step {
                CertStep::Generator(g) => {
                    self.generators.get(*g).cloned().ok_or_else(|| bad(format!("no generator {g}")))?
                }
                CertStep::Shift { node, by } => get(*node)?.shift(*by),
                CertStep::Sum { left, right } => get(*left)?.direct_sum(&get(*right)?)?,
                CertStep::Cone { source, target, map } => {
                    let (x, y) = (get(*source)?, get(*target)?);
                    if map.degree != 0 || !map.fits(&x, &y) {
                        return Err(bad("cone map has the wrong shape".into()));
                    }
                    if !map.is_closed(&x, &y) {
                        return Err(bad("cone map is not a chain map".into()));
                    }
                    PerfComplex::cone(map, &x, &y)?
                }
                CertStep::Summand { node, object, inclusion, retraction } => {
                    let x = get(*node)?;
                    let a = x.algebra();
                    let fits = inclusion.degree == 0
                        && retraction.degree == 0
                        && inclusion.fits(object, &x)
                        && retraction.fits(&x, object);
                    if !fits {
                        return Err(bad("summand maps have the wrong shape".into()));
                    }
                    if !inclusion.is_closed(object, &x) || !retraction.is_closed(&x, object) {
                        return Err(bad("summand maps are not chain maps".into()));
                    }
                    let round = retraction.compose(a, inclusion, object, &x, object);
                    if !homotopic(object, object, &round, &object.identity())? {
                        return Err(bad("retraction after inclusion is not homotopic to the identity".into()));
                    }
                    object.clone()
                }
            };
            nodes.push(node);
        }
        Ok(nodes)
    }
}

/// Classes of indecomposable projectives covered by a stalk complex.
fn stalk_classes(c: &PerfComplex) -> Vec<usize> {
    if c.is_zero() || c.lo() != c.hi() {
        return Vec::new();
    }
    let a = c.algebra();
    let mut out = Vec::new();
    for e in &c.term(c.lo()).summands {
        if let Ok(mult) = a.projective_multiplicities(e) {
            out.extend(mult.iter().enumerate().filter(|(_, m)| **m > 0).map(|(k, _)| k));
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct K0Check {
    /// Number of simple modules of `End(E_i)`, per object.
    pub blocks: Vec<usize>,
    pub simples: usize,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct SODReport {
    pub semiorthogonality: Semiorthogonality,
    pub certificate: Verdict,
    /// Projective classes reached by the certificate's targets.
    pub covered: Vec<bool>,
    pub k0: Option<K0Check>,
}

impl SODReport {
    pub fn holds(&self) -> bool {
        self.semiorthogonality.holds()
            && self.certificate.passed()
            && self.covered.iter().all(|&b| b)
            && self.k0.as_ref().is_none_or(|k| k.holds)
    }
}

/// Semi-orthogonality plus a replayed generation certificate.
pub fn verify_sod(objects: &[PerfComplex], cert: &GenerationCertificate) -> Result<SODReport> {
    let a = objects.first().ok_or_else(|| Error::InvalidComplex("empty collection".into()))?.algebra().clone();
    let semiorthogonality = check_semiorthogonal(objects)?;
    let classes = a.projective_data()?.class_count();
    let mut covered = vec![false; classes];
    let certificate = match cert.replay() {
        Ok(nodes) => {
            let unknown = cert.generators.iter().position(|g| !objects.contains(g));
            match unknown {
                Some(g) => Verdict::fail(format!("generator {g} is not in the collection")),
                None => {
                    for &t in &cert.targets {
                        match nodes.get(t) {
                            Some(n) => {
                                for c in stalk_classes(n) {
                                    covered[c] = true;
                                }
                            }
                            None => return Err(Error::InvalidCertificateStep { step: t, reason: "missing target node".into() }),
                        }
                    }
                    Verdict::Pass
                }
            }
        }
        Err(Error::InvalidCertificateStep { step, reason }) => Verdict::fail(format!("step {step}: {reason}")),
        Err(e) => return Err(e),
    };
    // only meaningful when every End(E_i) is concentrated in degree 0
    let mut blocks = Vec::new();
    for e in objects {
        match end_algebra(e) {
            Ok(end) => blocks.push(end.projective_data()?.class_count()),
            Err(Error::NotFormalInDegreeZero { .. }) => {
                blocks.clear();
                break;
            }
            Err(e) => return Err(e),
        }
    }
    let k0 = (blocks.len() == objects.len()).then(|| {
        let total: usize = blocks.iter().sum();
        K0Check { holds: total == classes, blocks, simples: classes }
    });
    Ok(SODReport { semiorthogonality, certificate, covered, k0 })
}

/// Stalk of a single idempotent in degree 0.
pub fn projective_stalk(a: &std::sync::Arc<crate::algebra::Algebra>, e: &crate::algebra::Elem) -> PerfComplex {
    PerfComplex::stalk(a.clone(), ProjectiveModule::new(vec![e.clone()]), 0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{Algebra, QuiverPresentation};
    use crate::exactla::Field;
    use crate::homalg::AMatrix;
    use std::sync::Arc;

    fn kronecker() -> Arc<Algebra> {
        Arc::new(
            Algebra::from_quiver(
                QuiverPresentation::new(Field::Rationals, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1),
            )
            .unwrap(),
        )
    }

    #[test]
    fn trivial_certificate_for_projectives() {
        let a = kronecker();
        let objs = vec![projective_stalk(&a, &a.basis_elem(1)), projective_stalk(&a, &a.basis_elem(0))];
        let r = verify_sod(&objs, &GenerationCertificate::trivial(objs.clone())).unwrap();
        assert!(r.holds(), "{r:?}");
        let r = verify_sod(&[objs[1].clone(), objs[0].clone()], &GenerationCertificate::trivial(objs.clone())).unwrap();
        assert!(!r.holds());
    }

    #[test]
    fn missing_projective_is_not_covered() {
        let a = kronecker();
        let objs = vec![projective_stalk(&a, &a.basis_elem(1))];
        let r = verify_sod(&objs, &GenerationCertificate::trivial(objs.clone())).unwrap();
        assert_eq!(r.covered, vec![false, true]);
        assert!(!r.holds());
    }

    #[test]
    fn cone_and_summand_recover_projective() {
        // X = (P1 -a-> P0) and P1 generate: P0 is a retract of cone(X -> P1)
        let a = kronecker();
        let p0 = projective_stalk(&a, &a.basis_elem(0));
        let p1 = projective_stalk(&a, &a.basis_elem(1));
        let arrow = a.basis_elem(2);
        let f = AMatrix { rows: 1, cols: 1, entries: vec![vec![arrow.clone()]] };
        let x = PerfComplex::new(a.clone(), 0, vec![p1.term(0), p0.term(0)], vec![f]).unwrap();
        let h = ChainMap { degree: 0, comps: vec![AMatrix::identity(&a, &p1.term(0)), AMatrix::zero(&a, 0, 1)] };
        let c = PerfComplex::cone(&h, &x, &p1).unwrap();
        assert_eq!((c.lo(), c.hi(), c.term_len(0)), (-1, 0, 2));
        let inc = ChainMap { degree: 0, comps: vec![AMatrix { rows: 2, cols: 1, entries: vec![vec![a.basis_elem(0)], vec![a.zero()]] }] };
        let ret = ChainMap {
            degree: 0,
            comps: vec![AMatrix::zero(&a, 0, 1), AMatrix { rows: 1, cols: 2, entries: vec![vec![a.basis_elem(0), arrow]] }],
        };
        let cert = GenerationCertificate {
            generators: vec![p1.clone(), x.clone()],
            steps: vec![
                CertStep::Generator(0),
                CertStep::Generator(1),
                CertStep::Cone { source: 1, target: 0, map: h },
                CertStep::Summand { node: 2, object: p0.clone(), inclusion: inc, retraction: ret.clone() },
            ],
            targets: vec![0, 3],
        };
        let nodes = cert.replay().unwrap();
        assert_eq!(nodes[3], p0);
        let r = verify_sod(&[p1.clone(), x.clone()], &cert).unwrap();
        assert!(r.certificate.passed());
        assert_eq!(r.covered, vec![true, true]);
        // a retraction that is not closed is rejected
        let mut broken = cert.clone();
        let bad = ChainMap { degree: 0, comps: vec![AMatrix::zero(&a, 0, 1), AMatrix { rows: 1, cols: 2, entries: vec![vec![a.basis_elem(0), a.zero()]] }] };
        if let CertStep::Summand { retraction, .. } = &mut broken.steps[3] {
            *retraction = bad;
        }
        assert!(matches!(broken.replay(), Err(Error::InvalidCertificateStep { step: 3, .. })));
    }

    #[test]
    fn bad_step_is_reported() {
        let a = kronecker();
        let p0 = projective_stalk(&a, &a.basis_elem(0));
        let cert = GenerationCertificate { generators: vec![p0.clone()], steps: vec![CertStep::Shift { node: 3, by: 1 }], targets: vec![] };
        assert!(matches!(cert.replay(), Err(Error::InvalidCertificateStep { step: 0, .. })));
    }
}
