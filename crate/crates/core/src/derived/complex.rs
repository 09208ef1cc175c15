use std::sync::Arc;

use crate::algebra::{same_algebra, Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactla::{is_zero_vec, Field, Scalar};
use crate::homalg::{AMatrix, ProjectiveModule, Resolution};

/// Bounded complex of finitely generated projectives, cohomologically graded:
/// `terms[k]` sits in degree `lo + k` and `diffs[k]: terms[k] -> terms[k + 1]`.
#[derive(Clone, Debug)]
pub struct PerfComplex {
    algebra: Arc<Algebra>,
    lo: i64,
    terms: Vec<ProjectiveModule>,
    diffs: Vec<AMatrix>,
}

impl PartialEq for PerfComplex {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra)
            && self.lo == other.lo
            && self.terms == other.terms
            && self.diffs == other.diffs
    }
}

/// Homogeneous map of degree `degree`: `comps[k]` sends source degree
/// `source.lo() + k` to target degree `source.lo() + k + degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct ChainMap {
    pub degree: i64,
    pub comps: Vec<AMatrix>,
}

impl PerfComplex {
    /// Checked constructor: entries lie in the right Peirce spaces and `d d = 0`.
    pub fn new(algebra: Arc<Algebra>, lo: i64, terms: Vec<ProjectiveModule>, diffs: Vec<AMatrix>) -> Result<PerfComplex> {
        if diffs.len() + 1 != terms.len().max(1) {
            return Err(Error::InvalidComplex(format!("{} terms need {} differentials", terms.len(), terms.len().saturating_sub(1))));
        }
        for p in &terms {
            for e in &p.summands {
                if !algebra.is_idempotent(e) || is_zero_vec(e) {
                    return Err(Error::InvalidComplex("summands must be nonzero idempotents".into()));
                }
            }
        }
        for (k, d) in diffs.iter().enumerate() {
            if !d.is_compatible(&algebra, &terms[k], &terms[k + 1]) {
                return Err(Error::InvalidComplex(format!("differential in degree {} has misplaced entries", lo + k as i64)));
            }
        }
        for k in 1..diffs.len() {
            if !diffs[k].compose(&algebra, &diffs[k - 1]).is_zero() {
                return Err(Error::InvalidComplex(format!("d d != 0 at degree {}", lo + k as i64 - 1)));
            }
        }
        Ok(PerfComplex { algebra, lo, terms, diffs }.normalized())
    }

    /// A single projective placed in `degree`.
    pub fn stalk(algebra: Arc<Algebra>, p: ProjectiveModule, degree: i64) -> PerfComplex {
        PerfComplex { algebra, lo: degree, terms: vec![p], diffs: Vec::new() }.normalized()
    }

    pub fn zero(algebra: Arc<Algebra>) -> PerfComplex {
        PerfComplex { algebra, lo: 0, terms: Vec::new(), diffs: Vec::new() }
    }

    /// The projective resolution of a module, with `P_l` in degree `-l`.
    pub fn from_resolution(res: &Resolution) -> PerfComplex {
        let a = res.module.algebra().clone();
        let n = res.terms.len();
        let terms: Vec<ProjectiveModule> = res.terms.iter().rev().cloned().collect();
        let diffs: Vec<AMatrix> = res.differentials.iter().rev().cloned().collect();
        PerfComplex { algebra: a, lo: -(n as i64) + 1, terms, diffs }.normalized()
    }

    /// Drops zero terms at both ends.
    fn normalized(mut self) -> PerfComplex {
        while self.terms.last().is_some_and(ProjectiveModule::is_empty) {
            self.terms.pop();
            self.diffs.pop();
        }
        while self.terms.first().is_some_and(ProjectiveModule::is_empty) {
            self.terms.remove(0);
            if !self.diffs.is_empty() {
                self.diffs.remove(0);
            }
            self.lo += 1;
        }
        if self.terms.is_empty() {
            self.lo = 0;
            self.diffs.clear();
        }
        self
    }

    pub fn algebra(&self) -> &Arc<Algebra> {
        &self.algebra
    }

    pub fn field(&self) -> Field {
        self.algebra.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lo(&self) -> i64 {
        self.lo
    }

    /// Top degree; below `lo` for the zero complex.
    pub fn hi(&self) -> i64 {
        self.lo + self.terms.len() as i64 - 1
    }

    pub fn terms(&self) -> &[ProjectiveModule] {
        &self.terms
    }

    pub fn diffs(&self) -> &[AMatrix] {
        &self.diffs
    }

    pub fn term(&self, d: i64) -> ProjectiveModule {
        if d < self.lo || d > self.hi() {
            return ProjectiveModule::zero();
        }
        self.terms[(d - self.lo) as usize].clone()
    }

    pub fn term_len(&self, d: i64) -> usize {
        if d < self.lo || d > self.hi() {
            return 0;
        }
        self.terms[(d - self.lo) as usize].len()
    }

    /// `d^d: X^d -> X^(d+1)`, zero-sized outside the support.
    pub fn diff(&self, d: i64) -> AMatrix {
        if d >= self.lo && d < self.hi() {
            return self.diffs[(d - self.lo) as usize].clone();
        }
        AMatrix::zero(&self.algebra, self.term_len(d + 1), self.term_len(d))
    }

    /// `X[n]^d = X^(d+n)` with differentials multiplied by `(-1)^n`.
    pub fn shift(&self, n: i64) -> PerfComplex {
        let diffs = if n.rem_euclid(2) == 0 {
            self.diffs.clone()
        } else {
            self.diffs.iter().map(AMatrix::neg).collect()
        };
        let lo = if self.is_zero() { 0 } else { self.lo - n };
        PerfComplex { algebra: self.algebra.clone(), lo, terms: self.terms.clone(), diffs }
    }

    pub fn direct_sum(&self, other: &PerfComplex) -> Result<PerfComplex> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if self.is_zero() {
            return Ok(other.clone());
        }
        if other.is_zero() {
            return Ok(self.clone());
        }
        let a = &self.algebra;
        let lo = self.lo.min(other.lo);
        let hi = self.hi().max(other.hi());
        let terms = (lo..=hi).map(|d| self.term(d).direct_sum(&other.term(d))).collect();
        let diffs = (lo..hi)
            .map(|d| {
                let (x, y) = (self.diff(d), other.diff(d));
                let b = AMatrix::zero(a, x.rows, y.cols);
                let c = AMatrix::zero(a, y.rows, x.cols);
                AMatrix::block(&x, &b, &c, &y)
            })
            .collect();
        Ok(PerfComplex { algebra: a.clone(), lo, terms, diffs }.normalized())
    }

    /// Mapping cone of a closed degree-0 map: `cone^n = X^(n+1) + Y^n`,
    /// `d = [[-d_X, 0], [f, d_Y]]`.
    pub fn cone(f: &ChainMap, x: &PerfComplex, y: &PerfComplex) -> Result<PerfComplex> {
        if !same_algebra(&x.algebra, &y.algebra) {
            return Err(Error::AlgebraMismatch);
        }
        if f.degree != 0 || !f.fits(x, y) || !f.is_closed(x, y) {
            return Err(Error::NotChainMap("cone needs a closed degree-0 map".into()));
        }
        let a = &x.algebra;
        if x.is_zero() && y.is_zero() {
            return Ok(PerfComplex::zero(a.clone()));
        }
        let (lo, hi) = cone_range(x, y);
        let terms = (lo..=hi).map(|n| x.term(n + 1).direct_sum(&y.term(n))).collect();
        let diffs = (lo..hi)
            .map(|n| {
                let dx = x.diff(n + 1).neg();
                let fx = f.component(a, x, y, n + 1);
                let dy = y.diff(n);
                let zero = AMatrix::zero(a, dx.rows, dy.cols);
                AMatrix::block(&dx, &zero, &fx, &dy)
            })
            .collect();
        Ok(PerfComplex { algebra: a.clone(), lo, terms, diffs }.normalized())
    }

    /// Alternating sum of multiplicity vectors of the terms.
    pub fn k0_class(&self) -> Result<Vec<i64>> {
        let n = self.algebra.projective_data()?.class_count();
        let mut v = vec![0i64; n];
        for (k, p) in self.terms.iter().enumerate() {
            let sign = if (self.lo + k as i64).rem_euclid(2) == 0 { 1 } else { -1 };
            for (c, m) in p.k0_class(&self.algebra)?.into_iter().enumerate() {
                v[c] += sign * m;
            }
        }
        Ok(v)
    }

    /// Image under a (possibly non-unital) algebra homomorphism into `target`
    /// that sends idempotents to idempotents.
    pub fn transport(&self, target: Arc<Algebra>, f: impl Fn(&Elem) -> Elem) -> PerfComplex {
        let terms = self.terms.iter().map(|p| ProjectiveModule::new(p.summands.iter().map(&f).collect())).collect();
        let diffs = self.diffs.iter().map(|d| d.map_entries(&f)).collect();
        PerfComplex { algebra: target, lo: self.lo, terms, diffs }.normalized()
    }

    pub fn identity(&self) -> ChainMap {
        ChainMap { degree: 0, comps: self.terms.iter().map(|p| AMatrix::identity(&self.algebra, p)).collect() }
    }
}

fn cone_range(x: &PerfComplex, y: &PerfComplex) -> (i64, i64) {
    match (x.is_zero(), y.is_zero()) {
        (true, _) => (y.lo, y.hi()),
        (_, true) => (x.lo - 1, x.hi() - 1),
        _ => ((x.lo - 1).min(y.lo), (x.hi() - 1).max(y.hi())),
    }
}

impl ChainMap {
    pub fn zero(a: &Algebra, source: &PerfComplex, target: &PerfComplex, degree: i64) -> ChainMap {
        let comps = (0..source.terms.len())
            .map(|k| {
                let d = source.lo + k as i64;
                AMatrix::zero(a, target.term_len(d + degree), source.terms[k].len())
            })
            .collect();
        ChainMap { degree, comps }
    }

    /// Component `X^d -> Y^(d + degree)`.
    pub fn component(&self, a: &Algebra, source: &PerfComplex, target: &PerfComplex, d: i64) -> AMatrix {
        if d >= source.lo && d <= source.hi() {
            return self.comps[(d - source.lo) as usize].clone();
        }
        AMatrix::zero(a, target.term_len(d + self.degree), source.term_len(d))
    }

    /// Shapes and Peirce placement of every component.
    pub fn fits(&self, source: &PerfComplex, target: &PerfComplex) -> bool {
        let a = &source.algebra;
        self.comps.len() == source.terms.len()
            && self.comps.iter().enumerate().all(|(k, m)| {
                let d = source.lo + k as i64;
                m.is_compatible(a, &source.terms[k], &target.term(d + self.degree))
            })
    }

    /// `d_Y f - (-1)^l f d_X`.
    pub fn differential(&self, source: &PerfComplex, target: &PerfComplex) -> ChainMap {
        let a = &source.algebra;
        let l = self.degree;
        let sign = if l.rem_euclid(2) == 0 { a.field().one() } else { -a.field().one() };
        let lo = source.lo - 1;
        let hi = source.hi();
        let mut comps = Vec::new();
        for d in lo..=hi {
            let left = target.diff(d + l).compose(a, &self.component(a, source, target, d));
            let right = self.component(a, source, target, d + 1).compose(a, &source.diff(d));
            comps.push((d, left.add(&right.scale(&-&sign))));
        }
        // re-index on the source support
        let comps = comps.into_iter().filter(|(d, _)| *d >= source.lo && *d <= source.hi()).map(|(_, m)| m).collect();
        ChainMap { degree: l + 1, comps }
    }

    pub fn is_closed(&self, source: &PerfComplex, target: &PerfComplex) -> bool {
        // the degree lo-1 slot cannot carry anything since X^(lo-1) = 0
        self.differential(source, target).comps.iter().all(AMatrix::is_zero)
    }

    /// `self` after `first`.
    pub fn compose(&self, a: &Algebra, first: &ChainMap, source: &PerfComplex, middle: &PerfComplex, target: &PerfComplex) -> ChainMap {
        let comps = (0..source.terms.len())
            .map(|k| {
                let d = source.lo + k as i64;
                self.component(a, middle, target, d + first.degree).compose(a, &first.comps[k])
            })
            .collect();
        ChainMap { degree: self.degree + first.degree, comps }
    }

    pub fn add(&self, other: &ChainMap) -> ChainMap {
        ChainMap { degree: self.degree, comps: self.comps.iter().zip(&other.comps).map(|(x, y)| x.add(y)).collect() }
    }

    pub fn scale(&self, s: &Scalar) -> ChainMap {
        ChainMap { degree: self.degree, comps: self.comps.iter().map(|x| x.scale(s)).collect() }
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(AMatrix::is_zero)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::QuiverPresentation;

    const Q: Field = Field::Rationals;

    fn kronecker() -> Arc<Algebra> {
        Arc::new(
            Algebra::from_quiver(QuiverPresentation::new(Q, vec!["0".into(), "1".into()]).arrow("a", 0, 1).arrow("b", 0, 1))
                .unwrap(),
        )
    }

    fn p(a: &Algebra, v: usize) -> ProjectiveModule {
        ProjectiveModule::new(vec![a.basis_elem(v)])
    }

    #[test]
    fn shift_round_trip() {
        let a = kronecker();
        let f = AMatrix { rows: 1, cols: 1, entries: vec![vec![a.basis_elem(2)]] };
        let x = PerfComplex::new(a.clone(), 0, vec![p(&a, 1), p(&a, 0)], vec![f]).unwrap();
        assert_eq!(x.shift(0), x);
        assert_eq!(x.shift(1).shift(-1), x);
        assert_eq!(x.shift(1).lo(), -1);
        assert_eq!(x.shift(1).diffs()[0], x.diffs()[0].neg());
    }

    #[test]
    fn rejects_bad_differential() {
        let a = kronecker();
        // e_0 is not in e_0 A e_1
        let f = AMatrix { rows: 1, cols: 1, entries: vec![vec![a.basis_elem(0)]] };
        assert!(PerfComplex::new(a.clone(), 0, vec![p(&a, 1), p(&a, 0)], vec![f]).is_err());
    }

    #[test]
    fn cone_of_zero_map_is_sum() {
        let a = kronecker();
        let x = PerfComplex::stalk(a.clone(), p(&a, 0), 0);
        let y = PerfComplex::stalk(a.clone(), p(&a, 1), 0);
        let zero = ChainMap::zero(&a, &x, &y, 0);
        let c = PerfComplex::cone(&zero, &x, &y).unwrap();
        assert_eq!(c, y.direct_sum(&x.shift(1)).unwrap());
        assert_eq!(c.k0_class().unwrap(), vec![-1, 1]);
    }

    #[test]
    fn cone_rejects_open_map() {
        let a = kronecker();
        let f = AMatrix { rows: 1, cols: 1, entries: vec![vec![a.basis_elem(2)]] };
        let x = PerfComplex::new(a.clone(), 0, vec![p(&a, 1), p(&a, 0)], vec![f]).unwrap();
        let y = PerfComplex::stalk(a.clone(), p(&a, 1), 0);
        // identity of P1 into degree 0 of X is not closed because d_X is nonzero on P1
        let g = ChainMap { degree: 0, comps: vec![AMatrix::identity(&a, &p(&a, 1))] };
        assert!(g.fits(&y, &x));
        assert!(!g.is_closed(&y, &x));
        assert!(matches!(PerfComplex::cone(&g, &y, &x), Err(Error::NotChainMap(_))));
        // the projection X -> P1 is closed
        let h = ChainMap { degree: 0, comps: vec![AMatrix::identity(&a, &p(&a, 1)), AMatrix::zero(&a, 0, 1)] };
        assert!(h.is_closed(&x, &y));
    }
}
