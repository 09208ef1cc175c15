use std::sync::Arc;

use rand::Rng;

use crate::algebra::{same_algebra, Algebra, Elem};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::homalg::{random_module, RightModule};

/// A `B`-`A`-bimodule in degree 0. Both actions are stored as row-vector
/// matrices: `b_i . v = v * left_action[i]` and `v . a_j = v * right_action[j]`.
#[derive(Clone, Debug)]
pub struct Bimodule {
    pub left_algebra: Arc<Algebra>,
    pub right_algebra: Arc<Algebra>,
    pub dim: usize,
    pub left_action: Vec<Matrix>,
    pub right_action: Vec<Matrix>,
}

impl Bimodule {
    pub fn new(
        left_algebra: Arc<Algebra>,
        right_algebra: Arc<Algebra>,
        dim: usize,
        left_action: Vec<Matrix>,
        right_action: Vec<Matrix>,
    ) -> Result<Bimodule> {
        let s = Bimodule { left_algebra, right_algebra, dim, left_action, right_action };
        s.verify()?;
        Ok(s)
    }

    pub fn verify(&self) -> Result<()> {
        let (b, a) = (&self.left_algebra, &self.right_algebra);
        if b.field() != a.field() {
            return Err(Error::FieldMismatch(b.field().name(), a.field().name()));
        }
        let bad = |m: String| Err(Error::BimoduleMismatch(m));
        if self.left_action.len() != b.dim() || self.right_action.len() != a.dim() {
            return bad("one matrix per basis element is required".into());
        }
        let n = self.dim;
        if self.left_action.iter().chain(&self.right_action).any(|m| m.rows() != n || m.cols() != n) {
            return bad(format!("action matrices must be {n}x{n}"));
        }
        let id = Matrix::identity(a.field(), n);
        if self.left_of(b.unit()) != id {
            return bad("the unit of the left algebra does not act as the identity".into());
        }
        if self.right_of(a.unit()) != id {
            return bad("the unit of the right algebra does not act as the identity".into());
        }
        for i in 0..b.dim() {
            for j in 0..b.dim() {
                let lhs = self.left_of(&b.basis_product(i, j));
                if lhs != self.left_action[j].mul(&self.left_action[i]) {
                    return bad(format!("left action is not associative at ({i}, {j})"));
                }
            }
        }
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                let lhs = self.right_of(&a.basis_product(i, j));
                if lhs != self.right_action[i].mul(&self.right_action[j]) {
                    return bad(format!("right action is not associative at ({i}, {j})"));
                }
            }
        }
        for (i, l) in self.left_action.iter().enumerate() {
            for (j, r) in self.right_action.iter().enumerate() {
                if l.mul(r) != r.mul(l) {
                    return bad(format!("actions of b_{i} and a_{j} do not commute"));
                }
            }
        }
        Ok(())
    }

    pub fn field(&self) -> Field {
        self.right_algebra.field()
    }

    fn combine(field: Field, n: usize, mats: &[Matrix], x: &[Scalar]) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        for (c, t) in x.iter().zip(mats) {
            if !c.is_zero() {
                m.add_scaled(c, t);
            }
        }
        m
    }

    pub fn left_of(&self, b: &[Scalar]) -> Matrix {
        Self::combine(self.field(), self.dim, &self.left_action, b)
    }

    pub fn right_of(&self, a: &[Scalar]) -> Matrix {
        Self::combine(self.field(), self.dim, &self.right_action, a)
    }

    /// `b . v . a`.
    pub fn act(&self, b: &[Scalar], v: &[Scalar], a: &[Scalar]) -> Vec<Scalar> {
        self.right_of(a).vec_mul(&self.left_of(b).vec_mul(v))
    }

    pub fn zero(left: Arc<Algebra>, right: Arc<Algebra>) -> Bimodule {
        let f = right.field();
        Bimodule {
            left_action: vec![Matrix::zeros(f, 0, 0); left.dim()],
            right_action: vec![Matrix::zeros(f, 0, 0); right.dim()],
            left_algebra: left,
            right_algebra: right,
            dim: 0,
        }
    }

    /// `k^n` over two copies of the ground field.
    pub fn scalar(field: Field, n: usize) -> Bimodule {
        let k = Arc::new(Algebra::ground(field));
        let id = Matrix::identity(field, n);
        Bimodule { left_algebra: k.clone(), right_algebra: k, dim: n, left_action: vec![id.clone()], right_action: vec![id] }
    }

    /// `A` over itself on both sides.
    pub fn regular(a: Arc<Algebra>) -> Bimodule {
        let left_action = (0..a.dim()).map(|i| a.left_mult_matrix(&a.basis_elem(i))).collect();
        let right_action = (0..a.dim()).map(|i| a.right_mult_matrix(&a.basis_elem(i))).collect();
        Bimodule { left_algebra: a.clone(), right_algebra: a.clone(), dim: a.dim(), left_action, right_action }
    }

    /// A right `A`-module with the ground field acting on the left.
    pub fn from_right_module(m: &RightModule) -> Bimodule {
        let a = m.algebra().clone();
        let k = Arc::new(Algebra::ground(a.field()));
        Bimodule {
            left_algebra: k,
            right_algebra: a,
            dim: m.dim(),
            left_action: vec![Matrix::identity(m.field(), m.dim())],
            right_action: m.action().to_vec(),
        }
    }

    /// `B` as a left module over itself, with the ground field on the right.
    pub fn left_regular(b: Arc<Algebra>) -> Bimodule {
        let k = Arc::new(Algebra::ground(b.field()));
        let left_action = (0..b.dim()).map(|i| b.left_mult_matrix(&b.basis_elem(i))).collect();
        Bimodule {
            left_algebra: b.clone(),
            right_algebra: k,
            dim: b.dim(),
            left_action,
            right_action: vec![Matrix::identity(b.field(), b.dim())],
        }
    }

    /// `B^op (x) A`, whose right modules are exactly `B`-`A`-bimodules.
    pub fn envelope(b: &Algebra, a: &Algebra) -> Result<Algebra> {
        b.opposite().tensor_product(a)
    }

    /// The right `B^op (x) A`-module with `v . (b (x) a) = b v a`.
    pub fn as_module(&self, envelope: Arc<Algebra>) -> Result<RightModule> {
        let (b, a) = (&self.left_algebra, &self.right_algebra);
        if envelope.dim() != a.dim() * b.dim() {
            return Err(Error::BimoduleMismatch("envelope has the wrong dimension".into()));
        }
        let action = (0..b.dim() * a.dim())
            .map(|idx| self.left_action[idx / a.dim()].mul(&self.right_action[idx % a.dim()]))
            .collect();
        RightModule::new(envelope, self.dim, action)
    }

    pub fn to_module(&self) -> Result<RightModule> {
        self.as_module(Arc::new(Self::envelope(&self.left_algebra, &self.right_algebra)?))
    }

    /// Reads a right `B^op (x) A`-module back as a bimodule.
    pub fn from_module(b: Arc<Algebra>, a: Arc<Algebra>, m: &RightModule) -> Result<Bimodule> {
        let env = m.algebra();
        if env.dim() != a.dim() * b.dim() {
            return Err(Error::BimoduleMismatch("module is not over B^op (x) A".into()));
        }
        let left_action = (0..b.dim()).map(|i| m.action_of(&env_elem(&b, &a, &b.basis_elem(i), a.unit()))).collect();
        let right_action = (0..a.dim()).map(|j| m.action_of(&env_elem(&b, &a, b.unit(), &a.basis_elem(j)))).collect();
        Bimodule::new(b, a, m.dim(), left_action, right_action)
    }

    /// Same bimodule after the change of basis `v -> v * p`.
    pub fn conjugate(&self, p: &Matrix) -> Result<Bimodule> {
        let q = p.inverse().ok_or_else(|| Error::DimensionMismatch("change of basis is singular".into()))?;
        let conj = |m: &Matrix| q.mul(m).mul(p);
        Ok(Bimodule {
            left_algebra: self.left_algebra.clone(),
            right_algebra: self.right_algebra.clone(),
            dim: self.dim,
            left_action: self.left_action.iter().map(conj).collect(),
            right_action: self.right_action.iter().map(conj).collect(),
        })
    }

    /// Whether `phi` (a `dim x dim` matrix) intertwines `self` with `other`
    /// after identifying the algebras through `psi_b` and `psi_a`.
    pub fn is_isomorphism(&self, other: &Bimodule, phi: &Matrix, psi_b: &Matrix, psi_a: &Matrix) -> bool {
        if self.dim != other.dim || phi.rank() != self.dim {
            return false;
        }
        let left_ok = (0..self.left_algebra.dim()).all(|i| {
            let image = psi_b.row(i);
            self.left_action[i].mul(phi) == phi.mul(&other.left_of(image))
        });
        let right_ok = (0..self.right_algebra.dim()).all(|j| {
            let image = psi_a.row(j);
            self.right_action[j].mul(phi) == phi.mul(&other.right_of(image))
        });
        left_ok && right_ok
    }

    /// A random bimodule of dimension `1..=max_dim` (see [`random_module`]) in a random basis.
    pub fn random<R: Rng>(b: Arc<Algebra>, a: Arc<Algebra>, max_dim: usize, rng: &mut R) -> Result<Bimodule> {
        let field = a.field();
        let env = Arc::new(Self::envelope(&b, &a)?);
        let m = random_module(&env, max_dim, rng)?;
        let s = Bimodule::from_module(b, a, &m)?;
        let p = loop {
            let p = Matrix::from_rows(field, s.dim, (0..s.dim).map(|_| random_vec(field, s.dim, rng)).collect());
            if p.rank() == s.dim {
                break p;
            }
        };
        s.conjugate(&p)
    }
}

fn random_vec<R: Rng>(field: Field, n: usize, rng: &mut R) -> Vec<Scalar> {
    (0..n).map(|_| field.from_i64(rng.gen_range(-2..=2))).collect()
}

/// `b (x) a` inside `B^op (x) A`.
pub(crate) fn env_elem(b: &Algebra, a: &Algebra, x: &[Scalar], y: &[Scalar]) -> Elem {
    b.tensor_elem(a, x, y)
}

pub(crate) fn check_sides(s: &Bimodule, a: &Algebra, b: &Algebra) -> Result<()> {
    if !same_algebra(&s.right_algebra, a) {
        return Err(Error::BimoduleMismatch("right algebra of S must be A".into()));
    }
    if !same_algebra(&s.left_algebra, b) {
        return Err(Error::BimoduleMismatch("left algebra of S must be B".into()));
    }
    Ok(())
}
