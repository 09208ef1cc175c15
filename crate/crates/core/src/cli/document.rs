//! Input documents. Paths in quiver relations are read left to right in
//! traversal order; coefficients are strings (`"3"`, `"-1/2"`).

use std::sync::Arc;

use serde::Deserialize;

use crate::algebra::{Algebra, QuiverPresentation};
use crate::error::{Error, Result};
use crate::exactla::{Field, Matrix, Scalar};
use crate::gluing::Bimodule;

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "type", deny_unknown_fields)]
pub enum FieldDoc {
    Q,
    Fp { p: u64 },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrowDoc {
    pub name: String,
    pub from: String,
    pub to: String,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TermDoc {
    pub coeff: String,
    pub path: Vec<String>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum PresentationDoc {
    Quiver {
        vertices: Vec<String>,
        arrows: Vec<ArrowDoc>,
        #[serde(default)]
        relations: Vec<Vec<TermDoc>>,
    },
    StructureConstants {
        dim: usize,
        unit: Vec<String>,
        /// `table[i][j]` holds the coordinates of `b_i b_j`.
        table: Vec<Vec<Vec<String>>>,
    },
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AlgebraDocument {
    pub field: FieldDoc,
    pub presentation: PresentationDoc,
    #[serde(default)]
    pub name: Option<String>,
}

/// A `B`-`A`-bimodule over the algebras given alongside it. Matrices act on
/// row vectors: `b_i . v = v * left_action[i]`, `v . a_j = v * right_action[j]`.
#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BimoduleDocument {
    pub field: FieldDoc,
    pub kind: BimoduleKind,
    pub dim: usize,
    pub left_action: Vec<Vec<Vec<String>>>,
    pub right_action: Vec<Vec<Vec<String>>>,
    #[serde(default)]
    pub name: Option<String>,
}

#[derive(Clone, Copy, Debug, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BimoduleKind {
    Bimodule,
}

fn parse_error(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse { location: location.into(), message: message.into() }
}

fn from_json<'a, T: Deserialize<'a>>(text: &'a str) -> Result<T> {
    serde_json::from_str(text)
        .map_err(|e| parse_error(format!("line {} column {}", e.line(), e.column()), e.to_string()))
}

impl FieldDoc {
    pub fn field(&self) -> Result<Field> {
        match self {
            FieldDoc::Q => Ok(Field::Rationals),
            FieldDoc::Fp { p } => {
                let p = u32::try_from(*p).map_err(|_| parse_error("field.p", format!("{p} is too large")))?;
                Field::prime(p).map_err(|e| parse_error("field.p", e.to_string()))
            }
        }
    }
}

fn scalar(field: Field, text: &str, location: impl FnOnce() -> String) -> Result<Scalar> {
    field.parse(text).map_err(|e| parse_error(location(), e.to_string()))
}

fn matrix(field: Field, n: usize, rows: &[Vec<String>], at: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(parse_error(at, format!("expected a {n}x{n} matrix")));
    }
    let rows = rows
        .iter()
        .enumerate()
        .map(|(i, r)| {
            r.iter().enumerate().map(|(j, c)| scalar(field, c, || format!("{at}[{i}][{j}]"))).collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Matrix::from_rows(field, n, rows))
}

impl AlgebraDocument {
    pub fn to_algebra(&self) -> Result<Algebra> {
        let field = self.field.field()?;
        let invalid = |e: Error| Error::Validation(e.to_string());
        match &self.presentation {
            PresentationDoc::Quiver { vertices, arrows, relations } => {
                let vertex = |name: &str, at: String| {
                    vertices.iter().position(|v| v == name).ok_or_else(|| parse_error(at, format!("unknown vertex {name}")))
                };
                let mut q = QuiverPresentation::new(field, vertices.clone());
                for (i, a) in arrows.iter().enumerate() {
                    if arrows[..i].iter().any(|b| b.name == a.name) {
                        return Err(parse_error(format!("presentation.arrows[{i}]"), format!("duplicate arrow {}", a.name)));
                    }
                    let s = vertex(&a.from, format!("presentation.arrows[{i}].from"))?;
                    let t = vertex(&a.to, format!("presentation.arrows[{i}].to"))?;
                    q = q.arrow(&a.name, s, t);
                }
                for (r, rel) in relations.iter().enumerate() {
                    let mut terms = Vec::with_capacity(rel.len());
                    for (k, t) in rel.iter().enumerate() {
                        let at = format!("presentation.relations[{r}][{k}]");
                        if let Some(bad) = t.path.iter().find(|n| !arrows.iter().any(|a| &&a.name == n)) {
                            return Err(parse_error(at, format!("unknown arrow {bad}")));
                        }
                        let c = scalar(field, &t.coeff, || format!("{at}.coeff"))?;
                        terms.push((c, t.path.iter().map(String::as_str).collect()));
                    }
                    q = q.relation(terms);
                }
                Algebra::from_quiver(q).map_err(invalid)
            }
            PresentationDoc::StructureConstants { dim, unit, table } => {
                let n = *dim;
                let vector = |v: &[String], at: String| -> Result<Vec<Scalar>> {
                    if v.len() != n {
                        return Err(parse_error(at, format!("expected {n} coordinates")));
                    }
                    v.iter().enumerate().map(|(k, c)| scalar(field, c, || format!("{at}[{k}]"))).collect()
                };
                let unit = vector(unit, "presentation.unit".into())?;
                if table.len() != n || table.iter().any(|r| r.len() != n) {
                    return Err(parse_error("presentation.table", format!("expected {n}x{n} products")));
                }
                let table = table
                    .iter()
                    .enumerate()
                    .map(|(i, row)| {
                        row.iter().enumerate().map(|(j, v)| vector(v, format!("presentation.table[{i}][{j}]"))).collect()
                    })
                    .collect::<Result<Vec<Vec<_>>>>()?;
                Algebra::from_structure_constants(field, table, unit).map_err(invalid)
            }
        }
    }
}

/// Parses and validates an algebra document.
pub fn parse_algebra(text: &str) -> Result<Algebra> {
    from_json::<AlgebraDocument>(text)?.to_algebra()
}

/// Parses a bimodule over `b` (left) and `a` (right).
pub fn parse_bimodule(text: &str, b: Arc<Algebra>, a: Arc<Algebra>) -> Result<Bimodule> {
    let doc: BimoduleDocument = from_json(text)?;
    let field = doc.field.field()?;
    if field != a.field() || field != b.field() {
        return Err(Error::Validation(format!("bimodule is over {} but the algebras are over {}", field.name(), a.field().name())));
    }
    let side = |ms: &[Vec<Vec<String>>], want: usize, what: &str| -> Result<Vec<Matrix>> {
        if ms.len() != want {
            return Err(parse_error(what, format!("expected {want} matrices, one per basis element")));
        }
        ms.iter().enumerate().map(|(i, m)| matrix(field, doc.dim, m, &format!("{what}[{i}]"))).collect()
    };
    let left = side(&doc.left_action, b.dim(), "left_action")?;
    let right = side(&doc.right_action, a.dim(), "right_action")?;
    Bimodule::new(b, a, doc.dim, left, right).map_err(|e| Error::Validation(e.to_string()))
}
