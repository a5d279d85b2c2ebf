//! JSON wire formats. Elements are lowercase hex strings of their
//! bit-packed representative; Hadamard-ring elements nest as objects with
//! a level and a first-row array, recursively. Ring contexts travel as
//! spec strings.

use serde::{Deserialize, Serialize};

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::matrix::RingMatrix;
use crate::poly::RingPolynomial;
use crate::ring::{RingContext, RingElement};

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ElemJson {
    Hex(String),
    Had { k: u32, row: Vec<ElemJson> },
}

pub fn element_to_json(e: &RingElement) -> ElemJson {
    match e.as_hadamard() {
        None => ElemJson::Hex(e.to_hex().expect("bit-packed element")),
        Some(h) => ElemJson::Had {
            k: h.k(),
            row: h.row().iter().map(element_to_json).collect(),
        },
    }
}

pub fn element_from_json(ctx: &RingContext, json: &ElemJson) -> Result<RingElement> {
    match json {
        ElemJson::Hex(s) => ctx.element_from_hex(s),
        ElemJson::Had { k, row } => {
            let (base, ctx_k) = ctx.as_hadamard().ok_or_else(|| {
                Error::Json(format!(
                    "nested row element does not fit ring {}",
                    ctx.spec_string()
                ))
            })?;
            if *k != ctx_k {
                return Err(Error::Json(format!(
                    "element level {k} does not match ring level {ctx_k}"
                )));
            }
            let entries = row
                .iter()
                .map(|e| element_from_json(base, e))
                .collect::<Result<Vec<_>>>()?;
            ctx.wrap(HadamardMatrix::new(base.clone(), *k, entries)?)
        }
    }
}

/// `{"ring": <spec>, "rows": r, "cols": c, "entries": [...]}` row-major.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<ElemJson>,
}

impl MatrixJson {
    pub fn from_matrix(m: &RingMatrix) -> Self {
        MatrixJson {
            ring: m.context().spec_string(),
            rows: m.rows(),
            cols: m.cols(),
            entries: m.entries().iter().map(element_to_json).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<RingMatrix> {
        let ctx = RingContext::parse(&self.ring)?;
        let entries = self
            .entries
            .iter()
            .map(|e| element_from_json(&ctx, e))
            .collect::<Result<Vec<_>>>()?;
        RingMatrix::new(ctx, self.rows, self.cols, entries)
    }
}

/// `{"ring": <spec>, "coeffs": [...]}` ascending degree.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolyJson {
    pub ring: String,
    pub coeffs: Vec<ElemJson>,
}

impl PolyJson {
    pub fn from_poly(p: &RingPolynomial) -> Self {
        PolyJson {
            ring: p.context().spec_string(),
            coeffs: p.coeffs().iter().map(element_to_json).collect(),
        }
    }

    pub fn to_poly(&self) -> Result<RingPolynomial> {
        let ctx = RingContext::parse(&self.ring)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|e| element_from_json(&ctx, e))
            .collect::<Result<Vec<_>>>()?;
        RingPolynomial::new(ctx, coeffs)
    }
}

/// `{"ring": <base-spec>, "k": k, "row": [...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct HadamardJson {
    pub ring: String,
    pub k: u32,
    pub row: Vec<ElemJson>,
}

impl HadamardJson {
    pub fn from_hadamard(h: &HadamardMatrix) -> Self {
        HadamardJson {
            ring: h.base().spec_string(),
            k: h.k(),
            row: h.row().iter().map(element_to_json).collect(),
        }
    }

    pub fn to_hadamard(&self) -> Result<HadamardMatrix> {
        let base = RingContext::parse(&self.ring)?;
        let row = self
            .row
            .iter()
            .map(|e| element_from_json(&base, e))
            .collect::<Result<Vec<_>>>()?;
        HadamardMatrix::new(base, self.k, row)
    }
}

/// `{"ring": <base-spec>, "k": k, "coeffs": [...]}` in the frozen group
/// ordering.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GroupAlgebraJson {
    pub ring: String,
    pub k: u32,
    pub coeffs: Vec<ElemJson>,
}

impl GroupAlgebraJson {
    pub fn from_element(a: &crate::group_algebra::GroupAlgebraElement) -> Self {
        GroupAlgebraJson {
            ring: a.base().spec_string(),
            k: a.k(),
            coeffs: a.coeffs().iter().map(element_to_json).collect(),
        }
    }

    pub fn to_element(&self) -> Result<crate::group_algebra::GroupAlgebraElement> {
        let base = RingContext::parse(&self.ring)?;
        let coeffs = self
            .coeffs
            .iter()
            .map(|e| element_from_json(&base, e))
            .collect::<Result<Vec<_>>>()?;
        crate::group_algebra::GroupAlgebraElement::new(base, self.k, coeffs)
    }
}

/// `{"ring": <base-spec>, "k": k, "s": s, "blocks": [[<first-row>...]]}`
/// with blocks in row-major block order, each as its first row.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct BlockMatrixJson {
    pub ring: String,
    pub k: u32,
    pub s: usize,
    pub blocks: Vec<Vec<Vec<ElemJson>>>,
}

impl BlockMatrixJson {
    pub fn from_block_matrix(m: &BlockMatrix) -> Self {
        let s = m.s();
        let blocks = (0..s)
            .map(|i| {
                (0..s)
                    .map(|j| m.block(i, j).row().iter().map(element_to_json).collect())
                    .collect()
            })
            .collect();
        BlockMatrixJson {
            ring: m.base().spec_string(),
            k: m.k(),
            s,
            blocks,
        }
    }

    pub fn to_block_matrix(&self) -> Result<BlockMatrix> {
        let base = RingContext::parse(&self.ring)?;
        if self.blocks.len() != self.s {
            return Err(Error::Json(format!(
                "expected {} block rows, found {}",
                self.s,
                self.blocks.len()
            )));
        }
        let mut rows = Vec::with_capacity(self.s);
        for row in &self.blocks {
            let blocks = row
                .iter()
                .map(|r| {
                    let entries = r
                        .iter()
                        .map(|e| element_from_json(&base, e))
                        .collect::<Result<Vec<_>>>()?;
                    HadamardMatrix::new(base.clone(), self.k, entries)
                })
                .collect::<Result<Vec<_>>>()?;
            rows.push(blocks);
        }
        BlockMatrix::from_blocks(&base, self.k, rows)
    }
}
