//! Diagnostics for Cauchy-built linear layers: build the matrix, detect
//! block-Hadamard structure, and measure the power-dependency degree that
//! controls invariant-subspace dimensions.
//!
//! The dependency degree of a t x t matrix over a field is the smallest
//! l with M^l in the span of I, M, ..., M^(l-1); it equals the degree of
//! the minimal polynomial, and t minus it lower-bounds the dimension of
//! the subspace invariant under every power of M. For block-Hadamard
//! layers the charpoly-square identity caps it at 2s, beating the older
//! (k+1)s guarantee. Non-field contexts are rejected rather than
//! approximated: over a general ring the annihilating ideal need not be
//! principal, so "the" minimal polynomial is not well defined.

use serde::{Deserialize, Serialize};

use crate::block::BlockMatrix;
use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::matrix::RingMatrix;
use crate::poly::RingPolynomial;
use crate::ring::{RingContext, RingElement};

/// Generators of a Cauchy matrix over a binary field: entry (i, j) is
/// the inverse of x_i + y_j.
#[derive(Clone, Debug)]
pub struct CauchySpec {
    field: RingContext,
    xs: Vec<RingElement>,
    ys: Vec<RingElement>,
}

impl CauchySpec {
    pub fn new(field: RingContext, xs: Vec<RingElement>, ys: Vec<RingElement>) -> Result<Self> {
        if !field.is_field() {
            return Err(Error::NotAField {
                spec: field.spec_string(),
            });
        }
        if xs.len() != ys.len() || xs.is_empty() {
            return Err(Error::Cauchy(format!(
                "need equally many nonempty x and y values, got {} and {}",
                xs.len(),
                ys.len()
            )));
        }
        for (v, name) in [(&xs, "x"), (&ys, "y")] {
            for e in v.iter() {
                if *e.context() != field {
                    return Err(Error::ContextMismatch {
                        left: field.spec_string(),
                        right: e.context().spec_string(),
                    });
                }
            }
            for i in 0..v.len() {
                for j in i + 1..v.len() {
                    if v[i] == v[j] {
                        return Err(Error::Cauchy(format!(
                            "{name}[{i}] and {name}[{j}] coincide"
                        )));
                    }
                }
            }
        }
        for (i, x) in xs.iter().enumerate() {
            for (j, y) in ys.iter().enumerate() {
                if x.add_unchecked(y).is_zero() {
                    return Err(Error::Cauchy(format!("x[{i}] + y[{j}] = 0")));
                }
            }
        }
        Ok(CauchySpec { field, xs, ys })
    }

    /// The default structured instance: x_i encodes i and y_j encodes
    /// t xor j, so x_i + y_j encodes i xor j xor t and every entry of the
    /// built matrix depends on i xor j only. Requires t a power of two
    /// and field order above 2t.
    pub fn starkad_like(field: &RingContext, t: usize) -> Result<Self> {
        if !field.is_field() {
            return Err(Error::NotAField {
                spec: field.spec_string(),
            });
        }
        if !t.is_power_of_two() {
            return Err(Error::Cauchy(format!("t = {t} is not a power of two")));
        }
        let n = field.bit_degree().expect("fields are bit-packed");
        if n >= 63 || (1u64 << n) <= 2 * t as u64 {
            return Err(Error::Cauchy(format!(
                "field of order 2^{n} is too small for t = {t}; need order above {}",
                2 * t
            )));
        }
        let xs = (0..t)
            .map(|i| field.element(i as u64))
            .collect::<Result<Vec<_>>>()?;
        let ys = (0..t)
            .map(|j| field.element((t ^ j) as u64))
            .collect::<Result<Vec<_>>>()?;
        Self::new(field.clone(), xs, ys)
    }

    pub fn field(&self) -> &RingContext {
        &self.field
    }

    pub fn t(&self) -> usize {
        self.xs.len()
    }

    /// The t x t Cauchy matrix with entries 1 / (x_i + y_j).
    pub fn build(&self) -> RingMatrix {
        let t = self.t();
        let entries = (0..t * t)
            .map(|idx| {
                self.xs[idx / t]
                    .add_unchecked(&self.ys[idx % t])
                    .inverse()
                    .expect("spec validation rules out zero sums")
            })
            .collect();
        RingMatrix::new(self.field.clone(), t, t, entries).expect("entries share the field")
    }
}

/// Partition a square matrix into 2^k-sided blocks and check each one for
/// the Hadamard property; errors name the first offending block and the
/// entry inside it.
pub fn block_hadamard_detect(m: &RingMatrix, k: u32) -> Result<BlockMatrix> {
    if !m.is_square() {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let side = 1usize << k;
    if !m.rows().is_multiple_of(side) {
        return Err(Error::SideNotDivisible {
            side: m.rows(),
            block: side,
        });
    }
    let s = m.rows() / side;
    let mut blocks = Vec::with_capacity(s);
    for bi in 0..s {
        let mut row = Vec::with_capacity(s);
        for bj in 0..s {
            let mut entries = Vec::with_capacity(side * side);
            for i in 0..side {
                for j in 0..side {
                    entries.push(m.get(bi * side + i, bj * side + j).clone());
                }
            }
            let sub = RingMatrix::new(m.context().clone(), side, side, entries)?;
            let block = HadamardMatrix::from_full(&sub).map_err(|e| match e {
                Error::NotHadamard { i, j } => Error::NotBlockHadamard {
                    block_row: bi,
                    block_col: bj,
                    i,
                    j,
                },
                other => other,
            })?;
            row.push(block);
        }
        blocks.push(row);
    }
    BlockMatrix::from_blocks(m.context(), k, blocks)
}

/// Krylov elimination over a field on vectorized powers of M, tracking
/// the combination that produced each reduced vector. Returns the first
/// power that is linearly dependent on the lower ones together with the
/// monic dependency coefficients c_0..c_l (c_l = 1).
fn krylov_dependency(m: &RingMatrix) -> Result<(usize, Vec<RingElement>)> {
    let ctx = m.context().clone();
    if !ctx.is_field() {
        return Err(Error::NotAField {
            spec: ctx.spec_string(),
        });
    }
    if !m.is_square() || m.rows() == 0 {
        return Err(Error::NotSquare {
            rows: m.rows(),
            cols: m.cols(),
        });
    }
    let t = m.rows();
    // rows of the echelon basis: (pivot, vector normalized to 1 at pivot,
    // combination over original powers)
    let mut basis: Vec<(usize, Vec<RingElement>, Vec<RingElement>)> = Vec::new();
    let mut power = RingMatrix::identity(ctx.clone(), t);
    for l in 0..=t {
        let mut vec: Vec<RingElement> = power.entries().to_vec();
        let mut combo = vec![ctx.zero(); l + 1];
        combo[l] = ctx.one();
        for (pivot, bv, bc) in &basis {
            let factor = vec[*pivot].clone();
            if factor.is_zero() {
                continue;
            }
            for (a, b) in vec.iter_mut().zip(bv) {
                *a = a.add_unchecked(&factor.mul_unchecked(b));
            }
            for (i, b) in bc.iter().enumerate() {
                combo[i] = combo[i].add_unchecked(&factor.mul_unchecked(b));
            }
        }
        match vec.iter().position(|e| !e.is_zero()) {
            None => return Ok((l, combo)),
            Some(pivot) => {
                let inv = vec[pivot].inverse().expect("nonzero field element");
                for a in vec.iter_mut() {
                    *a = a.mul_unchecked(&inv);
                }
                for c in combo.iter_mut() {
                    *c = c.mul_unchecked(&inv);
                }
                basis.push((pivot, vec, combo));
            }
        }
        power = power.mul(m)?;
    }
    unreachable!("a t x t matrix satisfies its degree-t characteristic polynomial");
}

/// Smallest l >= 1 with M^l a linear combination of lower powers; equals
/// the degree of the minimal polynomial.
pub fn power_dependency_degree(m: &RingMatrix) -> Result<usize> {
    let (l, _) = krylov_dependency(m)?;
    Ok(l)
}

/// The monic least-degree annihilating polynomial of a matrix over a
/// binary field, read off the first Krylov dependency.
pub fn minimal_poly_field(m: &RingMatrix) -> Result<RingPolynomial> {
    let (_, combo) = krylov_dependency(m)?;
    let p = RingPolynomial::new(m.context().clone(), combo)?;
    debug_assert!(p.eval_matrix(m)?.is_zero());
    Ok(p)
}

/// Invariant-subspace diagnostics for a block-Hadamard layer over a
/// binary field. `l` is the measured dependency degree; `bound_new` and
/// `bound_old` are the 2s and (k+1)s guarantees; `dim_lower_bound` is
/// t - l.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub t: usize,
    pub s: usize,
    pub k: u32,
    pub l: usize,
    pub bound_new: usize,
    pub bound_old: usize,
    pub dim_lower_bound: usize,
}

impl InvariantReport {
    pub fn within_new_bound(&self) -> bool {
        self.l <= self.bound_new
    }
}

/// Detect block structure at level k, measure the dependency degree, and
/// compare it against both bounds.
pub fn analyze(m: &RingMatrix, k: u32) -> Result<InvariantReport> {
    if !m.context().is_field() {
        return Err(Error::NotAField {
            spec: m.context().spec_string(),
        });
    }
    let block = block_hadamard_detect(m, k)?;
    let l = power_dependency_degree(m)?;
    let s = block.s();
    let t = m.rows();
    Ok(InvariantReport {
        t,
        s,
        k,
        l,
        bound_new: 2 * s,
        bound_old: (k as usize + 1) * s,
        dim_lower_bound: t - l,
    })
}
