//! Dense matrices over any ring context, with a division-free
//! characteristic polynomial.
//!
//! Gaussian elimination and Faddeev-LeVerrier are both unusable here:
//! general contexts have no division, and characteristic 2 rules out
//! dividing by the integers 2..s. The Berkowitz vector recurrence works
//! over every commutative ring, and a principal-minors expansion serves
//! as an independent cross-check oracle at small sizes.

use crate::error::{Error, Result};
use crate::poly::RingPolynomial;
use crate::ring::{RingContext, RingElement};
use crate::sample::SeedStream;

/// Size cap for the principal-minors oracle; Leibniz expansion is s! * s
/// work per minor.
pub const MINORS_ORACLE_LIMIT: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingMatrix {
    ctx: RingContext,
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl RingMatrix {
    pub fn new(
        ctx: RingContext,
        rows: usize,
        cols: usize,
        entries: Vec<RingElement>,
    ) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape {
                expected: format!("{rows}x{cols} with {} entries", rows * cols),
                found: format!("{} entries", entries.len()),
            });
        }
        for e in &entries {
            if *e.context() != ctx {
                return Err(Error::ContextMismatch {
                    left: ctx.spec_string(),
                    right: e.context().spec_string(),
                });
            }
        }
        Ok(RingMatrix {
            ctx,
            rows,
            cols,
            entries,
        })
    }

    pub fn zero(ctx: RingContext, rows: usize, cols: usize) -> Self {
        let entries = vec![ctx.zero(); rows * cols];
        RingMatrix {
            ctx,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ctx: RingContext, n: usize) -> Self {
        let mut m = Self::zero(ctx.clone(), n, n);
        for i in 0..n {
            m.entries[i * n + i] = ctx.one();
        }
        m
    }

    /// The scalar matrix c * I.
    pub fn scalar(ctx: RingContext, n: usize, c: &RingElement) -> Self {
        let mut m = Self::zero(ctx, n, n);
        for i in 0..n {
            m.entries[i * n + i] = c.clone();
        }
        m
    }

    pub fn random(ctx: &RingContext, rows: usize, cols: usize, rng: &mut SeedStream) -> Self {
        let entries = (0..rows * cols).map(|_| ctx.sample(rng)).collect();
        RingMatrix {
            ctx: ctx.clone(),
            rows,
            cols,
            entries,
        }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &RingElement {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) -> Result<()> {
        if *v.context() != self.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.spec_string(),
                right: v.context().spec_string(),
            });
        }
        self.entries[i * self.cols + j] = v;
        Ok(())
    }

    pub fn entries(&self) -> &[RingElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(RingElement::is_zero)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn ensure_same_ctx(&self, rhs: &Self) -> Result<()> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.spec_string(),
                right: rhs.ctx.spec_string(),
            })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same_ctx(rhs)?;
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return Err(Error::Shape {
                expected: format!("{}x{}", self.rows, self.cols),
                found: format!("{}x{}", rhs.rows, rhs.cols),
            });
        }
        let entries = self
            .entries
            .iter()
            .zip(&rhs.entries)
            .map(|(a, b)| a.add_unchecked(b))
            .collect();
        Ok(RingMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same_ctx(rhs)?;
        if self.cols != rhs.rows {
            return Err(Error::Shape {
                expected: format!("{} rows on the right", self.cols),
                found: format!("{} rows", rhs.rows),
            });
        }
        let mut entries = Vec::with_capacity(self.rows * rhs.cols);
        for i in 0..self.rows {
            for j in 0..rhs.cols {
                let mut acc = self.ctx.zero();
                for t in 0..self.cols {
                    acc = acc.add_unchecked(&self.get(i, t).mul_unchecked(rhs.get(t, j)));
                }
                entries.push(acc);
            }
        }
        Ok(RingMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: rhs.cols,
            entries,
        })
    }

    pub fn scalar_mul(&self, c: &RingElement) -> Result<Self> {
        if *c.context() != self.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.spec_string(),
                right: c.context().spec_string(),
            });
        }
        let entries = self.entries.iter().map(|a| a.mul_unchecked(c)).collect();
        Ok(RingMatrix {
            ctx: self.ctx.clone(),
            rows: self.rows,
            cols: self.cols,
            entries,
        })
    }

    pub fn pow(&self, mut exp: u64) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let mut acc = Self::identity(self.ctx.clone(), self.rows);
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            exp >>= 1;
            if exp > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    pub fn transpose(&self) -> Self {
        let mut entries = Vec::with_capacity(self.rows * self.cols);
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        RingMatrix {
            ctx: self.ctx.clone(),
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    /// Characteristic polynomial det(xI - M) by the Berkowitz recurrence:
    /// division-free, monic of degree exactly the side length. Signs are
    /// identities in characteristic 2.
    pub fn charpoly(&self) -> Result<RingPolynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n == 0 {
            return Ok(RingPolynomial::one(self.ctx.clone()));
        }
        // descending coefficients of the leading 1x1 charpoly: x + a00
        let mut desc = vec![self.ctx.one(), self.get(0, 0).clone()];
        for r in 1..n {
            // Toeplitz column for the (r+1)-sized leading principal
            // submatrix: [1, a_rr, R C, R A C, ..., R A^(r-1) C] where A is
            // the r x r leading block, R the row slice, C the column slice.
            let mut col = Vec::with_capacity(r + 2);
            col.push(self.ctx.one());
            col.push(self.get(r, r).clone());
            let mut v: Vec<RingElement> = (0..r).map(|i| self.get(i, r).clone()).collect();
            for step in 0..r {
                let mut dot = self.ctx.zero();
                for (i, vi) in v.iter().enumerate() {
                    dot = dot.add_unchecked(&self.get(r, i).mul_unchecked(vi));
                }
                col.push(dot);
                if step + 1 < r {
                    let mut next = Vec::with_capacity(r);
                    for i in 0..r {
                        let mut acc = self.ctx.zero();
                        for (j, vj) in v.iter().enumerate() {
                            acc = acc.add_unchecked(&self.get(i, j).mul_unchecked(vj));
                        }
                        next.push(acc);
                    }
                    v = next;
                }
            }
            // multiply the Toeplitz lower-triangular matrix by the current
            // coefficient vector
            let mut next = Vec::with_capacity(r + 2);
            for i in 0..r + 2 {
                let mut acc = self.ctx.zero();
                for (j, c) in desc.iter().enumerate() {
                    if i >= j && i - j < col.len() {
                        acc = acc.add_unchecked(&col[i - j].mul_unchecked(c));
                    }
                }
                next.push(acc);
            }
            desc = next;
        }
        desc.reverse();
        RingPolynomial::new(self.ctx.clone(), desc)
    }

    /// Independent characteristic-polynomial oracle: the coefficient of
    /// x^(s-m) is the sum of all m x m principal minors, each expanded by
    /// the Leibniz permutation sum (signs vanish in characteristic 2).
    /// Only sizes up to `limit` are accepted.
    pub fn charpoly_minors(&self, limit: usize) -> Result<RingPolynomial> {
        if !self.is_square() {
            return Err(Error::NotSquare {
                rows: self.rows,
                cols: self.cols,
            });
        }
        let n = self.rows;
        if n > limit {
            return Err(Error::OracleLimit { size: n, limit });
        }
        let mut coeffs = vec![self.ctx.zero(); n + 1];
        coeffs[n] = self.ctx.one();
        for subset in 1u64..(1 << n) {
            let idx: Vec<usize> = (0..n).filter(|i| subset >> i & 1 == 1).collect();
            let m = idx.len();
            let minor = self.leibniz_minor(&idx);
            coeffs[n - m] = coeffs[n - m].add_unchecked(&minor);
        }
        RingPolynomial::new(self.ctx.clone(), coeffs)
    }

    /// Leibniz permutation sum over the principal submatrix on `idx`.
    fn leibniz_minor(&self, idx: &[usize]) -> RingElement {
        let m = idx.len();
        let mut total = self.ctx.zero();
        let mut perm: Vec<usize> = (0..m).collect();
        loop {
            let mut term = self.ctx.one();
            for (i, &p) in perm.iter().enumerate() {
                term = term.mul_unchecked(self.get(idx[i], idx[p]));
            }
            total = total.add_unchecked(&term);
            if !next_permutation(&mut perm) {
                break;
            }
        }
        total
    }

    /// Determinant: the constant term of the division-free characteristic
    /// polynomial (the sign is an identity in characteristic 2).
    pub fn det(&self) -> Result<RingElement> {
        Ok(self.charpoly()?.coeff(0))
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

/// Result of evaluating a matrix's own characteristic polynomial at
/// itself. A nonzero residual would falsify the implementation, never the
/// mathematics; it is kept for evidence.
#[derive(Clone, Debug)]
pub struct CayleyHamiltonWitness {
    pub holds: bool,
    pub residual: RingMatrix,
}

pub fn cayley_hamilton_check(m: &RingMatrix) -> Result<CayleyHamiltonWitness> {
    let p = m.charpoly()?;
    let residual = p.eval_matrix(m)?;
    Ok(CayleyHamiltonWitness {
        holds: residual.is_zero(),
        residual,
    })
}

/// Characteristic-2 Frobenius identity on matrix evaluations:
/// p(M)^2 = sum over i of p_i^2 * M^(2i), computed term by term.
pub fn frobenius_eval_check(p: &RingPolynomial, m: &RingMatrix) -> Result<bool> {
    let lhs = {
        let e = p.eval_matrix(m)?;
        e.mul(&e)?
    };
    let target = m.context();
    let m2 = m.mul(m)?;
    let mut rhs = RingMatrix::zero(target.clone(), m.rows(), m.rows());
    let mut power = RingMatrix::identity(target.clone(), m.rows());
    for (i, c) in p.coeffs().iter().enumerate() {
        if i > 0 {
            power = power.mul(&m2)?;
        }
        let c2 = target.embed_scalar(&c.square())?;
        rhs = rhs.add(&power.scalar_mul(&c2)?)?;
    }
    Ok(lhs == rhs)
}
