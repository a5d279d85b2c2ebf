//! Univariate polynomials over any ring context.
//!
//! Coefficients are stored in ascending degree and kept normalized: the
//! zero polynomial is the empty vector, otherwise the last coefficient is
//! nonzero.

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{RingContext, RingElement};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingPolynomial {
    ctx: RingContext,
    coeffs: Vec<RingElement>,
}

impl RingPolynomial {
    pub fn new(ctx: RingContext, mut coeffs: Vec<RingElement>) -> Result<Self> {
        for c in &coeffs {
            if *c.context() != ctx {
                return Err(Error::ContextMismatch {
                    left: ctx.spec_string(),
                    right: c.context().spec_string(),
                });
            }
        }
        while coeffs.last().is_some_and(RingElement::is_zero) {
            coeffs.pop();
        }
        Ok(RingPolynomial { ctx, coeffs })
    }

    pub fn zero(ctx: RingContext) -> Self {
        RingPolynomial {
            ctx,
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: RingContext) -> Self {
        let coeffs = vec![ctx.one()];
        RingPolynomial { ctx, coeffs }
    }

    /// The monomial x.
    pub fn x(ctx: RingContext) -> Self {
        let coeffs = vec![ctx.zero(), ctx.one()];
        RingPolynomial { ctx, coeffs }
    }

    pub fn context(&self) -> &RingContext {
        &self.ctx
    }

    /// Ascending coefficients, normalized.
    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    /// Degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of x^i (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> RingElement {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RingElement::is_one)
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| self.coeff(i).add_unchecked(&rhs.coeff(i)))
            .collect();
        Self::new(self.ctx.clone(), coeffs)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        if self.is_zero() || rhs.is_zero() {
            return Ok(Self::zero(self.ctx.clone()));
        }
        let mut coeffs = vec![self.ctx.zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add_unchecked(&a.mul_unchecked(b));
            }
        }
        Self::new(self.ctx.clone(), coeffs)
    }

    fn ensure_same(&self, rhs: &Self) -> Result<()> {
        if self.ctx == rhs.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: self.ctx.spec_string(),
                right: rhs.ctx.spec_string(),
            })
        }
    }

    /// Horner evaluation at a scalar of the same context.
    pub fn eval(&self, at: &RingElement) -> Result<RingElement> {
        if *at.context() != self.ctx {
            return Err(Error::ContextMismatch {
                left: self.ctx.spec_string(),
                right: at.context().spec_string(),
            });
        }
        let mut acc = self.ctx.zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_unchecked(at).add_unchecked(c);
        }
        Ok(acc)
    }

    /// Evaluate at a square matrix, sum of coeff_i * M^i with M^0 = I.
    /// Coefficients may live in the entry context itself or in any ring
    /// that embeds into it as scalars (an R-polynomial evaluated at a
    /// matrix over H_k(R) acts by coeff * identity-block).
    pub fn eval_matrix(&self, m: &RingMatrix) -> Result<RingMatrix> {
        if m.rows() != m.cols() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let target = m.context();
        let mut acc = RingMatrix::zero(target.clone(), m.rows(), m.rows());
        for c in self.coeffs.iter().rev() {
            let lifted = target.embed_scalar(c)?;
            acc = acc
                .mul(m)?
                .add(&RingMatrix::scalar(target.clone(), m.rows(), &lifted))?;
        }
        Ok(acc)
    }

    /// Coefficientwise scalar embedding into a larger context.
    pub fn lift(&self, target: &RingContext) -> Result<Self> {
        let coeffs = self
            .coeffs
            .iter()
            .map(|c| target.embed_scalar(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(target.clone(), coeffs)
    }

    /// Polynomial division by a monic divisor, valid over any
    /// commutative ring. Returns (quotient, remainder).
    pub fn div_rem_monic(&self, divisor: &Self) -> Result<(Self, Self)> {
        self.ensure_same(divisor)?;
        if !divisor.is_monic() {
            return Err(Error::Spec("division requires a monic divisor".into()));
        }
        let d = divisor.coeffs.len() - 1;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![self.ctx.zero(); rem.len().saturating_sub(d)];
        while rem.len() > d {
            let lead = rem.last().expect("nonempty").clone();
            let shift = rem.len() - 1 - d;
            if !lead.is_zero() {
                quot[shift] = lead.clone();
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    rem[shift + i] = rem[shift + i].add_unchecked(&lead.mul_unchecked(b));
                }
            }
            rem.pop();
        }
        Ok((
            Self::new(self.ctx.clone(), quot)?,
            Self::new(self.ctx.clone(), rem)?,
        ))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf4() -> RingContext {
        RingContext::binary_field(2, 0b111).unwrap()
    }

    fn poly(ctx: &RingContext, bits: &[u64]) -> RingPolynomial {
        let coeffs = bits.iter().map(|b| ctx.element(*b).unwrap()).collect();
        RingPolynomial::new(ctx.clone(), coeffs).unwrap()
    }

    #[test]
    fn normalization_strips_leading_zeros() {
        let ctx = gf4();
        let p = poly(&ctx, &[1, 2, 0, 0]);
        assert_eq!(p.degree(), Some(1));
        assert!(poly(&ctx, &[0, 0]).is_zero());
    }

    #[test]
    fn arithmetic_and_eval() {
        let ctx = gf4();
        let p = poly(&ctx, &[1, 1]); // x + 1
        let q = p.mul(&p).unwrap(); // x^2 + 1 by Frobenius
        assert_eq!(q, poly(&ctx, &[1, 0, 1]));

        let w = ctx.element(2).unwrap();
        // q(w) = w^2 + 1 = w
        assert_eq!(q.eval(&w).unwrap().bits(), Some(2));
    }

    #[test]
    fn division_by_monic() {
        let ctx = gf4();
        // (x + 1)(x + w) = x^2 + (w+1)x + w
        let a = poly(&ctx, &[1, 1]);
        let b = poly(&ctx, &[2, 1]);
        let prod = a.mul(&b).unwrap();
        let (q, r) = prod.div_rem_monic(&a).unwrap();
        assert_eq!(q, b);
        assert!(r.is_zero());

        let (q2, r2) = prod
            .add(&RingPolynomial::one(ctx.clone()))
            .unwrap()
            .div_rem_monic(&a)
            .unwrap();
        assert_eq!(q2, b);
        assert_eq!(r2, RingPolynomial::one(ctx));
    }

    #[test]
    fn eval_matrix_basics() {
        let ctx = gf4();
        let m = RingMatrix::new(
            ctx.clone(),
            2,
            2,
            vec![
                ctx.element(1).unwrap(),
                ctx.element(2).unwrap(),
                ctx.element(2).unwrap(),
                ctx.element(1).unwrap(),
            ],
        )
        .unwrap();
        // p = x reproduces M
        assert_eq!(RingPolynomial::x(ctx.clone()).eval_matrix(&m).unwrap(), m);
        // x^2 + 1 kills the identity in characteristic 2
        let id = RingMatrix::identity(ctx.clone(), 3);
        assert!(poly(&ctx, &[1, 0, 1]).eval_matrix(&id).unwrap().is_zero());
    }
}
