//! Block matrices with Hadamard blocks, viewed as square matrices over
//! the Hadamard ring, and the identity they satisfy: with q the
//! characteristic polynomial of the blockwise-eigenvalue projection,
//! q(M)^2 is the zero matrix.
//!
//! The check computes everything two ways where the underlying argument
//! does: q(M) is evaluated both by scalar action of the base-ring
//! coefficients and by lifting q into the Hadamard ring first, and q(M)^2
//! is recomputed through the characteristic-2 Frobenius chain
//! sum of q_i^2 M^(2i).

use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::matrix::RingMatrix;
use crate::poly::RingPolynomial;
use crate::ring::RingContext;
use crate::sample::SeedStream;

/// An s x s matrix whose entries live in a Hadamard ring context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BlockMatrix {
    mat: RingMatrix,
    base: RingContext,
    k: u32,
}

impl BlockMatrix {
    /// Wrap a square matrix over a Hadamard ring context.
    pub fn new(mat: RingMatrix) -> Result<Self> {
        let (base, k) = match mat.context().as_hadamard() {
            Some((base, k)) => (base.clone(), k),
            None => {
                return Err(Error::Shape {
                    expected: "entries in a hadamard ring context".into(),
                    found: mat.context().spec_string(),
                })
            }
        };
        if !mat.is_square() {
            return Err(Error::NotSquare {
                rows: mat.rows(),
                cols: mat.cols(),
            });
        }
        Ok(BlockMatrix { mat, base, k })
    }

    pub fn from_blocks(
        base: &RingContext,
        k: u32,
        blocks: Vec<Vec<HadamardMatrix>>,
    ) -> Result<Self> {
        let s = blocks.len();
        let ctx = RingContext::hadamard(base.clone(), k)?;
        let mut entries = Vec::with_capacity(s * s);
        for row in blocks {
            if row.len() != s {
                return Err(Error::Shape {
                    expected: format!("{s} blocks per row"),
                    found: format!("{}", row.len()),
                });
            }
            for b in row {
                entries.push(ctx.wrap(b)?);
            }
        }
        Self::new(RingMatrix::new(ctx, s, s, entries)?)
    }

    pub fn zero(base: &RingContext, k: u32, s: usize) -> Result<Self> {
        let ctx = RingContext::hadamard(base.clone(), k)?;
        Self::new(RingMatrix::zero(ctx, s, s))
    }

    pub fn identity(base: &RingContext, k: u32, s: usize) -> Result<Self> {
        let ctx = RingContext::hadamard(base.clone(), k)?;
        Self::new(RingMatrix::identity(ctx, s))
    }

    pub fn random(base: &RingContext, k: u32, s: usize, rng: &mut SeedStream) -> Result<Self> {
        let ctx = RingContext::hadamard(base.clone(), k)?;
        Self::new(RingMatrix::random(&ctx, s, s, rng))
    }

    /// Random block matrix in the kernel of the blockwise eigenvalue map:
    /// every block is sampled with eigenvalue 0.
    pub fn random_kernel(
        base: &RingContext,
        k: u32,
        s: usize,
        rng: &mut SeedStream,
    ) -> Result<Self> {
        let ctx = RingContext::hadamard(base.clone(), k)?;
        let mut entries = Vec::with_capacity(s * s);
        for _ in 0..s * s {
            entries.push(ctx.wrap(HadamardMatrix::random_kernel(base, k, rng))?);
        }
        Self::new(RingMatrix::new(ctx, s, s, entries)?)
    }

    pub fn s(&self) -> usize {
        self.mat.rows()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn base(&self) -> &RingContext {
        &self.base
    }

    /// Total side length of the flattened matrix, s * 2^k.
    pub fn flat_side(&self) -> usize {
        self.s() << self.k
    }

    pub fn as_matrix(&self) -> &RingMatrix {
        &self.mat
    }

    pub fn block(&self, i: usize, j: usize) -> &HadamardMatrix {
        self.mat
            .get(i, j)
            .as_hadamard()
            .expect("hadamard context entries are hadamard matrices")
    }

    pub fn is_zero(&self) -> bool {
        self.mat.is_zero()
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.mat.add(&rhs.mat)?)
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        Self::new(self.mat.mul(&rhs.mat)?)
    }

    pub fn pow(&self, exp: u64) -> Result<Self> {
        Self::new(self.mat.pow(exp)?)
    }

    /// The blockwise eigenvalue projection: the s x s matrix over the
    /// base ring whose (i, j) entry is the eigenvalue of block (i, j).
    pub fn lambda_projection(&self) -> RingMatrix {
        let s = self.s();
        let entries = (0..s * s)
            .map(|t| self.block(t / s, t % s).eigenvalue())
            .collect();
        RingMatrix::new(self.base.clone(), s, s, entries)
            .expect("eigenvalues share the base context")
    }

    /// The blockwise determinant projection.
    pub fn det_projection(&self) -> RingMatrix {
        let s = self.s();
        let entries = (0..s * s).map(|t| self.block(t / s, t % s).det()).collect();
        RingMatrix::new(self.base.clone(), s, s, entries)
            .expect("determinants share the base context")
    }

    /// Whether every block has eigenvalue 0.
    pub fn in_kernel(&self) -> bool {
        self.lambda_projection().is_zero()
    }

    /// Expand every block: the t x t matrix over the base ring with
    /// t = s * 2^k. Flattening commutes with products and sums.
    pub fn flatten(&self) -> RingMatrix {
        let s = self.s();
        let side = 1usize << self.k;
        let t = s * side;
        let mut entries = Vec::with_capacity(t * t);
        for gi in 0..t {
            for gj in 0..t {
                let block = self.block(gi / side, gj / side);
                entries.push(block.entry(gi % side, gj % side).clone());
            }
        }
        RingMatrix::new(self.base.clone(), t, t, entries)
            .expect("block entries share the base context")
    }

    /// The tensor lift of an s x s base-ring matrix: every entry becomes
    /// the corresponding scalar block.
    pub fn tensor_with_identity(m: &RingMatrix, k: u32) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        let ctx = RingContext::hadamard(m.context().clone(), k)?;
        let entries = m
            .entries()
            .iter()
            .map(|c| ctx.embed_scalar(c))
            .collect::<Result<Vec<_>>>()?;
        Self::new(RingMatrix::new(ctx, m.rows(), m.cols(), entries)?)
    }

    /// Split M into the tensor part built from the eigenvalue projection
    /// plus a unique remainder with all block eigenvalues 0, so that
    /// M = projection tensor identity + remainder exactly.
    pub fn tensor_decompose(&self) -> Result<(RingMatrix, BlockMatrix)> {
        let projection = self.lambda_projection();
        let lifted = Self::tensor_with_identity(&projection, self.k)?;
        let remainder = self.add(&lifted)?;
        debug_assert!(remainder.in_kernel());
        debug_assert_eq!(&lifted.add(&remainder)?, self);
        Ok((projection, remainder))
    }
}

/// Everything the charpoly-square verification computes on one instance.
/// `q` is the charpoly of the eigenvalue projection over the base ring;
/// `big_q` is the charpoly of the block matrix over the Hadamard ring.
/// A failed check keeps its residual: any nonzero residual falsifies the
/// implementation, so the evidence matters.
#[derive(Clone, Debug)]
pub struct CharpolySquareReport {
    pub q: RingPolynomial,
    pub big_q: RingPolynomial,
    /// q(M)^2 = 0, the headline identity.
    pub q_squared_zero: bool,
    /// Q(M) = 0 over the Hadamard ring (Cayley-Hamilton).
    pub cayley_hamilton_zero: bool,
    /// lambda(Q_i) = q_i for every coefficient.
    pub coefficients_match: bool,
    /// Q_i^2 = q_i^2 * identity for every coefficient.
    pub coefficient_squares_scalar: bool,
    /// Scalar-action evaluation of q(M) equals lift-then-evaluate.
    pub eval_paths_agree: bool,
    /// q(M)^2 equals the term-by-term sum of q_i^2 M^(2i).
    pub frobenius_chain_ok: bool,
    pub q_squared_residual: Option<RingMatrix>,
    pub cayley_hamilton_residual: Option<RingMatrix>,
}

impl CharpolySquareReport {
    pub fn is_ok(&self) -> bool {
        self.q_squared_zero
            && self.cayley_hamilton_zero
            && self.coefficients_match
            && self.coefficient_squares_scalar
            && self.eval_paths_agree
            && self.frobenius_chain_ok
    }
}

/// Verify the charpoly-square identity and the intermediate facts that
/// drive it on one block matrix.
pub fn verify_charpoly_square(m: &BlockMatrix) -> Result<CharpolySquareReport> {
    let projection = m.lambda_projection();
    let q = projection.charpoly()?;

    // scalar-action evaluation of q at M
    let q_at_m = q.eval_matrix(m.as_matrix())?;
    let q_squared = q_at_m.mul(&q_at_m)?;
    let q_squared_zero = q_squared.is_zero();

    // lift-then-evaluate path
    let lifted = q.lift(m.as_matrix().context())?;
    let eval_paths_agree = lifted.eval_matrix(m.as_matrix())? == q_at_m;

    // charpoly over the Hadamard ring and Cayley-Hamilton
    let big_q = m.as_matrix().charpoly()?;
    let ch_residual = big_q.eval_matrix(m.as_matrix())?;
    let cayley_hamilton_zero = ch_residual.is_zero();

    // coefficient correspondence under the eigenvalue homomorphism
    let s = m.s();
    let mut coefficients_match = big_q.degree() == q.degree();
    let mut coefficient_squares_scalar = true;
    let had_ctx = m.as_matrix().context();
    for i in 0..=s {
        let big_c = big_q.coeff(i);
        let small_c = q.coeff(i);
        let big_h = big_c.as_hadamard().expect("hadamard ring coefficient");
        if big_h.eigenvalue() != small_c {
            coefficients_match = false;
        }
        let lhs = big_c.square();
        let rhs = had_ctx.embed_scalar(&small_c.square())?;
        if lhs != rhs {
            coefficient_squares_scalar = false;
        }
    }

    // Frobenius chain: q(M)^2 = sum of q_i^2 M^(2i)
    let m2 = m.as_matrix().mul(m.as_matrix())?;
    let mut chain = RingMatrix::zero(had_ctx.clone(), s, s);
    let mut power = RingMatrix::identity(had_ctx.clone(), s);
    for (i, c) in q.coeffs().iter().enumerate() {
        if i > 0 {
            power = power.mul(&m2)?;
        }
        let c2 = had_ctx.embed_scalar(&c.square())?;
        chain = chain.add(&power.scalar_mul(&c2)?)?;
    }
    let frobenius_chain_ok = chain == q_squared;

    Ok(CharpolySquareReport {
        q,
        big_q,
        q_squared_zero,
        cayley_hamilton_zero,
        coefficients_match,
        coefficient_squares_scalar,
        eval_paths_agree,
        frobenius_chain_ok,
        q_squared_residual: (!q_squared_zero).then_some(q_squared),
        cayley_hamilton_residual: (!cayley_hamilton_zero).then_some(ch_residual),
    })
}

/// Nilpotency measurements for a block matrix in the kernel of the
/// blockwise eigenvalue map.
#[derive(Clone, Debug)]
pub struct KernelNilpotencyReport {
    /// Smallest power at which the matrix vanishes, if one was found
    /// within max(2s, k+1).
    pub index: Option<u64>,
    /// M^(2s) = 0, the k-independent bound.
    pub power_2s_zero: bool,
    /// M^(k+1) = 0, the s-independent bound.
    pub power_k_plus_1_zero: bool,
}

impl KernelNilpotencyReport {
    pub fn is_ok(&self) -> bool {
        self.power_2s_zero && self.power_k_plus_1_zero
    }
}

/// Measure the nilpotency index of a kernel block matrix and check both
/// vanishing bounds. Errors when some block has a nonzero eigenvalue.
pub fn kernel_nilpotency(m: &BlockMatrix) -> Result<KernelNilpotencyReport> {
    if !m.in_kernel() {
        return Err(Error::NotInKernel);
    }
    let two_s = 2 * m.s() as u64;
    let k_plus_1 = m.k() as u64 + 1;
    let max_power = two_s.max(k_plus_1);
    let mut index = None;
    let mut power = BlockMatrix::identity(m.base(), m.k(), m.s())?;
    for e in 1..=max_power {
        power = power.mul(m)?;
        if power.is_zero() {
            index = Some(e);
            break;
        }
    }
    Ok(KernelNilpotencyReport {
        index,
        power_2s_zero: index.is_some_and(|i| i <= two_s),
        power_k_plus_1_zero: index.is_some_and(|i| i <= k_plus_1),
    })
}

/// Commutativity of the two projection diagrams: taking the determinant
/// over the Hadamard ring and then projecting equals projecting blockwise
/// and then taking the determinant over the base ring, once for the
/// eigenvalue map and once for the blockwise determinant map.
pub fn det_diagrams_commute(m: &BlockMatrix) -> Result<bool> {
    let det_over_had = m.as_matrix().det()?;
    let h = det_over_had
        .as_hadamard()
        .expect("determinant over a hadamard ring is a hadamard element");
    let lambda_path = m.lambda_projection().det()?;
    let det_path = m.det_projection().det()?;
    Ok(h.eigenvalue() == lambda_path && h.det() == det_path)
}
