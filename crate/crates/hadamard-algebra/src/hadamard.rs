//! Hadamard matrices over a characteristic-2 ring.
//!
//! A 2^k x 2^k matrix is Hadamard when entry (i, j) depends only on
//! i XOR j; the whole matrix is determined by its first row, and that row
//! is the canonical representation here. Expansion to a dense matrix is
//! an explicit, separate step. Multiplication is the XOR convolution of
//! first rows, implemented directly: transform-based acceleration would
//! need division by 2, which characteristic 2 rules out.

use crate::error::{Error, Result};
use crate::matrix::RingMatrix;
use crate::ring::{RingContext, RingElement};
use crate::sample::SeedStream;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HadamardMatrix {
    base: RingContext,
    k: u32,
    row: Vec<RingElement>,
}

impl HadamardMatrix {
    /// Build from the first row; the row length must be 2^k and every
    /// entry must live in `base`.
    pub fn new(base: RingContext, k: u32, row: Vec<RingElement>) -> Result<Self> {
        if row.len() != 1usize << k {
            return Err(Error::Shape {
                expected: format!("first row of length {}", 1usize << k),
                found: format!("length {}", row.len()),
            });
        }
        for entry in &row {
            if *entry.context() != base {
                return Err(Error::ContextMismatch {
                    left: base.spec_string(),
                    right: entry.context().spec_string(),
                });
            }
        }
        Ok(HadamardMatrix { base, k, row })
    }

    pub fn zero(base: RingContext, k: u32) -> Self {
        let row = vec![base.zero(); 1 << k];
        HadamardMatrix { base, k, row }
    }

    pub fn identity(base: RingContext, k: u32) -> Self {
        let mut row = vec![base.zero(); 1 << k];
        row[0] = base.one();
        HadamardMatrix { base, k, row }
    }

    /// The scalar matrix c * I as a Hadamard matrix.
    pub fn scalar(base: RingContext, k: u32, c: &RingElement) -> Result<Self> {
        if *c.context() != base {
            return Err(Error::ContextMismatch {
                left: base.spec_string(),
                right: c.context().spec_string(),
            });
        }
        let mut row = vec![base.zero(); 1 << k];
        row[0] = c.clone();
        Ok(HadamardMatrix { base, k, row })
    }

    /// Uniformly random first row.
    pub fn random(base: &RingContext, k: u32, rng: &mut SeedStream) -> Self {
        let row = (0..1usize << k).map(|_| base.sample(rng)).collect();
        HadamardMatrix {
            base: base.clone(),
            k,
            row,
        }
    }

    /// Random matrix with eigenvalue 0: the entry at position 0 is
    /// overwritten with the sum of the others.
    pub fn random_kernel(base: &RingContext, k: u32, rng: &mut SeedStream) -> Self {
        let mut h = Self::random(base, k, rng);
        let mut sum = base.zero();
        for entry in &h.row[1..] {
            sum = sum.add_unchecked(entry);
        }
        h.row[0] = sum;
        h
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn side(&self) -> usize {
        1 << self.k
    }

    pub fn base(&self) -> &RingContext {
        &self.base
    }

    pub fn row(&self) -> &[RingElement] {
        &self.row
    }

    /// Entry (i, j) of the expanded matrix, which is row[i ^ j].
    pub fn entry(&self, i: usize, j: usize) -> &RingElement {
        &self.row[i ^ j]
    }

    pub fn is_zero(&self) -> bool {
        self.row.iter().all(RingElement::is_zero)
    }

    fn ensure_same(&self, rhs: &Self) -> Result<()> {
        if self.k == rhs.k && self.base == rhs.base {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: format!("had:{}:{}", self.base.spec_string(), self.k),
                right: format!("had:{}:{}", rhs.base.spec_string(), rhs.k),
            })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        Ok(self.add_unchecked(rhs))
    }

    pub(crate) fn add_unchecked(&self, rhs: &Self) -> Self {
        let row = self
            .row
            .iter()
            .zip(&rhs.row)
            .map(|(a, b)| a.add_unchecked(b))
            .collect();
        HadamardMatrix {
            base: self.base.clone(),
            k: self.k,
            row,
        }
    }

    /// Product of two Hadamard matrices: the XOR convolution of their
    /// first rows, c_j = sum_i a_i * b_(i xor j).
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Self) -> Self {
        let n = self.row.len();
        // Bit-packed bases take a raw path: accumulate carry-less
        // products in a u128 and reduce once per output entry.
        if let Some(modulus) = self.base.modulus() {
            let a: Vec<u64> = self
                .row
                .iter()
                .map(|e| e.bits().expect("bit-packed"))
                .collect();
            let b: Vec<u64> = rhs
                .row
                .iter()
                .map(|e| e.bits().expect("bit-packed"))
                .collect();
            let row = (0..n)
                .map(|j| {
                    let mut acc = 0u128;
                    for i in 0..n {
                        acc ^= crate::ring::f2x::clmul(a[i], b[i ^ j]);
                    }
                    self.base
                        .element(crate::ring::f2x::reduce(acc, modulus))
                        .expect("reduced product")
                })
                .collect();
            return HadamardMatrix {
                base: self.base.clone(),
                k: self.k,
                row,
            };
        }
        let mut row = Vec::with_capacity(n);
        for j in 0..n {
            let mut acc = self.base.zero();
            for i in 0..n {
                acc = acc.add_unchecked(&self.row[i].mul_unchecked(&rhs.row[i ^ j]));
            }
            row.push(acc);
        }
        HadamardMatrix {
            base: self.base.clone(),
            k: self.k,
            row,
        }
    }

    pub fn scale(&self, c: &RingElement) -> Result<Self> {
        if *c.context() != self.base {
            return Err(Error::ContextMismatch {
                left: self.base.spec_string(),
                right: c.context().spec_string(),
            });
        }
        Ok(self.scale_unchecked(c))
    }

    pub(crate) fn scale_unchecked(&self, c: &RingElement) -> Self {
        let row = self.row.iter().map(|a| a.mul_unchecked(c)).collect();
        HadamardMatrix {
            base: self.base.clone(),
            k: self.k,
            row,
        }
    }

    /// The unique eigenvalue: the sum of the first-row entries.
    pub fn eigenvalue(&self) -> RingElement {
        let mut acc = self.base.zero();
        for entry in &self.row {
            acc = acc.add_unchecked(entry);
        }
        acc
    }

    /// Determinant of the expanded matrix, via the division-free
    /// characteristic polynomial.
    pub fn det(&self) -> RingElement {
        self.expand().det().expect("expanded matrix is square")
    }

    /// Dense 2^k x 2^k matrix with entry (i, j) = row[i ^ j].
    pub fn expand(&self) -> RingMatrix {
        let n = self.side();
        let mut entries = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                entries.push(self.row[i ^ j].clone());
            }
        }
        RingMatrix::new(self.base.clone(), n, n, entries).expect("row entries share the context")
    }

    /// Inverse of `expand`: recover the first row after checking the
    /// Hadamard property on every entry. Reports the first offending
    /// position when the property fails.
    pub fn from_full(m: &RingMatrix) -> Result<Self> {
        let n = m.rows();
        if m.cols() != n {
            return Err(Error::NotSquare {
                rows: m.rows(),
                cols: m.cols(),
            });
        }
        if !n.is_power_of_two() {
            return Err(Error::SideNotPowerOfTwo { side: n });
        }
        let k = n.trailing_zeros();
        for i in 0..n {
            for j in 0..n {
                if m.get(i, j) != m.get(0, i ^ j) {
                    return Err(Error::NotHadamard { i, j });
                }
            }
        }
        let row = (0..n).map(|j| m.get(0, j).clone()).collect();
        Ok(HadamardMatrix {
            base: m.context().clone(),
            k,
            row,
        })
    }

    /// The basis permutation matrix whose first row is the indicator of
    /// `index`: the Kronecker product of I and the 2x2 swap matrix
    /// according to the binary digits of `index`.
    pub fn kron_basis(base: &RingContext, k: u32, index: u64) -> Result<Self> {
        if index >= 1u64 << k {
            return Err(Error::IndexRange { index, k });
        }
        let mut row = vec![base.zero(); 1 << k];
        row[index as usize] = base.one();
        Ok(HadamardMatrix {
            base: base.clone(),
            k,
            row,
        })
    }

    /// Coefficients of the basis decomposition: the nonzero first-row
    /// entries with their indices. Reconstruction is
    /// sum of coeff * kron_basis(index).
    pub fn decompose(&self) -> Vec<(RingElement, u64)> {
        self.row
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (c.clone(), i as u64))
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf2() -> RingContext {
        RingContext::gf(1).unwrap()
    }

    fn gf4() -> RingContext {
        RingContext::binary_field(2, 0b111).unwrap()
    }

    fn had(base: &RingContext, k: u32, bits: &[u64]) -> HadamardMatrix {
        let row = bits.iter().map(|b| base.element(*b).unwrap()).collect();
        HadamardMatrix::new(base.clone(), k, row).unwrap()
    }

    #[test]
    fn expand_level_one() {
        let base = gf4();
        let h = had(&base, 1, &[2, 1]);
        let m = h.expand();
        let e = |b: u64| base.element(b).unwrap();
        assert_eq!(m.get(0, 0), &e(2));
        assert_eq!(m.get(0, 1), &e(1));
        assert_eq!(m.get(1, 0), &e(1));
        assert_eq!(m.get(1, 1), &e(2));
    }

    #[test]
    fn expand_level_zero_and_indicator() {
        let base = gf2();
        let h = had(&base, 0, &[1]);
        assert_eq!(h.expand().rows(), 1);

        // indicator at 0 expands to the 4x4 identity
        let id = had(&base, 2, &[1, 0, 0, 0]);
        assert_eq!(id.expand(), RingMatrix::identity(base, 4));
    }

    #[test]
    fn from_full_round_trip_and_violation() {
        let base = gf4();
        let h = had(&base, 1, &[2, 3]);
        let back = HadamardMatrix::from_full(&h.expand()).unwrap();
        assert_eq!(back, h);

        // flip one entry: [[a,b],[c,a]] with c != b fails at (1,0)
        let mut m = h.expand();
        m.set(1, 0, base.element(0x1).unwrap()).unwrap();
        assert_eq!(
            HadamardMatrix::from_full(&m),
            Err(Error::NotHadamard { i: 1, j: 0 })
        );
    }

    #[test]
    fn from_full_rejects_non_power_of_two() {
        let base = gf2();
        let m = RingMatrix::zero(base, 3, 3);
        assert_eq!(
            HadamardMatrix::from_full(&m),
            Err(Error::SideNotPowerOfTwo { side: 3 })
        );
    }

    #[test]
    fn xor_convolution_matches_expanded_product() {
        let base = gf4();
        let a = had(&base, 1, &[2, 1]); // (w, 1)
        let b = had(&base, 1, &[1, 2]); // (1, w)
        let c = a.mul(&b).unwrap();
        assert_eq!(c, had(&base, 1, &[0, 2])); // (0, w)

        let full = a.expand().mul(&b.expand()).unwrap();
        assert_eq!(HadamardMatrix::from_full(&full).unwrap(), c);
    }

    #[test]
    fn identity_multiplication() {
        let base = gf4();
        let b = had(&base, 2, &[3, 1, 0, 2]);
        let id = HadamardMatrix::identity(base.clone(), 2);
        assert_eq!(id.mul(&b).unwrap(), b);
    }

    #[test]
    fn all_ones_squares_to_zero_over_gf2() {
        let base = gf2();
        let j = had(&base, 1, &[1, 1]);
        assert!(j.mul(&j).unwrap().is_zero());
    }

    #[test]
    fn addition_examples() {
        let base = gf2();
        let a = had(&base, 1, &[1, 0]);
        let b = had(&base, 1, &[0, 1]);
        assert_eq!(a.add(&b).unwrap(), had(&base, 1, &[1, 1]));
        assert!(a.add(&a).unwrap().is_zero());
        assert_eq!(a.add(&HadamardMatrix::zero(base, 1)).unwrap(), a);
    }

    #[test]
    fn mismatched_levels_rejected() {
        let base = gf2();
        let a = had(&base, 1, &[1, 0]);
        let b = had(&base, 2, &[1, 0, 0, 0]);
        assert!(matches!(a.mul(&b), Err(Error::ContextMismatch { .. })));
    }

    #[test]
    fn eigenvalue_examples() {
        let base = gf4();
        assert!(HadamardMatrix::identity(base.clone(), 1)
            .eigenvalue()
            .is_one());
        assert_eq!(had(&base, 1, &[2, 1]).eigenvalue().bits(), Some(0x3));
        // equal entries, even count: sum vanishes in characteristic 2
        assert!(had(&base, 2, &[3, 3, 3, 3]).eigenvalue().is_zero());
    }

    #[test]
    fn determinant_examples() {
        let base = gf4();
        assert!(HadamardMatrix::identity(base.clone(), 1).det().is_one());
        assert!(had(&gf2(), 1, &[1, 1]).det().is_zero());
        // det [[w,1],[1,w]] = w^2 + 1 = w
        assert_eq!(had(&base, 1, &[2, 1]).det().bits(), Some(0x2));
    }

    // Explicit Kronecker-product oracle for the basis matrices.
    fn kron_oracle(base: &RingContext, k: u32, index: u64) -> RingMatrix {
        let mut acc = RingMatrix::identity(base.clone(), 1);
        for bit in (0..k).rev() {
            let factor = if index >> bit & 1 == 1 {
                // the 2x2 swap matrix
                RingMatrix::new(
                    base.clone(),
                    2,
                    2,
                    vec![base.zero(), base.one(), base.one(), base.zero()],
                )
                .unwrap()
            } else {
                RingMatrix::identity(base.clone(), 2)
            };
            acc = kron(&acc, &factor);
        }
        acc
    }

    fn kron(a: &RingMatrix, b: &RingMatrix) -> RingMatrix {
        let (ar, ac, br, bc) = (a.rows(), a.cols(), b.rows(), b.cols());
        let mut entries = Vec::with_capacity(ar * br * ac * bc);
        for i in 0..ar * br {
            for j in 0..ac * bc {
                entries.push(a.get(i / br, j / bc).mul(b.get(i % br, j % bc)).unwrap());
            }
        }
        RingMatrix::new(a.context().clone(), ar * br, ac * bc, entries).unwrap()
    }

    #[test]
    fn kron_basis_matches_kronecker_oracle() {
        let base = gf2();
        for k in 0..=3u32 {
            for i in 0..1u64 << k {
                let basis = HadamardMatrix::kron_basis(&base, k, i).unwrap();
                assert_eq!(basis.expand(), kron_oracle(&base, k, i), "k={k} i={i}");
            }
        }
        assert_eq!(
            HadamardMatrix::kron_basis(&base, 2, 4),
            Err(Error::IndexRange { index: 4, k: 2 })
        );
    }

    #[test]
    fn kron_basis_product_law() {
        let base = gf2();
        let k = 2;
        for i in 0..4u64 {
            for j in 0..4u64 {
                let prod = HadamardMatrix::kron_basis(&base, k, i)
                    .unwrap()
                    .mul(&HadamardMatrix::kron_basis(&base, k, j).unwrap())
                    .unwrap();
                assert_eq!(prod, HadamardMatrix::kron_basis(&base, k, i ^ j).unwrap());
            }
        }
    }

    #[test]
    fn decompose_examples() {
        let base = gf4();
        let id = HadamardMatrix::identity(base.clone(), 2);
        let d = id.decompose();
        assert_eq!(d.len(), 1);
        assert!(d[0].0.is_one());
        assert_eq!(d[0].1, 0);

        let h = had(&base, 1, &[2, 1]);
        let d = h.decompose();
        assert_eq!(d.len(), 2);
        assert_eq!((d[0].0.bits(), d[0].1), (Some(2), 0));
        assert_eq!((d[1].0.bits(), d[1].1), (Some(1), 1));

        assert!(HadamardMatrix::zero(base, 2).decompose().is_empty());

        // reconstruction
        let h = had(&gf4(), 2, &[3, 0, 1, 2]);
        let mut acc = HadamardMatrix::zero(gf4(), 2);
        for (c, i) in h.decompose() {
            let basis = HadamardMatrix::kron_basis(&gf4(), 2, i).unwrap();
            acc = acc.add(&basis.scale(&c).unwrap()).unwrap();
        }
        assert_eq!(acc, h);
    }

    #[test]
    fn kernel_sampler_forces_zero_eigenvalue() {
        let base = gf4();
        let mut rng = SeedStream::new(5);
        for _ in 0..16 {
            let h = HadamardMatrix::random_kernel(&base, 2, &mut rng);
            assert!(h.eigenvalue().is_zero());
        }
    }
}
