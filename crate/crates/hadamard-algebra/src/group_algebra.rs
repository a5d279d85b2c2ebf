//! The group algebra R[G] for G = (F_2^k, xor), its isomorphism with the
//! Hadamard ring, and the augmentation ideal.
//!
//! Group elements are indexed by integers 0..2^k through their 2-adic
//! digits, most significant digit first, so the standard basis vector e_i
//! sits at integer index 2^(k-1-i). The XOR of indices realizes the group
//! law either way, but this ordering is frozen library-wide for
//! serialization. The same coefficient vector, read as coefficients of
//! square-free monomials, gives the quotient algebra
//! R[x_1,...,x_k]/(x_1^2 - 1, ..., x_k^2 - 1); monomials multiply by
//! XOR-ing exponent masks since x_i^2 = 1.

use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::ring::{RingContext, RingElement};
use crate::sample::SeedStream;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupAlgebraElement {
    base: RingContext,
    k: u32,
    coeffs: Vec<RingElement>,
}

/// Integer index of the standard basis vector e_i, 0 <= i < k.
pub fn standard_basis_index(k: u32, i: u32) -> u64 {
    debug_assert!(i < k);
    1u64 << (k - 1 - i)
}

impl GroupAlgebraElement {
    pub fn new(base: RingContext, k: u32, coeffs: Vec<RingElement>) -> Result<Self> {
        if coeffs.len() != 1usize << k {
            return Err(Error::Shape {
                expected: format!("{} coefficients", 1usize << k),
                found: format!("{}", coeffs.len()),
            });
        }
        for c in &coeffs {
            if *c.context() != base {
                return Err(Error::ContextMismatch {
                    left: base.spec_string(),
                    right: c.context().spec_string(),
                });
            }
        }
        Ok(GroupAlgebraElement { base, k, coeffs })
    }

    pub fn zero(base: RingContext, k: u32) -> Self {
        let coeffs = vec![base.zero(); 1 << k];
        GroupAlgebraElement { base, k, coeffs }
    }

    /// The group identity e as an algebra element.
    pub fn identity(base: RingContext, k: u32) -> Self {
        let mut out = Self::zero(base, k);
        out.coeffs[0] = out.base.one();
        out
    }

    /// The single group element with integer index `g`, coefficient 1.
    pub fn group_element(base: RingContext, k: u32, g: u64) -> Result<Self> {
        if g >= 1u64 << k {
            return Err(Error::IndexRange { index: g, k });
        }
        let mut out = Self::zero(base, k);
        out.coeffs[g as usize] = out.base.one();
        Ok(out)
    }

    pub fn random(base: &RingContext, k: u32, rng: &mut SeedStream) -> Self {
        let coeffs = (0..1usize << k).map(|_| base.sample(rng)).collect();
        GroupAlgebraElement {
            base: base.clone(),
            k,
            coeffs,
        }
    }

    /// Random element of the augmentation ideal: the coefficient at e is
    /// overwritten with the sum of the others, forcing augmentation 0.
    pub fn random_ideal(base: &RingContext, k: u32, rng: &mut SeedStream) -> Self {
        let mut a = Self::random(base, k, rng);
        let mut sum = base.zero();
        for c in &a.coeffs[1..] {
            sum = sum.add_unchecked(c);
        }
        a.coeffs[0] = sum;
        a
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn base(&self) -> &RingContext {
        &self.base
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RingElement::is_zero)
    }

    fn ensure_same(&self, rhs: &Self) -> Result<()> {
        if self.k == rhs.k && self.base == rhs.base {
            Ok(())
        } else {
            Err(Error::ContextMismatch {
                left: format!("R[G] k={} over {}", self.k, self.base),
                right: format!("R[G] k={} over {}", rhs.k, rhs.base),
            })
        }
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&rhs.coeffs)
            .map(|(a, b)| a.add_unchecked(b))
            .collect();
        Ok(GroupAlgebraElement {
            base: self.base.clone(),
            k: self.k,
            coeffs,
        })
    }

    /// Convolution product: the coefficient at g is
    /// sum over h of a_h * b_(h xor g).
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n);
        for g in 0..n {
            let mut acc = self.base.zero();
            for h in 0..n {
                acc = acc.add_unchecked(&self.coeffs[h].mul_unchecked(&rhs.coeffs[h ^ g]));
            }
            coeffs.push(acc);
        }
        Ok(GroupAlgebraElement {
            base: self.base.clone(),
            k: self.k,
            coeffs,
        })
    }

    /// The coefficient-sum homomorphism onto R; on Hadamard images it is
    /// the eigenvalue.
    pub fn augmentation(&self) -> RingElement {
        let mut acc = self.base.zero();
        for c in &self.coeffs {
            acc = acc.add_unchecked(c);
        }
        acc
    }

    /// Transport from the Hadamard ring: the coefficient at the group
    /// element with index j is the first-row entry a_j.
    pub fn from_hadamard(h: &HadamardMatrix) -> Self {
        GroupAlgebraElement {
            base: h.base().clone(),
            k: h.k(),
            coeffs: h.row().to_vec(),
        }
    }

    pub fn to_hadamard(&self) -> HadamardMatrix {
        HadamardMatrix::new(self.base.clone(), self.k, self.coeffs.clone())
            .expect("coefficient vector has Hadamard row shape")
    }

    /// View as the multilinear polynomial with the same coefficient
    /// vector, indexed by exponent masks.
    pub fn to_multilinear(&self) -> MultilinearPoly {
        MultilinearPoly {
            base: self.base.clone(),
            k: self.k,
            coeffs: self.coeffs.clone(),
        }
    }

    pub fn from_multilinear(p: &MultilinearPoly) -> Self {
        GroupAlgebraElement {
            base: p.base.clone(),
            k: p.k,
            coeffs: p.coeffs.clone(),
        }
    }
}

/// Product of augmentation-ideal members; every input must have
/// augmentation 0. The empty product is e. Products of at least k+1 ideal
/// elements vanish (the ideal's nilpotency degree is k+1).
pub fn ideal_product(
    base: &RingContext,
    k: u32,
    elements: &[GroupAlgebraElement],
) -> Result<GroupAlgebraElement> {
    for e in elements {
        if e.k != k || e.base != *base {
            return Err(Error::ContextMismatch {
                left: format!("R[G] k={k} over {base}"),
                right: format!("R[G] k={} over {}", e.k, e.base),
            });
        }
        if !e.augmentation().is_zero() {
            return Err(Error::NotAugmentationIdeal);
        }
    }
    let mut acc = GroupAlgebraElement::identity(base.clone(), k);
    for e in elements {
        acc = acc.mul(e)?;
    }
    Ok(acc)
}

/// An element of R[x_1,...,x_k]/(x_1^2 - 1, ..., x_k^2 - 1), stored as
/// the 2^k square-free monomial coefficients (higher powers reduced
/// eagerly). The exponent of x_(l+1) in monomial mask m is bit k-1-l.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultilinearPoly {
    base: RingContext,
    k: u32,
    coeffs: Vec<RingElement>,
}

impl MultilinearPoly {
    pub fn new(base: RingContext, k: u32, coeffs: Vec<RingElement>) -> Result<Self> {
        GroupAlgebraElement::new(base, k, coeffs).map(|a| a.to_multilinear())
    }

    pub fn constant(base: RingContext, k: u32, c: &RingElement) -> Result<Self> {
        let mut out = GroupAlgebraElement::zero(base.clone(), k);
        if *c.context() != base {
            return Err(Error::ContextMismatch {
                left: base.spec_string(),
                right: c.context().spec_string(),
            });
        }
        out.coeffs[0] = c.clone();
        Ok(out.to_multilinear())
    }

    /// The variable x_i, 1-based.
    pub fn variable(base: RingContext, k: u32, i: u32) -> Result<Self> {
        if i == 0 || i > k {
            return Err(Error::IndexRange { index: i as u64, k });
        }
        let mask = 1u64 << (k - i);
        GroupAlgebraElement::group_element(base, k, mask).map(|a| a.to_multilinear())
    }

    pub fn coeffs(&self) -> &[RingElement] {
        &self.coeffs
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        GroupAlgebraElement::from_multilinear(self)
            .add(&GroupAlgebraElement::from_multilinear(rhs))
            .map(|a| a.to_multilinear())
    }

    /// Monomial products reduce modulo x_i^2 = 1: exponent masks XOR.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.k != rhs.k || self.base != rhs.base {
            return Err(Error::ContextMismatch {
                left: format!("poly k={} over {}", self.k, self.base),
                right: format!("poly k={} over {}", rhs.k, rhs.base),
            });
        }
        let n = self.coeffs.len();
        let mut coeffs = vec![self.base.zero(); n];
        for (ma, ca) in self.coeffs.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (mb, cb) in rhs.coeffs.iter().enumerate() {
                if cb.is_zero() {
                    continue;
                }
                let m = ma ^ mb;
                coeffs[m] = coeffs[m].add_unchecked(&ca.mul_unchecked(cb));
            }
        }
        Ok(MultilinearPoly {
            base: self.base.clone(),
            k: self.k,
            coeffs,
        })
    }
}
