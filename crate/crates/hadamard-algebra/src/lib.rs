//! Computer algebra for Hadamard matrices over commutative rings of
//! characteristic 2.
//!
//! A 2^k x 2^k matrix whose (i, j) entry depends only on i XOR j is
//! determined by its first row, and the set of all of them forms a
//! commutative ring with striking structure: a unique eigenvalue map and
//! the determinant are both ring homomorphisms onto the base ring, the
//! ring is isomorphic to the group algebra of (F_2^k, xor) and to a
//! multilinear polynomial quotient, and its augmentation ideal is
//! nilpotent of degree exactly k + 1.
//!
//! On top of that sit block matrices with Hadamard blocks: for q the
//! characteristic polynomial of the blockwise-eigenvalue projection,
//! q(M)^2 vanishes identically. The [`block`] module machine-checks that
//! identity and its companions on random instances; [`analysis`] applies
//! it to Cauchy-built cipher linear layers, measuring the
//! power-dependency degree that bounds invariant-subspace dimensions
//! from below.
//!
//! Everything is exact arithmetic; no floating point anywhere. All values
//! are immutable and all operations pure, so sharing across threads is
//! unrestricted.

pub mod analysis;
pub mod block;
pub mod campaign;
pub mod error;
pub mod group_algebra;
pub mod hadamard;
pub mod json;
pub mod matrix;
pub mod poly;
pub mod ring;
pub mod sample;

pub use analysis::{
    analyze, block_hadamard_detect, minimal_poly_field, power_dependency_degree, CauchySpec,
    InvariantReport,
};
pub use block::{
    det_diagrams_commute, kernel_nilpotency, verify_charpoly_square, BlockMatrix,
    CharpolySquareReport, KernelNilpotencyReport,
};
pub use error::{Error, Result};
pub use group_algebra::{ideal_product, GroupAlgebraElement, MultilinearPoly};
pub use hadamard::HadamardMatrix;
pub use matrix::{cayley_hamilton_check, frobenius_eval_check, RingMatrix};
pub use poly::RingPolynomial;
pub use ring::{RingContext, RingElement};
pub use sample::SeedStream;
