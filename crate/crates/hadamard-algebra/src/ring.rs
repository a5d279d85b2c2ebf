//! Finite commutative rings of characteristic 2 and their elements.
//!
//! Three kinds of context are supported: binary fields GF(2^n) with an
//! irreducible modulus, quotient rings F2[u]/(f) with an arbitrary modulus
//! (reducible moduli yield nilpotents and zero divisors), and Hadamard
//! rings H_k(R) whose elements are 2^k x 2^k Hadamard matrices over a base
//! context. Hadamard rings are first-class contexts, so every generic
//! matrix and polynomial routine works over them unchanged.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::hadamard::HadamardMatrix;
use crate::sample::SeedStream;

/// Bit-packed polynomial arithmetic over F2[u]. Bit i is the coefficient
/// of u^i; moduli are limited to degree 63 so elements fit in a u64.
pub(crate) mod f2x {
    /// Degree of a nonzero bit-packed polynomial.
    pub fn degree(p: u64) -> u32 {
        debug_assert!(p != 0);
        63 - p.leading_zeros()
    }

    /// Carry-less (XOR) product of two bit-packed polynomials.
    pub fn clmul(a: u64, b: u64) -> u128 {
        let mut acc = 0u128;
        let wide = a as u128;
        let mut rest = b;
        while rest != 0 {
            let i = rest.trailing_zeros();
            acc ^= wide << i;
            rest &= rest - 1;
        }
        acc
    }

    /// Remainder of `p` modulo a nonzero `modulus`.
    pub fn reduce(mut p: u128, modulus: u64) -> u64 {
        let d = degree(modulus);
        loop {
            if p == 0 {
                return 0;
            }
            let top = 127 - p.leading_zeros();
            if top < d {
                return p as u64;
            }
            p ^= (modulus as u128) << (top - d);
        }
    }

    pub fn mulmod(a: u64, b: u64, modulus: u64) -> u64 {
        reduce(clmul(a, b), modulus)
    }

    /// Euclidean division a = q*b + r over F2[u]; `b` must be nonzero.
    pub fn div_rem(a: u64, b: u64) -> (u64, u64) {
        debug_assert!(b != 0);
        let db = degree(b);
        let mut q = 0u64;
        let mut r = a;
        while r != 0 && degree(r) >= db {
            let shift = degree(r) - db;
            q ^= 1u64 << shift;
            r ^= b << shift;
        }
        (q, r)
    }

    pub fn gcd(mut a: u64, mut b: u64) -> u64 {
        while b != 0 {
            let (_, r) = div_rem(a, b);
            a = b;
            b = r;
        }
        a
    }

    /// Inverse of `a` modulo `modulus` via the extended Euclidean
    /// algorithm; `None` when gcd(a, modulus) != 1.
    pub fn invmod(a: u64, modulus: u64) -> Option<u64> {
        if a == 0 {
            return None;
        }
        let (mut r_prev, mut r_cur) = (modulus, a);
        let (mut t_prev, mut t_cur) = (0u64, 1u64);
        while r_cur != 0 {
            let (q, r) = div_rem(r_prev, r_cur);
            r_prev = r_cur;
            r_cur = r;
            let qt = clmul(q, t_cur);
            debug_assert_eq!(qt >> 64, 0);
            let t_next = t_prev ^ qt as u64;
            t_prev = t_cur;
            t_cur = t_next;
        }
        if r_prev == 1 {
            Some(t_prev)
        } else {
            None
        }
    }

    /// Irreducibility over F2: x^(2^n) = x mod p, and for every prime
    /// divisor d of n, gcd(x^(2^(n/d)) + x, p) = 1.
    pub fn is_irreducible(p: u64) -> bool {
        if p < 2 {
            return false;
        }
        let n = degree(p);
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let frob = |steps: u32| -> u64 {
            let mut t = 2u64; // the polynomial u
            for _ in 0..steps {
                t = mulmod(t, t, p);
            }
            t
        };
        if frob(n) != 2 {
            return false;
        }
        for d in prime_divisors(n) {
            if gcd(frob(n / d) ^ 2, p) != 1 {
                return false;
            }
        }
        true
    }

    fn prime_divisors(mut n: u32) -> Vec<u32> {
        let mut out = Vec::new();
        let mut d = 2;
        while d * d <= n {
            if n.is_multiple_of(d) {
                out.push(d);
                while n.is_multiple_of(d) {
                    n /= d;
                }
            }
            d += 1;
        }
        if n > 1 {
            out.push(n);
        }
        out
    }
}

/// Default irreducible moduli for GF(2^n), n = 1..=16. The degree-8 entry
/// is the AES polynomial. Each entry is validated at context construction.
pub const DEFAULT_MODULI: [(u32, u64); 16] = [
    (1, 0x3),
    (2, 0x7),
    (3, 0xB),
    (4, 0x13),
    (5, 0x25),
    (6, 0x43),
    (7, 0x83),
    (8, 0x11B),
    (9, 0x203),
    (10, 0x409),
    (11, 0x805),
    (12, 0x1009),
    (13, 0x201B),
    (14, 0x402B),
    (15, 0x8003),
    (16, 0x1002B),
];

/// Default irreducible modulus for GF(2^n) when the caller does not
/// supply one.
pub fn default_modulus(n: u32) -> Option<u64> {
    DEFAULT_MODULI
        .iter()
        .find(|(deg, _)| *deg == n)
        .map(|(_, m)| *m)
}

const MAX_LEVEL: u32 = 16;

#[derive(Debug)]
enum ContextInner {
    BinaryField { n: u32, modulus: u64 },
    Quotient { modulus: u64, degree: u32 },
    Hadamard { base: RingContext, k: u32 },
}

/// A finite commutative ring of characteristic 2. Cheap to clone and
/// immutable after construction; equality is structural, so two contexts
/// built from the same spec are the same ring.
#[derive(Clone, Debug)]
pub struct RingContext(Arc<ContextInner>);

impl PartialEq for RingContext {
    fn eq(&self, other: &Self) -> bool {
        if Arc::ptr_eq(&self.0, &other.0) {
            return true;
        }
        match (&*self.0, &*other.0) {
            (
                ContextInner::BinaryField { n: a, modulus: am },
                ContextInner::BinaryField { n: b, modulus: bm },
            ) => a == b && am == bm,
            (
                ContextInner::Quotient { modulus: am, .. },
                ContextInner::Quotient { modulus: bm, .. },
            ) => am == bm,
            (
                ContextInner::Hadamard { base: ab, k: ak },
                ContextInner::Hadamard { base: bb, k: bk },
            ) => ak == bk && ab == bb,
            _ => false,
        }
    }
}

impl Eq for RingContext {}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.spec_string())
    }
}

impl RingContext {
    /// GF(2^n) with an explicit irreducible modulus of degree exactly n.
    pub fn binary_field(n: u32, modulus: u64) -> Result<Self> {
        if n == 0 || n > 63 {
            return Err(Error::Spec(format!(
                "binary field degree must be in 1..=63, got {n}"
            )));
        }
        if modulus >> n != 1 {
            return Err(Error::Spec(format!(
                "modulus {modulus:#x} does not have degree {n}"
            )));
        }
        if !f2x::is_irreducible(modulus) {
            return Err(Error::ReducibleModulus { modulus });
        }
        let ctx = RingContext(Arc::new(ContextInner::BinaryField { n, modulus }));
        ctx.verify_characteristic_two()?;
        Ok(ctx)
    }

    /// GF(2^n) with the default modulus table (n = 1..=16).
    pub fn gf(n: u32) -> Result<Self> {
        let modulus = default_modulus(n)
            .ok_or_else(|| Error::Spec(format!("no default modulus for GF(2^{n}); supply one")))?;
        Self::binary_field(n, modulus)
    }

    /// F2[u]/(f) for an arbitrary modulus f of degree >= 1. A reducible
    /// modulus yields a ring with zero divisors, which is the point.
    pub fn quotient(modulus: u64) -> Result<Self> {
        if modulus < 2 {
            return Err(Error::ModulusDegree { modulus });
        }
        let degree = f2x::degree(modulus);
        let ctx = RingContext(Arc::new(ContextInner::Quotient { modulus, degree }));
        ctx.verify_characteristic_two()?;
        Ok(ctx)
    }

    /// The Hadamard ring H_k(base) of 2^k x 2^k Hadamard matrices.
    pub fn hadamard(base: RingContext, k: u32) -> Result<Self> {
        if k > MAX_LEVEL {
            return Err(Error::Spec(format!(
                "hadamard level must be at most {MAX_LEVEL}, got {k}"
            )));
        }
        base.verify_characteristic_two()?;
        Ok(RingContext(Arc::new(ContextInner::Hadamard { base, k })))
    }

    fn verify_characteristic_two(&self) -> Result<()> {
        let one = self.one();
        if one.add_unchecked(&one).is_zero() {
            Ok(())
        } else {
            Err(Error::NotCharacteristicTwo)
        }
    }

    /// Parse the spec syntax `gf2:<n>:<modulus>`, `quot:<modulus>`,
    /// `had:<base-spec>:<k>`. Moduli accept 0x/0b prefixes and default to
    /// hex; `gf2:<n>` alone selects the default modulus.
    pub fn parse(spec: &str) -> Result<Self> {
        if let Some(rest) = spec.strip_prefix("had:") {
            let (base, k) = rest
                .rsplit_once(':')
                .ok_or_else(|| Error::Spec(format!("malformed hadamard spec {spec:?}")))?;
            let k: u32 = k
                .parse()
                .map_err(|_| Error::Spec(format!("bad hadamard level in {spec:?}")))?;
            return Self::hadamard(Self::parse(base)?, k);
        }
        if let Some(rest) = spec.strip_prefix("gf2:") {
            return match rest.split_once(':') {
                Some((n, modulus)) => {
                    let n = parse_u32(n, spec)?;
                    Self::binary_field(n, parse_poly_literal(modulus)?)
                }
                None => Self::gf(parse_u32(rest, spec)?),
            };
        }
        if let Some(rest) = spec.strip_prefix("quot:") {
            return Self::quotient(parse_poly_literal(rest)?);
        }
        Err(Error::Spec(format!("unknown ring kind in {spec:?}")))
    }

    /// Canonical spec string; `parse` round-trips it.
    pub fn spec_string(&self) -> String {
        match &*self.0 {
            ContextInner::BinaryField { n, modulus } => format!("gf2:{n}:{modulus:#x}"),
            ContextInner::Quotient { modulus, .. } => format!("quot:{modulus:#x}"),
            ContextInner::Hadamard { base, k } => format!("had:{}:{k}", base.spec_string()),
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(&*self.0, ContextInner::BinaryField { .. })
    }

    /// Width in bits of packed representatives, for bit-packed contexts.
    pub fn bit_degree(&self) -> Option<u32> {
        match &*self.0 {
            ContextInner::BinaryField { n, .. } => Some(*n),
            ContextInner::Quotient { degree, .. } => Some(*degree),
            ContextInner::Hadamard { .. } => None,
        }
    }

    pub fn modulus(&self) -> Option<u64> {
        match &*self.0 {
            ContextInner::BinaryField { modulus, .. } | ContextInner::Quotient { modulus, .. } => {
                Some(*modulus)
            }
            ContextInner::Hadamard { .. } => None,
        }
    }

    /// Base context and level when this is a Hadamard ring.
    pub fn as_hadamard(&self) -> Option<(&RingContext, u32)> {
        match &*self.0 {
            ContextInner::Hadamard { base, k } => Some((base, *k)),
            _ => None,
        }
    }

    pub fn zero(&self) -> RingElement {
        match &*self.0 {
            ContextInner::BinaryField { .. } | ContextInner::Quotient { .. } => RingElement {
                ctx: self.clone(),
                repr: Repr::Bits(0),
            },
            ContextInner::Hadamard { base, k } => RingElement {
                ctx: self.clone(),
                repr: Repr::Had(Box::new(HadamardMatrix::zero(base.clone(), *k))),
            },
        }
    }

    pub fn one(&self) -> RingElement {
        match &*self.0 {
            ContextInner::BinaryField { .. } | ContextInner::Quotient { .. } => RingElement {
                ctx: self.clone(),
                repr: Repr::Bits(1),
            },
            ContextInner::Hadamard { base, k } => RingElement {
                ctx: self.clone(),
                repr: Repr::Had(Box::new(HadamardMatrix::identity(base.clone(), *k))),
            },
        }
    }

    /// Element from a fully reduced bit-packed representative.
    pub fn element(&self, bits: u64) -> Result<RingElement> {
        match self.bit_degree() {
            Some(degree) => {
                if degree < 64 && bits >> degree != 0 {
                    return Err(Error::ElementRange { bits, degree });
                }
                Ok(RingElement {
                    ctx: self.clone(),
                    repr: Repr::Bits(bits),
                })
            }
            None => Err(Error::Spec(
                "hadamard contexts take matrix elements, not bit patterns".into(),
            )),
        }
    }

    /// Element from a lowercase hex representative (0x prefix optional).
    pub fn element_from_hex(&self, s: &str) -> Result<RingElement> {
        let digits = s.strip_prefix("0x").unwrap_or(s);
        let bits = u64::from_str_radix(digits, 16)
            .map_err(|_| Error::Json(format!("bad element hex {s:?}")))?;
        self.element(bits)
    }

    /// Wrap a Hadamard matrix as an element of this Hadamard ring.
    pub fn wrap(&self, h: HadamardMatrix) -> Result<RingElement> {
        match self.as_hadamard() {
            Some((base, k)) if *base == *h.base() && k == h.k() => Ok(RingElement {
                ctx: self.clone(),
                repr: Repr::Had(Box::new(h)),
            }),
            _ => Err(Error::ContextMismatch {
                left: self.spec_string(),
                right: format!("had:{}:{}", h.base().spec_string(), h.k()),
            }),
        }
    }

    /// Embed a scalar of the base ring into this context. Identity on the
    /// same context; into a Hadamard ring the scalar lands on the
    /// diagonal, recursively for nested Hadamard rings.
    pub fn embed_scalar(&self, c: &RingElement) -> Result<RingElement> {
        if *c.context() == *self {
            return Ok(c.clone());
        }
        if let Some((base, k)) = self.as_hadamard() {
            let inner = base.embed_scalar(c)?;
            let h = HadamardMatrix::scalar(base.clone(), k, &inner)?;
            return self.wrap(h);
        }
        Err(Error::ContextMismatch {
            left: c.context().spec_string(),
            right: self.spec_string(),
        })
    }

    /// Uniform element, deterministic in the seed stream position.
    pub fn sample(&self, rng: &mut SeedStream) -> RingElement {
        match &*self.0 {
            ContextInner::BinaryField { n, .. } => RingElement {
                ctx: self.clone(),
                repr: Repr::Bits(rng.bits(*n)),
            },
            ContextInner::Quotient { degree, .. } => RingElement {
                ctx: self.clone(),
                repr: Repr::Bits(rng.bits(*degree)),
            },
            ContextInner::Hadamard { base, k } => RingElement {
                ctx: self.clone(),
                repr: Repr::Had(Box::new(HadamardMatrix::random(base, *k, rng))),
            },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Repr {
    Bits(u64),
    Had(Box<HadamardMatrix>),
}

/// An immutable element of one [`RingContext`]. All arithmetic is pure;
/// binary operations check that both operands share a context.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingElement {
    ctx: RingContext,
    repr: Repr,
}

impl RingElement {
    pub fn context(&self) -> &RingContext {
        &self.ctx
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

    /// a + b, which in characteristic 2 is also a - b.
    pub fn add(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        Ok(self.add_unchecked(rhs))
    }

    pub(crate) fn add_unchecked(&self, rhs: &Self) -> Self {
        match (&self.repr, &rhs.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => RingElement {
                ctx: self.ctx.clone(),
                repr: Repr::Bits(a ^ b),
            },
            (Repr::Had(a), Repr::Had(b)) => RingElement {
                ctx: self.ctx.clone(),
                repr: Repr::Had(Box::new(a.add_unchecked(b))),
            },
            _ => unreachable!("same context implies same representation"),
        }
    }

    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        self.ensure_same(rhs)?;
        Ok(self.mul_unchecked(rhs))
    }

    pub(crate) fn mul_unchecked(&self, rhs: &Self) -> Self {
        match (&self.repr, &rhs.repr) {
            (Repr::Bits(a), Repr::Bits(b)) => {
                let modulus = self.ctx.modulus().expect("bits context has a modulus");
                RingElement {
                    ctx: self.ctx.clone(),
                    repr: Repr::Bits(f2x::mulmod(*a, *b, modulus)),
                }
            }
            (Repr::Had(a), Repr::Had(b)) => RingElement {
                ctx: self.ctx.clone(),
                repr: Repr::Had(Box::new(a.mul_unchecked(b))),
            },
            _ => unreachable!("same context implies same representation"),
        }
    }

    pub fn square(&self) -> Self {
        self.mul_unchecked(self)
    }

    pub fn pow(&self, mut exp: u64) -> Self {
        let mut acc = self.ctx.one();
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            base = base.square();
            exp >>= 1;
        }
        acc
    }

    /// Multiplicative inverse. For bit-packed contexts this is the
    /// extended Euclidean algorithm; a Hadamard element H is invertible
    /// exactly when its eigenvalue is, with H^-1 = eigenvalue^-2 * H by
    /// the square identity H^2 = eigenvalue^2 * I.
    pub fn inverse(&self) -> Result<Self> {
        match &self.repr {
            Repr::Bits(a) => {
                let modulus = self.ctx.modulus().expect("bits context has a modulus");
                let inv = f2x::invmod(*a, modulus).ok_or(Error::NotInvertible)?;
                Ok(RingElement {
                    ctx: self.ctx.clone(),
                    repr: Repr::Bits(inv),
                })
            }
            Repr::Had(h) => {
                let lam_inv = h.eigenvalue().inverse()?;
                let scaled = h.scale_unchecked(&lam_inv.square());
                Ok(RingElement {
                    ctx: self.ctx.clone(),
                    repr: Repr::Had(Box::new(scaled)),
                })
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.repr {
            Repr::Bits(a) => *a == 0,
            Repr::Had(h) => h.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == self.ctx.one()
    }

    /// Bit-packed representative for binary-field and quotient contexts.
    pub fn bits(&self) -> Option<u64> {
        match &self.repr {
            Repr::Bits(a) => Some(*a),
            Repr::Had(_) => None,
        }
    }

    pub fn as_hadamard(&self) -> Option<&HadamardMatrix> {
        match &self.repr {
            Repr::Had(h) => Some(h),
            Repr::Bits(_) => None,
        }
    }

    /// Lowercase hex of the packed representative (bit-packed contexts).
    pub fn to_hex(&self) -> Option<String> {
        self.bits().map(|b| format!("{b:x}"))
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.repr {
            Repr::Bits(a) => write!(f, "{a:x}"),
            Repr::Had(h) => {
                write!(f, "had[")?;
                for (i, e) in h.row().iter().enumerate() {
                    if i > 0 {
                        write!(f, ",")?;
                    }
                    write!(f, "{e}")?;
                }
                write!(f, "]")
            }
        }
    }
}

fn parse_u32(s: &str, spec: &str) -> Result<u32> {
    s.parse()
        .map_err(|_| Error::Spec(format!("bad integer {s:?} in {spec:?}")))
}

/// Modulus literals: 0x hex, 0b binary, bare digits are hex.
fn parse_poly_literal(s: &str) -> Result<u64> {
    let (digits, radix) = if let Some(h) = s.strip_prefix("0x").or_else(|| s.strip_prefix("0X")) {
        (h, 16)
    } else if let Some(b) = s.strip_prefix("0b").or_else(|| s.strip_prefix("0B")) {
        (b, 2)
    } else {
        (s, 16)
    };
    u64::from_str_radix(digits, radix)
        .map_err(|_| Error::Spec(format!("bad modulus literal {s:?}")))
}
