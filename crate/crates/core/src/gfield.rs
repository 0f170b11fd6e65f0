//! Arithmetic in GF(2^k) and in the quadratic tower F_{2^n} ⊂ F_{2^{2n}}.
//!
//! Elements are bit vectors of coordinates in the power basis of the
//! generator `x` (bit `i` is the coefficient of `x^i`).

use std::fmt;
use std::ops::{Add, Mul};

use thiserror::Error;

use crate::f2la::{BitMatrix, BitVector};

pub const MAX_DEGREE: u32 = 16;
pub const MAX_TOWER_N: u32 = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FieldError {
    #[error("extension degree {0} outside 1..={MAX_DEGREE}")]
    DegreeOutOfRange(u32),
    #[error("tower degree {0} outside 1..={MAX_TOWER_N}")]
    TowerOutOfRange(u32),
    #[error("polynomial {poly:#b} is not an irreducible of degree {k}")]
    NotIrreducible { poly: u32, k: u32 },
    #[error("element bits {bits:#b} do not fit in GF(2^{k})")]
    ElementOutOfRange { bits: u32, k: u32 },
    #[error("inverse of zero")]
    InverseOfZero,
    #[error("operands belong to different fields")]
    MixedFields,
    #[error("value {0:#b} does not lie in the subfield")]
    NotInSubfield(u32),
    #[error("tower construction failed: {0}")]
    Tower(String),
}

/// Degree of a polynomial over F₂ packed into an integer (low bit = constant term).
fn poly_degree(p: u64) -> Option<u32> {
    (p != 0).then(|| 63 - p.leading_zeros())
}

fn poly_rem(mut a: u64, b: u64) -> u64 {
    let db = poly_degree(b).expect("division by zero polynomial");
    while let Some(da) = poly_degree(a) {
        if da < db {
            break;
        }
        a ^= b << (da - db);
    }
    a
}

/// Irreducibility over F₂ by trial division with every polynomial of degree
/// at most half the degree.
pub fn is_irreducible(poly: u32) -> bool {
    let Some(d) = poly_degree(poly as u64) else { return false };
    if d == 0 {
        return false;
    }
    for q in 2u64..(1u64 << (d / 2 + 1)) {
        if poly_degree(q).is_some_and(|dq| dq >= 1 && dq <= d / 2) && poly_rem(poly as u64, q) == 0
        {
            return false;
        }
    }
    true
}

/// GF(2^k) with a fixed defining polynomial.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldSpec {
    k: u32,
    irr: u32,
}

impl FieldSpec {
    pub fn new(k: u32, irr: u32) -> Result<Self, FieldError> {
        if !(1..=MAX_DEGREE).contains(&k) {
            return Err(FieldError::DegreeOutOfRange(k));
        }
        if poly_degree(irr as u64) != Some(k) || !is_irreducible(irr) {
            return Err(FieldError::NotIrreducible { poly: irr, k });
        }
        Ok(FieldSpec { k, irr })
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn polynomial(&self) -> u32 {
        self.irr
    }

    /// Number of elements, `2^k`.
    pub fn size(&self) -> usize {
        1usize << self.k
    }

    /// Coefficients of the defining polynomial as a bit string, leading coefficient first
    /// (`"1011"` for `x³ + x + 1`).
    pub fn polynomial_string(&self) -> String {
        format!("{:b}", self.irr)
    }

    pub fn elem(&self, bits: u32) -> Result<FieldElement, FieldError> {
        if bits as usize >= self.size() {
            return Err(FieldError::ElementOutOfRange { bits, k: self.k });
        }
        Ok(FieldElement { field: *self, bits })
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: *self, bits: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: *self, bits: 1 }
    }

    /// The class of `x` (which is `0` when the polynomial is `x` itself).
    pub fn generator(&self) -> FieldElement {
        FieldElement { field: *self, bits: poly_rem(2, self.irr as u64) as u32 }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.size() as u32).map(|bits| FieldElement { field: *self, bits })
    }

    /// Product of raw coordinate vectors.
    #[inline]
    pub fn mul_bits(&self, a: u32, b: u32) -> u32 {
        let mut acc: u64 = 0;
        let mut a = a as u64;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
        }
        poly_rem(acc, self.irr as u64) as u32
    }

    pub fn pow_bits(&self, a: u32, mut e: u64) -> u32 {
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_bits(acc, base);
            }
            base = self.mul_bits(base, base);
            e >>= 1;
        }
        acc
    }
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF(2^{}; {})", self.k, self.polynomial_string())
    }
}

/// The lexicographically least irreducible polynomial of degree `k`, i.e. the
/// smallest such integer with the constant term in the low bit.
pub fn make_field(k: u32) -> Result<FieldSpec, FieldError> {
    if !(1..=MAX_DEGREE).contains(&k) {
        return Err(FieldError::DegreeOutOfRange(k));
    }
    let irr = ((1u32 << k)..(1u32 << (k + 1)))
        .find(|&p| is_irreducible(p))
        .expect("irreducible polynomials exist in every degree");
    FieldSpec::new(k, irr)
}

/// An element of a specific GF(2^k).
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: FieldSpec,
    bits: u32,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add(FieldElement),
    Mul(FieldElement),
    Inv,
    Pow(u64),
}

impl FieldElement {
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn is_zero(&self) -> bool {
        self.bits == 0
    }

    pub fn checked_add(self, rhs: FieldElement) -> Result<FieldElement, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::MixedFields);
        }
        Ok(FieldElement { field: self.field, bits: self.bits ^ rhs.bits })
    }

    pub fn checked_mul(self, rhs: FieldElement) -> Result<FieldElement, FieldError> {
        if self.field != rhs.field {
            return Err(FieldError::MixedFields);
        }
        Ok(FieldElement { field: self.field, bits: self.field.mul_bits(self.bits, rhs.bits) })
    }

    pub fn pow(self, e: u64) -> FieldElement {
        FieldElement { field: self.field, bits: self.field.pow_bits(self.bits, e) }
    }

    /// Inverse as `a^(2^k − 2)`.
    pub fn inv(self) -> Result<FieldElement, FieldError> {
        if self.is_zero() {
            return Err(FieldError::InverseOfZero);
        }
        Ok(self.pow((1u64 << self.field.k) - 2))
    }

    pub fn square(self) -> FieldElement {
        self * self
    }

    /// `self^(2^times)`.
    pub fn frobenius(self, times: u32) -> FieldElement {
        (0..times).fold(self, |x, _| x.square())
    }

    /// Multiplicative order of a nonzero element.
    pub fn order(self) -> Option<u64> {
        if self.is_zero() {
            return None;
        }
        let one = self.field.one();
        let mut x = self;
        let mut n = 1;
        while x != one {
            x = x * self;
            n += 1;
        }
        Some(n)
    }
}

/// Checked arithmetic entry point.
pub fn arith(a: FieldElement, op: FieldOp) -> Result<FieldElement, FieldError> {
    match op {
        FieldOp::Add(b) => a.checked_add(b),
        FieldOp::Mul(b) => a.checked_mul(b),
        FieldOp::Inv => a.inv(),
        FieldOp::Pow(e) => Ok(a.pow(e)),
    }
}

impl Add for FieldElement {
    type Output = FieldElement;
    fn add(self, rhs: FieldElement) -> FieldElement {
        self.checked_add(rhs).expect("mixed-field addition")
    }
}

impl Mul for FieldElement {
    type Output = FieldElement;
    fn mul(self, rhs: FieldElement) -> FieldElement {
        self.checked_mul(rhs).expect("mixed-field multiplication")
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.bits)
    }
}

/// F₂-coordinates of field elements as a matrix with one row per element.
fn coordinate_rank(elems: &[FieldElement]) -> usize {
    let Some(first) = elems.first() else { return 0 };
    let k = first.field().degree() as usize;
    let rows = elems
        .iter()
        .map(|e| BitVector::from_indices(k, (0..k).filter(|&i| e.bits() >> i & 1 == 1)))
        .collect();
    BitMatrix::from_rows(k, rows).expect("uniform width").rank()
}

/// The tower F_{2^n} ⊂ F_{2^{2n}} with its conjugation and the ρ/λ basis data.
#[derive(Clone, Debug)]
pub struct TowerSpec {
    n: u32,
    small: FieldSpec,
    big: FieldSpec,
    /// `embed[c]` is the image of subfield element `c`.
    embed: Vec<u32>,
    /// Inverse of `embed` on its image.
    restrict: Vec<Option<u32>>,
    rho: FieldElement,
    lambda: FieldElement,
}

pub fn build_tower(n: u32) -> Result<TowerSpec, FieldError> {
    build_tower_with(n, None)
}

/// Builds the tower, optionally overriding the defining polynomial of the big field.
pub fn build_tower_with(n: u32, big_poly: Option<u32>) -> Result<TowerSpec, FieldError> {
    if !(1..=MAX_TOWER_N).contains(&n) {
        return Err(FieldError::TowerOutOfRange(n));
    }
    let small = make_field(n)?;
    let big = match big_poly {
        Some(p) => FieldSpec::new(2 * n, p)?,
        None => make_field(2 * n)?,
    };

    // Smallest root of the subfield polynomial in the big field.
    let root = big
        .elements()
        .find(|&r| {
            let value = (0..=n).filter(|&i| small.polynomial() >> i & 1 == 1).fold(
                big.zero(),
                |acc, i| acc + r.pow(i as u64),
            );
            value.is_zero()
        })
        .ok_or_else(|| FieldError::Tower("subfield polynomial has no root".into()))?;
    let powers: Vec<FieldElement> = (0..n).map(|i| root.pow(i as u64)).collect();
    let embed: Vec<u32> = (0..small.size() as u32)
        .map(|c| {
            powers
                .iter()
                .enumerate()
                .filter(|(i, _)| c >> i & 1 == 1)
                .fold(big.zero(), |acc, (_, &p)| acc + p)
                .bits()
        })
        .collect();
    let mut restrict = vec![None; big.size()];
    for (c, &e) in embed.iter().enumerate() {
        if restrict[e as usize].replace(c as u32).is_some() {
            return Err(FieldError::Tower("subfield embedding is not injective".into()));
        }
    }

    let target = (1u64 << n) + 1;
    let rho = big
        .elements()
        .find(|x| x.order() == Some(target))
        .ok_or_else(|| FieldError::Tower(format!("no element of order {target}")))?;
    let conj_rho = rho.frobenius(n);
    let lambda = rho + conj_rho;

    let tower = TowerSpec { n, small, big, embed, restrict, rho, lambda };
    tower.verify()?;
    Ok(tower)
}

impl TowerSpec {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn small(&self) -> FieldSpec {
        self.small
    }

    pub fn big(&self) -> FieldSpec {
        self.big
    }

    pub fn rho(&self) -> FieldElement {
        self.rho
    }

    pub fn lambda(&self) -> FieldElement {
        self.lambda
    }

    pub fn embed(&self, c: FieldElement) -> FieldElement {
        assert_eq!(c.field(), self.small, "embed expects a subfield element");
        FieldElement { field: self.big, bits: self.embed[c.bits() as usize] }
    }

    pub fn in_subfield(&self, x: FieldElement) -> bool {
        self.restrict[x.bits() as usize].is_some()
    }

    /// Subfield coordinates of an element of the embedded image.
    pub fn to_subfield(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        if x.field() != self.big {
            return Err(FieldError::MixedFields);
        }
        self.restrict[x.bits() as usize]
            .map(|bits| FieldElement { field: self.small, bits })
            .ok_or(FieldError::NotInSubfield(x.bits()))
    }

    /// `x ↦ x^(2^n)`.
    pub fn conj(&self, x: FieldElement) -> FieldElement {
        assert_eq!(x.field(), self.big, "conj expects an element of the big field");
        x.frobenius(self.n)
    }

    pub fn trace_big(&self, x: FieldElement) -> FieldElement {
        x + self.conj(x)
    }

    pub fn norm_big(&self, x: FieldElement) -> FieldElement {
        x * self.conj(x)
    }

    pub fn trace(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        self.to_subfield(self.trace_big(x))
    }

    pub fn norm(&self, x: FieldElement) -> Result<FieldElement, FieldError> {
        self.to_subfield(self.norm_big(x))
    }

    /// Re-checks every structural claim about the tower.
    fn verify(&self) -> Result<(), FieldError> {
        let fail = |msg: &str| Err(FieldError::Tower(msg.to_string()));
        let big = self.big;
        // embed is a ring homomorphism
        for a in self.small.elements() {
            for b in self.small.elements() {
                if self.embed(a + b) != self.embed(a) + self.embed(b)
                    || self.embed(a * b) != self.embed(a) * self.embed(b)
                {
                    return fail("embedding is not a homomorphism");
                }
            }
        }
        if self.embed(self.small.one()) != big.one() {
            return fail("embedding does not preserve 1");
        }
        let conj_rho = self.conj(self.rho);
        if self.rho * conj_rho != big.one() {
            return fail("rho times its conjugate is not 1");
        }
        if self.rho * self.rho + self.lambda * self.rho + big.one() != big.zero() {
            return fail("rho is not a root of x^2 + lambda x + 1");
        }
        if !self.in_subfield(self.lambda) {
            return fail("lambda is not in the subfield");
        }
        let n = self.n as u64;
        let lambda_powers: Vec<FieldElement> = (0..n).map(|i| self.lambda.pow(i)).collect();
        if coordinate_rank(&lambda_powers) != self.n as usize {
            return fail("powers of lambda do not span the subfield");
        }
        let mut full = lambda_powers.clone();
        full.extend(lambda_powers.iter().map(|&l| l * self.rho));
        if coordinate_rank(&full) != 2 * self.n as usize {
            return fail("lambda/rho basis does not span the big field");
        }
        Ok(())
    }
}
