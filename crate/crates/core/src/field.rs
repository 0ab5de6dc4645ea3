//! Arithmetic in GF(q) for the small orders q ∈ {2, 3, 4, 5, 7, 8, 9}.
//!
//! Elements are encoded as integers `0..q`: the polynomial `Σ aᵢ αⁱ` (α a root
//! of the fixed modulus) maps to `Σ aᵢ pⁱ`. For prime q this is just the
//! residue mod p. The moduli are fixed so that files written by one run read
//! back identically in another:
//!
//! | q | modulus      |
//! |---|--------------|
//! | 4 | x² + x + 1   |
//! | 8 | x³ + x + 1   |
//! | 9 | x² + 1       |

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported field order.
pub const MAX_ORDER: usize = 9;

/// An element of GF(q), identified by its integer encoding.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
#[repr(transparent)]
pub struct FieldElement(u8);

impl FieldElement {
    pub const ZERO: FieldElement = FieldElement(0);
    pub const ONE: FieldElement = FieldElement(1);

    pub const fn new(index: u8) -> Self {
        FieldElement(index)
    }

    pub const fn index(self) -> u8 {
        self.0
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }

    #[inline]
    fn ix(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// The binary operations accepted by [`FieldSpec::arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    /// `a` raised to the exponent given by the index of `b`.
    Pow,
}

/// A finite field of order q = pᵉ ≤ 9 with precomputed operation tables.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldSpec {
    q: u8,
    p: u8,
    e: u8,
    modulus: Vec<u8>,
    add: [[u8; MAX_ORDER]; MAX_ORDER],
    mul: [[u8; MAX_ORDER]; MAX_ORDER],
    neg: [u8; MAX_ORDER],
    inv: [u8; MAX_ORDER],
}

impl fmt::Debug for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.q)
    }
}

/// Characteristic, degree and modulus (low-order coefficient first) for each
/// supported order.
fn parameters(q: u32) -> Option<(u8, u8, &'static [u8])> {
    match q {
        2 => Some((2, 1, &[])),
        3 => Some((3, 1, &[])),
        5 => Some((5, 1, &[])),
        7 => Some((7, 1, &[])),
        4 => Some((2, 2, &[1, 1, 1])),
        8 => Some((2, 3, &[1, 1, 0, 1])),
        9 => Some((3, 2, &[1, 0, 1])),
        _ => None,
    }
}

fn digits(mut x: usize, p: usize, e: usize) -> Vec<usize> {
    let mut out = vec![0; e];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[usize], p: usize) -> usize {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Product of two coefficient vectors reduced modulo the monic `modulus`.
fn poly_mul_mod(a: &[usize], b: &[usize], modulus: &[u8], p: usize) -> Vec<usize> {
    let e = a.len();
    let mut prod = vec![0usize; 2 * e];
    for (i, &ai) in a.iter().enumerate() {
        for (j, &bj) in b.iter().enumerate() {
            prod[i + j] = (prod[i + j] + ai * bj) % p;
        }
    }
    for deg in (e..prod.len()).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        // x^deg = x^(deg-e) * x^e and x^e ≡ -(modulus without its leading term)
        for (t, &m) in modulus[..e].iter().enumerate() {
            let idx = deg - e + t;
            prod[idx] = (prod[idx] + (p - (c * m as usize) % p)) % p;
        }
        prod[deg] = 0;
    }
    prod.truncate(e);
    prod
}

impl FieldSpec {
    /// Builds GF(q) for q ∈ {2, 3, 4, 5, 7, 8, 9}.
    pub fn new(q: u32) -> Result<Self> {
        let (p, e, modulus) = parameters(q).ok_or(Error::NotPrimePower(q))?;
        let qs = q as usize;
        let (pu, eu) = (p as usize, e as usize);
        let mut add = [[0u8; MAX_ORDER]; MAX_ORDER];
        let mut mul = [[0u8; MAX_ORDER]; MAX_ORDER];
        let mut neg = [0u8; MAX_ORDER];
        let mut inv = [0u8; MAX_ORDER];

        for a in 0..qs {
            let da = digits(a, pu, eu);
            let na: Vec<usize> = da.iter().map(|&x| (pu - x) % pu).collect();
            neg[a] = undigits(&na, pu) as u8;
            for b in 0..qs {
                let db = digits(b, pu, eu);
                let sum: Vec<usize> = da.iter().zip(&db).map(|(x, y)| (x + y) % pu).collect();
                add[a][b] = undigits(&sum, pu) as u8;
                let prod = if eu == 1 {
                    vec![(a * b) % pu]
                } else {
                    poly_mul_mod(&da, &db, modulus, pu)
                };
                mul[a][b] = undigits(&prod, pu) as u8;
            }
        }
        for a in 1..qs {
            inv[a] = (1..qs)
                .find(|&b| mul[a][b] == 1)
                .expect("modulus is irreducible, so every nonzero element is invertible")
                as u8;
        }

        Ok(FieldSpec {
            q: q as u8,
            p,
            e,
            modulus: modulus.to_vec(),
            add,
            mul,
            neg,
            inv,
        })
    }

    pub fn order(&self) -> u32 {
        self.q as u32
    }

    pub fn characteristic(&self) -> u32 {
        self.p as u32
    }

    pub fn degree(&self) -> u32 {
        self.e as u32
    }

    /// Coefficients of the defining polynomial, lowest degree first; empty for prime fields.
    pub fn modulus(&self) -> &[u8] {
        &self.modulus
    }

    /// Checked conversion from an integer symbol.
    pub fn element(&self, symbol: u32) -> Result<FieldElement> {
        if symbol < self.q as u32 {
            Ok(FieldElement(symbol as u8))
        } else {
            Err(Error::SymbolOutOfRange { symbol, q: self.q as u32 })
        }
    }

    /// All elements in index order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (0..self.q).map(FieldElement)
    }

    /// Nonzero elements in index order.
    pub fn units(&self) -> impl Iterator<Item = FieldElement> + Clone {
        (1..self.q).map(FieldElement)
    }

    #[inline]
    pub fn add(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.add[a.ix()][b.ix()])
    }

    #[inline]
    pub fn neg(&self, a: FieldElement) -> FieldElement {
        FieldElement(self.neg[a.ix()])
    }

    #[inline]
    pub fn sub(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: FieldElement, b: FieldElement) -> FieldElement {
        FieldElement(self.mul[a.ix()][b.ix()])
    }

    pub fn inv(&self, a: FieldElement) -> Result<FieldElement> {
        if a.is_zero() {
            Err(Error::DivisionByZero)
        } else {
            Ok(FieldElement(self.inv[a.ix()]))
        }
    }

    pub fn div(&self, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// Square-and-multiply exponentiation; `pow(0, 0) = 1`.
    pub fn pow(&self, a: FieldElement, mut exp: u64) -> FieldElement {
        let mut base = a;
        let mut acc = FieldElement::ONE;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            exp >>= 1;
        }
        acc
    }

    /// Uniform entry point over the binary operations.
    pub fn arith(&self, op: ArithOp, a: FieldElement, b: FieldElement) -> Result<FieldElement> {
        match op {
            ArithOp::Add => Ok(self.add(a, b)),
            ArithOp::Sub => Ok(self.sub(a, b)),
            ArithOp::Mul => Ok(self.mul(a, b)),
            ArithOp::Div => self.div(a, b),
            ArithOp::Pow => Ok(self.pow(a, b.index() as u64)),
        }
    }

    /// `a + λ·b` in place.
    #[inline]
    pub fn axpy(&self, acc: &mut [FieldElement], lambda: FieldElement, b: &[FieldElement]) {
        if lambda.is_zero() {
            return;
        }
        for (x, &y) in acc.iter_mut().zip(b) {
            *x = self.add(*x, self.mul(lambda, y));
        }
    }

    pub fn scale(&self, lambda: FieldElement, v: &[FieldElement]) -> Vec<FieldElement> {
        v.iter().map(|&x| self.mul(lambda, x)).collect()
    }

    pub fn dot(&self, a: &[FieldElement], b: &[FieldElement]) -> FieldElement {
        a.iter()
            .zip(b)
            .fold(FieldElement::ZERO, |acc, (&x, &y)| self.add(acc, self.mul(x, y)))
    }

    /// Scales `v` so that its first nonzero entry is one.
    pub fn normalize_vector(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        let lead = v.iter().copied().find(|x| !x.is_zero()).ok_or(Error::ZeroVector)?;
        let lambda = self.inv(lead)?;
        Ok(self.scale(lambda, v))
    }

    /// In-place variant of [`normalize_vector`](Self::normalize_vector);
    /// returns false (leaving `v` untouched) for the zero vector.
    pub fn normalize_in_place(&self, v: &mut [FieldElement]) -> bool {
        match v.iter().copied().find(|x| !x.is_zero()) {
            None => false,
            Some(lead) => {
                let lambda = FieldElement(self.inv[lead.ix()]);
                for x in v.iter_mut() {
                    *x = self.mul(lambda, *x);
                }
                true
            }
        }
    }

    pub fn is_normalized(&self, v: &[FieldElement]) -> bool {
        v.iter().copied().find(|x| !x.is_zero()) == Some(FieldElement::ONE)
    }
}

/// Hamming weight of a vector.
#[inline]
pub fn weight(v: &[FieldElement]) -> usize {
    v.iter().filter(|x| !x.is_zero()).count()
}
