//! Sparse polynomials over GF(q), the ideals whose zeros are exactly the
//! extension matrices of a code, Buchberger's algorithm and enumeration of
//! the GF(q)-points of a Gröbner basis.
//!
//! The extension ideal for information vectors J and k×m unknowns X is
//! generated by
//!
//! ```text
//! ∏_{j=1..m} ((Σᵢ vᵢ Xᵢⱼ)^(q−1) − 1)      for v ∈ J
//! X₁₁² − X₁₁,   Xᵢⱼ^q − Xᵢⱼ (all other variables)
//! ```
//!
//! Since y^(q−1) = 1 holds exactly for the nonzero y ∈ GF(q), a point of the
//! variety is a matrix X with v·X ≠ 0 for all v ∈ J, with X₁₁ restricted to
//! {0, 1} to cut down scalar multiples. The field equations make the ideal
//! zero-dimensional and radical, so the basis is {1} exactly when no such X
//! exists. No homogenization is ever applied.

mod groebner;
mod monomial;
mod poly;
mod variety;

pub use groebner::{buchberger, GroebnerBasis, GroebnerBudget, GroebnerStats};
pub use monomial::{Monomial, MonomialOrder, MAX_VARIABLES};
pub use poly::{PolyRing, Polynomial};
pub use variety::variety;

use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Generators of a polynomial ideal together with their ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: PolyRing,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(ring: PolyRing, generators: Vec<Polynomial>) -> Self {
        Ideal { ring, generators }
    }

    pub fn ring(&self) -> &PolyRing {
        &self.ring
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    /// True when every generator vanishes at `point`.
    pub fn vanishes_at(&self, point: &[FieldElement]) -> bool {
        self.generators.iter().all(|g| self.ring.eval(g, point).is_zero())
    }
}

/// Index of the unknown Xᵢⱼ (row `i`, column `j`) among the k·m variables.
pub fn extension_variable(k: usize, i: usize, j: usize) -> usize {
    j * k + i
}

/// The ideal whose GF(q)-points are the k×m matrices X with `v·X ≠ 0` for
/// every `v` in `jd` (and X₁₁ ∈ {0, 1}).
pub fn build_extension_ideal(field: &FieldSpec, jd: &[Vec<FieldElement>], k: usize, m: usize) -> Result<Ideal> {
    if jd.is_empty() {
        return Err(Error::EmptyJd);
    }
    if let Some(bad) = jd.iter().find(|v| v.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, found: bad.len() });
    }
    let nvars = k * m;
    if nvars > MAX_VARIABLES {
        return Err(Error::ResourceLimit(format!("{nvars} unknowns exceed the {MAX_VARIABLES}-variable limit")));
    }
    let ring = PolyRing::new(field.clone(), nvars, MonomialOrder::DegRevLex);
    let q = field.order();
    let one = ring.one();

    let mut generators = Vec::with_capacity(jd.len() + nvars);
    for v in jd {
        let mut product = ring.one();
        for j in 0..m {
            let linear = v.iter().enumerate().fold(ring.zero(), |acc, (i, &vi)| {
                ring.add(&acc, &ring.scale(vi, &ring.var(extension_variable(k, i, j))))
            });
            let factor = ring.sub(&ring.pow(&linear, q - 1), &one);
            product = ring.mul(&product, &factor);
        }
        generators.push(product);
    }
    for var in 0..nvars {
        let exp = if var == 0 { 2 } else { q as u8 };
        generators.push(ring.sub(&ring.var_power(var, exp), &ring.var(var)));
    }
    Ok(Ideal::new(ring, generators))
}
