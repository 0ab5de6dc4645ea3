//! One binary column: the conditions `v·x ≠ 0` become `v·x = 1`, an affine
//! system over GF(2).

use std::collections::BTreeSet;

use super::{ExtensionMatrix, ExtensionSolutionSet};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};
use crate::linalg::row_reduce;

/// Largest number of free variables whose solution coset is listed.
const MAX_FREE: usize = 28;

/// Rows `[v | 1]` of `jd` that are linearly independent of the rows before
/// them.
fn spanning_subset(field: &FieldSpec, jd: &[Vec<FieldElement>]) -> Vec<Vec<FieldElement>> {
    let mut basis: Vec<(usize, Vec<FieldElement>)> = Vec::new();
    let mut chosen = Vec::new();
    for v in jd {
        let mut row = v.clone();
        row.push(FieldElement::ONE);
        let mut reduced = row.clone();
        for (pivot, b) in &basis {
            if !reduced[*pivot].is_zero() {
                let factor = field.neg(reduced[*pivot]);
                field.axpy(&mut reduced, factor, b);
            }
        }
        if let Some(pivot) = reduced.iter().position(|x| !x.is_zero()) {
            basis.push((pivot, reduced));
            chosen.push(row);
        }
    }
    chosen
}

/// All x ∈ GF(2)ᵏ with `v·x = 1` for every `v` in `jd`.
pub fn binary_linear_extensions(field: &FieldSpec, jd: &[Vec<FieldElement>], k: usize) -> Result<ExtensionSolutionSet> {
    if field.order() != 2 {
        return Err(Error::WrongField(field.order()));
    }
    if jd.is_empty() {
        return Err(Error::EmptyJd);
    }
    if let Some(bad) = jd.iter().find(|v| v.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, found: bad.len() });
    }
    let empty = ExtensionSolutionSet { m: 1, solutions: BTreeSet::new(), exhausted: true };

    let ech = row_reduce(field, spanning_subset(field, jd), 0..=k);
    if ech.pivots.contains(&k) {
        return Ok(empty);
    }
    let free: Vec<usize> = (0..k).filter(|c| !ech.pivots.contains(c)).collect();
    if free.len() > MAX_FREE {
        return Err(Error::ResourceLimit(format!("{} free variables in the linear system", free.len())));
    }

    let mut solutions = BTreeSet::new();
    for mask in 0u64..1 << free.len() {
        let mut x = vec![FieldElement::ZERO; k];
        for (b, &f) in free.iter().enumerate() {
            if mask >> b & 1 == 1 {
                x[f] = FieldElement::ONE;
            }
        }
        for (row, &p) in ech.rows.iter().zip(&ech.pivots) {
            let rest = free.iter().fold(row[k], |acc, &f| field.sub(acc, field.mul(row[f], x[f])));
            x[p] = rest;
        }
        solutions.insert(ExtensionMatrix { k, columns: vec![x] });
    }
    Ok(ExtensionSolutionSet { solutions, ..empty })
}
