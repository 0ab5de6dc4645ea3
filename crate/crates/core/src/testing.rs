use crate::field::FieldElement;

pub use crate::catalog::{hamming74, repetition, ternary_322, tetracode};

pub fn fe_rows(rows: &[&[u8]]) -> Vec<Vec<FieldElement>> {
    rows.iter().map(|r| r.iter().map(|&x| FieldElement::new(x)).collect()).collect()
}

use crate::code::GeneratorMatrix;

/// Every information vector in GF(q)ᵏ, in lexicographic order.
pub fn all_vectors(q: u32, k: usize) -> Vec<Vec<FieldElement>> {
    let q = q as usize;
    (0..q.pow(k as u32))
        .map(|mut idx| {
            let mut v = vec![FieldElement::ZERO; k];
            for x in v.iter_mut().rev() {
                *x = FieldElement::new((idx % q) as u8);
                idx /= q;
            }
            v
        })
        .collect()
}

/// Minimum distance by encoding all qᵏ − 1 nonzero information vectors.
pub fn brute_min_distance(g: &GeneratorMatrix) -> usize {
    all_vectors(g.field().order(), g.k())
        .iter()
        .skip(1)
        .map(|v| g.encode(v).unwrap().weight)
        .min()
        .unwrap()
}
