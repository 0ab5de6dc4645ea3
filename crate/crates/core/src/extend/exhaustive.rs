//! Testing every canonical k×m matrix.
//!
//! Canonical matrices are the multisets of m columns drawn from the zero
//! column and the normalized nonzero columns, except the all-zero matrix.
//! Listing the candidate columns in lexicographic order (zero first), the
//! multisets correspond to nondecreasing index tuples, which are visited in
//! lexicographic order.

use std::collections::BTreeSet;

use rayon::prelude::*;

use super::{ExtensionMatrix, ExtensionSolutionSet, SearchMode};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// Result of [`exhaustive_extensions`].
#[derive(Clone, Debug)]
pub struct ExhaustiveOutcome {
    pub solutions: ExtensionSolutionSet,
    /// Candidates a sequential scan tests before stopping: all of them when
    /// every solution is requested or none exists, otherwise the position of
    /// the first solution.
    pub candidates_tested: u128,
}

fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n.saturating_sub(k));
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of canonical nonzero k×m matrices over GF(q): C(P + m, m) − 1 with
/// P = (qᵏ − 1)/(q − 1) normalized nonzero columns.
pub fn canonical_candidate_count(q: u32, k: usize, m: usize) -> u128 {
    let q = q as u128;
    let p = (q.pow(k as u32) - 1) / (q - 1);
    binomial(p + m as u128, m as u128) - 1
}

/// All normalized nonzero vectors of length k in lexicographic order.
pub(crate) fn projective_points(field: &FieldSpec, k: usize) -> Vec<Vec<FieldElement>> {
    let q = field.order() as usize;
    let total = q.pow(k as u32);
    let mut out = Vec::with_capacity((total - 1) / (q - 1));
    let mut v = vec![FieldElement::ZERO; k];
    for mut idx in 0..total {
        for x in v.iter_mut().rev() {
            *x = FieldElement::new((idx % q) as u8);
            idx /= q;
        }
        if field.is_normalized(&v) {
            out.push(v.clone());
        }
    }
    out
}

/// Every canonical matrix X with `v·X ≠ 0` for all `v` in `jd`.
pub fn exhaustive_extensions(
    field: &FieldSpec,
    jd: &[Vec<FieldElement>],
    k: usize,
    m: usize,
    mode: SearchMode,
    max_candidates: u128,
) -> Result<ExhaustiveOutcome> {
    if m == 0 {
        return Err(Error::NoColumns);
    }
    if let Some(bad) = jd.iter().find(|v| v.len() != k) {
        return Err(Error::DimensionMismatch { expected: k, found: bad.len() });
    }
    let total = canonical_candidate_count(field.order(), k, m);
    if total > max_candidates {
        return Err(Error::ResourceLimit(format!(
            "{total} canonical candidates exceed the limit of {max_candidates}"
        )));
    }

    let mut columns = vec![vec![FieldElement::ZERO; k]];
    columns.extend(projective_points(field, k));
    let found: Vec<Vec<usize>> = if m == 1 {
        single_column(field, jd, &columns, mode)
    } else {
        multi_column(field, jd, &columns, m, mode)
    };

    let candidates_tested = match (mode, found.first()) {
        (SearchMode::First, Some(first)) => multiset_rank(first, columns.len()),
        _ => total,
    };
    let solutions = found
        .iter()
        .map(|idx| ExtensionMatrix { k, columns: idx.iter().map(|&t| columns[t].clone()).collect() })
        .collect::<BTreeSet<_>>();
    let exhausted = mode == SearchMode::All || solutions.is_empty();
    Ok(ExhaustiveOutcome { solutions: ExtensionSolutionSet { m, solutions, exhausted }, candidates_tested })
}

fn single_column(field: &FieldSpec, jd: &[Vec<FieldElement>], columns: &[Vec<FieldElement>], mode: SearchMode) -> Vec<Vec<usize>> {
    let ok = |t: &usize| jd.iter().all(|v| !field.dot(v, &columns[*t]).is_zero());
    let range = (1..columns.len()).into_par_iter();
    match mode {
        SearchMode::All => range.filter(ok).map(|t| vec![t]).collect(),
        SearchMode::First => range.find_first(ok).map(|t| vec![t]).into_iter().collect(),
    }
}

/// Bitsets over `jd` marking the vectors orthogonal to each candidate column.
fn zero_sets(field: &FieldSpec, jd: &[Vec<FieldElement>], columns: &[Vec<FieldElement>]) -> Vec<Vec<u64>> {
    let words = jd.len().div_ceil(64);
    columns
        .par_iter()
        .map(|c| {
            let mut bits = vec![0u64; words];
            for (i, v) in jd.iter().enumerate() {
                if field.dot(v, c).is_zero() {
                    bits[i / 64] |= 1 << (i % 64);
                }
            }
            bits
        })
        .collect()
}

fn multi_column(
    field: &FieldSpec,
    jd: &[Vec<FieldElement>],
    columns: &[Vec<FieldElement>],
    m: usize,
    mode: SearchMode,
) -> Vec<Vec<usize>> {
    let zeros = zero_sets(field, jd, columns);
    let n = columns.len();
    let search = |first: usize| {
        let mut walk = Walk {
            zeros: &zeros,
            n,
            m,
            stop_at_first: mode == SearchMode::First,
            tuple: vec![first],
            acc: vec![zeros[first].clone()],
            found: Vec::new(),
        };
        walk.descend();
        walk.found
    };
    match mode {
        SearchMode::All => (0..n).into_par_iter().flat_map_iter(search).collect(),
        SearchMode::First => (0..n)
            .into_par_iter()
            .map(search)
            .find_first(|f| !f.is_empty())
            .unwrap_or_default(),
    }
}

/// Depth-first enumeration of the nondecreasing tuples with a fixed first
/// entry, keeping the intersection of zero sets per depth.
struct Walk<'a> {
    zeros: &'a [Vec<u64>],
    n: usize,
    m: usize,
    stop_at_first: bool,
    tuple: Vec<usize>,
    acc: Vec<Vec<u64>>,
    found: Vec<Vec<usize>>,
}

impl Walk<'_> {
    /// Extends the current tuple (length ≥ 1, below m) in every possible way.
    fn descend(&mut self) {
        let depth = self.tuple.len();
        let start = self.tuple[depth - 1];
        let top = self.acc[depth - 1].clone();
        if depth + 1 == self.m {
            let prefix_zero = self.tuple.iter().all(|&t| t == 0);
            for t in start..self.n {
                let covered = top.iter().zip(&self.zeros[t]).all(|(a, b)| a & b == 0);
                if covered && !(prefix_zero && t == 0) {
                    let mut found = self.tuple.clone();
                    found.push(t);
                    self.found.push(found);
                    if self.stop_at_first {
                        return;
                    }
                }
            }
            return;
        }
        for t in start..self.n {
            let next: Vec<u64> = top.iter().zip(&self.zeros[t]).map(|(a, b)| a & b).collect();
            self.tuple.push(t);
            self.acc.push(next);
            self.descend();
            self.acc.pop();
            self.tuple.pop();
            if self.stop_at_first && !self.found.is_empty() {
                return;
            }
        }
    }
}

/// Position of a nondecreasing tuple among all nondecreasing tuples over
/// `0..n` in lexicographic order, counting the all-zero tuple as position 0.
fn multiset_rank(tuple: &[usize], n: usize) -> u128 {
    let m = tuple.len();
    let mut rank = 0u128;
    let mut lo = 0;
    for (i, &t) in tuple.iter().enumerate() {
        let rest = (m - i - 1) as u128;
        for a in lo..t {
            // tuples continuing with value a, then rest entries from a..n
            let choices = (n - a) as u128;
            rank += binomial(choices + rest - 1, rest);
        }
        lo = t;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_points_are_sorted_normalized_and_complete() {
        for q in [2u32, 3, 4, 5, 7, 8, 9] {
            let field = FieldSpec::new(q).unwrap();
            for k in 1..=3 {
                let pts = projective_points(&field, k);
                assert_eq!(pts.len() as u128, ((q as u128).pow(k as u32) - 1) / (q as u128 - 1));
                assert!(pts.windows(2).all(|w| w[0] < w[1]));
                assert!(pts.iter().all(|p| field.is_normalized(p)));
            }
        }
    }

    #[test]
    fn multiset_rank_matches_enumeration_order() {
        let n = 5;
        let mut tuples = Vec::new();
        for a in 0..n {
            for b in a..n {
                for c in b..n {
                    tuples.push(vec![a, b, c]);
                }
            }
        }
        for (pos, t) in tuples.iter().enumerate() {
            assert_eq!(multiset_rank(t, n), pos as u128);
        }
        assert_eq!(multiset_rank(&[3], 5), 3);
    }
}
