//! Minimum distance and minimum-weight codewords by enumerating low-weight
//! information vectors against several systematic generator matrices.
//!
//! After every generator matrix has been used on all information vectors of
//! weight ≤ w, every codeword not yet produced has weight at least
//! `Σⱼ max(0, (w+1) − (k − rⱼ))`, where rⱼ are the relative ranks of the
//! information sets. Enumeration stops once that lower bound exceeds the
//! lightest weight seen.
//!
//! Only normalized information vectors (first nonzero entry 1) are encoded;
//! the scalar multiples of a codeword have the same weight.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::code::{GeneratorMatrix, InformationSetCollection};
use crate::combinatorics::{binomial, next_subset, unrank_subset};
use crate::field::{weight, FieldElement, FieldSpec};

/// Snapshot of the bounds after the pass over weight `w`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BoundState {
    pub w: usize,
    pub d_lb: usize,
    pub d_ub: usize,
}

/// How [`minimum_weight_words_with`] covers the code.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Strategy {
    /// Information-set enumeration, finishing with a plain enumeration of all
    /// codewords once that is cheaper than the next pass.
    #[default]
    Auto,
    /// Information-set enumeration only.
    InformationSets,
    /// Encode every normalized information vector of the first matrix.
    FullEnumeration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinWeightReport {
    pub d: usize,
    /// Normalized minimum-weight codewords, one per scalar class.
    pub reps: BTreeSet<Vec<FieldElement>>,
    /// |S_d| = |reps|·(q − 1).
    pub count_full: u128,
    pub trace: Vec<BoundState>,
    /// Number of vG products computed.
    pub encodings_done: u64,
    /// True when the result was completed by enumerating every codeword.
    pub full_enumeration: bool,
}

/// Lower bound on the weight of every codeword not produced by encoding all
/// information vectors of weight ≤ `w` with each matrix of the collection.
pub fn lower_bound(w: usize, k: usize, ranks: &[usize]) -> usize {
    ranks
        .iter()
        .map(|&r| (w + 1).saturating_sub(k - r.min(k)))
        .sum()
}

/// Predicted enumeration effort for finding all codewords of weight ≤ d.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationCost {
    /// Smallest w with `lower_bound(w) > d`, capped at k.
    pub w0: usize,
    /// `Σ_{w=1..w0} μ·C(k,w)·(q−1)^(w−1)`.
    pub encodings: u128,
}

pub fn enumeration_cost(k: usize, q: u32, mu: usize, ranks: &[usize], d: usize) -> EnumerationCost {
    let w0 = (1..=k).find(|&w| lower_bound(w, k, ranks) > d).unwrap_or(k);
    let encodings = (1..=w0).fold(0u128, |acc, w| acc.saturating_add(pass_cost(k, q, w).saturating_mul(mu as u128)));
    EnumerationCost { w0, encodings }
}

/// Normalized information vectors of weight exactly `w`.
fn pass_cost(k: usize, q: u32, w: usize) -> u128 {
    if w == 0 || w > k {
        return 0;
    }
    (binomial(k, w) as u128).saturating_mul(((q - 1) as u128).saturating_pow(w as u32 - 1))
}

/// Cost of finishing with a single matrix: all weights from `w` to `k`.
fn completion_cost(k: usize, q: u32, w: usize) -> u128 {
    (w..=k).fold(0u128, |acc, x| acc.saturating_add(pass_cost(k, q, x)))
}

#[derive(Clone, Copy, Debug)]
enum Keep {
    /// Track the lightest weight; keep words of that weight if it is ≤ the ceiling.
    Lightest { ceiling: usize },
    /// Keep every word of weight ≤ the bound.
    AtMost(usize),
}

#[derive(Debug)]
struct PassOutput {
    min_weight: usize,
    words: Vec<Vec<FieldElement>>,
    encodings: u64,
}

impl PassOutput {
    fn empty() -> Self {
        PassOutput { min_weight: usize::MAX, words: Vec::new(), encodings: 0 }
    }

    fn offer(&mut self, field: &FieldSpec, keep: Keep, word: &[FieldElement], wt: usize) {
        match keep {
            Keep::Lightest { ceiling } => {
                if wt < self.min_weight {
                    self.min_weight = wt;
                    self.words.clear();
                }
                if wt == self.min_weight && wt <= ceiling {
                    self.words.push(normalized(field, word));
                }
            }
            Keep::AtMost(bound) => {
                self.min_weight = self.min_weight.min(wt);
                if wt <= bound {
                    self.words.push(normalized(field, word));
                }
            }
        }
    }

    fn merge(mut self, other: PassOutput, keep: Keep) -> PassOutput {
        self.encodings += other.encodings;
        match keep {
            Keep::Lightest { .. } => {
                if other.min_weight < self.min_weight {
                    self.min_weight = other.min_weight;
                    self.words = other.words;
                } else if other.min_weight == self.min_weight {
                    self.words.extend(other.words);
                }
            }
            Keep::AtMost(_) => {
                self.min_weight = self.min_weight.min(other.min_weight);
                self.words.extend(other.words);
            }
        }
        self
    }
}

fn normalized(field: &FieldSpec, word: &[FieldElement]) -> Vec<FieldElement> {
    let mut v = word.to_vec();
    field.normalize_in_place(&mut v);
    v
}

/// `scaled[i][λ] = λ · row_i`.
fn scaled_rows(g: &GeneratorMatrix) -> Vec<Vec<Vec<FieldElement>>> {
    let field = g.field();
    g.rows()
        .iter()
        .map(|row| field.elements().map(|l| field.scale(l, row)).collect())
        .collect()
}

#[inline]
fn add_assign(field: &FieldSpec, acc: &mut [FieldElement], v: &[FieldElement]) {
    for (a, &b) in acc.iter_mut().zip(v) {
        *a = field.add(*a, b);
    }
}

/// Encodes the normalized information vectors of weight `w` whose supports
/// have lexicographic rank in `ranks`.
fn scan_range(
    g: &GeneratorMatrix,
    scaled: &[Vec<Vec<FieldElement>>],
    w: usize,
    ranks: std::ops::Range<u64>,
    keep: Keep,
) -> PassOutput {
    let field = g.field();
    let k = g.k();
    let top = FieldElement::new(field.order() as u8 - 1);
    let wrap = scaled_index(field.sub(FieldElement::ONE, top));
    let mut out = PassOutput::empty();
    let mut support = unrank_subset(k, w, ranks.start);
    let mut digits = vec![FieldElement::ONE; w];
    let mut acc = vec![FieldElement::ZERO; g.n()];

    for _ in ranks {
        digits.fill(FieldElement::ONE);
        acc.fill(FieldElement::ZERO);
        for &row in &support {
            add_assign(field, &mut acc, &scaled[row][1]);
        }
        // value patterns in lexicographic order; the first digit stays 1
        loop {
            out.encodings += 1;
            let wt = weight(&acc);
            out.offer(field, keep, &acc, wt);

            let mut t = w - 1;
            loop {
                if t == 0 {
                    break;
                }
                let row = support[t];
                if digits[t] < top {
                    let next = FieldElement::new(digits[t].index() + 1);
                    let delta = field.sub(next, digits[t]);
                    add_assign(field, &mut acc, &scaled[row][scaled_index(delta)]);
                    digits[t] = next;
                    break;
                }
                add_assign(field, &mut acc, &scaled[row][wrap]);
                digits[t] = FieldElement::ONE;
                t -= 1;
            }
            if t == 0 {
                break;
            }
        }
        next_subset(&mut support, k);
    }
    out
}

#[inline]
fn scaled_index(x: FieldElement) -> usize {
    x.index() as usize
}

/// One pass over all normalized information vectors of weight `w`, split into
/// support-rank ranges processed in parallel and merged in range order.
fn weight_pass(g: &GeneratorMatrix, scaled: &[Vec<Vec<FieldElement>>], w: usize, keep: Keep) -> PassOutput {
    let total = binomial(g.k(), w);
    let workers = rayon::current_num_threads() as u64;
    let chunk = (total / (workers * 8)).max(16);
    let starts: Vec<u64> = (0..total).step_by(chunk as usize).collect();
    starts
        .into_par_iter()
        .map(|s| scan_range(g, scaled, w, s..(s + chunk).min(total), keep))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(PassOutput::empty(), |acc, part| acc.merge(part, keep))
}

struct Enumerator<'a> {
    matrices: Vec<(&'a GeneratorMatrix, Vec<Vec<Vec<FieldElement>>>)>,
}

impl<'a> Enumerator<'a> {
    fn new(coll: &'a InformationSetCollection) -> Self {
        let matrices = coll.entries.iter().map(|e| (&e.matrix, scaled_rows(&e.matrix))).collect();
        Enumerator { matrices }
    }

    fn pass(&self, j: usize, w: usize, keep: Keep) -> PassOutput {
        let (g, scaled) = &self.matrices[j];
        weight_pass(g, scaled, w, keep)
    }
}

/// Tracks the lightest weight found and the words achieving it.
struct Lightest {
    d_ub: usize,
    words: BTreeSet<Vec<FieldElement>>,
}

impl Lightest {
    fn absorb(&mut self, pass: PassOutput) {
        if pass.min_weight < self.d_ub {
            self.d_ub = pass.min_weight;
            self.words = pass.words.into_iter().collect();
        } else if pass.min_weight == self.d_ub {
            self.words.extend(pass.words);
        }
    }
}

/// Minimum distance and all minimum-weight codewords, using [`Strategy::Auto`].
pub fn minimum_weight_words(g: &GeneratorMatrix, coll: &InformationSetCollection) -> MinWeightReport {
    minimum_weight_words_with(g, coll, Strategy::Auto)
}

pub fn minimum_weight_words_with(
    g: &GeneratorMatrix,
    coll: &InformationSetCollection,
    strategy: Strategy,
) -> MinWeightReport {
    let (n, k, q) = (g.n(), g.k(), g.field().order());
    let ranks = coll.ranks();
    let mu = coll.mu();
    let en = Enumerator::new(coll);

    let mut best = Lightest { d_ub: n - k + 1, words: BTreeSet::new() };
    let mut d_lb = 1;
    let mut w = 1;
    let mut trace = Vec::new();
    let mut encodings = 0u64;
    let mut full = strategy == Strategy::FullEnumeration;

    if !full {
        while w <= k && d_lb <= best.d_ub {
            if strategy == Strategy::Auto
                && mu > 1
                && completion_cost(k, q, w) <= pass_cost(k, q, w) * mu as u128
            {
                full = true;
                break;
            }
            for j in 0..mu {
                let pass = en.pass(j, w, Keep::Lightest { ceiling: best.d_ub });
                encodings += pass.encodings;
                best.absorb(pass);
            }
            d_lb = lower_bound(w, k, &ranks);
            trace.push(BoundState { w, d_lb, d_ub: best.d_ub });
            w += 1;
        }
    }
    if full {
        for x in w..=k {
            let pass = en.pass(0, x, Keep::Lightest { ceiling: best.d_ub });
            encodings += pass.encodings;
            best.absorb(pass);
        }
    }

    let count_full = best.words.len() as u128 * (q as u128 - 1);
    MinWeightReport {
        d: best.d_ub,
        reps: best.words,
        count_full,
        trace,
        encodings_done: encodings,
        full_enumeration: full,
    }
}

/// Normalized representatives of all nonzero codewords of weight ≤ `bound`.
pub fn words_of_weight_at_most(
    g: &GeneratorMatrix,
    coll: &InformationSetCollection,
    bound: usize,
) -> BTreeSet<Vec<FieldElement>> {
    let (k, q) = (g.k(), g.field().order());
    let ranks = coll.ranks();
    let mu = coll.mu();
    let en = Enumerator::new(coll);
    let keep = Keep::AtMost(bound);
    let mut words = BTreeSet::new();
    if bound == 0 {
        return words;
    }

    let mut w = 1;
    while w <= k {
        if mu > 1 && completion_cost(k, q, w) <= pass_cost(k, q, w) * mu as u128 {
            for x in w..=k {
                words.extend(en.pass(0, x, keep).words);
            }
            break;
        }
        for j in 0..mu {
            words.extend(en.pass(j, w, keep).words);
        }
        if lower_bound(w, k, &ranks) > bound {
            break;
        }
        w += 1;
    }
    words
}

/// The set of nonzero weights occurring in the code.
pub fn weight_spectrum(g: &GeneratorMatrix, coll: &InformationSetCollection) -> BTreeSet<usize> {
    words_of_weight_at_most(g, coll, g.n())
        .iter()
        .map(|c| weight(c))
        .collect()
}
