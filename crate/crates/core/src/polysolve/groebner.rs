//! Buchberger's algorithm with the product and chain criteria.
//!
//! When the generators include a field equation `xᵢ^e − xᵢ` (with
//! `e − 1 | q − 1`) for every variable, the computation runs in the quotient
//! ring modulo all `xᵢ^q − xᵢ`. Those equations stay implicit: each new basis
//! element `g` is paired with them through `xᵢ^(q−a)·g` for every variable
//! dividing its leading monomial with exponent `a`, and the non-redundant
//! ones are put back into the final reduced basis.

use std::collections::{BTreeSet, HashSet};

use super::monomial::{Monomial, MonomialOrder};
use super::poly::{PolyRing, Polynomial};
use super::Ideal;
use crate::error::{Error, Result};
use crate::field::FieldElement;

/// Limits after which [`buchberger`] gives up with [`Error::ResourceLimit`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroebnerBudget {
    /// Maximum number of S-polynomial reductions.
    pub max_pair_reductions: u64,
    /// Maximum number of terms in any intermediate polynomial.
    pub max_terms: usize,
}

impl Default for GroebnerBudget {
    fn default() -> Self {
        GroebnerBudget { max_pair_reductions: 1_000_000, max_terms: 1_000_000 }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GroebnerStats {
    pub pair_reductions: u64,
    pub product_criterion_skips: u64,
    pub chain_criterion_skips: u64,
    /// Number of polynomials before the final inter-reduction.
    pub basis_size_before_reduction: usize,
}

/// A reduced Gröbner basis: monic, inter-reduced, sorted by increasing
/// leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: PolyRing,
    pub polys: Vec<Polynomial>,
    pub stats: GroebnerStats,
}

impl GroebnerBasis {
    /// True when the basis is {1}, i.e. the polynomial system has no solution.
    pub fn is_unit_ideal(&self) -> bool {
        self.polys.iter().any(|p| p.is_unit())
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.ring.normal_form(f, &self.polys)
    }

    /// Checks that every S-polynomial of basis pairs with non-coprime
    /// leading monomials reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let g = &self.polys;
        let lm = |i: usize| g[i].leading_monomial().unwrap();
        (0..g.len()).all(|i| {
            (i + 1..g.len()).all(|j| {
                lm(i).is_coprime(lm(j)) || self.normal_form(&self.ring.s_polynomial(&g[i], &g[j])).is_zero()
            })
        })
    }
}

/// A pair `(i, j)` of basis elements, or `(i, FIELD - v)` for basis element
/// `i` against the field equation of variable `v`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    lcm_degree: u32,
    i: usize,
    j: usize,
}

const FIELD: usize = usize::MAX;

struct PairQueue {
    queue: BTreeSet<PairKey>,
    pending: HashSet<(usize, usize)>,
}

impl PairQueue {
    fn new() -> Self {
        PairQueue { queue: BTreeSet::new(), pending: HashSet::new() }
    }

    fn push(&mut self, i: usize, j: usize, lcm_degree: u32) {
        self.queue.insert(PairKey { lcm_degree, i, j });
        self.pending.insert((i, j));
    }

    /// Normal selection strategy: smallest lcm degree, then smallest indices.
    fn pop(&mut self) -> Option<(usize, usize)> {
        let key = self.queue.pop_first()?;
        self.pending.remove(&(key.i, key.j));
        Some((key.i, key.j))
    }

    fn push_field(&mut self, i: usize, var: usize, lcm_degree: u32) {
        self.queue.insert(PairKey { lcm_degree, i, j: FIELD - var });
    }

    fn contains(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }
}

/// Reduced Gröbner basis of `ideal` under `order`.
pub fn buchberger(ideal: &Ideal, order: MonomialOrder, budget: GroebnerBudget) -> Result<GroebnerBasis> {
    let full = ideal.ring().with_order(order);
    let ring = if has_field_equations(ideal) { full.quotient() } else { full.clone() };
    let q = ring.field().order() as u8;
    let nvars = ring.nvars();
    let mut stats = GroebnerStats::default();
    let unit = |stats: GroebnerStats| GroebnerBasis { polys: vec![full.one()], ring: full.clone(), stats };

    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.generators() {
        let g = ring.monic(&ring.import(g));
        if g.is_zero() || basis.contains(&g) {
            continue;
        }
        if g.is_unit() {
            return Ok(unit(stats));
        }
        basis.push(g);
    }
    let mut leads: Vec<Monomial> = basis.iter().map(|p| *p.leading_monomial().unwrap()).collect();

    let mut pairs = PairQueue::new();
    let push_field_pairs = |pairs: &mut PairQueue, i: usize, lm: &Monomial| {
        if ring.is_quotient() {
            for (v, &a) in lm.exponents().iter().enumerate() {
                if a > 0 && a < q {
                    pairs.push_field(i, v, lm.degree() + (q - a) as u32);
                }
            }
        }
    };
    for j in 0..basis.len() {
        for i in 0..j {
            pairs.push(i, j, leads[i].lcm(&leads[j]).degree());
        }
        push_field_pairs(&mut pairs, j, &leads[j]);
    }

    while let Some((i, j)) = pairs.pop() {
        if j > basis.len() {
            let var = FIELD - j;
            let a = leads[i].exponents()[var];
            stats.pair_reductions += 1;
            if stats.pair_reductions > budget.max_pair_reductions {
                return Err(Error::ResourceLimit(format!(
                    "more than {} pair reductions",
                    budget.max_pair_reductions
                )));
            }
            let shift = Monomial::var(nvars, var, q - a);
            let s = ring.add_scaled(&[], FieldElement::ONE, &shift, &basis[i]);
            let r = ring.normal_form_bounded(&s, &basis, budget.max_terms)?;
            if r.is_zero() {
                continue;
            }
            let r = ring.monic(&r);
            if r.is_unit() {
                stats.basis_size_before_reduction = basis.len() + 1;
                return Ok(unit(stats));
            }
            let t = basis.len();
            let lm = *r.leading_monomial().unwrap();
            for (a, la) in leads.iter().enumerate() {
                pairs.push(a, t, la.lcm(&lm).degree());
            }
            push_field_pairs(&mut pairs, t, &lm);
            leads.push(lm);
            basis.push(r);
            continue;
        }
        if leads[i].is_coprime(&leads[j]) {
            stats.product_criterion_skips += 1;
            continue;
        }
        let l = leads[i].lcm(&leads[j]);
        let chain = (0..basis.len())
            .any(|t| t != i && t != j && leads[t].divides(&l) && !pairs.contains(i, t) && !pairs.contains(j, t));
        if chain {
            stats.chain_criterion_skips += 1;
            continue;
        }

        stats.pair_reductions += 1;
        if stats.pair_reductions > budget.max_pair_reductions {
            return Err(Error::ResourceLimit(format!(
                "more than {} pair reductions",
                budget.max_pair_reductions
            )));
        }
        let s = ring.s_polynomial(&basis[i], &basis[j]);
        let r = ring.normal_form_bounded(&s, &basis, budget.max_terms)?;
        if r.is_zero() {
            continue;
        }
        let r = ring.monic(&r);
        if r.is_unit() {
            stats.basis_size_before_reduction = basis.len() + 1;
            return Ok(unit(stats));
        }
        let t = basis.len();
        let lm = *r.leading_monomial().unwrap();
        for (a, la) in leads.iter().enumerate() {
            pairs.push(a, t, la.lcm(&lm).degree());
        }
        push_field_pairs(&mut pairs, t, &lm);
        leads.push(lm);
        basis.push(r);
    }

    stats.basis_size_before_reduction = basis.len();
    let mut polys = reduce_basis(&ring, basis);
    if ring.is_quotient() {
        for v in 0..nvars {
            let xq = Monomial::var(nvars, v, q);
            if !polys.iter().any(|p| p.leading_monomial().unwrap().divides(&xq)) {
                polys.push(full.sub(&full.var_power(v, q), &full.var(v)));
            }
        }
        polys.sort_by(|a, b| full.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    }
    Ok(GroebnerBasis { ring: full, polys, stats })
}

/// True when some generator `xᵢ^e − xᵢ` with `e − 1 | q − 1` exists for
/// every variable, so that `xᵢ^q − xᵢ` lies in the ideal for all i.
fn has_field_equations(ideal: &Ideal) -> bool {
    let ring = ideal.ring();
    let q = ring.field().order() as u8;
    let nvars = ring.nvars();
    let minus_one = ring.field().neg(FieldElement::ONE);
    let mut covered = vec![false; nvars];
    for g in ideal.generators() {
        let t = g.terms();
        if t.len() != 2 {
            continue;
        }
        let (hi, lo) = (&t[0], &t[1]);
        let nz: Vec<(usize, u8)> = hi.0.exponents().iter().copied().enumerate().filter(|&(_, e)| e > 0).collect();
        if nz.len() != 1 {
            continue;
        }
        let (v, e) = nz[0];
        let monic = hi.1 == FieldElement::ONE && lo.1 == minus_one;
        if monic && e >= 2 && (q - 1).is_multiple_of(e - 1) && lo.0 == Monomial::var(nvars, v, 1) {
            covered[v] = true;
        }
    }
    nvars > 0 && covered.iter().all(|&c| c)
}

/// Turns a Gröbner basis into the reduced one.
fn reduce_basis(ring: &PolyRing, basis: Vec<Polynomial>) -> Vec<Polynomial> {
    // minimal: drop every element whose leading monomial is divisible by
    // another surviving leading monomial (earlier index wins on equality)
    let leads: Vec<&Monomial> = basis.iter().map(|p| p.leading_monomial().unwrap()).collect();
    let keep: Vec<bool> = (0..basis.len())
        .map(|i| {
            !(0..basis.len()).any(|j| j != i && leads[j].divides(leads[i]) && (leads[j] != leads[i] || j < i))
        })
        .collect();
    let minimal: Vec<Polynomial> = basis
        .iter()
        .zip(&keep)
        .filter(|(_, &k)| k)
        .map(|(p, _)| p.clone())
        .collect();

    let mut reduced: Vec<Polynomial> = (0..minimal.len())
        .map(|i| {
            let others: Vec<Polynomial> = minimal
                .iter()
                .enumerate()
                .filter(|&(j, _)| j != i)
                .map(|(_, p)| p.clone())
                .collect();
            ring.monic(&ring.normal_form(&minimal[i], &others))
        })
        .collect();
    reduced.sort_by(|a, b| ring.cmp(a.leading_monomial().unwrap(), b.leading_monomial().unwrap()));
    reduced
}
