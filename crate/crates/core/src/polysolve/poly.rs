use std::cmp::Ordering;
use std::collections::BinaryHeap;

use rustc_hash::FxHashMap;
use std::fmt;

use super::monomial::{Monomial, MonomialOrder, MAX_VARIABLES};
use crate::error::{Error, Result};
use crate::field::{FieldElement, FieldSpec};

/// A sparse polynomial: terms sorted strictly decreasing under the ring's
/// order, no zero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading monomial and coefficient.
    pub fn leading(&self) -> Option<(&Monomial, FieldElement)> {
        self.terms.first().map(|(m, c)| (m, *c))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    /// True for a nonzero constant.
    pub fn is_unit(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{c}")?;
            } else if *c == FieldElement::ONE {
                write!(f, "{m:?}")?;
            } else {
                write!(f, "{c}*{m:?}")?;
            }
        }
        Ok(())
    }
}

/// GF(q)[x₁, …, xₙ] under a fixed term order, optionally taken modulo the
/// field equations xᵢ^q − xᵢ.
///
/// In the quotient ring every product is immediately rewritten with
/// `x^e → x^(e−q+1)` for e ≥ q, so all exponents stay below q.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyRing {
    field: FieldSpec,
    nvars: usize,
    order: MonomialOrder,
    quotient: bool,
}

impl PolyRing {
    pub fn new(field: FieldSpec, nvars: usize, order: MonomialOrder) -> Self {
        PolyRing { field, nvars, order, quotient: false }
    }

    /// The ring modulo the field equations.
    pub fn quotient(&self) -> PolyRing {
        PolyRing { quotient: true, ..self.clone() }
    }

    /// The ring without exponent reduction.
    pub fn full(&self) -> PolyRing {
        PolyRing { quotient: false, ..self.clone() }
    }

    pub fn is_quotient(&self) -> bool {
        self.quotient
    }

    /// Product of two monomials, exponent-reduced in the quotient ring.
    /// Returns whether any reduction happened.
    #[inline]
    fn mono_mul(&self, a: &Monomial, b: &Monomial) -> (Monomial, bool) {
        let m = a.mul(b);
        if !self.quotient {
            return (m, false);
        }
        let q = self.field.order() as u8;
        if m.exponents().iter().all(|&e| e < q) {
            return (m, false);
        }
        let exps = m
            .exponents()
            .iter()
            .map(|&e| if e >= q { (e - 1) % (q - 1) + 1 } else { e })
            .collect();
        (Monomial::from_exponents(exps), true)
    }

    pub fn field(&self) -> &FieldSpec {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    pub fn with_order(&self, order: MonomialOrder) -> PolyRing {
        PolyRing { order, ..self.clone() }
    }

    #[inline]
    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.order.cmp(a, b)
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { terms: Vec::new() }
    }

    pub fn constant(&self, c: FieldElement) -> Polynomial {
        self.from_terms(vec![(Monomial::one(self.nvars), c)])
    }

    pub fn one(&self) -> Polynomial {
        self.constant(FieldElement::ONE)
    }

    /// `xᵢ^exp` with `i` zero-based.
    pub fn var_power(&self, i: usize, exp: u8) -> Polynomial {
        self.from_terms(vec![(Monomial::var(self.nvars, i, exp), FieldElement::ONE)])
    }

    pub fn var(&self, i: usize) -> Polynomial {
        self.var_power(i, 1)
    }

    /// Builds a polynomial from arbitrary terms: sorts, merges equal
    /// monomials and drops zeros.
    pub fn from_terms(&self, mut terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        terms.sort_by(|a, b| self.cmp(&b.0, &a.0));
        let mut out: Vec<(Monomial, FieldElement)> = Vec::with_capacity(terms.len());
        for (m, c) in terms {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc = self.field.add(*lc, c),
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    /// Re-sorts a polynomial built under another order (and reduces its
    /// exponents in the quotient ring).
    pub fn import(&self, p: &Polynomial) -> Polynomial {
        let one = Monomial::one(self.nvars);
        self.from_terms(p.terms.iter().map(|(m, c)| (self.mono_mul(m, &one).0, *c)).collect())
    }

    /// `p + c·m·g`, merging two sorted term lists.
    pub fn add_scaled(&self, p: &[(Monomial, FieldElement)], c: FieldElement, m: &Monomial, g: &Polynomial) -> Polynomial {
        let f = &self.field;
        let mut reordered = false;
        let mut shifted: Vec<(Monomial, FieldElement)> = g
            .terms
            .iter()
            .map(|(gm, gc)| {
                let (mm, hit) = self.mono_mul(gm, m);
                reordered |= hit;
                (mm, f.mul(c, *gc))
            })
            .collect();
        if reordered {
            shifted = self.from_terms(shifted).terms;
        }
        let mut out = Vec::with_capacity(p.len() + shifted.len());
        let mut i = 0;
        let mut gi = shifted.into_iter().peekable();
        while i < p.len() {
            let Some((gm, _)) = gi.peek() else { break };
            match self.cmp(&p[i].0, gm) {
                Ordering::Greater => {
                    out.push(p[i]);
                    i += 1;
                }
                Ordering::Less => out.push(gi.next().unwrap()),
                Ordering::Equal => {
                    let (gm, gc) = gi.next().unwrap();
                    let s = f.add(p[i].1, gc);
                    if !s.is_zero() {
                        out.push((gm, s));
                    }
                    i += 1;
                }
            }
        }
        out.extend_from_slice(&p[i..]);
        out.extend(gi);
        out.retain(|(_, c)| !c.is_zero());
        Polynomial { terms: out }
    }

    pub fn add(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        self.add_scaled(&a.terms, FieldElement::ONE, &Monomial::one(self.nvars), b)
    }

    pub fn sub(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let minus_one = self.field.neg(FieldElement::ONE);
        self.add_scaled(&a.terms, minus_one, &Monomial::one(self.nvars), b)
    }

    pub fn scale(&self, c: FieldElement, p: &Polynomial) -> Polynomial {
        if c.is_zero() {
            return self.zero();
        }
        Polynomial { terms: p.terms.iter().map(|(m, x)| (*m, self.field.mul(c, *x))).collect() }
    }

    pub fn mul(&self, a: &Polynomial, b: &Polynomial) -> Polynomial {
        let mut terms = Vec::with_capacity(a.terms.len() * b.terms.len());
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                terms.push((self.mono_mul(ma, mb).0, self.field.mul(*ca, *cb)));
            }
        }
        self.from_terms(terms)
    }

    pub fn pow(&self, p: &Polynomial, exp: u32) -> Polynomial {
        let mut acc = self.one();
        for _ in 0..exp {
            acc = self.mul(&acc, p);
        }
        acc
    }

    /// Scales so that the leading coefficient is one.
    pub fn monic(&self, p: &Polynomial) -> Polynomial {
        match p.leading() {
            None => p.clone(),
            Some((_, lc)) => self.scale(self.field.inv(lc).expect("leading coefficient is nonzero"), p),
        }
    }

    pub fn s_polynomial(&self, f: &Polynomial, g: &Polynomial) -> Polynomial {
        let (Some((fm, fc)), Some((gm, gc))) = (f.leading(), g.leading()) else {
            return self.zero();
        };
        let l = fm.lcm(gm);
        let field = &self.field;
        let left = self.add_scaled(&[], field.inv(fc).unwrap(), &l.div(fm), f);
        let gscale = field.neg(field.inv(gc).unwrap());
        self.add_scaled(&left.terms, gscale, &l.div(gm), g)
    }

    /// Remainder of full multivariate division of `f` by `basis`.
    pub fn normal_form(&self, f: &Polynomial, basis: &[Polynomial]) -> Polynomial {
        self.normal_form_bounded(f, basis, usize::MAX)
            .expect("unbounded reduction never fails")
    }

    /// Like [`normal_form`](Self::normal_form) but fails once an intermediate
    /// polynomial exceeds `max_terms` terms.
    pub fn normal_form_bounded(&self, f: &Polynomial, basis: &[Polynomial], max_terms: usize) -> Result<Polynomial> {
        let gens: Vec<&Polynomial> = basis.iter().filter(|g| !g.is_zero()).collect();
        let field = &self.field;
        let mut work = Accumulator::new(field, self.order);
        for (m, c) in &f.terms {
            work.add(m, *c);
        }
        let mut rem = Vec::new();
        while let Some((m, c)) = work.pop() {
            match gens.iter().find(|g| g.terms[0].0.divides(&m)) {
                Some(g) => {
                    let (lm, lc) = g.terms[0];
                    let factor = field.neg(field.div(c, lc).unwrap());
                    let shift = m.div(&lm);
                    for (gm, gc) in &g.terms[1..] {
                        work.add(&self.mono_mul(gm, &shift).0, field.mul(factor, *gc));
                    }
                    if work.len() > max_terms {
                        return Err(Error::ResourceLimit(format!(
                            "intermediate polynomial has {} terms (limit {max_terms})",
                            work.len()
                        )));
                    }
                }
                None => rem.push((m, c)),
            }
        }
        Ok(Polynomial { terms: rem })
    }

    pub fn eval(&self, p: &Polynomial, point: &[FieldElement]) -> FieldElement {
        let f = &self.field;
        p.terms.iter().fold(FieldElement::ZERO, |acc, (m, c)| {
            let v = m
                .exponents()
                .iter()
                .zip(point)
                .fold(*c, |t, (&e, &x)| f.mul(t, f.pow(x, e as u64)));
            f.add(acc, v)
        })
    }

    /// Replaces variable `i` by the constant `value`.
    pub fn substitute(&self, p: &Polynomial, i: usize, value: FieldElement) -> Polynomial {
        let f = &self.field;
        let terms = p
            .terms
            .iter()
            .map(|(m, c)| {
                let e = m.exponents()[i];
                if e == 0 {
                    (*m, *c)
                } else {
                    let mut exps = m.exponents().to_vec();
                    exps[i] = 0;
                    (Monomial::from_exponents(exps), f.mul(*c, f.pow(value, e as u64)))
                }
            })
            .collect();
        self.from_terms(terms)
    }
}

/// A polynomial under construction that hands out its terms from the
/// largest down.
struct Accumulator<'a> {
    field: &'a FieldSpec,
    order: MonomialOrder,
    heap: BinaryHeap<SortKey>,
    terms: FxHashMap<SortKey, (Monomial, FieldElement)>,
}

/// Bytes whose lexicographic order matches the monomial order.
type SortKey = [u8; MAX_VARIABLES + 2];

impl<'a> Accumulator<'a> {
    fn new(field: &'a FieldSpec, order: MonomialOrder) -> Self {
        Accumulator { field, order, heap: BinaryHeap::new(), terms: FxHashMap::default() }
    }

    fn len(&self) -> usize {
        self.terms.len()
    }

    fn key(&self, m: &Monomial) -> SortKey {
        let mut key = [0u8; MAX_VARIABLES + 2];
        let e = m.exponents();
        match self.order {
            MonomialOrder::DegRevLex => {
                key[..2].copy_from_slice(&(m.degree() as u16).to_be_bytes());
                for (k, &x) in key[2..].iter_mut().zip(e) {
                    *k = u8::MAX - x;
                }
            }
            MonomialOrder::Lex => {
                for (k, &x) in key.iter_mut().zip(e.iter().rev()) {
                    *k = x;
                }
            }
        }
        key
    }

    fn add(&mut self, m: &Monomial, c: FieldElement) {
        if c.is_zero() {
            return;
        }
        let key = self.key(m);
        match self.terms.get_mut(&key) {
            Some((_, x)) => {
                *x = self.field.add(*x, c);
                if x.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, (*m, c));
                self.heap.push(key);
            }
        }
    }

    /// Removes and returns the largest remaining term.
    fn pop(&mut self) -> Option<(Monomial, FieldElement)> {
        while let Some(key) = self.heap.pop() {
            if let Some(term) = self.terms.remove(&key) {
                return Some(term);
            }
        }
        None
    }
}
