//! Buchberger internals. Polynomials are held as term lists sorted by the
//! additive order key, so shifting by a monomial is a key addition and the
//! leading term is the first entry.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BinaryHeap, HashSet};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{Monomial, MonomialOrder, Polynomial, VarSet};

use super::CancelToken;

pub(crate) type Key = Vec<i64>;

fn add_keys(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

#[derive(Clone, Debug)]
pub(crate) struct Term {
    pub key: Key,
    pub mono: Monomial,
    pub coeff: Rational,
}

/// Terms in strictly decreasing key order, nonzero coefficients.
#[derive(Clone, Debug)]
pub(crate) struct SortedPoly {
    pub terms: Vec<Term>,
}

impl SortedPoly {
    pub fn from_polynomial(p: &Polynomial, order: &MonomialOrder) -> Self {
        let mut terms: Vec<Term> = p
            .terms()
            .map(|(m, c)| Term {
                key: order.key(m),
                mono: m.clone(),
                coeff: c.clone(),
            })
            .collect();
        terms.sort_by(|a, b| b.key.cmp(&a.key));
        SortedPoly { terms }
    }

    pub fn to_polynomial(&self, vars: &VarSet) -> Polynomial {
        Polynomial::from_terms(vars, self.terms.iter().map(|t| (t.mono.clone(), t.coeff.clone())))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &Term {
        &self.terms[0]
    }

    pub fn make_monic(&mut self) {
        let inv = Rational::one() / &self.terms[0].coeff;
        if !inv.is_one() {
            for t in &mut self.terms {
                t.coeff *= &inv;
            }
        }
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }
}

/// Working polynomial during reduction: key -> (monomial, coefficient).
pub(crate) type Work = BTreeMap<Key, (Monomial, Rational)>;

fn work_add(work: &mut Work, key: Key, mono: Monomial, coeff: Rational) {
    use std::collections::btree_map::Entry;
    match work.entry(key) {
        Entry::Vacant(v) => {
            v.insert((mono, coeff));
        }
        Entry::Occupied(mut o) => {
            o.get_mut().1 += coeff;
            if o.get().1.is_zero() {
                o.remove();
            }
        }
    }
}

/// Adds `factor * shift * (g - lead(g))` into `work`.
fn subtract_tail(work: &mut Work, g: &SortedPoly, shift: &Monomial, shift_key: &[i64], factor: &Rational) {
    for t in &g.terms[1..] {
        work_add(
            work,
            add_keys(&t.key, shift_key),
            t.mono.mul(shift),
            -(factor * &t.coeff),
        );
    }
}

/// Full reduction of `work` by monic `basis`; returns the remainder.
pub(crate) fn reduce(mut work: Work, basis: &[SortedPoly], order: &MonomialOrder) -> SortedPoly {
    let mut rem: Vec<Term> = Vec::new();
    while let Some((key, (mono, coeff))) = work.pop_last() {
        let divisor = basis.iter().find(|g| g.lead().mono.divides(&mono));
        match divisor {
            Some(g) => {
                let q = g.lead().mono.quotient_of(&mono).expect("divides");
                let qk = order.key(&q);
                subtract_tail(&mut work, g, &q, &qk, &coeff);
            }
            None => rem.push(Term { key, mono, coeff }),
        }
    }
    SortedPoly { terms: rem }
}

pub(crate) fn to_work(p: &SortedPoly) -> Work {
    p.terms
        .iter()
        .map(|t| (t.key.clone(), (t.mono.clone(), t.coeff.clone())))
        .collect()
}

fn s_polynomial(a: &SortedPoly, b: &SortedPoly, lcm: &Monomial, order: &MonomialOrder) -> Work {
    let mut work = Work::new();
    let qa = a.lead().mono.quotient_of(lcm).expect("lcm");
    let qb = b.lead().mono.quotient_of(lcm).expect("lcm");
    let (ka, kb) = (order.key(&qa), order.key(&qb));
    for t in &a.terms[1..] {
        work_add(&mut work, add_keys(&t.key, &ka), t.mono.mul(&qa), t.coeff.clone());
    }
    for t in &b.terms[1..] {
        work_add(&mut work, add_keys(&t.key, &kb), t.mono.mul(&qb), -t.coeff.clone());
    }
    work
}

/// Buchberger with the normal selection strategy, the coprime-leading-term
/// criterion and the chain criterion. Returns the reduced basis sorted by
/// increasing leading monomial.
pub(crate) fn buchberger(
    generators: &[Polynomial],
    order: &MonomialOrder,
    cancel: Option<&CancelToken>,
) -> Result<Vec<SortedPoly>> {
    let mut basis: Vec<SortedPoly> = Vec::new();
    let mut heap: BinaryHeap<Reverse<(Key, usize, usize)>> = BinaryHeap::new();
    let mut pending: HashSet<(usize, usize)> = HashSet::new();
    let nvars = order.nvars();

    let add = |basis: &mut Vec<SortedPoly>,
               heap: &mut BinaryHeap<Reverse<(Key, usize, usize)>>,
               pending: &mut HashSet<(usize, usize)>,
               mut g: SortedPoly|
     -> bool {
        g.make_monic();
        let unit = g.lead().mono.is_one();
        let j = basis.len();
        for (i, h) in basis.iter().enumerate() {
            let lcm = h.lead().mono.lcm(&g.lead().mono);
            heap.push(Reverse((order.key(&lcm), i, j)));
            pending.insert((i, j));
        }
        basis.push(g);
        unit
    };

    for p in generators {
        if p.is_zero() {
            continue;
        }
        let r = reduce(to_work(&SortedPoly::from_polynomial(p, order)), &basis, order);
        if !r.is_zero() && add(&mut basis, &mut heap, &mut pending, r) {
            return Ok(vec![unit_poly(nvars, order)]);
        }
    }

    while let Some(Reverse((_, i, j))) = heap.pop() {
        pending.remove(&(i, j));
        if let Some(c) = cancel {
            if c.is_cancelled() {
                return Err(Error::Cancelled);
            }
        }
        let (a, b) = (&basis[i], &basis[j]);
        if a.lead().mono.is_coprime(&b.lead().mono) || (a.is_monomial() && b.is_monomial()) {
            continue;
        }
        let lcm = a.lead().mono.lcm(&b.lead().mono);
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && basis[k].lead().mono.divides(&lcm)
                && !pending.contains(&(i.min(k), i.max(k)))
                && !pending.contains(&(j.min(k), j.max(k)))
        });
        if chain {
            continue;
        }
        let s = s_polynomial(a, b, &lcm, order);
        let r = reduce(s, &basis, order);
        if !r.is_zero() && add(&mut basis, &mut heap, &mut pending, r) {
            return Ok(vec![unit_poly(nvars, order)]);
        }
    }

    Ok(interreduce(basis, order))
}

fn unit_poly(nvars: usize, order: &MonomialOrder) -> SortedPoly {
    let one = Monomial::one(nvars);
    SortedPoly {
        terms: vec![Term {
            key: order.key(&one),
            mono: one,
            coeff: Rational::one(),
        }],
    }
}

/// Minimalizes and fully reduces a Gröbner basis.
pub(crate) fn interreduce(mut basis: Vec<SortedPoly>, order: &MonomialOrder) -> Vec<SortedPoly> {
    basis.sort_by(|a, b| a.lead().key.cmp(&b.lead().key));
    let mut minimal: Vec<SortedPoly> = Vec::new();
    for g in basis {
        if !minimal.iter().any(|h| h.lead().mono.divides(&g.lead().mono)) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for i in 0..minimal.len() {
        let others: Vec<SortedPoly> = minimal
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != i)
            .map(|(_, g)| g.clone())
            .collect();
        let g = &minimal[i];
        let mut tail = Work::new();
        for t in &g.terms[1..] {
            tail.insert(t.key.clone(), (t.mono.clone(), t.coeff.clone()));
        }
        let r = reduce(tail, &others, order);
        let mut terms = vec![g.lead().clone()];
        terms.extend(r.terms);
        let mut p = SortedPoly { terms };
        p.make_monic();
        out.push(p);
    }
    out
}
