//! Minimal generator counts `dim I/mI` and minimal presentations of local
//! algebras.

use std::collections::{BTreeMap, HashMap};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{local_component, Ideal, LocalizeOptions};
use crate::linalg::{Matrix, Rational, SparseEchelon};
use crate::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial};

use super::ArtinAlgebra;

/// Sparse coordinates of `p` truncated above degree `max_deg`, with monomials
/// numbered on first sight.
fn truncated_coords(p: &Polynomial, max_deg: u32, index: &mut HashMap<Monomial, usize>) -> BTreeMap<usize, Rational> {
    let mut v = BTreeMap::new();
    for (m, c) in p.terms() {
        if m.degree() <= max_deg {
            let next = index.len();
            let i = *index.entry(m.clone()).or_insert(next);
            v.insert(i, c.clone());
        }
    }
    v
}

/// `dim I/mI` at the origin, given `N` with `m^N ⊆ I` locally.
///
/// Works in `K[x]/m^{N+2}`: since `m^{N+1} ⊆ mI`, the quotient `I/mI` is the
/// span of the truncated generators modulo the truncated `{u·g : deg u ≥ 1}`.
pub fn generator_count_with_exponent(ideal: &Ideal, exponent: u32) -> Result<usize> {
    let n = ideal.nvars();
    let top = exponent + 1;
    let mut index: HashMap<Monomial, usize> = HashMap::new();
    let mut echelon = SparseEchelon::new();
    let gens: Vec<&Polynomial> = ideal.generators().iter().filter(|g| !g.is_zero()).collect();
    let mut multipliers: Vec<Monomial> = Vec::new();
    for d in 1..=top {
        multipliers.extend(monomials_of_degree(n, d));
    }
    for g in &gens {
        let ord = g.order().unwrap_or(0);
        for u in &multipliers {
            if u.degree() + ord > top {
                continue;
            }
            let v = truncated_coords(&g.mul_monomial(u), top, &mut index);
            echelon.insert(v);
        }
    }
    let base = echelon.rank();
    for g in &gens {
        let v = truncated_coords(g, top, &mut index);
        echelon.insert(v);
    }
    Ok(echelon.rank() - base)
}

fn check_constant_terms(ideal: &Ideal) -> Result<()> {
    for g in ideal.generators() {
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTerm {
                generator: g.to_string(),
            });
        }
    }
    Ok(())
}

/// Minimal number of generators of the localization of `ideal` at the origin.
pub fn minimal_generator_count(ideal: &Ideal, opts: &LocalizeOptions) -> Result<usize> {
    check_constant_terms(ideal)?;
    let origin = vec![Rational::zero(); ideal.nvars()];
    let comp = local_component(ideal, &origin, &MonomialOrder::degrevlex(ideal.nvars()), opts)?;
    generator_count_with_exponent(ideal, comp.exponent)
}

/// A presentation `K[z]/J ≅ S` of a local algebra with `z` a basis of `m̄/m̄²`,
/// so that `J ⊆ m²`.
#[derive(Clone, Debug)]
pub struct MinimalPresentation {
    pub ideal: Ideal,
    /// Indices of the generator images used as the variables `z`.
    pub chosen: Vec<usize>,
    /// `N` with `m̄^N = 0`; `J` contains `m^N`.
    pub exponent: u32,
}

/// Picks generator images independent modulo `m̄²` and computes the kernel of
/// `K[z] → S`, which contains every monomial of degree `N`.
pub fn minimal_presentation(s: &ArtinAlgebra) -> Result<MinimalPresentation> {
    s.require_local()?;
    let d = s.dim();
    let mut acc = s.power(2);
    let mut chosen = Vec::new();
    for (i, g) in s.generator_images().iter().enumerate() {
        if acc.insert(g) {
            chosen.push(i);
        }
    }
    if acc != s.power(1) {
        return Err(Error::Invariant("generator images do not span m/m^2".into()));
    }
    let vars = s.vars().select(&chosen);
    let e = chosen.len();
    let n_exp = s.nilpotency_index()? as u32;
    let mut monos: Vec<Monomial> = Vec::new();
    let mut images: HashMap<Monomial, Vec<Rational>> = HashMap::new();
    images.insert(Monomial::one(e), s.unit().to_vec());
    monos.push(Monomial::one(e));
    for k in 1..n_exp {
        for m in monomials_of_degree(e, k) {
            let j = m.exponents().iter().position(|&x| x > 0).expect("positive degree");
            let mut ex = m.exponents().to_vec();
            ex[j] -= 1;
            let img = s.mul(&images[&Monomial::new(ex)], &s.generator_images()[chosen[j]]);
            images.insert(m.clone(), img);
            monos.push(m);
        }
    }
    let columns: Vec<Vec<Rational>> = monos.iter().map(|m| images[m].clone()).collect();
    let (kernel, _) = Matrix::from_columns(d, &columns)?.kernel_vectors();
    let mut gens: Vec<Polynomial> = kernel
        .iter()
        .map(|v| Polynomial::from_terms(&vars, monos.iter().cloned().zip(v.iter().cloned())))
        .collect();
    gens.extend(
        monomials_of_degree(e, n_exp)
            .into_iter()
            .map(|m| Polynomial::monomial(&vars, m, Rational::from_integer(1.into()))),
    );
    let ideal = Ideal::new(&vars, gens)?;
    for g in ideal.generators() {
        if g.order().is_some_and(|o| o < 2) {
            return Err(Error::Invariant(format!("presentation relation `{g}` has order < 2")));
        }
    }
    Ok(MinimalPresentation {
        ideal,
        chosen,
        exponent: n_exp,
    })
}
