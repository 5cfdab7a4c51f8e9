//! Ideals, reduced Gröbner bases, staircases and localization at rational
//! points.
//!
//! Generators are polynomials. For an ideal containing a power of the maximal
//! ideal at a point, the local algebra is the same whether it is built from
//! polynomials or power series, so all local work is done on polynomial
//! truncations.

mod engine;
mod local;
mod points;
pub mod univariate;

use std::collections::HashMap;
use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg::Rational;
use crate::poly::{monomials_of_degree, parse_polynomial_list, Monomial, MonomialOrder, Polynomial, VarSet};

use engine::SortedPoly;

pub use local::{local_component, LocalComponent, LocalizeOptions, DEFAULT_TRUNCATION_CAP};
pub(crate) use points::rational_points_from_basis;
pub use points::{rational_points, PointSet};

/// Cooperative cancellation flag shared between a driver and long loops.
#[derive(Clone, Debug, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::SeqCst);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::SeqCst)
    }

    pub(crate) fn check(token: Option<&CancelToken>) -> Result<()> {
        match token {
            Some(t) if t.is_cancelled() => Err(Error::Cancelled),
            _ => Ok(()),
        }
    }
}

/// An ideal given by generators. Zero generators are dropped; the order of
/// the remaining ones is kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ideal {
    vars: VarSet,
    generators: Vec<Polynomial>,
}

impl Ideal {
    pub fn new(vars: &VarSet, generators: Vec<Polynomial>) -> Result<Self> {
        if generators.iter().any(|g| !g.vars().same(vars)) {
            return Err(Error::VarSetMismatch);
        }
        Ok(Ideal {
            vars: vars.clone(),
            generators: generators.into_iter().filter(|g| !g.is_zero()).collect(),
        })
    }

    /// Parses a comma-separated generator list.
    pub fn parse(text: &str, vars: &VarSet) -> Result<Self> {
        Self::new(vars, parse_polynomial_list(text, vars)?)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    /// The ideal in coordinates centred at `point`.
    pub fn shift(&self, point: &[Rational]) -> Result<Ideal> {
        let gens = self
            .generators
            .iter()
            .map(|g| g.shift(point))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(&self.vars, gens)
    }

    /// `I + m^N` where `m` is the maximal ideal at the origin.
    pub fn plus_power_of_maximal(&self, n: u32) -> Ideal {
        let mut gens = self.generators.clone();
        gens.extend(
            monomials_of_degree(self.nvars(), n)
                .into_iter()
                .map(|m| Polynomial::monomial(&self.vars, m, Rational::from_integer(1.into()))),
        );
        Ideal {
            vars: self.vars.clone(),
            generators: gens,
        }
    }

    pub fn groebner_basis(&self, order: &MonomialOrder) -> Result<GroebnerBasis> {
        buchberger(self, order)
    }
}

/// Reduced Gröbner basis for a fixed order. Elements are monic and sorted by
/// increasing leading monomial.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    vars: VarSet,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    leading: Vec<Monomial>,
    sorted: Vec<SortedPoly>,
}

impl PartialEq for GroebnerBasis {
    fn eq(&self, other: &Self) -> bool {
        self.vars == other.vars && self.order == other.order && self.elements == other.elements
    }
}

pub fn buchberger(ideal: &Ideal, order: &MonomialOrder) -> Result<GroebnerBasis> {
    buchberger_with_cancel(ideal, order, None)
}

pub fn buchberger_with_cancel(
    ideal: &Ideal,
    order: &MonomialOrder,
    cancel: Option<&CancelToken>,
) -> Result<GroebnerBasis> {
    if order.nvars() != ideal.nvars() {
        return Err(Error::DimensionMismatch {
            expected: ideal.nvars(),
            found: order.nvars(),
        });
    }
    let sorted = engine::buchberger(ideal.generators(), order, cancel)?;
    Ok(GroebnerBasis::from_sorted(ideal.vars(), order, sorted))
}

impl GroebnerBasis {
    fn from_sorted(vars: &VarSet, order: &MonomialOrder, sorted: Vec<SortedPoly>) -> Self {
        GroebnerBasis {
            vars: vars.clone(),
            order: order.clone(),
            elements: sorted.iter().map(|g| g.to_polynomial(vars)).collect(),
            leading: sorted.iter().map(|g| g.lead().mono.clone()).collect(),
            sorted,
        }
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Leading monomials of the elements, generating the staircase ideal.
    pub fn leading_monomials(&self) -> &[Monomial] {
        &self.leading
    }

    /// True if the basis is `{1}`.
    pub fn is_unit(&self) -> bool {
        self.leading.iter().any(Monomial::is_one)
    }

    pub fn normal_form(&self, p: &Polynomial) -> Polynomial {
        let work = engine::to_work(&SortedPoly::from_polynomial(p, &self.order));
        engine::reduce(work, &self.sorted, &self.order).to_polynomial(&self.vars)
    }

    pub fn normal_form_of_monomial(&self, m: &Monomial) -> Polynomial {
        self.normal_form(&Polynomial::monomial(
            &self.vars,
            m.clone(),
            Rational::from_integer(1.into()),
        ))
    }

    pub fn contains(&self, p: &Polynomial) -> bool {
        self.normal_form(p).is_zero()
    }

    pub fn is_standard(&self, m: &Monomial) -> bool {
        !self.leading.iter().any(|l| l.divides(m))
    }

    /// True iff every variable has a pure power among the leading monomials.
    pub fn is_finite_dimensional(&self) -> bool {
        if self.is_unit() {
            return true;
        }
        (0..self.nvars()).all(|i| {
            self.leading
                .iter()
                .any(|m| matches!(m.pure_power(), Some((j, _)) if j == i))
        })
    }

    /// Monomials outside the staircase ideal, in increasing order.
    pub fn standard_monomials(&self) -> Result<Vec<Monomial>> {
        if !self.is_finite_dimensional() {
            return Err(Error::InfiniteDimensional);
        }
        if self.is_unit() {
            return Ok(Vec::new());
        }
        let n = self.nvars();
        let mut out = vec![Monomial::one(n)];
        let mut frontier = out.clone();
        while !frontier.is_empty() {
            let mut next: Vec<Monomial> = Vec::new();
            for m in &frontier {
                for i in 0..n {
                    let c = m.mul(&Monomial::var(n, i));
                    if self.is_standard(&c) && !next.contains(&c) {
                        next.push(c);
                    }
                }
            }
            out.extend(next.iter().cloned());
            frontier = next;
        }
        out.sort_by(|a, b| self.order.compare(a, b));
        Ok(out)
    }

    /// `dim K[x]/I`.
    pub fn dimension(&self) -> Result<usize> {
        Ok(self.standard_monomials()?.len())
    }

    /// Least `r` with `m^r ⊆ I`, `m` the maximal ideal at the origin.
    ///
    /// Fails with [`Error::NotLocal`] when no power of `m` lies in `I`, i.e. the
    /// quotient has points other than the origin.
    pub fn min_power_of_maximal_inside(&self) -> Result<u32> {
        let dim = self.dimension()?;
        if dim == 0 {
            return Ok(0);
        }
        // In a local algebra of dimension d the maximal ideal satisfies m^d = 0.
        let mut cache: HashMap<Monomial, bool> = HashMap::new();
        for r in 1..=dim as u32 {
            let all = monomials_of_degree(self.nvars(), r).into_iter().all(|m| {
                *cache
                    .entry(m.clone())
                    .or_insert_with(|| self.normal_form_of_monomial(&m).is_zero())
            });
            if all {
                return Ok(r);
            }
        }
        Err(Error::NotLocal)
    }
}
