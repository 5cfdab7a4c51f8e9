//! Sparse multivariate polynomials with rational coefficients.
//!
//! Terms are kept in a map from exponent vector to a nonzero coefficient. The
//! Gröbner engine re-sorts terms under the active [`MonomialOrder`]; the
//! polynomial itself is order-agnostic, so the same value can be used under
//! several orders.
//!
//! Power series never appear symbolically: every series computation in the
//! crate works on truncations, see [`Polynomial::truncate`].

mod monomial;
mod order;
mod parse;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{format_rational, Rational};

pub use monomial::{monomials_of_degree, Monomial, VarSet};
pub use order::{MonomialOrder, OrderKind};
pub use parse::parse_polynomial_list;

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    vars: VarSet,
    terms: BTreeMap<Monomial, Rational>,
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial({})", self)
    }
}

impl Polynomial {
    pub fn zero(vars: &VarSet) -> Self {
        Polynomial {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &VarSet, c: Rational) -> Self {
        Self::monomial(vars, Monomial::one(vars.len()), c)
    }

    pub fn one(vars: &VarSet) -> Self {
        Self::constant(vars, Rational::one())
    }

    pub fn var(vars: &VarSet, i: usize) -> Self {
        Self::monomial(vars, Monomial::var(vars.len(), i), Rational::one())
    }

    pub fn monomial(vars: &VarSet, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), vars.len(), "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial {
            vars: vars.clone(),
            terms,
        }
    }

    /// Collects terms, summing repeated monomials and dropping zeros.
    pub fn from_terms<I>(vars: &VarSet, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut p = Polynomial::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn parse(text: &str, vars: &VarSet) -> Result<Self> {
        parse::parse_polynomial(text, vars)
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(&Monomial::one(self.nvars()))
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &Polynomial) -> Result<()> {
        if self.vars.same(&other.vars) {
            Ok(())
        } else {
            Err(Error::VarSetMismatch)
        }
    }

    pub fn checked_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_vars(other)?;
        let mut acc: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                *acc.entry(ma.mul(mb)).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(Polynomial {
            vars: self.vars.clone(),
            terms: acc,
        })
    }

    pub fn scale(&self, c: &Rational) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.vars);
        }
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, x)| (m.clone(), x * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut out = Polynomial::one(&self.vars);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Least total degree of a term (the order at the origin); `None` stands
    /// for infinity and is returned for the zero polynomial.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Drops all terms of total degree greater than `deg`.
    pub fn truncate(&self, deg: u32) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= deg)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Polynomial {
        let mut out = Polynomial::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.exponents()[var];
            if e == 0 {
                continue;
            }
            let mut ex = m.exponents().to_vec();
            ex[var] -= 1;
            out.terms
                .insert(Monomial::new(ex), c * Rational::from_integer(e.into()));
        }
        out
    }

    pub fn derivative_by_name(&self, name: &str) -> Result<Polynomial> {
        Ok(self.partial_derivative(self.vars.require(name)?))
    }

    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exponents()) {
                for _ in 0..e {
                    t *= x;
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `x_i ↦ images[i]` for every variable. The images may live over
    /// a different variable set, which becomes the variable set of the result.
    /// With `truncate_at = Some(d)` every intermediate product is truncated at
    /// degree `d`.
    pub fn compose(&self, images: &[Polynomial], truncate_at: Option<u32>) -> Result<Polynomial> {
        if images.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.vars.clone(),
            None => VarSet::empty(),
        };
        if images.iter().any(|p| !p.vars.same(&target)) {
            return Err(Error::VarSetMismatch);
        }
        let trunc = |p: Polynomial| match truncate_at {
            Some(d) => p.truncate(d),
            None => p,
        };
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|_| vec![Polynomial::one(&target)]).collect();
        let mut out = Polynomial::zero(&target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(&target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = trunc(powers[i].last().expect("nonempty") * &images[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = trunc(&t * &powers[i][e as usize]);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Substitutes the listed variables, leaving the others fixed.
    pub fn substitute(&self, map: &[(usize, Polynomial)]) -> Result<Polynomial> {
        let mut images: Vec<Polynomial> = (0..self.nvars()).map(|i| Polynomial::var(&self.vars, i)).collect();
        for (i, p) in map {
            if *i >= self.nvars() {
                return Err(Error::DimensionMismatch {
                    expected: self.nvars(),
                    found: *i,
                });
            }
            self.check_vars(p)?;
            images[*i] = p.clone();
        }
        self.compose(&images, None)
    }

    /// Translates coordinates so that `point` becomes the origin: `x_i ↦ x_i + a_i`.
    pub fn shift(&self, point: &[Rational]) -> Result<Polynomial> {
        if point.len() != self.nvars() {
            return Err(Error::DimensionMismatch {
                expected: self.nvars(),
                found: point.len(),
            });
        }
        let images: Vec<Polynomial> = point
            .iter()
            .enumerate()
            .map(|(i, a)| &Polynomial::var(&self.vars, i) + &Polynomial::constant(&self.vars, a.clone()))
            .collect();
        self.compose(&images, None)
    }

    /// Re-expresses the polynomial over another variable set, mapping variable
    /// `i` of `self` to variable `index_map[i]` of `target`.
    pub fn rename(&self, target: &VarSet, index_map: &[usize]) -> Result<Polynomial> {
        let images: Vec<Polynomial> = index_map.iter().map(|&j| Polynomial::var(target, j)).collect();
        self.compose(&images, None)
    }

    /// Indices of variables that occur in some term.
    pub fn support_variables(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exponents()[i] > 0))
            .collect()
    }

    /// The leading monomial and coefficient under `order`.
    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().max_by(|a, b| order.compare(a.0, b.0))
    }

    /// Terms sorted by decreasing total degree, then decreasing exponent
    /// vector; this is the printing order.
    fn display_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut t: Vec<_> = self.terms.iter().collect();
        t.sort_by(|a, b| b.0.degree().cmp(&a.0.degree()).then_with(|| b.0.cmp(a.0)));
        t
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.display_terms().into_iter().enumerate() {
            let negative = *c < Rational::zero();
            let abs = if negative { -c.clone() } else { c.clone() };
            match (i, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{}", m.display(&self.vars))?;
            } else {
                write!(f, "{}*{}", format_rational(&abs), m.display(&self.vars))?;
            }
        }
        Ok(())
    }
}

// Operator impls assume matching variable sets and panic otherwise; use the
// `checked_*` methods on untrusted input.
impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.checked_add(rhs).expect("polynomials over different variable sets")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.checked_sub(rhs).expect("polynomials over different variable sets")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.checked_mul(rhs).expect("polynomials over different variable sets")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ratio};

    fn xy() -> VarSet {
        VarSet::new(["x", "y"]).unwrap()
    }

    fn p(s: &str) -> Polynomial {
        Polynomial::parse(s, &xy()).unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(&p("x+y") * &p("x-y"), p("x^2-y^2"));
        assert!((&p("x^3+2*y") * &Polynomial::zero(&xy())).is_zero());
        assert_eq!(p("x+y").pow(2), p("x^2+2*x*y+y^2"));
    }

    #[test]
    fn mismatched_vars_rejected() {
        let other = VarSet::new(["x", "z"]).unwrap();
        let q = Polynomial::var(&other, 0);
        assert_eq!(p("x").checked_add(&q), Err(Error::VarSetMismatch));
        assert_eq!(p("x").checked_mul(&q), Err(Error::VarSetMismatch));
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(p("x^3+y^5").partial_derivative(0), p("3*x^2"));
        assert!(p("7").partial_derivative(0).is_zero());
        assert_eq!(p("x^3*y^3").derivative_by_name("y").unwrap(), p("3*x^3*y^2"));
        assert_eq!(p("x").derivative_by_name("z"), Err(Error::UnknownVariable("z".into())));
    }

    #[test]
    fn order_examples() {
        assert_eq!(p("x^2 - x^3").order(), Some(2));
        assert_eq!(Polynomial::zero(&xy()).order(), None);
        assert_eq!(p("y^5 + x^6").order(), Some(5));
    }

    #[test]
    fn substitution_examples() {
        assert_eq!(p("x^2").substitute(&[(0, p("x+y"))]).unwrap(), p("x^2+2*x*y+y^2"));
        assert_eq!(p("x").substitute(&[(0, p("x"))]).unwrap(), p("x"));
        assert_eq!(
            p("x^2+2*x*y+y^2+y^3").substitute(&[(0, p("x-y"))]).unwrap(),
            p("x^2+y^3")
        );
    }

    #[test]
    fn truncation_examples() {
        assert_eq!(p("x + x^3").truncate(2), p("x"));
        assert_eq!(p("x^2*y + 1").truncate(10), p("x^2*y + 1"));
        assert_eq!(p("(1+x)^3").truncate(1), p("1 + 3*x"));
    }

    #[test]
    fn shift_and_eval() {
        let q = p("x^2 - x^3");
        assert_eq!(q.eval(&[rat(1), rat(0)]).unwrap(), rat(0));
        let s = q.shift(&[rat(1), rat(0)]).unwrap();
        assert_eq!(s, p("-x^3 - 2*x^2 - x"));
        assert_eq!(s.order(), Some(1));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(p("3/4*x^2*y^4 - x^3 + 2").to_string(), "3/4*x^2*y^4 - x^3 + 2");
        assert_eq!(p("-y + x").to_string(), "x - y");
        assert_eq!(Polynomial::zero(&xy()).to_string(), "0");
        assert_eq!(p("-1/2*x").to_string(), "-1/2*x");
        assert_eq!(p("x").scale(&ratio(-1, 3)).to_string(), "-1/3*x");
    }
}
