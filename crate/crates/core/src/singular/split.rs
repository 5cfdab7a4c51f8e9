//! Splitting off the nondegenerate quadratic part of a function germ:
//! `p ∘ φ ≡ Σ λ_i y_i² + q(remaining variables) mod m^{N+1}` with `q ∈ m³`.
//!
//! The quadratic form is diagonalized over the rationals by completing squares,
//! keeping the nonzero diagonal scalars `λ_i` instead of taking square roots.
//! Higher-order terms involving a split variable are then removed one degree
//! at a time: if the degree-`d` part contains `y_i h_i` with `y_i` the first
//! split variable of the monomial, the substitution `y_i ↦ y_i − h_i/(2λ_i)`
//! removes it while changing only degrees above `d`.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational};
use crate::poly::{Monomial, Polynomial};

/// Result of the splitting procedure, valid modulo `m^{N+1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct SplitNormalForm {
    /// `N`.
    pub truncation: u32,
    /// Indices of the split variables, increasing.
    pub split_vars: Vec<usize>,
    /// `λ_i` for each split variable.
    pub lambdas: Vec<Rational>,
    /// Indices of the remaining variables, increasing.
    pub residual_vars: Vec<usize>,
    /// `q` over the remaining variables.
    pub residual: Polynomial,
    /// `Σ λ_i y_i² + q` over all variables.
    pub normal_form: Polynomial,
    /// Images `φ(x_i)`; `p ∘ φ ≡ normal_form mod m^{N+1}`.
    pub change: Vec<Polynomial>,
}

impl SplitNormalForm {
    /// Number of split variables `k`.
    pub fn rank(&self) -> usize {
        self.split_vars.len()
    }
}

/// Validates a germ at the origin: nonzero, no constant and no linear part.
pub fn check_germ(p: &Polynomial) -> Result<()> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !p.constant_term().is_zero() {
        return Err(Error::ConstantTerm {
            generator: p.to_string(),
        });
    }
    if !p.homogeneous_component(1).is_zero() {
        return Err(Error::LinearPart);
    }
    Ok(())
}

fn square(n: usize, i: usize) -> Monomial {
    let mut e = vec![0; n];
    e[i] = 2;
    Monomial::new(e)
}

fn product(n: usize, i: usize, j: usize) -> Monomial {
    let mut e = vec![0; n];
    e[i] += 1;
    e[j] += 1;
    Monomial::new(e)
}

fn compose_all(change: &[Polynomial], sigma: &[Polynomial], trunc: Option<u32>) -> Result<Vec<Polynomial>> {
    change.iter().map(|c| c.compose(sigma, trunc)).collect()
}

pub fn splitting_normal_form(p: &Polynomial, truncation: u32) -> Result<SplitNormalForm> {
    check_germ(p)?;
    if truncation < 3 {
        return Err(Error::TruncationTooLow { degree: truncation });
    }
    let vars = p.vars().clone();
    let n = vars.len();
    let identity: Vec<Polynomial> = (0..n).map(|i| Polynomial::var(&vars, i)).collect();
    let two = Rational::from_integer(2.into());

    // linear diagonalization of the quadratic part
    let mut change = identity.clone();
    let mut quad = p.homogeneous_component(2);
    let mut remaining: Vec<usize> = (0..n).collect();
    let mut split: Vec<(usize, Rational)> = Vec::new();
    loop {
        if let Some(pos) = remaining.iter().position(|&i| !quad.coeff(&square(n, i)).is_zero()) {
            let i = remaining.remove(pos);
            let a = quad.coeff(&square(n, i));
            let mut image = Polynomial::var(&vars, i);
            for &j in &remaining {
                let b = quad.coeff(&product(n, i, j));
                if !b.is_zero() {
                    image = &image - &Polynomial::var(&vars, j).scale(&(b / (&two * &a)));
                }
            }
            let mut sigma = identity.clone();
            sigma[i] = image;
            quad = quad.compose(&sigma, None)?;
            change = compose_all(&change, &sigma, None)?;
            split.push((i, a));
            continue;
        }
        let cross = remaining.iter().enumerate().find_map(|(a, &i)| {
            remaining[a + 1..]
                .iter()
                .find(|&&j| !quad.coeff(&product(n, i, j)).is_zero())
                .map(|&j| (i, j))
        });
        let Some((i, j)) = cross else { break };
        // x_j ↦ x_j + x_i turns b x_i x_j into b x_i² + b x_i x_j
        let mut sigma = identity.clone();
        sigma[j] = &Polynomial::var(&vars, j) + &Polynomial::var(&vars, i);
        quad = quad.compose(&sigma, None)?;
        change = compose_all(&change, &sigma, None)?;
    }
    split.sort_by_key(|(i, _)| *i);
    remaining.sort_unstable();
    let is_split: Vec<Option<usize>> = (0..n).map(|v| split.iter().position(|(i, _)| *i == v)).collect();

    // degree-by-degree completion of the squares
    let mut current = p.compose(&change, Some(truncation))?;
    for d in 3..=truncation {
        let part = current.homogeneous_component(d);
        let mut h: Vec<Polynomial> = vec![Polynomial::zero(&vars); split.len()];
        for (m, c) in part.terms() {
            let Some((v, k)) = (0..n).find_map(|v| match is_split[v] {
                Some(k) if m.exponents()[v] > 0 => Some((v, k)),
                _ => None,
            }) else {
                continue;
            };
            let mut e = m.exponents().to_vec();
            e[v] -= 1;
            h[k] = &h[k] + &Polynomial::monomial(&vars, Monomial::new(e), c.clone());
        }
        if h.iter().all(Polynomial::is_zero) {
            continue;
        }
        let mut sigma = identity.clone();
        for (k, (v, lambda)) in split.iter().enumerate() {
            if !h[k].is_zero() {
                sigma[*v] = &sigma[*v] - &h[k].scale(&(&two * lambda).recip());
            }
        }
        current = current.compose(&sigma, Some(truncation))?;
        change = compose_all(&change, &sigma, Some(truncation))?;
    }

    let mut squares = Polynomial::zero(&vars);
    for (v, lambda) in &split {
        squares = &squares + &Polynomial::monomial(&vars, square(n, *v), lambda.clone());
    }
    let rest = &current - &squares;
    if rest
        .terms()
        .any(|(m, _)| split.iter().any(|(v, _)| m.exponents()[*v] > 0))
        || rest.order().is_some_and(|o| o < 3)
    {
        return Err(Error::Invariant(
            "splitting left a split variable in the residual".into(),
        ));
    }
    if p.compose(&change, Some(truncation))? != current {
        return Err(Error::Invariant(
            "coordinate change does not reproduce the normal form".into(),
        ));
    }
    let mut linear = Matrix::zeros(n, n);
    for (i, img) in change.iter().enumerate() {
        for j in 0..n {
            linear[(i, j)] = img.coeff(&Monomial::var(n, j));
        }
    }
    if linear.inverse().is_none() {
        return Err(Error::Invariant("coordinate change is not invertible".into()));
    }
    let residual_set = vars.select(&remaining);
    let images: Vec<Polynomial> = (0..n)
        .map(|v| match remaining.iter().position(|&r| r == v) {
            Some(k) => Polynomial::var(&residual_set, k),
            None => Polynomial::zero(&residual_set),
        })
        .collect();
    let residual = rest.compose(&images, None)?;
    let (split_vars, lambdas) = split.into_iter().unzip();
    Ok(SplitNormalForm {
        truncation,
        split_vars,
        lambdas,
        residual_vars: remaining,
        residual,
        normal_form: current,
        change,
    })
}
