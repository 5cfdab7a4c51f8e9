//! Rational points of a zero-dimensional ideal from the eigenvalues of the
//! coordinate multiplication operators.

use std::collections::HashMap;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};
use crate::poly::{Monomial, MonomialOrder};

use super::{univariate, GroebnerBasis, Ideal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    /// Rational zeros in increasing lexicographic order.
    pub points: Vec<Vec<Rational>>,
    /// Dimension of the joint generalized eigenspace at each point, i.e. the
    /// dimension of the local factor there.
    pub multiplicities: Vec<usize>,
    /// True iff every coordinate operator has only rational eigenvalues, so
    /// that `points` lists all zeros over the algebraic closure.
    pub complete: bool,
    /// Variables whose multiplication operator has an irrational eigenvalue.
    pub incomplete_variables: Vec<String>,
}

/// Matrix of multiplication by `x_var` on the standard monomial basis.
pub(crate) fn multiplication_matrix(gb: &GroebnerBasis, basis: &[Monomial], var: usize) -> Matrix {
    let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let d = basis.len();
    let mut m = Matrix::zeros(d, d);
    let x = Monomial::var(gb.nvars(), var);
    for (j, b) in basis.iter().enumerate() {
        let nf = gb.normal_form_of_monomial(&b.mul(&x));
        for (t, c) in nf.terms() {
            m[(index[t], j)] = c.clone();
        }
    }
    m
}

fn generalized_eigenspace(m: &Matrix, a: &Rational) -> Subspace {
    let d = m.rows();
    let mut b = m.sub(&Matrix::identity(d).scaled(a)).expect("square");
    let mut e = 1;
    while e < d {
        b = b.mul(&b).expect("square");
        e *= 2;
    }
    b.kernel_basis()
}

pub fn rational_points(ideal: &Ideal) -> Result<PointSet> {
    let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(ideal.nvars()))?;
    rational_points_from_basis(ideal, &gb)
}

pub(crate) fn rational_points_from_basis(ideal: &Ideal, gb: &GroebnerBasis) -> Result<PointSet> {
    let basis = gb.standard_monomials()?;
    let d = basis.len();
    let n = ideal.nvars();
    if d == 0 {
        return Ok(PointSet {
            points: Vec::new(),
            multiplicities: Vec::new(),
            complete: true,
            incomplete_variables: Vec::new(),
        });
    }
    let mut incomplete = Vec::new();
    let mut eigen: Vec<Vec<(Rational, Subspace)>> = Vec::with_capacity(n);
    for i in 0..n {
        let m = multiplication_matrix(gb, &basis, i);
        let cp = m.charpoly()?;
        let sf = univariate::square_free_part(&cp);
        let roots = univariate::rational_roots(&sf);
        if Some(roots.len()) != univariate::degree(&sf) {
            incomplete.push(ideal.vars().name(i).to_string());
        }
        eigen.push(
            roots
                .into_iter()
                .map(|a| {
                    let space = generalized_eigenspace(&m, &a);
                    (a, space)
                })
                .collect(),
        );
    }

    let mut found: Vec<(Vec<Rational>, usize)> = Vec::new();
    let mut stack: Vec<(Vec<Rational>, Subspace)> = vec![(Vec::new(), Subspace::full(d))];
    while let Some((prefix, space)) = stack.pop() {
        let i = prefix.len();
        if i == n {
            found.push((prefix, space.dim()));
            continue;
        }
        for (a, e) in &eigen[i] {
            let next = space.intersection(e)?;
            if next.dim() > 0 {
                let mut p = prefix.clone();
                p.push(a.clone());
                stack.push((p, next));
            }
        }
    }
    found.sort();
    for (p, _) in &found {
        for g in ideal.generators() {
            if !g.eval(p)?.is_zero() {
                return Err(Error::Invariant(format!("eigenvalue tuple is not a zero of `{g}`")));
            }
        }
    }
    Ok(PointSet {
        complete: incomplete.is_empty(),
        incomplete_variables: incomplete,
        multiplicities: found.iter().map(|(_, m)| *m).collect(),
        points: found.into_iter().map(|(p, _)| p).collect(),
    })
}
