//! The derivation algebra `Der S` of a quotient `S = K[x]/I`.
//!
//! A derivation is fixed by the images `D(x̄_i)`, and a choice of images extends
//! to a derivation of `S` exactly when `Σ_i (∂g/∂x_i)(x̄)·D(x̄_i) = 0` for every
//! element `g` of a Gröbner basis of `I`. The solution space of this linear
//! system is extended to operators on the standard monomial basis by the
//! Leibniz rule.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{Matrix, Rational, SparseEchelon};
use crate::poly::Monomial;

use super::{Functional, LieAlgebraRep, SparseVec};

fn sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

/// `Der S` for `S` built by [`ArtinAlgebra::from_groebner`] from `gb`.
///
/// The basis is indexed by the free unknowns of the linear system; the basis
/// derivation for unknown `(i, k)` sends `x̄_i` to a vector with coordinate 1 at
/// `b_k`.
pub fn compute_derivations(s: &ArtinAlgebra, gb: &GroebnerBasis) -> Result<LieAlgebraRep> {
    let standard = gb.standard_monomials()?;
    if s.basis_monomials() != Some(standard.as_slice()) || s.vars() != gb.vars() {
        return Err(Error::BasisMismatch);
    }
    let n = gb.nvars();
    let d = s.dim();
    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for g in gb.elements() {
        let blocks: Vec<Matrix> = (0..n)
            .map(|i| Ok(s.multiplication_matrix(&s.eval_polynomial(&g.partial_derivative(i))?)))
            .collect::<Result<_>>()?;
        for r in 0..d {
            let mut row = Vec::with_capacity(n * d);
            for b in &blocks {
                row.extend_from_slice(b.row(r));
            }
            rows.push(row);
        }
    }
    let (kernel, free) = Matrix::from_rows(n * d, rows)?.kernel_vectors();

    // b_j = x̄^a, so D(b_j) = Σ_i a_i x̄^{a - e_i} D(x̄_i)
    let lower: Vec<Vec<(usize, usize, u32)>> = standard
        .iter()
        .map(|m| {
            (0..n)
                .filter(|&i| m.exponents()[i] > 0)
                .map(|i| {
                    let mut ex = m.exponents().to_vec();
                    ex[i] -= 1;
                    let idx = s
                        .monomial_index(&Monomial::new(ex))
                        .expect("divisors of standard monomials are standard");
                    (i, idx, m.exponents()[i])
                })
                .collect::<Vec<_>>()
        })
        .collect();
    let mut operators = Vec::with_capacity(kernel.len());
    for v in &kernel {
        let mut op = Matrix::zeros(d, d);
        for (j, terms) in lower.iter().enumerate() {
            for &(i, idx, a) in terms {
                let factor = Rational::from_integer(a.into());
                for (k, c) in v[i * d..(i + 1) * d].iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let fc = &factor * c;
                    for (r, p) in s.basis_product(idx, k) {
                        op[(*r, j)] += &fc * p;
                    }
                }
            }
        }
        if !is_derivation(s, &op) {
            return Err(Error::Invariant("assembled operator violates the Leibniz rule".into()));
        }
        operators.push(op);
    }
    let chart = free
        .iter()
        .map(|&f| Functional {
            vector: sparse(&s.generator_images()[f / d]),
            row: f % d,
        })
        .collect();
    LieAlgebraRep::assemble(d, operators, chart)
}

/// Exhaustive check of `D(1) = 0` and `D(b_i b_j) = D(b_i) b_j + b_i D(b_j)` on
/// all pairs of basis vectors.
pub fn is_derivation(s: &ArtinAlgebra, op: &Matrix) -> bool {
    let d = s.dim();
    if op.rows() != d || op.cols() != d {
        return false;
    }
    match op.mul_vec(s.unit()) {
        Ok(v) if v.iter().all(Zero::is_zero) => {}
        _ => return false,
    }
    let columns: Vec<SparseVec> = (0..d).map(|j| sparse(&op.column(j))).collect();
    let mut diff = vec![Rational::zero(); d];
    for i in 0..d {
        for j in i..d {
            for x in diff.iter_mut() {
                x.set_zero();
            }
            for (k, c) in s.basis_product(i, j) {
                for (r, x) in &columns[*k] {
                    diff[*r] += c * x;
                }
            }
            for (l, x) in &columns[i] {
                for (r, p) in s.basis_product(*l, j) {
                    diff[*r] -= x * p;
                }
            }
            for (l, x) in &columns[j] {
                for (r, p) in s.basis_product(i, *l) {
                    diff[*r] -= x * p;
                }
            }
            if diff.iter().any(|x| !x.is_zero()) {
                return false;
            }
        }
    }
    true
}

/// `Der S` straight from the structure constants: all `d²` matrix entries are
/// unknowns constrained by the Leibniz rule on every pair of basis vectors.
///
/// Independent of any presentation; intended for small `d`.
pub fn derivations_from_structure(s: &ArtinAlgebra) -> Result<LieAlgebraRep> {
    let d = s.dim();
    // unknown D[r][c] has index r·d + c
    let mut echelon = SparseEchelon::new();
    for i in 0..d {
        for j in i..d {
            let mut eqs: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); d];
            let add = |eq: &mut BTreeMap<usize, Rational>, unknown: usize, c: Rational| {
                let e = eq.entry(unknown).or_insert_with(Rational::zero);
                *e += c;
            };
            // D(b_i b_j) = Σ_k c_ijk D(:,k)
            for (k, c) in s.basis_product(i, j) {
                for (r, eq) in eqs.iter_mut().enumerate() {
                    add(eq, r * d + k, c.clone());
                }
            }
            // D(b_i) b_j = Σ_l D[l][i] b_l b_j
            for l in 0..d {
                for (r, p) in s.basis_product(l, j) {
                    add(&mut eqs[*r], l * d + i, -p.clone());
                }
                for (r, p) in s.basis_product(i, l) {
                    add(&mut eqs[*r], l * d + j, -p.clone());
                }
            }
            for eq in eqs {
                echelon.insert(eq);
            }
        }
    }
    let mut unit_eqs: Vec<BTreeMap<usize, Rational>> = vec![BTreeMap::new(); d];
    for (c, u) in s.unit().iter().enumerate() {
        if u.is_zero() {
            continue;
        }
        for (r, eq) in unit_eqs.iter_mut().enumerate() {
            eq.insert(r * d + c, u.clone());
        }
    }
    for eq in unit_eqs {
        echelon.insert(eq);
    }
    let (kernel, _) = echelon.to_matrix(d * d).kernel_vectors();
    let ops = kernel
        .into_iter()
        .map(|v| Matrix::from_rows(d, v.chunks(d.max(1)).map(<[Rational]>::to_vec).collect()))
        .collect::<Result<Vec<_>>>()?;
    LieAlgebraRep::from_operators(d, &ops)
}
