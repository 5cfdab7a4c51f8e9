//! Splitting a zero-dimensional quotient into local factors, one per rational
//! point, and reassembling factors as a direct product.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::groebner::{local_component, rational_points_from_basis, Ideal, LocalComponent, LocalizeOptions};
use crate::linalg::Rational;
use crate::poly::{MonomialOrder, VarSet};

use super::{ArtinAlgebra, SparseVec};

#[derive(Clone, Debug)]
pub struct LocalFactor {
    pub component: LocalComponent,
    pub algebra: ArtinAlgebra,
}

/// One local factor per rational point of `K[x]/I`. Fails if the quotient has
/// irrational points, naming the first coordinate whose multiplication operator
/// does not split.
pub fn decompose_local(ideal: &Ideal, order: &MonomialOrder, opts: &LocalizeOptions) -> Result<Vec<LocalFactor>> {
    let gb = ideal.groebner_basis(order)?;
    let total = gb.dimension()?;
    let points = rational_points_from_basis(ideal, &gb)?;
    if let Some(v) = points.incomplete_variables.first() {
        return Err(Error::IrrationalPoints { variable: v.clone() });
    }
    let mut factors = Vec::with_capacity(points.points.len());
    for (p, mult) in points.points.iter().zip(&points.multiplicities) {
        let component = local_component(ideal, p, order, opts)?;
        if component.dim != *mult {
            return Err(Error::Invariant(format!(
                "local factor has dimension {} but the joint eigenspace has dimension {mult}",
                component.dim
            )));
        }
        let algebra = ArtinAlgebra::from_groebner(&component.gb)?;
        factors.push(LocalFactor { component, algebra });
    }
    let sum: usize = factors.iter().map(|f| f.algebra.dim()).sum();
    if sum != total {
        return Err(Error::Invariant(format!(
            "local factor dimensions sum to {sum}, quotient has dimension {total}"
        )));
    }
    Ok(factors)
}

/// `S_1 × … × S_t` together with the orthogonal idempotents `e_k` (the unit of
/// the `k`-th factor).
pub fn direct_product(factors: &[ArtinAlgebra]) -> Result<(ArtinAlgebra, Vec<Vec<Rational>>)> {
    let d: usize = factors.iter().map(ArtinAlgebra::dim).sum();
    let mut offsets = Vec::with_capacity(factors.len());
    let mut acc = 0;
    for f in factors {
        offsets.push(acc);
        acc += f.dim();
    }
    let embed = |k: usize, v: &[Rational]| -> Vec<Rational> {
        let mut out = vec![Rational::zero(); d];
        for (i, c) in v.iter().enumerate() {
            out[offsets[k] + i] = c.clone();
        }
        out
    };
    let mut labels = Vec::with_capacity(d);
    let mut products: Vec<SparseVec> = vec![Vec::new(); d * d];
    let mut vars = VarSet::empty();
    let mut generators = Vec::new();
    let mut idempotents = Vec::with_capacity(factors.len());
    for (k, f) in factors.iter().enumerate() {
        let o = offsets[k];
        labels.extend(f.labels().iter().map(|l| format!("[{k}]{l}")));
        for i in 0..f.dim() {
            for j in 0..f.dim() {
                products[(o + i) * d + o + j] = f.basis_product(i, j).iter().map(|(l, c)| (o + l, c.clone())).collect();
            }
        }
        vars = vars.concat(f.vars());
        generators.extend(f.generator_images().iter().map(|g| embed(k, g)));
        idempotents.push(embed(k, f.unit()));
    }
    let mut unit = vec![Rational::zero(); d];
    for e in &idempotents {
        for (u, x) in unit.iter_mut().zip(e) {
            *u += x;
        }
    }
    let alg = ArtinAlgebra::assemble(labels, vars, None, products, unit, generators)?;
    Ok((alg, idempotents))
}
