//! Finite-dimensional commutative algebras given by structure constants.
//!
//! An [`ArtinAlgebra`] carries a basis, a sparse multiplication table, the
//! coordinates of the unit and of the distinguished generators `x̄_i`, and the
//! filtration by powers of the ideal `m̄ = (x̄_1, …, x̄_n)`. The algebra is local
//! exactly when that filtration reaches zero and `m̄` has codimension one.

mod decompose;
mod graded;
mod presentation;

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::GroebnerBasis;
use crate::linalg::{axpy, Matrix, Rational, Subspace};
use crate::poly::{Monomial, Polynomial, VarSet};

pub use decompose::{decompose_local, direct_product, LocalFactor};
pub use graded::{GradedAlgebra, PresentationDegree};
pub use presentation::{
    generator_count_with_exponent, minimal_generator_count, minimal_presentation, MinimalPresentation,
};

/// Sparse coordinate vector: `(basis index, nonzero coefficient)` pairs.
pub type SparseVec = Vec<(usize, Rational)>;

#[derive(Clone, Debug, PartialEq)]
pub struct ArtinAlgebra {
    labels: Vec<String>,
    vars: VarSet,
    monomials: Option<Vec<Monomial>>,
    products: Vec<SparseVec>,
    unit: Vec<Rational>,
    generators: Vec<Vec<Rational>>,
    /// `powers[k] = m̄^k`, listed until the sequence stabilizes.
    powers: Vec<Subspace>,
    local: bool,
}

/// Socle split into its part inside `m̄²` and a chosen complement.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleData {
    pub socle: Subspace,
    pub lsoc: Subspace,
    pub usoc: Subspace,
}

fn to_sparse(v: &[Rational]) -> SparseVec {
    v.iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(i, c)| (i, c.clone()))
        .collect()
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

impl ArtinAlgebra {
    /// The quotient `K[x]/I` on the standard monomials of a reduced basis.
    pub fn from_groebner(gb: &GroebnerBasis) -> Result<Self> {
        let basis = gb.standard_monomials()?;
        if basis.is_empty() {
            return Err(Error::ZeroAlgebra);
        }
        let d = basis.len();
        let index: HashMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let sparse_of = |p: &Polynomial| -> SparseVec {
            let mut v: SparseVec = p.terms().map(|(m, c)| (index[m], c.clone())).collect();
            v.sort_by_key(|(i, _)| *i);
            v
        };
        let mut products = vec![Vec::new(); d * d];
        for i in 0..d {
            for j in i..d {
                let prod = basis[i].mul(&basis[j]);
                let v = match index.get(&prod) {
                    Some(&k) => vec![(k, Rational::one())],
                    None => sparse_of(&gb.normal_form_of_monomial(&prod)),
                };
                products[j * d + i] = v.clone();
                products[i * d + j] = v;
            }
        }
        let n = gb.nvars();
        let vars = gb.vars().clone();
        let to_dense = |p: &Polynomial| -> Vec<Rational> {
            let mut v = vec![Rational::zero(); d];
            for (k, c) in sparse_of(p) {
                v[k] = c;
            }
            v
        };
        let unit = to_dense(&gb.normal_form(&Polynomial::one(&vars)));
        let generators = (0..n)
            .map(|i| to_dense(&gb.normal_form(&Polynomial::var(&vars, i))))
            .collect();
        let labels = basis.iter().map(|m| m.display(&vars)).collect();
        Self::assemble(labels, vars, Some(basis), products, unit, generators)
    }

    /// An algebra from an explicit multiplication table: `table[i][j]` holds the
    /// coordinates of `b_i b_j`. Associativity, commutativity and the unit law
    /// are checked.
    pub fn from_structure_constants(
        labels: Vec<String>,
        vars: VarSet,
        table: Vec<Vec<Vec<Rational>>>,
        unit: Vec<Rational>,
        generators: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let d = labels.len();
        if table.len() != d || table.iter().any(|r| r.len() != d || r.iter().any(|v| v.len() != d)) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: table.len(),
            });
        }
        if generators.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: generators.len(),
            });
        }
        let products = table.iter().flat_map(|row| row.iter().map(|v| to_sparse(v))).collect();
        Self::assemble(labels, vars, None, products, unit, generators)
    }

    fn assemble(
        labels: Vec<String>,
        vars: VarSet,
        monomials: Option<Vec<Monomial>>,
        products: Vec<SparseVec>,
        unit: Vec<Rational>,
        generators: Vec<Vec<Rational>>,
    ) -> Result<Self> {
        let d = labels.len();
        if d == 0 {
            return Err(Error::ZeroAlgebra);
        }
        if unit.len() != d || generators.iter().any(|g| g.len() != d) {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: unit.len(),
            });
        }
        let mut alg = ArtinAlgebra {
            labels,
            vars,
            monomials,
            products,
            unit,
            generators,
            powers: Vec::new(),
            local: false,
        };
        alg.verify_axioms()?;
        alg.compute_filtration()?;
        Ok(alg)
    }

    fn verify_axioms(&self) -> Result<()> {
        let d = self.dim();
        for i in 0..d {
            for j in 0..i {
                if self.products[i * d + j] != self.products[j * d + i] {
                    return Err(Error::Invariant(format!(
                        "multiplication is not commutative on basis pair ({i}, {j})"
                    )));
                }
            }
        }
        for i in 0..d {
            if self.mul(&self.unit, &unit_vector(d, i)) != unit_vector(d, i) {
                return Err(Error::Invariant(format!("unit does not fix basis element {i}")));
            }
        }
        let mut left = vec![Rational::zero(); d];
        let mut right = vec![Rational::zero(); d];
        for i in 0..d {
            for j in 0..d {
                let bij = &self.products[i * d + j];
                for k in 0..d {
                    // (b_i b_j) b_k against b_i (b_j b_k)
                    for (l, c) in bij {
                        for (m, e) in &self.products[l * d + k] {
                            left[*m] += c * e;
                        }
                    }
                    for (l, c) in &self.products[j * d + k] {
                        for (m, e) in &self.products[i * d + l] {
                            right[*m] += c * e;
                        }
                    }
                    if left != right {
                        return Err(Error::Invariant(format!(
                            "multiplication is not associative on basis triple ({i}, {j}, {k})"
                        )));
                    }
                    for x in left.iter_mut().chain(right.iter_mut()) {
                        if !x.is_zero() {
                            x.set_zero();
                        }
                    }
                }
            }
        }
        Ok(())
    }

    fn compute_filtration(&mut self) -> Result<()> {
        let d = self.dim();
        let mut powers = vec![Subspace::full(d)];
        loop {
            let last = powers.last().expect("nonempty");
            let mut vecs = Vec::new();
            for g in &self.generators {
                for v in last.basis() {
                    vecs.push(self.mul(g, v));
                }
            }
            let next = Subspace::span(d, vecs)?;
            let stable = next.dim() == last.dim();
            let zero = next.is_zero();
            if !stable {
                powers.push(next);
            }
            if stable || zero {
                break;
            }
        }
        self.local = powers.len() >= 2 && powers.last().is_some_and(Subspace::is_zero) && powers[1].dim() + 1 == d;
        self.powers = powers;
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn vars(&self) -> &VarSet {
        &self.vars
    }

    /// Standard monomials, when the algebra came from a Gröbner basis.
    pub fn basis_monomials(&self) -> Option<&[Monomial]> {
        self.monomials.as_deref()
    }

    pub fn unit(&self) -> &[Rational] {
        &self.unit
    }

    pub fn generator_images(&self) -> &[Vec<Rational>] {
        &self.generators
    }

    pub fn is_local(&self) -> bool {
        self.local
    }

    pub fn require_local(&self) -> Result<()> {
        if self.local {
            Ok(())
        } else {
            Err(Error::NotLocal)
        }
    }

    /// Coordinates of `b_i b_j`.
    pub fn basis_product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.products[i * self.dim() + j]
    }

    pub fn mul(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let d = self.dim();
        let mut out = vec![Rational::zero(); d];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.products[i * d + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Matrix of `z ↦ v z`.
    pub fn multiplication_matrix(&self, v: &[Rational]) -> Matrix {
        let d = self.dim();
        let mut m = Matrix::zeros(d, d);
        for (i, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for j in 0..d {
                for (k, c) in &self.products[i * d + j] {
                    m[(*k, j)] += a * c;
                }
            }
        }
        m
    }

    /// Evaluates a polynomial at the generator images.
    pub fn eval_polynomial(&self, p: &Polynomial) -> Result<Vec<Rational>> {
        if p.nvars() != self.generators.len() {
            return Err(Error::DimensionMismatch {
                expected: self.generators.len(),
                found: p.nvars(),
            });
        }
        let mut powers: Vec<Vec<Vec<Rational>>> = self.generators.iter().map(|_| vec![self.unit.clone()]).collect();
        let mut out = vec![Rational::zero(); self.dim()];
        for (m, c) in p.terms() {
            let mut t = self.unit.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                while powers[i].len() <= e as usize {
                    let next = self.mul(powers[i].last().expect("nonempty"), &self.generators[i]);
                    powers[i].push(next);
                }
                if e > 0 {
                    t = self.mul(&t, &powers[i][e as usize]);
                }
            }
            axpy(&mut out, c, &t);
        }
        Ok(out)
    }

    /// `m̄^k`; zero beyond the computed filtration when local.
    pub fn power(&self, k: usize) -> Subspace {
        match self.powers.get(k) {
            Some(s) => s.clone(),
            None if self.local => Subspace::zero(self.dim()),
            None => self.powers.last().expect("nonempty").clone(),
        }
    }

    /// `[m̄^0, m̄^1, …]` ending with the zero space for local algebras.
    pub fn filtration(&self) -> &[Subspace] {
        &self.powers
    }

    pub fn maximal_ideal(&self) -> Subspace {
        self.power(1)
    }

    /// Least `N` with `m̄^N = 0`.
    pub fn nilpotency_index(&self) -> Result<usize> {
        self.require_local()?;
        Ok(self.powers.len() - 1)
    }

    /// `dim m̄/m̄²`.
    pub fn embedding_dim(&self) -> Result<usize> {
        self.require_local()?;
        Ok(self.power(1).dim() - self.power(2).dim())
    }

    /// `{z : z X = 0}`.
    pub fn annihilator(&self, sub: &Subspace) -> Result<Subspace> {
        let d = self.dim();
        if sub.ambient_dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: sub.ambient_dim(),
            });
        }
        if sub.is_zero() {
            return Ok(Subspace::full(d));
        }
        let mut rows = Vec::with_capacity(sub.dim() * d);
        for s in sub.basis() {
            let m = self.multiplication_matrix(s);
            for r in 0..d {
                rows.push(m.row(r).to_vec());
            }
        }
        Ok(Matrix::from_rows(d, rows)?.kernel_basis())
    }

    /// Ideal generated by the given elements.
    pub fn ideal_generated(&self, elems: &[Vec<Rational>]) -> Result<Subspace> {
        let d = self.dim();
        let mut vecs = Vec::new();
        for e in elems {
            for i in 0..d {
                vecs.push(self.mul(e, &unit_vector(d, i)));
            }
        }
        Subspace::span(d, vecs)
    }

    /// Basis indices that are natural degree-one coordinates: degree-one
    /// standard monomials, or basis vectors in `m̄ \ m̄²` for abstract algebras.
    fn degree_one_coordinates(&self) -> Vec<usize> {
        match &self.monomials {
            Some(ms) => (0..ms.len()).filter(|&i| ms[i].degree() == 1).collect(),
            None => {
                let (m1, m2) = (self.power(1), self.power(2));
                (0..self.dim())
                    .filter(|&i| {
                        let e = unit_vector(self.dim(), i);
                        m1.contains(&e) && !m2.contains(&e)
                    })
                    .collect()
            }
        }
    }

    /// `Soc = Ann m̄`, `LSoc = Soc ∩ m̄²` and a complement `USoc` chosen by echelon
    /// pivots preferring degree-one coordinates.
    pub fn socle_data(&self) -> Result<SocleData> {
        self.require_local()?;
        let socle = self.annihilator(&self.power(1))?;
        let lsoc = socle.intersection(&self.power(2))?;
        let usoc = lsoc.complement_in_with_priority(&socle, &self.degree_one_coordinates())?;
        Ok(SocleData { socle, lsoc, usoc })
    }

    /// Kronecker product of structure constants. Generators are those of
    /// `self` followed by those of `other`.
    pub fn tensor_product(&self, other: &ArtinAlgebra) -> Result<ArtinAlgebra> {
        let (da, db) = (self.dim(), other.dim());
        let d = da * db;
        let labels = (0..d)
            .map(|k| {
                let (a, b) = (&self.labels[k / db], &other.labels[k % db]);
                match (a.as_str(), b.as_str()) {
                    ("1", _) => b.clone(),
                    (_, "1") => a.clone(),
                    _ => format!("{a}*{b}"),
                }
            })
            .collect();
        let kron = |u: &[Rational], v: &[Rational]| -> Vec<Rational> {
            let mut out = Vec::with_capacity(d);
            for a in u {
                for b in v {
                    out.push(a * b);
                }
            }
            out
        };
        let mut products = Vec::with_capacity(d * d);
        for p in 0..d {
            for q in 0..d {
                let (i1, j1, i2, j2) = (p / db, p % db, q / db, q % db);
                let mut v: SparseVec = Vec::new();
                for (k, c) in self.basis_product(i1, i2) {
                    for (l, e) in other.basis_product(j1, j2) {
                        v.push((k * db + l, c * e));
                    }
                }
                v.sort_by_key(|(i, _)| *i);
                products.push(v);
            }
        }
        let unit = kron(&self.unit, &other.unit);
        let mut generators: Vec<Vec<Rational>> = self.generators.iter().map(|g| kron(g, &other.unit)).collect();
        generators.extend(other.generators.iter().map(|g| kron(&self.unit, g)));
        let monomials = match (&self.monomials, &other.monomials) {
            (Some(a), Some(b)) => Some((0..d).map(|k| a[k / db].concat(&b[k % db])).collect()),
            _ => None,
        };
        Self::assemble(
            labels,
            self.vars.concat(&other.vars),
            monomials,
            products,
            unit,
            generators,
        )
    }

    /// Same algebra expressed in a new basis: column `j` of `p` holds the old
    /// coordinates of new basis vector `j`.
    pub fn change_basis(&self, p: &Matrix, labels: Vec<String>) -> Result<ArtinAlgebra> {
        let d = self.dim();
        let inv = p
            .inverse()
            .ok_or_else(|| Error::Invariant("basis change matrix is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..d).map(|j| p.column(j)).collect();
        let mut products = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                products.push(to_sparse(&inv.mul_vec(&self.mul(&cols[i], &cols[j]))?));
            }
        }
        let unit = inv.mul_vec(&self.unit)?;
        let generators = self
            .generators
            .iter()
            .map(|g| inv.mul_vec(g))
            .collect::<Result<Vec<_>>>()?;
        Self::assemble(labels, self.vars.clone(), None, products, unit, generators)
    }

    /// The algebra viewed with a different set of distinguished generators.
    pub fn with_generators(&self, vars: VarSet, generators: Vec<Vec<Rational>>) -> Result<ArtinAlgebra> {
        if generators.len() != vars.len() {
            return Err(Error::DimensionMismatch {
                expected: vars.len(),
                found: generators.len(),
            });
        }
        Self::assemble(
            self.labels.clone(),
            vars,
            None,
            self.products.clone(),
            self.unit.clone(),
            generators,
        )
    }

    /// Index of a standard monomial in the basis.
    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        self.monomials.as_ref()?.iter().position(|x| x == m)
    }
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::groebner::Ideal;
    use crate::linalg::rat;
    use crate::poly::MonomialOrder;

    pub(crate) fn algebra(gens: &str, vars: &[&str]) -> ArtinAlgebra {
        let v = VarSet::new(vars.iter().copied()).unwrap();
        let gb = Ideal::parse(gens, &v)
            .unwrap()
            .groebner_basis(&MonomialOrder::degrevlex(v.len()))
            .unwrap();
        ArtinAlgebra::from_groebner(&gb).unwrap()
    }

    fn span_of_labels(a: &ArtinAlgebra, labels: &[&str]) -> Subspace {
        let vecs = labels
            .iter()
            .map(|l| unit_vector(a.dim(), a.labels().iter().position(|x| x == l).unwrap()))
            .collect();
        Subspace::span(a.dim(), vecs).unwrap()
    }

    #[test]
    fn example_algebra_table() {
        let a = algebra("x^2, y^3, x*y^2", &["x", "y"]);
        assert_eq!(a.dim(), 5);
        assert!(a.is_local());
        let xy = a.mul(&a.generator_images()[0], &a.generator_images()[1]);
        assert_eq!(xy, unit_vector(5, a.labels().iter().position(|l| l == "x*y").unwrap()));
        assert_eq!(a.nilpotency_index().unwrap(), 3);
        assert_eq!(a.embedding_dim().unwrap(), 2);
    }

    #[test]
    fn field_is_local_of_dim_one() {
        let a = algebra("x", &["x"]);
        assert_eq!(a.dim(), 1);
        assert!(a.is_local());
        assert_eq!(a.nilpotency_index().unwrap(), 1);
        let k = algebra("", &[]);
        assert_eq!(k.dim(), 1);
        assert!(k.is_local());
    }

    #[test]
    fn annihilators() {
        let a = algebra("x^2", &["x"]);
        let m = a.maximal_ideal();
        assert_eq!(a.annihilator(&m).unwrap(), m);
        assert!(a.annihilator(&Subspace::full(a.dim())).unwrap().is_zero());

        let b = algebra("x^2, y^3, x*y^2", &["x", "y"]);
        assert_eq!(
            b.annihilator(&b.maximal_ideal()).unwrap(),
            span_of_labels(&b, &["x*y", "y^2"])
        );
    }

    #[test]
    fn socle_examples() {
        let a = algebra("x^2, y^3, x*y^2", &["x", "y"]);
        let s = a.socle_data().unwrap();
        assert_eq!((s.socle.dim(), s.lsoc.dim(), s.usoc.dim()), (2, 2, 0));

        let b = algebra("x^2, x*y, y^3", &["x", "y"]);
        let s = b.socle_data().unwrap();
        assert_eq!(s.socle, span_of_labels(&b, &["x", "y^2"]));
        assert_eq!(s.lsoc, span_of_labels(&b, &["y^2"]));
        assert_eq!(s.usoc, span_of_labels(&b, &["x"]));

        let c = algebra("x^2", &["x"]);
        let s = c.socle_data().unwrap();
        assert_eq!((s.socle.dim(), s.lsoc.dim(), s.usoc.dim()), (1, 0, 1));
    }

    #[test]
    fn non_local_detected() {
        let a = algebra("x^2 - x^3", &["x"]);
        assert_eq!(a.dim(), 3);
        assert!(!a.is_local());
        assert_eq!(a.socle_data(), Err(Error::NotLocal));
    }

    #[test]
    fn tensor_products() {
        let a = algebra("x^2, y^3, x*y^2", &["x", "y"]);
        let b = algebra("z^2", &["z"]);
        let t = a.tensor_product(&b).unwrap();
        assert_eq!(t.dim(), 10);
        assert!(t.is_local());
        let k = algebra("", &[]);
        let ka = k.tensor_product(&a).unwrap();
        assert_eq!(ka.dim(), 5);
        assert_eq!(ka.labels(), a.labels());
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(ka.basis_product(i, j), a.basis_product(i, j));
            }
        }
    }

    #[test]
    fn tensor_matches_joint_quotient() {
        // K[x1,x2]/(x1,x2)^2 ⊗ K[x3]/(x3^2) against K[x1,x2,x3]/(x1^2,x1x2,x2^2,x3^2)
        let a = algebra("x1^2, x1*x2, x2^2", &["x1", "x2"]);
        let b = algebra("x3^2", &["x3"]);
        let t = a.tensor_product(&b).unwrap();
        let j = algebra("x1^2, x1*x2, x2^2, x3^2", &["x1", "x2", "x3"]);
        assert_eq!(t.dim(), j.dim());
        let tm = t.basis_monomials().unwrap();
        let perm: Vec<usize> = tm.iter().map(|m| j.monomial_index(m).unwrap()).collect();
        for p in 0..t.dim() {
            for q in 0..t.dim() {
                let mapped: SparseVec = t
                    .basis_product(p, q)
                    .iter()
                    .map(|(k, c)| (perm[*k], c.clone()))
                    .collect();
                let mut mapped = mapped;
                mapped.sort_by_key(|(i, _)| *i);
                assert_eq!(mapped.as_slice(), j.basis_product(perm[p], perm[q]));
            }
        }
    }

    #[test]
    fn structure_constants_are_checked() {
        let v = VarSet::new(["x"]).unwrap();
        // b1*b1 = b0 but b0 is the unit: K[x]/(x^2 - 1) is fine
        let ok = ArtinAlgebra::from_structure_constants(
            vec!["1".into(), "x".into()],
            v.clone(),
            vec![
                vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
                vec![vec![rat(0), rat(1)], vec![rat(1), rat(0)]],
            ],
            vec![rat(1), rat(0)],
            vec![vec![rat(0), rat(1)]],
        )
        .unwrap();
        assert!(!ok.is_local());
        // non-commutative table
        let bad = ArtinAlgebra::from_structure_constants(
            vec!["1".into(), "x".into()],
            v,
            vec![
                vec![vec![rat(1), rat(0)], vec![rat(0), rat(1)]],
                vec![vec![rat(0), rat(0)], vec![rat(0), rat(0)]],
            ],
            vec![rat(1), rat(0)],
            vec![vec![rat(0), rat(1)]],
        );
        assert!(matches!(bad, Err(Error::Invariant(_))));
    }

    #[test]
    fn eval_polynomial_matches_normal_form() {
        let a = algebra("x^2, y^3, x*y^2", &["x", "y"]);
        let p = Polynomial::parse("3 + x*y - 2*y^2 + x^5", a.vars()).unwrap();
        let v = a.eval_polynomial(&p).unwrap();
        let l = |s: &str| a.labels().iter().position(|x| x == s).unwrap();
        assert_eq!(v[l("1")], rat(3));
        assert_eq!(v[l("x*y")], rat(1));
        assert_eq!(v[l("y^2")], rat(-2));
    }
}
