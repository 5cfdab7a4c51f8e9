//! Associated graded algebra `gr S = ⊕ m̄^k/m̄^{k+1}` and the degreewise kernels
//! of its presentation by the symmetric algebra on `m̄/m̄²`.

use std::collections::HashMap;

use num_traits::{One, Zero};

use crate::error::Result;
use crate::linalg::{Matrix, Rational, Subspace};
use crate::poly::{monomials_of_degree, Monomial};

use super::{to_sparse, ArtinAlgebra, SparseVec};

/// Kernel data of `Sym^k(V) → (gr S)_k` with `V = (gr S)_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationDegree {
    pub degree: usize,
    /// `dim Sym^k(V)`.
    pub sym_dim: usize,
    /// `dim I*_k`.
    pub kernel_dim: usize,
    /// `dim (m·I*)_k = dim V·I*_{k-1}`.
    pub m_kernel_dim: usize,
}

impl PresentationDegree {
    /// Number of relations of degree `k` not coming from lower degrees.
    pub fn new_relations(&self) -> usize {
        self.kernel_dim - self.m_kernel_dim
    }
}

#[derive(Clone, Debug)]
pub struct GradedAlgebra {
    /// `gr S` in a filtration-adapted basis.
    pub algebra: ArtinAlgebra,
    /// Degree of each basis vector of `algebra`.
    pub degrees: Vec<usize>,
    /// `dim (gr S)_k` for `k = 0..=top`.
    pub component_dims: Vec<usize>,
    /// Kernel data for `k = 1..=top+1`.
    pub presentation: Vec<PresentationDegree>,
}

impl GradedAlgebra {
    pub fn top_degree(&self) -> usize {
        self.component_dims.len() - 1
    }

    /// `dim I*_k − dim (m·I*)_k ≤ k` for every computed degree.
    pub fn is_narrow(&self) -> bool {
        self.presentation.iter().all(|p| p.new_relations() <= p.degree)
    }
}

impl ArtinAlgebra {
    pub fn associated_graded(&self) -> Result<GradedAlgebra> {
        self.require_local()?;
        let d = self.dim();
        let depth = self.powers.len() - 1;
        let degree_of_monomial = |i: usize| self.monomials.as_ref().map(|ms| ms[i].degree() as usize);

        let mut columns: Vec<Vec<Rational>> = Vec::with_capacity(d);
        let mut degrees = Vec::with_capacity(d);
        let mut labels = Vec::with_capacity(d);
        let mut component_dims = Vec::with_capacity(depth);
        for k in 0..depth {
            let priority: Vec<usize> = (0..d).filter(|&i| degree_of_monomial(i) == Some(k)).collect();
            let comp = self.powers[k + 1].complement_in_with_priority(&self.powers[k], &priority)?;
            component_dims.push(comp.dim());
            for v in comp.basis() {
                let support: Vec<usize> = (0..d).filter(|&i| !v[i].is_zero()).collect();
                let label = match support.as_slice() {
                    [i] if v[*i].is_one() => self.labels[*i].clone(),
                    _ => format!("e{}", columns.len()),
                };
                labels.push(label);
                columns.push(v.clone());
                degrees.push(k);
            }
        }
        let p = Matrix::from_columns(d, &columns)?;
        let inv = p
            .inverse()
            .ok_or_else(|| crate::error::Error::Invariant("filtration-adapted basis is singular".into()))?;
        let graded_part = |v: &[Rational], deg: usize| -> Result<Vec<Rational>> {
            let mut c = inv.mul_vec(v)?;
            for (i, x) in c.iter_mut().enumerate() {
                if degrees[i] != deg {
                    x.set_zero();
                }
            }
            Ok(c)
        };
        let mut products: Vec<SparseVec> = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                let deg = degrees[i] + degrees[j];
                products.push(to_sparse(&graded_part(&self.mul(&columns[i], &columns[j]), deg)?));
            }
        }
        let unit = graded_part(&self.unit, 0)?;
        let generators = self
            .generators
            .iter()
            .map(|g| graded_part(g, 1))
            .collect::<Result<Vec<_>>>()?;
        let algebra = ArtinAlgebra::assemble(labels, self.vars.clone(), None, products, unit, generators)?;
        let presentation = presentation_kernels(&algebra, &degrees, &component_dims)?;
        Ok(GradedAlgebra {
            algebra,
            degrees,
            component_dims,
            presentation,
        })
    }
}

fn presentation_kernels(
    gr: &ArtinAlgebra,
    degrees: &[usize],
    component_dims: &[usize],
) -> Result<Vec<PresentationDegree>> {
    let d = gr.dim();
    let top = component_dims.len() - 1;
    let linear: Vec<usize> = (0..d).filter(|&i| degrees[i] == 1).collect();
    let e = linear.len();
    let mut images: HashMap<Monomial, Vec<Rational>> = HashMap::new();
    images.insert(Monomial::one(e), gr.unit.clone());
    let mut out = Vec::new();
    let mut prev_kernel: Vec<Vec<Rational>> = Vec::new();
    let mut prev_index: HashMap<Monomial, usize> = HashMap::new();
    for k in 1..=top + 1 {
        let monos = monomials_of_degree(e, k as u32);
        let index: HashMap<Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let rows: Vec<usize> = (0..d).filter(|&i| degrees[i] == k).collect();
        let mut columns = Vec::with_capacity(monos.len());
        for m in &monos {
            let j = m.exponents().iter().position(|&x| x > 0).expect("positive degree");
            let mut ex = m.exponents().to_vec();
            ex[j] -= 1;
            let lower = &images[&Monomial::new(ex)];
            let mut y = vec![Rational::zero(); d];
            y[linear[j]] = Rational::one();
            let img = gr.mul(lower, &y);
            columns.push(rows.iter().map(|&r| img[r].clone()).collect::<Vec<_>>());
            images.insert(m.clone(), img);
        }
        let map = Matrix::from_columns(rows.len(), &columns)?;
        let kernel = map.kernel_basis();

        let mut lifted = Vec::new();
        for f in &prev_kernel {
            for j in 0..e {
                let mut v = vec![Rational::zero(); monos.len()];
                for (m, i) in &prev_index {
                    let c: &Rational = &f[*i];
                    if c.is_zero() {
                        continue;
                    }
                    let up = m.mul(&Monomial::var(e, j));
                    v[index[&up]] += c;
                }
                lifted.push(v);
            }
        }
        let m_kernel = Subspace::span(monos.len(), lifted)?;
        out.push(PresentationDegree {
            degree: k,
            sym_dim: monos.len(),
            kernel_dim: kernel.dim(),
            m_kernel_dim: m_kernel.dim(),
        });
        prev_kernel = kernel.basis().to_vec();
        prev_index = index;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::super::tests::algebra;

    #[test]
    fn homogeneous_ideal_is_its_own_graded() {
        let a = algebra("x^2, y^3, x*y^2", &["x", "y"]);
        let g = a.associated_graded().unwrap();
        assert_eq!(g.component_dims, vec![1, 2, 2]);
        assert_eq!(g.algebra.labels(), a.labels());
        for i in 0..a.dim() {
            for j in 0..a.dim() {
                assert_eq!(g.algebra.basis_product(i, j), a.basis_product(i, j));
            }
        }
        let news: Vec<(usize, usize)> = g.presentation.iter().map(|p| (p.kernel_dim, p.m_kernel_dim)).collect();
        // degree 1: 0; degree 2: x^2; degree 3: everything, x*x^2, y*x^2 from below
        assert_eq!(news, vec![(0, 0), (1, 0), (4, 2)]);
        assert!(g.is_narrow());
    }

    #[test]
    fn squares_in_three_variables_not_narrow() {
        let a = algebra("x1^2, x2^2, x3^2", &["x1", "x2", "x3"]);
        let g = a.associated_graded().unwrap();
        assert_eq!(g.presentation[1].new_relations(), 3);
        assert!(!g.is_narrow());
    }

    #[test]
    fn squares_in_two_variables_narrow() {
        let a = algebra("x^2, y^2", &["x", "y"]);
        let g = a.associated_graded().unwrap();
        assert_eq!(g.presentation[1].new_relations(), 2);
        assert!(g.is_narrow());
    }
}
