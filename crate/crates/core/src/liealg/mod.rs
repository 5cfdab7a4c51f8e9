//! Lie algebras of linear operators on a finite-dimensional algebra: the
//! derivation algebra `Der S`, its structure constants, derived and lower
//! central series, and the Engel test for an algebra of nilpotent operators.
//!
//! Solvability is decided over the rationals. The dimensions in the derived
//! series are ranks of linear systems with rational coefficients, so they do
//! not change under extension to the algebraic closure.

mod bounds;
mod derivations;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};

pub use bounds::{socle_bound_check, unipotent_subgroup_dim, SocleBoundReport, UnipotentSubgroup};
pub use derivations::{compute_derivations, derivations_from_structure, is_derivation};

type SparseVec = Vec<(usize, Rational)>;

/// Linear functional `X ↦ (X·vector)_row` on operators.
#[derive(Clone, Debug, PartialEq, Eq)]
struct Functional {
    vector: SparseVec,
    row: usize,
}

impl Functional {
    fn apply(&self, x: &Matrix) -> Rational {
        let mut acc = Rational::zero();
        for (c, v) in &self.vector {
            let a = &x[(self.row, *c)];
            if !a.is_zero() {
                acc += a * v;
            }
        }
        acc
    }
}

/// A Lie algebra of `d × d` matrices given by a basis, together with
/// functionals dual to that basis and the structure constants of the bracket.
#[derive(Clone, Debug)]
pub struct LieAlgebraRep {
    ambient_dim: usize,
    operators: Vec<Matrix>,
    chart: Vec<Functional>,
    /// Coordinates of `[B_i, B_j]` at index `i·m + j`.
    structure: Vec<SparseVec>,
}

/// Derived and lower central series of a Lie algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `dim L, dim [L,L], …` until the series stops changing.
    pub derived_dims: Vec<usize>,
    /// `dim L, dim [L,L], dim [L,[L,L]], …` until the series stops changing.
    pub lower_central_dims: Vec<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
    /// Every element of the span is a nilpotent operator.
    pub all_nilpotent_operators: bool,
}

impl LieAlgebraRep {
    /// Builds the algebra after checking that `chart[a](operators[b]) = δ_ab`
    /// and that every commutator lies in the span.
    fn assemble(ambient_dim: usize, operators: Vec<Matrix>, chart: Vec<Functional>) -> Result<Self> {
        let m = operators.len();
        if chart.len() != m {
            return Err(Error::Invariant(
                "chart size differs from the number of operators".into(),
            ));
        }
        for (a, f) in chart.iter().enumerate() {
            for (b, op) in operators.iter().enumerate() {
                let v = f.apply(op);
                let expected = if a == b {
                    Rational::from_integer(1.into())
                } else {
                    Rational::zero()
                };
                if v != expected {
                    return Err(Error::Invariant(
                        "coordinate functionals are not dual to the basis".into(),
                    ));
                }
            }
        }
        let mut rep = LieAlgebraRep {
            ambient_dim,
            operators,
            chart,
            structure: vec![Vec::new(); m * m],
        };
        for i in 0..m {
            for j in i + 1..m {
                let br = rep.operators[i].commutator(&rep.operators[j])?;
                let c = rep.coordinates(&br).ok_or(Error::NotClosed)?;
                let neg = c.iter().map(|(k, x)| (*k, -x.clone())).collect();
                rep.structure[i * m + j] = c;
                rep.structure[j * m + i] = neg;
            }
        }
        Ok(rep)
    }

    /// The span of arbitrary square matrices of size `ambient_dim`, which must
    /// be closed under commutators. The basis is the echelon basis of the span.
    pub fn from_operators(ambient_dim: usize, operators: &[Matrix]) -> Result<Self> {
        let d = ambient_dim;
        for op in operators {
            if op.rows() != d || op.cols() != d {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: op.rows().max(op.cols()),
                });
            }
        }
        let flat: Vec<Vec<Rational>> = operators.iter().map(|o| o.entries().to_vec()).collect();
        let span = Subspace::span(d * d, flat)?;
        let basis = span
            .basis()
            .iter()
            .map(|row| Matrix::from_rows(d, row.chunks(d.max(1)).map(<[Rational]>::to_vec).collect()))
            .collect::<Result<Vec<_>>>()?;
        let chart = span
            .pivots()
            .iter()
            .map(|&p| Functional {
                vector: vec![(p % d, Rational::from_integer(1.into()))],
                row: p / d,
            })
            .collect();
        Self::assemble(d, basis, chart)
    }

    /// `dim S` for operators on `S`.
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.operators.len()
    }

    pub fn basis_operators(&self) -> &[Matrix] {
        &self.operators
    }

    /// Coordinates of `[B_i, B_j]`.
    pub fn structure_constants(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.structure[i * self.dim() + j]
    }

    /// Sparse coordinates of `x` in the basis, or `None` outside the span.
    fn coordinates(&self, x: &Matrix) -> Option<SparseVec> {
        let coords: SparseVec = self
            .chart
            .iter()
            .enumerate()
            .map(|(a, f)| (a, f.apply(x)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let mut residual = x.clone();
        for (a, c) in &coords {
            residual = residual.sub(&self.operators[*a].scaled(c)).ok()?;
        }
        residual.is_zero().then_some(coords)
    }

    /// Dense coordinates of `x` in the basis, or `None` outside the span.
    pub fn coordinates_of(&self, x: &Matrix) -> Option<Vec<Rational>> {
        if x.rows() != self.ambient_dim || x.cols() != self.ambient_dim {
            return None;
        }
        let sparse = self.coordinates(x)?;
        let mut out = vec![Rational::zero(); self.dim()];
        for (a, c) in sparse {
            out[a] = c;
        }
        Some(out)
    }

    pub fn contains(&self, x: &Matrix) -> bool {
        self.coordinates_of(x).is_some()
    }

    /// `Σ c_a B_a`.
    pub fn operator_from_coordinates(&self, coords: &[Rational]) -> Matrix {
        let mut out = Matrix::zeros(self.ambient_dim, self.ambient_dim);
        for (c, op) in coords.iter().zip(&self.operators) {
            if !c.is_zero() {
                out = out.sub(&op.scaled(&-c.clone())).expect("same size");
            }
        }
        out
    }

    /// Bracket of two elements given in coordinates.
    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let m = self.dim();
        let mut out = vec![Rational::zero(); m];
        for (i, a) in u.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in v.iter().enumerate() {
                if b.is_zero() || i == j {
                    continue;
                }
                let ab = a * b;
                for (k, c) in &self.structure[i * m + j] {
                    out[*k] += &ab * c;
                }
            }
        }
        out
    }

    /// Span of `[x, y]` for `x ∈ a`, `y ∈ b`. Stops early once the span reaches
    /// `limit` dimensions.
    fn bracket_span(&self, a: &Subspace, b: &Subspace, limit: usize) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for (i, x) in a.basis().iter().enumerate() {
            for (j, y) in b.basis().iter().enumerate() {
                if std::ptr::eq(a, b) && j <= i {
                    continue;
                }
                out.insert(&self.bracket(x, y));
                if out.dim() >= limit {
                    return out;
                }
            }
        }
        out
    }

    /// Dimensions of `L ⊇ [L,L] ⊇ …` until stabilization.
    pub fn derived_series(&self) -> Vec<usize> {
        let mut current = Subspace::full(self.dim());
        let mut dims = vec![current.dim()];
        while !current.is_zero() {
            let next = self.bracket_span(&current, &current, current.dim());
            if next.dim() == current.dim() {
                break;
            }
            dims.push(next.dim());
            current = next;
        }
        dims
    }

    /// Dimensions of `L ⊇ [L,L] ⊇ [L,[L,L]] ⊇ …` until stabilization.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = Subspace::full(self.dim());
        let mut current = full.clone();
        let mut dims = vec![current.dim()];
        while !current.is_zero() {
            let next = self.bracket_span(&full, &current, current.dim());
            if next.dim() == current.dim() {
                break;
            }
            dims.push(next.dim());
            current = next;
        }
        dims
    }

    /// Engel test: builds the flag `0 = W_0 ⊂ W_1 ⊂ …` with
    /// `W_{k+1} = {v : B v ∈ W_k for every basis operator B}`. Every element of
    /// the span is nilpotent exactly when the flag reaches the whole space.
    pub fn all_nilpotent(&self) -> bool {
        let d = self.ambient_dim;
        let mut w = Subspace::zero(d);
        loop {
            if w.dim() == d {
                return true;
            }
            let ann = w.annihilator();
            let mut rows = Subspace::zero(d);
            for op in &self.operators {
                for a in ann.basis() {
                    // row vector a^T B
                    let mut row = vec![Rational::zero(); d];
                    for (r, x) in a.iter().enumerate() {
                        if x.is_zero() {
                            continue;
                        }
                        for (c, slot) in row.iter_mut().enumerate() {
                            let b = &op[(r, c)];
                            if !b.is_zero() {
                                *slot += x * b;
                            }
                        }
                    }
                    rows.insert(&row);
                }
            }
            let next = rows.annihilator();
            if next.dim() == w.dim() {
                return false;
            }
            w = next;
        }
    }

    pub fn series(&self) -> SeriesReport {
        let derived_dims = self.derived_series();
        let lower_central_dims = self.lower_central_series();
        SeriesReport {
            solvable: derived_dims.last() == Some(&0),
            nilpotent: lower_central_dims.last() == Some(&0),
            derived_dims,
            lower_central_dims,
            all_nilpotent_operators: self.all_nilpotent(),
        }
    }
}
