//! Lower bounds on `dim Der S` coming from the socle of a local algebra, and
//! the explicit unipotent family of derivations moving generators into the
//! socle.

use num_traits::Zero;

use crate::artin::ArtinAlgebra;
use crate::error::{Error, Result};
use crate::linalg::{Matrix, Rational, Subspace};

use super::{is_derivation, LieAlgebraRep};

/// Both sides of `dim Der S ≥ dim(m̄/m̄²)·dim Soc S` and of the positivity
/// statement `dim Der S ≥ 1` for `S ≠ K`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SocleBoundReport {
    pub embedding_dim: usize,
    pub socle_dim: usize,
    pub der_dim: usize,
    /// `dim(m̄/m̄²)·dim Soc S`.
    pub socle_bound: usize,
    pub socle_bound_holds: bool,
    /// `dim Der S ≥ 1` when `dim S > 1`; vacuously true for `S = K`.
    pub positive_holds: bool,
}

pub fn socle_bound_check(s: &ArtinAlgebra, der: &LieAlgebraRep) -> Result<SocleBoundReport> {
    s.require_local()?;
    if der.ambient_dim() != s.dim() {
        return Err(Error::DimensionMismatch {
            expected: s.dim(),
            found: der.ambient_dim(),
        });
    }
    let embedding_dim = s.embedding_dim()?;
    let socle_dim = s.socle_data()?.socle.dim();
    let socle_bound = embedding_dim * socle_dim;
    Ok(SocleBoundReport {
        embedding_dim,
        socle_dim,
        der_dim: der.dim(),
        socle_bound,
        socle_bound_holds: der.dim() >= socle_bound,
        positive_holds: s.dim() <= 1 || der.dim() >= 1,
    })
}

/// The family of derivations `y_j ↦ F_j`, `m̄² ↦ 0`, where `y_1, …, y_n` span a
/// complement of `m̄²` in `m̄` whose first `s` vectors span the upper socle,
/// `F_j ∈ LSoc S` for `j ≤ s` and `F_j ∈ Soc S` otherwise.
#[derive(Clone, Debug)]
pub struct UnipotentSubgroup {
    /// `s = dim USoc S`.
    pub usoc_dim: usize,
    pub lsoc_dim: usize,
    pub socle_dim: usize,
    /// `n = dim m̄/m̄²`.
    pub embedding_dim: usize,
    /// `s·dim USoc S + n·dim LSoc S`.
    pub dim_reported: usize,
    /// `dim LSoc S·n + s·(n − s)`, the number of constructed derivations.
    pub dim_constructed: usize,
    pub derivations: Vec<Matrix>,
    /// Every constructed operator passes the exhaustive Leibniz check.
    pub all_derivations: bool,
    /// The span of the constructed operators consists of nilpotent operators.
    pub tangent_unipotent: bool,
}

pub fn unipotent_subgroup_dim(s: &ArtinAlgebra) -> Result<UnipotentSubgroup> {
    s.require_local()?;
    let d = s.dim();
    if d == 1 {
        // S = K: m̄ = 0, so there is nothing to move
        return Ok(UnipotentSubgroup {
            usoc_dim: 0,
            lsoc_dim: 0,
            socle_dim: 1,
            embedding_dim: 0,
            dim_reported: 0,
            dim_constructed: 0,
            derivations: Vec::new(),
            all_derivations: true,
            tangent_unipotent: true,
        });
    }
    let soc = s.socle_data()?;
    let m2 = s.power(2);
    let usoc_dim = soc.usoc.dim();
    let lsoc_dim = soc.lsoc.dim();
    let n = s.embedding_dim()?;

    // y_1..y_s span USoc, the rest are generator images completing a basis of m̄/m̄²
    let mut acc: Subspace = m2.clone();
    let mut ys: Vec<Vec<Rational>> = Vec::with_capacity(n);
    for v in soc.usoc.basis().iter().chain(s.generator_images()) {
        if acc.insert(v) {
            ys.push(v.clone());
        }
    }
    if ys.len() != n || ys[..usoc_dim] != *soc.usoc.basis() {
        return Err(Error::Invariant("upper socle is not independent modulo m^2".into()));
    }
    let mut columns = vec![s.unit().to_vec()];
    columns.extend(ys.iter().cloned());
    columns.extend(m2.basis().iter().cloned());
    let p = Matrix::from_columns(d, &columns)?;
    let inv = p
        .inverse()
        .ok_or_else(|| Error::Invariant("1, y, m^2 do not form a basis".into()))?;

    let mut derivations = Vec::new();
    for j in 0..n {
        let targets = if j < usoc_dim {
            soc.lsoc.basis()
        } else {
            soc.socle.basis()
        };
        let phi = inv.row(1 + j);
        for f in targets {
            let mut op = Matrix::zeros(d, d);
            for (r, fr) in f.iter().enumerate() {
                if fr.is_zero() {
                    continue;
                }
                for (c, pc) in phi.iter().enumerate() {
                    if !pc.is_zero() {
                        op[(r, c)] = fr * pc;
                    }
                }
            }
            derivations.push(op);
        }
    }
    let all_derivations = derivations.iter().all(|op| is_derivation(s, op));
    let tangent_unipotent = LieAlgebraRep::from_operators(d, &derivations)
        .map(|l| l.all_nilpotent())
        .unwrap_or(false);
    Ok(UnipotentSubgroup {
        usoc_dim,
        lsoc_dim,
        socle_dim: soc.socle.dim(),
        embedding_dim: n,
        dim_reported: usoc_dim * usoc_dim + n * lsoc_dim,
        dim_constructed: lsoc_dim * n + usoc_dim * (n - usoc_dim),
        derivations,
        all_derivations,
        tangent_unipotent,
    })
}
