//! End-to-end analysis of a zero-dimensional quotient `S = K[x]/I`: local
//! decomposition, the solvability criteria on every factor, the derivation
//! algebras with their series, and the socle bounds.

use crate::artin::{ArtinAlgebra, LocalFactor};
use crate::criteria::{criteria_report, local_factors_with_criteria, ComponentCriteria, CriteriaReport};
use crate::error::Result;
use crate::groebner::{GroebnerBasis, Ideal, LocalizeOptions};
use crate::liealg::{
    compute_derivations, socle_bound_check, unipotent_subgroup_dim, SeriesReport, SocleBoundReport, UnipotentSubgroup,
};
use crate::linalg::Rational;
use crate::poly::MonomialOrder;

/// Socle dimensions of a local factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SocleDims {
    pub socle: usize,
    pub lsoc: usize,
    pub usoc: usize,
}

#[derive(Clone, Debug)]
pub struct ComponentAnalysis {
    pub point: Vec<Rational>,
    pub factor: LocalFactor,
    pub criteria: ComponentCriteria,
    pub embedding_dim: usize,
    pub nilpotency_index: usize,
    pub der_dim: usize,
    pub series: SeriesReport,
    pub socle: SocleDims,
    pub socle_bound: SocleBoundReport,
    pub unipotent: UnipotentSubgroup,
}

impl ComponentAnalysis {
    pub fn dim(&self) -> usize {
        self.factor.algebra.dim()
    }
}

#[derive(Clone, Debug)]
pub struct Analysis {
    pub ideal: Ideal,
    pub gb: GroebnerBasis,
    pub algebra: ArtinAlgebra,
    pub dim: usize,
    /// The quotient has a single rational point.
    pub local: bool,
    pub criteria: CriteriaReport,
    pub components: Vec<ComponentAnalysis>,
    /// `dim Der S` of the whole quotient.
    pub der_dim: usize,
    pub series: SeriesReport,
}

pub fn analyze_component(factor: LocalFactor, criteria: ComponentCriteria) -> Result<ComponentAnalysis> {
    let s = &factor.algebra;
    let der = compute_derivations(s, &factor.component.gb)?;
    let soc = s.socle_data()?;
    let socle = SocleDims {
        socle: soc.socle.dim(),
        lsoc: soc.lsoc.dim(),
        usoc: soc.usoc.dim(),
    };
    Ok(ComponentAnalysis {
        point: factor.component.point.clone(),
        embedding_dim: s.embedding_dim()?,
        nilpotency_index: s.nilpotency_index()?,
        der_dim: der.dim(),
        series: der.series(),
        socle,
        socle_bound: socle_bound_check(s, &der)?,
        unipotent: unipotent_subgroup_dim(s)?,
        criteria,
        factor,
    })
}

/// Runs every analysis on `K[x]/I`. Requires a finite-dimensional nonzero
/// quotient whose points are all rational.
pub fn analyze(ideal: &Ideal, order: &MonomialOrder, opts: &LocalizeOptions) -> Result<Analysis> {
    let gb = ideal.groebner_basis(order)?;
    let algebra = ArtinAlgebra::from_groebner(&gb)?;
    let (factors, comps) = local_factors_with_criteria(ideal, order, opts)?;
    let criteria = criteria_report(ideal, comps.clone())?;
    let components = factors
        .into_iter()
        .zip(comps)
        .map(|(f, c)| analyze_component(f, c))
        .collect::<Result<Vec<_>>>()?;
    let der = compute_derivations(&algebra, &gb)?;
    Ok(Analysis {
        ideal: ideal.clone(),
        dim: algebra.dim(),
        local: components.len() == 1,
        der_dim: der.dim(),
        series: der.series(),
        gb,
        algebra,
        criteria,
        components,
    })
}
