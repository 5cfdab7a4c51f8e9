//! The report tree emitted by a run. Every field is plain data so that the
//! structured form round-trips through `serde`; exact rationals are strings
//! such as `"3/4"`.

use serde::{Deserialize, Serialize};

/// Version tag written into every structured document.
pub const SCHEMA: &str = "artinlab-report/1";

/// Outcome of a solvability test. Criteria only ever report `solvable` or
/// `inconclusive`; `non-solvable` comes from a direct computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Solvable,
    Inconclusive,
    NonSolvable,
}

impl From<artinlab::criteria::Verdict> for Verdict {
    fn from(v: artinlab::criteria::Verdict) -> Self {
        match v {
            artinlab::criteria::Verdict::Solvable => Verdict::Solvable,
            artinlab::criteria::Verdict::Inconclusive => Verdict::Inconclusive,
            artinlab::criteria::Verdict::NonSolvable => Verdict::NonSolvable,
        }
    }
}

/// Position of the minimal generator count relative to `n + l − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Extremality {
    Below,
    Extremal,
    Above,
}

impl From<artinlab::criteria::Extremality> for Extremality {
    fn from(e: artinlab::criteria::Extremality) -> Self {
        match e {
            artinlab::criteria::Extremality::Below => Extremality::Below,
            artinlab::criteria::Extremality::Extremal => Extremality::Extremal,
            artinlab::criteria::Extremality::Above => Extremality::Above,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub groebner: Option<GroebnerBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub algebra: Option<AlgebraBlock>,
    /// One block per rational point; empty outside `analyze`.
    #[serde(default)]
    pub components: Vec<ComponentBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub derivations: Option<DerivationsBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub singularity: Option<SingularityBlock>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split: Option<SplitBlock>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    pub mode: String,
    pub variables: Vec<String>,
    pub order: String,
    pub polynomials: Vec<String>,
    pub truncation_cap: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerBlock {
    /// Reduced basis, monic, sorted by leading monomial.
    pub basis: Vec<String>,
    pub leading_monomials: Vec<String>,
    pub finite_dimensional: bool,
    /// `dim K[x]/I` when finite.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub standard_monomials: Option<Vec<String>>,
}

/// Whole-algebra data in `analyze` mode.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraBlock {
    pub dim: usize,
    /// Exactly one rational point.
    pub local: bool,
    pub points: Vec<Vec<String>>,
    pub local_dims: Vec<usize>,
    pub criteria: CriteriaBlock,
    pub der: DerBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CriteriaBlock {
    pub n: usize,
    pub l: u32,
    pub min_gens: usize,
    pub schulze: Verdict,
    /// Absent for non-local inputs.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremality: Option<Extremality>,
    pub extremal: bool,
    pub narrow_gr: bool,
    pub narrow: Verdict,
    pub complete_intersection: bool,
    /// The generator-count inequality holds for the whole non-local ideal.
    pub global_inequality: bool,
    /// Combined verdict of all criteria.
    pub verdict: Verdict,
}

/// Direct computation of `Der` and its series.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerBlock {
    pub dim: usize,
    pub derived_series: Vec<usize>,
    pub lower_central_series: Vec<usize>,
    pub solvable: bool,
    pub nilpotent: bool,
    /// Tangent-level check: every element of the derivation algebra is a
    /// nilpotent operator. The automorphism group itself is not computed.
    pub all_nilpotent: bool,
    pub verdict: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentBlock {
    pub point: Vec<String>,
    pub dim: usize,
    pub embedding_dim: usize,
    /// Least `k` with `m̄^k = 0`.
    pub nilpotency_index: usize,
    /// Absent for the ground field.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub l: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub min_gens: Option<usize>,
    pub schulze: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extremality: Option<Extremality>,
    pub extremal: bool,
    /// The counts were taken on a minimal presentation because the localized
    /// ideal has a linear part.
    pub reduced_presentation: bool,
    pub narrow_gr: bool,
    pub narrow: Verdict,
    pub der: DerBlock,
    pub socle: SocleBlock,
    pub bounds: BoundsBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SocleBlock {
    pub socle: usize,
    pub lower: usize,
    pub upper: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoundsBlock {
    /// `dim(m̄/m̄²)·dim Soc`.
    pub socle_bound: usize,
    pub socle_bound_holds: bool,
    /// `s² + n·dim LSoc` with `s = dim USoc`.
    pub unipotent_reported: usize,
    /// Number of explicitly constructed socle-moving derivations.
    pub unipotent_constructed: usize,
    pub unipotent_bound_holds: bool,
    /// Every constructed operator satisfies the Leibniz rule.
    pub unipotent_leibniz: bool,
    /// The constructed operators span an algebra of nilpotent operators.
    pub unipotent_nilpotent: bool,
    /// `dim Der ≥ 1` whenever `dim > 1`.
    pub positive_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DerivationsBlock {
    pub der: DerBlock,
    /// For each basis derivation, the images `D(x_i)` as normal forms.
    pub basis: Vec<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SingularityBlock {
    pub tjurina: usize,
    /// Auxiliary: local dimension of `K[x]/J(p)` at the origin.
    pub milnor: usize,
    pub quasi_homogeneous: bool,
    /// Positive integer weights and the weighted degree.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weighted_degree: Option<String>,
    pub in_jacobian: bool,
    pub moduli_dim: usize,
    pub residual_tjurina: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub split_rank: Option<usize>,
    pub schulze: Verdict,
    pub narrow: Verdict,
    pub criteria: Verdict,
    pub der: DerBlock,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SplitBlock {
    pub truncation: u32,
    pub split_variables: Vec<String>,
    pub lambdas: Vec<String>,
    pub residual_variables: Vec<String>,
    pub residual: String,
    pub normal_form: String,
    /// `x_i -> φ(x_i)`.
    pub change: Vec<String>,
    pub residual_tjurina: usize,
}
