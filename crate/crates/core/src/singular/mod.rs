//! Isolated hypersurface singularities at the origin: Jacobian ideals, the
//! moduli algebra `K[[x]]/(p, J(p))`, Milnor and Tjurina numbers,
//! quasi-homogeneity, the splitting of a nondegenerate quadratic part, and the
//! solvability report for the derivation algebra of the moduli algebra.
//!
//! Germs are handled through localization at the origin: other zeros of the
//! ideal are ignored, and a singularity that is not isolated is detected when
//! the local dimension fails to stabilize below the truncation cap.

mod split;
mod weights;

use crate::artin::{ArtinAlgebra, LocalFactor};
use crate::criteria::{component_criteria, ComponentCriteria, Verdict};
use crate::error::Result;
use crate::groebner::{local_component, Ideal, LocalComponent, LocalizeOptions};
use crate::liealg::{compute_derivations, SeriesReport};
use crate::linalg::Rational;
use crate::poly::{MonomialOrder, Polynomial};

pub use split::{check_germ, splitting_normal_form, SplitNormalForm};
pub use weights::{quasi_homogeneous_weights, Weights};

/// `(∂p/∂x_1, …, ∂p/∂x_n)`, with zero partials dropped.
pub fn jacobian_ideal(p: &Polynomial) -> Ideal {
    let partials = (0..p.nvars()).map(|i| p.partial_derivative(i)).collect();
    Ideal::new(p.vars(), partials).expect("partials share the variable set")
}

/// The moduli algebra of a germ with its numerical invariants.
#[derive(Clone, Debug)]
pub struct ModuliAlgebra {
    pub p: Polynomial,
    /// Localization of `(p, J(p))` at the origin.
    pub component: LocalComponent,
    pub algebra: ArtinAlgebra,
    /// `dim A(H)`.
    pub tjurina: usize,
    /// Local dimension of `K[x]/J(p)` at the origin.
    pub milnor: usize,
    pub weights: Option<Weights>,
    /// `p` lies in the localized Jacobian ideal.
    pub p_in_jacobian: bool,
}

impl ModuliAlgebra {
    pub fn quasi_homogeneous(&self) -> bool {
        self.weights.is_some()
    }

    /// The moduli algebra as a local factor, for the criteria.
    pub fn local_factor(&self) -> LocalFactor {
        LocalFactor {
            component: self.component.clone(),
            algebra: self.algebra.clone(),
        }
    }
}

/// `A(H) = K[[x]]/(p, J(p))` computed as the local factor at the origin.
pub fn moduli_algebra(p: &Polynomial, opts: &LocalizeOptions) -> Result<ModuliAlgebra> {
    check_germ(p)?;
    let n = p.nvars();
    let origin = vec![Rational::from_integer(0.into()); n];
    let order = MonomialOrder::degrevlex(n);
    let jac = jacobian_ideal(p);
    let mut gens = vec![p.clone()];
    gens.extend(jac.generators().iter().cloned());
    let tjurina_ideal = Ideal::new(p.vars(), gens)?;
    let component = local_component(&tjurina_ideal, &origin, &order, opts)?;
    let algebra = ArtinAlgebra::from_groebner(&component.gb)?;
    let jac_local = local_component(&jac, &origin, &order, opts)?;
    // J + m^N is m-primary, so membership there is local membership in J
    let p_in_jacobian = jac_local.gb.contains(p);
    Ok(ModuliAlgebra {
        p: p.clone(),
        tjurina: component.dim,
        milnor: jac_local.dim,
        weights: quasi_homogeneous_weights(p),
        p_in_jacobian,
        component,
        algebra,
    })
}

/// Solvability data for the derivation algebra of a moduli algebra.
#[derive(Clone, Debug)]
pub struct YauReport {
    pub moduli: ModuliAlgebra,
    /// Present when `p` has a nonzero quadratic part.
    pub split: Option<SplitNormalForm>,
    /// Moduli algebra of the residual `q`; `None` when nothing was split or all
    /// variables were split.
    pub residual_moduli: Option<ModuliAlgebra>,
    /// Tjurina number of the residual, 1 when every variable was split.
    pub residual_tjurina: usize,
    pub criteria: ComponentCriteria,
    pub der_dim: usize,
    pub series: SeriesReport,
}

impl YauReport {
    pub fn solvable(&self) -> bool {
        self.series.solvable
    }

    /// Verdict of the criteria alone.
    pub fn criteria_verdict(&self) -> Verdict {
        if self.criteria.schulze_verdict() == Verdict::Solvable || self.criteria.narrow_verdict() == Verdict::Solvable {
            Verdict::Solvable
        } else {
            Verdict::Inconclusive
        }
    }
}

/// Splits `p` with increasing truncation until the residual moduli algebra has
/// the Tjurina number of `p`. Returns the splitting, the residual moduli
/// algebra (absent when nothing is left) and the residual Tjurina number.
pub fn split_with_matching_tjurina(
    moduli: &ModuliAlgebra,
    opts: &LocalizeOptions,
) -> Result<(SplitNormalForm, Option<ModuliAlgebra>, usize)> {
    let base = moduli.component.exponent + 2;
    let mut last = None;
    for attempt in 0..4 {
        let n = base.max(3) + attempt * base;
        let split = splitting_normal_form(&moduli.p, n)?;
        let (residual, tjurina) = if split.residual.nvars() == 0 || split.residual.is_zero() {
            (None, 1)
        } else {
            let r = moduli_algebra(&split.residual, opts)?;
            let t = r.tjurina;
            (Some(r), t)
        };
        if tjurina == moduli.tjurina {
            return Ok((split, residual, tjurina));
        }
        last = Some((split, residual, tjurina));
    }
    let (_, _, t) = last.expect("at least one attempt");
    Err(crate::error::Error::Invariant(format!(
        "residual after splitting has Tjurina number {t}, expected {}",
        moduli.tjurina
    )))
}

/// Moduli algebra, splitting when `p` has order 2, the solvability criteria
/// on the moduli algebra and the direct solvability decision for its
/// derivation algebra.
pub fn yau_report(p: &Polynomial, opts: &LocalizeOptions) -> Result<YauReport> {
    let moduli = moduli_algebra(p, opts)?;
    let (split, residual_moduli, residual_tjurina) = if p.order() == Some(2) {
        let (s, r, t) = split_with_matching_tjurina(&moduli, opts)?;
        (Some(s), r, t)
    } else {
        (None, None, moduli.tjurina)
    };
    let target = residual_moduli.as_ref().unwrap_or(&moduli);
    let criteria = component_criteria(&target.local_factor(), opts)?;
    let der = compute_derivations(&moduli.algebra, &moduli.component.gb)?;
    Ok(YauReport {
        der_dim: der.dim(),
        series: der.series(),
        criteria,
        split,
        residual_moduli,
        residual_tjurina,
        moduli,
    })
}
