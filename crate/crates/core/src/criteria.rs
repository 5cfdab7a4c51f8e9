//! Sufficient conditions for solvability of `Der S`: the generator-count
//! inequality `dim I/mI < n + l − 1`, narrowness of the associated graded
//! algebra, its non-local form over all rational points, and detection of
//! complete intersections.
//!
//! The criteria are one-sided. They report [`Verdict::Solvable`] or
//! [`Verdict::Inconclusive`] and never claim non-solvability; only a direct
//! computation of `Der S` can do that.

use std::fmt;

use num_traits::Zero;

use crate::artin::{decompose_local, generator_count_with_exponent, minimal_presentation, GradedAlgebra, LocalFactor};
use crate::error::{Error, Result};
use crate::groebner::{Ideal, LocalizeOptions};
use crate::linalg::Rational;
use crate::poly::MonomialOrder;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Solvable,
    Inconclusive,
    NonSolvable,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::Solvable => "solvable",
            Verdict::Inconclusive => "inconclusive",
            Verdict::NonSolvable => "non-solvable",
        }
    }

    fn from_flag(solvable: bool) -> Self {
        if solvable {
            Verdict::Solvable
        } else {
            Verdict::Inconclusive
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Position of `dim I/mI` relative to `n + l − 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Extremality {
    Below,
    Extremal,
    Above,
}

impl Extremality {
    pub fn as_str(self) -> &'static str {
        match self {
            Extremality::Below => "below",
            Extremality::Extremal => "extremal",
            Extremality::Above => "above",
        }
    }
}

/// Largest `l` with `I ⊆ m^l` at the origin: the least order of a generator.
/// Fails on a generator with a nonzero constant term and on the zero ideal.
pub fn ideal_order(ideal: &Ideal) -> Result<u32> {
    let mut best: Option<u32> = None;
    for g in ideal.generators() {
        if !g.constant_term().is_zero() {
            return Err(Error::ConstantTerm {
                generator: g.to_string(),
            });
        }
        if let Some(o) = g.order() {
            best = Some(best.map_or(o, |b| b.min(o)));
        }
    }
    best.ok_or(Error::ZeroPolynomial)
}

/// Outcome of the generator-count inequality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SchulzeResult {
    pub n: usize,
    pub l: u32,
    pub min_gens: usize,
    /// `n + l − 1`.
    pub bound: usize,
    pub verdict: Verdict,
    pub extremality: Extremality,
}

impl SchulzeResult {
    pub fn from_counts(n: usize, l: u32, min_gens: usize) -> Self {
        let bound = (n + l as usize).saturating_sub(1);
        let extremality = match min_gens.cmp(&bound) {
            std::cmp::Ordering::Less => Extremality::Below,
            std::cmp::Ordering::Equal => Extremality::Extremal,
            std::cmp::Ordering::Greater => Extremality::Above,
        };
        SchulzeResult {
            n,
            l,
            min_gens,
            bound,
            verdict: Verdict::from_flag(min_gens < bound),
            extremality,
        }
    }

    pub fn is_extremal(&self) -> bool {
        self.extremality == Extremality::Extremal
    }
}

/// `dim I/mI < n + l − 1` for the localization of `ideal` at the origin.
/// Requires `l ≥ 2`: inputs with a linear part must first eliminate a variable.
pub fn schulze_test(ideal: &Ideal, opts: &LocalizeOptions) -> Result<SchulzeResult> {
    let l = ideal_order(ideal)?;
    if l < 2 {
        return Err(Error::OrderTooLow { order: l });
    }
    let min_gens = crate::artin::minimal_generator_count(ideal, opts)?;
    Ok(SchulzeResult::from_counts(ideal.nvars(), l, min_gens))
}

/// At most `k` new relations in each degree `k` of the presentation of `gr S`.
pub fn narrow_test(g: &GradedAlgebra) -> bool {
    g.is_narrow()
}

/// Criteria evaluated on one local factor.
#[derive(Clone, Debug)]
pub struct ComponentCriteria {
    pub point: Vec<Rational>,
    pub dim: usize,
    /// The factor is the ground field, whose derivation algebra is zero.
    pub trivial: bool,
    /// The inequality was evaluated on a minimal presentation because the
    /// localized ideal has a linear part.
    pub reduced: bool,
    /// Inequality data; `None` for the ground field.
    pub schulze: Option<SchulzeResult>,
    pub narrow_gr: bool,
}

impl ComponentCriteria {
    pub fn schulze_verdict(&self) -> Verdict {
        match &self.schulze {
            Some(s) => s.verdict,
            None => Verdict::Solvable,
        }
    }

    pub fn narrow_verdict(&self) -> Verdict {
        Verdict::from_flag(self.trivial || self.narrow_gr)
    }
}

/// Inequality and narrowness for one local factor.
pub fn component_criteria(factor: &LocalFactor, opts: &LocalizeOptions) -> Result<ComponentCriteria> {
    let comp = &factor.component;
    let s = &factor.algebra;
    let narrow_gr = narrow_test(&s.associated_graded()?);
    let base = ComponentCriteria {
        point: comp.point.clone(),
        dim: s.dim(),
        trivial: s.dim() == 1,
        reduced: false,
        schulze: None,
        narrow_gr,
    };
    if s.dim() == 1 {
        return Ok(base);
    }
    let shifted_order = ideal_order(&comp.shifted)?;
    if shifted_order >= 2 {
        let min_gens = generator_count_with_exponent(&comp.shifted, comp.exponent)?;
        return Ok(ComponentCriteria {
            schulze: Some(SchulzeResult::from_counts(
                comp.shifted.nvars(),
                shifted_order,
                min_gens,
            )),
            ..base
        });
    }
    let pres = minimal_presentation(s)?;
    let l = ideal_order(&pres.ideal)?;
    let min_gens = crate::artin::minimal_generator_count(&pres.ideal, opts)?;
    Ok(ComponentCriteria {
        reduced: true,
        schulze: Some(SchulzeResult::from_counts(pres.ideal.nvars(), l, min_gens)),
        ..base
    })
}

/// The non-local inequality with its per-component fallback.
#[derive(Clone, Debug)]
pub struct GlobalSchulze {
    /// Number of nonzero generators of the input.
    pub generator_count: usize,
    pub n: usize,
    /// Least local order over the rational points.
    pub l: u32,
    /// `l ≥ 2` and `generator_count < n + l − 1`.
    pub global_applies: bool,
    pub components: Vec<ComponentCriteria>,
    pub verdict: Verdict,
}

/// Decomposes `K[x]/I` into local factors and evaluates the criteria on each.
pub fn local_factors_with_criteria(
    ideal: &Ideal,
    order: &MonomialOrder,
    opts: &LocalizeOptions,
) -> Result<(Vec<LocalFactor>, Vec<ComponentCriteria>)> {
    let factors = decompose_local(ideal, order, opts)?;
    let comps = factors
        .iter()
        .map(|f| component_criteria(f, opts))
        .collect::<Result<Vec<_>>>()?;
    Ok((factors, comps))
}

/// Solvable when the generator count of `I` is below `n + l − 1` with `l` the
/// least local order over all points, or else when every local factor passes
/// its own inequality.
pub fn global_schulze(ideal: &Ideal, order: &MonomialOrder, opts: &LocalizeOptions) -> Result<GlobalSchulze> {
    let (_, components) = local_factors_with_criteria(ideal, order, opts)?;
    global_from_components(ideal, components)
}

pub fn global_from_components(ideal: &Ideal, components: Vec<ComponentCriteria>) -> Result<GlobalSchulze> {
    let n = ideal.nvars();
    let generator_count = ideal.generators().len();
    let mut l = u32::MAX;
    for c in &components {
        l = l.min(ideal_order(&ideal.shift(&c.point)?)?);
    }
    let global_applies = l != u32::MAX && l >= 2 && generator_count + 1 < n + l as usize;
    let per_component = components.iter().all(|c| c.schulze_verdict() == Verdict::Solvable);
    Ok(GlobalSchulze {
        generator_count,
        n,
        l: if l == u32::MAX { 0 } else { l },
        global_applies,
        verdict: Verdict::from_flag(global_applies || per_component),
        components,
    })
}

/// `n` generators in `n` variables with a nonzero finite-dimensional quotient.
/// Such generators form a regular sequence, so the quotient is a complete
/// intersection.
pub fn complete_intersection_check(ideal: &Ideal) -> Result<bool> {
    if ideal.generators().len() != ideal.nvars() {
        return Ok(false);
    }
    let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(ideal.nvars()))?;
    Ok(!gb.is_unit() && gb.is_finite_dimensional())
}

/// All criteria for one input.
#[derive(Clone, Debug)]
pub struct CriteriaReport {
    pub n: usize,
    pub l: u32,
    pub min_gens: usize,
    /// Verdict of the inequality; for non-local inputs the global form.
    pub schulze: Verdict,
    /// `None` for non-local inputs.
    pub extremality: Option<Extremality>,
    /// Every local factor has a narrow associated graded algebra.
    pub narrow_gr: bool,
    pub narrow_verdict: Verdict,
    pub complete_intersection: bool,
    pub global: GlobalSchulze,
}

impl CriteriaReport {
    pub fn extremal(&self) -> bool {
        self.extremality == Some(Extremality::Extremal)
    }

    /// Solvable when any criterion applies.
    pub fn verdict(&self) -> Verdict {
        Verdict::from_flag(
            self.schulze == Verdict::Solvable || self.narrow_verdict == Verdict::Solvable || self.complete_intersection,
        )
    }
}

pub fn criteria_report(ideal: &Ideal, components: Vec<ComponentCriteria>) -> Result<CriteriaReport> {
    let complete_intersection = complete_intersection_check(ideal)?;
    let narrow_gr = components.iter().all(|c| c.narrow_gr || c.trivial);
    let global = global_from_components(ideal, components)?;
    let (n, l, min_gens, schulze, extremality) = match global.components.as_slice() {
        [c] => match &c.schulze {
            Some(s) => (s.n, s.l, s.min_gens, s.verdict, Some(s.extremality)),
            None => (0, 0, 0, Verdict::Solvable, None),
        },
        _ => (global.n, global.l, global.generator_count, global.verdict, None),
    };
    Ok(CriteriaReport {
        n,
        l,
        min_gens,
        schulze,
        extremality,
        narrow_gr,
        narrow_verdict: Verdict::from_flag(narrow_gr),
        complete_intersection,
        global,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn ideal(gens: &str, vars: &[&str]) -> Ideal {
        Ideal::parse(gens, &VarSet::new(vars.iter().copied()).unwrap()).unwrap()
    }

    #[test]
    fn orders() {
        assert_eq!(ideal_order(&ideal("x^2, y^3, x*y^2", &["x", "y"])).unwrap(), 2);
        assert_eq!(
            ideal_order(&ideal("x^3, x^2*y, x^2*z, y^4, z^4", &["x", "y", "z"])).unwrap(),
            3
        );
        assert_eq!(
            ideal_order(&ideal("y^5, (x+y)^6, x^5 - x^3*y^3, x^4*y", &["x", "y"])).unwrap(),
            5
        );
        assert!(matches!(
            ideal_order(&ideal("x + 1", &["x"])),
            Err(Error::ConstantTerm { .. })
        ));
    }

    #[test]
    fn schulze_examples() {
        let o = LocalizeOptions::default();
        let r = schulze_test(&ideal("x^2, y^2", &["x", "y"]), &o).unwrap();
        assert_eq!((r.min_gens, r.bound, r.verdict), (2, 3, Verdict::Solvable));
        let r = schulze_test(&ideal("x1^2, x2^2, x3^2", &["x1", "x2", "x3"]), &o).unwrap();
        assert_eq!((r.min_gens, r.bound, r.verdict), (3, 4, Verdict::Solvable));
        let r = schulze_test(&ideal("x^2, y^3, x*y^2", &["x", "y"]), &o).unwrap();
        assert_eq!((r.min_gens, r.bound, r.verdict), (3, 3, Verdict::Inconclusive));
        assert!(r.is_extremal());
        assert_eq!(
            schulze_test(&ideal("x - y^2, y^3", &["x", "y"]), &o),
            Err(Error::OrderTooLow { order: 1 })
        );
    }

    #[test]
    fn global_examples() {
        let o = LocalizeOptions::default();
        let i = ideal("x^2*(x - 1), y^2", &["x", "y"]);
        let g = global_schulze(&i, &MonomialOrder::degrevlex(2), &o).unwrap();
        assert_eq!(g.components.len(), 2);
        // the point (1, 0) has local order 1, so the global inequality does not apply
        assert!(!g.global_applies);
        assert!(g.components.iter().all(|c| c.schulze_verdict() == Verdict::Solvable));
        assert!(g.components.iter().any(|c| c.reduced));
        assert_eq!(g.verdict, Verdict::Solvable);

        let i = ideal("x^2 - x^3", &["x"]);
        let g = global_schulze(&i, &MonomialOrder::degrevlex(1), &o).unwrap();
        let dims: Vec<usize> = g.components.iter().map(|c| c.dim).collect();
        assert_eq!(dims, vec![2, 1]);
        assert_eq!(g.verdict, Verdict::Solvable);
    }

    #[test]
    fn global_agrees_with_local_test() {
        let o = LocalizeOptions::default();
        for (gens, vars) in [
            ("x^2, y^3, x*y^2", &["x", "y"][..]),
            ("x^2, y^2", &["x", "y"]),
            ("x^3, x^2*y, x^2*z, y^4, z^4", &["x", "y", "z"]),
        ] {
            let i = ideal(gens, vars);
            let local = schulze_test(&i, &o).unwrap();
            let g = global_schulze(&i, &MonomialOrder::degrevlex(i.nvars()), &o).unwrap();
            assert_eq!(g.components[0].schulze.as_ref(), Some(&local), "{gens}");
            assert_eq!(g.verdict, local.verdict, "{gens}");
        }
    }

    #[test]
    fn complete_intersections() {
        assert!(complete_intersection_check(&ideal("x^2*(x - 1), y^2", &["x", "y"])).unwrap());
        assert!(!complete_intersection_check(&ideal("x^2, y^3, x*y^2", &["x", "y"])).unwrap());
        assert!(!complete_intersection_check(&ideal("x^2, x*y", &["x", "y"])).unwrap());
        assert!(!complete_intersection_check(&ideal("x, x - 1", &["x", "y"])).unwrap());
    }

    #[test]
    fn verdict_strings() {
        let s: Vec<&str> = [Verdict::Solvable, Verdict::Inconclusive, Verdict::NonSolvable]
            .iter()
            .map(|v| v.as_str())
            .collect();
        assert_eq!(s, vec!["solvable", "inconclusive", "non-solvable"]);
    }
}
