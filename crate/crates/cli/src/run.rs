//! Orchestration: one [`JobSpec`] in, one [`Report`] out.

use artinlab::analysis::{analyze, ComponentAnalysis};
use artinlab::artin::ArtinAlgebra;
use artinlab::criteria::{CriteriaReport, Extremality as CoreExtremality};
use artinlab::groebner::{CancelToken, GroebnerBasis, Ideal, LocalizeOptions};
use artinlab::liealg::{compute_derivations, SeriesReport};
use artinlab::linalg::{format_rational, Rational};
use artinlab::poly::{Monomial, Polynomial, VarSet};
use artinlab::singular::{moduli_algebra, split_with_matching_tjurina, yau_report, SplitNormalForm};
use num_traits::Zero;

use crate::error::CliError;
use crate::job::{JobSpec, Mode};
use crate::report::*;

pub fn run(job: &JobSpec) -> Result<Report, CliError> {
    run_with_cancel(job, None)
}

/// Like [`run`], with a token that stops localization loops early.
pub fn run_with_cancel(job: &JobSpec, cancel: Option<CancelToken>) -> Result<Report, CliError> {
    let opts = LocalizeOptions {
        cap: job.truncation_cap,
        cancel,
    };
    let mut report = Report {
        schema: SCHEMA.to_string(),
        input: InputEcho {
            mode: job.mode.as_str().to_string(),
            variables: job.variables.names().to_vec(),
            order: job.order.describe(&job.variables),
            polynomials: job.generators.iter().map(|g| g.to_string()).collect(),
            truncation_cap: job.truncation_cap,
        },
        groebner: None,
        algebra: None,
        components: Vec::new(),
        derivations: None,
        singularity: None,
        split: None,
    };
    match job.mode {
        Mode::Groebner => {
            let gb = ideal(job)?.groebner_basis(&job.order)?;
            report.groebner = Some(groebner_block(&gb)?);
        }
        Mode::Analyze => {
            let a = analyze(&ideal(job)?, &job.order, &opts)?;
            report.groebner = Some(groebner_block(&a.gb)?);
            report.algebra = Some(AlgebraBlock {
                dim: a.dim,
                local: a.local,
                points: a.components.iter().map(|c| rationals(&c.point)).collect(),
                local_dims: a.components.iter().map(ComponentAnalysis::dim).collect(),
                criteria: criteria_block(&a.criteria),
                der: der_block(a.der_dim, &a.series),
            });
            report.components = a.components.iter().map(component_block).collect();
        }
        Mode::Derivations => {
            let gb = ideal(job)?.groebner_basis(&job.order)?;
            let s = ArtinAlgebra::from_groebner(&gb)?;
            let der = compute_derivations(&s, &gb)?;
            let basis = der
                .basis_operators()
                .iter()
                .map(|op| {
                    s.generator_images()
                        .iter()
                        .enumerate()
                        .map(|(i, g)| {
                            let image = op.mul_vec(g)?;
                            Ok(format!(
                                "{} -> {}",
                                job.variables.name(i),
                                vector_to_polynomial(&s, &image)
                            ))
                        })
                        .collect::<Result<Vec<_>, artinlab::Error>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            report.groebner = Some(groebner_block(&gb)?);
            report.derivations = Some(DerivationsBlock {
                der: der_block(der.dim(), &der.series()),
                basis,
            });
        }
        Mode::Moduli => {
            let y = yau_report(&job.generators[0], &opts)?;
            let weights = y.moduli.weights.as_ref();
            report.singularity = Some(SingularityBlock {
                tjurina: y.moduli.tjurina,
                milnor: y.moduli.milnor,
                quasi_homogeneous: y.moduli.quasi_homogeneous(),
                weights: weights.map(|w| w.weights.iter().map(ToString::to_string).collect()),
                weighted_degree: weights.map(|w| w.degree.to_string()),
                in_jacobian: y.moduli.p_in_jacobian,
                moduli_dim: y.moduli.algebra.dim(),
                residual_tjurina: y.residual_tjurina,
                split_rank: y.split.as_ref().map(SplitNormalForm::rank),
                schulze: y.criteria.schulze_verdict().into(),
                narrow: y.criteria.narrow_verdict().into(),
                criteria: y.criteria_verdict().into(),
                der: der_block(y.der_dim, &y.series),
            });
            if let Some(split) = &y.split {
                report.split = Some(split_block(split, y.residual_tjurina));
            }
        }
        Mode::Split => {
            let moduli = moduli_algebra(&job.generators[0], &opts)?;
            let (split, _, residual_tjurina) = split_with_matching_tjurina(&moduli, &opts)?;
            report.split = Some(split_block(&split, residual_tjurina));
        }
    }
    Ok(report)
}

fn ideal(job: &JobSpec) -> Result<Ideal, CliError> {
    Ok(Ideal::new(&job.variables, job.generators.clone())?)
}

fn rationals(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn monomial_text(m: &Monomial, vars: &VarSet) -> String {
    if m.is_one() {
        "1".to_string()
    } else {
        m.display(vars)
    }
}

fn groebner_block(gb: &GroebnerBasis) -> Result<GroebnerBlock, CliError> {
    let vars = gb.vars();
    let finite = !gb.is_unit() && gb.is_finite_dimensional();
    let standard = if finite { Some(gb.standard_monomials()?) } else { None };
    Ok(GroebnerBlock {
        basis: gb.elements().iter().map(ToString::to_string).collect(),
        leading_monomials: gb.leading_monomials().iter().map(|m| monomial_text(m, vars)).collect(),
        finite_dimensional: finite,
        dim: standard.as_ref().map(Vec::len),
        standard_monomials: standard.map(|s| s.iter().map(|m| monomial_text(m, vars)).collect()),
    })
}

fn vector_to_polynomial(s: &ArtinAlgebra, v: &[Rational]) -> Polynomial {
    let monomials = s.basis_monomials().expect("algebra built from a Gröbner basis");
    Polynomial::from_terms(
        s.vars(),
        monomials
            .iter()
            .zip(v)
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m.clone(), c.clone())),
    )
}

fn der_block(dim: usize, series: &SeriesReport) -> DerBlock {
    DerBlock {
        dim,
        derived_series: series.derived_dims.clone(),
        lower_central_series: series.lower_central_dims.clone(),
        solvable: series.solvable,
        nilpotent: series.nilpotent,
        all_nilpotent: series.all_nilpotent_operators,
        verdict: if series.solvable {
            Verdict::Solvable
        } else {
            Verdict::NonSolvable
        },
    }
}

fn criteria_block(c: &CriteriaReport) -> CriteriaBlock {
    CriteriaBlock {
        n: c.n,
        l: c.l,
        min_gens: c.min_gens,
        schulze: c.schulze.into(),
        extremality: c.extremality.map(Into::into),
        extremal: c.extremal(),
        narrow_gr: c.narrow_gr,
        narrow: c.narrow_verdict.into(),
        complete_intersection: c.complete_intersection,
        global_inequality: c.global.global_applies,
        verdict: c.verdict().into(),
    }
}

fn component_block(c: &ComponentAnalysis) -> ComponentBlock {
    let schulze = c.criteria.schulze.as_ref();
    let u = &c.unipotent;
    ComponentBlock {
        point: rationals(&c.point),
        dim: c.dim(),
        embedding_dim: c.embedding_dim,
        nilpotency_index: c.nilpotency_index,
        l: schulze.map(|s| s.l),
        min_gens: schulze.map(|s| s.min_gens),
        schulze: c.criteria.schulze_verdict().into(),
        extremality: schulze.map(|s| s.extremality.into()),
        extremal: schulze.is_some_and(|s| s.extremality == CoreExtremality::Extremal),
        reduced_presentation: c.criteria.reduced,
        narrow_gr: c.criteria.narrow_gr,
        narrow: c.criteria.narrow_verdict().into(),
        der: der_block(c.der_dim, &c.series),
        socle: SocleBlock {
            socle: c.socle.socle,
            lower: c.socle.lsoc,
            upper: c.socle.usoc,
        },
        bounds: BoundsBlock {
            socle_bound: c.socle_bound.socle_bound,
            socle_bound_holds: c.socle_bound.socle_bound_holds,
            unipotent_reported: u.dim_reported,
            unipotent_constructed: u.dim_constructed,
            unipotent_bound_holds: c.der_dim >= u.dim_reported.max(u.dim_constructed),
            unipotent_leibniz: u.all_derivations,
            unipotent_nilpotent: u.tangent_unipotent,
            positive_holds: c.socle_bound.positive_holds,
        },
    }
}

fn split_block(split: &SplitNormalForm, residual_tjurina: usize) -> SplitBlock {
    let vars = split.normal_form.vars();
    SplitBlock {
        truncation: split.truncation,
        split_variables: split.split_vars.iter().map(|&i| vars.name(i).to_string()).collect(),
        lambdas: rationals(&split.lambdas),
        residual_variables: split.residual_vars.iter().map(|&i| vars.name(i).to_string()).collect(),
        residual: split.residual.to_string(),
        normal_form: split.normal_form.to_string(),
        change: split
            .change
            .iter()
            .enumerate()
            .map(|(i, img)| format!("{} -> {}", vars.name(i), img))
            .collect(),
        residual_tjurina,
    }
}
