//! Randomized invariants over small local quotients `K[x, y]/I` whose
//! generators all lie in `m²`.

use artinlab::artin::{decompose_local, ArtinAlgebra};
use artinlab::criteria::{component_criteria, Verdict};
use artinlab::groebner::{Ideal, LocalizeOptions};
use artinlab::liealg::{compute_derivations, derivations_from_structure, is_derivation, LieAlgebraRep};
use artinlab::linalg::{rat, Matrix, Rational, SparseEchelon};
use artinlab::poly::{monomials_of_degree, Monomial, MonomialOrder, Polynomial, VarSet};
use proptest::prelude::*;
use std::collections::BTreeMap;

fn vars() -> VarSet {
    VarSet::new(["x", "y"]).unwrap()
}

fn mono(e: (u32, u32)) -> Monomial {
    Monomial::new(vec![e.0, e.1])
}

/// Exponent pair of total degree 2..=4.
fn exponent() -> impl Strategy<Value = (u32, u32)> {
    (0u32..=4, 0u32..=4).prop_filter("degree 2..=4", |(a, b)| (2..=4).contains(&(a + b)))
}

/// `x^a, y^b`, up to one extra monomial and up to one binomial `m1 - c m2`.
fn local_ideal() -> impl Strategy<Value = Ideal> {
    (
        2u32..=4,
        2u32..=4,
        proptest::option::of(exponent()),
        proptest::option::of((exponent(), exponent(), -3i64..=3)),
    )
        .prop_map(|(a, b, extra, binomial)| {
            let v = vars();
            let one = rat(1);
            let mut gens = vec![
                Polynomial::monomial(&v, mono((a, 0)), one.clone()),
                Polynomial::monomial(&v, mono((0, b)), one.clone()),
            ];
            if let Some(e) = extra {
                gens.push(Polynomial::monomial(&v, mono(e), one.clone()));
            }
            if let Some((e1, e2, c)) = binomial {
                let p = &Polynomial::monomial(&v, mono(e1), one.clone()) - &Polynomial::monomial(&v, mono(e2), rat(c));
                if !p.is_zero() {
                    gens.push(p);
                }
            }
            Ideal::new(&v, gens).unwrap()
        })
}

fn orders() -> Vec<MonomialOrder> {
    vec![
        MonomialOrder::lex(2),
        MonomialOrder::deglex(2),
        MonomialOrder::degrevlex(2),
    ]
}

/// Product of elementary shears `I + c E_ij` with `i < j`, each given as
/// `(i, j, c)` reduced modulo `d`.
fn shear_product(d: usize, shears: &[(usize, usize, i64)]) -> Matrix {
    let mut p = Matrix::identity(d);
    for &(a, b, c) in shears {
        let (i, j) = (a % d, b % d);
        if i == j {
            continue;
        }
        let mut e = Matrix::identity(d);
        e[(i.min(j), i.max(j))] = rat(c);
        p = p.mul(&e).unwrap();
    }
    p
}

fn conjugate(op: &Matrix, p: &Matrix, inv: &Matrix) -> Matrix {
    inv.mul(op).unwrap().mul(p).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 48, .. ProptestConfig::default() })]

    #[test]
    fn groebner_basis_is_reduced_and_generates(ideal in local_ideal()) {
        for order in orders() {
            let gb = ideal.groebner_basis(&order).unwrap();
            for g in ideal.generators() {
                prop_assert!(gb.contains(g), "{g} not reduced to zero");
            }
            let leads = gb.leading_monomials();
            for (i, a) in leads.iter().enumerate() {
                for (j, b) in leads.iter().enumerate() {
                    prop_assert!(i == j || !a.divides(b));
                }
            }
            for g in gb.elements() {
                prop_assert_eq!(gb.normal_form(g), Polynomial::zero(ideal.vars()));
                let (_, c) = g.leading_term(&order).unwrap();
                prop_assert_eq!(c.clone(), rat(1));
            }
        }
    }

    #[test]
    fn groebner_basis_ignores_generator_order(ideal in local_ideal(), rotate in 0usize..5) {
        let mut gens = ideal.generators().to_vec();
        let k = rotate % gens.len();
        gens.rotate_left(k);
        gens.reverse();
        let shuffled = Ideal::new(ideal.vars(), gens).unwrap();
        for order in orders() {
            let a = ideal.groebner_basis(&order).unwrap();
            let b = shuffled.groebner_basis(&order).unwrap();
            prop_assert_eq!(a.elements(), b.elements());
        }
    }

    /// `dim K[x]/I` against the span of the truncated products `t·g` inside
    /// polynomials of degree at most `D`, where `m^D ⊆ I`.
    #[test]
    fn standard_monomials_match_truncated_span(ideal in local_ideal()) {
        let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(2)).unwrap();
        let d = gb.min_power_of_maximal_inside().unwrap();
        let monomials: Vec<Monomial> = (0..=d).flat_map(|k| monomials_of_degree(2, k)).collect();
        let index: BTreeMap<&Monomial, usize> = monomials.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let mut span = SparseEchelon::new();
        for g in ideal.generators() {
            for t in &monomials {
                let row: BTreeMap<usize, Rational> = g
                    .mul_monomial(t)
                    .truncate(d)
                    .terms()
                    .map(|(m, c)| (index[m], c.clone()))
                    .collect();
                span.insert(row);
            }
        }
        prop_assert_eq!(gb.standard_monomials().unwrap().len(), monomials.len() - span.rank());
    }

    #[test]
    fn quotient_dimension_is_order_independent(ideal in local_ideal()) {
        let dims: Vec<usize> = orders()
            .iter()
            .map(|o| ideal.groebner_basis(o).unwrap().dimension().unwrap())
            .collect();
        prop_assert!(dims.windows(2).all(|w| w[0] == w[1]), "{dims:?}");
    }

    #[test]
    fn normal_form_is_idempotent_and_linear(ideal in local_ideal(), c in -3i64..=3) {
        let v = ideal.vars().clone();
        let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(2)).unwrap();
        let f = Polynomial::parse("x^3*y + 2*x*y^2 - y^5 + x", &v).unwrap();
        let g = Polynomial::parse("x^2*y^2 - 3*y^3 + 1", &v).unwrap();
        let nf = gb.normal_form(&f);
        prop_assert_eq!(gb.normal_form(&nf), nf.clone());
        let combo = &f + &g.scale(&rat(c));
        let lhs = gb.normal_form(&combo);
        let rhs = &nf + &gb.normal_form(&g).scale(&rat(c));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn display_parse_round_trip(ideal in local_ideal()) {
        for g in ideal.generators() {
            let back = Polynomial::parse(&g.to_string(), ideal.vars()).unwrap();
            prop_assert_eq!(&back, g);
        }
    }

    #[test]
    fn derivations_satisfy_leibniz_and_respect_the_filtration(ideal in local_ideal()) {
        let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(2)).unwrap();
        let s = ArtinAlgebra::from_groebner(&gb).unwrap();
        let der = compute_derivations(&s, &gb).unwrap();
        let filtration = s.filtration().to_vec();
        for op in der.basis_operators() {
            prop_assert!(is_derivation(&s, op));
            // D(m^k) ⊂ m^(k-1)
            for k in 2..filtration.len() {
                for v in filtration[k].basis() {
                    prop_assert!(filtration[k - 1].contains(&op.mul_vec(v).unwrap()));
                }
            }
        }
    }

    #[test]
    fn derivation_routes_agree(ideal in local_ideal()) {
        let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(2)).unwrap();
        let s = ArtinAlgebra::from_groebner(&gb).unwrap();
        let fast = compute_derivations(&s, &gb).unwrap();
        let slow = derivations_from_structure(&s).unwrap();
        prop_assert_eq!(fast.dim(), slow.dim());
        for op in fast.basis_operators() {
            prop_assert!(slow.contains(op));
        }
    }

    #[test]
    fn bracket_satisfies_jacobi(ideal in local_ideal(), seed in proptest::collection::vec(-2i64..=2, 12)) {
        let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(2)).unwrap();
        let s = ArtinAlgebra::from_groebner(&gb).unwrap();
        let der = compute_derivations(&s, &gb).unwrap();
        let n = der.dim();
        prop_assume!(n > 0);
        let coords = |offset: usize| -> Vec<Rational> { (0..n).map(|i| rat(seed[(i + offset) % seed.len()])).collect() };
        let (a, b, c) = (coords(0), coords(4), coords(8));
        let add = |u: &[Rational], v: &[Rational]| -> Vec<Rational> { u.iter().zip(v).map(|(p, q)| p + q).collect() };
        let t1 = der.bracket(&a, &der.bracket(&b, &c));
        let t2 = der.bracket(&b, &der.bracket(&c, &a));
        let t3 = der.bracket(&c, &der.bracket(&a, &b));
        let total = add(&add(&t1, &t2), &t3);
        prop_assert!(total.iter().all(|q| *q == rat(0)));
        // the coordinate bracket matches the matrix commutator
        let x = der.operator_from_coordinates(&a);
        let y = der.operator_from_coordinates(&b);
        prop_assert_eq!(der.operator_from_coordinates(&der.bracket(&a, &b)), x.commutator(&y).unwrap());
    }

    #[test]
    fn series_are_monotone_and_basis_independent(
        ideal in local_ideal(),
        shears in proptest::collection::vec((0usize..16, 0usize..16, -2i64..=2), 1..4),
    ) {
        let gb = ideal.groebner_basis(&MonomialOrder::degrevlex(2)).unwrap();
        let s = ArtinAlgebra::from_groebner(&gb).unwrap();
        prop_assume!(s.dim() <= 10);
        let der = compute_derivations(&s, &gb).unwrap();
        let report = der.series();
        prop_assert!(report.derived_dims.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(report.lower_central_dims.windows(2).all(|w| w[0] >= w[1]));
        prop_assert!(!report.nilpotent || report.solvable);
        if report.all_nilpotent_operators {
            prop_assert!(report.nilpotent);
            prop_assert!(der.basis_operators().iter().all(Matrix::is_nilpotent));
        }

        let d = s.dim();
        let p = shear_product(d, &shears);
        let inv = p.inverse().unwrap();
        let moved: Vec<Matrix> = der.basis_operators().iter().map(|op| conjugate(op, &p, &inv)).collect();
        let conj = LieAlgebraRep::from_operators(d, &moved).unwrap();
        prop_assert_eq!(conj.series(), report.clone());

        // the same algebra in a new basis has a conjugate derivation algebra
        let labels = (0..d).map(|i| format!("e{i}")).collect();
        let t = s.change_basis(&p, labels).unwrap();
        let der_t = derivations_from_structure(&t).unwrap();
        prop_assert_eq!(der_t.dim(), der.dim());
        for op in &moved {
            prop_assert!(der_t.contains(op));
        }
        prop_assert_eq!(der_t.series().solvable, report.solvable);
    }

    #[test]
    fn criteria_never_contradict_the_direct_decision(ideal in local_ideal()) {
        let order = MonomialOrder::degrevlex(2);
        let opts = LocalizeOptions::default();
        let factors = decompose_local(&ideal, &order, &opts).unwrap();
        prop_assert_eq!(factors.len(), 1);
        let crit = component_criteria(&factors[0], &opts).unwrap();
        let gb = ideal.groebner_basis(&order).unwrap();
        let s = ArtinAlgebra::from_groebner(&gb).unwrap();
        let solvable = compute_derivations(&s, &gb).unwrap().series().solvable;
        if crit.schulze_verdict() == Verdict::Solvable || crit.narrow_verdict() == Verdict::Solvable {
            prop_assert!(solvable, "criteria claim solvable for {:?}", ideal.generators());
        }
    }
}
