//! Acceptance suite: prints one PASS/FAIL line per criterion and exits with a
//! nonzero status if any criterion fails.

use std::collections::BTreeMap;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use artinlab::analysis::{analyze, Analysis};
use artinlab::artin::{decompose_local, ArtinAlgebra};
use artinlab::criteria::{complete_intersection_check, narrow_test, schulze_test, Verdict};
use artinlab::groebner::{Ideal, LocalizeOptions};
use artinlab::liealg::compute_derivations;
use artinlab::linalg::SparseEchelon;
use artinlab::poly::{monomials_of_degree, Monomial};
use artinlab::singular::{moduli_algebra, yau_report};
use artinlab::{MonomialOrder, Polynomial, Rational, VarSet};
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

/// A named acceptance check.
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn vars(names: &[&str]) -> VarSet {
    VarSet::new(names.iter().copied()).unwrap()
}

fn ideal(gens: &str, names: &[&str]) -> Ideal {
    Ideal::parse(gens, &vars(names)).unwrap()
}

fn analyze_default(gens: &str, names: &[&str]) -> Result<Analysis, String> {
    let i = ideal(gens, names);
    analyze(&i, &MonomialOrder::degrevlex(i.nvars()), &LocalizeOptions::default()).map_err(|e| e.to_string())
}

fn unipotent_ideal() -> Ideal {
    ideal("y^5, (x+y)^6, x^5 - x^3*y^3, x^4*y", &["x", "y"])
}

fn unipotent_order() -> MonomialOrder {
    MonomialOrder::parse("deglex:y,x", &vars(&["x", "y"])).unwrap()
}

fn criterion_1() -> Outcome {
    let i = unipotent_ideal();
    let order = unipotent_order();
    let gb = i.groebner_basis(&order).map_err(|e| e.to_string())?;
    let published = ["x^6", "y^5", "x^3*y^3 - x^5", "3*x^2*y^4 + 4*x^5", "x^4*y"];
    let mut expected: Vec<Polynomial> = published
        .iter()
        .map(|t| {
            let p = Polynomial::parse(t, i.vars()).unwrap();
            let (_, c) = p.leading_term(&order).unwrap();
            p.scale(&c.recip())
        })
        .collect();
    let mut got = gb.elements().to_vec();
    expected.sort_by_key(|p| p.to_string());
    got.sort_by_key(|p| p.to_string());
    ensure(got == expected, format!("basis {got:?}"))?;
    let shown: Vec<String> = gb.elements().iter().map(|p| p.to_string()).collect();
    Ok(shown.join(", "))
}

fn criterion_2() -> Outcome {
    let gb = unipotent_ideal()
        .groebner_basis(&unipotent_order())
        .map_err(|e| e.to_string())?;
    let s = ArtinAlgebra::from_groebner(&gb).map_err(|e| e.to_string())?;
    ensure(s.dim() == 19, format!("dim {}", s.dim()))?;
    let x5 = s
        .monomial_index(&Monomial::new(vec![5, 0]))
        .ok_or("x^5 is not standard")?;
    let mut e = vec![Rational::zero(); s.dim()];
    e[x5] = Rational::from_integer(1.into());
    let m6 = s.power(6);
    ensure(m6.dim() == 1 && m6.contains(&e), "m^6 is not spanned by x^5")?;
    ensure(s.power(7).is_zero(), "m^7 is not zero")?;
    let der = compute_derivations(&s, &gb).map_err(|e| e.to_string())?;
    ensure(der.all_nilpotent(), "Der S contains a non-nilpotent operator")?;
    Ok(format!(
        "dim S = 19, m^6 = <x^5>, m^7 = 0, dim Der S = {}, all operators nilpotent",
        der.dim()
    ))
}

fn criterion_3() -> Outcome {
    let a = analyze_default("x^2, y^3, x*y^2", &["x", "y"])?;
    let c = &a.criteria;
    ensure(a.dim == 5 && a.local, "dimension or locality")?;
    ensure(
        c.l == 2 && c.min_gens == 3 && c.n + c.l as usize - 1 == 3,
        "l or min_gens",
    )?;
    ensure(c.extremal() && c.schulze == Verdict::Inconclusive, "extremality")?;
    ensure(c.narrow_gr, "not narrow")?;
    ensure(a.der_dim == 7 && a.series.solvable, format!("dim Der {}", a.der_dim))?;
    Ok("dim 5, l = 2, min_gens = 3 = n+l-1, narrow, dim Der = 7, solvable".into())
}

fn criterion_4() -> Outcome {
    let a = analyze_default("x^3, x^2*y, x^2*z, y^4, z^4", &["x", "y", "z"])?;
    let c = &a.criteria;
    ensure(
        c.l == 3 && c.min_gens == 5 && c.extremal(),
        format!("l {} min_gens {}", c.l, c.min_gens),
    )?;
    ensure(c.narrow_gr, "not narrow")?;
    ensure(a.series.solvable, "Der not solvable")?;
    Ok(format!(
        "l = 3, min_gens = 5 = n+l-1, narrow, dim Der = {}, solvable",
        a.der_dim
    ))
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for n in 3..=5 {
        let names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        let gens: Vec<String> = names.iter().map(|v| format!("{v}^2")).collect();
        let start = Instant::now();
        let i = ideal(&gens.join(", "), &refs);
        let opts = LocalizeOptions::default();
        let sch = schulze_test(&i, &opts).map_err(|e| e.to_string())?;
        ensure(
            sch.verdict == Verdict::Solvable,
            format!("n = {n}: Schulze inconclusive"),
        )?;
        let gb = i
            .groebner_basis(&MonomialOrder::degrevlex(n))
            .map_err(|e| e.to_string())?;
        let s = ArtinAlgebra::from_groebner(&gb).map_err(|e| e.to_string())?;
        let gr = s.associated_graded().map_err(|e| e.to_string())?;
        ensure(!narrow_test(&gr), format!("n = {n}: narrow"))?;
        let der = compute_derivations(&s, &gb).map_err(|e| e.to_string())?;
        ensure(der.series().solvable, format!("n = {n}: Der not solvable"))?;
        let elapsed = start.elapsed();
        if n == 5 {
            ensure(s.dim() == 32, "dim for n = 5")?;
            ensure(elapsed < Duration::from_secs(30), format!("n = 5 took {elapsed:?}"))?;
        }
        notes.push(format!("n={n}: dim {} Der {} in {:.2?}", s.dim(), der.dim(), elapsed));
    }
    Ok(notes.join("; "))
}

fn criterion_6() -> Outcome {
    let a = analyze_default("x1^2, x1*x2, x2^2, x3^2", &["x1", "x2", "x3"])?;
    ensure(
        a.criteria.min_gens == 4 && a.criteria.extremal(),
        "l = 2 case not extremal",
    )?;
    ensure(!a.series.solvable, "l = 2 case: Der solvable")?;

    let b = analyze_default("x1^3, x1^2*x2, x1*x2^2, x2^3, x3^3", &["x1", "x2", "x3"])?;
    ensure(
        b.criteria.l == 3 && b.criteria.min_gens == 5 && b.criteria.extremal(),
        "l = 3 case not extremal",
    )?;
    ensure(!b.series.solvable, "l = 3 case: Der solvable")?;

    // the same algebra assembled as a tensor product of its two factors
    let alg = |g: &str, n: &[&str]| {
        let i = ideal(g, n);
        ArtinAlgebra::from_groebner(&i.groebner_basis(&MonomialOrder::degrevlex(i.nvars())).unwrap()).unwrap()
    };
    let t = alg("x1^3, x1^2*x2, x1*x2^2, x2^3", &["x1", "x2"])
        .tensor_product(&alg("x3^3", &["x3"]))
        .unwrap();
    let der = artinlab::liealg::derivations_from_structure(&t).map_err(|e| e.to_string())?;
    ensure(
        t.dim() == b.dim && der.dim() == b.der_dim,
        "tensor product route disagrees",
    )?;
    ensure(!der.series().solvable, "tensor product route: Der solvable")?;
    Ok(format!(
        "l = 2: min_gens 4, dim Der {} non-solvable; l = 3: min_gens 5, dim Der {} non-solvable",
        a.der_dim, b.der_dim
    ))
}

fn criterion_7() -> Outcome {
    let opts = LocalizeOptions::default();
    let one = ideal("x^2 - x^3", &["x"]);
    let dims: Vec<usize> = decompose_local(&one, &MonomialOrder::degrevlex(1), &opts)
        .map_err(|e| e.to_string())?
        .iter()
        .map(|f| f.algebra.dim())
        .collect();
    ensure(dims == vec![2, 1], format!("dims {dims:?}"))?;

    let mut notes = Vec::new();
    for (gens, names, expect) in [
        ("x^2 - x^3", &["x"][..], vec![2, 1]),
        ("x^2*(x-1), y^2", &["x", "y"][..], vec![4, 2]),
    ] {
        let a = analyze_default(gens, names)?;
        let dims: Vec<usize> = a.components.iter().map(|c| c.dim()).collect();
        ensure(dims == expect, format!("{gens}: dims {dims:?}"))?;
        ensure(dims.iter().sum::<usize>() == a.dim, format!("{gens}: dims do not sum"))?;
        let der_sum: usize = a.components.iter().map(|c| c.der_dim).sum();
        ensure(
            der_sum == a.der_dim,
            format!("{gens}: dim Der {} vs sum {der_sum}", a.der_dim),
        )?;
        let ci = complete_intersection_check(&a.ideal).map_err(|e| e.to_string())?;
        ensure(ci, format!("{gens}: not a complete intersection"))?;
        ensure(
            a.series.solvable,
            format!("{gens}: complete intersection with non-solvable Der"),
        )?;
        notes.push(format!("{gens}: dims {dims:?}, dim Der {} = {der_sum}", a.der_dim));
    }
    Ok(notes.join("; "))
}

const LOCAL_CORPUS: &[(&str, &[&str])] = &[
    ("x^2", &["x"]),
    ("x^5", &["x"]),
    ("x^2, y^2", &["x", "y"]),
    ("x^2, x*y, y^3", &["x", "y"]),
    ("x^2, y^3, x*y^2", &["x", "y"]),
    ("x^3, x^2*y, x^2*z, y^4, z^4", &["x", "y", "z"]),
    ("x1^2, x2^2, x3^2", &["x1", "x2", "x3"]),
    ("x1^2, x1*x2, x2^2, x3^2", &["x1", "x2", "x3"]),
    ("x1^3, x1^2*x2, x1*x2^2, x2^3, x3^3", &["x1", "x2", "x3"]),
    ("y^5, (x+y)^6, x^5 - x^3*y^3, x^4*y", &["x", "y"]),
    ("x^2 - y^3, x*y", &["x", "y"]),
    ("x - y^2, y^4", &["x", "y"]),
    ("x^3 + y^3, x*y", &["x", "y"]),
];

fn criterion_8() -> Outcome {
    let mut checked = 0;
    for (gens, names) in LOCAL_CORPUS {
        let a = analyze_default(gens, names)?;
        for c in &a.components {
            let b = &c.socle_bound;
            let u = &c.unipotent;
            ensure(
                b.socle_bound_holds,
                format!("{gens}: dim Der {} < {}", b.der_dim, b.socle_bound),
            )?;
            ensure(c.der_dim >= u.dim_reported, format!("{gens}: dim Der below dim U"))?;
            ensure(
                u.all_derivations,
                format!("{gens}: constructed operator is not a derivation"),
            )?;
            let der = compute_derivations(&c.factor.algebra, &c.factor.component.gb).map_err(|e| e.to_string())?;
            ensure(
                u.derivations.iter().all(|d| der.contains(d)),
                format!("{gens}: operator outside Der S"),
            )?;
            ensure(b.positive_holds, format!("{gens}: Der S = 0 with dim S > 1"))?;
            checked += 1;
        }
    }
    Ok(format!("{checked} local algebras satisfy all four bounds"))
}

/// `dim K[x]/((p, J(p)) + m^T)` from the span of all multiples `u·g` truncated
/// at degree `T`.
fn tjurina_oracle(p: &Polynomial, t: u32) -> usize {
    let n = p.nvars();
    let mut gens = vec![p.clone()];
    gens.extend((0..n).map(|i| p.partial_derivative(i)));
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    let mut all = Vec::new();
    for d in 0..t {
        for m in monomials_of_degree(n, d) {
            index.insert(m.clone(), index.len());
            all.push(m);
        }
    }
    let mut span = SparseEchelon::new();
    for g in &gens {
        for u in &all {
            let mut v = BTreeMap::new();
            for (m, c) in g.mul_monomial(u).terms() {
                if let Some(&i) = index.get(m) {
                    v.insert(i, c.clone());
                }
            }
            span.insert(v);
        }
    }
    all.len() - span.rank()
}

fn criterion_9() -> Outcome {
    let suite: &[(&str, &[&str], bool)] = &[
        ("x^3 + y^2", &["x", "y"], true),
        ("x^3 + y^5", &["x", "y"], true),
        ("x^4 + y^4", &["x", "y"], true),
        ("x^2 + 2*x*y + y^2 + y^3", &["x", "y"], false),
        ("x^3 + x*y^3 + y^7", &["x", "y"], false),
        ("x^3 + y^4 + z^2", &["x", "y", "z"], true),
    ];
    let opts = LocalizeOptions::default();
    let mut notes = Vec::new();
    for (text, names, qh) in suite {
        let p = Polynomial::parse(text, &vars(names)).unwrap();
        let m = moduli_algebra(&p, &opts).map_err(|e| format!("{text}: {e}"))?;
        let r = yau_report(&p, &opts).map_err(|e| format!("{text}: {e}"))?;
        ensure(r.solvable(), format!("{text}: Der A(H) not solvable"))?;
        ensure(m.quasi_homogeneous() == *qh, format!("{text}: quasi-homogeneity"))?;
        if *qh {
            ensure(
                m.p_in_jacobian && m.tjurina == m.milnor,
                format!("{text}: p not in J(p)"),
            )?;
        }
        let oracle = tjurina_oracle(&p, 12);
        ensure(
            oracle == m.tjurina,
            format!("{text}: tjurina {} vs oracle {oracle}", m.tjurina),
        )?;
        notes.push(format!("{text}: tau {}", m.tjurina));
    }
    Ok(notes.join("; "))
}

fn random_ideal(rng: &mut ChaCha8Rng) -> (Ideal, String) {
    let n = rng.gen_range(1..=3usize);
    let names: Vec<String> = ["x", "y", "z"][..n].iter().map(|s| s.to_string()).collect();
    let v = VarSet::new(names.iter().map(String::as_str)).unwrap();
    let random_monomial = |rng: &mut ChaCha8Rng| -> Monomial {
        let deg = rng.gen_range(2..=4u32);
        let mut e = vec![0u32; n];
        for _ in 0..deg {
            e[rng.gen_range(0..n)] += 1;
        }
        Monomial::new(e)
    };
    let one = Rational::from_integer(1.into());
    let mut gens: Vec<Polynomial> = (0..n)
        .map(|i| Polynomial::monomial(&v, Monomial::var(n, i).pow_of(rng.gen_range(2..=5)), one.clone()))
        .collect();
    for _ in 0..rng.gen_range(0..=2) {
        gens.push(Polynomial::monomial(&v, random_monomial(rng), one.clone()));
    }
    let coeffs = [1i64, -1, 2, -3];
    for _ in 0..rng.gen_range(1..=2) {
        let c = Rational::from_integer(coeffs[rng.gen_range(0..coeffs.len())].into());
        let b = &Polynomial::monomial(&v, random_monomial(rng), one.clone())
            - &Polynomial::monomial(&v, random_monomial(rng), c);
        if !b.is_zero() {
            gens.push(b);
        }
    }
    let text = gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ");
    (Ideal::new(&v, gens).unwrap(), text)
}

trait PowOf {
    fn pow_of(&self, e: u32) -> Monomial;
}

impl PowOf for Monomial {
    fn pow_of(&self, e: u32) -> Monomial {
        Monomial::new(self.exponents().iter().map(|x| x * e).collect())
    }
}

fn criterion_10() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x05ee_da17);
    let opts = LocalizeOptions::default();
    let (mut tested, mut schulze_hits, mut narrow_hits, mut non_solvable) = (0, 0, 0, 0);
    let mut attempts = 0;
    while tested < 200 {
        attempts += 1;
        if attempts > 5000 {
            return Err(format!("only {tested} usable instances generated"));
        }
        let (i, text) = random_ideal(&mut rng);
        let gb = i
            .groebner_basis(&MonomialOrder::degrevlex(i.nvars()))
            .map_err(|e| e.to_string())?;
        match gb.dimension() {
            Ok(d) if (2..=30).contains(&d) => {}
            _ => continue,
        }
        let s = ArtinAlgebra::from_groebner(&gb).map_err(|e| e.to_string())?;
        let schulze = schulze_test(&i, &opts).map_err(|e| format!("{text}: {e}"))?;
        let narrow = narrow_test(&s.associated_graded().map_err(|e| format!("{text}: {e}"))?);
        let der = compute_derivations(&s, &gb).map_err(|e| format!("{text}: {e}"))?;
        let solvable = der.series().solvable;
        tested += 1;
        schulze_hits += usize::from(schulze.verdict == Verdict::Solvable);
        narrow_hits += usize::from(narrow);
        non_solvable += usize::from(!solvable);
        if (schulze.verdict == Verdict::Solvable || narrow) && !solvable {
            return Err(format!(
                "counterexample: ({text}) schulze {} narrow {narrow}",
                schulze.verdict
            ));
        }
    }
    Ok(format!(
        "{tested} ideals: Schulze fired {schulze_hits}, narrow fired {narrow_hits}, non-solvable {non_solvable}, no counterexample"
    ))
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("Groebner basis reproduction", criterion_1),
        ("unipotent example: dim 19, nilpotent Der", criterion_2),
        ("extremal two-variable example", criterion_3),
        ("extremal three-variable example", criterion_4),
        ("squares: Schulze holds, narrow fails", criterion_5),
        ("extremal tensor products: Der non-solvable", criterion_6),
        ("local decomposition and Der additivity", criterion_7),
        ("socle bounds on the local corpus", criterion_8),
        ("hypersurface singularity suite", criterion_9),
        ("criteria soundness sweep", criterion_10),
    ];
    let mut failures = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panic: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{secs:.2}s] {name}: {detail}", k + 1),
            Err(detail) => {
                failures += 1;
                println!("criterion {:>2} FAIL [{secs:.2}s] {name}: {detail}", k + 1);
            }
        }
    }
    if failures > 0 {
        eprintln!("{failures} acceptance criteria failed");
        std::process::exit(1);
    }
}
