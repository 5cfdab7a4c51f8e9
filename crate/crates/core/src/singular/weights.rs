//! Quasi-homogeneity: positive integer weights `k_i` and a degree `k` with
//! `Σ k_i a_i = k` for every exponent vector `a` of the polynomial.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::{Matrix, Rational};
use crate::poly::Polynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Weights {
    pub weights: Vec<BigInt>,
    pub degree: BigInt,
}

/// Strict inequality `Σ coeffs_j t_j + constant > 0`.
#[derive(Clone, Debug)]
struct Strict {
    coeffs: Vec<Rational>,
    constant: Rational,
}

/// A point satisfying every strict inequality, found by Fourier–Motzkin
/// elimination and back substitution, or `None` if there is none.
fn strict_feasible_point(nvars: usize, constraints: Vec<Strict>) -> Option<Vec<Rational>> {
    // systems[j] holds the constraints involving only t_0..t_j
    let mut systems: Vec<Vec<Strict>> = vec![Vec::new(); nvars + 1];
    systems[nvars] = constraints;
    for j in (0..nvars).rev() {
        let current = std::mem::take(&mut systems[j + 1]);
        let (mut pos, mut neg, mut rest) = (Vec::new(), Vec::new(), Vec::new());
        for c in &current {
            match c.coeffs[j].cmp(&Rational::zero()) {
                std::cmp::Ordering::Greater => pos.push(c.clone()),
                std::cmp::Ordering::Less => neg.push(c.clone()),
                std::cmp::Ordering::Equal => rest.push(c.clone()),
            }
        }
        for p in &pos {
            for q in &neg {
                // eliminate t_j with positive multipliers
                let (a, b) = (p.coeffs[j].clone(), -q.coeffs[j].clone());
                let coeffs = p.coeffs.iter().zip(&q.coeffs).map(|(x, y)| x * &b + y * &a).collect();
                rest.push(Strict {
                    coeffs,
                    constant: &p.constant * &b + &q.constant * &a,
                });
            }
        }
        systems[j + 1] = current;
        systems[j] = rest;
    }
    if systems[0].iter().any(|c| !c.constant.is_positive()) {
        return None;
    }
    let mut t = vec![Rational::zero(); nvars];
    for j in 0..nvars {
        // constraints of systems[j+1] only involve t_0..t_j
        let mut lower: Option<Rational> = None;
        let mut upper: Option<Rational> = None;
        for c in &systems[j + 1] {
            let a = &c.coeffs[j];
            if a.is_zero() {
                continue;
            }
            let mut rhs = -c.constant.clone();
            for (k, x) in c.coeffs.iter().enumerate().take(j) {
                rhs -= x * &t[k];
            }
            let bound = rhs / a;
            if a.is_positive() {
                lower = Some(lower.map_or(bound.clone(), |l| l.max(bound)));
            } else {
                upper = Some(upper.map_or(bound.clone(), |u| u.min(bound)));
            }
        }
        t[j] = match (lower, upper) {
            (Some(l), Some(u)) => (l + u) / Rational::from_integer(2.into()),
            (Some(l), None) => l + Rational::one(),
            (None, Some(u)) => u - Rational::one(),
            (None, None) => Rational::zero(),
        };
    }
    Some(t)
}

/// Smallest positive integer multiple of a positive rational vector.
fn clear_denominators(w: &[Rational]) -> Vec<BigInt> {
    let lcm = w.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = w
        .iter()
        .map(|x| (x * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

/// Weights making `p` quasi-homogeneous, or `None`. Homogeneous polynomials get
/// the weights `(1, …, 1)`. Otherwise the affine system `a·w = 1` over the
/// exponent vectors is solved exactly, positivity of `w` is decided by
/// Fourier–Motzkin elimination, and the chosen solution is scaled to coprime
/// integers.
pub fn quasi_homogeneous_weights(p: &Polynomial) -> Option<Weights> {
    let n = p.nvars();
    let exps: Vec<&[u32]> = p.terms().map(|(m, _)| m.exponents()).collect();
    if exps.is_empty() || exps.iter().any(|e| e.iter().all(|&x| x == 0)) {
        return None;
    }
    if let Some(deg) = p.total_degree() {
        if p.order() == Some(deg) {
            return Some(Weights {
                weights: vec![BigInt::one(); n],
                degree: BigInt::from(deg),
            });
        }
    }
    // [A | 1] with one row per monomial
    let rows: Vec<Vec<Rational>> = exps
        .iter()
        .map(|e| {
            let mut r: Vec<Rational> = e.iter().map(|&x| Rational::from_integer(x.into())).collect();
            r.push(Rational::one());
            r
        })
        .collect();
    let aug = Matrix::from_rows(n + 1, rows).ok()?;
    let (r, pivots) = aug.rref();
    if pivots.contains(&n) {
        return None;
    }
    // w = particular + Σ t_f basis_f over the free columns f
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let mut particular = vec![Rational::zero(); n];
    for (i, &p) in pivots.iter().enumerate() {
        particular[p] = r[(i, n)].clone();
    }
    let directions: Vec<Vec<Rational>> = free
        .iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); n];
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[(i, f)].clone();
            }
            v
        })
        .collect();
    let constraints = (0..n)
        .map(|i| Strict {
            coeffs: directions.iter().map(|d| d[i].clone()).collect(),
            constant: particular[i].clone(),
        })
        .collect();
    let t = strict_feasible_point(free.len(), constraints)?;
    let mut w = particular;
    for (tj, d) in t.iter().zip(&directions) {
        for (wi, di) in w.iter_mut().zip(d) {
            *wi += tj * di;
        }
    }
    let weights = clear_denominators(&w);
    let e0 = exps[0];
    let degree = e0.iter().zip(&weights).map(|(&a, k)| k * BigInt::from(a)).sum();
    Some(Weights { weights, degree })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::VarSet;

    fn qh(text: &str, vars: &[&str]) -> Option<(Vec<i64>, i64)> {
        let v = VarSet::new(vars.iter().copied()).unwrap();
        quasi_homogeneous_weights(&Polynomial::parse(text, &v).unwrap()).map(|w| {
            (
                w.weights.iter().map(|x| i64::try_from(x).unwrap()).collect(),
                i64::try_from(&w.degree).unwrap(),
            )
        })
    }

    #[test]
    fn weight_examples() {
        assert_eq!(qh("x^3 + y^5", &["x", "y"]), Some((vec![5, 3], 15)));
        assert_eq!(qh("x^3 + x*y^3 + y^7", &["x", "y"]), None);
        assert_eq!(qh("x^2*y^3", &["x", "y"]), Some((vec![1, 1], 5)));
        assert_eq!(qh("x^4 + y^4", &["x", "y"]), Some((vec![1, 1], 4)));
        assert_eq!(qh("x^3 + y^4 + z^2", &["x", "y", "z"]), Some((vec![4, 3, 6], 12)));
        // E7: x^3 + x y^3 has weights (3, 2; 9)
        assert_eq!(qh("x^3 + x*y^3", &["x", "y"]), Some((vec![3, 2], 9)));
    }

    #[test]
    fn free_direction_needs_positivity() {
        // x^2 y: any w with 2 w_x + w_y = 1 and both positive; the
        // homogeneous shortcut picks (1, 1)
        assert_eq!(qh("x^2*y + x^2*y", &["x", "y"]), Some((vec![1, 1], 3)));
        // x^2 + x y^2 + z: w_x = 1/2, w_y = 1/4, w_z = 1
        assert_eq!(qh("x^2 + x*y^2 + z", &["x", "y", "z"]), Some((vec![2, 1, 4], 4)));
        // x^3 + y z: w_y + w_z = 1 is a free direction, midpoint w_y = w_z = 1/2
        assert_eq!(qh("x^3 + y*z", &["x", "y", "z"]), Some((vec![2, 3, 3], 6)));
        // x y - x: forces w_y = 0
        assert_eq!(qh("x*y + x", &["x", "y"]), None);
    }

    #[test]
    fn fourier_motzkin_infeasible() {
        // t > 0 and -t > 0
        let c = vec![
            Strict {
                coeffs: vec![Rational::one()],
                constant: Rational::zero(),
            },
            Strict {
                coeffs: vec![-Rational::one()],
                constant: Rational::zero(),
            },
        ];
        assert_eq!(strict_feasible_point(1, c), None);
    }
}
