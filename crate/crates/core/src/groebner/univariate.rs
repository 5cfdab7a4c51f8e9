//! Dense univariate polynomials over the rationals, coefficients low to high.
//! Only what point finding needs: gcd, square-free part and rational roots.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::linalg::Rational;

/// Trial division stops at this bound; a larger cofactor is kept whole.
const TRIAL_DIVISION_LIMIT: u64 = 1_000_000;

fn trim(mut p: Vec<Rational>) -> Vec<Rational> {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[Rational]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn derivative(p: &[Rational]) -> Vec<Rational> {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * Rational::from_integer(BigInt::from(i)))
            .collect(),
    )
}

/// Remainder of `a` modulo nonzero `b`.
fn rem(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &b[db];
        for i in 0..=db {
            let t = &f * &b[i];
            r[dr - db + i] -= t;
        }
        r = trim(r);
    }
    r
}

/// Exact quotient `a / b`, assuming `b` divides `a`.
pub fn div_exact(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let db = degree(b).expect("nonzero divisor");
    let mut r = trim(a.to_vec());
    let Some(da) = degree(&r) else {
        return Vec::new();
    };
    if da < db {
        return Vec::new();
    }
    let mut q = vec![Rational::zero(); da - db + 1];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let f = &r[dr] / &b[db];
        for i in 0..=db {
            let t = &f * &b[i];
            r[dr - db + i] -= t;
        }
        q[dr - db] = f;
        r = trim(r);
    }
    trim(q)
}

fn monic(p: Vec<Rational>) -> Vec<Rational> {
    match degree(&p) {
        Some(d) => {
            let lc = p[d].clone();
            p.into_iter().map(|c| c / &lc).collect()
        }
        None => p,
    }
}

pub fn gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
    while degree(&b).is_some() {
        let r = rem(&a, &b);
        a = b;
        b = r;
    }
    monic(a)
}

/// Monic square-free part `p / gcd(p, p')`.
pub fn square_free_part(p: &[Rational]) -> Vec<Rational> {
    let p = trim(p.to_vec());
    if degree(&p).unwrap_or(0) == 0 {
        return monic(p);
    }
    let g = gcd(&p, &derivative(&p));
    monic(div_exact(&p, &g))
}

pub fn eval(p: &[Rational], x: &Rational) -> Rational {
    p.iter().rev().fold(Rational::zero(), |acc, c| acc * x + c)
}

/// Positive divisors of `n`, via trial division up to a fixed bound. A cofactor
/// above the bound is treated as prime, so some divisors may be missing; callers
/// must compare the number of roots found against the degree.
fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut d: u64 = 2;
    while d <= TRIAL_DIVISION_LIMIT {
        let bd = BigInt::from(d);
        if &bd * &bd > n {
            break;
        }
        let mut e = 0;
        while (&n % &bd).is_zero() {
            n /= &bd;
            e += 1;
        }
        if e > 0 {
            factors.push((bd, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > BigInt::one() {
        factors.push((n, 1));
    }
    let mut out = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        for base in &out {
            let mut pw = base.clone();
            for _ in 0..=e {
                next.push(pw.clone());
                pw *= &p;
            }
        }
        out = next;
    }
    out.sort();
    out
}

/// Distinct rational roots in increasing order.
pub fn rational_roots(p: &[Rational]) -> Vec<Rational> {
    let sf = square_free_part(p);
    let Some(deg) = degree(&sf) else {
        return Vec::new();
    };
    // clear denominators
    let lcm = sf.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = sf
        .iter()
        .map(|c| (c * Rational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut roots = Vec::new();
    let low = ints.iter().position(|c| !c.is_zero()).expect("nonzero");
    if low > 0 {
        roots.push(Rational::zero());
    }
    let reduced = &ints[low..=deg];
    if reduced.len() > 1 {
        let nums = divisors(&reduced[0]);
        let dens = divisors(&reduced[reduced.len() - 1]);
        for q in &dens {
            for n in &nums {
                if n.gcd(q) != BigInt::one() {
                    continue;
                }
                for sign in [Sign::Plus, Sign::Minus] {
                    let cand = Rational::new(BigInt::from_biguint(sign, n.magnitude().clone()), q.clone());
                    if eval(&sf, &cand).is_zero() && !roots.contains(&cand) {
                        roots.push(cand);
                    }
                }
                if roots.len() == deg {
                    break;
                }
            }
        }
    }
    roots.sort();
    roots
}
