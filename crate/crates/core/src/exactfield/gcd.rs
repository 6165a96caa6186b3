//! Multivariate gcd over GF(3) by recursive content / primitive-part
//! splitting. Two-variable primitive parts go through the modular algorithm
//! in [`brown`]; otherwise (or if it gives up) the primitive pseudo-remainder
//! sequence in the variable of least degree.

use num_traits::{One, Zero};

use super::brown;
use super::gf3::Gf3;
use super::gf729::{self, G};
use super::monomial::{Monomial, MAX_VARS};
use super::mpoly::MPoly;

/// Monic gcd (leading coefficient 1 under graded lex). `gcd(0, 0) = 0`.
pub fn gcd(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.monic();
    }
    if g.is_zero() {
        return f.monic();
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one();
    }
    if f == g {
        return f.monic();
    }
    gcd_rec(f, g).monic()
}

fn gcd_rec(f: &MPoly, g: &MPoly) -> MPoly {
    if f.is_zero() {
        return g.clone();
    }
    if g.is_zero() {
        return f.clone();
    }
    if f.is_constant() || g.is_constant() {
        return MPoly::one();
    }
    if let Some(var) = single_var(f, g) {
        return univariate_gcd(f, g, var);
    }
    // monomial content splits off without any elimination
    let (mf, mg) = (monomial_content(f), monomial_content(g));
    if !mf.is_one() || !mg.is_one() {
        let m = mf.gcd(mg);
        let f = f
            .div_exact(&MPoly::monomial(mf, Gf3::ONE))
            .expect("content divides");
        let g = g
            .div_exact(&MPoly::monomial(mg, Gf3::ONE))
            .expect("content divides");
        return gcd_rec(&f, &g).mul_term(m, Gf3::ONE);
    }
    // gcd(f, h^3) through at most three gcds with the smaller h
    for (p, q) in [(f, g), (g, f)] {
        if let Some(h) = q.cube_root() {
            let mut rest = p.clone();
            let mut acc = MPoly::one();
            for _ in 0..3 {
                let c = gcd_rec(&rest, &h);
                if c.is_constant() {
                    break;
                }
                rest = rest.div_exact(&c).expect("gcd divides");
                acc = &acc * &c;
            }
            return acc;
        }
    }
    // cheap divisibility shortcuts
    if g.len() <= f.len() && f.div_exact(g).is_some() {
        return g.clone();
    }
    if f.len() <= g.len() && g.div_exact(f).is_some() {
        return f.clone();
    }
    let nvars = f.max_var().max(g.max_var()).expect("nonconstant") + 1;
    // a variable in only one argument is split off through the content;
    // otherwise the shared variable of least degree leads
    let var = (0..nvars)
        .find(|&v| f.contains_var(v) != g.contains_var(v))
        .or_else(|| {
            (0..nvars)
                .filter(|&v| f.contains_var(v))
                .min_by_key(|&v| f.degree_in(v).max(g.degree_in(v)))
        })
        .expect("nonconstant");
    match (f.contains_var(var), g.contains_var(var)) {
        (true, false) => gcd_rec(&content(f, var), g),
        (false, true) => gcd_rec(f, &content(g, var)),
        _ => {
            let cf = content(f, var);
            let cg = content(g, var);
            let c = gcd_rec(&cf, &cg);
            let pf = f.div_exact(&cf).expect("content divides");
            let pg = g.div_exact(&cg).expect("content divides");
            if let Some(y) = only_other_var(&pf, &pg, var) {
                if let Some(h) = brown::gcd_bivariate(&pf, &pg, var, y) {
                    return &c * &h;
                }
            }
            let mut a = pf.to_univariate(var);
            let mut b = pg.to_univariate(var);
            if a.len() < b.len() {
                std::mem::swap(&mut a, &mut b);
            }
            if coprime_by_specialization(&a, &b, var, nvars) {
                return c;
            }
            loop {
                let r = pseudo_rem(&a, &b);
                if r.is_empty() {
                    break;
                }
                if r.len() == 1 {
                    // nonzero constant in var: primitive parts are coprime
                    return c;
                }
                a = b;
                b = primitive(r);
            }
            let pb = primitive(b);
            &c * &MPoly::from_univariate(&pb, var)
        }
    }
}

/// Sufficient test for coprime primitive parts: a point of GF(3^6)^n (with
/// `var` left free) where the leading coefficient of `a` survives and the
/// images have a constant gcd.
fn coprime_by_specialization(a: &[MPoly], b: &[MPoly], var: usize, nvars: usize) -> bool {
    const TRIES: usize = 3;
    let mut point = [G::ZERO; MAX_VARS];
    for k in 0..TRIES {
        for v in (0..nvars).filter(|&v| v != var) {
            // fixed spread of points, away from the prime field
            point[v] = G::nth(7 + 101 * v + 263 * k);
        }
        let lc = gf729::eval(a.last().expect("nonzero"), &point);
        if lc.is_zero() {
            continue;
        }
        let ia: Vec<G> = a.iter().map(|c| gf729::eval(c, &point)).collect();
        let ib: Vec<G> = b.iter().map(|c| gf729::eval(c, &point)).collect();
        if gf729::gcd_degree(ia, ib) == 0 {
            return true;
        }
    }
    false
}

/// The single variable besides `var` that `f` and `g` involve, if any.
fn only_other_var(f: &MPoly, g: &MPoly, var: usize) -> Option<usize> {
    let mut other = None;
    for v in (0..MAX_VARS).filter(|&v| v != var) {
        if f.contains_var(v) || g.contains_var(v) {
            if other.is_some() {
                return None;
            }
            other = Some(v);
        }
    }
    other
}

/// The one variable `f` and `g` are both confined to, if any.
fn single_var(f: &MPoly, g: &MPoly) -> Option<usize> {
    let var = f.max_var()?;
    let only = |p: &MPoly| p.terms().iter().all(|(m, _)| m.degree() == m.exp(var));
    (g.max_var() == Some(var) && only(f) && only(g)).then_some(var)
}

fn dense(p: &MPoly, var: usize) -> Vec<Gf3> {
    let mut out = vec![Gf3::ZERO; p.degree_in(var) as usize + 1];
    for &(m, c) in p.terms() {
        out[m.exp(var) as usize] = c;
    }
    out
}

fn univariate_gcd(f: &MPoly, g: &MPoly, var: usize) -> MPoly {
    let h = univariate_euclid(dense(f, var), dense(g, var));
    let terms: Vec<MPoly> = h.into_iter().map(MPoly::constant).collect();
    MPoly::from_univariate(&terms, var).monic()
}

fn univariate_euclid(mut a: Vec<Gf3>, mut b: Vec<Gf3>) -> Vec<Gf3> {
    let trim = |v: &mut Vec<Gf3>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = b.last().unwrap().inverse().expect("nonzero");
        while a.len() >= b.len() {
            let k = *a.last().unwrap() * inv;
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] -= k * bc;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    a
}

/// The largest monomial dividing every term.
fn monomial_content(f: &MPoly) -> Monomial {
    let mut terms = f.terms().iter();
    let first = terms.next().expect("nonzero").0;
    terms.fold(first, |acc, (m, _)| acc.gcd(*m))
}

/// gcd of the coefficients of `f` viewed as a polynomial in `var`.
fn content(f: &MPoly, var: usize) -> MPoly {
    let coeffs = f.to_univariate(var);
    content_of(&coeffs)
}

fn content_of(coeffs: &[MPoly]) -> MPoly {
    let mut nonzero: Vec<&MPoly> = coeffs.iter().filter(|c| !c.is_zero()).collect();
    nonzero.sort_by_key(|c| c.len());
    let mut acc = MPoly::zero();
    for c in nonzero {
        acc = gcd_rec(&acc, c);
        if acc.is_constant() {
            return MPoly::one();
        }
    }
    acc.monic()
}

fn primitive(coeffs: Vec<MPoly>) -> Vec<MPoly> {
    let c = content_of(&coeffs);
    if c.is_one() {
        return coeffs;
    }
    coeffs
        .iter()
        .map(|x| x.div_exact(&c).expect("content divides"))
        .collect()
}

fn trim(v: &mut Vec<MPoly>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Pseudo-remainder of univariate polynomials with MPoly coefficients.
fn pseudo_rem(a: &[MPoly], b: &[MPoly]) -> Vec<MPoly> {
    let lb = b.last().expect("nonzero divisor").clone();
    let db = b.len() - 1;
    let mut r: Vec<MPoly> = a.to_vec();
    trim(&mut r);
    while r.len() > db {
        let lr = r.last().unwrap().clone();
        let shift = r.len() - 1 - db;
        for c in r.iter_mut() {
            *c = &*c * &lb;
        }
        for (i, bc) in b.iter().enumerate() {
            let t = &lr * bc;
            r[i + shift] = &r[i + shift] - &t;
        }
        trim(&mut r);
    }
    r
}
