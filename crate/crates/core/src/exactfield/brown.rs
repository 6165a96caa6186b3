//! Modular gcd for polynomials in two variables: evaluate the second
//! variable at points of GF(3^6), take univariate gcds, interpolate, and
//! confirm by exact division.

use num_traits::One;

use super::gf3::Gf3;
use super::gf729::{self, G};
use super::monomial::Monomial;
use super::mpoly::MPoly;

/// Dense coefficients `c[i][j]` of `x^i y^j`.
type Dense = Vec<Vec<Gf3>>;

fn to_dense(p: &MPoly, x: usize, y: usize) -> Dense {
    let mut out = vec![vec![Gf3::ZERO; p.degree_in(y) as usize + 1]; p.degree_in(x) as usize + 1];
    for &(m, c) in p.terms() {
        out[m.exp(x) as usize][m.exp(y) as usize] = c;
    }
    out
}

fn eval_y(coeffs: &[Gf3], at: G) -> G {
    coeffs
        .iter()
        .rev()
        .fold(G::ZERO, |acc, &c| acc.mul(at).add(G::from_gf3(c)))
}

fn degree(v: &[Gf3]) -> usize {
    v.iter().rposition(|c| !c.is_zero()).unwrap_or(0)
}

/// The gcd of `f` and `g`, both primitive in `x` and involving only `x` and
/// `y`, up to a unit. `None` when the points run out or no candidate divides
/// both, so the caller can fall back to elimination.
pub(crate) fn gcd_bivariate(f: &MPoly, g: &MPoly, x: usize, y: usize) -> Option<MPoly> {
    let (df, dg) = (to_dense(f, x, y), to_dense(g, x, y));
    let (lf, lg) = (df.last()?, dg.last()?);
    let gamma = gf3_gcd(lf.clone(), lg.clone());
    // y-degree of gamma * h / lc(h) is at most this
    let bound = f.degree_in(y).min(g.degree_in(y)) as usize + degree(&gamma);

    let mut points: Vec<(G, Vec<G>)> = Vec::new();
    let mut deg_x = usize::MAX;
    for k in 0..729 {
        let at = G::nth(k);
        if eval_y(lf, at).is_zero() || eval_y(lg, at).is_zero() {
            continue;
        }
        let fa: Vec<G> = df.iter().map(|r| eval_y(r, at)).collect();
        let ga: Vec<G> = dg.iter().map(|r| eval_y(r, at)).collect();
        let h = gf729::gcd_monic(fa, ga);
        let d = h.len() - 1;
        if d == 0 {
            return Some(MPoly::one());
        }
        if d > deg_x {
            continue;
        }
        if d < deg_x {
            deg_x = d;
            points.clear();
        }
        let scale = eval_y(&gamma, at);
        points.push((at, h.into_iter().map(|c| c.mul(scale)).collect()));
        if points.len() > bound {
            if let Some(h) = candidate(&points, deg_x, x, y) {
                if f.div_exact(&h).is_some() && g.div_exact(&h).is_some() {
                    return Some(h);
                }
            }
        }
    }
    None
}

/// Interpolates each `x` coefficient over the points and takes the
/// primitive part in `x`.
fn candidate(points: &[(G, Vec<G>)], deg_x: usize, x: usize, y: usize) -> Option<MPoly> {
    let ys: Vec<G> = points.iter().map(|p| p.0).collect();
    let mut rows = Vec::with_capacity(deg_x + 1);
    for i in 0..=deg_x {
        let vals: Vec<G> = points.iter().map(|p| p.1[i]).collect();
        let coeffs = gf729::interpolate(&ys, &vals);
        let row: Option<Vec<Gf3>> = coeffs.iter().map(|c| c.to_gf3()).collect();
        rows.push(row?);
    }
    let content = rows
        .iter()
        .filter(|r| r.iter().any(|c| !c.is_zero()))
        .fold(Vec::new(), |acc, r| gf3_gcd(acc, r.clone()));
    let mut terms = Vec::new();
    for (i, row) in rows.iter().enumerate() {
        let row = gf3_div(row, &content);
        for (j, c) in row.into_iter().enumerate() {
            if !c.is_zero() {
                let mut exps = [0u32; super::monomial::MAX_VARS];
                exps[x] = i as u32;
                exps[y] = j as u32;
                terms.push((Monomial::from_exps(&exps).ok()?, c));
            }
        }
    }
    Some(MPoly::from_terms(terms))
}

fn trim(v: &mut Vec<Gf3>) {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
}

/// Monic gcd over GF(3); the gcd with an empty vector is the other argument.
fn gf3_gcd(mut a: Vec<Gf3>, mut b: Vec<Gf3>) -> Vec<Gf3> {
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = b.last().expect("nonzero").inverse().expect("nonzero");
        while a.len() >= b.len() {
            let k = *a.last().expect("nonzero") * inv;
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] -= k * bc;
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    if let Some(inv) = a.last().and_then(|c| c.inverse()) {
        a.iter_mut().for_each(|c| *c *= inv);
    }
    a
}

/// Exact quotient over GF(3).
fn gf3_div(a: &[Gf3], b: &[Gf3]) -> Vec<Gf3> {
    let mut a = a.to_vec();
    trim(&mut a);
    if a.is_empty() {
        return a;
    }
    let inv = b.last().expect("nonzero").inverse().expect("nonzero");
    let mut q = vec![Gf3::ZERO; a.len() + 1 - b.len()];
    while a.len() >= b.len() {
        let k = *a.last().expect("nonzero") * inv;
        let shift = a.len() - b.len();
        q[shift] = k;
        for (i, &bc) in b.iter().enumerate() {
            a[i + shift] -= k * bc;
        }
        trim(&mut a);
    }
    q
}
