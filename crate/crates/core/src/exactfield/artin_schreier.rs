//! Deciding membership in the image of `t -> t^3 - t` on GF(3)(v1, ..., vn).
//!
//! Write a solution in lowest terms as `u/v` with `v` monic. Then
//! `t^3 - t = (u^3 - u v^2) / v^3`, and the fraction is already reduced: an
//! irreducible factor of `v` dividing `u^3 - u v^2` would divide `u^3`, so
//! it would divide `u`. Hence the target's denominator must equal `v^3`, so
//! `v` is its cube root, and `u` must solve `u^3 - v^2 u = num`.
//!
//! The map `u -> u^3 - v^2 u` is GF(3)-linear in the coefficients of `u`
//! (Frobenius fixes GF(3)). For the degree bound, fix a variable `w`: if
//! `deg_w u > deg_w v` the term `u^3` strictly dominates in `w`, so
//! `deg_w num = 3 deg_w u`. Otherwise `deg_w u <= deg_w v`. Either way
//! `deg_w u <= max(ceil(deg_w num / 3), deg_w v)`, which turns the search
//! into a finite linear system over GF(3) on the monomials in that box.

use num_traits::Zero;

use super::gf3::Gf3;
use super::monomial::{Monomial, MAX_VARS};
use super::mpoly::MPoly;
use super::ratfunc::RatFunc;
use crate::linalg;

/// Returns some `t` with `t^3 - t = f`, or `None` when `f` is not in the image.
///
/// When a solution exists the full solution set is `{t, t + 1, t + 2}`.
pub fn artin_schreier_solve(f: &RatFunc) -> Option<RatFunc> {
    if f.is_zero() {
        return Some(RatFunc::zero());
    }
    let v = f.den().cube_root()?;
    let num = f.num();
    let v2 = &v * &v;

    let mut bounds = [0u32; MAX_VARS];
    for (w, bound) in bounds.iter_mut().enumerate() {
        *bound = num.degree_in(w).div_ceil(3).max(v.degree_in(w));
    }
    let monomials = box_monomials(&bounds);

    // columns: images of the candidate monomials
    let images: Vec<MPoly> = monomials
        .iter()
        .map(|&m| {
            let u = MPoly::monomial(m, Gf3::ONE);
            &u.frobenius() - &(&v2 * &u)
        })
        .collect();
    let mut rows_index: Vec<Monomial> = images
        .iter()
        .chain(std::iter::once(num))
        .flat_map(|p| p.terms().iter().map(|t| t.0))
        .collect();
    rows_index.sort_unstable();
    rows_index.dedup();

    let coeff = |p: &MPoly, m: Monomial| -> Gf3 {
        p.terms()
            .iter()
            .find(|t| t.0 == m)
            .map_or(Gf3::ZERO, |t| t.1)
    };
    let matrix: Vec<Vec<Gf3>> = rows_index
        .iter()
        .map(|&r| images.iter().map(|img| coeff(img, r)).collect())
        .collect();
    let rhs: Vec<Gf3> = rows_index.iter().map(|&r| coeff(num, r)).collect();

    let sol = linalg::solve(&matrix, &rhs)?;
    let u = MPoly::from_terms(monomials.iter().copied().zip(sol));
    let t = RatFunc::new(u, v).expect("cube root of a nonzero denominator");
    debug_assert_eq!(&(&t.frobenius() - &t), f);
    Some(t)
}

/// Every monomial with `exp_w <= bounds[w]` for all `w`.
fn box_monomials(bounds: &[u32; MAX_VARS]) -> Vec<Monomial> {
    let mut out = vec![Monomial::ONE];
    for (w, &b) in bounds.iter().enumerate() {
        if b == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(out.len() * (b as usize + 1));
        for m in &out {
            for e in 0..=b {
                next.push(m.with_exp(w, e));
            }
        }
        out = next;
    }
    out
}

/// True when `f` is of the form `t^3 - t` for some `t` in the field.
pub fn in_wp_image(f: &RatFunc) -> bool {
    artin_schreier_solve(f).is_some()
}

#[allow(dead_code)]
fn wp(t: &RatFunc) -> RatFunc {
    &t.frobenius() - t
}
