#![allow(dead_code)]

use char3::exactfield::{Gf3, MPoly, Monomial, RatFunc};
use char3::{Algebra, Elem, SymbolAlgebra};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_c0de;

pub fn rng(stream: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(SEED ^ stream.wrapping_mul(0x9e37_79b9_7f4a_7c15))
}

/// Random polynomial in `nvars` variables of total degree at most `deg`.
pub fn rand_poly(rng: &mut impl Rng, nvars: usize, deg: u32, density: f64) -> MPoly {
    let mut terms = Vec::new();
    let mut exps = vec![0u32; nvars];
    loop {
        let total: u32 = exps.iter().sum();
        if total <= deg && rng.gen_bool(density) {
            let c = Gf3::new(rng.gen_range(1..3));
            terms.push((Monomial::from_exps(&exps).unwrap(), c));
        }
        // odometer over the box [0, deg]^nvars
        let mut i = 0;
        loop {
            if i == nvars {
                return MPoly::from_terms(terms);
            }
            exps[i] += 1;
            if exps[i] <= deg {
                break;
            }
            exps[i] = 0;
            i += 1;
        }
    }
}

pub fn rand_poly_rf(rng: &mut impl Rng, nvars: usize, deg: u32) -> RatFunc {
    RatFunc::from_poly(rand_poly(rng, nvars, deg, 0.5))
}

pub fn rand_nonzero_poly(rng: &mut impl Rng, nvars: usize, deg: u32) -> MPoly {
    loop {
        let p = rand_poly(rng, nvars, deg, 0.5);
        if !p.is_empty() {
            return p;
        }
    }
}

pub fn rand_ratfunc(rng: &mut impl Rng, nvars: usize, deg: u32) -> RatFunc {
    let n = rand_poly(rng, nvars, deg, 0.5);
    let d = rand_nonzero_poly(rng, nvars, deg);
    RatFunc::new(n, d).unwrap()
}

pub fn ab_algebra() -> Algebra {
    SymbolAlgebra::new(RatFunc::var(0), RatFunc::var(1)).unwrap()
}

/// Element with polynomial coordinates of total degree at most `deg` in a, b.
pub fn rand_elem(rng: &mut impl Rng, alg: &Algebra, deg: u32) -> Elem {
    alg.element(std::array::from_fn(|_| rand_poly_rf(rng, 2, deg)))
}
