//! GF(3^6) by log tables, used only to specialize polynomials at points
//! outside the prime field.

use std::sync::OnceLock;

use super::gf3::Gf3;
use super::monomial::MAX_VARS;
use super::mpoly::MPoly;

const DIGITS: usize = 6;
const ORDER: usize = 729;
const UNITS: usize = ORDER - 1;

/// An element as six base-3 digits, low digit first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct G(u16);

struct Tables {
    log: Vec<u16>,
    exp: Vec<u16>,
}

fn digits(v: u16) -> [u8; DIGITS] {
    let mut out = [0u8; DIGITS];
    let mut v = v;
    for d in out.iter_mut() {
        *d = (v % 3) as u8;
        v /= 3;
    }
    out
}

fn from_digits(d: [u8; DIGITS]) -> u16 {
    d.iter().rev().fold(0u16, |acc, &x| acc * 3 + x as u16)
}

/// `v * t` modulo the monic sextic with low coefficients `low`.
fn times_t(v: u16, low: [u8; DIGITS]) -> u16 {
    let d = digits(v);
    let top = d[DIGITS - 1];
    let mut out = [0u8; DIGITS];
    for i in (1..DIGITS).rev() {
        out[i] = d[i - 1];
    }
    // t^6 = -low
    for i in 0..DIGITS {
        out[i] = (out[i] + 3 * 3 - top * low[i]) % 3;
    }
    from_digits(out)
}

fn tables() -> &'static Tables {
    static TABLES: OnceLock<Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        // first sextic (in base-3 order) for which t generates the unit group
        for code in 1..ORDER as u16 {
            let low = digits(code);
            let mut exp = vec![0u16; UNITS];
            let mut v = 1u16;
            let mut ok = true;
            for (k, slot) in exp.iter_mut().enumerate() {
                if k > 0 && v == 1 {
                    ok = false;
                    break;
                }
                *slot = v;
                v = times_t(v, low);
            }
            if !ok || v != 1 {
                continue;
            }
            let mut log = vec![0u16; ORDER];
            for (k, &e) in exp.iter().enumerate() {
                log[e as usize] = k as u16;
            }
            return Tables { log, exp };
        }
        unreachable!("a primitive sextic exists")
    })
}

impl G {
    pub const ZERO: G = G(0);

    pub fn from_gf3(c: Gf3) -> G {
        G(c.value() as u16)
    }

    /// The element with index `k`, for enumerating points.
    pub fn nth(k: usize) -> G {
        G((k % ORDER) as u16)
    }

    /// The prime-field value, if the element lies in GF(3).
    pub fn to_gf3(self) -> Option<Gf3> {
        (self.0 < 3).then(|| Gf3::new(self.0 as i64))
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn add(self, rhs: G) -> G {
        let (a, b) = (digits(self.0), digits(rhs.0));
        let mut out = [0u8; DIGITS];
        for i in 0..DIGITS {
            out[i] = (a[i] + b[i]) % 3;
        }
        G(from_digits(out))
    }

    pub fn neg(self) -> G {
        let mut d = digits(self.0);
        for x in d.iter_mut() {
            *x = (3 - *x) % 3;
        }
        G(from_digits(d))
    }

    pub fn mul(self, rhs: G) -> G {
        if self.is_zero() || rhs.is_zero() {
            return G::ZERO;
        }
        let t = tables();
        let k = (t.log[self.0 as usize] as usize + t.log[rhs.0 as usize] as usize) % UNITS;
        G(t.exp[k])
    }

    pub fn pow(self, e: u32) -> G {
        if e == 0 {
            return G(1);
        }
        if self.is_zero() {
            return G::ZERO;
        }
        let t = tables();
        let k = (t.log[self.0 as usize] as usize * (e as usize % UNITS)) % UNITS;
        G(t.exp[k])
    }

    pub fn inv(self) -> G {
        let t = tables();
        let k = (UNITS - t.log[self.0 as usize] as usize) % UNITS;
        G(t.exp[k])
    }
}

pub(crate) fn eval(p: &MPoly, point: &[G; MAX_VARS]) -> G {
    let mut acc = G::ZERO;
    for &(m, c) in p.terms() {
        let mut v = G::from_gf3(c);
        for (i, &x) in point.iter().enumerate() {
            let e = m.exp(i);
            if e > 0 {
                v = v.mul(x.pow(e));
            }
        }
        acc = acc.add(v);
    }
    acc
}

/// Degree of the gcd of two dense univariate polynomials.
pub(crate) fn gcd_degree(a: Vec<G>, b: Vec<G>) -> usize {
    gcd_monic(a, b).len().saturating_sub(1)
}

/// Monic gcd of two dense univariate polynomials, not both zero.
pub(crate) fn gcd_monic(mut a: Vec<G>, mut b: Vec<G>) -> Vec<G> {
    let trim = |v: &mut Vec<G>| {
        while v.last().is_some_and(|c| c.is_zero()) {
            v.pop();
        }
    };
    trim(&mut a);
    trim(&mut b);
    while !b.is_empty() {
        let inv = b.last().expect("nonzero").inv();
        while a.len() >= b.len() {
            let k = a.last().expect("nonzero").mul(inv);
            let shift = a.len() - b.len();
            for (i, &bc) in b.iter().enumerate() {
                a[i + shift] = a[i + shift].add(k.mul(bc).neg());
            }
            trim(&mut a);
        }
        std::mem::swap(&mut a, &mut b);
    }
    let inv = a.last().expect("not both zero").inv();
    a.into_iter().map(|c| c.mul(inv)).collect()
}

/// Coefficients (low first) of the polynomial of degree below `xs.len()`
/// through the points, by Newton divided differences.
pub(crate) fn interpolate(xs: &[G], ys: &[G]) -> Vec<G> {
    let n = xs.len();
    let mut dd = ys.to_vec();
    for j in 1..n {
        for i in (j..n).rev() {
            let num = dd[i].add(dd[i - 1].neg());
            let den = xs[i].add(xs[i - j].neg());
            dd[i] = num.mul(den.inv());
        }
    }
    // Horner on the Newton form
    let mut out = vec![G::ZERO; n];
    for i in (0..n).rev() {
        // out = out * (t - xs[i]) + dd[i]
        let mut next = vec![G::ZERO; n];
        for k in 0..n {
            if out[k].is_zero() {
                continue;
            }
            if k + 1 < n {
                next[k + 1] = next[k + 1].add(out[k]);
            }
            next[k] = next[k].add(out[k].mul(xs[i]).neg());
        }
        next[0] = next[0].add(dd[i]);
        out = next;
    }
    out
}
