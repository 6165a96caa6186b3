use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactfield::Gf3;
use crate::field::Field;
use crate::linalg::Matrix;
use crate::towers::{Cubic, CubicModulus};

/// Index of the basis element `x^i y^j` in row-major order.
#[inline]
pub fn basis_index(i: usize, j: usize) -> usize {
    3 * i + j
}

struct Inner<S> {
    alpha: S,
    beta: S,
    /// `table[p][q]`: sparse coordinates of `e_p * e_q`.
    table: Vec<Vec<Vec<(usize, S)>>>,
    k_modulus: Arc<CubicModulus<S>>,
}

/// The symbol algebra `[alpha, beta)` of degree 3:
/// `x^3 - x = alpha`, `y^3 = beta`, `y x y^-1 = x + 1`.
///
/// A cheap handle; clones share the structure constants. Whether the
/// algebra is division or split is not part of the type.
#[derive(Clone)]
pub struct SymbolAlgebra<S>(Arc<Inner<S>>);

impl<S: Field> SymbolAlgebra<S> {
    pub fn new(alpha: S, beta: S) -> Result<Self> {
        if beta.is_zero() {
            return Err(Error::Precondition("beta must be nonzero".into()));
        }
        let table = structure_constants(&alpha, &beta);
        let k_modulus = Arc::new(CubicModulus::ArtinSchreier(alpha.clone()));
        Ok(SymbolAlgebra(Arc::new(Inner {
            alpha,
            beta,
            table,
            k_modulus,
        })))
    }

    pub fn alpha(&self) -> &S {
        &self.0.alpha
    }

    pub fn beta(&self) -> &S {
        &self.0.beta
    }

    /// Modulus of the cyclic subfield `K = F[x]`.
    pub fn k_modulus(&self) -> &Arc<CubicModulus<S>> {
        &self.0.k_modulus
    }

    pub fn same_as(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.alpha == other.0.alpha && self.0.beta == other.0.beta)
    }

    pub fn element(&self, coords: [S; 9]) -> AlgElem<S> {
        AlgElem {
            alg: self.clone(),
            coords,
        }
    }

    pub fn from_grid(&self, grid: [[S; 3]; 3]) -> AlgElem<S> {
        let [r0, r1, r2] = grid;
        let [a, b, c] = r0;
        let [d, e, f] = r1;
        let [g, h, i] = r2;
        self.element([a, b, c, d, e, f, g, h, i])
    }

    pub fn zero(&self) -> AlgElem<S> {
        self.element(std::array::from_fn(|_| S::zero()))
    }

    pub fn scalar(&self, c: S) -> AlgElem<S> {
        let mut e = self.zero();
        e.coords[0] = c;
        e
    }

    pub fn one(&self) -> AlgElem<S> {
        self.scalar(S::one())
    }

    /// The basis element `x^i y^j`.
    pub fn basis(&self, i: usize, j: usize) -> AlgElem<S> {
        let mut e = self.zero();
        e.coords[basis_index(i, j)] = S::one();
        e
    }

    pub fn x(&self) -> AlgElem<S> {
        self.basis(1, 0)
    }

    pub fn y(&self) -> AlgElem<S> {
        self.basis(0, 1)
    }

    /// Embeds `lambda` in `K = span(1, x, x^2)`.
    pub fn from_k(&self, lambda: &Cubic<S>) -> AlgElem<S> {
        let mut e = self.zero();
        for (i, c) in lambda.coords().iter().enumerate() {
            e.coords[basis_index(i, 0)] = c.clone();
        }
        e
    }

    pub fn multiply(&self, a: &AlgElem<S>, b: &AlgElem<S>) -> Result<AlgElem<S>> {
        if !a.alg.same_as(self) || !b.alg.same_as(self) {
            return Err(Error::ParentMismatch);
        }
        let mut out: [S; 9] = std::array::from_fn(|_| S::zero());
        for (p, ap) in a.coords.iter().enumerate() {
            if ap.is_zero() {
                continue;
            }
            for (q, bq) in b.coords.iter().enumerate() {
                if bq.is_zero() {
                    continue;
                }
                let ab = ap.clone() * bq.clone();
                for (idx, c) in &self.0.table[p][q] {
                    out[*idx] = out[*idx].clone() + ab.clone() * c.clone();
                }
            }
        }
        Ok(self.element(out))
    }

    /// Matrix of left multiplication by `a` on the basis `x^i y^j`.
    pub fn regular_rep(&self, a: &AlgElem<S>) -> Matrix<S> {
        let mut m: Matrix<S> = vec![vec![S::zero(); 9]; 9];
        for (p, ap) in a.coords.iter().enumerate() {
            if ap.is_zero() {
                continue;
            }
            for q in 0..9 {
                for (idx, c) in &self.0.table[p][q] {
                    m[*idx][q] = m[*idx][q].clone() + ap.clone() * c.clone();
                }
            }
        }
        m
    }

    /// Matrix of right multiplication by `a`.
    pub fn right_rep(&self, a: &AlgElem<S>) -> Matrix<S> {
        let mut m: Matrix<S> = vec![vec![S::zero(); 9]; 9];
        for (q, aq) in a.coords.iter().enumerate() {
            if aq.is_zero() {
                continue;
            }
            for p in 0..9 {
                for (idx, c) in &self.0.table[p][q] {
                    m[*idx][p] = m[*idx][p].clone() + aq.clone() * c.clone();
                }
            }
        }
        m
    }
}

impl<S: Field> fmt::Debug for SymbolAlgebra<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:?}, {:?})", self.0.alpha, self.0.beta)
    }
}

impl<S: Field> PartialEq for SymbolAlgebra<S> {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}

fn binomial(k: usize, m: usize) -> i64 {
    match (k, m) {
        (_, 0) => 1,
        (1, 1) | (2, 2) => 1,
        (2, 1) => 2,
        _ => 0,
    }
}

/// `e_(i,j) e_(k,l) = x^i (x + j)^k y^(j + l)`, reduced by `x^3 = x + alpha`
/// and `y^3 = beta`.
fn structure_constants<S: Field>(alpha: &S, beta: &S) -> Vec<Vec<Vec<(usize, S)>>> {
    let mut table = vec![vec![Vec::new(); 9]; 9];
    for i in 0..3 {
        for j in 0..3 {
            for k in 0..3 {
                for l in 0..3 {
                    // coefficients of x^0..x^4 before reduction, in GF(3)
                    let mut xs = [Gf3::ZERO; 5];
                    for m in 0..=k {
                        let c = Gf3::new(binomial(k, m) * (j as i64).pow((k - m) as u32));
                        xs[i + m] += c;
                    }
                    let mut red: [S; 3] = std::array::from_fn(|t| S::from_gf3(xs[t]));
                    // x^3 = x + alpha, x^4 = x^2 + alpha x
                    if !xs[3].is_zero() {
                        let c3 = S::from_gf3(xs[3]);
                        red[1] = red[1].clone() + c3.clone();
                        red[0] = red[0].clone() + c3 * alpha.clone();
                    }
                    if !xs[4].is_zero() {
                        let c4 = S::from_gf3(xs[4]);
                        red[2] = red[2].clone() + c4.clone();
                        red[1] = red[1].clone() + c4 * alpha.clone();
                    }
                    let (n, ymul) = if j + l >= 3 {
                        (j + l - 3, Some(beta))
                    } else {
                        (j + l, None)
                    };
                    let entry = &mut table[basis_index(i, j)][basis_index(k, l)];
                    for (m, c) in red.into_iter().enumerate() {
                        if c.is_zero() {
                            continue;
                        }
                        let c = match ymul {
                            Some(b) => c * b.clone(),
                            None => c,
                        };
                        if !c.is_zero() {
                            entry.push((basis_index(m, n), c));
                        }
                    }
                }
            }
        }
    }
    table
}

/// An element of a [`SymbolAlgebra`], nine coordinates over the center.
#[derive(Clone)]
pub struct AlgElem<S> {
    alg: SymbolAlgebra<S>,
    coords: [S; 9],
}

impl<S: Field> AlgElem<S> {
    pub fn algebra(&self) -> &SymbolAlgebra<S> {
        &self.alg
    }

    pub fn coords(&self) -> &[S; 9] {
        &self.coords
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.coords[basis_index(i, j)]
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// `Some(c)` when the element is `c * 1`.
    pub fn as_scalar(&self) -> Option<&S> {
        self.coords[1..]
            .iter()
            .all(|c| c.is_zero())
            .then_some(&self.coords[0])
    }

    /// `Some(lambda)` when the element lies in `K = span(1, x, x^2)`.
    pub fn as_k(&self) -> Option<Cubic<S>> {
        let in_k = (0..3).all(|i| (1..3).all(|j| self.get(i, j).is_zero()));
        in_k.then(|| {
            Cubic::new(
                [
                    self.get(0, 0).clone(),
                    self.get(1, 0).clone(),
                    self.get(2, 0).clone(),
                ],
                self.alg.k_modulus().clone(),
            )
        })
    }

    pub fn try_mul(&self, rhs: &AlgElem<S>) -> Result<AlgElem<S>> {
        self.alg.multiply(self, rhs)
    }

    pub fn scale_by(&self, c: &S) -> AlgElem<S> {
        self.alg.element(self.coords.clone().map(|v| v * c.clone()))
    }

    pub fn pow(&self, k: u32) -> AlgElem<S> {
        let mut acc = self.alg.one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Applies `f` to every coordinate, landing in another algebra.
    pub fn map_into<T: Field>(&self, target: &SymbolAlgebra<T>, f: impl Fn(&S) -> T) -> AlgElem<T> {
        target.element(std::array::from_fn(|i| f(&self.coords[i])))
    }
}

impl<S: Field> PartialEq for AlgElem<S> {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same_as(&other.alg) && self.coords == other.coords
    }
}

impl<S: Field> fmt::Debug for AlgElem<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "elem{:?}", self.coords)
    }
}

fn zip_with<S: Field>(a: &AlgElem<S>, b: &AlgElem<S>, f: impl Fn(S, S) -> S) -> AlgElem<S> {
    assert!(
        a.alg.same_as(&b.alg),
        "elements belong to different algebras"
    );
    a.alg.element(std::array::from_fn(|i| {
        f(a.coords[i].clone(), b.coords[i].clone())
    }))
}

impl<S: Field> Add for &AlgElem<S> {
    type Output = AlgElem<S>;
    fn add(self, rhs: &AlgElem<S>) -> AlgElem<S> {
        zip_with(self, rhs, |x, y| x + y)
    }
}

impl<S: Field> Sub for &AlgElem<S> {
    type Output = AlgElem<S>;
    fn sub(self, rhs: &AlgElem<S>) -> AlgElem<S> {
        zip_with(self, rhs, |x, y| x - y)
    }
}

/// Panics on a parent mismatch; [`AlgElem::try_mul`] is the checked form.
impl<S: Field> Mul for &AlgElem<S> {
    type Output = AlgElem<S>;
    fn mul(self, rhs: &AlgElem<S>) -> AlgElem<S> {
        self.try_mul(rhs)
            .expect("elements belong to different algebras")
    }
}

impl<S: Field> Neg for &AlgElem<S> {
    type Output = AlgElem<S>;
    fn neg(self) -> AlgElem<S> {
        self.alg.element(self.coords.clone().map(|c| -c))
    }
}

macro_rules! owned_ops {
    ($($tr:ident $f:ident),*) => {$(
        impl<S: Field> $tr for AlgElem<S> {
            type Output = AlgElem<S>;
            fn $f(self, rhs: AlgElem<S>) -> AlgElem<S> {
                (&self).$f(&rhs)
            }
        }
    )*};
}
owned_ops!(Add add, Sub sub, Mul mul);
