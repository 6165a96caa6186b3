//! Dense linear algebra over any [`Field`]: Berkowitz characteristic
//! polynomials and Gauss-Jordan solving.

use crate::field::Field;

pub type Matrix<S> = Vec<Vec<S>>;

pub fn identity<S: Field>(n: usize) -> Matrix<S> {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { S::one() } else { S::zero() })
                .collect()
        })
        .collect()
}

pub fn mat_vec<S: Field>(m: &[Vec<S>], v: &[S]) -> Vec<S> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                .fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
        })
        .collect()
}

fn dot<S: Field>(a: &[S], b: &[S]) -> S {
    a.iter()
        .zip(b)
        .filter(|(x, y)| !x.is_zero() && !y.is_zero())
        .fold(S::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

/// Coefficients of `det(t*I - m)`, highest degree first (`out[0] = 1`).
///
/// Berkowitz's algorithm: only ring operations, no division at all. This
/// matters in characteristic 3 where trace-power methods would divide by
/// 3, 6 and 9.
pub fn berkowitz<S: Field>(m: &[Vec<S>]) -> Vec<S> {
    let n = m.len();
    let mut poly = vec![S::one()];
    for k in 0..n {
        // leading k x k block A, row R = m[k][..k], column C = m[..k][k]
        let row: Vec<S> = m[k][..k].to_vec();
        let mut col_vec: Vec<S> = (0..k).map(|i| m[i][k].clone()).collect();
        let mut toeplitz = Vec::with_capacity(k + 2);
        toeplitz.push(S::one());
        toeplitz.push(-m[k][k].clone());
        for _ in 0..k {
            toeplitz.push(-dot(&row, &col_vec));
            col_vec = (0..k).map(|i| dot(&m[i][..k], &col_vec)).collect();
        }
        let mut next = Vec::with_capacity(k + 2);
        for r in 0..k + 2 {
            let mut acc = S::zero();
            for (c, p) in poly.iter().enumerate().take(r.min(k) + 1) {
                let t = &toeplitz[r - c];
                if !t.is_zero() && !p.is_zero() {
                    acc = acc + t.clone() * p.clone();
                }
            }
            next.push(acc);
        }
        poly = next;
    }
    poly
}

pub fn determinant<S: Field>(m: &[Vec<S>]) -> S {
    let cp = berkowitz(m);
    let c = cp.last().cloned().unwrap_or_else(S::one);
    // det(-m) = (-1)^n det(m)
    if m.len() % 2 == 1 {
        -c
    } else {
        c
    }
}

/// Reduced row echelon form of `[m | rhs]`; returns pivot columns.
fn rref<S: Field>(rows: &mut [Vec<S>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].weight())
        else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            if !x.is_zero() {
                *x = x.clone() * inv.clone();
            }
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, p) in row.iter_mut().zip(&pivot_row) {
                if !p.is_zero() {
                    *x = x.clone() - f.clone() * p.clone();
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A particular solution of `m * v = rhs` with free variables set to zero.
pub fn solve<S: Field>(m: &[Vec<S>], rhs: &[S]) -> Option<Vec<S>> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<S>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let pivots = rref(&mut rows, ncols);
    // inconsistent if some zero row has a nonzero right side
    if rows[pivots.len()..].iter().any(|r| !r[ncols].is_zero()) {
        return None;
    }
    let mut out = vec![S::zero(); ncols];
    for (i, &c) in pivots.iter().enumerate() {
        out[c] = rows[i][ncols].clone();
    }
    Some(out)
}

/// Fraction-free (Bareiss) form of [`solve`]: returns `(x, det)` with
/// `m * (x / det) = rhs`, free variables zero, and every division exact.
///
/// Entries stay polynomial when `m` and `rhs` are, which avoids the gcd
/// work of elimination over a fraction field.
pub fn solve_fraction_free<S: Field>(m: &[Vec<S>], rhs: &[S]) -> Option<(Vec<S>, S)> {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rows: Vec<Vec<S>> = m
        .iter()
        .zip(rhs)
        .map(|(row, b)| {
            let mut r = row.clone();
            r.push(b.clone());
            r
        })
        .collect();
    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| rows[i][c].weight())
        else {
            continue;
        };
        rows.swap(r, p);
        let piv = rows[r][c].clone();
        let (top, rest) = rows.split_at_mut(r + 1);
        let pivot_row = &top[r];
        for row in rest.iter_mut() {
            let f = row[c].clone();
            for j in c + 1..=ncols {
                let t = piv.clone() * row[j].clone() - f.clone() * pivot_row[j].clone();
                row[j] = if t.is_zero() { t } else { t.exact_div(&prev) };
            }
            row[c] = S::zero();
        }
        prev = piv;
        pivots.push(c);
        r += 1;
    }
    if rows[pivots.len()..].iter().any(|row| !row[ncols].is_zero()) {
        return None;
    }
    // back substitution on X = det * x, which stays integral
    let det = prev;
    let mut x = vec![S::zero(); ncols];
    for (k, &c) in pivots.iter().enumerate().rev() {
        let mut acc = det.clone() * rows[k][ncols].clone();
        for &cj in &pivots[k + 1..] {
            if !rows[k][cj].is_zero() {
                acc = acc - rows[k][cj].clone() * x[cj].clone();
            }
        }
        x[c] = if acc.is_zero() {
            acc
        } else {
            acc.exact_div(&rows[k][c])
        };
    }
    Some((x, det))
}

/// A basis of the right kernel of `m`, one vector per free column, in
/// increasing order of the free column index.
pub fn kernel<S: Field>(m: &[Vec<S>], ncols: usize) -> Vec<Vec<S>> {
    let mut rows: Vec<Vec<S>> = m.to_vec();
    let pivots = if rows.is_empty() {
        Vec::new()
    } else {
        rref(&mut rows, ncols)
    };
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![S::zero(); ncols];
        v[free] = S::one();
        for (i, &pc) in pivots.iter().enumerate() {
            v[pc] = -rows[i][free].clone();
        }
        basis.push(v);
    }
    basis
}

pub fn rank<S: Field>(m: &[Vec<S>]) -> usize {
    let ncols = m.first().map_or(0, |r| r.len());
    let mut rows = m.to_vec();
    rref(&mut rows, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactfield::Gf3;

    fn g(v: i64) -> Gf3 {
        Gf3::new(v)
    }

    fn mat(rows: &[&[i64]]) -> Matrix<Gf3> {
        rows.iter()
            .map(|r| r.iter().map(|&v| g(v)).collect())
            .collect()
    }

    // cofactor expansion as an independent reference
    fn det_expand(m: &Matrix<Gf3>) -> Gf3 {
        let n = m.len();
        if n == 0 {
            return Gf3::ONE;
        }
        let mut acc = Gf3::ZERO;
        for j in 0..n {
            let minor: Matrix<Gf3> = m[1..]
                .iter()
                .map(|r| {
                    r.iter()
                        .enumerate()
                        .filter(|(c, _)| *c != j)
                        .map(|(_, v)| *v)
                        .collect()
                })
                .collect();
            let sign = if j % 2 == 0 { Gf3::ONE } else { Gf3::TWO };
            acc += sign * m[0][j] * det_expand(&minor);
        }
        acc
    }

    #[test]
    fn berkowitz_2x2() {
        let m = mat(&[&[1, 2], &[0, 2]]);
        // t^2 - 3t + 2 = t^2 + 2
        assert_eq!(berkowitz(&m), vec![g(1), g(0), g(2)]);
    }

    #[test]
    fn berkowitz_matches_cofactor_determinant() {
        let mut seed = 7u64;
        for _ in 0..200 {
            let n = 1 + (seed % 5) as usize;
            let m: Matrix<Gf3> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            seed = seed
                                .wrapping_mul(6364136223846793005)
                                .wrapping_add(1442695040888963407);
                            g((seed >> 33) as i64)
                        })
                        .collect()
                })
                .collect();
            assert_eq!(determinant(&m), det_expand(&m));
            // the char poly at t = c equals det(c I - m)
            let cp = berkowitz(&m);
            for c in Gf3::ALL {
                let shifted: Matrix<Gf3> = (0..n)
                    .map(|i| {
                        (0..n)
                            .map(|j| if i == j { c - m[i][j] } else { -m[i][j] })
                            .collect()
                    })
                    .collect();
                let value = cp.iter().fold(Gf3::ZERO, |acc, k| acc * c + *k);
                assert_eq!(value, det_expand(&shifted));
            }
        }
    }

    #[test]
    fn solve_and_kernel() {
        let m = mat(&[&[1, 1, 0], &[0, 1, 1]]);
        let x = solve(&m, &[g(1), g(2)]).unwrap();
        assert_eq!(mat_vec(&m, &x), vec![g(1), g(2)]);
        let k = kernel(&m, 3);
        assert_eq!(k.len(), 1);
        assert_eq!(mat_vec(&m, &k[0]), vec![g(0), g(0)]);
        let sing = mat(&[&[1, 1], &[1, 1]]);
        assert_eq!(solve(&sing, &[g(0), g(1)]), None);
        assert_eq!(rank(&sing), 1);
    }
}
