//! A degree-by-degree linear-algebra model of `D(A)` and of the ideal
//! `(theta(eta))`, sharing nothing with the Groebner code beyond scalar
//! arithmetic and reading the terms of `eta`.

#![allow(dead_code)]

use std::collections::BTreeMap;

use starr_core::arr::Arrangement;
use starr_core::poly::Polynomial;
use starr_core::scalar::Scalar;

/// Exponent vector to coefficient.
pub type Dense = BTreeMap<Vec<u32>, Scalar>;

pub fn monomials(n: usize, d: u32) -> Vec<Vec<u32>> {
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=d).rev() {
        for mut rest in monomials(n - 1, d - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn add_into(acc: &mut Dense, key: Vec<u32>, c: Scalar) {
    let entry = acc.entry(key).or_insert_with(Scalar::zero);
    *entry += &c;
}

fn mul(a: &Dense, b: &Dense) -> Dense {
    let mut out = Dense::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            add_into(&mut out, e, ca * cb);
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// `x^e` with `x_j` replaced by `-(sum_{k != j} a_k x_k)`, where `a_j = 1`.
fn restrict_monomial(e: &[u32], a: &[Scalar], j: usize) -> Dense {
    let n = e.len();
    let mut rest = e.to_vec();
    rest[j] = 0;
    let mut acc: Dense = [(rest, Scalar::one())].into_iter().collect();
    let mut image = Dense::new();
    for (k, ak) in a.iter().enumerate() {
        if k != j && !ak.is_zero() {
            let mut m = vec![0; n];
            m[k] = 1;
            image.insert(m, -ak);
        }
    }
    for _ in 0..e[j] {
        acc = mul(&acc, &image);
    }
    acc
}

/// Row reduction over the field; returns the rank and a nullspace basis.
pub fn rank_and_nullspace(mut rows: Vec<Vec<Scalar>>, ncols: usize) -> (usize, Vec<Vec<Scalar>>) {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].inv().unwrap();
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let f = rows[i][c].clone();
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i].iter_mut().zip(&pivot_row) {
                    *x -= &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    let null = free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); ncols];
            v[f] = Scalar::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -&rows[i][f];
            }
            v
        })
        .collect();
    (r, null)
}

/// A basis of `D(A)_d`, each element the coefficient vector over
/// `(component, monomial)` pairs in the order of [`monomials`].
pub fn derivations_of_degree(a: &Arrangement, d: u32) -> Vec<Vec<Scalar>> {
    let n = a.dim();
    let monos = monomials(n, d);
    let ncols = n * monos.len();
    let mut rows = Vec::new();
    for h in a.hyperplanes() {
        let coeffs = h.coeffs();
        let j = coeffs.iter().position(|c| !c.is_zero()).unwrap();
        let lead = coeffs[j].inv().unwrap();
        let a_h: Vec<Scalar> = coeffs.iter().map(|c| c * &lead).collect();
        // theta(alpha) restricted to H, one linear condition per monomial
        let mut conds: BTreeMap<Vec<u32>, Vec<Scalar>> = BTreeMap::new();
        for i in 0..n {
            if a_h[i].is_zero() {
                continue;
            }
            for (k, m) in monos.iter().enumerate() {
                for (e, c) in restrict_monomial(m, &a_h, j) {
                    let row = conds.entry(e).or_insert_with(|| vec![Scalar::zero(); ncols]);
                    row[i * monos.len() + k] += &(&c * &a_h[i]);
                }
            }
        }
        rows.extend(conds.into_values());
    }
    rank_and_nullspace(rows, ncols).1
}

pub fn derivation_dimension(a: &Arrangement, d: u32) -> usize {
    derivations_of_degree(a, d).len()
}

fn dense(p: &Polynomial) -> Dense {
    p.terms().iter().map(|(m, c)| ((0..p.nvars()).map(|i| m.exp(i)).collect(), c.clone())).collect()
}

fn partial(p: &Dense, i: usize) -> Dense {
    p.iter()
        .filter(|(e, _)| e[i] > 0)
        .map(|(e, c)| {
            let mut e = e.clone();
            let k = e[i];
            e[i] -= 1;
            (e, c * &Scalar::from_int(k as i64))
        })
        .collect()
}

/// `dim (theta(eta) : theta in D(A))_d`, using that this degree piece is
/// exactly the image of `D(A)_{d - deg eta + 1}`.
pub fn ideal_dimension(a: &Arrangement, eta: &Polynomial, d: u32) -> usize {
    let k = eta.degree().unwrap();
    if d + 1 < k {
        return 0;
    }
    let e = d + 1 - k;
    let n = a.dim();
    let monos = monomials(n, e);
    let eta = dense(eta);
    let grads: Vec<Dense> = (0..n).map(|i| partial(&eta, i)).collect();
    let target = monomials(n, d);
    let index: BTreeMap<&Vec<u32>, usize> = target.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let rows: Vec<Vec<Scalar>> = derivations_of_degree(a, e)
        .into_iter()
        .map(|theta| {
            let mut img = Dense::new();
            for (col, c) in theta.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let (i, m) = (col / monos.len(), &monos[col % monos.len()]);
                let term: Dense = [(m.clone(), c.clone())].into_iter().collect();
                for (ex, v) in mul(&term, &grads[i]) {
                    add_into(&mut img, ex, v);
                }
            }
            let mut row = vec![Scalar::zero(); target.len()];
            for (ex, v) in img {
                row[index[&ex]] += &v;
            }
            row
        })
        .collect();
    rank_and_nullspace(rows, target.len()).0
}
