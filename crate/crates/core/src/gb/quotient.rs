//! Finite-dimensional graded quotients `S/I` described by standard monomials.

use std::collections::HashMap;

use super::{GbError, GroebnerBasis};
use crate::linalg::{self, Matrix};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// `S/I` for a homogeneous zero-dimensional ideal `I`, with the monomials
/// outside the leading-term ideal as a basis.
#[derive(Debug, Clone)]
pub struct QuotientAlgebra {
    gb: GroebnerBasis,
    basis: Vec<Monomial>,
    by_degree: Vec<Vec<usize>>,
    index: HashMap<Monomial, usize>,
}

impl QuotientAlgebra {
    pub fn new(gb: GroebnerBasis) -> Result<Self, GbError> {
        let nvars = gb.module().nvars;
        let lts: Vec<Monomial> = gb.leading_terms().iter().map(|t| t.mono).collect();
        if !gb.elements().iter().all(|v| v.is_homogeneous(gb.module())) {
            return Err(GbError::NotHomogeneous);
        }
        let unit = lts.iter().any(Monomial::is_one);
        if !unit {
            for i in 0..nvars {
                if !lts.iter().any(|m| m.pure_power_var() == Some(i)) {
                    return Err(GbError::InfiniteQuotient);
                }
            }
        }
        let mut basis = Vec::new();
        let mut by_degree: Vec<Vec<usize>> = Vec::new();
        let mut current: Vec<Monomial> = if unit { Vec::new() } else { vec![Monomial::one(nvars)] };
        while !current.is_empty() {
            current.sort_by(|a, b| b.cmp(a));
            let idx: Vec<usize> = (basis.len()..basis.len() + current.len()).collect();
            basis.extend(current.iter().copied());
            by_degree.push(idx);
            let mut next: Vec<Monomial> = Vec::new();
            for m in &current {
                for i in 0..nvars {
                    let cand = *m * Monomial::var(nvars, i);
                    if !lts.iter().any(|lt| lt.divides(&cand)) && !next.contains(&cand) {
                        next.push(cand);
                    }
                }
            }
            current = next;
        }
        let index = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        Ok(QuotientAlgebra { gb, basis, by_degree, index })
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis {
        &self.gb
    }

    pub fn nvars(&self) -> usize {
        self.gb.module().nvars
    }

    /// Standard monomials, by increasing degree.
    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn basis_of_degree(&self, d: usize) -> Vec<Monomial> {
        self.by_degree.get(d).map_or_else(Vec::new, |ix| ix.iter().map(|&i| self.basis[i]).collect())
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Graded dimensions `dim (S/I)_d` for `d = 0..=top`.
    pub fn hilbert_vector(&self) -> Vec<i64> {
        self.by_degree.iter().map(|v| v.len() as i64).collect()
    }

    /// Largest degree with a nonzero graded piece.
    pub fn top_degree(&self) -> Option<usize> {
        self.by_degree.len().checked_sub(1)
    }

    pub fn reduce(&self, p: &Polynomial) -> Polynomial {
        self.gb.reduce_poly(p)
    }

    pub fn is_zero(&self, p: &Polynomial) -> bool {
        self.reduce(p).is_zero()
    }

    /// Coordinates of the class of `p` in the standard basis.
    pub fn coordinates(&self, p: &Polynomial) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.basis.len()];
        for (m, c) in self.reduce(p).terms() {
            out[self.index[m]] = c.clone();
        }
        out
    }

    /// Coordinates restricted to the degree-`d` part of the basis.
    pub fn degree_coordinates(&self, p: &Polynomial, d: usize) -> Vec<Scalar> {
        let all = self.coordinates(p);
        self.by_degree.get(d).map_or_else(Vec::new, |ix| ix.iter().map(|&i| all[i].clone()).collect())
    }

    /// Matrix of multiplication by `g` from degree `from` into degree `to`;
    /// columns are indexed by the source basis.
    pub fn multiplication_matrix(&self, g: &Polynomial, from: usize, to: usize) -> Matrix {
        let src = self.basis_of_degree(from);
        let rows = self.by_degree.get(to).map_or(0, Vec::len);
        let cols: Vec<Vec<Scalar>> = src
            .iter()
            .map(|m| self.degree_coordinates(&g.mul_monomial(m), to))
            .map(|mut v| {
                v.resize(rows, Scalar::zero());
                v
            })
            .collect();
        linalg::transpose(&cols, rows)
    }

    /// A basis of the socle `0 :_{S/I} (x_1, ..., x_n)` as normal forms.
    pub fn socle(&self) -> Vec<Polynomial> {
        let n = self.nvars();
        let mut out = Vec::new();
        for (d, ix) in self.by_degree.iter().enumerate() {
            let mut stacked: Matrix = Vec::new();
            for i in 0..n {
                stacked.extend(self.multiplication_matrix(&Polynomial::var(n, i), d, d + 1));
            }
            for v in linalg::nullspace(&stacked, ix.len()) {
                let terms = ix.iter().zip(v).map(|(&i, c)| (self.basis[i], c));
                out.push(Polynomial::from_terms(n, terms));
            }
        }
        out
    }

    /// Polynomial with the given coordinates.
    pub fn element(&self, coords: &[Scalar]) -> Polynomial {
        Polynomial::from_terms(self.nvars(), self.basis.iter().zip(coords).map(|(m, c)| (*m, c.clone())))
    }

    /// Whether `p` is killed by every variable.
    pub fn in_socle(&self, p: &Polynomial) -> bool {
        let n = self.nvars();
        (0..n).all(|i| self.is_zero(&(p * &Polynomial::var(n, i))))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::ideal_basis;

    #[test]
    fn complete_intersection_of_squares() {
        let n = 2;
        let x = Polynomial::var(n, 0);
        let y = Polynomial::var(n, 1);
        let q = QuotientAlgebra::new(ideal_basis(n, &[&x * &x, &y * &y])).unwrap();
        assert_eq!(q.hilbert_vector(), vec![1, 2, 1]);
        let soc = q.socle();
        assert_eq!(soc.len(), 1);
        assert_eq!(soc[0], &x * &y);
        assert!(q.in_socle(&(&x * &y)));
    }

    #[test]
    fn infinite_quotient_is_rejected() {
        let n = 2;
        let x = Polynomial::var(n, 0);
        assert!(matches!(QuotientAlgebra::new(ideal_basis(n, &[&x * &x])), Err(GbError::InfiniteQuotient)));
    }

    #[test]
    fn unit_ideal_gives_zero_algebra() {
        let q = QuotientAlgebra::new(ideal_basis(2, &[Polynomial::one(2)])).unwrap();
        assert_eq!(q.dimension(), 0);
        assert_eq!(q.top_degree(), None);
    }
}
