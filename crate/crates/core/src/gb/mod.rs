//! Groebner bases of ideals and of submodules of graded free modules.
//!
//! Module elements are sparse vectors of terms `m * e_c`. Terms are compared
//! position-over-term: a smaller component index is larger, and within a
//! component monomials are compared by grevlex. An ideal is a submodule of the
//! rank-one free module.

mod hilbert;
mod quotient;
mod syzygy;

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashSet};
use std::fmt;

use thiserror::Error;

use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

pub use hilbert::{hilbert_series_submodule, monomial_quotient_numerator};
pub use quotient::QuotientAlgebra;
pub use syzygy::{kernel_of_map, minimal_generators, projective_dimension, syzygies, FreeResolution};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GbError {
    #[error("input is not homogeneous")]
    NotHomogeneous,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("quotient is not finite-dimensional")]
    InfiniteQuotient,
}

/// A monomial times a basis vector.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Term {
    pub comp: u32,
    pub mono: Monomial,
}

impl Term {
    pub fn divides(&self, other: &Term) -> bool {
        self.comp == other.comp && self.mono.divides(&other.mono)
    }
}

impl Ord for Term {
    fn cmp(&self, other: &Self) -> Ordering {
        other.comp.cmp(&self.comp).then_with(|| self.mono.cmp(&other.mono))
    }
}

impl PartialOrd for Term {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A graded free module `S(-s_1) + ... + S(-s_r)` over `nvars` variables;
/// basis vector `e_c` sits in degree `shifts[c]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeModule {
    pub nvars: usize,
    pub shifts: Vec<i32>,
}

impl FreeModule {
    pub fn new(nvars: usize, shifts: Vec<i32>) -> Self {
        FreeModule { nvars, shifts }
    }

    /// `S^rank` with all basis vectors in degree zero.
    pub fn unshifted(nvars: usize, rank: usize) -> Self {
        FreeModule { nvars, shifts: vec![0; rank] }
    }

    /// The ring itself, for ideals.
    pub fn ring(nvars: usize) -> Self {
        Self::unshifted(nvars, 1)
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn term_degree(&self, t: &Term) -> i32 {
        t.mono.degree() as i32 + self.shifts[t.comp as usize]
    }
}

/// Sparse element of a free module; terms sorted decreasingly, nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Vector {
    terms: Vec<(Term, Scalar)>,
}

impl Vector {
    pub fn zero() -> Self {
        Vector { terms: Vec::new() }
    }

    pub fn from_poly(p: &Polynomial) -> Self {
        Self::from_poly_at(p, 0)
    }

    /// `p * e_comp`.
    pub fn from_poly_at(p: &Polynomial, comp: usize) -> Self {
        Vector { terms: p.terms().iter().map(|(m, c)| (Term { comp: comp as u32, mono: *m }, c.clone())).collect() }
    }

    pub fn from_components(comps: &[Polynomial]) -> Self {
        // components in increasing index = decreasing order
        Vector { terms: comps.iter().enumerate().flat_map(|(c, p)| Self::from_poly_at(p, c).terms).collect() }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Term, Scalar)>) -> Self {
        let mut map = std::collections::BTreeMap::<Term, Scalar>::new();
        for (t, c) in terms {
            match map.get_mut(&t) {
                Some(acc) => *acc += &c,
                None => {
                    map.insert(t, c);
                }
            }
        }
        Vector { terms: map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn terms(&self) -> &[(Term, Scalar)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading(&self) -> Option<&(Term, Scalar)> {
        self.terms.first()
    }

    pub fn leading_term(&self) -> Option<Term> {
        self.terms.first().map(|t| t.0)
    }

    /// Component `c` as a polynomial.
    pub fn component(&self, c: usize, nvars: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(t, _)| t.comp as usize == c).map(|(t, s)| (t.mono, s.clone())).collect();
        Polynomial::from_sorted_terms(nvars, terms)
    }

    pub fn to_components(&self, rank: usize, nvars: usize) -> Vec<Polynomial> {
        (0..rank).map(|c| self.component(c, nvars)).collect()
    }

    /// The polynomial of a rank-one vector.
    pub fn to_poly(&self, nvars: usize) -> Polynomial {
        self.component(0, nvars)
    }

    pub fn degree(&self, module: &FreeModule) -> Option<i32> {
        self.terms.iter().map(|(t, _)| module.term_degree(t)).max()
    }

    pub fn is_homogeneous(&self, module: &FreeModule) -> bool {
        match self.terms.first() {
            None => true,
            Some((t0, _)) => {
                let d = module.term_degree(t0);
                self.terms.iter().all(|(t, _)| module.term_degree(t) == d)
            }
        }
    }

    /// `self + c * m * other`.
    pub fn add_scaled(&self, other: &Vector, c: &Scalar, m: &Monomial) -> Vector {
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let a = &self.terms;
        let b = &other.terms;
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() || j < b.len() {
            let bt = b.get(j).map(|(t, _)| Term { comp: t.comp, mono: t.mono * *m });
            let ord = match (a.get(i), bt) {
                (Some((at, _)), Some(bt)) => at.cmp(&bt),
                (Some(_), None) => Ordering::Greater,
                _ => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bt.unwrap(), &b[j].1 * c));
                    j += 1;
                }
                Ordering::Equal => {
                    let s = &a[i].1 + &(&b[j].1 * c);
                    if !s.is_zero() {
                        out.push((a[i].0, s));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        Vector { terms: out }
    }

    pub fn add(&self, other: &Vector) -> Vector {
        let one = match other.terms.first() {
            Some((t, _)) => Monomial::one(t.mono.nvars()),
            None => return self.clone(),
        };
        self.add_scaled(other, &Scalar::one(), &one)
    }

    pub fn sub(&self, other: &Vector) -> Vector {
        let one = match other.terms.first() {
            Some((t, _)) => Monomial::one(t.mono.nvars()),
            None => return self.clone(),
        };
        self.add_scaled(other, &Scalar::from_int(-1), &one)
    }

    pub fn scale(&self, c: &Scalar) -> Vector {
        if c.is_zero() {
            return Vector::zero();
        }
        Vector { terms: self.terms.iter().map(|(t, s)| (*t, s * c)).collect() }
    }

    /// Multiplies every component by the polynomial `p`.
    pub fn mul_poly(&self, p: &Polynomial) -> Vector {
        let mut acc = Vector::zero();
        for (m, c) in p.terms() {
            acc = acc.add_scaled(self, c, m);
        }
        acc
    }

    pub fn monic(&self) -> Vector {
        match self.terms.first() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero")),
            _ => self.clone(),
        }
    }

    /// Keeps only components `>= from`, renumbered to start at zero.
    pub fn project_from(&self, from: usize) -> Vector {
        let from = from as u32;
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|(t, _)| t.comp >= from)
                .map(|(t, c)| (Term { comp: t.comp - from, mono: t.mono }, c.clone()))
                .collect(),
        }
    }

    /// Renumbers components by adding `offset`.
    pub fn offset(&self, offset: usize) -> Vector {
        Vector {
            terms: self
                .terms
                .iter()
                .map(|(t, c)| (Term { comp: t.comp + offset as u32, mono: t.mono }, c.clone()))
                .collect(),
        }
    }

    /// Concatenation `(self, other)` where `self` lives in the first `rank`
    /// components.
    pub fn concat(&self, other: &Vector, rank: usize) -> Vector {
        let mut terms = self.terms.clone();
        terms.extend(other.offset(rank).terms);
        Vector { terms }
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut comps: Vec<u32> = self.terms.iter().map(|(t, _)| t.comp).collect();
        comps.dedup();
        let parts: Vec<String> = comps
            .iter()
            .map(|&c| {
                let nv = self.terms[0].0.mono.nvars();
                format!("{}: {}", c, self.component(c as usize, nv))
            })
            .collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

/// A reduced Groebner basis: monic elements, no leading term divides
/// another term of any element.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    module: FreeModule,
    elems: Vec<Vector>,
}

impl GroebnerBasis {
    pub fn module(&self) -> &FreeModule {
        &self.module
    }

    pub fn elements(&self) -> &[Vector] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// The ideal generators as polynomials (rank-one case).
    pub fn polys(&self) -> Vec<Polynomial> {
        self.elems.iter().map(|v| v.to_poly(self.module.nvars)).collect()
    }

    pub fn leading_terms(&self) -> Vec<Term> {
        self.elems.iter().filter_map(Vector::leading_term).collect()
    }

    pub fn is_unit_ideal(&self) -> bool {
        self.leading_terms().iter().any(|t| t.mono.is_one())
    }

    /// Remainder of `v`: no term is divisible by a leading term of the basis.
    pub fn normal_form(&self, v: &Vector) -> Vector {
        reduce(v, &self.elems)
    }

    pub fn reduce_poly(&self, p: &Polynomial) -> Polynomial {
        self.normal_form(&Vector::from_poly(p)).to_poly(self.module.nvars)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.normal_form(v).is_zero()
    }

    pub fn contains_poly(&self, p: &Polynomial) -> bool {
        self.reduce_poly(p).is_zero()
    }

    /// Whether every S-vector reduces to zero; checks the defining property
    /// directly.
    pub fn is_groebner(&self) -> bool {
        for i in 0..self.elems.len() {
            for j in (i + 1)..self.elems.len() {
                if let Some(s) = s_vector(&self.elems[i], &self.elems[j]) {
                    if !self.normal_form(&s).is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// S-vector of two elements whose leading terms share a component.
fn s_vector(f: &Vector, g: &Vector) -> Option<Vector> {
    let (tf, cf) = f.leading()?;
    let (tg, cg) = g.leading()?;
    if tf.comp != tg.comp {
        return None;
    }
    let l = tf.mono.lcm(&tg.mono);
    let mf = tf.mono.quotient_of(&l).unwrap();
    let mg = tg.mono.quotient_of(&l).unwrap();
    let left = Vector::zero().add_scaled(f, &cf.inv().unwrap(), &mf);
    Some(left.add_scaled(g, &-&cg.inv().unwrap(), &mg))
}

/// Full reduction of `v` by `basis` (leading coefficients need not be 1).
fn reduce(v: &Vector, basis: &[Vector]) -> Vector {
    let mut rest = v.clone();
    let mut done: Vec<(Term, Scalar)> = Vec::new();
    while let Some((t, c)) = rest.terms.first().cloned() {
        let reducer = basis.iter().find(|g| g.leading_term().is_some_and(|lt| lt.divides(&t)));
        match reducer {
            Some(g) => {
                let (lt, lc) = g.leading().unwrap();
                let m = lt.mono.quotient_of(&t.mono).unwrap();
                let q = -&(&c / lc);
                rest = rest.add_scaled(g, &q, &m);
            }
            None => {
                done.push((t, c));
                rest.terms.remove(0);
            }
        }
    }
    Vector { terms: done }
}

type PairKey = (i32, Term, usize, usize);

/// Incremental Buchberger completion with the normal selection strategy.
pub struct Buchberger {
    module: FreeModule,
    basis: Vec<Vector>,
    queue: BTreeSet<PairKey>,
    pending: HashSet<(usize, usize)>,
}

impl Buchberger {
    pub fn new(module: FreeModule) -> Self {
        Buchberger { module, basis: Vec::new(), queue: BTreeSet::new(), pending: HashSet::new() }
    }

    /// Adds a generator (after reducing it against the current basis).
    pub fn add(&mut self, v: &Vector) {
        let r = reduce(v, &self.basis);
        if !r.is_zero() {
            self.push(r.monic());
        }
    }

    fn push(&mut self, v: Vector) {
        let n = self.basis.len();
        let lt = v.leading_term().unwrap();
        for (i, g) in self.basis.iter().enumerate() {
            let gt = g.leading_term().unwrap();
            if gt.comp != lt.comp {
                continue;
            }
            // coprime leading monomials: the pair reduces to zero (rank one only)
            if self.module.rank() == 1 && gt.mono.is_coprime(&lt.mono) {
                continue;
            }
            let l = Term { comp: lt.comp, mono: gt.mono.lcm(&lt.mono) };
            self.queue.insert((self.module.term_degree(&l), l, n, i));
            self.pending.insert((i, n));
        }
        self.basis.push(v);
    }

    fn is_pending(&self, a: usize, b: usize) -> bool {
        self.pending.contains(&(a.min(b), a.max(b)))
    }

    /// Chain criterion: some third element's leading term divides the lcm
    /// and both pairs with it have been treated.
    fn chain_redundant(&self, lcm: &Term, i: usize, j: usize) -> bool {
        self.basis.iter().enumerate().any(|(k, g)| {
            k != i
                && k != j
                && g.leading_term().is_some_and(|t| t.divides(lcm))
                && !self.is_pending(i, k)
                && !self.is_pending(j, k)
        })
    }

    /// Processes pairs until the basis is complete.
    pub fn complete(&mut self) {
        while let Some(key) = self.queue.pop_first() {
            let (_, lcm, j, i) = key;
            self.pending.remove(&(i, j));
            if self.chain_redundant(&lcm, i, j) {
                continue;
            }
            let s = s_vector(&self.basis[i], &self.basis[j]).expect("same component");
            let r = reduce(&s, &self.basis);
            if !r.is_zero() {
                self.push(r.monic());
            }
        }
    }

    /// Current basis, completed and interreduced.
    pub fn basis(&mut self) -> GroebnerBasis {
        self.complete();
        GroebnerBasis { module: self.module.clone(), elems: interreduce(&self.basis) }
    }
}

/// Minimalizes leading terms and tail-reduces, returning a reduced basis
/// sorted by decreasing leading term.
fn interreduce(basis: &[Vector]) -> Vec<Vector> {
    let mut keep: Vec<Vector> = Vec::new();
    for (i, g) in basis.iter().enumerate() {
        let lt = g.leading_term().unwrap();
        let redundant = basis.iter().enumerate().any(|(k, h)| {
            let ht = h.leading_term().unwrap();
            k != i && ht.divides(&lt) && (ht != lt || k < i)
        });
        if !redundant {
            keep.push(g.clone());
        }
    }
    keep.sort_by_key(|v| std::cmp::Reverse(v.leading_term()));
    let mut out = Vec::with_capacity(keep.len());
    for i in 0..keep.len() {
        let (head, tail) = (keep[i].terms[0].clone(), Vector { terms: keep[i].terms[1..].to_vec() });
        let others: Vec<Vector> = keep.iter().enumerate().filter(|(k, _)| *k != i).map(|(_, g)| g.clone()).collect();
        let mut red = reduce(&tail, &others);
        red.terms.insert(0, head);
        out.push(red.monic());
    }
    out
}

/// Reduced Groebner basis of the submodule generated by `gens`.
pub fn buchberger(module: &FreeModule, gens: &[Vector]) -> GroebnerBasis {
    let mut b = Buchberger::new(module.clone());
    // feed generators by increasing degree so the normal strategy sees low
    // degrees first
    let mut order: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
    order.sort_by_key(|g| g.degree(module));
    for g in order {
        b.add(g);
    }
    b.basis()
}

/// Reduced Groebner basis of an ideal.
pub fn ideal_basis(nvars: usize, gens: &[Polynomial]) -> GroebnerBasis {
    let vs: Vec<Vector> = gens.iter().map(Vector::from_poly).collect();
    buchberger(&FreeModule::ring(nvars), &vs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{default_var_names, parse_polynomial};
    use crate::scalar::Field;

    fn polys(srcs: &[&str], n: usize) -> Vec<Polynomial> {
        let names = default_var_names(n);
        srcs.iter().map(|s| parse_polynomial(s, &names, &Field::Rational).unwrap()).collect()
    }

    #[test]
    fn monomial_ideal_is_its_own_basis() {
        let gb = ideal_basis(2, &polys(&["x^2", "y^2"], 2));
        let got: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["x^2", "y^2"]);
        assert!(gb.reduce_poly(&polys(&["x^2"], 2)[0]).is_zero());
        assert_eq!(gb.reduce_poly(&polys(&["x*y"], 2)[0]).to_string(), "x*y");
    }

    #[test]
    fn linear_ideal() {
        let gb = ideal_basis(2, &polys(&["x + y", "y"], 2));
        let got: Vec<String> = gb.polys().iter().map(|p| p.to_string()).collect();
        assert_eq!(got, vec!["x", "y"]);
    }

    #[test]
    fn printed_ideal_has_quotient_dimension_32() {
        let gens = polys(&["x^2+y^2+z^2", "z^3-y*z^2", "y^6-y^5*z", "y^6+3*y^4*z^2"], 3);
        let gb = ideal_basis(3, &gens);
        assert!(gb.is_groebner());
        assert!(gb.contains_poly(&gens[1]));
        let q = QuotientAlgebra::new(gb).unwrap();
        assert_eq!(q.dimension(), 32);
    }

    #[test]
    fn cyclic_three() {
        let gens = polys(&["x+y+z", "x*y+y*z+z*x", "x*y*z-1"], 3);
        let gb = ideal_basis(3, &gens);
        assert!(gb.is_groebner());
        for g in &gens {
            assert!(gb.contains_poly(g));
        }
    }

    #[test]
    fn module_basis() {
        // submodule of S^2 generated by (x, y), (y, 0)
        let n = 2;
        let p = polys(&["x", "y", "0"], n);
        let gens = vec![
            Vector::from_components(&[p[0].clone(), p[1].clone()]),
            Vector::from_components(&[p[1].clone(), p[2].clone()]),
        ];
        let gb = buchberger(&FreeModule::unshifted(n, 2), &gens);
        assert!(gb.is_groebner());
        for g in &gens {
            assert!(gb.contains(g));
        }
        // (0, y^2) = y*(x,y) - x*(y,0)
        let y2 = Vector::from_poly_at(&polys(&["y^2"], n)[0], 1);
        assert!(gb.contains(&y2));
        assert!(!gb.contains(&Vector::from_poly_at(&polys(&["y"], n)[0], 1)));
    }
}
