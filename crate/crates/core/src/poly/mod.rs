//! Sparse multivariate polynomials with exact coefficients.

mod parse;
mod series;

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

pub use parse::parse_polynomial;
pub use series::{factor_quantum_integers, is_palindromic, BivariatePoly, HilbertSeries, IntPoly};

/// Upper bound on the number of variables of a polynomial ring.
pub const MAX_VARS: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("variable count mismatch: {0} vs {1}")]
    VarCount(usize, usize),
    #[error("at most {MAX_VARS} variables are supported, got {0}")]
    TooManyVars(usize),
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// An exponent vector. Ordered by graded reverse lexicographic order.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: [u16; MAX_VARS],
    nvars: u8,
    deg: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Monomial { exps: [0; MAX_VARS], nvars: nvars as u8, deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut m = Self::one(nvars);
        m.exps[i] = 1;
        m.deg = 1;
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut m = Self::one(exps.len());
        for (slot, &e) in m.exps.iter_mut().zip(exps) {
            *slot = u16::try_from(e).expect("exponent overflow");
        }
        m.deg = exps.iter().sum();
        m
    }

    pub fn nvars(&self) -> usize {
        self.nvars as usize
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps[..self.nvars as usize]
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i] as u32
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`, if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        let mut m = *other;
        for (a, b) in m.exps.iter_mut().zip(&self.exps) {
            *a -= b;
        }
        m.deg -= self.deg;
        Some(m)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut m = *self;
        for (a, b) in m.exps.iter_mut().zip(&other.exps) {
            *a = (*a).max(*b);
        }
        m.deg = m.exps.iter().map(|&e| e as u32).sum();
        m
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Index of the only variable, for a pure power `x_i^e` with `e > 0`.
    pub fn pure_power_var(&self) -> Option<usize> {
        let mut found = None;
        for (i, &e) in self.exps().iter().enumerate() {
            if e > 0 {
                if found.is_some() {
                    return None;
                }
                found = Some(i);
            }
        }
        found
    }

    pub fn with_exp(mut self, i: usize, e: u32) -> Monomial {
        self.deg = self.deg - self.exps[i] as u32 + e;
        self.exps[i] = e as u16;
        self
    }

    /// All monomials of the given degree in `nvars` variables, in decreasing
    /// grevlex order.
    pub fn all_of_degree(nvars: usize, degree: u32) -> Vec<Monomial> {
        let mut out = Vec::new();
        let mut cur = vec![0u32; nvars];
        fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
            if i + 1 == cur.len() {
                cur[i] = left;
                out.push(Monomial::from_exps(cur));
                return;
            }
            for e in (0..=left).rev() {
                cur[i] = e;
                rec(i + 1, left - e, cur, out);
            }
        }
        if nvars == 0 {
            if degree == 0 {
                out.push(Monomial::one(0));
            }
            return out;
        }
        rec(0, degree, &mut cur, &mut out);
        out.sort_by(|a, b| b.cmp(a));
        out
    }
}

impl Mul for Monomial {
    type Output = Monomial;
    fn mul(mut self, rhs: Monomial) -> Monomial {
        for (a, b) in self.exps.iter_mut().zip(&rhs.exps) {
            *a += b;
        }
        self.deg += rhs.deg;
        self
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.deg.cmp(&other.deg).then_with(|| {
            for i in (0..self.nvars as usize).rev() {
                match self.exps[i].cmp(&other.exps[i]) {
                    Ordering::Equal => continue,
                    // a smaller exponent in the last differing variable wins
                    ord => return ord.reverse(),
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.exps())
    }
}

/// Default variable names: `x, y, z, w` up to four variables, `x1..xn` beyond.
pub fn default_var_names(nvars: usize) -> Vec<String> {
    if nvars <= 4 {
        ["x", "y", "z", "w"][..nvars].iter().map(|s| s.to_string()).collect()
    } else {
        (1..=nvars).map(|i| format!("x{i}")).collect()
    }
}

/// A polynomial in `nvars` variables. Terms are sorted in decreasing grevlex
/// order and carry nonzero coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial {
    nvars: usize,
    terms: Vec<(Monomial, Scalar)>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "too many variables");
        Polynomial { nvars, terms: Vec::new() }
    }

    pub fn constant(nvars: usize, c: Scalar) -> Self {
        Self::monomial(Monomial::one(nvars), c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Scalar::one())
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(nvars, i), Scalar::one())
    }

    pub fn monomial(m: Monomial, c: Scalar) -> Self {
        let nvars = m.nvars();
        if c.is_zero() {
            Self::zero(nvars)
        } else {
            Polynomial { nvars, terms: vec![(m, c)] }
        }
    }

    /// Linear form `sum c_i x_i`.
    pub fn linear(coeffs: &[Scalar]) -> Self {
        let n = coeffs.len();
        Self::from_terms(n, coeffs.iter().enumerate().map(|(i, c)| (Monomial::var(n, i), c.clone())))
    }

    /// Collects terms, adding coefficients of repeated monomials.
    pub fn from_terms(nvars: usize, terms: impl IntoIterator<Item = (Monomial, Scalar)>) -> Self {
        let mut map: BTreeMap<Monomial, Scalar> = BTreeMap::new();
        for (m, c) in terms {
            debug_assert_eq!(m.nvars(), nvars);
            match map.get_mut(&m) {
                Some(acc) => *acc += &c,
                None => {
                    map.insert(m, c);
                }
            }
        }
        let terms = map.into_iter().rev().filter(|(_, c)| !c.is_zero()).collect();
        Polynomial { nvars, terms }
    }

    /// Takes already sorted (decreasing), deduplicated, nonzero terms.
    pub(crate) fn from_sorted_terms(nvars: usize, terms: Vec<(Monomial, Scalar)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { nvars, terms }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Monomial, Scalar)] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<(Monomial, Scalar)> {
        self.terms
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

    pub fn leading(&self) -> Option<&(Monomial, Scalar)> {
        self.terms.first()
    }

    pub fn leading_monomial(&self) -> Option<Monomial> {
        self.terms.first().map(|t| t.0)
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Scalar::zero())
    }

    /// Constant term.
    pub fn constant_term(&self) -> Scalar {
        self.coeff(&Monomial::one(self.nvars))
    }

    fn check(&self, other: &Polynomial) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::VarCount(self.nvars, other.nvars))
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        Ok(self.add_scaled(other, &Scalar::one(), &Monomial::one(self.nvars)))
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial, PolyError> {
        self.check(other)?;
        let mut acc = Polynomial::zero(self.nvars);
        // multiply by the shorter operand term by term
        let (a, b) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        for (m, c) in &a.terms {
            acc = acc.add_scaled(b, c, m);
        }
        Ok(acc)
    }

    /// `self + c * m * other`, by a linear merge.
    pub fn add_scaled(&self, other: &Polynomial, c: &Scalar, m: &Monomial) -> Polynomial {
        debug_assert_eq!(self.nvars, other.nvars);
        if c.is_zero() || other.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut i = 0;
        let mut j = 0;
        let a = &self.terms;
        let b = &other.terms;
        while i < a.len() || j < b.len() {
            let bm = b.get(j).map(|(bm, _)| *bm * *m);
            let ord = match (a.get(i), bm) {
                (Some((am, _)), Some(bm)) => am.cmp(&bm),
                (Some(_), None) => Ordering::Greater,
                (None, Some(_)) => Ordering::Less,
                (None, None) => unreachable!(),
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push((bm.unwrap(), &b[j].1 * c));
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
        Polynomial { nvars: self.nvars, terms: out }
    }

    pub fn scale(&self, c: &Scalar) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { nvars: self.nvars, terms: self.terms.iter().map(|(t, a)| (*t * *m, a.clone())).collect() }
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> Polynomial {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) if c.is_one() => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(self.nvars);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Polynomial {
        let terms = self.terms.iter().filter(|(m, _)| m.exp(i) > 0).map(|(m, c)| {
            let e = m.exp(i);
            (m.with_exp(i, e - 1), c * &Scalar::from_int(e as i64))
        });
        // lowering one exponent preserves the grevlex order among survivors
        Polynomial { nvars: self.nvars, terms: terms.collect() }
    }

    /// Substitutes `x_i -> images[i]`; all images share a ring.
    pub fn substitute(&self, images: &[Polynomial]) -> Result<Polynomial, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::VarCount(images.len(), self.nvars));
        }
        let target = images.first().map_or(0, |p| p.nvars);
        if let Some(bad) = images.iter().find(|p| p.nvars != target) {
            return Err(PolyError::VarCount(bad.nvars, target));
        }
        // cache powers of each image
        let mut powers: Vec<Vec<Polynomial>> = images.iter().map(|p| vec![Polynomial::one(target), p.clone()]).collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut term = Polynomial::constant(target, c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = &powers[i][powers[i].len() - 1] * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    term = &term * &powers[i][e];
                }
            }
            acc = &acc + &term;
        }
        Ok(acc)
    }

    /// Evaluates at a point.
    pub fn evaluate(&self, point: &[Scalar]) -> Scalar {
        let mut acc = Scalar::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t *= &point[i].pow(e as u32);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Homogeneous component of degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Polynomial {
        Polynomial {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).cloned().collect(),
        }
    }

    /// Coefficients of a linear form (degree-one part).
    pub fn linear_coeffs(&self) -> Vec<Scalar> {
        (0..self.nvars).map(|i| self.coeff(&Monomial::var(self.nvars, i))).collect()
    }

    pub fn display_with<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.nvars);
        write!(f, "{}", self.display_with(&names))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = default_var_names(self.nvars);
        write!(f, "{}", self.display_with(&names))
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Polynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative_rational();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let vars: Vec<String> = m
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(i, &e)| if e == 1 { self.names[i].clone() } else { format!("{}^{}", self.names[i], e) })
                .collect();
            let coeff = if abs.is_compound() { format!("({abs})") } else { abs.to_string() };
            if vars.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("*"))?;
            } else {
                write!(f, "{}*{}", coeff, vars.join("*"))?;
            }
        }
        Ok(())
    }
}

macro_rules! poly_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&Polynomial> for &Polynomial {
            type Output = Polynomial;
            /// Panics on mismatched variable counts.
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                let f: fn(&Polynomial, &Polynomial) -> Result<Polynomial, PolyError> = $body;
                f(self, rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

poly_binop!(Add, add, |a, b| a.try_add(b));
poly_binop!(Sub, sub, |a, b| {
    a.check(b)?;
    Ok(a.add_scaled(b, &Scalar::from_int(-1), &Monomial::one(a.nvars)))
});
poly_binop!(Mul, mul, |a, b| a.try_mul(b));

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(&Scalar::from_int(-1))
    }
}

/// Determinant of a square matrix of polynomials by cofactor expansion.
pub fn determinant(rows: &[Vec<Polynomial>], nvars: usize) -> Polynomial {
    let n = rows.len();
    if n == 0 {
        return Polynomial::one(nvars);
    }
    if n == 1 {
        return rows[0][0].clone();
    }
    let mut acc = Polynomial::zero(nvars);
    for (j, entry) in rows[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<Polynomial>> = rows[1..]
            .iter()
            .map(|r| r.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect())
            .collect();
        let term = entry * &determinant(&minor, nvars);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var(2, 0)
    }
    fn y() -> Polynomial {
        Polynomial::var(2, 1)
    }

    #[test]
    fn derivative_of_sum_of_squares() {
        let f = &(&x() * &x()) + &(&y() * &y());
        assert_eq!(f.derivative(0), x().scale(&Scalar::from_int(2)));
    }

    #[test]
    fn difference_of_squares() {
        let p = &(&x() + &y()) * &(&x() - &y());
        assert_eq!(p.to_string(), "x^2 - y^2");
    }

    #[test]
    fn linear_substitution() {
        let xy = &x() * &y();
        let r = xy.substitute(&[x(), &x() + &y()]).unwrap();
        assert_eq!(r, &(&x() * &x()) + &(&x() * &y()));
    }

    #[test]
    fn variable_count_mismatch() {
        let z = Polynomial::var(3, 0);
        assert_eq!(x().try_add(&z), Err(PolyError::VarCount(2, 3)));
        assert!(x().substitute(&[x()]).is_err());
    }

    #[test]
    fn grevlex_order() {
        // x > y > z in degree one; xz < y^2 in grevlex
        let m = |e: &[u32]| Monomial::from_exps(e);
        assert!(m(&[1, 0, 0]) > m(&[0, 1, 0]));
        assert!(m(&[0, 2, 0]) > m(&[1, 0, 1]));
        assert!(m(&[1, 1, 0]) > m(&[0, 2, 0]));
        assert_eq!(Monomial::all_of_degree(3, 2).len(), 6);
    }

    #[test]
    fn display_and_determinant() {
        let p = &(&x().scale(&Scalar::from_int(2)) * &x()) - &y();
        assert_eq!(p.to_string(), "2*x^2 - y");
        let m = vec![vec![x(), y()], vec![y(), x()]];
        assert_eq!(determinant(&m, 2).to_string(), "x^2 - y^2");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn poly() -> impl Strategy<Value = Polynomial> {
            proptest::collection::vec(((0u32..3, 0u32..3, 0u32..3), -4i64..5), 0..5).prop_map(|ts| {
                Polynomial::from_terms(
                    3,
                    ts.into_iter().map(|((a, b, c), k)| (Monomial::from_exps(&[a, b, c]), Scalar::from_int(k))),
                )
            })
        }

        proptest! {
            #[test]
            fn ring_axioms(f in poly(), g in poly(), h in poly()) {
                prop_assert_eq!(&(&f * &g) * &h, &f * &(&g * &h));
                prop_assert_eq!(&f * &(&g + &h), &(&f * &g) + &(&f * &h));
                prop_assert_eq!(&f * &g, &g * &f);
                prop_assert!((&f - &f).is_zero());
            }

            #[test]
            fn leibniz_rule(f in poly(), g in poly(), i in 0usize..3) {
                let lhs = (&f * &g).derivative(i);
                let rhs = &(&f * &g.derivative(i)) + &(&g * &f.derivative(i));
                prop_assert_eq!(lhs, rhs);
            }
        }
    }
}
