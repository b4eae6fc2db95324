//! Integer univariate and bivariate polynomials: Hilbert numerators,
//! Poincare polynomials and the bivariate arrangement polynomial.

use std::fmt;

use thiserror::Error;

/// Dense integer polynomial, constant term first, no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn zero() -> Self {
        IntPoly(Vec::new())
    }

    pub fn one() -> Self {
        IntPoly(vec![1])
    }

    /// `c * x^k`.
    pub fn term(c: i64, k: usize) -> Self {
        let mut v = vec![0; k + 1];
        v[k] = c;
        IntPoly::new(v)
    }

    /// The quantum integer `[n]_x = 1 + x + ... + x^(n-1)`.
    pub fn quantum(n: usize) -> Self {
        IntPoly(vec![1; n])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn coeff(&self, k: usize) -> i64 {
        self.0.get(k).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.0.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    /// Sum of coefficients.
    pub fn sum(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.0.len().max(other.0.len());
        IntPoly::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut out = vec![0; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPoly::new(out)
    }

    pub fn scale(&self, c: i64) -> IntPoly {
        IntPoly::new(self.0.iter().map(|a| a * c).collect())
    }

    pub fn shift(&self, k: usize) -> IntPoly {
        if self.is_zero() {
            return IntPoly::zero();
        }
        let mut v = vec![0; k];
        v.extend_from_slice(&self.0);
        IntPoly(v)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        (0..e).fold(IntPoly::one(), |acc, _| acc.mul(self))
    }

    /// Exact division by a divisor with leading coefficient +-1 or dividing
    /// every step; `None` if a remainder is left.
    pub fn div_exact(&self, d: &IntPoly) -> Option<IntPoly> {
        let dd = d.degree()?;
        let lead = d.0[dd];
        let mut rem = self.0.clone();
        if rem.len() <= dd {
            return if self.is_zero() { Some(IntPoly::zero()) } else { None };
        }
        let mut q = vec![0; rem.len() - dd];
        for k in (0..q.len()).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return None;
            }
            let c = top / lead;
            q[k] = c;
            for (i, dc) in d.0.iter().enumerate() {
                rem[k + i] -= c * dc;
            }
        }
        if rem.iter().all(|&c| c == 0) {
            Some(IntPoly::new(q))
        } else {
            None
        }
    }

    /// `(1 - x)^k`.
    pub fn one_minus_x_pow(k: u32) -> IntPoly {
        IntPoly::new(vec![1, -1]).pow(k)
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", list.join(","))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("series has a pole at x = 1 (denominator (1-x)^{0})")]
    Pole(u32),
}

/// `numerator / (1 - x)^denom_exp`, kept in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    numerator: IntPoly,
    denom_exp: u32,
}

impl HilbertSeries {
    /// Builds the series and cancels common factors `(1 - x)`.
    pub fn new(numerator: IntPoly, denom_exp: u32) -> Self {
        let mut h = HilbertSeries { numerator, denom_exp };
        let one_minus_x = IntPoly::new(vec![1, -1]);
        while h.denom_exp > 0 && !h.numerator.is_zero() {
            match h.numerator.div_exact(&one_minus_x) {
                Some(q) => {
                    h.numerator = q;
                    h.denom_exp -= 1;
                }
                None => break,
            }
        }
        if h.numerator.is_zero() {
            h.denom_exp = 0;
        }
        h
    }

    /// A finite series from its coefficient vector.
    pub fn finite(coeffs: Vec<i64>) -> Self {
        HilbertSeries { numerator: IntPoly::new(coeffs), denom_exp: 0 }
    }

    pub fn numerator(&self) -> &IntPoly {
        &self.numerator
    }

    pub fn denom_exp(&self) -> u32 {
        self.denom_exp
    }

    pub fn is_finite(&self) -> bool {
        self.denom_exp == 0
    }

    /// Numerator over `(1 - x)^k` for a given `k >= denom_exp`.
    pub fn numerator_over(&self, k: u32) -> IntPoly {
        assert!(k >= self.denom_exp, "cannot lower the denominator");
        self.numerator.mul(&IntPoly::one_minus_x_pow(k - self.denom_exp))
    }

    /// Total dimension `H(1)`; an error if the series is infinite.
    pub fn eval_at_one(&self) -> Result<i64, SeriesError> {
        if !self.is_finite() {
            return Err(SeriesError::Pole(self.denom_exp));
        }
        Ok(self.numerator.sum())
    }

    /// Coefficient of `x^k` in the power-series expansion.
    pub fn coefficient(&self, k: usize) -> i64 {
        // coefficient of x^j in (1-x)^(-e) is C(j + e - 1, e - 1)
        let e = self.denom_exp as i64;
        (0..=k)
            .map(|i| {
                let j = (k - i) as i64;
                let mult = if e == 0 { i64::from(j == 0) } else { binomial(j + e - 1, e - 1) };
                self.numerator.coeff(i) * mult
            })
            .sum()
    }

    pub fn add(&self, other: &HilbertSeries) -> HilbertSeries {
        let e = self.denom_exp.max(other.denom_exp);
        HilbertSeries::new(self.numerator_over(e).add(&other.numerator_over(e)), e)
    }

    /// Multiplies by `x^k`.
    pub fn shift(&self, k: usize) -> HilbertSeries {
        HilbertSeries { numerator: self.numerator.shift(k), denom_exp: self.denom_exp }
    }

    pub fn negate(&self) -> HilbertSeries {
        HilbertSeries { numerator: self.numerator.scale(-1), denom_exp: self.denom_exp }
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_finite() {
            write!(f, "{}", self.numerator)
        } else {
            write!(f, "{}/(1-x)^{}", self.numerator, self.denom_exp)
        }
    }
}

pub(crate) fn binomial(n: i64, k: i64) -> i64 {
    if k < 0 || n < k {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1i64, |acc, i| acc * (n - i) / (i + 1))
}

/// Whether a coefficient vector reads the same in both directions.
pub fn is_palindromic(coeffs: &[i64]) -> bool {
    coeffs.iter().eq(coeffs.iter().rev())
}

/// Writes a finite Hilbert polynomial as `prod (1 + x + ... + x^(e_i))` with
/// `1 <= e_1 <= ... <= e_k`, if possible. Factors equal to `1` (`e = 0`)
/// are invisible and never reported.
pub fn factor_quantum_integers(h: &HilbertSeries) -> Option<Vec<u32>> {
    if !h.is_finite() {
        return None;
    }
    fn search(p: &IntPoly, min_e: usize, acc: &mut Vec<u32>) -> bool {
        if p == &IntPoly::one() {
            return true;
        }
        let deg = match p.degree() {
            Some(d) if d >= 1 => d,
            _ => return false,
        };
        for e in min_e..=deg {
            if let Some(q) = p.div_exact(&IntPoly::quantum(e + 1)) {
                acc.push(e as u32);
                if search(&q, e, acc) {
                    return true;
                }
                acc.pop();
            }
        }
        false
    }
    let mut acc = Vec::new();
    search(h.numerator(), 1, &mut acc).then_some(acc)
}

/// Integer polynomial in `x` and `t`; `coeffs[i][j]` multiplies `x^i t^j`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct BivariatePoly {
    coeffs: Vec<Vec<i64>>,
}

impl BivariatePoly {
    pub fn zero() -> Self {
        BivariatePoly { coeffs: Vec::new() }
    }

    pub fn from_grid(coeffs: Vec<Vec<i64>>) -> Self {
        let mut p = BivariatePoly { coeffs };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        for row in &mut self.coeffs {
            while row.last() == Some(&0) {
                row.pop();
            }
        }
        while self.coeffs.last().is_some_and(|r| r.is_empty()) {
            self.coeffs.pop();
        }
    }

    /// Coefficient grid indexed by `[x-degree][t-degree]`, rows padded to a
    /// common width.
    pub fn grid(&self) -> Vec<Vec<i64>> {
        let width = self.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        self.coeffs
            .iter()
            .map(|r| {
                let mut r = r.clone();
                r.resize(width, 0);
                r
            })
            .collect()
    }

    pub fn coeff(&self, i: usize, j: usize) -> i64 {
        self.coeffs.get(i).and_then(|r| r.get(j)).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn x_degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add_term(&mut self, i: usize, j: usize, c: i64) {
        if self.coeffs.len() <= i {
            self.coeffs.resize(i + 1, Vec::new());
        }
        let row = &mut self.coeffs[i];
        if row.len() <= j {
            row.resize(j + 1, 0);
        }
        row[j] += c;
        self.normalize();
    }

    pub fn add(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = self.clone();
        for (i, row) in other.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                if c != 0 {
                    out.add_term(i, j, c);
                }
            }
        }
        out
    }

    pub fn mul(&self, other: &BivariatePoly) -> BivariatePoly {
        let mut out = BivariatePoly::zero();
        for (i, r) in self.coeffs.iter().enumerate() {
            for (j, &a) in r.iter().enumerate() {
                if a == 0 {
                    continue;
                }
                for (k, s) in other.coeffs.iter().enumerate() {
                    for (l, &b) in s.iter().enumerate() {
                        if b != 0 {
                            out.add_term(i + k, j + l, a * b);
                        }
                    }
                }
            }
        }
        out
    }

    /// Embeds a polynomial in `x` alone.
    pub fn from_x(p: &IntPoly) -> Self {
        BivariatePoly::from_grid(p.coeffs().iter().map(|&c| vec![c]).collect())
    }

    /// Embeds a polynomial in `t` alone.
    pub fn from_t(p: &IntPoly) -> Self {
        BivariatePoly::from_grid(vec![p.coeffs().to_vec()])
    }

    /// Exact division by `(1 - x)`; `None` when a remainder is left.
    pub fn div_one_minus_x(&self) -> Option<BivariatePoly> {
        // q_0 = a_0, q_i = a_i + q_(i-1); remainder is q_n
        let n = self.coeffs.len();
        if n == 0 {
            return Some(BivariatePoly::zero());
        }
        let width = self.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        let mut q: Vec<Vec<i64>> = Vec::with_capacity(n);
        let mut running = vec![0i64; width];
        for row in &self.coeffs {
            for (j, r) in running.iter_mut().enumerate() {
                *r += row.get(j).copied().unwrap_or(0);
            }
            q.push(running.clone());
        }
        let rem = q.pop().unwrap();
        rem.iter().all(|&c| c == 0).then(|| BivariatePoly::from_grid(q))
    }

    /// Specializes `x = 1`, leaving a polynomial in `t`.
    pub fn at_x_one(&self) -> IntPoly {
        let width = self.coeffs.iter().map(Vec::len).max().unwrap_or(0);
        IntPoly::new((0..width).map(|j| self.coeffs.iter().map(|r| r.get(j).copied().unwrap_or(0)).sum()).collect())
    }

    /// Specializes `t = 1`, leaving a polynomial in `x`.
    pub fn at_t_one(&self) -> IntPoly {
        IntPoly::new(self.coeffs.iter().map(|r| r.iter().sum()).collect())
    }

    /// Specializes `t = -x`.
    pub fn at_t_minus_x(&self) -> IntPoly {
        let mut out = IntPoly::zero();
        for (i, row) in self.coeffs.iter().enumerate() {
            for (j, &c) in row.iter().enumerate() {
                let sign = if j % 2 == 0 { 1 } else { -1 };
                out = out.add(&IntPoly::term(sign * c, i + j));
            }
        }
        out
    }

    /// Renders as a sum of monomials, e.g. `x^2 + 2*x*t + t^2`.
    pub fn to_expression(&self) -> String {
        let mut parts: Vec<(usize, usize, i64)> = Vec::new();
        for (i, r) in self.coeffs.iter().enumerate() {
            for (j, &c) in r.iter().enumerate() {
                if c != 0 {
                    parts.push((i, j, c));
                }
            }
        }
        // by total degree, descending; then x-degree descending
        parts.sort_by_key(|p| std::cmp::Reverse((p.0 + p.1, p.0)));
        let mut s = String::new();
        for (k, (i, j, c)) in parts.iter().enumerate() {
            let neg = *c < 0;
            if k == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let mut vars = Vec::new();
            if *i > 0 {
                vars.push(if *i == 1 { "x".to_string() } else { format!("x^{i}") });
            }
            if *j > 0 {
                vars.push(if *j == 1 { "t".to_string() } else { format!("t^{j}") });
            }
            let a = c.abs();
            if vars.is_empty() {
                s.push_str(&a.to_string());
            } else if a == 1 {
                s.push_str(&vars.join("*"));
            } else {
                s.push_str(&format!("{a}*{}", vars.join("*")));
            }
        }
        if s.is_empty() {
            s.push('0');
        }
        s
    }
}

impl fmt::Debug for BivariatePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_expression())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn evaluation_at_one() {
        let h = HilbertSeries::finite(vec![1, 2, 1]);
        assert_eq!(h.eval_at_one(), Ok(4));
        let h = HilbertSeries::finite(vec![1, 3, 5, 4, 1]);
        assert_eq!(h.eval_at_one(), Ok(14));
        let pole = HilbertSeries::new(IntPoly::new(vec![0, 2]), 2);
        assert_eq!(pole.eval_at_one(), Err(SeriesError::Pole(2)));
    }

    #[test]
    fn reduction_cancels_one_minus_x() {
        // (1 - x^2)/(1 - x)^2 = (1 + x)/(1 - x)
        let h = HilbertSeries::new(IntPoly::new(vec![1, 0, -1]), 2);
        assert_eq!(h.numerator().coeffs(), &[1, 1]);
        assert_eq!(h.denom_exp(), 1);
        assert_eq!(h.coefficient(5), 2);
    }

    #[test]
    fn quantum_factorization() {
        let ex = HilbertSeries::finite(vec![1, 3, 5, 4, 1]);
        assert_eq!(factor_quantum_integers(&ex), None);
        let p = IntPoly::quantum(2).pow(2).mul(&IntPoly::quantum(3));
        assert_eq!(factor_quantum_integers(&HilbertSeries::finite(p.coeffs().to_vec())), Some(vec![1, 1, 2]));
        assert_eq!(factor_quantum_integers(&HilbertSeries::finite(vec![1])), Some(vec![]));
        // [4] = (1+x)(1+x^2) needs backtracking past e = 1
        assert_eq!(factor_quantum_integers(&HilbertSeries::finite(vec![1, 1, 1, 1])), Some(vec![3]));
    }

    #[test]
    fn palindromes() {
        assert!(is_palindromic(&[1, 2, 1]));
        assert!(!is_palindromic(&[1, 3, 5, 4, 1]));
        assert!(is_palindromic(&[]));
    }

    #[test]
    fn bivariate_division() {
        // (t + x)(1 - x) = t + x - t x - x^2
        let p = BivariatePoly::from_grid(vec![vec![0, 1], vec![1, -1], vec![-1]]);
        let q = p.div_one_minus_x().unwrap();
        assert_eq!(q.to_expression(), "x + t");
        let bad = BivariatePoly::from_grid(vec![vec![1], vec![1]]);
        assert!(bad.div_one_minus_x().is_none());
        assert_eq!(q.at_t_minus_x(), IntPoly::zero());
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn factorization_recovers_multiset(es in proptest::collection::vec(1u32..7, 0..6)) {
                prop_assume!(es.iter().sum::<u32>() <= 12);
                let p = es.iter().fold(IntPoly::one(), |acc, &e| acc.mul(&IntPoly::quantum(e as usize + 1)));
                let mut sorted = es.clone();
                sorted.sort();
                let got = factor_quantum_integers(&HilbertSeries::finite(p.coeffs().to_vec()));
                prop_assert_eq!(got, Some(sorted));
            }

            #[test]
            fn palindromic_matches_reversal(v in proptest::collection::vec(0i64..4, 0..8)) {
                let mut r = v.clone();
                r.reverse();
                prop_assert_eq!(is_palindromic(&v), v == r);
            }
        }
    }
}
