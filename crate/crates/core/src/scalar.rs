//! Exact field arithmetic over the rationals and simple algebraic extensions
//! `Q[s]/(m(s))`.
//!
//! A [`Scalar`] is either a rational number or an element of an extension,
//! stored as a dense coefficient vector reduced modulo the minimal polynomial.
//! Rational numbers embed into every field: an extension element whose
//! non-constant coefficients vanish is always stored in its rational form, so
//! two scalars of the same field are equal iff their representations agree.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("field mismatch: `{0}` vs `{1}`")]
    FieldMismatch(String, String),
    #[error("invalid minimal polynomial: {0}")]
    InvalidMinpoly(String),
    #[error("cannot parse scalar `{0}`")]
    Parse(String),
}

/// Defining data of a simple extension `Q[s]/(m(s))`.
#[derive(Debug, Clone)]
pub struct FieldDescriptor {
    /// Coefficients of `m`, constant term first; monic.
    minpoly: Vec<BigRational>,
    symbol: String,
    /// Set when irreducibility was not checked (degree >= 4).
    trusted: bool,
}

impl FieldDescriptor {
    pub fn new(minpoly: Vec<BigRational>, symbol: impl Into<String>) -> Result<Self, ScalarError> {
        let symbol = symbol.into();
        let mut minpoly = minpoly;
        while minpoly.last().is_some_and(Zero::is_zero) {
            minpoly.pop();
        }
        if minpoly.len() < 3 {
            return Err(ScalarError::InvalidMinpoly("degree must be at least 2".into()));
        }
        if !minpoly.last().unwrap().is_one() {
            return Err(ScalarError::InvalidMinpoly("polynomial must be monic".into()));
        }
        if symbol.is_empty() || !symbol.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(ScalarError::InvalidMinpoly(format!("bad symbol `{symbol}`")));
        }
        let degree = minpoly.len() - 1;
        let trusted = degree >= 4;
        if !trusted {
            // a polynomial of degree <= 3 is reducible iff it has a rational root
            if let Some(root) = rational_root(&minpoly) {
                return Err(ScalarError::InvalidMinpoly(format!("reducible: {root} is a root")));
            }
        }
        Ok(FieldDescriptor { minpoly, symbol, trusted })
    }

    pub fn from_ints(minpoly: &[i64], symbol: &str) -> Result<Self, ScalarError> {
        Self::new(minpoly.iter().map(|&c| BigRational::from_integer(c.into())).collect(), symbol)
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn minpoly(&self) -> &[BigRational] {
        &self.minpoly
    }

    pub fn symbol(&self) -> &str {
        &self.symbol
    }

    pub fn is_trusted(&self) -> bool {
        self.trusted
    }
}

impl PartialEq for FieldDescriptor {
    fn eq(&self, other: &Self) -> bool {
        self.minpoly == other.minpoly && self.symbol == other.symbol
    }
}
impl Eq for FieldDescriptor {}

/// The coefficient field of a computation.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum Field {
    #[default]
    Rational,
    Extension(Arc<FieldDescriptor>),
}

impl Field {
    pub fn extension(desc: FieldDescriptor) -> Self {
        Field::Extension(Arc::new(desc))
    }

    /// `Q(sqrt 2)` with the adjoined root printed as `symbol`.
    pub fn sqrt2(symbol: &str) -> Self {
        Field::extension(FieldDescriptor::from_ints(&[-2, 0, 1], symbol).expect("s^2 - 2 is irreducible"))
    }

    /// The adjoined root `s`; `None` over the rationals.
    pub fn generator(&self) -> Option<Scalar> {
        match self {
            Field::Rational => None,
            Field::Extension(desc) => {
                let mut coeffs = vec![BigRational::zero(); desc.degree()];
                coeffs[1] = BigRational::one();
                Some(Scalar::from_coeffs(desc, coeffs))
            }
        }
    }

    pub fn symbol(&self) -> Option<&str> {
        match self {
            Field::Rational => None,
            Field::Extension(d) => Some(d.symbol()),
        }
    }

    /// Whether `s` lives in this field.
    pub fn contains(&self, s: &Scalar) -> bool {
        match (self, s) {
            (_, Scalar::Rat(_)) => true,
            (Field::Extension(d), Scalar::Ext(e, _)) => same_desc(d, e),
            (Field::Rational, Scalar::Ext(..)) => false,
        }
    }

    pub fn name(&self) -> String {
        match self {
            Field::Rational => "QQ".into(),
            Field::Extension(d) => {
                let m = univariate_to_string(d.minpoly(), d.symbol());
                format!("QQ[{}]/({})", d.symbol(), m)
            }
        }
    }
}

fn same_desc(a: &Arc<FieldDescriptor>, b: &Arc<FieldDescriptor>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// An exact field element.
#[derive(Clone, Debug)]
pub enum Scalar {
    Rat(BigRational),
    /// Coefficients of `1, s, ..., s^(n-1)`; at least one non-constant
    /// coefficient is nonzero.
    Ext(Arc<FieldDescriptor>, Box<[BigRational]>),
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar::Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Scalar::Rat(BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Scalar::Rat(BigRational::from_integer(n.into()))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Scalar::Rat(BigRational::from_integer(n))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Scalar::Rat(BigRational::new(num.into(), den.into()))
    }

    pub fn from_rational(q: BigRational) -> Self {
        Scalar::Rat(q)
    }

    /// Builds an extension element from coefficients in the power basis,
    /// reducing modulo the minimal polynomial first.
    pub fn from_coeffs(desc: &Arc<FieldDescriptor>, coeffs: Vec<BigRational>) -> Self {
        let reduced = poly_rem(coeffs, desc.minpoly());
        Self::canonical(desc, reduced)
    }

    fn canonical(desc: &Arc<FieldDescriptor>, mut coeffs: Vec<BigRational>) -> Self {
        coeffs.resize(desc.degree(), BigRational::zero());
        if coeffs[1..].iter().all(Zero::is_zero) {
            Scalar::Rat(coeffs.swap_remove(0))
        } else {
            Scalar::Ext(desc.clone(), coeffs.into_boxed_slice())
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_zero())
    }

    pub fn is_one(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_one())
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(q) => Some(q),
            Scalar::Ext(..) => None,
        }
    }

    /// Coefficients in the power basis of `field` (length = field degree, or 1
    /// over the rationals).
    pub fn coeffs_in(&self, field: &Field) -> Vec<BigRational> {
        let n = match field {
            Field::Rational => 1,
            Field::Extension(d) => d.degree(),
        };
        let mut out = match self {
            Scalar::Rat(q) => vec![q.clone()],
            Scalar::Ext(_, c) => c.to_vec(),
        };
        out.resize(n.max(out.len()), BigRational::zero());
        out
    }

    fn descriptor(&self) -> Option<&Arc<FieldDescriptor>> {
        match self {
            Scalar::Rat(_) => None,
            Scalar::Ext(d, _) => Some(d),
        }
    }

    fn common_desc<'a>(&'a self, other: &'a Scalar) -> Result<Option<&'a Arc<FieldDescriptor>>, ScalarError> {
        match (self.descriptor(), other.descriptor()) {
            (Some(a), Some(b)) if !same_desc(a, b) => {
                Err(ScalarError::FieldMismatch(a.symbol.clone(), b.symbol.clone()))
            }
            (Some(a), _) => Ok(Some(a)),
            (None, b) => Ok(b),
        }
    }

    fn dense(&self, n: usize) -> Vec<BigRational> {
        let mut v = match self {
            Scalar::Rat(q) => vec![q.clone()],
            Scalar::Ext(_, c) => c.to_vec(),
        };
        v.resize(n, BigRational::zero());
        v
    }

    pub fn try_add(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match self.common_desc(other)? {
            None => Ok(Scalar::Rat(self.as_rational().unwrap() + other.as_rational().unwrap())),
            Some(d) => {
                let n = d.degree();
                let (a, b) = (self.dense(n), other.dense(n));
                let sum = a.into_iter().zip(b).map(|(x, y)| x + y).collect();
                Ok(Self::canonical(d, sum))
            }
        }
    }

    pub fn try_sub(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.try_add(&-other)
    }

    pub fn try_mul(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => return Ok(Scalar::Rat(a * b)),
            (Scalar::Rat(a), Scalar::Ext(d, c)) | (Scalar::Ext(d, c), Scalar::Rat(a)) => {
                if a.is_zero() {
                    return Ok(Scalar::zero());
                }
                return Ok(Scalar::Ext(d.clone(), c.iter().map(|x| x * a).collect()));
            }
            _ => {}
        }
        let d = self.common_desc(other)?.expect("both extension elements");
        let n = d.degree();
        let (a, b) = (self.dense(n), other.dense(n));
        let mut prod = vec![BigRational::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        Ok(Self::canonical(d, poly_rem(prod, d.minpoly())))
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rat(q) if q.is_zero() => Err(ScalarError::DivisionByZero),
            Scalar::Rat(q) => Ok(Scalar::Rat(q.recip())),
            Scalar::Ext(d, c) => {
                // extended Euclid: u*a + v*m = 1
                let (g, u) = poly_ext_gcd(c.to_vec(), d.minpoly().to_vec());
                debug_assert!(g.len() == 1 && g[0].is_one());
                Ok(Self::canonical(d, poly_rem(u, d.minpoly())))
            }
        }
    }

    pub fn try_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        self.common_desc(other)?;
        self.try_mul(&other.inv()?)
    }

    /// Raises to a non-negative power by repeated squaring.
    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = Scalar::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    /// Formats the value for use as a polynomial coefficient; sums get
    /// parentheses.
    pub(crate) fn is_compound(&self) -> bool {
        match self {
            Scalar::Rat(_) => false,
            Scalar::Ext(_, c) => c.iter().filter(|x| !x.is_zero()).count() > 1 || c.iter().any(|x| x.is_negative()),
        }
    }

    /// True for a rational strictly less than zero.
    pub fn is_negative_rational(&self) -> bool {
        matches!(self, Scalar::Rat(q) if q.is_negative())
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a == b,
            (Scalar::Ext(da, a), Scalar::Ext(db, b)) => same_desc(da, db) && a == b,
            _ => false,
        }
    }
}
impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Scalar::Rat(q) => q.hash(state),
            Scalar::Ext(_, c) => c.hash(state),
        }
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<BigRational> for Scalar {
    fn from(q: BigRational) -> Self {
        Scalar::Rat(q)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(q) => write!(f, "{q}"),
            Scalar::Ext(d, c) => write!(f, "{}", univariate_to_string(c, d.symbol())),
        }
    }
}

fn univariate_to_string(coeffs: &[BigRational], sym: &str) -> String {
    let mut out = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let power = match k {
            0 => String::new(),
            1 => sym.to_string(),
            _ => format!("{sym}^{k}"),
        };
        if k == 0 {
            out.push_str(&a.to_string());
        } else if a.is_one() {
            out.push_str(&power);
        } else {
            out.push_str(&format!("{a}*{power}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $checked:ident) => {
        impl $tr<&Scalar> for &Scalar {
            type Output = Scalar;
            /// Panics on mismatched fields; use the `try_` variant to recover.
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a += b;
            return;
        }
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a -= b;
            return;
        }
        *self = &*self - rhs;
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        if let (Scalar::Rat(a), Scalar::Rat(b)) = (&mut *self, rhs) {
            *a *= b;
            return;
        }
        *self = &*self * rhs;
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(q) => Scalar::Rat(-q),
            Scalar::Ext(d, c) => Scalar::Ext(d.clone(), c.iter().map(|x| -x).collect()),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

// --- dense univariate helpers over Q, constant term first ---

fn trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

fn poly_rem(mut a: Vec<BigRational>, m: &[BigRational]) -> Vec<BigRational> {
    trim(&mut a);
    let dm = m.len() - 1;
    let lead = &m[dm];
    while a.len() > dm {
        let top = a.len() - 1;
        let q = &a[top] / lead;
        let shift = top - dm;
        for (i, c) in m.iter().enumerate() {
            a[shift + i] -= &q * c;
        }
        trim(&mut a);
    }
    a
}

fn poly_divrem(mut a: Vec<BigRational>, b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    trim(&mut a);
    let db = b.len() - 1;
    if a.len() <= db {
        return (Vec::new(), a);
    }
    let mut q = vec![BigRational::zero(); a.len() - db];
    while a.len() > db {
        let top = a.len() - 1;
        let c = &a[top] / &b[db];
        let shift = top - db;
        for (i, bc) in b.iter().enumerate() {
            a[shift + i] -= &c * bc;
        }
        q[shift] = c;
        trim(&mut a);
    }
    (q, a)
}

fn poly_mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| a.get(i).cloned().unwrap_or_default() - b.get(i).cloned().unwrap_or_default())
        .collect();
    trim(&mut out);
    out
}

/// Returns `(g, u)` with `g = gcd(a, m)` monic and `u*a = g (mod m)`.
fn poly_ext_gcd(a: Vec<BigRational>, m: Vec<BigRational>) -> (Vec<BigRational>, Vec<BigRational>) {
    let (mut r0, mut r1) = (m, a);
    trim(&mut r1);
    let (mut s0, mut s1) = (Vec::new(), vec![BigRational::one()]);
    while !r1.is_empty() {
        let (q, r) = poly_divrem(r0, &r1);
        let s = poly_sub(&s0, &poly_mul(&q, &s1));
        r0 = std::mem::replace(&mut r1, r);
        s0 = std::mem::replace(&mut s1, s);
    }
    let lead = r0.last().cloned().unwrap_or_else(BigRational::one);
    let g = r0.iter().map(|c| c / &lead).collect();
    let u = s0.iter().map(|c| c / &lead).collect();
    (g, u)
}

/// Finds a rational root by the rational-root test.
fn rational_root(p: &[BigRational]) -> Option<BigRational> {
    if p[0].is_zero() {
        return Some(BigRational::zero());
    }
    // clear denominators
    let lcm = p.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = p.iter().map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer()).collect();
    let eval = |x: &BigRational| {
        ints.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    };
    let nums = divisors(&ints[0].abs());
    let dens = divisors(&ints.last().unwrap().abs());
    for n in &nums {
        for d in &dens {
            for sign in [1i64, -1] {
                let cand = BigRational::new(n * BigInt::from(sign), d.clone());
                if eval(&cand).is_zero() {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    let mut out = Vec::new();
    let mut i = BigInt::one();
    while &i * &i <= *n {
        if (n % &i).is_zero() {
            out.push(i.clone());
            let other = n / &i;
            if other != i {
                out.push(other);
            }
        }
        i += 1;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sqrt2() -> (Field, Scalar) {
        let f = Field::sqrt2("s");
        let s = f.generator().unwrap();
        (f, s)
    }

    #[test]
    fn rational_sum() {
        assert_eq!(Scalar::ratio(1, 2) + Scalar::ratio(1, 3), Scalar::ratio(5, 6));
    }

    #[test]
    fn defining_relation() {
        let (_, s) = sqrt2();
        assert_eq!(&s * &s, Scalar::from_int(2));
        assert!(matches!(&s * &s, Scalar::Rat(_)));
    }

    #[test]
    fn inverse_of_one_plus_root() {
        let (_, s) = sqrt2();
        let a = Scalar::one() + &s;
        let expected = Scalar::from_int(-1) + &s;
        assert_eq!(a.inv().unwrap(), expected);
        assert!((&a * &expected).is_one());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert_eq!(Scalar::one().try_div(&Scalar::zero()), Err(ScalarError::DivisionByZero));
        assert_eq!(Scalar::zero().inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn mismatched_extensions_are_rejected() {
        let (_, s) = sqrt2();
        let g = Field::extension(FieldDescriptor::from_ints(&[-3, 0, 1], "t").unwrap());
        let t = g.generator().unwrap();
        assert!(matches!(s.try_add(&t), Err(ScalarError::FieldMismatch(..))));
        assert!(matches!(s.try_mul(&t), Err(ScalarError::FieldMismatch(..))));
        // rationals mix with anything
        assert!(s.try_add(&Scalar::one()).is_ok());
    }

    #[test]
    fn minpoly_validation() {
        assert!(FieldDescriptor::from_ints(&[-4, 0, 1], "r").is_err()); // (s-2)(s+2)
        assert!(FieldDescriptor::from_ints(&[1, 0, 2], "r").is_err()); // not monic
        assert!(FieldDescriptor::from_ints(&[-2, 0, 0, 1], "r").is_ok());
        assert!(FieldDescriptor::from_ints(&[-1, 0, 0, 1], "r").is_err());
        let quartic = FieldDescriptor::from_ints(&[1, 0, 0, 0, 1], "r").unwrap();
        assert!(quartic.is_trusted());
    }

    #[test]
    fn cube_root_field_inverse() {
        let f = Field::extension(FieldDescriptor::from_ints(&[-2, 0, 0, 1], "c").unwrap());
        let c = f.generator().unwrap();
        let a = Scalar::from_int(3) + &c * &c - &c;
        assert!((a.inv().unwrap() * &a).is_one());
        assert_eq!(c.pow(3), Scalar::from_int(2));
    }

    #[test]
    fn display() {
        let (_, s) = sqrt2();
        assert_eq!((Scalar::one() - &s).to_string(), "-s + 1");
        assert_eq!(Scalar::ratio(-3, 6).to_string(), "-1/2");
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        fn elem() -> impl Strategy<Value = Scalar> {
            (-6i64..6, 1i64..4, -6i64..6, 1i64..4).prop_map(|(a, b, c, d)| {
                let (_, s) = sqrt2();
                Scalar::ratio(a, b) + Scalar::ratio(c, d) * s
            })
        }

        proptest! {
            #[test]
            fn field_axioms(a in elem(), b in elem(), c in elem()) {
                prop_assert_eq!((&a + &b) + &c, &a + (&b + &c));
                prop_assert_eq!((&a * &b) * &c, &a * (&b * &c));
                prop_assert_eq!(&a * (&b + &c), &a * &b + &a * &c);
                prop_assert_eq!(&a * &b, &b * &a);
                if !a.is_zero() {
                    prop_assert!((&a * a.inv().unwrap()).is_one());
                }
            }

            #[test]
            fn canonical_equality(a in elem(), b in elem()) {
                // equal values have identical representations
                let x = &(&a + &b) - &b;
                prop_assert_eq!(format!("{x:?}"), format!("{a:?}"));
            }
        }
    }
}
