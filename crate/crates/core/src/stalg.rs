//! The Solomon-Terao ideal `a(A, eta) = { theta(eta) : theta in D(A) }` and
//! algebra `ST(A, eta) = S / a(A, eta)`, together with the ring-theoretic
//! analyzers run on it.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::arr::{pull_back, ArrError, Arrangement};
use crate::gb::{ideal_basis, minimal_generators, FreeModule, GbError, QuotientAlgebra, Vector};
use crate::linalg;
use crate::logder::{apply_derivation, log_derivations, DerModule, LogderError};
use crate::poly::{determinant, factor_quantum_integers, is_palindromic, HilbertSeries, Monomial, Polynomial};
use crate::scalar::Scalar;

/// Seed for every pseudo-random choice made here.
pub const SEED: u64 = 0x5eed_2024;
/// Number of candidates tried by [`default_eta`].
pub const ETA_ATTEMPTS: usize = 16;
/// Number of random linear forms tried for the strong Lefschetz property.
pub const SLP_TRIALS: usize = 5;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StError {
    #[error("eta must be a nonzero homogeneous polynomial in {0} variables")]
    BadEta(usize),
    #[error("eta is degenerate on {} lattice element(s)", .0.len())]
    Degenerate(Vec<u64>),
    #[error("no non-degenerate eta among {ETA_ATTEMPTS} candidates; last failures at {0:?}")]
    NoGenericEta(Vec<u64>),
    #[error("eta not generic for this arrangement: the quotient is infinite-dimensional")]
    NotGeneric,
    #[error("the algebra is not Gorenstein")]
    NotGorenstein,
    #[error(transparent)]
    Arr(#[from] ArrError),
    #[error(transparent)]
    Logder(#[from] LogderError),
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// Verdict for one element `X` of the intersection lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlatVerdict {
    pub mask: u64,
    pub dim: usize,
    pub nondegenerate: bool,
}

/// A polynomial `eta` together with its per-flat non-degeneracy record.
#[derive(Debug, Clone)]
pub struct EtaSpec {
    pub eta: Polynomial,
    pub degree: u32,
    pub flats: Vec<FlatVerdict>,
}

impl EtaSpec {
    pub fn is_valid(&self) -> bool {
        self.flats.iter().all(|f| f.nondegenerate)
    }

    pub fn failures(&self) -> Vec<u64> {
        self.flats.iter().filter(|f| !f.nondegenerate).map(|f| f.mask).collect()
    }
}

/// Whether the Jacobian ideal of `f` defines only the origin.
pub fn jacobian_is_zero_dimensional(f: &Polynomial) -> bool {
    let n = f.nvars();
    if n == 0 {
        return true;
    }
    let partials: Vec<Polynomial> = (0..n).map(|i| f.derivative(i)).collect();
    let gb = ideal_basis(n, &partials);
    if gb.is_unit_ideal() {
        return true;
    }
    let lts = gb.leading_terms();
    (0..n).all(|i| lts.iter().any(|t| t.mono.pure_power_var() == Some(i)))
}

/// Checks `eta|_X` for every positive-dimensional `X` in `L(A)`, using the
/// echelon basis of each `X` as coordinates.
pub fn verify_eta(a: &Arrangement, eta: &Polynomial) -> Result<EtaSpec, StError> {
    let dim = a.dim();
    if eta.nvars() != dim || eta.is_zero() || !eta.is_homogeneous() {
        return Err(StError::BadEta(dim));
    }
    let degree = eta.degree().unwrap_or(0);
    let flats = a
        .lattice()
        .flats()
        .iter()
        .filter(|x| x.codim < dim)
        .map(|x| {
            let restricted = pull_back(eta, &x.basis(dim));
            FlatVerdict {
                mask: x.mask,
                dim: dim - x.codim,
                nondegenerate: !restricted.is_zero() && jacobian_is_zero_dimensional(&restricted),
            }
        })
        .collect();
    Ok(EtaSpec { eta: eta.clone(), degree, flats })
}

/// `sum c_i x_i^d`.
pub fn power_sum(coeffs: &[i64], d: u32) -> Polynomial {
    let n = coeffs.len();
    coeffs.iter().enumerate().fold(Polynomial::zero(n), |acc, (i, &c)| {
        &acc + &Polynomial::var(n, i).pow(d).scale(&Scalar::from_int(c))
    })
}

/// The deterministic candidate ladder used by [`default_eta`]: all
/// coefficients 1, then `c_i = i`, then seeded small nonzero integers.
pub fn eta_candidates(dim: usize, d: u32) -> Vec<Polynomial> {
    let mut out = vec![power_sum(&vec![1; dim], d), power_sum(&(1..=dim as i64).collect::<Vec<_>>(), d)];
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    while out.len() < ETA_ATTEMPTS {
        let coeffs: Vec<i64> = (0..dim)
            .map(|_| {
                let c: i64 = rng.gen_range(1..=9);
                if rng.gen_bool(0.5) {
                    c
                } else {
                    -c
                }
            })
            .collect();
        out.push(power_sum(&coeffs, d));
    }
    out
}

/// The first candidate of [`eta_candidates`] that is non-degenerate on
/// every lattice element.
pub fn default_eta(a: &Arrangement, d: u32) -> Result<EtaSpec, StError> {
    let mut last = Vec::new();
    for eta in eta_candidates(a.dim(), d.max(1)) {
        let spec = verify_eta(a, &eta)?;
        if spec.is_valid() {
            return Ok(spec);
        }
        last = spec.failures();
    }
    Err(StError::NoGenericEta(last))
}

/// `ST(A, eta)`.
#[derive(Debug, Clone)]
pub struct StAlgebra {
    pub arrangement: Arrangement,
    pub eta: EtaSpec,
    /// `theta_i(eta)` for the minimal generators of `D(A)`.
    pub ideal_generators: Vec<Polynomial>,
    pub quotient: QuotientAlgebra,
}

impl StAlgebra {
    pub fn dim(&self) -> usize {
        self.arrangement.dim()
    }

    pub fn hilbert_vector(&self) -> Vec<i64> {
        self.quotient.hilbert_vector()
    }

    pub fn top_degree(&self) -> Option<usize> {
        self.quotient.top_degree()
    }

    pub fn socle(&self) -> Vec<Polynomial> {
        self.quotient.socle()
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.quotient.is_zero(f)
    }
}

pub fn st_algebra(a: &Arrangement, eta: &EtaSpec) -> Result<StAlgebra, StError> {
    let d1 = log_derivations(a, 1)?;
    st_algebra_with(a, eta, &d1)
}

/// As [`st_algebra`], reusing an already computed `D(A)`.
pub fn st_algebra_with(a: &Arrangement, eta: &EtaSpec, d1: &DerModule) -> Result<StAlgebra, StError> {
    if !eta.is_valid() {
        return Err(StError::Degenerate(eta.failures()));
    }
    let ideal_generators: Vec<Polynomial> = (0..d1.generators.len())
        .map(|i| apply_derivation(&d1.generator_components(i), &eta.eta))
        .filter(|f| !f.is_zero())
        .collect();
    let gb = ideal_basis(a.dim(), &ideal_generators);
    let quotient = QuotientAlgebra::new(gb).map_err(|e| match e {
        GbError::InfiniteQuotient => StError::NotGeneric,
        e => StError::Gb(e),
    })?;
    Ok(StAlgebra { arrangement: a.clone(), eta: eta.clone(), ideal_generators, quotient })
}

/// Outcome of the strong Lefschetz test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Slp {
    /// The given linear form has all maps `x g^(r-2i)` of full rank.
    Holds(Polynomial),
    /// None of the sampled forms worked; this is not a proof of failure.
    NotEstablished,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleDegreeCheck {
    /// `|A| + l (d - 2)`.
    pub expected: i64,
    pub top_degree: Option<usize>,
    pub top_dimension: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Analysis {
    pub hilbert_vector: Vec<i64>,
    pub dimension: usize,
    pub top_degree: Option<usize>,
    /// Degrees of a minimal generating set of the ideal.
    pub ideal_generator_degrees: Vec<u32>,
    pub complete_intersection: bool,
    /// `e_i` with Hilbert vector `prod [e_i + 1]_x`, padded with zeros to
    /// length `l`; `None` when no such factorization into `l` factors exists.
    pub quantum_factors: Option<Vec<u32>>,
    /// `e_i - d + 2`, when the quantum factorization exists.
    pub recovered_exponents: Option<Vec<i64>>,
    /// Whether the generator degrees of a complete intersection agree with
    /// the quantum factorization (vacuously true otherwise).
    pub ci_consistent: bool,
    pub socle_degrees: Vec<usize>,
    pub gorenstein: bool,
    pub palindromic: bool,
    pub slp: Slp,
    pub socle_degree: SocleDegreeCheck,
}

pub fn analyze(st: &StAlgebra) -> Result<Analysis, StError> {
    let l = st.dim();
    let d = st.eta.degree as i64;
    let hv = st.hilbert_vector();
    let ring = FreeModule::ring(l);
    let gens: Vec<Vector> = st.ideal_generators.iter().map(Vector::from_poly).collect();
    let minimal = minimal_generators(&ring, &gens)?;
    let mut ideal_generator_degrees: Vec<u32> = minimal.iter().map(|g| g.degree(&ring).unwrap_or(0) as u32).collect();
    ideal_generator_degrees.sort_unstable();
    let complete_intersection = minimal.len() == l;

    let quantum_factors = factor_quantum_integers(&HilbertSeries::finite(hv.clone())).and_then(|mut e| {
        if e.len() > l {
            return None;
        }
        e.splice(0..0, std::iter::repeat_n(0, l - e.len()));
        Some(e)
    });
    let recovered_exponents = quantum_factors.as_ref().map(|e| e.iter().map(|&e| e as i64 - d + 2).collect());
    let ci_consistent = !complete_intersection
        || quantum_factors.as_ref().is_some_and(|e| {
            let from_gens: Vec<u32> = ideal_generator_degrees.iter().map(|g| g.saturating_sub(1)).collect();
            *e == from_gens
        });

    let socle = st.socle();
    let socle_degrees: Vec<usize> = socle.iter().filter_map(|s| s.degree().map(|d| d as usize)).collect();
    let top_degree = st.top_degree();
    let expected = st.arrangement.len() as i64 + l as i64 * (d - 2);
    let top_dimension = top_degree.map_or(0, |r| hv[r]);
    let socle_degree = SocleDegreeCheck {
        expected,
        top_degree,
        top_dimension,
        holds: top_degree.is_some_and(|r| r as i64 == expected) && top_dimension == 1,
    };
    Ok(Analysis {
        dimension: st.quotient.dimension(),
        top_degree,
        ideal_generator_degrees,
        complete_intersection,
        quantum_factors,
        recovered_exponents,
        ci_consistent,
        gorenstein: socle.len() == 1,
        socle_degrees,
        palindromic: is_palindromic(&hv),
        slp: strong_lefschetz(&st.quotient),
        socle_degree,
        hilbert_vector: hv,
    })
}

/// Tries seeded random linear forms `g` and asks that every map
/// `x g^(r-2i)` from degree `i` to degree `r-i` has full rank.
pub fn strong_lefschetz(q: &QuotientAlgebra) -> Slp {
    let Some(r) = q.top_degree() else {
        return Slp::NotEstablished;
    };
    let n = q.nvars();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 0x51);
    for _ in 0..SLP_TRIALS {
        let coeffs: Vec<Scalar> = (0..n).map(|_| Scalar::from_int(rng.gen_range(-10..=10))).collect();
        let g = Polynomial::linear(&coeffs);
        if g.is_zero() {
            continue;
        }
        let ok = (0..=r / 2).all(|i| {
            let m = q.multiplication_matrix(&g.pow((r - 2 * i) as u32), i, r - i);
            let rows = q.basis_of_degree(r - i).len();
            let cols = q.basis_of_degree(i).len();
            linalg::rank(&m) == rows.min(cols)
        });
        if ok {
            return Slp::Holds(g);
        }
    }
    Slp::NotEstablished
}

/// `Q(A) det(d_i d_j eta)` reduced modulo the ideal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SocleWitness {
    pub element: Polynomial,
    pub nonzero: bool,
    pub in_socle: bool,
}

pub fn socle_witness(st: &StAlgebra) -> SocleWitness {
    let l = st.dim();
    let eta = &st.eta.eta;
    let hessian: Vec<Vec<Polynomial>> =
        (0..l).map(|i| (0..l).map(|j| eta.derivative(i).derivative(j)).collect()).collect();
    let w = &st.arrangement.defining_polynomial() * &determinant(&hessian, l);
    let element = st.quotient.reduce(&w);
    SocleWitness { nonzero: !element.is_zero(), in_socle: st.quotient.in_socle(&element), element }
}

/// The Macaulay inverse system generator of a Gorenstein algebra, in the
/// dual variables `y_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MacaulayDual {
    pub dual: Polynomial,
    /// Whether every ideal generator, acting as a differential operator,
    /// kills `dual`.
    pub annihilated: bool,
}

/// `F = sum_{|a| = r} [x^a] y^a / a!`, where `[.]` reads the coefficient of
/// the first standard monomial of top degree.
pub fn macaulay_dual(q: &QuotientAlgebra, ideal_generators: &[Polynomial]) -> Result<MacaulayDual, StError> {
    if q.socle().len() != 1 {
        return Err(StError::NotGorenstein);
    }
    let n = q.nvars();
    let r = q.top_degree().expect("nonzero algebra");
    let top = q.basis_of_degree(r)[0];
    let mut terms = Vec::new();
    for m in Monomial::all_of_degree(n, r as u32) {
        let c = q.reduce(&Polynomial::monomial(m, Scalar::one())).coeff(&top);
        if c.is_zero() {
            continue;
        }
        let fact: i64 = m.exps().iter().take(n).map(|&e| (1..=e as i64).product::<i64>()).product();
        terms.push((m, &c * &Scalar::ratio(1, fact)));
    }
    let dual = Polynomial::from_terms(n, terms);
    let annihilated = ideal_generators.iter().all(|g| apply_operator(g, &dual).is_zero());
    Ok(MacaulayDual { dual, annihilated })
}

pub fn st_macaulay_dual(st: &StAlgebra) -> Result<MacaulayDual, StError> {
    macaulay_dual(&st.quotient, &st.ideal_generators)
}

/// `g(d/dy) F`.
pub fn apply_operator(g: &Polynomial, f: &Polynomial) -> Polynomial {
    let mut acc = Polynomial::zero(f.nvars());
    for (m, c) in g.terms() {
        let mut h = f.clone();
        for (i, &e) in m.exps().iter().enumerate().take(f.nvars()) {
            for _ in 0..e {
                h = h.derivative(i);
            }
        }
        acc = &acc + &h.scale(c);
    }
    acc
}

/// Degree-one square-zero elements of a graded quotient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NilpotentLinear {
    /// No nonzero `v` of degree one has `v^2 = 0`, even over the closure.
    None,
    /// A witness with small integer coordinates in the degree-one basis.
    Witness(Polynomial),
    /// Solutions exist over the algebraic closure, but none was found with
    /// coordinates in `[-2, 2]`.
    OverClosure,
}

/// Decides whether some nonzero `v = sum c_k b_k` over the degree-one
/// standard monomials `b_k` has `v^2 = 0`. The coordinates of `v^2` give a
/// homogeneous quadratic system in the `c_k`; it has a nonzero solution over
/// the algebraic closure exactly when its quotient ring is infinite.
pub fn exists_nilpotent_linear(q: &QuotientAlgebra) -> NilpotentLinear {
    let b = q.basis_of_degree(1);
    let m = b.len();
    if m == 0 {
        return NilpotentLinear::None;
    }
    let n = q.nvars();
    // equations[j] is the j-th coordinate of v^2 as a quadratic form in c
    let deg2 = q.basis_of_degree(2).len();
    let mut equations = vec![Polynomial::zero(m); deg2];
    for k in 0..m {
        for l in k..m {
            let prod = Polynomial::monomial(b[k] * b[l], Scalar::one());
            let mult = Scalar::from_int(if k == l { 1 } else { 2 });
            let ck_cl = &Polynomial::var(m, k) * &Polynomial::var(m, l);
            for (j, c) in q.degree_coordinates(&prod, 2).into_iter().enumerate() {
                if !c.is_zero() {
                    equations[j] = &equations[j] + &ck_cl.scale(&(&c * &mult));
                }
            }
        }
    }
    let equations: Vec<Polynomial> = equations.into_iter().filter(|e| !e.is_zero()).collect();
    let finite = QuotientAlgebra::new(ideal_basis(m, &equations)).is_ok();
    if finite {
        return NilpotentLinear::None;
    }
    // search the box [-2, 2]^m by increasing max-norm
    let to_poly = |c: &[i64]| {
        b.iter().zip(c).fold(Polynomial::zero(n), |acc, (mono, &ci)| {
            &acc + &Polynomial::monomial(*mono, Scalar::from_int(ci))
        })
    };
    for norm in 1..=2i64 {
        let mut c = vec![-norm; m];
        loop {
            if c.iter().any(|x| x.abs() == norm) {
                let point: Vec<Scalar> = c.iter().map(|&x| Scalar::from_int(x)).collect();
                if equations.iter().all(|e| e.evaluate(&point).is_zero()) {
                    return NilpotentLinear::Witness(to_poly(&c));
                }
            }
            // odometer
            let mut i = 0;
            while i < m && c[i] == norm {
                c[i] = -norm;
                i += 1;
            }
            if i == m {
                break;
            }
            c[i] += 1;
        }
    }
    NilpotentLinear::OverClosure
}

/// Results of comparing `ST(A, eta)` with the deletion and restriction at
/// one hyperplane.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RestrictionCheck {
    pub deletion_eta_valid: bool,
    pub restriction_eta_valid: bool,
    /// `a(A, eta)` maps into `a(A^H, eta|_H)`.
    pub well_defined: bool,
    pub surjective: bool,
    /// `alpha_H a(A \ H, eta)` lies in `a(A, eta)`, so `F_1` is defined.
    pub first_map_defined: bool,
    pub composition_zero: bool,
    pub restricted_hilbert_vector: Vec<i64>,
}

impl RestrictionCheck {
    pub fn holds(&self) -> bool {
        self.deletion_eta_valid
            && self.restriction_eta_valid
            && self.well_defined
            && self.surjective
            && self.first_map_defined
            && self.composition_zero
    }
}

/// Builds `F_1: ST(A \ H) -> ST(A)` (multiplication by `alpha_H`) and
/// `F_2: ST(A) -> ST(A^H)` (restriction) and checks them.
pub fn restriction_map_check(a: &Arrangement, index: usize, eta: &Polynomial) -> Result<RestrictionCheck, StError> {
    let spec = verify_eta(a, eta)?;
    let st = st_algebra(a, &spec)?;
    let deletion = a.delete(index)?;
    let del_spec = verify_eta(&deletion, eta)?;
    let basis = a.restriction_basis(index)?;
    let restriction = a.restrict(index)?;
    let eta_h = pull_back(eta, &basis);
    let res_spec = if eta_h.is_zero() || !eta_h.is_homogeneous() {
        None
    } else {
        Some(verify_eta(&restriction, &eta_h)?)
    };
    let deletion_eta_valid = del_spec.is_valid();
    let restriction_eta_valid = res_spec.as_ref().is_some_and(EtaSpec::is_valid);
    if !deletion_eta_valid || !restriction_eta_valid {
        return Ok(RestrictionCheck {
            deletion_eta_valid,
            restriction_eta_valid,
            well_defined: false,
            surjective: false,
            first_map_defined: false,
            composition_zero: false,
            restricted_hilbert_vector: Vec::new(),
        });
    }
    let st_h = st_algebra(&restriction, res_spec.as_ref().unwrap())?;
    let st_del = st_algebra(&deletion, &del_spec)?;

    let well_defined = st.ideal_generators.iter().all(|g| st_h.contains(&pull_back(g, &basis)));
    let image: Vec<Vec<Scalar>> = st
        .quotient
        .basis()
        .iter()
        .map(|m| st_h.quotient.coordinates(&pull_back(&Polynomial::monomial(*m, Scalar::one()), &basis)))
        .collect();
    let surjective = linalg::rank(&image) == st_h.quotient.dimension();

    let alpha = a.hyperplanes()[index].form();
    let first_map_defined = st_del.ideal_generators.iter().all(|g| st.contains(&(&alpha * g)));
    let composition_zero = st_del.quotient.basis().iter().all(|m| {
        let f1 = st.quotient.reduce(&alpha.mul_monomial(m));
        st_h.contains(&pull_back(&f1, &basis))
    });
    Ok(RestrictionCheck {
        deletion_eta_valid,
        restriction_eta_valid,
        well_defined,
        surjective,
        first_map_defined,
        composition_zero,
        restricted_hilbert_vector: st_h.hilbert_vector(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn ex4() -> Arrangement {
        Arrangement::from_int_forms(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
    }

    fn boolean2() -> Arrangement {
        Arrangement::from_int_forms(2, &[&[1, 0], &[0, 1]]).unwrap()
    }

    #[test]
    fn degenerate_candidates_are_rejected() {
        let a = boolean2();
        let xy = &Polynomial::var(2, 0) * &Polynomial::var(2, 1);
        assert!(!verify_eta(&a, &xy).unwrap().is_valid());
        let q = a.defining_polynomial();
        let spec = verify_eta(&a, &q).unwrap();
        assert!(!spec.is_valid());
        assert!(matches!(st_algebra(&a, &spec), Err(StError::Degenerate(_))));
        let cube = Polynomial::var(1, 0).pow(3);
        assert!(verify_eta(&Arrangement::empty(Field::Rational, 1), &cube).unwrap().is_valid());
    }

    #[test]
    fn generic_four_planes() {
        let a = ex4();
        let eta = default_eta(&a, 2).unwrap();
        assert_eq!(eta.eta, power_sum(&[1, 1, 1], 2));
        let st = st_algebra(&a, &eta).unwrap();
        assert_eq!(st.hilbert_vector(), vec![1, 3, 5, 4, 1]);
        let an = analyze(&st).unwrap();
        assert!(!an.gorenstein);
        assert!(!an.palindromic);
        assert!(!an.complete_intersection);
        let w = socle_witness(&st);
        assert!(w.nonzero && w.in_socle);
        assert_eq!(w.element.degree(), Some(4));
        assert!(macaulay_dual(&st.quotient, &st.ideal_generators).is_err());
    }

    #[test]
    fn boolean_plane_algebra() {
        let a = boolean2();
        let st = st_algebra(&a, &default_eta(&a, 2).unwrap()).unwrap();
        assert_eq!(st.hilbert_vector(), vec![1, 2, 1]);
        let an = analyze(&st).unwrap();
        assert!(an.complete_intersection && an.gorenstein && an.palindromic && an.ci_consistent);
        assert!(matches!(an.slp, Slp::Holds(_)));
        assert_eq!(an.recovered_exponents, Some(vec![1, 1]));
        assert!(an.socle_degree.holds);
        let w = socle_witness(&st);
        let xy = &Polynomial::var(2, 0) * &Polynomial::var(2, 1);
        assert_eq!(w.element, xy.scale(&Scalar::from_int(4)));
        let dual = st_macaulay_dual(&st).unwrap();
        assert!(dual.annihilated);
        assert_eq!(dual.dual.monic(), xy);
    }

    #[test]
    fn empty_arrangement_socle() {
        let a = Arrangement::empty(Field::Rational, 2);
        let st = st_algebra(&a, &default_eta(&a, 2).unwrap()).unwrap();
        assert_eq!(st.hilbert_vector(), vec![1]);
        let w = socle_witness(&st);
        assert!(w.nonzero && w.in_socle);
        assert_eq!(st_macaulay_dual(&st).unwrap().dual, Polynomial::one(2));
    }

    #[test]
    fn square_zero_linear_forms() {
        let n = 2;
        let x = Polynomial::var(n, 0);
        let y = Polynomial::var(n, 1);
        let q = QuotientAlgebra::new(ideal_basis(n, &[&x * &x, &y * &y])).unwrap();
        match exists_nilpotent_linear(&q) {
            NilpotentLinear::Witness(v) => assert!(q.is_zero(&(&v * &v))),
            other => panic!("expected a witness, got {other:?}"),
        }
        // v^2 = (a^2 + b^2) y^2: solutions only over the closure
        let q = QuotientAlgebra::new(ideal_basis(n, &[&x * &y, &(&x * &x) - &(&y * &y)])).unwrap();
        assert_eq!(exists_nilpotent_linear(&q), NilpotentLinear::OverClosure);
        let q = QuotientAlgebra::new(ideal_basis(n, &[&x * &y, x.pow(3), y.pow(3)])).unwrap();
        assert_eq!(exists_nilpotent_linear(&q), NilpotentLinear::None);
    }

    #[test]
    fn restriction_maps() {
        let a = boolean2();
        let c = restriction_map_check(&a, 0, &power_sum(&[1, 1], 2)).unwrap();
        assert!(c.holds());
        assert_eq!(c.restricted_hilbert_vector, vec![1, 1]);
        let c = restriction_map_check(&ex4(), 3, &power_sum(&[1, 1, 1], 2)).unwrap();
        assert!(c.holds(), "{c:?}");
        assert_eq!(c.restricted_hilbert_vector, vec![1, 2, 2, 1]);
    }
}
