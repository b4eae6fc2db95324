//! Logarithmic multiderivation modules `D^p(A)`, the Solomon-Terao
//! polynomial, freeness via Saito's criterion, and tameness.
//!
//! A `p`-derivation is stored as a vector in `S^(l choose p)` whose
//! components are indexed by the `p`-subsets of the coordinates in
//! lexicographic order (see [`subsets`]); the basis `dx_U` sits in degree 0.

use thiserror::Error;

use crate::arr::Arrangement;
use crate::gb::{
    buchberger, hilbert_series_submodule, kernel_of_map, minimal_generators, projective_dimension, FreeModule,
    GbError, GroebnerBasis, Vector,
};
use crate::poly::{determinant, BivariatePoly, HilbertSeries, IntPoly, Polynomial};
use crate::scalar::Scalar;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogderError {
    #[error("p = {p} outside 0..={dim}")]
    Degree { p: usize, dim: usize },
    #[error("(1-x)^l does not divide the Solomon-Terao numerator")]
    NonPolynomial,
    #[error("the arrangement is not free")]
    NotFree,
    #[error(transparent)]
    Gb(#[from] GbError),
}

/// The `p`-subsets of `0..n` in lexicographic order.
pub fn subsets(n: usize, p: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, p: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < p - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if p <= n {
        go(0, n, p, &mut Vec::new(), &mut out);
    }
    out
}

/// `D^p(A)` with a minimal generating set and its Hilbert series.
#[derive(Debug, Clone)]
pub struct DerModule {
    pub p: usize,
    pub dim: usize,
    pub module: FreeModule,
    /// Minimal generators, sorted by degree.
    pub generators: Vec<Vector>,
    pub degrees: Vec<i32>,
    pub gb: GroebnerBasis,
    pub hilbert: HilbertSeries,
}

impl DerModule {
    /// Components of generator `i`, one per `p`-subset.
    pub fn generator_components(&self, i: usize) -> Vec<Polynomial> {
        self.generators[i].to_components(self.module.rank(), self.dim)
    }

    pub fn contains(&self, v: &Vector) -> bool {
        self.gb.contains(v)
    }

    pub fn projective_dimension(&self) -> Result<usize, GbError> {
        projective_dimension(&self.module, &self.generators)
    }
}

/// `theta(f)` for a derivation with the given coefficient components.
pub fn apply_derivation(components: &[Polynomial], f: &Polynomial) -> Polynomial {
    components
        .iter()
        .enumerate()
        .fold(Polynomial::zero(f.nvars()), |acc, (j, c)| &acc + &(c * &f.derivative(j)))
}

/// Whether the `p`-derivation with components `comps` satisfies
/// `theta(alpha_H, x_V) in alpha_H S` for every hyperplane and every
/// `(p-1)`-subset `V`.
pub fn satisfies_contraction(a: &Arrangement, p: usize, comps: &[Polynomial]) -> bool {
    let dim = a.dim();
    for h in a.hyperplanes() {
        let alpha = h.form();
        let gb = crate::gb::ideal_basis(dim, std::slice::from_ref(&alpha));
        for (_, row) in contraction_rows(h.coeffs(), dim, p, false) {
            let c = row.iter().zip(comps).fold(Polynomial::zero(dim), |acc, (r, f)| &acc + &f.scale(r));
            if !gb.reduce_poly(&c).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Rows of the contraction with `d alpha`: for each `(p-1)`-subset `V`, the
/// coefficient of `f_U` in `theta(alpha, x_V)`. With `skip_pivot`, subsets
/// containing the first nonzero coordinate of `alpha` are dropped; they are
/// implied by the rest because `alpha` can replace that coordinate.
fn contraction_rows(alpha: &[Scalar], dim: usize, p: usize, skip_pivot: bool) -> Vec<(Vec<usize>, Vec<Scalar>)> {
    let cols = subsets(dim, p);
    let pivot = alpha.iter().position(|c| !c.is_zero());
    subsets(dim, p - 1)
        .into_iter()
        .filter(|v| !(skip_pivot && pivot.is_some_and(|k| v.contains(&k))))
        .map(|v| {
            let row = cols
                .iter()
                .map(|u| {
                    let extra: Vec<usize> = u.iter().copied().filter(|i| !v.contains(i)).collect();
                    if extra.len() != 1 || !v.iter().all(|i| u.contains(i)) {
                        return Scalar::zero();
                    }
                    let i = extra[0];
                    let before = v.iter().filter(|&&j| j < i).count();
                    if before % 2 == 0 {
                        alpha[i].clone()
                    } else {
                        -&alpha[i]
                    }
                })
                .collect();
            (v, row)
        })
        .collect()
}

/// `D^p(A)`.
pub fn log_derivations(a: &Arrangement, p: usize) -> Result<DerModule, LogderError> {
    let dim = a.dim();
    if p > dim {
        return Err(LogderError::Degree { p, dim });
    }
    let rank = subsets(dim, p).len();
    let module = FreeModule::unshifted(dim, rank);
    let kernel = if p == 0 {
        vec![Vector::from_poly(&Polynomial::one(dim))]
    } else {
        let mut rows = Vec::new();
        let mut mods = Vec::new();
        for h in a.hyperplanes() {
            for (_, row) in contraction_rows(h.coeffs(), dim, p, true) {
                rows.push(row.into_iter().map(|c| Polynomial::constant(dim, c)).collect::<Vec<_>>());
                mods.push(Some(h.form()));
            }
        }
        if rows.is_empty() {
            (0..rank).map(|i| Vector::from_poly_at(&Polynomial::one(dim), i)).collect()
        } else {
            kernel_of_map(&module, &rows, &mods)?
        }
    };
    let gb = buchberger(&module, &kernel);
    let hilbert = hilbert_series_submodule(&gb)?;
    let mut generators = minimal_generators(&module, gb.elements())?;
    generators.sort_by_key(|g| g.degree(&module));
    let degrees = generators.iter().map(|g| g.degree(&module).unwrap_or(0)).collect();
    Ok(DerModule { p, dim, module, generators, degrees, gb, hilbert })
}

/// `D^p(A)` for `p = 0..=l`.
pub fn all_log_derivations(a: &Arrangement) -> Result<Vec<DerModule>, LogderError> {
    (0..=a.dim()).map(|p| log_derivations(a, p)).collect()
}

/// `1 - x - t`.
fn one_minus_x_minus_t() -> BivariatePoly {
    BivariatePoly::from_grid(vec![vec![1, -1], vec![-1]])
}

/// `Psi(A; x, t) = sum_p Hilb(D^p; x) (1-x-t)^p t^(l-p)`, from the Hilbert
/// series of the modules `D^0, ..., D^l`.
pub fn solomon_terao_from(modules: &[DerModule]) -> Result<BivariatePoly, LogderError> {
    let l = modules.len() - 1;
    let mut acc = BivariatePoly::zero();
    for (p, m) in modules.iter().enumerate() {
        let num = BivariatePoly::from_x(&m.hilbert.numerator_over(l as u32));
        let mut term = num.mul(&BivariatePoly::from_t(&IntPoly::term(1, l - p)));
        for _ in 0..p {
            term = term.mul(&one_minus_x_minus_t());
        }
        acc = acc.add(&term);
    }
    for _ in 0..l {
        acc = acc.div_one_minus_x().ok_or(LogderError::NonPolynomial)?;
    }
    Ok(acc)
}

pub fn solomon_terao_polynomial(a: &Arrangement) -> Result<BivariatePoly, LogderError> {
    solomon_terao_from(&all_log_derivations(a)?)
}

/// `prod_i (t (1 + x + ... + x^(d_i - 1)) + x^(d_i))`, the value of `Psi`
/// for a free arrangement with exponents `d_i`.
pub fn free_solomon_terao(exponents: &[i32]) -> BivariatePoly {
    exponents.iter().fold(BivariatePoly::from_grid(vec![vec![1]]), |acc, &d| {
        let d = d.max(0) as usize;
        let mut f = BivariatePoly::zero();
        for k in 0..d {
            f.add_term(k, 1, 1);
        }
        f.add_term(d, 0, 1);
        acc.mul(&f)
    })
}

/// Outcome of the identity `sum_p Hilb(D^p; x) (-x)^(l-p) = 0`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Acyclicity {
    pub holds: bool,
    /// Numerator of the left-hand side over `(1-x)^l`.
    pub residual: IntPoly,
}

pub fn check_acyclicity_from(modules: &[DerModule]) -> Acyclicity {
    let l = modules.len() - 1;
    let residual = modules.iter().enumerate().fold(IntPoly::zero(), |acc, (p, m)| {
        let sign = if (l - p).is_multiple_of(2) { 1 } else { -1 };
        acc.add(&m.hilbert.numerator_over(l as u32).mul(&IntPoly::term(sign, l - p)))
    });
    Acyclicity { holds: residual.is_zero(), residual }
}

pub fn check_acyclicity(a: &Arrangement) -> Result<Acyclicity, LogderError> {
    Ok(check_acyclicity_from(&all_log_derivations(a)?))
}

/// Freeness verdict; `exponents` are the minimal generator degrees, sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Freeness {
    pub free: bool,
    pub exponents: Vec<i32>,
}

/// Saito's criterion on a minimal generating set of `D(A)`: free iff there
/// are exactly `l` generators, their degrees sum to `|A|`, and
/// `det(theta_i(x_j))` is a nonzero multiple of `Q(A)`.
pub fn freeness_of(a: &Arrangement, d1: &DerModule) -> Freeness {
    let exponents = d1.degrees.clone();
    let l = a.dim();
    if d1.generators.len() != l || exponents.iter().sum::<i32>() != a.len() as i32 {
        return Freeness { free: false, exponents };
    }
    let rows: Vec<Vec<Polynomial>> = (0..l).map(|i| d1.generator_components(i)).collect();
    let det = determinant(&rows, l);
    let q = a.defining_polynomial();
    let free = match (det.leading(), q.leading()) {
        (Some((m1, c1)), Some((m2, c2))) if m1 == m2 => q.scale(&(c1 * &c2.inv().expect("nonzero"))) == det,
        _ => false,
    };
    Freeness { free, exponents }
}

pub fn is_free(a: &Arrangement) -> Result<Freeness, LogderError> {
    Ok(freeness_of(a, &log_derivations(a, 1)?))
}

/// Whether `pi(A; t) = prod (1 + d_i t)` for a free arrangement.
pub fn terao_factorization_check(a: &Arrangement) -> Result<bool, LogderError> {
    let f = is_free(a)?;
    if !f.free {
        return Err(LogderError::NotFree);
    }
    let prod = f.exponents.iter().fold(IntPoly::one(), |acc, &d| acc.mul(&IntPoly::new(vec![1, d as i64])));
    Ok(prod == a.poincare_polynomial())
}

/// Whether `pd D^p(A) <= l - p` for all `p`. Free arrangements and
/// arrangements in dimension at most 3 are tame without computation.
pub fn is_tame(a: &Arrangement) -> Result<bool, LogderError> {
    if a.dim() <= 3 || is_free(a)?.free {
        return Ok(true);
    }
    for p in 1..=a.dim() {
        let m = log_derivations(a, p)?;
        if m.projective_dimension()? > a.dim() - p {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    fn three_lines() -> Arrangement {
        Arrangement::from_int_forms(2, &[&[1, 0], &[0, 1], &[1, 1]]).unwrap()
    }

    #[test]
    fn subset_order() {
        assert_eq!(subsets(3, 2), vec![vec![0, 1], vec![0, 2], vec![1, 2]]);
        assert_eq!(subsets(3, 0), vec![Vec::<usize>::new()]);
        assert!(subsets(2, 3).is_empty());
    }

    #[test]
    fn empty_arrangement_gives_der_s() {
        let a = Arrangement::empty(Field::Rational, 3);
        let d = log_derivations(&a, 1).unwrap();
        assert_eq!(d.degrees, vec![0, 0, 0]);
        assert_eq!(solomon_terao_polynomial(&a).unwrap().grid(), vec![vec![1]]);
    }

    #[test]
    fn three_lines_basis() {
        let a = three_lines();
        let d = log_derivations(&a, 1).unwrap();
        assert_eq!(d.degrees, vec![1, 2]);
        assert_eq!(d.hilbert.numerator().coeffs(), &[0, 1, 1]);
        let f = freeness_of(&a, &d);
        assert!(f.free);
        assert_eq!(f.exponents, vec![1, 2]);
        assert!(terao_factorization_check(&a).unwrap());
        for i in 0..2 {
            assert!(satisfies_contraction(&a, 1, &d.generator_components(i)));
        }
    }

    #[test]
    fn boolean_top_forms() {
        let a = Arrangement::from_int_forms(2, &[&[1, 0], &[0, 1]]).unwrap();
        let d2 = log_derivations(&a, 2).unwrap();
        assert_eq!(d2.degrees, vec![2]);
        let x = Polynomial::var(2, 0);
        let y = Polynomial::var(2, 1);
        assert_eq!(d2.generator_components(0)[0].monic(), &x * &y);
        let psi = solomon_terao_polynomial(&a).unwrap();
        // (t + x)^2
        assert_eq!(psi, BivariatePoly::from_grid(vec![vec![0, 0, 1], vec![0, 2], vec![1]]));
        assert!(check_acyclicity(&a).unwrap().holds);
    }

    #[test]
    fn single_hyperplane_psi() {
        let a = Arrangement::from_int_forms(1, &[&[1]]).unwrap();
        assert_eq!(solomon_terao_polynomial(&a).unwrap(), BivariatePoly::from_grid(vec![vec![0, 1], vec![1]]));
    }

    #[test]
    fn braid_has_degree_zero_generator() {
        let a = Arrangement::from_int_forms(3, &[&[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]).unwrap();
        let f = is_free(&a).unwrap();
        assert!(f.free);
        assert_eq!(f.exponents, vec![0, 1, 2]);
        assert!(terao_factorization_check(&a).unwrap());
    }

    #[test]
    fn psi_identities_for_generic_planes() {
        let a = Arrangement::from_int_forms(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap();
        let mods = all_log_derivations(&a).unwrap();
        let psi = solomon_terao_from(&mods).unwrap();
        assert_eq!(psi.at_x_one(), a.poincare_polynomial());
        assert!(psi.at_t_minus_x().is_zero());
        assert!(!freeness_of(&a, &mods[1]).free);
        assert_eq!(mods[1].projective_dimension().unwrap(), 1);
        assert!(is_tame(&a).unwrap());
    }

    #[test]
    fn free_formula_matches_boolean() {
        let a = Arrangement::from_int_forms(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        assert_eq!(solomon_terao_polynomial(&a).unwrap(), free_solomon_terao(&[1, 1, 1]));
    }
}
