//! Central hyperplane arrangements, their intersection lattices, and
//! deletion/restriction.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::linalg::{self, Matrix};
use crate::poly::{default_var_names, IntPoly, Polynomial};
use crate::scalar::{Field, Scalar, ScalarError};

/// Lattice flats are keyed by a bitmask of hyperplanes.
pub const MAX_HYPERPLANES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArrError {
    #[error("hyperplane {0} has the zero form")]
    ZeroForm(usize),
    #[error("hyperplane {index} has {got} coefficients, expected {expected}")]
    WrongLength { index: usize, got: usize, expected: usize },
    #[error("coefficient of hyperplane {0} is not in the field")]
    FieldMismatch(usize),
    #[error("hyperplane index {0} is not in the arrangement")]
    NotInArrangement(usize),
    #[error("at most {MAX_HYPERPLANES} hyperplanes are supported, got {0}")]
    TooManyHyperplanes(usize),
    #[error("{0} variable names for {1} coordinates")]
    Names(usize, usize),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A linear form `alpha_H`, scaled so that its first nonzero coefficient is 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hyperplane {
    coeffs: Vec<Scalar>,
}

impl Hyperplane {
    /// Normalizes `coeffs`; `None` for the zero vector.
    pub fn new(coeffs: Vec<Scalar>) -> Option<Self> {
        let lead = coeffs.iter().find(|c| !c.is_zero())?.clone();
        let inv = lead.inv().ok()?;
        Some(Hyperplane { coeffs: coeffs.iter().map(|c| c * &inv).collect() })
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn form(&self) -> Polynomial {
        Polynomial::linear(&self.coeffs)
    }
}

/// A central arrangement in `K^l` with deduplicated, normalized hyperplanes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrangement {
    field: Field,
    names: Vec<String>,
    hyperplanes: Vec<Hyperplane>,
}

impl Arrangement {
    /// Builds an arrangement from coefficient vectors. Proportional forms
    /// collapse to the first occurrence; order is otherwise preserved.
    pub fn new(field: Field, dim: usize, forms: &[Vec<Scalar>]) -> Result<Self, ArrError> {
        Self::with_names(field, default_var_names(dim), forms)
    }

    pub fn with_names(field: Field, names: Vec<String>, forms: &[Vec<Scalar>]) -> Result<Self, ArrError> {
        let dim = names.len();
        let mut hyperplanes: Vec<Hyperplane> = Vec::new();
        for (index, f) in forms.iter().enumerate() {
            if f.len() != dim {
                return Err(ArrError::WrongLength { index, got: f.len(), expected: dim });
            }
            if !f.iter().all(|c| field.contains(c)) {
                return Err(ArrError::FieldMismatch(index));
            }
            let h = Hyperplane::new(f.clone()).ok_or(ArrError::ZeroForm(index))?;
            if !hyperplanes.contains(&h) {
                hyperplanes.push(h);
            }
        }
        if hyperplanes.len() > MAX_HYPERPLANES {
            return Err(ArrError::TooManyHyperplanes(hyperplanes.len()));
        }
        Ok(Arrangement { field, names, hyperplanes })
    }

    /// Convenience constructor for integer forms over the rationals.
    pub fn from_int_forms(dim: usize, forms: &[&[i64]]) -> Result<Self, ArrError> {
        let forms: Vec<Vec<Scalar>> = forms.iter().map(|f| f.iter().map(|&c| Scalar::from_int(c)).collect()).collect();
        Self::new(Field::Rational, dim, &forms)
    }

    /// The empty arrangement in `K^dim`.
    pub fn empty(field: Field, dim: usize) -> Self {
        Arrangement { field, names: default_var_names(dim), hyperplanes: Vec::new() }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Ambient dimension `l`.
    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.hyperplanes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hyperplanes.is_empty()
    }

    pub fn hyperplanes(&self) -> &[Hyperplane] {
        &self.hyperplanes
    }

    pub fn forms(&self) -> Vec<Polynomial> {
        self.hyperplanes.iter().map(Hyperplane::form).collect()
    }

    /// `Q(A)`, the product of the defining forms.
    pub fn defining_polynomial(&self) -> Polynomial {
        self.forms().iter().fold(Polynomial::one(self.dim()), |acc, f| &acc * f)
    }

    /// Dimension of the span of the defining forms.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.coefficient_matrix())
    }

    fn coefficient_matrix(&self) -> Matrix {
        self.hyperplanes.iter().map(|h| h.coeffs.clone()).collect()
    }

    /// Index of the hyperplane with the given (not necessarily normalized) form.
    pub fn position(&self, coeffs: &[Scalar]) -> Option<usize> {
        let h = Hyperplane::new(coeffs.to_vec())?;
        self.hyperplanes.iter().position(|g| *g == h)
    }

    /// `A \ {H}`, in the same coordinates.
    pub fn delete(&self, index: usize) -> Result<Arrangement, ArrError> {
        if index >= self.len() {
            return Err(ArrError::NotInArrangement(index));
        }
        let mut out = self.clone();
        out.hyperplanes.remove(index);
        Ok(out)
    }

    /// The basis of `H` used as coordinates on the restriction.
    pub fn restriction_basis(&self, index: usize) -> Result<Vec<Vec<Scalar>>, ArrError> {
        let h = self.hyperplanes.get(index).ok_or(ArrError::NotInArrangement(index))?;
        Ok(subspace_basis(std::slice::from_ref(&h.coeffs), self.dim()))
    }

    /// `A^H` in the coordinates given by [`Arrangement::restriction_basis`]:
    /// every other form is pulled back to `H`, zero images are dropped and
    /// proportional images merged.
    pub fn restrict(&self, index: usize) -> Result<Arrangement, ArrError> {
        let basis = self.restriction_basis(index)?;
        let forms: Vec<Vec<Scalar>> = self
            .hyperplanes
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != index)
            .map(|(_, h)| pull_back_linear(&h.coeffs, &basis))
            .filter(|f| f.iter().any(|c| !c.is_zero()))
            .collect();
        Arrangement::new(self.field.clone(), basis.len(), &forms)
    }

    pub fn lattice(&self) -> IntersectionLattice {
        IntersectionLattice::build(self)
    }

    pub fn characteristic_polynomial(&self) -> IntPoly {
        self.lattice().characteristic_polynomial()
    }

    pub fn poincare_polynomial(&self) -> IntPoly {
        self.lattice().poincare_polynomial()
    }
}

impl fmt::Display for Arrangement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return write!(f, "empty arrangement in dimension {}", self.dim());
        }
        let parts: Vec<String> =
            self.forms().iter().map(|p| format!("({})", p.display_with(&self.names))).collect();
        write!(f, "{}", parts.join(""))
    }
}

/// Basis of the common kernel of the given forms, read off the reduced row
/// echelon form (one vector per free column, in column order).
pub fn subspace_basis(forms: &[Vec<Scalar>], dim: usize) -> Vec<Vec<Scalar>> {
    let forms: Matrix = forms.iter().filter(|f| f.iter().any(|c| !c.is_zero())).cloned().collect();
    linalg::nullspace(&forms, dim)
}

/// Coefficients of `alpha` restricted to the subspace with the given basis.
pub fn pull_back_linear(alpha: &[Scalar], basis: &[Vec<Scalar>]) -> Vec<Scalar> {
    basis.iter().map(|b| alpha.iter().zip(b).fold(Scalar::zero(), |acc, (a, c)| acc + a * c)).collect()
}

/// `p` restricted to the subspace with the given basis, as a polynomial in
/// `basis.len()` coordinates.
pub fn pull_back(p: &Polynomial, basis: &[Vec<Scalar>]) -> Polynomial {
    let k = basis.len();
    let images: Vec<Polynomial> = (0..p.nvars())
        .map(|i| Polynomial::linear(&basis.iter().map(|b| b[i].clone()).collect::<Vec<_>>()))
        .map(|f| if k == 0 { Polynomial::zero(0) } else { f })
        .collect();
    if k == 0 {
        return Polynomial::constant(0, p.constant_term());
    }
    p.substitute(&images).expect("images share one ring")
}

/// An element `X` of the intersection lattice.
#[derive(Debug, Clone)]
pub struct Flat {
    /// Hyperplanes containing `X`, as a bitmask over the arrangement order.
    pub mask: u64,
    /// Reduced row echelon basis of the span of the forms vanishing on `X`.
    pub span: Matrix,
    pub codim: usize,
    pub mobius: i64,
}

impl Flat {
    pub fn contains_hyperplane(&self, i: usize) -> bool {
        self.mask >> i & 1 == 1
    }

    pub fn hyperplane_indices(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains_hyperplane(i)).collect()
    }

    /// A basis of `X` itself.
    pub fn basis(&self, dim: usize) -> Vec<Vec<Scalar>> {
        subspace_basis(&self.span, dim)
    }
}

/// `L(A)` ordered by reverse inclusion, with the Moebius function.
#[derive(Debug, Clone)]
pub struct IntersectionLattice {
    dim: usize,
    flats: Vec<Flat>,
    /// `covers[i]` lists the flats of codimension one more inside flat `i`.
    covers: Vec<Vec<usize>>,
}

impl IntersectionLattice {
    pub fn build(a: &Arrangement) -> Self {
        let dim = a.dim();
        let coeffs = a.coefficient_matrix();
        let mut flats = vec![Flat { mask: 0, span: Vec::new(), codim: 0, mobius: 1 }];
        let mut seen: HashMap<u64, usize> = HashMap::from([(0, 0)]);
        let mut frontier = vec![0usize];
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for fi in frontier {
                for (h, row) in coeffs.iter().enumerate() {
                    if flats[fi].contains_hyperplane(h) {
                        continue;
                    }
                    let mut span = flats[fi].span.clone();
                    span.push(row.clone());
                    linalg::rref(&mut span);
                    let mask = (0..coeffs.len())
                        .filter(|&j| in_row_space(&span, &coeffs[j]))
                        .fold(0u64, |m, j| m | 1 << j);
                    if let std::collections::hash_map::Entry::Vacant(e) = seen.entry(mask) {
                        e.insert(flats.len());
                        next.push(flats.len());
                        let codim = span.len();
                        flats.push(Flat { mask, span, codim, mobius: 0 });
                    }
                }
            }
            frontier = next;
        }
        flats.sort_by_key(|f| (f.codim, f.mask));
        for i in 1..flats.len() {
            let mask = flats[i].mask;
            let s: i64 = flats[..i].iter().filter(|y| y.mask & mask == y.mask && y.mask != mask).map(|y| y.mobius).sum();
            flats[i].mobius = -s;
        }
        let covers = flats
            .iter()
            .map(|x| {
                flats
                    .iter()
                    .enumerate()
                    .filter(|(_, y)| y.codim == x.codim + 1 && x.mask & y.mask == x.mask)
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        IntersectionLattice { dim, flats, covers }
    }

    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn len(&self) -> usize {
        self.flats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flats.is_empty()
    }

    pub fn covers(&self, i: usize) -> &[usize] {
        &self.covers[i]
    }

    /// Rank of the arrangement, i.e. the largest codimension.
    pub fn rank(&self) -> usize {
        self.flats.iter().map(|f| f.codim).max().unwrap_or(0)
    }

    pub fn of_codim(&self, c: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.codim == c)
    }

    /// `chi(A; t) = sum mu(X) t^{dim X}`.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        self.flats.iter().fold(IntPoly::zero(), |acc, f| acc.add(&IntPoly::term(f.mobius, self.dim - f.codim)))
    }

    /// `pi(A; t) = sum mu(X) (-t)^{codim X}`.
    pub fn poincare_polynomial(&self) -> IntPoly {
        self.flats.iter().fold(IntPoly::zero(), |acc, f| {
            let sign = if f.codim % 2 == 0 { 1 } else { -1 };
            acc.add(&IntPoly::term(sign * f.mobius, f.codim))
        })
    }
}

fn in_row_space(rref_rows: &Matrix, v: &[Scalar]) -> bool {
    let mut m = rref_rows.clone();
    m.push(v.to_vec());
    linalg::rank(&m) == rref_rows.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ex4() -> Arrangement {
        Arrangement::from_int_forms(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]).unwrap()
    }

    #[test]
    fn normalization_and_dedupe() {
        let a = Arrangement::from_int_forms(2, &[&[2, 4], &[1, 2], &[0, -3]]).unwrap();
        assert_eq!(a.len(), 2);
        assert_eq!(a.hyperplanes()[0].coeffs(), &[Scalar::one(), Scalar::from_int(2)]);
        assert_eq!(a.hyperplanes()[1].coeffs(), &[Scalar::zero(), Scalar::one()]);
        assert!(matches!(Arrangement::from_int_forms(2, &[&[0, 0]]), Err(ArrError::ZeroForm(0))));
        assert!(matches!(Arrangement::from_int_forms(2, &[&[1]]), Err(ArrError::WrongLength { .. })));
    }

    #[test]
    fn empty_lattice() {
        let a = Arrangement::empty(Field::Rational, 3);
        let l = a.lattice();
        assert_eq!(l.len(), 1);
        assert_eq!(l.flats()[0].mobius, 1);
        assert_eq!(l.characteristic_polynomial().coeffs(), &[0, 0, 0, 1]);
        assert_eq!(l.poincare_polynomial().coeffs(), &[1]);
    }

    #[test]
    fn boolean_plane() {
        let a = Arrangement::from_int_forms(2, &[&[1, 0], &[0, 1]]).unwrap();
        let l = a.lattice();
        assert_eq!(l.len(), 4);
        let origin = l.of_codim(2).next().unwrap();
        assert_eq!(origin.mobius, 1);
        assert_eq!(l.covers(0).len(), 2);
    }

    #[test]
    fn generic_four_planes() {
        let l = ex4().lattice();
        assert_eq!(l.of_codim(2).count(), 6);
        assert_eq!(l.of_codim(3).count(), 1);
        assert_eq!(l.poincare_polynomial().coeffs(), &[1, 4, 6, 3]);
        assert_eq!(l.poincare_polynomial().sum(), 14);
    }

    #[test]
    fn restriction_to_generic_plane() {
        let a = ex4();
        let r = a.restrict(3).unwrap();
        assert_eq!(r.dim(), 2);
        assert_eq!(r.len(), 3);
        assert!(matches!(a.restrict(7), Err(ArrError::NotInArrangement(7))));
    }

    #[test]
    fn boolean_restriction_and_deletion() {
        let a = Arrangement::from_int_forms(2, &[&[1, 0], &[0, 1]]).unwrap();
        let r = a.restrict(0).unwrap();
        assert_eq!((r.dim(), r.len()), (1, 1));
        let b3 = Arrangement::from_int_forms(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]).unwrap();
        let d = b3.delete(2).unwrap();
        assert_eq!((d.dim(), d.len(), d.rank()), (3, 2, 2));
        assert_eq!(d.poincare_polynomial().coeffs(), &[1, 2, 1]);
    }

    #[test]
    fn sqrt2_arrangement_poincare() {
        let field = Field::sqrt2("r");
        let r = field.generator().unwrap();
        let i = |n: i64| Scalar::from_int(n);
        let forms = vec![
            vec![i(1), i(0), i(0)],
            vec![i(1), i(-1), i(0)],
            vec![i(1), i(1), i(0)],
            vec![i(1), -&r, i(0)],
            vec![i(1), r.clone(), i(0)],
            vec![i(0), i(1), i(-1)],
            vec![i(0), i(0), i(1)],
        ];
        let a = Arrangement::new(field, 3, &forms).unwrap();
        // (1+t)(1+3t)^2
        assert_eq!(a.poincare_polynomial().coeffs(), &[1, 7, 15, 9]);
    }

    #[test]
    fn pull_back_restricts_polynomials() {
        let basis = subspace_basis(&[vec![Scalar::one(), Scalar::one(), Scalar::one()]], 3);
        assert_eq!(basis.len(), 2);
        let x = Polynomial::var(3, 0);
        let y = Polynomial::var(3, 1);
        let z = Polynomial::var(3, 2);
        let sum = &(&x + &y) + &z;
        assert!(pull_back(&sum, &basis).is_zero());
        let q = pull_back(&(&x * &x), &basis);
        assert_eq!(q.nvars(), 2);
        assert_eq!(q.degree(), Some(2));
    }
}
