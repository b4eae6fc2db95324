//! Hilbert series from leading-term modules.

use super::{FreeModule, GbError, GroebnerBasis};
use crate::poly::{HilbertSeries, IntPoly, Monomial};

/// Numerator `K` of `Hilb(S/I) = K(x) / (1-x)^n` for a monomial ideal `I`,
/// by pivot splitting `K(I) = K(I + (x_i)) + x * K(I : x_i)`.
pub fn monomial_quotient_numerator(gens: &[Monomial]) -> IntPoly {
    let gens = minimalize(gens.to_vec());
    if gens.is_empty() {
        return IntPoly::one();
    }
    if gens.iter().any(Monomial::is_one) {
        return IntPoly::zero();
    }
    let pairwise_coprime = gens.iter().enumerate().all(|(i, a)| gens[i + 1..].iter().all(|b| a.is_coprime(b)));
    if pairwise_coprime {
        return gens
            .iter()
            .fold(IntPoly::one(), |acc, g| acc.mul(&IntPoly::one().sub(&IntPoly::term(1, g.degree() as usize))));
    }
    // pivot on a variable of a generator that is not a pure power, choosing
    // the variable occurring in the most generators
    let nvars = gens[0].nvars();
    let candidate = gens.iter().find(|g| g.pure_power_var().is_none()).expect("some generator mixes variables");
    let var = (0..nvars)
        .filter(|&i| candidate.exp(i) > 0)
        .max_by_key(|&i| (gens.iter().filter(|g| g.exp(i) > 0).count(), std::cmp::Reverse(i)))
        .unwrap();
    let pivot = Monomial::var(nvars, var);
    let mut with_pivot = gens.clone();
    with_pivot.push(pivot);
    let colon: Vec<Monomial> = gens.iter().map(|g| if g.exp(var) > 0 { g.with_exp(var, g.exp(var) - 1) } else { *g }).collect();
    monomial_quotient_numerator(&with_pivot).add(&monomial_quotient_numerator(&colon).shift(1))
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort();
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::new();
    for g in gens {
        if !out.iter().any(|h| h.divides(&g)) {
            out.retain(|h| !g.divides(h));
            out.push(g);
        }
    }
    out
}

/// Hilbert series of the submodule with Groebner basis `gb`, read off the
/// leading-term module one component at a time.
pub fn hilbert_series_submodule(gb: &GroebnerBasis) -> Result<HilbertSeries, GbError> {
    let module: &FreeModule = gb.module();
    if !gb.elements().iter().all(|v| v.is_homogeneous(module)) {
        return Err(GbError::NotHomogeneous);
    }
    let n = module.nvars as u32;
    let lts = gb.leading_terms();
    let mut num = IntPoly::zero();
    for (c, &shift) in module.shifts.iter().enumerate() {
        let monos: Vec<Monomial> = lts.iter().filter(|t| t.comp as usize == c).map(|t| t.mono).collect();
        if monos.is_empty() {
            continue;
        }
        // Hilb(I) = (1 - K(S/I)) / (1-x)^n, shifted
        let part = IntPoly::one().sub(&monomial_quotient_numerator(&monos));
        num = num.add(&shift_by(&part, shift));
    }
    Ok(HilbertSeries::new(num, n))
}

/// Multiplies by `x^shift`; negative shifts are not supported for series.
fn shift_by(p: &IntPoly, shift: i32) -> IntPoly {
    assert!(shift >= 0, "negative degree shift in Hilbert series");
    p.shift(shift as usize)
}

/// Hilbert series of the free module itself.
pub(crate) fn free_module_series(module: &FreeModule) -> HilbertSeries {
    let num = module.shifts.iter().fold(IntPoly::zero(), |acc, &s| acc.add(&shift_by(&IntPoly::one(), s)));
    HilbertSeries::new(num, module.nvars as u32)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{buchberger, Vector};
    use crate::poly::Polynomial;

    #[test]
    fn quotient_numerators() {
        let m = |e: &[u32]| Monomial::from_exps(e);
        // S/(x^2, y^2): (1-x^2)^2
        assert_eq!(monomial_quotient_numerator(&[m(&[2, 0]), m(&[0, 2])]).coeffs(), &[1, 0, -2, 0, 1]);
        // S/(xy): 1 - x^2
        assert_eq!(monomial_quotient_numerator(&[m(&[1, 1])]).coeffs(), &[1, 0, -1]);
        // S/(x^2, xy): 1 - 2x^2 + x^3
        assert_eq!(monomial_quotient_numerator(&[m(&[2, 0]), m(&[1, 1])]).coeffs(), &[1, 0, -2, 1]);
    }

    #[test]
    fn free_module_and_boolean_derivations() {
        let module = FreeModule::unshifted(3, 3);
        let gens: Vec<Vector> = (0..3).map(|i| Vector::from_poly_at(&Polynomial::one(3), i)).collect();
        let h = hilbert_series_submodule(&buchberger(&module, &gens)).unwrap();
        assert_eq!((h.numerator().coeffs(), h.denom_exp()), (&[3][..], 3));
        assert_eq!(free_module_series(&module), h);

        let module = FreeModule::unshifted(2, 2);
        let gens = vec![
            Vector::from_poly_at(&Polynomial::var(2, 0), 0),
            Vector::from_poly_at(&Polynomial::var(2, 1), 1),
        ];
        let h = hilbert_series_submodule(&buchberger(&module, &gens)).unwrap();
        assert_eq!((h.numerator().coeffs(), h.denom_exp()), (&[0, 2][..], 2));
    }
}
