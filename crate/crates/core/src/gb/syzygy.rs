//! Kernels of graded maps, syzygies, minimal generators and minimal free
//! resolutions.

use super::hilbert::free_module_series;
use super::{buchberger, Buchberger, FreeModule, GbError, Vector};
use crate::poly::{HilbertSeries, Polynomial};

/// Kernel of the map `S^n -> (S/(m_1)) + ... + (S/(m_r))` given by the
/// `r x n` matrix `rows`, where `target_mods[k]` is the modulus of row `k`
/// (`None` for no modulus). `source` fixes the grading of `S^n`; the map must
/// be homogeneous.
///
/// Computed by elimination: the submodule of `S^(r+n)` generated by the
/// columns stacked over unit vectors, together with `m_k e_k`, is completed
/// in position-over-term order; basis elements with no target part span the
/// kernel.
pub fn kernel_of_map(
    source: &FreeModule,
    rows: &[Vec<Polynomial>],
    target_mods: &[Option<Polynomial>],
) -> Result<Vec<Vector>, GbError> {
    let n = source.rank();
    let r = rows.len();
    if target_mods.len() != r || rows.iter().any(|row| row.len() != n) {
        return Err(GbError::Dimension(format!("{r} rows, {} moduli, {n} columns", target_mods.len())));
    }
    let nvars = source.nvars;
    // target shifts from any nonzero entry of each row
    let mut target_shifts = Vec::with_capacity(r);
    for row in rows {
        let mut shift = None;
        for (j, entry) in row.iter().enumerate() {
            if entry.is_zero() {
                continue;
            }
            if !entry.is_homogeneous() {
                return Err(GbError::NotHomogeneous);
            }
            let s = source.shifts[j] - entry.degree().unwrap() as i32;
            match shift {
                None => shift = Some(s),
                Some(t) if t != s => return Err(GbError::NotHomogeneous),
                _ => {}
            }
        }
        target_shifts.push(shift.unwrap_or(0));
    }
    let mut shifts = target_shifts;
    shifts.extend_from_slice(&source.shifts);
    let big = FreeModule::new(nvars, shifts);

    let mut gens = Vec::with_capacity(n + r);
    for j in 0..n {
        let col: Vec<Polynomial> = rows.iter().map(|row| row[j].clone()).collect();
        let unit = Vector::from_poly_at(&Polynomial::one(nvars), j);
        gens.push(Vector::from_components(&col).concat(&unit, r));
    }
    for (k, m) in target_mods.iter().enumerate() {
        if let Some(m) = m {
            if !m.is_homogeneous() {
                return Err(GbError::NotHomogeneous);
            }
            gens.push(Vector::from_poly_at(m, k));
        }
    }
    let gb = buchberger(&big, &gens);
    Ok(gb
        .elements()
        .iter()
        .filter(|v| v.leading_term().is_some_and(|t| t.comp as usize >= r))
        .map(|v| v.project_from(r))
        .collect())
}

/// Generators of the syzygy module of `gens` inside `module`; the result lives
/// in `S^k` graded by the degrees of the generators.
pub fn syzygies(module: &FreeModule, gens: &[Vector]) -> Result<(FreeModule, Vec<Vector>), GbError> {
    let mut shifts = Vec::with_capacity(gens.len());
    for g in gens {
        if !g.is_homogeneous(module) {
            return Err(GbError::NotHomogeneous);
        }
        shifts.push(g.degree(module).unwrap_or(0));
    }
    let source = FreeModule::new(module.nvars, shifts);
    let rank = module.rank();
    let rows: Vec<Vec<Polynomial>> =
        (0..rank).map(|c| gens.iter().map(|g| g.component(c, module.nvars)).collect()).collect();
    // drop identically zero rows so target shifts stay well defined
    let rows: Vec<Vec<Polynomial>> = rows.into_iter().filter(|row| row.iter().any(|p| !p.is_zero())).collect();
    let mods = vec![None; rows.len()];
    let kernel = kernel_of_map(&source, &rows, &mods)?;
    Ok((source, kernel))
}

/// A minimal generating subset of a homogeneous generating set: generators
/// are visited by increasing degree and dropped when they lie in the
/// submodule generated by those already kept.
pub fn minimal_generators(module: &FreeModule, gens: &[Vector]) -> Result<Vec<Vector>, GbError> {
    if !gens.iter().all(|g| g.is_homogeneous(module)) {
        return Err(GbError::NotHomogeneous);
    }
    let mut order: Vec<&Vector> = gens.iter().filter(|g| !g.is_zero()).collect();
    order.sort_by_key(|g| g.degree(module));
    let mut kept: Vec<Vector> = Vec::new();
    let mut builder = Buchberger::new(module.clone());
    for g in order {
        builder.complete();
        let reduced = super::reduce(g, &builder.basis);
        if !reduced.is_zero() {
            kept.push(g.clone());
            builder.add(g);
        }
    }
    Ok(kept)
}

/// Generator degrees of each free module in a minimal free resolution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreeResolution {
    pub nvars: usize,
    /// `levels[i]` lists the degrees of the basis of `F_i`.
    pub levels: Vec<Vec<i32>>,
}

impl FreeResolution {
    /// Computes a minimal free resolution of the submodule generated by
    /// `gens` by iterating syzygies and minimalizing each stage.
    pub fn of_submodule(module: &FreeModule, gens: &[Vector]) -> Result<Self, GbError> {
        let mut levels = Vec::new();
        let mut cur_module = module.clone();
        let mut cur = minimal_generators(module, gens)?;
        while !cur.is_empty() {
            let (source, syz) = syzygies(&cur_module, &cur)?;
            levels.push(source.shifts.clone());
            cur = minimal_generators(&source, &syz)?;
            cur_module = source;
            if levels.len() > module.nvars + 1 {
                unreachable!("resolution longer than the number of variables");
            }
        }
        Ok(FreeResolution { nvars: module.nvars, levels })
    }

    /// Length of the resolution, i.e. the projective dimension when minimal.
    pub fn length(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// Alternating sum of the Hilbert series of the free modules.
    pub fn euler_series(&self) -> HilbertSeries {
        let mut acc = HilbertSeries::new(Default::default(), self.nvars as u32);
        for (i, degs) in self.levels.iter().enumerate() {
            let h = free_module_series(&FreeModule::new(self.nvars, degs.clone()));
            acc = acc.add(&if i % 2 == 0 { h } else { h.negate() });
        }
        acc
    }
}

/// Projective dimension of the submodule generated by `gens`.
pub fn projective_dimension(module: &FreeModule, gens: &[Vector]) -> Result<usize, GbError> {
    Ok(FreeResolution::of_submodule(module, gens)?.length())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gb::{buchberger, hilbert_series_submodule};

    fn var(n: usize, i: usize) -> Polynomial {
        Polynomial::var(n, i)
    }

    #[test]
    fn kernel_of_quotient_map() {
        // S -> S/(x) in one variable: kernel generated by x
        let source = FreeModule::unshifted(1, 1);
        let k = kernel_of_map(&source, &[vec![Polynomial::one(1)]], &[Some(var(1, 0))]).unwrap();
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].to_poly(1), var(1, 0));
    }

    #[test]
    fn koszul_resolution() {
        // the maximal ideal (x, y, z) as a submodule of S has pd 2;
        // S/(x, y, z) would have pd 3
        let n = 3;
        let gens: Vec<Vector> = (0..n).map(|i| Vector::from_poly(&var(n, i))).collect();
        let module = FreeModule::ring(n);
        let res = FreeResolution::of_submodule(&module, &gens).unwrap();
        assert_eq!(res.levels, vec![vec![1, 1, 1], vec![2, 2, 2], vec![3]]);
        assert_eq!(res.length() + 1, 3);
        let h = hilbert_series_submodule(&buchberger(&module, &gens)).unwrap();
        assert_eq!(res.euler_series(), h);
    }

    #[test]
    fn free_module_has_pd_zero() {
        let module = FreeModule::unshifted(2, 2);
        let gens = vec![Vector::from_poly_at(&var(2, 0), 0), Vector::from_poly_at(&var(2, 1), 1)];
        assert_eq!(projective_dimension(&module, &gens).unwrap(), 0);
    }

    #[test]
    fn redundant_generators_are_dropped() {
        let n = 2;
        let module = FreeModule::unshifted(n, 2);
        let x = var(n, 0);
        let y = var(n, 1);
        let gens = vec![
            Vector::from_poly_at(&x, 0),
            Vector::from_poly_at(&y, 1),
            Vector::from_poly_at(&(&x * &y), 1),
            Vector::from_components(&[&x * &y, &y * &y]),
        ];
        assert_eq!(minimal_generators(&module, &gens).unwrap().len(), 2);
    }
}
