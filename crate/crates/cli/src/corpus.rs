//! Built-in arrangements, addressable by name.
//!
//! | name | arrangement |
//! |---|---|
//! | `ex4` | `xyz(x+y+z)` |
//! | `notsplit` | `x(x^2-y^2)(x^2-2y^2)(y-z)z` over `Q(sqrt 2)` |
//! | `three-lines` | `xy(x+y)` |
//! | `x3` | `xyz(x+y)(x+z)(y+z)` |
//! | `pencil` | `xy(x+y)(x-y)z` |
//! | `a3-essential` | `xyz(x-y)(x-z)(y-z)` |
//! | `boolean-<l>` | coordinate hyperplanes in `K^l` |
//! | `braid-<n>` | `x_i - x_j` in `K^n` |
//! | `generic-<l>-<k>` | `k` hyperplanes in general position in `K^l` |
//! | `weyl-<T><r>` | Weyl arrangement of type `T` and rank `r` |
//! | `ideal-<T><r>-<k>` | `k`-th lower ideal (by size, then roots) |
//! | `inversion-<w>` | inversion arrangement of a permutation |
//! | `b3-minus-<k>` | `weyl-B3` without its `k`-th hyperplane |

use thiserror::Error;

use starr_core::arr::Arrangement;
use starr_core::coxeter::{inversion_arrangement, CoxeterError, Permutation, RootSystem, RootType};
use starr_core::poly::Polynomial;
use starr_core::scalar::{Field, Scalar};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CorpusError {
    #[error("unknown example {0:?}")]
    Unknown(String),
    #[error("example {0:?}: {1}")]
    Coxeter(String, CoxeterError),
}

#[derive(Debug, Clone)]
pub struct Example {
    pub name: String,
    pub arrangement: Arrangement,
}

fn ints(dim: usize, forms: &[&[i64]]) -> Arrangement {
    Arrangement::from_int_forms(dim, forms).expect("corpus forms are valid")
}

fn generic(dim: usize, k: usize) -> Arrangement {
    // rows (1, t, ..., t^(l-1)) of a Vandermonde matrix: any l are independent
    let rows: Vec<Vec<i64>> = (0..k as i64).map(|t| (0..dim as u32).map(|e| t.pow(e)).collect()).collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    ints(dim, &refs)
}

/// `x(x^2-y^2)(x^2-2y^2)(y-z)z` over `Q(r)` with `r^2 = 2`.
pub fn notsplit() -> Arrangement {
    let field = Field::sqrt2("r");
    let r = field.generator().expect("extension");
    let i = Scalar::from_int;
    let forms = vec![
        vec![i(1), i(0), i(0)],
        vec![i(1), i(-1), i(0)],
        vec![i(1), i(1), i(0)],
        vec![i(1), -&r, i(0)],
        vec![i(1), r, i(0)],
        vec![i(0), i(1), i(-1)],
        vec![i(0), i(0), i(1)],
    ];
    Arrangement::new(field, 3, &forms).expect("valid forms")
}

/// The four generators of the ideal printed for `notsplit`.
pub fn notsplit_ideal_generators() -> Vec<Polynomial> {
    let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    ["x^2+y^2+z^2", "z^3-y*z^2", "y^6-y^5*z", "y^6+3*y^4*z^2"]
        .iter()
        .map(|s| starr_core::poly::parse_polynomial(s, &names, &Field::Rational).expect("valid"))
        .collect()
}

/// A presentation of the cohomology of the Schubert variety for `w = 4123`:
/// `x1+x2+x3+x4, (x1+x2+x3)^2, x2x3+x1x3, x1x2`.
pub fn schubert_4123() -> Vec<Polynomial> {
    let x = |i: usize| Polynomial::var(4, i);
    let s3 = &(&x(0) + &x(1)) + &x(2);
    vec![&s3 + &x(3), &s3 * &s3, &(&x(1) * &x(2)) + &(&x(0) * &x(2)), &x(0) * &x(1)]
}

fn parse_type_rank(s: &str) -> Option<(RootType, usize)> {
    let (t, r) = s.split_at(1);
    Some((t.parse().ok()?, r.parse().ok()?))
}

/// Resolves a corpus name.
pub fn lookup(name: &str) -> Result<Example, CorpusError> {
    let unknown = || CorpusError::Unknown(name.to_string());
    let cox = |e| CorpusError::Coxeter(name.to_string(), e);
    let arrangement = match name {
        "ex4" => ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]),
        "notsplit" => notsplit(),
        "three-lines" => ints(2, &[&[1, 0], &[0, 1], &[1, 1]]),
        "x3" => ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[1, 0, 1], &[0, 1, 1]]),
        "pencil" => ints(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0], &[1, -1, 0], &[0, 0, 1]]),
        "a3-essential" => ints(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, -1, 0], &[1, 0, -1], &[0, 1, -1]]),
        _ => {
            let (kind, rest) = name.split_once('-').ok_or_else(unknown)?;
            match kind {
                "boolean" => {
                    let l: usize = rest.parse().map_err(|_| unknown())?;
                    if !(1..=8).contains(&l) {
                        return Err(unknown());
                    }
                    let rows: Vec<Vec<i64>> = (0..l).map(|i| (0..l).map(|j| (i == j) as i64).collect()).collect();
                    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
                    ints(l, &refs)
                }
                "braid" => {
                    let n: usize = rest.parse().map_err(|_| unknown())?;
                    if !(2..=6).contains(&n) {
                        return Err(unknown());
                    }
                    inversion_arrangement(&Permutation::longest(n))
                }
                "generic" => {
                    let (l, k) = rest.split_once('-').ok_or_else(unknown)?;
                    let (l, k): (usize, usize) = (l.parse().map_err(|_| unknown())?, k.parse().map_err(|_| unknown())?);
                    if !(1..=6).contains(&l) || k > 12 {
                        return Err(unknown());
                    }
                    generic(l, k)
                }
                "weyl" => {
                    let (t, r) = parse_type_rank(rest).ok_or_else(unknown)?;
                    RootSystem::new(t, r).map_err(cox)?.weyl_arrangement()
                }
                "ideal" => {
                    let (tr, k) = rest.split_once('-').ok_or_else(unknown)?;
                    let (t, r) = parse_type_rank(tr).ok_or_else(unknown)?;
                    let k: usize = k.parse().map_err(|_| unknown())?;
                    let rs = RootSystem::new(t, r).map_err(cox)?;
                    let ideal = rs.lower_ideals().into_iter().nth(k).ok_or_else(unknown)?;
                    rs.ideal_arrangement(&ideal)
                }
                "inversion" => {
                    let w: Permutation = rest.parse().map_err(cox)?;
                    if w.len() > 6 {
                        return Err(unknown());
                    }
                    inversion_arrangement(&w)
                }
                "b3" => {
                    let k: usize = rest.strip_prefix("minus-").ok_or_else(unknown)?.parse().map_err(|_| unknown())?;
                    let b3 = RootSystem::new(RootType::B, 3).map_err(cox)?.weyl_arrangement();
                    b3.delete(k).map_err(|_| unknown())?
                }
                _ => return Err(unknown()),
            }
        }
    };
    Ok(Example { name: name.to_string(), arrangement })
}

fn named(names: impl IntoIterator<Item = String>) -> Vec<Example> {
    names.into_iter().map(|n| lookup(&n).expect("corpus names resolve")).collect()
}

fn ideal_names(t: RootType, r: usize) -> Vec<String> {
    let count = RootSystem::new(t, r).expect("supported").lower_ideals().len();
    (0..count).map(|k| format!("ideal-{t}{r}-{k}")).collect()
}

/// Every lower ideal of `A2`, `B2` and `A3`.
pub fn ideal_corpus() -> Vec<Example> {
    let mut names = ideal_names(RootType::A, 2);
    names.extend(ideal_names(RootType::B, 2));
    names.extend(ideal_names(RootType::A, 3));
    named(names)
}

/// Inversion arrangements of all of `S_4`.
pub fn inversion_corpus() -> Vec<Example> {
    named(Permutation::all(4).into_iter().map(|w| format!("inversion-{w}")))
}

/// Arrangements known to be free.
pub fn free_corpus() -> Vec<Example> {
    let mut names: Vec<String> = (1..=4).map(|l| format!("boolean-{l}")).collect();
    names.extend(["three-lines", "braid-3", "weyl-A2", "weyl-B2", "weyl-A3"].map(String::from));
    let mut out = named(names);
    out.extend(ideal_corpus());
    out
}

/// A mixed free / non-free collection in dimension 3.
pub fn sweep_l3() -> Vec<Example> {
    let mut names: Vec<String> = [
        "ex4",
        "notsplit",
        "boolean-3",
        "braid-3",
        "weyl-B3",
        "a3-essential",
        "x3",
        "pencil",
        "generic-3-5",
        "generic-3-6",
        "generic-3-7",
    ]
    .map(String::from)
    .to_vec();
    names.extend((0..9).map(|k| format!("b3-minus-{k}")));
    names.extend((1..5).map(|k| format!("ideal-A2-{k}")));
    names.extend(["inversion-231", "inversion-312"].map(String::from));
    named(names)
}

/// The corpus run by `verify --suite all`, deduplicated by name.
pub fn shipped() -> Vec<Example> {
    let mut out = Vec::new();
    let mut push = |ex: Example| {
        if !out.iter().any(|e: &Example| e.name == ex.name) {
            out.push(ex);
        }
    };
    for ex in free_corpus()
        .into_iter()
        .chain(sweep_l3())
        .chain(inversion_corpus())
        .chain(named(["weyl-B3", "weyl-C2", "braid-4", "boolean-5"].map(String::from)))
    {
        push(ex);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_resolve() {
        assert_eq!(lookup("ex4").unwrap().arrangement.len(), 4);
        assert_eq!(lookup("notsplit").unwrap().arrangement.len(), 7);
        assert_eq!(lookup("boolean-3").unwrap().arrangement.len(), 3);
        assert_eq!(lookup("braid-4").unwrap().arrangement.len(), 6);
        assert_eq!(lookup("weyl-B2").unwrap().arrangement.len(), 4);
        assert_eq!(lookup("inversion-4123").unwrap().arrangement.len(), 3);
        assert_eq!(lookup("generic-3-5").unwrap().arrangement.len(), 5);
        assert_eq!(lookup("b3-minus-0").unwrap().arrangement.len(), 8);
        assert_eq!(lookup("ideal-A3-13").unwrap().arrangement.len(), 6);
        assert!(lookup("ideal-A3-14").is_err());
        assert!(lookup("weyl-E8").is_err());
        assert!(lookup("nonsense").is_err());
    }

    #[test]
    fn corpus_sizes() {
        assert_eq!(ideal_corpus().len(), 5 + 6 + 14);
        assert!(sweep_l3().len() >= 20);
        assert!(sweep_l3().iter().all(|e| e.arrangement.dim() == 3));
    }
}
