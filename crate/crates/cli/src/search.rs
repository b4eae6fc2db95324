//! Deterministic search for counterexamples to the palindromicity,
//! quantum-factorization and socle-degree conjectures.
//!
//! Nothing found here is ever treated as proof; a violation is written out
//! as a reproducible arrangement file.

use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use starr_core::arr::Arrangement;
use starr_core::logder::{freeness_of, log_derivations};
use starr_core::scalar::Scalar;
use starr_core::stalg::{analyze, default_eta, st_algebra_with};

use crate::commands::CliError;
use crate::corpus;
use crate::file::ArrangementFile;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generator {
    /// `count` arrangements with integer coefficients in `[-bound, bound]`.
    Random { dim: usize, min_size: usize, max_size: usize, bound: i64 },
    /// Sub-arrangements of a corpus arrangement.
    Sub { parent: String, min_size: usize, max_size: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Conjecture {
    All,
    Factorization,
    Palindromic,
    SocleDegree,
}

impl std::str::FromStr for Conjecture {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "all" => Ok(Conjecture::All),
            "factorization" => Ok(Conjecture::Factorization),
            "palindromic" => Ok(Conjecture::Palindromic),
            "socle-degree" => Ok(Conjecture::SocleDegree),
            _ => Err(format!("unknown conjecture {s:?}")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub generator: Generator,
    pub count: usize,
    pub seed: u64,
    pub conjecture: Conjecture,
    /// The degree of `eta`.
    pub degree: u32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchRecord {
    pub index: usize,
    pub hyperplanes: usize,
    pub arrangement: String,
    pub free: Option<bool>,
    pub exponents: Option<Vec<i32>>,
    pub hilbert_vector: Option<Vec<i64>>,
    pub palindromic: Option<bool>,
    pub quantum_factors: Option<Vec<u32>>,
    pub socle_dimension: Option<usize>,
    pub top_degree: Option<usize>,
    pub socle_degree_holds: Option<bool>,
    pub violations: Vec<String>,
    pub error: Option<String>,
    #[serde(skip)]
    pub file: ArrangementFile,
}

/// The arrangements a configuration enumerates, in order.
pub fn generate(cfg: &SearchConfig) -> Result<Vec<Arrangement>, CliError> {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    match &cfg.generator {
        Generator::Random { dim, min_size, max_size, bound } => {
            if *dim == 0 || min_size > max_size || *bound < 1 {
                return Err(CliError::Usage("need dim >= 1, min-size <= max-size, bound >= 1".into()));
            }
            let mut out = Vec::with_capacity(cfg.count);
            while out.len() < cfg.count {
                let size = rng.gen_range(*min_size..=*max_size);
                let forms: Vec<Vec<Scalar>> = (0..size)
                    .map(|_| loop {
                        let v: Vec<i64> = (0..*dim).map(|_| rng.gen_range(-bound..=*bound)).collect();
                        if v.iter().any(|&c| c != 0) {
                            break v.into_iter().map(Scalar::from_int).collect();
                        }
                    })
                    .collect();
                out.push(Arrangement::new(Default::default(), *dim, &forms).map_err(|e| CliError::Compute(e.to_string()))?);
            }
            Ok(out)
        }
        Generator::Sub { parent, min_size, max_size } => {
            let parent = corpus::lookup(parent).map_err(|e| CliError::Usage(e.to_string()))?.arrangement;
            let n = parent.len();
            if n > 16 {
                return Err(CliError::Usage("parent arrangements are limited to 16 hyperplanes".into()));
            }
            let mut masks: Vec<u32> = (0u32..1 << n)
                .filter(|m| (*min_size..=*max_size).contains(&(m.count_ones() as usize)))
                .collect();
            masks.shuffle(&mut rng);
            masks.truncate(cfg.count);
            Ok(masks
                .into_iter()
                .map(|m| {
                    let forms: Vec<Vec<Scalar>> =
                        (0..n).filter(|i| m >> i & 1 == 1).map(|i| parent.hyperplanes()[i].coeffs().to_vec()).collect();
                    Arrangement::with_names(parent.field().clone(), parent.names().to_vec(), &forms).expect("sub-arrangement")
                })
                .collect())
        }
    }
}

fn evaluate(index: usize, a: &Arrangement, cfg: &SearchConfig) -> SearchRecord {
    let mut rec = SearchRecord {
        index,
        hyperplanes: a.len(),
        arrangement: a.to_string(),
        free: None,
        exponents: None,
        hilbert_vector: None,
        palindromic: None,
        quantum_factors: None,
        socle_dimension: None,
        top_degree: None,
        socle_degree_holds: None,
        violations: Vec::new(),
        error: None,
        file: ArrangementFile::from_arrangement(a, None),
    };
    let outcome = (|| -> Result<(), String> {
        let d1 = log_derivations(a, 1).map_err(|e| e.to_string())?;
        let f = freeness_of(a, &d1);
        rec.free = Some(f.free);
        rec.exponents = f.free.then(|| f.exponents.clone());
        let eta = default_eta(a, cfg.degree).map_err(|e| e.to_string())?;
        rec.file = ArrangementFile::from_arrangement(a, Some(&eta.eta));
        let st = st_algebra_with(a, &eta, &d1).map_err(|e| e.to_string())?;
        let an = analyze(&st).map_err(|e| e.to_string())?;
        rec.hilbert_vector = Some(an.hilbert_vector.clone());
        rec.palindromic = Some(an.palindromic);
        rec.quantum_factors = an.quantum_factors.clone();
        rec.socle_dimension = Some(an.socle_degrees.len());
        rec.top_degree = an.top_degree;
        rec.socle_degree_holds = Some(an.socle_degree.holds);
        let want = |c: Conjecture| cfg.conjecture == Conjecture::All || cfg.conjecture == c;
        if want(Conjecture::Factorization) && f.free != an.quantum_factors.is_some() {
            rec.violations.push("free-iff-quantum-factorization".into());
        }
        if want(Conjecture::Palindromic) && f.free != an.palindromic {
            rec.violations.push("free-iff-palindromic".into());
        }
        if want(Conjecture::SocleDegree) && !an.socle_degree.holds {
            rec.violations.push("socle-degree".into());
        }
        if an.complete_intersection != f.free {
            rec.violations.push("complete-intersection-iff-free".into());
        }
        Ok(())
    })();
    rec.error = outcome.err();
    rec
}

/// Runs the search; records come back in enumeration order regardless of
/// how the work was scheduled.
pub fn conjecture_search(cfg: &SearchConfig) -> Result<Vec<SearchRecord>, CliError> {
    let arrangements = generate(cfg)?;
    Ok(arrangements.par_iter().enumerate().map(|(i, a)| evaluate(i, a, cfg)).collect())
}

/// One JSON object per line.
pub fn render_log(records: &[SearchRecord]) -> String {
    records.iter().map(|r| serde_json::to_string(r).expect("serializable") + "\n").collect()
}

/// Writes `counterexample-<index>.json` for every record with a violation
/// and returns the paths.
pub fn write_counterexamples(records: &[SearchRecord], dir: &Path) -> Result<Vec<String>, CliError> {
    let mut written = Vec::new();
    for r in records.iter().filter(|r| !r.violations.is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::Usage(format!("{}: {e}", dir.display())))?;
        let path = dir.join(format!("counterexample-{}.json", r.index));
        let body = serde_json::json!({
            "violations": r.violations,
            "hilbert_vector": r.hilbert_vector,
            "free": r.free,
            "arrangement": r.file,
        });
        std::fs::write(&path, serde_json::to_string_pretty(&body).expect("serializable") + "\n")
            .map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))?;
        written.push(path.display().to_string());
    }
    Ok(written)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(seed: u64) -> SearchConfig {
        SearchConfig {
            generator: Generator::Random { dim: 3, min_size: 3, max_size: 5, bound: 2 },
            count: 6,
            seed,
            conjecture: Conjecture::All,
            degree: 2,
        }
    }

    #[test]
    fn same_seed_same_log() {
        let a = render_log(&conjecture_search(&cfg(7)).unwrap());
        let b = render_log(&conjecture_search(&cfg(7)).unwrap());
        assert_eq!(a, b);
        assert_eq!(a.lines().count(), 6);
    }

    #[test]
    fn sub_arrangements_of_the_plane_example() {
        let c = SearchConfig {
            generator: Generator::Sub { parent: "ex4".into(), min_size: 4, max_size: 4 },
            count: 10,
            seed: 1,
            conjecture: Conjecture::All,
            degree: 2,
        };
        let recs = conjecture_search(&c).unwrap();
        assert_eq!(recs.len(), 1);
        assert_eq!(recs[0].free, Some(false));
        assert_eq!(recs[0].palindromic, Some(false));
        assert!(recs[0].violations.is_empty());
    }
}
