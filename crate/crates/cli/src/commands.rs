//! The computations behind each subcommand, returning [`Report`]s.

use std::path::Path;

use serde_json::json;
use thiserror::Error;

use starr_core::arr::Arrangement;
use starr_core::coxeter::{bruhat_interval_size, inversion_arrangement, CoxeterError, Permutation, RootSystem, RootType};
use starr_core::logder::{
    all_log_derivations, free_solomon_terao, freeness_of, is_tame, log_derivations, solomon_terao_from, DerModule,
    Freeness,
};
use starr_core::poly::{parse_polynomial, IntPoly, Polynomial};
use starr_core::stalg::{
    analyze, default_eta, eta_candidates, exists_nilpotent_linear, socle_witness, st_algebra_with, st_macaulay_dual,
    verify_eta, Analysis, EtaSpec, NilpotentLinear, Slp, StAlgebra,
};

use crate::corpus::{self, Example};
use crate::file::{ArrangementFile, FileError};
use crate::report::{Check, Report};

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad arguments or input; exit code 2.
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    File(#[from] FileError),
    /// A computation failed in a way that signals an internal inconsistency;
    /// exit code 1.
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::File(_) => 2,
            CliError::Compute(_) => 1,
        }
    }
}

fn compute<E: std::fmt::Display>(e: E) -> CliError {
    CliError::Compute(e.to_string())
}

/// An arrangement to work on, with an optional `eta` from its file.
#[derive(Debug, Clone)]
pub struct Input {
    pub label: String,
    pub arrangement: Arrangement,
    pub eta: Option<Polynomial>,
}

impl From<Example> for Input {
    fn from(ex: Example) -> Self {
        Input { label: ex.name, arrangement: ex.arrangement, eta: None }
    }
}

pub fn load_input(example: Option<&str>, file: Option<&Path>) -> Result<Input, CliError> {
    match (example, file) {
        (Some(name), None) => Ok(corpus::lookup(name).map_err(|e| CliError::Usage(e.to_string()))?.into()),
        (None, Some(path)) => {
            let (arrangement, eta) = ArrangementFile::read(path)?.to_arrangement()?;
            Ok(Input { label: path.display().to_string(), arrangement, eta })
        }
        _ => Err(CliError::Usage("give exactly one of --example NAME or an arrangement file".into())),
    }
}

/// `1 + 7t + 15t^2` style rendering.
pub fn int_poly_string(p: &IntPoly, var: &str) -> String {
    let mut parts = Vec::new();
    for (k, &c) in p.coeffs().iter().enumerate() {
        if c == 0 {
            continue;
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        let body = match (c.abs(), mono.is_empty()) {
            (a, true) => a.to_string(),
            (1, false) => mono,
            (a, false) => format!("{a}{mono}"),
        };
        parts.push((c < 0, body));
    }
    if parts.is_empty() {
        return "0".into();
    }
    let mut s = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => s.push('-'),
            (0, false) => {}
            (_, true) => s.push_str(" - "),
            (_, false) => s.push_str(" + "),
        }
        s.push_str(&body);
    }
    s
}

fn poly_string(p: &Polynomial, a: &Arrangement) -> String {
    p.display_with(a.names()).to_string()
}

fn describe(report: &mut Report, a: &Arrangement) {
    report.set("field", a.field().name());
    report.set("dimension", a.dim());
    report.set("hyperplanes", a.len());
    report.set("defining_polynomial", a.to_string());
}

pub fn lattice_report(input: &Input) -> Report {
    let a = &input.arrangement;
    let mut r = Report::new("lattice", &input.label);
    describe(&mut r, a);
    let l = a.lattice();
    let by_codim: Vec<usize> = (0..=l.rank()).map(|c| l.of_codim(c).count()).collect();
    r.set("rank", l.rank());
    r.set("flats_by_codimension", by_codim);
    let chi = l.characteristic_polynomial();
    let pi = l.poincare_polynomial();
    r.set("characteristic_polynomial", int_poly_string(&chi, "t"));
    r.set("poincare_polynomial", int_poly_string(&pi, "t"));
    r.set("poincare_coefficients", pi.coeffs());
    if !a.is_empty() {
        r.check("one-plus-t-divides-poincare", pi.eval(-1) == 0, format!("pi(-1) = {}", pi.eval(-1)));
    }
    r
}

fn freeness_results(r: &mut Report, a: &Arrangement, d1: &DerModule, f: &Freeness) {
    r.set("free", f.free);
    r.set("minimal_generator_degrees", &d1.degrees);
    if f.free {
        r.set("exponents", &f.exponents);
    }
    let gens: Vec<Vec<String>> =
        (0..d1.generators.len()).map(|i| d1.generator_components(i).iter().map(|p| poly_string(p, a)).collect()).collect();
    r.set("generators", gens);
}

fn terao_product(exponents: &[i32]) -> IntPoly {
    exponents.iter().fold(IntPoly::one(), |acc, &d| acc.mul(&IntPoly::new(vec![1, d as i64])))
}

pub fn free_report(input: &Input) -> Result<Report, CliError> {
    let a = &input.arrangement;
    let mut r = Report::new("free", &input.label);
    describe(&mut r, a);
    let d1 = log_derivations(a, 1).map_err(compute)?;
    let f = freeness_of(a, &d1);
    freeness_results(&mut r, a, &d1, &f);
    let pi = a.poincare_polynomial();
    r.set("poincare_polynomial", int_poly_string(&pi, "t"));
    if f.free {
        let prod = terao_product(&f.exponents);
        r.check("terao-factorization", prod == pi, format!("prod(1 + d_i t) = {}", int_poly_string(&prod, "t")));
    } else {
        r.set(
            "certificate",
            format!("{} minimal generators of degrees {:?} (dimension {})", d1.generators.len(), d1.degrees, a.dim()),
        );
    }
    Ok(r)
}

/// `Psi` with its three identities as checks.
fn psi_checks(a: &Arrangement, mods: &[DerModule]) -> (Option<starr_core::poly::BivariatePoly>, Vec<Check>) {
    let mut checks = Vec::new();
    let psi = match solomon_terao_from(mods) {
        Ok(p) => p,
        Err(e) => {
            checks.push(Check { name: "psi-polynomial".into(), pass: false, detail: e.to_string() });
            return (None, checks);
        }
    };
    checks.push(Check { name: "psi-polynomial".into(), pass: true, detail: String::new() });
    let pi = a.poincare_polynomial();
    checks.push(Check {
        name: "psi-at-x-one-is-poincare".into(),
        pass: psi.at_x_one() == pi,
        detail: format!("Psi(1,t) = {}", int_poly_string(&psi.at_x_one(), "t")),
    });
    if !a.is_empty() {
        let r = psi.at_t_minus_x();
        checks.push(Check {
            name: "psi-vanishes-at-t-minus-x".into(),
            pass: r.is_zero(),
            detail: format!("Psi(x,-x) = {}", int_poly_string(&r, "x")),
        });
    }
    (Some(psi), checks)
}

pub fn psi_report(input: &Input) -> Result<Report, CliError> {
    let a = &input.arrangement;
    let mut r = Report::new("psi", &input.label);
    describe(&mut r, a);
    let mods = all_log_derivations(a).map_err(compute)?;
    let numerators: Vec<Vec<i64>> = mods.iter().map(|m| m.hilbert.numerator_over(a.dim() as u32).coeffs().to_vec()).collect();
    r.set("hilbert_numerators", numerators);
    let (psi, checks) = psi_checks(a, &mods);
    if let Some(psi) = &psi {
        r.set("psi", psi.to_expression());
        r.set("psi_grid", psi.grid());
        let f = freeness_of(a, &mods[1]);
        if f.free {
            let expected = free_solomon_terao(&f.exponents);
            r.check("psi-free-product", *psi == expected, format!("exponents {:?}", f.exponents));
        }
    }
    r.extend_checks(checks);
    Ok(r)
}

/// Which `eta` to use: `None` takes the file's `eta` or the default.
pub fn resolve_eta(input: &Input, eta: Option<&str>, degree: u32) -> Result<EtaSpec, CliError> {
    let a = &input.arrangement;
    let chosen = match eta {
        Some("default") => None,
        Some(text) => Some(parse_polynomial(text, a.names(), a.field()).map_err(|e| CliError::Usage(format!("--eta: {e}")))?),
        None => input.eta.clone(),
    };
    match chosen {
        Some(p) => verify_eta(a, &p).map_err(|e| CliError::Usage(format!("--eta: {e}"))),
        None => default_eta(a, degree).map_err(compute),
    }
}

fn slp_string(s: &Slp, a: &Arrangement) -> String {
    match s {
        Slp::Holds(g) => format!("holds (g = {})", poly_string(g, a)),
        Slp::NotEstablished => "not established".into(),
    }
}

fn st_results(r: &mut Report, st: &StAlgebra, an: &Analysis) {
    let a = &st.arrangement;
    r.set("eta", poly_string(&st.eta.eta, a));
    r.set("ideal_generators", st.ideal_generators.iter().map(|g| poly_string(g, a)).collect::<Vec<_>>());
    r.set("hilbert_vector", &an.hilbert_vector);
    r.set("dimension", an.dimension);
    r.set("top_degree", an.top_degree);
    r.set("ideal_generator_degrees", &an.ideal_generator_degrees);
    r.set("complete_intersection", an.complete_intersection);
    r.set("quantum_factors", &an.quantum_factors);
    r.set("recovered_exponents", &an.recovered_exponents);
    r.set("gorenstein", an.gorenstein);
    r.set("socle_degrees", &an.socle_degrees);
    r.set("palindromic", an.palindromic);
    r.set("slp", slp_string(&an.slp, a));
    r.set(
        "socle_degree_conjecture",
        json!({
            "expected_top_degree": an.socle_degree.expected,
            "top_degree": an.socle_degree.top_degree,
            "top_dimension": an.socle_degree.top_dimension,
            "holds": an.socle_degree.holds,
        }),
    );
}

fn st_checks(st: &StAlgebra, an: &Analysis) -> Vec<Check> {
    let w = socle_witness(st);
    let mut checks = vec![
        Check {
            name: "socle-witness".into(),
            pass: w.nonzero && w.in_socle,
            detail: format!("nonzero = {}, in socle = {}", w.nonzero, w.in_socle),
        },
        Check {
            name: "ci-matches-quantum-factorization".into(),
            pass: an.ci_consistent,
            detail: format!("generator degrees {:?}, factors {:?}", an.ideal_generator_degrees, an.quantum_factors),
        },
    ];
    if an.gorenstein {
        let pass = st_macaulay_dual(st).is_ok_and(|d| d.annihilated);
        checks.push(Check { name: "macaulay-dual-annihilated".into(), pass, detail: String::new() });
    }
    checks
}

pub fn st_report(input: &Input, eta: Option<&str>, degree: u32) -> Result<Report, CliError> {
    let a = &input.arrangement;
    let mut r = Report::new("st", &input.label);
    describe(&mut r, a);
    let spec = resolve_eta(input, eta, degree)?;
    r.check("eta-nondegenerate", spec.is_valid(), format!("{} lattice elements checked", spec.flats.len()));
    if !spec.is_valid() {
        r.set("degenerate_flats", spec.failures());
        return Ok(r);
    }
    let d1 = log_derivations(a, 1).map_err(compute)?;
    let st = st_algebra_with(a, &spec, &d1).map_err(compute)?;
    let an = analyze(&st).map_err(compute)?;
    st_results(&mut r, &st, &an);
    let w = socle_witness(&st);
    r.set("socle_witness", poly_string(&w.element, a));
    if an.gorenstein {
        if let Ok(d) = st_macaulay_dual(&st) {
            r.set("macaulay_dual", d.dual.display_with(&dual_names(a.dim())).to_string());
        }
    }
    r.extend_checks(st_checks(&st, &an));
    Ok(r)
}

fn dual_names(n: usize) -> Vec<String> {
    (1..=n).map(|i| format!("y{i}")).collect()
}

/// Everything at once; the checks cover the identities relating `Psi`,
/// `pi`, freeness and the Solomon-Terao algebra.
pub fn full_checks(a: &Arrangement, report: &mut Report, eta: Option<&EtaSpec>) -> Result<(), CliError> {
    let mods = all_log_derivations(a).map_err(compute)?;
    let f = freeness_of(a, &mods[1]);
    let pi = a.poincare_polynomial();
    report.set("poincare_polynomial", int_poly_string(&pi, "t"));
    report.set("free", f.free);
    report.set("minimal_generator_degrees", &mods[1].degrees);
    let (psi, checks) = psi_checks(a, &mods);
    report.extend_checks(checks);
    if let Some(psi) = &psi {
        report.set("psi", psi.to_expression());
    }
    if f.free {
        report.set("exponents", &f.exponents);
        report.check("terao-factorization", terao_product(&f.exponents) == pi, "");
        if let Some(psi) = &psi {
            report.check("psi-free-product", *psi == free_solomon_terao(&f.exponents), "");
        }
    }
    let spec = match eta {
        Some(s) => s.clone(),
        None => default_eta(a, 2).map_err(compute)?,
    };
    report.check("eta-nondegenerate", spec.is_valid(), "");
    if !spec.is_valid() {
        return Ok(());
    }
    let st = st_algebra_with(a, &spec, &mods[1]).map_err(compute)?;
    let an = analyze(&st).map_err(compute)?;
    st_results(report, &st, &an);
    report.extend_checks(st_checks(&st, &an));
    report.check(
        "complete-intersection-iff-free",
        an.complete_intersection == f.free,
        format!("ci = {}, free = {}", an.complete_intersection, f.free),
    );
    let d = spec.degree as i64;
    if f.free {
        let expected: Vec<i64> = f.exponents.iter().map(|&e| e as i64).collect();
        report.check(
            "recovered-exponents",
            an.recovered_exponents.as_ref() == Some(&expected),
            format!("{:?}", an.recovered_exponents),
        );
        let product = f
            .exponents
            .iter()
            .fold(IntPoly::one(), |acc, &e| acc.mul(&IntPoly::quantum((e as i64 + d - 1).max(1) as usize)));
        report.check("hilbert-quantum-product", product.coeffs() == an.hilbert_vector.as_slice(), "");
        report.check(
            "free-socle-degree",
            an.top_degree.map(|r| r as i64) == Some(a.len() as i64 + a.dim() as i64 * (d - 2)),
            format!("top degree {:?}", an.top_degree),
        );
    }
    let tame = is_tame(a).map_err(compute)?;
    report.set("tame", tame);
    if let (true, Some(psi)) = (tame, &psi) {
        let at_one = psi.at_t_one();
        report.check(
            "tame-hilbert-equals-psi-at-t-one",
            at_one.coeffs() == an.hilbert_vector.as_slice(),
            format!("Psi(x,1) = {}", int_poly_string(&at_one, "x")),
        );
    }
    Ok(())
}

pub fn analyze_report(input: &Input, eta: Option<&str>, degree: u32) -> Result<Report, CliError> {
    let a = &input.arrangement;
    let mut r = Report::new("analyze", &input.label);
    describe(&mut r, a);
    let spec = resolve_eta(input, eta, degree)?;
    full_checks(a, &mut r, Some(&spec))?;
    Ok(r)
}

fn root_type(t: &str) -> Result<RootType, CliError> {
    t.parse().map_err(|e: CoxeterError| CliError::Usage(e.to_string()))
}

fn root_system(t: &str, rank: usize) -> Result<RootSystem, CliError> {
    RootSystem::new(root_type(t)?, rank).map_err(|e| CliError::Usage(e.to_string()))
}

fn pad(mut e: Vec<i32>, len: usize) -> Vec<i32> {
    while e.len() < len {
        e.insert(0, 0);
    }
    e
}

fn ideal_checks(r: &mut Report, rs: &RootSystem, ideal: &starr_core::coxeter::LowerIdeal) -> Result<(), CliError> {
    let a = rs.ideal_arrangement(ideal);
    let expected = pad(rs.ideal_exponents(ideal), a.dim());
    let f = freeness_of(&a, &log_derivations(&a, 1).map_err(compute)?);
    r.set("roots", ideal.roots.iter().map(|&k| rs.roots[k].clone()).collect::<Vec<_>>());
    r.set("dual_partition_exponents", &expected);
    r.set("free", f.free);
    r.set("computed_exponents", &f.exponents);
    r.check("ideal-exponents", f.free && f.exponents == expected, format!("computed {:?}", f.exponents));
    let p1 = rs.lowest_invariant();
    r.check("lowest-invariant-nondegenerate", verify_eta(&a, &p1).map_err(compute)?.is_valid(), poly_string(&p1, &a));
    Ok(())
}

pub fn coxeter_weyl(t: &str, rank: usize) -> Result<Report, CliError> {
    let rs = root_system(t, rank)?;
    let mut r = Report::new("coxeter weyl", &format!("{}{}", rs.kind, rank));
    describe(&mut r, &rs.weyl_arrangement());
    ideal_checks(&mut r, &rs, &rs.full_ideal())?;
    Ok(r)
}

pub fn coxeter_ideal(t: &str, rank: usize, roots: &[usize]) -> Result<Report, CliError> {
    let rs = root_system(t, rank)?;
    let ideal = rs.lower_ideal(roots).map_err(|e| CliError::Usage(e.to_string()))?;
    let mut r = Report::new("coxeter ideal", &format!("{}{} {:?}", rs.kind, rank, roots));
    describe(&mut r, &rs.ideal_arrangement(&ideal));
    ideal_checks(&mut r, &rs, &ideal)?;
    Ok(r)
}

pub fn coxeter_ideals(t: &str, rank: usize) -> Result<Report, CliError> {
    let rs = root_system(t, rank)?;
    let mut r = Report::new("coxeter ideals", &format!("{}{}", rs.kind, rank));
    r.set("positive_roots", &rs.roots);
    let ideals = rs.lower_ideals();
    r.set("count", ideals.len());
    let mut listed = Vec::new();
    for ideal in &ideals {
        let a = rs.ideal_arrangement(ideal);
        let expected = pad(rs.ideal_exponents(ideal), a.dim());
        let f = freeness_of(&a, &log_derivations(&a, 1).map_err(compute)?);
        r.check(format!("ideal {:?}", ideal.roots), f.free && f.exponents == expected, format!("exponents {expected:?}"));
        listed.push(json!({"roots": ideal.roots, "exponents": expected}));
    }
    r.set("ideals", listed);
    Ok(r)
}

pub fn coxeter_inversion(w: &str) -> Result<Report, CliError> {
    let w: Permutation = w.parse().map_err(|e: CoxeterError| CliError::Usage(e.to_string()))?;
    let a = inversion_arrangement(&w);
    let mut r = Report::new("coxeter inversion", &w.to_string());
    describe(&mut r, &a);
    let size = bruhat_interval_size(&w).map_err(|e| CliError::Usage(e.to_string()))?;
    r.set("bruhat_interval_size", size);
    let f = freeness_of(&a, &log_derivations(&a, 1).map_err(compute)?);
    r.set("free", f.free);
    r.set("minimal_generator_degrees", &f.exponents);
    let prod: i64 = f.exponents.iter().map(|&d| 1 + d as i64).product();
    let smooth = w.is_rationally_smooth();
    r.set("rationally_smooth", smooth);
    // free with the right exponent product exactly when 3412 and 4231 are avoided
    r.check(
        "interval-size-iff-rationally-smooth",
        (f.free && prod == size as i64) == smooth,
        format!("free = {}, prod(1 + d_i) = {prod}, interval {size}", f.free),
    );
    let p1 = starr_core::stalg::power_sum(&vec![1; w.len()], 2);
    let spec = verify_eta(&a, &p1).map_err(compute)?;
    r.check("lowest-invariant-nondegenerate", spec.is_valid(), "");
    if spec.is_valid() {
        let st = st_algebra_with(&a, &spec, &log_derivations(&a, 1).map_err(compute)?).map_err(compute)?;
        r.set("hilbert_vector", st.hilbert_vector());
        r.set("square_zero_linear_form", nilpotent_string(&exists_nilpotent_linear(&st.quotient), &a));
    }
    Ok(r)
}

pub fn nilpotent_string(n: &NilpotentLinear, a: &Arrangement) -> String {
    match n {
        NilpotentLinear::None => "none".into(),
        NilpotentLinear::Witness(v) => poly_string(v, a),
        NilpotentLinear::OverClosure => "exists over the algebraic closure only".into(),
    }
}

/// Checks whose expected values are fixed numbers rather than identities.
pub fn reference_checks() -> Result<Report, CliError> {
    let mut r = Report::new("verify", "reference");
    let get = |n: &str| corpus::lookup(n).map(|e| e.arrangement).map_err(compute);

    let ex4 = get("ex4")?;
    let spec = default_eta(&ex4, 2).map_err(compute)?;
    let d1 = log_derivations(&ex4, 1).map_err(compute)?;
    let st = st_algebra_with(&ex4, &spec, &d1).map_err(compute)?;
    let an = analyze(&st).map_err(compute)?;
    r.check("ex4-hilbert-vector", an.hilbert_vector == [1, 3, 5, 4, 1], format!("{:?}", an.hilbert_vector));
    r.check("ex4-not-gorenstein", !an.gorenstein && !an.palindromic, "");
    r.check("ex4-not-free", !freeness_of(&ex4, &d1).free, "");

    let ns = get("notsplit")?;
    let spec = default_eta(&ns, 2).map_err(compute)?;
    let d1 = log_derivations(&ns, 1).map_err(compute)?;
    let st = st_algebra_with(&ns, &spec, &d1).map_err(compute)?;
    let hv = st.hilbert_vector();
    r.check("notsplit-hilbert-vector", hv == [1, 3, 5, 6, 6, 6, 4, 1], format!("{hv:?}"));
    let gens = corpus::notsplit_ideal_generators();
    r.check("notsplit-printed-generators-in-ideal", gens.iter().all(|g| st.contains(g)), "");
    r.check("notsplit-not-free", !freeness_of(&ns, &d1).free, "");
    let pi = ns.poincare_polynomial();
    r.check("notsplit-poincare", pi.coeffs() == [1, 7, 15, 9], int_poly_string(&pi, "t"));

    let tl = get("three-lines")?;
    let f = freeness_of(&tl, &log_derivations(&tl, 1).map_err(compute)?);
    r.check("three-lines-exponents", f.free && f.exponents == [1, 2], format!("{:?}", f.exponents));

    let w: Permutation = "4123".parse().map_err(compute)?;
    let aw = inversion_arrangement(&w);
    r.check("inversion-4123-hyperplanes", aw.len() == 3, aw.to_string());
    r.check("inversion-4123-interval", bruhat_interval_size(&w).map_err(compute)? == 8, "");
    let schubert = starr_core::gb::QuotientAlgebra::new(starr_core::gb::ideal_basis(4, &corpus::schubert_4123()))
        .map_err(compute)?;
    let s3 = Polynomial::linear(&[1, 1, 1, 0].map(starr_core::scalar::Scalar::from_int));
    r.check(
        "schubert-square-zero",
        !schubert.is_zero(&s3) && schubert.is_zero(&(&s3 * &s3)),
        nilpotent_string(&exists_nilpotent_linear(&schubert), &aw),
    );
    let p1 = starr_core::stalg::power_sum(&[1, 1, 1, 1], 2);
    let spec = verify_eta(&aw, &p1).map_err(compute)?;
    let st = st_algebra_with(&aw, &spec, &log_derivations(&aw, 1).map_err(compute)?).map_err(compute)?;
    let n = exists_nilpotent_linear(&st.quotient);
    r.check("st-4123-no-square-zero", n == NilpotentLinear::None, nilpotent_string(&n, &aw));

    for (t, rank, count) in [(RootType::A, 2, 5), (RootType::B, 2, 6), (RootType::A, 3, 14)] {
        let got = RootSystem::new(t, rank).map_err(compute)?.lower_ideals().len();
        r.check(format!("lower-ideals-{t}{rank}"), got == count, format!("{got}"));
    }
    Ok(r)
}

/// A second validated `eta` of degree 2, distinct from the default.
pub fn second_eta(a: &Arrangement, first: &Polynomial) -> Option<EtaSpec> {
    eta_candidates(a.dim(), 2)
        .into_iter()
        .filter(|p| p != first)
        .find_map(|p| verify_eta(a, &p).ok().filter(EtaSpec::is_valid))
}

pub fn verify_report(suite: &str) -> Result<Report, CliError> {
    let examples: Vec<Example> = match suite {
        "all" | "identities" => corpus::shipped(),
        "free" => corpus::free_corpus(),
        "sweep" => corpus::sweep_l3(),
        "reference" | "coxeter" => Vec::new(),
        other => return Err(CliError::Usage(format!("unknown suite {other:?}; use all, reference, identities, free, sweep or coxeter"))),
    };
    let mut r = Report::new("verify", suite);
    if matches!(suite, "all" | "reference") {
        let reference = reference_checks()?;
        r.extend_checks(reference.checks);
    }
    if matches!(suite, "all" | "coxeter") {
        for (t, rank) in [("A", 2), ("B", 2), ("A", 3)] {
            r.extend_checks(coxeter_ideals(t, rank)?.checks.into_iter().map(|c| prefixed(&format!("{t}{rank}"), c)));
        }
        for w in Permutation::all(4) {
            let rep = coxeter_inversion(&w.to_string())?;
            r.extend_checks(rep.checks.into_iter().map(|c| prefixed(&format!("inversion-{w}"), c)));
        }
    }
    let outcomes: Vec<Result<Report, CliError>> = {
        use rayon::prelude::*;
        examples
            .par_iter()
            .map(|ex| {
                let mut sub = Report::new("analyze", &ex.name);
                full_checks(&ex.arrangement, &mut sub, None)?;
                Ok(sub)
            })
            .collect()
    };
    let mut summary = Vec::new();
    for (ex, out) in examples.iter().zip(outcomes) {
        match out {
            Ok(sub) => {
                summary.push(json!({"name": ex.name, "passed": sub.passed(), "hilbert_vector": sub.results.get("hilbert_vector")}));
                r.extend_checks(sub.checks.into_iter().map(|c| prefixed(&ex.name, c)));
            }
            Err(e) => r.check(format!("{}: pipeline", ex.name), false, e.to_string()),
        }
    }
    r.set("arrangements", summary);
    Ok(r)
}

fn prefixed(prefix: &str, c: Check) -> Check {
    Check { name: format!("{prefix}: {}", c.name), ..c }
}
