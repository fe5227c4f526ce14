//! The `reproduce` harness: per-theorem suites that sweep small parameters
//! exhaustively, compute the combinatorial formula, build the explicit
//! witness, verify it, run the matching brute-force oracle when within
//! bounds, and emit one certificate per instance.
//!
//! The pdc-discrepancy suite is quarantined: its expected status is
//! discrepancy (it documents the index-shift erratum in the printed
//! pseudo-downward-closed cover formula) and does not fail a reproduction
//! run.

use serde_json::json;

use crate::block::{self, BlockStructure, BlockSymmetricSet};
use crate::cert::Certificate;
use crate::covers::{self, CoverSpec, PdcVariant, TargetSet, Witness};
use crate::error::{Error, Result};
use crate::oracle::{self, OracleOptions};
use crate::sym::{self, PointSet, SymmetricSet};

/// Size limits for a reproduction run.
#[derive(Debug, Clone, Copy)]
pub struct SuiteBounds {
    pub max_n: usize,
    pub max_t: u32,
}

impl Default for SuiteBounds {
    fn default() -> Self {
        SuiteBounds { max_n: 4, max_t: 3 }
    }
}

pub const SUITES: &[&str] = &[
    "alon-furedi",
    "sauermann-wigderson",
    "clifton-huang-small",
    "venkitesh",
    "ghosh-kayal-nandi",
    "inner-outer",
    "index-symmetric",
    "multiplicity-symmetric",
    "multiplicity-block",
    "subcube",
    "pdc",
    "pdc-discrepancy",
    "hamming-ball",
    "layer-t0",
    "index-pdc",
];

/// Suites whose discrepancies are documented findings rather than failures.
pub const QUARANTINED: &[&str] = &["pdc-discrepancy"];

/// Runs one suite under the given bounds.
pub fn reproduce(suite: &str, bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    match suite {
        "alon-furedi" => alon_furedi(bounds),
        "sauermann-wigderson" => sauermann_wigderson(bounds),
        "clifton-huang-small" => clifton_huang_small(),
        "venkitesh" => venkitesh(bounds),
        "ghosh-kayal-nandi" => ghosh_kayal_nandi(bounds),
        "inner-outer" => inner_outer(bounds),
        "index-symmetric" => index_symmetric(bounds),
        "multiplicity-symmetric" => multiplicity_symmetric(bounds),
        "multiplicity-block" => multiplicity_block(bounds),
        "subcube" => subcube(bounds),
        "pdc" => pdc_adjudication(bounds),
        "pdc-discrepancy" => pdc_discrepancy(),
        "hamming-ball" => hamming_ball(bounds),
        "layer-t0" => layer_t0(bounds),
        "index-pdc" => index_pdc(bounds),
        other => Err(Error::domain(format!(
            "unknown suite {other:?}; expected one of {SUITES:?}"
        ))),
    }
}

fn opts() -> OracleOptions {
    OracleOptions::default()
}

fn punctured_cube(n: usize, hole: &[u8]) -> TargetSet {
    let pts = sym::cube_points(n).into_iter().filter(|x| x != hole);
    TargetSet::Points(PointSet::new(n, pts).expect("cube points"))
}

/// Minimum hyperplane count and degree both equal n for the cube minus any
/// single point, at (1, 0).
fn alon_furedi(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(4) {
        for hole in sym::cube_points(n) {
            let spec = CoverSpec::exact(punctured_cube(n, &hole), 1, 0)?;
            let mut cert = Certificate::new(
                "alon-furedi",
                json!({"n": n, "hole": hole, "t": 1, "ell": 0}),
                n as i64,
            );
            let epc = oracle::epc_oracle(&spec, &opts())?;
            cert.check(
                "epc-equals-n",
                epc.value as usize == n,
                format!("epc = {}", epc.value),
            );
            let ehc = oracle::ehc_oracle(&spec, &opts())?;
            cert.check(
                "ehc-equals-n",
                ehc.value as usize == n,
                format!("ehc = {}", ehc.value),
            );
            cert.set_oracle(ehc.value);
            cert.attach_witness(&ehc.witness, &spec);
            cert.check(
                "witness-verifies",
                covers::verify_cover(&ehc.witness, &spec).ok,
                "assembled family re-verified",
            );
            cert.finalize(true);
            certs.push(cert);
        }
    }
    Ok(certs)
}

/// Minimum degree for the cube minus the origin: n + 2t - 2 at ell = t - 1,
/// and n + 2t - 3 when ell < t - 1 <= floor((n+1)/2).
fn sauermann_wigderson(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(4) {
        let hole = vec![0u8; n];
        for t in 1..=bounds.max_t.min(3) {
            for ell in 0..t {
                let formula = if ell == t - 1 {
                    n as u32 + 2 * t - 2
                } else if t - 1 <= ((n + 1) / 2) as u32 {
                    n as u32 + 2 * t - 3
                } else {
                    continue; // outside the theorem's stated range
                };
                let spec = CoverSpec::exact(punctured_cube(n, &hole), t, ell)?;
                let mut cert = Certificate::new(
                    "sauermann-wigderson",
                    json!({"n": n, "t": t, "ell": ell}),
                    formula as i64,
                );
                let epc = oracle::epc_oracle(&spec, &opts())?;
                cert.set_oracle(epc.value);
                cert.attach_witness(&epc.witness, &spec);
                cert.check(
                    "witness-verifies",
                    covers::verify_cover(&epc.witness, &spec).ok,
                    format!("degree-{} polynomial re-verified", epc.value),
                );
                cert.finalize(true);
                certs.push(cert);
            }
        }
    }
    Ok(certs)
}

/// Minimum hyperplane count n + t(t-1)/2 for the cube minus the origin at
/// (t, 0), for the small cases settled exactly.
fn clifton_huang_small() -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for (n, t) in [(2usize, 2u32), (3, 2), (2, 3)] {
        let hole = vec![0u8; n];
        let formula = n as u32 + t * (t - 1) / 2;
        let spec = CoverSpec::exact(punctured_cube(n, &hole), t, 0)?;
        let mut cert = Certificate::new(
            "clifton-huang-small",
            json!({"n": n, "t": t, "ell": 0}),
            formula as i64,
        );
        let ehc = oracle::ehc_oracle(&spec, &opts())?;
        cert.set_oracle(ehc.value);
        cert.attach_witness(&ehc.witness, &spec);
        cert.check(
            "witness-verifies",
            covers::verify_cover(&ehc.witness, &spec).ok,
            format!("{}-plane family re-verified", ehc.value),
        );
        cert.finalize(true);
        certs.push(cert);
    }
    Ok(certs)
}

/// Degree of the minimum (1,0)-exact polynomial cover of any proper
/// symmetric set equals Lambda_n(S); the hyperplane count agrees whenever
/// W_{n,2} is not contained in the weight set, including the piecewise
/// |W| / |W|-1 form, and equals 2 for T_{n,2}.
fn venkitesh(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(4) {
        // For n = 1 the window W_{n,2} fills [0, n], so no proper set
        // contains it and every instance falls into the hyperplane branch.
        let w2 = sym::canonical_weight_window(n, 2.min(n))?;
        let w2_meaningful = n >= 2;
        for s in sym::all_symmetric_sets(n) {
            if s.is_full() {
                continue;
            }
            let lambda = sym::lambda_measure(&s);
            let spec = CoverSpec::exact(TargetSet::Sym(s.clone()), 1, 0)?;
            let mut cert = Certificate::new(
                "venkitesh",
                json!({"n": n, "weights": s.weights()}),
                lambda as i64,
            );
            let epc = oracle::epc_oracle(&spec, &opts())?;
            cert.check(
                "epc-equals-lambda",
                epc.value as usize == lambda,
                format!("epc = {}", epc.value),
            );
            let mut oracle_value = epc.value;
            if !s.is_empty() {
                // the explicit construction attains the bound
                let fam = covers::construct_symmetric_cover(&s.complement(), 1)?;
                cert.check(
                    "construction-size",
                    fam.len() == lambda,
                    format!("constructed family has {} members", fam.len()),
                );
                let witness = Witness::Family(fam);
                cert.check(
                    "witness-verifies",
                    covers::verify_cover(&witness, &spec).ok,
                    "constructed family verified",
                );
                cert.attach_witness(&witness, &spec);
            }
            if !(w2_meaningful && w2.is_subset_of(&s)) {
                let ehc = oracle::ehc_oracle(&spec, &opts())?;
                cert.check(
                    "ehc-equals-lambda",
                    ehc.value as usize == lambda,
                    format!("ehc = {}", ehc.value),
                );
                oracle_value = ehc.value;
                let w1 = sym::canonical_weight_window(n, 1)?;
                let piecewise = if w1.is_subset_of(&s) {
                    s.weight_count() - 1
                } else {
                    s.weight_count()
                };
                cert.check(
                    "piecewise-weight-count",
                    lambda == piecewise,
                    format!("lambda = {lambda}, piecewise = {piecewise}"),
                );
            } else if w2_meaningful && s == w2 {
                // part (c): T_{n,2} is covered by exactly two hyperplanes
                let ehc = oracle::ehc_oracle(&spec, &opts())?;
                cert.check("ehc-of-t2-is-2", ehc.value == 2, format!("ehc = {}", ehc.value));
                oracle_value = ehc.value;
            }
            cert.set_oracle(oracle_value);
            cert.finalize(true);
            certs.push(cert);
        }
    }
    Ok(certs)
}

/// Covering the complement of a single layer at (t, t-1): both cover numbers
/// equal max{w, n-w} + 2t - 2.
fn ghosh_kayal_nandi(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(4) {
        for w in 0..=n {
            for t in 1..=bounds.max_t.min(2) {
                let layer = SymmetricSet::layer(n, w)?;
                let formula = w.max(n - w) as u32 + 2 * t - 2;
                let spec =
                    CoverSpec::exact(TargetSet::Sym(layer.complement()), t, t - 1)?;
                let mut cert = Certificate::new(
                    "ghosh-kayal-nandi",
                    json!({"n": n, "w": w, "t": t}),
                    formula as i64,
                );
                let fam = covers::construct_symmetric_cover(&layer, t)?;
                cert.check(
                    "construction-size",
                    fam.len() == formula as usize,
                    format!("constructed family has {} members", fam.len()),
                );
                let witness = Witness::Family(fam);
                cert.check(
                    "witness-verifies",
                    covers::verify_cover(&witness, &spec).ok,
                    "constructed family verified",
                );
                cert.attach_witness(&witness, &spec);
                let epc = oracle::epc_oracle(&spec, &opts())?;
                cert.check("epc-matches", epc.value == formula, format!("epc = {}", epc.value));
                let ehc = oracle::ehc_oracle(&spec, &opts())?;
                cert.check("ehc-matches", ehc.value == formula, format!("ehc = {}", ehc.value));
                cert.set_oracle(ehc.value);
                cert.finalize(true);
                certs.push(cert);
            }
        }
    }
    Ok(certs)
}

/// inn of the complement plus out of the set is at least n, with equality
/// exactly at peripheral intervals and their complements. One aggregate
/// certificate per dimension; the value is the number of instances checked.
fn inner_outer(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(10) {
        let mut checked = 0usize;
        let mut bad_inequality = 0usize;
        let mut bad_characterization = 0usize;
        for s in sym::all_symmetric_sets(n) {
            if s.is_empty() {
                continue;
            }
            checked += 1;
            let lhs = sym::inn_measure(&s.complement()) + sym::out_measure(&s);
            if lhs < n {
                bad_inequality += 1;
            }
            let peripheral =
                s.as_peripheral().is_some() || s.complement().as_peripheral().is_some();
            if (lhs == n) != peripheral {
                bad_characterization += 1;
            }
        }
        let mut cert = Certificate::new(
            "inner-outer",
            json!({"n": n, "weight-sets": checked}),
            checked as i64,
        );
        cert.check(
            "inequality-zero-exceptions",
            bad_inequality == 0,
            format!("{bad_inequality} violations of inn+out >= n"),
        );
        cert.check(
            "equality-characterization",
            bad_characterization == 0,
            format!("{bad_characterization} mismatches of the peripheral criterion"),
        );
        cert.finalize(false);
        certs.push(cert);
    }
    Ok(certs)
}

/// Brute-force index complexity equals out_n for symmetric sets, and the
/// complement measure dominates n - r_n with the peripheral equality
/// characterization.
fn index_symmetric(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    let brute_cap = bounds.max_n.min(5);
    for n in 1..=bounds.max_n.min(10) {
        let mut checked = 0usize;
        let mut bad_brute = 0usize;
        let mut bad_bound = 0usize;
        for s in sym::all_symmetric_sets(n) {
            if s.is_empty() {
                continue;
            }
            checked += 1;
            let r = sym::out_measure(&s);
            if n <= brute_cap {
                let (rb, witness) = sym::index_complexity_bruteforce(&s.points())?;
                if rb != r || witness.coords.len() != rb {
                    bad_brute += 1;
                }
            }
            let lb = sym::lambda_bar(&s);
            let peripheral =
                s.as_peripheral().is_some() || s.complement().as_peripheral().is_some();
            if lb + r < n || ((lb == n - r) != peripheral) {
                bad_bound += 1;
            }
        }
        let mut cert = Certificate::new(
            "index-symmetric",
            json!({"n": n, "weight-sets": checked, "bruteforce": n <= brute_cap}),
            checked as i64,
        );
        if n <= brute_cap {
            cert.check(
                "bruteforce-equals-out",
                bad_brute == 0,
                format!("{bad_brute} mismatches of r_n against out_n"),
            );
        }
        cert.check(
            "lambda-bar-bound",
            bad_bound == 0,
            format!("{bad_bound} violations of the n - r_n bound"),
        );
        cert.finalize(false);
        certs.push(cert);
    }
    Ok(certs)
}

/// Covering the complement of any nonempty symmetric set at (t, t-1): both
/// cover numbers equal lambda_bar(S) + 2t - 2, attained by the explicit
/// construction.
fn multiplicity_symmetric(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(4) {
        for t in 1..=bounds.max_t.min(2) {
            for s in sym::all_symmetric_sets(n) {
                if s.is_empty() {
                    continue;
                }
                let formula = sym::lambda_bar(&s) as u32 + 2 * t - 2;
                let spec =
                    CoverSpec::exact(TargetSet::Sym(s.complement()), t, t - 1)?;
                let mut cert = Certificate::new(
                    "multiplicity-symmetric",
                    json!({"n": n, "t": t, "weights": s.weights()}),
                    formula as i64,
                );
                let fam = covers::construct_symmetric_cover(&s, t)?;
                cert.check(
                    "construction-size",
                    fam.len() == formula as usize,
                    format!("constructed family has {} members", fam.len()),
                );
                let witness = Witness::Family(fam);
                cert.check(
                    "witness-verifies",
                    covers::verify_cover(&witness, &spec).ok,
                    "constructed family verified",
                );
                cert.attach_witness(&witness, &spec);
                let epc = oracle::epc_oracle(&spec, &opts())?;
                cert.check("epc-matches", epc.value == formula, format!("epc = {}", epc.value));
                let ehc = oracle::ehc_oracle(&spec, &opts())?;
                cert.check("ehc-matches", ehc.value == formula, format!("ehc = {}", ehc.value));
                cert.set_oracle(ehc.value);
                cert.finalize(true);
                certs.push(cert);
            }
        }
    }
    Ok(certs)
}

/// All 2-block structures with total dimension at most the bound.
fn two_block_structures(max_total: usize) -> Vec<BlockStructure> {
    let mut out = Vec::new();
    for n1 in 1..max_total {
        for n2 in 1..=(max_total - n1) {
            out.push(BlockStructure::new(vec![n1, n2]).expect("positive sizes"));
        }
    }
    out
}

/// Covering the complement of a nonempty 2-block grid at (t, t-1):
/// block-exact verification of the explicit family, and the minimum
/// block-exact degree, both equal the sum of the per-block complement
/// measures plus 2t - 2.
fn multiplicity_block(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for structure in two_block_structures(bounds.max_n.min(4)) {
        let (n1, n2) = (structure.sizes()[0], structure.sizes()[1]);
        for s1 in sym::all_symmetric_sets(n1) {
            if s1.is_empty() {
                continue;
            }
            for s2 in sym::all_symmetric_sets(n2) {
                if s2.is_empty() {
                    continue;
                }
                for t in 1..=bounds.max_t.min(2) {
                    let blocks = vec![s1.clone(), s2.clone()];
                    let formula = (sym::lambda_bar(&s1) + sym::lambda_bar(&s2)) as u32
                        + 2 * t
                        - 2;
                    let grid = BlockSymmetricSet::grid(structure.clone(), &blocks)?;
                    let spec = CoverSpec::block_exact(
                        TargetSet::Block(grid.complement()),
                        t,
                        t - 1,
                        structure.clone(),
                    )?;
                    let mut cert = Certificate::new(
                        "multiplicity-block",
                        json!({
                            "sizes": structure.sizes(),
                            "w1": s1.weights(),
                            "w2": s2.weights(),
                            "t": t,
                        }),
                        formula as i64,
                    );
                    let fam = covers::construct_grid_cover(&structure, &blocks, t)?;
                    cert.check(
                        "construction-size",
                        fam.len() == formula as usize,
                        format!("constructed family has {} members", fam.len()),
                    );
                    let witness = Witness::Family(fam);
                    cert.check(
                        "witness-verifies-block-exact",
                        covers::verify_cover(&witness, &spec).ok,
                        "constructed family passed block-exact verification",
                    );
                    cert.attach_witness(&witness, &spec);
                    let bepc = oracle::bepc_oracle(&spec, &opts())?;
                    cert.check(
                        "bepc-matches",
                        bepc.value == formula,
                        format!("bepc = {}", bepc.value),
                    );
                    cert.set_oracle(bepc.value);
                    cert.finalize(true);
                    certs.push(cert);
                }
            }
        }
    }
    Ok(certs)
}

/// Lift/restrict between covers of S and covers of {0,1}^m x S preserve
/// size and verification in both directions.
fn subcube(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for m in 1..=2usize {
        for base_n in 1..=3usize {
            if m + base_n > bounds.max_n.max(4) + 1 {
                continue;
            }
            for s in sym::all_symmetric_sets(base_n) {
                if s.is_full() {
                    continue; // the prism would be the whole cube
                }
                for t in 1..=bounds.max_t.min(2) {
                    let n = m + base_n;
                    let formula = sym::lambda_measure(&s) as u32 + 2 * t - 2;
                    let mut cert = Certificate::new(
                        "subcube",
                        json!({"m": m, "n": n, "weights": s.weights(), "t": t}),
                        formula as i64,
                    );
                    let base_cover = covers::construct_symmetric_cover(&s.complement(), t)?;
                    let base_spec =
                        CoverSpec::exact(TargetSet::Sym(s.clone()), t, t - 1)?;
                    cert.check(
                        "base-cover-verifies",
                        covers::verify_cover(
                            &Witness::Family(base_cover.clone()),
                            &base_spec,
                        )
                        .ok,
                        "cover of S verified",
                    );
                    cert.check(
                        "base-cover-size",
                        base_cover.len() == formula as usize,
                        format!("{} members", base_cover.len()),
                    );
                    let lifted = covers::lift_subcube_cover(&base_cover, m);
                    let structure = BlockStructure::new(vec![m, base_n])?;
                    let prism = BlockSymmetricSet::grid(
                        structure.clone(),
                        &[SymmetricSet::full(m), s.clone()],
                    )?;
                    let prism_spec =
                        CoverSpec::exact(TargetSet::Block(prism), t, t - 1)?;
                    let lifted_witness = Witness::Family(lifted.clone());
                    cert.check(
                        "lift-verifies",
                        covers::verify_cover(&lifted_witness, &prism_spec).ok,
                        "lifted cover of the prism verified",
                    );
                    cert.check(
                        "lift-preserves-size",
                        lifted.len() == base_cover.len(),
                        format!("{} members after lift", lifted.len()),
                    );
                    let back = covers::restrict_subcube_cover(&lifted, m)?;
                    cert.check(
                        "restrict-round-trips",
                        back == base_cover,
                        "restriction undoes the lift",
                    );
                    cert.attach_witness(&lifted_witness, &prism_spec);
                    cert.finalize(false);
                    certs.push(cert);
                }
            }
        }
    }
    Ok(certs)
}

/// Adjudication of the pseudo-downward-closed cover formula at t = 1: on
/// every PDC instance the innext reading matches the block-exact degree
/// oracle; the literal printed reading's agreement is recorded per instance.
fn pdc_adjudication(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for structure in two_block_structures(bounds.max_n.min(4)) {
        for s in block::all_block_symmetric_sets(&structure) {
            if s.is_empty() {
                continue;
            }
            let Some(cert_pdc) = block::pdc_check(&s) else { continue };
            let innext_formula = covers::pdc_formula_innext(&s, &cert_pdc, 1)?;
            let literal_formula = covers::pdc_formula_literal(&s, &cert_pdc, 1)?;
            let spec = oracle::block_complement_spec(&s, 1, 0)?;
            let mut cert = Certificate::new(
                "pdc",
                json!({
                    "sizes": structure.sizes(),
                    "tuples": s.tuples().iter().collect::<Vec<_>>(),
                    "t": 1,
                }),
                innext_formula as i64,
            );
            let built = covers::construct_pdc_polynomial_cover(
                &s,
                &cert_pdc,
                1,
                PdcVariant::Innext,
            )?;
            cert.check(
                "innext-witness-verifies",
                built.report.ok,
                format!("degree-{} polynomial verified", built.formula_degree),
            );
            cert.attach_witness(&Witness::Polynomial(built.polynomial), &spec);
            let bepc = oracle::bepc_oracle(&spec, &opts())?;
            cert.check(
                "innext-matches-oracle",
                bepc.value == innext_formula,
                format!("bepc = {}, innext formula = {innext_formula}", bepc.value),
            );
            cert.check(
                "literal-formula-agreement",
                true,
                format!(
                    "literal formula = {literal_formula}, oracle = {}: {}",
                    bepc.value,
                    if literal_formula == bepc.value { "agrees" } else { "disagrees" }
                ),
            );
            cert.set_oracle(bepc.value);
            cert.finalize(true);
            certs.push(cert);
        }
    }
    Ok(certs)
}

/// Quarantined documentation of two findings: the printed outext-indexed
/// cover formula overshoots the true block-exact degree on the 2x2 instance
/// {(0,0),(0,1),(1,0)} (literal 2 vs oracle 1 vs innext 1), and
/// pseudo-downward-closedness is not preserved under complement (the grid
/// {0,2} x {1} in blocks (2,1) is PDC while its complement is not).
fn pdc_discrepancy() -> Result<Vec<Certificate>> {
    let structure = BlockStructure::new(vec![1, 1])?;
    let s = BlockSymmetricSet::new(
        structure.clone(),
        [vec![0, 0], vec![0, 1], vec![1, 0]],
    )?;
    let cert_pdc = block::pdc_check(&s).ok_or_else(|| Error::internal("instance is PDC"))?;
    let literal_formula = covers::pdc_formula_literal(&s, &cert_pdc, 1)?;
    let innext_formula = covers::pdc_formula_innext(&s, &cert_pdc, 1)?;
    let spec = oracle::block_complement_spec(&s, 1, 0)?;
    let bepc = oracle::bepc_oracle(&spec, &opts())?;
    let built =
        covers::construct_pdc_polynomial_cover(&s, &cert_pdc, 1, PdcVariant::LiteralOutext)?;
    let mut cert = Certificate::new(
        "pdc-discrepancy",
        json!({
            "sizes": structure.sizes(),
            "tuples": s.tuples().iter().collect::<Vec<_>>(),
            "t": 1,
        }),
        literal_formula as i64,
    );
    cert.set_oracle(bepc.value);
    cert.check(
        "literal-formula-exceeds-oracle",
        literal_formula == 2 && bepc.value == 1,
        format!("literal = {literal_formula}, oracle = {}", bepc.value),
    );
    cert.check(
        "innext-formula-matches-oracle",
        innext_formula == bepc.value,
        format!("innext = {innext_formula}"),
    );
    cert.check(
        "literal-witness-fails-verification",
        !built.report.ok,
        format!(
            "printed construction of degree {:?} rejected",
            built.polynomial.degree()
        ),
    );
    cert.attach_witness(&Witness::Polynomial(built.polynomial), &spec);
    cert.finalize(true);
    let mut certs = vec![cert];

    // complement-closure counterexample
    let structure = BlockStructure::new(vec![2, 1])?;
    let grid = BlockSymmetricSet::grid(
        structure.clone(),
        &[SymmetricSet::new(2, [0usize, 2])?, SymmetricSet::new(1, [1usize])?],
    )?;
    let mut cert = Certificate::new(
        "pdc-discrepancy",
        json!({
            "sizes": structure.sizes(),
            "tuples": grid.tuples().iter().collect::<Vec<_>>(),
            "claim": "complement of a PDC set is PDC",
        }),
        0,
    );
    cert.check(
        "grid-is-pdc",
        block::pdc_check(&grid).is_some(),
        "the grid itself is pseudo downward closed",
    );
    cert.check(
        "complement-not-pdc",
        block::pdc_check(&grid.complement()).is_none(),
        "no order choice makes the complement's lattice downward closed",
    );
    // The claim under test is refuted, so the certificate is recorded as a
    // discrepancy by construction.
    cert.check("complement-closure-holds", false, "refuted by this instance");
    cert.finalize(false);
    certs.push(cert);
    Ok(certs)
}

/// Valid multiplicities for the Hamming-ball degree formula: the underlying
/// punctured-cube result on w variables needs t - 1 <= floor((w+1)/2), on
/// top of the proposition's own t <= floor((n+3)/2).
fn hamming_ball_ts(n: usize, w: usize) -> impl Iterator<Item = u32> {
    let hi = (((w + 3) / 2).min((n + 3) / 2)) as u32;
    2..=hi
}

/// Minimum (t, 0)-exact degree for the ball of weights [0, w-1] is
/// w + 2t - 3, attained by symmetrizing a cover of the punctured w-cube; and
/// the weights-{0,1} set in {0,1}^3 separates the hyperplane count from the
/// degree at (2, 0).
fn hamming_ball(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 2..=bounds.max_n.min(4) {
        for w in 1..n {
            for t in hamming_ball_ts(n, w) {
                if t > bounds.max_t {
                    continue;
                }
                let formula = w as u32 + 2 * t - 3;
                let ball = SymmetricSet::new(n, 0..w)?;
                let spec = CoverSpec::exact(TargetSet::Sym(ball), t, 0)?;
                let mut cert = Certificate::new(
                    "hamming-ball",
                    json!({"n": n, "w": w, "t": t}),
                    formula as i64,
                );
                let epc = oracle::epc_oracle(&spec, &opts())?;
                cert.check("epc-matches", epc.value == formula, format!("epc = {}", epc.value));
                cert.set_oracle(epc.value);
                // base cover of {0,1}^w minus the all-ones point, found by
                // the oracle at the same degree
                let hole = vec![1u8; w];
                let base_spec = CoverSpec::exact(punctured_cube(w, &hole), t, 0)?;
                let base = oracle::epc_oracle(&base_spec, &opts())?;
                cert.check(
                    "base-degree",
                    base.value == formula,
                    format!("base cover degree = {}", base.value),
                );
                let Witness::Polynomial(base_poly) = &base.witness else {
                    return Err(Error::internal("degree oracle returns polynomials"));
                };
                let sym_cover = covers::construct_hamming_ball_cover(n, w, t, base_poly)?;
                cert.check(
                    "symmetrized-degree",
                    sym_cover.degree() == Some(formula),
                    format!("symmetrized degree = {:?}", sym_cover.degree()),
                );
                let witness = Witness::Polynomial(sym_cover);
                cert.check(
                    "symmetrized-verifies",
                    covers::verify_cover(&witness, &spec).ok,
                    "symmetrized cover verified",
                );
                cert.attach_witness(&witness, &spec);
                cert.finalize(true);
                certs.push(cert);
            }
        }
    }
    // the hyperplane/polynomial separation at (2,0) on weights {0,1} in n=3
    let s = SymmetricSet::new(3, [0usize, 1])?;
    let spec = CoverSpec::exact(TargetSet::Sym(s), 2, 0)?;
    let epc = oracle::epc_oracle(&spec, &opts())?;
    let ehc = oracle::ehc_oracle(&spec, &opts())?;
    let mut cert = Certificate::new(
        "hamming-ball",
        json!({"n": 3, "weights": [0, 1], "t": 2, "ell": 0, "counterexample": true}),
        3,
    );
    cert.set_oracle(epc.value);
    cert.check("epc-is-3", epc.value == 3, format!("epc = {}", epc.value));
    cert.check(
        "ehc-exceeds-epc",
        ehc.value >= 4,
        format!("ehc = {} (derived exact value)", ehc.value),
    );
    cert.attach_witness(&ehc.witness, &spec);
    cert.finalize(true);
    certs.push(cert);
    Ok(certs)
}

/// Minimum (t, 0)-exact degree for a single layer is t, attained by the
/// power of the layer plane.
fn layer_t0(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    for n in 1..=bounds.max_n.min(4) {
        for w in 0..=n {
            for t in 1..=bounds.max_t.min(3) {
                let layer = SymmetricSet::layer(n, w)?;
                let spec = CoverSpec::exact(TargetSet::Sym(layer), t, 0)?;
                let mut cert = Certificate::new(
                    "layer-t0",
                    json!({"n": n, "w": w, "t": t}),
                    t as i64,
                );
                let power = covers::construct_layer_power_cover(n, w, t)?;
                let witness = Witness::Polynomial(power);
                cert.check(
                    "power-witness-verifies",
                    covers::verify_cover(&witness, &spec).ok,
                    "power cover verified",
                );
                cert.attach_witness(&witness, &spec);
                let epc = oracle::epc_oracle(&spec, &opts())?;
                cert.check("epc-equals-t", epc.value == t, format!("epc = {}", epc.value));
                cert.set_oracle(epc.value);
                cert.finalize(true);
                certs.push(cert);
            }
        }
    }
    Ok(certs)
}

/// Blockwise index complexity of outer-intact PDC sets equals brute force on
/// the expanded point set. One aggregate certificate per block structure.
fn index_pdc(bounds: SuiteBounds) -> Result<Vec<Certificate>> {
    let mut certs = Vec::new();
    let max_total = bounds.max_n.max(4).min(6);
    for n1 in 1..=3usize {
        for n2 in 1..=3usize {
            if n1 + n2 > max_total {
                continue;
            }
            let structure = BlockStructure::new(vec![n1, n2])?;
            let mut checked = 0usize;
            let mut mismatches = 0usize;
            for s in block::all_block_symmetric_sets(&structure) {
                if s.is_empty() {
                    continue;
                }
                let Some(cert_pdc) = block::pdc_check(&s) else { continue };
                if !block::outer_intact_check(&s, &cert_pdc)? {
                    continue;
                }
                checked += 1;
                let formula = block::block_index_complexity(&s, &cert_pdc)?;
                let brute = sym::index_complexity_bruteforce(&s.points())?.0;
                if formula != brute {
                    mismatches += 1;
                }
            }
            let mut cert = Certificate::new(
                "index-pdc",
                json!({"sizes": [n1, n2], "outer-intact-pdc-sets": checked}),
                checked as i64,
            );
            cert.check(
                "formula-equals-bruteforce",
                mismatches == 0,
                format!("{mismatches} mismatches over {checked} instances"),
            );
            cert.finalize(false);
            certs.push(cert);
        }
    }
    Ok(certs)
}
