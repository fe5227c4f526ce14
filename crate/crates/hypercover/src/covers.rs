//! Cover specifications, the fundamental hyperplane families, every explicit
//! cover construction, and exact verifiers for (t,l)-exact and
//! (t,l)-block-exact hyperplane and polynomial covers.
//!
//! Verification is exhaustive over the cube and exact: incidence counts for
//! families, vanishing multiplicities for polynomials. Failures are reported,
//! never thrown.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::block::{BlockStructure, BlockSymmetricSet, PdcCertificate};
use crate::error::{Error, Result};
use crate::poly::{bits_to_rat, rat, Hyperplane, HyperplaneFamily, Polynomial, Rat};
use crate::sym::{self, PointSet, SymmetricSet};
use crate::{block, poly};

// --- Cover specifications ----------------------------------------------------

/// The set of cube points a cover must hit.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TargetSet {
    Sym(SymmetricSet),
    Block(BlockSymmetricSet),
    Points(PointSet),
}

impl TargetSet {
    pub fn nvars(&self) -> usize {
        match self {
            TargetSet::Sym(s) => s.n(),
            TargetSet::Block(b) => b.structure().total(),
            TargetSet::Points(p) => p.n(),
        }
    }

    pub fn contains(&self, x: &[u8]) -> bool {
        match self {
            TargetSet::Sym(s) => s.contains_point(x),
            TargetSet::Block(b) => b.contains_point(x),
            TargetSet::Points(p) => p.contains(x),
        }
    }

    pub fn point_count(&self) -> usize {
        sym::cube_points(self.nvars()).iter().filter(|x| self.contains(x)).count()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverMode {
    Exact,
    BlockExact(BlockStructure),
}

/// A (t, ell) cover problem: every target point covered with multiplicity at
/// least t, every other cube point exactly ell (blockwise for block-exact).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSpec {
    pub target: TargetSet,
    pub t: u32,
    pub ell: u32,
    pub mode: CoverMode,
}

impl CoverSpec {
    pub fn exact(target: TargetSet, t: u32, ell: u32) -> Result<Self> {
        Self::check_params(&target, t, ell)?;
        Ok(CoverSpec { target, t, ell, mode: CoverMode::Exact })
    }

    pub fn block_exact(
        target: TargetSet,
        t: u32,
        ell: u32,
        structure: BlockStructure,
    ) -> Result<Self> {
        Self::check_params(&target, t, ell)?;
        if structure.total() != target.nvars() {
            return Err(Error::domain("block sizes do not sum to the target dimension"));
        }
        Ok(CoverSpec { target, t, ell, mode: CoverMode::BlockExact(structure) })
    }

    fn check_params(target: &TargetSet, t: u32, ell: u32) -> Result<()> {
        if t < 1 {
            return Err(Error::domain("cover multiplicity t must be at least 1"));
        }
        if ell >= t {
            return Err(Error::domain(format!("ell = {ell} must lie in [0, t-1]")));
        }
        let n = target.nvars();
        if n >= 64 {
            return Err(Error::bound("cover verification limited to n < 64"));
        }
        if target.point_count() == 1usize << n {
            return Err(Error::domain("exact covers require a proper subset of the cube"));
        }
        Ok(())
    }

    pub fn nvars(&self) -> usize {
        self.target.nvars()
    }
}

/// A candidate cover.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    Family(HyperplaneFamily),
    Polynomial(Polynomial),
}

impl Witness {
    pub fn nvars(&self) -> usize {
        match self {
            Witness::Family(f) => f.nvars(),
            Witness::Polynomial(p) => p.nvars(),
        }
    }

    /// Size for families, degree for polynomials.
    pub fn magnitude(&self) -> Option<u32> {
        match self {
            Witness::Family(f) => Some(f.len() as u32),
            Witness::Polynomial(p) => p.degree(),
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            Witness::Family(f) => f.to_json(),
            Witness::Polynomial(p) => p.to_json(),
        }
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        if v.get("hyperplanes").is_some() {
            Ok(Witness::Family(HyperplaneFamily::from_json(v)?))
        } else if v.get("nvars").is_some() {
            Ok(Witness::Polynomial(Polynomial::from_json(v)?))
        } else {
            Err(Error::parse("witness JSON is neither a family nor a polynomial"))
        }
    }
}

// --- Verification -------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub point: Vec<u8>,
    /// Block index for blockwise restriction failures.
    pub block: Option<usize>,
    pub got: String,
    pub want: String,
}

/// A hyperplane that vanishes at an off-target point but loses its block-j
/// variables upon restriction. Informational: the multiset cardinality
/// condition itself is preserved under restriction, but such members are
/// exactly the obstruction to reading the family product as a block-exact
/// polynomial cover.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseEvent {
    pub member: usize,
    pub block: usize,
    pub point: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub ok: bool,
    pub violations: Vec<Violation>,
    pub collapses: Vec<CollapseEvent>,
}

impl VerificationReport {
    fn passing() -> Self {
        VerificationReport { ok: true, violations: Vec::new(), collapses: Vec::new() }
    }

    fn fail(point: &[u8], block: Option<usize>, got: impl Into<String>, want: impl Into<String>) -> Violation {
        Violation { point: point.to_vec(), block, got: got.into(), want: want.into() }
    }
}

/// Multiplicity of P at a cube point is at least t: all derivatives of order
/// below t vanish.
fn poly_mult_at_least(p: &Polynomial, a: &[Rat], t: u32) -> bool {
    for s in 0..t {
        for alpha in poly::exponents_of_degree(p.nvars(), s) {
            if !p.derivative_at(&alpha, a).is_zero() {
                return false;
            }
        }
    }
    true
}

/// Multiplicity of P at a point is exactly l.
fn poly_mult_exactly(p: &Polynomial, a: &[Rat], l: u32) -> bool {
    if !poly_mult_at_least(p, a, l) {
        return false;
    }
    poly::exponents_of_degree(p.nvars(), l)
        .iter()
        .any(|alpha| !p.derivative_at(alpha, a).is_zero())
}

/// Exhaustive exact verification of a witness against a cover spec.
pub fn verify_cover(witness: &Witness, spec: &CoverSpec) -> VerificationReport {
    let n = spec.nvars();
    let mut report = VerificationReport::passing();
    if witness.nvars() != n {
        report.ok = false;
        report.violations.push(Violation {
            point: Vec::new(),
            block: None,
            got: format!("witness on {} variables", witness.nvars()),
            want: format!("witness on {n} variables"),
        });
        return report;
    }
    match witness {
        Witness::Family(f) => verify_family(f, spec, &mut report),
        Witness::Polynomial(p) => verify_polynomial(p, spec, &mut report),
    }
    report.ok = report.violations.is_empty();
    report
}

fn verify_family(f: &HyperplaneFamily, spec: &CoverSpec, report: &mut VerificationReport) {
    let n = spec.nvars();
    for x in sym::cube_points(n) {
        let inc = f.incidence_bits(&x);
        if spec.target.contains(&x) {
            if (inc as u32) < spec.t {
                report.violations.push(VerificationReport::fail(
                    &x,
                    None,
                    format!("incidence {inc}"),
                    format!("at least {}", spec.t),
                ));
            }
        } else if inc as u32 != spec.ell {
            report.violations.push(VerificationReport::fail(
                &x,
                None,
                format!("incidence {inc}"),
                format!("exactly {}", spec.ell),
            ));
        }
    }
    if let CoverMode::BlockExact(structure) = &spec.mode {
        // Nondegeneracy diagnostic: members vanishing at an off-target point
        // that restrict to constants on some block.
        for x in sym::cube_points(n) {
            if spec.target.contains(&x) {
                continue;
            }
            for j in 0..structure.k() {
                let range = structure.var_range(j);
                for (m, h) in f.items().iter().enumerate() {
                    if !h.vanishes_at_bits(&x) {
                        continue;
                    }
                    if h.coeffs()[range.clone()].iter().all(|c| c.is_zero()) {
                        report.collapses.push(CollapseEvent { member: m, block: j, point: x.clone() });
                    }
                }
            }
        }
    }
}

fn verify_polynomial(p: &Polynomial, spec: &CoverSpec, report: &mut VerificationReport) {
    let n = spec.nvars();
    if p.is_zero() {
        report.violations.push(Violation {
            point: Vec::new(),
            block: None,
            got: "zero polynomial".into(),
            want: "nonzero cover polynomial".into(),
        });
        return;
    }
    for x in sym::cube_points(n) {
        let a = bits_to_rat(&x);
        if spec.target.contains(&x) {
            if !poly_mult_at_least(p, &a, spec.t) {
                report.violations.push(VerificationReport::fail(
                    &x,
                    None,
                    "multiplicity below t".to_string(),
                    format!("multiplicity at least {}", spec.t),
                ));
            }
            continue;
        }
        match &spec.mode {
            CoverMode::Exact => {
                if !poly_mult_exactly(p, &a, spec.ell) {
                    report.violations.push(VerificationReport::fail(
                        &x,
                        None,
                        "off-target multiplicity differs".to_string(),
                        format!("multiplicity exactly {}", spec.ell),
                    ));
                }
            }
            CoverMode::BlockExact(structure) => {
                for j in 0..structure.k() {
                    let range = structure.var_range(j);
                    let fixed: Vec<Option<Rat>> = (0..n)
                        .map(|i| if range.contains(&i) { None } else { Some(a[i].clone()) })
                        .collect();
                    let restricted = p.partial_eval(&fixed);
                    if restricted.is_zero() {
                        report.violations.push(VerificationReport::fail(
                            &x,
                            Some(j),
                            "restriction is identically zero".to_string(),
                            format!("multiplicity exactly {}", spec.ell),
                        ));
                        continue;
                    }
                    if !poly_mult_exactly(&restricted, &a, spec.ell) {
                        report.violations.push(VerificationReport::fail(
                            &x,
                            Some(j),
                            "restricted multiplicity differs".to_string(),
                            format!("multiplicity exactly {}", spec.ell),
                        ));
                    }
                }
            }
        }
    }
}

// --- Fundamental hyperplane families -------------------------------------------

/// H'_w(X) = sum X_i - w for each w in the given weight set.
pub fn family_hprime(n: usize, weights: &[usize]) -> HyperplaneFamily {
    let mut fam = HyperplaneFamily::empty(n);
    let mut ws: Vec<usize> = weights.to_vec();
    ws.sort_unstable();
    ws.dedup();
    for w in ws {
        let coeffs = vec![rat(1); n];
        fam.push(Hyperplane::new(coeffs, rat(-(w as i64))).expect("nonzero coefficients"));
    }
    fam
}

/// The family {H*_{(i,j)} : j in [i]} with
/// H*_{(i,j)}(X) = sum_{k=1}^{n-j} X_k - (n-2i+j) X_{n-j+1} - (i-j).
/// Its zero pattern on the cube is exactly T_{n,i}.
pub fn family_hstar(n: usize, i: usize) -> Result<HyperplaneFamily> {
    if i > n.div_ceil(2) {
        return Err(Error::domain(format!("window index {i} exceeds ceil({n}/2)")));
    }
    let mut fam = HyperplaneFamily::empty(n);
    for j in 1..=i {
        let mut coeffs = vec![rat(0); n];
        for c in coeffs.iter_mut().take(n - j) {
            *c = rat(1);
        }
        coeffs[n - j] = rat(-((n as i64) - 2 * (i as i64) + (j as i64)));
        let constant = rat(-((i as i64) - (j as i64)));
        let h = Hyperplane::new(coeffs, constant).map_err(|_| {
            Error::domain(format!(
                "the form for (n,i,j)=({n},{i},{j}) degenerates to a constant"
            ))
        })?;
        fam.push(h);
    }
    Ok(fam)
}

/// m copies each of X_1 and X_1 - 1 (on the given ambient variable count).
pub fn family_hcirc(nvars: usize, m: usize) -> HyperplaneFamily {
    let mut fam = HyperplaneFamily::empty(nvars);
    for _ in 0..m {
        let mut c0 = vec![rat(0); nvars];
        c0[0] = rat(1);
        fam.push(Hyperplane::new(c0.clone(), rat(0)).expect("X1"));
        fam.push(Hyperplane::new(c0, rat(-1)).expect("X1 - 1"));
    }
    fam
}

/// Embeds a hyperplane on `width` variables into `total` variables at
/// `offset`.
fn embed_hyperplane(h: &Hyperplane, total: usize, offset: usize) -> Hyperplane {
    let mut coeffs = vec![rat(0); total];
    for (i, c) in h.coeffs().iter().enumerate() {
        coeffs[offset + i] = c.clone();
    }
    Hyperplane::new(coeffs, h.constant().clone()).expect("embedding preserves nonzeroness")
}

/// The blockwise family whose zero pattern within block variables is exactly
/// the given weight set `v`: H*_{mu(V)} joined with H'_{W(V) \ W_{n,mu(V)}}.
/// Vanishes at x iff |x| lies in W(V).
fn vanishing_family_for(v: &SymmetricSet) -> Result<HyperplaneFamily> {
    let n = v.n();
    let m = sym::mu(v);
    let mut fam = family_hstar(n, m)?;
    let window = sym::canonical_weight_window(n, m)?;
    let rest: Vec<usize> =
        v.weights().iter().copied().filter(|&w| !window.contains_weight(w)).collect();
    fam.extend(family_hprime(n, &rest));
    Ok(fam)
}

// --- Explicit constructions ------------------------------------------------------

/// The (t, t-1)-exact hyperplane cover of the complement of a nonempty
/// symmetric set S, of size lambda_bar(S) + 2t - 2.
pub fn construct_symmetric_cover(s: &SymmetricSet, t: u32) -> Result<HyperplaneFamily> {
    if s.is_empty() {
        return Err(Error::domain("the covered complement must omit a nonempty set"));
    }
    let mut fam = vanishing_family_for(&s.complement())?;
    fam.extend(family_hcirc(s.n(), (t - 1) as usize));
    debug_assert_eq!(fam.len(), sym::lambda_bar(s) + 2 * (t as usize) - 2);
    Ok(fam)
}

/// The (t, t-1)-block-exact hyperplane cover of the complement of a nonempty
/// k-wise grid, of size sum_j lambda_bar(S_j) + 2t - 2.
pub fn construct_grid_cover(
    structure: &BlockStructure,
    blocks: &[SymmetricSet],
    t: u32,
) -> Result<HyperplaneFamily> {
    if blocks.len() != structure.k() {
        return Err(Error::domain("one symmetric set per block required"));
    }
    let total = structure.total();
    let mut fam = HyperplaneFamily::empty(total);
    for (j, s) in blocks.iter().enumerate() {
        if s.is_empty() {
            return Err(Error::domain("grid blocks must be nonempty"));
        }
        if s.n() != structure.sizes()[j] {
            return Err(Error::domain("block dimension mismatch"));
        }
        let local = vanishing_family_for(&s.complement())?;
        let offset = structure.var_range(j).start;
        for h in local.items() {
            fam.push(embed_hyperplane(h, total, offset));
        }
    }
    fam.extend(family_hcirc(total, (t - 1) as usize));
    debug_assert_eq!(
        fam.len(),
        blocks.iter().map(sym::lambda_bar).sum::<usize>() + 2 * (t as usize) - 2
    );
    Ok(fam)
}

/// Degree-(2t-2) multiplicity boost for block-exact polynomial covers:
/// sum_j (X_{j,1} (X_{j,1} - 1))^{t-1}. At every cube point it vanishes with
/// multiplicity exactly t-1, and so does each of its single-block
/// restrictions; for k = 1 it is the product of the m-fold {X_1, X_1 - 1}
/// family.
pub fn multiplicity_booster(structure: &BlockStructure, t: u32) -> Polynomial {
    let total = structure.total();
    if t == 1 {
        return Polynomial::one(total);
    }
    let mut d = Polynomial::zero(total);
    for j in 0..structure.k() {
        let v = structure.var_range(j).start;
        let x = Polynomial::variable(total, v);
        let factor = x.mul(&x.sub(&Polynomial::one(total)));
        d = d.add(&factor.pow(t - 1));
    }
    d
}

/// Deterministic replacement for "choose scalars linearly independent over a
/// subfield": weight the summands by successive powers 1, M, M^2, ... of an
/// integer M, starting at M = 2 and doubling until `accept` holds. Each
/// acceptance condition excludes finitely many M, so the search terminates.
fn dominance_combination(
    terms: &[Polynomial],
    accept: impl Fn(&Polynomial) -> bool,
) -> Result<Polynomial> {
    if terms.is_empty() {
        return Err(Error::internal("no terms to combine"));
    }
    let nvars = terms[0].nvars();
    let mut m = rat(2);
    for _ in 0..64 {
        let mut sum = Polynomial::zero(nvars);
        let mut scale = Rat::from_integer(1.into());
        for term in terms {
            sum = sum.add(&term.scale(&scale));
            scale *= m.clone();
        }
        if accept(&sum) {
            return Ok(sum);
        }
        m = m.clone() * m;
    }
    Err(Error::internal("dominance scalar search exhausted"))
}

/// Which reading of the pseudo-downward-closed cover construction to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdcVariant {
    /// Sum over the maximal index tuples of N(S), with full prefix boxes.
    /// Verified before returning.
    Innext,
    /// The printed sum over the minimal non-members with index shift
    /// z_j - 1, kept for fidelity; its verification outcome is returned
    /// as-is and may be a failure.
    LiteralOutext,
}

/// Result of a pseudo-downward-closed cover construction.
#[derive(Debug, Clone)]
pub struct PdcCover {
    pub polynomial: Polynomial,
    pub report: VerificationReport,
    /// The degree the construction aims for (before verification).
    pub formula_degree: u32,
}

/// Degree formula for the innext reading:
/// max over maximal z of sum_j lambda_bar([S]_{j,z_j}), plus 2t-2.
pub fn pdc_formula_innext(s: &BlockSymmetricSet, cert: &PdcCertificate, t: u32) -> Result<u32> {
    let (innext, _) = block::poset_extremes(&cert.lattice.members, &cert.lattice.q);
    let mut best = 0usize;
    for z in &innext {
        let mut sum = 0usize;
        for j in 0..s.structure().k() {
            sum += sym::lambda_bar(&block::prefix_set(s, cert, j, z[j])?);
        }
        best = best.max(sum);
    }
    Ok(best as u32 + 2 * t - 2)
}

/// Degree formula for the literal printed reading:
/// max over minimal non-members z of sum_{j: z_j >= 1} lambda_bar([S]_{j,z_j-1}),
/// plus 2t-2.
pub fn pdc_formula_literal(s: &BlockSymmetricSet, cert: &PdcCertificate, t: u32) -> Result<u32> {
    let (_, outext) = block::poset_extremes(&cert.lattice.members, &cert.lattice.q);
    let mut best = 0usize;
    for z in &outext {
        let mut sum = 0usize;
        for j in 0..s.structure().k() {
            if z[j] >= 1 {
                // Minimal non-members stay within [0, q_j + 1], so z_j - 1 is
                // a valid prefix index.
                sum += sym::lambda_bar(&block::prefix_set(s, cert, j, z[j] - 1)?);
            }
        }
        best = best.max(sum);
    }
    Ok(best as u32 + 2 * t - 2)
}

/// Product over blocks of the per-block vanishing families for the given
/// per-block symmetric sets (None meaning "skip this block"), expanded as a
/// polynomial in the ambient variables.
fn blockwise_vanishing_product(
    structure: &BlockStructure,
    per_block: &[Option<SymmetricSet>],
) -> Result<Polynomial> {
    let total = structure.total();
    let mut p = Polynomial::one(total);
    for (j, v) in per_block.iter().enumerate() {
        let Some(v) = v else { continue };
        let local = vanishing_family_for(v)?;
        let offset = structure.var_range(j).start;
        for h in local.items() {
            p = p.mul(&embed_hyperplane(h, total, offset).to_polynomial());
        }
    }
    Ok(p)
}

/// The (t, t-1)-block-exact polynomial cover of the complement of a nonempty
/// PDC k-wise symmetric set.
///
/// The innext variant sums, over the maximal index tuples z of N(S), the
/// blockwise products vanishing exactly off the prefix box prod_j [S]_{j,z_j},
/// weighted by deterministic dominance scalars, then multiplies by the
/// blockwise multiplicity boost. The construction is verified before being
/// returned; a failure after scalar-search exhaustion is an internal error.
///
/// The literal-outext variant builds the printed sum over minimal non-members
/// with prefix index z_j - 1 and the m-fold {X_1, X_1-1} boost, and returns
/// it together with its verification outcome, which may be a failure: on the
/// 2x2 instance {(0,0),(0,1),(1,0)} the printed formula exceeds the true
/// minimum degree.
pub fn construct_pdc_polynomial_cover(
    s: &BlockSymmetricSet,
    cert: &PdcCertificate,
    t: u32,
    variant: PdcVariant,
) -> Result<PdcCover> {
    if s.is_empty() {
        return Err(Error::domain("the covered complement must omit a nonempty set"));
    }
    if block::pdc_under(s, &cert.orders).is_none() {
        return Err(Error::domain("set is not PDC under the given order choice"));
    }
    let structure = s.structure().clone();
    let k = structure.k();
    let (innext, outext) = block::poset_extremes(&cert.lattice.members, &cert.lattice.q);
    let terms: Vec<Polynomial> = match variant {
        PdcVariant::Innext => innext
            .iter()
            .map(|z| {
                let per: Result<Vec<Option<SymmetricSet>>> = (0..k)
                    .map(|j| {
                        block::prefix_set(s, cert, j, z[j]).map(|p| Some(p.complement()))
                    })
                    .collect();
                blockwise_vanishing_product(&structure, &per?)
            })
            .collect::<Result<Vec<_>>>()?,
        PdcVariant::LiteralOutext => outext
            .iter()
            .map(|z| {
                let per: Result<Vec<Option<SymmetricSet>>> = (0..k)
                    .map(|j| {
                        if z[j] >= 1 {
                            block::prefix_set(s, cert, j, z[j] - 1).map(|p| Some(p.complement()))
                        } else {
                            Ok(None)
                        }
                    })
                    .collect();
                blockwise_vanishing_product(&structure, &per?)
            })
            .collect::<Result<Vec<_>>>()?,
    };
    let formula_degree = match variant {
        PdcVariant::Innext => pdc_formula_innext(s, cert, t)?,
        PdcVariant::LiteralOutext => pdc_formula_literal(s, cert, t)?,
    };
    let max_term_degree =
        terms.iter().filter_map(|p| p.degree()).max().expect("at least one term");
    // Scalars are accepted when the weighted sum vanishes exactly where every
    // summand vanishes, with no degree loss to cancellation.
    let cube = sym::cube_points(structure.total());
    let sum = dominance_combination(&terms, |cand| {
        if cand.degree() != Some(max_term_degree) {
            return false;
        }
        cube.iter().all(|x| {
            let a = bits_to_rat(x);
            let all_zero = terms.iter().all(|term| term.eval(&a).is_zero());
            cand.eval(&a).is_zero() == all_zero
        })
    })?;
    let booster = match variant {
        PdcVariant::Innext => multiplicity_booster(&structure, t),
        PdcVariant::LiteralOutext => family_hcirc(structure.total(), (t - 1) as usize).product(),
    };
    let polynomial = sum.mul(&booster);
    let spec = CoverSpec::block_exact(
        TargetSet::Block(s.complement()),
        t,
        t - 1,
        structure.clone(),
    )?;
    let report = verify_cover(&Witness::Polynomial(polynomial.clone()), &spec);
    if variant == PdcVariant::Innext && !report.ok {
        return Err(Error::internal(
            "innext construction failed verification after scalar search",
        ));
    }
    Ok(PdcCover { polynomial, report, formula_degree })
}

/// The (t, t-1)-block-exact polynomial cover of a proper nonempty k-wise grid
/// itself, of degree max over proper blocks of lambda(S_j), plus 2t-2. Full
/// blocks impose no constraint and are skipped.
pub fn construct_grid_self_cover(
    structure: &BlockStructure,
    blocks: &[SymmetricSet],
    t: u32,
) -> Result<Polynomial> {
    if blocks.len() != structure.k() {
        return Err(Error::domain("one symmetric set per block required"));
    }
    if blocks.iter().any(|s| s.is_empty()) {
        return Err(Error::domain("grid blocks must be nonempty"));
    }
    if blocks.iter().all(|s| s.is_full()) {
        return Err(Error::domain("covering the full cube is not an exact cover problem"));
    }
    let total = structure.total();
    let proper: Vec<usize> = (0..blocks.len()).filter(|&j| !blocks[j].is_full()).collect();
    let terms: Vec<Polynomial> = proper
        .iter()
        .map(|&j| {
            let mut per: Vec<Option<SymmetricSet>> = vec![None; blocks.len()];
            per[j] = Some(blocks[j].clone());
            blockwise_vanishing_product(structure, &per)
        })
        .collect::<Result<Vec<_>>>()?;
    let expected_degree =
        proper.iter().map(|&j| sym::lambda_measure(&blocks[j]) as u32).max().unwrap();
    let grid = BlockSymmetricSet::grid(structure.clone(), blocks)?;
    let cube = sym::cube_points(total);
    let sum = dominance_combination(&terms, |cand| {
        if cand.degree() != Some(expected_degree) {
            return false;
        }
        cube.iter().all(|x| {
            let a = bits_to_rat(x);
            cand.eval(&a).is_zero() == grid.contains_point(x)
        })
    })?;
    Ok(sum.mul(&multiplicity_booster(structure, t)))
}

/// Symmetrization of a base cover: given a (t,0)-exact polynomial cover Q of
/// {0,1}^w minus the all-ones point, of degree w + 2t - 3, returns
/// sum over w-subsets {i_1 < ... < i_w} of Q(X_{i_1}, ..., X_{i_w}), a
/// (t,0)-exact cover of the Hamming ball of weights [0, w-1] in {0,1}^n at
/// the same degree.
pub fn construct_hamming_ball_cover(
    n: usize,
    w: usize,
    t: u32,
    base: &Polynomial,
) -> Result<Polynomial> {
    if w < 1 || w >= n {
        return Err(Error::domain("hamming ball parameter w must lie in [1, n-1]"));
    }
    if t < 2 || (t as usize) > (n + 3) / 2 {
        return Err(Error::domain("hamming ball cover requires t in [2, (n+3)/2]"));
    }
    if base.nvars() != w {
        return Err(Error::domain("base cover must live on w variables"));
    }
    let expected = (w as u32) + 2 * t - 3;
    if base.degree() != Some(expected) {
        return Err(Error::domain(format!("base cover must have degree {expected}")));
    }
    let ones = vec![1u8; w];
    let hole = PointSet::new(w, [ones]).expect("valid point");
    let base_spec = CoverSpec::exact(TargetSet::Points(hole.complement()), t, 0)?;
    let base_report = verify_cover(&Witness::Polynomial(base.clone()), &base_spec);
    if !base_report.ok {
        return Err(Error::domain("base polynomial fails its own cover verification"));
    }
    let mut total = Polynomial::zero(n);
    for subset in sym::subsets_of_size(n, w) {
        // rename variable i of the base to subset[i] - 1
        let renamed = Polynomial::from_terms(
            n,
            base.terms().map(|(e, c)| {
                let mut e2 = vec![0u32; n];
                for (i, &k) in e.iter().enumerate() {
                    e2[subset[i] - 1] = k;
                }
                (e2, c.clone())
            }),
        )?;
        total = total.add(&renamed);
    }
    Ok(total)
}

/// The degree-t power cover (sum X_i - w)^t of a single layer: multiplicity
/// at least t on the layer, nonzero at every other cube point.
pub fn construct_layer_power_cover(n: usize, w: usize, t: u32) -> Result<Polynomial> {
    if w > n {
        return Err(Error::domain(format!("layer weight {w} exceeds dimension {n}")));
    }
    let mut plane = Polynomial::constant(n, rat(-(w as i64)));
    for i in 0..n {
        plane = plane.add(&Polynomial::variable(n, i));
    }
    Ok(plane.pow(t))
}

/// Views a cover of S in n-m variables as a cover of {0,1}^m x S in n
/// variables (the same forms on the last n-m coordinates).
pub fn lift_subcube_cover(f: &HyperplaneFamily, m: usize) -> HyperplaneFamily {
    let mut out = HyperplaneFamily::empty(f.nvars() + m);
    for h in f.items() {
        out.push(h.lift_prefix(m));
    }
    out
}

/// Substitutes 0 for the first m coordinates of every member. A member whose
/// restriction is a constant is a collapse and is reported as an error.
pub fn restrict_subcube_cover(f: &HyperplaneFamily, m: usize) -> Result<HyperplaneFamily> {
    if m > f.nvars() {
        return Err(Error::domain("restriction exceeds variable count"));
    }
    let mut out = HyperplaneFamily::empty(f.nvars() - m);
    for (i, h) in f.items().iter().enumerate() {
        let r = h.restrict_prefix_zero(m).map_err(|_| {
            Error::domain(format!("member {i} collapses to a constant under restriction"))
        })?;
        out.push(r);
    }
    Ok(out)
}

// --- JSON wire formats ---------------------------------------------------------

impl CoverSpec {
    pub fn to_json(&self) -> serde_json::Value {
        let mut v = serde_json::json!({
            "target": serde_json::to_value(&self.target).expect("target serializes"),
            "t": self.t,
            "ell": self.ell,
        });
        match &self.mode {
            CoverMode::Exact => {
                v["mode"] = "exact".into();
            }
            CoverMode::BlockExact(s) => {
                v["mode"] = "block-exact".into();
                v["sizes"] = serde_json::to_value(s.sizes()).expect("sizes serialize");
            }
        }
        v
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let target: TargetSet = serde_json::from_value(
            v.get("target").cloned().ok_or_else(|| Error::parse("spec requires target"))?,
        )
        .map_err(|e| Error::parse(format!("target: {e}")))?;
        let t = v.get("t").and_then(|x| x.as_u64()).ok_or_else(|| Error::parse("spec requires t"))?;
        let ell =
            v.get("ell").and_then(|x| x.as_u64()).ok_or_else(|| Error::parse("spec requires ell"))?;
        let mode = v.get("mode").and_then(|m| m.as_str()).unwrap_or("exact");
        match mode {
            "exact" => CoverSpec::exact(target, t as u32, ell as u32),
            "block-exact" => {
                let sizes: Vec<usize> = match v.get("sizes") {
                    Some(s) => serde_json::from_value(s.clone())
                        .map_err(|e| Error::parse(format!("sizes: {e}")))?,
                    None => match &target {
                        TargetSet::Block(b) => b.structure().sizes().to_vec(),
                        _ => return Err(Error::parse("block-exact spec requires sizes")),
                    },
                };
                CoverSpec::block_exact(target, t as u32, ell as u32, BlockStructure::new(sizes)?)
            }
            other => Err(Error::parse(format!("unknown mode {other:?}"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::block::pdc_check;

    fn sset(n: usize, ws: &[usize]) -> SymmetricSet {
        SymmetricSet::new(n, ws.iter().copied()).unwrap()
    }

    #[test]
    fn hprime_zero_pattern() {
        let fam = family_hprime(3, &[1]);
        for x in sym::cube_points(3) {
            let w = x.iter().filter(|&&b| b != 0).count();
            assert_eq!(fam.incidence_bits(&x), usize::from(w == 1));
        }
        assert!(family_hprime(4, &[]).is_empty());
        let fam = family_hprime(4, &[0, 4]);
        for x in sym::cube_points(4) {
            let w = x.iter().filter(|&&b| b != 0).count();
            assert_eq!(fam.incidence_bits(&x) > 0, w == 0 || w == 4);
        }
    }

    #[test]
    fn hstar_zero_pattern_is_exactly_t_ni() {
        // i = 0 gives the empty family
        assert!(family_hstar(5, 0).unwrap().is_empty());
        // n=4, i=1: the single form X1+X2+X3-3X4 vanishing on {0000, 1111}
        let fam = family_hstar(4, 1).unwrap();
        assert_eq!(fam.len(), 1);
        let h = &fam.items()[0];
        assert_eq!(h.coeffs()[..3], vec![rat(1), rat(1), rat(1)][..]);
        assert_eq!(h.coeffs()[3], rat(-3));
        for x in sym::cube_points(4) {
            let w = x.iter().filter(|&&b| b != 0).count();
            assert_eq!(h.vanishes_at_bits(&x), w == 0 || w == 4);
        }
        // exhaustive zero-pattern check for all n <= 10 (the acceptance suite
        // repeats this as a criterion)
        for n in 2..=10usize {
            for i in 0..=n.div_ceil(2) {
                let fam = family_hstar(n, i).unwrap();
                let t_ni = sym::canonical_weight_window(n, i).unwrap();
                for x in sym::cube_points(n) {
                    let covered = fam.incidence_bits(&x) > 0;
                    assert_eq!(covered, t_ni.contains_point(&x), "n={n} i={i} x={x:?}");
                }
            }
        }
    }

    #[test]
    fn hstar_degenerate_case_errors() {
        // n=1, i=1: the defining form is identically zero
        assert!(family_hstar(1, 1).is_err());
    }

    #[test]
    fn hstar_i2_matches_lemma_forms() {
        // H*_{(2,1)} = sum_{i<n} X_i - (n-3) X_n - 1;
        // H*_{(2,2)} = sum_{i<n-1} X_i - (n-2) X_{n-1}
        for n in 4..=7usize {
            let fam = family_hstar(n, 2).unwrap();
            assert_eq!(fam.len(), 2);
            let h1 = &fam.items()[0];
            assert_eq!(h1.coeffs()[n - 1], rat(-((n as i64) - 3)));
            assert_eq!(*h1.constant(), rat(-1));
            let h2 = &fam.items()[1];
            assert_eq!(h2.coeffs()[n - 2], rat(-((n as i64) - 2)));
            assert_eq!(*h2.constant(), rat(0));
        }
    }

    #[test]
    fn hcirc_incidence() {
        assert!(family_hcirc(3, 0).is_empty());
        let fam = family_hcirc(3, 1);
        for x in sym::cube_points(3) {
            assert_eq!(fam.incidence_bits(&x), 1);
        }
        let fam = family_hcirc(2, 3);
        assert_eq!(fam.len(), 6);
        for x in sym::cube_points(2) {
            assert_eq!(fam.incidence_bits(&x), 3);
        }
    }

    #[test]
    fn symmetric_cover_verifies() {
        // layer {1} in n=3, t=1: two planes
        let s = sset(3, &[1]);
        let fam = construct_symmetric_cover(&s, 1).unwrap();
        assert_eq!(fam.len(), 2);
        let spec = CoverSpec::exact(TargetSet::Sym(s.complement()), 1, 0).unwrap();
        assert!(verify_cover(&Witness::Family(fam), &spec).ok);

        // complement of T_{5,2}, t=1: size 2
        let t52 = sym::canonical_weight_window(5, 2).unwrap();
        let s = t52.complement();
        let fam = construct_symmetric_cover(&s, 1).unwrap();
        assert_eq!(fam.len(), 2);
        let spec = CoverSpec::exact(TargetSet::Sym(t52), 1, 0).unwrap();
        assert!(verify_cover(&Witness::Family(fam), &spec).ok);

        // layer {2} in n=4, t=2: size 4
        let s = sset(4, &[2]);
        let fam = construct_symmetric_cover(&s, 2).unwrap();
        assert_eq!(fam.len(), 4);
        let spec = CoverSpec::exact(TargetSet::Sym(s.complement()), 2, 1).unwrap();
        assert!(verify_cover(&Witness::Family(fam), &spec).ok);
    }

    #[test]
    fn symmetric_cover_size_and_verification_sweep() {
        for n in 1..=5usize {
            for t in 1..=3u32 {
                for s in sym::all_symmetric_sets(n) {
                    if s.is_empty() {
                        continue;
                    }
                    let fam = construct_symmetric_cover(&s, t).unwrap();
                    assert_eq!(fam.len(), sym::lambda_bar(&s) + 2 * t as usize - 2);
                    let spec =
                        CoverSpec::exact(TargetSet::Sym(s.complement()), t, t - 1).unwrap();
                    assert!(verify_cover(&Witness::Family(fam), &spec).ok, "n={n} t={t} {s:?}");
                }
            }
        }
    }

    #[test]
    fn hcirc_is_not_an_exact_cover_of_a_punctured_cube() {
        // every cube point lies on exactly one member, so the off-target
        // condition ell = 0 fails
        let fam = family_hcirc(2, 1);
        let target = PointSet::new(2, sym::cube_points(2).into_iter().skip(1)).unwrap();
        let spec = CoverSpec::exact(TargetSet::Points(target), 1, 0).unwrap();
        let report = verify_cover(&Witness::Family(fam), &spec);
        assert!(!report.ok);
        assert!(!report.violations.is_empty());
    }

    #[test]
    fn grid_cover_block_exact() {
        // subcube case: S = {0,1}^1 x {0}, planes {X2-1, X3-1} u hcirc
        let structure = BlockStructure::new(vec![1, 2]).unwrap();
        let blocks = vec![sset(1, &[0, 1]), sset(2, &[0])];
        for t in 1..=2u32 {
            let fam = construct_grid_cover(&structure, &blocks, t).unwrap();
            assert_eq!(fam.len(), 2 + 2 * t as usize - 2);
            let grid = BlockSymmetricSet::grid(structure.clone(), &blocks).unwrap();
            let spec = CoverSpec::block_exact(
                TargetSet::Block(grid.complement()),
                t,
                t - 1,
                structure.clone(),
            )
            .unwrap();
            let report = verify_cover(&Witness::Family(fam), &spec);
            assert!(report.ok, "t={t}: {:?}", report.violations);
        }
    }

    #[test]
    fn grid_cover_1x1_instance() {
        let structure = BlockStructure::new(vec![1, 1]).unwrap();
        let blocks = vec![sset(1, &[1]), sset(1, &[1])];
        let fam = construct_grid_cover(&structure, &blocks, 1).unwrap();
        assert_eq!(fam.len(), 2);
        let grid = BlockSymmetricSet::grid(structure.clone(), &blocks).unwrap();
        let spec =
            CoverSpec::block_exact(TargetSet::Block(grid.complement()), 1, 0, structure).unwrap();
        assert!(verify_cover(&Witness::Family(fam), &spec).ok);
    }

    #[test]
    fn booster_multiplicities() {
        let structure = BlockStructure::new(vec![2, 1]).unwrap();
        for t in 1..=3u32 {
            let d = multiplicity_booster(&structure, t);
            assert_eq!(d.degree(), Some(2 * t - 2));
            for x in sym::cube_points(3) {
                let a = bits_to_rat(&x);
                assert_eq!(d.multiplicity_exact(&a).unwrap(), t - 1);
            }
        }
    }

    #[test]
    fn pdc_cover_2x2_instance() {
        // tuples {(0,0),(0,1),(1,0)}: innext degree 1 verifies; the literal
        // printed variant has degree 2 and fails verification
        let structure = BlockStructure::new(vec![1, 1]).unwrap();
        let s = BlockSymmetricSet::new(
            structure.clone(),
            [vec![0, 0], vec![0, 1], vec![1, 0]],
        )
        .unwrap();
        let cert = pdc_check(&s).unwrap();
        let inn = construct_pdc_polynomial_cover(&s, &cert, 1, PdcVariant::Innext).unwrap();
        assert!(inn.report.ok);
        assert_eq!(inn.formula_degree, 1);
        assert_eq!(inn.polynomial.degree(), Some(1));

        let lit =
            construct_pdc_polynomial_cover(&s, &cert, 1, PdcVariant::LiteralOutext).unwrap();
        assert_eq!(lit.formula_degree, 2);
        assert!(!lit.report.ok);
    }

    #[test]
    fn pdc_cover_grid_reduces_to_sum_formula() {
        // for a k-wise grid, innext is the full box corner and the formula is
        // the sum of the per-block barred measures
        let structure = BlockStructure::new(vec![2, 1]).unwrap();
        let blocks = vec![sset(2, &[0]), sset(1, &[0])];
        let grid = BlockSymmetricSet::grid(structure.clone(), &blocks).unwrap();
        let cert = pdc_check(&grid).unwrap();
        for t in 1..=2u32 {
            let cover = construct_pdc_polynomial_cover(&grid, &cert, t, PdcVariant::Innext).unwrap();
            assert!(cover.report.ok, "t={t}");
            let expected: u32 =
                blocks.iter().map(|b| sym::lambda_bar(b) as u32).sum::<u32>() + 2 * t - 2;
            assert_eq!(cover.formula_degree, expected);
            assert_eq!(cover.polynomial.degree(), Some(expected));
        }
    }

    #[test]
    fn grid_self_cover_examples() {
        // 1x1 grid {1}x{1}: degree 1 mix of X1-1 and X2-1
        let structure = BlockStructure::new(vec![1, 1]).unwrap();
        let blocks = vec![sset(1, &[1]), sset(1, &[1])];
        let p = construct_grid_self_cover(&structure, &blocks, 1).unwrap();
        assert_eq!(p.degree(), Some(1));
        let grid = BlockSymmetricSet::grid(structure.clone(), &blocks).unwrap();
        let spec =
            CoverSpec::block_exact(TargetSet::Block(grid), 1, 0, structure).unwrap();
        assert!(verify_cover(&Witness::Polynomial(p), &spec).ok);

        // subcube {0,1}^2 x {1}: full block skipped, degree lambda({1} in n=1)
        let structure = BlockStructure::new(vec![2, 1]).unwrap();
        let blocks = vec![SymmetricSet::full(2), sset(1, &[1])];
        for t in 1..=2u32 {
            let p = construct_grid_self_cover(&structure, &blocks, t).unwrap();
            assert_eq!(p.degree(), Some(1 + 2 * t - 2));
            let grid = BlockSymmetricSet::grid(structure.clone(), &blocks).unwrap();
            let spec = CoverSpec::block_exact(TargetSet::Block(grid), t, t - 1, structure.clone())
                .unwrap();
            let report = verify_cover(&Witness::Polynomial(p), &spec);
            assert!(report.ok, "t={t}: {:?}", report.violations);
        }
    }

    #[test]
    fn layer_power_cover_verifies() {
        for n in 1..=4usize {
            for w in 0..=n {
                for t in 1..=3u32 {
                    let p = construct_layer_power_cover(n, w, t).unwrap();
                    assert_eq!(p.degree(), Some(t));
                    let layer = SymmetricSet::layer(n, w).unwrap();
                    let spec = CoverSpec::exact(TargetSet::Sym(layer.clone()), t, 0).unwrap();
                    assert!(verify_cover(&Witness::Polynomial(p.clone()), &spec).ok);
                    // multiplicity on the layer is exactly t
                    for x in sym::cube_points(n) {
                        if layer.contains_point(&x) {
                            assert_eq!(p.multiplicity_exact(&bits_to_rat(&x)).unwrap(), t);
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn hamming_ball_cover_small() {
        // n=3, w=1, t=2: base X1^2 on one variable, symmetrized to
        // X1^2+X2^2+X3^2 covering the origin with multiplicity 2
        let base = Polynomial::variable(1, 0).pow(2);
        let q = construct_hamming_ball_cover(3, 1, 2, &base).unwrap();
        assert_eq!(q.degree(), Some(2));
        let ball = sset(3, &[0]);
        let spec = CoverSpec::exact(TargetSet::Sym(ball), 2, 0).unwrap();
        assert!(verify_cover(&Witness::Polynomial(q), &spec).ok);

        // a base failing its own verification is rejected
        let bad = Polynomial::variable(1, 0).pow(1);
        assert!(construct_hamming_ball_cover(3, 1, 2, &bad).is_err());
    }

    #[test]
    fn lift_restrict_round_trip() {
        let s = sset(2, &[1]);
        let fam = construct_symmetric_cover(&s.complement(), 2).unwrap();
        let lifted = lift_subcube_cover(&fam, 2);
        assert_eq!(lifted.nvars(), 4);
        assert_eq!(lifted.len(), fam.len());
        let back = restrict_subcube_cover(&lifted, 2).unwrap();
        assert_eq!(back, fam);

        // restriction of {X1 - X3} at 0^2 keeps the affine form -X3
        let h = Hyperplane::from_ints(&[1, 0, -1], 0).unwrap();
        let fam = HyperplaneFamily::from_items(3, vec![h]).unwrap();
        let r = restrict_subcube_cover(&fam, 2).unwrap();
        assert_eq!(r.items()[0].coeffs()[0], rat(-1));

        // collapse is reported
        let h = Hyperplane::from_ints(&[1, 0], -1).unwrap();
        let fam = HyperplaneFamily::from_items(2, vec![h]).unwrap();
        assert!(restrict_subcube_cover(&fam, 1).is_err());
    }

    #[test]
    fn lifted_cover_verifies_for_prism() {
        // a (t,t-1)-exact cover of S lifts to one of {0,1}^m x S
        for t in 1..=2u32 {
            let s = sset(2, &[1]);
            let cover = construct_symmetric_cover(&s.complement(), t).unwrap();
            let spec = CoverSpec::exact(TargetSet::Sym(s.clone()), t, t - 1).unwrap();
            assert!(verify_cover(&Witness::Family(cover.clone()), &spec).ok);

            let m = 2;
            let lifted = lift_subcube_cover(&cover, m);
            let structure = BlockStructure::new(vec![m, 2]).unwrap();
            let prism = BlockSymmetricSet::grid(
                structure.clone(),
                &[SymmetricSet::full(m), s],
            )
            .unwrap();
            let spec = CoverSpec::exact(TargetSet::Block(prism), t, t - 1).unwrap();
            assert!(verify_cover(&Witness::Family(lifted), &spec).ok, "t={t}");
        }
    }

    #[test]
    fn family_product_implication_exact_mode() {
        // whenever a family passes a (t, ell)-exact spec, its product passes
        // the matching polynomial spec
        for n in 1..=3usize {
            for s in sym::all_symmetric_sets(n) {
                if s.is_empty() {
                    continue;
                }
                for t in 1..=3u32 {
                    let fam = construct_symmetric_cover(&s, t).unwrap();
                    let spec =
                        CoverSpec::exact(TargetSet::Sym(s.complement()), t, t - 1).unwrap();
                    let fr = verify_cover(&Witness::Family(fam.clone()), &spec);
                    assert!(fr.ok);
                    let pr = verify_cover(&Witness::Polynomial(fam.product()), &spec);
                    assert!(pr.ok, "n={n} t={t} {s:?}: {:?}", pr.violations);
                }
            }
        }
    }

    #[test]
    fn block_polynomial_restriction_failure_is_detected() {
        // the m-fold {X1, X1-1} boost makes block-2 restrictions identically
        // zero at t = 2, so the family product is not a block-exact
        // polynomial cover even though the family passes the incidence checks
        let structure = BlockStructure::new(vec![1, 1]).unwrap();
        let blocks = vec![sset(1, &[1]), sset(1, &[1])];
        let fam = construct_grid_cover(&structure, &blocks, 2).unwrap();
        let grid = BlockSymmetricSet::grid(structure.clone(), &blocks).unwrap();
        let spec = CoverSpec::block_exact(
            TargetSet::Block(grid.complement()),
            2,
            1,
            structure.clone(),
        )
        .unwrap();
        let fr = verify_cover(&Witness::Family(fam.clone()), &spec);
        assert!(fr.ok);
        assert!(!fr.collapses.is_empty());
        let pr = verify_cover(&Witness::Polynomial(fam.product()), &spec);
        assert!(!pr.ok);
    }

    #[test]
    fn cover_spec_json_round_trip() {
        let spec = CoverSpec::exact(TargetSet::Sym(sset(3, &[0, 1])), 2, 1).unwrap();
        let j = spec.to_json();
        assert_eq!(CoverSpec::from_json(&j).unwrap(), spec);

        let structure = BlockStructure::new(vec![1, 1]).unwrap();
        let s = BlockSymmetricSet::new(structure.clone(), [vec![1, 1]]).unwrap();
        let spec = CoverSpec::block_exact(TargetSet::Block(s), 1, 0, structure).unwrap();
        let j = spec.to_json();
        assert_eq!(CoverSpec::from_json(&j).unwrap(), spec);
    }
}
