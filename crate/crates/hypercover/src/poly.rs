//! Sparse multivariate polynomials over the rationals, with the partial
//! derivative and multiplicity-of-vanishing machinery the cover definitions
//! need, plus affine forms (hyperplanes) and multisets of them.
//!
//! Coefficients are exact `BigRational`s throughout; rank and vanishing
//! decisions downstream must never be thresholded.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Rat = num_rational::BigRational;

/// Integer-valued rational.
pub fn rat(x: i64) -> Rat {
    Rat::from_integer(BigInt::from(x))
}

/// Parses "p/q" or "p".
pub fn rat_from_str(s: &str) -> Result<Rat> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n: BigInt = num
        .parse()
        .map_err(|_| Error::parse(format!("bad rational numerator {num:?}")))?;
    let d: BigInt = den
        .parse()
        .map_err(|_| Error::parse(format!("bad rational denominator {den:?}")))?;
    if d.is_zero() {
        return Err(Error::parse("rational with zero denominator"));
    }
    Ok(Rat::new(n, d))
}

/// Renders a rational as "p" or "p/q" (reduced, positive denominator).
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Exponent vectors of length `nvars` with total degree exactly `total`,
/// in lexicographic order.
pub fn exponents_of_degree(nvars: usize, total: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fn rec(cur: &mut Vec<u32>, i: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(cur.clone());
            return;
        }
        for v in (0..=left).rev() {
            cur[i] = v;
            rec(cur, i + 1, left - v, out);
        }
    }
    if nvars == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(&mut cur, 0, total, &mut out);
    out
}

/// All exponent vectors with total degree at most `max_total`, graded lex.
pub fn exponents_up_to(nvars: usize, max_total: u32) -> Vec<Vec<u32>> {
    (0..=max_total)
        .flat_map(|d| exponents_of_degree(nvars, d))
        .collect()
}

/// Result of a capped multiplicity query.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Multiplicity {
    Exact(u32),
    /// All derivatives of order <= cap vanish; the true multiplicity is at
    /// least this value (cap + 1).
    AtLeast(u32),
}

/// Sparse polynomial: exponent vector -> nonzero rational coefficient.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Polynomial {
    nvars: usize,
    terms: BTreeMap<Vec<u32>, Rat>,
}

impl Polynomial {
    pub fn zero(nvars: usize) -> Self {
        Polynomial { nvars, terms: BTreeMap::new() }
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Polynomial::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    pub fn one(nvars: usize) -> Self {
        Polynomial::constant(nvars, Rat::one())
    }

    /// The monomial X_i.
    pub fn variable(nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        let mut e = vec![0u32; nvars];
        e[i] = 1;
        let mut p = Polynomial::zero(nvars);
        p.terms.insert(e, Rat::one());
        p
    }

    pub fn from_terms(
        nvars: usize,
        terms: impl IntoIterator<Item = (Vec<u32>, Rat)>,
    ) -> Result<Self> {
        let mut p = Polynomial::zero(nvars);
        for (e, c) in terms {
            if e.len() != nvars {
                return Err(Error::domain(format!(
                    "exponent vector length {} does not match nvars {}",
                    e.len(),
                    nvars
                )));
            }
            p.add_term(e, c);
        }
        Ok(p)
    }

    fn add_term(&mut self, e: Vec<u32>, c: Rat) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().clone() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rat)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn coeff(&self, e: &[u32]) -> Rat {
        self.terms.get(e).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Polynomial {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -std::mem::replace(c, Rat::zero());
        }
        out
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn scale(&self, s: &Rat) -> Polynomial {
        if s.is_zero() {
            return Polynomial::zero(self.nvars);
        }
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = &*c * s;
        }
        out
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        assert_eq!(self.nvars, other.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut out = Polynomial::one(self.nvars);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        assert_eq!(point.len(), self.nvars);
        let mut acc = Rat::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (i, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    t = t * &point[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Partial evaluation: variables with `Some(v)` are fixed to v, the rest
    /// stay symbolic. The variable count is unchanged.
    pub fn partial_eval(&self, fixed: &[Option<Rat>]) -> Polynomial {
        assert_eq!(fixed.len(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut ne = e.clone();
            for (i, f) in fixed.iter().enumerate() {
                if let Some(v) = f {
                    for _ in 0..e[i] {
                        coef = coef * v;
                    }
                    ne[i] = 0;
                }
                if coef.is_zero() {
                    break;
                }
            }
            out.add_term(ne, coef);
        }
        out
    }

    /// Formal partial derivative of order alpha.
    pub fn derivative(&self, alpha: &[u32]) -> Result<Polynomial> {
        if alpha.len() != self.nvars {
            return Err(Error::domain(format!(
                "derivative order vector length {} does not match nvars {}",
                alpha.len(),
                self.nvars
            )));
        }
        let mut out = Polynomial::zero(self.nvars);
        'term: for (e, c) in &self.terms {
            let mut coef = c.clone();
            let mut ne = e.clone();
            for i in 0..self.nvars {
                if e[i] < alpha[i] {
                    continue 'term;
                }
                for k in 0..alpha[i] {
                    coef = coef * rat((e[i] - k) as i64);
                }
                ne[i] = e[i] - alpha[i];
            }
            out.add_term(ne, coef);
        }
        Ok(out)
    }

    /// (d^alpha P)(a) computed termwise, without materializing the derivative.
    pub fn derivative_at(&self, alpha: &[u32], a: &[Rat]) -> Rat {
        assert_eq!(alpha.len(), self.nvars);
        assert_eq!(a.len(), self.nvars);
        let mut acc = Rat::zero();
        'term: for (e, c) in &self.terms {
            let mut t = c.clone();
            for i in 0..self.nvars {
                if e[i] < alpha[i] {
                    continue 'term;
                }
                for k in 0..alpha[i] {
                    t = t * rat((e[i] - k) as i64);
                }
                let rem = e[i] - alpha[i];
                if rem > 0 {
                    if a[i].is_zero() {
                        continue 'term;
                    }
                    for _ in 0..rem {
                        t = t * &a[i];
                    }
                }
            }
            acc += t;
        }
        acc
    }

    /// Taylor coefficients about `a`: the returned term map sends alpha to
    /// (d^alpha P)(a) / alpha!, i.e. P(X) = sum c_alpha (X - a)^alpha.
    /// `expand_about` is the inverse.
    pub fn taylor_shift(&self, a: &[Rat]) -> Polynomial {
        assert_eq!(a.len(), self.nvars);
        // Substitute X_i -> Y_i + a_i term by term.
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut factors = Polynomial::constant(self.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if a[i].is_zero() {
                    let mut shift = vec![0u32; self.nvars];
                    shift[i] = k;
                    factors = factors.mul(&Polynomial::from_terms(
                        self.nvars,
                        [(shift, Rat::one())],
                    ).expect("valid term"));
                    continue;
                }
                // (Y_i + a_i)^k via binomial expansion.
                let mut bin = Polynomial::zero(self.nvars);
                let mut coef = Rat::one();
                for j in 0..=k {
                    // C(k, j) * a_i^{k-j} * Y_i^j
                    let mut e2 = vec![0u32; self.nvars];
                    e2[i] = j;
                    let mut t = coef.clone();
                    for _ in 0..(k - j) {
                        t = t * &a[i];
                    }
                    bin.add_term(e2, t);
                    // update C(k, j) -> C(k, j+1)
                    coef = coef * rat((k - j) as i64) / rat((j + 1) as i64);
                }
                factors = factors.mul(&bin);
            }
            out = out.add(&factors);
        }
        out
    }

    /// Expands a term map interpreted in the (X - a)^alpha basis back to the
    /// monomial basis.
    pub fn expand_about(&self, a: &[Rat]) -> Polynomial {
        assert_eq!(a.len(), self.nvars);
        let mut out = Polynomial::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut factors = Polynomial::constant(self.nvars, c.clone());
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                let xi = Polynomial::variable(self.nvars, i)
                    .sub(&Polynomial::constant(self.nvars, a[i].clone()));
                factors = factors.mul(&xi.pow(k));
            }
            out = out.add(&factors);
        }
        out
    }

    /// Multiplicity of vanishing at `a`, by scanning derivative orders
    /// 0..=cap. Errors on the zero polynomial (multiplicity undefined).
    pub fn multiplicity_at(&self, a: &[Rat], cap: u32) -> Result<Multiplicity> {
        if self.is_zero() {
            return Err(Error::domain(
                "multiplicity of the zero polynomial is undefined",
            ));
        }
        for s in 0..=cap {
            for alpha in exponents_of_degree(self.nvars, s) {
                if !self.derivative_at(&alpha, a).is_zero() {
                    return Ok(Multiplicity::Exact(s));
                }
            }
        }
        Ok(Multiplicity::AtLeast(cap + 1))
    }

    /// Exact multiplicity at `a` via the Taylor route: the least total degree
    /// with a nonzero coefficient in the expansion about `a`. Errors on the
    /// zero polynomial.
    pub fn multiplicity_exact(&self, a: &[Rat]) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::domain(
                "multiplicity of the zero polynomial is undefined",
            ));
        }
        let shifted = self.taylor_shift(a);
        Ok(shifted
            .terms
            .keys()
            .map(|e| e.iter().sum::<u32>())
            .min()
            .expect("nonzero polynomial has a term"))
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in &self.terms {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "{}", rat_to_string(c))?;
            for (i, &k) in e.iter().enumerate() {
                if k == 1 {
                    write!(f, "*X{}", i + 1)?;
                } else if k > 1 {
                    write!(f, "*X{}^{}", i + 1, k)?;
                }
            }
        }
        Ok(())
    }
}

/// Affine linear form c_1 X_1 + ... + c_n X_n + c_0 with some c_i != 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hyperplane {
    coeffs: Vec<Rat>,
    constant: Rat,
}

impl Hyperplane {
    pub fn new(coeffs: Vec<Rat>, constant: Rat) -> Result<Self> {
        if coeffs.iter().all(|c| c.is_zero()) {
            return Err(Error::domain(
                "hyperplane requires a nonzero linear coefficient",
            ));
        }
        Ok(Hyperplane { coeffs, constant })
    }

    /// Integer-coefficient convenience constructor.
    pub fn from_ints(coeffs: &[i64], constant: i64) -> Result<Self> {
        Hyperplane::new(coeffs.iter().map(|&c| rat(c)).collect(), rat(constant))
    }

    pub fn nvars(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn constant(&self) -> &Rat {
        &self.constant
    }

    pub fn eval(&self, point: &[Rat]) -> Rat {
        let mut acc = self.constant.clone();
        for (c, x) in self.coeffs.iter().zip(point) {
            acc += c * x;
        }
        acc
    }

    pub fn eval_bits(&self, point: &[u8]) -> Rat {
        let mut acc = self.constant.clone();
        for (c, &x) in self.coeffs.iter().zip(point) {
            if x != 0 {
                acc += c;
            }
        }
        acc
    }

    pub fn vanishes_at_bits(&self, point: &[u8]) -> bool {
        self.eval_bits(point).is_zero()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let n = self.nvars();
        let mut p = Polynomial::constant(n, self.constant.clone());
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let mut e = vec![0u32; n];
                e[i] = 1;
                p = p.add(&Polynomial::from_terms(n, [(e, c.clone())]).expect("valid term"));
            }
        }
        p
    }

    /// Same form viewed in m + n variables, acting on the last n.
    pub fn lift_prefix(&self, m: usize) -> Hyperplane {
        let mut coeffs = vec![Rat::zero(); m];
        coeffs.extend(self.coeffs.iter().cloned());
        Hyperplane { coeffs, constant: self.constant.clone() }
    }

    /// Substitutes 0 for the first m variables. Errors if the result is a
    /// constant (the form collapsed).
    pub fn restrict_prefix_zero(&self, m: usize) -> Result<Hyperplane> {
        if m > self.nvars() {
            return Err(Error::domain("restriction exceeds variable count"));
        }
        let coeffs: Vec<Rat> = self.coeffs[m..].to_vec();
        Hyperplane::new(coeffs, self.constant.clone()).map_err(|_| {
            Error::domain("restriction collapsed the hyperplane to a constant")
        })
    }
}

impl fmt::Display for Hyperplane {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_polynomial())
    }
}

/// Multiset of hyperplanes; |family| counts repetitions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperplaneFamily {
    nvars: usize,
    items: Vec<Hyperplane>,
}

impl HyperplaneFamily {
    pub fn empty(nvars: usize) -> Self {
        HyperplaneFamily { nvars, items: Vec::new() }
    }

    pub fn from_items(nvars: usize, items: Vec<Hyperplane>) -> Result<Self> {
        for h in &items {
            if h.nvars() != nvars {
                return Err(Error::domain(
                    "hyperplane variable count does not match family",
                ));
            }
        }
        Ok(HyperplaneFamily { nvars, items })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.items.len()
    }

    pub fn is_empty(&self) -> bool {
        self.items.is_empty()
    }

    pub fn items(&self) -> &[Hyperplane] {
        &self.items
    }

    pub fn push(&mut self, h: Hyperplane) {
        assert_eq!(h.nvars(), self.nvars);
        self.items.push(h);
    }

    pub fn extend(&mut self, other: HyperplaneFamily) {
        assert_eq!(other.nvars, self.nvars);
        self.items.extend(other.items);
    }

    /// Number of members vanishing at a cube point.
    pub fn incidence_bits(&self, point: &[u8]) -> usize {
        self.items.iter().filter(|h| h.vanishes_at_bits(point)).count()
    }

    /// Expanded product of the defining forms; the empty family gives the
    /// constant 1 so multiplicity-boost factors compose silently.
    pub fn product(&self) -> Polynomial {
        let mut p = Polynomial::one(self.nvars);
        for h in &self.items {
            p = p.mul(&h.to_polynomial());
        }
        p
    }
}

// --- JSON wire formats ------------------------------------------------------

#[derive(Serialize, Deserialize)]
struct HyperplaneJson {
    coeffs: Vec<String>,
    constant: String,
}

#[derive(Serialize, Deserialize)]
pub struct FamilyJson {
    pub hyperplanes: Vec<serde_json::Value>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    exps: Vec<u32>,
    coef: String,
}

#[derive(Serialize, Deserialize)]
struct PolynomialJson {
    nvars: usize,
    terms: Vec<TermJson>,
}

impl Hyperplane {
    pub fn to_json(&self) -> serde_json::Value {
        let j = HyperplaneJson {
            coeffs: self.coeffs.iter().map(rat_to_string).collect(),
            constant: rat_to_string(&self.constant),
        };
        serde_json::to_value(j).expect("hyperplane serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: HyperplaneJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::parse(format!("hyperplane: {e}")))?;
        let coeffs = j
            .coeffs
            .iter()
            .map(|s| rat_from_str(s))
            .collect::<Result<Vec<_>>>()?;
        Hyperplane::new(coeffs, rat_from_str(&j.constant)?)
    }
}

impl HyperplaneFamily {
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "hyperplanes": self.items.iter().map(|h| h.to_json()).collect::<Vec<_>>(),
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let arr = v
            .get("hyperplanes")
            .and_then(|h| h.as_array())
            .ok_or_else(|| Error::parse("family JSON requires a hyperplanes array"))?;
        let items = arr
            .iter()
            .map(Hyperplane::from_json)
            .collect::<Result<Vec<_>>>()?;
        if items.is_empty() {
            return Err(Error::parse(
                "family JSON with no members carries no variable count",
            ));
        }
        let nvars = items[0].nvars();
        HyperplaneFamily::from_items(nvars, items)
    }
}

impl Polynomial {
    pub fn to_json(&self) -> serde_json::Value {
        let j = PolynomialJson {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermJson { exps: e.clone(), coef: rat_to_string(c) })
                .collect(),
        };
        serde_json::to_value(j).expect("polynomial serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self> {
        let j: PolynomialJson = serde_json::from_value(v.clone())
            .map_err(|e| Error::parse(format!("polynomial: {e}")))?;
        let terms = j
            .terms
            .into_iter()
            .map(|t| Ok((t.exps, rat_from_str(&t.coef)?)))
            .collect::<Result<Vec<_>>>()?;
        Polynomial::from_terms(j.nvars, terms)
    }
}

/// Converts a 0/1 point to rational coordinates.
pub fn bits_to_rat(point: &[u8]) -> Vec<Rat> {
    point.iter().map(|&b| rat(b as i64)).collect()
}
