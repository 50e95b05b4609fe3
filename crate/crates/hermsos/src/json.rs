//! Canonical JSON interchange.
//!
//! A Hermitian polynomial is
//! `{"nvars": n, "terms": [{"alpha": [..], "beta": [..], "re": [num, den], "im": [num, den]}]}`
//! with terms sorted lex by `(alpha, beta)`, reduced fractions, positive
//! denominators and no zero terms. Holomorphic polynomials drop `beta`.
//! Integers that do not fit in an `i64` are written as decimal strings.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use hermsos_core::{GaussianRational, HermPoly, HoloPoly, MultiIndex, SquaredNormCert};

use crate::ParseError;

/// An integer as stored in JSON.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum JsonInt {
    Small(i64),
    Unsigned(u64),
    Big(String),
}

impl JsonInt {
    fn to_bigint(&self) -> Option<BigInt> {
        match self {
            JsonInt::Small(v) => Some(BigInt::from(*v)),
            JsonInt::Unsigned(v) => Some(BigInt::from(*v)),
            JsonInt::Big(s) => s.trim().parse().ok(),
        }
    }
}

impl From<&BigInt> for JsonInt {
    fn from(v: &BigInt) -> Self {
        v.to_i64().map_or_else(|| JsonInt::Big(v.to_string()), JsonInt::Small)
    }
}

/// `[numerator, denominator]`.
pub type JsonRatio = [JsonInt; 2];

fn ratio_to_json(r: &BigRational) -> JsonRatio {
    [JsonInt::from(r.numer()), JsonInt::from(r.denom())]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermTermDoc {
    pub alpha: Vec<u32>,
    pub beta: Vec<u32>,
    pub re: JsonRatio,
    #[serde(default = "zero_ratio")]
    pub im: JsonRatio,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HoloTermDoc {
    pub alpha: Vec<u32>,
    pub re: JsonRatio,
    #[serde(default = "zero_ratio")]
    pub im: JsonRatio,
}

fn zero_ratio() -> JsonRatio {
    [JsonInt::Small(0), JsonInt::Small(1)]
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HermDoc {
    pub nvars: usize,
    pub terms: Vec<HermTermDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct HoloDoc {
    pub nvars: usize,
    pub terms: Vec<HoloTermDoc>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CertDoc {
    pub weights: Vec<JsonRatio>,
    pub polys: Vec<HoloDoc>,
}

/// Whether non-canonical input is normalized or rejected.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Mode {
    /// Sum duplicates, drop zeros, reduce fractions, accept any term order.
    #[default]
    Lenient,
    /// Reject anything the writer would not have produced.
    Strict,
}

fn syntax(err: serde_json::Error) -> ParseError {
    ParseError::at(err.line(), err.column(), strip_position(&err.to_string()))
}

/// serde_json appends " at line L column C"; the position is kept separately.
fn strip_position(msg: &str) -> String {
    match msg.rfind(" at line ") {
        Some(i) => msg[..i].to_string(),
        None => msg.to_string(),
    }
}

fn ratio(path: &str, r: &JsonRatio, mode: Mode) -> Result<BigRational, ParseError> {
    let num = r[0].to_bigint().ok_or_else(|| ParseError::path(path, "numerator is not an integer"))?;
    let den = r[1].to_bigint().ok_or_else(|| ParseError::path(path, "denominator is not an integer"))?;
    if den.is_zero() {
        return Err(ParseError::path(path, "zero denominator"));
    }
    let value = BigRational::new(num.clone(), den.clone());
    if mode == Mode::Strict && (value.numer() != &num || value.denom() != &den) {
        return Err(ParseError::path(path, "fraction is not reduced with a positive denominator"));
    }
    Ok(value)
}

fn index(path: &str, nvars: usize, e: &[u32]) -> Result<MultiIndex, ParseError> {
    if e.len() != nvars {
        return Err(ParseError::path(path, format!("expected {nvars} exponents, found {}", e.len())));
    }
    Ok(MultiIndex::from(e.to_vec()))
}

fn coefficient(path: &str, re: &JsonRatio, im: &JsonRatio, mode: Mode) -> Result<GaussianRational, ParseError> {
    let c = GaussianRational::new(ratio(&format!("{path}.re"), re, mode)?, ratio(&format!("{path}.im"), im, mode)?);
    if mode == Mode::Strict && c.is_zero() {
        return Err(ParseError::path(path, "zero coefficient"));
    }
    Ok(c)
}

fn check_order<K: Ord>(path: &str, prev: Option<&K>, key: &K) -> Result<(), ParseError> {
    match prev {
        Some(p) if p == key => Err(ParseError::path(path, "duplicate monomial")),
        Some(p) if p > key => Err(ParseError::path(path, "terms are not sorted lex by (alpha, beta)")),
        _ => Ok(()),
    }
}

impl HermDoc {
    pub fn from_poly(a: &HermPoly) -> Self {
        let terms = a
            .terms()
            .map(|(alpha, beta, c)| HermTermDoc {
                alpha: alpha.exponents().to_vec(),
                beta: beta.exponents().to_vec(),
                re: ratio_to_json(c.re()),
                im: ratio_to_json(c.im()),
            })
            .collect();
        Self { nvars: a.nvars(), terms }
    }

    pub fn to_poly(&self, mode: Mode) -> Result<HermPoly, ParseError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        let mut prev: Option<(MultiIndex, MultiIndex)> = None;
        for (i, t) in self.terms.iter().enumerate() {
            let path = format!("terms[{i}]");
            let key = (index(&format!("{path}.alpha"), self.nvars, &t.alpha)?, index(&format!("{path}.beta"), self.nvars, &t.beta)?);
            let c = coefficient(&path, &t.re, &t.im, mode)?;
            if mode == Mode::Strict {
                check_order(&path, prev.as_ref(), &key)?;
                prev = Some(key.clone());
            }
            terms.push((key, c));
        }
        HermPoly::from_terms(self.nvars, terms).map_err(|e| ParseError::path("terms", e.to_string()))
    }
}

impl HoloDoc {
    pub fn from_poly(p: &HoloPoly) -> Self {
        let terms = p
            .terms()
            .map(|(alpha, c)| HoloTermDoc { alpha: alpha.exponents().to_vec(), re: ratio_to_json(c.re()), im: ratio_to_json(c.im()) })
            .collect();
        Self { nvars: p.nvars(), terms }
    }

    pub fn to_poly(&self, mode: Mode) -> Result<HoloPoly, ParseError> {
        let mut terms = Vec::with_capacity(self.terms.len());
        let mut prev: Option<MultiIndex> = None;
        for (i, t) in self.terms.iter().enumerate() {
            let path = format!("terms[{i}]");
            let key = index(&format!("{path}.alpha"), self.nvars, &t.alpha)?;
            let c = coefficient(&path, &t.re, &t.im, mode)?;
            if mode == Mode::Strict {
                check_order(&path, prev.as_ref(), &key)?;
                prev = Some(key.clone());
            }
            terms.push((key, c));
        }
        HoloPoly::from_terms(self.nvars, terms).map_err(|e| ParseError::path("terms", e.to_string()))
    }
}

impl CertDoc {
    pub fn from_cert(cert: &SquaredNormCert) -> Self {
        Self { weights: cert.weights.iter().map(ratio_to_json).collect(), polys: cert.polys.iter().map(HoloDoc::from_poly).collect() }
    }

    pub fn to_cert(&self, mode: Mode) -> Result<SquaredNormCert, ParseError> {
        if self.weights.len() != self.polys.len() {
            return Err(ParseError::path("weights", "weights and polys differ in length"));
        }
        let weights = self
            .weights
            .iter()
            .enumerate()
            .map(|(i, w)| {
                let path = format!("weights[{i}]");
                let w = ratio(&path, w, mode)?;
                if !w.is_positive() {
                    return Err(ParseError::path(&path, "weight must be positive"));
                }
                Ok(w)
            })
            .collect::<Result<Vec<_>, _>>()?;
        let polys = self
            .polys
            .iter()
            .enumerate()
            .map(|(i, p)| p.to_poly(mode).map_err(|e| e.nested(&format!("polys[{i}]"))))
            .collect::<Result<Vec<_>, _>>()?;
        let nvars = polys.first().map_or(0, HoloPoly::nvars);
        if polys.iter().any(|p| p.nvars() != nvars) {
            return Err(ParseError::path("polys", "polynomials disagree on nvars"));
        }
        Ok(SquaredNormCert { nvars, weights, polys })
    }
}

pub fn parse_herm(input: &str, mode: Mode) -> Result<HermPoly, ParseError> {
    serde_json::from_str::<HermDoc>(input).map_err(syntax)?.to_poly(mode)
}

pub fn parse_holo(input: &str, mode: Mode) -> Result<HoloPoly, ParseError> {
    serde_json::from_str::<HoloDoc>(input).map_err(syntax)?.to_poly(mode)
}

pub fn parse_cert(input: &str, mode: Mode) -> Result<SquaredNormCert, ParseError> {
    serde_json::from_str::<CertDoc>(input).map_err(syntax)?.to_cert(mode)
}

/// Compact canonical form.
pub fn herm_to_string(a: &HermPoly) -> String {
    serde_json::to_string(&HermDoc::from_poly(a)).expect("plain data serializes")
}

pub fn holo_to_string(p: &HoloPoly) -> String {
    serde_json::to_string(&HoloDoc::from_poly(p)).expect("plain data serializes")
}

pub fn cert_to_string(cert: &SquaredNormCert) -> String {
    serde_json::to_string(&CertDoc::from_cert(cert)).expect("plain data serializes")
}
