//! Exact group-algebra arithmetic: rational-weighted formal sums of
//! permutations of a fixed degree, with products, Hermitian conjugation,
//! (anti)symmetrizers and traces as polynomials in N.
//!
//! Every identity handled here is an exact identity, so coefficients are
//! arbitrary-precision rationals and never floats. Elements are sparse
//! term maps keyed by the permutation image vector, which gives a
//! deterministic iteration order for serialization.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::perm::{permutations_of_subset, PermError, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("duplicate index {index} in index set")]
    DuplicateIndex { index: usize },
    #[error("operation requires a nonzero element")]
    ZeroElement,
    #[error("cannot embed degree {degree} into smaller degree {target}")]
    EmbedTooSmall { degree: usize, target: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
    #[error("cannot parse algebra element from {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// Shorthand for an exact rational from an integer pair.
pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

/// An element of the algebra spanned by the permutations of `{1..n}`:
/// a finite formal sum of permutations with rational coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraElement {
    degree: usize,
    terms: BTreeMap<Permutation, BigRational>,
}

impl AlgebraElement {
    pub fn zero(degree: usize) -> Self {
        AlgebraElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    /// The identity element `id_n`.
    pub fn identity(degree: usize) -> Self {
        AlgebraElement::from_perm(Permutation::identity(degree).expect("degree >= 1"))
    }

    /// A single permutation with coefficient 1.
    pub fn from_perm(p: Permutation) -> Self {
        let degree = p.degree();
        let mut terms = BTreeMap::new();
        terms.insert(p, BigRational::one());
        AlgebraElement { degree, terms }
    }

    pub fn from_terms<I>(degree: usize, terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (Permutation, BigRational)>,
    {
        let mut out = AlgebraElement::zero(degree);
        for (p, c) in terms {
            if p.degree() != degree {
                return Err(AlgebraError::DegreeMismatch {
                    left: degree,
                    right: p.degree(),
                });
            }
            out.add_term(p, c);
        }
        Ok(out)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &BigRational)> {
        self.terms.iter()
    }

    /// Coefficient of the given permutation (zero when absent).
    pub fn coeff(&self, p: &Permutation) -> BigRational {
        self.terms.get(p).cloned().unwrap_or_else(BigRational::zero)
    }

    fn add_term(&mut self, p: Permutation, c: BigRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(p);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_degree(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.degree != other.degree {
            return Err(AlgebraError::DegreeMismatch {
                left: self.degree,
                right: other.degree,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (p, c) in &other.terms {
            out.add_term(p.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-BigRational::one())
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return AlgebraElement::zero(self.degree);
        }
        let terms = self
            .terms
            .iter()
            .map(|(p, w)| (p.clone(), w * c))
            .collect();
        AlgebraElement {
            degree: self.degree,
            terms,
        }
    }

    /// Convolution product: `(x·y)` applies `y` first, then `x`.
    pub fn mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_degree(other)?;
        let mut out = AlgebraElement::zero(self.degree);
        for (p, a) in &self.terms {
            for (q, b) in &other.terms {
                out.add_term(p.compose(q)?, a * b);
            }
        }
        Ok(out)
    }

    /// Hermitian conjugate: maps each permutation to its inverse, keeping
    /// the (real rational) coefficient.
    pub fn dagger(&self) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(p, c)| (p.inverse(), c.clone()))
            .collect();
        AlgebraElement {
            degree: self.degree,
            terms,
        }
    }

    pub fn is_hermitian(&self) -> bool {
        *self == self.dagger()
    }

    pub fn is_idempotent(&self) -> bool {
        match self.mul(self) {
            Ok(square) => square == *self,
            Err(_) => false,
        }
    }

    /// The exact `λ` with `x·x = λ·x`, when such a scalar exists.
    pub fn quasi_idempotent_factor(&self) -> Result<Option<BigRational>, AlgebraError> {
        if self.is_zero() {
            return Err(AlgebraError::ZeroElement);
        }
        let square = self.mul(self)?;
        let (first, coeff) = self.terms.iter().next().expect("nonzero");
        let lambda = square.coeff(first) / coeff;
        if square == self.scale(&lambda) {
            Ok(Some(lambda))
        } else {
            Ok(None)
        }
    }

    pub fn commutator(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.mul(other)?.sub(&other.mul(self)?)
    }

    /// Trace over `V^⊗n` as a polynomial in `N = dim V`: each permutation
    /// traces to `N^{cycle count}`.
    pub fn trace_poly(&self) -> TracePolynomial {
        let mut coeffs: BTreeMap<usize, BigRational> = BTreeMap::new();
        for (p, c) in &self.terms {
            let e = p.cycle_count();
            let entry = coeffs.entry(e).or_insert_with(BigRational::zero);
            *entry += c;
        }
        coeffs.retain(|_, c| !c.is_zero());
        TracePolynomial { coeffs }
    }

    /// Trace evaluated at an integer `N`.
    pub fn dimension(&self, n_colors: u32) -> BigRational {
        self.trace_poly().eval(n_colors)
    }

    /// Canonical embedding into degree `m` (identity on trailing factors).
    pub fn embed(&self, m: usize) -> Result<Self, AlgebraError> {
        if m < self.degree {
            return Err(AlgebraError::EmbedTooSmall {
                degree: self.degree,
                target: m,
            });
        }
        let mut terms = BTreeMap::new();
        for (p, c) in &self.terms {
            terms.insert(p.embed(m)?, c.clone());
        }
        Ok(AlgebraElement { degree: m, terms })
    }

    /// Scales so the canonically first term has coefficient 1, which is
    /// invariant under multiplication by a nonzero scalar.
    pub fn normalized(&self) -> Self {
        match self.terms.iter().next() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// Parses the textual form, e.g. `"1/3 * [e] + 1/3 * [(1 2)]"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self, AlgebraError> {
        let err = |reason: String| AlgebraError::Parse {
            text: text.to_owned(),
            reason,
        };
        let trimmed = text.trim();
        if trimmed == "0" {
            return Ok(AlgebraElement::zero(degree));
        }
        let mut out = AlgebraElement::zero(degree);
        // split into signed chunks on top-level " + " / " - "
        let mut chunks: Vec<(bool, String)> = Vec::new();
        let mut current = String::new();
        let mut negative = trimmed.starts_with('-');
        let body = trimmed.strip_prefix('-').unwrap_or(trimmed);
        let bytes = body.as_bytes();
        let mut i = 0;
        while i < bytes.len() {
            if bytes[i] == b' ' && i + 2 < bytes.len() && bytes[i + 2] == b' ' {
                let op = bytes[i + 1];
                if op == b'+' || op == b'-' {
                    chunks.push((negative, std::mem::take(&mut current)));
                    negative = op == b'-';
                    i += 3;
                    continue;
                }
            }
            current.push(bytes[i] as char);
            i += 1;
        }
        chunks.push((negative, current));
        for (neg, chunk) in chunks {
            let chunk = chunk.trim();
            let (coeff_text, perm_text) = chunk
                .split_once('*')
                .ok_or_else(|| err(format!("missing '*' in term {chunk:?}")))?;
            let coeff: BigRational = coeff_text
                .trim()
                .parse()
                .map_err(|e| err(format!("bad coefficient {coeff_text:?}: {e}")))?;
            let perm_text = perm_text.trim();
            let inner = perm_text
                .strip_prefix('[')
                .and_then(|s| s.strip_suffix(']'))
                .ok_or_else(|| err(format!("permutation not bracketed in {chunk:?}")))?;
            let p = Permutation::parse(inner, degree)?;
            out.add_term(p, if neg { -coeff } else { coeff });
        }
        Ok(out)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (p, c)) in self.terms.iter().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{} * [{}]", c.abs(), p)?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermDoc {
    perm: String,
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct ElementDoc {
    degree: usize,
    terms: Vec<TermDoc>,
}

impl Serialize for AlgebraElement {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let doc = ElementDoc {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .map(|(p, c)| TermDoc {
                    perm: p.to_string(),
                    num: c.numer().to_string(),
                    den: c.denom().to_string(),
                })
                .collect(),
        };
        doc.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for AlgebraElement {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = ElementDoc::deserialize(deserializer)?;
        let mut out = AlgebraElement::zero(doc.degree);
        for term in doc.terms {
            let p = Permutation::parse(&term.perm, doc.degree).map_err(D::Error::custom)?;
            let num: BigInt = term.num.parse().map_err(D::Error::custom)?;
            let den: BigInt = term.den.parse().map_err(D::Error::custom)?;
            if den.is_zero() {
                return Err(D::Error::custom("zero denominator"));
            }
            out.add_term(p, BigRational::new(num, den));
        }
        Ok(out)
    }
}

/// Normalized symmetrizer over an index set: `(1/k!)·Σ σ`.
pub fn symmetrizer(degree: usize, idx: &[usize]) -> Result<AlgebraElement, AlgebraError> {
    weighted_symmetrizer(degree, idx, false)
}

/// Normalized antisymmetrizer over an index set: `(1/k!)·Σ sign(σ)·σ`.
pub fn antisymmetrizer(degree: usize, idx: &[usize]) -> Result<AlgebraElement, AlgebraError> {
    weighted_symmetrizer(degree, idx, true)
}

fn weighted_symmetrizer(
    degree: usize,
    idx: &[usize],
    signed: bool,
) -> Result<AlgebraElement, AlgebraError> {
    let mut seen = vec![false; degree];
    for &i in idx {
        if i >= degree {
            return Err(AlgebraError::IndexOutOfRange { index: i, degree });
        }
        if seen[i] {
            return Err(AlgebraError::DuplicateIndex { index: i });
        }
        seen[i] = true;
    }
    let perms = permutations_of_subset(degree, idx);
    let weight = BigRational::new(BigInt::one(), BigInt::from(perms.len()));
    let mut out = AlgebraElement::zero(degree);
    for p in perms {
        let c = if signed && p.sign() < 0 {
            -weight.clone()
        } else {
            weight.clone()
        };
        out.add_term(p, c);
    }
    Ok(out)
}

/// Trace of an algebra element as a polynomial `Σ c_k·N^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TracePolynomial {
    coeffs: BTreeMap<usize, BigRational>,
}

impl TracePolynomial {
    pub fn coeffs(&self) -> impl Iterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exponent: usize) -> BigRational {
        self.coeffs
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, n: u32) -> BigRational {
        let n = BigRational::from(BigInt::from(n));
        let mut total = BigRational::zero();
        for (&e, c) in &self.coeffs {
            let mut power = BigRational::one();
            for _ in 0..e {
                power *= &n;
            }
            total += c * power;
        }
        total
    }
}

impl fmt::Display for TracePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        for (k, (&e, c)) in self.coeffs.iter().rev().enumerate() {
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match e {
                0 => write!(f, "{}", c.abs())?,
                1 => write!(f, "{} * N", c.abs())?,
                _ => write!(f, "{} * N^{}", c.abs(), e)?,
            }
        }
        Ok(())
    }
}
