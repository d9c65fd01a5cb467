//! Unexpanded operator expressions: ordered products of symmetrizer and
//! antisymmetrizer collections with a rational prefactor, plus the
//! rewrite rules that cancel wedged ancestor operators, collapse
//! sandwiched products onto Young operators, and propagate
//! (anti)symmetrizers through a palindromic window.
//!
//! Rewrites are applied only where their preconditions verify; the
//! engine never guesses. Every rewrite preserves the exact expansion.

use std::collections::BTreeSet;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{antisymmetrizer, symmetrizer, AlgebraElement, AlgebraError};
use crate::tableau::{TableauError, YoungTableau};

/// Degree above which full expansion is refused unless forced.
pub const DEFAULT_EXPANSION_CAP: usize = 7;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SymbolicError {
    #[error("blocks overlap at index {index}")]
    OverlappingBlocks { index: usize },
    #[error("block index {index} out of range for degree {degree}")]
    IndexOutOfRange { index: usize, degree: usize },
    #[error("expansion refused: degree {degree} exceeds the cap {cap}")]
    ExpansionRefused { degree: usize, cap: usize },
    #[error("no rewritable pattern at position {position}: {reason}")]
    PatternNotFound { position: usize, reason: String },
    #[error("the amputated tableau is not rectangular")]
    NotRectangular,
    #[error("operator does not match the sandwich form: {reason}")]
    FormMismatch { reason: String },
    #[error("expansion is not proportional to the Young operator")]
    NotProportional,
    #[error("chain unit of {unit} boxes does not fit degree {degree}")]
    UnitTooLarge { unit: usize, degree: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("cannot parse operator from {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum FactorKind {
    Sym,
    Anti,
}

impl FactorKind {
    pub fn flip(self) -> FactorKind {
        match self {
            FactorKind::Sym => FactorKind::Anti,
            FactorKind::Anti => FactorKind::Sym,
        }
    }

    fn letter(self) -> char {
        match self {
            FactorKind::Sym => 'S',
            FactorKind::Anti => 'A',
        }
    }
}

/// Provenance of a set factor: the tableau it was read from (0-based
/// rows) and how many boxes that tableau sits below the ambient degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorSource {
    pub rows: Vec<Vec<usize>>,
    pub generation: usize,
}

#[derive(Serialize, Deserialize)]
struct SourceDoc {
    tableau: String,
    generation: usize,
}

impl Serialize for FactorSource {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let tableau = self
            .rows
            .iter()
            .map(|row| {
                row.iter()
                    .map(|e| (e + 1).to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join("/");
        SourceDoc {
            tableau,
            generation: self.generation,
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for FactorSource {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = SourceDoc::deserialize(deserializer)?;
        let tab = YoungTableau::parse(&doc.tableau).map_err(D::Error::custom)?;
        Ok(FactorSource {
            rows: tab.rows().to_vec(),
            generation: doc.generation,
        })
    }
}

/// One collection of disjoint symmetrizers or antisymmetrizers, e.g.
/// `S[1,2,4][3,5]`. Singleton blocks act as the identity and are dropped.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SetFactor {
    kind: FactorKind,
    blocks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    source: Option<FactorSource>,
}

impl PartialEq for SetFactor {
    fn eq(&self, other: &Self) -> bool {
        // provenance is metadata only
        self.kind == other.kind && self.blocks == other.blocks
    }
}

impl Eq for SetFactor {}

impl SetFactor {
    pub fn new(kind: FactorKind, blocks: Vec<Vec<usize>>) -> Result<Self, SymbolicError> {
        let mut canonical: Vec<Vec<usize>> = blocks
            .into_iter()
            .map(|mut b| {
                b.sort_unstable();
                b
            })
            .filter(|b| b.len() >= 2)
            .collect();
        canonical.sort();
        let mut low = 0u128;
        let mut high: Option<BTreeSet<usize>> = None;
        for block in &canonical {
            for &i in block {
                if i < 128 {
                    let bit = 1u128 << i;
                    if low & bit != 0 {
                        return Err(SymbolicError::OverlappingBlocks { index: i });
                    }
                    low |= bit;
                } else if !high.get_or_insert_with(BTreeSet::new).insert(i) {
                    return Err(SymbolicError::OverlappingBlocks { index: i });
                }
            }
        }
        Ok(SetFactor {
            kind,
            blocks: canonical,
            source: None,
        })
    }

    /// The row (sym) or column (anti) collection of a tableau.
    pub fn from_tableau(tab: &YoungTableau, kind: FactorKind) -> SetFactor {
        let blocks = match kind {
            FactorKind::Sym => tab.rows().to_vec(),
            FactorKind::Anti => tab.columns(),
        };
        let mut factor = SetFactor::new(kind, blocks).expect("tableau blocks are disjoint");
        factor.source = Some(FactorSource {
            rows: tab.rows().to_vec(),
            generation: 0,
        });
        factor
    }

    pub fn with_generation(mut self, generation: usize) -> SetFactor {
        if let Some(source) = self.source.as_mut() {
            source.generation = generation;
        }
        self
    }

    pub fn kind(&self) -> FactorKind {
        self.kind
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn source(&self) -> Option<&FactorSource> {
        self.source.as_ref()
    }

    /// True when all blocks were singletons: the factor is the identity.
    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.blocks.iter().flatten().copied().max()
    }

    pub fn support(&self) -> BTreeSet<usize> {
        self.blocks.iter().flatten().copied().collect()
    }

    /// True when every block of `other` lies inside one of this factor's
    /// blocks (and the kinds agree), so that `other · self = self`.
    pub fn absorbs(&self, other: &SetFactor) -> bool {
        self.kind == other.kind
            && other.blocks.iter().all(|small| {
                self.blocks
                    .iter()
                    .any(|big| small.iter().all(|i| big.contains(i)))
            })
    }

    pub fn expand(&self, degree: usize) -> Result<AlgebraElement, SymbolicError> {
        let mut out = AlgebraElement::identity(degree);
        for block in &self.blocks {
            let factor = match self.kind {
                FactorKind::Sym => symmetrizer(degree, block)?,
                FactorKind::Anti => antisymmetrizer(degree, block)?,
            };
            out = out.mul(&factor)?;
        }
        Ok(out)
    }
}

impl fmt::Display for SetFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.kind.letter())?;
        for block in &self.blocks {
            write!(f, "[")?;
            for (k, i) in block.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", i + 1)?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}

/// An ordered product of set factors with a rational prefactor; the
/// leftmost factor acts last. An empty factor list denotes the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicOperator {
    degree: usize,
    scalar: BigRational,
    factors: Vec<SetFactor>,
}

#[derive(Serialize, Deserialize)]
struct FactorDoc {
    kind: FactorKind,
    blocks: Vec<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    source: Option<FactorSource>,
}

#[derive(Serialize, Deserialize)]
struct ScalarDoc {
    num: String,
    den: String,
}

#[derive(Serialize, Deserialize)]
struct OperatorDoc {
    degree: usize,
    scalar: ScalarDoc,
    factors: Vec<FactorDoc>,
}

impl Serialize for SymbolicOperator {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let doc = OperatorDoc {
            degree: self.degree,
            scalar: ScalarDoc {
                num: self.scalar.numer().to_string(),
                den: self.scalar.denom().to_string(),
            },
            factors: self
                .factors
                .iter()
                .map(|f| FactorDoc {
                    kind: f.kind,
                    blocks: f
                        .blocks
                        .iter()
                        .map(|b| b.iter().map(|&i| i + 1).collect())
                        .collect(),
                    source: f.source.clone(),
                })
                .collect(),
        };
        doc.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SymbolicOperator {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let doc = OperatorDoc::deserialize(deserializer)?;
        let num: num_bigint::BigInt = doc.scalar.num.parse().map_err(D::Error::custom)?;
        let den: num_bigint::BigInt = doc.scalar.den.parse().map_err(D::Error::custom)?;
        if den.is_zero() {
            return Err(D::Error::custom("zero denominator"));
        }
        let mut factors = Vec::with_capacity(doc.factors.len());
        for f in doc.factors {
            let mut blocks = Vec::with_capacity(f.blocks.len());
            for block in f.blocks {
                let mut converted = Vec::with_capacity(block.len());
                for i in block {
                    if i == 0 {
                        return Err(D::Error::custom("block indices are 1-based"));
                    }
                    converted.push(i - 1);
                }
                blocks.push(converted);
            }
            let factor = SetFactor::new(f.kind, blocks).map_err(D::Error::custom)?;
            factors.push(match f.source {
                Some(source) => SetFactor {
                    source: Some(source),
                    ..factor
                },
                None => factor,
            });
        }
        SymbolicOperator::new(doc.degree, BigRational::new(num, den), factors)
            .map_err(D::Error::custom)
    }
}

impl SymbolicOperator {
    pub fn new(
        degree: usize,
        scalar: BigRational,
        factors: Vec<SetFactor>,
    ) -> Result<Self, SymbolicError> {
        let factors: Vec<SetFactor> = factors.into_iter().filter(|f| !f.is_empty()).collect();
        for factor in &factors {
            if let Some(max) = factor.max_index() {
                if max >= degree {
                    return Err(SymbolicError::IndexOutOfRange { index: max, degree });
                }
            }
        }
        Ok(SymbolicOperator {
            degree,
            scalar,
            factors,
        })
    }

    pub fn identity(degree: usize) -> Self {
        SymbolicOperator {
            degree,
            scalar: BigRational::one(),
            factors: Vec::new(),
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn factors(&self) -> &[SetFactor] {
        &self.factors
    }

    /// Number of nonempty set factors.
    pub fn set_count(&self) -> usize {
        self.factors.len()
    }

    /// Same graphical part with the scalar reset to one.
    pub fn barred(&self) -> Self {
        SymbolicOperator {
            degree: self.degree,
            scalar: BigRational::one(),
            factors: self.factors.clone(),
        }
    }

    pub fn with_scalar(&self, scalar: BigRational) -> Self {
        SymbolicOperator {
            degree: self.degree,
            scalar,
            factors: self.factors.clone(),
        }
    }

    /// Hermitian conjugate of the graphical part: the factor list
    /// reversed (reflection about the vertical axis).
    pub fn mirror(&self) -> Self {
        let mut factors = self.factors.clone();
        factors.reverse();
        SymbolicOperator {
            degree: self.degree,
            scalar: self.scalar.clone(),
            factors,
        }
    }

    /// Visible Hermiticity: the factor list equals its own reversal.
    pub fn is_palindrome(&self) -> bool {
        let k = self.factors.len();
        (0..k / 2).all(|i| self.factors[i] == self.factors[k - 1 - i])
    }

    /// True when symmetrizer and antisymmetrizer collections strictly
    /// alternate along the factor list.
    pub fn factors_alternate(&self) -> bool {
        self.factors
            .windows(2)
            .all(|w| w[0].kind() != w[1].kind())
    }

    /// Canonical embedding into a larger degree.
    pub fn embed(&self, degree: usize) -> Result<Self, SymbolicError> {
        if degree < self.degree {
            return Err(SymbolicError::UnitTooLarge {
                unit: self.degree,
                degree,
            });
        }
        Ok(SymbolicOperator {
            degree,
            scalar: self.scalar.clone(),
            factors: self.factors.clone(),
        })
    }

    /// Expands to an algebra element; factors multiply in listed order.
    pub fn expand(&self) -> Result<AlgebraElement, SymbolicError> {
        let mut out = AlgebraElement::identity(self.degree).scale(&self.scalar);
        for factor in &self.factors {
            out = out.mul(&factor.expand(self.degree)?)?;
        }
        Ok(out)
    }

    /// Expands only when the degree does not exceed the cap.
    pub fn expand_guarded(&self, cap: usize) -> Result<AlgebraElement, SymbolicError> {
        if self.degree > cap {
            return Err(SymbolicError::ExpansionRefused {
                degree: self.degree,
                cap,
            });
        }
        self.expand()
    }

    /// Propagation rewrite on the three-factor window starting at
    /// `position`: a window `S_Θ A_Θ S_{Θ∖R}` (or its left-deficient or
    /// kind-flipped variants) becomes the palindrome `S_Θ A_Θ S_Θ`,
    /// provided the matching amputated tableau is rectangular.
    pub fn propagate(&self, position: usize) -> Result<Self, SymbolicError> {
        let pattern = |reason: &str| SymbolicError::PatternNotFound {
            position,
            reason: reason.to_owned(),
        };
        if position + 3 > self.factors.len() {
            return Err(pattern("window exceeds the factor list"));
        }
        let (left, middle, right) = (
            &self.factors[position],
            &self.factors[position + 1],
            &self.factors[position + 2],
        );
        if left.kind() != right.kind() || middle.kind() != left.kind().flip() {
            return Err(pattern("window kinds must be K, flip(K), K"));
        }
        if left == right {
            return Ok(self.clone()); // already symmetric
        }
        // identify the deficient side and the missing block
        let (full, deficient_at) = if left.blocks().len() == right.blocks().len() + 1 {
            (left, position + 2)
        } else if right.blocks().len() == left.blocks().len() + 1 {
            (right, position)
        } else {
            return Err(pattern("one side must lack exactly one block"));
        };
        let deficient = &self.factors[deficient_at];
        let missing: Vec<&Vec<usize>> = full
            .blocks()
            .iter()
            .filter(|b| !deficient.blocks().contains(b))
            .collect();
        if missing.len() != 1 || deficient.blocks().iter().any(|b| !full.blocks().contains(b)) {
            return Err(pattern("one side must lack exactly one block"));
        }
        let removed = missing[0].clone();
        let tab = match full.kind() {
            FactorKind::Sym => reconstruct_tableau(full.blocks(), middle.blocks())?,
            FactorKind::Anti => reconstruct_tableau(middle.blocks(), full.blocks())?,
        };
        let amputated = match full.kind() {
            // removing a row: the column-amputated tableau must be rectangular
            FactorKind::Sym => tab.amputate_columns(&removed)?,
            // removing a column: the row-amputated tableau must be rectangular
            FactorKind::Anti => tab.amputate_rows(&removed)?,
        };
        if !amputated.is_rectangular() {
            return Err(SymbolicError::NotRectangular);
        }
        let mut factors = self.factors.clone();
        factors[deficient_at] = full.clone();
        Ok(SymbolicOperator {
            degree: self.degree,
            scalar: self.scalar.clone(),
            factors,
        })
    }

    /// Parses the text form, e.g. `"4/3 * S[1,2] A[1,3] S[1,2]"`.
    pub fn parse(text: &str, degree: usize) -> Result<Self, SymbolicError> {
        let err = |reason: String| SymbolicError::Parse {
            text: text.to_owned(),
            reason,
        };
        let trimmed = text.trim();
        let (scalar, body) = match trimmed.split_once('*') {
            Some((coeff, body)) => {
                let scalar: BigRational = coeff
                    .trim()
                    .parse()
                    .map_err(|e| err(format!("bad scalar {coeff:?}: {e}")))?;
                (scalar, body.trim())
            }
            None => (BigRational::one(), trimmed),
        };
        if body == "e" {
            return SymbolicOperator::new(degree, scalar, Vec::new());
        }
        let mut factors = Vec::new();
        for token in body.split_whitespace() {
            let kind = match token.chars().next() {
                Some('S') => FactorKind::Sym,
                Some('A') => FactorKind::Anti,
                _ => return Err(err(format!("factor must start with S or A: {token:?}"))),
            };
            let mut blocks = Vec::new();
            let mut rest = &token[1..];
            if rest.is_empty() {
                return Err(err(format!("factor has no blocks: {token:?}")));
            }
            while !rest.is_empty() {
                let open = rest
                    .strip_prefix('[')
                    .ok_or_else(|| err(format!("expected '[' in {token:?}")))?;
                let close = open
                    .find(']')
                    .ok_or_else(|| err(format!("missing ']' in {token:?}")))?;
                let mut block = Vec::new();
                for piece in open[..close].split(',') {
                    let index: usize = piece
                        .trim()
                        .parse()
                        .map_err(|_| err(format!("bad index {piece:?}")))?;
                    if index == 0 {
                        return Err(err("indices are 1-based".to_owned()));
                    }
                    block.push(index - 1);
                }
                blocks.push(block);
                rest = &open[close + 1..];
            }
            factors.push(SetFactor::new(kind, blocks)?);
        }
        SymbolicOperator::new(degree, scalar, factors)
    }
}

impl fmt::Display for SymbolicOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} *", self.scalar)?;
        if self.factors.is_empty() {
            return write!(f, " e");
        }
        for factor in &self.factors {
            write!(f, " {factor}")?;
        }
        Ok(())
    }
}

/// Rebuilds the standard Young tableau whose nontrivial rows and columns
/// are the given block collections.
fn reconstruct_tableau(
    row_blocks: &[Vec<usize>],
    column_blocks: &[Vec<usize>],
) -> Result<YoungTableau, SymbolicError> {
    let mismatch = |reason: &str| SymbolicError::FormMismatch {
        reason: reason.to_owned(),
    };
    let mut entries: BTreeSet<usize> = row_blocks.iter().flatten().copied().collect();
    entries.extend(column_blocks.iter().flatten().copied());
    let n = entries.len();
    if entries.iter().max().is_none_or(|&m| m + 1 != n) {
        return Err(mismatch("factor support is not a contiguous index range"));
    }
    let in_rows: BTreeSet<usize> = row_blocks.iter().flatten().copied().collect();
    let mut rows: Vec<Vec<usize>> = row_blocks.to_vec();
    rows.extend(entries.difference(&in_rows).map(|&e| vec![e]));
    rows.sort_by(|a, b| b.len().cmp(&a.len()).then(a.cmp(b)));
    let tab = YoungTableau::new(rows)
        .map_err(|_| mismatch("blocks do not assemble into a standard tableau"))?;
    let nontrivial_columns: Vec<Vec<usize>> = tab
        .columns()
        .into_iter()
        .filter(|c| c.len() >= 2)
        .collect();
    if nontrivial_columns != column_blocks {
        return Err(mismatch("column blocks do not match the assembled tableau"));
    }
    Ok(tab)
}

/// The Young operator of a tableau as a symbolic expression:
/// `α_Θ · S_Θ A_Θ`.
pub fn young_operator(tab: &YoungTableau) -> SymbolicOperator {
    SymbolicOperator::new(
        tab.size(),
        tab.alpha(),
        vec![
            SetFactor::from_tableau(tab, FactorKind::Sym),
            SetFactor::from_tableau(tab, FactorKind::Anti),
        ],
    )
    .expect("tableau factors are valid")
}

/// Sandwich collapse: an operator `S_Θ · M · A_Θ`, with every interior
/// factor absorbing into the matching Θ collection, equals `λ·Y_Θ` for a
/// nonzero rational `λ`. Returns the exact `λ` found by expansion.
pub fn proportionality_to_young(
    x: &SymbolicOperator,
    tab: &YoungTableau,
) -> Result<BigRational, SymbolicError> {
    let mismatch = |reason: &str| SymbolicError::FormMismatch {
        reason: reason.to_owned(),
    };
    let s_theta = SetFactor::from_tableau(tab, FactorKind::Sym);
    let a_theta = SetFactor::from_tableau(tab, FactorKind::Anti);
    // empty collections act as the identity and are never stored
    let mut interior = x.factors();
    if !s_theta.is_empty() {
        match interior.split_first() {
            Some((first, rest)) if *first == s_theta => interior = rest,
            _ => return Err(mismatch("leftmost factor is not the S collection of the tableau")),
        }
    }
    if !a_theta.is_empty() {
        match interior.split_last() {
            Some((last, rest)) if *last == a_theta => interior = rest,
            _ => return Err(mismatch("rightmost factor is not the A collection of the tableau")),
        }
    }
    for factor in interior {
        let enclosing = match factor.kind() {
            FactorKind::Sym => &s_theta,
            FactorKind::Anti => &a_theta,
        };
        if !enclosing.absorbs(factor) {
            return Err(mismatch("an interior factor does not absorb into the tableau sets"));
        }
    }
    let expanded = x.expand()?;
    let young = young_operator(tab).embed(x.degree())?.expand()?;
    let reference = AlgebraElement::identity(x.degree());
    let probe = reference.terms().next().expect("identity is nonzero").0.clone();
    let lambda = if young.coeff(&probe).is_zero() {
        let (first, coeff) = young.terms().next().expect("Young operators are nonzero");
        expanded.coeff(first) / coeff
    } else {
        expanded.coeff(&probe) / young.coeff(&probe)
    };
    if expanded == young.scale(&lambda) {
        Ok(lambda)
    } else {
        Err(SymbolicError::NotProportional)
    }
}

/// One tableau-tagged Young projector in a product chain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct YoungUnit {
    tableau: YoungTableau,
}

impl YoungUnit {
    pub fn tableau(&self) -> &YoungTableau {
        &self.tableau
    }
}

/// An ordered product of Young projectors, all canonically embedded at a
/// common degree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnitChain {
    degree: usize,
    units: Vec<YoungUnit>,
}

impl UnitChain {
    pub fn new(degree: usize, tableaux: Vec<YoungTableau>) -> Result<Self, SymbolicError> {
        for tab in &tableaux {
            if tab.size() > degree {
                return Err(SymbolicError::UnitTooLarge {
                    unit: tab.size(),
                    degree,
                });
            }
        }
        Ok(UnitChain {
            degree,
            units: tableaux.into_iter().map(|tableau| YoungUnit { tableau }).collect(),
        })
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn units(&self) -> &[YoungUnit] {
        &self.units
    }

    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    /// Units whose tableau has more than two boxes. The two-box units
    /// are bare (anti)symmetrizers, so this counts the proper Young
    /// projectors in the chain.
    pub fn proper_unit_count(&self) -> usize {
        self.units.iter().filter(|u| u.tableau.size() > 2).count()
    }

    /// Product of the per-unit normalization constants.
    pub fn scalar(&self) -> BigRational {
        self.units
            .iter()
            .fold(BigRational::one(), |acc, u| acc * u.tableau.alpha())
    }

    pub fn to_symbolic(&self) -> SymbolicOperator {
        let mut factors = Vec::with_capacity(2 * self.units.len());
        for unit in &self.units {
            let generation = self.degree - unit.tableau.size();
            factors.push(
                SetFactor::from_tableau(&unit.tableau, FactorKind::Sym).with_generation(generation),
            );
            factors.push(
                SetFactor::from_tableau(&unit.tableau, FactorKind::Anti)
                    .with_generation(generation),
            );
        }
        SymbolicOperator::new(self.degree, self.scalar(), factors)
            .expect("chain factors are valid")
    }

    pub fn expand(&self) -> Result<AlgebraElement, SymbolicError> {
        self.to_symbolic().expand()
    }

    /// Removes every unit that is a proper common ancestor of both of
    /// its neighbors, repeatedly, until no unit is removable. The
    /// expansion is unchanged: a Young projector wedged between two of
    /// its descendants drops out of the product.
    pub fn cancel_wedged(&self) -> UnitChain {
        let mut units = self.units.clone();
        loop {
            let removable = (1..units.len().saturating_sub(1)).find(|&i| {
                units[i - 1].tableau.has_ancestor(&units[i].tableau)
                    && units[i + 1].tableau.has_ancestor(&units[i].tableau)
            });
            match removable {
                Some(i) => {
                    units.remove(i);
                }
                None => break,
            }
        }
        UnitChain {
            degree: self.degree,
            units,
        }
    }
}
