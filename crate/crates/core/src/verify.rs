//! Identity checks with structured pass/fail reports: completeness,
//! orthogonality, Hermiticity, the nested hierarchy of Hermitian
//! projectors, the counterexamples for plain Young operators, and
//! dimension bookkeeping.
//!
//! Every check is a pure exact computation, so reports are reproducible.
//! A failing equality check carries the exact difference element as its
//! witness.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::algebra::AlgebraElement;
use crate::projectors::{conjugate_by, hermitian, ks, lexical, mold, short_ks, young, ProjectorError};
use crate::perm::Permutation;
use crate::tableau::YoungTableau;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error(transparent)]
    Projector(#[from] ProjectorError),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
}

/// Which projector family a check runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Young,
    Hermitian,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Young => "young",
            Family::Hermitian => "hermitian",
        }
    }
}

/// Structured result of one identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub scope: String,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl VerificationReport {
    fn pass(identity: &str, scope: String) -> Self {
        VerificationReport {
            identity: identity.to_owned(),
            scope,
            passed: true,
            witness: None,
        }
    }

    fn fail(identity: &str, scope: String, witness: String) -> Self {
        VerificationReport {
            identity: identity.to_owned(),
            scope,
            passed: false,
            witness: Some(witness),
        }
    }

    /// Pass/fail from an exact equality of algebra elements; the witness
    /// of a failure is the difference element.
    fn equality(identity: &str, scope: String, left: &AlgebraElement, right: &AlgebraElement) -> Self {
        if left == right {
            VerificationReport::pass(identity, scope)
        } else {
            let diff = left.sub(right).expect("checked degrees");
            VerificationReport::fail(identity, scope, diff.to_string())
        }
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {} ({})",
            if self.passed { "PASS" } else { "FAIL" },
            self.identity,
            self.scope
        )?;
        if let Some(witness) = &self.witness {
            write!(f, " witness: {witness}")?;
        }
        Ok(())
    }
}

fn projector(tab: &YoungTableau, family: Family) -> AlgebraElement {
    match family {
        Family::Young => young(tab).expand().expect("expansion at own degree"),
        Family::Hermitian => hermitian(tab)
            .expect("hermitian construction succeeds on valid tableaux")
            .expand()
            .expect("expansion at own degree"),
    }
}

fn family_expansions(n: usize, family: Family) -> Vec<(YoungTableau, AlgebraElement)> {
    YoungTableau::enumerate(n)
        .into_iter()
        .map(|t| {
            let p = projector(&t, family);
            (t, p)
        })
        .collect()
}

/// Σ over all tableaux of `n` boxes equals the identity element.
pub fn check_completeness(n: usize, family: Family) -> VerificationReport {
    let mut sum = AlgebraElement::zero(n);
    for (_, p) in family_expansions(n, family) {
        sum = sum.add(&p).expect("equal degrees");
    }
    VerificationReport::equality(
        "completeness",
        format!("n={n}, family={}", family.name()),
        &sum,
        &AlgebraElement::identity(n),
    )
}

/// Distinct tableaux of equal box count have vanishing products.
pub fn check_orthogonality(n: usize, family: Family) -> VerificationReport {
    let identity = "orthogonality";
    let scope = format!("n={n}, family={}", family.name());
    let expansions = family_expansions(n, family);
    for (i, (ti, pi)) in expansions.iter().enumerate() {
        for (j, (tj, pj)) in expansions.iter().enumerate() {
            if i == j {
                continue;
            }
            let product = pi.mul(pj).expect("equal degrees");
            if !product.is_zero() {
                return VerificationReport::fail(
                    identity,
                    format!("{scope}, pair ({ti}, {tj})"),
                    product.to_string(),
                );
            }
        }
    }
    VerificationReport::pass(identity, scope)
}

/// Every Hermitian projector is Hermitian and idempotent.
pub fn check_hermiticity(n: usize) -> VerificationReport {
    let identity = "hermiticity";
    let scope = format!("n={n}, family=hermitian");
    for (t, p) in family_expansions(n, Family::Hermitian) {
        if !p.is_hermitian() {
            let diff = p.sub(&p.dagger()).expect("equal degrees");
            return VerificationReport::fail(identity, format!("{scope}, tableau {t}"), diff.to_string());
        }
        if !p.is_idempotent() {
            let diff = p.mul(&p).expect("equal degrees").sub(&p).expect("equal degrees");
            return VerificationReport::fail(identity, format!("{scope}, tableau {t}"), diff.to_string());
        }
    }
    VerificationReport::pass(identity, scope)
}

/// The iterative, shortened and MOLD constructions expand identically,
/// and agree with the lexical form where it applies.
pub fn check_methods_agree(n: usize) -> VerificationReport {
    let identity = "methods-agree";
    let scope = format!("n={n}");
    for t in YoungTableau::enumerate(n) {
        let reference = ks(&t).expand().expect("expansion at own degree");
        let mut candidates = vec![
            ("short-ks", short_ks(&t).expand().expect("expansion")),
            ("mold", mold(&t).expect("valid tableau").expand().expect("expansion")),
        ];
        if t.is_lexically_ordered() {
            candidates.push(("lexical", lexical(&t).expect("ordered").expand().expect("expansion")));
        }
        for (name, candidate) in candidates {
            if candidate != reference {
                let diff = candidate.sub(&reference).expect("equal degrees");
                return VerificationReport::fail(
                    identity,
                    format!("{scope}, tableau {t}, method {name}"),
                    diff.to_string(),
                );
            }
        }
    }
    VerificationReport::pass(identity, scope)
}

/// Σ of the Hermitian projectors over the `g`-th descendants of a
/// tableau equals the embedded Hermitian projector of the tableau.
pub fn check_hierarchy(tab: &YoungTableau, generations: usize) -> VerificationReport {
    let n = tab.size();
    let target = n + generations;
    let mut sum = AlgebraElement::zero(target);
    for descendant in YoungTableau::enumerate(target) {
        if descendant.ancestor(generations).as_ref() == Ok(tab) {
            sum = sum
                .add(&projector(&descendant, Family::Hermitian))
                .expect("equal degrees");
        }
    }
    let parent = projector(tab, Family::Hermitian)
        .embed(target)
        .expect("target >= n");
    VerificationReport::equality(
        "hierarchy",
        format!("tableau {tab}, generations={generations}"),
        &sum,
        &parent,
    )
}

/// The hierarchy sum is false for plain Young operators: both
/// three-box candidate identities fail with a nonzero difference.
pub fn check_young_hierarchy_fails() -> VerificationReport {
    let identity = "young-hierarchy-fails";
    let scope = "n=3, both candidate identities".to_owned();
    let cases = [
        (["1,2,3", "1,2/3"], "1,2"),
        (["1,3/2", "1/2/3"], "1/2"),
    ];
    for (children, parent) in cases {
        let mut sum = AlgebraElement::zero(3);
        for text in children {
            let t = YoungTableau::parse(text).expect("valid");
            sum = sum
                .add(&projector(&t, Family::Young))
                .expect("equal degrees");
        }
        let parent_tab = YoungTableau::parse(parent).expect("valid");
        let embedded = projector(&parent_tab, Family::Young)
            .embed(3)
            .expect("3 >= 2");
        let diff = sum.sub(&embedded).expect("equal degrees");
        if diff.is_zero() {
            return VerificationReport::fail(
                identity,
                format!("{scope}; candidate over parent {parent} unexpectedly holds"),
                diff.to_string(),
            );
        }
    }
    VerificationReport::pass(identity, scope)
}

/// Hermitian projectors nest into their ancestors:
/// `P_Θ·P_{Θ(m)} = P_Θ = P_{Θ(m)}·P_Θ`.
pub fn check_nesting(tab: &YoungTableau, m: usize) -> Result<VerificationReport, VerifyError> {
    let n = tab.size();
    if m == 0 || m >= n {
        return Err(VerifyError::Precondition(format!(
            "need 1 <= m < n, got m={m} for {n} boxes"
        )));
    }
    let p = projector(tab, Family::Hermitian);
    let ancestor = tab.ancestor(m).expect("m < n");
    let p_anc = projector(&ancestor, Family::Hermitian)
        .embed(n)
        .expect("n >= size");
    let scope = format!("tableau {tab}, m={m}");
    let right = p.mul(&p_anc).expect("equal degrees");
    let left = p_anc.mul(&p).expect("equal degrees");
    if right != p {
        return Ok(VerificationReport::fail(
            "nesting",
            scope,
            right.sub(&p).expect("equal degrees").to_string(),
        ));
    }
    if left != p {
        return Ok(VerificationReport::fail(
            "nesting",
            scope,
            left.sub(&p).expect("equal degrees").to_string(),
        ));
    }
    Ok(VerificationReport::pass("nesting", scope))
}

/// A non-Hermitian Young operator never commutes with its ancestor
/// operators `Y_{Θ(m)}` of at least two boxes.
pub fn check_noncommutation(tab: &YoungTableau, m: usize) -> Result<VerificationReport, VerifyError> {
    let n = tab.size();
    if m == 0 || n < m + 2 {
        return Err(VerifyError::Precondition(format!(
            "need an ancestor of at least two boxes: 1 <= m <= n-2, got m={m} for {n} boxes"
        )));
    }
    let y = projector(tab, Family::Young);
    if y.is_hermitian() {
        return Err(VerifyError::Precondition(format!(
            "Young operator of {tab} is Hermitian"
        )));
    }
    let ancestor = tab.ancestor(m).expect("m < n");
    let y_anc = projector(&ancestor, Family::Young)
        .embed(n)
        .expect("n >= size");
    let commutator = y.commutator(&y_anc).expect("equal degrees");
    let scope = format!("tableau {tab}, m={m}");
    if commutator.is_zero() {
        Ok(VerificationReport::fail(
            "noncommutation",
            scope,
            commutator.to_string(),
        ))
    } else {
        Ok(VerificationReport::pass("noncommutation", scope))
    }
}

/// Relabeling tableau entries by `ρ` conjugates the Young operator:
/// `ρ·Y_Θ·ρ† = Y_Φ` for `Φ = ρ(Θ)`.
pub fn check_equivalence_conjugation(
    tab: &YoungTableau,
    phi: &YoungTableau,
    rho: &Permutation,
) -> Result<VerificationReport, VerifyError> {
    if tab.shape() != phi.shape() {
        return Err(VerifyError::Precondition(format!(
            "shape mismatch between {tab} and {phi}"
        )));
    }
    let relabeled = tab
        .relabeled_grid(rho)
        .map_err(|e| VerifyError::Precondition(e.to_string()))?;
    if relabeled != phi.rows() {
        return Err(VerifyError::Precondition(format!(
            "{phi} is not the relabeling of {tab} by {rho}"
        )));
    }
    let conjugated = conjugate_by(&projector(tab, Family::Young), rho)
        .map_err(|e| VerifyError::Precondition(e.to_string()))?;
    Ok(VerificationReport::equality(
        "equivalence-conjugation",
        format!("tableau {tab}, rho={rho}, target {phi}"),
        &conjugated,
        &projector(phi, Family::Young),
    ))
}

/// Dimensions of the Hermitian projectors: nonnegative integers that sum
/// to `N^n`, equal across tableaux of the same shape.
pub fn check_dimensions(n: usize) -> VerificationReport {
    let identity = "dimensions";
    let scope = format!("n={n}, N=1..4");
    let expansions = family_expansions(n, Family::Hermitian);
    for colors in 1u32..=4 {
        let mut total = BigRational::zero();
        let mut by_shape: BTreeMap<Vec<usize>, BigRational> = BTreeMap::new();
        for (t, p) in &expansions {
            let d = p.dimension(colors);
            if !d.is_integer() || d.is_negative() {
                return VerificationReport::fail(
                    identity,
                    format!("{scope}, tableau {t}, N={colors}"),
                    format!("dimension {d} is not a nonnegative integer"),
                );
            }
            if let Some(previous) = by_shape.get(&t.shape()) {
                if *previous != d {
                    return VerificationReport::fail(
                        identity,
                        format!("{scope}, tableau {t}, N={colors}"),
                        format!("same-shape dimensions differ: {previous} vs {d}"),
                    );
                }
            } else {
                by_shape.insert(t.shape(), d.clone());
            }
            total += d;
        }
        let mut expected = BigRational::one();
        for _ in 0..n {
            expected *= crate::algebra::rational(colors as i64, 1);
        }
        if total != expected {
            return VerificationReport::fail(
                identity,
                format!("{scope}, N={colors}"),
                format!("dimension sum {total} != {expected}"),
            );
        }
    }
    VerificationReport::pass(identity, scope)
}

/// Named verification suites runnable at a given box count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Completeness,
    Orthogonality,
    Hermiticity,
    Hierarchy,
    Nesting,
    Noncommute,
    MethodsAgree,
    Dimensions,
    YoungHierarchyFails,
}

impl Suite {
    pub const ALL: [Suite; 9] = [
        Suite::Completeness,
        Suite::Orthogonality,
        Suite::Hermiticity,
        Suite::Hierarchy,
        Suite::Nesting,
        Suite::Noncommute,
        Suite::MethodsAgree,
        Suite::Dimensions,
        Suite::YoungHierarchyFails,
    ];

    pub fn parse(text: &str) -> Result<Suite, VerifyError> {
        match text {
            "completeness" => Ok(Suite::Completeness),
            "orthogonality" => Ok(Suite::Orthogonality),
            "hermiticity" => Ok(Suite::Hermiticity),
            "hierarchy" => Ok(Suite::Hierarchy),
            "nesting" => Ok(Suite::Nesting),
            "noncommute" => Ok(Suite::Noncommute),
            "methods-agree" => Ok(Suite::MethodsAgree),
            "dimensions" => Ok(Suite::Dimensions),
            "young-hierarchy-fails" => Ok(Suite::YoungHierarchyFails),
            other => Err(VerifyError::UnknownSuite(other.to_owned())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Suite::Completeness => "completeness",
            Suite::Orthogonality => "orthogonality",
            Suite::Hermiticity => "hermiticity",
            Suite::Hierarchy => "hierarchy",
            Suite::Nesting => "nesting",
            Suite::Noncommute => "noncommute",
            Suite::MethodsAgree => "methods-agree",
            Suite::Dimensions => "dimensions",
            Suite::YoungHierarchyFails => "young-hierarchy-fails",
        }
    }

    /// Runs the suite at box count `n`, aggregating per-case checks.
    pub fn run(self, n: usize) -> Vec<VerificationReport> {
        match self {
            Suite::Completeness => vec![
                check_completeness(n, Family::Young),
                check_completeness(n, Family::Hermitian),
            ],
            Suite::Orthogonality => vec![
                check_orthogonality(n, Family::Young),
                check_orthogonality(n, Family::Hermitian),
            ],
            Suite::Hermiticity => vec![check_hermiticity(n)],
            Suite::Hierarchy => {
                if n < 2 {
                    return vec![VerificationReport::pass("hierarchy", format!("n={n}, trivial"))];
                }
                YoungTableau::enumerate(n - 1)
                    .iter()
                    .map(|t| check_hierarchy(t, 1))
                    .collect()
            }
            Suite::Nesting => {
                let mut reports = Vec::new();
                for t in YoungTableau::enumerate(n) {
                    for m in 1..n {
                        reports.push(check_nesting(&t, m).expect("preconditions hold"));
                    }
                }
                aggregate("nesting", format!("n={n}, all tableaux, all m"), reports)
            }
            Suite::Noncommute => {
                let mut reports = Vec::new();
                for t in YoungTableau::enumerate(n) {
                    if young(&t).expand().expect("expansion").is_hermitian() {
                        continue;
                    }
                    for m in 1..=n.saturating_sub(2) {
                        reports.push(check_noncommutation(&t, m).expect("preconditions hold"));
                    }
                }
                aggregate(
                    "noncommutation",
                    format!("n={n}, non-Hermitian Young operators, all m"),
                    reports,
                )
            }
            Suite::MethodsAgree => vec![check_methods_agree(n)],
            Suite::Dimensions => vec![check_dimensions(n)],
            Suite::YoungHierarchyFails => vec![check_young_hierarchy_fails()],
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn aggregate(
    identity: &str,
    scope: String,
    reports: Vec<VerificationReport>,
) -> Vec<VerificationReport> {
    match reports.into_iter().find(|r| !r.passed) {
        Some(first_failure) => vec![first_failure],
        None => vec![VerificationReport::pass(identity, scope)],
    }
}
