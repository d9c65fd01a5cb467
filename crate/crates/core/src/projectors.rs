//! The five projector constructions: Young operators, the iterative
//! Hermitian construction and its shortened chain, the palindromic form
//! for lexically ordered tableaux, and the MOLD construction that keeps
//! the palindrome compact for general tableaux.
//!
//! All constructions return unexpanded [`SymbolicOperator`]s. As algebra
//! elements the three Hermitian constructions agree exactly; only their
//! unexpanded shapes and prefactors differ.

use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::algebra::{AlgebraElement, AlgebraError};
use crate::symbolic::{FactorKind, SetFactor, SymbolicError, SymbolicOperator, UnitChain};
use crate::tableau::{TableauError, YoungTableau};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectorError {
    #[error("tableau {tableau} is not lexically ordered")]
    NotLexicallyOrdered { tableau: String },
    #[error("normalization failed for {tableau}: the barred operator is not quasi-idempotent")]
    NormalizationFailed { tableau: String },
    #[error(transparent)]
    Symbolic(#[from] SymbolicError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("unknown construction method {0:?}")]
    UnknownMethod(String),
}

/// Construction method selector.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Young,
    Ks,
    ShortKs,
    Lexical,
    Mold,
}

impl Method {
    pub const ALL: [Method; 5] = [
        Method::Young,
        Method::Ks,
        Method::ShortKs,
        Method::Lexical,
        Method::Mold,
    ];

    pub fn parse(text: &str) -> Result<Method, ProjectorError> {
        match text {
            "young" => Ok(Method::Young),
            "ks" => Ok(Method::Ks),
            "short-ks" | "short_ks" => Ok(Method::ShortKs),
            "lexical" => Ok(Method::Lexical),
            "mold" => Ok(Method::Mold),
            other => Err(ProjectorError::UnknownMethod(other.to_owned())),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Method::Young => "young",
            Method::Ks => "ks",
            Method::ShortKs => "short-ks",
            Method::Lexical => "lexical",
            Method::Mold => "mold",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The Young projection operator `α_Θ · S_Θ A_Θ`.
pub fn young(tab: &YoungTableau) -> SymbolicOperator {
    crate::symbolic::young_operator(tab)
}

fn ks_units(tab: &YoungTableau) -> Vec<YoungTableau> {
    if tab.size() <= 2 {
        return vec![tab.clone()];
    }
    let parent_units = ks_units(&tab.parent().expect("size > 1"));
    let mut units = parent_units.clone();
    units.push(tab.clone());
    units.extend(parent_units);
    units
}

/// The full iterative chain `P_Θ = P_{Θ(1)} · Y_Θ · P_{Θ(1)}`, recursing
/// down to the two-box base case, as tableau-tagged units.
pub fn ks_chain(tab: &YoungTableau) -> UnitChain {
    UnitChain::new(tab.size(), ks_units(tab)).expect("ancestors fit the degree")
}

/// The iterative Hermitian projector as an unexpanded operator.
pub fn ks(tab: &YoungTableau) -> SymbolicOperator {
    ks_chain(tab).to_symbolic()
}

/// The strictly ordered chain `Y_{Θ(n−2)} ⋯ Y_{Θ(1)} Y_Θ Y_{Θ(1)} ⋯ Y_{Θ(n−2)}`.
pub fn short_ks_chain(tab: &YoungTableau) -> UnitChain {
    let n = tab.size();
    let mut units = Vec::new();
    for m in (1..n.saturating_sub(1)).rev() {
        units.push(tab.ancestor(m).expect("m < n"));
    }
    units.push(tab.clone());
    for m in 1..n.saturating_sub(1) {
        units.push(tab.ancestor(m).expect("m < n"));
    }
    UnitChain::new(n, units).expect("ancestors fit the degree")
}

/// The shortened Hermitian projector as an unexpanded operator.
pub fn short_ks(tab: &YoungTableau) -> SymbolicOperator {
    short_ks_chain(tab).to_symbolic()
}

/// Drops empty factors and merges doubled collections such as `S_Θ S_Θ`.
fn merged(factors: Vec<SetFactor>) -> Vec<SetFactor> {
    let mut out: Vec<SetFactor> = Vec::with_capacity(factors.len());
    for factor in factors.into_iter().filter(|f| !f.is_empty()) {
        if out.last() == Some(&factor) {
            continue;
        }
        out.push(factor);
    }
    out
}

/// The Hermitian projector of a lexically ordered tableau: the merged
/// three-factor palindrome `α_Θ·S_Θ A_Θ S_Θ` (row-ordered) or
/// `α_Θ·A_Θ S_Θ A_Θ` (column-ordered; row order wins ties).
pub fn lexical(tab: &YoungTableau) -> Result<SymbolicOperator, ProjectorError> {
    let outer = if tab.is_row_ordered() {
        FactorKind::Sym
    } else if tab.is_column_ordered() {
        FactorKind::Anti
    } else {
        return Err(ProjectorError::NotLexicallyOrdered {
            tableau: tab.to_string(),
        });
    };
    let factors = merged(vec![
        SetFactor::from_tableau(tab, outer),
        SetFactor::from_tableau(tab, outer.flip()),
        SetFactor::from_tableau(tab, outer),
    ]);
    Ok(SymbolicOperator::new(tab.size(), tab.alpha(), factors)?)
}

/// The MOLD palindrome without its normalization constant: alternating
/// ancestor collections around the central `S_Θ A_Θ S_Θ` / `A_Θ S_Θ A_Θ`
/// triple, one collection per generation up to the MOLD of the tableau.
pub fn mold_barred(tab: &YoungTableau) -> Result<SymbolicOperator, ProjectorError> {
    // one parent walk collects the ancestors up to the first lexically
    // ordered one, whose index is the MOLD
    let mut ancestors = Vec::new();
    let mut current = tab.clone();
    while !current.is_lexically_ordered() {
        current = current.parent()?;
        ancestors.push(current.clone());
    }
    let m = ancestors.len();
    if m == 0 {
        return Ok(lexical(tab)?.barred());
    }
    let oldest = &ancestors[m - 1];
    // row order wins when the oldest ordered ancestor has both orders
    let outer = if oldest.is_row_ordered() {
        FactorKind::Sym
    } else {
        FactorKind::Anti
    };
    let kind_at = |generation: usize| {
        if (m - generation).is_multiple_of(2) {
            outer
        } else {
            outer.flip()
        }
    };
    let mut front = Vec::with_capacity(m);
    for generation in (1..=m).rev() {
        let ancestor = &ancestors[generation - 1];
        front.push(SetFactor::from_tableau(ancestor, kind_at(generation)).with_generation(generation));
    }
    let center_outer = kind_at(1).flip();
    let center = vec![
        SetFactor::from_tableau(tab, center_outer),
        SetFactor::from_tableau(tab, center_outer.flip()),
        SetFactor::from_tableau(tab, center_outer),
    ];
    let mut factors = front.clone();
    factors.extend(center);
    factors.extend(front.into_iter().rev());
    Ok(SymbolicOperator::new(tab.size(), BigRational::one(), merged(factors))?)
}

/// The MOLD Hermitian projector, normalized by idempotency: the barred
/// palindrome scaled by `β_Θ = 1/λ` where `P̄·P̄ = λ·P̄`.
///
/// Computing `β` requires a full expansion at the tableau degree; use
/// [`mold_barred`] where the degree makes expansion infeasible.
pub fn mold(tab: &YoungTableau) -> Result<SymbolicOperator, ProjectorError> {
    if tab.mold() == 0 {
        return lexical(tab);
    }
    let barred = mold_barred(tab)?;
    let lambda = barred
        .expand()?
        .quasi_idempotent_factor()
        .map_err(|_| ProjectorError::NormalizationFailed {
            tableau: tab.to_string(),
        })?
        .filter(|l| !l.is_zero())
        .ok_or_else(|| ProjectorError::NormalizationFailed {
            tableau: tab.to_string(),
        })?;
    Ok(barred.with_scalar(lambda.recip()))
}

/// Canonical Hermitian Young projector entry point (the MOLD form).
pub fn hermitian(tab: &YoungTableau) -> Result<SymbolicOperator, ProjectorError> {
    mold(tab)
}

/// Builds the projector for a tableau with the given method.
pub fn construct(tab: &YoungTableau, method: Method) -> Result<SymbolicOperator, ProjectorError> {
    match method {
        Method::Young => Ok(young(tab)),
        Method::Ks => Ok(ks(tab)),
        Method::ShortKs => Ok(short_ks(tab)),
        Method::Lexical => lexical(tab),
        Method::Mold => mold(tab),
    }
}

/// Similarity transform `ρ · Y · ρ†`; relabeling a tableau's entries by
/// `ρ` conjugates its Young operator this way.
pub fn conjugate_by(
    y: &AlgebraElement,
    rho: &crate::perm::Permutation,
) -> Result<AlgebraElement, AlgebraError> {
    let left = AlgebraElement::from_perm(rho.clone());
    let right = AlgebraElement::from_perm(rho.inverse());
    left.mul(y)?.mul(&right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rational;
    use crate::perm::Permutation;

    fn tab(text: &str) -> YoungTableau {
        YoungTableau::parse(text).unwrap()
    }

    fn op(text: &str, degree: usize) -> SymbolicOperator {
        SymbolicOperator::parse(text, degree).unwrap()
    }

    #[test]
    fn young_examples() {
        assert_eq!(young(&tab("1,2/3")), op("4/3 * S[1,2] A[1,3]", 3));
        assert_eq!(young(&tab("1,2,3,4")), op("1 * S[1,2,3,4]", 4));
        assert_eq!(
            young(&tab("1,3,4/2,5")),
            op("2 * S[1,3,4][2,5] A[1,2][3,5]", 5)
        );
        assert!(young(&tab("1,2/3")).expand().unwrap().is_idempotent());
    }

    #[test]
    fn ks_prefactor_and_base_case() {
        let theta = tab("1,2,4/3,5");
        let p = ks(&theta);
        assert_eq!(*p.scalar(), rational(128, 9));
        assert_eq!(ks_chain(&theta).unit_count(), 15);
        assert_eq!(ks_chain(&theta).proper_unit_count(), 7);
        assert_eq!(ks(&tab("1,2")), young(&tab("1,2")));
        assert_eq!(ks(&tab("1/2")), young(&tab("1/2")));
    }

    #[test]
    fn ks_expansions_are_hermitian_and_idempotent() {
        for n in 1..=4 {
            for t in YoungTableau::enumerate(n) {
                let p = ks(&t).expand().unwrap();
                assert!(p.is_hermitian(), "tableau {t}");
                assert!(p.is_idempotent(), "tableau {t}");
            }
        }
    }

    #[test]
    fn short_ks_matches_ks() {
        let theta = tab("1,2,4/3,5");
        let short = short_ks(&theta);
        assert_eq!(*short.scalar(), rational(8, 1));
        assert_eq!(short_ks_chain(&theta).unit_count(), 7);
        assert_eq!(
            short.expand().unwrap(),
            ks(&theta).expand().unwrap()
        );
        assert_eq!(short_ks(&tab("1,2")), young(&tab("1,2")));
        for n in 2..=4 {
            for t in YoungTableau::enumerate(n) {
                assert_eq!(
                    short_ks(&t).expand().unwrap(),
                    ks(&t).expand().unwrap(),
                    "tableau {t}"
                );
            }
        }
    }

    #[test]
    fn short_ks_is_the_cancelled_ks_chain() {
        for n in 2..=5 {
            for t in YoungTableau::enumerate(n) {
                assert_eq!(ks_chain(&t).cancel_wedged(), short_ks_chain(&t), "tableau {t}");
            }
        }
    }

    #[test]
    fn lexical_table_rows() {
        assert_eq!(lexical(&tab("1/2/3")).unwrap(), op("1 * A[1,2,3]", 3));
        assert_eq!(
            lexical(&tab("1,3/2")).unwrap(),
            op("4/3 * A[1,2] S[1,3] A[1,2]", 3)
        );
        assert_eq!(
            lexical(&tab("1,2/3")).unwrap(),
            op("4/3 * S[1,2] A[1,3] S[1,2]", 3)
        );
        assert_eq!(lexical(&tab("1,2,3")).unwrap(), op("1 * S[1,2,3]", 3));
        assert!(matches!(
            lexical(&tab("1,2,4/3,5")),
            Err(ProjectorError::NotLexicallyOrdered { .. })
        ));
    }

    #[test]
    fn lexical_row_and_column_branches_agree_when_both_apply() {
        for n in 1..=5 {
            for t in YoungTableau::enumerate(n) {
                if t.is_row_ordered() && t.is_column_ordered() {
                    let row = SymbolicOperator::new(
                        n,
                        t.alpha(),
                        vec![
                            SetFactor::from_tableau(&t, FactorKind::Sym),
                            SetFactor::from_tableau(&t, FactorKind::Anti),
                            SetFactor::from_tableau(&t, FactorKind::Sym),
                        ],
                    )
                    .unwrap();
                    let column = SymbolicOperator::new(
                        n,
                        t.alpha(),
                        vec![
                            SetFactor::from_tableau(&t, FactorKind::Anti),
                            SetFactor::from_tableau(&t, FactorKind::Sym),
                            SetFactor::from_tableau(&t, FactorKind::Anti),
                        ],
                    )
                    .unwrap();
                    assert_eq!(row.expand().unwrap(), column.expand().unwrap(), "tableau {t}");
                }
            }
        }
    }

    #[test]
    fn mold_worked_example() {
        let theta = tab("1,2,4/3,5");
        let p = mold(&theta).unwrap();
        assert_eq!(*p.scalar(), rational(4, 1));
        assert_eq!(
            p,
            op(
                "4 * S[1,2] A[1,3] S[1,2,4][3,5] A[1,3][2,5] S[1,2,4][3,5] A[1,3] S[1,2]",
                5
            )
        );
        assert!(p.is_palindrome());
        assert!(p.factors_alternate());
        let expanded = p.expand().unwrap();
        assert!(expanded.is_hermitian());
        assert!(expanded.is_idempotent());
    }

    #[test]
    fn mold_of_ordered_tableau_is_lexical() {
        for n in 1..=5 {
            for t in YoungTableau::enumerate(n) {
                if t.is_lexically_ordered() {
                    assert_eq!(mold(&t).unwrap(), lexical(&t).unwrap(), "tableau {t}");
                }
            }
        }
    }

    #[test]
    fn mold_palindromes_alternate() {
        for n in 1..=5 {
            for t in YoungTableau::enumerate(n) {
                let p = mold_barred(&t).unwrap();
                assert!(p.is_palindrome(), "tableau {t}");
                assert!(p.factors_alternate(), "tableau {t}");
                let m = t.mold();
                if m > 0 {
                    assert_eq!(p.set_count(), 2 * m + 3, "tableau {t}");
                }
            }
        }
    }

    #[test]
    fn mold_agrees_with_ks() {
        for n in 1..=4 {
            for t in YoungTableau::enumerate(n) {
                assert_eq!(
                    mold(&t).unwrap().expand().unwrap(),
                    ks(&t).expand().unwrap(),
                    "tableau {t}"
                );
            }
        }
    }

    #[test]
    fn hermitian_entry_point() {
        assert_eq!(hermitian(&tab("1,2")).unwrap(), op("1 * S[1,2]", 2));
        let p = hermitian(&tab("1,2/3")).unwrap().expand().unwrap();
        assert!(p.is_hermitian());
        assert!(p.is_idempotent());
    }

    #[test]
    fn hermitian_projectors_commute_with_their_ancestors() {
        // unlike the Young operators, P commutes with its embedded parent
        let p = hermitian(&tab("1,2/3")).unwrap().expand().unwrap();
        let parent = hermitian(&tab("1,2"))
            .unwrap()
            .expand()
            .unwrap()
            .embed(3)
            .unwrap();
        assert!(p.commutator(&parent).unwrap().is_zero());
        let y = young(&tab("1,2/3")).expand().unwrap();
        let y_parent = young(&tab("1,2")).expand().unwrap().embed(3).unwrap();
        assert!(!y.commutator(&y_parent).unwrap().is_zero());
    }

    #[test]
    fn conjugation_relabels_tableaux() {
        let y = young(&tab("1,2,3/4")).expand().unwrap();
        let rho = Permutation::parse("(3 4)", 4).unwrap();
        assert_eq!(
            conjugate_by(&y, &rho).unwrap(),
            young(&tab("1,2,4/3")).expand().unwrap()
        );
        let rho = Permutation::parse("(2 3 4)", 4).unwrap();
        assert_eq!(
            conjugate_by(&y, &rho).unwrap(),
            young(&tab("1,3,4/2")).expand().unwrap()
        );
        let e = Permutation::identity(4).unwrap();
        assert_eq!(conjugate_by(&y, &e).unwrap(), y);
    }

    #[test]
    fn method_names_round_trip() {
        for method in Method::ALL {
            assert_eq!(Method::parse(method.name()).unwrap(), method);
        }
        assert_eq!(Method::parse("short_ks").unwrap(), Method::ShortKs);
        assert!(Method::parse("tensor").is_err());
    }
}
