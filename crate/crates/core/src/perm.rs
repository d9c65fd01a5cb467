//! Permutations of `{1..n}` with composition, inversion, sign, cycle
//! structure and canonical embedding into larger degree.
//!
//! A permutation is stored by its image vector: `images[i]` is the
//! (0-based) image of point `i`. The degree is explicit and never
//! inferred from the support, so embedding is lossless. The textual
//! form uses 1-based cycle notation: `"e"`, `"(1 2)"`, `"(1 2 3)(4 5)"`,
//! with each cycle starting at its smallest element, cycles sorted by
//! smallest element and fixed points omitted.

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors from permutation construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("images do not form a bijection of 0..{degree}")]
    NotABijection { degree: usize },
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },
    #[error("cannot embed degree {degree} into smaller degree {target}")]
    EmbedTooSmall { degree: usize, target: usize },
    #[error("word length {len} does not match degree {degree}")]
    WordLengthMismatch { len: usize, degree: usize },
    #[error("cycle entry {entry} out of range for degree {degree}")]
    CycleOutOfRange { entry: usize, degree: usize },
    #[error("cycle entry {entry} repeated")]
    CycleRepeated { entry: usize },
    #[error("cannot parse permutation from {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A permutation of the points `0..n` (printed 1-based).
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    /// The identity permutation on `n` points.
    pub fn identity(n: usize) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        Ok(Permutation {
            images: (0..n as u8).collect(),
        })
    }

    /// Builds a permutation from an image vector (`images[i]` = image of `i`).
    pub fn from_images(images: Vec<u8>) -> Result<Self, PermError> {
        let n = images.len();
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if (img as usize) >= n || seen[img as usize] {
                return Err(PermError::NotABijection { degree: n });
            }
            seen[img as usize] = true;
        }
        Ok(Permutation { images })
    }

    /// Builds a permutation of degree `n` from disjoint cycles of 0-based points.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self, PermError> {
        if n == 0 {
            return Err(PermError::ZeroDegree);
        }
        let mut images: Vec<u8> = (0..n as u8).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for (k, &entry) in cycle.iter().enumerate() {
                if entry >= n {
                    return Err(PermError::CycleOutOfRange { entry, degree: n });
                }
                if seen[entry] {
                    return Err(PermError::CycleRepeated { entry });
                }
                seen[entry] = true;
                let next = cycle[(k + 1) % cycle.len()];
                if next >= n {
                    return Err(PermError::CycleOutOfRange { entry: next, degree: n });
                }
                images[entry] = next as u8;
            }
        }
        Ok(Permutation { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> &[u8] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &img)| i == img as usize)
    }

    /// Composition `self ∘ other`: applies `other` first, then `self`.
    ///
    /// This is the right-to-left operator reading: the result maps
    /// `i` to `self(other(i))`.
    pub fn compose(&self, other: &Self) -> Result<Self, PermError> {
        if self.degree() != other.degree() {
            return Err(PermError::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        let images = other
            .images
            .iter()
            .map(|&q| self.images[q as usize])
            .collect();
        Ok(Permutation { images })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0u8; self.degree()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Signature: `+1` for even permutations, `-1` for odd ones.
    pub fn sign(&self) -> i8 {
        let mut transpositions = 0usize;
        for cycle in self.cycles_raw() {
            transpositions += cycle.len() - 1;
        }
        if transpositions.is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Number of cycles, counting fixed points.
    pub fn cycle_count(&self) -> usize {
        let mut seen = vec![false; self.degree()];
        let mut count = 0;
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            count += 1;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.apply(i);
            }
        }
        count
    }

    /// Nontrivial cycles in canonical form: each cycle starts at its
    /// smallest point, cycles sorted by smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        self.cycles_raw().into_iter().filter(|c| c.len() > 1).collect()
    }

    fn cycles_raw(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut cycles = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                cycle.push(i);
                i = self.apply(i);
            }
            cycles.push(cycle);
        }
        cycles
    }

    /// Canonical embedding into degree `m`: acts unchanged on the first
    /// points and fixes the trailing ones.
    pub fn embed(&self, m: usize) -> Result<Self, PermError> {
        if m < self.degree() {
            return Err(PermError::EmbedTooSmall {
                degree: self.degree(),
                target: m,
            });
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u8..m as u8);
        Ok(Permutation { images })
    }

    /// Acts on a word of tensor-factor labels: the label in slot `k`
    /// moves to slot `p(k)`, so `(1 2 3)` sends `(v1,v2,v3)` to
    /// `(v3,v1,v2)`.
    pub fn apply_to_word<T: Clone>(&self, word: &[T]) -> Result<Vec<T>, PermError> {
        if word.len() != self.degree() {
            return Err(PermError::WordLengthMismatch {
                len: word.len(),
                degree: self.degree(),
            });
        }
        let mut out: Vec<Option<T>> = vec![None; word.len()];
        for (k, label) in word.iter().enumerate() {
            out[self.apply(k)] = Some(label.clone());
        }
        Ok(out.into_iter().map(|x| x.expect("bijection")).collect())
    }

    /// Parses the canonical cycle text form at the given degree.
    pub fn parse(text: &str, degree: usize) -> Result<Self, PermError> {
        let err = |reason: &str| PermError::Parse {
            text: text.to_owned(),
            reason: reason.to_owned(),
        };
        let trimmed = text.trim();
        if trimmed == "e" {
            return Permutation::identity(degree);
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = trimmed;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(|| err("expected '('"))?;
            let close = open.find(')').ok_or_else(|| err("missing ')'"))?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split_whitespace() {
                let entry: usize = tok
                    .parse()
                    .map_err(|_| err(&format!("bad cycle entry {tok:?}")))?;
                if entry == 0 {
                    return Err(err("cycle entries are 1-based"));
                }
                cycle.push(entry - 1);
            }
            if cycle.len() < 2 {
                return Err(err("cycles must have at least two entries"));
            }
            cycles.push(cycle);
            rest = open[close + 1..].trim_start();
        }
        if cycles.is_empty() {
            return Err(err("empty permutation text"));
        }
        Permutation::from_cycles(degree, &cycles)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "e");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, point) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{}", point + 1)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}

/// All permutations of degree `n`, in lexicographic image order.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut out = Vec::new();
    let mut images: Vec<u8> = (0..n as u8).collect();
    loop {
        out.push(Permutation {
            images: images.clone(),
        });
        // next_permutation in lexicographic order
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| images[i] < images[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| images[j] > images[i]).unwrap();
        images.swap(i, j);
        images[i + 1..].reverse();
    }
    out
}

/// All permutations of the given 0-based points, embedded at degree `n`.
pub fn permutations_of_subset(n: usize, points: &[usize]) -> Vec<Permutation> {
    let k = points.len();
    let mut out = Vec::new();
    for small in all_permutations(k.max(1)) {
        let mut images: Vec<u8> = (0..n as u8).collect();
        if k > 0 {
            for (a, &point) in points.iter().enumerate() {
                images[point] = points[small.apply(a)] as u8;
            }
        }
        out.push(Permutation { images });
        if k == 0 {
            break;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, degree: usize) -> Permutation {
        Permutation::parse(text, degree).unwrap()
    }

    #[test]
    fn identity_basics() {
        let e = Permutation::identity(3).unwrap();
        assert_eq!(e.images(), &[0, 1, 2]);
        assert!(Permutation::identity(0).is_err());
        let q = p("(1 2 3)", 3);
        assert_eq!(e.compose(&q).unwrap(), q);
        assert_eq!(q.compose(&e).unwrap(), q);
        assert_eq!(Permutation::identity(4).unwrap().sign(), 1);
    }

    #[test]
    fn compose_is_right_to_left() {
        // (12)(13) applies (13) first: the product is the 3-cycle (1 3 2).
        let a = p("(1 2)", 3);
        let b = p("(1 3)", 3);
        assert_eq!(a.compose(&b).unwrap(), p("(1 3 2)", 3));
        // traversing a cycle both ways gives the identity
        let c = p("(1 2 3)", 3);
        let d = p("(1 3 2)", 3);
        assert!(c.compose(&d).unwrap().is_identity());
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(p("(1 2 3)", 3).inverse(), p("(1 3 2)", 3));
        assert_eq!(p("(1 2)", 2).inverse(), p("(1 2)", 2));
        let e = Permutation::identity(5).unwrap();
        assert_eq!(e.inverse(), e);
        for q in all_permutations(4) {
            assert!(q.compose(&q.inverse()).unwrap().is_identity());
        }
    }

    #[test]
    fn sign_examples() {
        assert_eq!(p("(1 2)", 2).sign(), -1);
        assert_eq!(p("(1 2 3)", 3).sign(), 1);
        for a in all_permutations(4) {
            for b in all_permutations(4).iter().step_by(5) {
                let ab = a.compose(b).unwrap();
                assert_eq!(ab.sign(), a.sign() * b.sign());
            }
        }
    }

    #[test]
    fn cycle_count_examples() {
        assert_eq!(Permutation::identity(3).unwrap().cycle_count(), 3);
        assert_eq!(p("(1 2 3)", 3).cycle_count(), 1);
        assert_eq!(p("(1 2)", 3).cycle_count(), 2);
    }

    #[test]
    fn embed_examples() {
        let t = p("(1 2)", 2);
        let embedded = t.embed(5).unwrap();
        assert_eq!(embedded, p("(1 2)", 5));
        assert_eq!(embedded.apply(3), 3);
        assert_eq!(t.embed(2).unwrap(), t);
        assert!(t.embed(1).is_err());
        assert_eq!(
            embedded.cycle_count(),
            t.cycle_count() + (5 - t.degree())
        );
    }

    #[test]
    fn word_action_moves_slots() {
        let rho = p("(1 2 3)", 3);
        assert_eq!(
            rho.apply_to_word(&["v1", "v2", "v3"]).unwrap(),
            vec!["v3", "v1", "v2"]
        );
        let e = Permutation::identity(3).unwrap();
        assert_eq!(e.apply_to_word(&[7, 8, 9]).unwrap(), vec![7, 8, 9]);
        for q in all_permutations(4) {
            let w: Vec<usize> = (10..14).collect();
            let round = q.inverse().apply_to_word(&q.apply_to_word(&w).unwrap()).unwrap();
            assert_eq!(round, w);
        }
    }

    #[test]
    fn word_action_is_a_left_action() {
        let w: Vec<usize> = (0..5).collect();
        for a in all_permutations(5).iter().step_by(7) {
            for b in all_permutations(5).iter().step_by(11) {
                let ab = a.compose(b).unwrap();
                assert_eq!(
                    ab.apply_to_word(&w).unwrap(),
                    a.apply_to_word(&b.apply_to_word(&w).unwrap()).unwrap()
                );
            }
        }
    }

    #[test]
    fn compose_associativity_sampled() {
        let perms = all_permutations(4);
        for a in perms.iter().step_by(3) {
            for b in perms.iter().step_by(5) {
                for c in perms.iter().step_by(7) {
                    let left = a.compose(b).unwrap().compose(c).unwrap();
                    let right = a.compose(&b.compose(c).unwrap()).unwrap();
                    assert_eq!(left, right);
                }
            }
        }
    }

    #[test]
    fn parse_format_round_trip() {
        for n in 1..=6 {
            for q in all_permutations(n) {
                let text = q.to_string();
                assert_eq!(Permutation::parse(&text, n).unwrap(), q);
            }
        }
        assert_eq!(p("(1 2 3)(4 5)", 5).to_string(), "(1 2 3)(4 5)");
        assert_eq!(Permutation::identity(4).unwrap().to_string(), "e");
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse("(1 2", 3).is_err());
        assert!(Permutation::parse("(0 1)", 3).is_err());
        assert!(Permutation::parse("(1 1)", 3).is_err());
        assert!(Permutation::parse("(4 5)", 3).is_err());
        assert!(Permutation::parse("", 3).is_err());
    }

    #[test]
    fn degree_mismatch_rejected() {
        let a = p("(1 2)", 2);
        let b = p("(1 2)", 3);
        assert!(a.compose(&b).is_err());
        assert!(a.apply_to_word(&[1, 2, 3]).is_err());
    }

    #[test]
    fn subset_permutations_fix_complement() {
        let perms = permutations_of_subset(5, &[0, 2, 3]);
        assert_eq!(perms.len(), 6);
        for q in &perms {
            assert_eq!(q.apply(1), 1);
            assert_eq!(q.apply(4), 4);
        }
    }
}
