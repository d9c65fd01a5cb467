//! Standard Young tableau combinatorics: validation, enumeration,
//! ancestry, words and lexical order, MOLD, hooks and the normalization
//! constant, horizontal/vertical permutation sets, amputated tableaux.
//!
//! Entries are stored 0-based; the textual form `"1,2,4/3,5"` is 1-based
//! with rows joined by `/`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use thiserror::Error;

use crate::perm::{permutations_of_subset, Permutation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableauError {
    #[error("tableau must have at least one box")]
    Empty,
    #[error("row lengths must decrease weakly from top to bottom (row {row})")]
    MisalignedShape { row: usize },
    #[error("entries must be exactly 1..=n, each used once (offender: {entry})")]
    BadEntries { entry: usize },
    #[error("entries must increase along row {row}")]
    RowNotIncreasing { row: usize },
    #[error("entries must increase down column {column}")]
    ColumnNotIncreasing { column: usize },
    #[error("a single-box tableau has no parent")]
    NoParent,
    #[error("ancestor {generations} generations back does not exist for {size} boxes")]
    AncestorOutOfRange { generations: usize, size: usize },
    #[error("no column with the given entries")]
    ColumnNotFound,
    #[error("no row with the given entries")]
    RowNotFound,
    #[error("degree mismatch: permutation of degree {perm} on tableau of {size} boxes")]
    DegreeMismatch { perm: usize, size: usize },
    #[error("cannot parse tableau from {text:?}: {reason}")]
    Parse { text: String, reason: String },
}

/// A standard Young tableau: a left- and top-aligned arrangement of the
/// entries `0..n`, strictly increasing along rows and down columns.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct YoungTableau {
    rows: Vec<Vec<usize>>,
}

impl YoungTableau {
    /// Validates the given rows (0-based entries).
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let n: usize = rows.iter().map(|r| r.len()).sum();
        if n == 0 {
            return Err(TableauError::Empty);
        }
        for i in 1..rows.len() {
            if rows[i].len() > rows[i - 1].len() || rows[i].is_empty() {
                return Err(TableauError::MisalignedShape { row: i });
            }
        }
        let mut seen = vec![false; n];
        for row in &rows {
            for &entry in row {
                if entry >= n || seen[entry] {
                    return Err(TableauError::BadEntries { entry: entry + 1 });
                }
                seen[entry] = true;
            }
        }
        for (i, row) in rows.iter().enumerate() {
            if row.windows(2).any(|w| w[0] >= w[1]) {
                return Err(TableauError::RowNotIncreasing { row: i });
            }
        }
        for j in 0..rows[0].len() {
            for i in 1..rows.len() {
                if rows[i].len() > j && rows[i][j] <= rows[i - 1][j] {
                    return Err(TableauError::ColumnNotIncreasing { column: j });
                }
            }
        }
        Ok(YoungTableau { rows })
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// Row lengths, top to bottom.
    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    /// Entries of column `j`, top to bottom.
    pub fn column(&self, j: usize) -> Vec<usize> {
        self.rows
            .iter()
            .filter_map(|row| row.get(j).copied())
            .collect()
    }

    pub fn columns(&self) -> Vec<Vec<usize>> {
        (0..self.rows[0].len()).map(|j| self.column(j)).collect()
    }

    /// All standard Young tableaux with `n` boxes, sorted by row-word.
    pub fn enumerate(n: usize) -> Vec<YoungTableau> {
        assert!(n >= 1, "need at least one box");
        let mut generation = vec![YoungTableau {
            rows: vec![vec![0]],
        }];
        for _ in 1..n {
            generation = generation.iter().flat_map(|t| t.children()).collect();
        }
        // row-word first; distinct tableaux can share a row-word, so break
        // ties by wider shape
        generation.sort_by(|a, b| {
            a.row_word()
                .cmp(&b.row_word())
                .then_with(|| b.shape().cmp(&a.shape()))
        });
        generation
    }

    /// Removes the box with the largest entry.
    pub fn parent(&self) -> Result<YoungTableau, TableauError> {
        let n = self.size();
        if n == 1 {
            return Err(TableauError::NoParent);
        }
        let mut rows = self.rows.clone();
        for row in rows.iter_mut() {
            if row.last() == Some(&(n - 1)) {
                row.pop();
                break;
            }
        }
        rows.retain(|r| !r.is_empty());
        Ok(YoungTableau { rows })
    }

    /// The tableau `m` generations back (`m = 0` gives a copy).
    pub fn ancestor(&self, m: usize) -> Result<YoungTableau, TableauError> {
        if m >= self.size() {
            return Err(TableauError::AncestorOutOfRange {
                generations: m,
                size: self.size(),
            });
        }
        let mut t = self.clone();
        for _ in 0..m {
            t = t.parent()?;
        }
        Ok(t)
    }

    /// Returns true when `other` is an ancestor of `self` strictly fewer
    /// boxes back (the parent map applied one or more times).
    pub fn has_ancestor(&self, other: &YoungTableau) -> bool {
        let (n, g) = (self.size(), other.size());
        g < n && self.ancestor(n - g).as_ref() == Ok(other)
    }

    /// All tableaux obtained by adding the next box at an outer corner.
    pub fn children(&self) -> Vec<YoungTableau> {
        let n = self.size();
        let mut out = Vec::new();
        for i in 0..self.rows.len() {
            if i == 0 || self.rows[i].len() < self.rows[i - 1].len() {
                let mut rows = self.rows.clone();
                rows[i].push(n);
                out.push(YoungTableau { rows });
            }
        }
        let mut rows = self.rows.clone();
        rows.push(vec![n]);
        out.push(YoungTableau { rows });
        out
    }

    /// Entries read row-wise, top to bottom.
    pub fn row_word(&self) -> Vec<usize> {
        self.rows.iter().flatten().copied().collect()
    }

    /// Entries read column-wise, left to right.
    pub fn column_word(&self) -> Vec<usize> {
        self.columns().into_iter().flatten().collect()
    }

    pub fn is_row_ordered(&self) -> bool {
        let mut expected = 0;
        for row in &self.rows {
            for &entry in row {
                if entry != expected {
                    return false;
                }
                expected += 1;
            }
        }
        true
    }

    pub fn is_column_ordered(&self) -> bool {
        let mut expected = 0;
        for j in 0..self.rows[0].len() {
            for row in &self.rows {
                match row.get(j) {
                    Some(&entry) if entry == expected => expected += 1,
                    Some(_) => return false,
                    None => break,
                }
            }
        }
        true
    }

    /// A tableau is lexically ordered when its row-word or column-word
    /// (or both) is the sequence `1,2,…,n`.
    pub fn is_lexically_ordered(&self) -> bool {
        self.is_row_ordered() || self.is_column_ordered()
    }

    /// Measure of lexical disorder: the least number of parent-map
    /// applications that reaches a lexically ordered tableau.
    pub fn mold(&self) -> usize {
        let mut t = self.clone();
        let mut m = 0;
        while !t.is_lexically_ordered() {
            t = t.parent().expect("small tableaux are lexically ordered");
            m += 1;
        }
        m
    }

    /// Hook length of each cell.
    fn hooks(&self) -> Vec<usize> {
        let shape = self.shape();
        let mut out = Vec::new();
        for (i, &len) in shape.iter().enumerate() {
            for j in 0..len {
                let arm = len - j - 1;
                let leg = shape[i + 1..].iter().filter(|&&l| l > j).count();
                out.push(arm + leg + 1);
            }
        }
        out
    }

    /// The normalization constant making `α·S_Θ·A_Θ` idempotent:
    /// `(∏ row lengths! · ∏ column lengths!) / ∏ hook lengths`.
    pub fn alpha(&self) -> BigRational {
        let mut num = BigInt::one();
        for row in &self.rows {
            num *= factorial(row.len());
        }
        for column in self.columns() {
            num *= factorial(column.len());
        }
        let mut den = BigInt::one();
        for hook in self.hooks() {
            den *= BigInt::from(hook);
        }
        BigRational::new(num, den)
    }

    /// All permutations preserving each row setwise, embedded at degree `n`.
    pub fn horizontal_perms(&self) -> Vec<Permutation> {
        product_of_subset_groups(self.size(), &self.rows)
    }

    /// All permutations preserving each column setwise, embedded at degree `n`.
    pub fn vertical_perms(&self) -> Vec<Permutation> {
        product_of_subset_groups(self.size(), &self.columns())
    }

    /// Removes every row that does not overlap the given column.
    /// The column is identified by its entries (0-based, top to bottom).
    pub fn amputate_rows(&self, column: &[usize]) -> Result<Grid, TableauError> {
        let j = self
            .columns()
            .iter()
            .position(|c| c == column)
            .ok_or(TableauError::ColumnNotFound)?;
        let rows = self
            .rows
            .iter()
            .filter(|row| row.len() > j)
            .cloned()
            .collect();
        Ok(Grid { rows })
    }

    /// Removes every column that does not overlap the given row.
    pub fn amputate_columns(&self, row: &[usize]) -> Result<Grid, TableauError> {
        let i = self
            .rows
            .iter()
            .position(|r| r == row)
            .ok_or(TableauError::RowNotFound)?;
        let width = self.rows[i].len();
        let rows = self
            .rows
            .iter()
            .map(|r| r[..r.len().min(width)].to_vec())
            .collect();
        Ok(Grid { rows })
    }

    /// The grid with every entry `e` replaced by `ρ(e)` in place.
    pub fn relabeled_grid(&self, rho: &Permutation) -> Result<Vec<Vec<usize>>, TableauError> {
        if rho.degree() != self.size() {
            return Err(TableauError::DegreeMismatch {
                perm: rho.degree(),
                size: self.size(),
            });
        }
        Ok(self
            .rows
            .iter()
            .map(|row| row.iter().map(|&e| rho.apply(e)).collect())
            .collect())
    }

    /// Parses the 1-based text form, e.g. `"1,2,4/3,5"`.
    pub fn parse(text: &str) -> Result<Self, TableauError> {
        let err = |reason: String| TableauError::Parse {
            text: text.to_owned(),
            reason,
        };
        let mut rows = Vec::new();
        for row_text in text.trim().split('/') {
            let mut row = Vec::new();
            for tok in row_text.split(',') {
                let entry: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| err(format!("bad entry {tok:?}")))?;
                if entry == 0 {
                    return Err(err("entries are 1-based".to_owned()));
                }
                row.push(entry - 1);
            }
            rows.push(row);
        }
        YoungTableau::new(rows)
    }
}

impl fmt::Display for YoungTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows_one_based(&self.rows, f)
    }
}

/// A tableau-like grid that need not satisfy the Young tableau
/// invariants, as produced by amputation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Grid {
    rows: Vec<Vec<usize>>,
}

impl Grid {
    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    /// True when all rows have the same length.
    pub fn is_rectangular(&self) -> bool {
        !self.rows.is_empty() && self.rows.iter().all(|r| r.len() == self.rows[0].len())
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_rows_one_based(&self.rows, f)
    }
}

fn fmt_rows_one_based(rows: &[Vec<usize>], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    for (i, row) in rows.iter().enumerate() {
        if i > 0 {
            write!(f, "/")?;
        }
        for (j, entry) in row.iter().enumerate() {
            if j > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", entry + 1)?;
        }
    }
    Ok(())
}

fn factorial(k: usize) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// Direct product of the symmetric groups on the given disjoint subsets,
/// embedded at the given degree.
fn product_of_subset_groups(degree: usize, subsets: &[Vec<usize>]) -> Vec<Permutation> {
    let mut out = vec![Permutation::identity(degree).expect("degree >= 1")];
    for subset in subsets {
        if subset.len() < 2 {
            continue;
        }
        let locals = permutations_of_subset(degree, subset);
        let mut next = Vec::with_capacity(out.len() * locals.len());
        for q in &out {
            for l in &locals {
                next.push(q.compose(l).expect("equal degrees"));
            }
        }
        out = next;
    }
    out.sort();
    out
}
