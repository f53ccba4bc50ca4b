//! Partitions, Young diagrams and standard tableaux.
//!
//! Text forms: partitions as `"2,2"`, tableaux as rows joined by `/`,
//! e.g. `"1 2/3 4"`. The empty partition is valid and is the base of all
//! recursions; its unique tableau has n = 0.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A cell of a Young diagram, 1-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    /// Content = column − row.
    pub fn content(&self) -> i64 {
        self.col as i64 - self.row as i64
    }
}

/// A partition λ_1 ≥ λ_2 ≥ … ≥ λ_l ≥ 1, identified with its diagram.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!(
                "{parts:?} is not weakly decreasing"
            )));
        }
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of cells.
    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn rows(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.row >= 1
            && cell.col >= 1
            && cell.row <= self.parts.len()
            && cell.col <= self.parts[cell.row - 1]
    }

    /// Cells whose union with the diagram is again a diagram,
    /// sorted by decreasing content.
    pub fn addable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.parts.len() {
            if r == 1 || self.parts[r - 1] < self.parts[r - 2] {
                out.push(Cell::new(r, self.parts[r - 1] + 1));
            }
        }
        out.push(Cell::new(self.parts.len() + 1, 1));
        out.sort_by_key(|c| -c.content());
        out
    }

    /// Cells whose removal leaves a diagram, sorted by decreasing content.
    pub fn removable_cells(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for r in 1..=self.parts.len() {
            if r == self.parts.len() || self.parts[r] < self.parts[r - 1] {
                out.push(Cell::new(r, self.parts[r - 1]));
            }
        }
        out.sort_by_key(|c| -c.content());
        out
    }

    pub fn with_added(&self, cell: Cell) -> Result<Partition> {
        if !self.addable_cells().contains(&cell) {
            return Err(Error::InvalidPartition(format!(
                "cell ({},{}) is not addable to {self}",
                cell.row, cell.col
            )));
        }
        let mut parts = self.parts.clone();
        if cell.row == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[cell.row - 1] += 1;
        }
        Ok(Partition { parts })
    }

    pub fn with_removed(&self, cell: Cell) -> Result<Partition> {
        if !self.removable_cells().contains(&cell) {
            return Err(Error::InvalidPartition(format!(
                "cell ({},{}) is not removable from {self}",
                cell.row, cell.col
            )));
        }
        let mut parts = self.parts.clone();
        parts[cell.row - 1] -= 1;
        parts.retain(|&p| p > 0);
        Ok(Partition { parts })
    }

    /// If `self` is `mu` plus exactly one cell, returns that cell.
    pub fn cell_added_from(&self, mu: &Partition) -> Option<Cell> {
        if self.n() != mu.n() + 1 || self.parts.len() < mu.parts.len() {
            return None;
        }
        let mut added = None;
        for r in 0..self.parts.len() {
            let mp = mu.parts.get(r).copied().unwrap_or(0);
            match self.parts[r].checked_sub(mp) {
                Some(0) => {}
                Some(1) => {
                    if added.is_some() {
                        return None;
                    }
                    added = Some(Cell::new(r + 1, self.parts[r]));
                }
                _ => return None,
            }
        }
        added
    }

    /// Hook length of a cell: 1 + arm + leg.
    pub fn hook_length(&self, cell: Cell) -> usize {
        debug_assert!(self.contains(cell));
        let arm = self.parts[cell.row - 1] - cell.col;
        let leg = (cell.row..self.parts.len())
            .take_while(|&r| self.parts[r] >= cell.col)
            .count();
        1 + arm + leg
    }

    /// Product of all hook lengths; equals n!/f_λ.
    pub fn hook_product(&self) -> BigInt {
        let mut prod = BigInt::one();
        for (r, &len) in self.parts.iter().enumerate() {
            for c in 1..=len {
                prod *= BigInt::from(self.hook_length(Cell::new(r + 1, c)));
            }
        }
        prod
    }

    /// Number of standard tableaux f_λ = n!/hook_product, always exact.
    pub fn dimension(&self) -> BigInt {
        let (q, r) = num_integer::div_rem(factorial(self.n()), self.hook_product());
        assert!(r == BigInt::from(0), "hook product must divide n!");
        q
    }

    /// Parses `"2,2"`; an empty string is the empty partition.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let parts: Vec<usize> = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?}")))
            })
            .collect::<Result<_>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for p in &self.parts {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
            first = false;
        }
        Ok(())
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// All partitions of n, parts in decreasing-lexicographic order; (n) first.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition {
                parts: prefix.clone(),
            });
            return;
        }
        for first in (1..=rem.min(max)).rev() {
            prefix.push(first);
            rec(rem - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// A standard tableau: bijective filling of a diagram with 1..n, strictly
/// increasing along rows and down columns.
#[derive(Clone, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub struct StandardTableau {
    rows: Vec<Vec<usize>>,
}

impl StandardTableau {
    pub fn empty() -> Self {
        StandardTableau { rows: Vec::new() }
    }

    /// Validates shape, bijectivity and standardness; errors name the
    /// offending cell.
    pub fn from_rows(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(|r| r.len()).collect())
            .map_err(|_| Error::NotStandard("row lengths do not form a partition".into()))?;
        let n = shape.n();
        let mut seen = vec![false; n];
        for (r, row) in rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e < 1 || e > n || seen[e - 1] {
                    return Err(Error::NotStandard(format!(
                        "entry {e} at cell ({},{}) is not a fresh value in 1..={n}",
                        r + 1,
                        c + 1
                    )));
                }
                seen[e - 1] = true;
                if c > 0 && row[c - 1] >= e {
                    return Err(Error::NotStandard(format!(
                        "row not increasing at cell ({},{})",
                        r + 1,
                        c + 1
                    )));
                }
                if r > 0 && rows[r - 1][c] >= e {
                    return Err(Error::NotStandard(format!(
                        "column not increasing at cell ({},{})",
                        r + 1,
                        c + 1
                    )));
                }
            }
        }
        Ok(StandardTableau { rows })
    }

    pub fn n(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Partition {
        Partition {
            parts: self.rows.iter().map(|r| r.len()).collect(),
        }
    }

    pub fn rows_data(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn entry(&self, cell: Cell) -> Option<usize> {
        self.rows
            .get(cell.row - 1)
            .and_then(|r| r.get(cell.col - 1))
            .copied()
    }

    /// Cell occupied by the entry k.
    pub fn cell_of(&self, k: usize) -> Cell {
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                if e == k {
                    return Cell::new(r + 1, c + 1);
                }
            }
        }
        panic!("entry {k} not present in tableau");
    }

    /// Content sequence c_1,…,c_n with c_k the content of the cell of k.
    pub fn contents(&self) -> Vec<i64> {
        let mut out = vec![0i64; self.n()];
        for (r, row) in self.rows.iter().enumerate() {
            for (c, &e) in row.iter().enumerate() {
                out[e - 1] = c as i64 - r as i64;
            }
        }
        out
    }

    pub fn content_of(&self, k: usize) -> i64 {
        self.cell_of(k).content()
    }

    /// Removes the cell occupied by n; errors on the empty tableau.
    pub fn branch_down(&self) -> Result<StandardTableau> {
        let n = self.n();
        if n == 0 {
            return Err(Error::Precondition("cannot branch down from n = 0".into()));
        }
        Ok(self.restrict(n - 1))
    }

    /// Subtableau on the entries 1..=k.
    pub fn restrict(&self, k: usize) -> StandardTableau {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| r.iter().copied().filter(|&e| e <= k).collect::<Vec<_>>())
            .filter(|r: &Vec<usize>| !r.is_empty())
            .collect();
        StandardTableau { rows }
    }

    /// The tableau with entries i and i+1 swapped, if it is standard.
    pub fn swap_adjacent(&self, i: usize) -> Option<StandardTableau> {
        let rows: Vec<Vec<usize>> = self
            .rows
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&e| {
                        if e == i {
                            i + 1
                        } else if e == i + 1 {
                            i
                        } else {
                            e
                        }
                    })
                    .collect()
            })
            .collect();
        StandardTableau::from_rows(rows).ok()
    }

    /// Extends with the entry n+1 placed at an addable cell of the shape.
    pub fn with_entry_added(&self, cell: Cell) -> Result<StandardTableau> {
        self.shape().with_added(cell)?;
        let mut rows = self.rows.clone();
        let entry = self.n() + 1;
        if cell.row == rows.len() + 1 {
            rows.push(vec![entry]);
        } else {
            rows[cell.row - 1].push(entry);
        }
        StandardTableau::from_rows(rows)
    }

    /// Parses `"1 2/3 4"`.
    pub fn parse(text: &str) -> Result<Self> {
        let rows: Vec<Vec<usize>> = text
            .split('/')
            .map(|row| {
                row.split_whitespace()
                    .map(|t| {
                        t.parse::<usize>()
                            .map_err(|_| Error::Parse(format!("bad tableau entry {t:?}")))
                    })
                    .collect::<Result<Vec<usize>>>()
            })
            .collect::<Result<_>>()?;
        StandardTableau::from_rows(rows)
    }
}

impl fmt::Display for StandardTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (r, row) in self.rows.iter().enumerate() {
            if r > 0 {
                write!(f, "/")?;
            }
            for (c, e) in row.iter().enumerate() {
                if c > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{e}")?;
            }
        }
        Ok(())
    }
}

/// All standard tableaux of the given shape, by recursive cell filling in a
/// canonical order (entry k placed row-by-row top to bottom), so fixtures
/// are stable across runs. The count equals f_λ.
pub fn standard_tableaux(shape: &Partition) -> Vec<StandardTableau> {
    fn rec(
        shape: &[usize],
        filled: &mut Vec<Vec<usize>>,
        k: usize,
        n: usize,
        out: &mut Vec<StandardTableau>,
    ) {
        if k > n {
            out.push(StandardTableau {
                rows: filled.clone(),
            });
            return;
        }
        for r in 0..shape.len() {
            let c = filled[r].len();
            if c < shape[r] && (r == 0 || filled[r - 1].len() > c) {
                filled[r].push(k);
                rec(shape, filled, k + 1, n, out);
                filled[r].pop();
            }
        }
    }
    let mut out = Vec::new();
    let mut filled = vec![Vec::new(); shape.rows()];
    rec(shape.parts(), &mut filled, 1, shape.n(), &mut out);
    out
}
