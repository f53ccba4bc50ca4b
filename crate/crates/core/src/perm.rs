//! Permutations of {1,…,n} in one-line notation.
//!
//! One-line images are the canonical form; cycle notation is used only for
//! display and parsing. The composition convention is fixed once, here:
//! `compose(p, q)` applies `q` first, then `p`. Everything downstream
//! (group-algebra products, tensor actions, fusion factors) relies on it.

use std::fmt;

use crate::error::{Error, Result};
use crate::young::Partition;

/// Default cap for [`all_permutations`]; 8! = 40320 elements.
pub const DEFAULT_ENUM_CAP: usize = 8;

/// A permutation of {1,…,n}, stored as one-line images.
///
/// Value-like and hashable so it can key sparse group-algebra maps. The
/// derived `Ord` (lexicographic on one-line images) is the canonical term
/// order used for serialization.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (1..=n as u8).collect(),
        }
    }

    /// Builds a permutation from 1-based one-line images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("degree {n} too large")));
        }
        let mut seen = vec![false; n];
        for &v in &images {
            if v < 1 || v > n || seen[v - 1] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection of 1..={n}"
                )));
            }
            seen[v - 1] = true;
        }
        Ok(Permutation {
            images: images.into_iter().map(|v| v as u8).collect(),
        })
    }

    /// The transposition (i j) in degree n. Requires 1 ≤ i < j ≤ n.
    pub fn transposition(i: usize, j: usize, n: usize) -> Result<Self> {
        if i == 0 || j > n {
            return Err(Error::IndexOutOfRange {
                what: "transposition index",
                value: if i == 0 { i } else { j },
                max: n,
            });
        }
        if i >= j {
            return Err(Error::InvalidPermutation(format!(
                "transposition needs i < j, got ({i} {j})"
            )));
        }
        let mut p = Permutation::identity(n);
        p.images.swap(i - 1, j - 1);
        Ok(p)
    }

    /// The adjacent transposition s_i = (i, i+1) in degree n.
    pub fn adjacent(i: usize, n: usize) -> Result<Self> {
        Self::transposition(i, i + 1, n)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 1-based point x.
    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x - 1] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &v)| v as usize == i + 1)
    }

    /// Group product: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch {
                left: self.degree(),
                right: other.degree(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x as usize - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.images.len()];
        for (i, &v) in self.images.iter().enumerate() {
            images[v as usize - 1] = i as u8 + 1;
        }
        Permutation { images }
    }

    /// Embeds into degree m ≥ n by appending fixed points.
    pub fn embed(&self, m: usize) -> Result<Permutation> {
        if m < self.degree() {
            return Err(Error::Precondition(format!(
                "cannot embed degree {} into smaller degree {m}",
                self.degree()
            )));
        }
        let mut images = self.images.clone();
        images.extend(self.degree() as u8 + 1..=m as u8);
        Ok(Permutation { images })
    }

    /// Nontrivial cycles, each starting at its least point, sorted by that point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Multiset of cycle lengths, sorted decreasingly; a partition of n.
    pub fn cycle_type(&self) -> Partition {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut lengths = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut len = 0;
            let mut x = start;
            while !seen[x - 1] {
                seen[x - 1] = true;
                len += 1;
                x = self.apply(x);
            }
            lengths.push(len);
        }
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Partition::new(lengths).expect("cycle lengths form a partition")
    }

    /// Parses cycle notation, e.g. `"(1 2)(3 4)"` or `"e"`, into degree n.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let text = text.trim();
        if text == "e" || text.is_empty() {
            return Ok(Permutation::identity(n));
        }
        let mut p = Permutation::identity(n);
        let mut rest = text;
        while !rest.is_empty() {
            let rest_trim = rest.trim_start();
            if !rest_trim.starts_with('(') {
                return Err(Error::Parse(format!("expected '(' in cycle text {text:?}")));
            }
            let close = rest_trim
                .find(')')
                .ok_or_else(|| Error::Parse(format!("unclosed cycle in {text:?}")))?;
            let body = &rest_trim[1..close];
            let points: Vec<usize> = body
                .split_whitespace()
                .map(|t| {
                    t.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad cycle entry {t:?}")))
                })
                .collect::<Result<_>>()?;
            if points.len() < 2 {
                return Err(Error::Parse(format!("cycle ({body}) too short")));
            }
            for &x in &points {
                if x < 1 || x > n {
                    return Err(Error::IndexOutOfRange {
                        what: "cycle entry",
                        value: x,
                        max: n,
                    });
                }
            }
            let mut cycle = Permutation::identity(n);
            for w in 0..points.len() {
                let from = points[w];
                let to = points[(w + 1) % points.len()];
                cycle.images[from - 1] = to as u8;
            }
            // left-multiply so that "(1 2)(3 4)" composes as written
            p = cycle.compose(&p)?;
            rest = &rest_trim[close + 1..];
        }
        Ok(p)
    }

    /// A word i_1,…,i_m of adjacent-transposition indices with
    /// p = s_{i_m} ∘ … ∘ s_{i_1} (rightmost letter applied first).
    /// Obtained by peeling descents: p·s_{i_1}·…·s_{i_m} = identity.
    pub fn reduced_word(&self) -> Vec<usize> {
        let mut images = self.images.clone();
        let mut word = Vec::new();
        while let Some(i) =
            (0..images.len().saturating_sub(1)).find(|&i| images[i] > images[i + 1])
        {
            images.swap(i, i + 1);
            word.push(i + 1);
        }
        word
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
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// All n! permutations of degree n in lexicographic one-line order.
pub fn all_permutations(n: usize) -> Result<Vec<Permutation>> {
    all_permutations_capped(n, DEFAULT_ENUM_CAP)
}

/// As [`all_permutations`] with an explicit degree cap (memory guard).
pub fn all_permutations_capped(n: usize, cap: usize) -> Result<Vec<Permutation>> {
    if n > cap {
        return Err(Error::CapExceeded {
            what: "enumeration degree",
            value: n,
            cap,
        });
    }
    let mut out = Vec::new();
    let mut current: Vec<u8> = (1..=n as u8).collect();
    loop {
        out.push(Permutation {
            images: current.clone(),
        });
        // next lexicographic permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| current[i] < current[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| current[j] > current[i]).unwrap();
        current.swap(i, j);
        current[i + 1..].reverse();
    }
    Ok(out)
}
