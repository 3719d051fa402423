//! Permutations on a finite corner set `1..=n`.
//!
//! Action is written postfix (`c^P`) and products are read left to right:
//! `c^(P·Q) = (c^P)^Q`. Worked example: `(1 3) · (1 2)(3 4) = (1 4 3 2)`.
//! All public interfaces speak 1-based corners; storage is 0-based.

use std::fmt;

use crate::error::{Error, Result};

/// A corner, i.e. an element of the ground set `1..=n`.
pub type Corner = usize;

/// A bijection on corners `1..=n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Perm {
    // images[i] is the 0-based image of 0-based corner i
    images: Vec<usize>,
}

impl Perm {
    /// The identity permutation on `1..=n`.
    pub fn identity(n: usize) -> Perm {
        Perm {
            images: (0..n).collect(),
        }
    }

    /// Build from a 1-based image sequence: `images[i]` is the image of corner `i+1`.
    pub fn from_images(images: Vec<Corner>) -> Result<Perm> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &c in &images {
            if c < 1 || c > n {
                return Err(Error::NotABijection(n));
            }
            if seen[c - 1] {
                return Err(Error::NotABijection(n));
            }
            seen[c - 1] = true;
        }
        Ok(Perm {
            images: images.into_iter().map(|c| c - 1).collect(),
        })
    }

    /// Build from disjoint cycles of 1-based corners; unlisted corners stay fixed.
    pub fn from_cycles(cycles: &[Vec<Corner>], n: usize) -> Result<Perm> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut seen = vec![false; n];
        for cycle in cycles {
            for &c in cycle {
                if c < 1 || c > n {
                    return Err(Error::CornerOutOfRange(c, n));
                }
                if seen[c - 1] {
                    return Err(Error::RepeatedCorner(c));
                }
                seen[c - 1] = true;
            }
            for (i, &c) in cycle.iter().enumerate() {
                let next = cycle[(i + 1) % cycle.len()];
                images[c - 1] = next - 1;
            }
        }
        Ok(Perm { images })
    }

    /// The transposition `(a b)` on `1..=n`.
    pub fn transposition(a: Corner, b: Corner, n: usize) -> Result<Perm> {
        if a == b {
            return Err(Error::DegeneratePair(a));
        }
        Perm::from_cycles(&[vec![a, b]], n)
    }

    /// Number of corners acted on.
    pub fn order(&self) -> usize {
        self.images.len()
    }

    /// The image `c^P` of a 1-based corner.
    pub fn apply(&self, c: Corner) -> Corner {
        self.images[c - 1] + 1
    }

    /// Left-to-right product: `c^(self·other) = (c^self)^other`.
    pub fn compose(&self, other: &Perm) -> Result<Perm> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        Ok(Perm {
            images: self.images.iter().map(|&i| other.images[i]).collect(),
        })
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j] = i;
        }
        Perm { images }
    }

    /// Conjugate `self^other = other^{-1} · self · other`.
    ///
    /// A cycle `(c1 c2 …)` of `self` becomes `(c1^other c2^other …)`.
    pub fn conjugate(&self, other: &Perm) -> Result<Perm> {
        if self.order() != other.order() {
            return Err(Error::OrderMismatch(self.order(), other.order()));
        }
        let mut images = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            images[other.images[i]] = other.images[j];
        }
        Ok(Perm { images })
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// All cycles ≤ length 2.
    pub fn is_involution(&self) -> bool {
        (0..self.images.len()).all(|i| self.images[self.images[i]] == i)
    }

    /// Fixed-point-free involution: all cycles of length exactly 2.
    pub fn is_matching(&self) -> bool {
        self.is_involution() && self.images.iter().enumerate().all(|(i, &j)| i != j)
    }

    /// Disjoint cycle decomposition including fixed points.
    ///
    /// Each cycle starts at its minimum corner; cycles are sorted by that minimum.
    pub fn cycles(&self) -> Vec<Vec<Corner>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut c = start;
            loop {
                seen[c] = true;
                cycle.push(c + 1);
                c = self.images[c];
                if c == start {
                    break;
                }
            }
            out.push(cycle);
        }
        out
    }

    /// Canonical cycle notation: fixed points omitted, identity prints as `()`.
    pub fn cycle_string(&self) -> String {
        let mut s = String::new();
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            s.push('(');
            for (i, c) in cycle.iter().enumerate() {
                if i > 0 {
                    s.push(' ');
                }
                s.push_str(&c.to_string());
            }
            s.push(')');
        }
        if s.is_empty() {
            s.push_str("()");
        }
        s
    }

    /// Parse cycle notation: `perm := cycle*`, `cycle := '(' int (sep int)* ')'`,
    /// separators are commas or whitespace. Empty string or `()` is the identity.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Perm> {
        let mut cycles: Vec<Vec<Corner>> = Vec::new();
        let mut current: Option<Vec<Corner>> = None;
        let mut digits = String::new();
        let flush = |digits: &mut String, current: &mut Option<Vec<Corner>>| -> Result<()> {
            if digits.is_empty() {
                return Ok(());
            }
            let c: usize = digits
                .parse()
                .map_err(|_| Error::ParseCycles(format!("bad integer '{digits}'")))?;
            digits.clear();
            match current {
                Some(cycle) => cycle.push(c),
                None => return Err(Error::ParseCycles(format!("corner {c} outside a cycle"))),
            }
            Ok(())
        };
        for ch in text.chars() {
            match ch {
                '(' => {
                    if current.is_some() {
                        return Err(Error::ParseCycles("nested '('".into()));
                    }
                    current = Some(Vec::new());
                }
                ')' => {
                    flush(&mut digits, &mut current)?;
                    let cycle = current
                        .take()
                        .ok_or_else(|| Error::ParseCycles("unmatched ')'".into()))?;
                    if !cycle.is_empty() {
                        cycles.push(cycle);
                    }
                }
                '0'..='9' => digits.push(ch),
                ',' | ' ' | '\t' | '\n' | '\r' => flush(&mut digits, &mut current)?,
                _ => return Err(Error::ParseCycles(format!("unexpected character '{ch}'"))),
            }
        }
        if current.is_some() {
            return Err(Error::ParseCycles("unclosed '('".into()));
        }
        if !digits.is_empty() {
            return Err(Error::ParseCycles(format!("stray integer '{digits}'")));
        }
        Perm::from_cycles(&cycles, n)
    }

    /// 1-based image sequence.
    pub fn images(&self) -> Vec<Corner> {
        self.images.iter().map(|&i| i + 1).collect()
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Perm[{}]{}", self.order(), self.cycle_string())
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_string())
    }
}

/// Factor a cycle `(c_1 c_2 … c_k)` into transpositions `(c_k c_{k-1}) … (c_2 c_1)`.
///
/// The list is in product reading order, leftmost factor first; composing it
/// left to right reproduces the cycle. A fixed point yields the empty list.
pub fn cycle_to_transpositions(cycle: &[Corner]) -> Vec<(Corner, Corner)> {
    let k = cycle.len();
    (1..k).rev().map(|i| (cycle[i], cycle[i - 1])).collect()
}
