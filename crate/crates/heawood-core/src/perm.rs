//! Permutations of a finite ground set, with disjoint-cycle text notation.
//!
//! Points are `0..n`; the text format speaks presentation labels through a
//! [`LabelingMap`], e.g. `(1,3,5,7,9,11,13)(2,4,6,8,10,12,14)` or `(v,w)(...)`.
//! The identity is spelled `()`.

use std::fmt::Write as _;

use crate::graph::LabelingMap;
use crate::{Error, Result};

/// A bijection on `[0, n)`, stored as the image table.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Perm {
    images: Vec<u8>,
}

impl Perm {
    pub fn identity(degree: usize) -> Self {
        Perm {
            images: (0..degree as u8).collect(),
        }
    }

    /// Builds a permutation from its image table, validating bijectivity.
    pub fn from_images(images: Vec<u8>) -> Result<Self> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(Error::Input(format!(
                "ground set of {n} points is too large"
            )));
        }
        let mut seen = vec![false; n];
        for &img in &images {
            if img as usize >= n || seen[img as usize] {
                return Err(Error::Input("image table is not a bijection".into()));
            }
            seen[img as usize] = true;
        }
        Ok(Perm { images })
    }

    /// Builds a permutation from disjoint cycles over points.
    pub fn from_cycles(degree: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<u8> = (0..degree as u8).collect();
        let mut used = vec![false; degree];
        for cycle in cycles {
            for (i, &p) in cycle.iter().enumerate() {
                if p >= degree {
                    return Err(Error::Input(format!(
                        "point {p} outside ground set of {degree}"
                    )));
                }
                if used[p] {
                    return Err(Error::Input(format!("point {p} appears twice")));
                }
                used[p] = true;
                images[p] = cycle[(i + 1) % cycle.len()] as u8;
            }
        }
        Ok(Perm { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, &img)| i == img as usize)
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Perm) -> Perm {
        debug_assert_eq!(self.degree(), other.degree());
        Perm {
            images: other
                .images
                .iter()
                .map(|&mid| self.images[mid as usize])
                .collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut images = vec![0u8; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[img as usize] = i as u8;
        }
        Perm { images }
    }

    pub fn pow(&self, mut exp: u64) -> Perm {
        let mut result = Perm::identity(self.degree());
        let mut base = self.clone();
        while exp > 0 {
            if exp & 1 == 1 {
                result = result.compose(&base);
            }
            base = base.compose(&base);
            exp >>= 1;
        }
        result
    }

    /// Least m >= 1 with self^m = identity; the lcm of the cycle lengths.
    pub fn order(&self) -> u64 {
        fn gcd(a: u64, b: u64) -> u64 {
            if b == 0 {
                a
            } else {
                gcd(b, a % b)
            }
        }
        self.cycles()
            .iter()
            .map(|c| c.len() as u64)
            .fold(1, |acc, len| acc / gcd(acc, len) * len)
    }

    /// Nontrivial cycles, each starting at its least point, ordered by that
    /// least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.apply(start) == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut p = self.apply(start);
            while p != start {
                seen[p] = true;
                cycle.push(p);
                p = self.apply(p);
            }
            out.push(cycle);
        }
        out
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.compose(other) == other.compose(self)
    }

    /// Points fixed by this permutation.
    pub fn fixed_points(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&p| self.apply(p) == p).collect()
    }

    /// Parses disjoint-cycle notation over the labeling's ground set.
    /// Whitespace around labels is ignored; `""` and `"()"` are the identity.
    pub fn parse(notation: &str, labeling: &LabelingMap) -> Result<Perm> {
        let degree = labeling.len();
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut used = vec![false; degree];
        let mut rest = notation.trim();
        while !rest.is_empty() {
            let Some(inner) = rest.strip_prefix('(') else {
                return Err(Error::PermParse(format!("expected '(' at {rest:?}")));
            };
            let Some(close) = inner.find(')') else {
                return Err(Error::PermParse("unclosed cycle".into()));
            };
            let body = &inner[..close];
            rest = inner[close + 1..].trim_start();
            if body.trim().is_empty() {
                continue;
            }
            let mut cycle = Vec::new();
            for token in body.split(',') {
                let token = token.trim();
                if token.is_empty() {
                    return Err(Error::PermParse("empty label in cycle".into()));
                }
                let point = labeling
                    .vertex(token)
                    .map_err(|_| Error::PermParse(format!("unknown label {token:?}")))?;
                if used[point] {
                    return Err(Error::PermParse(format!("label {token:?} appears twice")));
                }
                used[point] = true;
                cycle.push(point);
            }
            cycles.push(cycle);
        }
        Perm::from_cycles(degree, &cycles).map_err(|e| Error::PermParse(e.to_string()))
    }

    /// Disjoint-cycle notation with presentation labels; identity is `()`.
    pub fn format_cycles(&self, labeling: &LabelingMap) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "()".into();
        }
        let mut out = String::new();
        for cycle in cycles {
            out.push('(');
            for (i, &p) in cycle.iter().enumerate() {
                if i > 0 {
                    out.push(',');
                }
                let _ = write!(out, "{}", labeling.label(p));
            }
            out.push(')');
        }
        out
    }
}
