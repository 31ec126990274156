//! Permutations of `0..n` stored by their image arrays.

use std::fmt;

use crate::error::{Error, Result};

/// A bijection of `0..n`; `images[i]` is the image of `i`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    images: Vec<usize>,
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.images)
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation {
            images: (0..n).collect(),
        }
    }

    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || seen[i] {
                return Err(Error::NotAPermutation(format!("{images:?}")));
            }
            seen[i] = true;
        }
        Ok(Permutation { images })
    }

    pub(crate) fn from_images_unchecked(images: Vec<usize>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation { images }
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut moved = vec![false; n];
        for cycle in cycles {
            for (i, &x) in cycle.iter().enumerate() {
                if x >= n || moved[x] {
                    return Err(Error::NotAPermutation(format!("{cycles:?}")));
                }
                moved[x] = true;
                images[x] = cycle[(i + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    /// Parses disjoint-cycle notation such as `(0 1 2)(3 4)` or `()`.
    ///
    /// Labels are shifted down by one when `one_based` is set. Entries within
    /// a cycle may be separated by spaces or commas.
    pub fn parse_cycles(n: usize, text: &str, one_based: bool) -> Result<Self> {
        let text = text.trim();
        let bad = || Error::NotAPermutation(format!("cannot parse `{text}`"));
        if text.is_empty() || text == "id" {
            return Ok(Self::identity(n));
        }
        let mut cycles = Vec::new();
        let mut rest = text;
        while !rest.is_empty() {
            let open = rest.strip_prefix('(').ok_or_else(bad)?;
            let close = open.find(')').ok_or_else(bad)?;
            let body = &open[..close];
            let mut cycle = Vec::new();
            for tok in body.split(|c: char| c.is_whitespace() || c == ',') {
                if tok.is_empty() {
                    continue;
                }
                let x: usize = tok.parse().map_err(|_| bad())?;
                if one_based {
                    cycle.push(x.checked_sub(1).ok_or_else(bad)?);
                } else {
                    cycle.push(x);
                }
            }
            if !cycle.is_empty() {
                cycles.push(cycle);
            }
            rest = open[close + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.images[x]
    }

    /// `self ∘ other`: apply `other` first, then `self`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.degree(), other.degree(), "degree mismatch in compose");
        Permutation {
            images: other.images.iter().map(|&x| self.images[x]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x] = i;
        }
        Permutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i == x)
    }

    /// Order dividing two, identity excluded.
    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.images.iter().enumerate().all(|(i, &x)| self.images[x] == i)
    }

    /// Non-trivial cycles, each starting from its least element, ordered by
    /// that element.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.images.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] || self.images[start] == start {
                seen[start] = true;
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut x = self.images[start];
            while x != start {
                seen[x] = true;
                cycle.push(x);
                x = self.images[x];
            }
            out.push(cycle);
        }
        out
    }

    /// Disjoint-cycle notation; the identity prints as `id`.
    pub fn cycle_notation(&self, one_based: bool) -> String {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return "id".to_string();
        }
        let shift = usize::from(one_based);
        cycles
            .iter()
            .map(|c| {
                let body: Vec<String> = c.iter().map(|x| (x + shift).to_string()).collect();
                format!("({})", body.join(" "))
            })
            .collect()
    }
}

impl fmt::Display for Permutation {
    /// One-based cycle notation, matching how reports label vertices.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.cycle_notation(true))
    }
}
