//! Integer partitions and compositions.
//!
//! Partitions index every symmetric-function basis in this crate. The
//! ordering convention is lexicographic with shorter sequences padded by
//! zeros, so `(2,2,1) < (3,1,1)` and `partitions_of(n)` enumerates in
//! strictly decreasing order starting from `(n)`.

use crate::error::{Error, Result};
use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing sequence of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<u32>);

/// A sequence of positive integers where order matters.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Composition(Vec<u32>);

impl Partition {
    /// Builds a partition, sorting the given parts into decreasing order.
    /// Zero parts are rejected.
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Constraint("partition parts must be positive".into()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// Builds a partition from parts already known to be decreasing and positive.
    pub(crate) fn from_sorted_unchecked(parts: Vec<u32>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// The hook `(k, 1, 1, ..., 1)` of total size `n`.
    pub fn hook(k: u32, n: usize) -> Self {
        assert!(k as usize <= n && k >= 1);
        let mut parts = vec![k];
        parts.extend(std::iter::repeat(1).take(n - k as usize));
        Partition(parts)
    }

    pub fn single(n: u32) -> Self {
        Partition(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of parts equal to 1.
    pub fn num_ones(&self) -> usize {
        self.0.iter().filter(|&&p| p == 1).count()
    }

    /// Removes one part equal to 1 (the partition `λ\1` of Lemma-style
    /// universal-vertex bookkeeping).
    pub fn remove_one(&self) -> Result<Self> {
        if self.num_ones() == 0 {
            return Err(Error::Constraint(format!("{self} has no part equal to 1")));
        }
        let mut parts = self.0.clone();
        parts.pop();
        Ok(Partition(parts))
    }

    /// True for hooks `(k, 1^{n-k})` with `k >= 2`, the shapes summed by the
    /// hook coefficient relation. The full row `(n)` counts as a hook.
    pub fn is_hook(&self) -> bool {
        self.0.len() >= 1 && self.0[0] >= 2 && self.0.iter().skip(1).all(|&p| p == 1)
    }

    /// True for near-hooks `(k, 2, 1^{n-k-2})` with `k >= 2`.
    pub fn is_near_hook(&self) -> bool {
        self.0.len() >= 2
            && self.0[0] >= 2
            && self.0[1] == 2
            && self.0.iter().skip(2).all(|&p| p == 1)
    }

    /// Lexicographic comparison, shorter sequence padded with zeros.
    pub fn lex_compare(&self, other: &Partition) -> Ordering {
        self.cmp(other)
    }

    /// Multiset union of parts; corresponds to `p_λ · p_μ = p_{λ∪μ}`.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    /// Multiplicity of each distinct part value, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((v, c)) if *v == p => *c += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Compact digit form like `321`, only valid when all parts are <= 9.
    pub fn compact(&self) -> Option<String> {
        if self.0.iter().all(|&p| p <= 9) {
            Some(self.0.iter().map(|p| p.to_string()).collect())
        } else {
            None
        }
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let s = self
            .0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join("+");
        write!(f, "{s}")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"3+2+1"`; `"0"` denotes the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "0" || s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split('+')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::Constraint(format!("bad partition part {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl Composition {
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.iter().any(|&p| p == 0) {
            return Err(Error::Constraint(
                "composition parts must be positive".into(),
            ));
        }
        Ok(Composition(parts))
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().map(|&p| p as usize).sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Writes the parts in decreasing order.
    pub fn sort(&self) -> Partition {
        let mut parts = self.0.clone();
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = self
            .0
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(",");
        write!(f, "({s})")
    }
}

/// All partitions of `n` in decreasing lexicographic order.
/// `partitions_of(0)` is the singleton list holding the empty partition.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    descend(n as u32, n as u32, &mut current, &mut out);
    out
}

fn descend(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    let top = remaining.min(max_part);
    for part in (1..=top).rev() {
        current.push(part);
        descend(remaining - part, part, current, out);
        current.pop();
    }
}

/// The number of partitions of `n`.
pub fn partition_count(n: usize) -> usize {
    partitions_of(n).len()
}
