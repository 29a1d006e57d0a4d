use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::DegreeSequence;

/// Input tuple `T = (t_1, ..., t_k)` with every entry at least 4.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeTuple(Vec<usize>);

impl DegreeTuple {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some(&t) = entries.iter().find(|&&t| t < 4) {
            return Err(Error::InvalidTuple(format!("entry {t} is below 4")));
        }
        Ok(DegreeTuple(entries))
    }

    /// The tuple `(n, ..., n)` of length `k`.
    pub fn constant(n: usize, k: usize) -> Result<Self> {
        Self::new(vec![n; k])
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    /// Number of degree-3 vertices of the realisation: `4 + Σ(t_i - 4)`.
    pub fn m(&self) -> usize {
        4 + self.0.iter().map(|t| t - 4).sum::<usize>()
    }

    /// Vertex count `k + m`.
    pub fn order(&self) -> usize {
        self.k() + self.m()
    }

    /// `t_1, ..., t_k, 3^m`.
    pub fn target_sequence(&self) -> DegreeSequence {
        let mut d = self.0.clone();
        d.extend(std::iter::repeat_n(3, self.m()));
        DegreeSequence::new(d)
    }

    /// The common value when all entries are equal (and there is at least one).
    pub fn constant_value(&self) -> Option<usize> {
        let first = *self.0.first()?;
        self.0.iter().all(|&t| t == first).then_some(first)
    }

    /// Number of surgery steps the construction performs: `Σ(t_i - 3)`.
    pub fn surgery_count(&self) -> usize {
        self.0.iter().map(|t| t - 3).sum()
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for DegreeTuple {
    type Err = Error;

    /// Accepts `6,6`, `(6,6)` or `()`; whitespace is ignored.
    fn from_str(s: &str) -> Result<Self> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let s = s.trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(DegreeTuple(Vec::new()));
        }
        let entries = s
            .split(',')
            .map(|p| p.parse::<usize>().map_err(|e| Error::Parse(format!("{p:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(entries)
    }
}
