//! Integer-pair degree sequences and the orderings the splittance formulas
//! are written against.
//!
//! Vertices are indexed from 0 internally. User-facing output (the CLI) adds
//! one so labels read `x₁ … x_N`.

use std::cmp::Ordering;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("degree pair at index {0} exceeds the simple-digraph bound N-1")]
    OutOfRange(usize),
    #[error("degree pair at index {0} has a negative entry")]
    NegativeDegree(usize),
}

/// One vertex's `(out-degree, in-degree)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreePair {
    pub out_deg: usize,
    pub in_deg: usize,
}

impl DegreePair {
    pub const fn new(out_deg: usize, in_deg: usize) -> Self {
        DegreePair { out_deg, in_deg }
    }
}

impl From<(usize, usize)> for DegreePair {
    fn from((out_deg, in_deg): (usize, usize)) -> Self {
        DegreePair { out_deg, in_deg }
    }
}

impl fmt::Display for DegreePair {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.out_deg, self.in_deg)
    }
}

/// Orders pairs by out-degree, breaking ties on in-degree.
///
/// `Greater` means `a` precedes `b` in a positively ordered (non-increasing)
/// sequence.
pub fn compare_pos(a: DegreePair, b: DegreePair) -> Ordering {
    a.out_deg.cmp(&b.out_deg).then(a.in_deg.cmp(&b.in_deg))
}

/// Orders pairs by in-degree, breaking ties on out-degree.
pub fn compare_neg(a: DegreePair, b: DegreePair) -> Ordering {
    a.in_deg.cmp(&b.in_deg).then(a.out_deg.cmp(&b.out_deg))
}

/// Checks raw (possibly negative) pairs against the simple-digraph bound.
pub fn validate(pairs: &[(i64, i64)]) -> Result<(), SeqError> {
    let bound = pairs.len() as i64 - 1;
    for (i, &(out_deg, in_deg)) in pairs.iter().enumerate() {
        if out_deg < 0 || in_deg < 0 {
            return Err(SeqError::NegativeDegree(i));
        }
        if out_deg > bound || in_deg > bound {
            return Err(SeqError::OutOfRange(i));
        }
    }
    Ok(())
}

/// A validated degree sequence `d = {(d⁺ᵢ, d⁻ᵢ)}`: every entry lies in `[0, N-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerPairSequence {
    pairs: Vec<DegreePair>,
}

impl IntegerPairSequence {
    pub fn new(pairs: Vec<DegreePair>) -> Result<Self, SeqError> {
        let n = pairs.len();
        if let Some(i) = pairs.iter().position(|p| p.out_deg >= n || p.in_deg >= n) {
            return Err(SeqError::OutOfRange(i));
        }
        Ok(IntegerPairSequence { pairs })
    }

    pub fn from_pairs(pairs: &[(usize, usize)]) -> Result<Self, SeqError> {
        Self::new(pairs.iter().map(|&p| p.into()).collect())
    }

    pub fn from_signed(pairs: &[(i64, i64)]) -> Result<Self, SeqError> {
        validate(pairs)?;
        Ok(IntegerPairSequence { pairs: pairs.iter().map(|&(o, i)| DegreePair::new(o as usize, i as usize)).collect() })
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    pub fn pairs(&self) -> &[DegreePair] {
        &self.pairs
    }

    pub fn get(&self, i: usize) -> DegreePair {
        self.pairs[i]
    }

    pub fn out_sum(&self) -> usize {
        self.pairs.iter().map(|p| p.out_deg).sum()
    }

    pub fn in_sum(&self) -> usize {
        self.pairs.iter().map(|p| p.in_deg).sum()
    }

    /// Out-degree total equals in-degree total.
    pub fn is_balanced(&self) -> bool {
        self.out_sum() == self.in_sum()
    }
}

impl fmt::Display for IntegerPairSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.pairs.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// The permutation pair `(π̄, π̲)` of a properly ordered sequence.
///
/// `pos[i]` is the original index of the `i`-th entry in positive order and
/// `neg[i]` likewise for negative order. The rank vectors are the inverses.
/// Equal pairs appear in ascending original index in both orders, which is
/// what makes the ordering proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProperOrdering {
    pos: Vec<usize>,
    neg: Vec<usize>,
    pos_rank: Vec<usize>,
    neg_rank: Vec<usize>,
}

impl ProperOrdering {
    /// π̄ as original indices.
    pub fn pos_perm(&self) -> &[usize] {
        &self.pos
    }

    /// π̲ as original indices.
    pub fn neg_perm(&self) -> &[usize] {
        &self.neg
    }

    /// Position of vertex `v` in the positive order (π̄⁻¹).
    pub fn pos_rank(&self, v: usize) -> usize {
        self.pos_rank[v]
    }

    /// Position of vertex `v` in the negative order (π̲⁻¹).
    pub fn neg_rank(&self, v: usize) -> usize {
        self.neg_rank[v]
    }

    pub fn len(&self) -> usize {
        self.pos.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pos.is_empty()
    }
}

fn inverse(perm: &[usize]) -> Vec<usize> {
    let mut inv = vec![0; perm.len()];
    for (rank, &v) in perm.iter().enumerate() {
        inv[v] = rank;
    }
    inv
}

pub fn proper_order(seq: &IntegerPairSequence) -> ProperOrdering {
    let d = seq.pairs();
    let mut pos: Vec<usize> = (0..d.len()).collect();
    let mut neg = pos.clone();
    // Stable sorts over an index-ordered vector keep equal pairs in index order.
    pos.sort_by(|&i, &j| compare_pos(d[j], d[i]));
    neg.sort_by(|&i, &j| compare_neg(d[j], d[i]));
    let pos_rank = inverse(&pos);
    let neg_rank = inverse(&neg);
    ProperOrdering { pos, neg, pos_rank, neg_rank }
}
