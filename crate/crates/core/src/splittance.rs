//! Splittance of integer-pair sequences.
//!
//! For a partition `S = {S±, S⁺, S⁻, S⁰}` with `k = |S± ∪ S⁺|` and
//! `l = |S± ∪ S⁻|` the split measure
//!
//! ```text
//! σ(S) = |S±|(k-1) + |S⁻|k + Σ_{S⁺∪S⁰} d⁻ − Σ_{S±∪S⁺} d⁺
//! ```
//!
//! counts the arc edits needed to make `S` a split partition. Among all
//! partitions with the same `(k, l)` the one *induced* by the top `k` of the
//! positive order and the top `l` of the negative order minimises `σ`, so the
//! `(N+1)×(N+1)` splittance matrix `Σ_kl = σ(X_kl)` carries the splittance of
//! every realization: its minimum off the two trivial corners `(0,N)` and
//! `(N,0)`.
//!
//! The same minimum is reached by the interior Fulkerson slacks
//! `s̄_1..s̄_{N-1}, s̲_1..s̲_{N-1}`, which sit in `Σ` at the columns (rows) given
//! by the maximal sequences.

use std::fmt;

use thiserror::Error;

use crate::seq::{proper_order, DegreePair, IntegerPairSequence, ProperOrdering};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SplitError {
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence is not digraphic")]
    NotDigraphic,
    #[error("index pair ({k},{l}) is outside [0,{n}]²")]
    IndexOutOfRange { k: usize, l: usize, n: usize },
}

/// The four blocks of a split partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Block {
    /// `S±`: clique, sends to and receives from the core.
    PlusMinus,
    /// `S⁺`: sends to `S± ∪ S⁻`.
    Plus,
    /// `S⁻`: receives from `S± ∪ S⁺`.
    Minus,
    /// `S⁰`: independent.
    Zero,
}

impl Block {
    pub const ALL: [Block; 4] = [Block::PlusMinus, Block::Plus, Block::Minus, Block::Zero];

    /// Member of `S± ∪ S⁺`.
    pub fn is_source(self) -> bool {
        matches!(self, Block::PlusMinus | Block::Plus)
    }

    /// Member of `S± ∪ S⁻`.
    pub fn is_sink(self) -> bool {
        matches!(self, Block::PlusMinus | Block::Minus)
    }
}

/// An assignment of each vertex index to one [`Block`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadPartition {
    assignment: Vec<Block>,
}

impl QuadPartition {
    pub fn new(assignment: Vec<Block>) -> Self {
        QuadPartition { assignment }
    }

    /// Every vertex in one block.
    pub fn uniform(n: usize, block: Block) -> Self {
        QuadPartition { assignment: vec![block; n] }
    }

    pub fn from_sets(n: usize, plus_minus: &[usize], plus: &[usize], minus: &[usize]) -> Self {
        let mut assignment = vec![Block::Zero; n];
        for &v in plus_minus {
            assignment[v] = Block::PlusMinus;
        }
        for &v in plus {
            assignment[v] = Block::Plus;
        }
        for &v in minus {
            assignment[v] = Block::Minus;
        }
        QuadPartition { assignment }
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    pub fn block(&self, v: usize) -> Block {
        self.assignment[v]
    }

    pub fn assignment(&self) -> &[Block] {
        &self.assignment
    }

    /// Sorted vertex indices in `block`.
    pub fn members(&self, block: Block) -> Vec<usize> {
        (0..self.len()).filter(|&v| self.assignment[v] == block).collect()
    }

    pub fn count(&self, block: Block) -> usize {
        self.assignment.iter().filter(|&&b| b == block).count()
    }

    /// `|S± ∪ S⁺|`
    pub fn k(&self) -> usize {
        self.assignment.iter().filter(|b| b.is_source()).count()
    }

    /// `|S± ∪ S⁻|`
    pub fn l(&self) -> usize {
        self.assignment.iter().filter(|b| b.is_sink()).count()
    }

    /// Neither `V = S⁺` nor `V = S⁻`.
    pub fn is_nontrivial(&self) -> bool {
        let all = |b: Block| self.assignment.iter().all(|&x| x == b);
        !all(Block::Plus) && !all(Block::Minus)
    }
}

/// Both split measures `(σ̄(S), σ̲(S))`, evaluated independently.
///
/// They agree whenever the out- and in-degree totals agree.
pub fn split_measures(d: &IntegerPairSequence, p: &QuadPartition) -> (i64, i64) {
    assert_eq!(d.len(), p.len(), "partition does not cover the sequence");
    let k = p.k() as i64;
    let l = p.l() as i64;
    let both = p.count(Block::PlusMinus) as i64;
    let plus = p.count(Block::Plus) as i64;
    let minus = p.count(Block::Minus) as i64;

    let mut bar = both * (k - 1) + minus * k;
    let mut under = both * (l - 1) + plus * l;
    for (v, pair) in d.pairs().iter().enumerate() {
        let b = p.block(v);
        let (out_deg, in_deg) = (pair.out_deg as i64, pair.in_deg as i64);
        if b.is_source() {
            bar -= out_deg;
        } else {
            // S⁻ ∪ S⁰
            under += out_deg;
        }
        if b.is_sink() {
            under -= in_deg;
        } else {
            // S⁺ ∪ S⁰
            bar += in_deg;
        }
    }
    (bar, under)
}

/// The split measure `σ(S)`: the number of arc edits that turn `S` into a
/// split partition of any realization of `d`.
///
/// For unbalanced sequences only `σ̄` is meaningful and is what is returned.
pub fn partition_measure(d: &IntegerPairSequence, p: &QuadPartition) -> i64 {
    let (bar, under) = split_measures(d, p);
    if d.is_balanced() {
        assert_eq!(bar, under, "σ̄ and σ̲ disagree on a balanced sequence");
    }
    bar
}

/// The partition `X_kl` induced by the top `k` of π̄ and top `l` of π̲.
pub fn induced_partition(
    d: &IntegerPairSequence,
    ord: &ProperOrdering,
    k: usize,
    l: usize,
) -> Result<QuadPartition, SplitError> {
    let n = d.len();
    if k > n || l > n {
        return Err(SplitError::IndexOutOfRange { k, l, n });
    }
    let assignment = (0..n)
        .map(|v| match (ord.pos_rank(v) < k, ord.neg_rank(v) < l) {
            (true, true) => Block::PlusMinus,
            (true, false) => Block::Plus,
            (false, true) => Block::Minus,
            (false, false) => Block::Zero,
        })
        .collect();
    Ok(QuadPartition { assignment })
}

/// `Σ(d)`, indexed `(k, l) ∈ [0,N]²`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SplittanceMatrix {
    dim: usize,
    entries: Vec<i64>,
}

impl SplittanceMatrix {
    /// Builds a matrix from rows. Panics if the rows are not square.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "splittance matrix must be square");
        SplittanceMatrix { dim, entries: rows.into_iter().flatten().collect() }
    }

    /// Sequence length `N`; the matrix is `(N+1)×(N+1)`.
    pub fn order(&self) -> usize {
        self.dim - 1
    }

    pub fn get(&self, k: usize, l: usize) -> i64 {
        self.entries[k * self.dim + l]
    }

    pub fn row(&self, k: usize) -> &[i64] {
        &self.entries[k * self.dim..(k + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[i64]> {
        self.entries.chunks(self.dim)
    }

    pub fn column(&self, l: usize) -> Vec<i64> {
        (0..self.dim).map(|k| self.get(k, l)).collect()
    }

    pub fn diagonal(&self) -> Vec<i64> {
        (0..self.dim).map(|k| self.get(k, k)).collect()
    }

    pub fn is_symmetric(&self) -> bool {
        (0..self.dim).all(|k| (0..k).all(|l| self.get(k, l) == self.get(l, k)))
    }

    /// `(0,N)` or `(N,0)`: the trivial partitions `V = S⁻` and `V = S⁺`.
    pub fn is_trivial_corner(&self, k: usize, l: usize) -> bool {
        let n = self.order();
        (k == 0 && l == n) || (k == n && l == 0)
    }

    /// Cells other than the trivial corners, row-major.
    pub fn noncorner_cells(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.dim)
            .flat_map(move |k| (0..self.dim).map(move |l| (k, l)))
            .filter(move |&(k, l)| !self.is_trivial_corner(k, l))
    }

    /// Smallest non-corner entry and its row-major first position.
    pub fn min_noncorner(&self) -> Option<(i64, (usize, usize))> {
        self.noncorner_cells().map(|(k, l)| (self.get(k, l), (k, l))).min_by_key(|&(v, _)| v)
    }

    /// Non-corner cells holding zero, row-major.
    pub fn noncorner_zeros(&self) -> Vec<(usize, usize)> {
        self.noncorner_cells().filter(|&(k, l)| self.get(k, l) == 0).collect()
    }
}

impl fmt::Display for SplittanceMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// `Σ(d)` in `O(N²)` via prefix sums of the ordered degrees:
/// `Σ_kl = kl − |𝒜_k ∩ ℬ_l| + (Σd⁻ − Σ_{ℬ_l} d⁻) − Σ_{𝒜_k} d⁺`.
pub fn splittance_matrix(d: &IntegerPairSequence) -> SplittanceMatrix {
    let ord = proper_order(d);
    splittance_matrix_with(d, &ord)
}

pub fn splittance_matrix_with(d: &IntegerPairSequence, ord: &ProperOrdering) -> SplittanceMatrix {
    let n = d.len();
    let dim = n + 1;
    let pairs = d.pairs();
    let total_in = d.in_sum() as i64;

    let mut top_out = vec![0i64; dim];
    let mut top_in = vec![0i64; dim];
    for i in 0..n {
        top_out[i + 1] = top_out[i] + pairs[ord.pos_perm()[i]].out_deg as i64;
        top_in[i + 1] = top_in[i] + pairs[ord.neg_perm()[i]].in_deg as i64;
    }

    let mut entries = Vec::with_capacity(dim * dim);
    for (k, &head_out) in top_out.iter().enumerate() {
        let mut overlap = 0i64;
        for (l, &head_in) in top_in.iter().enumerate() {
            if l > 0 && ord.pos_rank(ord.neg_perm()[l - 1]) < k {
                overlap += 1;
            }
            entries.push((k * l) as i64 - overlap + (total_in - head_in) - head_out);
        }
    }
    SplittanceMatrix { dim, entries }
}

/// `Σ(d)` by building every induced partition and measuring it directly.
/// `O(N³)`; kept as a reference for the prefix-sum path.
pub fn splittance_matrix_by_cells(d: &IntegerPairSequence) -> SplittanceMatrix {
    let ord = proper_order(d);
    let dim = d.len() + 1;
    let mut entries = Vec::with_capacity(dim * dim);
    for k in 0..dim {
        for l in 0..dim {
            let p = induced_partition(d, &ord, k, l).expect("indices within range");
            entries.push(split_measures(d, &p).0);
        }
    }
    SplittanceMatrix { dim, entries }
}

/// The maximal sequences `m̄_l` and `m̲_k`, both indexed `0..=N`, as
/// 1-based positions in the positive (resp. negative) order. `0` means no
/// position qualifies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalSequences {
    pub m_bar: Vec<usize>,
    pub m_under: Vec<usize>,
}

pub fn maximal_sequences(d: &IntegerPairSequence, ord: &ProperOrdering) -> MaximalSequences {
    let n = d.len();
    let pairs = d.pairs();

    let m_bar = (0..=n)
        .map(|l| {
            let threshold = l as i64 - 1;
            (1..=n)
                .rev()
                .find(|&i| {
                    let v = ord.pos_perm()[i - 1];
                    let out_deg = pairs[v].out_deg as i64;
                    out_deg > threshold || (out_deg == threshold && ord.neg_rank(v) < l)
                })
                .unwrap_or(0)
        })
        .collect();

    let m_under = (0..=n)
        .map(|k| {
            let threshold = k as i64 - 1;
            (1..=n)
                .rev()
                .find(|&j| {
                    let v = ord.neg_perm()[j - 1];
                    let in_deg = pairs[v].in_deg as i64;
                    in_deg > threshold || (in_deg == threshold && ord.pos_rank(v) < k)
                })
                .unwrap_or(0)
        })
        .collect();

    MaximalSequences { m_bar, m_under }
}

/// The Fulkerson slack sequences `s̄_k`, `s̲_k` for `k = 0..=N`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlackPair {
    pub s_bar: Vec<i64>,
    pub s_under: Vec<i64>,
}

impl SlackPair {
    /// `min{s̄_1..s̄_{N-1}, s̲_1..s̲_{N-1}}`, or `None` when `N < 2`.
    pub fn interior_min(&self) -> Option<i64> {
        let n = self.s_bar.len().saturating_sub(1);
        if n < 2 {
            return None;
        }
        self.s_bar[1..n].iter().chain(&self.s_under[1..n]).copied().min()
    }
}

fn slack_along(ordered: &[DegreePair], major: fn(&DegreePair) -> usize, minor: fn(&DegreePair) -> usize) -> Vec<i64> {
    let n = ordered.len();
    (0..=n)
        .map(|k| {
            let head: i64 = ordered[..k].iter().map(|p| minor(p).min(k.saturating_sub(1)) as i64).sum();
            let tail: i64 = ordered[k..].iter().map(|p| minor(p).min(k) as i64).sum();
            let demand: i64 = ordered[..k].iter().map(|p| major(p) as i64).sum();
            head + tail - demand
        })
        .collect()
}

pub fn fulkerson_slack(d: &IntegerPairSequence) -> SlackPair {
    let ord = proper_order(d);
    fulkerson_slack_with(d, &ord)
}

pub fn fulkerson_slack_with(d: &IntegerPairSequence, ord: &ProperOrdering) -> SlackPair {
    let pairs = d.pairs();
    let pos: Vec<DegreePair> = ord.pos_perm().iter().map(|&v| pairs[v]).collect();
    let neg: Vec<DegreePair> = ord.neg_perm().iter().map(|&v| pairs[v]).collect();
    SlackPair {
        s_bar: slack_along(&pos, |p| p.out_deg, |p| p.in_deg),
        s_under: slack_along(&neg, |p| p.in_deg, |p| p.out_deg),
    }
}

/// Fulkerson's criterion: balanced totals and non-negative slack throughout.
pub fn is_digraphic(d: &IntegerPairSequence) -> bool {
    if !d.is_balanced() {
        return false;
    }
    let slack = fulkerson_slack(d);
    slack.s_bar.iter().chain(&slack.s_under).all(|&s| s >= 0)
}

fn require_digraphic(d: &IntegerPairSequence) -> Result<(), SplitError> {
    if is_digraphic(d) {
        Ok(())
    } else {
        Err(SplitError::NotDigraphic)
    }
}

/// Arc edits needed to make any realization of `d` split: the minimum of
/// `Σ(d)` off the trivial corners.
pub fn digraph_splittance(d: &IntegerPairSequence) -> Result<u64, SplitError> {
    require_digraphic(d)?;
    let sigma = splittance_matrix(d);
    let (value, _) = sigma.min_noncorner().ok_or(SplitError::EmptySequence)?;
    debug_assert!(value >= 0);
    Ok(value as u64)
}

/// Split test through the interior Fulkerson slacks, cross-checked against the
/// zeros of `Σ`.
///
/// With one vertex the interior slack range is empty and `Σ` alone decides;
/// the empty sequence has no non-trivial partition and is never split.
pub fn is_split_sequence(d: &IntegerPairSequence) -> Result<bool, SplitError> {
    require_digraphic(d)?;
    if d.is_empty() {
        return Ok(false);
    }
    let by_matrix = !splittance_matrix(d).noncorner_zeros().is_empty();
    match fulkerson_slack(d).interior_min() {
        Some(min) => {
            let by_slack = min == 0;
            assert_eq!(by_slack, by_matrix, "slack and matrix split tests disagree for {d}");
            Ok(by_slack)
        }
        None => Ok(by_matrix),
    }
}

/// An induced partition at a zero of `Σ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InducedSplit {
    pub k: usize,
    pub l: usize,
    pub partition: QuadPartition,
}

/// One induced split partition per non-corner zero of `Σ`, row-major.
pub fn split_partitions(d: &IntegerPairSequence) -> Result<Vec<InducedSplit>, SplitError> {
    require_digraphic(d)?;
    let ord = proper_order(d);
    let sigma = splittance_matrix_with(d, &ord);
    Ok(sigma
        .noncorner_zeros()
        .into_iter()
        .map(|(k, l)| {
            let partition = induced_partition(d, &ord, k, l).expect("cell within range");
            debug_assert!(partition.is_nontrivial());
            InducedSplit { k, l, partition }
        })
        .collect())
}
