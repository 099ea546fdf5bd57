//! Labeled digraphs, split-partition verification and minimal repair.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::seq::{DegreePair, IntegerPairSequence};
use crate::splittance::{digraph_splittance, induced_partition, splittance_matrix_with, QuadPartition, SplitError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("arc ({0},{1}) is a self-loop")]
    SelfLoop(usize, usize),
    #[error("arc ({0},{1}) references a vertex outside [0,{2})")]
    VertexOutOfRange(usize, usize, usize),
    #[error("arc ({0},{1}) appears more than once")]
    DuplicateArc(usize, usize),
}

pub type Arc = (usize, usize);

/// A simple, loopless digraph on vertices `0..n`. `(a, b)` is the arc `a → b`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Digraph {
    n: usize,
    arcs: BTreeSet<Arc>,
}

impl Digraph {
    pub fn new(n: usize, arcs: impl IntoIterator<Item = Arc>) -> Result<Self, ModelError> {
        let mut set = BTreeSet::new();
        for (u, v) in arcs {
            if u >= n || v >= n {
                return Err(ModelError::VertexOutOfRange(u, v, n));
            }
            if u == v {
                return Err(ModelError::SelfLoop(u, v));
            }
            if !set.insert((u, v)) {
                return Err(ModelError::DuplicateArc(u, v));
            }
        }
        Ok(Digraph { n, arcs: set })
    }

    pub fn empty(n: usize) -> Self {
        Digraph { n, arcs: BTreeSet::new() }
    }

    pub fn complete(n: usize) -> Self {
        let arcs = (0..n).flat_map(|u| (0..n).filter(move |&v| v != u).map(move |v| (u, v))).collect();
        Digraph { n, arcs }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn arc_count(&self) -> usize {
        self.arcs.len()
    }

    pub fn arcs(&self) -> impl Iterator<Item = Arc> + '_ {
        self.arcs.iter().copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.arcs.contains(&(u, v))
    }

    /// Number of ordered vertex pairs, i.e. arc slots.
    pub fn slot_count(n: usize) -> usize {
        n * n.saturating_sub(1)
    }

    /// Bit position of arc `u → v` in [`Digraph::to_mask`].
    pub fn slot(n: usize, u: usize, v: usize) -> usize {
        debug_assert!(u != v && u < n && v < n);
        u * (n - 1) + if v < u { v } else { v - 1 }
    }

    /// Inverse of [`Digraph::slot`].
    pub fn slot_arc(n: usize, slot: usize) -> Arc {
        let u = slot / (n - 1);
        let r = slot % (n - 1);
        (u, if r < u { r } else { r + 1 })
    }

    /// Adjacency as a bitset over arc slots. Requires `n(n-1) ≤ 64`.
    pub fn to_mask(&self) -> u64 {
        assert!(Self::slot_count(self.n) <= 64, "digraph too large for a 64-bit arc mask");
        self.arcs.iter().fold(0u64, |m, &(u, v)| m | 1 << Self::slot(self.n, u, v))
    }

    pub fn from_mask(n: usize, mask: u64) -> Self {
        let slots = Self::slot_count(n);
        assert!(slots <= 64, "digraph too large for a 64-bit arc mask");
        let arcs = (0..slots).filter(|&s| mask >> s & 1 == 1).map(|s| Self::slot_arc(n, s)).collect();
        Digraph { n, arcs }
    }
}

/// An arc repair: arcs to insert and arcs to delete.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EditSet {
    pub add: BTreeSet<Arc>,
    pub remove: BTreeSet<Arc>,
}

impl EditSet {
    pub fn len(&self) -> usize {
        self.add.len() + self.remove.len()
    }

    pub fn is_empty(&self) -> bool {
        self.add.is_empty() && self.remove.is_empty()
    }

    /// Applies the edit. Panics if the edit does not fit `g` (adding a
    /// present arc or removing an absent one).
    pub fn apply(&self, g: &Digraph) -> Digraph {
        let mut arcs = g.arcs.clone();
        for a in &self.remove {
            assert!(arcs.remove(a), "edit removes absent arc {a:?}");
        }
        for &a in &self.add {
            assert!(arcs.insert(a), "edit adds present arc {a:?}");
        }
        Digraph { n: g.n, arcs }
    }
}

pub fn degree_sequence(g: &Digraph) -> IntegerPairSequence {
    let mut pairs = vec![DegreePair::new(0, 0); g.n];
    for &(u, v) in &g.arcs {
        pairs[u].out_deg += 1;
        pairs[v].in_deg += 1;
    }
    IntegerPairSequence::new(pairs).expect("degrees of a simple digraph are within range")
}

/// Arcs that must be present (`S± ∪ S⁺ → S± ∪ S⁻`) and arcs that must be
/// absent (`S⁻ ∪ S⁰ → S⁺ ∪ S⁰`) for `p` to be a split partition.
fn violations(g: &Digraph, p: &QuadPartition) -> EditSet {
    assert_eq!(g.n, p.len(), "partition does not cover the digraph");
    let mut edit = EditSet::default();
    for u in 0..g.n {
        for v in (0..g.n).filter(|&v| v != u) {
            let (bu, bv) = (p.block(u), p.block(v));
            let present = g.has_arc(u, v);
            if bu.is_source() && bv.is_sink() && !present {
                edit.add.insert((u, v));
            } else if !bu.is_source() && !bv.is_sink() && present {
                edit.remove.insert((u, v));
            }
        }
    }
    edit
}

/// `p` is non-trivial and every forced/forbidden arc constraint holds.
pub fn verify_split_partition(g: &Digraph, p: &QuadPartition) -> bool {
    p.is_nontrivial() && violations(g, p).is_empty()
}

/// The fewest arc edits that make `p` a split partition of `g`.
pub fn edit_set(g: &Digraph, p: &QuadPartition) -> EditSet {
    violations(g, p)
}

/// Result of [`repair`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Repair {
    pub edits: EditSet,
    pub partition: QuadPartition,
    /// The minimising cell of the splittance matrix.
    pub cell: (usize, usize),
}

/// Repairs `g` into a split digraph with the minimum number of arc edits.
///
/// The target partition is induced by the row-major first minimising cell
/// of `Σ(degree_sequence(g))` off the trivial corners.
pub fn repair(g: &Digraph) -> Result<Repair, SplitError> {
    let d = degree_sequence(g);
    let splittance = digraph_splittance(&d)?;
    let ord = crate::seq::proper_order(&d);
    let sigma = splittance_matrix_with(&d, &ord);
    let (_, cell) = sigma.min_noncorner().ok_or(SplitError::EmptySequence)?;
    let partition = induced_partition(&d, &ord, cell.0, cell.1)?;
    let edits = edit_set(g, &partition);
    debug_assert_eq!(edits.len() as u64, splittance);
    Ok(Repair { edits, partition, cell })
}
