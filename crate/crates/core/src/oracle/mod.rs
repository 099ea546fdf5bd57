//! Brute-force ground truth for small instances.
//!
//! Nothing here goes through the splittance matrix or the slack sequences:
//! split tests enumerate all `4^n` partitions against the arc constraints,
//! realizability is decided by backtracking over arc sets, and splittance is
//! the Hamming radius to the nearest split digraph.

pub mod invariants;

use std::collections::{HashMap, HashSet};
use std::sync::{Arc, Mutex};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::model::Digraph;
use crate::seq::{DegreePair, IntegerPairSequence};
use crate::splittance::{partition_measure, Block, QuadPartition};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what} on {n} vertices exceeds the enumeration budget (limit {limit})")]
    BudgetExceeded { what: &'static str, n: usize, limit: u64 },
    #[error("the empty vertex set has no non-trivial partition")]
    NoNontrivialPartition,
}

/// Bounds on how much brute force an oracle call may perform.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationBudget {
    /// Largest vertex count for exhaustive digraph enumeration and
    /// edit-radius search.
    pub max_vertices: usize,
    /// Largest number of quad partitions (`4^N`) a measure search may visit.
    pub max_partitions: u64,
    /// Largest sequence length [`Oracle::brute_realize`] will backtrack over.
    pub max_realize_vertices: usize,
    pub sample_seed: u64,
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_vertices: 4, max_partitions: 1 << 16, max_realize_vertices: 8, sample_seed: 0x5eed }
    }
}

impl EnumerationBudget {
    /// Raises (or lowers) every vertex bound to `n`, widening the partition
    /// budget to `4^n` if needed.
    pub fn with_max_vertices(mut self, n: usize) -> Self {
        self.max_vertices = n;
        self.max_realize_vertices = n;
        self.max_partitions = self.max_partitions.max(partition_count(n));
        self
    }
}

fn partition_count(n: usize) -> u64 {
    4u64.checked_pow(n as u32).unwrap_or(u64::MAX)
}

/// Iterates all `4^n` block assignments.
fn all_partitions(n: usize) -> impl Iterator<Item = QuadPartition> {
    (0..partition_count(n)).map(move |mut code| {
        let blocks = (0..n)
            .map(|_| {
                let b = Block::ALL[(code % 4) as usize];
                code /= 4;
                b
            })
            .collect();
        QuadPartition::new(blocks)
    })
}

/// Split test on arc bitmasks (see [`Digraph::to_mask`]) by partition
/// enumeration.
#[derive(Debug)]
pub struct SplitTester {
    n: usize,
    /// `(forced, forbidden)` arc masks, one per distinct non-trivial partition.
    constraints: Vec<(u64, u64)>,
    /// Precomputed answers for every mask when the arc space is small.
    table: Option<Vec<bool>>,
}

const TABLE_SLOTS: usize = 12;

impl SplitTester {
    pub fn new(n: usize) -> Self {
        let slots = Digraph::slot_count(n);
        assert!(slots <= 64, "split tester supports at most 8 vertices");
        let mut seen = HashSet::new();
        let mut constraints = Vec::new();
        for p in all_partitions(n).filter(QuadPartition::is_nontrivial) {
            let (mut forced, mut forbidden) = (0u64, 0u64);
            for u in 0..n {
                for v in (0..n).filter(|&v| v != u) {
                    let bit = 1u64 << Digraph::slot(n, u, v);
                    let (bu, bv) = (p.block(u), p.block(v));
                    if bu.is_source() && bv.is_sink() {
                        forced |= bit;
                    } else if !bu.is_source() && !bv.is_sink() {
                        forbidden |= bit;
                    }
                }
            }
            if seen.insert((forced, forbidden)) {
                constraints.push((forced, forbidden));
            }
        }
        let mut tester = SplitTester { n, constraints, table: None };
        if slots <= TABLE_SLOTS {
            let table = (0..1u64 << slots).map(|m| tester.check(m)).collect();
            tester.table = Some(table);
        }
        tester
    }

    fn check(&self, mask: u64) -> bool {
        self.constraints.iter().any(|&(forced, forbidden)| mask & forced == forced && mask & forbidden == 0)
    }

    pub fn is_split(&self, mask: u64) -> bool {
        match &self.table {
            Some(t) => t[mask as usize],
            None => self.check(mask),
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }
}

/// Brute-force validators sharing a budget and a cache of split testers.
#[derive(Debug, Default)]
pub struct Oracle {
    budget: EnumerationBudget,
    testers: Mutex<HashMap<usize, Arc<SplitTester>>>,
}

impl Oracle {
    pub fn new(budget: EnumerationBudget) -> Self {
        Oracle { budget, testers: Mutex::new(HashMap::new()) }
    }

    pub fn budget(&self) -> &EnumerationBudget {
        &self.budget
    }

    fn tester(&self, n: usize) -> Arc<SplitTester> {
        let mut cache = self.testers.lock().expect("tester cache poisoned");
        cache.entry(n).or_insert_with(|| Arc::new(SplitTester::new(n))).clone()
    }

    /// Minimum split measure over every non-trivial quad partition.
    pub fn brute_min_partition_measure(&self, d: &IntegerPairSequence) -> Result<i64, OracleError> {
        let n = d.len();
        let count = partition_count(n);
        if count > self.budget.max_partitions {
            return Err(OracleError::BudgetExceeded {
                what: "partition enumeration",
                n,
                limit: self.budget.max_partitions,
            });
        }
        all_partitions(n)
            .filter(QuadPartition::is_nontrivial)
            .map(|p| partition_measure(d, &p))
            .min()
            .ok_or(OracleError::NoNontrivialPartition)
    }

    /// Any realization of `d`, found by backtracking over out-neighbourhoods.
    pub fn brute_realize(&self, d: &IntegerPairSequence) -> Result<Option<Digraph>, OracleError> {
        let n = d.len();
        if n > self.budget.max_realize_vertices {
            return Err(OracleError::BudgetExceeded {
                what: "realization search",
                n,
                limit: self.budget.max_realize_vertices as u64,
            });
        }
        if !d.is_balanced() {
            return Ok(None);
        }
        let mut in_left: Vec<usize> = d.pairs().iter().map(|p| p.in_deg).collect();
        let mut arcs = Vec::new();
        if realize_from(d.pairs(), 0, &mut in_left, &mut arcs) {
            Ok(Some(Digraph::new(n, arcs).expect("backtracking emits simple arcs")))
        } else {
            Ok(None)
        }
    }

    /// Hamming distance in arc space from `g` to the nearest split digraph,
    /// by iterative deepening over the edit radius.
    pub fn brute_splittance(&self, g: &Digraph) -> Result<u64, OracleError> {
        let n = g.vertex_count();
        if n > self.budget.max_vertices || n > 8 {
            return Err(OracleError::BudgetExceeded {
                what: "edit-radius search",
                n,
                limit: self.budget.max_vertices.min(8) as u64,
            });
        }
        if n == 0 {
            return Err(OracleError::NoNontrivialPartition);
        }
        let tester = self.tester(n);
        let slots = Digraph::slot_count(n);
        let mask = g.to_mask();
        // Every digraph has a split digraph within n(n-1) flips (the complete one).
        for radius in 0..=slots {
            if within_radius(&tester, mask, slots, radius, 0) {
                return Ok(radius as u64);
            }
        }
        unreachable!("the complete digraph is split")
    }

    pub fn is_split_digraph(&self, g: &Digraph) -> bool {
        g.vertex_count() > 0 && self.tester(g.vertex_count()).is_split(g.to_mask())
    }

    /// Every labeled simple digraph on `n` vertices, in arc-mask order.
    pub fn enumerate_digraphs(&self, n: usize) -> Result<impl Iterator<Item = Digraph>, OracleError> {
        if n > self.budget.max_vertices || Digraph::slot_count(n) >= 64 {
            return Err(OracleError::BudgetExceeded {
                what: "digraph enumeration",
                n,
                limit: self.budget.max_vertices as u64,
            });
        }
        let slots = Digraph::slot_count(n);
        Ok((0..1u64 << slots).map(move |m| Digraph::from_mask(n, m)))
    }

    /// `count` digraphs on `n` vertices, each arc present independently with
    /// probability one half, drawn from the budget's seed.
    pub fn sample_digraphs(&self, n: usize, count: usize) -> Vec<Digraph> {
        let mut sampler = Sampler::new(self.budget.sample_seed);
        (0..count).map(|_| sampler.digraph(n)).collect()
    }
}

fn within_radius(tester: &SplitTester, mask: u64, slots: usize, radius: usize, start: usize) -> bool {
    if radius == 0 {
        return tester.is_split(mask);
    }
    (start..slots).any(|s| within_radius(tester, mask ^ (1 << s), slots, radius - 1, s + 1))
}

fn realize_from(pairs: &[DegreePair], u: usize, in_left: &mut [usize], arcs: &mut Vec<(usize, usize)>) -> bool {
    if u == pairs.len() {
        return in_left.iter().all(|&x| x == 0);
    }
    choose_heads(pairs, u, 0, pairs[u].out_deg, in_left, arcs)
}

fn choose_heads(
    pairs: &[DegreePair],
    u: usize,
    from: usize,
    need: usize,
    in_left: &mut [usize],
    arcs: &mut Vec<(usize, usize)>,
) -> bool {
    if need == 0 {
        return realize_from(pairs, u + 1, in_left, arcs);
    }
    for v in from..pairs.len() {
        if v == u || in_left[v] == 0 {
            continue;
        }
        in_left[v] -= 1;
        arcs.push((u, v));
        if choose_heads(pairs, u, v + 1, need - 1, in_left, arcs) {
            return true;
        }
        arcs.pop();
        in_left[v] += 1;
    }
    false
}

/// Seeded generators for randomized validation.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Sampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn digraph(&mut self, n: usize) -> Digraph {
        let arcs: Vec<_> = (0..n)
            .flat_map(|u| (0..n).map(move |v| (u, v)))
            .filter(|&(u, v)| u != v)
            .filter(|_| self.rng.gen_bool(0.5))
            .collect();
        Digraph::new(n, arcs).expect("sampled arcs are simple")
    }

    /// Any sequence within the `[0, N-1]` bound.
    pub fn sequence(&mut self, n: usize) -> IntegerPairSequence {
        let hi = n.saturating_sub(1);
        let pairs = (0..n).map(|_| DegreePair::new(self.rng.gen_range(0..=hi), self.rng.gen_range(0..=hi))).collect();
        IntegerPairSequence::new(pairs).expect("sampled within bound")
    }

    /// A sequence with equal out- and in-degree totals; not necessarily
    /// digraphic.
    pub fn balanced_sequence(&mut self, n: usize) -> IntegerPairSequence {
        let hi = n.saturating_sub(1);
        let outs: Vec<usize> = (0..n).map(|_| self.rng.gen_range(0..=hi)).collect();
        let mut ins = vec![0usize; n];
        for _ in 0..outs.iter().sum::<usize>() {
            let open: Vec<usize> = (0..n).filter(|&v| ins[v] < hi).collect();
            let v = open[self.rng.gen_range(0..open.len())];
            ins[v] += 1;
        }
        let pairs = outs.into_iter().zip(ins).map(|(o, i)| DegreePair::new(o, i)).collect();
        IntegerPairSequence::new(pairs).expect("sampled within bound")
    }

    pub fn partition(&mut self, n: usize) -> QuadPartition {
        QuadPartition::new((0..n).map(|_| Block::ALL[self.rng.gen_range(0..4)]).collect())
    }
}
