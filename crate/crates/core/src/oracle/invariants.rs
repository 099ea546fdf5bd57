//! Structural identities of the splittance matrix, checked cell by cell.
//!
//! Each check returns the list of violations it found; an empty list means
//! the identity holds for the given input. Identities that mix the `σ̄` and
//! `σ̲` forms only hold for balanced sequences and say so.

use std::fmt;

use crate::seq::{compare_neg, compare_pos, proper_order, IntegerPairSequence, ProperOrdering};
use crate::splittance::{
    fulkerson_slack_with, induced_partition, maximal_sequences, split_measures, splittance_matrix_with, Block,
    QuadPartition,
};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub check: &'static str,
    pub detail: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.check, self.detail)
    }
}

fn violation(check: &'static str, detail: String) -> Violation {
    Violation { check, detail }
}

/// `σ̄(S) = σ̲(S)`. Requires a balanced sequence.
pub fn measures_agree(d: &IntegerPairSequence, p: &QuadPartition) -> Vec<Violation> {
    let (bar, under) = split_measures(d, p);
    if bar == under {
        vec![]
    } else {
        vec![violation("measures_agree", format!("{d} {p:?}: σ̄={bar} σ̲={under}"))]
    }
}

/// The `kl − |S±|` forms of both measures equal the block-count forms.
pub fn kl_form_agrees(d: &IntegerPairSequence, p: &QuadPartition) -> Vec<Violation> {
    let (k, l) = (p.k() as i64, p.l() as i64);
    let both = p.count(Block::PlusMinus) as i64;
    let sum = |pred: fn(Block) -> bool, take: fn(usize, usize) -> usize| -> i64 {
        d.pairs()
            .iter()
            .enumerate()
            .filter(|&(v, _)| pred(p.block(v)))
            .map(|(_, q)| take(q.out_deg, q.in_deg) as i64)
            .sum()
    };
    let bar = k * l - both + sum(|b| !b.is_sink(), |_, i| i) - sum(Block::is_source, |o, _| o);
    let under = k * l - both + sum(|b| !b.is_source(), |o, _| o) - sum(Block::is_sink, |_, i| i);
    let (bar_def, under_def) = split_measures(d, p);
    let mut out = vec![];
    if bar != bar_def || under != under_def {
        out.push(violation(
            "kl_form_agrees",
            format!("{d} {p:?}: kl form ({bar},{under}) vs definition ({bar_def},{under_def})"),
        ));
    }
    out
}

/// The ordering invariants of a proper ordering: each permutation sorts the
/// sequence non-increasingly, and equal pairs appear in the same relative
/// order in both.
pub fn proper_ordering_holds(d: &IntegerPairSequence, ord: &ProperOrdering) -> Vec<Violation> {
    let pairs = d.pairs();
    let mut out = vec![];
    for w in ord.pos_perm().windows(2) {
        if compare_pos(pairs[w[0]], pairs[w[1]]).is_lt() {
            out.push(violation("positive_order", format!("{d}: {} before {}", w[0], w[1])));
        }
    }
    for w in ord.neg_perm().windows(2) {
        if compare_neg(pairs[w[0]], pairs[w[1]]).is_lt() {
            out.push(violation("negative_order", format!("{d}: {} before {}", w[0], w[1])));
        }
    }
    for i in 0..d.len() {
        for j in 0..d.len() {
            if i != j
                && pairs[i] == pairs[j]
                && (ord.pos_rank(i) < ord.pos_rank(j)) != (ord.neg_rank(i) < ord.neg_rank(j))
            {
                out.push(violation("tie_consistency", format!("{d}: {i} and {j}")));
            }
        }
    }
    out
}

/// Sources `X± ∪ X⁺` dominate `X⁻ ∪ X⁰` positively; sinks `X± ∪ X⁻`
/// dominate `X⁺ ∪ X⁰` negatively.
pub fn induced_dominance(d: &IntegerPairSequence, ord: &ProperOrdering, k: usize, l: usize) -> Vec<Violation> {
    let p = induced_partition(d, ord, k, l).expect("cell within range");
    let pairs = d.pairs();
    let mut out = vec![];
    for a in 0..d.len() {
        for b in 0..d.len() {
            let (ba, bb) = (p.block(a), p.block(b));
            if ba.is_source() && !bb.is_source() && compare_pos(pairs[a], pairs[b]).is_lt() {
                out.push(violation("positive_dominance", format!("{d} ({k},{l}): {a} vs {b}")));
            }
            if ba.is_sink() && !bb.is_sink() && compare_neg(pairs[a], pairs[b]).is_lt() {
                out.push(violation("negative_dominance", format!("{d} ({k},{l}): {a} vs {b}")));
            }
        }
    }
    out
}

/// The six strict inequalities between members `x ∈ X⁺`, `y ∈ X⁻`,
/// `z ∈ X±`, `w ∈ X⁰` of an induced partition.
pub fn strict_inequalities(d: &IntegerPairSequence, ord: &ProperOrdering, k: usize, l: usize) -> Vec<Violation> {
    let p = induced_partition(d, ord, k, l).expect("cell within range");
    let pairs = d.pairs();
    let xs = p.members(Block::Plus);
    let ys = p.members(Block::Minus);
    let zs = p.members(Block::PlusMinus);
    let ws = p.members(Block::Zero);
    let mut out = vec![];
    let mut fail = |name: &'static str, who: String| out.push(violation(name, format!("{d} ({k},{l}): {who}")));

    for &x in &xs {
        for &y in &ys {
            let (dx, dy) = (pairs[x], pairs[y]);
            if dx.out_deg <= dy.out_deg {
                fail("plus_out_exceeds_minus", format!("x={x} y={y}"));
            }
            if dy.in_deg <= dx.in_deg {
                fail("minus_in_exceeds_plus", format!("x={x} y={y}"));
            }
            for &z in &zs {
                let dz = pairs[z];
                if dz.in_deg == dx.in_deg && dz.out_deg <= dy.out_deg {
                    fail("both_out_exceeds_minus", format!("x={x} y={y} z={z}"));
                }
                if dz.out_deg == dy.out_deg && dz.in_deg <= dx.in_deg {
                    fail("both_in_exceeds_plus", format!("x={x} y={y} z={z}"));
                }
            }
            for &w in &ws {
                let dw = pairs[w];
                if dy.in_deg == dw.in_deg && dx.out_deg <= dw.out_deg {
                    fail("plus_out_exceeds_zero", format!("x={x} y={y} w={w}"));
                }
                if dx.out_deg == dw.out_deg && dy.in_deg <= dw.in_deg {
                    fail("minus_in_exceeds_zero", format!("x={x} y={y} w={w}"));
                }
            }
        }
    }
    out
}

/// Each row of `Σ` is non-increasing up to column `m̲_k` and strictly
/// increasing after it; each column likewise around row `m̄_l`.
pub fn row_column_monotonicity(d: &IntegerPairSequence) -> Vec<Violation> {
    let ord = proper_order(d);
    let sigma = splittance_matrix_with(d, &ord);
    let m = maximal_sequences(d, &ord);
    let n = d.len();
    let mut out = vec![];
    for k in 0..=n {
        for l in 1..=n {
            let (prev, cur) = (sigma.get(k, l - 1), sigma.get(k, l));
            let ok = if l <= m.m_under[k] { cur <= prev } else { cur > prev };
            if !ok {
                out.push(violation("row_monotonicity", format!("{d} row {k} at column {l}, m̲={}", m.m_under[k])));
            }
        }
    }
    for l in 0..=n {
        for k in 1..=n {
            let (prev, cur) = (sigma.get(k - 1, l), sigma.get(k, l));
            let ok = if k <= m.m_bar[l] { cur <= prev } else { cur > prev };
            if !ok {
                out.push(violation("column_monotonicity", format!("{d} column {l} at row {k}, m̄={}", m.m_bar[l])));
            }
        }
    }
    out
}

/// Row minima sit at `m̲_k` and equal `s̄_k`; column minima sit at `m̄_l`
/// and equal `s̲_l`. The column half requires a balanced sequence.
pub fn slack_embedding(d: &IntegerPairSequence) -> Vec<Violation> {
    let ord = proper_order(d);
    let sigma = splittance_matrix_with(d, &ord);
    let m = maximal_sequences(d, &ord);
    let s = fulkerson_slack_with(d, &ord);
    let mut out = vec![];
    for k in 0..=d.len() {
        let row_min = *sigma.row(k).iter().min().expect("non-empty row");
        let at = sigma.get(k, m.m_under[k]);
        if at != row_min {
            out.push(violation("row_minimum", format!("{d} row {k}: Σ at m̲={at}, min={row_min}")));
        }
        if s.s_bar[k] != at {
            out.push(violation("s_bar", format!("{d} k={k}: s̄={} Σ={at}", s.s_bar[k])));
        }
        let col_min = sigma.column(k).into_iter().min().expect("non-empty column");
        let at = sigma.get(m.m_bar[k], k);
        if at != col_min {
            out.push(violation("column_minimum", format!("{d} column {k}: Σ at m̄={at}, min={col_min}")));
        }
        if s.s_under[k] != at {
            out.push(violation("s_under", format!("{d} l={k}: s̲={} Σ={at}", s.s_under[k])));
        }
    }
    out
}

/// The smallest interior slack equals both the minimum of `Σ` over all
/// cells but the four corners and the minimum off the two trivial corners.
/// Requires `N ≥ 2` and a digraphic sequence for the last equality.
pub fn interior_slack_minimum(d: &IntegerPairSequence) -> Vec<Violation> {
    let n = d.len();
    if n < 2 {
        return vec![];
    }
    let ord = proper_order(d);
    let sigma = splittance_matrix_with(d, &ord);
    let slack = fulkerson_slack_with(d, &ord).interior_min().expect("N ≥ 2");
    let corners = [(0, 0), (0, n), (n, 0), (n, n)];
    let interior = sigma
        .noncorner_cells()
        .filter(|c| !corners.contains(c))
        .map(|(k, l)| sigma.get(k, l))
        .min()
        .expect("N ≥ 2 leaves interior cells");
    let (noncorner, _) = sigma.min_noncorner().expect("non-empty");
    let mut out = vec![];
    if slack != interior {
        out.push(violation("interior_cells", format!("{d}: slack min {slack}, Σ over C {interior}")));
    }
    if slack != noncorner {
        out.push(violation("noncorner_cells", format!("{d}: slack min {slack}, Σ off corners {noncorner}")));
    }
    out
}
