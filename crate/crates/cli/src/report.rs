//! Text renderings of each command's result. Vertex labels are 1-based.

use std::fmt::Write as _;

use splitkit::splittance::fulkerson_slack_with;
use splitkit::{maximal_sequences, proper_order, Block, EditSet, InducedSplit, IntegerPairSequence, SplittanceMatrix};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Csv,
    Kv,
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

/// `result` is `(split, splittance)` for a digraphic sequence. A splittance
/// of `None` (the empty sequence) prints as `none`.
pub fn check_report(format: Format, digraphic: bool, result: Option<(bool, Option<u64>)>) -> String {
    let mut fields = vec![("digraphic", digraphic.to_string())];
    if let Some((split, splittance)) = result {
        fields.push(("split", split.to_string()));
        fields.push(("splittance", splittance.map_or("none".into(), |s| s.to_string())));
    }
    match format {
        Format::Kv => fields.iter().map(|(k, v)| format!("{k}={v}\n")).collect(),
        Format::Csv => {
            format!("{}\n{}\n", join(fields.iter().map(|f| f.0), ","), join(fields.iter().map(|f| &f.1), ","))
        }
    }
}

pub fn matrix(format: Format, sigma: &SplittanceMatrix) -> String {
    let mut out = String::new();
    for (k, row) in sigma.rows().enumerate() {
        match format {
            Format::Csv => writeln!(out, "{}", join(row, ",")),
            Format::Kv => writeln!(out, "row_{k}={}", join(row, ",")),
        }
        .expect("writing to a String");
    }
    out
}

/// The rows `s_bar`, `s_under`, `m_bar`, `m_under`, each indexed `0..=N`.
pub fn matrix_extras(format: Format, d: &IntegerPairSequence) -> String {
    let ord = proper_order(d);
    let s = fulkerson_slack_with(d, &ord);
    let m = maximal_sequences(d, &ord);
    let rows: [(&str, String); 4] = [
        ("s_bar", join(&s.s_bar, ",")),
        ("s_under", join(&s.s_under, ",")),
        ("m_bar", join(&m.m_bar, ",")),
        ("m_under", join(&m.m_under, ",")),
    ];
    let sep = match format {
        Format::Csv => ",",
        Format::Kv => "=",
    };
    rows.iter().map(|(name, vals)| format!("{name}{sep}{vals}\n")).collect()
}

fn label_set(members: &[usize], sep: &str) -> String {
    join(members.iter().map(|v| v + 1), sep)
}

pub fn partitions(format: Format, splits: &[InducedSplit]) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("k,l,S+-,S+,S-,S0\n");
    }
    for s in splits {
        let sets = Block::ALL.map(|b| s.partition.members(b));
        match format {
            Format::Kv => writeln!(
                out,
                "k={} l={} S+-={{{}}} S+={{{}}} S-={{{}}} S0={{{}}}",
                s.k,
                s.l,
                label_set(&sets[0], ","),
                label_set(&sets[1], ","),
                label_set(&sets[2], ","),
                label_set(&sets[3], ",")
            ),
            Format::Csv => writeln!(
                out,
                "{},{},{},{},{},{}",
                s.k,
                s.l,
                label_set(&sets[0], " "),
                label_set(&sets[1], " "),
                label_set(&sets[2], " "),
                label_set(&sets[3], " ")
            ),
        }
        .expect("writing to a String");
    }
    out
}

/// Removals first, then additions, each in arc order.
pub fn edit_script(format: Format, edits: &EditSet) -> String {
    let mut out = String::new();
    if format == Format::Csv {
        out.push_str("op,u,v\n");
    }
    let ops = edits.remove.iter().map(|a| ('-', a)).chain(edits.add.iter().map(|a| ('+', a)));
    for (op, &(u, v)) in ops {
        match format {
            Format::Kv => writeln!(out, "{op} {} {}", u + 1, v + 1),
            Format::Csv => writeln!(out, "{op},{},{}", u + 1, v + 1),
        }
        .expect("writing to a String");
    }
    out
}
