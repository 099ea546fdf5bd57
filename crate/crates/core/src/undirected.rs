//! Undirected baseline: splittance sequence, corrected Durfee number and
//! Erdős–Gallai slack of a graphic integer sequence.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum UndirectedError {
    #[error("degree at index {0} exceeds the simple-graph bound N-1")]
    OutOfRange(usize),
    #[error("sequence is empty")]
    EmptySequence,
    #[error("sequence is not graphic")]
    NotGraphic,
}

/// An exact multiple of one half, stored doubled.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct HalfInteger(i64);

impl HalfInteger {
    pub const fn from_doubled(doubled: i64) -> Self {
        HalfInteger(doubled)
    }

    pub const fn from_integer(v: i64) -> Self {
        HalfInteger(2 * v)
    }

    pub const fn doubled(self) -> i64 {
        self.0
    }

    /// The value as an integer, if it has no half part.
    pub fn to_integer(self) -> Option<i64> {
        (self.0 % 2 == 0).then_some(self.0 / 2)
    }
}

impl fmt::Display for HalfInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.to_integer() {
            Some(v) => write!(f, "{v}"),
            None => write!(f, "{}/2", self.0),
        }
    }
}

/// A degree sequence held in non-increasing order.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct IntegerSequence {
    degrees: Vec<usize>,
}

impl IntegerSequence {
    /// Sorts non-increasing. The formulas below are total, so no bound is
    /// enforced here; see [`IntegerSequence::validated`].
    pub fn new(mut degrees: Vec<usize>) -> Self {
        degrees.sort_unstable_by(|a, b| b.cmp(a));
        IntegerSequence { degrees }
    }

    /// Like [`IntegerSequence::new`] but rejects entries above `N-1`.
    pub fn validated(degrees: Vec<usize>) -> Result<Self, UndirectedError> {
        let n = degrees.len();
        if let Some(i) = degrees.iter().position(|&d| d >= n) {
            return Err(UndirectedError::OutOfRange(i));
        }
        Ok(Self::new(degrees))
    }

    pub fn degrees(&self) -> &[usize] {
        &self.degrees
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// `m = max{k : d_k ≥ k-1}`, 1-based.
pub fn corrected_durfee(d: &IntegerSequence) -> Result<usize, UndirectedError> {
    if d.is_empty() {
        return Err(UndirectedError::EmptySequence);
    }
    Ok(d.degrees.iter().enumerate().filter(|&(i, &di)| di >= i).map(|(i, _)| i + 1).max().unwrap_or(1))
}

/// `σ_k` for `k = 0..=N`.
pub fn splittance_sequence(d: &IntegerSequence) -> Vec<HalfInteger> {
    let total: i64 = d.degrees.iter().map(|&x| x as i64).sum();
    let mut head = 0i64;
    let mut out = Vec::with_capacity(d.len() + 1);
    for k in 0..=d.len() {
        if k > 0 {
            head += d.degrees[k - 1] as i64;
        }
        let k = k as i64;
        out.push(HalfInteger::from_doubled(k * (k - 1) - head + (total - head)));
    }
    out
}

/// Erdős–Gallai slack `s_k` for `k = 0..=N`.
pub fn eg_slack(d: &IntegerSequence) -> Vec<i64> {
    let n = d.len();
    let mut head = 0i64;
    let mut out = Vec::with_capacity(n + 1);
    for k in 0..=n {
        if k > 0 {
            head += d.degrees[k - 1] as i64;
        }
        let tail: i64 = d.degrees[k..].iter().map(|&x| x.min(k) as i64).sum();
        let k = k as i64;
        out.push(k * (k - 1) - head + tail);
    }
    out
}

pub fn is_graphic(d: &IntegerSequence) -> bool {
    let total: usize = d.degrees.iter().sum();
    total.is_multiple_of(2) && eg_slack(d).iter().all(|&s| s >= 0)
}

/// Minimum number of edge edits to reach a split graph, `σ_m(d)`.
pub fn undirected_splittance(d: &IntegerSequence) -> Result<u64, UndirectedError> {
    if !is_graphic(d) {
        return Err(UndirectedError::NotGraphic);
    }
    if d.is_empty() {
        return Ok(0);
    }
    let m = corrected_durfee(d)?;
    let sigma = splittance_sequence(d);
    let at_m = sigma[m];
    debug_assert_eq!(Some(&at_m), sigma.iter().min());
    let value = at_m.to_integer().expect("splittance of a graphic sequence is integral");
    Ok(value as u64)
}

/// Split test by `σ_m = 0`, cross-checked against `s_m = 0`.
pub fn is_split_undirected(d: &IntegerSequence) -> Result<bool, UndirectedError> {
    if !is_graphic(d) {
        return Err(UndirectedError::NotGraphic);
    }
    if d.is_empty() {
        return Ok(true);
    }
    let m = corrected_durfee(d)?;
    let sigma_m = splittance_sequence(d)[m];
    let slack_m = eg_slack(d)[m];
    assert_eq!(sigma_m.doubled(), slack_m, "2σ_m and s_m disagree for {:?}", d.degrees);
    Ok(sigma_m.doubled() == 0)
}
