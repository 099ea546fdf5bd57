//! Degree-sequence analysis of split digraphs.
//!
//! A digraph is *split* when its vertices admit a non-trivial partition
//! `{S±, S⁺, S⁻, S⁰}` where `S±` is a clique, `S⁰` is independent, every arc
//! from `S± ∪ S⁺` to `S± ∪ S⁻` is present and no arc runs from `S⁻ ∪ S⁰` to
//! `S⁺ ∪ S⁰`. Whether a digraph is split, and how many arc edits it is away
//! from being split, depends only on its degree sequence.
//!
//! The crate is organised as:
//!
//! * [`seq`]: integer-pair sequences and their positive/negative orderings.
//! * [`undirected`]: the undirected baseline (splittance sequence,
//!   Erdős–Gallai slack, corrected Durfee number).
//! * [`splittance`]: partition measures, induced partitions, the splittance
//!   matrix, maximal sequences and Fulkerson slack sequences.
//! * [`model`]: concrete labeled digraphs, split-partition verification and
//!   minimal repair.
//! * [`oracle`]: brute-force enumerators used to validate everything above.
//!
//! ```
//! use splitkit::{digraph_splittance, IntegerPairSequence};
//!
//! let d = IntegerPairSequence::from_pairs(&[(2, 1), (3, 2), (4, 2), (1, 2), (0, 3)]).unwrap();
//! assert_eq!(digraph_splittance(&d).unwrap(), 0);
//! ```

pub mod model;
pub mod oracle;
pub mod seq;
pub mod splittance;
pub mod undirected;

pub use model::{degree_sequence, edit_set, repair, verify_split_partition, Digraph, EditSet, ModelError, Repair};
pub use seq::{
    compare_neg, compare_pos, proper_order, validate, DegreePair, IntegerPairSequence, ProperOrdering, SeqError,
};
pub use splittance::{
    digraph_splittance, fulkerson_slack, induced_partition, is_digraphic, is_split_sequence, maximal_sequences,
    partition_measure, split_partitions, splittance_matrix, Block, InducedSplit, MaximalSequences, QuadPartition,
    SlackPair, SplitError, SplittanceMatrix,
};
