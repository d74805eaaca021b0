//! Exact combinatorics of multi-graded simple root systems.
//!
//! This crate computes the discrete structure that controls equivariant
//! geometry on a rational homogeneous space `G/Q`: the root system of a simple
//! Lie algebra, the `ℤˡ`-grading cut out by marking `l` nodes of its Dynkin
//! diagram, the lattice of equivariant distributions (order ideals of realized
//! multi-degrees), Frobenius bracket ranks against highest-weight directions,
//! and the first Chern numbers of quotient bundles on minimal rational curves.
//! Everything is integer or exact rational arithmetic on root coefficient
//! vectors — no floating point, no matrices over ℝ, no group elements.
//!
//! # Quick start
//!
//! ```
//! use rootgrade::{Distribution, LieType, Marking, Numbering, RootSystem};
//!
//! // The 24 positive roots of F₄, graded by marking nodes 1 and 4
//! // (in the short-to-long node numbering used by the classical tables).
//! let rs = RootSystem::build(LieType::parse("F4")?);
//! let marking = Marking::new(rs.lie_type(), Numbering::Paper, &[1, 4])?;
//! let gs = rs.grade(&marking)?;
//! assert_eq!(gs.depths(), &[2, 1]);
//!
//! // The distribution spanned by the full degree-(·,0) columns and the
//! // (0,1)-column: an order ideal with antichain {(2,0),(0,1)}.
//! let d = Distribution::sum_of_minimal_integrables(&gs)?;
//! assert_eq!(d.root_count(), 10);
//! assert!(!d.is_integrable());
//! # Ok::<(), rootgrade::Error>(())
//! ```
//!
//! # Modules
//!
//! - [`rootsys`] — root systems of the simple types A–G (rank ≤ 8), built from
//!   Cartan data by string closure: membership, root strings, Cartan pairings,
//!   coroot expansions.
//! - [`grading`] — markings, multi-degrees, degree buckets, node depths,
//!   highest-weight roots of buckets, space classification, and degrees of
//!   line bundles on minimal rational curves.
//! - [`dist`] — distributions as order ideals of realized positive degrees:
//!   construction, exhaustive enumeration, integrability, properness, bracket
//!   steps, generated integrable hulls, complements, Cauchy characteristics.
//! - [`frobenius`] — Frobenius bracket ranks, iterated ranks, shifted degree
//!   closures, and Chern numbers, with the string-entry/Chern identity
//!   asserted on every computation.
//! - [`chains`] — constructive root chains: simple-root ascents and
//!   equal-degree walks witnessing connectivity of degree buckets.
//! - [`caselab`] — full case reports, a registry of reference cases with
//!   frozen expected values, and exhaustive sweep checks; drives the
//!   `caselab` binary.
//!
//! # Examples
//!
//! Each major capability has a runnable example:
//!
//! - `root_systems` — building systems, strings, pairings, coroots
//! - `gradings` — buckets, depths, classification, curve degrees
//! - `distributions` — ideals, enumeration, brackets, complements
//! - `frobenius_ranks` — rank profiles and the Chern identity
//! - `root_chains` — ascents and equal-degree connectivity walks
//! - `case_registry` — replaying the frozen reference cases
//! - `full_sweep` — the exhaustive cross-family consistency sweeps
//!
//! Run one with `cargo run --example gradings`.
//!
//! # Conventions
//!
//! - Simple roots are numbered in the Bourbaki order internally. A
//!   [`Numbering`] tag relabels nodes on input and output; see its docs.
//! - The invariant form is normalized so short roots have squared length 2;
//!   all inner products are then integers.
//! - Roots serialize as digit strings (`"1210"`) when every coefficient is a
//!   single digit, otherwise as comma-separated integers.

pub mod caselab;
pub mod chains;
pub mod dist;
pub mod frobenius;
pub mod grading;
pub mod rootsys;

pub use chains::{ascend_chain, isodegree_chain, RootChain};
pub use dist::Distribution;
pub use frobenius::{
    chern_number, frobenius_rank, iterated_rank, parabolic_descents, rank_profile,
    shifted_closure, HighestWeightVector, RankProfile,
};
pub use grading::{GradedSystem, Marking, MultiDegree, SpaceClass};
pub use rootsys::{Family, LieType, Numbering, Root, RootSystem};

use thiserror::Error;

/// Errors reported on invalid inputs.
///
/// Internal invariants (bucket highest weights unique, rank sums matching
/// Chern numbers, …) are asserted, not returned: their failure would mean an
/// implementation bug, and the offending computation panics with a message
/// saying so.
#[derive(Debug, Error)]
pub enum Error {
    /// Family/rank combination outside the supported tables.
    #[error("invalid rank {rank} for type {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: String,
    },
    /// Unparseable Lie type name.
    #[error("cannot parse `{0}` as a Lie type (expected e.g. \"A3\", \"F4\")")]
    ParseType(String),
    /// Unparseable numbering tag.
    #[error("cannot parse `{0}` as a numbering (expected \"bourbaki\" or \"paper\")")]
    ParseNumbering(String),
    /// Unparseable root label.
    #[error("cannot parse `{0}` as a root label")]
    ParseRoot(String),
    /// A coefficient vector that is not a root of the system.
    #[error("{0} is not a root of this system")]
    NotARoot(String),
    /// The zero vector where a root is required.
    #[error("the zero vector is not a root")]
    ZeroRoot,
    /// Coefficient vector of the wrong length for the system's rank.
    #[error("coefficient vector has length {got}, expected rank {expected}")]
    WrongLength { got: usize, expected: usize },
    /// Root string against `±β` itself.
    #[error("the root string of a root through ±itself is degenerate")]
    DegenerateString,
    /// A marking with no nodes.
    #[error("a marking must contain at least one node")]
    EmptyMarking,
    /// Node index outside `1..=rank`.
    #[error("node {node} is out of range for rank {rank}")]
    NodeOutOfRange { node: usize, rank: usize },
    /// Mixed data from two different systems or markings.
    #[error("mismatched systems: {0}")]
    MismatchedSystems(String),
    /// A degree that is not componentwise positive where one is required.
    #[error("degree {0} is not positive")]
    NonpositiveDegree(String),
    /// A degree whose bucket is empty.
    #[error("no root realizes degree {0}")]
    EmptyBucket(String),
    /// A distribution generator exceeding every realized degree.
    #[error("generator {0} is not dominated by any realized degree")]
    UnrealizableGenerator(String),
    /// A distribution constructor that would produce the zero distribution.
    #[error("the zero distribution is excluded: {0}")]
    EmptyDistribution(String),
    /// A highest-weight vector lying outside the distribution at hand.
    #[error("highest-weight root of degree {0} lies outside the distribution")]
    OutsideDistribution(String),
    /// Complementary distribution requested where none exists.
    #[error("no complementary distribution: {0}")]
    NoComplement(String),
    /// Iteration depth outside `1..=3`.
    #[error("iteration depth {0} is out of range (root strings are shorter than 4)")]
    DepthOutOfRange(i64),
    /// A negative shift where `k ≥ 0` is required.
    #[error("shift {0} is negative")]
    NegativeShift(i64),
    /// Ascent requested between incomparable roots.
    #[error("{lo} does not lie componentwise below {hi}")]
    NotComparable { lo: String, hi: String },
    /// Equal-degree walk requested between roots of different degrees.
    #[error("roots {a} and {b} have different degrees")]
    DegreeMismatch { a: String, b: String },
    /// Unknown reference-case identifier.
    #[error("unknown case id `{0}` (try `list-cases`)")]
    UnknownCase(String),
    /// Unknown sweep check name.
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    /// Sweep rank bound outside `1..=8`.
    #[error("sweep rank bound {0} is out of range (1 through 8)")]
    RankBound(usize),
    /// Unparseable distribution specification.
    #[error("cannot parse `{0}` as a distribution spec (expected \"columns\", \"full\", \"d1\", or \"gens=k1,..;k1,..\")")]
    ParseDistSpec(String),
    /// Unparseable marking node list.
    #[error("cannot parse `{0}` as a marking (expected comma-separated nodes, e.g. \"1,4\")")]
    ParseMarking(String),
}

/// Crate-wide result alias.
pub type Result<T, E = Error> = std::result::Result<T, E>;
