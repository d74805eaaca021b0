//! Equivariant distributions as order ideals of realized degrees.
//!
//! A distribution on the marked space is determined by the set of degrees it
//! contains: a nonempty *order ideal* of the poset of realized positive
//! degrees (componentwise order, unrealized lattice points never appear).
//! The zero distribution is excluded. The roots of a distribution are the
//! members of its degrees' buckets.
//!
//! Integrability is bracket closure — `degree(α+β)` stays in the ideal
//! whenever `α, β` are roots of the distribution and `α+β` is a root — and
//! a distribution is *proper* when it is neither zero nor the full tangent
//! space, which happens exactly when every degree it contains has coordinate
//! sum at most `m − 1` (checked on every properness query). Bracket steps,
//! integrable hulls, complements, and Cauchy characteristics are all
//! computed degreewise with the interned root-sum table.

use std::collections::{BTreeSet, HashSet};
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::grading::{GradedSystem, MultiDegree};
use crate::rootsys::Root;
use crate::{Error, Result};

/// A nonzero equivariant distribution: an order ideal of realized positive
/// degrees, borrowing the grading it lives on.
#[derive(Clone)]
pub struct Distribution<'g> {
    gs: &'g GradedSystem,
    /// The degrees, downward closed within the realized poset.
    ideal: BTreeSet<MultiDegree>,
    /// Maximal degrees of the ideal, in storage order.
    antichain: Vec<MultiDegree>,
    /// Interned indices of all roots of the contained buckets, ascending.
    roots: Vec<usize>,
}

impl<'g> Distribution<'g> {
    /// Wraps a set already known to be a nonempty ideal of realized degrees.
    fn from_ideal(gs: &'g GradedSystem, ideal: BTreeSet<MultiDegree>) -> Self {
        debug_assert!(!ideal.is_empty());
        debug_assert!(ideal.iter().all(|d| gs.is_realized(d)));
        let antichain: Vec<MultiDegree> = ideal
            .iter()
            .filter(|d| !ideal.iter().any(|e| *d != e && d.leq(e)))
            .cloned()
            .collect();
        let roots = gs.roots_with_degrees(ideal.iter());
        Self {
            gs,
            ideal,
            antichain,
            roots,
        }
    }

    /// The smallest distribution containing the given degrees: all realized
    /// degrees lying below some generator.
    ///
    /// Generators need not themselves be realized, but each must be positive
    /// and dominated by some realized degree, and at least one is required.
    pub fn generate(gs: &'g GradedSystem, generators: &[MultiDegree]) -> Result<Self> {
        if generators.is_empty() {
            return Err(Error::EmptyDistribution("no generators given".into()));
        }
        for g in generators {
            if g.len() != gs.picard_number() {
                return Err(Error::WrongLength {
                    got: g.len(),
                    expected: gs.picard_number(),
                });
            }
            if !g.is_positive() {
                return Err(Error::NonpositiveDegree(g.to_string()));
            }
            if !gs.realized_degrees().any(|d| g.leq(d)) {
                return Err(Error::UnrealizableGenerator(g.to_string()));
            }
        }
        let ideal: BTreeSet<MultiDegree> = gs
            .realized_degrees()
            .filter(|d| generators.iter().any(|g| d.leq(g)))
            .cloned()
            .collect();
        debug_assert!(!ideal.is_empty(), "a marked unit degree always qualifies");
        Ok(Self::from_ideal(gs, ideal))
    }

    /// The full tangent space: every realized degree.
    pub fn full(gs: &'g GradedSystem) -> Self {
        let ideal: BTreeSet<MultiDegree> = gs.realized_degrees().cloned().collect();
        Self::from_ideal(gs, ideal)
    }

    /// `D^k`: all realized degrees of coordinate sum at most `k` (requires
    /// `k ≥ 1`; `D¹` is spanned by the marked simple directions).
    pub fn total_degree_at_most(gs: &'g GradedSystem, k: i64) -> Result<Self> {
        if k < 1 {
            return Err(Error::EmptyDistribution(format!(
                "no degrees have coordinate sum ≤ {k}"
            )));
        }
        let ideal: BTreeSet<MultiDegree> = gs
            .realized_degrees()
            .filter(|d| d.total() <= k)
            .cloned()
            .collect();
        Ok(Self::from_ideal(gs, ideal))
    }

    /// The pure-column distribution generated by `k·eᵢ` (`slot` 0-based).
    pub fn column(gs: &'g GradedSystem, slot: usize, k: i64) -> Result<Self> {
        if slot >= gs.picard_number() {
            return Err(Error::NodeOutOfRange {
                node: slot + 1,
                rank: gs.picard_number(),
            });
        }
        Self::generate(
            gs,
            &[MultiDegree::scaled_unit(gs.picard_number(), slot, k)],
        )
    }

    /// The full column at a marked node: generated by `mᵢ·eᵢ`. This is the
    /// smallest integrable distribution containing that marked direction.
    pub fn minimal_integrable(gs: &'g GradedSystem, slot: usize) -> Result<Self> {
        let k = *gs.depths().get(slot).ok_or(Error::NodeOutOfRange {
            node: slot + 1,
            rank: gs.picard_number(),
        })?;
        Self::column(gs, slot, k)
    }

    /// The sum of all full columns: generated by `{mᵢ·eᵢ}`.
    pub fn sum_of_minimal_integrables(gs: &'g GradedSystem) -> Result<Self> {
        let l = gs.picard_number();
        let gens: Vec<MultiDegree> = gs
            .depths()
            .iter()
            .enumerate()
            .map(|(slot, &m)| MultiDegree::scaled_unit(l, slot, m))
            .collect();
        Self::generate(gs, &gens)
    }

    /// Every distribution of the grading, i.e. every nonempty order ideal of
    /// the realized-degree poset, sorted by size and then by degree list.
    pub fn enumerate(gs: &'g GradedSystem) -> Vec<Self> {
        let mut masks: Vec<u128> = ideal_masks(gs).into_iter().collect();
        let degs: Vec<&MultiDegree> = gs.realized_degrees().collect();
        masks.sort_by_cached_key(|&m| (m.count_ones(), mask_bits(m)));
        masks
            .into_iter()
            .map(|m| {
                let ideal: BTreeSet<MultiDegree> = mask_bits(m)
                    .into_iter()
                    .map(|b| degs[b].clone())
                    .collect();
                Self::from_ideal(gs, ideal)
            })
            .collect()
    }

    /// Number of distributions of the grading, without materializing them.
    pub fn count(gs: &GradedSystem) -> u64 {
        ideal_masks(gs).len() as u64
    }

    /// The grading this distribution lives on.
    pub fn graded_system(&self) -> &'g GradedSystem {
        self.gs
    }

    /// The degrees, in storage order.
    pub fn ideal(&self) -> &BTreeSet<MultiDegree> {
        &self.ideal
    }

    /// The maximal degrees.
    pub fn antichain(&self) -> &[MultiDegree] {
        &self.antichain
    }

    /// Interned indices of the distribution's roots, ascending.
    pub fn root_indices(&self) -> &[usize] {
        &self.roots
    }

    /// The distribution's roots.
    pub fn roots(&self) -> Vec<&Root> {
        let all = self.gs.root_system().positive_roots();
        self.roots.iter().map(|&i| &all[i]).collect()
    }

    /// Number of roots (the fiber dimension).
    pub fn root_count(&self) -> usize {
        self.roots.len()
    }

    /// Root labels in the canonical display order (height, then label in the
    /// marking's numbering).
    pub fn root_labels(&self) -> Vec<String> {
        self.gs.sorted_labels(&self.roots)
    }

    /// Whether `λ` belongs to the ideal.
    pub fn contains_degree(&self, lam: &MultiDegree) -> bool {
        self.ideal.contains(lam)
    }

    /// Whether the interned root `i` belongs to the distribution.
    pub fn contains_index(&self, i: usize) -> bool {
        self.ideal.contains(self.gs.degree_of_index(i))
    }

    /// Containment of ideals.
    pub fn subset_of(&self, other: &Distribution<'g>) -> bool {
        self.same_grading(other);
        self.ideal.is_subset(&other.ideal)
    }

    /// The sum (union of ideals).
    pub fn union(&self, other: &Distribution<'g>) -> Distribution<'g> {
        self.same_grading(other);
        let ideal: BTreeSet<MultiDegree> = self.ideal.union(&other.ideal).cloned().collect();
        Self::from_ideal(self.gs, ideal)
    }

    fn same_grading(&self, other: &Distribution<'g>) {
        assert!(
            std::ptr::eq(self.gs, other.gs),
            "distributions from different gradings cannot be combined"
        );
    }

    /// Bracket closure: `degree(α+β)` stays inside for all roots `α, β` of
    /// the distribution with `α+β` a root.
    pub fn is_integrable(&self) -> bool {
        let rs = self.gs.root_system();
        for (a, &i) in self.roots.iter().enumerate() {
            for &j in &self.roots[a..] {
                if let Some(s) = rs.sum_index(i, j) {
                    if !self.contains_index(s) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the distribution is proper (neither zero nor the full tangent
    /// space). Equivalent to every degree having coordinate sum `≤ m − 1`;
    /// the equivalence is asserted on every call.
    pub fn is_proper(&self) -> bool {
        let proper = self.ideal.len() != self.gs.buckets().len();
        let bounded = self
            .antichain
            .iter()
            .all(|d| d.total() <= self.gs.total_depth() - 1);
        assert_eq!(
            proper, bounded,
            "properness must coincide with the depth bound m − 1"
        );
        proper
    }

    /// One bracket step: the smallest distribution containing `e` together
    /// with the degrees of all root sums `α + β`, `α` a root of `self`, `β`
    /// a root of `e`.
    pub fn bracket_step(&self, e: &Distribution<'g>) -> Distribution<'g> {
        self.same_grading(e);
        let rs = self.gs.root_system();
        let mut reached: BTreeSet<MultiDegree> = e.ideal.clone();
        for &i in &self.roots {
            for &j in &e.roots {
                if let Some(s) = rs.sum_index(i, j) {
                    reached.insert(self.gs.degree_of_index(s).clone());
                }
            }
        }
        // Close downward within the realized poset.
        let ideal: BTreeSet<MultiDegree> = self
            .gs
            .realized_degrees()
            .filter(|d| reached.iter().any(|r| d.leq(r)))
            .cloned()
            .collect();
        Self::from_ideal(self.gs, ideal)
    }

    /// The smallest integrable distribution containing this one: iterated
    /// self-brackets to a fixed point.
    pub fn generated_integrable(&self) -> Distribution<'g> {
        let mut cur = self.clone();
        loop {
            let next = cur.bracket_step(&cur);
            if next.ideal == cur.ideal {
                assert!(next.is_integrable(), "bracket fixed point must be integrable");
                return next;
            }
            cur = next;
        }
    }

    /// The integrable hull of the marked directions missing from this
    /// distribution. Errors when every marked unit degree already lies
    /// inside (in particular for the full tangent space).
    pub fn complementary(&self) -> Result<Distribution<'g>> {
        let l = self.gs.picard_number();
        let missing: Vec<MultiDegree> = (0..l)
            .map(|slot| MultiDegree::unit(l, slot))
            .filter(|u| !self.ideal.contains(u))
            .collect();
        if missing.is_empty() {
            return Err(Error::NoComplement(
                "every marked direction already lies in the distribution".into(),
            ));
        }
        Ok(Distribution::generate(self.gs, &missing)?.generated_integrable())
    }

    /// The Cauchy characteristic: roots of the distribution that cannot
    /// escape it by bracketing with another of its roots. Returns `None`
    /// when no root qualifies; otherwise the result is checked to be a union
    /// of full buckets forming an integrable sub-distribution.
    pub fn cauchy_characteristic(&self) -> Option<Distribution<'g>> {
        let rs = self.gs.root_system();
        let stuck: Vec<usize> = self
            .roots
            .iter()
            .copied()
            .filter(|&i| {
                self.roots.iter().all(|&j| match rs.sum_index(i, j) {
                    None => true,
                    Some(s) => self.contains_index(s),
                })
            })
            .collect();
        if stuck.is_empty() {
            return None;
        }
        let degrees: BTreeSet<MultiDegree> = stuck
            .iter()
            .map(|&i| self.gs.degree_of_index(i).clone())
            .collect();
        // Equivariance: a bucket is in or out as a whole.
        let full_buckets: usize = degrees.iter().map(|d| this_len(self.gs, d)).sum();
        assert_eq!(
            full_buckets,
            stuck.len(),
            "Cauchy characteristic must be a union of full buckets"
        );
        // Its degrees form an ideal of the realized poset.
        for d in self.gs.realized_degrees() {
            if degrees.iter().any(|s| d.leq(s)) {
                assert!(
                    degrees.contains(d),
                    "Cauchy characteristic degrees must be downward closed"
                );
            }
        }
        let chr = Self::from_ideal(self.gs, degrees);
        assert!(chr.is_integrable(), "Cauchy characteristic must be integrable");
        Some(chr)
    }
}

fn this_len(gs: &GradedSystem, d: &MultiDegree) -> usize {
    gs.bucket(d).len()
}

impl PartialEq for Distribution<'_> {
    fn eq(&self, other: &Self) -> bool {
        std::ptr::eq(self.gs, other.gs) && self.ideal == other.ideal
    }
}

impl Eq for Distribution<'_> {}

impl fmt::Debug for Distribution<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let chain: Vec<String> = self.antichain.iter().map(|d| d.to_string()).collect();
        write!(f, "Distribution⟨{}⟩", chain.join(" "))
    }
}

impl Serialize for Distribution<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("Distribution", 1)?;
        st.serialize_field("antichain", &self.antichain)?;
        st.end()
    }
}

/// All nonempty ideal bitmasks of the realized-degree poset.
///
/// Realized degrees are indexed in storage order; bit `i` of a mask marks
/// membership of the `i`-th degree. Breadth-first closure over single-degree
/// extensions: a degree may be added once everything strictly below it is
/// present.
fn ideal_masks(gs: &GradedSystem) -> HashSet<u128> {
    let degs: Vec<&MultiDegree> = gs.realized_degrees().collect();
    let n = degs.len();
    assert!(n <= 128, "at most 120 positive roots, so at most 120 degrees");
    let down: Vec<u128> = (0..n)
        .map(|i| {
            let mut m = 0u128;
            for j in 0..n {
                if j != i && degs[j].leq(degs[i]) {
                    m |= 1 << j;
                }
            }
            m
        })
        .collect();
    let mut seen: HashSet<u128> = HashSet::new();
    let mut frontier: Vec<u128> = vec![0];
    while let Some(mask) = frontier.pop() {
        for (i, &d) in down.iter().enumerate() {
            if mask & (1 << i) == 0 && d & mask == d {
                let next = mask | (1 << i);
                if seen.insert(next) {
                    frontier.push(next);
                }
            }
        }
    }
    seen
}

fn mask_bits(mask: u128) -> Vec<usize> {
    (0..128).filter(|b| mask & (1 << b) != 0).collect()
}
