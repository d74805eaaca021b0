//! Exhaustive cross-family consistency sweeps.
//!
//! Each check replays one of the crate's global identities over every simple
//! type up to a rank bound and — where a marking matters — every nonempty
//! marking, counting the cells it visits and recording each violation as a
//! machine-readable failure line. The checks deliberately recompute both
//! sides of every identity from scratch, independent of the assertions
//! hard-wired into the library, so a regression surfaces as a reported
//! failure rather than only as a panic deep inside a computation.
//!
//! Three checks are exhaustive only up to rank 4 (`ideal-oracle`,
//! and the enumeration halves of `properness` and `chern-identity`): their
//! cost is the number of order ideals, which beyond rank 4 grows past what a
//! sweep should spend; the remaining structure is still covered there by a
//! fixed spanning family of distributions.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::chains::{ascend_chain, isodegree_chain};
use crate::dist::Distribution;
use crate::frobenius::rank_profile;
use crate::grading::{GradedSystem, Marking, MultiDegree};
use crate::rootsys::{Family, LieType, Numbering, RootSystem};
use crate::{Error, Result};

/// One sweepable consistency check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum CheckKind {
    /// Every Chern number equals its iterated rank sum — on every
    /// distribution for rank ≤ 4, and on a spanning family (column sum,
    /// `D¹`, `D^{m−1}`) above.
    ChernIdentity,
    /// Properness ⟺ containment in `D^{m−1}`, and sums of proper
    /// distributions are proper (exhaustive for rank ≤ 4). At every rank:
    /// total depth 1 forces Picard number 1, and the bracket closure of
    /// `D¹` is the full tangent space.
    Properness,
    /// Ideal enumeration matches brute-force subset filtering (rank ≤ 4).
    IdealOracle,
    /// Comparable positive roots are joined by simple ascents and
    /// equal-degree roots by unmarked walks; every emitted chain
    /// re-validates step by step.
    Connectivity,
    /// Curve degrees are nonnegative integers, `δᵢⱼ` on marked simple
    /// roots, and coroot expansions are integral on all of `Φ⁺`.
    Degrees,
    /// Root strings match Cartan pairings, never exceed 4 members, reach 4
    /// only in G₂, and every non-simple positive root has a simple descent.
    Strings,
}

impl CheckKind {
    /// All checks, in execution order.
    pub const ALL: [CheckKind; 6] = [
        CheckKind::ChernIdentity,
        CheckKind::Properness,
        CheckKind::IdealOracle,
        CheckKind::Connectivity,
        CheckKind::Degrees,
        CheckKind::Strings,
    ];

    /// The check's command-line name.
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::ChernIdentity => "chern-identity",
            CheckKind::Properness => "properness",
            CheckKind::IdealOracle => "ideal-oracle",
            CheckKind::Connectivity => "connectivity",
            CheckKind::Degrees => "degrees",
            CheckKind::Strings => "strings",
        }
    }

    /// Parses a command-line name.
    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|k| k.name() == s.trim())
            .ok_or_else(|| Error::UnknownCheck(s.trim().to_string()))
    }
}

/// Counts and failures from one sweep run.
#[derive(Clone, Debug)]
pub struct SweepOutcome {
    pub max_rank: usize,
    /// One summary line per executed check.
    pub lines: Vec<String>,
    /// One line per violated cell; empty on a clean sweep.
    pub failures: Vec<String>,
}

impl SweepOutcome {
    /// Did every cell of every check hold?
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }

    /// Summary lines, failures (prefixed `FAIL`), and a verdict line.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for line in &self.lines {
            let _ = writeln!(out, "{line}");
        }
        for failure in &self.failures {
            let _ = writeln!(out, "FAIL {failure}");
        }
        let _ = writeln!(
            out,
            "sweep up to rank {}: {}",
            self.max_rank,
            if self.pass() {
                "all checks passed".to_string()
            } else {
                format!("{} failures", self.failures.len())
            }
        );
        out
    }
}

/// Runs the selected checks over every simple type of rank ≤ `max_rank`.
///
/// Duplicate entries in `checks` run once; execution follows
/// [`CheckKind::ALL`] order. `max_rank` outside `1..=8` is an input error.
pub fn sweep(max_rank: usize, checks: &[CheckKind]) -> Result<SweepOutcome> {
    if max_rank == 0 || max_rank > 8 {
        return Err(Error::RankBound(max_rank));
    }
    let mut lines = Vec::new();
    let mut failures = Vec::new();
    for kind in CheckKind::ALL {
        if !checks.contains(&kind) {
            continue;
        }
        let line = match kind {
            CheckKind::ChernIdentity => check_chern_identity(max_rank, &mut failures),
            CheckKind::Properness => check_properness(max_rank, &mut failures),
            CheckKind::IdealOracle => check_ideal_oracle(max_rank, &mut failures),
            CheckKind::Connectivity => check_connectivity(max_rank, &mut failures),
            CheckKind::Degrees => check_degrees(max_rank, &mut failures),
            CheckKind::Strings => check_strings(max_rank, &mut failures),
        };
        lines.push(line);
    }
    Ok(SweepOutcome {
        max_rank,
        lines,
        failures,
    })
}

/// All nonempty markings of a type, by Bourbaki node subsets.
fn all_markings(lt: LieType) -> impl Iterator<Item = Marking> {
    let rank = lt.rank();
    (1u32..1 << rank).map(move |mask| {
        let nodes: Vec<usize> = (1..=rank).filter(|n| mask & (1 << (n - 1)) != 0).collect();
        Marking::new(lt, Numbering::Bourbaki, &nodes).expect("subset nodes are in range")
    })
}

fn marking_tag(gs: &GradedSystem) -> String {
    format!(
        "{} {:?}",
        gs.root_system().lie_type(),
        gs.marking().display_nodes()
    )
}

/// For rank ≥ 5, the spanning family of distributions the identity checks
/// fall back to: the column sum, `D¹`, and `D^{m−1}` (deduplicated).
fn spanning_distributions(gs: &GradedSystem) -> Vec<Distribution<'_>> {
    let mut candidates = vec![
        Distribution::sum_of_minimal_integrables(gs).expect("column sum is nonempty"),
        Distribution::total_degree_at_most(gs, 1).expect("D¹ is nonempty"),
    ];
    let m = gs.total_depth();
    if m >= 2 {
        candidates.push(Distribution::total_degree_at_most(gs, m - 1).expect("D^(m-1)"));
    }
    let mut out: Vec<Distribution<'_>> = Vec::new();
    for cand in candidates {
        if !out.iter().any(|d| d.ideal() == cand.ideal()) {
            out.push(cand);
        }
    }
    out
}

fn check_chern_identity(max_rank: usize, failures: &mut Vec<String>) -> String {
    let mut profiles = 0u64;
    let mut cells = 0u64;
    for lt in LieType::all_up_to_rank(max_rank) {
        let rs = RootSystem::build(lt);
        for marking in all_markings(lt) {
            let gs = rs.grade(&marking).expect("grading succeeds");
            let dists = if lt.rank() <= 4 {
                Distribution::enumerate(&gs)
            } else {
                spanning_distributions(&gs)
            };
            for d in &dists {
                cells += 1;
                let degrees: Vec<MultiDegree> = d.ideal().iter().cloned().collect();
                for lam in &degrees {
                    // Constructing the profile asserts the entry-counting
                    // identity internally; recompute the pairing sum here by
                    // walking root strings instead, so the two sides come
                    // from separate code paths.
                    let p = rank_profile(d, lam).expect("profile inside the distribution");
                    profiles += 1;
                    let mut by_strings = 0i64;
                    for (deg, members) in gs.buckets() {
                        if d.contains_degree(deg) {
                            continue;
                        }
                        for &i in members {
                            let (down, up) = rs
                                .root_string(&rs.positive_roots()[i], &p.root)
                                .expect("complement roots differ from the profile root");
                            by_strings += down - up;
                        }
                    }
                    if p.chern != by_strings {
                        failures.push(format!(
                            "chern-identity: {} bucket {}: pairing sum {} ≠ string walk {}",
                            marking_tag(&gs),
                            lam,
                            p.chern,
                            by_strings
                        ));
                    }
                }
            }
        }
    }
    format!(
        "chern-identity: {profiles} profiles over {cells} (type, marking, distribution) cells ≤ rank {max_rank}"
    )
}

fn check_properness(max_rank: usize, failures: &mut Vec<String>) -> String {
    let mut bound_cells = 0u64;
    let mut union_cells = 0u64;
    let mut closure_cells = 0u64;
    for lt in LieType::all_up_to_rank(max_rank) {
        let rs = RootSystem::build(lt);
        for marking in all_markings(lt) {
            let gs = rs.grade(&marking).expect("grading succeeds");
            let m = gs.total_depth();

            // Depth 1 happens only at Picard number 1.
            if m == 1 && gs.picard_number() != 1 {
                failures.push(format!(
                    "properness: {}: total depth 1 with Picard number {}",
                    marking_tag(&gs),
                    gs.picard_number()
                ));
            }

            // The degree-1 part brackets up to the whole tangent space.
            closure_cells += 1;
            let d1 = Distribution::total_degree_at_most(&gs, 1).expect("D¹ is nonempty");
            let closure = d1.generated_integrable();
            if closure.ideal().len() != gs.buckets().len() {
                failures.push(format!(
                    "properness: {}: bracket closure of D¹ reaches {} of {} degrees",
                    marking_tag(&gs),
                    closure.ideal().len(),
                    gs.buckets().len()
                ));
            }

            if lt.rank() > 4 {
                continue;
            }
            let dists = Distribution::enumerate(&gs);
            let bound = (m >= 2).then(|| {
                Distribution::total_degree_at_most(&gs, m - 1).expect("D^(m-1) is nonempty")
            });
            for d in &dists {
                bound_cells += 1;
                let expected = bound.as_ref().is_some_and(|b| d.subset_of(b));
                if d.is_proper() != expected {
                    failures.push(format!(
                        "properness: {} ideal {:?}: proper {} but D^(m-1) containment {}",
                        marking_tag(&gs),
                        d.antichain(),
                        d.is_proper(),
                        expected
                    ));
                }
            }
            let proper: Vec<&Distribution<'_>> = dists.iter().filter(|d| d.is_proper()).collect();
            for (i, a) in proper.iter().enumerate() {
                for b in &proper[i..] {
                    union_cells += 1;
                    if !a.union(b).is_proper() {
                        failures.push(format!(
                            "properness: {}: sum of proper {:?} and {:?} is not proper",
                            marking_tag(&gs),
                            a.antichain(),
                            b.antichain()
                        ));
                    }
                }
            }
        }
    }
    format!(
        "properness: {bound_cells} distributions against the depth bound and {union_cells} pairwise sums (rank ≤ 4), {closure_cells} D¹ bracket closures ≤ rank {max_rank}"
    )
}

fn check_ideal_oracle(max_rank: usize, failures: &mut Vec<String>) -> String {
    let bound = max_rank.min(4);
    let mut cells = 0u64;
    let mut ideals = 0u64;
    for lt in LieType::all_up_to_rank(bound) {
        let rs = RootSystem::build(lt);
        for marking in all_markings(lt) {
            let gs = rs.grade(&marking).expect("grading succeeds");
            let degrees: Vec<MultiDegree> = gs.buckets().keys().cloned().collect();
            let n = degrees.len();
            assert!(n < 32, "rank ≤ 4 gradings have at most 24 degrees");

            // Brute force: filter every subset for downward closure.
            let down: Vec<u32> = (0..n)
                .map(|i| {
                    (0..n)
                        .filter(|&j| degrees[j].leq(&degrees[i]))
                        .fold(0u32, |mask, j| mask | 1 << j)
                })
                .collect();
            let mut brute: BTreeSet<u32> = BTreeSet::new();
            for mask in 1u32..1 << n {
                let mut bits = mask;
                let mut closed = true;
                while bits != 0 {
                    let i = bits.trailing_zeros() as usize;
                    if down[i] & mask != down[i] {
                        closed = false;
                        break;
                    }
                    bits &= bits - 1;
                }
                if closed {
                    brute.insert(mask);
                }
            }

            let enumerated: BTreeSet<u32> = Distribution::enumerate(&gs)
                .iter()
                .map(|d| {
                    d.ideal()
                        .iter()
                        .map(|lam| {
                            degrees
                                .iter()
                                .position(|deg| deg == lam)
                                .expect("ideal degree is realized")
                        })
                        .fold(0u32, |mask, i| mask | 1 << i)
                })
                .collect();

            cells += 1;
            ideals += brute.len() as u64;
            if enumerated != brute {
                failures.push(format!(
                    "ideal-oracle: {}: enumeration found {} ideals, brute force {}",
                    marking_tag(&gs),
                    enumerated.len(),
                    brute.len()
                ));
            }
        }
    }
    format!("ideal-oracle: enumeration matches brute force on {cells} markings ({ideals} nonempty ideals) ≤ rank {bound}")
}

fn check_connectivity(max_rank: usize, failures: &mut Vec<String>) -> String {
    let mut ascents = 0u64;
    let mut walks = 0u64;
    for lt in LieType::all_up_to_rank(max_rank) {
        let rs = RootSystem::build(lt);
        let pos = rs.positive_roots();

        for alpha in pos {
            for beta in pos {
                if alpha == beta || !alpha.leq(beta) {
                    continue;
                }
                ascents += 1;
                match ascend_chain(&rs, alpha, beta) {
                    Ok(chain) => {
                        let length_ok = chain.len() as i64 == beta.height() - alpha.height();
                        if !chain.validate(&rs) || !length_ok {
                            failures.push(format!(
                                "connectivity: {lt} ascent {} → {} emitted an invalid chain",
                                alpha.plain_label(),
                                beta.plain_label()
                            ));
                        }
                    }
                    Err(e) => failures.push(format!(
                        "connectivity: {lt} ascent {} → {} failed: {e}",
                        alpha.plain_label(),
                        beta.plain_label()
                    )),
                }
            }
        }

        for marking in all_markings(lt) {
            let gs = rs.grade(&marking).expect("grading succeeds");
            for (lam, bucket) in gs.buckets() {
                for (i, &a) in bucket.iter().enumerate() {
                    for &b in &bucket[i + 1..] {
                        walks += 1;
                        let (alpha, beta) = (&pos[a], &pos[b]);
                        match isodegree_chain(&gs, alpha, beta) {
                            Ok(chain) => {
                                if !chain.validate(&rs) || !stays_in_bucket(&gs, &chain, lam) {
                                    failures.push(format!(
                                        "connectivity: {} walk {} → {} left bucket {}",
                                        marking_tag(&gs),
                                        alpha.plain_label(),
                                        beta.plain_label(),
                                        lam
                                    ));
                                }
                            }
                            Err(e) => failures.push(format!(
                                "connectivity: {} walk {} → {} failed: {e}",
                                marking_tag(&gs),
                                alpha.plain_label(),
                                beta.plain_label()
                            )),
                        }
                    }
                }
            }
        }
    }
    format!("connectivity: {ascents} comparable pairs ascended and {walks} equal-degree pairs walked ≤ rank {max_rank}")
}

/// Re-walks a chain checking that every partial sum keeps the degree `lam`.
fn stays_in_bucket(gs: &GradedSystem, chain: &crate::chains::RootChain, lam: &MultiDegree) -> bool {
    let rs = gs.root_system();
    let mut cur = chain.start().clone();
    for &(node, sign) in chain.steps() {
        let step = rs.simple_root(node);
        cur = if sign > 0 {
            cur.plus(step)
        } else {
            cur.minus(step)
        };
        if gs.degree_of(&cur) != *lam {
            return false;
        }
    }
    true
}

fn check_degrees(max_rank: usize, failures: &mut Vec<String>) -> String {
    let mut coroot_cells = 0u64;
    let mut curve_cells = 0u64;
    for lt in LieType::all_up_to_rank(max_rank) {
        let rs = RootSystem::build(lt);

        // Coroot expansions pair integrally with every fundamental weight.
        for alpha in rs.positive_roots() {
            for t in rs.coroot_expansion(alpha).expect("positive root") {
                coroot_cells += 1;
                if !t.is_integer() {
                    failures.push(format!(
                        "degrees: {lt} coroot of {} has non-integral coefficient {t}",
                        alpha.plain_label()
                    ));
                }
            }
        }

        for marking in all_markings(lt) {
            let gs = rs.grade(&marking).expect("grading succeeds");
            let l = gs.picard_number();

            // Nonnegative integral curve degrees at every bucket's
            // highest-weight root.
            for lam in gs.buckets().keys() {
                let alpha = gs.highest_weight_root(lam).expect("bucket is realized");
                for slot in 0..l {
                    curve_cells += 1;
                    let c = gs.curve_degree(alpha, slot).expect("curve degree");
                    if !c.is_integer() || *c.numer() < 0 {
                        failures.push(format!(
                            "degrees: {} bucket {} slot {}: curve degree {} not a nonnegative integer",
                            marking_tag(&gs),
                            lam,
                            slot,
                            c
                        ));
                    }
                }
            }

            // δᵢⱼ on the marked simple roots.
            for (j, &node) in marking.internal_nodes().iter().enumerate() {
                let alpha = rs.simple_root(node);
                for slot in 0..l {
                    curve_cells += 1;
                    let c = gs.curve_degree(alpha, slot).expect("curve degree");
                    let expected = i64::from(slot == j);
                    if c != num::rational::Ratio::from_integer(expected) {
                        failures.push(format!(
                            "degrees: {} marked simple at node {}: slot {} degree {} ≠ {}",
                            marking_tag(&gs),
                            node,
                            slot,
                            c,
                            expected
                        ));
                    }
                }
            }
        }
    }
    format!("degrees: {coroot_cells} coroot coefficients and {curve_cells} curve degrees ≤ rank {max_rank}")
}

fn check_strings(max_rank: usize, failures: &mut Vec<String>) -> String {
    let mut string_cells = 0u64;
    let mut descent_cells = 0u64;
    for lt in LieType::all_up_to_rank(max_rank) {
        let rs = RootSystem::build(lt);
        let pos = rs.positive_roots();

        for beta in pos {
            for alpha in pos {
                if alpha == beta {
                    continue;
                }
                string_cells += 1;
                let (p, q) = rs.root_string(beta, alpha).expect("distinct positive roots");
                let pairing = rs.cartan_pairing(beta, alpha).expect("roots pair");
                if p - q != pairing {
                    failures.push(format!(
                        "strings: {lt} string of {} through {}: p−q = {} ≠ pairing {}",
                        beta.plain_label(),
                        alpha.plain_label(),
                        p - q,
                        pairing
                    ));
                }
                if p + q > 3 || (p + q == 3 && lt.family() != Family::G) {
                    failures.push(format!(
                        "strings: {lt} string of {} through {} has {} members",
                        beta.plain_label(),
                        alpha.plain_label(),
                        p + q + 1
                    ));
                }
            }
        }

        // Every non-simple positive root steps down to Φ⁺ by some simple.
        for beta in pos {
            if beta.height() == 1 {
                continue;
            }
            descent_cells += 1;
            let has_descent = (1..=lt.rank()).any(|node| {
                let mut coeffs = beta.coeffs().to_vec();
                coeffs[node - 1] -= 1;
                coeffs[node - 1] >= 0 && rs.contains_positive(&crate::rootsys::Root::new(coeffs))
            });
            if !has_descent {
                failures.push(format!(
                    "strings: {lt} root {} has no simple descent",
                    beta.plain_label()
                ));
            }
        }
    }
    format!("strings: {string_cells} string/pairing cells and {descent_cells} descent cells ≤ rank {max_rank}")
}
