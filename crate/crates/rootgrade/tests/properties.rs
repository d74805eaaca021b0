//! Randomized structural invariants.
//!
//! Every property here is a theorem about the objects the crate builds —
//! string arithmetic, order-ideal closure, bracket hulls, rank identities,
//! serialization stability, chain validity — checked on randomly drawn
//! types, markings, distributions, and roots.

use std::collections::BTreeSet;

use proptest::prelude::*;
use rootgrade::caselab::{run_case, CaseReport, DistSpec};
use rootgrade::{
    ascend_chain, chern_number, frobenius_rank, isodegree_chain, iterated_rank,
    parabolic_descents, rank_profile, Distribution, GradedSystem, HighestWeightVector, LieType,
    Marking, MultiDegree, Numbering, Root, RootSystem,
};

fn lie_types(max_rank: usize) -> impl Strategy<Value = LieType> {
    prop::sample::select(LieType::all_up_to_rank(max_rank))
}

/// Maps an opaque index to a nonempty Bourbaki node subset of `lt`.
fn mask_nodes(lt: LieType, idx: prop::sample::Index) -> Vec<usize> {
    let rank = lt.rank();
    let mask = idx.index((1usize << rank) - 1) + 1;
    (1..=rank).filter(|n| mask & (1 << (n - 1)) != 0).collect()
}

fn marking_of(lt: LieType, idx: prop::sample::Index) -> Marking {
    Marking::new(lt, Numbering::Bourbaki, &mask_nodes(lt, idx)).expect("mask nodes are in range")
}

/// The ideal generated by randomly chosen realized degrees.
fn seeded_distribution<'g>(
    gs: &'g GradedSystem,
    seeds: &[prop::sample::Index],
) -> Distribution<'g> {
    let degrees: Vec<MultiDegree> = gs.buckets().keys().cloned().collect();
    let generators: Vec<MultiDegree> = seeds
        .iter()
        .map(|s| degrees[s.index(degrees.len())].clone())
        .collect();
    Distribution::generate(gs, &generators).expect("at least one generator")
}

/// `beta + k·alpha` as a coefficient vector (not necessarily a root).
fn translate(beta: &Root, alpha: &Root, k: i64) -> Root {
    let mut out = beta.clone();
    for _ in 0..k.abs() {
        out = if k > 0 {
            out.plus(alpha)
        } else {
            out.minus(alpha)
        };
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    /// The string `(down, up)` through `β` along `α` satisfies
    /// `down − up = ⟨β, α∨⟩`, has at most 4 members, and reports exact
    /// membership: `β − kα` is a root for `k ≤ down` and not one step
    /// further, symmetrically upward.
    #[test]
    fn string_data_matches_the_cartan_pairing(
        lt in lie_types(6),
        bi in any::<prop::sample::Index>(),
        ai in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::build(lt);
        let pos = rs.positive_roots();
        let beta = pos[bi.index(pos.len())].clone();
        let alpha = pos[ai.index(pos.len())].clone();
        prop_assume!(beta != alpha);

        let (down, up) = rs.root_string(&beta, &alpha).unwrap();
        prop_assert_eq!(down - up, rs.cartan_pairing(&beta, &alpha).unwrap());
        prop_assert!(down + up <= 3, "strings have at most 4 members");
        for k in 1..=down {
            prop_assert!(rs.contains(&translate(&beta, &alpha, -k)));
        }
        prop_assert!(!rs.contains(&translate(&beta, &alpha, -(down + 1))));
        for k in 1..=up {
            prop_assert!(rs.contains(&translate(&beta, &alpha, k)));
        }
        prop_assert!(!rs.contains(&translate(&beta, &alpha, up + 1)));
    }

    /// Root labels round-trip through both numbering conventions.
    #[test]
    fn labels_parse_back_to_the_same_root(
        lt in lie_types(8),
        ri in any::<prop::sample::Index>(),
        paper in any::<bool>(),
    ) {
        let rs = RootSystem::build(lt);
        let numbering = if paper { Numbering::Paper } else { Numbering::Bourbaki };
        let pos = rs.positive_roots();
        let r = &pos[ri.index(pos.len())];
        let label = rs.label(r, numbering);
        prop_assert_eq!(&rs.parse_root(&label, numbering).unwrap(), r);
    }

    /// A generated distribution is a downward-closed set of realized
    /// degrees, its antichain is a true antichain, and regenerating from
    /// the antichain reproduces the distribution exactly.
    #[test]
    fn ideals_are_downward_closed_and_round_trip_through_the_antichain(
        lt in lie_types(5),
        mark in any::<prop::sample::Index>(),
        seeds in prop::collection::vec(any::<prop::sample::Index>(), 1..=3),
    ) {
        let rs = RootSystem::build(lt);
        let marking = marking_of(lt, mark);
        let gs = rs.grade(&marking).unwrap();
        let d = seeded_distribution(&gs, &seeds);

        for y in d.ideal() {
            for x in gs.buckets().keys() {
                if x.leq(y) {
                    prop_assert!(
                        d.contains_degree(x),
                        "{x} ≤ {y} but only {y} is in the ideal"
                    );
                }
            }
        }
        let anti = d.antichain();
        for a in anti {
            for b in anti {
                if a != b {
                    prop_assert!(!a.leq(b) && !b.leq(a), "{a} and {b} are comparable");
                }
            }
        }
        for y in d.ideal() {
            prop_assert!(anti.iter().any(|a| y.leq(a)), "{y} is below no maximal degree");
        }
        let re = Distribution::generate(&gs, anti).unwrap();
        prop_assert_eq!(re.ideal(), d.ideal());
    }

    /// The bracket hull contains its argument, is integrable, is reached
    /// in finitely many bracket steps, and is a fixed point; an already
    /// integrable distribution is its own hull.
    #[test]
    fn bracket_hull_is_an_idempotent_integrable_closure(
        lt in lie_types(5),
        mark in any::<prop::sample::Index>(),
        seeds in prop::collection::vec(any::<prop::sample::Index>(), 1..=3),
    ) {
        let rs = RootSystem::build(lt);
        let marking = marking_of(lt, mark);
        let gs = rs.grade(&marking).unwrap();
        let d = seeded_distribution(&gs, &seeds);

        let hull = d.generated_integrable();
        prop_assert!(d.subset_of(&hull));
        prop_assert!(hull.is_integrable());
        let hull_again = hull.generated_integrable();
        prop_assert_eq!(hull_again.ideal(), hull.ideal());
        if d.is_integrable() {
            prop_assert_eq!(hull.ideal(), d.ideal());
        }
        let step = d.bracket_step(&d);
        prop_assert!(d.subset_of(&step), "one bracket step never shrinks");
        prop_assert!(step.subset_of(&hull), "each step stays inside the hull");
    }

    /// Rank functions agree with each other and with the Chern number:
    /// `frobenius_rank` is the first iterated rank, the profile collects
    /// all three, and the Chern number counts string entries — iterated
    /// ranks plus parabolic descents — exactly.
    #[test]
    fn rank_identities_hold_at_every_bucket(
        lt in lie_types(5),
        mark in any::<prop::sample::Index>(),
        seeds in prop::collection::vec(any::<prop::sample::Index>(), 1..=3),
        pick in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::build(lt);
        let marking = marking_of(lt, mark);
        let gs = rs.grade(&marking).unwrap();
        let d = seeded_distribution(&gs, &seeds);

        let degrees: Vec<MultiDegree> = d.ideal().iter().cloned().collect();
        let lam = &degrees[pick.index(degrees.len())];
        let hwv = HighestWeightVector::of(&gs, lam.clone()).unwrap();

        let r1 = frobenius_rank(&d, &hwv).unwrap();
        prop_assert_eq!(r1, iterated_rank(&d, &hwv, 1).unwrap());

        let profile = rank_profile(&d, lam).unwrap();
        prop_assert_eq!(&profile.degree, lam);
        for (k, &rk) in (1..=3).zip(profile.ranks.iter()) {
            prop_assert_eq!(rk, iterated_rank(&d, &hwv, k).unwrap());
        }

        let chern = chern_number(&d, &hwv).unwrap();
        prop_assert_eq!(chern, profile.chern);
        let mut entries = 0usize;
        for k in 1..=3 {
            entries += iterated_rank(&d, &hwv, k).unwrap();
            entries += parabolic_descents(&d, &hwv, k).unwrap();
        }
        prop_assert_eq!(chern, entries as i64);
        prop_assert!(chern >= profile.ranks.iter().sum::<usize>() as i64);
        prop_assert_eq!(parabolic_descents(&d, &hwv, 1).unwrap(), 0,
            "a first descent would land inside the ideal");
    }

    /// Counting distributions agrees with materializing them, and the
    /// enumeration has no duplicates.
    #[test]
    fn distribution_count_matches_enumeration(
        lt in lie_types(4),
        mark in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::build(lt);
        let marking = marking_of(lt, mark);
        let gs = rs.grade(&marking).unwrap();
        let all = Distribution::enumerate(&gs);
        prop_assert_eq!(Distribution::count(&gs), all.len() as u64);
        let distinct: BTreeSet<&BTreeSet<MultiDegree>> = all.iter().map(|d| d.ideal()).collect();
        prop_assert_eq!(distinct.len(), all.len());
    }

    /// Realized degrees and full case reports survive a JSON round trip
    /// unchanged, and re-serialization is byte-stable.
    #[test]
    fn json_round_trips_are_exact(
        lt in lie_types(4),
        mark in any::<prop::sample::Index>(),
        spec_name in prop::sample::select(vec!["columns", "full", "d1"]),
    ) {
        let rs = RootSystem::build(lt);
        let nodes = mask_nodes(lt, mark);
        let marking = Marking::new(lt, Numbering::Bourbaki, &nodes).unwrap();
        let gs = rs.grade(&marking).unwrap();

        for lam in gs.buckets().keys() {
            let json = serde_json::to_string(lam).unwrap();
            let back: MultiDegree = serde_json::from_str(&json).unwrap();
            prop_assert_eq!(&back, lam);
        }

        let spec = DistSpec::parse(spec_name).unwrap();
        let report = run_case(lt, Numbering::Bourbaki, &nodes, &spec).unwrap();
        let json = serde_json::to_string_pretty(&report).unwrap();
        let back: CaseReport = serde_json::from_str(&json).unwrap();
        prop_assert_eq!(&back, &report);
        prop_assert_eq!(serde_json::to_string_pretty(&back).unwrap(), json);
    }

    /// Between comparable positive roots there is a simple-root ascent:
    /// every step adds one simple root, the walk stays inside `Φ⁺`, and
    /// its length is the height difference.
    #[test]
    fn comparable_roots_are_joined_by_simple_ascents(
        lt in lie_types(5),
        ai in any::<prop::sample::Index>(),
        bi in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::build(lt);
        let pos = rs.positive_roots();
        let alpha = pos[ai.index(pos.len())].clone();
        let above: Vec<&Root> = pos
            .iter()
            .filter(|r| {
                alpha
                    .coeffs()
                    .iter()
                    .zip(r.coeffs())
                    .all(|(a, b)| a <= b)
            })
            .collect();
        let beta = above[bi.index(above.len())].clone();
        prop_assume!(beta != alpha);

        let chain = ascend_chain(&rs, &alpha, &beta).unwrap();
        prop_assert!(chain.validate(&rs));
        prop_assert_eq!(chain.start(), &alpha);
        prop_assert_eq!(chain.end(), &beta);
        prop_assert!(chain.steps().iter().all(|&(_, sign)| sign == 1));
        let height_gap: i64 = beta.coeffs().iter().sum::<i64>()
            - alpha.coeffs().iter().sum::<i64>();
        prop_assert_eq!(chain.len() as i64, height_gap);
    }

    /// Roots of equal degree are joined by walks along unmarked simple
    /// roots; the walk validates and never touches a marked node.
    #[test]
    fn equal_degree_roots_are_joined_by_unmarked_walks(
        lt in lie_types(5),
        mark in any::<prop::sample::Index>(),
        bucket_pick in any::<prop::sample::Index>(),
        ai in any::<prop::sample::Index>(),
        bi in any::<prop::sample::Index>(),
    ) {
        let rs = RootSystem::build(lt);
        let marking = marking_of(lt, mark);
        let gs = rs.grade(&marking).unwrap();
        let rich: Vec<&Vec<usize>> = gs.buckets().values().filter(|v| v.len() >= 2).collect();
        prop_assume!(!rich.is_empty());
        let members = rich[bucket_pick.index(rich.len())];
        let alpha = rs.positive_roots()[members[ai.index(members.len())]].clone();
        let beta = rs.positive_roots()[members[bi.index(members.len())]].clone();
        prop_assume!(alpha != beta);

        let walk = isodegree_chain(&gs, &alpha, &beta).unwrap();
        prop_assert!(walk.validate(&rs));
        prop_assert_eq!(walk.start(), &alpha);
        prop_assert_eq!(walk.end(), &beta);
        let marked = gs.marking().internal_nodes();
        prop_assert!(
            walk.steps().iter().all(|(node, _)| !marked.contains(node)),
            "an equal-degree walk must not cross a marked node"
        );
    }
}
