//! Bracket ranks against highest-weight directions, shifted closures, and
//! Chern numbers.
//!
//! Fix a distribution `D` with degree ideal `Λ̄` and let `α` be the
//! highest-weight root of a bucket inside it. The *Frobenius rank* of `D` at
//! `α` counts the roots of `D` that bracket out of it in the `α`-direction:
//!
//! ```text
//! rank F_α = #{ β ∈ Φ_Λ̄ : α + β ∈ Φ⁺ ∖ Φ_Λ̄ },
//! ```
//!
//! and the `k`-th iterated rank counts escapes along `kα` (`k ≤ 3`, since no
//! root string is longer than four). Summing the pairings `β(H_α)` over the
//! positive-degree roots outside `Φ_Λ̄` computes the first Chern number of
//! the quotient `T(S)/D` on the minimal rational curve tangent to `α`.
//! Term-by-term cancellation along `α`-strings turns that sum into a count
//! of string entries into the complement: each complement root `β`
//! contributes one entry for every `k` with `β − kα` a root that is *not*
//! itself in the complement. Entries from `Φ_Λ̄` are exactly the iterated
//! ranks; the remainder — entries whose string continues below the tangent
//! space through a Levi or negative root — is counted by
//! [`parabolic_descents`] and vanishes in every tabulated case. Both sides
//! of the identity are computed and compared on every call — a mismatch is
//! an implementation bug, not an input error.

use std::collections::BTreeSet;

use crate::dist::Distribution;
use crate::grading::{GradedSystem, MultiDegree};
use crate::rootsys::Root;
use crate::{Error, Result};

/// The highest-weight root of a degree bucket, with its interned index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HighestWeightVector {
    degree: MultiDegree,
    root: Root,
    index: usize,
}

impl HighestWeightVector {
    /// Looks up the highest-weight root of the bucket `Φ_λ`.
    pub fn of(gs: &GradedSystem, degree: MultiDegree) -> Result<Self> {
        let index = gs.highest_weight_index(&degree)?;
        Ok(Self {
            degree,
            root: gs.root_system().positive_roots()[index].clone(),
            index,
        })
    }

    /// The bucket's degree.
    pub fn degree(&self) -> &MultiDegree {
        &self.degree
    }

    /// The highest-weight root.
    pub fn root(&self) -> &Root {
        &self.root
    }

    /// Interned index of the root.
    pub fn index(&self) -> usize {
        self.index
    }
}

fn require_inside(d: &Distribution<'_>, hwv: &HighestWeightVector) -> Result<()> {
    if !d.contains_degree(hwv.degree()) {
        return Err(Error::OutsideDistribution(hwv.degree().to_string()));
    }
    Ok(())
}

/// The Frobenius rank of `d` at `hwv`: the number of roots of `d` whose
/// bracket with the highest-weight direction leaves `d`.
pub fn frobenius_rank(d: &Distribution<'_>, hwv: &HighestWeightVector) -> Result<usize> {
    iterated_rank(d, hwv, 1)
}

/// The `k`-th iterated rank (`1 ≤ k ≤ 3`): the number of roots `γ` of `d`
/// with `γ + kα ∈ Φ⁺ ∖ Φ_Λ̄`.
pub fn iterated_rank(d: &Distribution<'_>, hwv: &HighestWeightVector, k: i64) -> Result<usize> {
    require_inside(d, hwv)?;
    if !(1..=3).contains(&k) {
        return Err(Error::DepthOutOfRange(k));
    }
    let gs = d.graded_system();
    let rs = gs.root_system();
    let count = d
        .root_indices()
        .iter()
        .filter(|&&gamma| {
            let target = if k == 1 {
                rs.sum_index(gamma, hwv.index)
            } else {
                let mut coeffs = rs.positive_roots()[gamma].coeffs().to_vec();
                for (c, a) in coeffs.iter_mut().zip(hwv.root.coeffs()) {
                    *c += k * a;
                }
                rs.position(&Root::new(coeffs))
            };
            match target {
                Some(s) => !d.contains_index(s),
                None => false,
            }
        })
        .count();
    Ok(count)
}

/// The shifted closure `Λ̄ᵏ_α`: all realized degrees `λ` with
/// `0 < λ ≤ ξ + k·degree(α)` for some `ξ ∈ Λ̄` (`k ≥ 0`; `k = 0` returns the
/// ideal itself).
pub fn shifted_closure(
    d: &Distribution<'_>,
    hwv: &HighestWeightVector,
    k: i64,
) -> Result<BTreeSet<MultiDegree>> {
    require_inside(d, hwv)?;
    if k < 0 {
        return Err(Error::NegativeShift(k));
    }
    let gs = d.graded_system();
    let shifted: Vec<MultiDegree> = d
        .antichain()
        .iter()
        .map(|xi| xi.plus_scaled(k, hwv.degree()))
        .collect();
    let out: BTreeSet<MultiDegree> = gs
        .realized_degrees()
        .filter(|lam| shifted.iter().any(|hi| lam.leq(hi)))
        .cloned()
        .collect();
    debug_assert!(k > 0 || out == *d.ideal());
    Ok(out)
}

/// Complement roots whose `k`-step descent along `α` leaves the tangent
/// space: the number of `β ∈ Φ⁺ ∖ Φ_Λ̄` of positive degree with `β − kα` a
/// Levi or negative root.
///
/// Such a `β` sits on an `α`-string that enters the complement from below
/// the positive-degree range, so it raises the Chern number without being
/// reachable from `Φ_Λ̄` — the gap between [`chern_number`] and the sum of
/// the three iterated ranks. The count needs `β − kα` to have no positive
/// degree component while `β` keeps one outside the ideal, which forces a
/// multiple of `α`'s degree to be realized yet missing from the ideal; no
/// tabulated case admits that, and `k = 1` never counts (the degree of `β`
/// would be bounded by `α`'s and so fall inside the ideal).
pub fn parabolic_descents(
    d: &Distribution<'_>,
    hwv: &HighestWeightVector,
    k: i64,
) -> Result<usize> {
    require_inside(d, hwv)?;
    if !(1..=3).contains(&k) {
        return Err(Error::DepthOutOfRange(k));
    }
    let gs = d.graded_system();
    let rs = gs.root_system();
    let mut count = 0;
    for (deg, members) in gs.buckets() {
        if d.contains_degree(deg) {
            continue;
        }
        for &i in members {
            let mut coeffs = rs.positive_roots()[i].coeffs().to_vec();
            for (c, a) in coeffs.iter_mut().zip(hwv.root.coeffs()) {
                *c -= k * a;
            }
            let below = Root::new(coeffs);
            // A Levi root has degree zero; a negative root, nonpositive
            // coefficients throughout. Either way no marked coefficient
            // stays positive.
            if rs.contains(&below)
                && gs
                    .marking()
                    .internal_nodes()
                    .iter()
                    .all(|&node| below.coeffs()[node - 1] <= 0)
            {
                count += 1;
            }
        }
    }
    Ok(count)
}

/// The first Chern number of `T(S)/D` on the minimal rational curve tangent
/// to the highest-weight direction: `Σ β(H_α)` over the positive-degree
/// roots `β ∉ Φ_Λ̄`.
///
/// Computed twice — directly from the pairings, and as the sum of the three
/// iterated ranks plus the three parabolic descent counts — and asserted
/// equal.
pub fn chern_number(d: &Distribution<'_>, hwv: &HighestWeightVector) -> Result<i64> {
    require_inside(d, hwv)?;
    let gs = d.graded_system();
    let rs = gs.root_system();
    let mut direct = 0i64;
    for (deg, members) in gs.buckets() {
        if d.contains_degree(deg) {
            continue;
        }
        for &i in members {
            direct += rs
                .cartan_pairing(&rs.positive_roots()[i], &hwv.root)
                .expect("interned roots pair");
        }
    }
    let by_entries: usize = (1..=3)
        .map(|k| {
            iterated_rank(d, hwv, k).expect("validated above")
                + parabolic_descents(d, hwv, k).expect("validated above")
        })
        .sum();
    assert_eq!(
        direct, by_entries as i64,
        "Chern number must count the string entries into the complement (implementation bug)"
    );
    Ok(direct)
}

/// Ranks and Chern number of a distribution at one of its buckets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RankProfile {
    /// The bucket's degree.
    pub degree: MultiDegree,
    /// Its highest-weight root.
    pub root: Root,
    /// Iterated ranks `[r₁, r₂, r₃]`.
    pub ranks: [usize; 3],
    /// First Chern number of the quotient on the tangent curve: at least
    /// `r₁ + r₂ + r₃`, with equality unless an `α`-string enters the
    /// complement from below the tangent space (see [`parabolic_descents`]).
    pub chern: i64,
}

/// Computes the full rank profile of `d` at the bucket `λ ∈ Λ̄`.
pub fn rank_profile(d: &Distribution<'_>, degree: &MultiDegree) -> Result<RankProfile> {
    let hwv = HighestWeightVector::of(d.graded_system(), degree.clone())?;
    require_inside(d, &hwv)?;
    let ranks = [
        iterated_rank(d, &hwv, 1)?,
        iterated_rank(d, &hwv, 2)?,
        iterated_rank(d, &hwv, 3)?,
    ];
    let chern = chern_number(d, &hwv)?;
    Ok(RankProfile {
        degree: degree.clone(),
        root: hwv.root,
        ranks,
        chern,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Marking;
    use crate::rootsys::{LieType, Numbering, RootSystem};

    fn graded(name: &str, numbering: Numbering, nodes: &[usize]) -> GradedSystem {
        let rs = RootSystem::build(LieType::parse(name).unwrap());
        let marking = Marking::new(rs.lie_type(), numbering, nodes).unwrap();
        rs.grade(&marking).unwrap()
    }

    fn deg(v: &[i64]) -> MultiDegree {
        MultiDegree::new(v.to_vec())
    }

    #[test]
    fn f4_end_node_ranks() {
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        let d = Distribution::sum_of_minimal_integrables(&gs).unwrap();
        let p1 = rank_profile(&d, &deg(&[1, 0])).unwrap();
        assert_eq!(gs.root_system().label(&p1.root, Numbering::Paper), "1210");
        assert_eq!(p1.ranks, [3, 2, 0]);
        assert_eq!(p1.chern, 5);
        let p2 = rank_profile(&d, &deg(&[2, 0])).unwrap();
        assert_eq!(gs.root_system().label(&p2.root, Numbering::Paper), "2210");
        assert_eq!(p2.ranks, [5, 0, 0]);
        assert_eq!(p2.chern, 5);
        // The Frobenius ranks 3 < 5 of the two column tops.
        let h1 = HighestWeightVector::of(&gs, deg(&[1, 0])).unwrap();
        let h2 = HighestWeightVector::of(&gs, deg(&[2, 0])).unwrap();
        assert_eq!(frobenius_rank(&d, &h1).unwrap(), 3);
        assert_eq!(frobenius_rank(&d, &h2).unwrap(), 5);
    }

    #[test]
    fn shifted_closures_grow_by_one_bucket_layer() {
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        let d = Distribution::sum_of_minimal_integrables(&gs).unwrap();
        let h1 = HighestWeightVector::of(&gs, deg(&[1, 0])).unwrap();
        let l0 = shifted_closure(&d, &h1, 0).unwrap();
        assert_eq!(&l0, d.ideal());
        let l1 = shifted_closure(&d, &h1, 1).unwrap();
        let added: Vec<MultiDegree> = l1.difference(&l0).cloned().collect();
        assert_eq!(added, [deg(&[1, 1])]);
        let h2 = HighestWeightVector::of(&gs, deg(&[2, 0])).unwrap();
        let l2 = shifted_closure(&d, &h2, 1).unwrap();
        let added: Vec<MultiDegree> = l2.difference(&l1).cloned().collect();
        assert_eq!(added, [deg(&[2, 1])]);
        assert!(matches!(
            shifted_closure(&d, &h1, -1),
            Err(Error::NegativeShift(-1))
        ));
    }

    #[test]
    fn rank_inputs_are_validated() {
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        let d = Distribution::sum_of_minimal_integrables(&gs).unwrap();
        // (1,1) is realized but lies outside the distribution.
        let outside = HighestWeightVector::of(&gs, deg(&[1, 1])).unwrap();
        assert!(matches!(
            frobenius_rank(&d, &outside),
            Err(Error::OutsideDistribution(_))
        ));
        let h1 = HighestWeightVector::of(&gs, deg(&[1, 0])).unwrap();
        assert!(matches!(
            iterated_rank(&d, &h1, 0),
            Err(Error::DepthOutOfRange(0))
        ));
        assert!(matches!(
            iterated_rank(&d, &h1, 4),
            Err(Error::DepthOutOfRange(4))
        ));
        assert!(matches!(
            HighestWeightVector::of(&gs, deg(&[3, 0])),
            Err(Error::EmptyBucket(_))
        ));
    }

    #[test]
    fn chern_identity_across_every_distribution_of_a_grading() {
        // The assertion inside chern_number does the real work; this drives
        // it over every distribution and bucket of a non-simply-laced case.
        let gs = graded("B3", Numbering::Bourbaki, &[1, 3]);
        for d in Distribution::enumerate(&gs) {
            for lam in d.ideal().clone() {
                let p = rank_profile(&d, &lam).unwrap();
                assert!(p.chern >= p.ranks.iter().sum::<usize>() as i64);
            }
        }
    }

    #[test]
    fn a_string_can_enter_the_complement_from_below_the_tangent_space() {
        // The single bucket (0,1) of B₃{1,3} holds ε₃ and ε₂ = "011". Around
        // α = ε₂ the complement root ε₂+ε₃ = "012" descends twice to the
        // negative root ε₃−ε₂, so the curve sees one more entry than the
        // iterated ranks do: chern 2 against rank sum 1.
        let gs = graded("B3", Numbering::Bourbaki, &[1, 3]);
        let d = Distribution::generate(&gs, &[deg(&[0, 1])]).unwrap();
        let p = rank_profile(&d, &deg(&[0, 1])).unwrap();
        assert_eq!(gs.root_system().label(&p.root, Numbering::Bourbaki), "011");
        assert_eq!(p.ranks, [1, 0, 0]);
        assert_eq!(p.chern, 2);
        let hwv = HighestWeightVector::of(&gs, deg(&[0, 1])).unwrap();
        assert_eq!(parabolic_descents(&d, &hwv, 1).unwrap(), 0);
        assert_eq!(parabolic_descents(&d, &hwv, 2).unwrap(), 1);
        assert_eq!(parabolic_descents(&d, &hwv, 3).unwrap(), 0);
    }

    #[test]
    fn full_tangent_space_has_zero_chern_numbers() {
        let gs = graded("G2", Numbering::Bourbaki, &[2]);
        let full = Distribution::full(&gs);
        for lam in full.ideal().clone() {
            let p = rank_profile(&full, &lam).unwrap();
            assert_eq!(p.ranks, [0, 0, 0]);
            assert_eq!(p.chern, 0);
        }
    }
}
