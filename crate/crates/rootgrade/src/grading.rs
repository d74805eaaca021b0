//! The `ℤˡ`-grading of a root system cut out by marking diagram nodes.
//!
//! Marking a subset `Δ₁ = {α_{r₁} < … < α_{r_l}}` of the simple roots grades
//! the root system by the multi-degree `λ(β) = (s_{r₁}, …, s_{r_l})`, the
//! marked coefficients of `β = Σ sⱼαⱼ`. Roots of degree zero span the
//! reductive (Levi) part; each nonzero realized degree `λ > 0` cuts out a
//! *bucket* `Φ_λ`, an irreducible module of the Levi part whose unique
//! highest-weight root is the bucket member `β` with `β + γ ∉ Φ` for every
//! unmarked simple `γ`.
//!
//! Node depths `mᵢ` record how far each pure column reaches (`mᵢ` = largest
//! `k` with `k·eᵢ` realized); the total depth `m` is the largest coordinate
//! sum of a realized degree, attained by the highest root. The space is
//! Hermitian symmetric exactly when `m = 1`, and a contact candidate when
//! `m = 2` with a one-dimensional top piece.

use std::collections::BTreeMap;
use std::fmt;

use num::rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::rootsys::{LieType, Numbering, Root, RootSystem};
use crate::{Error, Result};

/// A degree `(k₁, …, k_l) ∈ ℤˡ`, one slot per marked node.
///
/// The derived `Ord` is lexicographic and is only a storage order; the
/// partial order of the grading is the componentwise [`MultiDegree::leq`].
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct MultiDegree(Vec<i64>);

impl MultiDegree {
    /// Wraps a component vector.
    pub fn new(components: Vec<i64>) -> Self {
        Self(components)
    }

    /// `k·eᵢ` with `slot` 0-based.
    pub fn scaled_unit(len: usize, slot: usize, k: i64) -> Self {
        let mut v = vec![0; len];
        v[slot] = k;
        Self(v)
    }

    /// `eᵢ` with `slot` 0-based.
    pub fn unit(len: usize, slot: usize) -> Self {
        Self::scaled_unit(len, slot, 1)
    }

    /// The components.
    pub fn components(&self) -> &[i64] {
        &self.0
    }

    /// Number of slots `l`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Whether there are no slots (rank-0 marking cannot occur; this exists
    /// for completeness).
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The coordinate sum `|λ|₁` (degrees in a grading are componentwise
    /// nonnegative, so this is the 1-norm).
    pub fn total(&self) -> i64 {
        self.0.iter().sum()
    }

    /// `λ > 0`: componentwise nonnegative and not zero.
    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&k| k >= 0) && self.0.iter().any(|&k| k > 0)
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &MultiDegree) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self + other`.
    pub fn plus(&self, other: &MultiDegree) -> MultiDegree {
        MultiDegree(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self + k·other`.
    pub fn plus_scaled(&self, k: i64, other: &MultiDegree) -> MultiDegree {
        MultiDegree(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }
}

impl fmt::Display for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inner: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", inner.join(","))
    }
}

impl fmt::Debug for MultiDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// A nonempty set of marked diagram nodes, with the numbering they were
/// given in.
///
/// Nodes are stored both as entered (ascending in the chosen [`Numbering`])
/// and translated to the internal Bourbaki indices; degree slots follow the
/// entered order, so reports read in the caller's convention.
#[derive(Clone, Debug)]
pub struct Marking {
    lie_type: LieType,
    numbering: Numbering,
    /// 1-based nodes, strictly ascending in `numbering`'s order.
    display_nodes: Vec<usize>,
    /// The same nodes, 1-based internal (Bourbaki), in display order.
    internal_nodes: Vec<usize>,
}

impl Marking {
    /// Validates and normalizes a node set (deduplicated, sorted ascending
    /// in `numbering`'s order).
    pub fn new(lie_type: LieType, numbering: Numbering, nodes: &[usize]) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::EmptyMarking);
        }
        let mut display_nodes = nodes.to_vec();
        display_nodes.sort_unstable();
        display_nodes.dedup();
        let internal_nodes = display_nodes
            .iter()
            .map(|&d| numbering.to_internal(lie_type, d))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            lie_type,
            numbering,
            display_nodes,
            internal_nodes,
        })
    }

    /// Marks every node (in Bourbaki numbering).
    pub fn full(lie_type: LieType) -> Self {
        let nodes: Vec<usize> = (1..=lie_type.rank()).collect();
        Self::new(lie_type, Numbering::Bourbaki, &nodes).expect("rank ≥ 1")
    }

    /// The type the marking belongs to.
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// The numbering the nodes were given in.
    pub fn numbering(&self) -> Numbering {
        self.numbering
    }

    /// Marked nodes as entered (1-based, ascending in the marking's
    /// numbering).
    pub fn display_nodes(&self) -> &[usize] {
        &self.display_nodes
    }

    /// Marked nodes in internal Bourbaki indices (1-based), in display
    /// order — the order of degree slots.
    pub fn internal_nodes(&self) -> &[usize] {
        &self.internal_nodes
    }

    /// The Picard number `l` of the marked space (number of marked nodes).
    pub fn picard_number(&self) -> usize {
        self.display_nodes.len()
    }
}

/// Coarse classification of the marked space.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SpaceClass {
    /// Number of marked nodes `l`.
    pub picard_number: usize,
    /// Largest coordinate sum of a realized degree.
    pub total_depth: i64,
    /// Dimension of the total-degree-2 part (count of roots).
    pub dim_g2: usize,
    /// `m = 1`: the grading is `𝔤₋₁ ⊕ 𝔤₀ ⊕ 𝔤₁`.
    pub hermitian_symmetric: bool,
    /// `m = 2` with one-dimensional top piece.
    pub contact_candidate: bool,
}

/// A root system together with the grading of a marking.
///
/// Owns its [`RootSystem`]; distributions borrow from this.
pub struct GradedSystem {
    rs: RootSystem,
    marking: Marking,
    /// Degree of each interned positive root.
    degrees: Vec<MultiDegree>,
    /// Realized positive degrees and their root indices (canonical interned
    /// order within each bucket).
    buckets: BTreeMap<MultiDegree, Vec<usize>>,
    /// Interned index of each bucket's highest-weight root.
    highest: BTreeMap<MultiDegree, usize>,
    /// Pure-column depths `mᵢ`, one per marked node.
    depths: Vec<i64>,
    /// Largest coordinate sum of a realized degree.
    total_depth: i64,
    /// Interned positions of the unmarked simple roots.
    unmarked_simple_positions: Vec<usize>,
}

impl RootSystem {
    /// Grades the system by a marking (which must be for the same type).
    pub fn grade(&self, marking: &Marking) -> Result<GradedSystem> {
        if marking.lie_type() != self.lie_type() {
            return Err(Error::MismatchedSystems(format!(
                "marking is for {}, system is {}",
                marking.lie_type(),
                self.lie_type()
            )));
        }
        Ok(GradedSystem::build(self.clone(), marking.clone()))
    }
}

impl GradedSystem {
    fn build(rs: RootSystem, marking: Marking) -> GradedSystem {
        let degrees: Vec<MultiDegree> = rs
            .positive_roots()
            .iter()
            .map(|r| degree_of_coeffs(r.coeffs(), &marking))
            .collect();

        let mut buckets: BTreeMap<MultiDegree, Vec<usize>> = BTreeMap::new();
        for (i, d) in degrees.iter().enumerate() {
            if d.is_positive() {
                buckets.entry(d.clone()).or_default().push(i);
            }
        }

        let l = marking.picard_number();
        let depths: Vec<i64> = (0..l)
            .map(|slot| {
                let mut k = 1;
                while buckets.contains_key(&MultiDegree::scaled_unit(l, slot, k + 1)) {
                    k += 1;
                }
                assert!(
                    buckets.contains_key(&MultiDegree::scaled_unit(l, slot, 1)),
                    "marked simple root must realize its unit degree"
                );
                k
            })
            .collect();
        let total_depth = buckets.keys().map(MultiDegree::total).max().unwrap_or(0);
        assert!(total_depth >= 1, "a marking always realizes degree 1");

        let marked: Vec<bool> = {
            let mut m = vec![false; rs.rank()];
            for &node in marking.internal_nodes() {
                m[node - 1] = true;
            }
            m
        };
        let unmarked_simple_positions: Vec<usize> = (1..=rs.rank())
            .filter(|&node| !marked[node - 1])
            .map(|node| {
                rs.position(rs.simple_root(node))
                    .expect("simple roots are interned")
            })
            .collect();

        let mut highest: BTreeMap<MultiDegree, usize> = BTreeMap::new();
        for (deg, members) in &buckets {
            let mut hw: Vec<usize> = members
                .iter()
                .copied()
                .filter(|&i| {
                    unmarked_simple_positions
                        .iter()
                        .all(|&j| rs.sum_index(i, j).is_none())
                })
                .collect();
            assert_eq!(
                hw.len(),
                1,
                "bucket {deg} must have a unique highest-weight root (found {})",
                hw.len()
            );
            highest.insert(deg.clone(), hw.pop().unwrap());
        }

        GradedSystem {
            rs,
            marking,
            degrees,
            buckets,
            highest,
            depths,
            total_depth,
            unmarked_simple_positions,
        }
    }

    /// The underlying root system.
    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// The marking.
    pub fn marking(&self) -> &Marking {
        &self.marking
    }

    /// Number of degree slots `l`.
    pub fn picard_number(&self) -> usize {
        self.marking.picard_number()
    }

    /// The degree of a coefficient vector (its marked coefficients, in slot
    /// order). No membership requirement.
    pub fn degree_of(&self, r: &Root) -> MultiDegree {
        degree_of_coeffs(r.coeffs(), &self.marking)
    }

    /// The degree of the `i`-th interned positive root.
    pub fn degree_of_index(&self, i: usize) -> &MultiDegree {
        &self.degrees[i]
    }

    /// All realized positive degrees with their buckets.
    pub fn buckets(&self) -> &BTreeMap<MultiDegree, Vec<usize>> {
        &self.buckets
    }

    /// Realized positive degrees in storage order.
    pub fn realized_degrees(&self) -> impl Iterator<Item = &MultiDegree> {
        self.buckets.keys()
    }

    /// Whether `λ` is a realized positive degree.
    pub fn is_realized(&self, lam: &MultiDegree) -> bool {
        self.buckets.contains_key(lam)
    }

    /// Interned root indices of the bucket `Φ_λ` (empty slice if `λ` is not
    /// realized).
    pub fn bucket(&self, lam: &MultiDegree) -> &[usize] {
        self.buckets.get(lam).map(Vec::as_slice).unwrap_or(&[])
    }

    /// Interned indices of all roots whose degree lies in `degrees`.
    pub fn roots_with_degrees<'a, I>(&self, degrees: I) -> Vec<usize>
    where
        I: IntoIterator<Item = &'a MultiDegree>,
    {
        let mut out: Vec<usize> = degrees
            .into_iter()
            .flat_map(|d| self.bucket(d).iter().copied())
            .collect();
        out.sort_unstable();
        out
    }

    /// Pure-column depths `mᵢ`: the largest `k` with `k·eᵢ` realized.
    pub fn depths(&self) -> &[i64] {
        &self.depths
    }

    /// The total depth `m`: largest coordinate sum of a realized degree
    /// (attained by the highest root).
    pub fn total_depth(&self) -> i64 {
        self.total_depth
    }

    /// Interned positions of the unmarked simple roots (the Levi part's
    /// simple system).
    pub fn unmarked_simple_positions(&self) -> &[usize] {
        &self.unmarked_simple_positions
    }

    /// Coarse classification of the marked space.
    pub fn classify(&self) -> SpaceClass {
        let dim_g2: usize = self
            .buckets
            .iter()
            .filter(|(d, _)| d.total() == 2)
            .map(|(_, members)| members.len())
            .sum();
        SpaceClass {
            picard_number: self.picard_number(),
            total_depth: self.total_depth,
            dim_g2,
            hermitian_symmetric: self.total_depth == 1,
            contact_candidate: self.total_depth == 2 && dim_g2 == 1,
        }
    }

    /// The unique root of the bucket `Φ_λ` that stays extremal under the
    /// Levi part: `β + γ ∉ Φ` for every unmarked simple `γ`.
    pub fn highest_weight_root(&self, lam: &MultiDegree) -> Result<&Root> {
        self.highest_weight_index(lam)
            .map(|i| &self.rs.positive_roots()[i])
    }

    /// Interned index of the bucket's highest-weight root.
    pub fn highest_weight_index(&self, lam: &MultiDegree) -> Result<usize> {
        if !lam.is_positive() {
            return Err(Error::NonpositiveDegree(lam.to_string()));
        }
        self.highest
            .get(lam)
            .copied()
            .ok_or_else(|| Error::EmptyBucket(lam.to_string()))
    }

    /// Degree of the line bundle `𝓛ᵢ` (dual to the `i`-th marked node, `slot`
    /// 0-based) on the minimal rational curve tangent to the root `α`:
    /// `deg 𝓛ᵢ|_{C_α} = kᵢ·d_{rᵢ}/d_α = ω_{rᵢ}(H_α)`.
    ///
    /// Both expressions are computed and compared before returning. The
    /// result is a nonnegative rational, integral for every root `α ∈ Φ⁺`.
    pub fn curve_degree(&self, alpha: &Root, slot: usize) -> Result<Ratio<i64>> {
        if slot >= self.picard_number() {
            return Err(Error::NodeOutOfRange {
                node: slot + 1,
                rank: self.picard_number(),
            });
        }
        if !self.rs.contains_positive(alpha) {
            return Err(Error::NotARoot(alpha.plain_label()));
        }
        let node = self.marking.internal_nodes()[slot];
        let k = alpha.coeffs()[node - 1];
        let d_node = self.rs.symmetrizer()[node - 1];
        let d_alpha = self.rs.inner(alpha, alpha);
        let by_lengths = Ratio::new(k * 2 * d_node, d_alpha);
        let by_coroot = self.rs.coroot_expansion(alpha)?[node - 1];
        assert_eq!(
            by_lengths,
            by_coroot,
            "curve degree mismatch between length and coroot formulas for {}",
            alpha.plain_label()
        );
        Ok(by_lengths)
    }

    /// Label of an interned root in the marking's numbering.
    pub fn label_of_index(&self, i: usize) -> String {
        self.rs
            .label(&self.rs.positive_roots()[i], self.marking.numbering())
    }

    /// Labels of interned roots, sorted canonically for display (height,
    /// then label).
    pub fn sorted_labels(&self, indices: &[usize]) -> Vec<String> {
        let mut idx = indices.to_vec();
        self.rs.sort_for_display(&mut idx, self.marking.numbering());
        idx.into_iter().map(|i| self.label_of_index(i)).collect()
    }
}

impl fmt::Debug for GradedSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "GradedSystem({}, marked {:?}, {} buckets)",
            self.rs.lie_type(),
            self.marking.display_nodes(),
            self.buckets.len()
        )
    }
}

fn degree_of_coeffs(coeffs: &[i64], marking: &Marking) -> MultiDegree {
    MultiDegree::new(
        marking
            .internal_nodes()
            .iter()
            .map(|&node| coeffs[node - 1])
            .collect(),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graded(name: &str, numbering: Numbering, nodes: &[usize]) -> GradedSystem {
        let rs = RootSystem::build(LieType::parse(name).unwrap());
        let marking = Marking::new(rs.lie_type(), numbering, nodes).unwrap();
        rs.grade(&marking).unwrap()
    }

    #[test]
    fn f4_marking_1_4_in_short_end_numbering() {
        // Marking the two end nodes of F₄, entered in the short-end
        // numbering: slots read (a₄, a₁) of the Bourbaki coefficients.
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        assert_eq!(gs.marking().internal_nodes(), &[4, 1]);
        assert_eq!(gs.depths(), &[2, 1]);
        assert_eq!(gs.total_depth(), 4);
        let degs: Vec<String> = gs.realized_degrees().map(|d| d.to_string()).collect();
        assert_eq!(degs, ["(0,1)", "(1,0)", "(1,1)", "(2,0)", "(2,1)", "(2,2)"]);
        // 4 of the 24 positive roots lie in the Levi part (the B₂ spanned by
        // the unmarked middle nodes); the rest carry positive degree.
        let total: usize = gs.buckets().values().map(Vec::len).sum();
        assert_eq!(total, 20);
    }

    #[test]
    fn f4_case_highest_weight_roots() {
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        let eta1 = gs
            .highest_weight_root(&MultiDegree::new(vec![1, 0]))
            .unwrap();
        let eta2 = gs
            .highest_weight_root(&MultiDegree::new(vec![2, 0]))
            .unwrap();
        let rs = gs.root_system();
        assert_eq!(rs.label(eta1, Numbering::Paper), "1210");
        assert_eq!(rs.label(eta2, Numbering::Paper), "2210");
    }

    #[test]
    fn unrealized_degrees_are_empty_buckets() {
        let gs = graded("B3", Numbering::Bourbaki, &[2, 3]);
        // The (0,·) column stops at 1: no root has a₂ = 0, a₃ = 2.
        assert_eq!(gs.depths(), &[1, 1]);
        let missing = MultiDegree::new(vec![0, 2]);
        assert!(!gs.is_realized(&missing));
        assert!(matches!(
            gs.highest_weight_root(&missing),
            Err(Error::EmptyBucket(_))
        ));
        assert!(matches!(
            gs.highest_weight_root(&MultiDegree::new(vec![0, 0])),
            Err(Error::NonpositiveDegree(_))
        ));
    }

    #[test]
    fn hermitian_and_contact_classification() {
        // Projective space: A₃ marked at 1.
        let p3 = graded("A3", Numbering::Bourbaki, &[1]);
        let c = p3.classify();
        assert!(c.hermitian_symmetric);
        assert_eq!(c.total_depth, 1);
        assert_eq!(c.picard_number, 1);

        // The adjoint variety of G₂: marked at the long node.
        let adj = graded("G2", Numbering::Bourbaki, &[2]);
        let c = adj.classify();
        assert!(!c.hermitian_symmetric);
        assert!(c.contact_candidate);
        assert_eq!(c.dim_g2, 1);

        // C₃ marked at α₃ is Lagrangian-Grassmannian: Hermitian.
        let lg = graded("C3", Numbering::Bourbaki, &[3]);
        assert!(lg.classify().hermitian_symmetric);
    }

    #[test]
    fn curve_degrees_are_kronecker_on_marked_simples() {
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        let rs = gs.root_system();
        for (i, &node) in gs.marking().internal_nodes().iter().enumerate() {
            for (j, _) in gs.marking().internal_nodes().iter().enumerate() {
                let deg = gs.curve_degree(rs.simple_root(node), j).unwrap();
                let expect = if i == j { 1 } else { 0 };
                assert_eq!(deg, Ratio::from(expect));
            }
        }
    }

    #[test]
    fn curve_degrees_are_integral_on_all_positive_roots() {
        for (name, nodes) in [("F4", vec![1, 2]), ("G2", vec![1]), ("C3", vec![1, 3])] {
            let gs = graded(name, Numbering::Bourbaki, &nodes);
            let roots = gs.root_system().positive_roots().to_vec();
            for alpha in &roots {
                for slot in 0..gs.picard_number() {
                    let deg = gs.curve_degree(alpha, slot).unwrap();
                    assert!(deg.is_integer(), "{name} {alpha:?} slot {slot}");
                    assert!(*deg.numer() >= 0);
                }
            }
        }
    }

    #[test]
    fn marking_normalization() {
        let lt = LieType::parse("F4").unwrap();
        let m = Marking::new(lt, Numbering::Paper, &[4, 1, 4]).unwrap();
        assert_eq!(m.display_nodes(), &[1, 4]);
        assert_eq!(m.internal_nodes(), &[4, 1]);
        assert!(Marking::new(lt, Numbering::Paper, &[]).is_err());
        assert!(Marking::new(lt, Numbering::Paper, &[5]).is_err());
    }

    #[test]
    fn degree_slots_follow_entry_order_not_bourbaki_order() {
        // In the short-end numbering of F₄, entered nodes {1,4} are internal
        // {4,1}: the first slot reads the Bourbaki a₄ coefficient.
        let gs = graded("F4", Numbering::Paper, &[1, 4]);
        let theta = gs.root_system().highest_root().clone();
        assert_eq!(gs.degree_of(&theta).components(), &[2, 2]);
        let b1000 = gs.root_system().parse_root("1000", Numbering::Bourbaki).unwrap();
        assert_eq!(gs.degree_of(&b1000).components(), &[0, 1]);
    }
}
