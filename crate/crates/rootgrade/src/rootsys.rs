//! Root systems of the simple types A–G, rank ≤ 8, by exact integer
//! arithmetic.
//!
//! A system is built from its Cartan data alone: a vector of squared-length
//! halves `d_i ∈ {1,2,3}` (short roots normalized to squared length 2) and the
//! Dynkin diagram's edge list determine the invariant bilinear form
//!
//! ```text
//! (αᵢ,αᵢ) = 2dᵢ,   (αᵢ,αⱼ) = −max(dᵢ,dⱼ) on an edge,   0 otherwise,
//! ```
//!
//! and the Cartan matrix `Cᵢⱼ = 2(αᵢ,αⱼ)/(αᵢ,αᵢ)`. The positive roots are
//! then generated by string closure: walking up from the simple roots in
//! height order, `β + αᵢ` is a root exactly when `q = p − β(H_{αᵢ}) > 0`,
//! where `p` is the length of the descending string `β, β−αᵢ, …`. Every
//! pairing `β(H_{αᵢ})` is a plain integer dot product against a Cartan row,
//! so the whole construction stays in `i64`.
//!
//! Simple roots are indexed in the Bourbaki order internally; [`Numbering`]
//! relabels nodes on input/output, which only matters for F₄ (see its docs).
//! Positive roots are interned in a canonical order — by height, then
//! lexicographically by coefficients — and pairwise sums are precomputed, so
//! downstream bracket computations never hash.

use std::collections::HashMap;
use std::fmt;

use num::rational::Ratio;

use crate::{Error, Result};

/// The seven families of simple root systems.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    /// The family letter.
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated family/rank pair, e.g. `F4` or `A3`.
///
/// Supported ranks: `A₁..A₈`, `B₂..B₈`, `C₂..C₈`, `D₄..D₈`, `E₆..E₈`, `F₄`,
/// `G₂`. Low-rank coincidences are rejected in favor of their canonical
/// names (`D₃` is `A₃`, `B₁`/`C₁` are `A₁`, `D₂` is reducible).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LieType {
    family: Family,
    rank: usize,
}

impl LieType {
    /// Validates a family/rank pair.
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let fail = |reason: &str| {
            Err(Error::InvalidRank {
                family: family.letter(),
                rank,
                reason: reason.to_string(),
            })
        };
        if rank > 8 {
            return fail("supported ranks go up to 8");
        }
        match family {
            Family::A if rank >= 1 => Ok(Self { family, rank }),
            Family::A => fail("rank must be at least 1"),
            Family::B | Family::C if rank >= 2 => Ok(Self { family, rank }),
            Family::B | Family::C => fail("rank must be at least 2 (rank 1 is A1)"),
            Family::D if rank >= 4 => Ok(Self { family, rank }),
            Family::D if rank == 3 => fail("D3 is the same root system as A3; build A3 instead"),
            Family::D => fail("rank must be at least 4"),
            Family::E if (6..=8).contains(&rank) => Ok(Self { family, rank }),
            Family::E => fail("rank must be 6, 7, or 8"),
            Family::F if rank == 4 => Ok(Self { family, rank }),
            Family::F => fail("rank must be 4"),
            Family::G if rank == 2 => Ok(Self { family, rank }),
            Family::G => fail("rank must be 2"),
        }
    }

    /// Parses a name like `"F4"` or `"a3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().map(|c| c.to_ascii_uppercase()) {
            Some('A') => Family::A,
            Some('B') => Family::B,
            Some('C') => Family::C,
            Some('D') => Family::D,
            Some('E') => Family::E,
            Some('F') => Family::F,
            Some('G') => Family::G,
            _ => return Err(Error::ParseType(s.to_string())),
        };
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::ParseType(s.to_string()))?;
        Self::new(family, rank)
    }

    /// The family.
    pub fn family(self) -> Family {
        self.family
    }

    /// The rank (number of simple roots).
    pub fn rank(self) -> usize {
        self.rank
    }

    /// Number of positive roots, from the classical tables.
    pub fn positive_root_count(self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1) / 2,
            Family::B | Family::C => n * n,
            Family::D => n * (n - 1),
            Family::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Family::F => 24,
            Family::G => 6,
        }
    }

    /// Whether all roots share one length.
    pub fn is_simply_laced(self) -> bool {
        matches!(self.family, Family::A | Family::D | Family::E)
    }

    /// Every supported type of rank at most `max_rank`, in a fixed order.
    pub fn all_up_to_rank(max_rank: usize) -> Vec<LieType> {
        let mut out = Vec::new();
        for family in [
            Family::A,
            Family::B,
            Family::C,
            Family::D,
            Family::E,
            Family::F,
            Family::G,
        ] {
            for rank in 1..=max_rank.min(8) {
                if let Ok(lt) = LieType::new(family, rank) {
                    out.push(lt);
                }
            }
        }
        out
    }

    /// Squared-length halves `dᵢ` and Dynkin edges (0-based, Bourbaki order).
    fn diagram(self) -> (Vec<i64>, Vec<(usize, usize)>) {
        let n = self.rank;
        let chain = |n: usize| (0..n - 1).map(|i| (i, i + 1)).collect::<Vec<_>>();
        match self.family {
            Family::A => (vec![1; n], chain(n)),
            Family::B => {
                // Long chain ending in one short node.
                let mut d = vec![2; n];
                d[n - 1] = 1;
                (d, chain(n))
            }
            Family::C => {
                // Short chain ending in one long node.
                let mut d = vec![1; n];
                d[n - 1] = 2;
                (d, chain(n))
            }
            Family::D => {
                let mut edges = chain(n - 1);
                edges.push((n - 3, n - 1));
                (vec![1; n], edges)
            }
            Family::E => {
                // Chain 1−3−4−5−…−n with node 2 hanging off node 4.
                let mut edges = vec![(0, 2)];
                edges.extend((2..n - 1).map(|i| (i, i + 1)));
                edges.push((1, 3));
                (vec![1; n], edges)
            }
            Family::F => (vec![2, 2, 1, 1], chain(4)),
            Family::G => (vec![1, 3], vec![(0, 1)]),
        }
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.rank)
    }
}

/// Node labeling conventions for input and output.
///
/// Internally everything is stored in the Bourbaki order. This tag relabels
/// nodes when parsing markings and root strings and when printing them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Numbering {
    /// The Bourbaki tables' order (`F₄: 2-2-1-1` lengths, long nodes first;
    /// `G₂: α₁` short).
    Bourbaki,
    /// The order used in Tits's tables of R-spaces: identical to Bourbaki
    /// except for F₄, whose chain is numbered from the short end
    /// (node `i ↦ 5−i`).
    Paper,
}

impl Numbering {
    /// Parses `"bourbaki"` or `"paper"` (case-insensitive).
    pub fn parse(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "bourbaki" => Ok(Numbering::Bourbaki),
            "paper" => Ok(Numbering::Paper),
            _ => Err(Error::ParseNumbering(s.to_string())),
        }
    }

    /// Lowercase tag name.
    pub fn name(self) -> &'static str {
        match self {
            Numbering::Bourbaki => "bourbaki",
            Numbering::Paper => "paper",
        }
    }

    /// `permutation(lt)[display] = internal`, both 0-based.
    ///
    /// This permutation is an involution for every supported type, so it also
    /// maps internal indices to display indices.
    pub fn permutation(self, lt: LieType) -> Vec<usize> {
        let n = lt.rank();
        match (self, lt.family()) {
            (Numbering::Paper, Family::F) => (0..n).rev().collect(),
            _ => (0..n).collect(),
        }
    }

    /// Internal (Bourbaki) 1-based node for a display 1-based node.
    pub fn to_internal(self, lt: LieType, display_node: usize) -> Result<usize> {
        let n = lt.rank();
        if display_node == 0 || display_node > n {
            return Err(Error::NodeOutOfRange {
                node: display_node,
                rank: n,
            });
        }
        Ok(self.permutation(lt)[display_node - 1] + 1)
    }

    /// Display 1-based node for an internal (Bourbaki) 1-based node.
    pub fn to_display(self, lt: LieType, internal_node: usize) -> usize {
        // The permutation is an involution.
        self.permutation(lt)[internal_node - 1] + 1
    }
}

impl fmt::Display for Numbering {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A root, stored as its integer coefficient vector in the simple-root basis
/// (Bourbaki order).
///
/// The derived ordering is lexicographic on coefficients; it is a storage
/// order, not the root poset ordering (use [`Root::leq`] for that).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i64>,
}

impl Root {
    /// Wraps a coefficient vector.
    pub fn new(coeffs: Vec<i64>) -> Self {
        Self { coeffs }
    }

    /// The coefficients in the simple-root basis.
    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    /// Coefficient sum.
    pub fn height(&self) -> i64 {
        self.coeffs.iter().sum()
    }

    /// Whether this is the zero vector.
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    /// The negative.
    pub fn neg(&self) -> Root {
        Root::new(self.coeffs.iter().map(|&c| -c).collect())
    }

    /// Componentwise `self ≤ other`.
    pub fn leq(&self, other: &Root) -> bool {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .all(|(a, b)| a <= b)
    }

    /// Coefficient-wise sum. The result need not be a root; check with
    /// [`RootSystem::contains`].
    pub fn plus(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }

    /// Coefficient-wise difference. The result need not be a root; check
    /// with [`RootSystem::contains`].
    pub fn minus(&self, other: &Root) -> Root {
        Root::new(
            self.coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }

    /// Compact label in the internal (Bourbaki) node order; see
    /// [`RootSystem::label`] for relabeled output.
    pub fn plain_label(&self) -> String {
        label_coeffs(&self.coeffs)
    }
}

impl fmt::Debug for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Root({})", self.plain_label())
    }
}

/// Digit string if every coefficient is a single digit, else comma-separated.
fn label_coeffs(coeffs: &[i64]) -> String {
    if coeffs.iter().all(|&c| (0..=9).contains(&c)) {
        coeffs.iter().map(|c| c.to_string()).collect()
    } else {
        coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// A simple root system with interned positive roots.
///
/// Positive roots are sorted by height, then lexicographically by
/// coefficients; this is the canonical order used everywhere roots are
/// listed. Pairwise sums of positive roots are precomputed.
#[derive(Clone)]
pub struct RootSystem {
    lie_type: LieType,
    /// `cartan[i][j] = 2(αᵢ,αⱼ)/(αᵢ,αᵢ) = αⱼ(H_{αᵢ})`.
    cartan: Vec<Vec<i64>>,
    /// `bilinear[i][j] = (αᵢ,αⱼ)`, short roots of squared length 2.
    bilinear: Vec<Vec<i64>>,
    /// `dᵢ = (αᵢ,αᵢ)/2 ∈ {1,2,3}`; `dᵢ·cartan[i][j]` is symmetric.
    symmetrizer: Vec<i64>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    /// `sums[i][j]` = interned index of `positive[i] + positive[j]` if that
    /// sum is again a root.
    sums: Vec<Vec<Option<u16>>>,
    /// Index of the highest root.
    theta: usize,
}

impl RootSystem {
    /// Builds the system by string closure from the Cartan data.
    pub fn build(lie_type: LieType) -> RootSystem {
        let n = lie_type.rank();
        let (symmetrizer, edges) = lie_type.diagram();

        let mut bilinear = vec![vec![0i64; n]; n];
        for i in 0..n {
            bilinear[i][i] = 2 * symmetrizer[i];
        }
        for &(i, j) in &edges {
            let v = -symmetrizer[i].max(symmetrizer[j]);
            bilinear[i][j] = v;
            bilinear[j][i] = v;
        }
        let cartan: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        debug_assert_eq!(bilinear[i][j] % symmetrizer[i], 0);
                        bilinear[i][j] / symmetrizer[i]
                    })
                    .collect()
            })
            .collect();

        // String closure, one height level at a time. When a root β of height
        // h is examined, every root of height < h is already present, so the
        // descending string through αᵢ can be read off completely.
        let mut present: HashMap<Vec<i64>, ()> = HashMap::new();
        let mut level: Vec<Vec<i64>> = (0..n)
            .map(|i| {
                let mut c = vec![0i64; n];
                c[i] = 1;
                c
            })
            .collect();
        for c in &level {
            present.insert(c.clone(), ());
        }
        let mut all: Vec<Vec<i64>> = level.clone();
        while !level.is_empty() {
            let mut next: Vec<Vec<i64>> = Vec::new();
            for beta in &level {
                for i in 0..n {
                    let mut p = 0i64;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if present.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    let pairing: i64 = (0..n).map(|j| cartan[i][j] * beta[j]).sum();
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if present.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            all.extend(next.iter().cloned());
            level = next;
        }

        all.sort_by_key(|c| (c.iter().sum::<i64>(), c.clone()));
        assert_eq!(
            all.len(),
            lie_type.positive_root_count(),
            "string closure produced the wrong number of positive roots for {lie_type}"
        );

        let positive: Vec<Root> = all.into_iter().map(Root::new).collect();
        let index: HashMap<Vec<i64>, usize> = positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        let m = positive.len();
        let theta = m - 1;
        assert!(
            m == 1 || positive[theta].height() > positive[theta - 1].height(),
            "the highest root of {lie_type} is not unique"
        );
        assert!(
            positive.iter().all(|r| r.leq(&positive[theta])),
            "the highest root of {lie_type} does not dominate all positive roots"
        );

        let mut sums = vec![vec![None; m]; m];
        for i in 0..m {
            for j in i..m {
                let s = positive[i].plus(&positive[j]);
                if let Some(&k) = index.get(&s.coeffs) {
                    sums[i][j] = Some(k as u16);
                    sums[j][i] = Some(k as u16);
                }
            }
        }

        RootSystem {
            lie_type,
            cartan,
            bilinear,
            symmetrizer,
            positive,
            index,
            sums,
            theta,
        }
    }

    /// The type this system was built for.
    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    /// Number of simple roots.
    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// The Cartan matrix, `cartan[i][j] = 2(αᵢ,αⱼ)/(αᵢ,αᵢ)` (internal order).
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// The symmetrizing weights `dᵢ = (αᵢ,αᵢ)/2`.
    ///
    /// In the short-root-squared-length-2 normalization these are the
    /// integers 1, 2, or 3; `dᵢ·Cᵢⱼ` is the symmetric bilinear form.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    /// All positive roots in canonical order (height, then coefficients).
    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    /// The `node`-th simple root (1-based, internal order).
    pub fn simple_root(&self, node: usize) -> &Root {
        assert!(
            node >= 1 && node <= self.rank(),
            "simple root index {node} out of range for {}",
            self.lie_type
        );
        // The height-1 level sorts first, lexicographically by coefficients,
        // which reverses node order within the level.
        &self.positive[self.rank() - node]
    }

    /// The highest root.
    pub fn highest_root(&self) -> &Root {
        &self.positive[self.theta]
    }

    /// Interned index of a positive root.
    pub fn position(&self, r: &Root) -> Option<usize> {
        self.index.get(&r.coeffs).copied()
    }

    /// Membership in `Φ = Φ⁺ ∪ −Φ⁺`.
    pub fn contains(&self, r: &Root) -> bool {
        if r.coeffs.len() != self.rank() {
            return false;
        }
        if r.coeffs.iter().all(|&c| c >= 0) {
            self.index.contains_key(&r.coeffs)
        } else if r.coeffs.iter().all(|&c| c <= 0) {
            self.index.contains_key(&r.neg().coeffs)
        } else {
            false
        }
    }

    /// Membership in `Φ⁺`.
    pub fn contains_positive(&self, r: &Root) -> bool {
        self.index.contains_key(&r.coeffs)
    }

    /// Interned index of `positive[i] + positive[j]`, if that sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sums[i][j].map(|k| k as usize)
    }

    /// The invariant form `(a, b)`, short roots of squared length 2.
    pub fn inner(&self, a: &Root, b: &Root) -> i64 {
        let n = self.rank();
        let mut acc = 0;
        for i in 0..n {
            if a.coeffs[i] == 0 {
                continue;
            }
            for j in 0..n {
                acc += a.coeffs[i] * self.bilinear[i][j] * b.coeffs[j];
            }
        }
        acc
    }

    fn require_root(&self, r: &Root) -> Result<()> {
        if r.coeffs.len() != self.rank() {
            return Err(Error::WrongLength {
                got: r.coeffs.len(),
                expected: self.rank(),
            });
        }
        if r.is_zero() {
            return Err(Error::ZeroRoot);
        }
        if !self.contains(r) {
            return Err(Error::NotARoot(r.plain_label()));
        }
        Ok(())
    }

    /// The integer `β(H_α) = 2(β,α)/(α,α)`.
    ///
    /// `α` must be a root; `β` may be any root or zero.
    pub fn cartan_pairing(&self, beta: &Root, alpha: &Root) -> Result<i64> {
        self.require_root(alpha)?;
        if beta.coeffs.len() != self.rank() {
            return Err(Error::WrongLength {
                got: beta.coeffs.len(),
                expected: self.rank(),
            });
        }
        if !beta.is_zero() {
            self.require_root(beta)?;
        }
        let num = 2 * self.inner(beta, alpha);
        let den = self.inner(alpha, alpha);
        debug_assert_eq!(num % den, 0, "Cartan pairing is not an integer");
        Ok(num / den)
    }

    /// The `α`-string through `β`: the maximal `(p, q)` with
    /// `β − pα, …, β + qα` all roots.
    ///
    /// Requires `α, β ∈ Φ` and `β ≠ ±α`. Checks `p − q = β(H_α)` and
    /// `p + q ≤ 3` before returning.
    pub fn root_string(&self, beta: &Root, alpha: &Root) -> Result<(i64, i64)> {
        self.require_root(alpha)?;
        self.require_root(beta)?;
        if beta == alpha || *beta == alpha.neg() {
            return Err(Error::DegenerateString);
        }
        let mut p = 0i64;
        let mut walk = beta.minus(alpha);
        while self.contains(&walk) {
            p += 1;
            walk = walk.minus(alpha);
        }
        let mut q = 0i64;
        let mut walk = beta.plus(alpha);
        while self.contains(&walk) {
            q += 1;
            walk = walk.plus(alpha);
        }
        let pairing = self.cartan_pairing(beta, alpha)?;
        assert_eq!(
            p - q,
            pairing,
            "root string through {} along {} violates p − q = β(H_α)",
            beta.plain_label(),
            alpha.plain_label()
        );
        assert!(
            p + q <= 3,
            "root string longer than 4 in {}",
            self.lie_type
        );
        Ok((p, q))
    }

    /// Expansion of the coroot: `H_α = Σⱼ tⱼ H_{αⱼ}` with
    /// `tⱼ = sⱼ·dⱼ/d_α` for `α = Σⱼ sⱼαⱼ`.
    ///
    /// The entries are rationals by construction but integral for every root
    /// (the coroot lattice is spanned by the simple coroots); the sweep
    /// checks assert integrality.
    pub fn coroot_expansion(&self, alpha: &Root) -> Result<Vec<Ratio<i64>>> {
        self.require_root(alpha)?;
        let d_alpha = self.inner(alpha, alpha);
        Ok((0..self.rank())
            .map(|j| Ratio::new(alpha.coeffs[j] * 2 * self.symmetrizer[j], d_alpha))
            .collect())
    }

    /// Compact label with coefficients permuted to `numbering`'s node order.
    pub fn label(&self, r: &Root, numbering: Numbering) -> String {
        let perm = numbering.permutation(self.lie_type);
        let display: Vec<i64> = perm.iter().map(|&int| r.coeffs[int]).collect();
        label_coeffs(&display)
    }

    /// Parses a label (digit string or comma-separated) given in
    /// `numbering`'s node order, and validates membership in `Φ`.
    pub fn parse_root(&self, s: &str, numbering: Numbering) -> Result<Root> {
        let s = s.trim();
        let display: Vec<i64> = if s.contains(',') {
            s.split(',')
                .map(|t| t.trim().parse::<i64>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParseRoot(s.to_string()))?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as i64)
                        .ok_or_else(|| Error::ParseRoot(s.to_string()))
                })
                .collect::<Result<_>>()?
        };
        if display.len() != self.rank() {
            return Err(Error::WrongLength {
                got: display.len(),
                expected: self.rank(),
            });
        }
        let perm = numbering.permutation(self.lie_type);
        let mut coeffs = vec![0i64; self.rank()];
        for (disp, &int) in perm.iter().enumerate() {
            coeffs[int] = display[disp];
        }
        let root = Root::new(coeffs);
        self.require_root(&root)?;
        Ok(root)
    }

    /// Sorts interned root indices canonically for display: by height, then
    /// lexicographically by the label in `numbering`'s node order.
    ///
    /// This is the order used for all serialized root lists.
    pub fn sort_for_display(&self, indices: &mut [usize], numbering: Numbering) {
        indices.sort_by_cached_key(|&i| {
            (self.positive[i].height(), self.label(&self.positive[i], numbering))
        });
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RootSystem({}, {} positive roots)",
            self.lie_type,
            self.positive.len()
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rs(name: &str) -> RootSystem {
        RootSystem::build(LieType::parse(name).unwrap())
    }

    #[test]
    fn positive_root_counts_match_the_classical_tables() {
        for lt in LieType::all_up_to_rank(8) {
            let rs = RootSystem::build(lt);
            assert_eq!(rs.positive_roots().len(), lt.positive_root_count(), "{lt}");
        }
    }

    #[test]
    fn rejected_ranks() {
        assert!(LieType::parse("D3").is_err());
        assert!(LieType::parse("B1").is_err());
        assert!(LieType::parse("E5").is_err());
        assert!(LieType::parse("A9").is_err());
        assert!(LieType::parse("F5").is_err());
        assert!(LieType::parse("G3").is_err());
        assert!(LieType::parse("X4").is_err());
        let err = LieType::parse("D3").unwrap_err().to_string();
        assert!(err.contains("A3"), "D3 rejection should point at A3: {err}");
    }

    #[test]
    fn highest_roots() {
        assert_eq!(rs("A3").highest_root().coeffs(), &[1, 1, 1]);
        assert_eq!(rs("G2").highest_root().coeffs(), &[3, 2]);
        assert_eq!(rs("F4").highest_root().coeffs(), &[2, 3, 4, 2]);
        assert_eq!(rs("E8").highest_root().height(), 29);
    }

    #[test]
    fn g2_long_string_through_the_short_simple_root() {
        // In G₂ the string of α₂ (long) through α₁ (short) has q = 3:
        // α₂, α₂+α₁, α₂+2α₁, α₂+3α₁ are all roots.
        let rs = rs("G2");
        let a1 = rs.simple_root(1).clone();
        let a2 = rs.simple_root(2).clone();
        assert_eq!(rs.root_string(&a2, &a1).unwrap(), (0, 3));
        assert_eq!(rs.root_string(&a1, &a2).unwrap(), (0, 1));
        assert_eq!(rs.cartan_pairing(&a2, &a1).unwrap(), -3);
        assert_eq!(rs.cartan_pairing(&a1, &a2).unwrap(), -1);
    }

    #[test]
    fn string_endpoints_are_rejected() {
        let rs = rs("A2");
        let a1 = rs.simple_root(1).clone();
        assert!(matches!(
            rs.root_string(&a1, &a1),
            Err(Error::DegenerateString)
        ));
        assert!(matches!(
            rs.root_string(&a1.neg(), &a1),
            Err(Error::DegenerateString)
        ));
    }

    #[test]
    fn string_law_exhaustive_on_the_non_simply_laced_types() {
        for name in ["B3", "C3", "F4", "G2"] {
            let rs = rs(name);
            let pos = rs.positive_roots().to_vec();
            for a in &pos {
                for b in &pos {
                    if a == b {
                        continue;
                    }
                    let (p, q) = rs.root_string(b, a).unwrap();
                    assert_eq!(p - q, rs.cartan_pairing(b, a).unwrap());
                    assert!(p + q <= 3);
                }
            }
        }
    }

    /// Independent oracle for coroot expansions: solve `Cᵀ·t = w` over the
    /// rationals by Gaussian elimination, where `wᵢ = α(H_{αᵢ})·(αᵢ,αᵢ)/(α,α)`
    /// — i.e. recover `t` from `ωⱼ(H_α) = tⱼ` via the defining property
    /// `αⱼ(H_α) = Σᵢ tᵢ·Cᵢⱼ`.
    fn coroot_by_elimination(rs: &RootSystem, alpha: &Root) -> Vec<Ratio<i64>> {
        let n = rs.rank();
        // Row j of the linear system: Σᵢ tᵢ C[i][j] = 2(αⱼ,α)/(α,α).
        let d_alpha = rs.inner(alpha, alpha);
        let mut mat: Vec<Vec<Ratio<i64>>> = (0..n)
            .map(|j| {
                let mut row: Vec<Ratio<i64>> =
                    (0..n).map(|i| Ratio::from(rs.cartan_matrix()[i][j])).collect();
                let rhs = Ratio::new(2 * rs.inner(rs.simple_root(j + 1), alpha), d_alpha);
                row.push(rhs);
                row
            })
            .collect();
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| mat[r][col] != Ratio::from(0))
                .expect("Cartan matrix is invertible");
            mat.swap(col, pivot);
            let p = mat[col][col];
            for r in 0..n {
                if r != col && mat[r][col] != Ratio::from(0) {
                    let f = mat[r][col] / p;
                    for c in col..=n {
                        let sub = f * mat[col][c];
                        mat[r][c] -= sub;
                    }
                }
            }
        }
        (0..n).map(|r| mat[r][n] / mat[r][r]).collect()
    }

    #[test]
    fn coroot_expansion_matches_gaussian_elimination() {
        for name in ["A3", "B3", "C3", "F4", "G2"] {
            let rs = rs(name);
            for alpha in rs.positive_roots() {
                let direct = rs.coroot_expansion(alpha).unwrap();
                let solved = coroot_by_elimination(&rs, alpha);
                assert_eq!(direct, solved, "{name}: {alpha:?}");
                for t in &direct {
                    assert!(t.is_integer(), "{name}: non-integral coroot for {alpha:?}");
                }
            }
        }
    }

    #[test]
    fn coroot_of_a_simple_root_is_the_basis_vector() {
        let rs = rs("F4");
        for node in 1..=4 {
            let t = rs.coroot_expansion(rs.simple_root(node)).unwrap();
            for (j, tj) in t.iter().enumerate() {
                let expect = if j + 1 == node { 1 } else { 0 };
                assert_eq!(*tj, Ratio::from(expect));
            }
        }
    }

    #[test]
    fn f4_labels_reverse_between_numberings() {
        let rs = rs("F4");
        // Bourbaki 0122 reads 2210 from the short end.
        let r = rs.parse_root("0122", Numbering::Bourbaki).unwrap();
        assert_eq!(rs.label(&r, Numbering::Paper), "2210");
        let back = rs.parse_root("2210", Numbering::Paper).unwrap();
        assert_eq!(back, r);
        // The highest root is the palindrome-free check.
        assert_eq!(rs.label(rs.highest_root(), Numbering::Bourbaki), "2342");
        assert_eq!(rs.label(rs.highest_root(), Numbering::Paper), "2432");
    }

    #[test]
    fn paper_numbering_is_identity_off_f4() {
        let rs = rs("G2");
        let theta = rs.highest_root();
        assert_eq!(rs.label(theta, Numbering::Paper), "32");
        assert_eq!(rs.label(theta, Numbering::Bourbaki), "32");
    }

    #[test]
    fn comma_labels_appear_beyond_single_digits() {
        // No supported root has a coefficient above 9, so comma labels only
        // arise for vectors that fail membership; check the formatting path
        // directly.
        assert_eq!(label_coeffs(&[1, 12, 0]), "1,12,0");
        assert_eq!(label_coeffs(&[1, 2, 0]), "120");
        assert_eq!(label_coeffs(&[-1, 2]), "-1,2");
    }

    #[test]
    fn membership_and_sums() {
        let rs = rs("A2");
        let a1 = rs.simple_root(1).clone();
        let a2 = rs.simple_root(2).clone();
        assert!(rs.contains(&a1.neg()));
        assert!(!rs.contains(&Root::new(vec![1, -1])));
        assert!(!rs.contains(&Root::new(vec![0, 0])));
        assert_eq!(rs.sum_index(0, 1), rs.position(&a1.plus(&a2)));
        assert_eq!(rs.sum_index(0, 0), None);
    }

    #[test]
    fn canonical_order_is_by_height_then_lex() {
        let rs = rs("B2");
        let labels: Vec<String> = rs
            .positive_roots()
            .iter()
            .map(|r| r.plain_label())
            .collect();
        assert_eq!(labels, ["01", "10", "11", "12"]);
    }
}
