//! Constructive root chains: explicit witnesses for the two connectivity
//! facts the grading rests on.
//!
//! *Ascents*: whenever `α ≤ β` componentwise in `Φ⁺`, one can walk from `α`
//! to `β` adding one simple root at a time, staying inside `Φ⁺` — so the
//! chain has exactly `height(β) − height(α)` steps. *Equal-degree walks*:
//! two roots of the same positive multi-degree are connected by steps of
//! `±γ`, `γ` an unmarked simple root, staying inside the degree bucket —
//! witnessing that buckets are single Levi orbits.
//!
//! Both searches are deterministic: among all valid chains the one whose
//! step sequence is lexicographically smallest is returned (steps ordered by
//! internal node index, and `+` before `−` for equal-degree walks). Chains
//! carry enough data to be re-validated from scratch with [`RootChain::validate`].

use std::collections::{HashMap, HashSet, VecDeque};

use crate::grading::GradedSystem;
use crate::rootsys::{Numbering, Root, RootSystem};
use crate::{Error, Result};

/// A signed simple-root step: the 1-based internal node, and `+1`/`−1`.
pub type ChainStep = (usize, i8);

/// A walk through the root system by simple-root steps.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootChain {
    start: Root,
    end: Root,
    steps: Vec<ChainStep>,
}

impl RootChain {
    /// The first root.
    pub fn start(&self) -> &Root {
        &self.start
    }

    /// The last root.
    pub fn end(&self) -> &Root {
        &self.end
    }

    /// The steps, as (internal node, sign) pairs.
    pub fn steps(&self) -> &[ChainStep] {
        &self.steps
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    /// Whether the chain is the empty walk.
    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step labels like `"+α2"` / `"-α3"`, with node indices relabeled to
    /// `numbering`.
    pub fn labels(&self, rs: &RootSystem, numbering: Numbering) -> Vec<String> {
        self.steps
            .iter()
            .map(|&(node, sign)| {
                let display = numbering.to_display(rs.lie_type(), node);
                let s = if sign > 0 { '+' } else { '-' };
                format!("{s}α{display}")
            })
            .collect()
    }

    /// Re-checks from scratch that every prefix sum is a root of `rs` and
    /// the walk ends at `end`.
    pub fn validate(&self, rs: &RootSystem) -> bool {
        if !rs.contains(&self.start) || !rs.contains(&self.end) {
            return false;
        }
        let mut cur = self.start.clone();
        for &(node, sign) in &self.steps {
            if node == 0 || node > rs.rank() {
                return false;
            }
            let step = rs.simple_root(node);
            cur = if sign > 0 {
                cur.plus(step)
            } else {
                cur.minus(step)
            };
            if !rs.contains(&cur) {
                return false;
            }
        }
        cur == self.end
    }
}

/// Builds the ascent from `α` up to `β` (both in `Φ⁺`, `α ≤ β`
/// componentwise): a chain of `+simple` steps through `Φ⁺` of length exactly
/// `height(β) − height(α)`, lexicographically smallest among all such.
pub fn ascend_chain(rs: &RootSystem, alpha: &Root, beta: &Root) -> Result<RootChain> {
    for r in [alpha, beta] {
        if !rs.contains_positive(r) {
            return Err(Error::NotARoot(r.plain_label()));
        }
    }
    if !alpha.leq(beta) {
        return Err(Error::NotComparable {
            lo: alpha.plain_label(),
            hi: beta.plain_label(),
        });
    }
    let mut steps = Vec::new();
    let mut dead: HashSet<Vec<i64>> = HashSet::new();
    let found = ascend_dfs(rs, alpha.clone(), beta, &mut steps, &mut dead);
    assert!(
        found,
        "every componentwise-comparable pair of positive roots is connected by an ascent"
    );
    Ok(RootChain {
        start: alpha.clone(),
        end: beta.clone(),
        steps,
    })
}

fn ascend_dfs(
    rs: &RootSystem,
    cur: Root,
    beta: &Root,
    steps: &mut Vec<ChainStep>,
    dead: &mut HashSet<Vec<i64>>,
) -> bool {
    if &cur == beta {
        return true;
    }
    for node in 1..=rs.rank() {
        let next = cur.plus(rs.simple_root(node));
        if next.leq(beta) && rs.contains_positive(&next) && !dead.contains(next.coeffs()) {
            steps.push((node, 1));
            if ascend_dfs(rs, next, beta, steps, dead) {
                return true;
            }
            steps.pop();
        }
    }
    dead.insert(cur.coeffs().to_vec());
    false
}

/// Builds a shortest walk from `α` to `β` through their common degree
/// bucket, stepping by `±unmarked simple` roots only; ties are broken
/// lexicographically on (internal node, sign) with `+` before `−`.
///
/// Requires both roots positive with the same positive degree. That such a
/// walk exists expresses that buckets are connected; its absence would be an
/// implementation bug and panics.
pub fn isodegree_chain(gs: &GradedSystem, alpha: &Root, beta: &Root) -> Result<RootChain> {
    let rs = gs.root_system();
    for r in [alpha, beta] {
        if !rs.contains_positive(r) {
            return Err(Error::NotARoot(r.plain_label()));
        }
    }
    let da = gs.degree_of(alpha);
    let db = gs.degree_of(beta);
    if da != db {
        return Err(Error::DegreeMismatch {
            a: alpha.plain_label(),
            b: beta.plain_label(),
        });
    }
    if !da.is_positive() {
        return Err(Error::NonpositiveDegree(da.to_string()));
    }

    let unmarked: Vec<usize> = {
        let marked: HashSet<usize> = gs.marking().internal_nodes().iter().copied().collect();
        (1..=rs.rank()).filter(|n| !marked.contains(n)).collect()
    };
    // Signed steps in tie-breaking order.
    let moves: Vec<ChainStep> = unmarked
        .iter()
        .flat_map(|&n| [(n, 1i8), (n, -1i8)])
        .collect();
    let apply = |r: &Root, (node, sign): ChainStep| {
        let s = rs.simple_root(node);
        if sign > 0 {
            r.plus(s)
        } else {
            r.minus(s)
        }
    };

    // Distances to β over the bucket graph; staying at the same positive
    // degree keeps every visited vertex inside Φ⁺.
    let mut dist: HashMap<Vec<i64>, u32> = HashMap::new();
    dist.insert(beta.coeffs().to_vec(), 0);
    let mut queue: VecDeque<Root> = VecDeque::from([beta.clone()]);
    while let Some(cur) = queue.pop_front() {
        let d = dist[cur.coeffs()];
        for &mv in &moves {
            let next = apply(&cur, mv);
            if rs.contains_positive(&next) && !dist.contains_key(next.coeffs()) {
                dist.insert(next.coeffs().to_vec(), d + 1);
                queue.push_back(next);
            }
        }
    }
    assert!(
        dist.contains_key(alpha.coeffs()),
        "degree buckets are connected by unmarked simple steps"
    );

    // Greedy descent along the distance field, taking the first admissible
    // move at each position, gives the lexicographically smallest shortest
    // walk.
    let mut steps = Vec::new();
    let mut cur = alpha.clone();
    while &cur != beta {
        let d = dist[cur.coeffs()];
        let mv = *moves
            .iter()
            .find(|&&mv| {
                let next = apply(&cur, mv);
                rs.contains_positive(&next) && dist.get(next.coeffs()) == Some(&(d - 1))
            })
            .expect("distance decreases toward β on a shortest path");
        steps.push(mv);
        cur = apply(&cur, mv);
    }
    Ok(RootChain {
        start: alpha.clone(),
        end: beta.clone(),
        steps,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::Marking;
    use crate::rootsys::LieType;

    fn system(name: &str) -> RootSystem {
        RootSystem::build(LieType::parse(name).unwrap())
    }

    fn root(rs: &RootSystem, s: &str) -> Root {
        rs.parse_root(s, Numbering::Bourbaki).unwrap()
    }

    #[test]
    fn ascent_is_forced_in_g2() {
        let rs = system("G2");
        let chain = ascend_chain(&rs, &root(&rs, "01"), rs.highest_root()).unwrap();
        assert_eq!(chain.steps(), [(1, 1), (1, 1), (1, 1), (2, 1)]);
        assert_eq!(chain.len(), 4);
        assert!(chain.validate(&rs));
    }

    #[test]
    fn ascent_prefers_the_smallest_node() {
        // From α₂ in A₃ both +α₁ then +α₃ and +α₃ then +α₁ reach the top;
        // the returned chain starts with the smaller node.
        let rs = system("A3");
        let chain = ascend_chain(&rs, &root(&rs, "010"), rs.highest_root()).unwrap();
        assert_eq!(chain.steps(), [(1, 1), (3, 1)]);
    }

    #[test]
    fn ascent_endpoints_and_errors() {
        let rs = system("A2");
        let a1 = root(&rs, "10");
        let chain = ascend_chain(&rs, &a1, &a1).unwrap();
        assert!(chain.is_empty());
        assert!(chain.validate(&rs));
        assert!(matches!(
            ascend_chain(&rs, &a1, &root(&rs, "01")),
            Err(Error::NotComparable { .. })
        ));
        assert!(matches!(
            ascend_chain(&rs, &Root::new(vec![2, 0]), &a1),
            Err(Error::NotARoot(_))
        ));
    }

    #[test]
    fn ascent_length_equals_height_difference_everywhere() {
        let rs = system("F4");
        let roots = rs.positive_roots().to_vec();
        for a in &roots {
            for b in &roots {
                if a.leq(b) {
                    let chain = ascend_chain(&rs, a, b).unwrap();
                    assert_eq!(chain.len() as i64, b.height() - a.height());
                    assert!(chain.validate(&rs));
                }
            }
        }
    }

    #[test]
    fn equal_degree_walks_stay_in_the_bucket() {
        let rs = system("F4");
        let marking = Marking::new(rs.lie_type(), Numbering::Paper, &[1, 2, 4]).unwrap();
        let gs = rs.grade(&marking).unwrap();
        // Bucket of degree (0,1,0): Bourbaki 0010 and 0110, joined by +α₂ —
        // which reads "+α3" from the short end.
        let a = root(&rs, "0010");
        let b = root(&rs, "0110");
        let chain = isodegree_chain(&gs, &a, &b).unwrap();
        assert_eq!(chain.steps(), [(2, 1)]);
        assert_eq!(chain.labels(gs.root_system(), Numbering::Paper), ["+α3"]);
        assert!(chain.validate(gs.root_system()));

        let back = isodegree_chain(&gs, &b, &a).unwrap();
        assert_eq!(back.steps(), [(2, -1)]);

        assert!(matches!(
            isodegree_chain(&gs, &a, &root(&rs, "0001")),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    #[test]
    fn every_bucket_pair_is_connected() {
        let rs = system("B3");
        let marking = Marking::new(rs.lie_type(), Numbering::Bourbaki, &[2]).unwrap();
        let gs = rs.grade(&marking).unwrap();
        for (_, members) in gs.buckets() {
            let all = gs.root_system().positive_roots();
            for &i in members {
                for &j in members {
                    let chain = isodegree_chain(&gs, &all[i], &all[j]).unwrap();
                    assert!(chain.validate(gs.root_system()));
                    // Every intermediate stays in the bucket.
                    let mut cur = all[i].clone();
                    for &(node, sign) in chain.steps() {
                        let s = gs.root_system().simple_root(node);
                        cur = if sign > 0 { cur.plus(s) } else { cur.minus(s) };
                        assert_eq!(gs.degree_of(&cur), gs.degree_of(&all[i]));
                    }
                }
            }
        }
    }
}
