//! Frobenius bracket ranks at highest-weight directions, shifted closures,
//! and the Chern number identity.
//!
//! Run with `cargo run --example frobenius_ranks`.

use rootgrade::{
    frobenius_rank, parabolic_descents, rank_profile, shifted_closure, Distribution,
    HighestWeightVector, LieType, Marking, MultiDegree, Numbering, RootSystem,
};

fn main() -> rootgrade::Result<()> {
    // F4 marked at the two end nodes (short-end-first numbering): the first
    // column is two buckets deep, and the ranks at its two bucket tops are
    // the classical pair 3 < 5.
    let rs = RootSystem::build(LieType::parse("F4")?);
    let marking = Marking::new(rs.lie_type(), Numbering::Paper, &[1, 4])?;
    let gs = rs.grade(&marking)?;
    let d = Distribution::sum_of_minimal_integrables(&gs)?;
    println!(
        "F4 marked at {:?}, distribution over {:?}:",
        marking.display_nodes(),
        d.antichain()
    );

    for lam in [MultiDegree::new(vec![1, 0]), MultiDegree::new(vec![2, 0])] {
        let hwv = HighestWeightVector::of(&gs, lam.clone())?;
        let label = rs.label(hwv.root(), Numbering::Paper);
        println!(
            "  bucket {lam}: highest-weight root {label}, rank {}",
            frobenius_rank(&d, &hwv)?
        );

        // The shifted closure collects everything one bracket with the
        // highest-weight direction can reach; its new roots are the escape
        // targets.
        let grown = shifted_closure(&d, &hwv, 1)?;
        let added: Vec<usize> = gs.roots_with_degrees(grown.difference(d.ideal()));
        println!(
            "    new roots after one shift: {}",
            gs.sorted_labels(&added).join(" ")
        );
    }

    // The full profile bundles the three iterated ranks with the Chern
    // number of the quotient bundle on the tangent curve; the identity
    // between the pairing sum and the string-entry count is asserted inside.
    let p = rank_profile(&d, &MultiDegree::new(vec![2, 0]))?;
    println!(
        "  profile at (2,0): ranks [{}, {}, {}], chern {}",
        p.ranks[0], p.ranks[1], p.ranks[2], p.chern
    );

    // The Chern number can exceed the rank sum: a string through the
    // complement may continue below the tangent space, entering through a
    // Levi or negative root that no bracket from the distribution sees.
    let rs = RootSystem::build(LieType::parse("B3")?);
    let marking = Marking::new(rs.lie_type(), Numbering::Bourbaki, &[1, 3])?;
    let gs = rs.grade(&marking)?;
    let lam = MultiDegree::new(vec![0, 1]);
    let d = Distribution::generate(&gs, std::slice::from_ref(&lam))?;
    let p = rank_profile(&d, &lam)?;
    let hwv = HighestWeightVector::of(&gs, lam)?;
    println!(
        "\nB3 marked at {:?}, single bucket (0,1): ranks [{}, {}, {}] but chern {}",
        marking.display_nodes(),
        p.ranks[0],
        p.ranks[1],
        p.ranks[2],
        p.chern
    );
    println!(
        "  the gap is the two-step descent below the tangent space: {}",
        parabolic_descents(&d, &hwv, 2)?
    );
    Ok(())
}
