//! Constructive root chains: ascending by simple roots, and walking between
//! roots of equal degree without leaving their bucket.
//!
//! Run with `cargo run --example root_chains`.

use rootgrade::{ascend_chain, isodegree_chain, LieType, Marking, Numbering, RootSystem};

fn main() -> rootgrade::Result<()> {
    // Any root below another in the coefficient order is reachable by
    // adding one simple root at a time, staying inside the root system.
    let rs = RootSystem::build(LieType::parse("F4")?);
    let alpha = rs.simple_root(4).clone();
    let theta = rs.highest_root().clone();
    let chain = ascend_chain(&rs, &alpha, &theta)?;
    println!(
        "F4: from {} to the highest root {} in {} steps:",
        rs.label(&alpha, Numbering::Bourbaki),
        rs.label(&theta, Numbering::Bourbaki),
        chain.len()
    );
    println!("  {}", chain.labels(&rs, Numbering::Bourbaki).join(" → "));
    assert!(chain.validate(&rs));

    // Within a graded bucket, any two roots connect through the bucket by
    // adding and subtracting unmarked simple roots only.
    let marking = Marking::new(rs.lie_type(), Numbering::Bourbaki, &[4])?;
    let gs = rs.grade(&marking)?;
    let ideal_degree = gs.degree_of(&alpha);
    let members = gs.bucket(&ideal_degree);
    let first = rs.positive_roots()[members[0]].clone();
    let last = rs.positive_roots()[*members.last().expect("nonempty bucket")].clone();
    let walk = isodegree_chain(&gs, &first, &last)?;
    println!(
        "\nF4 marked at 4: the degree-{ideal_degree} bucket has {} roots;",
        members.len()
    );
    println!(
        "  {} reaches {} through {} equal-degree steps:",
        rs.label(&first, Numbering::Bourbaki),
        rs.label(&last, Numbering::Bourbaki),
        walk.len()
    );
    println!("  {}", walk.labels(&rs, Numbering::Bourbaki).join(" → "));
    assert!(walk.validate(&rs));

    // Each step of a chain records the signed simple root it applied, so a
    // chain is checkable independently of how it was found.
    let steps: Vec<String> = walk
        .steps()
        .iter()
        .map(|&(node, sign)| format!("{}α{}", if sign > 0 { '+' } else { '−' }, node))
        .collect();
    println!("  step sequence: {}", steps.join(" "));
    Ok(())
}
