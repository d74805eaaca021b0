//! Marking Dynkin nodes to grade a root system: degree buckets, column
//! depths, space classification, and curve degrees.
//!
//! Run with `cargo run --example gradings`.

use rootgrade::{LieType, Marking, Numbering, RootSystem};

fn show(name: &str, numbering: Numbering, nodes: &[usize]) -> rootgrade::Result<()> {
    let rs = RootSystem::build(LieType::parse(name)?);
    let marking = Marking::new(rs.lie_type(), numbering, nodes)?;
    let gs = rs.grade(&marking)?;
    println!(
        "{} marked at {:?}: depths {:?}, total depth {}",
        name,
        marking.display_nodes(),
        gs.depths(),
        gs.total_depth()
    );
    for (deg, members) in gs.buckets() {
        let labels = gs.sorted_labels(members);
        println!("  degree {deg}: {}", labels.join(" "));
    }
    let class = gs.classify();
    if class.hermitian_symmetric {
        println!("  depth 1: the grading has a single positive layer");
    }
    if class.contact_candidate {
        println!("  depth 2 with a line on top: contact-type grading");
    }
    Ok(())
}

fn main() -> rootgrade::Result<()> {
    // A Grassmannian: one marked node, depth 1.
    show("A3", Numbering::Bourbaki, &[2])?;
    println!();

    // A contact grading: depth 2 and a one-dimensional top bucket.
    show("G2", Numbering::Bourbaki, &[2])?;
    println!();

    // Two marked nodes of F4, entered in the short-end-first numbering used
    // by the classical tables (internally nodes 4 and 1).
    show("F4", Numbering::Paper, &[1, 4])?;

    // Minimal rational curves: the curve tangent to a unit-degree simple
    // root meets the i-th generating line bundle in δ_ij points.
    let rs = RootSystem::build(LieType::parse("F4")?);
    let marking = Marking::new(rs.lie_type(), Numbering::Paper, &[1, 4])?;
    let gs = rs.grade(&marking)?;
    println!("\ncurve degrees of marked simple roots:");
    for &node in marking.internal_nodes() {
        let alpha = rs.simple_root(node);
        let degs: Vec<String> = (0..marking.picard_number())
            .map(|slot| gs.curve_degree(alpha, slot).map(|d| d.to_string()))
            .collect::<rootgrade::Result<_>>()?;
        println!(
            "  C through {} has degrees ({})",
            rs.label(alpha, Numbering::Paper),
            degs.join(", ")
        );
    }

    // The top of a deep column pairs fractionally scaled coroots; degrees
    // stay integral for every root of the system.
    let theta = rs.highest_root();
    let degs: Vec<String> = (0..2)
        .map(|slot| gs.curve_degree(theta, slot).map(|d| d.to_string()))
        .collect::<rootgrade::Result<_>>()?;
    println!(
        "  C through the highest root {} has degrees ({})",
        rs.label(theta, Numbering::Paper),
        degs.join(", ")
    );
    Ok(())
}
