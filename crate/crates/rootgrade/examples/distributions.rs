//! Equivariant distributions as order ideals of realized degrees:
//! construction, enumeration, bracket steps, and integrable hulls.
//!
//! Run with `cargo run --example distributions`.

use rootgrade::{Distribution, LieType, Marking, MultiDegree, Numbering, RootSystem};

fn main() -> rootgrade::Result<()> {
    let rs = RootSystem::build(LieType::parse("B3")?);
    let marking = Marking::new(rs.lie_type(), Numbering::Bourbaki, &[1, 3])?;
    let gs = rs.grade(&marking)?;

    // Every equivariant distribution is a nonempty downward-closed set of
    // realized positive degrees; the lattice is small enough to list.
    let all = Distribution::enumerate(&gs);
    println!(
        "B3 marked at {:?} has {} realized degrees and {} distributions:",
        marking.display_nodes(),
        gs.buckets().len(),
        all.len()
    );
    for d in &all {
        let antichain: Vec<String> = d.antichain().iter().map(|x| x.to_string()).collect();
        println!(
            "  ⟨{}⟩: {} roots, {}integrable, {}proper",
            antichain.join(" "),
            d.root_count(),
            if d.is_integrable() { "" } else { "not " },
            if d.is_proper() { "" } else { "not " },
        );
    }

    // D¹ spans the unit layers; bracketing it with itself walks up the
    // degree lattice until the whole tangent space is generated.
    let d1 = Distribution::total_degree_at_most(&gs, 1)?;
    println!("\nbracket closure of D¹:");
    let mut cur = d1.clone();
    let mut level = 1;
    loop {
        let labels: Vec<String> = cur.ideal().iter().map(|x| x.to_string()).collect();
        println!("  E{level} covers {}", labels.join(" "));
        let next = cur.bracket_step(&d1);
        if next.ideal() == cur.ideal() {
            break;
        }
        cur = next;
        level += 1;
    }
    assert_eq!(cur.ideal().len(), gs.buckets().len());
    println!("  the closure is the full tangent space");

    // Minimal integrable distributions are full single-node columns; their
    // sum is the largest distribution with integrable building blocks.
    let cols = Distribution::sum_of_minimal_integrables(&gs)?;
    let antichain: Vec<String> = cols.antichain().iter().map(|x| x.to_string()).collect();
    println!(
        "\nsum of the full columns: ⟨{}⟩ with {} roots",
        antichain.join(" "),
        cols.root_count()
    );

    // The integrable hull of a non-integrable distribution, and the two
    // canonical companions of a single bucket: its complement within the
    // tangent space and its Cauchy characteristic.
    let single = Distribution::generate(&gs, &[MultiDegree::new(vec![0, 1])])?;
    let hull = single.generated_integrable();
    println!(
        "the bucket (0,1) generates an integrable hull of {} roots",
        hull.root_count()
    );
    match single.cauchy_characteristic() {
        Some(ch) => println!("its Cauchy characteristic holds {} roots", ch.root_count()),
        None => println!("its Cauchy characteristic is zero"),
    }
    Ok(())
}
