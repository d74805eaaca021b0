//! Building root systems and querying their exact structure: membership,
//! strings, pairings, and coroot expansions.
//!
//! Run with `cargo run --example root_systems`.

use rootgrade::{LieType, Numbering, RootSystem};

fn main() -> rootgrade::Result<()> {
    // Every simple type up to rank 8 builds from its Cartan data by string
    // closure; the positive root count is a classical invariant worth seeing.
    println!("positive root counts:");
    for name in ["A3", "B4", "C4", "D5", "E6", "F4", "G2"] {
        let rs = RootSystem::build(LieType::parse(name)?);
        println!(
            "  {:<3} {:>3} positive roots, highest root {} at height {}",
            name,
            rs.positive_roots().len(),
            rs.label(rs.highest_root(), Numbering::Bourbaki),
            rs.highest_root().height(),
        );
    }

    // Root strings: the maximal α-chain through β, with the endpoint law
    // p − q = β(H_α) checked internally on every call.
    let g2 = RootSystem::build(LieType::parse("G2")?);
    let alpha = g2.simple_root(1).clone();
    let beta = g2.simple_root(2).clone();
    let (p, q) = g2.root_string(&beta, &alpha)?;
    println!("\nG2: the α₁-string through α₂ reaches down {p} and up {q} steps");
    println!(
        "    pairing α₂(H_α₁) = {} = p − q",
        g2.cartan_pairing(&beta, &alpha)?
    );

    // Coroot expansions H_α = Σ tⱼ H_{αⱼ} are integral for every root.
    let f4 = RootSystem::build(LieType::parse("F4")?);
    let theta = f4.highest_root();
    let ts = f4.coroot_expansion(theta)?;
    let pretty: Vec<String> = ts.iter().map(|t| t.to_string()).collect();
    println!(
        "\nF4: the highest root {} has coroot expansion [{}]",
        f4.label(theta, Numbering::Bourbaki),
        pretty.join(", ")
    );

    // Two node numberings are supported for F4: the Bourbaki order (long
    // roots first) and the reversed order used by the classical case tables
    // (short roots first). Labels permute accordingly.
    println!(
        "F4: highest root reads {} in Bourbaki order, {} short-end first",
        f4.label(theta, Numbering::Bourbaki),
        f4.label(theta, Numbering::Paper)
    );
    let r = f4.parse_root("1210", Numbering::Paper)?;
    println!(
        "    the label 1210 (short-end first) is {} in Bourbaki order",
        f4.label(&r, Numbering::Bourbaki)
    );

    // Membership is exact on coefficient vectors.
    let inside = f4.parse_root("1111", Numbering::Bourbaki)?;
    let sum = inside.plus(theta);
    println!(
        "    1111 + {} is {}a root",
        f4.label(theta, Numbering::Bourbaki),
        if f4.contains(&sum) { "" } else { "not " }
    );
    Ok(())
}
