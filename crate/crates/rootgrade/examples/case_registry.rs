//! Replaying the registry of reference cases: every frozen expected value
//! recomputed from scratch and compared.
//!
//! Run with `cargo run --example case_registry`.

use rootgrade::caselab::{catalog, replay};

fn main() -> rootgrade::Result<()> {
    println!("registered cases:");
    for (id, title) in catalog() {
        println!("  {id:<16} {title}");
    }

    // Replay everything. Each case rebuilds its root system, grading, and
    // distributions from nothing but the type and marking, then checks the
    // computed depths, root lists, ranks, and closure differences against
    // the frozen expectations.
    println!();
    let outcome = replay(None)?;
    println!("{}", outcome.render_text());

    // A single case can be replayed by id — useful when bisecting a change
    // that moved one number.
    let single = replay(Some("f4-1-4"))?;
    assert!(single.pass());
    println!("single replay of f4-1-4: {} checks", single.check_count());
    Ok(())
}
