//! The exhaustive consistency sweeps: every check, every simple type and
//! marking up to a rank bound.
//!
//! Run with `cargo run --example full_sweep`. The rank bound here keeps the
//! unoptimized build quick; the `caselab sweep` binary defaults to the same
//! bound and accepts `--max-rank 8` for the full run.

use rootgrade::caselab::{sweep, CheckKind};

fn main() -> rootgrade::Result<()> {
    // Each check recomputes one family of facts by an independent route:
    // Chern numbers against string walks, ideal enumeration against brute
    // force, properness against the depth bound, bucket connectivity by
    // explicit chains, curve-degree integrality, and the string law.
    let outcome = sweep(4, &CheckKind::ALL)?;
    print!("{}", outcome.render_text());
    assert!(outcome.pass());
    Ok(())
}
