//! Exact Hales-Jewett numbers by exhaustive backtracking on tiny boards.

use hj_field::hales_jewett::{hj_number_exact, is_line_free, line_free_coloring};

fn main() -> hj_field::Result<()> {
    for (m, k, cap) in [(1, 3, 2), (2, 2, 4), (2, 3, 4), (3, 2, 2)] {
        let n = hj_number_exact(m, k, cap, 64)?;
        println!("HJ({m},{k}) with N <= {cap}: {n:?}");
    }
    let witness = line_free_coloring(2, 2, 1, 64)?.expect("[1,2] has a line-free 2-coloring");
    println!(
        "line-free 2-coloring of [1,2]: {:?} (verified: {})",
        witness.table(),
        is_line_free(&witness)
    );
    match hj_number_exact(3, 2, 4, 64) {
        Ok(n) => println!("HJ(3,2) with N <= 4: {n:?}"),
        Err(e) => println!("HJ(3,2) with N <= 4: {e}"),
    }
    Ok(())
}
