//! Line templates, monochromatic line search and coloring files.

use hj_field::hales_jewett::{enumerate_templates, find_monochromatic_line, line_cells, Coloring};

fn main() -> hj_field::Result<()> {
    let templates: Vec<String> = enumerate_templates(3, 2).map(|t| t.to_string()).collect();
    println!(
        "{} lines in [1,3]^2: {}",
        templates.len(),
        templates.join(" ")
    );

    let coloring = Coloring::random(3, 3, 2, 7, 1 << 20)?;
    match find_monochromatic_line(&coloring) {
        Some((t, color)) => {
            let cells: Vec<String> = line_cells(&t, 3)?.iter().map(|c| c.to_string()).collect();
            println!(
                "seed 7: line {t} of color {color} through {}",
                cells.join(" ")
            );
        }
        None => println!("seed 7: no monochromatic line"),
    }

    // a hand-made 2-coloring of [1,2]^2 with no line, in the dense file form
    let text = "2 2 2\n0110\n";
    let coloring = Coloring::parse(text)?;
    println!(
        "parsed {text:?} -> line: {:?}",
        find_monochromatic_line(&coloring)
    );
    print!("sparse form:\n{}", coloring.to_sparse_text());
    Ok(())
}
