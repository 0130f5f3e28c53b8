//! Parse a program, print its diagnostics and its canonical form.

use credal_plp::syntax::{format_program, parse_program};

fn main() {
    let source = include_str!("../fixtures/duplicates.plp");
    let parsed = parse_program(source).expect("fixture parses");
    for w in &parsed.warnings {
        println!("{}", w.render("duplicates.plp"));
    }
    let text = format_program(&parsed.program);
    println!("{text}");

    // The canonical form reads back to the same program.
    assert_eq!(parse_program(&text).unwrap().program, parsed.program);

    match parse_program("1.5::r.") {
        Ok(_) => unreachable!(),
        Err(diags) => println!("rejected: {diags}"),
    }
}
