//! Find a total choice without stable models.

use credal_plp::ground::ground;
use credal_plp::infer::{check_consistency, Limits};
use credal_plp::syntax::parse_program;

fn main() {
    for (name, source) in [
        ("coloring", include_str!("../fixtures/coloring.plp")),
        ("cold", include_str!("../fixtures/cold.plp")),
        ("barber", include_str!("../fixtures/barber.plp")),
    ] {
        let g = ground(&parse_program(source).unwrap().program).unwrap();
        let report = check_consistency(&g, &Limits::default()).unwrap();
        match report.witness {
            None => println!("{name}: consistent"),
            Some(t) => println!("{name}: inconsistent, e.g. when {}", t.render(&g)),
        }
    }
}
