//! Stable models and the well-founded model of the two-player game.

use credal_plp::ground::ground;
use credal_plp::models::{stable_models, well_founded_model};
use credal_plp::syntax::parse_program;

fn main() {
    let g = ground(&parse_program(include_str!("../fixtures/game.plp")).unwrap().program).unwrap();

    println!("well-founded model:\n{}\n", well_founded_model(&g).render(&g));
    for (i, m) in stable_models(&g).enumerate() {
        println!("stable model {}:\n{}\n", i + 1, m.render(&g));
    }
}
